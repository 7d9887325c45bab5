//! Linear-time counting on trees with a three-state rooted dynamic program.
//!
//! Each vertex of a rooted tree is in one of three states: black, white with
//! no black parent, or white below a black parent. A white vertex may have at
//! most one black neighbor, so a white root without a black parent allows at
//! most one black child, and a white vertex below a black parent allows none.

use std::collections::VecDeque;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::Count;

/// Convex-set counts of a rooted subtree, split by the state of its root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriCounts {
    /// Root black.
    pub black: Count,
    /// Root white, parent not black.
    pub white: Count,
    /// Root white, parent black.
    pub white_under_black: Count,
}

impl TriCounts {
    fn leaf() -> Self {
        Self {
            black: BigUint::one(),
            white: BigUint::one(),
            white_under_black: BigUint::one(),
        }
    }

    /// Convex sets of the whole tree when this subtree's root is the tree root.
    pub fn total(&self) -> Count {
        &self.black + &self.white
    }
}

/// A tree with an orientation away from `root`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootedTree {
    root: usize,
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    /// BFS order from the root; reversed, it is a valid post-order.
    order: Vec<usize>,
}

impl RootedTree {
    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    pub fn children(&self, v: usize) -> &[usize] {
        &self.children[v]
    }

    pub fn vertex_count(&self) -> usize {
        self.parent.len()
    }

    /// Length of the longest root-to-leaf path, in edges.
    pub fn depth(&self) -> usize {
        let mut depth = vec![0usize; self.vertex_count()];
        for &v in &self.order {
            if let Some(p) = self.parent[v] {
                depth[v] = depth[p] + 1;
            }
        }
        depth.into_iter().max().unwrap_or(0)
    }
}

/// Orients `g` away from `root` by breadth-first search.
pub fn root_tree(g: &Graph, root: usize) -> Result<RootedTree> {
    g.check_vertex(root)?;
    if !g.is_tree() {
        return Err(Error::NotATree);
    }
    let n = g.vertex_count();
    let mut parent = vec![None; n];
    let mut children = vec![Vec::new(); n];
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([root]);
    seen[root] = true;
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for &u in g.neighbors(v) {
            if !seen[u] {
                seen[u] = true;
                parent[u] = Some(v);
                children[v].push(u);
                queue.push_back(u);
            }
        }
    }
    Ok(RootedTree {
        root,
        parent,
        children,
        order,
    })
}

/// Counts for every subtree, indexed by its root vertex. One bottom-up pass.
pub fn subtree_counts(t: &RootedTree) -> Vec<TriCounts> {
    let mut counts: Vec<Option<TriCounts>> = vec![None; t.vertex_count()];
    for &v in t.order.iter().rev() {
        let kids = &t.children[v];
        let value = if kids.is_empty() {
            TriCounts::leaf()
        } else {
            let child = |c: usize| counts[c].as_ref().expect("children are finished first");

            let black = kids
                .iter()
                .map(|&c| &child(c).white_under_black + &child(c).black)
                .product();
            let white_under_black = kids.iter().map(|&c| child(c).white.clone()).product();

            // white = prod(w_i) + sum_i b_i * prod_{j != i} w_j, via prefix/suffix products
            let ws: Vec<&BigUint> = kids.iter().map(|&c| &child(c).white).collect();
            let mut prefix = Vec::with_capacity(ws.len() + 1);
            prefix.push(BigUint::one());
            for w in &ws {
                let next = prefix.last().unwrap() * *w;
                prefix.push(next);
            }
            let mut white = prefix[ws.len()].clone();
            let mut suffix = BigUint::one();
            for (i, &c) in kids.iter().enumerate().rev() {
                white += &prefix[i] * &suffix * &child(c).black;
                suffix *= ws[i];
            }

            TriCounts {
                black,
                white,
                white_under_black,
            }
        };
        counts[v] = Some(value);
    }
    counts.into_iter().map(Option::unwrap).collect()
}

/// Counts of the whole rooted tree.
pub fn noc_rooted(t: &RootedTree) -> TriCounts {
    subtree_counts(t).swap_remove(t.root)
}

/// Number of P3-convex sets of a tree, rooted at vertex 0.
pub fn noc_tree(g: &Graph) -> Result<Count> {
    if g.vertex_count() == 0 {
        return Err(Error::NotATree);
    }
    Ok(noc_rooted(&root_tree(g, 0)?).total())
}

/// `2^(n-1) + n`, the count for the star `K_{1,n-1}`.
pub fn noc_star_closed(n: usize) -> Result<Count> {
    if n < 1 {
        return Err(Error::InvalidParameter("star needs n >= 1".into()));
    }
    Ok((BigUint::one() << (n - 1)) + BigUint::from(n))
}

/// Path counts from `Z_n = 2 Z_{n-1} - Z_{n-2} + Z_{n-3}` with `Z_1, Z_2, Z_3 = 2, 4, 7`.
pub fn noc_path_recurrence(n: usize) -> Result<Count> {
    if n < 1 {
        return Err(Error::InvalidParameter("path needs n >= 1".into()));
    }
    let mut z = [BigUint::from(2u32), BigUint::from(4u32), BigUint::from(7u32)];
    if n <= 3 {
        return Ok(z[n - 1].clone());
    }
    for _ in 4..=n {
        // Z_{n-1} >= Z_{n-2}, so the subtraction stays nonnegative
        let next = (&z[2] << 1u32) - &z[1] + &z[0];
        z = [z[1].clone(), z[2].clone(), next];
    }
    Ok(z[2].clone())
}
