//! The split-graph construction used to relate counting convex sets to
//! counting independent sets, with an exact checker for its counting identity
//! and a search for disjoint induced `K_{1,4}`s.
//!
//! For a graph `G` with at least one edge, `H` has one clique vertex `v_e`
//! per edge, a universal clique vertex `u*`, and an independent copy of each
//! vertex of `G`; `v_e` is joined to the copies of the endpoints of `e`.

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{noc_kl, noi_branching, KLPartition};
use crate::graph::Graph;
use crate::oracle::{noc_bruteforce_with_cap, noi_bruteforce, DEFAULT_ORACLE_CAP};
use crate::Count;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionOutput {
    pub h: Graph,
    /// `(edge, vertex of h)` in lexicographic edge order.
    pub edge_vertices: Vec<((usize, usize), usize)>,
    /// The universal clique vertex `u*`.
    pub special: usize,
    /// `vertex_images[v]` is the copy of `v` in the independent part.
    pub vertex_images: Vec<usize>,
    /// Number of isolated vertices of `G`.
    pub v0_size: usize,
}

impl ReductionOutput {
    pub fn clique_part(&self) -> Vec<usize> {
        (0..=self.special).collect()
    }

    pub fn independent_part(&self) -> Vec<usize> {
        self.vertex_images.clone()
    }

    /// The `(1, 1)` partition of `h` into its clique and independent parts.
    pub fn partition(&self) -> KLPartition {
        KLPartition {
            independent_parts: vec![self.independent_part()],
            clique_parts: vec![self.clique_part()],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Reduction {
    /// `G` has no edges, so `H = G` and every vertex set is both convex and independent.
    Identity,
    Split(ReductionOutput),
}

pub fn build_split_reduction(g: &Graph) -> Reduction {
    let m = g.edge_count();
    if m == 0 {
        return Reduction::Identity;
    }
    let n = g.vertex_count();
    let special = m;
    let image = |v: usize| m + 1 + v;
    let mut edges = Vec::new();
    let mut edge_vertices = Vec::with_capacity(m);
    for (i, (x, y)) in g.edges().enumerate() {
        edge_vertices.push(((x, y), i));
        edges.extend((i + 1..=special).map(|j| (i, j)));
        edges.push((i, image(x)));
        edges.push((i, image(y)));
    }
    edges.extend((0..n).map(|v| (special, image(v))));
    let h = Graph::from_edges(m + 1 + n, edges).expect("construction stays in range");
    debug_assert!(h.is_split());
    Reduction::Split(ReductionOutput {
        h,
        edge_vertices,
        special,
        vertex_images: (0..n).map(image).collect(),
        v0_size: g.vertices().filter(|&v| g.degree(v) == 0).count(),
    })
}

/// How the convex sets of `h` are counted when checking the identity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum HCounting {
    /// Exhaustive enumeration, refused above `cap` vertices.
    Oracle { cap: usize },
    /// The clique/independent split of `h`, which needs no cap.
    SplitPartition,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionReport {
    pub n: usize,
    pub m: usize,
    pub v0_size: usize,
    pub h_vertices: usize,
    pub identity_reduction: bool,
    #[serde(with = "crate::count_serde")]
    pub noc_h: Count,
    #[serde(with = "crate::count_serde")]
    pub noi_g: Count,
    /// `noi(G) + offset`, the value the identity predicts for `noc(H)`.
    #[serde(with = "crate::count_serde")]
    pub predicted_noc_h: Count,
    pub identity_holds: bool,
    pub method: HCounting,
}

/// `2^{|V0|} + |V| + 1 + |E||V| + |E|`, or zero for the identity reduction.
pub fn identity_offset(g: &Graph) -> Count {
    let (n, m) = (g.vertex_count(), g.edge_count());
    if m == 0 {
        return BigUint::ZERO;
    }
    let v0 = g.vertices().filter(|&v| g.degree(v) == 0).count();
    (BigUint::one() << v0) + BigUint::from(n + 1 + m * n + m)
}

/// Oracle on both sides; `h` must fit the default oracle cap.
pub fn verify_reduction_identity(g: &Graph) -> Result<ReductionReport> {
    verify_reduction_identity_with(g, HCounting::Oracle { cap: DEFAULT_ORACLE_CAP })
}

/// The identity is computed and compared, never assumed.
pub fn verify_reduction_identity_with(g: &Graph, method: HCounting) -> Result<ReductionReport> {
    let reduction = build_split_reduction(g);
    let (h_vertices, noc_h) = match (&reduction, method) {
        (Reduction::Identity, HCounting::Oracle { cap }) => (g.vertex_count(), noc_bruteforce_with_cap(g, cap)?),
        (Reduction::Identity, HCounting::SplitPartition) => (g.vertex_count(), BigUint::one() << g.vertex_count()),
        (Reduction::Split(out), HCounting::Oracle { cap }) => (out.h.vertex_count(), noc_bruteforce_with_cap(&out.h, cap)?),
        (Reduction::Split(out), HCounting::SplitPartition) => (out.h.vertex_count(), noc_kl(&out.h, &out.partition())?.noc),
    };
    let noi_g = match method {
        HCounting::Oracle { .. } => noi_bruteforce(g)?,
        HCounting::SplitPartition => noi_branching(g),
    };
    let predicted_noc_h = &noi_g + identity_offset(g);
    Ok(ReductionReport {
        n: g.vertex_count(),
        m: g.edge_count(),
        v0_size: g.vertices().filter(|&v| g.degree(v) == 0).count(),
        h_vertices,
        identity_reduction: reduction == Reduction::Identity,
        identity_holds: noc_h == predicted_noc_h,
        noc_h,
        noi_g,
        predicted_noc_h,
        method,
    })
}

/// Inverts the identity: `noc_h - offset`.
pub fn recover_noi_from_noc(noc_h: &Count, g: &Graph) -> Result<Count> {
    let offset = identity_offset(g);
    if noc_h < &offset {
        return Err(Error::Inconsistent(format!(
            "noc(H) = {noc_h} is below the offset {offset} for this graph"
        )));
    }
    Ok(noc_h - offset)
}

/// Whether `g` has two vertex-disjoint induced copies of `K_{1,4}`.
pub fn has_two_disjoint_induced_k14(g: &Graph) -> bool {
    let mut centers: Vec<usize> = g.vertices().filter(|&v| g.degree(v) >= 4).collect();
    centers.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut blocked = vec![false; g.vertex_count()];
    for (i, &c1) in centers.iter().enumerate() {
        let leaves: Vec<usize> = g.neighbors(c1).to_vec();
        let found = for_each_independent_subset(g, &leaves, 4, &mut |star_leaves| {
            blocked[c1] = true;
            star_leaves.iter().for_each(|&v| blocked[v] = true);
            // pairs with an earlier first center were already tried
            let hit = centers[i + 1..].iter().any(|&c2| {
                if blocked[c2] {
                    return false;
                }
                let free: Vec<usize> = g.neighbors(c2).iter().copied().filter(|&u| !blocked[u]).collect();
                free.len() >= 4 && for_each_independent_subset(g, &free, 4, &mut |_| true)
            });
            blocked[c1] = false;
            star_leaves.iter().for_each(|&v| blocked[v] = false);
            hit
        });
        if found {
            return true;
        }
    }
    false
}

/// Calls `visit` on each independent `k`-subset of `candidates` until it returns true.
fn for_each_independent_subset(
    g: &Graph,
    candidates: &[usize],
    k: usize,
    visit: &mut dyn FnMut(&[usize]) -> bool,
) -> bool {
    fn go(g: &Graph, cands: &[usize], k: usize, chosen: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if chosen.len() == k {
            return visit(chosen);
        }
        for (i, &v) in cands.iter().enumerate() {
            if cands.len() - i < k - chosen.len() {
                break;
            }
            if chosen.iter().all(|&u| !g.has_edge(u, v)) {
                chosen.push(v);
                if go(g, &cands[i + 1..], k, chosen, visit) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    go(g, candidates, k, &mut Vec::with_capacity(k), visit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;

    fn split(g: &Graph) -> ReductionOutput {
        match build_split_reduction(g) {
            Reduction::Split(out) => out,
            Reduction::Identity => panic!("graph has edges"),
        }
    }

    #[test]
    fn k2_builds_the_diamond() {
        let out = split(&complete(2).unwrap());
        assert_eq!(out.h.vertex_count(), 4);
        assert_eq!(out.h.edge_count(), 5);
        assert!(!out.h.has_edge(2, 3));
        assert_eq!(out.special, 1);
        assert_eq!(out.vertex_images, vec![2, 3]);
        assert_eq!(out.edge_vertices, vec![((0, 1), 0)]);
    }

    #[test]
    fn layout_and_split_structure() {
        let out = split(&path(3).unwrap());
        assert_eq!(out.h.vertex_count(), 6);
        assert!(out.h.is_clique(&out.clique_part()));
        assert!(out.h.is_independent(&out.independent_part()));
        assert_eq!(out.h.degree(out.special), 5);
        // v_{01} sees the other clique vertices and the copies of 0 and 1
        assert_eq!(out.h.neighbors(0), &[1, 2, 3, 4]);
        assert_eq!(build_split_reduction(&edgeless(3)), Reduction::Identity);
    }

    #[test]
    fn identity_reduction_cases() {
        let report = verify_reduction_identity(&edgeless(2)).unwrap();
        assert!(report.identity_reduction && report.identity_holds);
        assert_eq!(report.noc_h, BigUint::from(4u32));
        let e3 = verify_reduction_identity_with(&edgeless(3), HCounting::SplitPartition).unwrap();
        assert_eq!((e3.noc_h.clone(), e3.noi_g.clone()), (BigUint::from(8u32), BigUint::from(8u32)));
        assert_eq!(recover_noi_from_noc(&BigUint::from(4u32), &edgeless(2)).unwrap(), BigUint::from(4u32));
    }

    #[test]
    fn observed_counts_for_small_graphs() {
        // oracle values; the predicted sides are 10 and 18
        let k2 = verify_reduction_identity(&complete(2).unwrap()).unwrap();
        assert_eq!(k2.noc_h, BigUint::from(6u32));
        assert_eq!(k2.predicted_noc_h, BigUint::from(10u32));
        assert!(!k2.identity_holds);
        let p3 = verify_reduction_identity(&path(3).unwrap()).unwrap();
        assert_eq!(p3.noc_h, BigUint::from(8u32));
        assert_eq!(p3.predicted_noc_h, BigUint::from(18u32));
        assert!(!p3.identity_holds);
    }

    #[test]
    fn split_route_agrees_with_oracle() {
        for seed in 0..60u64 {
            let g = random_gnp(3 + seed as usize % 4, 0.5, seed).unwrap();
            if g.edge_count() + g.vertex_count() + 1 > 20 {
                continue;
            }
            let exact = verify_reduction_identity(&g).unwrap();
            let fast = verify_reduction_identity_with(&g, HCounting::SplitPartition).unwrap();
            assert_eq!(exact.noc_h, fast.noc_h);
            assert_eq!(exact.noi_g, fast.noi_g);
        }
    }

    #[test]
    fn recover_inverts_the_offset() {
        assert_eq!(recover_noi_from_noc(&BigUint::from(10u32), &complete(2).unwrap()).unwrap(), BigUint::from(3u32));
        assert_eq!(recover_noi_from_noc(&BigUint::from(18u32), &path(3).unwrap()).unwrap(), BigUint::from(5u32));
        let err = recover_noi_from_noc(&BigUint::from(6u32), &complete(2).unwrap()).unwrap_err();
        assert!(matches!(err, Error::Inconsistent(_)));
    }

    #[test]
    fn disjoint_claws_search() {
        assert!(has_two_disjoint_induced_k14(&disjoint_union(&star(5).unwrap(), &star(5).unwrap())));
        assert!(!has_two_disjoint_induced_k14(&star(9).unwrap()));
        assert!(!has_two_disjoint_induced_k14(&complete(10).unwrap()));
        // two centers sharing leaves but with enough private ones
        let g = Graph::from_edges(10, (1..6).map(|v| (0, v)).chain((5..10).map(|v| (9, v)).filter(|&(c, v)| c != v))).unwrap();
        assert!(has_two_disjoint_induced_k14(&g));
        for seed in 0..20 {
            let g = random_gnp(5, 0.5, seed).unwrap();
            if g.edge_count() > 0 {
                assert!(!has_two_disjoint_induced_k14(&split(&g).h));
            }
        }
    }
}
