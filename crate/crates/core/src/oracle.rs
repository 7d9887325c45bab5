//! Brute-force ground truth: exhaustive enumeration of all `2^n` vertex subsets.
//!
//! Everything else in the crate is checked against these counts. The cap is a
//! refusal, never a truncation.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::graph::{is_p3_convex_mask, Graph, VertexSet};
use crate::Count;

/// Default largest vertex count the oracle accepts.
pub const DEFAULT_ORACLE_CAP: usize = 25;

/// Hard ceiling: subsets are walked as `u64` masks.
const MAX_CAP: usize = 63;

fn checked_masks(g: &Graph, cap: usize) -> Result<&[u128]> {
    let cap = cap.min(MAX_CAP);
    if g.vertex_count() > cap {
        return Err(Error::CapExceeded {
            what: "oracle input",
            size: g.vertex_count(),
            cap,
        });
    }
    Ok(g.masks().expect("graphs within the oracle cap carry masks"))
}

/// Number of P3-convex sets, by testing every subset.
pub fn noc_bruteforce(g: &Graph) -> Result<Count> {
    noc_bruteforce_with_cap(g, DEFAULT_ORACLE_CAP)
}

pub fn noc_bruteforce_with_cap(g: &Graph, cap: usize) -> Result<Count> {
    let masks = checked_masks(g, cap)?;
    let total = 1u64 << g.vertex_count();
    let count = (0..total)
        .filter(|&s| is_p3_convex_mask(masks, s as u128))
        .count();
    Ok(BigUint::from(count))
}

/// Number of independent sets (the empty set included), by testing every subset.
pub fn noi_bruteforce(g: &Graph) -> Result<Count> {
    noi_bruteforce_with_cap(g, DEFAULT_ORACLE_CAP)
}

pub fn noi_bruteforce_with_cap(g: &Graph, cap: usize) -> Result<Count> {
    let masks = checked_masks(g, cap)?;
    let total = 1u64 << g.vertex_count();
    let count = (0..total)
        .filter(|&s| {
            let s = s as u128;
            masks
                .iter()
                .enumerate()
                .all(|(v, &nb)| s >> v & 1 == 0 || nb & s == 0)
        })
        .count();
    Ok(BigUint::from(count))
}

/// Every P3-convex set, in increasing bitmask order.
pub fn enumerate_convex_sets(g: &Graph) -> Result<ConvexSets<'_>> {
    enumerate_convex_sets_with_cap(g, DEFAULT_ORACLE_CAP)
}

pub fn enumerate_convex_sets_with_cap(g: &Graph, cap: usize) -> Result<ConvexSets<'_>> {
    let masks = checked_masks(g, cap)?;
    Ok(ConvexSets {
        masks,
        next: 0,
        end: 1u64 << g.vertex_count(),
    })
}

/// Stream returned by [`enumerate_convex_sets`].
#[derive(Clone, Debug)]
pub struct ConvexSets<'g> {
    masks: &'g [u128],
    next: u64,
    end: u64,
}

impl<'g> ConvexSets<'g> {
    /// Remaining sets as raw bitmasks instead of [`VertexSet`]s.
    pub fn masks(self) -> impl Iterator<Item = u64> + 'g {
        let masks = self.masks;
        (self.next..self.end).filter(move |&s| is_p3_convex_mask(masks, s as u128))
    }
}

impl Iterator for ConvexSets<'_> {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        while self.next < self.end {
            let s = self.next;
            self.next += 1;
            if is_p3_convex_mask(self.masks, s as u128) {
                return Some(VertexSet::from_mask(self.masks.len(), s as u128));
            }
        }
        None
    }
}
