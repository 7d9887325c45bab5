//! Picks the cheapest exact counter for a graph.

use num_bigint::BigUint;
use num_traits::One;
use serde::Serialize;

use crate::exact::{decompose, enumeration_size, noc_structured, Variant};
use crate::graph::Graph;
use crate::threshold::{noc_threshold, recognize_threshold};
use crate::tree::noc_tree;
use crate::Count;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Route {
    Tree,
    Threshold,
    Structured(Variant),
}

/// A count together with the route taken for each connected component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutoCount {
    pub noc: Count,
    pub components: Vec<(Vec<usize>, Route)>,
}

pub fn noc_auto(g: &Graph) -> Count {
    noc_auto_detailed(g).noc
}

/// Counts are multiplicative over components, so each one is routed on its own:
/// trees and threshold graphs in polynomial time, anything else through the
/// structured variant with the fewest composite colorings.
pub fn noc_auto_detailed(g: &Graph) -> AutoCount {
    let mut noc = BigUint::one();
    let mut components = Vec::new();
    for component in g.connected_components() {
        let (sub, _) = g.induced_subgraph(&component).expect("component vertices are valid");
        let (count, route) = count_connected(&sub);
        noc *= count;
        components.push((component, route));
    }
    AutoCount { noc, components }
}

fn count_connected(g: &Graph) -> (Count, Route) {
    if g.is_tree() {
        return (noc_tree(g).expect("checked tree"), Route::Tree);
    }
    if recognize_threshold(g).profile().is_some() {
        return (noc_threshold(g).expect("checked threshold graph"), Route::Threshold);
    }
    let variant = Variant::ALL
        .into_iter()
        .min_by_key(|&v| enumeration_size(&decompose(g, v)))
        .expect("three variants");
    (noc_structured(g, variant).noc, Route::Structured(variant))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;

    #[test]
    fn named_examples() {
        assert_eq!(noc_auto(&star(9).unwrap()), BigUint::from(265u32));
        assert_eq!(noc_auto(&paw()), BigUint::from(8u32));
        let union = disjoint_union(&path(4).unwrap(), &complete(2).unwrap());
        assert_eq!(noc_auto(&union), BigUint::from(48u32));
        assert_eq!(noc_auto(&Graph::empty(0)), BigUint::one());
        assert_eq!(noc_auto(&edgeless(70)), BigUint::one() << 70u32);
    }

    #[test]
    fn routes() {
        let detailed = noc_auto_detailed(&disjoint_union(&path(4).unwrap(), &cycle(5).unwrap()));
        assert_eq!(detailed.components.len(), 2);
        assert_eq!(detailed.components[0].1, Route::Tree);
        assert!(matches!(detailed.components[1].1, Route::Structured(_)));
        assert_eq!(noc_auto_detailed(&paw()).components[0].1, Route::Threshold);
    }
}
