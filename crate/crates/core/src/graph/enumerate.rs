use std::collections::BTreeSet;

use super::{canonical_form, GraphError, SimpleGraph};

/// Cost guard for [`enumerate_graphs`].
pub const MAX_ENUMERATION_VERTICES: usize = 6;

/// Every isomorphism class on `k + 1` vertices, given every class on `k`.
///
/// Deleting the last vertex of any graph leaves a graph on `k` vertices, so
/// extending each class by a new vertex with every possible neighbourhood
/// reaches all classes. Results are canonical representatives sorted by
/// canonical form. All inputs must share one vertex count.
pub fn extend_classes(classes: &[SimpleGraph]) -> Vec<SimpleGraph> {
    let mut seen = BTreeSet::new();
    for g in classes {
        let k = g.vertex_count();
        let base_edges = g.edges();
        for mask in 0u64..(1 << k) {
            let mut h = SimpleGraph::empty(k + 1);
            for &(u, v) in &base_edges {
                h.add_edge(u, v);
            }
            for u in (0..k).filter(|u| mask >> u & 1 == 1) {
                h.add_edge(u, k);
            }
            seen.insert(canonical_form(&h));
        }
    }
    seen.into_iter().map(|f| f.to_graph()).collect()
}

/// One representative per isomorphism class of graphs on `n` vertices,
/// sorted by canonical form. `n` must lie in `1..=6`.
pub fn enumerate_graphs(n: usize) -> Result<Vec<SimpleGraph>, GraphError> {
    if !(1..=MAX_ENUMERATION_VERTICES).contains(&n) {
        return Err(GraphError::EnumerationRange {
            n,
            max: MAX_ENUMERATION_VERTICES,
        });
    }
    let mut classes = vec![SimpleGraph::empty(1)];
    for _ in 1..n {
        classes = extend_classes(&classes);
    }
    Ok(classes)
}
