//! Exact canonical forms by individualization and refinement.
//!
//! The ordered partition is refined by neighbour counts per cell until
//! stable; every non-discrete branch individualizes each vertex of the first
//! smallest non-singleton cell. Each discrete leaf gives a vertex ordering, and
//! the canonical form is the lexicographically least upper-triangle
//! adjacency bitstring over all leaves. No automorphism pruning is done, so
//! cost grows with the automorphism group; inputs here are tiny.

use super::SimpleGraph;

/// Upper-triangle adjacency bits of the canonically relabelled graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: usize,
    bits: Vec<u64>,
}

impl CanonicalForm {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    fn bit(&self, idx: usize) -> bool {
        self.bits[idx / 64] >> (63 - idx % 64) & 1 == 1
    }

    /// The canonical representative of the isomorphism class.
    pub fn to_graph(&self) -> SimpleGraph {
        let mut g = SimpleGraph::empty(self.n);
        let mut idx = 0;
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.bit(idx) {
                    g.add_edge(u, v);
                }
                idx += 1;
            }
        }
        g
    }
}

fn encode(g: &SimpleGraph, order: &[usize]) -> CanonicalForm {
    let n = order.len();
    let total = n * n.saturating_sub(1) / 2;
    let mut bits = vec![0u64; total.div_ceil(64)];
    let mut idx = 0;
    for i in 0..n {
        for j in i + 1..n {
            if g.has_edge(order[i], order[j]) {
                bits[idx / 64] |= 1 << (63 - idx % 64);
            }
            idx += 1;
        }
    }
    CanonicalForm { n, bits }
}

/// Refines an ordered partition until every vertex in a cell sees the same
/// number of neighbours in each cell.
fn refine(g: &SimpleGraph, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let mut cell_of = vec![0; n];
    loop {
        for (c, cell) in cells.iter().enumerate() {
            for &v in cell {
                cell_of[v] = c;
            }
        }
        let k = cells.len();
        let mut next = Vec::with_capacity(n);
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<usize>, usize)> = cell
                .iter()
                .map(|&v| {
                    let mut sig = vec![0; k];
                    for u in g.neighbors(v) {
                        sig[cell_of[u]] += 1;
                    }
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let mut current: Vec<usize> = Vec::new();
            for i in 0..keyed.len() {
                if i > 0 && keyed[i].0 != keyed[i - 1].0 {
                    next.push(std::mem::take(&mut current));
                }
                current.push(keyed[i].1);
            }
            next.push(current);
        }
        if next.len() == k {
            return next;
        }
        cells = next;
    }
}

fn search(g: &SimpleGraph, cells: Vec<Vec<usize>>, best: &mut Option<(CanonicalForm, Vec<usize>)>) {
    let target = cells
        .iter()
        .enumerate()
        .filter(|(_, c)| c.len() > 1)
        .min_by_key(|(i, c)| (c.len(), *i))
        .map(|(i, _)| i);
    let Some(t) = target else {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let form = encode(g, &order);
        if best.as_ref().is_none_or(|(b, _)| form < *b) {
            *best = Some((form, order));
        }
        return;
    };
    for &v in &cells[t] {
        let mut next = Vec::with_capacity(cells.len() + 1);
        next.extend_from_slice(&cells[..t]);
        next.push(vec![v]);
        next.push(cells[t].iter().copied().filter(|&u| u != v).collect());
        next.extend_from_slice(&cells[t + 1..]);
        search(g, refine(g, next), best);
    }
}

/// Canonical form plus an ordering `order` such that
/// `g.permuted(&order)` equals `form.to_graph()`.
pub fn canonical_labeling(g: &SimpleGraph) -> (CanonicalForm, Vec<usize>) {
    let n = g.vertex_count();
    if n == 0 {
        return (encode(g, &[]), Vec::new());
    }
    let mut best = None;
    search(g, refine(g, vec![(0..n).collect()]), &mut best);
    best.expect("at least one leaf")
}

pub fn canonical_form(g: &SimpleGraph) -> CanonicalForm {
    canonical_labeling(g).0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relabelled_cycle_has_same_form() {
        let c4 = SimpleGraph::cycle(4);
        let other = SimpleGraph::from_edges(4, &[(0, 2), (2, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(canonical_form(&c4), canonical_form(&other));
        assert_ne!(canonical_form(&c4), canonical_form(&SimpleGraph::path(4)));
    }

    #[test]
    fn labeling_reproduces_representative() {
        for g in [
            SimpleGraph::star(3),
            SimpleGraph::cycle(6),
            SimpleGraph::path(5).disjoint_union(&SimpleGraph::complete(3)),
        ] {
            let (form, order) = canonical_labeling(&g);
            assert_eq!(g.permuted(&order), form.to_graph());
            assert_eq!(canonical_form(&form.to_graph()), form);
        }
    }

    #[test]
    fn regular_graphs_distinguished() {
        // C6 and two disjoint triangles are both 2-regular on 6 vertices
        let c6 = SimpleGraph::cycle(6);
        let tt = SimpleGraph::complete(3).disjoint_union(&SimpleGraph::complete(3));
        assert_ne!(canonical_form(&c6), canonical_form(&tt));
    }

    #[test]
    fn empty_graph() {
        assert_eq!(canonical_form(&SimpleGraph::empty(0)).vertex_count(), 0);
        assert_eq!(
            canonical_form(&SimpleGraph::empty(1)).to_graph(),
            SimpleGraph::empty(1)
        );
    }
}
