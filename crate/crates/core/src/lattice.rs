//! The cyclic subgroup graph: undirected Hasse diagram of the cyclic
//! subgroups of a group ordered by inclusion.

use crate::arith::{divisors, is_prime};
use crate::graph::SimpleGraph;
use crate::group::{FiniteGroup, Subgroup};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexLabel {
    pub order: usize,
    pub members: Vec<usize>,
    pub name: String,
}

/// A graph whose vertices carry subgroup labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    graph: SimpleGraph,
    labels: Vec<VertexLabel>,
}

impl LabeledGraph {
    pub fn new(graph: SimpleGraph, labels: Vec<VertexLabel>) -> Self {
        assert_eq!(graph.vertex_count(), labels.len(), "one label per vertex");
        LabeledGraph { graph, labels }
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn labels(&self) -> &[VertexLabel] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &VertexLabel {
        &self.labels[v]
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    /// Edge-list serialization:
    ///
    /// ```text
    /// vertices <k>
    /// v <index> <order> <display-name>
    /// e <i> <j>
    /// ```
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("vertices {}\n", self.labels.len());
        for (i, l) in self.labels.iter().enumerate() {
            out.push_str(&format!("v {i} {} {}\n", l.order, l.name));
        }
        for (u, v) in self.graph.edges() {
            out.push_str(&format!("e {u} {v}\n"));
        }
        out
    }

    pub fn to_dot(&self, title: &str) -> String {
        let esc = |s: &str| s.replace('\\', "\\\\").replace('"', "\\\"");
        let mut out = format!("graph \"{}\" {{\n", esc(title));
        for (i, l) in self.labels.iter().enumerate() {
            out.push_str(&format!("  {i} [label=\"{}\"];\n", esc(&l.name)));
        }
        for (u, v) in self.graph.edges() {
            out.push_str(&format!("  {u} -- {v};\n"));
        }
        out.push_str("}\n");
        out
    }
}

/// Builds the cyclic subgroup graph of `group`.
///
/// Vertices are the cyclic subgroups sorted by `(order, members)`; `H1` and
/// `H2` are adjacent when one strictly contains the other and no cyclic
/// subgroup lies strictly between them.
pub fn build_gamma(group: &FiniteGroup) -> LabeledGraph {
    let subs = group.cyclic_subgroups();
    let graph = covering_graph(&subs);
    let labels = subs
        .iter()
        .map(|h| VertexLabel {
            order: h.order(),
            members: h.members().to_vec(),
            name: h.display_name(group),
        })
        .collect();
    LabeledGraph::new(graph, labels)
}

fn covering_graph(subs: &[Subgroup]) -> SimpleGraph {
    let c = subs.len();
    let mut below = vec![false; c * c];
    for i in 0..c {
        for j in 0..c {
            below[i * c + j] = subs[i].is_proper_subset_of(&subs[j]);
        }
    }
    let mut g = SimpleGraph::empty(c);
    for i in 0..c {
        for j in 0..c {
            if below[i * c + j] && !(0..c).any(|k| below[i * c + k] && below[k * c + j]) {
                g.add_edge(i, j);
            }
        }
    }
    g
}

/// Hasse diagram of the divisor lattice of `n`: vertex `i` is the `i`-th
/// smallest divisor, and `d1 -- d2` whenever `d2 / d1` is prime.
pub fn divisor_hasse(n: u64) -> SimpleGraph {
    let ds = divisors(n);
    let mut g = SimpleGraph::empty(ds.len());
    for (i, &a) in ds.iter().enumerate() {
        for (j, &b) in ds.iter().enumerate().skip(i + 1) {
            if b % a == 0 && is_prime(b / a) {
                g.add_edge(i, j);
            }
        }
    }
    g
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaStats {
    pub vertices: usize,
    pub edges: usize,
    /// Degrees in vertex order.
    pub degrees: Vec<usize>,
    pub is_connected: bool,
    pub is_complete: bool,
}

pub fn gamma_stats(g: &LabeledGraph) -> GammaStats {
    let graph = g.graph();
    GammaStats {
        vertices: graph.vertex_count(),
        edges: graph.edge_count(),
        degrees: graph.degrees(),
        is_connected: graph.is_connected(),
        is_complete: graph.is_complete(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::is_isomorphic;
    use crate::group::{direct_product, make_cyclic};

    #[test]
    fn prime_cyclic_is_k2() {
        let g = build_gamma(&make_cyclic(5).unwrap());
        assert_eq!(g.graph(), &SimpleGraph::complete(2));
    }

    #[test]
    fn z6_is_four_cycle() {
        let g = build_gamma(&make_cyclic(6).unwrap());
        let orders: Vec<usize> = g.labels().iter().map(|l| l.order).collect();
        assert_eq!(orders, vec![1, 2, 3, 6]);
        assert_eq!(g.graph().edges(), vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn klein_is_claw_at_trivial() {
        let z2 = make_cyclic(2).unwrap();
        let g = build_gamma(&direct_product(&z2, &z2));
        assert_eq!(g.graph(), &SimpleGraph::star(3));
        assert_eq!(g.label(0).name, "{e}");
    }

    #[test]
    fn divisor_hasse_examples() {
        let h12 = divisor_hasse(12);
        assert_eq!((h12.vertex_count(), h12.edge_count()), (6, 7));
        assert_eq!(divisor_hasse(7), SimpleGraph::complete(2));
        assert_eq!(divisor_hasse(1), SimpleGraph::empty(1));
        assert!(is_isomorphic(
            &build_gamma(&make_cyclic(12).unwrap()).graph().clone(),
            &h12
        ));
    }

    #[test]
    fn stats_examples() {
        let s = gamma_stats(&build_gamma(&make_cyclic(6).unwrap()));
        assert_eq!(
            s,
            GammaStats {
                vertices: 4,
                edges: 4,
                degrees: vec![2, 2, 2, 2],
                is_connected: true,
                is_complete: false
            }
        );
        let t = gamma_stats(&build_gamma(&make_cyclic(1).unwrap()));
        assert_eq!((t.vertices, t.is_complete), (1, true));
        let p = gamma_stats(&build_gamma(&make_cyclic(8).unwrap()));
        assert_eq!(p.degrees, vec![1, 2, 2, 1]);
        let z4 = gamma_stats(&build_gamma(&make_cyclic(4).unwrap()));
        assert!(!z4.is_complete);
    }

    #[test]
    fn serializations() {
        let g = build_gamma(&make_cyclic(6).unwrap());
        assert_eq!(
            g.to_edge_list(),
            "vertices 4\nv 0 1 {e}\nv 1 2 ⟨3⟩ (order 2)\nv 2 3 ⟨2⟩ (order 3)\nv 3 6 ⟨1⟩ (order 6)\n\
             e 0 1\ne 0 2\ne 1 3\ne 2 3\n"
        );
        let dot = g.to_dot("Z6");
        assert!(dot.starts_with("graph \"Z6\" {\n  0 [label=\"{e}\"];"));
        assert!(dot.contains("  2 -- 3;\n"));
    }
}
