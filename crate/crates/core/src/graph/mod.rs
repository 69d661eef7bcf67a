//! Small undirected simple graphs: representation, isomorphism, canonical
//! forms, induced-subgraph search and exhaustive enumeration.

mod canon;
mod enumerate;
mod iso;

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

pub use canon::{canonical_form, canonical_labeling, CanonicalForm};
pub use enumerate::{enumerate_graphs, extend_classes, MAX_ENUMERATION_VERTICES};
pub use iso::{find_induced, induced_embeddings, is_induced_embedding, is_isomorphic};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("edge ({u}, {v}) is invalid for a graph on {n} vertices")]
    BadEdge { u: usize, v: usize, n: usize },
    #[error("unknown graph name `{0}`")]
    UnknownName(String),
    #[error("enumeration supports 1..={max} vertices, got {n}")]
    EnumerationRange { n: usize, max: usize },
}

/// Undirected simple graph on vertices `0..n`, stored as a dense symmetric
/// adjacency matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<bool>,
}

impl SimpleGraph {
    pub fn empty(n: usize) -> Self {
        SimpleGraph {
            n,
            adj: vec![false; n * n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n || u == v {
                return Err(GraphError::BadEdge { u, v, n });
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// Panics on a self-loop or an out-of-range vertex.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "self-loop at {u}");
        assert!(u < self.n && v < self.n, "edge ({u}, {v}) out of range");
        self.adj[u * self.n + v] = true;
        self.adj[v * self.n + u] = true;
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u * self.n + v] = false;
        self.adj[v * self.n + u] = false;
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&u| self.adj[v * self.n + u])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Degree sequence sorted descending.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Edges as `(u, v)` with `u < v`, lexicographically ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().filter(|&&b| b).count() / 2
    }

    /// Subgraph induced on `vertices`; vertex `i` of the result is `vertices[i]`.
    pub fn induced(&self, vertices: &[usize]) -> SimpleGraph {
        let mut g = SimpleGraph::empty(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    pub fn without_vertex(&self, v: usize) -> SimpleGraph {
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced(&keep)
    }

    /// Relabels so that old vertex `perm[i]` becomes new vertex `i`.
    pub fn permuted(&self, perm: &[usize]) -> SimpleGraph {
        self.induced(perm)
    }

    pub fn disjoint_union(&self, other: &SimpleGraph) -> SimpleGraph {
        let mut g = SimpleGraph::empty(self.n + other.n);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(self.n + u, self.n + v);
        }
        g
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![start];
            comp[start] = id;
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for v in self.neighbors(u) {
                    if comp[v] == usize::MAX {
                        comp[v] = id;
                        members.push(v);
                        queue.push_back(v);
                    }
                }
            }
            members.sort_unstable();
            out.push(members);
        }
        out
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Self::empty(n);
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        g
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut g = Self::path(n);
        g.add_edge(n - 1, 0);
        g
    }

    /// `K_{1,k}` with centre `0`.
    pub fn star(k: usize) -> Self {
        let mut g = Self::empty(k + 1);
        for v in 1..=k {
            g.add_edge(0, v);
        }
        g
    }

    pub fn claw() -> Self {
        Self::star(3)
    }

    /// Parses names like `K4`, `P5`, `C6` and `K1,3`.
    pub fn make_named(name: &str) -> Result<Self, GraphError> {
        let unknown = || GraphError::UnknownName(name.to_string());
        let (kind, rest) = name.split_at(name.chars().next().map_or(0, char::len_utf8));
        let rest = rest.trim_start_matches('_');
        if kind == "K" {
            if let Some((a, b)) = rest.split_once(',') {
                if a.trim() != "1" {
                    return Err(unknown());
                }
                let k = b.trim().parse().map_err(|_| unknown())?;
                return Ok(Self::star(k));
            }
        }
        let n: usize = rest.parse().map_err(|_| unknown())?;
        match kind {
            "K" => Ok(Self::complete(n)),
            "P" => Ok(Self::path(n)),
            "C" if n >= 3 => Ok(Self::cycle(n)),
            _ => Err(unknown()),
        }
    }

    /// `n <count>` followed by one `e <i> <j>` line per edge.
    pub fn to_text(&self) -> String {
        let mut out = format!("n {}\n", self.n);
        for (u, v) in self.edges() {
            out.push_str(&format!("e {u} {v}\n"));
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self, GraphError> {
        let mut graph: Option<SimpleGraph> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let l = raw.trim();
            if l.is_empty() || l.starts_with('#') {
                continue;
            }
            let parts: Vec<&str> = l.split_whitespace().collect();
            let num = |s: &str| {
                s.parse::<usize>().map_err(|e| GraphError::Parse {
                    line,
                    message: format!("bad integer `{s}`: {e}"),
                })
            };
            match (parts.as_slice(), graph.as_mut()) {
                (["n", k], None) => graph = Some(SimpleGraph::empty(num(k)?)),
                (["e", a, b], Some(g)) => {
                    let (u, v) = (num(a)?, num(b)?);
                    if u >= g.n || v >= g.n || u == v {
                        return Err(GraphError::BadEdge { u, v, n: g.n });
                    }
                    g.add_edge(u, v);
                }
                _ => {
                    return Err(GraphError::Parse {
                        line,
                        message: format!("unexpected `{l}`"),
                    })
                }
            }
        }
        graph.ok_or(GraphError::Parse {
            line: 1,
            message: "missing `n <count>` header".into(),
        })
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimpleGraph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_graphs() {
        let claw = SimpleGraph::make_named("K1,3").unwrap();
        assert_eq!(claw.degrees(), vec![3, 1, 1, 1]);
        assert_eq!(SimpleGraph::make_named("K_4").unwrap().edge_count(), 6);
        assert_eq!(SimpleGraph::make_named("C5").unwrap().edge_count(), 5);
        assert_eq!(
            SimpleGraph::make_named("P4").unwrap().degree_sequence(),
            vec![2, 2, 1, 1]
        );
        assert!(SimpleGraph::make_named("C2").is_err());
        assert!(SimpleGraph::make_named("X3").is_err());
        assert!(SimpleGraph::make_named("K2,3").is_err());
    }

    #[test]
    fn components() {
        assert_eq!(SimpleGraph::cycle(4).connected_components().len(), 1);
        let g = SimpleGraph::path(4).disjoint_union(&SimpleGraph::empty(1));
        assert_eq!(g.connected_components(), vec![vec![0, 1, 2, 3], vec![4]]);
        assert!(!g.is_connected());
        assert!(SimpleGraph::empty(0).is_connected());
    }

    #[test]
    fn text_round_trip() {
        let g = SimpleGraph::cycle(5);
        let text = g.to_text();
        assert_eq!(text, "n 5\ne 0 1\ne 0 4\ne 1 2\ne 2 3\ne 3 4\n");
        assert_eq!(SimpleGraph::from_text(&text).unwrap(), g);
    }

    #[test]
    fn text_errors() {
        assert!(matches!(
            SimpleGraph::from_text("e 0 1\n"),
            Err(GraphError::Parse { line: 1, .. })
        ));
        assert!(matches!(
            SimpleGraph::from_text("n 2\ne 0 2\n"),
            Err(GraphError::BadEdge { .. })
        ));
        assert!(matches!(
            SimpleGraph::from_text("n 2\ne 1 1\n"),
            Err(GraphError::BadEdge { .. })
        ));
        assert!(SimpleGraph::from_text("").is_err());
    }

    #[test]
    fn bad_edges_rejected() {
        assert!(SimpleGraph::from_edges(3, &[(0, 3)]).is_err());
        assert!(SimpleGraph::from_edges(3, &[(1, 1)]).is_err());
    }

    #[test]
    fn induced_subgraph() {
        let c5 = SimpleGraph::cycle(5);
        let p = c5.induced(&[0, 1, 2, 3]);
        assert_eq!(p.edges(), vec![(0, 1), (1, 2), (2, 3)]);
        assert_eq!(c5.without_vertex(0).edge_count(), 3);
    }
}
