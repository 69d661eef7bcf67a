//! Line graphs: construction, recognition by root search and by forbidden
//! induced subgraphs, and derivation of the minimal forbidden set.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use thiserror::Error;

use crate::graph::{
    canonical_form, enumerate_graphs, find_induced, is_induced_embedding, SimpleGraph,
    MAX_ENUMERATION_VERTICES,
};

/// Largest input accepted by the root search. Large enough for the line
/// graph of `K_7` (21 vertices).
pub const ROOT_SEARCH_MAX_VERTICES: usize = 24;

/// Number of minimal forbidden induced subgraphs for line graphs.
pub const FORBIDDEN_COUNT: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LineError {
    #[error("root search accepts at most {max} vertices, got {n}")]
    SizeGuard { n: usize, max: usize },
    #[error("derived {found} minimal forbidden graphs, expected {expected}")]
    ForbiddenCount { found: usize, expected: usize },
    #[error("forbidden set invalid: {0}")]
    InvalidForbiddenSet(String),
}

/// The line graph of `h` together with the root edge behind each vertex.
/// Vertex `i` of the line graph is `edges[i]`, with edges in
/// [`SimpleGraph::edges`] order.
pub fn line_graph_with_edges(h: &SimpleGraph) -> (SimpleGraph, Vec<(usize, usize)>) {
    let edges = h.edges();
    let mut l = SimpleGraph::empty(edges.len());
    for (i, &(a, b)) in edges.iter().enumerate() {
        for (j, &(c, d)) in edges.iter().enumerate().skip(i + 1) {
            if a == c || a == d || b == c || b == d {
                l.add_edge(i, j);
            }
        }
    }
    (l, edges)
}

pub fn line_graph(h: &SimpleGraph) -> SimpleGraph {
    line_graph_with_edges(h).0
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Evidence {
    /// `L(root) ≅ input` via vertex `v ↦ edge_of_vertex[v]`.
    Root {
        root: SimpleGraph,
        edge_of_vertex: Vec<(usize, usize)>,
    },
    /// Pattern `pattern` (1-based id in the forbidden set) occurs induced at
    /// `embedding[i]` for pattern vertex `i`.
    Forbidden {
        pattern: usize,
        embedding: Vec<usize>,
    },
    /// Exhaustive root search found no root for this connected component.
    NoRoot { component: Vec<usize> },
    /// None of the forbidden patterns occurs induced.
    PatternFree,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub is_line_graph: bool,
    pub evidence: Evidence,
}

impl Verdict {
    /// Re-checks the evidence against `g` without trusting the search that
    /// produced it.
    pub fn check(&self, g: &SimpleGraph, forbidden: &ForbiddenSet) -> bool {
        match &self.evidence {
            Evidence::Root {
                root,
                edge_of_vertex,
            } => self.is_line_graph && root_map_is_valid(g, root, edge_of_vertex),
            Evidence::Forbidden { pattern, embedding } => {
                !self.is_line_graph
                    && forbidden
                        .get(*pattern)
                        .is_some_and(|p| is_induced_embedding(g, p, embedding))
            }
            Evidence::NoRoot { component } => {
                // recheck by the forbidden-pattern route
                let sub = g.induced(component);
                !self.is_line_graph
                    && sub.is_connected()
                    && !is_line_graph_by_beineke(&sub, forbidden).is_line_graph
            }
            Evidence::PatternFree => {
                self.is_line_graph
                    && forbidden
                        .patterns()
                        .iter()
                        .all(|p| find_induced(g, p).is_none())
            }
        }
    }
}

/// `edge_of_vertex` is an injective map from the vertices of `g` onto the
/// edges of `root` under which adjacency in `g` is exactly edge incidence.
fn root_map_is_valid(
    g: &SimpleGraph,
    root: &SimpleGraph,
    edge_of_vertex: &[(usize, usize)],
) -> bool {
    let n = g.vertex_count();
    if edge_of_vertex.len() != n || root.edge_count() != n {
        return false;
    }
    let mut seen = std::collections::BTreeSet::new();
    for &(a, b) in edge_of_vertex {
        if a >= root.vertex_count() || b >= root.vertex_count() || a == b || !root.has_edge(a, b) {
            return false;
        }
        if !seen.insert((a.min(b), a.max(b))) {
            return false;
        }
    }
    for u in 0..n {
        for v in u + 1..n {
            let (a, b) = edge_of_vertex[u];
            let (c, d) = edge_of_vertex[v];
            let incident = a == c || a == d || b == c || b == d;
            if incident != g.has_edge(u, v) {
                return false;
            }
        }
    }
    true
}

/// Backtracking construction of roots for a connected graph.
///
/// Vertices of `g` are placed in BFS order, each as an edge of the root
/// being built. A vertex must share exactly one endpoint with its BFS parent;
/// its other endpoint is an existing root vertex or the next fresh one, so
/// the root never exceeds `k + 1` vertices. Every placement is checked
/// against all earlier ones, which makes the search exhaustive over roots
/// with `k` edges up to relabelling.
/// Receives a complete assignment and the root vertex count; `true` stops the search.
type OnRoot<'f> = dyn FnMut(&[Option<(usize, usize)>], usize) -> bool + 'f;

struct RootSearch<'a> {
    g: &'a SimpleGraph,
    order: Vec<usize>,
    parent: Vec<usize>,
    assigned: Vec<Option<(usize, usize)>>,
    root_vertices: usize,
}

impl<'a> RootSearch<'a> {
    fn new(g: &'a SimpleGraph) -> Self {
        let n = g.vertex_count();
        let mut order = Vec::with_capacity(n);
        let mut parent = vec![usize::MAX; n];
        if n > 0 {
            let mut seen = vec![false; n];
            seen[0] = true;
            let mut queue = std::collections::VecDeque::from([0]);
            while let Some(u) = queue.pop_front() {
                order.push(u);
                for v in g.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        parent[v] = u;
                        queue.push_back(v);
                    }
                }
            }
        }
        debug_assert_eq!(order.len(), n, "root search needs a connected graph");
        RootSearch {
            g,
            order,
            parent,
            assigned: vec![None; n],
            root_vertices: 0,
        }
    }

    fn fits(&self, v: usize, edge: (usize, usize), depth: usize) -> bool {
        self.order[..depth].iter().all(|&u| {
            let (a, b) = self.assigned[u].expect("placed");
            if (a, b) == edge {
                return false;
            }
            let incident = a == edge.0 || a == edge.1 || b == edge.0 || b == edge.1;
            incident == self.g.has_edge(u, v)
        })
    }

    /// Calls `found` for every complete assignment until it returns `true`.
    fn run(&mut self, found: &mut OnRoot<'_>) -> bool {
        if self.order.is_empty() {
            return found(&self.assigned, 0);
        }
        self.assigned[self.order[0]] = Some((0, 1));
        self.root_vertices = 2;
        self.place(1, found)
    }

    fn place(&mut self, depth: usize, found: &mut OnRoot<'_>) -> bool {
        if depth == self.order.len() {
            return found(&self.assigned, self.root_vertices);
        }
        let v = self.order[depth];
        let (pa, pb) = self.assigned[self.parent[v]].expect("parent placed first");
        let fresh = self.root_vertices;
        for shared in [pa, pb] {
            for other in 0..=fresh {
                if other == pa || other == pb {
                    continue;
                }
                let edge = (shared.min(other), shared.max(other));
                if !self.fits(v, edge, depth) {
                    continue;
                }
                self.assigned[v] = Some(edge);
                if other == fresh {
                    self.root_vertices += 1;
                }
                let stop = self.place(depth + 1, found);
                if other == fresh {
                    self.root_vertices -= 1;
                }
                self.assigned[v] = None;
                if stop {
                    return true;
                }
            }
        }
        false
    }
}

fn assignment_to_root(
    assigned: &[Option<(usize, usize)>],
    vertices: usize,
) -> (SimpleGraph, Vec<(usize, usize)>) {
    let edge_of_vertex: Vec<(usize, usize)> =
        assigned.iter().map(|e| e.expect("complete")).collect();
    let mut root = SimpleGraph::empty(vertices);
    for &(a, b) in &edge_of_vertex {
        root.add_edge(a, b);
    }
    (root, edge_of_vertex)
}

/// First root found for a connected graph, if any.
fn find_root_connected(g: &SimpleGraph) -> Option<(SimpleGraph, Vec<(usize, usize)>)> {
    let mut result = None;
    RootSearch::new(g).run(&mut |assigned, vertices| {
        result = Some(assignment_to_root(assigned, vertices));
        true
    });
    result
}

/// All roots of a connected graph, one per isomorphism class, sorted by
/// canonical form.
pub fn all_roots(g: &SimpleGraph) -> Result<Vec<SimpleGraph>, LineError> {
    guard(g)?;
    assert!(g.is_connected(), "all_roots expects a connected graph");
    let mut classes = BTreeMap::new();
    RootSearch::new(g).run(&mut |assigned, vertices| {
        let (root, _) = assignment_to_root(assigned, vertices);
        classes.entry(canonical_form(&root)).or_insert(root);
        false
    });
    Ok(classes.into_values().collect())
}

fn guard(g: &SimpleGraph) -> Result<(), LineError> {
    if g.vertex_count() > ROOT_SEARCH_MAX_VERTICES {
        return Err(LineError::SizeGuard {
            n: g.vertex_count(),
            max: ROOT_SEARCH_MAX_VERTICES,
        });
    }
    Ok(())
}

/// Decides line-graph membership by searching for a root, component by
/// component. On success the root is the disjoint union of component roots.
pub fn is_line_graph_by_roots(g: &SimpleGraph) -> Result<Verdict, LineError> {
    guard(g)?;
    let mut edge_of_vertex = vec![(0, 0); g.vertex_count()];
    let mut root_edges = Vec::new();
    let mut offset = 0;
    for component in g.connected_components() {
        let sub = g.induced(&component);
        let Some((root, map)) = find_root_connected(&sub) else {
            return Ok(Verdict {
                is_line_graph: false,
                evidence: Evidence::NoRoot { component },
            });
        };
        for (local, &v) in component.iter().enumerate() {
            let (a, b) = map[local];
            edge_of_vertex[v] = (offset + a, offset + b);
        }
        root_edges.extend(
            root.edges()
                .into_iter()
                .map(|(a, b)| (offset + a, offset + b)),
        );
        offset += root.vertex_count();
    }
    let root = SimpleGraph::from_edges(offset, &root_edges).expect("component roots are simple");
    Ok(Verdict {
        is_line_graph: true,
        evidence: Evidence::Root {
            root,
            edge_of_vertex,
        },
    })
}

/// The minimal forbidden induced subgraphs, with ids `1..=9` and the claw
/// as pattern 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForbiddenSet {
    patterns: Vec<SimpleGraph>,
}

impl ForbiddenSet {
    pub fn patterns(&self) -> &[SimpleGraph] {
        &self.patterns
    }

    /// Pattern by 1-based id.
    pub fn get(&self, id: usize) -> Option<&SimpleGraph> {
        id.checked_sub(1).and_then(|i| self.patterns.get(i))
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    /// Checks count, pairwise non-isomorphism, connectivity, non-line-ness
    /// and minimality of every pattern. Non-line-ness is decided by root
    /// search so the check does not lean on the set itself.
    pub fn validate(&self) -> Result<(), LineError> {
        let bad = |m: String| Err(LineError::InvalidForbiddenSet(m));
        if self.patterns.len() != FORBIDDEN_COUNT {
            return bad(format!("{} patterns", self.patterns.len()));
        }
        if canonical_form(&self.patterns[0]) != canonical_form(&SimpleGraph::claw()) {
            return bad("pattern 1 is not the claw".into());
        }
        let mut forms: Vec<_> = self.patterns.iter().map(canonical_form).collect();
        forms.sort();
        forms.dedup();
        if forms.len() != self.patterns.len() {
            return bad("patterns are not pairwise non-isomorphic".into());
        }
        for (i, p) in self.patterns.iter().enumerate() {
            if !p.is_connected() {
                return bad(format!("pattern {} is disconnected", i + 1));
            }
            if is_line_graph_by_roots(p)?.is_line_graph {
                return bad(format!("pattern {} is a line graph", i + 1));
            }
            for v in 0..p.vertex_count() {
                if !is_line_graph_by_roots(&p.without_vertex(v))?.is_line_graph {
                    return bad(format!("pattern {} is not minimal at vertex {v}", i + 1));
                }
            }
        }
        Ok(())
    }
}

/// Derives the forbidden set from scratch: connected graphs on at most six
/// vertices that have no root while every one-vertex deletion does.
pub fn derive_forbidden_set() -> Result<ForbiddenSet, LineError> {
    let mut found = Vec::new();
    for n in 1..=MAX_ENUMERATION_VERTICES {
        let graphs = enumerate_graphs(n).expect("n within enumeration range");
        for g in graphs {
            if !g.is_connected() || is_line_graph_by_roots(&g)?.is_line_graph {
                continue;
            }
            let mut minimal = true;
            for v in 0..n {
                if !is_line_graph_by_roots(&g.without_vertex(v))?.is_line_graph {
                    minimal = false;
                    break;
                }
            }
            if minimal {
                found.push(g);
            }
        }
    }
    if found.len() != FORBIDDEN_COUNT {
        return Err(LineError::ForbiddenCount {
            found: found.len(),
            expected: FORBIDDEN_COUNT,
        });
    }
    let claw = canonical_form(&SimpleGraph::claw());
    found.sort_by_key(|g| {
        let form = canonical_form(g);
        (form != claw, g.vertex_count(), form)
    });
    Ok(ForbiddenSet { patterns: found })
}

/// Process-wide cached result of [`derive_forbidden_set`].
pub fn forbidden_set() -> Result<&'static ForbiddenSet, LineError> {
    static CACHE: OnceLock<Result<ForbiddenSet, LineError>> = OnceLock::new();
    CACHE
        .get_or_init(derive_forbidden_set)
        .as_ref()
        .map_err(Clone::clone)
}

/// Decides membership by scanning for the forbidden patterns in id order;
/// the first induced occurrence is the evidence.
pub fn is_line_graph_by_beineke(g: &SimpleGraph, forbidden: &ForbiddenSet) -> Verdict {
    for (i, pattern) in forbidden.patterns().iter().enumerate() {
        if let Some(embedding) = find_induced(g, pattern) {
            return Verdict {
                is_line_graph: false,
                evidence: Evidence::Forbidden {
                    pattern: i + 1,
                    embedding,
                },
            };
        }
    }
    Verdict {
        is_line_graph: true,
        evidence: Evidence::PatternFree,
    }
}

/// Beineke decision, upgraded with a root whenever every component is small
/// enough for root search.
pub fn decide_line_graph(g: &SimpleGraph, forbidden: &ForbiddenSet) -> Verdict {
    let verdict = is_line_graph_by_beineke(g, forbidden);
    if verdict.is_line_graph && g.vertex_count() <= ROOT_SEARCH_MAX_VERTICES {
        if let Ok(with_root) = is_line_graph_by_roots(g) {
            if with_root.is_line_graph {
                return with_root;
            }
        }
    }
    verdict
}
