use std::ops::ControlFlow;

use super::SimpleGraph;

/// Stable colour classes of the disjoint union `a ⊔ b`, used so that colours
/// mean the same thing on both sides.
fn joint_colours(a: &SimpleGraph, b: &SimpleGraph) -> (Vec<usize>, Vec<usize>) {
    let union = a.disjoint_union(b);
    let n = union.vertex_count();
    let mut colour = vec![0usize; n];
    let mut classes = 1;
    loop {
        let mut keyed: Vec<(usize, Vec<usize>, usize)> = (0..n)
            .map(|v| {
                let mut sig: Vec<usize> = union.neighbors(v).map(|u| colour[u]).collect();
                sig.sort_unstable();
                (colour[v], sig, v)
            })
            .collect();
        keyed.sort();
        let mut next = vec![0; n];
        let mut id = 0;
        for i in 0..n {
            if i > 0 && (keyed[i].0, &keyed[i].1) != (keyed[i - 1].0, &keyed[i - 1].1) {
                id += 1;
            }
            next[keyed[i].2] = id;
        }
        let count = if n == 0 { 0 } else { id + 1 };
        colour = next;
        if count == classes {
            break;
        }
        classes = count;
    }
    let split = a.vertex_count();
    (colour[..split].to_vec(), colour[split..].to_vec())
}

/// Exact isomorphism test: colour refinement on the joint graph, then
/// backtracking over same-colour candidates.
pub fn is_isomorphic(a: &SimpleGraph, b: &SimpleGraph) -> bool {
    let n = a.vertex_count();
    if n != b.vertex_count() || a.edge_count() != b.edge_count() {
        return false;
    }
    if a.degree_sequence() != b.degree_sequence() {
        return false;
    }
    let (ca, cb) = joint_colours(a, b);
    let mut hist_a = ca.clone();
    let mut hist_b = cb.clone();
    hist_a.sort_unstable();
    hist_b.sort_unstable();
    if hist_a != hist_b {
        return false;
    }
    // map rarest colours first
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (ca.iter().filter(|&&c| c == ca[v]).count(), ca[v], v));
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    extend_iso(a, b, &ca, &cb, &order, 0, &mut map, &mut used)
}

#[allow(clippy::too_many_arguments)]
fn extend_iso(
    a: &SimpleGraph,
    b: &SimpleGraph,
    ca: &[usize],
    cb: &[usize],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for w in 0..b.vertex_count() {
        if used[w] || cb[w] != ca[v] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| a.has_edge(u, v) == b.has_edge(map[u], w));
        if !consistent {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if extend_iso(a, b, ca, cb, order, depth + 1, map, used) {
            return true;
        }
        used[w] = false;
        map[v] = usize::MAX;
    }
    false
}

/// Checks that `map` sends `pattern` injectively into `host` preserving both
/// adjacency and non-adjacency.
pub fn is_induced_embedding(host: &SimpleGraph, pattern: &SimpleGraph, map: &[usize]) -> bool {
    let k = pattern.vertex_count();
    if map.len() != k || map.iter().any(|&m| m >= host.vertex_count()) {
        return false;
    }
    for i in 0..k {
        for j in i + 1..k {
            if map[i] == map[j] || pattern.has_edge(i, j) != host.has_edge(map[i], map[j]) {
                return false;
            }
        }
    }
    true
}

/// Visits every induced embedding of `pattern` in `host` (as a map indexed by
/// pattern vertex) until `visit` breaks.
///
/// Pattern vertices are placed by descending degree, ties by index; host
/// candidates are tried in ascending index order.
pub fn induced_embeddings<B>(
    host: &SimpleGraph,
    pattern: &SimpleGraph,
    mut visit: impl FnMut(&[usize]) -> ControlFlow<B>,
) -> Option<B> {
    let k = pattern.vertex_count();
    if k > host.vertex_count() {
        return None;
    }
    let pattern_deg = pattern.degrees();
    let host_deg = host.degrees();
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(pattern_deg[v]), v));

    struct State<'a, F> {
        host: &'a SimpleGraph,
        pattern: &'a SimpleGraph,
        pattern_deg: Vec<usize>,
        host_deg: Vec<usize>,
        order: Vec<usize>,
        map: Vec<usize>,
        used: Vec<bool>,
        visit: F,
    }

    fn go<B, F: FnMut(&[usize]) -> ControlFlow<B>>(
        s: &mut State<'_, F>,
        depth: usize,
    ) -> ControlFlow<B> {
        if depth == s.order.len() {
            return (s.visit)(&s.map);
        }
        let p = s.order[depth];
        for h in 0..s.host.vertex_count() {
            if s.used[h] || s.host_deg[h] < s.pattern_deg[p] {
                continue;
            }
            let ok = s.order[..depth]
                .iter()
                .all(|&q| s.pattern.has_edge(p, q) == s.host.has_edge(h, s.map[q]));
            if !ok {
                continue;
            }
            s.map[p] = h;
            s.used[h] = true;
            let flow = go(s, depth + 1);
            s.used[h] = false;
            if flow.is_break() {
                return flow;
            }
        }
        ControlFlow::Continue(())
    }

    let mut state = State {
        host,
        pattern,
        pattern_deg,
        host_deg,
        order,
        map: vec![usize::MAX; k],
        used: vec![false; host.vertex_count()],
        visit: &mut visit,
    };
    match go(&mut state, 0) {
        ControlFlow::Break(b) => Some(b),
        ControlFlow::Continue(()) => None,
    }
}

/// First induced embedding of `pattern` in `host`, as a map from pattern
/// vertices to host vertices.
pub fn find_induced(host: &SimpleGraph, pattern: &SimpleGraph) -> Option<Vec<usize>> {
    induced_embeddings(host, pattern, |m| ControlFlow::Break(m.to_vec()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn isomorphism_examples() {
        let c4 = SimpleGraph::cycle(4);
        let relabelled = SimpleGraph::from_edges(4, &[(0, 2), (2, 1), (1, 3), (3, 0)]).unwrap();
        assert!(is_isomorphic(&c4, &relabelled));
        assert!(!is_isomorphic(&SimpleGraph::claw(), &SimpleGraph::path(4)));
        assert!(!is_isomorphic(
            &SimpleGraph::complete(3),
            &SimpleGraph::claw()
        ));
    }

    #[test]
    fn isomorphism_on_regular_graphs() {
        let c6 = SimpleGraph::cycle(6);
        let tt = SimpleGraph::complete(3).disjoint_union(&SimpleGraph::complete(3));
        assert!(!is_isomorphic(&c6, &tt));
        // Petersen graph vs. a relabelled copy
        let outer: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
        let spokes: Vec<(usize, usize)> = (0..5).map(|i| (i, i + 5)).collect();
        let inner: Vec<(usize, usize)> = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5)).collect();
        let edges: Vec<_> = outer.iter().chain(&spokes).chain(&inner).copied().collect();
        let p = SimpleGraph::from_edges(10, &edges).unwrap();
        let perm = [3, 7, 1, 9, 0, 5, 2, 8, 6, 4];
        assert!(is_isomorphic(&p, &p.permuted(&perm)));
        assert!(is_isomorphic(
            &SimpleGraph::complete(12),
            &SimpleGraph::complete(12)
        ));
    }

    #[test]
    fn induced_search() {
        assert!(find_induced(&SimpleGraph::cycle(4), &SimpleGraph::claw()).is_none());
        let m = find_induced(&SimpleGraph::star(4), &SimpleGraph::claw()).unwrap();
        assert_eq!(m, vec![0, 1, 2, 3]);
        assert!(find_induced(&SimpleGraph::path(1), &SimpleGraph::empty(1)).is_some());
        // P3 is a subgraph of K3 but not an induced one
        assert!(find_induced(&SimpleGraph::complete(3), &SimpleGraph::path(3)).is_none());
        assert!(find_induced(&SimpleGraph::path(2), &SimpleGraph::path(3)).is_none());
    }

    #[test]
    fn embedding_checker_rejects_bad_maps() {
        let host = SimpleGraph::star(3);
        let claw = SimpleGraph::claw();
        assert!(is_induced_embedding(&host, &claw, &[0, 1, 2, 3]));
        assert!(!is_induced_embedding(&host, &claw, &[1, 0, 2, 3]));
        assert!(!is_induced_embedding(&host, &claw, &[0, 1, 1, 3]));
        assert!(!is_induced_embedding(&host, &claw, &[0, 1, 2]));
    }

    #[test]
    fn counts_all_embeddings() {
        // claws in K_{1,4}: pick 3 leaves in order = 4*3*2
        let mut count = 0;
        induced_embeddings::<()>(&SimpleGraph::star(4), &SimpleGraph::claw(), |_| {
            count += 1;
            ControlFlow::Continue(())
        });
        assert_eq!(count, 24);
    }
}
