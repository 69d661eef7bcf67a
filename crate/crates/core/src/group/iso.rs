use super::FiniteGroup;

/// Greedy generating set: repeatedly add the highest-order element not yet
/// in the span.
fn generating_set(g: &FiniteGroup) -> Vec<usize> {
    let mut by_order: Vec<usize> = g.elements().collect();
    by_order.sort_by_key(|&x| std::cmp::Reverse(g.element_order(x)));
    let mut gens = Vec::new();
    let mut span = g.generated_by(&gens);
    for x in by_order {
        if span.order() == g.order() {
            break;
        }
        if !span.contains(x) {
            gens.push(x);
            span = g.generated_by(&gens);
        }
    }
    gens
}

/// Extends `gens[i] -> images[i]` to a map on all of `g`, returning it if it is
/// a well-defined bijective homomorphism.
fn extend_to_isomorphism(
    g: &FiniteGroup,
    h: &FiniteGroup,
    gens: &[usize],
    images: &[usize],
) -> Option<Vec<usize>> {
    let n = g.order();
    let mut map = vec![usize::MAX; n];
    map[0] = 0;
    let mut frontier = vec![0];
    while let Some(x) = frontier.pop() {
        for (&s, &t) in gens.iter().zip(images) {
            let y = g.mul(x, s);
            let image = h.mul(map[x], t);
            if map[y] == usize::MAX {
                map[y] = image;
                frontier.push(y);
            } else if map[y] != image {
                return None;
            }
        }
    }
    let mut hit = vec![false; n];
    for &m in &map {
        if m == usize::MAX || hit[m] {
            return None;
        }
        hit[m] = true;
    }
    Some(map)
}

/// Brute-force isomorphism test for small groups.
///
/// Generators of `g` are sent to same-order elements of `h` in every
/// combination; a candidate is accepted once it extends to a bijective
/// homomorphism.
pub fn is_isomorphic_small_group(g: &FiniteGroup, h: &FiniteGroup) -> bool {
    if g.order() != h.order() || g.order_histogram() != h.order_histogram() {
        return false;
    }
    let gens = generating_set(g);
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&s| {
            let k = g.element_order(s);
            h.elements().filter(|&t| h.element_order(t) == k).collect()
        })
        .collect();
    let mut images = Vec::with_capacity(gens.len());
    search(g, h, &gens, &candidates, &mut images)
}

fn search(
    g: &FiniteGroup,
    h: &FiniteGroup,
    gens: &[usize],
    candidates: &[Vec<usize>],
    images: &mut Vec<usize>,
) -> bool {
    let depth = images.len();
    if depth == gens.len() {
        return extend_to_isomorphism(g, h, gens, images).is_some();
    }
    for &t in &candidates[depth] {
        images.push(t);
        if search(g, h, gens, candidates, images) {
            return true;
        }
        images.pop();
    }
    false
}
