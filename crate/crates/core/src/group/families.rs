use super::{FiniteGroup, GroupError};

/// Largest order the catalog constructors will build. Validation is cubic in
/// the order, and nothing in the classification needs more.
pub const MAX_CONSTRUCTED_ORDER: usize = 256;

fn check_order(order: usize) -> Result<(), GroupError> {
    if order > MAX_CONSTRUCTED_ORDER {
        return Err(GroupError::TooLarge {
            order,
            limit: MAX_CONSTRUCTED_ORDER,
        });
    }
    Ok(())
}

/// The cyclic group `Z_n` under addition mod `n`.
pub fn make_cyclic(n: usize) -> Result<FiniteGroup, GroupError> {
    if n == 0 {
        return Err(GroupError::Parameter {
            family: "Z",
            value: n,
            range: "n >= 1",
        });
    }
    check_order(n)?;
    let rows = (0..n)
        .map(|i| (0..n).map(|j| (i + j) % n).collect())
        .collect();
    let labels = (0..n).map(|i| i.to_string()).collect();
    FiniteGroup::new(format!("Z{n}"), labels, rows)
}

/// Componentwise product; the pair `(a, b)` has index `a * |H| + b`.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> FiniteGroup {
    let (m, k) = (g.order(), h.order());
    let n = m * k;
    let rows = (0..n)
        .map(|x| {
            let (a, b) = (x / k, x % k);
            (0..n)
                .map(|y| {
                    let (c, d) = (y / k, y % k);
                    g.mul(a, c) * k + h.mul(b, d)
                })
                .collect()
        })
        .collect();
    let labels = (0..n)
        .map(|x| format!("({},{})", g.label(x / k), h.label(x % k)))
        .collect();
    FiniteGroup::new(format!("{}x{}", g.name(), h.name()), labels, rows)
        .expect("product of valid groups is a group")
}

fn power_label(base: &str, k: usize) -> String {
    match k {
        0 => String::new(),
        1 => base.to_string(),
        _ => format!("{base}^{k}"),
    }
}

/// Dihedral group of order `2n`: `<r, s | r^n = s^2 = 1, srs = r^-1>`.
/// Element `r^k s^m` has index `k + n*m`.
pub fn make_dihedral(n: usize) -> Result<FiniteGroup, GroupError> {
    if n == 0 {
        return Err(GroupError::Parameter {
            family: "D",
            value: n,
            range: "n >= 1",
        });
    }
    check_order(2 * n)?;
    let split = |x: usize| (x % n, x / n);
    let rows = (0..2 * n)
        .map(|x| {
            let (a, b) = split(x);
            (0..2 * n)
                .map(|y| {
                    let (c, d) = split(y);
                    // r^a s^b r^c s^d = r^(a ± c) s^(b+d)
                    let k = if b == 0 { (a + c) % n } else { (a + n - c) % n };
                    k + n * ((b + d) % 2)
                })
                .collect()
        })
        .collect();
    let labels = (0..2 * n)
        .map(|x| {
            let (k, m) = split(x);
            let s = if m == 1 { "s" } else { "" };
            let label = format!("{}{}", power_label("r", k), s);
            if label.is_empty() {
                "e".to_string()
            } else {
                label
            }
        })
        .collect();
    FiniteGroup::new(format!("D{n}"), labels, rows)
}

/// Dicyclic group of order `4n`: `<a, x | a^2n = 1, x^2 = a^n, x a x^-1 = a^-1>`.
/// Element `a^k x^m` has index `k + 2n*m`. `Dic2` is the quaternion group and
/// uses the labels `1, i, -1, -i, j, k, -j, -k`.
pub fn make_dicyclic(n: usize) -> Result<FiniteGroup, GroupError> {
    if n < 2 {
        return Err(GroupError::Parameter {
            family: "Dic",
            value: n,
            range: "n >= 2",
        });
    }
    check_order(4 * n)?;
    let half = 2 * n;
    let split = |x: usize| (x % half, x / half);
    let rows = (0..2 * half)
        .map(|x| {
            let (k, m) = split(x);
            (0..2 * half)
                .map(|y| {
                    let (l, p) = split(y);
                    match (m, p) {
                        (0, _) => (k + l) % half + half * p,
                        // a^k x a^l = a^(k-l) x
                        (_, 0) => (k + half - l) % half + half,
                        // a^k x a^l x = a^(k-l) x^2 = a^(k-l+n)
                        _ => (k + half - l + n) % half,
                    }
                })
                .collect()
        })
        .collect();
    let labels: Vec<String> = if n == 2 {
        ["1", "i", "-1", "-i", "j", "k", "-j", "-k"]
            .iter()
            .map(|s| s.to_string())
            .collect()
    } else {
        (0..2 * half)
            .map(|x| {
                let (k, m) = split(x);
                let label = format!("{}{}", power_label("a", k), if m == 1 { "x" } else { "" });
                if label.is_empty() {
                    "e".to_string()
                } else {
                    label
                }
            })
            .collect()
    };
    FiniteGroup::new(format!("Dic{n}"), labels, rows)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    // lexicographic order, so the identity comes first
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..n).collect();
    loop {
        out.push(current.clone());
        let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| current[j] > current[i - 1]).unwrap();
        current.swap(i - 1, j);
        current[i..].reverse();
    }
    out
}

fn is_even(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    let mut transpositions = 0;
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = p[x];
            len += 1;
        }
        transpositions += len - 1;
    }
    transpositions % 2 == 0
}

fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            continue;
        }
        let mut cycle = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cycle.push((x + 1).to_string());
            x = p[x];
        }
        out.push('(');
        out.push_str(&cycle.join(" "));
        out.push(')');
    }
    if out.is_empty() {
        "()".to_string()
    } else {
        out
    }
}

/// Permutation group on `perms` with `(σ·τ)(x) = σ(τ(x))`.
fn permutation_group(name: String, perms: Vec<Vec<usize>>) -> Result<FiniteGroup, GroupError> {
    let index: std::collections::HashMap<&[usize], usize> = perms
        .iter()
        .enumerate()
        .map(|(i, p)| (p.as_slice(), i))
        .collect();
    let rows = perms
        .iter()
        .map(|sigma| {
            perms
                .iter()
                .map(|tau| {
                    let composed: Vec<usize> = tau.iter().map(|&t| sigma[t]).collect();
                    index[composed.as_slice()]
                })
                .collect()
        })
        .collect();
    let labels = perms.iter().map(|p| cycle_notation(p)).collect();
    FiniteGroup::new(name, labels, rows)
}

pub fn make_symmetric(n: usize) -> Result<FiniteGroup, GroupError> {
    if !(1..=5).contains(&n) {
        return Err(GroupError::Parameter {
            family: "S",
            value: n,
            range: "1..=5",
        });
    }
    permutation_group(format!("S{n}"), permutations(n))
}

pub fn make_alternating(n: usize) -> Result<FiniteGroup, GroupError> {
    if !(3..=5).contains(&n) {
        return Err(GroupError::Parameter {
            family: "A",
            value: n,
            range: "3..=5",
        });
    }
    let perms = permutations(n).into_iter().filter(|p| is_even(p)).collect();
    permutation_group(format!("A{n}"), perms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    fn brute_histogram(g: &FiniteGroup) -> BTreeMap<usize, usize> {
        // independent of element_order: search powers by repeated table lookups
        let mut hist = BTreeMap::new();
        for x in g.elements() {
            let k = (1..=g.order())
                .find(|&k| (0..k).fold(0, |acc, _| g.mul(acc, x)) == 0)
                .unwrap();
            *hist.entry(k).or_insert(0) += 1;
        }
        hist
    }

    #[test]
    fn family_histograms() {
        let h = |pairs: &[(usize, usize)]| pairs.iter().copied().collect::<BTreeMap<_, _>>();
        assert_eq!(
            brute_histogram(&make_dihedral(3).unwrap()),
            h(&[(1, 1), (2, 3), (3, 2)])
        );
        assert_eq!(
            brute_histogram(&make_dicyclic(2).unwrap()),
            h(&[(1, 1), (2, 1), (4, 6)])
        );
        let z3z3 = direct_product(&make_cyclic(3).unwrap(), &make_cyclic(3).unwrap());
        assert_eq!(brute_histogram(&z3z3), h(&[(1, 1), (3, 8)]));
        let v4 = direct_product(&make_cyclic(2).unwrap(), &make_cyclic(2).unwrap());
        assert_eq!(brute_histogram(&v4), h(&[(1, 1), (2, 3)]));
        let z2z3 = direct_product(&make_cyclic(2).unwrap(), &make_cyclic(3).unwrap());
        assert!(z2z3.is_cyclic());
        assert_eq!(make_cyclic(6).unwrap().element_order(1), 6);
        assert_eq!(make_cyclic(1).unwrap().order(), 1);
    }

    #[test]
    fn family_orders() {
        assert_eq!(make_symmetric(1).unwrap().order(), 1);
        assert_eq!(make_symmetric(4).unwrap().order(), 24);
        assert_eq!(make_symmetric(5).unwrap().order(), 120);
        assert_eq!(make_alternating(3).unwrap().order(), 3);
        assert_eq!(make_alternating(5).unwrap().order(), 60);
        assert_eq!(make_dicyclic(3).unwrap().order(), 12);
        assert_eq!(make_dihedral(1).unwrap().order(), 2);
    }

    #[test]
    fn rejects_out_of_range_parameters() {
        assert!(make_cyclic(0).is_err());
        assert!(make_dihedral(0).is_err());
        assert!(make_dicyclic(1).is_err());
        assert!(make_symmetric(6).is_err());
        assert!(make_symmetric(0).is_err());
        assert!(make_alternating(2).is_err());
        assert!(make_alternating(6).is_err());
        assert!(matches!(
            make_cyclic(1000),
            Err(GroupError::TooLarge { .. })
        ));
    }

    #[test]
    fn labels() {
        let d3 = make_dihedral(3).unwrap();
        assert_eq!(d3.labels(), &["e", "r", "r^2", "s", "rs", "r^2s"]);
        let s3 = make_symmetric(3).unwrap();
        assert_eq!(s3.label(0), "()");
        assert_eq!(s3.label(1), "(2 3)");
    }

    #[test]
    fn quaternion_relations() {
        let q = make_dicyclic(2).unwrap();
        let idx = |l: &str| q.labels().iter().position(|x| x == l).unwrap();
        assert_eq!(q.mul(idx("i"), idx("j")), idx("k"));
        assert_eq!(q.mul(idx("j"), idx("i")), idx("-k"));
        assert_eq!(q.mul(idx("k"), idx("k")), idx("-1"));
        assert_eq!(q.mul(idx("j"), idx("k")), idx("i"));
    }
}
