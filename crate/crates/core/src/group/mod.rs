//! Finite groups as validated Cayley tables.
//!
//! Element `0` is always the identity. Every constructor funnels through
//! [`FiniteGroup::new`], which checks the Latin-square property, the
//! identity, inverses and associativity before handing out a value.

mod families;
mod iso;
mod table;

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::arith::{classify_order, factorize, Factorization, OrderClass};

pub use families::{
    direct_product, make_alternating, make_cyclic, make_dicyclic, make_dihedral, make_symmetric,
    MAX_CONSTRUCTED_ORDER,
};
pub use iso::is_isomorphic_small_group;
pub use table::{from_cayley_table, to_cayley_table};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("table has {rows} rows but order is {order}")]
    RowCount { order: usize, rows: usize },
    #[error("row {row} has {len} entries, expected {order}")]
    RowLength {
        row: usize,
        len: usize,
        order: usize,
    },
    #[error("entry ({row}, {col}) = {value} is out of range [0, {order})")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("Latin-square violation: row {row} repeats {value} at columns {first} and {second}")]
    RowRepeat {
        row: usize,
        value: usize,
        first: usize,
        second: usize,
    },
    #[error("Latin-square violation: column {col} repeats {value} at rows {first} and {second}")]
    ColumnRepeat {
        col: usize,
        value: usize,
        first: usize,
        second: usize,
    },
    #[error("element 0 is not the identity: 0*{index} or {index}*0 differs from {index}")]
    Identity { index: usize },
    #[error("element {element} has no inverse")]
    MissingInverse { element: usize },
    #[error("associativity fails at ({a}*{b})*{c} != {a}*({b}*{c})")]
    Associativity { a: usize, b: usize, c: usize },
    #[error("order must be positive")]
    EmptyGroup,
    #[error("label count {labels} does not match order {order}")]
    LabelCount { labels: usize, order: usize },
    #[error("{family} parameter {value} outside supported range {range}")]
    Parameter {
        family: &'static str,
        value: usize,
        range: &'static str,
    },
    #[error("group order {order} exceeds limit {limit}")]
    TooLarge { order: usize, limit: usize },
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
}

/// A finite group given by its full multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    // row-major, table[i * order + j] = i * j
    table: Vec<usize>,
    inverses: Vec<usize>,
    labels: Vec<String>,
}

impl FiniteGroup {
    /// Validates `rows` as a Cayley table with identity `0` and builds the group.
    pub fn new(
        name: impl Into<String>,
        labels: Vec<String>,
        rows: Vec<Vec<usize>>,
    ) -> Result<Self, GroupError> {
        let order = rows.len();
        if order == 0 {
            return Err(GroupError::EmptyGroup);
        }
        if labels.len() != order {
            return Err(GroupError::LabelCount {
                labels: labels.len(),
                order,
            });
        }
        let mut table = Vec::with_capacity(order * order);
        for (row, entries) in rows.iter().enumerate() {
            if entries.len() != order {
                return Err(GroupError::RowLength {
                    row,
                    len: entries.len(),
                    order,
                });
            }
            for (col, &value) in entries.iter().enumerate() {
                if value >= order {
                    return Err(GroupError::EntryOutOfRange {
                        row,
                        col,
                        value,
                        order,
                    });
                }
            }
            table.extend_from_slice(entries);
        }
        let at = |i: usize, j: usize| table[i * order + j];

        let mut seen = vec![usize::MAX; order];
        for row in 0..order {
            seen.iter_mut().for_each(|s| *s = usize::MAX);
            for col in 0..order {
                let v = at(row, col);
                if seen[v] != usize::MAX {
                    return Err(GroupError::RowRepeat {
                        row,
                        value: v,
                        first: seen[v],
                        second: col,
                    });
                }
                seen[v] = col;
            }
        }
        for col in 0..order {
            seen.iter_mut().for_each(|s| *s = usize::MAX);
            for row in 0..order {
                let v = at(row, col);
                if seen[v] != usize::MAX {
                    return Err(GroupError::ColumnRepeat {
                        col,
                        value: v,
                        first: seen[v],
                        second: row,
                    });
                }
                seen[v] = row;
            }
        }
        for i in 0..order {
            if at(0, i) != i || at(i, 0) != i {
                return Err(GroupError::Identity { index: i });
            }
        }
        let mut inverses = vec![0; order];
        for (i, inv) in inverses.iter_mut().enumerate() {
            match (0..order).find(|&j| at(i, j) == 0 && at(j, i) == 0) {
                Some(j) => *inv = j,
                None => return Err(GroupError::MissingInverse { element: i }),
            }
        }
        for a in 0..order {
            for b in 0..order {
                let ab = at(a, b);
                for c in 0..order {
                    if at(ab, c) != at(a, at(b, c)) {
                        return Err(GroupError::Associativity { a, b, c });
                    }
                }
            }
        }

        Ok(FiniteGroup {
            name: name.into(),
            order,
            table,
            inverses,
            labels,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn row(&self, a: usize) -> &[usize] {
        &self.table[a * self.order..(a + 1) * self.order]
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// Least `k >= 1` with `g^k = e`.
    pub fn element_order(&self, g: usize) -> usize {
        let mut k = 1;
        let mut x = g;
        while x != 0 {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    /// Map from element order to number of elements of that order.
    pub fn order_histogram(&self) -> BTreeMap<usize, usize> {
        let mut hist = BTreeMap::new();
        for g in self.elements() {
            *hist.entry(self.element_order(g)).or_insert(0) += 1;
        }
        hist
    }

    /// The cyclic subgroup `<g>` with members sorted.
    pub fn cyclic_subgroup(&self, g: usize) -> Subgroup {
        let mut members = vec![0];
        let mut x = g;
        while x != 0 {
            members.push(x);
            x = self.mul(x, g);
        }
        members.sort_unstable();
        Subgroup {
            members,
            generator: Some(g),
        }
    }

    /// All cyclic subgroups, deduplicated by member set and sorted by
    /// `(order, members)`. The recorded generator is the smallest element
    /// index generating each subgroup.
    pub fn cyclic_subgroups(&self) -> Vec<Subgroup> {
        let mut by_members: BTreeMap<(usize, Vec<usize>), usize> = BTreeMap::new();
        for g in self.elements() {
            let h = self.cyclic_subgroup(g);
            by_members.entry((h.order(), h.members)).or_insert(g);
        }
        by_members
            .into_iter()
            .map(|((_, members), g)| Subgroup {
                members,
                generator: Some(g),
            })
            .collect()
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn is_cyclic(&self) -> bool {
        self.elements().any(|g| self.element_order(g) == self.order)
    }

    pub fn factorization(&self) -> Factorization {
        factorize(self.order as u64)
    }

    pub fn order_class(&self) -> OrderClass {
        classify_order(&self.factorization())
    }

    /// Closure of `generators` under multiplication, sorted.
    pub fn generated_by(&self, generators: &[usize]) -> Subgroup {
        let mut inside = vec![false; self.order];
        inside[0] = true;
        let mut members = vec![0];
        let mut frontier = vec![0];
        while let Some(x) = frontier.pop() {
            for &g in generators {
                let y = self.mul(x, g);
                if !inside[y] {
                    inside[y] = true;
                    members.push(y);
                    frontier.push(y);
                }
            }
        }
        members.sort_unstable();
        Subgroup {
            members,
            generator: None,
        }
    }
}

impl fmt::Display for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (order {})", self.name, self.order)
    }
}

/// A subgroup stored as its sorted member set.
///
/// Equality and ordering only look at the members; the generator is a
/// provenance tag.
#[derive(Debug, Clone)]
pub struct Subgroup {
    members: Vec<usize>,
    generator: Option<usize>,
}

impl Subgroup {
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn generator(&self) -> Option<usize> {
        self.generator
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn contains(&self, g: usize) -> bool {
        self.members.binary_search(&g).is_ok()
    }

    /// `self ⊆ other`.
    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.order() <= other.order()
            && other.order().is_multiple_of(self.order())
            && self.members.iter().all(|&g| other.contains(g))
    }

    pub fn is_proper_subset_of(&self, other: &Subgroup) -> bool {
        self.order() < other.order() && self.is_subset_of(other)
    }

    /// Display name such as `⟨r^2⟩ (order 3)`, or `{e}` for the trivial subgroup.
    pub fn display_name(&self, group: &FiniteGroup) -> String {
        if self.is_trivial() {
            return "{e}".to_string();
        }
        match self.generator {
            Some(g) => format!("⟨{}⟩ (order {})", group.label(g), self.order()),
            None => format!("subgroup of order {}", self.order()),
        }
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for Subgroup {}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.order(), &self.members).cmp(&(other.order(), &other.members))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeSet;

    fn hist(pairs: &[(usize, usize)]) -> BTreeMap<usize, usize> {
        pairs.iter().copied().collect()
    }

    #[test]
    fn rejects_non_identity_zero() {
        // Z_2 with the identity at index 1
        let err = FiniteGroup::new(
            "bad",
            vec!["a".into(), "e".into()],
            vec![vec![1, 0], vec![0, 1]],
        )
        .unwrap_err();
        assert_eq!(err, GroupError::Identity { index: 0 });
    }

    #[test]
    fn rejects_non_associative_loop() {
        // A Latin square with identity 0 that is not associative (order 5 loop).
        let rows = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let labels = (0..5).map(|i| i.to_string()).collect();
        let err = FiniteGroup::new("loop", labels, rows).unwrap_err();
        assert!(matches!(err, GroupError::Associativity { .. }), "{err}");
    }

    #[test]
    fn rejects_entry_out_of_range() {
        let err = FiniteGroup::new(
            "bad",
            vec!["e".into(), "a".into()],
            vec![vec![0, 1], vec![1, 2]],
        )
        .unwrap_err();
        assert_eq!(
            err,
            GroupError::EntryOutOfRange {
                row: 1,
                col: 1,
                value: 2,
                order: 2
            }
        );
    }

    #[test]
    fn element_orders() {
        let z12 = make_cyclic(12).unwrap();
        assert_eq!(z12.element_order(0), 1);
        assert_eq!(z12.element_order(2), 6);
        assert_eq!(
            z12.order_histogram(),
            hist(&[(1, 1), (2, 1), (3, 2), (4, 2), (6, 2), (12, 4)])
        );
        let q8 = make_dicyclic(2).unwrap();
        let minus_one = q8.labels().iter().position(|l| l == "-1").unwrap();
        assert_eq!(q8.element_order(minus_one), 2);
    }

    #[test]
    fn cyclic_subgroup_counts() {
        let orders = |g: &FiniteGroup| -> Vec<usize> {
            g.cyclic_subgroups().iter().map(Subgroup::order).collect()
        };
        assert_eq!(orders(&make_cyclic(6).unwrap()), vec![1, 2, 3, 6]);
        let v4 = direct_product(&make_cyclic(2).unwrap(), &make_cyclic(2).unwrap());
        assert_eq!(orders(&v4), vec![1, 2, 2, 2]);
        assert_eq!(orders(&make_dicyclic(2).unwrap()), vec![1, 2, 4, 4, 4]);
    }

    #[test]
    fn abelian_and_cyclic_flags() {
        let z12 = make_cyclic(12).unwrap();
        assert!(z12.is_cyclic() && z12.is_abelian());
        let v4 = direct_product(&make_cyclic(2).unwrap(), &make_cyclic(2).unwrap());
        assert!(v4.is_abelian() && !v4.is_cyclic());
        let d4 = make_dihedral(4).unwrap();
        assert!(!d4.is_abelian());
        let z1 = make_cyclic(1).unwrap();
        assert!(z1.is_cyclic());
    }

    #[test]
    fn cyclic_subgroup_orders_are_divisors() {
        for n in 1..=60 {
            let g = make_cyclic(n).unwrap();
            let orders: Vec<u64> = g
                .cyclic_subgroups()
                .iter()
                .map(|h| h.order() as u64)
                .collect();
            assert_eq!(orders, crate::arith::divisors(n as u64), "Z_{n}");
        }
    }

    #[test]
    fn every_subgroup_is_generated_and_every_element_lands() {
        for g in [
            make_dihedral(6).unwrap(),
            make_dicyclic(3).unwrap(),
            make_symmetric(4).unwrap(),
            make_alternating(4).unwrap(),
        ] {
            let subs = g.cyclic_subgroups();
            let set: BTreeSet<Vec<usize>> = subs.iter().map(|h| h.members().to_vec()).collect();
            assert_eq!(set.len(), subs.len());
            assert!(subs.len() <= g.order());
            for x in g.elements() {
                assert!(set.contains(g.cyclic_subgroup(x).members()));
            }
            for h in &subs {
                let gen = h.generator().unwrap();
                assert_eq!(g.cyclic_subgroup(gen).members(), h.members());
                assert!(h.contains(0));
                for &a in h.members() {
                    assert!(h.contains(g.inverse(a)));
                    for &b in h.members() {
                        assert!(h.contains(g.mul(a, b)));
                    }
                }
            }
        }
    }

    #[test]
    fn subgroup_display_names() {
        let d3 = make_dihedral(3).unwrap();
        let subs = d3.cyclic_subgroups();
        assert_eq!(subs[0].display_name(&d3), "{e}");
        assert_eq!(subs.last().unwrap().display_name(&d3), "⟨r⟩ (order 3)");
    }
}
