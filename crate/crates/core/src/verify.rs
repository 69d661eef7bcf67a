//! Checks the classification of groups whose cyclic subgroup graph is a line
//! graph against explicit computation over a catalog.
//!
//! The classification: the cyclic subgroup graph of `G` is a line graph iff
//! `G` is cyclic of prime-power order (including the trivial group) or
//! cyclic of order `pq` for distinct primes `p`, `q`. The supporting case
//! results each come with a claw witness whose subgroup orders follow a
//! fixed shape; those shapes are checked here too.

use std::fmt;

use rayon::prelude::*;

use crate::arith::{is_prime, OrderClass};
use crate::catalog::GroupRecord;
use crate::graph::{is_induced_embedding, SimpleGraph};
use crate::group::FiniteGroup;
use crate::lattice::{build_gamma, LabeledGraph};
use crate::line::{decide_line_graph, Evidence, ForbiddenSet, Verdict};

/// Predicted side of the classification.
pub fn predict(group: &FiniteGroup) -> bool {
    group.is_cyclic()
        && matches!(
            group.order_class(),
            OrderClass::Trivial | OrderClass::PrimePower | OrderClass::TwoPrimesPq
        )
}

/// Short human-readable description of a verdict on a labelled graph.
pub fn witness_summary(gamma: &LabeledGraph, verdict: &Verdict) -> String {
    match &verdict.evidence {
        Evidence::Root { root, .. } => format!(
            "root with {} vertices and {} edges",
            root.vertex_count(),
            root.edge_count()
        ),
        Evidence::PatternFree => "no forbidden pattern".to_string(),
        Evidence::Forbidden { pattern, embedding } => {
            let names: Vec<&str> = embedding
                .iter()
                .map(|&v| gamma.label(v).name.as_str())
                .collect();
            format!("Gamma_{pattern} at [{}]", names.join(", "))
        }
        Evidence::NoRoot { component } => {
            format!("no root for component of size {}", component.len())
        }
    }
}

#[derive(Debug, Clone)]
pub struct TheoremRow {
    pub name: String,
    pub order: usize,
    pub order_class: OrderClass,
    pub is_cyclic: bool,
    pub predicted: bool,
    pub actual: bool,
    pub witness: String,
    /// The verdict's evidence re-checked independently.
    pub evidence_ok: bool,
}

impl TheoremRow {
    pub fn matches(&self) -> bool {
        self.predicted == self.actual && self.evidence_ok
    }

    pub fn to_tsv(&self) -> String {
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.name,
            self.order,
            self.order_class,
            self.is_cyclic,
            self.predicted,
            self.actual,
            self.witness
        )
    }
}

#[derive(Debug, Clone)]
pub struct TheoremReport {
    pub rows: Vec<TheoremRow>,
}

impl TheoremReport {
    pub fn holds(&self) -> bool {
        self.rows.iter().all(TheoremRow::matches)
    }

    pub fn summary(&self) -> String {
        let status = if self.holds() { "HOLDS" } else { "FAILS" };
        format!("THEOREM {status} over {} groups", self.rows.len())
    }
}

impl fmt::Display for TheoremReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "name\torder\torder_class\tis_cyclic\tpredicted\tactual\twitness"
        )?;
        for row in &self.rows {
            writeln!(f, "{}", row.to_tsv())?;
        }
        writeln!(f, "{}", self.summary())
    }
}

fn main_row(record: &GroupRecord, forbidden: &ForbiddenSet) -> TheoremRow {
    let group = &record.group;
    let gamma = build_gamma(group);
    let verdict = decide_line_graph(gamma.graph(), forbidden);
    TheoremRow {
        name: group.name().to_string(),
        order: group.order(),
        order_class: record.order_class,
        is_cyclic: group.is_cyclic(),
        predicted: predict(group),
        actual: verdict.is_line_graph,
        witness: witness_summary(&gamma, &verdict),
        evidence_ok: verdict.check(gamma.graph(), forbidden),
    }
}

/// Compares the predicted and computed line-graph status for every group.
/// Rows come back in catalog order.
pub fn verify_main_theorem(catalog: &[GroupRecord], forbidden: &ForbiddenSet) -> TheoremReport {
    let rows = catalog.par_iter().map(|r| main_row(r, forbidden)).collect();
    TheoremReport { rows }
}

/// An induced claw in a cyclic subgroup graph, with subgroup orders.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClawWitness {
    pub center: usize,
    pub leaves: [usize; 3],
    pub center_order: usize,
    pub leaf_orders: [usize; 3],
}

impl fmt::Display for ClawWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.leaf_orders;
        write!(
            f,
            "claw center order {} leaves {a},{b},{c}",
            self.center_order
        )
    }
}

impl ClawWitness {
    /// Independent check that the four vertices induce a claw.
    pub fn is_valid_in(&self, gamma: &LabeledGraph) -> bool {
        let map = [self.center, self.leaves[0], self.leaves[1], self.leaves[2]];
        is_induced_embedding(gamma.graph(), &SimpleGraph::claw(), &map)
            && gamma.label(self.center).order == self.center_order
            && (0..3).all(|i| gamma.label(self.leaves[i]).order == self.leaf_orders[i])
    }
}

/// First induced claw (centre, then leaves in ascending vertex order) whose
/// subgroup orders satisfy `accept(center_order, sorted_leaf_orders)`.
pub fn find_claw(
    gamma: &LabeledGraph,
    accept: impl Fn(usize, [usize; 3]) -> bool,
) -> Option<ClawWitness> {
    let g = gamma.graph();
    let order = |v: usize| gamma.label(v).order;
    for c in 0..g.vertex_count() {
        let nbrs: Vec<usize> = g.neighbors(c).collect();
        for (i, &a) in nbrs.iter().enumerate() {
            for (j, &b) in nbrs.iter().enumerate().skip(i + 1) {
                if g.has_edge(a, b) {
                    continue;
                }
                for &d in &nbrs[j + 1..] {
                    if g.has_edge(a, d) || g.has_edge(b, d) {
                        continue;
                    }
                    let mut leaf_orders = [order(a), order(b), order(d)];
                    leaf_orders.sort_unstable();
                    if accept(order(c), leaf_orders) {
                        let mut leaves = [a, b, d];
                        leaves.sort_by_key(|&v| (order(v), v));
                        return Some(ClawWitness {
                            center: c,
                            leaves,
                            center_order: order(c),
                            leaf_orders,
                        });
                    }
                }
            }
        }
    }
    None
}

/// The individual results that together give the classification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaseTheorem {
    /// Three or more distinct primes divide `|G|`: not a line graph.
    ThreePrimes,
    /// `G` cyclic of order `p^a q^b`: line graph iff prime power or `pq`.
    Cyclic,
    /// `G` abelian, non-cyclic, of order `p^a q^b`: not a line graph.
    NonCyclicAbelian,
    /// `G` non-abelian of order `pq`: not a line graph.
    NonAbelianPq,
    /// Every other non-abelian group of order `p^a q^b`: not a line graph.
    NonAbelianOther,
}

impl CaseTheorem {
    pub const ALL: [CaseTheorem; 5] = [
        CaseTheorem::ThreePrimes,
        CaseTheorem::Cyclic,
        CaseTheorem::NonCyclicAbelian,
        CaseTheorem::NonAbelianPq,
        CaseTheorem::NonAbelianOther,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CaseTheorem::ThreePrimes => "three-primes",
            CaseTheorem::Cyclic => "cyclic",
            CaseTheorem::NonCyclicAbelian => "noncyclic-abelian",
            CaseTheorem::NonAbelianPq => "nonabelian-pq",
            CaseTheorem::NonAbelianOther => "nonabelian-other",
        }
    }

    /// The case whose hypothesis `group` satisfies; exactly one applies to
    /// each group.
    pub fn classify(group: &FiniteGroup) -> CaseTheorem {
        let class = group.order_class();
        if class == OrderClass::ThreeOrMorePrimes {
            CaseTheorem::ThreePrimes
        } else if group.is_cyclic() {
            CaseTheorem::Cyclic
        } else if group.is_abelian() {
            CaseTheorem::NonCyclicAbelian
        } else if class == OrderClass::TwoPrimesPq {
            CaseTheorem::NonAbelianPq
        } else {
            CaseTheorem::NonAbelianOther
        }
    }

    /// Expected line-graph status under this case.
    pub fn expects_line_graph(self, group: &FiniteGroup) -> bool {
        match self {
            CaseTheorem::Cyclic => predict(group),
            _ => false,
        }
    }

    /// Shape of the claw the corresponding argument constructs, as a
    /// predicate on `(center order, sorted leaf orders)`.
    pub fn claw_shape(self, group: &FiniteGroup) -> Box<dyn Fn(usize, [usize; 3]) -> bool> {
        let primes: Vec<usize> = group.factorization().primes().map(|p| p as usize).collect();
        match self {
            // {e} with three prime-order subgroups of pairwise distinct primes
            CaseTheorem::ThreePrimes => Box::new(|c, [a, b, d]| {
                c == 1 && [a, b, d].iter().all(|&x| is_prime(x as u64)) && a < b && b < d
            }),
            // <p> with leaves {e}, order p^2, order pq
            CaseTheorem::Cyclic => Box::new(move |c, leaves| {
                primes.contains(&c)
                    && primes.iter().any(|&q| {
                        q != c && {
                            let mut want = [1, c * c, c * q];
                            want.sort_unstable();
                            leaves == want
                        }
                    })
            }),
            // {e} with three subgroups of the same prime order t
            CaseTheorem::NonCyclicAbelian => {
                Box::new(|c, [a, b, d]| c == 1 && a == b && b == d && is_prime(a as u64))
            }
            // {e} with three subgroups of the smaller prime order
            CaseTheorem::NonAbelianPq => {
                let p = primes.first().copied().unwrap_or(0);
                Box::new(move |c, leaves| c == 1 && leaves == [p, p, p])
            }
            CaseTheorem::NonAbelianOther => Box::new(|_, _| true),
        }
    }
}

impl fmt::Display for CaseTheorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone)]
pub struct CaseRow {
    pub case: CaseTheorem,
    pub name: String,
    pub expected: bool,
    pub actual: bool,
    /// Claw of the expected shape, for negative cases.
    pub claw: Option<ClawWitness>,
}

impl CaseRow {
    pub fn holds(&self) -> bool {
        self.expected == self.actual && (self.expected || self.claw.is_some())
    }

    pub fn to_tsv(&self) -> String {
        let claw = self
            .claw
            .as_ref()
            .map_or_else(|| "-".to_string(), ToString::to_string);
        format!(
            "CASE\t{}\t{}\t{}\t{}\t{}",
            self.case, self.name, self.expected, self.actual, claw
        )
    }
}

#[derive(Debug, Clone)]
pub struct CaseReport {
    pub rows: Vec<CaseRow>,
}

impl CaseReport {
    pub fn holds(&self) -> bool {
        self.rows.iter().all(CaseRow::holds)
    }

    pub fn rows_for(&self, case: CaseTheorem) -> impl Iterator<Item = &CaseRow> {
        self.rows.iter().filter(move |r| r.case == case)
    }
}

impl fmt::Display for CaseReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            writeln!(f, "{}", row.to_tsv())?;
        }
        for case in CaseTheorem::ALL {
            let rows: Vec<&CaseRow> = self.rows_for(case).collect();
            let status = if rows.iter().all(|r| r.holds()) {
                "HOLDS"
            } else {
                "FAILS"
            };
            writeln!(f, "CASE {case} {status} over {} groups", rows.len())?;
        }
        Ok(())
    }
}

fn case_row(record: &GroupRecord, forbidden: &ForbiddenSet) -> CaseRow {
    let group = &record.group;
    let case = CaseTheorem::classify(group);
    let gamma = build_gamma(group);
    let verdict = decide_line_graph(gamma.graph(), forbidden);
    let expected = case.expects_line_graph(group);
    let claw = if verdict.is_line_graph {
        None
    } else {
        find_claw(&gamma, case.claw_shape(group)).filter(|w| w.is_valid_in(&gamma))
    };
    CaseRow {
        case,
        name: group.name().to_string(),
        expected,
        actual: verdict.is_line_graph,
        claw,
    }
}

/// Sorts each group into the case result whose hypothesis it meets, checks
/// that result's conclusion, and extracts a claw of the expected shape for
/// every negative conclusion.
pub fn verify_case_theorems(catalog: &[GroupRecord], forbidden: &ForbiddenSet) -> CaseReport {
    let rows = catalog.par_iter().map(|r| case_row(r, forbidden)).collect();
    CaseReport { rows }
}

#[derive(Debug, Clone)]
pub struct CompletenessRow {
    pub name: String,
    pub order: usize,
    pub expected: bool,
    pub is_complete: bool,
}

#[derive(Debug, Clone)]
pub struct CompletenessReport {
    pub rows: Vec<CompletenessRow>,
}

impl CompletenessReport {
    pub fn holds(&self) -> bool {
        self.rows.iter().all(|r| r.expected == r.is_complete)
    }
}

impl fmt::Display for CompletenessReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in self.rows.iter().filter(|r| r.expected || r.is_complete) {
            writeln!(
                f,
                "COMPLETE\t{}\t{}\t{}\t{}",
                r.name, r.order, r.expected, r.is_complete
            )?;
        }
        let status = if self.holds() { "HOLDS" } else { "FAILS" };
        writeln!(f, "COMPLETENESS {status} over {} groups", self.rows.len())
    }
}

/// The cyclic subgroup graph is complete exactly for the trivial group and
/// groups of prime order.
pub fn check_completeness_claim(catalog: &[GroupRecord]) -> CompletenessReport {
    let rows = catalog
        .par_iter()
        .map(|r| {
            let n = r.order();
            CompletenessRow {
                name: r.name().to_string(),
                order: n,
                expected: n == 1 || is_prime(n as u64),
                is_complete: build_gamma(&r.group).graph().is_complete(),
            }
        })
        .collect();
    CompletenessReport { rows }
}
