//! Cross-validation of the published closed forms against the generated-graph
//! oracle (build `M_{m,n}`, enumerate its edges) over finite parameter grids.
//!
//! Reports are neutral: every case carries the oracle value, the closed-form
//! ("paper") value and a verdict. Cases are sorted by `(subject, m, n, quantity)`,
//! so a report never depends on the order in which grid points were evaluated.

use std::collections::BTreeMap;
use std::fmt;
use std::fmt::Write as _;
use std::ops::RangeInclusive;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::closed_forms::{
    prop41_indices, prop42_indices, thm31_mpoly, thm32_mpoly, PaperIndexSet, StatedDomain,
    LADDER_INDICES, LADDER_MPOLY, LINE_INDICES, LINE_MPOLY,
};
use crate::graph::Graph;
use crate::indices::{indices_from_edges, Alpha, IndexSet, IndexValue};
use crate::ladder::{ladder, LadderError};
use crate::polynomial::{MPoly, Rational};

/// Which published result a case checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Subject {
    Thm31,
    Thm32,
    Prop41,
    Prop42,
}

impl Subject {
    pub const ALL: [Subject; 4] = [Subject::Thm31, Subject::Thm32, Subject::Prop41, Subject::Prop42];

    pub fn name(self) -> &'static str {
        match self {
            Subject::Thm31 => "thm31",
            Subject::Thm32 => "thm32",
            Subject::Prop41 => "prop41",
            Subject::Prop42 => "prop42",
        }
    }

    pub fn is_theorem(self) -> bool {
        matches!(self, Subject::Thm31 | Subject::Thm32)
    }

    fn domain(self) -> StatedDomain {
        match self {
            Subject::Thm31 => LADDER_MPOLY,
            Subject::Thm32 => LINE_MPOLY,
            Subject::Prop41 => LADDER_INDICES,
            Subject::Prop42 => LINE_INDICES,
        }
    }
}

impl fmt::Display for Subject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The compared quantity within a case.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Quantity {
    /// Coefficient of `x^i y^j`.
    Term(u32, u32),
    M1,
    M2,
    MM2,
    RAlpha(Alpha),
    RRAlpha(Alpha),
    Sdd,
    /// Placeholder for a grid point outside the stated domain.
    Domain,
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Quantity::Term(i, j) => write!(f, "x^{i}y^{j}"),
            Quantity::M1 => f.write_str("M1"),
            Quantity::M2 => f.write_str("M2"),
            Quantity::MM2 => f.write_str("MM2"),
            Quantity::RAlpha(a) => write!(f, "R_{a}"),
            Quantity::RRAlpha(a) => write!(f, "RR_{a}"),
            Quantity::Sdd => f.write_str("SDD"),
            Quantity::Domain => f.write_str("domain"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Verdict {
    Match,
    Mismatch,
    OutOfDomain,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Match => "match",
            Verdict::Mismatch => "mismatch",
            Verdict::OutOfDomain => "out_of_domain",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One comparison. `computed` is the oracle value, `closed_form` the published one;
/// both are `None` for out-of-domain grid points.
#[derive(Debug, Clone, PartialEq)]
pub struct CaseResult {
    pub m: i64,
    pub n: i64,
    pub subject: Subject,
    pub quantity: Quantity,
    pub computed: Option<IndexValue>,
    pub closed_form: Option<IndexValue>,
    pub verdict: Verdict,
}

impl CaseResult {
    fn compare(m: i64, n: i64, subject: Subject, quantity: Quantity, oracle: IndexValue, paper: IndexValue) -> Self {
        let verdict = if oracle.agrees_with(&paper) {
            Verdict::Match
        } else {
            Verdict::Mismatch
        };
        CaseResult {
            m,
            n,
            subject,
            quantity,
            computed: Some(oracle),
            closed_form: Some(paper),
            verdict,
        }
    }

    fn out_of_domain(m: i64, n: i64, subject: Subject) -> Self {
        CaseResult {
            m,
            n,
            subject,
            quantity: Quantity::Domain,
            computed: None,
            closed_form: None,
            verdict: Verdict::OutOfDomain,
        }
    }

    fn sort_key(&self) -> (Subject, i64, i64, Quantity) {
        (self.subject, self.m, self.n, self.quantity)
    }
}

impl Serialize for CaseResult {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Record<'a> {
            subject: &'static str,
            m: i64,
            n: i64,
            quantity: String,
            oracle: &'a Option<IndexValue>,
            paper: &'a Option<IndexValue>,
            verdict: &'static str,
        }
        Record {
            subject: self.subject.name(),
            m: self.m,
            n: self.n,
            quantity: self.quantity.to_string(),
            oracle: &self.computed,
            paper: &self.closed_form,
            verdict: self.verdict.name(),
        }
        .serialize(serializer)
    }
}

/// Verdict tallies for one subject.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SubjectSummary {
    pub matches: usize,
    pub mismatches: usize,
    pub out_of_domain: usize,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct VerificationReport {
    cases: Vec<CaseResult>,
}

impl VerificationReport {
    pub fn new(mut cases: Vec<CaseResult>) -> Self {
        cases.sort_by_key(CaseResult::sort_key);
        VerificationReport { cases }
    }

    pub fn cases(&self) -> &[CaseResult] {
        &self.cases
    }

    /// Combines reports, keeping the sorted order.
    pub fn merge(reports: impl IntoIterator<Item = VerificationReport>) -> Self {
        Self::new(reports.into_iter().flat_map(|r| r.cases).collect())
    }

    pub fn summary(&self) -> BTreeMap<Subject, SubjectSummary> {
        let mut out: BTreeMap<Subject, SubjectSummary> = BTreeMap::new();
        for c in &self.cases {
            let s = out.entry(c.subject).or_default();
            match c.verdict {
                Verdict::Match => s.matches += 1,
                Verdict::Mismatch => s.mismatches += 1,
                Verdict::OutOfDomain => s.out_of_domain += 1,
            }
        }
        out
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &CaseResult> {
        self.cases.iter().filter(|c| c.verdict == Verdict::Mismatch)
    }

    pub fn has_theorem_mismatch(&self) -> bool {
        self.mismatches().any(|c| c.subject.is_theorem())
    }

    pub fn all_match(&self) -> bool {
        !self.cases.is_empty() && self.cases.iter().all(|c| c.verdict == Verdict::Match)
    }

    /// JSON array of case records.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.cases).expect("report serializes")
    }

    /// Fixed-layout text table followed by a per-subject summary.
    pub fn to_text(&self) -> String {
        let cell = |v: &Option<IndexValue>| v.as_ref().map_or_else(|| "-".to_string(), |x| x.to_string());
        let mut out = String::new();
        writeln!(
            out,
            "{:<7} {:>3} {:>3} {:<12} {:>26} {:>26} verdict",
            "subject", "m", "n", "quantity", "oracle", "paper"
        )
        .unwrap();
        for c in &self.cases {
            writeln!(
                out,
                "{:<7} {:>3} {:>3} {:<12} {:>26} {:>26} {}",
                c.subject.name(),
                c.m,
                c.n,
                c.quantity.to_string(),
                cell(&c.computed),
                cell(&c.closed_form),
                c.verdict
            )
            .unwrap();
        }
        out.push('\n');
        for (subject, s) in self.summary() {
            writeln!(
                out,
                "{subject}: {} match, {} mismatch, {} out of domain",
                s.matches, s.mismatches, s.out_of_domain
            )
            .unwrap();
        }
        out
    }
}

/// Inclusive integer range written `A:B`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GridRange {
    pub start: i64,
    pub end: i64,
}

impl GridRange {
    pub const fn new(start: i64, end: i64) -> Self {
        GridRange { start, end }
    }

    pub fn iter(self) -> RangeInclusive<i64> {
        self.start..=self.end
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid range `{0}`: expected A:B with integers A <= B")]
pub struct RangeParseError(pub String);

impl FromStr for GridRange {
    type Err = RangeParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || RangeParseError(s.to_string());
        let (a, b) = s.split_once(':').ok_or_else(err)?;
        let start: i64 = a.trim().parse().map_err(|_| err())?;
        let end: i64 = b.trim().parse().map_err(|_| err())?;
        if start > end {
            return Err(err());
        }
        Ok(GridRange { start, end })
    }
}

impl fmt::Display for GridRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.start, self.end)
    }
}

/// Default grids: `m ∈ [4,12], n ∈ [2,10]` for the ladder results and
/// `m, n ∈ [4,10]` for the line-graph results.
pub fn default_grid(subject: Subject) -> (GridRange, GridRange) {
    match subject {
        Subject::Thm31 | Subject::Prop41 => (GridRange::new(4, 12), GridRange::new(2, 10)),
        Subject::Thm32 | Subject::Prop42 => (GridRange::new(4, 10), GridRange::new(4, 10)),
    }
}

fn grid(m_range: GridRange, n_range: GridRange) -> Vec<(i64, i64)> {
    m_range
        .iter()
        .flat_map(|m| n_range.iter().map(move |n| (m, n)))
        .collect()
}

/// Runs `per_point` over the grid in parallel; generator errors abort the run.
fn run_grid<F>(m_range: GridRange, n_range: GridRange, per_point: F) -> Result<VerificationReport, LadderError>
where
    F: Fn(i64, i64, &Graph) -> Vec<CaseResult> + Sync,
{
    let chunks: Result<Vec<Vec<CaseResult>>, LadderError> = grid(m_range, n_range)
        .into_par_iter()
        .map(|(m, n)| Ok(per_point(m, n, &ladder(m, n)?)))
        .collect();
    Ok(VerificationReport::new(chunks?.into_iter().flatten().collect()))
}

fn compare_polys(m: i64, n: i64, subject: Subject, oracle: &MPoly, paper: &MPoly) -> Vec<CaseResult> {
    let mut keys: Vec<(u32, u32)> = oracle.exponents().chain(paper.exponents()).collect();
    keys.sort_unstable();
    keys.dedup();
    keys.into_iter()
        .map(|(i, j)| {
            CaseResult::compare(
                m,
                n,
                subject,
                Quantity::Term(i, j),
                IndexValue::Exact(oracle.coefficient(i, j)),
                IndexValue::Exact(paper.coefficient(i, j)),
            )
        })
        .collect()
}

/// Compares `M(M_{m,n})` with the closed-form ladder polynomial, term by term.
pub fn verify_thm31(m_range: GridRange, n_range: GridRange) -> Result<VerificationReport, LadderError> {
    run_grid(m_range, n_range, |m, n, g| match thm31_mpoly(m, n) {
        Ok(paper) => compare_polys(m, n, Subject::Thm31, &g.m_polynomial(), &paper),
        Err(_) => vec![CaseResult::out_of_domain(m, n, Subject::Thm31)],
    })
}

/// Compares `M(L(M_{m,n}))` with the closed-form line-graph polynomial.
pub fn verify_thm32(m_range: GridRange, n_range: GridRange) -> Result<VerificationReport, LadderError> {
    run_grid(m_range, n_range, |m, n, g| match thm32_mpoly(m, n) {
        Ok(paper) => compare_polys(m, n, Subject::Thm32, &g.line_graph().m_polynomial(), &paper),
        Err(_) => vec![CaseResult::out_of_domain(m, n, Subject::Thm32)],
    })
}

fn compare_indices(
    m: i64,
    n: i64,
    subject: Subject,
    oracle: &IndexSet,
    paper: &[PaperIndexSet],
) -> Vec<CaseResult> {
    let exact = |r: &Rational| IndexValue::Exact(r.clone());
    let first = paper.first().expect("at least one exponent");
    let mut cases = vec![
        CaseResult::compare(m, n, subject, Quantity::M1, exact(&oracle.m1), exact(&first.m1)),
        CaseResult::compare(m, n, subject, Quantity::M2, exact(&oracle.m2), exact(&first.m2)),
        CaseResult::compare(m, n, subject, Quantity::MM2, exact(&oracle.mm2), exact(&first.mm2)),
        CaseResult::compare(m, n, subject, Quantity::Sdd, exact(&oracle.sdd), exact(&first.sdd)),
    ];
    for p in paper {
        let a = p.alpha;
        cases.push(CaseResult::compare(
            m,
            n,
            subject,
            Quantity::RAlpha(a),
            oracle.r_alpha[&a].clone(),
            p.r_alpha.clone(),
        ));
        cases.push(CaseResult::compare(
            m,
            n,
            subject,
            Quantity::RRAlpha(a),
            oracle.rr_alpha[&a].clone(),
            p.rr_alpha.clone(),
        ));
    }
    cases
}

fn dedup_alphas(alphas: &[Alpha]) -> Vec<Alpha> {
    let mut v = alphas.to_vec();
    v.sort();
    v.dedup();
    v
}

fn prop_cases(m: i64, n: i64, subject: Subject, g: &Graph, alphas: &[Alpha]) -> Vec<CaseResult> {
    if !subject.domain().contains(m, n) {
        return vec![CaseResult::out_of_domain(m, n, subject)];
    }
    let (target, formula): (Graph, fn(i64, i64, Alpha) -> _) = match subject {
        Subject::Prop41 => (g.clone(), prop41_indices),
        Subject::Prop42 => (g.line_graph(), prop42_indices),
        _ => unreachable!("theorem subjects are not index propositions"),
    };
    let oracle = indices_from_edges(&target, alphas);
    let paper: Vec<PaperIndexSet> = alphas
        .iter()
        .map(|&a| formula(m, n, a).expect("domain checked above"))
        .collect();
    compare_indices(m, n, subject, &oracle, &paper)
}

fn verify_props(
    subjects: &[Subject],
    m_range: GridRange,
    n_range: GridRange,
    alphas: &[Alpha],
) -> Result<VerificationReport, LadderError> {
    let alphas = if alphas.is_empty() {
        vec![Alpha::from(1)]
    } else {
        dedup_alphas(alphas)
    };
    run_grid(m_range, n_range, |m, n, g| {
        subjects
            .iter()
            .flat_map(|&s| prop_cases(m, n, s, g, &alphas))
            .collect()
    })
}

/// Ladder index expressions versus edge sums over `M_{m,n}`.
pub fn verify_prop41(m_range: GridRange, n_range: GridRange, alphas: &[Alpha]) -> Result<VerificationReport, LadderError> {
    verify_props(&[Subject::Prop41], m_range, n_range, alphas)
}

/// Line-graph index expressions versus edge sums over `L(M_{m,n})`.
pub fn verify_prop42(m_range: GridRange, n_range: GridRange, alphas: &[Alpha]) -> Result<VerificationReport, LadderError> {
    verify_props(&[Subject::Prop42], m_range, n_range, alphas)
}

/// Both index propositions over the same grid. An empty `alphas` means `[1]`.
pub fn verify_propositions(
    m_range: GridRange,
    n_range: GridRange,
    alphas: &[Alpha],
) -> Result<VerificationReport, LadderError> {
    verify_props(&[Subject::Prop41, Subject::Prop42], m_range, n_range, alphas)
}

/// Every subject over its default grid.
pub fn verify_all_default(alphas: &[Alpha]) -> VerificationReport {
    let (m31, n31) = default_grid(Subject::Thm31);
    let (m32, n32) = default_grid(Subject::Thm32);
    let (m41, n41) = default_grid(Subject::Prop41);
    let (m42, n42) = default_grid(Subject::Prop42);
    let reports = [
        verify_thm31(m31, n31),
        verify_thm32(m32, n32),
        verify_prop41(m41, n41, alphas),
        verify_prop42(m42, n42, alphas),
    ];
    VerificationReport::merge(
        reports
            .into_iter()
            .map(|r| r.expect("default grids are inside the generator domain")),
    )
}
