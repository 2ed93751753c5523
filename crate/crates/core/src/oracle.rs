//! Brute-force verification at small n. Each check enumerates involutions or
//! partitions directly and compares what it finds with the closed-form
//! answers from [`crate::classes`] and [`crate::classify`], which are only
//! consulted once the search is over.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::classes::inverting_involution_sizes;
use crate::classify::{classify, quadratic_criterion, restriction_splits};
use crate::error::{Error, Result};
use crate::gf4::Gf4;
use crate::partitions::{generate_distinct, generate_odd, Partition};
use crate::permgroup::{
    all_involutions, class_representative, enumerate_involutions, symmetric_generators, Permutation,
};
use crate::specht::{
    self, build_specht_quotient_with_limit, fixes_at_most_one_per_column, induced_form,
    intertwiner_dim, restrict_and_split, sn_action, Support, Tableau,
};

/// Exhaustive involution enumeration is capped here.
pub const INTERVAL_LIMIT_N: usize = 10;
/// Default cap on n for checks that build modules or sweep forms.
pub const DEFAULT_FORM_LIMIT_N: usize = 8;
/// Hard cap for `--limit-n`.
pub const MAX_FORM_LIMIT_N: usize = 10;
pub const BIJECTION_LIMIT_N: usize = 30;
pub const CONSISTENCY_LIMIT_N: usize = 40;
pub const THEOREM_MIN_N: usize = 5;

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub subject: String,
    pub instances_checked: u64,
    pub violations: Vec<String>,
    #[serde(rename = "elapsed_ms", serialize_with = "millis")]
    pub elapsed: Duration,
    pub notes: Vec<String>,
}

fn millis<S: Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64() * 1e3)
}

impl VerificationReport {
    fn new(subject: impl Into<String>) -> Self {
        VerificationReport {
            subject: subject.into(),
            instances_checked: 0,
            violations: Vec::new(),
            elapsed: Duration::ZERO,
            notes: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    fn timed(mut self, start: Instant) -> Self {
        self.elapsed = start.elapsed();
        self
    }
}

fn check_limit(what: &'static str, n: usize, limit: usize) -> Result<()> {
    if n > limit {
        return Err(Error::LimitExceeded { what, n, limit });
    }
    Ok(())
}

/// Involution sizes inverting the class representative of λ, against
/// [(n−ℓ)/2, (n−m_o)/2].
pub fn verify_inversion_interval(lambda: &Partition) -> Result<VerificationReport> {
    let start = Instant::now();
    if !lambda.all_parts_odd() {
        return Err(Error::EvenPart(lambda.clone()));
    }
    let n = lambda.n();
    check_limit("involution enumeration", n, INTERVAL_LIMIT_N)?;
    let mut report = VerificationReport::new(format!("intervals {lambda} n={n}"));
    let sigma = class_representative(lambda);
    let mut observed = BTreeSet::new();
    for pi in all_involutions(n) {
        report.instances_checked += 1;
        if pi.inverts(&sigma)? {
            observed.insert(pi.involution_size()?);
        }
    }
    let predicted = inverting_involution_sizes(lambda)?;
    if observed != predicted {
        report.violations.push(format!(
            "observed sizes {observed:?}, predicted {predicted:?}"
        ));
    }
    Ok(report.timed(start))
}

/// For every involution π with ⟨πe_t, e_t⟩ odd: π fixes some tabloid of
/// supp(t), fixes at most one entry per column of t, and its size m lies in
/// [(n−|μ|_a)/2, (n−ℓ_o(μ))/2].
pub fn verify_form_bounds(mu: &Partition, limit_n: usize) -> Result<VerificationReport> {
    let start = Instant::now();
    if !mu.is_distinct() {
        return Err(Error::RepeatedParts(mu.clone()));
    }
    let n = mu.n();
    check_limit("form sweep", n, limit_n)?;
    let mut report = VerificationReport::new(format!("bounds {mu} n={n}"));
    let t = Tableau::initial(mu);
    let support = Support::of(&t)?;
    let involutions: Vec<Permutation> = all_involutions(n).collect();
    let lower = mu.even_index_sum();
    let upper = (n - mu.odd_parts_count()) / 2;
    let found: Vec<Result<Option<String>>> = involutions
        .par_iter()
        .map(|pi| {
            if support.form_value(pi)? == 0 {
                return Ok(None);
            }
            let m = pi.involution_size()?;
            let mut problems = Vec::new();
            if !support.fixes_some_tabloid(pi) {
                problems.push("fixes no tabloid of supp(t)");
            }
            if !fixes_at_most_one_per_column(pi, &t) {
                problems.push("fixes two entries of a column");
            }
            if m < lower || m > upper {
                problems.push("size outside the bounds");
            }
            Ok((!problems.is_empty()).then(|| format!("{pi} (m={m}): {}", problems.join(", "))))
        })
        .collect();
    report.instances_checked = involutions.len() as u64;
    for f in found {
        if let Some(v) = f? {
            report.violations.push(v);
        }
    }
    Ok(report.timed(start))
}

/// Decides quadratic type of P^μ from the forms on the summands of
/// D^μ↓A_n, then compares with the closed-form criterion.
///
/// Involutions of 2.A_n other than z lie over the 4m-involutions of A_n with
/// m ≥ 1, and z contributes B(x,x) = 0, so those are the only candidates.
/// Since x ↦ B(πx, x) is additive up to Frobenius, a basis suffices.
pub fn verify_theorem_by_forms(mu: &Partition, limit_n: usize) -> Result<VerificationReport> {
    let start = Instant::now();
    if !mu.is_distinct() {
        return Err(Error::RepeatedParts(mu.clone()));
    }
    let n = mu.n();
    if n < THEOREM_MIN_N {
        return Err(Error::BelowMinimum {
            what: "form-based theorem check",
            n,
            min: THEOREM_MIN_N,
        });
    }
    check_limit("form-based theorem check", n, limit_n)?;
    let mut report = VerificationReport::new(format!("theorem {mu} n={n}"));
    if mu.length() == 1 {
        report.notes.push(
            "trivial module: no symplectic form to test; quadratic by the criterion with m = 0, \
             whereas the form argument only produces 4m-involutions with m > 0"
                .into(),
        );
        return Ok(report.timed(start));
    }

    let q = build_specht_quotient_with_limit(mu, limit_n)?;
    let restriction = restrict_and_split(&q)?;

    let mut self_dual = Vec::new();
    for (i, s) in restriction.summands.iter().enumerate() {
        if s.form_is_nondegenerate() {
            self_dual.push(i);
        } else if !s.form_is_zero() {
            return Err(Error::Inconsistent(format!(
                "form on summand {i} of D^{mu}↓A_n is neither zero nor nondegenerate"
            )));
        }
    }
    let observed_self_dual = !self_dual.is_empty();
    if !self_dual.is_empty() && self_dual.len() != restriction.summands.len() {
        report
            .violations
            .push("summands disagree on self-duality".into());
    }
    if self_dual.is_empty() {
        report
            .notes
            .push("summands are not self-dual; skipped".into());
    }

    let candidates: Vec<Permutation> = (1..)
        .map(|k| 4 * k)
        .take_while(|&m| 2 * m <= n)
        .flat_map(|m| enumerate_involutions(n, m))
        .collect();
    let witnesses: Vec<Vec<bool>> = candidates
        .par_iter()
        .map(|pi| -> Result<Vec<bool>> {
            let m = sn_action(&q, pi)?;
            self_dual
                .iter()
                .map(|&i| {
                    let diag = restriction.summands[i].quadratic_diagonal(&m)?;
                    Ok(diag.iter().any(|&v| v != Gf4::ZERO))
                })
                .collect()
        })
        .collect::<Result<_>>()?;
    report.instances_checked = (candidates.len() * self_dual.len()) as u64;

    let found: Vec<bool> = (0..self_dual.len())
        .map(|k| witnesses.iter().any(|w| w[k]))
        .collect();

    // Only now consult the closed forms.
    let record = classify(mu)?;
    if observed_self_dual != record.self_dual {
        report.violations.push(format!(
            "forms say self-dual = {observed_self_dual}, parity rule says {}",
            record.self_dual
        ));
    }
    let predicted = quadratic_criterion(mu)?;
    for (k, &i) in self_dual.iter().enumerate() {
        if found[k] != predicted {
            report.violations.push(format!(
                "summand {i}: quadratic witness {} but criterion says {predicted}",
                if found[k] { "found" } else { "not found" }
            ));
        }
    }
    Ok(report.timed(start))
}

/// Joint histograms of (ℓ, m_o) over O(n) and (|μ|_a, ℓ_o) over D(n).
pub fn verify_bijection_counts(n: usize) -> Result<VerificationReport> {
    let start = Instant::now();
    check_limit("bijection counts", n, BIJECTION_LIMIT_N)?;
    let mut report = VerificationReport::new(format!("bijection n={n}"));
    let mut odd: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for l in generate_odd(n) {
        *odd.entry((l.length(), l.odd_multiplicity_count()))
            .or_default() += 1;
        report.instances_checked += 1;
    }
    let mut distinct: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for m in generate_distinct(n) {
        *distinct
            .entry((m.alt_sum(), m.odd_parts_count()))
            .or_default() += 1;
        report.instances_checked += 1;
    }
    for key in odd.keys().chain(distinct.keys()).collect::<BTreeSet<_>>() {
        let (a, b) = (
            odd.get(key).copied().unwrap_or(0),
            distinct.get(key).copied().unwrap_or(0),
        );
        if a != b {
            report.violations.push(format!(
                "cell {key:?}: {a} odd-part partitions, {b} distinct-part"
            ));
        }
    }
    Ok(report.timed(start))
}

/// The induced form on D^μ is well defined, nonzero, alternating,
/// S_n-invariant and nondegenerate.
pub fn verify_wellposed_form(mu: &Partition, limit_n: usize) -> Result<VerificationReport> {
    let start = Instant::now();
    let n = mu.n();
    if mu.length() == 1 {
        return Err(Error::TrivialShape(n));
    }
    let q = build_specht_quotient_with_limit(mu, limit_n)?;
    let mut report = VerificationReport::new(format!("wellposed {mu} n={n}"));
    let b = match induced_form(&q) {
        Ok(b) => b,
        Err(e) => {
            report.violations.push(e.to_string());
            return Ok(report.timed(start));
        }
    };
    report.instances_checked = 1;
    if b.is_zero() {
        report.violations.push("form is zero".into());
    }
    if !b.is_alternating() {
        report.violations.push("form is not alternating".into());
    }
    if b.rank() != q.dim() {
        report.violations.push(format!(
            "form has rank {} on a {}-dimensional module",
            b.rank(),
            q.dim()
        ));
    }
    for g in symmetric_generators(n)? {
        report.instances_checked += 1;
        let m = sn_action(&q, &g)?;
        if m.transpose().mul(&b).mul(&m) != b {
            report
                .violations
                .push(format!("form is not invariant under {g}"));
        }
    }
    Ok(report.timed(start))
}

/// D^μ is nonzero; for n ≥ 3 its restriction to A_n splits exactly when
/// the pair rule says so, and then into two non-isomorphic absolutely
/// irreducible summands.
pub fn verify_restriction(mu: &Partition, limit_n: usize) -> Result<VerificationReport> {
    let start = Instant::now();
    let n = mu.n();
    let q = build_specht_quotient_with_limit(mu, limit_n)?;
    let mut report = VerificationReport::new(format!("restriction {mu} n={n}"));
    report.instances_checked = 1;
    if q.dim() == 0 {
        report.violations.push("D^μ is zero".into());
    }
    if n < 3 {
        report
            .notes
            .push("A_n is trivial; splitting not tested".into());
        return Ok(report.timed(start));
    }
    let r = restrict_and_split(&q)?;
    let predicted = restriction_splits(mu)?;
    if r.splits() != predicted {
        report.violations.push(format!(
            "commutant has dimension {}, pair rule predicts split = {predicted}",
            r.commutant_dim
        ));
    }
    if r.splits() {
        report.instances_checked += 3;
        let (a, b) = (&r.summands[0], &r.summands[1]);
        if intertwiner_dim(a, b) != 0 {
            report.violations.push("summands are isomorphic".into());
        }
        for (i, s) in r.summands.iter().enumerate() {
            if intertwiner_dim(s, s) != 1 {
                report
                    .violations
                    .push(format!("summand {i} is not absolutely irreducible"));
            }
        }
        if r.field() == specht::SplitField::Gf4 {
            report.notes.push("summands defined over GF(4)".into());
        }
    }
    Ok(report.timed(start))
}

/// Quadratic PIMs against strongly real classes, and all PIM labels against
/// all 2-regular classes.
pub fn verify_count_consistency(n: usize) -> Result<VerificationReport> {
    let start = Instant::now();
    check_limit("count consistency", n, CONSISTENCY_LIMIT_N)?;
    let mut report = VerificationReport::new(format!("consistency n={n}"));
    let c = crate::classify::count_consistency(n)?;
    let (classes, labels) = crate::classify::label_counts(n)?;
    report.instances_checked = 2;
    if !c.equal {
        report.violations.push(format!(
            "{} strongly real classes, {} quadratic PIMs",
            c.strongly_real_count, c.quadratic_pim_count
        ));
    }
    if classes != labels {
        report
            .violations
            .push(format!("{classes} 2-regular classes, {labels} PIM labels"));
    }
    Ok(report.timed(start))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Subject {
    Intervals,
    Bounds,
    Theorem,
    Wellposed,
    Restriction,
    Bijection,
    Consistency,
}

impl Subject {
    pub const ALL: [Subject; 7] = [
        Subject::Intervals,
        Subject::Bounds,
        Subject::Theorem,
        Subject::Wellposed,
        Subject::Restriction,
        Subject::Bijection,
        Subject::Consistency,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Subject::Intervals => "intervals",
            Subject::Bounds => "bounds",
            Subject::Theorem => "theorem",
            Subject::Wellposed => "wellposed",
            Subject::Restriction => "restriction",
            Subject::Bijection => "bijection",
            Subject::Consistency => "consistency",
        }
    }
}

impl fmt::Display for Subject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Subject {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Subject::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown subject {s:?}"))
    }
}

#[derive(Clone, Debug)]
pub struct SweepConfig {
    pub max_n: usize,
    /// Cap on n for module-building and form-sweeping subjects.
    pub limit_n: usize,
    pub subjects: Vec<Subject>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            max_n: DEFAULT_FORM_LIMIT_N,
            limit_n: DEFAULT_FORM_LIMIT_N,
            subjects: Subject::ALL.to_vec(),
        }
    }
}

#[derive(Clone, Debug)]
enum Task {
    Interval(Partition),
    Bounds(Partition),
    Theorem(Partition),
    Wellposed(Partition),
    Restriction(Partition),
    Bijection(usize),
    Consistency(usize),
}

impl Task {
    fn label(&self) -> String {
        match self {
            Task::Interval(l) => format!("intervals {l} n={}", l.n()),
            Task::Bounds(m) => format!("bounds {m} n={}", m.n()),
            Task::Theorem(m) => format!("theorem {m} n={}", m.n()),
            Task::Wellposed(m) => format!("wellposed {m} n={}", m.n()),
            Task::Restriction(m) => format!("restriction {m} n={}", m.n()),
            Task::Bijection(n) => format!("bijection n={n}"),
            Task::Consistency(n) => format!("consistency n={n}"),
        }
    }

    fn run(&self, limit_n: usize) -> VerificationReport {
        let result = match self {
            Task::Interval(l) => verify_inversion_interval(l),
            Task::Bounds(m) => verify_form_bounds(m, limit_n),
            Task::Theorem(m) => verify_theorem_by_forms(m, limit_n),
            Task::Wellposed(m) => verify_wellposed_form(m, limit_n),
            Task::Restriction(m) => verify_restriction(m, limit_n),
            Task::Bijection(n) => verify_bijection_counts(*n),
            Task::Consistency(n) => verify_count_consistency(*n),
        };
        result.unwrap_or_else(|e| {
            let mut r = VerificationReport::new(self.label());
            r.violations.push(format!("error: {e}"));
            r
        })
    }
}

fn tasks(config: &SweepConfig) -> Vec<Task> {
    let form_n = config.max_n.min(config.limit_n);
    let mut out = Vec::new();
    let mut subjects = config.subjects.clone();
    subjects.sort();
    subjects.dedup();
    for s in subjects {
        match s {
            Subject::Intervals => {
                for n in 1..=config.max_n.min(INTERVAL_LIMIT_N) {
                    out.extend(generate_odd(n).into_iter().map(Task::Interval));
                }
            }
            Subject::Bounds => {
                for n in 1..=form_n {
                    out.extend(generate_distinct(n).into_iter().map(Task::Bounds));
                }
            }
            Subject::Theorem => {
                for n in THEOREM_MIN_N..=form_n {
                    out.extend(generate_distinct(n).into_iter().map(Task::Theorem));
                }
            }
            Subject::Wellposed => {
                for n in 1..=form_n {
                    out.extend(
                        generate_distinct(n)
                            .into_iter()
                            .filter(|m| m.length() > 1)
                            .map(Task::Wellposed),
                    );
                }
            }
            Subject::Restriction => {
                for n in 1..=form_n {
                    out.extend(generate_distinct(n).into_iter().map(Task::Restriction));
                }
            }
            Subject::Bijection => {
                out.extend((1..=config.max_n.min(BIJECTION_LIMIT_N)).map(Task::Bijection))
            }
            Subject::Consistency => out.extend(
                (THEOREM_MIN_N..=config.max_n.min(CONSISTENCY_LIMIT_N)).map(Task::Consistency),
            ),
        }
    }
    out
}

/// Runs every selected subject over its n-range (capped by `max_n` and, for
/// module-level subjects, `limit_n`). Reports come back in a fixed order:
/// by subject, then n, then partition.
pub fn run_sweep(config: &SweepConfig) -> Result<Vec<VerificationReport>> {
    if config.limit_n > MAX_FORM_LIMIT_N {
        return Err(Error::LimitExceeded {
            what: "form limit",
            n: config.limit_n,
            limit: MAX_FORM_LIMIT_N,
        });
    }
    Ok(tasks(config)
        .par_iter()
        .map(|t| t.run(config.limit_n))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn interval_examples() {
        let r = verify_inversion_interval(&p("3")).unwrap();
        assert!(r.passed());
        assert_eq!(r.instances_checked, 4);
        assert!(verify_inversion_interval(&Partition::ones(5))
            .unwrap()
            .passed());
        let r = verify_inversion_interval(&p("3,3,1")).unwrap();
        assert!(r.passed());
        assert_eq!(r.instances_checked, 232);
        assert!(matches!(
            verify_inversion_interval(&Partition::ones(11)),
            Err(Error::LimitExceeded { .. })
        ));
    }

    #[test]
    fn bounds_examples() {
        for s in ["2,1", "5", "4,3,1"] {
            let r = verify_form_bounds(&p(s), 8).unwrap();
            assert!(r.passed(), "{s}: {:?}", r.violations);
        }
    }

    #[test]
    fn theorem_examples() {
        for s in ["4,1", "3,2", "7,1", "6,2", "5,2,1", "5,3"] {
            let r = verify_theorem_by_forms(&p(s), 8).unwrap();
            assert!(r.passed(), "{s}: {:?}", r.violations);
        }
        let r = verify_theorem_by_forms(&p("5,3"), 8).unwrap();
        assert_eq!(r.instances_checked, 0);
        assert!(!r.notes.is_empty());
        let r = verify_theorem_by_forms(&p("8"), 8).unwrap();
        assert!(r.passed() && !r.notes.is_empty());
    }

    #[test]
    fn six_two_has_a_witness() {
        // [2,4] contains 4, so some fixed-point-free involution must work
        let r = verify_theorem_by_forms(&p("6,2"), 8).unwrap();
        assert!(r.passed());
        assert_eq!(r.instances_checked, 105);
    }

    #[test]
    fn bijection_examples() {
        for n in [1, 7, 13] {
            assert!(verify_bijection_counts(n).unwrap().passed());
        }
        assert_eq!(verify_bijection_counts(7).unwrap().instances_checked, 10);
    }

    #[test]
    fn wellposed_examples() {
        assert!(verify_wellposed_form(&p("2,1"), 8).unwrap().passed());
        assert!(matches!(
            verify_wellposed_form(&p("4"), 8),
            Err(Error::TrivialShape(4))
        ));
    }

    #[test]
    fn small_sweep_passes() {
        let config = SweepConfig {
            max_n: 6,
            limit_n: 6,
            subjects: Subject::ALL.to_vec(),
        };
        let reports = run_sweep(&config).unwrap();
        for r in &reports {
            assert!(r.passed(), "{}: {:?}", r.subject, r.violations);
        }
        let again = run_sweep(&config).unwrap();
        let names =
            |rs: &[VerificationReport]| rs.iter().map(|r| r.subject.clone()).collect::<Vec<_>>();
        assert_eq!(names(&reports), names(&again));
    }

    #[test]
    fn resource_errors_become_violations() {
        let config = SweepConfig {
            max_n: 9,
            limit_n: 9,
            subjects: vec![Subject::Bounds],
        };
        assert!(run_sweep(&config)
            .unwrap()
            .iter()
            .all(VerificationReport::passed));
        let bad = SweepConfig {
            limit_n: 11,
            ..SweepConfig::default()
        };
        assert!(run_sweep(&bad).is_err());
    }
}
