//! Per-partition classification of the projective indecomposables P^μ of
//! 2.A_n in characteristic 2, and the class-side count that must match it.

use std::fmt;

use serde::Serialize;

use crate::classes::{
    contains_multiple_of_four, strongly_real_2regular_cover, two_regular_class_count_cover,
};
use crate::error::{Error, Result};
use crate::partitions::{generate_distinct, generate_odd, Partition};

/// Smallest n for which tables are produced.
pub const MIN_TABLE_N: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Quadratic,
    SelfDualNonQuadratic,
    NotSelfDual,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Quadratic => "quadratic",
            Status::SelfDualNonQuadratic => "non-quadratic",
            Status::NotSelfDual => "not self-dual",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PimRecord {
    pub mu: Partition,
    pub n: usize,
    pub lower: usize,
    pub upper: usize,
    pub restriction_splits: bool,
    pub self_dual: bool,
    pub status: Status,
    pub pim_count: u8,
}

impl PimRecord {
    /// "quadratic", "2 non-quadratic", "2 not self-dual" and so on.
    pub fn type_label(&self) -> String {
        if self.pim_count == 2 {
            format!("2 {}", self.status)
        } else {
            self.status.to_string()
        }
    }
}

fn require_distinct(mu: &Partition) -> Result<()> {
    if !mu.is_distinct() {
        return Err(Error::RepeatedParts(mu.clone()));
    }
    Ok(())
}

/// ((n−|μ|_a)/2, (n−ℓ_o(μ))/2).
pub fn bounds(mu: &Partition) -> (usize, usize) {
    let n = mu.n();
    let (alt, odd) = (mu.alt_sum(), mu.odd_parts_count());
    debug_assert!((n - alt).is_multiple_of(2) && (n - odd).is_multiple_of(2));
    ((n - alt) / 2, (n - odd) / 2)
}

/// Whether D^μ restricted to A_n is reducible: every pair (μ_{2j−1}, μ_{2j}),
/// padded with 0, differs by 1 or 2 and has sum ≢ 2 mod 4.
pub fn restriction_splits(mu: &Partition) -> Result<bool> {
    require_distinct(mu)?;
    Ok(mu
        .pairs()
        .iter()
        .all(|&(a, b)| matches!(a - b, 1 | 2) && (a + b) % 4 != 2))
}

/// Whether μ₂ + μ₄ + … is even; for split μ this decides whether the two
/// summands are self-dual.
pub fn split_summands_self_dual(mu: &Partition) -> bool {
    mu.even_index_sum().is_multiple_of(2)
}

/// Whether [lower, upper] contains a multiple of 4 (including 0).
pub fn quadratic_criterion(mu: &Partition) -> Result<bool> {
    require_distinct(mu)?;
    let (lower, upper) = bounds(mu);
    Ok(contains_multiple_of_four(lower, upper))
}

pub fn classify(mu: &Partition) -> Result<PimRecord> {
    let splits = restriction_splits(mu)?;
    let (lower, upper) = bounds(mu);
    assert!(lower <= upper, "bounds of {mu} are reversed");
    let self_dual = !splits || split_summands_self_dual(mu);
    let status = if !self_dual {
        Status::NotSelfDual
    } else if quadratic_criterion(mu)? {
        Status::Quadratic
    } else {
        Status::SelfDualNonQuadratic
    };
    Ok(PimRecord {
        mu: mu.clone(),
        n: mu.n(),
        lower,
        upper,
        restriction_splits: splits,
        self_dual,
        status,
        pim_count: if splits { 2 } else { 1 },
    })
}

/// One record per partition of n into distinct parts, lexicographically
/// decreasing.
pub fn pim_table(n: usize) -> Result<Vec<PimRecord>> {
    if n < MIN_TABLE_N {
        return Err(Error::BelowMinimum {
            what: "PIM table",
            n,
            min: MIN_TABLE_N,
        });
    }
    generate_distinct(n).iter().map(classify).collect()
}

/// Descending lower bound, then descending upper bound, then lexicographically
/// decreasing μ.
pub fn sort_by_bounds(records: &mut [PimRecord]) {
    records.sort_by(|a, b| (b.lower, b.upper, &b.mu).cmp(&(a.lower, a.upper, &a.mu)));
}

pub fn total_pim_count(records: &[PimRecord]) -> usize {
    records.iter().map(|r| r.pim_count as usize).sum()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountReport {
    pub n: usize,
    pub strongly_real_count: usize,
    pub quadratic_pim_count: usize,
    pub equal: bool,
}

/// Strongly real 2-regular classes of 2.A_n against quadratic-type PIMs.
pub fn count_consistency(n: usize) -> Result<CountReport> {
    let mut strongly_real_count = 0;
    for lambda in generate_odd(n) {
        if strongly_real_2regular_cover(&lambda)? {
            strongly_real_count += two_regular_class_count_cover(&lambda)? as usize;
        }
    }
    let quadratic_pim_count = pim_table(n)?
        .iter()
        .filter(|r| r.status == Status::Quadratic)
        .map(|r| r.pim_count as usize)
        .sum();
    Ok(CountReport {
        n,
        strongly_real_count,
        quadratic_pim_count,
        equal: strongly_real_count == quadratic_pim_count,
    })
}

/// (2-regular classes of 2.A_n, PIM labels): these agree by Brauer's count.
pub fn label_counts(n: usize) -> Result<(usize, usize)> {
    let classes = generate_odd(n)
        .iter()
        .map(|l| two_regular_class_count_cover(l).map(usize::from))
        .sum::<Result<usize>>()?;
    let labels = generate_distinct(n)
        .iter()
        .map(|m| restriction_splits(m).map(|s| if s { 2 } else { 1 }))
        .sum::<Result<usize>>()?;
    Ok((classes, labels))
}
