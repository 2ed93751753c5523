//! Integer partitions and the statistics the criteria are phrased in.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A partition of `n`: weakly decreasing positive parts.
///
/// The empty partition (n = 0) is allowed so that pairing logic can pad with
/// a trailing zero without a separate type.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
    n: usize,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} has a non-positive part"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        let n = parts.iter().sum();
        Ok(Partition { parts, n })
    }

    /// Sorts arbitrary positive parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts)
    }

    pub fn empty() -> Self {
        Partition {
            parts: Vec::new(),
            n: 0,
        }
    }

    /// The one-row partition (n).
    pub fn single(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![n], n }
        }
    }

    /// (1^n)
    pub fn ones(n: usize) -> Self {
        Partition {
            parts: vec![1; n],
            n,
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of parts, ℓ(λ).
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_distinct(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    pub fn all_parts_odd(&self) -> bool {
        self.parts.iter().all(|p| p % 2 == 1)
    }

    /// μ₁ − μ₂ + μ₃ − …, written |μ|_a.
    pub fn alt_sum(&self) -> usize {
        // Non-negative for any weakly decreasing sequence.
        let (odd, even) = self
            .parts
            .iter()
            .enumerate()
            .fold(
                (0, 0),
                |(o, e), (i, &p)| {
                    if i % 2 == 0 {
                        (o + p, e)
                    } else {
                        (o, e + p)
                    }
                },
            );
        odd - even
    }

    /// μ₂ + μ₄ + …, which equals (n − |μ|_a)/2.
    pub fn even_index_sum(&self) -> usize {
        self.parts.iter().skip(1).step_by(2).sum()
    }

    /// Number of odd parts, ℓ_o(μ).
    pub fn odd_parts_count(&self) -> usize {
        self.parts.iter().filter(|&&p| p % 2 == 1).count()
    }

    /// Number of distinct part values occurring with odd multiplicity, m_o(λ).
    pub fn odd_multiplicity_count(&self) -> usize {
        self.parts
            .chunk_by(|a, b| a == b)
            .filter(|run| run.len() % 2 == 1)
            .count()
    }

    /// Parts taken in consecutive pairs (μ₁,μ₂), (μ₃,μ₄), …, padded with a 0.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.parts
            .chunks(2)
            .map(|c| (c[0], c.get(1).copied().unwrap_or(0)))
            .collect()
    }

    /// Column lengths, i.e. the conjugate partition.
    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (0..width)
            .map(|c| self.parts.iter().filter(|&&p| p > c).count())
            .collect();
        Partition { parts, n: self.n }
    }

    /// Number of standard tableaux of this shape, by the hook length formula.
    pub fn standard_tableaux_count(&self) -> u128 {
        let conj = self.conjugate();
        let mut hooks: u128 = 1;
        for (r, &row) in self.parts.iter().enumerate() {
            for c in 0..row {
                let arm = row - c - 1;
                let leg = conj.parts[c] - r - 1;
                hooks *= (arm + leg + 1) as u128;
            }
        }
        (1..=self.n as u128).product::<u128>() / hooks
    }

    /// Comma-separated parts, e.g. `9,3,1`.
    pub fn to_text(&self) -> String {
        self.parts
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_text())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = s
            .strip_prefix('(')
            .and_then(|r| r.strip_suffix(')'))
            .unwrap_or(s);
        if inner.trim().is_empty() {
            return Err(Error::InvalidPartition("no parts given".into()));
        }
        let parts = inner
            .split(',')
            .map(|tok| {
                tok.trim().parse::<usize>().map_err(|_| {
                    Error::InvalidPartition(format!("bad part {:?} in {s:?}", tok.trim()))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

/// Depth-first generation, largest admissible part first, which yields
/// lexicographically decreasing order.
fn generate<F>(n: usize, admissible: F, strict: bool) -> Vec<Partition>
where
    F: Fn(usize) -> bool + Copy,
{
    fn rec<F: Fn(usize) -> bool + Copy>(
        remaining: usize,
        max_part: usize,
        admissible: F,
        strict: bool,
        current: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if remaining == 0 {
            out.push(Partition {
                parts: current.clone(),
                n: current.iter().sum(),
            });
            return;
        }
        for p in (1..=max_part.min(remaining)).rev() {
            if !admissible(p) {
                continue;
            }
            current.push(p);
            let next_max = if strict { p - 1 } else { p };
            rec(remaining - p, next_max, admissible, strict, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, admissible, strict, &mut Vec::new(), &mut out);
    out
}

/// 𝒟(n): partitions of `n` into distinct parts, lexicographically decreasing.
pub fn generate_distinct(n: usize) -> Vec<Partition> {
    generate(n, |_| true, true)
}

/// 𝒪(n): partitions of `n` into odd parts, lexicographically decreasing.
pub fn generate_odd(n: usize) -> Vec<Partition> {
    generate(n, |p| p % 2 == 1, false)
}

/// Every partition of `n`, lexicographically decreasing.
pub fn generate_all(n: usize) -> Vec<Partition> {
    generate(n, |_| true, false)
}
