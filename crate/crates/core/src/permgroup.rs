//! Permutations of {1, …, n} and the involution enumeration that drives the
//! brute-force checks.
//!
//! Points are 1-based at the interface. Storage is 0-based.

use std::fmt;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::partitions::Partition;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Builds a permutation from 1-based images: `images[i-1]` is the image of `i`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut zero_based = Vec::with_capacity(n);
        for &im in images {
            if im == 0 || im > n || seen[im - 1] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection of 1..{n}"
                )));
            }
            seen[im - 1] = true;
            zero_based.push(im - 1);
        }
        Ok(Permutation { images: zero_based })
    }

    pub(crate) fn from_zero_based(images: Vec<usize>) -> Self {
        debug_assert!({
            let mut s = images.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &v)| i == v)
        });
        Permutation { images }
    }

    /// Product of disjoint or overlapping cycles on n points, given 1-based.
    /// Cycles are applied right to left, as in `(1,2)(2,3)`.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut perm = Permutation::identity(n);
        for cycle in cycles.iter().rev() {
            let mut images: Vec<usize> = (0..n).collect();
            let mut used = vec![false; n];
            for &p in cycle.iter() {
                if p == 0 || p > n || used[p - 1] {
                    return Err(Error::InvalidPermutation(format!(
                        "bad cycle {cycle:?} on {n} points"
                    )));
                }
                used[p - 1] = true;
            }
            for (k, &p) in cycle.iter().enumerate() {
                images[p - 1] = cycle[(k + 1) % cycle.len()] - 1;
            }
            perm = Permutation { images }.compose(&perm)?;
        }
        Ok(perm)
    }

    /// Parses cycle notation such as `(1,2,3)(4,5)`; `()` is the identity.
    pub fn parse_cycles(s: &str, n: usize) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = s.as_str();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .and_then(|r| r.find(')').map(|end| (&r[..end], &r[end + 1..])))
                .ok_or_else(|| {
                    Error::InvalidPermutation(format!("malformed cycle notation {s:?}"))
                })?;
            if !body.0.is_empty() {
                let cycle = body
                    .0
                    .split(',')
                    .map(|t| {
                        t.parse::<usize>()
                            .map_err(|_| Error::InvalidPermutation(format!("bad point {t:?}")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                cycles.push(cycle);
            }
            rest = body.1;
        }
        let refs: Vec<&[usize]> = cycles.iter().map(|c| c.as_slice()).collect();
        Self::from_cycles(n, &refs)
    }

    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.shuffle(rng);
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `i`.
    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1] + 1
    }

    /// 0-based image table.
    pub(crate) fn table(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    fn check_degree(&self, other: &Permutation) -> Result<()> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(())
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        self.check_degree(other)?;
        Ok(Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v] = i;
        }
        Permutation { images }
    }

    /// x σ x⁻¹, i.e. σ relabelled by x.
    pub fn conjugate(&self, x: &Permutation) -> Result<Permutation> {
        self.check_degree(x)?;
        let mut images = vec![0; self.degree()];
        for (i, &v) in self.images.iter().enumerate() {
            images[x.images[i]] = x.images[v];
        }
        Ok(Permutation { images })
    }

    /// Disjoint cycles (0-based), each starting at its smallest point, including fixed points.
    fn cycles_zero_based(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut j = self.images[start];
            while j != start {
                seen[j] = true;
                cycle.push(j);
                j = self.images[j];
            }
            out.push(cycle);
        }
        out
    }

    /// Non-trivial cycles, 1-based.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        self.cycles_zero_based()
            .into_iter()
            .filter(|c| c.len() > 1)
            .map(|c| c.into_iter().map(|p| p + 1).collect())
            .collect()
    }

    pub fn cycle_type(&self) -> Partition {
        let lengths = self.cycles_zero_based().iter().map(|c| c.len()).collect();
        Partition::from_unsorted(lengths).expect("cycle lengths are positive")
    }

    pub fn sign(&self) -> i8 {
        let cycles = self.cycles_zero_based().len();
        if (self.degree() - cycles).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    pub fn is_even(&self) -> bool {
        self.sign() == 1
    }

    pub fn squares_to_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &v)| self.images[v] == i)
    }

    /// The number m of 2-cycles of an involution.
    pub fn involution_size(&self) -> Result<usize> {
        if !self.squares_to_identity() {
            return Err(Error::NotInvolution(self.to_string()));
        }
        Ok(self
            .images
            .iter()
            .enumerate()
            .filter(|&(i, &v)| i != v)
            .count()
            / 2)
    }

    /// True iff π σ π⁻¹ = σ⁻¹.
    pub fn inverts(&self, sigma: &Permutation) -> Result<bool> {
        Ok(sigma.conjugate(self)? == sigma.inverse())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let body: Vec<String> = c.iter().map(|p| p.to_string()).collect();
            write!(f, "({})", body.join(","))?;
        }
        Ok(())
    }
}

/// The canonical element of cycle type λ: consecutive blocks of points as cycles.
pub fn class_representative(lambda: &Partition) -> Permutation {
    let mut images = Vec::with_capacity(lambda.n());
    let mut start = 0;
    for &part in lambda.parts() {
        for k in 0..part {
            images.push(start + (k + 1) % part);
        }
        start += part;
    }
    Permutation { images }
}

/// Number of m-involutions in S_n: n! / (2^m m! (n−2m)!).
pub fn involution_count(n: usize, m: usize) -> u128 {
    if 2 * m > n {
        return 0;
    }
    // Choose 2m points, then a perfect matching on them.
    let mut choose: u128 = 1;
    for i in 0..(2 * m) as u128 {
        choose = choose * (n as u128 - i) / (i + 1);
    }
    let matchings: u128 = (1..=m as u128).map(|k| 2 * k - 1).product();
    choose * matchings
}

const UNSET: usize = usize::MAX;

/// Streams every m-involution of S_n exactly once.
///
/// Depth-first over the smallest undecided point, which is either fixed or
/// paired with a larger undecided point.
pub struct Involutions {
    images: Vec<usize>,
    stack: Vec<(usize, usize)>,
    fixed_left: usize,
    pairs_left: usize,
    started: bool,
    done: bool,
}

impl Involutions {
    fn next_choice(&self, p: usize, from: usize) -> Option<usize> {
        let n = self.images.len();
        (from..n).find(|&c| {
            if c == p {
                self.fixed_left > 0
            } else {
                c > p && self.images[c] == UNSET && self.pairs_left > 0
            }
        })
    }

    fn apply(&mut self, p: usize, c: usize) {
        if c == p {
            self.images[p] = p;
            self.fixed_left -= 1;
        } else {
            self.images[p] = c;
            self.images[c] = p;
            self.pairs_left -= 1;
        }
        self.stack.push((p, c));
    }

    fn undo(&mut self, p: usize, c: usize) {
        self.images[p] = UNSET;
        if c == p {
            self.fixed_left += 1;
        } else {
            self.images[c] = UNSET;
            self.pairs_left += 1;
        }
    }

    fn search(&mut self, mut backtrack: bool) -> bool {
        loop {
            if backtrack {
                let Some((p, c)) = self.stack.pop() else {
                    return false;
                };
                self.undo(p, c);
                if let Some(c2) = self.next_choice(p, c + 1) {
                    self.apply(p, c2);
                    backtrack = false;
                }
            } else {
                match self.images.iter().position(|&v| v == UNSET) {
                    None => return true,
                    Some(p) => match self.next_choice(p, p) {
                        Some(c) => self.apply(p, c),
                        None => backtrack = true,
                    },
                }
            }
        }
    }
}

impl Iterator for Involutions {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        let found = self.search(self.started);
        self.started = true;
        if found {
            Some(Permutation {
                images: self.images.clone(),
            })
        } else {
            self.done = true;
            None
        }
    }
}

/// Every m-involution of S_n. The identity is the m = 0 case.
pub fn enumerate_involutions(n: usize, m: usize) -> Involutions {
    let feasible = 2 * m <= n;
    Involutions {
        images: vec![UNSET; n],
        stack: Vec::new(),
        fixed_left: if feasible { n - 2 * m } else { 0 },
        pairs_left: m,
        started: false,
        done: !feasible,
    }
}

/// Every element of S_n squaring to the identity, identity included.
pub fn all_involutions(n: usize) -> impl Iterator<Item = Permutation> {
    (0..=n / 2).flat_map(move |m| enumerate_involutions(n, m))
}

/// The fixed generating pair of A_n used for restriction: (1,2,3) with
/// (1,2,…,n) for odd n or (2,3,…,n) for even n.
pub fn alternating_generators(n: usize) -> Result<[Permutation; 2]> {
    if n < 3 {
        return Err(Error::BelowMinimum {
            what: "A_n generators",
            n,
            min: 3,
        });
    }
    let three = Permutation::from_cycles(n, &[&[1, 2, 3]])?;
    let long: Vec<usize> = if n % 2 == 1 {
        (1..=n).collect()
    } else {
        (2..=n).collect()
    };
    Ok([three, Permutation::from_cycles(n, &[&long])?])
}

/// The transposition (1,2) and the long cycle (1,…,n), generating S_n.
pub fn symmetric_generators(n: usize) -> Result<[Permutation; 2]> {
    if n < 2 {
        return Err(Error::BelowMinimum {
            what: "S_n generators",
            n,
            min: 2,
        });
    }
    let long: Vec<usize> = (1..=n).collect();
    Ok([
        Permutation::from_cycles(n, &[&[1, 2]])?,
        Permutation::from_cycles(n, &[&long])?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::generate_all;
    use std::collections::HashSet;

    fn perm(n: usize, s: &str) -> Permutation {
        Permutation::parse_cycles(s, n).unwrap()
    }

    #[test]
    fn cycle_types() {
        assert_eq!(Permutation::identity(5).cycle_type(), Partition::ones(5));
        assert_eq!(perm(3, "(1,2,3)").cycle_type(), Partition::single(3));
        assert_eq!(perm(5, "(1,2)(3,4)").cycle_type(), "2,2,1".parse().unwrap());
    }

    #[test]
    fn group_operations() {
        let s = perm(3, "(1,2,3)");
        assert!(s.compose(&s.inverse()).unwrap().is_identity());
        assert_eq!(s.conjugate(&perm(3, "(1,2)")).unwrap(), perm(3, "(1,3,2)"));
        let t = perm(4, "(1,3)(2,4)");
        assert_eq!(t.inverse(), t);
        assert!(s.compose(&Permutation::identity(4)).is_err());
        // Right to left: 1→1→2, 2→3→3, 3→2→1.
        assert_eq!(perm(3, "(1,2)(2,3)"), perm(3, "(1,2,3)"));
    }

    #[test]
    fn involution_sizes() {
        assert_eq!(Permutation::identity(4).involution_size().unwrap(), 0);
        assert_eq!(perm(4, "(1,2)(3,4)").involution_size().unwrap(), 2);
        assert_eq!(perm(5, "(1,5)").involution_size().unwrap(), 1);
        assert!(perm(3, "(1,2,3)").involution_size().is_err());
    }

    #[test]
    fn enumeration_small() {
        let got: Vec<_> = enumerate_involutions(4, 2).collect();
        let want = [
            perm(4, "(1,2)(3,4)"),
            perm(4, "(1,3)(2,4)"),
            perm(4, "(1,4)(2,3)"),
        ];
        assert_eq!(got.len(), 3);
        assert_eq!(
            got.iter().collect::<HashSet<_>>(),
            want.iter().collect::<HashSet<_>>()
        );
        assert_eq!(enumerate_involutions(3, 1).count(), 3);
        assert_eq!(
            enumerate_involutions(5, 0).collect::<Vec<_>>(),
            vec![Permutation::identity(5)]
        );
        assert_eq!(enumerate_involutions(3, 2).count(), 0);
        assert_eq!(enumerate_involutions(0, 0).count(), 1);
    }

    #[test]
    fn enumeration_matches_closed_form_and_recurrence() {
        // I(n) = I(n−1) + (n−1) I(n−2)
        let mut recurrence = vec![1u128, 1];
        for n in 2..=12 {
            let next = recurrence[n - 1] + (n as u128 - 1) * recurrence[n - 2];
            recurrence.push(next);
        }
        for (n, &expected) in recurrence.iter().enumerate().take(11) {
            let mut total = 0u128;
            let mut seen = HashSet::new();
            for m in 0..=n / 2 {
                let mut count = 0u128;
                for p in enumerate_involutions(n, m) {
                    assert!(p.squares_to_identity());
                    assert_eq!(p.involution_size().unwrap(), m);
                    assert!(seen.insert(p));
                    count += 1;
                }
                assert_eq!(count, involution_count(n, m), "n={n} m={m}");
                total += count;
            }
            assert_eq!(total, expected, "n={n}");
        }
        assert_eq!(all_involutions(12).count() as u128, recurrence[12]);
    }

    #[test]
    fn representatives() {
        assert_eq!(
            class_representative(&Partition::single(3)),
            perm(3, "(1,2,3)")
        );
        assert_eq!(
            class_representative(&"3,1,1".parse().unwrap()),
            perm(5, "(1,2,3)")
        );
        for n in 1..=10 {
            for lambda in generate_all(n) {
                let rep = class_representative(&lambda);
                assert_eq!(rep.cycle_type(), lambda);
                assert_eq!(rep.is_even(), (n - lambda.length()) % 2 == 0);
            }
        }
    }

    #[test]
    fn inversion() {
        let s = perm(3, "(1,2,3)");
        assert!(perm(3, "(1,3)").inverts(&s).unwrap());
        assert!(!Permutation::identity(3).inverts(&s).unwrap());
        assert!(perm(5, "(2,4)").inverts(&Permutation::identity(5)).unwrap());
    }

    #[test]
    fn signs() {
        assert_eq!(perm(4, "(2,3)").sign(), -1);
        assert_eq!(perm(4, "(2,3,4)").sign(), 1);
        assert!(!perm(4, "(1,2,3,4)").is_even());
    }

    #[test]
    fn notation() {
        assert_eq!(Permutation::identity(4).to_string(), "()");
        assert_eq!(perm(5, "(4,5)(1,2,3)").to_string(), "(1,2,3)(4,5)");
        assert_eq!(perm(5, "()"), Permutation::identity(5));
        assert!(Permutation::parse_cycles("(1,2", 3).is_err());
        assert!(Permutation::parse_cycles("(1,4)", 3).is_err());
        assert!(Permutation::from_images(&[1, 1, 2]).is_err());
        assert_eq!(
            Permutation::from_images(&[2, 3, 1]).unwrap(),
            perm(3, "(1,2,3)")
        );
    }

    #[test]
    fn generators() {
        let [a, b] = alternating_generators(6).unwrap();
        assert_eq!(a, perm(6, "(1,2,3)"));
        assert_eq!(b, perm(6, "(2,3,4,5,6)"));
        assert!(a.is_even() && b.is_even());
        let [_, c] = alternating_generators(7).unwrap();
        assert_eq!(c.cycle_type(), Partition::single(7));
        assert!(alternating_generators(2).is_err());
    }

    #[test]
    fn alternating_generators_generate() {
        // Closure of the generating pair has order n!/2.
        for n in 3..=7 {
            let gens = alternating_generators(n).unwrap();
            let mut seen: HashSet<Permutation> = HashSet::new();
            let mut frontier = vec![Permutation::identity(n)];
            seen.insert(Permutation::identity(n));
            while let Some(p) = frontier.pop() {
                for g in &gens {
                    let q = g.compose(&p).unwrap();
                    if seen.insert(q.clone()) {
                        frontier.push(q);
                    }
                }
            }
            let order: usize = (1..=n).product::<usize>() / 2;
            assert_eq!(seen.len(), order, "n={n}");
        }
    }
}
