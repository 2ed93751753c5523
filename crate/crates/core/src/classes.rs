//! Conjugacy classes of S_n, A_n and 2.A_n labelled by cycle type: splitting,
//! reality, and which classes of the double cover are strongly real.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::Partition;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassRecord {
    pub lambda: Partition,
    pub n: usize,
    pub splits_in_alt: bool,
    pub real_in_alt: bool,
    pub invert_interval: (usize, usize),
    pub strongly_real_in_cover: bool,
    pub class_count_in_cover: u8,
}

fn require_even(lambda: &Partition) -> Result<()> {
    if !(lambda.n() - lambda.length()).is_multiple_of(2) {
        return Err(Error::OddClass(lambda.clone()));
    }
    Ok(())
}

fn require_all_odd(lambda: &Partition) -> Result<()> {
    if !lambda.all_parts_odd() {
        return Err(Error::EvenPart(lambda.clone()));
    }
    Ok(())
}

/// Whether C_λ ⊆ A_n breaks into two A_n-classes: distinct odd parts.
pub fn splits_in_alt(lambda: &Partition) -> Result<bool> {
    require_even(lambda)?;
    Ok(lambda.all_parts_odd() && lambda.is_distinct())
}

/// Whether the A_n-classes over λ are closed under inversion.
pub fn real_in_alt(lambda: &Partition) -> Result<bool> {
    Ok(!splits_in_alt(lambda)? || (lambda.n() - lambda.length()).is_multiple_of(4))
}

/// [(n−ℓ(λ))/2, (n−m_o(λ))/2]: the sizes of involutions inverting an element
/// of cycle type λ.
pub fn inversion_interval(lambda: &Partition) -> Result<(usize, usize)> {
    require_all_odd(lambda)?;
    let n = lambda.n();
    let (l, mo) = (lambda.length(), lambda.odd_multiplicity_count());
    assert!(
        (n - l).is_multiple_of(2) && (n - mo).is_multiple_of(2),
        "interval endpoints for {lambda} are not integers"
    );
    Ok(((n - l) / 2, (n - mo) / 2))
}

pub fn inverting_involution_sizes(lambda: &Partition) -> Result<BTreeSet<usize>> {
    let (lo, hi) = inversion_interval(lambda)?;
    Ok((lo..=hi).collect())
}

/// Whether [lo, hi] contains some 4m with m ≥ 0.
pub fn contains_multiple_of_four(lo: usize, hi: usize) -> bool {
    lo <= hi && lo.div_ceil(4) * 4 <= hi
}

/// Whether the 2-regular classes of 2.A_n over λ are strongly real.
pub fn strongly_real_2regular_cover(lambda: &Partition) -> Result<bool> {
    let (lo, hi) = inversion_interval(lambda)?;
    Ok(contains_multiple_of_four(lo, hi))
}

/// Whether the preimages in 2.A_n of a 2m-involution of A_n are involutions.
pub fn lifts_to_involution(m: usize) -> bool {
    m.is_multiple_of(2)
}

/// Number of 2-regular classes of 2.A_n lying over C_λ.
pub fn two_regular_class_count_cover(lambda: &Partition) -> Result<u8> {
    require_all_odd(lambda)?;
    Ok(if lambda.is_distinct() { 2 } else { 1 })
}

pub fn class_record(lambda: &Partition) -> Result<ClassRecord> {
    require_all_odd(lambda)?;
    Ok(ClassRecord {
        lambda: lambda.clone(),
        n: lambda.n(),
        splits_in_alt: splits_in_alt(lambda)?,
        real_in_alt: real_in_alt(lambda)?,
        invert_interval: inversion_interval(lambda)?,
        strongly_real_in_cover: strongly_real_2regular_cover(lambda)?,
        class_count_in_cover: two_regular_class_count_cover(lambda)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{generate_all, generate_odd};
    use crate::permgroup::{all_involutions, class_representative, Permutation};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn all_permutations(n: usize) -> Vec<Permutation> {
        fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
            if prefix.len() == used.len() {
                out.push(Permutation::from_images(prefix).unwrap());
                return;
            }
            for i in 0..used.len() {
                if !used[i] {
                    used[i] = true;
                    prefix.push(i + 1);
                    rec(prefix, used, out);
                    prefix.pop();
                    used[i] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), &mut vec![false; n], &mut out);
        out
    }

    #[test]
    fn splitting_and_reality_examples() {
        assert!(splits_in_alt(&p("9,3,1")).unwrap());
        assert!(!splits_in_alt(&p("3,3,1")).unwrap());
        assert!(!splits_in_alt(&p("2,2,1")).unwrap());
        assert!(matches!(splits_in_alt(&p("2,1")), Err(Error::OddClass(_))));
        assert!(!real_in_alt(&p("9,3,1")).unwrap());
        assert!(real_in_alt(&p("5,1,1,1,1")).unwrap());
        assert!(real_in_alt(&Partition::ones(6)).unwrap());
    }

    #[test]
    fn interval_examples() {
        assert_eq!(inversion_interval(&p("3")).unwrap(), (1, 1));
        assert_eq!(inversion_interval(&Partition::ones(5)).unwrap(), (0, 2));
        assert_eq!(
            inverting_involution_sizes(&p("3,3,1")).unwrap(),
            [2, 3].into()
        );
        assert_eq!(inversion_interval(&p("5,3,1,1,1,1,1")).unwrap(), (3, 5));
        assert!(matches!(
            inversion_interval(&p("4,1")),
            Err(Error::EvenPart(_))
        ));
    }

    #[test]
    fn strong_reality_examples() {
        assert!(!strongly_real_2regular_cover(&p("13")).unwrap());
        assert!(strongly_real_2regular_cover(&Partition::ones(13)).unwrap());
        assert!(strongly_real_2regular_cover(&p("5,3,1,1,1,1,1")).unwrap());
        assert!(lifts_to_involution(2));
        assert!(!lifts_to_involution(1));
        assert!(lifts_to_involution(0));
        assert_eq!(two_regular_class_count_cover(&p("9,3,1")).unwrap(), 2);
        assert_eq!(two_regular_class_count_cover(&p("3,3,1")).unwrap(), 1);
        assert_eq!(
            two_regular_class_count_cover(&Partition::ones(4)).unwrap(),
            1
        );
    }

    #[test]
    fn multiples_of_four() {
        for lo in 0..20 {
            for hi in lo..20 {
                let brute = (lo..=hi).any(|x| x % 4 == 0);
                assert_eq!(contains_multiple_of_four(lo, hi), brute, "[{lo},{hi}]");
            }
        }
        assert!(!contains_multiple_of_four(5, 3));
    }

    #[test]
    fn intervals_match_brute_force() {
        for n in 1..=8 {
            let involutions: Vec<_> = all_involutions(n).collect();
            for lambda in generate_odd(n) {
                let sigma = class_representative(&lambda);
                let seen: BTreeSet<usize> = involutions
                    .iter()
                    .filter(|pi| pi.inverts(&sigma).unwrap())
                    .map(|pi| pi.involution_size().unwrap())
                    .collect();
                assert_eq!(
                    seen,
                    inverting_involution_sizes(&lambda).unwrap(),
                    "{lambda}"
                );
            }
        }
    }

    #[test]
    fn split_and_reality_match_brute_force() {
        for n in 2..=7 {
            let perms = all_permutations(n);
            let alt: Vec<_> = perms.iter().filter(|g| g.is_even()).collect();
            for lambda in generate_all(n)
                .into_iter()
                .filter(|l| (n - l.length()) % 2 == 0)
            {
                let sigma = class_representative(&lambda);
                let alt_class: BTreeSet<_> =
                    alt.iter().map(|g| sigma.conjugate(g).unwrap()).collect();
                let sym_size = perms.iter().filter(|g| g.cycle_type() == lambda).count();
                assert_eq!(
                    alt_class.len() < sym_size,
                    splits_in_alt(&lambda).unwrap(),
                    "{lambda}"
                );
                assert_eq!(
                    alt_class.contains(&sigma.inverse()),
                    real_in_alt(&lambda).unwrap(),
                    "{lambda}"
                );
            }
        }
    }

    #[test]
    fn distinct_parts_collapse_the_interval() {
        for n in 1..=25 {
            for lambda in generate_odd(n).into_iter().filter(Partition::is_distinct) {
                let (lo, hi) = inversion_interval(&lambda).unwrap();
                assert_eq!(lo, hi);
            }
        }
    }

    #[test]
    fn strong_reality_implies_reality() {
        for n in 1..=25 {
            for lambda in generate_odd(n) {
                if strongly_real_2regular_cover(&lambda).unwrap() {
                    assert!(real_in_alt(&lambda).unwrap(), "{lambda}");
                }
            }
        }
    }
}
