use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use pimquad::classes::{inversion_interval, strongly_real_2regular_cover};
use pimquad::classify::{bounds, classify, restriction_splits, split_summands_self_dual, Status};
use pimquad::gf2::{solve_commutant, BitMatrix, BitVector, Echelon};
use pimquad::partitions::{generate_distinct, generate_odd, Partition};
use pimquad::permgroup::{all_involutions, involution_count, Permutation};
use pimquad::specht::{form_value, Tableau};

fn pick(all: Vec<Partition>, i: prop::sample::Index) -> Partition {
    all[i.index(all.len())].clone()
}

fn distinct_partition(max_n: usize) -> impl Strategy<Value = Partition> {
    (1..=max_n, any::<prop::sample::Index>()).prop_map(|(n, i)| pick(generate_distinct(n), i))
}

fn odd_partition(max_n: usize) -> impl Strategy<Value = Partition> {
    (1..=max_n, any::<prop::sample::Index>()).prop_map(|(n, i)| pick(generate_odd(n), i))
}

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    any::<u64>().prop_map(move |s| Permutation::random(n, &mut ChaCha8Rng::seed_from_u64(s)))
}

#[test]
fn euler_equinumerosity() {
    for n in 0..=50 {
        assert_eq!(generate_distinct(n).len(), generate_odd(n).len(), "n = {n}");
    }
}

#[test]
fn involution_counts_follow_recurrence() {
    let mut a = vec![1u128, 1];
    for n in 2..=30 {
        a.push(a[n - 1] + (n as u128 - 1) * a[n - 2]);
    }
    for (n, &want) in a.iter().enumerate() {
        assert_eq!(
            (0..=n / 2).map(|m| involution_count(n, m)).sum::<u128>(),
            want
        );
        if n <= 10 {
            assert_eq!(all_involutions(n).count() as u128, want);
        }
    }
}

proptest! {
    #[test]
    fn partition_statistics_are_consistent(mu in distinct_partition(40)) {
        let n = mu.n();
        prop_assert!(mu.alt_sum() >= mu.odd_parts_count());
        prop_assert_eq!((n - mu.alt_sum()) % 2, 0);
        prop_assert_eq!((n - mu.odd_parts_count()) % 2, 0);
        prop_assert_eq!(bounds(&mu).0, mu.even_index_sum());
        prop_assert_eq!(mu.conjugate().conjugate(), mu.clone());
    }

    #[test]
    fn classification_is_coherent(mu in distinct_partition(40)) {
        let r = classify(&mu).unwrap();
        if r.status == Status::Quadratic {
            prop_assert!(r.self_dual);
        }
        if restriction_splits(&mu).unwrap() {
            prop_assert_eq!(r.self_dual, split_summands_self_dual(&mu));
            prop_assert_eq!(r.lower, r.upper);
        } else {
            prop_assert!(r.self_dual);
        }
    }

    #[test]
    fn class_intervals_are_ordered(lambda in odd_partition(40)) {
        let (lo, hi) = inversion_interval(&lambda).unwrap();
        prop_assert!(lo <= hi);
        if lambda.is_distinct() {
            prop_assert_eq!(lo, hi);
        }
        prop_assert_eq!(strongly_real_2regular_cover(&lambda).unwrap(), (lo..=hi).any(|x| x % 4 == 0));
    }

    #[test]
    fn permutation_group_laws(a in permutation(9), b in permutation(9), c in permutation(9)) {
        let ab_c = a.compose(&b).unwrap().compose(&c).unwrap();
        let a_bc = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert_eq!(ab_c, a_bc);
        prop_assert!(a.compose(&a.inverse()).unwrap().is_identity());
        prop_assert_eq!(a.conjugate(&b).unwrap().cycle_type(), a.cycle_type());
        prop_assert_eq!(a.compose(&b).unwrap().sign(), a.sign() * b.sign());
    }

    #[test]
    fn rank_nullity(r in 1usize..=300, c in 1usize..=300, seed in any::<u64>()) {
        let m = BitMatrix::random(r, c, &mut ChaCha8Rng::seed_from_u64(seed));
        let k = m.kernel();
        prop_assert_eq!(m.rank() + k.rows(), c);
        for v in k.row_vectors() {
            prop_assert!(m.mul_vec(v).is_zero());
        }
    }

    #[test]
    fn echelon_idempotence(r in 1usize..=150, c in 1usize..=150, seed in any::<u64>()) {
        let m = BitMatrix::random(r, c, &mut ChaCha8Rng::seed_from_u64(seed));
        let e = m.row_space();
        prop_assert_eq!(e.row_space(), e.clone());
        let mut ech = Echelon::new(c);
        for v in m.row_vectors() {
            ech.insert(v.clone());
        }
        prop_assert_eq!(ech.rank(), e.rows());
        for v in m.row_vectors() {
            prop_assert!(ech.contains(v));
        }
    }

    #[test]
    fn matrix_algebra(n in 1usize..=64, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, b) = (BitMatrix::random(n, n, &mut rng), BitMatrix::random(n, n, &mut rng));
        let v = BitVector::random(n, &mut rng);
        prop_assert_eq!(a.mul(&b).mul_vec(&v), a.mul_vec(&b.mul_vec(&v)));
        prop_assert_eq!(a.mul(&b).transpose(), b.transpose().mul(&a.transpose()));
        if let Some(inv) = a.inverse() {
            prop_assert!(a.mul(&inv).is_identity());
        } else {
            prop_assert!(a.rank() < n);
        }
    }

    #[test]
    fn commutant_commutes(n in 2usize..=24, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let gens = [BitMatrix::random(n, n, &mut rng), BitMatrix::random(n, n, &mut rng)];
        for x in solve_commutant(n, &gens) {
            for g in &gens {
                prop_assert_eq!(x.mul(g), g.mul(&x));
            }
        }
    }

    #[test]
    fn form_value_conjugation_covariance(
        mu in distinct_partition(8).prop_filter("n >= 2", |m| m.n() >= 2),
        seed in any::<u64>(),
        k in any::<prop::sample::Index>(),
    ) {
        let n = mu.n();
        let rho = Permutation::random(n, &mut ChaCha8Rng::seed_from_u64(seed));
        let invs: Vec<_> = all_involutions(n).collect();
        let pi = &invs[k.index(invs.len())];
        let t = Tableau::initial(&mu);
        let lhs = form_value(pi, &t.permuted(&rho).unwrap()).unwrap();
        let rhs = form_value(&pi.conjugate(&rho.inverse()).unwrap(), &t).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
