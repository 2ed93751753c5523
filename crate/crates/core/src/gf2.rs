//! Dense bit-packed linear algebra over GF(2).
//!
//! Rows are packed into `u64` words and elimination is XOR based. Pivoting is
//! deterministic (first column with a nonzero entry, first available row), so
//! every basis this module returns is reproducible.
//!
//! Matrices act on column vectors: `mul_vec` computes `M v`.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const WORD: usize = 64;

fn words_for(len: usize) -> usize {
    len.div_ceil(WORD)
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        BitVector {
            len,
            words: vec![0; words_for(len)],
        }
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(i, true);
        v
    }

    pub fn from_bits(bits: &[u8]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            v.set(i, b & 1 == 1);
        }
        v
    }

    pub fn random<R: Rng + ?Sized>(len: usize, rng: &mut R) -> Self {
        let mut v = BitVector {
            len,
            words: (0..words_for(len)).map(|_| rng.gen()).collect(),
        };
        v.clear_padding();
        v
    }

    fn clear_padding(&mut self) {
        let tail = self.len % WORD;
        if tail != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << tail) - 1;
            }
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    #[inline]
    pub fn xor_assign(&mut self, other: &BitVector) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    /// Standard dot product, as a bit.
    pub fn dot(&self, other: &BitVector) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.words
            .iter()
            .zip(&other.words)
            .fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones())
            & 1
            == 1
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(k, &w)| k * WORD + w.trailing_zeros() as usize)
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(k * WORD + t)
            })
        })
    }

    pub fn to_bits(&self) -> Vec<u8> {
        (0..self.len).map(|i| self.get(i) as u8).collect()
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = (0..self.len)
            .map(|i| if self.get(i) { '1' } else { '0' })
            .collect();
        write!(f, "[{s}]")
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    cols: usize,
    data: Vec<BitVector>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        BitMatrix {
            cols,
            data: vec![BitVector::zeros(cols); rows],
        }
    }

    pub fn identity(dim: usize) -> Self {
        BitMatrix {
            cols: dim,
            data: (0..dim).map(|i| BitVector::unit(dim, i)).collect(),
        }
    }

    pub fn from_rows(rows: Vec<BitVector>, cols: usize) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols), "row length mismatch");
        BitMatrix { cols, data: rows }
    }

    /// Test helper: rows of 0/1 entries.
    pub fn from_bits(rows: &[&[u8]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(rows.iter().map(|r| BitVector::from_bits(r)).collect(), cols)
    }

    pub fn random<R: Rng + ?Sized>(rows: usize, cols: usize, rng: &mut R) -> Self {
        BitMatrix {
            cols,
            data: (0..rows).map(|_| BitVector::random(cols, rng)).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.data.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &BitVector {
        &self.data[i]
    }

    pub fn row_vectors(&self) -> &[BitVector] {
        &self.data
    }

    pub fn into_rows(self) -> Vec<BitVector> {
        self.data
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.data[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.data[i].set(j, value);
    }

    pub fn is_square(&self) -> bool {
        self.rows() == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(BitVector::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.cols)
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zeros(self.cols, self.rows());
        for (i, row) in self.data.iter().enumerate() {
            for j in row.iter_ones() {
                t.data[j].set(i, true);
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    /// Symmetric with zero diagonal.
    pub fn is_alternating(&self) -> bool {
        self.is_symmetric() && (0..self.cols).all(|i| !self.get(i, i))
    }

    pub fn mul(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, other.rows(), "dimension mismatch in product");
        let data = self
            .data
            .iter()
            .map(|row| {
                let mut acc = BitVector::zeros(other.cols);
                for k in row.iter_ones() {
                    acc.xor_assign(&other.data[k]);
                }
                acc
            })
            .collect();
        BitMatrix {
            cols: other.cols,
            data,
        }
    }

    pub fn add(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(
            (self.rows(), self.cols),
            (other.rows(), other.cols),
            "dimension mismatch in sum"
        );
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            a.xor_assign(b);
        }
        out
    }

    /// `M v` for a column vector `v`.
    pub fn mul_vec(&self, v: &BitVector) -> BitVector {
        let mut out = BitVector::zeros(self.rows());
        for (i, row) in self.data.iter().enumerate() {
            if row.dot(v) {
                out.set(i, true);
            }
        }
        out
    }

    /// Stacks the rows of `self` above those of `other`.
    pub fn stack(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        BitMatrix {
            cols: self.cols,
            data,
        }
    }

    /// Reduced row echelon form in place; returns pivot columns.
    fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut next = 0;
        for col in 0..self.cols {
            if next == self.data.len() {
                break;
            }
            let Some(p) = (next..self.data.len()).find(|&r| self.data[r].get(col)) else {
                continue;
            };
            self.data.swap(next, p);
            let pivot_row = self.data[next].clone();
            for (r, row) in self.data.iter_mut().enumerate() {
                if r != next && row.get(col) {
                    row.xor_assign(&pivot_row);
                }
            }
            pivots.push(col);
            next += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref_in_place().len()
    }

    /// The canonical reduced row echelon basis of the row space.
    pub fn row_space(&self) -> BitMatrix {
        let mut m = self.clone();
        let r = m.rref_in_place().len();
        m.data.truncate(r);
        m
    }

    /// Basis (as rows) of `{v : M v = 0}`, one vector per free column in order.
    pub fn kernel(&self) -> BitMatrix {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let basis = (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = BitVector::unit(self.cols, f);
                for (r, &p) in pivots.iter().enumerate() {
                    if m.data[r].get(f) {
                        v.set(p, true);
                    }
                }
                v
            })
            .collect();
        BitMatrix {
            cols: self.cols,
            data: basis,
        }
    }

    pub fn inverse(&self) -> Option<BitMatrix> {
        if !self.is_square() {
            return None;
        }
        let d = self.cols;
        let mut tracker = Echelon::with_tracking(d, d);
        for row in &self.data {
            if !tracker.insert(row.clone()) {
                return None;
            }
        }
        // Row i of the inverse expresses e_i in terms of the rows of `self`.
        let rows = (0..d)
            .map(|i| {
                let (rem, combo) = tracker.reduce_tracked(&BitVector::unit(d, i));
                debug_assert!(rem.is_zero());
                combo
            })
            .collect();
        // Those combinations give X with X·self = I.
        Some(BitMatrix {
            cols: d,
            data: rows,
        })
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows(), self.cols)?;
        for row in &self.data {
            writeln!(f, "  {row:?}")?;
        }
        Ok(())
    }
}

/// An incrementally grown echelon basis.
///
/// Each stored row has a distinct pivot and is zero at the pivots of rows
/// stored before it, so reduction in insertion order is complete. With
/// tracking enabled, each row also records which inserted vectors it is a sum
/// of, which turns reduction into coordinate solving.
#[derive(Clone, Debug)]
pub struct Echelon {
    cols: usize,
    rows: Vec<BitVector>,
    pivots: Vec<usize>,
    combos: Option<Vec<BitVector>>,
    capacity: usize,
    inserted: usize,
}

impl Echelon {
    pub fn new(cols: usize) -> Self {
        Echelon {
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
            combos: None,
            capacity: 0,
            inserted: 0,
        }
    }

    /// Tracks combinations over at most `capacity` inserted vectors.
    pub fn with_tracking(cols: usize, capacity: usize) -> Self {
        Echelon {
            combos: Some(Vec::new()),
            capacity,
            ..Self::new(cols)
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn reduce(&self, v: &BitVector) -> BitVector {
        let mut v = v.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v.get(p) {
                v.xor_assign(row);
            }
        }
        v
    }

    /// Remainder of `v` and the combination of inserted vectors that was subtracted.
    pub fn reduce_tracked(&self, v: &BitVector) -> (BitVector, BitVector) {
        let combos = self
            .combos
            .as_ref()
            .expect("echelon built without tracking");
        let mut v = v.clone();
        let mut combo = BitVector::zeros(self.capacity);
        for ((row, &p), c) in self.rows.iter().zip(&self.pivots).zip(combos) {
            if v.get(p) {
                v.xor_assign(row);
                combo.xor_assign(c);
            }
        }
        (v, combo)
    }

    pub fn contains(&self, v: &BitVector) -> bool {
        self.reduce(v).is_zero()
    }

    /// Inserts `v`; returns whether it was independent. With tracking, every
    /// call consumes one combination index, independent or not.
    pub fn insert(&mut self, v: BitVector) -> bool {
        assert_eq!(v.len(), self.cols);
        let index = self.inserted;
        self.inserted += 1;
        let (rem, combo) = match self.combos {
            Some(_) => {
                assert!(index < self.capacity, "echelon tracking capacity exceeded");
                let (rem, mut combo) = self.reduce_tracked(&v);
                combo.flip(index);
                (rem, Some(combo))
            }
            None => (self.reduce(&v), None),
        };
        match rem.first_one() {
            None => false,
            Some(p) => {
                self.rows.push(rem);
                self.pivots.push(p);
                if let (Some(combos), Some(c)) = (self.combos.as_mut(), combo) {
                    combos.push(c);
                }
                true
            }
        }
    }

    pub fn to_matrix(&self) -> BitMatrix {
        BitMatrix {
            cols: self.cols,
            data: self.rows.clone(),
        }
    }
}

/// Cyclic basis obtained by spinning a vector under generators: `vectors[i] = words[i]·v`.
struct SpinBasis {
    vectors: Vec<BitVector>,
    words: Vec<BitMatrix>,
    tracker: Echelon,
}

fn spin(v: &BitVector, gens: &[BitMatrix]) -> SpinBasis {
    let d = v.len();
    let mut tracker = Echelon::with_tracking(d, d);
    let mut vectors = Vec::new();
    let mut words = Vec::new();
    if !tracker.contains(v) {
        tracker.insert(v.clone());
        vectors.push(v.clone());
        words.push(BitMatrix::identity(d));
    }
    let mut i = 0;
    while i < vectors.len() {
        for g in gens {
            let w = g.mul_vec(&vectors[i]);
            if !tracker.contains(&w) {
                tracker.insert(w.clone());
                vectors.push(w);
                words.push(g.mul(&words[i]));
            }
        }
        i += 1;
    }
    SpinBasis {
        vectors,
        words,
        tracker,
    }
}

/// Basis of `{E : E g = g E for every g in action}` on a `dim`-dimensional space.
///
/// When the module is cyclic an endomorphism is fixed by the image `u` of a
/// generating vector, so the system has only `dim` unknowns; a generator is
/// looked for among a unit vector and seeded random vectors. Otherwise the
/// full `dim²`-unknown system is solved.
pub fn solve_commutant(dim: usize, action: &[BitMatrix]) -> Vec<BitMatrix> {
    assert!(
        action.iter().all(|g| g.rows() == dim && g.cols() == dim),
        "action matrices must be {dim}x{dim}"
    );
    if dim == 0 {
        return Vec::new();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let candidates = std::iter::once(BitVector::unit(dim, 0))
        .chain((0..32).map(|_| BitVector::random(dim, &mut rng)));
    for v in candidates {
        let basis = spin(&v, action);
        if basis.vectors.len() == dim {
            return commutant_from_cyclic(dim, action, &basis);
        }
    }
    commutant_full_system(dim, action)
}

fn commutant_from_cyclic(dim: usize, action: &[BitMatrix], basis: &SpinBasis) -> Vec<BitMatrix> {
    // E(w_i v) = w_i E(v), so u = E(v) must satisfy g w_i u = Σ_j c_ij w_j u
    // whenever g b_i = Σ_j c_ij b_j.
    let mut constraints = Echelon::new(dim);
    for (b, w) in basis.vectors.iter().zip(&basis.words) {
        for g in action {
            let (rem, coords) = basis.tracker.reduce_tracked(&g.mul_vec(b));
            debug_assert!(rem.is_zero());
            let mut lhs = g.mul(w);
            for j in coords.iter_ones() {
                lhs = lhs.add(&basis.words[j]);
            }
            for row in lhs.into_rows() {
                if constraints.rank() == dim {
                    break;
                }
                constraints.insert(row);
            }
        }
    }
    let solutions = constraints.to_matrix().kernel();
    let b_cols = BitMatrix::from_rows(basis.vectors.clone(), dim).transpose();
    let b_inv = b_cols.inverse().expect("spun basis is invertible");
    solutions
        .row_vectors()
        .iter()
        .map(|u| {
            let images: Vec<BitVector> = basis.words.iter().map(|w| w.mul_vec(u)).collect();
            BitMatrix::from_rows(images, dim).transpose().mul(&b_inv)
        })
        .collect()
}

fn commutant_full_system(dim: usize, action: &[BitMatrix]) -> Vec<BitMatrix> {
    let var = |a: usize, b: usize| a * dim + b;
    let mut system = Echelon::new(dim * dim);
    for g in action {
        for i in 0..dim {
            for j in 0..dim {
                // (E g + g E)_{ij}
                let mut eq = BitVector::zeros(dim * dim);
                for k in 0..dim {
                    if g.get(k, j) {
                        eq.flip(var(i, k));
                    }
                    if g.get(i, k) {
                        eq.flip(var(k, j));
                    }
                }
                system.insert(eq);
            }
        }
    }
    system
        .to_matrix()
        .kernel()
        .row_vectors()
        .iter()
        .map(|sol| {
            let rows = (0..dim)
                .map(|a| {
                    let mut r = BitVector::zeros(dim);
                    for b in 0..dim {
                        r.set(b, sol.get(var(a, b)));
                    }
                    r
                })
                .collect();
            BitMatrix::from_rows(rows, dim)
        })
        .collect()
}

/// For a non-scalar `E` with `E² = a E + b I`, returns `(a, b)`.
pub fn quadratic_relation(e: &BitMatrix) -> Option<(bool, bool)> {
    if !e.is_square() {
        return None;
    }
    let d = e.cols();
    let id = BitMatrix::identity(d);
    if e.is_zero() || *e == id {
        return None;
    }
    let sq = e.mul(e);
    let zero = BitMatrix::zeros(d, d);
    for (a, b) in [(false, false), (false, true), (true, false), (true, true)] {
        let rhs = (if a { e.clone() } else { zero.clone() }).add(if b { &id } else { &zero });
        if sq == rhs {
            return Some((a, b));
        }
    }
    None
}

/// Result of splitting a space by an endomorphism with two distinct roots in GF(2).
#[derive(Clone, Debug)]
pub struct Deg2Split {
    pub roots: (bool, bool),
    /// Bases (as rows) of ker(E + α) and ker(E + β).
    pub kernels: (BitMatrix, BitMatrix),
}

/// Splits by `E` when `(E+α)(E+β) = 0` for distinct α, β ∈ GF(2), i.e. `E² = E`.
/// Any other minimal polynomial is reported as `None`.
pub fn min_poly_deg2_split(e: &BitMatrix) -> Option<Deg2Split> {
    match quadratic_relation(e)? {
        (true, false) => {
            let d = e.cols();
            let k0 = e.kernel();
            let k1 = e.add(&BitMatrix::identity(d)).kernel();
            debug_assert_eq!(k0.rows() + k1.rows(), d);
            Some(Deg2Split {
                roots: (false, true),
                kernels: (k0, k1),
            })
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn commutes(e: &BitMatrix, g: &BitMatrix) -> bool {
        e.mul(g) == g.mul(e)
    }

    #[test]
    fn rank_examples() {
        assert_eq!(BitMatrix::identity(7).rank(), 7);
        assert_eq!(BitMatrix::zeros(4, 5).rank(), 0);
        assert_eq!(BitMatrix::from_bits(&[&[0, 1], &[1, 0]]).rank(), 2);
        assert_eq!(BitMatrix::from_bits(&[&[1, 1], &[1, 1]]).rank(), 1);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(BitMatrix::identity(3).kernel().rows(), 0);
        assert_eq!(BitMatrix::zeros(2, 2).kernel().rows(), 2);
        let k = BitMatrix::from_bits(&[&[1, 1]]).kernel();
        assert_eq!(k, BitMatrix::from_bits(&[&[1, 1]]));
    }

    #[test]
    fn inverse_and_products() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..20 {
            let m = BitMatrix::random(9, 9, &mut rng);
            match m.inverse() {
                Some(inv) => {
                    assert!(inv.mul(&m).is_identity());
                    assert!(m.mul(&inv).is_identity());
                }
                None => assert!(m.rank() < 9),
            }
        }
        let v = BitVector::from_bits(&[1, 0, 1]);
        let m = BitMatrix::from_bits(&[&[1, 1, 0], &[0, 1, 1], &[1, 1, 1]]);
        assert_eq!(m.mul_vec(&v), BitVector::from_bits(&[1, 1, 0]));
        assert_eq!(m.transpose().transpose(), m);
    }

    #[test]
    fn echelon_tracking_solves_coordinates() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let gens: Vec<BitVector> = (0..6).map(|_| BitVector::random(20, &mut rng)).collect();
        let mut ech = Echelon::with_tracking(20, 6);
        for g in &gens {
            ech.insert(g.clone());
        }
        let target = {
            let mut t = gens[1].clone();
            t.xor_assign(&gens[4]);
            t.xor_assign(&gens[5]);
            t
        };
        let (rem, combo) = ech.reduce_tracked(&target);
        assert!(rem.is_zero());
        let mut rebuilt = BitVector::zeros(20);
        for i in combo.iter_ones() {
            rebuilt.xor_assign(&gens[i]);
        }
        assert_eq!(rebuilt, target);
    }

    #[test]
    fn commutant_of_identity_is_everything() {
        let sols = solve_commutant(3, &[BitMatrix::identity(3)]);
        assert_eq!(sols.len(), 9);
    }

    /// The natural 2-dimensional module of S_3 ≅ GL(2,2).
    fn s3_natural() -> Vec<BitMatrix> {
        vec![
            BitMatrix::from_bits(&[&[0, 1], &[1, 0]]),
            BitMatrix::from_bits(&[&[0, 1], &[1, 1]]),
        ]
    }

    #[test]
    fn commutant_absolutely_irreducible() {
        let sols = solve_commutant(2, &s3_natural());
        assert_eq!(sols.len(), 1);
        assert!(sols[0].is_identity());
    }

    #[test]
    fn commutant_of_two_nonisomorphic_blocks() {
        // trivial ⊕ natural S_3 module, block diagonal
        let gens: Vec<BitMatrix> = s3_natural()
            .iter()
            .map(|g| {
                let mut m = BitMatrix::zeros(3, 3);
                m.set(0, 0, true);
                for i in 0..2 {
                    for j in 0..2 {
                        m.set(i + 1, j + 1, g.get(i, j));
                    }
                }
                m
            })
            .collect();
        let sols = solve_commutant(3, &gens);
        assert_eq!(sols.len(), 2);
        for e in &sols {
            assert!(gens.iter().all(|g| commutes(e, g)));
        }
        let full = commutant_full_system(3, &gens);
        assert_eq!(full.len(), 2);
    }

    #[test]
    fn deg2_split_examples() {
        let e = BitMatrix::from_bits(&[&[0, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let split = min_poly_deg2_split(&e).unwrap();
        assert_eq!(split.roots, (false, true));
        assert_eq!(split.kernels.0, BitMatrix::from_bits(&[&[1, 0, 0]]));
        assert_eq!(split.kernels.1.rows(), 2);
        assert!(min_poly_deg2_split(&BitMatrix::identity(3)).is_none());
        let idem = BitMatrix::from_bits(&[&[0, 1], &[0, 1]]);
        assert_eq!(min_poly_deg2_split(&idem).unwrap().roots, (false, true));
        // x² + x + 1 has no roots in GF(2)
        let omega = BitMatrix::from_bits(&[&[0, 1], &[1, 1]]);
        assert_eq!(quadratic_relation(&omega), Some((true, true)));
        assert!(min_poly_deg2_split(&omega).is_none());
    }

    fn arb_matrix(max: usize) -> impl Strategy<Value = BitMatrix> {
        (1..=max, 1..=max, any::<u64>()).prop_map(|(r, c, seed)| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            // mix in low-rank products so kernels are not always trivial
            if seed % 3 == 0 {
                let k = (seed as usize % r.min(c)) + 1;
                BitMatrix::random(r, k, &mut rng).mul(&BitMatrix::random(k, c, &mut rng))
            } else {
                BitMatrix::random(r, c, &mut rng)
            }
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn rank_nullity(m in arb_matrix(512)) {
            let kernel = m.kernel();
            prop_assert_eq!(m.rank() + kernel.rows(), m.cols());
            for v in kernel.row_vectors() {
                prop_assert!(m.mul_vec(v).is_zero());
            }
        }

        #[test]
        fn row_space_is_canonical(m in arb_matrix(96), seed in any::<u64>()) {
            let rs = m.row_space();
            prop_assert_eq!(rs.row_space(), rs.clone());
            // an invertible row change leaves the echelon form unchanged
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut p = BitMatrix::random(m.rows(), m.rows(), &mut rng);
            while p.inverse().is_none() {
                p = BitMatrix::random(m.rows(), m.rows(), &mut rng);
            }
            prop_assert_eq!(p.mul(&m).row_space(), rs);
        }

        #[test]
        fn commutant_elements_commute(seed in any::<u64>(), d in 1usize..10) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let gens = vec![BitMatrix::random(d, d, &mut rng), BitMatrix::random(d, d, &mut rng)];
            let sols = solve_commutant(d, &gens);
            prop_assert!(!sols.is_empty());
            for e in &sols {
                for g in &gens {
                    prop_assert!(commutes(e, g));
                }
            }
            prop_assert_eq!(BitMatrix::from_rows(
                sols.iter().map(flatten).collect(), d * d).rank(), sols.len());
            prop_assert_eq!(sols.len(), commutant_full_system(d, &gens).len());
        }
    }

    fn flatten(m: &BitMatrix) -> BitVector {
        let d = m.cols();
        let mut v = BitVector::zeros(m.rows() * d);
        for i in 0..m.rows() {
            for j in m.row(i).iter_ones() {
                v.set(i * d + j, true);
            }
        }
        v
    }
}
