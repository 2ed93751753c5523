//! Small dense matrices over GF(4) = GF(2)[ω]/(ω² + ω + 1).
//!
//! Some restrictions D^μ↓A_n only split after adjoining ω; their summands are
//! carried here. Dimensions are small, so entries are stored one per byte.

use std::fmt;
use std::ops::{Add, Mul};

use crate::gf2::BitMatrix;

/// An element a + bω, encoded as `a | b << 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Gf4(u8);

const MUL: [[u8; 4]; 4] = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]];
const INV: [u8; 4] = [0, 1, 3, 2];

impl Gf4 {
    pub const ZERO: Gf4 = Gf4(0);
    pub const ONE: Gf4 = Gf4(1);
    pub const OMEGA: Gf4 = Gf4(2);
    pub const OMEGA2: Gf4 = Gf4(3);

    pub fn from_bit(b: bool) -> Self {
        Gf4(b as u8)
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn inv(self) -> Gf4 {
        assert!(!self.is_zero(), "zero has no inverse");
        Gf4(INV[self.0 as usize])
    }

    /// x ↦ x², the nontrivial field automorphism.
    pub fn frobenius(self) -> Gf4 {
        self * self
    }

    pub fn in_gf2(self) -> bool {
        self.0 < 2
    }
}

impl Add for Gf4 {
    type Output = Gf4;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: Gf4) -> Gf4 {
        Gf4(self.0 ^ rhs.0)
    }
}

impl Mul for Gf4 {
    type Output = Gf4;
    fn mul(self, rhs: Gf4) -> Gf4 {
        Gf4(MUL[self.0 as usize][rhs.0 as usize])
    }
}

impl fmt::Debug for Gf4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(["0", "1", "w", "w2"][self.0 as usize])
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf4Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Gf4>,
}

impl Gf4Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Gf4Matrix {
            rows,
            cols,
            data: vec![Gf4::ZERO; rows * cols],
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::scalar(dim, Gf4::ONE)
    }

    pub fn scalar(dim: usize, s: Gf4) -> Self {
        let mut m = Self::zeros(dim, dim);
        for i in 0..dim {
            m.set(i, i, s);
        }
        m
    }

    pub fn from_bitmatrix(b: &BitMatrix) -> Self {
        let mut m = Self::zeros(b.rows(), b.cols());
        for i in 0..b.rows() {
            for j in b.row(i).iter_ones() {
                m.set(i, j, Gf4::ONE);
            }
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Gf4>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols));
        Gf4Matrix {
            rows: rows.len(),
            cols,
            data: rows.concat(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Gf4 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Gf4) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Gf4] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vec<Gf4>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Self::identity(self.rows)
    }

    pub fn in_gf2(&self) -> bool {
        self.data.iter().all(|x| x.in_gf2())
    }

    pub fn frobenius(&self) -> Gf4Matrix {
        Gf4Matrix {
            data: self.data.iter().map(|x| x.frobenius()).collect(),
            ..*self
        }
    }

    pub fn transpose(&self) -> Gf4Matrix {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, other: &Gf4Matrix) -> Gf4Matrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.data[idx] = out.data[idx] + a * other.get(k, j);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Gf4Matrix) -> Gf4Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Gf4Matrix {
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(&a, &b)| a + b)
                .collect(),
            ..*self
        }
    }

    pub fn mul_vec(&self, v: &[Gf4]) -> Vec<Gf4> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(Gf4::ZERO, |acc, (&a, &b)| acc + a * b)
            })
            .collect()
    }

    /// Reduced row echelon form in place; returns pivot columns.
    fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut next = 0;
        for col in 0..self.cols {
            if next == self.rows {
                break;
            }
            let Some(p) = (next..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            self.swap_rows(next, p);
            let inv = self.get(next, col).inv();
            for j in 0..self.cols {
                let v = self.get(next, j) * inv;
                self.set(next, j, v);
            }
            for r in 0..self.rows {
                let f = self.get(r, col);
                if r != next && !f.is_zero() {
                    for j in 0..self.cols {
                        let v = self.get(r, j) + f * self.get(next, j);
                        self.set(r, j, v);
                    }
                }
            }
            pivots.push(col);
            next += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.clone().rref_in_place().len()
    }

    /// Basis (as rows) of `{v : M v = 0}`.
    pub fn kernel(&self) -> Gf4Matrix {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let basis: Vec<Vec<Gf4>> = (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![Gf4::ZERO; self.cols];
                v[f] = Gf4::ONE;
                for (r, &p) in pivots.iter().enumerate() {
                    // char 2: −x = x
                    v[p] = m.get(r, f);
                }
                v
            })
            .collect();
        if basis.is_empty() {
            Gf4Matrix::zeros(0, self.cols)
        } else {
            Gf4Matrix::from_rows(&basis)
        }
    }

    /// For `self` of full column rank, some `P` with `P · self = I`.
    pub fn left_inverse(&self) -> Option<Gf4Matrix> {
        let (d, k) = (self.rows, self.cols);
        if k == 0 {
            return Some(Self::zeros(0, d));
        }
        let mut aug = Self::zeros(d, k + d);
        for i in 0..d {
            for j in 0..k {
                aug.set(i, j, self.get(i, j));
            }
            aug.set(i, k + i, Gf4::ONE);
        }
        let pivots = aug.rref_in_place();
        if pivots.len() < k || pivots[k - 1] >= k {
            return None;
        }
        let mut p = Self::zeros(k, d);
        for i in 0..k {
            for j in 0..d {
                p.set(i, j, aug.get(i, k + j));
            }
        }
        Some(p)
    }

    pub fn inverse(&self) -> Option<Gf4Matrix> {
        if self.rows != self.cols {
            return None;
        }
        self.left_inverse()
    }
}

impl fmt::Debug for Gf4Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Gf4Matrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        Ok(())
    }
}

/// Column matrix whose columns are the given vectors.
pub fn columns(vectors: &[Vec<Gf4>], dim: usize) -> Gf4Matrix {
    let mut m = Gf4Matrix::zeros(dim, vectors.len());
    for (j, v) in vectors.iter().enumerate() {
        for (i, &x) in v.iter().enumerate() {
            m.set(i, j, x);
        }
    }
    m
}

fn unit(dim: usize, i: usize) -> Vec<Gf4> {
    let mut v = vec![Gf4::ZERO; dim];
    v[i] = Gf4::ONE;
    v
}

/// Space of module homomorphisms `X` (target dim × source dim) with
/// `X · source[g] = target[g] · X` for every generator `g`.
///
/// The source is spun up from a unit vector; every nonzero vector of an
/// irreducible source generates it. Non-cyclic sources fall back to solving
/// for all entries of `X`.
pub fn hom_space(source: &[Gf4Matrix], target: &[Gf4Matrix]) -> Vec<Gf4Matrix> {
    assert_eq!(source.len(), target.len());
    let p = source.first().map_or(0, Gf4Matrix::rows);
    let q = target.first().map_or(0, Gf4Matrix::rows);
    if p == 0 || q == 0 {
        return Vec::new();
    }
    for start in 0..p {
        if let Some(homs) = hom_space_cyclic(source, target, &unit(p, start)) {
            return homs;
        }
    }
    hom_space_full(source, target)
}

fn hom_space_cyclic(
    source: &[Gf4Matrix],
    target: &[Gf4Matrix],
    v: &[Gf4],
) -> Option<Vec<Gf4Matrix>> {
    let p = v.len();
    let q = target[0].rows();
    // basis b_i = w_i(source) v, remembering w_i evaluated on the target
    let mut basis: Vec<Vec<Gf4>> = vec![v.to_vec()];
    let mut target_words: Vec<Gf4Matrix> = vec![Gf4Matrix::identity(q)];
    let mut i = 0;
    while i < basis.len() && basis.len() < p {
        for (g, h) in source.iter().zip(target) {
            let w = g.mul_vec(&basis[i]);
            let mut trial = basis.clone();
            trial.push(w.clone());
            if columns(&trial, p).rank() == trial.len() {
                basis = trial;
                target_words.push(h.mul(&target_words[i]));
            }
        }
        i += 1;
    }
    if basis.len() < p {
        return None;
    }
    let b = columns(&basis, p);
    let b_inv = b.inverse()?;
    // u = X v satisfies h w_i u = Σ_j c_ij w_j u whenever g b_i = Σ_j c_ij b_j
    let mut constraints: Vec<Vec<Gf4>> = Vec::new();
    for (bi, wi) in basis.iter().zip(&target_words) {
        for (g, h) in source.iter().zip(target) {
            let coords = b_inv.mul_vec(&g.mul_vec(bi));
            let mut lhs = h.mul(wi);
            for (j, &c) in coords.iter().enumerate() {
                if !c.is_zero() {
                    lhs = lhs.add(&target_words[j].mul(&Gf4Matrix::scalar(q, c)));
                }
            }
            constraints.extend(lhs.row_vectors());
        }
    }
    let solutions = Gf4Matrix::from_rows(&constraints).kernel();
    Some(
        solutions
            .row_vectors()
            .iter()
            .map(|u| {
                let images: Vec<Vec<Gf4>> = target_words.iter().map(|w| w.mul_vec(u)).collect();
                columns(&images, q).mul(&b_inv)
            })
            .collect(),
    )
}

fn hom_space_full(source: &[Gf4Matrix], target: &[Gf4Matrix]) -> Vec<Gf4Matrix> {
    let p = source[0].rows();
    let q = target[0].rows();
    let var = |a: usize, b: usize| a * p + b;
    let mut eqs = Vec::new();
    for (g, h) in source.iter().zip(target) {
        // (X g + h X)_{ij}
        for i in 0..q {
            for j in 0..p {
                let mut eq = vec![Gf4::ZERO; p * q];
                for k in 0..p {
                    eq[var(i, k)] = eq[var(i, k)] + g.get(k, j);
                }
                for k in 0..q {
                    eq[var(k, j)] = eq[var(k, j)] + h.get(i, k);
                }
                eqs.push(eq);
            }
        }
    }
    Gf4Matrix::from_rows(&eqs)
        .kernel()
        .row_vectors()
        .iter()
        .map(|sol| {
            let mut x = Gf4Matrix::zeros(q, p);
            for a in 0..q {
                for b in 0..p {
                    x.set(a, b, sol[var(a, b)]);
                }
            }
            x
        })
        .collect()
}
