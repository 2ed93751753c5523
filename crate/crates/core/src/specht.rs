//! James's construction over GF(2): tabloids, polytabloids, the Specht module
//! S^μ inside the tabloid module M^μ, its irreducible quotient D^μ, the
//! induced symplectic form, and restriction to A_n.
//!
//! Everything is reduced mod 2 from the start, so polytabloid signs vanish and
//! a polytabloid is just the set of tabloids it is supported on.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::gf2::{self, BitMatrix, BitVector, Echelon};
use crate::gf4::{self, Gf4, Gf4Matrix};
use crate::partitions::Partition;
use crate::permgroup::{alternating_generators, Permutation};

/// Default cap on n for materializing modules.
pub const DEFAULT_LIMIT_N: usize = 9;

/// Tabloids are packed four bits per symbol.
const PACK_LIMIT_N: usize = 16;

/// A row tabloid: which row each symbol sits in.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tabloid {
    row_of: Vec<u8>,
}

impl Tabloid {
    /// From 1-based row indices, `rows[i-1]` being the row of symbol `i`.
    pub fn from_rows(rows: &[usize]) -> Result<Self> {
        if rows.iter().any(|&r| r == 0 || r > PACK_LIMIT_N) {
            return Err(Error::InvalidPartition(format!("bad row indices {rows:?}")));
        }
        let t = Tabloid {
            row_of: rows.iter().map(|&r| (r - 1) as u8).collect(),
        };
        t.shape()?;
        Ok(t)
    }

    /// 1-based row of the 1-based symbol `i`.
    pub fn row(&self, i: usize) -> usize {
        self.row_of[i - 1] as usize + 1
    }

    pub fn row_indices(&self) -> Vec<usize> {
        self.row_of.iter().map(|&r| r as usize + 1).collect()
    }

    pub fn shape(&self) -> Result<Partition> {
        let rows = self
            .row_of
            .iter()
            .map(|&r| r as usize + 1)
            .max()
            .unwrap_or(0);
        let mut sizes = vec![0; rows];
        for &r in &self.row_of {
            sizes[r as usize] += 1;
        }
        Partition::new(sizes)
    }

    /// σ·T: symbol σ(i) goes where i was.
    pub fn permuted(&self, sigma: &Permutation) -> Tabloid {
        let mut row_of = vec![0; self.row_of.len()];
        for (i, &img) in sigma.table().iter().enumerate() {
            row_of[img] = self.row_of[i];
        }
        Tabloid { row_of }
    }

    fn key(&self) -> u64 {
        pack(&self.row_of)
    }
}

fn pack(row_of: &[u8]) -> u64 {
    row_of
        .iter()
        .enumerate()
        .fold(0u64, |acc, (i, &r)| acc | (r as u64) << (4 * i))
}

/// σ applied to a packed tabloid.
#[inline]
fn permute_key(key: u64, images: &[usize]) -> u64 {
    images.iter().enumerate().fold(0u64, |acc, (i, &img)| {
        acc | ((key >> (4 * i)) & 0xf) << (4 * img)
    })
}

/// A filling of the Young diagram of `shape` with 1..n.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    /// From rows of 1-based symbols; the shape is read off the row lengths.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())?;
        let n = shape.n();
        let mut seen = vec![false; n];
        for &s in rows.iter().flatten() {
            if s == 0 || s > n || seen[s - 1] {
                return Err(Error::InvalidPermutation(format!(
                    "{rows:?} is not a filling by 1..{n}"
                )));
            }
            seen[s - 1] = true;
        }
        Ok(Tableau {
            shape,
            rows: rows
                .iter()
                .map(|r| r.iter().map(|s| s - 1).collect())
                .collect(),
        })
    }

    /// The row-reading tableau: 1..μ₁ in the first row, and so on.
    pub fn initial(shape: &Partition) -> Self {
        let mut next = 0;
        let rows = shape
            .parts()
            .iter()
            .map(|&len| {
                let row: Vec<usize> = (next..next + len).collect();
                next += len;
                row
            })
            .collect();
        Tableau {
            shape: shape.clone(),
            rows,
        }
    }

    fn from_columns(shape: &Partition, columns: &[Vec<usize>]) -> Self {
        let rows = shape
            .parts()
            .iter()
            .enumerate()
            .map(|(r, &len)| (0..len).map(|c| columns[c][r]).collect())
            .collect();
        Tableau {
            shape: shape.clone(),
            rows,
        }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn n(&self) -> usize {
        self.shape.n()
    }

    /// 1-based entry at 1-based position (r, c).
    pub fn entry(&self, r: usize, c: usize) -> usize {
        self.rows[r - 1][c - 1] + 1
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.rows
            .iter()
            .map(|r| r.iter().map(|s| s + 1).collect())
            .collect()
    }

    /// Columns of 0-based symbols, top to bottom.
    fn columns_zero_based(&self) -> Vec<Vec<usize>> {
        let width = self.shape.parts().first().copied().unwrap_or(0);
        (0..width)
            .map(|c| {
                self.rows
                    .iter()
                    .take_while(|r| r.len() > c)
                    .map(|r| r[c])
                    .collect()
            })
            .collect()
    }

    /// Columns of 1-based symbols.
    pub fn columns(&self) -> Vec<Vec<usize>> {
        self.columns_zero_based()
            .into_iter()
            .map(|c| c.into_iter().map(|s| s + 1).collect())
            .collect()
    }

    fn row_of(&self) -> Vec<u8> {
        let mut row_of = vec![0u8; self.n()];
        for (r, row) in self.rows.iter().enumerate() {
            for &s in row {
                row_of[s] = r as u8;
            }
        }
        row_of
    }

    /// σt: the entry at each position is replaced by its image under σ.
    pub fn permuted(&self, sigma: &Permutation) -> Result<Tableau> {
        if sigma.degree() != self.n() {
            return Err(Error::DegreeMismatch {
                left: sigma.degree(),
                right: self.n(),
            });
        }
        let t = sigma.table();
        Ok(Tableau {
            shape: self.shape.clone(),
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|&s| t[s]).collect())
                .collect(),
        })
    }

    pub fn column_stabilizer_order(&self) -> u128 {
        self.shape
            .conjugate()
            .parts()
            .iter()
            .map(|&k| (1..=k as u128).product::<u128>())
            .product()
    }

    /// Streams C_t, the permutations preserving every column of t.
    pub fn column_stabilizer_elements(&self) -> ColumnStabilizer {
        let columns = self.columns_zero_based();
        let radices = columns.iter().map(|c| (1..=c.len()).product()).collect();
        ColumnStabilizer {
            n: self.n(),
            counter: vec![0; columns.len()],
            columns,
            radices,
            done: false,
        }
    }
}

/// The ordering of 0..k with the given Lehmer rank.
fn unrank_ordering(mut rank: usize, k: usize) -> Vec<usize> {
    let mut pool: Vec<usize> = (0..k).collect();
    let mut out = Vec::with_capacity(k);
    for i in (1..=k).rev() {
        let f: usize = (1..i).product();
        out.push(pool.remove(rank / f));
        rank %= f;
    }
    out
}

/// Mixed-radix walk over one ordering per column.
pub struct ColumnStabilizer {
    n: usize,
    columns: Vec<Vec<usize>>,
    radices: Vec<usize>,
    counter: Vec<usize>,
    done: bool,
}

impl Iterator for ColumnStabilizer {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        let mut images: Vec<usize> = (0..self.n).collect();
        for (col, &rank) in self.columns.iter().zip(&self.counter) {
            let order = unrank_ordering(rank, col.len());
            for (r, &o) in order.iter().enumerate() {
                images[col[r]] = col[o];
            }
        }
        // advance the counter
        let mut i = 0;
        loop {
            if i == self.counter.len() {
                self.done = true;
                break;
            }
            self.counter[i] += 1;
            if self.counter[i] < self.radices[i] {
                break;
            }
            self.counter[i] = 0;
            i += 1;
        }
        Some(Permutation::from_zero_based(images))
    }
}

pub fn tabloid_of(t: &Tableau) -> Tabloid {
    Tabloid { row_of: t.row_of() }
}

/// A polytabloid e_t reduced mod 2: the set supp(t) = {{σt} : σ ∈ C_t}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolytabloidF2 {
    pub shape: Partition,
    pub tabloids: BTreeSet<Tabloid>,
}

pub fn polytabloid(t: &Tableau) -> PolytabloidF2 {
    let base = tabloid_of(t);
    let tabloids: BTreeSet<Tabloid> = t
        .column_stabilizer_elements()
        .map(|s| base.permuted(&s))
        .collect();
    // σ ↦ {σt} is injective on C_t, so no two terms cancel mod 2.
    assert_eq!(
        tabloids.len() as u128,
        t.column_stabilizer_order(),
        "polytabloid terms collided"
    );
    PolytabloidF2 {
        shape: t.shape.clone(),
        tabloids,
    }
}

/// supp(t) as sorted packed tabloids, for repeated form evaluations.
#[derive(Clone, Debug)]
pub struct Support {
    n: usize,
    keys: Vec<u64>,
}

impl Support {
    pub fn of(t: &Tableau) -> Result<Support> {
        if t.n() > PACK_LIMIT_N {
            return Err(Error::LimitExceeded {
                what: "tabloid packing",
                n: t.n(),
                limit: PACK_LIMIT_N,
            });
        }
        let base = pack(&t.row_of());
        let mut keys: Vec<u64> = t
            .column_stabilizer_elements()
            .map(|s| permute_key(base, s.table()))
            .collect();
        keys.sort_unstable();
        keys.dedup();
        assert_eq!(
            keys.len() as u128,
            t.column_stabilizer_order(),
            "polytabloid terms collided"
        );
        Ok(Support { n: t.n(), keys })
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    fn contains(&self, key: u64) -> bool {
        self.keys.binary_search(&key).is_ok()
    }

    /// ⟨π e_t, e_t⟩ mod 2 for an involution π, computed two ways: as
    /// |supp(πt) ∩ supp(t)| and as the number of π-fixed tabloids in it.
    /// The two must agree.
    pub fn form_value(&self, pi: &Permutation) -> Result<u8> {
        if pi.degree() != self.n {
            return Err(Error::DegreeMismatch {
                left: pi.degree(),
                right: self.n,
            });
        }
        if !pi.squares_to_identity() {
            return Err(Error::NotInvolution(pi.to_string()));
        }
        let images = pi.table();
        let (mut shared, mut fixed) = (0usize, 0usize);
        for &key in &self.keys {
            // supp(πt) = π·supp(t), and T ∈ supp(πt) iff πT ∈ supp(t)
            let moved = permute_key(key, images);
            if self.contains(moved) {
                shared += 1;
                if moved == key {
                    fixed += 1;
                }
            }
        }
        if shared % 2 != fixed % 2 {
            return Err(Error::Inconsistent(format!(
                "form parity mismatch for {pi}: {shared} shared tabloids, {fixed} fixed"
            )));
        }
        Ok((shared % 2) as u8)
    }

    /// Whether π fixes some tabloid {σt}, σ ∈ C_t, i.e. π ∈ R_{σt}.
    pub fn fixes_some_tabloid(&self, pi: &Permutation) -> bool {
        self.keys.iter().any(|&k| permute_key(k, pi.table()) == k)
    }
}

/// ⟨π e_t, e_t⟩ mod 2. See [`Support::form_value`].
pub fn form_value(pi: &Permutation, t: &Tableau) -> Result<u8> {
    Support::of(t)?.form_value(pi)
}

/// Whether π fixes at most one entry in each column of t.
pub fn fixes_at_most_one_per_column(pi: &Permutation, t: &Tableau) -> bool {
    let images = pi.table();
    t.columns_zero_based()
        .iter()
        .all(|col| col.iter().filter(|&&s| images[s] == s).count() <= 1)
}

/// All tabloids of one shape, indexed lexicographically by their row vector.
#[derive(Clone, Debug)]
pub struct TabloidIndex {
    shape: Partition,
    keys: Vec<u64>,
    rows: Vec<Vec<u8>>,
    index: HashMap<u64, usize>,
}

impl TabloidIndex {
    pub fn new(shape: &Partition) -> Result<Self> {
        if shape.n() > PACK_LIMIT_N {
            return Err(Error::LimitExceeded {
                what: "tabloid packing",
                n: shape.n(),
                limit: PACK_LIMIT_N,
            });
        }
        let mut current: Vec<u8> = shape
            .parts()
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| std::iter::repeat_n(r as u8, len))
            .collect();
        let mut rows = Vec::new();
        loop {
            rows.push(current.clone());
            if !next_permutation(&mut current) {
                break;
            }
        }
        let keys: Vec<u64> = rows.iter().map(|r| pack(r)).collect();
        let index = keys.iter().enumerate().map(|(i, &k)| (k, i)).collect();
        Ok(TabloidIndex {
            shape: shape.clone(),
            keys,
            rows,
            index,
        })
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    pub fn get(&self, i: usize) -> Tabloid {
        Tabloid {
            row_of: self.rows[i].clone(),
        }
    }

    pub fn index_of(&self, t: &Tabloid) -> Option<usize> {
        self.index.get(&t.key()).copied()
    }

    /// Image of each tabloid index under σ.
    pub fn permutation_action(&self, sigma: &Permutation) -> Vec<usize> {
        self.keys
            .iter()
            .map(|&k| self.index[&permute_key(k, sigma.table())])
            .collect()
    }

    pub fn vector_of(&self, p: &PolytabloidF2) -> BitVector {
        let mut v = BitVector::zeros(self.len());
        for t in &p.tabloids {
            v.set(
                self.index_of(t).expect("tabloid of the indexed shape"),
                true,
            );
        }
        v
    }

    fn vector_of_support(&self, support: &Support) -> BitVector {
        let mut v = BitVector::zeros(self.len());
        for k in &support.keys {
            v.set(self.index[k], true);
        }
        v
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }
}

fn next_permutation(v: &mut [u8]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len())
        .rev()
        .find(|&j| v[j] > v[i - 1])
        .expect("successor exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

fn permute_vector(v: &BitVector, action: &[usize]) -> BitVector {
    let mut out = BitVector::zeros(v.len());
    for i in v.iter_ones() {
        out.set(action[i], true);
    }
    out
}

/// One tableau per column-equivalence class: columns as increasing sets.
fn column_class_tableaux(shape: &Partition) -> Vec<Tableau> {
    fn rec(
        col: usize,
        lengths: &[usize],
        remaining: u32,
        chosen: &mut Vec<Vec<usize>>,
        shape: &Partition,
        out: &mut Vec<Tableau>,
    ) {
        if col == lengths.len() {
            out.push(Tableau::from_columns(shape, chosen));
            return;
        }
        let pool: Vec<usize> = (0..32).filter(|&s| remaining >> s & 1 == 1).collect();
        let k = lengths[col];
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            let subset: Vec<usize> = idx.iter().map(|&i| pool[i]).collect();
            let mask = subset.iter().fold(0u32, |m, &s| m | 1 << s);
            chosen.push(subset);
            rec(col + 1, lengths, remaining & !mask, chosen, shape, out);
            chosen.pop();
            // next k-combination of pool indices
            let Some(i) = (0..k).rev().find(|&i| idx[i] < pool.len() - k + i) else {
                break;
            };
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    let lengths = shape.conjugate().parts().to_vec();
    let mut out = Vec::new();
    rec(
        0,
        &lengths,
        (1u32 << shape.n()) - 1,
        &mut Vec::new(),
        shape,
        &mut out,
    );
    out
}

/// S^μ over GF(2) with the tabloid form, its radical and the quotient D^μ.
#[derive(Clone, Debug)]
pub struct SpechtQuotient {
    shape: Partition,
    tabloids: TabloidIndex,
    specht_basis: BitMatrix,
    gram: BitMatrix,
    radical_basis: BitMatrix,
    quotient_reps: BitMatrix,
    solver: Echelon,
}

impl SpechtQuotient {
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn n(&self) -> usize {
        self.shape.n()
    }

    pub fn tabloids(&self) -> &TabloidIndex {
        &self.tabloids
    }

    /// Rows span S^μ, in reduced echelon form over the tabloid basis.
    pub fn specht_basis(&self) -> &BitMatrix {
        &self.specht_basis
    }

    pub fn specht_dim(&self) -> usize {
        self.specht_basis.rows()
    }

    /// Gram matrix of the tabloid form on `specht_basis`.
    pub fn gram(&self) -> &BitMatrix {
        &self.gram
    }

    pub fn radical_basis(&self) -> &BitMatrix {
        &self.radical_basis
    }

    /// Coset representatives of a basis of D^μ, as vectors in M^μ.
    pub fn quotient_reps(&self) -> &BitMatrix {
        &self.quotient_reps
    }

    /// dim D^μ.
    pub fn dim(&self) -> usize {
        self.quotient_reps.rows()
    }

    /// Coordinates in D^μ of a vector of S^μ (given in tabloid coordinates).
    pub fn quotient_coordinates(&self, v: &BitVector) -> Result<BitVector> {
        let (rem, combo) = self.solver.reduce_tracked(v);
        if !rem.is_zero() {
            return Err(Error::Inconsistent(
                "vector is not in the Specht module".into(),
            ));
        }
        let mut coords = BitVector::zeros(self.dim());
        for i in combo.iter_ones().take_while(|&i| i < self.dim()) {
            coords.set(i, true);
        }
        Ok(coords)
    }
}

pub fn build_specht_quotient(mu: &Partition) -> Result<SpechtQuotient> {
    build_specht_quotient_with_limit(mu, DEFAULT_LIMIT_N)
}

pub fn build_specht_quotient_with_limit(mu: &Partition, limit_n: usize) -> Result<SpechtQuotient> {
    if !mu.is_distinct() {
        return Err(Error::RepeatedParts(mu.clone()));
    }
    let n = mu.n();
    if n == 0 {
        return Err(Error::BelowMinimum {
            what: "Specht module",
            n,
            min: 1,
        });
    }
    let limit = limit_n.min(PACK_LIMIT_N);
    if n > limit {
        return Err(Error::LimitExceeded {
            what: "Specht module materialization",
            n,
            limit,
        });
    }
    let tabloids = TabloidIndex::new(mu)?;

    let mut span = Echelon::new(tabloids.len());
    for t in column_class_tableaux(mu) {
        span.insert(tabloids.vector_of_support(&Support::of(&t)?));
    }
    let specht_basis = span.to_matrix().row_space();
    let expected = mu.standard_tableaux_count();
    if specht_basis.rows() as u128 != expected {
        return Err(Error::Inconsistent(format!(
            "Specht module of {mu} has dimension {} but {expected} standard tableaux",
            specht_basis.rows()
        )));
    }

    let basis = specht_basis.row_vectors();
    let d_s = basis.len();
    let mut gram = BitMatrix::zeros(d_s, d_s);
    for i in 0..d_s {
        for j in 0..d_s {
            gram.set(i, j, basis[i].dot(&basis[j]));
        }
    }

    let radical_rows: Vec<BitVector> = gram
        .kernel()
        .row_vectors()
        .iter()
        .map(|c| {
            let mut v = BitVector::zeros(tabloids.len());
            for k in c.iter_ones() {
                v.xor_assign(&basis[k]);
            }
            v
        })
        .collect();

    let mut extension = Echelon::new(tabloids.len());
    for r in &radical_rows {
        extension.insert(r.clone());
    }
    let reps: Vec<BitVector> = basis
        .iter()
        .filter(|b| extension.insert((*b).clone()))
        .cloned()
        .collect();
    if reps.is_empty() {
        return Err(Error::Inconsistent(format!("D^{mu} came out zero")));
    }

    let mut solver = Echelon::with_tracking(tabloids.len(), d_s);
    for v in reps.iter().chain(&radical_rows) {
        solver.insert(v.clone());
    }

    Ok(SpechtQuotient {
        shape: mu.clone(),
        radical_basis: BitMatrix::from_rows(radical_rows, tabloids.len()),
        quotient_reps: BitMatrix::from_rows(reps, tabloids.len()),
        tabloids,
        specht_basis,
        gram,
        solver,
    })
}

/// Gram matrix of B(φx, φy) := ⟨x, y⟩ on the quotient representatives.
pub fn induced_form(q: &SpechtQuotient) -> Result<BitMatrix> {
    if q.shape.length() == 1 {
        return Err(Error::TrivialShape(q.n()));
    }
    for r in q.radical_basis.row_vectors() {
        if q.specht_basis.row_vectors().iter().any(|s| r.dot(s)) {
            return Err(Error::Inconsistent(format!(
                "radical of S^{} is not orthogonal to S",
                q.shape
            )));
        }
    }
    let reps = q.quotient_reps.row_vectors();
    let d = reps.len();
    let mut b = BitMatrix::zeros(d, d);
    for i in 0..d {
        for j in 0..d {
            b.set(i, j, reps[i].dot(&reps[j]));
        }
    }
    Ok(b)
}

/// Matrix of σ on D^μ: column j holds the coordinates of σ·(rep j).
pub fn sn_action(q: &SpechtQuotient, sigma: &Permutation) -> Result<BitMatrix> {
    if sigma.degree() != q.n() {
        return Err(Error::DegreeMismatch {
            left: sigma.degree(),
            right: q.n(),
        });
    }
    let action = q.tabloids.permutation_action(sigma);
    let images = q
        .quotient_reps
        .row_vectors()
        .iter()
        .map(|r| q.quotient_coordinates(&permute_vector(r, &action)))
        .collect::<Result<Vec<_>>>()?;
    Ok(BitMatrix::from_rows(images, q.dim()).transpose())
}

/// Field over which the summands of a split restriction are written.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SplitField {
    Gf2,
    Gf4,
}

/// An A_n-module carried inside D^μ (or D^μ ⊗ GF(4)).
#[derive(Clone, Debug)]
pub struct RestrictedModule {
    /// Columns are the basis vectors, in D^μ coordinates.
    basis: Gf4Matrix,
    /// Left inverse of `basis`, mapping D^μ coordinates into the summand.
    projector: Gf4Matrix,
    field: SplitField,
    action: Vec<(String, Gf4Matrix)>,
    form: Option<Gf4Matrix>,
}

impl RestrictedModule {
    fn new(
        basis: Gf4Matrix,
        field: SplitField,
        generators: &[(Permutation, BitMatrix)],
        form: Option<&BitMatrix>,
    ) -> Result<Self> {
        let projector = basis
            .left_inverse()
            .ok_or_else(|| Error::Inconsistent("summand basis is dependent".into()))?;
        let mut module = RestrictedModule {
            basis,
            projector,
            field,
            action: Vec::new(),
            form: None,
        };
        for (g, m) in generators {
            let restricted = module.restrict(m)?;
            module.action.push((g.to_string(), restricted));
        }
        module.form = form.map(|b| {
            let b = Gf4Matrix::from_bitmatrix(b);
            module.basis.transpose().mul(&b).mul(&module.basis)
        });
        Ok(module)
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn field(&self) -> SplitField {
        self.field
    }

    pub fn basis(&self) -> &Gf4Matrix {
        &self.basis
    }

    /// Generator label and matrix, for the fixed A_n generating pair.
    pub fn action(&self) -> &[(String, Gf4Matrix)] {
        &self.action
    }

    pub fn generator_matrices(&self) -> Vec<Gf4Matrix> {
        self.action.iter().map(|(_, m)| m.clone()).collect()
    }

    /// B restricted to this summand, absent for the trivial shape.
    pub fn form(&self) -> Option<&Gf4Matrix> {
        self.form.as_ref()
    }

    /// Matrix on this summand of an element acting on D^μ by `m`; fails if
    /// the summand is not invariant.
    pub fn restrict(&self, m: &BitMatrix) -> Result<Gf4Matrix> {
        let image = Gf4Matrix::from_bitmatrix(m).mul(&self.basis);
        let restricted = self.projector.mul(&image);
        if self.basis.mul(&restricted) != image {
            return Err(Error::Inconsistent("summand is not invariant".into()));
        }
        Ok(restricted)
    }

    /// Whether B is nondegenerate on this summand; self-dual summands are
    /// exactly those on which it is.
    pub fn form_is_nondegenerate(&self) -> bool {
        self.form.as_ref().is_some_and(|b| b.rank() == self.dim())
    }

    pub fn form_is_zero(&self) -> bool {
        self.form.as_ref().is_none_or(Gf4Matrix::is_zero)
    }

    /// B(gx, x) for each basis vector x, where g acts on D^μ by `m`.
    pub fn quadratic_diagonal(&self, m: &BitMatrix) -> Result<Vec<Gf4>> {
        let b = self.form.as_ref().ok_or(Error::TrivialShape(0))?;
        let a = self.restrict(m)?;
        let ab = a.transpose().mul(b);
        Ok((0..self.dim()).map(|i| ab.get(i, i)).collect())
    }
}

/// D^μ restricted to A_n, decomposed by its commutant.
#[derive(Clone, Debug)]
pub struct Restriction {
    pub generators: [Permutation; 2],
    pub commutant_dim: usize,
    pub summands: Vec<RestrictedModule>,
}

impl Restriction {
    pub fn splits(&self) -> bool {
        self.summands.len() == 2
    }

    pub fn field(&self) -> SplitField {
        self.summands.first().map_or(SplitField::Gf2, |s| s.field)
    }
}

fn rows_to_columns(rows: &Gf4Matrix) -> Gf4Matrix {
    rows.transpose()
}

pub fn restrict_and_split(q: &SpechtQuotient) -> Result<Restriction> {
    let n = q.n();
    let generators = alternating_generators(n)?;
    let mats = generators
        .iter()
        .map(|g| sn_action(q, g))
        .collect::<Result<Vec<_>>>()?;
    let labelled: Vec<(Permutation, BitMatrix)> = generators
        .iter()
        .cloned()
        .zip(mats.iter().cloned())
        .collect();
    let form = if q.shape.length() > 1 {
        Some(induced_form(q)?)
    } else {
        None
    };
    let d = q.dim();

    let commutant = gf2::solve_commutant(d, &mats);
    let summands = match commutant.len() {
        1 => vec![RestrictedModule::new(
            Gf4Matrix::identity(d),
            SplitField::Gf2,
            &labelled,
            form.as_ref(),
        )?],
        2 => {
            let e = commutant
                .iter()
                .find(|e| !e.is_identity())
                .expect("a 2-dimensional commutant has a non-scalar element");
            match gf2::quadratic_relation(e) {
                Some((true, false)) => {
                    let split = gf2::min_poly_deg2_split(e).expect("E² = E splits");
                    [split.kernels.0, split.kernels.1]
                        .iter()
                        .map(|k| {
                            let basis = rows_to_columns(&Gf4Matrix::from_bitmatrix(k));
                            RestrictedModule::new(basis, SplitField::Gf2, &labelled, form.as_ref())
                        })
                        .collect::<Result<Vec<_>>>()?
                }
                Some((true, true)) => {
                    // E² + E + 1 = 0: eigenvalues ω and ω², Galois conjugate summands
                    let e4 = Gf4Matrix::from_bitmatrix(e);
                    [Gf4::OMEGA, Gf4::OMEGA2]
                        .iter()
                        .map(|&root| {
                            let k = e4.add(&Gf4Matrix::scalar(d, root)).kernel();
                            RestrictedModule::new(
                                rows_to_columns(&k),
                                SplitField::Gf4,
                                &labelled,
                                form.as_ref(),
                            )
                        })
                        .collect::<Result<Vec<_>>>()?
                }
                other => {
                    return Err(Error::Inconsistent(format!(
                        "commutant of D^{}↓A_n is not semisimple (relation {other:?})",
                        q.shape
                    )))
                }
            }
        }
        k => {
            return Err(Error::Inconsistent(format!(
                "commutant of D^{}↓A_n has dimension {k}, expected 1 or 2",
                q.shape
            )))
        }
    };
    if summands.iter().map(RestrictedModule::dim).sum::<usize>() != d {
        return Err(Error::Inconsistent("summands do not fill D^μ".into()));
    }
    Ok(Restriction {
        generators,
        commutant_dim: commutant.len(),
        summands,
    })
}

/// Dimension of Hom_{A_n}(a, b) over GF(4).
pub fn intertwiner_dim(a: &RestrictedModule, b: &RestrictedModule) -> usize {
    gf4::hom_space(&a.generator_matrices(), &b.generator_matrices()).len()
}
