//! Exact integer linear algebra on the lattice `M = Z^n`.
//!
//! Matrices carry arbitrary-precision entries. Lattice vectors and characters
//! are stored with machine integers since fan data is small, but every
//! reduction (Smith, Hermite, inverses) runs over `BigInt`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A point of the lattice `M`, e.g. the primitive generator of a ray.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeVector {
    pub coords: Vec<i64>,
}

/// An element of the dual lattice `M^∨`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Character {
    pub coords: Vec<i64>,
}

impl LatticeVector {
    pub fn new(coords: Vec<i64>) -> Self {
        Self { coords }
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    /// gcd of the coordinates is 1.
    pub fn is_primitive(&self) -> bool {
        self.coords.iter().fold(0i64, |g, &c| g.gcd(&c)) == 1
    }
}

impl Character {
    pub fn new(coords: Vec<i64>) -> Self {
        Self { coords }
    }

    /// The `i`-th standard basis character of a rank `n` lattice.
    pub fn standard(n: usize, i: usize) -> Self {
        let mut coords = vec![0; n];
        coords[i] = 1;
        Self { coords }
    }

    /// `⟨χ, v⟩ = Σ χ_i v_i`.
    pub fn pair(&self, v: &LatticeVector) -> i64 {
        debug_assert_eq!(self.coords.len(), v.coords.len());
        self.coords.iter().zip(&v.coords).map(|(a, b)| a * b).sum()
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.coords)
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_tuple(f, &self.coords)
    }
}

fn write_tuple(f: &mut fmt::Formatter<'_>, xs: &[i64]) -> fmt::Result {
    f.write_str("(")?;
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str(")")
}

/// Dense integer matrix, row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Panics if the rows are ragged.
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged matrix rows");
            for (j, x) in row.iter().enumerate() {
                m[(i, j)] = x.clone().into();
            }
        }
        m
    }

    /// Matrix whose columns are the given vectors, each of length `n`.
    pub fn from_columns(n: usize, vectors: &[LatticeVector]) -> Self {
        let mut m = Self::zeros(n, vectors.len());
        for (j, v) in vectors.iter().enumerate() {
            for (i, &x) in v.coords.iter().enumerate() {
                m[(i, j)] = BigInt::from(x);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "matrix shapes do not compose");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a * &other[(k, j)];
                    out[(i, j)] += prod;
                }
            }
        }
        out
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)].is_zero()))
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[(i, k)].is_zero()) else {
                    return BigInt::zero();
                };
                a.swap_rows(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)];
                    a[(i, j)] = v / &prev;
                }
            }
            prev = a[(k, k)].clone();
        }
        sign * a[(n - 1, n - 1)].clone()
    }

    /// Inverse of a matrix with determinant ±1, via the Smith form.
    pub fn inverse_unimodular(&self) -> Result<IntMatrix> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch { expected: self.rows, found: self.cols });
        }
        let snf = smith_normal_form(self);
        if snf.invariant_factors().iter().any(|d| !d.is_one()) || snf.d.rows() != self.rows {
            return Err(Error::NotExtendable);
        }
        // D = U A V = I, so A^{-1} = V U.
        Ok(snf.v.mul(&snf.u))
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// Rows `a`, `b` := `[[p, q], [r, s]] · [row_a; row_b]`.
    fn combine_rows(&mut self, a: usize, b: usize, p: &BigInt, q: &BigInt, r: &BigInt, s: &BigInt) {
        for j in 0..self.cols {
            let x = self[(a, j)].clone();
            let y = self[(b, j)].clone();
            self[(a, j)] = p * &x + q * &y;
            self[(b, j)] = r * &x + s * &y;
        }
    }

    /// Columns `a`, `b` := `[col_a, col_b] · [[p, r], [q, s]]`.
    fn combine_cols(&mut self, a: usize, b: usize, p: &BigInt, q: &BigInt, r: &BigInt, s: &BigInt) {
        for i in 0..self.rows {
            let x = self[(i, a)].clone();
            let y = self[(i, b)].clone();
            self[(i, a)] = p * &x + q * &y;
            self[(i, b)] = r * &x + s * &y;
        }
    }

    fn negate_row(&mut self, a: usize) {
        for j in 0..self.cols {
            let v = -self[(a, j)].clone();
            self[(a, j)] = v;
        }
    }

    fn add_row_multiple(&mut self, target: usize, source: usize, factor: &BigInt) {
        for j in 0..self.cols {
            let v = &self[(source, j)] * factor;
            self[(target, j)] += v;
        }
    }
}

impl core::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl core::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.rows {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("[")?;
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

/// `D = U·A·V` with `D` diagonal, `d_1 | d_2 | ...`, `U` and `V` unimodular.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnfResult {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SnfResult {
    /// Diagonal entries `d_1, ..., d_min(m,n)`, zeros included.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.d.rows().min(self.d.cols())).map(|i| self.d[(i, i)].clone()).collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().iter().filter(|d| !d.is_zero()).count()
    }
}

/// Bezout coefficients `(g, x, y)` with `x·a + y·b = g`, where `g` is
/// `gcd(a, b)` up to sign. When `a | b` this is `(a, 1, 0)`, so a pivot that
/// already divides is never disturbed.
fn bezout(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    if !a.is_zero() && (b % a).is_zero() {
        return (a.clone(), BigInt::one(), BigInt::zero());
    }
    let e = a.extended_gcd(b);
    if e.gcd.is_negative() {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

/// Smith normal form with transforms. Total on integer matrices.
pub fn smith_normal_form(a: &IntMatrix) -> SnfResult {
    let (m, n) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);

    for t in 0..m.min(n) {
        // pivot: smallest nonzero |entry| in the trailing block
        let mut best: Option<(usize, usize)> = None;
        for i in t..m {
            for j in t..n {
                if d[(i, j)].is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| d[(i, j)].abs() < d[(bi, bj)].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);

        loop {
            // clear column t below the pivot
            for i in t + 1..m {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let (g, x, y) = bezout(&d[(t, t)], &d[(i, t)]);
                let r = -(&d[(i, t)] / &g);
                let s = &d[(t, t)] / &g;
                d.combine_rows(t, i, &x, &y, &r, &s);
                u.combine_rows(t, i, &x, &y, &r, &s);
            }
            // clear row t right of the pivot
            for j in t + 1..n {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let (g, x, y) = bezout(&d[(t, t)], &d[(t, j)]);
                let r = -(&d[(t, j)] / &g);
                let s = &d[(t, t)] / &g;
                d.combine_cols(t, j, &x, &y, &r, &s);
                v.combine_cols(t, j, &x, &y, &r, &s);
            }
            if (t + 1..m).any(|i| !d[(i, t)].is_zero()) {
                continue;
            }
            // divisibility: fold an offending row into the pivot row
            let offending = (t + 1..m)
                .find(|&i| (t + 1..n).any(|j| !(&d[(i, j)] % &d[(t, t)]).is_zero()));
            match offending {
                Some(i) => {
                    let one = BigInt::one();
                    d.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    SnfResult { u, d, v }
}

/// Row-style Hermite normal form `H = U·A`: echelon form, positive pivots,
/// entries above each pivot reduced into `[0, pivot)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HnfResult {
    pub h: IntMatrix,
    pub u: IntMatrix,
    /// Column index of the pivot in each nonzero row.
    pub pivots: Vec<usize>,
}

impl HnfResult {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

pub fn hermite_normal_form(a: &IntMatrix) -> HnfResult {
    let (m, n) = (a.rows(), a.cols());
    let mut h = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        if r == m {
            break;
        }
        for i in r + 1..m {
            if h[(i, c)].is_zero() {
                continue;
            }
            if h[(r, c)].is_zero() {
                h.swap_rows(r, i);
                u.swap_rows(r, i);
                continue;
            }
            let (g, x, y) = bezout(&h[(r, c)], &h[(i, c)]);
            let p = -(&h[(i, c)] / &g);
            let q = &h[(r, c)] / &g;
            h.combine_rows(r, i, &x, &y, &p, &q);
            u.combine_rows(r, i, &x, &y, &p, &q);
        }
        if h[(r, c)].is_zero() {
            continue;
        }
        if h[(r, c)].is_negative() {
            h.negate_row(r);
            u.negate_row(r);
        }
        for i in 0..r {
            let q = h[(i, c)].div_floor(&h[(r, c)]);
            if !q.is_zero() {
                let f = -q;
                h.add_row_multiple(i, r, &f);
                u.add_row_multiple(i, r, &f);
            }
        }
        pivots.push(c);
        r += 1;
    }
    HnfResult { h, u, pivots }
}

/// Rank of an integer matrix (equal to its rank over the rationals).
pub fn rank(a: &IntMatrix) -> usize {
    hermite_normal_form(a).rank()
}

fn check_lengths(vectors: &[LatticeVector]) -> Result<usize> {
    let n = vectors.first().map_or(0, LatticeVector::rank);
    for v in vectors {
        if v.rank() != n {
            return Err(Error::DimensionMismatch { expected: n, found: v.rank() });
        }
    }
    Ok(n)
}

/// True iff the vectors are part of a Z-basis of the lattice.
pub fn extends_to_basis(vectors: &[LatticeVector]) -> Result<bool> {
    let n = check_lengths(vectors)?;
    if vectors.is_empty() {
        return Ok(true);
    }
    if vectors.len() > n {
        return Ok(false);
    }
    let snf = smith_normal_form(&IntMatrix::from_columns(n, vectors));
    Ok(snf.invariant_factors().iter().all(One::is_one))
}

/// A basis `v_1..v_s, w_{s+1}..w_n` of `M` extending given vectors, together
/// with its dual basis `χ_1..χ_n` (`⟨χ_i, b_j⟩ = δ_ij`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisCompletion {
    pub basis: Vec<LatticeVector>,
    pub completion: Vec<LatticeVector>,
    pub dual: Vec<Character>,
}

/// Complete `vectors` to a Z-basis of `Z^rank`.
///
/// The completion vectors are the trailing columns of `U^{-1}` from the
/// Smith form `U·[v_1..v_s]·V`, which makes the choice deterministic.
pub fn complete_basis(rank: usize, vectors: &[LatticeVector]) -> Result<BasisCompletion> {
    for v in vectors {
        if v.rank() != rank {
            return Err(Error::DimensionMismatch { expected: rank, found: v.rank() });
        }
    }
    let s = vectors.len();
    if s > rank {
        return Err(Error::NotExtendable);
    }
    let snf = smith_normal_form(&IntMatrix::from_columns(rank, vectors));
    if !snf.invariant_factors().iter().all(One::is_one) {
        return Err(Error::NotExtendable);
    }
    let u_inv = snf.u.inverse_unimodular()?;
    let completion: Vec<LatticeVector> =
        (s..rank).map(|j| to_lattice_vector(&u_inv.column(j))).collect::<Result<_>>()?;

    let mut full = vectors.to_vec();
    full.extend(completion.iter().cloned());
    let inv = IntMatrix::from_columns(rank, &full).inverse_unimodular()?;
    let dual = (0..rank)
        .map(|i| Ok(Character::new(to_i64s(inv.row(i))?)))
        .collect::<Result<Vec<_>>>()?;
    Ok(BasisCompletion { basis: vectors.to_vec(), completion, dual })
}

/// The characters `χ_1..χ_s` dual to `v_1..v_s` that vanish on the
/// canonical completion.
pub fn dual_basis(vectors: &[LatticeVector]) -> Result<Vec<Character>> {
    let n = check_lengths(vectors)?;
    let mut c = complete_basis(n, vectors)?;
    c.dual.truncate(vectors.len());
    Ok(c.dual)
}

fn to_i64s(xs: &[BigInt]) -> Result<Vec<i64>> {
    xs.iter().map(|x| x.to_i64().ok_or(Error::Overflow)).collect()
}

fn to_lattice_vector(xs: &[BigInt]) -> Result<LatticeVector> {
    Ok(LatticeVector::new(to_i64s(xs)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lv(xs: &[i64]) -> LatticeVector {
        LatticeVector::new(xs.to_vec())
    }

    fn diag(snf: &SnfResult) -> Vec<i64> {
        snf.invariant_factors().iter().map(|x| x.to_i64().unwrap()).collect()
    }

    fn check_snf(a: &IntMatrix) -> SnfResult {
        let snf = smith_normal_form(a);
        assert_eq!(snf.u.mul(a).mul(&snf.v), snf.d);
        assert!(snf.d.is_diagonal());
        assert!(snf.u.det().abs().is_one());
        assert!(snf.v.det().abs().is_one());
        let f = snf.invariant_factors();
        for w in f.windows(2) {
            assert!(!w[0].is_negative());
            if w[0].is_zero() {
                assert!(w[1].is_zero());
            } else {
                assert!((&w[1] % &w[0]).is_zero());
            }
        }
        snf
    }

    #[test]
    fn snf_identity_is_untouched() {
        let a = IntMatrix::identity(2);
        let snf = check_snf(&a);
        assert_eq!(snf.d, a);
        assert_eq!(snf.u, a);
        assert_eq!(snf.v, a);
    }

    #[test]
    fn snf_examples() {
        assert_eq!(diag(&check_snf(&IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]))), [1, 6]);
        assert_eq!(diag(&check_snf(&IntMatrix::from_rows(&[vec![1, 2], vec![3, 4]]))), [1, 2]);
        assert_eq!(
            diag(&check_snf(&IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]))),
            [2, 6, 12]
        );
        assert_eq!(diag(&check_snf(&IntMatrix::from_rows(&[vec![0, 0], vec![0, 0]]))), [0, 0]);
        check_snf(&IntMatrix::from_rows(&[vec![3, 5, 7]]));
        check_snf(&IntMatrix::zeros(0, 3));
    }

    #[test]
    fn hnf_shape_and_rank() {
        let a = IntMatrix::from_rows(&[vec![2, 4, 6], vec![1, 3, 5], vec![3, 7, 11]]);
        let h = hermite_normal_form(&a);
        assert_eq!(h.u.mul(&a), h.h);
        assert!(h.u.det().abs().is_one());
        assert_eq!(h.rank(), 2);
        assert_eq!(h.h.row(0), &[BigInt::from(1), BigInt::from(1), BigInt::from(1)]);
        assert_eq!(h.h.row(1), &[BigInt::from(0), BigInt::from(2), BigInt::from(4)]);
        assert!(h.h.row(2).iter().all(Zero::is_zero));
    }

    #[test]
    fn determinant() {
        assert_eq!(IntMatrix::from_rows(&[vec![1, 2], vec![3, 4]]).det(), BigInt::from(-2));
        assert_eq!(
            IntMatrix::from_rows(&[vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 5]]).det(),
            BigInt::from(-5)
        );
    }

    #[test]
    fn extendability() {
        assert!(extends_to_basis(&[lv(&[1, 0]), lv(&[0, 1])]).unwrap());
        assert!(!extends_to_basis(&[lv(&[1, 0]), lv(&[1, 2])]).unwrap());
        assert!(extends_to_basis(&[]).unwrap());
        assert!(!extends_to_basis(&[lv(&[1, 0]), lv(&[2, 0])]).unwrap());
        assert!(!extends_to_basis(&[lv(&[2, 0])]).unwrap());
        assert!(extends_to_basis(&[lv(&[2, 3])]).unwrap());
        assert_eq!(
            extends_to_basis(&[lv(&[1, 0]), lv(&[1, 0, 0])]),
            Err(Error::DimensionMismatch { expected: 2, found: 3 })
        );
    }

    #[test]
    fn dual_basis_examples() {
        assert_eq!(
            dual_basis(&[lv(&[1, 0]), lv(&[0, 1])]).unwrap(),
            [Character::new(vec![1, 0]), Character::new(vec![0, 1])]
        );
        assert_eq!(
            dual_basis(&[lv(&[1, 0]), lv(&[1, 1])]).unwrap(),
            [Character::new(vec![1, -1]), Character::new(vec![0, 1])]
        );
        let c = complete_basis(2, &[lv(&[1, 0])]).unwrap();
        assert_eq!(c.completion, [lv(&[0, 1])]);
        assert_eq!(c.dual[0], Character::new(vec![1, 0]));
        assert_eq!(
            dual_basis(&[lv(&[1, 1]), lv(&[0, 1])]).unwrap(),
            [Character::new(vec![1, 0]), Character::new(vec![-1, 1])]
        );
        assert_eq!(dual_basis(&[lv(&[1, 0]), lv(&[1, 2])]), Err(Error::NotExtendable));
    }

    #[test]
    fn completion_pairs_to_delta() {
        let c = complete_basis(3, &[lv(&[1, 2, 3]), lv(&[0, 1, 4])]).unwrap();
        let full: Vec<_> = c.basis.iter().chain(&c.completion).collect();
        for (i, chi) in c.dual.iter().enumerate() {
            for (j, v) in full.iter().enumerate() {
                assert_eq!(chi.pair(v), i64::from(i == j));
            }
        }
    }

    #[test]
    fn primitivity() {
        assert!(lv(&[1, 0]).is_primitive());
        assert!(lv(&[-1, -1]).is_primitive());
        assert!(!lv(&[2, 0]).is_primitive());
        assert!(!lv(&[0, 0]).is_primitive());
        assert!(lv(&[2, 3]).is_primitive());
    }
}
