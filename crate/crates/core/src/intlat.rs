//! Exact integer matrices and the lattice operations built on the Smith
//! normal form.
//!
//! An `r × c` matrix represents the homomorphism `ℤ^c → ℤ^r` acting on column
//! vectors. Entries are [`BigInt`]s, so no operation can overflow. Shapes with
//! zero rows or zero columns are legal and represent zero maps.

use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from row vectors. All rows must have length `cols`.
    pub fn from_rows<T: Into<BigInt> + Clone>(cols: usize, rows: &[Vec<T>]) -> Result<Self> {
        let mut m = Self::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            for (j, x) in row.iter().enumerate() {
                m[(i, j)] = x.clone().into();
            }
        }
        Ok(m)
    }

    /// Builds a matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_cols<T: Into<BigInt> + Clone>(rows: usize, cols: &[Vec<T>]) -> Result<Self> {
        Ok(Self::from_rows(rows, cols)?.transpose())
    }

    /// Convenience constructor for literal matrices; panics on ragged input.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let v: Vec<Vec<i64>> = rows.iter().map(|r| r.to_vec()).collect();
        Self::from_rows(cols, &v).expect("ragged matrix literal")
    }

    pub fn diagonal<T: Into<BigInt> + Clone>(rows: usize, cols: usize, diag: &[T]) -> Self {
        let mut m = Self::zeros(rows, cols);
        for (i, d) in diag.iter().enumerate().take(rows.min(cols)) {
            m[(i, i)] = d.clone().into();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn row(&self, i: usize) -> Vec<BigInt> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn col(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn to_cols(&self) -> Vec<Vec<BigInt>> {
        (0..self.cols).map(|j| self.col(j)).collect()
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

    /// Columns `range` of `self`, in order.
    pub fn select_cols(&self, idx: impl IntoIterator<Item = usize>) -> Self {
        let cols: Vec<Vec<BigInt>> = idx.into_iter().map(|j| self.col(j)).collect();
        let mut m = Self::zeros(self.rows, cols.len());
        for (j, c) in cols.into_iter().enumerate() {
            for (i, x) in c.into_iter().enumerate() {
                m[(i, j)] = x;
            }
        }
        m
    }

    pub fn select_rows(&self, idx: impl IntoIterator<Item = usize>) -> Self {
        let rows: Vec<Vec<BigInt>> = idx.into_iter().map(|i| self.row(i)).collect();
        let n = rows.len();
        IntMatrix {
            rows: n,
            cols: self.cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// `[self | other]`.
    pub fn hcat(&self, other: &IntMatrix) -> Result<Self> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "hcat of {}-row and {}-row matrices",
                self.rows, other.rows
            )));
        }
        let mut m = Self::zeros(self.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(i, j)] = self[(i, j)].clone();
            }
            for j in 0..other.cols {
                m[(i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        Ok(m)
    }

    /// `self` stacked on top of `other`.
    pub fn vcat(&self, other: &IntMatrix) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "vcat of {}-column and {}-column matrices",
                self.cols, other.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(IntMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// Block-diagonal sum `diag(self, other)`.
    pub fn block_diag(&self, other: &IntMatrix) -> Self {
        let mut m = Self::zeros(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m[(i, j)] = self[(i, j)].clone();
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                m[(self.rows + i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        m
    }

    pub fn neg(&self) -> Self {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }

    pub fn sub(&self, other: &IntMatrix) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch(format!(
                "subtracting {}x{} from {}x{}",
                other.rows, other.cols, self.rows, self.cols
            )));
        }
        Ok(IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn checked_mul(&self, other: &IntMatrix) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "product of {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut m = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        m[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(m)
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| &self[(i, j)] * &v[j])
                    .fold(BigInt::zero(), |acc, x| acc + x)
            })
            .collect()
    }

    /// Determinant by fraction-free (Bareiss) elimination. Independent of the
    /// Smith normal form code, so it can serve as a check on it.
    pub fn determinant(&self) -> Result<BigInt> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "determinant of a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                    Some(i) => {
                        a.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)];
                    a[(i, j)] = v / &prev;
                }
            }
            prev = a[(k, k)].clone();
        }
        Ok(sign * a[(n - 1, n - 1)].clone())
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i != j {
            for c in 0..self.cols {
                self.data.swap(i * self.cols + c, j * self.cols + c);
            }
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i != j {
            for r in 0..self.rows {
                self.data.swap(r * self.cols + i, r * self.cols + j);
            }
        }
    }

    /// `row[dst] += c * row[src]`
    fn add_row(&mut self, dst: usize, src: usize, c: &BigInt) {
        for k in 0..self.cols {
            let v = &self[(src, k)] * c;
            self[(dst, k)] += v;
        }
    }

    /// `col[dst] += c * col[src]`
    fn add_col(&mut self, dst: usize, src: usize, c: &BigInt) {
        for k in 0..self.rows {
            let v = &self[(k, src)] * c;
            self[(k, dst)] += v;
        }
    }

    fn neg_row(&mut self, i: usize) {
        for k in 0..self.cols {
            let v = -&self[(i, k)];
            self[(i, k)] = v;
        }
    }

    fn neg_col(&mut self, j: usize) {
        for k in 0..self.rows {
            let v = -&self[(k, j)];
            self[(k, j)] = v;
        }
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        self.checked_mul(rhs)
            .expect("matrix product shape mismatch")
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "IntMatrix{}x{}{:?}",
            self.rows,
            self.cols,
            self.to_rows()
        )
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Smith normal form `U·M·V = D` together with the inverses of the two
/// unimodular transforms.
#[derive(Clone, Debug)]
pub struct SnfResult {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    pub u_inv: IntMatrix,
    pub v_inv: IntMatrix,
    /// The nonzero diagonal entries `d₁ | d₂ | … | d_r`, all positive.
    pub diagonal: Vec<BigInt>,
}

impl SnfResult {
    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }
}

struct SnfWork {
    a: IntMatrix,
    u: IntMatrix,
    u_inv: IntMatrix,
    v: IntMatrix,
    v_inv: IntMatrix,
}

impl SnfWork {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        self.u.swap_rows(i, j);
        self.u_inv.swap_cols(i, j);
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        self.v.swap_cols(i, j);
        self.v_inv.swap_rows(i, j);
    }

    fn add_row(&mut self, dst: usize, src: usize, c: &BigInt) {
        self.a.add_row(dst, src, c);
        self.u.add_row(dst, src, c);
        self.u_inv.add_col(src, dst, &-c);
    }

    fn add_col(&mut self, dst: usize, src: usize, c: &BigInt) {
        self.a.add_col(dst, src, c);
        self.v.add_col(dst, src, c);
        self.v_inv.add_row(src, dst, &-c);
    }

    fn neg_row(&mut self, i: usize) {
        self.a.neg_row(i);
        self.u.neg_row(i);
        self.u_inv.neg_col(i);
    }

    /// Position of the smallest nonzero entry (by absolute value) in the
    /// trailing block starting at `(t, t)`.
    fn min_entry(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.a.rows {
            for j in t..self.a.cols {
                let x = &self.a[(i, j)];
                if x.is_zero() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| x.abs() < self.a[(bi, bj)].abs()) {
                    best = Some((i, j));
                }
            }
        }
        best
    }

    /// Smallest nonzero entry among the pivot, the rest of row `t` and the
    /// rest of column `t`.
    fn min_in_cross(&self, t: usize) -> (usize, usize) {
        let mut best = (t, t);
        let mut best_abs = self.a[(t, t)].abs();
        for i in t + 1..self.a.rows {
            let x = self.a[(i, t)].abs();
            if !x.is_zero() && (best_abs.is_zero() || x < best_abs) {
                best = (i, t);
                best_abs = x;
            }
        }
        for j in t + 1..self.a.cols {
            let x = self.a[(t, j)].abs();
            if !x.is_zero() && (best_abs.is_zero() || x < best_abs) {
                best = (t, j);
                best_abs = x;
            }
        }
        best
    }
}

/// Smith normal form with transforms. Total on all integer matrices.
pub fn snf(m: &IntMatrix) -> SnfResult {
    let (rows, cols) = (m.rows, m.cols);
    let mut w = SnfWork {
        a: m.clone(),
        u: IntMatrix::identity(rows),
        u_inv: IntMatrix::identity(rows),
        v: IntMatrix::identity(cols),
        v_inv: IntMatrix::identity(cols),
    };
    let mut diagonal = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pi, pj)) = w.min_entry(t) else {
            break;
        };
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        loop {
            let p = w.a[(t, t)].clone();
            for i in t + 1..rows {
                if !w.a[(i, t)].is_zero() {
                    let q = w.a[(i, t)].div_floor(&p);
                    w.add_row(i, t, &-q);
                }
            }
            for j in t + 1..cols {
                if !w.a[(t, j)].is_zero() {
                    let q = w.a[(t, j)].div_floor(&p);
                    w.add_col(j, t, &-q);
                }
            }
            let (bi, bj) = w.min_in_cross(t);
            if (bi, bj) != (t, t) {
                // a nonzero remainder is smaller than the pivot
                w.swap_rows(t, bi);
                w.swap_cols(t, bj);
                continue;
            }
            let bad = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !w.a[(i, j)].is_multiple_of(&p));
            match bad {
                Some((i, _)) => w.add_row(t, i, &BigInt::one()),
                None => break,
            }
        }
        if w.a[(t, t)].is_negative() {
            w.neg_row(t);
        }
        diagonal.push(w.a[(t, t)].clone());
        t += 1;
    }
    SnfResult {
        u: w.u,
        d: w.a,
        v: w.v,
        u_inv: w.u_inv,
        v_inv: w.v_inv,
        diagonal,
    }
}

pub fn rank(m: &IntMatrix) -> usize {
    snf(m).rank()
}

/// A basis (as columns) of `{v ∈ ℤ^cols : M·v = 0}`. The kernel is saturated
/// and the basis spans it exactly.
pub fn kernel_basis(m: &IntMatrix) -> IntMatrix {
    let s = snf(m);
    s.v.select_cols(s.rank()..m.cols)
}

/// A basis (as columns) of the column span of `m`.
pub fn image_basis(m: &IntMatrix) -> IntMatrix {
    let s = snf(m);
    // M·V = U⁻¹·D, whose first r columns are d_i times columns of U⁻¹
    let mut b = s.u_inv.select_cols(0..s.rank());
    for (j, d) in s.diagonal.iter().enumerate() {
        for i in 0..b.rows {
            b[(i, j)] *= d;
        }
    }
    b
}

/// A basis of the saturation `{v : n·v ∈ span(L) for some n ≥ 1}` of the
/// column span of `l`.
pub fn saturation(l: &IntMatrix) -> IntMatrix {
    let s = snf(l);
    s.u_inv.select_cols(0..s.rank())
}

pub fn is_unimodular(m: &IntMatrix) -> bool {
    if !m.is_square() {
        return false;
    }
    let s = snf(m);
    s.rank() == m.rows && s.diagonal.iter().all(One::is_one)
}

/// Some integer solution `x` of `a·x = b`, if one exists.
pub fn solve(a: &IntMatrix, b: &[BigInt]) -> Option<Vec<BigInt>> {
    let s = snf(a);
    solve_with(&s, b)
}

fn solve_with(s: &SnfResult, b: &[BigInt]) -> Option<Vec<BigInt>> {
    let c = s.u.mul_vec(b);
    let r = s.rank();
    if c[r..].iter().any(|x| !x.is_zero()) {
        return None;
    }
    let mut y = vec![BigInt::zero(); s.v.rows];
    for i in 0..r {
        let (q, rem) = c[i].div_rem(&s.diagonal[i]);
        if !rem.is_zero() {
            return None;
        }
        y[i] = q;
    }
    Some(s.v.mul_vec(&y))
}

/// Some integer solution `X` of `a·X = b`, solved column by column.
pub fn solve_matrix(a: &IntMatrix, b: &IntMatrix) -> Option<IntMatrix> {
    if a.rows != b.rows {
        return None;
    }
    let s = snf(a);
    let mut x = IntMatrix::zeros(a.cols, b.cols);
    for j in 0..b.cols {
        let col = solve_with(&s, &b.col(j))?;
        for (i, v) in col.into_iter().enumerate() {
            x[(i, j)] = v;
        }
    }
    Some(x)
}

/// True iff every column of `sub` lies in the column span of `lattice`.
pub fn contains_all(lattice: &IntMatrix, sub: &IntMatrix) -> bool {
    lattice.rows == sub.rows && solve_matrix(lattice, sub).is_some()
}

/// True iff the column spans of `a` and `b` coincide.
pub fn same_lattice(a: &IntMatrix, b: &IntMatrix) -> bool {
    contains_all(a, b) && contains_all(b, a)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn check_snf(m: &IntMatrix) -> SnfResult {
        let s = snf(m);
        assert_eq!(&(&s.u * m) * &s.v, s.d);
        assert_eq!(&s.u * &s.u_inv, IntMatrix::identity(m.rows()));
        assert_eq!(&s.v * &s.v_inv, IntMatrix::identity(m.cols()));
        for w in s.diagonal.windows(2) {
            assert!(w[1].is_multiple_of(&w[0]));
        }
        s
    }

    #[test]
    fn snf_identity() {
        let s = check_snf(&IntMatrix::identity(2));
        assert_eq!(s.diagonal, big(&[1, 1]));
        assert_eq!(s.u, IntMatrix::identity(2));
        assert_eq!(s.v, IntMatrix::identity(2));
    }

    #[test]
    fn snf_small_examples() {
        // gcd of entries 2, |det| = 8
        let s = check_snf(&IntMatrix::from_i64(&[&[2, 4], &[6, 8]]));
        assert_eq!(s.diagonal, big(&[2, 4]));
        let s = check_snf(&IntMatrix::from_i64(&[&[2, 0], &[0, 3]]));
        assert_eq!(s.diagonal, big(&[1, 6]));
        let s = check_snf(&IntMatrix::zeros(3, 2));
        assert!(s.diagonal.is_empty());
    }

    #[test]
    fn snf_degenerate_shapes() {
        for (r, c) in [(0, 0), (0, 3), (3, 0)] {
            let s = check_snf(&IntMatrix::zeros(r, c));
            assert_eq!(s.rank(), 0);
            assert_eq!(s.u.rows(), r);
            assert_eq!(s.v.rows(), c);
        }
    }

    #[test]
    fn snf_needs_divisibility_fix() {
        // already diagonal but 2 ∤ 3
        let s = check_snf(&IntMatrix::from_i64(&[&[2, 0, 0], &[0, 3, 0], &[0, 0, 0]]));
        assert_eq!(s.diagonal, big(&[1, 6]));
        let s = check_snf(&IntMatrix::from_i64(&[&[4, 0], &[0, 6], &[0, 0]]));
        assert_eq!(s.diagonal, big(&[2, 12]));
    }

    #[test]
    fn kernel_examples() {
        let k = kernel_basis(&IntMatrix::from_i64(&[&[1, 1]]));
        assert_eq!(k.cols(), 1);
        let v = k.col(0);
        assert!(v == big(&[1, -1]) || v == big(&[-1, 1]));
        assert_eq!(kernel_basis(&IntMatrix::identity(3)).cols(), 0);
        assert_eq!(kernel_basis(&IntMatrix::from_i64(&[&[2]])).cols(), 0);
        // 0×n has the whole space as kernel
        assert_eq!(kernel_basis(&IntMatrix::zeros(0, 3)).cols(), 3);
    }

    #[test]
    fn saturation_examples() {
        let s = saturation(&IntMatrix::from_cols(2, &[vec![2, 0]]).unwrap());
        assert!(same_lattice(
            &s,
            &IntMatrix::from_cols(2, &[vec![1, 0]]).unwrap()
        ));
        let s = saturation(&IntMatrix::from_i64(&[&[1, 1], &[0, 1]]));
        assert!(same_lattice(&s, &IntMatrix::identity(2)));
        let s = saturation(&IntMatrix::from_cols(2, &[vec![2, 4]]).unwrap());
        assert!(same_lattice(
            &s,
            &IntMatrix::from_cols(2, &[vec![1, 2]]).unwrap()
        ));
    }

    #[test]
    fn unimodular_examples() {
        assert!(is_unimodular(&IntMatrix::identity(3)));
        assert!(is_unimodular(&IntMatrix::from_i64(&[&[1, 1], &[0, 1]])));
        assert!(!is_unimodular(&IntMatrix::from_i64(&[&[2, 0], &[0, 1]])));
        assert!(!is_unimodular(&IntMatrix::zeros(1, 2)));
        assert!(is_unimodular(&IntMatrix::zeros(0, 0)));
    }

    #[test]
    fn determinant_matches_hand_values() {
        assert_eq!(
            IntMatrix::from_i64(&[&[2, 4], &[6, 8]])
                .determinant()
                .unwrap(),
            BigInt::from(-8)
        );
        assert_eq!(
            IntMatrix::from_i64(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 5]])
                .determinant()
                .unwrap(),
            BigInt::from(-5)
        );
        assert!(IntMatrix::zeros(2, 3).determinant().is_err());
    }

    #[test]
    fn solve_reports_unsolvable() {
        let a = IntMatrix::from_i64(&[&[2, 0], &[0, 3]]);
        assert_eq!(solve(&a, &big(&[4, 9])), Some(big(&[2, 3])));
        assert_eq!(solve(&a, &big(&[1, 0])), None);
        let a = IntMatrix::from_i64(&[&[1], &[1]]);
        assert_eq!(solve(&a, &big(&[1, 2])), None);
    }

    #[test]
    fn image_basis_spans_columns() {
        let m = IntMatrix::from_i64(&[&[2, 4, 6], &[0, 0, 0], &[1, 2, 3]]);
        let b = image_basis(&m);
        assert_eq!(b.cols(), 1);
        assert!(same_lattice(&b, &m));
    }

    #[test]
    fn big_entries_do_not_overflow() {
        let huge = BigInt::from(i64::MAX) * BigInt::from(i64::MAX);
        let m = IntMatrix::from_cols(
            2,
            &[
                vec![huge.clone(), BigInt::zero()],
                vec![BigInt::zero(), huge.clone() * 2],
            ],
        )
        .unwrap();
        let s = check_snf(&m);
        assert_eq!(s.diagonal, vec![huge.clone(), huge * 2]);
    }
}
