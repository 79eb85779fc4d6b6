//! Dense exact linear algebra over a prime field GF(p).
//!
//! Entries are stored as canonical residues `0 <= x < p` in row-major order.
//! The modulus is bounded by `2^16`, so a product of two residues fits in a
//! `u32` and sums of products are accumulated in `u64` before reduction.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// The prime field GF(p).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Field {
    p: u32,
}

impl Field {
    pub const DEFAULT_PRIME: u32 = 101;

    pub fn new(p: u32) -> Result<Field> {
        if !(2..(1 << 16)).contains(&p) {
            return Err(Error::input(format!("field size {p} outside 2..65536")));
        }
        if !is_prime(p) {
            return Err(Error::input(format!("field size {p} is not prime")));
        }
        Ok(Field { p })
    }

    pub fn p(self) -> u32 {
        self.p
    }

    #[inline]
    pub fn add(self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u32, b: u32) -> u32 {
        (a * b) % self.p
    }

    pub fn pow(self, mut a: u32, mut e: u64) -> u32 {
        let mut r = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(self, a: u32) -> u32 {
        assert!(a != 0, "inverse of zero in GF({})", self.p);
        self.pow(a, (self.p - 2) as u64)
    }

    pub fn from_i64(self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    pub fn scalar(self, v: i64) -> Scalar {
        Scalar {
            value: self.from_i64(v),
            field: self,
        }
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// A residue together with its field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Scalar {
    value: u32,
    field: Field,
}

impl Scalar {
    pub fn value(self) -> u32 {
        self.value
    }

    pub fn field(self) -> Field {
        self.field
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn inv(self) -> Scalar {
        Scalar {
            value: self.field.inv(self.value),
            field: self.field,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

macro_rules! scalar_binop {
    ($tr:ident, $method:ident, $op:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                assert_eq!(self.field, rhs.field, "mixed fields");
                Scalar {
                    value: self.field.$op(self.value, rhs.value),
                    field: self.field,
                }
            }
        }
    };
}

scalar_binop!(Add, add, add);
scalar_binop!(Sub, sub, sub);
scalar_binop!(Mul, mul, mul);

impl Div for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        self * rhs.inv()
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            value: self.field.neg(self.value),
            field: self.field,
        }
    }
}

/// Dense row-major matrix over GF(p).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    rows: usize,
    cols: usize,
    field: Field,
    data: Vec<u32>,
}

/// Reduced row echelon form of a matrix.
#[derive(Clone, Debug)]
pub struct Rref {
    pub reduced: Mat,
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Solution set of `A X = B`: one particular solution and a basis (as
/// columns) of the null space of `A`.
#[derive(Clone, Debug)]
pub struct Solution {
    pub particular: Mat,
    pub null_basis: Mat,
}

impl Mat {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Mat {
        Mat {
            rows,
            cols,
            field,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: Field, n: usize) -> Mat {
        let mut m = Mat::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1 % field.p;
        }
        m
    }

    /// Build from signed integer rows, reducing mod p. All rows must have the
    /// same length; `cols` is used when there are no rows.
    pub fn from_rows(field: Field, cols: usize, rows: &[Vec<i64>]) -> Mat {
        let mut m = Mat::zeros(field, rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged matrix literal");
            for (j, &v) in r.iter().enumerate() {
                m.data[i * cols + j] = field.from_i64(v);
            }
        }
        m
    }

    pub fn from_fn(field: Field, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> u32) -> Mat {
        let mut m = Mat::zeros(field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.data[i * cols + j] = f(i, j) % field.p;
            }
        }
        m
    }

    /// A single column vector.
    pub fn column(field: Field, v: &[u32]) -> Mat {
        Mat {
            rows: v.len(),
            cols: 1,
            field,
            data: v.to_vec(),
        }
    }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_columns(field: Field, rows: usize, cols: &[Vec<u32>]) -> Mat {
        let mut m = Mat::zeros(field, rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            debug_assert_eq!(c.len(), rows);
            for i in 0..rows {
                m.data[i * m.cols + j] = c[i];
            }
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn field(&self) -> Field {
        self.field
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v % self.field.p;
    }

    pub fn scalar(&self, i: usize, j: usize) -> Scalar {
        Scalar {
            value: self.get(i, j),
            field: self.field,
        }
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<u32> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn columns(&self) -> Vec<Vec<u32>> {
        (0..self.cols).map(|j| self.col(j)).collect()
    }

    pub fn data(&self) -> &[u32] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..self.cols).all(|j| self.get(i, j) == u32::from(i == j)))
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.data[i * self.cols + j];
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Mat) -> Mat {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let p = self.field.p as u64;
        let mut out = Mat::zeros(self.field, self.rows, rhs.cols);
        if self.cols == 0 {
            return out;
        }
        let mut acc = vec![0u64; rhs.cols];
        for i in 0..self.rows {
            acc.iter_mut().for_each(|a| *a = 0);
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k] as u64;
                if a == 0 {
                    continue;
                }
                let r = &rhs.data[k * rhs.cols..(k + 1) * rhs.cols];
                for (acc_j, &b) in acc.iter_mut().zip(r) {
                    *acc_j += a * b as u64;
                }
                // keep the accumulator bounded
                if k % 1024 == 1023 {
                    acc.iter_mut().for_each(|x| *x %= p);
                }
            }
            for j in 0..rhs.cols {
                out.data[i * rhs.cols + j] = (acc[j] % p) as u32;
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(self.cols, v.len());
        let p = self.field.p as u64;
        (0..self.rows)
            .map(|i| {
                let s: u64 = self.row(i).iter().zip(v).map(|(&a, &b)| a as u64 * b as u64).sum();
                (s % p) as u32
            })
            .collect()
    }

    pub fn add(&self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let f = self.field;
        Mat {
            rows: self.rows,
            cols: self.cols,
            field: f,
            data: self.data.iter().zip(&rhs.data).map(|(&a, &b)| f.add(a, b)).collect(),
        }
    }

    pub fn sub(&self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let f = self.field;
        Mat {
            rows: self.rows,
            cols: self.cols,
            field: f,
            data: self.data.iter().zip(&rhs.data).map(|(&a, &b)| f.sub(a, b)).collect(),
        }
    }

    pub fn scale(&self, c: u32) -> Mat {
        let f = self.field;
        Mat {
            rows: self.rows,
            cols: self.cols,
            field: f,
            data: self.data.iter().map(|&a| f.mul(a, c % f.p)).collect(),
        }
    }

    /// `self += c * rhs`
    pub fn add_scaled(&mut self, c: u32, rhs: &Mat) {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        if c == 0 {
            return;
        }
        let f = self.field;
        for (a, &b) in self.data.iter_mut().zip(&rhs.data) {
            *a = f.add(*a, f.mul(c, b));
        }
    }

    pub fn pow(&self, mut e: u64) -> Mat {
        assert_eq!(self.rows, self.cols);
        let mut base = self.clone();
        let mut r = Mat::identity(self.field, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                r = r.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        r
    }

    pub fn hstack(field: Field, rows: usize, parts: &[&Mat]) -> Mat {
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut out = Mat::zeros(field, rows, cols);
        let mut off = 0;
        for m in parts {
            assert_eq!(m.rows, rows);
            for i in 0..rows {
                out.data[i * cols + off..i * cols + off + m.cols].copy_from_slice(m.row(i));
            }
            off += m.cols;
        }
        out
    }

    pub fn vstack(field: Field, cols: usize, parts: &[&Mat]) -> Mat {
        let mut data = Vec::new();
        let mut rows = 0;
        for m in parts {
            assert_eq!(m.cols, cols);
            data.extend_from_slice(&m.data);
            rows += m.rows;
        }
        Mat { rows, cols, field, data }
    }

    /// Block-diagonal matrix.
    pub fn block_diag(field: Field, blocks: &[&Mat]) -> Mat {
        let rows = blocks.iter().map(|m| m.rows).sum();
        let cols = blocks.iter().map(|m| m.cols).sum();
        let mut out = Mat::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            out.set_block(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Mat) {
        for i in 0..b.rows {
            let dst = (r0 + i) * self.cols + c0;
            self.data[dst..dst + b.cols].copy_from_slice(b.row(i));
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Mat {
        let mut out = Mat::zeros(self.field, rows, cols);
        for i in 0..rows {
            let src = (r0 + i) * self.cols + c0;
            out.data[i * cols..(i + 1) * cols].copy_from_slice(&self.data[src..src + cols]);
        }
        out
    }

    pub fn select_rows(&self, idx: &[usize]) -> Mat {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &i in idx {
            data.extend_from_slice(self.row(i));
        }
        Mat {
            rows: idx.len(),
            cols: self.cols,
            field: self.field,
            data,
        }
    }

    pub fn select_cols(&self, idx: &[usize]) -> Mat {
        Mat::from_fn(self.field, self.rows, idx.len(), |i, j| self.get(i, idx[j]))
    }

    /// In-place Gauss–Jordan elimination restricted to the first `limit`
    /// columns. Returns the pivot columns.
    fn eliminate(&mut self, limit: usize) -> Vec<usize> {
        let f = self.field;
        let p = f.p as u64;
        let cols = self.cols;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..limit {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| self.data[i * cols + c] != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..cols {
                    self.data.swap(pr * cols + j, r * cols + j);
                }
            }
            let inv = f.inv(self.data[r * cols + c]) as u64;
            for j in c..cols {
                let x = &mut self.data[r * cols + j];
                *x = ((*x as u64 * inv) % p) as u32;
            }
            let (before, rest) = self.data.split_at_mut(r * cols);
            let (pivot_row, after) = rest.split_at_mut(cols);
            let reduce = |row: &mut [u32]| {
                let a = row[c] as u64;
                if a == 0 {
                    return;
                }
                let na = p - a;
                for j in c..cols {
                    row[j] = ((row[j] as u64 + na * pivot_row[j] as u64) % p) as u32;
                }
            };
            for row in before.chunks_mut(cols) {
                reduce(row);
            }
            for row in after.chunks_mut(cols) {
                reduce(row);
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rref(&self) -> Rref {
        let mut reduced = self.clone();
        let pivots = reduced.eliminate(self.cols);
        Rref { reduced, pivots }
    }

    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        // eliminate along the shorter side
        if self.rows < self.cols {
            self.transpose().rref().rank()
        } else {
            self.rref().rank()
        }
    }

    /// Columns spanning the kernel of `self`.
    pub fn kernel_basis(&self) -> Mat {
        let Rref { reduced, pivots } = self.rref();
        let n = self.cols;
        let mut is_pivot = vec![false; n];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let free: Vec<usize> = (0..n).filter(|&c| !is_pivot[c]).collect();
        let f = self.field;
        let mut k = Mat::zeros(f, n, free.len());
        for (j, &fc) in free.iter().enumerate() {
            k.set(fc, j, 1);
            for (r, &pc) in pivots.iter().enumerate() {
                k.set(pc, j, f.neg(reduced.get(r, fc)));
            }
        }
        k
    }

    /// Solve `self * X = b`. Returns `None` when the system is inconsistent.
    pub fn solve(&self, b: &Mat) -> Option<Solution> {
        assert_eq!(self.rows, b.rows, "solve: row mismatch");
        let n = self.cols;
        let mut aug = Mat::hstack(self.field, self.rows, &[self, b]);
        let pivots = aug.eliminate(n);
        let rank = pivots.len();
        for r in rank..aug.rows {
            if aug.row(r)[n..].iter().any(|&x| x != 0) {
                return None;
            }
        }
        let mut particular = Mat::zeros(self.field, n, b.cols);
        for (r, &pc) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                particular.set(pc, j, aug.get(r, n + j));
            }
        }
        let null_basis = self.kernel_basis();
        Some(Solution { particular, null_basis })
    }

    /// Solve for a single vector, returning one solution.
    pub fn solve_vec(&self, b: &[u32]) -> Option<Vec<u32>> {
        self.solve(&Mat::column(self.field, b)).map(|s| s.particular.col(0))
    }

    pub fn inverse(&self) -> Option<Mat> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Mat::hstack(self.field, n, &[self, &Mat::identity(self.field, n)]);
        let pivots = aug.eliminate(n);
        if pivots.len() < n {
            return None;
        }
        Some(aug.block(0, n, n, n))
    }

    /// Indices of a maximal set of linearly independent columns (greedy, left
    /// to right).
    pub fn independent_columns(&self) -> Vec<usize> {
        self.rref().pivots
    }

    /// Basis (as columns) of the column space.
    pub fn column_space(&self) -> Mat {
        let piv = self.independent_columns();
        self.select_cols(&piv)
    }

    /// Given independent columns spanning a subspace `S` of `F^n`, returns
    /// standard basis vectors (as columns) completing them to a basis of `F^n`.
    pub fn complement_columns(&self) -> Mat {
        let n = self.rows;
        let aug = Mat::hstack(self.field, n, &[self, &Mat::identity(self.field, n)]);
        let piv = aug.rref().pivots;
        let extra: Vec<usize> = piv.into_iter().filter(|&c| c >= self.cols).map(|c| c - self.cols).collect();
        Mat::identity(self.field, n).select_cols(&extra)
    }

    /// Left inverse of a matrix with independent columns: `L * self = I`.
    pub fn left_inverse(&self) -> Mat {
        let k = self.cols;
        let t = self.transpose();
        let rows = t.independent_columns();
        assert_eq!(rows.len(), k, "left_inverse: columns not independent");
        let square = self.select_rows(&rows);
        let inv = square.inverse().expect("selected rows are independent");
        let mut l = Mat::zeros(self.field, k, self.rows);
        for (j, &r) in rows.iter().enumerate() {
            for i in 0..k {
                l.set(i, r, inv.get(i, j));
            }
        }
        l
    }

    /// Characteristic polynomial `det(x I - self)`, coefficients from the
    /// constant term upward (monic, length n + 1). Uses a Hessenberg
    /// reduction, valid over any field.
    pub fn charpoly(&self) -> Vec<u32> {
        assert_eq!(self.rows, self.cols);
        let f = self.field;
        let n = self.rows;
        let mut h = self.clone();
        for k in 0..n.saturating_sub(2) {
            let Some(i) = (k + 1..n).find(|&i| h.get(i, k) != 0) else {
                continue;
            };
            if i != k + 1 {
                for j in 0..n {
                    h.data.swap(i * n + j, (k + 1) * n + j);
                }
                for r in 0..n {
                    h.data.swap(r * n + i, r * n + k + 1);
                }
            }
            let inv = f.inv(h.get(k + 1, k));
            for j in k + 2..n {
                let u = f.mul(h.get(j, k), inv);
                if u == 0 {
                    continue;
                }
                for c in 0..n {
                    let v = f.sub(h.get(j, c), f.mul(u, h.get(k + 1, c)));
                    h.data[j * n + c] = v;
                }
                for r in 0..n {
                    let v = f.add(h.get(r, k + 1), f.mul(u, h.get(r, j)));
                    h.data[r * n + k + 1] = v;
                }
            }
        }
        let mut polys: Vec<Vec<u32>> = vec![vec![1 % f.p]];
        for m in 1..=n {
            let prev = &polys[m - 1];
            let mut pm = vec![0u32; m + 1];
            let hmm = h.get(m - 1, m - 1);
            for (d, &c) in prev.iter().enumerate() {
                pm[d + 1] = f.add(pm[d + 1], c);
                pm[d] = f.sub(pm[d], f.mul(hmm, c));
            }
            let mut t = 1 % f.p;
            for i in 1..m {
                t = f.mul(t, h.get(m - i, m - i - 1));
                let coeff = f.mul(t, h.get(m - i - 1, m - 1));
                if coeff == 0 {
                    continue;
                }
                for (d, &c) in polys[m - i - 1].iter().enumerate() {
                    pm[d] = f.sub(pm[d], f.mul(coeff, c));
                }
            }
            polys.push(pm);
        }
        polys.pop().unwrap()
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat[{}x{} mod {}]", self.rows, self.cols, self.field.p)?;
        for i in 0..self.rows {
            write!(f, "\n  {:?}", self.row(i))?;
        }
        Ok(())
    }
}

/// Polynomial helpers over GF(p), coefficients from the constant term upward.
pub mod poly {
    use super::Field;

    pub fn eval(f: Field, coeffs: &[u32], x: u32) -> u32 {
        coeffs.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// Divide by `(x - root)`, assuming `root` is a root.
    pub fn deflate(f: Field, coeffs: &[u32], root: u32) -> Vec<u32> {
        let n = coeffs.len() - 1;
        let mut q = vec![0u32; n];
        let mut carry = 0;
        for d in (0..n).rev() {
            carry = f.add(coeffs[d + 1], f.mul(carry, root));
            q[d] = carry;
        }
        q
    }

    /// Roots in GF(p) with multiplicities, in increasing order of the root.
    pub fn roots(f: Field, coeffs: &[u32]) -> Vec<(u32, usize)> {
        let mut out = Vec::new();
        let mut c = coeffs.to_vec();
        for x in 0..f.p() {
            if c.len() <= 1 {
                break;
            }
            let mut mult = 0;
            while c.len() > 1 && eval(f, &c, x) == 0 {
                c = deflate(f, &c, x);
                mult += 1;
            }
            if mult > 0 {
                out.push((x, mult));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f7() -> Field {
        Field::new(7).unwrap()
    }

    #[test]
    fn field_rejects_composites_and_range() {
        assert!(Field::new(1).is_err());
        assert!(Field::new(9).is_err());
        assert!(Field::new(65537).is_err());
        assert!(Field::new(65521).is_ok());
    }

    #[test]
    fn rref_identity_and_zero() {
        let f = f7();
        let r = Mat::identity(f, 3).rref();
        assert_eq!(r.rank(), 3);
        assert_eq!(r.pivots, vec![0, 1, 2]);
        let z = Mat::zeros(f, 2, 2).rref();
        assert_eq!(z.rank(), 0);
        assert!(z.pivots.is_empty());
    }

    #[test]
    fn rref_dependent_rows() {
        let m = Mat::from_rows(f7(), 2, &[vec![1, 2], vec![2, 4]]);
        assert_eq!(m.rref().rank(), 1);
    }

    #[test]
    fn solve_examples() {
        let f = f7();
        let i2 = Mat::identity(f, 2);
        let s = i2.solve(&i2).unwrap();
        assert_eq!(s.particular, i2);
        assert_eq!(s.null_basis.cols(), 0);

        let z = Mat::zeros(f, 2, 2);
        assert_eq!(z.solve(&z).unwrap().null_basis.cols(), 2);

        let a = Mat::from_rows(f, 2, &[vec![1, 1]]);
        let s = a.solve(&Mat::zeros(f, 1, 1)).unwrap();
        assert_eq!(s.null_basis.columns(), vec![vec![6, 1]]);
        // the stated basis vector (1,6) spans the same line
        assert!(a.mul_vec(&[1, 6]).iter().all(|&x| x == 0));
    }

    #[test]
    fn solve_inconsistent() {
        let f = f7();
        let a = Mat::from_rows(f, 2, &[vec![1, 2], vec![2, 4]]);
        let b = Mat::from_rows(f, 1, &[vec![1], vec![0]]);
        assert!(a.solve(&b).is_none());
    }

    #[test]
    fn kernel_examples() {
        let f = f7();
        assert_eq!(Mat::identity(f, 3).kernel_basis().cols(), 0);
        assert_eq!(Mat::zeros(f, 3, 3).kernel_basis().cols(), 3);
        let a = Mat::from_rows(f, 2, &[vec![1, 2], vec![2, 4]]);
        let k = a.kernel_basis();
        assert_eq!(k.cols(), 1);
        assert!(a.mul(&k).is_zero());
        assert!(a.mul_vec(&[2, 6]).iter().all(|&x| x == 0));
    }

    #[test]
    fn charpoly_small() {
        let f = f7();
        // [[1,2],[3,4]]: x^2 - 5x - 2
        let m = Mat::from_rows(f, 2, &[vec![1, 2], vec![3, 4]]);
        assert_eq!(m.charpoly(), vec![f.from_i64(-2), f.from_i64(-5), 1]);
        assert_eq!(Mat::identity(f, 3).charpoly(), vec![6, 3, 4, 1]);
    }

    #[test]
    fn left_inverse_and_complement() {
        let f = f7();
        let s = Mat::from_rows(f, 1, &[vec![0], vec![3], vec![1]]);
        let l = s.left_inverse();
        assert!(l.mul(&s).is_identity());
        let c = s.complement_columns();
        assert_eq!(c.cols(), 2);
        assert_eq!(Mat::hstack(f, 3, &[&s, &c]).rank(), 3);
    }

    #[test]
    fn poly_roots_with_multiplicity() {
        let f = f7();
        // (x-2)^2 (x-5) = x^3 - 9x^2 + 24x - 20
        let c = vec![f.from_i64(-20), f.from_i64(24), f.from_i64(-9), 1];
        assert_eq!(poly::roots(f, &c), vec![(2, 2), (5, 1)]);
    }
}
