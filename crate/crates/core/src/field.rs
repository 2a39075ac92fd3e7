//! Prime fields GF(p) and dense linear algebra over them.
//!
//! Scalars are plain `u32` residues in `[0, p)`. With `p <= 97` every
//! product of two residues fits comfortably in a `u32`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

pub const MAX_PRIME: u32 = 97;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if !(2..=MAX_PRIME).contains(&p) || !is_prime(p) {
            return Err(Error::InvalidPrime(p));
        }
        Ok(Self { p })
    }

    pub fn modulus(self) -> u32 {
        self.p
    }

    pub fn reduce(self, value: i64) -> u32 {
        value.rem_euclid(self.p as i64) as u32
    }

    pub fn add(self, a: u32, b: u32) -> u32 {
        (a + b) % self.p
    }

    pub fn sub(self, a: u32, b: u32) -> u32 {
        (a + self.p - b) % self.p
    }

    pub fn neg(self, a: u32) -> u32 {
        (self.p - a) % self.p
    }

    pub fn mul(self, a: u32, b: u32) -> u32 {
        (a * b) % self.p
    }

    /// Multiplicative inverse; `a` must be nonzero.
    pub fn inv(self, a: u32) -> u32 {
        debug_assert!(!a.is_multiple_of(self.p));
        // a^(p-2) by Fermat
        let mut result = 1;
        let mut base = a % self.p;
        let mut exp = self.p - 2;
        while exp > 0 {
            if exp & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        result
    }

    /// Signed representative in `(-p/2, p/2]`, used for display.
    pub fn signed(self, a: u32) -> i64 {
        let a = a as i64;
        let p = self.p as i64;
        if a * 2 > p {
            a - p
        } else {
            a
        }
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.p)
    }
}

fn is_prime(n: u32) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vector {
    field: PrimeField,
    coords: Vec<u32>,
}

impl Vector {
    pub fn new(field: PrimeField, coords: impl IntoIterator<Item = i64>) -> Self {
        Self { field, coords: coords.into_iter().map(|c| field.reduce(c)).collect() }
    }

    pub fn zero(field: PrimeField, dim: usize) -> Self {
        Self { field, coords: vec![0; dim] }
    }

    pub fn basis(field: PrimeField, dim: usize, i: usize) -> Self {
        let mut v = Self::zero(field, dim);
        v.coords[i] = 1;
        v
    }

    /// The vector whose coordinates are the base-`p` digits of `index`,
    /// most significant first. Inverse of [`Vector::index`].
    pub fn from_index(field: PrimeField, dim: usize, mut index: u64) -> Self {
        let p = field.modulus() as u64;
        let mut coords = vec![0; dim];
        for c in coords.iter_mut().rev() {
            *c = (index % p) as u32;
            index /= p;
        }
        Self { field, coords }
    }

    pub fn index(&self) -> u64 {
        let p = self.field.modulus() as u64;
        self.coords.iter().fold(0, |acc, &c| acc * p + c as u64)
    }

    /// All `p^dim` vectors in lexicographic order.
    pub fn all(field: PrimeField, dim: usize) -> impl Iterator<Item = Vector> {
        let count = (field.modulus() as u64).pow(dim as u32);
        (0..count).map(move |i| Vector::from_index(field, dim, i))
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &Vector) -> Vector {
        debug_assert_eq!(self.dim(), other.dim());
        let f = self.field;
        Vector { field: f, coords: self.coords.iter().zip(&other.coords).map(|(&a, &b)| f.add(a, b)).collect() }
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        debug_assert_eq!(self.dim(), other.dim());
        let f = self.field;
        Vector { field: f, coords: self.coords.iter().zip(&other.coords).map(|(&a, &b)| f.sub(a, b)).collect() }
    }

    pub fn scale(&self, lambda: u32) -> Vector {
        let f = self.field;
        Vector { field: f, coords: self.coords.iter().map(|&a| f.mul(a, lambda)).collect() }
    }

    /// `self += lambda * other`
    pub(crate) fn add_scaled(&mut self, lambda: u32, other: &Vector) {
        let f = self.field;
        for (a, &b) in self.coords.iter_mut().zip(&other.coords) {
            *a = f.add(*a, f.mul(lambda, b));
        }
    }

    /// Row vector times matrix.
    pub fn mul_matrix(&self, m: &Matrix) -> Vector {
        debug_assert_eq!(self.dim(), m.rows);
        let f = self.field;
        let mut coords = vec![0; m.cols];
        for (i, &a) in self.coords.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, c) in coords.iter_mut().enumerate() {
                *c = f.add(*c, f.mul(a, m.get(i, j)));
            }
        }
        Vector { field: f, coords }
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Dense row-major matrix over a prime field.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    entries: Vec<u32>,
}

impl Matrix {
    pub fn new(field: PrimeField, rows: usize, cols: usize, entries: Vec<u32>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch { expected: rows * cols, found: entries.len() });
        }
        let p = field.modulus();
        Ok(Self { field, rows, cols, entries: entries.into_iter().map(|e| e % p).collect() })
    }

    /// Builds a matrix from signed rows, reducing mod p. All rows must have equal length.
    pub fn from_rows(field: PrimeField, rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, found: row.len() });
            }
            entries.extend(row.iter().map(|&e| field.reduce(e)));
        }
        Ok(Self { field, rows: rows.len(), cols, entries })
    }

    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Self { field, rows, cols, entries: vec![0; rows * cols] }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.entries[i * n + i] = 1;
        }
        m
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: u32) {
        self.entries[i * self.cols + j] = value % self.field.modulus();
    }

    pub fn row(&self, i: usize) -> Vector {
        Vector { field: self.field, coords: self.entries[i * self.cols..(i + 1) * self.cols].to_vec() }
    }

    pub fn row_vectors(&self) -> Vec<Vec<u32>> {
        self.entries.chunks(self.cols.max(1)).map(<[u32]>::to_vec).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Matrix::identity(self.field, self.rows)
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        debug_assert_eq!(self.cols, other.rows);
        let f = self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.entries[idx] = f.add(out.entries[idx], f.mul(a, other.get(k, j)));
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.entries[j * self.rows + i] = self.get(i, j);
            }
        }
        out
    }

    /// Reduced row echelon form and the pivot column of each nonzero row.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let f = self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            m.swap_rows(r, pr);
            let inv = f.inv(m.get(r, c));
            for j in 0..m.cols {
                let v = f.mul(m.get(r, j), inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c);
                if factor == 0 {
                    continue;
                }
                for j in 0..m.cols {
                    let v = f.sub(m.get(i, j), f.mul(factor, m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Basis of `{z : self · z = 0}` (column vectors), one basis vector per
    /// free column, in increasing free-column order.
    pub fn nullspace(&self) -> Vec<Vector> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut z = Vector::zero(self.field, self.cols);
                z.coords[fc] = 1;
                for (row, &pc) in pivots.iter().enumerate() {
                    z.coords[pc] = self.field.neg(r.get(row, fc));
                }
                z
            })
            .collect()
    }

    /// Basis of `{v : v · self = 0}` for the row-vector map `v ↦ v·self`.
    pub fn left_kernel(&self) -> Vec<Vector> {
        self.transpose().nullspace()
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Every combination `Σ c_i b_i` of the basis, coefficients enumerated
/// lexicographically (first basis vector most significant).
pub(crate) fn span_elements(field: PrimeField, dim: usize, basis: &[Vector]) -> Vec<Vector> {
    let p = field.modulus() as u64;
    let count = p.pow(basis.len() as u32);
    (0..count)
        .map(|idx| {
            let coeffs = Vector::from_index(field, basis.len(), idx);
            let mut v = Vector::zero(field, dim);
            for (c, b) in coeffs.coords.iter().zip(basis) {
                if *c != 0 {
                    v.add_scaled(*c, b);
                }
            }
            v
        })
        .collect()
}
