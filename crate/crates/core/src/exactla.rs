//! Dense exact linear algebra over a [`Field`].
//!
//! Subspaces are stored in reduced row-echelon form, which makes equality,
//! containment and serialized certificates canonical.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ff::{Fe, Field};

#[derive(Clone)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Fe>,
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.data == other.data
    }
}

impl Eq for Matrix {}

impl std::fmt::Debug for Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Matrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

/// Result of Gauss-Jordan elimination.
#[derive(Clone, Debug)]
pub struct Rref {
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Self {
        Matrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![Fe::ZERO; rows * cols],
        }
    }

    pub fn identity(field: &Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: &Field, cols: usize, rows: &[Vec<Fe>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend_from_slice(r);
        }
        Matrix {
            field: field.clone(),
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn from_ints(field: &Field, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows: Vec<Vec<Fe>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| field.from_int(v)).collect())
            .collect();
        Self::from_rows(field, cols, &rows)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Fe {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Fe) {
        self.data[r * self.cols + c] = v;
    }

    pub fn add_to(&mut self, r: usize, c: usize, v: &Fe) {
        let idx = r * self.cols + c;
        self.data[idx] = self.field.add(&self.data[idx], v);
    }

    pub fn row(&self, r: usize) -> &[Fe] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Fe> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Fe::is_zero)
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| self.field.add(a, b))
            .collect();
        Matrix { data, ..self.clone() }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| self.field.sub(a, b))
            .collect();
        Matrix { data, ..self.clone() }
    }

    pub fn scale(&self, s: &Fe) -> Matrix {
        let data = self.data.iter().map(|a| self.field.mul(a, s)).collect();
        Matrix { data, ..self.clone() }
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product dimension mismatch");
        let f = &self.field;
        let mut out = Matrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for t in 0..self.cols {
                let a = self.get(i, t);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(t, j);
                    if !b.is_zero() {
                        out.add_to(i, j, &f.mul(&a, &b));
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Fe]) -> Vec<Fe> {
        assert_eq!(self.cols, v.len());
        let f = &self.field;
        (0..self.rows)
            .map(|i| {
                self.row(i).iter().zip(v).fold(Fe::ZERO, |acc, (a, b)| {
                    if a.is_zero() || b.is_zero() {
                        acc
                    } else {
                        f.add(&acc, &f.mul(a, b))
                    }
                })
            })
            .collect()
    }

    pub fn pow(&self, mut e: u64) -> Matrix {
        assert_eq!(self.rows, self.cols);
        let mut acc = Matrix::identity(&self.field, self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(&self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c));
            }
        }
        out
    }

    pub fn vstack(parts: &[&Matrix]) -> Matrix {
        let first = parts.first().expect("vstack of nothing");
        let cols = first.cols;
        let mut data = Vec::new();
        let mut rows = 0;
        for m in parts {
            assert_eq!(m.cols, cols);
            data.extend_from_slice(&m.data);
            rows += m.rows;
        }
        Matrix {
            field: first.field.clone(),
            rows,
            cols,
            data,
        }
    }

    /// Reduced row-echelon form: leftmost pivot column, first nonzero row
    /// below the current one is swapped up.
    pub fn rref(&self) -> Rref {
        let f = &self.field;
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if pr != r {
                for j in 0..m.cols {
                    m.data.swap(pr * m.cols + j, r * m.cols + j);
                }
            }
            let inv = f.inv(&m.get(r, c)).expect("pivot is nonzero");
            for j in c..m.cols {
                let v = m.get(r, j);
                m.set(r, j, f.mul(&v, &inv));
            }
            let pivot_row: Vec<Fe> = m.row(r).to_vec();
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c);
                if factor.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    if !pivot_row[j].is_zero() {
                        let v = f.sub(&m.get(i, j), &f.mul(&factor, &pivot_row[j]));
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref {
            matrix: m,
            rank: r,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Some `x` with `M x = b`, or `None` if the system is inconsistent.
    /// Free variables are set to zero.
    pub fn solve(&self, b: &[Fe]) -> Option<Vec<Fe>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Matrix::zeros(&self.field, self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c));
            }
            aug.set(r, self.cols, b[r]);
        }
        let Rref { matrix, rank, pivots } = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Fe::ZERO; self.cols];
        for (i, &pc) in pivots.iter().enumerate().take(rank) {
            x[pc] = matrix.get(i, self.cols);
        }
        Some(x)
    }

    /// Right null space `{v : M v = 0}`.
    pub fn kernel(&self) -> Subspace {
        let Rref { matrix, rank, pivots } = self.rref();
        let f = &self.field;
        let n = self.cols;
        let mut is_pivot = vec![false; n];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut vectors = Vec::new();
        for free in (0..n).filter(|&c| !is_pivot[c]) {
            let mut v = vec![Fe::ZERO; n];
            v[free] = f.one();
            for (i, &pc) in pivots.iter().enumerate().take(rank) {
                v[pc] = f.neg(&matrix.get(i, free));
            }
            vectors.push(v);
        }
        Subspace::span(f, n, vectors)
    }
}

/// A subspace of `F^n`, stored as the nonzero rows of its reduced echelon
/// basis.
#[derive(Clone)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    basis: Vec<Vec<Fe>>,
    pivots: Vec<usize>,
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.basis == other.basis
    }
}

impl Eq for Subspace {}

impl std::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subspace(dim {} in {}) {:?}", self.dim(), self.ambient, self.basis)
    }
}

/// Serialized certificate form: `{"ambient":n,"basis":[[...],...]}` with each
/// field element written as its coefficient array.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, serde::Deserialize)]
pub struct SubspaceJson {
    pub ambient: usize,
    pub basis: Vec<Vec<Vec<u32>>>,
}

impl Subspace {
    pub fn zero(field: &Field, ambient: usize) -> Self {
        Subspace {
            field: field.clone(),
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: &Field, ambient: usize) -> Self {
        let vectors = (0..ambient).map(|i| unit(field, ambient, i)).collect();
        Self::span(field, ambient, vectors)
    }

    pub fn span(field: &Field, ambient: usize, vectors: Vec<Vec<Fe>>) -> Self {
        if vectors.is_empty() {
            return Self::zero(field, ambient);
        }
        let m = Matrix::from_rows(field, ambient, &vectors);
        let Rref { matrix, rank, pivots } = m.rref();
        let basis = (0..rank).map(|i| matrix.row(i).to_vec()).collect();
        Subspace {
            field: field.clone(),
            ambient,
            basis,
            pivots,
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Fe>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// `v` minus its echelon reduction: zero iff `v` lies in the subspace.
    pub fn reduce(&self, v: &[Fe]) -> Vec<Fe> {
        let f = &self.field;
        let mut v = v.to_vec();
        for (row, &pc) in self.basis.iter().zip(&self.pivots) {
            let c = v[pc];
            if c.is_zero() {
                continue;
            }
            for (slot, b) in v.iter_mut().zip(row) {
                if !b.is_zero() {
                    *slot = f.sub(slot, &f.mul(&c, b));
                }
            }
        }
        v
    }

    /// Adds `v` to the span, keeping the basis in reduced echelon form.
    /// Returns whether the dimension grew.
    pub fn insert(&mut self, v: &[Fe]) -> bool {
        let f = self.field.clone();
        let mut r = self.reduce(v);
        let Some(c) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = f.inv(&r[c]).expect("nonzero");
        for x in r.iter_mut() {
            *x = f.mul(x, &inv);
        }
        for row in self.basis.iter_mut() {
            let factor = row[c];
            if factor.is_zero() {
                continue;
            }
            for (slot, b) in row.iter_mut().zip(&r) {
                if !b.is_zero() {
                    *slot = f.sub(slot, &f.mul(&factor, b));
                }
            }
        }
        let at = self.pivots.partition_point(|&p| p < c);
        self.basis.insert(at, r);
        self.pivots.insert(at, c);
        true
    }

    pub fn contains(&self, v: &[Fe]) -> bool {
        assert_eq!(v.len(), self.ambient);
        self.reduce(v).iter().all(Fe::is_zero)
    }

    pub fn contains_space(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let mut vs = self.basis.clone();
        vs.extend(other.basis.iter().cloned());
        Subspace::span(&self.field, self.ambient, vs)
    }

    /// Intersection via the Zassenhaus block matrix `[[A, A], [B, 0]]`: the
    /// echelon rows with vanishing left half span `A ∩ B` in their right half.
    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let n = self.ambient;
        let mut rows = Vec::with_capacity(self.dim() + other.dim());
        for v in &self.basis {
            let mut r = v.clone();
            r.extend_from_slice(v);
            rows.push(r);
        }
        for v in &other.basis {
            let mut r = v.clone();
            r.extend(std::iter::repeat(Fe::ZERO).take(n));
            rows.push(r);
        }
        if rows.is_empty() {
            return Subspace::zero(&self.field, n);
        }
        let Rref { matrix, rank, .. } = Matrix::from_rows(&self.field, 2 * n, &rows).rref();
        let vectors = (0..rank)
            .map(|i| matrix.row(i))
            .filter(|r| r[..n].iter().all(Fe::is_zero))
            .map(|r| r[n..].to_vec())
            .collect();
        Subspace::span(&self.field, n, vectors)
    }

    /// `dim self - dim sub`, requiring `sub ⊆ self`.
    pub fn quotient_dim(&self, sub: &Subspace) -> Result<usize> {
        if sub.ambient != self.ambient {
            return Err(Error::Dimension(format!(
                "ambient {} vs {}",
                sub.ambient, self.ambient
            )));
        }
        if !self.contains_space(sub) {
            return Err(Error::NotASubspace);
        }
        Ok(self.dim() - sub.dim())
    }

    /// Coordinates whose unit vectors are *not* pivots when columns are
    /// eliminated from the right: the lexicographically least coset
    /// representatives of `F^n / self`.
    pub fn lex_least_complement(&self) -> Vec<usize> {
        let n = self.ambient;
        let reversed: Vec<Vec<Fe>> = self
            .basis
            .iter()
            .map(|v| v.iter().rev().copied().collect())
            .collect();
        let rev = Subspace::span(&self.field, n, reversed);
        let mut is_pivot = vec![false; n];
        for &c in &rev.pivots {
            is_pivot[n - 1 - c] = true;
        }
        (0..n).filter(|&c| !is_pivot[c]).collect()
    }

    /// Linear projection `F^n -> F^n / self`, expressed in the coordinates of
    /// [`Subspace::lex_least_complement`].
    pub fn quotient_projection(&self) -> Matrix {
        let n = self.ambient;
        let f = &self.field;
        let complement = self.lex_least_complement();
        // echelon basis with pivots on the right-most columns
        let reversed: Vec<Vec<Fe>> = self
            .basis
            .iter()
            .map(|v| v.iter().rev().copied().collect())
            .collect();
        let rev = Subspace::span(f, n, reversed);
        let mut proj = Matrix::zeros(f, complement.len(), n);
        for c in 0..n {
            let e: Vec<Fe> = unit(f, n, n - 1 - c);
            let reduced = rev.reduce(&e);
            // reduced is in reversed coordinates
            for (row, &cc) in complement.iter().enumerate() {
                proj.set(row, c, reduced[n - 1 - cc]);
            }
        }
        proj
    }

    pub fn to_json(&self) -> SubspaceJson {
        SubspaceJson {
            ambient: self.ambient,
            basis: self
                .basis
                .iter()
                .map(|v| v.iter().map(|e| self.field.coeffs(e)).collect())
                .collect(),
        }
    }
}

pub fn unit(field: &Field, n: usize, i: usize) -> Vec<Fe> {
    let mut v = vec![Fe::ZERO; n];
    v[i] = field.one();
    v
}
