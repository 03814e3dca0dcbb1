//! Dense exact linear algebra: matrices over ℤ/p on raw residues, and
//! generic matrices over any [`Ring`] (elimination needs a [`FieldRing`]).

use std::fmt;

use crate::fp;
use crate::ring::{FieldRing, Ring};

/// A dense row-major matrix over ℤ/p.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpMatrix {
    p: u32,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl fmt::Debug for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FpMatrix(p={}, {:?})", self.p, self.to_rows())
    }
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub matrix: FpMatrix,
    pub pivots: Vec<usize>,
}

impl FpMatrix {
    pub fn zeros(p: u32, rows: usize, cols: usize) -> Self {
        FpMatrix {
            p,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(p: u32, n: usize) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1 % p;
        }
        m
    }

    pub fn from_rows(p: u32, rows: &[Vec<u32>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged matrix");
            data.extend(row.iter().map(|&x| x % p));
        }
        FpMatrix {
            p,
            rows: r,
            cols: c,
            data,
        }
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(p: u32, rows: usize, columns: &[Vec<u32>]) -> Self {
        let mut m = Self::zeros(p, rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, &v) in col.iter().enumerate() {
                m.data[i * m.cols + j] = v % p;
            }
        }
        m
    }

    pub fn prime(&self) -> u32 {
        self.p
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v % self.p;
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<u32> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..self.cols).all(|j| self.get(i, j) == u32::from(i == j)))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.p, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j);
            }
        }
        t
    }

    pub fn mul(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let p = self.p as u64;
        let mut out = FpMatrix::zeros(self.p, self.rows, other.cols);
        let mut acc = vec![0u64; other.cols];
        for i in 0..self.rows {
            acc.iter_mut().for_each(|a| *a = 0);
            for k in 0..self.cols {
                let a = self.get(i, k) as u64;
                if a == 0 {
                    continue;
                }
                let row = other.row(k);
                for (slot, &b) in acc.iter_mut().zip(row) {
                    *slot = (*slot + a * b as u64) % p;
                }
            }
            for (slot, &v) in out.data[i * other.cols..(i + 1) * other.cols]
                .iter_mut()
                .zip(&acc)
            {
                *slot = v as u32;
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(self.cols, v.len());
        let p = self.p as u64;
        (0..self.rows)
            .map(|i| {
                let mut s = 0u64;
                for (a, b) in self.row(i).iter().zip(v) {
                    s = (s + *a as u64 * *b as u64) % p;
                }
                s as u32
            })
            .collect()
    }

    pub fn add(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| fp::add(a, b, self.p))
            .collect();
        FpMatrix { data, ..*self }
    }

    pub fn sub(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| fp::sub(a, b, self.p))
            .collect();
        FpMatrix { data, ..*self }
    }

    pub fn pow(&self, mut e: u64) -> FpMatrix {
        assert_eq!(self.rows, self.cols);
        let mut base = self.clone();
        let mut acc = FpMatrix::identity(self.p, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Row-reduces in place and returns pivot columns.
    fn rref_in_place(&mut self) -> Vec<usize> {
        let p = self.p;
        let pp = p as u64;
        let cols = self.cols;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| self.data[i * cols + c] != 0) else {
                continue;
            };
            if pr != r {
                for j in c..cols {
                    self.data.swap(pr * cols + j, r * cols + j);
                }
            }
            let inv = fp::inv(self.data[r * cols + c], p).unwrap();
            if inv != 1 {
                for j in c..cols {
                    let v = &mut self.data[r * cols + j];
                    *v = fp::mul(*v, inv, p);
                }
            }
            let pivot_row: Vec<u32> = self.data[r * cols + c..(r + 1) * cols].to_vec();
            let nz: Vec<(usize, u32)> = pivot_row
                .iter()
                .enumerate()
                .filter(|(_, &v)| v != 0)
                .map(|(j, &v)| (j + c, v))
                .collect();
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let f = self.data[i * cols + c];
                if f == 0 {
                    continue;
                }
                let m = (pp - f as u64) % pp;
                let row = &mut self.data[i * cols..(i + 1) * cols];
                if p == 2 {
                    for &(j, _) in &nz {
                        row[j] ^= 1;
                    }
                } else {
                    for &(j, v) in &nz {
                        row[j] = ((row[j] as u64 + m * v as u64) % pp) as u32;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn echelon(&self) -> Echelon {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        Echelon { matrix: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    /// Canonical basis of the right kernel, one vector per free column.
    pub fn kernel(&self) -> Vec<Vec<u32>> {
        let e = self.echelon();
        kernel_from_echelon(&e, self.cols)
    }

    /// A solution of `self · x = b` (free variables set to zero), if any.
    pub fn solve(&self, b: &[u32]) -> Option<Vec<u32>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = FpMatrix::zeros(self.p, self.rows, self.cols + 1);
        for (i, &bi) in b.iter().enumerate() {
            for j in 0..self.cols {
                aug.data[i * (self.cols + 1) + j] = self.get(i, j);
            }
            aug.data[i * (self.cols + 1) + self.cols] = bi % self.p;
        }
        let pivots = aug.rref_in_place();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![0u32; self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            x[c] = aug.data[r * (self.cols + 1) + self.cols];
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<FpMatrix> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = FpMatrix::zeros(self.p, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.data[i * 2 * n + j] = self.get(i, j);
            }
            aug.data[i * 2 * n + n + i] = 1 % self.p;
        }
        let pivots = aug.rref_in_place();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = FpMatrix::zeros(self.p, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.data[i * n + j] = aug.data[i * 2 * n + n + j];
            }
        }
        Some(inv)
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    /// A matrix `L` with `L·self = I`, for full column rank.
    pub fn left_inverse(&self) -> Option<FpMatrix> {
        let e = self.transpose().echelon();
        if e.pivots.len() < self.cols {
            return None;
        }
        let sub = FpMatrix::from_rows(
            self.p,
            &e.pivots
                .iter()
                .map(|&r| self.row(r).to_vec())
                .collect::<Vec<_>>(),
        );
        let inv = sub.inverse()?;
        let mut l = FpMatrix::zeros(self.p, self.cols, self.rows);
        for (k, &r) in e.pivots.iter().enumerate() {
            for i in 0..self.cols {
                l.set(i, r, inv.get(i, k));
            }
        }
        Some(l)
    }

    /// Multiplicative order, searching up to `cap`.
    pub fn order(&self, cap: u64) -> Option<u64> {
        if !self.is_invertible() {
            return None;
        }
        let mut acc = self.clone();
        for k in 1..=cap {
            if acc.is_identity() {
                return Some(k);
            }
            acc = acc.mul(self);
        }
        None
    }
}

fn kernel_from_echelon(e: &Echelon, cols: usize) -> Vec<Vec<u32>> {
    let p = e.matrix.p;
    let mut is_pivot = vec![false; cols];
    for &c in &e.pivots {
        is_pivot[c] = true;
    }
    let mut basis = Vec::new();
    for f in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![0u32; cols];
        v[f] = 1 % p;
        for (r, &c) in e.pivots.iter().enumerate() {
            v[c] = fp::neg(e.matrix.get(r, f), p);
        }
        basis.push(v);
    }
    basis
}

/// A subspace of 𝔽_p^n with a fixed basis, supporting coordinate lookup.
#[derive(Clone, Debug)]
pub struct FpSubspace {
    p: u32,
    ambient: usize,
    basis: Vec<Vec<u32>>,
}

impl FpSubspace {
    /// The given vectors must be linearly independent.
    pub fn new(p: u32, ambient: usize, basis: Vec<Vec<u32>>) -> Self {
        let m = FpMatrix::from_columns(p, ambient, &basis);
        assert_eq!(m.rank(), basis.len(), "dependent basis");
        FpSubspace { p, ambient, basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.basis
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Coordinates of `v` in the basis, if `v` lies in the span.
    pub fn coordinates(&self, v: &[u32]) -> Option<Vec<u32>> {
        FpMatrix::from_columns(self.p, self.ambient, &self.basis).solve(v)
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.coordinates(v).is_some()
    }
}

/// A dense matrix over a ring `R`.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<R: Ring> {
    parent: R::Parent,
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

impl<R: Ring> fmt::Debug for Matrix<R> {
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
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl<R: Ring> Matrix<R> {
    pub fn zeros(parent: &R::Parent, rows: usize, cols: usize) -> Self {
        Matrix {
            parent: parent.clone(),
            rows,
            cols,
            data: vec![R::zero(parent); rows * cols],
        }
    }

    pub fn identity(parent: &R::Parent, n: usize) -> Self {
        let mut m = Self::zeros(parent, n, n);
        for i in 0..n {
            m.data[i * n + i] = R::one(parent);
        }
        m
    }

    pub fn from_rows(parent: &R::Parent, rows: Vec<Vec<R>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut data = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged matrix");
            data.extend(row);
        }
        Matrix {
            parent: parent.clone(),
            rows: r,
            cols: c,
            data,
        }
    }

    pub fn from_columns(parent: &R::Parent, rows: usize, columns: Vec<Vec<R>>) -> Self {
        let cols = columns.len();
        let mut m = Self::zeros(parent, rows, cols);
        for (j, col) in columns.into_iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, v) in col.into_iter().enumerate() {
                m.data[i * cols + j] = v;
            }
        }
        m
    }

    pub fn column_vector(parent: &R::Parent, v: Vec<R>) -> Self {
        let n = v.len();
        Matrix {
            parent: parent.clone(),
            rows: n,
            cols: 1,
            data: v,
        }
    }

    pub fn parent(&self) -> &R::Parent {
        &self.parent
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

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> Vec<R> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn column(&self, j: usize) -> Vec<R> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<R>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn entries(&self) -> &[R] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn map<S: Ring>(&self, parent: &S::Parent, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix {
            parent: parent.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(&self.parent, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix<R>) -> Matrix<R> {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let mut out = Self::zeros(&self.parent, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let slot = &mut out.data[i * other.cols + j];
                    *slot = slot.clone() + a.clone() * b.clone();
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[R]) -> Vec<R> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut s = R::zero(&self.parent);
                for (j, x) in v.iter().enumerate() {
                    let a = self.get(i, j);
                    if !a.is_zero() && !x.is_zero() {
                        s = s + a.clone() * x.clone();
                    }
                }
                s
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix<R>) -> Matrix<R> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.clone() + b.clone())
            .collect();
        Matrix {
            parent: self.parent.clone(),
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn sub(&self, other: &Matrix<R>) -> Matrix<R> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.clone() - b.clone())
            .collect();
        Matrix {
            parent: self.parent.clone(),
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn scale(&self, c: &R) -> Matrix<R> {
        self.map(&self.parent, |x| c.clone() * x.clone())
    }

    pub fn pow(&self, mut e: u64) -> Matrix<R> {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Self::identity(&self.parent, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let v = self.get(i, j);
                    if i == j {
                        v.is_one()
                    } else {
                        v.is_zero()
                    }
                })
            })
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &Matrix<R>) -> Matrix<R> {
        let mut m = Self::zeros(&self.parent, self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                m.set(self.rows + i, self.cols + j, other.get(i, j).clone());
            }
        }
        m
    }

    /// Columns `range` as a new matrix.
    pub fn select_columns(&self, idx: &[usize]) -> Matrix<R> {
        Matrix::from_columns(
            &self.parent,
            self.rows,
            idx.iter().map(|&j| self.column(j)).collect(),
        )
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix<R> {
        Matrix::from_rows(&self.parent, idx.iter().map(|&i| self.row(i)).collect())
    }
}

impl<R: FieldRing> Matrix<R> {
    /// Reduced row echelon form and pivot columns.
    pub fn echelon(&self) -> (Matrix<R>, Vec<usize>) {
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
            let inv = m.get(r, c).inverse().expect("nonzero field element");
            for j in c..m.cols {
                let v = m.get(r, j).clone() * inv.clone();
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..m.cols {
                    let pv = m.get(r, j).clone();
                    if pv.is_zero() {
                        continue;
                    }
                    let v = m.get(i, j).clone() - f.clone() * pv;
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.echelon().1.len()
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn inverse(&self) -> Option<Matrix<R>> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(&self.parent, n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            aug.set(i, n + i, R::one(&self.parent));
        }
        let (e, pivots) = aug.echelon();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zeros(&self.parent, n, n);
        for i in 0..n {
            for j in 0..n {
                inv.set(i, j, e.get(i, n + j).clone());
            }
        }
        Some(inv)
    }

    /// Basis of the right kernel.
    pub fn kernel(&self) -> Vec<Vec<R>> {
        let (e, pivots) = self.echelon();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let mut out = Vec::new();
        for f in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![R::zero(&self.parent); self.cols];
            v[f] = R::one(&self.parent);
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = -e.get(r, f).clone();
            }
            out.push(v);
        }
        out
    }

    /// Solves `self · X = B` for a matrix right-hand side.
    pub fn solve_matrix(&self, b: &Matrix<R>) -> Option<Matrix<R>> {
        assert_eq!(self.rows, b.rows);
        let n = self.cols;
        let mut aug = Matrix::zeros(&self.parent, self.rows, n + b.cols);
        for i in 0..self.rows {
            for j in 0..n {
                aug.set(i, j, self.get(i, j).clone());
            }
            for j in 0..b.cols {
                aug.set(i, n + j, b.get(i, j).clone());
            }
        }
        let (e, pivots) = aug.echelon();
        if pivots.iter().any(|&c| c >= n) {
            return None;
        }
        let mut x = Matrix::zeros(&self.parent, n, b.cols);
        for (r, &c) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(c, j, e.get(r, n + j).clone());
            }
        }
        Some(x)
    }

    /// Nonzero rows of the reduced echelon form: a canonical basis of the
    /// row space.
    pub fn row_space_basis(&self) -> Matrix<R> {
        let (e, pivots) = self.echelon();
        let idx: Vec<usize> = (0..pivots.len()).collect();
        if idx.is_empty() {
            return Matrix::zeros(&self.parent, 0, self.cols);
        }
        e.select_rows(&idx)
    }

    /// Basis of the column space, taken from the pivot columns of `self`.
    pub fn column_space_basis(&self) -> Matrix<R> {
        let (_, pivots) = self.echelon();
        if pivots.is_empty() {
            return Matrix::zeros(&self.parent, self.rows, 0);
        }
        self.select_columns(&pivots)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fp_inverse_and_kernel() {
        let m = FpMatrix::from_rows(3, &[vec![1, 2], vec![0, 1]]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        let s = FpMatrix::from_rows(2, &[vec![1, 1], vec![1, 1]]);
        assert_eq!(s.kernel(), vec![vec![1, 1]]);
        assert!(s.inverse().is_none());
    }

    #[test]
    fn fp_solve() {
        let m = FpMatrix::from_rows(5, &[vec![1, 2, 3], vec![0, 1, 4]]);
        let b = vec![3, 2];
        let x = m.solve(&b).unwrap();
        assert_eq!(m.mul_vec(&x), b);
        let z = FpMatrix::from_rows(5, &[vec![0, 0]]);
        assert!(z.solve(&[1]).is_none());
    }

    #[test]
    fn order_of_swap() {
        let s = FpMatrix::from_rows(2, &[vec![0, 1], vec![1, 0]]);
        assert_eq!(s.order(100), Some(2));
        let j = FpMatrix::from_rows(3, &[vec![1, 1], vec![0, 1]]);
        assert_eq!(j.order(100), Some(3));
    }

    #[test]
    fn subspace_coordinates() {
        let s = FpSubspace::new(3, 3, vec![vec![1, 0, 1], vec![0, 1, 1]]);
        assert_eq!(s.coordinates(&[2, 1, 0]), Some(vec![2, 1]));
        assert!(!s.contains(&[0, 0, 1]));
    }
}
