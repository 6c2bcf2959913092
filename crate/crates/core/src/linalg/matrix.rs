//! Dense matrices over GF(p) with deterministic Gauss-Jordan elimination.
//!
//! Pivots are always the first nonzero entry (scanning rows downward within
//! the current column, columns left to right), so every basis produced here
//! is reproducible bit for bit.

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::Gf;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    gf: Gf,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

/// Output of [`Matrix::rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub reduced: Matrix,
    pub rank: usize,
    pub pivot_columns: Vec<usize>,
}

impl Matrix {
    pub fn zeros(gf: Gf, rows: usize, cols: usize) -> Self {
        Matrix {
            gf,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(gf: Gf, n: usize) -> Self {
        let mut m = Matrix::zeros(gf, n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    /// Builds a matrix from rows of signed integers, reducing mod p.
    pub fn from_rows<R: AsRef<[i64]>>(gf: Gf, rows: &[R]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: r.len(),
                });
            }
            data.extend(r.iter().map(|&x| gf.elem(x)));
        }
        Ok(Matrix {
            gf,
            rows: rows.len(),
            cols,
            data,
        })
    }

    /// Matrix whose columns are the given vectors (each of length `rows`).
    pub fn from_columns(gf: Gf, rows: usize, columns: &[Vec<u32>]) -> Self {
        let mut m = Matrix::zeros(gf, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length mismatch");
            for (i, &x) in c.iter().enumerate() {
                m[(i, j)] = x % gf.modulus();
            }
        }
        m
    }

    /// Matrix whose rows are the given vectors (each of length `cols`).
    pub fn from_row_vectors(gf: Gf, cols: usize, rows: &[Vec<u32>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "row length mismatch");
            data.extend(r.iter().map(|&x| x % gf.modulus()));
        }
        Matrix {
            gf,
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn field(&self) -> Gf {
        self.gf
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<u32> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn entries(&self) -> &[u32] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows).map(|i| self.gf.dot(self.row(i), v)).collect()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix shape mismatch");
        let gf = self.gf;
        let mut out = Matrix::zeros(gf, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                let (lo, hi) = (i * other.cols, (i + 1) * other.cols);
                gf.axpy(&mut out.data[lo..hi], a, other.row(k));
            }
        }
        out
    }

    pub fn pow(&self, mut e: u64) -> Matrix {
        assert_eq!(self.rows, self.cols, "power of a non-square matrix");
        let mut acc = Matrix::identity(self.gf, self.rows);
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
        let mut t = Matrix::zeros(self.gf, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "column count mismatch");
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix {
            gf: self.gf,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn rref(&self) -> Rref {
        let gf = self.gf;
        let mut m = self.clone();
        let mut pivot_columns = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| m[(i, c)] != 0) else {
                continue;
            };
            m.swap_rows(r, pr);
            let inv = gf.inv(m[(r, c)]).expect("pivot is nonzero");
            for x in m.row_mut(r) {
                *x = gf.mul(*x, inv);
            }
            let pivot_row = m.row(r).to_vec();
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let f = m[(i, c)];
                if f != 0 {
                    let (lo, hi) = (i * m.cols, (i + 1) * m.cols);
                    gf.axpy(&mut m.data[lo..hi], gf.neg(f), &pivot_row);
                }
            }
            pivot_columns.push(c);
            r += 1;
        }
        Rref {
            reduced: m,
            rank: r,
            pivot_columns,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of the null space `{v : M v = 0}`, one vector per free column.
    ///
    /// The vector for free column `f` has a 1 in position `f`, zeros in the
    /// other free positions, and is solved for on the pivot positions.
    pub fn kernel_basis(&self) -> Vec<Vec<u32>> {
        let gf = self.gf;
        let Rref {
            reduced,
            pivot_columns,
            ..
        } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivot_columns {
            is_pivot[c] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![0; self.cols];
                v[f] = 1;
                for (r, &pc) in pivot_columns.iter().enumerate() {
                    v[pc] = gf.neg(reduced[(r, f)]);
                }
                v
            })
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn row_mut(&mut self, i: usize) -> &mut [u32] {
        &mut self.data[i * self.cols..(i + 1) * self.cols]
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = u32;

    fn index(&self, (i, j): (usize, usize)) -> &u32 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut u32 {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix GF({}) {}x{} [", self.gf.modulus(), self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        write!(f, "]")
    }
}

/// Rank of a list of vectors of common length `len`.
pub fn rank_of(gf: Gf, len: usize, vectors: &[Vec<u32>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    Matrix::from_row_vectors(gf, len, vectors).rank()
}

/// Row-reduced basis of the span of `vectors`: a canonical form for
/// comparing subspaces.
pub fn reduced_span(gf: Gf, len: usize, vectors: &[Vec<u32>]) -> Vec<Vec<u32>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let Rref { reduced, rank, .. } = Matrix::from_row_vectors(gf, len, vectors).rref();
    (0..rank).map(|i| reduced.row(i).to_vec()).collect()
}

pub fn in_span(gf: Gf, len: usize, basis: &[Vec<u32>], v: &[u32]) -> bool {
    let r = rank_of(gf, len, basis);
    let mut ext = basis.to_vec();
    ext.push(v.to_vec());
    rank_of(gf, len, &ext) == r
}

/// Incremental rank tracker: keeps an echelon basis and reports whether a new
/// vector enlarges the span.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    gf: Gf,
    len: usize,
    // (pivot column, normalized row) with all rows reduced against each other's pivots
    rows: Vec<(usize, Vec<u32>)>,
}

impl EchelonBasis {
    pub fn new(gf: Gf, len: usize) -> Self {
        EchelonBasis {
            gf,
            len,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &[u32]) -> Vec<u32> {
        let mut v = v.to_vec();
        for (pc, row) in &self.rows {
            let f = v[*pc];
            if f != 0 {
                self.gf.axpy(&mut v, self.gf.neg(f), row);
            }
        }
        v
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Adds `v` if it is independent of the current span; returns whether it was.
    pub fn insert(&mut self, v: &[u32]) -> bool {
        assert_eq!(v.len(), self.len, "vector length mismatch");
        let gf = self.gf;
        let mut r = self.reduce(v);
        let Some(pc) = r.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = gf.inv(r[pc]).expect("nonzero");
        for x in r.iter_mut() {
            *x = gf.mul(*x, inv);
        }
        for (_, row) in self.rows.iter_mut() {
            let f = row[pc];
            if f != 0 {
                gf.axpy(row, gf.neg(f), &r);
            }
        }
        self.rows.push((pc, r));
        true
    }
}

/// Extends a basis of `span(sub)` to a basis of `span(whole)`.
///
/// Candidates are taken from `whole` in the given order and kept whenever they
/// enlarge the span accumulated so far (starting from `sub`). Fails with
/// [`Error::NotInSpan`] if some vector of `sub` lies outside `span(whole)`.
pub fn complement_basis(
    gf: Gf,
    len: usize,
    sub: &[Vec<u32>],
    whole: &[Vec<u32>],
) -> Result<Vec<Vec<u32>>> {
    let mut ambient = EchelonBasis::new(gf, len);
    for w in whole {
        check_len(len, w)?;
        ambient.insert(w);
    }
    let mut acc = EchelonBasis::new(gf, len);
    for s in sub {
        check_len(len, s)?;
        if !ambient.contains(s) {
            return Err(Error::NotInSpan);
        }
        acc.insert(s);
    }
    Ok(whole
        .iter()
        .filter(|w| acc.insert(w))
        .cloned()
        .collect())
}

fn check_len(len: usize, v: &[u32]) -> Result<()> {
    if v.len() != len {
        return Err(Error::DimensionMismatch {
            expected: len,
            found: v.len(),
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u32) -> Gf {
        Gf::new(p).unwrap()
    }

    #[test]
    fn rref_small_cases() {
        assert_eq!(Matrix::identity(gf(7), 3).rank(), 3);
        assert_eq!(Matrix::zeros(gf(5), 2, 4).rank(), 0);
        let m = Matrix::from_rows(gf(5), &[[1, 2], [2, 4]]).unwrap();
        let r = m.rref();
        assert_eq!(r.rank, 1);
        assert_eq!(r.pivot_columns, vec![0]);
        assert_eq!(r.reduced.row(0), &[1, 2]);
    }

    #[test]
    fn kernel_small_cases() {
        assert!(Matrix::identity(gf(7), 4).kernel_basis().is_empty());
        let k = Matrix::zeros(gf(3), 3, 3).kernel_basis();
        assert_eq!(k, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
    }

    #[test]
    fn kernel_matches_exhaustive_search() {
        // Enumerate GF(5)^2 and collect every solution of [[1,2],[2,4]] v = 0.
        let g = gf(5);
        let m = Matrix::from_rows(g, &[[1, 2], [2, 4]]).unwrap();
        let mut solutions = Vec::new();
        for a in 0..5 {
            for b in 0..5 {
                if (a + 2 * b) % 5 == 0 && (2 * a + 4 * b) % 5 == 0 {
                    solutions.push(vec![a, b]);
                }
            }
        }
        assert_eq!(solutions.len(), 5);
        let k = m.kernel_basis();
        assert_eq!(k, vec![vec![3, 1]]);
        for s in &solutions {
            assert!(in_span(g, 2, &k, s));
        }
    }

    #[test]
    fn complement_cases() {
        let g = gf(5);
        let v = vec![1, 2, 3];
        assert_eq!(complement_basis(g, 3, &[], std::slice::from_ref(&v)).unwrap(), vec![v.clone()]);
        let basis = vec![vec![1, 0, 0], vec![0, 1, 0]];
        assert!(complement_basis(g, 3, &basis, &basis).unwrap().is_empty());
        assert_eq!(
            complement_basis(g, 3, &[vec![0, 0, 1]], &basis),
            Err(Error::NotInSpan)
        );
    }

    #[test]
    fn echelon_basis_tracks_rank() {
        let g = gf(3);
        let mut e = EchelonBasis::new(g, 3);
        assert!(e.insert(&[1, 1, 0]));
        assert!(!e.insert(&[2, 2, 0]));
        assert!(e.insert(&[0, 1, 1]));
        assert!(e.contains(&[1, 2, 1]));
        assert!(!e.contains(&[0, 0, 1]));
        assert_eq!(e.rank(), 2);
    }
}
