//! Dense exact linear algebra over arbitrary-precision rationals.
//!
//! Matrices here are small (weight-space blocks), so a dense representation
//! with fraction arithmetic is the right trade-off: every rank, kernel and
//! solve is exact, and there are no tolerance questions anywhere downstream.

use alloc::vec;
use alloc::vec::Vec;
use num_traits::{One, Zero};

use crate::Rat;

#[derive(Clone, PartialEq, Eq)]
pub struct QMat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl core::fmt::Debug for QMat {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        writeln!(f, "QMat {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "  ")?;
            for c in 0..self.cols {
                write!(f, "{} ", self.at(r, c))?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl QMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        QMat { rows, cols, data: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QMat::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Rat::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        debug_assert!(rows.iter().all(|row| row.len() == c));
        QMat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        QMat { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Rat {
        &self.data[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut Rat {
        &mut self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Rat] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col(&self, c: usize) -> Vec<Rat> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rat::is_zero)
    }

    pub fn transpose(&self) -> QMat {
        QMat::from_fn(self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    pub fn mul(&self, other: &QMat) -> QMat {
        assert_eq!(self.cols, other.rows, "shape mismatch in matrix product");
        let mut out = QMat::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.at(k, c);
                    if !b.is_zero() {
                        *out.at_mut(r, c) += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                let mut acc = Rat::zero();
                for c in 0..self.cols {
                    let a = self.at(r, c);
                    if !a.is_zero() && !v[c].is_zero() {
                        acc += a * &v[c];
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &QMat) -> QMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        QMat::from_fn(self.rows, self.cols, |r, c| self.at(r, c) + other.at(r, c))
    }

    pub fn sub(&self, other: &QMat) -> QMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        QMat::from_fn(self.rows, self.cols, |r, c| self.at(r, c) - other.at(r, c))
    }

    pub fn scale(&self, s: &Rat) -> QMat {
        QMat::from_fn(self.rows, self.cols, |r, c| self.at(r, c) * s)
    }

    /// Stack `self` on top of `other`.
    pub fn vstack(&self, other: &QMat) -> QMat {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        QMat { rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Place `other` to the right of `self`.
    pub fn hstack(&self, other: &QMat) -> QMat {
        assert_eq!(self.rows, other.rows);
        QMat::from_fn(self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self.at(r, c).clone()
            } else {
                other.at(r, c - self.cols).clone()
            }
        })
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut lead = 0usize;
        for c in 0..m.cols {
            if lead >= m.rows {
                break;
            }
            let Some(pr) = (lead..m.rows).find(|&r| !m.at(r, c).is_zero()) else {
                continue;
            };
            m.swap_rows(lead, pr);
            let inv = {
                let p = m.at(lead, c).clone();
                Rat::one() / p
            };
            for cc in c..m.cols {
                let v = m.at(lead, cc) * &inv;
                *m.at_mut(lead, cc) = v;
            }
            for r in 0..m.rows {
                if r != lead && !m.at(r, c).is_zero() {
                    let factor = m.at(r, c).clone();
                    for cc in c..m.cols {
                        let v = m.at(r, cc) - &factor * m.at(lead, cc);
                        *m.at_mut(r, cc) = v;
                    }
                }
            }
            pivots.push(c);
            lead += 1;
        }
        Rref { mat: m, pivots }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Basis of the right null space, one `Vec` per kernel vector.
    pub fn nullspace(&self) -> Vec<Vec<Rat>> {
        let rref = self.rref();
        let pivots = &rref.pivots;
        let mut basis = Vec::new();
        let mut piv_iter = 0usize;
        let is_pivot = |c: usize| pivots.binary_search(&c).is_ok();
        let _ = &mut piv_iter;
        for free in 0..self.cols {
            if is_pivot(free) {
                continue;
            }
            let mut v = vec![Rat::zero(); self.cols];
            v[free] = Rat::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -rref.mat.at(row, free).clone();
            }
            basis.push(v);
        }
        basis
    }

    /// Solve `self * x = b` for a single right-hand side; `None` if
    /// inconsistent. Free variables are set to zero.
    pub fn solve(&self, b: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(self.rows, b.len());
        let aug = self.hstack(&QMat::from_fn(self.rows, 1, |r, _| b[r].clone()));
        let rref = aug.rref();
        let mut x = vec![Rat::zero(); self.cols];
        for (row, &pc) in rref.pivots.iter().enumerate() {
            if pc == self.cols {
                return None; // pivot in the augmented column
            }
            x[pc] = rref.mat.at(row, self.cols).clone();
        }
        Some(x)
    }

    /// Exact inverse; `None` if singular.
    pub fn inverse(&self) -> Option<QMat> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let aug = self.hstack(&QMat::identity(n));
        let rref = aug.rref();
        if rref.pivots.len() != n || rref.pivots.iter().enumerate().any(|(i, &p)| i != p) {
            return None;
        }
        Some(QMat::from_fn(n, n, |r, c| rref.mat.at(r, n + c).clone()))
    }

    /// Indices of a maximal set of linearly independent columns.
    pub fn column_pivots(&self) -> Vec<usize> {
        self.rref().pivots
    }
}

pub struct Rref {
    pub mat: QMat,
    pub pivots: Vec<usize>,
}

impl Rref {
    /// Express column `c` of the original matrix over the pivot columns.
    /// Valid for non-pivot columns (the coordinates sit in the RREF).
    pub fn combo_over_pivots(&self, c: usize) -> Vec<Rat> {
        self.pivots
            .iter()
            .enumerate()
            .map(|(row, _)| self.mat.at(row, c).clone())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat_int;

    fn m(rows: &[&[i64]]) -> QMat {
        QMat::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat_int(x)).collect()).collect())
    }

    #[test]
    fn rank_and_nullspace() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(a.rank(), 2);
        let ns = a.nullspace();
        assert_eq!(ns.len(), 1);
        for v in &ns {
            assert!(a.mul_vec(v).iter().all(Rat::is_zero));
        }
    }

    #[test]
    fn inverse_roundtrip() {
        let a = m(&[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), QMat::identity(2));
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_none());
    }

    #[test]
    fn solve_consistent_and_not() {
        let a = m(&[&[1, 1], &[1, -1]]);
        let x = a.solve(&[rat_int(3), rat_int(1)]).unwrap();
        assert_eq!(x, alloc::vec![rat_int(2), rat_int(1)]);
        let b = m(&[&[1, 1], &[2, 2]]);
        assert!(b.solve(&[rat_int(0), rat_int(1)]).is_none());
    }

    #[test]
    fn column_pivots_give_column_basis() {
        let a = m(&[&[1, 2, 0, 1], &[0, 0, 1, 1], &[1, 2, 1, 2]]);
        let piv = a.column_pivots();
        assert_eq!(piv, alloc::vec![0, 2]);
    }
}
