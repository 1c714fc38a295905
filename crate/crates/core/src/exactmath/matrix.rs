//! Dense matrices over Q with reduced row echelon form, kernel bases, and
//! linear solving.
//!
//! Pivoting is deterministic (first nonzero entry in column order), so the
//! RREF of a matrix is the canonical representative of its row space. Edge
//! keys in the lattice module rely on this.

use num::{BigRational, One, Zero};

use crate::error::{ArrError, Result};

/// Row-major dense matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

/// Outcome of `rref`: the echelon form, its pivot columns, and the rank.
#[derive(Debug, Clone)]
pub struct RrefResult {
    pub matrix: RatMatrix,
    pub pivot_cols: Vec<usize>,
    pub rank: usize,
}

/// Basis of the right null space in RREF-complement form: one vector per
/// free column, with a 1 in the free coordinate.
pub type KernelBasis = Vec<Vec<BigRational>>;

impl RatMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<BigRational>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(ArrError::Dimension(format!(
                "matrix data length {} != {rows}x{cols}",
                data.len()
            )));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = BigRational::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<BigRational>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(ArrError::Dimension("ragged rows".into()));
        }
        Ok(Self {
            rows: r,
            cols: c,
            data: rows.iter().flatten().cloned().collect(),
        })
    }

    /// Rows of `self` followed by the given extra rows.
    pub fn stacked(&self, extra: &[Vec<BigRational>]) -> Result<Self> {
        if extra.iter().any(|row| row.len() != self.cols) {
            return Err(ArrError::Dimension("stacked row width mismatch".into()));
        }
        let mut data = self.data.clone();
        for row in extra {
            data.extend_from_slice(row);
        }
        Ok(Self {
            rows: self.rows + extra.len(),
            cols: self.cols,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut BigRational {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[BigRational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<BigRational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn mul_vec(&self, v: &[BigRational]) -> Result<Vec<BigRational>> {
        if v.len() != self.cols {
            return Err(ArrError::Dimension(format!(
                "matrix has {} cols, vector has length {}",
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .map(|(a, b)| a * b)
                    .fold(BigRational::zero(), |acc, x| acc + x)
            })
            .collect())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Reduced row echelon form with deterministic pivoting: for each column
    /// in order, the first row (top to bottom) with a nonzero entry becomes
    /// the pivot. Pivot entries are scaled to 1 and cleared above and below.
    pub fn rref(&self) -> RrefResult {
        let mut m = self.clone();
        let mut pivot_cols = Vec::new();
        let mut pivot_row = 0usize;
        for col in 0..m.cols {
            if pivot_row >= m.rows {
                break;
            }
            let found = (pivot_row..m.rows).find(|&r| !m.at(r, col).is_zero());
            let Some(r) = found else { continue };
            m.swap_rows(pivot_row, r);
            let inv = m.at(pivot_row, col).clone();
            for j in col..m.cols {
                let v = m.at(pivot_row, j) / &inv;
                *m.at_mut(pivot_row, j) = v;
            }
            for i in 0..m.rows {
                if i == pivot_row || m.at(i, col).is_zero() {
                    continue;
                }
                let factor = m.at(i, col).clone();
                for j in col..m.cols {
                    let v = m.at(i, j) - &factor * m.at(pivot_row, j);
                    *m.at_mut(i, j) = v;
                }
            }
            pivot_cols.push(col);
            pivot_row += 1;
        }
        let rank = pivot_cols.len();
        RrefResult {
            matrix: m,
            pivot_cols,
            rank,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Nonzero rows of the RREF: the canonical basis of the row space.
    pub fn row_space_basis(&self) -> RatMatrix {
        let r = self.rref();
        let rows: Vec<Vec<BigRational>> = (0..r.rank).map(|i| r.matrix.row(i).to_vec()).collect();
        RatMatrix::from_rows(&rows).expect("rref rows are uniform width")
    }

    /// True iff `v` lies in the row space of `self`.
    pub fn row_space_contains(&self, v: &[BigRational]) -> Result<bool> {
        let base_rank = self.rank();
        let stacked = self.stacked(std::slice::from_ref(&v.to_vec()))?;
        Ok(stacked.rank() == base_rank)
    }

    /// Basis of the right null space. For each free column f of the RREF the
    /// basis vector has 1 in coordinate f and -entry in each pivot coordinate;
    /// empty iff the matrix is injective.
    pub fn kernel_basis(&self) -> KernelBasis {
        let r = self.rref();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (row, &col) in r.pivot_cols.iter().enumerate() {
                v[col] = Some(row);
            }
            v
        };
        let mut basis = Vec::new();
        for f in 0..self.cols {
            if pivot_set[f].is_some() {
                continue;
            }
            let mut vec = vec![BigRational::zero(); self.cols];
            vec[f] = BigRational::one();
            for (row, &col) in r.pivot_cols.iter().enumerate() {
                vec[col] = -r.matrix.at(row, f).clone();
            }
            basis.push(vec);
        }
        basis
    }

    /// Some solution of `self * x = b`, or `None` when inconsistent.
    /// Deterministic choice: free variables are set to 0.
    pub fn linsolve(&self, b: &[BigRational]) -> Result<Option<Vec<BigRational>>> {
        if b.len() != self.rows {
            return Err(ArrError::Dimension(format!(
                "matrix has {} rows, rhs has length {}",
                self.rows,
                b.len()
            )));
        }
        let mut aug = Self::zero(self.rows, self.cols + 1);
        for (i, rhs) in b.iter().enumerate() {
            for j in 0..self.cols {
                *aug.at_mut(i, j) = self.at(i, j).clone();
            }
            *aug.at_mut(i, self.cols) = rhs.clone();
        }
        let r = aug.rref();
        if r.pivot_cols.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![BigRational::zero(); self.cols];
        for (row, &col) in r.pivot_cols.iter().enumerate() {
            x[col] = r.matrix.at(row, self.cols).clone();
        }
        Ok(Some(x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::parse_rational;

    fn m(rows: &[&[i64]]) -> RatMatrix {
        let rows: Vec<Vec<BigRational>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
            .collect();
        RatMatrix::from_rows(&rows).unwrap()
    }

    fn v(entries: &[&str]) -> Vec<BigRational> {
        entries.iter().map(|s| parse_rational(s).unwrap()).collect()
    }

    #[test]
    fn rref_identity_fixed() {
        let id = RatMatrix::identity(2);
        let r = id.rref();
        assert_eq!(r.matrix, id);
        assert_eq!(r.pivot_cols, vec![0, 1]);
        assert_eq!(r.rank, 2);
    }

    #[test]
    fn rref_single_row() {
        let a = m(&[&[1, 1, 1]]);
        let r = a.rref();
        assert_eq!(r.matrix, a);
        assert_eq!(r.rank, 1);
    }

    #[test]
    fn rref_dependent_rows() {
        let a = m(&[&[1, 2], &[2, 4]]);
        let r = a.rref();
        assert_eq!(r.matrix, m(&[&[1, 2], &[0, 0]]));
        assert_eq!(r.rank, 1);
    }

    #[test]
    fn kernel_of_injective_is_empty() {
        assert!(RatMatrix::identity(3).kernel_basis().is_empty());
    }

    #[test]
    fn kernel_single_row() {
        let a = m(&[&[1, 1, 1]]);
        let k = a.kernel_basis();
        assert_eq!(k, vec![v(&["-1", "1", "0"]), v(&["-1", "0", "1"])]);
        for vec in &k {
            assert!(a.mul_vec(vec).unwrap().iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn kernel_proportional_rows() {
        let a = m(&[&[1, 2], &[2, 4]]);
        let k = a.kernel_basis();
        assert_eq!(k, vec![v(&["-2", "1"])]);
    }

    #[test]
    fn linsolve_identity() {
        let b = v(&["3", "-1/2"]);
        assert_eq!(RatMatrix::identity(2).linsolve(&b).unwrap().unwrap(), b);
    }

    #[test]
    fn linsolve_underdetermined_sets_free_vars_to_zero() {
        let a = m(&[&[1, 1]]);
        let x = a.linsolve(&v(&["3"])).unwrap().unwrap();
        assert_eq!(x, v(&["3", "0"]));
    }

    #[test]
    fn linsolve_inconsistent() {
        let a = m(&[&[1], &[1]]);
        assert!(a.linsolve(&v(&["1", "2"])).unwrap().is_none());
    }

    #[test]
    fn linsolve_dimension_mismatch_is_error() {
        let a = m(&[&[1, 1]]);
        assert!(a.linsolve(&v(&["1", "2"])).is_err());
    }
}
