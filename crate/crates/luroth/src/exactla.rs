//! Exact dense linear algebra over an arbitrary coefficient field.
//!
//! Everything here is deterministic and division-exact: determinants use fraction-free
//! Bareiss elimination (intermediate entries stay integral when the inputs are
//! integers), and row reduction pivots on the first nonzero entry of a column rather
//! than by magnitude, so results are identical across fields and runs.
//!
//! The matrices of interest are mostly symmetric (apolarity pairings, catalecticants),
//! hence the type name, but nothing assumes symmetry and rectangular shapes are fine.

use crate::ring::field::Field;
use std::fmt;

/// Errors from linear solving.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LaError {
    /// The right-hand side is not in the column span.
    Inconsistent,
    /// Solutions exist but are not unique.
    Underdetermined,
}

impl fmt::Display for LaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LaError::Inconsistent => write!(f, "linear system has no solution"),
            LaError::Underdetermined => write!(f, "linear system has a positive-dimensional solution space"),
        }
    }
}

impl std::error::Error for LaError {}

/// Dense matrix with entries in a coefficient field, row-major storage.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymMatrix<F: Field> {
    pub rows: usize,
    pub cols: usize,
    data: Vec<F::Elem>,
}

impl<F: Field> SymMatrix<F> {
    pub fn zero(field: &F, rows: usize, cols: usize) -> Self {
        SymMatrix { rows, cols, data: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: &F, n: usize) -> Self {
        let mut m = Self::zero(field, n, n);
        for i in 0..n {
            *m.at_mut(i, i) = field.one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F::Elem>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        SymMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    /// Build from a function of (row, col).
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F::Elem) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        SymMatrix { rows, cols, data }
    }

    pub fn at(&self, i: usize, j: usize) -> &F::Elem {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut F::Elem {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[F::Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self, field: &F) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| {
            let _ = field;
            self.at(j, i).clone()
        })
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.at(i, j) == self.at(j, i)))
    }

    pub fn scale(&self, field: &F, c: &F::Elem) -> Self {
        SymMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| field.mul(a, c)).collect(),
        }
    }

    pub fn add(&self, field: &F, other: &Self) -> Self {
        assert!(self.rows == other.rows && self.cols == other.cols);
        SymMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| field.add(a, b))
                .collect(),
        }
    }

    pub fn sub(&self, field: &F, other: &Self) -> Self {
        assert!(self.rows == other.rows && self.cols == other.cols);
        SymMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| field.sub(a, b))
                .collect(),
        }
    }

    pub fn matmul(&self, field: &F, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        Self::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = field.zero();
            for k in 0..self.cols {
                acc = field.add(&acc, &field.mul(self.at(i, k), other.at(k, j)));
            }
            acc
        })
    }

    pub fn matvec(&self, field: &F, v: &[F::Elem]) -> Vec<F::Elem> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = field.zero();
                for k in 0..self.cols {
                    acc = field.add(&acc, &field.mul(self.at(i, k), &v[k]));
                }
                acc
            })
            .collect()
    }

    /// Drop one row and one column.
    pub fn minor_matrix(&self, drop_row: usize, drop_col: usize) -> Self {
        let rows: Vec<Vec<F::Elem>> = (0..self.rows)
            .filter(|&i| i != drop_row)
            .map(|i| {
                (0..self.cols)
                    .filter(|&j| j != drop_col)
                    .map(|j| self.at(i, j).clone())
                    .collect()
            })
            .collect();
        Self::from_rows(rows)
    }

    /// Map entries into another field (used for reduction mod p and lifting).
    pub fn map_field<G, M>(&self, mut f: M) -> Result<SymMatrix<G>, crate::ring::field::FieldError>
    where
        G: Field,
        M: FnMut(&F::Elem) -> Result<G::Elem, crate::ring::field::FieldError>,
    {
        let mut data = Vec::with_capacity(self.data.len());
        for e in &self.data {
            data.push(f(e)?);
        }
        Ok(SymMatrix { rows: self.rows, cols: self.cols, data })
    }

    /// Determinant by fraction-free Bareiss elimination.
    ///
    /// Divisions are by earlier pivots and are exact; over the rationals with integer
    /// entries every intermediate value is an integer, which keeps numerators small.
    pub fn det(&self, field: &F) -> F::Elem {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return field.one();
        }
        let mut m = self.clone();
        let mut sign_flip = false;
        let mut prev = field.one();
        for k in 0..n - 1 {
            if field.is_zero(m.at(k, k)) {
                let swap = (k + 1..n).find(|&r| !field.is_zero(m.at(r, k)));
                match swap {
                    None => return field.zero(),
                    Some(r) => {
                        for j in 0..n {
                            let a = m.at(k, j).clone();
                            let b = m.at(r, j).clone();
                            *m.at_mut(k, j) = b;
                            *m.at_mut(r, j) = a;
                        }
                        sign_flip = !sign_flip;
                    }
                }
            }
            let pivot = m.at(k, k).clone();
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = field.sub(
                        &field.mul(m.at(i, j), &pivot),
                        &field.mul(m.at(i, k), m.at(k, j)),
                    );
                    *m.at_mut(i, j) = field.div(&num, &prev).expect("Bareiss division is exact");
                }
                *m.at_mut(i, k) = field.zero();
            }
            prev = pivot;
        }
        let d = m.at(n - 1, n - 1).clone();
        if sign_flip {
            field.neg(&d)
        } else {
            d
        }
    }

    /// Reduced row echelon form; returns the reduced matrix and the pivot columns.
    pub fn rref(&self, field: &F) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let pivot_row = (r..m.rows).find(|&i| !field.is_zero(m.at(i, c)));
            let Some(p) = pivot_row else { continue };
            if p != r {
                for j in 0..m.cols {
                    let a = m.at(r, j).clone();
                    let b = m.at(p, j).clone();
                    *m.at_mut(r, j) = b;
                    *m.at_mut(p, j) = a;
                }
            }
            let inv = field.inv(m.at(r, c)).expect("pivot is nonzero");
            for j in c..m.cols {
                *m.at_mut(r, j) = field.mul(m.at(r, j), &inv);
            }
            for i in 0..m.rows {
                if i != r && !field.is_zero(m.at(i, c)) {
                    let factor = m.at(i, c).clone();
                    for j in c..m.cols {
                        let sub = field.mul(&factor, m.at(r, j));
                        *m.at_mut(i, j) = field.sub(m.at(i, j), &sub);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self, field: &F) -> usize {
        self.rref(field).1.len()
    }

    /// Basis of the right kernel in reduced echelon convention: one vector per free
    /// column, carrying 1 at that column, listed in increasing free-column order.
    pub fn kernel(&self, field: &F) -> Vec<Vec<F::Elem>> {
        let (r, pivots) = self.rref(field);
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivots.contains(&free) {
                continue;
            }
            let mut v = vec![field.zero(); self.cols];
            v[free] = field.one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = field.neg(r.at(row, free));
            }
            basis.push(v);
        }
        basis
    }

    /// Solve A·x = b when the solution is unique.
    pub fn solve_unique(&self, field: &F, b: &[F::Elem]) -> Result<Vec<F::Elem>, LaError> {
        assert_eq!(b.len(), self.rows);
        let (sol, free) = self.solve_impl(field, b).ok_or(LaError::Inconsistent)?;
        if free {
            return Err(LaError::Underdetermined);
        }
        Ok(sol)
    }

    /// Solve A·x = b, returning any one solution (free coordinates set to zero).
    pub fn solve_particular(&self, field: &F, b: &[F::Elem]) -> Option<Vec<F::Elem>> {
        self.solve_impl(field, b).map(|(sol, _)| sol)
    }

    fn solve_impl(&self, field: &F, b: &[F::Elem]) -> Option<(Vec<F::Elem>, bool)> {
        let mut aug = SymMatrix::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self.at(i, j).clone()
            } else {
                b[i].clone()
            }
        });
        let (r, pivots) = aug.rref(field);
        aug = r;
        // A pivot in the last (augmented) column means b is outside the column span.
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut sol = vec![field.zero(); self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            sol[pc] = aug.at(row, self.cols).clone();
        }
        let free = pivots.len() < self.cols;
        Some((sol, free))
    }

    /// Inverse, when it exists.
    pub fn inverse(&self, field: &F) -> Option<Self> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let aug = SymMatrix::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.at(i, j).clone()
            } else if j - n == i {
                field.one()
            } else {
                field.zero()
            }
        });
        let (r, pivots) = aug.rref(field);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(SymMatrix::from_fn(n, n, |i, j| r.at(i, n + j).clone()))
    }

    /// Adjugate matrix: the transpose of the cofactor matrix, satisfying
    /// A·adj(A) = adj(A)·A = det(A)·I for every square A.
    ///
    /// Three regimes, none requiring n² minor expansions:
    /// - invertible: adj = det·A⁻¹;
    /// - rank ≤ n−2: every (n−1)-minor vanishes, adj = 0;
    /// - rank = n−1: adj = c·u·vᵗ with u spanning ker A and v spanning ker Aᵗ; the
    ///   scalar c is pinned by one explicitly computed cofactor at a position where
    ///   u·vᵗ is nonzero.
    pub fn adjugate(&self, field: &F) -> Self {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        if n == 0 {
            return self.clone();
        }
        if n == 1 {
            let mut m = Self::zero(field, 1, 1);
            *m.at_mut(0, 0) = field.one();
            return m;
        }
        let d = self.det(field);
        if !field.is_zero(&d) {
            let inv = self.inverse(field).expect("nonzero determinant");
            return inv.scale(field, &d);
        }
        let ker = self.kernel(field);
        if ker.len() >= 2 {
            return Self::zero(field, n, n);
        }
        let u = &ker[0];
        let kert = self.transpose(field).kernel(field);
        debug_assert_eq!(kert.len(), 1);
        let v = &kert[0];
        let i0 = u.iter().position(|e| !field.is_zero(e)).expect("kernel vector is nonzero");
        let j0 = v.iter().position(|e| !field.is_zero(e)).expect("kernel vector is nonzero");
        // adj[i0][j0] = (−1)^{i0+j0} · minor of A with row j0 and column i0 removed.
        let minor = self.minor_matrix(j0, i0).det(field);
        let cof = if (i0 + j0) % 2 == 0 { minor } else { field.neg(&minor) };
        let c = field
            .div(&cof, &field.mul(&u[i0], &v[j0]))
            .expect("u[i0] and v[j0] are nonzero");
        Self::from_fn(n, n, |i, j| field.mul(&c, &field.mul(&u[i], &v[j])))
    }
}
