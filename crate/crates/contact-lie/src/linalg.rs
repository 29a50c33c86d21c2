//! Small dense exact linear algebra over [`Scalar`].
//!
//! Everything here is sized for Lie algebras of dimension at most six, so the
//! routines favour clarity over asymptotics: Bareiss-style fraction-free
//! elimination for determinants, Gauss-Jordan for kernels and inverses.

use crate::scalar::Scalar;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinalgError {
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("matrix is not symmetric at ({0},{1})")]
    NotSymmetric(usize, usize),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

/// A coordinate vector of exact rationals.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Vector(pub Vec<Scalar>);

impl Vector {
    pub fn zero(dim: usize) -> Self {
        Vector(vec![Scalar::zero(); dim])
    }

    /// The i-th standard basis vector (0-based).
    pub fn basis(dim: usize, i: usize) -> Self {
        let mut v = Self::zero(dim);
        v.0[i] = Scalar::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::is_zero)
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Vector(self.0.iter().map(|x| x * s).collect())
    }

    pub fn dot(&self, other: &Vector) -> Scalar {
        assert_eq!(self.dim(), other.dim());
        self.0
            .iter()
            .zip(&other.0)
            .fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn add_scaled(&mut self, other: &Vector, s: &Scalar) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a += &(b * s);
        }
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl Add<&Vector> for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub<&Vector> for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        Vector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector(self.0.iter().map(|a| -a).collect())
    }
}

/// A dense rows x cols matrix of exact rationals, row-major.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Scalar::one();
        }
        m
    }

    pub fn diagonal(entries: &[Scalar]) -> Self {
        let n = entries.len();
        let mut m = Self::zero(n, n);
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Builds from an integer grid; convenient for fixtures.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect())
                .collect(),
        )
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

    pub fn is_symmetric(&self) -> bool {
        self.symmetry_defect().is_none()
    }

    /// First index pair where `m != m^T`, if any.
    pub fn symmetry_defect(&self) -> Option<(usize, usize)> {
        for i in 0..self.rows {
            for j in (i + 1)..self.cols {
                if self[(i, j)] != self[(j, i)] {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn column(&self, j: usize) -> Vector {
        Vector((0..self.rows).map(|i| self[(i, j)].clone()).collect())
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        assert_eq!(self.cols, v.dim(), "matrix/vector dimension mismatch");
        let mut out = Vector::zero(self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.0[i] += &(&self[(i, j)] * &v.0[j]);
            }
        }
        out
    }

    /// Determinant by Bareiss fraction-free elimination (exact divisions).
    pub fn det(&self) -> Scalar {
        assert!(self.is_square(), "determinant of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Scalar::one();
        }
        let mut a = self.clone();
        let mut prev = Scalar::one();
        let mut sign = Scalar::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[(i, k)].is_zero()) else {
                    return Scalar::zero();
                };
                a.swap_rows(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&a[(k, k)] * &a[(i, j)]) - &(&a[(i, k)] * &a[(k, j)]);
                    a[(i, j)] = &num / &prev;
                }
                a[(i, k)] = Scalar::zero();
            }
            prev = a[(k, k)].clone();
        }
        sign * a[(n - 1, n - 1)].clone()
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    /// Reduced row echelon form; returns the pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..a.cols {
            if row == a.rows {
                break;
            }
            let Some(p) = (row..a.rows).find(|&i| !a[(i, col)].is_zero()) else {
                continue;
            };
            a.swap_rows(row, p);
            let inv = a[(row, col)].recip();
            for c in col..a.cols {
                a[(row, c)] = &a[(row, c)] * &inv;
            }
            for i in 0..a.rows {
                if i != row && !a[(i, col)].is_zero() {
                    let f = a[(i, col)].clone();
                    for c in col..a.cols {
                        let sub = &a[(row, c)] * &f;
                        a[(i, c)] = &a[(i, c)] - &sub;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (a, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Exact basis of the null space; kernel size + rank = cols.
    pub fn kernel(&self) -> Vec<Vector> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = Vector::zero(self.cols);
            v.0[free] = Scalar::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v.0[pc] = -&r[(row, free)];
            }
            basis.push(v);
        }
        basis
    }

    /// Exact inverse. Errors with [`LinalgError::SingularMatrix`] when det = 0.
    pub fn invert(&self) -> Result<Matrix, LinalgError> {
        assert!(self.is_square(), "inverse of non-square matrix");
        let n = self.rows;
        let mut aug = Matrix::zero(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Scalar::one();
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(LinalgError::SingularMatrix);
        }
        let mut inv = Matrix::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = r[(i, n + j)].clone();
            }
        }
        Ok(inv)
    }

    /// Unique solution of `self * x = b`. Errors when the solution is not unique.
    pub fn solve_unique(&self, b: &Vector) -> Result<Vector, LinalgError> {
        assert_eq!(self.rows, b.dim(), "rhs length mismatch");
        let mut aug = Matrix::zero(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b.0[i].clone();
        }
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return Err(LinalgError::SingularMatrix); // inconsistent system
        }
        if pivots.len() < self.cols {
            return Err(LinalgError::SingularMatrix); // underdetermined
        }
        let mut x = Vector::zero(self.cols);
        for (row, &pc) in pivots.iter().enumerate() {
            x.0[pc] = r[(row, self.cols)].clone();
        }
        Ok(x)
    }

    /// True iff symmetric with all leading principal minors positive.
    pub fn is_positive_definite(&self) -> Result<bool, LinalgError> {
        assert!(self.is_square());
        if let Some((i, j)) = self.symmetry_defect() {
            return Err(LinalgError::NotSymmetric(i, j));
        }
        for k in 1..=self.rows {
            let mut minor = Matrix::zero(k, k);
            for i in 0..k {
                for j in 0..k {
                    minor[(i, j)] = self[(i, j)].clone();
                }
            }
            if !minor.det().is_positive() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Signature (positive, negative, zero) of a symmetric matrix by exact
    /// congruence diagonalization (Sylvester's law of inertia).
    pub fn signature(&self) -> Result<(usize, usize, usize), LinalgError> {
        assert!(self.is_square());
        if let Some((i, j)) = self.symmetry_defect() {
            return Err(LinalgError::NotSymmetric(i, j));
        }
        let n = self.rows;
        let mut a = self.clone();
        let (mut pos, mut neg) = (0, 0);
        let mut k = 0;
        while k < n {
            if a[(k, k)].is_zero() {
                if let Some(j) = (k + 1..n).find(|&j| !a[(j, j)].is_zero()) {
                    // congruence swap of basis vectors k and j
                    a.swap_rows(k, j);
                    let mut t = a.transpose();
                    t.swap_rows(k, j);
                    a = t.transpose();
                } else if let Some(j) = (k + 1..n).find(|&j| !a[(k, j)].is_zero()) {
                    // e_k <- e_k + e_j creates a nonzero diagonal entry
                    for c in 0..n {
                        let add = a[(j, c)].clone();
                        a[(k, c)] = &a[(k, c)] + &add;
                    }
                    for r in 0..n {
                        let add = a[(r, j)].clone();
                        a[(r, k)] = &a[(r, k)] + &add;
                    }
                } else {
                    k += 1;
                    continue;
                }
            }
            let p = a[(k, k)].clone();
            if p.is_positive() {
                pos += 1;
            } else {
                neg += 1;
            }
            for i in 0..n {
                if i != k && !a[(i, k)].is_zero() {
                    let f = &a[(i, k)] / &p;
                    for c in 0..n {
                        let sub = &a[(k, c)] * &f;
                        a[(i, c)] = &a[(i, c)] - &sub;
                    }
                    for r in 0..n {
                        let sub = &a[(r, k)] * &f;
                        a[(r, i)] = &a[(r, i)] - &sub;
                    }
                }
            }
            k += 1;
        }
        Ok((pos, neg, n - pos - neg))
    }

    /// Canonical spanning set: RREF rows of the matrix whose rows are `vectors`.
    pub fn row_space_basis(vectors: &[Vector], ambient_dim: usize) -> Vec<Vector> {
        if vectors.is_empty() {
            return Vec::new();
        }
        let m = Matrix::from_rows(vectors.iter().map(|v| v.0.clone()).collect());
        assert_eq!(m.cols, ambient_dim);
        let (r, pivots) = m.rref();
        (0..pivots.len())
            .map(|i| Vector((0..ambient_dim).map(|j| r[(i, j)].clone()).collect()))
            .collect()
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            write!(f, "  [")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            writeln!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl Mul<&Matrix> for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        let mut out = Matrix::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] += &(&self[(i, k)] * &rhs[(k, j)]);
                }
            }
        }
        out
    }
}

impl Add<&Matrix> for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub<&Matrix> for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }
}

/// Largest absolute entry of a matrix; zero for the zero matrix.
pub fn max_abs_entry(m: &Matrix) -> Scalar {
    let mut best = Scalar::zero();
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let a = m[(i, j)].abs();
            if a > best {
                best = a;
            }
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sc;
    use proptest::prelude::*;

    #[test]
    fn invert_identity_and_diagonal() {
        let id = Matrix::identity(4);
        assert_eq!(id.invert().unwrap(), id);
        let d = Matrix::diagonal(&[sc!(2), sc!(3), sc!(3), sc!(2)]);
        let expect = Matrix::diagonal(&[sc!(1, 2), sc!(1, 3), sc!(1, 3), sc!(1, 2)]);
        assert_eq!(d.invert().unwrap(), expect);
    }

    #[test]
    fn invert_upper_triangular_checked_by_multiplication() {
        let m = Matrix::from_int_rows(&[&[1, 1], &[0, 1]]);
        let inv = m.invert().unwrap();
        assert_eq!(inv, Matrix::from_int_rows(&[&[1, -1], &[0, 1]]));
        assert_eq!(&m * &inv, Matrix::identity(2));
    }

    #[test]
    fn singular_matrix_is_rejected() {
        let m = Matrix::from_int_rows(&[&[1, 2], &[2, 4]]);
        assert_eq!(m.invert(), Err(LinalgError::SingularMatrix));
    }

    #[test]
    fn kernel_of_zero_identity_and_rank_one() {
        assert_eq!(Matrix::zero(3, 3).kernel().len(), 3);
        assert!(Matrix::identity(3).kernel().is_empty());
        let m = Matrix::from_int_rows(&[&[1, 2], &[2, 4]]);
        let k = m.kernel();
        assert_eq!(k.len(), 1);
        // basis vector is (-2, 1) up to normalization; check m.v = 0 exactly
        assert!(m.apply(&k[0]).is_zero());
        assert_eq!(k[0], Vector(vec![sc!(-2), sc!(1)]));
    }

    #[test]
    fn positive_definiteness_by_leading_minors() {
        assert_eq!(Matrix::identity(5).is_positive_definite(), Ok(true));
        let nd = Matrix::diagonal(&[sc!(1), sc!(-1)]);
        assert_eq!(nd.is_positive_definite(), Ok(false));
        let pd = Matrix::from_int_rows(&[&[2, 1], &[1, 2]]);
        assert_eq!(pd.is_positive_definite(), Ok(true));
        let asym = Matrix::from_int_rows(&[&[1, 2], &[0, 1]]);
        assert!(matches!(
            asym.is_positive_definite(),
            Err(LinalgError::NotSymmetric(0, 1))
        ));
    }

    #[test]
    fn signature_of_indefinite_diagonal() {
        let m = Matrix::diagonal(&[sc!(3), sc!(-2), sc!(0), sc!(5)]);
        assert_eq!(m.signature(), Ok((2, 1, 1)));
        // hyperbolic plane: zero diagonal, off-diagonal coupling
        let h = Matrix::from_int_rows(&[&[0, 1], &[1, 0]]);
        assert_eq!(h.signature(), Ok((1, 1, 0)));
    }

    fn arb_scalar() -> impl Strategy<Value = Scalar> {
        (-6i64..7, 1i64..4).prop_map(|(n, d)| Scalar::new(n, d))
    }

    fn arb_matrix(n: usize) -> impl Strategy<Value = Matrix> {
        proptest::collection::vec(arb_scalar(), n * n).prop_map(move |data| {
            Matrix::from_rows(data.chunks(n).map(|c| c.to_vec()).collect())
        })
    }

    proptest! {
        #[test]
        fn double_inverse_is_identity_map(m in arb_matrix(3)) {
            if let Ok(inv) = m.invert() {
                prop_assert_eq!(inv.invert().unwrap(), m.clone());
                prop_assert_eq!(&m * &inv, Matrix::identity(3));
            }
        }

        #[test]
        fn kernel_vectors_annihilate_and_count(m in arb_matrix(4)) {
            let k = m.kernel();
            prop_assert_eq!(k.len() + m.rank(), 4);
            for v in &k {
                prop_assert!(m.apply(v).is_zero());
            }
        }

        #[test]
        fn bareiss_det_matches_rref_singularity(m in arb_matrix(3)) {
            let d = m.det();
            prop_assert_eq!(d.is_zero(), m.rank() < 3);
        }
    }
}
