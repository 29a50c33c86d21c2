//! Levi-Civita connection and curvature of a left-invariant metric.
//!
//! Everything is computed in the defining (coordinate, generally
//! non-orthonormal) basis with the exact inverse metric, so values stay
//! rational. Curvature sign conventions, fixed once for the whole crate:
//!
//! ```text
//! R(X, Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_{[X,Y]} Z
//! R(X, Y, Z, W) = g(R(X, Y)Z, W)
//! rho(Y, Z) = sum_{i,j} g^{ij} R(e_i, Y, Z, e_j)
//! ```
//!
//! With these choices the hyperbolic plane `[e_1, e_2] = e_2`,
//! `g = a(e^1 e^1 + e^2 e^2)` has `rho = -g/a`, and all table values in
//! [`crate::catalog`] reproduce exactly.

use crate::lie::LieAlgebra;
use crate::linalg::{LinalgError, Matrix, Vector};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MetricError {
    #[error("metric is not symmetric")]
    NotSymmetric,
    #[error("metric is not positive definite")]
    NotPositiveDefinite,
    #[error("metric dimension {0} does not match algebra dimension {1}")]
    DimensionMismatch(usize, usize),
    #[error("orthonormal frame view requires a diagonal metric")]
    NonDiagonalMetric,
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// A Lie algebra with a positive-definite inner product on it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MetricLieAlgebra {
    algebra: LieAlgebra,
    g: Matrix,
    g_inv: Matrix,
}

impl MetricLieAlgebra {
    pub fn new(algebra: LieAlgebra, g: Matrix) -> Result<Self, MetricError> {
        if g.rows() != algebra.dim() || g.cols() != algebra.dim() {
            return Err(MetricError::DimensionMismatch(g.rows(), algebra.dim()));
        }
        if !g.is_symmetric() {
            return Err(MetricError::NotSymmetric);
        }
        if !g.is_positive_definite().map_err(MetricError::Linalg)? {
            return Err(MetricError::NotPositiveDefinite);
        }
        let g_inv = g.invert().expect("positive definite implies invertible");
        Ok(MetricLieAlgebra { algebra, g, g_inv })
    }

    pub fn standard(algebra: LieAlgebra) -> Self {
        let n = algebra.dim();
        Self::new(algebra, Matrix::identity(n)).expect("identity metric")
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn metric(&self) -> &Matrix {
        &self.g
    }

    pub fn metric_inv(&self) -> &Matrix {
        &self.g_inv
    }

    pub fn inner(&self, x: &Vector, y: &Vector) -> Scalar {
        self.g.apply(y).dot(x)
    }
}

/// Christoffel data `Gamma^k_{ij}` of the Levi-Civita connection:
/// `nabla_{e_i} e_j = sum_k Gamma^k_{ij} e_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Connection {
    // gamma[i] is the matrix of nabla_{e_i}; column j holds nabla_{e_i} e_j
    gamma: Vec<Matrix>,
}

impl Connection {
    pub fn dim(&self) -> usize {
        self.gamma.len()
    }

    /// `nabla_{e_i} v` for a basis direction (0-based `i`).
    pub fn derive_basis(&self, i: usize, v: &Vector) -> Vector {
        self.gamma[i].apply(v)
    }

    /// `nabla_X v`, linear in `X`.
    pub fn derive(&self, x: &Vector, v: &Vector) -> Vector {
        let mut out = Vector::zero(self.dim());
        for i in 0..self.dim() {
            if x.0[i].is_zero() {
                continue;
            }
            out.add_scaled(&self.gamma[i].apply(v), &x.0[i]);
        }
        out
    }

    pub fn matrix_of_direction(&self, i: usize) -> &Matrix {
        &self.gamma[i]
    }
}

/// Solves the Koszul formula `2 g(nabla_X Y, Z) = g([X,Y],Z) - g([Y,Z],X)
/// + g([Z,X],Y)` exactly via the inverse metric.
pub fn levi_civita(m: &MetricLieAlgebra) -> Connection {
    let n = m.dim();
    let half = Scalar::new(1, 2);
    // gb[i][j] = G [e_i, e_j], so g([e_i, e_j], e_k) = gb[i][j][k]
    let gb: Vec<Vec<Vector>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| m.metric().apply(&m.algebra().bracket_basis(i + 1, j + 1)))
                .collect()
        })
        .collect();
    let mut gamma = Vec::with_capacity(n);
    for i in 0..n {
        // k_mat[(k, j)] = g(nabla_{e_i} e_j, e_k)
        let mut k_mat = Matrix::zero(n, n);
        for j in 0..n {
            for k in 0..n {
                let val = &(&gb[i][j].0[k] - &gb[j][k].0[i]) + &gb[k][i].0[j];
                k_mat[(k, j)] = &val * &half;
            }
        }
        gamma.push(m.metric_inv() * &k_mat);
    }
    Connection { gamma }
}

/// The (0,4) curvature tensor `R_{ijkl} = g(R(e_i, e_j) e_k, e_l)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Riemann {
    dim: usize,
    data: Vec<Scalar>,
}

impl Riemann {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize, k: usize, l: usize) -> &Scalar {
        &self.data[((i * self.dim + j) * self.dim + k) * self.dim + l]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn max_abs(&self) -> Scalar {
        self.data
            .iter()
            .map(Scalar::abs)
            .max()
            .unwrap_or_else(Scalar::zero)
    }
}

/// Computes the full curvature tensor of `m` from the Koszul connection.
pub fn riemann(m: &MetricLieAlgebra) -> Riemann {
    let n = m.dim();
    let conn = levi_civita(m);
    let mut data = vec![Scalar::zero(); n * n * n * n];
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let bracket = m.algebra().bracket_basis(i + 1, j + 1);
            for k in 0..n {
                let ek = Vector::basis(n, k);
                let term1 = conn.derive_basis(i, &conn.derive_basis(j, &ek));
                let term2 = conn.derive_basis(j, &conn.derive_basis(i, &ek));
                let term3 = conn.derive(&bracket, &ek);
                let r = &(&term1 - &term2) - &term3;
                let paired = m.metric().apply(&r); // g(R(e_i,e_j)e_k, e_l) = (G r)_l
                for l in 0..n {
                    data[((i * n + j) * n + k) * n + l] = paired.0[l].clone();
                }
            }
        }
    }
    Riemann { dim: n, data }
}

/// The Ricci form `rho(e_j, e_k)`, symmetric.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RicciForm {
    entries: Matrix,
}

impl RicciForm {
    pub fn new(entries: Matrix) -> Self {
        debug_assert!(entries.is_symmetric());
        RicciForm { entries }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.entries
    }

    pub fn dim(&self) -> usize {
        self.entries.rows()
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[(i, j)]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_zero()
    }

    /// `rho(X, Y)` by bilinearity.
    pub fn eval(&self, x: &Vector, y: &Vector) -> Scalar {
        self.entries.apply(y).dot(x)
    }
}

/// `rho(Y, Z) = sum_{i,j} g^{ij} R(e_i, Y, Z, e_j)`: the orthonormal-frame
/// trace of the usual conventions, rewritten with the inverse metric.
pub fn ricci(m: &MetricLieAlgebra) -> RicciForm {
    let r = riemann(m);
    ricci_from_riemann(m, &r)
}

pub fn ricci_from_riemann(m: &MetricLieAlgebra, r: &Riemann) -> RicciForm {
    let n = m.dim();
    let ginv = m.metric_inv();
    let mut rho = Matrix::zero(n, n);
    for j in 0..n {
        for k in 0..n {
            let mut sum = Scalar::zero();
            for i in 0..n {
                for l in 0..n {
                    if ginv[(i, l)].is_zero() {
                        continue;
                    }
                    sum += &(&ginv[(i, l)] * r.get(i, j, k, l));
                }
            }
            rho[(j, k)] = sum;
        }
    }
    RicciForm::new(rho)
}

/// `sum_{i,j} g^{ij} rho_{ij}`.
pub fn scalar_curvature(m: &MetricLieAlgebra) -> Scalar {
    let rho = ricci(m);
    let ginv = m.metric_inv();
    let n = m.dim();
    let mut s = Scalar::zero();
    for i in 0..n {
        for j in 0..n {
            s += &(&ginv[(i, j)] * rho.get(i, j));
        }
    }
    s
}

/// One entry of the orthonormal-frame Ricci view.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FrameEntry {
    /// `rho_{ij} / sqrt(g_ii g_jj)` with a rational square root.
    Exact(Scalar),
    /// The normalizer `sqrt(g_ii g_jj)` is irrational; the raw coordinate
    /// value and the normalizer's square are reported instead.
    Flagged {
        raw: Scalar,
        normalizer_square: Scalar,
    },
}

/// Ricci in the orthonormal frame `e_i / sqrt(g_ii)` of a diagonal metric.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrameRicci {
    pub entries: Vec<Vec<FrameEntry>>,
}

impl FrameRicci {
    /// Diagonal of the view; diagonal normalizers are the `g_ii` themselves,
    /// so these entries are always exact.
    pub fn diagonal(&self) -> Vec<Scalar> {
        self.entries
            .iter()
            .enumerate()
            .map(|(i, row)| match &row[i] {
                FrameEntry::Exact(v) => v.clone(),
                FrameEntry::Flagged { .. } => unreachable!("diagonal normalizer is g_ii"),
            })
            .collect()
    }
}

/// Ricci entries renormalized to the orthonormal frame of a diagonal metric,
/// `rho(bar e_i, bar e_j) = rho_{ij} / sqrt(g_ii g_jj)`.
///
/// Entries whose normalizer is not a rational square (and whose raw value is
/// nonzero) are flagged rather than approximated.
pub fn frame_ricci(m: &MetricLieAlgebra) -> Result<FrameRicci, MetricError> {
    let n = m.dim();
    let g = m.metric();
    for i in 0..n {
        for j in 0..n {
            if i != j && !g[(i, j)].is_zero() {
                return Err(MetricError::NonDiagonalMetric);
            }
        }
    }
    let rho = ricci(m);
    let mut entries = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            let raw = rho.get(i, j).clone();
            let norm_sq = &g[(i, i)] * &g[(j, j)];
            let entry = if raw.is_zero() {
                FrameEntry::Exact(Scalar::zero())
            } else {
                match norm_sq.sqrt_exact() {
                    Some(nrm) => FrameEntry::Exact(&raw / &nrm),
                    None => FrameEntry::Flagged {
                        raw,
                        normalizer_square: norm_sq,
                    },
                }
            };
            row.push(entry);
        }
        entries.push(row);
    }
    Ok(FrameRicci { entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::{BracketTable, LieAlgebra};
    use crate::sc;

    fn rr30() -> LieAlgebra {
        // (0, -e^{12}, 0, 0): [e1, e2] = e2
        let mut t = BracketTable::new(4);
        t.set_terms(1, 2, &[(2, sc!(1))]);
        LieAlgebra::new(t).unwrap()
    }

    fn rrp30() -> LieAlgebra {
        let mut t = BracketTable::new(4);
        t.set_terms(1, 2, &[(3, sc!(-1))]);
        t.set_terms(1, 3, &[(2, sc!(1))]);
        LieAlgebra::new(t).unwrap()
    }

    fn h5() -> LieAlgebra {
        let mut t = BracketTable::new(5);
        t.set_terms(1, 4, &[(5, sc!(2))]);
        t.set_terms(2, 3, &[(5, sc!(2))]);
        LieAlgebra::new(t).unwrap()
    }

    fn diag(entries: &[i64]) -> Matrix {
        Matrix::diagonal(&entries.iter().map(|&x| sc!(x)).collect::<Vec<_>>())
    }

    #[test]
    fn metric_validation() {
        let bad = Matrix::from_int_rows(&[&[1, 2], &[3, 1]]);
        assert!(matches!(
            MetricLieAlgebra::new(LieAlgebra::abelian(2), bad),
            Err(MetricError::NotSymmetric)
        ));
        let indef = diag(&[1, -1]);
        assert!(matches!(
            MetricLieAlgebra::new(LieAlgebra::abelian(2), indef),
            Err(MetricError::NotPositiveDefinite)
        ));
    }

    #[test]
    fn abelian_connection_and_curvature_vanish() {
        let m = MetricLieAlgebra::new(LieAlgebra::abelian(4), diag(&[2, 3, 5, 7])).unwrap();
        let conn = levi_civita(&m);
        for i in 0..4 {
            assert!(conn.matrix_of_direction(i).is_zero());
        }
        assert!(riemann(&m).is_zero());
        assert!(ricci(&m).is_zero());
        assert_eq!(scalar_curvature(&m), sc!(0));
    }

    #[test]
    fn rrp30_connection_matches_hand_computation() {
        let m = MetricLieAlgebra::standard(rrp30());
        let conn = levi_civita(&m);
        // nabla_{e1} e3 = e2, nabla_{e1} e2 = -e3, everything else zero
        assert_eq!(
            conn.derive_basis(0, &Vector::basis(4, 2)),
            Vector::basis(4, 1)
        );
        assert_eq!(
            conn.derive_basis(0, &Vector::basis(4, 1)),
            -&Vector::basis(4, 2)
        );
        let mut nonzero = 0;
        for i in 0..4 {
            for j in 0..4 {
                if !conn.derive_basis(i, &Vector::basis(4, j)).is_zero() {
                    nonzero += 1;
                }
            }
        }
        assert_eq!(nonzero, 2);
    }

    #[test]
    fn rrp30_is_flat_for_generic_diagonal_metrics() {
        for (a, b) in [(1, 1), (2, 5), (7, 3)] {
            let m = MetricLieAlgebra::new(rrp30(), diag(&[a, b, b, a])).unwrap();
            assert!(riemann(&m).is_zero(), "a={a} b={b}");
        }
    }

    #[test]
    fn h5_connection_values() {
        let m = MetricLieAlgebra::standard(h5());
        let conn = levi_civita(&m);
        // nabla_{e1} e4 = xi, nabla_{e1} xi = -e4
        assert_eq!(
            conn.derive_basis(0, &Vector::basis(5, 3)),
            Vector::basis(5, 4)
        );
        assert_eq!(
            conn.derive_basis(0, &Vector::basis(5, 4)),
            -&Vector::basis(5, 3)
        );
    }

    #[test]
    fn connection_is_torsion_free_and_metric_compatible() {
        let metrics = [diag(&[1, 1, 1, 1, 1]), diag(&[2, 3, 1, 5, 4])];
        for g in metrics {
            let m = MetricLieAlgebra::new(h5(), g).unwrap();
            let conn = levi_civita(&m);
            let n = m.dim();
            for i in 0..n {
                for j in 0..n {
                    let ei = Vector::basis(n, i);
                    let ej = Vector::basis(n, j);
                    let torsion = &(&conn.derive_basis(i, &ej) - &conn.derive_basis(j, &ei))
                        - &m.algebra().bracket(&ei, &ej);
                    assert!(torsion.is_zero());
                    for k in 0..n {
                        let ek = Vector::basis(n, k);
                        // Gamma_{ijk} + Gamma_{ikj} = 0
                        let s = &m.inner(&conn.derive_basis(i, &ej), &ek)
                            + &m.inner(&ej, &conn.derive_basis(i, &ek));
                        assert!(s.is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn curvature_symmetries_and_bianchi_on_h5() {
        let m = MetricLieAlgebra::new(h5(), diag(&[1, 2, 1, 3, 2])).unwrap();
        let r = riemann(&m);
        let n = 5;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        assert_eq!(r.get(i, j, k, l), &-r.get(j, i, k, l).clone());
                        assert_eq!(r.get(i, j, k, l), &-r.get(i, j, l, k).clone());
                        assert_eq!(r.get(i, j, k, l), r.get(k, l, i, j));
                        let bianchi =
                            &(r.get(i, j, k, l) + r.get(j, k, i, l)) + r.get(k, i, j, l);
                        assert!(bianchi.is_zero());
                    }
                }
            }
        }
    }

    #[test]
    fn heisenberg_sectional_value() {
        // [e1, e4] = 2 xi with the standard metric: R(e1,e4,e4,e1) = -3
        let m = MetricLieAlgebra::standard(h5());
        let r = riemann(&m);
        assert_eq!(r.get(0, 3, 3, 0), &sc!(-3));
    }

    #[test]
    fn rr30_frame_ricci_matches_table_diagonal() {
        for (a, b) in [(1, 1), (2, 3), (4, 9)] {
            let m = MetricLieAlgebra::new(rr30(), diag(&[a, a, b, b])).unwrap();
            let fr = frame_ricci(&m).unwrap();
            assert_eq!(
                fr.diagonal(),
                vec![sc!(-1, a), sc!(-1, a), sc!(0), sc!(0)],
                "a={a} b={b}"
            );
        }
    }

    #[test]
    fn frame_ricci_requires_diagonal_metric() {
        let m = MetricLieAlgebra::new(rr30(), diag(&[2, 2, 3, 3])).unwrap();
        let fr = frame_ricci(&m).unwrap();
        assert_eq!(fr.diagonal()[0], sc!(-1, 2));

        let nondiag = Matrix::from_int_rows(&[&[2, 1], &[1, 2]]);
        let m2 = MetricLieAlgebra::new(LieAlgebra::abelian(2), nondiag).unwrap();
        assert!(matches!(
            frame_ricci(&m2),
            Err(MetricError::NonDiagonalMetric)
        ));
    }

    #[test]
    fn scalar_curvature_examples() {
        let m = MetricLieAlgebra::new(rr30(), diag(&[1, 1, 1, 1])).unwrap();
        assert_eq!(scalar_curvature(&m), sc!(-2));
    }
}
