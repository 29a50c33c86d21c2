//! Alternating forms and the Chevalley-Eilenberg differential.
//!
//! A [`KForm`] stores one exact coefficient per increasing multi-index; its
//! value on basis vectors follows the determinant convention, so a basis
//! monomial `e^{i1...ik}` evaluates to 1 on `(e_{i1}, ..., e_{ik})` with no
//! factorial prefactor. The wedge product is the formal exterior product on
//! monomials; with this pairing `d(alpha)(X, Y) = -alpha([X, Y])` on 1-forms,
//! matching the structure-equation shorthand `(0, -e^{12}, ...)`.

use crate::lie::LieAlgebra;
use crate::linalg::{Matrix, Vector};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormError {
    #[error("dimension mismatch: form lives on dim {0}, expected {1}")]
    DimensionMismatch(usize, usize),
    #[error("wedge degree {0} exceeds ambient dimension {1}")]
    DegreeOverflow(usize, usize),
    #[error("contact test requires odd dimension, got {0}")]
    EvenDimension(usize),
    #[error("1-form is not contact: Reeb system has no unique solution")]
    NotContact,
}

/// All increasing multi-indices of size `k` drawn from `1..=n`, in
/// lexicographic order. `k = 0` yields the single empty index.
pub fn multi_indices(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == 0 {
            out.push(prefix.clone());
            return;
        }
        for i in start..=n.saturating_sub(k - 1) {
            prefix.push(i);
            rec(i + 1, n, k - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, n, k, &mut Vec::new(), &mut out);
    out
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc = 1usize;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Lexicographic rank of an increasing multi-index among `(n choose k)`.
fn rank(n: usize, combo: &[usize]) -> usize {
    let k = combo.len();
    let mut rank = 0;
    let mut prev = 0;
    for (pos, &c) in combo.iter().enumerate() {
        for skipped in (prev + 1)..c {
            rank += binomial(n - skipped, k - 1 - pos);
        }
        prev = c;
    }
    rank
}

/// An alternating k-form on an n-dimensional space, stored densely on
/// increasing multi-indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KForm {
    ambient_dim: usize,
    degree: usize,
    comps: Vec<Scalar>,
}

impl KForm {
    pub fn zero(ambient_dim: usize, degree: usize) -> Self {
        // degree > ambient_dim is the zero vector space: no components
        let len = multi_indices(ambient_dim, degree).len();
        KForm {
            ambient_dim,
            degree,
            comps: vec![Scalar::zero(); len],
        }
    }

    /// The basis monomial `e^{i1...ik}` (indices 1-based, strictly increasing).
    pub fn monomial(ambient_dim: usize, indices: &[usize]) -> Self {
        let mut f = Self::zero(ambient_dim, indices.len());
        f.set(indices, Scalar::one());
        f
    }

    /// Builds a form from `(multi-index, coefficient)` terms.
    pub fn from_terms(ambient_dim: usize, degree: usize, terms: &[(&[usize], Scalar)]) -> Self {
        let mut f = Self::zero(ambient_dim, degree);
        for (idx, c) in terms {
            f.set(idx, c.clone());
        }
        f
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Scalar::is_zero)
    }

    fn position(&self, indices: &[usize]) -> usize {
        debug_assert!(indices.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(indices.iter().all(|&i| 1 <= i && i <= self.ambient_dim));
        rank(self.ambient_dim, indices)
    }

    pub fn coeff(&self, indices: &[usize]) -> &Scalar {
        &self.comps[self.position(indices)]
    }

    pub fn set(&mut self, indices: &[usize], value: Scalar) {
        assert!(
            indices.windows(2).all(|w| w[0] < w[1]),
            "multi-index must be strictly increasing"
        );
        let pos = self.position(indices);
        self.comps[pos] = value;
    }

    /// Components paired with their multi-indices.
    pub fn terms(&self) -> impl Iterator<Item = (Vec<usize>, &Scalar)> {
        multi_indices(self.ambient_dim, self.degree)
            .into_iter()
            .zip(self.comps.iter())
    }

    pub fn add(&self, other: &KForm) -> KForm {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        assert_eq!(self.degree, other.degree);
        KForm {
            ambient_dim: self.ambient_dim,
            degree: self.degree,
            comps: self
                .comps
                .iter()
                .zip(&other.comps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &KForm) -> KForm {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, s: &Scalar) -> KForm {
        KForm {
            ambient_dim: self.ambient_dim,
            degree: self.degree,
            comps: self.comps.iter().map(|c| c * s).collect(),
        }
    }

    /// Alternating evaluation on a list of basis indices (1-based, any order,
    /// repeats give zero).
    pub fn eval_basis(&self, indices: &[usize]) -> Scalar {
        assert_eq!(indices.len(), self.degree);
        let mut sorted: Vec<usize> = indices.to_vec();
        // sort with sign tracking (insertion sort; k <= 6)
        let mut sign = 1i64;
        for i in 1..sorted.len() {
            let mut j = i;
            while j > 0 && sorted[j - 1] > sorted[j] {
                sorted.swap(j - 1, j);
                sign = -sign;
                j -= 1;
            }
        }
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Scalar::zero();
        }
        let c = self.coeff(&sorted);
        if sign > 0 {
            c.clone()
        } else {
            -c
        }
    }

    /// Multilinear alternating evaluation on arbitrary vectors (determinant
    /// convention: a monomial evaluates as the minor determinant).
    pub fn eval(&self, vectors: &[&Vector]) -> Scalar {
        assert_eq!(vectors.len(), self.degree);
        let mut total = Scalar::zero();
        for (idx, c) in self.terms() {
            if c.is_zero() {
                continue;
            }
            let k = self.degree;
            let mut minor = Matrix::zero(k, k);
            for (r, &row_idx) in idx.iter().enumerate() {
                for (s, v) in vectors.iter().enumerate() {
                    minor[(r, s)] = v.0[row_idx - 1].clone();
                }
            }
            total += &(c * &minor.det());
        }
        total
    }

    /// Formal exterior product; zero on repeated indices, permutation sign on
    /// disjoint ones.
    pub fn wedge(&self, other: &KForm) -> Result<KForm, FormError> {
        if self.ambient_dim != other.ambient_dim {
            return Err(FormError::DimensionMismatch(
                other.ambient_dim,
                self.ambient_dim,
            ));
        }
        let k = self.degree + other.degree;
        if k > self.ambient_dim {
            return Err(FormError::DegreeOverflow(k, self.ambient_dim));
        }
        let mut out = KForm::zero(self.ambient_dim, k);
        for (ia, ca) in self.terms() {
            if ca.is_zero() {
                continue;
            }
            for (ib, cb) in other.terms() {
                if cb.is_zero() {
                    continue;
                }
                if ia.iter().any(|i| ib.contains(i)) {
                    continue;
                }
                // sign of sorting the concatenation (ia, ib): count inversions
                let mut inversions = 0usize;
                for &a in &ia {
                    for &b in &ib {
                        if b < a {
                            inversions += 1;
                        }
                    }
                }
                let mut merged: Vec<usize> = ia.iter().chain(ib.iter()).copied().collect();
                merged.sort_unstable();
                let term = ca * cb;
                let pos = out.position(&merged);
                if inversions.is_multiple_of(2) {
                    out.comps[pos] += &term;
                } else {
                    out.comps[pos] -= &term;
                }
            }
        }
        Ok(out)
    }

    /// Interior product `(i_X a)(Y1, ...) = a(X, Y1, ...)`.
    pub fn interior(&self, x: &Vector) -> Result<KForm, FormError> {
        if x.dim() != self.ambient_dim {
            return Err(FormError::DimensionMismatch(x.dim(), self.ambient_dim));
        }
        assert!(self.degree >= 1, "interior product needs degree >= 1");
        let mut out = KForm::zero(self.ambient_dim, self.degree - 1);
        let out_indices = multi_indices(self.ambient_dim, self.degree - 1);
        for (pos, idx) in out_indices.iter().enumerate() {
            let mut value = Scalar::zero();
            for m in 1..=self.ambient_dim {
                if x.0[m - 1].is_zero() {
                    continue;
                }
                let mut full = Vec::with_capacity(self.degree);
                full.push(m);
                full.extend_from_slice(idx);
                value += &(&x.0[m - 1] * &self.eval_basis(&full));
            }
            out.comps[pos] = value;
        }
        Ok(out)
    }

    /// Chevalley-Eilenberg differential with respect to a Lie algebra.
    pub fn exterior_derivative(&self, algebra: &LieAlgebra) -> Result<KForm, FormError> {
        if self.ambient_dim != algebra.dim() {
            return Err(FormError::DimensionMismatch(
                self.ambient_dim,
                algebra.dim(),
            ));
        }
        let k = self.degree;
        let mut out = KForm::zero(self.ambient_dim, k + 1);
        let out_indices = multi_indices(self.ambient_dim, k + 1);
        for (pos, idx) in out_indices.iter().enumerate() {
            // d a (e_{j0}, ..., e_{jk}) =
            //   sum_{r<s} (-1)^{r+s} a([e_{jr}, e_{js}], ..., omit r, s, ...)
            let mut value = Scalar::zero();
            for r in 0..idx.len() {
                for s in (r + 1)..idx.len() {
                    let bracket = algebra.bracket_basis(idx[r], idx[s]);
                    if bracket.is_zero() {
                        continue;
                    }
                    let rest: Vec<usize> = idx
                        .iter()
                        .enumerate()
                        .filter(|&(p, _)| p != r && p != s)
                        .map(|(_, &v)| v)
                        .collect();
                    let mut contribution = Scalar::zero();
                    for m in 1..=self.ambient_dim {
                        if bracket.0[m - 1].is_zero() {
                            continue;
                        }
                        let mut args = Vec::with_capacity(k);
                        args.push(m);
                        args.extend_from_slice(&rest);
                        contribution += &(&bracket.0[m - 1] * &self.eval_basis(&args));
                    }
                    if (r + s).is_multiple_of(2) {
                        value += &contribution;
                    } else {
                        value -= &contribution;
                    }
                }
            }
            out.comps[pos] = value;
        }
        Ok(out)
    }

    /// The antisymmetric matrix `w(e_i, e_j)` of a 2-form.
    pub fn two_form_matrix(&self) -> Matrix {
        assert_eq!(self.degree, 2, "expected a 2-form");
        let n = self.ambient_dim;
        let mut m = Matrix::zero(n, n);
        for (idx, c) in self.terms() {
            m[(idx[0] - 1, idx[1] - 1)] = c.clone();
            m[(idx[1] - 1, idx[0] - 1)] = -c;
        }
        m
    }

    /// Rank of the component matrix of a 2-form (always even).
    pub fn two_form_rank(&self) -> usize {
        self.two_form_matrix().rank()
    }
}

/// A complex 2-form `re + i im`, both parts real alternating 2-forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexTwoForm {
    pub re: KForm,
    pub im: KForm,
}

impl ComplexTwoForm {
    pub fn new(re: KForm, im: KForm) -> Self {
        assert_eq!(re.ambient_dim(), im.ambient_dim());
        assert_eq!(re.degree(), 2);
        assert_eq!(im.degree(), 2);
        ComplexTwoForm { re, im }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// `eps ^ conj(eps) = re^re + im^im` in the formal exterior algebra.
    pub fn wedge_with_conjugate(&self) -> Result<KForm, FormError> {
        Ok(self.re.wedge(&self.re)?.add(&self.im.wedge(&self.im)?))
    }
}

/// True iff `eta ^ (d eta)^n` has a nonzero top coefficient (`dim = 2n + 1`).
pub fn is_contact(algebra: &LieAlgebra, eta: &KForm) -> Result<bool, FormError> {
    let dim = algebra.dim();
    if dim.is_multiple_of(2) {
        return Err(FormError::EvenDimension(dim));
    }
    assert_eq!(eta.degree(), 1, "contact test takes a 1-form");
    let n = (dim - 1) / 2;
    let deta = eta.exterior_derivative(algebra)?;
    let mut top = eta.clone();
    for _ in 0..n {
        top = top.wedge(&deta)?;
    }
    Ok(!top.is_zero())
}

/// The unique `xi` with `eta(xi) = 1` and `d eta(xi, .) = 0`.
pub fn reeb_vector(algebra: &LieAlgebra, eta: &KForm) -> Result<Vector, FormError> {
    let dim = algebra.dim();
    assert_eq!(eta.degree(), 1);
    let deta = eta.exterior_derivative(algebra)?;
    let d = deta.two_form_matrix();
    // rows: d eta(., e_j) = 0 for all j, then eta(.) = 1
    let mut system = Matrix::zero(dim + 1, dim);
    let mut rhs = Vector::zero(dim + 1);
    for j in 0..dim {
        for i in 0..dim {
            system[(j, i)] = d[(i, j)].clone();
        }
    }
    for i in 0..dim {
        system[(dim, i)] = eta.coeff(&[i + 1]).clone();
    }
    rhs.0[dim] = Scalar::one();
    system.solve_unique(&rhs).map_err(|_| FormError::NotContact)
}
