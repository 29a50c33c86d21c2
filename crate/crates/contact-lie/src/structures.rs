//! Almost contact metric and Kahler structures with exact classification.
//!
//! An [`AcmStructure`] is the validated quadruple `(phi, xi, eta, g)` on an
//! odd-dimensional metric Lie algebra; a [`KahlerStructure`] the validated
//! pair `(J, h)` on an even-dimensional one. Every predicate in
//! [`classify`] is an exact tensor equality, never a tolerance check. Lie
//! derivatives along `xi` are the algebraic left-invariant expressions; the
//! sign convention is fixed so that `L_xi g = 0` exactly when `ad_xi` is
//! skew-symmetric with respect to `g`.

use crate::forms::{ComplexTwoForm, FormError, KForm};
use crate::lie::Subspace;
use crate::linalg::{Matrix, Vector};
use crate::riemann::{MetricError, MetricLieAlgebra};
use crate::scalar::Scalar;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StructureError {
    #[error("structure axiom violated: {0}")]
    AxiomViolated(String),
    #[error("dimension must be odd, got {0}")]
    EvenDimension(usize),
    #[error("dimension must be even, got {0}")]
    OddDimension(usize),
    #[error("structure is not anti-quasi-Sasakian")]
    NotAqs,
    #[error("structure is not Sasakian")]
    NotSasakian,
    #[error("structure is not transversely Kahler")]
    NotTransverselyKahler,
    #[error("homothetic deformation requires lambda != 0")]
    ZeroLambda,
    #[error("2-form is degenerate")]
    Degenerate,
    #[error(transparent)]
    Metric(#[from] MetricError),
    #[error(transparent)]
    Form(#[from] FormError),
}

/// The validated almost contact metric quadruple `(phi, xi, eta, g)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AcmStructure {
    m: MetricLieAlgebra,
    phi: Matrix,
    xi: Vector,
    eta: KForm,
}

impl AcmStructure {
    /// Validates all structure axioms exactly:
    /// `phi^2 = -I + eta (x) xi`, `eta(xi) = 1`, `phi xi = 0`,
    /// `eta o phi = 0`, `g(phi X, phi Y) = g(X, Y) - eta(X) eta(Y)`,
    /// `eta = g(xi, .)`.
    pub fn new(
        m: MetricLieAlgebra,
        phi: Matrix,
        xi: Vector,
        eta: KForm,
    ) -> Result<Self, StructureError> {
        let n = m.dim();
        if n.is_multiple_of(2) {
            return Err(StructureError::EvenDimension(n));
        }
        let fail = |what: &str| Err(StructureError::AxiomViolated(what.to_string()));
        if phi.rows() != n || phi.cols() != n || xi.dim() != n {
            return fail("dimension mismatch");
        }
        if eta.ambient_dim() != n || eta.degree() != 1 {
            return fail("eta must be a 1-form on the algebra");
        }
        let eta_vec = |j: usize| eta.coeff(&[j + 1]).clone();
        let pairing = (0..n).fold(Scalar::zero(), |acc, j| acc + &eta_vec(j) * &xi.0[j]);
        if pairing != Scalar::one() {
            return fail("eta(xi) = 1");
        }
        if !phi.apply(&xi).is_zero() {
            return fail("phi(xi) = 0");
        }
        for j in 0..n {
            let col = phi.column(j);
            let v = (0..n).fold(Scalar::zero(), |acc, i| acc + &eta_vec(i) * &col.0[i]);
            if !v.is_zero() {
                return fail("eta o phi = 0");
            }
        }
        let phi2 = &phi * &phi;
        for i in 0..n {
            for j in 0..n {
                let mut expect = &eta_vec(j) * &xi.0[i];
                if i == j {
                    expect = expect - Scalar::one();
                }
                if phi2[(i, j)] != expect {
                    return fail(&format!("phi^2 = -I + eta (x) xi at ({},{})", i + 1, j + 1));
                }
            }
        }
        let g_xi = m.metric().apply(&xi);
        for j in 0..n {
            if g_xi.0[j] != eta_vec(j) {
                return fail(&format!("eta = g(xi, .) at component {}", j + 1));
            }
        }
        let compat = &(&phi.transpose() * m.metric()) * &phi;
        for i in 0..n {
            for j in 0..n {
                let expect = &m.metric()[(i, j)] - &(&eta_vec(i) * &eta_vec(j));
                if compat[(i, j)] != expect {
                    return fail(&format!(
                        "g(phi X, phi Y) = g(X,Y) - eta(X) eta(Y) at ({},{})",
                        i + 1,
                        j + 1
                    ));
                }
            }
        }
        Ok(AcmStructure { m, phi, xi, eta })
    }

    /// The standard adapted structure: `xi` is the last basis vector, `eta`
    /// its dual, `phi` the block extension of `j_horizontal` by zero.
    pub fn adapted(m: MetricLieAlgebra, j_horizontal: &Matrix) -> Result<Self, StructureError> {
        let n = m.dim();
        if n.is_multiple_of(2) {
            return Err(StructureError::EvenDimension(n));
        }
        let mut phi = Matrix::zero(n, n);
        for i in 0..n - 1 {
            for j in 0..n - 1 {
                phi[(i, j)] = j_horizontal[(i, j)].clone();
            }
        }
        let xi = Vector::basis(n, n - 1);
        let eta = KForm::monomial(n, &[n]);
        Self::new(m, phi, xi, eta)
    }

    pub fn metric_algebra(&self) -> &MetricLieAlgebra {
        &self.m
    }

    pub fn dim(&self) -> usize {
        self.m.dim()
    }

    pub fn phi(&self) -> &Matrix {
        &self.phi
    }

    pub fn xi(&self) -> &Vector {
        &self.xi
    }

    pub fn eta(&self) -> &KForm {
        &self.eta
    }

    pub fn d_eta(&self) -> KForm {
        self.eta
            .exterior_derivative(self.m.algebra())
            .expect("eta lives on the algebra")
    }

    /// `Phi(X, Y) = g(X, phi Y)`.
    pub fn fundamental_form(&self) -> KForm {
        let n = self.dim();
        let g_phi = self.m.metric() * &self.phi;
        let mut f = KForm::zero(n, 2);
        for i in 1..=n {
            for j in (i + 1)..=n {
                let v = g_phi[(i - 1, j - 1)].clone();
                if !v.is_zero() {
                    f.set(&[i, j], v);
                }
            }
        }
        f
    }

    /// `N_phi(e_i, e_j)` on all basis pairs: the Nijenhuis tensor of `phi`
    /// corrected by `d eta (x) xi`.
    pub fn nijenhuis(&self) -> NijenhuisTensor {
        let n = self.dim();
        let deta = self.d_eta();
        let alg = self.m.algebra();
        let mut values = vec![Vector::zero(n); n * n];
        for i in 0..n {
            for j in (i + 1)..n {
                let ei = Vector::basis(n, i);
                let ej = Vector::basis(n, j);
                let phi_i = self.phi.column(i);
                let phi_j = self.phi.column(j);
                let mut v = alg.bracket(&phi_i, &phi_j);
                v = &v + &self.phi.apply(&self.phi.apply(&alg.bracket(&ei, &ej)));
                v = &v - &self.phi.apply(&alg.bracket(&ei, &phi_j));
                v = &v - &self.phi.apply(&alg.bracket(&phi_i, &ej));
                v.add_scaled(&self.xi, &deta.eval_basis(&[i + 1, j + 1]));
                values[j * n + i] = -&v;
                values[i * n + j] = v;
            }
        }
        NijenhuisTensor { dim: n, values }
    }

    /// `L_xi phi = ad_xi o phi - phi o ad_xi`.
    pub fn lie_derivative_phi(&self) -> Matrix {
        let ad = self.m.algebra().ad(&self.xi);
        &(&ad * &self.phi) - &(&self.phi * &ad)
    }

    /// `(L_xi g)(X, Y) = -g([xi, X], Y) - g(X, [xi, Y])`.
    pub fn lie_derivative_g(&self) -> Matrix {
        let ad = self.m.algebra().ad(&self.xi);
        let g = self.m.metric();
        -&(&(&ad.transpose() * g) + &(g * &ad))
    }

    /// `(L_xi eta)(X) = -eta([xi, X])`, as a 1-form.
    pub fn lie_derivative_eta(&self) -> KForm {
        let n = self.dim();
        let ad = self.m.algebra().ad(&self.xi);
        let mut out = KForm::zero(n, 1);
        for j in 0..n {
            let col = ad.column(j);
            let mut v = Scalar::zero();
            for i in 0..n {
                v += &(self.eta.coeff(&[i + 1]) * &col.0[i]);
            }
            if !v.is_zero() {
                out.set(&[j + 1], -v);
            }
        }
        out
    }

    /// `(L_xi d eta)(X, Y) = -d eta([xi, X], Y) - d eta(X, [xi, Y])`.
    pub fn lie_derivative_d_eta(&self) -> KForm {
        let n = self.dim();
        let ad = self.m.algebra().ad(&self.xi);
        let d = self.d_eta().two_form_matrix();
        let lie = -&(&(&ad.transpose() * &d) + &(&d * &ad));
        let mut out = KForm::zero(n, 2);
        for i in 1..=n {
            for j in (i + 1)..=n {
                let v = lie[(i - 1, j - 1)].clone();
                if !v.is_zero() {
                    out.set(&[i, j], v);
                }
            }
        }
        out
    }

    /// Basis of the horizontal subspace `ker eta`.
    pub fn horizontal_basis(&self) -> Vec<Vector> {
        let n = self.dim();
        let mut row = Matrix::zero(1, n);
        for j in 0..n {
            row[(0, j)] = self.eta.coeff(&[j + 1]).clone();
        }
        row.kernel()
    }
}

/// `N_phi` on basis pairs, antisymmetric in its two arguments.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NijenhuisTensor {
    dim: usize,
    values: Vec<Vector>,
}

impl NijenhuisTensor {
    /// `N_phi(e_i, e_j)` with 0-based indices.
    pub fn get(&self, i: usize, j: usize) -> &Vector {
        &self.values[i * self.dim + j]
    }

    /// Bilinear evaluation.
    pub fn eval(&self, x: &Vector, y: &Vector) -> Vector {
        let mut out = Vector::zero(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                let c = &x.0[i] * &y.0[j];
                if !c.is_zero() {
                    out.add_scaled(self.get(i, j), &c);
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Vector::is_zero)
    }
}

/// Classification flags of an almost contact metric structure. Flags are
/// computed independently from exact tensor equalities; the implication
/// lattice (Sasakian => alpha-Sasakian => quasi-Sasakian => transversely
/// Kahler, cokahler => normal, ...) is a theorem, not an input.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    /// `eta ^ (d eta)^n != 0` (maximal rank).
    pub contact: bool,
    /// `N_phi = 0`.
    pub normal: bool,
    /// `d eta = 2 Phi` and `L_xi phi = 0`.
    pub k_contact: bool,
    /// `N_phi = 0`, `d eta = 0`, `d Phi = 0`.
    pub cokahler: bool,
    /// Normal with `d eta = 2 Phi`.
    pub sasakian: bool,
    /// Normal with `d eta = 2 alpha Phi`, `alpha != 0`.
    pub alpha_sasakian: bool,
    /// The factor in `d eta = 2 alpha Phi` when it exists and is nonzero.
    pub alpha: Option<Scalar>,
    /// Normal with `d Phi = 0`.
    pub quasi_sasakian: bool,
    /// `d Phi = 0` and `N_phi = 2 d eta (x) xi`.
    pub anti_quasi_sasakian: bool,
    /// `d Phi = 0`, `N_phi(xi, .) = 0`, horizontal `N_phi` values vertical.
    pub transversely_kahler: bool,
    /// Set only by [`verify_double_aqs`]; a single structure cannot decide it.
    pub double_aqs_member: bool,
    /// `Ric = lambda g + mu eta (x) eta` holds exactly.
    pub eta_einstein: bool,
    /// `(lambda, mu)` of the eta-Einstein equation when it holds.
    pub eta_einstein_lambda_mu: Option<(Scalar, Scalar)>,
}

/// Computes every flag of the report from exact tensor equalities.
pub fn classify(s: &AcmStructure) -> ClassificationReport {
    let alg = s.metric_algebra().algebra();
    let n = s.dim();
    let deta = s.d_eta();
    let phi_form = s.fundamental_form();
    let d_phi = phi_form
        .exterior_derivative(alg)
        .expect("fundamental form lives on the algebra");
    let nij = s.nijenhuis();

    let contact = crate::forms::is_contact(alg, s.eta()).expect("odd dimension");
    let normal = nij.is_zero();
    let d_phi_zero = d_phi.is_zero();
    let deta_zero = deta.is_zero();

    // alpha with d eta = 2 alpha Phi, consistent across all components
    let alpha = extract_ratio(&deta, &phi_form)
        .map(|r| r * Scalar::new(1, 2))
        .filter(|a| !a.is_zero());

    let lie_phi_zero = s.lie_derivative_phi().is_zero();

    // anti-normal condition: N_phi = 2 d eta (x) xi
    let mut anti_normal = true;
    'outer: for i in 0..n {
        for j in 0..n {
            let mut expect = Vector::zero(n);
            expect.add_scaled(
                s.xi(),
                &(&Scalar::from_int(2) * &deta.eval_basis(&[i + 1, j + 1])),
            );
            if &expect != nij.get(i, j) {
                anti_normal = false;
                break 'outer;
            }
        }
    }

    // transversely Kahler: d Phi = 0, N(xi, .) = 0, horizontal N values
    // proportional to xi
    let mut tk = d_phi_zero;
    if tk {
        for j in 0..n {
            if !nij.eval(s.xi(), &Vector::basis(n, j)).is_zero() {
                tk = false;
                break;
            }
        }
    }
    if tk {
        let horiz = s.horizontal_basis();
        'tk: for a in 0..horiz.len() {
            for b in (a + 1)..horiz.len() {
                let v = nij.eval(&horiz[a], &horiz[b]);
                // must be g-orthogonal to the horizontal space, i.e. in R xi
                let eta_v = s.eta().eval(&[&v]);
                let mut vertical = Vector::zero(n);
                vertical.add_scaled(s.xi(), &eta_v);
                if v != vertical {
                    tk = false;
                    break 'tk;
                }
            }
        }
    }

    let sasakian = normal && alpha.as_ref() == Some(&Scalar::one());
    let alpha_sasakian = normal && alpha.is_some();
    let quasi_sasakian = normal && d_phi_zero;
    let cokahler = normal && deta_zero && d_phi_zero;
    let k_contact = lie_phi_zero && alpha.as_ref() == Some(&Scalar::one());

    let fit = crate::extension::fit_eta_einstein(s);
    let eta_einstein = fit.exact;
    let eta_einstein_lambda_mu = fit.exact.then_some((fit.lambda, fit.mu));

    ClassificationReport {
        contact,
        normal,
        k_contact,
        cokahler,
        sasakian,
        alpha_sasakian,
        alpha,
        quasi_sasakian,
        anti_quasi_sasakian: d_phi_zero && anti_normal,
        transversely_kahler: tk,
        double_aqs_member: false,
        eta_einstein,
        eta_einstein_lambda_mu,
    }
}

/// Solves `a = r b` componentwise; `None` when inconsistent or `b = 0`.
fn extract_ratio(a: &KForm, b: &KForm) -> Option<Scalar> {
    let mut ratio: Option<Scalar> = None;
    for ((_, ca), (_, cb)) in a.terms().zip(b.terms()) {
        if cb.is_zero() {
            if !ca.is_zero() {
                return None;
            }
            continue;
        }
        let r = ca / cb;
        match &ratio {
            Some(prev) if prev != &r => return None,
            _ => ratio = Some(r),
        }
    }
    ratio
}

/// The aqS operators `psi` (with `2 g(X, psi Y) = d eta(X, Y)`) and
/// `A = phi o psi`, plus the square factor `lambda^2` in
/// `psi^2 = lambda^2 (-I + eta (x) xi)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AqsOperators {
    pub psi: Matrix,
    pub a: Matrix,
    pub lambda_square: Scalar,
}

/// Requires an anti-quasi-Sasakian, non-cokahler structure (so that
/// `lambda^2 != 0` in dimension five).
pub fn aqs_operators(s: &AcmStructure) -> Result<AqsOperators, StructureError> {
    let report = classify(s);
    if !report.anti_quasi_sasakian || report.cokahler {
        return Err(StructureError::NotAqs);
    }
    let n = s.dim();
    let d = s.d_eta().two_form_matrix();
    let psi = s.metric_algebra().metric_inv().scale(&Scalar::new(1, 2));
    let psi = &psi * &d;
    let a = s.phi() * &psi;

    // psi^2 = lambda^2 (-I + eta (x) xi); read lambda^2 off a nonzero entry
    let psi2 = &psi * &psi;
    let eta_vec: Vec<Scalar> = (1..=n).map(|j| s.eta().coeff(&[j]).clone()).collect();
    let mut reference: Option<Scalar> = None;
    let mut consistent = true;
    for i in 0..n {
        for j in 0..n {
            let mut basis_val = &eta_vec[j] * &s.xi().0[i];
            if i == j {
                basis_val = basis_val - Scalar::one();
            }
            if basis_val.is_zero() {
                if !psi2[(i, j)].is_zero() {
                    consistent = false;
                }
                continue;
            }
            let r = &psi2[(i, j)] / &basis_val;
            match &reference {
                Some(prev) if prev != &r => consistent = false,
                _ => reference = Some(r),
            }
        }
    }
    let lambda_square = reference.unwrap_or_else(Scalar::zero);
    if !consistent || lambda_square.is_zero() {
        return Err(StructureError::NotAqs);
    }
    Ok(AqsOperators {
        psi,
        a,
        lambda_square,
    })
}

/// The homothetic deformation `phi' = phi, xi' = xi/lam, eta' = lam eta,
/// g' = lam^2 g` on the same Lie algebra.
///
/// With `rescale_basis` set, the result is additionally re-expressed in the
/// rescaled basis `f_i = e_i / lam`: the tensor components then coincide with
/// the original ones and the deformation acts purely on the bracket table,
/// whose values against the original generators pick up a `1/lam^2` factor.
pub fn homothetic_deform(
    s: &AcmStructure,
    lam: &Scalar,
    rescale_basis: bool,
) -> Result<AcmStructure, StructureError> {
    if lam.is_zero() {
        return Err(StructureError::ZeroLambda);
    }
    let n = s.dim();
    if rescale_basis {
        let p = Matrix::identity(n).scale(&lam.recip());
        let algebra = s
            .metric_algebra()
            .algebra()
            .change_basis(&p)
            .expect("scaling is invertible");
        let m = MetricLieAlgebra::new(algebra, s.metric_algebra().metric().clone())?;
        return AcmStructure::new(m, s.phi().clone(), s.xi().clone(), s.eta().clone());
    }
    let g2 = s.metric_algebra().metric().scale(&lam.square());
    let m = MetricLieAlgebra::new(s.metric_algebra().algebra().clone(), g2)?;
    AcmStructure::new(
        m,
        s.phi().clone(),
        s.xi().scale(&lam.recip()),
        s.eta().scale(lam),
    )
}

/// Splits `g = ker ad_xi (+) Im ad_xi` for a transversely Kahler structure;
/// both pieces are phi-invariant and mutually g-orthogonal.
pub fn decompose_ad_xi(s: &AcmStructure) -> Result<(Subspace, Subspace), StructureError> {
    if !classify(s).transversely_kahler {
        return Err(StructureError::NotTransverselyKahler);
    }
    let n = s.dim();
    let ad = s.metric_algebra().algebra().ad(s.xi());
    let kernel = Subspace::from_spanning(&ad.kernel(), n);
    let columns: Vec<Vector> = (0..n).map(|j| ad.column(j)).collect();
    let image = Subspace::from_spanning(&columns, n);
    Ok((kernel, image))
}

/// Checks the contact Calabi-Yau conditions for a Sasakian structure in
/// dimension five: `eps` nonzero and basic (`i_xi eps = 0`, `L_xi eps = 0`),
/// `d eps = 0`, and `eps ^ conj(eps) = (d eta)^2 / 2`.
pub fn check_contact_calabi_yau(
    s: &AcmStructure,
    eps: &ComplexTwoForm,
) -> Result<bool, StructureError> {
    if s.dim() != 5 || !classify(s).sasakian {
        return Err(StructureError::NotSasakian);
    }
    if eps.is_zero() {
        return Ok(false);
    }
    let alg = s.metric_algebra().algebra();
    for part in [&eps.re, &eps.im] {
        if !part.interior(s.xi())?.is_zero() {
            return Ok(false);
        }
        if !part.exterior_derivative(alg)?.is_zero() {
            return Ok(false);
        }
        // algebraic L_xi of a 2-form, independent of the Cartan identity
        let ad = alg.ad(s.xi());
        let w = part.two_form_matrix();
        let lie = &(&ad.transpose() * &w) + &(&w * &ad);
        if !lie.is_zero() {
            return Ok(false);
        }
    }
    let deta = s.d_eta();
    let rhs = deta.wedge(&deta)?.scale(&Scalar::new(1, 2));
    let lhs = eps.wedge_with_conjugate()?;
    Ok(lhs == rhs)
}

/// The validated Kahler pair `(J, h)` on an even-dimensional algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KahlerStructure {
    m: MetricLieAlgebra,
    j: Matrix,
}

/// Outcome of [`validate_kahler`]; `defect` names the first failed identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KahlerCheck {
    pub ok: bool,
    pub defect: Option<String>,
}

/// Checks `J^2 = -I`, `N_J = 0`, `h(JX, JY) = h(X, Y)` and `d Omega = 0` in
/// that order, reporting the first failure.
pub fn validate_kahler(m: &MetricLieAlgebra, j: &Matrix) -> KahlerCheck {
    let n = m.dim();
    let fail = |what: &str| KahlerCheck {
        ok: false,
        defect: Some(what.to_string()),
    };
    if !n.is_multiple_of(2) {
        return fail("dimension must be even");
    }
    if j.rows() != n || j.cols() != n {
        return fail("J dimension mismatch");
    }
    let j2 = j * j;
    if j2 != -&Matrix::identity(n) {
        return fail("J squared");
    }
    // N_J(X, Y) = [JX, JY] - [X, Y] - J[JX, Y] - J[X, JY]
    let alg = m.algebra();
    for a in 0..n {
        for b in (a + 1)..n {
            let ea = Vector::basis(n, a);
            let eb = Vector::basis(n, b);
            let ja = j.column(a);
            let jb = j.column(b);
            let mut v = alg.bracket(&ja, &jb);
            v = &v - &alg.bracket(&ea, &eb);
            v = &v - &j.apply(&alg.bracket(&ja, &eb));
            v = &v - &j.apply(&alg.bracket(&ea, &jb));
            if !v.is_zero() {
                return fail("Nijenhuis N_J");
            }
        }
    }
    let compat = &(&j.transpose() * m.metric()) * j;
    if &compat != m.metric() {
        return fail("metric compatibility");
    }
    let omega = kahler_form(m, j);
    let d_omega = omega.exterior_derivative(alg).expect("same algebra");
    if !d_omega.is_zero() {
        return fail("d Omega");
    }
    KahlerCheck {
        ok: true,
        defect: None,
    }
}

/// `Omega(X, Y) = h(X, JY)` as a 2-form.
pub fn kahler_form(m: &MetricLieAlgebra, j: &Matrix) -> KForm {
    let n = m.dim();
    let hj = m.metric() * j;
    let mut f = KForm::zero(n, 2);
    for i in 1..=n {
        for jj in (i + 1)..=n {
            let v = hj[(i - 1, jj - 1)].clone();
            if !v.is_zero() {
                f.set(&[i, jj], v);
            }
        }
    }
    f
}

impl KahlerStructure {
    pub fn new(m: MetricLieAlgebra, j: Matrix) -> Result<Self, StructureError> {
        let check = validate_kahler(&m, &j);
        if !check.ok {
            return Err(StructureError::AxiomViolated(
                check.defect.unwrap_or_default(),
            ));
        }
        Ok(KahlerStructure { m, j })
    }

    /// Builds the structure from `(J, Omega)` data, deriving the metric
    /// `h(X, Y) = -Omega(X, JY)` so that `Omega(X, Y) = h(X, JY)` holds.
    pub fn from_complex_and_form(
        algebra: crate::lie::LieAlgebra,
        j: Matrix,
        omega: &KForm,
    ) -> Result<Self, StructureError> {
        let w = omega.two_form_matrix();
        let h = -&(&w * &j);
        let m = MetricLieAlgebra::new(algebra, h)?;
        Self::new(m, j)
    }

    pub fn metric_algebra(&self) -> &MetricLieAlgebra {
        &self.m
    }

    pub fn j(&self) -> &Matrix {
        &self.j
    }

    pub fn dim(&self) -> usize {
        self.m.dim()
    }

    /// The Kahler form `Omega(X, Y) = h(X, JY)`.
    pub fn omega(&self) -> KForm {
        kahler_form(&self.m, &self.j)
    }
}

/// How a nondegenerate 2-form transforms under `J`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum OmegaInvarianceType {
    JInvariant,
    JAntiInvariant,
    Mixed,
}

/// Decides `w(JX, JY) = w(X, Y)` versus `w(JX, JY) = -w(X, Y)` on all basis
/// pairs; errors when `w` is degenerate.
pub fn omega_invariance_type(
    k: &KahlerStructure,
    w: &KForm,
) -> Result<OmegaInvarianceType, StructureError> {
    let n = k.dim();
    if w.two_form_rank() < n {
        return Err(StructureError::Degenerate);
    }
    let wm = w.two_form_matrix();
    let pullback = &(&k.j.transpose() * &wm) * &k.j;
    if pullback == wm {
        Ok(OmegaInvarianceType::JInvariant)
    } else if pullback == -&wm {
        Ok(OmegaInvarianceType::JAntiInvariant)
    } else {
        Ok(OmegaInvarianceType::Mixed)
    }
}

/// Runs [`classify`] on a candidate double aqS-Sasakian triple and checks
/// `phi_i phi_j = phi_k = -phi_j phi_i` for even permutations; on success the
/// reports come back with `double_aqs_member` set.
pub fn verify_double_aqs(
    s1: &AcmStructure,
    s2: &AcmStructure,
    s3: &AcmStructure,
) -> Option<[ClassificationReport; 3]> {
    let quaternionic = |a: &AcmStructure, b: &AcmStructure, c: &AcmStructure| {
        let ab = a.phi() * b.phi();
        let ba = b.phi() * a.phi();
        ab == *c.phi() && ba == -&ab
    };
    if !quaternionic(s1, s2, s3) || !quaternionic(s2, s3, s1) || !quaternionic(s3, s1, s2) {
        return None;
    }
    let mut r1 = classify(s1);
    let mut r2 = classify(s2);
    let mut r3 = classify(s3);
    let twice = s3.fundamental_form().scale(&Scalar::from_int(2));
    if !(r1.anti_quasi_sasakian && r2.anti_quasi_sasakian && r3.sasakian && s3.d_eta() == twice) {
        return None;
    }
    r1.double_aqs_member = true;
    r2.double_aqs_member = true;
    r3.double_aqs_member = true;
    Some([r1, r2, r3])
}
