//! Lie algebras as structure-constant tables.
//!
//! A bracket table stores `c^k_{ij}` for `i < j` only; antisymmetry is
//! structural. [`LieAlgebra`] is a table whose Jacobi defect has been checked
//! to vanish. Algebraic invariants (center, derived series, unimodularity,
//! Killing signature) are all computed exactly.

use crate::linalg::{LinalgError, Matrix, Vector};
use crate::scalar::Scalar;
use std::collections::BTreeMap;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LieError {
    #[error("jacobi identity fails on basis triple ({0},{1},{2}), defect {3}")]
    JacobiFailure(usize, usize, usize, Scalar),
    #[error("bracket index out of range: {0}")]
    IndexOutOfRange(usize),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Raw antisymmetric structure constants; not yet known to satisfy Jacobi.
///
/// Indices are 1-based to match the usual `e_1, ..., e_n` notation; only
/// `i < j` is stored and `[e_j, e_i] = -[e_i, e_j]` is implicit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BracketTable {
    dim: usize,
    // (i, j) with i < j, 1-based -> bracket vector [e_i, e_j]
    entries: BTreeMap<(usize, usize), Vector>,
}

impl BracketTable {
    pub fn new(dim: usize) -> Self {
        BracketTable {
            dim,
            entries: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Sets `[e_i, e_j] = sum_k coeffs[k] e_k`; pairs given with `j < i` are
    /// stored negated at `(j, i)`.
    pub fn set(&mut self, i: usize, j: usize, coeffs: Vector) -> Result<(), LieError> {
        if i == 0 || j == 0 || i > self.dim || j > self.dim || i == j {
            return Err(LieError::IndexOutOfRange(i.max(j)));
        }
        if coeffs.dim() != self.dim {
            return Err(LieError::IndexOutOfRange(coeffs.dim()));
        }
        if i < j {
            self.entries.insert((i, j), coeffs);
        } else {
            self.entries.insert((j, i), -&coeffs);
        }
        Ok(())
    }

    /// Convenience for integer tables: terms are `(k, coefficient)` pairs.
    pub fn set_terms(&mut self, i: usize, j: usize, terms: &[(usize, Scalar)]) {
        let mut v = Vector::zero(self.dim);
        for (k, c) in terms {
            v.0[*k - 1] = c.clone();
        }
        self.set(i, j, v).expect("indices in range");
    }

    /// Builds a table from structure equations in the `(de^1, ..., de^n)`
    /// shorthand: each term `(k, i, j, coef)` contributes `coef e^{ij}` to
    /// `de^k`. Since `da(X, Y) = -a([X, Y])`, this sets `c^k_{ij} = -coef`.
    pub fn from_structure_equations(dim: usize, terms: &[(usize, usize, usize, Scalar)]) -> Self {
        let mut coeffs: BTreeMap<(usize, usize), Vector> = BTreeMap::new();
        for (k, i, j, coef) in terms {
            assert!(i < j, "structure equation indices must satisfy i < j");
            let v = coeffs
                .entry((*i, *j))
                .or_insert_with(|| Vector::zero(dim));
            v.0[*k - 1] = &v.0[*k - 1] - coef;
        }
        let mut table = BracketTable::new(dim);
        for ((i, j), v) in coeffs {
            table.set(i, j, v).expect("indices in range");
        }
        table
    }

    /// `[e_i, e_j]` for any ordering of `i, j` (1-based).
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vector {
        if i == j {
            return Vector::zero(self.dim);
        }
        let (a, b, flip) = if i < j { (i, j, false) } else { (j, i, true) };
        match self.entries.get(&(a, b)) {
            Some(v) if flip => -v,
            Some(v) => v.clone(),
            None => Vector::zero(self.dim),
        }
    }

    /// Bilinear extension of the bracket.
    pub fn bracket(&self, x: &Vector, y: &Vector) -> Vector {
        let mut out = Vector::zero(self.dim);
        for ((i, j), v) in &self.entries {
            // x^i y^j - x^j y^i times [e_i, e_j]
            let c = &(&x.0[i - 1] * &y.0[j - 1]) - &(&x.0[j - 1] * &y.0[i - 1]);
            if !c.is_zero() {
                out.add_scaled(v, &c);
            }
        }
        out
    }

    /// Maximum absolute component of the Jacobi cyclic sum over basis triples;
    /// zero exactly when the table defines a Lie algebra.
    pub fn jacobi_defect(&self) -> Scalar {
        self.worst_jacobi_triple()
            .map_or_else(Scalar::zero, |(_, _, _, d)| d)
    }

    fn worst_jacobi_triple(&self) -> Option<(usize, usize, usize, Scalar)> {
        let mut worst: Option<(usize, usize, usize, Scalar)> = None;
        for i in 1..=self.dim {
            for j in (i + 1)..=self.dim {
                for k in (j + 1)..=self.dim {
                    let ei = Vector::basis(self.dim, i - 1);
                    let ej = Vector::basis(self.dim, j - 1);
                    let ek = Vector::basis(self.dim, k - 1);
                    let mut sum = self.bracket(&self.bracket(&ei, &ej), &ek);
                    sum = &sum + &self.bracket(&self.bracket(&ej, &ek), &ei);
                    sum = &sum + &self.bracket(&self.bracket(&ek, &ei), &ej);
                    let d = sum
                        .0
                        .iter()
                        .map(Scalar::abs)
                        .max()
                        .unwrap_or_else(Scalar::zero);
                    if worst.as_ref().map_or(!d.is_zero(), |(_, _, _, w)| &d > w) {
                        worst = Some((i, j, k, d));
                    }
                }
            }
        }
        worst
    }
}

/// A validated Lie algebra: a bracket table with vanishing Jacobi defect.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    table: BracketTable,
}

impl LieAlgebra {
    pub fn new(table: BracketTable) -> Result<Self, LieError> {
        if let Some((i, j, k, d)) = table.worst_jacobi_triple() {
            return Err(LieError::JacobiFailure(i, j, k, d));
        }
        Ok(LieAlgebra { table })
    }

    pub fn abelian(dim: usize) -> Self {
        LieAlgebra {
            table: BracketTable::new(dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.table.dim
    }

    pub fn table(&self) -> &BracketTable {
        &self.table
    }

    pub fn bracket(&self, x: &Vector, y: &Vector) -> Vector {
        self.table.bracket(x, y)
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> Vector {
        self.table.bracket_basis(i, j)
    }

    /// Matrix of `ad_X = [X, .]` in the defining basis.
    pub fn ad(&self, x: &Vector) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zero(n, n);
        for j in 0..n {
            let col = self.bracket(x, &Vector::basis(n, j));
            for i in 0..n {
                m[(i, j)] = col.0[i].clone();
            }
        }
        m
    }

    /// Exact basis of the center `{X : [X, Y] = 0 for all Y}`.
    pub fn center(&self) -> Subspace {
        let n = self.dim();
        // stack the maps X -> component k of [X, e_j] into an n^2 x n matrix
        let mut m = Matrix::zero(n * n, n);
        for i in 0..n {
            let ad_ei = self.ad(&Vector::basis(n, i));
            for j in 0..n {
                for k in 0..n {
                    m[(j * n + k, i)] = ad_ei[(k, j)].clone();
                }
            }
        }
        Subspace::from_spanning(&m.kernel(), n)
    }

    /// Span of all basis brackets, i.e. the commutator ideal.
    pub fn derived_algebra(&self) -> Subspace {
        let n = self.dim();
        let mut spanning = Vec::new();
        for i in 1..=n {
            for j in (i + 1)..=n {
                spanning.push(self.bracket_basis(i, j));
            }
        }
        Subspace::from_spanning(&spanning, n)
    }

    /// `[S, S]` for a subspace `S`, as a subspace.
    fn derived_of(&self, s: &Subspace) -> Subspace {
        let mut spanning = Vec::new();
        for a in 0..s.basis.len() {
            for b in (a + 1)..s.basis.len() {
                spanning.push(self.bracket(&s.basis[a], &s.basis[b]));
            }
        }
        Subspace::from_spanning(&spanning, self.dim())
    }

    /// True iff `trace(ad_X) = 0` for every basis vector `X`.
    pub fn is_unimodular(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            let ad = self.ad(&Vector::basis(n, i));
            let mut tr = Scalar::zero();
            for k in 0..n {
                tr += &ad[(k, k)];
            }
            tr.is_zero()
        })
    }

    /// Killing form `B(X, Y) = trace(ad_X ad_Y)` on the defining basis.
    pub fn killing_form(&self) -> Matrix {
        let n = self.dim();
        let ads: Vec<Matrix> = (0..n).map(|i| self.ad(&Vector::basis(n, i))).collect();
        let mut b = Matrix::zero(n, n);
        for i in 0..n {
            for j in i..n {
                let prod = &ads[i] * &ads[j];
                let mut tr = Scalar::zero();
                for k in 0..n {
                    tr += &prod[(k, k)];
                }
                b[(i, j)] = tr.clone();
                b[(j, i)] = tr;
            }
        }
        b
    }

    /// Structure constants of the same bracket in the basis whose vectors are
    /// the columns of `p` (expressed in the old basis).
    pub fn change_basis(&self, p: &Matrix) -> Result<LieAlgebra, LieError> {
        let n = self.dim();
        assert_eq!((p.rows(), p.cols()), (n, n), "basis matrix must be n x n");
        let p_inv = p.invert()?;
        let mut table = BracketTable::new(n);
        for a in 1..=n {
            for b in (a + 1)..=n {
                let fa = p.column(a - 1);
                let fb = p.column(b - 1);
                let w = p_inv.apply(&self.bracket(&fa, &fb));
                if !w.is_zero() {
                    table.set(a, b, w)?;
                }
            }
        }
        // the bracket is unchanged, only re-coordinatized; Jacobi must survive
        LieAlgebra::new(table)
    }

    /// A sound-but-incomplete isomorphism distinguisher: equal fingerprints
    /// are necessary, never sufficient, for two algebras to be isomorphic.
    pub fn invariant_fingerprint(&self) -> Fingerprint {
        let mut derived_dims = Vec::new();
        let mut current = Subspace::full(self.dim());
        loop {
            let next = self.derived_of(&current);
            if next.dim() == current.dim() && !derived_dims.is_empty() {
                break;
            }
            derived_dims.push(next.dim());
            if next.dim() == 0 {
                break;
            }
            if next.dim() == current.dim() {
                break;
            }
            current = next;
        }
        let killing = self.killing_form();
        let (pos, neg, null) = killing.signature().expect("killing form is symmetric");
        Fingerprint {
            dim: self.dim(),
            center_dim: self.center().dim(),
            derived_dims,
            unimodular: self.is_unimodular(),
            killing_rank: pos + neg,
            killing_signature: (pos, neg, null),
        }
    }
}

/// Necessary isomorphism invariants of a Lie algebra.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct Fingerprint {
    pub dim: usize,
    pub center_dim: usize,
    /// Dimensions of the derived series g' , g'', ... until stable.
    pub derived_dims: Vec<usize>,
    pub unimodular: bool,
    pub killing_rank: usize,
    /// (positive, negative, zero) inertia of the Killing form.
    pub killing_signature: (usize, usize, usize),
}

/// A linear subspace given by a canonical (RREF) basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vector>,
}

impl Subspace {
    pub fn from_spanning(vectors: &[Vector], ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::row_space_basis(vectors, ambient_dim),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self::from_spanning(
            &(0..ambient_dim)
                .map(|i| Vector::basis(ambient_dim, i))
                .collect::<Vec<_>>(),
            ambient_dim,
        )
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Vec::new(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    pub fn contains(&self, v: &Vector) -> bool {
        if v.is_zero() {
            return true;
        }
        let mut rows: Vec<Vector> = self.basis.clone();
        rows.push(v.clone());
        Matrix::row_space_basis(&rows, self.ambient_dim).len() == self.basis.len()
    }

    /// Image of the subspace under the coordinate change with matrix `m`.
    pub fn map(&self, m: &Matrix) -> Subspace {
        let mapped: Vec<Vector> = self.basis.iter().map(|v| m.apply(v)).collect();
        Subspace::from_spanning(&mapped, self.ambient_dim)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sc;

    /// The 5-dimensional Heisenberg algebra with [e1,e4] = [e2,e3] = 2 e5.
    pub fn h5() -> LieAlgebra {
        let mut t = BracketTable::new(5);
        t.set_terms(1, 4, &[(5, sc!(2))]);
        t.set_terms(2, 3, &[(5, sc!(2))]);
        LieAlgebra::new(t).unwrap()
    }

    fn sl2_aff() -> LieAlgebra {
        let mut t = BracketTable::new(5);
        t.set_terms(1, 2, &[(2, sc!(2))]);
        t.set_terms(1, 3, &[(3, sc!(-2))]);
        t.set_terms(2, 3, &[(1, sc!(1))]);
        t.set_terms(4, 5, &[(5, sc!(1))]);
        LieAlgebra::new(t).unwrap()
    }

    fn su2_aff() -> LieAlgebra {
        let mut t = BracketTable::new(5);
        t.set_terms(1, 2, &[(3, sc!(1))]);
        t.set_terms(2, 3, &[(1, sc!(1))]);
        t.set_terms(1, 3, &[(2, sc!(-1))]);
        t.set_terms(4, 5, &[(5, sc!(1))]);
        LieAlgebra::new(t).unwrap()
    }

    #[test]
    fn jacobi_defect_detects_bad_tables() {
        assert_eq!(BracketTable::new(5).jacobi_defect(), sc!(0));
        assert_eq!(h5().table().jacobi_defect(), sc!(0));
        // [e1,e2]=e3, [e1,e3]=e1 violates Jacobi: cyclic sum on (1,2,3) = [e3,e2] - ... != 0
        let mut bad = BracketTable::new(3);
        bad.set_terms(1, 2, &[(3, sc!(1))]);
        bad.set_terms(1, 3, &[(1, sc!(1))]);
        // [[e1,e2],e3] + [[e2,e3],e1] + [[e3,e1],e2] = [e3,e3] + 0 + [-e1,e2] = -e3
        assert_eq!(bad.jacobi_defect(), sc!(1));
        assert!(LieAlgebra::new(bad).is_err());
    }

    #[test]
    fn structure_equation_shorthand_matches_brackets() {
        // g2 = (0, -e^{12}, 0, 0, e^{12} + e^{34})
        let t = BracketTable::from_structure_equations(
            5,
            &[
                (2, 1, 2, sc!(-1)),
                (5, 1, 2, sc!(1)),
                (5, 3, 4, sc!(1)),
            ],
        );
        let g = LieAlgebra::new(t).unwrap();
        // [e1, e2] = e2 - e5, [e3, e4] = -e5
        assert_eq!(
            g.bracket_basis(1, 2),
            Vector(vec![sc!(0), sc!(1), sc!(0), sc!(0), sc!(-1)])
        );
        assert_eq!(g.bracket_basis(3, 4), Vector::basis(5, 4).scale(&sc!(-1)));
    }

    #[test]
    fn center_of_abelian_heisenberg_and_nontrivial() {
        assert_eq!(LieAlgebra::abelian(5).center().dim(), 5);
        let c = h5().center();
        assert_eq!(c.dim(), 1);
        assert!(c.contains(&Vector::basis(5, 4)));
    }

    #[test]
    fn derived_algebra_dimensions() {
        assert_eq!(LieAlgebra::abelian(4).derived_algebra().dim(), 0);
        let d = h5().derived_algebra();
        assert_eq!(d.dim(), 1);
        assert!(d.contains(&Vector::basis(5, 4)));
        assert_eq!(sl2_aff().derived_algebra().dim(), 4);
    }

    #[test]
    fn unimodularity() {
        assert!(LieAlgebra::abelian(3).is_unimodular());
        assert!(h5().is_unimodular());
        assert!(!sl2_aff().is_unimodular());
    }

    #[test]
    fn ad_matrices() {
        let g = h5();
        let xi = Vector::basis(5, 4);
        assert!(g.ad(&xi).is_zero());
        let ad1 = g.ad(&Vector::basis(5, 0));
        // [e1, e4] = 2 e5
        assert_eq!(ad1[(4, 3)], sc!(2));
    }

    #[test]
    fn change_basis_round_trip_and_scaling() {
        let g = h5();
        let id = Matrix::identity(5);
        assert_eq!(g.change_basis(&id).unwrap(), g);

        // e5' = e5 / lambda turns [e1,e4] = 2 e5 into 2 lambda e5'
        let lam = sc!(3);
        let mut p = Matrix::identity(5);
        p[(4, 4)] = lam.recip();
        let scaled = g.change_basis(&p).unwrap();
        assert_eq!(scaled.bracket_basis(1, 4).0[4], sc!(6));

        let p_inv = p.invert().unwrap();
        assert_eq!(scaled.change_basis(&p_inv).unwrap(), g);
    }

    #[test]
    fn center_is_basis_equivariant() {
        let g = sl2_aff();
        let mut p = Matrix::identity(5);
        p[(0, 1)] = sc!(2); // f2 = 2 e1 + e2
        p[(2, 4)] = sc!(-1, 3);
        let g2 = g.change_basis(&p).unwrap();
        let p_inv = p.invert().unwrap();
        assert_eq!(g2.center(), g.center().map(&p_inv));
        assert_eq!(g2.derived_algebra(), g.derived_algebra().map(&p_inv));
    }

    #[test]
    fn fingerprints_separate_killing_signatures() {
        let a = sl2_aff().invariant_fingerprint();
        let b = su2_aff().invariant_fingerprint();
        assert_ne!(a.killing_signature, b.killing_signature);
        assert_eq!(a.killing_signature, (3, 1, 1));
        assert_eq!(b.killing_signature, (1, 3, 1));

        let h = h5().invariant_fingerprint();
        let ab = LieAlgebra::abelian(5).invariant_fingerprint();
        assert_ne!(h.derived_dims, ab.derived_dims);
    }

    #[test]
    fn trace_ad_is_linear() {
        let g = sl2_aff();
        let x = Vector(vec![sc!(1), sc!(-2), sc!(0), sc!(3), sc!(1, 2)]);
        let trace = |m: &Matrix| {
            let mut t = sc!(0);
            for k in 0..5 {
                t += &m[(k, k)];
            }
            t
        };
        let lhs = trace(&g.ad(&x));
        let mut rhs = sc!(0);
        for i in 0..5 {
            rhs += &(&x.0[i] * &trace(&g.ad(&Vector::basis(5, i))));
        }
        assert_eq!(lhs, rhs);
    }
}
