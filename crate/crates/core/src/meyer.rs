//! Meyer's signature cocycle on the symplectic group and its stabilized difference.
//!
//! For `A, B ∈ Sp(2n, Q)` let
//!
//! ```text
//! V_{A,B} = {(x, y) ∈ Q^{2n} ⊕ Q^{2n} : (A⁻¹ - I)x + (B - I)y = 0}
//! ⟨(x₁,y₁), (x₂,y₂)⟩ = (x₁ + y₁)ᵀ J (I - B) y₂
//! ```
//!
//! The form is symmetric on `V_{A,B}` and `τ(A, B) = ε_τ · signature`.

use serde::Serialize;

use crate::calibration::Sign;
use crate::error::{Error, Result};
use crate::linalg::{add_vectors, dot, Inertia, Mat, Subspace};
use crate::stabilize::{annulus, cap, standard_form, SymplecticMatrix};
use crate::surface::MappingClassRep;

#[derive(Clone, Debug)]
pub struct MeyerForm {
    n: usize,
    space: Subspace,
    gram: Mat,
}

impl MeyerForm {
    pub fn new(a: &SymplecticMatrix, b: &SymplecticMatrix) -> Result<Self> {
        let n = a.half_dim();
        if b.half_dim() != n {
            return Err(Error::DimensionMismatch { expected: 2 * n, found: 2 * b.half_dim() });
        }
        let id = Mat::identity(2 * n);
        let block = (&a.inverse().into_matrix() - &id).hstack(&(b.matrix() - &id));
        let space = block.kernel();

        let j_one_minus_b = &standard_form(n) * &(&id - b.matrix());
        let basis = space.basis_vectors();
        let split = |v: &[num::BigRational]| (v[..2 * n].to_vec(), v[2 * n..].to_vec());
        let lefts: Vec<_> = basis
            .iter()
            .map(|v| {
                let (x, y) = split(v);
                add_vectors(&x, &y)
            })
            .collect();
        let rights: Vec<_> = basis.iter().map(|v| j_one_minus_b.mul_vec(&split(v).1)).collect();
        let k = basis.len();
        let gram = Mat::from_fn(k, k, |i, j| dot(&lefts[i], &rights[j]));
        if !gram.is_symmetric() {
            return Err(Error::GramAsymmetry);
        }
        Ok(MeyerForm { n, space, gram })
    }

    pub fn half_dim(&self) -> usize {
        self.n
    }

    /// `V_{A,B}` inside `Q^{4n}`.
    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn gram(&self) -> &Mat {
        &self.gram
    }

    pub fn inertia(&self) -> Inertia {
        self.gram.symmetric_signature().expect("checked symmetric")
    }
}

/// `τ(A, B)`.
pub fn meyer_tau(a: &SymplecticMatrix, b: &SymplecticMatrix, orientation: Sign) -> Result<i64> {
    if a.half_dim() == 0 {
        return Ok(0);
    }
    Ok(orientation.value() * MeyerForm::new(a, b)?.inertia().signature())
}

/// `τ(B,C) - τ(AB,C) + τ(A,BC) - τ(A,B)`; zero for a cocycle.
pub fn cocycle_defect(
    a: &SymplecticMatrix,
    b: &SymplecticMatrix,
    c: &SymplecticMatrix,
    orientation: Sign,
) -> Result<i64> {
    let tau = |x: &SymplecticMatrix, y: &SymplecticMatrix| meyer_tau(x, y, orientation);
    Ok(tau(b, c)? - tau(&a.compose(b), c)? + tau(a, &b.compose(c))? - tau(a, b)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TauReport {
    pub tau_cap: i64,
    pub tau_annulus: i64,
    pub tilde_tau: i64,
}

/// Both stabilized cocycle values and their difference `η*τ_{g+1} - θ*τ_g`.
pub fn tau_report(x: &MappingClassRep, y: &MappingClassRep) -> Result<TauReport> {
    if x.model() != y.model() {
        return Err(Error::ModelMismatch);
    }
    let orientation = x.model().calibration().tau;
    let tau_cap = meyer_tau(&cap(x)?, &cap(y)?, orientation)?;
    let tau_annulus = meyer_tau(&annulus(x)?, &annulus(y)?, orientation)?;
    Ok(TauReport { tau_cap, tau_annulus, tilde_tau: tau_annulus - tau_cap })
}

pub fn tilde_tau(x: &MappingClassRep, y: &MappingClassRep) -> Result<i64> {
    Ok(tau_report(x, y)?.tilde_tau)
}

/// `sign m(x) + sign m(y) + sign m((x∘y)⁻¹)`, the coboundary of `sign ∘ m`.
pub fn sign_m_coboundary(x: &MappingClassRep, y: &MappingClassRep) -> Result<i64> {
    let xy_inv = x.compose(y)?.inverse();
    Ok(x.class_function_m()?.sign() + y.class_function_m()?.sign() + xy_inv.class_function_m()?.sign())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::{Catalog, SurfaceModel};

    #[test]
    fn tau_vanishes_against_identity() {
        let b = SymplecticMatrix::transvection(&[1, 2, -1, 0], 3);
        let id = SymplecticMatrix::identity(2);
        assert_eq!(meyer_tau(&id, &b, Sign::Positive).unwrap(), 0);
        assert_eq!(meyer_tau(&b, &id, Sign::Positive).unwrap(), 0);
    }

    #[test]
    fn tau_of_unipotent_square() {
        let t = SymplecticMatrix::new(Mat::from_int_rows(&[&[1, 1], &[0, 1]])).unwrap();
        let form = MeyerForm::new(&t, &t).unwrap();
        assert_eq!(form.space().dim(), 3);
        assert_eq!(form.inertia(), Inertia { positive: 1, negative: 0, zero: 2 });
        assert_eq!(meyer_tau(&t, &t, Sign::Positive).unwrap(), 1);
        assert_eq!(meyer_tau(&t, &t, Sign::Negative).unwrap(), -1);
    }

    #[test]
    fn tau_against_inverse_vanishes() {
        let a = SymplecticMatrix::transvection(&[2, -1, 1, 1], 1)
            .compose(&SymplecticMatrix::transvection(&[0, 1, 1, -3], -2));
        assert_eq!(meyer_tau(&a, &a.inverse(), Sign::Positive).unwrap(), 0);
    }

    #[test]
    fn dimension_mismatch() {
        let a = SymplecticMatrix::identity(1);
        let b = SymplecticMatrix::identity(2);
        assert!(matches!(meyer_tau(&a, &b, Sign::Positive), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn tilde_tau_examples() {
        let id = SurfaceModel::calibrated(1).identity();
        assert_eq!(tilde_tau(&id, &id).unwrap(), 0);

        let cat = Catalog::standard(SurfaceModel::calibrated(0));
        let td = cat.get("t_d").unwrap();
        let expected = td.class_function_m().unwrap().sign() * 2
            + td.power(-2).class_function_m().unwrap().sign();
        let report = tau_report(td, td).unwrap();
        assert_eq!(report.tau_cap, 0);
        assert_eq!(report.tilde_tau, expected);
        assert_eq!(expected, -1);
    }
}
