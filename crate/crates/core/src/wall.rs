//! Wall's non-additivity correction and the pair-of-pants configuration built from `m`.
//!
//! For a symplectic space `(V, Ω)` and Lagrangians `A, B, C`, Wall's form lives on
//! `W = B∩(C+A) / ((B∩C) + (B∩A))` and is `Ψ(b, b') = b·c'`, where `a' + b' + c' = 0` with
//! `a' ∈ A`, `c' ∈ C`. `Sign(V; B, C, A)` is its signature.
//!
//! The argument order matters: cyclically permuting `(B, C, A)` preserves the value but a
//! transposition flips its sign. Constructors here take the subspaces in that order.

use num::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{dot, rat, Mat, Rat, Subspace, Vector};
use crate::qp1::ProjectiveRational;
use crate::surface::MappingClassRep;

#[derive(Clone, Debug)]
pub struct WallTriple {
    omega: Mat,
    b: Subspace,
    c: Subspace,
    a: Subspace,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct WallReport {
    pub signature: i64,
    #[serde(rename = "dim_W")]
    pub dim_w: usize,
}

impl WallTriple {
    pub fn new(omega: Mat, b: Subspace, c: Subspace, a: Subspace) -> Result<Self> {
        if !omega.is_antisymmetric() {
            return Err(Error::NotAntisymmetric);
        }
        let n = omega.rows();
        for (which, s) in [("B", &b), ("C", &c), ("A", &a)] {
            if s.ambient_dim() != n {
                return Err(Error::DimensionMismatch { expected: n, found: s.ambient_dim() });
            }
            if !is_lagrangian(&omega, s) {
                return Err(Error::NonLagrangian { which });
            }
        }
        Ok(WallTriple { omega, b, c, a })
    }

    pub fn omega(&self) -> &Mat {
        &self.omega
    }

    pub fn b(&self) -> &Subspace {
        &self.b
    }

    pub fn c(&self) -> &Subspace {
        &self.c
    }

    pub fn a(&self) -> &Subspace {
        &self.a
    }

    /// `B∩(C+A)` and `(B∩C) + (B∩A)`.
    pub fn w_spaces(&self) -> Result<(Subspace, Subspace)> {
        let top = self.b.intersect(&self.c.sum(&self.a)?)?;
        let bottom = self.b.intersect(&self.c)?.sum(&self.b.intersect(&self.a)?)?;
        Ok((top, bottom))
    }

    /// Coset representatives spanning `W`.
    pub fn quotient_reps(&self) -> Result<Vec<Vector>> {
        let (top, bottom) = self.w_spaces()?;
        top.quotient_basis(&bottom)
    }

    /// One solution `(a', c')` of `a' + b' + c' = 0`.
    pub fn decompose(&self, b_prime: &[Rat]) -> Result<(Vector, Vector)> {
        let n = self.omega.rows();
        let a_basis = self.a.basis_vectors();
        let c_basis = self.c.basis_vectors();
        let mut columns = a_basis.clone();
        columns.extend(c_basis.iter().cloned());
        let rhs: Vector = b_prime.iter().map(|x| -x).collect();
        let z = Mat::from_columns(n, &columns).solve(&rhs).ok_or(Error::DecompositionFailure)?;
        let combine = |basis: &[Vector], coeffs: &[Rat]| {
            let mut v = vec![Rat::zero(); n];
            for (vec, k) in basis.iter().zip(coeffs) {
                for (x, y) in v.iter_mut().zip(vec) {
                    *x += k * y;
                }
            }
            v
        };
        let a_prime = combine(&a_basis, &z[..a_basis.len()]);
        let c_prime = combine(&c_basis, &z[a_basis.len()..]);
        Ok((a_prime, c_prime))
    }

    /// `b·c = bᵀ Ω c`.
    pub fn intersection(&self, b: &[Rat], c: &[Rat]) -> Rat {
        dot(b, &self.omega.mul_vec(c))
    }

    /// Gram matrix `Ψ(b_i, b_j) = b_i · c'_j` for given representatives and the `C`
    /// components `c'_j` of their decompositions.
    pub fn psi_gram(&self, reps: &[Vector], complements: &[Vector]) -> Mat {
        let k = reps.len();
        Mat::from_fn(k, k, |i, j| self.intersection(&reps[i], &complements[j]))
    }

    pub fn gram(&self) -> Result<Mat> {
        let reps = self.quotient_reps()?;
        let complements = reps
            .iter()
            .map(|b| self.decompose(b).map(|(_, c)| c))
            .collect::<Result<Vec<_>>>()?;
        let gram = self.psi_gram(&reps, &complements);
        if !gram.is_symmetric() {
            return Err(Error::GramAsymmetry);
        }
        Ok(gram)
    }

    /// `Sign(V; B, C, A)` together with `dim W`.
    pub fn wall_signature(&self) -> Result<WallReport> {
        let gram = self.gram()?;
        let inertia = gram.symmetric_signature()?;
        Ok(WallReport { signature: inertia.signature(), dim_w: gram.rows() })
    }
}

pub fn is_isotropic(omega: &Mat, s: &Subspace) -> bool {
    let basis = s.basis_vectors();
    basis.iter().all(|u| basis.iter().all(|v| dot(u, &omega.mul_vec(v)).is_zero()))
}

pub fn is_lagrangian(omega: &Mat, s: &Subspace) -> bool {
    2 * s.dim() == omega.rows() && is_isotropic(omega, s)
}

/// The values `m(φ), m(ψ), m((ψφ)⁻¹)` attached to the three legs of a pair of pants.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PantsTripleSetup {
    pub m: [ProjectiveRational; 3],
}

impl PantsTripleSetup {
    pub fn new(m1: ProjectiveRational, m2: ProjectiveRational, m3: ProjectiveRational) -> Self {
        PantsTripleSetup { m: [m1, m2, m3] }
    }

    pub fn from_reps(x: &MappingClassRep, y: &MappingClassRep) -> Result<Self> {
        let xy_inv = x.compose(y)?.inverse();
        Ok(Self::new(x.class_function_m()?, y.class_function_m()?, xy_inv.class_function_m()?))
    }

    /// `sign(m₁ + m₂ + m₃)` in QP¹.
    pub fn qp1_sign(&self) -> i64 {
        self.m.iter().cloned().sum::<ProjectiveRational>().sign()
    }
}

/// Boundary-torus index of `e_{ij}` (`leg` in 0..3, `j` in 0..4).
fn e(leg: usize, j: usize) -> usize {
    4 * leg + j
}

/// The 12-dimensional configuration on the boundary of three mapping tori.
///
/// Each torus block `(e_{i1}, e_{i2}, e_{i3}, e_{i4})` carries `⟨e_{i1}, e_{i3}⟩ = 1` and
/// `⟨e_{i2}, e_{i4}⟩ = 1`; with this pattern the displayed `B` and `C` are Lagrangian.
pub fn pants_triple(setup: &PantsTripleSetup) -> WallTriple {
    let mut omega = Mat::zeros(12, 12);
    for leg in 0..3 {
        for (x, y) in [(0, 2), (1, 3)] {
            omega[(e(leg, x), e(leg, y))] = rat(1);
            omega[(e(leg, y), e(leg, x))] = rat(-1);
        }
    }
    let vec_of = |terms: &[(usize, Rat)]| {
        let mut v = vec![Rat::zero(); 12];
        for (i, k) in terms {
            v[*i] += k;
        }
        v
    };
    let one = || rat(1);
    let neg = || rat(-1);

    let a = Subspace::span(
        12,
        &(0..3).flat_map(|leg| [vec_of(&[(e(leg, 0), one())]), vec_of(&[(e(leg, 1), one())])]).collect::<Vec<_>>(),
    );
    let b = Subspace::span(
        12,
        &[
            vec_of(&[(e(0, 0), one()), (e(1, 0), neg())]),
            vec_of(&[(e(0, 0), one()), (e(2, 0), neg())]),
            vec_of(&[(e(0, 1), one()), (e(1, 1), neg())]),
            vec_of(&[(e(0, 1), one()), (e(2, 1), neg())]),
            vec_of(&[(e(0, 2), one()), (e(1, 2), one()), (e(2, 2), one())]),
            vec_of(&[(e(0, 3), one()), (e(1, 3), one()), (e(2, 3), one())]),
        ],
    );
    let mut c_vectors = Vec::new();
    for (leg, m) in setup.m.iter().enumerate() {
        match m.ratio() {
            Some(slope) => {
                c_vectors.push(vec_of(&[(e(leg, 0), one()), (e(leg, 1), one())]));
                c_vectors.push(vec_of(&[(e(leg, 2), one()), (e(leg, 3), neg()), (e(leg, 0), slope)]));
            }
            None => {
                c_vectors.push(vec_of(&[(e(leg, 0), one())]));
                c_vectors.push(vec_of(&[(e(leg, 1), one())]));
            }
        }
    }
    let c = Subspace::span(12, &c_vectors);
    WallTriple::new(omega, b, c, a).expect("pants configuration is Lagrangian")
}

/// Closed form: `sign(Σ b_i/a_i)` when every `a_i ≠ 0`, else 0.
pub fn pants_branch_sign(setup: &PantsTripleSetup) -> i64 {
    let mut total = Rat::zero();
    for m in &setup.m {
        match m.ratio() {
            Some(r) => total += r,
            None => return 0,
        }
    }
    if total.is_positive() {
        1
    } else if total.is_negative() {
        -1
    } else {
        0
    }
}

/// Signature change when capping both boundary circles of the pants bundle:
/// `-sign(m(x) + m(y) + m((x∘y)⁻¹))`.
pub fn sig_diff_cap(x: &MappingClassRep, y: &MappingClassRep) -> Result<i64> {
    Ok(-PantsTripleSetup::from_reps(x, y)?.qp1_sign())
}

/// Signature change when joining the boundary circles by an annulus:
/// `Σ sign m - sign(Σ m)` over the three legs.
pub fn sig_diff_annulus(x: &MappingClassRep, y: &MappingClassRep) -> Result<i64> {
    let setup = PantsTripleSetup::from_reps(x, y)?;
    let signs: i64 = setup.m.iter().map(ProjectiveRational::sign).sum();
    Ok(signs - setup.qp1_sign())
}
