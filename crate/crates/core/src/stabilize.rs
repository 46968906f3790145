//! Capping (θ) and annulus (η) stabilizations into closed-surface symplectic groups.
//!
//! Closed-surface homology uses the ordered basis `(a_1..a_n, b_1..b_n)` and the standard
//! form `J = [[0, I], [-I, 0]]`.

use num::One;

use crate::error::{Error, Result};
use crate::linalg::{rat, Mat};
use crate::surface::MappingClassRep;

/// `J = [[0, I], [-I, 0]]` on `Q^{2n}`.
pub fn standard_form(n: usize) -> Mat {
    let mut j = Mat::zeros(2 * n, 2 * n);
    for i in 0..n {
        j[(i, n + i)] = rat(1);
        j[(n + i, i)] = rat(-1);
    }
    j
}

/// A `2n × 2n` rational matrix with `MᵀJM = J`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymplecticMatrix {
    n: usize,
    matrix: Mat,
}

impl SymplecticMatrix {
    pub fn new(matrix: Mat) -> Result<Self> {
        Self::checked(matrix, "supplied")
    }

    fn checked(matrix: Mat, context: &'static str) -> Result<Self> {
        if !matrix.is_square() || !matrix.rows().is_multiple_of(2) {
            return Err(Error::SymplecticityViolation { context });
        }
        let n = matrix.rows() / 2;
        let j = standard_form(n);
        if &(&matrix.transpose() * &j) * &matrix != j {
            return Err(Error::SymplecticityViolation { context });
        }
        Ok(SymplecticMatrix { n, matrix })
    }

    pub fn identity(n: usize) -> Self {
        SymplecticMatrix { n, matrix: Mat::identity(2 * n) }
    }

    /// Transvection `x ↦ x + k ⟨x, v⟩ v` for an integer vector `v`.
    pub fn transvection(v: &[i64], k: i64) -> Self {
        assert!(v.len().is_multiple_of(2));
        let n = v.len() / 2;
        let v: Vec<_> = v.iter().map(|&x| rat(x)).collect();
        let jv = standard_form(n).mul_vec(&v);
        let matrix = Mat::from_fn(2 * n, 2 * n, |i, j| {
            let delta = if i == j { num::BigRational::one() } else { rat(0) };
            delta + rat(k) * &jv[j] * &v[i]
        });
        SymplecticMatrix { n, matrix }
    }

    pub fn half_dim(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &Mat {
        &self.matrix
    }

    pub fn into_matrix(self) -> Mat {
        self.matrix
    }

    pub fn compose(&self, other: &SymplecticMatrix) -> SymplecticMatrix {
        assert_eq!(self.n, other.n, "symplectic half-dimension");
        SymplecticMatrix { n: self.n, matrix: &self.matrix * &other.matrix }
    }

    /// `M⁻¹ = -J Mᵀ J`.
    pub fn inverse(&self) -> SymplecticMatrix {
        let j = standard_form(self.n);
        let inv = -&(&(&j * &self.matrix.transpose()) * &j);
        SymplecticMatrix { n: self.n, matrix: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == Mat::identity(2 * self.n)
    }
}

impl serde::Serialize for SymplecticMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.matrix.serialize(s)
    }
}

/// θ: extend by the identity over two capping disks. `H₁(Σ_g)` is `H₁(Σ_{g,2}) / Q·d`,
/// so the action is `M` with the `d` row and column removed.
pub fn cap(rep: &MappingClassRep) -> Result<SymplecticMatrix> {
    let model = rep.model();
    let g = model.genus();
    let m = rep.matrix();
    let d = model.boundary_index();
    if m.column(d) != model.boundary_class() {
        return Err(Error::SymplecticityViolation { context: "cap" });
    }
    let keep: Vec<usize> = (0..2 * g).collect();
    SymplecticMatrix::checked(m.submatrix(&keep, &keep), "cap")
}

/// η: extend by the identity over an annulus joining the two boundary circles.
///
/// New handle classes are `a_{g+1} = d` and `b_{g+1}` = the arc `l` closed up through the
/// annulus. On `(a_1..a_g, a_{g+1}, b_1..b_g, b_{g+1})` the old classes map by `M` with the
/// `d` coordinate read as `a_{g+1}`, and `b_{g+1} ↦ b_{g+1} + w`.
pub fn annulus(rep: &MappingClassRep) -> Result<SymplecticMatrix> {
    let model = rep.model();
    let g = model.genus();
    let n = g + 1;
    // position in the old basis of each new basis vector except b_{g+1}
    let old_index: Vec<usize> = (0..g).chain([2 * g]).chain(g..2 * g).collect();
    let m = rep.matrix();
    let w = rep.displacement();
    let last = 2 * n - 1;
    let matrix = Mat::from_fn(2 * n, 2 * n, |i, j| match (i == last, j == last) {
        (false, false) => m[(old_index[i], old_index[j])].clone(),
        (false, true) => w[old_index[i]].clone(),
        (true, false) => rat(0),
        (true, true) => rat(1),
    });
    SymplecticMatrix::checked(matrix, "annulus")
}
