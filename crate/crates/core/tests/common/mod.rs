#![allow(dead_code)]

use mcg_signature::linalg::{int_vector, rat, Inertia, Mat, Rat, Subspace};
use mcg_signature::SymplecticMatrix;
use num::{Signed, Zero};
use rand::Rng;

/// Coefficients `c_0..c_n` of `det(xI - A)` by Faddeev-LeVerrier.
pub fn characteristic_polynomial(a: &Mat) -> Vec<Rat> {
    let n = a.rows();
    let mut coeffs = vec![Rat::zero(); n + 1];
    coeffs[n] = rat(1);
    let mut m = Mat::zeros(n, n);
    for k in 1..=n {
        let mut next = a * &m;
        for i in 0..n {
            next[(i, i)] += &coeffs[n + 1 - k];
        }
        m = next;
        let am = a * &m;
        let trace: Rat = (0..n).map(|i| am[(i, i)].clone()).sum();
        coeffs[n - k] = -trace / rat(k as i64);
    }
    coeffs
}

fn sign_changes(coeffs: &[Rat]) -> usize {
    let signs: Vec<bool> = coeffs.iter().filter(|c| !c.is_zero()).map(|c| c.is_positive()).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Inertia of a symmetric matrix from its characteristic polynomial: the roots are real,
/// so Descartes' rule of signs counts positive and negative eigenvalues exactly.
pub fn inertia_oracle(a: &Mat) -> Inertia {
    let c = characteristic_polynomial(a);
    let zero = c.iter().position(|x| !x.is_zero()).unwrap();
    let trimmed = &c[zero..];
    let reflected: Vec<Rat> =
        trimmed.iter().enumerate().map(|(i, x)| if (i + zero) % 2 == 1 { -x.clone() } else { x.clone() }).collect();
    Inertia { positive: sign_changes(trimmed), negative: sign_changes(&reflected), zero }
}

pub fn random_int_mat<R: Rng>(rng: &mut R, rows: usize, cols: usize, bound: i64) -> Mat {
    Mat::from_fn(rows, cols, |_, _| rat(rng.gen_range(-bound..=bound)))
}

/// `PᵀDP` with `P` of random rank, so degenerate forms show up regularly.
pub fn random_symmetric<R: Rng>(rng: &mut R, max_n: usize) -> Mat {
    let n = rng.gen_range(1..=max_n);
    let k = rng.gen_range(1..=n);
    let p = random_int_mat(rng, k, n, 2);
    let d = Mat::from_fn(k, k, |i, j| if i == j { rat(rng.gen_range(-3..=3)) } else { rat(0) });
    &(&p.transpose() * &d) * &p
}

pub fn random_subspace<R: Rng>(rng: &mut R, ambient: usize) -> Subspace {
    let k = rng.gen_range(0..=ambient);
    Subspace::row_space(&random_int_mat(rng, k, ambient, 2))
}

/// Product of one to four random integral transvections in `Sp(2n, Z)`.
pub fn random_symplectic<R: Rng>(rng: &mut R, n: usize) -> SymplecticMatrix {
    let mut acc = SymplecticMatrix::identity(n);
    for _ in 0..rng.gen_range(1..=4) {
        let v: Vec<i64> = (0..2 * n).map(|_| rng.gen_range(-2..=2)).collect();
        let k = [-2, -1, 1, 2][rng.gen_range(0..4)];
        acc = acc.compose(&SymplecticMatrix::transvection(&v, k));
    }
    acc
}

pub fn vector(entries: &[i64]) -> Vec<Rat> {
    int_vector(entries)
}
