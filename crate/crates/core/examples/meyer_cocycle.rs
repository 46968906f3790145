//! The Meyer cocycle on Sp(2n, Q) and the difference of its two stabilizations.
use mcg_signature::meyer::cocycle_defect;
use mcg_signature::{meyer_tau, sign_m_coboundary, tau_report, Catalog, Sign, SurfaceModel, SymplecticMatrix};

fn main() -> mcg_signature::Result<()> {
    let a = SymplecticMatrix::transvection(&[1, 0, 0, 1], 1);
    let b = SymplecticMatrix::transvection(&[0, 1, 1, -1], -2);
    let c = SymplecticMatrix::transvection(&[1, 1, 0, 2], 1);
    println!("tau(A,B) = {}", meyer_tau(&a, &b, Sign::Positive)?);
    println!("cocycle defect = {}", cocycle_defect(&a, &b, &c, Sign::Positive)?);

    let catalog = Catalog::standard(SurfaceModel::calibrated(1));
    let x = catalog.evaluate(&"t_alpha^2*t_alpha_prime*t_beta^-1".parse()?)?;
    let y = catalog.evaluate(&"t_b1^-1*t_d".parse()?)?;
    let report = tau_report(&x, &y)?;
    println!("{}", serde_json::to_string(&report)?);
    println!("coboundary of sign m = {}", sign_m_coboundary(&x, &y)?);
    Ok(())
}
