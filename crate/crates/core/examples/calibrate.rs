//! Score the eight sign assignments and report the calibrated one.
use mcg_signature::campaign::calibrate;

fn main() -> mcg_signature::Result<()> {
    let report = calibrate()?;
    for s in &report.assignments {
        println!(
            "{}: cobound {}/{}{}, fixtures g0 {:?} g1 {:?}",
            s.calibration,
            s.cobound_passed,
            s.cobound_total,
            s.error.as_deref().map(|e| format!(" ({e})")).unwrap_or_default(),
            s.genus_zero_fixture,
            s.genus_one_fixture,
        );
    }
    println!("winner {}", report.winner);
    for f in &report.residual_involution {
        println!("holds only up to q -> -q: {f}");
    }
    Ok(())
}
