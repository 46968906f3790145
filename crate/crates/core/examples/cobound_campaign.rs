//! Seeded check of tilde_tau(u,v) = sign m(u) + sign m(v) + sign m((uv)⁻¹).
use mcg_signature::campaign::{verify_cobound, RunConfig};

fn main() -> mcg_signature::Result<()> {
    let samples = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(200);
    for genus in 0..=2 {
        let report = verify_cobound(&RunConfig::new(genus, 7, samples, 6))?;
        println!("genus {genus}: {}", report.summary());
        for c in &report.counterexamples {
            println!("  {} | {}", c.u, c.v);
        }
    }
    Ok(())
}
