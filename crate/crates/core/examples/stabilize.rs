//! Capped and annulus-stabilized symplectic images of a mapping class.
use mcg_signature::{annulus, cap, Catalog, SurfaceModel, Word};

fn main() -> mcg_signature::Result<()> {
    let catalog = Catalog::standard(SurfaceModel::calibrated(1));
    for w in ["t_a1", "t_d", "t_alpha_prime^2*t_b1"] {
        let word: Word = w.parse()?;
        let rep = catalog.evaluate(&word)?;
        println!("{word}");
        println!("  cap     {}", serde_json::to_string(&cap(&rep)?)?);
        println!("  annulus {}", serde_json::to_string(&annulus(&rep)?)?);
    }
    Ok(())
}
