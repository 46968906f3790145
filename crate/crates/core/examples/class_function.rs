//! Evaluate the class function m on words in the standard generators.
use mcg_signature::{Catalog, SurfaceModel, Word};

fn main() -> mcg_signature::Result<()> {
    let genus = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(1);
    let catalog = Catalog::standard(SurfaceModel::calibrated(genus));
    println!("generators: {}", catalog.names().collect::<Vec<_>>().join(", "));
    let words = if genus == 0 {
        vec!["t_beta^-3", "t_d^2*t_beta", ""]
    } else {
        vec!["t_alpha^2*t_alpha_prime*t_beta^-1", "t_a1*t_b1", "t_alpha_prime^-1*t_d^3", ""]
    };
    for w in words {
        let word: Word = w.parse()?;
        let rep = catalog.evaluate(&word)?;
        let m = rep.class_function_m()?;
        println!("m({word}) = {m}, sign {}", m.sign());
    }
    Ok(())
}
