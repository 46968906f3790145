//! Every point of QP¹ is a value of m at genus ≥ 1: build and check witnesses.
use mcg_signature::{surjectivity_witness, Catalog, ProjectiveRational, SurfaceModel};

fn main() -> mcg_signature::Result<()> {
    let catalog = Catalog::standard(SurfaceModel::calibrated(1));
    for (p, q) in [(0, 1), (1, 0), (2, -3), (-4, 1), (5, 5)] {
        let target = ProjectiveRational::new(p, q)?;
        let word = surjectivity_witness(&target, &catalog)?;
        let m = catalog.evaluate(&word)?.class_function_m()?;
        println!("{target}: {} factors, m = {m}", word.len());
        assert_eq!(m, target);
    }
    let genus_zero = Catalog::standard(SurfaceModel::calibrated(0));
    match surjectivity_witness(&ProjectiveRational::new(2, 1)?, &genus_zero) {
        Err(e) => println!("genus 0: {e}"),
        Ok(w) => println!("genus 0 witness {w}"),
    }
    Ok(())
}
