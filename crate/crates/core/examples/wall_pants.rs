//! Wall's signature for the pair-of-pants configuration and a hand-made triple.
use mcg_signature::linalg::Subspace;
use mcg_signature::{pants_branch_sign, pants_triple, Mat, PantsTripleSetup, ProjectiveRational, WallTriple};

fn main() -> mcg_signature::Result<()> {
    for ms in [["1:1", "1:1", "0:1"], ["1:2", "3:-1", "2:1"], ["1:0", "1:0", "1:0"]] {
        let m = ms.map(|s| s.parse::<ProjectiveRational>().unwrap());
        let setup = PantsTripleSetup::new(m[0].clone(), m[1].clone(), m[2].clone());
        let report = pants_triple(&setup).wall_signature()?;
        println!("{ms:?}: signature {}, dim W {}, branch table {}", report.signature, report.dim_w, pants_branch_sign(&setup));
    }

    // three lines in the symplectic plane
    let omega = Mat::from_int_rows(&[&[0, 1], &[-1, 0]]);
    let line = |x: i64, y: i64| Subspace::span(2, &[mcg_signature::linalg::int_vector(&[x, y])]);
    let triple = WallTriple::new(omega, line(1, 0), line(1, 1), line(0, 1))?;
    println!("plane triple: {:?}", triple.wall_signature()?);
    Ok(())
}
