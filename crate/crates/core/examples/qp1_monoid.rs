//! Arithmetic in the projective-rational monoid QP¹.
use mcg_signature::ProjectiveRational;

fn main() -> mcg_signature::Result<()> {
    let x: ProjectiveRational = "1:2".parse()?;
    let y: ProjectiveRational = "1:3".parse()?;
    println!("{x} + {y} = {}", x.add(&y));
    println!("{x} + [0:1] = {}", x.add(&ProjectiveRational::infinity()));
    println!("[0:1] + [0:1] = {}", ProjectiveRational::infinity().add(&ProjectiveRational::infinity()));
    for k in [-2, 0, 3] {
        let kx = x.scalar_mul(k);
        println!("{k}·{x} = {kx}, sign {}", kx.sign());
    }
    Ok(())
}
