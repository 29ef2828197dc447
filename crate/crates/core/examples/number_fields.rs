//! Characteristic polynomials and symmetric functions of conjugates.

use descent_forge::numfield::{n_theta_eval, NumberField, PolyQ, Theta};

fn main() -> descent_forge::Result<()> {
    let k = NumberField::new(&PolyQ::from_ints(&[-2, 0, 1]))?;
    let z = k.element(&PolyQ::from_ints(&[1, 1]));
    println!("char poly of 1 + sqrt(2): {}", z.char_poly());
    for theta in ["product", "sum", "p2", "e2"] {
        let t: Theta = theta.parse()?;
        println!("  {theta}: {}", n_theta_eval(&z, &t)?);
    }

    let cubic = NumberField::new(&PolyQ::from_ints(&[-1, -2, -1, 1]))?;
    let beta = cubic.generator();
    println!("in Q[x]/({}):", cubic.polynomial());
    println!("  N(x) = {}, Tr(x^2) = {}", beta.norm(), beta.mul(&beta).trace());
    println!("  disc = {}", cubic.polynomial().discriminant());
    Ok(())
}
