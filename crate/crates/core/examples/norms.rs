//! Hilbert symbols, quadratic fields with prescribed norms, and cubic
//! fields with a prescribed trace of a square.

use descent_forge::numfield::{
    cubic_trace_square, find_quadratic_norm_field, hilbert_symbol, q, q_frac, Place, DEFAULT_D_BOUND,
    DEFAULT_LADDER, DEFAULT_WITNESS_BOUND,
};

fn main() -> descent_forge::Result<()> {
    for v in [Place::Infinity, Place::Prime(2), Place::Prime(3)] {
        println!("(-1, -1)_{v} = {}", hilbert_symbol(&q(-1), &q(-1), v)?);
    }

    let r = find_quadratic_norm_field(&[q(2), q(3)], &[Place::Infinity], DEFAULT_D_BOUND, DEFAULT_WITNESS_BOUND)?;
    println!("2 and 3 are norms from Q(sqrt({})), which is real", r.d);
    for c in &r.certificates {
        if let Some((x, y)) = &c.witness {
            println!("  {} = ({x})^2 - {}*({y})^2", c.alpha, c.d);
        }
    }

    for alpha in [q(5), q_frac(13, 3), q(-7)] {
        let t = cubic_trace_square(&alpha, false, DEFAULT_LADDER)?;
        println!("Tr(x^2) = {alpha} in Q[x]/({}), disc {}", t.f, t.discriminant);
    }
    if let Err(e) = cubic_trace_square(&q(-1), true, DEFAULT_LADDER) {
        println!("cyclic request with alpha = -1: {e}");
    }
    Ok(())
}
