//! Exact arithmetic over ℚ: polynomials, number fields, symmetric
//! functions of conjugates, Hilbert symbols, and constructions of quadratic
//! and cubic fields with prescribed norm and trace data.

mod field;
mod hilbert;
mod norms;
mod poly;

pub use field::{
    elementary_symmetric, is_irreducible, is_rational_square, n_theta_eval, power_sums, NfElement, NumberField,
    Theta,
};
pub use hilbert::{
    hilbert_symbol, is_local_square, is_prime, prime_factors, product_formula_check, relevant_places,
    split_valuation, Place,
};
pub use norms::{
    cubic_trace_square, d_candidates, faithfulness_check, find_quadratic_norm_field, is_squarefree, norm_witness,
    NormCertificate, QuadraticNormField, TraceSquare, DEFAULT_D_BOUND, DEFAULT_LADDER, DEFAULT_WITNESS_BOUND,
};
pub use poly::{q, q_frac, PolyQ, Q};
pub(crate) use poly::fmt_q;
