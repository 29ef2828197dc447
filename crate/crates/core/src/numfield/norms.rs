//! Quadratic fields with prescribed norms and split places, cubic fields
//! with a prescribed trace form value, and the faithfulness test for
//! coordinate actions.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::field::{is_rational_square, n_theta_eval, NfElement, NumberField, Theta};
use super::hilbert::{hilbert_symbol, is_local_square, relevant_places, Place};
use super::poly::{fmt_q, q, PolyQ, Q};
use crate::error::{Error, Result};
use crate::group::{subgroup_core, Subgroup};

pub const DEFAULT_D_BOUND: u64 = 10_000;
pub const DEFAULT_WITNESS_BOUND: u64 = 1_000_000;
pub const DEFAULT_LADDER: usize = 64;

/// `α` is a local norm from `ℚ(√d)` at every place where that can fail.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormCertificate {
    pub alpha: Q,
    pub d: i64,
    pub local_symbols: BTreeMap<Place, i8>,
    /// `(x, y)` with `x² − d·y² = α`.
    pub witness: Option<(Q, Q)>,
}

impl NormCertificate {
    /// Recomputes every symbol and the witness equation.
    pub fn verify(&self) -> bool {
        let d = q(self.d);
        let places: BTreeSet<Place> = relevant_places(&[&self.alpha, &d]).into_iter().collect();
        if places != self.local_symbols.keys().copied().collect() {
            return false;
        }
        let symbols_ok = self.local_symbols.iter().all(|(&v, &s)| {
            s == 1 && hilbert_symbol(&self.alpha, &d, v).ok() == Some(1)
        });
        let witness_ok = match &self.witness {
            None => true,
            Some((x, y)) => x * x - &d * y * y == self.alpha,
        };
        symbols_ok && witness_ok && is_squarefree(self.d) && self.d != 0 && self.d != 1
    }
}

impl Serialize for NormCertificate {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut m = s.serialize_map(Some(4))?;
        m.serialize_entry("alpha", &fmt_q(&self.alpha))?;
        m.serialize_entry("d", &self.d)?;
        let symbols: Vec<(String, i8)> =
            self.local_symbols.iter().map(|(v, s)| (v.to_string(), *s)).collect();
        m.serialize_entry("local_symbols", &symbols.into_iter().collect::<BTreeMap<_, _>>())?;
        m.serialize_entry("witness", &self.witness.as_ref().map(|(x, y)| [fmt_q(x), fmt_q(y)]))?;
        m.end()
    }
}

/// Output of [`find_quadratic_norm_field`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuadraticNormField {
    pub d: i64,
    pub certificates: Vec<NormCertificate>,
    /// Places required to split, each checked by a local square test.
    pub split_places: Vec<Place>,
}

impl QuadraticNormField {
    pub fn verify(&self) -> bool {
        let d = q(self.d);
        self.certificates.iter().all(|c| c.d == self.d && c.verify())
            && self.split_places.iter().all(|&v| is_local_square(&d, v) == Ok(true))
    }
}

pub fn is_squarefree(d: i64) -> bool {
    let n = d.unsigned_abs();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p * p) {
            return false;
        }
        p += 1;
    }
    true
}

/// Squarefree `d ∉ {0, 1}` in order of `|d|`, positive first.
pub fn d_candidates(bound: u64) -> impl Iterator<Item = i64> {
    (1..=bound as i64)
        .flat_map(|n| [n, -n])
        .filter(|&d| d != 1 && is_squarefree(d))
}

/// The first squarefree `d` (by `|d|`, positive first) such that every
/// `α ∈ A` is a local norm from `ℚ(√d)` everywhere and every place of `S`
/// splits. By the Hasse norm theorem each `α` is then a global norm; an
/// explicit witness is searched for within `witness_bound` steps.
pub fn find_quadratic_norm_field(
    a: &[Q],
    s: &[Place],
    d_bound: u64,
    witness_bound: u64,
) -> Result<QuadraticNormField> {
    if a.iter().any(|x| x.is_zero()) {
        return Err(Error::ZeroArgument);
    }
    let mut alphas: Vec<Q> = a.to_vec();
    alphas.sort();
    alphas.dedup();
    let mut split: Vec<Place> = s.to_vec();
    split.sort();
    split.dedup();
    for d in d_candidates(d_bound) {
        let dq = q(d);
        if !split.iter().all(|&v| is_local_square(&dq, v) == Ok(true)) {
            continue;
        }
        let mut certificates = Vec::with_capacity(alphas.len());
        for alpha in &alphas {
            let mut local_symbols = BTreeMap::new();
            for v in relevant_places(&[alpha, &dq]) {
                local_symbols.insert(v, hilbert_symbol(alpha, &dq, v)?);
            }
            if local_symbols.values().any(|&s| s != 1) {
                break;
            }
            let witness = norm_witness(alpha, d, witness_bound);
            certificates.push(NormCertificate { alpha: alpha.clone(), d, local_symbols, witness });
        }
        if certificates.len() == alphas.len() {
            return Ok(QuadraticNormField { d, certificates, split_places: split });
        }
    }
    Err(Error::BoundExhausted(format!("no admissible d with |d| <= {d_bound}")))
}

/// `(x, y)` with `x² − d·y² = α`, found as `X² = αZ² + dY²` over `Z ≥ 1`,
/// `Y ≥ 0` ordered by `Z + Y`. At most `steps` pairs are tried.
pub fn norm_witness(alpha: &Q, d: i64, steps: u64) -> Option<(Q, Q)> {
    let num = alpha.numer().to_i128()?;
    let den = alpha.denom().to_i128()?;
    let d = d as i128;
    let mut tried = 0u64;
    let mut n: i128 = 1;
    loop {
        for z in 1..=n {
            let y = n - z;
            if tried >= steps {
                return None;
            }
            tried += 1;
            // α Z² + d Y² is a square iff den·(num Z² + den d Y²) is
            let t = num.checked_mul(z * z)?.checked_add(den.checked_mul(d)?.checked_mul(y * y)?)?;
            let t = t.checked_mul(den)?;
            if t < 0 {
                continue;
            }
            let r = t.sqrt();
            if r * r == t {
                let zq = Q::from_integer(BigInt::from(z));
                let x = Q::new(BigInt::from(r), BigInt::from(den)) / &zq;
                let yq = Q::from_integer(BigInt::from(y)) / &zq;
                return Some((x, yq));
            }
        }
        n += 1;
    }
}

/// A cubic field with `Tr(β²) = α`.
#[derive(Clone, Debug)]
pub struct TraceSquare {
    pub f: PolyQ,
    pub beta: NfElement,
    /// `p₂` of the conjugates of `β`, recomputed through `n_theta_eval`.
    pub p2_check: Q,
    pub e: [Q; 3],
    pub discriminant: Q,
}

impl TraceSquare {
    /// Recomputes `Tr(β²)` from the characteristic polynomial of `β²`
    /// and checks irreducibility and the discriminant.
    pub fn verify(&self, alpha: &Q) -> bool {
        let b2 = self.beta.mul(&self.beta);
        let cp = b2.char_poly();
        let trace = -cp.coeff(2);
        trace == *alpha
            && self.p2_check == *alpha
            && self.f.rational_root().is_none()
            && !is_rational_square(&self.f.discriminant())
    }
}

impl Serialize for TraceSquare {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let strs = |p: &PolyQ| p.coeffs().iter().map(fmt_q).collect::<Vec<_>>();
        let mut m = s.serialize_map(Some(6))?;
        m.serialize_entry("f", &strs(&self.f))?;
        m.serialize_entry("f_display", &self.f.to_string())?;
        m.serialize_entry("beta", &strs(self.beta.repr()))?;
        m.serialize_entry("e", &self.e.iter().map(fmt_q).collect::<Vec<_>>())?;
        m.serialize_entry("discriminant", &fmt_q(&self.discriminant))?;
        m.serialize_entry("p2_check", &fmt_q(&self.p2_check))?;
        m.end()
    }
}

fn ladder_value(i: usize) -> i64 {
    let k = (i / 2 + 1) as i64;
    if i.is_multiple_of(2) {
        k
    } else {
        -k
    }
}

/// `f = x³ − e₁x² + e₂x − e₃` with `e₂ = (e₁² − α)/2`, so that `β = x`
/// has `Tr(β²) = e₁² − 2e₂ = α`. `e₃` runs over `1, −1, 2, −2, …` and `e₁`
/// over `1, 2, …` until `f` is irreducible with nonsquare discriminant
/// (Galois group `S₃`). Cyclic fields are never produced: with
/// `require_cyclic` a nonpositive `α` is rejected, since `Tr(β²)` is
/// totally positive in a totally real field, and other values are
/// unsupported.
pub fn cubic_trace_square(alpha: &Q, require_cyclic: bool, ladder: usize) -> Result<TraceSquare> {
    if require_cyclic {
        if !alpha.is_positive() {
            return Err(Error::NotTotallyPositive { alpha: fmt_q(alpha) });
        }
        return Err(Error::Unsupported("cyclic cubic construction".into()));
    }
    for e1 in 1..=ladder.max(1) as i64 {
        let e1 = q(e1);
        let e2 = (&e1 * &e1 - alpha) / q(2);
        for i in 0..ladder {
            let e3 = q(ladder_value(i));
            let f = PolyQ::new(vec![-e3.clone(), e2.clone(), -e1.clone(), q(1)]);
            if f.rational_root().is_some() {
                continue;
            }
            let disc = f.discriminant();
            if is_rational_square(&disc) {
                continue;
            }
            let field = NumberField::new(&f)?;
            let beta = field.generator();
            let p2_check = n_theta_eval(&beta, &Theta::PowerSum(2))?;
            let out = TraceSquare { f, beta, p2_check, e: [e1, e2, e3], discriminant: disc };
            if !out.verify(alpha) {
                return Err(Error::Unsupported(format!("trace check failed for alpha = {}", fmt_q(alpha))));
            }
            return Ok(out);
        }
    }
    Err(Error::BoundExhausted(format!("cubic ladder of length {ladder}")))
}

/// Whether the only normal subgroup of `G` inside `H` is trivial, i.e.
/// `G` acts faithfully on the cosets of `H`.
pub fn faithfulness_check(h: &Subgroup) -> bool {
    subgroup_core(h).is_trivial()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteGroup;
    use crate::numfield::poly::q_frac;

    #[test]
    fn candidates_order() {
        let c: Vec<i64> = d_candidates(6).collect();
        assert_eq!(c, vec![-1, 2, -2, 3, -3, 5, -5, 6, -6]);
    }

    #[test]
    fn norm_fields() {
        let r = find_quadratic_norm_field(&[q(1)], &[], 100, 1000).unwrap();
        assert_eq!(r.d, -1);
        assert_eq!(r.certificates[0].witness, Some((q(1), q(0))));
        let r = find_quadratic_norm_field(&[q(-1)], &[], 100, 1000).unwrap();
        assert_eq!(r.d, 2);
        let (x, y) = r.certificates[0].witness.clone().unwrap();
        assert_eq!(&x * &x - q(2) * &y * &y, q(-1));
        assert!(r.verify());
        let r = find_quadratic_norm_field(&[q(2), q(3)], &[Place::Infinity], 10_000, 100_000).unwrap();
        assert!(r.d > 0);
        assert!(r.verify());
        let r = find_quadratic_norm_field(&[q_frac(-3, 5)], &[Place::Prime(7)], 10_000, 100_000).unwrap();
        assert!(r.verify());
        assert!(find_quadratic_norm_field(&[q(0)], &[], 10, 10).is_err());
        // the only candidate with |d| <= 1 is −1, which is not positive
        assert!(find_quadratic_norm_field(&[q(-1)], &[Place::Infinity], 1, 10).unwrap_err().is_budget());
    }

    #[test]
    fn trace_square() {
        let t = cubic_trace_square(&q(5), false, DEFAULT_LADDER).unwrap();
        assert_eq!(t.f, PolyQ::from_ints(&[-1, -2, -1, 1]));
        assert_eq!(t.discriminant, q(-31));
        assert_eq!(t.p2_check, q(5));
        for a in [q(2), q(-7), q_frac(13, 3), q(0)] {
            let t = cubic_trace_square(&a, false, DEFAULT_LADDER).unwrap();
            assert!(t.verify(&a));
        }
        let err = cubic_trace_square(&q(-1), true, DEFAULT_LADDER).unwrap_err();
        assert!(err.to_string().contains("α is not totally positive"));
        assert_eq!(cubic_trace_square(&q(3), true, 8).unwrap_err().code(), "unsupported");
    }

    #[test]
    fn faithfulness() {
        let s3 = FiniteGroup::symmetric(3);
        assert!(faithfulness_check(&s3.subgroup_generated(&[])));
        let t = s3.elements().find(|&x| s3.element_order(x) == 2).unwrap();
        assert!(faithfulness_check(&s3.subgroup_generated(&[t])));
        let d4 = FiniteGroup::dihedral(4);
        assert!(!faithfulness_check(&d4.center()));
    }
}
