//! Places of ℚ and Hilbert symbols.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use super::poly::Q;
use crate::error::{Error, Result};

/// A place of ℚ: a prime or the real place.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Place {
    Infinity,
    Prime(u64),
}

impl Place {
    /// Checks primality of `p`.
    pub fn prime(p: u64) -> Result<Place> {
        if is_prime(p) {
            Ok(Place::Prime(p))
        } else {
            Err(Error::NotPrime(p.to_string()))
        }
    }
}

impl Ord for Place {
    /// `∞` first, then primes ascending.
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Place::Infinity, Place::Infinity) => Ordering::Equal,
            (Place::Infinity, _) => Ordering::Less,
            (_, Place::Infinity) => Ordering::Greater,
            (Place::Prime(a), Place::Prime(b)) => a.cmp(b),
        }
    }
}

impl PartialOrd for Place {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Infinity => write!(f, "inf"),
            Place::Prime(p) => write!(f, "{p}"),
        }
    }
}

impl FromStr for Place {
    type Err = Error;

    fn from_str(s: &str) -> Result<Place> {
        match s {
            "inf" | "infinity" | "∞" => Ok(Place::Infinity),
            _ => Place::prime(s.parse().map_err(|_| Error::Parse(format!("place {s:?}")))?),
        }
    }
}

impl Serialize for Place {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Place::Infinity => s.serialize_str("inf"),
            Place::Prime(p) => s.serialize_u64(*p),
        }
    }
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime divisors of a nonzero integer, ascending, by trial division.
pub fn prime_factors(n: &BigInt) -> Vec<u64> {
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut d = 2u64;
    while BigInt::from(d) * BigInt::from(d) <= n {
        let bd = BigInt::from(d);
        if (&n % &bd).is_zero() {
            out.push(d);
            while (&n % &bd).is_zero() {
                n /= &bd;
            }
        }
        d += 1;
    }
    if n > BigInt::one() {
        out.push(n.to_u64().expect("prime factor fits in 64 bits"));
    }
    out
}

/// `(v_p(n), n / p^{v_p(n)})` for nonzero `n`.
pub fn split_valuation(n: &BigInt, p: u64) -> (u32, BigInt) {
    let bp = BigInt::from(p);
    let mut n = n.clone();
    let mut v = 0;
    while (&n % &bp).is_zero() {
        n /= &bp;
        v += 1;
    }
    (v, n)
}

/// A rational `a` represented by the integer `num·den`, equal to `a` up to
/// a square factor.
fn square_class_integer(a: &Q) -> BigInt {
    a.numer() * a.denom()
}

/// Legendre symbol `(u/p)` for odd prime `p` and `u` prime to `p`.
fn legendre(u: &BigInt, p: u64) -> i8 {
    let bp = BigInt::from(p);
    let r = u.mod_floor(&bp).modpow(&BigInt::from((p - 1) / 2), &bp);
    if r.is_one() {
        1
    } else {
        -1
    }
}

/// `(a, b)_v`: `+1` iff `z² = a x² + b y²` has a nonzero solution over
/// `ℚ_v`. Closed form: sign rule at `∞`, Legendre symbols of unit parts at
/// odd `p`, parity formulas at `2`.
pub fn hilbert_symbol(a: &Q, b: &Q, v: Place) -> Result<i8> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroArgument);
    }
    let (a, b) = (square_class_integer(a), square_class_integer(b));
    Ok(match v {
        Place::Infinity => {
            if a.is_negative() && b.is_negative() {
                -1
            } else {
                1
            }
        }
        Place::Prime(2) => {
            let (alpha, u) = split_valuation(&a, 2);
            let (beta, w) = split_valuation(&b, 2);
            let eps = |x: &BigInt| ((x - 1i32) / 2i32).mod_floor(&BigInt::from(2)).is_one();
            let omega = |x: &BigInt| ((x * x - 1i32) / 8i32).mod_floor(&BigInt::from(2)).is_one();
            let mut e = eps(&u) && eps(&w);
            if alpha % 2 == 1 && omega(&w) {
                e = !e;
            }
            if beta % 2 == 1 && omega(&u) {
                e = !e;
            }
            if e {
                -1
            } else {
                1
            }
        }
        Place::Prime(p) => {
            if !is_prime(p) {
                return Err(Error::NotPrime(p.to_string()));
            }
            let (alpha, u) = split_valuation(&a, p);
            let (beta, w) = split_valuation(&b, p);
            let mut s: i8 = 1;
            if alpha % 2 == 1 && beta % 2 == 1 && (p - 1) / 2 % 2 == 1 {
                s = -s;
            }
            if beta % 2 == 1 {
                s *= legendre(&u, p);
            }
            if alpha % 2 == 1 {
                s *= legendre(&w, p);
            }
            s
        }
    })
}

/// `∞`, `2`, and every prime dividing a numerator or denominator.
pub fn relevant_places(values: &[&Q]) -> Vec<Place> {
    let mut primes = vec![2u64];
    for x in values {
        primes.extend(prime_factors(x.numer()));
        primes.extend(prime_factors(x.denom()));
    }
    primes.sort_unstable();
    primes.dedup();
    std::iter::once(Place::Infinity).chain(primes.into_iter().map(Place::Prime)).collect()
}

/// The product of `(a, b)_v` over all places where it can be `−1` is `+1`.
pub fn product_formula_check(a: &Q, b: &Q) -> Result<bool> {
    let mut prod = 1i8;
    for v in relevant_places(&[a, b]) {
        prod *= hilbert_symbol(a, b, v)?;
    }
    Ok(prod == 1)
}

/// Whether a nonzero rational is a square in `ℚ_v`.
pub fn is_local_square(x: &Q, v: Place) -> Result<bool> {
    if x.is_zero() {
        return Err(Error::ZeroArgument);
    }
    Ok(match v {
        Place::Infinity => x.is_positive(),
        Place::Prime(p) => {
            let (vn, un) = split_valuation(x.numer(), p);
            let (vd, ud) = split_valuation(x.denom(), p);
            if (vn + vd) % 2 == 1 {
                return Ok(false);
            }
            let u = un * ud;
            if p == 2 {
                u.mod_floor(&BigInt::from(8)).is_one()
            } else {
                legendre(&u, p) == 1
            }
        }
    })
}
