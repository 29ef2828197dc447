//! Polynomials with rational coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Coefficients constant term first; no trailing zeros, so the zero
/// polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyQ {
    coeffs: Vec<Q>,
}

impl PolyQ {
    pub fn new(mut coeffs: Vec<Q>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        PolyQ { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| q(c)).collect())
    }

    pub fn zero() -> Self {
        PolyQ { coeffs: Vec::new() }
    }

    pub fn constant(c: Q) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `c·xᵏ`.
    pub fn monomial(c: Q, k: usize) -> Self {
        let mut v = vec![Q::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    pub fn x() -> Self {
        Self::monomial(Q::one(), 1)
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    /// Coefficient of `xᵏ` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Q {
        self.coeffs.get(k).cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Q {
        self.coeffs.last().cloned().unwrap_or_else(Q::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    pub fn monic(&self) -> Self {
        let l = self.leading();
        if l.is_zero() {
            return self.clone();
        }
        self.scale(&(Q::one() / l))
    }

    pub fn scale(&self, c: &Q) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn add(&self, other: &PolyQ) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) + other.coeff(k)).collect())
    }

    pub fn sub(&self, other: &PolyQ) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|k| self.coeff(k) - other.coeff(k)).collect())
    }

    pub fn mul(&self, other: &PolyQ) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut v = vec![Q::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        Self::new(v)
    }

    /// Quotient and remainder; `divisor` must be nonzero.
    pub fn div_rem(&self, divisor: &PolyQ) -> Result<(PolyQ, PolyQ)> {
        let dd = divisor
            .degree()
            .ok_or_else(|| Error::InvalidPolynomial("division by the zero polynomial".into()))?;
        let lead = divisor.leading();
        let mut rem = self.coeffs.clone();
        let n = rem.len();
        if n <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![Q::zero(); n - dd];
        for k in (dd..n).rev() {
            let c = &rem[k] / &lead;
            if c.is_zero() {
                continue;
            }
            for (j, b) in divisor.coeffs.iter().enumerate() {
                let t = &c * b;
                rem[k - dd + j] -= t;
            }
            quot[k - dd] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    pub fn rem(&self, divisor: &PolyQ) -> Result<PolyQ> {
        Ok(self.div_rem(divisor)?.1)
    }

    pub fn eval(&self, x: &Q) -> Q {
        self.coeffs.iter().rev().fold(Q::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Q::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &PolyQ) -> PolyQ {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Integer polynomial with coprime coefficients and positive leading
    /// coefficient, proportional to `self`.
    pub fn primitive_part(&self) -> Vec<BigInt> {
        if self.is_zero() {
            return Vec::new();
        }
        let lcm = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| (c * Q::from_integer(lcm.clone())).to_integer()).collect();
        let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let sign = if ints.last().expect("nonzero").is_negative() { -BigInt::one() } else { BigInt::one() };
        ints.into_iter().map(|c| c / &content * &sign).collect()
    }

    /// Resultant `Res(self, other)` by the Euclidean algorithm.
    pub fn resultant(&self, other: &PolyQ) -> Q {
        let (Some(m), Some(n)) = (self.degree(), other.degree()) else {
            return Q::zero();
        };
        if n == 0 {
            return pow(&other.leading(), m);
        }
        if m == 0 {
            return pow(&self.leading(), n);
        }
        let r = self.rem(other).expect("nonzero divisor");
        let Some(k) = r.degree() else {
            return Q::zero();
        };
        let sign = if (m * n) % 2 == 1 { -Q::one() } else { Q::one() };
        sign * pow(&other.leading(), m - k) * other.resultant(&r)
    }

    /// Discriminant of a polynomial of degree ≥ 1:
    /// `(−1)^{n(n−1)/2} Res(f, f′) / lc(f)`.
    pub fn discriminant(&self) -> Q {
        let n = self.degree().unwrap_or(0);
        let sign = if (n * n.saturating_sub(1) / 2) % 2 == 1 { -Q::one() } else { Q::one() };
        sign * self.resultant(&self.derivative()) / self.leading()
    }

    /// Some rational root, by the rational root theorem.
    pub fn rational_root(&self) -> Option<Q> {
        let c = self.primitive_part();
        if c.len() < 2 {
            return None;
        }
        if c[0].is_zero() {
            return Some(Q::zero());
        }
        let lead = c.last().expect("nonempty");
        let ps = divisors(&c[0].abs());
        let qs = divisors(&lead.abs());
        for p in &ps {
            for d in &qs {
                for s in [BigInt::one(), -BigInt::one()] {
                    let r = Q::new(p * &s, d.clone());
                    if self.eval(&r).is_zero() {
                        return Some(r);
                    }
                }
            }
        }
        None
    }

    /// Lagrange interpolation through `(xᵢ, yᵢ)` with distinct `xᵢ`.
    pub fn interpolate(points: &[(Q, Q)]) -> PolyQ {
        let mut acc = PolyQ::zero();
        for (i, (xi, yi)) in points.iter().enumerate() {
            let mut basis = PolyQ::constant(Q::one());
            let mut denom = Q::one();
            for (j, (xj, _)) in points.iter().enumerate() {
                if i != j {
                    basis = basis.mul(&PolyQ::new(vec![-xj.clone(), Q::one()]));
                    denom *= xi - xj;
                }
            }
            acc = acc.add(&basis.scale(&(yi / denom)));
        }
        acc
    }
}

pub(crate) fn pow(x: &Q, k: usize) -> Q {
    let mut acc = Q::one();
    for _ in 0..k {
        acc *= x;
    }
    acc
}

/// Positive divisors of a positive integer, ascending, by trial division.
pub(crate) fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            small.push(d.clone());
            let other = n / &d;
            if other != d {
                large.push(other);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

pub(crate) fn fmt_q(c: &Q) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for PolyQ {
    /// `x^3 - x^2 - 2*x - 1`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let mono = match k {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{k}"),
            };
            if k == 0 {
                write!(f, "{}", fmt_q(&a))?;
            } else if a.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{}*{mono}", fmt_q(&a))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for PolyQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PolyQ({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let f = PolyQ::from_ints(&[-1, -2, -1, 1]);
        assert_eq!(f.to_string(), "x^3 - x^2 - 2*x - 1");
        let g = PolyQ::from_ints(&[1, 1]);
        let (qt, r) = f.div_rem(&g).unwrap();
        assert_eq!(qt.mul(&g).add(&r), f);
        assert_eq!(r.degree(), Some(0));
        assert_eq!(PolyQ::from_ints(&[0, 0, 0]).degree(), None);
        assert!(f.div_rem(&PolyQ::zero()).is_err());
        assert_eq!(PolyQ::new(vec![q_frac(1, 2), q(-1)]).to_string(), "-x + 1/2");
    }

    #[test]
    fn resultants_and_discriminants() {
        // Res(x² − 2, x − 1) = 1 − 2 = −1 up to sign convention
        let f = PolyQ::from_ints(&[-2, 0, 1]);
        assert_eq!(f.resultant(&PolyQ::from_ints(&[-1, 1])), q(-1));
        assert_eq!(f.discriminant(), q(8));
        assert_eq!(PolyQ::from_ints(&[-1, -2, -1, 1]).discriminant(), q(-31));
        let g = PolyQ::from_ints(&[-1, 0, 1]);
        assert_eq!(g.resultant(&PolyQ::from_ints(&[1, 1])), Q::zero());
    }

    #[test]
    fn rational_roots() {
        assert_eq!(PolyQ::from_ints(&[-3, 2]).rational_root(), Some(q_frac(3, 2)));
        assert_eq!(PolyQ::from_ints(&[-1, -2, -1, 1]).rational_root(), None);
        assert_eq!(PolyQ::from_ints(&[0, 5, 1]).rational_root(), Some(Q::zero()));
    }

    #[test]
    fn interpolation_round_trip() {
        let f = PolyQ::new(vec![q_frac(1, 3), q(-2), q(0), q(5)]);
        let pts: Vec<(Q, Q)> = (0..4).map(|i| (q(i), f.eval(&q(i)))).collect();
        assert_eq!(PolyQ::interpolate(&pts), f);
    }
}
