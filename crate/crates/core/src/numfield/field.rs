//! Number fields `ℚ[x]/(f)`, characteristic polynomials, and evaluation of
//! symmetric functions at the conjugates of an element.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::poly::{divisors, q, PolyQ, Q};
use crate::error::{Error, Result};

/// `ℚ[x]/(f)` for a monic irreducible `f`.
#[derive(Clone, PartialEq, Eq)]
pub struct NumberField(Arc<PolyQ>);

impl NumberField {
    /// Normalises `f` to be monic and checks irreducibility.
    pub fn new(f: &PolyQ) -> Result<Self> {
        let d = f.degree().ok_or_else(|| Error::InvalidPolynomial("zero polynomial".into()))?;
        if d == 0 {
            return Err(Error::InvalidPolynomial("constant polynomial".into()));
        }
        let f = f.monic();
        if !is_irreducible(&f) {
            return Err(Error::Reducible(f.to_string()));
        }
        Ok(NumberField(Arc::new(f)))
    }

    pub fn polynomial(&self) -> &PolyQ {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.degree().expect("nonconstant")
    }

    /// The class of `p` modulo `f`.
    pub fn element(&self, p: &PolyQ) -> NfElement {
        NfElement { field: self.clone(), repr: p.rem(&self.0).expect("nonzero modulus") }
    }

    pub fn from_rational(&self, c: Q) -> NfElement {
        self.element(&PolyQ::constant(c))
    }

    /// The class of `x`.
    pub fn generator(&self) -> NfElement {
        self.element(&PolyQ::x())
    }
}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[x]/({})", self.0)
    }
}

/// Irreducibility over ℚ. Degrees 2 and 3 reduce to the rational root
/// test; higher degrees search for integer factors of each degree up to
/// half by Kronecker's interpolation method.
pub fn is_irreducible(f: &PolyQ) -> bool {
    let Some(d) = f.degree() else { return false };
    if d == 0 {
        return false;
    }
    if f.rational_root().is_some() {
        return d == 1;
    }
    (2..=d / 2).all(|e| !has_factor_of_degree(f, e))
}

fn has_factor_of_degree(f: &PolyQ, e: usize) -> bool {
    // pick e + 1 integer points with f nonzero (no rational roots here)
    let points: Vec<Q> = (0..=e as i64).map(|i| if i % 2 == 0 { q(-i / 2) } else { q(i / 2 + 1) }).collect();
    let prim = PolyQ::new(f.primitive_part().into_iter().map(Q::from_integer).collect());
    let values: Vec<BigInt> = points.iter().map(|x| prim.eval(x).to_integer()).collect();
    let divs: Vec<Vec<BigInt>> = values
        .iter()
        .map(|v| {
            let ds = divisors(&v.abs());
            ds.iter().flat_map(|d| [d.clone(), -d.clone()]).collect()
        })
        .collect();
    let mut choice = vec![0usize; e + 1];
    loop {
        // a factor and its negative are both found; fix the first value positive
        if divs[0][choice[0]].is_positive() {
            let pts: Vec<(Q, Q)> = points
                .iter()
                .zip(&choice)
                .enumerate()
                .map(|(i, (x, &c))| (x.clone(), Q::from_integer(divs[i][c].clone())))
                .collect();
            let g = PolyQ::interpolate(&pts);
            if g.degree() == Some(e) && g.coeffs().iter().all(|c| c.is_integer()) {
                if let Ok((_, r)) = prim.div_rem(&g) {
                    if r.is_zero() {
                        return true;
                    }
                }
            }
        }
        let mut i = 0;
        loop {
            if i > e {
                return false;
            }
            choice[i] += 1;
            if choice[i] < divs[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

/// An element of a number field, reduced modulo the defining polynomial.
#[derive(Clone, PartialEq, Eq)]
pub struct NfElement {
    field: NumberField,
    repr: PolyQ,
}

impl NfElement {
    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn repr(&self) -> &PolyQ {
        &self.repr
    }

    pub fn add(&self, other: &NfElement) -> NfElement {
        self.field.element(&self.repr.add(&other.repr))
    }

    pub fn sub(&self, other: &NfElement) -> NfElement {
        self.field.element(&self.repr.sub(&other.repr))
    }

    pub fn mul(&self, other: &NfElement) -> NfElement {
        self.field.element(&self.repr.mul(&other.repr))
    }

    pub fn is_zero(&self) -> bool {
        self.repr.is_zero()
    }

    /// Characteristic polynomial of multiplication by `self`, as the
    /// resultant `Res_x(f(x), y − repr(x))`. Computed at `d + 1` integer
    /// values of `y` and interpolated.
    pub fn char_poly(&self) -> PolyQ {
        let f = self.field.polynomial();
        let d = self.field.degree();
        let points: Vec<(Q, Q)> = (0..=d as i64)
            .map(|y| {
                let g = PolyQ::constant(q(y)).sub(&self.repr);
                (q(y), f.resultant(&g))
            })
            .collect();
        PolyQ::interpolate(&points).monic()
    }

    pub fn norm(&self) -> Q {
        n_theta_eval(self, &Theta::Product).expect("product is supported")
    }

    pub fn trace(&self) -> Q {
        n_theta_eval(self, &Theta::Sum).expect("sum is supported")
    }
}

impl fmt::Debug for NfElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod ({})", self.repr, self.field.polynomial())
    }
}

/// A symmetric function of the conjugates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Theta {
    /// `∏ xᵢ`, the norm.
    Product,
    /// `Σ xᵢ`, the trace.
    Sum,
    /// Elementary symmetric `e_k`.
    Elementary(usize),
    /// Power sum `p_k = Σ xᵢᵏ`.
    PowerSum(usize),
    /// `Σ c · e₁^{a₁} e₂^{a₂} ⋯`, each term a coefficient and exponents.
    ElementaryPolynomial(Vec<(Q, Vec<usize>)>),
}

impl FromStr for Theta {
    type Err = Error;

    /// `product`, `sum`, `e<k>`, `p<k>`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::UnsupportedTheta(s.to_string());
        match s {
            "product" | "norm" => Ok(Theta::Product),
            "sum" | "trace" => Ok(Theta::Sum),
            _ => {
                let (kind, k) = s.split_at(1.min(s.len()));
                let k: usize = k.parse().map_err(|_| bad())?;
                match kind {
                    "e" => Ok(Theta::Elementary(k)),
                    "p" => Ok(Theta::PowerSum(k)),
                    _ => Err(bad()),
                }
            }
        }
    }
}

/// `e₀ … e_d` of the conjugates, read off the characteristic polynomial.
pub fn elementary_symmetric(z: &NfElement) -> Vec<Q> {
    let cp = z.char_poly();
    let d = z.field.degree();
    (0..=d)
        .map(|k| {
            let c = cp.coeff(d - k);
            if k % 2 == 1 {
                -c
            } else {
                c
            }
        })
        .collect()
}

/// Power sums `p₀ … p_n` from elementary symmetric functions by Newton's
/// identities.
pub fn power_sums(e: &[Q], n: usize) -> Vec<Q> {
    let d = e.len() - 1;
    let ek = |k: usize| if k <= d { e[k].clone() } else { Q::zero() };
    let mut p = vec![q(d as i64)];
    for k in 1..=n {
        let mut acc = Q::zero();
        for i in 1..k {
            let t = ek(i) * &p[k - i];
            if i % 2 == 1 {
                acc += t;
            } else {
                acc -= t;
            }
        }
        let t = ek(k) * q(k as i64);
        if k % 2 == 1 {
            acc += t;
        } else {
            acc -= t;
        }
        p.push(acc);
    }
    p
}

/// `θ` evaluated at the conjugates of `z`.
pub fn n_theta_eval(z: &NfElement, theta: &Theta) -> Result<Q> {
    let e = elementary_symmetric(z);
    let d = e.len() - 1;
    let ek = |k: usize| if k <= d { e[k].clone() } else { Q::zero() };
    Ok(match theta {
        Theta::Product => ek(d),
        Theta::Sum => ek(1),
        Theta::Elementary(k) => ek(*k),
        Theta::PowerSum(k) => power_sums(&e, *k)[*k].clone(),
        Theta::ElementaryPolynomial(terms) => {
            let mut acc = Q::zero();
            for (c, exps) in terms {
                let mut t = c.clone();
                for (i, &a) in exps.iter().enumerate() {
                    for _ in 0..a {
                        t *= ek(i + 1);
                    }
                }
                acc += t;
            }
            acc
        }
    })
}

/// Whether the rational is the square of a rational.
pub fn is_rational_square(x: &Q) -> bool {
    if x.is_negative() {
        return false;
    }
    let n = x.numer();
    let d = x.denom();
    is_square(n) && is_square(d)
}

pub(crate) fn is_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &r * &r == *n
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numfield::poly::q_frac;

    fn sqrt2() -> NumberField {
        NumberField::new(&PolyQ::from_ints(&[-2, 0, 1])).unwrap()
    }

    #[test]
    fn char_poly_examples() {
        let k = sqrt2();
        let z = k.element(&PolyQ::from_ints(&[1, 1]));
        assert_eq!(z.char_poly(), PolyQ::from_ints(&[-1, -2, 1]));
        let c = k.from_rational(q_frac(3, 2));
        assert_eq!(c.char_poly(), PolyQ::new(vec![q_frac(9, 4), q(-3), q(1)]));
        let f = PolyQ::from_ints(&[-1, -2, -1, 1]);
        let cubic = NumberField::new(&f).unwrap();
        assert_eq!(cubic.generator().char_poly(), f);
    }

    #[test]
    fn theta_examples() {
        let k = sqrt2();
        let z = k.element(&PolyQ::from_ints(&[1, 1]));
        assert_eq!(n_theta_eval(&z, &Theta::Product).unwrap(), q(-1));
        assert_eq!(n_theta_eval(&z, &Theta::PowerSum(2)).unwrap(), q(6));
        assert_eq!(n_theta_eval(&z, &Theta::PowerSum(0)).unwrap(), q(2));
        assert_eq!(z.trace(), q(2));
        // e₁² − 2e₂ = p₂
        let poly = Theta::ElementaryPolynomial(vec![(q(1), vec![2]), (q(-2), vec![0, 1])]);
        assert_eq!(n_theta_eval(&z, &poly).unwrap(), q(6));
        assert!("q3".parse::<Theta>().is_err());
        assert_eq!("p2".parse::<Theta>().unwrap(), Theta::PowerSum(2));
    }

    #[test]
    fn irreducibility() {
        assert!(NumberField::new(&PolyQ::from_ints(&[-1, 0, 1])).is_err());
        assert!(is_irreducible(&PolyQ::from_ints(&[1, 0, 0, 0, 1])));
        // x⁴ + 4 = (x² + 2x + 2)(x² − 2x + 2)
        assert!(!is_irreducible(&PolyQ::from_ints(&[4, 0, 0, 0, 1])));
        // (x² + 1)(x³ + x + 1)
        let p = PolyQ::from_ints(&[1, 0, 1]).mul(&PolyQ::from_ints(&[1, 1, 0, 1]));
        assert!(!is_irreducible(&p));
        assert!(is_irreducible(&PolyQ::from_ints(&[-2, 0, 0, 0, 0, 1])));
        assert!(is_irreducible(&PolyQ::from_ints(&[1, -1, 1, -1, 1])));
    }
}
