use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::{modp, GaussianRational, Rational, Scalar, ToComplex64};
use crate::error::AlgebraError;

/// Maximum number of distinct primes under the radicals of a value that
/// [`RadicalScalar::try_inv`] will rationalize.
pub const MAX_RADICAL_PRIMES: usize = 8;

/// An element of `Q(i, sqrt(d1), sqrt(d2), ...)`, stored as `sum_d c_d * sqrt(d)`
/// over square-free positive radicands `d` with Gaussian rational `c_d`.
///
/// Radicand `1` carries the plain Gaussian rational part. Terms are sorted by
/// radicand and no stored coefficient is zero, so structural equality is value
/// equality (the square roots of distinct square-free integers are linearly
/// independent over `Q(i)`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct RadicalScalar {
    terms: Vec<(u64, GaussianRational)>,
}

/// Splits `n = s² · d` with `d` square-free.
fn squarefree_split(mut n: u64) -> (u64, u64) {
    let mut s = 1u64;
    let mut d = 1u64;
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        let mut e = 0;
        while n % p == 0 {
            n /= p;
            e += 1;
        }
        for _ in 0..e / 2 {
            s *= p;
        }
        if e % 2 == 1 {
            d *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    (s, d * n)
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl RadicalScalar {
    pub fn from_gaussian(g: GaussianRational) -> Self {
        Self::from_terms(vec![(1, g)])
    }

    pub fn from_rational(r: Rational) -> Self {
        Self::from_gaussian(GaussianRational::from_rational(r))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_gaussian(GaussianRational::from_ratio(num, den))
    }

    /// `c * sqrt(radicand)`; the radicand need not be square-free.
    pub fn term(c: GaussianRational, radicand: u64) -> Result<Self, AlgebraError> {
        if radicand == 0 {
            return Ok(Self::zero());
        }
        let (s, d) = squarefree_split(radicand);
        let s = Rational::from_integer(BigInt::from(s));
        Ok(Self::from_terms(vec![(d, c.scale(&s))]))
    }

    /// Real square root of a non-negative rational, normalized as
    /// `sqrt(p/q) = sqrt(p*q)/q`.
    pub fn sqrt(r: &Rational) -> Result<Self, AlgebraError> {
        if r.is_negative() {
            return Err(AlgebraError::NegativeRadicand(r.to_string()));
        }
        let pq = r.numer() * r.denom();
        let pq = pq
            .to_u64()
            .ok_or_else(|| AlgebraError::UnsupportedExtension(format!("radicand {r} too large")))?;
        let inv_q = Rational::new(BigInt::one(), r.denom().clone());
        Self::term(GaussianRational::from_rational(inv_q), pq)
    }

    pub fn sqrt_int(n: u64) -> Result<Self, AlgebraError> {
        Self::term(GaussianRational::one(), n)
    }

    fn from_terms(mut terms: Vec<(u64, GaussianRational)>) -> Self {
        terms.sort_by_key(|t| t.0);
        let mut out: Vec<(u64, GaussianRational)> = Vec::with_capacity(terms.len());
        for (d, c) in terms {
            match out.last_mut() {
                Some((ld, lc)) if *ld == d => *lc = &*lc + &c,
                _ => out.push((d, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Self { terms: out }
    }

    /// `(radicand, coefficient)` pairs in increasing radicand order.
    pub fn terms(&self) -> &[(u64, GaussianRational)] {
        &self.terms
    }

    /// The value as a Gaussian rational, when no radical is present.
    pub fn as_gaussian(&self) -> Option<GaussianRational> {
        match self.terms.as_slice() {
            [] => Some(GaussianRational::zero()),
            [(1, c)] => Some(c.clone()),
            _ => None,
        }
    }

    pub fn as_rational(&self) -> Option<Rational> {
        self.as_gaussian().filter(|g| g.is_real()).map(|g| g.re)
    }

    pub fn is_real(&self) -> bool {
        self.terms.iter().all(|(_, c)| c.is_real())
    }

    pub fn scale(&self, g: &GaussianRational) -> Self {
        Self::from_terms(self.terms.iter().map(|(d, c)| (*d, c * g)).collect())
    }

    /// Field automorphism `sqrt(p) -> -sqrt(p)` for a prime `p`; fixes `i`.
    fn flip_prime(&self, p: u64) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(d, c)| if d % p == 0 { (*d, -c.clone()) } else { (*d, c.clone()) })
                .collect(),
        }
    }

    fn primes(&self) -> Vec<u64> {
        let mut ps: Vec<u64> = self.terms.iter().flat_map(|(d, _)| prime_factors(*d)).collect();
        ps.sort_unstable();
        ps.dedup();
        ps
    }

    /// Re-normalizes the stored terms. Stored values are always normalized,
    /// so this is the identity; kept for property tests.
    pub fn renormalized(&self) -> Self {
        let expanded: Vec<(u64, GaussianRational)> = self.terms.clone();
        Self::from_terms(expanded)
    }

    /// Splits the value into a sign and a magnitude rendering for use inside
    /// sums. Compound values (several terms, or a complex coefficient) are
    /// returned parenthesized with a positive sign.
    pub(crate) fn signed_factor(&self) -> (bool, String) {
        match self.terms.as_slice() {
            [(_, c)] if !c.is_compound() => {
                let neg = if c.im.is_zero() { c.re.is_negative() } else { c.im.is_negative() };
                let mag = if neg { -self.clone() } else { self.clone() };
                (neg, mag.to_string())
            }
            [] => (false, "0".into()),
            [_] => (false, self.to_string()),
            _ => (false, format!("({self})")),
        }
    }
}

fn mul_radicands(m: u64, n: u64) -> (u64, u64) {
    let g = m.gcd(&n);
    (g, (m / g) * (n / g))
}

impl Zero for RadicalScalar {
    fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for RadicalScalar {
    fn one() -> Self {
        Self::from_gaussian(GaussianRational::one())
    }
}

impl Add for RadicalScalar {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        if rhs.is_zero() {
            return self;
        }
        if self.is_zero() {
            return rhs;
        }
        // both term lists are sorted by radicand: merge them
        let mut out = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let mut b = rhs.terms.into_iter().peekable();
        for (d, c) in self.terms {
            while let Some(t) = b.next_if(|t| t.0 < d) {
                out.push(t);
            }
            match b.next_if(|t| t.0 == d) {
                Some((_, e)) => {
                    let s = c + e;
                    if !s.is_zero() {
                        out.push((d, s));
                    }
                }
                None => out.push((d, c)),
            }
        }
        out.extend(b);
        Self { terms: out }
    }
}

impl Sub for RadicalScalar {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for RadicalScalar {
    type Output = Self;

    fn neg(self) -> Self {
        Self { terms: self.terms.into_iter().map(|(d, c)| (d, -c)).collect() }
    }
}

impl Mul for RadicalScalar {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<'a> Mul<&'a RadicalScalar> for &'a RadicalScalar {
    type Output = RadicalScalar;

    fn mul(self, rhs: &RadicalScalar) -> RadicalScalar {
        if let ([(1, a)], [(1, b)]) = (self.terms.as_slice(), rhs.terms.as_slice()) {
            let p = a * b;
            return if p.is_zero() { RadicalScalar::zero() } else { RadicalScalar { terms: vec![(1, p)] } };
        }
        let mut terms = Vec::with_capacity(self.terms.len() * rhs.terms.len());
        for (m, a) in &self.terms {
            for (n, b) in &rhs.terms {
                let (g, d) = mul_radicands(*m, *n);
                let c = a * b;
                let c = if g == 1 { c } else { c.scale(&Rational::from_integer(BigInt::from(g))) };
                terms.push((d, c));
            }
        }
        RadicalScalar::from_terms(terms)
    }
}

impl Scalar for RadicalScalar {
    fn conj(&self) -> Self {
        Self { terms: self.terms.iter().map(|(d, c)| (*d, c.conj())).collect() }
    }

    /// Rationalizes the denominator by multiplying through with the
    /// conjugates under `sqrt(p) -> -sqrt(p)`, one prime at a time: after
    /// folding prime `p` the running denominator is fixed by that flip, so at
    /// the end it lies in `Q(i)`.
    fn try_inv(&self) -> Result<Self, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::ZeroDivision);
        }
        if let Some(g) = self.as_gaussian() {
            return Ok(Self::from_gaussian(g.try_inv()?));
        }
        let primes = self.primes();
        if primes.len() > MAX_RADICAL_PRIMES {
            return Err(AlgebraError::UnsupportedExtension(format!(
                "{} distinct primes under radicals (limit {MAX_RADICAL_PRIMES})",
                primes.len()
            )));
        }
        let mut den = self.clone();
        let mut num = Self::one();
        for p in primes {
            let c = den.flip_prime(p);
            num = &num * &c;
            den = &den * &c;
        }
        let g = den.as_gaussian().ok_or_else(|| {
            AlgebraError::UnsupportedExtension("rationalization did not terminate".into())
        })?;
        Ok(num.scale(&g.try_inv()?))
    }

    fn from_i64(n: i64) -> Self {
        Self::from_gaussian(GaussianRational::from_i64(n))
    }

    fn imag_unit() -> Self {
        Self::from_gaussian(GaussianRational::imag_unit())
    }

    fn mod_p(&self) -> Option<u64> {
        self.terms.iter().try_fold(0, |acc, (d, c)| {
            Some(modp::add(acc, modp::mul(c.mod_p()?, modp::sqrt_radicand(*d)?)))
        })
    }
}

impl From<GaussianRational> for RadicalScalar {
    fn from(g: GaussianRational) -> Self {
        Self::from_gaussian(g)
    }
}

impl From<Rational> for RadicalScalar {
    fn from(r: Rational) -> Self {
        Self::from_rational(r)
    }
}

impl ToComplex64 for RadicalScalar {
    fn to_c64(&self) -> Complex<f64> {
        self.terms
            .iter()
            .map(|(d, c)| c.to_c64() * (*d as f64).sqrt())
            .sum()
    }
}

impl fmt::Display for RadicalScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (d, c)) in self.terms.iter().enumerate() {
            let single = RadicalScalar { terms: vec![(*d, c.clone())] };
            let (neg, body) = if c.is_compound() {
                (false, render_term(*d, c))
            } else {
                let neg = if c.im.is_zero() { c.re.is_negative() } else { c.im.is_negative() };
                let mag = if neg { -single } else { single };
                let (d, c) = &mag.terms[0];
                (neg, render_term(*d, c))
            };
            match (k, neg) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => write!(f, "{body}")?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}

fn render_term(d: u64, c: &GaussianRational) -> String {
    if d == 1 {
        c.to_string()
    } else if c.is_one() {
        format!("sqrt({d})")
    } else {
        format!("{c}*sqrt({d})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> RadicalScalar {
        RadicalScalar::from_ratio(n, d)
    }

    fn s(n: u64) -> RadicalScalar {
        RadicalScalar::sqrt_int(n).unwrap()
    }

    #[test]
    fn additive_inverse_cancels() {
        assert!((s(2) + -s(2)).is_zero());
    }

    #[test]
    fn disjoint_radicands_sum() {
        let lhs = (r(1, 1) + s(2)) + (r(2, 1) + s(3));
        assert_eq!(lhs, r(3, 1) + s(2) + s(3));
        assert_eq!(lhs.terms().len(), 3);
    }

    #[test]
    fn half_sqrt8_plus_sqrt2() {
        let v = r(1, 2) * s(8) + s(2);
        assert_eq!(v, r(2, 1) * s(2));
        // (2√2)² = 8
        assert_eq!(v.clone() * v, r(8, 1));
    }

    #[test]
    fn products() {
        assert_eq!(s(2) * s(8), r(4, 1));
        assert_eq!(s(2) * s(3), s(6));
        let i = RadicalScalar::imag_unit();
        assert_eq!((r(1, 1) + i.clone()) * (r(1, 1) - i), r(2, 1));
    }

    #[test]
    fn conjugation() {
        let i = RadicalScalar::imag_unit();
        let v = (r(2, 1) + r(3, 1) * i.clone()) * s(5);
        assert_eq!(v.conj(), (r(2, 1) - r(3, 1) * i.clone()) * s(5));
        assert_eq!(r(7, 1).conj(), r(7, 1));
        let w = i.clone() * s(2) + r(1, 1);
        assert_eq!(w.conj(), -(i * s(2)) + r(1, 1));
    }

    #[test]
    fn inversion() {
        let a = r(1, 1) + s(2);
        let inv = a.try_inv().unwrap();
        assert_eq!(inv, r(-1, 1) + s(2));
        assert_eq!((r(1, 1) + s(2)) * (r(-1, 1) + s(2)), r(1, 1));
        assert_eq!(RadicalScalar::imag_unit().try_inv().unwrap(), -RadicalScalar::imag_unit());
        assert_eq!(r(2, 1).try_inv().unwrap(), r(1, 2));
        assert_eq!(RadicalScalar::zero().try_inv(), Err(AlgebraError::ZeroDivision));
    }

    #[test]
    fn inversion_over_several_primes() {
        let a = r(1, 1) + s(2) + s(3) + s(6) * RadicalScalar::imag_unit() + s(5);
        let inv = a.try_inv().unwrap();
        assert_eq!(a * inv, RadicalScalar::one());
    }

    #[test]
    fn too_many_primes_is_rejected() {
        let primes = [2u64, 3, 5, 7, 11, 13, 17, 19, 23];
        let a = primes.iter().fold(RadicalScalar::one(), |acc, p| acc + s(*p));
        assert!(matches!(a.try_inv(), Err(AlgebraError::UnsupportedExtension(_))));
    }

    #[test]
    fn rational_radicands_normalize() {
        let v = RadicalScalar::sqrt(&Rational::new(8.into(), 3.into())).unwrap();
        assert_eq!(v, r(2, 3) * s(6));
        assert_eq!(v.to_string(), "2/3*sqrt(6)");
        let w = RadicalScalar::sqrt(&Rational::new(1.into(), 3.into())).unwrap();
        assert_eq!(w.to_string(), "1/3*sqrt(3)");
        assert!(RadicalScalar::sqrt(&Rational::from_integer((-2).into())).is_err());
    }

    #[test]
    fn rendering() {
        assert_eq!((r(1, 1) - s(2)).to_string(), "1 - sqrt(2)");
        assert_eq!((-s(3)).to_string(), "-sqrt(3)");
        let i = RadicalScalar::imag_unit();
        assert_eq!((i.clone() * s(2) + r(1, 1)).to_string(), "1 + i*sqrt(2)");
        assert_eq!(((r(1, 1) + i) * s(2)).to_string(), "(1 + i)*sqrt(2)");
    }

    #[test]
    fn squarefree() {
        assert_eq!(squarefree_split(72), (6, 2));
        assert_eq!(squarefree_split(1), (1, 1));
        assert_eq!(squarefree_split(49), (7, 1));
        assert_eq!(prime_factors(30), vec![2, 3, 5]);
    }
}
