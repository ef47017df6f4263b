//! Polynomials in the two coordinates `x+`, `x-`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::AlgebraError;
use crate::scalar::{RadicalScalar, Scalar};

/// One of the two complex coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    Plus,
    Minus,
}

impl Var {
    pub fn other(self) -> Self {
        match self {
            Var::Plus => Var::Minus,
            Var::Minus => Var::Plus,
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Var::Plus => "x+",
            Var::Minus => "x-",
        })
    }
}

/// `x+^plus * x-^minus`, ordered graded-lexicographically with `x+ > x-`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    pub plus: u32,
    pub minus: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { plus: 0, minus: 0 };

    pub fn new(plus: u32, minus: u32) -> Self {
        Self { plus, minus }
    }

    pub fn var(v: Var) -> Self {
        match v {
            Var::Plus => Self::new(1, 0),
            Var::Minus => Self::new(0, 1),
        }
    }

    pub fn degree(self) -> u32 {
        self.plus + self.minus
    }

    pub fn exponent(self, v: Var) -> u32 {
        match v {
            Var::Plus => self.plus,
            Var::Minus => self.minus,
        }
    }

    pub fn swapped(self) -> Self {
        Self::new(self.minus, self.plus)
    }

    pub fn divides(self, other: Self) -> bool {
        self.plus <= other.plus && self.minus <= other.minus
    }

    fn mul(self, o: Self) -> Self {
        Self::new(self.plus + o.plus, self.minus + o.minus)
    }

    fn div(self, o: Self) -> Self {
        Self::new(self.plus - o.plus, self.minus - o.minus)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.plus.cmp(&other.plus))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (v, e) in [(Var::Plus, self.plus), (Var::Minus, self.minus)] {
            match e {
                0 => {}
                1 => parts.push(v.to_string()),
                _ => parts.push(format!("{v}^{e}")),
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// Sparse polynomial with no zero coefficients stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<S> {
    terms: BTreeMap<Monomial, S>,
}

impl<S: Scalar> Default for Poly<S> {
    fn default() -> Self {
        Self { terms: BTreeMap::new() }
    }
}

impl<S: Scalar> Poly<S> {
    pub fn constant(c: S) -> Self {
        Self::monomial(c, Monomial::ONE)
    }

    pub fn monomial(c: S, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(S::one(), Monomial::var(v))
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, S)>>(it: I) -> Self {
        let mut p = Self::default();
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(m, s);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &S)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: Monomial) -> S {
        self.terms.get(&m).cloned().unwrap_or_else(S::zero)
    }

    pub fn leading(&self) -> Option<(Monomial, &S)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c))
    }

    pub fn total_degree(&self) -> u32 {
        self.leading().map_or(0, |(m, _)| m.degree())
    }

    pub fn degree_in(&self, v: Var) -> u32 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    pub fn contains(&self, v: Var) -> bool {
        self.degree_in(v) > 0
    }

    /// `Some(c)` when the polynomial is the constant `c`.
    pub fn as_constant(&self) -> Option<S> {
        match self.terms.len() {
            0 => Some(S::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::default();
        }
        Self::from_terms(self.terms.iter().map(|(m, a)| (*m, a.clone() * c.clone())))
    }

    pub fn mul_monomial(&self, m: Monomial) -> Self {
        Self { terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect() }
    }

    /// Largest monomial dividing every term.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            return Monomial::ONE;
        };
        it.fold(*first, |acc, m| Monomial::new(acc.plus.min(m.plus), acc.minus.min(m.minus)))
    }

    /// Divides every exponent by `m`; caller guarantees `m` divides each term.
    pub fn div_monomial(&self, m: Monomial) -> Self {
        Self { terms: self.terms.iter().map(|(k, c)| (k.div(m), c.clone())).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn derive(&self, v: Var) -> Self {
        Self::from_terms(self.terms.iter().filter_map(|(m, c)| {
            let e = m.exponent(v);
            (e > 0).then(|| {
                let dm = match v {
                    Var::Plus => Monomial::new(m.plus - 1, m.minus),
                    Var::Minus => Monomial::new(m.plus, m.minus - 1),
                };
                (dm, c.clone() * S::from_i64(e as i64))
            })
        }))
    }

    /// Swaps `x+ <-> x-` and conjugates every coefficient.
    pub fn conjugate(&self) -> Self {
        Self { terms: self.terms.iter().map(|(m, c)| (m.swapped(), c.conj())).collect() }
    }

    /// Divides out the leading coefficient, returning it alongside the monic
    /// result.
    pub fn make_monic(&self) -> Result<(S, Self), AlgebraError> {
        let (_, lc) = self.leading().ok_or(AlgebraError::ZeroDivision)?;
        let lc = lc.clone();
        let inv = lc.try_inv()?;
        Ok((lc, self.scale(&inv)))
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    ///
    /// Uses leading-term reduction in the graded order: if `d | self` then the
    /// leading monomial of `d` divides the leading monomial of every
    /// remainder, so the first failure proves non-divisibility.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let (dm, dc) = d.leading()?;
        if self.is_zero() {
            return Some(Self::default());
        }
        if d.degree_in(Var::Plus) > self.degree_in(Var::Plus)
            || d.degree_in(Var::Minus) > self.degree_in(Var::Minus)
        {
            return None;
        }
        if self.divides_mod_p(d) == Some(false) {
            return None;
        }
        let dc_inv = dc.try_inv().ok()?;
        let mut rem = self.clone();
        let mut quot = Self::default();
        while let Some((rm, rc)) = rem.leading() {
            if !dm.divides(rm) {
                return None;
            }
            let qm = rm.div(dm);
            let qc = rc.clone() * dc_inv.clone();
            for (m, c) in d.terms.iter() {
                rem.add_term(m.mul(qm), -(c.clone() * qc.clone()));
            }
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    /// Runs the same leading-term division on the images in `F_p`. A non-zero
    /// remainder there proves `d` does not divide `self`; `None` when some
    /// coefficient has no image or the leading coefficient of `d` vanishes.
    fn divides_mod_p(&self, d: &Self) -> Option<bool> {
        use crate::scalar::modp;
        let image = |p: &Self| -> Option<Vec<(Monomial, u64)>> {
            p.terms.iter().map(|(m, c)| Some((*m, c.mod_p()?))).filter(|t| t.map_or(true, |t| t.1 != 0)).collect()
        };
        let dt = image(d)?;
        let (dm, dc) = *dt.last()?;
        if dm != d.leading()?.0 {
            return None;
        }
        let dc_inv = modp::inv(dc)?;
        let mut rem: BTreeMap<Monomial, u64> = image(self)?.into_iter().collect();
        while let Some((&rm, &rc)) = rem.iter().next_back() {
            if !dm.divides(rm) {
                return Some(false);
            }
            let qm = rm.div(dm);
            let qc = modp::mul(rc, dc_inv);
            for (m, c) in &dt {
                let k = m.mul(qm);
                let v = modp::sub(rem.get(&k).copied().unwrap_or(0), modp::mul(*c, qc));
                if v == 0 {
                    rem.remove(&k);
                } else {
                    rem.insert(k, v);
                }
            }
        }
        Some(true)
    }

    pub fn eval(&self, x_plus: &S, x_minus: &S) -> S {
        let mut acc = S::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for _ in 0..m.plus {
                t = t * x_plus.clone();
            }
            for _ in 0..m.minus {
                t = t * x_minus.clone();
            }
            acc = acc + t;
        }
        acc
    }

    pub fn map_coeffs<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Poly<T> {
        Poly::from_terms(self.terms.iter().map(|(m, c)| (*m, f(c))))
    }
}

impl<S: Scalar> Zero for Poly<S> {
    fn zero() -> Self {
        Self::default()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<S: Scalar> One for Poly<S> {
    fn one() -> Self {
        Self::constant(S::one())
    }
}

impl<S: Scalar> Add<&Poly<S>> for &Poly<S> {
    type Output = Poly<S>;

    fn add(self, rhs: &Poly<S>) -> Poly<S> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl<S: Scalar> Sub<&Poly<S>> for &Poly<S> {
    type Output = Poly<S>;

    fn sub(self, rhs: &Poly<S>) -> Poly<S> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl<S: Scalar> Mul<&Poly<S>> for &Poly<S> {
    type Output = Poly<S>;

    fn mul(self, rhs: &Poly<S>) -> Poly<S> {
        let mut prods: Vec<(Monomial, S)> = Vec::with_capacity(self.len() * rhs.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                prods.push((ma.mul(*mb), ca.clone() * cb.clone()));
            }
        }
        prods.sort_unstable_by_key(|t| t.0);
        let mut merged: Vec<(Monomial, S)> = Vec::with_capacity(prods.len());
        for (m, c) in prods {
            match merged.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = std::mem::replace(lc, S::zero()) + c,
                _ => {
                    if merged.last().is_some_and(|t| t.1.is_zero()) {
                        merged.pop();
                    }
                    merged.push((m, c));
                }
            }
        }
        if merged.last().is_some_and(|t| t.1.is_zero()) {
            merged.pop();
        }
        Poly { terms: merged.into_iter().collect() }
    }
}

impl<S: Scalar> Neg for &Poly<S> {
    type Output = Poly<S>;

    fn neg(self) -> Poly<S> {
        Poly { terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl<S: Scalar> $tr for Poly<S> {
            type Output = Poly<S>;

            fn $f(self, rhs: Poly<S>) -> Poly<S> {
                (&self).$f(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<S: Scalar> Neg for Poly<S> {
    type Output = Poly<S>;

    fn neg(self) -> Poly<S> {
        -&self
    }
}

/// Canonical rendering: terms in decreasing graded-lex order, radicals as
/// `sqrt(d)`, e.g. `sqrt(2)*x+^2 - i*x-`.
impl fmt::Display for Poly<RadicalScalar> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let (neg, mag) = c.signed_factor();
            let body = if *m == Monomial::ONE {
                mag
            } else if mag == "1" {
                m.to_string()
            } else {
                format!("{mag}*{m}")
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

#[cfg(test)]
mod tests {
    use super::*;

    type P = Poly<RadicalScalar>;

    fn xp() -> P {
        P::var(Var::Plus)
    }

    fn xm() -> P {
        P::var(Var::Minus)
    }

    fn c(n: i64) -> P {
        P::constant(RadicalScalar::from_i64(n))
    }

    #[test]
    fn grlex_order() {
        let a = Monomial::new(2, 0);
        let b = Monomial::new(1, 1);
        let d = Monomial::new(0, 3);
        assert!(a > b);
        assert!(d > a);
        assert!(Monomial::new(1, 0) > Monomial::new(0, 1));
    }

    #[test]
    fn derivatives() {
        let p = &(&xp() * &xp()) * &xm();
        assert_eq!(p.derive(Var::Plus), &(&c(2) * &xp()) * &xm());
        assert!(xp().derive(Var::Minus).is_zero());
    }

    #[test]
    fn conjugate_swaps_and_conjugates() {
        let i = P::constant(RadicalScalar::imag_unit());
        let p = &i * &(&xp() * &xp());
        assert_eq!(p.conjugate(), -&(&i * &(&xm() * &xm())));
        let h = &c(1) + &(&xp() * &xm());
        assert_eq!(h.conjugate(), h);
    }

    #[test]
    fn exact_division() {
        let a = &xp() - &xm();
        let b = &xp() + &xm();
        let prod = &a * &b;
        assert_eq!(prod.exact_div(&a), Some(b.clone()));
        assert_eq!((&prod + &c(1)).exact_div(&a), None);
        let f = &c(1) + &(&xp() * &xm());
        let f5 = f.pow(5);
        assert_eq!(f5.exact_div(&f.pow(3)), Some(f.pow(2)));
        assert_eq!(f.pow(3).exact_div(&f5), None);
    }

    #[test]
    fn rendering() {
        let s2 = P::constant(RadicalScalar::sqrt_int(2).unwrap());
        let i = P::constant(RadicalScalar::imag_unit());
        let p = &(&s2 * &(&xp() * &xp())) - &(&i * &xm());
        assert_eq!(p.to_string(), "sqrt(2)*x+^2 - i*x-");
        let q = &(&c(-3) * &(&xp() * &xm())) + &c(1);
        assert_eq!(q.to_string(), "-3*x+*x- + 1");
        assert_eq!(P::zero().to_string(), "0");
    }

    #[test]
    fn evaluation() {
        let p = &c(1) + &(&xp() * &xm());
        let one = RadicalScalar::one();
        assert_eq!(p.eval(&one, &one), RadicalScalar::from_i64(2));
    }
}
