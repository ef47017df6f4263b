//! Rational functions in `x+`, `x-`.
//!
//! The denominator is kept as a product of monic factors with multiplicities,
//! exactly as the factors arose (no multivariate factorization or GCD). After
//! every operation the numerator is tested for exact divisibility by each
//! stored factor, which cancels the common factors produced by sums over a
//! shared denominator. Equality is decided by cross-multiplication.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::AlgebraError;
use crate::poly::{Monomial, Poly, Var};
use crate::scalar::{RadicalScalar, Scalar, ToComplex64};

#[derive(Clone, Debug)]
pub struct RatFunc<S> {
    num: Poly<S>,
    /// Distinct monic non-constant factors with positive exponents.
    den: Vec<(Poly<S>, u32)>,
}

impl<S: Scalar> RatFunc<S> {
    pub fn from_poly(p: Poly<S>) -> Self {
        Self { num: p, den: Vec::new() }
    }

    pub fn constant(c: S) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    pub fn var(v: Var) -> Self {
        Self::from_poly(Poly::var(v))
    }

    /// `num / den`.
    pub fn new(num: Poly<S>, den: Poly<S>) -> Result<Self, AlgebraError> {
        Ok(Self::from_poly(num) * Self::from_poly(den).try_inv()?)
    }

    pub fn numerator(&self) -> &Poly<S> {
        &self.num
    }

    /// Denominator factors `(monic factor, exponent)`.
    pub fn denominator_factors(&self) -> &[(Poly<S>, u32)] {
        &self.den
    }

    pub fn denominator(&self) -> Poly<S> {
        expand(&self.den)
    }

    pub fn as_poly(&self) -> Option<&Poly<S>> {
        self.den.is_empty().then_some(&self.num)
    }

    pub fn as_constant(&self) -> Option<S> {
        self.as_poly().and_then(Poly::as_constant)
    }

    /// True when neither numerator nor denominator involves `v`.
    pub fn is_free_of(&self, v: Var) -> bool {
        !self.num.contains(v) && self.den.iter().all(|(f, _)| !f.contains(v))
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { num: self.num.scale(c), den: self.den.clone() }
    }

    /// Builds `num / prod(den)` and cancels what exact division allows.
    fn normalized(mut num: Poly<S>, den: Vec<(Poly<S>, u32)>) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let mut out = Vec::with_capacity(den.len());
        for (f, mut e) in den {
            while e > 0 {
                match num.exact_div(&f) {
                    Some(q) => {
                        num = q;
                        e -= 1;
                    }
                    None => break,
                }
            }
            if e > 0 {
                out.push((f, e));
            }
        }
        Self { num, den: out }
    }

    /// Least common multiple of both factor lists, plus the cofactors that
    /// lift each side onto it.
    fn common_denominator(&self, rhs: &Self) -> (Vec<(Poly<S>, u32)>, Poly<S>, Poly<S>) {
        let mut lcm = self.den.clone();
        for (f, e) in &rhs.den {
            match lcm.iter_mut().find(|(g, _)| g == f) {
                Some((_, le)) => *le = (*le).max(*e),
                None => lcm.push((f.clone(), *e)),
            }
        }
        let cofactor = |side: &[(Poly<S>, u32)]| {
            let missing: Vec<(Poly<S>, u32)> = lcm
                .iter()
                .filter_map(|(f, e)| {
                    let have = side.iter().find(|(g, _)| g == f).map_or(0, |(_, k)| *k);
                    (*e > have).then(|| (f.clone(), e - have))
                })
                .collect();
            expand(&missing)
        };
        let ca = cofactor(&self.den);
        let cb = cofactor(&rhs.den);
        (lcm, ca, cb)
    }

    fn add_impl(&self, rhs: &Self, negate: bool) -> Self {
        if self.den.is_empty() && rhs.den.is_empty() {
            let num = if negate { &self.num - &rhs.num } else { &self.num + &rhs.num };
            return Self::from_poly(num);
        }
        let (lcm, ca, cb) = self.common_denominator(rhs);
        let a = &self.num * &ca;
        let b = &rhs.num * &cb;
        let num = if negate { &a - &b } else { &a + &b };
        Self::normalized(num, lcm)
    }

    fn mul_impl(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut den = self.den.clone();
        for (f, e) in &rhs.den {
            match den.iter_mut().find(|(g, _)| g == f) {
                Some((_, k)) => *k += e,
                None => den.push((f.clone(), *e)),
            }
        }
        let num = &self.num * &rhs.num;
        if self.den.is_empty() && rhs.den.is_empty() {
            return Self::from_poly(num);
        }
        Self::normalized(num, den)
    }

    /// Partial derivative by the quotient rule, over `den * prod(f_i)`.
    pub fn derive(&self, v: Var) -> Self {
        if self.den.is_empty() {
            return Self::from_poly(self.num.derive(v));
        }
        let factors: Vec<&Poly<S>> = self.den.iter().map(|(f, _)| f).collect();
        let mut num = &self.num.derive(v) * &expand_refs(&factors);
        for (i, (f, e)) in self.den.iter().enumerate() {
            let df = f.derive(v);
            if df.is_zero() {
                continue;
            }
            let others: Vec<&Poly<S>> =
                factors.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, f)| *f).collect();
            let term = &(&self.num * &df) * &expand_refs(&others);
            num = &num - &term.scale(&S::from_i64(*e as i64));
        }
        let den = self.den.iter().map(|(f, e)| (f.clone(), e + 1)).collect();
        Self::normalized(num, den)
    }

    /// Swaps `x+ <-> x-` and conjugates coefficients.
    pub fn conjugate(&self) -> Self {
        let mut num = self.num.conjugate();
        let mut den = Vec::with_capacity(self.den.len());
        for (f, e) in &self.den {
            let (lc, g) = f.conjugate().make_monic().expect("stored factors are non-zero");
            let inv = lc.try_inv().expect("leading coefficient is non-zero");
            for _ in 0..*e {
                num = num.scale(&inv);
            }
            den.push((g, *e));
        }
        Self { num, den }
    }

    pub fn eval(&self, x_plus: &S, x_minus: &S) -> Result<S, AlgebraError> {
        let d = self
            .den
            .iter()
            .fold(S::one(), |acc, (f, e)| {
                let v = f.eval(x_plus, x_minus);
                (0..*e).fold(acc, |a, _| a * v.clone())
            });
        if d.is_zero() {
            return Err(AlgebraError::PoleAtPoint);
        }
        Ok(self.num.eval(x_plus, x_minus) * d.try_inv()?)
    }

    /// Replaces every coefficient, keeping the factor structure. The caller
    /// must use an injective ring map so the factors stay non-zero.
    pub fn map_coeffs<T: Scalar>(&self, f: impl Fn(&S) -> T) -> RatFunc<T> {
        RatFunc {
            num: self.num.map_coeffs(&f),
            den: self.den.iter().map(|(p, e)| (p.map_coeffs(&f), *e)).collect(),
        }
    }
}

impl<S: Scalar + ToComplex64> RatFunc<S> {
    /// Floating-point evaluation at complex `(x+, x-)`.
    pub fn eval_c64(&self, x_plus: Complex<f64>, x_minus: Complex<f64>) -> Result<Complex<f64>, AlgebraError> {
        let num = self.num.map_coeffs(|c| c.to_c64()).eval(&x_plus, &x_minus);
        let mut den = Complex::new(1.0, 0.0);
        for (f, e) in &self.den {
            let v = f.map_coeffs(|c| c.to_c64()).eval(&x_plus, &x_minus);
            den *= v.powu(*e);
        }
        if den.norm() == 0.0 {
            return Err(AlgebraError::PoleAtPoint);
        }
        Ok(num / den)
    }
}

fn expand<S: Scalar>(factors: &[(Poly<S>, u32)]) -> Poly<S> {
    let mut acc = Poly::one();
    for (f, e) in factors {
        for _ in 0..*e {
            acc = &acc * f;
        }
    }
    acc
}

fn expand_refs<S: Scalar>(factors: &[&Poly<S>]) -> Poly<S> {
    factors.iter().fold(Poly::one(), |acc, f| &acc * *f)
}

/// Pushes `p^e` into a factor list, splitting off monomial content and the
/// leading coefficient. Returns the scalar that must multiply the numerator.
fn push_factor<S: Scalar>(
    den: &mut Vec<(Poly<S>, u32)>,
    p: &Poly<S>,
    e: u32,
) -> Result<S, AlgebraError> {
    let mc = p.monomial_content();
    let rest = p.div_monomial(mc);
    let mut bump = |f: Poly<S>, k: u32| {
        if k == 0 {
            return;
        }
        match den.iter_mut().find(|(g, _)| *g == f) {
            Some((_, have)) => *have += k,
            None => den.push((f, k)),
        }
    };
    bump(Poly::var(Var::Plus), mc.plus * e);
    bump(Poly::var(Var::Minus), mc.minus * e);
    let (lc, monic) = rest.make_monic()?;
    if monic.as_constant().is_none() {
        bump(monic, e);
    }
    let inv = lc.try_inv()?;
    Ok((0..e).fold(S::one(), |a, _| a * inv.clone()))
}

impl<S: Scalar> PartialEq for RatFunc<S> {
    fn eq(&self, other: &Self) -> bool {
        if self.den.is_empty() && other.den.is_empty() {
            return self.num == other.num;
        }
        let (_, ca, cb) = self.common_denominator(other);
        &self.num * &ca == &other.num * &cb
    }
}

impl<S: Scalar> Zero for RatFunc<S> {
    fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl<S: Scalar> One for RatFunc<S> {
    fn one() -> Self {
        Self::from_poly(Poly::one())
    }
}

impl<S: Scalar> Add<&RatFunc<S>> for &RatFunc<S> {
    type Output = RatFunc<S>;

    fn add(self, rhs: &RatFunc<S>) -> RatFunc<S> {
        self.add_impl(rhs, false)
    }
}

impl<S: Scalar> Sub<&RatFunc<S>> for &RatFunc<S> {
    type Output = RatFunc<S>;

    fn sub(self, rhs: &RatFunc<S>) -> RatFunc<S> {
        self.add_impl(rhs, true)
    }
}

impl<S: Scalar> Mul<&RatFunc<S>> for &RatFunc<S> {
    type Output = RatFunc<S>;

    fn mul(self, rhs: &RatFunc<S>) -> RatFunc<S> {
        self.mul_impl(rhs)
    }
}

impl<S: Scalar> Neg for &RatFunc<S> {
    type Output = RatFunc<S>;

    fn neg(self) -> RatFunc<S> {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl<S: Scalar> $tr for RatFunc<S> {
            type Output = RatFunc<S>;

            fn $f(self, rhs: RatFunc<S>) -> RatFunc<S> {
                (&self).$f(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<S: Scalar> Neg for RatFunc<S> {
    type Output = RatFunc<S>;

    fn neg(self) -> RatFunc<S> {
        -&self
    }
}

impl<S: Scalar> Scalar for RatFunc<S> {
    fn conj(&self) -> Self {
        self.conjugate()
    }

    fn try_inv(&self) -> Result<Self, AlgebraError> {
        if self.num.is_zero() {
            return Err(AlgebraError::ZeroDivision);
        }
        let mut den = Vec::new();
        let c = push_factor(&mut den, &self.num, 1)?;
        let num = expand(&self.den).scale(&c);
        Ok(Self::normalized(num, den))
    }

    fn from_i64(n: i64) -> Self {
        Self::constant(S::from_i64(n))
    }

    fn imag_unit() -> Self {
        Self::constant(S::imag_unit())
    }
}

impl<S: Scalar> From<Poly<S>> for RatFunc<S> {
    fn from(p: Poly<S>) -> Self {
        Self::from_poly(p)
    }
}

impl From<RadicalScalar> for RatFunc<RadicalScalar> {
    fn from(c: RadicalScalar) -> Self {
        Self::constant(c)
    }
}

/// Canonical rendering: a polynomial, or `(num)/(factor^e*...)`.
impl fmt::Display for RatFunc<RadicalScalar> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            return write!(f, "{}", self.num);
        }
        let den: Vec<String> = self
            .den
            .iter()
            .map(|(p, e)| {
                let base = if p.len() == 1 { p.to_string() } else { format!("({p})") };
                if *e == 1 {
                    base
                } else {
                    format!("{base}^{e}")
                }
            })
            .collect();
        if let [(p, 1)] = self.den.as_slice() {
            return write!(f, "({})/({p})", self.num);
        }
        write!(f, "({})/({})", self.num, den.join("*"))
    }
}

/// Monomial helper used by generators: `c * x+^m`.
pub fn holomorphic_monomial<S: Scalar>(c: S, m: u32) -> RatFunc<S> {
    RatFunc::from_poly(Poly::monomial(c, Monomial::new(m, 0)))
}
