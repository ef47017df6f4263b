//! Exterior algebra over the four odd generators `θ+, θ-, η, η̄`.
//!
//! A basis monomial is a subset of generators, stored as a bitmask and read as
//! the product in canonical order `θ+ θ- η η̄`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::scalar::Scalar;
use crate::RatFunc;

/// Odd generators in canonical order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    ThetaPlus = 0,
    ThetaMinus = 1,
    Eta = 2,
    EtaBar = 3,
}

impl Generator {
    pub const ALL: [Generator; 4] =
        [Generator::ThetaPlus, Generator::ThetaMinus, Generator::Eta, Generator::EtaBar];

    pub fn bit(self) -> u8 {
        1 << (self as u8)
    }

    /// Image under the adjoint: `θ+ <-> θ-`, `η <-> η̄`.
    pub fn adjoint(self) -> Self {
        match self {
            Generator::ThetaPlus => Generator::ThetaMinus,
            Generator::ThetaMinus => Generator::ThetaPlus,
            Generator::Eta => Generator::EtaBar,
            Generator::EtaBar => Generator::Eta,
        }
    }

    fn from_index(i: u8) -> Self {
        Self::ALL[i as usize]
    }

    pub fn name(self) -> &'static str {
        match self {
            Generator::ThetaPlus => "theta+",
            Generator::ThetaMinus => "theta-",
            Generator::Eta => "eta",
            Generator::EtaBar => "etabar",
        }
    }
}

/// Basis masks of the four products the holomorphic ansatz uses.
pub mod basis {
    use super::Generator::*;

    pub const ONE: u8 = 0;
    /// `θ+ η`
    pub const THETA_PLUS_ETA: u8 = 1 << ThetaPlus as u8 | 1 << Eta as u8;
    /// `θ- η̄`
    pub const THETA_MINUS_ETABAR: u8 = 1 << ThetaMinus as u8 | 1 << EtaBar as u8;
    /// `θ+ θ- η η̄`, which equals `-θ+ θ- η̄ η`.
    pub const TOP: u8 = 0b1111;
}

fn generators_of(mask: u8) -> impl DoubleEndedIterator<Item = Generator> {
    (0..4u8).filter(move |i| mask & (1 << i) != 0).map(Generator::from_index)
}

/// Sign of `e_a ∧ e_b = sign · e_{a|b}`: one transposition per pair
/// `(i in a, j in b)` with `i > j`.
fn merge_sign(a: u8, b: u8) -> i64 {
    let mut swaps = 0;
    for i in 0..4 {
        if a & (1 << i) != 0 {
            swaps += (b & ((1u8 << i) - 1)).count_ones();
        }
    }
    if swaps % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Sorts a word of distinct generators into canonical order, returning the
/// mask and the permutation sign, or `None` if a generator repeats.
pub fn canonical_product(word: &[Generator]) -> Option<(u8, i64)> {
    let mut mask = 0u8;
    let mut inversions = 0;
    for (k, g) in word.iter().enumerate() {
        if mask & g.bit() != 0 {
            return None;
        }
        mask |= g.bit();
        inversions += word[..k].iter().filter(|h| *h > g).count();
    }
    Some((mask, if inversions % 2 == 0 { 1 } else { -1 }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
    Mixed,
}

/// Element of the exterior algebra with coefficients in `C`.
#[derive(Clone, Debug, PartialEq)]
pub struct Grassmann<C> {
    components: BTreeMap<u8, C>,
}

impl<C: Scalar> Default for Grassmann<C> {
    fn default() -> Self {
        Self { components: BTreeMap::new() }
    }
}

impl<C: Scalar> Grassmann<C> {
    pub fn scalar(c: C) -> Self {
        Self::basis(basis::ONE, c)
    }

    pub fn basis(mask: u8, c: C) -> Self {
        let mut components = BTreeMap::new();
        if !c.is_zero() {
            components.insert(mask & 0b1111, c);
        }
        Self { components }
    }

    pub fn generator(g: Generator) -> Self {
        Self::basis(g.bit(), C::one())
    }

    /// `c · g1 g2 ... gk` for a word in any order.
    pub fn word(c: C, word: &[Generator]) -> Self {
        match canonical_product(word) {
            Some((mask, 1)) => Self::basis(mask, c),
            Some((mask, _)) => Self::basis(mask, -c),
            None => Self::default(),
        }
    }

    pub fn one() -> Self {
        Self::scalar(C::one())
    }

    pub fn is_zero(&self) -> bool {
        self.components.is_empty()
    }

    pub fn component(&self, mask: u8) -> C {
        self.components.get(&mask).cloned().unwrap_or_else(C::zero)
    }

    /// `(mask, coefficient)` pairs in mask order.
    pub fn components(&self) -> impl Iterator<Item = (u8, &C)> {
        self.components.iter().map(|(m, c)| (*m, c))
    }

    /// Grade-0 part.
    pub fn body(&self) -> C {
        self.component(basis::ONE)
    }

    /// Everything except the grade-0 part.
    pub fn soul(&self) -> Self {
        Self {
            components: self
                .components
                .iter()
                .filter(|(m, _)| **m != 0)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    pub fn is_scalar(&self) -> bool {
        self.components.keys().all(|m| *m == 0)
    }

    fn insert_add(&mut self, mask: u8, c: C) {
        if c.is_zero() {
            return;
        }
        match self.components.remove(&mask) {
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.components.insert(mask, s);
                }
            }
            None => {
                self.components.insert(mask, c);
            }
        }
    }

    pub fn wedge(&self, rhs: &Self) -> Self {
        let mut out = Self::default();
        for (ma, ca) in &self.components {
            for (mb, cb) in &rhs.components {
                if ma & mb != 0 {
                    continue;
                }
                let prod = ca.clone() * cb.clone();
                let prod = if merge_sign(*ma, *mb) < 0 { -prod } else { prod };
                out.insert_add(ma | mb, prod);
            }
        }
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::default();
        for (m, a) in &self.components {
            out.insert_add(*m, a.clone() * c.clone());
        }
        out
    }

    /// Adjoint: reverses the generator word, maps each generator to its
    /// adjoint and conjugates the coefficient, so `(ab)† = b† a†`.
    pub fn dagger(&self) -> Self {
        let mut out = Self::default();
        for (m, c) in &self.components {
            let word: Vec<Generator> = generators_of(*m).map(Generator::adjoint).rev().collect();
            let (mask, sign) = canonical_product(&word).expect("adjoint preserves distinctness");
            let c = c.conj();
            out.insert_add(mask, if sign < 0 { -c } else { c });
        }
        out
    }

    /// Left derivative with respect to an odd generator.
    pub fn theta_derive(&self, g: Generator) -> Self {
        let mut out = Self::default();
        for (m, c) in &self.components {
            if m & g.bit() == 0 {
                continue;
            }
            let before = (m & (g.bit() - 1)).count_ones();
            let c = c.clone();
            out.insert_add(m & !g.bit(), if before % 2 == 0 { c } else { -c });
        }
        out
    }

    pub fn parity(&self) -> Parity {
        let odd = self.components.keys().any(|m| m.count_ones() % 2 == 1);
        let even = self.components.keys().any(|m| m.count_ones() % 2 == 0);
        match (even, odd) {
            (_, false) => Parity::Even,
            (false, true) => Parity::Odd,
            (true, true) => Parity::Mixed,
        }
    }

    /// Applies `f` to every coefficient, dropping components that vanish.
    pub fn map_coeffs<D: Scalar>(&self, f: impl Fn(&C) -> D) -> Grassmann<D> {
        let mut out = Grassmann::<D>::default();
        for (m, c) in &self.components {
            out.insert_add(*m, f(c));
        }
        out
    }

    pub fn try_map_coeffs<D: Scalar, E>(
        &self,
        f: impl Fn(&C) -> Result<D, E>,
    ) -> Result<Grassmann<D>, E> {
        let mut out = Grassmann::<D>::default();
        for (m, c) in &self.components {
            out.insert_add(*m, f(c)?);
        }
        Ok(out)
    }
}

impl<C: Scalar> Zero for Grassmann<C> {
    fn zero() -> Self {
        Self::default()
    }

    fn is_zero(&self) -> bool {
        self.components.is_empty()
    }
}

impl<C: Scalar> Add<&Grassmann<C>> for &Grassmann<C> {
    type Output = Grassmann<C>;

    fn add(self, rhs: &Grassmann<C>) -> Grassmann<C> {
        let mut out = self.clone();
        for (m, c) in &rhs.components {
            out.insert_add(*m, c.clone());
        }
        out
    }
}

impl<C: Scalar> Sub<&Grassmann<C>> for &Grassmann<C> {
    type Output = Grassmann<C>;

    fn sub(self, rhs: &Grassmann<C>) -> Grassmann<C> {
        let mut out = self.clone();
        for (m, c) in &rhs.components {
            out.insert_add(*m, -c.clone());
        }
        out
    }
}

impl<C: Scalar> Mul<&Grassmann<C>> for &Grassmann<C> {
    type Output = Grassmann<C>;

    fn mul(self, rhs: &Grassmann<C>) -> Grassmann<C> {
        self.wedge(rhs)
    }
}

impl<C: Scalar> Neg for &Grassmann<C> {
    type Output = Grassmann<C>;

    fn neg(self) -> Grassmann<C> {
        Grassmann { components: self.components.iter().map(|(m, c)| (*m, -c.clone())).collect() }
    }
}

impl<C: Scalar> Add for Grassmann<C> {
    type Output = Grassmann<C>;

    fn add(self, rhs: Self) -> Self {
        &self + &rhs
    }
}

impl<C: Scalar> Sub for Grassmann<C> {
    type Output = Grassmann<C>;

    fn sub(self, rhs: Self) -> Self {
        &self - &rhs
    }
}

impl<C: Scalar> Mul for Grassmann<C> {
    type Output = Grassmann<C>;

    fn mul(self, rhs: Self) -> Self {
        self.wedge(&rhs)
    }
}

impl<C: Scalar> Neg for Grassmann<C> {
    type Output = Grassmann<C>;

    fn neg(self) -> Self {
        -&self
    }
}

pub fn mask_name(mask: u8) -> String {
    generators_of(mask).map(Generator::name).collect::<Vec<_>>().join(" ")
}

/// Components in mask order, each with its basis suffix, e.g.
/// `x+ + (2*x+) theta+ eta`.
impl fmt::Display for Grassmann<RatFunc> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .components
            .iter()
            .map(|(m, c)| {
                if *m == 0 {
                    c.to_string()
                } else if c.as_constant().is_some_and(|k| num_traits::One::is_one(&k)) {
                    mask_name(*m)
                } else {
                    format!("({c}) {}", mask_name(*m))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
