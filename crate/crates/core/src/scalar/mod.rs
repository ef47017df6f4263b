//! Coefficient fields.
//!
//! Everything above this module (polynomials, Grassmann elements, super
//! matrices) is generic over [`Scalar`]. The exact engine instantiates it with
//! [`RadicalScalar`]; numeric sampling oracles use `Complex<f64>`.

mod gaussian;
pub(crate) mod modp;
mod radical;
mod rational;

pub use gaussian::GaussianRational;
pub use radical::RadicalScalar;
pub use rational::Rational;

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::AlgebraError;


/// A field with complex conjugation that contains the imaginary unit.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
{
    /// Complex conjugation. Must be an involutive ring automorphism.
    fn conj(&self) -> Self;

    /// Multiplicative inverse.
    fn try_inv(&self) -> Result<Self, AlgebraError>;

    fn from_i64(n: i64) -> Self;

    /// The imaginary unit `i`.
    fn imag_unit() -> Self;

    fn try_div(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        Ok(self.clone() * rhs.try_inv()?)
    }

    /// Image under a fixed ring map into `F_p`, when one is defined. Used
    /// only to prove non-divisibility quickly.
    fn mod_p(&self) -> Option<u64> {
        None
    }
}

/// Lossy conversion into double-precision complex numbers, used by the
/// numeric sampling oracles.
pub trait ToComplex64 {
    fn to_c64(&self) -> Complex<f64>;
}

impl ToComplex64 for Complex<f64> {
    fn to_c64(&self) -> Complex<f64> {
        *self
    }
}

impl ToComplex64 for Rational {
    fn to_c64(&self) -> Complex<f64> {
        Complex::new(self.to_f64(), 0.0)
    }
}

macro_rules! impl_float_scalar {
    ($f:ty) => {
        impl Scalar for Complex<$f> {
            fn conj(&self) -> Self {
                Complex::conj(self)
            }

            fn try_inv(&self) -> Result<Self, AlgebraError> {
                if self.is_zero() {
                    Err(AlgebraError::ZeroDivision)
                } else {
                    Ok(Complex::inv(self))
                }
            }

            fn from_i64(n: i64) -> Self {
                Complex::new(n as $f, 0.0)
            }

            fn imag_unit() -> Self {
                Complex::i()
            }
        }
    };
}

impl_float_scalar!(f32);
impl_float_scalar!(f64);

#[cfg(test)]
mod tests {
    use super::*;

    fn field_laws<S: Scalar>(a: S, b: S, c: S) {
        assert_eq!((a.clone() + b.clone()) * c.clone(), a.clone() * c.clone() + b.clone() * c.clone());
        assert_eq!(a.conj().conj(), a);
        assert_eq!((a.clone() * b.clone()).conj(), a.conj() * b.conj());
        assert_eq!(S::imag_unit() * S::imag_unit(), -S::one());
    }

    #[test]
    fn float_and_exact_scalars_share_laws() {
        field_laws(
            Complex::new(1.0f64, 2.0),
            Complex::new(-0.5, 0.25),
            Complex::new(2.0, 0.0),
        );
        field_laws(
            Complex::new(1.0f32, 2.0),
            Complex::new(-0.5, 0.25),
            Complex::new(2.0, 0.0),
        );
        field_laws(
            GaussianRational::from_i64(3),
            GaussianRational::imag_unit(),
            GaussianRational::from_i64(-2),
        );
        let r2 = RadicalScalar::sqrt_int(2).unwrap();
        field_laws(r2.clone(), RadicalScalar::imag_unit() + r2, RadicalScalar::from_i64(5));
    }

    #[test]
    fn complex_zero_has_no_inverse() {
        assert_eq!(
            Complex::<f64>::zero().try_inv(),
            Err(AlgebraError::ZeroDivision)
        );
    }
}
