//! Seeded generators for random test instances and numeric sample points.

use num_complex::Complex64;
use num_traits::Zero;
use rand::{Rng, SeedableRng};

use crate::grassmann::Generator;
use crate::poly::{Monomial, Var};
use crate::scalar::{GaussianRational, RadicalScalar, Rational};
use crate::superfield::MacFarlaneW;
use crate::{GrassmannElem, Poly, RatFunc, SuperMatrix};

pub use rand_chacha::ChaCha8Rng as SeededRng;

pub fn rng(seed: u64) -> SeededRng {
    SeededRng::seed_from_u64(seed)
}

/// Small Gaussian integer, occasionally times `sqrt(2)`.
pub fn coeff(rng: &mut impl Rng) -> RadicalScalar {
    let g = GaussianRational::new(
        Rational::from_integer(rng.gen_range(-3..=3).into()),
        Rational::from_integer(rng.gen_range(-2..=2).into()),
    );
    if rng.gen_bool(0.15) {
        RadicalScalar::term(g, 2).expect("2 is squarefree")
    } else {
        RadicalScalar::from_gaussian(g)
    }
}

fn nonzero_coeff(rng: &mut impl Rng) -> RadicalScalar {
    loop {
        let c = coeff(rng);
        if !c.is_zero() {
            return c;
        }
    }
}

/// Random polynomial in `x+` alone of degree at most `deg`.
pub fn holomorphic_poly(rng: &mut impl Rng, deg: u32) -> RatFunc {
    let mut terms = Vec::new();
    for e in 0..=deg {
        if rng.gen_bool(0.6) {
            terms.push((Monomial::new(e, 0), coeff(rng)));
        }
    }
    RatFunc::from_poly(Poly::from_terms(terms))
}

/// Random polynomial in `x+`, `x-` with total degree at most `deg`.
pub fn poly(rng: &mut impl Rng, deg: u32) -> RatFunc {
    let mut terms = Vec::new();
    for p in 0..=deg {
        for m in 0..=deg - p {
            if rng.gen_bool(0.35) {
                terms.push((Monomial::new(p, m), coeff(rng)));
            }
        }
    }
    RatFunc::from_poly(Poly::from_terms(terms))
}

pub fn holomorphic_matrix(rng: &mut impl Rng, rows: usize, cols: usize, deg: u32) -> SuperMatrix {
    SuperMatrix::from_fn(rows, cols, |_, _| GrassmannElem::scalar(holomorphic_poly(rng, deg)))
}

/// Random `W = (I_M; K) + iθ+η A` with holomorphic `K`, `A` of degree `≤ deg`.
pub fn macfarlane(rng: &mut impl Rng, m: usize, n: usize, deg: u32) -> MacFarlaneW {
    let k = holomorphic_matrix(rng, n - m, m, deg);
    let a = holomorphic_matrix(rng, n, m, deg);
    MacFarlaneW::from_k(k, a).expect("generated data is holomorphic")
}

/// Random Grassmann element over all 16 basis monomials with coefficients of
/// total degree `≤ deg`.
pub fn grassmann(rng: &mut impl Rng, deg: u32) -> GrassmannElem {
    let mut g = GrassmannElem::default();
    for mask in 0u8..16 {
        if rng.gen_bool(0.4) {
            g = &g + &GrassmannElem::basis(mask, poly(rng, deg));
        }
    }
    g
}

pub fn superfield_matrix(rng: &mut impl Rng, rows: usize, cols: usize, deg: u32) -> SuperMatrix {
    SuperMatrix::from_fn(rows, cols, |_, _| grassmann(rng, deg))
}

/// Even `M × M` matrix with constant invertible body and an even soul.
pub fn even_invertible(rng: &mut impl Rng, m: usize, deg: u32) -> SuperMatrix {
    // upper triangular body with non-zero constant diagonal
    let body = SuperMatrix::from_fn(m, m, |i, j| {
        if i == j {
            GrassmannElem::scalar(RatFunc::constant(nonzero_coeff(rng)))
        } else if i < j {
            GrassmannElem::scalar(holomorphic_poly(rng, deg))
        } else {
            GrassmannElem::default()
        }
    });
    let even_masks = [
        Generator::ThetaPlus.bit() | Generator::Eta.bit(),
        Generator::ThetaMinus.bit() | Generator::EtaBar.bit(),
        Generator::ThetaPlus.bit() | Generator::ThetaMinus.bit(),
        0b1111,
    ];
    let soul = SuperMatrix::from_fn(m, m, |_, _| {
        let mut g = GrassmannElem::default();
        for &mask in &even_masks {
            if rng.gen_bool(0.4) {
                g = &g + &GrassmannElem::basis(mask, poly(rng, deg.min(1)));
            }
        }
        g
    });
    body.add(&soul).expect("same shape")
}

/// Complex sample point with both parts in `[-2, 2]`.
pub fn point(rng: &mut impl Rng) -> Complex64 {
    Complex64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0))
}

/// Uniformly picked entry of `choices`.
pub fn pick<T: Copy>(rng: &mut impl Rng, choices: &[T]) -> T {
    choices[rng.gen_range(0..choices.len())]
}

/// Uniform random direction.
pub fn direction(rng: &mut impl Rng) -> Var {
    if rng.gen_bool(0.5) {
        Var::Plus
    } else {
        Var::Minus
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_generation_is_deterministic() {
        let a = macfarlane(&mut rng(7), 2, 4, 3);
        let b = macfarlane(&mut rng(7), 2, 4, 3);
        assert_eq!(a, b);
        assert_eq!(a.n(), 4);
    }

    #[test]
    fn even_invertible_has_invertible_body() {
        let mut r = rng(3);
        for _ in 0..5 {
            let g = even_invertible(&mut r, 2, 2);
            assert!(g.is_even());
            let inv = g.invert_even().unwrap();
            assert_eq!(g.matmul(&inv).unwrap(), SuperMatrix::identity(2));
        }
    }
}
