//! Concrete solutions: the Veronese family of `CP^{N-1}`, the special
//! `G(2,4)` solution and its reduction, and the four constant-curvature
//! bosonic `G(2,4)` maps.

use num_traits::Zero;

use crate::error::AlgebraError;
use crate::poly::{Monomial, Var};
use crate::ratfunc::holomorphic_monomial;
use crate::scalar::{RadicalScalar, Rational, Scalar};
use crate::superfield::MacFarlaneW;
use crate::{GrassmannElem, RatFunc, SuperMatrix};

/// Free data of the Veronese family: `N` and the holomorphic `a₀`, `a₁`.
#[derive(Clone, Debug, PartialEq)]
pub struct VeroneseData {
    pub n: usize,
    pub a0: RatFunc,
    pub a1: RatFunc,
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn column(entries: Vec<RatFunc>) -> SuperMatrix {
    SuperMatrix::from_fn(entries.len(), 1, |i, _| GrassmannElem::scalar(entries[i].clone()))
}

fn check_data(d: &VeroneseData) -> Result<(), AlgebraError> {
    if d.n < 2 {
        return Err(AlgebraError::DimensionMismatch(format!("Veronese needs N >= 2, got {}", d.n)));
    }
    for (name, a) in [("a0", &d.a0), ("a1", &d.a1)] {
        if !a.is_free_of(Var::Minus) {
            return Err(AlgebraError::NonHolomorphic(format!("{name} = {a}")));
        }
    }
    Ok(())
}

/// `uₙ = sqrt(C(N-1, n)) x+ⁿ`, `n = 0..N-1`.
pub fn veronese_u(n: usize) -> Vec<RatFunc> {
    (0..n as u64)
        .map(|k| {
            let c = RadicalScalar::sqrt_int(binomial(n as u64 - 1, k)).expect("positive radicand");
            holomorphic_monomial(c, k as u32)
        })
        .collect()
}

fn inv_sqrt(n: u64) -> RadicalScalar {
    RadicalScalar::sqrt_int(n).and_then(|s| s.try_inv()).expect("n >= 1")
}

/// `u + iθ+η A` with `aₙ = -a₀(n-1)uₙ + a₁ ∂+uₙ / sqrt(N-1)`.
pub fn veronese_w(d: &VeroneseData) -> Result<MacFarlaneW, AlgebraError> {
    check_data(d)?;
    let u = veronese_u(d.n);
    let s = RatFunc::constant(inv_sqrt(d.n as u64 - 1));
    let a = u
        .iter()
        .enumerate()
        .map(|(k, un)| {
            let shift = RatFunc::from_i64(k as i64 - 1);
            &(&(-d.a0.clone()) * &(&shift * un)) + &(&(&d.a1 * &s) * &un.derive(Var::Plus))
        })
        .collect();
    MacFarlaneW::new(column(u), column(a))
}

/// `a_Rn = (n / sqrt(N-1)) (uₙ / x+) (a₁ - a₀ sqrt(N-1) x+)`, `a_R0 = 0`.
pub fn veronese_reduced(d: &VeroneseData) -> Result<MacFarlaneW, AlgebraError> {
    check_data(d)?;
    let u = veronese_u(d.n);
    let a = veronese_eta(d)?;
    let s = inv_sqrt(d.n as u64 - 1);
    let a_r = u
        .iter()
        .enumerate()
        .map(|(k, un)| {
            if k == 0 {
                return RatFunc::zero();
            }
            let over_x = un.as_poly().expect("polynomial").div_monomial(Monomial::new(1, 0));
            let c = s.clone() * RadicalScalar::from_ratio(k as i64, 1);
            &RatFunc::from_poly(over_x).scale(&c) * &a
        })
        .collect();
    MacFarlaneW::new(column(u), column(a_r))
}

/// `η̃ = a₁ - a₀ sqrt(N-1) x+`.
pub fn veronese_eta(d: &VeroneseData) -> Result<RatFunc, AlgebraError> {
    check_data(d)?;
    let root = RadicalScalar::sqrt_int(d.n as u64 - 1)?;
    Ok(&d.a1 - &(&d.a0 * &holomorphic_monomial(root, 1)))
}

/// Parameters of the special `G(2,4)` solution with `K₁ = [[x+, 0], [0, 0]]`.
#[derive(Clone, Debug, PartialEq)]
pub struct G24Params {
    pub alpha: [[RatFunc; 2]; 2],
    pub beta11: RatFunc,
    pub b0: RadicalScalar,
    pub b1: RadicalScalar,
    pub c0: RadicalScalar,
    pub c1: RadicalScalar,
    pub d0: RadicalScalar,
}

impl G24Params {
    /// `α = [[1, x+], [0, 2]]`, `β₁₁ = x+²`, `b₀ = 1`, `b₁ = 2`, `c₀ = 3`,
    /// `c₁ = 4`, `d₀ = 5`.
    pub fn sample() -> Self {
        let xp = RatFunc::var(Var::Plus);
        let k = |n| RatFunc::from_i64(n);
        let r = |n| RadicalScalar::from_ratio(n, 1);
        Self {
            alpha: [[k(1), xp.clone()], [k(0), k(2)]],
            beta11: &xp * &xp,
            b0: r(1),
            b1: r(2),
            c0: r(3),
            c1: r(4),
            d0: r(5),
        }
    }

    pub fn zero() -> Self {
        let z = RadicalScalar::zero;
        Self {
            alpha: [[RatFunc::zero(), RatFunc::zero()], [RatFunc::zero(), RatFunc::zero()]],
            beta11: RatFunc::zero(),
            b0: z(),
            b1: z(),
            c0: z(),
            c1: z(),
            d0: z(),
        }
    }
}

fn lin(c0: &RadicalScalar, c1: &RatFunc) -> RatFunc {
    &RatFunc::constant(c0.clone()) + &(c1 * &RatFunc::var(Var::Plus))
}

fn from_grid(rows: Vec<Vec<RatFunc>>) -> SuperMatrix {
    SuperMatrix::from_rows(rows).expect("rectangular")
}

pub fn g24_k1() -> SuperMatrix {
    let z = RatFunc::zero;
    from_grid(vec![vec![RatFunc::var(Var::Plus), z()], vec![z(), z()]])
}

/// `Z₁ + iθ+η A₁` with `A₁ = (α; [[β₁₁, c₀ + (c₁ + α₁₂)x+], [b₀ + b₁x+, d₀]])`.
pub fn g24_w(p: &G24Params) -> Result<MacFarlaneW, AlgebraError> {
    let [[a11, a12], [a21, a22]] = p.alpha.clone();
    let c1 = &RatFunc::constant(p.c1.clone()) + &a12;
    let a = from_grid(vec![
        vec![a11, a12],
        vec![a21, a22],
        vec![p.beta11.clone(), lin(&p.c0, &c1)],
        vec![lin(&p.b0, &RatFunc::constant(p.b1.clone())), RatFunc::constant(p.d0.clone())],
    ]);
    MacFarlaneW::from_k(g24_k1(), a)
}

/// `β_R = [[β₁₁ - α₁₁x+, c₀ + c₁x+], [b₀ + b₁x+, d₀]]`.
pub fn g24_reduced_beta(p: &G24Params) -> SuperMatrix {
    let xp = RatFunc::var(Var::Plus);
    from_grid(vec![
        vec![&p.beta11 - &(&p.alpha[0][0] * &xp), lin(&p.c0, &RatFunc::constant(p.c1.clone()))],
        vec![lin(&p.b0, &RatFunc::constant(p.b1.clone())), RatFunc::constant(p.d0.clone())],
    ])
}

/// Exponent of `x+` in entry (4,1) of `Z₄`. The source prints the entry as
/// `sqrt(3) x²` without a subscript; it is read as `sqrt(3) x+²`, mirroring
/// entry (3,2).
pub const Z4_ENTRY_41_POWER: u32 = 2;

fn mono(c: RadicalScalar, e: u32) -> RatFunc {
    holomorphic_monomial(c, e)
}

fn stack_under_identity(k: Vec<Vec<RatFunc>>) -> SuperMatrix {
    SuperMatrix::vstack(&SuperMatrix::identity(2), &from_grid(k)).expect("2 columns")
}

pub fn z1() -> SuperMatrix {
    SuperMatrix::vstack(&SuperMatrix::identity(2), &g24_k1()).expect("2 columns")
}

/// `Z₂` at `(cos t, sin t)`; `cos 2t` is taken as `cos²t - sin²t`.
pub fn z2(cos_t: &Rational, sin_t: &Rational) -> Result<SuperMatrix, AlgebraError> {
    let one = Rational::from_integer(1.into());
    if cos_t * cos_t + sin_t * sin_t != one {
        return Err(AlgebraError::DimensionMismatch(format!("cos^2 + sin^2 != 1 for ({cos_t}, {sin_t})")));
    }
    let cos2 = RadicalScalar::from_rational(cos_t * cos_t - sin_t * sin_t);
    let r2 = RadicalScalar::sqrt_int(2)?;
    let c = RadicalScalar::from_rational(cos_t.clone());
    let s = RadicalScalar::from_rational(sin_t.clone());
    Ok(stack_under_identity(vec![
        vec![mono(cos2, 2), mono(r2.clone() * c, 1)],
        vec![mono(r2 * s, 1), RatFunc::zero()],
    ]))
}

pub fn z3() -> SuperMatrix {
    let sq = |n: i64, d: i64| RadicalScalar::sqrt(&Rational::new(n.into(), d.into())).expect("positive");
    stack_under_identity(vec![
        vec![mono(sq(3, 1), 2), mono(sq(8, 3), 1)],
        vec![RatFunc::zero(), mono(sq(1, 3), 1)],
    ])
}

pub fn z4() -> SuperMatrix {
    let r3 = || RadicalScalar::sqrt_int(3).expect("positive");
    let k = |n| RadicalScalar::from_ratio(n, 1);
    stack_under_identity(vec![
        vec![mono(k(2), 3), mono(r3(), 2)],
        vec![mono(r3(), Z4_ENTRY_41_POWER), mono(k(2), 1)],
    ])
}

/// The rational point `cos t = 3/5`, `sin t = 4/5` used for `Z₂`.
pub fn z2_sample() -> SuperMatrix {
    let r = |n: i64| Rational::new(n.into(), 5.into());
    z2(&r(3), &r(4)).expect("Pythagorean pair")
}

/// `(name, Z)` for `Z₁`, `Z₂(3/5, 4/5)`, `Z₃`, `Z₄`.
pub fn g24_catalogue() -> Vec<(&'static str, SuperMatrix)> {
    vec![("Z1", z1()), ("Z2", z2_sample()), ("Z3", z3()), ("Z4", z4())]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gauge::reduce;

    fn xp() -> RatFunc {
        RatFunc::var(Var::Plus)
    }

    #[test]
    fn binomials() {
        assert_eq!((0..5).map(|k| binomial(4, k)).collect::<Vec<_>>(), vec![1, 4, 6, 4, 1]);
    }

    #[test]
    fn veronese_n2_and_n3() {
        let d = VeroneseData { n: 2, a0: RatFunc::zero(), a1: RatFunc::from_i64(1) };
        let w = veronese_w(&d).unwrap();
        assert_eq!(w.a(), &column(vec![RatFunc::zero(), RatFunc::from_i64(1)]));
        let u = veronese_u(3);
        assert_eq!(u[1], mono(RadicalScalar::sqrt_int(2).unwrap(), 1));
        assert_eq!(u[2], &xp() * &xp());
        let zero = VeroneseData { n: 4, a0: RatFunc::zero(), a1: RatFunc::zero() };
        assert!(veronese_w(&zero).unwrap().a().is_zero());
    }

    #[test]
    fn veronese_reduction_matches_closed_form() {
        for n in 3..=5 {
            let d = VeroneseData { n, a0: &RatFunc::from_i64(1) + &xp(), a1: &xp() * &xp() };
            assert_eq!(reduce(&veronese_w(&d).unwrap()).unwrap(), veronese_reduced(&d).unwrap());
        }
    }

    #[test]
    fn veronese_pure_gauge() {
        let a0 = &xp() + &RatFunc::from_i64(2);
        let a1 = &a0 * &mono(RadicalScalar::sqrt_int(3).unwrap(), 1);
        let d = VeroneseData { n: 4, a0, a1 };
        assert!(veronese_reduced(&d).unwrap().a().is_zero());
        assert!(reduce(&veronese_w(&d).unwrap()).unwrap().a().is_zero());
    }

    #[test]
    fn veronese_reduced_is_eta_times_derivative() {
        let d = VeroneseData { n: 5, a0: xp(), a1: RatFunc::from_i64(3) };
        let eta = veronese_eta(&d).unwrap();
        let s = RatFunc::constant(inv_sqrt(4));
        let expected: Vec<_> = veronese_u(5).iter().map(|u| &(&eta * &s) * &u.derive(Var::Plus)).collect();
        assert_eq!(veronese_reduced(&d).unwrap().a(), &column(expected));
    }

    #[test]
    fn g24_reduction_layout() {
        let p = G24Params::sample();
        let r = reduce(&g24_w(&p).unwrap()).unwrap();
        assert!(r.a().row_block(0, 2).is_zero());
        assert_eq!(r.a().row_block(2, 4), g24_reduced_beta(&p));
        let zero = g24_w(&G24Params::zero()).unwrap();
        assert!(zero.a().is_zero());
        assert_eq!(reduce(&zero).unwrap(), zero);
    }

    #[test]
    fn catalogue_shapes_and_z3_radical() {
        for (_, z) in g24_catalogue() {
            assert_eq!(z.shape(), (4, 2));
        }
        assert_eq!(z3().get(2, 1).body().to_string(), "2/3*sqrt(6)*x+");
        let r = |n: i64| Rational::new(n.into(), 5.into());
        assert!(z2(&r(3), &r(3)).is_err());
        assert_eq!(z2_sample().get(2, 0).body(), mono(RadicalScalar::from_ratio(-7, 25), 2));
    }
}
