use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

use supergauge::curvature::gaussian_curvature;
use supergauge::examples::{g24_catalogue, veronese_u};
use supergauge::gauge::reduce;
use supergauge::parser::{parse_matrix, parse_poly, SolutionDoc};
use supergauge::random;
use supergauge::superfield::{check_inverse_components, projector_of, super_derive};
use supergauge::{GrassmannElem, RadicalScalar, RatFunc, Rational, Scalar, SuperMatrix, Var};

fn rational() -> impl Strategy<Value = (i64, i64)> {
    let edge = prop_oneof![Just(i64::MAX), Just(i64::MIN + 1), Just(1i64 << 40), Just(-(1i64 << 33))];
    let num = prop_oneof![4 => -1000i64..1000, 1 => any::<i64>(), 1 => edge.clone()];
    let den = prop_oneof![4 => 1i64..1000, 1 => any::<i64>().prop_filter("non-zero", |d| *d != 0), 1 => edge];
    (num, den)
}

fn big((n, d): (i64, i64)) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn bigint_rational(r: &Rational) -> BigRational {
    BigRational::new(r.numer(), r.denom())
}

fn cases(n: u32) -> ProptestConfig {
    ProptestConfig { cases: n, ..ProptestConfig::default() }
}

proptest! {
    #[test]
    fn rational_field_ops_match_bigrational(a in rational(), b in rational()) {
        let (x, y) = (Rational::from_ratio(a.0, a.1), Rational::from_ratio(b.0, b.1));
        prop_assert_eq!(bigint_rational(&(&x + &y)), big(a) + big(b));
        prop_assert_eq!(bigint_rational(&(&x - &y)), big(a) - big(b));
        prop_assert_eq!(bigint_rational(&(&x * &y)), big(a) * big(b));
        if !y.is_zero() {
            prop_assert_eq!(bigint_rational(&(&x / &y)), big(a) / big(b));
        }
        // canonical representation: equal values are structurally equal
        prop_assert_eq!(&(&x + &y) - &y, x);
    }
}

proptest! {
    #![proptest_config(cases(64))]

    #[test]
    fn dagger_reverses_products(seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let a = random::grassmann(&mut rng, 1);
        let b = random::grassmann(&mut rng, 1);
        let c = random::grassmann(&mut rng, 1);
        prop_assert_eq!((&a * &b).dagger(), &b.dagger() * &a.dagger());
        prop_assert_eq!(a.dagger().dagger(), a.clone());
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn super_derivatives_anticommute(seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let f = random::superfield_matrix(&mut rng, 2, 1, 2);
        let v = random::direction(&mut rng);
        let twice = super_derive(&super_derive(&f, v), v);
        prop_assert_eq!(twice, f.map_coeffs(|c| c.derive(v)).scale(&-RatFunc::imag_unit()));
        let pm = super_derive(&super_derive(&f, Var::Minus), Var::Plus);
        let mp = super_derive(&super_derive(&f, Var::Plus), Var::Minus);
        prop_assert!(pm.add(&mp).unwrap().is_zero());
    }

    #[test]
    fn parser_round_trips_values(seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let num = random::poly(&mut rng, 3);
        let den = random::poly(&mut rng, 1);
        let v = if den.is_zero() { num } else { num.try_div(&den).unwrap() };
        prop_assert_eq!(parse_poly(&v.to_string()).unwrap(), v.clone());
        let m = SuperMatrix::from_fn(2, 2, |i, j| GrassmannElem::scalar(v.derive(if i == j { Var::Plus } else { Var::Minus })));
        prop_assert_eq!(parse_matrix(&m.to_string()).unwrap(), m);
    }
}

proptest! {
    #![proptest_config(cases(16))]

    #[test]
    fn inverse_components_hold(seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let (m, n) = random::pick(&mut rng, &[(1, 2), (1, 3), (2, 3)]);
        let w = random::macfarlane(&mut rng, m, n, 2);
        let report = check_inverse_components(&w).unwrap();
        prop_assert!(report.all_passed(), "{:?}", report.first_failure());
    }

    #[test]
    fn projector_ignores_right_factors(seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let w = random::macfarlane(&mut rng, 1, 3, 2).w();
        let g = random::even_invertible(&mut rng, 1, 2);
        prop_assert_eq!(projector_of(&w.matmul(&g).unwrap()).unwrap(), projector_of(&w).unwrap());
    }

    #[test]
    fn reduce_is_idempotent(seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let (m, n) = random::pick(&mut rng, &[(1, 2), (1, 3), (2, 3), (2, 4)]);
        let w = random::macfarlane(&mut rng, m, n, 2);
        let w_r = reduce(&w).unwrap();
        prop_assert!(w_r.a().row_block(0, m).is_zero());
        prop_assert_eq!(reduce(&w_r).unwrap(), w_r);
    }

    #[test]
    fn solution_documents_round_trip(seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let w = random::macfarlane(&mut rng, 2, 4, 2);
        let doc = SolutionDoc::from_macfarlane(&w);
        let back = SolutionDoc::parse(&doc.to_string()).unwrap();
        prop_assert_eq!(back.to_macfarlane().unwrap(), w);
    }
}

fn konst(c: RadicalScalar) -> GrassmannElem {
    GrassmannElem::scalar(RatFunc::constant(c))
}

/// Real rotation by (cos, sin) = (3/5, 4/5) in the plane of rows `i`, `j`.
fn rotation(n: usize, i: usize, j: usize) -> SuperMatrix {
    let (c, s) = (RadicalScalar::from_ratio(3, 5), RadicalScalar::from_ratio(4, 5));
    let mut v = SuperMatrix::identity(n);
    v.set(i, i, konst(c.clone()));
    v.set(j, j, konst(c));
    v.set(i, j, konst(-s.clone()));
    v.set(j, i, konst(s));
    v
}

proptest! {
    #![proptest_config(cases(12))]

    #[test]
    fn curvature_is_invariant_under_gauge_and_isometry(seed in any::<u64>(), which in 0usize..4, i in 0usize..4, j in 0usize..4) {
        prop_assume!(i != j);
        let mut rng = random::rng(seed);
        let (_, z) = g24_catalogue().swap_remove(which);
        let k = gaussian_curvature(&z).unwrap().curvature;
        // holomorphic upper-triangular right factor with constant diagonal
        let mut g = SuperMatrix::identity(2);
        g.set(0, 0, konst(RadicalScalar::from_i64(2)));
        g.set(0, 1, GrassmannElem::scalar(random::holomorphic_poly(&mut rng, 2)));
        let zg = z.matmul(&g).unwrap();
        prop_assert_eq!(gaussian_curvature(&zg).unwrap().curvature, k.clone());
        let vz = rotation(4, i, j).matmul(&z).unwrap();
        prop_assert_eq!(gaussian_curvature(&vz).unwrap().curvature, k);
    }
}

#[test]
fn veronese_curvature_scales_with_degree() {
    for n in 2..=6usize {
        let z = SuperMatrix::from_fn(n, 1, |r, _| GrassmannElem::scalar(veronese_u(n)[r].clone()));
        let k = gaussian_curvature(&z).unwrap();
        assert!(k.is_constant);
        assert_eq!(k.curvature, RatFunc::constant(RadicalScalar::from_ratio(4, n as i64 - 1)));
    }
}
