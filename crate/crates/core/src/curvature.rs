//! Gaussian curvature of the metric induced by a holomorphic `Z`, kept in
//! rational form so constancy is an exact identity.

use crate::error::AlgebraError;
use crate::examples::g24_catalogue;
use crate::poly::Var;
use crate::report::VerificationReport;
use num_traits::Zero;

use crate::scalar::{RadicalScalar, Scalar};
use crate::{RatFunc, SuperMatrix};

#[derive(Clone, Debug, PartialEq)]
pub struct CurvatureResult {
    pub is_constant: bool,
    /// The constant value, present iff `is_constant`.
    pub value: Option<RadicalScalar>,
    /// `K` as a rational function.
    pub curvature: RatFunc,
}

/// `∂+∂- ln f = (f ∂+∂-f - ∂+f ∂-f) / f²`.
pub fn log_laplacian(f: &RatFunc) -> Result<RatFunc, AlgebraError> {
    let fp = f.derive(Var::Plus);
    let fm = f.derive(Var::Minus);
    let fpm = fp.derive(Var::Minus);
    (&(f * &fpm) - &(&fp * &fm)).try_div(&(f * f))
}

/// `f = det(Z†Z)`, `D = ∂+∂- ln f`, `K = -2 ∂+∂- ln D / D`.
pub fn gaussian_curvature(z: &SuperMatrix) -> Result<CurvatureResult, AlgebraError> {
    if !z.is_bosonic() {
        return Err(AlgebraError::NotBosonic);
    }
    if let Some(e) = z.entries().find(|e| !e.body().is_free_of(Var::Minus)) {
        return Err(AlgebraError::NonHolomorphic(e.body().to_string()));
    }
    let f = z.dagger().matmul(z)?.det_bosonic()?;
    if f.is_zero() {
        return Err(AlgebraError::SingularBody);
    }
    let d = log_laplacian(&f)?;
    if d.is_zero() {
        return Err(AlgebraError::DegenerateMetric);
    }
    let e = log_laplacian(&d)?;
    let curvature = (&e * &RatFunc::from_i64(-2)).try_div(&d)?;
    let value = curvature.as_constant();
    Ok(CurvatureResult { is_constant: value.is_some(), value, curvature })
}

/// Constancy of the curvature for `Z₁`, `Z₂(3/5, 4/5)`, `Z₃`, `Z₄`.
pub fn check_catalogue() -> Result<VerificationReport, AlgebraError> {
    let mut report = VerificationReport::new("curvature catalogue");
    for (name, z) in g24_catalogue() {
        let r = gaussian_curvature(&z)?;
        let label = match &r.value {
            Some(v) => format!("{name} has constant curvature K = {v}"),
            None => format!("{name} has constant curvature"),
        };
        report.record(label, r.is_constant, || format!("K = {}", r.curvature));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::examples::{veronese_u, z1};
    use crate::GrassmannElem;

    fn column(v: Vec<RatFunc>) -> SuperMatrix {
        SuperMatrix::from_fn(v.len(), 1, |i, _| GrassmannElem::scalar(v[i].clone()))
    }

    #[test]
    fn cp1_curvature_is_four() {
        let z = column(vec![RatFunc::from_i64(1), RatFunc::var(Var::Plus)]);
        let r = gaussian_curvature(&z).unwrap();
        assert_eq!(r.value, Some(RadicalScalar::from_ratio(4, 1)));
        assert_eq!(gaussian_curvature(&z1()).unwrap().value, Some(RadicalScalar::from_ratio(4, 1)));
    }

    #[test]
    fn veronese_curvature() {
        for n in 2..=4 {
            let r = gaussian_curvature(&column(veronese_u(n))).unwrap();
            assert_eq!(r.value, Some(RadicalScalar::from_ratio(4, n as i64 - 1)));
        }
    }

    #[test]
    fn log_laplacian_of_cp1() {
        let xp = RatFunc::var(Var::Plus);
        let xm = RatFunc::var(Var::Minus);
        let f = &RatFunc::from_i64(1) + &(&xp * &xm);
        assert_eq!(log_laplacian(&f).unwrap(), RatFunc::from_i64(1).try_div(&(&f * &f)).unwrap());
    }

    #[test]
    fn errors() {
        let flat = column(vec![RatFunc::from_i64(1), RatFunc::from_i64(2)]);
        assert_eq!(gaussian_curvature(&flat), Err(AlgebraError::DegenerateMetric));
        let anti = column(vec![RatFunc::from_i64(1), RatFunc::var(Var::Minus)]);
        assert!(matches!(gaussian_curvature(&anti), Err(AlgebraError::NonHolomorphic(_))));
        let zero = SuperMatrix::zeros(2, 1);
        assert_eq!(gaussian_curvature(&zero), Err(AlgebraError::SingularBody));
    }

    #[test]
    fn catalogue_is_constant() {
        let r = check_catalogue().unwrap();
        println!("{r}");
        assert!(r.all_passed(), "{r}");
    }

    #[test]
    fn perturbed_z3_is_not_constant() {
        let mut z = crate::examples::z3();
        let bump = crate::ratfunc::holomorphic_monomial(RadicalScalar::from_ratio(1, 1), 3);
        z.set(2, 0, z.get(2, 0) + &GrassmannElem::scalar(bump));
        assert!(!gaussian_curvature(&z).unwrap().is_constant);
    }
}
