//! Gauge reduction `A → A_R = (0; β - Kα)`, the explicit scalar gauge
//! matrix, and equivalence certificates.

use crate::error::AlgebraError;
use crate::random;
use crate::report::VerificationReport;
use crate::superfield::{
    eval_numeric, m_components, max_abs_diff, numeric_projector, projector, AnsatzComponents,
    MacFarlaneW,
};
use crate::{RatFunc, SuperMatrix};

/// Tolerance of the numeric projector comparison.
pub const NUMERIC_TOL: f64 = 1e-9;

/// `A = (α; β)` with `α` the top `M × M` block.
#[derive(Clone, Debug, PartialEq)]
pub struct SplitA {
    pub alpha: SuperMatrix,
    pub beta: SuperMatrix,
}

fn require_macfarlane(w: &MacFarlaneW) -> Result<(), AlgebraError> {
    if w.z().row_block(0, w.m()) != SuperMatrix::identity(w.m()) {
        return Err(AlgebraError::NotMacFarlane("top block of Z is not the identity".into()));
    }
    Ok(())
}

pub fn split(w: &MacFarlaneW) -> Result<SplitA, AlgebraError> {
    require_macfarlane(w)?;
    Ok(SplitA { alpha: w.a().row_block(0, w.m()), beta: w.a().row_block(w.m(), w.n()) })
}

/// `β - Kα`.
pub fn reduced_beta(w: &MacFarlaneW) -> Result<SuperMatrix, AlgebraError> {
    let s = split(w)?;
    s.beta.sub(&w.k().matmul(&s.alpha)?)
}

/// `W_R = Z + iθ+η (0; β - Kα)`.
pub fn reduce(w: &MacFarlaneW) -> Result<MacFarlaneW, AlgebraError> {
    let a_r = SuperMatrix::vstack(&SuperMatrix::zeros(w.m(), w.m()), &reduced_beta(w)?)?;
    MacFarlaneW::new_unchecked(w.z().clone(), a_r)
}

/// Sample count and seed of the numeric oracle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Sampling {
    pub points: usize,
    pub seed: u64,
}

impl Default for Sampling {
    fn default() -> Self {
        Self { points: 5, seed: 0 }
    }
}

pub fn certify_equivalence(w: &MacFarlaneW, w_r: &MacFarlaneW) -> Result<VerificationReport, AlgebraError> {
    certify_equivalence_sampled(w, w_r, Sampling::default())
}

/// Exact projector equality plus a floating-point comparison of both
/// projectors at seeded random points on `x- = conj(x+)`.
pub fn certify_equivalence_sampled(
    w: &MacFarlaneW,
    w_r: &MacFarlaneW,
    sampling: Sampling,
) -> Result<VerificationReport, AlgebraError> {
    if w.z().shape() != w_r.z().shape() {
        return Err(AlgebraError::DimensionMismatch("solutions have different shapes".into()));
    }
    let mut report = VerificationReport::new("gauge equivalence");
    let p = projector(w)?;
    let p_r = projector(w_r)?;
    report.check_matrix_eq("P(W) = P(W_R) exactly", &p, &p_r)?;

    let (ws, ws_r) = (w.w(), w_r.w());
    let mut rng = random::rng(sampling.seed);
    let mut taken = 0;
    let mut attempts = 0;
    while taken < sampling.points {
        attempts += 1;
        if attempts > 20 * sampling.points.max(1) {
            report.fail("numeric sampling", "no regular sample points found");
            break;
        }
        let x = random::point(&mut rng);
        let (Ok(num), Ok(num_r), Ok(exact)) =
            (numeric_projector(&ws, x), numeric_projector(&ws_r, x), eval_numeric(&p, x, x.conj()))
        else {
            continue;
        };
        taken += 1;
        let d = max_abs_diff(&num, &num_r).max(max_abs_diff(&num, &exact));
        report.record(
            format!("numeric P(W) = P(W_R) at x+ = {:.6}{:+.6}i", x.re, x.im),
            d <= NUMERIC_TOL,
            || format!("max deviation {d:.3e}"),
        );
    }
    Ok(report)
}

/// `U = U₀ + iθ+η U₁ + iθ-η̄ U₂ - θ+θ-η̄η U₃`.
#[derive(Clone, Debug, PartialEq)]
pub struct GaugeU {
    pub u0: SuperMatrix,
    pub u1: SuperMatrix,
    pub u2: SuperMatrix,
    pub u3: SuperMatrix,
}

impl GaugeU {
    pub fn assemble(&self) -> Result<SuperMatrix, AlgebraError> {
        AnsatzComponents {
            c0: self.u0.clone(),
            c1: self.u1.clone(),
            c2: self.u2.clone(),
            c3: self.u3.clone(),
        }
        .assemble()
    }

    pub fn from_matrix(u: &SuperMatrix) -> Result<Self, AlgebraError> {
        let c = AnsatzComponents::of(u)?;
        Ok(Self { u0: c.c0, u1: c.c1, u2: c.c2, u3: c.c3 })
    }

    /// `U₀ = I`, `U₂ = -U₁†`, `U₃ = -(U₁U₁† + U₁†U₁)/2`.
    pub fn from_u1(u1: SuperMatrix) -> Result<Self, AlgebraError> {
        let m = u1.rows();
        let ud = u1.dagger();
        let half = RatFunc::constant(crate::RadicalScalar::from_ratio(-1, 2));
        let u3 = u1.matmul(&ud)?.add(&ud.matmul(&u1)?)?.scale(&half);
        Ok(Self { u0: SuperMatrix::identity(m), u2: ud.neg(), u1, u3 })
    }
}

/// Scalar gauge with `U₁ = -a₀`: `U = 1 - iθ+η a₀ + iθ-η̄ a₀* + θ+θ-η̄η |a₀|²`.
pub fn build_scalar_u(a0: &RatFunc) -> GaugeU {
    let m = |c: RatFunc| SuperMatrix::from_rows(vec![vec![c]]).expect("1x1");
    GaugeU::from_u1(m(-a0.clone())).expect("1x1 shapes agree")
}

/// Checks `U†U = UU† = I` on the assembled matrix and the component form
/// of the same conditions.
pub fn check_unitarity(u: &GaugeU) -> Result<VerificationReport, AlgebraError> {
    let mut report = VerificationReport::new("unitarity");
    let m = u.u0.rows();
    let id = SuperMatrix::identity(m);
    let full = u.assemble()?;
    let fd = full.dagger();
    report.check_matrix_eq("U†U = I", &fd.matmul(&full)?, &id)?;
    report.check_matrix_eq("UU† = I", &full.matmul(&fd)?, &id)?;

    let (u0, u1, u2, u3) = (&u.u0, &u.u1, &u.u2, &u.u3);
    let (u0d, u1d) = (u0.dagger(), u1.dagger());
    report.check_matrix_eq("U0 U0† = I", &u0.matmul(&u0d)?, &id)?;
    report.check_matrix_eq("U1 = -U0 U2† U0", u1, &u0.matmul(&u2.dagger())?.matmul(u0)?.neg())?;
    let third = u3
        .add(&u0.matmul(&u1d)?.matmul(u1)?)?
        .add(&u1.matmul(&u1d)?.matmul(u0)?)?
        .add(&u0.matmul(&u3.dagger())?.matmul(u0)?)?;
    report.check_matrix_zero("U3 + U0 U1† U1 + U1 U1† U0 + U0 U3† U0 = 0", &third);
    if *u0 == id {
        let sym = u1.matmul(&u1d)?.add(&u1d.matmul(u1)?)?;
        report.check_matrix_eq("U1 = -U2†", u1, &u2.dagger().neg())?;
        report.check_matrix_zero("U3† + U3 + U1 U1† + U1† U1 = 0", &u3.dagger().add(u3)?.add(&sym)?);
    }
    Ok(report)
}

/// For `M = 1`: `Λ = 1 + iθ-η̄ λ₂ - θ+θ-η̄η λ₃` with `λ₂ = -M₀⁻¹M₂` and
/// `λ₃ = -M₀⁻¹(M₃ - M₁M₀⁻¹M₂)/2`, so that `L = L₀Λ` for scalar `L₀`.
pub fn scalar_normalizer(w: &MacFarlaneW) -> Result<SuperMatrix, AlgebraError> {
    if w.m() != 1 {
        return Err(AlgebraError::DimensionMismatch(format!("scalar normalizer needs M = 1, got {}", w.m())));
    }
    let mc = m_components(w);
    let m0i = mc.m0.invert_even()?;
    let l2 = m0i.matmul(&mc.m2)?.neg();
    let half = RatFunc::constant(crate::RadicalScalar::from_ratio(-1, 2));
    let l3 = m0i.matmul(&mc.m3.sub(&mc.m1.matmul(&m0i)?.matmul(&mc.m2)?)?)?.scale(&half);
    AnsatzComponents { c0: SuperMatrix::identity(1), c1: SuperMatrix::zeros(1, 1), c2: l2, c3: l3 }.assemble()
}

/// For `M = 1`, checks the full lift `W Λ U = W_R Λ_R` with `U` from
/// [`build_scalar_u`] at `a₀ = α`, together with `Λ†W†WΛ = M₀` for both
/// sides. `L₀` is a scalar and drops out of every identity.
pub fn check_scalar_lift(w: &MacFarlaneW) -> Result<VerificationReport, AlgebraError> {
    let mut report = VerificationReport::new("scalar gauge lift");
    let w_r = reduce(w)?;
    let alpha = split(w)?.alpha.get(0, 0).body();
    let u = build_scalar_u(&alpha);
    report.extend(check_unitarity(&u)?);
    let m0 = m_components(w).m0;
    let lam = scalar_normalizer(w)?;
    let lam_r = scalar_normalizer(&w_r)?;
    for (name, ws, l) in [("W", w.w(), &lam), ("W_R", w_r.w(), &lam_r)] {
        let norm = l.dagger().matmul(&ws.dagger())?.matmul(&ws)?.matmul(l)?;
        report.check_matrix_eq(format!("Λ†{name}†{name}Λ = M0"), &norm, &m0)?;
    }
    let lhs = w.w().matmul(&lam)?.matmul(&u.assemble()?)?;
    let rhs = w_r.w().matmul(&lam_r)?;
    report.check_matrix_eq("W Λ U = W_R Λ_R", &lhs, &rhs)?;
    Ok(report)
}

/// `U₁` as a function of the top block: `-α`.
pub fn scalar_u1(w: &MacFarlaneW) -> Result<RatFunc, AlgebraError> {
    if w.m() != 1 {
        return Err(AlgebraError::DimensionMismatch("scalar gauge needs M = 1".into()));
    }
    Ok(-split(w)?.alpha.get(0, 0).body())
}
