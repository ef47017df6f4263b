//! Superderivatives, MacFarlane-form holomorphic solutions and their
//! certificates.
//!
//! A holomorphic solution is `W = Z + iθ+ η A` with `Z = (I_M; K)`. The full
//! solution `Φ = W L` needs `L₀ L₀† = (Z†Z)⁻¹`, a matrix square root that is
//! not rational, so everything here is certified through the rational
//! projector `P = W (W†W)⁻¹ W†` and through the components of `(W†W)⁻¹`.

use num_complex::Complex64;
use num_traits::One;

use crate::error::AlgebraError;
use crate::grassmann::{basis, Generator, Grassmann};
use crate::poly::Var;
use crate::report::VerificationReport;
use crate::scalar::Scalar;
use crate::{GrassmannElem, NumericSuperMatrix, RatFunc, SuperMatrix};

fn theta(dir: Var) -> Generator {
    match dir {
        Var::Plus => Generator::ThetaPlus,
        Var::Minus => Generator::ThetaMinus,
    }
}

/// `∂̌± = -i ∂/∂θ± + θ± ∂±`, applied entrywise from the left.
pub fn super_derive(f: &SuperMatrix, dir: Var) -> SuperMatrix {
    let minus_i = -RatFunc::imag_unit();
    let th = GrassmannElem::generator(theta(dir));
    f.map(|e| {
        let odd = e.theta_derive(theta(dir)).scale(&minus_i);
        let even = th.wedge(&e.map_coeffs(|c| c.derive(dir)));
        &odd + &even
    })
}

/// `∂±` on coefficients only.
pub fn x_derive(f: &SuperMatrix, dir: Var) -> SuperMatrix {
    f.map(|e| e.map_coeffs(|c| c.derive(dir)))
}

/// `Ď± Φ = ∂̌± Φ - Φ (Φ† ∂̌± Φ)`.
pub fn covariant_derive(phi: &SuperMatrix, dir: Var) -> Result<SuperMatrix, AlgebraError> {
    let d = super_derive(phi, dir);
    let connection = phi.dagger().matmul(&d)?;
    d.sub(&phi.matmul(&connection)?)
}

/// `(I - Φ Φ†) ∂̌± Φ`, the form `Ď± Φ` takes once `Φ†Φ = I`.
pub fn projected_derive(phi: &SuperMatrix, dir: Var) -> Result<SuperMatrix, AlgebraError> {
    let n = phi.rows();
    let proj = SuperMatrix::identity(n).sub(&phi.matmul(&phi.dagger())?)?;
    proj.matmul(&super_derive(phi, dir))
}

/// Components `(X₀, X₁, X₂, X₃)` of `X = X₀ + iθ+η X₁ + iθ-η̄ X₂ - θ+θ-η̄η X₃`.
#[derive(Clone, Debug, PartialEq)]
pub struct AnsatzComponents {
    pub c0: SuperMatrix,
    pub c1: SuperMatrix,
    pub c2: SuperMatrix,
    pub c3: SuperMatrix,
}

impl AnsatzComponents {
    /// Splits `x`; fails if `x` has components outside the four-term basis.
    pub fn of(x: &SuperMatrix) -> Result<Self, AlgebraError> {
        const ALLOWED: [u8; 4] =
            [basis::ONE, basis::THETA_PLUS_ETA, basis::THETA_MINUS_ETABAR, basis::TOP];
        if x.entries().any(|e| e.components().any(|(m, _)| !ALLOWED.contains(&m))) {
            return Err(AlgebraError::NotEven);
        }
        let minus_i = -RatFunc::imag_unit();
        Ok(Self {
            c0: x.component(basis::ONE),
            c1: x.component(basis::THETA_PLUS_ETA).scale(&minus_i),
            c2: x.component(basis::THETA_MINUS_ETABAR).scale(&minus_i),
            // θ+θ-η̄η = -θ+θ-ηη̄, so -θ+θ-η̄η X₃ is the canonical TOP component
            c3: x.component(basis::TOP),
        })
    }

    pub fn assemble(&self) -> Result<SuperMatrix, AlgebraError> {
        let i = RatFunc::imag_unit();
        let t1 = self.c1.left_mul(&GrassmannElem::basis(basis::THETA_PLUS_ETA, i.clone()));
        let t2 = self.c2.left_mul(&GrassmannElem::basis(basis::THETA_MINUS_ETABAR, i));
        let t3 = self.c3.left_mul(&GrassmannElem::basis(basis::TOP, RatFunc::one()));
        self.c0.add(&t1)?.add(&t2)?.add(&t3)
    }
}

/// General superfield `Φ = Φ₀ + iθ+Φ₁ + iθ-Φ₂ - θ+θ-Φ₃`.
#[derive(Clone, Debug, PartialEq)]
pub struct Superfield {
    value: SuperMatrix,
}

impl Superfield {
    /// Wraps an `N × M` matrix; requires `N > M`.
    pub fn new(value: SuperMatrix) -> Result<Self, AlgebraError> {
        if value.rows() <= value.cols() || value.cols() == 0 {
            return Err(AlgebraError::DimensionMismatch(format!(
                "superfield needs N > M >= 1, got {}x{}",
                value.rows(),
                value.cols()
            )));
        }
        Ok(Self { value })
    }

    /// Builds the expansion from its four coefficient matrices. `Φ₀`, `Φ₃`
    /// are expected even and `Φ₁`, `Φ₂` odd; this is not enforced.
    pub fn from_components(
        phi0: &SuperMatrix,
        phi1: &SuperMatrix,
        phi2: &SuperMatrix,
        phi3: &SuperMatrix,
    ) -> Result<Self, AlgebraError> {
        let i = RatFunc::imag_unit();
        let tp = GrassmannElem::basis(Generator::ThetaPlus.bit(), i.clone());
        let tm = GrassmannElem::basis(Generator::ThetaMinus.bit(), i);
        let tt = GrassmannElem::word(-RatFunc::one(), &[Generator::ThetaPlus, Generator::ThetaMinus]);
        let v = phi0
            .add(&phi1.left_mul(&tp))?
            .add(&phi2.left_mul(&tm))?
            .add(&phi3.left_mul(&tt))?;
        Self::new(v)
    }

    pub fn value(&self) -> &SuperMatrix {
        &self.value
    }

    pub fn dims(&self) -> (usize, usize) {
        self.value.shape()
    }

    pub fn super_derive(&self, dir: Var) -> SuperMatrix {
        super_derive(&self.value, dir)
    }

    pub fn covariant_derive(&self, dir: Var) -> Result<SuperMatrix, AlgebraError> {
        covariant_derive(&self.value, dir)
    }

    /// `Φ†Φ - I`.
    pub fn norm_defect(&self) -> Result<SuperMatrix, AlgebraError> {
        self.value.dagger().matmul(&self.value)?.sub(&SuperMatrix::identity(self.value.cols()))
    }
}

/// `W = Z + iθ+ η A` with `Z = (I_M; K)`, both `Z` and `A` bosonic and
/// holomorphic.
#[derive(Clone, Debug, PartialEq)]
pub struct MacFarlaneW {
    z: SuperMatrix,
    a: SuperMatrix,
}

fn check_holomorphic(m: &SuperMatrix, what: &str) -> Result<(), AlgebraError> {
    for e in m.entries() {
        if !e.is_scalar() {
            return Err(AlgebraError::NotBosonic);
        }
        if !e.body().is_free_of(Var::Minus) {
            return Err(AlgebraError::NonHolomorphic(format!("{what} entry {}", e.body())));
        }
    }
    Ok(())
}

impl MacFarlaneW {
    pub fn new(z: SuperMatrix, a: SuperMatrix) -> Result<Self, AlgebraError> {
        let w = Self::new_unchecked(z, a)?;
        let m = w.m();
        if w.z.row_block(0, m) != SuperMatrix::identity(m) {
            return Err(AlgebraError::NotMacFarlane("top block of Z is not the identity".into()));
        }
        check_holomorphic(&w.z, "Z")?;
        check_holomorphic(&w.a, "A")?;
        Ok(w)
    }

    /// `Z = (I_M; K)`.
    pub fn from_k(k: SuperMatrix, a: SuperMatrix) -> Result<Self, AlgebraError> {
        let z = SuperMatrix::vstack(&SuperMatrix::identity(k.cols()), &k)?;
        Self::new(z, a)
    }

    /// Only checks shapes. Used for negative controls that deliberately
    /// violate holomorphy.
    pub fn new_unchecked(z: SuperMatrix, a: SuperMatrix) -> Result<Self, AlgebraError> {
        if z.shape() != a.shape() {
            return Err(AlgebraError::DimensionMismatch(format!(
                "Z is {}x{} but A is {}x{}",
                z.rows(),
                z.cols(),
                a.rows(),
                a.cols()
            )));
        }
        if z.rows() <= z.cols() || z.cols() == 0 {
            return Err(AlgebraError::DimensionMismatch("need N > M >= 1".into()));
        }
        Ok(Self { z, a })
    }

    pub fn z(&self) -> &SuperMatrix {
        &self.z
    }

    pub fn a(&self) -> &SuperMatrix {
        &self.a
    }

    pub fn m(&self) -> usize {
        self.z.cols()
    }

    pub fn n(&self) -> usize {
        self.z.rows()
    }

    /// Lower `(N - M) × M` block of `Z`.
    pub fn k(&self) -> SuperMatrix {
        self.z.row_block(self.m(), self.n())
    }

    /// The assembled superfield `Z + iθ+ η A`.
    pub fn w(&self) -> SuperMatrix {
        let ite = GrassmannElem::basis(basis::THETA_PLUS_ETA, RatFunc::imag_unit());
        self.z.add(&self.a.left_mul(&ite)).expect("Z and A share a shape")
    }
}

/// `M₀ = Z†Z`, `M₁ = Z†A`, `M₂ = A†Z`, `M₃ = A†A`.
#[derive(Clone, Debug, PartialEq)]
pub struct MComponents {
    pub m0: SuperMatrix,
    pub m1: SuperMatrix,
    pub m2: SuperMatrix,
    pub m3: SuperMatrix,
}

pub fn m_components(w: &MacFarlaneW) -> MComponents {
    let zd = w.z.dagger();
    let ad = w.a.dagger();
    let mul = |x: &SuperMatrix, y: &SuperMatrix| x.matmul(y).expect("shapes agree");
    MComponents { m0: mul(&zd, &w.z), m1: mul(&zd, &w.a), m2: mul(&ad, &w.z), m3: mul(&ad, &w.a) }
}

/// Checks that the ansatz components of `(W†W)⁻¹` are
/// `M₀⁻¹`, `-M₀⁻¹M₁M₀⁻¹`, `-M₀⁻¹M₂M₀⁻¹` and
/// `-M₀⁻¹(M₃ - M₁M₀⁻¹M₂ - M₂M₀⁻¹M₁)M₀⁻¹`, i.e. the conditions on `L L†`.
pub fn check_inverse_components(w: &MacFarlaneW) -> Result<VerificationReport, AlgebraError> {
    let mut report = VerificationReport::new("inverse components of W†W");
    let ws = w.w();
    let gram = ws.dagger().matmul(&ws)?;
    let mc = m_components(w);
    report.check_matrix_eq("W†W matches Z†Z + iθ+η M1 + iθ-η̄ M2 - θ+θ-η̄η M3", &gram, &AnsatzComponents {
        c0: mc.m0.clone(),
        c1: mc.m1.clone(),
        c2: mc.m2.clone(),
        c3: mc.m3.clone(),
    }
    .assemble()?)?;
    let inv = gram.invert_even()?;
    let parts = AnsatzComponents::of(&inv)?;
    let m0i = mc.m0.invert_even()?;
    let mul = |x: &SuperMatrix, y: &SuperMatrix| x.matmul(y);
    let sandwich = |x: &SuperMatrix| -> Result<SuperMatrix, AlgebraError> {
        Ok(mul(&mul(&m0i, x)?, &m0i)?.neg())
    };
    report.check_matrix_eq("L0 L0† = M0^-1", &parts.c0, &m0i)?;
    report.check_matrix_eq("L0 L2† + L1 L0† = -M0^-1 M1 M0^-1", &parts.c1, &sandwich(&mc.m1)?)?;
    report.check_matrix_eq("L0 L1† + L2 L0† = -M0^-1 M2 M0^-1", &parts.c2, &sandwich(&mc.m2)?)?;
    let inner = mc
        .m3
        .sub(&mul(&mul(&mc.m1, &m0i)?, &mc.m2)?)?
        .sub(&mul(&mul(&mc.m2, &m0i)?, &mc.m1)?)?;
    report.check_matrix_eq(
        "L0 L3† + L3 L0† + L1 L1† + L2 L2† = -M0^-1 (M3 - M1 M0^-1 M2 - M2 M0^-1 M1) M0^-1",
        &parts.c3,
        &sandwich(&inner)?,
    )?;
    report.check_matrix_eq("(W†W)^-1 (W†W) = I", &inv.matmul(&gram)?, &SuperMatrix::identity(w.m()))?;
    Ok(report)
}

/// `P = W (W†W)⁻¹ W†` for any `N × M` superfield with invertible even Gram
/// matrix.
pub fn projector_of(w: &SuperMatrix) -> Result<SuperMatrix, AlgebraError> {
    let wd = w.dagger();
    let gram_inv = wd.matmul(w)?.invert_even()?;
    w.matmul(&gram_inv)?.matmul(&wd)
}

pub fn projector(w: &MacFarlaneW) -> Result<SuperMatrix, AlgebraError> {
    projector_of(&w.w())
}

/// `P² = P`, `P† = P`, `tr P = M`.
pub fn check_projector(w: &SuperMatrix) -> Result<VerificationReport, AlgebraError> {
    let mut report = VerificationReport::new("projector laws");
    let p = projector_of(w)?;
    report.check_matrix_eq("P^2 = P", &p.matmul(&p)?, &p)?;
    report.check_matrix_eq("P† = P", &p.dagger(), &p)?;
    let tr = p.trace()?;
    let m = GrassmannElem::scalar(RatFunc::from_i64(w.cols() as i64));
    report.record("tr P = M", tr == m, || (&tr - &m).to_string());
    Ok(report)
}

/// Certifies that `Φ = W L` solves the model for every admissible `L`:
/// `∂̌- W = 0`, `(I - P) W = 0` and `(I - P) ∂̌- W = 0`, which is the chain
/// showing `Ď- Φ = 0`.
pub fn holomorphy_certificate(w: &MacFarlaneW) -> Result<VerificationReport, AlgebraError> {
    let mut report = VerificationReport::new("holomorphy certificate");
    let ws = w.w();
    let dw = super_derive(&ws, Var::Minus);
    report.check_matrix_zero("super-derivative minus of W vanishes", &dw);
    let p = projector_of(&ws)?;
    let comp = SuperMatrix::identity(w.n()).sub(&p)?;
    report.check_matrix_zero("(I - P) W = 0", &comp.matmul(&ws)?);
    report.check_matrix_zero("(I - P) d-W = 0", &comp.matmul(&dw)?);
    Ok(report)
}

/// Evaluates every coefficient at `(x+, x-)` in floating point.
pub fn eval_numeric(
    m: &SuperMatrix,
    x_plus: Complex64,
    x_minus: Complex64,
) -> Result<NumericSuperMatrix, AlgebraError> {
    m.try_map_coeffs(|c| c.eval_c64(x_plus, x_minus))
}

/// Floating-point projector at `x+`, on the real slice `x- = conj(x+)` where
/// the adjoint of the evaluated matrix is the evaluated adjoint.
pub fn numeric_projector(w: &SuperMatrix, x_plus: Complex64) -> Result<NumericSuperMatrix, AlgebraError> {
    let wn = eval_numeric(w, x_plus, x_plus.conj())?;
    let wd = wn.dagger();
    let gram_inv = wd.matmul(&wn)?.invert_even()?;
    wn.matmul(&gram_inv)?.matmul(&wd)
}

/// Largest absolute coefficient difference between two numeric matrices.
pub fn max_abs_diff(a: &NumericSuperMatrix, b: &NumericSuperMatrix) -> f64 {
    a.entries()
        .zip(b.entries())
        .map(|(x, y)| {
            (x - y).components().map(|(_, c)| c.norm()).fold(0.0, f64::max)
        })
        .fold(0.0, f64::max)
}

/// True if `g` has only grade-0 and grade-2/4 components of the ansatz.
pub fn in_ansatz_class(g: &Grassmann<RatFunc>) -> bool {
    g.components().all(|(m, _)| {
        [basis::ONE, basis::THETA_PLUS_ETA, basis::THETA_MINUS_ETABAR, basis::TOP].contains(&m)
    })
}
