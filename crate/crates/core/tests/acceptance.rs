//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any
//! failure. Built with `harness = false`.

use std::fs;
use std::path::Path;
use std::process::ExitCode;
use std::time::Instant;

use num_traits::Zero;
use rand::Rng;

use supergauge::curvature::gaussian_curvature;
use supergauge::examples::{
    g24_catalogue, g24_w, veronese_u, veronese_w, z1, z2_sample, z3, z4, G24Params, VeroneseData,
};
use supergauge::gauge::{build_scalar_u, certify_equivalence_sampled, check_unitarity, reduce, GaugeU, Sampling};
use supergauge::grassmann::Generator::{Eta, EtaBar, ThetaMinus, ThetaPlus};
use supergauge::parser::{parse_matrix, parse_poly, parse_solution, SolutionDoc};
use supergauge::random;
use supergauge::superfield::{
    check_inverse_components, check_projector, projector_of, super_derive, MacFarlaneW,
};
use supergauge::{GrassmannElem, Monomial, Poly, RadicalScalar, RatFunc, Scalar, SuperMatrix, Var};

type Outcome = Result<String, String>;

fn fail<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn xp() -> RatFunc {
    RatFunc::var(Var::Plus)
}

fn int(n: i64) -> RatFunc {
    RatFunc::from_i64(n)
}

fn konst(c: RadicalScalar) -> RatFunc {
    RatFunc::constant(c)
}

fn binomial(n: u64, k: u64) -> u64 {
    (1..=k).fold(1, |acc, i| acc * (n + 1 - i) / i)
}

fn column(v: &[RatFunc]) -> SuperMatrix {
    SuperMatrix::from_fn(v.len(), 1, |i, _| GrassmannElem::scalar(v[i].clone()))
}

// 1. Veronese: W is assembled here from uₙ and aₙ, and the reduction is
// compared with a_Rn = (n / sqrt(N-1)) (uₙ / x+) (a₁ - a₀ sqrt(N-1) x+).
fn veronese_reduction() -> Outcome {
    let start = Instant::now();
    let a0 = &int(1) + &xp();
    let a1 = &xp() * &xp();
    for n_total in 2..=6usize {
        let r = (n_total - 1) as u64;
        let sqrt_r = RadicalScalar::sqrt_int(r).map_err(fail)?;
        let inv_sqrt_r = sqrt_r.try_inv().map_err(fail)?;
        let u: Vec<RatFunc> = (0..n_total as u64)
            .map(|n| {
                let c = RadicalScalar::sqrt_int(binomial(r, n)).expect("positive");
                RatFunc::from_poly(Poly::monomial(c, Monomial::new(n as u32, 0)))
            })
            .collect();
        let a: Vec<RatFunc> = (0..n_total)
            .map(|n| {
                let first = &(&a0 * &int(1 - n as i64)) * &u[n];
                let second = &(&a1 * &konst(inv_sqrt_r.clone())) * &u[n].derive(Var::Plus);
                &first + &second
            })
            .collect();
        let w = MacFarlaneW::new(column(&u), column(&a)).map_err(fail)?;
        let data = VeroneseData { n: n_total, a0: a0.clone(), a1: a1.clone() };
        if veronese_w(&data).map_err(fail)? != w {
            return Err(format!("N = {n_total}: engine Veronese W differs from the hand-built one"));
        }
        let eta = &a1 - &(&(&a0 * &konst(sqrt_r.clone())) * &xp());
        let reduced = reduce(&w).map_err(fail)?;
        for n in 0..n_total {
            let expected = if n == 0 {
                RatFunc::zero()
            } else {
                let c = RadicalScalar::from_i64(n as i64) * inv_sqrt_r.clone();
                let u_over_x = u[n].try_div(&xp()).map_err(fail)?;
                &(&konst(c) * &u_over_x) * &eta
            };
            let got = reduced.a().get(n, 0);
            if !got.soul().is_zero() || got.body() != expected {
                return Err(format!("N = {n_total}, n = {n}: got {got}, expected {expected}"));
            }
        }
    }
    let elapsed = start.elapsed();
    if elapsed.as_secs_f64() >= 5.0 {
        return Err(format!("exact but too slow: {elapsed:.2?}"));
    }
    Ok(format!("N = 2..6 exact, {elapsed:.2?}"))
}

const G24_DOC: &str = "\
M = 2
N = 4
K = [[x+, 0], [0, 0]]
A = [[1, x+],
     [0, 2],
     [x+^2, 3 + (4 + x+)*x+],
     [1 + 2*x+, 5]]
";

// 2. G(2,4): alpha = [[1, x+], [0, 2]], beta11 = x+^2, (b0, b1, c0, c1, d0) =
// (1, 2, 3, 4, 5). The lower block of A_R is beta - K alpha, with the
// beta11 - alpha11 x+ and c0 + c1 x+ entries.
fn g24_reduction() -> Outcome {
    let w = parse_solution(G24_DOC).map_err(fail)?;
    if w != g24_w(&G24Params::sample()).map_err(fail)? {
        return Err("parsed document differs from the engine instance".into());
    }
    let w_r = reduce(&w).map_err(fail)?;
    let alpha_r = w_r.a().row_block(0, 2);
    if !alpha_r.is_zero() {
        return Err(format!("alpha_R = {alpha_r}"));
    }
    let expected = parse_matrix("[[x+^2 - x+, 3 + 4*x+], [1 + 2*x+, 5]]").map_err(fail)?;
    let beta_r = w_r.a().row_block(2, 4);
    if beta_r != expected {
        return Err(format!("beta_R = {beta_r}, expected {expected}"));
    }
    let report = certify_equivalence_sampled(&w, &w_r, Sampling { points: 5, seed: 2024 }).map_err(fail)?;
    if let Some(c) = report.first_failure() {
        return Err(format!("{}: {}", c.name, c.residual.clone().unwrap_or_default()));
    }
    let numeric = report.checks.iter().filter(|c| c.name.starts_with("numeric")).count();
    if numeric < 5 {
        return Err(format!("only {numeric} numeric points"));
    }
    Ok(format!("beta_R exact, equivalence symbolic + {numeric} numeric points"))
}

// 3. Inverse-component identities on random MacFarlane solutions.
fn inverse_components() -> Outcome {
    let sizes = [(1, 2), (1, 3), (2, 3), (2, 4)];
    let mut rng = random::rng(3);
    let count = 52;
    for i in 0..count {
        let (m, n) = sizes[i % 4];
        let deg = 1 + (i / 4 % 3) as u32;
        let w = random::macfarlane(&mut rng, m, n, deg);
        let report = check_inverse_components(&w).map_err(fail)?;
        if let Some(c) = report.first_failure() {
            return Err(format!("instance {i} (M = {m}, N = {n}, deg {deg}): {}", c.name));
        }
    }
    Ok(format!("{count} instances over (1,2), (1,3), (2,3), (2,4), degree <= 3"))
}

fn x_derivative(f: &SuperMatrix, v: Var) -> SuperMatrix {
    f.map_coeffs(|c| c.derive(v))
}

// 4. Super-derivative algebra, against x-derivatives taken here.
fn operator_algebra() -> Outcome {
    let mut rng = random::rng(4);
    let minus_i = -RatFunc::imag_unit();
    let count = 120;
    for i in 0..count {
        let rows = rng.gen_range(1..=2);
        let cols = rng.gen_range(1..=2);
        let f = random::superfield_matrix(&mut rng, rows, cols, 2);
        for v in [Var::Plus, Var::Minus] {
            let twice = super_derive(&super_derive(&f, v), v);
            if twice != x_derivative(&f, v).scale(&minus_i) {
                return Err(format!("superfield {i}: d{v}^2 != -i d/d{v}"));
            }
        }
        let pm = super_derive(&super_derive(&f, Var::Minus), Var::Plus);
        let mp = super_derive(&super_derive(&f, Var::Plus), Var::Minus);
        if !pm.add(&mp).map_err(fail)?.is_zero() {
            return Err(format!("superfield {i}: anticommutator does not vanish"));
        }
    }
    Ok(format!("{count} superfields, both directions"))
}

// 5. Projector laws and invariance under W -> W G.
fn projector_laws() -> Outcome {
    let sizes = [(1, 2), (1, 3), (2, 3), (2, 4)];
    let mut rng = random::rng(5);
    let mut factors = 0;
    for i in 0..12 {
        let (m, n) = sizes[i % 4];
        let w = random::macfarlane(&mut rng, m, n, if m == 2 { 1 } else { 2 }).w();
        let report = check_projector(&w).map_err(fail)?;
        if let Some(c) = report.first_failure() {
            return Err(format!("W {i} (M = {m}, N = {n}): {}", c.name));
        }
        let p = projector_of(&w).map_err(fail)?;
        for _ in 0..5 {
            let g = random::even_invertible(&mut rng, m, 1);
            let p_g = projector_of(&w.matmul(&g).map_err(fail)?).map_err(fail)?;
            if p_g != p {
                return Err(format!("W {i}: P(W G) != P(W) for G = {g}"));
            }
            factors += 1;
        }
    }
    Ok(format!("12 solutions, {factors} right factors"))
}

fn word(c: RatFunc, gens: &[supergauge::grassmann::Generator]) -> GrassmannElem {
    GrassmannElem::word(c, gens)
}

fn is_unitary(u: &SuperMatrix) -> Result<bool, String> {
    let id = SuperMatrix::identity(u.rows());
    let udu = u.dagger().matmul(u).map_err(fail)?;
    let uud = u.matmul(&u.dagger()).map_err(fail)?;
    Ok(udu == id && uud == id)
}

// 6. Gauge matrices. The scalar U is written out here with u~ = -a0:
// U = 1 + i θ+η u~ - i θ-η̄ u~* + θ+θ-η̄η |u~|².
fn gauge_unitarity() -> Outcome {
    let mut rng = random::rng(6);
    let i = RatFunc::imag_unit();
    let count = 25;
    for _ in 0..count {
        let a0 = random::poly(&mut rng, 2);
        if a0.is_zero() {
            continue;
        }
        let ut = -&a0;
        let ut_c = ut.conjugate();
        let u = &(&(&GrassmannElem::one() + &word(&i * &ut, &[ThetaPlus, Eta]))
            + &word(-&(&i * &ut_c), &[ThetaMinus, EtaBar]))
            + &word(&ut * &ut_c, &[ThetaPlus, ThetaMinus, EtaBar, Eta]);
        let u = SuperMatrix::from_fn(1, 1, |_, _| u.clone());
        if !is_unitary(&u)? {
            return Err(format!("a0 = {a0}: hand-built U is not unitary"));
        }
        let engine = build_scalar_u(&a0).assemble().map_err(fail)?;
        if engine != u {
            return Err(format!("a0 = {a0}: engine U = {engine}, expected {u}"));
        }
    }
    // the printed signs (u~* on θ-η̄, -|u~|² on θ+θ-η̄η) are not unitary
    let a0 = &int(1) + &xp();
    let ut = -&a0;
    let literal = &(&(&GrassmannElem::one() + &word(&i * &ut, &[ThetaPlus, Eta]))
        + &word(&i * &ut.conjugate(), &[ThetaMinus, EtaBar]))
        - &word(&ut * &ut.conjugate(), &[ThetaPlus, ThetaMinus, EtaBar, Eta]);
    if is_unitary(&SuperMatrix::from_fn(1, 1, |_, _| literal.clone()))? {
        return Err("sign-flipped scalar U also passed; the check cannot discriminate".into());
    }
    let m2 = 10;
    for k in 0..m2 {
        let u1 = SuperMatrix::from_fn(2, 2, |_, _| GrassmannElem::scalar(random::poly(&mut rng, 2)));
        let gu = GaugeU::from_u1(u1).map_err(fail)?;
        let report = check_unitarity(&gu).map_err(fail)?;
        if let Some(c) = report.first_failure() {
            return Err(format!("M = 2 sample {k}: {}", c.name));
        }
        if !is_unitary(&gu.assemble().map_err(fail)?)? {
            return Err(format!("M = 2 sample {k}: assembled U is not unitary"));
        }
    }
    Ok(format!("{count} scalar a0 (U†U = UU† = 1), {m2} random M = 2 U1"))
}

/// Body Gram matrix determinant `det(Z†Z)`, computed entrywise.
fn gram_det(z: &SuperMatrix) -> RatFunc {
    let entry = |i: usize, j: usize| {
        (0..z.rows()).fold(RatFunc::zero(), |acc, k| {
            &acc + &(&z.get(k, i).body().conjugate() * &z.get(k, j).body())
        })
    };
    match z.cols() {
        1 => entry(0, 0),
        2 => &(&entry(0, 0) * &entry(1, 1)) - &(&entry(0, 1) * &entry(1, 0)),
        c => panic!("oracle handles M <= 2, got {c}"),
    }
}

/// `K = 4 - 2 q f² / p³` with `p = f f+- - f+ f-`, `q = p p+- - p+ p-`.
fn curvature_oracle(z: &SuperMatrix) -> RatFunc {
    let f = gram_det(z);
    let mixed = |g: &RatFunc| {
        let gp = g.derive(Var::Plus);
        &(g * &gp.derive(Var::Minus)) - &(&gp * &g.derive(Var::Minus))
    };
    let p = mixed(&f);
    let q = mixed(&p);
    let num = &(&int(2) * &q) * &(&f * &f);
    let den = &(&p * &p) * &p;
    &int(4) - &num.try_div(&den).expect("non-degenerate metric")
}

// 7. Curvature catalogue, CP^1 and Veronese values, and a negative control.
fn curvature() -> Outcome {
    for (name, z) in g24_catalogue() {
        let res = gaussian_curvature(&z).map_err(fail)?;
        if !res.is_constant {
            return Err(format!("{name}: K = {} is not constant", res.curvature));
        }
        if res.curvature != curvature_oracle(&z) {
            return Err(format!("{name}: engine K = {} disagrees with the oracle", res.curvature));
        }
    }
    let cp1 = parse_matrix("[[1], [x+]]").map_err(fail)?;
    let z1_k = curvature_oracle(&z1());
    if z1_k != int(4) || curvature_oracle(&cp1) != int(4) {
        return Err(format!("oracle K(Z1) = {z1_k}"));
    }
    for n in 2..=6usize {
        let z = column(&veronese_u(n));
        let expected = RatFunc::constant(RadicalScalar::from_ratio(4, n as i64 - 1));
        let res = gaussian_curvature(&z).map_err(fail)?;
        if curvature_oracle(&z) != expected || res.curvature != expected {
            return Err(format!("Veronese N = {n}: K = {}, expected {expected}", res.curvature));
        }
    }
    let mut perturbed = z3();
    let entry = &perturbed.get(2, 0).body() + &(&(&xp() * &xp()) * &xp());
    perturbed.set(2, 0, GrassmannElem::scalar(entry));
    if gaussian_curvature(&perturbed).map_err(fail)?.is_constant {
        return Err("perturbed Z3 reported constant".into());
    }
    Ok("Z1..Z4 constant, K(CP^1) = 4, K = 4/(N-1) for N = 2..6, perturbed Z3 non-constant".into())
}

fn random_ratfunc(rng: &mut random::SeededRng) -> RatFunc {
    let num = random::poly(rng, 3);
    if rng.gen_bool(0.3) {
        let den = random::poly(rng, 2);
        if !den.is_zero() {
            return num.try_div(&den).expect("non-zero");
        }
    }
    num
}

const GOLDEN_INPUTS: [(&str, &str); 4] = [
    ("z1", "[[1,0],[0,1],[x+,0],[0,0]]"),
    ("z2_cos_3_5", "[[1,0],[0,1],[(9/25 - 16/25)*x+^2, sqrt(2)*x+*3/5],[sqrt(2)*x+*4/5, 0]]"),
    ("z3", "[[1,0],[0,1],[sqrt(3)*x+^2, sqrt(8/3)*x+],[0, sqrt(1/3)*x+]]"),
    ("z4", "[[1,0],[0,1],[2*x+^3, sqrt(3)*x+^2],[sqrt(3)*x+^2, 2*x+]]"),
];

// 8. Parser round trips and golden renderings.
fn parser() -> Outcome {
    let mut rng = random::rng(8);
    let mut trips = 0;
    for _ in 0..150 {
        let v = random_ratfunc(&mut rng);
        let back = parse_poly(&v.to_string()).map_err(|e| format!("{v}: {e}"))?;
        if back != v {
            return Err(format!("{v} reparsed as {back}"));
        }
        trips += 1;
    }
    for _ in 0..40 {
        let (r, c) = (rng.gen_range(1..=4), rng.gen_range(1..=3));
        let m = SuperMatrix::from_fn(r, c, |_, _| GrassmannElem::scalar(random_ratfunc(&mut rng)));
        if parse_matrix(&m.to_string()).map_err(fail)? != m {
            return Err(format!("matrix {m} did not round-trip"));
        }
        trips += 1;
    }
    for _ in 0..20 {
        let (m, n) = random::pick(&mut rng, &[(1, 2), (1, 3), (2, 3), (2, 4)]);
        let doc = SolutionDoc::from_macfarlane(&random::macfarlane(&mut rng, m, n, 3));
        if SolutionDoc::parse(&doc.to_string()).map_err(fail)? != doc {
            return Err(format!("document did not round-trip:\n{doc}"));
        }
        trips += 1;
    }
    let golden_dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden");
    let engine = [z1(), z2_sample(), z3(), z4()];
    for ((name, input), z) in GOLDEN_INPUTS.iter().zip(engine) {
        let parsed = parse_matrix(input).map_err(|e| format!("{name}: {e}"))?;
        if parsed != z {
            return Err(format!("{name}: parsed {parsed}, engine has {z}"));
        }
        let golden = fs::read_to_string(golden_dir.join(format!("{name}.txt"))).map_err(fail)?;
        let rendered = format!("{parsed}\n");
        if rendered != golden {
            return Err(format!("{name}: rendered\n{rendered}golden\n{golden}"));
        }
    }
    let doc = SolutionDoc::parse(G24_DOC).map_err(fail)?.to_string();
    if doc != fs::read_to_string(golden_dir.join("g24.txt")).map_err(fail)? {
        return Err(format!("g24 document rendered\n{doc}"));
    }
    Ok(format!("{trips} round trips, {} golden files byte-exact", GOLDEN_INPUTS.len() + 1))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("1 Veronese reduction", veronese_reduction),
        ("2 G(2,4) reduction", g24_reduction),
        ("3 inverse-component identities", inverse_components),
        ("4 super-derivative algebra", operator_algebra),
        ("5 projector laws and right-factor invariance", projector_laws),
        ("6 gauge matrix unitarity", gauge_unitarity),
        ("7 curvature catalogue", curvature),
        ("8 parser round trip and goldens", parser),
    ];
    let mut failures = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let t = start.elapsed();
        match outcome {
            Ok(detail) => println!("PASS {name}: {detail} [{t:.2?}]"),
            Err(why) => {
                failures += 1;
                println!("FAIL {name}: {why} [{t:.2?}]");
            }
        }
    }
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failures} criteria failed");
        ExitCode::FAILURE
    }
}
