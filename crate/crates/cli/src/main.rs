use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use supergauge::curvature::{check_catalogue, gaussian_curvature};
use supergauge::examples::{g24_reduced_beta, g24_w, veronese_reduced, veronese_w, G24Params, VeroneseData};
use supergauge::gauge::{certify_equivalence_sampled, check_scalar_lift, reduce, Sampling};
use supergauge::parser::{parse_matrix, parse_poly, SolutionDoc};
use supergauge::report::{ReportFormat, VerificationReport};
use supergauge::superfield::{check_inverse_components, check_projector, holomorphy_certificate, MacFarlaneW};

/// Exact verification of holomorphic supersymmetric Grassmannian sigma-model
/// solutions.
#[derive(Debug, Parser)]
#[command(name = "supergauge", version)]
struct Cli {
    /// Seed for numeric sample points.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Number of numeric sample points per equivalence check.
    #[arg(long, global = true, default_value_t = 5)]
    points: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Certify a solution file: holomorphy, inverse components, projector laws.
    Certify { file: PathBuf },
    /// Reduce a solution file to A_R = (0; beta - K alpha) and certify equivalence.
    Reduce { file: PathBuf },
    /// Curvature of a matrix file, or `catalogue` for the four G(2,4) maps.
    Curvature { target: String },
    /// Regenerate and re-verify a built-in example.
    Examples {
        #[command(subcommand)]
        which: Example,
    },
}

#[derive(Debug, Subcommand)]
enum Example {
    /// Veronese solution of CP^{N-1}.
    Veronese {
        n: usize,
        #[arg(long, default_value = "1 + x+")]
        a0: String,
        #[arg(long, default_value = "x+^2")]
        a1: String,
    },
    /// Special G(2,4) solution with K = [[x+, 0], [0, 0]].
    G24,
}

struct Out {
    format: Format,
    reports: Vec<VerificationReport>,
}

impl Out {
    fn value(&self, name: &str, text: &str) {
        match self.format {
            Format::Text => println!("{name} = {text}"),
            Format::Structured => {
                let flat: Vec<&str> = text.lines().map(str::trim).collect();
                println!("value={name} expr=\"{}\"", flat.join(" ").replace('"', "\\\""));
            }
        }
    }

    fn report(&mut self, r: VerificationReport) {
        let format = match self.format {
            Format::Text => ReportFormat::Text,
            Format::Structured => ReportFormat::Structured,
        };
        print!("{}", r.render(format));
        self.reports.push(r);
    }

    fn exit_code(&self) -> ExitCode {
        let failed: Vec<_> = self.reports.iter().filter_map(|r| r.first_failure()).collect();
        match failed.first() {
            None => ExitCode::SUCCESS,
            Some(c) => {
                eprintln!("failed: {}", c.name);
                ExitCode::from(1)
            }
        }
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load_solution(path: &Path) -> Result<MacFarlaneW> {
    let doc = SolutionDoc::parse(&read(path)?).with_context(|| format!("parsing {}", path.display()))?;
    Ok(doc.to_macfarlane()?)
}

fn equivalence(out: &mut Out, w: &MacFarlaneW, w_r: &MacFarlaneW, sampling: Sampling) -> Result<()> {
    out.report(certify_equivalence_sampled(w, w_r, sampling)?);
    if w.m() == 1 {
        out.report(check_scalar_lift(w)?);
    }
    Ok(())
}

fn run(cli: &Cli, out: &mut Out) -> Result<()> {
    let sampling = Sampling { points: cli.points, seed: cli.seed };
    match &cli.command {
        Command::Certify { file } => {
            let w = load_solution(file)?;
            out.report(holomorphy_certificate(&w)?);
            out.report(check_inverse_components(&w)?);
            out.report(check_projector(&w.w())?);
        }
        Command::Reduce { file } => {
            let w = load_solution(file)?;
            let w_r = reduce(&w)?;
            out.value("A_R", &w_r.a().to_string());
            equivalence(out, &w, &w_r, sampling)?;
        }
        Command::Curvature { target } if target == "catalogue" => out.report(check_catalogue()?),
        Command::Curvature { target } => {
            let path = Path::new(target);
            let text: String = read(path)?.lines().map(|l| l.split('#').next().unwrap_or("")).collect::<Vec<_>>().join("\n");
            let z = parse_matrix(&text).with_context(|| format!("parsing {}", path.display()))?;
            let res = gaussian_curvature(&z)?;
            out.value("K", &res.curvature.to_string());
            let mut r = VerificationReport::new("curvature");
            r.record("curvature is constant", res.is_constant, || format!("K = {}", res.curvature));
            out.report(r);
        }
        Command::Examples { which: Example::Veronese { n, a0, a1 } } => {
            let d = VeroneseData { n: *n, a0: parse_poly(a0)?, a1: parse_poly(a1)? };
            let w = veronese_w(&d)?;
            let closed = veronese_reduced(&d)?;
            let w_r = reduce(&w)?;
            for i in 0..*n {
                out.value(&format!("a_R{i}"), &w_r.a().get(i, 0).body().to_string());
            }
            let mut r = VerificationReport::new("veronese");
            r.check_matrix_eq("reduce(W) = closed-form a_Rn", w_r.a(), closed.a())?;
            out.report(r);
            out.report(holomorphy_certificate(&w)?);
            equivalence(out, &w, &w_r, sampling)?;
        }
        Command::Examples { which: Example::G24 } => {
            let p = G24Params::sample();
            let w = g24_w(&p)?;
            let w_r = reduce(&w)?;
            out.value("beta_R", &w_r.a().row_block(2, 4).to_string());
            let mut r = VerificationReport::new("g24");
            r.check_matrix_zero("alpha_R = 0", &w_r.a().row_block(0, 2));
            r.check_matrix_eq("beta_R = [[b11 - a11 x+, c0 + c1 x+], [b0 + b1 x+, d0]]", &w_r.a().row_block(2, 4), &g24_reduced_beta(&p))?;
            out.report(r);
            out.report(holomorphy_certificate(&w)?);
            out.report(check_inverse_components(&w)?);
            equivalence(out, &w, &w_r, sampling)?;
        }
    }
    if out.reports.is_empty() {
        bail!("no checks were run");
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = Out { format: cli.format, reports: Vec::new() };
    match run(&cli, &mut out) {
        Ok(()) => out.exit_code(),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
