use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Serialize;

use bicomplex_sbt::bargmann::{kernel_k_bc, kernel_k_c, HermiteCoeffVector, MonomialCoeffVector};
use bicomplex_sbt::frft::{ck_frft_kernel, frft_coeff, frft_inverse, frft_kernel, mehler_closed, mehler_series, ThetaParam};
use bicomplex_sbt::transforms::{sbt_forward, sbt_inverse_coeff, sbt_kernel_bc, sbt_kernel_c};
use bicomplex_sbt::verify::{self, Suite, VerifyConfig};
use bicomplex_sbt::{BcError, Bicomplex};

#[derive(Parser)]
#[command(name = "bicomplex-sbt", version, about = "Bicomplex Segal-Bargmann and fractional Fourier transforms")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites and write a JSON report plus a CSV mirror.
    Verify(VerifyArgs),
    /// Forward or inverse Segal-Bargmann transform of a coefficient vector.
    Transform(TransformArgs),
    /// Fractional Fourier transform of a Hermite coefficient vector.
    Frft(FrftArgs),
    /// Evaluate one of the kernels at a point.
    Kernel(KernelArgs),
    /// Compare the Mehler series against its closed form on a grid (CSV).
    Mehler(MehlerArgs),
}

#[derive(Args, Clone)]
struct ThetaArgs {
    /// θ as one real number or four components x1,y1,x2,y2.
    #[arg(long, allow_hyphen_values = true, conflicts_with = "theta_phases")]
    theta: Option<String>,
    /// θ = e^{iφ₁}e+ + e^{iφ₂}e− given as φ₁,φ₂.
    #[arg(long, allow_hyphen_values = true)]
    theta_phases: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, default_value_t = 1.0)]
    sigma: f64,
    #[arg(long, default_value_t = 2.0)]
    nu: f64,
    #[arg(long, default_value_t = 64)]
    order: usize,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// JSON report path; the CSV goes next to it. Without it the JSON is printed.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Write 0 for every case's wall time so reports are byte-identical.
    #[arg(long)]
    no_timing: bool,
    #[command(flatten)]
    theta: ThetaArgs,
}

#[derive(Args)]
struct TransformArgs {
    /// Coefficient vector JSON file, or - for standard input.
    #[arg(long)]
    input: String,
    /// Map a monomial vector back to Hermite coefficients.
    #[arg(long)]
    inverse: bool,
    /// Target ν of the forward transform.
    #[arg(long, default_value_t = 2.0)]
    nu: f64,
    /// Target σ of the inverse transform.
    #[arg(long, default_value_t = 1.0)]
    sigma: f64,
    /// Evaluate the result instead of printing coefficients: Z=x1,y1,x2,y2 or x=value.
    #[arg(long, allow_hyphen_values = true)]
    eval: Option<String>,
}

#[derive(Args)]
struct FrftArgs {
    #[arg(long)]
    input: String,
    #[command(flatten)]
    theta: ThetaArgs,
    /// Apply F_θ* instead of F_θ.
    #[arg(long)]
    inverse: bool,
    /// Evaluate the result at y=value instead of printing coefficients.
    #[arg(long, allow_hyphen_values = true)]
    eval: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
#[value(rename_all = "lower")]
enum KernelType {
    /// e^{γ z w̄} on ℂ.
    Kc,
    /// e^{(ν/2) Z W*} on 𝔹ℂ.
    Kbc,
    /// Segal-Bargmann kernel on ℂ.
    Sbtc,
    /// Segal-Bargmann kernel on 𝔹ℂ.
    Sbt,
    /// Fractional Fourier kernel.
    Frft,
    /// Cauchy-Kowalewski extension of the fractional Fourier kernel.
    Ck,
}

#[derive(Args)]
struct KernelArgs {
    #[arg(long = "type", value_enum, ignore_case = true)]
    kind: KernelType,
    #[arg(long, default_value_t = 1.0)]
    sigma: f64,
    #[arg(long, default_value_t = 2.0)]
    nu: f64,
    /// γ of the complex kernels; defaults to ν/2.
    #[arg(long)]
    gamma: Option<f64>,
    /// First point: four components for 𝔹ℂ, two for ℂ.
    #[arg(long = "Z", alias = "z", allow_hyphen_values = true)]
    z: Option<String>,
    #[arg(long = "W", alias = "w", allow_hyphen_values = true)]
    w: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    x: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    y: Option<f64>,
    #[command(flatten)]
    theta: ThetaArgs,
}

#[derive(Args)]
struct MehlerArgs {
    #[command(flatten)]
    theta: ThetaArgs,
    #[arg(long, default_value_t = 1.0)]
    sigma: f64,
    /// start:stop:step, used for both x and y.
    #[arg(long, default_value = "-2:2:0.5", allow_hyphen_values = true)]
    grid: String,
    /// Highest index n kept in the series.
    #[arg(long, default_value_t = 60)]
    terms: usize,
    /// Exit 1 when any grid point differs by more than this.
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
}

enum Failure {
    /// Bad flags, bad input, or a parameter the library rejects.
    Config(String),
    /// The command ran but a check failed.
    Check(String),
}

impl From<BcError> for Failure {
    fn from(e: BcError) -> Self {
        Failure::Config(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Config(e.to_string())
    }
}

type CliResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify(a) => cmd_verify(a),
        Command::Transform(a) => cmd_transform(a),
        Command::Frft(a) => cmd_frft(a),
        Command::Kernel(a) => cmd_kernel(a),
        Command::Mehler(a) => cmd_mehler(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Config(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn parse_floats(s: &str) -> Result<Vec<f64>, Failure> {
    s.split(',')
        .map(|t| t.trim().parse::<f64>().map_err(|e| Failure::Config(format!("bad number {t:?}: {e}"))))
        .collect()
}

/// Strips an optional `name=` prefix.
fn strip_key<'a>(s: &'a str, key: &str) -> &'a str {
    s.strip_prefix(key).and_then(|r| r.strip_prefix('=')).unwrap_or(s)
}

fn parse_bicomplex(s: &str) -> Result<Bicomplex, Failure> {
    match parse_floats(s)?.as_slice() {
        [x] => Ok(Bicomplex::real(*x)),
        [a, b, c, d] => Ok(Bicomplex::new(*a, *b, *c, *d)),
        v => Err(Failure::Config(format!("expected 1 or 4 components, got {}", v.len()))),
    }
}

fn parse_complex(s: &str) -> Result<Complex64, Failure> {
    match parse_floats(s)?.as_slice() {
        [x] => Ok(Complex64::new(*x, 0.0)),
        [re, im] => Ok(Complex64::new(*re, *im)),
        v => Err(Failure::Config(format!("expected 1 or 2 components, got {}", v.len()))),
    }
}

impl ThetaArgs {
    fn value(&self) -> Result<Option<Bicomplex>, Failure> {
        match (&self.theta, &self.theta_phases) {
            (Some(t), _) => parse_bicomplex(t).map(Some),
            (None, Some(p)) => match parse_floats(p)?.as_slice() {
                [a, b] => Ok(Some(ThetaParam::from_phases(*a, *b)?.theta())),
                v => Err(Failure::Config(format!("--theta-phases needs 2 numbers, got {}", v.len()))),
            },
            (None, None) => Ok(None),
        }
    }

    fn torus(&self) -> Result<ThetaParam, Failure> {
        let theta = self.value()?.ok_or_else(|| Failure::Config("--theta or --theta-phases is required".into()))?;
        Ok(ThetaParam::unit_torus(theta)?)
    }
}

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Config(format!("{path}: {e}")))
    }
}

fn parse_json<T: serde::de::DeserializeOwned>(text: &str) -> Result<T, Failure> {
    serde_json::from_str(text).map_err(|e| Failure::Config(format!("input does not match the schema: {e}")))
}

fn print_json<T: Serialize>(value: &T) -> CliResult {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value).map_err(|e| Failure::Config(e.to_string()))?;
    writeln!(out)?;
    Ok(())
}

#[derive(Serialize)]
struct PointValue {
    at: serde_json::Value,
    value: Bicomplex,
}

fn cmd_verify(a: VerifyArgs) -> CliResult {
    let suite: Suite = a.suite.parse()?;
    let theta = match a.theta.value()? {
        Some(t) => Some(ThetaParam::unit_torus(t)?),
        None => None,
    };
    let config = VerifyConfig {
        sigma: a.sigma,
        nu: a.nu,
        order: a.order,
        seed: a.seed,
        theta,
        jobs: a.jobs,
        timing: !a.no_timing,
    };
    let report = verify::run(suite, &config)?;
    for c in &report.cases {
        eprintln!("{} {:<36} error {:.3e}  tol {:.1e}", if c.pass { "PASS" } else { "FAIL" }, c.id, c.error, c.tol);
    }
    match &a.out {
        Some(path) => report.write_files(path)?,
        None => println!("{}", report.to_json()),
    }
    let failed = report.failures().count();
    if failed > 0 {
        return Err(Failure::Check(format!("{failed} of {} cases failed", report.cases.len())));
    }
    Ok(())
}

fn cmd_transform(a: TransformArgs) -> CliResult {
    let text = read_input(&a.input)?;
    if a.inverse {
        let f: MonomialCoeffVector = parse_json(&text)?;
        let out = sbt_inverse_coeff(&f, a.sigma)?;
        match &a.eval {
            Some(e) => {
                let x = parse_floats(strip_key(e, "x"))?;
                let [x] = x.as_slice() else { return Err(Failure::Config("--eval expects x=value".into())) };
                print_json(&PointValue { at: serde_json::json!({ "x": x }), value: out.eval(*x) })
            }
            None => print_json(&out),
        }
    } else {
        let phi: HermiteCoeffVector = parse_json(&text)?;
        let out = sbt_forward(&phi, a.nu)?;
        match &a.eval {
            Some(e) => {
                let z = parse_bicomplex(strip_key(e, "Z"))?;
                print_json(&PointValue { at: serde_json::json!({ "Z": z }), value: out.eval(z) })
            }
            None => print_json(&out),
        }
    }
}

fn cmd_frft(a: FrftArgs) -> CliResult {
    let psi: HermiteCoeffVector = parse_json(&read_input(&a.input)?)?;
    let theta = a.theta.torus()?;
    let out = if a.inverse { frft_inverse(&psi, &theta)? } else { frft_coeff(&psi, &theta)? };
    match &a.eval {
        Some(e) => {
            let y = parse_floats(strip_key(e, "y"))?;
            let [y] = y.as_slice() else { return Err(Failure::Config("--eval expects y=value".into())) };
            print_json(&PointValue { at: serde_json::json!({ "y": y }), value: out.eval(*y) })
        }
        None => print_json(&out),
    }
}

fn cmd_kernel(a: KernelArgs) -> CliResult {
    let need = |v: &Option<String>, name: &str| v.clone().ok_or_else(|| Failure::Config(format!("--{name} is required")));
    let need_f = |v: Option<f64>, name: &str| v.ok_or_else(|| Failure::Config(format!("--{name} is required")));
    let gamma = a.gamma.unwrap_or(0.5 * a.nu);
    let value = match a.kind {
        KernelType::Kc => {
            let (z, w) = (parse_complex(&need(&a.z, "Z")?)?, parse_complex(&need(&a.w, "W")?)?);
            Bicomplex::from_complex(kernel_k_c(gamma, z, w))
        }
        KernelType::Kbc => {
            let (z, w) = (parse_bicomplex(&need(&a.z, "Z")?)?, parse_bicomplex(&need(&a.w, "W")?)?);
            kernel_k_bc(a.nu, z, w)
        }
        KernelType::Sbtc => {
            let z = parse_complex(&need(&a.z, "Z")?)?;
            Bicomplex::from_complex(sbt_kernel_c(a.sigma, gamma, need_f(a.x, "x")?, z))
        }
        KernelType::Sbt => sbt_kernel_bc(a.sigma, a.nu, need_f(a.x, "x")?, parse_bicomplex(&need(&a.z, "Z")?)?),
        KernelType::Frft => frft_kernel(a.sigma, &a.theta.torus()?, need_f(a.x, "x")?, need_f(a.y, "y")?)?,
        KernelType::Ck => {
            let theta = a.theta.value()?.ok_or_else(|| Failure::Config("--theta or --theta-phases is required".into()))?;
            ck_frft_kernel(a.sigma, theta, need_f(a.x, "x")?, parse_bicomplex(&need(&a.z, "Z")?)?)?
        }
    };
    print_json(&serde_json::json!({ "value": value }))
}

fn parse_grid(s: &str) -> Result<Vec<f64>, Failure> {
    let parts: Vec<f64> = s
        .split(':')
        .map(|t| t.trim().parse::<f64>().map_err(|e| Failure::Config(format!("bad grid {s:?}: {e}"))))
        .collect::<Result<_, _>>()?;
    let [start, stop, step] = parts.as_slice() else {
        return Err(Failure::Config(format!("grid must be start:stop:step, got {s:?}")));
    };
    if step.is_nan() || *step <= 0.0 || stop < start {
        return Err(Failure::Config(format!("grid {s:?} is empty or has a non-positive step")));
    }
    let n = ((stop - start) / step + 1e-9).floor() as usize;
    Ok((0..=n).map(|k| start + k as f64 * step).collect())
}

fn cmd_mehler(a: MehlerArgs) -> CliResult {
    let theta = a.theta.value()?.ok_or_else(|| Failure::Config("--theta or --theta-phases is required".into()))?;
    let grid = parse_grid(&a.grid)?;
    let mut w = csv::Writer::from_writer(io::stdout().lock());
    let csv_err = |e: csv::Error| Failure::Config(e.to_string());
    w.write_record(["x", "y", "closed_x1", "closed_y1", "closed_x2", "closed_y2", "error"]).map_err(csv_err)?;
    let mut worst = 0.0f64;
    for &x in &grid {
        for &y in &grid {
            let closed = mehler_closed(a.sigma, theta, x, y)?;
            let err = mehler_series(a.sigma, theta, x, y, a.terms + 1).max_abs_diff(&closed);
            worst = worst.max(err);
            let row = [x, y, closed.x1, closed.y1, closed.x2, closed.y2, err];
            w.write_record(row.iter().map(|v| format!("{v:e}"))).map_err(csv_err)?;
        }
    }
    w.flush()?;
    if worst.is_nan() || worst > a.tol {
        return Err(Failure::Check(format!("max series error {worst:e} exceeds {:e}", a.tol)));
    }
    Ok(())
}
