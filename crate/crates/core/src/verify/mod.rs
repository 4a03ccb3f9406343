//! Runtime verification suites and the machine-readable report they produce.
//!
//! Each case measures one numerical identity, returns an error figure, and
//! is compared against a fixed tolerance. Randomized cases draw from their own
//! ChaCha stream keyed by `(seed, case index)`, so the report does not depend
//! on how cases are scheduled across threads.

mod suites;

use std::fmt;
use std::io::Write;
use std::path::Path;
use std::str::FromStr;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{require_positive, BcError, Result};
use crate::frft::ThetaParam;

pub use suites::Conventions;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Algebra,
    Hermite,
    Quadrature,
    Bargmann,
    Sbt,
    Frft,
    Mehler,
    Gaussian,
    All,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Algebra,
        Suite::Hermite,
        Suite::Quadrature,
        Suite::Bargmann,
        Suite::Sbt,
        Suite::Frft,
        Suite::Mehler,
        Suite::Gaussian,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Algebra => "algebra",
            Suite::Hermite => "hermite",
            Suite::Quadrature => "quadrature",
            Suite::Bargmann => "bargmann",
            Suite::Sbt => "sbt",
            Suite::Frft => "frft",
            Suite::Mehler => "mehler",
            Suite::Gaussian => "gaussian",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = BcError;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| BcError::InvalidParameter(format!("unknown suite {s:?}")))
    }
}

/// Inputs shared by every suite.
#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub sigma: f64,
    pub nu: f64,
    pub order: usize,
    pub seed: u64,
    /// Overrides the built-in set of unit-torus parameters in the frft suite.
    pub theta: Option<ThetaParam>,
    pub jobs: usize,
    /// Record wall time per case; off gives byte-identical reports.
    pub timing: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self { sigma: 1.0, nu: 2.0, order: 64, seed: 42, theta: None, jobs: 1, timing: true }
    }
}

impl VerifyConfig {
    pub fn validate(&self) -> Result<()> {
        require_positive("sigma", self.sigma)?;
        require_positive("nu", self.nu)?;
        if self.order < 16 {
            return Err(BcError::InvalidParameter(format!("order must be at least 16, got {}", self.order)));
        }
        if self.jobs == 0 {
            return Err(BcError::InvalidParameter("jobs must be at least 1".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportParams {
    pub sigma: f64,
    pub nu: f64,
    pub order: usize,
    pub seed: u64,
    pub jobs: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theta: Option<crate::bicomplex::Bicomplex>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CaseResult {
    pub id: String,
    pub desc: String,
    pub error: f64,
    pub tol: f64,
    pub pass: bool,
    pub ms: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub suite: String,
    pub params: ReportParams,
    pub cases: Vec<CaseResult>,
    /// Sign and parameter conventions fixed by numerical evidence.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conventions: Option<Conventions>,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.cases.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CaseResult> {
        self.cases.iter().filter(|c| !c.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn write_csv<W: Write>(&self, out: W) -> std::io::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        for c in &self.cases {
            w.serialize(c)?;
        }
        w.flush()
    }

    /// Writes `path` as JSON and the CSV mirror next to it.
    pub fn write_files(&self, path: &Path) -> std::io::Result<()> {
        std::fs::write(path, self.to_json() + "\n")?;
        self.write_csv(std::fs::File::create(path.with_extension("csv"))?)
    }
}

type CaseFn = Box<dyn Fn(&mut ChaCha8Rng) -> Result<f64> + Send + Sync>;

pub(crate) struct Case {
    id: String,
    desc: String,
    tol: f64,
    run: CaseFn,
}

impl Case {
    pub(crate) fn new(
        id: impl Into<String>,
        desc: impl Into<String>,
        tol: f64,
        run: impl Fn(&mut ChaCha8Rng) -> Result<f64> + Send + Sync + 'static,
    ) -> Self {
        Self { id: id.into(), desc: desc.into(), tol, run: Box::new(run) }
    }
}

fn run_case(index: usize, case: &Case, seed: u64, timing: bool) -> Result<CaseResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    let start = Instant::now();
    let error = (case.run)(&mut rng)?;
    let ms = if timing { start.elapsed().as_secs_f64() * 1e3 } else { 0.0 };
    Ok(CaseResult {
        id: case.id.clone(),
        desc: case.desc.clone(),
        error,
        tol: case.tol,
        pass: error.is_finite() && error <= case.tol,
        ms,
    })
}

/// Runs one suite (or all of them) and assembles the report in case order.
pub fn run(suite: Suite, config: &VerifyConfig) -> Result<VerificationReport> {
    config.validate()?;
    let selected: Vec<Suite> = if suite == Suite::All { Suite::ALL.to_vec() } else { vec![suite] };
    let mut cases = Vec::new();
    for s in &selected {
        cases.extend(suites::build(*s, config)?);
    }
    let results: Vec<Result<CaseResult>> = if config.jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(config.jobs)
            .build()
            .map_err(|e| BcError::InvalidParameter(e.to_string()))?;
        pool.install(|| {
            cases.par_iter().enumerate().map(|(i, c)| run_case(i, c, config.seed, config.timing)).collect()
        })
    } else {
        cases.iter().enumerate().map(|(i, c)| run_case(i, c, config.seed, config.timing)).collect()
    };
    let cases = results.into_iter().collect::<Result<Vec<_>>>()?;
    let conventions = selected
        .iter()
        .any(|s| matches!(s, Suite::Sbt | Suite::Frft))
        .then(|| suites::conventions(config))
        .transpose()?;
    Ok(VerificationReport {
        suite: suite.name().to_string(),
        params: ReportParams {
            sigma: config.sigma,
            nu: config.nu,
            order: config.order,
            seed: config.seed,
            jobs: config.jobs,
            theta: config.theta.map(|t| t.theta()),
        },
        cases,
        conventions,
    })
}
