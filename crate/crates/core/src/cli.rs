//! The `mdisc` command line: input parsing, subcommands and the built-in
//! example corpus.
//!
//! Input files are JSON:
//!
//! ```json
//! {"n": 2, "configs": [[[0,0],[1,0],[0,1],[1,1]], [[0,0],[1,0],[0,1],[1,1]]],
//!  "labels": ["f", "g"]}
//! ```
//!
//! `fit` samples may also carry `"degree": [..]`, the known cycle degree.
//!
//! Exit codes: 0 success, 1 a corpus example failed, 2 bad input,
//! 3 the two methods disagree, 4 size gate, 5 no generic weight found.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use itertools::Itertools;
use num_bigint::BigInt;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::cayley::{build_cayley, CayleySystem, PointConfig};
use crate::degree::Multidegree;
use crate::error::{Error, Result};
use crate::lattice::LatticePoint;
use crate::planar;
use crate::strata;
use crate::tropical::{self, DefectMethod, TropicalOptions};

#[derive(Parser, Debug)]
#[command(name = "mdisc", version, about = "Degrees of mixed discriminants")]
pub struct Cli {
    #[command(subcommand)]
    pub job: JobSpec,
}

#[derive(Subcommand, Debug, Clone, PartialEq, Eq)]
pub enum JobSpec {
    /// Multidegree of the discriminant cycle.
    Degree {
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Run the tropical method past the size gate.
        #[arg(long)]
        force: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        file: PathBuf,
    },
    /// Is the system defective?
    Defect {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        trials: usize,
        file: PathBuf,
    },
    /// Tropical matroid strata.
    Stratum {
        #[command(subcommand)]
        action: StratumAction,
    },
    /// Linear degree formula in Plücker coordinates for one block.
    Fit {
        /// Block number, starting at 1.
        #[arg(long)]
        block: usize,
        #[arg(long)]
        holdout: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(required = true)]
        samples: Vec<PathBuf>,
    },
    /// Built-in examples with known answers.
    Examples {
        #[arg(long, conflicts_with = "run")]
        list: bool,
        #[arg(long)]
        run: Option<String>,
    },
}

#[derive(Subcommand, Debug, Clone, PartialEq, Eq)]
pub enum StratumAction {
    Compare { a: PathBuf, b: PathBuf },
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Planar,
    Tropical,
    Both,
    /// Planar for two full-dimensional plane supports, tropical otherwise.
    Auto,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(Deserialize)]
struct InputFile {
    n: usize,
    configs: Vec<Vec<Vec<i64>>>,
    labels: Option<Vec<String>>,
    degree: Option<Vec<i64>>,
}

/// A parsed input file.
#[derive(Clone, Debug)]
pub struct Input {
    pub configs: Vec<PointConfig>,
    pub degree: Option<Vec<BigInt>>,
}

pub fn parse_config_str(text: &str) -> Result<Input> {
    let raw: InputFile = serde_json::from_str(text)?;
    if raw.configs.len() != raw.n {
        return Err(Error::DimensionMismatch(format!(
            "n = {} but {} configurations given",
            raw.n,
            raw.configs.len()
        )));
    }
    if let Some(labels) = &raw.labels {
        if labels.len() != raw.n {
            return Err(Error::Input(format!("{} labels for {} configurations", labels.len(), raw.n)));
        }
    }
    let mut configs = Vec::with_capacity(raw.n);
    for (k, block) in raw.configs.iter().enumerate() {
        if block.is_empty() {
            return Err(Error::EmptyConfig { block: k + 1 });
        }
        if let Some(p) = block.iter().find(|p| p.len() != raw.n) {
            return Err(Error::DimensionMismatch(format!(
                "point {p:?} in block {} has {} coordinates, expected {}",
                k + 1,
                p.len(),
                raw.n
            )));
        }
        let label = raw
            .labels
            .as_ref()
            .map(|l| l[k].clone())
            .unwrap_or_else(|| format!("A{}", k + 1));
        let points = block.iter().map(|p| LatticePoint::from_i64(p)).collect();
        let config = PointConfig::new(points, label).map_err(|e| match e {
            Error::DuplicatePoint { .. } => Error::DuplicatePoint { block: k + 1 },
            other => other,
        })?;
        configs.push(config);
    }
    if let Some(d) = &raw.degree {
        if d.len() != raw.n {
            return Err(Error::Input(format!("degree has {} entries, expected {}", d.len(), raw.n)));
        }
    }
    Ok(Input {
        configs,
        degree: raw.degree.map(|d| d.into_iter().map(BigInt::from).collect()),
    })
}

pub fn parse_config(path: &Path) -> Result<Vec<PointConfig>> {
    Ok(read_input(path)?.configs)
}

fn read_input(path: &Path) -> Result<Input> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
    parse_config_str(&text)
}

/// Serialize configurations in the input format.
pub fn to_json(configs: &[PointConfig]) -> Value {
    let pts = |c: &PointConfig| -> Value {
        c.points()
            .iter()
            .map(|p| p.coords().iter().map(big_json).collect::<Vec<_>>())
            .collect()
    };
    json!({
        "n": configs.len(),
        "configs": configs.iter().map(pts).collect::<Vec<_>>(),
        "labels": configs.iter().map(|c| c.label()).collect::<Vec<_>>(),
    })
}

/// A number when it fits in `i64`, otherwise a decimal string.
pub fn big_json(x: &BigInt) -> Value {
    match i64::try_from(x) {
        Ok(v) => json!(v),
        Err(_) => json!(x.to_string()),
    }
}

fn vec_json(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(big_json).collect())
}

fn tuple(v: &[BigInt]) -> String {
    format!("({})", v.iter().join(","))
}

/// Exit code and captured output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::SizeGate { .. } => 4,
        Error::GenericityFailure { .. } => 5,
        Error::Instability(_) | Error::Inconsistent(_) => 3,
        _ => 2,
    }
}

fn failure(e: Error) -> Outcome {
    let mut stderr = format!("error: {e}\n");
    if matches!(e, Error::SizeGate { .. }) {
        stderr.push_str("hint: pass --force to run anyway\n");
    }
    Outcome {
        code: exit_code(&e),
        stdout: String::new(),
        stderr,
    }
}

/// Parse arguments and run. Clap usage errors exit with code 2.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let out = run(&cli.job);
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    out.code
}

pub fn run(job: &JobSpec) -> Outcome {
    let result = match job {
        JobSpec::Degree {
            method,
            seed,
            force,
            format,
            file,
        } => run_degree(file, *method, *seed, *force, *format),
        JobSpec::Defect { seed, trials, file } => run_defect(file, *seed, *trials),
        JobSpec::Stratum {
            action: StratumAction::Compare { a, b },
        } => run_compare(a, b),
        JobSpec::Fit {
            block,
            holdout,
            seed,
            samples,
        } => run_fit(samples, *block, holdout.as_deref(), *seed),
        JobSpec::Examples { list, run } => return run_examples(*list, run.as_deref()),
    };
    result.unwrap_or_else(failure)
}

fn planar_applicable(sys: &CayleySystem) -> bool {
    sys.n() == 2 && sys.configs().iter().all(|c| c.affine_dim() == 2)
}

/// Result of `degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeReport {
    pub method: Method,
    pub seed: u64,
    pub planar: Option<Multidegree>,
    pub tropical: Option<Multidegree>,
}

impl DegreeReport {
    /// The reported degree (tropical when only it ran, planar otherwise).
    pub fn degree(&self) -> &Multidegree {
        self.planar.as_ref().or(self.tropical.as_ref()).unwrap()
    }

    pub fn agree(&self) -> Option<bool> {
        match (&self.planar, &self.tropical) {
            (Some(p), Some(t)) => Some(p.cycle == t.cycle),
            _ => None,
        }
    }

    pub fn to_json(&self) -> Value {
        let d = self.degree();
        let method = match self.method {
            Method::Planar => "planar",
            Method::Tropical => "tropical",
            Method::Both => "both",
            Method::Auto => "auto",
        };
        let mut v = json!({
            "method": method,
            "seed": self.seed,
            "latticeIndex": big_json(&d.lattice_index),
            "cycle": vec_json(&d.cycle),
            "reduced": d.reduced.as_deref().map(vec_json).unwrap_or(Value::Null),
            "defective": d.defective,
        });
        if let Some(a) = self.agree() {
            v["agree"] = json!(a);
            v["planarCycle"] = vec_json(&self.planar.as_ref().unwrap().cycle);
            v["tropicalCycle"] = vec_json(&self.tropical.as_ref().unwrap().cycle);
        }
        v
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let line = |s: &mut String, name: &str, d: &Multidegree| {
            let _ = writeln!(s, "{name} cycle degree: {}", tuple(&d.cycle));
        };
        if let Some(p) = &self.planar {
            line(&mut s, "planar", p);
        }
        if let Some(t) = &self.tropical {
            line(&mut s, "tropical", t);
        }
        let d = self.degree();
        let _ = writeln!(s, "lattice index: {}", d.lattice_index);
        match &d.reduced {
            Some(r) => {
                let _ = writeln!(s, "discriminant degree: {}", tuple(r));
            }
            None => {
                let _ = writeln!(s, "discriminant degree: not divisible by the lattice index");
            }
        }
        if d.defective {
            let _ = writeln!(s, "defective");
        }
        match self.agree() {
            Some(true) => s.push_str("AGREE\n"),
            Some(false) => s.push_str("DISAGREE\n"),
            None => {}
        }
        s
    }
}

/// Compute the degree of a system with the given method.
pub fn degree_report(sys: &CayleySystem, method: Method, seed: u64, force: bool) -> Result<DegreeReport> {
    let planar_ok = planar_applicable(sys);
    let (use_planar, use_tropical) = match method {
        Method::Planar => (true, false),
        Method::Tropical => (false, true),
        Method::Both => (true, true),
        Method::Auto => (planar_ok, !planar_ok),
    };
    if use_planar && !planar_ok {
        return Err(Error::Input(
            "the planar method needs two full-dimensional configurations in Z^2".into(),
        ));
    }
    let planar = if use_planar {
        let c = sys.configs();
        Some(planar::planar_bidegree(&c[0], &c[1])?)
    } else {
        None
    };
    let tropical = if use_tropical {
        let opts = TropicalOptions {
            seed,
            force,
            ..TropicalOptions::default()
        };
        Some(tropical::tropical_run(sys, &opts)?.degree)
    } else {
        None
    };
    Ok(DegreeReport {
        method,
        seed,
        planar,
        tropical,
    })
}

fn run_degree(file: &Path, method: Method, seed: u64, force: bool, format: Format) -> Result<Outcome> {
    let sys = build_cayley(parse_config(file)?)?;
    let report = degree_report(&sys, method, seed, force)?;
    let stdout = match format {
        Format::Text => report.to_text(),
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&report.to_json())?),
    };
    let code = if report.agree() == Some(false) { 3 } else { 0 };
    Ok(Outcome {
        code,
        stdout,
        stderr: String::new(),
    })
}

fn run_defect(file: &Path, seed: u64, trials: usize) -> Result<Outcome> {
    let sys = build_cayley(parse_config(file)?)?;
    let v = tropical::is_defective(&sys, seed, trials)?;
    let verdict = if v.defective { "defective" } else { "non-defective" };
    let how = match v.method {
        DefectMethod::PlanarExact => "planar, exact".to_string(),
        DefectMethod::PlanarOneDim => "planar one-dimensional, exact".to_string(),
        DefectMethod::MonteCarlo { trials } => format!("tropical, {trials} weights, not certified"),
    };
    Ok(Outcome::ok(format!("{verdict} ({how})\n")))
}

fn run_compare(a: &Path, b: &Path) -> Result<Outcome> {
    let fa = strata::fingerprint(&build_cayley(parse_config(a)?)?)?;
    let fb = strata::fingerprint(&build_cayley(parse_config(b)?)?)?;
    let verdict = if strata::same_stratum(&fa, &fb) {
        "SAME-STRATUM"
    } else {
        "DIFFERENT-STRATUM"
    };
    Ok(Outcome::ok(format!("{verdict}\n")))
}

fn load_sample(path: &Path, seed: u64) -> Result<(CayleySystem, Multidegree)> {
    let input = read_input(path)?;
    let sys = build_cayley(input.configs)?;
    let deg = match input.degree {
        Some(d) => Multidegree::new(d, sys.lattice_index().clone()),
        None => tropical::tropical_degree(&sys, seed)?,
    };
    Ok((sys, deg))
}

fn run_fit(samples: &[PathBuf], block: usize, holdout: Option<&Path>, seed: u64) -> Result<Outcome> {
    if block == 0 {
        return Err(Error::Input("blocks are numbered from 1".into()));
    }
    let data: Vec<(CayleySystem, Multidegree)> = samples
        .iter()
        .map(|p| load_sample(p, seed))
        .collect::<Result<_>>()?;
    let held = holdout.map(|p| load_sample(p, seed)).transpose()?;
    let formula = strata::fit_degree_formula(&data, block - 1, held.as_ref().map(|(s, d)| (s, d)))?;
    let mut s = String::new();
    let _ = writeln!(s, "block {block} degree = {formula}");
    let _ = writeln!(
        s,
        "{} terms, {} samples reproduced, unique modulo {} vanishing forms",
        formula.terms(),
        data.len(),
        formula.vanishing.len()
    );
    if let Some((_, d)) = &held {
        let _ = writeln!(s, "held-out degree {} reproduced", d.cycle[block - 1]);
    }
    Ok(Outcome::ok(s))
}

/// What a corpus entry checks.
#[derive(Clone, Debug)]
pub enum Expectation {
    /// Cycle degree by the given method (`Both` also requires agreement).
    Degree {
        method: Method,
        cycle: Vec<i64>,
        lattice_index: i64,
    },
    Defective(bool),
    /// Whether the two systems share a tropical matroid stratum.
    Stratum { other: Vec<PointConfig>, same: bool },
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: &'static str,
    pub summary: &'static str,
    pub configs: Vec<PointConfig>,
    pub expect: Expectation,
}

fn tri3(a: [[i64; 3]; 3]) -> PointConfig {
    PointConfig::from_i64(&[&a[0], &a[1], &a[2]])
}

/// `f = a1 x + a2 y^p + a3 z^p`, `g = b1 x^q + b2 y + b3 z^q`,
/// `h = c1 x^r + c2 y^r + c3 z`.
pub fn trinomial_system(p: i64, q: i64, r: i64) -> Vec<PointConfig> {
    vec![
        tri3([[1, 0, 0], [0, p, 0], [0, 0, p]]),
        tri3([[q, 0, 0], [0, 1, 0], [0, 0, q]]),
        tri3([[r, 0, 0], [0, r, 0], [0, 0, 1]]),
    ]
}

/// Closed-form piecewise formula for the trinomial system.
pub fn trinomial_formula(p: i64, q: i64, r: i64) -> Vec<i64> {
    vec![
        2 * p * q * r + q * q * r + q * r * r - q - r - 1 - p * q.min(r),
        2 * p * q * r + p * p * r + p * r * r - p - r - 1 - q * r.min(p),
        2 * p * q * r + p * p * q + p * q * q - p - q - 1 - r * p.min(q),
    ]
}

/// `f_i = c_i0 + c_i1 x_1^{d_i} + ... + c_in x_n^{d_i}`.
pub fn pure_power_system(d: &[i64]) -> Vec<PointConfig> {
    d.iter()
        .map(|&k| PointConfig::simplex_vertices(d.len(), k))
        .collect()
}

/// `d_1 ... d̂_i ... d_n (d_i - n d_1 + d_2 + ... + d_n)` for sorted `d`.
pub fn pure_power_formula(d: &[i64]) -> Vec<i64> {
    let n = d.len() as i64;
    let tail: i64 = d[1..].iter().sum();
    (0..d.len())
        .map(|i| {
            let others: i64 = d.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, x)| x).product();
            others * (d[i] - n * d[0] + tail)
        })
        .collect()
}

fn sparse_pair(d1: i64, d2: i64) -> Vec<PointConfig> {
    vec![
        PointConfig::simplex_vertices(2, d1),
        PointConfig::simplex_vertices(2, d2),
    ]
}

fn square_triangle() -> Vec<PointConfig> {
    vec![
        PointConfig::unit_square(),
        PointConfig::from_pairs(&[(0, 0), (1, 3), (-1, 2), (0, 1), (0, 2)]),
    ]
}

pub fn corpus() -> Vec<CorpusEntry> {
    let degree = |method, cycle: &[i64], lattice_index| Expectation::Degree {
        method,
        cycle: cycle.to_vec(),
        lattice_index,
    };
    vec![
        CorpusEntry {
            name: "two-univariate-quadrics",
            summary: "quadrics in different variables; never a multiple root",
            configs: vec![
                PointConfig::from_pairs(&[(0, 0), (1, 0), (2, 0)]),
                PointConfig::from_pairs(&[(0, 0), (0, 1), (0, 2)]),
            ],
            expect: Expectation::Defective(true),
        },
        CorpusEntry {
            name: "hyperdet-2x2x2",
            summary: "two bilinear forms; the 2x2x2 hyperdeterminant",
            configs: vec![PointConfig::unit_square(), PointConfig::unit_square()],
            expect: degree(Method::Both, &[2, 2], 1),
        },
        CorpusEntry {
            name: "tact-2-2",
            summary: "tact invariant of two conics",
            configs: vec![PointConfig::dense_triangle(2), PointConfig::dense_triangle(2)],
            expect: degree(Method::Planar, &[6, 6], 1),
        },
        CorpusEntry {
            name: "tact-2-3",
            summary: "tact invariant of a conic and a cubic",
            configs: vec![PointConfig::dense_triangle(2), PointConfig::dense_triangle(3)],
            expect: degree(Method::Planar, &[12, 10], 1),
        },
        CorpusEntry {
            name: "sparse-coprime-2-3",
            summary: "c0 + c1 x^d + c2 y^d for d = 2, 3",
            configs: sparse_pair(2, 3),
            expect: degree(Method::Both, &[3, 4], 1),
        },
        CorpusEntry {
            name: "dense-negative-1-1",
            summary: "dense triangles 1·s2 and -1·s2",
            configs: vec![PointConfig::dense_triangle(1), PointConfig::dense_triangle(-1)],
            expect: degree(Method::Both, &[2, 2], 1),
        },
        CorpusEntry {
            name: "sparse-negative-2-2",
            summary: "2σ2 and -2σ2; the cycle is the fourth power",
            configs: sparse_pair(2, -2),
            expect: degree(Method::Both, &[8, 8], 4),
        },
        CorpusEntry {
            name: "square-triangle",
            summary: "unit square against a lattice triangle with two interior points",
            configs: square_triangle(),
            expect: degree(Method::Both, &[12, 8], 1),
        },
        CorpusEntry {
            name: "square-triangle-reduced",
            summary: "the same with (0,1) removed from the second block",
            configs: {
                let mut c = square_triangle();
                c[1] = c[1].without(&LatticePoint::from_i64(&[0, 1])).unwrap();
                c
            },
            expect: degree(Method::Both, &[12, 7], 1),
        },
        CorpusEntry {
            name: "strata-same-sign",
            summary: "3σ2,2σ2 and 5σ2,2σ2 share a stratum",
            configs: sparse_pair(3, 2),
            expect: Expectation::Stratum {
                other: sparse_pair(5, 2),
                same: true,
            },
        },
        CorpusEntry {
            name: "strata-mixed-sign",
            summary: "3σ2,2σ2 and 3σ2,-2σ2 lie in different strata",
            configs: sparse_pair(3, 2),
            expect: Expectation::Stratum {
                other: sparse_pair(3, -2),
                same: false,
            },
        },
        CorpusEntry {
            name: "trinomial-2-2-2",
            summary: "three trinomials, p = q = r = 2, against the closed-form formula",
            configs: trinomial_system(2, 2, 2),
            expect: degree(Method::Tropical, &trinomial_formula(2, 2, 2), 1),
        },
        CorpusEntry {
            name: "trinomial-2-3-4",
            summary: "three trinomials, (p,q,r) = (2,3,4), against the closed-form formula",
            configs: trinomial_system(2, 3, 4),
            expect: degree(Method::Tropical, &trinomial_formula(2, 3, 4), 1),
        },
        CorpusEntry {
            name: "pure-power-1-2-3",
            summary: "c_i0 + Σ c_ij x_j^{d_i} with d = (1,2,3)",
            configs: pure_power_system(&[1, 2, 3]),
            expect: degree(Method::Tropical, &[18, 12, 10], 1),
        },
    ]
}

/// Run one corpus entry. Returns whether it matched and a one-line report.
pub fn check_entry(entry: &CorpusEntry, seed: u64) -> Result<(bool, String)> {
    let sys = build_cayley(entry.configs.clone())?;
    Ok(match &entry.expect {
        Expectation::Degree {
            method,
            cycle,
            lattice_index,
        } => {
            let r = degree_report(&sys, *method, seed, false)?;
            let got = r.degree();
            let want: Vec<BigInt> = cycle.iter().map(|&c| BigInt::from(c)).collect();
            let ok = got.cycle == want
                && got.lattice_index == BigInt::from(*lattice_index)
                && r.agree() != Some(false);
            let mut msg = format!("cycle {} i(A) = {}", tuple(&got.cycle), got.lattice_index);
            if r.agree() == Some(true) {
                msg.push_str(", methods agree");
            }
            if !ok {
                let _ = write!(msg, ", expected {} i(A) = {lattice_index}", tuple(&want));
            }
            (ok, msg)
        }
        Expectation::Defective(want) => {
            let v = tropical::is_defective(&sys, seed, 5)?;
            let word = |d: bool| if d { "defective" } else { "non-defective" };
            (v.defective == *want, word(v.defective).to_string())
        }
        Expectation::Stratum { other, same } => {
            let fa = strata::fingerprint(&sys)?;
            let fb = strata::fingerprint(&build_cayley(other.clone())?)?;
            let got = strata::same_stratum(&fa, &fb);
            let word = |s: bool| if s { "SAME-STRATUM" } else { "DIFFERENT-STRATUM" };
            (got == *same, word(got).to_string())
        }
    })
}

fn run_examples(list: bool, name: Option<&str>) -> Outcome {
    let entries = corpus();
    if list {
        let width = entries.iter().map(|e| e.name.len()).max().unwrap_or(0);
        let s = entries
            .iter()
            .map(|e| format!("{:width$}  {}\n", e.name, e.summary))
            .collect();
        return Outcome::ok(s);
    }
    let selected: Vec<&CorpusEntry> = match name {
        Some(n) => match entries.iter().find(|e| e.name == n) {
            Some(e) => vec![e],
            None => {
                return failure(Error::Input(format!(
                    "unknown example {n:?}; try `mdisc examples --list`"
                )))
            }
        },
        None => entries.iter().collect(),
    };
    let mut out = String::new();
    let mut all = true;
    for e in selected {
        match check_entry(e, 0) {
            Ok((ok, msg)) => {
                all &= ok;
                let _ = writeln!(out, "{} {}: {msg}", if ok { "PASS" } else { "FAIL" }, e.name);
            }
            Err(err) => {
                all = false;
                let _ = writeln!(out, "FAIL {}: {err}", e.name);
            }
        }
    }
    Outcome {
        code: if all { 0 } else { 1 },
        stdout: out,
        stderr: String::new(),
    }
}
