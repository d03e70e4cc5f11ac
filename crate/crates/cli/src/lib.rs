//! Command-line front end: argument handling, report types and rendering.
//!
//! Every command produces a [`Report`] that serializes to JSON with a
//! `command` tag, can be parsed back with [`parse_report`] and re-validated.

use std::fmt::Write as _;

use acis::error::Error;
use acis::gorenstein::{
    conjecture_check, constant_signature, ev_levine, h0m_general, jacobian_module,
    pairing_homological, pencil_signature, real_branches, signature, ConjectureReport, ELSummary,
    Mode, ModuleOptions, ModuleSummary, PencilSample, SignatureOptions,
};
use acis::groebner::Ideal;
use acis::polyarith::{gradient, parse, parse_list, Polynomial, Rational, Ring, VarSet};
use acis::quadform::Inertia;
use acis::realtopo::{
    curve_picture, dehomogenize, euler_rp2, verify_signature_theorem, EulerReport, VerifyReport,
    Window,
};
use clap::{Parser, ValueEnum};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Command {
    Signature,
    Euler,
    Verify,
    Hilbert,
    Module,
    Conjecture,
    Evlevine,
    Branches,
    Pencil,
    Plot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Svg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Auto,
    Hessian,
    Homological,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Auto => Mode::Auto,
            ModeArg::Hessian => Mode::Hessian,
            ModeArg::Homological => Mode::Homological,
        }
    }
}

/// Signatures, Jacobian modules and real plane-curve topology.
#[derive(Clone, Debug, Parser)]
#[command(name = "acis", version)]
pub struct JobConfig {
    pub command: Command,
    /// Comma separated variable names.
    #[arg(long)]
    pub vars: String,
    /// Comma separated positive weights, one per variable.
    #[arg(long)]
    pub weights: Option<String>,
    /// A single polynomial.
    #[arg(
        short = 'f',
        long = "poly",
        conflicts_with = "ideal",
        allow_hyphen_values = true
    )]
    pub poly: Option<String>,
    /// Semicolon separated generators.
    #[arg(long, allow_hyphen_values = true)]
    pub ideal: Option<String>,
    #[arg(long, value_enum, default_value = "auto")]
    pub mode: ModeArg,
    /// Upper degree for truncated computations.
    #[arg(long)]
    pub degree_bound: Option<i64>,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Defaults to `svg` for `plot` and `text` otherwise.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Comma separated rational parameters for `pencil`.
    #[arg(long, allow_hyphen_values = true)]
    pub samples: Option<String>,
    /// Also run the other pairing mode and compare.
    #[arg(long)]
    pub cross_check: bool,
    /// Half width of the square plotted by `plot`.
    #[arg(long, default_value_t = 3)]
    pub window: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignatureOut {
    pub seed: u64,
    pub input: Vec<String>,
    #[serde(rename = "dim_M")]
    pub dim_m: usize,
    pub hilbert: String,
    pub socle_degree: i64,
    pub mode: String,
    pub gram: Vec<Vec<String>>,
    pub signature: i64,
    pub rank: usize,
    pub inertia: Inertia,
    pub fallback: Option<String>,
    pub charpoly_agrees: bool,
    pub modes_agree: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EulerOut {
    pub seed: u64,
    pub input: String,
    #[serde(flatten)]
    pub euler: EulerReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyOut {
    pub seed: u64,
    pub input: String,
    #[serde(flatten)]
    pub verify: VerifyReport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertOut {
    pub seed: u64,
    pub input: Vec<String>,
    pub hilbert: String,
    pub dim: usize,
    pub symmetric: bool,
    /// `module` for one-dimensional almost complete intersections, `h0m`
    /// for the truncated local cohomology of a general ideal.
    pub source: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleOut {
    pub seed: u64,
    pub input: Vec<String>,
    #[serde(flatten)]
    pub module: ModuleSummary,
    pub oracle_checked: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureOut {
    pub seed: u64,
    pub input: Vec<String>,
    #[serde(flatten)]
    pub report: ConjectureReport,
    pub holds: bool,
    pub evidence: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvLevineOut {
    pub seed: u64,
    pub input: Vec<String>,
    #[serde(flatten)]
    pub form: ELSummary,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchesOut {
    pub seed: u64,
    pub input: Vec<String>,
    pub branches: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PencilOut {
    pub seed: u64,
    pub input: Vec<String>,
    pub samples: Vec<PencilSample>,
    /// The signature shared by all admissible samples.
    pub constant: Option<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlotOut {
    pub seed: u64,
    pub input: String,
    pub arcs: usize,
    pub points: usize,
    pub verticals: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "command", rename_all = "lowercase")]
pub enum Report {
    Signature(SignatureOut),
    Euler(EulerOut),
    Verify(VerifyOut),
    Hilbert(HilbertOut),
    Module(ModuleOut),
    Conjecture(ConjectureOut),
    Evlevine(EvLevineOut),
    Branches(BranchesOut),
    Pencil(PencilOut),
    Plot(PlotOut),
}

impl Report {
    /// Internal consistency of a (possibly re-read) report.
    pub fn validate(&self) -> Result<(), String> {
        let check = |ok: bool, what: &str| if ok { Ok(()) } else { Err(what.to_string()) };
        match self {
            Report::Signature(s) => {
                check(
                    s.gram.len() == s.dim_m && s.gram.iter().all(|r| r.len() == s.dim_m),
                    "gram size",
                )?;
                check(s.inertia.signature() == s.signature, "signature vs inertia")?;
                check(s.inertia.rank() == s.rank, "rank vs inertia")?;
                let entries: Vec<Vec<Rational>> = s
                    .gram
                    .iter()
                    .map(|r| {
                        r.iter()
                            .map(|c| c.parse::<Rational>().map_err(|e| e.to_string()))
                            .collect()
                    })
                    .collect::<Result<_, _>>()?;
                let inertia =
                    acis::quadform::signature_exact(&entries).map_err(|e| e.to_string())?;
                check(inertia == s.inertia, "inertia of the gram matrix")
            }
            Report::Euler(e) => check(
                e.euler.chi_plus + e.euler.chi_minus + e.euler.chi_curve == 1,
                "euler sum",
            ),
            Report::Verify(v) => {
                check(
                    v.verify.euler.chi_plus + v.verify.euler.chi_minus + v.verify.euler.chi_curve
                        == 1,
                    "euler sum",
                )?;
                check(
                    v.verify.holds == (v.verify.sigma == v.verify.euler.difference()),
                    "verdict",
                )
            }
            Report::Hilbert(h) => check(h.hilbert == "0" || h.dim > 0, "dimension"),
            Report::Module(m) => check(m.module.basis.len() == m.module.dim, "basis size"),
            Report::Conjecture(c) => check(c.holds == c.report.holds(), "verdict"),
            Report::Evlevine(e) => check(e.form.gram.len() == e.form.dim, "gram size"),
            Report::Branches(b) => check(b.branches >= 0 && b.branches % 2 == 0, "branch count"),
            Report::Pencil(p) => check(
                p.constant == constant_signature(&p.samples),
                "constancy flag",
            ),
            Report::Plot(_) => Ok(()),
        }
    }
}

/// Parses and validates a JSON report.
pub fn parse_report(text: &str) -> Result<Report, String> {
    let r: Report = serde_json::from_str(text).map_err(|e| e.to_string())?;
    r.validate()?;
    Ok(r)
}

/// Stable machine-readable name of an error.
pub fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::Parse { .. } => "parse",
        Error::UnknownVariable(_) => "unknown_variable",
        Error::InvalidRing(_) => "invalid_ring",
        Error::RingMismatch => "ring_mismatch",
        Error::LengthMismatch { .. } => "length_mismatch",
        Error::DegreeTooSmall { .. } => "degree_too_small",
        Error::OverlappingVariables(_) => "overlapping_variables",
        Error::SingularMatrix => "singular_matrix",
        Error::WeightIncompatible => "weight_incompatible",
        Error::NotHomogeneous => "not_homogeneous",
        Error::DegreeCap(_) => "degree_cap",
        Error::WrongDimension { .. } => "wrong_dimension",
        Error::WindowTooSmall(_) => "window_too_small",
        Error::SocleCheckFailed(_) => "socle_check_failed",
        Error::RegularSequence(_) => "regular_sequence",
        Error::LiftFailed(_) => "lift_failed",
        Error::NotSymmetric => "not_symmetric",
        Error::OddDegree(_) => "odd_degree",
        Error::ZeroPolynomial => "zero_polynomial",
        Error::NotZeroDimensional(_) => "not_zero_dimensional",
        Error::InvalidArgument(_) => "invalid_argument",
        Error::Internal(_) => "internal",
    }
}

/// 2 for violated preconditions, 4 for internal failures.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::SingularMatrix
        | Error::LiftFailed(_)
        | Error::RegularSequence(_)
        | Error::Internal(_) => 4,
        _ => 2,
    }
}

/// What a run writes and how it ends.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub fn run(cfg: &JobConfig) -> Outcome {
    let format = cfg.format.unwrap_or(if cfg.command == Command::Plot {
        Format::Svg
    } else {
        Format::Text
    });
    match execute(cfg, format) {
        Ok((report, svg)) => {
            let code = match &report {
                Report::Verify(v) if !v.verify.holds => 3,
                _ => 0,
            };
            let stdout = match format {
                Format::Json => {
                    let mut s = serde_json::to_string_pretty(&report).expect("reports serialize");
                    s.push('\n');
                    s
                }
                Format::Text => render_text(&report),
                Format::Svg => svg.unwrap_or_default(),
            };
            let stderr = match &report {
                Report::Verify(v) => v
                    .verify
                    .warnings
                    .iter()
                    .map(|w| format!("warning: {w}\n"))
                    .collect(),
                _ => String::new(),
            };
            Outcome {
                stdout,
                stderr,
                code,
            }
        }
        Err(e) => {
            let kind = error_kind(&e);
            let stdout = if format == Format::Json {
                let v = serde_json::json!({ "error": kind, "message": e.to_string(), "seed": cfg.seed });
                format!("{}\n", serde_json::to_string_pretty(&v).expect("json"))
            } else {
                String::new()
            };
            Outcome {
                stdout,
                stderr: format!("error[{kind}]: {e}\n"),
                code: exit_code(&e),
            }
        }
    }
}

fn ring_of(cfg: &JobConfig) -> Result<Ring, Error> {
    VarSet::parse(&cfg.vars, cfg.weights.as_deref())
}

fn single(cfg: &JobConfig, ring: &Ring) -> Result<Polynomial, Error> {
    match (&cfg.poly, &cfg.ideal) {
        (Some(f), _) => parse(f, ring),
        (None, Some(i)) => {
            let mut v = parse_list(i, ring)?;
            if v.len() != 1 {
                return Err(Error::InvalidArgument(
                    "expected a single polynomial (-f)".into(),
                ));
            }
            Ok(v.remove(0))
        }
        (None, None) => Err(Error::InvalidArgument(
            "no input: pass -f or --ideal".into(),
        )),
    }
}

/// `-f` means the partial derivatives of `f`; `--ideal` the generators.
fn sequence(cfg: &JobConfig, ring: &Ring) -> Result<Vec<Polynomial>, Error> {
    match (&cfg.poly, &cfg.ideal) {
        (Some(f), _) => Ok(gradient(&parse(f, ring)?)),
        (None, Some(i)) => parse_list(i, ring),
        (None, None) => Err(Error::InvalidArgument(
            "no input: pass -f or --ideal".into(),
        )),
    }
}

fn input_strings(cfg: &JobConfig) -> Vec<String> {
    match (&cfg.poly, &cfg.ideal) {
        (Some(f), _) => vec![f.trim().to_string()],
        (None, Some(i)) => i
            .split(';')
            .map(|s| s.trim().to_string())
            .filter(|s| !s.is_empty())
            .collect(),
        _ => Vec::new(),
    }
}

fn parse_samples(s: &str) -> Result<Vec<Rational>, Error> {
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<Rational>()
                .map_err(|_| Error::InvalidArgument(format!("bad sample `{}`", t.trim())))
        })
        .collect()
}

fn execute(cfg: &JobConfig, format: Format) -> Result<(Report, Option<String>), Error> {
    let ring = ring_of(cfg)?;
    let seed = cfg.seed;
    let input = input_strings(cfg);
    let opts = SignatureOptions {
        mode: cfg.mode.into(),
        seed,
        cross_check: cfg.cross_check,
        module: ModuleOptions::default(),
    };
    if format == Format::Svg && cfg.command != Command::Plot {
        return Err(Error::InvalidArgument(
            "svg output is only available for `plot`".into(),
        ));
    }
    let report = match cfg.command {
        Command::Signature => {
            let fs = sequence(cfg, &ring)?;
            let r = signature(&ring, &fs, opts)?;
            Report::Signature(SignatureOut {
                seed,
                input,
                dim_m: r.module.dim(),
                hilbert: r.module.hilbert.to_string(),
                socle_degree: r.module.socle_degree,
                mode: r.mode().to_string(),
                gram: r
                    .gram
                    .entries
                    .iter()
                    .map(|row| row.iter().map(|c| c.to_string()).collect())
                    .collect(),
                signature: r.signature(),
                rank: r.rank(),
                inertia: r.inertia,
                fallback: r.fallback.clone(),
                charpoly_agrees: r.charpoly_agrees,
                modes_agree: r.modes_agree(),
            })
        }
        Command::Euler => {
            let f = single(cfg, &ring)?;
            Report::Euler(EulerOut {
                seed,
                input: f.to_string(),
                euler: euler_rp2(&f)?,
            })
        }
        Command::Verify => {
            let f = single(cfg, &ring)?;
            Report::Verify(VerifyOut {
                seed,
                input: f.to_string(),
                verify: verify_signature_theorem(&f, opts)?,
            })
        }
        Command::Hilbert => {
            let fs = sequence(cfg, &ring)?;
            match jacobian_module(&ring, &fs, opts.module) {
                Ok(m) => Report::Hilbert(HilbertOut {
                    seed,
                    input,
                    hilbert: m.hilbert.to_string(),
                    dim: m.dim(),
                    symmetric: m.hilbert.is_symmetric(),
                    source: "module".into(),
                }),
                Err(Error::WrongDimension { .. }) | Err(Error::LengthMismatch { .. }) => {
                    let bound = cfg.degree_bound.unwrap_or(20);
                    let h = h0m_general(&Ideal::new(&ring, fs), bound)?;
                    Report::Hilbert(HilbertOut {
                        seed,
                        input,
                        hilbert: h.hilbert.to_string(),
                        dim: h.hilbert.total(),
                        symmetric: h.symmetric,
                        source: "h0m".into(),
                    })
                }
                Err(e) => return Err(e),
            }
        }
        Command::Module => {
            let fs = sequence(cfg, &ring)?;
            let m = jacobian_module(&ring, &fs, opts.module)?;
            Report::Module(ModuleOut {
                seed,
                input,
                module: m.summary(),
                oracle_checked: m.oracle_checked,
            })
        }
        Command::Conjecture => {
            let fs = sequence(cfg, &ring)?;
            let m = jacobian_module(&ring, &fs, opts.module)?;
            let gram = pairing_homological(&m, seed)?;
            let report = conjecture_check(&m, Some(&gram.entries))?;
            Report::Conjecture(ConjectureOut {
                seed,
                input,
                holds: report.holds(),
                evidence: report.evidence(),
                report,
            })
        }
        Command::Evlevine => {
            let fs = sequence(cfg, &ring)?;
            Report::Evlevine(EvLevineOut {
                seed,
                input,
                form: ev_levine(&fs)?.summary(),
            })
        }
        Command::Branches => {
            let fs = match (&cfg.poly, &cfg.ideal) {
                (Some(f), _) => vec![parse(f, &ring)?],
                _ => sequence(cfg, &ring)?,
            };
            Report::Branches(BranchesOut {
                seed,
                input,
                branches: real_branches(&fs)?,
            })
        }
        Command::Pencil => {
            let fs = match &cfg.ideal {
                Some(i) => parse_list(i, &ring)?,
                None => {
                    return Err(Error::InvalidArgument(
                        "pencil needs --ideal \"f;g\"".into(),
                    ))
                }
            };
            if fs.len() != 2 {
                return Err(Error::LengthMismatch {
                    expected: 2,
                    got: fs.len(),
                });
            }
            let ts = match &cfg.samples {
                Some(s) => parse_samples(s)?,
                None => return Err(Error::InvalidArgument("pencil needs --samples".into())),
            };
            let samples = pencil_signature(&fs[0], &fs[1], &ts, opts)?;
            let constant = constant_signature(&samples);
            Report::Pencil(PencilOut {
                seed,
                input,
                samples,
                constant,
            })
        }
        Command::Plot => {
            let f = single(cfg, &ring)?;
            let affine = if ring.nvars() == 3 {
                dehomogenize(&f)?
            } else {
                f.clone()
            };
            if cfg.window <= 0 {
                return Err(Error::InvalidArgument("window must be positive".into()));
            }
            let w = Window::square(cfg.window);
            let pic = curve_picture(&affine, &w, 120)?;
            let svg = pic.to_svg(&w, 400);
            let report = Report::Plot(PlotOut {
                seed,
                input: f.to_string(),
                arcs: pic.arcs.len(),
                points: pic.points.len(),
                verticals: pic.verticals.len(),
            });
            return Ok((report, Some(svg)));
        }
    };
    Ok((report, None))
}

/// `key: value` lines in key order.
pub fn render_text(report: &Report) -> String {
    let v = serde_json::to_value(report).expect("reports serialize");
    let mut out = String::new();
    if let serde_json::Value::Object(map) = v {
        for (k, v) in map {
            let shown = match v {
                serde_json::Value::String(s) => s,
                serde_json::Value::Null => "-".to_string(),
                other => other.to_string(),
            };
            let _ = writeln!(out, "{k}: {shown}");
        }
    }
    out
}
