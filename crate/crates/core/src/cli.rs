//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure, 2 malformed input,
//! 3 trivial action where solutions were requested, 4 I/O failure.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::knots::{monodromy, unknotting_crossing_change_count, GenusOneKnot};
use crate::mapclass::{Axis, Classification, MappingClass};
use crate::oracle::{agree, brute_force, OracleResult, DEFAULT_BOUND, DEFAULT_ITERATION_CAP};
use crate::render::{render_svg, RenderOptions};
use crate::slope::Slope;
use crate::solver::{is_solution, solve, SolutionSet};
use crate::sweep::{run_sweep_parallel, SweepOutcome, SweepParams};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_TRIVIAL: i32 = 3;
pub const EXIT_IO: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "torus-arcs",
    version,
    about = "Arc-complex computations for once-punctured torus mapping classes"
)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify a mapping class as periodic, reducible or pseudo-Anosov.
    Classify(MatrixArgs),
    /// List the arcs disjoint from their image, up to h-equivalence.
    Solve(MatrixArgs),
    /// Print one period of the axis of a pseudo-Anosov class.
    Axis(MatrixArgs),
    /// Iterate the action on a slope.
    Orbit(OrbitArgs),
    /// Compare the solver with a brute-force scan.
    Oracle(OracleArgs),
    /// Check the two-class bound on seeded random matrices.
    Verify(VerifyArgs),
    /// Count unknotting crossing changes of a genus-one knot.
    Knot(KnotArgs),
    /// Draw the Farey tessellation in the Poincaré disc as SVG.
    Render(RenderArgs),
}

fn parse_matrix(s: &str) -> Result<MappingClass, Error> {
    s.parse()
}

fn parse_slope(s: &str) -> Result<Slope, Error> {
    s.parse()
}

#[derive(Debug, Args)]
pub struct MatrixArgs {
    /// Matrix `a,b;c,d` (row-major).
    #[arg(short, long, value_parser = parse_matrix, allow_hyphen_values = true)]
    pub matrix: MappingClass,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct OrbitArgs {
    #[arg(short, long, value_parser = parse_matrix, allow_hyphen_values = true)]
    pub matrix: MappingClass,
    /// Starting slope `p/q` or `inf`.
    #[arg(short, long, value_parser = parse_slope, allow_hyphen_values = true)]
    pub slope: Slope,
    #[arg(long = "iters", default_value_t = DEFAULT_ITERATION_CAP)]
    pub iteration_cap: u32,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[arg(short, long, value_parser = parse_matrix, allow_hyphen_values = true)]
    pub matrix: MappingClass,
    #[arg(long, default_value_t = DEFAULT_BOUND)]
    pub bound: u32,
    #[arg(long = "iters", default_value_t = DEFAULT_ITERATION_CAP)]
    pub iteration_cap: u32,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 10_000)]
    pub count: u64,
    #[arg(long = "word-length", default_value_t = 20)]
    pub word_length: u32,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Oracle bound for the 1-in-100 subsample.
    #[arg(long, default_value_t = DEFAULT_BOUND)]
    pub bound: u32,
    #[arg(long = "iters", default_value_t = DEFAULT_ITERATION_CAP)]
    pub iteration_cap: u32,
    /// One JSON object per matrix, then a summary object.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct KnotArgs {
    /// `trefoil`, `figure8` or `doubled:<label>`.
    pub name: GenusOneKnot,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct RenderArgs {
    /// Highlight the axis and solutions of this mapping class.
    #[arg(short, long, value_parser = parse_matrix, allow_hyphen_values = true)]
    pub matrix: Option<MappingClass>,
    /// Draw edges between slopes with |p|, q at most this.
    #[arg(long, default_value_t = RenderOptions::default().display_bound)]
    pub bound: u32,
    /// Output file (stdout when absent).
    #[arg(long = "out")]
    pub out_path: Option<PathBuf>,
}

/// JSON report. Fields are declared in alphabetical order so that
/// re-serializing a parsed object reproduces the same bytes.
#[derive(Debug, Default, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub axis: Option<AxisJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classes: Option<Vec<ClassJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classification: Option<ClassificationJson>,
    pub command: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub knot: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orbit: Option<Vec<OrbitPointJson>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theorem_ok: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unknotting_changes: Option<usize>,
}

#[derive(Debug, Default, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassificationJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub attracting: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub conjugator: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub fixed_slope: Option<String>,
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub psl_order: Option<u8>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub repelling: Option<String>,
}

impl From<&Classification> for ClassificationJson {
    fn from(c: &Classification) -> Self {
        let mut out = ClassificationJson {
            kind: c.kind().name().to_string(),
            ..Default::default()
        };
        match c {
            Classification::TrivialAction => {}
            Classification::Periodic { psl_order } => out.psl_order = Some(*psl_order),
            Classification::Reducible {
                n,
                fixed_slope,
                conjugator,
            } => {
                out.n = Some(n.to_string());
                out.fixed_slope = Some(fixed_slope.to_string());
                out.conjugator = Some(conjugator.to_string());
            }
            Classification::PseudoAnosov {
                repelling,
                attracting,
            } => {
                out.repelling = Some(repelling.to_string());
                out.attracting = Some(attracting.to_string());
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassJson {
    pub members: Vec<String>,
    pub provenance: String,
    pub representative: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub side: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AxisJson {
    pub attracting: String,
    pub edges: Vec<[String; 2]>,
    pub form: [String; 3],
    pub period: usize,
    pub repelling: String,
}

impl From<&Axis> for AxisJson {
    fn from(ax: &Axis) -> Self {
        let (a, b, c) = ax.side_form().coefficients();
        AxisJson {
            attracting: ax.attracting().to_string(),
            edges: ax
                .edges()
                .iter()
                .map(|e| {
                    let (x, y) = e.endpoints();
                    [x.to_string(), y.to_string()]
                })
                .collect(),
            form: [a.to_string(), b.to_string(), c.to_string()],
            period: ax.period(),
            repelling: ax.repelling().to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OrbitPointJson {
    pub power: u32,
    pub slope: String,
    pub solution: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OracleJson {
    pub agree: bool,
    pub bound: u32,
    pub groups: Vec<Vec<String>>,
    pub iteration_cap: u32,
    pub solutions: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepLineJson {
    pub class_count: usize,
    pub classification: String,
    pub index: u64,
    pub matrix: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle_agree: Option<bool>,
    pub status: String,
}

impl From<&SweepOutcome> for SweepLineJson {
    fn from(o: &SweepOutcome) -> Self {
        SweepLineJson {
            class_count: o.report.class_count,
            classification: o.report.classification.kind().name().to_string(),
            index: o.index,
            matrix: o.mapping_class.to_string(),
            oracle_agree: o.oracle_agrees,
            status: if o.passed() {
                o.report.status.to_string()
            } else {
                "fail".to_string()
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepSummaryJson {
    pub command: String,
    pub count: u64,
    pub failed: usize,
    pub failures: Vec<u64>,
    pub oracle_checked: usize,
    pub passed: usize,
    pub seed: u64,
    pub word_length: u32,
}

fn classes_json(set: &SolutionSet) -> Vec<ClassJson> {
    set.classes
        .iter()
        .map(|c| ClassJson {
            members: c.sample_members.iter().map(Slope::to_string).collect(),
            provenance: c.provenance.to_string(),
            representative: c.representative.to_string(),
            side: c.side.map(|s| s.to_string()),
        })
        .collect()
}

/// Parses `args` (including the program name) and runs the command.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match RunConfig::try_parse_from(args) {
        Ok(config) => run(config, out, err),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(rendered.as_bytes());
            code
        }
    }
}

pub fn run(config: RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match execute(config, out) {
        Ok(code) => code,
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_IO
        }
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::TrivialAction => EXIT_TRIVIAL,
                _ => EXIT_INPUT,
            }
        }
    }
}

enum Failure {
    Io(std::io::Error),
    Domain(Error),
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

fn emit(out: &mut dyn Write, report: &Report) -> std::io::Result<()> {
    let line = serde_json::to_string(report).map_err(std::io::Error::other)?;
    writeln!(out, "{line}")
}

fn execute(config: RunConfig, out: &mut dyn Write) -> Result<i32, Failure> {
    match config.command {
        Command::Classify(args) => {
            let m = &args.matrix;
            let c = m.classify();
            if args.json {
                emit(
                    out,
                    &Report {
                        command: "classify".into(),
                        matrix: Some(m.to_string()),
                        classification: Some((&c).into()),
                        ..Default::default()
                    },
                )?;
            } else {
                writeln!(out, "matrix         {m}")?;
                writeln!(out, "psl rep        {}", m.psl_rep())?;
                writeln!(out, "trace          {}", m.trace())?;
                writeln!(out, "classification {c}")?;
                if let Classification::Reducible { conjugator, .. } = &c {
                    writeln!(out, "conjugator     {conjugator}")?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Solve(args) => {
            let set = solve(&args.matrix)?;
            if args.json {
                emit(
                    out,
                    &Report {
                        axis: set.axis.as_ref().map(Into::into),
                        classes: Some(classes_json(&set)),
                        classification: Some((&set.classification).into()),
                        command: "solve".into(),
                        matrix: Some(args.matrix.to_string()),
                        theorem_ok: Some(set.theorem_bound_satisfied),
                        ..Default::default()
                    },
                )?;
            } else {
                writeln!(out, "matrix         {}", args.matrix)?;
                writeln!(out, "classification {}", set.classification)?;
                if let Some(ax) = &set.axis {
                    writeln!(out, "axis period    {}", ax.period())?;
                }
                writeln!(out, "classes        {}", set.classes.len())?;
                for (k, c) in set.classes.iter().enumerate() {
                    let members: Vec<String> =
                        c.sample_members.iter().map(Slope::to_string).collect();
                    let side = c.side.map(|s| format!(", {s} side")).unwrap_or_default();
                    writeln!(
                        out,
                        "  [{k}] {} ({}{side}): {} ...",
                        c.representative,
                        c.provenance,
                        members.join(", ")
                    )?;
                }
                writeln!(
                    out,
                    "theorem bound  {}",
                    if set.theorem_bound_satisfied {
                        "ok"
                    } else {
                        "VIOLATED"
                    }
                )?;
            }
            Ok(EXIT_OK)
        }
        Command::Axis(args) => {
            let ax = args.matrix.axis()?;
            if args.json {
                emit(
                    out,
                    &Report {
                        axis: Some((&ax).into()),
                        classification: Some((&args.matrix.classify()).into()),
                        command: "axis".into(),
                        matrix: Some(args.matrix.to_string()),
                        ..Default::default()
                    },
                )?;
            } else {
                writeln!(out, "matrix     {}", args.matrix)?;
                writeln!(out, "repelling  {}", ax.repelling())?;
                writeln!(out, "attracting {}", ax.attracting())?;
                writeln!(out, "side form  Q = {}", ax.side_form())?;
                writeln!(out, "period     {}", ax.period())?;
                for (i, e) in ax.edges().iter().enumerate() {
                    writeln!(out, "  e{i} = {e}")?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Orbit(args) => {
            let m = &args.matrix;
            let mut x = args.slope.clone();
            let mut points = Vec::new();
            for power in 0..=args.iteration_cap {
                points.push(OrbitPointJson {
                    power,
                    solution: is_solution(m, &x),
                    slope: x.to_string(),
                });
                x = m.act_on_slope(&x);
            }
            if args.json {
                emit(
                    out,
                    &Report {
                        classification: Some((&m.classify()).into()),
                        command: "orbit".into(),
                        matrix: Some(m.to_string()),
                        orbit: Some(points),
                        ..Default::default()
                    },
                )?;
            } else {
                for p in points {
                    let tag = if p.solution { "  solution" } else { "" };
                    writeln!(out, "h^{:<3} {}{tag}", p.power, p.slope)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Oracle(args) => {
            let m = &args.matrix;
            let set = solve(m)?;
            let oracle = brute_force(m, args.bound, args.iteration_cap)?;
            let ok = agree(&set, &oracle);
            if args.json {
                emit(
                    out,
                    &Report {
                        classes: Some(classes_json(&set)),
                        classification: Some((&set.classification).into()),
                        command: "oracle".into(),
                        matrix: Some(m.to_string()),
                        oracle: Some(oracle_json(&oracle, ok)),
                        theorem_ok: Some(set.theorem_bound_satisfied),
                        ..Default::default()
                    },
                )?;
            } else {
                writeln!(out, "matrix        {m}")?;
                writeln!(out, "solver        {} classes", set.classes.len())?;
                writeln!(
                    out,
                    "oracle        {} solutions, {} groups (bound {}, cap {})",
                    oracle.solutions.len(),
                    oracle.groups.len(),
                    oracle.bound,
                    oracle.iteration_cap
                )?;
                for g in &oracle.groups {
                    let shown: Vec<String> = g.iter().take(8).map(Slope::to_string).collect();
                    let more = if g.len() > 8 { ", ..." } else { "" };
                    writeln!(out, "  {{{}{more}}}", shown.join(", "))?;
                }
                writeln!(out, "agreement     {}", if ok { "yes" } else { "NO" })?;
            }
            Ok(if ok { EXIT_OK } else { EXIT_VERIFY })
        }
        Command::Verify(args) => {
            let params = SweepParams {
                count: args.count,
                word_length: args.word_length,
                seed: args.seed,
                bound: args.bound,
                iteration_cap: args.iteration_cap,
                oracle_every: 100,
            };
            let report = run_sweep_parallel(&params);
            let failures: Vec<u64> = report.failures().iter().map(|o| o.index).collect();
            if args.json {
                for o in &report.outcomes {
                    let line = serde_json::to_string(&SweepLineJson::from(o))
                        .map_err(std::io::Error::other)?;
                    writeln!(out, "{line}")?;
                }
                let summary = SweepSummaryJson {
                    command: "verify".into(),
                    count: args.count,
                    failed: failures.len(),
                    failures: failures.clone(),
                    oracle_checked: report.oracle_checked(),
                    passed: report.passed(),
                    seed: args.seed,
                    word_length: args.word_length,
                };
                let line = serde_json::to_string(&summary).map_err(std::io::Error::other)?;
                writeln!(out, "{line}")?;
            } else {
                for o in report.failures() {
                    writeln!(
                        out,
                        "FAIL #{} {} {} classes={} oracle={:?}",
                        o.index,
                        o.mapping_class,
                        o.report.classification.kind().name(),
                        o.report.class_count,
                        o.oracle_agrees
                    )?;
                }
                writeln!(out, "{}/{} pass", report.passed(), args.count)?;
                writeln!(
                    out,
                    "oracle agreement checked on {} matrices",
                    report.oracle_checked()
                )?;
            }
            Ok(if failures.is_empty() {
                EXIT_OK
            } else {
                EXIT_VERIFY
            })
        }
        Command::Knot(args) => {
            let count = unknotting_crossing_change_count(&args.name)?;
            let m = monodromy(&args.name).ok();
            if args.json {
                emit(
                    out,
                    &Report {
                        classification: m.as_ref().map(|m| (&m.classify()).into()),
                        command: "knot".into(),
                        knot: Some(args.name.to_string()),
                        matrix: m.as_ref().map(MappingClass::to_string),
                        unknotting_changes: Some(count),
                        ..Default::default()
                    },
                )?;
            } else {
                writeln!(out, "knot      {}", args.name)?;
                match &m {
                    Some(m) => writeln!(out, "monodromy {m} ({})", m.classify())?,
                    None => writeln!(out, "monodromy none (not fibred)")?,
                }
                writeln!(out, "unknotting crossing changes {count}")?;
            }
            Ok(EXIT_OK)
        }
        Command::Render(args) => {
            let opts = RenderOptions {
                display_bound: args.bound,
                ..Default::default()
            };
            let svg = render_svg(args.matrix.as_ref(), &opts);
            match &args.out_path {
                Some(path) => std::fs::write(path, svg)?,
                None => out.write_all(svg.as_bytes())?,
            }
            Ok(EXIT_OK)
        }
    }
}

fn oracle_json(oracle: &OracleResult, ok: bool) -> OracleJson {
    OracleJson {
        agree: ok,
        bound: oracle.bound,
        groups: oracle
            .groups
            .iter()
            .map(|g| g.iter().map(Slope::to_string).collect())
            .collect(),
        iteration_cap: oracle.iteration_cap,
        solutions: oracle.solutions.len(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["torus-arcs"];
        full.extend_from_slice(args);
        let code = main_with_args(full, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_args(&["classify", "-m", "1,0;0,1"]).0, EXIT_OK);
        assert_eq!(run_args(&["classify", "-m", "1,1;1,0"]).0, EXIT_INPUT);
        assert_eq!(run_args(&["classify", "-m", "garbage"]).0, EXIT_INPUT);
        assert_eq!(run_args(&["solve", "-m", "-1,0;0,-1"]).0, EXIT_TRIVIAL);
        assert_eq!(run_args(&["oracle", "-m", "1,0;0,1"]).0, EXIT_TRIVIAL);
        assert_eq!(run_args(&["axis", "-m", "1,1;0,1"]).0, EXIT_INPUT);
        assert_eq!(run_args(&["knot", "cinquefoil"]).0, EXIT_INPUT);
        assert_eq!(
            run_args(&["render", "--bound", "3", "--out", "/nonexistent/dir/x.svg"]).0,
            EXIT_IO
        );
    }

    #[test]
    fn extra_flags_are_rejected() {
        assert_eq!(
            run_args(&["classify", "-m", "2,1;1,1", "--bound", "3"]).0,
            EXIT_INPUT
        );
        assert_eq!(
            run_args(&["knot", "trefoil", "-m", "2,1;1,1"]).0,
            EXIT_INPUT
        );
        assert_eq!(run_args(&["solve"]).0, EXIT_INPUT);
    }

    #[test]
    fn classify_trivial_human() {
        let (code, out, _) = run_args(&["classify", "-m", "1,0;0,1"]);
        assert_eq!(code, 0);
        assert!(out.contains("TrivialAction"));
    }
}
