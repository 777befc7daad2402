//! The `htan` command line. [`run`] maps a parsed [`RunConfig`] to an exit
//! code and a report; the binary only parses arguments and prints.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactla::Mat;
use crate::generators::{catalogue, documentation_fixtures, preset, ExampleSpec};
use crate::simplicial::format::{complex_from_json, complex_to_json, simplicial_from_json, simplicial_to_json};
use crate::simplicial::{dk_normalize, dk_realize, kan_report, moore_complex, validate, SimplicialVS};
use crate::suites::run_all;
use crate::tangent::{
    compat_from_json, hom_limit, reconstruct, reconstruct_bruteforce, tangent_complex, tangent_spaces, Formulation,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    #[value(alias = "structured")]
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormulationArg {
    Pullback,
    Presheaf,
    NaiveZeroFace,
}

impl From<FormulationArg> for Formulation {
    fn from(f: FormulationArg) -> Formulation {
        match f {
            FormulationArg::Pullback => Formulation::Pullback,
            FormulationArg::Presheaf => Formulation::Presheaf,
            FormulationArg::NaiveZeroFace => Formulation::NaiveZeroFace,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Check the simplicial identities.
    Validate,
    /// Horn projections and the Kan verdict for `--degree`.
    Kan,
    /// Normalized (Moore) complex.
    Moore,
    /// Kernels of the horn projections `p^k_0`.
    Tangent,
    /// Limit over the fat-point nerve at cutoff `--max-level`.
    HomLimit,
    /// Realize a chain complex file to `--max-level`.
    DkRealize,
    /// Normalize a simplicial file to a chain complex file.
    DkNormalize,
    /// Reconstruct a family from its codegeneracies.
    Solve,
    /// List presets, or emit one with `--example NAME`.
    Example,
    /// Run every invariant suite.
    Selftest,
}

#[derive(Clone, Debug, Parser)]
#[command(name = "htan", version, about = "Exact tangent-complex computations for simplicial vector spaces")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Input document (simplicial, chain complex or family, by command).
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,
    #[arg(long, global = true)]
    pub max_level: Option<usize>,
    /// Groupoid degree `n` for `kan`.
    #[arg(long, global = true)]
    pub degree: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Include basis vectors in reports.
    #[arg(long, global = true)]
    pub witnesses: bool,
    /// Preset name used instead of `--input`.
    #[arg(long, global = true)]
    pub example: Option<String>,
    /// Comma-separated preset dimensions.
    #[arg(long, global = true, value_delimiter = ',')]
    pub dim: Option<Vec<usize>>,
    /// Expected `k` of a `solve` input.
    #[arg(long, global = true)]
    pub k: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = FormulationArg::Pullback)]
    pub formulation: FormulationArg,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Report {
    positive: bool,
    text: String,
    json: Value,
}

impl Report {
    fn ok(text: String, json: Value) -> Report {
        Report { positive: true, text, json }
    }
}

pub fn run(config: &RunConfig) -> Outcome {
    match dispatch(config) {
        Ok(report) => {
            let mut stdout = match config.format {
                Format::Text => report.text,
                Format::Json => serde_json::to_string_pretty(&report.json).expect("serializable"),
            };
            if !stdout.ends_with('\n') {
                stdout.push('\n');
            }
            let code = if report.positive { EXIT_OK } else { EXIT_NEGATIVE };
            Outcome { code, stdout, stderr: String::new() }
        }
        Err(e) => {
            let code = match e {
                Error::Incompatible(_) | Error::Internal(_) => EXIT_NEGATIVE,
                _ => EXIT_INPUT,
            };
            Outcome { code, stdout: String::new(), stderr: format!("error: {e}\n") }
        }
    }
}

/// Parse `args` (program name first), run, and print. Returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    let outcome = run(&config);
    print!("{}", outcome.stdout);
    eprint!("{}", outcome.stderr);
    outcome.code
}

fn read_input(config: &RunConfig) -> Result<String> {
    let path = config
        .input
        .as_ref()
        .ok_or_else(|| Error::InvalidArgument("--input is required for this command".into()))?;
    std::fs::read_to_string(path).map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))
}

fn example_spec(config: &RunConfig, name: &str) -> Result<ExampleSpec> {
    preset(name, config.dim.clone(), config.max_level)
}

/// The simplicial object named by `--example` or read from `--input`,
/// truncated to `--max-level` when given.
fn load_simplicial(config: &RunConfig) -> Result<(SimplicialVS, Option<ExampleSpec>)> {
    if let Some(name) = &config.example {
        let spec = example_spec(config, name)?;
        return Ok((spec.build(), Some(spec)));
    }
    let s = simplicial_from_json(&read_input(config)?)?;
    match config.max_level {
        Some(n) if n > s.max_level() => Err(Error::OutOfRange(format!(
            "--max-level {n} exceeds the input's top level {}",
            s.max_level()
        ))),
        Some(n) => Ok((s.truncate(n), None)),
        None => Ok((s, None)),
    }
}

fn tuple(v: &[usize]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

fn trimmed(v: &[usize]) -> Vec<usize> {
    let end = v.iter().rposition(|&d| d != 0).map_or(0, |p| p + 1);
    v[..end].to_vec()
}

fn matrix_text(m: &Mat) -> String {
    if m.rows() == 0 || m.cols() == 0 {
        return format!("  [{}x{} zero]\n", m.rows(), m.cols());
    }
    m.to_rows()
        .iter()
        .map(|r| {
            let cells: Vec<String> = r.iter().map(ToString::to_string).collect();
            format!("  [{}]\n", cells.join(" "))
        })
        .collect()
}

fn dispatch(config: &RunConfig) -> Result<Report> {
    match config.command {
        Command::Validate => cmd_validate(config),
        Command::Kan => cmd_kan(config),
        Command::Moore => cmd_moore(config),
        Command::Tangent => cmd_tangent(config),
        Command::HomLimit => cmd_hom_limit(config),
        Command::DkRealize => cmd_dk_realize(config),
        Command::DkNormalize => cmd_dk_normalize(config),
        Command::Solve => cmd_solve(config),
        Command::Example => cmd_example(config),
        Command::Selftest => cmd_selftest(config),
    }
}

fn cmd_validate(config: &RunConfig) -> Result<Report> {
    let (s, _) = load_simplicial(config)?;
    let violations = validate(&s);
    let mut text = format!("levels: 0..={}\ndims: {}\n", s.max_level(), tuple(s.dims()));
    if violations.is_empty() {
        text.push_str("valid: yes\n");
    } else {
        let _ = writeln!(text, "valid: no ({} violations)", violations.len());
        for v in &violations {
            let _ = writeln!(text, "violation: {v}");
        }
    }
    let listed: Vec<Value> = violations
        .iter()
        .map(|v| json!({"identity": v.identity, "level": v.level, "i": v.i, "j": v.j, "message": v.to_string()}))
        .collect();
    let json = json!({
        "command": "validate",
        "maxLevel": s.max_level(),
        "dims": s.dims(),
        "valid": violations.is_empty(),
        "violations": listed,
    });
    Ok(Report { positive: violations.is_empty(), text, json })
}

fn cmd_kan(config: &RunConfig) -> Result<Report> {
    let (s, _) = load_simplicial(config)?;
    let degree = config
        .degree
        .ok_or_else(|| Error::InvalidArgument("kan needs --degree".into()))?;
    let report = kan_report(&s, degree)?;
    let mut text = String::from("level missing horn rank surjective iso\n");
    for c in &report.checks {
        let _ = writeln!(
            text,
            "{:>5} {:>7} {:>4} {:>4} {:>10} {:>3}",
            c.level,
            c.missing,
            c.horn_dim,
            c.rank,
            if c.surjective { "yes" } else { "no" },
            if c.injective { "yes" } else { "no" }
        );
    }
    if report.verdict {
        let _ = writeln!(text, "verdict: linear Lie {degree}-groupoid up to level {}", s.max_level());
    } else {
        let _ = writeln!(text, "verdict: not a linear Lie {degree}-groupoid");
    }
    let mut json = serde_json::to_value(&report).expect("serializable");
    json["command"] = json!("kan");
    Ok(Report { positive: report.verdict, text, json })
}

fn cmd_moore(config: &RunConfig) -> Result<Report> {
    let (s, _) = load_simplicial(config)?;
    let m = moore_complex(&s)?;
    let mut text = format!("dims: {}\n", tuple(m.dims()));
    for (k, d) in m.diffs().iter().enumerate() {
        if d.rows() > 0 && d.cols() > 0 {
            let _ = write!(text, "∂_{}:\n{}", k + 1, matrix_text(d));
        }
    }
    let json = json!({"command": "moore", "maxLevel": s.max_level(), "dims": m.dims(), "diffs": m.diffs()});
    Ok(Report::ok(text, json))
}

fn cmd_tangent(config: &RunConfig) -> Result<Report> {
    let (s, spec) = load_simplicial(config)?;
    let c = tangent_complex(&s)?;
    let dims = trimmed(c.dims());
    let dims = if dims.is_empty() { vec![0] } else { dims };
    let mut text = format!("degree dims: {}\n", tuple(&dims));
    let mut json = json!({"command": "tangent", "maxLevel": s.max_level(), "dims": dims});
    let mut positive = true;
    if let Some(spec) = &spec {
        let expected = spec.expected_tangent();
        positive = expected == dims;
        let _ = writeln!(text, "expected: {} ({})", tuple(&expected), if positive { "match" } else { "MISMATCH" });
        json["example"] = json!(spec.name);
        json["expected"] = json!(expected);
        json["matches"] = json!(positive);
    }
    if config.witnesses {
        let spaces = tangent_spaces(&s)?;
        let bases: Vec<Value> = spaces.iter().map(|sp| json!(sp.basis())).collect();
        for (k, sp) in spaces.iter().enumerate().filter(|(_, sp)| sp.dim() > 0) {
            let _ = writeln!(text, "degree {k} basis in X_{k}:");
            for v in sp.basis() {
                let cells: Vec<String> = v.iter().map(ToString::to_string).collect();
                let _ = writeln!(text, "  ({})", cells.join(", "));
            }
        }
        json["witnesses"] = Value::Array(bases);
    }
    Ok(Report { positive, text, json })
}

fn cmd_hom_limit(config: &RunConfig) -> Result<Report> {
    let (s, _) = load_simplicial(config)?;
    let cutoff = config.max_level.unwrap_or(s.max_level());
    let report = hom_limit(&s, cutoff, config.formulation.into(), config.witnesses)?;
    let (dims, previous) = (trimmed(&report.dims), trimmed(&report.previous));
    let mut text = format!(
        "cutoff: {cutoff}\nformulation: {}\ndegree dims (from 1): {}\nat cutoff {}: {}\nstable: {}\n",
        serde_json::to_value(report.formulation).expect("serializable").as_str().unwrap_or_default(),
        tuple(&dims),
        cutoff.saturating_sub(1),
        tuple(&previous),
        report.stable
    );
    if let Some(w) = &report.witnesses {
        for (m, basis) in w.iter().enumerate().filter(|(_, b)| !b.is_empty()) {
            let _ = writeln!(text, "degree {} witness basis in X_{}:", m + 1, m + 1);
            for v in basis {
                let cells: Vec<String> = v.iter().map(ToString::to_string).collect();
                let _ = writeln!(text, "  ({})", cells.join(", "));
            }
        }
    }
    let mut json = serde_json::to_value(&report).expect("serializable");
    json["command"] = json!("hom-limit");
    json["dims"] = json!(dims);
    json["previous"] = json!(previous);
    Ok(Report { positive: report.stable, text, json })
}

fn cmd_dk_realize(config: &RunConfig) -> Result<Report> {
    let c = complex_from_json(&read_input(config)?)?;
    let level = config.max_level.unwrap_or(c.length() + 2);
    let s = dk_realize(&c, level)?;
    let doc = simplicial_to_json(&s);
    let json = serde_json::from_str(&doc).expect("own output parses");
    Ok(Report::ok(doc, json))
}

fn cmd_dk_normalize(config: &RunConfig) -> Result<Report> {
    let (s, _) = load_simplicial(config)?;
    let doc = complex_to_json(&dk_normalize(&s)?);
    let json = serde_json::from_str(&doc).expect("own output parses");
    Ok(Report::ok(doc, json))
}

fn cmd_solve(config: &RunConfig) -> Result<Report> {
    let f = compat_from_json(&read_input(config)?)?;
    if let Some(k) = config.k {
        if k != f.k() {
            return Err(Error::InvalidArgument(format!("--k {k} but the input has k = {}", f.k())));
        }
    }
    let w = reconstruct(&f)?;
    let oracle = reconstruct_bruteforce(&f)?;
    let agrees = oracle.as_ref() == Some(&w);
    let mut text = format!("k: {}\nfiber dim: {}\n", f.k(), f.fiber_dim());
    if w.is_zero() {
        text.push_str("w = 0\n");
    }
    for (index, v) in w.components() {
        let cells: Vec<String> = v.iter().map(ToString::to_string).collect();
        let _ = writeln!(text, "w^{index} = [{}]", cells.join(", "));
    }
    let _ = writeln!(text, "linear solve agrees: {agrees}");
    let json = json!({"command": "solve", "k": f.k(), "fiberDim": f.fiber_dim(), "w": w, "bruteforceAgrees": agrees});
    Ok(Report { positive: agrees, text, json })
}

fn cmd_example(config: &RunConfig) -> Result<Report> {
    if let Some(name) = &config.example {
        let spec = example_spec(config, name)?;
        let doc = simplicial_to_json(&spec.build());
        let json = serde_json::from_str(&doc).expect("own output parses");
        return Ok(Report::ok(doc, json));
    }
    let mut text = String::from("presets (name: expected tangent dims):\n");
    let presets: Vec<Value> = catalogue()
        .iter()
        .map(|spec| {
            let _ = writeln!(text, "  {}: {}", spec.name, tuple(&spec.expected_tangent()));
            json!({"name": spec.name, "family": spec.family, "dims": spec.dims,
                   "maxLevel": spec.max_level, "expectedTangent": spec.expected_tangent()})
        })
        .collect();
    text.push_str("documentation fixtures (no linear model):\n");
    for f in documentation_fixtures() {
        let _ = writeln!(text, "  {}: ({})", f.name, f.expected_tangent.join(", "));
    }
    let json = json!({"command": "example", "presets": presets, "documentationFixtures": documentation_fixtures()});
    Ok(Report::ok(text, json))
}

fn cmd_selftest(config: &RunConfig) -> Result<Report> {
    let results = run_all(config.seed);
    let mut text = String::new();
    for r in &results {
        let _ = writeln!(text, "{} {} ({} checks)", if r.passed { "pass" } else { "FAIL" }, r.name, r.checks);
        if let Some(f) = &r.failure {
            let _ = writeln!(text, "  first failure: {f}");
        }
    }
    let positive = results.iter().all(|r| r.passed);
    let json = json!({"command": "selftest", "seed": config.seed, "passed": positive, "suites": results});
    Ok(Report { positive, text, json })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        let mut full = vec!["htan"];
        full.extend_from_slice(args);
        run(&RunConfig::try_parse_from(full).unwrap())
    }

    #[test]
    fn tangent_of_nerve_example() {
        let out = run_args(&["tangent", "--example", "nerve-group", "--dim", "2"]);
        assert_eq!(out.code, 0);
        assert!(out.stdout.contains("degree dims: (0,2)"), "{}", out.stdout);
    }

    #[test]
    fn structured_reports_are_deterministic() {
        let a = run_args(&["hom-limit", "--example", "crossed-module", "--format", "json"]);
        let b = run_args(&["hom-limit", "--example", "crossed-module", "--format", "json"]);
        assert_eq!(a, b);
        let v: Value = serde_json::from_str(&a.stdout).unwrap();
        assert_eq!(v["dims"], json!([2, 1]));
    }

    #[test]
    fn missing_input_is_an_input_error() {
        assert_eq!(run_args(&["validate"]).code, EXIT_INPUT);
        assert_eq!(run_args(&["kan", "--example", "point"]).code, EXIT_INPUT);
        assert_eq!(run_args(&["tangent", "--example", "nope"]).code, EXIT_INPUT);
    }

    #[test]
    fn negative_kan_verdict_exits_one() {
        assert_eq!(run_args(&["kan", "--example", "nerve-group", "--degree", "0"]).code, EXIT_NEGATIVE);
        assert_eq!(run_args(&["kan", "--example", "nerve-group", "--degree", "1"]).code, EXIT_OK);
    }
}
