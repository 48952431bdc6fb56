//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when the input fails validation (or a
//! cross-check fails), 2 on usage errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::corpus;
use crate::dual_ideal::theorem_generators;
use crate::error::Error;
use crate::io::{Format, InputFile};
use crate::level::{self, join};
use crate::oracle;
use crate::semilattice::MeetSemilattice;
use crate::subset::Subset;

#[derive(Parser, Debug)]
#[command(
    name = "latlevel",
    version,
    about = "Alexander duals and levelness of finite meet-semilattices"
)]
struct Cli {
    #[command(flatten)]
    opts: Opts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Opts {
    /// Input file (poset covers/leq JSON or set-family JSON).
    #[arg(long, global = true)]
    input: Option<PathBuf>,
    /// Force the input schema instead of detecting it by key.
    #[arg(long, global = true, value_enum)]
    format: Option<FormatArg>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Run h-vector machinery on inputs that are not meet-distributive.
    #[arg(long, global = true)]
    force: bool,
    /// Refuse inputs with more elements than this.
    #[arg(long, global = true, env = "LATLEVEL_MAX_GROUND")]
    max_ground: Option<usize>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Covers,
    Sets,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the meet-semilattice axioms and meet-distributivity.
    Validate,
    /// Minimal generators of the Stanley–Reisner ideal of the dual.
    DualIdeal,
    /// h-vector of the dual.
    Hvector,
    /// The complex of sets S(a).
    Scomplex,
    /// Full levelness report.
    Level,
    /// Compare every closed-form result against brute force.
    OracleCheck,
    /// The distributive closure J(P).
    Closure,
    /// h-vectors of duals of J(P) over all posets P on n elements.
    Scan {
        #[arg(long, short)]
        n: usize,
    },
    /// Print a bundled example as an input file.
    Corpus {
        /// L1, L2, B3-minus-13, N5, Bn(k) or JP(seed).
        name: String,
    },
}

enum Failure {
    Quiet,
    Usage(String),
    Invalid(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Invalid(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        if e.kind() == std::io::ErrorKind::BrokenPipe {
            return Failure::Quiet;
        }
        Failure::Invalid(e.to_string())
    }
}

type Outcome = std::result::Result<i32, Failure>;

/// Parse `args` and run; returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    match dispatch(&cli, out, err) {
        Ok(code) => code,
        Err(Failure::Quiet) => 0,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(Failure::Invalid(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}

fn emit_json(out: &mut dyn Write, v: &Value) -> std::io::Result<()> {
    writeln!(
        out,
        "{}",
        serde_json::to_string_pretty(v).expect("json values serialize")
    )
}

fn max_ground(opts: &Opts) -> std::result::Result<usize, Failure> {
    match opts.max_ground {
        None => Ok(Subset::CAPACITY),
        Some(n) if n <= Subset::CAPACITY => Ok(n),
        Some(n) => Err(Failure::Usage(format!(
            "--max-ground {n} exceeds the supported maximum of {}",
            Subset::CAPACITY
        ))),
    }
}

fn read_input(opts: &Opts) -> std::result::Result<InputFile, Failure> {
    let path = opts
        .input
        .as_ref()
        .ok_or_else(|| Failure::Usage("this subcommand needs --input FILE".into()))?;
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))?;
    let format = opts.format.map(|f| match f {
        FormatArg::Covers => Format::Covers,
        FormatArg::Sets => Format::Sets,
    });
    Ok(InputFile::parse(&text, format)?)
}

fn load(opts: &Opts) -> std::result::Result<MeetSemilattice, Failure> {
    let limit = max_ground(opts)?;
    Ok(read_input(opts)?.build(limit)?)
}

/// Gate for subcommands whose results are only certified on
/// meet-distributive input.
fn certify(
    l: &MeetSemilattice,
    opts: &Opts,
    err: &mut dyn Write,
) -> std::result::Result<bool, Failure> {
    match l.is_meet_distributive().witness {
        None => Ok(true),
        Some(w) if opts.force => {
            writeln!(
                err,
                "WARNING: input is not meet-distributive (interval below `{}` is not boolean); \
                 results below are uncertified",
                l.id(w)
            )?;
            Ok(false)
        }
        Some(w) => Err(Error::NotMeetDistributive {
            witness: l.id(w).to_string(),
        }
        .into()),
    }
}

fn p_legend(l: &MeetSemilattice) -> String {
    l.join_irreducibles()
        .iter()
        .enumerate()
        .map(|(j, &a)| format!("{}={}", j + 1, l.id(a)))
        .collect::<Vec<_>>()
        .join(" ")
}

fn braces(s: Subset) -> String {
    format!(
        "{{{}}}",
        s.iter()
            .map(|i| (i + 1).to_string())
            .collect::<Vec<_>>()
            .join(",")
    )
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let opts = &cli.opts;
    match &cli.command {
        Command::Validate => validate(opts, out, err),
        Command::DualIdeal => {
            let l = load(opts)?;
            if !l.is_meet_distributive().holds {
                writeln!(err, "warning: input is not meet-distributive")?;
            }
            let gens = theorem_generators(&l);
            if opts.json {
                let v: Vec<_> = gens.iter().map(|g| g.to_json()).collect();
                emit_json(out, &json!(v))?;
            } else {
                writeln!(out, "P: {}", p_legend(&l))?;
                writeln!(out, "minimal generators ({}):", gens.len())?;
                for g in &gens {
                    writeln!(out, "  [{}] {}", g.family.tag(), g)?;
                }
            }
            Ok(0)
        }
        Command::Hvector => {
            let l = load(opts)?;
            let certified = certify(&l, opts, err)?;
            let h = level::neighbor_census(&l);
            if opts.json {
                emit_json(
                    out,
                    &json!({ "h": h, "n": l.rank(), "certified": certified }),
                )?;
            } else {
                writeln!(out, "h = {h}")?;
                writeln!(out, "n = {}", l.rank())?;
            }
            Ok(0)
        }
        Command::Scomplex => {
            let l = load(opts)?;
            certify(&l, opts, err)?;
            let s = level::s_complex_unchecked(&l)?;
            if opts.json {
                let faces: serde_json::Map<String, Value> = (0..l.len())
                    .map(|a| {
                        (
                            l.id(a).to_string(),
                            json!(s.faces[a].iter().map(|i| i + 1).collect::<Vec<_>>()),
                        )
                    })
                    .collect();
                let facets: Vec<Vec<usize>> = s
                    .facets
                    .iter()
                    .map(|f| f.iter().map(|i| i + 1).collect())
                    .collect();
                emit_json(
                    out,
                    &json!({ "faces": faces, "facets": facets, "pure": s.is_pure() }),
                )?;
            } else {
                writeln!(out, "P: {}", p_legend(&l))?;
                for a in 0..l.len() {
                    writeln!(out, "S({}) = {}", l.id(a), braces(s.faces[a]))?;
                }
                let facets: Vec<String> = s.facets.iter().map(|&f| braces(f)).collect();
                writeln!(out, "facets: {}", facets.join(" "))?;
                writeln!(out, "pure: {}", if s.is_pure() { "yes" } else { "no" })?;
            }
            Ok(0)
        }
        Command::Level => {
            let l = load(opts)?;
            let report = if certify(&l, opts, err)? {
                level::level_report(&l)?
            } else {
                level::level_report_unchecked(&l)?
            };
            if opts.json {
                emit_json(
                    out,
                    &serde_json::to_value(&report).expect("report serializes"),
                )?;
            } else {
                writeln!(out, "P: {}", p_legend(&l))?;
                writeln!(out, "h = {}", report.h)?;
                writeln!(out, "f(dual) = ({})", join(&report.f_dual))?;
                writeln!(out, "a-invariant = {}", report.a_invariant)?;
                let facets: Vec<String> = report
                    .s_facets
                    .iter()
                    .map(|f| format!("{{{}}}", join(f).replace(' ', "")))
                    .collect();
                writeln!(out, "S-facets: {}", facets.join(" "))?;
                writeln!(out, "LEVEL: {}", if report.is_level { "yes" } else { "no" })?;
            }
            Ok(0)
        }
        Command::OracleCheck => {
            let l = load(opts)?;
            let report = oracle::cross_check(&l);
            if opts.json {
                emit_json(
                    out,
                    &serde_json::to_value(&report).expect("report serializes"),
                )?;
            } else {
                for c in &report.checks {
                    let status = match (&c.skipped, c.pass) {
                        (Some(_), _) => "SKIP",
                        (None, true) => "PASS",
                        (None, false) => "FAIL",
                    };
                    write!(out, "{status} {}", c.name)?;
                    if let Some(why) = &c.skipped {
                        write!(out, " ({why})")?;
                    }
                    if let Some(cx) = &c.counterexample {
                        write!(out, " counterexample: {cx}")?;
                    }
                    writeln!(out)?;
                }
            }
            Ok(if report.passed() { 0 } else { 1 })
        }
        Command::Closure => {
            let l = load(opts)?;
            let closure = l.distributive_closure()?;
            let embeds = closure.embed(&l).is_some();
            let iso = closure.is_isomorphic_to(&l);
            let p = l.join_irreducible_poset();
            let ideals: Vec<Vec<&str>> = closure
                .ideals
                .iter()
                .map(|s| s.iter().map(|i| p.id(i)).collect())
                .collect();
            if opts.json {
                emit_json(
                    out,
                    &json!({
                        "size": closure.lattice.len(),
                        "ideals": ideals,
                        "embeds": embeds,
                        "isomorphic": iso,
                    }),
                )?;
            } else {
                writeln!(
                    out,
                    "|J(P)| = {} (|L| = {})",
                    closure.lattice.len(),
                    l.len()
                )?;
                for i in &ideals {
                    writeln!(out, "  {{{}}}", i.join(","))?;
                }
                writeln!(out, "embeds: {}", if embeds { "yes" } else { "no" })?;
                writeln!(out, "isomorphic: {}", if iso { "yes" } else { "no" })?;
            }
            Ok(0)
        }
        Command::Scan { n } => {
            let found =
                oracle::realizability_scan(*n).map_err(|e| Failure::Usage(e.to_string()))?;
            if opts.json {
                let hs: Vec<&[u64]> = found.iter().map(|h| h.as_slice()).collect();
                emit_json(out, &json!({ "n": n, "h_vectors": hs }))?;
            } else {
                for h in &found {
                    writeln!(out, "({})", join(h.as_slice()))?;
                }
            }
            Ok(0)
        }
        Command::Corpus { name } => {
            let file = corpus::emit(name).map_err(|e| match e {
                Error::UnknownName(_) => {
                    Failure::Usage(format!("{e}; known entries: {}", corpus::NAMES.join(", ")))
                }
                other => Failure::from(other),
            })?;
            emit_json(out, &file.to_json())?;
            Ok(0)
        }
    }
}

fn validate(opts: &Opts, out: &mut dyn Write, _err: &mut dyn Write) -> Outcome {
    let limit = max_ground(opts)?;
    let input = read_input(opts)?;
    match input.build(limit) {
        Ok(l) => {
            let r = l.report();
            if opts.json {
                emit_json(out, &serde_json::to_value(&r).expect("report serializes"))?;
            } else {
                writeln!(out, "valid: yes")?;
                writeln!(out, "elements: {}", l.len())?;
                writeln!(out, "join_irreducibles: {}", p_legend(&l))?;
                writeln!(out, "meet_distributive: {}", r.meet_distributive)?;
                writeln!(out, "witness: {}", r.witness.as_deref().unwrap_or("-"))?;
            }
            Ok(0)
        }
        Err(e) => {
            if opts.json {
                emit_json(
                    out,
                    &json!({
                        "valid": false,
                        "join_irreducibles": [],
                        "meet_distributive": false,
                        "witness": null,
                    }),
                )?;
            } else {
                writeln!(out, "valid: no")?;
            }
            Err(e.into())
        }
    }
}
