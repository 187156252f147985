//! Command-line front end.
//!
//! ```text
//! srw <source> <command> [args] [--format json|tsv] [--max-gens K] [--max-n K]
//! srw table <bn|dn> <max_n> [--format json|tsv]
//! ```
//!
//! Exit codes: 0 success, 2 domain or usage error, 3 resource ceiling hit,
//! 4 a computed value contradicts a known theorem.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::complex::SimplicialComplex;
use crate::decomposition::primary_decomposition;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::lp::{format_rational, Rational};
use crate::symbolic::{
    alpha_symbolic, big_height, containment_check_within, symbolic_power_within, ContainmentResult,
};
use crate::waldschmidt::{
    closed_form_bipyramid, closed_form_bipyramidal_graph, waldschmidt_sequence,
    waldschmidt_with_certificate,
};

pub const USAGE: &str = "\
usage: srw <source> <command> [args] [--format json|tsv] [--max-gens K] [--max-n K]
       srw table <bn|dn> <max_n> [--format json|tsv] [--max-n K]

sources:
  bipyramid <n>        boundary complex of the bipyramid over an n-gon
  bigraph <n>          bipyramidal graph on n + 2 vertices
  complex <path.json>  {\"vertices\": N, \"facets\": [[...], ...]}

commands:
  ideal                minimal generators of the Stanley-Reisner ideal
  decompose            minimal primes
  symbolic <m>         generators of the m-th symbolic power
  alpha <m>            initial degree of the m-th symbolic power, with witness
  waldschmidt          exact Waldschmidt constant
  sequence <max_m>     alpha(I^(m))/m for m = 1..max_m
  containment <m> <r>  whether I^(m) is contained in I^r
  els <r>              check I^(h r) in I^r for h the big height
";

pub const DEFAULT_MAX_N: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Tsv,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    Bipyramid(usize),
    Bigraph(usize),
    File(PathBuf),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Ideal,
    Decompose,
    Symbolic(u32),
    Alpha(u32),
    Waldschmidt,
    Sequence(u32),
    Containment(u32, u32),
    Els(u32),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Bipyramid,
    Bigraph,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Target {
    Instance { source: Source, command: Command },
    Table { family: Family, max_n: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunRequest {
    pub target: Target,
    pub format: OutputFormat,
    pub max_generators: usize,
    pub max_n: usize,
}

/// Outcome of one invocation: what to print and how to exit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Report {
    fn ok(stdout: String) -> Self {
        Report {
            exit_code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn error(e: &Error) -> Self {
        Report {
            exit_code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "srw", disable_help_subcommand = true, override_usage = USAGE)]
struct Args {
    /// Output format (tsv by default).
    #[arg(long, value_enum, default_value = "tsv")]
    format: OutputFormat,

    /// Ceiling on generators produced while expanding symbolic powers.
    #[arg(long, default_value_t = crate::symbolic::DEFAULT_MAX_GENERATORS)]
    max_gens: usize,

    /// Ceiling on the family parameter n and on vertices of input complexes.
    #[arg(long, default_value_t = DEFAULT_MAX_N)]
    max_n: usize,

    #[arg(required = true)]
    words: Vec<String>,
}

fn usage_error(msg: impl std::fmt::Display) -> Error {
    Error::Domain(format!("{msg}\n\n{USAGE}"))
}

fn number<T: std::str::FromStr>(words: &[String], at: usize, what: &str) -> Result<T> {
    let w = words
        .get(at)
        .ok_or_else(|| usage_error(format!("missing {what}")))?;
    w.parse()
        .map_err(|_| usage_error(format!("{what} must be a non-negative integer, got `{w}`")))
}

fn parse_words(words: &[String]) -> Result<Target> {
    let head = words.first().map(String::as_str).unwrap_or("");
    if head == "table" {
        let family = match words.get(1).map(String::as_str) {
            Some("bn" | "bipyramid") => Family::Bipyramid,
            Some("dn" | "bigraph") => Family::Bigraph,
            other => return Err(usage_error(format!("unknown table family {other:?}"))),
        };
        let max_n = number(words, 2, "max_n")?;
        if words.len() > 3 {
            return Err(usage_error("unexpected trailing arguments"));
        }
        return Ok(Target::Table { family, max_n });
    }
    let source = match head {
        "bipyramid" => Source::Bipyramid(number(words, 1, "n")?),
        "bigraph" => Source::Bigraph(number(words, 1, "n")?),
        "complex" => Source::File(PathBuf::from(
            words
                .get(1)
                .ok_or_else(|| usage_error("missing complex path"))?,
        )),
        other => return Err(usage_error(format!("unknown source `{other}`"))),
    };
    let name = words
        .get(2)
        .ok_or_else(|| usage_error("missing command"))?
        .as_str();
    let (command, used) = match name {
        "ideal" => (Command::Ideal, 3),
        "decompose" => (Command::Decompose, 3),
        "waldschmidt" => (Command::Waldschmidt, 3),
        "symbolic" => (Command::Symbolic(number(words, 3, "m")?), 4),
        "alpha" => (Command::Alpha(number(words, 3, "m")?), 4),
        "sequence" => (Command::Sequence(number(words, 3, "max_m")?), 4),
        "containment" => (
            Command::Containment(number(words, 3, "m")?, number(words, 4, "r")?),
            5,
        ),
        "els" => (Command::Els(number(words, 3, "r")?), 4),
        other => return Err(usage_error(format!("unknown command `{other}`"))),
    };
    if words.len() > used {
        return Err(usage_error("unexpected trailing arguments"));
    }
    Ok(Target::Instance { source, command })
}

/// Parses a full argument vector (program name first).
pub fn parse_args<I, S>(args: I) -> std::result::Result<RunRequest, Report>
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let args = match Args::try_parse_from(args) {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return Err(if code == 0 {
                Report::ok(text)
            } else {
                Report {
                    exit_code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            });
        }
    };
    let target = parse_words(&args.words).map_err(|e| Report::error(&e))?;
    Ok(RunRequest {
        target,
        format: args.format,
        max_generators: args.max_gens,
        max_n: args.max_n,
    })
}

/// Parses and runs in one step.
pub fn main_with_args<I, S>(args: I) -> Report
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    match parse_args(args) {
        Ok(req) => run(&req),
        Err(report) => report,
    }
}

pub fn run(req: &RunRequest) -> Report {
    let result = match &req.target {
        Target::Instance { source, command } => run_instance(req, source, *command),
        Target::Table { family, max_n } => run_table(req, *family, *max_n),
    };
    result.unwrap_or_else(|e| Report::error(&e))
}

fn load_complex(req: &RunRequest, source: &Source) -> Result<SimplicialComplex> {
    let check_n = |n: usize| {
        if n > req.max_n {
            Err(Error::Resource(format!(
                "n = {n} exceeds --max-n {}",
                req.max_n
            )))
        } else {
            Ok(n)
        }
    };
    match source {
        Source::Bipyramid(n) => SimplicialComplex::bipyramid(check_n(*n)?),
        Source::Bigraph(n) => SimplicialComplex::bipyramidal_graph(check_n(*n)?),
        Source::File(path) => {
            let text = std::fs::read_to_string(path)?;
            let c = SimplicialComplex::from_json(&text)?;
            check_n(c.num_vertices())?;
            Ok(c)
        }
    }
}

fn rat(q: &Rational) -> String {
    format_rational(q)
}

fn json_text(value: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

fn run_instance(req: &RunRequest, source: &Source, command: Command) -> Result<Report> {
    let complex = load_complex(req, source)?;
    let ideal = MonomialIdeal::stanley_reisner_within(
        &complex,
        req.max_n.max(crate::complex::DEFAULT_MAX_VERTICES),
    )?;
    let nv = ideal.num_variables();
    let json = req.format == OutputFormat::Json;
    let gens_lines = |i: &MonomialIdeal| {
        let mut s = String::new();
        for g in i.generators() {
            writeln!(s, "{g}").unwrap();
        }
        s
    };
    let gens_strings = |i: &MonomialIdeal| {
        i.generators()
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
    };

    let out = match command {
        Command::Ideal => {
            if json {
                json_text(&json!({"variables": nv, "generators": gens_strings(&ideal)}))
            } else {
                gens_lines(&ideal)
            }
        }
        Command::Decompose => {
            let primes = primary_decomposition(&ideal)?;
            if json {
                json_text(&json!({"variables": nv, "primes": primes}))
            } else {
                primes.iter().map(|p| format!("{p}\n")).collect()
            }
        }
        Command::Symbolic(m) => {
            let s = symbolic_power_within(&ideal, m, req.max_generators)?;
            if json {
                json_text(&json!({"variables": nv, "m": m, "generators": gens_strings(&s)}))
            } else {
                gens_lines(&s)
            }
        }
        Command::Alpha(m) => {
            let c = alpha_symbolic(&ideal, m)?;
            if json {
                json_text(&c)
            } else {
                format!(
                    "m\tvalue\twitness\tdual_bound\n{m}\t{}\t{}\t{}\n",
                    c.value,
                    c.witness,
                    rat(&c.dual_bound)
                )
            }
        }
        Command::Waldschmidt => {
            let (value, sol) = waldschmidt_with_certificate(&ideal)?;
            if json {
                json_text(&json!({
                    "waldschmidt": rat(&value),
                    "point": sol.point.iter().map(rat).collect::<Vec<_>>(),
                    "duals": sol.duals.iter().map(rat).collect::<Vec<_>>(),
                    "basis": sol.basis_certificate,
                }))
            } else {
                format!("{}\n", rat(&value))
            }
        }
        Command::Sequence(max_m) => {
            let seq = waldschmidt_sequence(&ideal, max_m)?;
            if json {
                let rows: Vec<_> = seq
                    .iter()
                    .enumerate()
                    .map(|(k, q)| json!({"m": k + 1, "ratio": rat(q)}))
                    .collect();
                json_text(&rows)
            } else {
                let mut s = String::from("m\tratio\n");
                for (k, q) in seq.iter().enumerate() {
                    writeln!(s, "{}\t{}", k + 1, rat(q)).unwrap();
                }
                s
            }
        }
        Command::Containment(m, r) => {
            let contained = containment_check_within(&ideal, m, r, req.max_generators)?;
            let res = ContainmentResult { m, r, contained };
            if json {
                json_text(&res)
            } else {
                format!("m\tr\tcontained\n{m}\t{r}\t{contained}\n")
            }
        }
        Command::Els(r) => {
            let h = big_height(&ideal)? as u32;
            let m = h * r;
            let contained = containment_check_within(&ideal, m, r, req.max_generators)?;
            let body = if json {
                json_text(&json!({"r": r, "big_height": h, "m": m, "contained": contained}))
            } else {
                format!("r\tbig_height\tm\tcontained\n{r}\t{h}\t{m}\t{contained}\n")
            };
            if !contained {
                return Ok(Report {
                    exit_code: 4,
                    stdout: body,
                    stderr: "error: symbolic power bound I^(hr) ⊆ I^r violated; \
                             this indicates an implementation bug\n"
                        .into(),
                });
            }
            body
        }
    };
    Ok(Report::ok(out))
}

#[derive(Serialize)]
struct TableRow {
    n: usize,
    #[serde(serialize_with = "crate::serial::rational")]
    waldschmidt: Rational,
    #[serde(serialize_with = "crate::serial::rational")]
    closed_form: Rational,
    #[serde(rename = "match")]
    matches: bool,
}

fn table_row(family: Family, n: usize) -> Result<TableRow> {
    let (complex, closed) = match family {
        Family::Bipyramid => (SimplicialComplex::bipyramid(n)?, closed_form_bipyramid(n)?),
        Family::Bigraph => (
            SimplicialComplex::bipyramidal_graph(n)?,
            closed_form_bipyramidal_graph(n)?,
        ),
    };
    let ideal = MonomialIdeal::stanley_reisner_within(&complex, n + 2)?;
    let (value, _) = waldschmidt_with_certificate(&ideal)?;
    Ok(TableRow {
        n,
        matches: value == closed,
        waldschmidt: value,
        closed_form: closed,
    })
}

fn run_table(req: &RunRequest, family: Family, max_n: usize) -> Result<Report> {
    if max_n < 3 {
        return Err(Error::Domain("table needs max_n ≥ 3".into()));
    }
    if max_n > req.max_n {
        return Err(Error::Resource(format!(
            "max_n = {max_n} exceeds --max-n {}",
            req.max_n
        )));
    }
    // rows are independent; collect in n order whatever the finishing order
    let rows: Vec<TableRow> = std::thread::scope(|scope| {
        let handles: Vec<_> = (3..=max_n)
            .map(|n| scope.spawn(move || table_row(family, n)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("table worker panicked"))
            .collect::<Result<Vec<_>>>()
    })?;

    Ok(table_report(req.format, &rows))
}

fn table_report(format: OutputFormat, rows: &[TableRow]) -> Report {
    let stdout = if format == OutputFormat::Json {
        json_text(&rows)
    } else {
        let mut s = String::from("n\twaldschmidt\tclosed_form\tmatch\n");
        for r in rows {
            writeln!(
                s,
                "{}\t{}\t{}\t{}",
                r.n,
                rat(&r.waldschmidt),
                rat(&r.closed_form),
                r.matches
            )
            .unwrap();
        }
        s
    };
    if rows.iter().all(|r| r.matches) {
        Report::ok(stdout)
    } else {
        Report {
            exit_code: 4,
            stdout,
            stderr: "error: LP value differs from the closed form\n".into(),
        }
    }
}
