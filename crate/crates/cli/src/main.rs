//! `twotrees` — construct, check, enumerate and audit central 2-trees.
//!
//! Exit codes: 0 success, 1 semantic negative (audit failure,
//! non-isomorphic graphs), 2 usage, input or resource error.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use twotrees::constructors::{self, Construction};
use twotrees::degseq::{
    central_sequence, delta_range, erdos_gallai_graphic, tail_params, two_tree_conditions,
    CoreSize, DegreeSequence,
};
use twotrees::enumerate::{audit_with, emit_table, AuditOptions, ENUMERATION_CAP};
use twotrees::{classify_central, is_isomorphic, Graph};

#[derive(Parser)]
#[command(
    name = "twotrees",
    version,
    about = "Strong central 2-trees: constructions, degree sequences, census and audit"
)]
struct Cli {
    /// Output format (each subcommand has its own default).
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write the main output here instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Worker threads for enumeration (default: all cores).
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    /// fan N
    Fan,
    /// book PAGES
    Book,
    /// bicentral N DELTA
    Bicentral,
    /// bicentral-sigma3 N K
    BicentralSigma3,
    /// tricentral-extremal N
    TricentralExtremal,
    /// gpq K P Q
    Gpq,
}

#[derive(Subcommand)]
enum Command {
    /// Build a graph from one of the explicit families; prints edge-list JSON
    /// and a classification summary on stderr.
    Construct {
        #[arg(value_enum)]
        family: Family,
        params: Vec<usize>,
    },
    /// Test a comma-separated degree sequence.
    CheckSeq { sequence: String },
    /// Closed-form tail parameters for (n, r) and one or all Δ.
    Params {
        n: usize,
        r: usize,
        delta: Option<usize>,
    },
    /// Census table of strong central 2-trees with tail degrees in {2,3}.
    Tables {
        /// Core size 1, 2 or 3.
        #[arg(long)]
        r: usize,
        /// Order range `a..b` (inclusive) or a single order.
        #[arg(long, value_name = "RANGE")]
        n: OrderRange,
    },
    /// Re-check the structural claims against a full census up to N_MAX.
    Audit {
        n_max: usize,
        /// Same as `--format json`.
        #[arg(long)]
        json: bool,
        /// Add a deliberately false check (for testing failure reporting).
        #[arg(long, hide = true)]
        inject_failure: bool,
    },
    /// Compare two graph JSON files up to isomorphism.
    Iso { a: PathBuf, b: PathBuf },
}

#[derive(Clone, Copy, Debug)]
struct OrderRange(usize, usize);

impl FromStr for OrderRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| format!("bad order {t:?}"))
        };
        let (a, b) = match s.split_once("..") {
            Some((a, b)) => (num(a)?, num(b.strip_prefix('=').unwrap_or(b))?),
            None => (num(s)?, num(s)?),
        };
        if a > b {
            return Err(format!("empty range {s}"));
        }
        Ok(OrderRange(a, b))
    }
}

/// A failure that ends the run with exit code 2.
struct Fatal(String);

impl<E: std::fmt::Display> From<E> for Fatal {
    fn from(e: E) -> Self {
        Fatal(e.to_string())
    }
}

type Outcome = Result<ExitCode, Fatal>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(code) => code,
        Err(Fatal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    let out = cli.out.as_deref();
    match &cli.command {
        Command::Construct { family, params } => construct(*family, params, cli.format, out),
        Command::CheckSeq { sequence } => check_seq(sequence, cli.format, out),
        Command::Params { n, r, delta } => params(*n, *r, *delta, cli.format, out),
        Command::Tables { r, n } => tables(*r, *n, cli.format, out),
        Command::Audit {
            n_max,
            json,
            inject_failure,
        } => {
            let format = if *json {
                Some(Format::Json)
            } else {
                cli.format
            };
            audit(*n_max, *inject_failure, format, out)
        }
        Command::Iso { a, b } => iso(a, b, out),
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Fatal> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Fatal(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn construct(
    family: Family,
    params: &[usize],
    format: Option<Format>,
    out: Option<&Path>,
) -> Outcome {
    let arity = match family {
        Family::Fan | Family::Book | Family::TricentralExtremal => 1,
        Family::Bicentral | Family::BicentralSigma3 => 2,
        Family::Gpq => 3,
    };
    if params.len() != arity {
        return Err(Fatal(format!(
            "this family takes {arity} integer parameter(s), got {}",
            params.len()
        )));
    }
    let p = params;
    let Construction { graph, .. } = match family {
        Family::Fan => constructors::fan(p[0]),
        Family::Book => constructors::book(p[0]),
        Family::Bicentral => constructors::bicentral_standard(p[0], p[1]),
        Family::BicentralSigma3 => constructors::bicentral_sigma3(p[0], p[1]),
        Family::TricentralExtremal => constructors::tricentral_extremal(p[0]),
        Family::Gpq => constructors::tricentral_gpq(p[0], p[1], p[2]),
    }?;
    let summary = match classify_central(&graph) {
        Ok(c) => c.summary(),
        Err(e) => format!("unclassified: {e}"),
    };
    match format.unwrap_or(Format::Json) {
        Format::Json => {
            emit(out, &format!("{}\n", graph.to_json()))?;
            eprintln!("{summary}");
        }
        Format::Text => emit(out, &format!("{summary}\n{}\n", graph.to_json()))?,
        Format::Csv => {
            let mut s = String::from("u,v\n");
            for (u, v) in graph.edges() {
                writeln!(s, "{u},{v}").unwrap();
            }
            emit(out, &s)?;
            eprintln!("{summary}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn check_seq(sequence: &str, format: Option<Format>, out: Option<&Path>) -> Outcome {
    let d: DegreeSequence = sequence.parse()?;
    let n = d.len();
    let graphic = erdos_gallai_graphic(&d);
    // fewer than three entries: only K₂ = (1,1) is a 2-tree
    let (two_tree, failed) = match two_tree_conditions(&d) {
        Ok(c) => (c.all(), c.failures()),
        Err(_) => (d.degrees() == [1, 1], vec![]),
    };
    let central: Vec<(CoreSize, usize)> = CoreSize::ALL
        .into_iter()
        .flat_map(|r| delta_range(n, r).map(move |delta| (r, delta)))
        .filter(|&(r, delta)| central_sequence(n, r, delta).is_ok_and(|c| c == d))
        .collect();
    let text = match format.unwrap_or(Format::Text) {
        Format::Json => {
            let central: Vec<_> = central
                .iter()
                .map(|&(r, delta)| json!({ "r": r.get(), "delta": delta }))
                .collect();
            let v = json!({
                "sequence": d,
                "graphic": graphic,
                "two_tree": two_tree,
                "failed_conditions": failed,
                "central": central,
            });
            format!("{}\n", serde_json::to_string_pretty(&v)?)
        }
        Format::Text => {
            let mut s = format!("sequence: {d}\ngraphic: {}\n", yes_no(graphic));
            if failed.is_empty() {
                writeln!(s, "two-tree: {}", yes_no(two_tree)).unwrap();
            } else {
                writeln!(s, "two-tree: no (failed: {})", failed.join(", ")).unwrap();
            }
            for r in CoreSize::ALL {
                match central.iter().find(|c| c.0 == r) {
                    Some(&(_, delta)) => writeln!(s, "central r={r}: Δ={delta}").unwrap(),
                    None => writeln!(s, "central r={r}: none").unwrap(),
                }
            }
            s
        }
        Format::Csv => return Err(Fatal("check-seq supports text and json output".into())),
    };
    emit(out, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn params(
    n: usize,
    r: usize,
    delta: Option<usize>,
    format: Option<Format>,
    out: Option<&Path>,
) -> Outcome {
    let r = CoreSize::new(r)?;
    let deltas: Vec<usize> = match delta {
        Some(d) => vec![d],
        None => delta_range(n, r).collect(),
    };
    let profiles: Vec<_> = deltas.iter().map(|&d| tail_params(n, r, d)).collect();
    let seq = |d: usize| central_sequence(n, r, d).ok().map(|s| s.spaced());
    let text = match format.unwrap_or(Format::Text) {
        Format::Json => {
            let rows: Vec<_> = profiles
                .iter()
                .map(|p| {
                    json!({
                        "n": p.n, "r": p.r.get(), "delta": p.delta, "x": p.x, "y": p.y,
                        "feasible": p.feasible, "degree_sequence": seq(p.delta),
                    })
                })
                .collect();
            format!("{}\n", serde_json::to_string_pretty(&rows)?)
        }
        Format::Csv => {
            let mut s = String::from("n,r,delta,x,y,feasible,degree_sequence\n");
            for p in &profiles {
                let ds = seq(p.delta).unwrap_or_default();
                writeln!(
                    s,
                    "{},{},{},{},{},{},\"{ds}\"",
                    p.n, p.r, p.delta, p.x, p.y, p.feasible
                )
                .unwrap();
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            if profiles.is_empty() {
                writeln!(s, "no admissible Δ for n={n} r={r}").unwrap();
            }
            for p in &profiles {
                write!(
                    s,
                    "n={} r={} Δ={} x={} y={} feasible={}",
                    p.n,
                    p.r,
                    p.delta,
                    p.x,
                    p.y,
                    yes_no(p.feasible)
                )
                .unwrap();
                match seq(p.delta) {
                    Some(ds) => writeln!(s, " sequence=({})", ds.replace(' ', ",")).unwrap(),
                    None => s.push('\n'),
                }
            }
            s
        }
    };
    emit(out, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn check_cap(n: usize) -> Result<(), Fatal> {
    if n > ENUMERATION_CAP {
        return Err(Fatal(format!(
            "n = {n} exceeds the enumeration cap of {ENUMERATION_CAP}"
        )));
    }
    Ok(())
}

fn tables(r: usize, range: OrderRange, format: Option<Format>, out: Option<&Path>) -> Outcome {
    let r = CoreSize::new(r)?;
    check_cap(range.1)?;
    let table = emit_table(range.0, range.1, r)?;
    let text = match format.unwrap_or(Format::Csv) {
        Format::Csv => table.to_csv(),
        Format::Json => table.to_json(),
        Format::Text => table.to_text(),
    };
    emit(out, &text)?;
    Ok(ExitCode::SUCCESS)
}

fn audit(
    n_max: usize,
    inject_failure: bool,
    format: Option<Format>,
    out: Option<&Path>,
) -> Outcome {
    check_cap(n_max)?;
    let report = audit_with(n_max, AuditOptions { inject_failure })?;
    let text = match format.unwrap_or(Format::Text) {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&report)?),
        Format::Text => report.to_text(),
        Format::Csv => return Err(Fatal("audit supports text and json output".into())),
    };
    emit(out, &text)?;
    Ok(if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn read_graph(path: &Path) -> Result<Graph, Fatal> {
    let s = fs::read_to_string(path).map_err(|e| Fatal(format!("{}: {e}", path.display())))?;
    Graph::from_json(&s).map_err(|e| Fatal(format!("{}: {e}", path.display())))
}

fn iso(a: &Path, b: &Path, out: Option<&Path>) -> Outcome {
    let (g, h) = (read_graph(a)?, read_graph(b)?);
    let same = is_isomorphic(&g, &h);
    emit(
        out,
        if same {
            "isomorphic\n"
        } else {
            "non-isomorphic\n"
        },
    )?;
    Ok(if same {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}
