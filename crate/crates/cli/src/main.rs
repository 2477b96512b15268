use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::error::ErrorKind;
use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use serde_json::json;

use qalink::census::{load_census, verify_conjecture};
use qalink::families::{
    greene_classify_pretzel, product_dominates_sum, twist_recurrence_check, widmer_inequality_check,
    FamilySpec, PretzelSpec, WidmerCase,
};
use qalink::invariants::{determinant_oracle_capped, DEFAULT_BRACKET_CAP};
use qalink::qa::{check_certificate, qa_search, QaCertificate, QaVerdict, DEFAULT_BUDGET};
use qalink::tait::graph_predicates;
use qalink::{determinant, kauffman_bracket, parse_pd, spanning_tree_count, tait_graph, LinkDiagram};

#[derive(Parser)]
#[command(name = "qalink", version, about = "Link determinants, Tait graphs and quasi-alternating certificates")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Link determinant via the Goeritz matrix.
    Det {
        #[command(flatten)]
        input: PdInput,
        /// Cross-check against the Kauffman bracket at a primitive 8th root of unity.
        #[arg(long)]
        oracle: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Kauffman bracket polynomial.
    Bracket {
        #[command(flatten)]
        input: PdInput,
        #[arg(long, default_value_t = DEFAULT_BRACKET_CAP)]
        cap: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Search for a quasi-alternating certificate.
    Qa(QaCommand),
    /// Tait graph operations.
    Tait {
        #[command(subcommand)]
        command: TaitCommand,
    },
    /// Build diagrams from family parameters.
    Family {
        #[command(subcommand)]
        command: FamilyCommand,
    },
    /// Arithmetic checks behind the determinant bounds.
    Check {
        #[command(subcommand)]
        command: CheckCommand,
    },
    /// Census sweeps.
    Census {
        #[command(subcommand)]
        command: CensusCommand,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct PdInput {
    /// PD code, e.g. "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]".
    #[arg(long)]
    pd: Option<String>,
    /// File containing a PD code.
    #[arg(long)]
    pd_file: Option<PathBuf>,
}

impl PdInput {
    fn load(&self) -> Result<LinkDiagram> {
        let text = match (&self.pd, &self.pd_file) {
            (Some(s), _) => s.clone(),
            (_, Some(p)) => std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?,
            _ => unreachable!("clap enforces one input"),
        };
        Ok(parse_pd(text.trim())?)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Args)]
#[command(args_conflicts_with_subcommands = true)]
struct QaCommand {
    #[command(subcommand)]
    verify: Option<QaSub>,
    #[arg(long, conflicts_with = "pd_file")]
    pd: Option<String>,
    #[arg(long)]
    pd_file: Option<PathBuf>,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Exit 1 unless a certificate is found.
    #[arg(long)]
    strict: bool,
}

#[derive(Subcommand)]
enum QaSub {
    /// Re-check a JSON certificate.
    VerifyCert {
        #[arg(long)]
        cert: PathBuf,
    },
}

#[derive(Subcommand)]
enum TaitCommand {
    /// Spanning-tree count of the Tait graph.
    Trees {
        #[command(flatten)]
        input: PdInput,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Subcommand)]
enum FamilyCommand {
    /// Pretzel link from tassel lengths, e.g. `4,3,-3`.
    Pretzel {
        #[arg(allow_hyphen_values = true)]
        tassels: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Montesinos link, e.g. `e=0;2/1,3/2`.
    Montesinos {
        #[arg(allow_hyphen_values = true)]
        spec: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Two-bridge link from continued-fraction terms, e.g. `2,3,2`.
    Cf {
        #[arg(allow_hyphen_values = true)]
        terms: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Quasi-alternating status of P(e; p.., -q..).
    ClassifyPretzel {
        #[arg(long, default_value_t = 0)]
        e: u32,
        #[arg(long, value_delimiter = ',')]
        p: Vec<i64>,
        #[arg(long, value_delimiter = ',')]
        q: Vec<i64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Subcommand)]
enum CheckCommand {
    /// Product of positive integers against the sum of those above 1.
    LemmaSimple {
        #[arg(value_delimiter = ',')]
        values: Vec<i64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        strict: bool,
    },
    /// det(L') = det(L) + (k-1) det(L1) for a twisted crossing.
    Twist {
        #[command(flatten)]
        input: PdInput,
        #[arg(long)]
        crossing: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        strict: bool,
    },
    /// Determinant bound against crossing count for a Montesinos case:
    /// `one a1,a2,n`, `two a1,a2,c1,c2`, `three a1,a2,a3,n` or
    /// `triple a1,a2,a3,c1,c2,c3`.
    Widmer {
        case: String,
        #[arg(value_delimiter = ',')]
        params: Vec<i64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        strict: bool,
    },
}

#[derive(Subcommand)]
enum CensusCommand {
    /// Report entries with crossing number greater than determinant.
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Worker threads (default: all cores).
        #[arg(long)]
        jobs: Option<usize>,
        /// Also check each determinant against the bracket (small diagrams).
        #[arg(long)]
        oracle: bool,
        /// Exit 1 if any entry violates the inequality.
        #[arg(long)]
        strict: bool,
    },
}

/// Text to print and whether the run counts as a failure.
struct Outcome {
    text: String,
    failed: bool,
}

impl Outcome {
    fn ok(text: impl Into<String>) -> Self {
        Self { text: text.into(), failed: false }
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("domain types serialize")
}

fn render_diagram(d: &LinkDiagram, format: Format) -> String {
    let det = determinant(d);
    match format {
        Format::Json => to_json(&json!({ "pd": d.serialize(), "free_loops": d.free_loops, "crossings": d.crossing_count(), "det": det.to_string() })),
        Format::Csv => format!("pd,crossings,det\n\"{}\",{},{det}", d.pd.to_census_string(), d.crossing_count()),
        Format::Text => format!("{}\ncrossings: {}\ndet: {det}", d.serialize(), d.crossing_count()),
    }
}

fn run(cli: Cli) -> Result<Outcome> {
    match cli.command {
        Command::Det { input, oracle, format } => {
            let d = input.load()?;
            let det = determinant(&d);
            let mut failed = false;
            let check = if oracle {
                let o = determinant_oracle_capped(&d, DEFAULT_BRACKET_CAP)?;
                failed = o != det;
                Some(o)
            } else {
                None
            };
            let text = match format {
                Format::Json => to_json(&json!({ "det": det.to_string(), "oracle": check.map(|o| o.to_string()) })),
                Format::Csv => match &check {
                    Some(o) => format!("det,oracle\n{det},{o}"),
                    None => format!("det\n{det}"),
                },
                Format::Text => match &check {
                    Some(o) if failed => format!("{det}\noracle disagrees: {o}"),
                    Some(_) => format!("{det}\noracle agrees"),
                    None => det.to_string(),
                },
            };
            Ok(Outcome { text, failed })
        }
        Command::Bracket { input, cap, format } => {
            let b = kauffman_bracket_with(&input.load()?, cap)?;
            Ok(Outcome::ok(match format {
                Format::Json => to_json(&json!({ "bracket": b.to_string() })),
                _ => b.to_string(),
            }))
        }
        Command::Qa(QaCommand { verify: Some(QaSub::VerifyCert { cert }), .. }) => {
            let text = std::fs::read_to_string(&cert).with_context(|| format!("reading {}", cert.display()))?;
            let cert: QaCertificate = serde_json::from_str(&text).context("parsing certificate JSON")?;
            Ok(match check_certificate(&cert) {
                Ok(()) => Outcome::ok("VALID"),
                Err(e) => Outcome { text: format!("INVALID: {e}"), failed: true },
            })
        }
        Command::Qa(args) => {
            if args.pd.is_none() && args.pd_file.is_none() {
                let mut cmd = Cli::command();
                let qa = cmd.find_subcommand_mut("qa").expect("qa is a subcommand");
                qa.error(ErrorKind::MissingRequiredArgument, "qa needs --pd, --pd-file or verify-cert").exit();
            }
            let input = PdInput { pd: args.pd, pd_file: args.pd_file };
            let verdict = qa_search(&input.load()?, args.budget.max(1));
            let failed = args.strict && !matches!(verdict, QaVerdict::QuasiAlternating(_));
            let text = match args.format {
                Format::Json => to_json(&verdict),
                Format::Csv => qa_csv(&verdict),
                Format::Text => match &verdict {
                    QaVerdict::QuasiAlternating(c) => format!("{c}{verdict}"),
                    v => v.to_string(),
                },
            };
            Ok(Outcome { text, failed })
        }
        Command::Tait { command: TaitCommand::Trees { input, format } } => {
            let g = tait_graph(&input.load()?)?;
            let trees = spanning_tree_count(&g);
            let p = graph_predicates(&g);
            Ok(Outcome::ok(match format {
                Format::Json => to_json(&json!({
                    "vertices": g.vertex_count,
                    "edges": g.edge_count(),
                    "spanning_trees": trees.to_string(),
                    "connected": p.connected,
                    "has_loop": p.has_loop,
                    "has_bridge": p.has_bridge,
                })),
                Format::Csv => format!("vertices,edges,spanning_trees\n{},{},{trees}", g.vertex_count, g.edge_count()),
                Format::Text => trees.to_string(),
            }))
        }
        Command::Family { command } => family(command),
        Command::Check { command } => check(command),
        Command::Census { command: CensusCommand::Verify { input, format, jobs, oracle, strict } } => {
            if let Some(n) = jobs {
                rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global()?;
            }
            census_verify(&input, format, oracle, strict)
        }
    }
}

/// One row per certificate node, addressed by its `0`/`1` path from the root.
fn qa_csv(verdict: &QaVerdict) -> String {
    fn rows(c: &QaCertificate, path: &mut String, out: &mut String) {
        match &c.step {
            None => out.push_str(&format!("\nQUASI-ALTERNATING,{path},,1,,")),
            Some(s) => {
                out.push_str(&format!("\nQUASI-ALTERNATING,{path},{},{},{},{}", s.crossing, s.det, s.det0, s.det1));
                for (bit, child) in [('0', &s.zero), ('1', &s.one)] {
                    path.push(bit);
                    rows(child, path, out);
                    path.pop();
                }
            }
        }
    }
    let mut out = String::from("verdict,path,crossing,det,det0,det1");
    match verdict {
        QaVerdict::QuasiAlternating(c) => rows(c, &mut String::new(), &mut out),
        v => out.push_str(&format!("\n\"{v}\",,,,,")),
    }
    out
}

fn kauffman_bracket_with(d: &LinkDiagram, cap: usize) -> Result<qalink::BracketPolynomial> {
    if cap == DEFAULT_BRACKET_CAP {
        Ok(kauffman_bracket(d)?)
    } else {
        Ok(qalink::invariants::kauffman_bracket_capped(d, cap)?)
    }
}

fn family(command: FamilyCommand) -> Result<Outcome> {
    let (spec, format) = match command {
        FamilyCommand::Pretzel { tassels, format } => (format!("pretzel:{tassels}"), format),
        FamilyCommand::Montesinos { spec, format } => (format!("montesinos:{spec}"), format),
        FamilyCommand::Cf { terms, format } => (format!("cf:{terms}"), format),
        FamilyCommand::ClassifyPretzel { e, p, q, format } => {
            let spec = PretzelSpec::new(e, p, q);
            let verdict = greene_classify_pretzel(&spec)?;
            return Ok(Outcome::ok(match format {
                Format::Json => to_json(&json!({ "spec": spec, "verdict": verdict })),
                _ => verdict.to_string(),
            }));
        }
    };
    let spec: FamilySpec = spec.parse()?;
    Ok(Outcome::ok(render_diagram(&spec.diagram()?, format)))
}

fn parse_widmer(case: &str, p: &[i64]) -> Result<WidmerCase> {
    let want = |n: usize| -> Result<()> {
        if p.len() != n {
            bail!("case {case} takes {n} parameters, got {}", p.len());
        }
        Ok(())
    };
    Ok(match case {
        "one" => {
            want(3)?;
            WidmerCase::One { a1: p[0], a2: p[1], n: p[2] }
        }
        "two" => {
            want(4)?;
            WidmerCase::Two { a1: p[0], a2: p[1], c1: p[2], c2: p[3] }
        }
        "three" => {
            want(4)?;
            WidmerCase::Three { a1: p[0], a2: p[1], a3: p[2], n: p[3] }
        }
        "triple" => {
            want(6)?;
            WidmerCase::Triple { a: [p[0], p[1], p[2]], c: [p[3], p[4], p[5]] }
        }
        other => bail!("unknown case {other:?} (one, two, three, triple)"),
    })
}

fn check(command: CheckCommand) -> Result<Outcome> {
    match command {
        CheckCommand::LemmaSimple { values, format, strict } => {
            let r = product_dominates_sum(&values)?;
            let text = match format {
                Format::Json => to_json(&r),
                Format::Csv => format!("product,partial_sum,holds\n{},{},{}", r.product, r.partial_sum, r.holds),
                Format::Text => format!("{} >= {}: {}", r.product, r.partial_sum, r.holds),
            };
            Ok(Outcome { text, failed: strict && !r.holds })
        }
        CheckCommand::Twist { input, crossing, k, format, strict } => {
            let r = twist_recurrence_check(&input.load()?, crossing, k)?;
            let text = match format {
                Format::Json => to_json(&r),
                Format::Csv => format!("lhs,rhs,equal\n{},{},{}", r.lhs, r.rhs, r.equal),
                Format::Text => format!("{} {} {}", r.lhs, if r.equal { "==" } else { "!=" }, r.rhs),
            };
            Ok(Outcome { text, failed: strict && !r.equal })
        }
        CheckCommand::Widmer { case, params, format, strict } => {
            let r = widmer_inequality_check(&parse_widmer(&case, &params)?)?;
            let text = match format {
                Format::Json => to_json(&r),
                Format::Csv => {
                    format!("det_lower_bound,crossing_count,holds\n{},{},{}", r.det_lower_bound, r.crossing_count, r.holds)
                }
                Format::Text => format!("{} >= {}: {}", r.det_lower_bound, r.crossing_count, r.holds),
            };
            Ok(Outcome { text, failed: strict && !r.holds })
        }
    }
}

fn census_verify(path: &PathBuf, format: Format, oracle: bool, strict: bool) -> Result<Outcome> {
    let census = load_census(path)?;
    let mut problems: Vec<String> = census.errors.iter().map(|e| e.to_string()).collect();
    if oracle {
        for e in &census.entries {
            let (Some(d), Some(det)) = (&e.pd, &e.det) else { continue };
            if d.crossing_count() > DEFAULT_BRACKET_CAP {
                continue;
            }
            let o = determinant_oracle_capped(d, DEFAULT_BRACKET_CAP)?;
            if &o != det {
                problems.push(format!("{}: bracket gives det {o}, census has {det}", e.name));
            }
        }
    }
    let report = verify_conjecture(&census.entries)?;
    let mut text = match format {
        Format::Json => to_json(&report),
        Format::Csv => report.to_csv(),
        Format::Text => report.to_text(),
    };
    if !problems.is_empty() && format == Format::Text {
        for p in &problems {
            let _ = writeln!(text, "error: {p}");
        }
    }
    let failed = !problems.is_empty() || (strict && report.violation_count() > 0);
    // problems always reach stderr in machine formats
    if format != Format::Text {
        for p in &problems {
            eprintln!("error: {p}");
        }
    }
    Ok(Outcome { text, failed })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(out) => {
            let text = out.text.trim_end_matches('\n');
            // a closed pipe (e.g. `| head`) is not an error
            let _ = writeln!(std::io::stdout().lock(), "{text}");
            ExitCode::from(u8::from(out.failed))
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
