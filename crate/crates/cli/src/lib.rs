//! Command-line frontend: builds and exports orders, runs soliton
//! simulations and rewriting derivations, and executes verification suites.

pub mod export;
mod verify;

use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num::BigRational;
use tamari_forge::bruhat::{enumerate_bruhat_with, q_poset, Strategy as Enumeration};
use tamari_forge::rewrite::{self, RuleSet, Word};
use tamari_forge::tamari::{r_poset, reduce};
use tamari_forge::tropic::{self, SolitonParams};
use tamari_forge::{ConsistentSet, IndexSet};

use export::{export, rational, Exportable, Format, UnsupportedFormat};

/// Bad command-line input, reported with exit code 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn usage<T>(msg: impl Into<String>) -> Result<T> {
    Err(UsageError(msg.into()).into())
}

#[derive(Parser, Debug)]
#[command(
    name = "tamari-forge",
    version,
    about = "Higher Bruhat and Tamari orders, tropical line solitons and rewriting"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Output {
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write the result here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
struct Size {
    #[arg(long = "N", value_name = "N")]
    big_n: usize,
    #[arg(long = "n", value_name = "n")]
    n: usize,
    /// Maximum number of vertices (or chains) to enumerate.
    #[arg(long, default_value_t = tamari_forge::bruhat::DEFAULT_BUDGET)]
    budget: usize,
}

#[derive(Args, Debug, Clone)]
struct Soliton {
    #[arg(long = "M", value_name = "M")]
    m: Option<usize>,
    /// Comma-separated exact rationals p_1 < ... < p_{M+1}.
    #[arg(long, allow_hyphen_values = true)]
    p: String,
    /// Comma-separated exact rationals c_1, ..., c_{M+1}.
    #[arg(long, allow_hyphen_values = true)]
    c: String,
    /// Comma-separated t^(4), ..., t^(M).
    #[arg(long, allow_hyphen_values = true, default_value = "")]
    higher: String,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Rules {
    Bruhat,
    Tamari,
}

impl From<Rules> for RuleSet {
    fn from(r: Rules) -> Self {
        match r {
            Rules::Bruhat => RuleSet::Bruhat,
            Rules::Tamari => RuleSet::Tamari,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Order {
    Leftmost,
    Rightmost,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// The higher Bruhat order B(N,n).
    Bruhat {
        #[command(flatten)]
        size: Size,
        #[command(flatten)]
        output: Output,
    },
    /// The higher Tamari order T(N,n).
    Tamari {
        #[command(flatten)]
        size: Size,
        #[command(flatten)]
        output: Output,
    },
    /// The poset Q(U) of a consistent set.
    Qposet {
        #[command(flatten)]
        size: Size,
        /// Members of U, e.g. `123,124`; use `;` as separator when N >= 10.
        #[arg(long, default_value = "")]
        set: String,
        #[command(flatten)]
        output: Output,
    },
    /// The poset R(U) of a consistent set.
    Rposet {
        #[command(flatten)]
        size: Size,
        #[arg(long, default_value = "")]
        set: String,
        #[command(flatten)]
        output: Output,
    },
    /// Tropical line solitons.
    #[command(subcommand)]
    Soliton(SolitonCommand),
    /// Rewriting in the Bruhat and Tamari monoids.
    #[command(subcommand)]
    Rewrite(RewriteCommand),
    /// Run a verification suite: bruhat, tamari, rewrite, soliton or all.
    Verify {
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Subcommand, Debug)]
enum SolitonCommand {
    /// The visible soliton graph in the xy-plane at time t.
    Graph {
        #[command(flatten)]
        params: Soliton,
        #[arg(long, allow_hyphen_values = true)]
        t: String,
        #[command(flatten)]
        output: Output,
    },
    /// The rooted binary tree type at time t.
    Tree {
        #[command(flatten)]
        params: Soliton,
        #[arg(long, allow_hyphen_values = true)]
        t: String,
        #[command(flatten)]
        output: Output,
    },
    /// Critical times and the resulting maximal chain.
    Evolve {
        #[command(flatten)]
        params: Soliton,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Args, Debug, Clone)]
struct RewriteArgs {
    #[command(flatten)]
    size: Size,
    #[arg(long, value_enum, default_value = "bruhat")]
    rules: Rules,
}

#[derive(Subcommand, Debug)]
enum RewriteCommand {
    /// Rewrite a word of low generators to normal form.
    Normalize {
        #[command(flatten)]
        args: RewriteArgs,
        /// Low generators, e.g. `12,13,23`; defaults to the canonical word.
        #[arg(long)]
        word: Option<String>,
        #[arg(long, value_enum, default_value = "leftmost")]
        strategy: Order,
        #[command(flatten)]
        output: Output,
    },
    /// Every high sequence reachable from the canonical word.
    Chains {
        #[command(flatten)]
        args: RewriteArgs,
        #[command(flatten)]
        output: Output,
    },
    /// Exhaustive consistency check of the canonical word.
    Consistency {
        #[command(flatten)]
        args: RewriteArgs,
        #[command(flatten)]
        output: Output,
    },
}

/// Parses `a/b` or an integer exactly.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let t = text.trim();
    let ok = !t.is_empty()
        && t.split('/').count() <= 2
        && t.split('/').all(|part| {
            let digits = part.strip_prefix('-').unwrap_or(part);
            !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
        });
    if !ok {
        return usage(format!("malformed rational {text:?}"));
    }
    match BigRational::from_str(t) {
        Ok(q) => Ok(q),
        Err(_) => usage(format!("malformed rational {text:?}")),
    }
}

fn parse_rationals(text: &str) -> Result<Vec<BigRational>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',').map(parse_rational).collect()
}

fn parse_sets(universe: usize, text: &str) -> Result<Vec<IndexSet>> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    let sep = if text.contains(';') { ';' } else { ',' };
    text.split(sep)
        .map(|l| {
            IndexSet::parse(universe, l).map_err(|e| UsageError(format!("bad index set {l:?}: {e}")).into())
        })
        .collect()
}

fn soliton_params(s: &Soliton) -> Result<(SolitonParams, Vec<BigRational>)> {
    let p = parse_rationals(&s.p)?;
    let c = parse_rationals(&s.c)?;
    if let Some(m) = s.m {
        if p.len() != m + 1 {
            return usage(format!("--M {m} needs {} values of p, got {}", m + 1, p.len()));
        }
    }
    let params = SolitonParams::new(p, c)?;
    Ok((params, parse_rationals(&s.higher)?))
}

fn consistent_set(size: &Size, set: &str) -> Result<ConsistentSet> {
    let members = parse_sets(size.big_n, set)?;
    Ok(ConsistentSet::new(size.big_n, size.n, &members)?)
}

fn emit(output: &Output, default: Format, object: Exportable<'_>, out: &mut dyn Write) -> Result<()> {
    let doc = export(object, output.format.unwrap_or(default))?;
    write_text(output, &doc.payload, out)
}

fn write_text(output: &Output, text: &str, out: &mut dyn Write) -> Result<()> {
    match &output.out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => Ok(out.write_all(text.as_bytes())?),
    }
}

fn text_only(output: &Output) -> Result<()> {
    match output.format {
        None => Ok(()),
        Some(f) => usage(format!("--format {f:?} is not supported here")),
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<i32> {
    match cli.command {
        Command::Bruhat { size, output } => {
            let b = enumerate_bruhat_with(size.big_n, size.n, Enumeration::Auto, size.budget)?;
            emit(&output, Format::Json, Exportable::Bruhat(&b), out)?;
        }
        Command::Tamari { size, output } => {
            let b = enumerate_bruhat_with(size.big_n, size.n, Enumeration::Auto, size.budget)?;
            let t = reduce(&b)?.tamari;
            emit(&output, Format::Json, Exportable::Tamari(&t), out)?;
        }
        Command::Qposet { size, set, output } => {
            let p = q_poset(&consistent_set(&size, &set)?)?;
            emit(&output, Format::Json, Exportable::Poset(&p), out)?;
        }
        Command::Rposet { size, set, output } => {
            let p = r_poset(&consistent_set(&size, &set)?)?;
            emit(&output, Format::Json, Exportable::Poset(&p), out)?;
        }
        Command::Soliton(cmd) => soliton(cmd, out)?,
        Command::Rewrite(cmd) => return rewriting(cmd, out),
        Command::Verify { suite, seed, output } => {
            text_only(&output)?;
            let Some(report) = verify::run_suite(&suite, seed)? else {
                return usage(format!(
                    "unknown suite {suite:?}; expected one of {}",
                    verify::SUITES.join(", ")
                ));
            };
            write_text(&output, &report.text, out)?;
            return Ok(if report.failed == 0 { 0 } else { 1 });
        }
    }
    Ok(0)
}

fn soliton(cmd: SolitonCommand, out: &mut dyn Write) -> Result<()> {
    match cmd {
        SolitonCommand::Graph { params, t, output } => {
            let (params, higher) = soliton_params(&params)?;
            let g = tropic::soliton_graph(&params, &parse_rational(&t)?, &higher)?;
            emit(&output, Format::Json, Exportable::Graph(&g), out)
        }
        SolitonCommand::Tree { params, t, output } => {
            let (params, higher) = soliton_params(&params)?;
            let tree = tropic::tree_at_time(&params, &parse_rational(&t)?, &higher)?;
            match output.format {
                None => write_text(&output, &format!("{tree}\n"), out),
                Some(_) => emit(&output, Format::Json, Exportable::Tree(&tree), out),
            }
        }
        SolitonCommand::Evolve { params, output } => {
            let (params, higher) = soliton_params(&params)?;
            let times = tropic::critical_times(&params, &higher)?;
            let trees = tropic::evolution_trees(&params, &higher)?;
            let chain: Vec<String> = times.iter().map(|c| c.index.label()).collect();
            let text = match output.format {
                None => {
                    let mut s = format!("chain {}\n", chain.join(","));
                    for c in &times {
                        s.push_str(&format!("t_{} = {}\n", c.index.label(), c.value));
                    }
                    for (t, tree) in &trees {
                        s.push_str(&format!("at t = {t}: {tree}\n"));
                    }
                    s
                }
                Some(Format::Json) => {
                    let doc = serde_json::json!({
                        "schema": export::SCHEMA,
                        "kind": "evolution",
                        "chain": chain,
                        "times": times.iter().map(|c| serde_json::json!({"label": c.index.label(), "t": rational(&c.value)})).collect::<Vec<_>>(),
                        "trees": trees.iter().map(|(t, tree)| serde_json::json!({"t": rational(t), "tree": tree.to_string()})).collect::<Vec<_>>(),
                    });
                    serde_json::to_string(&doc)?
                }
                Some(f) => bail!(UnsupportedFormat(f)),
            };
            write_text(&output, &text, out)
        }
    }
}

fn show(seq: &[IndexSet]) -> String {
    seq.iter().map(IndexSet::label).collect::<Vec<_>>().join(",")
}

fn rewriting(cmd: RewriteCommand, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        RewriteCommand::Normalize { args, word, strategy, output } => {
            let (u, n, rules) = (args.size.big_n, args.size.n, args.rules.into());
            let w = match word {
                Some(text) => Word::low(u, n, rules, &parse_sets(u, &text)?)?,
                None => Word::canonical(u, n, rules)?,
            };
            let strategy = match strategy {
                Order::Leftmost => rewrite::Strategy::Leftmost,
                Order::Rightmost => rewrite::Strategy::Rightmost,
            };
            let trace = rewrite::normalize_with(&w, strategy)?;
            let text = match output.format {
                None => format!(
                    "initial {}\nemitted {}\nfinal {}\nsteps {}\n",
                    trace.initial,
                    show(&trace.emitted()),
                    trace.final_word,
                    trace.steps.len()
                ),
                Some(Format::Json) => serde_json::to_string(&serde_json::json!({
                    "schema": export::SCHEMA,
                    "kind": "rewrite-trace",
                    "initial": trace.initial.to_string(),
                    "emitted": trace.emitted().iter().map(IndexSet::label).collect::<Vec<_>>(),
                    "final": trace.final_word.to_string(),
                    "steps": trace.steps.len(),
                }))?,
                Some(f) => bail!(UnsupportedFormat(f)),
            };
            write_text(&output, &text, out)?;
            Ok(0)
        }
        RewriteCommand::Chains { args, output } => {
            text_only(&output)?;
            let chains =
                rewrite::derive_chains(args.size.big_n, args.size.n, args.rules.into(), args.size.budget)?;
            let text: String = chains.iter().map(|c| format!("{}\n", show(c))).collect();
            write_text(&output, &text, out)?;
            Ok(0)
        }
        RewriteCommand::Consistency { args, output } => {
            text_only(&output)?;
            let r = rewrite::check_simplex_consistency(
                args.size.big_n,
                args.size.n,
                args.rules.into(),
                args.size.budget,
            )?;
            let mut text = format!(
                "high sequences {}\nfinal words {}\nleftmost {}\nrightmost {}\nconnected {}\n",
                r.chains,
                r.final_words.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(" | "),
                show(&r.extremal.0),
                show(&r.extremal.1),
                r.connected
            );
            match &r.counterexample {
                None => text.push_str("consistent\n"),
                Some(why) => text.push_str(&format!("inconsistent: {why}\n")),
            }
            write_text(&output, &text, out)?;
            Ok(if r.is_consistent() { 0 } else { 1 })
        }
    }
}

fn exit_code(e: &anyhow::Error) -> i32 {
    if e.downcast_ref::<UsageError>().is_some() || e.downcast_ref::<UnsupportedFormat>().is_some() {
        2
    } else {
        1
    }
}

/// Runs one invocation, writing results to `out` and diagnostics to `err`.
/// Returns 0 on success, 1 on a domain error and 2 on a usage error.
pub fn run_with<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            exit_code(&e)
        }
    }
}

pub fn run<I, S>(argv: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    run_with(argv, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}
