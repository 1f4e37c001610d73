mod input;
mod render;

use clap::{Args, Parser, Subcommand, ValueEnum};
use dsi_bounds::graph::{to_edge_list, to_graph6, Family};
use dsi_bounds::harness::{
    corpus_scan_collect, reproduce_examples, verify_domination_chain, verify_independence_chain,
    ChainOptions, ScanConfig,
};
use dsi_bounds::oracle::{
    alpha_j, chi_j, f_stats, gamma_j, OracleConfig, SetKind, MAX_CORPUS_ORDER,
};
use input::Source;
use render::{render, Format, REPORT_COLUMNS};
use serde_json::{json, Value};
use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

/// Degree-sequence index bounds on j-independence and j-domination numbers.
#[derive(Parser)]
#[command(name = "dsi", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute every bound for each input graph and check the inequality chains.
    Bounds(BoundsArgs),
    /// Exact invariant values with witnesses.
    Oracle(OracleArgs),
    /// Print a named family member as graph6.
    Generate(GenerateArgs),
    /// Check the chains on every labeled graph of one order.
    Corpus(CorpusArgs),
    /// Recompute the catalog of named constructions.
    Examples(ExamplesArgs),
}

#[derive(Args)]
struct InputArgs {
    /// Named family, `name:p1:p2...`.
    #[arg(long = "gen", value_name = "FAMILY", conflicts_with = "input")]
    generator: Option<Family>,
    /// Graph6 lines or an edge list with an `n m` header; `-` or absent reads stdin.
    #[arg(long, value_name = "PATH")]
    input: Option<PathBuf>,
    /// Treat input graphs as planar when checking the planar bound.
    #[arg(long)]
    planar: bool,
}

#[derive(Args)]
struct GuardArgs {
    #[arg(long, value_name = "N")]
    optimum_guard: Option<usize>,
    #[arg(long, value_name = "N")]
    family_guard: Option<usize>,
    #[arg(long, value_name = "N")]
    chromatic_guard: Option<usize>,
}

impl GuardArgs {
    fn config(&self) -> OracleConfig {
        let base = OracleConfig::default();
        OracleConfig {
            optimum_guard: self.optimum_guard.unwrap_or(base.optimum_guard),
            family_guard: self.family_guard.unwrap_or(base.family_guard),
            chromatic_guard: self.chromatic_guard.unwrap_or(base.chromatic_guard),
        }
    }
}

#[derive(Args)]
struct BoundsArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_delimiter = ',', default_value = "1",
          value_parser = clap::value_parser!(u32).range(1..))]
    j: Vec<u32>,
    /// Also check the K_{1,p}-free chain.
    #[arg(long, value_parser = clap::value_parser!(u32).range(3..))]
    p: Option<u32>,
    /// Also check the domination chain.
    #[arg(long)]
    domination: bool,
    #[arg(long, value_enum, default_value = "human")]
    format: Format,
    #[command(flatten)]
    guards: GuardArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleKind {
    Alpha,
    Gamma,
    Chi,
    /// Extremal edge differences over the optimal family.
    Stats,
}

#[derive(Args)]
struct OracleArgs {
    #[arg(value_enum)]
    kind: OracleKind,
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_delimiter = ',', default_value = "1",
          value_parser = clap::value_parser!(u32).range(1..))]
    j: Vec<u32>,
    /// For `stats`: domination instead of independence.
    #[arg(long)]
    domination: bool,
    #[arg(long, value_enum, default_value = "human")]
    format: Format,
    #[command(flatten)]
    guards: GuardArgs,
}

#[derive(Args)]
struct GenerateArgs {
    family: Family,
    /// Edge list instead of graph6.
    #[arg(long)]
    edge_list: bool,
}

#[derive(Args)]
struct CorpusArgs {
    /// Graph order, 1 to 7.
    #[arg(long)]
    n: usize,
    #[arg(long, value_delimiter = ',', default_value = "1",
          value_parser = clap::value_parser!(u32).range(1..))]
    j: Vec<u32>,
    #[arg(long)]
    domination: bool,
    #[arg(long, value_parser = clap::value_parser!(u32).range(3..))]
    claw_p: Option<u32>,
    /// Violations listed in the summary.
    #[arg(long, default_value_t = 20)]
    show: usize,
    #[arg(long, value_enum, default_value = "human")]
    format: Format,
    #[command(flatten)]
    guards: GuardArgs,
}

#[derive(Args)]
struct ExamplesArgs {
    #[arg(long, value_enum, default_value = "human")]
    format: Format,
}

/// Output text plus whether every requested check passed.
type Outcome = Result<(String, bool), String>;

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn bounds(args: &BoundsArgs, stdin: &mut dyn Read) -> Outcome {
    let cfg = args.guards.config();
    let mut records = Vec::new();
    let mut ok = true;
    for loaded in Source::new(args.input.generator, args.input.input.clone())
        .load(args.input.planar, stdin)?
    {
        let opts = ChainOptions {
            oracle: cfg,
            claw_p: args.p.map(|p| p as usize),
            planar: loaded.planar,
        };
        for &j in &args.j {
            let r = verify_independence_chain(&loaded.graph, j as usize, &opts)
                .map_err(|e| e.to_string())?;
            ok &= r.passed();
            records.push(to_value(&r));
            if args.domination {
                let r = verify_domination_chain(&loaded.graph, j as usize, &cfg)
                    .map_err(|e| e.to_string())?;
                ok &= r.passed();
                records.push(to_value(&r));
            }
        }
    }
    Ok((render(&records, args.format, Some(REPORT_COLUMNS)), ok))
}

fn oracle(args: &OracleArgs, stdin: &mut dyn Read) -> Outcome {
    let cfg = args.guards.config();
    let mut records = Vec::new();
    let kind = if args.domination {
        SetKind::Domination
    } else {
        SetKind::Independence
    };
    for loaded in Source::new(args.input.generator, args.input.input.clone()).load(false, stdin)? {
        let g = &loaded.graph;
        let graph6 = to_graph6(g);
        for &j in &args.j {
            let j = j as usize;
            let record = match args.kind {
                OracleKind::Alpha | OracleKind::Gamma => {
                    let (name, res) = match args.kind {
                        OracleKind::Alpha => ("alpha_j", alpha_j(g, j, &cfg)),
                        _ => ("gamma_j", gamma_j(g, j, &cfg)),
                    };
                    let res = res.map_err(|e| e.to_string())?;
                    let witness: Vec<usize> = res.witness.iter().collect();
                    json!({"graph6": graph6, "j": j, "invariant": name, "value": res.value, "witness": witness})
                }
                OracleKind::Chi => {
                    let chi = chi_j(g, j, &cfg).map_err(|e| e.to_string())?;
                    json!({"graph6": graph6, "j": j, "invariant": "chi_j", "value": chi})
                }
                OracleKind::Stats => {
                    let stats = f_stats(g, j, kind, &cfg).map_err(|e| e.to_string())?;
                    let mut v = json!({"graph6": graph6});
                    if let (Value::Object(dst), Value::Object(src)) = (&mut v, to_value(&stats)) {
                        dst.extend(src);
                    }
                    v
                }
            };
            records.push(record);
        }
    }
    Ok((render(&records, args.format, None), true))
}

fn generate(args: &GenerateArgs) -> Outcome {
    let g = args.family.build().map_err(|e| e.to_string())?;
    let text = if args.edge_list {
        to_edge_list(&g)
    } else {
        format!("{}\n", to_graph6(&g))
    };
    Ok((text, true))
}

fn corpus(args: &CorpusArgs) -> Outcome {
    if args.n == 0 || args.n > MAX_CORPUS_ORDER {
        return Err(format!("--n must be between 1 and {MAX_CORPUS_ORDER}"));
    }
    let cfg = ScanConfig {
        order: args.n,
        js: args.j.iter().map(|&j| j as usize).collect(),
        domination: args.domination,
        claw_p: args.claw_p.map(|p| p as usize),
        oracle: args.guards.config(),
    };
    let summary = corpus_scan_collect(&cfg).map_err(|e| e.to_string())?;
    let mut v = to_value(&summary);
    let shown: Vec<_> = summary.violations.iter().take(args.show).collect();
    if let Value::Object(map) = &mut v {
        map.insert("violations".into(), to_value(&shown));
    }
    let text = match args.format {
        // one summary row; violations do not fit a flat table
        Format::Tsv => {
            if let Value::Object(map) = &mut v {
                map.remove("violations");
            }
            render(&[v], Format::Tsv, None)
        }
        f => render(&[v], f, None),
    };
    Ok((text, summary.failures == 0))
}

fn examples(args: &ExamplesArgs) -> Outcome {
    let results = reproduce_examples().map_err(|e| e.to_string())?;
    let ok = results.iter().all(|r| r.pass);
    let text = match args.format {
        Format::Human => {
            let mut s = String::new();
            for r in &results {
                s.push_str(&format!(
                    "{} {} {}: expected {} ({}), got {}\n",
                    if r.pass { "PASS" } else { "FAIL" },
                    r.name,
                    r.quantity,
                    r.expected,
                    to_value(&r.provenance).as_str().unwrap_or_default(),
                    r.actual,
                ));
            }
            let passed = results.iter().filter(|r| r.pass).count();
            s.push_str(&format!("{passed}/{} passed\n", results.len()));
            s
        }
        f => render(&results.iter().map(to_value).collect::<Vec<_>>(), f, None),
    };
    Ok((text, ok))
}

/// What one invocation wrote and how it exited.
pub struct RunOutput {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

/// Runs one invocation; `argv` includes the program name.
pub fn run<I, T>(argv: I, stdin: &mut dyn Read) -> RunOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code() as u8;
            let (stdout, stderr) = if e.use_stderr() {
                (String::new(), text)
            } else {
                (text, String::new())
            };
            return RunOutput {
                stdout,
                stderr,
                code,
            };
        }
    };
    let outcome = match &cli.command {
        Command::Bounds(a) => bounds(a, stdin),
        Command::Oracle(a) => oracle(a, stdin),
        Command::Generate(a) => generate(a),
        Command::Corpus(a) => corpus(a),
        Command::Examples(a) => examples(a),
    };
    match outcome {
        Ok((stdout, ok)) => RunOutput {
            stdout,
            stderr: String::new(),
            code: if ok { 0 } else { 1 },
        },
        Err(message) => RunOutput {
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
            code: 2,
        },
    }
}

fn main() -> ExitCode {
    let out = run(std::env::args_os(), &mut std::io::stdin());
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.code)
}

#[cfg(test)]
mod tests;
