use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use degseq::characterize::{characterize, has_characterization, Verdict};
use degseq::extremal::{empirical_sigma, verify_characterization, MismatchReport, SigmaResult, REPORT_VERSION};
use degseq::oracle::{find_witness, potentially_oracle, SearchBudget, DEFAULT_MAX_NODES};
use degseq::patterns::check_pattern_identities;
use degseq::sequence::{erdos_gallai_violation, havel_hakimi_realize};
use degseq::{parse_sequence, DegreeSequence, Error, ExceptionMatch, FamilyMatch, PatternId};

const EXIT_YES: u8 = 0;
const EXIT_NO: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_DISAGREE: u8 = 3;
const EXIT_BUDGET: u8 = 4;

/// Graphic and potentially K5-H-graphic degree sequences.
///
/// Exit codes: 0 yes/verified, 1 no, 2 input error, 3 theorem/oracle
/// disagreement, 4 search budget exhausted.
#[derive(Parser, Debug)]
#[command(name = "degseq", version)]
struct Cli {
    /// Emit a JSON document instead of text.
    #[arg(long, global = true, conflicts_with = "text")]
    json: bool,
    /// Emit plain text (the default).
    #[arg(long, global = true)]
    text: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
struct BudgetArgs {
    /// Maximum backtracking nodes per oracle search.
    #[arg(long, default_value_t = DEFAULT_MAX_NODES)]
    budget_nodes: u64,
}

impl BudgetArgs {
    fn budget(self) -> SearchBudget {
        SearchBudget::nodes(self.budget_nodes)
    }
}

#[derive(Args, Debug, Clone, Copy)]
struct WorkerArgs {
    /// Worker threads; never changes the output.
    #[arg(long, env = "DEGSEQ_WORKERS")]
    workers: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether a sequence is potentially pattern-graphic.
    Check {
        #[arg(long)]
        pattern: PatternId,
        #[arg(long)]
        seq: String,
        /// Also run the realization search and compare.
        #[arg(long)]
        oracle: bool,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Print a Havel–Hakimi realization as an edge list.
    Realize {
        #[arg(long)]
        seq: String,
    },
    /// Search for a realization containing the pattern.
    Witness {
        #[arg(long)]
        pattern: PatternId,
        #[arg(long)]
        seq: String,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Compare the closed-form decision with the oracle over a range of n.
    Verify {
        #[arg(long)]
        pattern: PatternId,
        #[arg(long)]
        n_lo: usize,
        #[arg(long)]
        n_hi: usize,
        #[command(flatten)]
        workers: WorkerArgs,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Empirical degree-sum threshold against the closed form.
    Sigma {
        #[arg(long)]
        pattern: PatternId,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        workers: WorkerArgs,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// List the known patterns and their edge lists.
    Patterns,
}

#[derive(Debug, Serialize, Deserialize)]
struct CheckReport {
    version: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    theorem: Option<Verdict>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    oracle: Option<Verdict>,
}

#[derive(Debug, Serialize, Deserialize)]
struct GraphReport {
    version: String,
    sequence: DegreeSequence,
    n: usize,
    edges: Vec<String>,
}

#[derive(Debug, Serialize, Deserialize)]
struct WitnessReport {
    version: String,
    pattern: PatternId,
    sequence: DegreeSequence,
    found: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    edges: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    embedding: Option<Vec<usize>>,
}

#[derive(Debug, Serialize, Deserialize)]
struct PatternEntry {
    pattern: PatternId,
    n: usize,
    edges: Vec<String>,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BudgetExhausted { .. } => EXIT_BUDGET,
            _ => EXIT_INPUT,
        };
        Failure { code, message: e.to_string() }
    }
}

struct Output {
    json: bool,
    buf: String,
}

impl Output {
    fn line(&mut self, text: impl AsRef<str>) {
        self.buf.push_str(text.as_ref());
        self.buf.push('\n');
    }

    fn json<T: Serialize>(&mut self, value: &T) {
        let rendered = serde_json::to_string_pretty(value).expect("serializable report");
        self.line(rendered);
    }
}

fn edge_strings(g: &degseq::SmallGraph) -> Vec<String> {
    g.edges().into_iter().map(|(u, v)| format!("{u}-{v}")).collect()
}

fn describe_exception(e: &ExceptionMatch) -> String {
    match e {
        ExceptionMatch::Listed(l) => format!("listed ({})", l.sequence),
        ExceptionMatch::Family(FamilyMatch::A3 { n, k }) => format!("a3 family (n={n}, k={k})"),
        ExceptionMatch::Family(FamilyMatch::S1 { n, i, j, k }) => {
            let branch = if (n - i - j) % 2 == 0 { "even" } else { "odd" };
            format!("s1 family (n={n}, i={i}, j={j}, k={k}, {branch} branch)")
        }
        ExceptionMatch::Family(FamilyMatch::Hub { n, k }) => format!("hub family (n={n}, threes={k})"),
    }
}

fn decision_word(decision: bool) -> &'static str {
    if decision {
        "potentially"
    } else {
        "not potentially"
    }
}

fn render_verdict(out: &mut Output, v: &Verdict) {
    let source = match v.source {
        degseq::characterize::Source::Theorem => "characterization",
        degseq::characterize::Source::Oracle => "oracle",
    };
    out.line(format!("{source}: {}", decision_word(v.decision)));
    if v.failed_conditions.is_empty() {
        if v.source == degseq::characterize::Source::Theorem {
            out.line("  failed conditions: none");
        }
    } else {
        out.line(format!("  failed conditions: {}", v.failed_conditions.join(", ")));
    }
    if let Some(e) = &v.exception {
        out.line(format!("  exception: {}", describe_exception(e)));
    }
}

fn cmd_check(out: &mut Output, pattern: PatternId, text: &str, oracle: bool, budget: SearchBudget) -> Result<u8, Failure> {
    let seq = parse_sequence(text)?;
    if !oracle && !has_characterization(pattern) {
        return Err(Error::NoCharacterization(pattern).into());
    }
    let theorem = if has_characterization(pattern) {
        Some(characterize(pattern, &seq)?)
    } else {
        None
    };
    let oracle = if oracle {
        Some(Verdict::from_oracle(pattern, &seq, potentially_oracle(&seq, pattern, budget)?))
    } else {
        None
    };
    let disagree = matches!((&theorem, &oracle), (Some(t), Some(o)) if t.decision != o.decision);
    let decision = theorem.as_ref().or(oracle.as_ref()).map(|v| v.decision).unwrap_or(false);
    if out.json {
        out.json(&CheckReport { version: REPORT_VERSION.into(), theorem, oracle });
    } else {
        out.line(format!("pattern: {pattern}"));
        out.line(format!("sequence: {seq}"));
        for v in theorem.iter().chain(oracle.iter()) {
            render_verdict(out, v);
        }
        if disagree {
            out.line("DISAGREEMENT between characterization and oracle");
        }
    }
    Ok(if disagree {
        EXIT_DISAGREE
    } else if decision {
        EXIT_YES
    } else {
        EXIT_NO
    })
}

fn cmd_realize(out: &mut Output, text: &str) -> Result<u8, Failure> {
    let seq = parse_sequence(text)?;
    if let Some(violation) = erdos_gallai_violation(seq.terms()) {
        return Err(Failure { code: EXIT_INPUT, message: format!("sequence {seq} is not graphic: {violation}") });
    }
    let graph = havel_hakimi_realize(&seq)?;
    if out.json {
        out.json(&GraphReport { version: REPORT_VERSION.into(), n: seq.len(), sequence: seq, edges: edge_strings(&graph) });
    } else {
        out.buf.push_str(&graph.to_edge_list());
    }
    Ok(EXIT_YES)
}

fn cmd_witness(out: &mut Output, pattern: PatternId, text: &str, budget: SearchBudget) -> Result<u8, Failure> {
    let seq = parse_sequence(text)?;
    let witness = find_witness(&seq, pattern, budget)?;
    if out.json {
        out.json(&WitnessReport {
            version: REPORT_VERSION.into(),
            pattern,
            sequence: seq,
            found: witness.is_some(),
            edges: witness.as_ref().map(|w| edge_strings(&w.graph)),
            embedding: witness.as_ref().map(|w| w.embedding.clone()),
        });
    } else {
        match &witness {
            Some(w) => {
                out.buf.push_str(&w.graph.to_edge_list());
                let map: Vec<String> = w.embedding.iter().enumerate().map(|(x, v)| format!("{x}->{v}")).collect();
                out.line(format!("embedding: {}", map.join(" ")));
            }
            None => out.line("no witness"),
        }
    }
    Ok(if witness.is_some() { EXIT_YES } else { EXIT_NO })
}

fn render_mismatch_report(out: &mut Output, r: &MismatchReport) {
    out.line(format!("pattern: {}", r.pattern));
    out.line(format!("range: {}..={}", r.n_lo, r.n_hi));
    out.line(format!("sequences checked: {}", r.sequences_checked));
    out.line(format!("mismatches: {}", r.mismatches.len()));
    for m in &r.mismatches {
        out.line(format!(
            "  {}  characterization={} oracle={}",
            m.sequence,
            decision_word(m.theorem),
            decision_word(m.oracle)
        ));
    }
    out.line(format!("budget failures: {}", r.budget_failures.len()));
    for s in &r.budget_failures {
        out.line(format!("  {s}"));
    }
}

fn cmd_verify(out: &mut Output, pattern: PatternId, lo: usize, hi: usize, workers: Option<usize>, budget: SearchBudget) -> Result<u8, Failure> {
    let report = verify_characterization(pattern, lo, hi, budget, workers)?;
    if out.json {
        out.json(&report);
    } else {
        render_mismatch_report(out, &report);
    }
    Ok(if !report.mismatches.is_empty() {
        EXIT_DISAGREE
    } else if !report.budget_failures.is_empty() {
        EXIT_BUDGET
    } else {
        EXIT_YES
    })
}

fn render_sigma(out: &mut Output, r: &SigmaResult) {
    let formula = r.formula.map(|f| f.to_string()).unwrap_or_else(|| "-".into());
    out.line(format!("{:<8} {:>3} {:>9} {:>7} {:>5} {:>8}", "pattern", "n", "empirical", "formula", "match", "checked"));
    out.line(format!(
        "{:<8} {:>3} {:>9} {:>7} {:>5} {:>8}",
        r.pattern.token(),
        r.n,
        r.empirical,
        formula,
        if r.matches { "yes" } else { "no" },
        r.checked
    ));
    out.line(format!("failing sequences at sum {}: {}", r.empirical.saturating_sub(2), r.witness_count));
    for w in &r.witnesses {
        out.line(format!("  {w}"));
    }
}

fn cmd_sigma(out: &mut Output, pattern: PatternId, n: usize, workers: Option<usize>, budget: SearchBudget) -> Result<u8, Failure> {
    let result = empirical_sigma(pattern, n, budget, workers)?;
    if out.json {
        out.json(&result);
    } else {
        render_sigma(out, &result);
    }
    Ok(if result.formula.is_some() && !result.matches { EXIT_DISAGREE } else { EXIT_YES })
}

fn cmd_patterns(out: &mut Output) -> Result<u8, Failure> {
    let entries: Vec<PatternEntry> = PatternId::ALL
        .iter()
        .map(|&p| {
            let g = p.graph();
            PatternEntry { pattern: p, n: g.order(), edges: edge_strings(&g) }
        })
        .collect();
    if out.json {
        out.json(&entries);
    } else {
        for e in entries {
            out.line(format!("{:<7} n={} edges={}", e.pattern.token(), e.n, e.edges.join(" ")));
        }
    }
    Ok(EXIT_YES)
}

fn run(cli: Cli, out: &mut Output) -> Result<u8, Failure> {
    check_pattern_identities().map_err(|message| Failure { code: EXIT_DISAGREE, message })?;
    match cli.command {
        Command::Check { pattern, seq, oracle, budget } => cmd_check(out, pattern, &seq, oracle, budget.budget()),
        Command::Realize { seq } => cmd_realize(out, &seq),
        Command::Witness { pattern, seq, budget } => cmd_witness(out, pattern, &seq, budget.budget()),
        Command::Verify { pattern, n_lo, n_hi, workers, budget } => {
            cmd_verify(out, pattern, n_lo, n_hi, workers.workers, budget.budget())
        }
        Command::Sigma { pattern, n, workers, budget } => cmd_sigma(out, pattern, n, workers.workers, budget.budget()),
        Command::Patterns => cmd_patterns(out),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_INPUT } else { EXIT_YES });
        }
    };
    let mut out = Output { json: cli.json, buf: String::new() };
    let code = match run(cli, &mut out) {
        Ok(code) => code,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            if failure.code == EXIT_BUDGET {
                out.line("budget exhausted");
            }
            failure.code
        }
    };
    let _ = std::io::stdout().write_all(out.buf.as_bytes());
    ExitCode::from(code)
}
