//! `gauss`: check realizability of Gauss diagrams, solve the underlying
//! GF(2) systems, reproduce the per-size class counts, and render diagrams
//! and graphs as DOT or TikZ.
//!
//! Exit codes: 0 the selected criterion holds (realizable for exact
//! criteria), 1 it does not, 2 bad input, 3 internal disagreement between
//! exact criteria (a bug, never a valid outcome).

use clap::{Parser, Subcommand, ValueEnum};
use gauss_core::codec::GaussCode;
use gauss_core::criteria::{self, CheckAll, Criterion, CriterionReport, EquationOrigin, Witness};
use gauss_core::gf2;
use gauss_core::interlace::InterlacementGraph;
use gauss_core::render;
use gauss_core::tablegen::{self, TableOptions};
use serde::Serialize;
use std::io::BufRead;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "gauss", version, about = "Realizability of Gauss diagrams")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check realizability criteria for a Gauss code
    Check {
        /// The code, e.g. "12334124" or "0 7 8 4 3 5 6 8 7 2 1 6 5 0 4 3 2 1"
        code: Option<String>,
        /// Which criterion to evaluate
        #[arg(long, value_enum, default_value_t = CriterionArg::All)]
        criterion: CriterionArg,
        /// Print witnesses (solution vectors, odd cycles, equations, ...)
        #[arg(long)]
        witness: bool,
        /// Emit one JSON object instead of text
        #[arg(long)]
        json: bool,
        /// Batch mode: read one code per line from stdin, emit one JSON
        /// verdict per line
        #[arg(long)]
        stdin: bool,
    },
    /// Print the GF(2) realizability system of a code and its solution space
    Solve {
        code: String,
        #[arg(long)]
        json: bool,
    },
    /// Count equivalence classes per size, as in the published table
    Table {
        #[arg(long)]
        from: usize,
        #[arg(long)]
        to: usize,
        /// Collect the diagrams satisfying the parity conditions but
        /// failing the exact criterion
        #[arg(long)]
        gap: bool,
        /// Worker threads (default: available parallelism). The GAUSS_JOBS
        /// environment variable overrides this flag.
        #[arg(long)]
        jobs: Option<usize>,
        /// Permit the long-running sizes 11 and 12
        #[arg(long)]
        allow_long: bool,
        #[arg(long)]
        json: bool,
    },
    /// Emit a drawable description of a diagram or one of its graphs
    Render {
        code: String,
        #[arg(long, value_enum)]
        what: RenderWhat,
        #[arg(long, value_enum, default_value_t = RenderFormat::Dot)]
        format: RenderFormat,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CriterionArg {
    All,
    Evenness,
    Gl123,
    Stz,
    Dehn,
    Touch,
    Bipartite,
    Cycle,
}

#[derive(Clone, Copy, ValueEnum)]
enum RenderWhat {
    Diagram,
    Graph,
    Weighted,
    Modified,
    Dehn,
}

#[derive(Clone, Copy, ValueEnum)]
enum RenderFormat {
    Dot,
    Tikz,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Check {
            code,
            criterion,
            witness,
            json,
            stdin,
        } => cmd_check(code, criterion, witness, json, stdin),
        Command::Solve { code, json } => cmd_solve(&code, json),
        Command::Table {
            from,
            to,
            gap,
            jobs,
            allow_long,
            json,
        } => cmd_table(from, to, gap, jobs, allow_long, json),
        Command::Render { code, what, format } => cmd_render(&code, what, format),
    };
    ExitCode::from(code)
}

fn input_error(msg: impl std::fmt::Display) -> u8 {
    eprintln!("error: {msg}");
    2
}

// ---------------------------------------------------------------- check --

#[derive(Serialize)]
struct CheckEnvelope {
    code: GaussCode,
    n: usize,
    criterion: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    realizable: Option<bool>,
    reports: Vec<CriterionReport>,
}

#[derive(Serialize)]
struct BatchError {
    input: String,
    error: String,
}

fn criterion_arg_name(c: CriterionArg) -> &'static str {
    match c {
        CriterionArg::All => "all",
        CriterionArg::Evenness => "evenness",
        CriterionArg::Gl123 => "gl123",
        CriterionArg::Stz => "stz",
        CriterionArg::Dehn => "dehn",
        CriterionArg::Touch => "touch",
        CriterionArg::Bipartite => "bipartite",
        CriterionArg::Cycle => "cycle",
    }
}

/// Runs the selected criterion. `Err` means the exact criteria disagreed.
fn evaluate(code: &GaussCode, criterion: CriterionArg) -> Result<CheckEnvelope, CheckAll> {
    let single = |report: CriterionReport, exact: bool| CheckEnvelope {
        code: code.clone(),
        n: code.chord_count(),
        criterion: criterion_arg_name(criterion),
        realizable: exact.then_some(report.verdict),
        reports: vec![report],
    };
    let g = || InterlacementGraph::from_code(code);
    Ok(match criterion {
        CriterionArg::All => match criteria::check_all(code) {
            Ok(all) => CheckEnvelope {
                code: code.clone(),
                n: code.chord_count(),
                criterion: "all",
                realizable: Some(all.realizable),
                reports: all.reports,
            },
            Err(disagree) => {
                return Err(CheckAll {
                    reports: disagree.reports,
                    realizable: false,
                })
            }
        },
        CriterionArg::Evenness => single(criteria::check_evenness(&g()), false),
        CriterionArg::Gl123 => single(criteria::check_gl123(&g()), false),
        CriterionArg::Stz => single(criteria::check_stz_linear(&g()), true),
        CriterionArg::Dehn => single(criteria::check_dehn(code), true),
        CriterionArg::Touch => single(criteria::check_touch(code), false),
        CriterionArg::Bipartite => single(criteria::check_main_theorem(code), true),
        CriterionArg::Cycle => single(criteria::check_cycle_weight(&g().weighted()), true),
    })
}

fn cmd_check(
    code: Option<String>,
    criterion: CriterionArg,
    witness: bool,
    json: bool,
    stdin: bool,
) -> u8 {
    if stdin {
        return check_batch(criterion);
    }
    let Some(text) = code else {
        return input_error("provide a code or use --stdin");
    };
    let parsed = match GaussCode::parse(&text) {
        Ok(c) => c,
        Err(e) => return input_error(e),
    };
    match evaluate(&parsed, criterion) {
        Ok(envelope) => {
            if json {
                println!("{}", serde_json::to_string(&envelope).unwrap());
            } else {
                print_reports(&parsed, &envelope, witness);
            }
            let pass = envelope
                .realizable
                .unwrap_or_else(|| envelope.reports.iter().all(|r| r.verdict));
            u8::from(!pass)
        }
        Err(broken) => {
            eprintln!("error: exact criteria disagree on {parsed}; verdicts:");
            for r in &broken.reports {
                eprintln!("  {}: {}", r.criterion.name(), verdict_word(r));
            }
            3
        }
    }
}

fn check_batch(criterion: CriterionArg) -> u8 {
    let stdin = std::io::stdin();
    for line in stdin.lock().lines() {
        let Ok(line) = line else { break };
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        match GaussCode::parse(line) {
            Err(e) => {
                let err = BatchError {
                    input: line.to_string(),
                    error: e.to_string(),
                };
                println!("{}", serde_json::to_string(&err).unwrap());
            }
            Ok(code) => match evaluate(&code, criterion) {
                Ok(envelope) => println!("{}", serde_json::to_string(&envelope).unwrap()),
                Err(_) => {
                    let err = BatchError {
                        input: line.to_string(),
                        error: "exact criteria disagree (internal error)".to_string(),
                    };
                    println!("{}", serde_json::to_string(&err).unwrap());
                }
            },
        }
    }
    0
}

fn verdict_word(r: &CriterionReport) -> &'static str {
    if r.verdict {
        "pass"
    } else {
        "fail"
    }
}

fn print_reports(code: &GaussCode, envelope: &CheckEnvelope, witness: bool) {
    println!("code: {code} (n = {})", envelope.n);
    for r in &envelope.reports {
        println!("{:<16} {}", r.criterion.name(), verdict_word(r));
        if witness {
            if let Some(w) = &r.witness {
                for line in witness_lines(w) {
                    println!("    {line}");
                }
            }
            if r.criterion == Criterion::DehnUntangling {
                let t = criteria::dehn_transform(code);
                let chain: Vec<String> = t.steps.iter().map(|s| s.to_string()).collect();
                println!("    reversal trace: {code} -> {}", chain.join(" -> "));
            }
        }
    }
    match envelope.realizable {
        Some(true) => println!("verdict: realizable"),
        Some(false) => println!("verdict: not realizable"),
        None => {}
    }
}

fn witness_lines(w: &Witness) -> Vec<String> {
    match w {
        Witness::OddDegree { chord, degree } => {
            vec![format!("chord {} has odd degree {degree}", chord + 1)]
        }
        Witness::OddCommonNeighbors { chords: (i, j), count } => vec![format!(
            "non-adjacent chords {} and {} have {count} common neighbors",
            i + 1,
            j + 1
        )],
        Witness::BadTriangle { chords: [i, j, k] } => vec![format!(
            "pairwise intersecting chords {}, {}, {} have even parity sum",
            i + 1,
            j + 1,
            k + 1
        )],
        Witness::OddSeparation { symbol, between } => vec![format!(
            "occurrences of symbol {} are separated by {between} symbols",
            symbol + 1
        )],
        Witness::InconsistentEquations { equations, .. } => {
            let mut lines = vec!["inconsistent equations:".to_string()];
            lines.extend(equations.iter().map(|e| format!("  {e}")));
            lines
        }
        Witness::Solution { assignment } => vec![format!(
            "solution: ({})",
            assignment
                .iter()
                .map(|b| b.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        )],
        Witness::OddCycle { vertices } => vec![format!(
            "odd cycle: {}",
            vertices
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(" - ")
        )],
        Witness::BadWeightCycle { vertices } => vec![format!(
            "cycle {} violates the weight-length parity",
            vertices
                .iter()
                .map(|v| (v + 1).to_string())
                .collect::<Vec<_>>()
                .join(" - ")
        )],
        Witness::TwoColoring { colors } => {
            let part = |c: u8| {
                colors
                    .iter()
                    .enumerate()
                    .filter(|&(_, &x)| x == c)
                    .map(|(i, _)| (i + 1).to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            };
            vec![format!("parts {{{}}} / {{{}}}", part(0), part(1))]
        }
        Witness::ReversalTrace { words } => vec![format!(
            "reversal trace: {}",
            words
                .iter()
                .map(|w| w.to_string())
                .collect::<Vec<_>>()
                .join(" -> ")
        )],
    }
}

// ---------------------------------------------------------------- solve --

#[derive(Serialize)]
struct SolveEnvelope {
    code: GaussCode,
    system: gauss_core::Gf2System,
    origins: Vec<EquationOrigin>,
    solution: gauss_core::Gf2Solution,
}

fn cmd_solve(text: &str, json: bool) -> u8 {
    let code = match GaussCode::parse(text) {
        Ok(c) => c,
        Err(e) => return input_error(e),
    };
    let g = InterlacementGraph::from_code(&code);
    let rs = criteria::realizability_system(&g);
    let sol = gf2::solve(&rs.system);
    let consistent = sol.is_consistent();

    if json {
        let envelope = SolveEnvelope {
            code,
            system: rs.system,
            origins: rs.origins,
            solution: sol,
        };
        println!("{}", serde_json::to_string(&envelope).unwrap());
        return u8::from(!consistent);
    }

    println!("code: {code} (n = {})", code.chord_count());
    let mut trivial = 0usize;
    println!("system:");
    for (eq, origin) in rs.system.equations.iter().zip(&rs.origins) {
        if eq.support.is_empty() && !eq.rhs {
            trivial += 1;
            continue;
        }
        let origin_text = match origin {
            EquationOrigin::Pair { i, j } => format!("pair ({}, {})", i + 1, j + 1),
            EquationOrigin::Diagonal { vertex } => format!("diagonal {}", vertex + 1),
        };
        println!("  {:<22} [{origin_text}]", eq.to_string());
    }
    if trivial > 0 {
        println!("  ({trivial} trivially satisfied constant equations omitted)");
    }

    if consistent {
        let pivots: Vec<usize> = (0..rs.system.nvars)
            .filter(|v| sol.free_vars.binary_search(v).is_err())
            .collect();
        println!(
            "solution: consistent, rank {}, {} free variable(s), {} solutions",
            sol.rank,
            sol.free_vars.len(),
            sol.solution_count(rs.system.nvars).unwrap()
        );
        for (pv, eq) in pivots.iter().zip(&sol.reduced) {
            let mut terms: Vec<String> = Vec::new();
            if eq.rhs {
                terms.push("1".to_string());
            }
            terms.extend(
                eq.support
                    .iter()
                    .filter(|v| *v != pv)
                    .map(|v| format!("X{}", v + 1)),
            );
            if terms.is_empty() {
                terms.push("0".to_string());
            }
            println!("  X{} = {}", pv + 1, terms.join(" + "));
        }
        for f in &sol.free_vars {
            println!("  X{} free", f + 1);
        }
        println!("verdict: realizable");
        0
    } else {
        println!("solution: inconsistent");
        if let Some(conflict) = &sol.conflict {
            println!("  conflicting combination:");
            for &k in conflict {
                let origin = match rs.origins[k] {
                    EquationOrigin::Pair { i, j } => format!("pair ({}, {})", i + 1, j + 1),
                    EquationOrigin::Diagonal { vertex } => {
                        format!("diagonal {} (odd degree)", vertex + 1)
                    }
                };
                println!("    {:<22} [{origin}]", rs.system.equations[k].to_string());
            }
        }
        println!("verdict: not realizable");
        1
    }
}

// ---------------------------------------------------------------- table --

#[derive(Serialize)]
struct RowJson {
    n: usize,
    stz: u64,
    gl123: u64,
    gap: Vec<String>,
}

fn cmd_table(
    from: usize,
    to: usize,
    gap: bool,
    jobs: Option<usize>,
    allow_long: bool,
    json: bool,
) -> u8 {
    if from < 1 || from > to || to > 12 {
        return input_error("bounds must satisfy 1 <= from <= to <= 12");
    }
    if to >= 11 && !allow_long {
        return input_error("sizes 11 and 12 take a while; pass --allow-long to run them");
    }
    let jobs = std::env::var("GAUSS_JOBS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .or(jobs);
    let opts = TableOptions {
        collect_gap: gap,
        gap_limit: None,
    };
    let run = || tablegen::count_table(from, to, opts);
    let rows = match jobs {
        Some(j) if j > 0 => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(j)
                .build()
                .expect("thread pool");
            pool.install(run)
        }
        _ => run(),
    };

    if json {
        let out: Vec<RowJson> = rows
            .iter()
            .map(|r| RowJson {
                n: r.n,
                stz: r.stz,
                gl123: r.gl123,
                gap: r.gap.iter().map(|c| c.to_string()).collect(),
            })
            .collect();
        println!("{}", serde_json::to_string(&out).unwrap());
    } else {
        print!("{}", tablegen::format_table(&rows));
        if gap {
            for row in &rows {
                for code in &row.gap {
                    println!("gap n={}: {}", row.n, code);
                }
            }
        }
    }
    0
}

// --------------------------------------------------------------- render --

fn cmd_render(text: &str, what: RenderWhat, format: RenderFormat) -> u8 {
    let code = match GaussCode::parse(text) {
        Ok(c) => c,
        Err(e) => return input_error(e),
    };
    let out = match (what, format) {
        (RenderWhat::Diagram, RenderFormat::Dot) => render::dot_diagram(&code.to_diagram()),
        (RenderWhat::Diagram, RenderFormat::Tikz) => render::tikz_diagram(&code.to_diagram()),
        (RenderWhat::Graph, RenderFormat::Dot) => {
            render::dot_interlacement(&InterlacementGraph::from_code(&code))
        }
        (RenderWhat::Graph, RenderFormat::Tikz) => {
            render::tikz_interlacement(&InterlacementGraph::from_code(&code))
        }
        (RenderWhat::Weighted, RenderFormat::Dot) => {
            render::dot_weighted(&InterlacementGraph::from_code(&code).weighted())
        }
        (RenderWhat::Weighted, RenderFormat::Tikz) => {
            render::tikz_weighted(&InterlacementGraph::from_code(&code).weighted())
        }
        (RenderWhat::Modified, RenderFormat::Dot) => render::dot_modified(
            &criteria::build_modified_graph(&InterlacementGraph::from_code(&code).weighted()),
        ),
        (RenderWhat::Modified, RenderFormat::Tikz) => render::tikz_modified(
            &criteria::build_modified_graph(&InterlacementGraph::from_code(&code).weighted()),
        ),
        (RenderWhat::Dehn, RenderFormat::Dot) => render::dot_interlacement(
            &InterlacementGraph::from_code(&criteria::dehn_transform(&code).result),
        ),
        (RenderWhat::Dehn, RenderFormat::Tikz) => render::tikz_interlacement(
            &InterlacementGraph::from_code(&criteria::dehn_transform(&code).result),
        ),
    };
    print!("{out}");
    0
}
