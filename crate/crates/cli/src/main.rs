//! `splitdel`: exact vertex-deletion solvers for split graphs.
//!
//! Exit codes: 0 = decided (YES or NO), 2 = parse/usage error, 3 = input is
//! not a split graph, 4 = internal invariant violation or verification
//! failure.

use clap::{Parser, Subcommand, ValueEnum};
use splitdel_cli::edge_list::{parse_edge_list, render_edge_list};
use splitdel_cli::gen::{gen_split, GeneratorConfig};
use splitdel_core::analysis::{branching_number, rule_vector_table, BranchingVector};
use splitdel_core::graph::{
    find_induced_diamond, find_induced_p4, is_block_split, is_threshold_split, split_partition,
};
use splitdel_core::oracle::{min_deletion, TargetProperty};
use splitdel_core::sbvd::solve_sbvd;
use splitdel_core::stvd::solve_stvd_traced;
use splitdel_core::{Error, Graph, SplitPartition, Vertex, VertexSet};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

const EXIT_OK: u8 = 0;
const EXIT_USAGE: u8 = 2;
const EXIT_NOT_SPLIT: u8 = 3;
const EXIT_INTERNAL: u8 = 4;

#[derive(Parser)]
#[command(name = "splitdel", about = "Exact vertex-deletion solvers for split graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Problem {
    /// Delete vertices until the split graph is a block graph
    Sbvd,
    /// Delete vertices until the split graph is a threshold graph
    Stvd,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether at most k deletions reach the target class
    Solve {
        /// Problem to solve
        #[arg(long, value_enum)]
        problem: Problem,
        /// Deletion budget
        #[arg(long)]
        k: usize,
        /// Write one line per search node to this file (stvd only)
        #[arg(long, value_name = "FILE")]
        trace: Option<PathBuf>,
        /// Re-check the answer: witness validity, brute force when n <= 12
        #[arg(long)]
        verify: bool,
        /// Input edge-list file
        file: PathBuf,
    },
    /// Report split / threshold / block status with witnesses
    Recognize {
        /// Input edge-list file
        file: PathBuf,
    },
    /// Brute-force minimum deletion set (small graphs only)
    Oracle {
        /// Problem to solve
        #[arg(long, value_enum)]
        problem: Problem,
        /// Largest deletion-set size to try
        #[arg(long)]
        kmax: usize,
        /// Input edge-list file
        file: PathBuf,
    },
    /// Generate a seeded random split graph as an edge list
    Gen {
        /// Clique-side size
        #[arg(long)]
        nc: usize,
        /// Independent-side size
        #[arg(long)]
        ni: usize,
        /// Independent-clique edge probability in [0, 1]
        #[arg(long)]
        p: f64,
        /// PRNG seed
        #[arg(long)]
        seed: u64,
        /// Output file (stdout if omitted)
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the branching-rule table, or one vector's branching number
    Analyze {
        /// Comma-separated branch costs, e.g. 1,1,2,2
        #[arg(long)]
        vector: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    ExitCode::from(match cli.command {
        Command::Solve {
            problem,
            k,
            trace,
            verify,
            file,
        } => cmd_solve(problem, k, trace.as_deref(), verify, &file),
        Command::Recognize { file } => cmd_recognize(&file),
        Command::Oracle { problem, kmax, file } => cmd_oracle(problem, kmax, &file),
        Command::Gen { nc, ni, p, seed, out } => cmd_gen(nc, ni, p, seed, out.as_deref()),
        Command::Analyze { vector } => cmd_analyze(vector.as_deref()),
    })
}

fn load_graph(path: &Path) -> Result<Graph, u8> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        eprintln!("error: cannot read {}: {}", path.display(), e);
        EXIT_USAGE
    })?;
    parse_edge_list(&text).map_err(|e| {
        eprintln!("error: {}: {}", path.display(), e);
        EXIT_USAGE
    })
}

fn require_split(g: &Graph) -> Result<SplitPartition, u8> {
    split_partition(g).map_err(|_| {
        eprintln!("error: input is not a split graph");
        EXIT_NOT_SPLIT
    })
}

fn print_answer(answer: Option<&[Vertex]>) {
    match answer {
        Some(s) => {
            let joined: Vec<String> = s.iter().map(|v| v.to_string()).collect();
            println!("YES");
            println!("{}", s.len());
            println!("{}", joined.join(" "));
        }
        None => println!("NO"),
    }
}

fn cmd_solve(
    problem: Problem,
    k: usize,
    trace_path: Option<&Path>,
    verify: bool,
    file: &Path,
) -> u8 {
    if trace_path.is_some() && problem == Problem::Sbvd {
        eprintln!("error: --trace applies only to --problem stvd");
        return EXIT_USAGE;
    }
    let g = match load_graph(file) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let p = match require_split(&g) {
        Ok(p) => p,
        Err(code) => return code,
    };
    let result = match problem {
        Problem::Stvd => {
            let mut trace = Vec::new();
            let result = solve_stvd_traced(&g, &p, k, &mut trace);
            if let Some(path) = trace_path {
                let text: String = trace.iter().map(|r| format!("{}\n", r)).collect();
                if let Err(e) = std::fs::write(path, text) {
                    eprintln!("error: cannot write trace to {}: {}", path.display(), e);
                    return EXIT_USAGE;
                }
            }
            result
        }
        Problem::Sbvd => solve_sbvd(&g, &p, k),
    };
    let answer = match result {
        Ok(a) => a,
        Err(e) => {
            eprintln!("error: {}", e);
            return EXIT_INTERNAL;
        }
    };
    if verify {
        if let Err(msg) = verify_answer(&g, &p, problem, k, answer.as_deref()) {
            eprintln!("verification failed: {}", msg);
            return EXIT_INTERNAL;
        }
    }
    print_answer(answer.as_deref());
    EXIT_OK
}

fn verify_answer(
    g: &Graph,
    p: &SplitPartition,
    problem: Problem,
    k: usize,
    answer: Option<&[Vertex]>,
) -> Result<(), String> {
    if let Some(s) = answer {
        if s.len() > k {
            return Err(format!("witness size {} exceeds budget {}", s.len(), k));
        }
        let removed = VertexSet::from_iter(g.order(), s.iter().copied());
        let h = g.without(&removed);
        let ok = match problem {
            Problem::Stvd => is_threshold_split(&h, p),
            Problem::Sbvd => is_block_split(&h, p),
        };
        if !ok {
            return Err("witness does not reach the target class".into());
        }
    }
    if g.order() <= 12 {
        let prop = match problem {
            Problem::Stvd => TargetProperty::ThresholdSplit,
            Problem::Sbvd => TargetProperty::BlockSplit,
        };
        let oracle = min_deletion(g, prop, k).map_err(|e| format!("oracle failed: {}", e))?;
        if oracle.is_some() != answer.is_some() {
            return Err(format!(
                "solver answered {}, brute force answered {}",
                if answer.is_some() { "YES" } else { "NO" },
                if oracle.is_some() { "YES" } else { "NO" }
            ));
        }
    }
    Ok(())
}

fn join_commas<I: IntoIterator<Item = Vertex>>(items: I) -> String {
    let parts: Vec<String> = items.into_iter().map(|v| v.to_string()).collect();
    parts.join(",")
}

fn cmd_recognize(file: &Path) -> u8 {
    let g = match load_graph(file) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let p = match split_partition(&g) {
        Ok(p) => p,
        Err(_) => {
            println!("split: no");
            return EXIT_NOT_SPLIT;
        }
    };
    println!(
        "split: yes C={} I={}",
        join_commas(p.live_clique(&g).iter()),
        join_commas(p.live_independent(&g).iter())
    );
    match find_induced_p4(&g, &p) {
        None => println!("threshold: yes"),
        Some(w) => println!("threshold: no P4={},{},{},{}", w.u, w.a, w.b, w.v),
    }
    match find_induced_diamond(&g) {
        None => println!("block: yes"),
        Some(w) => println!("block: no diamond={}", join_commas(w.0)),
    }
    EXIT_OK
}

fn cmd_oracle(problem: Problem, kmax: usize, file: &Path) -> u8 {
    let g = match load_graph(file) {
        Ok(g) => g,
        Err(code) => return code,
    };
    if let Err(code) = require_split(&g) {
        return code;
    }
    let prop = match problem {
        Problem::Stvd => TargetProperty::ThresholdSplit,
        Problem::Sbvd => TargetProperty::BlockSplit,
    };
    match min_deletion(&g, prop, kmax) {
        Ok(Some((_, witness))) => {
            print_answer(Some(&witness));
            EXIT_OK
        }
        Ok(None) => {
            print_answer(None);
            EXIT_OK
        }
        Err(e @ Error::TooLarge { .. }) => {
            eprintln!("error: {}", e);
            EXIT_USAGE
        }
        Err(e) => {
            eprintln!("error: {}", e);
            EXIT_INTERNAL
        }
    }
}

fn cmd_gen(nc: usize, ni: usize, p: f64, seed: u64, out: Option<&Path>) -> u8 {
    if !(0.0..=1.0).contains(&p) {
        eprintln!("error: --p must be in [0, 1]");
        return EXIT_USAGE;
    }
    let (g, _) = gen_split(&GeneratorConfig {
        clique_size: nc,
        independent_size: ni,
        edge_probability: p,
        seed,
    });
    let text = render_edge_list(&g);
    match out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                eprintln!("error: cannot write {}: {}", path.display(), e);
                return EXIT_USAGE;
            }
        }
        None => print!("{}", text),
    }
    EXIT_OK
}

fn cmd_analyze(vector: Option<&str>) -> u8 {
    match vector {
        Some(spec) => {
            let entries: Result<Vec<usize>, _> =
                spec.split(',').map(|t| t.trim().parse::<usize>()).collect();
            let entries = match entries {
                Ok(e) => e,
                Err(_) => {
                    eprintln!("error: --vector must be comma-separated positive integers");
                    return EXIT_USAGE;
                }
            };
            match BranchingVector::new(entries) {
                Ok(v) => println!("{:.6}", branching_number(&v)),
                Err(e) => {
                    eprintln!("error: {}", e);
                    return EXIT_USAGE;
                }
            }
        }
        None => {
            for (rule, v, gamma) in rule_vector_table() {
                println!("{:<3} {:<18} {:.6}", rule.to_string(), v.to_string(), gamma);
            }
        }
    }
    EXIT_OK
}
