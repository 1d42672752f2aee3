use std::fmt::Write as _;
use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use tpkernel::decomposition::{critical_cliques, strong_modules, ModuleKind};
use tpkernel::generate::{plant_instance, GenSpec};
use tpkernel::io::{parse_edge_list, write_edge_list, EdgeList};
use tpkernel::kernel::{audit_bounds, reduce_exhaustively, Instance, Mode};
use tpkernel::recognition::{build_ucd, find_obstruction};
use tpkernel::solver::{solve, SolveResult};

/// Trivially perfect editing toolkit.
#[derive(Parser)]
#[command(name = "tpk", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print `TP`, or `NOT-TP` with an induced C4 or P4.
    Recognize(InputArgs),
    /// Print the universal clique decomposition of a trivially perfect graph.
    Decompose {
        #[command(flatten)]
        input: InputArgs,
        /// Print the strong modules instead (any graph).
        #[arg(long)]
        modules: bool,
        /// Print the critical cliques instead (any graph).
        #[arg(long, conflicts_with = "modules")]
        cliques: bool,
    },
    /// Reduce an instance to a kernel.
    Kernelize {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        problem: ProblemArgs,
        /// Kernel output file (stdout when absent).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Reduction trace output file.
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Decide an instance exactly and print a witness.
    Solve {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        problem: ProblemArgs,
    },
    /// Generate a planted instance.
    Gen {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        n: usize,
        /// Number of planted pair toggles (also the instance's k).
        #[arg(long, default_value_t = 0)]
        edits: usize,
        #[arg(long, default_value = "editing")]
        mode: Mode,
        #[arg(long, default_value_t = 3)]
        max_bag: usize,
        #[arg(long, default_value_t = 0.05)]
        root_prob: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check that an instance and its kernel get the same answer.
    Verify {
        original: PathBuf,
        kernel: PathBuf,
        #[command(flatten)]
        problem: ProblemArgs,
        /// Refuse instances with more vertices than this.
        #[arg(long, default_value_t = 12)]
        cap: usize,
    },
    /// Kernelize planted instances over a grid and tabulate sizes and audits.
    Bench {
        /// Seed range, `a..b` (exclusive end).
        #[arg(long, default_value = "0..10")]
        seeds: String,
        /// Comma-separated vertex counts.
        #[arg(long, default_value = "100,200")]
        sizes: String,
        /// Comma-separated k values (planted edits = k).
        #[arg(long, default_value = "2,4,8")]
        ks: String,
        #[arg(long, default_value = "editing")]
        mode: Mode,
        /// Add a wall-time column in milliseconds.
        #[arg(long)]
        timing: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct InputArgs {
    /// Edge-list file, `-` or absent for stdin.
    input: Option<PathBuf>,
}

#[derive(Args)]
struct ProblemArgs {
    /// Parameter k (overrides the file header).
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, default_value = "editing")]
    mode: Mode,
}

/// Exit statuses.
const OK: u8 = 0;
const NEGATIVE: u8 = 1;
const INPUT_ERROR: u8 = 2;
const REFUSED: u8 = 3;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(INPUT_ERROR)
        }
    }
}

fn read_input(path: Option<&Path>) -> Result<EdgeList> {
    let text = match path {
        None => read_stdin()?,
        Some(p) if p == Path::new("-") => read_stdin()?,
        Some(p) => fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?,
    };
    let name = path.map_or("stdin".into(), |p| p.display().to_string());
    parse_edge_list(&text).with_context(|| format!("parsing {name}"))
}

fn read_stdin() -> Result<String> {
    let mut s = String::new();
    std::io::stdin().read_to_string(&mut s).context("reading stdin")?;
    Ok(s)
}

fn instance(el: EdgeList, problem: &ProblemArgs) -> Result<Instance> {
    let Some(k) = problem.k.or(el.k) else {
        bail!("no parameter k: pass --k or give one in the header");
    };
    Ok(Instance::new(el.graph, k, problem.mode))
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cmd: Command) -> Result<u8> {
    match cmd {
        Command::Recognize(input) => {
            let el = read_input(input.input.as_deref())?;
            match find_obstruction(&el.graph) {
                None => {
                    println!("TP");
                    Ok(OK)
                }
                Some(o) => {
                    println!("NOT-TP {o}");
                    Ok(NEGATIVE)
                }
            }
        }
        Command::Decompose { input, modules, cliques } => {
            let el = read_input(input.input.as_deref())?;
            let g = &el.graph;
            if modules {
                let list = strong_modules(g);
                for i in 0..list.len() {
                    let kind = match list.kind(i) {
                        ModuleKind::Leaf => "leaf",
                        ModuleKind::Parallel => "parallel",
                        ModuleKind::Series => "series",
                        ModuleKind::Prime => "prime",
                    };
                    let parent = list.parent(i).map_or(-1, |p| p as i64);
                    println!("{i} {parent} {kind} :{}", join(list.modules()[i].iter()));
                }
                return Ok(OK);
            }
            if cliques {
                for c in critical_cliques(g).classes() {
                    println!("{}", join(c.iter()).trim_start());
                }
                return Ok(OK);
            }
            match build_ucd(g) {
                Ok(d) => {
                    print!("{}", d.to_text());
                    Ok(OK)
                }
                Err(_) => {
                    let o = find_obstruction(g).expect("not trivially perfect");
                    println!("NOT-TP {o}");
                    Ok(NEGATIVE)
                }
            }
        }
        Command::Kernelize { input, problem, out, trace } => {
            let inst = instance(read_input(input.input.as_deref())?, &problem)?;
            let (kernel, tr) = reduce_exhaustively(&inst);
            emit(out.as_deref(), &tr.kernel_text())?;
            if let Some(t) = trace {
                fs::write(&t, tr.to_text()).with_context(|| format!("writing {}", t.display()))?;
            }
            let summary = format!("{} {} {} {}", inst.graph.n(), kernel.graph.n(), kernel.k, tr.rules_fired());
            if out.is_some() {
                println!("{summary}");
            } else {
                eprintln!("{summary}");
            }
            Ok(OK)
        }
        Command::Solve { input, problem } => {
            let inst = instance(read_input(input.input.as_deref())?, &problem)?;
            match solve(&inst) {
                SolveResult::Yes(w) => {
                    println!("YES");
                    for (p, kind) in w.iter() {
                        let sign = match kind {
                            tpkernel::EditKind::Addition => '+',
                            tpkernel::EditKind::Deletion => '-',
                        };
                        println!("{sign}{} {}", p.low(), p.high());
                    }
                    Ok(OK)
                }
                SolveResult::No => {
                    println!("NO");
                    Ok(NEGATIVE)
                }
            }
        }
        Command::Gen { seed, n, edits, mode, max_bag, root_prob, out } => {
            let mut spec = GenSpec::new(seed, n).with_edits(edits, mode);
            spec.max_bag = max_bag;
            spec.root_prob = root_prob;
            let p = plant_instance(&spec)?;
            emit(
                out.as_deref(),
                &write_edge_list(&p.instance.graph, Some(p.instance.k), &p.comments),
            )?;
            Ok(OK)
        }
        Command::Verify { original, kernel, problem, cap } => {
            let a = read_input(Some(&original))?;
            let b = read_input(Some(&kernel))?;
            let biggest = a.graph.n().max(b.graph.n());
            if biggest > cap {
                eprintln!("refusing: {biggest} vertices exceed the cap of {cap} (raise it with --cap)");
                return Ok(REFUSED);
            }
            let a = instance(a, &problem)?;
            let b = instance(b, &problem)?;
            let (ya, yb) = (solve(&a).is_yes(), solve(&b).is_yes());
            let word = |y: bool| if y { "YES" } else { "NO" };
            if ya == yb {
                println!("AGREE {}", word(ya));
                Ok(OK)
            } else {
                println!("DISAGREE original={} kernel={}", word(ya), word(yb));
                Ok(NEGATIVE)
            }
        }
        Command::Bench { seeds, sizes, ks, mode, timing, out } => {
            let seeds = parse_range(&seeds)?;
            let sizes = parse_list(&sizes).context("--sizes")?;
            let ks = parse_list(&ks).context("--ks")?;
            let mut grid = Vec::new();
            for seed in seeds {
                for &n in &sizes {
                    for &k in &ks {
                        grid.push((seed, n, k));
                    }
                }
            }
            let rows: Vec<Result<String>> = grid
                .par_iter()
                .map(|&(seed, n, k)| bench_row(seed, n, k, mode, timing))
                .collect();
            let mut table = String::from("seed,n,k,n_kernel,rules,violations");
            table.push_str(if timing { ",ms\n" } else { "\n" });
            for row in rows {
                table.push_str(&row?);
            }
            emit(out.as_deref(), &table)?;
            Ok(OK)
        }
    }
}

fn bench_row(seed: u64, n: usize, k: usize, mode: Mode, timing: bool) -> Result<String> {
    let start = Instant::now();
    let p = plant_instance(&GenSpec::new(seed, n).with_edits(k, mode))
        .with_context(|| format!("seed {seed}, n {n}, k {k}"))?;
    let (kernel, tr) = reduce_exhaustively(&p.instance);
    let report = audit_bounds(&kernel);
    let mut row = format!(
        "{seed},{n},{k},{},{},{}",
        kernel.graph.n(),
        tr.rules_fired(),
        report.violations.len()
    );
    if timing {
        let _ = write!(row, ",{}", start.elapsed().as_millis());
    }
    row.push('\n');
    Ok(row)
}

fn parse_range(s: &str) -> Result<std::ops::Range<u64>> {
    let (a, b) = s.split_once("..").with_context(|| format!("expected a range a..b, got `{s}`"))?;
    let a: u64 = a.trim().parse().with_context(|| format!("bad range start in `{s}`"))?;
    let b: u64 = b.trim().parse().with_context(|| format!("bad range end in `{s}`"))?;
    if a > b {
        bail!("empty range `{s}`");
    }
    Ok(a..b)
}

fn parse_list(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(|x| x.trim().parse::<usize>().with_context(|| format!("bad number `{x}`")))
        .collect()
}

fn join(it: impl Iterator<Item = usize>) -> String {
    it.fold(String::new(), |mut s, v| {
        let _ = write!(s, " {v}");
        s
    })
}
