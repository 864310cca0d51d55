use std::fs;
use std::io::{self, BufWriter, ErrorKind, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use polyclose::delay::{claimed_bound, DelayReport};
use polyclose::format::{parse_dnf, parse_hypergraph, parse_instance, parse_truth_tables, render_instance};
use polyclose::generate::{Hypergraph, RandomFamily};
use polyclose::oracle::{SaturationStream, DEFAULT_BUDGET};
use polyclose::{resolve_with, CloneSpec, Family, ResolveOptions, Strategy, Vector};

/// Decide membership in and enumerate closures of vector families.
#[derive(Parser)]
#[command(name = "polyclose", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print `yes` (exit 0) or `no` (exit 1) for v ∈ Cl_F(S); exit 2 on error.
    Decide {
        #[command(flatten)]
        clone: CloneArgs,
        /// The candidate vector as a digit string.
        #[arg(long)]
        vector: String,
        /// Instance file; standard input when absent or `-`.
        instance: Option<PathBuf>,
    },
    /// Stream Cl_F(S), one vector per line.
    Enum {
        #[command(flatten)]
        clone: CloneArgs,
        /// Use the specialised enumerator (default).
        #[arg(long, conflicts_with = "generic")]
        fast: bool,
        /// Force backtrack search driven by the decider.
        #[arg(long)]
        generic: bool,
        /// Print only the number of vectors.
        #[arg(long)]
        count_only: bool,
        /// Collect and print in lexicographic order.
        #[arg(long)]
        sorted: bool,
        instance: Option<PathBuf>,
    },
    /// Stream the closure by plain saturation under truth-tabled operations.
    Saturate {
        /// Truth-table file.
        ops: PathBuf,
        instance: Option<PathBuf>,
        /// Largest number of vectors kept before giving up.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Measure per-emission work on seeded random instances.
    Bench {
        #[command(flatten)]
        clone: CloneArgs,
        #[arg(long, default_value_t = 64)]
        n: usize,
        /// Number of random vectors (defaults to n/2).
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, default_value_t = 0.5)]
        density: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        repetitions: u64,
        /// Stop each run after this many emissions.
        #[arg(long, default_value_t = 100_000)]
        limit: usize,
        #[arg(long)]
        generic: bool,
    },
    /// Convert a monotone DNF into an instance whose union closure is its
    /// set of models.
    Convert {
        dnf: Option<PathBuf>,
    },
    /// Generate an instance.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
}

#[derive(Subcommand)]
enum GenKind {
    /// Seeded random family.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = 0.5)]
        density: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 2)]
        domain: u8,
    },
    /// Complemented hyperedges: 𝟏 ∈ Cl_{S10^k} iff no k vertices hit every
    /// edge.
    Hittingset {
        /// Hypergraph file; a random hypergraph when absent.
        #[arg(long)]
        hypergraph: Option<PathBuf>,
        #[arg(long, default_value_t = 6)]
        vertices: usize,
        #[arg(long, default_value_t = 5)]
        edges: usize,
        #[arg(long, default_value_t = 0.4)]
        density: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Args)]
struct CloneArgs {
    /// Named clone, e.g. `E2`, `E2 dual`, `S10^3 +0`, `M2 +neg`.
    #[arg(long, required_unless_present = "ops", conflicts_with = "ops")]
    clone: Option<String>,
    /// Truth-table file giving the operations explicitly.
    #[arg(long)]
    ops: Option<PathBuf>,
    /// Bound on saturation sizes and cached projections.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: usize,
}

impl CloneArgs {
    fn spec(&self) -> Result<CloneSpec> {
        match (&self.clone, &self.ops) {
            (Some(name), _) => Ok(name.parse()?),
            (None, Some(path)) => {
                let text = read_text(Some(path))?;
                let ops = parse_truth_tables(&text).with_context(|| format!("in {}", path.display()))?;
                Ok(CloneSpec::explicit(ops)?)
            }
            (None, None) => bail!("either --clone or --ops is required"),
        }
    }

    fn options(&self) -> ResolveOptions {
        ResolveOptions { budget: self.budget }
    }
}

fn read_text(path: Option<&Path>) -> Result<String> {
    match path {
        Some(p) if p != Path::new("-") => fs::read_to_string(p).with_context(|| format!("cannot read {}", p.display())),
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).context("cannot read standard input")?;
            Ok(s)
        }
    }
}

fn read_instance(path: Option<&Path>) -> Result<Family> {
    let text = read_text(path)?;
    let name = path.map_or("standard input".to_string(), |p| p.display().to_string());
    parse_instance(&text).with_context(|| format!("in {name}"))
}

/// Writes one line and flushes, so consumers observe each emission.
fn emit(out: &mut impl Write, v: &Vector) -> io::Result<()> {
    writeln!(out, "{v}")?;
    out.flush()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            if let Some(io) = e.downcast_ref::<io::Error>() {
                if io.kind() == ErrorKind::BrokenPipe {
                    return ExitCode::SUCCESS;
                }
            }
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match command {
        Command::Decide {
            clone,
            vector,
            instance,
        } => {
            let s = read_instance(instance.as_deref())?;
            let v = Vector::parse(&vector, s.domain()).context("bad --vector")?;
            let problem = resolve_with(&clone.spec()?, &s, clone.options())?;
            let yes = problem.decide(&v)?;
            writeln!(out, "{}", if yes { "yes" } else { "no" })?;
            Ok(if yes { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Enum {
            clone,
            fast: _,
            generic,
            count_only,
            sorted,
            instance,
        } => {
            let s = read_instance(instance.as_deref())?;
            let problem = resolve_with(&clone.spec()?, &s, clone.options())?;
            let strategy = if generic { Strategy::Generic } else { Strategy::Fast };
            let stream = problem.enumerate(strategy)?;
            if count_only {
                let mut count = 0u64;
                for v in stream {
                    v?;
                    count += 1;
                }
                writeln!(out, "{count}")?;
            } else if sorted {
                let mut all = stream.collect::<polyclose::Result<Vec<_>>>()?;
                all.sort();
                let mut buffered = BufWriter::new(out);
                for v in &all {
                    writeln!(buffered, "{v}")?;
                }
                buffered.flush()?;
            } else {
                for v in stream {
                    emit(&mut out, &v?)?;
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Saturate { ops, instance, budget } => {
            let text = read_text(Some(&ops))?;
            let ops = parse_truth_tables(&text).with_context(|| format!("in {}", ops.display()))?;
            let s = read_instance(instance.as_deref())?;
            eprintln!(
                "warning: saturation has no polynomial delay guarantee and keeps every vector found in memory (budget {budget})"
            );
            for v in SaturationStream::new(&ops, &s, budget)? {
                emit(&mut out, &v?)?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Bench {
            clone,
            n,
            m,
            density,
            seed,
            repetitions,
            limit,
            generic,
        } => {
            let spec = clone.spec()?;
            let m = m.unwrap_or(n / 2).max(1);
            let strategy = if generic { Strategy::Generic } else { Strategy::Fast };
            for rep in 0..repetitions {
                let params = RandomFamily {
                    len: n,
                    size: m,
                    density,
                    domain: 2,
                    seed: seed + rep,
                };
                let s = params.generate()?;
                let problem = resolve_with(&spec, &s, clone.options())?;
                let mut stream = problem.enumerate(strategy)?;
                let report = DelayReport::measure(stream.as_mut(), Some(limit), |_| {})?;
                let bound = if generic {
                    None
                } else {
                    claimed_bound(problem.algorithm(), n, problem.family().size())
                };
                write!(
                    out,
                    "clone={spec:?} algorithm={:?} strategy={strategy:?} n={n} m={} seed={} emissions={} truncated={} max_work={} mean_work={:.2} total_work={} max_us={:.3} mean_us={:.3}",
                    problem.algorithm(),
                    s.size(),
                    params.seed,
                    report.emissions(),
                    report.truncated,
                    report.max_work(),
                    report.mean_work(),
                    report.total_work,
                    report.max_time().as_secs_f64() * 1e6,
                    report.mean_time().as_secs_f64() * 1e6,
                    spec = spec.to_string(),
                )?;
                if let Some((shape, value)) = bound {
                    write!(
                        out,
                        " bound={shape:?} bound_value={value} ratio={:.4}",
                        report.max_work() as f64 / value as f64
                    )?;
                }
                let histogram: Vec<String> = report.histogram().iter().map(|(b, c)| format!("{b}:{c}")).collect();
                writeln!(out, " histogram={}", histogram.join(","))?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Convert { dnf } => {
            let formula = parse_dnf(&read_text(dnf.as_deref())?)?;
            write!(out, "{}", render_instance(&formula.to_union_family()))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Gen { kind } => {
            let family = match kind {
                GenKind::Random {
                    n,
                    m,
                    density,
                    seed,
                    domain,
                } => RandomFamily {
                    len: n,
                    size: m,
                    density,
                    domain,
                    seed,
                }
                .generate()?,
                GenKind::Hittingset {
                    hypergraph,
                    vertices,
                    edges,
                    density,
                    seed,
                } => {
                    let h = match hypergraph {
                        Some(path) => parse_hypergraph(&read_text(Some(&path))?)?,
                        None => Hypergraph::random(vertices, edges, density, seed)?,
                    };
                    if h.edges().is_empty() {
                        bail!("the hypergraph has no edges, so the instance would be empty");
                    }
                    h.complemented_family()
                }
            };
            write!(out, "{}", render_instance(&family))?;
            Ok(ExitCode::SUCCESS)
        }
    }
}
