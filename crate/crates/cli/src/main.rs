mod input;
mod render;
mod verify;

use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use tamari_core::enumerate::{enumerate_intervals, enumerate_m_intervals};
use tamari_core::*;

use input::InputArgs;
use verify::Suite;

#[derive(Debug, Parser)]
#[command(name = "tamari", version, about = "Tamari interval-posets and the rise-contact involution")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Drawing {
    Dot,
    Tikz,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Number of intervals of size n (from the closed formula).
    Count {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        m: usize,
    },
    /// Every interval of size n as one JSON object per line.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: Option<usize>,
        /// Attach the statistic bundle to each interval.
        #[arg(long)]
        stats: bool,
    },
    /// Contacts, rises, distance and monomials of an interval.
    Stats {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Apply the rise-contact involution (or its m version).
    Involute {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Apply the complement i -> n+1-i.
    Complement {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// The grafting tree of an interval.
    GraftTree {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Run a verification suite; exits with 1 if any check fails.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long)]
        max_n: usize,
        #[arg(long, default_value_t = 2)]
        m: usize,
        /// Worker threads (0 uses every core).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Draw an interval-poset as Graphviz or TikZ source.
    Render {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum)]
        format: Drawing,
    },
}

fn json<T: Serialize>(value: &T) -> Result<String> {
    Ok(serde_json::to_string(value)?)
}

fn poset_text(p: &IntervalPoset) -> String {
    let edges = |e: Vec<(usize, usize)>| {
        e.iter().map(|(a, b)| format!("{a}<{b}")).collect::<Vec<_>>().join(" ")
    };
    let (lo, hi) = dyck_bounds(p);
    format!(
        "size: {}\nincreasing: {}\ndecreasing: {}\nlower: {lo}\nupper: {hi}",
        p.size(),
        edges(p.increasing_forest().edges()),
        edges(p.decreasing_forest().edges()),
    )
}

fn poset_out(p: &IntervalPoset, format: Format) -> Result<String> {
    match format {
        Format::Json => json(p),
        Format::Text => Ok(poset_text(p)),
    }
}

fn list(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

fn stats_text(s: &StatBundle) -> String {
    format!(
        "size: {}\ncontacts: {}\nrises: {}\ndistance: {}\ncontactsP: {}\nrisesP: {}",
        s.size,
        list(&s.contacts),
        list(&s.rises),
        s.distance,
        s.contacts_p.monomial("x"),
        s.rises_p.monomial("y"),
    )
}

fn bundle(p: &IntervalPoset, m: Option<usize>) -> Result<StatBundle> {
    Ok(match m {
        Some(m) => m_interval_stats(p, m)?,
        None => interval_stats(p),
    })
}

#[derive(Serialize)]
struct WithStats<'a> {
    interval: &'a IntervalPoset,
    stats: StatBundle,
}

enum Outcome {
    Done,
    VerificationFailed,
}

fn run(cli: Cli) -> Result<Outcome> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    match cli.command {
        Command::Count { n, m } => writeln!(out, "{}", count_m_intervals(n, m))?,
        Command::Enumerate { n, m, stats } => {
            let mut emit = |p: &IntervalPoset| -> Result<()> {
                let line = if stats {
                    json(&WithStats { interval: p, stats: bundle(p, m)? })?
                } else {
                    json(p)?
                };
                writeln!(out, "{line}")?;
                Ok(())
            };
            match m {
                Some(m) => enumerate_m_intervals(n, m).iter().try_for_each(&mut emit)?,
                None => enumerate_intervals(n).try_for_each(|p| emit(&p))?,
            }
        }
        Command::Stats { input, m, format } => {
            let s = bundle(&input.interval()?, m)?;
            let text = match format {
                Format::Json => json(&s)?,
                Format::Text => stats_text(&s),
            };
            writeln!(out, "{text}")?;
        }
        Command::Involute { input, m, format } => {
            let p = input.interval()?;
            let j = match m {
                Some(m) => m_rise_contact(&p, m)?,
                None => rise_contact(&p),
            };
            writeln!(out, "{}", poset_out(&j, format)?)?;
        }
        Command::Complement { input, format } => {
            writeln!(out, "{}", poset_out(&input.interval()?.complement(), format)?)?;
        }
        Command::GraftTree { input, format } => {
            let g = GraftingTree::from_interval(&input.interval()?);
            let text = match format {
                Format::Json => json(&g)?,
                Format::Text => format!("tree: {}\nlabels: {}", g.tree(), list(g.labels())),
            };
            writeln!(out, "{text}")?;
        }
        Command::Verify { suite, max_n, m, jobs } => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs)
                .build()
                .context("building the worker pool")?;
            let report = pool.install(|| match suite {
                Suite::Classical => verify::classical(max_n),
                Suite::Mtamari => verify::mtamari(max_n, m),
                Suite::Oracles => verify::oracles(max_n, m),
            });
            write!(out, "{}", report.table())?;
            out.flush()?;
            if !report.passed() {
                return Ok(Outcome::VerificationFailed);
            }
        }
        Command::Render { input, format } => {
            let p = input.interval()?;
            let text = match format {
                Drawing::Dot => render::dot(&p),
                Drawing::Tikz => render::tikz(&p),
            };
            write!(out, "{text}")?;
        }
    }
    out.flush()?;
    Ok(Outcome::Done)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome::Done) => ExitCode::SUCCESS,
        Ok(Outcome::VerificationFailed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
