//! Command-line front end. [`run`] takes the argument list and the three
//! standard streams so it can be driven from tests.

use std::io::{BufRead, Write};

use clap::{Parser, Subcommand, ValueEnum};
use fpaths::counting::{self, MarginalSpec, TableAxis};
use fpaths::verify;
use fpaths::Family;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "fpaths",
    version,
    about = "F-paths and six equinumerous families"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List every object of size n, one per line.
    Enumerate {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        /// F-path length; other families use the matching size.
        #[arg(long)]
        n: usize,
        /// Append a tab and the statistics "height,north,aone".
        #[arg(long)]
        stats: bool,
    },
    /// Read objects on stdin and print their images in another family.
    Map {
        #[arg(long, value_parser = parse_family)]
        from: Family,
        #[arg(long, value_parser = parse_family)]
        to: Family,
    },
    /// Read objects on stdin and print "height,north,aone" for each.
    Stats {
        #[arg(long, value_parser = parse_family)]
        family: Family,
    },
    /// Count F-paths of length n. --h, --l, --m fix the number of unit-width
    /// steps, north steps and the final height; unset ones are summed over.
    Count {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        h: Option<u64>,
        #[arg(long)]
        l: Option<u64>,
        #[arg(long)]
        m: Option<u64>,
        /// Counts by step class "I,J,K,L,M": steps (1,1), steps (1,b<=0),
        /// steps (a>=2,1), north steps, and final height.
        #[arg(long, value_parser = parse_refined, conflicts_with_all = ["h", "l", "m"])]
        refined: Option<[u64; 5]>,
    },
    /// Rows n = 0..=max-n of one marginal distribution, zero padded to
    /// max-n + 1 columns.
    Table {
        #[arg(long, value_enum)]
        which: Axis,
        #[arg(long, default_value_t = 5)]
        max_n: u64,
    },
    /// Total counts for n = 0..=max-n.
    Sequence {
        #[arg(long)]
        max_n: u64,
        /// One "n a(n)" line per term.
        #[arg(long)]
        bfile: bool,
    },
    /// Run the exhaustive cross-checks.
    Verify {
        #[arg(long, default_value_t = verify::DEFAULT_MAX_N)]
        max_n: usize,
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Print the report as JSON instead of text.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Axis {
    H,
    L,
    M,
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse()
}

fn parse_refined(s: &str) -> Result<[u64; 5], String> {
    let parts: Vec<u64> = s
        .split(',')
        .map(|p| p.trim().parse::<u64>().map_err(|e| format!("{p:?}: {e}")))
        .collect::<Result<_, _>>()?;
    parts
        .try_into()
        .map_err(|v: Vec<u64>| format!("expected 5 values, got {}", v.len()))
}

/// Runs one command line. `args` includes the program name.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let out: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = write!(out, "{}", e.render());
            return code;
        }
    };
    match execute(cli.command, stdin, stdout) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}

enum Failure {
    Usage(String),
    Io(std::io::Error),
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

fn execute(command: Command, stdin: &mut dyn BufRead, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Enumerate { family, n, stats } => {
            for o in family.enumerate(n).map_err(usage)? {
                if stats {
                    writeln!(out, "{o}\t{}", o.stats())?;
                } else {
                    writeln!(out, "{o}")?;
                }
            }
        }
        Command::Map { from, to } => {
            for_each_object(from, stdin, |o| {
                writeln!(out, "{}", to.from_fpath(&o.to_fpath()))?;
                Ok(())
            })?;
        }
        Command::Stats { family } => {
            for_each_object(family, stdin, |o| {
                writeln!(out, "{}", o.stats())?;
                Ok(())
            })?;
        }
        Command::Count {
            n,
            h,
            l,
            m,
            refined,
        } => {
            let value = match refined {
                Some([i, j, k, l, m]) => counting::f_refined(n, i, j, k, l, m),
                None => counting::a_marginal(n, MarginalSpec { h, l, m }),
            }
            .map_err(usage)?;
            writeln!(out, "{value}")?;
        }
        Command::Table { which, max_n } => {
            let axis = match which {
                Axis::H => TableAxis::H,
                Axis::L => TableAxis::L,
                Axis::M => TableAxis::M,
            };
            for n in 0..=max_n {
                let row = counting::table_row(n, axis).map_err(usage)?;
                // pad to a square grid with zeros past the diagonal
                let mut cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
                cells.resize(max_n as usize + 1, "0".into());
                writeln!(out, "{}", cells.join(" "))?;
            }
        }
        Command::Sequence { max_n, bfile } => {
            let terms = counting::sequence(max_n).map_err(usage)?;
            if bfile {
                for (n, v) in terms.iter().enumerate() {
                    writeln!(out, "{n} {v}")?;
                }
            } else {
                let cells: Vec<String> = terms.iter().map(|v| v.to_string()).collect();
                writeln!(out, "{}", cells.join(", "))?;
            }
        }
        Command::Verify {
            max_n,
            threads,
            json,
        } => {
            if max_n > fpaths::fpath::DEFAULT_GUARD {
                return Err(usage(format!(
                    "--max-n {max_n} exceeds the enumeration limit {}",
                    fpaths::fpath::DEFAULT_GUARD
                )));
            }
            let report = verify::run_all(max_n, threads);
            if json {
                serde_json::to_writer_pretty(&mut *out, &report).map_err(std::io::Error::from)?;
                writeln!(out)?;
            } else {
                writeln!(out, "{report}")?;
            }
            if !report.all_passed() {
                return Ok(EXIT_VERIFY_FAILED);
            }
        }
    }
    Ok(EXIT_OK)
}

/// Parses each nonblank stdin line as an object of `family`.
fn for_each_object(
    family: Family,
    stdin: &mut dyn BufRead,
    mut f: impl FnMut(fpaths::Object) -> Result<(), Failure>,
) -> Result<(), Failure> {
    for (i, line) in stdin.lines().enumerate() {
        let line = line?;
        let text = line.trim_end_matches('\r');
        if text.trim().is_empty() {
            continue;
        }
        let o = family
            .parse(text)
            .map_err(|e| usage(format!("line {}: {e}", i + 1)))?;
        f(o)?;
    }
    Ok(())
}
