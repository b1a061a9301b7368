//! The `multideg` command line.
//!
//! Exit status: 0 on success, 1 for bad input, 2 when two engines disagree.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;

use crate::coefficients::{asym_multinomial, odd_double_factorial};
use crate::compositions::Composition;
use crate::error::{Error, Result};
use crate::genfun::GeneratingFunctions;
use crate::multidegree::compute_table;
use crate::parking::{
    count_cpf, enumerate_all_cpf, enumerate_cpf, insert, remove, Insertion, ParkingFunction,
    PointedParkingFunction, Removal,
};
use crate::verify::{run_suites, Suite};

#[derive(Debug, Parser)]
#[command(name = "multideg", version, about = "Multidegrees of M_{0,n} and column-restricted parking functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the multidegree table and the cone degree for n marks.
    Multidegree {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = TableFormat::Table)]
        format: TableFormat,
    },
    /// Print the asymmetric multinomial <<n;k>>.
    Coeff {
        #[arg(long)]
        k: String,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Print the sum of all multidegrees and check it against (2(n-3)-1)!!.
    ConeDegree {
        #[arg(long)]
        n: usize,
    },
    /// Count, list or classify column-restricted parking functions.
    Cpf {
        #[command(subcommand)]
        action: CpfAction,
    },
    /// Insert n+1 into a parking function at a lattice point.
    Insert {
        #[arg(long, value_enum)]
        algorithm: InsertArg,
        #[command(flatten)]
        input: FileArg,
        #[arg(long)]
        point: usize,
        #[arg(long)]
        render: bool,
    },
    /// Remove the largest label from a parking function.
    Remove {
        #[arg(long, value_enum)]
        algorithm: RemoveArg,
        #[command(flatten)]
        input: FileArg,
    },
    /// Print the generating function F_n or evaluate it.
    Genfun {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        eval: Option<String>,
    },
    /// Run the cross-engine checks.
    Verify {
        #[arg(long)]
        max_n: usize,
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

#[derive(Debug, Subcommand)]
enum CpfAction {
    Count {
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        heights: Option<String>,
    },
    Enumerate {
        #[arg(long)]
        heights: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        render: bool,
    },
    Classify {
        #[command(flatten)]
        input: FileArg,
    },
}

#[derive(Debug, Args)]
struct FileArg {
    /// JSON file, or `-` for standard input.
    #[arg(long)]
    file: PathBuf,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TableFormat {
    Table,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum InsertArg {
    Iota,
    IotaPrime,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum RemoveArg {
    Nu,
    NuPrime,
}

/// Parses `argv` (including the program name), runs the command and
/// returns the exit status.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if e.is_internal() {
                2
            } else {
                1
            }
        }
    }
}

fn io_err(e: io::Error) -> Error {
    Error::Domain(format!("i/o: {e}"))
}

fn read_input(path: &PathBuf) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(io_err)?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| Error::Domain(format!("{}: {e}", path.display())))
}

fn read_pf(input: &FileArg) -> Result<ParkingFunction> {
    serde_json::from_str(&read_input(&input.file)?).map_err(|e| Error::Parse(e.to_string()))
}

fn check_n(given: Option<usize>, inferred: usize) -> Result<()> {
    match given {
        Some(n) if n != inferred => Err(Error::Domain(format!(
            "--n {n} does not match the inferred n = {inferred}"
        ))),
        _ => Ok(()),
    }
}

fn square(k: &Composition) -> Result<usize> {
    if k.len() != k.total() as usize {
        return Err(Error::Shape(format!(
            "{k} has length {} but sums to {}",
            k.len(),
            k.total()
        )));
    }
    Ok(k.len())
}

fn to_json<T: serde::Serialize>(v: &T) -> Result<String> {
    serde_json::to_string(v).map_err(|e| Error::Parse(e.to_string()))
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32> {
    let mut say = |s: String| writeln!(out, "{s}").map_err(io_err);
    match command {
        Command::Multidegree { n, format } => {
            let table = compute_table(n)?;
            match format {
                TableFormat::Table => say(table.to_string())?,
                TableFormat::Json => say(table.to_json().to_string())?,
                TableFormat::Csv => say(table.to_csv()?.trim_end().to_string())?,
            }
        }
        Command::Coeff { k, n } => {
            let k: Composition = k.parse()?;
            let m = square(&k)?;
            check_n(n, m)?;
            say(asym_multinomial(m as u32, &k)?.to_string())?;
        }
        Command::ConeDegree { n } => {
            let total = compute_table(n)?.total();
            let expected = odd_double_factorial((n - 3) as u64);
            let ok = total == expected;
            say(total.to_string())?;
            say(format!(
                "check (2*{}-1)!! = {expected}: {}",
                n - 3,
                if ok { "PASS" } else { "FAIL" }
            ))?;
            if !ok {
                return Ok(2);
            }
        }
        Command::Cpf { action } => match action {
            CpfAction::Count { n, heights } => match heights {
                Some(h) => {
                    let k: Composition = h.parse()?;
                    let m = square(&k)?;
                    check_n(n, m)?;
                    say(count_cpf(m, &k)?.to_string())?;
                }
                None => {
                    let n = n.ok_or_else(|| Error::Domain("cpf count needs --n or --heights".into()))?;
                    say(enumerate_all_cpf(n)?.len().to_string())?;
                }
            },
            CpfAction::Enumerate { heights, n, render } => {
                let k: Composition = heights.parse()?;
                let m = square(&k)?;
                check_n(n, m)?;
                for pf in enumerate_cpf(m, &k)? {
                    if render {
                        say(format!("{}\n{}\n", to_json(&pf)?, pf.render()))?;
                    } else {
                        say(to_json(&pf)?)?;
                    }
                }
            }
            CpfAction::Classify { input } => {
                let pf = read_pf(&input)?;
                say(pf.classify().to_string())?;
            }
        },
        Command::Insert {
            algorithm,
            input,
            point,
            render,
        } => {
            let pp = PointedParkingFunction::new(read_pf(&input)?, point)?;
            let algorithm = match algorithm {
                InsertArg::Iota => Insertion::Iota,
                InsertArg::IotaPrime => Insertion::IotaPrime,
            };
            let q = insert(&pp, algorithm)?;
            say(to_json(&q)?)?;
            if render {
                say(q.render())?;
            }
        }
        Command::Remove { algorithm, input } => {
            let q = read_pf(&input)?;
            let algorithm = match algorithm {
                RemoveArg::Nu => Removal::Nu,
                RemoveArg::NuPrime => Removal::NuPrime,
            };
            say(to_json(&remove(&q, algorithm)?)?)?;
        }
        Command::Genfun { n, eval } => {
            let f = GeneratingFunctions::new().f_n(n)?;
            match eval {
                None => say(f.to_string())?,
                Some(list) => {
                    let point = list
                        .split(',')
                        .map(|t| {
                            t.trim()
                                .parse::<BigInt>()
                                .map_err(|e| Error::Parse(format!("bad value {t:?}: {e}")))
                        })
                        .collect::<Result<Vec<_>>>()?;
                    say(f.eval(&point)?.to_string())?;
                }
            }
        }
        Command::Verify { max_n, suite } => {
            let suites: Vec<Suite> = match suite.as_str() {
                "all" => Suite::ALL.to_vec(),
                s => vec![s.parse()?],
            };
            let reports = run_suites(&suites, max_n);
            for r in &reports {
                say(r.to_string())?;
            }
            if !reports.iter().all(|r| r.passed()) {
                return Ok(2);
            }
        }
    }
    Ok(0)
}
