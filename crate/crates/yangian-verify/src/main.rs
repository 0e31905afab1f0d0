//! Command-line runner for the identity-check catalog.

use std::io::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use yangian::berezinian::{b_series, qdet, qsdet};
use yangian::{Composition, Context, Matrix, SignSequence};
use yangian_verify::{catalog, run_check, run_suite, CheckParams, Report, Status};

#[derive(Parser)]
#[command(
    name = "yangian-verify",
    about = "Run exact identity checks for truncated super Yangians",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Clone)]
struct ParamArgs {
    /// Number of even indices; with --N and no --seq selects 0^M 1^N
    #[arg(long = "M")]
    m: Option<usize>,
    /// Number of odd indices
    #[arg(long = "N")]
    n: Option<usize>,
    /// 01-sequence, e.g. 1010
    #[arg(long)]
    seq: Option<String>,
    /// Composition, e.g. 2,2
    #[arg(long)]
    mu: Option<String>,
    /// Truncation order D
    #[arg(long)]
    order: Option<usize>,
    /// Seed for the sampled checks
    #[arg(long)]
    seed: Option<u64>,
    /// Sample count override for the sampled checks
    #[arg(long)]
    samples: Option<usize>,
}

impl ParamArgs {
    fn build(&self) -> Result<CheckParams, String> {
        let seq = match &self.seq {
            None => None,
            Some(s) => Some(s.parse::<SignSequence>().map_err(|e| e.to_string())?),
        };
        if let (Some(seq), Some(m), Some(n)) = (&seq, self.m, self.n) {
            if seq.count_zeros() != m || seq.count_ones() != n {
                return Err(format!(
                    "sequence {seq} has {} zeros and {} ones, not {m} and {n}",
                    seq.count_zeros(),
                    seq.count_ones()
                ));
            }
        }
        let mu = match &self.mu {
            None => None,
            Some(s) => Some(s.parse::<Composition>().map_err(|e| e.to_string())?),
        };
        let mut params = CheckParams {
            seq,
            m: self.m,
            n: self.n,
            mu,
            order: self.order,
            samples: self.samples,
            ..CheckParams::default()
        };
        if let Some(seed) = self.seed {
            params.seed = seed;
        }
        Ok(params)
    }
}

#[derive(Subcommand)]
enum Command {
    /// List the check catalog
    List,
    /// Run one check by name
    Run {
        name: String,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Run every check matching a pattern
    Suite {
        /// Name pattern with '*' wildcards
        #[arg(long, default_value = "*")]
        filter: String,
        /// Write one JSON object per report to this path
        #[arg(long)]
        json: Option<std::path::PathBuf>,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Print an object in its canonical text form
    Show {
        what: ShowTarget,
        #[command(flatten)]
        params: ParamArgs,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ShowTarget {
    Tmatrix,
    Gauss,
    Qdet,
    Qsdet,
    Bseries,
}

fn print_report(r: &Report) {
    let status = match r.status {
        Status::Pass => "pass",
        Status::Fail => "FAIL",
        Status::Error => "ERROR",
    };
    print!("{:<34} {:>5}  [{} ms]", r.check, status, r.millis);
    println!();
    if let Some(w) = &r.witness {
        println!("    {w}");
    }
}

fn show(what: ShowTarget, params: &ParamArgs) -> Result<(), String> {
    let p = params.build()?;
    let seq = match (&p.seq, p.m, p.n) {
        (Some(seq), _, _) => seq.clone(),
        (None, None, None) => "01".parse().unwrap(),
        (None, m, n) => SignSequence::standard(m.unwrap_or(0), n.unwrap_or(0)),
    };
    let order = p.order.unwrap_or(3);
    let ctx = Context::from_seq(seq, order).map_err(|e| e.to_string())?;
    match what {
        ShowTarget::Tmatrix => {
            println!("{}", Matrix::t_matrix(&ctx));
        }
        ShowTarget::Gauss => {
            let mu =
                p.mu.clone()
                    .unwrap_or_else(|| Composition::finest(ctx.size()));
            let g = Matrix::t_matrix(&ctx)
                .gauss_decompose(&mu)
                .map_err(|e| e.to_string())?;
            for a in 1..=mu.len() {
                println!("D[{a}] =");
                println!("{}", g.d_block(a));
            }
            println!("E =");
            println!("{}", g.e());
            println!("F =");
            println!("{}", g.f());
        }
        ShowTarget::Qdet => {
            let d = qdet(&Matrix::t_matrix(&ctx)).map_err(|e| e.to_string())?;
            println!("{d}");
        }
        ShowTarget::Qsdet => {
            println!("{}", qsdet(&ctx).map_err(|e| e.to_string())?);
        }
        ShowTarget::Bseries => {
            println!("{}", b_series(&ctx).map_err(|e| e.to_string())?);
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    // die quietly when the output pipe closes (e.g. `list | head`)
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match cli.command {
        Command::List => {
            for c in catalog() {
                println!("{}", c.name);
                println!("    claim: {}", c.claim);
                println!("    grid:  {}", c.grid);
            }
            ExitCode::SUCCESS
        }
        Command::Run { name, params } => match params.build() {
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
            Ok(p) => {
                let report = run_check(&name, &p);
                print_report(&report);
                if report.passed() {
                    ExitCode::SUCCESS
                } else {
                    ExitCode::FAILURE
                }
            }
        },
        Command::Suite {
            filter,
            json,
            params,
        } => match params.build() {
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
            Ok(p) => {
                let reports = run_suite(&filter, &p);
                for r in &reports {
                    print_report(r);
                }
                let pass = reports.iter().filter(|r| r.passed()).count();
                println!("{pass}/{} checks passed", reports.len());
                if let Some(path) = json {
                    let mut out = String::new();
                    for r in &reports {
                        out.push_str(&r.json_line());
                        out.push('\n');
                    }
                    if let Err(e) =
                        std::fs::File::create(&path).and_then(|mut f| f.write_all(out.as_bytes()))
                    {
                        eprintln!("error writing {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                }
                if reports.iter().all(|r| r.passed()) {
                    ExitCode::SUCCESS
                } else {
                    ExitCode::FAILURE
                }
            }
        },
        Command::Show { what, params } => match show(what, &params) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(2)
            }
        },
    }
}
