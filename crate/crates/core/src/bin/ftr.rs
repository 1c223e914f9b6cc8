use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use ftr_core::report::{emit, parse_tolerance, run, Command, Format, RunConfig, DEFAULT_SIG};

#[derive(Parser)]
#[command(
    name = "ftr",
    version,
    about = "Reproduce Eddington's derivation of the physical constants"
)]
struct Cli {
    /// Constants dataset (.cst); the built-in modern set when omitted
    #[arg(long, global = true, env = "FTR_CONSTANTS")]
    constants: Option<PathBuf>,

    /// Working precision in significant decimal digits
    #[arg(long, global = true, default_value_t = 50)]
    precision: u32,

    #[arg(long, global = true, default_value = "table", value_parser = ["table", "csv", "json"])]
    format: String,

    #[arg(long, global = true, default_value_t = 7)]
    seed: u64,

    /// Tolerance override, `row=value` or `exact|vintage|magnitude=value`
    #[arg(long = "tolerance", global = true, value_parser = parse_tolerance_arg)]
    tolerances: Vec<(String, f64)>,

    /// Significant digits shown in reports
    #[arg(long, global = true, default_value_t = DEFAULT_SIG)]
    sig: usize,

    #[command(subcommand)]
    command: Sub,
}

fn parse_tolerance_arg(s: &str) -> Result<(String, f64), String> {
    parse_tolerance(s).map_err(|e| e.to_string())
}

#[derive(Subcommand)]
enum Sub {
    /// Run the full constants chain
    Derive,
    /// Solve for N and R0 from R0/N and the range constant
    SolveCosmic {
        /// R0/N with unit, e.g. "3.95e-53 cm"; computed from G m_h / pi c^2 when omitted
        #[arg(long)]
        ratio: Option<String>,
        #[arg(long, default_value = "1.9e-13 cm")]
        k: String,
    },
    /// Monte Carlo check of the centroid scaling
    McVerify {
        #[arg(long, default_value_t = 10_000)]
        n: u64,
        #[arg(long, default_value_t = 10_000)]
        trials: u64,
        #[arg(long, default_value_t = 1.0)]
        r0: f64,
    },
    /// Solve the zoo puzzle by exhaustion
    Zoo,
    /// Chain under the paper-era constants beside the chosen set
    Compare,
    /// Every check in one report
    ReportAll,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command = match cli.command {
        Sub::Derive => Command::Derive,
        Sub::SolveCosmic { ratio, k } => Command::SolveCosmic { ratio, k },
        Sub::McVerify { n, trials, r0 } => Command::McVerify { n, trials, r0 },
        Sub::Zoo => Command::Zoo,
        Sub::Compare => Command::Compare,
        Sub::ReportAll => Command::ReportAll,
    };
    let format: Format = cli.format.parse().expect("restricted by clap");
    let config = RunConfig {
        constants: cli.constants,
        precision: cli.precision,
        tolerances: cli.tolerances.into_iter().collect::<BTreeMap<_, _>>(),
        format,
        seed: cli.seed,
        sig: cli.sig,
        command,
    };
    let result = run(&config).and_then(|r| Ok((emit(&r, format)?, r.exit_code())));
    match result {
        Ok((text, code)) => {
            let mut out = std::io::stdout().lock();
            if out
                .write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .is_err()
            {
                return ExitCode::from(2);
            }
            ExitCode::from(code as u8)
        }
        Err(e) => {
            eprintln!("ftr: {e}");
            ExitCode::from(2)
        }
    }
}
