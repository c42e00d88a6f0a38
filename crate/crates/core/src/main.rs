use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use omega_entropy::channel::LengthPrefix;
use omega_entropy::cli::{
    cmd_analyze, cmd_channel, cmd_converge, parse_prob_list, AnalyzeOptions, ChannelOptions,
    ConvergeOptions, UnitArg,
};
use omega_entropy::report::{render, Format, Layout, Record};
use omega_entropy::{Error, ProbDist};

/// Finite-sample entropy, Shannon entropy and channel-utilization bounds.
///
/// Exit status: 0 on success, 1 on input errors, 2 on numeric-domain errors.
#[derive(Debug, Parser)]
#[command(name = "omega-entropy", version)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    /// Entropy unit for the unit-dependent columns.
    #[arg(long, global = true, value_enum, default_value_t = UnitArg::Bits)]
    unit: UnitArg,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Entropy and channel bounds for files (or stdin) as i.i.d. symbol streams.
    Analyze(AnalyzeArgs),
    /// H_Ω versus H_S over a log-spaced range of sample sizes.
    Converge(ConvergeArgs),
    /// Utilization and overhead bounds for an N-bit message.
    Channel(ChannelArgs),
}

#[derive(Debug, Args)]
struct AnalyzeArgs {
    /// Input files; `-` or nothing reads stdin.
    paths: Vec<PathBuf>,

    /// Count bits (M = 2) instead of bytes (M = 256).
    #[arg(long)]
    bits: bool,

    /// Use only the observed symbols as the alphabet.
    #[arg(long)]
    compact: bool,

    /// Size the naive length prefix as ceil(log2 N) whole bits.
    #[arg(long)]
    ceil_log: bool,
}

#[derive(Debug, Args)]
struct ConvergeArgs {
    /// Number of outcomes for the uniform source.
    #[arg(long, short = 'm', default_value_t = 2)]
    m: usize,

    /// Comma-separated source distribution; overrides -m.
    #[arg(long, short = 'p')]
    p: Option<String>,

    #[arg(long, default_value_t = 2)]
    n_min: u64,

    #[arg(long, default_value_t = 4096)]
    n_max: u64,

    /// Number of grid points.
    #[arg(long, default_value_t = 12)]
    steps: usize,
}

#[derive(Debug, Args)]
struct ChannelArgs {
    /// Message length N in symbols (bits for the default binary source).
    n: u64,

    /// Comma-separated source distribution; a fair binary source by default.
    #[arg(long, short = 'p')]
    p: Option<String>,

    /// Header size of a real frame. The real overhead is
    /// header / (header + N); an Ethernet frame with a 1500-byte payload
    /// and 26-byte header gives 208 / 12208 ≈ 0.017.
    #[arg(long)]
    header_bits: Option<u64>,

    /// Size the naive length prefix as ceil(log2 N) whole bits.
    #[arg(long)]
    ceil_log: bool,
}

fn prefix(ceil_log: bool) -> LengthPrefix {
    if ceil_log {
        LengthPrefix::WholeBits
    } else {
        LengthPrefix::Exact
    }
}

fn parse_p(p: Option<&str>) -> Result<Option<ProbDist>, Error> {
    p.map(parse_prob_list).transpose()
}

fn run(cli: Cli) -> Result<String, Error> {
    let (records, layout): (Vec<Record>, Layout) = match cli.command {
        Command::Analyze(a) => {
            let opts = AnalyzeOptions {
                bits: a.bits,
                compact: a.compact,
                prefix: prefix(a.ceil_log),
                unit: cli.unit,
            };
            let stdin_only = a.paths.is_empty();
            let paths = if stdin_only {
                vec![PathBuf::from("-")]
            } else {
                a.paths
            };
            let records = paths
                .iter()
                .map(|path| {
                    if path.as_os_str() == "-" {
                        cmd_analyze("-", io::stdin().lock(), &opts)
                    } else {
                        let name = path.display().to_string();
                        let file =
                            File::open(path).map_err(|e| Error::Io(format!("{name}: {e}")))?;
                        cmd_analyze(&name, io::BufReader::new(file), &opts)
                    }
                })
                .collect::<Result<Vec<_>, _>>()?;
            (records, Layout::Vertical)
        }
        Command::Converge(c) => {
            let opts = ConvergeOptions {
                m: c.m,
                p: parse_p(c.p.as_deref())?,
                n_min: c.n_min,
                n_max: c.n_max,
                steps: c.steps,
                unit: cli.unit,
            };
            (cmd_converge(&opts)?, Layout::Columns)
        }
        Command::Channel(c) => {
            let opts = ChannelOptions {
                n: c.n,
                p: parse_p(c.p.as_deref())?,
                header_bits: c.header_bits,
                prefix: prefix(c.ceil_log),
            };
            (vec![cmd_channel(&opts)?], Layout::Vertical)
        }
    };
    render(&records, cli.format, layout)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(out) => {
            let mut stdout = io::stdout().lock();
            if stdout
                .write_all(out.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_numeric_domain() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
