use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use sadic_cli::{
    cmd_catalog, cmd_cohomology, cmd_complex, cmd_info, cmd_language, cmd_padic_candidates,
    cmd_padic_check_chacon, cmd_padic_digits, CliError, Report, Source,
};

#[derive(Parser)]
#[command(
    name = "sadic",
    version,
    about = "Cohomology of mixed substitution tiling spaces"
)]
struct Cli {
    /// Print the machine-readable report instead of the table.
    #[arg(long, global = true)]
    json: bool,
    /// Exit with code 2 when any result is a lower bound or undetermined.
    #[arg(long, global = true)]
    strict: bool,
    /// Also write the machine-readable report to this file.
    #[arg(long, global = true)]
    report: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SourceArgs {
    /// Catalog name or path to a system file.
    system: String,
    /// Chacon 3-adic parameter: a rational or a directive.
    #[arg(long)]
    alpha: Option<String>,
    /// Directive override, e.g. "prefix (1) period (0 2)".
    #[arg(long)]
    directive: Option<String>,
    /// Alphabet size for arnoux-rauzy.
    #[arg(long)]
    d: Option<usize>,
}

impl SourceArgs {
    fn source(&self) -> Source {
        Source {
            name: self.system.clone(),
            alpha: self.alpha.clone(),
            directive: self.directive.clone(),
            d: self.d,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// List the built-in systems.
    Catalog,
    /// Rules, matrices, primitivity and degeneracy.
    Info {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, default_value_t = 16)]
        window: usize,
    },
    /// Admitted words of a given length.
    Language {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, default_value_t = 0)]
        level: usize,
        #[arg(long, default_value_t = 2)]
        length: usize,
        #[arg(long, env = "SADIC_DEPTH", default_value_t = 12)]
        depth: usize,
    },
    /// The Barge-Diamond complex at one level.
    Complex {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, default_value_t = 0)]
        level: usize,
        #[arg(long, env = "SADIC_DEPTH", default_value_t = 12)]
        depth: usize,
        /// Use all l^2 vertex edges.
        #[arg(long)]
        universal: bool,
        /// Write Graphviz DOT here.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// First cohomology from the tower of complexes.
    Cohomology {
        #[command(flatten)]
        source: SourceArgs,
        /// Number of stages.
        #[arg(long, env = "SADIC_DEPTH", default_value_t = 12)]
        depth: usize,
        #[arg(long, default_value_t = 12)]
        language_depth: usize,
        #[arg(long)]
        waive_primitivity: bool,
    },
    /// 3-adic tools.
    Padic {
        #[command(subcommand)]
        command: PadicCommand,
    },
}

#[derive(Subcommand)]
enum PadicCommand {
    /// Digits of a rational 3-adic integer.
    Digits {
        value: String,
        #[arg(long, default_value_t = 20)]
        n: usize,
    },
    /// Candidate isomorphs of G_alpha.
    Candidates {
        /// A rational, or "digits 2 1 1 ...".
        value: String,
        #[arg(long, default_value_t = 2)]
        bound: i64,
        #[arg(long, default_value_t = 20)]
        n: usize,
    },
    /// The conjugation identities relating the Chacon matrices to B_eps.
    CheckChacon,
}

fn run(cli: &Cli) -> Result<Report, CliError> {
    match &cli.command {
        Command::Catalog => Ok(cmd_catalog()),
        Command::Info { source, window } => cmd_info(&source.source(), *window),
        Command::Language {
            source,
            level,
            length,
            depth,
        } => cmd_language(&source.source(), *level, *length, *depth),
        Command::Complex {
            source,
            level,
            depth,
            universal,
            dot,
        } => {
            let (report, text) =
                cmd_complex(&source.source(), *level, *depth, *universal, dot.is_some())?;
            if let (Some(path), Some(text)) = (dot, text) {
                std::fs::write(path, text)
                    .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
            }
            Ok(report)
        }
        Command::Cohomology {
            source,
            depth,
            language_depth,
            waive_primitivity,
        } => cmd_cohomology(
            &source.source(),
            *depth,
            *language_depth,
            *waive_primitivity,
        ),
        Command::Padic { command } => match command {
            PadicCommand::Digits { value, n } => cmd_padic_digits(value, *n),
            PadicCommand::Candidates { value, bound, n } => cmd_padic_candidates(value, *bound, *n),
            PadicCommand::CheckChacon => cmd_padic_check_chacon(),
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let result = run(&cli).and_then(|mut report| {
        report.timing_ms = Some(start.elapsed().as_millis() as u64);
        if let Some(path) = &cli.report {
            std::fs::write(path, report.to_json())
                .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        }
        let text = if cli.json {
            report.to_json() + "\n"
        } else {
            report.render_table()
        };
        // a closed pipe (e.g. `| head`) is not an error worth reporting
        let _ = std::io::stdout().lock().write_all(text.as_bytes());
        report.check_strict(cli.strict)?;
        Ok(report)
    });
    match result {
        Ok(_) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
