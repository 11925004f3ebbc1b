use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use isopar::cli::{
    cmd_classify, cmd_enumerate, cmd_fiber, cmd_fkm_build, cmd_fkm_curvature, cmd_fkm_verify,
    exit, CmdErr, CmdOut, OutputFormat, RunConfig,
};

#[derive(Parser)]
#[command(
    name = "isopar",
    version,
    about = "Clifford systems, quartic isoparametric polynomials, curvature spectra, \
             and multiplicity classification"
)]
struct Cli {
    /// RNG seed for all sampling commands.
    #[arg(long, global = true, env = "ISOPAR_SEED", default_value_t = 0)]
    seed: u64,

    /// Number of sample points for verify/curvature.
    #[arg(long, global = true, default_value_t = 100)]
    samples: usize,

    /// Relative tolerance for the Cartan-Münzner identity checks.
    #[arg(long = "tol-cm", global = true, default_value_t = 1e-9)]
    tol_cm: f64,

    /// Eigenvalue clustering tolerance.
    #[arg(long = "tol-cluster", global = true, default_value_t = 1e-5)]
    tol_cluster: f64,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Output format (csv is available for `enumerate` only).
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FkmAction {
    /// Export the Clifford matrices.
    Build,
    /// Verify the Cartan-Münzner identities at seeded random points.
    Verify,
    /// Sample a level set and report the principal-curvature spectrum.
    Curvature,
}

#[derive(Subcommand)]
enum Command {
    /// Test a dimension triple (n; m_+, m_-) for admissibility.
    Classify {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        m_plus: u64,
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        m_minus: u64,
    },
    /// Work with the Clifford family of parameters (m, k).
    Fkm {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        m: u64,
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        k: u64,
        #[arg(value_enum)]
        action: FkmAction,
        /// Level c of the hypersurface F^-1(c), required for `curvature`.
        #[arg(long)]
        level: Option<f64>,
    },
    /// Fiber invariants for normal-sphere dimensions (m_+, m_-).
    Fiber {
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        m_plus: u64,
        #[arg(value_parser = clap::value_parser!(u64).range(1..))]
        m_minus: u64,
        #[arg(long)]
        twist_plus: bool,
        #[arg(long)]
        twist_minus: bool,
        #[arg(long, default_value_t = 20)]
        max_degree: u64,
    },
    /// Enumerate Clifford families up to an ambient sphere dimension.
    Enumerate {
        #[arg(long)]
        max_dim: u64,
        /// Include the Stolz verdicts.
        #[arg(long)]
        stolz: bool,
        /// Include the (m, k) sources.
        #[arg(long)]
        fkm: bool,
    },
}

fn dispatch(cli: &Cli) -> Result<CmdOut, CmdErr> {
    let cfg = RunConfig {
        seed: cli.seed,
        samples: cli.samples,
        tol_cm: cli.tol_cm,
        tol_cluster: cli.tol_cluster,
    };
    if cli.format == Format::Csv && !matches!(cli.command, Command::Enumerate { .. }) {
        return Err(CmdErr {
            code: exit::INPUT,
            message: "csv output is only available for `enumerate`".into(),
        });
    }
    match cli.command {
        Command::Classify { n, m_plus, m_minus } => cmd_classify(n, m_plus, m_minus),
        Command::Fkm { m, k, action, level } => match action {
            FkmAction::Build => cmd_fkm_build(m, k),
            FkmAction::Verify => cmd_fkm_verify(m, k, &cfg),
            FkmAction::Curvature => {
                let level = level.ok_or_else(|| CmdErr {
                    code: exit::INPUT,
                    message: "curvature requires --level".into(),
                })?;
                cmd_fkm_curvature(m, k, level, &cfg)
            }
        },
        Command::Fiber {
            m_plus,
            m_minus,
            twist_plus,
            twist_minus,
            max_degree,
        } => cmd_fiber(m_plus, m_minus, twist_plus, twist_minus, max_degree),
        Command::Enumerate { max_dim, stolz, fkm } => {
            let format = match cli.format {
                Format::Json => OutputFormat::Json,
                Format::Csv => OutputFormat::Csv,
            };
            cmd_enumerate(max_dim, stolz, fkm, format)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(out) => {
            if let Some(path) = &cli.out {
                if let Err(e) = fs::write(path, format!("{}\n", out.body)) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(exit::INPUT);
                }
            } else {
                println!("{}", out.body);
            }
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
