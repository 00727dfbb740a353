use clap::{Parser, Subcommand, ValueEnum};
use kacforge::config::{parse_seed, OutputFormat, RunConfig};
use kacforge::io::{exit_code_for, load_config, run_pipeline, Command, Shadow};
use std::path::PathBuf;
use std::process::ExitCode;

/// Exact computations for finite bicrossed and crossed-product quantum groups.
///
/// Pair arguments are TOML files or `builtin:<name>`. The seed comes from
/// `--seed`, then `KACFORGE_SEED`, then the config file, then 0xC0FFEE.
#[derive(Parser)]
#[command(name = "kacforge", version)]
struct Cli {
    /// TOML file with a `[config]` table.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Seed for every randomized step (decimal or 0x-hex).
    #[arg(long, global = true, value_parser = seed)]
    seed: Option<u64>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn seed(s: &str) -> Result<u64, String> {
    parse_seed(s).ok_or_else(|| format!("`{s}` is not a seed"))
}

#[derive(Subcommand)]
enum Cmd {
    /// Load and validate group, pair, ring or measure files.
    Validate {
        #[arg(required = true)]
        files: Vec<String>,
    },
    /// Build the algebra of a pair and check the Hopf and Kac axioms.
    Build {
        pair: String,
        /// Include the structure constants.
        #[arg(long)]
        dump: bool,
    },
    /// Irreducible corepresentations and the Peter-Weyl check.
    Irreps { pair: String },
    /// Fusion rules of a pair, or of a ring file or built-in ring name.
    Fusion { target: String },
    /// Intrinsic group and spectrum against their closed forms.
    Invariants { pair: String },
    /// Base and deformed algebras of a deformation recipe.
    Deform { pair: String },
    /// Crossed-product checks for a pair with trivial right action.
    Crossed {
        pair: String,
        /// Random dual elements per Fourier check.
        #[arg(long, default_value_t = 10)]
        draws: usize,
    },
    /// Audit closed-form claims against the oracles.
    Audit { pair: String },
    /// Finite shadows of approximation properties.
    #[command(subcommand)]
    Shadow(ShadowCmd),
}

#[derive(Subcommand)]
enum ShadowCmd {
    /// Chebyshev states of the free orthogonal fusion ring.
    Chebyshev {
        #[arg(long = "N")]
        n: i64,
        #[arg(long)]
        t: String,
        #[arg(long, default_value_t = 10)]
        cutoff: usize,
        /// Also report the first k with value below this threshold.
        #[arg(long)]
        eps: Option<String>,
    },
    /// Total-variation obstruction for measures avoiding the identity.
    Obstruction {
        /// Group file or cyclic:n, symmetric:n, dihedral:n, sl:n:p.
        group: String,
        #[arg(long, default_value_t = 4)]
        grid: u64,
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
    /// Total-variation distance of two measures.
    Tv { mu: String, nu: String },
    /// Pushforward of a measure on G along one alpha_gamma.
    Pushforward {
        measure: String,
        pair: String,
        #[arg(long)]
        gamma: String,
    },
    /// Block norms of the Fourier transform of a measure.
    MeasureFourier { measure: String },
    /// Abelianization of SL(2, Z) from its amalgam presentation.
    Sl2z,
    /// Center of SL(n, p) against gcd(n, p - 1).
    Center {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: u64,
    },
}

impl From<Cmd> for Command {
    fn from(c: Cmd) -> Self {
        match c {
            Cmd::Validate { files } => Command::Validate { files },
            Cmd::Build { pair, dump } => Command::Build { pair, dump },
            Cmd::Irreps { pair } => Command::Irreps { pair },
            Cmd::Fusion { target } => Command::Fusion { target },
            Cmd::Invariants { pair } => Command::Invariants { pair },
            Cmd::Deform { pair } => Command::Deform { pair },
            Cmd::Crossed { pair, draws } => Command::Crossed { pair, draws },
            Cmd::Audit { pair } => Command::Audit { pair },
            Cmd::Shadow(s) => Command::Shadow(match s {
                ShadowCmd::Chebyshev { n, t, cutoff, eps } => Shadow::Chebyshev { n, t, cutoff, eps },
                ShadowCmd::Obstruction { group, grid, samples } => Shadow::Obstruction { group, grid, samples },
                ShadowCmd::Tv { mu, nu } => Shadow::Tv { mu, nu },
                ShadowCmd::Pushforward { measure, pair, gamma } => Shadow::Pushforward { measure, pair, gamma },
                ShadowCmd::MeasureFourier { measure } => Shadow::MeasureFourier { measure },
                ShadowCmd::Sl2z => Shadow::Sl2z,
                ShadowCmd::Center { n, p } => Shadow::Center { n, p },
            }),
        }
    }
}

fn config(cli: &Cli) -> kacforge::Result<RunConfig> {
    let mut cfg = match &cli.config {
        Some(p) => load_config(p)?,
        None => RunConfig::default(),
    }
    .with_env_seed();
    if let Some(s) = cli.seed {
        cfg.seed = s;
    }
    if let Some(f) = cli.format {
        cfg.format = match f {
            Format::Text => OutputFormat::Text,
            Format::Json => OutputFormat::Json,
        };
    }
    Ok(cfg)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = config(&cli).and_then(|cfg| {
        let cmd: Command = cli.command.into();
        run_pipeline(&cmd, &cfg).map(|r| (r, cfg.format))
    });
    match result {
        Ok((report, format)) => {
            match format {
                OutputFormat::Text => print!("{}", report.to_text()),
                OutputFormat::Json => println!("{}", report.to_json()),
            }
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e) as u8)
        }
    }
}
