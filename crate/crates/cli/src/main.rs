use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};

use iwahori_cli::{
    cmd_act, cmd_corollary, cmd_oracle, cmd_partition, cmd_relations, cmd_theorem, parse_point, Format, Report,
    RunConfig,
};
use iwahori_core::CharacterCase;

#[derive(Parser)]
#[command(
    name = "iwahori",
    version,
    about = "Iwahori-Hecke module computations for GL_3 in characteristic p"
)]
struct Cli {
    /// Coefficient characteristic
    #[arg(long, global = true, default_value_t = 2)]
    p: u32,

    /// Residue field order of the local-field oracle (prime)
    #[arg(long, global = true, default_value_t = 2)]
    q: u32,

    /// iwahori | semi-regular | regular (default: all)
    #[arg(long, global = true)]
    case: Option<CharacterCase>,

    /// The constant c, 0 or -1 (default: both)
    #[arg(long, global = true, allow_negative_numbers = true)]
    c: Option<i64>,

    /// Window bound B; corollary accepts a comma-separated list
    #[arg(long, global = true, value_delimiter = ',')]
    window: Vec<i64>,

    /// Oracle precision d
    #[arg(long, global = true, default_value_t = 8)]
    precision: usize,

    /// Seed for sampled oracle checks
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Write the report here instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that the sets S_w partition the window (default B = 5)
    Partition {
        #[arg(long, default_value_t = 3)]
        n: usize,
    },
    /// Apply an operator word to a module vector
    Act {
        /// e.g. "Tg.Tw1", "[Tg Tw1]^2", "Tt(-1,0)"; empty for the identity
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        word: String,
        /// e.g. "id:(-2,-1)" or "2*123:(-2,-1) + 213:(0,-1)"
        #[arg(long, allow_hyphen_values = true)]
        basis: String,
    },
    /// Verify the presentation relations and composites on the window basis (default B = 6)
    Relations,
    /// Transport f_{Id,a} to every proper f_{Id,a*} (default B = 6)
    Theorem {
        #[arg(long, allow_hyphen_values = true, requires = "to")]
        from: Option<String>,
        #[arg(long, allow_hyphen_values = true, requires = "from")]
        to: Option<String>,
    },
    /// Windowed certificate that M meets M'' trivially (default B = 8)
    Corollary {
        #[arg(long, default_value = "(-3,-2)", allow_hyphen_values = true)]
        generator: String,
    },
    /// Brute-force checks over F_q((t)) (default B = 2)
    Oracle {
        /// Verify only the claims of this file
        #[arg(long)]
        claims: Option<PathBuf>,
    },
}

fn run(cli: Cli) -> Result<Report> {
    let cfg = RunConfig {
        p: cli.p,
        q: cli.q,
        case: cli.case,
        c: cli.c,
        windows: cli.window,
        precision: cli.precision,
        seed: cli.seed,
    };
    cfg.validate()?;
    match cli.command {
        Command::Partition { n } => cmd_partition(&cfg, n),
        Command::Act { word, basis } => cmd_act(&cfg, &word, &basis),
        Command::Relations => cmd_relations(&cfg),
        Command::Theorem { from, to } => {
            let pair = match (from, to) {
                (Some(a), Some(b)) => Some((parse_point(&a)?, parse_point(&b)?)),
                _ => None,
            };
            cmd_theorem(&cfg, pair)
        }
        Command::Corollary { generator } => cmd_corollary(&cfg, &parse_point(&generator)?),
        Command::Oracle { claims } => {
            let text = claims
                .map(|p| std::fs::read_to_string(&p).with_context(|| format!("reading {}", p.display())))
                .transpose()?;
            cmd_oracle(&cfg, text.as_deref())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.format;
    let out = cli.out.clone();
    let result = run(cli).and_then(|report| {
        let text = report.render(format)?;
        match &out {
            Some(path) => std::fs::write(path, &text).with_context(|| format!("writing {}", path.display()))?,
            None => print!("{text}"),
        }
        Ok(report.ok())
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
