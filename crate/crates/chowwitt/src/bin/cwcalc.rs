use chowwitt::error::CwResult;
use chowwitt::graded::Twist;
use chowwitt::report::{self, Report, Theory};
use chowwitt::scalar::FieldModel;
use chowwitt::spaces::parse_space;
use clap::{Parser, Subcommand, ValueEnum};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "cwcalc", about = "Chow-Witt rings of projective and classifying spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Base field: C, R or Fq for an odd prime power q.
    #[arg(long, global = true, default_value = "C")]
    field: String,
    #[arg(long = "max-deg", global = true, default_value_t = 6)]
    max_deg: u32,
    /// Only this twist, as bits such as `01`.
    #[arg(long, global = true)]
    twist: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Per-bidegree groups, generators and reduction indices.
    Compute {
        space: String,
        /// chw or hi
        #[arg(long, default_value = "chw")]
        theory: String,
    },
    /// Derived rings against the stored presentations.
    Compare { space: String },
    /// Kunneth verdicts; without a space, the matrix over all parity cases.
    Kunneth { space: Option<String> },
    /// Cycle class sweep against the cellular model of the real points.
    Oracle { space: String },
    /// Recompute every golden table.
    Regress {
        /// Rewrite the golden files instead of checking them.
        #[arg(long)]
        bless: bool,
    },
}

fn run(cli: &Cli) -> CwResult<Report> {
    let field = FieldModel::parse(&cli.field)?;
    let bound = cli.max_deg;
    match &cli.command {
        Command::Compute { space, theory } => {
            let twist = cli.twist.as_deref().map(Twist::parse_bits).transpose()?;
            report::compute(&parse_space(space)?, &field, bound, Theory::parse(theory)?, twist.as_ref())
        }
        Command::Compare { space } => report::compare_space(&parse_space(space)?, &field, bound),
        Command::Kunneth { space } => {
            let expr = space.as_deref().map(parse_space).transpose()?;
            report::kunneth(expr.as_ref(), &field, bound)
        }
        Command::Oracle { space } => report::oracle(&parse_space(space)?, &field, bound),
        Command::Regress { bless } => {
            let dir = report::golden_dir();
            if *bless {
                let n = report::write_goldens(&dir)?;
                eprintln!("wrote {n} tables to {}", dir.display());
            }
            report::regress(&dir)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(r) => {
            match cli.format {
                Format::Table => print!("{}", r.to_table()),
                Format::Json => println!("{}", r.to_json()),
            }
            if r.success() {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
