use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use changhee::rational::{self, parse_rational};
use changhee::triangles::persist;
use changhee::verify::{self, Family, Format, TableRequest};
use changhee::{Error, Rational};

#[derive(Parser)]
#[command(name = "changhee", version, about = "Exact Changhee-type number tables and identity checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a sequence or triangle as CSV or JSON.
    Table {
        #[arg(long)]
        family: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        params: Option<PathBuf>,
        #[arg(long, value_enum)]
        format: FormatArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run an identity suite and write its JSON report.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate one spec family at order k and point x.
    Eval {
        #[arg(long)]
        family: String,
        #[arg(long)]
        params: PathBuf,
        #[arg(long, default_value_t = 1)]
        k: u32,
        #[arg(long, allow_hyphen_values = true)]
        x: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

const EXIT_UNEXPECTED: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    let cache_dir = std::env::var_os(persist::CACHE_DIR_ENV).map(PathBuf::from);
    if let Some(dir) = &cache_dir {
        for (kind, outcome) in persist::load_dir(dir) {
            if let Err(e) = outcome {
                eprintln!("warning: ignoring cached {} table: {e}", kind.name());
            }
        }
    }
    let code = match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    };
    if let Some(dir) = &cache_dir {
        if let Err(e) = persist::save_dir(dir) {
            eprintln!("warning: could not write triangle cache: {e}");
        }
    }
    code
}

fn write_or_print(text: &str, out: Option<&Path>) -> Result<(), Error> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn run(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Table { family, n, k, params, format, out } => {
            let family: Family = family.parse()?;
            let spec = params.as_deref().map(verify::load_params).transpose()?;
            let format = match format {
                FormatArg::Csv => Format::Csv,
                FormatArg::Json => Format::Json,
            };
            let req = TableRequest { family, n_max: n, k, spec, format };
            if let Some(text) = verify::emit_table(&req, out.as_deref())? {
                print!("{text}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite, out } => {
            let report = verify::run_suite(&suite)?;
            write_or_print(&report.to_json(), out.as_deref())?;
            let unexpected: Vec<_> = report.unexpected().collect();
            for check in &unexpected {
                eprintln!(
                    "unexpected verdict for {}: {} (expected {})",
                    check.id,
                    check.verdict.as_str(),
                    check.expected.as_str()
                );
            }
            if unexpected.is_empty() {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(EXIT_UNEXPECTED))
            }
        }
        Command::Eval { family, params, k, x } => {
            let spec = verify::load_params(&params)?;
            let x: Rational = match x {
                Some(s) => parse_rational(&s)?,
                None => rational::int(1),
            };
            let value = verify::eval_named(&family, &spec, k, &x)?;
            println!("{}", rational::render(&value));
            Ok(ExitCode::SUCCESS)
        }
    }
}
