use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use fuscat::catalog::{builtin, builtin_keys};
use fuscat::schema::{load_target, LoadError, Target};
use fuscat::suite::{render_report, run_suite, select_subcategories, SubcategorySelection, SuiteOptions};

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser)]
#[command(name = "fuscat", version, about = "Exact checks of fusion-category identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a JSON fusion file.
    Validate { file: String },
    /// Run the verification suite on a builtin key or a JSON file.
    Verify {
        target: String,
        /// Comma-separated simple indices, e.g. 0,4.
        #[arg(long)]
        subcategory: Option<String>,
        #[arg(long, conflicts_with = "subcategory")]
        all_subcategories: bool,
        /// Comma-separated check ids (prefix match).
        #[arg(long, value_delimiter = ',')]
        checks: Option<Vec<String>>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Markdown summary of cosets, Hecke constants, fibers and class dimensions.
    Report { target: String },
    /// One line per builtin entry.
    ListBuiltins,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Md,
}

fn seed() -> Result<u64, String> {
    match std::env::var("FUSCAT_SEED") {
        Ok(v) => v.trim().parse().map_err(|_| format!("FUSCAT_SEED must be an unsigned integer, got {v:?}")),
        Err(_) => Ok(0),
    }
}

/// Error with its exit code.
struct Failure(u8, String);

fn load_file(path: &str) -> Result<Target, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure(EXIT_USAGE, format!("cannot read {path}: {e}")))?;
    load_target(&text, path).map_err(|e| match e {
        LoadError::Schema(e) => Failure(EXIT_USAGE, format!("schema error: {e}")),
        LoadError::Data(e) => Failure(EXIT_FAIL, format!("validation failed: {e}")),
    })
}

fn resolve(target: &str) -> Result<Target, Failure> {
    if Path::new(target).is_file() {
        return load_file(target);
    }
    builtin(target).map(Target::from).map_err(|e| Failure(EXIT_USAGE, e.to_string()))
}

fn parse_subcategory(text: &str) -> Result<Vec<usize>, Failure> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().map_err(|_| Failure(EXIT_USAGE, format!("bad simple index {s:?}"))))
        .collect()
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Validate { file } => {
            let t = load_file(&file)?;
            let layers = [("character table", t.table.is_some()), ("S-matrix", t.smatrix.is_some())];
            let extra: Vec<&str> = layers.iter().filter(|l| l.1).map(|l| l.0).collect();
            let extra = if extra.is_empty() { String::new() } else { format!(" with {}", extra.join(" and ")) };
            println!("{file}: valid fusion ring of rank {}{extra}", t.ring.rank());
            Ok(0)
        }
        Command::Verify { target, subcategory, all_subcategories, checks, format } => {
            let t = resolve(&target)?;
            let subcategories = match (all_subcategories, subcategory) {
                (true, _) => SubcategorySelection::All,
                (false, None) => SubcategorySelection::Default,
                (false, Some(s)) => SubcategorySelection::Given(vec![parse_subcategory(&s)?]),
            };
            let opts = SuiteOptions { subcategories, checks };
            let report = run_suite(&t, &opts).map_err(|e| Failure(EXIT_USAGE, e.to_string()))?;
            match format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&report).expect("report serializes")),
                Format::Md => print!("{}", report.to_markdown()),
            }
            Ok(if report.all_passed() { 0 } else { EXIT_FAIL })
        }
        Command::Report { target } => {
            let t = resolve(&target)?;
            let seed = seed().map_err(|e| Failure(EXIT_USAGE, e))?;
            let subs = select_subcategories(&t.ring, &SubcategorySelection::All).map_err(|e| Failure(EXIT_USAGE, e.to_string()))?;
            print!("{}", render_report(&t, &subs, seed));
            Ok(0)
        }
        Command::ListBuiltins => {
            for key in builtin_keys() {
                let e = builtin(key).map_err(|e| Failure(EXIT_FAIL, e.to_string()))?;
                let dim = e.ring.global_fpdim().map(|g| g.embed_complex().re).unwrap_or(f64::NAN);
                let center = e.center().map_or("-".to_string(), |c| c.len().to_string());
                println!("{key:<14} rank {:>2}  FPdim {dim:>10.6}  center {center:>2}  {}", e.ring.rank(), e.classification());
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure(code, msg)) => {
            eprintln!("fuscat: {msg}");
            ExitCode::from(code)
        }
    }
}
