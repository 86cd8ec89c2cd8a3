//! `schurlie` command-line front end.
//!
//! Exit codes: 0 success, 1 anomalies found, 2 usage or parse error,
//! 3 invalid algebra.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use schurlie::catalog::{
    self, builtin_catalog, catalog_over, lookup_over, serialize, CatalogError, FormatError, LoadError,
};
use schurlie::lie::{direct_sum, LieAlgebra, LieError, StructureConstants};
use schurlie::linalg::FieldDescriptor;
use schurlie::report::{
    check_entry, check_pair, kunneth_pairs, parse_checks, Check, OutputFormat, ReportDocument, KUNNETH_MAX_DIM,
};

/// Extra directory of algebra files picked up by `sweep`.
const EXTRA_DIR_VAR: &str = "SCHURLIE_EXTRA_DIR";

#[derive(Parser)]
#[command(name = "schurlie", version, about = "Schur multipliers of nilpotent Lie algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants and bound checks for one algebra.
    Info(InfoArgs),
    /// Print the structure constants of a standard algebra.
    Construct(ConstructArgs),
    /// Run checks over the built-in catalog or a directory of files.
    Sweep(SweepArgs),
    /// List the built-in catalog.
    List,
}

#[derive(Args)]
struct OutputArgs {
    /// `q` or `gf:p`
    #[arg(long, value_parser = parse_field)]
    field: Option<FieldDescriptor>,
    /// `table` or `lines`
    #[arg(long, default_value = "table", value_parser = parse_format)]
    format: OutputFormat,
}

#[derive(Args)]
struct InfoArgs {
    /// Structure-constants file, or `-` for standard input.
    #[arg(conflicts_with = "catalog", required_unless_present = "catalog")]
    input: Option<String>,
    /// Built-in catalog key.
    #[arg(long)]
    catalog: Option<String>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct ConstructArgs {
    #[command(subcommand)]
    family: Family,
    #[arg(long, global = true, value_parser = parse_field)]
    field: Option<FieldDescriptor>,
}

#[derive(Subcommand)]
enum Family {
    /// Abelian algebra of dimension N.
    Abelian { n: usize },
    /// Heisenberg algebra H(M) of dimension 2M+1.
    Heisenberg { m: usize },
    /// Standard filiform algebra of dimension N.
    Filiform { n: usize },
    /// Direct sum of two catalog entries.
    Sum { a: String, b: String },
}

#[derive(Args)]
struct SweepArgs {
    /// Sweep the built-in catalog.
    #[arg(long, conflicts_with = "dir", required_unless_present = "dir")]
    catalog: bool,
    /// Sweep every file in a directory.
    #[arg(long)]
    dir: Option<PathBuf>,
    /// Comma-separated subset of main, batten, kunneth, sr, t-classify.
    #[arg(long, default_value = "main,batten,kunneth,sr,t-classify")]
    checks: String,
    /// Worker threads (0 = all cores).
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    #[command(flatten)]
    output: OutputArgs,
}

fn parse_field(s: &str) -> Result<FieldDescriptor, String> {
    let lower = s.to_ascii_lowercase();
    if lower == "q" {
        return Ok(FieldDescriptor::Rationals);
    }
    let p = lower
        .strip_prefix("gf:")
        .ok_or_else(|| format!("expected `q` or `gf:p`, got `{s}`"))?;
    let p: u64 = p.parse().map_err(|_| format!("bad modulus `{p}`"))?;
    FieldDescriptor::prime_field(p).map_err(|e| e.to_string())
}

fn parse_format(s: &str) -> Result<OutputFormat, String> {
    s.parse()
}

/// Error with the exit code it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<LoadError> for Failure {
    fn from(e: LoadError) -> Self {
        match e {
            LoadError::Format(e) => e.into(),
            LoadError::Invalid(e) => e.into(),
        }
    }
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        Failure::usage(format!("parse error: {e}"))
    }
}

impl From<LieError> for Failure {
    fn from(e: LieError) -> Self {
        let message = match &e {
            LieError::JacobiViolation { residual, .. } => {
                let r: Vec<String> = residual.iter().map(|x| x.to_string()).collect();
                format!("invalid algebra: {e}; residual ({})", r.join(", "))
            }
            LieError::Linalg(e) => return Failure::usage(e.to_string()),
            _ => format!("invalid algebra: {e}"),
        };
        Self { code: 3, message }
    }
}

impl From<CatalogError> for Failure {
    fn from(e: CatalogError) -> Self {
        match e {
            CatalogError::Lie(e) => e.into(),
            other => Failure::usage(other.to_string()),
        }
    }
}

fn read_input(input: &str) -> Result<String, Failure> {
    if input == "-" {
        let mut text = String::new();
        io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| Failure::usage(format!("reading standard input: {e}")))?;
        Ok(text)
    } else {
        fs::read_to_string(input).map_err(|e| Failure::usage(format!("reading {input}: {e}")))
    }
}

/// Moves an algebra to the requested field. Only `Q -> GF(p)` reduction is
/// supported.
fn over_field(l: LieAlgebra, field: Option<FieldDescriptor>) -> Result<LieAlgebra, Failure> {
    match field {
        None => Ok(l),
        Some(f) if f == l.field() => Ok(l),
        Some(f) if l.field().is_rationals() => {
            let sc: StructureConstants = l.structure_constants().reduce_mod(f)?;
            Ok(LieAlgebra::new(sc)?)
        }
        Some(f) => Err(Failure::usage(format!("cannot move an algebra over {} to {f}", l.field()))),
    }
}

fn load_file(path: &str, field: Option<FieldDescriptor>) -> Result<LieAlgebra, Failure> {
    let text = read_input(path)?;
    over_field(catalog::load_algebra(&text)?, field)
}

fn emit(doc: &ReportDocument, format: OutputFormat) -> u8 {
    print!("{}", doc.render(format));
    let _ = io::stdout().flush();
    u8::from(!doc.anomalies.is_empty())
}

fn cmd_info(args: InfoArgs) -> Result<u8, Failure> {
    let field = args.output.field;
    let (key, algebra) = match (&args.catalog, &args.input) {
        (Some(key), _) => (key.clone(), lookup_over(key, field.unwrap_or_default())?),
        (None, Some(path)) => (path.clone(), load_file(path, field)?),
        (None, None) => return Err(Failure::usage("give a file or --catalog KEY")),
    };
    let checks = [Check::Main, Check::Batten, Check::TClassify];
    let (entry, anomalies) = check_entry(&key, &algebra, &checks);
    let doc = ReportDocument {
        entries: vec![entry],
        pairs: Vec::new(),
        anomalies,
    };
    Ok(emit(&doc, args.output.format))
}

fn cmd_construct(args: ConstructArgs) -> Result<u8, Failure> {
    let field = args.field.unwrap_or_default();
    let algebra = match args.family {
        Family::Abelian { n } => catalog::abelian(n, field),
        Family::Heisenberg { m } => catalog::heisenberg(m, field)?,
        Family::Filiform { n } => catalog::filiform(n, field)?,
        Family::Sum { a, b } => direct_sum(&lookup_over(&a, field)?, &lookup_over(&b, field)?)?,
    };
    print!("{}", serialize(&algebra));
    Ok(0)
}

/// Regular files of a directory, sorted by name, keyed by file name.
fn load_dir(dir: &Path, field: Option<FieldDescriptor>) -> Result<Vec<(String, LieAlgebra)>, Failure> {
    let entries = fs::read_dir(dir).map_err(|e| Failure::usage(format!("reading {}: {e}", dir.display())))?;
    let mut paths: Vec<PathBuf> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file())
        .collect();
    paths.sort();
    paths
        .into_iter()
        .map(|p| {
            let key = p.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default();
            let path = p.to_string_lossy().into_owned();
            load_file(&path, field)
                .map(|l| (key, l))
                .map_err(|f| Failure {
                    code: f.code,
                    message: format!("{path}: {}", f.message),
                })
        })
        .collect()
}

fn cmd_sweep(args: SweepArgs) -> Result<u8, Failure> {
    let checks = parse_checks(&args.checks).map_err(Failure::usage)?;
    let field = args.output.field;
    let mut items: Vec<(String, LieAlgebra)> = if args.catalog {
        let entries = match field {
            Some(f) => catalog_over(f)?,
            None => builtin_catalog().to_vec(),
        };
        entries.into_iter().map(|e| (e.key, e.algebra)).collect()
    } else {
        let dir = args.dir.as_deref().ok_or_else(|| Failure::usage("give --catalog or --dir DIR"))?;
        load_dir(dir, field)?
    };
    if let Some(extra) = std::env::var_os(EXTRA_DIR_VAR) {
        items.extend(load_dir(Path::new(&extra), field)?);
    }
    items.sort_by(|a, b| a.0.cmp(&b.0));
    if items.windows(2).any(|w| w[0].0 == w[1].0) {
        return Err(Failure::usage("duplicate algebra keys in sweep scope"));
    }

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(args.jobs)
        .build()
        .map_err(|e| Failure::usage(e.to_string()))?;
    let doc = pool.install(|| {
        let results: Vec<_> = items.par_iter().map(|(k, l)| check_entry(k, l, &checks)).collect();
        let mut doc = ReportDocument::default();
        for (entry, anomalies) in results {
            doc.entries.push(entry);
            doc.anomalies.extend(anomalies);
        }
        if checks.contains(&Check::Kunneth) {
            let keyed: Vec<(&str, &LieAlgebra)> = items.iter().map(|(k, l)| (k.as_str(), l)).collect();
            let pairs = kunneth_pairs(&keyed, KUNNETH_MAX_DIM);
            let results: Vec<_> = pairs
                .par_iter()
                .map(|&(i, j)| check_pair(&items[i].0, &items[i].1, &items[j].0, &items[j].1))
                .collect();
            for (pair, anomaly) in results {
                doc.pairs.extend(pair);
                doc.anomalies.extend(anomaly);
            }
        }
        doc.sort();
        doc
    });
    Ok(emit(&doc, args.output.format))
}

fn cmd_list() -> Result<u8, Failure> {
    let width = builtin_catalog().iter().map(|e| e.key.len()).max().unwrap_or(0);
    for e in builtin_catalog() {
        let source = match e.source {
            catalog::Source::Constructed => "constructed",
            catalog::Source::ClassificationTable => "table",
        };
        println!("{:<width$}  dim {:>2}  {source}", e.key, e.dim());
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Info(args) => cmd_info(args),
        Command::Construct(args) => cmd_construct(args),
        Command::Sweep(args) => cmd_sweep(args),
        Command::List => cmd_list(),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
