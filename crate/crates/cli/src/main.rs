use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use hopfq::catalog::{self, Level};
use hopfq::factor::{extract_matched_pair, halted_stage, verify_factorization_theorem, FactorizationData};
use hopfq::format::{Document, MorphismData};
use hopfq::hopf::{codualize, dualize};
use hopfq::table::{product_table, recover_loop, second_factor_labels, symbolic_product_table};
use hopfq::{Error, Field, HopfMaps, ValidationReport};

/// Exact structure-constant computations for finite-dimensional Hopf
/// quasigroups and coquasigroups.
///
/// Inputs are structure files or catalog names. Exit status is 0 when every
/// requested check passes, 1 on an axiom or precondition failure and 2 on
/// input, parse or shape errors.
#[derive(Parser)]
#[command(name = "hopfq", version)]
struct Cli {
    /// Ground field for catalog objects: `rational` or `fp:<p>`.
    #[arg(long, global = true, default_value = "rational", value_parser = parse_field)]
    field: Field,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the structure file of a catalog object or a re-emitted file.
    Build {
        input: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run validator suites and print the report.
    Verify {
        input: String,
        /// One or more of: ip-loop, bimonoid, quasigroup, coquasigroup,
        /// antipode-props, dl, matched-pair, factorization.
        #[arg(long, value_delimiter = ',', required = true)]
        level: Vec<Level>,
        /// Also write the report as JSON.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Render the product table and antipode.
    Table {
        input: String,
        /// Name basis vectors by their labels; products over a doubled loop
        /// tensor a second factor print as a symbolic grid.
        #[arg(long)]
        basis_labels: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit the dual structure.
    Dual {
        input: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the factorization theorem on `X` with inclusions of `A` and `H`
    /// and emit the extracted matched pair.
    Factorize {
        x: String,
        i_a: PathBuf,
        i_h: PathBuf,
        /// Where to write the matched pair; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Write the parts of a factorization as `x.json`, `i_a.json`, `i_h.json`.
    Split {
        input: String,
        #[arg(long)]
        dir: PathBuf,
    },
    /// List catalog names.
    List,
}

fn parse_field(s: &str) -> Result<Field, String> {
    match s {
        "rational" | "q" => Ok(Field::Rational),
        _ => {
            let p = s.strip_prefix("fp:").ok_or_else(|| format!("expected rational or fp:<p>, got {s:?}"))?;
            let p: u64 = p.parse().map_err(|e| format!("{p:?}: {e}"))?;
            Field::prime(p).map_err(|e| e.to_string())
        }
    }
}

/// A failed command and the exit status it maps to.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Shape(_) | Error::Field(_) | Error::UnknownName(_) | Error::Parse(_) => 2,
            _ => 1,
        };
        Failure { code, message: e.to_string() }
    }
}

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    Failure { code: 2, message: format!("{}: {e}", path.display()) }
}

type Outcome = Result<u8, Failure>;

fn load(input: &str, field: Field) -> Result<Document, Failure> {
    let path = Path::new(input);
    if path.exists() {
        let text = fs::read_to_string(path).map_err(|e| io_failure(path, e))?;
        return Ok(Document::parse(&text)?);
    }
    Ok(catalog::build(input, field)?.document)
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, text).map_err(|e| io_failure(p, e)),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn emit_doc(doc: &Document, out: Option<&Path>) -> Result<(), Failure> {
    emit(&(doc.to_string_pretty() + "\n"), out)
}

fn summary(r: &ValidationReport) -> String {
    match r.failures().next() {
        None => "all checks passed".into(),
        Some(e) => format!("first failing axiom: [{}] {}", e.tier, e.axiom),
    }
}

fn write_json(r: &ValidationReport, path: Option<&Path>) -> Result<(), Failure> {
    match path {
        Some(p) => {
            let text = serde_json::to_string_pretty(&r.to_json()).expect("report serializes");
            fs::write(p, text + "\n").map_err(|e| io_failure(p, e))
        }
        None => Ok(()),
    }
}

fn verify(input: &str, levels: &[Level], json: Option<&Path>, field: Field) -> Outcome {
    let doc = load(input, field)?;
    let mut report = ValidationReport::new(format!("{} {}", doc.kind(), input));
    for level in levels {
        report.absorb(level.name(), level.run(&doc)?);
    }
    println!("{report}");
    println!("{}", summary(&report));
    write_json(&report, json)?;
    Ok(if report.all_passed() { 0 } else { 1 })
}

fn structure(doc: &Document) -> Result<&HopfMaps, Failure> {
    match doc {
        Document::HopfQuasigroup(h) => Ok(h),
        Document::HopfCoquasigroup(d) => Ok(d),
        other => Err(Failure { code: 2, message: format!("a {} has no product table", other.kind()) }),
    }
}

fn table(input: &str, basis_labels: bool, out: Option<&Path>, field: Field) -> Outcome {
    let doc = load(input, field)?;
    let h = structure(&doc)?;
    let symbolic = basis_labels
        .then(|| Some((recover_loop(h)?, second_factor_labels(h)?)))
        .flatten()
        .and_then(|(l, labels)| symbolic_product_table(h, &l, &labels).ok());
    emit(&symbolic.unwrap_or_else(|| product_table(h, basis_labels)), out)?;
    Ok(0)
}

fn dual(input: &str, out: Option<&Path>, field: Field) -> Outcome {
    let doc = match load(input, field)? {
        Document::HopfQuasigroup(h) => Document::HopfCoquasigroup(dualize(&h)),
        Document::HopfCoquasigroup(d) => Document::HopfQuasigroup(codualize(&d)),
        other => return Err(Failure { code: 2, message: format!("dual of a {} is not supported", other.kind()) }),
    };
    emit_doc(&doc, out)?;
    Ok(0)
}

fn morphism(path: &Path) -> Result<MorphismData, Failure> {
    let text = fs::read_to_string(path).map_err(|e| io_failure(path, e))?;
    match Document::parse(&text)? {
        Document::Morphism(m) => Ok(m),
        other => Err(Failure { code: 2, message: format!("{}: expected a morphism, got a {}", path.display(), other.kind()) }),
    }
}

fn factorize(x: &str, i_a: &Path, i_h: &Path, out: Option<&Path>, json: Option<&Path>, field: Field) -> Outcome {
    let Document::HopfQuasigroup(x) = load(x, field)? else {
        return Err(Failure { code: 2, message: "X must be a hopf_quasigroup".into() });
    };
    let (a, h) = (morphism(i_a)?, morphism(i_h)?);
    let f = FactorizationData::new(x, a.source, h.source, a.map, h.map)?;
    let report = verify_factorization_theorem(&f);
    eprintln!("{report}");
    eprintln!("{}", summary(&report));
    write_json(&report, json)?;
    if let Some(stage) = halted_stage(&report) {
        eprintln!("halted at stage {stage}");
        return Ok(1);
    }
    emit_doc(&Document::MatchedPair(extract_matched_pair(&f)?), out)?;
    Ok(0)
}

fn split(input: &str, dir: &Path, field: Field) -> Outcome {
    let Document::Factorization(f) = load(input, field)? else {
        return Err(Failure { code: 2, message: "expected a factorization".into() });
    };
    fs::create_dir_all(dir).map_err(|e| io_failure(dir, e))?;
    let parts = [
        ("x.json", Document::HopfQuasigroup(f.x.clone())),
        ("i_a.json", Document::Morphism(MorphismData { source: f.a.clone(), map: f.i_a.clone() })),
        ("i_h.json", Document::Morphism(MorphismData { source: f.h.clone(), map: f.i_h.clone() })),
    ];
    for (name, doc) in parts {
        emit_doc(&doc, Some(&dir.join(name)))?;
    }
    Ok(0)
}

fn run(cli: Cli) -> Outcome {
    let field = cli.field;
    match cli.command {
        Command::Build { input, out } => {
            emit_doc(&load(&input, field)?, out.as_deref())?;
            Ok(0)
        }
        Command::Verify { input, level, json } => verify(&input, &level, json.as_deref(), field),
        Command::Table { input, basis_labels, out } => table(&input, basis_labels, out.as_deref(), field),
        Command::Dual { input, out } => dual(&input, out.as_deref(), field),
        Command::Factorize { x, i_a, i_h, out, json } => {
            factorize(&x, &i_a, &i_h, out.as_deref(), json.as_deref(), field)
        }
        Command::Split { input, dir } => split(&input, &dir, field),
        Command::List => {
            for name in catalog::names() {
                println!("{name}");
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
