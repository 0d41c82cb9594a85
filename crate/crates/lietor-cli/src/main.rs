//! Batch command-line front end: reads JSON algebra documents, runs the
//! library computations, and prints human-readable lines or, with `--json`,
//! a machine-readable report that carries strictly more detail.
//!
//! Exit codes: 0 success, 1 mathematical validation failure (Jacobi broken,
//! base change mismatch, missing certificate), 2 usage or parse error,
//! 3 instance-too-large refusal.

use clap::{Parser, Subcommand, ValueEnum};
use lietor::catalog::{self, BuiltAlgebra};
use lietor::cohomology::{adjoint_action, cohomology_dim, hochschild_serre_dim, invariant_cohomology_dim};
use lietor::deriv::{derivation_space, inner_derivations};
use lietor::extension::{build_max_extension, verify_nilradical_certificate};
use lietor::io::{self, AlgebraDocument};
use lietor::lie::series_dims;
use lietor::roots::{root_decomposition, vanish_predictor};
use lietor::torus::{condition_a_check, maximal_torus, weight_equations};
use lietor::{Error, LieAlgebra, Matrix, Mode, Scalar, SolvableExtension};
use serde_json::{Value, json};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "lietor", version, about = "Exact computations on Lie algebras given by structure constants")]
struct Cli {
    /// Print the full report as JSON instead of summary lines.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a document: Jacobi identity, series, nilpotency and solvability.
    Check { file: PathBuf },
    /// Dimension of the derivation algebra, with an optional basis dump.
    Der {
        file: PathBuf,
        /// Also print a basis of the derivation algebra as matrices.
        #[arg(long)]
        basis: bool,
    },
    /// Weight equations, canonical maximal torus, and the separation check.
    Torus { file: PathBuf },
    /// Build the maximal solvable extension of a nilpotent algebra.
    Extend {
        file: PathBuf,
        /// Write the extension document here instead of stdout.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Adjoint cohomology dimension at one degree.
    Cohomology {
        file: PathBuf,
        #[arg(long)]
        degree: usize,
        /// "direct" runs the full complex; "hs" factorizes through the
        /// invariant subcomplex and needs a document with nilradical_dim.
        #[arg(long, value_enum, default_value_t = Method::Direct)]
        method: Method,
    },
    /// Dimension of the invariant-subcomplex cohomology at one degree.
    InvariantCohomology {
        file: PathBuf,
        #[arg(long)]
        degree: usize,
    },
    /// Root-space decomposition of an extension's nilradical.
    Roots { file: PathBuf },
    /// Evaluate the combinatorial cohomology-vanishing criteria.
    Vanish { file: PathBuf },
    /// Rewrite in a new basis and compare against a target document.
    Basechange {
        file: PathBuf,
        /// Matrix document {"rows": [[...]]}; row k is the new basis vector
        /// b_k in old coordinates.
        #[arg(long)]
        matrix: PathBuf,
        /// Document the rewritten algebra must equal.
        #[arg(long)]
        target: PathBuf,
    },
    /// List the built-in algebras, or build one by name.
    Catalog {
        /// Entry name; omit to list all entries.
        name: Option<String>,
        /// Entry parameter as KEY=VALUE (repeatable), e.g. -p n=3.
        #[arg(short, long = "param")]
        param: Vec<String>,
        /// Write the built document here instead of stdout.
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Direct,
    Hs,
}

/// What a command produced: report body, display lines, process exit code.
struct Output {
    results: Value,
    human: Vec<String>,
    code: u8,
}

impl Output {
    fn ok(results: Value, human: Vec<String>) -> Self {
        Output { results, human, code: 0 }
    }
}

/// Library failures plus the CLI's own hard size refusal.
enum CliError {
    Lib(Error),
    Refused(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

fn exit_for(e: &Error) -> u8 {
    match e {
        Error::TooLarge { .. } => 3,
        Error::Parse(_)
        | Error::Io(_)
        | Error::BadParam(_)
        | Error::UnknownCatalogEntry(_)
        | Error::DimensionMismatch(_)
        | Error::DegreeOutOfRange { .. } => 2,
        _ => 1,
    }
}

fn scalar_strings(v: &[Scalar]) -> Vec<String> {
    v.iter().map(Scalar::to_string).collect()
}

fn row_text(v: &[Scalar]) -> String {
    format!("({})", scalar_strings(v).join(", "))
}

fn matrix_json(m: &Matrix) -> Value {
    Value::from(m.rows_iter().map(scalar_strings).collect::<Vec<_>>())
}

fn load(file: &Path) -> Result<(AlgebraDocument, LieAlgebra), Error> {
    let doc = io::read_algebra_file(file)?;
    let algebra = doc.to_algebra()?;
    Ok((doc, algebra))
}

/// Loads a document that must carry the `nilradical_dim` split marker.
fn load_extension(file: &Path, flag: &str) -> Result<SolvableExtension, Error> {
    let (doc, _) = load(file)?;
    doc.to_extension()?.ok_or_else(|| {
        Error::BadParam(format!(
            "{flag} needs a document with nilradical_dim; run `lietor extend` to produce one"
        ))
    })
}

/// Degree guard: refuses large exterior powers before any allocation.
fn check_degree_cap(degree: usize, dim: usize) -> Result<(), CliError> {
    if degree > 4 && dim > 12 {
        return Err(CliError::Refused(format!(
            "cohomology degree {degree} on dimension {dim} (cap: degree <= 4 when dim > 12)"
        )));
    }
    Ok(())
}

fn cmd_check(file: &Path) -> Result<Output, CliError> {
    let (doc, l) = load(file)?;
    let violations = l.jacobi_violations();
    if !violations.is_empty() {
        let shown: Vec<Vec<usize>> = violations
            .iter()
            .map(|&(i, j, k)| vec![i + 1, j + 1, k + 1])
            .collect();
        return Ok(Output {
            results: json!({ "jacobi": false, "violations": shown }),
            human: vec![format!(
                "Jacobi identity fails on {} basis triple(s), first at ({}, {}, {})",
                violations.len(),
                violations[0].0 + 1,
                violations[0].1 + 1,
                violations[0].2 + 1
            )],
            code: 1,
        });
    }
    let lower = series_dims(&l.lower_central_series()?);
    let derived = series_dims(&l.derived_series()?);
    let nilpotent = l.is_nilpotent()?;
    let solvable = l.is_solvable()?;
    let center = l.center()?.dim();
    let generators: Vec<usize> = l.generator_indices()?.iter().map(|g| g + 1).collect();
    let mut results = json!({
        "jacobi": true,
        "dim": l.dim(),
        "lower_central_series": lower,
        "derived_series": derived,
        "nilpotent": nilpotent,
        "solvable": solvable,
        "center_dim": center,
        "generators": generators,
    });
    let mut human = vec![
        format!("Jacobi identity holds (dim {})", l.dim()),
        format!("lower central series dims: {lower:?}"),
        format!("derived series dims: {derived:?}"),
        format!("nilpotent: {nilpotent}, solvable: {solvable}, center dim: {center}"),
    ];
    let mut code = 0;
    if doc.nilradical_dim.is_some() {
        let ext = doc.to_extension()?.expect("marker present");
        let certified = verify_nilradical_certificate(&ext)?;
        results["nilradical_dim"] = json!(ext.nilradical_dim);
        results["nilradical_certified"] = json!(certified);
        human.push(format!(
            "nilradical block of dim {} certified: {certified}",
            ext.nilradical_dim
        ));
        if !certified {
            code = 1;
        }
    }
    Ok(Output { results, human, code })
}

fn cmd_der(file: &Path, basis: bool) -> Result<Output, CliError> {
    let (_, l) = load(file)?;
    l.validate()?;
    let ders = derivation_space(&l, Mode::default())?;
    // The ad images span the inner derivations; rank out the center's kernel.
    let inner_span = inner_derivations(&l)?
        .iter()
        .map(|m| m.rows_iter().flatten().cloned().collect())
        .collect::<Vec<Vec<Scalar>>>();
    let inner_dim = if inner_span.is_empty() {
        0
    } else {
        Matrix::from_rows(inner_span)?.rank()
    };
    let mut results = json!({
        "dim": l.dim(),
        "derivation_dim": ders.len(),
        "inner_dim": inner_dim,
    });
    let mut human = vec![format!(
        "dim Der = {} (inner {}, outer {})",
        ders.len(),
        inner_dim,
        ders.len() - inner_dim
    )];
    if basis {
        results["basis"] = Value::from(ders.iter().map(matrix_json).collect::<Vec<_>>());
        for (k, d) in ders.iter().enumerate() {
            human.push(format!("D{}:", k + 1));
            for r in 0..d.nrows() {
                human.push(format!("  {}", row_text(d.row(r))));
            }
        }
    }
    Ok(Output::ok(results, human))
}

fn cmd_torus(file: &Path) -> Result<Output, CliError> {
    let (doc, l) = load(file)?;
    l.validate()?;
    // For an extension document the torus lives on the nilradical block.
    let nil = match doc.to_extension()? {
        Some(ext) => ext.nilradical()?,
        None => l,
    };
    let eqs = weight_equations(&nil);
    let torus = maximal_torus(&nil, Mode::default())?;
    let report = condition_a_check(&nil, &torus, Mode::default())?;
    let rows: Vec<Vec<String>> = torus.weights.rows_iter().map(scalar_strings).collect();
    let results = json!({
        "dim": nil.dim(),
        "weight_equation_rank": eqs.rank(),
        "torus_dim": torus.s(),
        "weight_rows": rows,
        "free_set": report.free_set,
        "condition_a": report.holds,
        "violations": report.violations.iter().map(|&(i, j)| vec![i, j]).collect::<Vec<_>>(),
    });
    let mut human = vec![
        format!("weight equations rank {} over dim {}", eqs.rank(), nil.dim()),
        format!("maximal torus dim s = {}", torus.s()),
    ];
    for k in 0..torus.s() {
        human.push(format!("x{}: {}", k + 1, row_text(torus.weights.row(k))));
    }
    human.push(format!("free set: {:?}", report.free_set));
    human.push(format!("condition A holds: {}", report.holds));
    for &(i, j) in &report.violations {
        human.push(format!("  weight columns of e{i} and e{j} coincide"));
    }
    let mut warnings = Vec::new();
    if report.free_set_outside_generators {
        warnings.push("free set contains non-generator columns".to_string());
    }
    let mut out = Output::ok(results, human);
    if !warnings.is_empty() {
        out.results["warnings_detail"] = json!(warnings);
    }
    Ok(out)
}

fn cmd_extend(file: &Path, out_path: Option<&Path>) -> Result<Output, CliError> {
    let (doc, l) = load(file)?;
    // Extending an extension document means extending its nilradical block.
    let nil = match doc.to_extension()? {
        Some(ext) => ext.nilradical()?,
        None => l,
    };
    let ext = build_max_extension(&nil, Mode::default())?;
    let name = format!("{}_ext", doc.name);
    let ext_doc = io::document_from_extension(&name, &ext);
    let results = json!({
        "dim": ext.algebra.dim(),
        "nilradical_dim": ext.nilradical_dim,
        "torus_dim": ext.s(),
        "document": serde_json::to_value(&ext_doc).expect("document serializes"),
    });
    let human = match out_path {
        Some(p) => {
            io::write_algebra_file(p, &ext_doc)?;
            vec![format!(
                "wrote extension of dim {} (nilradical {}, torus {}) to {}",
                ext.algebra.dim(),
                ext.nilradical_dim,
                ext.s(),
                p.display()
            )]
        }
        None => vec![io::emit_algebra(&ext_doc).trim_end().to_string()],
    };
    Ok(Output::ok(results, human))
}

fn cmd_cohomology(file: &Path, degree: usize, method: Method) -> Result<Output, CliError> {
    let (doc, l) = load(file)?;
    l.validate()?;
    check_degree_cap(degree, l.dim())?;
    let dim = match method {
        Method::Direct => cohomology_dim(&adjoint_action(&l)?, degree, Mode::default())?,
        Method::Hs => {
            let ext = doc.to_extension()?.ok_or_else(|| {
                Error::BadParam(
                    "--method hs needs a document with nilradical_dim; run `lietor extend` to produce one"
                        .into(),
                )
            })?;
            hochschild_serre_dim(&ext, degree, Mode::default())?
        }
    };
    let method_name = match method {
        Method::Direct => "direct",
        Method::Hs => "hs",
    };
    Ok(Output::ok(
        json!({ "degree": degree, "method": method_name, "cohomology_dim": dim }),
        vec![format!("dim H^{degree} = {dim} ({method_name})")],
    ))
}

fn cmd_invariant_cohomology(file: &Path, degree: usize) -> Result<Output, CliError> {
    let ext = load_extension(file, "invariant-cohomology")?;
    check_degree_cap(degree, ext.algebra.dim())?;
    let dim = invariant_cohomology_dim(&ext, degree, Mode::default())?;
    Ok(Output::ok(
        json!({ "degree": degree, "invariant_cohomology_dim": dim }),
        vec![format!("dim H^{degree}(N, R)^Q = {dim}")],
    ))
}

fn cmd_roots(file: &Path) -> Result<Output, CliError> {
    let ext = load_extension(file, "roots")?;
    let data = root_decomposition(&ext)?;
    let roots: Vec<Vec<String>> = data.roots.iter().map(|r| scalar_strings(r)).collect();
    let spaces: Vec<Vec<usize>> = data
        .spaces
        .iter()
        .map(|s| s.iter().map(|i| i + 1).collect())
        .collect();
    let results = json!({
        "root_count": data.count(),
        "roots": roots,
        "spaces": spaces,
        "multiplicity_one": data.multiplicity_one(),
    });
    let mut human = vec![format!(
        "{} distinct roots over a torus of dim {}",
        data.count(),
        ext.s()
    )];
    for (r, space) in data.roots.iter().zip(&spaces) {
        human.push(format!("{} <- basis {:?}", row_text(r), space));
    }
    Ok(Output::ok(results, human))
}

fn cmd_vanish(file: &Path) -> Result<Output, CliError> {
    let ext = load_extension(file, "vanish")?;
    let v = vanish_predictor(&ext)?;
    let results = json!({
        "multiplicity_one": v.multiplicity_one,
        "distinct_triple": v.distinct_triple,
        "two_step_nilpotent": v.two_step_nilpotent,
        "triple_criterion": v.triple_criterion,
        "two_step_criterion": v.two_step_criterion,
    });
    let human = vec![
        format!("multiplicity one roots: {}", v.multiplicity_one),
        format!("no distinct root triple sums to a root: {}", v.distinct_triple),
        format!("nilradical is two-step nilpotent: {}", v.two_step_nilpotent),
        format!("triple criterion predicts vanishing: {}", v.triple_criterion),
        format!("two-step criterion predicts vanishing: {}", v.two_step_criterion),
    ];
    Ok(Output::ok(results, human))
}

fn cmd_basechange(file: &Path, matrix: &Path, target: &Path) -> Result<Output, CliError> {
    let (_, l) = load(file)?;
    let p = io::read_matrix_file(matrix)?;
    let (_, want) = load(target)?;
    let moved = l.apply_basechange(&p)?;
    let matches = moved == want;
    let results = json!({
        "matches": matches,
        "dim": moved.dim(),
    });
    let human = if matches {
        vec!["base change matches the target".to_string()]
    } else {
        let diff: Vec<String> = moved
            .brackets()
            .filter(|(&(i, j), terms)| want.bracket_basis(i, j) != **terms)
            .map(|(&(i, j), _)| format!("[e{}, e{}]", i + 1, j + 1))
            .collect();
        vec![format!(
            "base change does NOT match the target (first differing brackets: {})",
            if diff.is_empty() {
                "target has extra brackets".to_string()
            } else {
                diff.join(", ")
            }
        )]
    };
    Ok(Output {
        results,
        human,
        code: u8::from(!matches),
    })
}

fn parse_params(specs: &[String]) -> Result<Vec<(String, i64)>, Error> {
    specs
        .iter()
        .map(|s| {
            let (k, v) = s
                .split_once('=')
                .ok_or_else(|| Error::BadParam(format!("parameter '{s}' is not KEY=VALUE")))?;
            let v: i64 = v
                .trim()
                .parse()
                .map_err(|_| Error::BadParam(format!("parameter '{s}' needs an integer value")))?;
            Ok((k.trim().to_string(), v))
        })
        .collect()
}

fn cmd_catalog(
    name: Option<&str>,
    params: &[String],
    out_path: Option<&Path>,
) -> Result<Output, CliError> {
    let Some(name) = name else {
        let entries = catalog::catalog_entries();
        let results = json!({
            "entries": entries
                .iter()
                .map(|e| json!({ "name": e.name, "params": e.params, "summary": e.summary }))
                .collect::<Vec<_>>(),
        });
        let width = entries.iter().map(|e| e.name.len()).max().unwrap_or(0);
        let human = entries
            .iter()
            .map(|e| {
                let params = if e.params.is_empty() {
                    String::new()
                } else {
                    format!(" [{}]", e.params)
                };
                format!("{:width$}  {}{}", e.name, e.summary, params)
            })
            .collect();
        return Ok(Output::ok(results, human));
    };
    let built = catalog::catalog_build(name, &parse_params(params)?)?;
    let doc = match &built.algebra {
        BuiltAlgebra::Plain(l) => io::document_from_algebra(&built.name, l),
        BuiltAlgebra::Extension(r) => io::document_from_extension(&built.name, r),
    };
    let mut results = json!({
        "name": built.name,
        "dim": built.algebra.algebra().dim(),
        "document": serde_json::to_value(&doc).expect("document serializes"),
    });
    if let Some(ext) = built.algebra.extension() {
        results["nilradical_dim"] = json!(ext.nilradical_dim);
        results["torus_dim"] = json!(ext.s());
    }
    let human = match out_path {
        Some(p) => {
            io::write_algebra_file(p, &doc)?;
            vec![format!(
                "wrote {} (dim {}) to {}",
                built.name,
                built.algebra.algebra().dim(),
                p.display()
            )]
        }
        None => vec![io::emit_algebra(&doc).trim_end().to_string()],
    };
    Ok(Output::ok(results, human))
}

fn run(cli: &Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::Check { file } => cmd_check(file),
        Command::Der { file, basis } => cmd_der(file, *basis),
        Command::Torus { file } => cmd_torus(file),
        Command::Extend { file, out } => cmd_extend(file, out.as_deref()),
        Command::Cohomology { file, degree, method } => cmd_cohomology(file, *degree, *method),
        Command::InvariantCohomology { file, degree } => cmd_invariant_cohomology(file, *degree),
        Command::Roots { file } => cmd_roots(file),
        Command::Vanish { file } => cmd_vanish(file),
        Command::Basechange { file, matrix, target } => cmd_basechange(file, matrix, target),
        Command::Catalog { name, param, out } => {
            cmd_catalog(name.as_deref(), param, out.as_deref())
        }
    }
}

fn command_name(cli: &Cli) -> &'static str {
    match cli.command {
        Command::Check { .. } => "check",
        Command::Der { .. } => "der",
        Command::Torus { .. } => "torus",
        Command::Extend { .. } => "extend",
        Command::Cohomology { .. } => "cohomology",
        Command::InvariantCohomology { .. } => "invariant-cohomology",
        Command::Roots { .. } => "roots",
        Command::Vanish { .. } => "vanish",
        Command::Basechange { .. } => "basechange",
        Command::Catalog { .. } => "catalog",
    }
}

/// Writes to stdout, exiting quietly when the reader hung up (e.g. `head`).
fn print_stdout(text: &str) {
    use std::io::{ErrorKind, Write};
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    if let Err(e) = writeln!(out, "{text}") {
        if e.kind() == ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        eprintln!("error: {e}");
        std::process::exit(2);
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if cli.json {
                let report = json!({
                    "command": command_name(&cli),
                    "exit_code": out.code,
                    "results": out.results,
                    "warnings": out.results.get("warnings_detail").cloned().unwrap_or_else(|| json!([])),
                });
                print_stdout(&serde_json::to_string_pretty(&report).expect("report serializes"));
            } else if !out.human.is_empty() {
                print_stdout(&out.human.join("\n"));
            }
            ExitCode::from(out.code)
        }
        Err(CliError::Refused(msg)) => {
            eprintln!("error: instance too large: {msg}");
            ExitCode::from(3)
        }
        Err(CliError::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_for(&e))
        }
    }
}
