use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;

use qshell::homology::mayer_vietoris_stage_check;
use qshell::io::{parse_facet_list, parse_generator};
use qshell::qmatroid::QMatroid;
use qshell::report::{check_report, homology_outcome, Method};
use qshell::reproduce::{reproduce, IDS};
use qshell::vecspace::{enumerate_grassmannian, gaussian_binomial};
use qshell::{Error, Field, QComplex};

#[derive(Parser)]
#[command(
    name = "qshell",
    version,
    about = "Shellability and homology of q-complexes over finite fields"
)]
struct Cli {
    /// Field, e.g. gf(2), gf(3), gf(2^4):x^4+x+1. Files carry their own field.
    #[arg(long, global = true)]
    field: Option<String>,
    #[arg(long, global = true, value_enum, default_value = "pretty")]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Tsv,
    Pretty,
}

#[derive(Subcommand)]
enum Command {
    /// List the k-dimensional subspaces of F_q^n.
    Grassmann {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum)]
        sort: Option<Sort>,
    },
    /// Lexicographic shelling of the facets and the chain shelling of the
    /// punctured order complex.
    Check(Input),
    /// Reduced homology of the punctured order complex.
    Homology {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "all")]
        method: MethodArg,
    },
    /// Run a bundled scenario with its expected values.
    Reproduce {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(IDS))]
        id: String,
    },
    /// Check the stagewise Mayer-Vietoris rank identity along the
    /// lexicographic facet order.
    MvCheck(Input),
}

#[derive(Clone, Copy, ValueEnum)]
enum Sort {
    Lex,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Formula,
    Count,
    Snf,
    All,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Formula => Method::Formula,
            MethodArg::Count => Method::Count,
            MethodArg::Snf => Method::Snf,
            MethodArg::All => Method::All,
        }
    }
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Input {
    /// Facet list file.
    #[arg(long)]
    facets: Option<PathBuf>,
    /// All k-dimensional subspaces of F_q^n.
    #[arg(long, num_args = 2, value_names = ["N", "K"])]
    uniform: Option<Vec<usize>>,
    /// The hyperplanes of F_q^(r+1).
    #[arg(long, value_name = "R")]
    sphere: Option<usize>,
    /// Generator matrix file of a rank-metric code; uses its matroid complex.
    #[arg(long)]
    code: Option<PathBuf>,
}

enum Failure {
    Runtime(String),
    Invalid(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::TooLarge(_) | Error::Io(_) => Failure::Runtime(e.to_string()),
            _ => Failure::Invalid(e.to_string()),
        }
    }
}

struct Output {
    json: Value,
    pretty: String,
    passed: bool,
}

fn field_arg(spec: &Option<String>) -> Result<Field, Error> {
    Field::parse(spec.as_deref().unwrap_or("gf(2)"))
}

fn read(path: &PathBuf) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn check_field(given: &Option<String>, actual: &Field) -> Result<(), Failure> {
    if let Some(spec) = given {
        let f = Field::parse(spec)?;
        if &f != actual {
            return Err(Failure::Invalid(format!(
                "--field {f} disagrees with the input's field {actual}"
            )));
        }
    }
    Ok(())
}

fn load(input: &Input, field: &Option<String>) -> Result<QComplex, Failure> {
    if let Some(path) = &input.facets {
        let fl = parse_facet_list(&read(path)?)?;
        check_field(field, &fl.field)?;
        return Ok(fl.into_complex()?);
    }
    if let Some(nk) = &input.uniform {
        return Ok(QComplex::uniform(&field_arg(field)?, nk[0], nk[1])?);
    }
    if let Some(r) = input.sphere {
        return Ok(QComplex::standard_sphere(&field_arg(field)?, r)?);
    }
    let path = input.code.as_ref().expect("clap requires one input");
    let code = parse_generator(&read(path)?)?;
    check_field(field, code.base_field())?;
    Ok(QMatroid::from_code(&code)?.matroid_complex()?)
}

fn to_json<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

fn grassmann(field: &Field, n: usize, k: usize, sort: Option<Sort>) -> Result<Output, Failure> {
    let mut spaces = enumerate_grassmannian(field, n, k)?;
    if sort.is_some() {
        qshell::qorder::sort_q(field, &mut spaces);
    }
    let expected = gaussian_binomial(n as u32, k as u32, field.order());
    let count = spaces.len();
    let mut pretty = String::new();
    for s in &spaces {
        let _ = writeln!(pretty, "{s}");
    }
    let _ = writeln!(
        pretty,
        "# {count} subspaces of dimension {k} in {field}^{n}"
    );
    Ok(Output {
        json: serde_json::json!({
            "field": field.to_string(),
            "n": n,
            "k": k,
            "sorted": sort.is_some(),
            "subspaces": spaces,
            "count": count,
        }),
        pretty,
        passed: expected == count.into(),
    })
}

fn check(c: &QComplex) -> Result<Output, Failure> {
    let r = check_report(c)?;
    let mut p = String::new();
    let _ = writeln!(
        p,
        "complex: {} facets of dimension {} in {}^{}",
        r.complex.facets, r.complex.dim, r.complex.field, r.complex.n
    );
    let lex = &r.lex_shelling;
    let _ = writeln!(
        p,
        "lexicographic shelling: {} ({} witnesses{})",
        verdict(lex.is_shelling()),
        lex.witnesses.len(),
        lex.violation.map_or(String::new(), |(i, j)| format!(
            ", fails at facets {i} < {j}"
        ))
    );
    let oc = &r.order_complex;
    let _ = writeln!(
        p,
        "punctured order complex: {} vertices, {} maximal chains, dim {}",
        oc.vertices, oc.maximal_chains, oc.dim
    );
    let cs = &r.chain_shelling;
    let _ = writeln!(
        p,
        "chain order shelling: {} ({} witnesses{})",
        verdict(cs.is_shelling),
        cs.witnesses,
        cs.violation.map_or(String::new(), |(i, j)| format!(
            ", fails at chains {i} < {j}"
        ))
    );
    Ok(Output {
        json: to_json(&r),
        pretty: p,
        passed: r.passed,
    })
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn homology(c: &QComplex, method: Method) -> Result<Output, Failure> {
    let h = homology_outcome(c, method)?;
    let mut p = String::new();
    let _ = writeln!(
        p,
        "complex: {} facets of dimension {} in {}^{}",
        h.complex.facets, h.complex.dim, h.complex.field, h.complex.n
    );
    if let Some(perm) = &h.basis_permutation {
        let _ = writeln!(p, "counted after permuting coordinates by {perm:?}");
    }
    for (name, v) in [
        ("formula", h.formula),
        ("oracle count", h.oracle_count),
        ("characterized count", h.characterized_count),
    ] {
        if let Some(v) = v {
            let _ = writeln!(p, "{name}: {v}");
        }
    }
    if let Some(snf) = &h.snf {
        for g in &snf.degrees {
            let torsion: Vec<String> = g.torsion.iter().map(|t| format!("Z/{t}")).collect();
            let _ = writeln!(
                p,
                "H~_{}: rank {}{}",
                g.p,
                g.rank,
                if torsion.is_empty() {
                    String::new()
                } else {
                    format!(" + {}", torsion.join(" + "))
                }
            );
        }
    }
    let _ = writeln!(
        p,
        "rank in degree {}: {}, agree: {}",
        h.top_degree, h.rank, h.agree
    );
    Ok(Output {
        json: to_json(&h),
        pretty: p,
        passed: h.agree,
    })
}

fn reproduce_cmd(id: &str) -> Result<Output, Failure> {
    let r = reproduce(id)?;
    let mut p = String::new();
    for l in &r.lines {
        let _ = writeln!(
            p,
            "{} {}: expected {}, got {}",
            verdict(l.pass),
            l.name,
            l.expected,
            l.got
        );
    }
    let _ = writeln!(p, "{} {}", verdict(r.pass), r.id);
    Ok(Output {
        json: to_json(&r),
        pretty: p,
        passed: r.pass,
    })
}

fn mv_check(c: &QComplex) -> Result<Output, Failure> {
    let r = mayer_vietoris_stage_check(c, &c.lex_order())?;
    let mut p = String::new();
    let _ = writeln!(p, "first facet ranks (degrees -1..): {:?}", r.first_facet);
    for s in &r.stages {
        let _ = writeln!(
            p,
            "stage {}: before {:?} + intersection {:?} -> after {:?}: {}",
            s.j + 1,
            s.before,
            s.intersection,
            s.after,
            verdict(s.identity_holds && s.intersection_concentrated && s.torsion_free)
        );
    }
    let _ = writeln!(
        p,
        "final ranks {:?}, accumulated {}: {}",
        r.final_ranks,
        r.accumulated,
        verdict(r.ok)
    );
    Ok(Output {
        json: to_json(&r),
        pretty: p,
        passed: r.ok,
    })
}

fn tsv(v: &Value, path: &str, out: &mut String) {
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                let p = if path.is_empty() {
                    k.clone()
                } else {
                    format!("{path}.{k}")
                };
                tsv(x, &p, out);
            }
        }
        Value::Array(a) if a.iter().any(|x| x.is_object() || x.is_array()) => {
            for (i, x) in a.iter().enumerate() {
                tsv(x, &format!("{path}.{i}"), out);
            }
        }
        Value::Array(a) => {
            let parts: Vec<String> = a.iter().map(scalar).collect();
            let _ = writeln!(out, "{path}\t{}", parts.join(","));
        }
        _ => {
            let _ = writeln!(out, "{path}\t{}", scalar(v));
        }
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    match &cli.command {
        Command::Grassmann { n, k, sort } => grassmann(&field_arg(&cli.field)?, *n, *k, *sort),
        Command::Check(input) => check(&load(input, &cli.field)?),
        Command::Homology { input, method } => {
            homology(&load(input, &cli.field)?, (*method).into())
        }
        Command::Reproduce { id } => reproduce_cmd(id),
        Command::MvCheck(input) => mv_check(&load(input, &cli.field)?),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let out = match run(&cli) {
        Ok(o) => o,
        Err(Failure::Runtime(m)) => {
            eprintln!("error: {m}");
            return ExitCode::from(1);
        }
        Err(Failure::Invalid(m)) => {
            eprintln!("error: {m}");
            return ExitCode::from(2);
        }
    };
    let text = match cli.format {
        Format::Json => serde_json::to_string_pretty(&out.json).expect("json") + "\n",
        Format::Tsv => {
            let mut s = String::new();
            tsv(&out.json, "", &mut s);
            s
        }
        Format::Pretty => out.pretty,
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, text) {
                eprintln!("error: {}: {e}", path.display());
                return ExitCode::from(1);
            }
        }
        None => print!("{text}"),
    }
    if out.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(3)
    }
}
