//! Command-line front end.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use qhm_core::algebra::{format, parse, Element};
use qhm_core::evaluation::Evaluator;
use qhm_core::iso::{Iso, IsoError, Unknown};
use qhm_core::presentations::{GenusData, RingKind};
use qhm_core::scalar::{self, Scalar};
use qhm_core::series::series_table;

use crate::file_format;
use crate::verify;

#[derive(Parser, Debug)]
#[command(name = "qhm", version, about = "Exact computations in the cohomology rings of rank-2 moduli spaces")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Ring {
    Classical,
    Quantum,
    Floer,
}

impl From<Ring> for RingKind {
    fn from(r: Ring) -> Self {
        match r {
            Ring::Classical => RingKind::Classical,
            Ring::Quantum => RingKind::Quantum,
            Ring::Floer => RingKind::Floer,
        }
    }
}

#[derive(Args, Debug)]
struct RingArgs {
    /// Genus of the surface.
    #[arg(long, value_parser = clap::value_parser!(u32).range(2..=3))]
    genus: Option<u32>,
    /// Which ring to use; defaults to classical for genus 3 and floer for genus 2.
    #[arg(long, value_enum)]
    ring: Option<Ring>,
    /// Presentation file replacing the built-in ring.
    #[arg(long)]
    presentation: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Normal form of an expression.
    Nf {
        #[command(flatten)]
        ring: RingArgs,
        expression: String,
    },
    /// Top pairing <z> of an expression.
    Eval {
        #[command(flatten)]
        ring: RingArgs,
        expression: String,
    },
    /// Multi-point invariant Psi_dA(z_1, ..., z_r) in genus 3.
    Gw {
        #[arg(long)]
        degree: u32,
        /// Read the classes as generator words instead of classical classes.
        #[arg(long)]
        words: bool,
        #[arg(required = true)]
        classes: Vec<String>,
    },
    /// Three-point invariant <x * y, z> of classical classes in genus 3.
    Gw3 { x: String, y: String, z: String },
    /// Taylor table of the invariant generating function.
    Series {
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..=3))]
        genus: u32,
        #[arg(long, default_value_t = 10)]
        order: u32,
    },
    /// Solve for the quantum/classical basis change in genus 3.
    Iso,
    /// Run every acceptance check.
    Verify,
    /// Print a built-in presentation in the file format.
    ExportPresentation {
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..=3))]
        genus: u32,
        #[arg(long, value_enum)]
        ring: Ring,
    },
}

enum Failure {
    Usage(String),
    Computation(String),
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Computation(_) => 2,
        }
    }
}

fn computation(e: impl std::fmt::Display) -> Failure {
    Failure::Computation(e.to_string())
}

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn iso_failure(e: IsoError) -> Failure {
    match e {
        IsoError::Algebra(a) => usage(a),
        other => computation(other),
    }
}

struct Output {
    text: String,
    code: i32,
}

fn wants_json(args: &[OsString]) -> bool {
    args.windows(2).any(|w| w[0] == "--format" && w[1] == "json") || args.iter().any(|a| a == "--format=json")
}

/// Runs the command line and returns the exit code.
pub fn run(args: Vec<OsString>, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let json = wants_json(&args);
    let cli = match Cli::try_parse_from(&args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{}", e);
                return 0;
            }
            let msg = e.to_string();
            report(err, json, "usage", msg.strip_prefix("error: ").unwrap_or(&msg));
            return 1;
        }
    };
    match execute(&cli) {
        Ok(o) => {
            let _ = write!(out, "{}", o.text);
            o.code
        }
        Err(f) => {
            let (kind, msg) = match &f {
                Failure::Usage(m) => ("usage", m),
                Failure::Computation(m) => ("computation", m),
            };
            report(err, cli.format == Format::Json, kind, msg);
            f.code()
        }
    }
}

fn report(err: &mut dyn Write, json: bool, kind: &str, message: &str) {
    let message = message.trim_end();
    if json {
        let _ = writeln!(err, "{}", json!({ "error": { "kind": kind, "message": message } }));
    } else {
        let _ = writeln!(err, "error: {}", message);
    }
}

fn number(x: &num_bigint::BigInt) -> Value {
    match x.to_i64() {
        Some(v) => json!(v),
        None => json!(x.to_string()),
    }
}

fn rational(x: &Scalar) -> Value {
    json!({ "num": number(x.numer()), "den": number(x.denom()) })
}

fn scalar_output(format: Format, command: &str, inputs: Value, value: &Scalar) -> Output {
    let text = match format {
        Format::Text => format!("{}\n", scalar::display(value)),
        Format::Json => format!("{}\n", json!({ "command": command, "inputs": inputs, "value": rational(value) })),
        Format::Csv => format!("value-numerator,value-denominator\n{},{}\n", value.numer(), value.denom()),
    };
    Output { text, code: 0 }
}

fn execute(cli: &Cli) -> Result<Output, Failure> {
    let f = cli.format;
    match &cli.command {
        Command::Nf { ring, expression } => {
            let (ev, kind) = evaluator(ring)?;
            let engine = ev
                .engine(kind)
                .ok_or_else(|| computation(format!("no {} ring in genus {}", kind.name(), ev.genus())))?;
            let x = parse(engine.context(), expression).map_err(usage)?;
            let nf = engine.normal_form(&x).map_err(computation)?;
            let inputs = json!({ "genus": ev.genus(), "ring": kind.name(), "expression": expression });
            let text = match f {
                Format::Json => format!("{}\n", json!({ "command": "nf", "inputs": inputs, "value": format(&nf) })),
                Format::Csv => return Err(usage("nf has no csv output")),
                Format::Text => format!("{}\n", format(&nf)),
            };
            Ok(Output { text, code: 0 })
        }
        Command::Eval { ring, expression } => {
            let (ev, kind) = evaluator(ring)?;
            let z = ev.parse(expression).map_err(usage)?;
            let r = ev.pairing_value(&z, kind).map_err(computation)?;
            let inputs = json!({ "genus": ev.genus(), "ring": kind.name(), "expression": expression });
            Ok(scalar_output(f, "eval", inputs, &r.value))
        }
        Command::Gw { degree, words, classes } => {
            let iso = Iso::solve().map_err(computation)?;
            let parsed =
                classes.iter().map(|c| iso.evaluator.parse(c).map_err(usage)).collect::<Result<Vec<Element>, _>>()?;
            let v = if *words {
                iso.evaluator.gw_multipoint(&parsed, *degree).map_err(computation)?
            } else {
                iso.gw_multipoint_classical(&parsed, *degree).map_err(iso_failure)?
            };
            let inputs = json!({ "genus": 3, "degree": degree, "classes": classes, "words": words });
            Ok(scalar_output(f, "gw", inputs, &v))
        }
        Command::Gw3 { x, y, z } => {
            let iso = Iso::solve().map_err(computation)?;
            let p = |t: &String| iso.evaluator.parse(t).map_err(usage);
            let v = iso.gw3_classical(&p(x)?, &p(y)?, &p(z)?).map_err(iso_failure)?;
            Ok(scalar_output(f, "gw3", json!({ "genus": 3, "classes": [x, y, z] }), &v))
        }
        Command::Series { genus, order } => series(f, *genus, *order),
        Command::Iso => iso_output(f),
        Command::Verify => verify_output(f),
        Command::ExportPresentation { genus, ring } => {
            let data = GenusData::builtin(*genus, (*ring).into()).map_err(computation)?;
            let text = file_format::export(&data);
            let text = match f {
                Format::Text => text,
                Format::Json => format!(
                    "{}\n",
                    json!({ "command": "export-presentation", "inputs": { "genus": genus, "ring": data.kind.name() }, "value": text })
                ),
                Format::Csv => return Err(usage("export-presentation has no csv output")),
            };
            Ok(Output { text, code: 0 })
        }
    }
}

fn evaluator(args: &RingArgs) -> Result<(Evaluator, RingKind), Failure> {
    if let Some(path) = &args.presentation {
        let data = file_format::load_file(path).map_err(|e| match e {
            file_format::FileError::Parse { .. } | file_format::FileError::Io { .. } => usage(e),
            other => computation(other),
        })?;
        if args.genus.is_some_and(|g| g != data.genus) {
            return Err(usage(format!("--genus disagrees with the file's genus {}", data.genus)));
        }
        if args.ring.is_some_and(|r| RingKind::from(r) != data.kind) {
            return Err(usage(format!("--ring disagrees with the file's kind {}", data.kind.name())));
        }
        let ev = Evaluator::from_data(data.genus, std::slice::from_ref(&data)).map_err(computation)?;
        return Ok((ev, data.kind));
    }
    let genus = args.genus.unwrap_or(3);
    let kind = args.ring.map(RingKind::from).unwrap_or(if genus == 2 { RingKind::Floer } else { RingKind::Classical });
    let ev = Evaluator::new(genus).map_err(computation)?;
    if ev.engine(kind).is_none() {
        return Err(computation(format!(
            "no built-in {} presentation for genus {}; supply a presentation file",
            kind.name(),
            genus
        )));
    }
    Ok((ev, kind))
}

fn series(f: Format, genus: u32, order: u32) -> Result<Output, Failure> {
    let ev = Evaluator::new(genus).map_err(computation)?;
    let table = series_table(&ev, order).map_err(computation)?;
    let text = match f {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["a", "b", "c", "value-numerator", "value-denominator"]).map_err(computation)?;
            for ((a, b, c), v) in &table.values {
                w.write_record([
                    a.to_string(),
                    b.to_string(),
                    c.to_string(),
                    v.numer().to_string(),
                    v.denom().to_string(),
                ])
                .map_err(computation)?;
            }
            String::from_utf8(w.into_inner().map_err(computation)?).map_err(computation)?
        }
        Format::Json => {
            let rows: Vec<Value> = table
                .values
                .iter()
                .map(|((a, b, c), v)| json!({ "a": a, "b": b, "c": c, "value": rational(v) }))
                .collect();
            format!("{}\n", json!({ "command": "series", "inputs": { "genus": genus, "order": order }, "rows": rows }))
        }
        Format::Text => {
            let mut s = String::new();
            for ((a, b, c), v) in &table.values {
                s.push_str(&format!("{} {} {} {}\n", a, b, c, scalar::display(v)));
            }
            s
        }
    };
    Ok(Output { text, code: 0 })
}

fn iso_output(f: Format) -> Result<Output, Failure> {
    let iso = Iso::solve().map_err(computation)?;
    let t = &iso.table;
    let mut lines = Vec::new();
    for q in &t.quantum_basis {
        let c = iso.line(q).map_err(iso_failure)?;
        lines.push((format(q), format(&c)));
    }
    let r = &iso.report;
    let text = match f {
        Format::Csv => return Err(usage("iso has no csv output")),
        Format::Json => {
            let constants: serde_json::Map<String, Value> =
                iso.values.iter().map(|(u, v)| (u.to_string(), rational(v))).collect();
            let table: Vec<Value> = lines.iter().map(|(q, c)| json!({ "quantum": q, "classical": c })).collect();
            let discrepancies: Vec<Value> = r
                .discrepancies
                .iter()
                .map(|d| {
                    json!({ "unknown": d.unknown.to_string(), "solved": rational(&d.solved),
                            "reference": d.reference.name(), "expected": rational(&d.expected) })
                })
                .collect();
            let residuals: Vec<Value> =
                r.residuals.iter().map(|(i, v)| json!({ "equation": i, "residual": rational(v) })).collect();
            format!(
                "{}\n",
                json!({
                    "command": "iso",
                    "inputs": { "genus": 3 },
                    "constants": constants,
                    "report": {
                        "equations": r.equations,
                        "degree_one_rank": r.degree_one_rank,
                        "pairing_rank": r.pairing_rank,
                        "residuals": residuals,
                        "discrepancies": discrepancies,
                    },
                    "table": table,
                })
            )
        }
        Format::Text => {
            let mut s = String::from("constants\n");
            for u in Unknown::all() {
                if let Some(v) = iso.value(u) {
                    s.push_str(&format!("  {} = {}\n", u, scalar::display(v)));
                }
            }
            s.push_str(&format!(
                "system: {} equations, degree-one rank {}, pairing rank {}, {} nonzero residuals\n",
                r.equations,
                r.degree_one_rank,
                r.pairing_rank,
                r.residuals.len()
            ));
            for d in &r.discrepancies {
                s.push_str(&format!(
                    "discrepancy: {} solved {} but {} gives {}\n",
                    d.unknown,
                    scalar::display(&d.solved),
                    d.reference.name(),
                    scalar::display(&d.expected)
                ));
            }
            s.push_str("table (quantum word = classical class)\n");
            for (q, c) in &lines {
                s.push_str(&format!("  {} = {}\n", q, c));
            }
            s
        }
    };
    Ok(Output { text, code: 0 })
}

fn verify_output(f: Format) -> Result<Output, Failure> {
    let outcomes = verify::run_all();
    let passed = outcomes.iter().all(|o| o.passed());
    let text = match f {
        Format::Csv => return Err(usage("verify has no csv output")),
        Format::Json => {
            let items: Vec<Value> = outcomes
                .iter()
                .map(|o| {
                    json!({ "criterion": o.criterion, "title": o.title, "passed": o.passed(),
                            "checked": o.checked, "failures": o.failures })
                })
                .collect();
            format!("{}\n", json!({ "command": "verify", "inputs": {}, "passed": passed, "criteria": items }))
        }
        Format::Text => {
            let mut s: String = outcomes.iter().map(|o| o.line() + "\n").collect();
            let n = outcomes.iter().filter(|o| o.passed()).count();
            s.push_str(&format!("{} of {} criteria passed\n", n, outcomes.len()));
            s
        }
    };
    Ok(Output { text, code: if passed { 0 } else { 3 } })
}
