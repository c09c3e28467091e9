//! `posrat`: print tree rows, enumerations, fraction genealogy and bounded
//! approximations in plain text, CSV or JSON lines.

use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use posrat::{
    best_bounded_with, handedness, index_of, locate, node_at, parents, path_to, Fraction, Newman,
    Ranking, Rows, SternRatios, TreeKind,
};
use serde_json::{json, Value};

const MAX_ROWS: usize = 64;
const MAX_COUNT: u64 = 1 << 24;
/// Rows below this are built from the previous row; deeper rows are produced
/// node by node so memory stays flat.
const BUFFERED_ROWS: usize = 16;

#[derive(Parser)]
#[command(
    name = "posrat",
    version,
    about = "Trees, enumerations and approximations of the positive fractions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the first rows of a fraction tree.
    Tree {
        #[arg(long, value_parser = parse_kind)]
        kind: TreeKind,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        rows: u64,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
        /// Allow more than 64 rows.
        #[arg(long)]
        force: bool,
    },
    /// Print the first terms of an enumeration of the fractions.
    Enumerate {
        /// stern, newman or bfs:<kind>
        #[arg(long, value_parser = parse_method)]
        method: Method,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        count: u64,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
        /// Allow more than 2^24 terms.
        #[arg(long)]
        force: bool,
    },
    /// Path, parents, handedness and tree positions of a fraction.
    Locate {
        #[arg(value_parser = parse_fraction)]
        fraction: Fraction,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Best approximation with a bounded denominator.
    Approx {
        #[arg(value_parser = parse_fraction)]
        target: Fraction,
        #[arg(long, value_parser = parse_max_den)]
        max_den: BigUint,
        #[arg(long, value_enum, default_value_t = Mode::Absolute)]
        mode: Mode,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Csv,
    Jsonl,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Absolute,
    Normalized,
}

#[derive(Clone, Copy)]
enum Method {
    Stern,
    Newman,
    Bfs(TreeKind),
}

fn parse_kind(s: &str) -> Result<TreeKind, String> {
    s.parse().map_err(|e: posrat::Error| e.to_string())
}

fn parse_method(s: &str) -> Result<Method, String> {
    match s {
        "stern" => Ok(Method::Stern),
        "newman" => Ok(Method::Newman),
        _ => match s.strip_prefix("bfs:") {
            Some(kind) => parse_kind(kind).map(Method::Bfs),
            None => Err(format!(
                "unknown method `{s}`; expected stern, newman or bfs:<kind>"
            )),
        },
    }
}

fn parse_fraction(s: &str) -> Result<Fraction, String> {
    s.parse().map_err(|e: posrat::Error| e.to_string())
}

fn parse_max_den(s: &str) -> Result<BigUint, String> {
    let n: BigUint = s
        .parse()
        .map_err(|_| format!("`{s}` is not a nonnegative integer"))?;
    if n == BigUint::from(0u32) {
        return Err("max-den must be at least 1".into());
    }
    Ok(n)
}

/// A failure while producing output.
enum Failure {
    /// Bad input that got past argument parsing.
    Input(String),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<posrat::Error> for Failure {
    fn from(e: posrat::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        match e.into_kind() {
            csv::ErrorKind::Io(e) => Failure::Io(e),
            other => Failure::Io(io::Error::other(format!("{other:?}"))),
        }
    }
}

type Outcome = Result<(), Failure>;

fn fraction_json(f: &Fraction) -> Value {
    json!({ "num": f.num().to_string(), "den": f.den().to_string() })
}

fn write_json(out: &mut impl Write, value: &Value) -> Outcome {
    serde_json::to_writer(&mut *out, value).map_err(io::Error::from)?;
    writeln!(out)?;
    Ok(())
}

/// Rows `0..count` of a tree, one row at a time.
fn for_each_row(
    kind: TreeKind,
    count: usize,
    mut emit: impl FnMut(usize, &mut dyn Iterator<Item = Fraction>) -> Outcome,
) -> Outcome {
    for (r, fractions) in Rows::new(kind).take(count.min(BUFFERED_ROWS)).enumerate() {
        emit(r, &mut fractions.into_iter())?;
    }
    for r in BUFFERED_ROWS..count {
        let mut nodes = (0u64..=u64::MAX >> (64 - r.min(64))).map(|i| {
            node_at(kind, r, &BigUint::from(i))
                .expect("index within row")
                .value
        });
        emit(r, &mut nodes)?;
    }
    Ok(())
}

fn cmd_tree(out: &mut impl Write, kind: TreeKind, rows: usize, format: Format) -> Outcome {
    match format {
        Format::Plain => for_each_row(kind, rows, |_, fractions| {
            for (i, f) in fractions.enumerate() {
                if i > 0 {
                    out.write_all(b" ")?;
                }
                write!(out, "{f}")?;
            }
            writeln!(out)?;
            Ok(())
        }),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["row", "index", "num", "den"])?;
            for_each_row(kind, rows, |r, fractions| {
                for (i, f) in fractions.enumerate() {
                    w.write_record([
                        r.to_string(),
                        i.to_string(),
                        f.num().to_string(),
                        f.den().to_string(),
                    ])?;
                }
                Ok(())
            })?;
            w.flush()?;
            Ok(())
        }
        Format::Jsonl => for_each_row(kind, rows, |r, fractions| {
            for (i, f) in fractions.enumerate() {
                let mut v = fraction_json(&f);
                v["row"] = json!(r);
                v["index"] = json!(i);
                write_json(out, &v)?;
            }
            Ok(())
        }),
    }
}

fn sequence(method: Method) -> Box<dyn Iterator<Item = Fraction>> {
    match method {
        Method::Stern => Box::new(SternRatios::new()),
        Method::Newman => Box::new(Newman::new()),
        Method::Bfs(kind) => Box::new((0usize..).flat_map(
            move |r| -> Box<dyn Iterator<Item = Fraction>> {
                if r < BUFFERED_ROWS {
                    Box::new(posrat::row(kind, r).into_iter())
                } else {
                    Box::new((0u64..=u64::MAX >> (64 - r.min(64))).map(move |i| {
                        node_at(kind, r, &BigUint::from(i))
                            .expect("index within row")
                            .value
                    }))
                }
            },
        )),
    }
}

fn cmd_enumerate(out: &mut impl Write, method: Method, count: u64, format: Format) -> Outcome {
    let terms = sequence(method).take(usize::try_from(count).unwrap_or(usize::MAX));
    match format {
        Format::Plain => {
            for f in terms {
                writeln!(out, "{f}")?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["index", "num", "den"])?;
            for (i, f) in terms.enumerate() {
                w.write_record([
                    (i + 1).to_string(),
                    f.num().to_string(),
                    f.den().to_string(),
                ])?;
            }
            w.flush()?;
        }
        Format::Jsonl => {
            for (i, f) in terms.enumerate() {
                let mut v = fraction_json(&f);
                v["index"] = json!(i + 1);
                write_json(out, &v)?;
            }
        }
    }
    Ok(())
}

/// A report value: plain text or a fraction.
enum Field {
    Text(String),
    Fraction(Fraction),
}

fn emit_report(out: &mut impl Write, fields: &[(String, Field)], format: Format) -> Outcome {
    match format {
        Format::Plain => {
            for (key, value) in fields {
                match value {
                    Field::Text(s) => writeln!(out, "{key}: {s}")?,
                    Field::Fraction(f) => writeln!(out, "{key}: {f}")?,
                }
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["field", "value"])?;
            for (key, value) in fields {
                let text = match value {
                    Field::Text(s) => s.clone(),
                    Field::Fraction(f) => f.to_string(),
                };
                w.write_record([key.as_str(), text.as_str()])?;
            }
            w.flush()?;
        }
        Format::Jsonl => {
            let mut object = serde_json::Map::new();
            for (key, value) in fields {
                let v = match value {
                    Field::Text(s) => Value::String(s.clone()),
                    Field::Fraction(f) => fraction_json(f),
                };
                object.insert(key.clone(), v);
            }
            write_json(out, &Value::Object(object))?;
        }
    }
    Ok(())
}

fn cmd_locate(out: &mut impl Write, f: &Fraction, format: Format) -> Outcome {
    let path = path_to(f)?;
    let pair = parents(f)?;
    let mut fields = vec![
        ("fraction".to_owned(), Field::Fraction(f.clone())),
        ("path".to_owned(), Field::Text(path.to_string())),
        ("left_parent".to_owned(), Field::Fraction(pair.left)),
        ("right_parent".to_owned(), Field::Fraction(pair.right)),
        (
            "handedness".to_owned(),
            Field::Text(handedness(f)?.to_string()),
        ),
    ];
    for kind in TreeKind::UNREDUCED {
        let node = locate(kind, f)?;
        let name = kind.name();
        fields.push((format!("{name}_row"), Field::Text(node.row.to_string())));
        fields.push((format!("{name}_index"), Field::Text(node.index.to_string())));
        fields.push((
            format!("{name}_bfs"),
            Field::Text(index_of(f, kind)?.to_string()),
        ));
    }
    emit_report(out, &fields, format)
}

fn cmd_approx(
    out: &mut impl Write,
    target: &Fraction,
    max_den: &BigUint,
    mode: Mode,
    format: Format,
) -> Outcome {
    let ranking = match mode {
        Mode::Absolute => Ranking::Absolute,
        Mode::Normalized => Ranking::Normalized,
    };
    let result = best_bounded_with(target, max_den, ranking)?;
    let (lo, hi) = result.interval_certificate.into_ends();
    let fields = vec![
        ("target".to_owned(), Field::Fraction(target.clone())),
        ("max_den".to_owned(), Field::Text(max_den.to_string())),
        ("below".to_owned(), Field::Fraction(result.below)),
        ("above".to_owned(), Field::Fraction(result.above)),
        ("best".to_owned(), Field::Fraction(result.best)),
        ("certificate_lo".to_owned(), Field::Fraction(lo)),
        ("certificate_hi".to_owned(), Field::Fraction(hi)),
    ];
    emit_report(out, &fields, format)
}

fn run(cli: Cli, out: &mut impl Write) -> Outcome {
    match cli.command {
        Command::Tree {
            kind,
            rows,
            format,
            force,
        } => {
            let rows = usize::try_from(rows).unwrap_or(usize::MAX);
            if rows > MAX_ROWS && !force {
                return Err(Failure::Input(format!(
                    "refusing to print {rows} rows (limit {MAX_ROWS}); pass --force to override"
                )));
            }
            cmd_tree(out, kind, rows, format)
        }
        Command::Enumerate {
            method,
            count,
            format,
            force,
        } => {
            if count > MAX_COUNT && !force {
                return Err(Failure::Input(format!(
                    "refusing to print {count} terms (limit {MAX_COUNT}); pass --force to override"
                )));
            }
            cmd_enumerate(out, method, count, format)
        }
        Command::Locate { fraction, format } => cmd_locate(out, &fraction, format),
        Command::Approx {
            target,
            max_den,
            mode,
            format,
        } => cmd_approx(out, &target, &max_den, mode, format),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let outcome = run(cli, &mut out).and_then(|()| out.flush().map_err(Failure::from));
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("posrat: {e}");
            ExitCode::FAILURE
        }
        Err(Failure::Input(msg)) => {
            eprintln!("posrat: {msg}");
            ExitCode::from(2)
        }
    }
}
