use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use umbral::identity::{self, IdentityId, IdentityReport, Interpretation, VerifyParams};
use umbral::rational::{int, parse_rational};
use umbral::special::{
    abel_triangle, bernoulli_gf, euler_gf, lah_signed_triangle, lah_triangle,
    mittag_leffler_triangle, stirling1_signed_triangle, stirling1_unsigned_triangle,
};
use umbral::{CoeffTriangle, Rational, SequenceFamily, Series};

#[derive(Parser)]
#[command(
    name = "umbral",
    version,
    about = "Exact umbral-calculus tables, series and identity checks"
)]
struct Cli {
    /// Write output to a file instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a coefficient triangle.
    Table {
        #[arg(long, value_enum)]
        family: TableFamily,
        /// Abel parameter, p/q.
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(long)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Series operations on "c0,c1,..." literals.
    Series {
        #[arg(value_enum)]
        op: SeriesOp,
        #[arg(long, allow_hyphen_values = true)]
        coeffs: Option<String>,
        /// Inner series for `compose`.
        #[arg(long, allow_hyphen_values = true)]
        inner: Option<String>,
        /// Exponent for `pow`, order for the generating functions.
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
        #[arg(long)]
        trunc: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
    /// Check an identity on a grid of (n, m, k).
    Verify {
        #[arg(value_enum)]
        identity: VerifyId,
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        m_max: usize,
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        /// Family for xcheck: rising-factorial, lah, abel, mittag-leffler.
        #[arg(long)]
        family: Option<String>,
        /// Remark reading: literal (i) or indexed (ii).
        #[arg(long)]
        interpretation: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Plain)]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Plain,
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFamily {
    Stirling1u,
    Stirling1s,
    Lah,
    LahSigned,
    Abel,
    MittagLeffler,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesOp {
    Revert,
    Compose,
    Pow,
    BernoulliGf,
    EulerGf,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyId {
    T1,
    T2,
    T3,
    Remark,
    Xcheck,
}

impl From<VerifyId> for IdentityId {
    fn from(v: VerifyId) -> Self {
        match v {
            VerifyId::T1 => IdentityId::T1,
            VerifyId::T2 => IdentityId::T2,
            VerifyId::T3 => IdentityId::T3,
            VerifyId::Remark => IdentityId::Remark,
            VerifyId::Xcheck => IdentityId::XCheck,
        }
    }
}

struct Output {
    text: String,
    passed: bool,
}

fn rational_arg(name: &str, s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| format!("--{name}: {e}"))
}

fn series_arg(name: &str, s: &str, trunc: Option<usize>) -> Result<Series, String> {
    let s: Series = s.parse().map_err(|e| format!("--{name}: {e}"))?;
    Ok(match trunc {
        Some(n) if n > s.trunc() => {
            let mut c = s.into_coeffs();
            c.resize(n, int(0));
            Series::new(c)
        }
        Some(n) => s.truncate(n),
        None => s,
    })
}

fn family_arg(s: &str, a: Option<Rational>) -> Result<SequenceFamily, String> {
    match s {
        "rising-factorial" | "rising" => Ok(SequenceFamily::RisingFactorial),
        "lah" | "lah-signed" => Ok(SequenceFamily::Lah),
        "abel" => SequenceFamily::abel(a.unwrap_or_else(|| int(1))).map_err(|e| e.to_string()),
        "mittag-leffler" => Ok(SequenceFamily::MittagLeffler),
        other => Err(format!("unknown family '{other}'")),
    }
}

fn table(
    family: TableFamily,
    a: Option<String>,
    n_max: usize,
    format: Format,
) -> Result<Output, String> {
    let a = a.map(|s| rational_arg("a", &s)).transpose()?;
    let (name, tri): (String, CoeffTriangle) = match family {
        TableFamily::Stirling1u => ("stirling1u".into(), stirling1_unsigned_triangle(n_max)),
        TableFamily::Stirling1s => ("stirling1s".into(), stirling1_signed_triangle(n_max)),
        TableFamily::Lah => ("lah".into(), lah_triangle(n_max)),
        TableFamily::LahSigned => ("lah-signed".into(), lah_signed_triangle(n_max)),
        TableFamily::MittagLeffler => ("mittag-leffler".into(), mittag_leffler_triangle(n_max)),
        TableFamily::Abel => {
            let a = a.ok_or("--a is required for the abel family")?;
            let tri = abel_triangle(n_max, &a).map_err(|e| e.to_string())?;
            (format!("abel(a={a})"), tri)
        }
    };
    let text = match format {
        Format::Plain => tri.to_plain(),
        Format::Csv => tri.to_csv(),
        Format::Json => {
            let rows: Vec<Vec<String>> = tri
                .rows()
                .iter()
                .map(|r| r.iter().map(ToString::to_string).collect())
                .collect();
            let value = json!({ "family": name, "n_max": n_max, "rows": rows });
            serde_json::to_string_pretty(&value).unwrap() + "\n"
        }
    };
    Ok(Output { text, passed: true })
}

fn series(
    op: SeriesOp,
    coeffs: Option<String>,
    inner: Option<String>,
    alpha: Option<String>,
    trunc: Option<usize>,
    format: Format,
) -> Result<Output, String> {
    let alpha = alpha.map(|s| rational_arg("alpha", &s)).transpose()?;
    let coeffs = || -> Result<Series, String> {
        let s = coeffs.as_deref().ok_or("--coeffs is required")?;
        series_arg("coeffs", s, trunc)
    };
    let result = match op {
        SeriesOp::Revert => coeffs()?.revert(),
        SeriesOp::Compose => {
            let outer = coeffs()?;
            let inner = inner.as_deref().ok_or("--inner is required for compose")?;
            let inner = series_arg("inner", inner, trunc.or(Some(outer.trunc())))?;
            outer.compose(&inner)
        }
        SeriesOp::Pow => {
            let alpha = alpha.ok_or("--alpha is required for pow")?;
            coeffs()?.rat_pow(&alpha)
        }
        SeriesOp::BernoulliGf | SeriesOp::EulerGf => {
            let alpha = alpha.unwrap_or_else(|| int(1));
            let trunc = trunc.ok_or("--trunc is required for generating functions")?;
            Ok(match op {
                SeriesOp::BernoulliGf => bernoulli_gf(&alpha, trunc),
                _ => euler_gf(&alpha, trunc),
            })
        }
    }
    .map_err(|e| e.to_string())?;
    let text = match format {
        Format::Plain => format!("{result}\n"),
        Format::Csv => {
            let mut out = String::from("n,value\n");
            for (n, c) in result.coeffs().iter().enumerate() {
                out.push_str(&format!("{n},{c}\n"));
            }
            out
        }
        Format::Json => {
            let c: Vec<String> = result.coeffs().iter().map(ToString::to_string).collect();
            serde_json::to_string_pretty(&json!({ "trunc": result.trunc(), "coeffs": c })).unwrap()
                + "\n"
        }
    };
    Ok(Output { text, passed: true })
}

#[allow(clippy::too_many_arguments)]
fn verify(
    id: VerifyId,
    n_max: usize,
    m_max: usize,
    a: Option<String>,
    family: Option<String>,
    interpretation: Option<String>,
    format: Format,
) -> Result<Output, String> {
    let a = a.map(|s| rational_arg("a", &s)).transpose()?;
    let family = family.map(|s| family_arg(&s, a.clone())).transpose()?;
    let interpretation = interpretation
        .map(|s| s.parse::<Interpretation>().map_err(|e| e.to_string()))
        .transpose()?;
    let params = VerifyParams {
        a,
        family,
        interpretation,
    };
    let reports = identity::verify(id.into(), n_max, m_max, &params).map_err(|e| e.to_string())?;
    let passed = reports.iter().all(|r| r.all_equal);
    Ok(Output {
        text: render_reports(&reports, format),
        passed,
    })
}

fn render_reports(reports: &[IdentityReport], format: Format) -> String {
    match format {
        Format::Plain => reports.iter().map(IdentityReport::to_plain).collect(),
        Format::Csv => {
            let mut out = format!("{}\n", IdentityReport::CSV_HEADER);
            for r in reports {
                out.push_str(&r.csv_rows());
            }
            out
        }
        Format::Json => {
            let value = match reports {
                [single] => single.to_json(),
                many => {
                    serde_json::Value::Array(many.iter().map(IdentityReport::to_json).collect())
                }
            };
            serde_json::to_string_pretty(&value).unwrap() + "\n"
        }
    }
}

fn run(cli: Cli) -> Result<Output, String> {
    match cli.command {
        Command::Table {
            family,
            a,
            n_max,
            format,
        } => table(family, a, n_max, format),
        Command::Series {
            op,
            coeffs,
            inner,
            alpha,
            trunc,
            format,
        } => series(op, coeffs, inner, alpha, trunc, format),
        Command::Verify {
            identity,
            n_max,
            m_max,
            a,
            family,
            interpretation,
            format,
        } => verify(identity, n_max, m_max, a, family, interpretation, format),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let detail = e.to_string();
            eprintln!(
                "{}",
                detail
                    .lines()
                    .next()
                    .unwrap_or("error: invalid arguments")
                    .trim()
            );
            return ExitCode::from(2);
        }
    };
    let output = cli.output.clone();
    let result = match run(cli) {
        Ok(r) => r,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let written = match output {
        Some(path) => {
            fs::write(&path, &result.text).map_err(|e| format!("{}: {e}", path.display()))
        }
        None => io::stdout()
            .lock()
            .write_all(result.text.as_bytes())
            .map_err(|e| e.to_string()),
    };
    if let Err(msg) = written {
        eprintln!("error: {msg}");
        return ExitCode::from(2);
    }
    if result.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
