//! Command-line front end.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand};
use ffmin_core::elements::{euclidean_reduce, minimum, MinimumStatus};
use ffmin_core::riemannroch::{default_height, gap_sequence, mu};
use ffmin_core::semigroup::semigroup_gaps;
use ffmin_core::Place;
use serde_json::{json, Value};

use crate::parse::{parse_curve, parse_element, parse_family, parse_places, CurveSpec, ParseError};
use crate::report::{table, to_jsonl, to_table};
use crate::verify::{degree_json, family_sweep, verify_curve, VerifyConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "ffmin", version, about = "Euclidean minima and Weierstrass gaps of hyperelliptic function fields")]
pub struct Cli {
    /// Emit JSON records instead of a table.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Weierstrass gap sequence and mu(P) at a rational place.
    Gaps {
        curve: String,
        #[arg(long)]
        place: String,
    },
    /// Least degree of a non-special divisor supported on a set of places.
    Mu {
        curve: String,
        /// Place specs separated by ';', e.g. "inf+;inf-".
        #[arg(long)]
        places: String,
        #[arg(long)]
        height: Option<i64>,
    },
    /// Best approximation of an element by GF(p)[x, y] with respect to infinity.
    Reduce {
        curve: String,
        /// "<a>;<b>" for the element a + y*b.
        #[arg(long)]
        element: String,
    },
    /// Euclidean minimum with respect to a set of places (default: infinity).
    Minimum {
        curve: String,
        #[arg(long)]
        places: Option<String>,
    },
    /// Gaps of the numerical semigroup generated by m and r.
    Semigroup { m: u64, r: u64 },
    /// Check every applicable bound on a curve or a family of curves.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub curve: Option<String>,
    /// Family spec "p=<p>,deg=<a>..<b>".
    #[arg(long, conflicts_with = "curve")]
    pub family: Option<String>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Random elements per THM2 check (default 200 for a curve, 3 per family member).
    #[arg(long)]
    pub samples: Option<usize>,
}

#[derive(Debug)]
enum Failure {
    Parse(ParseError),
    Core(ffmin_core::Error),
    Usage(String),
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Parse(e)
    }
}

impl From<ffmin_core::Error> for Failure {
    fn from(e: ffmin_core::Error) -> Self {
        Failure::Core(e)
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Parse(e) => write!(f, "{e}"),
            Failure::Core(e) => write!(f, "{e}"),
            Failure::Usage(e) => f.write_str(e),
        }
    }
}

struct Output {
    text: String,
    code: i32,
}

impl Output {
    fn ok(text: String) -> Self {
        Self { text, code: EXIT_OK }
    }
}

fn records(json: bool, values: &[Value], keys: &[&str]) -> String {
    if json {
        return values.iter().map(|v| format!("{v}\n")).collect();
    }
    let rows: Vec<Vec<String>> = values
        .iter()
        .map(|v| {
            keys.iter()
                .map(|k| match &v[*k] {
                    Value::String(s) => s.clone(),
                    Value::Null => "-".into(),
                    Value::Array(a) => a.iter().map(|x| x.as_str().map_or(x.to_string(), str::to_string)).collect::<Vec<_>>().join(","),
                    other => other.to_string(),
                })
                .collect()
        })
        .collect();
    table(keys, &rows)
}

fn curve_and_model(text: &str) -> Result<CurveSpec, Failure> {
    Ok(parse_curve(text)?)
}

fn place_names(s: &[Place]) -> Value {
    Value::Array(s.iter().map(|p| json!(p.to_string())).collect())
}

fn execute(cli: &Cli) -> Result<Output, Failure> {
    let json = cli.json;
    match &cli.command {
        Command::Gaps { curve, place } => {
            let spec = curve_and_model(curve)?;
            let c = spec.model();
            let mut values = Vec::new();
            for pl in parse_places(place, &c)? {
                let gaps = gap_sequence(&c, &pl)?.gaps;
                let mu = *gaps.last().expect("positive genus");
                values.push(json!({ "curve": spec.render(), "place": pl.to_string(), "gaps": gaps, "mu": mu }));
            }
            Ok(Output::ok(records(json, &values, &["place", "gaps", "mu"])))
        }
        Command::Mu { curve, places, height } => {
            let spec = curve_and_model(curve)?;
            let c = spec.model();
            let s = parse_places(places, &c)?;
            let h = height.unwrap_or_else(|| default_height(&c));
            let r = mu(&c, &s, h)?;
            let v = json!({
                "curve": spec.render(),
                "S": place_names(&s),
                "height": h,
                "mu": r.value,
                "witness": r.witness.to_string(),
                "exhaustive": r.exhaustive,
            });
            Ok(Output::ok(records(json, &[v], &["S", "mu", "witness", "exhaustive"])))
        }
        Command::Reduce { curve, element } => {
            let spec = curve_and_model(curve)?;
            let c = spec.model();
            let x = parse_element(element, &c)?;
            let r = euclidean_reduce(&x)?;
            let v = json!({
                "curve": spec.render(),
                "element": x.to_string(),
                "y": r.y.to_string(),
                "value": degree_json(r.value),
            });
            Ok(Output::ok(records(json, &[v], &["element", "y", "value"])))
        }
        Command::Minimum { curve, places } => {
            let spec = curve_and_model(curve)?;
            let c = spec.model();
            let s = match places {
                Some(list) => parse_places(list, &c)?,
                None => c.infinity_places()?.1,
            };
            let m = minimum(&c, &s)?;
            let status = match m.status {
                MinimumStatus::Exact(_) => "EXACT",
                MinimumStatus::UpperBound(_) => "UPPER_BOUND",
            };
            let v = json!({
                "curve": spec.render(),
                "S": place_names(&s),
                "status": status,
                "value": m.status.value(),
                "method": m.method.tag(),
                "witness": m.witness.as_ref().map(|w| w.to_string()),
            });
            Ok(Output::ok(records(json, &[v], &["S", "status", "value", "method", "witness"])))
        }
        Command::Semigroup { m, r } => {
            let s = semigroup_gaps(*m, *r)?;
            let v = json!({
                "m": s.m,
                "r": s.r,
                "gaps": s.gaps,
                "genus": s.genus,
                "frobenius": s.frobenius,
            });
            Ok(Output::ok(records(json, &[v], &["m", "r", "gaps", "genus", "frobenius"])))
        }
        Command::Verify(args) => {
            let report = match (&args.curve, &args.family) {
                (Some(curve), None) => {
                    let spec = curve_and_model(curve)?;
                    let mut cfg = VerifyConfig {
                        seed: args.seed,
                        ..VerifyConfig::default()
                    };
                    cfg.samples = args.samples.unwrap_or(cfg.samples);
                    verify_curve(&spec, &cfg)
                }
                (None, Some(family)) => {
                    let (p, a, b) = parse_family(family)?;
                    let mut cfg = VerifyConfig::family(args.seed);
                    cfg.samples = args.samples.unwrap_or(cfg.samples);
                    family_sweep(p, a..=b, &cfg)
                }
                _ => return Err(Failure::Usage("verify needs a curve or --family".into())),
            };
            let text = if json { to_jsonl(&report) } else { to_table(&report) };
            let code = if report.all_passed() { EXIT_OK } else { EXIT_CHECK_FAILED };
            Ok(Output { text, code })
        }
    }
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if code == EXIT_OK { out } else { err };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    match execute(&cli) {
        Ok(o) => {
            let _ = out.write_all(o.text.as_bytes());
            o.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("ffmin").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn minimum_inert() {
        let (code, out, _) = call(&["minimum", "y^2=3*x^6+x+2 over gf(7)", "--json"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(out.trim()).unwrap();
        assert_eq!((v["status"].as_str(), v["value"].as_i64(), v["method"].as_str()), (Some("EXACT"), Some(4), Some("THM10")));
    }

    #[test]
    fn gaps_at_infinity() {
        let (code, out, _) = call(&["gaps", "y^2=x^5+2*x+1 over gf(7)", "--place", "inf"]);
        assert_eq!(code, 0);
        assert_eq!(out, "place  gaps  mu\ninf    1,3   3\n");
    }

    #[test]
    fn semigroup_three_four() {
        let (code, out, _) = call(&["semigroup", "3", "4", "--json"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(out.trim()).unwrap();
        assert_eq!(v["gaps"], json!([1, 2, 5]));
    }

    #[test]
    fn reduce_and_mu() {
        let (code, out, _) = call(&["reduce", "y^2=3*x^6+x+2 over gf(7)", "--element", "0;1/x", "--json"]);
        assert_eq!(code, 0);
        assert_eq!(serde_json::from_str::<Value>(out.trim()).unwrap()["value"], 4);
        let (code, out, _) = call(&["mu", "y^2=x^3-x over gf(7)", "--places", "x=0;x=1", "--json"]);
        assert_eq!(code, 0);
        assert_eq!(serde_json::from_str::<Value>(out.trim()).unwrap()["mu"], 0);
    }

    #[test]
    fn errors_exit_with_two() {
        assert_eq!(call(&["minimum", "y^2 = x^5 + x^5 over gf(7)"]).0, 2);
        assert_eq!(call(&["gaps", "y^2=x^5+2*x+1 over gf(7)", "--place", "nowhere"]).0, 2);
        assert_eq!(call(&["reduce", "y^2=x^6+3*x+1 over gf(7)", "--element", "1/x;0"]).0, 2);
        assert_eq!(call(&["bogus"]).0, 2);
        assert_eq!(call(&["verify"]).0, 2);
        let (code, _, err) = call(&["semigroup", "4", "6"]);
        assert_eq!(code, 2);
        assert!(err.contains("error"));
    }

    #[test]
    fn verify_single_curve() {
        let (code, out, _) = call(&["verify", "y^2=x^5+2*x+1 over gf(7)", "--samples", "20", "--json"]);
        assert_eq!(code, 0, "{out}");
        let last: Value = serde_json::from_str(out.lines().last().unwrap()).unwrap();
        assert_eq!(last["summary"]["failed"], 0);
    }
}
