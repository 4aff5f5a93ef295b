//! Command-line front end.
//!
//! `run` parses an argument vector and returns the exit code with the
//! rendered output. Exit codes: 0 on success, 2 when a NonGeneric or
//! Terminated signal is raised (the payload describes it), 1 on usage
//! and parse errors.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::alphabet::{parse_alphabet, VirtualAlphabet};
use crate::arith::{format_rational, DensePoly, Rational, Series};
use crate::closedform::{pade_to_order, remainder_one_by_sigma, remainder_sigma_by_one, remainder_sigma_by_sigma};
use crate::contfrac::cf_verify;
use crate::error::Error;
use crate::euclid::divide_iterate;
use crate::verify::{run_suites, Suite};
use crate::wronskian::{wronskian_closed, wronskian_det, WronskianQuery};

const ALPHABET_GRAMMAR: &str = "ALPHABET := PLUS [';' MINUS], each a comma-separated list of rationals \
(-?digits[/digits]), possibly empty. \"1,2;3\" is {1,2} - {3}.";

#[derive(Parser, Debug)]
#[command(
    name = "series-euclid",
    version,
    about = "Exact Euclidean division of formal series and its Schur-function closed forms",
    after_help = ALPHABET_GRAMMAR
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args, Debug)]
struct Common {
    /// Number of series coefficients; defaults to 2*(steps|k|depth)+6.
    #[arg(long)]
    order: Option<usize>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Iterated division of sigma(NUM) by sigma(DEN).
    Divide {
        #[arg(long, allow_hyphen_values = true)]
        num: String,
        #[arg(long, allow_hyphen_values = true)]
        den: String,
        #[arg(long)]
        steps: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Closed-form k-th remainder of sigma(A) by 1, by sigma(B) with
    /// --divisor, or of 1 by sigma(A) with --one-by-sigma.
    Remainder {
        #[arg(long, allow_hyphen_values = true)]
        alphabet: String,
        #[arg(long)]
        k: usize,
        #[arg(long, allow_hyphen_values = true, conflicts_with = "one_by_sigma")]
        divisor: Option<String>,
        #[arg(long)]
        one_by_sigma: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Padé approximant of sigma(A) with numerator degree k and
    /// denominator degree k-1.
    Pade {
        #[arg(long, allow_hyphen_values = true)]
        alphabet: String,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Wronskian of the remainder sequence against its closed form.
    Wronskian {
        #[arg(long, allow_hyphen_values = true)]
        alphabet: String,
        /// Comma-separated non-decreasing or arbitrary indices k_1..k_n.
        #[arg(long = "K")]
        k: String,
        #[command(flatten)]
        common: Common,
    },
    /// J-fraction levels and depth-d convergent of t*sigma_t(A).
    ///
    /// Depth 0 keeps z + s1 and drops the s2 tail, so a single-letter
    /// alphabet is represented exactly at depth 0.
    Cfrac {
        #[arg(long, allow_hyphen_values = true)]
        alphabet: String,
        #[arg(long)]
        depth: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Seeded property suites.
    Verify {
        /// Suite name, comma-separated list, or "all".
        #[arg(long, default_value = "all")]
        suite: String,
        /// Trials per suite; each suite has its own default.
        #[arg(long)]
        trials: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Run suites on separate threads.
        #[arg(long)]
        parallel: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

/// Exit code and text to print.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub output: String,
}

/// Runs one invocation; `argv[0]` is the program name.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            return Outcome { code, output: e.to_string() };
        }
    };
    let format = match &cli.command {
        Command::Divide { common, .. }
        | Command::Remainder { common, .. }
        | Command::Pade { common, .. }
        | Command::Wronskian { common, .. }
        | Command::Cfrac { common, .. } => common.format,
        Command::Verify { format, .. } => *format,
    };
    match dispatch(cli.command) {
        Ok((code, payload)) => Outcome { code, output: render(&payload, format) },
        Err(e) => error_outcome(&e, format),
    }
}

fn error_outcome(e: &Error, format: Format) -> Outcome {
    let payload = match e {
        Error::NonGeneric { vanishing } => {
            json!({"signal": e.signal_name(), "vanishing": vanishing.to_string()})
        }
        Error::Terminated { step } => json!({"signal": e.signal_name(), "step": step}),
        _ => json!({"error": e.signal_name(), "message": e.to_string()}),
    };
    let code = match e {
        Error::NonGeneric { .. } | Error::Terminated { .. } => 2,
        _ => 1,
    };
    let mut output = render(&payload, format);
    if matches!(e, Error::Parse { .. }) {
        output.push('\n');
        output.push_str(ALPHABET_GRAMMAR);
    }
    Outcome { code, output }
}

fn render(payload: &Value, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(payload).expect("json values serialize"),
        Format::Text => {
            let mut out = String::new();
            text_lines(payload, "", &mut out);
            out.pop();
            out
        }
    }
}

fn text_lines(v: &Value, prefix: &str, out: &mut String) {
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                let p = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                text_lines(x, &p, out);
            }
        }
        Value::Array(xs) if xs.iter().all(|x| !x.is_object() && !x.is_array()) => {
            let items: Vec<String> = xs.iter().map(scalar_text).collect();
            out.push_str(&format!("{prefix}: [{}]\n", items.join(", ")));
        }
        Value::Array(xs) => {
            for (i, x) in xs.iter().enumerate() {
                text_lines(x, &format!("{prefix}[{i}]"), out);
            }
        }
        _ => out.push_str(&format!("{prefix}: {}\n", scalar_text(v))),
    }
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn rational_json(r: &Rational) -> Value {
    Value::String(format_rational(r))
}

fn series_json(s: &Series) -> Value {
    json!({"order": s.order(), "coeffs": s.coeffs().iter().map(rational_json).collect::<Vec<_>>()})
}

fn poly_json(p: &DensePoly) -> Value {
    Value::Array(p.coeffs().iter().map(rational_json).collect())
}

fn default_order(order: Option<usize>, n: usize) -> usize {
    order.unwrap_or(2 * n + 6)
}

type Dispatch = crate::error::Result<(i32, Value)>;

fn dispatch(cmd: Command) -> Dispatch {
    match cmd {
        Command::Divide { num, den, steps, common } => divide(&num, &den, steps, default_order(common.order, steps)),
        Command::Remainder { alphabet: a, k, divisor, one_by_sigma, common } => {
            remainder(&a, k, divisor.as_deref(), one_by_sigma, default_order(common.order, k))
        }
        Command::Pade { alphabet: a, k, common } => pade_cmd(&a, k, default_order(common.order, k)),
        Command::Wronskian { alphabet: a, k, common } => wronskian_cmd(&a, &k, common.order),
        Command::Cfrac { alphabet: a, depth, common } => cfrac(&a, depth, default_order(common.order, depth)),
        Command::Verify { suite, trials, seed, parallel, .. } => verify(&suite, trials, seed, parallel),
    }
}

fn divide(num: &str, den: &str, steps: usize, order: usize) -> Dispatch {
    let (a, b) = (parse_alphabet(num)?, parse_alphabet(den)?);
    let trace = divide_iterate(&a, &b, steps, order)?;
    let steps_json: Vec<Value> = trace
        .steps
        .iter()
        .map(|s| {
            json!({
                "k": s.k,
                "alpha": rational_json(&s.alpha),
                "beta": rational_json(&s.beta),
                "remainder": series_json(&s.remainder),
            })
        })
        .collect();
    let mut payload = json!({
        "num": a,
        "den": b,
        "order": order,
        "dividend": series_json(&trace.dividend),
        "divisor": series_json(&trace.divisor),
        "steps": steps_json,
    });
    match &trace.terminated {
        Some(t) => {
            payload["signal"] = json!("Terminated");
            payload["terminated"] = json!({"step": t.step, "alpha": rational_json(&t.alpha)});
            Ok((2, payload))
        }
        None => Ok((0, payload)),
    }
}

fn remainder(a: &str, k: usize, divisor: Option<&str>, one_by_sigma: bool, order: usize) -> Dispatch {
    let a = parse_alphabet(a)?;
    let (kind, b, series) = if one_by_sigma {
        ("one_by_sigma", VirtualAlphabet::zero(), remainder_one_by_sigma(&a, k, order)?)
    } else if let Some(d) = divisor {
        let b = parse_alphabet(d)?;
        let s = remainder_sigma_by_sigma(&a, &b, k, order)?;
        ("sigma_by_sigma", b, s)
    } else {
        ("sigma_by_one", VirtualAlphabet::zero(), remainder_sigma_by_one(&a, k, order)?)
    };
    // recompute by division where the precision allows it
    let check_order = order + 2 * k;
    let (num, den) = if one_by_sigma { (VirtualAlphabet::zero(), a.clone()) } else { (a.clone(), b.clone()) };
    let division = divide_iterate(&num, &den, k, check_order).ok().and_then(|t| {
        t.remainder(k as isize).map(|f| f.truncate(order) == series)
    });
    Ok((
        0,
        json!({
            "kind": kind,
            "alphabet": a,
            "divisor": b,
            "k": k,
            "remainder": series_json(&series),
            "matches_division": division,
        }),
    ))
}

fn pade_cmd(a: &str, k: usize, order: usize) -> Dispatch {
    let a = parse_alphabet(a)?;
    let p = pade_to_order(&a, k, order)?;
    Ok((
        0,
        json!({
            "alphabet": a,
            "k": k,
            "numerator": poly_json(&p.numerator),
            "denominator": poly_json(&p.denominator),
            "contact_order": p.contact_order,
            "leading_deviation": p.leading_deviation.as_ref().map(rational_json),
            "order": p.order,
        }),
    ))
}

fn wronskian_cmd(a: &str, k: &str, order: Option<usize>) -> Dispatch {
    let a = parse_alphabet(a)?;
    let q: WronskianQuery = k.parse()?;
    let top = q.ks().iter().copied().max().unwrap_or(0);
    let order = default_order(order, top.max(q.n()));
    let det = wronskian_det(&q, &a, order)?;
    match wronskian_closed(&q, &a) {
        Ok(closed) => Ok((
            0,
            json!({"det": rational_json(&det), "closed": rational_json(&closed), "match": det == closed}),
        )),
        Err(Error::NonGeneric { vanishing }) => Ok((
            2,
            json!({"signal": "NonGeneric", "vanishing": vanishing.to_string(), "det": rational_json(&det)}),
        )),
        Err(e) => Err(e),
    }
}

fn cfrac(a: &str, depth: usize, order: usize) -> Dispatch {
    let a = parse_alphabet(a)?;
    let r = cf_verify(&a, depth, order)?;
    let levels: Vec<Value> = r
        .levels
        .iter()
        .map(|l| json!({"k": l.k, "s1": rational_json(&l.s1), "s2": rational_json(&l.s2)}))
        .collect();
    Ok((
        0,
        json!({
            "alphabet": a,
            "depth": r.depth,
            "levels": levels,
            "convergent": {
                "numerator": poly_json(&r.convergent.numerator),
                "denominator": poly_json(&r.convergent.denominator),
            },
            "matched_terms": r.matched_terms,
            "exact_to_order": r.exact_to_order,
            "levels_match_division": r.levels_match_division,
            "order": order,
        }),
    ))
}

fn verify(suite: &str, trials: Option<usize>, seed: u64, parallel: bool) -> Dispatch {
    let suites: Vec<Suite> = if suite == "all" {
        Suite::ALL.to_vec()
    } else {
        suite.split(',').map(|s| s.trim().parse()).collect::<crate::error::Result<_>>()?
    };
    let reports = run_suites(&suites, seed, trials, parallel);
    let passed = reports.iter().all(|r| r.passed);
    let payload = json!({"seed": seed, "passed": passed, "suites": reports});
    Ok((if passed { 0 } else { 1 }, payload))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::parse_rational;

    fn call(args: &[&str]) -> Outcome {
        run(std::iter::once("series-euclid").chain(args.iter().copied()))
    }

    fn json_of(o: &Outcome) -> Value {
        serde_json::from_str(&o.output).expect("json output")
    }

    #[test]
    fn divide_example() {
        let o = call(&["divide", "--num", "1,2", "--den", "", "--steps", "2", "--order", "10"]);
        assert_eq!(o.code, 0, "{}", o.output);
        let v = json_of(&o);
        let steps = v["steps"].as_array().unwrap();
        assert_eq!(steps.len(), 2);
        assert_eq!(steps[0]["k"], 0);
        assert_eq!(steps[0]["alpha"], "3");
        assert_eq!(steps[0]["beta"], "7");
        assert_eq!(steps[1]["alpha"], "-15/7");
        assert_eq!(steps[1]["beta"], "8/49");
        assert_eq!(steps[1]["remainder"]["order"], 6);
    }

    #[test]
    fn wronskian_example() {
        let o = call(&["wronskian", "--alphabet", "1,2", "--K", "1,2"]);
        assert_eq!(o.code, 0, "{}", o.output);
        assert_eq!(json_of(&o), json!({"det": "2", "closed": "2", "match": true}));
    }

    #[test]
    fn remainder_nongeneric_exits_two() {
        let o = call(&["remainder", "--alphabet", "1,2", "--k", "3"]);
        assert_eq!(o.code, 2);
        assert_eq!(json_of(&o), json!({"signal": "NonGeneric", "vanishing": "S_(4,4,4)"}));
    }

    #[test]
    fn remainder_matches_division() {
        for extra in [&[][..], &["--divisor", "-1/2"][..], &["--one-by-sigma"][..]] {
            let mut args = vec!["remainder", "--alphabet", "1,2,-3", "--k", "2"];
            args.extend_from_slice(extra);
            let o = call(&args);
            assert_eq!(o.code, 0, "{}", o.output);
            assert_eq!(json_of(&o)["matches_division"], true, "{extra:?}");
        }
    }

    #[test]
    fn division_termination_exits_two() {
        let o = call(&["divide", "--num", "1", "--den", "", "--steps", "3"]);
        assert_eq!(o.code, 2);
        let v = json_of(&o);
        assert_eq!(v["signal"], "Terminated");
        assert_eq!(v["terminated"]["step"], 1);
    }

    #[test]
    fn pade_anchor() {
        let o = call(&["pade", "--alphabet", "1,2", "--k", "2", "--order", "12"]);
        assert_eq!(o.code, 0, "{}", o.output);
        let v = json_of(&o);
        assert_eq!(v["numerator"], json!(["1", "6/7", "4/7"]));
        assert_eq!(v["denominator"], json!(["1", "-15/7"]));
        assert_eq!(v["contact_order"], 4);
        assert_eq!(v["leading_deviation"], "-8/7");
    }

    #[test]
    fn cfrac_terminating() {
        let o = call(&["cfrac", "--alphabet", "1,2", "--depth", "3"]);
        assert_eq!(o.code, 0, "{}", o.output);
        let v = json_of(&o);
        assert_eq!(v["levels"][0], json!({"k": 0, "s1": "-3", "s2": "2"}));
        assert_eq!(v["exact_to_order"], true);
    }

    #[test]
    fn usage_errors_exit_one() {
        assert_eq!(call(&["divide", "--num", "1"]).code, 1);
        assert_eq!(call(&["frobnicate"]).code, 1);
        let bad = call(&["pade", "--alphabet", "1,x", "--k", "1"]);
        assert_eq!(bad.code, 1);
        assert!(bad.output.contains("ParseError"));
        assert_eq!(call(&["--help"]).code, 0);
        assert_eq!(call(&["verify", "--suite", "nope"]).code, 1);
    }

    #[test]
    fn hyphenated_alphabets() {
        let o = call(&["pade", "--alphabet", "-1,2/3;-5", "--k", "1"]);
        assert_eq!(o.code, 0, "{}", o.output);
    }

    #[test]
    fn rationals_round_trip() {
        let o = call(&["divide", "--num", "1/3,-2,5/7", "--den", "3/2", "--steps", "3"]);
        assert_eq!(o.code, 0, "{}", o.output);
        let v = json_of(&o);
        let mut seen = 0;
        for s in v["steps"].as_array().unwrap() {
            for key in ["alpha", "beta"] {
                let text = s[key].as_str().unwrap();
                assert_eq!(format_rational(&parse_rational(text).unwrap()), text);
                seen += 1;
            }
            for c in s["remainder"]["coeffs"].as_array().unwrap() {
                let text = c.as_str().unwrap();
                assert_eq!(format_rational(&parse_rational(text).unwrap()), text);
            }
        }
        assert_eq!(seen, 6);
    }

    #[test]
    fn verify_is_deterministic() {
        let args = ["verify", "--suite", "theorem1,signs", "--trials", "3", "--seed", "17"];
        let first = call(&args);
        assert_eq!(first.code, 0, "{}", first.output);
        assert_eq!(first, call(&args));
        let mut par = args.to_vec();
        par.push("--parallel");
        assert_eq!(first, call(&par));
    }

    #[test]
    fn text_format() {
        let o = call(&["wronskian", "--alphabet", "1,2", "--K", "1,2", "--format", "text"]);
        assert_eq!(o.output, "closed: 2\ndet: 2\nmatch: true");
    }
}
