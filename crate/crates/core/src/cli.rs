//! The `anfield` command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or parameter error.
//! Results go to stdout, progress to stderr.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::classification::{
    algebra_objects, autoequivalence_groups, braided_classes, descriptors, drinfeld_centre, enumerate_braided,
    enumerate_monoidal, invertible_subcategory,
};
use crate::cyclotomic::CyclotomicNumber;
use crate::error::Error;
use crate::fusion::{admissible, qdim, theta_symbol, CategoryParams, PivotalSign, SixJTable};
use crate::json::{set_approx_digits, to_canonical_string};
use crate::modular::{galois_orbits, s_matrix, t_matrix, BraidingParams};
use crate::tl::{jones_wenzl, level_delta, RationalFunction};
use crate::verify::{run_suite, SUITES};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "anfield", version, about = "Exact data for fusion categories with A_{k+1} fusion rules")]
struct Cli {
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: OutputFormat,
    /// Digits in decimal annotations.
    #[arg(long, default_value_t = 12, global = true)]
    digits: u32,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Monoidal and braided classification at level k.
    Classify {
        #[arg(long)]
        k: u32,
    },
    /// s, δ, dimensions, S, T, conductor and modularity of C^br_{k,ℓ,±}.
    Data {
        #[arg(long)]
        k: u32,
        #[arg(long, allow_hyphen_values = true)]
        ell: i64,
        #[arg(long, default_value = "+", allow_hyphen_values = true)]
        pivotal: String,
    },
    /// The Jones–Wenzl projector f(n), symbolic in δ or at level (k, m).
    Jw {
        #[arg(long)]
        n: usize,
        #[arg(long, requires = "m")]
        k: Option<u32>,
        #[arg(long, requires = "k", allow_hyphen_values = true)]
        m: Option<i64>,
    },
    /// The full 6j table of C_{k,m}.
    Sixj {
        #[arg(long)]
        k: u32,
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
    },
    /// All θ symbols of C_{k,m,±}.
    Theta {
        #[arg(long)]
        k: u32,
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
        #[arg(long, default_value = "+", allow_hyphen_values = true)]
        pivotal: String,
    },
    /// Runs a verification suite: jw, theta-oracle, sixj-oracle, pentagon, verlinde, tables.
    Verify {
        suite: String,
        #[arg(long, default_value_t = 4)]
        k_max: u32,
    },
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure { code: 2, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

/// Parses `args` (including the program name) and runs; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    configure_threads();
    set_approx_digits(cli.digits);
    match dispatch(&cli, out) {
        Ok(()) => 0,
        Err(f) => {
            eprintln!("anfield: {}", f.message);
            f.code
        }
    }
}

fn configure_threads() {
    if let Some(n) = std::env::var("ANFIELD_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        // a second call (tests running in-process) keeps the existing pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<(), Failure> {
    let text = match &cli.command {
        Command::Classify { k } => classify(*k, cli.format)?,
        Command::Data { k, ell, pivotal } => data(*k, *ell, pivotal, cli.format)?,
        Command::Jw { n, k, m } => jw(*n, k.zip(*m), cli.format)?,
        Command::Sixj { k, m } => sixj(*k, *m, cli.format)?,
        Command::Theta { k, m, pivotal } => theta(*k, *m, pivotal, cli.format)?,
        Command::Verify { suite, k_max } => return verify(suite, *k_max, cli.format, out),
    };
    writeln!(out, "{text}").map_err(|e| Failure { code: 1, message: e.to_string() })
}

fn json_text<T: Serialize>(v: &T) -> String {
    to_canonical_string(v)
}

fn decimal(x: &CyclotomicNumber, digits: u32) -> String {
    let a = x.approx_complex(digits);
    format!("{} + {}i", a.re, a.im)
}

fn coeff_field(x: &CyclotomicNumber) -> String {
    x.coeffs().iter().map(|c| format!("{}/{}", c.numer(), c.denom())).collect::<Vec<_>>().join(";")
}

fn csv_value(x: &CyclotomicNumber, digits: u32) -> String {
    let a = x.approx_complex(digits);
    format!("{},{},{},{}", x.order(), coeff_field(x), a.re, a.im)
}

fn classify(k: u32, format: OutputFormat) -> Result<String, Failure> {
    if k == 0 {
        return Err(usage("k must be at least 1"));
    }
    let monoidal = enumerate_monoidal(k);
    let braided = enumerate_braided(k);
    let per_monoidal: Vec<Value> = monoidal
        .iter()
        .map(|e| {
            let p = CategoryParams::plus(k, e.m as i64).expect("enumerated");
            json!({
                "m": e.m,
                "delta": e.delta,
                "algebra_objects": algebra_objects(&p),
                "drinfeld_centre": drinfeld_centre(&p).to_string(),
                "descriptors": descriptors(&p),
            })
        })
        .collect();
    let per_braided: Vec<Value> = braided
        .iter()
        .map(|e| {
            let bp = BraidingParams::plus(k, e.ell as i64).expect("enumerated");
            let inv = invertible_subcategory(&bp).map(|a| a.to_string()).unwrap_or_else(|e| format!("error: {e}"));
            json!({ "ell": e.ell, "m": e.m, "name": e.name, "invertible_subcategory": inv })
        })
        .collect();
    let (tensor, braided_aut) = autoequivalence_groups(k);
    let classes: Vec<Value> = braided_classes(k).into_iter().map(|(m, ells)| json!({"m": m, "ells": ells})).collect();
    let orbits = if k >= 2 { json!(galois_orbits(k)) } else { Value::Null };
    let record = json!({
        "k": k,
        "monoidal": per_monoidal,
        "braided": per_braided,
        "monoidal_classes": classes,
        "galois_orbits": orbits,
        "autoequivalences": {"tensor": tensor, "braided": braided_aut},
    });
    Ok(match format {
        OutputFormat::Json => json_text(&record),
        OutputFormat::Csv => {
            let mut s = String::from("ell,m,name,invertible_subcategory\n");
            for b in &per_braided {
                let name = b["name"].as_str().unwrap_or("");
                let _ = writeln!(s, "{},{},{},{}", b["ell"], b["m"], name, b["invertible_subcategory"].as_str().unwrap());
            }
            s.trim_end().to_string()
        }
        OutputFormat::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "level k = {k}");
            let _ = writeln!(s, "monoidal categories C_{{k,m}}: {}", monoidal.len());
            for (e, rec) in monoidal.iter().zip(&per_monoidal) {
                let _ = writeln!(s, "  m = {:<3} q+q^-1 ≈ {}", e.m, decimal(&e.delta, 6));
                let _ = writeln!(s, "        centre: {}", rec["drinfeld_centre"].as_str().unwrap());
                for a in rec["algebra_objects"].as_array().unwrap() {
                    let _ = writeln!(s, "        algebra 1+f{} -> {} (commutative: {})", a["summands"], a["module_category"].as_str().unwrap(), a["commutative"].as_str().unwrap());
                }
            }
            let _ = writeln!(s, "braided categories C^br_{{k,l}}: {}", braided.len());
            for b in &per_braided {
                let name = b["name"].as_str().map(|n| format!(" ({n})")).unwrap_or_default();
                let _ = writeln!(s, "  ell = {:<3} m = {:<3} Inv = {}{name}", b["ell"], b["m"], b["invertible_subcategory"].as_str().unwrap());
            }
            let _ = writeln!(s, "auto-equivalences: tensor {tensor}, braided {braided_aut}");
            if k >= 2 {
                let _ = writeln!(s, "Galois orbits: {:?}", galois_orbits(k));
            }
            s.trim_end().to_string()
        }
    })
}

fn parse_sign(s: &str) -> Result<PivotalSign, Failure> {
    s.parse().map_err(|e: Error| usage(e.to_string()))
}

fn data(k: u32, ell: i64, pivotal: &str, format: OutputFormat) -> Result<String, Failure> {
    let bp = BraidingParams::new(k, ell, parse_sign(pivotal)?)?;
    let p = bp.monoidal();
    let dims: Vec<CyclotomicNumber> = (0..=k).map(|n| qdim(&p, n).expect("n ≤ k")).collect();
    let s = s_matrix(&bp);
    let t = t_matrix(&bp);
    let report = bp.modular_report();
    let digits = crate::json::approx_digits();
    Ok(match format {
        OutputFormat::Json => json_text(&json!({
            "k": k, "ell": bp.ell(), "m": p.m(), "pivotal": bp.sign(),
            "s": bp.s(), "delta": bp.delta(), "dims": dims, "S": s, "T": t,
            "conductor": report.conductor, "rank": report.rank, "is_modular": report.is_modular,
        })),
        OutputFormat::Csv => {
            let mut out = String::from("field,row,col,order,coeffs,approx_re,approx_im\n");
            let _ = writeln!(out, "s,,,{}", csv_value(&bp.s(), digits));
            let _ = writeln!(out, "delta,,,{}", csv_value(&bp.delta(), digits));
            for (i, d) in dims.iter().enumerate() {
                let _ = writeln!(out, "dim,{i},,{}", csv_value(d, digits));
            }
            for (i, row) in s.iter().enumerate() {
                for (j, x) in row.iter().enumerate() {
                    let _ = writeln!(out, "S,{i},{j},{}", csv_value(x, digits));
                }
            }
            for (i, x) in t.iter().enumerate() {
                let _ = writeln!(out, "T,{i},{i},{}", csv_value(x, digits));
            }
            let _ = write!(out, "summary,conductor={},rank={},is_modular={},,", report.conductor, report.rank, report.is_modular);
            out
        }
        OutputFormat::Text => {
            let mut out = String::new();
            let _ = writeln!(out, "{bp} (monoidal m = {})", p.m());
            let _ = writeln!(out, "s = {}  ≈ {}", bp.s(), decimal(&bp.s(), digits));
            let _ = writeln!(out, "delta ≈ {}", decimal(&bp.delta(), digits));
            for (i, d) in dims.iter().enumerate() {
                let _ = writeln!(out, "dim X_{i} ≈ {}", decimal(d, digits));
            }
            let _ = writeln!(out, "S (approximate):");
            for row in &s {
                let cells: Vec<String> = row.iter().map(|x| format!("{:>10.5}", x.approx_f64().0)).collect();
                let _ = writeln!(out, "  {}", cells.join(" "));
            }
            let _ = writeln!(out, "T = diag({})", t.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", "));
            let _ = write!(out, "conductor {}, S-rank {}, modular: {}", report.conductor, report.rank, report.is_modular);
            out
        }
    })
}

fn jw(n: usize, level: Option<(u32, i64)>, format: OutputFormat) -> Result<String, Failure> {
    let terms: Vec<(Vec<[usize; 2]>, Value, String)> = match level {
        None => {
            let f = jones_wenzl(n, &RationalFunction::delta())?;
            f.terms()
                .iter()
                .map(|(d, c)| (d.pairs().iter().map(|&(a, b)| [a, b]).collect(), json!(c.to_string()), c.to_string()))
                .collect()
        }
        Some((k, m)) => {
            CategoryParams::plus(k, m)?;
            if n > k as usize + 1 {
                return Err(usage(format!("f({n}) needs n ≤ k+1 = {}", k + 1)));
            }
            let f = jones_wenzl(n, &level_delta(k, m))?;
            f.terms()
                .iter()
                .map(|(d, c)| (d.pairs().iter().map(|&(a, b)| [a, b]).collect(), json!(c), c.to_string()))
                .collect()
        }
    };
    Ok(match format {
        OutputFormat::Json => {
            let rows: Vec<Value> = terms.iter().map(|(p, v, _)| json!({"diagram": p, "coefficient": v})).collect();
            json_text(&json!({"n": n, "terms": rows}))
        }
        OutputFormat::Csv => {
            let mut s = String::from("diagram,coefficient\n");
            for (p, _, c) in &terms {
                let d: Vec<String> = p.iter().map(|[a, b]| format!("{a}-{b}")).collect();
                let _ = writeln!(s, "{},{}", d.join(" "), c);
            }
            s.trim_end().to_string()
        }
        OutputFormat::Text => {
            let width = terms.iter().map(|(_, _, c)| c.chars().count()).max().unwrap_or(0);
            let mut s = String::new();
            for (p, _, c) in &terms {
                let _ = writeln!(s, "{c:>width$}  {p:?}");
            }
            s.trim_end().to_string()
        }
    })
}

fn sixj(k: u32, m: i64, format: OutputFormat) -> Result<String, Failure> {
    let p = CategoryParams::plus(k, m)?;
    let table = SixJTable::new(&p)?;
    let digits = crate::json::approx_digits();
    Ok(match format {
        OutputFormat::Json => {
            let rows: Vec<Value> =
                table.iter().map(|(l, v)| json!({"labels": l.as_array(), "value": v})).collect();
            json_text(&json!({"k": k, "m": p.m(), "labels_order": "a b e c d f", "entries": rows}))
        }
        OutputFormat::Csv => {
            let mut s = String::from("a,b,e,c,d,f,order,coeffs,approx_re,approx_im\n");
            for (l, v) in table.iter() {
                let [a, b, e, c, d, f] = l.as_array();
                let _ = writeln!(s, "{a},{b},{e},{c},{d},{f},{}", csv_value(v, digits));
            }
            s.trim_end().to_string()
        }
        OutputFormat::Text => {
            let mut s = String::new();
            for (l, v) in table.iter() {
                let [a, b, e, c, d, f] = l.as_array();
                let _ = writeln!(s, "{{{a} {b} {e}; {c} {d} {f}}} ≈ {}", decimal(v, digits.min(8)));
            }
            s.trim_end().to_string()
        }
    })
}

fn theta(k: u32, m: i64, pivotal: &str, format: OutputFormat) -> Result<String, Failure> {
    let p = CategoryParams::new(k, m, parse_sign(pivotal)?)?;
    let mut rows = Vec::new();
    for a in 0..=k {
        for b in 0..=k {
            for c in (0..=k).filter(|&c| admissible(k, a, b, c)) {
                rows.push(([a, b, c], theta_symbol(&p, a, b, c)?));
            }
        }
    }
    let digits = crate::json::approx_digits();
    Ok(match format {
        OutputFormat::Json => {
            let entries: Vec<Value> = rows.iter().map(|(t, v)| json!({"labels": t, "value": v})).collect();
            json_text(&json!({"k": k, "m": p.m(), "pivotal": p.sign(), "entries": entries}))
        }
        OutputFormat::Csv => {
            let mut s = String::from("a,b,c,order,coeffs,approx_re,approx_im\n");
            for ([a, b, c], v) in &rows {
                let _ = writeln!(s, "{a},{b},{c},{}", csv_value(v, digits));
            }
            s.trim_end().to_string()
        }
        OutputFormat::Text => rows
            .iter()
            .map(|([a, b, c], v)| format!("theta({a},{b},{c}) ≈ {}", decimal(v, digits.min(8))))
            .collect::<Vec<_>>()
            .join("\n"),
    })
}

fn verify(suite: &str, k_max: u32, format: OutputFormat, out: &mut dyn Write) -> Result<(), Failure> {
    if !SUITES.contains(&suite) {
        return Err(usage(format!("unknown suite {suite:?}; expected one of {}", SUITES.join(", "))));
    }
    if k_max == 0 {
        return Err(usage("--k-max must be at least 1"));
    }
    eprintln!("running {suite} for k ≤ {k_max}");
    let start = Instant::now();
    let report = run_suite(suite, k_max).expect("known suite");
    eprintln!("{suite}: {} checks in {:.2?}", report.checked, start.elapsed());
    let text = match format {
        OutputFormat::Json => json_text(&json!({
            "suite": suite, "k_max": k_max, "passed": report.passed(),
            "checked": report.checked, "failures": report.failures,
        })),
        OutputFormat::Csv => {
            let mut s = format!("suite,k_max,passed,checked,failures\n{suite},{k_max},{},{},{}", report.passed(), report.checked, report.failures.len());
            for f in &report.failures {
                let _ = write!(s, "\nfailure,\"{}\"", f.replace('"', "'"));
            }
            s
        }
        OutputFormat::Text => {
            let mut s = format!("{suite}: {} ({} checks)", if report.passed() { "pass" } else { "FAIL" }, report.checked);
            for f in &report.failures {
                let _ = write!(s, "\n  {f}");
            }
            s
        }
    };
    writeln!(out, "{text}").map_err(|e| Failure { code: 1, message: e.to_string() })?;
    if report.passed() {
        Ok(())
    } else {
        Err(Failure { code: 1, message: format!("{} failures", report.failures.len()) })
    }
}
