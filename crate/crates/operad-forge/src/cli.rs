//! Command-line surface: parse elements, run (co)products and idempotents, run verification suites.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::combinatorics::{parse_element, Basis, BasisKind, Label};
use crate::free_bialgebra::{default_partner, FreeAlgebra, Lc};
use crate::idempotents::{
    check_idempotent, compare_series, extract_primitives, operad_primitives, rigidity_roundtrip, series_idempotent,
    Idempotent, SeriesKind,
};
use crate::laws::{catalogue, check_compatible_basis, check_law_sampled, find_law, LawEntry};
use crate::operads::{Operad, ALL};
use crate::report::{lincomb_json, tensor_json, SCHEMA};
use crate::solomon_tits::{check_hopf, nongeneration_certificate};

#[derive(Parser, Debug)]
#[command(name = "operad-forge", version, about = "Free bialgebras over operads")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value = "text")]
    pub format: Format,
    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads for the parallel checks.
    #[arg(long, global = true, env = "OPERAD_FORGE_JOBS")]
    pub jobs: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Apply a generating operation to basis elements.
    Eval {
        #[arg(long)]
        operad: String,
        #[arg(long)]
        op: Option<String>,
        #[arg(required = true)]
        elements: Vec<String>,
    },
    /// Apply a generating cooperation to a basis element.
    Coprod {
        #[arg(long)]
        operad: String,
        #[arg(long)]
        op: Option<String>,
        element: String,
    },
    /// Apply the idempotent to elements, or check its properties on a free algebra when none are given.
    Idem {
        #[arg(long)]
        operad: String,
        #[arg(long)]
        coalgebra: Option<String>,
        #[arg(long, default_value_t = 5)]
        degree: usize,
        #[arg(long, default_value = "a,b")]
        generators: String,
        /// Also evaluate the series idempotent (perm, nap, pan).
        #[arg(long)]
        series: bool,
        elements: Vec<String>,
    },
    /// Check one law, or all catalogued laws.
    CheckLaw {
        #[arg(long, default_value = "all")]
        law: String,
        #[arg(long)]
        bound: Option<usize>,
        /// Check only this many cases, drawn with --seed.
        #[arg(long)]
        sample: Option<usize>,
    },
    /// Check the compatible-basis criterion.
    CheckBasis {
        #[arg(long, default_value = "all")]
        operad: String,
        #[arg(long, default_value_t = 4)]
        bound: usize,
    },
    /// Dimensions of the arity-n components for n = 1..max.
    Dims {
        #[arg(long)]
        operad: String,
        #[arg(long, alias = "degree")]
        max: usize,
    },
    /// Primitive elements by degree.
    Primitives {
        #[arg(long)]
        operad: String,
        #[arg(long, default_value_t = 3)]
        degree: usize,
        #[arg(long, default_value = "a,b")]
        generators: String,
    },
    /// Cofiltration, primitives and generation on a free algebra.
    Roundtrip {
        #[arg(long)]
        operad: String,
        #[arg(long, default_value_t = 4)]
        degree: usize,
        #[arg(long, default_value = "a,b")]
        generators: String,
    },
    /// The stuffle/block bialgebra: Hopf check and non-generation certificate.
    StDemo {
        #[arg(long, default_value = "(1,1,2)")]
        target: String,
        #[arg(long, default_value_t = 4)]
        bound: usize,
    },
}

/// Exit code and rendered report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub output: String,
}

struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

fn operad(name: &str) -> Result<Operad, Usage> {
    Ok(Operad::from_name(name)?)
}

fn positive(name: &str, v: usize) -> Result<usize, Usage> {
    if v == 0 {
        Err(Usage(format!("--{name} must be positive")))
    } else {
        Ok(v)
    }
}

/// `3` gives `a,b,c`; otherwise a comma list of single letters or numbers.
pub fn parse_generators(text: &str) -> Result<Vec<Label>, String> {
    if let Ok(n) = text.trim().parse::<u32>() {
        if n == 0 || n > 26 {
            return Err(format!("generator count {n} out of range 1..=26"));
        }
        return Ok((0..n).map(|i| Label::Sym((b'a' + i as u8) as char)).collect());
    }
    let mut out = Vec::new();
    for part in text.split(',') {
        let p = part.trim();
        let l = match (p.parse::<u32>(), p.chars().count()) {
            (Ok(n), _) if n > 0 => Label::Num(n),
            (_, 1) if p.chars().all(|c| c.is_ascii_alphabetic()) => Label::Sym(p.chars().next().unwrap()),
            _ => return Err(format!("bad generator '{p}'")),
        };
        if out.contains(&l) {
            return Err(format!("repeated generator '{p}'"));
        }
        out.push(l);
    }
    Ok(out)
}

fn element(o: Operad, text: &str) -> Result<Basis, Usage> {
    let b = parse_element(o.kind(), text)?;
    if !o.accepts(&b) {
        return Err(Usage(format!("'{text}' is not a basis element of {o}")));
    }
    Ok(b)
}

fn render(format: Format, verb: &str, body: Value, text: String) -> String {
    match format {
        Format::Text => text,
        Format::Json => {
            let mut v = json!({"schema": SCHEMA, "verb": verb});
            if let (Value::Object(m), Value::Object(b)) = (&mut v, body) {
                m.extend(b);
            }
            serde_json::to_string_pretty(&v).unwrap() + "\n"
        }
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).unwrap()
}

/// Runs a parsed command.
pub fn run(cli: &Cli) -> Outcome {
    if let Some(j) = cli.jobs {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build_global();
    }
    match dispatch(cli) {
        Ok(o) => o,
        Err(Usage(msg)) => Outcome { code: 2, output: format!("error: {msg}\n") },
    }
}

/// Parses `args` (without the program name) and runs; usage errors map to exit code 2.
pub fn run_args<I, S>(args: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let argv = std::iter::once(std::ffi::OsString::from("operad-forge")).chain(args.into_iter().map(Into::into));
    match Cli::try_parse_from(argv) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            Outcome { code, output: e.render().to_string() }
        }
    }
}

fn dispatch(cli: &Cli) -> Result<Outcome, Usage> {
    let fmt = cli.format;
    let ok = |output: String| Outcome { code: 0, output };
    let verdict = |passed: bool, output: String| Outcome { code: if passed { 0 } else { 1 }, output };
    match &cli.command {
        Command::Eval { operad: name, op, elements } => {
            let o = operad(name)?;
            let op = op.clone().unwrap_or_else(|| o.default_op());
            let args: Vec<Basis> = elements.iter().map(|t| element(o, t)).collect::<Result<_, _>>()?;
            let refs: Vec<&Basis> = args.iter().collect();
            let r = o.product(&op, &refs)?;
            let body = json!({"operad": o.name(), "op": op, "args": elements, "result": lincomb_json(&r)});
            Ok(ok(render(fmt, "eval", body, format!("{r}\n"))))
        }
        Command::Coprod { operad: name, op, element: text } => {
            let o = operad(name)?;
            let op = op.clone().unwrap_or_else(|| o.coops()[0].name.clone());
            let x = element(o, text)?;
            let r = o.coproduct(&op, &x)?;
            let body = json!({"operad": o.name(), "op": op, "element": text, "result": tensor_json(&r)});
            Ok(ok(render(fmt, "coprod", body, format!("{r}\n"))))
        }
        Command::Idem { operad: name, coalgebra, degree, generators, series, elements } => {
            let a = operad(name)?;
            let c = match coalgebra {
                Some(n) => operad(n)?,
                None => default_partner(a),
            };
            positive("degree", *degree)?;
            let kind = if *series {
                Some(SeriesKind::from_operad(a).ok_or_else(|| Usage(format!("{a} has no series idempotent")))?)
            } else {
                None
            };
            if elements.is_empty() {
                let fa = FreeAlgebra::with_coalgebra(a, c, parse_generators(generators)?);
                let r = check_idempotent(&fa, *degree)?;
                let mut text = format!(
                    "{} {a}/{c} on {} generators to degree {}: {} elements\n",
                    if r.passed { "PASS" } else { "FAIL" },
                    r.generators,
                    r.bound,
                    r.elements
                );
                if let Some(f) = &r.first_failure {
                    let _ = writeln!(text, "first failure: {f}");
                }
                let mut body = json!({"report": to_value(&r)});
                if let Some(k) = kind {
                    let s = compare_series(k, *degree)?;
                    let _ = writeln!(
                        text,
                        "series: {} on {} elements",
                        if s.agree { "agrees" } else { "disagrees" },
                        s.checked
                    );
                    if let Some(d) = &s.first_discrepancy {
                        let _ = writeln!(text, "first discrepancy at {}: series {} vs {}", d.element, d.series, d.inductive);
                    }
                    body["series"] = to_value(&s);
                }
                return Ok(verdict(r.passed, render(fmt, "idem", body, text)));
            }
            let xs: Vec<Basis> = elements.iter().map(|t| element(a, t)).collect::<Result<_, _>>()?;
            let bound = xs.iter().map(Basis::degree).max().unwrap_or(1).max(*degree);
            let mut e = Idempotent::for_operads(a, c, bound)?;
            let mut text = String::new();
            let mut rows = Vec::new();
            for (t, x) in elements.iter().zip(&xs) {
                let v = e.apply(&Lc::single(x.clone()))?;
                let _ = writeln!(text, "e({t}) = {v}");
                let mut row = json!({"element": t, "idempotent": lincomb_json(&v)});
                if let Some(k) = kind {
                    let s = series_idempotent(k, &Lc::single(x.clone()));
                    let _ = writeln!(text, "series({t}) = {s}");
                    row["series"] = lincomb_json(&s);
                }
                rows.push(row);
            }
            let body = json!({"algebra": a.name(), "coalgebra": c.name(), "results": rows});
            Ok(ok(render(fmt, "idem", body, text)))
        }
        Command::CheckLaw { law, bound, sample } => {
            let entries: Vec<LawEntry> = if law == "all" { catalogue() } else { vec![find_law(law)?] };
            if let Some(b) = bound {
                positive("bound", *b)?;
            }
            if let Some(s) = sample {
                positive("sample", *s)?;
            }
            let mut text = String::new();
            let mut reports = Vec::new();
            let mut passed = true;
            for e in &entries {
                let r = check_law_sampled(e, bound.unwrap_or(e.bound), sample.map(|s| (s, cli.seed)));
                passed &= r.passed;
                let _ = writeln!(
                    text,
                    "{} {} ({}/{}) bound {}: {} cases",
                    if r.passed { "PASS" } else { "FAIL" },
                    r.law,
                    r.algebra,
                    r.coalgebra,
                    r.bound,
                    r.cases
                );
                if let Some(c) = &r.counterexample {
                    let _ = writeln!(text, "  counterexample: {}({}({}))", c.delta, c.mu, c.args.join(", "));
                    let _ = writeln!(text, "  lhs - rhs = {}", c.difference);
                }
                reports.push(to_value(&r));
            }
            let body = json!({"passed": passed, "laws": reports});
            Ok(verdict(passed, render(fmt, "check-law", body, text)))
        }
        Command::CheckBasis { operad: name, bound } => {
            positive("bound", *bound)?;
            let ops: Vec<Operad> =
                if name == "all" { ALL.into_iter().filter(|o| o.symmetric()).collect() } else { vec![operad(name)?] };
            let mut text = String::new();
            let mut reports = Vec::new();
            let mut passed = true;
            for o in ops {
                let r = check_compatible_basis(o, *bound);
                passed &= r.passed;
                let _ = writeln!(text, "{} {} arity ≤ {}", if r.passed { "PASS" } else { "FAIL" }, r.operad, r.max_arity);
                if let Some(f) = &r.failure {
                    let _ = writeln!(text, "  {f}");
                }
                reports.push(to_value(&r));
            }
            let body = json!({"passed": passed, "operads": reports});
            Ok(verdict(passed, render(fmt, "check-basis", body, text)))
        }
        Command::Dims { operad: name, max } => {
            let o = operad(name)?;
            positive("max", *max)?;
            let dims: Vec<usize> = (1..=*max).map(|n| o.basis(n).len()).collect();
            let text = dims.iter().map(usize::to_string).collect::<Vec<_>>().join(" ") + "\n";
            let body = json!({"operad": o.name(), "dimensions": dims});
            Ok(ok(render(fmt, "dims", body, text)))
        }
        Command::Primitives { operad: name, degree, generators } => {
            let o = operad(name)?;
            positive("degree", *degree)?;
            let prims: Vec<Lc> = if o.is_free() {
                let fa = FreeAlgebra::new(o, parse_generators(generators)?);
                extract_primitives(&fa, *degree)
            } else {
                (1..=*degree).flat_map(|n| operad_primitives(o, n)).collect()
            };
            let mut text = String::new();
            let mut rows = Vec::new();
            for d in 1..=*degree {
                let here: Vec<&Lc> = prims.iter().filter(|p| p.keys().next().map(Basis::degree) == Some(d)).collect();
                let _ = writeln!(text, "degree {d}: {}", here.len());
                for p in &here {
                    let _ = writeln!(text, "  {p}");
                }
                rows.push(json!({"degree": d, "basis": here.iter().map(|p| lincomb_json(p)).collect::<Vec<_>>()}));
            }
            let body = json!({"operad": o.name(), "degrees": rows});
            Ok(ok(render(fmt, "primitives", body, text)))
        }
        Command::Roundtrip { operad: name, degree, generators } => {
            let o = operad(name)?;
            positive("degree", *degree)?;
            let fa = FreeAlgebra::new(o, parse_generators(generators)?);
            let r = rigidity_roundtrip(&fa, *degree)?;
            let mut text = format!(
                "{} {}/{} on {} generators to degree {}\n",
                if r.passed { "PASS" } else { "FAIL" },
                r.algebra,
                r.coalgebra,
                r.generators,
                r.bound
            );
            for row in &r.degrees {
                let _ = writeln!(
                    text,
                    "degree {}: dim {} primitives {} generated {}",
                    row.degree, row.dimension, row.primitives, row.generated
                );
            }
            let body = json!({"report": to_value(&r)});
            Ok(verdict(r.passed, render(fmt, "roundtrip", body, text)))
        }
        Command::StDemo { target, bound } => {
            positive("bound", *bound)?;
            let t = parse_element(BasisKind::Surjection, target)?;
            let cert = nongeneration_certificate(t.as_surj());
            let hopf = check_hopf(*bound);
            let verdict_word = if cert.generated { "GENERATED" } else { "NOT-GENERATED" };
            let mut text = format!(
                "hopf law on pairs with n + m ≤ {}: {} ({} pairs)\n",
                hopf.max_total,
                if hopf.passed { "PASS" } else { "FAIL" },
                hopf.pairs
            );
            let _ = writeln!(
                text,
                "degree {} component: dimension {}, primitives by degree {:?}",
                cert.degree, cert.component_dimension, cert.primitive_dimensions
            );
            let _ = writeln!(text, "product span rank {}, with target {}", cert.product_span_rank, cert.augmented_rank);
            let _ = writeln!(text, "{}: {verdict_word}", cert.target);
            let body = json!({"hopf": to_value(&hopf), "certificate": to_value(&cert), "verdict": verdict_word});
            Ok(verdict(hopf.passed, render(fmt, "st-demo", body, text)))
        }
    }
}
