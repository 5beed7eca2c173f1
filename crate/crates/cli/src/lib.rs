//! Command-line front end for the `knotinv` library.
//!
//! Exit codes: 0 on success, 1 when a verification fails, 2 on invalid input.

use std::ffi::OsString;
use std::fmt::Display;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use knotinv::epsilon_order::{class_of_expression, compare};
use knotinv::knot_algebra::{
    family_jk_lk, family_phi, family_upsilon, genus_bounds, independence_certificate, Hom, KnotExpression,
};
use knotinv::phi::{phi_torus_direct, phi_torus_recursive, TorusPhiCache};
use knotinv::pl::{rational_to_json, Rational};
use knotinv::semigroup::{apery, phi_of_set, torus_semigroup, PhiSequence};
use knotinv::staircase::staircase_from_semigroup;
use knotinv::upsilon::{upsilon_lspace, TorusUpsilonCache};

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Parser, Debug)]
#[command(name = "knotinv", version, about = "Exact phi and Upsilon invariants of L-space knots")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
#[group(multiple = false)]
struct PhiMethod {
    /// Use the torus-knot recursion only.
    #[arg(long)]
    recursive: bool,
    /// Count gaps of the semigroup directly (default).
    #[arg(long)]
    direct: bool,
    /// Run both methods and compare them.
    #[arg(long)]
    both: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Semigroup <p, q> of the torus knot T(p, q).
    Semigroup { p: i64, q: i64 },
    /// Apéry set of <p, q> with respect to a member.
    Apery {
        p: i64,
        q: i64,
        #[arg(long)]
        base: i64,
    },
    /// The phi invariant of T(p, q).
    Phi {
        p: i64,
        q: i64,
        #[command(flatten)]
        method: PhiMethod,
    },
    /// Upsilon of a knot expression such as "T(3,4) # -T(2,5)".
    Upsilon {
        expr: String,
        /// Write the breakpoints as CSV to this file.
        #[arg(long)]
        plot: Option<PathBuf>,
    },
    /// Check the phi recursion against gap counting on a sweep of torus knots.
    VerifyMain {
        #[arg(long)]
        pmax: i64,
        #[arg(long)]
        kmax: i64,
    },
    /// Check the Upsilon cabling recursion against the semigroup formula.
    VerifyFk {
        #[arg(long)]
        pmax: i64,
        #[arg(long, default_value_t = 100)]
        qmax: i64,
    },
    /// Build a knot family and optionally its independence certificate.
    Family {
        #[arg(value_enum)]
        kind: FamilyKind,
        /// `p,r,k;p,r,k;...` for phi and upsilon, `k,k,...` for jk.
        params: String,
        /// Write the independence certificate as JSON to this file.
        #[arg(long)]
        certificate: Option<PathBuf>,
    },
    /// Compare the epsilon classes of two expressions.
    EpsCompare { left: String, right: String },
    /// Lower bounds N/2 and T for the splitting concordance genus.
    GenusBounds { expr: String },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum FamilyKind {
    Phi,
    Upsilon,
    Jk,
}

enum Failure {
    Invalid(String),
    Verification(String),
}

impl From<knotinv::Error> for Failure {
    fn from(e: knotinv::Error) -> Self {
        Failure::Invalid(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Invalid(format!("i/o error: {e}"))
    }
}

type Outcome = Result<(), Failure>;

/// Parses `args` (including the program name) and runs the command,
/// writing results to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(()) => 0,
        Err(Failure::Verification(msg)) => {
            let _ = writeln!(err, "verification failed: {msg}");
            1
        }
        Err(Failure::Invalid(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Outcome {
    let fmt = cli.format;
    match &cli.command {
        Command::Semigroup { p, q } => cmd_semigroup(*p, *q, fmt, out),
        Command::Apery { p, q, base } => cmd_apery(*p, *q, *base, fmt, out),
        Command::Phi { p, q, method } => cmd_phi(*p, *q, method, fmt, out),
        Command::Upsilon { expr, plot } => cmd_upsilon(expr, plot.as_ref(), fmt, out),
        Command::VerifyMain { pmax, kmax } => cmd_verify_main(*pmax, *kmax, fmt, out),
        Command::VerifyFk { pmax, qmax } => cmd_verify_fk(*pmax, *qmax, fmt, out),
        Command::Family { kind, params, certificate } => cmd_family(*kind, params, certificate.as_ref(), fmt, out),
        Command::EpsCompare { left, right } => cmd_eps_compare(left, right, fmt, out),
        Command::GenusBounds { expr } => cmd_genus_bounds(expr, fmt, out),
    }
}

fn parse_expr(s: &str) -> Result<KnotExpression, Failure> {
    s.parse().map_err(|e: knotinv::Error| Failure::Invalid(e.to_string()))
}

fn phi_json(s: &PhiSequence) -> Value {
    json!(s.to_vec(s.support_max()))
}

fn phi_text(s: &PhiSequence) -> String {
    format!("({})", list(&s.to_vec(s.support_max())))
}

fn phi_csv(s: &PhiSequence) -> String {
    let mut body = String::from("j,phi_j\n");
    for j in 1..=s.support_max() {
        body.push_str(&format!("{j},{}\n", s.get(j)));
    }
    body
}

/// `num/den (decimal)`.
fn rational_text(q: &Rational) -> String {
    if q.is_integer() {
        return q.to_string();
    }
    let approx = q.to_f64().unwrap_or(f64::NAN);
    format!("{q} (~{approx:.6})")
}

fn print_json(out: &mut dyn Write, v: &Value) -> Outcome {
    writeln!(out, "{}", serde_json::to_string_pretty(v).expect("json values serialize"))?;
    Ok(())
}

fn list<T: Display>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn cmd_semigroup(p: i64, q: i64, fmt: Format, out: &mut dyn Write) -> Outcome {
    let s = torus_semigroup(p, q)?;
    let st = staircase_from_semigroup(&s)?;
    let members: Vec<i64> = s.members_below(s.conductor()).collect();
    match fmt {
        Format::Json => print_json(
            out,
            &json!({
                "generators": s.generators(),
                "conductor": s.conductor(),
                "genus": s.genus(),
                "members_below_conductor": members,
                "staircase": st.steps(),
            }),
        ),
        Format::Csv => {
            writeln!(out, "n,member")?;
            for n in 0..=s.conductor() {
                writeln!(out, "{n},{}", u8::from(s.contains(n)))?;
            }
            Ok(())
        }
        Format::Text => {
            writeln!(out, "semigroup: {}", s.to_int_set())?;
            writeln!(out, "generators: {}", list(s.generators()))?;
            writeln!(out, "conductor: {}", s.conductor())?;
            writeln!(out, "genus: {}", s.genus())?;
            writeln!(out, "staircase: {st}")?;
            Ok(())
        }
    }
}

fn cmd_apery(p: i64, q: i64, base: i64, fmt: Format, out: &mut dyn Write) -> Outcome {
    let s = torus_semigroup(p, q)?;
    let a = apery(&s, base)?;
    match fmt {
        Format::Json => {
            let blocks: Vec<Value> = a
                .blocks
                .iter()
                .enumerate()
                .map(|(i, b)| json!({"i": i + 1, "members": b.explicit(), "phi": phi_json(&phi_of_set(b))}))
                .collect();
            print_json(
                out,
                &json!({"base": base, "beta": a.beta, "omega": a.omega, "kappa": a.kappa, "blocks": blocks}),
            )
        }
        Format::Csv => {
            writeln!(out, "i,omega,kappa")?;
            for (i, (w, k)) in a.omega.iter().zip(&a.kappa).enumerate() {
                writeln!(out, "{i},{w},{k}")?;
            }
            Ok(())
        }
        Format::Text => {
            writeln!(out, "beta:  {}", list(&a.beta))?;
            writeln!(out, "omega: {}", list(&a.omega))?;
            writeln!(out, "kappa: {}", list(&a.kappa))?;
            for (i, b) in a.blocks.iter().enumerate() {
                writeln!(out, "A_{} = {}  Phi = {}", i + 1, b, phi_text(&phi_of_set(b)))?;
            }
            Ok(())
        }
    }
}

fn cmd_phi(p: i64, q: i64, m: &PhiMethod, fmt: Format, out: &mut dyn Write) -> Outcome {
    let direct = (!m.recursive).then(|| phi_torus_direct(p, q)).transpose()?;
    let recursive = (m.recursive || m.both).then(|| phi_torus_recursive(p, q)).transpose()?;
    let matched = match (&direct, &recursive) {
        (Some(d), Some(r)) => Some(d == r),
        _ => None,
    };
    match fmt {
        Format::Json => {
            let mut v = json!({"p": p, "q": q});
            if let Some(d) = &direct {
                v["direct"] = phi_json(d);
            }
            if let Some(r) = &recursive {
                v["recursive"] = phi_json(r);
            }
            if let Some(ok) = matched {
                v["match"] = json!(ok);
            }
            print_json(out, &v)?;
        }
        Format::Csv => {
            let s = direct.as_ref().or(recursive.as_ref()).expect("one method ran");
            write!(out, "{}", phi_csv(s))?;
        }
        Format::Text => {
            if let Some(d) = &direct {
                writeln!(out, "direct:    {}", phi_text(d))?;
            }
            if let Some(r) = &recursive {
                writeln!(out, "recursive: {}", phi_text(r))?;
            }
            if let Some(ok) = matched {
                writeln!(out, "{}", if ok { "MATCH" } else { "MISMATCH" })?;
            }
        }
    }
    match matched {
        Some(false) => Err(Failure::Verification(format!("phi(T({p},{q})) differs between methods"))),
        _ => Ok(()),
    }
}

fn cmd_upsilon(expr: &str, plot: Option<&PathBuf>, fmt: Format, out: &mut dyn Write) -> Outcome {
    let e = parse_expr(expr)?;
    let f = e.upsilon();
    if let Some(path) = plot {
        fs::write(path, f.to_csv())?;
    }
    match fmt {
        Format::Json => print_json(out, &json!({"expr": e.to_string(), "upsilon": f.to_json()})),
        Format::Csv => {
            write!(out, "{}", f.to_csv())?;
            Ok(())
        }
        Format::Text => {
            writeln!(out, "knot: {e}")?;
            for (t, v) in f.points() {
                writeln!(out, "t = {}  Upsilon = {}", rational_text(t), rational_text(v))?;
            }
            for (t, jump) in f.singularities() {
                writeln!(out, "jump at t = {}: {}", rational_text(&t), rational_text(&jump))?;
            }
            Ok(())
        }
    }
}

fn check_bound(name: &str, v: i64, min: i64) -> Outcome {
    if v < min {
        return Err(Failure::Invalid(format!("--{name} must be at least {min}, got {v}")));
    }
    Ok(())
}

fn cmd_verify_main(pmax: i64, kmax: i64, fmt: Format, out: &mut dyn Write) -> Outcome {
    check_bound("pmax", pmax, 2)?;
    check_bound("kmax", kmax, 1)?;
    let mut cache = TorusPhiCache::new();
    let mut checked = 0u64;
    for p in 2..=pmax {
        for r in (1..p).filter(|r| r.gcd(&p) == 1) {
            for k in 1..=kmax {
                let q = k * p + r;
                let rec = cache.get(p, q)?;
                let dir = phi_torus_direct(p, q)?;
                if rec != dir {
                    return Err(Failure::Verification(format!(
                        "(p,r,k) = ({p},{r},{k}): recursion {} vs direct {}",
                        phi_text(&rec),
                        phi_text(&dir)
                    )));
                }
                checked += 1;
            }
        }
    }
    report_sweep(out, fmt, "phi recursion", checked)
}

fn cmd_verify_fk(pmax: i64, qmax: i64, fmt: Format, out: &mut dyn Write) -> Outcome {
    check_bound("pmax", pmax, 2)?;
    check_bound("qmax", qmax, 3)?;
    let mut cache = TorusUpsilonCache::new();
    let mut checked = 0u64;
    for p in 2..=pmax {
        for q in (p + 1..=qmax).filter(|q| q.gcd(&p) == 1) {
            let fk = cache.get(p, q)?;
            let direct = upsilon_lspace(&torus_semigroup(p, q)?);
            if fk != direct {
                return Err(Failure::Verification(format!("(p,q) = ({p},{q}): recursion {fk} vs direct {direct}")));
            }
            checked += 1;
        }
    }
    report_sweep(out, fmt, "Upsilon recursion", checked)
}

fn report_sweep(out: &mut dyn Write, fmt: Format, what: &str, checked: u64) -> Outcome {
    match fmt {
        Format::Json => print_json(out, &json!({"checked": checked, "pass": true})),
        Format::Csv => {
            writeln!(out, "checked,pass\n{checked},true")?;
            Ok(())
        }
        Format::Text => {
            writeln!(out, "{what}: {checked} cases agree")?;
            Ok(())
        }
    }
}

fn parse_ints(s: &str) -> Result<Vec<i64>, Failure> {
    s.split(',')
        .map(|x| x.trim().parse().map_err(|_| Failure::Invalid(format!("`{x}` is not an integer"))))
        .collect()
}

fn parse_triples(s: &str) -> Result<Vec<(i64, i64, i64)>, Failure> {
    s.split(';')
        .filter(|t| !t.trim().is_empty())
        .map(|t| match parse_ints(t)?.as_slice() {
            &[p, r, k] => Ok((p, r, k)),
            _ => Err(Failure::Invalid(format!("`{t}` is not a p,r,k triple"))),
        })
        .collect()
}

fn cmd_family(
    kind: FamilyKind,
    params: &str,
    certificate: Option<&PathBuf>,
    fmt: Format,
    out: &mut dyn Write,
) -> Outcome {
    let (knots, homs): (Vec<KnotExpression>, Vec<Hom>) = match kind {
        FamilyKind::Phi => {
            let t = parse_triples(params)?;
            let homs = t.iter().map(|&(p, ..)| Hom::PhiEntry { j: (p - 2) as usize, sign: -1 }).collect();
            (family_phi(&t)?, homs)
        }
        FamilyKind::Upsilon => {
            let t = parse_triples(params)?;
            (family_upsilon(&t)?, t.iter().map(|&(p, ..)| Hom::Xi(p)).collect())
        }
        FamilyKind::Jk => {
            let ks = parse_ints(params)?;
            (family_jk_lk(&ks)?, ks.iter().map(|&k| Hom::Lambda(k)).collect())
        }
    };
    let cert = certificate
        .map(|_| independence_certificate(&knots, &homs))
        .transpose()?;
    match fmt {
        Format::Json => {
            let mut v = json!({"knots": knots.iter().map(ToString::to_string).collect::<Vec<_>>()});
            if let Some(c) = &cert {
                v["certificate"] = c.to_json();
            }
            print_json(out, &v)?;
        }
        Format::Csv => {
            writeln!(out, "index,knot")?;
            for (i, k) in knots.iter().enumerate() {
                writeln!(out, "{i},\"{k}\"")?;
            }
        }
        Format::Text => {
            for (i, k) in knots.iter().enumerate() {
                writeln!(out, "K_{} = {k}", i + 1)?;
            }
            if let Some(c) = &cert {
                writeln!(out, "homs: {}", c.homs.join(", "))?;
                for row in &c.matrix {
                    writeln!(out, "  [{}]", list(row))?;
                }
                writeln!(out, "verdict: {}", if c.verdict { "PASS" } else { "FAIL" })?;
            }
        }
    }
    if let (Some(path), Some(c)) = (certificate, &cert) {
        let body = serde_json::to_string_pretty(&c.to_json()).expect("json values serialize");
        fs::write(path, body + "\n")?;
        if !c.verdict {
            return Err(Failure::Verification("evaluation matrix is not triangular with nonzero diagonal".into()));
        }
    }
    Ok(())
}

fn cmd_eps_compare(left: &str, right: &str, fmt: Format, out: &mut dyn Write) -> Outcome {
    let (l, r) = (parse_expr(left)?, parse_expr(right)?);
    let (cl, cr) = (class_of_expression(&l)?, class_of_expression(&r)?);
    let result = compare(&cl, &cr);
    match fmt {
        Format::Json => print_json(
            out,
            &json!({"left": cl.to_json(), "right": cr.to_json(), "result": result.to_string()}),
        ),
        Format::Csv => {
            writeln!(out, "left,right,result\n\"{l}\",\"{r}\",{result}")?;
            Ok(())
        }
        Format::Text => {
            writeln!(out, "[[{l}]] = {cl}")?;
            writeln!(out, "[[{r}]] = {cr}")?;
            writeln!(out, "result: {result}")?;
            Ok(())
        }
    }
}

fn cmd_genus_bounds(expr: &str, fmt: Format, out: &mut dyn Write) -> Outcome {
    let e = parse_expr(expr)?;
    let b = genus_bounds(&e);
    match fmt {
        Format::Json => print_json(
            out,
            &json!({"expr": e.to_string(), "half_n": rational_to_json(&b.half_n), "t_bound": rational_to_json(&b.t_bound)}),
        ),
        Format::Csv => {
            writeln!(out, "half_n_num,half_n_den,t_num,t_den")?;
            writeln!(out, "{},{},{},{}", b.half_n.numer(), b.half_n.denom(), b.t_bound.numer(), b.t_bound.denom())?;
            Ok(())
        }
        Format::Text => {
            writeln!(out, "N/2 = {}", rational_text(&b.half_n))?;
            writeln!(out, "T   = {}", rational_text(&b.t_bound))?;
            Ok(())
        }
    }
}
