//! Subcommands and their dispatch over the two backends.

use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use tamecm_adelic::{borel_description, fixed_point, verify_stabilizer, Evidence, Partition};
use tamecm_autgroup::{classify_dynamics, is_symplectic, pair_degree};
use tamecm_cmspace::{make_pair, rank_one_defect};
use tamecm_core::{Backend, Cf, Qi, Scalar};
use tamecm_graphgroups::{build_gamma, certify_gamma2, pi1_presentation};
use tamecm_orbits::{classify_b_orbit, classify_c2_orbit, navigate_n1, navigate_n2, BOrbitType};

use crate::acceptance;
use crate::error::{invalid, CliError, Result};
use crate::json::{
    audit_entry, infer_backend, matrices_from_json, pair_from_json, pair_to_json, scalar_to_json,
    word_from_json, word_to_json, Envelope,
};

#[derive(Debug, Parser)]
#[command(name = "tamecm", version, about = "Symplectic plane automorphisms acting on Calogero-Moser matrix pairs")]
pub struct Cli {
    /// Scalar backend; inferred from the input when omitted.
    #[arg(long, global = true)]
    pub backend: Option<Backend>,
    /// Tolerance for float comparisons.
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Candidate budget for searches.
    #[arg(long, global = true, default_value_t = 64)]
    pub budget: usize,
    /// Also write the JSON output to this file.
    #[arg(long, global = true)]
    pub json: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

/// Inputs are file paths, `-` for stdin, or inline JSON.
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Act by a word on a pair.
    Eval { word: String, pair: String },
    /// Amalgam normal form, length and degree of a word.
    Reduce { word: String },
    /// Elementary or Hénon type of a word.
    ClassifyDyn { word: String },
    /// Rank-one check and factorization of `[X, Y] + I`.
    CmCheck { pair: String },
    /// Torus-fixed pair of a partition.
    FixedPoint { partition: String },
    /// Borel subgroup of a partition.
    Borel { partition: String },
    /// Acts by monomial Psi maps on a fixed point and checks which fix it.
    StabVerify {
        partition: String,
        #[arg(long, default_value_t = 8)]
        max_exp: usize,
    },
    /// U-orbit label of a two-point pair.
    Orbit2 { pair: String },
    /// B-orbit type of a pair.
    BOrbit { pair: String },
    /// One point: a word sending two points to (0,0), (1,0). Two points: a
    /// float walk to the regular representative.
    Navigate { pair: String, second: Option<String> },
    /// Graph of groups and its fundamental group presentation.
    Graph { n: usize },
    /// Runs the acceptance suite.
    Selftest {
        /// Single criterion to run.
        #[arg(long)]
        only: Option<u8>,
    },
}

fn load(arg: &str) -> Result<Value> {
    let text = match arg.trim_start().chars().next() {
        Some('{' | '[') => arg.to_string(),
        _ if arg == "-" => std::io::read_to_string(std::io::stdin())?,
        _ => std::fs::read_to_string(arg).map_err(|e| invalid(format!("{arg}: {e}")))?,
    };
    Ok(serde_json::from_str(&text)?)
}

/// Flag first, then the inputs; inputs must agree.
fn pick_backend(flag: Option<Backend>, inputs: &[&Value]) -> Result<Backend> {
    let mut implied = None;
    for v in inputs {
        if let Some(b) = infer_backend(v)? {
            if implied.is_some_and(|o| o != b) {
                return Err(invalid("inputs disagree on the backend"));
            }
            implied = Some(b);
        }
    }
    Ok(flag.or(implied).unwrap_or(Backend::Exact))
}

/// Runs `f::<Qi>` or `f::<Cf>` by backend.
macro_rules! dispatch {
    ($backend:expr, $f:ident ( $($arg:expr),* )) => {
        match $backend {
            Backend::Exact => $f::<Qi>($($arg),*),
            Backend::Float => $f::<Cf>($($arg),*),
        }
    };
}

pub struct Context {
    pub backend: Option<Backend>,
    pub tol: Option<f64>,
    pub seed: u64,
    pub budget: usize,
}

pub fn execute(cmd: &Command, ctx: &Context) -> Result<Envelope> {
    match cmd {
        Command::Eval { word, pair } => {
            let (w, p) = (load(word)?, load(pair)?);
            dispatch!(pick_backend(ctx.backend, &[&w, &p])?, eval(&w, &p))
        }
        Command::Reduce { word } => {
            let w = load(word)?;
            dispatch!(pick_backend(ctx.backend, &[&w])?, reduce(&w))
        }
        Command::ClassifyDyn { word } => {
            let w = load(word)?;
            dispatch!(pick_backend(ctx.backend, &[&w])?, classify_dyn(&w))
        }
        Command::CmCheck { pair } => {
            let p = load(pair)?;
            dispatch!(pick_backend(ctx.backend, &[&p])?, cm_check(&p))
        }
        Command::FixedPoint { partition } => {
            let mu = parse_partition(partition)?;
            dispatch!(ctx.backend.unwrap_or(Backend::Exact), fixed(&mu))
        }
        Command::Borel { partition } => borel(&parse_partition(partition)?),
        Command::StabVerify { partition, max_exp } => stab_verify(&parse_partition(partition)?, *max_exp),
        Command::Orbit2 { pair } => {
            let p = exact_input(pair, ctx)?;
            let label = classify_c2_orbit(&p)?;
            Ok(Envelope::new("orbit2", json!({"label": label.name()})))
        }
        Command::BOrbit { pair } => b_orbit(&exact_input(pair, ctx)?, ctx.budget),
        Command::Navigate { pair, second } => navigate(pair, second.as_deref(), ctx),
        Command::Graph { n } => graph(*n, ctx.seed),
        Command::Selftest { only } => selftest(*only, ctx.seed),
    }
}

fn parse_partition(s: &str) -> Result<Partition> {
    s.parse().map_err(invalid)
}

fn exact_input(arg: &str, ctx: &Context) -> Result<tamecm_cmspace::MatrixPair<Qi>> {
    let v = load(arg)?;
    if pick_backend(ctx.backend, &[&v])? != Backend::Exact {
        return Err(invalid("this classifier needs the exact backend"));
    }
    pair_from_json(&v)
}

fn eval<S: Scalar>(w: &Value, p: &Value) -> Result<Envelope> {
    let word = word_from_json::<S>(w)?;
    let pair = pair_from_json::<S>(p)?;
    let image = pair.act(&word)?;
    Ok(Envelope::new("eval", pair_to_json(&image)))
}

fn reduce<S: Scalar>(w: &Value) -> Result<Envelope> {
    let word = word_from_json::<S>(w)?;
    let nf = word.normal_form();
    Ok(Envelope::new(
        "reduce",
        json!({
            "normal_form": word_to_json(&nf.to_word()),
            "text": nf.to_string(),
            "length": nf.length(),
            "degree": nf.degree(),
        }),
    ))
}

fn classify_dyn<S: Scalar>(w: &Value) -> Result<Envelope> {
    let word = word_from_json::<S>(w)?;
    let nf = word.normal_form();
    let dynamics = classify_dynamics(&word);
    let (p, q) = word.nc_pair()?;
    Ok(Envelope::new(
        "classify-dyn",
        json!({
            "dynamics": dynamics.to_string(),
            "cyclic_length": nf.cyclically_reduced().length(),
        }),
    )
    .certificate(json!({"tag": "symplectic", "degree": pair_degree(&p, &q), "verified": is_symplectic(&p, &q)})))
}

fn cm_check<S: Scalar>(p: &Value) -> Result<Envelope> {
    let (x, y) = matrices_from_json::<S>(p)?;
    let rank = rank_one_defect(&x, &y).rank();
    let mut result = json!({"ok": rank == 1, "rank": rank, "n": x.rows()});
    let mut env = match make_pair(x, y) {
        Ok(pair) => {
            result["v"] = pair.v().iter().map(scalar_to_json).collect();
            result["w"] = pair.w().iter().map(scalar_to_json).collect();
            Envelope::new("cm-check", result)
        }
        Err(e) => Envelope::new("cm-check", result).warn(e.to_string()),
    };
    if S::BACKEND == Backend::Float {
        env = env.warn("rank computed by pivoted elimination with tolerance");
    }
    Ok(env)
}

fn fixed<S: Scalar>(mu: &Partition) -> Result<Envelope> {
    let f = fixed_point::<S>(mu)?;
    Ok(Envelope::new("fixed-point", json!({"partition": mu.to_string(), "pair": pair_to_json(&f)})))
}

fn borel(mu: &Partition) -> Result<Envelope> {
    let d = borel_description(mu);
    let gens = d.generator_exponents();
    Ok(Envelope::new(
        "borel",
        json!({
            "partition": mu.to_string(),
            "line": d.table_line(),
            "span": d.span(),
            "exponents": gens.members_up_to(gens.threshold()),
            "threshold": gens.threshold(),
        }),
    ))
}

fn stab_verify(mu: &Partition, max_exp: usize) -> Result<Envelope> {
    let report = verify_stabilizer(mu, max_exp)?;
    let checks: Vec<Value> = report
        .checks
        .iter()
        .map(|c| {
            json!({
                "exponent": c.exponent,
                "lambda": scalar_to_json(&c.lambda),
                "expected_fixed": c.expected_fixed,
                "evidence": format!("{:?}", c.evidence),
                "passed": c.passed(),
            })
        })
        .collect();
    let failed: Vec<_> = report.failures().collect();
    if failed.iter().any(|c| c.evidence == Evidence::SearchExhausted) {
        return Err(CliError::Budget(format!("intertwiner search for {mu}")));
    }
    if !failed.is_empty() {
        return Err(CliError::Failed(format!("{} stabilizer checks failed for {mu}", failed.len())));
    }
    let mut env = Envelope::new("stab-verify", json!({"partition": mu.to_string(), "all_passed": true}));
    env.certificates = checks;
    Ok(env)
}

fn b_orbit(p: &tamecm_cmspace::MatrixPair<Qi>, budget: usize) -> Result<Envelope> {
    let kind = classify_b_orbit(p, budget)?;
    let mut result = json!({"type": kind.label(), "description": kind.to_string()});
    let mut env = Envelope::new("b-orbit", Value::Null);
    match &kind {
        BOrbitType::FreeTorus { .. } => {
            env = env.warn("type A is certified on a finite probe set only");
        }
        BOrbitType::TorusFixed { partition, word, point } => {
            result["partition"] = json!(partition.to_string());
            result["fixed_point"] = pair_to_json(point);
            env = env.certificate(audit_entry("torus-conj", word, true));
        }
        BOrbitType::Cyclic { order, stabilizer } => {
            result["order"] = json!(order);
            match stabilizer {
                Some(h) => env = env.certificate(audit_entry("stabilizer", h, true)),
                None => env = env.warn("no stabilizer certificate for this order"),
            }
        }
        BOrbitType::Undetermined { .. } => {
            env = env.warn("orbit type undetermined within the budget");
        }
    }
    env.result = result;
    Ok(env)
}

fn navigate(first: &str, second: Option<&str>, ctx: &Context) -> Result<Envelope> {
    let a = load(first)?;
    let n = a.get("X").and_then(Value::as_array).map_or(0, Vec::len);
    match (n, second) {
        (1, Some(second)) => {
            let b = load(second)?;
            dispatch!(pick_backend(ctx.backend, &[&a, &b])?, navigate_one(&a, &b))
        }
        (1, None) => Err(invalid("one-point navigation takes two points")),
        (2, None) => {
            let p = pair_from_json::<Cf>(&a)?;
            let tol = ctx.tol.unwrap_or(1e-6);
            let nav = navigate_n2(&p, 3, ctx.budget, ctx.seed, tol)?;
            let mut env = Envelope::new(
                "navigate",
                json!({
                    "word": word_to_json(&nav.word),
                    "point": pair_to_json(&nav.point),
                    "residual": nav.residual,
                    "attempts": nav.attempts,
                }),
            );
            env.certificates = nav.moves.iter().map(|m| audit_entry(m.tag.name(), &m.word, m.verified)).collect();
            if ctx.backend == Some(Backend::Exact) {
                env = env.warn("two-point navigation runs on the float backend");
            }
            Ok(env)
        }
        (2, Some(_)) => Err(invalid("two-point navigation takes one pair")),
        (other, _) => Err(invalid(format!("navigation supports one or two points, got {other}"))),
    }
}

fn navigate_one<S: Scalar>(a: &Value, b: &Value) -> Result<Envelope> {
    let (p1, p2) = (pair_from_json::<S>(a)?, pair_from_json::<S>(b)?);
    let nav = navigate_n1(&p1, &p2)?;
    let env = Envelope::new(
        "navigate",
        json!({
            "word": word_to_json(&nav.word),
            "images": [pair_to_json(&nav.images[0]), pair_to_json(&nav.images[1])],
        }),
    );
    Ok(env.certificate(audit_entry("double-transitivity", &nav.word, nav.verified)))
}

fn graph(n: usize, seed: u64) -> Result<Envelope> {
    let g = build_gamma(n)?;
    let p = pi1_presentation(&g)?;
    let mut env = Envelope::new(
        "graph",
        json!({
            "presentation": p.to_string(),
            "generators": p.generators,
            "relations": p.relations,
            "dot": g.to_dot(),
        }),
    );
    if n == 2 {
        let cert = certify_gamma2(200, seed)?;
        let counts: serde_json::Map<String, Value> =
            cert.counts.iter().map(|(k, v)| (k.name().to_string(), json!(v))).collect();
        env = env.certificate(json!({
            "tag": "orbit-sampling",
            "samples": cert.samples,
            "counts": counts,
            "u_violations": cert.u_violations,
            "a_connected": cert.a_connected(),
            "verified": cert.passed(),
        }));
    }
    Ok(env)
}

fn selftest(only: Option<u8>, seed: u64) -> Result<Envelope> {
    let reports = match only {
        Some(id) => vec![acceptance::run_one(id, seed).ok_or_else(|| invalid(format!("no criterion {id}")))?],
        None => acceptance::run_all(seed),
    };
    let lines: Vec<String> = reports.iter().map(ToString::to_string).collect();
    let passed = reports.iter().all(|r| r.passed);
    let mut env = Envelope::new("selftest", json!({"passed": passed, "seed": seed, "lines": lines}));
    env.certificates = reports.iter().map(|r| serde_json::to_value(r).expect("plain data")).collect();
    if !passed {
        let failed = reports.iter().filter(|r| !r.passed).count();
        env = env.warn(format!("{failed} of {} criteria failed", reports.len()));
        env.status = 1;
    }
    Ok(env)
}

/// Output of one invocation.
#[derive(Debug)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// Parses `argv` (program name first) and runs it.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let ctx = Context { backend: cli.backend, tol: cli.tol, seed: cli.seed, budget: cli.budget };
    match execute(&cli.command, &ctx) {
        Ok(env) => {
            let text = serde_json::to_string_pretty(&env).expect("plain data");
            if let Some(path) = &cli.json {
                if let Err(e) = std::fs::write(path, &text) {
                    return Outcome { code: 2, stdout: String::new(), stderr: format!("error: {}: {e}\n", path.display()) };
                }
            }
            Outcome { code: env.status, stdout: text + "\n", stderr: String::new() }
        }
        Err(e) => Outcome { code: e.exit_code(), stdout: String::new(), stderr: format!("error: {e}\n") },
    }
}
