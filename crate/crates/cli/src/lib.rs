//! Front end for the `facta` command: argument model, dispatch and rendering.

mod classify;
mod parse;

use clap::{Parser, Subcommand};
use facta::factor::{
    brute_hf_counterexample, brute_ohf_counterexample, factorizations, hf_witness, is_hf, is_ohf,
    length_set, ohf_witness,
};
use facta::oracle::{brute_force_irreducible_fpm, decide_irreducible_in_fm, decide_irreducible_in_zm};
use facta::ring::{
    content, eisenstein_check, eisenstein_search, frobenius_root, frobenius_split,
    gauss_irreducible_over_int, is_primitive, primitive_part, EisensteinOutcome, FrobeniusOutcome,
};
use facta::{
    Certificate, CoeffRing, Factorization, MonoidKind, OracleConfig, PolyExpr, PuiseuxMonoid, Rat,
    Verdict,
};
use num_traits::Zero;
use serde_json::{json, Map, Value};
use thiserror::Error;

pub use classify::{classify_algebra, AlgebraReport};
pub use parse::{parse_poly, parse_terms, ParseError};

/// Default prime bound for `ring-eisenstein` and `ring-irreducible` searches.
pub const DEFAULT_PRIME_BOUND: u64 = 100;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Library(#[from] facta::Error),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("missing --{0}")]
    Missing(&'static str),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Library(e) if e.is_scale_exceeded() => 3,
            _ => 2,
        }
    }
}

/// Exact arithmetic in monoid rings with Puiseux-monoid exponents.
#[derive(Parser, Debug, Clone)]
#[command(name = "facta", version)]
pub struct Command {
    #[command(subcommand)]
    pub action: Action,
    /// Monoid literal: gen:1/2,2/3,5 | grid:6 | ppow:2
    #[arg(long, global = true)]
    pub monoid: Option<String>,
    /// Coefficient ring: int | rat | fp:p
    #[arg(long, global = true)]
    pub ring: Option<String>,
    /// Polynomial literal such as 3X^(5/6)-X^(1/2)+7; repeatable
    #[arg(long = "poly", global = true, allow_hyphen_values = true)]
    pub polys: Vec<String>,
    /// Monoid element a or a/b
    #[arg(long, global = true)]
    pub element: Option<String>,
    #[arg(long, global = true)]
    pub prime: Option<u64>,
    /// Search bound: elements for fact-hf/fact-ohf, primes for Eisenstein
    #[arg(long, global = true)]
    pub bound: Option<String>,
    /// Use the independent exhaustive deciders
    #[arg(long, global = true)]
    pub oracle: bool,
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Action {
    /// Atoms of the monoid
    MonoidAtoms,
    /// Membership of --element
    MonoidMember,
    /// Euclidean / PID / UFD / HFD / Dedekind status of F[M]
    MonoidClassify,
    /// All factorizations of --element
    FactList,
    /// Length set of --element
    FactLengths,
    /// Half-factoriality
    FactHf,
    /// Other-half-factoriality
    FactOhf,
    /// Two equal-length factorizations of one element
    FactWitness,
    RingContent,
    RingPrimitive,
    /// Product of every --poly
    RingMul,
    RingEisenstein,
    RingIrreducible,
    RingFrobeniusRoot,
}

impl Action {
    pub fn name(self) -> &'static str {
        match self {
            Action::MonoidAtoms => "monoid-atoms",
            Action::MonoidMember => "monoid-member",
            Action::MonoidClassify => "monoid-classify",
            Action::FactList => "fact-list",
            Action::FactLengths => "fact-lengths",
            Action::FactHf => "fact-hf",
            Action::FactOhf => "fact-ohf",
            Action::FactWitness => "fact-witness",
            Action::RingContent => "ring-content",
            Action::RingPrimitive => "ring-primitive",
            Action::RingMul => "ring-mul",
            Action::RingEisenstein => "ring-eisenstein",
            Action::RingIrreducible => "ring-irreducible",
            Action::RingFrobeniusRoot => "ring-frobenius-root",
        }
    }
}

/// What the process prints and returns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Report {
    text: String,
    result: Value,
    certificate: Option<Value>,
    witness: Option<Value>,
}

impl Report {
    fn plain(text: impl Into<String>, result: Value) -> Self {
        Report {
            text: text.into(),
            result,
            certificate: None,
            witness: None,
        }
    }
}

// Validated inputs, recorded in canonical form as they are read.
struct Inputs<'a> {
    cmd: &'a Command,
    seen: Map<String, Value>,
}

impl<'a> Inputs<'a> {
    fn monoid(&mut self) -> Result<PuiseuxMonoid, CliError> {
        let text = self.cmd.monoid.as_deref().ok_or(CliError::Missing("monoid"))?;
        let m: PuiseuxMonoid = text.parse()?;
        self.seen.insert("monoid".into(), json!(m.to_string()));
        Ok(m)
    }

    fn ring(&mut self, default: CoeffRing) -> Result<CoeffRing, CliError> {
        let ring = match self.cmd.ring.as_deref() {
            Some(text) => text.parse()?,
            None => default,
        };
        self.seen.insert("ring".into(), json!(ring.to_string()));
        Ok(ring)
    }

    fn polys(&mut self, ring: CoeffRing, m: &PuiseuxMonoid) -> Result<Vec<PolyExpr>, CliError> {
        if self.cmd.polys.is_empty() {
            return Err(CliError::Missing("poly"));
        }
        let polys = self
            .cmd
            .polys
            .iter()
            .map(|t| parse_poly(t, ring, m))
            .collect::<Result<Vec<_>, _>>()?;
        let shown: Vec<Value> = polys.iter().map(|f| json!(f.to_string())).collect();
        self.seen.insert("poly".into(), Value::Array(shown));
        Ok(polys)
    }

    fn poly(&mut self, ring: CoeffRing, m: &PuiseuxMonoid) -> Result<PolyExpr, CliError> {
        let mut polys = self.polys(ring, m)?;
        if polys.len() > 1 {
            return Err(CliError::Usage(format!(
                "{} takes one --poly",
                self.cmd.action.name()
            )));
        }
        Ok(polys.remove(0))
    }

    fn rational(&mut self, key: &'static str, text: Option<&str>) -> Result<Rat, CliError> {
        let text = text.ok_or(CliError::Missing(key))?;
        let q: Rat = text
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("--{key}: not a nonnegative rational: {text}")))?;
        self.seen.insert(key.into(), json!(q.to_string()));
        Ok(q)
    }

    fn element(&mut self) -> Result<Rat, CliError> {
        self.rational("element", self.cmd.element.as_deref())
    }

    fn bound(&mut self) -> Result<Rat, CliError> {
        let b = self.rational("bound", self.cmd.bound.as_deref())?;
        if b.is_zero() {
            return Err(CliError::Usage("--bound must be positive".into()));
        }
        Ok(b)
    }

    fn prime_bound(&mut self) -> Result<u64, CliError> {
        if self.cmd.bound.is_none() {
            return Ok(DEFAULT_PRIME_BOUND);
        }
        let b = self.bound()?;
        b.to_u64()
            .filter(|_| b.is_integer())
            .ok_or_else(|| CliError::Usage(format!("--bound: prime bound must be an integer, got {b}")))
    }

    fn prime(&mut self) -> Option<u64> {
        let p = self.cmd.prime?;
        self.seen.insert("prime".into(), json!(p));
        Some(p)
    }
}

/// Runs one command and renders its output.
pub fn run(cmd: &Command, config: &OracleConfig) -> Outcome {
    let mut inputs = Inputs {
        cmd,
        seen: Map::new(),
    };
    match execute(cmd, config, &mut inputs) {
        Ok(report) => {
            let stdout = if cmd.json {
                let mut doc = Map::new();
                doc.insert("command".into(), json!(cmd.action.name()));
                doc.insert("inputs".into(), Value::Object(inputs.seen));
                doc.insert("result".into(), report.result);
                if let Some(c) = report.certificate {
                    doc.insert("certificate".into(), c);
                }
                if let Some(w) = report.witness {
                    doc.insert("witness".into(), w);
                }
                Value::Object(doc).to_string()
            } else {
                report.text
            };
            Outcome {
                code: 0,
                stdout: format!("{stdout}\n"),
                stderr: String::new(),
            }
        }
        Err(e) => Outcome {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn execute(cmd: &Command, config: &OracleConfig, inputs: &mut Inputs) -> Result<Report, CliError> {
    match cmd.action {
        Action::MonoidAtoms => {
            let m = inputs.monoid()?;
            let atoms = m.atoms();
            let text = if atoms.is_empty() {
                "none".to_string()
            } else {
                join(&atoms, " ")
            };
            Ok(Report::plain(text, strings(&atoms)))
        }
        Action::MonoidMember => {
            let m = inputs.monoid()?;
            let x = inputs.element()?;
            let member = m.member(&x);
            let mut report = Report::plain(member.to_string(), json!(member));
            if let Some(coeffs) = m.member_witness(&x) {
                let gens = match m.kind() {
                    MonoidKind::FinGen(gens) => gens.to_vec(),
                    MonoidKind::Grid(l) => vec![Rat::ratio(1, l)],
                    MonoidKind::PPow(_) => Vec::new(),
                };
                let terms: Vec<Value> = gens
                    .iter()
                    .zip(&coeffs)
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(g, c)| json!({ "generator": g.to_string(), "coefficient": c.to_string() }))
                    .collect();
                report.witness = Some(Value::Array(terms));
            }
            Ok(report)
        }
        Action::MonoidClassify => {
            let m = inputs.monoid()?;
            let field = inputs.ring(CoeffRing::Rational)?;
            let r = classify_algebra(&m, field);
            let mut lines = vec![format!("field: {}", r.field)];
            let mut result = Map::new();
            result.insert("field".into(), json!(r.field.to_string()));
            for (k, b) in r.flags() {
                lines.push(format!("{k}: {b}"));
                result.insert(k.into(), json!(b));
            }
            if let Some(n) = &r.note {
                lines.push(format!("note: {n}"));
                result.insert("note".into(), json!(n));
            }
            let mut report = Report::plain(lines.join("\n"), Value::Object(result));
            report.certificate = Some(json!({
                "condition": "iso_N0",
                "statement": "M is isomorphic to (N0,+)",
                "holds": r.iso_n0,
            }));
            Ok(report)
        }
        Action::FactList => {
            let m = inputs.monoid()?;
            let x = inputs.element()?;
            let zs = factorizations(&m, &x)?;
            let text = zs.iter().map(|z| z.to_string()).collect::<Vec<_>>().join("\n");
            Ok(Report::plain(text, Value::Array(zs.iter().map(factorization_json).collect())))
        }
        Action::FactLengths => {
            let m = inputs.monoid()?;
            let x = inputs.element()?;
            let ls = length_set(&m, &x)?;
            Ok(Report::plain(join(&ls, " "), json!(ls)))
        }
        Action::FactHf | Action::FactOhf => {
            let hf = cmd.action == Action::FactHf;
            let m = inputs.monoid()?;
            if cmd.oracle {
                let bound = inputs.bound()?;
                let counter = if hf {
                    brute_hf_counterexample(&m, &bound)?
                } else {
                    brute_ohf_counterexample(&m, &bound)?
                };
                let holds = counter.is_none();
                let mut report = Report::plain(holds.to_string(), json!(holds));
                report.certificate = Some(json!({ "kind": "exhaustive", "bound": bound.to_string() }));
                report.witness = counter.map(|x| json!({ "element": x.to_string() }));
                return Ok(report);
            }
            let holds = if hf { is_hf(&m)? } else { is_ohf(&m)? };
            let mut report = Report::plain(holds.to_string(), json!(holds));
            report.certificate = Some(json!({ "kind": "atom-count", "atoms": m.atoms().len() }));
            if !holds {
                report.witness = Some(if hf {
                    let w = hf_witness(&m)?;
                    witness_json(&w.element, &w.z1, &w.z2)
                } else {
                    let w = ohf_witness(&m)?;
                    witness_json(&w.element, &w.z1, &w.z2)
                });
            }
            Ok(report)
        }
        Action::FactWitness => {
            let m = inputs.monoid()?;
            let w = ohf_witness(&m)?;
            let text = format!("element: {}\nz1: {}\nz2: {}", w.element, w.z1, w.z2);
            Ok(Report::plain(text, witness_json(&w.element, &w.z1, &w.z2)))
        }
        Action::RingContent => {
            let m = inputs.monoid()?;
            let ring = inputs.ring(CoeffRing::Int)?;
            let f = inputs.poly(ring, &m)?;
            let c = content(&f)?;
            Ok(Report::plain(c.to_string(), json!(c.to_string())))
        }
        Action::RingPrimitive => {
            let m = inputs.monoid()?;
            let ring = inputs.ring(CoeffRing::Int)?;
            let f = inputs.poly(ring, &m)?;
            let prim = is_primitive(&f)?;
            let part = primitive_part(&f)?;
            let text = format!("primitive: {prim}\nprimitive part: {part}");
            Ok(Report::plain(
                text,
                json!({ "primitive": prim, "primitive_part": part.to_string() }),
            ))
        }
        Action::RingMul => {
            let m = inputs.monoid()?;
            let ring = inputs.ring(CoeffRing::Int)?;
            let polys = inputs.polys(ring, &m)?;
            let mut product = polys[0].clone();
            for g in &polys[1..] {
                product = product.mul(g)?;
            }
            Ok(Report::plain(product.to_string(), json!(product.to_string())))
        }
        Action::RingEisenstein => {
            let m = inputs.monoid()?;
            let ring = inputs.ring(CoeffRing::Int)?;
            let f = inputs.poly(ring, &m)?;
            let outcome = match inputs.prime() {
                Some(p) => eisenstein_check(&f, p)?,
                None => {
                    let bound = inputs.prime_bound()?;
                    eisenstein_search(&f, bound)?
                }
            };
            Ok(match outcome {
                EisensteinOutcome::Certified(c) => {
                    let mut r = Report::plain(
                        format!("certificate: p={} (irreducible)", c.prime),
                        json!("irreducible"),
                    );
                    r.certificate = Some(json!({ "kind": "eisenstein", "prime": c.prime }));
                    r
                }
                EisensteinOutcome::Inapplicable(why) => {
                    let text = format!("inapplicable: {why}");
                    Report::plain(text.clone(), json!(text))
                }
            })
        }
        Action::RingIrreducible => {
            let m = inputs.monoid()?;
            let ring = inputs.ring(CoeffRing::Int)?;
            let f = inputs.poly(ring, &m)?;
            let verdict = irreducibility(&f, &m, ring, cmd.oracle, config, inputs)?;
            Ok(verdict_report(&verdict))
        }
        Action::RingFrobeniusRoot => {
            let m = inputs.monoid()?;
            let ring = inputs.ring(CoeffRing::Int)?;
            let f = inputs.poly(ring, &m)?;
            Ok(match frobenius_root(&f)? {
                FrobeniusOutcome::Root(g) => {
                    let mut r = Report::plain(g.to_string(), json!(g.to_string()));
                    r.witness = Some(json!({
                        "power": ring.characteristic(),
                        "root": g.to_string(),
                    }));
                    r
                }
                FrobeniusOutcome::Inapplicable(why) => {
                    let text = format!("inapplicable: {why}");
                    Report::plain(text.clone(), json!(text))
                }
            })
        }
    }
}

fn irreducibility(
    f: &PolyExpr,
    m: &PuiseuxMonoid,
    ring: CoeffRing,
    oracle: bool,
    config: &OracleConfig,
    inputs: &mut Inputs,
) -> Result<Verdict, CliError> {
    let ppow = matches!(m.kind(), MonoidKind::PPow(_));
    Ok(match ring {
        CoeffRing::PrimeField(_) if ppow => frobenius_split(f)?,
        _ if ppow => {
            return Err(facta::Error::NotFinitelyGenerated(format!(
                "deciding irreducibility over {ring}"
            ))
            .into())
        }
        CoeffRing::Int if oracle => decide_irreducible_in_zm(f, config)?,
        CoeffRing::Int => {
            if f.is_constant() || !is_primitive(f)? {
                gauss_irreducible_over_int(f, config)?
            } else {
                let bound = inputs.prime_bound()?;
                match eisenstein_search(f, bound)? {
                    EisensteinOutcome::Certified(c) => {
                        Verdict::Irreducible(Certificate::Eisenstein(c))
                    }
                    EisensteinOutcome::Inapplicable(_) => gauss_irreducible_over_int(f, config)?,
                }
            }
        }
        CoeffRing::PrimeField(_) if oracle => brute_force_irreducible_fpm(f, config)?,
        _ => decide_irreducible_in_fm(f, config)?,
    })
}

fn verdict_report(v: &Verdict) -> Report {
    match v {
        Verdict::Irreducible(cert) => {
            let (label, json_cert) = match cert {
                Certificate::Eisenstein(c) => (
                    format!("eisenstein p={}", c.prime),
                    json!({ "kind": "eisenstein", "prime": c.prime }),
                ),
                Certificate::GaussPipeline => {
                    ("gauss pipeline".to_string(), json!({ "kind": "gauss-pipeline" }))
                }
                Certificate::OracleExhaustion => (
                    "oracle exhaustion".to_string(),
                    json!({ "kind": "oracle-exhaustion" }),
                ),
            };
            let mut r = Report::plain(format!("irreducible ({label})"), json!("irreducible"));
            r.certificate = Some(json_cert);
            r
        }
        Verdict::Reducible { left, right } => {
            let mut r = Report::plain(format!("reducible: ({left})*({right})"), json!("reducible"));
            r.witness = Some(json!({ "left": left.to_string(), "right": right.to_string() }));
            r
        }
        Verdict::Unit => Report::plain("unit", json!("unit")),
        Verdict::Zero => Report::plain("zero", json!("zero")),
        Verdict::Inapplicable(why) => {
            let text = format!("inapplicable: {why}");
            Report::plain(text.clone(), json!(text))
        }
    }
}

fn factorization_json(z: &Factorization) -> Value {
    Value::Array(
        z.parts()
            .iter()
            .map(|(a, k)| json!({ "atom": a.to_string(), "multiplicity": k }))
            .collect(),
    )
}

fn witness_json(element: &Rat, z1: &Factorization, z2: &Factorization) -> Value {
    json!({
        "element": element.to_string(),
        "z1": factorization_json(z1),
        "z2": factorization_json(z2),
    })
}

fn join<T: ToString>(items: &[T], sep: &str) -> String {
    items.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

fn strings<T: ToString>(items: &[T]) -> Value {
    Value::Array(items.iter().map(|x| json!(x.to_string())).collect())
}
