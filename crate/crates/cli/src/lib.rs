//! Batch front end: load one input, run one command, produce a JSON report.
//!
//! Exit codes: 0 when a decision was computed, 1 when validation failed and
//! the report carries a witness, 2 when the input could not be used.

use std::fmt::Write as _;
use std::path::PathBuf;

use num_traits::ToPrimitive;
use serde_json::{json, Value};

use twisted_core::algebra::{center_dimension_numeric, commutator_singular_values, identify_matrix_algebra};
use twisted_core::direct::f_degeneracy;
use twisted_core::free_product::decompose;
use twisted_core::json::{load, parse, Loaded};
use twisted_core::lattice::{condition_k_lattice, g3_condition_k, G3Cocycle, TorusCocycle};
use twisted_core::multiplier::{validate_exhaustive, validate_sampled, SampleDomain, ValidationReport};
use twisted_core::regularity::regular_classes;
use twisted_core::torus::{parse_rational, IrrationalBasis};
use twisted_core::{Error, Multiplier, RotationNumber};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Command {
    Validate,
    ConditionK,
    Center,
    RegularClasses,
    FDegeneracy,
    Decompose,
}

impl Command {
    fn name(self) -> &'static str {
        match self {
            Command::Validate => "validate",
            Command::ConditionK => "condition-k",
            Command::Center => "center",
            Command::RegularClasses => "regular-classes",
            Command::FDegeneracy => "f-degeneracy",
            Command::Decompose => "decompose",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    Path(PathBuf),
    Inline(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JobSpec {
    pub command: Command,
    pub source: Source,
    pub tol: String,
    pub fuzz: usize,
    pub bound: u32,
    pub seed: u64,
    pub pretty: bool,
}

impl JobSpec {
    pub fn new(command: Command, source: Source) -> Self {
        Self { command, source, tol: "1/100000000".into(), fuzz: 10_000, bound: 3, seed: 0, pretty: false }
    }
}

/// What a run produced. `report` goes to stdout, `summary` to stderr.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub code: i32,
    pub report: Value,
    pub summary: String,
}

impl Outcome {
    pub fn render(&self, pretty: bool) -> String {
        if pretty {
            serde_json::to_string_pretty(&self.report).expect("report serializes")
        } else {
            self.report.to_string()
        }
    }
}

struct Job<'a> {
    spec: &'a JobSpec,
}

impl Job<'_> {
    fn report(&self, code: i32, mut body: Value, summary: String) -> Outcome {
        let obj = body.as_object_mut().expect("reports are objects");
        obj.insert("command".into(), json!(self.spec.command.name()));
        obj.insert("seed".into(), json!(self.spec.seed));
        Outcome { code, report: body, summary }
    }

    fn malformed(&self, msg: impl Into<String>) -> Outcome {
        let msg = msg.into();
        self.report(2, json!({ "error": msg }), format!("error: {msg}"))
    }

    fn unsupported(&self, kind: &str) -> Outcome {
        self.malformed(format!("{} is not available for {kind} inputs", self.spec.command.name()))
    }
}

pub fn run(spec: &JobSpec) -> Outcome {
    let job = Job { spec };
    let text = match &spec.source {
        Source::Inline(s) => s.clone(),
        Source::Path(p) => match std::fs::read_to_string(p) {
            Ok(s) => s,
            Err(e) => return job.malformed(format!("cannot read {}: {e}", p.display())),
        },
    };
    let tol = match parse_rational(&spec.tol).map(|q| q.to_f64()) {
        Ok(Some(t)) if t > 0.0 => t,
        _ => return job.malformed(format!("tolerance must be a positive rational, got {}", spec.tol)),
    };
    let loaded = match parse(&text).and_then(|s| load(&s)) {
        Ok(l) => l,
        Err(e @ Error::InvalidBihomomorphism(_)) => {
            return job.report(1, json!({ "valid": false, "error": e.to_string() }), format!("invalid: {e}"));
        }
        Err(e) => return job.malformed(e.to_string()),
    };
    match spec.command {
        Command::Validate => validate(&job, &loaded),
        Command::ConditionK => condition_k(&job, &loaded),
        Command::Center => center(&job, &loaded, tol),
        Command::RegularClasses => classes(&job, &loaded),
        Command::FDegeneracy => degeneracy(&job, &loaded),
        Command::Decompose => decomposition(&job, &loaded),
    }
}

fn kind(loaded: &Loaded) -> &'static str {
    match loaded {
        Loaded::Finite(_) => "finite",
        Loaded::DirectProduct { .. } => "direct_product",
        Loaded::Torus(_) => "torus",
        Loaded::G3(_) => "g3",
        Loaded::FreeProduct { .. } => "free_product",
    }
}

fn text(x: &RotationNumber, basis: &IrrationalBasis) -> String {
    x.display(basis).to_string()
}

fn finite_multiplier(loaded: &Loaded) -> Option<&Multiplier> {
    match loaded {
        Loaded::Finite(s) => Some(s),
        Loaded::DirectProduct { sigma, .. } => Some(sigma),
        _ => None,
    }
}

fn validation_outcome<E: serde::Serialize>(job: &Job, r: ValidationReport<E>, exhaustive: bool) -> Outcome {
    let passed = r.passed();
    let summary = if passed {
        format!("valid: {} triples checked", r.checked)
    } else {
        format!("invalid: violation after {} triples", r.checked)
    };
    let body = json!({
        "valid": passed,
        "exhaustive": exhaustive,
        "checked": r.checked,
        "violation": r.violation,
    });
    job.report(if passed { 0 } else { 1 }, body, summary)
}

/// Runs the exhaustive check first, so that decisions are never reported for
/// a table that is not a multiplier.
fn checked_finite<'a>(job: &Job, loaded: &'a Loaded) -> Result<&'a Multiplier, Outcome> {
    let sigma = finite_multiplier(loaded).ok_or_else(|| job.unsupported(kind(loaded)))?;
    let r = validate_exhaustive(sigma);
    if r.passed() {
        Ok(sigma)
    } else {
        Err(validation_outcome(job, r, true))
    }
}

fn validate(job: &Job, loaded: &Loaded) -> Outcome {
    let (fuzz, bound, seed) = (job.spec.fuzz, job.spec.bound, job.spec.seed);
    match loaded {
        Loaded::Finite(s) | Loaded::DirectProduct { sigma: s, .. } => validation_outcome(job, validate_exhaustive(s), true),
        Loaded::Torus(theta) => sampled(job, &TorusCocycle(theta.clone()), fuzz, bound, seed),
        Loaded::G3(mu) => sampled(job, &G3Cocycle(mu.clone()), fuzz, bound, seed),
        Loaded::FreeProduct { multiplier, .. } => sampled(job, multiplier, fuzz, bound, seed),
    }
}

fn sampled<C: SampleDomain>(job: &Job, sigma: &C, fuzz: usize, bound: u32, seed: u64) -> Outcome
where
    C::Element: serde::Serialize,
{
    validation_outcome(job, validate_sampled(sigma, fuzz, bound, seed), false)
}

fn condition_k(job: &Job, loaded: &Loaded) -> Outcome {
    match loaded {
        Loaded::Finite(_) | Loaded::DirectProduct { .. } => {
            let sigma = match checked_finite(job, loaded) {
                Ok(s) => s,
                Err(o) => return o,
            };
            let report = match regular_classes(sigma) {
                Ok(r) => r,
                Err(e) => return job.report(1, json!({ "error": e.to_string() }), format!("invalid: {e}")),
            };
            let witness = report.witness().map(|c| json!({ "representative": c.representative, "members": c.members }));
            let summary = match report.witness() {
                None => "condition K holds".to_string(),
                Some(c) => format!("condition K fails: class of {} is regular", c.representative),
            };
            job.report(0, json!({ "condition_k": report.condition_k, "witness": witness }), summary)
        }
        Loaded::Torus(theta) => lattice_outcome(job, condition_k_lattice(theta)),
        Loaded::G3(mu) => lattice_outcome(job, g3_condition_k(mu)),
        Loaded::FreeProduct { .. } => job.unsupported("free_product"),
    }
}

fn lattice_outcome(job: &Job, d: twisted_core::lattice::LatticeDecision) -> Outcome {
    let summary = match &d.witness {
        None => "condition K holds".to_string(),
        Some(w) => {
            let parts: Vec<String> = w.iter().map(|x| x.to_string()).collect();
            format!("condition K fails: ({}) is regular", parts.join(", "))
        }
    };
    job.report(0, serde_json::to_value(&d).expect("decision serializes"), summary)
}

fn center(job: &Job, loaded: &Loaded, tol: f64) -> Outcome {
    let sigma = match checked_finite(job, loaded) {
        Ok(s) => s,
        Err(o) => return o,
    };
    let combinatorial = match regular_classes(sigma) {
        Ok(r) => r.regular_classes().count(),
        Err(e) => return job.report(1, json!({ "error": e.to_string() }), format!("invalid: {e}")),
    };
    let numeric = match center_dimension_numeric(sigma, tol) {
        Ok(d) => d,
        Err(e @ Error::IllConditioned { .. }) => {
            let values = commutator_singular_values(sigma).unwrap_or_default();
            let body = json!({ "combinatorial": combinatorial, "numeric": null, "error": e.to_string(), "singular_values": values });
            return job.report(1, body, format!("numeric oracle refused: {e}"));
        }
        Err(e) => return job.malformed(e.to_string()),
    };
    let matrix_algebra = identify_matrix_algebra(sigma, tol).ok().flatten();
    let body = json!({ "combinatorial": combinatorial, "numeric": numeric, "matrix_algebra": matrix_algebra });
    if combinatorial != numeric {
        return job.report(1, body, format!("oracles disagree: {combinatorial} regular classes, numeric dimension {numeric}"));
    }
    let mut summary = format!("center has dimension {combinatorial}");
    if let Some(n) = matrix_algebra {
        let _ = write!(summary, "; the algebra is M_{n}(C)");
    }
    job.report(0, body, summary)
}

fn classes(job: &Job, loaded: &Loaded) -> Outcome {
    let sigma = match checked_finite(job, loaded) {
        Ok(s) => s,
        Err(o) => return o,
    };
    match regular_classes(sigma) {
        Ok(r) => {
            let count = r.regular_classes().count();
            let body = serde_json::to_value(r.to_json()).expect("report serializes");
            job.report(0, body, format!("{count} of {} classes are regular", r.classes.len()))
        }
        Err(e) => job.report(1, json!({ "error": e.to_string() }), format!("invalid: {e}")),
    }
}

fn degeneracy(job: &Job, loaded: &Loaded) -> Outcome {
    let Loaded::DirectProduct { sigma1, sigma2, f, sigma } = loaded else {
        return job.unsupported(kind(loaded));
    };
    if let Err(o) = checked_finite(job, loaded) {
        return o;
    }
    let report = match f_degeneracy(sigma1, sigma2, f) {
        Ok(r) => r,
        Err(e) => return job.malformed(e.to_string()),
    };
    let direct = match regular_classes(sigma) {
        Ok(r) => r.condition_k,
        Err(e) => return job.report(1, json!({ "error": e.to_string() }), format!("invalid: {e}")),
    };
    let body = json!({ "prime": report.prime, "failing_class": report.failing_class, "condition_k": direct });
    if report.prime != direct {
        return job.report(1, body, "criterion and direct condition K disagree".into());
    }
    let summary = if report.prime { "the criterion holds on every nontrivial class" } else { "the criterion fails" };
    job.report(0, body, summary.into())
}

fn decomposition(job: &Job, loaded: &Loaded) -> Outcome {
    let Loaded::FreeProduct { multiplier, normalized } = loaded else {
        return job.unsupported(kind(loaded));
    };
    let product = &multiplier.product;
    let d = match decompose(multiplier, product.group(1).clone(), product.group(2).clone()) {
        Ok(d) => d,
        Err(e) => return job.malformed(e.to_string()),
    };
    let rows = |s: &Multiplier| -> Vec<Vec<String>> {
        s.rows().iter().map(|r| r.iter().map(|x| text(x, s.basis())).collect()).collect()
    };
    let mut body = json!({
        "sigma1": rows(d.sigma1()),
        "sigma2": rows(d.sigma2()),
        "normalized_factors": normalized,
        "max_len": job.spec.bound,
    });
    match d.check(job.spec.fuzz, job.spec.bound as usize, job.spec.seed) {
        Ok(n) => {
            body["similar"] = json!(true);
            body["checked"] = json!(n);
            job.report(0, body, format!("restrictions recovered; similarity holds on {n} sampled pairs"))
        }
        Err(Error::SimilarityFailure { x, y }) => {
            body["similar"] = json!(false);
            body["failure"] = json!({ "x": x, "y": y });
            job.report(1, body, format!("similarity fails at ({x}, {y})"))
        }
        Err(e) => job.malformed(e.to_string()),
    }
}
