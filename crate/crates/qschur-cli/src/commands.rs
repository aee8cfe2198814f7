use qschur::Error;
use qschur::fock;
use serde_json::json;

use crate::cli::{Cli, Command, Config, Suite};
use crate::format::{Report, laurent_csv, laurent_json, tableau_json};
use crate::parse;
use crate::suites::{self, Check};

/// What the binary writes and the exit code it returns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub code: u8,
}

pub const EXIT_CONVENTION: u8 = 2;
pub const EXIT_INVARIANT: u8 = 3;

/// Runs a parsed command line. `Err` is a usage error.
pub fn run(cli: &Cli) -> Result<Outcome, String> {
    let cfg = cli.config()?;
    let pool = rayon::ThreadPoolBuilder::new().num_threads(cfg.jobs).build().map_err(|e| e.to_string())?;
    let (report, code) = pool.install(|| match &cli.command {
        Command::Canonical => Ok(canonical(&cfg)),
        Command::Dims { mu, lambda } => dims(&cfg, mu, lambda),
        Command::Check { suite } => Ok(check(&cfg, *suite)),
        Command::Tableaux { shape, ty } => tableaux(&cfg, shape, ty.as_deref()),
    })?;
    Ok(Outcome { output: report.render(cli.format), code })
}

fn convention_error(cfg: &Config, err: &Error) -> Report {
    let msg = err.to_string();
    Report {
        json: json!({"e": cfg.e, "charges": cfg.charges, "error": {"kind": "convention", "message": msg}}),
        header: vec!["error".into(), "message".into()],
        rows: vec![vec!["convention".into(), msg.clone()]],
        text: format!("{msg}\n"),
    }
}

pub fn canonical(cfg: &Config) -> (Report, u8) {
    let fc = cfg.fock();
    let mut basis = Vec::new();
    let mut rows = Vec::new();
    let mut text = String::new();
    for n in 1..=cfg.n {
        let p = match fock::canonical_basis(&fc, n) {
            Ok(p) => p,
            Err(e) => return (convention_error(cfg, &e), EXIT_CONVENTION),
        };
        for (xi, v) in &p {
            let mut coeffs = Vec::new();
            let mut line = format!("p[{xi}] =");
            for (i, (eta, c)) in v.terms().enumerate() {
                coeffs.push(json!({"eta": eta.to_string(), "poly": laurent_json(c)}));
                rows.push(vec![xi.to_string(), eta.to_string(), laurent_csv(c)]);
                let sep = if i == 0 { " " } else { " + " };
                line.push_str(&format!("{sep}({c}) u[{eta}]"));
            }
            basis.push(json!({"xi": xi.to_string(), "coeffs": coeffs}));
            text.push_str(&line);
            text.push('\n');
        }
    }
    let json = json!({"e": cfg.e, "charges": cfg.charges, "basis": basis});
    (Report { json, header: vec!["xi".into(), "eta".into(), "coeff".into()], rows, text }, 0)
}

pub fn dims(cfg: &Config, mu: &str, lambda: &str) -> Result<(Report, u8), String> {
    let mu = parse::shadowed(mu, cfg.e, &cfg.charges)?;
    let lambda = parse::shadowed(lambda, cfg.e, &cfg.charges)?;
    let fc = cfg.fock();
    // Graded dimensions count q^deg, Fock coefficients q^-deg.
    let tab = cfg.cell_datum().corner_dim(&mu, &lambda).bar();
    let fk = fock::h_vector(&fc, &mu)
        .and_then(|h| Ok(fock::inner(&h, &fock::h_vector(&fc, &lambda)?)))
        .map_err(|e| e.to_string())?;
    let verdict = if tab == fk { "MATCH" } else { "MISMATCH" };
    let json = json!({
        "e": cfg.e,
        "charges": cfg.charges,
        "mu": mu.to_string(),
        "lambda": lambda.to_string(),
        "tableaux": laurent_json(&tab),
        "fock": laurent_json(&fk),
        "verdict": verdict,
    });
    let report = Report {
        json,
        header: ["mu", "lambda", "tableaux", "fock", "verdict"].map(String::from).to_vec(),
        rows: vec![vec![mu.to_string(), lambda.to_string(), laurent_csv(&tab), laurent_csv(&fk), verdict.into()]],
        text: format!("tableaux: {tab}\nfock:     {fk}\n{verdict}\n"),
    };
    Ok((report, if tab == fk { 0 } else { EXIT_INVARIANT }))
}

pub fn run_suite(cfg: &Config, suite: Suite) -> Vec<Check> {
    let mut out = Vec::new();
    let all = suite == Suite::All;
    if all || suite == Suite::Demazure {
        out.extend(suites::demazure(cfg.seed, 128));
    }
    if all || suite == Suite::Relations {
        out.extend(suites::relations(cfg.e, cfg.n.min(4)));
    }
    if all || suite == Suite::Degrees {
        out.extend(suites::degrees(cfg));
    }
    if all || suite == Suite::Basis {
        out.extend(suites::basis(cfg.e, cfg.n.min(3), cfg.cutoff));
    }
    if all || suite == Suite::Fock {
        out.extend(suites::fock(cfg));
    }
    out
}

pub fn check(cfg: &Config, suite: Suite) -> (Report, u8) {
    let checks = run_suite(cfg, suite);
    let ok = checks.iter().all(Check::passed);
    let mut text = String::new();
    let mut rows = Vec::new();
    let mut items = Vec::new();
    for c in &checks {
        let status = if c.passed() { "PASS" } else { "FAIL" };
        text.push_str(&format!("{status} {}: {} ({} cases)\n", c.suite, c.name, c.cases));
        if let Some(f) = &c.failure {
            text.push_str(&format!("     counterexample: {f}\n"));
        }
        let failure = c.failure.clone().unwrap_or_default();
        rows.push(vec![c.suite.into(), c.name.clone(), status.into(), c.cases.to_string(), failure]);
        items.push(json!({
            "suite": c.suite,
            "name": c.name,
            "passed": c.passed(),
            "cases": c.cases,
            "counterexample": c.failure,
        }));
    }
    let json = json!({"e": cfg.e, "charges": cfg.charges, "n": cfg.n, "seed": cfg.seed, "passed": ok, "checks": items});
    let header = ["suite", "name", "status", "cases", "counterexample"].map(String::from).to_vec();
    (Report { json, header, rows, text }, if ok { 0 } else { EXIT_INVARIANT })
}

pub fn tableaux(cfg: &Config, shape: &str, ty: Option<&str>) -> Result<(Report, u8), String> {
    let shape = parse::multipartition(shape)?;
    if shape.ell() != cfg.charges.len() {
        return Err(format!("shape {shape} has {} components for {} charges", shape.ell(), cfg.charges.len()));
    }
    let ty = ty.map(|t| parse::shadowed(t, cfg.e, &cfg.charges)).transpose()?;
    let cd = cfg.cell_datum();
    let found = cd.tableaux(&shape, ty.as_ref());
    let mut rows = Vec::new();
    let mut items = Vec::new();
    let mut text = String::new();
    for (t, deg) in &found {
        let mu = t.mu_grave(&cd.charge);
        rows.push(vec![t.to_string(), mu.to_string(), deg.to_string()]);
        items.push(json!({"tableau": tableau_json(t), "type": mu.to_string(), "degree": deg}));
        text.push_str(&format!("{t}  type {mu}  degree {deg}\n"));
    }
    let json = json!({"e": cfg.e, "charges": cfg.charges, "shape": shape.to_string(), "tableaux": items});
    let header = ["tableau", "type", "degree"].map(String::from).to_vec();
    Ok((Report { json, header, rows, text }, 0))
}
