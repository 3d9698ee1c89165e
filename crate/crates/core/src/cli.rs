//! Command-line front end.

use std::path::{Path, PathBuf};
use std::sync::Arc;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::arith::rational::{fmt_rational, parse_rational};
use crate::arith::CycloField;
use crate::error::Error;
use crate::hom::brute::{hom_dim_bruteforce, isotypic_multiplicity, singular_space};
use crate::hom::conditions::hom_conditions;
use crate::hom::diagram::morphism_diagram;
use crate::hom::dimension::{dimension_two_labels, search_dimension_two};
use crate::hom::sweep::{param_grid, sweep, DiscrepancyKind};
use crate::labels::{charged_content, enumerate_labels, GroupElement, Label, Params};
use crate::module::ModElem;
use crate::oracle::y_act_oracle;
use crate::repro::{repro_example35, repro_example36};
use crate::singular::{applicable_cases, construct, CaseTag};

#[derive(Parser, Debug)]
#[command(name = "cherednik2", version, about = "Standard modules of the rational Cherednik algebra of G(r,1,2)")]
pub struct Cli {
    /// Print a JSON run report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct ParamArg {
    /// JSON file {"r": 3, "c0": "1", "d": ["5", "0", "-5"]}.
    #[arg(long)]
    pub params: PathBuf,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List irreducible labels with charged contents.
    Labels(ParamArg),
    /// Apply y1, y2 or a group element to an element.
    Act {
        #[command(flatten)]
        params: ParamArg,
        #[arg(long)]
        label: Label,
        /// Sum of c*x1^n*x2^m@T terms.
        #[arg(long, allow_hyphen_values = true)]
        elem: String,
        /// y1, y2, or w:a,b,swap for diag(z^a, z^b) P^swap.
        #[arg(long)]
        op: String,
    },
    #[command(subcommand)]
    Singular(SingularCmd),
    #[command(subcommand)]
    Hom(HomCmd),
    /// Write the morphism diagram in DOT format.
    Diagram {
        #[command(flatten)]
        params: ParamArg,
        #[arg(long)]
        dot: PathBuf,
        /// Drop edges that factor through others.
        #[arg(long)]
        reduce: bool,
    },
    /// Check that an element is annihilated by y1 and y2.
    Verify {
        #[command(flatten)]
        params: ParamArg,
        #[arg(long)]
        label: Label,
        #[arg(long, allow_hyphen_values = true)]
        elem: String,
        /// Also check with the independent Dunkl-operator evaluation.
        #[arg(long)]
        oracle: bool,
    },
    /// Recompute a worked example and compare with bundled golden data.
    Repro { example: Example },
    /// Compare the condition rules with brute force on an integer grid.
    Sweep {
        #[arg(long, value_delimiter = ',', default_values_t = [2u32, 3, 4])]
        r: Vec<u32>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_values_t = ["-2".to_string(), "-3/2".into(), "-1".into(), "-1/2".into(), "1/2".into(), "1".into(), "3/2".into(), "2".into()])]
        c0: Vec<String>,
        #[arg(long, default_value_t = 8)]
        dmax: i64,
        #[arg(long, env = "CHEREDNIK2_MAX_DEGREE", default_value_t = 25)]
        max_degree: u32,
    },
}

#[derive(Subcommand, Debug)]
pub enum SingularCmd {
    /// Build catalogued singular polynomials.
    Construct {
        #[command(flatten)]
        params: ParamArg,
        #[arg(long)]
        label: Label,
        /// Family:n=N:k=K; all applicable cases when omitted.
        #[arg(long)]
        case: Option<CaseTag>,
        #[arg(long, env = "CHEREDNIK2_MAX_DEGREE", default_value_t = 25)]
        max_degree: u32,
    },
    /// Brute-force singular spaces degree by degree.
    Search {
        #[command(flatten)]
        params: ParamArg,
        #[arg(long)]
        label: Label,
        #[arg(long, env = "CHEREDNIK2_MAX_DEGREE", default_value_t = 25)]
        max_degree: u32,
    },
}

#[derive(Subcommand, Debug)]
pub enum HomCmd {
    /// Evaluate the existence rules for one ordered pair.
    Check {
        #[command(flatten)]
        params: ParamArg,
        #[arg(long)]
        from: Label,
        #[arg(long)]
        to: Label,
        /// Also compute the dimension by exact linear algebra.
        #[arg(long)]
        brute: bool,
        #[arg(long, env = "CHEREDNIK2_MAX_DEGREE", default_value_t = 25)]
        max_degree: u32,
    },
    /// Search for parameters with a two-dimensional hom space between pairs.
    Dim2Search {
        #[arg(long, value_delimiter = ',', default_values_t = [3u32, 4])]
        r: Vec<u32>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_values_t = [1i64, -1, 2, -2])]
        c0: Vec<i64>,
        #[arg(long, default_value_t = 8)]
        dmax: i64,
        #[arg(long, default_value_t = 1)]
        limit: usize,
        #[arg(long, env = "CHEREDNIK2_MAX_DEGREE", default_value_t = 25)]
        max_degree: u32,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum Example {
    Example35,
    Example36,
}

/// Malformed input (exit code 2). Failed checks are reported through
/// `Outcome::failed` instead (exit code 1).
#[derive(Debug)]
pub enum Failure {
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

#[derive(Serialize)]
struct RunReport {
    command: String,
    params_digest: Option<String>,
    result: Value,
}

pub struct Outcome {
    pub text: String,
    pub result: Value,
    pub params: Option<Params>,
    /// Set when the command completed but a check failed.
    pub failed: Option<String>,
}

impl Outcome {
    fn ok(text: String, result: Value, params: Option<&Params>) -> Self {
        Outcome { text, result, params: params.cloned(), failed: None }
    }
}

pub fn load_params(path: &Path) -> Result<Params, Failure> {
    let raw = std::fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&raw).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

/// Stable textual digest of a parameter set.
pub fn params_digest(p: &Params) -> String {
    let d: Vec<String> = p.d.iter().map(fmt_rational).collect();
    format!("r={};c0={};d={}", p.r, fmt_rational(&p.c0), d.join(","))
}

fn parse_group_element(r: u32, spec: &str) -> Result<GroupElement, Failure> {
    let bad = || Failure::Input(format!("group element {spec:?} is not of the form a,b,swap"));
    let parts: Vec<&str> = spec.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(bad());
    }
    let a: i64 = parts[0].parse().map_err(|_| bad())?;
    let b: i64 = parts[1].parse().map_err(|_| bad())?;
    let swap = match parts[2] {
        "0" | "false" => false,
        "1" | "true" => true,
        _ => return Err(bad()),
    };
    Ok(GroupElement::new(r, a, b, swap))
}

fn elem_value(e: &ModElem) -> Value {
    json!({ "text": e.to_string(), "json": e.to_json() })
}

fn cmd_labels(p: &Params) -> Outcome {
    let mut text = String::new();
    let mut rows = Vec::new();
    for l in enumerate_labels(p.r) {
        let slots: Vec<Value> = (0..l.dim() as u8)
            .map(|slot| {
                let cc: Vec<String> = l.tableau(slot).iter().map(|b| fmt_rational(&charged_content(b, p))).collect();
                json!({ "slot": l.slot_name(slot), "charged_contents": cc })
            })
            .collect();
        let cc_text: Vec<String> = slots
            .iter()
            .map(|s| format!("{}: ({})", s["slot"].as_str().unwrap_or(""), s["charged_contents"].as_array().map(|a| a.iter().filter_map(|x| x.as_str()).collect::<Vec<_>>().join(", ")).unwrap_or_default()))
            .collect();
        text.push_str(&format!("{l}\tdim {}\t{}\n", l.dim(), cc_text.join("; ")));
        rows.push(json!({ "label": l, "dim": l.dim(), "tableaux": slots }));
    }
    Outcome::ok(text, json!(rows), Some(p))
}

fn cmd_act(p: Arc<Params>, label: Label, elem: &str, op: &str) -> Result<Outcome, Failure> {
    let e = ModElem::parse(label, p.clone(), elem)?;
    let (text, result) = match op {
        "y1" | "y2" => {
            let out = e.y_act(if op == "y1" { 1 } else { 2 });
            (out.to_string(), elem_value(&out))
        }
        w if w.starts_with("w:") => {
            let g = parse_group_element(p.r, &w[2..])?;
            let field = CycloField::new(p.r);
            let out = e.w_act(&g, &field);
            match out.to_rational(p.clone()) {
                Ok(rat) => (rat.to_string(), elem_value(&rat)),
                Err(_) => (out.to_string(), json!({ "text": out.to_string() })),
            }
        }
        other => return Err(Failure::Input(format!("unknown operation {other:?}; expected y1, y2 or w:a,b,swap"))),
    };
    Ok(Outcome::ok(text + "\n", result, Some(&p)))
}

fn cmd_construct(p: Arc<Params>, label: Label, case: Option<CaseTag>, max_degree: u32) -> Result<Outcome, Failure> {
    let tags = match case {
        Some(t) => vec![t],
        None => applicable_cases(&p, &label, max_degree),
    };
    let mut text = String::new();
    let mut out = Vec::new();
    for tag in tags {
        let (e, ledger) = construct(&p, &label, &tag)?;
        let singular = e.is_singular();
        text.push_str(&format!("{tag}\t{}\t{e}\n", if singular { "singular" } else { "NOT singular" }));
        out.push(json!({ "case": tag.to_string(), "element": elem_value(&e), "singular": singular, "ledger": ledger }));
    }
    if out.is_empty() {
        text.push_str("no applicable case\n");
    }
    Ok(Outcome::ok(text, json!(out), Some(&p)))
}

fn cmd_search(p: Arc<Params>, label: Label, max_degree: u32) -> Result<Outcome, Failure> {
    let mut text = String::new();
    let mut out = Vec::new();
    for d in 1..=max_degree {
        let basis = singular_space(&label, &p, d);
        if basis.is_empty() {
            continue;
        }
        let mut mults = Vec::new();
        for l in enumerate_labels(p.r) {
            let m = isotypic_multiplicity(&basis, &l)?;
            if m > 0 {
                mults.push((l, m));
            }
        }
        let desc: Vec<String> = mults.iter().map(|(l, m)| format!("{l} x{m}")).collect();
        text.push_str(&format!("degree {d}: dim {} [{}]\n", basis.len(), desc.join(", ")));
        for b in &basis {
            text.push_str(&format!("  {}\n", b.normalized()));
        }
        out.push(json!({
            "degree": d,
            "basis": basis.iter().map(elem_value).collect::<Vec<_>>(),
            "multiplicities": mults.iter().map(|(l, m)| json!({ "label": l, "multiplicity": m })).collect::<Vec<_>>(),
        }));
    }
    if out.is_empty() {
        text.push_str(&format!("no singular vectors in degrees 1..={max_degree}\n"));
    }
    Ok(Outcome::ok(text, json!(out), Some(&p)))
}

fn cmd_hom_check(p: Arc<Params>, from: Label, to: Label, brute: bool, max_degree: u32) -> Result<Outcome, Failure> {
    for l in [from, to] {
        if !l.is_valid(p.r) {
            return Err(Failure::Input(format!("{l} is not a label for r={}", p.r)));
        }
    }
    let rep = hom_conditions(&from, &to, &p);
    let mut text = format!("{from} -> {to}: necessary condition {}, exists {}\n", rep.necessary, rep.exists);
    for f in &rep.firings {
        let atoms: Vec<String> = f.atoms.iter().map(|(a, ok)| format!("{a}{}", if *ok { "" } else { " (fails)" })).collect();
        text.push_str(&format!(
            "  rule {:>2} {:?}: {}{}\n",
            f.rule,
            f.vars,
            atoms.join(" and "),
            match (f.fired, f.degree) {
                (true, Some(d)) => format!(" -> fires, degree {d}"),
                (true, None) => " -> fires".to_string(),
                _ => String::new(),
            }
        ));
    }
    let mut result = json!({ "report": rep });
    if brute {
        let dim = hom_dim_bruteforce(&from, &to, &p, max_degree)?;
        text.push_str(&format!("brute-force dimension (degree <= {max_degree}): {dim}\n"));
        result["brute_force_dimension"] = json!(dim);
    }
    Ok(Outcome::ok(text, result, Some(&p)))
}

fn cmd_dim2_search(r: &[u32], c0: &[i64], dmax: i64, limit: usize, max_degree: u32) -> Result<Outcome, Failure> {
    let found = search_dimension_two(r, c0, dmax, max_degree, limit);
    let mut text = String::new();
    let mut out = Vec::new();
    for inst in found {
        let p = Arc::new(inst.params.clone());
        let (from, to) = dimension_two_labels(inst.i, inst.j, inst.k);
        let dim = hom_dim_bruteforce(&from, &to, &p, max_degree)?;
        text.push_str(&format!("{} i={} j={} k={}: dim Hom({from}, {to}) = {dim}\n", params_digest(&p), inst.i, inst.j, inst.k));
        out.push(json!({ "params": inst.params, "i": inst.i, "j": inst.j, "k": inst.k, "from": from, "to": to, "dimension": dim }));
    }
    if out.is_empty() {
        text.push_str("no instance found\n");
    }
    Ok(Outcome::ok(text, json!(out), None))
}

fn cmd_diagram(p: Arc<Params>, dot: &Path, reduce: bool) -> Result<Outcome, Failure> {
    let d = morphism_diagram(&p)?;
    let rendered = d.to_dot(reduce);
    std::fs::write(dot, &rendered).map_err(|e| Failure::Input(format!("{}: {e}", dot.display())))?;
    let kept = d.kept.iter().filter(|k| **k).count();
    let text = format!("{} edges, {} after reduction; wrote {}\n", d.edges.len(), kept, dot.display());
    Ok(Outcome::ok(text, json!({ "edges": d.edges_json(), "dot": rendered }), Some(&p)))
}

fn cmd_verify(p: Arc<Params>, label: Label, elem: &str, oracle: bool) -> Result<Outcome, Failure> {
    let e = ModElem::parse(label, p.clone(), elem)?;
    let (y1, y2) = (e.y_act(1), e.y_act(2));
    let mut singular = y1.is_zero() && y2.is_zero();
    let mut text = format!("y1: {y1}\ny2: {y2}\n");
    let mut result = json!({ "y1": elem_value(&y1), "y2": elem_value(&y2) });
    if oracle {
        let o1 = y_act_oracle(&e, 1)?;
        let o2 = y_act_oracle(&e, 2)?;
        let agree = o1 == y1 && o2 == y2;
        text.push_str(&format!("oracle agrees: {agree}\n"));
        result["oracle_agrees"] = json!(agree);
        singular &= agree && o1.is_zero() && o2.is_zero();
    }
    result["singular"] = json!(singular);
    text.push_str(if singular { "singular\n" } else { "not singular\n" });
    let mut out = Outcome::ok(text, result, Some(&p));
    if !singular {
        out.failed = Some("not singular".into());
    }
    Ok(out)
}

fn cmd_repro(example: Example) -> Result<Outcome, Failure> {
    match example {
        Example::Example35 => {
            let r = repro_example35()?;
            let text = format!(
                "s = ({})\na = ({})\nb = ({})\np = {}\n{}\n",
                r.s.join(", "),
                r.a.join(", "),
                r.b.join(", "),
                r.polynomial,
                if r.ok() { "matches golden data".to_string() } else { format!("MISMATCH: {}", r.mismatches.join("; ")) }
            );
            let failed = (!r.ok()).then(|| "golden mismatch".to_string());
            Ok(Outcome { text, result: json!(r), params: None, failed })
        }
        Example::Example36 => {
            let r = repro_example36()?;
            let mut text = String::new();
            for row in &r.rows {
                text.push_str(&format!(
                    "{:>2} {} -> {} rule {} degree {} {}{}\n",
                    row.row,
                    row.from,
                    row.to,
                    row.rule.map(|x| x.to_string()).unwrap_or("-".into()),
                    row.degree.map(|x| x.to_string()).unwrap_or("-".into()),
                    if row.matches { "ok" } else { "MISMATCH" },
                    row.note.as_ref().map(|n| format!(" ({n})")).unwrap_or_default()
                ));
            }
            text.push_str(&format!("{} primitive firings\n", r.primitive_firings));
            for (a, b, reach) in &r.composite_only {
                text.push_str(&format!("composite rule only: {a} -> {b} (path of table morphisms: {reach})\n"));
            }
            for (a, b) in &r.unexpected {
                text.push_str(&format!("unexpected firing: {a} -> {b}\n"));
            }
            for (a, b) in &r.missing {
                text.push_str(&format!("missing firing: {a} -> {b}\n"));
            }
            let failed = (!r.ok()).then(|| format!("golden mismatch in rows {:?}", r.mismatched_rows()));
            if let Some(f) = &failed {
                text.push_str(&format!("{f}\n"));
            }
            Ok(Outcome { text, result: json!(r), params: None, failed })
        }
    }
}

fn cmd_sweep(r: &[u32], c0: &[String], dmax: i64, max_degree: u32) -> Result<Outcome, Failure> {
    let c0s = c0.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>, _>>()?;
    let grid = param_grid(r, &c0s, dmax);
    let s = sweep(&grid, max_degree);
    let beyond = s.discrepancies.iter().filter(|d| d.kind == DiscrepancyKind::BeyondDegreeCap).count();
    let other: Vec<String> = s.discrepancies.iter().filter(|d| d.kind != DiscrepancyKind::BeyondDegreeCap).map(|d| d.to_string()).collect();
    let mut text = format!(
        "{} parameter sets, {} ordered pairs, {} agree, {} beyond degree cap, {} other discrepancies, max dim {}\n",
        s.param_sets,
        s.pairs_checked,
        s.agreements,
        beyond,
        other.len(),
        s.max_dim
    );
    for line in &other {
        text.push_str(&format!("  {line}\n"));
    }
    let failed = (!other.is_empty()).then(|| format!("{} discrepancies", other.len()));
    Ok(Outcome { text, result: json!(s), params: None, failed })
}

pub fn execute(cli: &Cli) -> Result<Outcome, Failure> {
    let load = |a: &ParamArg| load_params(&a.params).map(Arc::new);
    match &cli.command {
        Command::Labels(a) => Ok(cmd_labels(load(a)?.as_ref())),
        Command::Act { params, label, elem, op } => cmd_act(load(params)?, *label, elem, op),
        Command::Singular(SingularCmd::Construct { params, label, case, max_degree }) => {
            cmd_construct(load(params)?, *label, *case, *max_degree)
        }
        Command::Singular(SingularCmd::Search { params, label, max_degree }) => cmd_search(load(params)?, *label, *max_degree),
        Command::Hom(HomCmd::Check { params, from, to, brute, max_degree }) => {
            cmd_hom_check(load(params)?, *from, *to, *brute, *max_degree)
        }
        Command::Hom(HomCmd::Dim2Search { r, c0, dmax, limit, max_degree }) => cmd_dim2_search(r, c0, *dmax, *limit, *max_degree),
        Command::Diagram { params, dot, reduce } => cmd_diagram(load(params)?, dot, *reduce),
        Command::Verify { params, label, elem, oracle } => cmd_verify(load(params)?, *label, elem, *oracle),
        Command::Repro { example } => cmd_repro(*example),
        Command::Sweep { r, c0, dmax, max_degree } => cmd_sweep(r, c0, *dmax, *max_degree),
    }
}

/// Runs the CLI on `argv`, writing to stdout/stderr; returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let argv: Vec<std::ffi::OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let started = Instant::now();
    let outcome = match execute(&cli) {
        Ok(o) => o,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            return 2;
        }
    };
    if cli.json {
        let echo: Vec<String> = argv.iter().skip(1).map(|s| s.to_string_lossy().into_owned()).collect();
        let report = RunReport {
            command: echo.join(" "),
            params_digest: outcome.params.as_ref().map(params_digest),
            result: outcome.result,
        };
        println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
    } else {
        print!("{}", outcome.text);
    }
    eprintln!("elapsed: {:.3} s", started.elapsed().as_secs_f64());
    match outcome.failed {
        Some(msg) => {
            eprintln!("{msg}");
            1
        }
        None => 0,
    }
}
