//! Reproduction of the two worked examples against bundled golden data.

use std::collections::BTreeSet;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::arith::rational::{fmt_rational, parse_rational};
use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::hom::conditions::{hom_conditions, is_primitive};
use crate::hom::diagram::morphism_diagram;
use crate::hom::maps::proportional;
use crate::labels::{enumerate_labels, Label, Params};
use crate::module::{ModElem, Mono};
use crate::singular::{construct, solve_rec_system, CaseTag, Variant};

pub const EXAMPLE35_JSON: &str = include_str!("../golden/example35.json");
pub const EXAMPLE36_JSON: &str = include_str!("../golden/example36.json");

#[derive(Clone, Debug, Deserialize)]
pub struct Example35Golden {
    pub params: Params,
    pub label: Label,
    pub case: String,
    pub s: Vec<String>,
    pub a: Vec<String>,
    pub b: Vec<String>,
    pub polynomial: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Example35Report {
    pub s: Vec<String>,
    pub a: Vec<String>,
    pub b: Vec<String>,
    pub polynomial: String,
    pub singular: bool,
    pub mismatches: Vec<String>,
}

impl Example35Report {
    pub fn ok(&self) -> bool {
        self.mismatches.is_empty() && self.singular
    }
}

fn fmt_all(v: &[Rational]) -> Vec<String> {
    v.iter().map(fmt_rational).collect()
}

fn parse_all(v: &[String]) -> Result<Vec<Rational>> {
    v.iter().map(|x| parse_rational(x)).collect()
}

pub fn example35_golden() -> Result<Example35Golden> {
    serde_json::from_str(EXAMPLE35_JSON).map_err(|e| Error::Parse(e.to_string()))
}

/// Recomputes the recursive-system example and compares it with the golden data.
pub fn repro_example35() -> Result<Example35Report> {
    let g = example35_golden()?;
    let p = Arc::new(g.params.clone());
    let tag: CaseTag = g.case.parse()?;
    let Label::Pair(i, j) = g.label else {
        return Err(Error::BadLabel(g.label.to_string()));
    };
    let rs = solve_rec_system(&p, i, j, Variant::A, tag.n, tag.k)?;
    let (elem, _) = construct(&p, &g.label, &tag)?;
    let expected = ModElem::parse(g.label, p.clone(), &g.polynomial)?;
    let mut mismatches = Vec::new();
    for (name, got, want) in [("s", &rs.s, &g.s), ("a", &rs.a, &g.a), ("b", &rs.b, &g.b)] {
        if *got != parse_all(want)? {
            mismatches.push(format!("{name}: got {:?}, expected {:?}", fmt_all(got), want));
        }
    }
    if elem != expected {
        mismatches.push(format!("polynomial: got {elem}, expected {expected}"));
    }
    Ok(Example35Report {
        s: fmt_all(&rs.s),
        a: fmt_all(&rs.a),
        b: fmt_all(&rs.b),
        polynomial: elem.to_string(),
        singular: elem.is_singular(),
        mismatches,
    })
}

#[derive(Clone, Debug, Deserialize)]
pub struct GoldenRow {
    pub row: u32,
    pub from: Label,
    pub to: Label,
    pub degree: u32,
    pub paper: String,
    pub expected: String,
    #[serde(default)]
    pub note: Option<String>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct Example36Golden {
    pub params: Params,
    pub rows: Vec<GoldenRow>,
}

pub fn example36_golden() -> Result<Example36Golden> {
    serde_json::from_str(EXAMPLE36_JSON).map_err(|e| Error::Parse(e.to_string()))
}

#[derive(Clone, Debug, Serialize)]
pub struct RowReport {
    pub row: u32,
    pub from: Label,
    pub to: Label,
    pub rule: Option<u8>,
    pub degree: Option<u32>,
    pub expected_degree: u32,
    pub image: Option<String>,
    pub expected_singular: bool,
    pub matches: bool,
    pub note: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Example36Report {
    pub rows: Vec<RowReport>,
    /// Ordered pairs with a primitive firing that no table row lists.
    pub unexpected: Vec<(Label, Label)>,
    /// Pairs fired only by composite rules, with whether a path of
    /// primitive edges connects them (they are then composites, not new
    /// table entries).
    pub composite_only: Vec<(Label, Label, bool)>,
    /// Ordered pairs listed in the table where no rule fires.
    pub missing: Vec<(Label, Label)>,
    pub primitive_firings: usize,
}

impl Example36Report {
    pub fn ok(&self) -> bool {
        self.unexpected.is_empty()
            && self.missing.is_empty()
            && self.composite_only.iter().all(|c| c.2)
            && self.rows.iter().all(|r| r.matches)
    }

    pub fn mismatched_rows(&self) -> Vec<u32> {
        self.rows.iter().filter(|r| !r.matches).map(|r| r.row).collect()
    }
}

/// Exchanges the two slots of a Pair element without touching the variables.
fn relabel_slots(e: &ModElem) -> ModElem {
    ModElem::from_terms(
        e.label,
        e.params.clone(),
        e.terms.iter().map(|(k, c)| (Mono::new(k.n, k.m, 1 - k.slot), c.clone())),
    )
}

/// Equality up to a nonzero scalar, allowing either generator image and,
/// for maps from Row/Col into Pair modules, a relabelling of the two slots.
pub fn matches_up_to_scalar(expected: &ModElem, gen: &ModElem, swapped: &ModElem, domain: &Label) -> bool {
    let mut candidates = vec![gen.clone(), swapped.clone()];
    if matches!(expected.label, Label::Pair(..)) && !matches!(domain, Label::Pair(..)) {
        candidates.push(relabel_slots(gen));
        candidates.push(relabel_slots(swapped));
    }
    candidates.iter().any(|c| proportional(expected, c).is_some_and(|s| !num_traits::Zero::is_zero(&s)))
}

fn reachable(edges: &BTreeSet<(Label, Label)>, from: &Label, to: &Label) -> bool {
    let mut seen = BTreeSet::from([*from]);
    let mut stack = vec![*from];
    while let Some(x) = stack.pop() {
        for (a, b) in edges {
            if *a == x && seen.insert(*b) {
                stack.push(*b);
            }
        }
    }
    seen.contains(to)
}

/// Reruns the classification and construction at the worked-example
/// parameters and compares each morphism with the golden table.
pub fn repro_example36() -> Result<Example36Report> {
    let g = example36_golden()?;
    let p = Arc::new(g.params.clone());
    let diagram = morphism_diagram(&p)?;
    let listed: BTreeSet<(Label, Label)> = g.rows.iter().map(|r| (r.from, r.to)).collect();
    let fired: BTreeSet<(Label, Label)> = diagram.edges.iter().map(|e| (e.from, e.to)).collect();
    let mut composite_only = Vec::new();
    let labels = enumerate_labels(p.r);
    for a in &labels {
        for b in &labels {
            if a != b && !fired.contains(&(*a, *b)) && hom_conditions(a, b, &p).exists {
                composite_only.push((*a, *b, reachable(&fired, a, b)));
            }
        }
    }
    let mut rows = Vec::new();
    for row in &g.rows {
        let expected = ModElem::parse(row.to, p.clone(), &row.expected)?;
        let edge = diagram.edges.iter().find(|e| e.from == row.from && e.to == row.to && is_primitive(e.rule));
        let (rule, degree, image, matches) = match edge {
            None => (None, None, None, false),
            Some(e) => {
                let gen = e.hom.image_of_generator(0);
                let swapped = e.hom.image_of_generator(1);
                let ok = e.degree == row.degree && matches_up_to_scalar(&expected, &gen, &swapped, &row.from);
                (Some(e.rule), Some(e.degree), Some(gen.normalized().to_string()), ok)
            }
        };
        rows.push(RowReport {
            row: row.row,
            from: row.from,
            to: row.to,
            rule,
            degree,
            expected_degree: row.degree,
            image,
            expected_singular: expected.is_singular(),
            matches,
            note: row.note.clone(),
        });
    }
    Ok(Example36Report {
        rows,
        unexpected: fired.difference(&listed).copied().collect(),
        composite_only,
        missing: listed.difference(&fired).copied().collect(),
        primitive_firings: diagram.edges.len(),
    })
}
