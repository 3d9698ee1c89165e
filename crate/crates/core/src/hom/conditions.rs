//! Numerical conditions for the existence of homomorphisms Δ(λ) → Δ(μ).

use std::fmt;

use serde::Serialize;

use crate::arith::rational::{int, to_i64};
use crate::arith::Rational;
use crate::labels::{charged_content, Label, Params};

/// `Int { a, b, sigma }`: D = d_a − d_b + σ c0 r is a non-negative integer
/// with D ≡ a − b (mod r). `Half { plus }`: ±2c0 is a positive odd integer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum AtomicCondition {
    Int { a: u32, b: u32, sigma: i8 },
    Half { plus: bool },
}

impl AtomicCondition {
    /// The witnessing integer (D, or k for `Half`) when the condition holds.
    pub fn value(&self, p: &Params) -> Option<u32> {
        match *self {
            AtomicCondition::Int { a, b, sigma } => {
                let dv: Rational = p.d_at(a as i64) - p.d_at(b as i64) + int(sigma as i64 * p.r as i64) * &p.c0;
                let d = to_i64(&dv)?;
                let r = p.r as i64;
                (d >= 0 && (d - (a as i64 - b as i64)).rem_euclid(r) == 0).then_some(d as u32)
            }
            AtomicCondition::Half { plus } => {
                let two = if plus { &p.c0 * int(2) } else { &p.c0 * int(-2) };
                let k = to_i64(&two)?;
                (k > 0 && k % 2 == 1).then_some(k as u32)
            }
        }
    }

    pub fn holds(&self, p: &Params) -> bool {
        self.value(p).is_some()
    }

    /// An `Int` atom with a = b and σ = 0 (always true, the identity step).
    pub fn is_trivial(&self) -> bool {
        matches!(*self, AtomicCondition::Int { a, b, sigma: 0 } if a == b)
    }
}

impl fmt::Display for AtomicCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            AtomicCondition::Int { a, b, sigma: 0 } => write!(f, "d{a}-d{b}"),
            AtomicCondition::Int { a, b, sigma } => {
                write!(f, "d{a}-d{b}{}c0r", if sigma > 0 { "+" } else { "-" })
            }
            AtomicCondition::Half { plus } => write!(f, "c0={}k/2", if plus { "" } else { "-" }),
        }
    }
}

/// Index variables of a rule assignment.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct Vars {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub s: u32,
}

fn int_atom(a: u32, b: u32, sigma: i8) -> AtomicCondition {
    AtomicCondition::Int { a, b, sigma }
}

/// The atoms of rule `rule` under assignment `v`.
pub fn rule_atoms(rule: u8, v: &Vars) -> Vec<AtomicCondition> {
    let half = |plus| AtomicCondition::Half { plus };
    match rule {
        1 | 5 => vec![int_atom(v.b, v.a, 0)],
        2 => vec![half(false)],
        3 => vec![int_atom(v.b, v.a, -1)],
        4 => vec![half(true)],
        6 => vec![int_atom(v.b, v.a, 1)],
        7 => vec![int_atom(v.a, v.b, 1)],
        8 => vec![int_atom(v.a, v.b, -1)],
        9 => vec![int_atom(v.c, v.b, 0)],
        10 => vec![int_atom(v.b, v.a, 0), half(false)],
        11 => vec![int_atom(v.b, v.a, 0), half(true)],
        12 => vec![int_atom(v.b, v.a, 0), int_atom(v.c, v.b, -1)],
        13 => vec![int_atom(v.b, v.a, 0), int_atom(v.c, v.b, 1)],
        14 => vec![int_atom(v.c, v.a, 0), int_atom(v.c, v.b, 1)],
        15 => vec![int_atom(v.c, v.a, 0), int_atom(v.c, v.b, -1)],
        16 => vec![int_atom(v.c, v.a, 0), int_atom(v.s, v.b, 0)],
        _ => panic!("unknown rule {rule}"),
    }
}

fn orders(i: u32, j: u32) -> [(u32, u32); 2] {
    [(i, j), (j, i)]
}

/// All assignments of rule `rule` whose label pattern matches λ → μ.
pub fn rule_assignments(rule: u8, from: &Label, to: &Label) -> Vec<Vars> {
    use Label::*;
    let v = |a, b, c, s| Vars { a, b, c, s };
    let mut out = Vec::new();
    match (rule, *from, *to) {
        (1, Row(a), Row(b)) | (5, Col(a), Col(b)) | (10, Row(a), Col(b)) | (11, Col(a), Row(b)) => {
            out.push(v(a, b, 0, 0))
        }
        (2, Row(a), Col(b)) | (4, Col(a), Row(b)) if a == b => out.push(v(a, a, 0, 0)),
        (3, Row(a), Pair(x, y)) | (6, Col(a), Pair(x, y)) => {
            for (p, q) in orders(x, y) {
                if p == a {
                    out.push(v(a, q, 0, 0));
                }
            }
        }
        (7, Pair(x, y), Row(a)) | (8, Pair(x, y), Col(a)) => {
            for (p, q) in orders(x, y) {
                if p == a {
                    out.push(v(a, q, 0, 0));
                }
            }
        }
        (9, Pair(x, y), Pair(u, w)) => {
            for (a, b) in orders(x, y) {
                for (a2, c) in orders(u, w) {
                    if a == a2 && b != c {
                        out.push(v(a, b, c, 0));
                    }
                }
            }
        }
        (12, Row(a), Pair(x, y)) | (13, Col(a), Pair(x, y)) => {
            for (b, c) in orders(x, y) {
                out.push(v(a, b, c, 0));
            }
        }
        (14, Pair(x, y), Row(c)) | (15, Pair(x, y), Col(c)) => {
            for (a, b) in orders(x, y) {
                out.push(v(a, b, c, 0));
            }
        }
        (16, Pair(x, y), Pair(u, w)) => {
            for (a, b) in orders(x, y) {
                out.push(v(a, b, u, w));
            }
        }
        _ => {}
    }
    out
}

/// Primitive rules (a single catalogued singular polynomial).
pub fn is_primitive(rule: u8) -> bool {
    rule <= 9
}

/// One admissible assignment of one rule, with its evaluated atoms.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RuleFiring {
    pub rule: u8,
    pub vars: Vars,
    pub atoms: Vec<(String, bool)>,
    pub fired: bool,
    /// Degree of the generator image when the rule fires.
    pub degree: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConditionReport {
    pub from: Label,
    pub to: Label,
    pub identity: bool,
    pub necessary: bool,
    pub firings: Vec<RuleFiring>,
    pub exists: bool,
}

impl ConditionReport {
    pub fn fired(&self) -> impl Iterator<Item = &RuleFiring> {
        self.firings.iter().filter(|f| f.fired)
    }

    /// Smallest degree among fired rules.
    pub fn min_degree(&self) -> Option<u32> {
        self.fired().filter_map(|f| f.degree).min()
    }
}

/// One primitive step of a (possibly composite) rule.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Step {
    pub rule: u8,
    pub from: Label,
    pub to: Label,
    pub vars: Vars,
}

fn pair_label(x: u32, y: u32) -> Option<Label> {
    Label::pair(x, y).ok()
}

/// Decomposes a fired rule into primitive steps (identity steps dropped).
pub fn rule_steps(rule: u8, v: &Vars, from: &Label, to: &Label) -> Option<Vec<Step>> {
    use Label::*;
    let st = |rule, from, to, vars| Step { rule, from, to, vars };
    let vv = |a, b, c| Vars { a, b, c, s: 0 };
    let mut steps = Vec::new();
    let mut push = |s: Step| {
        if s.from != s.to {
            steps.push(s);
        }
    };
    match rule {
        1..=9 => push(st(rule, *from, *to, *v)),
        10 => {
            push(st(1, Row(v.a), Row(v.b), vv(v.a, v.b, 0)));
            push(st(2, Row(v.b), Col(v.b), vv(v.b, v.b, 0)));
        }
        11 => {
            push(st(5, Col(v.a), Col(v.b), vv(v.a, v.b, 0)));
            push(st(4, Col(v.b), Row(v.b), vv(v.b, v.b, 0)));
        }
        12 | 13 => {
            let (first, second, mid) = if rule == 12 { (1, 3, Row(v.b)) } else { (5, 6, Col(v.b)) };
            push(st(first, *from, mid, vv(v.a, v.b, 0)));
            push(st(second, mid, *to, vv(v.b, v.c, 0)));
        }
        14 | 15 => {
            // Pair{a,b} → Pair{b,c} → Row(c) / Col(c)
            let mid = if v.a == v.c { *from } else { pair_label(v.b, v.c)? };
            push(st(9, *from, mid, vv(v.b, v.a, v.c)));
            push(st(if rule == 14 { 7 } else { 8 }, mid, *to, vv(v.c, v.b, 0)));
        }
        16 => {
            // Pair{a,b} → Pair{c,b} → Pair{c,s}, or via Pair{a,s}.
            if v.c != v.b {
                let mid = pair_label(v.c, v.b)?;
                push(st(9, *from, mid, vv(v.b, v.a, v.c)));
                push(st(9, mid, *to, vv(v.c, v.b, v.s)));
            } else {
                let mid = pair_label(v.a, v.s)?;
                push(st(9, *from, mid, vv(v.a, v.b, v.s)));
                push(st(9, mid, *to, vv(v.s, v.a, v.c)));
            }
        }
        _ => return None,
    }
    Some(steps)
}

/// Degree of the generator image of a primitive step.
pub fn step_degree(step: &Step, p: &Params) -> Option<u32> {
    let atoms = rule_atoms(step.rule, &step.vars);
    let val = atoms[0].value(p)?;
    Some(match step.rule {
        1 | 5 => 2 * val,
        2 | 4 => p.r * val,
        _ => val,
    })
}

/// Thm. 4.1-type necessary condition via charged contents of tableaux.
pub fn necessary_condition(from: &Label, to: &Label, p: &Params) -> bool {
    let r = p.r as i64;
    for t in 0..from.dim() as u8 {
        for u in 0..to.dim() as u8 {
            let tt = from.tableau(t);
            let uu = to.tableau(u);
            let ok = (0..2).all(|k| {
                let diff: Rational = charged_content(&uu[k], p) - charged_content(&tt[k], p);
                let beta = uu[k].component as i64 - tt[k].component as i64;
                match to_i64(&diff) {
                    Some(dv) => dv >= 0 && (dv - beta).rem_euclid(r) == 0,
                    None => false,
                }
            });
            if ok {
                return true;
            }
        }
    }
    false
}

/// Evaluates all sixteen rules for λ → μ.
pub fn hom_conditions(from: &Label, to: &Label, p: &Params) -> ConditionReport {
    let mut firings = Vec::new();
    if from != to {
        for rule in 1..=16u8 {
            for vars in rule_assignments(rule, from, to) {
                let atoms = rule_atoms(rule, &vars);
                let evaluated: Vec<(String, bool)> = atoms.iter().map(|a| (a.to_string(), a.holds(p))).collect();
                let fired = evaluated.iter().all(|(_, b)| *b);
                let degree = if fired {
                    rule_steps(rule, &vars, from, to)
                        .and_then(|steps| steps.iter().map(|s| step_degree(s, p)).sum::<Option<u32>>())
                } else {
                    None
                };
                firings.push(RuleFiring { rule, vars, atoms: evaluated, fired, degree });
            }
        }
    }
    let identity = from == to;
    let exists = identity || firings.iter().any(|f| f.fired);
    ConditionReport { from: *from, to: *to, identity, necessary: necessary_condition(from, to, p), firings, exists }
}

/// `true` when the report is consistent with generic parameters (used in tests).
pub fn no_rule_fires(p: &Params) -> bool {
    let labels = crate::labels::enumerate_labels(p.r);
    labels.iter().all(|a| labels.iter().all(|b| a == b || !hom_conditions(a, b, p).exists))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::frac;

    fn sec6() -> Params {
        Params::from_ints(3, int(1), &[5, 0, -5]).unwrap()
    }

    #[test]
    fn examples_at_sec6() {
        let p = sec6();
        let rep = hom_conditions(&Label::Row(2), &Label::Row(0), &p);
        let f: Vec<_> = rep.fired().collect();
        assert!(f.iter().any(|f| f.rule == 1 && f.degree == Some(20)));
        let rep = hom_conditions(&Label::Col(2), &Label::Pair(1, 2), &p);
        assert!(rep.fired().any(|f| f.rule == 6 && f.degree == Some(8)));
        assert!(necessary_condition(&Label::Row(2), &Label::Row(0), &p));
        assert!(!necessary_condition(&Label::Row(0), &Label::Row(2), &p));
    }

    #[test]
    fn generic_parameters_have_no_morphisms() {
        let p = Params::new(3, frac(1, 7), vec![frac(1, 3), frac(2, 5), frac(-11, 15)]).unwrap();
        assert!(no_rule_fires(&p));
    }
}
