//! Elements of the standard module Δ(λ) = C[x1, x2] ⊗ λ and the action of
//! x, W and the Dunkl operators y1, y2 on them.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::rational::{fmt_rational, int, parse_rational, serde_rational};
use crate::arith::{CycloField, CycloNum, FieldElem, Rational};
use crate::error::{Error, Result};
use crate::labels::{GroupElement, Label, Params};

/// Basis element x1^n x2^m ⊗ v_slot.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mono {
    pub n: u32,
    pub m: u32,
    pub slot: u8,
}

impl Mono {
    pub fn new(n: u32, m: u32, slot: u8) -> Self {
        Mono { n, m, slot }
    }

    pub fn degree(&self) -> u32 {
        self.n + self.m
    }

    /// Torus weight (w1, w2) mod r: ζ_i acts on this basis element by ζ^{w_i}.
    pub fn weight(&self, label: &Label, r: u32) -> (u32, u32) {
        let (e1, e2) = label.slot_weights(self.slot);
        let m = r as i64;
        ((e1 - self.n as i64).rem_euclid(m) as u32, (e2 - self.m as i64).rem_euclid(m) as u32)
    }

    /// Display order: n descending, then m ascending, then slot.
    fn display_key(&self) -> (std::cmp::Reverse<u32>, u32, u8) {
        (std::cmp::Reverse(self.n), self.m, self.slot)
    }
}

/// Coefficient of one term of y_i applied to a basis element:
/// `base - d[minus] + d[plus] + c0r * c0 * r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct YCoef {
    pub base: i64,
    pub minus: Option<i64>,
    pub plus: Option<i64>,
    pub c0r: i64,
}

impl YCoef {
    fn diag(base: i64, minus: i64, plus: i64) -> Self {
        YCoef { base, minus: Some(minus), plus: Some(plus), c0r: 0 }
    }

    fn c0r(sign: i64) -> Self {
        YCoef { base: 0, minus: None, plus: None, c0r: sign }
    }

    pub fn eval(&self, p: &Params) -> Rational {
        let mut v = int(self.base);
        if let Some(k) = self.minus {
            v -= p.d_at(k);
        }
        if let Some(k) = self.plus {
            v += p.d_at(k);
        }
        if self.c0r != 0 {
            v += int(self.c0r * p.r as i64) * &p.c0;
        }
        v
    }

    /// Same value multiplied by a common denominator `scale`, given the
    /// scaled parameters `c0s = scale*c0` and `ds[k] = scale*d_k` (integers).
    pub fn eval_scaled(&self, r: u32, scale: i64, c0s: i64, ds: &[i64]) -> i64 {
        let idx = |k: i64| ds[k.rem_euclid(r as i64) as usize];
        let mut v = self.base * scale;
        if let Some(k) = self.minus {
            v -= idx(k);
        }
        if let Some(k) = self.plus {
            v += idx(k);
        }
        v + self.c0r * r as i64 * c0s
    }
}

/// Closed-form Dunkl operator y_axis on x1^n x2^m ⊗ v_slot: the list of
/// output basis elements with symbolic coefficients. Entries may repeat a
/// basis element; their coefficients add.
pub fn y_terms(label: &Label, r: u32, mono: Mono, axis: u8) -> Vec<(Mono, YCoef)> {
    let rr = r as i64;
    let (e1, e2) = label.slot_weights(mono.slot);
    let (ps, psign) = label.swap_slot(mono.slot);
    let psign = psign as i64;
    let (n, m) = (mono.n as i64, mono.m as i64);
    let mut out = Vec::new();
    let mk = |a: i64, b: i64, s: u8| Mono::new(a as u32, b as u32, s);
    // First k >= 0 with k ≡ target (mod r).
    let first = |target: i64| target.rem_euclid(rr);
    if axis == 1 {
        if n >= 1 {
            out.push((mk(n - 1, m, mono.slot), YCoef::diag(n, e1, e1 - n)));
        }
        if n > m {
            let mut k = first(e1 - e2);
            while k <= n - m - 1 {
                out.push((mk(n - 1 - k, m + k, ps), YCoef::c0r(-psign)));
                k += rr;
            }
        } else if n < m {
            let mut k = first(e2 - e1 - 1);
            while k <= m - n - 1 {
                out.push((mk(n + k, m - 1 - k, ps), YCoef::c0r(psign)));
                k += rr;
            }
        }
    } else {
        if m >= 1 {
            out.push((mk(n, m - 1, mono.slot), YCoef::diag(m, e2, e2 - m)));
        }
        if m > n {
            let mut k = first(e2 - e1);
            while k <= m - n - 1 {
                out.push((mk(n + k, m - 1 - k, ps), YCoef::c0r(-psign)));
                k += rr;
            }
        } else if m < n {
            let mut k = first(e1 - e2 - 1);
            while k <= n - m - 1 {
                out.push((mk(n - 1 - k, m + k, ps), YCoef::c0r(psign)));
                k += rr;
            }
        }
    }
    out
}

/// Finite linear combination of basis elements of Δ(label) with rational
/// coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct ModElem {
    pub label: Label,
    pub params: Arc<Params>,
    pub terms: BTreeMap<Mono, Rational>,
}

impl ModElem {
    pub fn zero(label: Label, params: Arc<Params>) -> Self {
        ModElem { label, params, terms: BTreeMap::new() }
    }

    pub fn basis(label: Label, params: Arc<Params>, n: u32, m: u32, slot: u8) -> Self {
        let mut e = Self::zero(label, params);
        e.add_term(Mono::new(n, m, slot), Rational::one());
        e
    }

    pub fn from_terms(label: Label, params: Arc<Params>, terms: impl IntoIterator<Item = (Mono, Rational)>) -> Self {
        let mut e = Self::zero(label, params);
        for (k, c) in terms {
            e.add_term(k, c);
        }
        e
    }

    pub fn r(&self) -> u32 {
        self.params.r
    }

    pub fn add_term(&mut self, mono: Mono, c: Rational) {
        if c.is_zero() {
            return;
        }
        assert!((mono.slot as usize) < self.label.dim(), "slot out of range for {}", self.label);
        let entry = self.terms.entry(mono).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&mono);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, mono: &Mono) -> Rational {
        self.terms.get(mono).cloned().unwrap_or_else(Rational::zero)
    }

    fn check_same(&self, o: &Self) -> Result<()> {
        if self.label != o.label {
            return Err(Error::LabelMismatch(format!("{} vs {}", self.label, o.label)));
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.check_same(o)?;
        let mut out = self.clone();
        for (k, c) in &o.terms {
            out.add_term(*k, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.label, self.params.clone());
        }
        ModElem {
            label: self.label,
            params: self.params.clone(),
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    /// Multiplication by x_i (i = 1 or 2).
    pub fn x_mul(&self, i: u8) -> Self {
        let terms = self.terms.iter().map(|(k, c)| {
            let mono = if i == 1 { Mono::new(k.n + 1, k.m, k.slot) } else { Mono::new(k.n, k.m + 1, k.slot) };
            (mono, c.clone())
        });
        ModElem { label: self.label, params: self.params.clone(), terms: terms.collect() }
    }

    /// Dunkl operator y_i (i = 1 or 2) through the closed formulas.
    pub fn y_act(&self, i: u8) -> Self {
        let mut out = Self::zero(self.label, self.params.clone());
        for (k, c) in &self.terms {
            for (mono, yc) in y_terms(&self.label, self.r(), *k, i) {
                let v = yc.eval(&self.params);
                if !v.is_zero() {
                    out.add_term(mono, v * c);
                }
            }
        }
        out
    }

    /// Annihilated by both y1 and y2.
    pub fn is_singular(&self) -> bool {
        self.y_act(1).is_zero() && self.y_act(2).is_zero()
    }

    pub fn homogeneous_component(&self, d: u32) -> Self {
        ModElem {
            label: self.label,
            params: self.params.clone(),
            terms: self.terms.iter().filter(|(k, _)| k.degree() == d).map(|(k, c)| (*k, c.clone())).collect(),
        }
    }

    pub fn degrees(&self) -> Vec<u32> {
        let mut ds: Vec<u32> = self.terms.keys().map(|k| k.degree()).collect();
        ds.sort_unstable();
        ds.dedup();
        ds
    }

    /// Group action with coefficients in Q(ζ).
    pub fn w_act(&self, g: &GroupElement, field: &Arc<CycloField>) -> CycloModElem {
        let mut out = CycloModElem::zero(self.label, field);
        for (k, c) in &self.terms {
            let (mono, sign, e) = act_on_basis_elem(&self.label, g, *k);
            out.add_term(mono, CycloNum::scaled_zeta(field, &(c * int(sign)), e));
        }
        out
    }

    /// Group action when every coefficient stays rational; otherwise
    /// `NotRational`.
    pub fn w_act_rational(&self, g: &GroupElement) -> Result<Self> {
        let r = self.r() as i64;
        let mut out = Self::zero(self.label, self.params.clone());
        for (k, c) in &self.terms {
            let (mono, sign, e) = act_on_basis_elem(&self.label, g, *k);
            let e = e.rem_euclid(r);
            let unit = if e == 0 {
                sign
            } else if 2 * e == r {
                -sign
            } else {
                return Err(Error::NotRational(format!("ζ^{e} in the image of {g:?}")));
            };
            out.add_term(mono, c * int(unit));
        }
        Ok(out)
    }

    /// Terms in display order (n descending, m ascending, slot ascending).
    pub fn sorted_terms(&self) -> Vec<(Mono, Rational)> {
        let mut v: Vec<(Mono, Rational)> = self.terms.iter().map(|(k, c)| (*k, c.clone())).collect();
        v.sort_by_key(|(k, _)| k.display_key());
        v
    }

    /// Divides by the coefficient of the first term in display order.
    pub fn normalized(&self) -> Self {
        match self.sorted_terms().first() {
            None => self.clone(),
            Some((_, c)) => self.scale(&(Rational::one() / c)),
        }
    }

    pub fn parse(label: Label, params: Arc<Params>, text: &str) -> Result<Self> {
        parse_elem(label, params, text)
    }

    pub fn to_json(&self) -> ElemJson {
        ElemJson {
            label: self.label,
            terms: self
                .sorted_terms()
                .into_iter()
                .map(|(k, c)| TermJson { coeff: c, n: k.n, m: k.m, slot: self.label.slot_name(k.slot).to_string() })
                .collect(),
        }
    }

    pub fn from_json(j: &ElemJson, params: Arc<Params>) -> Result<Self> {
        if !j.label.is_valid(params.r) {
            return Err(Error::BadLabel(format!("{} for r={}", j.label, params.r)));
        }
        let mut e = Self::zero(j.label, params);
        for t in &j.terms {
            let slot = j.label.parse_slot(&t.slot)?;
            e.add_term(Mono::new(t.n, t.m, slot), t.coeff.clone());
        }
        Ok(e)
    }
}

/// g (x1^n x2^m ⊗ v_slot) = sign ζ^e x1^n' x2^m' ⊗ v_slot'.
pub fn act_on_basis_elem(label: &Label, g: &GroupElement, k: Mono) -> (Mono, i64, i64) {
    let (n2, m2, ep) = g.act_on_monomial(k.n, k.m);
    let (s2, sign, ev) = label.act_on_basis(g, k.slot);
    (Mono::new(n2, m2, s2), sign as i64, ep + ev)
}

fn fmt_term(label: &Label, k: &Mono, c: &Rational, first: bool) -> String {
    let mut s = String::new();
    let neg = c.is_negative();
    if first {
        if neg {
            s.push('-');
        }
    } else {
        s.push_str(if neg { " - " } else { " + " });
    }
    let a = c.abs();
    let mut factors = Vec::new();
    if !a.is_one() || (k.n == 0 && k.m == 0) {
        if a.is_integer() {
            factors.push(fmt_rational(&a));
        } else {
            factors.push(format!("({})", fmt_rational(&a)));
        }
    }
    for (var, e) in [("x1", k.n), ("x2", k.m)] {
        match e {
            0 => {}
            1 => factors.push(var.to_string()),
            _ => factors.push(format!("{var}^{e}")),
        }
    }
    s.push_str(&factors.join("*"));
    s.push_str(" (x) v");
    s.push_str(label.slot_name(k.slot));
    s
}

impl fmt::Display for ModElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (k, c)) in self.sorted_terms().iter().enumerate() {
            write!(f, "{}", fmt_term(&self.label, k, c, idx == 0))?;
        }
        Ok(())
    }
}

impl fmt::Debug for ModElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ModElem[{}]({})", self.label, self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    #[serde(with = "serde_rational")]
    pub coeff: Rational,
    pub n: u32,
    pub m: u32,
    pub slot: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElemJson {
    pub label: Label,
    pub terms: Vec<TermJson>,
}

/// Splits `text` into signed terms at top-level `+`/`-`.
fn split_terms(text: &str) -> Vec<String> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut depth = 0i32;
    let mut prev: Option<char> = None;
    for ch in s.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        let boundary = (ch == '+' || ch == '-')
            && depth == 0
            && !cur.is_empty()
            && !matches!(prev, Some('*' | '/' | '^' | '(' | '+' | '-'));
        if boundary {
            out.push(std::mem::take(&mut cur));
        }
        if !(boundary && ch == '+') {
            cur.push(ch);
        }
        prev = Some(ch);
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    out
}

fn parse_elem(label: Label, params: Arc<Params>, text: &str) -> Result<ModElem> {
    let bad = |m: &str| Error::Parse(format!("{m} in {text:?}"));
    if !label.is_valid(params.r) {
        return Err(Error::BadLabel(format!("{label} for r={}", params.r)));
    }
    let mut e = ModElem::zero(label, params);
    let normalized = text.replace("(x)v", "@").replace("(x) v", "@");
    if normalized.trim() == "0" {
        return Ok(e);
    }
    for term in split_terms(&normalized) {
        let (body, slot) = term.rsplit_once('@').ok_or_else(|| bad("missing @slot"))?;
        let slot = label.parse_slot(slot)?;
        let (mut sign, mut body) = (Rational::one(), body);
        while let Some(rest) = body.strip_prefix('-') {
            sign = -sign;
            body = rest;
        }
        body = body.strip_prefix('+').unwrap_or(body);
        let (mut n, mut m) = (0u32, 0u32);
        let mut coeff = sign;
        for factor in body.split('*') {
            let exp_of = |f: &str| -> Result<u32> {
                match f.split_once('^') {
                    None => Ok(1),
                    Some((_, k)) => k.parse().map_err(|_| bad("bad exponent")),
                }
            };
            if factor.starts_with("x1") {
                n += exp_of(factor)?;
            } else if factor.starts_with("x2") {
                m += exp_of(factor)?;
            } else {
                let lit = factor.trim_start_matches('(').trim_end_matches(')');
                coeff *= parse_rational(lit)?;
            }
        }
        e.add_term(Mono::new(n, m, slot), coeff);
    }
    Ok(e)
}

/// Element of Δ(label) with coefficients in Q(ζ).
#[derive(Clone, PartialEq)]
pub struct CycloModElem {
    pub label: Label,
    pub field: Arc<CycloField>,
    pub terms: BTreeMap<Mono, CycloNum>,
}

impl CycloModElem {
    pub fn zero(label: Label, field: &Arc<CycloField>) -> Self {
        CycloModElem { label, field: field.clone(), terms: BTreeMap::new() }
    }

    pub fn from_rational(e: &ModElem, field: &Arc<CycloField>) -> Self {
        let mut out = Self::zero(e.label, field);
        for (k, c) in &e.terms {
            out.add_term(*k, CycloNum::from_rational(field, c.clone()));
        }
        out
    }

    pub fn add_term(&mut self, mono: Mono, c: CycloNum) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&mono) {
            Some(v) => {
                *v = v.add_ref(&c);
                if v.is_zero() {
                    self.terms.remove(&mono);
                }
            }
            None => {
                self.terms.insert(mono, c);
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &o.terms {
            out.add_term(*k, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &CycloNum) -> Self {
        let mut out = Self::zero(self.label, &self.field);
        for (k, v) in &self.terms {
            out.add_term(*k, v.mul_ref(c));
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn w_act(&self, g: &GroupElement) -> Self {
        let mut out = Self::zero(self.label, &self.field);
        for (k, c) in &self.terms {
            let (mono, sign, e) = act_on_basis_elem(&self.label, g, *k);
            out.add_term(mono, CycloNum::scaled_zeta(&self.field, &int(sign), e).mul_ref(c));
        }
        out
    }

    pub fn to_rational(&self, params: Arc<Params>) -> Result<ModElem> {
        let mut out = ModElem::zero(self.label, params);
        for (k, c) in &self.terms {
            out.add_term(*k, c.to_rational()?);
        }
        Ok(out)
    }
}

impl fmt::Debug for CycloModElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloModElem[{}]{{", self.label)?;
        for (k, c) in &self.terms {
            write!(f, " ({c})*x1^{}*x2^{}@{};", k.n, k.m, self.label.slot_name(k.slot))?;
        }
        write!(f, " }}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::frac;

    fn params() -> Arc<Params> {
        Params::from_ints(3, int(1), &[5, 0, -5]).unwrap().shared()
    }

    #[test]
    fn display_and_parse_round_trip() {
        let p = params();
        let e = ModElem::parse(Label::Pair(0, 1), p.clone(), "-1/2*x1^2@T1 + 3*x2@T2 + x1^9*x2^4@T1").unwrap();
        let text = e.to_string();
        assert_eq!(text, "x1^9*x2^4 (x) vT1 - (1/2)*x1^2 (x) vT1 + 3*x2 (x) vT2");
        assert_eq!(ModElem::parse(Label::Pair(0, 1), p, &text).unwrap(), e);
    }

    #[test]
    fn json_round_trip() {
        let p = params();
        let e = ModElem::parse(Label::Row(1), p.clone(), "(96/115)*x1^9*x2^4@T - 2*x1@T").unwrap();
        let j = serde_json::to_string(&e.to_json()).unwrap();
        let back: ElemJson = serde_json::from_str(&j).unwrap();
        assert_eq!(ModElem::from_json(&back, p).unwrap(), e);
    }

    #[test]
    fn diagonal_monomial_singular_in_row() {
        // n - d_i + d_{i-n} = 0 makes x1^n x2^n ⊗ v singular in Row(i).
        let p = params();
        let e = ModElem::basis(Label::Row(0), p.clone(), 5, 5, 0);
        assert!(e.is_singular());
        let e = ModElem::basis(Label::Row(0), p, 4, 4, 0);
        assert!(!e.is_singular());
    }

    #[test]
    fn weights_follow_slots() {
        let l = Label::Pair(0, 1);
        assert_eq!(Mono::new(5, 5, 1).weight(&l, 3), (2, 1));
        assert_eq!(Mono::new(0, 0, 0).weight(&l, 3), (0, 1));
    }

    #[test]
    fn rational_group_action_of_swap() {
        let p = Params::new(3, frac(1, 2), vec![int(0), int(0), int(0)]).unwrap().shared();
        let e = ModElem::parse(Label::Col(0), p, "x1^2*x2@T").unwrap();
        let s = e.w_act_rational(&GroupElement::transposition(3)).unwrap();
        assert_eq!(s.to_string(), "-x1*x2^2 (x) vT");
        assert!(e.w_act_rational(&GroupElement::zeta(3, 1, 1)).is_err());
    }
}

impl fmt::Display for CycloModElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms: Vec<(&Mono, &CycloNum)> = self.terms.iter().collect();
        terms.sort_by_key(|(k, _)| k.display_key());
        for (idx, (k, c)) in terms.into_iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            for (var, e) in [("x1", k.n), ("x2", k.m)] {
                match e {
                    0 => {}
                    1 => write!(f, "*{var}")?,
                    _ => write!(f, "*{var}^{e}")?,
                }
            }
            write!(f, " (x) v{}", self.label.slot_name(k.slot))?;
        }
        Ok(())
    }
}

