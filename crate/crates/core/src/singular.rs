//! Catalogued singular polynomials in Δ(Row(i)), Δ(Col(i)) and Δ(Pair(i,j)),
//! including the recursive coefficient system and the clearing of poles at
//! special parameter values.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::rational::{fmt_rational, int, serde_rational_vec};
use crate::arith::{FieldElem, RatFunc, Rational};
use crate::error::{Error, Result};
use crate::labels::{GroupElement, Label, Params};
use crate::module::{ModElem, Mono};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    RowA,
    RowB,
    RowC,
    ColA,
    ColB,
    ColC,
    Pair1a,
    Pair1b,
    Pair2a,
    Pair2b,
    Pair3a,
    Pair3b,
}

impl Family {
    pub const ALL: [Family; 12] = [
        Family::RowA,
        Family::RowB,
        Family::RowC,
        Family::ColA,
        Family::ColB,
        Family::ColC,
        Family::Pair1a,
        Family::Pair1b,
        Family::Pair2a,
        Family::Pair2b,
        Family::Pair3a,
        Family::Pair3b,
    ];

    fn fits(&self, label: &Label) -> bool {
        use Family::*;
        matches!(
            (self, label),
            (RowA | RowB | RowC, Label::Row(_))
                | (ColA | ColB | ColC, Label::Col(_))
                | (Pair1a | Pair1b | Pair2a | Pair2b | Pair3a | Pair3b, Label::Pair(..))
        )
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Family> {
        Family::ALL
            .iter()
            .find(|f| f.to_string().eq_ignore_ascii_case(s.trim()))
            .copied()
            .ok_or_else(|| Error::Parse(format!("unknown case family {s:?}")))
    }
}

/// A catalogued clause together with its degree data. For the A families
/// `n` is the degree r·k.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CaseTag {
    pub family: Family,
    pub n: u32,
    pub k: u32,
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:n={}:k={}", self.family, self.n, self.k)
    }
}

impl FromStr for CaseTag {
    type Err = Error;
    /// Accepts `Family:n=N:k=K` (k may be omitted where it is determined).
    fn from_str(s: &str) -> Result<CaseTag> {
        let bad = || Error::Parse(format!("bad case tag {s:?}"));
        let mut parts = s.split(':');
        let family: Family = parts.next().ok_or_else(bad)?.parse()?;
        let (mut n, mut k) = (None, None);
        for p in parts {
            let (key, v) = p.split_once('=').ok_or_else(bad)?;
            let v: u32 = v.trim().parse().map_err(|_| bad())?;
            match key.trim() {
                "n" => n = Some(v),
                "k" => k = Some(v),
                _ => return Err(bad()),
            }
        }
        Ok(CaseTag { family, n: n.ok_or_else(bad)?, k: k.unwrap_or(0) })
    }
}

/// Rational function of one parameter u written as
/// scalar · Π (u − z) / Π (u − w), with common factors cancelled.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffExpr {
    pub scalar: Rational,
    pub num: Vec<Rational>,
    pub den: Vec<Rational>,
}

impl CoeffExpr {
    pub fn constant(c: Rational) -> Self {
        CoeffExpr { scalar: c, num: vec![], den: vec![] }
    }

    pub fn new(scalar: Rational, mut num: Vec<Rational>, mut den: Vec<Rational>) -> Self {
        let mut i = 0;
        while i < num.len() {
            if let Some(pos) = den.iter().position(|w| *w == num[i]) {
                den.swap_remove(pos);
                num.swap_remove(i);
            } else {
                i += 1;
            }
        }
        num.sort();
        den.sort();
        CoeffExpr { scalar, num, den }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let num = self.num.iter().chain(&o.num).cloned().collect();
        let den = self.den.iter().chain(&o.den).cloned().collect();
        Self::new(&self.scalar * &o.scalar, num, den)
    }

    pub fn pole_order(&self, u0: &Rational) -> usize {
        if self.scalar.is_zero() {
            return 0;
        }
        let b = self.den.iter().filter(|w| *w == u0).count();
        let a = self.num.iter().filter(|z| *z == u0).count();
        b.saturating_sub(a)
    }

    /// Value of (u − u0)^e · f(u) at u = u0; requires e ≥ pole order.
    pub fn eval_cleared(&self, u0: &Rational, e: usize) -> Rational {
        if self.scalar.is_zero() {
            return Rational::zero();
        }
        let b = self.den.iter().filter(|w| *w == u0).count();
        let a = self.num.iter().filter(|z| *z == u0).count();
        assert!(a + e >= b, "clearing exponent below pole order");
        if a + e > b {
            return Rational::zero();
        }
        let mut v = self.scalar.clone();
        for z in self.num.iter().filter(|z| *z != u0) {
            v *= u0 - z;
        }
        for w in self.den.iter().filter(|w| *w != u0) {
            v /= u0 - w;
        }
        v
    }

    pub fn eval(&self, u0: &Rational) -> Option<Rational> {
        if self.pole_order(u0) > 0 {
            None
        } else {
            Some(self.eval_cleared(u0, 0))
        }
    }
}

impl fmt::Display for CoeffExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fac = |z: &Rational| {
            if z.is_zero() {
                "u".to_string()
            } else {
                format!("(u - {})", fmt_rational(z))
            }
        };
        write!(f, "{}", fmt_rational(&self.scalar))?;
        for z in &self.num {
            write!(f, "*{}", fac(z))?;
        }
        for w in &self.den {
            write!(f, "/{}", fac(w))?;
        }
        Ok(())
    }
}

fn binomial(k: u32, l: u32) -> Rational {
    let mut v = Rational::one();
    for t in 0..l {
        v = v * int((k - t) as i64) / int((t + 1) as i64);
    }
    v
}

/// α_l = C(k, l).
pub fn alpha(k: u32, l: u32) -> CoeffExpr {
    CoeffExpr::constant(binomial(k, l))
}

/// β_l = u(u−1)…(u−l) / ((u−k)(u−k+1)…(u−k+l)); β_{−1} = 1.
pub fn beta(k: u32, l: i64) -> CoeffExpr {
    let num = (0..=l).map(int).collect();
    let den = (0..=l).map(|t| int(k as i64 - t)).collect();
    CoeffExpr::new(Rational::one(), num, den)
}

/// Coefficient at position l (monomial x1^{n−lr} x2^{lr}) in the α·β pattern.
/// `low_first` decides which product is used on the boundary between the two
/// halves; both choices agree as rational functions.
fn pattern_coeff(k: u32, l: u32, low_first: bool) -> CoeffExpr {
    if l == 0 {
        return CoeffExpr::constant(Rational::one());
    }
    let low = if low_first { 2 * l <= k + 1 } else { 2 * l < k };
    if low {
        alpha(k, l).mul(&beta(k, l as i64 - 1))
    } else {
        alpha(k, k - l).mul(&beta(k, (k - l) as i64))
    }
}

/// Evaluates a family of CoeffExprs at u0, multiplying all of them by the
/// smallest power of (u − u0) that removes every pole.
fn clear_and_eval(exprs: &[CoeffExpr], u0: &Rational) -> (Vec<Rational>, usize) {
    let e = exprs.iter().map(|x| x.pole_order(u0)).max().unwrap_or(0);
    (exprs.iter().map(|x| x.eval_cleared(u0, e)).collect(), e)
}

fn c0_r(p: &Params) -> Rational {
    &p.c0 * int(p.r as i64)
}

/// n − d_i + d_{i−n}.
fn diag_value(p: &Params, i: i64, n: i64) -> Rational {
    int(n) - p.d_at(i) + p.d_at(i - n)
}

fn half_odd(x: &Rational) -> Option<u32> {
    let two = x * int(2);
    if two.is_integer() && two > Rational::zero() {
        let k = crate::arith::rational::to_i64(&two)?;
        if k % 2 == 1 {
            return u32::try_from(k).ok();
        }
    }
    None
}

/// Checks the hypotheses of `tag` for `label` under `p`.
pub fn is_applicable(p: &Params, label: &Label, tag: &CaseTag) -> bool {
    use Family::*;
    if !tag.family.fits(label) || !label.is_valid(p.r) {
        return false;
    }
    let r = p.r as i64;
    let (n, k) = (tag.n as i64, tag.k as i64);
    let c0r = c0_r(p);
    match (*label, tag.family) {
        (Label::Row(_), RowA) => half_odd(&p.c0) == Some(tag.k) && n == r * k,
        (Label::Col(_), ColA) => half_odd(&-p.c0.clone()) == Some(tag.k) && n == r * k,
        (Label::Row(i) | Label::Col(i), RowB | ColB) => n >= 1 && diag_value(p, i as i64, n).is_zero(),
        (Label::Row(i), RowC) => {
            k * r < n && n < (k + 1) * r && (diag_value(p, i as i64, n) - c0r).is_zero()
        }
        (Label::Col(i), ColC) => {
            k * r < n && n < (k + 1) * r && (diag_value(p, i as i64, n) + c0r).is_zero()
        }
        (Label::Pair(i, j), fam) => {
            let (i, j) = (i as i64, j as i64);
            let dij = p.d_at(i) - p.d_at(j);
            match fam {
                Pair1a => {
                    n >= 1 && k * r < n + j - i && n + j - i < (k + 1) * r && diag_value(p, i, n).is_zero()
                }
                Pair1b => {
                    n >= 1
                        && (k - 1) * r < n + i - j
                        && n + i - j < k * r
                        && diag_value(p, j, n).is_zero()
                }
                Pair2a => n >= 1 && n == i - j + (k + 1) * r && int(n) == &dij + &c0r,
                Pair2b => n >= 1 && n == j - i + k * r && int(n) == -dij + &c0r,
                Pair3a => n >= 1 && n == i - j + (k + 1) * r && int(n) == &dij - &c0r,
                Pair3b => n >= 1 && n == j - i + k * r && int(n) == -dij - &c0r,
                _ => false,
            }
        }
        _ => false,
    }
}

/// All catalogued clauses that apply to `label`, with n ≤ `max_n`.
pub fn applicable_cases(p: &Params, label: &Label, max_n: u32) -> Vec<CaseTag> {
    let r = p.r;
    let mut out = Vec::new();
    for family in Family::ALL {
        if !family.fits(label) {
            continue;
        }
        for n in 1..=max_n {
            let ks: Vec<u32> = match family {
                Family::RowA | Family::ColA => {
                    if n % r == 0 {
                        vec![n / r]
                    } else {
                        vec![]
                    }
                }
                Family::RowB | Family::ColB => vec![0],
                _ => (0..=n / r + 1).collect(),
            };
            for k in ks {
                let tag = CaseTag { family, n, k };
                if is_applicable(p, label, &tag) {
                    out.push(tag);
                }
            }
        }
    }
    out
}

/// Coefficient data of a constructed singular polynomial.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CoeffLedger {
    /// Symbolic coefficients (closed-form families), in monomial position order.
    pub symbolic: Vec<String>,
    /// Evaluated coefficients after clearing.
    #[serde(with = "serde_rational_vec")]
    pub values: Vec<Rational>,
    /// Power of the vanishing factor used to clear poles (0 when none).
    pub clearing_order: usize,
    pub rec_system: Option<RecSystem>,
}

fn elem_from(label: Label, p: &Arc<Params>, terms: Vec<(Mono, Rational)>) -> ModElem {
    ModElem::from_terms(label, p.clone(), terms)
}

/// Singular polynomial of Row(i) (`negate = false`) or Col(i)
/// (`negate = true`, which replaces c0 by −c0).
fn sing_rowcol(p: &Arc<Params>, label: Label, tag: &CaseTag) -> Result<(ModElem, CoeffLedger)> {
    if !is_applicable(p, &label, tag) {
        return Err(Error::InapplicableCase(format!("{tag} for {label}")));
    }
    let r = p.r;
    let (n, k) = (tag.n, tag.k);
    let ledger0 = |values: Vec<Rational>| CoeffLedger { symbolic: vec![], values, clearing_order: 0, rec_system: None };
    match tag.family {
        Family::RowA | Family::ColA => {
            let terms: Vec<(Mono, Rational)> = (0..=k)
                .map(|t| {
                    let sign = if t % 2 == 0 { int(1) } else { int(-1) };
                    (Mono::new(r * (k - t), r * t, 0), binomial(k, t) * sign)
                })
                .collect();
            let values = terms.iter().map(|(_, c)| c.clone()).collect();
            Ok((elem_from(label, p, terms), ledger0(values)))
        }
        Family::RowB | Family::ColB => Ok((ModElem::basis(label, p.clone(), n, n, 0), ledger0(vec![int(1)]))),
        _ => {
            let u0 = if tag.family == Family::ColC { -p.c0.clone() } else { p.c0.clone() };
            let exprs: Vec<CoeffExpr> = (0..=k).map(|l| pattern_coeff(k, l, false)).collect();
            let (values, e) = clear_and_eval(&exprs, &u0);
            let terms = (0..=k).map(|l| (Mono::new(n - l * r, l * r, 0), values[l as usize].clone())).collect();
            let ledger = CoeffLedger {
                symbolic: exprs.iter().map(|x| x.to_string()).collect(),
                values,
                clearing_order: e,
                rec_system: None,
            };
            Ok((elem_from(label, p, terms), ledger))
        }
    }
}

pub fn sing_row(p: &Arc<Params>, i: u32, tag: &CaseTag) -> Result<ModElem> {
    sing_rowcol(p, Label::Row(i), tag).map(|x| x.0)
}

pub fn sing_col(p: &Arc<Params>, i: u32, tag: &CaseTag) -> Result<ModElem> {
    sing_rowcol(p, Label::Col(i), tag).map(|x| x.0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Variant {
    A,
    B,
}

/// Solution of the recursive coefficient system of the first pair family.
/// When some s_t vanishes the coefficients are those of s_t^e · p, and
/// `clearing_order` is e (the leading coefficient `lead` is then 0 or 1).
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RecSystem {
    pub k: u32,
    #[serde(with = "serde_rational_vec")]
    pub s: Vec<Rational>,
    #[serde(with = "serde_rational_vec")]
    pub a: Vec<Rational>,
    #[serde(with = "serde_rational_vec")]
    pub b: Vec<Rational>,
    #[serde(with = "crate::arith::rational::serde_rational")]
    pub lead: Rational,
    pub clearing_order: usize,
}

/// Solves the system over any field, given s_1..s_k, c0 and r as field
/// elements. Returns (a_1..a_k, b_1..b_{k−1}).
fn solve_generic<F: FieldElem>(k: u32, s: &[F], c0: &F, r: &F) -> Result<(Vec<F>, Vec<F>)> {
    let k = k as usize;
    let one = c0.one_like();
    let num = |v: i64| {
        let mut x = one.zero_like();
        let step = if v >= 0 { one.clone() } else { one.neg_ref() };
        for _ in 0..v.unsigned_abs() {
            x = x.add_ref(&step);
        }
        x
    };
    let sv = |t: usize| &s[t - 1];
    let c0r = c0.mul_ref(r);
    let mut a: Vec<Option<F>> = vec![None; k + 1];
    let mut b: Vec<Option<F>> = vec![None; k.max(1)];
    let nonzero = |x: &F, what: &str| -> Result<()> {
        if x.is_zero_elem() {
            Err(Error::InconsistentSystem(format!("division by zero in {what}")))
        } else {
            Ok(())
        }
    };
    if k == 0 {
        return Ok((vec![], vec![]));
    }
    // a_l from the a-summation formula; needs b_{k−j} for j < l.
    let a_formula = |l: usize, b: &[Option<F>]| -> Result<F> {
        let mut acc = one.clone();
        for j in 1..l {
            let bkj = b[k - j].clone().ok_or_else(|| Error::InconsistentSystem(format!("b_{} unknown", k - j)))?;
            acc = acc.add_ref(&num(k as i64 - 2 * j as i64).div_ref(&num(j as i64)).mul_ref(&bkj));
        }
        nonzero(sv(l), "s_l")?;
        Ok(c0r.div_ref(sv(l)).mul_ref(&acc))
    };
    // b_l from the b-summation formula; needs a_1..a_l.
    let b_formula = |l: usize, a: &[Option<F>]| -> Result<F> {
        let mut acc = one.zero_like();
        for j in 0..l {
            let aj = a[j + 1].clone().ok_or_else(|| Error::InconsistentSystem(format!("a_{} unknown", j + 1)))?;
            nonzero(sv(k - j), "s_{k-j}")?;
            let w = num(k as i64 - 2 * j as i64 - 1).mul_ref(r).div_ref(sv(k - j));
            acc = acc.add_ref(&w.mul_ref(&aj));
        }
        Ok(c0.div_ref(&num(l as i64)).mul_ref(&acc))
    };
    nonzero(sv(1), "s_1")?;
    a[1] = Some(c0r.div_ref(sv(1)));
    for l in 1..=k.div_ceil(2) {
        if a[l].is_none() {
            a[l] = Some(a_formula(l, &b)?);
        }
        let mirror = k - l + 1;
        if a[mirror].is_none() {
            nonzero(sv(mirror), "s_{k-l+1}")?;
            a[mirror] = Some(sv(l).mul_ref(a[l].as_ref().unwrap()).div_ref(sv(mirror)));
        }
        if l < k && b[l].is_none() {
            b[l] = Some(b_formula(l, &a)?);
            let m = k - l;
            if b[m].is_none() {
                b[m] = Some(num(l as i64).mul_ref(b[l].as_ref().unwrap()).div_ref(&num(m as i64)));
            }
        }
    }
    let a: Vec<F> = a.into_iter().skip(1).map(|x| x.expect("all a_l assigned")).collect();
    let b: Vec<F> = b.into_iter().skip(1).take(k - 1).map(|x| x.expect("all b_l assigned")).collect();
    // Verify every relation family over the full index ranges.
    let ga = |l: usize| &a[l - 1];
    let gb = |l: usize| &b[l - 1];
    let fail = |what: String| Err(Error::InconsistentSystem(what));
    let a_opt: Vec<Option<F>> = std::iter::once(None).chain(a.iter().cloned().map(Some)).collect();
    let b_opt: Vec<Option<F>> = std::iter::once(None).chain(b.iter().cloned().map(Some)).collect();
    if !sv(1).mul_ref(ga(1)).sub_ref(&c0r).is_zero_elem() {
        return fail("s_1 a_1 = c0 r".into());
    }
    for l in 1..=k {
        if !sv(l).mul_ref(ga(l)).sub_ref(&sv(k - l + 1).mul_ref(ga(k - l + 1))).is_zero_elem() {
            return fail(format!("s_l a_l symmetry at l={l}"));
        }
        if !ga(l).sub_ref(&a_formula(l, &b_opt)?).is_zero_elem() {
            return fail(format!("a-formula at l={l}"));
        }
    }
    for l in 1..k {
        if !num(l as i64).mul_ref(gb(l)).sub_ref(&num((k - l) as i64).mul_ref(gb(k - l))).is_zero_elem() {
            return fail(format!("b symmetry at l={l}"));
        }
        if !gb(l).sub_ref(&b_formula(l, &a_opt)?).is_zero_elem() {
            return fail(format!("b-formula at l={l}"));
        }
    }
    Ok((a, b))
}

/// The s_t values (t = 1..k) for the first pair family.
pub fn rec_s_values(p: &Params, i: u32, j: u32, variant: Variant, k: u32) -> Vec<Rational> {
    let (i, j, r) = (i as i64, j as i64, p.r as i64);
    let dij = p.d_at(i) - p.d_at(j);
    (1..=k as i64)
        .map(|t| match variant {
            Variant::A => int(j - i - t * r) + &dij,
            Variant::B => int(i - j - (t - 1) * r) - &dij,
        })
        .collect()
}

pub fn solve_rec_system(p: &Params, i: u32, j: u32, variant: Variant, n: u32, k: u32) -> Result<RecSystem> {
    let family = if variant == Variant::A { Family::Pair1a } else { Family::Pair1b };
    let label = Label::pair(i, j)?;
    if i >= j || !is_applicable(p, &label, &CaseTag { family, n, k }) {
        return Err(Error::InapplicableCase(format!("{family}:n={n}:k={k} for pair:{i},{j}")));
    }
    let s = rec_s_values(p, i, j, variant, k);
    let r = int(p.r as i64);
    if s.iter().all(|x| !x.is_zero()) {
        let (a, b) = solve_generic(k, &s, &p.c0, &r)?;
        return Ok(RecSystem { k, s, a, b, lead: Rational::one(), clearing_order: 0 });
    }
    // Some s_t vanishes: treat the vanishing s_t as a formal symbol, solve
    // over rational functions in it and clear the pole at zero. If that
    // system is inconsistent, perturb every s_t together instead.
    let c0f = RatFunc::constant(p.c0.clone());
    let rf = RatFunc::constant(r);
    let only_zero: Vec<RatFunc> =
        s.iter().map(|x| if x.is_zero() { RatFunc::shifted(x.clone()) } else { RatFunc::constant(x.clone()) }).collect();
    let (a, b) = match solve_generic(k, &only_zero, &c0f, &rf) {
        Ok(sol) => sol,
        Err(_) => {
            let sf: Vec<RatFunc> = s.iter().map(|x| RatFunc::shifted(x.clone())).collect();
            solve_generic(k, &sf, &c0f, &rf)?
        }
    };
    let e = a.iter().chain(&b).map(|x| x.pole_order_at_zero()).max().unwrap_or(0);
    let lead = if e == 0 { Rational::one() } else { Rational::zero() };
    Ok(RecSystem {
        k,
        s,
        a: a.iter().map(|x| x.cleared_value_at_zero(e)).collect(),
        b: b.iter().map(|x| x.cleared_value_at_zero(e)).collect(),
        lead,
        clearing_order: e,
    })
}

fn sing_pair_full(p: &Arc<Params>, i: u32, j: u32, tag: &CaseTag) -> Result<(ModElem, CoeffLedger)> {
    let label = Label::pair(i, j)?;
    if i >= j || !is_applicable(p, &label, tag) {
        return Err(Error::InapplicableCase(format!("{tag} for {label}")));
    }
    let r = p.r;
    let (n, k) = (tag.n, tag.k);
    let (di, dj) = (i as i64, j as i64);
    let e = |a: i64, b: i64, slot: u8| Mono::new(a as u32, b as u32, slot);
    let (ni, ri) = (n as i64, r as i64);
    match tag.family {
        Family::Pair1a | Family::Pair1b => {
            let variant = if tag.family == Family::Pair1a { Variant::A } else { Variant::B };
            let rs = solve_rec_system(p, i, j, variant, n, k)?;
            let mut terms = Vec::new();
            for l in 0..k as i64 {
                let c = if l == 0 { rs.lead.clone() } else { rs.b[l as usize - 1].clone() };
                let mono = match variant {
                    Variant::A => e(ni - l * ri, l * ri, 0),
                    Variant::B => e(l * ri, ni - l * ri, 0),
                };
                terms.push((mono, c));
            }
            if k == 0 {
                let mono = match variant {
                    Variant::A => e(ni, 0, 0),
                    Variant::B => e(0, ni, 0),
                };
                terms.push((mono, rs.lead.clone()));
            }
            for l in 1..=k as i64 {
                let mono = match variant {
                    Variant::A => e(ni - l * ri + dj - di, l * ri - dj + di, 1),
                    Variant::B => e((l - 1) * ri + dj - di, ni - (l - 1) * ri - dj + di, 1),
                };
                terms.push((mono, rs.a[l as usize - 1].clone()));
            }
            let mut values = vec![rs.lead.clone()];
            values.extend(rs.b.iter().cloned());
            values.extend(rs.a.iter().cloned());
            let ledger = CoeffLedger { symbolic: vec![], values, clearing_order: rs.clearing_order, rec_system: Some(rs) };
            Ok((elem_from(label, p, terms), ledger))
        }
        fam => {
            // Families 2 and 3: (x1^n ⊗ v_A ∓ x2^n ⊗ v_B) + Σ a_l (…), with
            // (A, B) = (T1, T2) for the a-variants and (T2, T1) for b-variants.
            let (first, second) = match fam {
                Family::Pair2a | Family::Pair3a => (0u8, 1u8),
                _ => (1u8, 0u8),
            };
            let (sign, u0) = match fam {
                Family::Pair2a | Family::Pair2b => (int(-1), p.c0.clone()),
                _ => (int(1), -p.c0.clone()),
            };
            let exprs: Vec<CoeffExpr> = (0..=k).map(|l| pattern_coeff(k, l, true)).collect();
            let (values, ord) = clear_and_eval(&exprs, &u0);
            let mut terms = Vec::new();
            for l in 0..=k {
                let c = &values[l as usize];
                terms.push((Mono::new(n - r * l, r * l, first), c.clone()));
                terms.push((Mono::new(r * l, n - r * l, second), c * &sign));
            }
            let ledger = CoeffLedger {
                symbolic: exprs.iter().map(|x| x.to_string()).collect(),
                values,
                clearing_order: ord,
                rec_system: None,
            };
            Ok((elem_from(label, p, terms), ledger))
        }
    }
}

pub fn sing_pair(p: &Arc<Params>, i: u32, j: u32, tag: &CaseTag) -> Result<ModElem> {
    sing_pair_full(p, i, j, tag).map(|x| x.0)
}

/// Constructs the catalogued singular polynomial for any label, together
/// with its coefficient ledger.
pub fn construct(p: &Arc<Params>, label: &Label, tag: &CaseTag) -> Result<(ModElem, CoeffLedger)> {
    match *label {
        Label::Row(_) | Label::Col(_) => sing_rowcol(p, *label, tag),
        Label::Pair(i, j) => sing_pair_full(p, i, j, tag),
    }
}

/// Label of the irreducible W-representation generated by a weight vector
/// that is an eigenvector of the transposition; `None` otherwise.
pub fn w_type(e: &ModElem) -> Option<Label> {
    let r = e.r();
    let mut weights = e.terms.keys().map(|k| k.weight(&e.label, r));
    let w = weights.next()?;
    if weights.any(|x| x != w) {
        return None;
    }
    if w.0 != w.1 {
        return Label::pair(w.0, w.1).ok();
    }
    let s = e.w_act_rational(&GroupElement::transposition(r)).ok()?;
    if s == *e {
        Some(Label::Row(w.0))
    } else if s == e.scale(&-Rational::one()) {
        Some(Label::Col(w.0))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::frac;

    fn sec6() -> Arc<Params> {
        Params::from_ints(3, int(1), &[5, 0, -5]).unwrap().shared()
    }

    #[test]
    fn example_recursive_system() {
        let p = Params::from_ints(4, int(-3), &[13, -13, 0, 0]).unwrap();
        let rs = solve_rec_system(&p, 0, 1, Variant::A, 13, 3).unwrap();
        assert_eq!(rs.s, vec![int(23), int(19), int(15)]);
        assert_eq!(rs.a, vec![frac(-12, 23), frac(-1956, 2185), frac(-4, 5)]);
        assert_eq!(rs.b, vec![frac(96, 115), frac(48, 115)]);
    }

    #[test]
    fn row_c_at_sec6() {
        let p = sec6();
        let tags = applicable_cases(&p, &Label::Row(0), 25);
        let tag = CaseTag { family: Family::RowC, n: 8, k: 2 };
        assert!(tags.contains(&tag));
        assert!(tags.contains(&CaseTag { family: Family::RowB, n: 10, k: 0 }));
        let e = sing_row(&p, 0, &tag).unwrap();
        assert_eq!(e.to_string(), "x1^8 (x) vT - 2*x1^5*x2^3 (x) vT - x1^2*x2^6 (x) vT");
        assert!(e.is_singular());
    }

    #[test]
    fn pair_1a_at_sec6() {
        let p = sec6();
        let tag = CaseTag { family: Family::Pair1a, n: 5, k: 2 };
        let e = sing_pair(&p, 0, 2, &tag).unwrap();
        assert_eq!(
            e.to_string(),
            "x1^5 (x) vT1 + (1/3)*x1^4*x2 (x) vT2 + (1/6)*x1^2*x2^3 (x) vT1 + (1/2)*x1*x2^4 (x) vT2"
        );
        assert!(e.is_singular());
        assert_eq!(w_type(&e), Some(Label::Pair(1, 2)));
    }

    #[test]
    fn coeff_expr_cancels() {
        let b = beta(2, 1);
        assert_eq!(b, CoeffExpr::new(int(1), vec![int(0)], vec![int(2)]));
        assert_eq!(b.eval(&int(1)), Some(int(-1)));
        assert_eq!(b.pole_order(&int(2)), 1);
        assert_eq!(b.eval_cleared(&int(2), 1), int(2));
    }
}
