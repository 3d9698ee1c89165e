//! Parameters, irreducible representations of G(r,1,2) and the group itself.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::rational::{fmt_rational, int, serde_rational, serde_rational_vec};
use crate::arith::{CycloField, CycloNum, FieldElem, Rational};
use crate::error::{Error, Result};

/// Parameters (r, c0, d_0..d_{r-1}) with Σ d_i = 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Params {
    pub r: u32,
    #[serde(with = "serde_rational")]
    pub c0: Rational,
    #[serde(with = "serde_rational_vec")]
    pub d: Vec<Rational>,
}

impl Params {
    pub fn new(r: u32, c0: Rational, d: Vec<Rational>) -> Result<Self> {
        if r == 0 || d.len() != r as usize {
            return Err(Error::BadArity { expected: r as usize, got: d.len() });
        }
        let s: Rational = d.iter().sum();
        if !s.is_zero() {
            return Err(Error::SumNonZero(fmt_rational(&s)));
        }
        Ok(Params { r, c0, d })
    }

    /// Integer convenience constructor.
    pub fn from_ints(r: u32, c0: Rational, d: &[i64]) -> Result<Self> {
        Self::new(r, c0, d.iter().map(|&x| int(x)).collect())
    }

    /// d_k with the index read modulo r.
    pub fn d_at(&self, k: i64) -> &Rational {
        &self.d[k.rem_euclid(self.r as i64) as usize]
    }

    pub fn shared(self) -> Arc<Params> {
        Arc::new(self)
    }
}

#[derive(Deserialize)]
struct RawParams {
    r: u32,
    #[serde(with = "serde_rational")]
    c0: Rational,
    #[serde(with = "serde_rational_vec")]
    d: Vec<Rational>,
}

impl<'de> Deserialize<'de> for Params {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let raw = RawParams::deserialize(de)?;
        Params::new(raw.r, raw.c0, raw.d).map_err(serde::de::Error::custom)
    }
}

/// Irreducible representation of G(r,1,2), indexed by an r-multipartition of 2.
///
/// `Row(i)`: partition (2) in component i. `Col(i)`: partition (1,1) in
/// component i. `Pair(i, j)` with i < j: (1) in components i and j.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Row(u32),
    Col(u32),
    Pair(u32, u32),
}

/// A cell of a Young diagram inside component `component`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Box {
    pub component: u32,
    pub row: u32,
    pub col: u32,
}

impl Box {
    pub fn content(&self) -> i64 {
        self.col as i64 - self.row as i64
    }
}

impl Label {
    /// Pair label with canonical ordering; errors when i == j.
    pub fn pair(i: u32, j: u32) -> Result<Label> {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => Ok(Label::Pair(i, j)),
            std::cmp::Ordering::Greater => Ok(Label::Pair(j, i)),
            std::cmp::Ordering::Equal => Err(Error::BadLabel(format!("pair:{i},{j} needs distinct components"))),
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            Label::Pair(..) => 2,
            _ => 1,
        }
    }

    pub fn is_valid(&self, r: u32) -> bool {
        match *self {
            Label::Row(i) | Label::Col(i) => i < r,
            Label::Pair(i, j) => i < j && j < r,
        }
    }

    /// Torus weights (e1, e2) of the basis vector in `slot`: ζ_1 and ζ_2
    /// act on it by ζ^{e1} and ζ^{e2}.
    pub fn slot_weights(&self, slot: u8) -> (i64, i64) {
        match *self {
            Label::Row(i) | Label::Col(i) => (i as i64, i as i64),
            Label::Pair(i, j) if slot == 0 => (i as i64, j as i64),
            Label::Pair(i, j) => (j as i64, i as i64),
        }
    }

    /// The transposition s_12 sends v_slot to sign * v_{slot'}.
    pub fn swap_slot(&self, slot: u8) -> (u8, i8) {
        match self {
            Label::Row(_) => (slot, 1),
            Label::Col(_) => (slot, -1),
            Label::Pair(..) => (1 - slot, 1),
        }
    }

    pub fn slot_name(&self, slot: u8) -> &'static str {
        match (self, slot) {
            (Label::Pair(..), 0) => "T1",
            (Label::Pair(..), _) => "T2",
            _ => "T",
        }
    }

    pub fn parse_slot(&self, s: &str) -> Result<u8> {
        match (self, s.trim()) {
            (Label::Pair(..), "T1") => Ok(0),
            (Label::Pair(..), "T2") => Ok(1),
            (Label::Row(_) | Label::Col(_), "T") => Ok(0),
            (_, other) => Err(Error::Parse(format!("slot {other:?} does not fit {self}"))),
        }
    }

    /// Standard tableau of the basis vector `slot`: the boxes holding 1 and 2.
    pub fn tableau(&self, slot: u8) -> [Box; 2] {
        let b = |component, row, col| Box { component, row, col };
        match *self {
            Label::Row(i) => [b(i, 0, 0), b(i, 0, 1)],
            Label::Col(i) => [b(i, 0, 0), b(i, 1, 0)],
            Label::Pair(i, j) if slot == 0 => [b(i, 0, 0), b(j, 0, 0)],
            Label::Pair(i, j) => [b(j, 0, 0), b(i, 0, 0)],
        }
    }

    /// Action of g on the basis vector `slot`: g v_slot = sign ζ^exp v_{slot'}.
    pub fn act_on_basis(&self, g: &GroupElement, slot: u8) -> (u8, i8, i64) {
        let (s, sign) = if g.swap { self.swap_slot(slot) } else { (slot, 1) };
        let (e1, e2) = self.slot_weights(s);
        (s, sign, g.a as i64 * e1 + g.b as i64 * e2)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Row(i) => write!(f, "row:{i}"),
            Label::Col(i) => write!(f, "col:{i}"),
            Label::Pair(i, j) => write!(f, "pair:{i},{j}"),
        }
    }
}

impl FromStr for Label {
    type Err = Error;

    fn from_str(s: &str) -> Result<Label> {
        let bad = || Error::BadLabel(s.to_string());
        let (kind, rest) = s.trim().split_once(':').ok_or_else(bad)?;
        let num = |t: &str| t.trim().parse::<u32>().map_err(|_| bad());
        match kind.trim() {
            "row" => Ok(Label::Row(num(rest)?)),
            "col" => Ok(Label::Col(num(rest)?)),
            "pair" => {
                let (i, j) = rest.split_once(',').ok_or_else(bad)?;
                Label::pair(num(i)?, num(j)?)
            }
            _ => Err(bad()),
        }
    }
}

impl Serialize for Label {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Label {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// All irreducible labels for a given r: rows, then columns, then pairs.
pub fn enumerate_labels(r: u32) -> Vec<Label> {
    let mut out: Vec<Label> = (0..r).map(Label::Row).collect();
    out.extend((0..r).map(Label::Col));
    for i in 0..r {
        for j in i + 1..r {
            out.push(Label::Pair(i, j));
        }
    }
    out
}

/// Charged content ct(b) r c0 + d_{β(b)} of a box.
pub fn charged_content(b: &Box, p: &Params) -> Rational {
    int(b.content()) * int(p.r as i64) * &p.c0 + p.d_at(b.component as i64)
}

/// Element diag(ζ^a, ζ^b) · s_12^swap of G(r,1,2).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupElement {
    pub r: u32,
    pub a: u32,
    pub b: u32,
    pub swap: bool,
}

impl GroupElement {
    pub fn new(r: u32, a: i64, b: i64, swap: bool) -> Self {
        let m = r as i64;
        GroupElement { r, a: a.rem_euclid(m) as u32, b: b.rem_euclid(m) as u32, swap }
    }

    pub fn identity(r: u32) -> Self {
        Self::new(r, 0, 0, false)
    }

    /// The transposition s_12.
    pub fn transposition(r: u32) -> Self {
        Self::new(r, 0, 0, true)
    }

    /// ζ_i^l for i in {1, 2}.
    pub fn zeta(r: u32, i: u8, l: i64) -> Self {
        if i == 1 {
            Self::new(r, l, 0, false)
        } else {
            Self::new(r, 0, l, false)
        }
    }

    /// ζ_i^l s_12 ζ_i^{-l}; the reflection whose hyperplane is
    /// x_i = ζ^l x_j (in the dual coordinates used for polynomials).
    pub fn reflection(r: u32, i: u8, l: i64) -> Self {
        let z = Self::zeta(r, i, l);
        z.compose(&Self::transposition(r)).compose(&z.inverse())
    }

    pub fn compose(&self, o: &Self) -> Self {
        assert_eq!(self.r, o.r, "group elements for different r");
        let (a2, b2) = if self.swap { (o.b, o.a) } else { (o.a, o.b) };
        Self::new(self.r, self.a as i64 + a2 as i64, self.b as i64 + b2 as i64, self.swap ^ o.swap)
    }

    pub fn inverse(&self) -> Self {
        let (a, b) = (-(self.a as i64), -(self.b as i64));
        if self.swap {
            Self::new(self.r, b, a, true)
        } else {
            Self::new(self.r, a, b, false)
        }
    }

    pub fn all(r: u32) -> Vec<Self> {
        let mut out = Vec::with_capacity(2 * (r * r) as usize);
        for swap in [false, true] {
            for a in 0..r {
                for b in 0..r {
                    out.push(Self::new(r, a as i64, b as i64, swap));
                }
            }
        }
        out
    }

    /// g · x1^n x2^m = ζ^exp x1^{n'} x2^{m'} for the contragredient action.
    pub fn act_on_monomial(&self, n: u32, m: u32) -> (u32, u32, i64) {
        let (n2, m2) = if self.swap { (m, n) } else { (n, m) };
        (n2, m2, -(self.a as i64 * n2 as i64 + self.b as i64 * m2 as i64))
    }
}

/// Action of g on a vector of the irreducible representation `label`,
/// given in the standard basis.
pub fn w_act_on_rep(label: &Label, g: &GroupElement, v: &[CycloNum]) -> Result<Vec<CycloNum>> {
    if v.len() != label.dim() {
        return Err(Error::DimensionMismatch { expected: label.dim(), got: v.len() });
    }
    let field = v[0].field().clone();
    let mut out = vec![CycloNum::zero(&field); v.len()];
    for (slot, c) in v.iter().enumerate() {
        let (s, sign, e) = label.act_on_basis(g, slot as u8);
        let z = CycloNum::scaled_zeta(&field, &int(sign as i64), e);
        out[s as usize] = out[s as usize].add_ref(&z.mul_ref(c));
    }
    Ok(out)
}

/// Character value χ_label(g) in Q(ζ_r).
pub fn character(label: &Label, g: &GroupElement, field: &Arc<CycloField>) -> CycloNum {
    let mut acc = CycloNum::zero(field);
    for slot in 0..label.dim() as u8 {
        let (s, sign, e) = label.act_on_basis(g, slot);
        if s == slot {
            acc = acc.add_ref(&CycloNum::scaled_zeta(field, &int(sign as i64), e));
        }
    }
    acc
}

/// Inner product (1/|W|) Σ χ(g) conj(ψ(g)).
pub fn character_inner(a: &Label, b: &Label, r: u32) -> Result<Rational> {
    let field = CycloField::new(r);
    let mut acc = CycloNum::zero(&field);
    let group = GroupElement::all(r);
    for g in &group {
        acc = acc.add_ref(&character(a, g, &field).mul_ref(&character(b, g, &field).conj()));
    }
    Ok(acc.to_rational()? / int(group.len() as i64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::frac;

    #[test]
    fn params_validation() {
        assert!(Params::from_ints(3, int(1), &[5, 0, -5]).is_ok());
        assert!(matches!(Params::from_ints(3, int(1), &[1, 0, 0]), Err(Error::SumNonZero(_))));
        assert!(matches!(Params::from_ints(3, int(1), &[1, -1]), Err(Error::BadArity { .. })));
        let json = r#"{"r":3,"c0":"1/2","d":["5",0,"-5"]}"#;
        let p: Params = serde_json::from_str(json).unwrap();
        assert_eq!(p.c0, frac(1, 2));
        let back: Params = serde_json::from_str(&serde_json::to_string(&p).unwrap()).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn labels_count_and_parse() {
        assert_eq!(enumerate_labels(3).len(), 9);
        assert_eq!(enumerate_labels(4).len(), 14);
        for l in enumerate_labels(4) {
            assert_eq!(l.to_string().parse::<Label>().unwrap(), l);
        }
        assert_eq!("pair:2,0".parse::<Label>().unwrap(), Label::Pair(0, 2));
        assert!("pair:1,1".parse::<Label>().is_err());
    }

    #[test]
    fn charged_contents() {
        let p = Params::from_ints(3, int(1), &[5, 0, -5]).unwrap();
        let t = Label::Row(0).tableau(0);
        assert_eq!(charged_content(&t[0], &p), int(5));
        assert_eq!(charged_content(&t[1], &p), int(8));
        let t = Label::Col(2).tableau(0);
        assert_eq!(charged_content(&t[1], &p), int(-8));
    }

    #[test]
    fn reflections_have_expected_form() {
        let r = 5;
        for l in 0..r as i64 {
            assert_eq!(GroupElement::reflection(r, 1, l), GroupElement::new(r, l, -l, true));
            assert_eq!(GroupElement::reflection(r, 2, l), GroupElement::new(r, -l, l, true));
        }
    }
}
