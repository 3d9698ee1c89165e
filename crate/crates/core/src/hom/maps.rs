//! Explicit homomorphisms between standard modules.

use std::sync::Arc;

use serde::Serialize;

use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::hom::conditions::{rule_steps, RuleFiring, Step};
use crate::labels::{GroupElement, Label, Params};
use crate::module::{ElemJson, ModElem};
use crate::singular::{applicable_cases, construct, w_type, CaseTag, Family};

/// A module map Δ(domain) → Δ(codomain), determined by the image of
/// 1 ⊗ v_T (Row/Col domain) or 1 ⊗ v_T1 (Pair domain).
#[derive(Clone, Debug, PartialEq)]
pub struct HomMap {
    pub domain: Label,
    pub codomain: Label,
    pub gen_image: ModElem,
}

#[derive(Clone, Debug, Serialize)]
pub struct HomMapJson {
    pub domain: Label,
    pub codomain: Label,
    pub gen_image: ElemJson,
    pub text: String,
}

impl HomMap {
    /// Image of 1 ⊗ v_slot.
    pub fn image_of_generator(&self, slot: u8) -> ModElem {
        if slot == 0 {
            self.gen_image.clone()
        } else {
            let s = GroupElement::transposition(self.gen_image.r());
            self.gen_image.w_act_rational(&s).expect("transposition acts rationally")
        }
    }

    pub fn degree(&self) -> Option<u32> {
        self.gen_image.degrees().first().copied()
    }

    pub fn identity(label: Label, p: Arc<Params>) -> Self {
        HomMap { domain: label, codomain: label, gen_image: ModElem::basis(label, p, 0, 0, 0) }
    }

    pub fn to_json(&self) -> HomMapJson {
        HomMapJson {
            domain: self.domain,
            codomain: self.codomain,
            gen_image: self.gen_image.to_json(),
            text: self.gen_image.to_string(),
        }
    }
}

/// Linear extension of the generator images (a module map commutes with x).
pub fn apply_hom(h: &HomMap, e: &ModElem) -> Result<ModElem> {
    if e.label != h.domain {
        return Err(Error::LabelMismatch(format!("{} is not the domain {}", e.label, h.domain)));
    }
    let images: Vec<ModElem> = (0..h.domain.dim() as u8).map(|s| h.image_of_generator(s)).collect();
    let mut out = ModElem::zero(h.codomain, h.gen_image.params.clone());
    for (k, c) in &e.terms {
        let mut img = images[k.slot as usize].clone();
        for _ in 0..k.n {
            img = img.x_mul(1);
        }
        for _ in 0..k.m {
            img = img.x_mul(2);
        }
        out = out.add(&img.scale(c))?;
    }
    Ok(out)
}

/// Composition `second ∘ first`.
pub fn compose(first: &HomMap, second: &HomMap) -> Result<HomMap> {
    if first.codomain != second.domain {
        return Err(Error::LabelMismatch(format!("{} then {}", first.codomain, second.domain)));
    }
    let gen_image = apply_hom(second, &first.gen_image)?;
    if gen_image.is_zero() {
        return Err(Error::ZeroComposite);
    }
    Ok(HomMap { domain: first.domain, codomain: second.codomain, gen_image })
}

/// Catalogued family and degree used by a primitive step.
fn step_case(step: &Step, p: &Params) -> Option<(Family, u32)> {
    use crate::hom::conditions::rule_atoms;
    let val = rule_atoms(step.rule, &step.vars)[0].value(p)?;
    let j = match step.to {
        Label::Pair(_, j) => j,
        _ => 0,
    };
    let v = &step.vars;
    Some(match step.rule {
        1 => (Family::RowB, val),
        2 => (Family::ColA, p.r * val),
        3 => (if v.a == j { Family::Pair3a } else { Family::Pair3b }, val),
        4 => (Family::RowA, p.r * val),
        5 => (Family::ColB, val),
        6 => (if v.a == j { Family::Pair2a } else { Family::Pair2b }, val),
        7 => (Family::RowC, val),
        8 => (Family::ColC, val),
        9 => (if v.c < v.a { Family::Pair1a } else { Family::Pair1b }, val),
        _ => return None,
    })
}

/// The catalogued singular polynomial realising a primitive step.
pub fn step_tag(step: &Step, p: &Params) -> Option<CaseTag> {
    let (family, n) = step_case(step, p)?;
    applicable_cases(p, &step.to, n).into_iter().find(|t| t.family == family && t.n == n)
}

/// Builds the map of one primitive step.
pub fn build_step(step: &Step, p: &Arc<Params>) -> Result<HomMap> {
    let tag = step_tag(step, p).ok_or_else(|| Error::InapplicableCase(format!("rule {} {} -> {}", step.rule, step.from, step.to)))?;
    let (poly, _) = construct(p, &step.to, &tag)?;
    if poly.is_zero() {
        return Err(Error::ZeroComposite);
    }
    let ty = w_type(&poly);
    if ty != Some(step.from) {
        return Err(Error::LabelMismatch(format!(
            "{tag} in {} generates {:?}, expected {}",
            step.to, ty, step.from
        )));
    }
    // For a Pair domain the constructed vector is the image of whichever
    // generator has the same torus weight.
    let gen_image = match step.from {
        Label::Pair(..) => {
            let w = poly.terms.keys().next().unwrap().weight(&step.to, p.r);
            let (e1, e2) = step.from.slot_weights(0);
            if (w.0 as i64, w.1 as i64) == (e1, e2) {
                poly
            } else {
                poly.w_act_rational(&GroupElement::transposition(p.r))?
            }
        }
        _ => poly,
    };
    Ok(HomMap { domain: step.from, codomain: step.to, gen_image })
}

/// Builds the map predicted by a fired rule, composing primitive steps.
pub fn build_hom(from: &Label, to: &Label, p: &Arc<Params>, firing: &RuleFiring) -> Result<HomMap> {
    if !firing.fired {
        return Err(Error::InapplicableCase(format!("rule {} does not fire", firing.rule)));
    }
    let steps = rule_steps(firing.rule, &firing.vars, from, to)
        .ok_or_else(|| Error::InapplicableCase(format!("rule {} has no valid intermediate label", firing.rule)))?;
    let mut h = HomMap::identity(*from, p.clone());
    for step in &steps {
        let next = build_step(step, p)?;
        h = compose(&h, &next)?;
    }
    Ok(h)
}

/// Scalar c with a = c·b, if any.
pub fn proportional(a: &ModElem, b: &ModElem) -> Option<Rational> {
    let (k, cb) = b.terms.iter().next()?;
    let c = a.coeff(k) / cb;
    (b.scale(&c) == *a).then_some(c)
}
