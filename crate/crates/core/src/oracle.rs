//! Direct evaluation of the Dunkl operators from their defining formula,
//! with genuine divided differences over Q(ζ). Independent of the closed
//! formulas in [`crate::module`]; used to cross-check them.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::arith::rational::int;
use crate::arith::{CycloField, CycloNum, FieldElem, Rational};
use crate::error::{Error, Result};
use crate::labels::{w_act_on_rep, GroupElement};
use crate::module::{CycloModElem, ModElem, Mono};

/// Bivariate polynomial over Q(ζ), keyed by exponents (n, m).
#[derive(Clone, Debug, PartialEq)]
pub struct BiPoly {
    pub field: Arc<CycloField>,
    pub terms: BTreeMap<(u32, u32), CycloNum>,
}

impl BiPoly {
    pub fn zero(field: &Arc<CycloField>) -> Self {
        BiPoly { field: field.clone(), terms: BTreeMap::new() }
    }

    pub fn monomial(field: &Arc<CycloField>, n: u32, m: u32, c: CycloNum) -> Self {
        let mut p = Self::zero(field);
        p.add_term(n, m, c);
        p
    }

    pub fn add_term(&mut self, n: u32, m: u32, c: CycloNum) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&(n, m)) {
            Some(v) => {
                *v = v.add_ref(&c);
                if v.is_zero() {
                    self.terms.remove(&(n, m));
                }
            }
            None => {
                self.terms.insert((n, m), c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for ((n, m), c) in &o.terms {
            out.add_term(*n, *m, c.neg());
        }
        out
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero(&self.field);
        for ((n1, m1), a) in &self.terms {
            for ((n2, m2), b) in &o.terms {
                out.add_term(n1 + n2, m1 + m2, a.mul_ref(b));
            }
        }
        out
    }

    /// Contragredient action of a group element.
    pub fn act(&self, g: &GroupElement) -> Self {
        let mut out = Self::zero(&self.field);
        for ((n, m), c) in &self.terms {
            let (n2, m2, e) = g.act_on_monomial(*n, *m);
            out.add_term(n2, m2, CycloNum::zeta_pow(&self.field, e).mul_ref(c));
        }
        out
    }

    /// Exact division by the linear form `alpha*x1 + beta*x2` (alpha != 0).
    pub fn div_linear(&self, alpha: &CycloNum, beta: &CycloNum) -> Result<Self> {
        let mut by_degree: BTreeMap<u32, BTreeMap<u32, CycloNum>> = BTreeMap::new();
        for ((n, m), c) in &self.terms {
            by_degree.entry(n + m).or_default().insert(*n, c.clone());
        }
        let mut out = Self::zero(&self.field);
        let zero = CycloNum::zero(&self.field);
        for (deg, g) in by_degree {
            if deg == 0 {
                return Err(Error::NonZeroRemainder);
            }
            let ga = |a: u32| g.get(&a).cloned().unwrap_or_else(|| zero.clone());
            // q has degree deg-1; q_a is the coefficient of x1^a x2^{deg-1-a}.
            let mut q = vec![zero.clone(); deg as usize];
            q[deg as usize - 1] = ga(deg).try_div(alpha)?;
            for a in (1..deg).rev() {
                let v = ga(a).sub_ref(&beta.mul_ref(&q[a as usize]));
                q[a as usize - 1] = v.try_div(alpha)?;
            }
            if ga(0) != beta.mul_ref(&q[0]) {
                return Err(Error::NonZeroRemainder);
            }
            for (a, c) in q.into_iter().enumerate() {
                out.add_term(a as u32, deg - 1 - a as u32, c);
            }
        }
        Ok(out)
    }
}

/// (f - s f) / α_s for the reflection s = ζ_axis^l s_12 ζ_axis^{-l}, where
/// α_s = x1 - ζ^l x2 (axis 1) or x2 - ζ^l x1 (axis 2).
pub fn divided_diff(f: &BiPoly, l: i64, axis: u8) -> Result<BiPoly> {
    let field = &f.field;
    let s = GroupElement::reflection(field.r(), axis, l);
    let num = f.sub(&f.act(&s));
    let one = CycloNum::from_rational(field, int(1));
    let z = CycloNum::zeta_pow(field, l).neg();
    if axis == 1 {
        num.div_linear(&one, &z)
    } else {
        num.div_linear(&z, &one)
    }
}

fn basis_vector(field: &Arc<CycloField>, dim: usize, slot: u8) -> Vec<CycloNum> {
    let mut v = vec![CycloNum::zero(field); dim];
    v[slot as usize] = CycloNum::from_rational(field, int(1));
    v
}

/// Dunkl operator y_axis evaluated from its definition:
///
/// y_i = ∂_i - Σ_j (d_j / r) Σ_l ζ^{-lj} (1 - ζ_i^{-l}·) ζ_i^l / x_i ⊗ ... - c0 Σ_{l, k≠i} (1 - s) / α_s ⊗ s,
///
/// realised on x1^n x2^m ⊗ v through the eigenvalue of ζ_i^{-l} on the
/// monomial and a true divided difference for each reflection s_12-type
/// term.
pub fn y_act_oracle_cyclo(e: &ModElem, axis: u8, field: &Arc<CycloField>) -> Result<CycloModElem> {
    let p = &e.params;
    let r = p.r as i64;
    let dim = e.label.dim();
    let mut out = CycloModElem::zero(e.label, field);
    for (k, coeff) in &e.terms {
        let c = CycloNum::from_rational(field, coeff.clone());
        let v = basis_vector(field, dim, k.slot);
        let a = if axis == 1 { k.n } else { k.m } as i64;
        if a >= 1 {
            // a·v - Σ_l [Σ_j (d_j/r) ζ^{-lj}] (1 - ζ^{-la}) ζ_i^l v
            let mut vec_acc: Vec<CycloNum> = v.iter().map(|x| x.scale(&int(a))).collect();
            for l in 0..r {
                let mut s = CycloNum::zero(field);
                for j in 0..r {
                    let dj = p.d_at(j) / int(r);
                    s = s.add_ref(&CycloNum::scaled_zeta(field, &dj, -l * j));
                }
                let one = CycloNum::from_rational(field, int(1));
                s = s.mul_ref(&one.sub_ref(&CycloNum::zeta_pow(field, -l * a)));
                let gv = w_act_on_rep(&e.label, &GroupElement::zeta(p.r, axis, l), &v)?;
                for (acc, x) in vec_acc.iter_mut().zip(gv) {
                    *acc = acc.sub_ref(&s.mul_ref(&x));
                }
            }
            let (n2, m2) = if axis == 1 { (k.n - 1, k.m) } else { (k.n, k.m - 1) };
            for (slot, x) in vec_acc.into_iter().enumerate() {
                out.add_term(Mono::new(n2, m2, slot as u8), x.mul_ref(&c));
            }
        }
        let f = BiPoly::monomial(field, k.n, k.m, c.clone());
        let c0 = CycloNum::from_rational(field, p.c0.clone());
        for l in 0..r {
            let q = divided_diff(&f, l, axis)?;
            if q.is_zero() {
                continue;
            }
            let s = GroupElement::reflection(p.r, axis, l);
            let sv = w_act_on_rep(&e.label, &s, &v)?;
            for ((n2, m2), qc) in &q.terms {
                for (slot, x) in sv.iter().enumerate() {
                    out.add_term(Mono::new(*n2, *m2, slot as u8), qc.mul_ref(x).mul_ref(&c0).neg());
                }
            }
        }
    }
    Ok(out)
}

/// Oracle Dunkl operator collapsed back to rational coefficients.
pub fn y_act_oracle(e: &ModElem, axis: u8) -> Result<ModElem> {
    let field = CycloField::new(e.params.r);
    y_act_oracle_cyclo(e, axis, &field)?.to_rational(e.params.clone())
}

/// Element of the group algebra Q(ζ)[W].
#[derive(Clone, Debug)]
pub struct GroupAlgebraElem {
    pub terms: Vec<(GroupElement, CycloNum)>,
}

impl GroupAlgebraElem {
    pub fn act(&self, e: &ModElem, field: &Arc<CycloField>) -> CycloModElem {
        let mut out = CycloModElem::zero(e.label, field);
        for (g, c) in &self.terms {
            out = out.add(&e.w_act(g, field).scale(c));
        }
        out
    }
}

/// Right-hand side of [y_i, x_j] as a group algebra element (κ = 1).
pub fn commutator_rhs(p: &crate::labels::Params, i: u8, j: u8, field: &Arc<CycloField>) -> GroupAlgebraElem {
    let r = p.r;
    let rr = r as i64;
    let mut terms = Vec::new();
    if i != j {
        for l in 0..rr {
            let s = GroupElement::reflection(r, i, l);
            terms.push((s, CycloNum::scaled_zeta(field, &p.c0, -l)));
        }
    } else {
        terms.push((GroupElement::identity(r), CycloNum::from_rational(field, int(1))));
        // -Σ_l (d_l - d_{l-1}) e_{il}, e_{il} = (1/r) Σ_t ζ^{-tl} ζ_i^t
        for l in 0..rr {
            let w: Rational = (p.d_at(l) - p.d_at(l - 1)) / int(rr);
            for t in 0..rr {
                terms.push((GroupElement::zeta(r, i, t), CycloNum::scaled_zeta(field, &-w.clone(), -t * l)));
            }
        }
        for l in 0..rr {
            let s = GroupElement::reflection(r, i, l);
            terms.push((s, CycloNum::from_rational(field, -p.c0.clone())));
        }
    }
    GroupAlgebraElem { terms }
}

/// Checks [y_i, x_j] e = (relation RHS) e for a given implementation of y.
pub fn relation_holds_with<F>(e: &ModElem, i: u8, j: u8, y: F) -> Result<bool>
where
    F: Fn(&ModElem, u8) -> Result<ModElem>,
{
    let field = CycloField::new(e.params.r);
    let lhs = y(&e.x_mul(j), i)?.sub(&y(e, i)?.x_mul(j))?;
    let rhs = commutator_rhs(&e.params, i, j, &field).act(e, &field);
    let rhs = rhs.to_rational(e.params.clone())?;
    Ok(lhs == rhs)
}

/// Commutation relation check for the closed-form Dunkl operators.
pub fn relation_check(e: &ModElem, i: u8, j: u8) -> Result<bool> {
    relation_holds_with(e, i, j, |v, a| Ok(v.y_act(a)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::frac;
    use crate::labels::{enumerate_labels, Params};

    #[test]
    fn divided_difference_round_trip() {
        let field = CycloField::new(4);
        let f = BiPoly::monomial(&field, 5, 2, CycloNum::from_rational(&field, int(3)));
        for axis in [1u8, 2] {
            for l in 0..4 {
                let q = divided_diff(&f, l, axis).unwrap();
                let s = GroupElement::reflection(4, axis, l);
                let one = CycloNum::from_rational(&field, int(1));
                let z = CycloNum::zeta_pow(&field, l).neg();
                let (a, b) = if axis == 1 { (one, z) } else { (z, one) };
                let mut lin = BiPoly::monomial(&field, 1, 0, a);
                lin.add_term(0, 1, b);
                assert_eq!(lin.mul(&q), f.sub(&f.act(&s)));
            }
        }
    }

    #[test]
    fn oracle_matches_closed_form_small() {
        let p = Params::new(3, frac(2, 3), vec![frac(1, 2), int(-2), frac(3, 2)]).unwrap().shared();
        for label in enumerate_labels(3) {
            for slot in 0..label.dim() as u8 {
                for n in 0..5 {
                    for m in 0..5 {
                        let e = ModElem::basis(label, p.clone(), n, m, slot);
                        for axis in [1, 2] {
                            assert_eq!(y_act_oracle(&e, axis).unwrap(), e.y_act(axis), "{label} {n} {m} {slot} y{axis}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn commutation_relations_hold() {
        let p = Params::new(4, frac(-3, 2), vec![int(2), frac(1, 3), int(-1), frac(-4, 3)]).unwrap().shared();
        for label in enumerate_labels(4) {
            let e = ModElem::basis(label, p.clone(), 3, 1, 0);
            for i in [1, 2] {
                for j in [1, 2] {
                    assert!(relation_check(&e, i, j).unwrap(), "{label} [y{i},x{j}]");
                }
            }
        }
    }
}
