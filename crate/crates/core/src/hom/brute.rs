//! Brute-force singular spaces by exact linear algebra, and multiplicities
//! of irreducible W-types inside them.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{CycloField, CycloNum, Rational};
use crate::error::{Error, Result};
use crate::labels::{character, GroupElement, Label, Params};
use crate::linalg::{kernel, rank, rank_i64};
use crate::module::{y_terms, CycloModElem, ModElem, Mono};

/// Degree-d basis of Δ(μ) in a fixed order (or the order given by `perm`).
pub fn degree_basis(mu: &Label, d: u32) -> Vec<Mono> {
    let mut out = Vec::new();
    for n in (0..=d).rev() {
        for slot in 0..mu.dim() as u8 {
            out.push(Mono::new(n, d - n, slot));
        }
    }
    out
}

/// Basis of the singular vectors of degree d in Δ(μ), computed with the
/// monomial basis taken in the given order.
pub fn singular_space_with_basis(mu: &Label, p: &Arc<Params>, basis: &[Mono]) -> Vec<ModElem> {
    let mut row_index: BTreeMap<(u8, Mono), usize> = BTreeMap::new();
    let mut entries: Vec<(usize, usize, Rational)> = Vec::new();
    for (col, mono) in basis.iter().enumerate() {
        for axis in [1u8, 2] {
            for (out, yc) in y_terms(mu, p.r, *mono, axis) {
                let v = yc.eval(p);
                if v.is_zero() {
                    continue;
                }
                let n = row_index.len();
                let row = *row_index.entry((axis, out)).or_insert(n);
                entries.push((row, col, v));
            }
        }
    }
    let mut rows = vec![vec![Rational::zero(); basis.len()]; row_index.len()];
    for (r, c, v) in entries {
        rows[r][c] += v;
    }
    kernel(&rows, basis.len(), &Rational::one())
        .into_iter()
        .map(|v| ModElem::from_terms(*mu, p.clone(), basis.iter().copied().zip(v)))
        .collect()
}

/// Basis of the singular vectors of degree d in Δ(μ).
pub fn singular_space(mu: &Label, p: &Arc<Params>, d: u32) -> Vec<ModElem> {
    singular_space_with_basis(mu, p, &degree_basis(mu, d))
}

fn cyclo_rows(elems: &[CycloModElem]) -> (Vec<Vec<CycloNum>>, usize) {
    let mut cols: BTreeMap<Mono, usize> = BTreeMap::new();
    for e in elems {
        for k in e.terms.keys() {
            let n = cols.len();
            cols.entry(*k).or_insert(n);
        }
    }
    let rows = elems
        .iter()
        .map(|e| {
            let mut row = vec![CycloNum::zero(&e.field); cols.len()];
            for (k, c) in &e.terms {
                row[cols[k]] = c.clone();
            }
            row
        })
        .collect();
    (rows, cols.len())
}

fn cyclo_rank(elems: &[CycloModElem]) -> usize {
    let (rows, ncols) = cyclo_rows(elems);
    rank(&rows, ncols)
}

/// Checks that the span of `basis` is stable under the generators ζ_1 and s_12.
pub fn is_w_stable(basis: &[ModElem], field: &Arc<CycloField>) -> bool {
    if basis.is_empty() {
        return true;
    }
    let r = field.r();
    let lifted: Vec<CycloModElem> = basis.iter().map(|b| CycloModElem::from_rational(b, field)).collect();
    let base_rank = cyclo_rank(&lifted);
    [GroupElement::zeta(r, 1, 1), GroupElement::transposition(r)].iter().all(|g| {
        let mut all = lifted.clone();
        all.extend(lifted.iter().map(|e| e.w_act(g)));
        cyclo_rank(&all) == base_rank
    })
}

/// Multiplicity of the irreducible λ in the W-stable span of `basis`,
/// via the isotypic projector Σ_g conj(χ_λ(g)) g.
pub fn isotypic_multiplicity(basis: &[ModElem], lambda: &Label) -> Result<usize> {
    let Some(first) = basis.first() else {
        return Ok(0);
    };
    let r = first.r();
    let field = CycloField::new(r);
    if !is_w_stable(basis, &field) {
        return Err(Error::NotStable);
    }
    let group = GroupElement::all(r);
    let chars: Vec<CycloNum> = group.iter().map(|g| character(lambda, g, &field).conj()).collect();
    let projected: Vec<CycloModElem> = basis
        .iter()
        .map(|b| {
            let mut acc = CycloModElem::zero(b.label, &field);
            for (g, c) in group.iter().zip(&chars) {
                if !c.is_zero() {
                    acc = acc.add(&b.w_act(g, &field).scale(c));
                }
            }
            acc
        })
        .collect();
    let rk = cyclo_rank(&projected);
    let dim = lambda.dim();
    assert!(rk % dim == 0, "isotypic component dimension {rk} not divisible by {dim}");
    Ok(rk / dim)
}

/// dim Hom(Δ(λ), Δ(μ)) restricted to generator degrees ≤ max_degree, by
/// projecting every singular space onto the λ-isotypic component.
pub fn hom_dim_bruteforce(lambda: &Label, mu: &Label, p: &Arc<Params>, max_degree: u32) -> Result<usize> {
    let mut total = 0;
    for d in 0..=max_degree {
        let sing = singular_space(mu, p, d);
        total += isotypic_multiplicity(&sing, lambda)?;
    }
    Ok(total)
}

/// Parameters multiplied by a common denominator so that every y-matrix
/// entry is an integer.
#[derive(Clone, Debug)]
pub struct ScaledParams {
    pub r: u32,
    pub scale: i64,
    pub c0: i64,
    pub d: Vec<i64>,
}

impl ScaledParams {
    pub fn new(p: &Params) -> Option<Self> {
        let mut l = p.c0.denom().clone();
        for x in &p.d {
            l = l.lcm(x.denom());
        }
        let l = Rational::from_integer(l);
        let to = |x: &Rational| crate::arith::rational::to_i64(&(x * &l));
        Some(ScaledParams {
            r: p.r,
            scale: crate::arith::rational::to_i64(&l)?,
            c0: to(&p.c0)?,
            d: p.d.iter().map(to).collect::<Option<Vec<_>>>()?,
        })
    }
}

/// Multiplicities of every λ in Sing(Δ(μ)) of degree exactly d, using the
/// torus-weight decomposition: a copy of Pair{x,y} contributes one singular
/// vector of weight (x, y); Row(x)/Col(x) contribute a symmetric /
/// antisymmetric singular vector of weight (x, x).
pub fn multiplicities_by_weight(mu: &Label, sp: &ScaledParams, d: u32) -> HashMap<Label, usize> {
    let r = sp.r;
    let mut by_weight: BTreeMap<(u32, u32), Vec<Mono>> = BTreeMap::new();
    for mono in degree_basis(mu, d) {
        by_weight.entry(mono.weight(mu, r)).or_default().push(mono);
    }
    let mut out = HashMap::new();
    for ((w1, w2), monos) in by_weight {
        if w1 < w2 {
            let vecs: Vec<Vec<(Mono, i64)>> = monos.iter().map(|m| vec![(*m, 1)]).collect();
            let k = kernel_dim_int(mu, sp, &vecs);
            if k > 0 {
                out.insert(Label::Pair(w1, w2), k);
            }
        } else if w1 == w2 {
            for (sigma, label) in [(1i64, Label::Row(w1)), (-1, Label::Col(w1))] {
                let vecs = symmetrized(mu, &monos, sigma);
                let k = kernel_dim_int(mu, sp, &vecs);
                if k > 0 {
                    out.insert(label, k);
                }
            }
        }
    }
    out
}

/// Vectors b + σ·s(b) spanning the σ-eigenspace of s_12 on the span of `monos`.
fn symmetrized(mu: &Label, monos: &[Mono], sigma: i64) -> Vec<Vec<(Mono, i64)>> {
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for m in monos {
        if seen.contains(m) {
            continue;
        }
        let (slot2, sign) = mu.swap_slot(m.slot);
        let partner = Mono::new(m.m, m.n, slot2);
        seen.insert(*m);
        seen.insert(partner);
        let coeff = sigma * sign as i64;
        if partner == *m {
            if coeff == 1 {
                out.push(vec![(*m, 1)]);
            }
        } else {
            out.push(vec![(*m, 1), (partner, coeff)]);
        }
    }
    out
}

fn kernel_dim_int(mu: &Label, sp: &ScaledParams, vecs: &[Vec<(Mono, i64)>]) -> usize {
    if vecs.is_empty() {
        return 0;
    }
    let mut cols: HashMap<(u8, Mono), usize> = HashMap::new();
    let mut rows: Vec<Vec<(usize, i64)>> = Vec::with_capacity(vecs.len());
    for v in vecs {
        let mut row = Vec::new();
        for (mono, c) in v {
            for axis in [1u8, 2] {
                for (out, yc) in y_terms(mu, sp.r, *mono, axis) {
                    let val = yc.eval_scaled(sp.r, sp.scale, sp.c0, &sp.d);
                    if val != 0 {
                        let n = cols.len();
                        let idx = *cols.entry((axis, out)).or_insert(n);
                        row.push((idx, val * c));
                    }
                }
            }
        }
        rows.push(row);
    }
    let dense: Vec<Vec<i64>> = rows
        .into_iter()
        .map(|row| {
            let mut v = vec![0i64; cols.len()];
            for (i, x) in row {
                v[i] += x;
            }
            v
        })
        .collect();
    vecs.len() - rank_i64(&dense)
}

/// dim Hom(Δ(λ), Δ(μ)) up to max_degree through the torus-weight route, for
/// every λ at once.
pub fn hom_dims_by_weight(mu: &Label, p: &Params, max_degree: u32) -> Option<HashMap<Label, usize>> {
    let sp = ScaledParams::new(p)?;
    let mut total: HashMap<Label, usize> = HashMap::new();
    for d in 0..=max_degree {
        for (l, k) in multiplicities_by_weight(mu, &sp, d) {
            *total.entry(l).or_default() += k;
        }
    }
    Some(total)
}

pub fn hom_dim_by_weight(lambda: &Label, mu: &Label, p: &Params, max_degree: u32) -> Option<usize> {
    hom_dims_by_weight(mu, p, max_degree).map(|m| m.get(lambda).copied().unwrap_or(0))
}
