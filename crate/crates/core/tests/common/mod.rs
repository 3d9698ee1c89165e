//! Shared generators for integration tests: random parameters, random module
//! elements and parameter instances satisfying a chosen constructor clause.
#![allow(dead_code)]

use std::sync::Arc;

use cherednik2::arith::rational::{frac, int};
use cherednik2::arith::Rational;
use cherednik2::labels::{enumerate_labels, Label, Params};
use cherednik2::module::{ModElem, Mono};
use cherednik2::singular::{CaseTag, Family};
use rand::rngs::StdRng;
use rand::Rng;

pub fn random_rational(rng: &mut StdRng, num: i64, den: i64) -> Rational {
    frac(rng.gen_range(-num..=num), rng.gen_range(1..=den))
}

/// Random parameters with bounded numerators and denominators.
pub fn random_params(rng: &mut StdRng, r: u32) -> Arc<Params> {
    let c0 = loop {
        let c = random_rational(rng, 7, 4);
        if c != int(0) {
            break c;
        }
    };
    let mut d: Vec<Rational> = (0..r).map(|_| random_rational(rng, 9, 3)).collect();
    centre(&mut d);
    Params::new(r, c0, d).unwrap().shared()
}

pub fn random_label(rng: &mut StdRng, r: u32) -> Label {
    let labels = enumerate_labels(r);
    labels[rng.gen_range(0..labels.len())]
}

/// Random element of Δ(label) with up to `terms` terms of degree ≤ `max_deg`.
pub fn random_elem(rng: &mut StdRng, label: Label, p: &Arc<Params>, terms: usize, max_deg: u32) -> ModElem {
    let slots = label.dim() as u8;
    let mut e = ModElem::zero(label, p.clone());
    for _ in 0..terms {
        let deg = rng.gen_range(0..=max_deg);
        let n = rng.gen_range(0..=deg);
        let slot = rng.gen_range(0..slots);
        let c = random_rational(rng, 5, 3);
        e.add_term(Mono::new(n, deg - n, slot), c);
    }
    e
}

fn centre(d: &mut [Rational]) {
    let mean: Rational = d.iter().sum::<Rational>() / int(d.len() as i64);
    for x in d.iter_mut() {
        *x -= &mean;
    }
}

/// A parameter set, label and clause for which the clause's hypotheses hold.
#[derive(Clone, Debug)]
pub struct Instance {
    pub params: Arc<Params>,
    pub label: Label,
    pub tag: CaseTag,
}

const GENERIC_C0: [(i64, i64); 10] = [(-2, 1), (-3, 2), (-1, 1), (-2, 3), (-1, 3), (1, 3), (1, 2), (1, 1), (3, 2), (5, 7)];

fn generic_c0(rng: &mut StdRng) -> Rational {
    let (a, b) = GENERIC_C0[rng.gen_range(0..GENERIC_C0.len())];
    frac(a, b)
}

struct DBuilder {
    r: i64,
    d: Vec<Rational>,
}

impl DBuilder {
    fn new(rng: &mut StdRng, r: u32) -> Self {
        DBuilder { r: r as i64, d: (0..r).map(|_| int(rng.gen_range(-6..=6))).collect() }
    }

    fn idx(&self, a: i64) -> usize {
        a.rem_euclid(self.r) as usize
    }

    /// Imposes d_a − d_b = target.
    fn set(&mut self, a: i64, b: i64, target: Rational) -> Option<()> {
        let (a, b) = (self.idx(a), self.idx(b));
        if a == b {
            return None;
        }
        self.d[a] = &self.d[b] + target;
        Some(())
    }

    fn finish(mut self, c0: Rational) -> Arc<Params> {
        centre(&mut self.d);
        Params::new(self.r as u32, c0, self.d).unwrap().shared()
    }
}

const MAX_N: i64 = 30;

/// One attempt at synthesizing an instance of `family`; `degenerate` asks
/// for a vanishing denominator (pole at the parameter value, or some s_t = 0).
pub fn synthesize(rng: &mut StdRng, family: Family, degenerate: bool) -> Option<Instance> {
    use Family::*;
    let pair1 = matches!(family, Pair1a | Pair1b);
    let r: u32 = if degenerate && pair1 { rng.gen_range(3..=5) } else { rng.gen_range(2..=5) };
    let ri = r as i64;
    let mut db = DBuilder::new(rng, r);
    let (label, n, k, c0): (Label, i64, i64, Rational) = match family {
        RowA | ColA => {
            let k = [1i64, 3, 5][rng.gen_range(0..3)];
            let n = ri * k;
            let c0 = if family == RowA { frac(k, 2) } else { frac(-k, 2) };
            let i = rng.gen_range(0..r);
            let label = if family == RowA { Label::Row(i) } else { Label::Col(i) };
            (label, n, k, c0)
        }
        RowB | ColB => {
            let n = rng.gen_range(1..=MAX_N);
            let i = rng.gen_range(0..r);
            db.set(i as i64, i as i64 - n, int(n))?;
            let label = if family == RowB { Label::Row(i) } else { Label::Col(i) };
            (label, n, 0, generic_c0(rng))
        }
        RowC | ColC => {
            let k = rng.gen_range(if degenerate { 1 } else { 0 }..MAX_N / ri);
            let n = k * ri + rng.gen_range(1..ri);
            let sign = if family == RowC { 1 } else { -1 };
            let c0 = if degenerate { int(sign * k) } else { generic_c0(rng) };
            let i = rng.gen_range(0..r);
            let c0r = &c0 * int(ri);
            // RowC: d_i − d_{i−n} = n − c0·r; ColC: n + c0·r.
            db.set(i as i64, i as i64 - n, int(n) - c0r * int(sign))?;
            let label = if family == RowC { Label::Row(i) } else { Label::Col(i) };
            (label, n, k, c0)
        }
        _ => {
            let (i, j) = loop {
                let a = rng.gen_range(0..r);
                let b = rng.gen_range(0..r);
                if a < b {
                    break (a as i64, b as i64);
                }
            };
            let label = Label::Pair(i as u32, j as u32);
            match family {
                Pair1a => {
                    let k = rng.gen_range(if degenerate { 1 } else { 0 }..=MAX_N / ri);
                    let m = k * ri + rng.gen_range(1..ri);
                    let n = m - (j - i);
                    if n < 1 || n > MAX_N {
                        return None;
                    }
                    db.set(i, i - n, int(n))?;
                    if degenerate {
                        if db.idx(i - n) == db.idx(j) {
                            return None;
                        }
                        let t = rng.gen_range(1..=k);
                        db.set(j, i, -int(t * ri - j + i))?;
                    }
                    (label, n, k, generic_c0(rng))
                }
                Pair1b => {
                    let k = rng.gen_range(1..=MAX_N / ri + 1);
                    let m = (k - 1) * ri + rng.gen_range(1..ri);
                    let n = m + j - i;
                    if n < 1 || n > MAX_N {
                        return None;
                    }
                    db.set(j, j - n, int(n))?;
                    if degenerate {
                        if db.idx(j - n) == db.idx(i) {
                            return None;
                        }
                        let t = rng.gen_range(1..=k);
                        db.set(i, j, -int((t - 1) * ri - i + j))?;
                    }
                    (label, n, k, generic_c0(rng))
                }
                _ => {
                    let k = rng.gen_range(if degenerate { 1 } else { 0 }..=MAX_N / ri);
                    let n = match family {
                        Pair2a | Pair3a => i - j + (k + 1) * ri,
                        _ => j - i + k * ri,
                    };
                    if n < 1 || n > MAX_N {
                        return None;
                    }
                    let sign = if matches!(family, Pair2a | Pair2b) { 1 } else { -1 };
                    let c0 = if degenerate { int(sign * k) } else { generic_c0(rng) };
                    // Family 2: difference n − c0·r; family 3: n + c0·r.
                    let target = int(n) - &c0 * int(ri) * int(sign);
                    match family {
                        Pair2a | Pair3a => db.set(i, j, target)?,
                        _ => db.set(j, i, target)?,
                    }
                    (label, n, k, c0)
                }
            }
        }
    };
    if c0 == int(0) {
        return None;
    }
    Some(Instance { params: db.finish(c0), label, tag: CaseTag { family, n: n as u32, k: k as u32 } })
}

/// Whether a family has degenerate (vanishing-denominator) instances.
pub fn has_degenerate(family: Family) -> bool {
    !matches!(family, Family::RowA | Family::ColA | Family::RowB | Family::ColB)
}
