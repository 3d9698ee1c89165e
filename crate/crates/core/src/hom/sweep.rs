//! Comparison of the condition rules against brute-force hom dimensions on
//! a parameter grid.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::arith::Rational;
use crate::hom::brute::hom_dims_by_weight;
use crate::hom::conditions::hom_conditions;
use crate::hom::dimension::integer_grid;
use crate::labels::{enumerate_labels, Label, Params};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum DiscrepancyKind {
    /// A rule fires but its constructor degree is above the search cap.
    BeyondDegreeCap,
    /// A rule fires but no singular vector was found, or the converse.
    Genuine,
}

#[derive(Clone, Debug, Serialize)]
pub struct Discrepancy {
    pub params: Params,
    pub from: Label,
    pub to: Label,
    pub fires: bool,
    pub min_degree: Option<u32>,
    pub brute_dim: usize,
    pub kind: DiscrepancyKind,
}

impl fmt::Display for Discrepancy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d: Vec<String> = self.params.d.iter().map(|x| x.to_string()).collect();
        write!(
            f,
            "r={} c0={} d=({}) {} -> {}: fires={} min_degree={:?} brute={} [{:?}]",
            self.params.r,
            self.params.c0,
            d.join(","),
            self.from,
            self.to,
            self.fires,
            self.min_degree,
            self.brute_dim,
            self.kind
        )
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct SweepSummary {
    pub param_sets: usize,
    pub pairs_checked: usize,
    pub agreements: usize,
    pub nonzero_homs: usize,
    pub discrepancies: Vec<Discrepancy>,
    /// (from, to, dim) for hom spaces of dimension above two.
    pub over_two: Vec<(String, Label, Label, usize)>,
    pub max_dim: usize,
}

impl SweepSummary {
    pub fn genuine(&self) -> impl Iterator<Item = &Discrepancy> {
        self.discrepancies.iter().filter(|d| d.kind == DiscrepancyKind::Genuine)
    }

    fn merge(&mut self, other: SweepSummary) {
        self.param_sets += other.param_sets;
        self.pairs_checked += other.pairs_checked;
        self.agreements += other.agreements;
        self.nonzero_homs += other.nonzero_homs;
        self.discrepancies.extend(other.discrepancies);
        self.over_two.extend(other.over_two);
        self.max_dim = self.max_dim.max(other.max_dim);
    }
}

/// Checks every ordered pair λ ≠ μ at one parameter point.
pub fn sweep_params(p: &Params, max_degree: u32) -> SweepSummary {
    let labels = enumerate_labels(p.r);
    let mut s = SweepSummary { param_sets: 1, ..Default::default() };
    for mu in &labels {
        let dims: HashMap<Label, usize> = hom_dims_by_weight(mu, p, max_degree).unwrap_or_default();
        for lambda in &labels {
            if lambda == mu {
                continue;
            }
            let rep = hom_conditions(lambda, mu, p);
            let dim = dims.get(lambda).copied().unwrap_or(0);
            s.pairs_checked += 1;
            s.max_dim = s.max_dim.max(dim);
            if dim > 0 {
                s.nonzero_homs += 1;
            }
            if dim > 2 {
                s.over_two.push((params_key(p), *lambda, *mu, dim));
            }
            let fires = rep.exists;
            if fires == (dim > 0) {
                s.agreements += 1;
                continue;
            }
            let min_degree = rep.min_degree();
            let kind = match (fires, min_degree) {
                (true, Some(deg)) if deg > max_degree => DiscrepancyKind::BeyondDegreeCap,
                _ => DiscrepancyKind::Genuine,
            };
            s.discrepancies.push(Discrepancy {
                params: p.clone(),
                from: *lambda,
                to: *mu,
                fires,
                min_degree,
                brute_dim: dim,
                kind,
            });
        }
    }
    s
}

fn params_key(p: &Params) -> String {
    let d: Vec<String> = p.d.iter().map(|x| x.to_string()).collect();
    format!("r={} c0={} d=({})", p.r, p.c0, d.join(","))
}

/// The full grid: every r, c0 and integer d with |d_t| ≤ dmax summing to 0.
pub fn param_grid(rs: &[u32], c0s: &[Rational], dmax: i64) -> Vec<Params> {
    let mut out = Vec::new();
    for &r in rs {
        for c0 in c0s {
            for d in integer_grid(r, dmax) {
                if let Ok(p) = Params::from_ints(r, c0.clone(), &d) {
                    out.push(p);
                }
            }
        }
    }
    out
}

pub fn sweep(grid: &[Params], max_degree: u32) -> SweepSummary {
    let mut total = SweepSummary::default();
    for p in grid {
        total.merge(sweep_params(p, max_degree));
    }
    total
}
