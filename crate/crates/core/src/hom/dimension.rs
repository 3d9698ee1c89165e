//! A sufficient condition for a two-dimensional hom space between two
//! Pair modules, and a search for parameters that satisfy it.

use crate::arith::rational::{int, is_integer};
use crate::arith::Rational;
use crate::hom::conditions::AtomicCondition;
use crate::labels::{Label, Params};

/// True when c0 is a nonzero integer and INT(i,k,±1), INT(j,i,±1) all hold.
/// Under these conditions dim Hom(Δ(λ_{i,k}), Δ(λ_{i,j})) = 2.
pub fn dimension_two_criterion(p: &Params, i: u32, j: u32, k: u32) -> bool {
    use num_traits::Zero;
    if !is_integer(&p.c0) || p.c0.is_zero() {
        return false;
    }
    if i == j || i == k || j == k || i >= p.r || j >= p.r || k >= p.r {
        return false;
    }
    [
        AtomicCondition::Int { a: i, b: k, sigma: 1 },
        AtomicCondition::Int { a: i, b: k, sigma: -1 },
        AtomicCondition::Int { a: j, b: i, sigma: 1 },
        AtomicCondition::Int { a: j, b: i, sigma: -1 },
    ]
    .iter()
    .all(|a| a.holds(p))
}

/// Domain and codomain of the two-dimensional hom space.
pub fn dimension_two_labels(i: u32, j: u32, k: u32) -> (Label, Label) {
    (Label::Pair(i.min(k), i.max(k)), Label::Pair(i.min(j), i.max(j)))
}

#[derive(Clone, Debug)]
pub struct DimTwoInstance {
    pub params: Params,
    pub i: u32,
    pub j: u32,
    pub k: u32,
}

/// Searches integer d with |d_t| ≤ `dmax` (sum zero) for every r in `rs`
/// and c0 in `c0s`, returning instances in a deterministic order. Instances
/// whose four witnessing degrees exceed `max_degree` are skipped.
pub fn search_dimension_two(rs: &[u32], c0s: &[i64], dmax: i64, max_degree: u32, limit: usize) -> Vec<DimTwoInstance> {
    let mut out = Vec::new();
    for &r in rs {
        for &c0 in c0s {
            for d in integer_grid(r, dmax) {
                let Ok(p) = Params::from_ints(r, int(c0), &d) else { continue };
                for i in 0..r {
                    for j in 0..r {
                        for k in 0..r {
                            if !dimension_two_criterion(&p, i, j, k) {
                                continue;
                            }
                            let deg_max = [(i, k), (j, i)]
                                .iter()
                                .flat_map(|&(a, b)| {
                                    [1i8, -1].map(|sigma| AtomicCondition::Int { a, b, sigma }.value(&p).unwrap_or(0))
                                })
                                .max()
                                .unwrap_or(0);
                            if deg_max <= max_degree {
                                out.push(DimTwoInstance { params: p.clone(), i, j, k });
                                if out.len() >= limit {
                                    return out;
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// All integer vectors of length r with entries in [−dmax, dmax] and sum 0,
/// in lexicographic order.
pub fn integer_grid(r: u32, dmax: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(r as usize);
    grid_rec(r as usize, dmax, 0, &mut cur, &mut out);
    out
}

fn grid_rec(r: usize, dmax: i64, sum: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    if cur.len() + 1 == r {
        let last = -sum;
        if last.abs() <= dmax {
            cur.push(last);
            out.push(cur.clone());
            cur.pop();
        }
        return;
    }
    for v in -dmax..=dmax {
        cur.push(v);
        grid_rec(r, dmax, sum + v, cur, out);
        cur.pop();
    }
}

pub fn rational_grid_c0() -> Vec<Rational> {
    [(-2, 1), (-3, 2), (-1, 1), (-1, 2), (1, 2), (1, 1), (3, 2), (2, 1)]
        .iter()
        .map(|&(n, d)| crate::arith::rational::frac(n, d))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unsatisfiable_at_rank_two() {
        let p = Params::from_ints(2, int(1), &[3, -3]).unwrap();
        assert!(!dimension_two_criterion(&p, 0, 1, 1));
        assert!(search_dimension_two(&[2], &[1, 2, -1], 8, 1000, 1).is_empty());
    }

    #[test]
    fn grid_sizes() {
        assert_eq!(integer_grid(2, 8).len(), 17);
        assert!(integer_grid(3, 8).iter().all(|d| d.iter().sum::<i64>() == 0));
    }

    #[test]
    fn search_finds_rank_three_instance() {
        let found = search_dimension_two(&[3], &[1, -1], 8, 25, 1);
        assert_eq!(found.len(), 1);
        let inst = &found[0];
        assert!(dimension_two_criterion(&inst.params, inst.i, inst.j, inst.k));
    }
}
