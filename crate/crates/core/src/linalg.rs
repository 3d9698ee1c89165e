//! Exact linear algebra: reduced row echelon form over any field and a
//! fraction-free integer rank.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::FieldElem;

/// Reduced row echelon form in place; returns pivot columns.
pub fn rref<F: FieldElem>(rows: &mut Vec<Vec<F>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero_elem()) else {
            continue;
        };
        rows.swap(r, p);
        let inv_piv = rows[r][c].one_like().div_ref(&rows[r][c]);
        for x in rows[r].iter_mut() {
            *x = x.mul_ref(&inv_piv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero_elem() {
                continue;
            }
            let f = row[c].clone();
            for (x, pv) in row.iter_mut().zip(&pivot_row) {
                if !pv.is_zero_elem() {
                    *x = x.sub_ref(&f.mul_ref(pv));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub fn rank<F: FieldElem>(rows: &[Vec<F>], ncols: usize) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m, ncols).len()
}

/// Basis of {v : A v = 0} for A given by rows with `ncols` columns.
pub fn kernel<F: FieldElem>(rows: &[Vec<F>], ncols: usize, unit: &F) -> Vec<Vec<F>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![unit.zero_like(); ncols];
            v[f] = unit.one_like();
            for (row, &pc) in m.iter().zip(&pivots) {
                v[pc] = row[f].neg_ref();
            }
            v
        })
        .collect()
}

/// Rank of an integer matrix by Bareiss elimination in i128, retried with
/// big integers if an intermediate value overflows.
pub fn rank_i64(rows: &[Vec<i64>]) -> usize {
    let m: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    match bareiss_i128(m) {
        Some(r) => r,
        None => bareiss_big(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()),
    }
}

fn bareiss_i128(mut m: Vec<Vec<i128>>) -> Option<usize> {
    let nrows = m.len();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut prev: i128 = 1;
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, p);
        let piv = m[r][c];
        for i in r + 1..nrows {
            let f = m[i][c];
            for j in c..ncols {
                let v = piv.checked_mul(m[i][j])?.checked_sub(f.checked_mul(m[r][j])?)?;
                m[i][j] = v / prev;
            }
        }
        prev = piv;
        r += 1;
    }
    Some(r)
}

fn bareiss_big(mut m: Vec<Vec<BigInt>>) -> usize {
    let nrows = m.len();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut prev = BigInt::from(1);
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let piv = m[r][c].clone();
        for i in r + 1..nrows {
            let f = m[i][c].clone();
            for j in c..ncols {
                let v = &piv * &m[i][j] - &f * &m[r][j];
                m[i][j] = v / &prev;
            }
        }
        prev = piv;
        r += 1;
    }
    r
}
