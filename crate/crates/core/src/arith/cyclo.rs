use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use super::rational::{fmt_rational, int, Rational};
use super::upoly::UPoly;
use super::FieldElem;
use crate::error::{Error, Result};

/// The r-th cyclotomic polynomial, the minimal polynomial of a primitive
/// r-th root of unity over Q.
pub fn cyclotomic_minimal_poly(r: u32) -> UPoly {
    assert!(r >= 1, "cyclotomic polynomial needs r >= 1");
    let mut p = UPoly::monomial(Rational::one(), r as usize).sub(&UPoly::one());
    for d in 1..r {
        if r % d == 0 {
            let (q, rem) = p.divrem(&cyclotomic_minimal_poly(d));
            debug_assert!(rem.is_zero());
            p = q;
        }
    }
    p
}

/// Context for Q(ζ) with ζ = exp(2πi/r), in the power basis 1, ζ, ..., ζ^{φ(r)-1}.
#[derive(Debug)]
pub struct CycloField {
    r: u32,
    modulus: UPoly,
    /// `reduced[k]` is ζ^k written in the power basis, for 0 <= k < max(r, 2φ-1).
    reduced: Vec<Vec<Rational>>,
}

impl PartialEq for CycloField {
    fn eq(&self, o: &Self) -> bool {
        self.r == o.r
    }
}

impl CycloField {
    pub fn new(r: u32) -> Arc<Self> {
        let modulus = cyclotomic_minimal_poly(r);
        let phi = modulus.degree().unwrap();
        let top = (r as usize).max(2 * phi);
        let reduced = (0..top)
            .map(|k| {
                let red = UPoly::monomial(Rational::one(), k).rem(&modulus);
                (0..phi).map(|i| red.coeff(i)).collect()
            })
            .collect();
        Arc::new(CycloField { r, modulus, reduced })
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    /// Degree of the field over Q.
    pub fn phi(&self) -> usize {
        self.modulus.degree().unwrap()
    }

    pub fn modulus(&self) -> &UPoly {
        &self.modulus
    }
}

/// Exact element of Q(ζ_r).
#[derive(Clone)]
pub struct CycloNum {
    field: Arc<CycloField>,
    coeffs: Vec<Rational>,
}

impl CycloNum {
    pub fn zero(field: &Arc<CycloField>) -> Self {
        CycloNum { field: field.clone(), coeffs: vec![Rational::zero(); field.phi()] }
    }

    pub fn from_rational(field: &Arc<CycloField>, x: Rational) -> Self {
        let mut z = Self::zero(field);
        z.coeffs[0] = x;
        z
    }

    /// ζ^k for any integer k.
    pub fn zeta_pow(field: &Arc<CycloField>, k: i64) -> Self {
        let e = k.rem_euclid(field.r as i64) as usize;
        CycloNum { field: field.clone(), coeffs: field.reduced[e].clone() }
    }

    /// `c * ζ^k`.
    pub fn scaled_zeta(field: &Arc<CycloField>, c: &Rational, k: i64) -> Self {
        let mut z = Self::zeta_pow(field, k);
        for x in z.coeffs.iter_mut() {
            *x *= c;
        }
        z
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn r(&self) -> u32 {
        self.field.r
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    fn check(&self, o: &Self) -> Result<()> {
        if self.field.r != o.field.r {
            return Err(Error::FieldMismatch(self.field.r, o.field.r));
        }
        Ok(())
    }

    pub fn try_add(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let coeffs = self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a + b).collect();
        Ok(CycloNum { field: self.field.clone(), coeffs })
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let coeffs = self.coeffs.iter().zip(&o.coeffs).map(|(a, b)| a - b).collect();
        Ok(CycloNum { field: self.field.clone(), coeffs })
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        let phi = self.field.phi();
        let mut out = vec![Rational::zero(); phi];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                if i + j < phi {
                    out[i + j] += ab;
                } else {
                    for (slot, c) in out.iter_mut().zip(&self.field.reduced[i + j]) {
                        if !c.is_zero() {
                            *slot += &ab * c;
                        }
                    }
                }
            }
        }
        Ok(CycloNum { field: self.field.clone(), coeffs: out })
    }

    pub fn neg(&self) -> Self {
        CycloNum { field: self.field.clone(), coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        CycloNum { field: self.field.clone(), coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let a = UPoly::new(self.coeffs.clone());
        let (g, s, _) = a.ext_gcd(&self.field.modulus);
        debug_assert_eq!(g, UPoly::one());
        let s = s.rem(&self.field.modulus);
        let coeffs = (0..self.field.phi()).map(|i| s.coeff(i)).collect();
        Ok(CycloNum { field: self.field.clone(), coeffs })
    }

    pub fn try_div(&self, o: &Self) -> Result<Self> {
        self.try_mul(&o.inv()?)
    }

    /// Image under ζ -> ζ^{-1} (complex conjugation).
    pub fn conj(&self) -> Self {
        let r = self.field.r as usize;
        let mut out = vec![Rational::zero(); self.field.phi()];
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (slot, z) in out.iter_mut().zip(&self.field.reduced[(r - k % r) % r]) {
                if !z.is_zero() {
                    *slot += c * z;
                }
            }
        }
        CycloNum { field: self.field.clone(), coeffs: out }
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().skip(1).all(|c| c.is_zero())
    }

    pub fn to_rational(&self) -> Result<Rational> {
        if self.is_rational() {
            Ok(self.coeffs[0].clone())
        } else {
            Err(Error::NotRational(self.to_string()))
        }
    }
}

impl PartialEq for CycloNum {
    fn eq(&self, o: &Self) -> bool {
        self.field.r == o.field.r && self.coeffs == o.coeffs
    }
}

impl Eq for CycloNum {}

impl fmt::Debug for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloNum(r={}, {})", self.field.r, self)
    }
}

impl fmt::Display for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => fmt_rational(c),
                1 => format!("({})*z", fmt_rational(c)),
                _ => format!("({})*z^{}", fmt_rational(c), k),
            })
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl FieldElem for CycloNum {
    fn zero_like(&self) -> Self {
        CycloNum::zero(&self.field)
    }
    fn one_like(&self) -> Self {
        CycloNum::from_rational(&self.field, Rational::one())
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn add_ref(&self, o: &Self) -> Self {
        self.try_add(o).expect("cyclotomic field mismatch")
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self.try_sub(o).expect("cyclotomic field mismatch")
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self.try_mul(o).expect("cyclotomic field mismatch")
    }
    fn div_ref(&self, o: &Self) -> Self {
        self.try_div(o).expect("cyclotomic division failed")
    }
    fn neg_ref(&self) -> Self {
        self.neg()
    }
}

/// Σ_{l=0}^{r-1} ζ^{lk}, evaluated in Q(ζ) and collapsed to Q.
pub fn power_sum(r: u32, k: i64) -> Rational {
    let field = CycloField::new(r);
    let mut acc = CycloNum::zero(&field);
    for l in 0..r as i64 {
        acc = acc.add_ref(&CycloNum::zeta_pow(&field, l * k));
    }
    acc.to_rational().expect("power sums of roots of unity are rational")
}

/// Shorthand for an integer embedded in the field.
pub fn cint(field: &Arc<CycloField>, n: i64) -> CycloNum {
    CycloNum::from_rational(field, int(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_cyclotomics() {
        let c = |r| cyclotomic_minimal_poly(r).coeffs().iter().map(|x| x.to_string()).collect::<Vec<_>>();
        assert_eq!(c(1), ["-1", "1"]);
        assert_eq!(c(2), ["1", "1"]);
        assert_eq!(c(3), ["1", "1", "1"]);
        assert_eq!(c(4), ["1", "0", "1"]);
        assert_eq!(c(6), ["1", "-1", "1"]);
    }

    #[test]
    fn zeta_has_order_r() {
        for r in 1..=8 {
            let f = CycloField::new(r);
            let z = CycloNum::zeta_pow(&f, 1);
            let mut acc = cint(&f, 1);
            for k in 1..=r {
                acc = acc.mul_ref(&z);
                assert_eq!(acc == cint(&f, 1), k == r, "r={r} k={k}");
            }
        }
    }

    #[test]
    fn power_sums() {
        assert_eq!(power_sum(3, 0), int(3));
        assert_eq!(power_sum(3, 1), int(0));
        assert_eq!(power_sum(4, 8), int(4));
        assert_eq!(power_sum(5, -2), int(0));
    }

    #[test]
    fn inverse_and_conj() {
        let f = CycloField::new(5);
        let a = cint(&f, 2).add_ref(&CycloNum::zeta_pow(&f, 3));
        let one = a.mul_ref(&a.inv().unwrap());
        assert_eq!(one, cint(&f, 1));
        assert_eq!(CycloNum::zeta_pow(&f, 2).conj(), CycloNum::zeta_pow(&f, 3));
        assert!(CycloNum::zero(&f).inv().is_err());
        let g = CycloField::new(3);
        assert_eq!(a.try_add(&cint(&g, 1)), Err(Error::FieldMismatch(5, 3)));
    }

    #[test]
    fn not_rational_detected() {
        let f = CycloField::new(3);
        assert!(CycloNum::zeta_pow(&f, 1).to_rational().is_err());
        let s = CycloNum::zeta_pow(&f, 1).add_ref(&CycloNum::zeta_pow(&f, 2));
        assert_eq!(s.to_rational().unwrap(), int(-1));
    }
}
