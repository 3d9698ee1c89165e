use std::fmt;

use num_traits::{One, Zero};

use super::rational::Rational;
use super::upoly::UPoly;
use super::FieldElem;

/// Rational function in one variable `t` over Q, kept in lowest terms with a
/// monic denominator.
#[derive(Clone, PartialEq, Eq)]
pub struct RatFunc {
    num: UPoly,
    den: UPoly,
}

impl RatFunc {
    pub fn new(num: UPoly, den: UPoly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return RatFunc { num, den: UPoly::one() };
        }
        let g = num.gcd(&den);
        let (n, _) = num.divrem(&g);
        let (d, _) = den.divrem(&g);
        let l = Rational::one() / d.leading();
        RatFunc { num: n.scale(&l), den: d.scale(&l) }
    }

    pub fn constant(c: Rational) -> Self {
        RatFunc { num: UPoly::constant(c), den: UPoly::one() }
    }

    /// The linear function `c + t`.
    pub fn shifted(c: Rational) -> Self {
        RatFunc { num: UPoly::new(vec![c, Rational::one()]), den: UPoly::one() }
    }

    pub fn num(&self) -> &UPoly {
        &self.num
    }

    pub fn den(&self) -> &UPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Order of the pole at t = 0 (0 if the function is regular there).
    pub fn pole_order_at_zero(&self) -> usize {
        if self.num.is_zero() {
            return 0;
        }
        let vd = self.den.valuation().unwrap();
        let vn = self.num.valuation().unwrap();
        vd.saturating_sub(vn)
    }

    /// Value of `t^e * f(t)` at t = 0; requires `e >= pole_order_at_zero()`.
    pub fn cleared_value_at_zero(&self, e: usize) -> Rational {
        if self.num.is_zero() {
            return Rational::zero();
        }
        let vd = self.den.valuation().unwrap();
        let vn = self.num.valuation().unwrap();
        assert!(vn + e >= vd, "clearing exponent below pole order");
        if vn + e > vd {
            Rational::zero()
        } else {
            self.num.coeff(vn) / self.den.coeff(vd)
        }
    }

    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(x) / d)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?})/({:?})", self.num.coeffs(), self.den.coeffs())
    }
}

impl FieldElem for RatFunc {
    fn zero_like(&self) -> Self {
        RatFunc::constant(Rational::zero())
    }
    fn one_like(&self) -> Self {
        RatFunc::constant(Rational::one())
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn add_ref(&self, o: &Self) -> Self {
        RatFunc::new(self.num.mul(&o.den).add(&o.num.mul(&self.den)), self.den.mul(&o.den))
    }
    fn sub_ref(&self, o: &Self) -> Self {
        RatFunc::new(self.num.mul(&o.den).sub(&o.num.mul(&self.den)), self.den.mul(&o.den))
    }
    fn mul_ref(&self, o: &Self) -> Self {
        RatFunc::new(self.num.mul(&o.num), self.den.mul(&o.den))
    }
    fn div_ref(&self, o: &Self) -> Self {
        assert!(!o.is_zero(), "rational function division by zero");
        RatFunc::new(self.num.mul(&o.den), self.den.mul(&o.num))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::int;

    #[test]
    fn arithmetic_reduces() {
        let t = RatFunc::shifted(int(0));
        let a = RatFunc::shifted(int(1)).div_ref(&t);
        let b = a.mul_ref(&t);
        assert_eq!(b, RatFunc::shifted(int(1)));
        assert_eq!(a.pole_order_at_zero(), 1);
        assert_eq!(a.cleared_value_at_zero(1), int(1));
        assert_eq!(a.cleared_value_at_zero(2), int(0));
        assert_eq!(a.sub_ref(&a), RatFunc::constant(int(0)));
    }
}
