//! Exact arithmetic: rationals, univariate polynomials, cyclotomic numbers
//! and rational functions.

pub mod cyclo;
pub mod ratfunc;
pub mod rational;
pub mod upoly;

pub use cyclo::{cyclotomic_minimal_poly, power_sum, CycloField, CycloNum};
pub use ratfunc::RatFunc;
pub use rational::{frac, int, parse_rational, Rational};
pub use upoly::UPoly;

use num_traits::{One, Zero};

/// Minimal field interface used by the generic linear algebra and solvers.
///
/// Elements that need a context (cyclotomic numbers) produce constants
/// through `zero_like`/`one_like`.
pub trait FieldElem: Clone + std::fmt::Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero_elem(&self) -> bool;
    fn add_ref(&self, o: &Self) -> Self;
    fn sub_ref(&self, o: &Self) -> Self;
    fn mul_ref(&self, o: &Self) -> Self;
    /// Panics when `o` is zero; callers check first.
    fn div_ref(&self, o: &Self) -> Self;
    fn neg_ref(&self) -> Self {
        self.zero_like().sub_ref(self)
    }
}

impl FieldElem for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn add_ref(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_ref(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self * o
    }
    fn div_ref(&self, o: &Self) -> Self {
        self / o
    }
    fn neg_ref(&self) -> Self {
        -self
    }
}
