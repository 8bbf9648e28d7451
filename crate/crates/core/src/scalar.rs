//! The coefficient ring interface shared by the diagram calculus.

use std::fmt::Debug;

use crate::cyclotomic::CyclotomicNumber;
use crate::error::Result;

/// A commutative ring with partial division.
///
/// Methods take an existing element as a template so that context such as
/// the cyclotomic order travels with the values.
pub trait Scalar: Clone + PartialEq + Debug + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn from_i64_like(&self, n: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn try_div_ref(&self, other: &Self) -> Result<Self>;

    fn add_assign_ref(&mut self, other: &Self) {
        *self = self.add_ref(other);
    }

    /// Brings the value into a canonical form after a batch of additions.
    fn normalize(&mut self) {}

    /// `self · δ^loops`.
    fn mul_loop_power(&self, delta: &Self, loops: u32) -> Self {
        let mut acc = self.clone();
        for _ in 0..loops {
            acc = acc.mul_ref(delta);
        }
        acc
    }
}

impl Scalar for CyclotomicNumber {
    fn zero_like(&self) -> Self {
        CyclotomicNumber::zero(self.order())
    }
    fn one_like(&self) -> Self {
        CyclotomicNumber::one(self.order())
    }
    fn from_i64_like(&self, n: i64) -> Self {
        CyclotomicNumber::from_integer(self.order(), n)
    }
    fn is_zero(&self) -> bool {
        CyclotomicNumber::is_zero(self)
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn try_div_ref(&self, other: &Self) -> Result<Self> {
        self.checked_div(other)
    }
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
}

/// Chebyshev values `[0] = 0, [1] = 1, [n+1] = δ[n] - [n-1]` in any scalar ring.
pub fn chebyshev<S: Scalar>(n: usize, delta: &S) -> S {
    let mut prev = delta.zero_like();
    let mut cur = delta.one_like();
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = delta.mul_ref(&cur).sub_ref(&prev);
        prev = cur;
        cur = next;
    }
    cur
}
