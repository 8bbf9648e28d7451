//! Quantum integers `[n] = (s^{2n} - s^{-2n}) / (s^2 - s^{-2})` and ratios of
//! quantum factorials.
//!
//! Ratios are cancelled symbolically before specialising `s`: over `Z[x, x^-1]`
//!
//! ```text
//! [n]_x = x^{-2(n-1)} · ∏_{d | 4n, d ∤ 4} Φ_d(x)
//! ```
//!
//! so a product of factorials is a monomial times a product of cyclotomic
//! polynomials with integer exponents. At a root of unity of order `r` only
//! `Φ_r` vanishes, which makes poles and genuine zeros easy to tell apart.

use std::collections::{BTreeMap, HashMap};

use num::{BigRational, One};

use super::field::CyclotomicNumber;
use super::integers::divisors;
use super::laurent::{cyclotomic_polynomial, LaurentPoly};
use crate::error::{Error, Result};

pub fn quantum_integer(n: i64, s: &CyclotomicNumber) -> Result<CyclotomicNumber> {
    let s2 = s * s;
    if (&s2 * &s2).is_one() {
        return Err(Error::DegenerateParameter);
    }
    if n < 0 {
        return Ok(-quantum_integer(-n, s)?);
    }
    // geometric sum s^{2(n-1)} + s^{2(n-3)} + ... + s^{-2(n-1)}
    let mut acc = CyclotomicNumber::zero(s.order());
    if n == 0 {
        return Ok(acc);
    }
    let s4 = &s2 * &s2;
    let mut term = s2.pow(-(n - 1))?;
    for _ in 0..n {
        acc += &term;
        term = &term * &s4;
    }
    Ok(acc)
}

/// The exponent bookkeeping of a factorial ratio: `x^monomial · ∏ Φ_d(x)^{e_d}`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FactorialRatio {
    pub monomial: i64,
    pub exponents: BTreeMap<u32, i64>,
}

impl FactorialRatio {
    pub fn new(numerator: &[u32], denominator: &[u32]) -> Self {
        let mut r = FactorialRatio::default();
        for &n in numerator {
            r.add_factorial(n, 1);
        }
        for &n in denominator {
            r.add_factorial(n, -1);
        }
        r.exponents.retain(|_, e| *e != 0);
        r
    }

    fn add_factorial(&mut self, n: u32, sign: i64) {
        for j in 1..=n {
            self.monomial -= sign * 2 * (j as i64 - 1);
            for d in divisors(4 * j) {
                if 4 % d != 0 {
                    *self.exponents.entry(d).or_default() += sign;
                }
            }
        }
    }

    /// Numerator and denominator as Laurent polynomials in `x`.
    pub fn symbolic(&self) -> (LaurentPoly, LaurentPoly) {
        let mut num = LaurentPoly::monomial("x", BigRational::one(), self.monomial.max(0));
        let mut den = LaurentPoly::monomial("x", BigRational::one(), (-self.monomial).max(0));
        for (&d, &e) in &self.exponents {
            let phi = cyclotomic_polynomial(d).pow(e.unsigned_abs() as u32);
            if e > 0 {
                num = &num * &phi;
            } else {
                den = &den * &phi;
            }
        }
        (num, den)
    }
}

/// Caches `Φ_d(s)^{±1}` for a fixed `s`, so repeated ratios cost only products.
#[derive(Debug, Clone)]
pub struct QuantumEvaluator {
    s: CyclotomicNumber,
    s_order: u32,
    phi: HashMap<u32, (CyclotomicNumber, CyclotomicNumber)>,
}

impl QuantumEvaluator {
    pub fn new(s: &CyclotomicNumber) -> Result<Self> {
        let s_order = s
            .multiplicative_order()
            .ok_or_else(|| Error::InvalidParameters("s must be a root of unity".into()))?;
        if 4 % s_order == 0 {
            return Err(Error::DegenerateParameter);
        }
        Ok(QuantumEvaluator { s: s.clone(), s_order, phi: HashMap::new() })
    }

    pub fn s(&self) -> &CyclotomicNumber {
        &self.s
    }

    fn phi_at(&mut self, d: u32) -> &(CyclotomicNumber, CyclotomicNumber) {
        let s = &self.s;
        self.phi.entry(d).or_insert_with(|| {
            let v = cyclotomic_polynomial(d).evaluate(s).expect("s is invertible");
            let inv = v.inverse().unwrap_or_else(|_| CyclotomicNumber::zero(s.order()));
            (v, inv)
        })
    }

    pub fn evaluate(&mut self, ratio: &FactorialRatio) -> Result<CyclotomicNumber> {
        match ratio.exponents.get(&self.s_order) {
            Some(&e) if e < 0 => return Err(Error::Pole),
            Some(&e) if e > 0 => return Ok(CyclotomicNumber::zero(self.s.order())),
            _ => {}
        }
        let mut acc = self.s.pow(ratio.monomial)?;
        for (&d, &e) in &ratio.exponents {
            let (v, inv) = self.phi_at(d).clone();
            let base = if e > 0 { v } else { inv };
            for _ in 0..e.unsigned_abs() {
                acc = &acc * &base;
            }
        }
        Ok(acc)
    }

    pub fn factorial_ratio(&mut self, numerator: &[u32], denominator: &[u32]) -> Result<CyclotomicNumber> {
        self.evaluate(&FactorialRatio::new(numerator, denominator))
    }
}

/// `∏[n_i]! / ∏[d_j]!` at `s`, cancelled symbolically first.
pub fn quantum_factorial_ratio(
    numerator: &[u32],
    denominator: &[u32],
    s: &CyclotomicNumber,
) -> Result<CyclotomicNumber> {
    QuantumEvaluator::new(s)?.factorial_ratio(numerator, denominator)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(k: u32, l: i64) -> CyclotomicNumber {
        CyclotomicNumber::root_of_unity(4 * (k + 2), l + k as i64 + 2)
    }

    #[test]
    fn small_quantum_integers() {
        let s = s(2, 1);
        assert!(quantum_integer(0, &s).unwrap().is_zero());
        assert!(quantum_integer(1, &s).unwrap().is_one());
        let two = quantum_integer(2, &s).unwrap();
        let s2 = &s * &s;
        assert_eq!(two, &s2 + &s2.inverse().unwrap());
        assert_eq!(quantum_integer(-3, &s).unwrap(), -quantum_integer(3, &s).unwrap());
        let (re, im) = two.approx_f64();
        assert!((re + std::f64::consts::SQRT_2).abs() < 1e-12 && im.abs() < 1e-12);
    }

    #[test]
    fn degenerate_parameter() {
        let i = CyclotomicNumber::root_of_unity(8, 2);
        assert_eq!(quantum_integer(2, &i), Err(Error::DegenerateParameter));
    }

    #[test]
    fn ratio_matches_direct_products() {
        // generic s: an order large enough that no bracket below vanishes
        let s = CyclotomicNumber::root_of_unity(60, 7);
        let q = |n| quantum_integer(n, &s).unwrap();
        let lhs = quantum_factorial_ratio(&[4], &[2, 2], &s).unwrap();
        let rhs = (&q(3) * &q(4)).checked_div(&q(2)).unwrap();
        assert_eq!(lhs, rhs);
        assert_eq!(quantum_factorial_ratio(&[3], &[2], &s).unwrap(), q(3));
        assert!(quantum_factorial_ratio(&[0], &[], &s).unwrap().is_one());
    }

    #[test]
    fn cancellation_at_root_of_unity() {
        // k = 1: [3] = 0, so [4]!/[3]! = [4] is finite even though both vanish
        let s = s(1, 1);
        let r = quantum_factorial_ratio(&[4], &[3], &s).unwrap();
        assert_eq!(r, quantum_integer(4, &s).unwrap());
        assert!(quantum_factorial_ratio(&[3], &[], &s).unwrap().is_zero());
        assert_eq!(quantum_factorial_ratio(&[2], &[3], &s), Err(Error::Pole));
    }

    #[test]
    fn symbolic_form() {
        let (n, d) = FactorialRatio::new(&[2], &[]).symbolic();
        // [2] = x^{-2}·Φ_8(x)
        assert_eq!(d.to_string(), "x^2");
        assert_eq!(n.to_string(), "x^4 + 1");
    }
}
