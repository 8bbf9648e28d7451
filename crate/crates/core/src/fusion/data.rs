//! Dimensions and θ symbols.


use super::params::CategoryParams;
use super::rules::{admissible, AdmissibleTriple};
use crate::cyclotomic::{quantum_integer, CyclotomicNumber, FactorialRatio, QuantumEvaluator};
use crate::error::{Error, Result};

pub(crate) fn evaluator(p: &CategoryParams) -> QuantumEvaluator {
    QuantumEvaluator::new(&p.s()).expect("s has order at least 12")
}

/// Categorical dimension `(-1)^n [n+1]`, with an extra `(-1)^n` for the minus structure.
pub fn qdim(p: &CategoryParams, n: u32) -> Result<CyclotomicNumber> {
    if n > p.k() {
        return Err(Error::InvalidParameters(format!("X_{n} is not a simple object at level {}", p.k())));
    }
    let v = quantum_integer(n as i64 + 1, &p.s())?;
    let sign = if n % 2 == 0 { 1 } else { -1 } * p.sign().sign_pow(n);
    Ok(if sign < 0 { -v } else { v })
}

/// `2(k+2) / (2 - s^4 - s^{-4})`.
pub fn global_dim(p: &CategoryParams) -> CyclotomicNumber {
    let s4 = p.s().pow(4).expect("root of unity");
    let n = p.field_order();
    let den = CyclotomicNumber::from_integer(n, 2) - &s4 - s4.inverse().expect("root of unity");
    CyclotomicNumber::from_integer(n, 2 * (p.k() as i64 + 2)).checked_div(&den).expect("s^4 ≠ 1")
}

/// `Σ_n qdim(n)^2`, the definition the closed form is checked against.
pub fn global_dim_by_sum(p: &CategoryParams) -> CyclotomicNumber {
    (0..=p.k()).fold(CyclotomicNumber::zero(p.field_order()), |acc, n| {
        let d = qdim(p, n).expect("n ≤ k");
        acc + &d * &d
    })
}

/// The factorial bookkeeping of `θ` for the plus structure, without its sign.
pub(crate) fn theta_ratio(t: &AdmissibleTriple) -> FactorialRatio {
    let (u, v, w) = (t.u, t.v, t.w);
    FactorialRatio::new(&[u + v + w + 1, u, v, w], &[u + v, v + w, u + w])
}

pub(crate) fn theta_sign(p: &CategoryParams, t: &AdmissibleTriple) -> i64 {
    let plus = if (t.u + t.v + t.w) % 2 == 0 { 1 } else { -1 };
    plus * p.sign().sign_pow((t.a + t.b + t.c) / 2)
}

pub(crate) fn theta_with(ev: &mut QuantumEvaluator, p: &CategoryParams, t: &AdmissibleTriple) -> Result<CyclotomicNumber> {
    let v = ev.evaluate(&theta_ratio(t))?;
    Ok(if theta_sign(p, t) < 0 { -v } else { v })
}

/// `θ(a, b, c)`; zero when the triple is not admissible at level `k`.
pub fn theta_symbol(p: &CategoryParams, a: u32, b: u32, c: u32) -> Result<CyclotomicNumber> {
    match AdmissibleTriple::new(p.k(), a, b, c) {
        Ok(t) => theta_with(&mut evaluator(p), p, &t),
        Err(_) => Ok(CyclotomicNumber::zero(p.field_order())),
    }
}

/// As [`theta_symbol`], but an inadmissible triple is an error.
pub fn theta_symbol_strict(p: &CategoryParams, a: u32, b: u32, c: u32) -> Result<CyclotomicNumber> {
    if !admissible(p.k(), a, b, c) {
        return Err(Error::NotAdmissible(format!("θ({a}, {b}, {c}) at level {}", p.k())));
    }
    theta_symbol(p, a, b, c)
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::fusion::PivotalSign;

    #[test]
    fn dimensions() {
        let p = CategoryParams::plus(2, 1).unwrap();
        assert!(qdim(&p, 0).unwrap().is_one());
        assert_eq!(qdim(&p, 1).unwrap(), p.delta());
        let m = p.with_sign(PivotalSign::Minus);
        assert_eq!(qdim(&m, 1).unwrap(), -p.delta());
        assert_eq!(global_dim_by_sum(&p), CyclotomicNumber::from_integer(16, 4));
    }

    #[test]
    fn global_dimension_formula() {
        for k in 1..=8 {
            for m in 1..=k as i64 + 1 {
                let Ok(p) = CategoryParams::plus(k, m) else { continue };
                assert_eq!(global_dim(&p), global_dim_by_sum(&p), "k={k} m={m}");
            }
        }
    }

    #[test]
    fn theta_values() {
        let p = CategoryParams::plus(3, 1).unwrap();
        let s = p.s();
        assert_eq!(theta_symbol(&p, 1, 1, 2).unwrap(), quantum_integer(3, &s).unwrap());
        assert!(theta_symbol(&p, 1, 1, 1).unwrap().is_zero());
        assert!(theta_symbol_strict(&p, 1, 1, 1).is_err());
        for a in 0..=3 {
            assert_eq!(theta_symbol(&p, a, a, 0).unwrap(), qdim(&p, a).unwrap());
        }
    }
}
