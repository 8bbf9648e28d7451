use std::fmt;

use crate::cyclotomic::integers::{gcd, modulo};
use crate::cyclotomic::CyclotomicNumber;
use crate::error::{Error, Result};
use crate::fusion::{CategoryParams, PivotalSign};

/// `s = ζ_{4(k+2)}^{ℓ+k+2}`.
pub fn s_param(k: u32, ell: i64) -> Result<CyclotomicNumber> {
    Ok(BraidingParams::plus(k, ell)?.s())
}

/// The braided pivotal category `C^br_{k,ℓ,±}`; `ℓ` is kept in `0..4(k+2)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BraidingParams {
    k: u32,
    ell: u32,
    sign: PivotalSign,
}

impl BraidingParams {
    pub fn new(k: u32, ell: i64, sign: PivotalSign) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidParameters("k must be at least 1".into()));
        }
        if gcd(ell, k as i64 + 2) != 1 {
            return Err(Error::InvalidParameters(format!(
                "gcd(ell, k+2) = gcd({ell}, {}) must be 1",
                k + 2
            )));
        }
        let ell = modulo(ell, 4 * (k as i64 + 2)) as u32;
        Ok(BraidingParams { k, ell, sign })
    }

    pub fn plus(k: u32, ell: i64) -> Result<Self> {
        Self::new(k, ell, PivotalSign::Plus)
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    pub fn sign(&self) -> PivotalSign {
        self.sign
    }

    pub fn with_sign(&self, sign: PivotalSign) -> Self {
        BraidingParams { sign, ..*self }
    }

    pub fn field_order(&self) -> u32 {
        4 * (self.k + 2)
    }

    pub fn s(&self) -> CyclotomicNumber {
        CyclotomicNumber::root_of_unity(self.field_order(), (self.ell + self.k + 2) as i64)
    }

    /// `-s^2 - s^{-2}`, taking `s` as the primary datum.
    pub fn delta(&self) -> CyclotomicNumber {
        let s2 = self.s().pow(2).expect("root of unity");
        -(&s2 + &s2.inverse().expect("root of unity"))
    }

    /// The underlying pivotal category: `q = -s^2 = ζ_{2(k+2)}^ℓ`, so `m = ±ℓ mod 2(k+2)`.
    pub fn monoidal(&self) -> CategoryParams {
        CategoryParams::new(self.k, self.ell as i64, self.sign).expect("gcd(ℓ, k+2) = 1")
    }
}

impl fmt::Display for BraidingParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C^br(k={}, ell={}, {})", self.k, self.ell, self.sign)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s_examples() {
        assert_eq!(s_param(1, 1).unwrap(), CyclotomicNumber::root_of_unity(3, 1));
        assert_eq!(s_param(2, 1).unwrap(), CyclotomicNumber::root_of_unity(16, 5));
        assert!(s_param(4, 2).is_err());
    }

    #[test]
    fn delta_matches_monoidal_parameter() {
        for k in 1..=10u32 {
            for ell in 0..4 * (k as i64 + 2) {
                let Ok(b) = BraidingParams::plus(k, ell) else { continue };
                let m = b.monoidal();
                assert_eq!(b.delta(), m.delta(), "k={k} ell={ell}");
                // -s^2 = ζ_{2(k+2)}^ℓ, which is q or q^{-1} after folding m
                let q = -b.s().pow(2).unwrap();
                assert_eq!(q, CyclotomicNumber::root_of_unity(2 * (k + 2), ell));
                assert!(q == m.q() || q == m.q().inverse().unwrap());
            }
        }
    }
}
