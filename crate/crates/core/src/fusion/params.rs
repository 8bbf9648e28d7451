use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::cyclotomic::integers::{gcd, modulo};
use crate::cyclotomic::CyclotomicNumber;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PivotalSign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl PivotalSign {
    /// `(-1)^n` for the minus structure, `1` for the plus structure.
    pub fn sign_pow(self, n: u32) -> i64 {
        match self {
            PivotalSign::Plus => 1,
            PivotalSign::Minus if n % 2 == 0 => 1,
            PivotalSign::Minus => -1,
        }
    }
}

impl fmt::Display for PivotalSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PivotalSign::Plus => "+",
            PivotalSign::Minus => "-",
        })
    }
}

impl FromStr for PivotalSign {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "+" | "plus" => Ok(PivotalSign::Plus),
            "-" | "minus" => Ok(PivotalSign::Minus),
            _ => Err(Error::InvalidParameters(format!("pivotal sign must be + or -, got {s:?}"))),
        }
    }
}

/// The representative in `1..=k+1` of `±x (mod 2(k+2))`.
///
/// The loop value `2cos(xπ/(k+2))` only sees `x` up to sign modulo `2(k+2)`.
fn fold_parameter(k: u32, x: i64) -> u32 {
    let n = 2 * (k as i64 + 2);
    let r = modulo(x, n);
    (if r > n / 2 { n - r } else { r }) as u32
}

/// The pivotal fusion category `C_{k,m,±}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CategoryParams {
    k: u32,
    m: u32,
    sign: PivotalSign,
}

impl CategoryParams {
    /// Validates `k ≥ 1` and `gcd(m, k+2) = 1`; `m` is folded into `1..=k+1`.
    pub fn new(k: u32, m: i64, sign: PivotalSign) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidParameters("k must be at least 1".into()));
        }
        if gcd(m, k as i64 + 2) != 1 {
            return Err(Error::InvalidParameters(format!("gcd(m, k+2) = gcd({m}, {}) must be 1", k + 2)));
        }
        Ok(CategoryParams { k, m: fold_parameter(k, m), sign })
    }

    pub fn plus(k: u32, m: i64) -> Result<Self> {
        Self::new(k, m, PivotalSign::Plus)
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn sign(&self) -> PivotalSign {
        self.sign
    }

    pub fn with_sign(&self, sign: PivotalSign) -> Self {
        CategoryParams { sign, ..*self }
    }

    /// Number of simple objects.
    pub fn rank(&self) -> usize {
        self.k as usize + 1
    }

    /// Order of the cyclotomic field holding all the data, `4(k+2)`.
    pub fn field_order(&self) -> u32 {
        4 * (self.k + 2)
    }

    /// `q = ζ_{2(k+2)}^m`.
    pub fn q(&self) -> CyclotomicNumber {
        CyclotomicNumber::root_of_unity(2 * (self.k + 2), self.m as i64)
    }

    /// `s = ζ_{4(k+2)}^{m+k+2}`, so that `-s^2 = q`.
    pub fn s(&self) -> CyclotomicNumber {
        CyclotomicNumber::root_of_unity(self.field_order(), (self.m + self.k + 2) as i64)
    }

    /// `δ = q + q^{-1}`, in `Q(ζ_{2(k+2)})`.
    pub fn delta(&self) -> CyclotomicNumber {
        let q = self.q();
        &q + &q.inverse().expect("root of unity")
    }
}

impl fmt::Display for CategoryParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C(k={}, m={}, {})", self.k, self.m, self.sign)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation_and_folding() {
        assert!(CategoryParams::plus(0, 1).is_err());
        assert!(CategoryParams::plus(2, 2).is_err());
        assert_eq!(CategoryParams::plus(2, 3).unwrap().m(), 3);
        assert_eq!(CategoryParams::plus(2, 5).unwrap().m(), 3);
        assert_eq!(CategoryParams::plus(1, 4).unwrap().m(), 2);
        assert_eq!(CategoryParams::plus(1, -1).unwrap().m(), 1);
    }

    #[test]
    fn s_squares_to_minus_q() {
        for k in 1..=10 {
            for m in 1..=k as i64 + 1 {
                let Ok(p) = CategoryParams::plus(k, m) else { continue };
                let s = p.s();
                assert_eq!(-(&s * &s), p.q());
                let d = -(&s * &s) - (&s * &s).inverse().unwrap();
                assert_eq!(d, p.delta());
            }
        }
    }
}
