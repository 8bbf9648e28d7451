//! Laurent polynomials over the rationals in one formal variable.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, LazyLock, RwLock};

use num::{BigInt, BigRational, One, Signed, Zero};

use super::field::CyclotomicNumber;
use super::integers::divisors;
use crate::error::{Error, Result};

/// A finite sum `Σ c_e x^e` with `e ∈ Z` and rational `c_e`.
///
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LaurentPoly {
    var: String,
    terms: BTreeMap<i64, BigRational>,
}

impl LaurentPoly {
    pub fn zero(var: &str) -> Self {
        LaurentPoly { var: var.to_string(), terms: BTreeMap::new() }
    }

    pub fn one(var: &str) -> Self {
        Self::monomial(var, BigRational::one(), 0)
    }

    pub fn monomial(var: &str, coeff: BigRational, exponent: i64) -> Self {
        let mut p = Self::zero(var);
        if !coeff.is_zero() {
            p.terms.insert(exponent, coeff);
        }
        p
    }

    /// Builds `Σ coeffs[i] x^(low + i)`.
    pub fn from_coeffs<T: Into<BigRational> + Clone>(var: &str, low: i64, coeffs: &[T]) -> Self {
        let mut p = Self::zero(var);
        for (i, c) in coeffs.iter().enumerate() {
            let c: BigRational = c.clone().into();
            if !c.is_zero() {
                p.terms.insert(low + i as i64, c);
            }
        }
        p
    }

    pub fn from_integers(var: &str, low: i64, coeffs: &[i64]) -> Self {
        let c: Vec<BigRational> = coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect();
        Self::from_coeffs(var, low, &c)
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigRational)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, exponent: i64) -> BigRational {
        self.terms.get(&exponent).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Multiplies by `x^shift`.
    pub fn shift(&self, shift: i64) -> Self {
        LaurentPoly {
            var: self.var.clone(),
            terms: self.terms.iter().map(|(&e, c)| (e + shift, c.clone())).collect(),
        }
    }

    fn check_var(&self, other: &Self) {
        assert_eq!(self.var, other.var, "Laurent polynomials in different variables");
    }

    fn add_term(&mut self, exponent: i64, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exponent).or_insert_with(BigRational::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exponent);
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(&self.var);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Exact division: returns `q` with `self = q · divisor`, or an error when no
    /// Laurent polynomial quotient exists.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        self.check_var(divisor);
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero(&self.var));
        }
        let (a_low, b_low) = (self.min_exponent().unwrap(), divisor.min_exponent().unwrap());
        let a = dense(self, a_low);
        let b = dense(divisor, b_low);
        if a.len() < b.len() {
            return Err(Error::InexactDivision);
        }
        let (q, r) = poly_divmod(&a, &b);
        if r.iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision);
        }
        Ok(Self::from_coeffs(&self.var, a_low - b_low, &q))
    }

    /// Evaluates at a cyclotomic number (negative powers require `x` invertible).
    pub fn evaluate(&self, x: &CyclotomicNumber) -> Result<CyclotomicNumber> {
        let zero = CyclotomicNumber::zero(x.order());
        if self.is_zero() {
            return Ok(zero);
        }
        let low = self.min_exponent().unwrap();
        let high = self.max_exponent().unwrap();
        // Horner on the shifted polynomial, then multiply by x^low.
        let mut acc = zero;
        for e in (low..=high).rev() {
            acc = &acc * x;
            let c = self.coeff(e);
            if !c.is_zero() {
                acc = &acc + &CyclotomicNumber::from_rational(x.order(), c);
            }
        }
        let scale = x.pow(low)?;
        Ok(&acc * &scale)
    }
}

fn dense(p: &LaurentPoly, low: i64) -> Vec<BigRational> {
    let high = p.max_exponent().unwrap();
    (low..=high).map(|e| p.coeff(e)).collect()
}

/// Long division of dense polynomials (low degree first).
fn poly_divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lead = b[db].clone();
    if a.len() < b.len() {
        return (vec![BigRational::zero()], r);
    }
    let mut q = vec![BigRational::zero(); a.len() - db];
    for i in (0..q.len()).rev() {
        let c = &r[i + db] / &lead;
        if !c.is_zero() {
            for (j, bj) in b.iter().enumerate() {
                r[i + j] -= &c * bj;
            }
        }
        q[i] = c;
    }
    r.truncate(db);
    (q, r)
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.check_var(rhs);
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            var: self.var.clone(),
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.check_var(rhs);
        let mut out = LaurentPoly::zero(&self.var);
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&e, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let unit = abs.is_one();
            match (e, unit) {
                (0, _) => write!(f, "{abs}")?,
                (_, true) => {}
                (_, false) => write!(f, "{abs}*")?,
            }
            match e {
                0 => {}
                1 => write!(f, "{}", self.var)?,
                _ => write!(f, "{}^{}", self.var, e)?,
            }
        }
        Ok(())
    }
}

static CYCLOTOMIC_POLYS: LazyLock<RwLock<HashMap<u32, Arc<Vec<BigInt>>>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

/// The `n`-th cyclotomic polynomial `Φ_n(x)`, as integer coefficients (low degree first).
pub(crate) fn cyclotomic_coeffs(n: u32) -> Arc<Vec<BigInt>> {
    assert!(n >= 1, "cyclotomic polynomial of order 0");
    if let Some(p) = CYCLOTOMIC_POLYS.read().unwrap().get(&n) {
        return p.clone();
    }
    // x^n - 1 divided by Φ_d for every proper divisor d of n.
    let mut num = vec![BigRational::zero(); n as usize + 1];
    num[0] = -BigRational::one();
    num[n as usize] = BigRational::one();
    for d in divisors(n) {
        if d == n {
            continue;
        }
        let phi_d: Vec<BigRational> =
            cyclotomic_coeffs(d).iter().map(|c| BigRational::from_integer(c.clone())).collect();
        let (q, r) = poly_divmod(&num, &phi_d);
        debug_assert!(r.iter().all(|c| c.is_zero()));
        num = q;
    }
    let coeffs: Vec<BigInt> = num
        .into_iter()
        .map(|c| {
            debug_assert!(c.is_integer());
            c.to_integer()
        })
        .collect();
    let coeffs = Arc::new(coeffs);
    CYCLOTOMIC_POLYS.write().unwrap().insert(n, coeffs.clone());
    coeffs
}

/// `Φ_n` as a Laurent polynomial in `x`.
pub fn cyclotomic_polynomial(n: u32) -> LaurentPoly {
    let c: Vec<BigRational> =
        cyclotomic_coeffs(n).iter().map(|c| BigRational::from_integer(c.clone())).collect();
    LaurentPoly::from_coeffs("x", 0, &c)
}
