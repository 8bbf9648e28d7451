//! Exact elements of the cyclotomic fields `Q(ζ_N)`.
//!
//! Elements are stored in the power basis `1, ζ, …, ζ^(d-1)` with `d = φ(N)`,
//! reduced modulo `Φ_N`, as integer numerators over one positive common
//! denominator. Equality is therefore coefficient equality.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::{Arc, LazyLock, RwLock};

use num::integer::Integer;
use num::{BigInt, BigRational, One, Signed, Zero};

use super::integers::{gcd, lcm, modulo, units};
use super::laurent::cyclotomic_coeffs;
use crate::error::{Error, Result};

/// Precomputed structure of `Q(ζ_N)`.
#[derive(Debug)]
pub(crate) struct FieldData {
    order: u32,
    degree: usize,
    /// Monic `Φ_N`, low degree first, length `degree + 1`.
    phi: Vec<BigInt>,
    /// `ζ^j` in the power basis, for `j` in `0..order`.
    powers: Vec<Vec<BigInt>>,
}

static FIELDS: LazyLock<RwLock<HashMap<u32, Arc<FieldData>>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

pub(crate) fn field(order: u32) -> Arc<FieldData> {
    assert!(order >= 1, "cyclotomic order must be positive");
    if let Some(f) = FIELDS.read().unwrap().get(&order) {
        return f.clone();
    }
    let phi = cyclotomic_coeffs(order).as_ref().clone();
    let degree = phi.len() - 1;
    let mut powers = Vec::with_capacity(order as usize);
    let mut current = vec![BigInt::zero(); degree];
    current[0] = BigInt::one();
    for _ in 0..order {
        powers.push(current.clone());
        // multiply by ζ: shift up and reduce the overflow coefficient.
        let top = current[degree - 1].clone();
        for i in (1..degree).rev() {
            current[i] = current[i - 1].clone();
        }
        current[0] = BigInt::zero();
        if !top.is_zero() {
            for i in 0..degree {
                current[i] -= &top * &phi[i];
            }
        }
    }
    let data = Arc::new(FieldData { order, degree, phi, powers });
    FIELDS.write().unwrap().insert(order, data.clone());
    data
}

impl FieldData {
    /// Reduces a dense integer polynomial modulo `Φ_N` in place and truncates it.
    fn reduce(&self, mut poly: Vec<BigInt>) -> Vec<BigInt> {
        let d = self.degree;
        if poly.len() > d {
            for t in (d..poly.len()).rev() {
                let c = std::mem::take(&mut poly[t]);
                if c.is_zero() {
                    continue;
                }
                for i in 0..d {
                    poly[t - d + i] -= &c * &self.phi[i];
                }
            }
        }
        poly.resize(d, BigInt::zero());
        poly
    }
}

#[derive(Clone)]
pub struct CyclotomicNumber {
    field: Arc<FieldData>,
    num: Vec<BigInt>,
    den: BigInt,
}

impl CyclotomicNumber {
    fn from_parts(field: Arc<FieldData>, num: Vec<BigInt>, den: BigInt) -> Self {
        let mut x = CyclotomicNumber { field, num, den };
        x.normalize();
        x
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -std::mem::take(&mut self.den);
            for c in &mut self.num {
                *c = -std::mem::take(c);
            }
        }
        if self.den.is_one() {
            return;
        }
        if self.num.iter().all(|c| c.is_zero()) {
            self.den = BigInt::one();
            return;
        }
        let mut g = self.den.clone();
        for c in &self.num {
            if g.is_one() {
                return;
            }
            if !c.is_zero() {
                g = g.gcd(c);
            }
        }
        if !g.is_one() {
            for c in &mut self.num {
                *c = &*c / &g;
            }
            self.den = &self.den / &g;
        }
    }

    pub fn zero(order: u32) -> Self {
        let f = field(order);
        let num = vec![BigInt::zero(); f.degree];
        CyclotomicNumber { field: f, num, den: BigInt::one() }
    }

    pub fn one(order: u32) -> Self {
        Self::from_integer(order, 1)
    }

    pub fn from_integer(order: u32, n: i64) -> Self {
        Self::from_bigint(order, BigInt::from(n))
    }

    pub fn from_bigint(order: u32, n: BigInt) -> Self {
        let mut x = Self::zero(order);
        x.num[0] = n;
        x
    }

    pub fn from_rational(order: u32, r: BigRational) -> Self {
        let f = field(order);
        let mut num = vec![BigInt::zero(); f.degree];
        num[0] = r.numer().clone();
        Self::from_parts(f, num, r.denom().clone())
    }

    /// Builds `Σ coeffs[i] ζ_N^i`; any length is accepted and reduced modulo `Φ_N`.
    pub fn from_coeffs(order: u32, coeffs: &[BigRational]) -> Self {
        let f = field(order);
        let den = coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let poly: Vec<BigInt> = coeffs.iter().map(|c| c.numer() * (&den / c.denom())).collect();
        let num = f.reduce(poly);
        Self::from_parts(f, num, den)
    }

    /// `ζ_N^j`.
    pub fn root_of_unity(order: u32, j: i64) -> Self {
        let f = field(order);
        let idx = modulo(j, order as i64) as usize;
        let num = f.powers[idx].clone();
        CyclotomicNumber { field: f, num, den: BigInt::one() }
    }

    pub fn order(&self) -> u32 {
        self.field.order
    }

    /// Dimension of the field over `Q`, i.e. `φ(N)`.
    pub fn degree(&self) -> usize {
        self.field.degree
    }

    /// Power-basis coefficients.
    pub fn coeffs(&self) -> Vec<BigRational> {
        self.num.iter().map(|c| BigRational::new(c.clone(), self.den.clone())).collect()
    }

    pub(crate) fn numerators(&self) -> &[BigInt] {
        &self.num
    }

    pub(crate) fn denominator(&self) -> &BigInt {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(|c| c.is_zero())
    }

    /// The rational value, when the element lies in `Q`.
    pub fn to_rational(&self) -> Option<BigRational> {
        if self.num[1..].iter().all(|c| c.is_zero()) {
            Some(BigRational::new(self.num[0].clone(), self.den.clone()))
        } else {
            None
        }
    }

    fn check_order(&self, other: &Self) {
        assert_eq!(
            self.field.order, other.field.order,
            "cyclotomic orders differ; promote both operands explicitly"
        );
    }

    fn add_impl(&self, other: &Self, negate: bool) -> Self {
        self.check_order(other);
        let num: Vec<BigInt> = if self.den == other.den {
            self.num
                .iter()
                .zip(&other.num)
                .map(|(a, b)| if negate { a - b } else { a + b })
                .collect()
        } else {
            self.num
                .iter()
                .zip(&other.num)
                .map(|(a, b)| {
                    let l = a * &other.den;
                    let r = b * &self.den;
                    if negate {
                        l - r
                    } else {
                        l + r
                    }
                })
                .collect()
        };
        let den = if self.den == other.den { self.den.clone() } else { &self.den * &other.den };
        Self::from_parts(self.field.clone(), num, den)
    }

    fn mul_impl(&self, other: &Self) -> Self {
        self.check_order(other);
        let d = self.field.degree;
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.order());
        }
        let mut prod = vec![BigInt::zero(); 2 * d - 1];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.num.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        let num = self.field.reduce(prod);
        Self::from_parts(self.field.clone(), num, &self.den * &other.den)
    }

    /// Multiplies by a rational scalar.
    pub fn scale(&self, r: &BigRational) -> Self {
        let num = self.num.iter().map(|c| c * r.numer()).collect();
        Self::from_parts(self.field.clone(), num, &self.den * r.denom())
    }

    /// Applies the automorphism `ζ ↦ ζ^j`.
    pub fn galois_apply(&self, j: i64) -> Result<Self> {
        let n = self.order() as i64;
        if gcd(j, n) != 1 {
            return Err(Error::NotCoprime { j, order: self.order() });
        }
        let f = &self.field;
        let mut out = vec![BigInt::zero(); f.degree];
        for (i, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let p = &f.powers[modulo(i as i64 * j, n) as usize];
            for (o, b) in out.iter_mut().zip(p) {
                if !b.is_zero() {
                    *o += c * b;
                }
            }
        }
        Ok(Self::from_parts(self.field.clone(), out, self.den.clone()))
    }

    /// Complex conjugation, `galois_apply(-1)`.
    pub fn conjugate(&self) -> Self {
        self.galois_apply(-1).expect("-1 is always a unit")
    }

    /// Field norm down to `Q`.
    pub fn norm(&self) -> BigRational {
        let mut acc = Self::one(self.order());
        for j in units(self.order()) {
            acc = &acc * &self.galois_apply(j as i64).unwrap();
        }
        acc.to_rational().expect("norm is rational")
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.to_rational() {
            return Ok(Self::from_rational(self.order(), r.recip()));
        }
        // a^{-1} = (product of the other conjugates) / N(a)
        let mut others = Self::one(self.order());
        for j in units(self.order()) {
            if j == 1 {
                continue;
            }
            others = &others * &self.galois_apply(j as i64).unwrap();
        }
        let norm = (&others * self).to_rational().expect("norm is rational");
        Ok(others.scale(&norm.recip()))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inverse()?)
    }

    /// Integer power; negative exponents need an invertible base.
    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::one(self.order());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Embeds into `Q(ζ_M)`; requires `N | M`.
    pub fn promote(&self, target: u32) -> Result<Self> {
        let n = self.order();
        if target % n != 0 {
            return Err(Error::InvalidParameters(format!(
                "cannot embed Q(zeta_{n}) into Q(zeta_{target})"
            )));
        }
        if target == n {
            return Ok(self.clone());
        }
        let f = field(target);
        let step = (target / n) as usize;
        let mut out = vec![BigInt::zero(); f.degree];
        for (i, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, b) in out.iter_mut().zip(&f.powers[i * step]) {
                if !b.is_zero() {
                    *o += c * b;
                }
            }
        }
        Ok(Self::from_parts(f, out, self.den.clone()))
    }

    /// Promotes both operands to `Q(ζ_lcm)`.
    pub fn promote_pair(a: &Self, b: &Self) -> (Self, Self) {
        let m = lcm(a.order(), b.order());
        (a.promote(m).unwrap(), b.promote(m).unwrap())
    }

    /// Returns `j` in `0..N` with `self = ζ_N^j`, if the element is such a power.
    pub fn as_root_of_unity(&self) -> Option<u32> {
        if !self.den.is_one() {
            return None;
        }
        self.field.powers.iter().position(|p| *p == self.num).map(|j| j as u32)
    }

    /// Multiplicative order, for elements that are roots of unity.
    pub fn multiplicative_order(&self) -> Option<u32> {
        let n = self.order();
        // Roots of unity in Q(ζ_N) are ±ζ_N^j; -ζ_N^j lies among the powers
        // when N is even and otherwise is a 2N-th root of unity.
        if let Some(j) = self.as_root_of_unity() {
            return Some(n / gcd(j as i64, n as i64) as u32);
        }
        if n % 2 == 1 {
            let neg = -self;
            if let Some(j) = neg.as_root_of_unity() {
                let o = n / gcd(j as i64, n as i64) as u32;
                return Some(lcm(o, 2));
            }
        }
        None
    }
}

impl PartialEq for CyclotomicNumber {
    /// Value equality; operands of different orders are compared in the
    /// common field.
    fn eq(&self, other: &Self) -> bool {
        if self.order() == other.order() {
            self.den == other.den && self.num == other.num
        } else {
            let (a, b) = Self::promote_pair(self, other);
            a == b
        }
    }
}

impl Eq for CyclotomicNumber {}

impl fmt::Debug for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CyclotomicNumber({self})")
    }
}

impl fmt::Display for CyclotomicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let n = self.order();
        let mut first = true;
        for (i, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let r = BigRational::new(c.clone(), self.den.clone());
            let neg = r.is_negative();
            let abs = r.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let coeff = if abs.is_integer() { abs.to_integer().to_string() } else { format!("({abs})") };
            match (i, abs.is_one()) {
                (0, _) => write!(f, "{coeff}")?,
                (1, true) => write!(f, "z{n}")?,
                (1, false) => write!(f, "{coeff}*z{n}")?,
                (_, true) => write!(f, "z{n}^{i}")?,
                (_, false) => write!(f, "{coeff}*z{n}^{i}")?,
            }
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&CyclotomicNumber> for &CyclotomicNumber {
            type Output = CyclotomicNumber;
            fn $method(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
                let f: fn(&CyclotomicNumber, &CyclotomicNumber) -> CyclotomicNumber = $body;
                f(self, rhs)
            }
        }
        impl $tr<CyclotomicNumber> for CyclotomicNumber {
            type Output = CyclotomicNumber;
            fn $method(self, rhs: CyclotomicNumber) -> CyclotomicNumber {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&CyclotomicNumber> for CyclotomicNumber {
            type Output = CyclotomicNumber;
            fn $method(self, rhs: &CyclotomicNumber) -> CyclotomicNumber {
                (&self).$method(rhs)
            }
        }
        impl $tr<CyclotomicNumber> for &CyclotomicNumber {
            type Output = CyclotomicNumber;
            fn $method(self, rhs: CyclotomicNumber) -> CyclotomicNumber {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.add_impl(b, false));
forward_binop!(Sub, sub, |a, b| a.add_impl(b, true));
forward_binop!(Mul, mul, |a, b| a.mul_impl(b));
forward_binop!(Div, div, |a, b| a.checked_div(b).expect("cyclotomic division by zero"));

impl Neg for &CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        CyclotomicNumber {
            field: self.field.clone(),
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}

impl Neg for CyclotomicNumber {
    type Output = CyclotomicNumber;
    fn neg(self) -> CyclotomicNumber {
        -&self
    }
}

impl AddAssign<&CyclotomicNumber> for CyclotomicNumber {
    fn add_assign(&mut self, rhs: &CyclotomicNumber) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&CyclotomicNumber> for CyclotomicNumber {
    fn sub_assign(&mut self, rhs: &CyclotomicNumber) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&CyclotomicNumber> for CyclotomicNumber {
    fn mul_assign(&mut self, rhs: &CyclotomicNumber) {
        *self = &*self * rhs;
    }
}
