//! Rational functions in a formal loop value `δ`, restricted to denominators
//! that are products of the polynomials `ψ_d(δ)`, the minimal polynomial of
//! `2cos(2π/d)`. Every Chebyshev value `[n](δ)` factors into `ψ_d` with
//! `d | 2n`, so this ring is closed under the divisions the Jones–Wenzl
//! recursion performs.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, LazyLock, RwLock};

use num::integer::Integer;
use num::{BigInt, One, Signed, Zero};

use crate::cyclotomic::integers::{divisors, totient};
use crate::cyclotomic::{cyclotomic_polynomial, CyclotomicNumber};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

type Poly = Vec<BigInt>;

static PSI: LazyLock<RwLock<HashMap<u32, Arc<Poly>>>> = LazyLock::new(|| RwLock::new(HashMap::new()));

/// `ψ_d(δ)` as a monic integer polynomial, low degree first.
pub fn psi(d: u32) -> Arc<Poly> {
    if let Some(p) = PSI.read().unwrap().get(&d) {
        return p.clone();
    }
    let p = match d {
        1 => vec![BigInt::from(-2), BigInt::one()],
        2 => vec![BigInt::from(2), BigInt::one()],
        _ => {
            // x^{-h} Φ_d(x) = p_h + Σ_j p_{h+j} (x^j + x^{-j}), and
            // V_j = x^j + x^{-j} satisfies V_{j+1} = δ V_j - V_{j-1}.
            let phi = cyclotomic_polynomial(d);
            let h = (totient(d) / 2) as i64;
            let c = |i: i64| phi.coeff(i).to_integer();
            let mut out = vec![c(h)];
            let mut v_prev: Poly = vec![BigInt::from(2)];
            let mut v: Poly = vec![BigInt::zero(), BigInt::one()];
            for j in 1..=h {
                add_scaled(&mut out, &v, &c(h + j));
                let next = sub(&shift(&v, 1), &v_prev);
                v_prev = std::mem::replace(&mut v, next);
            }
            trim(&mut out);
            out
        }
    };
    let p = Arc::new(p);
    PSI.write().unwrap().insert(d, p.clone());
    p
}

fn trim(p: &mut Poly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn shift(p: &Poly, k: usize) -> Poly {
    if p.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); k];
    out.extend(p.iter().cloned());
    out
}

fn add_scaled(acc: &mut Poly, p: &Poly, c: &BigInt) {
    if c.is_zero() {
        return;
    }
    if acc.len() < p.len() {
        acc.resize(p.len(), BigInt::zero());
    }
    for (a, b) in acc.iter_mut().zip(p) {
        if !b.is_zero() {
            *a += b * c;
        }
    }
}

fn sub(a: &Poly, b: &Poly) -> Poly {
    let mut out = a.clone();
    add_scaled(&mut out, b, &BigInt::from(-1));
    trim(&mut out);
    out
}

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

/// Exact quotient by a monic polynomial, if the remainder vanishes.
fn div_monic(a: &Poly, m: &Poly) -> Option<Poly> {
    let dm = m.len() - 1;
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() <= dm {
        return None;
    }
    let mut r = a.clone();
    let mut q = vec![BigInt::zero(); a.len() - dm];
    for i in (0..q.len()).rev() {
        let c = std::mem::take(&mut r[i + dm]);
        if c.is_zero() {
            continue;
        }
        for j in 0..dm {
            r[i + j] -= &c * &m[j];
        }
        q[i] = c;
    }
    r[..dm].iter().all(|c| c.is_zero()).then_some(q)
}

fn psi_product(factors: &BTreeMap<u32, u32>) -> Poly {
    let mut acc = vec![BigInt::one()];
    for (&d, &e) in factors {
        for _ in 0..e {
            acc = poly_mul(&acc, &psi(d));
        }
    }
    acc
}

/// `num(δ) / (den_const · ∏ ψ_d(δ)^{e_d})`.
#[derive(Clone)]
pub struct RationalFunction {
    num: Poly,
    den_const: BigInt,
    den: BTreeMap<u32, u32>,
}

impl RationalFunction {
    pub fn zero() -> Self {
        RationalFunction { num: Vec::new(), den_const: BigInt::one(), den: BTreeMap::new() }
    }

    pub fn from_integer(n: i64) -> Self {
        let mut r = Self::zero();
        if n != 0 {
            r.num = vec![BigInt::from(n)];
        }
        r
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    /// The formal loop value.
    pub fn delta() -> Self {
        RationalFunction { num: vec![BigInt::zero(), BigInt::one()], ..Self::zero() }
    }

    /// `[n](δ) = ∏_{d | 2n, d ≥ 3} ψ_d(δ)`.
    pub fn chebyshev(n: u32) -> Self {
        if n == 0 {
            return Self::zero();
        }
        let mut num = vec![BigInt::one()];
        for d in divisors(2 * n) {
            if d >= 3 {
                num = poly_mul(&num, &psi(d));
            }
        }
        RationalFunction { num, ..Self::zero() }
    }

    pub fn numerator(&self) -> &[BigInt] {
        &self.num
    }

    fn den_poly(&self) -> Poly {
        let mut p = psi_product(&self.den);
        for c in &mut p {
            *c *= &self.den_const;
        }
        p
    }

    fn cofactor(&self, lcm: &BTreeMap<u32, u32>) -> BTreeMap<u32, u32> {
        lcm.iter()
            .filter_map(|(&d, &e)| {
                let have = self.den.get(&d).copied().unwrap_or(0);
                (e > have).then_some((d, e - have))
            })
            .collect()
    }

    fn combine(&self, other: &Self, sign: i64) -> Self {
        if other.num.is_empty() {
            return self.clone();
        }
        if self.num.is_empty() {
            return if sign > 0 { other.clone() } else { other.neg_ref() };
        }
        let sign = BigInt::from(sign);
        if self.den == other.den && self.den_const == other.den_const {
            let mut num = self.num.clone();
            add_scaled(&mut num, &other.num, &sign);
            trim(&mut num);
            return RationalFunction { num, den_const: self.den_const.clone(), den: self.den.clone() };
        }
        let mut den = self.den.clone();
        for (&d, &e) in &other.den {
            let slot = den.entry(d).or_insert(0);
            *slot = (*slot).max(e);
        }
        let den_const = self.den_const.lcm(&other.den_const);
        let mut a = poly_mul(&self.num, &psi_product(&self.cofactor(&den)));
        let b = poly_mul(&other.num, &psi_product(&other.cofactor(&den)));
        let ca = &den_const / &self.den_const;
        let cb = &den_const / &other.den_const * sign;
        if !ca.is_one() {
            for c in &mut a {
                *c *= &ca;
            }
        }
        add_scaled(&mut a, &b, &cb);
        trim(&mut a);
        RationalFunction { num: a, den_const, den }
    }

    /// Cancels `ψ` factors and integer content; the result is canonical.
    fn reduce(&mut self) {
        if self.num.is_empty() {
            self.den.clear();
            self.den_const = BigInt::one();
            return;
        }
        let keys: Vec<u32> = self.den.keys().copied().collect();
        for d in keys {
            let p = psi(d);
            while self.den[&d] > 0 {
                match div_monic(&self.num, &p) {
                    Some(q) => {
                        self.num = q;
                        *self.den.get_mut(&d).unwrap() -= 1;
                    }
                    None => break,
                }
            }
        }
        self.den.retain(|_, e| *e > 0);
        let mut g = self.den_const.clone();
        for c in &self.num {
            if g.is_one() {
                break;
            }
            g = g.gcd(c);
        }
        if !g.is_one() {
            for c in &mut self.num {
                *c = &*c / &g;
            }
            self.den_const = &self.den_const / &g;
        }
    }

    /// Splits a numerator into `ψ` factors, if it is a product of them up to a constant.
    fn factor_psi(num: &Poly) -> Option<(BigInt, BTreeMap<u32, u32>)> {
        let mut rest = num.clone();
        let mut factors = BTreeMap::new();
        let mut d = 1u32;
        while rest.len() > 1 {
            // deg ψ_d = φ(d)/2 ≥ √(d/2)/2, which bounds the search.
            let deg = if d <= 2 { 1 } else { (totient(d) / 2) as usize };
            if d > 8 * (rest.len() as u32).pow(2) + 8 {
                return None;
            }
            if deg < rest.len() {
                let p = psi(d);
                while let Some(q) = div_monic(&rest, &p) {
                    rest = q;
                    *factors.entry(d).or_insert(0) += 1;
                }
            }
            d += 1;
        }
        rest.first().map(|c| (c.clone(), factors))
    }

    /// Value at a concrete loop value.
    pub fn evaluate(&self, delta: &CyclotomicNumber) -> Result<CyclotomicNumber> {
        let eval = |p: &Poly| {
            let mut acc = CyclotomicNumber::zero(delta.order());
            for c in p.iter().rev() {
                acc = &(&acc * delta) + &CyclotomicNumber::from_bigint(delta.order(), c.clone());
            }
            acc
        };
        let n = eval(&self.num);
        if self.den.is_empty() && self.den_const.is_one() {
            return Ok(n);
        }
        let d = eval(&self.den_poly());
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        n.checked_div(&d)
    }
}

impl Default for RationalFunction {
    fn default() -> Self {
        Self::zero()
    }
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        let mut l = poly_mul(&self.num, &other.den_poly());
        let mut r = poly_mul(&other.num, &self.den_poly());
        trim(&mut l);
        trim(&mut r);
        l == r
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn fmt_poly(p: &Poly) -> String {
    if p.is_empty() {
        return "0".into();
    }
    let mut s = String::new();
    for (i, c) in p.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let a = c.abs();
        if s.is_empty() {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        match (i, a.is_one()) {
            (0, _) => s.push_str(&a.to_string()),
            (1, true) => s.push('d'),
            (1, false) => s.push_str(&format!("{a}*d")),
            (_, true) => s.push_str(&format!("d^{i}")),
            (_, false) => s.push_str(&format!("{a}*d^{i}")),
        }
    }
    s
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut r = self.clone();
        r.reduce();
        let num = fmt_poly(&r.num);
        if r.den.is_empty() && r.den_const.is_one() {
            return write!(f, "{num}");
        }
        let mut parts = Vec::new();
        if !r.den_const.is_one() {
            parts.push(r.den_const.to_string());
        }
        for (&d, &e) in &r.den {
            let p = format!("({})", fmt_poly(&psi(d)));
            parts.push(if e == 1 { p } else { format!("{p}^{e}") });
        }
        write!(f, "({num})/({})", parts.join("*"))
    }
}

impl Scalar for RationalFunction {
    fn zero_like(&self) -> Self {
        Self::zero()
    }
    fn one_like(&self) -> Self {
        Self::one()
    }
    fn from_i64_like(&self, n: i64) -> Self {
        Self::from_integer(n)
    }
    fn is_zero(&self) -> bool {
        self.num.is_empty()
    }
    fn add_ref(&self, other: &Self) -> Self {
        self.combine(other, 1)
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self.combine(other, -1)
    }
    fn mul_ref(&self, other: &Self) -> Self {
        if self.num.is_empty() || other.num.is_empty() {
            return Self::zero();
        }
        let mut den = self.den.clone();
        for (&d, &e) in &other.den {
            *den.entry(d).or_insert(0) += e;
        }
        let mut r = RationalFunction {
            num: poly_mul(&self.num, &other.num),
            den_const: &self.den_const * &other.den_const,
            den,
        };
        r.reduce();
        r
    }
    fn neg_ref(&self) -> Self {
        RationalFunction {
            num: self.num.iter().map(|c| -c).collect(),
            den_const: self.den_const.clone(),
            den: self.den.clone(),
        }
    }
    fn try_div_ref(&self, other: &Self) -> Result<Self> {
        let mut o = other.clone();
        o.reduce();
        if o.num.is_empty() {
            return Err(Error::DivisionByZero);
        }
        let (c, factors) = Self::factor_psi(&o.num)
            .ok_or_else(|| Error::NotInvertible(format!("{o} has a factor outside the psi family")))?;
        // self / (c·∏ψ^f / (k·∏ψ^g)) = self·k·∏ψ^g / (c·∏ψ^f)
        let mut num = poly_mul(&self.num, &psi_product(&o.den));
        for x in &mut num {
            *x *= &o.den_const;
        }
        let mut den = self.den.clone();
        for (d, e) in factors {
            *den.entry(d).or_insert(0) += e;
        }
        let mut den_const = &self.den_const * &c;
        if den_const.is_negative() {
            den_const = -den_const;
            for x in &mut num {
                *x = -std::mem::take(x);
            }
        }
        let mut r = RationalFunction { num, den_const, den };
        r.reduce();
        Ok(r)
    }
    fn normalize(&mut self) {
        self.reduce();
    }
    fn mul_loop_power(&self, _delta: &Self, loops: u32) -> Self {
        RationalFunction { num: shift(&self.num, loops as usize), ..self.clone() }
    }
}

impl From<i64> for RationalFunction {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::chebyshev;

    fn ints(p: &[i64]) -> Poly {
        p.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn small_psi() {
        assert_eq!(*psi(3), ints(&[1, 1]));
        assert_eq!(*psi(4), ints(&[0, 1]));
        assert_eq!(*psi(5), ints(&[-1, 1, 1]));
        assert_eq!(*psi(6), ints(&[-1, 1]));
        assert_eq!(*psi(8), ints(&[-2, 0, 1]));
    }

    #[test]
    fn psi_vanishes_at_two_cos() {
        for d in 3..=40u32 {
            let z = CyclotomicNumber::root_of_unity(d, 1);
            let delta = &z + &z.conjugate();
            let p = RationalFunction { num: psi(d).as_ref().clone(), ..RationalFunction::zero() };
            assert!(p.evaluate(&delta).unwrap().is_zero(), "d = {d}");
        }
    }

    #[test]
    fn factored_chebyshev_matches_recurrence() {
        let d = RationalFunction::delta();
        for n in 0..=16 {
            assert_eq!(RationalFunction::chebyshev(n), chebyshev(n as usize, &d), "n = {n}");
        }
    }

    #[test]
    fn division_and_cancellation() {
        let c3 = RationalFunction::chebyshev(3);
        let c2 = RationalFunction::chebyshev(2);
        let r = c2.try_div_ref(&c3).unwrap();
        assert_eq!(r.mul_ref(&c3), c2);
        let back = r.mul_ref(&c3.try_div_ref(&c2).unwrap());
        assert_eq!(back, RationalFunction::one());
        assert_eq!(back.num, ints(&[1]));
        let bad = RationalFunction { num: ints(&[1, 0, 1]), ..RationalFunction::zero() };
        assert!(matches!(c2.try_div_ref(&bad), Err(Error::NotInvertible(_))));
        assert_eq!(c2.try_div_ref(&RationalFunction::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn lazy_sums_compare_by_value() {
        let a = RationalFunction::one().try_div_ref(&RationalFunction::chebyshev(2)).unwrap();
        let b = RationalFunction::one().try_div_ref(&RationalFunction::chebyshev(3)).unwrap();
        let s = a.add_ref(&b).sub_ref(&b);
        assert_eq!(s, a);
        assert!(a.sub_ref(&a).is_zero());
    }
}
