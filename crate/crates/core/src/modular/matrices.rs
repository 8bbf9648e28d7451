use rayon::prelude::*;
use serde::Serialize;

use super::params::BraidingParams;
use crate::cyclotomic::integers::lcm;
use crate::cyclotomic::{quantum_integer, CyclotomicNumber};
use crate::error::{Error, Result};
use crate::fusion::{admissible, global_dim, multiplicity, PivotalSign};
use crate::linalg::{self, Matrix};

fn signed(v: CyclotomicNumber, negative: bool) -> CyclotomicNumber {
    if negative {
        -v
    } else {
        v
    }
}

/// `(-1)^{(a+b+c)/2} s^{(c(c+2) - a(a+2) - b(b+2))/2}`.
pub fn r_coeff(bp: &BraidingParams, a: u32, b: u32, c: u32) -> Result<CyclotomicNumber> {
    if !admissible(bp.k(), a, b, c) {
        return Err(Error::NotAdmissible(format!("R({a}, {b}; {c}) at level {}", bp.k())));
    }
    let cas = |x: u32| (x * (x + 2)) as i64;
    let twice = cas(c) - cas(a) - cas(b);
    if twice % 2 != 0 {
        return Err(Error::NotAdmissible(format!("half-integer exponent {twice}/2")));
    }
    Ok(signed(bp.s().pow(twice / 2)?, ((a + b + c) / 2) % 2 == 1))
}

/// The unnormalised `S_{ab} = (-1)^{a+b} [(a+1)(b+1)]`; the minus structure adds `(-1)^{a+b}`.
pub fn s_matrix(bp: &BraidingParams) -> Matrix {
    let s = bp.s();
    let n = bp.k() + 1;
    (0..n)
        .map(|a| {
            (0..n)
                .map(|b| {
                    let v = quantum_integer(((a + 1) * (b + 1)) as i64, &s).expect("s^4 ≠ 1");
                    signed(v, (a + b) % 2 == 1 && bp.sign() == PivotalSign::Plus)
                })
                .collect()
        })
        .collect()
}

/// `θ_a = (-1)^a s^{a(a+2)}` for the plus structure, `s^{a(a+2)}` for the minus one.
pub fn twist(bp: &BraidingParams, a: u32) -> CyclotomicNumber {
    let v = bp.s().pow((a * (a + 2)) as i64).expect("root of unity");
    signed(v, a % 2 == 1 && bp.sign() == PivotalSign::Plus)
}

/// The diagonal of `T`.
pub fn t_matrix(bp: &BraidingParams) -> Vec<CyclotomicNumber> {
    (0..=bp.k()).map(|a| twist(bp, a)).collect()
}

/// Exact rank of `S`.
pub fn modularity_rank(bp: &BraidingParams) -> usize {
    linalg::rank(&s_matrix(bp))
}

/// `(k+1)/2` when `k` and `ℓ` are both odd, otherwise `k+1`.
pub fn predicted_rank(k: u32, ell: u32) -> usize {
    if k % 2 == 1 && ell % 2 == 1 {
        (k as usize + 1) / 2
    } else {
        k as usize + 1
    }
}

/// Order of `T`, as the lcm of the orders of its entries.
pub fn conductor(bp: &BraidingParams) -> u32 {
    t_matrix(bp).iter().map(|t| t.multiplicative_order().expect("twists are roots of unity")).fold(1, lcm)
}

/// The conductor table keyed by `k + ℓ mod 4`, for the plus structure and `k ≥ 2`.
pub fn predicted_conductor(k: u32, ell: u32) -> u32 {
    match (k + ell) % 4 {
        0 => k + 2,
        2 => 2 * (k + 2),
        _ => 4 * (k + 2),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ModularReport {
    pub rank: usize,
    pub is_modular: bool,
    pub conductor: u32,
}

impl BraidingParams {
    pub fn modular_report(&self) -> ModularReport {
        let rank = modularity_rank(self);
        ModularReport { rank, is_modular: rank == self.k() as usize + 1, conductor: conductor(self) }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerlindeReport {
    pub k: u32,
    pub ell: u32,
    pub checked: usize,
    /// `(a, b, c)` where the Verlinde sum differs from the fusion rule.
    pub failures: Vec<[u32; 3]>,
}

impl VerlindeReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Recovers `N_{ab}^c` from a given `S` by the Verlinde formula.
pub fn verlinde_check_matrix(bp: &BraidingParams, s: &Matrix) -> Result<VerlindeReport> {
    let k = bp.k();
    let n = k as usize + 1;
    let inv_dim = global_dim(&bp.monoidal()).inverse()?;
    let inv_s0: Vec<CyclotomicNumber> = (0..n).map(|x| s[0][x].inverse()).collect::<Result<_>>()?;
    let triples: Vec<[u32; 3]> =
        (0..=k).flat_map(|a| (0..=k).flat_map(move |b| (0..=k).map(move |c| [a, b, c]))).collect();
    let failures = triples
        .par_iter()
        .filter(|&&[a, b, c]| {
            let (a, b, c) = (a as usize, b as usize, c as usize);
            let mut acc = CyclotomicNumber::zero(bp.field_order());
            for x in 0..n {
                acc += &(&(&s[a][x] * &s[b][x]) * &(&s[c][x].conjugate() * &inv_s0[x]));
            }
            let value = &acc * &inv_dim;
            value != CyclotomicNumber::from_integer(1, multiplicity(k, a as u32, b as u32, c as u32) as i64)
        })
        .copied()
        .collect();
    Ok(VerlindeReport { k, ell: bp.ell(), checked: triples.len(), failures })
}

/// Verlinde against the displayed `S`; requires a modular category.
pub fn verlinde_check(bp: &BraidingParams) -> Result<VerlindeReport> {
    if modularity_rank(bp) != bp.k() as usize + 1 {
        return Err(Error::InvalidParameters(format!("{bp} is not modular")));
    }
    verlinde_check_matrix(bp, &s_matrix(bp))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn r_examples() {
        let bp = BraidingParams::plus(3, 1).unwrap();
        let s = bp.s();
        assert_eq!(r_coeff(&bp, 1, 1, 0).unwrap(), -s.pow(-3).unwrap());
        assert_eq!(r_coeff(&bp, 1, 1, 2).unwrap(), s);
        assert!(r_coeff(&bp, 1, 1, 1).is_err());
    }

    #[test]
    fn a2_conductors() {
        let t = |l| conductor(&BraidingParams::plus(1, l).unwrap());
        assert_eq!([t(7), t(1), t(4), t(2)], [1, 2, 4, 4]);
    }

    #[test]
    fn small_ranks() {
        assert_eq!(modularity_rank(&BraidingParams::plus(3, 1).unwrap()), 2);
        assert_eq!(modularity_rank(&BraidingParams::plus(2, 1).unwrap()), 3);
        assert_eq!(modularity_rank(&BraidingParams::plus(1, 7).unwrap()), 1);
    }

    #[test]
    fn verlinde_small_and_fault() {
        let bp = BraidingParams::plus(2, 1).unwrap();
        assert!(verlinde_check(&bp).unwrap().passed());
        let mut s = s_matrix(&bp);
        s[1][2] = &s[1][2] + &CyclotomicNumber::one(1).promote(bp.field_order()).unwrap();
        assert!(!verlinde_check_matrix(&bp, &s).unwrap().passed());
    }
}
