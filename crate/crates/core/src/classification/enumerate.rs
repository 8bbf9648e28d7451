use serde::Serialize;

use super::tables::A2Name;
use crate::cyclotomic::integers::gcd;
use crate::cyclotomic::CyclotomicNumber;
use crate::fusion::CategoryParams;
use crate::modular::BraidingParams;

#[derive(Debug, Clone, Serialize)]
pub struct MonoidalEntry {
    pub m: u32,
    /// The complete invariant `q + q^{-1}`.
    pub delta: CyclotomicNumber,
}

/// One representative `m ∈ 1..=k+1` per monoidal category.
pub fn enumerate_monoidal(k: u32) -> Vec<MonoidalEntry> {
    (1..=k + 1)
        .filter_map(|m| CategoryParams::plus(k, m as i64).ok())
        .map(|p| MonoidalEntry { m: p.m(), delta: p.delta() })
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct BraidedEntry {
    pub ell: u32,
    /// The underlying monoidal parameter.
    pub m: u32,
    /// The usual name when `k = 1`.
    pub name: Option<A2Name>,
}

/// All valid `ℓ ∈ Z/4(k+2)`; at `k = 1` each is annotated with its named category.
pub fn enumerate_braided(k: u32) -> Vec<BraidedEntry> {
    let n = 4 * (k + 2);
    (0..n)
        .filter(|&ell| gcd(ell as i64, k as i64 + 2) == 1)
        .map(|ell| {
            let bp = BraidingParams::plus(k, ell as i64).expect("valid ℓ");
            let name = if k == 1 { A2Name::ALL.into_iter().find(|a| a.ells().contains(&ell)) } else { None };
            BraidedEntry { ell, m: bp.monoidal().m(), name }
        })
        .collect()
}

/// The four braided categories with `A_2` fusion rules and their two `ℓ` each.
pub fn a2_categories() -> Vec<(A2Name, [u32; 2])> {
    A2Name::ALL.iter().map(|&a| (a, a.ells())).collect()
}

/// `ℓ₁ ≡ ±ℓ₂ (mod 2(k+2))`.
pub fn monoidal_equiv(k: u32, ell1: i64, ell2: i64) -> bool {
    let n = 2 * (k as i64 + 2);
    (ell1 - ell2).rem_euclid(n) == 0 || (ell1 + ell2).rem_euclid(n) == 0
}

/// Braided `ℓ` grouped by underlying monoidal category, ordered by `m`.
pub fn braided_classes(k: u32) -> Vec<(u32, Vec<u32>)> {
    let mut out: Vec<(u32, Vec<u32>)> = Vec::new();
    for e in enumerate_braided(k) {
        match out.iter_mut().find(|(m, _)| *m == e.m) {
            Some((_, v)) => v.push(e.ell),
            None => out.push((e.m, vec![e.ell])),
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(enumerate_monoidal(1).iter().map(|e| e.m).collect::<Vec<_>>(), vec![1, 2]);
        assert_eq!(enumerate_monoidal(2).iter().map(|e| e.m).collect::<Vec<_>>(), vec![1, 3]);
        let ells: Vec<u32> = enumerate_braided(2).iter().map(|e| e.ell).collect();
        assert_eq!(ells, vec![1, 3, 5, 7, 9, 11, 13, 15]);
        assert_eq!(enumerate_braided(3).len(), 16);
    }

    #[test]
    fn equivalence_examples() {
        assert!(monoidal_equiv(3, 1, 9));
        assert!(!monoidal_equiv(3, 1, 3));
    }

    #[test]
    fn k1_named() {
        let e = enumerate_braided(1);
        assert_eq!(e.len(), 8);
        assert!(e.iter().all(|x| x.name.is_some()));
    }
}
