use std::collections::BTreeSet;

use super::params::BraidingParams;
use crate::cyclotomic::integers::{gcd, units};
use crate::error::{Error, Result};

/// The parameters whose `s` is the image of this `s` under `ζ ↦ ζ^j`:
/// `ℓ' + k + 2 ≡ j(ℓ + k + 2) (mod 4(k+2))`.
pub fn galois_conjugate(bp: &BraidingParams, j: i64) -> Result<BraidingParams> {
    let n = bp.field_order() as i64;
    if gcd(j, n) != 1 {
        return Err(Error::NotCoprime { j, order: n as u32 });
    }
    let kk = bp.k() as i64 + 2;
    BraidingParams::new(bp.k(), j * bp.ell() as i64 + (j - 1) * kk, bp.sign())
}

/// Partition of the valid `ℓ ∈ Z/4(k+2)` into Galois orbits, each sorted.
pub fn galois_orbits(k: u32) -> Vec<Vec<u32>> {
    let n = 4 * (k + 2);
    let js = units(n);
    let mut seen = BTreeSet::new();
    let mut orbits = Vec::new();
    for ell in 0..n {
        let Ok(bp) = BraidingParams::plus(k, ell as i64) else { continue };
        if seen.contains(&ell) {
            continue;
        }
        let orbit: BTreeSet<u32> =
            js.iter().map(|&j| galois_conjugate(&bp, j as i64).expect("unit").ell()).collect();
        seen.extend(orbit.iter().copied());
        orbits.push(orbit.into_iter().collect());
    }
    orbits
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugation_moves_s() {
        let bp = BraidingParams::plus(3, 1).unwrap();
        for j in [1i64, 3, 7, 9, 11] {
            let c = galois_conjugate(&bp, j).unwrap();
            assert_eq!(c.s(), bp.s().galois_apply(j).unwrap());
        }
        assert_eq!(galois_conjugate(&bp, 1).unwrap(), bp);
        assert!(galois_conjugate(&bp, 2).is_err());
    }

    #[test]
    fn orbit_shapes() {
        assert_eq!(galois_orbits(2), vec![vec![1, 3, 5, 7, 9, 11, 13, 15]]);
        assert_eq!(galois_orbits(3).len(), 3);
    }
}
