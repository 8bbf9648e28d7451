//! Fusion rules and admissibility at level `k`.

use serde::Serialize;

use crate::error::{Error, Result};

/// Parity, triangle inequality and the level cutoff `a + b + c ≤ 2k`.
pub fn admissible(k: u32, a: u32, b: u32, c: u32) -> bool {
    a <= k
        && b <= k
        && c <= k
        && (a + b + c) % 2 == 0
        && a <= b + c
        && b <= a + c
        && c <= a + b
        && a + b + c <= 2 * k
}

/// Parity and triangle inequality only, with no level.
pub fn admissible_generic(a: u32, b: u32, c: u32) -> bool {
    (a + b + c) % 2 == 0 && a <= b + c && b <= a + c && c <= a + b
}

/// An admissible triple with its strand counts `u, v, w`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct AdmissibleTriple {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub u: u32,
    pub v: u32,
    pub w: u32,
}

impl AdmissibleTriple {
    pub fn new(k: u32, a: u32, b: u32, c: u32) -> Result<Self> {
        if !admissible(k, a, b, c) {
            return Err(Error::NotAdmissible(format!("{a}, {b}, {c} at level {k}")));
        }
        Ok(AdmissibleTriple { a, b, c, u: (b + c - a) / 2, v: (a + c - b) / 2, w: (a + b - c) / 2 })
    }
}

/// `X_i ⊗ X_j` as the list of summands, each with multiplicity one.
pub fn fuse(k: u32, i: u32, j: u32) -> Vec<u32> {
    if i > k || j > k {
        return Vec::new();
    }
    let lo = i.abs_diff(j);
    let hi = (i + j).min(2 * k - (i + j).min(2 * k));
    let hi = if i + j <= k { i + j } else { hi };
    (lo..=hi).step_by(2).collect()
}

/// `N_{ij}^l`.
pub fn multiplicity(k: u32, i: u32, j: u32, l: u32) -> u32 {
    u32::from(fuse(k, i, j).contains(&l))
}

/// Labels of a 6j symbol `{a b e; c d f}` and the derived sums.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SixJLabels {
    pub a: u32,
    pub b: u32,
    pub e: u32,
    pub c: u32,
    pub d: u32,
    pub f: u32,
}

impl SixJLabels {
    pub fn new(a: u32, b: u32, e: u32, c: u32, d: u32, f: u32) -> Self {
        SixJLabels { a, b, e, c, d, f }
    }

    /// The four vertex triples `(a,d,e), (b,c,e), (a,b,f), (c,d,f)`.
    pub fn triples(&self) -> [(u32, u32, u32); 4] {
        let SixJLabels { a, b, e, c, d, f } = *self;
        [(a, d, e), (b, c, e), (a, b, f), (c, d, f)]
    }

    pub fn is_admissible(&self, k: u32) -> bool {
        self.triples().iter().all(|&(x, y, z)| admissible(k, x, y, z))
    }

    /// `a_1..a_4`; meaningful once all triples have even sums.
    pub fn a_sums(&self) -> [u32; 4] {
        let SixJLabels { a, b, e, c, d, f } = *self;
        [(a + d + e) / 2, (b + c + e) / 2, (a + b + f) / 2, (c + d + f) / 2]
    }

    /// `b_1..b_3`.
    pub fn b_sums(&self) -> [u32; 3] {
        let SixJLabels { a, b, e, c, d, f } = *self;
        [(b + d + e + f) / 2, (a + c + e + f) / 2, (a + b + c + d) / 2]
    }

    /// `(n, N)`, the summation range.
    pub fn range(&self) -> (u32, u32) {
        (*self.a_sums().iter().max().unwrap(), *self.b_sums().iter().min().unwrap())
    }

    pub fn as_array(&self) -> [u32; 6] {
        [self.a, self.b, self.e, self.c, self.d, self.f]
    }
}

/// All labels `(a,b,e,c,d,f)` at level `k` with four admissible vertices.
pub fn admissible_six_j_labels(k: u32) -> Vec<SixJLabels> {
    let mut out = Vec::new();
    for a in 0..=k {
        for d in 0..=k {
            for e in 0..=k {
                if !admissible(k, a, d, e) {
                    continue;
                }
                for b in 0..=k {
                    for c in 0..=k {
                        if !admissible(k, b, c, e) {
                            continue;
                        }
                        for f in 0..=k {
                            if admissible(k, a, b, f) && admissible(k, c, d, f) {
                                out.push(SixJLabels::new(a, b, e, c, d, f));
                            }
                        }
                    }
                }
            }
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fusion_examples() {
        assert_eq!(fuse(2, 1, 1), vec![0, 2]);
        for k in 1..=8 {
            assert_eq!(fuse(k, k, 1), vec![k - 1]);
            for i in 0..=k {
                assert_eq!(fuse(k, 0, i), vec![i]);
            }
        }
        assert_eq!(fuse(3, 2, 2), vec![0, 2]);
    }

    #[test]
    fn fusion_matches_admissibility() {
        for k in 1..=8 {
            for i in 0..=k {
                for j in 0..=k {
                    for l in 0..=k {
                        assert_eq!(multiplicity(k, i, j, l) == 1, admissible(k, i, j, l));
                    }
                }
            }
        }
    }

    #[test]
    fn six_j_range() {
        let l = SixJLabels::new(1, 1, 2, 1, 1, 2);
        assert_eq!(l.a_sums(), [2, 2, 2, 2]);
        assert_eq!(l.b_sums(), [3, 3, 2]);
        assert_eq!(l.range(), (2, 2));
    }
}
