//! The Biedenharn–Elliott identity
//!
//! ```text
//! {l3 l4 r; l5 p q}{l1 l2 t; l3 r p} = Σ_s {l1 l2 s; q l5 p}{l3 l4 t; s l2 q}{l5 l1 r; t l4 s}
//! ```
//!
//! checked over every labelling whose shared vertex triples are admissible.

use rayon::prelude::*;
use serde::Serialize;

use super::params::CategoryParams;
use super::rules::{admissible, SixJLabels};
use super::sixj::SixJTable;
use crate::cyclotomic::CyclotomicNumber;
use crate::error::Result;

const MAX_REPORTED: usize = 10;

#[derive(Debug, Clone, Serialize)]
pub struct PentagonReport {
    pub k: u32,
    pub m: u32,
    pub checked: usize,
    pub failures: usize,
    /// Up to ten failing labellings `[l1, l2, l3, l4, l5, p, q, r, t]`.
    pub counterexamples: Vec<[u32; 9]>,
}

impl PentagonReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

fn sj(t: &SixJTable, a: u32, b: u32, e: u32, c: u32, d: u32, f: u32) -> &CyclotomicNumber {
    t.get(&SixJLabels::new(a, b, e, c, d, f))
}

fn holds(t: &SixJTable, k: u32, [l1, l2, l3, l4, l5, p, q, r, tt]: [u32; 9]) -> bool {
    let lhs = sj(t, l3, l4, r, l5, p, q) * sj(t, l1, l2, tt, l3, r, p);
    let mut rhs = CyclotomicNumber::zero(lhs.order());
    for s in 0..=k {
        if !(admissible(k, l1, l5, s) && admissible(k, l2, q, s) && admissible(k, l4, s, tt)) {
            continue;
        }
        rhs += &(sj(t, l1, l2, s, q, l5, p) * sj(t, l3, l4, tt, s, l2, q) * sj(t, l5, l1, r, tt, l4, s));
    }
    lhs == rhs
}

fn labellings(k: u32) -> Vec<[u32; 9]> {
    let ad = |a, b, c| admissible(k, a, b, c);
    let mut out = Vec::new();
    for l1 in 0..=k {
        for l2 in 0..=k {
            for p in (0..=k).filter(|&p| ad(l1, l2, p)) {
                for l3 in 0..=k {
                    for t in (0..=k).filter(|&t| ad(l2, l3, t)) {
                        for r in (0..=k).filter(|&r| ad(l1, r, t)) {
                            for l4 in 0..=k {
                                for l5 in (0..=k).filter(|&l5| ad(l4, l5, r)) {
                                    for q in (0..=k).filter(|&q| ad(l3, l4, q) && ad(l5, p, q)) {
                                        out.push([l1, l2, l3, l4, l5, p, q, r, t]);
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// Checks the identity against a (possibly perturbed) table.
pub fn pentagon_check_table(table: &SixJTable) -> PentagonReport {
    let p = table.params();
    let k = p.k();
    let all = labellings(k);
    let mut bad: Vec<[u32; 9]> = all.par_iter().filter(|&&x| !holds(table, k, x)).copied().collect();
    bad.sort_unstable();
    PentagonReport {
        k,
        m: p.m(),
        checked: all.len(),
        failures: bad.len(),
        counterexamples: bad.into_iter().take(MAX_REPORTED).collect(),
    }
}

pub fn pentagon_check(p: &CategoryParams) -> Result<PentagonReport> {
    Ok(pentagon_check_table(&SixJTable::new(p)?))
}
