//! 6j symbols from the closed formula, and a per-category table.

use std::collections::BTreeMap;

use rayon::prelude::*;

use super::data::{evaluator, theta_ratio};
use super::params::CategoryParams;
use super::rules::{admissible_six_j_labels, AdmissibleTriple, SixJLabels};
use crate::cyclotomic::{CyclotomicNumber, FactorialRatio, QuantumEvaluator};
use crate::error::Result;

fn merge(into: &mut FactorialRatio, other: &FactorialRatio, sign: i64) {
    into.monomial += sign * other.monomial;
    for (&d, &e) in &other.exponents {
        *into.exponents.entry(d).or_default() += sign * e;
    }
}

/// Summands of the formula as `(sign, ratio)`; each ratio already folds in
/// `I!`, `[e+1]`, `E!` and both θ denominators so that vanishing brackets
/// cancel across the whole term rather than factor by factor.
pub(crate) fn six_j_terms(k: u32, l: &SixJLabels) -> Vec<(i64, FactorialRatio)> {
    if !l.is_admissible(k) {
        return Vec::new();
    }
    let ai = l.a_sums();
    let bj = l.b_sums();
    let mut prefix_num: Vec<u32> = Vec::new();
    for &b in &bj {
        for &a in &ai {
            prefix_num.push(b - a);
        }
    }
    prefix_num.push(l.e + 1);
    let mut prefix_den = vec![l.a, l.b, l.c, l.d, l.e, l.f, l.e];
    prefix_den.sort_unstable();
    let mut prefix = FactorialRatio::new(&prefix_num, &prefix_den);
    let t1 = AdmissibleTriple::new(k, l.a, l.d, l.e).expect("checked");
    let t2 = AdmissibleTriple::new(k, l.b, l.c, l.e).expect("checked");
    merge(&mut prefix, &theta_ratio(&t1), -1);
    merge(&mut prefix, &theta_ratio(&t2), -1);
    // θ signs for the plus structure, and (-1)^e from the prefactor
    let prefix_parity = t1.u + t1.v + t1.w + t2.u + t2.v + t2.w + l.e;

    let (n, big_n) = l.range();
    (n..=big_n)
        .map(|s| {
            let mut r = prefix.clone();
            let den: Vec<u32> = ai.iter().map(|&a| s - a).chain(bj.iter().map(|&b| b - s)).collect();
            merge(&mut r, &FactorialRatio::new(&[s + 1], &den), 1);
            r.exponents.retain(|_, e| *e != 0);
            let sign = if (prefix_parity + s) % 2 == 0 { 1 } else { -1 };
            (sign, r)
        })
        .collect()
}

pub(crate) fn six_j_with(ev: &mut QuantumEvaluator, k: u32, l: &SixJLabels) -> Result<CyclotomicNumber> {
    let mut acc = CyclotomicNumber::zero(ev.s().order());
    for (sign, r) in six_j_terms(k, l) {
        let v = ev.evaluate(&r)?;
        if sign > 0 {
            acc += &v;
        } else {
            acc -= &v;
        }
    }
    Ok(acc)
}

/// `{a b e; c d f}`; zero when a vertex triple is inadmissible.
///
/// The value depends only on the monoidal category, not on the pivotal sign.
pub fn six_j(p: &CategoryParams, l: &SixJLabels) -> Result<CyclotomicNumber> {
    six_j_with(&mut evaluator(p), p.k(), l)
}

/// All nonzero-label 6j symbols of one category.
#[derive(Debug, Clone)]
pub struct SixJTable {
    params: CategoryParams,
    entries: BTreeMap<SixJLabels, CyclotomicNumber>,
    zero: CyclotomicNumber,
}

impl SixJTable {
    pub fn new(p: &CategoryParams) -> Result<Self> {
        let labels = admissible_six_j_labels(p.k());
        let entries = labels
            .par_chunks(64)
            .map_init(
                || evaluator(p),
                |ev, chunk| chunk.iter().map(|l| Ok((*l, six_j_with(ev, p.k(), l)?))).collect::<Result<Vec<_>>>(),
            )
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .collect();
        Ok(SixJTable { params: *p, entries, zero: CyclotomicNumber::zero(p.field_order()) })
    }

    pub fn params(&self) -> &CategoryParams {
        &self.params
    }

    pub fn get(&self, l: &SixJLabels) -> &CyclotomicNumber {
        self.entries.get(l).unwrap_or(&self.zero)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&SixJLabels, &CyclotomicNumber)> {
        self.entries.iter()
    }

    /// Adds `delta` to one entry; used to check that verification catches faults.
    pub fn perturb(&mut self, l: &SixJLabels, delta: &CyclotomicNumber) {
        let v = self.get(l) + &delta.promote(self.zero.order()).expect("delta lives in the table's field");
        self.entries.insert(*l, v);
    }
}
