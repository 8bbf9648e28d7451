//! Independent θ and 6j values from Temperley–Lieb networks.
//!
//! Networks are evaluated once with a formal loop value `δ` and cached; a
//! category then only specialises the resulting rational functions.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use super::params::CategoryParams;
use super::rules::{admissible, admissible_generic, SixJLabels};
use crate::cyclotomic::CyclotomicNumber;
use crate::error::{Error, Result};
use crate::linalg;
use crate::tl::network::{evaluate_closed_network, Network, TrivalentBuilder};
use crate::tl::RationalFunction;

/// Networks beyond this label are refused; they are not desk-scale.
pub const MAX_ORACLE_LABEL: u32 = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Key {
    Theta(u32, u32, u32),
    Gram([u32; 6]),
    Tet([u32; 6]),
}

fn cache() -> &'static Mutex<HashMap<Key, RationalFunction>> {
    static CACHE: OnceLock<Mutex<HashMap<Key, RationalFunction>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

thread_local! {
    static BUILDER: RefCell<TrivalentBuilder<RationalFunction>> =
        RefCell::new(TrivalentBuilder::new(&RationalFunction::delta()));
}

fn symbolic(key: Key) -> Result<RationalFunction> {
    if let Some(v) = cache().lock().unwrap().get(&key) {
        return Ok(v.clone());
    }
    let u = |x: u32| x as usize;
    let net: Network<RationalFunction> = BUILDER.with(|b| {
        let mut b = b.borrow_mut();
        match key {
            Key::Theta(a, b2, c) => b.theta(u(a), u(b2), u(c)),
            Key::Gram([a, b2, c, d, e1, e2]) => b.gram_network(u(a), u(b2), u(c), u(d), u(e1), u(e2)),
            Key::Tet([a, b2, c, d, e, f]) => b.tetrahedral_network(u(a), u(b2), u(c), u(d), u(e), u(f)),
        }
    })?;
    let v = evaluate_closed_network(&net, &RationalFunction::delta())?;
    cache().lock().unwrap().insert(key, v.clone());
    Ok(v)
}

fn check_labels(labels: &[u32]) -> Result<()> {
    if labels.iter().any(|&x| x > MAX_ORACLE_LABEL) {
        return Err(Error::InvalidParameters(format!("oracle labels are limited to {MAX_ORACLE_LABEL}")));
    }
    Ok(())
}

/// The θ network as a rational function of `δ`.
pub fn symbolic_theta(a: u32, b: u32, c: u32) -> Result<RationalFunction> {
    check_labels(&[a, b, c])?;
    if !admissible_generic(a, b, c) {
        return Ok(RationalFunction::zero());
    }
    symbolic(Key::Theta(a, b, c))
}

/// `θ(a, b, c)` by evaluating the network at the category's loop value.
///
/// The diagram calculus is the plus structure; the minus value is transported
/// with the sign `(-1)^{(a+b+c)/2}`.
pub fn theta_oracle(p: &CategoryParams, a: u32, b: u32, c: u32) -> Result<CyclotomicNumber> {
    if !admissible(p.k(), a, b, c) {
        return Ok(CyclotomicNumber::zero(p.field_order()));
    }
    let v = symbolic_theta(a, b, c)?.evaluate(&p.delta())?;
    Ok(if p.sign().sign_pow((a + b + c) / 2) < 0 { -v } else { v })
}

/// Solves `H_f = Σ_e {a b e; c d f} I_e` for every admissible `e`.
///
/// Pairs both sides with each `I_{e'}` and solves the Gram system exactly.
pub fn sixj_oracle_column(p: &CategoryParams, a: u32, b: u32, c: u32, d: u32, f: u32) -> Result<BTreeMap<u32, CyclotomicNumber>> {
    let k = p.k();
    check_labels(&[a, b, c, d, f])?;
    let es: Vec<u32> = (0..=k).filter(|&e| admissible(k, a, d, e) && admissible(k, b, c, e)).collect();
    if es.is_empty() || !admissible(k, a, b, f) || !admissible(k, c, d, f) {
        return Ok(es.into_iter().map(|e| (e, CyclotomicNumber::zero(p.field_order()))).collect());
    }
    let delta = p.delta();
    let gram = es
        .iter()
        .map(|&e1| es.iter().map(|&e2| symbolic(Key::Gram([a, b, c, d, e1, e2]))?.evaluate(&delta)).collect())
        .collect::<Result<linalg::Matrix>>()?;
    let rhs = es
        .iter()
        .map(|&e| symbolic(Key::Tet([a, b, c, d, e, f]))?.evaluate(&delta))
        .collect::<Result<Vec<_>>>()?;
    let x = linalg::solve(&gram, &rhs)?;
    Ok(es.into_iter().zip(x).collect())
}

/// `{a b e; c d f}` from the diagram calculus alone.
pub fn sixj_oracle(p: &CategoryParams, l: &SixJLabels) -> Result<CyclotomicNumber> {
    if !l.is_admissible(p.k()) {
        return Ok(CyclotomicNumber::zero(p.field_order()));
    }
    let col = sixj_oracle_column(p, l.a, l.b, l.c, l.d, l.f)?;
    Ok(col[&l.e].clone())
}
