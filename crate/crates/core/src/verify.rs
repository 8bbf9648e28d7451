//! Verification suites: every closed formula against an independent
//! computation, and every table against the data it summarises.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::classification::{
    a2_categories, braided_classes, enumerate_braided, enumerate_monoidal, invertible_subcategory_by_table,
    invertible_subcategory_by_twist, A2Name,
};
use crate::cyclotomic::integers::totient;
use crate::cyclotomic::CyclotomicNumber;
use crate::fusion::{
    admissible, admissible_six_j_labels, global_dim, global_dim_by_sum, pentagon_check_table, six_j,
    sixj_oracle_column, theta_oracle, theta_symbol, CategoryParams, PivotalSign, SixJLabels, SixJTable,
};
use crate::modular::{
    conductor, galois_orbits, modularity_rank, predicted_conductor, predicted_rank, r_coeff, twist, verlinde_check,
    BraidingParams,
};
use crate::scalar::Scalar;
use crate::tl::{Projectors, PlanarDiagram, RationalFunction, TLMorphism};

pub const SUITES: [&str; 6] = ["jw", "theta-oracle", "sixj-oracle", "pentagon", "verlinde", "tables"];

#[derive(Debug, Clone, Default, Serialize)]
pub struct SuiteReport {
    pub name: String,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    fn new(name: &str) -> Self {
        SuiteReport { name: name.into(), ..Default::default() }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn absorb(&mut self, results: Vec<(bool, String)>) {
        for (ok, what) in results {
            self.check(ok, || what);
        }
    }

    fn merge(mut self, other: SuiteReport) -> Self {
        self.checked += other.checked;
        self.failures.extend(other.failures.into_iter().map(|f| format!("{}: {f}", other.name)));
        self
    }
}

fn monoidal_params(k: u32) -> Vec<CategoryParams> {
    (1..=k as i64 + 1).filter_map(|m| CategoryParams::plus(k, m).ok()).collect()
}

fn braided_params(k: u32) -> Vec<BraidingParams> {
    enumerate_braided(k).iter().map(|e| BraidingParams::plus(k, e.ell as i64).expect("valid")).collect()
}

const SIGNS: [PivotalSign; 2] = [PivotalSign::Plus, PivotalSign::Minus];

/// Symbolic `f(n)` for `n ≤ n_max`: idempotent and killed by every `e_i` on both sides.
pub fn jones_wenzl_suite(n_max: usize) -> SuiteReport {
    let mut r = SuiteReport::new("jw");
    let delta = RationalFunction::delta();
    let mut jw = Projectors::new(&delta);
    for n in 0..=n_max {
        let f = jw.get(n).expect("generic δ");
        r.check(f.compose(&f).map(|g| g == *f).unwrap_or(false), || format!("f({n}) is not idempotent"));
        for i in 1..n {
            let e = TLMorphism::e(n, i, &delta).expect("1 ≤ i < n");
            let left = e.compose(&f).map(|x| x.is_zero()).unwrap_or(false);
            let right = f.compose(&e).map(|x| x.is_zero()).unwrap_or(false);
            r.check(left && right, || format!("e_{i} does not kill f({n})"));
        }
    }
    r
}

/// At level `k`, every closure `tr(D ∘ f(k+1))` vanishes, for all diagrams `D` of `TL_{k+1}`.
pub fn level_relation_suite(k_max: u32) -> SuiteReport {
    let mut r = SuiteReport::new("jw-level");
    for k in 1..=k_max {
        for p in monoidal_params(k) {
            let delta = p.delta();
            let n = k as usize + 1;
            let f = Projectors::new(&delta).get(n).expect("[j] ≠ 0 for j ≤ k+1");
            for d in PlanarDiagram::enumerate(n, n) {
                let closed = TLMorphism::from_diagram(d.clone(), &delta).compose(&f).and_then(|x| x.markov_trace());
                r.check(closed.map(|v| v.is_zero()).unwrap_or(false), || format!("k={k} m={} D={d:?}", p.m()));
            }
        }
    }
    r
}

/// `θ` formula against the θ network, both pivotal structures.
pub fn theta_oracle_suite(k_max: u32, label_max: u32) -> SuiteReport {
    let mut r = SuiteReport::new("theta-oracle");
    let cases: Vec<(CategoryParams, u32, u32, u32)> = (1..=k_max)
        .flat_map(monoidal_params)
        .flat_map(|p| SIGNS.map(|s| p.with_sign(s)))
        .flat_map(|p| {
            let lim = label_max.min(p.k());
            (0..=lim).flat_map(move |a| (0..=lim).flat_map(move |b| (0..=lim).map(move |c| (p, a, b, c))))
        })
        .filter(|&(p, a, b, c)| admissible(p.k(), a, b, c))
        .collect();
    r.absorb(
        cases
            .par_iter()
            .map(|&(p, a, b, c)| {
                let ok = matches!((theta_symbol(&p, a, b, c), theta_oracle(&p, a, b, c)), (Ok(x), Ok(y)) if x == y);
                (ok, format!("{p} θ({a},{b},{c})"))
            })
            .collect(),
    );
    r
}

/// The 6j formula against the change-of-basis system, every admissible tuple.
pub fn sixj_oracle_suite(k_max: u32) -> SuiteReport {
    let mut r = SuiteReport::new("sixj-oracle");
    for k in 1..=k_max {
        for p in monoidal_params(k) {
            // one linear solve per (a, b, c, d, f) column
            let columns: BTreeSet<(u32, u32, u32, u32, u32)> =
                admissible_six_j_labels(k).iter().map(|l| (l.a, l.b, l.c, l.d, l.f)).collect();
            let columns: Vec<_> = columns.into_iter().collect();
            let results: Vec<(bool, String)> = columns
                .par_iter()
                .flat_map_iter(|&(a, b, c, d, f)| {
                    let col = sixj_oracle_column(&p, a, b, c, d, f);
                    let mut out = Vec::new();
                    match col {
                        Err(e) => out.push((false, format!("{p} column {a} {b} {c} {d} {f}: {e}"))),
                        Ok(col) => {
                            for (e, oracle) in col {
                                let l = SixJLabels::new(a, b, e, c, d, f);
                                let ok = six_j(&p, &l).map(|v| v == oracle).unwrap_or(false);
                                out.push((ok, format!("{p} {{{a} {b} {e}; {c} {d} {f}}}")));
                            }
                        }
                    }
                    out
                })
                .collect();
            r.absorb(results);
        }
    }
    r
}

/// Pentagon for every category with `k ≤ k_max`, and for a perturbed copy of
/// each table (the fault must be caught).
pub fn pentagon_suite(k_max: u32) -> SuiteReport {
    let mut r = SuiteReport::new("pentagon");
    for k in 1..=k_max {
        for p in monoidal_params(k) {
            let table = SixJTable::new(&p).expect("6j table");
            let rep = pentagon_check_table(&table);
            r.check(rep.passed(), || format!("{p}: {} failures, e.g. {:?}", rep.failures, rep.counterexamples));
            let mut bad = table.clone();
            // the last entry involves the largest labels, so it is used often
            let target = *table.iter().last().expect("nonempty").0;
            bad.perturb(&target, &CyclotomicNumber::one(1));
            let rep = pentagon_check_table(&bad);
            r.check(!rep.passed(), || format!("{p}: perturbing {target:?} went unnoticed"));
        }
    }
    r
}

/// Verlinde in every modular case, both pivotal structures.
pub fn verlinde_suite(k_max: u32) -> SuiteReport {
    let mut r = SuiteReport::new("verlinde");
    let cases: Vec<BraidingParams> = (1..=k_max)
        .flat_map(braided_params)
        .filter(|bp| predicted_rank(bp.k(), bp.ell()) == bp.k() as usize + 1)
        .flat_map(|bp| SIGNS.map(|s| bp.with_sign(s)))
        .collect();
    r.absorb(
        cases
            .par_iter()
            .map(|bp| match verlinde_check(bp) {
                Ok(rep) => (rep.passed(), format!("{bp}: {:?}", rep.failures)),
                Err(e) => (false, format!("{bp}: {e}")),
            })
            .collect(),
    );
    r
}

pub fn rank_table(k_max: u32) -> SuiteReport {
    let mut r = SuiteReport::new("rank-table");
    let cases: Vec<BraidingParams> = (1..=k_max).flat_map(braided_params).collect();
    r.absorb(
        cases
            .par_iter()
            .map(|bp| {
                let (got, want) = (modularity_rank(bp), predicted_rank(bp.k(), bp.ell()));
                (got == want, format!("{bp}: rank {got}, table {want}"))
            })
            .collect(),
    );
    r
}

pub fn conductor_table(k_max: u32) -> SuiteReport {
    let mut r = SuiteReport::new("conductor-table");
    for (name, want) in A2Name::ALL.into_iter().zip([1, 2, 4, 4]) {
        for ell in name.ells() {
            let got = conductor(&BraidingParams::plus(1, ell as i64).expect("valid"));
            r.check(got == want, || format!("{name} (ell={ell}): conductor {got}, expected {want}"));
        }
    }
    for bp in (2..=k_max).flat_map(braided_params) {
        let (got, want) = (conductor(&bp), predicted_conductor(bp.k(), bp.ell()));
        r.check(got == want, || format!("{bp}: conductor {got}, table {want}"));
    }
    r
}

/// The minus structure multiplies `θ_a` by `(-1)^a`, which is the plus `T` at
/// `ℓ + 2(k+2)`; for odd `k` this swaps the `k+2` and `2(k+2)` rows of the table.
pub fn conductor_table_minus(k_max: u32) -> SuiteReport {
    let mut r = SuiteReport::new("conductor-table-minus");
    for bp in (2..=k_max).flat_map(braided_params) {
        let bp = bp.with_sign(PivotalSign::Minus);
        let got = conductor(&bp);
        let want = predicted_conductor(bp.k(), bp.ell() + 2 * (bp.k() + 2));
        r.check(got == want, || format!("{bp}: conductor {got}, transported table {want}"));
    }
    r
}

/// Table lookup and twist comparison agree; the dashed cells are never reached.
pub fn invertible_table(k_max: u32) -> SuiteReport {
    let mut r = SuiteReport::new("invertible-table");
    for bp in (1..=k_max).flat_map(braided_params) {
        for s in SIGNS {
            let bp = bp.with_sign(s);
            let table = invertible_subcategory_by_table(bp.k(), bp.ell());
            let twist = invertible_subcategory_by_twist(&bp);
            r.check(matches!((&table, &twist), (Ok(a), Ok(b)) if a == b), || {
                format!("{bp}: table {table:?}, twist {twist:?}")
            });
        }
    }
    r
}

/// The Summary table's orbit partition: one orbit for even `k`; for odd `k`
/// the classes `ℓ` even, `ℓ ≡ 1`, `ℓ ≡ 3 (mod 4)`.
pub fn expected_galois_orbits(k: u32) -> Vec<Vec<u32>> {
    let ells: Vec<u32> = enumerate_braided(k).iter().map(|e| e.ell).collect();
    let mut classes: Vec<Vec<u32>> = if k % 2 == 0 {
        vec![ells]
    } else {
        let pick = |f: &dyn Fn(u32) -> bool| ells.iter().copied().filter(|&l| f(l)).collect::<Vec<_>>();
        vec![pick(&|l| l % 2 == 0), pick(&|l| l % 4 == 1), pick(&|l| l % 4 == 3)]
    };
    classes.sort();
    classes
}

/// Monoidal counts, braided class sizes, `A_2` names and Galois orbits.
pub fn classification_counts(k_max: u32) -> SuiteReport {
    let mut r = SuiteReport::new("classification");
    for k in 1..=k_max {
        let mono = enumerate_monoidal(k);
        r.check(mono.len() == totient(k + 2) as usize, || format!("k={k}: {} monoidal categories", mono.len()));
        let deltas: Vec<&CyclotomicNumber> = mono.iter().map(|e| &e.delta).collect();
        let distinct = deltas.iter().enumerate().all(|(i, x)| deltas[..i].iter().all(|y| y != x));
        r.check(distinct, || format!("k={k}: repeated q+q^-1"));
        let classes = braided_classes(k);
        if k == 1 {
            // ℓ double counts here: each monoidal class holds two named categories
            let braided = enumerate_braided(1);
            let named = |ells: &[u32]| {
                ells.iter().map(|l| braided.iter().find(|e| e.ell == *l).and_then(|e| e.name)).collect::<BTreeSet<_>>()
            };
            r.check(classes.iter().all(|(_, v)| named(v).len() == 2 && !named(v).contains(&None)), || {
                format!("k=1: braided classes {classes:?}")
            });
        } else {
            r.check(classes.iter().all(|(_, v)| v.len() == 4), || format!("k={k}: braided classes {classes:?}"));
        }
        if k == 1 {
            let names = a2_categories();
            r.check(names.len() == 4, || "k=1: expected four named categories".into());
            for (name, [l1, l2]) in names {
                let (b1, b2) = (BraidingParams::plus(1, l1 as i64).unwrap(), BraidingParams::plus(1, l2 as i64).unwrap());
                let same = twist(&b1, 1) == twist(&b2, 1) && b1.delta() == b2.delta();
                r.check(same, || format!("{name}: ell={l1} and ell={l2} differ"));
            }
        }
        if k >= 2 {
            let mut got = galois_orbits(k);
            got.sort();
            let want = expected_galois_orbits(k);
            r.check(got == want, || format!("k={k}: orbits {got:?}, expected {want:?}"));
        }
    }
    r
}

/// Rank, conductor, invertible objects and classification counts.
pub fn tables_suite(k_max: u32) -> SuiteReport {
    SuiteReport::new("tables")
        .merge(rank_table(k_max.min(9)))
        .merge(conductor_table(k_max))
        .merge(conductor_table_minus(k_max))
        .merge(invertible_table(k_max))
        .merge(classification_counts(k_max))
}

/// `Σ qdim² = 2(k+2)/(2 - s^4 - s^{-4})` for every pivotal category.
pub fn global_dim_suite(k_max: u32) -> SuiteReport {
    let mut r = SuiteReport::new("global-dim");
    for p in (1..=k_max).flat_map(monoidal_params) {
        for s in SIGNS {
            let p = p.with_sign(s);
            r.check(global_dim(&p) == global_dim_by_sum(&p), || format!("{p}"));
        }
    }
    r
}

/// `r(a,b,c) r(b,a,c) = θ_c / (θ_a θ_b)` for every admissible triple.
pub fn ribbon_suite(k_max: u32) -> SuiteReport {
    let mut r = SuiteReport::new("ribbon");
    let cases: Vec<BraidingParams> =
        (1..=k_max).flat_map(braided_params).flat_map(|bp| SIGNS.map(|s| bp.with_sign(s))).collect();
    let results: Vec<(bool, String)> = cases
        .par_iter()
        .flat_map_iter(|bp| {
            let k = bp.k();
            let mut out = Vec::new();
            for a in 0..=k {
                for b in 0..=k {
                    for c in (0..=k).filter(|&c| admissible(k, a, b, c)) {
                        let lhs = r_coeff(bp, a, b, c).unwrap() * r_coeff(bp, b, a, c).unwrap();
                        let rhs = twist(bp, c).try_div_ref(&(twist(bp, a) * twist(bp, b))).unwrap();
                        out.push((lhs == rhs, format!("{bp} ({a},{b},{c})")));
                    }
                }
            }
            out
        })
        .collect();
    r.absorb(results);
    r
}

/// Runs a named suite over `k ≤ k_max`.
pub fn run_suite(name: &str, k_max: u32) -> Option<SuiteReport> {
    Some(match name {
        "jw" => jones_wenzl_suite(k_max as usize).merge(level_relation_suite(k_max.min(4))),
        "theta-oracle" => theta_oracle_suite(k_max, 6),
        "sixj-oracle" => sixj_oracle_suite(k_max),
        "pentagon" => pentagon_suite(k_max),
        "verlinde" => verlinde_suite(k_max),
        "tables" => tables_suite(k_max),
        _ => return None,
    })
}
