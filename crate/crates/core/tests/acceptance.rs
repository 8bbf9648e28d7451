//! The eleven acceptance criteria, one line each. Runs without the libtest
//! harness so every line is printed; exits non-zero if any criterion fails.

use std::time::{Duration, Instant};

use anfield::classification::{braided_classes, enumerate_braided, enumerate_monoidal, invertible_subcategory_by_twist};
use anfield::fusion::{qdim, CategoryParams, PivotalSign};
use anfield::modular::{conductor, galois_orbits, modularity_rank, BraidingParams};
use anfield::verify::{
    jones_wenzl_suite, pentagon_suite, ribbon_suite, sixj_oracle_suite, theta_oracle_suite, verlinde_suite,
    SuiteReport,
};
use anfield::CyclotomicNumber;

struct Outcome {
    checked: usize,
    failures: Vec<String>,
}

impl From<SuiteReport> for Outcome {
    fn from(r: SuiteReport) -> Self {
        Outcome { checked: r.checked, failures: r.failures }
    }
}

#[derive(Default)]
struct Tally {
    checked: usize,
    failures: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    fn done(self) -> Outcome {
        Outcome { checked: self.checked, failures: self.failures }
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 { a } else { gcd(b, a % b) }
}

fn braided(k: u32) -> Vec<BraidingParams> {
    (0..4 * (k + 2)).filter_map(|ell| BraidingParams::plus(k, ell as i64).ok()).collect()
}

// rank of S: (k+1)/2 when k and ℓ are both odd, k+1 otherwise
fn rank_table() -> Outcome {
    let mut t = Tally::default();
    for k in 1..=9 {
        for bp in braided(k) {
            let want = if k % 2 == 1 && bp.ell() % 2 == 1 { (k as usize + 1) / 2 } else { k as usize + 1 };
            let got = modularity_rank(&bp);
            t.check(got == want, || format!("{bp}: rank {got}, expected {want}"));
        }
    }
    t.done()
}

// conductor by k+ℓ mod 4: 0 → k+2, 2 → 2(k+2), odd → 4(k+2); A_2 categories 1, 2, 4, 4
fn conductor_table() -> Outcome {
    let mut t = Tally::default();
    for k in 2..=10 {
        for bp in braided(k) {
            let want = match (k + bp.ell()) % 4 {
                0 => k + 2,
                2 => 2 * (k + 2),
                _ => 4 * (k + 2),
            };
            let got = conductor(&bp);
            t.check(got == want, || format!("{bp}: conductor {got}, expected {want}"));
        }
    }
    let named = [("Rep(Z/2Z)", 1), ("sVec", 2), ("Sem", 4), ("SemBar", 4)];
    for bp in braided(1) {
        let name = invertible_subcategory_by_twist(&bp).map(|n| n.to_string()).unwrap_or_default();
        let want = named.iter().find(|(n, _)| *n == name).map(|&(_, c)| c);
        let got = conductor(&bp);
        t.check(want == Some(got), || format!("{bp} ({name}): conductor {got}, expected {want:?}"));
    }
    t.done()
}

// rows ℓ mod 4, columns k mod 4; None is a dashed cell
const INVERTIBLE: [[Option<&str>; 4]; 4] = [
    [None, Some("Sem"), None, Some("Sem")],
    [Some("Rep(Z/2Z)"), Some("sVec"), Some("sVec"), Some("Rep(Z/2Z)")],
    [None, Some("SemBar"), None, Some("SemBar")],
    [Some("Rep(Z/2Z)"), Some("Rep(Z/2Z)"), Some("sVec"), Some("sVec")],
];

fn invertible_table() -> Outcome {
    let mut t = Tally::default();
    for k in 1..=16 {
        for bp in braided(k) {
            let want = INVERTIBLE[(bp.ell() % 4) as usize][(k % 4) as usize];
            for sign in [PivotalSign::Plus, PivotalSign::Minus] {
                let bp = bp.with_sign(sign);
                let got = invertible_subcategory_by_twist(&bp).map(|n| n.to_string()).ok();
                t.check(want.is_some() && got.as_deref() == want, || format!("{bp}: {got:?}, table {want:?}"));
            }
        }
    }
    t.done()
}

fn global_dimension() -> Outcome {
    let mut t = Tally::default();
    for k in 1..=12u32 {
        for m in (1..=k + 1).filter(|&m| gcd(m, k + 2) == 1) {
            for sign in [PivotalSign::Plus, PivotalSign::Minus] {
                let p = CategoryParams::new(k, m as i64, sign).unwrap();
                let s = p.s();
                let n = s.order();
                let sum = (0..=k).fold(CyclotomicNumber::zero(n), |acc, a| {
                    let d = qdim(&p, a).unwrap();
                    &acc + &(&d * &d)
                });
                let denom = &(&CyclotomicNumber::from_integer(n, 2) - &s.pow(4).unwrap()) - &s.pow(-4).unwrap();
                let want = CyclotomicNumber::from_integer(n, 2 * (k as i64 + 2)).checked_div(&denom).unwrap();
                t.check(sum == want, || format!("{p}: Σ dim² = {sum}, expected {want}"));
            }
        }
    }
    t.done()
}

fn totient(n: u32) -> usize {
    (1..=n).filter(|&j| gcd(j, n) == 1).count()
}

// one orbit for even k; for odd k: ℓ even, ℓ ≡ 1, ℓ ≡ 3 (mod 4)
fn classification() -> Outcome {
    let mut t = Tally::default();
    for k in 1..=9u32 {
        let mono = enumerate_monoidal(k);
        t.check(mono.len() == totient(k + 2), || format!("k={k}: {} monoidal categories", mono.len()));
        let classes = braided_classes(k);
        if k == 1 {
            let named: Vec<String> = braided(1)
                .iter()
                .map(|bp| invertible_subcategory_by_twist(bp).unwrap().to_string())
                .collect::<std::collections::BTreeSet<_>>()
                .into_iter()
                .collect();
            t.check(named == ["Rep(Z/2Z)", "Sem", "SemBar", "sVec"], || format!("k=1: named {named:?}"));
        } else {
            t.check(classes.iter().all(|(_, ells)| ells.len() == 4), || format!("k={k}: classes {classes:?}"));
            let ells: Vec<u32> = enumerate_braided(k).iter().map(|e| e.ell).collect();
            let pick = |f: &dyn Fn(u32) -> bool| ells.iter().copied().filter(|&l| f(l)).collect::<Vec<_>>();
            let mut want =
                if k % 2 == 0 { vec![ells.clone()] } else { vec![pick(&|l| l % 2 == 0), pick(&|l| l % 4 == 1), pick(&|l| l % 4 == 3)] };
            want.sort();
            let mut got = galois_orbits(k);
            got.sort();
            t.check(got == want, || format!("k={k}: orbits {got:?}, expected {want:?}"));
        }
    }
    t.done()
}

type Criterion = (&'static str, u64, Box<dyn Fn() -> Outcome>);

fn main() {
    let criteria: Vec<Criterion> = vec![
        ("1 Jones-Wenzl n ≤ 8", 10, Box::new(|| jones_wenzl_suite(8).into())),
        ("2 θ oracle k ≤ 8, labels ≤ 6", 60, Box::new(|| theta_oracle_suite(8, 6).into())),
        ("3 6j oracle k ≤ 6", 300, Box::new(|| sixj_oracle_suite(6).into())),
        ("4 pentagon k ≤ 5 + faults", 120, Box::new(|| pentagon_suite(5).into())),
        ("5 Verlinde k ≤ 8", 60, Box::new(|| verlinde_suite(8).into())),
        ("6 S-rank table k ≤ 9", 60, Box::new(rank_table)),
        ("7 conductor table 2 ≤ k ≤ 10, A_2", 30, Box::new(conductor_table)),
        ("8 invertible subcategory k ≤ 16", 30, Box::new(invertible_table)),
        ("9 global dimension k ≤ 12", 10, Box::new(global_dimension)),
        ("10 ribbon relation k ≤ 8", 30, Box::new(|| ribbon_suite(8).into())),
        ("11 classification counts, Galois orbits", 10, Box::new(classification)),
    ];

    let mut failed = 0;
    for (name, budget, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let in_time = elapsed <= Duration::from_secs(budget);
        let ok = outcome.failures.is_empty() && outcome.checked > 0 && in_time;
        println!(
            "{} {name}: {} checks, {} failures, {:.2}s (budget {budget}s)",
            if ok { "PASS" } else { "FAIL" },
            outcome.checked,
            outcome.failures.len(),
            elapsed.as_secs_f64()
        );
        for f in outcome.failures.iter().take(5) {
            println!("     {f}");
        }
        if !ok {
            failed += 1;
        }
    }
    println!("{} of 11 criteria passed", 11 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
