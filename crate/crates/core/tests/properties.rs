use anfield::classification::{enumerate_braided, enumerate_monoidal, monoidal_equiv};
use anfield::cyclotomic::{quantum_integer, root_of_unity};
use anfield::fusion::{
    admissible, fuse, multiplicity, qdim, six_j, theta_symbol, CategoryParams, PivotalSign, SixJLabels,
};
use anfield::modular::{s_matrix, BraidingParams};
use anfield::scalar::Scalar;
use anfield::tl::network::{evaluate_closed_network, TrivalentBuilder};
use anfield::tl::{PlanarDiagram, RationalFunction, TLMorphism};
use anfield::CyclotomicNumber;
use num::{BigInt, BigRational};
use proptest::prelude::*;

const SIGNS: [PivotalSign; 2] = [PivotalSign::Plus, PivotalSign::Minus];

fn cyclotomic(order: u32, coeffs: &[(i64, i64)]) -> CyclotomicNumber {
    let mut c = vec![BigRational::from_integer(BigInt::from(0)); order as usize];
    for (i, &(n, d)) in coeffs.iter().enumerate() {
        c[i % order as usize] += BigRational::new(n.into(), d.into());
    }
    CyclotomicNumber::from_coeffs(order, &c)
}

fn element(order: u32) -> impl Strategy<Value = CyclotomicNumber> {
    prop::collection::vec((-9i64..=9, 1i64..=4), 1..=order.min(12) as usize)
        .prop_map(move |c| cyclotomic(order, &c))
}

fn triple() -> impl Strategy<Value = (CyclotomicNumber, CyclotomicNumber, CyclotomicNumber)> {
    (1u32..=60).prop_flat_map(|n| (element(n), element(n), element(n)))
}

fn monoidal_params(k: u32) -> Vec<CategoryParams> {
    (1..=k as i64 + 1).filter_map(|m| CategoryParams::plus(k, m).ok()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms((a, b, c) in triple()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inverse().unwrap()).is_one());
        }
    }

    #[test]
    fn root_of_unity_orders(n in 1u32..=40, j in 0i64..40) {
        let j = j % n as i64;
        prop_assert!(root_of_unity(n, 1).pow(n as i64).unwrap().is_one());
        let want = n / num::integer::gcd(n, j as u32);
        prop_assert_eq!(root_of_unity(n, j).multiplicative_order(), Some(want));
    }

    #[test]
    fn chebyshev_recurrence(n in 1u32..=40, j in 0i64..40) {
        let s = root_of_unity(n, j % n as i64);
        prop_assume!(!s.pow(4).unwrap().is_one());
        let delta = -(&s.pow(2).unwrap() + &s.pow(-2).unwrap());
        let q = |i| quantum_integer(i, &s).unwrap();
        for i in 1..20 {
            prop_assert_eq!(q(i + 1), &(-(&delta * &q(i))) - &q(i - 1), "n={}", i);
        }
    }

    #[test]
    fn quantum_integers_depend_on_delta_only(n in 1u32..=40, j in 0i64..40) {
        let s = root_of_unity(n, j % n as i64);
        prop_assume!(!s.pow(4).unwrap().is_one());
        let inv = s.inverse().unwrap();
        // s, -s, s^-1 and -s^-1 share delta = -s^2 - s^-2
        for t in [-s.clone(), inv.clone(), -inv] {
            for i in 0..=20 {
                prop_assert_eq!(quantum_integer(i, &s).unwrap(), quantum_integer(i, &t).unwrap());
            }
        }
    }

    #[test]
    fn approximation_of_products(n in 1u32..=30, a in prop::collection::vec(-3i64..=3, 1..=4),
                                 b in prop::collection::vec(-3i64..=3, 1..=4), digits in 4u32..=12) {
        let lift = |c: &[i64]| cyclotomic(n, &c.iter().map(|&x| (x, 1)).collect::<Vec<_>>());
        let (a, b) = (lift(&a), lift(&b));
        let (ar, ai) = a.approx_complex(digits).to_f64();
        let (br, bi) = b.approx_complex(digits).to_f64();
        let (pr, pi) = (&a * &b).approx_complex(digits).to_f64();
        let tol = 10f64.powi(2 - digits as i32);
        prop_assert!((pr - (ar * br - ai * bi)).abs() <= tol);
        prop_assert!((pi - (ar * bi + ai * br)).abs() <= tol);
    }

    #[test]
    fn tl_composition_is_associative(x in tl_morphism(3), y in tl_morphism(3), z in tl_morphism(3)) {
        let left = x.compose(&y).unwrap().compose(&z).unwrap();
        let right = x.compose(&y.compose(&z).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn tl_interchange_law(a in tl_morphism(2), b in tl_morphism(2), c in tl_morphism(2), d in tl_morphism(2)) {
        let left = a.tensor(&b).compose(&c.tensor(&d)).unwrap();
        let right = a.compose(&c).unwrap().tensor(&b.compose(&d).unwrap());
        prop_assert_eq!(left, right);
    }
}

fn tl_morphism(n: usize) -> impl Strategy<Value = TLMorphism<RationalFunction>> {
    let diagrams = PlanarDiagram::enumerate(n, n);
    let count = diagrams.len();
    prop::collection::vec((0..count, -3i64..=3), 1..=3).prop_map(move |terms| {
        let d = RationalFunction::delta();
        terms.iter().fold(TLMorphism::from_diagram(diagrams[0].clone(), &d).scale(&RationalFunction::zero()), |acc, &(i, c)| {
            let term = TLMorphism::from_diagram(diagrams[i].clone(), &d).scale(&RationalFunction::from_integer(c));
            acc.add(&term).unwrap()
        })
    })
}

#[test]
fn fusion_ring_is_commutative_and_associative() {
    for k in 1..=8 {
        for a in 0..=k {
            for b in 0..=k {
                assert_eq!(fuse(k, a, b), fuse(k, b, a));
                for c in 0..=k {
                    for d in 0..=k {
                        let left: u32 = (0..=k).map(|x| multiplicity(k, a, b, x) * multiplicity(k, x, c, d)).sum();
                        let right: u32 = (0..=k).map(|x| multiplicity(k, b, c, x) * multiplicity(k, a, x, d)).sum();
                        assert_eq!(left, right, "k={k} ({a}{b}){c} -> {d}");
                    }
                }
            }
        }
    }
}

#[test]
fn theta_is_symmetric() {
    for k in 1..=8 {
        for p in monoidal_params(k) {
            for p in SIGNS.map(|s| p.with_sign(s)) {
                for a in 0..=k {
                    for b in 0..=k {
                        for c in (0..=k).filter(|&c| admissible(k, a, b, c)) {
                            let v = theta_symbol(&p, a, b, c).unwrap();
                            for (x, y, z) in [(a, c, b), (b, a, c), (b, c, a), (c, a, b), (c, b, a)] {
                                assert_eq!(theta_symbol(&p, x, y, z).unwrap(), v, "{p} ({a},{b},{c})");
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn theta_with_trivial_edge_is_dimension() {
    for k in 1..=10 {
        for p in monoidal_params(k) {
            for p in SIGNS.map(|s| p.with_sign(s)) {
                for a in 0..=k {
                    assert_eq!(theta_symbol(&p, a, a, 0).unwrap(), qdim(&p, a).unwrap(), "{p} a={a}");
                }
            }
        }
    }
}

#[test]
fn six_j_vanishes_off_admissible_labels() {
    for k in 1..=6 {
        for p in monoidal_params(k) {
            let r = 0..=k;
            for a in r.clone() {
                for b in r.clone() {
                    for e in r.clone() {
                        for c in r.clone() {
                            for d in r.clone() {
                                for f in r.clone() {
                                    let l = SixJLabels::new(a, b, e, c, d, f);
                                    if !l.is_admissible(k) {
                                        assert!(six_j(&p, &l).unwrap().is_zero(), "{p} {l:?}");
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
}

// {1 1 2; 1 1 2} = Tet(1,1,1,1; 2,2) · dim X_2 / θ(1,1,2)²
#[test]
fn tetrahedral_network_matches_six_j() {
    let d = RationalFunction::delta();
    let mut b = TrivalentBuilder::new(&d);
    let tet = evaluate_closed_network(&b.tetrahedral_network(1, 1, 1, 1, 2, 2).unwrap(), &d).unwrap();
    for k in 2..=6 {
        for p in monoidal_params(k) {
            let t = tet.evaluate(&p.delta()).unwrap().promote(p.field_order()).unwrap();
            let theta = theta_symbol(&p, 1, 1, 2).unwrap();
            let want = (&t * &qdim(&p, 2).unwrap()).checked_div(&(&theta * &theta)).unwrap();
            assert_eq!(six_j(&p, &SixJLabels::new(1, 1, 2, 1, 1, 2)).unwrap(), want, "{p}");
        }
    }
}

#[test]
fn s_is_symmetric_and_determined_by_delta() {
    for k in 1..=10 {
        let braided: Vec<BraidingParams> =
            enumerate_braided(k).iter().map(|e| BraidingParams::plus(k, e.ell as i64).unwrap()).collect();
        let matrices: Vec<_> = braided.iter().map(s_matrix).collect();
        for (i, s) in matrices.iter().enumerate() {
            for a in 0..=k as usize {
                for b in 0..=k as usize {
                    assert_eq!(s[a][b], s[b][a], "{} ({a},{b})", braided[i]);
                }
            }
            for j in 0..i {
                if braided[i].delta() == braided[j].delta() {
                    assert_eq!(matrices[i], matrices[j], "{} vs {}", braided[i], braided[j]);
                }
            }
        }
    }
}

#[test]
fn complete_invariant_is_faithful() {
    for k in 1..=12u32 {
        let all: Vec<CategoryParams> = (-3 * (k as i64 + 2)..=3 * (k as i64 + 2))
            .filter_map(|m| CategoryParams::plus(k, m).ok())
            .collect();
        let distinct = enumerate_monoidal(k);
        for x in &all {
            for y in &all {
                assert_eq!(x.delta() == y.delta(), x.m() == y.m(), "{x} {y}");
            }
            assert_eq!(distinct.iter().filter(|e| e.delta == x.delta()).count(), 1, "{x}");
        }
    }
}

#[test]
fn monoidal_equivalence_is_an_equivalence_relation() {
    for k in 1..=8u32 {
        let ells: Vec<i64> = enumerate_braided(k).iter().map(|e| e.ell as i64).collect();
        let n = 2 * (k as i64 + 2);
        for &x in &ells {
            assert!(monoidal_equiv(k, x, x));
            for &y in &ells {
                let eq = monoidal_equiv(k, x, y);
                assert_eq!(eq, monoidal_equiv(k, y, x));
                assert_eq!(eq, (x - y) % n == 0 || (x + y) % n == 0, "k={k} {x} {y}");
                let same_delta = BraidingParams::plus(k, x).unwrap().delta() == BraidingParams::plus(k, y).unwrap().delta();
                assert_eq!(eq, same_delta, "k={k} {x} {y}");
                for &z in &ells {
                    if eq && monoidal_equiv(k, y, z) {
                        assert!(monoidal_equiv(k, x, z));
                    }
                }
            }
        }
    }
}

#[test]
fn scalar_trait_agrees_with_operators() {
    let a = root_of_unity(12, 1);
    let b = root_of_unity(12, 5);
    assert_eq!(a.add_ref(&b), &a + &b);
    assert_eq!(a.mul_ref(&b), &a * &b);
}
