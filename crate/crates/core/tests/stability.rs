mod common;

use std::collections::BTreeSet;
use std::sync::Arc;

use common::corr;
use siltlab::algebra::{parse_document, ProjMap, DEFAULT_NILPOTENCY_BOUND};
use siltlab::error::Error;
use siltlab::field::Field;
use siltlab::rep::{hom_left_perp, hom_right_perp, EnumerationOptions, Module, Strategy};
use siltlab::stability::{self, NumericalBudget, NumericalVerdict};
use siltlab::twoterm::{dim_weight, euler_pairing, Complex, KUniverse};

struct Square {
    alg: Arc<siltlab::algebra::Algebra>,
    doc: siltlab::algebra::Document,
    ku: KUniverse,
}

impl Square {
    fn new() -> Square {
        let doc = common::document("square");
        let alg = Arc::new(doc.algebra.clone());
        let ku = KUniverse::build(&alg, &EnumerationOptions::default()).unwrap();
        Square { alg, doc, ku }
    }
    fn complex(&self, n: &str) -> Complex {
        Complex::from_decl(&self.alg, self.doc.complex(n).unwrap()).unwrap()
    }
    fn module(&self, n: &str) -> Module {
        Module::from_decl(self.alg.clone(), self.doc.module(n).unwrap()).unwrap()
    }
    fn projective(&self, v: usize) -> Module {
        Module::projective(&self.alg, v).unwrap()
    }
}

#[test]
fn square_semi_invariants() {
    let s = Square::new();
    let (x1, x2) = (s.complex("X1"), s.complex("X2"));
    let one = s.alg.field().one();
    assert_eq!(stability::det_semi_invariant(&x1, &s.projective(1)).unwrap().value, one);
    assert_eq!(stability::det_semi_invariant(&x2, &s.projective(0)).unwrap().value, one);
    assert!(stability::is_m_semistable(&x2, &s.projective(0)));
    let x = x1.direct_sum(&x2);
    for n in ["N10", "N01", "N00"] {
        assert!(stability::det_semi_invariant(&x, &s.module(n)).unwrap().value.is_zero());
    }
}

#[test]
fn zero_complex_has_unit_semi_invariant() {
    let s = Square::new();
    let zero = Complex::zero(&s.alg);
    for m in s.ku.modules().modules() {
        assert_eq!(stability::det_semi_invariant(&zero, m).unwrap().value, s.alg.field().one());
    }
}

#[test]
fn non_square_maps_report_the_pairing() {
    let s = Square::new();
    let x1 = s.complex("X1");
    let s1 = Module::simple(&s.alg, 0).unwrap();
    match stability::det_semi_invariant(&x1, &s1) {
        Err(Error::NonSquare(p)) => assert_eq!(p, -1),
        other => panic!("expected a non-square error, got {other:?}"),
    }
}

#[test]
fn presentation_of_s2_is_not_s2_semistable() {
    let c = corr("a3");
    let ku = c.universe();
    let x = ku.get(ku.find("pres(S2)").unwrap());
    let m = ku.modules().get(ku.modules().find("S2").unwrap());
    assert!(!stability::is_m_semistable(x, m));
}

/// Reorders the summands of both terms; the determinant changes by a sign at most.
fn permuted(x: &Complex) -> Complex {
    let d = x.differential();
    let rows: Vec<usize> = (0..d.rows()).rev().collect();
    let cols: Vec<usize> = (0..d.cols()).rev().collect();
    Complex::new(x.algebra(), d.select(&rows, &cols)).unwrap()
}

#[test]
fn semi_invariant_nonvanishing_is_basis_independent() {
    for name in ["a3", "square"] {
        let c = corr(name);
        let ku = c.universe();
        for i in 0..ku.len() {
            for j in 0..ku.len() {
                let x = ku.get(i).direct_sum(ku.get(j));
                let y = permuted(&x);
                for m in ku.modules().modules() {
                    match (stability::det_semi_invariant(&x, m), stability::det_semi_invariant(&y, m)) {
                        (Ok(a), Ok(b)) => {
                            assert_eq!(a.value.is_zero(), b.value.is_zero());
                            let f = a.value.field();
                            assert!(a.value == b.value || a.value == f.zero().sub_ref(&b.value));
                        }
                        (Err(_), Err(_)) => {}
                        _ => panic!("pairing changed under a permutation"),
                    }
                }
            }
        }
    }
}

#[test]
fn semistability_ignores_contractible_summands() {
    let c = corr("a3");
    let ku = c.universe();
    let alg = ku.algebra();
    for v in 0..3 {
        let contractible = Complex::new(alg, ProjMap::identity(alg, &[v])).unwrap();
        for i in 0..ku.len() {
            let x = ku.get(i);
            let y = x.direct_sum(&contractible);
            for m in ku.modules().modules() {
                assert_eq!(stability::is_m_semistable(x, m), stability::is_m_semistable(&y, m));
                let raw = stability::det_semi_invariant(&y, m).map(|s| s.value.is_zero());
                let min = stability::det_semi_invariant(x, m).map(|s| s.value.is_zero());
                assert_eq!(raw.ok(), min.ok());
            }
        }
    }
}

#[test]
fn numerical_verdicts_on_the_square_algebra() {
    let s = Square::new();
    let budget = NumericalBudget::default();
    let x = s.complex("X1").direct_sum(&s.complex("X2"));
    let v = stability::is_numerically_semistable(&x, &[1, 1], &s.ku, budget).unwrap();
    assert!(!v.is_refuted());
    let json = v.to_json(&s.ku);
    assert_eq!(json["semistable"], "true-within-budget");
    assert_eq!(json["budget"]["mult_bound"], 2);

    let stalks = Complex::stalk(&s.alg, &[0]).direct_sum(&Complex::shifted(&s.alg, &[0]));
    let v = stability::is_numerically_semistable(&stalks, &[1, 1], &s.ku, budget).unwrap();
    match &v {
        NumericalVerdict::Refuted { source, pairing, map } => {
            assert_eq!(*pairing, -1);
            assert_eq!(s.ku.display_set(source), "{P1[1]}");
            assert!(map.is_none(), "a split summand needs no explicit map");
        }
        other => panic!("expected a refutation, got {other:?}"),
    }

    let zero = Complex::zero(&s.alg);
    assert!(!stability::is_numerically_semistable(&zero, &[1, 1], &s.ku, budget).unwrap().is_refuted());
    let v = stability::is_numerically_semistable(&s.complex("X1"), &[1, 0], &s.ku, budget).unwrap();
    assert!(matches!(v, NumericalVerdict::Unbalanced(_)));
}

#[test]
fn refuting_maps_are_inflations_with_negative_pairing() {
    let c = corr("a3");
    let ku = c.universe();
    let budget = NumericalBudget::default();
    let mut refuted_by_map = 0;
    // weights range over all of K₀, not only dimension vectors
    let weights: Vec<Vec<i64>> = (0..27).map(|k| vec![k % 3 - 1, (k / 3) % 3 - 1, k / 9 - 1]).collect();
    for (i, j) in (0..ku.len()).flat_map(|i| (i..ku.len()).map(move |j| (i, j))) {
        for d in &weights {
            let d = d.clone();
            let x = &ku.get(i).direct_sum(ku.get(j));
            if let NumericalVerdict::Refuted {
                source,
                map: Some(f),
                pairing,
            } = stability::is_numerically_semistable(x, &d, ku, budget).unwrap()
            {
                let y = ku.sum(&source);
                assert!(y.is_inflation(&f));
                assert!(pairing < 0);
                assert_eq!(pairing, euler_pairing(&y.g_vector(), &d));
                refuted_by_map += 1;
            }
        }
    }
    assert!(refuted_by_map > 0);
}

#[test]
fn m_semistable_implies_numerically_semistable() {
    let s = Square::new();
    let budget = NumericalBudget::default();
    assert!(stability::check_m_implies_numerical(&s.complex("X1"), &s.projective(1), &s.ku, budget)
        .unwrap()
        .is_none());
    for name in ["a3", "square"] {
        let c = corr(name);
        let ku = c.universe();
        for i in 0..ku.len() {
            for j in i..ku.len() {
                let x = ku.get(i).direct_sum(ku.get(j));
                for m in ku.modules().modules() {
                    let v = stability::check_m_implies_numerical(&x, m, ku, budget).unwrap();
                    assert!(v.is_none(), "{name}: {v:?}");
                }
            }
        }
    }
}

#[test]
fn script_t_and_script_w_of_empty_sets() {
    let c = corr("a3");
    assert_eq!(c.script_w(&BTreeSet::new()), c.m.all());
    assert_eq!(c.script_t(&BTreeSet::new()), c.k.all());
}

fn a3_over(p: u32) -> KUniverse {
    let doc = parse_document(&common::fixture_text("a3"), Some(Field::Prime(p)), DEFAULT_NILPOTENCY_BOUND).unwrap();
    KUniverse::build(&Arc::new(doc.algebra), &EnumerationOptions::default()).unwrap()
}

#[test]
fn king_semistability_examples() {
    let ku = a3_over(7);
    let alg = ku.algebra();
    assert!(stability::king_semistable(&Module::zero(alg), &[3, -1, 2]).unwrap());
    let s2 = Module::simple(alg, 1).unwrap();
    assert!(stability::king_semistable(&s2, &[1, 0, -1]).unwrap());
    // the presentation of S2 pairs to 1 with S2
    let g = Complex::presentation_of(&s2).g_vector();
    assert_eq!(euler_pairing(&g, &dim_weight(&s2)), 1);
    assert!(!stability::king_semistable(&s2, &g).unwrap());
    // P2 has the submodule P1; θ = (1, -1, 0) pairs positively with it
    let p2 = Module::projective(alg, 1).unwrap();
    assert!(!stability::king_semistable(&p2, &[1, -1, 0]).unwrap());
    assert!(stability::king_semistable(&p2, &[-1, 1, 0]).unwrap());

    let q = common::algebra("a3");
    assert!(matches!(
        stability::king_semistable(&Module::simple(&q, 1).unwrap(), &[0, 0, 0]),
        Err(Error::Refused(_))
    ));
}

/// A submodule `N ⊂ M` gives an injection `Hom(X⁰, N) -> Hom(X⁻¹, N)` whenever
/// the map for `M` is invertible, so `⟨[X], [N]⟩ <= 0`.
#[test]
fn m_semistable_modules_are_king_semistable_for_the_g_vector() {
    let ku = a3_over(7);
    let mut checked = 0;
    for i in 0..ku.len() {
        for m in ku.modules().modules() {
            let x = ku.get(i);
            if stability::is_m_semistable(x, m) {
                assert!(stability::king_semistable(m, &x.g_vector()).unwrap());
                checked += 1;
            }
        }
    }
    assert!(checked > 0);
}

#[test]
fn w_theta_for_presilting_classes() {
    let c = corr("a3");
    let ku = c.universe();
    let mu = ku.modules();
    let subsets = (0u32..1 << ku.len()).map(|mask| (0..ku.len()).filter(|i| mask & (1 << i) != 0).collect::<Vec<_>>());
    let mut exact = 0;
    for u in subsets.filter(|u| !u.is_empty() && c.k.is_presilting(&u.iter().copied().collect())) {
        let sum = ku.sum(&u);
        let theta = sum.g_vector();
        let w = stability::w_theta_members(&theta, ku, 1);
        let nu: Vec<Module> = u.iter().map(|&i| ku.get(i).h_minus1_nu()).collect();
        let h0: Vec<Module> = u.iter().map(|&i| ku.get(i).h0()).collect();
        let left: BTreeSet<usize> = hom_left_perp(mu, &nu.iter().collect::<Vec<_>>()).into_iter().collect();
        let right: BTreeSet<usize> = hom_right_perp(mu, &h0.iter().collect::<Vec<_>>()).into_iter().collect();
        let expected: Vec<usize> = left.intersection(&right).copied().collect();
        assert!(w.exact);
        assert_eq!(w.members, expected, "theta = {theta:?}");
        assert_eq!(stability::script_w(&[&sum], mu), expected);
        exact += 1;
    }
    assert!(exact > 14);
}

#[test]
fn w_theta_of_zero_is_everything() {
    let c = corr("a3");
    let w = stability::w_theta_members(&[0, 0, 0], c.universe(), 2);
    assert_eq!(w.members, (0..c.m.len()).collect::<Vec<_>>());
    assert!(w.exact);
}

#[test]
fn kronecker_regular_presentations() {
    let alg = common::algebra("kronecker");
    let opts = EnumerationOptions {
        strategy: Strategy::Combined { prime: 2 },
        dim_bound: 4,
        ..EnumerationOptions::default()
    };
    let ku = KUniverse::build(&alg, &opts).unwrap();
    let mu = ku.modules();
    let w = stability::w_theta_members(&[-1, 1], &ku, 1);
    assert!(!w.exact);
    let ones: Vec<usize> = (0..mu.len()).filter(|&i| mu.get(i).dims() == [1, 1]).collect();
    assert!(ones.len() >= 3);
    assert!(ones.iter().all(|i| w.members.contains(i)));
    assert!(w.members.iter().all(|&i| mu.get(i).dims()[0] == mu.get(i).dims()[1]));
    // each (1,1) regular is semistable for every other regular presentation of its class
    for &a in &ones {
        for &b in &ones {
            let x = Complex::presentation_of(mu.get(a));
            assert_eq!(stability::is_m_semistable(&x, mu.get(b)), a != b);
        }
    }
}
