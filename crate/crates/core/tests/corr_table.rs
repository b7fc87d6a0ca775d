mod common;

use std::collections::BTreeSet;

use common::{corr, ids, sorted, sorted_owned, A3_TABLE};
use siltlab::corr::{Corr, TorsionPair};

fn torsion_classes(c: &Corr) -> Vec<BTreeSet<usize>> {
    let n = c.m.len();
    (0u32..1 << n)
        .map(|mask| (0..n).filter(|i| mask & (1 << i) != 0).collect::<BTreeSet<usize>>())
        .filter(|s| c.m.is_torsion_class(s))
        .collect()
}

fn torsion_pair(c: &Corr, t: &BTreeSet<usize>) -> TorsionPair {
    TorsionPair {
        t: t.clone(),
        f: c.m.right_perp(t),
    }
}

#[test]
fn a3_rows_match_the_hand_encoded_table() {
    let c = corr("a3");
    let rows = c.correspondence_table().unwrap();
    assert_eq!(rows.len(), A3_TABLE.len());
    for expected in &A3_TABLE {
        let row = rows
            .iter()
            .find(|r| sorted_owned(c.names(&r.silting)) == sorted(expected.u))
            .expect("row present");
        assert_eq!(sorted_owned(c.names(&row.cotorsion.x)), sorted(expected.x));
        assert_eq!(sorted_owned(c.names(&row.cotorsion.y)), sorted(expected.y));
        assert_eq!(sorted_owned(c.names(&row.thick)), sorted(expected.thick));
        assert_eq!(sorted_owned(c.module_names(&row.wide)), sorted(expected.wide));
        assert_eq!(sorted_owned(c.module_names(&row.torsion.t)), sorted(expected.torsion));
    }
}

#[test]
fn counts_agree_across_all_five_columns() {
    for (name, n) in [("a3", 14), ("square", 6), ("point", 2)] {
        let c = corr(name);
        let rows = c.correspondence_table().unwrap();
        let distinct = |f: &dyn Fn(&siltlab::corr::CorrespondenceRow) -> String| {
            rows.iter().map(f).collect::<BTreeSet<_>>().len()
        };
        assert_eq!(rows.len(), n, "{name}");
        assert_eq!(distinct(&|r| format!("{:?}", r.cotorsion)), n, "{name}");
        assert_eq!(distinct(&|r| format!("{:?}", r.thick)), n, "{name}");
        assert_eq!(distinct(&|r| format!("{:?}", r.wide)), n, "{name}");
        assert_eq!(distinct(&|r| format!("{:?}", r.torsion)), n, "{name}");
        assert_eq!(torsion_classes(&c).len(), n, "{name}");
        assert_eq!(c.complete_cotorsion_pairs().unwrap().len(), n, "{name}");
        assert_eq!(c.thick_with_enough_injectives().unwrap().len(), n, "{name}");
    }
}

#[test]
fn phi_and_theta_are_inverse() {
    for name in ["a3", "square", "point"] {
        let c = corr(name);
        for t in torsion_classes(&c) {
            let tp = torsion_pair(&c, &t);
            let cp = c.theta_map(&tp);
            assert!(c.is_complete_cotorsion_pair(&cp), "{name}");
            assert_eq!(c.phi(&cp), tp, "{name}");
        }
        for cp in c.complete_cotorsion_pairs().unwrap() {
            assert_eq!(c.theta_map(&c.phi(&cp)), cp, "{name}");
        }
    }
}

#[test]
fn xi_and_psi_are_inverse() {
    for name in ["a3", "square", "point"] {
        let c = corr(name);
        for u in c.k.enumerate_two_term_silting().unwrap() {
            let cp = c.xi(&u);
            assert!(c.is_complete_cotorsion_pair(&cp), "{name}");
            assert_eq!(c.psi(&cp).unwrap(), u, "{name}");
        }
        for cp in c.complete_cotorsion_pairs().unwrap() {
            assert_eq!(c.xi(&c.psi(&cp).unwrap()), cp, "{name}");
        }
    }
}

#[test]
fn every_cotorsion_pair_on_a3_is_complete() {
    let c = corr("a3");
    let all = c.cotorsion_pairs().unwrap();
    assert_eq!(all, c.complete_cotorsion_pairs().unwrap());
    for p in &all {
        assert!(c.is_resolving(&p.x));
        assert!(c.is_extension_closed(&p.y));
    }
}

#[test]
fn enough_injectives_two_ways() {
    for name in ["a3", "square", "point"] {
        let c = corr(name);
        for t in c.thick_subcategories().unwrap() {
            assert_eq!(
                c.has_enough_injectives(&t),
                c.has_enough_injectives_by_inflations(&t),
                "{name}: {}",
                c.k.display(&t)
            );
        }
    }
}

#[test]
fn beta_and_iota_round_trip() {
    for name in ["a3", "square", "point"] {
        let c = corr(name);
        for p in c.complete_cotorsion_pairs().unwrap() {
            let b = c.beta_map(&p.x);
            assert!(c.is_thick(&b));
            assert_eq!(c.iota_map(&b), p.x, "{name}");
        }
        for t in c.thick_with_enough_injectives().unwrap() {
            assert_eq!(c.beta_map(&c.iota_map(&t)), t, "{name}");
        }
    }
}

#[test]
fn wide_and_thick_columns_correspond() {
    let c = corr("a3");
    for row in c.correspondence_table().unwrap() {
        assert_eq!(c.script_t(&row.wide), row.thick);
        assert_eq!(c.script_w(&row.thick), row.wide);
        assert!(c.m.is_wide(&row.wide));
        assert!(c.is_thick(&row.thick));
    }
}

#[test]
fn alpha_lands_in_wide_subcategories() {
    let c = corr("a3");
    let images: BTreeSet<BTreeSet<usize>> = torsion_classes(&c).iter().map(|t| c.alpha_map(t)).collect();
    assert_eq!(images.len(), 14);
    assert!(images.iter().all(|w| c.m.is_wide(w)));
}

#[test]
fn small_examples_by_name() {
    let c = corr("a3");
    let s2 = c.m.universe.find("S2").unwrap();
    let fac = c.m.fac(&[s2].into());
    assert_eq!(c.module_names(&fac), vec!["S2"]);
    assert_eq!(c.k.thick_closure(&ids(&c, &["P1"])), ids(&c, &["P1", "P1[1]"]));
    assert_eq!(c.stalks(), ids(&c, &["P1", "P2", "P3"]));
    assert!(c.is_resolving(&ids(&c, &["P1", "P2", "P3"])));
    assert!(!c.is_resolving(&ids(&c, &["P1", "P2"])));
}

#[test]
fn main_diagram_commutes() {
    for (name, n) in [("a3", 14), ("square", 6), ("point", 2)] {
        let report = corr(name).verify_main_diagram().unwrap();
        assert_eq!(report.edges.len(), 3 * n);
        assert!(report.all_pass(), "{name}");
        assert!(report.complete);
    }
}

#[test]
fn json_rows_have_five_columns() {
    let c = corr("a3");
    let rows = c.correspondence_table().unwrap();
    let text = serde_json::to_string(&rows.iter().map(|r| c.row_json(r)).collect::<Vec<_>>()).unwrap();
    let back: serde_json::Value = serde_json::from_str(&text).unwrap();
    let arr = back.as_array().unwrap();
    assert_eq!(arr.len(), 14);
    for r in arr {
        let keys: BTreeSet<&str> = r.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(keys, ["cotorsion_pair", "silting", "thick", "torsion_class", "wide"].into());
        assert_eq!(r["silting"].as_array().unwrap().len(), 3);
    }
}

#[test]
fn hasse_diagram_of_thick_subcategories() {
    let c = corr("a3");
    let thick = c.thick_subcategories().unwrap();
    let dot = c.hasse_dot(&thick);
    assert!(dot.starts_with("digraph thick {"));
    assert_eq!(dot.matches("[label=").count(), thick.len());
    let edges = dot.lines().filter(|l| l.contains("->")).count();
    // covering pairs computed directly
    let covers = thick
        .iter()
        .flat_map(|a| thick.iter().map(move |b| (a, b)))
        .filter(|(a, b)| a != b && a.is_subset(b))
        .filter(|(a, b)| !thick.iter().any(|m| m != *a && m != *b && a.is_subset(m) && m.is_subset(b)))
        .count();
    assert_eq!(edges, covers);
    assert!(covers > 0);
}
