//! Acceptance checks. Prints one PASS or FAIL line per criterion and exits
//! non-zero when any criterion fails.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;
use std::time::Instant;

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{corr, sorted, sorted_owned, A3_TABLE};
use siltlab::corr::Corr;
use siltlab::rep::{EnumerationOptions, Module, Strategy};
use siltlab::silting::Members;
use siltlab::stability::{self, NumericalBudget, NumericalVerdict};
use siltlab::twoterm::{dim_weight, euler_pairing, Complex, KUniverse};

type Check = fn() -> Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn a3_census() -> Result<String, String> {
    let start = Instant::now();
    let c = corr("a3");
    let list = c.k.enumerate_two_term_silting().map_err(|e| e.to_string())?;
    let secs = start.elapsed().as_secs_f64();
    ensure(list.len() == 14, || format!("found {} silting objects", list.len()))?;
    ensure(list.iter().all(|u| u.len() == 3), || "a silting object without 3 summands".into())?;
    let distinct: BTreeSet<&Members> = list.iter().collect();
    ensure(distinct.len() == 14, || "duplicate silting objects".into())?;
    ensure(secs < 60.0, || format!("took {secs:.1}s"))?;
    Ok(format!("14 objects, 3 summands each, {secs:.2}s"))
}

fn table_reproduction() -> Result<String, String> {
    let c = corr("a3");
    let rows = c.correspondence_table().map_err(|e| e.to_string())?;
    ensure(rows.len() == 14, || format!("{} rows", rows.len()))?;
    for expected in &A3_TABLE {
        let u = sorted(expected.u);
        let row = rows
            .iter()
            .find(|r| sorted_owned(c.names(&r.silting)) == u)
            .ok_or_else(|| format!("no computed row for {u:?}"))?;
        let cols = [
            ("X", sorted_owned(c.names(&row.cotorsion.x)), sorted(expected.x)),
            ("Y", sorted_owned(c.names(&row.cotorsion.y)), sorted(expected.y)),
            ("thick", sorted_owned(c.names(&row.thick)), sorted(expected.thick)),
            ("wide", sorted_owned(c.module_names(&row.wide)), sorted(expected.wide)),
            ("torsion", sorted_owned(c.module_names(&row.torsion.t)), sorted(expected.torsion)),
        ];
        for (col, got, want) in cols {
            ensure(got == want, || format!("row {u:?}, column {col}: got {got:?}, expected {want:?}"))?;
        }
    }
    Ok("14 rows, 5 columns each, exact".into())
}

fn diagram() -> Result<String, String> {
    let mut total = 0;
    for (name, objects) in [("a3", 14), ("point", 2)] {
        let c = corr(name);
        let report = c.verify_main_diagram().map_err(|e| e.to_string())?;
        ensure(report.edges.len() == 3 * objects, || format!("{name}: {} edge checks", report.edges.len()))?;
        if let Some(e) = report.edges.iter().find(|e| !e.pass) {
            return Err(format!("{name}: {} fails at {:?}", e.edge, e.silting));
        }
        total += report.edges.len();
    }
    Ok(format!("{total} edge identities hold on A3 and the point"))
}

fn beta_iota() -> Result<String, String> {
    let c = corr("a3");
    let pairs = c.complete_cotorsion_pairs().map_err(|e| e.to_string())?;
    for p in &pairs {
        let back = c.iota_map(&c.beta_map(&p.x));
        ensure(back == p.x, || format!("iota(beta(X)) != X for X = {}", c.k.display(&p.x)))?;
    }
    let thicks = c.thick_with_enough_injectives().map_err(|e| e.to_string())?;
    for t in &thicks {
        let back = c.beta_map(&c.iota_map(t));
        ensure(back == *t, || format!("beta(iota(T)) != T for T = {}", c.k.display(t)))?;
    }
    ensure(pairs.len() == 14 && thicks.len() == 14, || {
        format!("{} complete cotorsion pairs, {} thick with enough injectives", pairs.len(), thicks.len())
    })?;
    Ok("14 complete cotorsion pairs and 14 thick subcategories round-trip".into())
}

fn square_semistability() -> Result<String, String> {
    let doc = common::document("square");
    let alg = Arc::new(doc.algebra.clone());
    let ku = KUniverse::build(&alg, &EnumerationOptions::default()).map_err(|e| e.to_string())?;
    let cx = |n: &str| Complex::from_decl(&alg, doc.complex(n).unwrap()).unwrap();
    let md = |n: &str| Module::from_decl(alg.clone(), doc.module(n).unwrap()).unwrap();
    let (x1, x2) = (cx("X1"), cx("X2"));
    let p = |i| Module::projective(&alg, i).unwrap();
    let one = alg.field().one();

    let s12 = stability::det_semi_invariant(&x1, &p(1)).map_err(|e| e.to_string())?.value;
    let s21 = stability::det_semi_invariant(&x2, &p(0)).map_err(|e| e.to_string())?.value;
    ensure(s12 == one && s21 == one, || format!("s(X1,P2) = {s12}, s(X2,P1) = {s21}"))?;

    let x = x1.direct_sum(&x2);
    for n in ["N10", "N01", "N00"] {
        ensure(!stability::is_m_semistable(&x, &md(n)), || format!("X1+X2 is {n}-semistable"))?;
        let v = stability::det_semi_invariant(&x, &md(n)).map_err(|e| e.to_string())?.value;
        ensure(v.is_zero(), || format!("s(X1+X2, {n}) = {v}"))?;
    }

    let budget = NumericalBudget {
        mult_bound: 2,
        ..NumericalBudget::default()
    };
    let v = stability::is_numerically_semistable(&x, &[1, 1], &ku, budget).map_err(|e| e.to_string())?;
    ensure(matches!(v, NumericalVerdict::WithinBudget { .. }), || format!("X1+X2 verdict {v:?}"))?;

    let stalks = Complex::stalk(&alg, &[0]).direct_sum(&Complex::shifted(&alg, &[0]));
    let v = stability::is_numerically_semistable(&stalks, &[1, 1], &ku, budget).map_err(|e| e.to_string())?;
    match v {
        NumericalVerdict::Refuted { source, pairing: -1, .. } if ku.display_set(&source) == "{P1[1]}" => {}
        other => return Err(format!("P1+P1[1] verdict {}", other.to_json(&ku))),
    }
    Ok("s(X1,P2) = s(X2,P1) = 1; X1+X2 fails M for all three (1,1) classes; numerical verdicts as expected".into())
}

fn kronecker() -> Result<String, String> {
    let alg = common::algebra("kronecker");
    let opts = EnumerationOptions {
        strategy: Strategy::Combined { prime: 2 },
        dim_bound: 4,
        ..EnumerationOptions::default()
    };
    let ku = KUniverse::build(&alg, &opts).map_err(|e| e.to_string())?;
    let mu = ku.modules();
    let regular: Vec<usize> = (0..ku.len())
        .filter(|&i| {
            ku.h0_index(i).is_some_and(|m| {
                let d = mu.get(m).dims();
                d[0] == d[1] && d[0] > 0
            })
        })
        .collect();
    for &i in &regular {
        let n = ku.get(i).h0().dims()[0] as i64;
        let g = ku.get(i).g_vector();
        ensure(g == vec![-n, n], || format!("{} has g-vector {g:?}", ku.name(i)))?;
    }
    let rational_11 = (0..mu.len()).filter(|&m| mu.get(m).dims() == [1, 1]).count();
    ensure(rational_11 >= 3, || format!("only {rational_11} regular classes of dimension (1,1)"))?;
    let c: Vec<&Complex> = regular.iter().map(|&i| ku.get(i)).collect();
    let w = stability::script_w(&c, mu);
    ensure(w.is_empty(), || format!("W(C) contains {:?}", w.iter().map(|&i| mu.name(i)).collect::<Vec<_>>()))?;
    ensure(!ku.is_complete(), || "the bounded Kronecker universe claims completeness".into())?;
    Ok(format!("W(C) = {{0}} for {} regular presentations among {} modules (truncated)", regular.len(), mu.len()))
}

fn sample_sets(pool: &[Members], rng: &mut ChaCha8Rng, n: usize) -> Vec<Members> {
    (0..n).map(|_| pool.choose(rng).unwrap().clone()).collect()
}

fn random_subset(len: usize, rng: &mut ChaCha8Rng) -> BTreeSet<usize> {
    (0..len).filter(|_| rng.random_bool(0.4)).collect()
}

fn all_subsets(n: usize) -> Vec<Members> {
    (0u32..1 << n).map(|mask| (0..n).filter(|i| mask & (1 << i) != 0).collect()).collect()
}

fn property_suites() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(siltlab::DEFAULT_SEED);
    let mut sweeps = 0;
    for name in ["a3", "square", "point"] {
        let c: Corr = corr(name);
        let ku = c.universe();
        let subsets = all_subsets(c.k.len());

        // (a)
        let resolving: Vec<Members> = subsets.iter().filter(|s| c.is_resolving(s)).cloned().collect();
        for s in sample_sets(&resolving, &mut rng, 200) {
            let b = c.beta_map(&s);
            ensure(c.is_thick(&b), || format!("{name}: beta({}) is not thick", c.k.display(&s)))?;
        }
        let ext_closed: Vec<Members> = subsets.iter().filter(|s| c.is_extension_closed(s)).cloned().collect();
        for s in sample_sets(&ext_closed, &mut rng, 200) {
            let i = c.iota_map(&s);
            ensure(c.is_resolving(&i), || format!("{name}: iota({}) is not resolving", c.k.display(&s)))?;
        }

        // (b)
        for _ in 0..200 {
            let h = random_subset(c.m.len(), &mut rng);
            let t = c.script_t(&h);
            ensure(c.is_thick(&t), || format!("{name}: T(H) not thick"))?;
            ensure(h.is_subset(&c.script_w(&t)), || format!("{name}: H not inside W(T(H))"))?;
            let cs = random_subset(c.k.len(), &mut rng);
            let w = c.script_w(&cs);
            ensure(c.m.is_wide(&w), || format!("{name}: W(C) not wide"))?;
            ensure(cs.is_subset(&c.script_t(&w)), || format!("{name}: C not inside T(W(C))"))?;
        }

        // (c)
        if name != "point" {
            for x in 0..ku.len() {
                for m in 0..c.m.len() {
                    let (xc, mm) = (ku.get(x), c.m.universe.get(m));
                    if euler_pairing(&xc.g_vector(), &dim_weight(mm)) != 0 {
                        continue;
                    }
                    sweeps += 1;
                    let v = stability::check_m_implies_numerical(xc, mm, ku, NumericalBudget::default())
                        .map_err(|e| e.to_string())?;
                    ensure(v.is_none(), || format!("{name}: counterexample {v:?}"))?;
                }
            }
        }

        // (d)
        for x in 0..ku.len() {
            for m in 0..c.m.len() {
                let (xc, mm) = (ku.get(x), c.m.universe.get(m));
                let pairing = euler_pairing(&xc.g_vector(), &dim_weight(mm));
                let top = common::oracle::hom_dim(&Module::projective_sum(ku.algebra(), xc.tgt()), mm) as i64;
                let bottom = common::oracle::hom_dim(&Module::projective_sum(ku.algebra(), xc.src()), mm) as i64;
                ensure(pairing == top - bottom, || format!("{name}: pairing mismatch at ({x}, {m})"))?;
                let kernel = siltlab::rep::precomposition_matrix(mm, xc.differential()).nullspace().len() as i64;
                let h0 = common::oracle::hom_dim(&xc.h0(), mm) as i64;
                ensure(kernel == h0, || format!("{name}: Hom(H0 X, M) mismatch at ({x}, {m})"))?;
            }
        }
    }
    Ok(format!("(a) (b) on 200 samples per algebra, (c) {sweeps} pairs without counterexample, (d) exact"))
}

fn oracles() -> Result<String, String> {
    let c = corr("a3");
    let ku = c.universe();
    let mu = ku.modules();
    let alg = ku.algebra();
    let mut n = 0;
    for a in 0..mu.len() {
        for b in 0..mu.len() {
            let (lib, brute) = (mu.get(a).hom(mu.get(b)).dim(), common::oracle::hom_dim(mu.get(a), mu.get(b)));
            ensure(lib == brute, || format!("Hom({}, {}): {lib} vs {brute}", mu.name(a), mu.name(b)))?;
            n += 1;
        }
    }
    for x in 0..ku.len() {
        for y in 0..ku.len() {
            let (cx, cy) = (ku.get(x), ku.get(y));
            let (lib, brute) = (cx.ext(cy).dim(), common::oracle::e_dim(alg, cx, cy));
            ensure(lib == brute, || format!("E({}, {}): {lib} vs {brute}", ku.name(x), ku.name(y)))?;
            let (lib, brute) = (cx.hom_k(cy).dim(), common::oracle::hom_k_dim(alg, cx, cy));
            ensure(lib == brute, || format!("Hom_K({}, {}): {lib} vs {brute}", ku.name(x), ku.name(y)))?;
            n += 1;
        }
    }
    Ok(format!("{n} pairs agree with the brute-force solvers"))
}

fn main() {
    let checks: [(&str, Check); 8] = [
        ("A3 silting census", a3_census),
        ("A3 correspondence table", table_reproduction),
        ("diagram commutativity", diagram),
        ("beta/iota round trips", beta_iota),
        ("square-algebra semistability", square_semistability),
        ("Kronecker non-injectivity of W", kronecker),
        ("property suites", property_suites),
        ("oracle equivalence", oracles),
    ];
    let mut failed = 0;
    for (i, (name, check)) in checks.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("PASS criterion {}: {name} ({detail})", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
