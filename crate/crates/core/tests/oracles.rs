//! Library Hom and E dimensions against the brute-force solvers in
//! `common::oracle`.

mod common;

use common::oracle;

fn check_modules(name: &str) {
    let c = common::corr(name);
    let mu = c.universe().modules();
    for a in mu.modules() {
        for b in mu.modules() {
            assert_eq!(a.hom(b).dim(), oracle::hom_dim(a, b), "{name}: Hom({}, {})", a.display(), b.display());
        }
    }
}

fn check_complexes(name: &str) {
    let c = common::corr(name);
    let ku = c.universe();
    let alg = ku.algebra();
    for (i, x) in ku.complexes().iter().enumerate() {
        for (j, y) in ku.complexes().iter().enumerate() {
            assert_eq!(x.ext(y).dim(), oracle::e_dim(alg, x, y), "{name}: E({}, {})", ku.name(i), ku.name(j));
            assert_eq!(x.hom_k(y).dim(), oracle::hom_k_dim(alg, x, y), "{name}: Hom_K({}, {})", ku.name(i), ku.name(j));
        }
    }
}

#[test]
fn module_hom_on_a3() {
    check_modules("a3");
}

#[test]
fn module_hom_on_the_square_algebra() {
    check_modules("square");
}

#[test]
fn complexes_on_a3() {
    check_complexes("a3");
}

#[test]
fn complexes_on_the_square_algebra() {
    check_complexes("square");
}

#[test]
fn hom_from_projectives_counts_paths() {
    let alg = common::algebra("a3");
    for i in 0..3 {
        for j in 0..3 {
            let (pi, pj) = (
                siltlab::rep::Module::projective(&alg, i).unwrap(),
                siltlab::rep::Module::projective(&alg, j).unwrap(),
            );
            assert_eq!(oracle::hom_dim(&pi, &pj), pj.dims()[i]);
        }
    }
}

/// Spot values: the stalk projectives have no extensions, the shifted ones
/// receive none, and `Hom_K(pres S2, P2) = 0` since the inclusion `P1 -> P2`
/// is null-homotopic on the stalk.
#[test]
fn spot_values_on_a3() {
    let c = common::corr("a3");
    let ku = c.universe();
    let alg = ku.algebra();
    let get = |n: &str| ku.get(ku.find(n).unwrap());
    assert_eq!(oracle::hom_k_dim(alg, get("pres(S2)"), get("P2")), 0);
    assert_eq!(oracle::hom_k_dim(alg, get("P2"), get("pres(S2)")), 1);
    for x in ku.complexes() {
        for v in 0..3 {
            assert_eq!(oracle::e_dim(alg, get(&format!("P{}", v + 1)), x), 0);
            assert_eq!(oracle::e_dim(alg, x, get(&format!("P{}[1]", v + 1))), 0);
        }
    }
}
