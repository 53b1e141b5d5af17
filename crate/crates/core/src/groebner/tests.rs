use proptest::prelude::*;

use super::*;
use crate::hilbert::{graded_dim_oracle, hilbert_function, krull_dim};
use crate::testing::{col, module, poly, quotient, random_small_module, ring};

fn ideal_gb(r: &crate::algebra::Ring, gens: &[&str]) -> GroebnerBasis {
    let f = FreeModule::standard(r.clone(), 1);
    let cols: Vec<Column> = gens.iter().map(|g| vec![poly(r, g)]).collect();
    buchberger(&f, &cols, TermOrder::Top).unwrap()
}

fn sorted_polys(gb: &GroebnerBasis) -> Vec<Polynomial> {
    let mut v: Vec<Polynomial> = gb.generators().into_iter().map(|mut c| c.remove(0)).collect();
    // ascending degree, then descending degrevlex
    v.sort_by_key(|p| {
        let m = p.leading().unwrap().0;
        (m.degree(), std::cmp::Reverse(m))
    });
    v
}

#[test]
fn basis_of_xy_and_sum_of_squares() {
    let r = ring(2);
    let gb = ideal_gb(&r, &["x*y", "x^2 + y^2"]);
    assert_eq!(sorted_polys(&gb), vec![poly(&r, "x^2 + y^2"), poly(&r, "x*y"), poly(&r, "y^3")]);
    assert!(gb.is_groebner());
    // hand check: S(x^2+y^2, xy) = y^3, and y^3 is then a basis element
    let s = poly(&r, "y*(x^2 + y^2) - x*(x*y)");
    assert_eq!(s, poly(&r, "y^3"));
}

#[test]
fn trivial_bases() {
    let r = ring(2);
    assert_eq!(sorted_polys(&ideal_gb(&r, &["x"])), vec![poly(&r, "x")]);
    let empty = ideal_gb(&r, &[]);
    assert!(empty.is_empty());
    assert!(ideal_gb(&r, &["0"]).is_empty());
}

#[test]
fn normal_forms() {
    let r = ring(2);
    let nf = |gens: &[&str], v: &str| ideal_gb(&r, gens).normal_form(&vec![poly(&r, v)]).unwrap().remove(0);
    assert!(nf(&["x*y"], "x^2*y").is_zero());
    assert_eq!(nf(&["x^2 + y^2"], "x^2"), poly(&r, "-y^2"));
    // adding the generator back recovers x^2
    assert_eq!(poly(&r, "-y^2").add(&poly(&r, "x^2 + y^2"), r.field()), poly(&r, "x^2"));
    assert!(nf(&["x*y", "x^2 + y^2"], "y^3").is_zero());
}

#[test]
fn normal_form_rejects_foreign_vectors() {
    let r = ring(2);
    let gb = ideal_gb(&r, &["x*y"]);
    assert!(matches!(gb.normal_form(&col(&r, &["x", "y"])), Err(Error::AmbientMismatch(_))));
    assert!(matches!(gb.normal_form(&col(&r, &["x + y^2"])), Err(Error::AmbientMismatch(_))));
}

#[test]
fn degree_cap_is_reported() {
    let r = ring(2);
    let f = FreeModule::standard(r.clone(), 1);
    let gens = vec![vec![poly(&r, "x^3 - y^3")], vec![poly(&r, "x^2*y - y^3")]];
    let err = buchberger_with(&f, &gens, TermOrder::Top, GbConfig { degree_cap: 3 }).unwrap_err();
    assert!(matches!(err, Error::DegreeLimitExceeded { cap: 3, .. }));
}

fn free(r: &crate::algebra::Ring, twists: &[i64]) -> FreeModule {
    FreeModule::new(r.clone(), twists.to_vec())
}

#[test]
fn koszul_syzygy() {
    let r = ring(2);
    let (src, syz) = syzygies(&free(&r, &[0]), &[col(&r, &["x"]), col(&r, &["y"])]).unwrap();
    assert_eq!(src.twists(), &[1, 1]);
    assert_eq!(syz.len(), 1);
    let s = &syz[0];
    assert!(s == &col(&r, &["y", "-x"]) || s == &col(&r, &["-y", "x"]));
}

#[test]
fn syzygy_of_x2_xy() {
    let r = ring(2);
    let gens = [col(&r, &["x^2"]), col(&r, &["x*y"])];
    let (src, syz) = syzygies(&free(&r, &[0]), &gens).unwrap();
    assert_eq!(src.twists(), &[2, 2]);
    assert_eq!(syz.len(), 1);
    assert!(syz[0] == col(&r, &["y", "-x"]) || syz[0] == col(&r, &["-y", "x"]));
    // brute force: the syzygy module of (x^2, xy) has dims 0,0,0,1,2,3 in degrees 0..=5,
    // i.e. it is R(-3) generated in degree 3
    let module = Presentation::from_parts_unchecked(src.clone(), vec![col(&r, &["x^2"]), col(&r, &["x*y"])]);
    let _ = module;
    for d in 0..=5i64 {
        let source_dim = src.dim_in_degree(d);
        let image_dim = {
            let img = Presentation::new(free(&r, &[0]), vec![]).unwrap();
            let _ = img;
            let ideal = quotient(&r, &["x^2", "x*y"]);
            r.dim_in_degree(d) - graded_dim_oracle(&ideal, d).unwrap()
        };
        let expected = if d >= 3 { (d - 2) as u64 } else { 0 };
        assert_eq!(source_dim - image_dim, expected, "degree {d}");
    }
}

#[test]
fn principal_ideal_has_no_syzygies() {
    let r = ring(2);
    let (_, syz) = syzygies(&free(&r, &[0]), &[col(&r, &["x"])]).unwrap();
    assert!(syz.is_empty());
}

#[test]
fn kernel_of_multiplication_by_y() {
    let r = ring(2);
    let m = quotient(&r, &["x^2", "x*y"]);
    let k = kernel_of_map(&free(&r, &[1]), &[col(&r, &["y"])], &m).unwrap();
    assert_eq!(k.generators, vec![col(&r, &["x"])]);
    assert_eq!(k.module.ambient().twists(), &[2]);
    // (x) ⊆ (I : y) and (I : y) ⊆ (x)
    assert!(m.is_zero_element(&col(&r, &["x*y"])).unwrap());
    let colon_gb = ideal_gb(&r, &["x"]);
    for g in ["x^2", "x*y"] {
        assert!(colon_gb.contains(&col(&r, &[g])).unwrap());
    }
}

#[test]
fn trivial_kernels() {
    let r = ring(2);
    let id = kernel_of_map(&free(&r, &[0]), &[col(&r, &["1"])], &Presentation::free(free(&r, &[0]))).unwrap();
    assert!(id.generators.is_empty());
    let zero = kernel_of_map(&free(&r, &[1]), &[col(&r, &["0"])], &Presentation::free(free(&r, &[0]))).unwrap();
    assert_eq!(zero.generators, vec![col(&r, &["1"])]);
    assert!(zero.module.relations().is_empty());
}

#[test]
fn kernel_checks_degrees() {
    let r = ring(2);
    let err = kernel_of_map(&free(&r, &[0]), &[col(&r, &["y"])], &Presentation::free(free(&r, &[0])));
    assert!(matches!(err, Err(Error::AmbientMismatch(_))));
    let other = ring(3);
    let err = kernel_of_map(&free(&other, &[1]), &[col(&other, &["y"])], &Presentation::free(free(&r, &[0])));
    assert!(matches!(err, Err(Error::RingMismatch)));
}

#[test]
fn ideal_as_submodule() {
    let r = ring(2);
    let s = submodule_presentation(&Presentation::free(free(&r, &[0])), &[col(&r, &["x^2"]), col(&r, &["x*y"])]).unwrap();
    assert_eq!(s.ambient().twists(), &[2, 2]);
    assert_eq!(s.relations().len(), 1);
    assert_eq!(s.ambient().column_degree(&s.relations()[0]), Ok(Some(3)));
    assert_eq!(graded_dim_oracle(&s, 2).unwrap(), 2);

    let q = quotient(&r, &["x"]);
    let z = submodule_presentation(&q, &[col(&r, &["x"])]).unwrap();
    assert!(z.is_zero_module().unwrap());
}

#[test]
fn full_submodule_is_isomorphic() {
    let r = ring(2);
    let m = module(&r, &[0, 1], &[&["x^2", "y"], &["0", "x*y"]]);
    let basis: Vec<Column> = (0..2).map(|k| m.ambient().basis_column(k)).collect();
    let s = submodule_presentation(&m, &basis).unwrap();
    for d in 0..=10 {
        assert_eq!(hilbert_function(&s, d).unwrap(), hilbert_function(&m, d).unwrap());
    }
}

#[test]
fn h0_examples() {
    let r = ring(2);
    let h = h0_submodule(&quotient(&r, &["x^2", "x*y"])).unwrap();
    assert_eq!(h.ambient().twists(), &[1]);
    let dims: Vec<u64> = (0..5).map(|d| graded_dim_oracle(&h, d).unwrap()).collect();
    assert_eq!(dims, vec![0, 1, 0, 0, 0]);

    assert!(h0_submodule(&Presentation::free(free(&r, &[0]))).unwrap().is_zero_module().unwrap());

    let k = quotient(&r, &["x", "y"]);
    let hk = h0_submodule(&k).unwrap();
    for d in -1..4 {
        assert_eq!(hilbert_function(&hk, d).unwrap(), hilbert_function(&k, d).unwrap());
    }
}

#[test]
fn h0_needs_high_powers() {
    // (x^5, x^4 y): saturation is (x^4), found only after k reaches 1, 2, 4, 8
    let r = ring(2);
    let m = quotient(&r, &["x^5", "x^4*y^3"]);
    let sat = saturation(&m).unwrap();
    let gb = buchberger(m.ambient(), &sat, TermOrder::Top).unwrap();
    assert_eq!(gb, ideal_gb(&r, &["x^5", "x^4*y^3", "x^4"]));
}

#[test]
fn minimal_presentation_removes_units() {
    let r = ring(2);
    // generator e1 is redundant: e1 = x e0
    let m = module(&r, &[0, 1], &[&["x", "-1"], &["y^2", "0"]]);
    let mp = minimal_presentation(&m).unwrap();
    assert_eq!(mp.ambient().twists(), &[0]);
    assert_eq!(mp.relations(), &[col(&r, &["y^2"])]);
    for d in 0..6 {
        assert_eq!(hilbert_function(&mp, d).unwrap(), hilbert_function(&m, d).unwrap());
    }
    // a redundant relation disappears too
    let m = quotient(&r, &["x", "x*y", "y"]);
    assert_eq!(minimal_presentation(&m).unwrap().relations().len(), 2);
}

/// Degree-`d` span test by dense linear algebra: `v` lies in the submodule iff
/// adding it as a relation leaves the degree-`d` quotient dimension unchanged.
fn in_submodule_brute(ambient: &FreeModule, gens: &[Column], v: &Column, d: i64) -> bool {
    let base = Presentation::from_parts_unchecked(ambient.clone(), gens.to_vec());
    let with = base.with_relations([v.clone()]);
    graded_dim_oracle(&base, d).unwrap() == graded_dim_oracle(&with, d).unwrap()
}

fn random_vector(m: &Presentation, seed: u64) -> Option<(Column, i64)> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let lo = m.ambient().twists().iter().copied().min()?;
    let d = lo + rng.gen_range(0..=3);
    // bias towards members: combine relations with random multipliers
    let mut v = crate::random::random_column(m.ambient(), d, 0.7, 2, &mut rng);
    if rng.gen_bool(0.5) {
        let field = m.ring().field();
        v = m.ambient().zero_column();
        for rel in m.relations() {
            let Ok(Some(rd)) = m.ambient().column_degree(rel) else { continue };
            if rd > d {
                continue;
            }
            let mult = crate::random::random_form(m.ring(), (d - rd) as u32, 2, &mut rng);
            for (e, p) in v.iter_mut().zip(rel) {
                *e = e.add(&mult.mul(p, field), field);
            }
        }
    }
    Some((v, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn prop_buchberger_criterion(seed in any::<u64>()) {
        let m = random_small_module(seed);
        prop_assert!(m.groebner_basis().unwrap().is_groebner());
    }

    #[test]
    fn prop_membership_matches_linear_algebra(seed in any::<u64>(), vseed in any::<u64>()) {
        let m = random_small_module(seed);
        if let Some((v, d)) = random_vector(&m, vseed) {
            let fast = m.is_zero_element(&v).unwrap();
            prop_assert_eq!(fast, in_submodule_brute(m.ambient(), m.relations(), &v, d));
        }
    }

    #[test]
    fn prop_syzygies_compose_to_zero(seed in any::<u64>()) {
        let m = random_small_module(seed);
        let field = m.ring().field();
        let (_, syz) = syzygies(m.ambient(), m.relations()).unwrap();
        for s in &syz {
            let mut acc = m.ambient().zero_column();
            for (coef, rel) in s.iter().zip(m.relations()) {
                for (e, p) in acc.iter_mut().zip(rel) {
                    *e = e.add(&coef.mul(p, field), field);
                }
            }
            prop_assert!(acc.iter().all(Polynomial::is_zero));
        }
    }

    #[test]
    fn prop_h0_has_finite_length(seed in any::<u64>()) {
        let m = random_small_module(seed);
        let h = h0_submodule(&m).unwrap();
        prop_assert!(krull_dim(&h).unwrap() <= 0);
    }

    #[test]
    fn prop_minimal_presentation_preserves_hilbert_function(seed in any::<u64>()) {
        let m = random_small_module(seed);
        let mp = minimal_presentation(&m).unwrap();
        for d in -2..8 {
            prop_assert_eq!(hilbert_function(&mp, d).unwrap(), hilbert_function(&m, d).unwrap());
        }
    }
}
