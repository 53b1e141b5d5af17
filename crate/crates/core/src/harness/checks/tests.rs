use proptest::prelude::*;

use super::*;
use crate::algebra::FreeModule;
use crate::corpus::{parse_corpus, render_corpus};
use crate::harness::recipe::{generate_instance, Recipe};
use crate::harness::runner::{evaluate, instance_seed, plan_check, CheckKind};
use crate::hilbert::graded_dim_oracle;
use crate::testing::{module, poly, quotient, ring};

fn free(n: usize, twists: &[i64]) -> Presentation {
    Presentation::free(FreeModule::new(ring(n), twists.to_vec()))
}

fn q(rep: &CheckReport, key: &str) -> ExtInt {
    rep.quantities[key]
}

#[test]
fn serre_examples() {
    let r = ring(2);
    let k = quotient(&r, &["x", "y"]);
    let rep = check_serre_formula("k", &k, Some((0, 0))).unwrap();
    assert_eq!(rep.verdict, Verdict::Holds);

    // H_R(-2) - P_R(-2) = 0 - (-1), matched by H^2(R)_{-2}
    let rep = check_serre_formula("r", &free(2, &[0]), Some((-2, -2))).unwrap();
    assert_eq!(rep.verdict, Verdict::Holds);
    let p = local_cohomology_profile(&free(2, &[0])).unwrap();
    assert_eq!(p.dim(2, -2), 1);

    let m = quotient(&r, &["x^2", "x*y"]);
    let rep = check_serre_formula("m", &m, Some((-3, 4))).unwrap();
    assert_eq!(rep.verdict, Verdict::Holds);
    let rep = check_serre_formula("m", &m, None).unwrap();
    assert_eq!((q(&rep, "lo"), q(&rep, "hi")), (ExtInt::Finite(-3), ExtInt::Finite(4)));
}

#[test]
fn tensor_examples() {
    let r = ring(2);
    let rep = check_tensor_bound("a", &quotient(&r, &["x"]), &quotient(&r, &["y"]), 0).unwrap();
    assert_eq!(rep.verdict, Verdict::Holds);
    assert_eq!(q(&rep, "dim_tor1"), ExtInt::Finite(-1));
    assert_eq!(q(&rep, "regX_MtensorN"), ExtInt::Finite(0));

    let rep = check_tensor_bound("b", &quotient(&r, &["x"]), &quotient(&r, &["x"]), 0).unwrap();
    assert_eq!(rep.verdict, Verdict::Holds);
    assert_eq!(q(&rep, "dim_tor1"), ExtInt::Finite(1));

    let r3 = ring(3);
    let rep = check_tensor_bound("c", &quotient(&r3, &["x"]), &quotient(&r3, &["x"]), 0).unwrap();
    assert_eq!(rep.verdict, Verdict::HypothesisNotMet);
    assert_eq!(q(&rep, "dim_tor1"), ExtInt::Finite(2));

    // a = 1 over three variables: dim Tor_1 = 2 ≤ 1 + 1
    let rep = check_tensor_bound("d", &quotient(&r3, &["x"]), &quotient(&r3, &["x"]), 1).unwrap();
    assert_eq!(rep.verdict, Verdict::Holds);
}

#[test]
fn ideal_module_examples() {
    let r = ring(2);
    let (x, y) = (poly(&r, "x"), poly(&r, "y"));
    let rep = check_ideal_module_bound("a", &[x.clone(), y.clone()], &free(2, &[0])).unwrap();
    assert_eq!(rep.verdict, Verdict::Holds);
    assert_eq!(q(&rep, "reg_IM"), ExtInt::Finite(1));
    assert_eq!(q(&rep, "reg_I"), ExtInt::Finite(1));

    let sq: Vec<_> = ["x^2", "x*y", "y^2"].iter().map(|s| poly(&r, s)).collect();
    let rep = check_ideal_module_bound("b", &sq, &quotient(&r, &["x^2", "x*y"])).unwrap();
    assert_ne!(rep.verdict, Verdict::Violated);

    let i: Vec<_> = ["x^2", "x*y"].iter().map(|s| poly(&r, s)).collect();
    let rep = check_ideal_module_bound("c", &i, &free(2, &[0])).unwrap();
    assert_eq!(rep.verdict, Verdict::Holds);
    assert_eq!(q(&rep, "reg_I"), ExtInt::Finite(2));
    assert_eq!(q(&rep, "reg_IM"), ExtInt::Finite(2));

    let rep = check_ideal_module_bound("d", &[r.one()], &free(2, &[0])).unwrap();
    assert_eq!(rep.verdict, Verdict::HypothesisNotMet);
}

#[test]
fn hom_examples() {
    let rep = check_hom_bound("a", &free(2, &[0]), &free(2, &[0])).unwrap();
    assert_eq!(rep.verdict, Verdict::Holds);
    assert_eq!(q(&rep, "reg_Hom"), ExtInt::Finite(0));

    let rep = check_hom_bound("b", &free(2, &[2]), &free(2, &[0])).unwrap();
    assert_eq!(rep.verdict, Verdict::Holds);
    assert_eq!(q(&rep, "reg_Hom"), ExtInt::Finite(-2));
    assert_eq!(q(&rep, "m"), ExtInt::Finite(2));

    let r = ring(2);
    let rep = check_hom_bound("c", &quotient(&r, &["x"]), &free(2, &[0])).unwrap();
    assert_eq!(rep.verdict, Verdict::Holds);
    assert_eq!(q(&rep, "reg_Hom"), ExtInt::NegInf);
    assert_eq!(q(&rep, "ext1_dim"), ExtInt::Finite(1));

    let rep = check_hom_bound("d", &quotient(&r, &["1"]), &free(2, &[0])).unwrap();
    assert_eq!(rep.verdict, Verdict::HypothesisNotMet);
}

/// `M = R(-1)^2 / ((x, y))`: `Ext^1(M, R) = K(2)` is Cohen–Macaulay of
/// depth 0, `Hom(M, R) ≅ R`, and `reg R - m = -1 < 0`.
#[test]
fn cohen_macaulay_gate_admits_a_violation() {
    let r = ring(2);
    let m = module(&r, &[1, 1], &[&["x", "y"]]);
    let rep = check_hom_bound("cm", &m, &free(2, &[0])).unwrap();
    assert!(rep.hypotheses_met());
    assert_eq!(rep.verdict, Verdict::Violated);
    assert_eq!(q(&rep, "depth_gate"), ExtInt::Finite(0));
    assert_eq!(q(&rep, "ext1_depth"), ExtInt::Finite(0));
    assert_eq!(q(&rep, "reg_Hom"), ExtInt::Finite(0));
    let hom = hom_module(&m, &free(2, &[0])).unwrap();
    let dims: Vec<u64> = (-2..5).map(|i| graded_dim_oracle(&hom, i).unwrap()).collect();
    assert_eq!(dims, (-2..5).map(|i: i64| (i + 1).max(0) as u64).collect::<Vec<_>>());
}

#[test]
fn almost_examples() {
    let r = ring(2);
    let rep = check_prop_almost("a", &free(2, &[0]), &poly(&r, "x"), &IndexSet::full(2)).unwrap();
    assert_eq!(rep.verdict, Verdict::Holds);
    assert_eq!(q(&rep, "regX+1_M"), ExtInt::Finite(0));

    let m = quotient(&r, &["x^2", "x*y"]);
    let rep = check_prop_almost("b", &m, &poly(&r, "y"), &IndexSet::new(2, [0])).unwrap();
    assert_eq!(rep.verdict, Verdict::Holds);

    let rep = check_prop_almost("c", &m, &poly(&r, "y"), &IndexSet::empty(2)).unwrap();
    assert_eq!(rep.verdict, Verdict::Holds);
    assert_eq!(q(&rep, "regX_M/lM"), ExtInt::NegInf);
    assert_eq!(q(&rep, "regXuX+1_M"), ExtInt::NegInf);

    assert_eq!(check_prop_almost("d", &m, &poly(&r, "x"), &IndexSet::full(2)).unwrap_err(), Error::NotFilterRegular);
}

#[test]
fn route_and_independence_examples() {
    let r = ring(2);
    let m = quotient(&r, &["x^2", "x*y"]);
    let rep = check_regularity_routes("a", &m, &[2], 5).unwrap();
    assert_eq!(rep.verdict, Verdict::Holds);
    assert_eq!(q(&rep, "betti"), ExtInt::Finite(1));
    let rep = check_chain_independence("b", &m, (&[1], 1), (&[2], 2)).unwrap();
    assert_eq!(rep.verdict, Verdict::Holds);
}

#[test]
fn complex_lemma_on_koszul() {
    let c = ExplicitComplex::koszul(&free(2, &[0]), &[0, 1]);
    let rep = verify_complex_lemma("k", &c, 0, &IndexSet::full(2)).unwrap();
    assert_eq!(rep.verdict, Verdict::Holds);
    assert_eq!(q(&rep, "regX_H0"), ExtInt::Finite(0));
    let rep = verify_complex_lemma_tight("k", &c, &IndexSet::full(2)).unwrap();
    assert_eq!(q(&rep, "m"), ExtInt::Finite(0));

    // m too small for C_1 = R(-1)^2 on {1, 2}
    let rep = verify_complex_lemma("k", &c, -5, &IndexSet::full(2)).unwrap();
    assert_eq!(rep.verdict, Verdict::HypothesisNotMet);
}

#[test]
fn complex_lemma_reproduces_tensor_bound() {
    let r = ring(2);
    let m = quotient(&r, &["x^2", "x*y"]);
    let n = quotient(&r, &["y^2"]);
    let c = ExplicitComplex::resolution_tensor(&m, &n).unwrap();
    let x = IndexSet::full(2);
    let rep = verify_complex_lemma_tight("t", &c, &x).unwrap();
    assert_eq!(rep.verdict, Verdict::Holds);
    let t = check_tensor_bound("t", &m, &n, 0).unwrap();
    assert_eq!(q(&rep, "regX_H0"), q(&t, "regX_MtensorN"));
}

fn replay_matches(kind: CheckKind, recipe: &Recipe, seed: u64) {
    let inst = generate_instance(recipe, seed);
    let file = plan_check(kind, &inst).unwrap();
    let reparsed = parse_corpus(&render_corpus(&file)).unwrap();
    let a = evaluate(&file).unwrap();
    let b = evaluate(&reparsed).unwrap();
    assert_eq!(a.to_json_line(), b.to_json_line());
    assert_eq!(a.verdict == Verdict::Violated, a.witness.is_some());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn replay_reproduces_reports(seed in any::<u64>(), k in 0usize..8) {
        replay_matches(CheckKind::ALL[k], &Recipe::default(), seed);
    }

    #[test]
    fn gated_tensor_and_im_never_violate(seed in any::<u64>()) {
        let recipe: Recipe = "mixed:vars=2-3,gens=1-2".parse().unwrap();
        let inst = generate_instance(&recipe, instance_seed(seed, 0));
        for kind in [CheckKind::Tensor, CheckKind::Im] {
            let rep = evaluate(&plan_check(kind, &inst).unwrap()).unwrap();
            prop_assert_ne!(rep.verdict, Verdict::Violated);
        }
    }

    #[test]
    fn depth_gate_never_violates(seed in any::<u64>()) {
        let recipe: Recipe = "mixed:vars=2-3,gens=1-2,deg=1-2".parse().unwrap();
        let inst = generate_instance(&recipe, seed);
        let rep = check_hom_bound("p", inst.module("M"), inst.module("N")).unwrap();
        if rep.verdict == Verdict::Violated {
            prop_assert_eq!(rep.quantities["depth_gate"], ExtInt::Finite(0));
        }
    }
}
