use proptest::prelude::*;

use super::*;
use crate::algebra::{FreeModule, RingSpec};
use crate::testing::{module, quotient, random_small_module, ring};

fn series(m: &Presentation) -> (Vec<(i64, i64)>, i64) {
    let hs = hilbert_series(m).unwrap();
    (hs.numerator().terms().collect(), hs.dim())
}

#[test]
fn free_module_series() {
    for n in 1..=4 {
        let r = ring(n);
        let m = Presentation::free(FreeModule::standard(r, 1));
        assert_eq!(series(&m), (vec![(0, 1)], n as i64));
        assert_eq!(postulation_number(&m).unwrap(), ExtInt::Finite(-(n as i64)));
    }
    assert_eq!(hilbert_function(&Presentation::free(FreeModule::standard(ring(3), 1)), 2).unwrap(), 6);
}

#[test]
fn quotient_by_x2_xy() {
    let r = ring(2);
    let m = quotient(&r, &["x^2", "x*y"]);
    // oracle dims 1,2,1,1,1,... times (1 - Z)
    let dims: Vec<u64> = (0..6).map(|i| graded_dim_oracle(&m, i).unwrap()).collect();
    assert_eq!(dims, vec![1, 2, 1, 1, 1, 1]);
    let times_one_minus_z: Vec<i64> =
        (0..6).map(|i| dims[i] as i64 - if i > 0 { dims[i - 1] as i64 } else { 0 }).collect();
    assert_eq!(times_one_minus_z, vec![1, 1, -1, 0, 0, 0]);

    assert_eq!(series(&m), (vec![(0, 1), (1, 1), (2, -1)], 1));
    assert_eq!(hilbert_function(&m, 5).unwrap(), 1);
    assert_eq!(hilbert_polynomial(&m).unwrap(), HilbertPolynomial::from_integers(&[1]));
    assert_eq!(postulation_number(&m).unwrap(), ExtInt::Finite(1));
    assert_eq!(krull_dim(&m).unwrap(), 1);
    let hs = hilbert_series(&m).unwrap();
    assert_eq!((hs.value(1), hs.polynomial_value(1)), (2, 1));
    assert!((2..8).all(|i| hs.value(i) as i64 == hs.polynomial_value(i)));
}

#[test]
fn quotient_by_x2_y3() {
    let r = ring(2);
    let m = quotient(&r, &["x^2", "y^3"]);
    let dims: Vec<u64> = (0..6).map(|i| graded_dim_oracle(&m, i).unwrap()).collect();
    assert_eq!(dims, vec![1, 2, 2, 1, 0, 0]);
    assert_eq!(series(&m), (vec![(0, 1), (1, 2), (2, 2), (3, 1)], 0));
    assert!(hilbert_polynomial(&m).unwrap().is_zero());
    assert_eq!(postulation_number(&m).unwrap(), ExtInt::Finite(3));
}

#[test]
fn polynomial_of_free_module() {
    let r = ring(2);
    let m = Presentation::free(FreeModule::standard(r, 1));
    assert_eq!(hilbert_polynomial(&m).unwrap(), HilbertPolynomial::from_integers(&[1, 1]));
}

#[test]
fn zero_module() {
    let r = ring(2);
    let z = Presentation::zero(r.clone());
    assert_eq!(krull_dim(&z).unwrap(), -1);
    assert_eq!(postulation_number(&z).unwrap(), NEG_INFINITY);
    assert!((-3..4).all(|i| hilbert_function(&z, i).unwrap() == 0));
    let unit = quotient(&r, &["1"]);
    assert_eq!(krull_dim(&unit).unwrap(), -1);
}

#[test]
fn negative_twists_give_laurent_numerators() {
    let r = ring(2);
    let m = module(&r, &[-2, 1], &[&["x^3", "0"], &["0", "y"]]);
    let (terms, dim) = series(&m);
    assert_eq!(terms.first().unwrap().0, -2);
    assert_eq!(dim, 1);
    for i in -4..8 {
        assert_eq!(hilbert_function(&m, i).unwrap(), graded_dim_oracle(&m, i).unwrap());
    }
}

#[test]
fn oracle_examples() {
    let r = ring(3);
    assert_eq!(graded_dim_oracle(&quotient(&r, &["x", "y", "z"]), 0).unwrap(), 1);
    let r2 = ring(2);
    assert_eq!(graded_dim_oracle(&quotient(&r2, &["x^2", "x*y"]), 3).unwrap(), 1);
    let ideal = crate::groebner::submodule_presentation(
        &Presentation::free(FreeModule::standard(r2.clone(), 1)),
        &[vec![r2.poly(&[(&[2, 0], 1)])], vec![r2.poly(&[(&[1, 1], 1)])]],
    )
    .unwrap();
    assert_eq!(graded_dim_oracle(&ideal, 2).unwrap(), 2);
    assert_eq!(
        graded_dim_oracle(&ideal, 21),
        Err(Error::WindowExceeded { degree: 21, window: ORACLE_WINDOW })
    );
}

#[test]
fn binomial_convention() {
    assert_eq!(binomial_poly(5, 2), 10);
    assert_eq!(binomial_poly(-1, 1), -1);
    assert_eq!(binomial_poly(-3, 2), 6);
    assert_eq!(binomial_poly(1, 2), 0);
    assert_eq!(binomial_poly(7, 0), 1);
}

#[test]
fn polynomial_ring_over_other_primes() {
    let r = RingSpec::standard_over(crate::algebra::FieldSpec::new(2).unwrap(), 2);
    // over F_2, x^2 + y^2 = (x + y)^2 but the quotient still has dims 1,2,2,2,...
    let m = Presentation::cyclic(r.clone(), vec![r.poly(&[(&[2, 0], 1), (&[0, 2], 1)])]).unwrap();
    assert_eq!(series(&m), (vec![(0, 1), (1, 1)], 1));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn prop_series_matches_oracle(seed in any::<u64>()) {
        let m = random_small_module(seed);
        for i in -5..=10 {
            prop_assert_eq!(hilbert_function(&m, i).unwrap(), graded_dim_oracle(&m, i).unwrap(), "degree {}", i);
        }
    }

    #[test]
    fn prop_postulation_characterization(seed in any::<u64>()) {
        let m = random_small_module(seed);
        let hs = hilbert_series(&m).unwrap();
        if let ExtInt::Finite(a) = hs.postulation_number() {
            prop_assert_ne!(hs.value(a) as i64, hs.polynomial_value(a));
            for i in a + 1..=a + 5 {
                prop_assert_eq!(hs.value(i) as i64, hs.polynomial_value(i));
            }
            prop_assert_ne!(hs.numerator().eval_at_one(), 0);
        } else {
            prop_assert!(hs.is_zero());
        }
        let p = hs.hilbert_polynomial();
        for i in -6..10 {
            prop_assert_eq!(p.eval(i), Ratio::from_integer(hs.polynomial_value(i) as i128));
        }
    }
}
