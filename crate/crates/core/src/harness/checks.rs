//! Typed checkers. Each returns a [`CheckReport`] whose hypotheses are the
//! tested gates and whose conclusions decide `HOLDS` versus `VIOLATED`.

use crate::algebra::{Column, Polynomial, Presentation};
use crate::degree::ExtInt;
use crate::error::{Error, Result};
use crate::groebner::{minimal_presentation, submodule_presentation};
use crate::harness::complex::ExplicitComplex;
use crate::harness::report::{CheckReport, Verdict};
use crate::hilbert::{hilbert_series, krull_dim};
use crate::homological::{
    depth_and_cm_test, free_resolution, hom_module, local_cohomology_profile, regularity_from_betti, tensor_product,
    tor_with, ext_with, IndexSet, LocalCohomologyProfile,
};
use crate::regularity::{
    is_filter_regular, random_filter_regular_sequence, regularity_conca_recursive_with, regularity_postulation,
    regularity_sat_formula, restrict, sat_index, RestrictionChain,
};

fn same_ring(m: &Presentation, n: &Presentation) -> Result<()> {
    if m.ring() != n.ring() {
        return Err(Error::RingMismatch);
    }
    Ok(())
}

/// `H_M(i) - P_M(i) = Σ_j (-1)^j dim H^j(M)_i` for every `i` in `window`.
/// With no window, uses `[α-4, α+3]` (around 0 if `α = -inf`).
pub fn check_serre_formula(id: &str, m: &Presentation, window: Option<(i64, i64)>) -> Result<CheckReport> {
    let mut rep = CheckReport::new("serre", id);
    let hs = hilbert_series(m)?;
    let alpha = rep.quantity("alpha", hs.postulation_number());
    let (lo, hi) = window.unwrap_or(match alpha {
        ExtInt::Finite(a) => (a - 4, a + 3),
        ExtInt::NegInf => (-4, 3),
    });
    rep.quantity("lo", lo);
    rep.quantity("hi", hi);
    let profile = local_cohomology_profile(m)?;
    for i in lo..=hi {
        let lhs = hs.value(i) as i64 - hs.polynomial_value(i);
        let rhs = profile.euler_characteristic(i);
        if lhs != rhs {
            rep.quantity(format!("lhs@{i}"), lhs);
            rep.quantity(format!("rhs@{i}"), rhs);
        }
        rep.conclude(&format!("Serre identity at degree {i}"), lhs == rhs);
    }
    Ok(rep)
}

/// Tensor bound: `reg^X(M ⊗ N) ≤ reg M + reg^X N` for `X = {a, ..., n}`,
/// gated on `dim Tor_1 ≤ 1` (`a = 0`) or `dim Tor_i ≤ a + i` (`a > 0`).
pub fn check_tensor_bound(id: &str, m: &Presentation, n: &Presentation, a: usize) -> Result<CheckReport> {
    same_ring(m, n)?;
    let mut rep = CheckReport::new("tensor", id);
    let vars = m.ring().num_vars();
    let x = IndexSet::from(vars, a);
    rep.quantity("a", a as i64);
    let res = free_resolution(m, true)?;
    if a == 0 {
        let d = rep.quantity("dim_tor1", krull_dim(&tor_with(&res, n, 1)?)?);
        rep.hypothesis("dim Tor_1(M,N) <= 1", d, d <= ExtInt::Finite(1));
    } else {
        if x.is_empty() {
            rep.note("X is empty; the bound is vacuous");
        }
        for i in 1..=vars {
            let d = rep.quantity(format!("dim_tor{i}"), krull_dim(&tor_with(&res, n, i)?)?);
            let cap = (a + i) as i64;
            rep.hypothesis(format!("dim Tor_{i}(M,N) <= {cap}"), d, d <= ExtInt::Finite(cap));
        }
    }
    let reg_m = rep.quantity("reg_M", res.betti_table().regularity());
    let t = tensor_product(m, n)?;
    let (reg_n, reg_t) = if a == 0 {
        (regularity_from_betti(n)?, regularity_from_betti(&t)?)
    } else {
        (
            local_cohomology_profile(n)?.partial_regularity(&x),
            local_cohomology_profile(&t)?.partial_regularity(&x),
        )
    };
    rep.quantity("regX_N", reg_n);
    rep.quantity("regX_MtensorN", reg_t);
    if rep.gate() {
        rep.conclude("regX(M⊗N) <= reg M + regX N", reg_t <= reg_m + reg_n);
    }
    Ok(rep)
}

/// The ideal `I` generated by `gens` as a submodule of `R`.
fn ideal_module(ring: &crate::algebra::Ring, gens: &[Polynomial]) -> Result<Presentation> {
    let r = Presentation::free(crate::algebra::FreeModule::standard(ring.clone(), 1));
    submodule_presentation(&r, &gens.iter().map(|g| vec![g.clone()]).collect::<Vec<_>>())
}

/// `IM ⊆ M` generated by `f · e_k`.
fn product_submodule(gens: &[Polynomial], m: &Presentation) -> Result<Presentation> {
    let amb = m.ambient();
    let mut cols: Vec<Column> = Vec::new();
    for f in gens {
        for k in 0..amb.rank() {
            let mut c = amb.zero_column();
            c[k] = f.clone();
            cols.push(c);
        }
    }
    submodule_presentation(m, &cols)
}

/// `reg(IM) ≤ reg(I) + reg(M)` gated on `dim Tor_1(M, R/I) ≤ 1`; also checks
/// `reg(R/I) = reg(I) - 1` and that `dim R/I ≤ 1` forces the gate.
pub fn check_ideal_module_bound(id: &str, gens: &[Polynomial], m: &Presentation) -> Result<CheckReport> {
    let ring = m.ring();
    let mut rep = CheckReport::new("im", id);
    let quotient = Presentation::cyclic(ring.clone(), gens.to_vec())?;
    if quotient.is_zero_module()? {
        rep.hypothesis("I proper", "I = R", false);
        rep.gate();
        return Ok(rep);
    }
    let ideal = ideal_module(ring, gens)?;
    let reg_i = rep.quantity("reg_I", regularity_from_betti(&ideal)?);
    let reg_q = rep.quantity("reg_R/I", regularity_from_betti(&quotient)?);
    let reg_m = rep.quantity("reg_M", regularity_from_betti(m)?);
    let dim_q = rep.quantity("dim_R/I", krull_dim(&quotient)?);
    let res = free_resolution(m, true)?;
    let d = rep.quantity("dim_tor1", krull_dim(&tor_with(&res, &quotient, 1)?)?);
    let gate = rep.hypothesis("dim Tor_1(M,R/I) <= 1", d, d <= ExtInt::Finite(1));
    let im = product_submodule(gens, m)?;
    let reg_im = rep.quantity("reg_IM", regularity_from_betti(&im)?);
    if ideal.is_zero_module()? {
        rep.note("I = 0; reg(R/I) = reg(I) - 1 not applicable");
    } else {
        rep.conclude("reg(R/I) = reg(I) - 1", reg_q == reg_i - 1);
    }
    if dim_q <= ExtInt::Finite(1) {
        rep.conclude("dim R/I <= 1 implies dim Tor_1 <= 1", gate);
    }
    if rep.gate() {
        rep.conclude("reg(IM) <= reg(I) + reg(M)", reg_im <= reg_i + reg_m);
    }
    Ok(rep)
}

/// `reg Hom(M, N) ≤ reg N - m`, gated on every `Ext^i(M, N)`, `i = 1..n`,
/// being zero or Cohen–Macaulay. `m` is the least minimal generator degree.
///
/// Depths are recorded together with `depth ≥ n - i`, a stronger condition
/// that also suffices.
pub fn check_hom_bound(id: &str, m: &Presentation, n: &Presentation) -> Result<CheckReport> {
    same_ring(m, n)?;
    let mut rep = CheckReport::new("hom", id);
    let min = minimal_presentation(m)?;
    let Some(&low) = min.ambient().twists().iter().min() else {
        rep.hypothesis("M nonzero", "M = 0", false);
        rep.gate();
        return Ok(rep);
    };
    rep.quantity("m", low);
    let vars = m.ring().num_vars();
    let res = free_resolution(m, true)?;
    let mut strong = true;
    for i in 1..=vars {
        let e = ext_with(&res, n, i)?;
        if e.is_zero_module()? {
            rep.hypothesis(format!("Ext^{i}(M,N) zero or CM"), "zero", true);
            continue;
        }
        let info = depth_and_cm_test(&e)?;
        rep.quantity(format!("ext{i}_depth"), info.depth);
        rep.quantity(format!("ext{i}_dim"), info.dim);
        strong &= info.depth >= (vars - i) as i64;
        let value = format!("depth {} dim {}", info.depth, info.dim);
        rep.hypothesis(format!("Ext^{i}(M,N) zero or CM"), value, info.cohen_macaulay);
    }
    rep.quantity("depth_gate", strong as i64);
    let reg_n = rep.quantity("reg_N", regularity_from_betti(n)?);
    let reg_h = rep.quantity("reg_Hom", regularity_from_betti(&hom_module(m, n)?)?);
    if rep.gate() {
        if !strong {
            rep.note("some Ext^i is Cohen-Macaulay of depth < n - i");
        }
        rep.conclude("reg Hom(M,N) <= reg N - m", reg_h <= reg_n - low);
    }
    Ok(rep)
}

/// Both inequalities relating `M` and `M/lM` for a filter-regular `l`, and
/// `reg(M/H^0(M)) ≤ reg(M/lM) - D + 1`.
pub fn check_prop_almost(id: &str, m: &Presentation, l: &Polynomial, x: &IndexSet) -> Result<CheckReport> {
    let mut rep = CheckReport::new("almost", id);
    if m.is_zero_module()? {
        rep.hypothesis("M nonzero", "M = 0", false);
        rep.gate();
        return Ok(rep);
    }
    let cert = is_filter_regular(l, m)?;
    if !cert.verdict {
        return Err(Error::NotFilterRegular);
    }
    let d = cert.degree as i64;
    rep.quantity("D", d);
    if x.is_empty() {
        rep.note("X is empty; both sides are -inf");
    }
    let quotient = restrict(m, l)?;
    let pm = local_cohomology_profile(m)?;
    let pq = local_cohomology_profile(&quotient)?;
    let x1 = x.shift(1);
    let xu = x.union(&x1);
    let lhs1 = rep.quantity("regX+1_M", pm.partial_regularity(&x1));
    let rhs1 = rep.quantity("regXuX+1_M/lM", pq.partial_regularity(&xu));
    rep.conclude("regX+1(M) <= regXuX+1(M/lM) - D + 1", lhs1 <= rhs1 - (d - 1));
    let lhs2 = rep.quantity("regX_M/lM", pq.partial_regularity(x));
    let rhs2 = rep.quantity("regXuX+1_M", pm.partial_regularity(&xu));
    rep.conclude("regX(M/lM) - D + 1 <= regXuX+1(M)", lhs2 - (d - 1) <= rhs2);
    let n = m.ring().num_vars();
    let reg_sat = rep.quantity("reg_M/H0", pm.partial_regularity(&IndexSet::from(n, 1)));
    let reg_q = rep.quantity("reg_M/lM", pq.regularity());
    rep.conclude("reg(M/H0 M) <= reg(M/lM) - D + 1", reg_sat <= reg_q - (d - 1));
    Ok(rep)
}

/// Every regularity route against the Betti table: postulation numbers and
/// saturation indices along one chain, the recursive formula, and local
/// cohomology.
pub fn check_regularity_routes(id: &str, m: &Presentation, degrees: &[u32], seed: u64) -> Result<CheckReport> {
    let mut rep = CheckReport::new("postulation", id);
    let betti = rep.quantity("betti", regularity_from_betti(m)?);
    let chain = random_filter_regular_sequence(m, degrees, seed)?;
    record_chain(&mut rep, "", &chain);
    let post = rep.quantity("postulation", regularity_postulation(m, &chain)?);
    let sat = rep.quantity("sat", regularity_sat_formula(m, &chain)?);
    let deg = degrees.first().copied().unwrap_or(1);
    let conca = rep.quantity("conca", regularity_conca_recursive_with(m, seed, deg)?);
    let lc = rep.quantity("local_cohomology", local_cohomology_profile(m)?.regularity());
    rep.quantity("sat_M", sat_index(m)?);
    rep.conclude("postulation = betti", post == betti);
    rep.conclude("sat = betti", sat == betti);
    rep.conclude("conca = betti", conca == betti);
    rep.conclude("local cohomology = betti", lc == betti);
    Ok(rep)
}

fn record_chain(rep: &mut CheckReport, prefix: &str, chain: &RestrictionChain) {
    for (i, (&a, &s)) in chain.alphas.iter().zip(&chain.sat_indices).enumerate() {
        rep.quantity(format!("{prefix}alpha{i}"), a);
        rep.quantity(format!("{prefix}sat{i}"), s);
    }
    let retries: u32 = chain.certificates.iter().map(|c| c.retries_used).sum();
    rep.quantity(format!("{prefix}retries"), retries as i64);
}

/// Two chains with different seeds and degree vectors give the same value.
pub fn check_chain_independence(
    id: &str,
    m: &Presentation,
    first: (&[u32], u64),
    second: (&[u32], u64),
) -> Result<CheckReport> {
    let mut rep = CheckReport::new("indep", id);
    let c1 = random_filter_regular_sequence(m, first.0, first.1)?;
    let c2 = random_filter_regular_sequence(m, second.0, second.1)?;
    record_chain(&mut rep, "a_", &c1);
    record_chain(&mut rep, "b_", &c2);
    let r1 = rep.quantity("first", regularity_postulation(m, &c1)?);
    let r2 = rep.quantity("second", regularity_postulation(m, &c2)?);
    rep.conclude("chains agree", r1 == r2);
    Ok(rep)
}

/// Least `m` with `value ≤ m + offset` for every `(value, offset)`.
fn least_m(bounds: &[(ExtInt, i64)]) -> ExtInt {
    ExtInt::max_of(bounds.iter().map(|&(v, off)| v - off))
}

/// `value ≤ m + offset`, where `m = -inf` stands for "every `m`".
fn within(value: ExtInt, m: ExtInt, offset: i64) -> bool {
    match m {
        ExtInt::NegInf => value.is_neg_inf(),
        ExtInt::Finite(m) => value <= ExtInt::Finite(m + offset),
    }
}

fn render_m(m: ExtInt, offset: i64) -> String {
    match (m, offset) {
        (ExtInt::NegInf, _) => "-inf".into(),
        (ExtInt::Finite(m), off) => (m + off).to_string(),
    }
}

/// Which `m` to test each half of the lemma with.
#[derive(Debug, Clone, Copy)]
enum LemmaM {
    Given(i64),
    /// The least `m` satisfying the hypotheses of each half.
    Tight,
}

/// Boundaries and `H_0` bounded from `C_i`, `H_i` for `i > 0`; cycles and
/// `H_L` bounded from `C_{L-i}`, `H_{L-i}`. `m` is given.
pub fn verify_complex_lemma(id: &str, c: &ExplicitComplex, m: i64, x: &IndexSet) -> Result<CheckReport> {
    complex_lemma(id, c, LemmaM::Given(m), x)
}

/// As [`verify_complex_lemma`] with the least `m` for each half, so the
/// hypotheses always hold (`m = -inf` when every `m` works).
pub fn verify_complex_lemma_tight(id: &str, c: &ExplicitComplex, x: &IndexSet) -> Result<CheckReport> {
    complex_lemma(id, c, LemmaM::Tight, x)
}

fn complex_lemma(id: &str, c: &ExplicitComplex, mode: LemmaM, x: &IndexSet) -> Result<CheckReport> {
    c.validate()?;
    let mut rep = CheckReport::new("complex", id);
    let len = c.length();
    rep.quantity("length", len as i64);
    let cs: Vec<LocalCohomologyProfile> = c.modules.iter().map(local_cohomology_profile).collect::<Result<_>>()?;
    let hs: Vec<LocalCohomologyProfile> =
        (0..=len).map(|i| c.homology(i).and_then(|h| local_cohomology_profile(&h))).collect::<Result<_>>()?;
    let sh = |i: i64| x.shift(i);
    let pick = |bounds: &[(ExtInt, i64)]| match mode {
        LemmaM::Given(m) => ExtInt::Finite(m),
        LemmaM::Tight => least_m(bounds),
    };

    // first half: C_i is (m+i)-reg^{X+i}, H_i is (m+i+1)-reg^{X+i+1}, i > 0
    let mut hyp = Vec::new();
    for i in 1..=len {
        let ii = i as i64;
        hyp.push((format!("C_{i} on X+{i}"), cs[i].partial_regularity(&sh(ii)), ii));
        hyp.push((format!("H_{i} on X+{}", i + 1), hs[i].partial_regularity(&sh(ii + 1)), ii + 1));
    }
    let bounds: Vec<_> = hyp.iter().map(|(_, v, o)| (*v, *o)).collect();
    let m = rep.quantity("m", pick(&bounds));
    let mut first = true;
    for (name, v, o) in &hyp {
        first &= rep.hypothesis(format!("{name} <= {}", render_m(m, *o)), v, within(*v, m, *o));
    }
    let c0 = cs[0].partial_regularity(x);
    let m0 = match mode {
        LemmaM::Given(_) => m,
        LemmaM::Tight => rep.quantity("m_H0", m.max(c0)),
    };
    if first {
        for i in 0..len {
            let ii = i as i64;
            let b = local_cohomology_profile(&c.boundaries(i)?)?.partial_regularity(&sh(ii + 1));
            rep.quantity(format!("regX+{}_B{i}", i + 1), b);
            rep.conclude(&format!("B_{i} is (m+{})-regular on X+{}", i + 1, i + 1), within(b, m, ii + 1));
        }
        let h0 = rep.quantity("regX_H0", hs[0].partial_regularity(x));
        if within(c0, m0, 0) {
            rep.conclude("H_0 is m-regular on X", within(h0, m0, 0));
        } else {
            rep.note("C_0 is not m-regular on X; H_0 not asserted");
        }
    }

    // second half: C_{L-i} is (m-i)-reg^{X-i} for i ≥ 0, H_{L-i} is
    // (m-i-1)-reg^{X-i-1} for i > 0
    let mut hyp = Vec::new();
    for i in 0..=len {
        let ii = i as i64;
        hyp.push((format!("C_{} on X-{i}", len - i), cs[len - i].partial_regularity(&sh(-ii)), -ii));
        if i > 0 {
            hyp.push((format!("H_{} on X-{}", len - i, i + 1), hs[len - i].partial_regularity(&sh(-ii - 1)), -ii - 1));
        }
    }
    let bounds: Vec<_> = hyp.iter().map(|(_, v, o)| (*v, *o)).collect();
    let mp = rep.quantity("m_prime", pick(&bounds));
    let mut second = true;
    for (name, v, o) in &hyp {
        second &= rep.hypothesis(format!("{name} <= {}", render_m(mp, *o)), v, within(*v, mp, *o));
    }
    if second {
        for i in 0..=len {
            let ii = i as i64;
            let z = local_cohomology_profile(&c.cycles(len - i)?)?.partial_regularity(&sh(-ii));
            rep.quantity(format!("regX-{i}_Z{}", len - i), z);
            rep.conclude(&format!("Z_{} is (m-{i})-regular on X-{i}", len - i), within(z, mp, -ii));
        }
        let hn = rep.quantity("regX_HL", hs[len].partial_regularity(x));
        rep.conclude("H_L is m-regular on X", within(hn, mp, 0));
    }
    if !first && !second && rep.verdict == Verdict::Holds {
        rep.verdict = Verdict::HypothesisNotMet;
    } else if !(first && second) {
        rep.note("only one half of the hypotheses holds");
    }
    Ok(rep)
}

#[cfg(test)]
mod tests;
