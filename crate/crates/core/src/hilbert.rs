//! Hilbert series in reduced rational form, Hilbert polynomials and
//! postulation numbers.

use num_rational::Ratio;

use crate::algebra::{Column, Monomial, Presentation};
use crate::degree::{ExtInt, NEG_INFINITY};
use crate::error::{Error, Result};
use crate::linalg;

/// Integer Laurent polynomial `Σ c_i Z^i`, trimmed on both ends.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<i64>,
}

impl LaurentPoly {
    pub fn new(low: i64, coeffs: Vec<i64>) -> Self {
        let mut p = LaurentPoly { low, coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|&&c| c == 0).count();
        self.coeffs.drain(..lead);
        self.low = if self.coeffs.is_empty() { 0 } else { self.low + lead as i64 };
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient(&self, i: i64) -> i64 {
        let k = i - self.low;
        if k < 0 {
            0
        } else {
            self.coeffs.get(k as usize).copied().unwrap_or(0)
        }
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn low_degree(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn top_degree(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    pub fn eval_at_one(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    /// `(exponent, coefficient)` pairs with nonzero coefficient.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| (self.low + k as i64, c))
    }

    fn add_shifted(&mut self, shift: i64, dense: &[i64]) {
        if dense.iter().all(|&c| c == 0) {
            return;
        }
        if self.coeffs.is_empty() {
            self.low = shift;
        }
        let low = self.low.min(shift);
        let high = (self.low + self.coeffs.len() as i64).max(shift + dense.len() as i64);
        let mut out = vec![0i64; (high - low) as usize];
        for (k, &c) in self.coeffs.iter().enumerate() {
            out[(self.low - low) as usize + k] += c;
        }
        for (k, &c) in dense.iter().enumerate() {
            out[(shift - low) as usize + k] += c;
        }
        self.low = low;
        self.coeffs = out;
        self.trim();
    }

    /// Exact division by `1 - Z`; requires `eval_at_one() == 0`.
    fn div_one_minus_z(&self) -> LaurentPoly {
        let mut q = Vec::with_capacity(self.coeffs.len());
        let mut acc = 0i64;
        for &c in &self.coeffs {
            acc += c;
            q.push(acc);
        }
        debug_assert_eq!(q.last().copied().unwrap_or(0), 0);
        LaurentPoly::new(self.low, q)
    }
}

/// `h(Z) / (1 - Z)^dim` with `h(1) != 0`; `dim = -1` and `h = 0` for the
/// zero module.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HilbertSeries {
    numerator: LaurentPoly,
    dim: i64,
}

/// Number of monomials of degree `k` in `d` variables.
fn monomial_count(k: i64, d: i64) -> i128 {
    if k < 0 {
        return 0;
    }
    if d == 0 {
        return (k == 0) as i128;
    }
    binomial_poly(k + d - 1, d - 1)
}

/// `m (m-1) ... (m-k+1) / k!` for any integer `m`.
pub fn binomial_poly(m: i64, k: i64) -> i128 {
    let mut acc: i128 = 1;
    for t in 0..k {
        acc = acc * (m - t) as i128 / (t + 1) as i128;
    }
    acc
}

impl HilbertSeries {
    /// Reduces an arbitrary `h / (1-Z)^n` by cancelling `(1-Z)` factors.
    pub fn from_unreduced(mut numerator: LaurentPoly, mut dim: i64) -> Self {
        if numerator.is_zero() {
            return HilbertSeries { numerator, dim: -1 };
        }
        while numerator.eval_at_one() == 0 {
            numerator = numerator.div_one_minus_z();
            dim -= 1;
        }
        HilbertSeries { numerator, dim }
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.numerator
    }

    /// Krull dimension.
    pub fn dim(&self) -> i64 {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    /// `dim_K M_i`.
    pub fn value(&self, i: i64) -> u64 {
        let v: i128 = self.numerator.terms().map(|(j, c)| c as i128 * monomial_count(i - j, self.dim)).sum();
        u64::try_from(v).expect("Hilbert function is nonnegative")
    }

    /// `P_M(i)`, exact, using the polynomial binomial.
    pub fn polynomial_value(&self, i: i64) -> i64 {
        if self.dim <= 0 {
            return 0;
        }
        let d = self.dim;
        let v: i128 = self.numerator.terms().map(|(j, c)| c as i128 * binomial_poly(i - j + d - 1, d - 1)).sum();
        v as i64
    }

    pub fn postulation_number(&self) -> ExtInt {
        match self.numerator.top_degree() {
            None => NEG_INFINITY,
            Some(b) => ExtInt::Finite(b - self.dim),
        }
    }

    /// Lowest degree with `M_i != 0`: the minimal degree of a generator.
    pub fn initial_degree(&self) -> Option<i64> {
        self.numerator.low_degree()
    }

    /// Largest degree with `M_i != 0`, for modules of dimension at most zero.
    pub fn top_nonzero_degree(&self) -> ExtInt {
        if self.dim > 0 {
            panic!("top degree of a module of positive dimension");
        }
        match self.numerator.top_degree() {
            None => NEG_INFINITY,
            Some(b) => ExtInt::Finite(b),
        }
    }

    pub fn hilbert_polynomial(&self) -> HilbertPolynomial {
        if self.dim <= 0 {
            return HilbertPolynomial { coeffs: Vec::new() };
        }
        let d = self.dim;
        let mut total = vec![Ratio::from_integer(0i128); d as usize];
        let mut fact: i128 = 1;
        for t in 1..d {
            fact *= t as i128;
        }
        for (j, c) in self.numerator.terms() {
            // Π_{t=0}^{d-2} (i - j + d - 1 - t)
            let mut prod = vec![1i128];
            for t in 0..d - 1 {
                let root = (-j + d - 1 - t) as i128;
                let mut next = vec![0i128; prod.len() + 1];
                for (k, &a) in prod.iter().enumerate() {
                    next[k] += a * root;
                    next[k + 1] += a;
                }
                prod = next;
            }
            for (k, a) in prod.into_iter().enumerate() {
                total[k] += Ratio::new(c as i128 * a, fact);
            }
        }
        let mut p = HilbertPolynomial { coeffs: total };
        p.trim();
        p
    }
}

/// Rational polynomial in `i`, coefficients by increasing power.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HilbertPolynomial {
    coeffs: Vec<Ratio<i128>>,
}

impl HilbertPolynomial {
    pub fn from_integers(coeffs: &[i128]) -> Self {
        let mut p = HilbertPolynomial { coeffs: coeffs.iter().map(|&c| Ratio::from_integer(c)).collect() };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| *c == Ratio::from_integer(0)) {
            self.coeffs.pop();
        }
    }

    pub fn coefficients(&self) -> &[Ratio<i128>] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, i: i64) -> Ratio<i128> {
        self.coeffs.iter().rev().fold(Ratio::from_integer(0), |acc, c| acc * Ratio::from_integer(i as i128) + c)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PostulationData {
    pub alpha: ExtInt,
    pub hilbert_polynomial: HilbertPolynomial,
}

/// Numerator of `HS(R/J) (1-Z)^n` for a monomial ideal `J`, densely in `Z`.
fn monomial_ideal_numerator(gens: Vec<Monomial>) -> Vec<i64> {
    let gens = minimalize(gens);
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(Monomial::is_one) {
        return vec![];
    }
    // pick the variable occurring in the most generators
    let mut counts = [0usize; crate::algebra::MAX_VARS];
    for g in &gens {
        for (v, c) in counts.iter_mut().enumerate() {
            if g.exponent(v) > 0 {
                *c += 1;
            }
        }
    }
    let (var, &best) = counts.iter().enumerate().max_by_key(|&(v, c)| (*c, std::cmp::Reverse(v))).expect("nonempty");
    if best <= 1 {
        // pairwise coprime: Π (1 - Z^deg)
        let mut acc = vec![1i64];
        for g in &gens {
            let d = g.degree() as usize;
            let mut next = vec![0i64; acc.len() + d];
            for (k, &a) in acc.iter().enumerate() {
                next[k] += a;
                next[k + d] -= a;
            }
            acc = next;
        }
        return acc;
    }
    let e = gens.iter().map(|g| g.exponent(var)).filter(|&e| e > 0).min().expect("var occurs");
    let mut pivot_exps = [0u32; crate::algebra::MAX_VARS];
    pivot_exps[var] = e;
    let pivot = Monomial::from_exponents(&pivot_exps);

    let mut sum: Vec<Monomial> = gens.iter().filter(|g| !pivot.divides(g)).copied().collect();
    sum.push(pivot);
    let colon: Vec<Monomial> = gens.iter().map(|g| g.strip(var, e)).collect();

    let a = monomial_ideal_numerator(sum);
    let b = monomial_ideal_numerator(colon);
    let mut out = vec![0i64; a.len().max(b.len() + e as usize)];
    for (k, &c) in a.iter().enumerate() {
        out[k] += c;
    }
    for (k, &c) in b.iter().enumerate() {
        out[k + e as usize] += c;
    }
    out
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort();
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

/// Hilbert series from the leading-term module of the relation Gröbner basis.
pub fn hilbert_series(m: &Presentation) -> Result<HilbertSeries> {
    let gb = m.groebner_basis()?;
    let rank = m.ambient().rank();
    let mut per_comp: Vec<Vec<Monomial>> = vec![Vec::new(); rank];
    for (k, mono) in gb.leading_terms() {
        per_comp[k].push(mono);
    }
    let mut num = LaurentPoly::default();
    for (k, gens) in per_comp.into_iter().enumerate() {
        num.add_shifted(m.ambient().twists()[k], &monomial_ideal_numerator(gens));
    }
    Ok(HilbertSeries::from_unreduced(num, m.ring().num_vars() as i64))
}

pub fn hilbert_function(m: &Presentation, i: i64) -> Result<u64> {
    Ok(hilbert_series(m)?.value(i))
}

pub fn hilbert_polynomial(m: &Presentation) -> Result<HilbertPolynomial> {
    Ok(hilbert_series(m)?.hilbert_polynomial())
}

pub fn postulation_number(m: &Presentation) -> Result<ExtInt> {
    Ok(hilbert_series(m)?.postulation_number())
}

pub fn postulation_data(m: &Presentation) -> Result<PostulationData> {
    let hs = hilbert_series(m)?;
    Ok(PostulationData { alpha: hs.postulation_number(), hilbert_polynomial: hs.hilbert_polynomial() })
}

pub fn krull_dim(m: &Presentation) -> Result<i64> {
    Ok(hilbert_series(m)?.dim())
}

pub const ORACLE_WINDOW: i64 = 20;

/// `dim_K M_i` by plain linear algebra in degree `i`.
pub fn graded_dim_oracle(m: &Presentation, i: i64) -> Result<u64> {
    graded_dim_oracle_with_window(m, i, ORACLE_WINDOW)
}

pub fn graded_dim_oracle_with_window(m: &Presentation, i: i64, window: i64) -> Result<u64> {
    if i.abs() > window {
        return Err(Error::WindowExceeded { degree: i, window });
    }
    let ring = m.ring();
    let n = ring.num_vars();
    let field = ring.field();
    let twists = m.ambient().twists();

    let mut index = std::collections::HashMap::new();
    for (k, &a) in twists.iter().enumerate() {
        for mono in exponent_vectors(n, i - a) {
            let next = index.len();
            index.insert((k, mono), next);
        }
    }
    let width = index.len();
    let mut rows = Vec::new();
    for col in m.relations() {
        let Some(delta) = relation_degree(col, twists) else { continue };
        for shift in exponent_vectors(n, i - delta) {
            let mut row = vec![0u32; width];
            for (k, p) in col.iter().enumerate() {
                for (mono, c) in p.terms() {
                    let e: Vec<u32> = mono.exponents(n).iter().zip(&shift).map(|(a, b)| a + b).collect();
                    let slot = index[&(k, e)];
                    row[slot] = field.add(row[slot], *c);
                }
            }
            rows.push(row);
        }
    }
    let r = if width == 0 { 0 } else { linalg::rank(&mut rows, field) };
    Ok((width - r) as u64)
}

fn relation_degree(col: &Column, twists: &[i64]) -> Option<i64> {
    col.iter()
        .enumerate()
        .find_map(|(k, p)| p.terms().first().map(|(m, _)| m.degree() as i64 + twists[k]))
}

/// All exponent vectors of total degree `d` in `n` variables.
fn exponent_vectors(n: usize, d: i64) -> Vec<Vec<u32>> {
    if d < 0 {
        return Vec::new();
    }
    if n == 1 {
        return vec![vec![d as u32]];
    }
    let mut out = Vec::new();
    for first in 0..=d {
        for mut rest in exponent_vectors(n - 1, d - first) {
            rest.insert(0, first as u32);
            out.push(rest);
        }
    }
    out
}

#[cfg(test)]
mod tests;
