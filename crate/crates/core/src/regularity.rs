//! Filter-regular elements, hyperplane restrictions, and regularity from
//! postulation numbers and saturation indices of restrictions.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{monomials_of_degree, Polynomial, Presentation, RingSpec};
use crate::degree::{ExtInt, NEG_INFINITY};
use crate::error::{Error, Result};
use crate::groebner::{h0_submodule, kernel_of_map, submodule_presentation};
use crate::hilbert::{hilbert_series, krull_dim};

/// Default number of fresh draws per slot of a chain.
pub const DEFAULT_RETRIES: u32 = 50;

/// Outcome of testing whether `·l : M(-D) → M` is injective in large degrees.
#[derive(Debug, Clone)]
pub struct FilterRegularCertificate {
    pub element: Polynomial,
    pub degree: u32,
    pub verdict: bool,
    /// `ker(·l : M(-D) → M)`.
    pub witness: Presentation,
    pub retries_used: u32,
}

fn element_degree(l: &Polynomial) -> Result<u32> {
    if l.is_zero() {
        return Err(Error::ZeroElement);
    }
    let terms = l.terms();
    let d = terms[0].0.degree();
    if let Some((m, _)) = terms.iter().find(|(m, _)| m.degree() != d) {
        return Err(Error::NonHomogeneousRelation { column: 0, first: d as i64, second: m.degree() as i64 });
    }
    if d == 0 {
        return Err(Error::NotPositiveDegree);
    }
    Ok(d)
}

/// Certifies `l` as filter-regular on `m` iff the kernel of multiplication
/// has Krull dimension at most zero.
pub fn is_filter_regular(l: &Polynomial, m: &Presentation) -> Result<FilterRegularCertificate> {
    let degree = element_degree(l)?;
    if m.is_zero_module()? {
        return Err(Error::ZeroModule);
    }
    let source_module = m.twist(degree as i64);
    let source = source_module.ambient();
    let images: Vec<_> = (0..source.rank())
        .map(|k| {
            let mut c = m.ambient().zero_column();
            c[k] = l.clone();
            c
        })
        .collect();
    let kernel = kernel_of_map(source, &images, m)?;
    let witness = submodule_presentation(&source_module, &kernel.generators)?;
    let verdict = krull_dim(&witness)? <= 0;
    Ok(FilterRegularCertificate { element: l.clone(), degree, verdict, witness, retries_used: 0 })
}

/// `M / lM`.
pub fn restrict(m: &Presentation, l: &Polynomial) -> Result<Presentation> {
    element_degree(l)?;
    let extra = (0..m.ambient().rank()).map(|k| {
        let mut c = m.ambient().zero_column();
        c[k] = l.clone();
        c
    });
    Ok(m.with_relations(extra))
}

/// Top degree of `H^0_{R_+}(M)`, `-inf` if it vanishes.
pub fn sat_index(m: &Presentation) -> Result<ExtInt> {
    Ok(hilbert_series(&h0_submodule(m)?)?.top_nonzero_degree())
}

/// `M = M^0, M^1 = M/l_1 M, ..., M^d` with certificates and invariants.
#[derive(Debug, Clone)]
pub struct RestrictionChain {
    /// Restrictions computed so far; shorter than `d + 1` if one vanished.
    pub modules: Vec<Presentation>,
    pub elements: Vec<Polynomial>,
    pub degrees: Vec<u32>,
    pub certificates: Vec<FilterRegularCertificate>,
    /// `α(M^i)` for `i = 0..=d`.
    pub alphas: Vec<ExtInt>,
    /// `sat(M^i)` for `i = 0..=d`.
    pub sat_indices: Vec<ExtInt>,
}

impl RestrictionChain {
    pub fn len(&self) -> usize {
        self.alphas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alphas.is_empty()
    }

    /// `Σ_{j ≤ i} (D_j - 1)`.
    pub fn correction(&self, i: usize) -> i64 {
        self.degrees[..i].iter().map(|&d| d as i64 - 1).sum()
    }
}

/// A uniformly random nonzero form of degree `deg`: every monomial gets a
/// uniform coefficient in `F_p`.
pub fn random_dense_form<R: Rng>(ring: &RingSpec, deg: u32, rng: &mut R) -> Polynomial {
    let field = ring.field();
    let p = field.characteristic();
    loop {
        let terms: Vec<_> =
            monomials_of_degree(ring.num_vars(), deg).into_iter().map(|m| (m, rng.gen_range(0..p))).collect();
        let f = Polynomial::from_terms(terms, field);
        if !f.is_zero() {
            return f;
        }
    }
}

/// The random stream used for slot `slot` of a chain drawn with `seed`.
fn slot_rng(seed: u64, slot: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(slot);
    rng
}

/// Draws a filter-regular element of degree `deg` on `m`.
pub fn random_filter_regular_element(
    m: &Presentation,
    deg: u32,
    seed: u64,
    slot: u64,
    retries: u32,
) -> Result<FilterRegularCertificate> {
    if deg == 0 {
        return Err(Error::NotPositiveDegree);
    }
    let mut rng = slot_rng(seed, slot);
    for attempt in 0..retries {
        let l = random_dense_form(m.ring(), deg, &mut rng);
        let mut cert = is_filter_regular(&l, m)?;
        if cert.verdict {
            cert.retries_used = attempt;
            return Ok(cert);
        }
    }
    Err(Error::RetriesExhausted { degree: deg, retries })
}

pub fn random_filter_regular_sequence(m: &Presentation, degrees: &[u32], seed: u64) -> Result<RestrictionChain> {
    random_filter_regular_sequence_with(m, degrees, seed, DEFAULT_RETRIES)
}

/// A chain of length `krull_dim(M) + 1`; `degrees.len()` must equal the
/// Krull dimension (zero for the zero module).
pub fn random_filter_regular_sequence_with(
    m: &Presentation,
    degrees: &[u32],
    seed: u64,
    retries: u32,
) -> Result<RestrictionChain> {
    let d = krull_dim(m)?.max(0);
    if degrees.len() as i64 != d {
        return Err(Error::ChainLength { expected: d, got: degrees.len() });
    }
    if degrees.contains(&0) {
        return Err(Error::NotPositiveDegree);
    }
    let mut chain = RestrictionChain {
        modules: vec![m.clone()],
        elements: Vec::new(),
        degrees: degrees.to_vec(),
        certificates: Vec::new(),
        alphas: vec![hilbert_series(m)?.postulation_number()],
        sat_indices: vec![sat_index(m)?],
    };
    for (slot, &deg) in degrees.iter().enumerate() {
        let current = chain.modules.last().expect("nonempty");
        if current.is_zero_module()? {
            chain.alphas.push(NEG_INFINITY);
            chain.sat_indices.push(NEG_INFINITY);
            continue;
        }
        let cert = random_filter_regular_element(current, deg, seed, slot as u64, retries)?;
        let next = restrict(current, &cert.element)?;
        chain.alphas.push(hilbert_series(&next)?.postulation_number());
        chain.sat_indices.push(sat_index(&next)?);
        chain.elements.push(cert.element.clone());
        chain.certificates.push(cert);
        chain.modules.push(next);
    }
    Ok(chain)
}

fn check_chain(m: &Presentation, chain: &RestrictionChain) -> Result<()> {
    if chain.modules.first() != Some(m) {
        return Err(Error::AmbientMismatch("chain does not start at this module".into()));
    }
    Ok(())
}

/// `max_i ( α(M/(l_1..l_i)M) - Σ_{j ≤ i} (D_j - 1) )`.
pub fn regularity_postulation(m: &Presentation, chain: &RestrictionChain) -> Result<ExtInt> {
    check_chain(m, chain)?;
    Ok(ExtInt::max_of(chain.alphas.iter().enumerate().map(|(i, &a)| a - chain.correction(i))))
}

/// `max_i ( sat(M/(l_1..l_i)M) - Σ_{j ≤ i} (D_j - 1) )`.
pub fn regularity_sat_formula(m: &Presentation, chain: &RestrictionChain) -> Result<ExtInt> {
    check_chain(m, chain)?;
    Ok(ExtInt::max_of(chain.sat_indices.iter().enumerate().map(|(i, &s)| s - chain.correction(i))))
}

pub fn regularity_conca_recursive(m: &Presentation, seed: u64) -> Result<ExtInt> {
    regularity_conca_recursive_with(m, seed, 1)
}

/// `reg M = max{ sat(M), reg(M/lM) - D + 1 }`, recursing down to Krull
/// dimension zero with random filter-regular `l` of degree `deg`.
pub fn regularity_conca_recursive_with(m: &Presentation, seed: u64, deg: u32) -> Result<ExtInt> {
    let sat = sat_index(m)?;
    let mut current = m.clone();
    let mut acc = sat;
    let mut shift = 0i64;
    let mut slot = 0u64;
    while krull_dim(&current)? > 0 {
        let cert = random_filter_regular_element(&current, deg, seed, slot, DEFAULT_RETRIES)?;
        current = restrict(&current, &cert.element)?;
        shift += deg as i64 - 1;
        acc = acc.max(sat_index(&current)? - shift);
        slot += 1;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests;
