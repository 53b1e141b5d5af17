//! Seeded generators for random homogeneous data.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::algebra::{monomials_of_degree, Column, FreeModule, Polynomial, Presentation, RingSpec};

/// A homogeneous form of degree `deg` with between 1 and `max_terms` terms
/// and nonzero coefficients. Degree 0 gives a nonzero constant.
pub fn random_form<R: Rng>(ring: &RingSpec, deg: u32, max_terms: usize, rng: &mut R) -> Polynomial {
    let field = ring.field();
    let p = field.characteristic() as u64;
    let mut monos = monomials_of_degree(ring.num_vars(), deg);
    let count = rng.gen_range(1..=max_terms.max(1)).min(monos.len());
    monos.shuffle(rng);
    let terms = monos[..count].iter().map(|m| (*m, rng.gen_range(1..p) as u32)).collect();
    Polynomial::from_terms(terms, field)
}

/// A random homogeneous vector of degree `degree` in `ambient`. Each
/// component with a nonnegative local degree is nonzero with probability
/// `density`; at least one component is nonzero whenever possible.
pub fn random_column<R: Rng>(ambient: &FreeModule, degree: i64, density: f64, max_terms: usize, rng: &mut R) -> Column {
    let ring = ambient.ring();
    let eligible: Vec<usize> = (0..ambient.rank()).filter(|&k| degree - ambient.twists()[k] >= 0).collect();
    let mut col = ambient.zero_column();
    if eligible.is_empty() {
        return col;
    }
    let forced = eligible[rng.gen_range(0..eligible.len())];
    for &k in &eligible {
        if k == forced || rng.gen_bool(density) {
            col[k] = random_form(ring, (degree - ambient.twists()[k]) as u32, max_terms, rng);
        }
    }
    col
}

/// `R^r(-twists) / (relations)` with `gens` random relations whose local
/// degrees lie in `1..=max_deg`.
pub fn random_presentation<R: Rng>(
    ambient: FreeModule,
    gens: usize,
    max_deg: u32,
    max_terms: usize,
    rng: &mut R,
) -> Presentation {
    let lo = ambient.twists().iter().copied().min().unwrap_or(0);
    let mut rels = Vec::with_capacity(gens);
    for _ in 0..gens {
        let degree = lo + rng.gen_range(1..=max_deg.max(1)) as i64;
        rels.push(random_column(&ambient, degree, 0.6, max_terms, rng));
    }
    Presentation::new(ambient, rels).expect("random columns are homogeneous")
}

/// `R / (f_1, ..., f_g)` with forms of degrees in `1..=max_deg`.
pub fn random_cyclic<R: Rng>(ring: &crate::algebra::Ring, gens: usize, max_deg: u32, max_terms: usize, rng: &mut R) -> Presentation {
    let forms = (0..gens)
        .map(|_| random_form(ring, rng.gen_range(1..=max_deg.max(1)), max_terms, rng))
        .collect();
    Presentation::cyclic(ring.clone(), forms).expect("forms are homogeneous")
}
