use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Column, FreeModule, Polynomial, Presentation, Ring, RingSpec};
use crate::corpus::parse_polynomial;
use crate::random::{random_cyclic, random_presentation};

pub fn ring(n: usize) -> Ring {
    RingSpec::standard(n)
}

pub fn poly(r: &Ring, s: &str) -> Polynomial {
    parse_polynomial(r, s).unwrap()
}

pub fn col(r: &Ring, entries: &[&str]) -> Column {
    entries.iter().map(|s| poly(r, s)).collect()
}

pub fn quotient(r: &Ring, gens: &[&str]) -> Presentation {
    Presentation::cyclic(r.clone(), gens.iter().map(|s| poly(r, s)).collect()).unwrap()
}

pub fn module(r: &Ring, twists: &[i64], rels: &[&[&str]]) -> Presentation {
    let ambient = FreeModule::new(r.clone(), twists.to_vec());
    Presentation::new(ambient, rels.iter().map(|c| col(r, c)).collect()).unwrap()
}

/// Small random module in at most 3 variables: cyclic or a cokernel.
pub fn random_small_module(seed: u64) -> Presentation {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    use rand::Rng;
    let n = rng.gen_range(1..=3);
    let r = ring(n);
    if rng.gen_bool(0.5) {
        let g = rng.gen_range(0..=3);
        random_cyclic(&r, g, 3, 3, &mut rng)
    } else {
        let rank = rng.gen_range(1..=2);
        let twists = (0..rank).map(|_| rng.gen_range(-1..=1)).collect();
        let g = rng.gen_range(0..=3);
        random_presentation(FreeModule::new(r, twists), g, 2, 2, &mut rng)
    }
}
