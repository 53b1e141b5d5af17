//! Generation recipes: `kind[:key=value,...]`.
//!
//! Kinds are `ideal` (quotients `R/I`), `matrix` (cokernels of random
//! homogeneous matrices) and `mixed` (either, per module). Keys:
//! `vars`, `gens`, `deg`, `rank` take a value `k` or a range `a-b`;
//! `terms` is the maximal number of terms per entry; `twists` fixes the
//! generator degrees of matrix modules, separated by `/`.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{FreeModule, Presentation, Ring, RingSpec};
use crate::corpus::CorpusFile;
use crate::error::{Error, Result};
use crate::random::{random_cyclic, random_form, random_presentation};

pub const MAX_RECIPE_VARS: usize = 4;
pub const MAX_RECIPE_GENS: usize = 4;
pub const MAX_RECIPE_DEGREE: u32 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RecipeKind {
    Ideal,
    Matrix,
    Mixed,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Recipe {
    pub kind: RecipeKind,
    pub vars: (usize, usize),
    pub gens: (usize, usize),
    pub deg: (u32, u32),
    pub rank: (usize, usize),
    pub terms: usize,
    pub twists: Option<Vec<i64>>,
}

impl Default for Recipe {
    fn default() -> Self {
        Recipe { kind: RecipeKind::Mixed, vars: (1, 3), gens: (1, 3), deg: (1, 3), rank: (1, 2), terms: 3, twists: None }
    }
}

impl Recipe {
    pub fn of_kind(kind: RecipeKind) -> Self {
        Recipe { kind, ..Recipe::default() }
    }
}

fn parse_range<T: FromStr + PartialOrd + Copy>(key: &str, v: &str) -> Result<(T, T)> {
    let bad = || Error::Usage(format!("bad value for {key}: {v:?}"));
    let (a, b) = match v.split_once('-') {
        Some((a, b)) => (a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?),
        None => {
            let a = v.parse().map_err(|_| bad())?;
            (a, a)
        }
    };
    if a > b {
        return Err(bad());
    }
    Ok((a, b))
}

impl FromStr for Recipe {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (kind, rest) = s.split_once(':').unwrap_or((s, ""));
        let kind = match kind {
            "ideal" => RecipeKind::Ideal,
            "matrix" => RecipeKind::Matrix,
            "mixed" => RecipeKind::Mixed,
            other => return Err(Error::Usage(format!("unknown recipe kind {other:?}"))),
        };
        let mut r = Recipe::of_kind(kind);
        for kv in rest.split(',').filter(|t| !t.is_empty()) {
            let (k, v) = kv.split_once('=').ok_or_else(|| Error::Usage(format!("expected key=value, got {kv:?}")))?;
            match k {
                "vars" => r.vars = parse_range(k, v)?,
                "gens" => r.gens = parse_range(k, v)?,
                "deg" => r.deg = parse_range(k, v)?,
                "rank" => r.rank = parse_range(k, v)?,
                "terms" => r.terms = parse_range::<usize>(k, v)?.1,
                "twists" => {
                    let t: std::result::Result<Vec<i64>, _> = v.split('/').map(str::parse).collect();
                    let t = t.map_err(|_| Error::Usage(format!("bad twists {v:?}")))?;
                    r.rank = (t.len(), t.len());
                    r.twists = Some(t);
                }
                other => return Err(Error::Usage(format!("unknown recipe key {other:?}"))),
            }
        }
        if r.vars.0 == 0 || r.vars.1 > MAX_RECIPE_VARS {
            return Err(Error::Usage(format!("vars must lie in 1..={MAX_RECIPE_VARS}")));
        }
        if r.gens.1 > MAX_RECIPE_GENS || r.deg.1 > MAX_RECIPE_DEGREE || r.deg.0 == 0 {
            return Err(Error::Usage(format!(
                "gens must be at most {MAX_RECIPE_GENS} and deg within 1..={MAX_RECIPE_DEGREE}"
            )));
        }
        if r.rank.0 == 0 || r.terms == 0 {
            return Err(Error::Usage("rank and terms must be positive".into()));
        }
        Ok(r)
    }
}

fn fmt_range<T: fmt::Display + PartialEq>(r: &(T, T)) -> String {
    if r.0 == r.1 {
        r.0.to_string()
    } else {
        format!("{}-{}", r.0, r.1)
    }
}

/// Canonical form, accepted back by `FromStr`.
impl fmt::Display for Recipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            RecipeKind::Ideal => "ideal",
            RecipeKind::Matrix => "matrix",
            RecipeKind::Mixed => "mixed",
        };
        write!(
            f,
            "{kind}:vars={},gens={},deg={},terms={}",
            fmt_range(&self.vars),
            fmt_range(&self.gens),
            fmt_range(&self.deg),
            self.terms
        )?;
        match &self.twists {
            Some(t) => {
                let t: Vec<String> = t.iter().map(i64::to_string).collect();
                write!(f, ",twists={}", t.join("/"))
            }
            None => write!(f, ",rank={}", fmt_range(&self.rank)),
        }
    }
}

/// A generated ring with modules `M`, `N` and the quotient `I` = `R/I` of a
/// random proper ideal.
#[derive(Debug, Clone, PartialEq)]
pub struct CorpusInstance {
    pub recipe: Recipe,
    pub seed: u64,
    pub ring: Ring,
    pub modules: Vec<(String, Presentation)>,
}

impl CorpusInstance {
    pub fn module(&self, name: &str) -> &Presentation {
        &self.modules.iter().find(|(n, _)| n == name).expect("generated module").1
    }

    /// As a corpus file holding the named modules.
    pub fn to_corpus(&self, names: &[&str]) -> CorpusFile {
        let mut file = CorpusFile::new(self.ring.clone());
        file.seed = Some(self.seed);
        file.recipe = Some(self.recipe.to_string());
        file.modules =
            names.iter().map(|n| ((*n).to_string(), self.module(n).clone())).collect();
        file
    }
}

fn pick<T: rand::distributions::uniform::SampleUniform + PartialOrd + Copy>(rng: &mut ChaCha8Rng, r: (T, T)) -> T {
    rng.gen_range(r.0..=r.1)
}

fn gen_ideal_quotient(ring: &Ring, recipe: &Recipe, rng: &mut ChaCha8Rng) -> Presentation {
    let gens = pick(rng, recipe.gens);
    let lo = recipe.deg.0;
    let forms = (0..gens).map(|_| random_form(ring, pick(rng, (lo, recipe.deg.1)), recipe.terms, rng)).collect();
    Presentation::cyclic(ring.clone(), forms).expect("homogeneous forms")
}

fn gen_matrix_module(ring: &Ring, recipe: &Recipe, rng: &mut ChaCha8Rng) -> Presentation {
    let twists = match &recipe.twists {
        Some(t) => t.clone(),
        None => (0..pick(rng, recipe.rank)).map(|_| rng.gen_range(-1..=1)).collect(),
    };
    let gens = pick(rng, recipe.gens);
    random_presentation(FreeModule::new(ring.clone(), twists), gens, recipe.deg.1, recipe.terms, rng)
}

fn gen_module(ring: &Ring, recipe: &Recipe, rng: &mut ChaCha8Rng) -> Presentation {
    let kind = match recipe.kind {
        RecipeKind::Mixed if rng.gen_bool(0.5) => RecipeKind::Ideal,
        RecipeKind::Mixed => RecipeKind::Matrix,
        k => k,
    };
    match kind {
        RecipeKind::Ideal => gen_ideal_quotient(ring, recipe, rng),
        _ => gen_matrix_module(ring, recipe, rng),
    }
}

/// Deterministic in `(recipe, seed)`.
pub fn generate_instance(recipe: &Recipe, seed: u64) -> CorpusInstance {
    use rand::SeedableRng;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = pick(&mut rng, recipe.vars);
    let ring = RingSpec::standard(n);
    let m = gen_module(&ring, recipe, &mut rng);
    let nn = gen_module(&ring, recipe, &mut rng);
    let gens = pick(&mut rng, recipe.gens).max(1);
    let i = random_cyclic(&ring, gens, recipe.deg.1, recipe.terms, &mut rng);
    CorpusInstance {
        recipe: recipe.clone(),
        seed,
        ring,
        modules: vec![("M".into(), m), ("N".into(), nn), ("I".into(), i)],
    }
}

/// SplitMix64 step, used to derive independent per-instance seeds.
pub fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::render_corpus;

    #[test]
    fn recipes_roundtrip() {
        for s in ["ideal", "matrix:twists=0/1", "mixed:vars=2-3,gens=2,deg=1-2,terms=2"] {
            let r: Recipe = s.parse().unwrap();
            let again: Recipe = r.to_string().parse().unwrap();
            assert_eq!(r, again);
        }
        assert!("ideal:vars=5".parse::<Recipe>().is_err());
        assert!("cube".parse::<Recipe>().is_err());
        assert!("ideal:deg=3-1".parse::<Recipe>().is_err());
    }

    #[test]
    fn generation_contracts() {
        let r: Recipe = "ideal:gens=2,deg=1-3".parse().unwrap();
        let inst = generate_instance(&r, 1);
        let m = inst.module("M");
        assert_eq!(m.ambient().rank(), 1);
        assert_eq!(m.relations().len(), 2);
        assert!(m.relations().iter().all(|c| c[0].degree().unwrap() <= 3));

        let r: Recipe = "matrix:twists=0/1".parse().unwrap();
        let inst = generate_instance(&r, 7);
        assert_eq!(inst.module("M").ambient().twists(), &[0, 1]);

        let r = Recipe::default();
        for seed in 0..20 {
            let a = render_corpus(&generate_instance(&r, seed).to_corpus(&["M", "N", "I"]));
            let b = render_corpus(&generate_instance(&r, seed).to_corpus(&["M", "N", "I"]));
            assert_eq!(a, b);
        }
    }
}
