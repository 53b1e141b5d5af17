//! Planning checks over generated instances, evaluating corpus files, and
//! running batches in parallel.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::corpus::{parse_polynomial, render_corpus, CheckSpec, CorpusFile};
use crate::error::{Error, Result};
use crate::harness::checks::*;
use crate::harness::complex::ExplicitComplex;
use crate::harness::recipe::{generate_instance, splitmix64, CorpusInstance, Recipe};
use crate::harness::report::{CheckReport, Verdict};
use crate::hilbert::krull_dim;
use crate::homological::IndexSet;
use crate::regularity::{random_filter_regular_element, DEFAULT_RETRIES};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CheckKind {
    Serre,
    Tensor,
    Im,
    Hom,
    Almost,
    Postulation,
    Indep,
    Complex,
}

impl CheckKind {
    pub const ALL: [CheckKind; 8] = [
        CheckKind::Serre,
        CheckKind::Tensor,
        CheckKind::Im,
        CheckKind::Hom,
        CheckKind::Almost,
        CheckKind::Postulation,
        CheckKind::Indep,
        CheckKind::Complex,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckKind::Serre => "serre",
            CheckKind::Tensor => "tensor",
            CheckKind::Im => "im",
            CheckKind::Hom => "hom",
            CheckKind::Almost => "almost",
            CheckKind::Postulation => "postulation",
            CheckKind::Indep => "indep",
            CheckKind::Complex => "complex",
        }
    }

    fn modules(self) -> &'static [&'static str] {
        match self {
            CheckKind::Tensor | CheckKind::Hom | CheckKind::Complex => &["M", "N"],
            CheckKind::Im => &["I", "M"],
            _ => &["M"],
        }
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for CheckKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CheckKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Usage(format!("unknown check {s:?}")))
    }
}

/// Seed of the `index`-th instance of a batch.
pub fn instance_seed(base: u64, index: u64) -> u64 {
    splitmix64(base.wrapping_add(index))
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join("/")
}

fn random_degrees(rng: &mut ChaCha8Rng, len: usize) -> Vec<u32> {
    (0..len).map(|_| rng.gen_range(1..=2)).collect()
}

fn random_index_set(rng: &mut ChaCha8Rng, n: usize) -> IndexSet {
    IndexSet::new(n, (0..=n).filter(|_| rng.gen_bool(0.5)))
}

/// Attaches check parameters, drawn from stream 1 of the instance seed, and
/// returns the corpus file that [`evaluate`] consumes.
pub fn plan_check(kind: CheckKind, inst: &CorpusInstance) -> Result<CorpusFile> {
    let mut rng = ChaCha8Rng::seed_from_u64(inst.seed);
    rng.set_stream(1);
    let mut file = inst.to_corpus(kind.modules());
    file.instance = Some(format!("{:016x}", inst.seed));
    let n = inst.ring.num_vars();
    let m = inst.module("M");
    let mut params = std::collections::BTreeMap::new();
    let mut set = |k: &str, v: String| {
        params.insert(k.to_string(), v);
    };
    match kind {
        CheckKind::Serre | CheckKind::Im | CheckKind::Hom => {}
        CheckKind::Tensor => {
            let a = if rng.gen_bool(0.6) { 0 } else { rng.gen_range(1..=n) };
            set("a", a.to_string());
        }
        CheckKind::Almost => {
            let d = rng.gen_range(1..=2u32);
            if !m.is_zero_module()? {
                let cert = random_filter_regular_element(m, d, rng.gen(), 0, DEFAULT_RETRIES)?;
                set("l", inst.ring.format_poly(&cert.element).replace(' ', ""));
            }
            set("X", random_index_set(&mut rng, n).to_string());
        }
        CheckKind::Postulation => {
            let dim = krull_dim(m)?.max(0) as usize;
            set("degrees", join(&random_degrees(&mut rng, dim)));
            set("chain_seed", rng.gen::<u32>().to_string());
        }
        CheckKind::Indep => {
            let dim = krull_dim(m)?.max(0) as usize;
            let first = random_degrees(&mut rng, dim);
            let mut second = random_degrees(&mut rng, dim);
            if dim > 0 && first == second {
                second[0] = 3 - second[0];
            }
            set("degrees1", join(&first));
            set("degrees2", join(&second));
            set("seed1", rng.gen::<u32>().to_string());
            set("seed2", rng.gen::<u32>().to_string());
        }
        CheckKind::Complex => {
            if rng.gen_bool(0.5) {
                set("kind", "koszul".into());
                let vars: Vec<usize> = (0..n).filter(|_| rng.gen_bool(0.6)).collect();
                let vars = if vars.is_empty() { vec![0] } else { vars };
                set("vars", join(&vars));
            } else {
                set("kind", "resolution".into());
            }
            set("X", random_index_set(&mut rng, n).to_string());
        }
    }
    file.check = Some(CheckSpec { name: kind.name().to_string(), params });
    Ok(file)
}

fn param<'a>(spec: &'a CheckSpec, key: &str) -> Result<&'a str> {
    spec.params.get(key).map(String::as_str).ok_or_else(|| Error::Usage(format!("check parameter {key} missing")))
}

fn parse_num<T: FromStr>(spec: &CheckSpec, key: &str) -> Result<T> {
    param(spec, key)?.parse().map_err(|_| Error::Usage(format!("bad value for check parameter {key}")))
}

fn parse_list<T: FromStr>(spec: &CheckSpec, key: &str) -> Result<Vec<T>> {
    param(spec, key)?
        .split('/')
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| Error::Usage(format!("bad value for check parameter {key}"))))
        .collect()
}

fn parse_index_set(spec: &CheckSpec, key: &str, n: usize) -> Result<IndexSet> {
    let raw = param(spec, key)?;
    let inner = raw
        .strip_prefix('{')
        .and_then(|r| r.strip_suffix('}'))
        .ok_or_else(|| Error::Usage(format!("index set {raw:?} must look like {{0,2}}")))?;
    let idx: std::result::Result<Vec<usize>, _> =
        inner.split(',').filter(|t| !t.is_empty()).map(str::parse).collect();
    let idx = idx.map_err(|_| Error::Usage(format!("bad index set {raw:?}")))?;
    Ok(IndexSet::new(n, idx))
}

fn module<'a>(file: &'a CorpusFile, name: &str) -> Result<&'a crate::algebra::Presentation> {
    file.module(name).ok_or_else(|| Error::Usage(format!("module {name} missing from corpus file")))
}

/// Runs the check named in `file`. `VIOLATED` reports carry the file as
/// witness.
pub fn evaluate(file: &CorpusFile) -> Result<CheckReport> {
    let spec = file.check.as_ref().ok_or_else(|| Error::Usage("corpus file has no `check` line".into()))?;
    let kind: CheckKind = spec.name.parse()?;
    let id = file.instance.clone().unwrap_or_else(|| "adhoc".into());
    let n = file.ring.num_vars();
    let mut rep = match kind {
        CheckKind::Serre => {
            let window = match (spec.params.get("lo"), spec.params.get("hi")) {
                (Some(_), Some(_)) => Some((parse_num(spec, "lo")?, parse_num(spec, "hi")?)),
                _ => None,
            };
            check_serre_formula(&id, module(file, "M")?, window)?
        }
        CheckKind::Tensor => {
            let a = parse_num(spec, "a")?;
            check_tensor_bound(&id, module(file, "M")?, module(file, "N")?, a)?
        }
        CheckKind::Im => {
            let i = module(file, "I")?;
            let gens: Vec<_> = i.relations().iter().map(|c| c[0].clone()).collect();
            check_ideal_module_bound(&id, &gens, module(file, "M")?)?
        }
        CheckKind::Hom => check_hom_bound(&id, module(file, "M")?, module(file, "N")?)?,
        CheckKind::Almost => {
            let x = parse_index_set(spec, "X", n)?;
            match spec.params.get("l") {
                Some(l) => {
                    let l = parse_polynomial(&file.ring, l)?;
                    check_prop_almost(&id, module(file, "M")?, &l, &x)?
                }
                None => {
                    let mut rep = CheckReport::new("almost", &id);
                    rep.hypothesis("filter-regular l given", "none", false);
                    rep.gate();
                    rep
                }
            }
        }
        CheckKind::Postulation => {
            let degrees: Vec<u32> = parse_list(spec, "degrees")?;
            check_regularity_routes(&id, module(file, "M")?, &degrees, parse_num(spec, "chain_seed")?)?
        }
        CheckKind::Indep => {
            let d1: Vec<u32> = parse_list(spec, "degrees1")?;
            let d2: Vec<u32> = parse_list(spec, "degrees2")?;
            let (s1, s2) = (parse_num(spec, "seed1")?, parse_num(spec, "seed2")?);
            check_chain_independence(&id, module(file, "M")?, (&d1, s1), (&d2, s2))?
        }
        CheckKind::Complex => {
            let x = parse_index_set(spec, "X", n)?;
            let m = module(file, "M")?;
            let complex = match param(spec, "kind")? {
                "koszul" => {
                    let vars: Vec<usize> = parse_list(spec, "vars")?;
                    if vars.iter().any(|&v| v >= n) {
                        return Err(Error::Usage("koszul variable out of range".into()));
                    }
                    ExplicitComplex::koszul(m, &vars)
                }
                "resolution" => ExplicitComplex::resolution_tensor(m, module(file, "N")?)?,
                other => return Err(Error::Usage(format!("unknown complex kind {other:?}"))),
            };
            verify_complex_lemma_tight(&id, &complex, &x)?
        }
    };
    if rep.verdict == Verdict::Violated {
        rep.witness = Some(render_corpus(file));
    }
    Ok(rep)
}

/// Plans and evaluates `count` instances; results come back in instance
/// order.
pub fn run_checks(kind: CheckKind, recipe: &Recipe, base_seed: u64, count: usize) -> Vec<Result<CheckReport>> {
    (0..count as u64)
        .into_par_iter()
        .map(|k| {
            let inst = generate_instance(recipe, instance_seed(base_seed, k));
            evaluate(&plan_check(kind, &inst)?)
        })
        .collect()
}
