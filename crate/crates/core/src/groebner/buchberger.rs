//! Homogeneous Buchberger with the normal selection strategy and the
//! Gebauer–Möller pair criteria.

use std::collections::{BTreeMap, HashSet};

use super::order::OrderCtx;
use super::svec::{add_scaled_from, make_monic, SVec, STerm};
use crate::algebra::{FieldSpec, Monomial};
use crate::error::{Error, Result};

/// Limits for Gröbner computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GbConfig {
    /// Largest monomial degree an S-pair may have.
    pub degree_cap: u32,
}

impl Default for GbConfig {
    fn default() -> Self {
        GbConfig { degree_cap: 30 }
    }
}

/// A list of monic vectors with pairwise non-dividing leading terms, indexed
/// by the component of the leading term.
#[derive(Debug, Clone)]
pub(crate) struct Reducer {
    pub ctx: OrderCtx,
    pub field: FieldSpec,
    pub elems: Vec<SVec>,
    by_comp: Vec<Vec<usize>>,
}

impl Reducer {
    pub(crate) fn new(ctx: OrderCtx, field: FieldSpec) -> Self {
        let rank = ctx.twists().len();
        Reducer { ctx, field, elems: Vec::new(), by_comp: vec![Vec::new(); rank] }
    }

    pub(crate) fn from_elems(ctx: OrderCtx, field: FieldSpec, elems: Vec<SVec>) -> Self {
        let mut r = Reducer::new(ctx, field);
        for e in elems {
            r.push(e);
        }
        r
    }

    fn push(&mut self, v: SVec) -> usize {
        let k = self.elems.len();
        self.by_comp[v[0].comp as usize].push(k);
        self.elems.push(v);
        k
    }

    #[inline]
    fn find_divisor(&self, t: &STerm) -> Option<usize> {
        self.by_comp[t.comp as usize]
            .iter()
            .copied()
            .find(|&i| self.elems[i][0].mono.divides(&t.mono))
    }

    /// Full reduction of `v`, leaving `v[..start]` untouched.
    pub(crate) fn reduce_from(&self, mut v: SVec, start: usize) -> SVec {
        let mut i = start;
        while i < v.len() {
            let t = v[i];
            match self.find_divisor(&t) {
                Some(bi) => {
                    let b = &self.elems[bi];
                    let q = t.mono.div(&b[0].mono).expect("divisor");
                    // leading coefficients are 1
                    let c = self.field.neg(t.coef);
                    v = add_scaled_from(&v, i, c, &q, b, &self.ctx, self.field);
                }
                None => i += 1,
            }
        }
        v
    }

    pub(crate) fn reduce(&self, v: SVec) -> SVec {
        self.reduce_from(v, 0)
    }

    fn s_vector(&self, i: usize, j: usize, lcm: &Monomial) -> SVec {
        let (a, b) = (&self.elems[i], &self.elems[j]);
        let qa = lcm.div(&a[0].mono).expect("lcm");
        let qb = lcm.div(&b[0].mono).expect("lcm");
        let scaled: SVec = a.iter().map(|t| STerm { mono: t.mono.mul(&qa), ..*t }).collect();
        add_scaled_from(&scaled, 0, self.field.neg(1), &qb, b, &self.ctx, self.field)
    }

    /// Every S-vector reduces to zero.
    pub(crate) fn satisfies_buchberger_criterion(&self) -> bool {
        for i in 0..self.elems.len() {
            for j in (i + 1)..self.elems.len() {
                let (a, b) = (&self.elems[i][0], &self.elems[j][0]);
                if a.comp != b.comp {
                    continue;
                }
                let l = a.mono.lcm(&b.mono);
                if !self.reduce(self.s_vector(i, j, &l)).is_empty() {
                    return false;
                }
            }
        }
        true
    }

    /// Turns the basis into the reduced one: drops elements with a
    /// divisible leading term, reduces tails, sorts by leading term.
    fn interreduce(&mut self) {
        let n = self.elems.len();
        let redundant = |i: usize| {
            let a = self.elems[i][0];
            (0..n).any(|j| {
                let b = self.elems[j][0];
                j != i && a.comp == b.comp && b.mono.divides(&a.mono) && (b.mono != a.mono || j < i)
            })
        };
        let mut reduced: Vec<SVec> =
            (0..n).filter(|&i| !redundant(i)).map(|i| self.reduce_from(self.elems[i].clone(), 1)).collect();
        reduced.sort_by(|a, b| self.ctx.cmp((&b[0].mono, b[0].comp), (&a[0].mono, a[0].comp)));
        *self = Reducer::from_elems(self.ctx.clone(), self.field, reduced);
    }
}

#[derive(Debug, Clone, Copy)]
struct PairData {
    lcm: Monomial,
    comp: u32,
}

pub(crate) struct Engine {
    pub basis: Reducer,
    cap: u32,
    // (total degree, newer index, older index)
    pairs: BTreeMap<(i64, usize, usize), PairData>,
}

impl Engine {
    pub(crate) fn new(ctx: OrderCtx, field: FieldSpec, config: GbConfig) -> Self {
        Engine { basis: Reducer::new(ctx, field), cap: config.degree_cap, pairs: BTreeMap::new() }
    }

    fn add(&mut self, mut v: SVec) {
        make_monic(&mut v, self.basis.field);
        let lead = v[0];
        let ck = lead.comp;
        let tk = lead.mono;
        let elems = &self.basis.elems;

        let cands: Vec<(usize, Monomial)> = self.basis.by_comp[ck as usize]
            .iter()
            .map(|&i| (i, elems[i][0].mono.lcm(&tk)))
            .collect();
        // chain criterion among the new pairs
        let mut seen = HashSet::new();
        let mut fresh = Vec::new();
        for (i, l) in &cands {
            let dominated = cands.iter().any(|(j, l2)| j != i && l2 != l && l2.divides(l));
            if !dominated && seen.insert(*l) {
                fresh.push((*i, *l));
            }
        }
        // chain criterion on the old pairs
        self.pairs.retain(|&(_, j, i), p| {
            if p.comp != ck || !tk.divides(&p.lcm) {
                return true;
            }
            let li = elems[i][0].mono.lcm(&tk);
            let lj = elems[j][0].mono.lcm(&tk);
            li == p.lcm || lj == p.lcm
        });

        let k = self.basis.push(v);
        for (i, l) in fresh {
            let deg = self.basis.ctx.total_degree(&l, ck);
            self.pairs.insert((deg, k, i), PairData { lcm: l, comp: ck });
        }
    }

    /// Runs Buchberger on homogeneous `inputs`, processed degree by degree.
    /// Returns the indices of inputs that were not already in the submodule
    /// generated by the inputs of lower degree and the earlier inputs of the
    /// same degree: a minimal generating subset.
    pub(crate) fn run(&mut self, inputs: &[SVec]) -> Result<Vec<usize>> {
        let ctx = self.basis.ctx.clone();
        let deg_of = |v: &SVec| ctx.total_degree(&v[0].mono, v[0].comp);
        let mut queue: Vec<usize> = (0..inputs.len()).filter(|&i| !inputs[i].is_empty()).collect();
        queue.sort_by_key(|&i| deg_of(&inputs[i]));
        let mut next = 0;
        let mut kept = Vec::new();

        loop {
            let pair_deg = self.pairs.keys().next().map(|k| k.0);
            let input_deg = queue.get(next).map(|&i| deg_of(&inputs[i]));
            let cur = match (pair_deg, input_deg) {
                (None, None) => break,
                (Some(a), None) | (None, Some(a)) => a,
                (Some(a), Some(b)) => a.min(b),
            };
            while let Some(entry) = self.pairs.first_entry() {
                if entry.key().0 != cur {
                    break;
                }
                let (&(_, j, i), &data) = (entry.key(), entry.get());
                entry.remove();
                if data.lcm.degree() > self.cap {
                    return Err(Error::DegreeLimitExceeded { cap: self.cap, reached: data.lcm.degree() });
                }
                let s = self.basis.s_vector(i, j, &data.lcm);
                let r = self.basis.reduce(s);
                if !r.is_empty() {
                    self.add(r);
                }
            }
            while next < queue.len() && deg_of(&inputs[queue[next]]) == cur {
                let idx = queue[next];
                next += 1;
                let r = self.basis.reduce(inputs[idx].clone());
                if !r.is_empty() {
                    kept.push(idx);
                    self.add(r);
                }
            }
        }
        kept.sort_unstable();
        Ok(kept)
    }

    pub(crate) fn finish(mut self) -> Reducer {
        self.basis.interreduce();
        self.basis
    }
}
