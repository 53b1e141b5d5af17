//! Gröbner bases for submodules of graded free modules, and the module
//! operations built on them: normal forms, syzygies, kernels, submodules,
//! saturation.

mod buchberger;
mod order;
mod svec;

use std::sync::Arc;

pub use buchberger::GbConfig;
pub use order::TermOrder;

use buchberger::{Engine, Reducer};
use order::OrderCtx;
use svec::{from_column, to_column, SVec};

use crate::algebra::{Column, FreeModule, Monomial, Polynomial, Presentation};
use crate::error::{Error, Result};

/// Reduced Gröbner basis of a submodule of `ambient`.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    ambient: FreeModule,
    order: TermOrder,
    reducer: Reducer,
}

impl GroebnerBasis {
    pub fn ambient(&self) -> &FreeModule {
        &self.ambient
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    pub fn len(&self) -> usize {
        self.reducer.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reducer.elems.is_empty()
    }

    pub fn generators(&self) -> Vec<Column> {
        let field = self.ambient.ring().field();
        self.reducer.elems.iter().map(|v| to_column(v, self.ambient.rank(), 0, field)).collect()
    }

    /// `(component, monomial)` of each leading term.
    pub fn leading_terms(&self) -> Vec<(usize, Monomial)> {
        self.reducer.elems.iter().map(|v| (v[0].comp as usize, v[0].mono)).collect()
    }

    pub fn normal_form(&self, v: &Column) -> Result<Column> {
        self.ambient.check_column(0, v).map_err(|e| match e {
            Error::NonHomogeneousRelation { .. } => Error::AmbientMismatch("vector is not homogeneous".into()),
            other => other,
        })?;
        let r = self.reducer.reduce(from_column(v, &self.reducer.ctx));
        Ok(to_column(&r, self.ambient.rank(), 0, self.ambient.ring().field()))
    }

    pub fn contains(&self, v: &Column) -> Result<bool> {
        Ok(self.normal_form(v)?.iter().all(Polynomial::is_zero))
    }

    /// Every S-vector reduces to zero.
    pub fn is_groebner(&self) -> bool {
        self.reducer.satisfies_buchberger_criterion()
    }

    pub(crate) fn reducer(&self) -> &Reducer {
        &self.reducer
    }
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.order == other.order && {
            let mut a = self.reducer.elems.clone();
            let mut b = other.reducer.elems.clone();
            let key = |v: &SVec| (v[0].comp, v[0].mono);
            a.sort_by_key(key);
            b.sort_by_key(key);
            a == b
        }
    }
}

fn check_columns(ambient: &FreeModule, gens: &[Column]) -> Result<Vec<Option<i64>>> {
    gens.iter().enumerate().map(|(i, c)| ambient.check_column(i, c)).collect()
}

pub fn buchberger(ambient: &FreeModule, gens: &[Column], order: TermOrder) -> Result<GroebnerBasis> {
    buchberger_with(ambient, gens, order, GbConfig::default())
}

pub fn buchberger_with(
    ambient: &FreeModule,
    gens: &[Column],
    order: TermOrder,
    config: GbConfig,
) -> Result<GroebnerBasis> {
    check_columns(ambient, gens)?;
    let ctx = OrderCtx::new(ambient.twists(), order);
    let inputs: Vec<SVec> = gens.iter().map(|c| from_column(c, &ctx)).collect();
    let mut engine = Engine::new(ctx, ambient.ring().field(), config);
    engine.run(&inputs)?;
    Ok(GroebnerBasis { ambient: ambient.clone(), order, reducer: engine.finish() })
}

pub fn normal_form(v: &Column, gb: &GroebnerBasis) -> Result<Column> {
    gb.normal_form(v)
}

/// Indices of a minimal generating subset of the submodule spanned by `gens`.
pub fn minimal_generating_subset(ambient: &FreeModule, gens: &[Column]) -> Result<Vec<usize>> {
    check_columns(ambient, gens)?;
    let ctx = OrderCtx::new(ambient.twists(), TermOrder::Top);
    let inputs: Vec<SVec> = gens.iter().map(|c| from_column(c, &ctx)).collect();
    Engine::new(ctx, ambient.ring().field(), GbConfig::default()).run(&inputs)
}

impl Presentation {
    /// Gröbner basis of the relation submodule (degrevlex, TOP), cached.
    pub fn groebner_basis(&self) -> Result<&GroebnerBasis> {
        if let Some(gb) = self.gb.get() {
            return Ok(gb);
        }
        let gb = buchberger(self.ambient(), self.relations(), TermOrder::Top)?;
        let _ = self.gb.set(Arc::new(gb));
        Ok(self.gb.get().expect("just set"))
    }

    /// Whether `v` maps to zero in the module.
    pub fn is_zero_element(&self, v: &Column) -> Result<bool> {
        self.groebner_basis()?.contains(v)
    }

    pub fn is_zero_module(&self) -> Result<bool> {
        let gb = self.groebner_basis()?;
        let mut covered = vec![false; self.ambient().rank()];
        for (k, m) in gb.leading_terms() {
            if m.is_one() {
                covered[k] = true;
            }
        }
        Ok(covered.into_iter().all(|c| c))
    }
}

/// Generators of `{v ∈ source : images(v) ∈ relations(target)}`, minimal.
pub(crate) fn kernel_generators(source: &FreeModule, images: &[Column], target: &Presentation) -> Result<Vec<Column>> {
    let f = target.ambient();
    let (r, s) = (f.rank(), source.rank());
    if images.len() != s {
        return Err(Error::AmbientMismatch(format!("{} images for a source of rank {s}", images.len())));
    }
    for (j, img) in images.iter().enumerate() {
        match f.check_column(j, img) {
            Ok(Some(d)) if d != source.twists()[j] => {
                return Err(Error::AmbientMismatch(format!(
                    "image of basis element {j} has degree {d}, expected {}",
                    source.twists()[j]
                )))
            }
            Ok(_) => {}
            Err(Error::NonHomogeneousRelation { .. }) => {
                return Err(Error::AmbientMismatch(format!("image of basis element {j} is not homogeneous")))
            }
            Err(e) => return Err(e),
        }
    }
    if s == 0 {
        return Ok(Vec::new());
    }
    let field = f.ring().field();
    let combined = f.direct_sum(source);
    let ctx = OrderCtx::new(combined.twists(), TermOrder::Eliminate { upper: r });
    let one = Polynomial::constant(1, field);
    let mut inputs: Vec<SVec> = images
        .iter()
        .enumerate()
        .map(|(j, img)| {
            let mut col = img.clone();
            col.extend((0..s).map(|k| if k == j { one.clone() } else { Polynomial::zero() }));
            from_column(&col, &ctx)
        })
        .collect();
    // the relation basis is already sorted for the combined order
    inputs.extend(target.groebner_basis()?.reducer().elems.iter().cloned());

    let mut engine = Engine::new(ctx, field, GbConfig::default());
    engine.run(&inputs)?;
    let kernel: Vec<SVec> = engine
        .basis
        .elems
        .iter()
        .filter(|v| v[0].comp as usize >= r)
        .map(|v| {
            v.iter()
                .map(|t| svec::STerm { comp: t.comp - r as u32, ..*t })
                .collect()
        })
        .collect();

    let gctx = OrderCtx::new(source.twists(), TermOrder::Top);
    let kept = Engine::new(gctx, field, GbConfig::default()).run(&kernel)?;
    Ok(kept.into_iter().map(|i| to_column(&kernel[i], s, 0, field)).collect())
}

/// Degrees of homogeneous columns; zero columns get degree 0.
fn column_degrees(ambient: &FreeModule, gens: &[Column]) -> Result<Vec<i64>> {
    Ok(check_columns(ambient, gens)?.into_iter().map(|d| d.unwrap_or(0)).collect())
}

/// First syzygies of `gens`, living in the free module with one basis
/// element per generator twisted by its degree.
pub fn syzygies(ambient: &FreeModule, gens: &[Column]) -> Result<(FreeModule, Vec<Column>)> {
    let source = FreeModule::new(ambient.ring().clone(), column_degrees(ambient, gens)?);
    let target = Presentation::free(ambient.clone());
    let syz = kernel_generators(&source, gens, &target)?;
    Ok((source, syz))
}

/// Kernel of a homogeneous map from a free module into a presented module.
#[derive(Debug, Clone)]
pub struct Kernel {
    /// Minimal generators, as elements of the source.
    pub generators: Vec<Column>,
    /// The kernel as an abstract module.
    pub module: Presentation,
}

pub fn kernel_of_map(source: &FreeModule, images: &[Column], target: &Presentation) -> Result<Kernel> {
    if source.ring() != target.ring() {
        return Err(Error::RingMismatch);
    }
    let generators = kernel_generators(source, images, target)?;
    let (gens_free, syz) = syzygies(source, &generators)?;
    Ok(Kernel { generators, module: Presentation::from_parts_unchecked(gens_free, syz) })
}

/// The submodule of `m` generated by the images of `gens`.
pub fn submodule_presentation(m: &Presentation, gens: &[Column]) -> Result<Presentation> {
    let degs = check_columns(m.ambient(), gens)?;
    let mut twists = Vec::new();
    let mut kept = Vec::new();
    for (g, d) in gens.iter().zip(degs) {
        if let Some(d) = d {
            twists.push(d);
            kept.push(g.clone());
        }
    }
    let source = FreeModule::new(m.ring().clone(), twists);
    let rels = kernel_generators(&source, &kept, m)?;
    Ok(Presentation::from_parts_unchecked(source, rels))
}

/// An isomorphic presentation with minimal generators and minimal relations:
/// relations are cut to a minimal generating set and every constant entry
/// is used to eliminate a generator/relation pair.
pub fn minimal_presentation(m: &Presentation) -> Result<Presentation> {
    let field = m.ring().field();
    let mut ambient = m.ambient().clone();
    let mut rels: Vec<Column> = m.relations().to_vec();
    loop {
        let keep = minimal_generating_subset(&ambient, &rels)?;
        rels = keep.into_iter().map(|j| rels[j].clone()).collect();
        let pivot = (0..ambient.rank()).find_map(|i| {
            rels.iter().position(|c| c[i].is_unit()).map(|j| (i, j))
        });
        let Some((row, col)) = pivot else {
            return Ok(Presentation::from_parts_unchecked(ambient, rels));
        };
        let pivot_col = rels.swap_remove(col);
        let inv = field.inv(pivot_col[row].constant_value().expect("unit"));
        for c in rels.iter_mut() {
            if c[row].is_zero() {
                continue;
            }
            let factor = c[row].scale(field.neg(inv), field);
            for (entry, p) in c.iter_mut().zip(&pivot_col) {
                *entry = entry.add(&factor.mul(p, field), field);
            }
            debug_assert!(c[row].is_zero());
        }
        for c in rels.iter_mut() {
            c.remove(row);
        }
        rels.retain(|c| c.iter().any(|p| !p.is_zero()));
        let mut twists = ambient.twists().to_vec();
        twists.remove(row);
        ambient = FreeModule::new(ambient.ring().clone(), twists);
    }
}

/// `(U : (x_1^k, ..., x_n^k))` for the relation module `U` of `m`, as
/// generators in the ambient of `m`.
fn colon_by_variable_powers(m: &Presentation, k: u32) -> Result<Vec<Column>> {
    let f = m.ambient();
    let ring = f.ring();
    let n = ring.num_vars();
    let r = f.rank();
    let mut twists = Vec::with_capacity(n * r);
    for _ in 0..n {
        twists.extend(f.twists().iter().map(|a| a - k as i64));
    }
    let target_free = FreeModule::new(ring.clone(), twists);
    let mut rels = Vec::new();
    for block in 0..n {
        for u in m.groebner_basis()?.generators() {
            let mut c = target_free.zero_column();
            c[block * r..(block + 1) * r].clone_from_slice(&u);
            rels.push(c);
        }
    }
    let target = Presentation::from_parts_unchecked(target_free, rels);
    let images: Vec<Column> = (0..r)
        .map(|e| {
            let mut c = target.ambient().zero_column();
            for v in 0..n {
                let mut mono = vec![0u32; n];
                mono[v] = k;
                c[v * r + e] = Polynomial::term(Monomial::from_exponents(&mono), 1);
            }
            c
        })
        .collect();
    kernel_generators(f, &images, &target)
}

/// Generators of the saturation `(U : R_+^∞)` of the relation module.
///
/// Iterates colons by `(x_1^k, ..., x_n^k)` for `k = 1, 2, 4, ...` until two
/// successive Gröbner bases agree.
pub fn saturation(m: &Presentation) -> Result<Vec<Column>> {
    let mut current = m.clone();
    let mut k = 1u32;
    loop {
        let next_rels = colon_by_variable_powers(&current, k)?;
        let next = Presentation::from_parts_unchecked(current.ambient().clone(), next_rels);
        if next.groebner_basis()? == current.groebner_basis()? {
            return Ok(current.groebner_basis()?.generators());
        }
        current = next;
        k = k.saturating_mul(2);
    }
}

/// `H^0_{R_+}(M) = (0 :_M R_+^∞)` as a module.
pub fn h0_submodule(m: &Presentation) -> Result<Presentation> {
    let sat = saturation(m)?;
    let gb = m.groebner_basis()?;
    let mut gens = Vec::new();
    for g in sat {
        if !gb.contains(&g)? {
            gens.push(g);
        }
    }
    submodule_presentation(m, &gens)
}

/// `M / H^0_{R_+}(M)`, presented over the same ambient.
pub fn quotient_by_h0(m: &Presentation) -> Result<Presentation> {
    Ok(Presentation::from_parts_unchecked(m.ambient().clone(), saturation(m)?))
}

#[cfg(test)]
mod tests;
