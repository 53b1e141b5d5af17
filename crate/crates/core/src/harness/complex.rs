//! Finite complexes `0 → C_L → ... → C_0 → 0` of presented modules, their
//! boundaries, cycles and homology.

use crate::algebra::{Column, FreeModule, Polynomial, Presentation};
use crate::error::{Error, Result};
use crate::groebner::{kernel_of_map, submodule_presentation};
use crate::homological::{free_resolution, homology};

#[derive(Debug, Clone)]
pub struct ExplicitComplex {
    /// `C_0, ..., C_L`.
    pub modules: Vec<Presentation>,
    /// `maps[i - 1]` lists the images in `C_{i-1}` of the generators of `C_i`.
    pub maps: Vec<Vec<Column>>,
}

/// `Σ_k v_k · images[k]` in `target`.
pub(crate) fn apply(images: &[Column], v: &Column, target: &FreeModule) -> Column {
    let field = target.ring().field();
    let mut out = target.zero_column();
    for (vk, img) in v.iter().zip(images) {
        if vk.is_zero() {
            continue;
        }
        for (o, e) in out.iter_mut().zip(img) {
            if !e.is_zero() {
                *o = o.add(&vk.mul(e, field), field);
            }
        }
    }
    out
}

fn block_sum(blocks: &[Presentation], ambient: FreeModule) -> Presentation {
    let mut rels = Vec::new();
    let mut offset = 0;
    for b in blocks {
        for rel in b.relations() {
            let mut col = ambient.zero_column();
            col[offset..offset + rel.len()].clone_from_slice(rel);
            rels.push(col);
        }
        offset += b.ambient().rank();
    }
    Presentation::new(ambient, rels).expect("block relations stay homogeneous")
}

impl ExplicitComplex {
    pub fn length(&self) -> usize {
        self.modules.len().saturating_sub(1)
    }

    /// Checks that every map is well defined and that composites vanish.
    pub fn validate(&self) -> Result<()> {
        if self.maps.len() != self.length() {
            return Err(Error::NotAComplex(format!("{} maps for {} modules", self.maps.len(), self.modules.len())));
        }
        for i in 1..=self.length() {
            let (src, dst) = (&self.modules[i], &self.modules[i - 1]);
            let images = &self.maps[i - 1];
            if images.len() != src.ambient().rank() {
                return Err(Error::NotAComplex(format!("d_{i} has {} images", images.len())));
            }
            for (k, img) in images.iter().enumerate() {
                let homogeneous = match dst.ambient().column_degree(img) {
                    Ok(None) => true,
                    Ok(Some(d)) => d == src.ambient().twists()[k],
                    Err(_) => false,
                };
                if !homogeneous {
                    return Err(Error::NotAComplex(format!("d_{i} is not homogeneous of degree 0 on generator {k}")));
                }
            }
            for rel in src.relations() {
                if !dst.is_zero_element(&apply(images, rel, dst.ambient()))? {
                    return Err(Error::NotAComplex(format!("d_{i} does not respect the relations of C_{i}")));
                }
            }
            if i >= 2 {
                let below = &self.maps[i - 2];
                let target = &self.modules[i - 2];
                for img in images {
                    if !target.is_zero_element(&apply(below, img, target.ambient()))? {
                        return Err(Error::NotAComplex(format!("d_{} ∘ d_{i} ≠ 0", i - 1)));
                    }
                }
            }
        }
        Ok(())
    }

    /// `H_i`; zero outside `0..=L`.
    pub fn homology(&self, i: usize) -> Result<Presentation> {
        let Some(c) = self.modules.get(i) else {
            return Ok(Presentation::zero(self.modules[0].ring().clone()));
        };
        let out = if i == 0 { None } else { Some((self.maps[i - 1].as_slice(), &self.modules[i - 1])) };
        let incoming = self.maps.get(i).map_or(&[][..], |v| v.as_slice());
        homology(c.ambient(), c.relations(), out, incoming)
    }

    /// `B_i = im(d_{i+1}) ⊆ C_i`.
    pub fn boundaries(&self, i: usize) -> Result<Presentation> {
        match self.maps.get(i) {
            Some(images) => submodule_presentation(&self.modules[i], images),
            None => Ok(Presentation::zero(self.modules[0].ring().clone())),
        }
    }

    /// `Z_i = ker(d_i) ⊆ C_i`, with `Z_0 = C_0`.
    pub fn cycles(&self, i: usize) -> Result<Presentation> {
        let c = &self.modules[i];
        if i == 0 {
            return Ok(c.clone());
        }
        let k = kernel_of_map(c.ambient(), &self.maps[i - 1], &self.modules[i - 1])?;
        submodule_presentation(c, &k.generators)
    }

    /// The Koszul complex on the variables `vars` tensored with `m`:
    /// `C_i = ⊕_{|T| = i} M(-i)`.
    pub fn koszul(m: &Presentation, vars: &[usize]) -> Self {
        let ring = m.ring();
        let field = ring.field();
        let s = vars.len();
        let subsets: Vec<Vec<Vec<usize>>> = (0..=s).map(|i| subsets_of_size(s, i)).collect();
        let mut modules = Vec::with_capacity(s + 1);
        for (i, subs) in subsets.iter().enumerate() {
            let blocks: Vec<Presentation> = subs.iter().map(|_| m.twist(i as i64)).collect();
            let twists = blocks.iter().flat_map(|b| b.ambient().twists().to_vec()).collect();
            modules.push(block_sum(&blocks, FreeModule::new(ring.clone(), twists)));
        }
        let r = m.ambient().rank();
        let mut maps = Vec::with_capacity(s);
        for i in 1..=s {
            let target = modules[i - 1].ambient();
            let mut images = Vec::new();
            for t in &subsets[i] {
                for g in 0..r {
                    let mut col = target.zero_column();
                    for (pos, &drop) in t.iter().enumerate() {
                        let rest: Vec<usize> = t.iter().copied().filter(|&x| x != drop).collect();
                        let idx = subsets[i - 1].iter().position(|u| *u == rest).expect("face");
                        let x: Polynomial = ring.var(vars[drop]);
                        col[idx * r + g] = if pos % 2 == 0 { x } else { x.neg(field) };
                    }
                    images.push(col);
                }
            }
            maps.push(images);
        }
        ExplicitComplex { modules, maps }
    }

    /// `F ⊗ N` for the minimal free resolution `F` of `m`; `H_0 = M ⊗ N`.
    pub fn resolution_tensor(m: &Presentation, n: &Presentation) -> Result<Self> {
        if m.ring() != n.ring() {
            return Err(Error::RingMismatch);
        }
        let res = free_resolution(m, true)?;
        let len = res.length().unwrap_or(0);
        let g = n.ambient().rank();
        let tensor_free = |f: &FreeModule| {
            let twists = f.twists().iter().flat_map(|a| n.ambient().twists().iter().map(move |b| a + b)).collect();
            FreeModule::new(f.ring().clone(), twists)
        };
        let mut modules = Vec::with_capacity(len + 1);
        for k in 0..=len {
            let f = res.module(k);
            let blocks: Vec<Presentation> = f.twists().iter().map(|&a| n.twist(a)).collect();
            modules.push(block_sum(&blocks, tensor_free(&f)));
        }
        let mut maps = Vec::with_capacity(len);
        for k in 1..=len {
            let target = modules[k - 1].ambient();
            let mut images = Vec::new();
            for dcol in res.differential(k) {
                for b in 0..g {
                    let mut col = target.zero_column();
                    for (c, e) in dcol.iter().enumerate() {
                        if !e.is_zero() {
                            col[c * g + b] = e.clone();
                        }
                    }
                    images.push(col);
                }
            }
            maps.push(images);
        }
        Ok(ExplicitComplex { modules, maps })
    }
}

fn subsets_of_size(s: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, s: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..s {
            cur.push(i);
            go(i + 1, s, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, s, k, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hilbert::hilbert_series;
    use crate::testing::{quotient, ring};

    #[test]
    fn koszul_on_two_variables_resolves_the_residue_field() {
        let r = ring(2);
        let c = ExplicitComplex::koszul(&Presentation::free(FreeModule::standard(r.clone(), 1)), &[0, 1]);
        c.validate().unwrap();
        assert_eq!(c.modules.iter().map(|m| m.ambient().rank()).collect::<Vec<_>>(), vec![1, 2, 1]);
        let h0 = c.homology(0).unwrap();
        assert_eq!(hilbert_series(&h0).unwrap().numerator().eval_at_one(), 1);
        assert_eq!(hilbert_series(&h0).unwrap().dim(), 0);
        assert!(c.homology(1).unwrap().is_zero_module().unwrap());
        assert!(c.homology(2).unwrap().is_zero_module().unwrap());
    }

    #[test]
    fn resolution_tensor_homology_is_tor() {
        let r = ring(2);
        let m = quotient(&r, &["x"]);
        let c = ExplicitComplex::resolution_tensor(&m, &m).unwrap();
        c.validate().unwrap();
        let h1 = c.homology(1).unwrap();
        let tor1 = crate::homological::tor(&m, &m, 1).unwrap();
        assert_eq!(hilbert_series(&h1).unwrap(), hilbert_series(&tor1).unwrap());
    }

    #[test]
    fn broken_complex_is_rejected() {
        let r = ring(2);
        let mut c = ExplicitComplex::koszul(&Presentation::free(FreeModule::standard(r.clone(), 1)), &[0, 1]);
        c.maps[1][0][0] = r.var(0);
        c.maps[1][0][1] = r.var(1);
        assert!(matches!(c.validate(), Err(Error::NotAComplex(_))));
    }
}
