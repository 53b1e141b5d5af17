//! Tensor products, Tor, Hom and Ext from a minimal free resolution.

use super::resolution::{free_resolution, FreeResolution};
use crate::algebra::{Column, FreeModule, Polynomial, Presentation};
use crate::error::{Error, Result};
use crate::groebner::{kernel_generators, minimal_presentation, submodule_presentation};

fn same_ring(m: &Presentation, n: &Presentation) -> Result<()> {
    if m.ring() != n.ring() {
        return Err(Error::RingMismatch);
    }
    Ok(())
}

/// `H = ker(C → C_out) / im(C_in → C)` where `C` is presented on `ambient`
/// with relations `rels`. `out` gives the images of the ambient basis in
/// the target presentation; `None` means the zero map.
pub fn homology(
    ambient: &FreeModule,
    rels: &[Column],
    out: Option<(&[Column], &Presentation)>,
    incoming: &[Column],
) -> Result<Presentation> {
    let cycles = match out {
        Some((images, target)) => kernel_generators(ambient, images, target)?,
        None => (0..ambient.rank()).map(|k| ambient.basis_column(k)).collect(),
    };
    let mut quotient_rels = rels.to_vec();
    quotient_rels.extend(incoming.iter().cloned());
    let quotient = Presentation::from_parts_unchecked(ambient.clone(), quotient_rels);
    minimal_presentation(&submodule_presentation(&quotient, &cycles)?)
}

/// Index of `e_i ⊗ g_j` in `F ⊗ G`.
fn pair_index(i: usize, j: usize, rank_g: usize) -> usize {
    i * rank_g + j
}

fn tensor_free(f: &FreeModule, g: &FreeModule) -> FreeModule {
    let twists = f.twists().iter().flat_map(|a| g.twists().iter().map(move |b| a + b)).collect();
    FreeModule::new(f.ring().clone(), twists)
}

/// `M ⊗ N` presented on `F_0(M) ⊗ F_0(N)`.
pub fn tensor_product(m: &Presentation, n: &Presentation) -> Result<Presentation> {
    same_ring(m, n)?;
    let (fm, fn_) = (m.ambient(), n.ambient());
    let ambient = tensor_free(fm, fn_);
    let mut rels = Vec::new();
    for rel in m.relations() {
        for j in 0..fn_.rank() {
            let mut c = ambient.zero_column();
            for (i, p) in rel.iter().enumerate() {
                c[pair_index(i, j, fn_.rank())] = p.clone();
            }
            rels.push(c);
        }
    }
    for i in 0..fm.rank() {
        for rel in n.relations() {
            let mut c = ambient.zero_column();
            for (j, p) in rel.iter().enumerate() {
                c[pair_index(i, j, fn_.rank())] = p.clone();
            }
            rels.push(c);
        }
    }
    Ok(Presentation::from_parts_unchecked(ambient, rels))
}

/// `F_k ⊗ N` and the images of its basis under `d_k ⊗ 1`.
fn tensored_term(res: &FreeResolution, n: &Presentation, k: usize) -> Presentation {
    let f = res.module(k);
    let g = n.ambient();
    let ambient = tensor_free(&f, g);
    let mut rels = Vec::new();
    for i in 0..f.rank() {
        for rel in n.relations() {
            let mut c = ambient.zero_column();
            for (j, p) in rel.iter().enumerate() {
                c[pair_index(i, j, g.rank())] = p.clone();
            }
            rels.push(c);
        }
    }
    Presentation::from_parts_unchecked(ambient, rels)
}

fn tensored_map(res: &FreeResolution, n: &Presentation, k: usize) -> Vec<Column> {
    let g = n.ambient();
    let target = tensor_free(&res.module(k - 1), g);
    let d = res.differential(k);
    let mut out = Vec::new();
    for col in d {
        for j in 0..g.rank() {
            let mut c = target.zero_column();
            for (r, p) in col.iter().enumerate() {
                c[pair_index(r, j, g.rank())] = p.clone();
            }
            out.push(c);
        }
    }
    out
}

/// `Tor_i(M, N)` as the homology of `F ⊗ N` for the minimal resolution `F` of `M`.
pub fn tor(m: &Presentation, n: &Presentation, i: usize) -> Result<Presentation> {
    same_ring(m, n)?;
    tor_with(&free_resolution(m, true)?, n, i)
}

/// `Tor_i` from a precomputed resolution of the first argument.
pub fn tor_with(res: &FreeResolution, n: &Presentation, i: usize) -> Result<Presentation> {
    let mid = tensored_term(res, n, i);
    let incoming = tensored_map(res, n, i + 1);
    if i == 0 {
        return homology(mid.ambient(), mid.relations(), None, &incoming);
    }
    let target = tensored_term(res, n, i - 1);
    let images = tensored_map(res, n, i);
    homology(mid.ambient(), mid.relations(), Some((&images, &target)), &incoming)
}

/// `Hom(F_k, N)`: one copy of `F_0(N)` per basis element `e_c` of `F_k`,
/// twisted by `-deg e_c`, with the relations of `N` in every copy.
fn hom_term(res: &FreeResolution, n: &Presentation, k: usize) -> Presentation {
    let f = res.module(k);
    let g = n.ambient();
    let twists = f.twists().iter().flat_map(|b| g.twists().iter().map(move |t| t - b)).collect();
    let ambient = FreeModule::new(g.ring().clone(), twists);
    let mut rels = Vec::new();
    for c in 0..f.rank() {
        for rel in n.relations() {
            let mut col = ambient.zero_column();
            for (j, p) in rel.iter().enumerate() {
                col[pair_index(c, j, g.rank())] = p.clone();
            }
            rels.push(col);
        }
    }
    Presentation::from_parts_unchecked(ambient, rels)
}

/// `d_k^* : Hom(F_{k-1}, N) → Hom(F_k, N)`, `φ ↦ φ ∘ d_k`, by images of the basis.
fn hom_map(res: &FreeResolution, n: &Presentation, k: usize) -> Vec<Column> {
    let g = n.ambient();
    let rows = res.module(k - 1).rank();
    let f = res.module(k);
    let target_rank = f.rank() * g.rank();
    let d = res.differential(k);
    let mut out = Vec::with_capacity(rows * g.rank());
    for r in 0..rows {
        for j in 0..g.rank() {
            let mut col = vec![Polynomial::zero(); target_rank];
            for (c, dc) in d.iter().enumerate() {
                col[pair_index(c, j, g.rank())] = dc[r].clone();
            }
            out.push(col);
        }
    }
    out
}

/// `Ext^i(M, N)` as the cohomology of `Hom(F, N)`.
pub fn ext_module(m: &Presentation, n: &Presentation, i: usize) -> Result<Presentation> {
    same_ring(m, n)?;
    ext_with(&free_resolution(m, true)?, n, i)
}

/// `Ext^i` from a precomputed resolution of the first argument.
pub fn ext_with(res: &FreeResolution, n: &Presentation, i: usize) -> Result<Presentation> {
    let mid = hom_term(res, n, i);
    let next = hom_term(res, n, i + 1);
    let out = hom_map(res, n, i + 1);
    let incoming = if i == 0 { Vec::new() } else { hom_map(res, n, i) };
    if next.ambient().rank() == 0 {
        return homology(mid.ambient(), mid.relations(), None, &incoming);
    }
    homology(mid.ambient(), mid.relations(), Some((&out, &next)), &incoming)
}

/// `Hom(M, N) = Ext^0(M, N)`.
pub fn hom_module(m: &Presentation, n: &Presentation) -> Result<Presentation> {
    ext_module(m, n, 0)
}
