//! Sparse module vectors sorted by a module order.

use std::cmp::Ordering;

use super::order::OrderCtx;
use crate::algebra::{Coeff, Column, FieldSpec, Monomial, Polynomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct STerm {
    pub mono: Monomial,
    pub comp: u32,
    pub coef: Coeff,
}

pub(crate) type SVec = Vec<STerm>;

pub(crate) fn from_column(col: &Column, ctx: &OrderCtx) -> SVec {
    from_column_offset(col, 0, ctx)
}

/// Column placed at components `offset..offset + col.len()`.
pub(crate) fn from_column_offset(col: &Column, offset: usize, ctx: &OrderCtx) -> SVec {
    let mut v: SVec = col
        .iter()
        .enumerate()
        .flat_map(|(k, p)| {
            p.terms()
                .iter()
                .map(move |&(mono, coef)| STerm { mono, comp: (k + offset) as u32, coef })
        })
        .collect();
    v.sort_by(|a, b| ctx.cmp((&b.mono, b.comp), (&a.mono, a.comp)));
    v
}

pub(crate) fn to_column(v: &[STerm], rank: usize, offset: usize, field: FieldSpec) -> Column {
    let mut buckets: Vec<Vec<(Monomial, Coeff)>> = vec![Vec::new(); rank];
    for t in v {
        buckets[t.comp as usize - offset].push((t.mono, t.coef));
    }
    buckets.into_iter().map(|terms| Polynomial::from_terms(terms, field)).collect()
}

/// `v[..start] ++ (v[start..] + c * m * b)`.
pub(crate) fn add_scaled_from(
    v: &[STerm],
    start: usize,
    c: Coeff,
    m: &Monomial,
    b: &[STerm],
    ctx: &OrderCtx,
    field: FieldSpec,
) -> SVec {
    let mut out = Vec::with_capacity(v.len() + b.len());
    out.extend_from_slice(&v[..start]);
    let (mut i, mut j) = (start, 0);
    let scaled = |t: &STerm| STerm { mono: t.mono.mul(m), comp: t.comp, coef: field.mul(t.coef, c) };
    while i < v.len() && j < b.len() {
        let y = scaled(&b[j]);
        let x = v[i];
        match ctx.cmp((&x.mono, x.comp), (&y.mono, y.comp)) {
            Ordering::Greater => {
                out.push(x);
                i += 1;
            }
            Ordering::Less => {
                out.push(y);
                j += 1;
            }
            Ordering::Equal => {
                let s = field.add(x.coef, y.coef);
                if s != 0 {
                    out.push(STerm { coef: s, ..x });
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&v[i..]);
    out.extend(b[j..].iter().map(scaled));
    out
}

pub(crate) fn make_monic(v: &mut SVec, field: FieldSpec) {
    if let Some(lead) = v.first() {
        if lead.coef != 1 {
            let inv = field.inv(lead.coef);
            for t in v.iter_mut() {
                t.coef = field.mul(t.coef, inv);
            }
        }
    }
}
