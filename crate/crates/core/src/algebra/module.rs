use std::sync::{Arc, OnceLock};

use super::polynomial::Polynomial;
use super::ring::Ring;
use crate::error::{Error, Result};
use crate::groebner::GroebnerBasis;

/// An element of a free module: one polynomial per basis element.
pub type Column = Vec<Polynomial>;

/// `⊕_k R(-a_k)`: basis element `e_k` sits in degree `twists[k]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FreeModule {
    ring: Ring,
    twists: Vec<i64>,
}

impl FreeModule {
    pub fn new(ring: Ring, twists: Vec<i64>) -> Self {
        FreeModule { ring, twists }
    }

    /// `R^rank` generated in degree 0.
    pub fn standard(ring: Ring, rank: usize) -> Self {
        FreeModule { ring, twists: vec![0; rank] }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    pub fn twists(&self) -> &[i64] {
        &self.twists
    }

    pub fn zero_column(&self) -> Column {
        vec![Polynomial::zero(); self.rank()]
    }

    pub fn basis_column(&self, k: usize) -> Column {
        let mut c = self.zero_column();
        c[k] = self.ring.one();
        c
    }

    pub fn dim_in_degree(&self, d: i64) -> u64 {
        self.twists.iter().map(|a| self.ring.dim_in_degree(d - a)).sum()
    }

    pub fn shifted(&self, a: i64) -> FreeModule {
        FreeModule { ring: self.ring.clone(), twists: self.twists.iter().map(|t| t + a).collect() }
    }

    /// Direct sum `self ⊕ other`.
    pub fn direct_sum(&self, other: &FreeModule) -> FreeModule {
        let mut twists = self.twists.clone();
        twists.extend_from_slice(&other.twists);
        FreeModule { ring: self.ring.clone(), twists }
    }

    /// Degree of a homogeneous column (`None` for zero). Errors name the
    /// two conflicting degrees.
    pub fn column_degree(&self, col: &Column) -> std::result::Result<Option<i64>, (i64, i64)> {
        let mut deg = None;
        for (k, p) in col.iter().enumerate() {
            for (m, _) in p.terms() {
                let d = m.degree() as i64 + self.twists[k];
                match deg {
                    None => deg = Some(d),
                    Some(e) if e != d => return Err((e, d)),
                    _ => {}
                }
            }
        }
        Ok(deg)
    }

    pub(crate) fn check_column(&self, index: usize, col: &Column) -> Result<Option<i64>> {
        if col.len() != self.rank() {
            return Err(Error::AmbientMismatch(format!(
                "column {index} has {} entries, ambient rank is {}",
                col.len(),
                self.rank()
            )));
        }
        if col.iter().any(|p| p.support_len() > self.ring.num_vars()) {
            return Err(Error::RingMismatch);
        }
        self.column_degree(col)
            .map_err(|(first, second)| Error::NonHomogeneousRelation { column: index, first, second })
    }
}

/// `M = F_0 / image(A)` for a homogeneous matrix `A` given by its columns.
#[derive(Debug, Clone)]
pub struct Presentation {
    ambient: FreeModule,
    relations: Vec<Column>,
    pub(crate) gb: OnceLock<Arc<GroebnerBasis>>,
}

impl PartialEq for Presentation {
    /// Structural equality of the data (not module isomorphism).
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.relations == other.relations
    }
}

impl Presentation {
    pub fn new(ambient: FreeModule, relations: Vec<Column>) -> Result<Self> {
        for (i, col) in relations.iter().enumerate() {
            ambient.check_column(i, col)?;
        }
        Ok(Self::from_parts_unchecked(ambient, relations))
    }

    pub(crate) fn from_parts_unchecked(ambient: FreeModule, mut relations: Vec<Column>) -> Self {
        relations.retain(|c| c.iter().any(|p| !p.is_zero()));
        Presentation { ambient, relations, gb: OnceLock::new() }
    }

    pub fn free(ambient: FreeModule) -> Self {
        Self::from_parts_unchecked(ambient, Vec::new())
    }

    pub fn zero(ring: Ring) -> Self {
        Self::free(FreeModule::new(ring, Vec::new()))
    }

    /// `R/I` for homogeneous generators of `I`.
    pub fn cyclic(ring: Ring, gens: Vec<Polynomial>) -> Result<Self> {
        let ambient = FreeModule::standard(ring, 1);
        Self::new(ambient, gens.into_iter().map(|g| vec![g]).collect())
    }

    pub fn ambient(&self) -> &FreeModule {
        &self.ambient
    }

    pub fn ring(&self) -> &Ring {
        self.ambient.ring()
    }

    pub fn relations(&self) -> &[Column] {
        &self.relations
    }

    /// `M(-a)`: every generator moves up by `a`, so `M(-a)_i = M_{i-a}`.
    pub fn twist(&self, a: i64) -> Presentation {
        Self::from_parts_unchecked(self.ambient.shifted(a), self.relations.clone())
    }

    /// The same ambient with extra relations.
    pub fn with_relations(&self, extra: impl IntoIterator<Item = Column>) -> Presentation {
        let mut rels = self.relations.clone();
        rels.extend(extra);
        Self::from_parts_unchecked(self.ambient.clone(), rels)
    }
}

pub fn make_presentation(ambient: FreeModule, relations: Vec<Column>) -> Result<Presentation> {
    Presentation::new(ambient, relations)
}

pub fn twist(m: &Presentation, a: i64) -> Presentation {
    m.twist(a)
}

pub fn ideal_to_cyclic_module(ring: Ring, gens: Vec<Polynomial>) -> Result<Presentation> {
    Presentation::cyclic(ring, gens)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::RingSpec;

    #[test]
    fn rejects_mixed_degrees() {
        let r = RingSpec::standard(2);
        let bad = r.poly(&[(&[2, 0], 1), (&[0, 1], 1)]);
        let err = ideal_to_cyclic_module(r.clone(), vec![bad]).unwrap_err();
        assert_eq!(err, Error::NonHomogeneousRelation { column: 0, first: 2, second: 1 });
    }

    #[test]
    fn rejects_foreign_variables() {
        let r2 = RingSpec::standard(2);
        let r3 = RingSpec::standard(3);
        let z = r3.var(2);
        assert_eq!(ideal_to_cyclic_module(r2, vec![z]).unwrap_err(), Error::RingMismatch);
    }

    #[test]
    fn twisted_column_degree() {
        let r = RingSpec::standard(2);
        let f = FreeModule::new(r.clone(), vec![0, 1]);
        assert_eq!(f.column_degree(&vec![r.poly(&[(&[2, 0], 1)]), r.var(1)]), Ok(Some(2)));
        assert_eq!(f.dim_in_degree(1), 2 + 1);
        let m = Presentation::zero(r);
        assert_eq!(m.ambient().rank(), 0);
    }
}
