use std::cmp::Ordering;

use crate::algebra::Monomial;

/// Degree-compatible module orders.
///
/// Terms `m e_k` are compared by total degree `deg m + a_k` first, then by
/// block (only for `Eliminate`), then degrevlex on `m`, then by position with
/// lower index winning.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum TermOrder {
    /// Degrevlex, term over position.
    #[default]
    Top,
    /// Components `0..upper` dominate the rest within each total degree.
    /// Used to eliminate the upper block when computing kernels.
    Eliminate { upper: usize },
}

#[derive(Debug, Clone)]
pub(crate) struct OrderCtx {
    twists: Vec<i64>,
    upper: usize,
}

impl OrderCtx {
    pub(crate) fn new(twists: &[i64], order: TermOrder) -> Self {
        let upper = match order {
            TermOrder::Top => 0,
            TermOrder::Eliminate { upper } => upper,
        };
        OrderCtx { twists: twists.to_vec(), upper }
    }

    #[inline]
    pub(crate) fn total_degree(&self, m: &Monomial, comp: u32) -> i64 {
        m.degree() as i64 + self.twists[comp as usize]
    }

    #[inline]
    pub(crate) fn cmp(&self, a: (&Monomial, u32), b: (&Monomial, u32)) -> Ordering {
        self.total_degree(a.0, a.1)
            .cmp(&self.total_degree(b.0, b.1))
            .then_with(|| {
                let ua = (a.1 as usize) < self.upper;
                let ub = (b.1 as usize) < self.upper;
                ua.cmp(&ub)
            })
            .then_with(|| a.0.cmp(b.0))
            .then_with(|| b.1.cmp(&a.1))
    }

    pub(crate) fn twists(&self) -> &[i64] {
        &self.twists
    }
}
