use std::cmp::Ordering;
use std::fmt;

pub const MAX_VARS: usize = 8;

/// A monomial in at most [`MAX_VARS`] variables. The derived order is
/// degree reverse lexicographic with `x_1 > x_2 > ... > x_n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    deg: u32,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(i: usize) -> Self {
        let mut m = Monomial::default();
        m.exps[i] = 1;
        m.deg = 1;
        m
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        assert!(exps.len() <= MAX_VARS, "too many variables");
        let mut m = Monomial::default();
        for (slot, &e) in m.exps.iter_mut().zip(exps) {
            *slot = u16::try_from(e).expect("exponent overflow");
            m.deg += e;
        }
        m
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg
    }

    #[inline]
    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    pub fn exponents(&self, n: usize) -> Vec<u32> {
        self.exps[..n].iter().map(|&e| e as u32).collect()
    }

    /// Index one past the last variable with a nonzero exponent.
    pub fn support_len(&self) -> usize {
        self.exps.iter().rposition(|&e| e != 0).map_or(0, |i| i + 1)
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for i in 0..MAX_VARS {
            m.exps[i] += other.exps[i];
        }
        m.deg += other.deg;
        m
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && (0..MAX_VARS).all(|i| self.exps[i] <= other.exps[i])
    }

    /// `self / other`, if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let mut m = *self;
        for i in 0..MAX_VARS {
            m.exps[i] -= other.exps[i];
        }
        m.deg -= other.deg;
        Some(m)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut m = Monomial::default();
        for i in 0..MAX_VARS {
            m.exps[i] = self.exps[i].max(other.exps[i]);
            m.deg += m.exps[i] as u32;
        }
        m
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut m = Monomial::default();
        for i in 0..MAX_VARS {
            m.exps[i] = self.exps[i].min(other.exps[i]);
            m.deg += m.exps[i] as u32;
        }
        m
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        (0..MAX_VARS).all(|i| self.exps[i] == 0 || other.exps[i] == 0)
    }

    /// `self` with the exponent of variable `i` reduced by `k` (floored at zero).
    pub fn strip(&self, i: usize, k: u32) -> Monomial {
        let mut m = *self;
        let drop = (m.exps[i] as u32).min(k);
        m.exps[i] -= drop as u16;
        m.deg -= drop;
        m
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.deg.cmp(&other.deg).then_with(|| {
            for i in (0..MAX_VARS).rev() {
                match self.exps[i].cmp(&other.exps[i]) {
                    Ordering::Equal => continue,
                    // smaller exponent in the last differing variable wins
                    ord => return ord.reverse(),
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.support_len().max(1);
        write!(f, "m{:?}", &self.exps[..n])
    }
}

/// All monomials of total degree `d` in `n` variables, in decreasing order.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; n];
    fn rec(i: usize, left: u32, exps: &mut [u32], out: &mut Vec<Monomial>) {
        let n = exps.len();
        if i + 1 == n {
            exps[i] = left;
            out.push(Monomial::from_exponents(exps));
            return;
        }
        for e in (0..=left).rev() {
            exps[i] = e;
            rec(i + 1, left - e, exps, out);
        }
    }
    if n == 0 {
        if d == 0 {
            out.push(Monomial::one());
        }
        return out;
    }
    rec(0, d, &mut exps, &mut out);
    out.sort_by(|a, b| b.cmp(a));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn degrevlex_in_two_vars() {
        // x^2 > xy > y^2 and degree dominates
        assert!(m(&[2, 0]) > m(&[1, 1]));
        assert!(m(&[1, 1]) > m(&[0, 2]));
        assert!(m(&[0, 3]) > m(&[2, 0]));
    }

    #[test]
    fn degrevlex_in_three_vars() {
        // xz < y^2 in degrevlex
        assert!(m(&[0, 2, 0]) > m(&[1, 0, 1]));
        assert!(m(&[1, 1, 0]) > m(&[0, 2, 0]));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert_eq!(monomials_of_degree(4, 3).len(), 20);
        assert_eq!(monomials_of_degree(2, 0), vec![Monomial::one()]);
        let ms = monomials_of_degree(3, 3);
        assert!(ms.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn divisibility() {
        assert!(m(&[1, 0]).divides(&m(&[2, 1])));
        assert!(!m(&[0, 2]).divides(&m(&[2, 1])));
        assert_eq!(m(&[2, 1]).div(&m(&[1, 1])), Some(m(&[1, 0])));
        assert_eq!(m(&[2, 1]).lcm(&m(&[1, 3])), m(&[2, 3]));
    }
}
