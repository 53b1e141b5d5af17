use super::field::{Coeff, FieldSpec};
use super::monomial::Monomial;

/// Sparse polynomial; terms sorted by decreasing monomial, no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: Vec<(Monomial, Coeff)>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn constant(c: i64, field: FieldSpec) -> Self {
        Self::term(Monomial::one(), field.from_i64(c))
    }

    pub fn term(m: Monomial, c: Coeff) -> Self {
        if c == 0 {
            Polynomial::zero()
        } else {
            Polynomial { terms: vec![(m, c)] }
        }
    }

    /// Normalizes arbitrary terms: combines duplicates, drops zeros, sorts.
    pub fn from_terms(mut terms: Vec<(Monomial, Coeff)>, field: FieldSpec) -> Self {
        terms.sort_by_key(|t| std::cmp::Reverse(t.0));
        let mut out: Vec<(Monomial, Coeff)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some(last) if last.0 == m => last.1 = field.add(last.1, c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|t| t.1 != 0);
        Polynomial { terms: out }
    }

    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&(Monomial, Coeff)> {
        self.terms.first()
    }

    /// Degree of the leading term.
    pub fn degree(&self) -> Option<u32> {
        self.terms.first().map(|t| t.0.degree())
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => self.terms.iter().all(|t| t.0.degree() == m.degree()),
        }
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    /// Number of variables actually referenced (max support index).
    pub fn support_len(&self) -> usize {
        self.terms.iter().map(|t| t.0.support_len()).max().unwrap_or(0)
    }

    pub fn add(&self, other: &Polynomial, field: FieldSpec) -> Polynomial {
        self.add_scaled(other, 1, &Monomial::one(), field)
    }

    pub fn sub(&self, other: &Polynomial, field: FieldSpec) -> Polynomial {
        self.add_scaled(other, field.neg(1), &Monomial::one(), field)
    }

    pub fn neg(&self, field: FieldSpec) -> Polynomial {
        self.scale(field.neg(1), field)
    }

    pub fn scale(&self, c: Coeff, field: FieldSpec) -> Polynomial {
        if c == 0 {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|&(m, a)| (m, field.mul(a, c))).collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: Coeff, field: FieldSpec) -> Polynomial {
        if c == 0 {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|&(t, a)| (t.mul(m), field.mul(a, c))).collect(),
        }
    }

    /// `self + c * m * other`, by a sorted merge.
    pub fn add_scaled(&self, other: &Polynomial, c: Coeff, m: &Monomial, field: FieldSpec) -> Polynomial {
        if c == 0 || other.is_zero() {
            return self.clone();
        }
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let bt = b.get(j).map(|&(t, k)| (t.mul(m), field.mul(k, c)));
            match (a.get(i), bt) {
                (Some(&x), None) => {
                    out.push(x);
                    i += 1;
                }
                (None, Some(y)) => {
                    out.push(y);
                    j += 1;
                }
                (Some(&x), Some(y)) => match x.0.cmp(&y.0) {
                    std::cmp::Ordering::Greater => {
                        out.push(x);
                        i += 1;
                    }
                    std::cmp::Ordering::Less => {
                        out.push(y);
                        j += 1;
                    }
                    std::cmp::Ordering::Equal => {
                        let s = field.add(x.1, y.1);
                        if s != 0 {
                            out.push((x.0, s));
                        }
                        i += 1;
                        j += 1;
                    }
                },
                (None, None) => unreachable!(),
            }
        }
        Polynomial { terms: out }
    }

    pub fn mul(&self, other: &Polynomial, field: FieldSpec) -> Polynomial {
        let (small, big) = if self.terms.len() <= other.terms.len() { (self, other) } else { (other, self) };
        let mut acc = Polynomial::zero();
        for (m, c) in &small.terms {
            acc = acc.add_scaled(big, *c, m, field);
        }
        acc
    }

    pub fn pow(&self, k: u32, field: FieldSpec) -> Polynomial {
        let mut acc = Polynomial::constant(1, field);
        for _ in 0..k {
            acc = acc.mul(self, field);
        }
        acc
    }

    /// Coefficient of `m`.
    pub fn coefficient(&self, m: &Monomial) -> Coeff {
        self.terms
            .binary_search_by(|t| m.cmp(&t.0))
            .map(|i| self.terms[i].1)
            .unwrap_or(0)
    }

    /// Constant term, if the polynomial is constant.
    pub fn constant_value(&self) -> Option<Coeff> {
        match self.terms.as_slice() {
            [] => Some(0),
            [(m, c)] if m.is_one() => Some(*c),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f() -> FieldSpec {
        FieldSpec::default()
    }

    fn p(terms: &[(&[u32], i64)]) -> Polynomial {
        Polynomial::from_terms(
            terms.iter().map(|(e, c)| (Monomial::from_exponents(e), f().from_i64(*c))).collect(),
            f(),
        )
    }

    #[test]
    fn arithmetic() {
        let a = p(&[(&[1, 0], 1), (&[0, 1], 1)]);
        let b = p(&[(&[1, 0], 1), (&[0, 1], -1)]);
        assert_eq!(a.mul(&b, f()), p(&[(&[2, 0], 1), (&[0, 2], -1)]));
        assert!(a.sub(&a, f()).is_zero());
        assert_eq!(a.pow(2, f()).terms().len(), 3);
        assert_eq!(a.coefficient(&Monomial::from_exponents(&[0, 1])), 1);
    }

    #[test]
    fn normalization() {
        let q = p(&[(&[0, 1], 2), (&[1, 0], 3), (&[0, 1], -2)]);
        assert_eq!(q, p(&[(&[1, 0], 3)]));
        assert!(q.is_homogeneous());
        assert!(!p(&[(&[2, 0], 1), (&[0, 1], 1)]).is_homogeneous());
    }
}
