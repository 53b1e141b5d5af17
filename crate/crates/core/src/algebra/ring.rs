use std::fmt::Write;
use std::sync::Arc;

use super::field::FieldSpec;
use super::monomial::{Monomial, MAX_VARS};
use super::polynomial::Polynomial;
use crate::error::{Error, Result};

/// `K[x_1..x_n]` with the standard grading.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RingSpec {
    field: FieldSpec,
    var_names: Vec<String>,
}

/// Shared handle; rings are compared by value.
pub type Ring = Arc<RingSpec>;

impl RingSpec {
    pub fn new(field: FieldSpec, var_names: Vec<String>) -> Result<Ring> {
        if var_names.is_empty() {
            return Err(Error::InvalidRing("at least one variable is required".into()));
        }
        if var_names.len() > MAX_VARS {
            return Err(Error::TooManyVariables { got: var_names.len(), max: MAX_VARS });
        }
        for (i, name) in var_names.iter().enumerate() {
            let valid = name.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
                && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return Err(Error::InvalidRing(format!("bad variable name {name:?}")));
            }
            if var_names[..i].contains(name) {
                return Err(Error::InvalidRing(format!("duplicate variable {name}")));
            }
        }
        Ok(Arc::new(RingSpec { field, var_names }))
    }

    /// `n` variables over `F_32003`, named `x, y, z, w` (or `x1..xn` beyond four).
    pub fn standard(n: usize) -> Ring {
        Self::standard_over(FieldSpec::default(), n)
    }

    pub fn standard_over(field: FieldSpec, n: usize) -> Ring {
        let names: Vec<String> = if n <= 4 {
            ["x", "y", "z", "w"][..n].iter().map(|s| s.to_string()).collect()
        } else {
            (1..=n).map(|i| format!("x{i}")).collect()
        };
        Self::new(field, names).expect("standard ring")
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn num_vars(&self) -> usize {
        self.var_names.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.var_names
    }

    pub fn var(&self, i: usize) -> Polynomial {
        assert!(i < self.num_vars());
        Polynomial::term(Monomial::var(i), 1)
    }

    pub fn one(&self) -> Polynomial {
        Polynomial::constant(1, self.field)
    }

    /// Polynomial from `(exponents, integer coefficient)` pairs.
    pub fn poly(&self, terms: &[(&[u32], i64)]) -> Polynomial {
        Polynomial::from_terms(
            terms
                .iter()
                .map(|(e, c)| {
                    assert_eq!(e.len(), self.num_vars(), "exponent vector length");
                    (Monomial::from_exponents(e), self.field.from_i64(*c))
                })
                .collect(),
            self.field,
        )
    }

    /// `dim_K R_d`.
    pub fn dim_in_degree(&self, d: i64) -> u64 {
        if d < 0 {
            return 0;
        }
        // binom(d + n - 1, n - 1)
        let n = self.num_vars() as u64;
        let mut acc: u64 = 1;
        for k in 1..n {
            acc = acc * (d as u64 + k) / k;
        }
        acc
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for (i, name) in self.var_names.iter().enumerate() {
            match m.exponent(i) {
                0 => {}
                1 => parts.push(name.clone()),
                e => parts.push(format!("{name}^{e}")),
            }
        }
        parts.join("*")
    }

    /// Deterministic text form, parseable by the corpus reader.
    pub fn format_poly(&self, p: &Polynomial) -> String {
        if p.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (m, c)) in p.terms().iter().enumerate() {
            let c = self.field.to_signed(*c);
            let (sign, abs) = if c < 0 { ("-", -c) } else { ("+", c) };
            if k == 0 {
                if sign == "-" {
                    out.push('-');
                }
            } else {
                let _ = write!(out, " {sign} ");
            }
            if m.is_one() {
                let _ = write!(out, "{abs}");
            } else if abs == 1 {
                out.push_str(&self.format_monomial(m));
            } else {
                let _ = write!(out, "{abs}*{}", self.format_monomial(m));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formatting() {
        let r = RingSpec::standard(3);
        let p = r.poly(&[(&[1, 1, 0], 1), (&[0, 0, 2], -3)]);
        assert_eq!(r.format_poly(&p), "x*y - 3*z^2");
        assert_eq!(r.format_poly(&r.one()), "1");
        assert_eq!(r.format_poly(&Polynomial::zero()), "0");
    }

    #[test]
    fn validation() {
        let f = FieldSpec::default();
        assert!(RingSpec::new(f, vec![]).is_err());
        assert!(RingSpec::new(f, vec!["x".into(), "x".into()]).is_err());
        assert!(RingSpec::new(f, vec!["1x".into()]).is_err());
        assert_eq!(RingSpec::standard(3).dim_in_degree(2), 6);
        assert_eq!(RingSpec::standard(2).dim_in_degree(-1), 0);
    }
}
