//! Integers extended by a bottom element.
//!
//! Regularities, postulation numbers and top degrees of vanishing modules
//! are `NEG_INFINITY`; maxima skip them and sums absorb into them.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Sub};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ExtInt {
    NegInf,
    Finite(i64),
}

pub use ExtInt::NegInf as NEG_INFINITY;

impl ExtInt {
    pub fn finite(self) -> Option<i64> {
        match self {
            ExtInt::NegInf => None,
            ExtInt::Finite(v) => Some(v),
        }
    }

    pub fn is_neg_inf(self) -> bool {
        matches!(self, ExtInt::NegInf)
    }

    pub fn max_of<I: IntoIterator<Item = ExtInt>>(it: I) -> ExtInt {
        it.into_iter().fold(ExtInt::NegInf, Ord::max)
    }
}

impl From<i64> for ExtInt {
    fn from(v: i64) -> Self {
        ExtInt::Finite(v)
    }
}

impl PartialOrd for ExtInt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtInt {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (ExtInt::NegInf, ExtInt::NegInf) => Ordering::Equal,
            (ExtInt::NegInf, _) => Ordering::Less,
            (_, ExtInt::NegInf) => Ordering::Greater,
            (ExtInt::Finite(a), ExtInt::Finite(b)) => a.cmp(b),
        }
    }
}

impl Add for ExtInt {
    type Output = ExtInt;
    fn add(self, rhs: ExtInt) -> ExtInt {
        match (self, rhs) {
            (ExtInt::Finite(a), ExtInt::Finite(b)) => ExtInt::Finite(a + b),
            _ => ExtInt::NegInf,
        }
    }
}

impl Add<i64> for ExtInt {
    type Output = ExtInt;
    fn add(self, rhs: i64) -> ExtInt {
        self + ExtInt::Finite(rhs)
    }
}

impl Sub<i64> for ExtInt {
    type Output = ExtInt;
    fn sub(self, rhs: i64) -> ExtInt {
        self + ExtInt::Finite(-rhs)
    }
}

impl fmt::Display for ExtInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtInt::NegInf => f.write_str("-inf"),
            ExtInt::Finite(v) => write!(f, "{v}"),
        }
    }
}

impl Serialize for ExtInt {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            ExtInt::NegInf => s.serialize_str("-inf"),
            ExtInt::Finite(v) => s.serialize_i64(*v),
        }
    }
}

impl<'de> Deserialize<'de> for ExtInt {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(v) => Ok(ExtInt::Finite(v)),
            Raw::Str(s) if s == "-inf" => Ok(ExtInt::NegInf),
            Raw::Str(s) => Err(serde::de::Error::custom(format!("expected integer or -inf, got {s}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn neg_inf_is_bottom() {
        assert!(NEG_INFINITY < ExtInt::Finite(i64::MIN));
        assert_eq!(ExtInt::max_of([NEG_INFINITY, 3.into(), (-7).into()]), ExtInt::Finite(3));
        assert_eq!(ExtInt::max_of([]), NEG_INFINITY);
        assert_eq!(NEG_INFINITY + 5, NEG_INFINITY);
        assert_eq!(ExtInt::Finite(2) - 3, ExtInt::Finite(-1));
    }

    #[test]
    fn serde_shape() {
        let v = vec![NEG_INFINITY, ExtInt::Finite(-2)];
        let s = serde_json::to_string(&v).unwrap();
        assert_eq!(s, r#"["-inf",-2]"#);
        let back: Vec<ExtInt> = serde_json::from_str(&s).unwrap();
        assert_eq!(back, v);
    }
}
