use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::Rational;

/// Integers and rationals extended by `±∞` and a marker for values that do
/// not exist (an undefined parameter, a failed hypothesis).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtNum {
    Int(i64),
    Rational(Rational),
    PosInf,
    NegInf,
    Inapplicable,
}

impl ExtNum {
    /// Normalizes integral rationals to `Int`.
    pub fn rational(r: Rational) -> Self {
        if r.is_integer() {
            ExtNum::Int(r.to_integer())
        } else {
            ExtNum::Rational(r)
        }
    }

    pub fn int(v: impl TryInto<i64>) -> Self {
        v.try_into().map_or(ExtNum::Inapplicable, ExtNum::Int)
    }

    pub fn is_applicable(self) -> bool {
        self != ExtNum::Inapplicable
    }

    fn as_rational(self) -> Option<Rational> {
        match self {
            ExtNum::Int(v) => Some(Rational::from_integer(v)),
            ExtNum::Rational(r) => Some(r),
            _ => None,
        }
    }

    /// Total order on applicable values; `None` if either side is inapplicable.
    pub fn compare(self, other: ExtNum) -> Option<Ordering> {
        use ExtNum::*;
        match (self, other) {
            (Inapplicable, _) | (_, Inapplicable) => None,
            (PosInf, PosInf) | (NegInf, NegInf) => Some(Ordering::Equal),
            (PosInf, _) | (_, NegInf) => Some(Ordering::Greater),
            (NegInf, _) | (_, PosInf) => Some(Ordering::Less),
            (a, b) => Some(a.as_rational()?.cmp(&b.as_rational()?)),
        }
    }

    pub fn to_f64(self) -> Option<f64> {
        match self {
            ExtNum::PosInf => Some(f64::INFINITY),
            ExtNum::NegInf => Some(f64::NEG_INFINITY),
            other => other.as_rational().and_then(|r| r.to_f64()),
        }
    }
}

impl From<usize> for ExtNum {
    fn from(v: usize) -> Self {
        ExtNum::int(v)
    }
}

impl From<isize> for ExtNum {
    fn from(v: isize) -> Self {
        ExtNum::int(v)
    }
}

impl From<Rational> for ExtNum {
    fn from(r: Rational) -> Self {
        ExtNum::rational(r)
    }
}

impl fmt::Display for ExtNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtNum::Int(v) => write!(f, "{v}"),
            ExtNum::Rational(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            ExtNum::PosInf => f.write_str("inf"),
            ExtNum::NegInf => f.write_str("-inf"),
            ExtNum::Inapplicable => f.write_str("n/a"),
        }
    }
}

impl FromStr for ExtNum {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "inf" => Ok(ExtNum::PosInf),
            "-inf" => Ok(ExtNum::NegInf),
            "n/a" => Ok(ExtNum::Inapplicable),
            _ => match s.split_once('/') {
                Some((a, b)) => {
                    let num: i64 = a.parse().map_err(|_| format!("bad number '{s}'"))?;
                    let den: i64 = b.parse().map_err(|_| format!("bad number '{s}'"))?;
                    if den.is_zero() {
                        return Err(format!("zero denominator in '{s}'"));
                    }
                    Ok(ExtNum::rational(Rational::new(num, den)))
                }
                None => s.parse().map(ExtNum::Int).map_err(|_| format!("bad number '{s}'")),
            },
        }
    }
}

impl Serialize for ExtNum {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ExtNum {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering_with_infinities() {
        let half = ExtNum::rational(Rational::new(1, 2));
        assert_eq!(ExtNum::Int(0).compare(half), Some(Ordering::Less));
        assert_eq!(ExtNum::PosInf.compare(ExtNum::Int(1_000)), Some(Ordering::Greater));
        assert_eq!(ExtNum::NegInf.compare(half), Some(Ordering::Less));
        assert_eq!(ExtNum::Inapplicable.compare(half), None);
        assert_eq!(ExtNum::rational(Rational::new(4, 2)), ExtNum::Int(2));
    }

    #[test]
    fn display_round_trip() {
        for v in [
            ExtNum::Int(-3),
            ExtNum::rational(Rational::new(36, 5)),
            ExtNum::PosInf,
            ExtNum::NegInf,
            ExtNum::Inapplicable,
        ] {
            assert_eq!(v.to_string().parse::<ExtNum>().unwrap(), v);
            let json = serde_json::to_string(&v).unwrap();
            assert_eq!(serde_json::from_str::<ExtNum>(&json).unwrap(), v);
        }
        assert_eq!(ExtNum::rational(Rational::new(36, 5)).to_string(), "36/5");
    }
}
