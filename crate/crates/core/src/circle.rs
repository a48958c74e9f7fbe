//! Points of the circle `[0,1]/0~1`, finite configurations on it, and
//! multiset configurations (points of the symmetric product).

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, ParseError, Result};
use crate::rational::Rational;

/// A point of the circle, stored as its representative in `[0, 1)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CirclePoint(Rational);

impl CirclePoint {
    /// Reduces any rational modulo 1.
    pub fn new(value: Rational) -> Self {
        CirclePoint(value.fract_mod1())
    }

    pub fn zero() -> Self {
        CirclePoint(Rational::zero())
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }

    pub fn into_value(self) -> Rational {
        self.0
    }
}

impl From<Rational> for CirclePoint {
    fn from(r: Rational) -> Self {
        CirclePoint::new(r)
    }
}

impl fmt::Display for CirclePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for CirclePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl Serialize for CirclePoint {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.0.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CirclePoint {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        Rational::deserialize(deserializer).map(CirclePoint::new)
    }
}

/// Arc-length distance on the circle of circumference 1.
pub fn circle_dist(a: &CirclePoint, b: &CirclePoint) -> Rational {
    let d = (a.value() - b.value()).abs();
    let other = Rational::one() - &d;
    d.min(other)
}

/// A nonempty finite subset of the circle: a point of `C_n(S^1)` for any
/// `n >= len()`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Configuration {
    points: Vec<CirclePoint>,
}

impl Configuration {
    /// Sorts and deduplicates; fails only on an empty input.
    pub fn new<I>(points: I) -> Result<Self>
    where
        I: IntoIterator<Item = CirclePoint>,
    {
        let mut points: Vec<CirclePoint> = points.into_iter().collect();
        if points.is_empty() {
            return Err(Error::EmptyConfiguration);
        }
        points.sort();
        points.dedup();
        Ok(Configuration { points })
    }

    pub fn from_rationals<I>(values: I) -> Result<Self>
    where
        I: IntoIterator<Item = Rational>,
    {
        Configuration::new(values.into_iter().map(CirclePoint::new))
    }

    pub fn singleton(p: CirclePoint) -> Self {
        Configuration { points: vec![p] }
    }

    pub fn points(&self) -> &[CirclePoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    /// Always false; configurations are nonempty by construction.
    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &CirclePoint) -> bool {
        self.points.binary_search(p).is_ok()
    }

    /// Distance from `p` to the nearest point of `self`.
    pub fn dist_to(&self, p: &CirclePoint) -> Rational {
        self.points
            .iter()
            .map(|a| circle_dist(a, p))
            .min()
            .expect("nonempty configuration")
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.points.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Comma-separated rationals, each reduced mod 1: `"0,1/2"`.
impl FromStr for Configuration {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut values = Vec::new();
        for part in s.split(',') {
            let r: Rational = part
                .parse()
                .map_err(|e: ParseError| ParseError::Configuration(s.to_string(), e.to_string()))?;
            values.push(r);
        }
        Configuration::from_rationals(values)
            .map_err(|_| ParseError::Configuration(s.to_string(), "no points".to_string()).into())
    }
}

impl Serialize for Configuration {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.points.serialize(serializer)
    }
}

/// A point of the symmetric product `SP^n(S^1)`: circle points with
/// positive multiplicities summing to `n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultisetConfiguration {
    entries: Vec<(CirclePoint, u64)>,
}

impl MultisetConfiguration {
    /// Merges repeated points. Zero multiplicities are dropped.
    pub fn new<I>(entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (CirclePoint, u64)>,
    {
        let mut merged: BTreeMap<CirclePoint, u64> = BTreeMap::new();
        for (p, k) in entries {
            if k > 0 {
                *merged.entry(p).or_insert(0) += k;
            }
        }
        if merged.is_empty() {
            return Err(Error::EmptyConfiguration);
        }
        Ok(MultisetConfiguration {
            entries: merged.into_iter().collect(),
        })
    }

    pub fn entries(&self) -> &[(CirclePoint, u64)] {
        &self.entries
    }

    pub fn total(&self) -> u64 {
        self.entries.iter().map(|(_, k)| k).sum()
    }

    pub fn multiplicity(&self, p: &CirclePoint) -> u64 {
        self.entries
            .iter()
            .find(|(q, _)| q == p)
            .map_or(0, |(_, k)| *k)
    }

    /// The underlying set, forgetting multiplicities.
    pub fn support(&self) -> Configuration {
        Configuration {
            points: self.entries.iter().map(|(p, _)| p.clone()).collect(),
        }
    }
}

impl fmt::Display for MultisetConfiguration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, (p, k)) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}^{k}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for MultisetConfiguration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn cp(n: i64, d: i64) -> CirclePoint {
        CirclePoint::new(q(n, d))
    }

    #[test]
    fn reduces_mod_one() {
        assert_eq!(cp(5, 4), cp(1, 4));
        assert_eq!(cp(-1, 4), cp(3, 4));
        assert_eq!(cp(1, 1), CirclePoint::zero());
    }

    #[test]
    fn circle_dist_examples() {
        assert_eq!(circle_dist(&cp(1, 3), &cp(1, 3)), Rational::zero());
        assert_eq!(circle_dist(&cp(0, 1), &cp(1, 2)), q(1, 2));
        assert_eq!(circle_dist(&cp(1, 10), &cp(9, 10)), q(1, 5));
    }

    #[test]
    fn configuration_is_a_set() {
        let a = Configuration::from_rationals([q(1, 2), q(0, 1), q(3, 2)]).unwrap();
        let b = Configuration::from_rationals([q(0, 1), q(1, 2)]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 2);
        assert!(Configuration::from_rationals([]).is_err());
    }

    #[test]
    fn parse_configuration() {
        let c: Configuration = "0, 1/2, 5/4".parse().unwrap();
        assert_eq!(c.to_string(), "{0, 1/4, 1/2}");
        assert!("0,,1".parse::<Configuration>().is_err());
        assert!("".parse::<Configuration>().is_err());
    }

    #[test]
    fn multiset_merges() {
        let m = MultisetConfiguration::new([(cp(0, 1), 1), (cp(1, 1), 1), (cp(1, 2), 1)]).unwrap();
        assert_eq!(m.total(), 3);
        assert_eq!(m.multiplicity(&CirclePoint::zero()), 2);
        assert_eq!(m.to_string(), "[0^2, 1/2^1]");
        assert_eq!(m.support().len(), 2);
    }
}
