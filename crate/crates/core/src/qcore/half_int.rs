use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// Largest |2·value| accepted when parsing; spins up to 10 cover every suite.
pub const MAX_TWICE: i32 = 40;

/// An exact half-integer stored as twice its value.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct HalfInt {
    twice: i32,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { twice: 0 };
    pub const HALF: HalfInt = HalfInt { twice: 1 };
    pub const ONE: HalfInt = HalfInt { twice: 2 };

    pub const fn from_twice(twice: i32) -> Self {
        Self { twice }
    }

    pub const fn from_int(value: i32) -> Self {
        Self { twice: 2 * value }
    }

    pub const fn twice(self) -> i32 {
        self.twice
    }

    pub fn value(self) -> f64 {
        self.twice as f64 / 2.0
    }

    pub const fn is_integer(self) -> bool {
        self.twice % 2 == 0
    }

    pub const fn is_negative(self) -> bool {
        self.twice < 0
    }

    pub const fn abs(self) -> Self {
        Self {
            twice: self.twice.abs(),
        }
    }

    /// Dimension 2j+1 of the spin-j multiplet.
    pub fn multiplicity(self) -> usize {
        (self.twice + 1).max(0) as usize
    }

    /// Weights j, j-1, ..., -j in descending order.
    pub fn weights(self) -> impl DoubleEndedIterator<Item = HalfInt> + ExactSizeIterator {
        let top = self.twice;
        (0..self.multiplicity()).map(move |k| HalfInt::from_twice(top - 2 * k as i32))
    }
}

impl From<HalfInt> for f64 {
    fn from(h: HalfInt) -> f64 {
        h.value()
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt::from_twice(self.twice + rhs.twice)
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt::from_twice(self.twice - rhs.twice)
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt::from_twice(-self.twice)
    }
}

impl PartialOrd for HalfInt {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for HalfInt {
    fn cmp(&self, other: &Self) -> Ordering {
        self.twice.cmp(&other.twice)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

impl fmt::Debug for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for HalfInt {
    type Err = Error;

    /// Accepts `"p/2"` or a plain integer.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || Error::InvalidHalfInt(s.to_string());
        let trimmed = s.trim();
        let twice = match trimmed.split_once('/') {
            Some((num, den)) => {
                if den.trim() != "2" {
                    return Err(bad());
                }
                num.trim().parse::<i32>().map_err(|_| bad())?
            }
            None => trimmed
                .parse::<i32>()
                .ok()
                .and_then(|v| v.checked_mul(2))
                .ok_or_else(bad)?,
        };
        if twice.abs() > MAX_TWICE {
            return Err(bad());
        }
        Ok(HalfInt::from_twice(twice))
    }
}

impl Serialize for HalfInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for HalfInt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_integers() {
        assert_eq!("1/2".parse::<HalfInt>().unwrap(), HalfInt::HALF);
        assert_eq!("-3/2".parse::<HalfInt>().unwrap(), HalfInt::from_twice(-3));
        assert_eq!("2".parse::<HalfInt>().unwrap(), HalfInt::from_int(2));
        assert_eq!("4/2".parse::<HalfInt>().unwrap(), HalfInt::from_int(2));
        assert!("1/3".parse::<HalfInt>().is_err());
        assert!("0.5".parse::<HalfInt>().is_err());
        assert!("41/2".parse::<HalfInt>().is_err());
    }

    #[test]
    fn display_round_trips() {
        for twice in -MAX_TWICE..=MAX_TWICE {
            let h = HalfInt::from_twice(twice);
            assert_eq!(h.to_string().parse::<HalfInt>().unwrap(), h);
        }
    }

    #[test]
    fn weights_descend() {
        let w: Vec<_> = HalfInt::from_twice(3)
            .weights()
            .map(|m| m.twice())
            .collect();
        assert_eq!(w, vec![3, 1, -1, -3]);
        assert_eq!(HalfInt::ZERO.weights().count(), 1);
    }

    #[test]
    fn arithmetic_is_exact() {
        let a = HalfInt::HALF;
        assert!((a + a).is_integer());
        assert!(!(a + HalfInt::ONE).is_integer());
        assert_eq!((a - HalfInt::ONE).twice(), -1);
        assert_eq!(-a, HalfInt::from_twice(-1));
    }
}
