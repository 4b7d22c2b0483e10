use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

/// An exact element of `½ℤ`, stored as twice its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct HalfInt {
    doubled: i64,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { doubled: 0 };
    pub const ONE: HalfInt = HalfInt { doubled: 2 };

    pub const fn from_doubled(doubled: i64) -> Self {
        HalfInt { doubled }
    }

    pub const fn from_int(value: i64) -> Self {
        HalfInt { doubled: 2 * value }
    }

    /// `n / 2`.
    pub const fn half_of(n: i64) -> Self {
        HalfInt { doubled: n }
    }

    pub const fn doubled(self) -> i64 {
        self.doubled
    }

    pub const fn is_integer(self) -> bool {
        self.doubled % 2 == 0
    }

    pub fn abs(self) -> Self {
        HalfInt { doubled: self.doubled.abs() }
    }

    /// Integer value, if integral.
    pub fn to_integer(self) -> Option<i64> {
        self.is_integer().then_some(self.doubled / 2)
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt { doubled: self.doubled + rhs.doubled }
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt { doubled: self.doubled - rhs.doubled }
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt { doubled: -self.doubled }
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.doubled / 2)
        } else {
            write!(f, "{}/2", self.doubled)
        }
    }
}

impl std::str::FromStr for HalfInt {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        let s = s.trim();
        let bad = || crate::Error::Parse(format!("bad half-integer {s:?}"));
        match s.split_once('/') {
            Some((num, "2")) => num.trim().parse::<i64>().map(HalfInt::from_doubled).map_err(|_| bad()),
            Some(_) => Err(bad()),
            None => s.parse::<i64>().map(HalfInt::from_int).map_err(|_| bad()),
        }
    }
}
