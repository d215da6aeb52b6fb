use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

/// A weight of the rank-two torus, written `(l1, l2)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Weight {
    pub l1: i64,
    pub l2: i64,
}

/// The determinant weight `(6, 6)` whose powers drive localization and the Fourier offset.
pub const DISCRIMINANT: Weight = Weight { l1: 6, l2: 6 };

impl Weight {
    pub const ZERO: Weight = Weight { l1: 0, l2: 0 };

    pub const fn new(l1: i64, l2: i64) -> Self {
        Weight { l1, l2 }
    }

    pub const fn diagonal(a: i64) -> Self {
        Weight { l1: a, l2: a }
    }

    pub fn is_dominant(self) -> bool {
        self.l1 >= self.l2
    }

    /// `l1 + l2`.
    pub fn size(self) -> i64 {
        self.l1 + self.l2
    }

    /// `l1 - l2`.
    pub fn spread(self) -> i64 {
        self.l1 - self.l2
    }

    /// `(l1, l2) -> (-l2, -l1)`.
    pub fn dual(self) -> Self {
        Weight { l1: -self.l2, l2: -self.l1 }
    }

    /// `(l1, l2) -> (-l2 - 6, -l1 - 6)`, an involution.
    pub fn fourier(self) -> Self {
        self.dual() - DISCRIMINANT
    }

    pub fn scale(self, n: i64) -> Self {
        Weight { l1: self.l1 * n, l2: self.l2 * n }
    }
}

impl Add for Weight {
    type Output = Weight;

    fn add(self, o: Weight) -> Weight {
        Weight { l1: self.l1 + o.l1, l2: self.l2 + o.l2 }
    }
}

impl Sub for Weight {
    type Output = Weight;

    fn sub(self, o: Weight) -> Weight {
        Weight { l1: self.l1 - o.l1, l2: self.l2 - o.l2 }
    }
}

impl Neg for Weight {
    type Output = Weight;

    fn neg(self) -> Weight {
        Weight { l1: -self.l1, l2: -self.l2 }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.l1, self.l2)
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl From<(i64, i64)> for Weight {
    fn from((l1, l2): (i64, i64)) -> Self {
        Weight { l1, l2 }
    }
}

/// Dominant weights with `lo <= l2 <= l1 <= hi`, ordered by `l1` then `l2`.
pub fn dominant_box(lo: i64, hi: i64) -> impl Iterator<Item = Weight> {
    (lo..=hi).flat_map(move |l1| (lo..=l1).map(move |l2| Weight { l1, l2 }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fourier_is_involution() {
        let w = Weight::new(3, -4);
        assert_eq!(w.fourier(), Weight::new(-2, -9));
        assert_eq!(w.fourier().fourier(), w);
        assert_eq!(w.dual().dual(), w);
    }

    #[test]
    fn box_is_dominant_and_complete() {
        let ws: Vec<_> = dominant_box(-2, 2).collect();
        assert_eq!(ws.len(), 15);
        assert!(ws.iter().all(|w| w.is_dominant()));
    }
}
