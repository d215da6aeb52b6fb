//! Exact field scalars.

use std::fmt;
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{Num, ToPrimitive};

/// An exact field of characteristic zero.
///
/// Everything in the linear algebra and quiver layers is generic over this
/// trait. Rank decisions must be exact, so only rational types implement it.
pub trait Scalar:
    Num + Clone + Neg<Output = Self> + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    fn from_i64(n: i64) -> Self;
    fn to_rational(&self) -> BigRational;
    fn from_rational(q: &BigRational) -> Self;
}

impl Scalar for BigRational {
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn to_rational(&self) -> BigRational {
        self.clone()
    }

    fn from_rational(q: &BigRational) -> Self {
        q.clone()
    }
}

// Small-word rationals; arithmetic overflow panics inside num-rational.
impl Scalar for Rational64 {
    fn from_i64(n: i64) -> Self {
        Rational64::from_integer(n)
    }

    fn to_rational(&self) -> BigRational {
        BigRational::new(BigInt::from(*self.numer()), BigInt::from(*self.denom()))
    }

    fn from_rational(q: &BigRational) -> Self {
        let n = q.numer().to_i64().expect("numerator exceeds i64");
        let d = q.denom().to_i64().expect("denominator exceeds i64");
        Rational64::new(n, d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_small() {
        let q = Rational64::new(-3, 7);
        assert_eq!(Rational64::from_rational(&q.to_rational()), q);
        let b = BigRational::from_i64(12);
        assert_eq!(b.to_rational(), b);
    }
}
