//! Characters given by a rational generating function.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{CharacterError, Weight};

/// `sum_k c_k e^{nu_k} / prod_i (1 - e^{mu_i})`, optionally times `sum_{t in Z} e^{t*(r,r)}`.
///
/// Each denominator weight must be dominant and nonzero. Diagonal ("scalar")
/// denominators must all point the same way, and cannot be combined with the
/// periodic factor; together these keep every coefficient a finite count.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosedForm {
    numerator: Vec<(i64, Weight)>,
    denominators: Vec<Weight>,
    period: Option<i64>,
}

impl ClosedForm {
    pub fn new(
        numerator: Vec<(i64, Weight)>,
        denominators: Vec<Weight>,
        period: Option<i64>,
    ) -> Result<Self, CharacterError> {
        let bad = |msg: String| Err(CharacterError::InvalidClosedForm(msg));
        for &mu in &denominators {
            if !mu.is_dominant() || mu == Weight::ZERO {
                return bad(format!("denominator {mu} is not a nonzero dominant weight"));
            }
        }
        let scalars: Vec<i64> = denominators.iter().filter(|m| m.spread() == 0).map(|m| m.l1).collect();
        if scalars.iter().any(|&s| s > 0) && scalars.iter().any(|&s| s < 0) {
            return bad("diagonal denominators of both signs give infinite coefficients".into());
        }
        if let Some(r) = period {
            if r <= 0 {
                return bad(format!("period {r} must be positive"));
            }
            if !scalars.is_empty() {
                return bad("periodic factor combined with a diagonal denominator".into());
            }
        }
        let numerator = numerator.into_iter().filter(|(c, _)| *c != 0).collect();
        Ok(ClosedForm { numerator, denominators, period })
    }

    pub fn numerator(&self) -> &[(i64, Weight)] {
        &self.numerator
    }

    pub fn denominators(&self) -> &[Weight] {
        &self.denominators
    }

    pub fn period(&self) -> Option<i64> {
        self.period
    }

    /// Coefficient of `e^lambda` in the formal expansion.
    pub fn coefficient(&self, lambda: Weight) -> BigInt {
        let sloped: Vec<Weight> = self.denominators.iter().copied().filter(|m| m.spread() > 0).collect();
        let scalars: Vec<i64> = self.denominators.iter().filter(|m| m.spread() == 0).map(|m| m.l1).collect();
        let mut total = BigInt::zero();
        for &(c, nu) in &self.numerator {
            let rest = lambda - nu;
            let mut count = BigInt::zero();
            self.sloped_solutions(&sloped, rest, &scalars, &mut count);
            total += count * c;
        }
        total
    }

    fn sloped_solutions(&self, sloped: &[Weight], rest: Weight, scalars: &[i64], count: &mut BigInt) {
        if rest.spread() < 0 {
            return;
        }
        match sloped.split_first() {
            None => {
                if rest.spread() == 0 {
                    *count += self.diagonal_count(rest.l1, scalars);
                }
            }
            Some((&mu, tail)) => {
                let step = mu.spread();
                if tail.is_empty() {
                    if rest.spread() % step == 0 {
                        let a = rest.spread() / step;
                        self.sloped_solutions(tail, rest - mu.scale(a), scalars, count);
                    }
                    return;
                }
                let mut r = rest;
                while r.spread() >= 0 {
                    self.sloped_solutions(tail, r, scalars, count);
                    r = r - mu;
                }
            }
        }
    }

    fn diagonal_count(&self, s: i64, scalars: &[i64]) -> BigInt {
        if let Some(r) = self.period {
            return BigInt::from(u8::from(s.mod_floor(&r) == 0));
        }
        if scalars.is_empty() {
            return BigInt::from(u8::from(s == 0));
        }
        // Coin-change count of s as a non-negative combination of the scalars.
        let sign = scalars[0].signum();
        if s * sign < 0 {
            return BigInt::zero();
        }
        let target = (s * sign) as usize;
        let mut ways = vec![BigInt::zero(); target + 1];
        ways[0] = BigInt::from(1);
        for &c in scalars {
            let c = (c * sign) as usize;
            for v in c..=target {
                let prev = ways[v - c].clone();
                ways[v] += prev;
            }
        }
        ways[target].clone()
    }

    pub fn shift(&self, by: Weight) -> Self {
        ClosedForm {
            numerator: self.numerator.iter().map(|&(c, nu)| (c, nu + by)).collect(),
            denominators: self.denominators.clone(),
            period: self.period,
        }
    }

    /// The closed form of the Fourier transform.
    pub fn fourier(&self) -> Self {
        ClosedForm {
            numerator: self.numerator.iter().map(|&(c, nu)| (c, nu.fourier())).collect(),
            denominators: self.denominators.iter().map(|m| m.dual()).collect(),
            period: self.period,
        }
    }

    /// Formal product of two generating functions.
    pub fn product(&self, other: &Self) -> Result<Self, CharacterError> {
        let period = match (self.period, other.period) {
            (Some(_), Some(_)) => {
                return Err(CharacterError::InvalidClosedForm(
                    "product of two periodic factors diverges".into(),
                ))
            }
            (p, q) => p.or(q),
        };
        let mut numerator = Vec::new();
        for &(a, x) in &self.numerator {
            for &(b, y) in &other.numerator {
                numerator.push((a * b, x + y));
            }
        }
        let mut denominators = self.denominators.clone();
        denominators.extend(other.denominators.iter().copied());
        ClosedForm::new(numerator, denominators, period)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(a: i64, b: i64) -> Weight {
        Weight::new(a, b)
    }

    #[test]
    fn rejects_infinite_forms() {
        assert!(ClosedForm::new(vec![(1, w(0, 0))], vec![w(0, 1)], None).is_err());
        assert!(ClosedForm::new(vec![(1, w(0, 0))], vec![w(6, 6), w(-6, -6)], None).is_err());
        assert!(ClosedForm::new(vec![(1, w(0, 0))], vec![w(6, 6)], Some(6)).is_err());
        assert!(ClosedForm::new(vec![(1, w(0, 0))], vec![w(0, 0)], None).is_err());
    }

    #[test]
    fn geometric_series() {
        let g = ClosedForm::new(vec![(1, w(0, 0))], vec![w(1, 0)], None).unwrap();
        assert_eq!(g.coefficient(w(5, 0)), BigInt::from(1));
        assert_eq!(g.coefficient(w(5, 1)), BigInt::from(0));
        let two = ClosedForm::new(vec![(1, w(0, 0))], vec![w(1, 0), w(1, 1)], None).unwrap();
        // (3,1) = 2*(1,0) + (1,1) only.
        assert_eq!(two.coefficient(w(3, 1)), BigInt::from(1));
        let coins = ClosedForm::new(vec![(1, w(0, 0))], vec![w(1, 1), w(2, 2)], None).unwrap();
        assert_eq!(coins.coefficient(w(4, 4)), BigInt::from(3));
    }
}
