//! Characters of equivariant modules: multiplicity functions on dominant weights.
//!
//! A [`Character`] is an expression tree evaluated lazily at one weight at a
//! time. Leaves are closed-form generating functions, explicit tables, or the
//! twisted-cubic formula; interior nodes are sums, differences, shifts, the
//! Fourier transform, and localization at the discriminant.

mod closed;
mod formulas;
mod weight;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

pub use closed::ClosedForm;
pub use formulas::{
    e_weight, localized_ring, m_diag, m_weight, mult_d, nu, origin_delta, polynomial_ring,
    twisted_cubic_coefficient,
};
pub use weight::{dominant_box, Weight, DISCRIMINANT};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharacterError {
    #[error("invalid closed form: {0}")]
    InvalidClosedForm(String),
    #[error("no stabilization at {weight} within {n_max} steps")]
    NoStabilization { weight: Weight, n_max: u32 },
    #[error("twisted-cubic index {0} is not 0, 1 or 2")]
    InvalidComponent(u8),
}

/// How localization decides that `mult(lambda + n*(6,6))` has stopped changing.
///
/// Counting starts at the first nonzero value: below the support the sequence
/// sits at zero for many steps before it rises. A sequence that never leaves
/// zero within `n_max` steps stabilizes at zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StabilizationPolicy {
    pub n_max: u32,
    pub streak: u32,
}

impl Default for StabilizationPolicy {
    fn default() -> Self {
        StabilizationPolicy { n_max: 50, streak: 3 }
    }
}

#[derive(Clone)]
enum Node {
    Closed(ClosedForm),
    Table(BTreeMap<Weight, BigInt>),
    TwistedCubic(u8),
    Sum(Character, Character),
    Difference(Character, Character),
    Shift(Character, Weight),
    Fourier(Character),
    Localize(Character, StabilizationPolicy),
}

/// A multiplicity function on weights; zero on non-dominant weights.
#[derive(Clone)]
pub struct Character(Arc<Node>);

impl Character {
    fn node(n: Node) -> Self {
        Character(Arc::new(n))
    }

    pub fn closed(c: ClosedForm) -> Self {
        Self::node(Node::Closed(c))
    }

    /// Finitely supported character; zero entries are dropped.
    pub fn table(t: BTreeMap<Weight, BigInt>) -> Self {
        Self::node(Node::Table(t.into_iter().filter(|(_, v)| !v.is_zero()).collect()))
    }

    /// The summand of the twisted-cubic module with congruence class `j`.
    pub fn twisted_cubic(j: u8) -> Result<Self, CharacterError> {
        if j > 2 {
            return Err(CharacterError::InvalidComponent(j));
        }
        Ok(Self::node(Node::TwistedCubic(j)))
    }

    pub fn plus(&self, other: &Character) -> Self {
        Self::node(Node::Sum(self.clone(), other.clone()))
    }

    pub fn minus(&self, other: &Character) -> Self {
        Self::node(Node::Difference(self.clone(), other.clone()))
    }

    /// Multiplication by `e^by`.
    pub fn shift(&self, by: Weight) -> Self {
        Self::node(Node::Shift(self.clone(), by))
    }

    pub fn fourier(&self) -> Self {
        Self::node(Node::Fourier(self.clone()))
    }

    pub fn localize(&self) -> Self {
        self.localize_with(StabilizationPolicy::default())
    }

    /// The caller is responsible for the input being torsion-free along the discriminant;
    /// the result is then the character of the localized module.
    pub fn localize_with(&self, policy: StabilizationPolicy) -> Self {
        Self::node(Node::Localize(self.clone(), policy))
    }

    /// The same expression with every localization using `policy`.
    pub fn with_policy(&self, policy: StabilizationPolicy) -> Self {
        match &*self.0 {
            Node::Closed(_) | Node::Table(_) | Node::TwistedCubic(_) => self.clone(),
            Node::Sum(a, b) => a.with_policy(policy).plus(&b.with_policy(policy)),
            Node::Difference(a, b) => a.with_policy(policy).minus(&b.with_policy(policy)),
            Node::Shift(a, by) => a.with_policy(policy).shift(*by),
            Node::Fourier(a) => a.with_policy(policy).fourier(),
            Node::Localize(a, _) => a.with_policy(policy).localize_with(policy),
        }
    }

    pub fn mult(&self, lambda: Weight) -> Result<BigInt, CharacterError> {
        if !lambda.is_dominant() {
            return Ok(BigInt::zero());
        }
        match &*self.0 {
            Node::Closed(c) => Ok(c.coefficient(lambda)),
            Node::Table(t) => Ok(t.get(&lambda).cloned().unwrap_or_default()),
            Node::TwistedCubic(j) => mult_d(*j, lambda),
            Node::Sum(a, b) => Ok(a.mult(lambda)? + b.mult(lambda)?),
            Node::Difference(a, b) => Ok(a.mult(lambda)? - b.mult(lambda)?),
            Node::Shift(a, by) => a.mult(lambda - *by),
            Node::Fourier(a) => a.mult(lambda.fourier()),
            Node::Localize(a, policy) => stabilize(a, lambda, *policy),
        }
    }

    /// The nonzero values on the box `lo <= l2 <= l1 <= hi`.
    pub fn truncate(&self, lo: i64, hi: i64) -> Result<BTreeMap<Weight, BigInt>, CharacterError> {
        let mut out = BTreeMap::new();
        for lambda in dominant_box(lo, hi) {
            let v = self.mult(lambda)?;
            if !v.is_zero() {
                out.insert(lambda, v);
            }
        }
        Ok(out)
    }

    /// The closed form behind this character, when it is one.
    pub fn as_closed(&self) -> Option<&ClosedForm> {
        match &*self.0 {
            Node::Closed(c) => Some(c),
            _ => None,
        }
    }
}

fn stabilize(c: &Character, lambda: Weight, policy: StabilizationPolicy) -> Result<BigInt, CharacterError> {
    let mut last: Option<BigInt> = None;
    let mut run = 0;
    for n in 1..=i64::from(policy.n_max) {
        let v = c.mult(lambda + DISCRIMINANT.scale(n))?;
        if last.is_none() && v.is_zero() {
            continue;
        }
        if last.as_ref() == Some(&v) {
            run += 1;
        } else {
            run = 1;
            last = Some(v);
        }
        if run >= policy.streak {
            return Ok(last.unwrap());
        }
    }
    match last {
        None => Ok(BigInt::zero()),
        Some(_) => Err(CharacterError::NoStabilization { weight: lambda, n_max: policy.n_max }),
    }
}

impl fmt::Debug for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.0 {
            Node::Closed(c) => write!(f, "Closed({c:?})"),
            Node::Table(t) => write!(f, "Table({} entries)", t.len()),
            Node::TwistedCubic(j) => write!(f, "TwistedCubic({j})"),
            Node::Sum(a, b) => write!(f, "({a:?} + {b:?})"),
            Node::Difference(a, b) => write!(f, "({a:?} - {b:?})"),
            Node::Shift(a, by) => write!(f, "{a:?}*e^{by}"),
            Node::Fourier(a) => write!(f, "F[{a:?}]"),
            Node::Localize(a, _) => write!(f, "Loc[{a:?}]"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(a: i64, b: i64) -> Weight {
        Weight::new(a, b)
    }

    fn one() -> BigInt {
        BigInt::from(1)
    }

    #[test]
    fn closed_form_values() {
        let s = Character::closed(polynomial_ring());
        assert_eq!(s.mult(w(3, 0)).unwrap(), one());
        assert!(s.mult(w(1, 0)).unwrap().is_zero());
        assert!(s.mult(w(0, 3)).unwrap().is_zero());
        let sd = Character::closed(localized_ring());
        assert_eq!(sd.mult(w(3, -3)).unwrap(), one());
        assert!(sd.mult(w(-1, -5)).unwrap().is_zero());
        let e = Character::closed(origin_delta());
        assert!(e.mult(w(3, 0)).unwrap().is_zero());
        assert_eq!(e.mult(w(-6, -9)).unwrap(), one());
        assert_eq!(e.mult(w(-6, -6)).unwrap(), one());
    }

    #[test]
    fn localization_of_polynomials() {
        let s = Character::closed(polynomial_ring());
        assert_eq!(s.localize().mult(w(-6, -6)).unwrap(), one());
        // Far below the support the sequence is zero for several steps first.
        assert_eq!(s.localize().mult(w(-24, -30)).unwrap(), Character::closed(localized_ring()).mult(w(-24, -30)).unwrap());
    }

    #[test]
    fn finite_table_localizes_to_zero() {
        let t = Character::table([(w(0, 0), one())].into_iter().collect());
        assert!(t.localize().mult(w(0, 0)).unwrap().is_zero());
    }

    #[test]
    fn truncation_of_polynomials() {
        let t = Character::closed(polynomial_ring()).truncate(-2, 8).unwrap();
        assert_eq!(t[&w(0, 0)], one());
        assert_eq!(t[&w(3, 0)], one());
        assert_eq!(t[&w(4, 2)], one());
        assert_eq!(t[&w(6, 3)], one());
    }
}
