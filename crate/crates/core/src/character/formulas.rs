//! The explicit generating functions and the twisted-cubic multiplicities.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::{CharacterError, ClosedForm, Weight, DISCRIMINANT};

fn w(a: i64, b: i64) -> Weight {
    Weight::new(a, b)
}

/// Polynomial functions on binary cubics: `(1 + e^(6,3)) / ((1-e^(3,0))(1-e^(4,2))(1-e^(6,6)))`.
pub fn polynomial_ring() -> ClosedForm {
    ClosedForm::new(vec![(1, w(0, 0)), (1, w(6, 3))], vec![w(3, 0), w(4, 2), DISCRIMINANT], None)
        .expect("static closed form")
}

/// The ring localized at the discriminant: the `(1-e^(6,6))` factor becomes a sum over all of Z.
pub fn localized_ring() -> ClosedForm {
    ClosedForm::new(vec![(1, w(0, 0)), (1, w(6, 3))], vec![w(3, 0), w(4, 2)], Some(6))
        .expect("static closed form")
}

/// The delta module at the origin: `(1 + e^(-3,-6)) e^(-6,-6) / ((1-e^(0,-3))(1-e^(-2,-4))(1-e^(-6,-6)))`.
pub fn origin_delta() -> ClosedForm {
    ClosedForm::new(
        vec![(1, w(-6, -6)), (1, w(-9, -12))],
        vec![w(0, -3), w(-2, -4), w(-6, -6)],
        None,
    )
    .expect("static closed form")
}

/// Number of `(a, b) >= 0` with `2a + 3b = i`; zero for negative `i`.
pub fn nu(i: i64) -> i64 {
    if i < 0 {
        return 0;
    }
    // b runs over values of the parity of i up to i/3.
    let top = i / 3;
    let first = i % 2;
    if first > top {
        0
    } else {
        (top - first) / 2 + 1
    }
}

/// `m_lambda = nu(l1 - 5) - nu(l2 - 6)`.
pub fn m_weight(lambda: Weight) -> i64 {
    nu(lambda.l1 - 5) - nu(lambda.l2 - 6)
}

/// The closed form for `m_(a,a)`.
pub fn m_diag(a: i64) -> i64 {
    let r = a.mod_floor(&6);
    if r == 0 && a >= 6 {
        -1
    } else if (r == 1 || r == 5) && a >= 5 {
        1
    } else {
        0
    }
}

/// `e_lambda`: multiplicity of `lambda - (6,6)` in the polynomial ring.
pub fn e_weight(lambda: Weight) -> BigInt {
    let mu = lambda - DISCRIMINANT;
    if !mu.is_dominant() {
        return BigInt::zero();
    }
    polynomial_ring().coefficient(mu)
}

/// `a^j_lambda` for the three twisted-cubic summands.
pub fn twisted_cubic_coefficient(j: u8, lambda: Weight) -> Result<BigInt, CharacterError> {
    if j > 2 {
        return Err(CharacterError::InvalidComponent(j));
    }
    if !lambda.is_dominant() || lambda.size().mod_floor(&3) != i64::from(j) {
        return Ok(BigInt::zero());
    }
    let m = BigInt::from(m_weight(lambda));
    Ok(if j == 0 { m + e_weight(lambda) } else { m })
}

/// Multiplicity of `lambda` in the twisted-cubic summand `j`; the character is the dual of `a^j`.
pub fn mult_d(j: u8, lambda: Weight) -> Result<BigInt, CharacterError> {
    if j > 2 {
        return Err(CharacterError::InvalidComponent(j));
    }
    if !lambda.is_dominant() {
        return Ok(BigInt::zero());
    }
    twisted_cubic_coefficient(j, lambda.dual())
}
