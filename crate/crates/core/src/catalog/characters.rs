use crate::character::{localized_ring, origin_delta, polynomial_ring, Character, Weight};

use super::{DerivedId, Object, SimpleId};

fn twisted(j: u8) -> Character {
    Character::twisted_cubic(j).expect("index below 3")
}

/// The character of a simple object.
pub fn character_of(id: SimpleId) -> Character {
    use SimpleId::*;
    match id {
        S => Character::closed(polynomial_ring()),
        E => Character::closed(origin_delta()),
        P => derived_character(DerivedId::Sdelta).minus(&character_of(S)).minus(&character_of(E)),
        D0 => twisted(0),
        D1 => twisted(1),
        D2 => twisted(2),
        G1 => twisted(2).fourier(),
        GMinus1 => twisted(1).fourier(),
        G2 => Character::closed(localized_ring().shift(Weight::diagonal(2))),
        G3 => Character::closed(localized_ring().shift(Weight::diagonal(3))),
        G4 => Character::closed(localized_ring().shift(Weight::diagonal(4))),
        Q0 => twisted(0).fourier(),
        Q1 => derived_character(DerivedId::Q0delta).shift(Weight::diagonal(2)),
        Q2 => derived_character(DerivedId::Q0delta).shift(Weight::diagonal(4)),
    }
}

pub fn derived_character(id: DerivedId) -> Character {
    match id {
        DerivedId::Sdelta => Character::closed(localized_ring()),
        DerivedId::Q0delta => character_of(SimpleId::Q0).localize(),
        DerivedId::F1 => Character::closed(localized_ring().shift(Weight::diagonal(1))),
        DerivedId::FMinus1 => Character::closed(localized_ring().shift(Weight::diagonal(-1))),
        DerivedId::SdeltaModS => derived_character(DerivedId::Sdelta).minus(&character_of(SimpleId::S)),
        DerivedId::Q0deltaModQ0 => derived_character(DerivedId::Q0delta).minus(&character_of(SimpleId::Q0)),
    }
}

pub fn object_character(obj: Object) -> Character {
    match obj {
        Object::Simple(s) => character_of(s),
        Object::Derived(d) => derived_character(d),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_traits::Zero;

    fn w(a: i64, b: i64) -> Weight {
        Weight::new(a, b)
    }

    fn m(id: SimpleId, a: i64, b: i64) -> BigInt {
        character_of(id).mult(w(a, b)).unwrap()
    }

    #[test]
    fn golden_values() {
        use SimpleId::*;
        let one = BigInt::from(1);
        assert_eq!(m(Q0, 3, 0), one);
        assert_eq!(m(Q1, 0, -2), one);
        assert_eq!(m(Q2, 2, 0), one);
        assert_eq!(m(P, 3, -3), one);
        assert!(m(P, -6, -9).is_zero());
        assert_eq!(m(D1, -5, -5), one);
        assert_eq!(m(G1, 1, 1), one);
        assert!(m(Q0, 0, -3).is_zero());
        assert_eq!(m(G3, 3, 3), one);
        let q0d = derived_character(DerivedId::Q0delta);
        assert_eq!(q0d.mult(w(-2, -4)).unwrap(), one);
        assert_eq!(q0d.mult(w(-6, -9)).unwrap(), one);
        let f1 = derived_character(DerivedId::F1);
        assert_eq!(f1.mult(w(-5, -5)).unwrap(), one);
        assert_eq!(f1.mult(w(1, 1)).unwrap(), one);
    }
}
