//! The fourteen simple equivariant D-modules and their bookkeeping.

mod characters;
mod loccoh;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use characters::{character_of, derived_character, object_character};
pub use loccoh::{iterated_checks, local_cohomology, local_cohomology_factors, IteratedCheck};

/// The simple objects. `S` is the polynomial ring, `E` the delta module at the origin.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum SimpleId {
    S,
    GMinus1,
    G1,
    G2,
    G3,
    G4,
    Q0,
    Q1,
    Q2,
    P,
    D0,
    D1,
    D2,
    E,
}

impl SimpleId {
    pub const ALL: [SimpleId; 14] = [
        SimpleId::S,
        SimpleId::GMinus1,
        SimpleId::G1,
        SimpleId::G2,
        SimpleId::G3,
        SimpleId::G4,
        SimpleId::Q0,
        SimpleId::Q1,
        SimpleId::Q2,
        SimpleId::P,
        SimpleId::D0,
        SimpleId::D1,
        SimpleId::D2,
        SimpleId::E,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SimpleId::S => "S",
            SimpleId::GMinus1 => "G-1",
            SimpleId::G1 => "G1",
            SimpleId::G2 => "G2",
            SimpleId::G3 => "G3",
            SimpleId::G4 => "G4",
            SimpleId::Q0 => "Q0",
            SimpleId::Q1 => "Q1",
            SimpleId::Q2 => "Q2",
            SimpleId::P => "P",
            SimpleId::D0 => "D0",
            SimpleId::D1 => "D1",
            SimpleId::D2 => "D2",
            SimpleId::E => "E",
        }
    }

    /// Closure of this orbit is the support.
    pub fn support(self) -> Orbit {
        match self {
            SimpleId::P => Orbit::O3,
            SimpleId::D0 | SimpleId::D1 | SimpleId::D2 => Orbit::O2,
            SimpleId::E => Orbit::O0,
            _ => Orbit::O4,
        }
    }

    /// Rank of the local system on the open orbit of the support.
    pub fn local_system_rank(self) -> u32 {
        match self {
            SimpleId::Q0 | SimpleId::Q1 | SimpleId::Q2 => 2,
            _ => 1,
        }
    }

    pub fn fourier_partner(self) -> SimpleId {
        use SimpleId::*;
        match self {
            S => E,
            E => S,
            GMinus1 => D1,
            D1 => GMinus1,
            G1 => D2,
            D2 => G1,
            G2 => G4,
            G4 => G2,
            Q1 => Q2,
            Q2 => Q1,
            D0 => Q0,
            Q0 => D0,
            P => P,
            G3 => G3,
        }
    }

    /// Holonomic duality. Only the pairing is recorded; the dual functor is not modelled.
    pub fn dual_partner(self) -> SimpleId {
        use SimpleId::*;
        match self {
            D1 => D2,
            D2 => D1,
            Q1 => Q2,
            Q2 => Q1,
            G2 => G4,
            G4 => G2,
            G1 => GMinus1,
            GMinus1 => G1,
            other => other,
        }
    }

    /// Composition factors of the injective hull, socle first.
    pub fn injective_hull_factors(self) -> Vec<SimpleId> {
        use SimpleId::*;
        match self {
            S => vec![S, P, E],
            E => vec![E, P, S],
            D0 => vec![D0, P, Q0],
            Q0 => vec![Q0, P, D0],
            P => vec![P, S, D0, E, Q0],
            G1 => vec![G1, D1],
            D1 => vec![D1, G1],
            GMinus1 => vec![GMinus1, D2],
            D2 => vec![D2, GMinus1],
            other => vec![other],
        }
    }
}

impl fmt::Display for SimpleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SimpleId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "G0" {
            return Ok(SimpleId::S);
        }
        SimpleId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| format!("unknown simple object '{s}'"))
    }
}

/// Non-simple objects that appear in composition series and local cohomology.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum DerivedId {
    /// Polynomials localized at the discriminant.
    Sdelta,
    Q0delta,
    /// `S_delta` twisted by the character `(1,1)`; a non-split extension of `D1` by `G1`.
    F1,
    FMinus1,
    /// Non-split extension with sub `P` and quotient `E`.
    SdeltaModS,
    /// Non-split extension with sub `P` and quotient `D0`.
    Q0deltaModQ0,
}

impl DerivedId {
    pub const ALL: [DerivedId; 6] = [
        DerivedId::Sdelta,
        DerivedId::Q0delta,
        DerivedId::F1,
        DerivedId::FMinus1,
        DerivedId::SdeltaModS,
        DerivedId::Q0deltaModQ0,
    ];

    pub fn name(self) -> &'static str {
        match self {
            DerivedId::Sdelta => "Sdelta",
            DerivedId::Q0delta => "Q0delta",
            DerivedId::F1 => "F1",
            DerivedId::FMinus1 => "F-1",
            DerivedId::SdeltaModS => "SdeltaModS",
            DerivedId::Q0deltaModQ0 => "Q0deltaModQ0",
        }
    }

    /// Composition factors, socle first.
    pub fn factors(self) -> Vec<SimpleId> {
        use SimpleId::*;
        match self {
            DerivedId::Sdelta => vec![S, P, E],
            DerivedId::Q0delta => vec![Q0, P, D0],
            DerivedId::F1 => vec![G1, D1],
            DerivedId::FMinus1 => vec![GMinus1, D2],
            DerivedId::SdeltaModS => vec![P, E],
            DerivedId::Q0deltaModQ0 => vec![P, D0],
        }
    }

    pub fn support(self) -> Orbit {
        match self {
            DerivedId::SdeltaModS | DerivedId::Q0deltaModQ0 => Orbit::O3,
            _ => Orbit::O4,
        }
    }
}

/// A simple or one of the named non-simple objects.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Object {
    Simple(SimpleId),
    Derived(DerivedId),
}

impl Object {
    pub fn name(self) -> &'static str {
        match self {
            Object::Simple(s) => s.name(),
            Object::Derived(d) => d.name(),
        }
    }

    pub fn support(self) -> Orbit {
        match self {
            Object::Simple(s) => s.support(),
            Object::Derived(d) => d.support(),
        }
    }

    pub fn factors(self) -> Vec<SimpleId> {
        match self {
            Object::Simple(s) => vec![s],
            Object::Derived(d) => d.factors(),
        }
    }
}

impl fmt::Display for Object {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Object {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if let Some(d) = DerivedId::ALL.into_iter().find(|d| d.name() == s) {
            return Ok(Object::Derived(d));
        }
        s.parse::<SimpleId>().map(Object::Simple).map_err(|_| {
            format!("unknown object '{s}'; expected a simple name or one of Sdelta, Q0delta, F1, F-1, SdeltaModS, Q0deltaModQ0")
        })
    }
}

/// Orbits of the group on binary cubics, indexed by dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Orbit {
    O0,
    O2,
    O3,
    O4,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitInfo {
    pub dim: u32,
    pub representative: &'static str,
    pub component_group: &'static str,
    pub irreducible_local_systems: u32,
}

impl Orbit {
    pub const ALL: [Orbit; 4] = [Orbit::O0, Orbit::O2, Orbit::O3, Orbit::O4];

    pub fn info(self) -> OrbitInfo {
        let (dim, representative, component_group, irreducible_local_systems) = match self {
            Orbit::O0 => (0, "0", "1", 1),
            Orbit::O2 => (2, "x^3", "C3", 3),
            Orbit::O3 => (3, "x^2*y", "1", 1),
            Orbit::O4 => (4, "x^3+y^3", "(C3 x C3) : C2", 9),
        };
        OrbitInfo { dim, representative, component_group, irreducible_local_systems }
    }

    /// Whether the closure of `self` contains `other`. The closures form a chain.
    pub fn closure_contains(self, other: Orbit) -> bool {
        other <= self
    }

    /// Simples whose support is the closure of this orbit.
    pub fn simples(self) -> Vec<SimpleId> {
        SimpleId::ALL.into_iter().filter(|s| s.support() == self).collect()
    }

    pub fn name(self) -> &'static str {
        match self {
            Orbit::O0 => "O0",
            Orbit::O2 => "O2",
            Orbit::O3 => "O3",
            Orbit::O4 => "O4",
        }
    }
}

impl FromStr for Orbit {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Orbit::ALL.into_iter().find(|o| o.name() == s).ok_or_else(|| format!("unknown orbit '{s}'"))
    }
}

/// Composition factors as a multiset.
pub fn multiset(items: impl IntoIterator<Item = SimpleId>) -> BTreeMap<SimpleId, usize> {
    let mut m = BTreeMap::new();
    for s in items {
        *m.entry(s).or_insert(0) += 1;
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pairings_are_involutions() {
        for s in SimpleId::ALL {
            assert_eq!(s.fourier_partner().fourier_partner(), s);
            assert_eq!(s.dual_partner().dual_partner(), s);
        }
        let fixed: Vec<_> = SimpleId::ALL.into_iter().filter(|s| s.fourier_partner() == *s).collect();
        assert_eq!(fixed, vec![SimpleId::G3, SimpleId::P]);
    }

    #[test]
    fn orbit_table() {
        assert_eq!(Orbit::O4.simples().len(), 9);
        assert_eq!(Orbit::O3.simples(), vec![SimpleId::P]);
        assert_eq!(Orbit::O2.simples().len(), 3);
        assert_eq!(Orbit::O0.simples(), vec![SimpleId::E]);
        let locals: u32 = Orbit::ALL.iter().map(|o| o.info().irreducible_local_systems).sum();
        assert_eq!(locals, 14);
    }

    #[test]
    fn names_round_trip() {
        for s in SimpleId::ALL {
            assert_eq!(s.name().parse::<SimpleId>().unwrap(), s);
        }
        assert_eq!("G0".parse::<SimpleId>().unwrap(), SimpleId::S);
        assert_eq!("F-1".parse::<Object>().unwrap(), Object::Derived(DerivedId::FMinus1));
        assert!("X".parse::<Object>().is_err());
    }
}
