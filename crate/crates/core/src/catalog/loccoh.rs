//! Local cohomology of simples along orbit closures.

use std::collections::BTreeMap;

use super::{multiset, DerivedId, Object, Orbit, SimpleId};

/// Direct summands of `H^k_Z(M)`, with `Z` the closure of `support`.
///
/// A summand may itself be a non-split extension such as `SdeltaModS`.
/// Anything not covered is zero.
pub fn local_cohomology(m: Object, support: Orbit, k: u32) -> Vec<Object> {
    use DerivedId::*;
    use Object::{Derived as D, Simple as Sm};
    use Orbit::*;
    use SimpleId::*;

    if support.closure_contains(m.support()) {
        return if k == 0 { vec![m] } else { Vec::new() };
    }
    match (m, support, k) {
        (Sm(S), O3, 1) => vec![D(SdeltaModS)],
        (Sm(S), O2, 2) => vec![Sm(D0)],
        (Sm(S), O0, 4) => vec![Sm(E)],
        (D(SdeltaModS), O2, 1) => vec![Sm(D0)],
        (D(SdeltaModS), O0, 3) => vec![Sm(E)],
        (Sm(D0), O0, 2) => vec![Sm(E)],
        (Sm(P), O2, 1) => vec![Sm(D0), Sm(E)],
        (Sm(P), O0, 1) => vec![Sm(E)],
        (Sm(P), O0, 3) => vec![Sm(E)],
        (Sm(Q0), O3, 1) => vec![D(Q0deltaModQ0)],
        (Sm(Q0), O2, 2) => vec![Sm(E)],
        (Sm(Q0), O0, 2) => vec![Sm(E)],
        (D(Q0deltaModQ0), O2, 1) => vec![Sm(E)],
        (D(Q0deltaModQ0), O0, 1) => vec![Sm(E)],
        (Sm(G1), O3 | O2, 1) => vec![Sm(D1)],
        (Sm(GMinus1), O3 | O2, 1) => vec![Sm(D2)],
        _ => Vec::new(),
    }
}

/// Composition factors of `H^k_Z(M)`.
pub fn local_cohomology_factors(m: Object, support: Orbit, k: u32) -> BTreeMap<SimpleId, usize> {
    multiset(local_cohomology(m, support, k).into_iter().flat_map(Object::factors))
}

/// An iterated group computed both directly and by composing lookups.
#[derive(Clone, Debug)]
pub struct IteratedCheck {
    pub description: &'static str,
    pub expected: Vec<SimpleId>,
    pub computed: BTreeMap<SimpleId, usize>,
}

impl IteratedCheck {
    pub fn holds(&self) -> bool {
        self.computed == multiset(self.expected.iter().copied())
    }
}

fn compose(m: Object, steps: &[(Orbit, u32)]) -> BTreeMap<SimpleId, usize> {
    let mut current = vec![m];
    for &(z, k) in steps {
        current = current.into_iter().flat_map(|x| local_cohomology(x, z, k)).collect();
    }
    multiset(current.into_iter().flat_map(Object::factors))
}

/// The iterated local cohomology groups of the polynomial ring.
pub fn iterated_checks() -> Vec<IteratedCheck> {
    let s = Object::Simple(SimpleId::S);
    let cases: [(&'static str, &[(Orbit, u32)], SimpleId); 4] = [
        ("H1_O2(H1_O3(S))", &[(Orbit::O3, 1), (Orbit::O2, 1)], SimpleId::D0),
        ("H3_O0(H1_O3(S))", &[(Orbit::O3, 1), (Orbit::O0, 3)], SimpleId::E),
        ("H2_O0(H2_O2(S))", &[(Orbit::O2, 2), (Orbit::O0, 2)], SimpleId::E),
        ("H2_O0(H1_O2(H1_O3(S)))", &[(Orbit::O3, 1), (Orbit::O2, 1), (Orbit::O0, 2)], SimpleId::E),
    ];
    cases
        .into_iter()
        .map(|(description, steps, expected)| IteratedCheck {
            description,
            expected: vec![expected],
            computed: compose(s, steps),
        })
        .collect()
}
