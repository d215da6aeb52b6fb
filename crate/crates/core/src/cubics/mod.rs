//! The quiver with relations governing the category, and its pieces.

mod d4;
mod envelope;
mod node;
mod tame;

use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use crate::catalog::SimpleId;
use crate::quiver::{BoundQuiver, Quiver, Relation};

pub use d4::{embed_alpha, embed_beta, jordan_block, regular};
pub use envelope::{envelope_of_p, Envelope};
pub use node::separate_node;
pub use tame::{
    classify_summand, sample_big_component, sample_two_vertex, tame_check, two_vertex_check,
    two_vertex_indecomposables, TameClass, TameReport, TwoVertexReport,
};

/// Vertices of the full quiver, one per simple.
pub const FULL_VERTICES: [(&str, SimpleId); 14] = [
    ("s", SimpleId::S),
    ("d0", SimpleId::D0),
    ("p", SimpleId::P),
    ("q0", SimpleId::Q0),
    ("e", SimpleId::E),
    ("g1", SimpleId::G1),
    ("d1", SimpleId::D1),
    ("g-1", SimpleId::GMinus1),
    ("d2", SimpleId::D2),
    ("q1", SimpleId::Q1),
    ("q2", SimpleId::Q2),
    ("g2", SimpleId::G2),
    ("g3", SimpleId::G3),
    ("g4", SimpleId::G4),
];

/// Pairs `(i, j)` for which the source asserts `P^i ~ I^j` over the big component.
pub const CLAIMED_PROJECTIVE_INJECTIVE: [(usize, usize); 4] = [(1, 2), (2, 1), (3, 4), (4, 3)];

/// Compositions through the centre that survive: `alpha_i` then `beta_j`.
pub const SURVIVING_PAIRS: [(usize, usize); 4] = [(1, 3), (3, 1), (2, 4), (4, 2)];

/// The partner `j` of an outer vertex `i`, so that `alpha_i beta_j` is nonzero.
pub fn partner(i: usize) -> usize {
    SURVIVING_PAIRS.iter().find(|(a, _)| *a == i).map(|&(_, b)| b).expect("outer vertex 1..=4")
}

pub fn vertex_of(s: SimpleId) -> usize {
    FULL_VERTICES.iter().position(|&(_, id)| id == s).unwrap()
}

pub fn simple_at(v: usize) -> SimpleId {
    FULL_VERTICES[v].1
}

fn monomials(q: &Quiver, pairs: &[(&str, &str)]) -> Vec<Relation> {
    pairs.iter().map(|&(a, b)| Relation::monomial(q.path(&[a, b]).expect("composable"))).collect()
}

/// The sixteen zero relations of the five-vertex component, in arrow names `alpha{i}`, `beta{i}`.
fn star_relations(primed_targets: bool) -> Vec<(String, String)> {
    let mut out = Vec::new();
    for i in 1..=4 {
        out.push((format!("alpha{i}"), format!("beta{i}")));
        if !primed_targets {
            out.push((format!("beta{i}"), format!("alpha{i}")));
        }
    }
    for i in 1..=4 {
        for j in 1..=4 {
            if i != j && partner(i) != j {
                out.push((format!("alpha{i}"), format!("beta{j}")));
            }
        }
    }
    out
}

fn build_star(name: &str, vertices: &[&str], centre: &str, outer: [&str; 4], targets: [&str; 4], primed: bool) -> Arc<BoundQuiver> {
    let names: Vec<(String, String)> = (1..=4).map(|i| (format!("alpha{i}"), format!("beta{i}"))).collect();
    let mut arrows: Vec<(&str, &str, &str)> = Vec::new();
    for k in 0..4 {
        arrows.push((names[k].0.as_str(), outer[k], centre));
    }
    for k in 0..4 {
        arrows.push((names[k].1.as_str(), centre, targets[k]));
    }
    let q = Quiver::new(vertices, &arrows).expect("static quiver");
    let rels = star_relations(primed);
    let pairs: Vec<(&str, &str)> = rels.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    let relations = monomials(&q, &pairs);
    BoundQuiver::new(name, q, relations).expect("static relations")
}

/// Five vertices `1..5` with `1=s, 2=d0, 3=e, 4=q0, 5=p`.
pub fn big_component() -> Arc<BoundQuiver> {
    static Q: OnceLock<Arc<BoundQuiver>> = OnceLock::new();
    Q.get_or_init(|| {
        let outer = ["1", "2", "3", "4"];
        build_star("big_component", &["1", "2", "3", "4", "5"], "5", outer, outer, false)
    })
    .clone()
}

/// The big component with each outer vertex split into an outgoing and an incoming copy.
pub fn separated() -> Arc<BoundQuiver> {
    static Q: OnceLock<Arc<BoundQuiver>> = OnceLock::new();
    Q.get_or_init(|| {
        build_star(
            "separated",
            &["1", "1'", "2", "2'", "3", "3'", "4", "4'", "5"],
            "5",
            ["1", "2", "3", "4"],
            ["1'", "2'", "3'", "4'"],
            true,
        )
    })
    .clone()
}

/// The extended Dynkin quiver with four arrows into the centre.
pub fn d4hat() -> Arc<BoundQuiver> {
    static Q: OnceLock<Arc<BoundQuiver>> = OnceLock::new();
    Q.get_or_init(|| {
        let q = Quiver::new(
            &["1", "2", "3", "4", "5"],
            &[("alpha1", "1", "5"), ("alpha2", "2", "5"), ("alpha3", "3", "5"), ("alpha4", "4", "5")],
        )
        .expect("static quiver");
        BoundQuiver::new("d4hat", q, Vec::new()).expect("no relations")
    })
    .clone()
}

/// Two vertices with arrows both ways and both compositions zero.
pub fn two_vertex_pair() -> Arc<BoundQuiver> {
    static Q: OnceLock<Arc<BoundQuiver>> = OnceLock::new();
    Q.get_or_init(|| {
        let q = Quiver::new(&["1", "2"], &[("gamma", "1", "2"), ("delta", "2", "1")]).expect("static quiver");
        let rels = monomials(&q, &[("gamma", "delta"), ("delta", "gamma")]);
        BoundQuiver::new("two_vertex_pair", q, rels).expect("static relations")
    })
    .clone()
}

/// All fourteen vertices.
pub fn paper_full() -> Arc<BoundQuiver> {
    static Q: OnceLock<Arc<BoundQuiver>> = OnceLock::new();
    Q.get_or_init(|| {
        let vertices: Vec<&str> = FULL_VERTICES.iter().map(|(n, _)| *n).collect();
        let outer = ["s", "d0", "e", "q0"];
        let mut arrows = Vec::new();
        let names: Vec<(String, String)> = (1..=4).map(|i| (format!("alpha{i}"), format!("beta{i}"))).collect();
        for k in 0..4 {
            arrows.push((names[k].0.as_str(), outer[k], "p"));
        }
        for k in 0..4 {
            arrows.push((names[k].1.as_str(), "p", outer[k]));
        }
        arrows.push(("gamma1", "g1", "d1"));
        arrows.push(("delta1", "d1", "g1"));
        arrows.push(("gamma-1", "g-1", "d2"));
        arrows.push(("delta-1", "d2", "g-1"));
        let q = Quiver::new(&vertices, &arrows).expect("static quiver");
        let mut rels = star_relations(false);
        for (g, d) in [("gamma1", "delta1"), ("gamma-1", "delta-1")] {
            rels.push((g.into(), d.into()));
            rels.push((d.into(), g.into()));
        }
        let pairs: Vec<(&str, &str)> = rels.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
        let relations = monomials(&q, &pairs);
        BoundQuiver::new("paper_full", q, relations).expect("static relations")
    })
    .clone()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NamedQuiver {
    PaperFull,
    BigComponent,
    Separated,
    D4Hat,
    TwoVertexPair,
}

impl NamedQuiver {
    pub const ALL: [NamedQuiver; 5] = [
        NamedQuiver::PaperFull,
        NamedQuiver::BigComponent,
        NamedQuiver::Separated,
        NamedQuiver::D4Hat,
        NamedQuiver::TwoVertexPair,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NamedQuiver::PaperFull => "paper_full",
            NamedQuiver::BigComponent => "big_component",
            NamedQuiver::Separated => "separated",
            NamedQuiver::D4Hat => "d4hat",
            NamedQuiver::TwoVertexPair => "two_vertex_pair",
        }
    }

    pub fn build(self) -> Arc<BoundQuiver> {
        match self {
            NamedQuiver::PaperFull => paper_full(),
            NamedQuiver::BigComponent => big_component(),
            NamedQuiver::Separated => separated(),
            NamedQuiver::D4Hat => d4hat(),
            NamedQuiver::TwoVertexPair => two_vertex_pair(),
        }
    }
}

impl FromStr for NamedQuiver {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        NamedQuiver::ALL
            .into_iter()
            .find(|q| q.name() == s)
            .ok_or_else(|| format!("unknown quiver '{s}'; expected paper_full, big_component, separated, d4hat or two_vertex_pair"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        let full = paper_full();
        assert_eq!(full.quiver().n_vertices(), 14);
        assert_eq!(full.quiver().arrows().len(), 12);
        assert_eq!(full.relations().len(), 20);
        assert_eq!(big_component().relations().len(), 16);
        assert_eq!(separated().quiver().n_vertices(), 9);
        assert_eq!(separated().relations().len(), 12);
    }

    #[test]
    fn surviving_paths() {
        let full = paper_full();
        let q = full.quiver();
        let basis = full.path_basis().unwrap();
        let v = |n: &str| q.vertex_index(n).unwrap();
        let es = basis.between(v("e"), v("s"));
        assert_eq!(es.len(), 1);
        assert_eq!(basis.elements()[es[0]].display(q), "alpha3*beta1");
        let long: Vec<_> = basis.elements().iter().filter(|p| p.len() == 2).map(|p| p.display(q)).collect();
        assert_eq!(long.len(), 4);
        assert_eq!(basis.max_length(), 2);
    }
}
