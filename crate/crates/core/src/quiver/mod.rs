//! Finite quivers with relations and their representations over an exact field.
//!
//! Paths compose left to right: `ab` means `a` followed by `b`, so a
//! representation sends it to `V(b) * V(a)`.

mod decompose;
mod hom;
mod paths;
mod rep;

use std::fmt;
use std::sync::{Arc, OnceLock};

use num_traits::Zero;
use thiserror::Error;

use crate::Rational;

pub use decompose::{
    decompose, is_indecomposable, DecomposeConfig, EndAlgebra, Indecomposability, Summand,
};
pub use hom::{cokernel, hom_space, image, is_isomorphic, kernel, IsoConfig};
pub use paths::{PathBasis, PathVector};
pub use rep::{RepMorphism, Representation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuiverError {
    #[error("unknown vertex '{0}'")]
    UnknownVertex(String),
    #[error("unknown arrow '{0}'")]
    UnknownArrow(String),
    #[error("duplicate name '{0}'")]
    DuplicateName(String),
    #[error("arrows do not compose into a path: {0}")]
    InvalidPath(String),
    #[error("invalid relation: {0}")]
    InvalidRelation(String),
    #[error("relations are not admissible: nonzero paths of length {0} remain")]
    NonAdmissible(usize),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("relation {0} does not hold")]
    RelationViolated(usize),
    #[error("representations live on different quivers")]
    DifferentQuivers,
    #[error("not a morphism: {0}")]
    NotAMorphism(String),
    #[error("isomorphism undecided after {0} trials")]
    Undecided(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    /// Arrows are given as `(name, source vertex, target vertex)`.
    pub fn new(vertices: &[&str], arrows: &[(&str, &str, &str)]) -> Result<Self, QuiverError> {
        let vertices: Vec<String> = vertices.iter().map(|v| v.to_string()).collect();
        for (i, v) in vertices.iter().enumerate() {
            if vertices[..i].contains(v) {
                return Err(QuiverError::DuplicateName(v.clone()));
            }
        }
        let mut q = Quiver { vertices, arrows: Vec::new() };
        for &(name, s, t) in arrows {
            if q.arrow_index(name).is_ok() {
                return Err(QuiverError::DuplicateName(name.into()));
            }
            let source = q.vertex_index(s)?;
            let target = q.vertex_index(t)?;
            q.arrows.push(Arrow { name: name.into(), source, target });
        }
        Ok(q)
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_index(&self, name: &str) -> Result<usize, QuiverError> {
        self.vertices.iter().position(|v| v == name).ok_or_else(|| QuiverError::UnknownVertex(name.into()))
    }

    pub fn arrow_index(&self, name: &str) -> Result<usize, QuiverError> {
        self.arrows.iter().position(|a| a.name == name).ok_or_else(|| QuiverError::UnknownArrow(name.into()))
    }

    pub fn arrow_count(&self, from: usize, to: usize) -> usize {
        self.arrows.iter().filter(|a| a.source == from && a.target == to).count()
    }

    /// A path through the named arrows.
    pub fn path(&self, names: &[&str]) -> Result<Path, QuiverError> {
        let arrows = names.iter().map(|n| self.arrow_index(n)).collect::<Result<Vec<_>, _>>()?;
        Path::new(self, arrows)
    }
}

/// A path; the empty arrow list is the trivial path at `source`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn new(q: &Quiver, arrows: Vec<usize>) -> Result<Self, QuiverError> {
        let first = arrows.first().ok_or_else(|| QuiverError::InvalidPath("empty arrow list".into()))?;
        for pair in arrows.windows(2) {
            let (a, b) = (&q.arrows[pair[0]], &q.arrows[pair[1]]);
            if a.target != b.source {
                return Err(QuiverError::InvalidPath(format!("{} then {}", a.name, b.name)));
            }
        }
        let source = q.arrows[*first].source;
        let target = q.arrows[*arrows.last().unwrap()].target;
        Ok(Path { source, target, arrows })
    }

    pub fn trivial(v: usize) -> Self {
        Path { source: v, target: v, arrows: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn display(&self, q: &Quiver) -> String {
        if self.arrows.is_empty() {
            return format!("e_{}", q.vertices[self.source]);
        }
        self.arrows.iter().map(|&a| q.arrows[a].name.as_str()).collect::<Vec<_>>().join("*")
    }
}

/// A linear combination of parallel paths of one length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(Rational, Path)>,
}

impl Relation {
    pub fn monomial(p: Path) -> Self {
        Relation { terms: vec![(Rational::from_integer(1.into()), p)] }
    }

    pub fn len(&self) -> usize {
        self.terms.first().map_or(0, |(_, p)| p.len())
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn validate(&self) -> Result<(), QuiverError> {
        let bad = |m: &str| Err(QuiverError::InvalidRelation(m.into()));
        let Some((_, first)) = self.terms.first() else {
            return bad("relation has no terms");
        };
        if first.len() < 2 {
            return bad("relation paths must have length at least 2");
        }
        for (c, p) in &self.terms {
            if c.is_zero() {
                return bad("zero coefficient");
            }
            if p.source != first.source || p.target != first.target {
                return bad("paths in a relation must be parallel");
            }
            if p.len() != first.len() {
                return bad("paths in a relation must have equal length");
            }
        }
        Ok(())
    }
}

/// A quiver together with its relations.
pub struct BoundQuiver {
    name: String,
    quiver: Quiver,
    relations: Vec<Relation>,
    basis: OnceLock<Result<PathBasis, QuiverError>>,
}

impl BoundQuiver {
    pub fn new(name: &str, quiver: Quiver, relations: Vec<Relation>) -> Result<Arc<Self>, QuiverError> {
        for r in &relations {
            r.validate()?;
        }
        Ok(Arc::new(BoundQuiver { name: name.into(), quiver, relations, basis: OnceLock::new() }))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    /// Longest path length that may be nonzero: vertices times the longest relation.
    pub fn admissibility_bound(&self) -> usize {
        let longest = self.relations.iter().map(Relation::len).max().unwrap_or(1).max(1);
        self.quiver.n_vertices() * longest
    }

    /// The basis of the path algebra modulo relations, computed once.
    pub fn path_basis(&self) -> Result<&PathBasis, QuiverError> {
        self.basis.get_or_init(|| PathBasis::build(self)).as_ref().map_err(Clone::clone)
    }

    pub fn same_as(&self, other: &BoundQuiver) -> bool {
        std::ptr::eq(self, other)
            || (self.quiver == other.quiver && self.relations == other.relations)
    }
}

impl fmt::Debug for BoundQuiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "BoundQuiver({}: {} vertices, {} arrows, {} relations)",
            self.name,
            self.quiver.n_vertices(),
            self.quiver.arrows.len(),
            self.relations.len()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn paths_must_compose() {
        let q = Quiver::new(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1")]).unwrap();
        assert!(q.path(&["a", "b"]).is_ok());
        assert!(q.path(&["a", "a"]).is_err());
        assert!(Quiver::new(&["1", "1"], &[]).is_err());
    }

    #[test]
    fn relations_are_checked() {
        let q = Quiver::new(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1")]).unwrap();
        let short = Relation::monomial(q.path(&["a"]).unwrap());
        assert!(BoundQuiver::new("x", q.clone(), vec![short]).is_err());
        let cycle = BoundQuiver::new("x", q, vec![]).unwrap();
        assert!(matches!(cycle.path_basis(), Err(QuiverError::NonAdmissible(_))));
    }
}
