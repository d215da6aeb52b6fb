use std::fmt;
use std::sync::Arc;

use super::{BoundQuiver, Path, PathBasis, QuiverError};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// A representation: a vector space per vertex and a matrix per arrow.
///
/// The matrix of an arrow `a: s -> t` has shape `dims[t] x dims[s]`.
#[derive(Clone)]
pub struct Representation<F> {
    quiver: Arc<BoundQuiver>,
    dims: Vec<usize>,
    maps: Vec<Matrix<F>>,
}

impl<F: Scalar> Representation<F> {
    pub fn new(quiver: Arc<BoundQuiver>, dims: Vec<usize>, maps: Vec<Matrix<F>>) -> Result<Self, QuiverError> {
        let rep = Self::new_unchecked(quiver, dims, maps)?;
        rep.check_relations()?;
        Ok(rep)
    }

    /// Validates shapes but not relations.
    pub fn new_unchecked(quiver: Arc<BoundQuiver>, dims: Vec<usize>, maps: Vec<Matrix<F>>) -> Result<Self, QuiverError> {
        let q = quiver.quiver();
        if dims.len() != q.n_vertices() {
            return Err(QuiverError::ShapeMismatch(format!(
                "{} dimensions for {} vertices",
                dims.len(),
                q.n_vertices()
            )));
        }
        if maps.len() != q.arrows().len() {
            return Err(QuiverError::ShapeMismatch(format!(
                "{} matrices for {} arrows",
                maps.len(),
                q.arrows().len()
            )));
        }
        for (a, m) in q.arrows().iter().zip(&maps) {
            if m.shape() != (dims[a.target], dims[a.source]) {
                return Err(QuiverError::ShapeMismatch(format!(
                    "arrow {} needs a {}x{} matrix, got {}x{}",
                    a.name,
                    dims[a.target],
                    dims[a.source],
                    m.rows(),
                    m.cols()
                )));
            }
        }
        Ok(Representation { quiver, dims, maps })
    }

    pub fn zero(quiver: Arc<BoundQuiver>) -> Self {
        let dims = vec![0; quiver.quiver().n_vertices()];
        Self::with_zero_maps(quiver, dims)
    }

    /// Given dimensions and all arrows zero.
    pub fn with_zero_maps(quiver: Arc<BoundQuiver>, dims: Vec<usize>) -> Self {
        let maps = quiver.quiver().arrows().iter().map(|a| Matrix::zeros(dims[a.target], dims[a.source])).collect();
        Representation { quiver, dims, maps }
    }

    /// The one-dimensional simple at vertex `v`.
    pub fn simple(quiver: Arc<BoundQuiver>, v: usize) -> Self {
        let mut dims = vec![0; quiver.quiver().n_vertices()];
        dims[v] = 1;
        Self::with_zero_maps(quiver, dims)
    }

    /// Indecomposable projective at `x`: spanned by paths starting at `x`.
    pub fn projective(quiver: Arc<BoundQuiver>, x: usize) -> Result<Self, QuiverError> {
        let basis = quiver.path_basis()?;
        let q = quiver.quiver();
        let spaces: Vec<Vec<usize>> = (0..q.n_vertices()).map(|y| basis.between(x, y)).collect();
        let maps = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let (src, tgt) = (&spaces[a.source], &spaces[a.target]);
                let mut m = Matrix::zeros(tgt.len(), src.len());
                for (j, &b) in src.iter().enumerate() {
                    let img = basis.apply(&[(b, crate::Rational::from_integer(1.into()))].into(), &[ai]);
                    for (i, &c) in tgt.iter().enumerate() {
                        if let Some(x) = img.get(&c) {
                            m.set(i, j, F::from_rational(x));
                        }
                    }
                }
                m
            })
            .collect();
        let dims = spaces.iter().map(Vec::len).collect();
        Self::new_unchecked(quiver.clone(), dims, maps)
    }

    /// Indecomposable injective at `x`: dual to paths ending at `x`.
    pub fn injective(quiver: Arc<BoundQuiver>, x: usize) -> Result<Self, QuiverError> {
        let basis: &PathBasis = quiver.path_basis()?;
        let q = quiver.quiver();
        let spaces: Vec<Vec<usize>> = (0..q.n_vertices()).map(|y| basis.between(y, x)).collect();
        let maps = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let (src, tgt) = (&spaces[a.source], &spaces[a.target]);
                let mut m = Matrix::zeros(tgt.len(), src.len());
                let arrow_elt = basis.reduce(&Path { source: a.source, target: a.target, arrows: vec![ai] });
                for (i, &qb) in tgt.iter().enumerate() {
                    let img = basis.apply(&arrow_elt, &basis.elements()[qb].arrows);
                    for (j, &p) in src.iter().enumerate() {
                        if let Some(x) = img.get(&p) {
                            m.set(i, j, F::from_rational(x));
                        }
                    }
                }
                m
            })
            .collect();
        let dims = spaces.iter().map(Vec::len).collect();
        Self::new_unchecked(quiver.clone(), dims, maps)
    }

    pub fn quiver(&self) -> &Arc<BoundQuiver> {
        &self.quiver
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, v: usize) -> usize {
        self.dims[v]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn maps(&self) -> &[Matrix<F>] {
        &self.maps
    }

    pub fn map(&self, arrow: usize) -> &Matrix<F> {
        &self.maps[arrow]
    }

    pub fn map_named(&self, arrow: &str) -> Result<&Matrix<F>, QuiverError> {
        Ok(&self.maps[self.quiver.quiver().arrow_index(arrow)?])
    }

    /// The linear map of a path.
    pub fn path_map(&self, p: &Path) -> Matrix<F> {
        let mut m = Matrix::identity(self.dims[p.source]);
        for &a in &p.arrows {
            m = &self.maps[a] * &m;
        }
        m
    }

    pub fn check_relations(&self) -> Result<(), QuiverError> {
        for (i, rel) in self.quiver.relations().iter().enumerate() {
            let p0 = &rel.terms[0].1;
            let mut acc = Matrix::<F>::zeros(self.dims[p0.target], self.dims[p0.source]);
            for (c, p) in &rel.terms {
                acc = &acc + &self.path_map(p).scale(&F::from_rational(c));
            }
            if !acc.is_zero() {
                return Err(QuiverError::RelationViolated(i));
            }
        }
        Ok(())
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self, QuiverError> {
        if !self.quiver.same_as(&other.quiver) {
            return Err(QuiverError::DifferentQuivers);
        }
        let dims = self.dims.iter().zip(&other.dims).map(|(a, b)| a + b).collect();
        let maps = self.maps.iter().zip(&other.maps).map(|(a, b)| Matrix::block_diag(&[a.clone(), b.clone()])).collect();
        Ok(Representation { quiver: self.quiver.clone(), dims, maps })
    }

    /// Transports the structure along invertible base changes `g[v]`.
    pub fn change_basis(&self, g: &[Matrix<F>]) -> Result<Self, QuiverError> {
        let mut inverses = Vec::with_capacity(g.len());
        for (v, m) in g.iter().enumerate() {
            if m.shape() != (self.dims[v], self.dims[v]) {
                return Err(QuiverError::ShapeMismatch(format!("base change at vertex {v}")));
            }
            inverses.push(m.inverse().ok_or_else(|| QuiverError::ShapeMismatch(format!("singular base change at vertex {v}")))?);
        }
        let q = self.quiver.quiver();
        let maps = q
            .arrows()
            .iter()
            .zip(&self.maps)
            .map(|(a, m)| &(&g[a.target] * m) * &inverses[a.source])
            .collect();
        Ok(Representation { quiver: self.quiver.clone(), dims: self.dims.clone(), maps })
    }

    /// Whether every arrow in `arrows` acts by zero.
    pub fn vanishes_on(&self, arrows: &[usize]) -> bool {
        arrows.iter().all(|&a| self.maps[a].is_zero())
    }

    pub fn identity(&self) -> RepMorphism<F> {
        RepMorphism {
            source: self.clone(),
            target: self.clone(),
            components: self.dims.iter().map(|&d| Matrix::identity(d)).collect(),
        }
    }
}

/// A morphism of representations: one matrix per vertex commuting with every arrow.
#[derive(Clone)]
pub struct RepMorphism<F> {
    source: Representation<F>,
    target: Representation<F>,
    components: Vec<Matrix<F>>,
}

impl<F: Scalar> RepMorphism<F> {
    pub fn new(source: Representation<F>, target: Representation<F>, components: Vec<Matrix<F>>) -> Result<Self, QuiverError> {
        let m = Self::new_unchecked(source, target, components)?;
        let q = m.source.quiver.quiver();
        for (ai, a) in q.arrows().iter().enumerate() {
            let lhs = &m.target.maps[ai] * &m.components[a.source];
            let rhs = &m.components[a.target] * &m.source.maps[ai];
            if lhs != rhs {
                return Err(QuiverError::NotAMorphism(format!("fails to commute with {}", a.name)));
            }
        }
        Ok(m)
    }

    pub(crate) fn new_unchecked(source: Representation<F>, target: Representation<F>, components: Vec<Matrix<F>>) -> Result<Self, QuiverError> {
        if !source.quiver.same_as(&target.quiver) {
            return Err(QuiverError::DifferentQuivers);
        }
        if components.len() != source.dims.len() {
            return Err(QuiverError::ShapeMismatch("one component per vertex".into()));
        }
        for (v, c) in components.iter().enumerate() {
            if c.shape() != (target.dims[v], source.dims[v]) {
                return Err(QuiverError::ShapeMismatch(format!("component at vertex {v}")));
            }
        }
        Ok(RepMorphism { source, target, components })
    }

    pub fn source(&self) -> &Representation<F> {
        &self.source
    }

    pub fn target(&self) -> &Representation<F> {
        &self.target
    }

    pub fn components(&self) -> &[Matrix<F>] {
        &self.components
    }

    pub fn component(&self, v: usize) -> &Matrix<F> {
        &self.components[v]
    }

    /// `other` after `self`.
    pub fn then(&self, other: &Self) -> Result<Self, QuiverError> {
        let components = self.components.iter().zip(&other.components).map(|(a, b)| b * a).collect();
        Self::new_unchecked(self.source.clone(), other.target.clone(), components)
    }

    pub fn is_isomorphism(&self) -> bool {
        self.components.iter().all(Matrix::is_invertible)
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Matrix::is_zero)
    }

    /// `sum c_i * phi_i` over morphisms with common source and target.
    pub fn combination(terms: &[(F, &Self)]) -> Option<Self> {
        let (_, first) = terms.first()?;
        let mut components: Vec<Matrix<F>> =
            first.components.iter().map(|c| Matrix::zeros(c.rows(), c.cols())).collect();
        for (c, phi) in terms {
            if c.is_zero() {
                continue;
            }
            for (acc, m) in components.iter_mut().zip(&phi.components) {
                *acc = &*acc + &m.scale(c);
            }
        }
        Some(RepMorphism { source: first.source.clone(), target: first.target.clone(), components })
    }
}

impl<F: Scalar> fmt::Debug for Representation<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let q = self.quiver.quiver();
        write!(f, "Representation({}; dims", self.quiver.name())?;
        for (v, d) in q.vertices().iter().zip(&self.dims) {
            write!(f, " {v}:{d}")?;
        }
        for (a, m) in q.arrows().iter().zip(&self.maps) {
            if !m.is_zero() {
                write!(f, "; {}={:?}", a.name, m)?;
            }
        }
        write!(f, ")")
    }
}

impl<F: Scalar> fmt::Debug for RepMorphism<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.components).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::super::{Quiver, Relation};
    use super::*;
    use crate::Rational;

    fn a2() -> Arc<BoundQuiver> {
        BoundQuiver::new("a2", Quiver::new(&["1", "2"], &[("a", "1", "2")]).unwrap(), vec![]).unwrap()
    }

    #[test]
    fn projective_and_injective_of_a2() {
        let q = a2();
        let p1 = Representation::<Rational>::projective(q.clone(), 0).unwrap();
        assert_eq!(p1.dims(), &[1, 1]);
        assert!(!p1.map(0).is_zero());
        let i1 = Representation::<Rational>::injective(q.clone(), 0).unwrap();
        assert_eq!(i1.dims(), &[1, 0]);
        let i2 = Representation::<Rational>::injective(q, 1).unwrap();
        assert_eq!(i2.dims(), &[1, 1]);
    }

    #[test]
    fn shape_and_relation_errors() {
        let q = a2();
        let bad = Representation::<Rational>::new(q, vec![1, 1], vec![Matrix::zeros(2, 1)]);
        assert!(matches!(bad, Err(QuiverError::ShapeMismatch(_))));
        let quiver = Quiver::new(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1")]).unwrap();
        let rel = Relation::monomial(quiver.path(&["a", "b"]).unwrap());
        let bq = BoundQuiver::new("x", quiver, vec![rel]).unwrap();
        let one = Matrix::<Rational>::identity(1);
        let r = Representation::new(bq, vec![1, 1], vec![one.clone(), one]);
        assert_eq!(r.unwrap_err(), QuiverError::RelationViolated(0));
    }
}
