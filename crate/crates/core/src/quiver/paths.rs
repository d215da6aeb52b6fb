//! A basis of the path algebra modulo relations, built one path length at a time.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use super::{BoundQuiver, Path, QuiverError};
use crate::linalg::Matrix;
use crate::Rational;

/// Coefficients on basis elements.
pub type PathVector = BTreeMap<usize, Rational>;

/// Basis elements are represented by paths. Reducing `b * a` for a basis
/// element `b` and an arrow `a` is a table lookup, so any product reduces by
/// walking its arrows.
#[derive(Debug, Clone)]
pub struct PathBasis {
    elements: Vec<Path>,
    by_length: Vec<Vec<usize>>,
    step: HashMap<(usize, usize), PathVector>,
}

fn add_scaled(acc: &mut PathVector, v: &PathVector, c: &Rational) {
    for (k, x) in v {
        let e = acc.entry(*k).or_insert_with(Rational::zero);
        *e += x * c;
        if e.is_zero() {
            acc.remove(k);
        }
    }
}

impl PathBasis {
    pub(super) fn build(bq: &BoundQuiver) -> Result<Self, QuiverError> {
        let q = bq.quiver();
        let bound = bq.admissibility_bound();
        let mut basis = PathBasis {
            elements: (0..q.n_vertices()).map(Path::trivial).collect(),
            by_length: vec![(0..q.n_vertices()).collect()],
            step: HashMap::new(),
        };
        let mut k = 1;
        loop {
            let prev = basis.by_length[k - 1].clone();
            let mut candidates = Vec::new();
            for &b in &prev {
                let t = basis.elements[b].target;
                for (a, arrow) in q.arrows().iter().enumerate() {
                    if arrow.source == t {
                        candidates.push((b, a));
                    }
                }
            }
            let index: HashMap<(usize, usize), usize> =
                candidates.iter().enumerate().map(|(i, &c)| (c, i)).collect();

            let mut rows: Vec<Vec<Rational>> = Vec::new();
            for rel in bq.relations() {
                let l = rel.len();
                if l > k {
                    continue;
                }
                let source = rel.terms[0].1.source;
                for &u in &basis.by_length[k - l] {
                    if basis.elements[u].target != source {
                        continue;
                    }
                    let mut row = vec![Rational::zero(); candidates.len()];
                    for (c, p) in &rel.terms {
                        let (last, init) = p.arrows.split_last().unwrap();
                        let prefix = basis.apply(&PathVector::from([(u, Rational::one())]), init);
                        for (b, x) in prefix {
                            row[index[&(b, *last)]] += x * c;
                        }
                    }
                    if row.iter().any(|x| !x.is_zero()) {
                        rows.push(row);
                    }
                }
            }
            let n = candidates.len();
            let rel_matrix = Matrix::from_rows(rows, n).expect("uniform rows");
            let (r, pivots) = rel_matrix.rref();
            let mut new_index = HashMap::new();
            let mut layer = Vec::new();
            for (ci, &(b, a)) in candidates.iter().enumerate() {
                if pivots.contains(&ci) {
                    continue;
                }
                let mut p = basis.elements[b].clone();
                p.arrows.push(a);
                p.target = q.arrows()[a].target;
                let id = basis.elements.len();
                basis.elements.push(p);
                new_index.insert(ci, id);
                layer.push(id);
                basis.step.insert((b, a), PathVector::from([(id, Rational::one())]));
            }
            for (row, &pc) in pivots.iter().enumerate() {
                let mut v = PathVector::new();
                for (ci, id) in &new_index {
                    let x = r.get(row, *ci);
                    if !x.is_zero() {
                        v.insert(*id, -x.clone());
                    }
                }
                basis.step.insert(candidates[pc], v);
            }
            if layer.is_empty() {
                break;
            }
            if k > bound {
                return Err(QuiverError::NonAdmissible(k));
            }
            basis.by_length.push(layer);
            k += 1;
        }
        Ok(basis)
    }

    /// Multiplies a combination of basis elements on the right by a sequence of arrows.
    pub fn apply(&self, v: &PathVector, arrows: &[usize]) -> PathVector {
        let mut cur = v.clone();
        for &a in arrows {
            let mut next = PathVector::new();
            for (b, x) in &cur {
                if let Some(img) = self.step.get(&(*b, a)) {
                    add_scaled(&mut next, img, x);
                }
            }
            cur = next;
        }
        cur
    }

    /// Normal form of a path.
    pub fn reduce(&self, p: &Path) -> PathVector {
        self.apply(&PathVector::from([(p.source, Rational::one())]), &p.arrows)
    }

    /// Product of two basis elements; zero when they do not compose.
    pub fn multiply(&self, i: usize, j: usize) -> PathVector {
        if self.elements[i].target != self.elements[j].source {
            return PathVector::new();
        }
        self.apply(&PathVector::from([(i, Rational::one())]), &self.elements[j].arrows)
    }

    pub fn elements(&self) -> &[Path] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Basis elements from `x` to `y`, in construction order.
    pub fn between(&self, x: usize, y: usize) -> Vec<usize> {
        (0..self.elements.len())
            .filter(|&i| self.elements[i].source == x && self.elements[i].target == y)
            .collect()
    }

    pub fn max_length(&self) -> usize {
        self.by_length.len() - 1
    }
}

#[cfg(test)]
mod tests {
    use super::super::{Quiver, Relation};
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn commutative_square() {
        // a: 1->2, b: 2->4, c: 1->3, d: 3->4 with ab = cd.
        let quiver = Quiver::new(
            &["1", "2", "3", "4"],
            &[("a", "1", "2"), ("b", "2", "4"), ("c", "1", "3"), ("d", "3", "4")],
        )
        .unwrap();
        let rel = Relation {
            terms: vec![(q(1), quiver.path(&["a", "b"]).unwrap()), (q(-1), quiver.path(&["c", "d"]).unwrap())],
        };
        let bq = BoundQuiver::new("square", quiver.clone(), vec![rel]).unwrap();
        let basis = bq.path_basis().unwrap();
        assert_eq!(basis.between(0, 3).len(), 1);
        let ab = basis.reduce(&quiver.path(&["a", "b"]).unwrap());
        let cd = basis.reduce(&quiver.path(&["c", "d"]).unwrap());
        assert_eq!(ab, cd);
        assert_eq!(basis.len(), 4 + 4 + 1);
    }

    #[test]
    fn zero_relations_cut_cycles() {
        let quiver = Quiver::new(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1")]).unwrap();
        let rels = vec![
            Relation::monomial(quiver.path(&["a", "b"]).unwrap()),
            Relation::monomial(quiver.path(&["b", "a"]).unwrap()),
        ];
        let bq = BoundQuiver::new("pair", quiver, rels).unwrap();
        let basis = bq.path_basis().unwrap();
        assert_eq!(basis.len(), 4);
        assert_eq!(basis.max_length(), 1);
    }
}
