//! Morphism spaces, kernels, cokernels, images and isomorphism testing.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{QuiverError, RepMorphism, Representation};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// A basis of `Hom(V, W)`, found by solving the intertwining equations exactly.
pub fn hom_space<F: Scalar>(v: &Representation<F>, w: &Representation<F>) -> Result<Vec<RepMorphism<F>>, QuiverError> {
    if !v.quiver().same_as(w.quiver()) {
        return Err(QuiverError::DifferentQuivers);
    }
    let q = v.quiver().quiver();
    let n = q.n_vertices();
    let mut offset = vec![0; n + 1];
    for x in 0..n {
        offset[x + 1] = offset[x] + w.dim(x) * v.dim(x);
    }
    let unknowns = offset[n];
    let mut rows: Vec<Vec<F>> = Vec::new();
    for (ai, a) in q.arrows().iter().enumerate() {
        let (s, t) = (a.source, a.target);
        let (wa, va) = (w.map(ai), v.map(ai));
        // W(a) phi_s - phi_t V(a) = 0, one equation per entry (i, j).
        for i in 0..w.dim(t) {
            for j in 0..v.dim(s) {
                let mut row = vec![F::zero(); unknowns];
                for k in 0..w.dim(s) {
                    let c = wa.get(i, k);
                    if !c.is_zero() {
                        let idx = offset[s] + k * v.dim(s) + j;
                        row[idx] = row[idx].clone() + c.clone();
                    }
                }
                for k in 0..v.dim(t) {
                    let c = va.get(k, j);
                    if !c.is_zero() {
                        let idx = offset[t] + i * v.dim(t) + k;
                        row[idx] = row[idx].clone() - c.clone();
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let system = Matrix::from_rows(rows, unknowns).expect("uniform rows");
    let null = system.nullspace();
    let mut out = Vec::with_capacity(null.cols());
    for c in 0..null.cols() {
        let components = (0..n)
            .map(|x| Matrix::from_fn(w.dim(x), v.dim(x), |i, j| null.get(offset[x] + i * v.dim(x) + j, c).clone()))
            .collect();
        out.push(RepMorphism::new_unchecked(v.clone(), w.clone(), components)?);
    }
    Ok(out)
}

/// Restricts `m` to subspaces: some `X` with `cols_t * X = m * cols_s`.
fn restrict<F: Scalar>(m: &Matrix<F>, cols_s: &Matrix<F>, cols_t: &Matrix<F>) -> Matrix<F> {
    if cols_t.cols() == 0 {
        return Matrix::zeros(0, cols_s.cols());
    }
    cols_t.solve(&(m * cols_s)).expect("subspace is invariant")
}

fn sub_representation<F: Scalar>(v: &Representation<F>, bases: Vec<Matrix<F>>) -> Result<(Representation<F>, RepMorphism<F>), QuiverError> {
    let q = v.quiver().quiver();
    let dims: Vec<usize> = bases.iter().map(Matrix::cols).collect();
    let maps = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, a)| restrict(v.map(ai), &bases[a.source], &bases[a.target]))
        .collect();
    let sub = Representation::new_unchecked(v.quiver().clone(), dims, maps)?;
    let inc = RepMorphism::new_unchecked(sub.clone(), v.clone(), bases)?;
    Ok((sub, inc))
}

/// The kernel and its inclusion.
pub fn kernel<F: Scalar>(phi: &RepMorphism<F>) -> Result<(Representation<F>, RepMorphism<F>), QuiverError> {
    let bases = phi.components().iter().map(Matrix::nullspace).collect();
    sub_representation(phi.source(), bases)
}

/// The image and its inclusion into the target.
pub fn image<F: Scalar>(phi: &RepMorphism<F>) -> Result<(Representation<F>, RepMorphism<F>), QuiverError> {
    let bases = phi.components().iter().map(Matrix::column_space).collect();
    sub_representation(phi.target(), bases)
}

/// The cokernel and the projection onto it.
pub fn cokernel<F: Scalar>(phi: &RepMorphism<F>) -> Result<(Representation<F>, RepMorphism<F>), QuiverError> {
    let w = phi.target();
    let q = w.quiver().quiver();
    let projections: Vec<Matrix<F>> = phi.components().iter().map(Matrix::left_nullspace).collect();
    let sections: Vec<Matrix<F>> = projections
        .iter()
        .map(|p| p.solve(&Matrix::identity(p.rows())).expect("full row rank"))
        .collect();
    let dims: Vec<usize> = projections.iter().map(Matrix::rows).collect();
    let maps = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, a)| &(&projections[a.target] * w.map(ai)) * &sections[a.source])
        .collect();
    let c = Representation::new_unchecked(w.quiver().clone(), dims, maps)?;
    let proj = RepMorphism::new_unchecked(w.clone(), c.clone(), projections)?;
    Ok((c, proj))
}

#[derive(Clone, Copy, Debug)]
pub struct IsoConfig {
    pub seed: u64,
    pub trials: usize,
}

impl Default for IsoConfig {
    fn default() -> Self {
        IsoConfig { seed: 0, trials: 64 }
    }
}

/// Decides `V ~ W`. Returns `Undecided` only when random search fails and no
/// dimension count rules an isomorphism out.
pub fn is_isomorphic<F: Scalar>(v: &Representation<F>, w: &Representation<F>, cfg: IsoConfig) -> Result<bool, QuiverError> {
    if !v.quiver().same_as(w.quiver()) {
        return Err(QuiverError::DifferentQuivers);
    }
    if v.dims() != w.dims() {
        return Ok(false);
    }
    let n = v.total_dim();
    if n == 0 {
        return Ok(true);
    }
    for (ai, _) in v.quiver().quiver().arrows().iter().enumerate() {
        if v.map(ai).rank() != w.map(ai).rank() {
            return Ok(false);
        }
    }
    let hom = hom_space(v, w)?;
    if hom.is_empty() {
        return Ok(false);
    }
    if hom.iter().any(RepMorphism::is_isomorphism) {
        return Ok(true);
    }
    if hom.len() <= 2 {
        // det(a*h0 + h1) has degree n in a; n + 1 zeros force it to vanish identically.
        if hom.len() == 1 {
            return Ok(false);
        }
        for a in 0..=n as i64 {
            let phi = RepMorphism::combination(&[(F::from_i64(a), &hom[0]), (F::one(), &hom[1])]).unwrap();
            if phi.is_isomorphism() {
                return Ok(true);
            }
        }
        return Ok(false);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let range = 4 * n as i64 + 8;
    for _ in 0..cfg.trials {
        let coeffs: Vec<F> = hom.iter().map(|_| F::from_i64(rng.gen_range(-range..=range))).collect();
        let terms: Vec<(F, &RepMorphism<F>)> = coeffs.into_iter().zip(hom.iter()).collect();
        if RepMorphism::combination(&terms).unwrap().is_isomorphism() {
            return Ok(true);
        }
    }
    let counts = [hom.len(), hom_space(w, v)?.len(), hom_space(v, v)?.len(), hom_space(w, w)?.len()];
    if counts.iter().any(|&c| c != counts[0]) {
        return Ok(false);
    }
    Err(QuiverError::Undecided(cfg.trials))
}

#[cfg(test)]
mod tests {
    use super::super::{BoundQuiver, Quiver};
    use super::*;
    use crate::Rational;
    use std::sync::Arc;

    type R = Representation<Rational>;

    fn kronecker() -> Arc<BoundQuiver> {
        BoundQuiver::new("k", Quiver::new(&["1", "2"], &[("a", "1", "2"), ("b", "1", "2")]).unwrap(), vec![]).unwrap()
    }

    fn pencil(lambda: i64) -> R {
        let m = |x: i64| Matrix::from_i64_rows(&[&[x]]);
        R::new(kronecker(), vec![1, 1], vec![m(1), m(lambda)]).unwrap()
    }

    #[test]
    fn hom_between_pencils() {
        assert_eq!(hom_space(&pencil(2), &pencil(2)).unwrap().len(), 1);
        assert_eq!(hom_space(&pencil(2), &pencil(3)).unwrap().len(), 0);
        assert!(!is_isomorphic(&pencil(2), &pencil(3), IsoConfig::default()).unwrap());
        assert!(is_isomorphic(&pencil(2), &pencil(2), IsoConfig::default()).unwrap());
    }

    #[test]
    fn kernel_cokernel_dimensions() {
        let p = pencil(1);
        let s2 = R::simple(p.quiver().clone(), 1);
        let inc = &hom_space(&s2, &p).unwrap()[0];
        let (k, _) = kernel(inc).unwrap();
        assert_eq!(k.total_dim(), 0);
        let (c, proj) = cokernel(inc).unwrap();
        assert_eq!(c.dims(), &[1, 0]);
        assert!(RepMorphism::new(proj.source().clone(), proj.target().clone(), proj.components().to_vec()).is_ok());
        let (im, _) = image(inc).unwrap();
        assert_eq!(im.dims(), &[0, 1]);
    }

    #[test]
    fn base_change_gives_isomorphic() {
        let v = pencil(5).direct_sum(&pencil(5)).unwrap();
        let g1 = Matrix::from_i64_rows(&[&[1, 2], &[0, 1]]);
        let g2 = Matrix::from_i64_rows(&[&[3, 1], &[1, 1]]);
        let w = v.change_basis(&[g1, g2]).unwrap();
        assert!(is_isomorphic(&v, &w, IsoConfig::default()).unwrap());
    }
}
