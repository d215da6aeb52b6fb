//! The four subspace quiver, its one-parameter families and the two embeddings.

use super::{big_component, d4hat};
use crate::linalg::Matrix;
use crate::quiver::{QuiverError, Representation};
use crate::scalar::Scalar;

/// Upper triangular `n x n` Jordan block with eigenvalue `lambda`.
pub fn jordan_block<F: Scalar>(n: usize, lambda: &F) -> Matrix<F> {
    Matrix::from_fn(n, n, |i, j| {
        if i == j {
            lambda.clone()
        } else if j == i + 1 {
            F::one()
        } else {
            F::zero()
        }
    })
}

/// `R_n(lambda)`: dims `(n, n, n, n, 2n)` with maps `[I;0]`, `[0;I]`, `[I;I]`, `[I;J_n(lambda)]`.
pub fn regular<F: Scalar>(n: usize, lambda: &F) -> Result<Representation<F>, QuiverError> {
    if n == 0 {
        return Err(QuiverError::ShapeMismatch("R_n needs n >= 1".into()));
    }
    let id = Matrix::<F>::identity(n);
    let zero = Matrix::<F>::zeros(n, n);
    let maps = vec![
        id.vstack(&zero),
        zero.vstack(&id),
        id.vstack(&id),
        id.vstack(&jordan_block(n, lambda)),
    ];
    Representation::new(d4hat(), vec![n, n, n, n, 2 * n], maps)
}

fn check_d4<F: Scalar>(v: &Representation<F>) -> Result<(), QuiverError> {
    if v.quiver().same_as(&d4hat()) {
        Ok(())
    } else {
        Err(QuiverError::DifferentQuivers)
    }
}

/// Same spaces; the `alpha` arrows carry the maps of `V`, the `beta` arrows are zero.
pub fn embed_alpha<F: Scalar>(v: &Representation<F>) -> Result<Representation<F>, QuiverError> {
    check_d4(v)?;
    let mut maps: Vec<Matrix<F>> = v.maps().to_vec();
    for i in 0..4 {
        maps.push(Matrix::zeros(v.dim(i), v.dim(4)));
    }
    Representation::new(big_component(), v.dims().to_vec(), maps)
}

/// Dual spaces; the `beta` arrows carry the transposed maps of `V`, the `alpha` arrows are zero.
pub fn embed_beta<F: Scalar>(v: &Representation<F>) -> Result<Representation<F>, QuiverError> {
    check_d4(v)?;
    let mut maps: Vec<Matrix<F>> = (0..4).map(|i| Matrix::zeros(v.dim(4), v.dim(i))).collect();
    maps.extend(v.maps().iter().map(Matrix::transpose));
    Representation::new(big_component(), v.dims().to_vec(), maps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::{is_indecomposable, is_isomorphic, DecomposeConfig, Indecomposability, IsoConfig};
    use crate::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn r1_columns() {
        let r = regular(1, &q(0)).unwrap();
        let cols: Vec<Vec<Rational>> = r.maps().iter().map(|m| m.column(0)).collect();
        assert_eq!(cols, vec![vec![q(1), q(0)], vec![q(0), q(1)], vec![q(1), q(1)], vec![q(1), q(0)]]);
        let a = embed_alpha(&r).unwrap();
        let ranks: Vec<usize> = a.maps().iter().map(Matrix::rank).collect();
        assert_eq!(ranks, vec![1, 1, 1, 1, 0, 0, 0, 0]);
    }

    #[test]
    fn families_are_indecomposable_and_distinct() {
        let cfg = DecomposeConfig::default();
        assert_eq!(is_indecomposable(&regular(2, &q(7)).unwrap(), cfg).unwrap(), Indecomposability::Indecomposable);
        let b = embed_beta(&regular(3, &q(-2)).unwrap()).unwrap();
        assert_eq!(is_indecomposable(&b, cfg).unwrap(), Indecomposability::Indecomposable);
        assert!(!is_isomorphic(&regular(1, &q(2)).unwrap(), &regular(1, &q(3)).unwrap(), IsoConfig::default()).unwrap());
    }

    #[test]
    fn beta_of_centre_simple() {
        let s5 = Representation::<Rational>::simple(d4hat(), 4);
        assert_eq!(embed_beta(&s5).unwrap().dims(), Representation::<Rational>::simple(big_component(), 4).dims());
        assert!(regular::<Rational>(0, &q(1)).is_err());
    }
}
