//! Separating the four outer nodes of the big component.

use super::{big_component, separated};
use crate::linalg::Matrix;
use crate::quiver::{QuiverError, Representation};
use crate::scalar::Scalar;

/// `V'_{i'} = Im V(beta_i)` and `V'_i = V_i / Im V(beta_i)` at each outer vertex; the centre is kept.
pub fn separate_node<F: Scalar>(v: &Representation<F>) -> Result<Representation<F>, QuiverError> {
    if !v.quiver().same_as(&big_component()) {
        return Err(QuiverError::DifferentQuivers);
    }
    v.check_relations()?;
    let centre = v.dim(4);
    let mut dims = vec![0; 9];
    dims[8] = centre;
    let mut alphas = Vec::with_capacity(4);
    let mut betas = Vec::with_capacity(4);
    for i in 0..4 {
        let (a, b) = (v.map(i), v.map(4 + i));
        let image = b.column_space();
        let quotient = image.left_nullspace();
        dims[2 * i] = quotient.rows();
        dims[2 * i + 1] = image.cols();
        // alpha_i kills Im beta_i, so it factors through any section of the quotient.
        let section = quotient.solve(&Matrix::identity(quotient.rows())).expect("full row rank");
        alphas.push(a * &section);
        let beta = if image.cols() == 0 { Matrix::zeros(0, centre) } else { image.solve(b).expect("lands in image") };
        betas.push(beta);
    }
    alphas.extend(betas);
    Representation::new(separated(), dims, alphas)
}
