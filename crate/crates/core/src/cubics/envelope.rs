//! The injective envelope of the isolated-orbit simple, built from `H` and its Fourier transform.

use super::paper_full;
use crate::linalg::Matrix;
use crate::quiver::{cokernel, is_isomorphic, IsoConfig, QuiverError, RepMorphism, Representation};
use crate::Rational;

pub struct Envelope {
    pub h: Representation<Rational>,
    pub fourier_h: Representation<Rational>,
    pub cokernel: Representation<Rational>,
    /// Whether the cokernel is isomorphic to the injective at `p`.
    pub matches_injective: bool,
}

/// Lines at the centre and two outer vertices, with those two `alpha` arrows the identity.
fn star_piece(outer: [&str; 2], alphas: [&str; 2]) -> Result<Representation<Rational>, QuiverError> {
    let bq = paper_full();
    let q = bq.quiver();
    let mut dims = vec![0; q.n_vertices()];
    dims[q.vertex_index("p")?] = 1;
    for v in outer {
        dims[q.vertex_index(v)?] = 1;
    }
    let mut maps: Vec<Matrix<Rational>> =
        q.arrows().iter().map(|a| Matrix::zeros(dims[a.target], dims[a.source])).collect();
    for a in alphas {
        maps[q.arrow_index(a)?] = Matrix::identity(1);
    }
    Representation::new(bq.clone(), dims, maps)
}

fn inclusion_of_p(target: &Representation<Rational>, p: usize) -> Result<RepMorphism<Rational>, QuiverError> {
    let simple = Representation::simple(target.quiver().clone(), p);
    let comps = (0..target.dims().len())
        .map(|v| if v == p { Matrix::identity(1) } else { Matrix::zeros(target.dim(v), 0) })
        .collect();
    RepMorphism::new(simple, target.clone(), comps)
}

/// `0 -> P -> H + F(H) -> I^P -> 0` with the diagonal inclusion.
pub fn envelope_of_p() -> Result<Envelope, QuiverError> {
    let h = star_piece(["d0", "e"], ["alpha2", "alpha3"])?;
    let fourier_h = star_piece(["s", "q0"], ["alpha1", "alpha4"])?;
    let p = paper_full().quiver().vertex_index("p")?;
    let sum = h.direct_sum(&fourier_h)?;
    let (a, b) = (inclusion_of_p(&h, p)?, inclusion_of_p(&fourier_h, p)?);
    let comps = a.components().iter().zip(b.components()).map(|(x, y)| x.vstack(y)).collect();
    let diagonal = RepMorphism::new(a.source().clone(), sum, comps)?;
    let (coker, _) = cokernel(&diagonal)?;
    coker.check_relations()?;
    let injective = Representation::injective(paper_full(), p)?;
    let matches_injective = is_isomorphic(&coker, &injective, IsoConfig::default())?;
    Ok(Envelope { h, fourier_h, cokernel: coker, matches_injective })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cokernel_is_the_injective() {
        let env = envelope_of_p().unwrap();
        assert!(env.matches_injective);
        let q = paper_full();
        let names = ["p", "s", "d0", "e", "q0"];
        for (v, name) in q.quiver().vertices().iter().enumerate() {
            assert_eq!(env.cokernel.dim(v), usize::from(names.contains(&name.as_str())), "{name}");
        }
    }
}
