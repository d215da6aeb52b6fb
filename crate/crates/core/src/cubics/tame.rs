//! Random representations and the tame classification checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{big_component, partner, two_vertex_pair};
use crate::linalg::Matrix;
use crate::quiver::{decompose, is_isomorphic, DecomposeConfig, Indecomposability, IsoConfig, QuiverError, Representation};
use crate::Rational;

type Rep = Representation<Rational>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TameClass {
    /// Isomorphic to the projective at outer vertex `i` (1-based).
    Projective(usize),
    /// All `beta` arrows vanish.
    AlphaImage,
    /// All `alpha` arrows vanish.
    BetaImage,
    Unclassified,
}

fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Matrix<Rational> {
    Matrix::from_fn(rows, cols, |_, _| Rational::from_integer(rng.gen_range(-3i64..=3).into()))
}

/// A product of two random factors through a space of random dimension, so ranks vary.
fn random_low_rank(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> Matrix<Rational> {
    let r = rng.gen_range(0..=rows.min(cols));
    &random_matrix(rng, rows, r) * &random_matrix(rng, r, cols)
}

/// Independent `alpha` maps, then `beta` maps pushed into the subspace the relations allow;
/// half the time the result is replaced by its transpose-swapped dual.
pub fn sample_big_component(rng: &mut ChaCha8Rng, max_outer: usize, max_centre: usize) -> Result<Rep, QuiverError> {
    let mut dims: Vec<usize> = (0..4).map(|_| rng.gen_range(0..=max_outer)).collect();
    dims.push(rng.gen_range(0..=max_centre));
    let c = dims[4];
    let alphas: Vec<Matrix<Rational>> = (0..4).map(|i| random_low_rank(rng, c, dims[i])).collect();
    let mut betas = Vec::with_capacity(4);
    for j in 0..4 {
        // beta_j must kill Im alpha_i unless i is the partner of j, and land in ker alpha_j.
        let mut killed = Matrix::zeros(c, 0);
        for (i, a) in alphas.iter().enumerate() {
            if i + 1 != partner(j + 1) {
                killed = killed.hstack(a);
            }
        }
        let functionals = killed.left_nullspace();
        let room = alphas[j].nullspace();
        let middle = if rng.gen_bool(0.2) {
            Matrix::zeros(room.cols(), functionals.rows())
        } else {
            random_low_rank(rng, room.cols(), functionals.rows())
        };
        betas.push(&(&room * &middle) * &functionals);
    }
    let (alphas, betas) = if rng.gen_bool(0.5) {
        (betas.iter().map(Matrix::transpose).collect(), alphas.iter().map(Matrix::transpose).collect())
    } else {
        (alphas, betas)
    };
    let maps = alphas.into_iter().chain(betas).collect();
    Representation::new(big_component(), dims, maps)
}

pub fn classify_summand(v: &Rep) -> Result<TameClass, QuiverError> {
    if (4..8).all(|a| v.map(a).is_zero()) {
        return Ok(TameClass::AlphaImage);
    }
    if (0..4).all(|a| v.map(a).is_zero()) {
        return Ok(TameClass::BetaImage);
    }
    for i in 0..4 {
        let p = Representation::projective(big_component(), i)?;
        if p.dims() == v.dims() && is_isomorphic(&p, v, IsoConfig::default())? {
            return Ok(TameClass::Projective(i + 1));
        }
    }
    Ok(TameClass::Unclassified)
}

#[derive(Clone, Debug, Default)]
pub struct TameReport {
    pub samples: usize,
    pub summands: usize,
    /// Samples whose decomposition left at least one summand uncertified.
    pub inconclusive_samples: usize,
    pub inconclusive_summands: usize,
    pub projective: [usize; 4],
    pub alpha_images: usize,
    pub beta_images: usize,
    pub violations: Vec<String>,
}

impl TameReport {
    pub fn inconclusive_rate(&self) -> f64 {
        if self.samples == 0 {
            0.0
        } else {
            self.inconclusive_samples as f64 / self.samples as f64
        }
    }

    fn absorb(&mut self, label: &str, v: &Rep, cfg: DecomposeConfig) -> Result<(), QuiverError> {
        self.samples += 1;
        let parts = decompose(v, cfg)?;
        let mut uncertain = false;
        for s in parts {
            self.summands += 1;
            if s.verdict != Indecomposability::Indecomposable {
                uncertain = true;
                self.inconclusive_summands += 1;
                continue;
            }
            match classify_summand(&s.rep)? {
                TameClass::Projective(i) => self.projective[i - 1] += 1,
                TameClass::AlphaImage => self.alpha_images += 1,
                TameClass::BetaImage => self.beta_images += 1,
                TameClass::Unclassified => self.violations.push(format!("{label}: {:?}", s.rep)),
            }
        }
        if uncertain {
            self.inconclusive_samples += 1;
        }
        Ok(())
    }
}

fn sample_seed(seed: u64, k: usize) -> u64 {
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(k as u64)
}

/// Decomposes `samples` random representations and sorts each certified summand into a case.
pub fn tame_check(samples: usize, max_outer: usize, max_centre: usize, seed: u64) -> Result<TameReport, QuiverError> {
    let mut report = TameReport::default();
    for k in 0..samples {
        let s = sample_seed(seed, k);
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        let v = sample_big_component(&mut rng, max_outer, max_centre)?;
        report.absorb(&format!("sample {k}"), &v, DecomposeConfig { seed: s, ..Default::default() })?;
    }
    Ok(report)
}

pub fn sample_two_vertex(rng: &mut ChaCha8Rng, max_dim: usize) -> Result<Rep, QuiverError> {
    let (a, b) = (rng.gen_range(0..=max_dim), rng.gen_range(0..=max_dim));
    let gamma = random_low_rank(rng, b, a);
    let room = gamma.nullspace();
    let functionals = gamma.left_nullspace();
    let delta = &(&room * &random_low_rank(rng, room.cols(), functionals.rows())) * &functionals;
    Representation::new(two_vertex_pair(), vec![a, b], vec![gamma, delta])
}

/// The two simples and the two length-two modules.
pub fn two_vertex_indecomposables() -> Vec<Rep> {
    let q = two_vertex_pair();
    let one = || Matrix::identity(1);
    let zero = || Matrix::zeros(1, 1);
    vec![
        Representation::simple(q.clone(), 0),
        Representation::simple(q.clone(), 1),
        Representation::new(q.clone(), vec![1, 1], vec![one(), zero()]).expect("valid"),
        Representation::new(q, vec![1, 1], vec![zero(), one()]).expect("valid"),
    ]
}

#[derive(Clone, Debug, Default)]
pub struct TwoVertexReport {
    pub samples: usize,
    pub summands: usize,
    pub inconclusive_summands: usize,
    /// Occurrences of each member of `two_vertex_indecomposables`.
    pub counts: [usize; 4],
    pub violations: Vec<String>,
}

pub fn two_vertex_check(samples: usize, max_dim: usize, seed: u64) -> Result<TwoVertexReport, QuiverError> {
    let known = two_vertex_indecomposables();
    let mut report = TwoVertexReport::default();
    for k in 0..samples {
        let s = sample_seed(seed, k);
        let mut rng = ChaCha8Rng::seed_from_u64(s);
        let v = sample_two_vertex(&mut rng, max_dim)?;
        report.samples += 1;
        for part in decompose(&v, DecomposeConfig { seed: s, ..Default::default() })? {
            report.summands += 1;
            if part.verdict != Indecomposability::Indecomposable {
                report.inconclusive_summands += 1;
                continue;
            }
            let mut found = false;
            for (i, w) in known.iter().enumerate() {
                if is_isomorphic(w, &part.rep, IsoConfig::default())? {
                    report.counts[i] += 1;
                    found = true;
                    break;
                }
            }
            if !found {
                report.violations.push(format!("sample {k}: {:?}", part.rep));
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cubics::{embed_alpha, embed_beta, regular};

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn samples_satisfy_relations() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..30 {
            sample_big_component(&mut rng, 3, 6).unwrap();
            sample_two_vertex(&mut rng, 4).unwrap();
        }
    }

    #[test]
    fn projective_is_case_one() {
        let p3 = Representation::projective(big_component(), 2).unwrap();
        assert_eq!(classify_summand(&p3).unwrap(), TameClass::Projective(3));
    }

    #[test]
    fn conjugated_sum_recovers_both_cases() {
        let v = embed_alpha(&regular(1, &q(2)).unwrap()).unwrap().direct_sum(&embed_beta(&regular(1, &q(3)).unwrap()).unwrap()).unwrap();
        let g: Vec<Matrix<Rational>> = v
            .dims()
            .iter()
            .map(|&d| Matrix::from_fn(d, d, |i, j| q(if i == j { 2 } else if i < j { 1 } else { 0 })))
            .collect();
        let w = v.change_basis(&g).unwrap();
        let mut report = TameReport::default();
        report.absorb("oracle", &w, DecomposeConfig::default()).unwrap();
        assert_eq!((report.alpha_images, report.beta_images, report.violations.len()), (1, 1, 0));
    }

    #[test]
    fn zero_is_vacuous() {
        let mut report = TameReport::default();
        report.absorb("zero", &Representation::zero(big_component()), DecomposeConfig::default()).unwrap();
        assert_eq!(report.summands, 0);
    }
}
