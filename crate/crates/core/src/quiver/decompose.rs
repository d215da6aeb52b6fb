//! Splitting representations into indecomposable summands via their endomorphism algebra.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{hom_space, kernel, QuiverError, RepMorphism, Representation};
use crate::linalg::Matrix;
use crate::poly::Poly;
use crate::scalar::Scalar;
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Indecomposability {
    Indecomposable,
    Decomposable,
    /// No splitting element was found and no certificate applies.
    Inconclusive,
}

#[derive(Clone, Copy, Debug)]
pub struct DecomposeConfig {
    pub seed: u64,
    /// Random endomorphisms tried per piece after the basis elements.
    pub trials: usize,
}

impl Default for DecomposeConfig {
    fn default() -> Self {
        DecomposeConfig { seed: 0, trials: 40 }
    }
}

#[derive(Clone)]
pub struct Summand<F> {
    pub rep: Representation<F>,
    /// `Indecomposable` or `Inconclusive`.
    pub verdict: Indecomposability,
}

/// `End(V)` with a chosen basis.
#[derive(Clone)]
pub struct EndAlgebra<F> {
    basis: Vec<RepMorphism<F>>,
}

impl<F: Scalar> std::fmt::Debug for Summand<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?} [{:?}]", self.rep, self.verdict)
    }
}

fn flatten<F: Scalar>(phi: &RepMorphism<F>) -> Vec<F> {
    phi.components().iter().flat_map(|m| m.data().iter().cloned()).collect()
}

impl<F: Scalar> EndAlgebra<F> {
    pub fn new(v: &Representation<F>) -> Result<Self, QuiverError> {
        Ok(EndAlgebra { basis: hom_space(v, v)? })
    }

    pub fn basis(&self) -> &[RepMorphism<F>] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of an endomorphism in the basis.
    pub fn coordinates(&self, phi: &RepMorphism<F>) -> Option<Vec<F>> {
        let cols: Vec<Vec<F>> = self.basis.iter().map(flatten).collect();
        let len = flatten(phi).len();
        let b = Matrix::from_fn(len, cols.len(), |i, j| cols[j][i].clone());
        let target = Matrix::from_vec(len, 1, flatten(phi));
        b.solve(&target).map(|x| x.column(0))
    }

    /// `c[i][j][k]` with `e_i e_j = sum_k c[i][j][k] e_k`, where `e_i e_j` means `e_j` then `e_i`.
    pub fn structure_constants(&self) -> Vec<Vec<Vec<F>>> {
        self.basis
            .iter()
            .map(|ei| {
                self.basis
                    .iter()
                    .map(|ej| self.coordinates(&ej.then(ei).expect("same shapes")).expect("closed under composition"))
                    .collect()
            })
            .collect()
    }

    /// Gram matrix of `(a, b) -> tr(ab)` acting on the underlying space of `V`.
    pub fn trace_form(&self) -> Matrix<F> {
        let k = self.basis.len();
        Matrix::from_fn(k, k, |i, j| {
            let (a, b) = (&self.basis[i], &self.basis[j]);
            let mut t = F::zero();
            for (ma, mb) in a.components().iter().zip(b.components()) {
                let d = ma.rows();
                for p in 0..d {
                    for q in 0..d {
                        t = t + ma.get(p, q).clone() * mb.get(q, p).clone();
                    }
                }
            }
            t
        })
    }

    /// Coordinates (as rows) of a basis of the Jacobson radical.
    ///
    /// In characteristic zero the radical is the kernel of the trace form of
    /// any faithful module, here `V` itself.
    pub fn radical(&self) -> Matrix<F> {
        self.trace_form().left_nullspace()
    }

    /// `dim End(V) / rad`.
    pub fn semisimple_dim(&self) -> usize {
        self.trace_form().rank()
    }
}

/// Minimal polynomial of an endomorphism, through the powers of its components.
fn minimal_polynomial<F: Scalar>(phi: &RepMorphism<F>) -> Poly {
    let id = phi.source().identity();
    let mut powers = vec![flatten(&id)];
    let mut cur = id;
    loop {
        cur = cur.then(phi).expect("endomorphism");
        let v = flatten(&cur);
        let len = v.len();
        let basis = Matrix::from_fn(len, powers.len(), |i, j| powers[j][i].clone());
        if let Some(c) = basis.solve(&Matrix::from_vec(len, 1, v.clone())) {
            let mut coeffs: Vec<Rational> = c.column(0).iter().map(|x| -x.to_rational()).collect();
            coeffs.push(Rational::from_integer(1.into()));
            return Poly::new(coeffs);
        }
        powers.push(v);
    }
}

fn evaluate<F: Scalar>(p: &Poly, phi: &RepMorphism<F>) -> RepMorphism<F> {
    let comps = phi
        .components()
        .iter()
        .map(|m| {
            let mut acc = Matrix::zeros(m.rows(), m.cols());
            for c in p.coeffs().iter().rev() {
                acc = &(&acc * m) + &Matrix::identity(m.rows()).scale(&F::from_rational(c));
            }
            acc
        })
        .collect();
    RepMorphism::new_unchecked(phi.source().clone(), phi.target().clone(), comps).expect("same shapes")
}

enum Step<F> {
    Split(Representation<F>, Representation<F>),
    Certified,
    Stuck,
}

fn examine<F: Scalar>(v: &Representation<F>, cfg: DecomposeConfig, rng: &mut ChaCha8Rng) -> Result<Step<F>, QuiverError> {
    let end = EndAlgebra::new(v)?;
    let d = end.semisimple_dim();
    if d == 1 {
        return Ok(Step::Certified);
    }
    let k = end.dim();
    let basis = end.basis();
    let mut candidates: Vec<Vec<i64>> = (0..k).map(|i| (0..k).map(|j| i64::from(i == j)).collect()).collect();
    for _ in 0..cfg.trials {
        candidates.push((0..k).map(|_| rng.gen_range(-3..=3)).collect());
    }
    for coeffs in candidates {
        let terms: Vec<(F, &RepMorphism<F>)> = coeffs.iter().map(|&c| F::from_i64(c)).zip(basis.iter()).collect();
        let phi = RepMorphism::combination(&terms).expect("nonempty basis");
        let f = minimal_polynomial(&phi);
        let factors = f.factor();
        if factors.len() >= 2 {
            let (g, m) = &factors[0];
            let g_part = g.pow(*m);
            let rest = f.divrem(&g_part).0;
            let (u1, _) = kernel(&evaluate(&g_part, &phi))?;
            let (u2, _) = kernel(&evaluate(&rest, &phi))?;
            return Ok(Step::Split(u1, u2));
        }
        // A single irreducible factor of degree dim(End/rad) generates End/rad as a field.
        if factors.len() == 1 && factors[0].0.degree() == Some(d) {
            return Ok(Step::Certified);
        }
    }
    Ok(Step::Stuck)
}

fn split_into<F: Scalar>(
    v: Representation<F>,
    cfg: DecomposeConfig,
    rng: &mut ChaCha8Rng,
    out: &mut Vec<Summand<F>>,
) -> Result<(), QuiverError> {
    if v.total_dim() == 0 {
        return Ok(());
    }
    match examine(&v, cfg, rng)? {
        Step::Split(a, b) => {
            split_into(a, cfg, rng, out)?;
            split_into(b, cfg, rng, out)
        }
        Step::Certified => {
            out.push(Summand { rep: v, verdict: Indecomposability::Indecomposable });
            Ok(())
        }
        Step::Stuck => {
            out.push(Summand { rep: v, verdict: Indecomposability::Inconclusive });
            Ok(())
        }
    }
}

/// Splits `V` into summands, each certified indecomposable or flagged inconclusive.
pub fn decompose<F: Scalar>(v: &Representation<F>, cfg: DecomposeConfig) -> Result<Vec<Summand<F>>, QuiverError> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut out = Vec::new();
    split_into(v.clone(), cfg, &mut rng, &mut out)?;
    Ok(out)
}

pub fn is_indecomposable<F: Scalar>(v: &Representation<F>, cfg: DecomposeConfig) -> Result<Indecomposability, QuiverError> {
    if v.total_dim() == 0 {
        return Ok(Indecomposability::Decomposable);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    Ok(match examine(v, cfg, &mut rng)? {
        Step::Split(..) => Indecomposability::Decomposable,
        Step::Certified => Indecomposability::Indecomposable,
        Step::Stuck => Indecomposability::Inconclusive,
    })
}
