//! Derived values checked against constructions that share no code with the library.

use cubic_dmod::catalog::{character_of, SimpleId};
use cubic_dmod::character::{polynomial_ring, Character, Weight};
use cubic_dmod::cubics::{big_component, d4hat, embed_alpha, envelope_of_p, paper_full, regular, separate_node, two_vertex_pair};
use cubic_dmod::linalg::Matrix;
use cubic_dmod::quiver::{decompose, hom_space, is_isomorphic, BoundQuiver, DecomposeConfig, IsoConfig, Representation};
use cubic_dmod::Rational;
use num_bigint::BigInt;

fn q(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Weight multiplicity of `x^a y^b` in `Sym^d(Sym^3)` with `3d = a + b`.
fn sym_weight(a: i64, b: i64) -> i64 {
    if a < 0 || b < 0 || (a + b) % 3 != 0 {
        return 0;
    }
    let d = (a + b) / 3;
    let mut count = 0;
    for n0 in 0..=d {
        for n1 in 0..=d - n0 {
            for n2 in 0..=d - n0 - n1 {
                if 3 * n0 + 2 * n1 + n2 == a {
                    count += 1;
                }
            }
        }
    }
    count
}

/// Multiplicity of the irreducible with highest weight `(l1, l2)` in the polynomial ring.
fn plethysm(l1: i64, l2: i64) -> i64 {
    sym_weight(l1, l2) - sym_weight(l1 + 1, l2 - 1)
}

#[test]
fn polynomial_ring_matches_plethysm() {
    let s = Character::closed(polynomial_ring());
    for l1 in -2..=24 {
        for l2 in -2..=l1 {
            assert_eq!(s.mult(Weight::new(l1, l2)).unwrap(), BigInt::from(plethysm(l1, l2)), "({l1},{l2})");
        }
    }
    let table = s.truncate(-2, 8).unwrap();
    for (w, m) in [((0, 0), 1), ((3, 0), 1), ((4, 2), 1), ((6, 3), 1)] {
        assert_eq!(table[&Weight::new(w.0, w.1)], BigInt::from(m), "{w:?}");
    }
    // Sym^3(Sym^3) has dimension 20 = 10 + 6 + 4, one copy each of (9,0), (7,2), (6,3).
    assert_eq!((plethysm(9, 0), plethysm(7, 2), plethysm(6, 3), plethysm(8, 1)), (1, 1, 1, 0));
    assert_eq!(plethysm(1, 0), 0);
}

#[test]
fn localized_ring_at_origin_and_g3() {
    // Multiplicity of (6n, 6n) in the polynomial ring stabilizes; G3 is that shifted by (3,3).
    let stable: Vec<i64> = (5..9).map(|n| plethysm(6 * n, 6 * n)).collect();
    assert!(stable.windows(2).all(|p| p[0] == p[1]));
    assert_eq!(character_of(SimpleId::G3).mult(Weight::new(3, 3)).unwrap(), BigInt::from(stable[0]));
}

/// Paths avoiding every monomial relation as a contiguous piece, by brute force.
fn monomial_paths(bq: &BoundQuiver, max_len: usize) -> Vec<Vec<usize>> {
    let q = bq.quiver();
    let forbidden: Vec<Vec<usize>> = bq.relations().iter().map(|r| r.terms[0].1.arrows.clone()).collect();
    let mut all: Vec<Vec<usize>> = Vec::new();
    let mut layer: Vec<Vec<usize>> = (0..q.arrows().len()).map(|a| vec![a]).collect();
    for _ in 0..max_len {
        layer.retain(|p| !forbidden.iter().any(|f| p.windows(f.len()).any(|w| w == f.as_slice())));
        all.extend(layer.iter().cloned());
        layer = layer
            .iter()
            .flat_map(|p| {
                let t = q.arrows()[*p.last().unwrap()].target;
                q.arrows().iter().enumerate().filter(move |(_, a)| a.source == t).map(move |(i, _)| {
                    let mut n = p.clone();
                    n.push(i);
                    n
                })
            })
            .collect();
    }
    all
}

fn paths_into(bq: &BoundQuiver, x: usize) -> Vec<usize> {
    let q = bq.quiver();
    let mut dims = vec![0; q.n_vertices()];
    dims[x] += 1;
    for p in monomial_paths(bq, 6) {
        if q.arrows()[*p.last().unwrap()].target == x {
            dims[q.arrows()[p[0]].source] += 1;
        }
    }
    dims
}

#[test]
fn path_counts() {
    let pair = two_vertex_pair();
    assert_eq!(monomial_paths(&pair, 6).len() + 2, 4);
    assert_eq!(pair.path_basis().unwrap().len(), 4);
    let full = paper_full();
    assert_eq!(monomial_paths(&full, 6).len() + 14, full.path_basis().unwrap().len());
    let q = full.quiver();
    assert_eq!((q.n_vertices(), q.arrows().len(), full.relations().len()), (14, 12, 20));
    for v in 0..q.n_vertices() {
        let inj: Representation<Rational> = Representation::injective(full.clone(), v).unwrap();
        assert_eq!(inj.dims(), paths_into(&full, v).as_slice(), "{}", q.vertices()[v]);
    }
    let s = q.vertex_index("s").unwrap();
    let named: Vec<&str> = (0..14).filter(|&u| paths_into(&full, s)[u] > 0).map(|u| q.vertices()[u].as_str()).collect();
    assert_eq!(named, ["s", "p", "e"]);
    let q0 = q.vertex_index("q0").unwrap();
    let named: Vec<&str> = (0..14).filter(|&u| paths_into(&full, q0)[u] > 0).map(|u| q.vertices()[u].as_str()).collect();
    assert_eq!(named, ["d0", "p", "q0"]);
    let env = envelope_of_p().unwrap();
    assert_eq!(env.cokernel.dims(), paths_into(&full, q.vertex_index("p").unwrap()).as_slice());
}

fn kron(a: &Matrix<Rational>, b: &Matrix<Rational>) -> Matrix<Rational> {
    Matrix::from_fn(a.rows() * b.rows(), a.cols() * b.cols(), |i, j| {
        a.get(i / b.rows(), j / b.cols()) * b.get(i % b.rows(), j % b.cols())
    })
}

/// `dim Hom(V, W)` from the column-major vectorized intertwining equations.
fn hom_dim_kron(v: &Representation<Rational>, w: &Representation<Rational>) -> usize {
    let q = v.quiver().quiver();
    let n = q.n_vertices();
    let sizes: Vec<usize> = (0..n).map(|x| w.dim(x) * v.dim(x)).collect();
    let offsets: Vec<usize> = sizes.iter().scan(0, |acc, s| { let o = *acc; *acc += s; Some(o) }).collect();
    let unknowns: usize = sizes.iter().sum();
    let mut system = Matrix::zeros(0, unknowns);
    for (ai, a) in q.arrows().iter().enumerate() {
        let (s, t) = (a.source, a.target);
        // vec(W_a X_s - X_t V_a) = (I (x) W_a) vec X_s - (V_a^T (x) I) vec X_t
        let left = kron(&Matrix::identity(v.dim(s)), w.map(ai));
        let right = kron(&v.map(ai).transpose(), &Matrix::identity(w.dim(t)));
        let mut block = Matrix::zeros(left.rows(), unknowns);
        for i in 0..block.rows() {
            for j in 0..left.cols() {
                block.set(i, offsets[s] + j, block.get(i, offsets[s] + j) + left.get(i, j));
            }
            for j in 0..right.cols() {
                block.set(i, offsets[t] + j, block.get(i, offsets[t] + j) - right.get(i, j));
            }
        }
        system = system.vstack(&block);
    }
    unknowns - system.rank()
}

#[test]
fn hom_dimensions_agree_with_kronecker_system() {
    let r = |n: usize, l: i64| regular(n, &q(l)).unwrap();
    assert_eq!(hom_dim_kron(&r(1, 0), &r(1, 1)), 0);
    assert_eq!(hom_space(&r(1, 0), &r(1, 1)).unwrap().len(), 0);
    assert!(!is_isomorphic(&r(1, 0), &r(1, 1), IsoConfig::default()).unwrap());
    let pairs = [(r(2, 3), r(2, 3)), (r(1, 2), r(2, 2)), (r(3, -1), r(1, -1))];
    for (a, b) in &pairs {
        assert_eq!(hom_space(a, b).unwrap().len(), hom_dim_kron(a, b));
    }
    let p: Vec<Representation<Rational>> = (0..5).map(|x| Representation::projective(big_component(), x).unwrap()).collect();
    for a in &p {
        for b in &p {
            assert_eq!(hom_space(a, b).unwrap().len(), hom_dim_kron(a, b));
        }
    }
}

#[test]
fn conjugated_regular_sum_splits() {
    let (a, b) = (regular(1, &q(3)).unwrap(), regular(1, &q(7)).unwrap());
    let g: Vec<Matrix<Rational>> = vec![
        Matrix::from_i64_rows(&[&[2, 1], &[1, 1]]),
        Matrix::from_i64_rows(&[&[1, 1], &[0, 1]]),
        Matrix::from_i64_rows(&[&[3, 1], &[2, 1]]),
        Matrix::from_i64_rows(&[&[1, 0], &[5, 1]]),
        Matrix::from_i64_rows(&[&[1, 2, 0, 1], &[0, 1, 1, 0], &[1, 0, 1, 1], &[0, 0, 1, 2]]),
    ];
    let v = a.direct_sum(&b).unwrap().change_basis(&g).unwrap();
    let parts = decompose(&v, DecomposeConfig::default()).unwrap();
    assert_eq!(parts.len(), 2);
    let cfg = IsoConfig::default();
    let matched: Vec<bool> = [&a, &b]
        .iter()
        .map(|x| parts.iter().any(|p| is_isomorphic(&p.rep, x, cfg).unwrap()))
        .collect();
    assert_eq!(matched, [true, true]);
    assert!(v.quiver().same_as(&d4hat()));
}

#[test]
fn separating_the_first_projective() {
    // P^1 = span{e_1, alpha1, alpha1 beta3}: the top stays at 1, the socle moves to 3'.
    let p1 = Representation::<Rational>::projective(big_component(), 0).unwrap();
    let s = separate_node(&p1).unwrap();
    let names = s.quiver().quiver().vertices();
    let support: Vec<&str> = (0..9).filter(|&v| s.dim(v) > 0).map(|v| names[v].as_str()).collect();
    assert_eq!(support, ["1", "3'", "5"]);
    let alpha = embed_alpha(&regular(1, &q(0)).unwrap()).unwrap();
    assert_eq!(alpha.maps().iter().map(Matrix::rank).collect::<Vec<_>>(), [1, 1, 1, 1, 0, 0, 0, 0]);
}
