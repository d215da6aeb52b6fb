use cubic_dmod::catalog::{character_of, SimpleId};
use cubic_dmod::character::{m_diag, m_weight, mult_d, polynomial_ring, Character, ClosedForm, Weight, DISCRIMINANT};
use cubic_dmod::cubics::{big_component, sample_big_component, separate_node, separated};
use cubic_dmod::quiver::{decompose, hom_space, DecomposeConfig, Indecomposability, Representation};
use cubic_dmod::Rational;
use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn weight(r: i64) -> impl Strategy<Value = Weight> {
    (-r..=r, -r..=r).prop_map(|(a, b)| Weight::new(a.max(b), a.min(b)))
}

fn simple() -> impl Strategy<Value = SimpleId> {
    (0..SimpleId::ALL.len()).prop_map(|i| SimpleId::ALL[i])
}

fn rep(seed: u64) -> Representation<Rational> {
    sample_big_component(&mut ChaCha8Rng::seed_from_u64(seed), 2, 4).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn fourier_is_an_involution(id in simple(), lambda in weight(25)) {
        let c = character_of(id);
        prop_assert_eq!(c.fourier().fourier().mult(lambda).unwrap(), c.mult(lambda).unwrap());
        prop_assert_eq!(character_of(id.fourier_partner().fourier_partner()).mult(lambda).unwrap(), c.mult(lambda).unwrap());
    }

    #[test]
    fn twisted_cubic_congruence(j in 0u8..3, lambda in weight(40)) {
        let m = mult_d(j, lambda).unwrap();
        if !m.is_zero() {
            prop_assert_eq!((lambda.l1 + lambda.l2 + i64::from(j)).rem_euclid(3), 0);
        }
    }

    #[test]
    fn diagonal_m_matches_nu_difference(a in -200i64..200) {
        prop_assert_eq!(m_diag(a), m_weight(Weight::diagonal(a)));
    }

    #[test]
    fn product_is_convolution(l2 in 0i64..10, extra in 0i64..10, shift in 0i64..3) {
        let lambda = Weight::new(l2 + extra, l2);
        let f = polynomial_ring();
        let g = polynomial_ring().shift(Weight::diagonal(shift));
        let fg = f.product(&g).unwrap();
        let mut sum = BigInt::zero();
        for m2 in 0..=lambda.l2 {
            for m1 in m2..=lambda.l1 {
                let mu = Weight::new(m1, m2);
                let delta = lambda - mu;
                if delta.is_dominant() {
                    sum += f.coefficient(mu) * g.coefficient(delta);
                }
            }
        }
        prop_assert_eq!(fg.coefficient(lambda), sum);
    }

    #[test]
    fn localization_is_discriminant_periodic(id in prop::sample::select(vec![SimpleId::S, SimpleId::Q0, SimpleId::G1, SimpleId::GMinus1]), lambda in weight(20)) {
        let loc = character_of(id).localize();
        prop_assert_eq!(loc.mult(lambda + DISCRIMINANT).unwrap(), loc.mult(lambda).unwrap());
    }

    #[test]
    fn closed_form_fourier_matches_character_fourier(lambda in weight(20)) {
        let s = ClosedForm::fourier(&polynomial_ring());
        prop_assert_eq!(s.coefficient(lambda), Character::closed(polynomial_ring()).fourier().mult(lambda).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn decomposition_preserves_dimension(seed in any::<u64>()) {
        let v = rep(seed);
        let parts = decompose(&v, DecomposeConfig { seed, ..Default::default() }).unwrap();
        let mut total = vec![0; v.dims().len()];
        for p in &parts {
            prop_assert_ne!(p.verdict, Indecomposability::Decomposable);
            for (t, d) in total.iter_mut().zip(p.rep.dims()) {
                *t += d;
            }
        }
        prop_assert_eq!(total.as_slice(), v.dims());
    }

    #[test]
    fn hom_is_additive(a in any::<u64>(), b in any::<u64>(), c in any::<u64>()) {
        let (v, w, u) = (rep(a), rep(b), rep(c));
        let sum = v.direct_sum(&w).unwrap();
        prop_assert_eq!(hom_space(&sum, &u).unwrap().len(), hom_space(&v, &u).unwrap().len() + hom_space(&w, &u).unwrap().len());
        prop_assert_eq!(hom_space(&u, &sum).unwrap().len(), hom_space(&u, &v).unwrap().len() + hom_space(&u, &w).unwrap().len());
    }

    #[test]
    fn separation_keeps_relations_and_dimension(seed in any::<u64>()) {
        let v = rep(seed);
        let s = separate_node(&v).unwrap();
        prop_assert!(s.quiver().same_as(&separated()));
        prop_assert!(s.check_relations().is_ok());
        prop_assert_eq!(s.total_dim(), v.total_dim());
        prop_assert!(v.quiver().same_as(&big_component()));
    }
}
