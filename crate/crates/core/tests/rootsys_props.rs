use liebranch::character::dominant_character;
use liebranch::linalg::determinant;
use liebranch::rootsys::{Family, SimpleComponent};
use liebranch::{RootSystem, Weight};
use num_traits::Zero;
use proptest::prelude::*;

fn all_simple_up_to(rank: usize) -> Vec<SimpleComponent> {
    let mut out = Vec::new();
    for f in Family::ALL {
        for r in 1..=rank {
            if f.rank_is_valid(r) {
                out.push(SimpleComponent::new(f, r).unwrap());
            }
        }
    }
    out
}

fn closed_form_positive_roots(c: SimpleComponent) -> usize {
    let n = c.rank;
    match c.family {
        Family::A => n * (n + 1) / 2,
        Family::B | Family::C => n * n,
        Family::D => n * (n - 1),
        Family::E => match n {
            6 => 36,
            7 => 63,
            _ => 120,
        },
        Family::F => 24,
        Family::G => 6,
    }
}

#[test]
fn positive_root_counts_match_closed_forms() {
    for c in all_simple_up_to(8) {
        let rs = RootSystem::build(&[c]).unwrap();
        assert_eq!(rs.positive_roots().len(), closed_form_positive_roots(c), "{c}");
        assert_eq!(rs.dim() as usize, 2 * rs.positive_roots().len() + c.rank, "{c}");
    }
}

#[test]
fn gram_matrices_are_positive_definite() {
    for c in all_simple_up_to(8) {
        let rs = RootSystem::build(&[c]).unwrap();
        let g = rs.fundamental_gram();
        // Sylvester: every leading principal minor positive.
        for k in 1..=g.len() {
            let minor: Vec<Vec<_>> = g[..k].iter().map(|r| r[..k].to_vec()).collect();
            let d = determinant(&minor);
            assert!(d > Zero::zero(), "{c}: minor {k} = {d}");
        }
    }
}

#[test]
fn weyl_dimension_equals_orbit_expanded_character() {
    for t in ["A3", "B3", "C3", "D4", "G2", "F4", "A1xB2"] {
        let rs = RootSystem::from_type(t).unwrap();
        let r = rs.rank();
        let mut lambdas = vec![Weight::zero(r), rs.rho()];
        for i in 0..r {
            lambdas.push(Weight::fundamental(r, i));
        }
        for l in lambdas {
            let ch = dominant_character(&rs, &l).unwrap();
            let mut total: u128 = 0;
            for (mu, m) in ch.mults() {
                total += rs.orbit_size(mu).unwrap() * *m as u128;
            }
            assert_eq!(total, rs.weyl_dimension(&l).unwrap() as u128, "{t} {l}");
        }
    }
}

#[test]
fn orbit_sizes_agree_with_enumeration() {
    for t in ["A2", "B2", "G2", "A3", "B3"] {
        let rs = RootSystem::from_type(t).unwrap();
        let r = rs.rank();
        for i in 0..r {
            let w = Weight::fundamental(r, i);
            assert_eq!(rs.weyl_orbit(&w).unwrap().len() as u128, rs.orbit_size(&w).unwrap());
        }
        let rho = rs.rho();
        assert_eq!(rs.weyl_orbit(&rho).unwrap().len() as u128, rs.weyl_group_order());
    }
}

fn type_and_weight() -> impl Strategy<Value = (String, Vec<i64>, Vec<usize>)> {
    prop_oneof![
        Just("A3".to_string()),
        Just("B3".to_string()),
        Just("C4".to_string()),
        Just("D4".to_string()),
        Just("G2".to_string()),
        Just("F4".to_string()),
        Just("E6".to_string()),
        Just("A1xG2".to_string()),
    ]
    .prop_flat_map(|t| {
        let r = RootSystem::from_type(&t).unwrap().rank();
        (
            Just(t),
            prop::collection::vec(-6i64..=6, r),
            prop::collection::vec(0..r, 0..12),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn dominant_representative_is_idempotent_and_w_invariant((t, mu, word) in type_and_weight()) {
        let rs = RootSystem::from_type(&t).unwrap();
        let mu = Weight(mu);
        let d = rs.dominant_representative(&mu).unwrap();
        prop_assert!(d.is_dominant());
        prop_assert_eq!(&rs.dominant_representative(&d).unwrap(), &d);
        let mut image = mu.0.clone();
        for j in word {
            rs.reflect_in_place(&mut image, j);
        }
        prop_assert_eq!(rs.dominant_representative(&Weight(image)).unwrap(), d);
    }

    #[test]
    fn inner_product_is_symmetric_and_w_invariant((t, mu, word) in type_and_weight(), shift in -3i64..=3) {
        let rs = RootSystem::from_type(&t).unwrap();
        let mu = Weight(mu);
        let nu = Weight(mu.0.iter().map(|x| x + shift).rev().collect());
        prop_assert_eq!(rs.inner_product(&mu, &nu).unwrap(), rs.inner_product(&nu, &mu).unwrap());
        let (mut a, mut b) = (mu.0.clone(), nu.0.clone());
        for j in word {
            rs.reflect_in_place(&mut a, j);
            rs.reflect_in_place(&mut b, j);
        }
        prop_assert_eq!(
            rs.inner_product(&Weight(a), &Weight(b)).unwrap(),
            rs.inner_product(&mu, &nu).unwrap()
        );
    }
}
