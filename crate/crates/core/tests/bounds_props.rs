use liebranch::bounds::{
    b_bound, e_set, e_value, levi_ss_components, m_value, parabolic_table, simple_types,
};
use liebranch::rootsys::{Family, SimpleComponent};
use liebranch::sl2branch::{principal_embedding, root_embedding};
use liebranch::{Error, RootSystem};

fn a(n: usize) -> SimpleComponent {
    SimpleComponent::new(Family::A, n).unwrap()
}

#[test]
fn m_values_are_positive_for_g2_sl2s() {
    let rs = RootSystem::from_type("G2").unwrap();
    let mut embs = vec![principal_embedding(&rs)];
    // Short and long root sl2s: α₁ is short, α₂ long.
    embs.push(root_embedding(&rs, &[1, 0]).unwrap());
    embs.push(root_embedding(&rs, &[0, 1]).unwrap());
    for emb in &embs {
        for j in 1..=2 {
            assert!(m_value(&rs, emb, j, 24).unwrap() > 0, "{:?} node {j}", emb.marks());
        }
    }
}

#[test]
fn a2_principal_bound() {
    let rs = RootSystem::from_type("A2").unwrap();
    let b = b_bound(&rs, &principal_embedding(&rs), 64).unwrap();
    assert_eq!(b.m.values, vec![2, 2]);
    assert_eq!(b.box_size, 4);
}

#[test]
fn cap_too_small_is_reported() {
    let rs = RootSystem::from_type("G2").unwrap();
    let emb = principal_embedding(&rs);
    assert_eq!(m_value(&rs, &emb, 1, 1).unwrap(), 0);
    assert!(matches!(
        b_bound(&rs, &emb, 1),
        Err(Error::MValueNotFound { node: 1, cap: 1 })
    ));
}

#[test]
fn parabolic_dimensions_are_odd_and_x_exceeds_three() {
    for c in simple_types(8) {
        for row in parabolic_table(c) {
            assert_eq!(row.dim_g_mod_lss % 2, 1, "{c} node {}", row.node);
            assert_eq!(2 * row.dim_x, row.dim_g_mod_lss + 1);
            let small = c == a(1) || c == a(2);
            if !small {
                assert!(row.dim_x > 3, "{c} node {}: dim X = {}", row.node, row.dim_x);
            }
        }
    }
}

#[test]
fn type_a_closed_form_and_minimum() {
    let dim_a = |n: u64| if n == 0 { 0 } else { (n + 1) * (n + 1) - 1 };
    let mut min = (u64::MAX, Vec::new());
    for n in 2..=8usize {
        for row in parabolic_table(a(n)) {
            let p = (row.node - 1) as u64;
            let q = n as u64 - 1 - p;
            let n64 = n as u64;
            assert_eq!(row.dim_g_mod_lss, dim_a(n64) - dim_a(p) - dim_a(q));
            assert_eq!(row.dim_g_mod_lss, n64 * n64 - p * p - q * q + 2);
            if row.dim_g_mod_lss < min.0 {
                min = (row.dim_g_mod_lss, vec![n]);
            } else if row.dim_g_mod_lss == min.0 {
                min.1.push(n);
            }
        }
    }
    assert_eq!(min, (5, vec![2, 2]));
}

#[test]
fn e_values_increase_within_classical_families() {
    for f in [Family::A, Family::B, Family::C, Family::D] {
        let start = match f {
            Family::A => 1,
            Family::B | Family::C => 2,
            _ => 3,
        };
        let es: Vec<u64> = (start..=10)
            .map(|r| e_value(SimpleComponent::new(f, r).unwrap()))
            .collect();
        assert!(es.windows(2).all(|w| w[0] < w[1]), "{f:?}: {es:?}");
    }
}

#[test]
fn exclusion_sets() {
    let names = |v: Vec<SimpleComponent>| v.iter().map(|c| c.to_string()).collect::<Vec<_>>();
    assert_eq!(names(e_set(3, 10).unwrap()), ["A1", "A2"]);
    assert!(e_set(1, 10).unwrap().is_empty());
    assert_eq!(e_set(8, 10).unwrap().len(), 14);
    assert!(matches!(e_set(8, 3), Err(Error::RankCapInsufficient { .. })));
}

#[test]
fn levi_components_for_e8() {
    let e8 = SimpleComponent::new(Family::E, 8).unwrap();
    let l = levi_ss_components(e8, 4).unwrap();
    let mut names: Vec<String> = l.iter().map(|c| c.to_string()).collect();
    names.sort();
    assert_eq!(names, ["A1", "A2", "A4"]);
}
