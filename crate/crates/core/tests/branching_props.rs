use liebranch::character::{CharacterCache, CharacterSource};
use liebranch::sl2branch::{
    branch_character, principal_embedding, root_embedding, Sl2Decomposition, Sl2Embedding,
};
use liebranch::{RootSystem, Weight};

fn decompose(
    rs: &RootSystem,
    emb: &Sl2Embedding,
    l: &[i64],
    cache: &CharacterCache,
) -> (Sl2Decomposition, std::collections::BTreeMap<i64, u64>) {
    let ch = cache.character(rs, &Weight(l.to_vec())).unwrap();
    let b = branch_character(rs, &ch, emb).unwrap();
    (b.decomposition, b.values)
}

fn embeddings(rs: &RootSystem) -> Vec<Sl2Embedding> {
    let mut out = vec![principal_embedding(rs)];
    for root in rs.positive_roots() {
        out.push(root_embedding(rs, root).unwrap());
    }
    out
}

#[test]
fn dimension_conservation_and_value_symmetry() {
    let mut cases = 0;
    for (t, max) in [("G2", 4i64), ("A2", 4), ("B2", 4), ("A3", 2)] {
        let rs = RootSystem::from_type(t).unwrap();
        let cache = CharacterCache::new();
        let embs = embeddings(&rs);
        let mut weights = vec![Vec::new()];
        for _ in 0..rs.rank() {
            weights = weights
                .into_iter()
                .flat_map(|v: Vec<i64>| {
                    (0..=max).map(move |x| {
                        let mut w = v.clone();
                        w.push(x);
                        w
                    })
                })
                .collect();
        }
        for l in &weights {
            let dim = rs.weyl_dimension(&Weight(l.clone())).unwrap();
            for emb in &embs {
                let (d, values) = decompose(&rs, emb, l, &cache);
                assert_eq!(d.dimension(), dim, "{t} {l:?} {:?}", emb.marks());
                for (&k, &n) in &values {
                    assert_eq!(values.get(&-k), Some(&n), "{t} {l:?} N_{k}");
                }
                assert_eq!(values.values().sum::<u64>(), dim);
                cases += 1;
            }
        }
    }
    assert!(cases >= 500, "only {cases} cases");
}

#[test]
fn cartan_helgason_parity_on_a2() {
    let rs = RootSystem::from_type("A2").unwrap();
    let emb = principal_embedding(&rs);
    let cache = CharacterCache::new();
    for a in 0..=8 {
        for b in 0..=8 {
            let (d, _) = decompose(&rs, &emb, &[a, b], &cache);
            let both_even = a % 2 == 0 && b % 2 == 0;
            assert_eq!(d.invariant_dim() > 0, both_even, "[{a}, {b}]");
            if both_even {
                assert_eq!(d.invariant_dim(), 1, "[{a}, {b}]");
            }
        }
    }
}

#[test]
fn root_sl2_in_a2_has_invariants_on_fundamentals() {
    let rs = RootSystem::from_type("A2").unwrap();
    let emb = root_embedding(&rs, &[1, 0]).unwrap();
    let cache = CharacterCache::new();
    for l in [[1, 0], [0, 1]] {
        let (d, _) = decompose(&rs, &emb, &l, &cache);
        assert!(d.invariant_dim() > 0, "{l:?}");
        // The standard module restricts as V(1) + V(0).
        assert_eq!(d.mults().iter().map(|(&k, &m)| (k, m)).collect::<Vec<_>>(), [(0, 1), (1, 1)]);
    }
}

#[test]
fn semigroup_monotonicity_on_g2() {
    let rs = RootSystem::from_type("G2").unwrap();
    let emb = principal_embedding(&rs);
    let cache = CharacterCache::new();
    let mut pairs = 0;
    for m0 in 0..=6 {
        for m1 in 0..=6 {
            let (dmu, _) = decompose(&rs, &emb, &[m0, m1], &cache);
            if dmu.invariant_dim() == 0 {
                continue;
            }
            for l0 in 0..=6 {
                for l1 in 0..=6 {
                    let (dl, _) = decompose(&rs, &emb, &[l0, l1], &cache);
                    let (dsum, _) = decompose(&rs, &emb, &[l0 + m0, l1 + m1], &cache);
                    for &k in dl.mults().keys() {
                        assert!(
                            dsum.multiplicity(k) > 0,
                            "V({k}) in [{l0},{l1}] but not in [{},{}]",
                            l0 + m0,
                            l1 + m1
                        );
                    }
                    pairs += 1;
                }
            }
        }
    }
    assert!(pairs > 100);
}

#[test]
fn principal_sl2_on_the_adjoint_gives_exponents() {
    // 𝔤 restricted to a principal sl2 is ⊕ V(2e) over the exponents e.
    for (t, adj, exps) in [
        ("G2", vec![0, 1], vec![1, 5]),
        ("A3", vec![1, 0, 1], vec![1, 2, 3]),
        ("F4", vec![1, 0, 0, 0], vec![1, 5, 7, 11]),
    ] {
        let rs = RootSystem::from_type(t).unwrap();
        let cache = CharacterCache::new();
        let (d, _) = decompose(&rs, &principal_embedding(&rs), &adj, &cache);
        let got: Vec<u64> = d.mults().keys().map(|k| k / 2).collect();
        assert_eq!(got, exps, "{t}");
        assert!(d.mults().values().all(|&m| m == 1));
    }
}
