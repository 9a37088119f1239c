//! Acceptance criteria 1 to 7. Runs without the libtest harness so the
//! PASS/FAIL lines are always shown; exits nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use liebranch::bounds::{b_bound, parabolic_table, simple_types};
use liebranch::character::{
    dominant_character, weyl_alternating_character, CharacterCache, CharacterSource,
};
use liebranch::rootsys::{Family, SimpleComponent};
use liebranch::semigroup::GeneratorSet;
use liebranch::sl2branch::{branch_character, principal_embedding, root_embedding};
use liebranch::{bounds, golden, tables, RootSystem, Weight};

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn grid_vs(values: impl Fn(&tables::GridCell) -> u64, reference: &[Vec<u64>], cache: &CharacterCache) -> Check {
    let rs = RootSystem::from_type("G2").map_err(|e| e.to_string())?;
    let emb = principal_embedding(&rs);
    let grid = tables::rank2_grid(&rs, &emb, 19, 19, cache).map_err(|e| e.to_string())?;
    let mut equal = 0;
    for i in 0..20 {
        for j in 0..20 {
            let v = values(&grid[i][j]);
            ensure(v == reference[i][j], || {
                format!("cell [{i},{j}]: computed {v}, reference {}", reference[i][j])
            })?;
            equal += 1;
        }
    }
    Ok(format!("{equal} cells equal"))
}

fn criterion1(cache: &CharacterCache) -> Check {
    grid_vs(|c| c.invariant_dim, &golden::table1(), cache)
}

fn criterion2(cache: &CharacterCache) -> Check {
    grid_vs(|c| c.g0, &golden::table2(), cache)
}

fn criterion3() -> Check {
    let rs = RootSystem::from_type("G2").map_err(|e| e.to_string())?;
    let b = b_bound(&rs, &principal_embedding(&rs), 64).map_err(|e| e.to_string())?;
    ensure(b.m.values == [4, 2], || format!("m = {:?}", b.m.values))?;
    ensure(b.box_extent == [4, 2] && b.box_size == 8, || {
        format!("C0 extent {:?}", b.box_extent)
    })?;
    ensure(b.max_g0 == 7 && b.b == 8, || format!("max g0 {}, b {}", b.max_g0, b.b))?;
    Ok(format!("m = (4, 2), C0 = 4x2, b = {} + 1 = {}", b.max_g0, b.b))
}

fn criterion4(cache: &CharacterCache) -> Check {
    let report = tables::g2_exceptions(cache, 64).map_err(|e| e.to_string())?;
    let e_prime: BTreeSet<Vec<u32>> = golden::e_prime().into_iter().collect();
    let computed: BTreeSet<Vec<u32>> = report.e_prime.points.iter().cloned().collect();
    ensure(report.e_prime.certified, || "E' not certified".into())?;
    ensure(computed == e_prime, || {
        format!("E' has {} elements, differs from reference", computed.len())
    })?;
    let listed: BTreeSet<Vec<u32>> = golden::exceptions().into_iter().collect();
    let found: BTreeSet<Vec<u32>> = report.exceptions.iter().cloned().collect();
    ensure(found == listed, || format!("{} exceptions found", found.len()))?;

    // Every element of the 6-generator complement is an exception or has
    // invariants.
    let gens = golden::G2_INVARIANT_GENERATORS_SMALL.iter().map(|g| g.to_vec()).collect();
    let e = GeneratorSet::new(2, gens)
        .and_then(|g| g.complement(64))
        .map_err(|e| e.to_string())?;
    ensure(e.certified && e.points.len() == 194, || format!("E has {}", e.points.len()))?;
    ensure(report.e_small_exceptions.iter().all(|p| listed.contains(p)), || {
        "an element of E without invariants is missing from the list".into()
    })?;
    Ok(format!(
        "|E'| = {}, exceptions = {}, |E| = {} (largest {:?})",
        computed.len(),
        found.len(),
        e.points.len(),
        e.points.last().unwrap()
    ))
}

fn criterion5() -> Check {
    let reference = golden::parabolic_rows().map_err(|e| e.to_string())?;
    for g in &reference {
        let rows = parabolic_table(g.ty);
        let row = rows
            .iter()
            .find(|r| r.node == g.node)
            .ok_or_else(|| format!("{} has no node {}", g.ty, g.node))?;
        let mut levi: Vec<SimpleComponent> = row
            .levi_ss_components
            .iter()
            .map(|&c| golden::normalize_component(c))
            .collect();
        levi.sort();
        let want = golden::normalize_levi(&g.levi_label).map_err(|e| e.to_string())?;
        ensure(levi == want && row.dim_g_mod_lss == g.dim_g_mod_lss, || {
            format!(
                "{} node {}: {} / {} vs {} / {}",
                g.ty,
                g.node,
                row.levi_label(),
                row.dim_g_mod_lss,
                g.levi_label,
                g.dim_g_mod_lss
            )
        })?;
    }
    let es = golden::e_values().map_err(|e| e.to_string())?;
    for (t, e) in &es {
        let got = bounds::e_value(*t);
        ensure(got == *e, || format!("e({t}) = {got}, reference {e}"))?;
    }
    let set: BTreeSet<SimpleComponent> = bounds::e_set(8, 10)
        .map_err(|e| e.to_string())?
        .into_iter()
        .map(golden::normalize_component)
        .collect();
    let want: BTreeSet<SimpleComponent> = golden::exclusion_sl3()
        .map_err(|e| e.to_string())?
        .into_iter()
        .map(golden::normalize_component)
        .collect();
    ensure(set == want, || format!("E(sl3) = {set:?}"))?;
    Ok(format!(
        "{} parabolic rows, {} e-values, |E(sl3)| = {}",
        reference.len(),
        es.len(),
        set.len()
    ))
}

fn dominant_up_to(rank: usize, max_sum: i64) -> Vec<Weight> {
    let mut out = vec![Vec::new()];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|v: Vec<i64>| {
                let used: i64 = v.iter().sum();
                (0..=max_sum - used).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out.into_iter().map(Weight).collect()
}

fn criterion6(cache: &CharacterCache) -> Check {
    let err = |e: liebranch::Error| e.to_string();

    let mut oracle = 0;
    for t in ["A1", "A2", "B2", "G2"] {
        let rs = RootSystem::from_type(t).map_err(err)?;
        for l in dominant_up_to(rs.rank(), 6) {
            let f = dominant_character(&rs, &l).map_err(err)?;
            let w = weyl_alternating_character(&rs, &l).map_err(err)?;
            ensure(f == w, || format!("oracle mismatch {t} {l}"))?;
            oracle += 1;
        }
    }

    // Conservation plus the symmetry and nonnegativity certificates, which
    // branch_character checks internally and reports as errors.
    let mut cases = 0;
    for (t, max) in [("G2", 8i64), ("A2", 6), ("B2", 6), ("A3", 2)] {
        let rs = RootSystem::from_type(t).map_err(err)?;
        let local = CharacterCache::new();
        let src: &dyn CharacterSource = if t == "G2" { cache } else { &local };
        let mut embs = vec![principal_embedding(&rs)];
        for root in rs.positive_roots() {
            embs.push(root_embedding(&rs, root).map_err(err)?);
        }
        for l in dominant_up_to(rs.rank(), max) {
            let ch = src.character(&rs, &l).map_err(err)?;
            let dim = rs.weyl_dimension(&l).map_err(err)?;
            for emb in &embs {
                let d = branch_character(&rs, &ch, emb).map_err(err)?.decomposition;
                ensure(d.dimension() == dim, || format!("conservation {t} {l}"))?;
                cases += 1;
            }
        }
    }
    ensure(cases >= 500, || format!("only {cases} conservation cases"))?;

    let a2 = RootSystem::from_type("A2").map_err(err)?;
    let p = principal_embedding(&a2);
    for a in 0..=8 {
        for b in 0..=8 {
            let ch = dominant_character(&a2, &Weight(vec![a, b])).map_err(err)?;
            let inv = branch_character(&a2, &ch, &p).map_err(err)?.decomposition.invariant_dim();
            ensure((inv > 0) == (a % 2 == 0 && b % 2 == 0), || format!("parity [{a},{b}]"))?;
        }
    }

    let g2 = RootSystem::from_type("G2").map_err(err)?;
    let p = principal_embedding(&g2);
    let dec = |l: Vec<i64>| -> Result<liebranch::sl2branch::Sl2Decomposition, String> {
        let ch = cache.character(&g2, &Weight(l)).map_err(err)?;
        Ok(branch_character(&g2, &ch, &p).map_err(err)?.decomposition)
    };
    let mut mono = 0;
    for m0 in 0..=6 {
        for m1 in 0..=6 {
            if dec(vec![m0, m1])?.invariant_dim() == 0 {
                continue;
            }
            for l0 in 0..=6 {
                for l1 in 0..=6 {
                    let dl = dec(vec![l0, l1])?;
                    let ds = dec(vec![l0 + m0, l1 + m1])?;
                    ensure(dl.mults().keys().all(|&k| ds.multiplicity(k) > 0), || {
                        format!("monotonicity [{l0},{l1}] + [{m0},{m1}]")
                    })?;
                    mono += 1;
                }
            }
        }
    }
    Ok(format!(
        "{oracle} oracle checks, {cases} conservation cases, 81 parity cells, {mono} monotonicity pairs"
    ))
}

fn criterion7() -> Check {
    let mut rows = 0;
    for c in simple_types(8) {
        let tiny = c.family == Family::A && c.rank <= 2;
        for r in parabolic_table(c) {
            if !tiny {
                ensure(r.dim_x > 3, || format!("{c} node {}: dim X = {}", r.node, r.dim_x))?;
            }
            rows += 1;
        }
    }
    let mut min = u64::MAX;
    let mut at = BTreeSet::new();
    for n in 1..=8 {
        for r in parabolic_table(SimpleComponent::new(Family::A, n).map_err(|e| e.to_string())?) {
            if n >= 2 && r.dim_g_mod_lss < min {
                min = r.dim_g_mod_lss;
                at.clear();
            }
            if n >= 2 && r.dim_g_mod_lss == min {
                at.insert(n);
            }
        }
    }
    ensure(min == 5 && at == BTreeSet::from([2]), || format!("minimum {min} at {at:?}"))?;
    Ok(format!("{rows} parabolics checked; type A minimum 5 only at A2"))
}

fn main() {
    let cache = CharacterCache::new();
    let mut failures = 0;
    let mut report = |n: usize, name: &str, limit: Duration, f: &dyn Fn() -> Check| {
        let start = Instant::now();
        let result = std::panic::catch_unwind(std::panic::AssertUnwindSafe(f))
            .unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let result = result.and_then(|s| {
            if elapsed > limit {
                Err(format!("{s}; took {elapsed:.2?}, limit {limit:?}"))
            } else {
                Ok(s)
            }
        });
        match result {
            Ok(s) => println!("criterion {n} PASS  {name}: {s} ({elapsed:.2?})"),
            Err(s) => {
                failures += 1;
                println!("criterion {n} FAIL  {name}: {s} ({elapsed:.2?})");
            }
        }
    };
    let secs = Duration::from_secs;
    report(1, "invariant table dim [i,j]^K", secs(60), &|| criterion1(&cache));
    report(2, "g0 table", secs(60), &|| criterion2(&cache));
    report(3, "b = 8 for G2 principal", secs(60), &criterion3);
    report(4, "G2 weights without invariants", secs(120), &|| criterion4(&cache));
    report(5, "parabolic tables, e-values, E(sl3)", secs(1), &criterion5);
    report(6, "property suite", secs(300), &|| criterion6(&cache));
    report(7, "dim X > 3 and type-A minimum", secs(60), &criterion7);
    if failures > 0 {
        println!("{failures} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all acceptance criteria passed");
}
