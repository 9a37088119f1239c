//! m-values, the bound b(𝔨, 𝔤), and maximal-parabolic dimension tables.

use rayon::prelude::*;
use serde::Serialize;

use crate::character::{CharacterCache, CharacterSource};
use crate::error::{Error, Result};
use crate::rootsys::{sub_diagram_components, Family, RootSystem, SimpleComponent, Weight};
use crate::sl2branch::{branch_character, Sl2Embedding};

pub const DEFAULT_M_CAP: u64 = 64;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MValues {
    /// `values[j-1] = m_j`; 0 means no invariant was found up to `cap`.
    pub values: Vec<u64>,
    pub cap: u64,
}

fn invariant_dim_cached<S: CharacterSource + ?Sized>(
    rs: &RootSystem,
    emb: &Sl2Embedding,
    lambda: &Weight,
    cache: &S,
) -> Result<u64> {
    let ch = cache.character(rs, lambda)?;
    Ok(branch_character(rs, &ch, emb)?.decomposition.invariant_dim())
}

/// Least `n` in `1..=cap` with an invariant in L(n·ω_j), or 0. `j` is 1-based.
pub fn m_value(rs: &RootSystem, emb: &Sl2Embedding, j: usize, cap: u64) -> Result<u64> {
    m_value_cached(rs, emb, j, cap, &CharacterCache::new())
}

pub fn m_value_cached<S: CharacterSource + ?Sized>(
    rs: &RootSystem,
    emb: &Sl2Embedding,
    j: usize,
    cap: u64,
    cache: &S,
) -> Result<u64> {
    if j == 0 || j > rs.rank() {
        return Err(Error::NodeOutOfRange {
            node: j,
            rank: rs.rank(),
        });
    }
    let omega = Weight::fundamental(rs.rank(), j - 1);
    for n in 1..=cap {
        if invariant_dim_cached(rs, emb, &omega.scale(n as i64), cache)? > 0 {
            return Ok(n);
        }
    }
    Ok(0)
}

pub fn m_values<S: CharacterSource + ?Sized>(
    rs: &RootSystem,
    emb: &Sl2Embedding,
    cap: u64,
    cache: &S,
) -> Result<MValues> {
    let values = (1..=rs.rank())
        .map(|j| m_value_cached(rs, emb, j, cap, cache))
        .collect::<Result<_>>()?;
    Ok(MValues { values, cap })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BBound {
    pub b: u64,
    pub m: MValues,
    /// C₀ = {Σ aᵢωᵢ : 0 ≤ aᵢ < mᵢ}.
    pub box_extent: Vec<u64>,
    pub box_size: u64,
    /// A weight of C₀ attaining the maximal g₀ (first in lexicographic order).
    pub argmax: Weight,
    pub max_g0: u64,
}

pub fn b_bound(rs: &RootSystem, emb: &Sl2Embedding, cap: u64) -> Result<BBound> {
    b_bound_cached(rs, emb, cap, &CharacterCache::new())
}

/// `b = max { g₀(λ) : λ ∈ C₀ } + 1`.
pub fn b_bound_cached<S: CharacterSource + ?Sized>(
    rs: &RootSystem,
    emb: &Sl2Embedding,
    cap: u64,
    cache: &S,
) -> Result<BBound> {
    let m = m_values(rs, emb, cap, cache)?;
    if let Some(j) = m.values.iter().position(|&v| v == 0) {
        return Err(Error::MValueNotFound { node: j + 1, cap });
    }
    let points = box_points(&m.values);
    let g0s: Vec<u64> = points
        .par_iter()
        .map(|p| {
            let ch = cache.character(rs, p)?;
            branch_character(rs, &ch, emb)?
                .decomposition
                .g0()
                .ok_or_else(|| Error::Internal("empty sl2 decomposition".into()))
        })
        .collect::<Result<_>>()?;
    let (best, &max_g0) = g0s
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(&a.0)))
        .expect("C₀ contains 0");
    Ok(BBound {
        b: max_g0 + 1,
        box_extent: m.values.clone(),
        box_size: points.len() as u64,
        argmax: points[best].clone(),
        max_g0,
        m,
    })
}

/// Lattice points `0 ≤ aᵢ < extent[i]` in lexicographic order.
pub fn box_points(extent: &[u64]) -> Vec<Weight> {
    let mut out = vec![Weight(Vec::new())];
    for &e in extent {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..e as i64).map(move |a| {
                    let mut v = w.0.clone();
                    v.push(a);
                    Weight(v)
                })
            })
            .collect();
    }
    out
}

/// Simple components of the Levi factor of the maximal parabolic obtained by
/// deleting node `k` (1-based) from the Dynkin diagram.
pub fn levi_ss_components(ty: SimpleComponent, k: usize) -> Result<Vec<SimpleComponent>> {
    if k == 0 || k > ty.rank {
        return Err(Error::NodeOutOfRange {
            node: k,
            rank: ty.rank,
        });
    }
    let nodes: Vec<usize> = (0..ty.rank).filter(|&i| i != k - 1).collect();
    Ok(sub_diagram_components(&ty.cartan(), &nodes)
        .into_iter()
        .map(|(c, _)| c)
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParabolicRow {
    pub node: usize,
    pub levi_ss_components: Vec<SimpleComponent>,
    pub dim_g_mod_lss: u64,
    /// dim X^(k) = (dim 𝔤/𝔩_ss + 1) / 2.
    pub dim_x: u64,
}

impl ParabolicRow {
    /// Levi label in the compact `A2A1` style; `-` when the Levi factor is abelian.
    pub fn levi_label(&self) -> String {
        if self.levi_ss_components.is_empty() {
            "-".to_string()
        } else {
            self.levi_ss_components.iter().map(|c| c.to_string()).collect()
        }
    }
}

pub fn parabolic_table(ty: SimpleComponent) -> Vec<ParabolicRow> {
    (1..=ty.rank)
        .map(|k| {
            let levi = levi_ss_components(ty, k).expect("node in range");
            let dim_g_mod_lss = ty.dim() - levi.iter().map(|c| c.dim()).sum::<u64>();
            ParabolicRow {
                node: k,
                levi_ss_components: levi,
                dim_g_mod_lss,
                dim_x: dim_g_mod_lss.div_ceil(2),
            }
        })
        .collect()
}

/// e(𝔤) = min over nodes of dim X^(k).
pub fn e_value(ty: SimpleComponent) -> u64 {
    parabolic_table(ty)
        .iter()
        .map(|r| r.dim_x)
        .min()
        .expect("rank ≥ 1")
}

/// Simple types up to isomorphism with rank ≤ `rank_cap`: A_n (n ≥ 1),
/// B_n (n ≥ 2), C_n (n ≥ 3), D_n (n ≥ 4), E6–E8, F4, G2.
pub fn simple_types(rank_cap: usize) -> Vec<SimpleComponent> {
    let mut out = Vec::new();
    for family in Family::ALL {
        let start = family_start(family);
        for rank in start..=rank_cap {
            if let Ok(c) = SimpleComponent::new(family, rank) {
                out.push(c);
            }
        }
    }
    out
}

fn family_start(family: Family) -> usize {
    match family {
        Family::A => 1,
        Family::B => 2,
        Family::C => 3,
        Family::D => 4,
        Family::E => 6,
        Family::F => 4,
        Family::G => 2,
    }
}

/// E(𝔨): every simple type `s` with `dim_k ≥ e(s)`.
///
/// Completeness beyond `rank_cap` is checked, not assumed: within each
/// classical family e must be strictly increasing over the enumerated ranks
/// and already exceed `dim_k` at `rank_cap`; exceptional types above the cap
/// must also exceed `dim_k`.
pub fn e_set(dim_k: u64, rank_cap: usize) -> Result<Vec<SimpleComponent>> {
    let insufficient = |reason: String| Error::RankCapInsufficient { rank_cap, reason };
    if rank_cap < 4 {
        return Err(insufficient("every classical family needs a member".into()));
    }
    for family in [Family::A, Family::B, Family::C, Family::D] {
        let es: Vec<u64> = (family_start(family).max(2)..=rank_cap)
            .map(|n| e_value(SimpleComponent { family, rank: n }))
            .collect();
        if es.windows(2).any(|w| w[0] >= w[1]) {
            return Err(insufficient(format!("e is not increasing along family {family}")));
        }
        let last = *es.last().expect("rank_cap ≥ 4");
        if last <= dim_k {
            return Err(insufficient(format!(
                "e({family}{rank_cap}) = {last} ≤ {dim_k}"
            )));
        }
    }
    for (family, rank) in [(Family::E, 6), (Family::E, 7), (Family::E, 8), (Family::F, 4)] {
        let c = SimpleComponent { family, rank };
        if rank > rank_cap && e_value(c) <= dim_k {
            return Err(insufficient(format!("{c} lies above the cap but e({c}) ≤ {dim_k}")));
        }
    }
    Ok(simple_types(rank_cap)
        .into_iter()
        .filter(|&c| e_value(c) <= dim_k)
        .collect())
}
