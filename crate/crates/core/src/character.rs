//! Characters of irreducible modules L(λ).
//!
//! Production route is Freudenthal's recursion over dominant weights. The
//! Weyl alternating-sum formula is kept as an independent oracle for small
//! Weyl groups.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::sync::Arc;

use num_integer::Integer;
use num_traits::Zero;
use parking_lot::RwLock;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, Rational};
use crate::rootsys::{RootSystem, Weight};

/// Largest Weyl group the alternating-sum oracle will enumerate by default
/// (|W(F4)|, the largest rank-4 group).
pub const DEFAULT_WEYL_ORDER_CAP: u128 = 1152;

/// Weight multiplicities of L(λ), keyed by dominant weight.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "CharacterRepr", try_from = "CharacterRepr")]
pub struct Character {
    highest_weight: Weight,
    mults: BTreeMap<Weight, u64>,
}

#[derive(Serialize, Deserialize)]
struct CharacterRepr {
    lambda: Vec<i64>,
    mults: Vec<(Vec<i64>, u64)>,
}

impl From<Character> for CharacterRepr {
    fn from(c: Character) -> Self {
        CharacterRepr {
            lambda: c.highest_weight.0,
            mults: c.mults.into_iter().map(|(w, m)| (w.0, m)).collect(),
        }
    }
}

impl TryFrom<CharacterRepr> for Character {
    type Error = String;

    fn try_from(r: CharacterRepr) -> std::result::Result<Self, String> {
        let highest_weight = Weight(r.lambda);
        let mults: BTreeMap<Weight, u64> =
            r.mults.into_iter().map(|(w, m)| (Weight(w), m)).collect();
        if mults.get(&highest_weight) != Some(&1) {
            return Err("highest weight must have multiplicity 1".into());
        }
        if mults.values().any(|&m| m == 0) {
            return Err("zero multiplicities must be omitted".into());
        }
        Ok(Character {
            highest_weight,
            mults,
        })
    }
}

impl Character {
    pub fn highest_weight(&self) -> &Weight {
        &self.highest_weight
    }

    pub fn mults(&self) -> &BTreeMap<Weight, u64> {
        &self.mults
    }

    pub fn multiplicity(&self, mu: &Weight) -> u64 {
        self.mults.get(mu).copied().unwrap_or(0)
    }

    /// Σ |W·μ| · m_μ over the dominant support.
    pub fn dimension(&self, rs: &RootSystem) -> Result<u64> {
        let mut total: u128 = 0;
        for (mu, &m) in &self.mults {
            let term = rs
                .orbit_size(mu)?
                .checked_mul(m as u128)
                .ok_or(Error::Overflow("character dimension"))?;
            total = total
                .checked_add(term)
                .ok_or(Error::Overflow("character dimension"))?;
        }
        u64::try_from(total).map_err(|_| Error::Overflow("character dimension"))
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string(self)?)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }
}

/// A dominant weight below λ with the simple-root coordinates of `λ - μ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominantWeight {
    pub weight: Weight,
    pub depth: Vec<i64>,
}

impl DominantWeight {
    pub fn level(&self) -> i64 {
        self.depth.iter().sum()
    }
}

/// All dominant μ ⪯ λ, ordered by level (height of λ−μ), then lexicographically.
///
/// Every such μ is reachable from λ by subtracting positive roots without
/// leaving the dominant chamber, so a search over those steps is complete.
pub fn dominant_weights(rs: &RootSystem, lambda: &Weight) -> Result<Vec<DominantWeight>> {
    rs.check_dominant(lambda)?;
    let roots = rs.positive_roots();
    let root_weights = rs.positive_root_weights();
    let mut seen: HashMap<Vec<i64>, Vec<i64>> = HashMap::new();
    let mut queue = VecDeque::new();
    seen.insert(lambda.0.clone(), vec![0; rs.rank()]);
    queue.push_back(lambda.0.clone());
    while let Some(mu) = queue.pop_front() {
        let depth = seen[&mu].clone();
        for (c, aw) in roots.iter().zip(root_weights) {
            let nu: Vec<i64> = mu.iter().zip(&aw.0).map(|(a, b)| a - b).collect();
            if nu.iter().any(|&x| x < 0) || seen.contains_key(&nu) {
                continue;
            }
            let d: Vec<i64> = depth.iter().zip(c).map(|(a, b)| a + b).collect();
            seen.insert(nu.clone(), d);
            queue.push_back(nu);
        }
    }
    let mut out: Vec<DominantWeight> = seen
        .into_iter()
        .map(|(w, depth)| DominantWeight {
            weight: Weight(w),
            depth,
        })
        .collect();
    out.sort_by(|a, b| {
        a.level()
            .cmp(&b.level())
            .then_with(|| a.weight.cmp(&b.weight))
    });
    Ok(out)
}

/// Freudenthal's recursion:
/// `(|λ+ρ|² − |μ+ρ|²) m_μ = 2 Σ_{α>0} Σ_{k≥1} m_{μ+kα} (μ+kα, α)`.
///
/// Every term is kept integral: with `λ − μ = Σ kᵢ αᵢ` the left factor is
/// `Σ kᵢ dᵢ (λᵢ + μᵢ + 2)`, and `(ν, α) = Σ νᵢ cᵢ dᵢ` for `α = Σ cᵢ αᵢ`.
pub fn dominant_character(rs: &RootSystem, lambda: &Weight) -> Result<Character> {
    let doms = dominant_weights(rs, lambda)?;
    let r = rs.rank();
    let d = rs.symmetrizer();
    let index: HashMap<&[i64], usize> = doms
        .iter()
        .enumerate()
        .map(|(i, dw)| (dw.weight.0.as_slice(), i))
        .collect();
    let root_weights = rs.positive_root_weights();
    let pairing: Vec<Vec<i64>> = rs
        .positive_roots()
        .iter()
        .map(|c| (0..r).map(|i| c[i] * d[i]).collect())
        .collect();

    let mut mult = vec![0u64; doms.len()];
    mult[0] = 1;
    let mut nu = vec![0i64; r];
    let mut dom = vec![0i64; r];
    for idx in 1..doms.len() {
        let mu = &doms[idx].weight.0;
        let lhs: i128 = (0..r)
            .map(|i| (doms[idx].depth[i] * d[i] * (lambda.0[i] + mu[i] + 2)) as i128)
            .sum();
        let mut sum: i128 = 0;
        for (aw, cd) in root_weights.iter().zip(&pairing) {
            nu.copy_from_slice(mu);
            loop {
                for (x, a) in nu.iter_mut().zip(&aw.0) {
                    *x += a;
                }
                dom.copy_from_slice(&nu);
                rs.make_dominant_in_place(&mut dom)?;
                let Some(&j) = index.get(dom.as_slice()) else {
                    break;
                };
                if j >= idx {
                    return Err(Error::Internal(format!(
                        "Freudenthal order violated at {mu:?}"
                    )));
                }
                let ip: i64 = nu.iter().zip(cd).map(|(a, b)| a * b).sum();
                let term = (mult[j] as i128)
                    .checked_mul(ip as i128)
                    .ok_or(Error::Overflow("Freudenthal sum"))?;
                sum = sum
                    .checked_add(term)
                    .ok_or(Error::Overflow("Freudenthal sum"))?;
            }
        }
        let sum = sum.checked_mul(2).ok_or(Error::Overflow("Freudenthal sum"))?;
        if lhs <= 0 {
            return Err(Error::Internal(format!(
                "non-positive Freudenthal coefficient at {mu:?}"
            )));
        }
        let (q, rem) = sum.div_rem(&lhs);
        if rem != 0 || q < 0 {
            return Err(Error::InexactDivision(format!(
                "Freudenthal recursion at {mu:?}: {sum} / {lhs}"
            )));
        }
        mult[idx] = u64::try_from(q).map_err(|_| Error::Overflow("multiplicity"))?;
    }

    let mults = doms
        .into_iter()
        .zip(mult)
        .filter(|(_, m)| *m > 0)
        .map(|(dw, m)| (dw.weight, m))
        .collect();
    Ok(Character {
        highest_weight: lambda.clone(),
        mults,
    })
}

pub fn weyl_alternating_character(rs: &RootSystem, lambda: &Weight) -> Result<Character> {
    weyl_alternating_character_capped(rs, lambda, DEFAULT_WEYL_ORDER_CAP)
}

type Laurent = BTreeMap<(i64, Vec<i64>), i128>;

/// Alternating sum `Σ_w (−1)^{ℓ(w)} e^{w(λ+ρ)−ρ}` divided by `Π_{α>0} (1 − e^{−α})`.
pub fn weyl_alternating_character_capped(
    rs: &RootSystem,
    lambda: &Weight,
    cap: u128,
) -> Result<Character> {
    rs.check_dominant(lambda)?;
    let order = rs.weyl_group_order();
    if order > cap {
        return Err(Error::WeylGroupTooLarge { order, cap });
    }
    let r = rs.rank();

    // Height functional scaled to integers: f(ωⱼ) = D · ht(ωⱼ).
    let heights: Vec<Rational> = rs
        .inverse_cartan()
        .iter()
        .map(|row| row.iter().fold(Rational::zero(), |a, x| a + x))
        .collect();
    let denom = heights.iter().fold(1i64, |acc, h| acc.lcm(h.denom()));
    let fvec: Vec<i64> = heights
        .iter()
        .map(|h| (h * denom).to_integer())
        .collect();
    let f = |v: &[i64]| -> i64 { v.iter().zip(&fvec).map(|(a, b)| a * b).sum() };

    // W-orbit of the regular weight λ+ρ is in bijection with W; BFS depth
    // parity is the sign.
    let start: Vec<i64> = lambda.0.iter().map(|x| x + 1).collect();
    let mut sign: HashMap<Vec<i64>, i128> = HashMap::new();
    sign.insert(start.clone(), 1);
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        let s = sign[&v];
        for j in 0..r {
            let mut w = v.clone();
            rs.reflect_in_place(&mut w, j);
            if !sign.contains_key(&w) {
                sign.insert(w.clone(), -s);
                queue.push_back(w);
            }
        }
    }
    if sign.len() as u128 != order {
        return Err(Error::Internal(format!(
            "orbit of λ+ρ has {} elements, expected |W| = {order}",
            sign.len()
        )));
    }

    let mut poly: Laurent = sign
        .into_iter()
        .map(|(v, s)| {
            let shifted: Vec<i64> = v.iter().map(|x| x - 1).collect();
            ((f(&shifted), shifted), s)
        })
        .collect();

    for aw in rs.positive_root_weights() {
        poly = divide_by_one_minus(&poly, &aw.0, f(&aw.0))?;
    }

    let mut mults = BTreeMap::new();
    for ((_, w), c) in poly {
        if c < 0 {
            return Err(Error::Internal(format!(
                "negative coefficient {c} at {w:?} in alternating-sum quotient"
            )));
        }
        let w = Weight(w);
        if w.is_dominant() && c > 0 {
            mults.insert(w, u64::try_from(c).map_err(|_| Error::Overflow("multiplicity"))?);
        }
    }
    if mults.get(lambda) != Some(&1) {
        return Err(Error::Internal("highest weight multiplicity is not 1".into()));
    }
    Ok(Character {
        highest_weight: lambda.clone(),
        mults,
    })
}

/// Exact long division of `p` by `1 − e^{−α}`, leading monomial by height.
fn divide_by_one_minus(p: &Laurent, alpha: &[i64], f_alpha: i64) -> Result<Laurent> {
    let Some(min_f) = p.keys().next().map(|k| k.0) else {
        return Ok(Laurent::new());
    };
    let mut rem = p.clone();
    let mut quot = Laurent::new();
    while let Some(((fv, v), c)) = rem.pop_last() {
        if c == 0 {
            continue;
        }
        if fv <= min_f {
            return Err(Error::InexactDivision(
                "Weyl denominator does not divide the alternating sum".into(),
            ));
        }
        let lower: Vec<i64> = v.iter().zip(alpha).map(|(a, b)| a - b).collect();
        let key = (fv - f_alpha, lower);
        let e = rem.entry(key.clone()).or_insert(0);
        *e += c;
        if *e == 0 {
            rem.remove(&key);
        }
        quot.insert((fv, v), c);
    }
    Ok(quot)
}

/// `λ(h)` for the semisimple element with `αᵢ(h) = marks[i]`.
///
/// Solves `marks = cartan · c` for the coroot coordinates `c` of `h`.
pub fn highest_weight_value(rs: &RootSystem, lambda: &Weight, marks: &[i64]) -> Result<i64> {
    rs.check_len(marks)?;
    rs.check_len(&lambda.0)?;
    let c = linalg::mul_vec(rs.inverse_cartan(), marks);
    let v = c
        .iter()
        .zip(&lambda.0)
        .fold(Rational::zero(), |acc, (ci, &l)| acc + ci * l);
    if !v.is_integer() {
        return Err(Error::InexactDivision(format!(
            "λ(h) = {v} is not an integer for marks {marks:?}"
        )));
    }
    Ok(v.to_integer())
}

/// Distribution of `μ(h)` over all weights of L(λ) counted with multiplicity.
pub fn full_weight_values(
    rs: &RootSystem,
    lambda: &Weight,
    marks: &[i64],
) -> Result<BTreeMap<i64, u64>> {
    let ch = dominant_character(rs, lambda)?;
    weight_values(rs, &ch, marks)
}

/// As [`full_weight_values`], for an already computed character.
///
/// Values are anchored at λ: `μ(h) = λ(h) − Σ kᵢ marksᵢ` where `λ − μ = Σ kᵢ αᵢ`,
/// and a reflection `s_j` shifts the value by `−ν_j · marks_j`.
pub fn weight_values(
    rs: &RootSystem,
    ch: &Character,
    marks: &[i64],
) -> Result<BTreeMap<i64, u64>> {
    let lambda = ch.highest_weight();
    let top = highest_weight_value(rs, lambda, marks)?;
    let mut out: BTreeMap<i64, u64> = BTreeMap::new();
    let mut seen: HashMap<Vec<i64>, i64> = HashMap::new();
    let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
    for (mu, &m) in ch.mults() {
        let depth = rs.weight_to_root_coords(&lambda.sub(mu))?;
        let depth = linalg::to_integers(&depth).ok_or_else(|| {
            Error::Internal(format!("{mu} is not in the root-lattice coset of {lambda}"))
        })?;
        let base = top - depth.iter().zip(marks).map(|(k, m)| k * m).sum::<i64>();

        seen.clear();
        seen.insert(mu.0.clone(), base);
        queue.push_back(mu.0.clone());
        while let Some(v) = queue.pop_front() {
            let val = seen[&v];
            let e = out.entry(val).or_insert(0);
            *e = e.checked_add(m).ok_or(Error::Overflow("weight values"))?;
            for j in 0..rs.rank() {
                if v[j] > 0 {
                    let mut w = v.clone();
                    rs.reflect_in_place(&mut w, j);
                    if !seen.contains_key(&w) {
                        seen.insert(w.clone(), val - v[j] * marks[j]);
                        queue.push_back(w);
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Anything that can hand out characters, possibly from a cache.
pub trait CharacterSource: Sync {
    fn character(&self, rs: &RootSystem, lambda: &Weight) -> Result<Arc<Character>>;
}

/// Memo table keyed by (root-system fingerprint, λ). Readers run
/// concurrently; inserts take the write lock briefly.
#[derive(Debug, Default)]
pub struct CharacterCache {
    inner: RwLock<HashMap<(String, Weight), Arc<Character>>>,
}

impl CharacterCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, rs: &RootSystem, lambda: &Weight) -> Option<Arc<Character>> {
        self.inner
            .read()
            .get(&(rs.fingerprint(), lambda.clone()))
            .cloned()
    }

    pub fn insert(&self, rs: &RootSystem, ch: Character) -> Arc<Character> {
        let key = (rs.fingerprint(), ch.highest_weight().clone());
        let ch = Arc::new(ch);
        self.inner.write().entry(key).or_insert(ch).clone()
    }

    pub fn get_or_compute(&self, rs: &RootSystem, lambda: &Weight) -> Result<Arc<Character>> {
        if let Some(ch) = self.get(rs, lambda) {
            return Ok(ch);
        }
        let ch = dominant_character(rs, lambda)?;
        Ok(self.insert(rs, ch))
    }

    pub fn len(&self) -> usize {
        self.inner.read().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl CharacterSource for CharacterCache {
    fn character(&self, rs: &RootSystem, lambda: &Weight) -> Result<Arc<Character>> {
        self.get_or_compute(rs, lambda)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::from_type(s).unwrap()
    }

    fn mults(ch: &Character) -> Vec<(Vec<i64>, u64)> {
        ch.mults().iter().map(|(w, &m)| (w.0.clone(), m)).collect()
    }

    #[test]
    fn sl2_adjoint() {
        let a1 = rs("A1");
        let ch = dominant_character(&a1, &Weight(vec![2])).unwrap();
        assert_eq!(mults(&ch), vec![(vec![0], 1), (vec![2], 1)]);
    }

    #[test]
    fn a2_adjoint_has_double_zero_weight() {
        let a2 = rs("A2");
        let ch = dominant_character(&a2, &Weight(vec![1, 1])).unwrap();
        assert_eq!(mults(&ch), vec![(vec![0, 0], 2), (vec![1, 1], 1)]);
        assert_eq!(ch, weyl_alternating_character(&a2, &Weight(vec![1, 1])).unwrap());
    }

    #[test]
    fn g2_adjoint_dimension() {
        let g2 = rs("G2");
        let ch = dominant_character(&g2, &Weight(vec![0, 1])).unwrap();
        assert_eq!(ch.dimension(&g2).unwrap(), 14);
    }

    #[test]
    fn oracle_trivial_cases() {
        let a1 = rs("A1");
        let l = Weight(vec![5]);
        assert_eq!(
            dominant_character(&a1, &l).unwrap(),
            weyl_alternating_character(&a1, &l).unwrap()
        );
        let g2 = rs("G2");
        let zero = weyl_alternating_character(&g2, &Weight::zero(2)).unwrap();
        assert_eq!(mults(&zero), vec![(vec![0, 0], 1)]);
    }

    #[test]
    fn oracle_refuses_large_weyl_groups() {
        let e6 = rs("E6");
        assert!(matches!(
            weyl_alternating_character(&e6, &Weight::zero(6)),
            Err(Error::WeylGroupTooLarge { .. })
        ));
    }

    #[test]
    fn weight_value_examples() {
        let a1 = rs("A1");
        let n = full_weight_values(&a1, &Weight(vec![3]), &[2]).unwrap();
        assert_eq!(n, BTreeMap::from([(-3, 1), (-1, 1), (1, 1), (3, 1)]));

        let g2 = rs("G2");
        let n = full_weight_values(&g2, &Weight(vec![1, 0]), &[2, 2]).unwrap();
        let expect: BTreeMap<i64, u64> =
            [-6, -4, -2, 0, 2, 4, 6].into_iter().map(|k| (k, 1)).collect();
        assert_eq!(n, expect);

        let n = full_weight_values(&g2, &Weight(vec![2, 1]), &[0, 0]).unwrap();
        let dim = g2.weyl_dimension(&Weight(vec![2, 1])).unwrap();
        assert_eq!(n, BTreeMap::from([(0, dim)]));
    }

    #[test]
    fn non_dominant_input_is_rejected() {
        let a2 = rs("A2");
        assert!(matches!(
            dominant_character(&a2, &Weight(vec![-1, 0])),
            Err(Error::NotDominant(_))
        ));
        assert!(dominant_character(&a2, &Weight(vec![1])).is_err());
    }

    #[test]
    fn json_shape() {
        let a1 = rs("A1");
        let ch = dominant_character(&a1, &Weight(vec![2])).unwrap();
        let js = ch.to_json().unwrap();
        assert_eq!(js, r#"{"lambda":[2],"mults":[[[0],1],[[2],1]]}"#);
        assert_eq!(Character::from_json(&js).unwrap(), ch);
        assert!(Character::from_json(r#"{"lambda":[2],"mults":[[[0],1]]}"#).is_err());
    }

    #[test]
    fn cache_returns_same_value() {
        let g2 = rs("G2");
        let cache = CharacterCache::new();
        let l = Weight(vec![3, 2]);
        let a = cache.get_or_compute(&g2, &l).unwrap();
        let b = cache.get_or_compute(&g2, &l).unwrap();
        assert!(Arc::ptr_eq(&a, &b));
        assert_eq!(cache.len(), 1);
        assert_eq!(*a, dominant_character(&g2, &l).unwrap());
    }
}
