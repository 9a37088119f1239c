//! Branching of L(λ) to an sl2-subalgebra described by its marks `αᵢ(h)`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::character::{dominant_character, weight_values, Character};
use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, Weight};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EmbeddingKind {
    Principal,
    /// Root sl2 for the positive root with these simple-root coordinates.
    Root(Vec<i64>),
    Custom,
}

/// An sl2-subalgebra, recorded through the values `αᵢ(h)` of its
/// semisimple element `h` on the simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Sl2Embedding {
    marks: Vec<i64>,
    kind: EmbeddingKind,
}

impl Sl2Embedding {
    /// User-supplied marks. Nothing beyond the length is checked here; the
    /// symmetry certificate in [`sl2_decompose`] rejects marks that do not
    /// come from an sl2 triple.
    pub fn custom(rs: &RootSystem, marks: Vec<i64>) -> Result<Self> {
        rs.check_len(&marks)?;
        Ok(Self {
            marks,
            kind: EmbeddingKind::Custom,
        })
    }

    pub fn marks(&self) -> &[i64] {
        &self.marks
    }

    pub fn kind(&self) -> &EmbeddingKind {
        &self.kind
    }
}

pub fn principal_embedding(rs: &RootSystem) -> Sl2Embedding {
    Sl2Embedding {
        marks: vec![2; rs.rank()],
        kind: EmbeddingKind::Principal,
    }
}

/// Root sl2 through `β`: marks are `⟨αⱼ, β^∨⟩`.
pub fn root_embedding(rs: &RootSystem, beta: &[i64]) -> Result<Sl2Embedding> {
    rs.check_len(beta)?;
    let idx = rs
        .root_position(beta)
        .ok_or_else(|| Error::NotAPositiveRoot(beta.to_vec()))?;
    let coroot = &rs.positive_coroots()[idx];
    let a = rs.cartan();
    let marks = (0..rs.rank())
        .map(|j| (0..rs.rank()).map(|i| coroot[i] * a[j][i]).sum())
        .collect();
    Ok(Sl2Embedding {
        marks,
        kind: EmbeddingKind::Root(beta.to_vec()),
    })
}

/// Embedding spec as accepted on the command line:
/// `principal`, `root:<c1,c2,..>` (simple-root coordinates) or `marks:<m1,m2,..>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EmbeddingSpec {
    Principal,
    Root(Vec<i64>),
    Marks(Vec<i64>),
}

impl EmbeddingSpec {
    pub fn resolve(&self, rs: &RootSystem) -> Result<Sl2Embedding> {
        match self {
            EmbeddingSpec::Principal => Ok(principal_embedding(rs)),
            EmbeddingSpec::Root(b) => root_embedding(rs, b),
            EmbeddingSpec::Marks(m) => Sl2Embedding::custom(rs, m.clone()),
        }
    }
}

impl FromStr for EmbeddingSpec {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let list = |v: &str| -> std::result::Result<Vec<i64>, String> {
            v.split(',')
                .map(|x| x.trim().parse::<i64>().map_err(|e| format!("{x:?}: {e}")))
                .collect()
        };
        match s.split_once(':') {
            None if s == "principal" => Ok(EmbeddingSpec::Principal),
            Some(("root", v)) => Ok(EmbeddingSpec::Root(list(v)?)),
            Some(("marks", v)) => Ok(EmbeddingSpec::Marks(list(v)?)),
            _ => Err(format!(
                "unknown embedding {s:?}; expected principal, root:<coords> or marks:<values>"
            )),
        }
    }
}

impl fmt::Display for EmbeddingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[i64]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        match self {
            EmbeddingSpec::Principal => write!(f, "principal"),
            EmbeddingSpec::Root(v) => write!(f, "root:{}", join(v)),
            EmbeddingSpec::Marks(v) => write!(f, "marks:{}", join(v)),
        }
    }
}

/// Multiplicities of the sl2 irreducibles V(k) (dimension k+1).
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Sl2Decomposition {
    mults: BTreeMap<u64, u64>,
}

impl Sl2Decomposition {
    pub fn mults(&self) -> &BTreeMap<u64, u64> {
        &self.mults
    }

    pub fn multiplicity(&self, k: u64) -> u64 {
        self.mults.get(&k).copied().unwrap_or(0)
    }

    pub fn dimension(&self) -> u64 {
        self.mults.iter().map(|(k, m)| (k + 1) * m).sum()
    }

    /// Dimension of the sl2-invariants, the multiplicity of V(0).
    pub fn invariant_dim(&self) -> u64 {
        self.multiplicity(0)
    }

    /// Smallest dimension of an sl2 irreducible that occurs.
    pub fn g0(&self) -> Option<u64> {
        self.mults.keys().next().map(|k| k + 1)
    }
}

/// Recovers the sl2 decomposition from the value distribution `N` of `h` on
/// weights: `mult(V(k)) = N_k − N_{k+2}`.
///
/// Checks `N_j = N_{−j}` and that no multiplicity is negative.
pub fn decompose_values(values: &BTreeMap<i64, u64>) -> Result<Sl2Decomposition> {
    let n = |j: i64| values.get(&j).copied().unwrap_or(0);
    for (&j, &c) in values {
        if n(-j) != c {
            return Err(Error::Sl2Certificate(format!(
                "N_{j} = {c} but N_{} = {}",
                -j,
                n(-j)
            )));
        }
    }
    let top = values.keys().next_back().copied().unwrap_or(0).max(0);
    let mut mults = BTreeMap::new();
    for k in 0..=top {
        let (a, b) = (n(k), n(k + 2));
        if a < b {
            return Err(Error::Sl2Certificate(format!(
                "N_{k} = {a} < N_{} = {b}",
                k + 2
            )));
        }
        if a > b {
            mults.insert(k as u64, a - b);
        }
    }
    Ok(Sl2Decomposition { mults })
}

/// Value distribution and decomposition of one L(λ).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Branching {
    pub values: BTreeMap<i64, u64>,
    pub decomposition: Sl2Decomposition,
}

pub fn branch_character(rs: &RootSystem, ch: &Character, emb: &Sl2Embedding) -> Result<Branching> {
    let values = weight_values(rs, ch, emb.marks())?;
    let decomposition = decompose_values(&values)?;
    Ok(Branching {
        values,
        decomposition,
    })
}

pub fn sl2_decompose(rs: &RootSystem, lambda: &Weight, emb: &Sl2Embedding) -> Result<Sl2Decomposition> {
    let ch = dominant_character(rs, lambda)?;
    Ok(branch_character(rs, &ch, emb)?.decomposition)
}

pub fn invariant_dim(rs: &RootSystem, lambda: &Weight, emb: &Sl2Embedding) -> Result<u64> {
    Ok(sl2_decompose(rs, lambda, emb)?.invariant_dim())
}

pub fn g0(rs: &RootSystem, lambda: &Weight, emb: &Sl2Embedding) -> Result<u64> {
    sl2_decompose(rs, lambda, emb)?
        .g0()
        .ok_or_else(|| Error::Internal("empty sl2 decomposition".into()))
}
