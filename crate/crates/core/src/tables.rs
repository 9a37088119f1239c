//! Grids of invariant dimensions and g₀ values for rank-two types, and the
//! exceptional-weight computation for G2 with a principal sl2.

use rayon::prelude::*;
use serde::Serialize;

use crate::character::CharacterSource;
use crate::error::{Error, Result};
use crate::golden::{G2_INVARIANT_GENERATORS, G2_INVARIANT_GENERATORS_SMALL};
use crate::rootsys::{RootSystem, Weight};
use crate::semigroup::{ComplementResult, GeneratorSet};
use crate::sl2branch::{branch_character, principal_embedding, Sl2Embedding};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GridCell {
    pub invariant_dim: u64,
    pub g0: u64,
}

/// `grid[i][j]` describes L(iω₁ + jω₂) restricted to `emb`.
pub fn rank2_grid<S: CharacterSource + ?Sized>(
    rs: &RootSystem,
    emb: &Sl2Embedding,
    max_i: u32,
    max_j: u32,
    source: &S,
) -> Result<Vec<Vec<GridCell>>> {
    if rs.rank() != 2 {
        return Err(Error::LengthMismatch {
            expected: 2,
            got: rs.rank(),
        });
    }
    let cells: Vec<(u32, u32)> = (0..=max_i)
        .flat_map(|i| (0..=max_j).map(move |j| (i, j)))
        .collect();
    let values: Vec<GridCell> = cells
        .par_iter()
        .map(|&(i, j)| {
            let ch = source.character(rs, &Weight(vec![i as i64, j as i64]))?;
            let d = branch_character(rs, &ch, emb)?.decomposition;
            Ok(GridCell {
                invariant_dim: d.invariant_dim(),
                g0: d.g0().ok_or_else(|| Error::Internal("empty decomposition".into()))?,
            })
        })
        .collect::<Result<_>>()?;
    Ok(values
        .chunks(max_j as usize + 1)
        .map(|row| row.to_vec())
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExceptionReport {
    /// Complement of the 9-generator semigroup.
    pub e_prime: ComplementResult,
    /// Elements of E′ whose module has no invariants, sorted.
    pub exceptions: Vec<Vec<u32>>,
    /// Complement of the 6-generator semigroup.
    pub e_small: ComplementResult,
    /// Elements of the 6-generator complement without invariants, sorted.
    pub e_small_exceptions: Vec<Vec<u32>>,
}

fn zero_invariant_points<S: CharacterSource + ?Sized>(
    rs: &RootSystem,
    emb: &Sl2Embedding,
    points: &[Vec<u32>],
    source: &S,
) -> Result<Vec<Vec<u32>>> {
    let flags: Vec<bool> = points
        .par_iter()
        .map(|p| {
            let lambda = Weight(p.iter().map(|&x| x as i64).collect());
            let ch = source.character(rs, &lambda)?;
            Ok(branch_character(rs, &ch, emb)?.decomposition.invariant_dim() == 0)
        })
        .collect::<Result<_>>()?;
    Ok(points
        .iter()
        .zip(flags)
        .filter(|(_, z)| *z)
        .map(|(p, _)| p.clone())
        .collect())
}

/// Every dominant G2 weight outside the semigroup spanned by weights known to
/// carry principal-sl2 invariants, filtered down to those with none.
///
/// Elements of the semigroup have invariants, so the filtered complement is
/// the complete list of exceptional weights once the complement is certified.
pub fn g2_exceptions<S: CharacterSource + ?Sized>(
    source: &S,
    box_bound: u32,
) -> Result<ExceptionReport> {
    let rs = RootSystem::from_type("G2")?;
    let emb = principal_embedding(&rs);
    let complement = |gens: &[[u32; 2]]| -> Result<ComplementResult> {
        let gs = GeneratorSet::new(2, gens.iter().map(|g| g.to_vec()).collect())?;
        let c = gs.complement(box_bound)?;
        if !c.certified {
            return Err(Error::NotCertified { bound: box_bound });
        }
        Ok(c)
    };
    let e_prime = complement(&G2_INVARIANT_GENERATORS)?;
    let e_small = complement(&G2_INVARIANT_GENERATORS_SMALL)?;
    let exceptions = zero_invariant_points(&rs, &emb, &e_prime.points, source)?;
    let e_small_exceptions = zero_invariant_points(&rs, &emb, &e_small.points, source)?;
    Ok(ExceptionReport {
        e_prime,
        exceptions,
        e_small,
        e_small_exceptions,
    })
}
