//! Membership and finite complements for finitely generated subsemigroups of ℕ^r.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest box (in cells) a single DP grid may cover.
pub const MAX_GRID_CELLS: u64 = 1 << 32;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorSet {
    dim: usize,
    gens: Vec<Vec<u32>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComplementResult {
    /// Non-members inside the box, sorted lexicographically.
    pub points: Vec<Vec<u32>>,
    /// True when no non-member exists outside `points`.
    pub certified: bool,
    pub box_bound: u32,
}

impl GeneratorSet {
    pub fn new(dim: usize, gens: Vec<Vec<u32>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidGenerators("dimension must be positive".into()));
        }
        if gens.is_empty() {
            return Err(Error::InvalidGenerators("no generators".into()));
        }
        for g in &gens {
            if g.len() != dim {
                return Err(Error::LengthMismatch {
                    expected: dim,
                    got: g.len(),
                });
            }
            if g.iter().all(|&x| x == 0) {
                return Err(Error::InvalidGenerators("zero vector".into()));
            }
        }
        Ok(Self { dim, gens })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn gens(&self) -> &[Vec<u32>] {
        &self.gens
    }

    /// Largest coordinate over all generators.
    pub fn gmax(&self) -> u32 {
        self.gens.iter().flatten().copied().max().unwrap_or(0)
    }

    /// True iff `v` is an ℕ-combination of the generators.
    pub fn member(&self, v: &[u32]) -> Result<bool> {
        if v.len() != self.dim {
            return Err(Error::LengthMismatch {
                expected: self.dim,
                got: v.len(),
            });
        }
        let grid = Grid::fill(self, v)?;
        Ok(grid.get(grid.cells - 1))
    }

    /// DP over `[0, box_bound]^r`, returning every non-member in the box and
    /// whether the box provably contains all of them.
    ///
    /// The certificate needs, on every axis, a generator supported on that
    /// axis alone. If every point with some coordinate above
    /// `box_bound − gmax` is a member, then any point outside the box can be
    /// walked back into that shell by subtracting axis generators, so it is a
    /// member too.
    pub fn complement(&self, box_bound: u32) -> Result<ComplementResult> {
        for axis in 0..self.dim {
            let has_axis = self
                .gens
                .iter()
                .any(|g| g.iter().enumerate().all(|(i, &x)| (i == axis) == (x > 0)));
            if !has_axis {
                return Err(Error::AxisGeneratorMissing { axis });
            }
        }
        let extent = vec![box_bound; self.dim];
        let grid = Grid::fill(self, &extent)?;
        let threshold = box_bound.saturating_sub(self.gmax());
        let mut points = Vec::new();
        let mut certified = true;
        let mut coords = vec![0u32; self.dim];
        for idx in 0..grid.cells {
            if !grid.get(idx) {
                if coords.iter().any(|&c| c > threshold) {
                    certified = false;
                }
                points.push(coords.clone());
            }
            grid.advance(&mut coords);
        }
        Ok(ComplementResult {
            points,
            certified,
            box_bound,
        })
    }
}

/// Dense reachability bit-grid over `[0, extent]`, last coordinate fastest.
struct Grid {
    extent: Vec<u32>,
    strides: Vec<u64>,
    cells: u64,
    bits: Vec<u64>,
}

impl Grid {
    fn fill(gs: &GeneratorSet, extent: &[u32]) -> Result<Self> {
        let r = extent.len();
        let mut strides = vec![1u64; r];
        let mut cells: u64 = 1;
        for i in (0..r).rev() {
            strides[i] = cells;
            cells = cells
                .checked_mul(extent[i] as u64 + 1)
                .filter(|&c| c <= MAX_GRID_CELLS)
                .ok_or(Error::IterationCap {
                    what: "semigroup grid",
                    cap: MAX_GRID_CELLS,
                })?;
        }
        let mut grid = Grid {
            extent: extent.to_vec(),
            strides,
            cells,
            bits: vec![0; cells.div_ceil(64) as usize],
        };
        // Generators that cannot fit in the box never contribute.
        let usable: Vec<(&Vec<u32>, u64)> = gs
            .gens
            .iter()
            .filter(|g| g.iter().zip(extent).all(|(a, b)| a <= b))
            .map(|g| (g, grid.offset(g)))
            .collect();
        grid.set(0);
        let mut coords = vec![0u32; r];
        for idx in 0..cells {
            if idx > 0 {
                let hit = usable.iter().any(|(g, off)| {
                    g.iter().zip(&coords).all(|(a, b)| a <= b) && grid.get(idx - off)
                });
                if hit {
                    grid.set(idx);
                }
            }
            grid.advance(&mut coords);
        }
        Ok(grid)
    }

    fn offset(&self, v: &[u32]) -> u64 {
        v.iter().zip(&self.strides).map(|(&a, s)| a as u64 * s).sum()
    }

    fn get(&self, idx: u64) -> bool {
        self.bits[(idx / 64) as usize] >> (idx % 64) & 1 == 1
    }

    fn set(&mut self, idx: u64) {
        self.bits[(idx / 64) as usize] |= 1 << (idx % 64);
    }

    fn advance(&self, coords: &mut [u32]) {
        for i in (0..coords.len()).rev() {
            if coords[i] < self.extent[i] {
                coords[i] += 1;
                return;
            }
            coords[i] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gs(dim: usize, gens: &[&[u32]]) -> GeneratorSet {
        GeneratorSet::new(dim, gens.iter().map(|g| g.to_vec()).collect()).unwrap()
    }

    #[test]
    fn numerical_semigroup_two_three() {
        let s = gs(1, &[&[2], &[3]]);
        let c = s.complement(10).unwrap();
        assert_eq!(c.points, vec![vec![1]]);
        assert!(c.certified);
        assert!(s.member(&[0]).unwrap());
        assert!(!s.member(&[1]).unwrap());
        assert!(s.member(&[7]).unwrap());
    }

    #[test]
    fn small_box_is_not_certified() {
        let s = gs(1, &[&[5], &[7]]);
        // 23 is the largest gap of ⟨5, 7⟩.
        assert!(!s.complement(20).unwrap().certified);
        let c = s.complement(40).unwrap();
        assert!(c.certified);
        assert_eq!(c.points.last(), Some(&vec![23]));
        assert_eq!(c.points.len(), 12);
    }

    #[test]
    fn rejects_bad_generators() {
        assert!(GeneratorSet::new(2, vec![]).is_err());
        assert!(GeneratorSet::new(2, vec![vec![0, 0]]).is_err());
        assert!(GeneratorSet::new(2, vec![vec![1]]).is_err());
        let s = gs(2, &[&[1, 1], &[2, 0]]);
        assert!(matches!(
            s.complement(10),
            Err(Error::AxisGeneratorMissing { axis: 1 })
        ));
        assert!(s.member(&[1]).is_err());
    }

    #[test]
    fn membership_in_two_dimensions() {
        let s = gs(2, &[&[0, 2], &[3, 0], &[1, 1]]);
        assert!(s.member(&[0, 0]).unwrap());
        assert!(s.member(&[4, 1]).unwrap());
        assert!(!s.member(&[2, 0]).unwrap());
        assert!(!s.member(&[0, 1]).unwrap());
    }
}
