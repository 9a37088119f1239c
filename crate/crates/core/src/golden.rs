//! Reference data shipped with the crate: the G2 invariant and g₀ tables, the
//! exceptional weights, the complement E′, and the maximal-parabolic tables.

use crate::error::{Error, Result};
use crate::rootsys::{parse_type, Family, SimpleComponent};

pub const TABLE1_TXT: &str = include_str!("../fixtures/table1.txt");
pub const TABLE2_TXT: &str = include_str!("../fixtures/table2.txt");
pub const EXCEPTIONS_TXT: &str = include_str!("../fixtures/exceptions.txt");
pub const E_PRIME_TXT: &str = include_str!("../fixtures/e_prime.txt");
pub const PARABOLIC_TXT: &str = include_str!("../fixtures/parabolic.txt");
pub const E_VALUES_TXT: &str = include_str!("../fixtures/e_values.txt");
pub const EXCLUSION_SL3_TXT: &str = include_str!("../fixtures/exclusion_sl3.txt");

/// Highest weights `[a, b]` of G2 modules with a principal-sl2 invariant
/// whose ℕ-span has the 73-element complement E′.
pub const G2_INVARIANT_GENERATORS: [[u32; 2]; 9] = [
    [0, 2],
    [0, 17],
    [4, 0],
    [6, 0],
    [15, 0],
    [5, 1],
    [1, 3],
    [7, 1],
    [1, 6],
];

/// The smaller 6-element generating set; its complement E has 194 elements.
pub const G2_INVARIANT_GENERATORS_SMALL: [[u32; 2]; 6] =
    [[0, 2], [0, 17], [4, 0], [15, 0], [5, 1], [1, 3]];

fn data_lines(s: &str) -> impl Iterator<Item = &str> {
    s.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
}

fn parse_grid(s: &str) -> Vec<Vec<u64>> {
    data_lines(s)
        .map(|l| {
            l.split_whitespace()
                .map(|x| x.parse().expect("fixture grid entry"))
                .collect()
        })
        .collect()
}

fn parse_pairs(s: &str) -> Vec<Vec<u32>> {
    data_lines(s)
        .map(|l| {
            l.split_whitespace()
                .map(|x| x.parse().expect("fixture pair entry"))
                .collect()
        })
        .collect()
}

/// `table1()[i][j] = dim [i, j]^K`, 20×20.
pub fn table1() -> Vec<Vec<u64>> {
    parse_grid(TABLE1_TXT)
}

/// `table2()[i][j] = g₀(iω₁ + jω₂)`, 20×20.
pub fn table2() -> Vec<Vec<u64>> {
    parse_grid(TABLE2_TXT)
}

/// The 26 weights `[a, b]` without invariants, in reference order.
pub fn exceptions() -> Vec<Vec<u32>> {
    parse_pairs(EXCEPTIONS_TXT)
}

/// The 73 elements of E′, in reference order.
pub fn e_prime() -> Vec<Vec<u32>> {
    parse_pairs(E_PRIME_TXT)
}

/// Canonical form of a Levi label: D3 read as A3, rank-one pieces as A1,
/// C2 as B2, components sorted.
pub fn normalize_levi(label: &str) -> Result<Vec<SimpleComponent>> {
    if label == "-" {
        return Ok(Vec::new());
    }
    let mut comps: Vec<SimpleComponent> = parse_type(label)?
        .into_iter()
        .map(normalize_component)
        .collect();
    comps.sort();
    Ok(comps)
}

pub fn normalize_component(c: SimpleComponent) -> SimpleComponent {
    match (c.family, c.rank) {
        (Family::D, 3) => SimpleComponent {
            family: Family::A,
            rank: 3,
        },
        (Family::C, 2) => SimpleComponent {
            family: Family::B,
            rank: 2,
        },
        (Family::B | Family::C, 1) => SimpleComponent {
            family: Family::A,
            rank: 1,
        },
        _ => c,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldenParabolicRow {
    pub ty: SimpleComponent,
    pub node: usize,
    /// Label as recorded, e.g. `A1D3`.
    pub levi_label: String,
    pub dim_g_mod_lss: u64,
}

pub fn parabolic_rows() -> Result<Vec<GoldenParabolicRow>> {
    data_lines(PARABOLIC_TXT)
        .map(|l| {
            let f: Vec<&str> = l.split_whitespace().collect();
            let bad = || Error::ParseType(l.to_string());
            if f.len() != 4 {
                return Err(bad());
            }
            Ok(GoldenParabolicRow {
                ty: f[0].parse()?,
                node: f[1].parse().map_err(|_| bad())?,
                levi_label: f[2].to_string(),
                dim_g_mod_lss: f[3].parse().map_err(|_| bad())?,
            })
        })
        .collect()
}

/// Types covered by the parabolic fixture, in file order.
pub fn parabolic_types() -> Result<Vec<SimpleComponent>> {
    let mut out: Vec<SimpleComponent> = Vec::new();
    for row in parabolic_rows()? {
        if !out.contains(&row.ty) {
            out.push(row.ty);
        }
    }
    Ok(out)
}

pub fn e_values() -> Result<Vec<(SimpleComponent, u64)>> {
    data_lines(E_VALUES_TXT)
        .map(|l| {
            let (t, v) = l
                .split_once(' ')
                .ok_or_else(|| Error::ParseType(l.to_string()))?;
            let v = v
                .trim()
                .parse()
                .map_err(|_| Error::ParseType(l.to_string()))?;
            Ok((t.parse()?, v))
        })
        .collect()
}

/// E(𝔰𝔩₃), one representative per isomorphism class.
pub fn exclusion_sl3() -> Result<Vec<SimpleComponent>> {
    data_lines(EXCLUSION_SL3_TXT).map(|l| l.parse()).collect()
}
