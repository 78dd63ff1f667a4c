//! Reproduction of the SO(3) and SU(3)/Z3 tables against embedded golden
//! data: classification lists, modular invariants and level invariants.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::groupspec::GroupSpec;
use crate::modular::modular_data;
use crate::nsc::{classify_irreps, invariance_defects, modular_invariant};
use crate::rootdata::Weight;

#[derive(Debug, Clone, Deserialize)]
pub struct GoldenOrbit {
    pub members: Vec<Weight>,
    pub stabilizer_order: usize,
}

#[derive(Debug, Clone, Deserialize)]
pub struct GoldenClassification {
    pub level: u32,
    pub character: String,
    pub orbits: Vec<GoldenOrbit>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct GoldenBlock {
    pub members: Vec<Weight>,
    pub coefficient: u64,
}

#[derive(Debug, Clone, Deserialize)]
pub struct GoldenInvariant {
    pub level: u32,
    pub blocks: Vec<GoldenBlock>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct GoldenLevels {
    pub basic: u32,
    pub multiplicative: u32,
    pub fundamental: Option<u32>,
}

#[derive(Debug, Clone, Deserialize)]
pub struct Golden {
    pub group: String,
    pub levels: GoldenLevels,
    pub classification: Vec<GoldenClassification>,
    pub invariants: Vec<GoldenInvariant>,
}

pub fn goldens() -> Vec<Golden> {
    [include_str!("../data/golden_so3.json"), include_str!("../data/golden_su3_z3.json")]
        .iter()
        .map(|s| serde_json::from_str(s).expect("embedded golden data parses"))
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct ReproLine {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

type OrbitKey = (Vec<Weight>, usize);

fn orbit_key(mut members: Vec<Weight>, stab: usize) -> OrbitKey {
    members.sort();
    (members, stab)
}

/// Check one classification list. Each orbit must appear once per
/// stabilizer character, with `rho` running over `0..|Z_lambda|`.
pub fn check_classification(g: &GroupSpec, case: &GoldenClassification) -> Result<ReproLine> {
    let cd = g.center()?;
    let chi = cd.parse_character(&case.character)?;
    let labels = classify_irreps(&cd, case.level, &chi)?;
    let expect: BTreeSet<OrbitKey> = case
        .orbits
        .iter()
        .map(|o| orbit_key(o.members.clone(), o.stabilizer_order))
        .collect();
    let got: BTreeSet<OrbitKey> = labels
        .iter()
        .map(|l| orbit_key(l.orbit.members.clone(), l.stabilizer_order()))
        .collect();
    let mut ok = expect == got;
    for key in &got {
        let rhos: Vec<usize> = labels
            .iter()
            .filter(|l| l.orbit.members == key.0)
            .map(|l| l.rho)
            .collect();
        ok &= rhos == (0..key.1).collect::<Vec<_>>();
    }
    let count: usize = case.orbits.iter().map(|o| o.stabilizer_order).sum();
    ok &= labels.len() == count;
    Ok(ReproLine {
        name: format!("{} k={} chi={} classification", g, case.level, case.character),
        passed: ok,
        detail: format!("{} irreps over {} orbits", labels.len(), got.len()),
    })
}

pub fn check_invariant(g: &GroupSpec, case: &GoldenInvariant, tolerance: f64) -> Result<ReproLine> {
    let cd = g.center()?;
    let mi = modular_invariant(&cd, case.level)?;
    let n = mi.basis.len();
    let mut expect = vec![vec![0u64; n]; n];
    for b in &case.blocks {
        let idx: Vec<usize> = b.members.iter().filter_map(|w| mi.basis.binary_search(w).ok()).collect();
        for &i in &idx {
            for &j in &idx {
                expect[i][j] += b.coefficient;
            }
        }
    }
    let md = modular_data(cd.datum(), case.level)?;
    let (ds, dt) = invariance_defects(&mi, &md)?;
    let passed = expect == mi.m && ds < tolerance && dt < tolerance;
    Ok(ReproLine {
        name: format!("{} k={} modular invariant", g, case.level),
        passed,
        detail: format!("|MS-SM|={ds:.1e} |MT-TM|={dt:.1e}"),
    })
}

pub fn check_levels(g: &GroupSpec, expect: &GoldenLevels) -> Result<ReproLine> {
    let cd = g.center()?;
    let (b, m) = (cd.basic_level(), cd.multiplicative_level());
    let f = cd.fundamental_level().ok();
    Ok(ReproLine {
        name: format!("{g} levels"),
        passed: b == expect.basic && m == expect.multiplicative && f == expect.fundamental,
        detail: format!("basic={b} multiplicative={m} fundamental={f:?}"),
    })
}

/// Run every golden check.
pub fn run_repro(tolerance: f64) -> Result<Vec<ReproLine>> {
    let mut out = Vec::new();
    for golden in goldens() {
        let g: GroupSpec = golden.group.parse()?;
        out.push(check_levels(&g, &golden.levels)?);
        for case in &golden.classification {
            out.push(check_classification(&g, case)?);
        }
        for case in &golden.invariants {
            out.push(check_invariant(&g, case, tolerance)?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_golden_case_passes() {
        let lines = run_repro(1e-8).unwrap();
        assert_eq!(lines.len(), 1 + 8 + 2 + 1 + 6 + 2);
        for l in &lines {
            assert!(l.passed, "{} ({})", l.name, l.detail);
        }
    }
}
