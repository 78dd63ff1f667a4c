//! Acceptance suite: one pass/fail line per criterion.
//!
//! Runs without the libtest harness so the summary is always printed.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_rational::Rational64;
use verlinde::center::center_group;
use verlinde::fusion::{affine_fold, brane_quantize, fuse, fusion_table, multiply, su2_fusion_oracle, FusionTable};
use verlinde::groupspec::GroupSpec;
use verlinde::modular::{modular_data, verlinde_from_s};
use verlinde::nsc::{free_orbit_fusion, orbit_product_coefficient};
use verlinde::repro::{check_classification, check_invariant, check_levels, goldens};
use verlinde::tensor::weight_system;
use verlinde::{CenterDatum, Orbit, RootDatum, Weight};

type Check = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn datum(name: &str) -> RootDatum {
    RootDatum::from_name(name).expect("valid type")
}

/// Types and level ranges shared by criteria 2 and 3.
const RANGE: [(&str, u32); 4] = [("A1", 8), ("A2", 5), ("B2", 4), ("G2", 3)];

fn criterion_1() -> Check {
    let a1 = datum("A1");
    for k in 1..=8u32 {
        for a in 0..=k {
            for b in 0..=k {
                let p = fuse(&a1, k, &[a as i64].into(), &[b as i64].into()).map_err(err)?;
                for c in 0..=k {
                    let oracle = su2_fusion_oracle(a, b, c, k).map_err(err)?;
                    let got = p.coefficient(&[c as i64].into());
                    ensure(got == i64::from(oracle), || format!("k={k} ({a},{b},{c}): {got} vs {oracle}"))?;
                }
            }
        }
    }
    Ok(())
}

fn criterion_2() -> Check {
    const MATRIX_TOL: f64 = 1e-8;
    for (name, kmax) in RANGE {
        let d = datum(name);
        for k in 0..=kmax {
            let table = fusion_table(&d, k).map_err(err)?;
            let md = modular_data(&d, k).map_err(err)?;
            let defects = [
                ("unitarity", md.unitarity_defect()),
                ("S^2 = C", md.conjugation_defect()),
                ("(ST)^3 = S^2", md.modular_relation_defect()),
            ];
            for (what, v) in defects {
                ensure(v < MATRIX_TOL, || format!("{name} k={k}: {what} defect {v:e}"))?;
            }
            let basis = table.basis();
            for a in basis {
                for b in basis {
                    for c in basis {
                        let v = verlinde_from_s(&md, a, b, c).map_err(err)?;
                        let n = table.coefficient_of(a, b, c).map_err(err)?;
                        ensure(v == n, || format!("{name} k={k} {a}{b}{c}: Verlinde {v} vs Kac-Walton {n}"))?;
                    }
                }
            }
        }
    }
    Ok(())
}

/// Fusion with the weight system of `b` folded onto `a`, and never the
/// other way round.
fn fold_one_way(d: &RootDatum, k: u32, a: &Weight, b: &Weight) -> BTreeMap<Weight, i64> {
    let mut acc = BTreeMap::new();
    for (nu, m) in weight_system(d, b).unwrap().multiplicities {
        if let Some((w, s)) = affine_fold(d, k, &(a + &nu)) {
            *acc.entry(w).or_insert(0) += s * m as i64;
        }
    }
    acc.retain(|_, c| *c != 0);
    acc
}

fn ring_axioms(d: &RootDatum, k: u32, t: &FusionTable) -> Check {
    let n = t.len();
    let name = d.simple_type();
    let conj: Vec<usize> = t
        .basis()
        .iter()
        .map(|w| t.index_of(&d.conjugate_weight(w).unwrap()).unwrap())
        .collect();
    for i in 0..n {
        for j in 0..n {
            let ab = fold_one_way(d, k, &t.basis()[i], &t.basis()[j]);
            let ba = fold_one_way(d, k, &t.basis()[j], &t.basis()[i]);
            ensure(ab == ba, || format!("{name} k={k}: commutativity fails at {i},{j}"))?;
            for l in 0..n {
                ensure(t.coefficient(0, i, l) == u64::from(i == l), || format!("{name} k={k}: unit fails at {i}"))?;
                let lhs = t.coefficient(i, j, l);
                let rhs = t.coefficient(i, conj[l], conj[j]);
                ensure(lhs == rhs, || format!("{name} k={k}: conjugation symmetry fails at {i},{j},{l}"))?;
                for m in 0..n {
                    let left: u64 = (0..n).map(|x| t.coefficient(i, j, x) * t.coefficient(x, l, m)).sum();
                    let right: u64 = (0..n).map(|x| t.coefficient(j, l, x) * t.coefficient(i, x, m)).sum();
                    ensure(left == right, || format!("{name} k={k}: associativity fails at {i},{j},{l},{m}"))?;
                }
            }
        }
    }
    Ok(())
}

fn criterion_3() -> Check {
    for (name, kmax) in RANGE {
        let d = datum(name);
        for k in 0..=kmax {
            let t = fusion_table(&d, k).map_err(err)?;
            ring_axioms(&d, k, &t)?;
        }
    }
    Ok(())
}

fn classification_for(group: &str) -> Check {
    let g: GroupSpec = group.parse().map_err(err)?;
    let golden = goldens().into_iter().find(|x| x.group == group).ok_or("missing golden data")?;
    for case in &golden.classification {
        let line = check_classification(&g, case).map_err(err)?;
        ensure(line.passed, || format!("{}: {}", line.name, line.detail))?;
    }
    Ok(())
}

fn criterion_4() -> Check {
    classification_for("A1/Z2")
}

fn criterion_5() -> Check {
    classification_for("A2/Z3")
}

fn criterion_6() -> Check {
    for golden in goldens() {
        let g: GroupSpec = golden.group.parse().map_err(err)?;
        for case in &golden.invariants {
            let line = check_invariant(&g, case, 1e-8).map_err(err)?;
            ensure(line.passed, || format!("{}: {}", line.name, line.detail))?;
        }
    }
    Ok(())
}

fn criterion_7() -> Check {
    for golden in goldens() {
        let g: GroupSpec = golden.group.parse().map_err(err)?;
        let line = check_levels(&g, &golden.levels).map_err(err)?;
        ensure(line.passed, || format!("{}: {}", line.name, line.detail))?;
        let cd = g.center().map_err(err)?;
        let lb = golden.levels.basic;
        for k in 1..=24 {
            ensure(cd.extension_exists(k) == (k % lb == 0), || format!("{}: extension_exists({k})", g))?;
        }
    }
    Ok(())
}

/// Levels at which the center action keeps characters fixed, from the
/// known norms of the special coweights: SU(2) 1/2, SU(3) 2/3, SU(4) 3/4
/// (cross term 1/4), Spin(8) 1 (cross terms 1/2).
fn preserving_step(name: &str) -> u32 {
    match name {
        "A1" => 2,
        "A2" => 3,
        "A3" => 4,
        "D4" => 2,
        _ => unreachable!(),
    }
}

fn action_properties(cd: &CenterDatum, kmax: u32) -> Check {
    let name = cd.name();
    let step = preserving_step(&cd.datum().simple_type().to_string());
    let zero = Weight::zero(cd.datum().rank());
    for k in 0..=kmax {
        let preserving = k % step == 0;
        ensure(cd.preserves_characters(k) == preserving, || format!("{name} k={k}: preserves_characters"))?;
        let basis = cd.datum().enumerate_level_weights(k);
        for z in 0..cd.order() {
            let mut image: Vec<Weight> = basis.iter().map(|w| cd.center_action(k, z, w).unwrap()).collect();
            // the character shift along z is the character of z.0
            let shift = cd.character_of_weight(&cd.center_action(k, z, &zero).unwrap()).unwrap();
            for w in &basis {
                let mut x = w.clone();
                for _ in 0..cd.element_order(z) {
                    x = cd.center_action(k, z, &x).unwrap();
                }
                ensure(&x == w, || format!("{name} k={k}: z={z} does not have order {}", cd.element_order(z)))?;
                let a = cd.character_of_weight(w).unwrap();
                let b = cd.character_of_weight(&cd.center_action(k, z, w).unwrap()).unwrap();
                if preserving {
                    ensure(a == b, || format!("{name} k={k}: character changes along the orbit of {w}"))?;
                }
                for y in 0..cd.order() {
                    let d = b.value(y) - a.value(y) - shift.value(y);
                    ensure(d.is_integer(), || format!("{name} k={k}: character shift at {w}"))?;
                }
            }
            image.sort();
            ensure(image == basis, || format!("{name} k={k}: z={z} is not a bijection"))?;
        }
        if preserving {
            cd.partition_by_character(k).map_err(err)?;
        } else {
            let e = cd.partition_by_character(k).unwrap_err();
            ensure(e.tag() == "character-shift", || format!("{name} k={k}: expected a character-shift error"))?;
        }
    }
    Ok(())
}

fn criterion_8() -> Check {
    for name in ["A1", "A2", "A3", "D4"] {
        action_properties(&center_group(&datum(name)), 8)?;
    }
    // explicit SU(3) formulas: generated by (k1,k2) -> (k-k1-k2, k1),
    // character (k1 - k2) mod 3 on [lambda_1^vee - lambda_2^vee]
    let su3 = center_group(&datum("A2"));
    let gen = (0..3).find(|&z| su3.elements()[z].node == Some(0)).ok_or("no node-1 element")?;
    let diff = su3.generators()[0];
    for k in 0..=8i64 {
        for k1 in 0..=k {
            for k2 in 0..=k - k1 {
                let w = su3.center_action(k as u32, gen, &[k1, k2].into()).map_err(err)?;
                ensure(w == [k - k1 - k2, k1].into(), || format!("SU(3) action at k={k} ({k1},{k2}) gave {w}"))?;
                let chi = su3.character_of_weight(&[k1, k2].into()).map_err(err)?;
                let expect = Rational64::new((k1 - k2).rem_euclid(3), 3);
                ensure(chi.value(diff) == expect, || format!("SU(3) character at ({k1},{k2})"))?;
            }
        }
    }
    // SU(2): j -> k/2 - j
    let su2 = center_group(&datum("A1"));
    for k in 0..=8i64 {
        for l in 0..=k {
            let w = su2.center_action(k as u32, 1, &[l].into()).map_err(err)?;
            ensure(w == [k - l].into(), || format!("SU(2) action at k={k} l={l}"))?;
        }
    }
    Ok(())
}

fn orbit_symmetry(cd: &CenterDatum, k: u32) -> Check {
    let t = fusion_table(cd.datum(), k).map_err(err)?;
    let n = t.len();
    let act: Vec<Vec<usize>> = (0..cd.order())
        .map(|z| {
            t.basis()
                .iter()
                .map(|w| t.index_of(&cd.center_action(k, z, w).unwrap()).unwrap())
                .collect()
        })
        .collect();
    for z1 in 0..cd.order() {
        for z2 in 0..cd.order() {
            let z12 = cd.multiply(z1, z2);
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        let lhs = t.coefficient(act[z1][a], act[z2][b], act[z12][c]);
                        ensure(lhs == t.coefficient(a, b, c), || {
                            format!("{} k={k}: orbit symmetry fails at z=({z1},{z2}) ({a},{b},{c})", cd.name())
                        })?;
                    }
                }
            }
        }
    }
    Ok(())
}

fn representative_independence(cd: &CenterDatum, k: u32, orbits: &[Orbit]) -> Check {
    let d = cd.datum();
    let free: Vec<&Orbit> = orbits.iter().filter(|o| o.is_free()).collect();
    for a in &free {
        for b in &free {
            for c in &free {
                let f = free_orbit_fusion(cd, k, a, b, c).map_err(err)?;
                for x in &a.members {
                    for y in &b.members {
                        let p = fuse(d, k, x, y).map_err(err)?;
                        for w in &c.members {
                            let s: i64 = (0..cd.order())
                                .map(|z| p.coefficient(&cd.center_action(k, z, w).unwrap()))
                                .sum();
                            ensure(s as u64 == f, || format!("{} k={k}: representative dependence", cd.name()))?;
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// Ring axioms of the orbit algebra on the free orbits of the trivial
/// character sector, with unit the orbit of 0. Products of free orbits may
/// pass through fixed-point orbits, so associativity sums over all orbits.
fn free_sector_ring(cd: &CenterDatum, k: u32) -> Check {
    let all = cd.orbits(k).map_err(err)?;
    let sector = cd.orbits_with_character(k, &cd.character(0)).map_err(err)?;
    let free: Vec<&Orbit> = sector.iter().filter(|o| o.is_free()).collect();
    ensure(free.len() >= 2, || format!("{} k={k}: fewer than two free orbits", cd.name()))?;
    let g = |a: &Orbit, b: &Orbit, c: &Orbit| orbit_product_coefficient(cd, k, a, b, c).unwrap();
    let unit = sector.iter().find(|o| o.contains(&Weight::zero(cd.datum().rank()))).ok_or("no unit orbit")?;
    ensure(unit.is_free(), || "unit orbit is not free".into())?;
    let delta = |a: &Orbit, b: &Orbit| Rational64::from_integer(i64::from(a == b));
    for a in &free {
        for b in &free {
            ensure(g(unit, a, b) == delta(a, b), || "unit law fails".into())?;
            ensure(free_orbit_fusion(cd, k, unit, a, b).unwrap() == u64::from(a == b), || "unit law fails".into())?;
            for c in &free {
                let n = free_orbit_fusion(cd, k, a, b, c).unwrap();
                ensure(g(a, b, c) == Rational64::from_integer(n as i64), || "orbit algebra and free fusion differ".into())?;
                ensure(n == free_orbit_fusion(cd, k, b, a, c).unwrap(), || "commutativity fails".into())?;
                for e in &free {
                    let left: Rational64 = all.iter().map(|x| g(a, b, x) * g(x, c, e)).sum();
                    let right: Rational64 = all.iter().map(|x| g(b, c, x) * g(a, x, e)).sum();
                    ensure(left == right, || format!("{} k={k}: associativity fails", cd.name()))?;
                }
            }
        }
    }
    Ok(())
}

fn criterion_9() -> Check {
    let su2 = center_group(&datum("A1"));
    for k in 0..=8 {
        orbit_symmetry(&su2, k)?;
        representative_independence(&su2, k, &su2.orbits(k).map_err(err)?)?;
    }
    let su3 = center_group(&datum("A2"));
    for k in [3, 6] {
        orbit_symmetry(&su3, k)?;
        representative_independence(&su3, k, &su3.orbits(k).map_err(err)?)?;
    }
    free_sector_ring(&su2, 8)?;
    free_sector_ring(&su3, 6)
}

fn criterion_10() -> Check {
    for name in ["A1", "A2"] {
        let d = datum(name);
        for k in 0..=5 {
            let basis = d.enumerate_level_weights(k);
            for a in &basis {
                for b in &basis {
                    let x = brane_quantize(&d, k, a).map_err(err)?;
                    let y = brane_quantize(&d, k, b).map_err(err)?;
                    let lhs = multiply(&d, &x, &y).map_err(err)?;
                    let rhs = fuse(&d, k, a, b).map_err(err)?;
                    ensure(lhs == rhs, || format!("{name} k={k}: brane product {a}*{b}"))?;
                }
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Check, Option<Duration>); 10] = [
        ("SU(2) closed-form equivalence", criterion_1, Some(Duration::from_secs(1))),
        ("Kac-Walton vs Verlinde, S-matrix identities", criterion_2, Some(Duration::from_secs(60))),
        ("fusion ring axioms", criterion_3, None),
        ("SO(3) classification", criterion_4, None),
        ("SU(3)/Z3 classification", criterion_5, None),
        ("modular invariants", criterion_6, Some(Duration::from_secs(10))),
        ("level arithmetic", criterion_7, None),
        ("center action", criterion_8, None),
        ("free-orbit fusion", criterion_9, None),
        ("brane fusion homomorphism", criterion_10, None),
    ];
    let mut failed = 0;
    for (i, (name, run, budget)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut outcome = run();
        let took = start.elapsed();
        if let (Ok(()), Some(limit)) = (&outcome, budget) {
            if took > *limit {
                outcome = Err(format!("took {took:.2?}, budget {limit:?}"));
            }
        }
        match outcome {
            Ok(()) => println!("criterion {:>2}  PASS  {name} ({took:.2?})", i + 1),
            Err(e) => {
                failed += 1;
                println!("criterion {:>2}  FAIL  {name}: {e}", i + 1);
            }
        }
    }
    if failed == 0 {
        println!("acceptance: all 10 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} criteria failed");
        ExitCode::FAILURE
    }
}
