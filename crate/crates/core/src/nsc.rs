//! Representations of the central extensions of `LG` for `G = G~/Z`:
//! classification by orbits and stabilizer characters, Virasoro
//! characters, free-orbit fusion, and simple-current modular invariants.

use num_complex::Complex64;
use num_rational::Rational64;
use num_traits::Zero;
use serde::Serialize;

use crate::center::{CenterCharacter, CenterDatum, Orbit};
use crate::error::{Error, Result};
use crate::fusion::{fuse, FusionElement};
use crate::modular::ModularData;
use crate::rootdata::{SimpleType, Weight};

/// An irreducible positive-energy representation of the extension of `LG`
/// with character `chi`: a `Z`-orbit plus a character `rho` of its
/// stabilizer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrrepLabel {
    pub level: u32,
    pub character: CenterCharacter,
    pub orbit: Orbit,
    /// Index of the stabilizer character, `rho_m(g) = m / |Z_lambda|` turns
    /// on the stabilizer generator `g`.
    pub rho: usize,
    /// Turn values of `rho` on the stabilizer elements, in stabilizer order.
    pub rho_values: Vec<Rational64>,
}

impl IrrepLabel {
    pub fn stabilizer_order(&self) -> usize {
        self.orbit.stabilizer.len()
    }
}

/// All irreducibles at level k with character `chi`, ordered by orbit
/// representative and then by `rho`.
pub fn classify_irreps(cd: &CenterDatum, k: u32, chi: &CenterCharacter) -> Result<Vec<IrrepLabel>> {
    if !cd.extension_exists(k) {
        return Err(Error::NoExtension { level: k, basic: cd.basic_level() });
    }
    let mut out = Vec::new();
    for orbit in cd.orbits_with_character(k, chi)? {
        let rhos = cd.stabilizer_characters(&orbit.stabilizer);
        for (rho, rho_values) in rhos.into_iter().enumerate() {
            out.push(IrrepLabel { level: k, character: chi.clone(), orbit: orbit.clone(), rho, rho_values });
        }
    }
    Ok(out)
}

/// `sum_{lambda' in Z.lambda} chi_{k,lambda'}`, independent of `rho`.
pub fn virasoro_character(cd: &CenterDatum, label: &IrrepLabel) -> Result<FusionElement> {
    FusionElement::from_terms(cd.datum(), label.level, label.orbit.members.iter().map(|w| (w.clone(), 1)))
}

fn check_orbit(cd: &CenterDatum, k: u32, o: &Orbit) -> Result<()> {
    let bad = || Error::BadOrbit(cd.name(), k);
    let actual = cd.orbit_of(k, &o.representative).map_err(|_| bad())?;
    if actual.members != o.members || actual.stabilizer != o.stabilizer || actual.representative != o.representative {
        return Err(bad());
    }
    Ok(())
}

/// `F_{AB}^C = sum_{z in Z} N_{a b}^{z.c}` for representatives `a, b, c`;
/// defined for every orbit, free or not.
pub fn orbit_sum_structure_constant(cd: &CenterDatum, k: u32, a: &Orbit, b: &Orbit, c: &Orbit) -> Result<u64> {
    for o in [a, b, c] {
        check_orbit(cd, k, o)?;
    }
    let product = fuse(cd.datum(), k, &a.representative, &b.representative)?;
    let mut total = 0i64;
    for z in 0..cd.order() {
        total += product.coefficient(&cd.center_action(k, z, &c.representative)?);
    }
    Ok(total as u64)
}

/// Structure constant of the orbit algebra in the basis `e_O = s_O / |O|`,
/// where `s_O = sum_{w in O} chi_w`: `e_A e_B = sum_C F_{AB}^C / |Z_C| e_C`.
/// The unit is `e_{Z.0}`, and on free orbits this is `free_orbit_fusion`.
pub fn orbit_product_coefficient(cd: &CenterDatum, k: u32, a: &Orbit, b: &Orbit, c: &Orbit) -> Result<Rational64> {
    let f = orbit_sum_structure_constant(cd, k, a, b, c)?;
    Ok(Rational64::new(f as i64, c.stabilizer.len() as i64))
}

/// Fusion coefficient between free orbits.
pub fn free_orbit_fusion(cd: &CenterDatum, k: u32, a: &Orbit, b: &Orbit, c: &Orbit) -> Result<u64> {
    if [a, b, c].iter().any(|o| !o.is_free()) {
        return Err(Error::FixedPointFusion);
    }
    orbit_sum_structure_constant(cd, k, a, b, c)
}

/// Partition function `Z = sum M_{lambda mu} chi_lambda conj(chi_mu)` over
/// the level-k basis of the simply connected group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ModularInvariant {
    #[serde(skip)]
    pub ty: SimpleType,
    pub level: u32,
    pub basis: Vec<Weight>,
    #[serde(rename = "M")]
    pub m: Vec<Vec<u64>>,
}

impl ModularInvariant {
    pub fn identity(cd: &CenterDatum, k: u32) -> Self {
        let basis = cd.datum().enumerate_level_weights(k);
        let n = basis.len();
        let m = (0..n).map(|i| (0..n).map(|j| u64::from(i == j)).collect()).collect();
        ModularInvariant { ty: cd.datum().simple_type(), level: k, basis, m }
    }

    pub fn entry(&self, a: &Weight, b: &Weight) -> u64 {
        match (self.basis.binary_search(a), self.basis.binary_search(b)) {
            (Ok(i), Ok(j)) => self.m[i][j],
            _ => 0,
        }
    }
}

/// `M = sum_{O in Lambda*_{k,1}/Z} |Z_O| 1_O 1_O^T`.
pub fn modular_invariant(cd: &CenterDatum, k: u32) -> Result<ModularInvariant> {
    let lm = cd.multiplicative_level();
    if k % lm != 0 {
        return Err(Error::NotMultiplicative { level: k, multiplicative: lm });
    }
    if !cd.extension_exists(k) {
        return Err(Error::NoExtension { level: k, basic: cd.basic_level() });
    }
    let mut mi = ModularInvariant::identity(cd, k);
    for row in mi.m.iter_mut() {
        row.iter_mut().for_each(|x| *x = 0);
    }
    let trivial = cd.character(0);
    for o in cd.orbits_with_character(k, &trivial)? {
        let idx: Vec<usize> = o.members.iter().map(|w| mi.basis.binary_search(w).unwrap()).collect();
        for &i in &idx {
            for &j in &idx {
                mi.m[i][j] += o.stabilizer.len() as u64;
            }
        }
    }
    Ok(mi)
}

/// Commutator defects `max|MS - SM|` and `max|MT - TM|`.
pub fn invariance_defects(mi: &ModularInvariant, md: &ModularData) -> Result<(f64, f64)> {
    if mi.ty != md.simple_type() || mi.level != md.level() || mi.basis != md.basis() {
        return Err(Error::BasisMismatch);
    }
    let n = mi.basis.len();
    let s = md.s();
    let t = md.t();
    let m = |i: usize, j: usize| mi.m[i][j] as f64;
    let mut ds = 0.0f64;
    let mut dt = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            let mut acc = Complex64::zero();
            for l in 0..n {
                acc += s[i][l] * m(l, j) - m(i, l) * s[l][j];
            }
            ds = ds.max(acc.norm());
            dt = dt.max((m(i, j) * (t[j] - t[i])).norm());
        }
    }
    Ok((ds, dt))
}

/// Whether `M` commutes with S and T to within `tolerance`.
pub fn check_modular_invariance(mi: &ModularInvariant, md: &ModularData, tolerance: f64) -> Result<bool> {
    let (ds, dt) = invariance_defects(mi, md)?;
    Ok(ds < tolerance && dt < tolerance)
}

/// Quantization of the coadjoint-orbit brane labelled by `label`: the
/// basis element itself.
pub fn quantize_orbit(cd: &CenterDatum, k: u32, chi: &CenterCharacter, label: &IrrepLabel) -> Result<IrrepLabel> {
    if label.level != k {
        return Err(Error::LevelMismatch(label.level, k));
    }
    check_orbit(cd, k, &label.orbit)?;
    if &label.character != chi || cd.character_of_weight(&label.orbit.representative)? != *chi {
        return Err(Error::BadOrbit(cd.name(), k));
    }
    Ok(label.clone())
}
