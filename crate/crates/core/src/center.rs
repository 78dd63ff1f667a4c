//! The center of the simply connected group, its subgroups, the induced
//! action on level-k weights, characters, and the level invariants of the
//! quotient groups.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Rational64};
use num_traits::{ToPrimitive, Zero};
use serde::Deserialize;

use crate::error::{Error, Result};
use crate::lattice::{coordinates, lattice_basis, rat, row_echelon};
use crate::rootdata::{Coweight, RootDatum, Series, Weight, WeylElement};

/// Which subgroup of the center to quotient by.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ZSpec {
    /// The unique cyclic subgroup of the given order.
    Cyclic(u32),
    /// Order-two subgroup generated by the class of `lambda_1^vee`.
    Z2Vector,
    /// Order-two subgroup generated by the class of `lambda_n^vee`.
    Z2Spinor,
    /// Order-two subgroup generated by the class of `lambda_{n-1}^vee`.
    Z2Cospinor,
    Klein,
}

impl fmt::Display for ZSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ZSpec::Cyclic(n) => write!(f, "Z{n}"),
            ZSpec::Z2Vector => write!(f, "Z2{{v}}"),
            ZSpec::Z2Spinor => write!(f, "Z2{{s}}"),
            ZSpec::Z2Cospinor => write!(f, "Z2{{c}}"),
            ZSpec::Klein => write!(f, "Z2xZ2"),
        }
    }
}

impl FromStr for ZSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let bad = || Error::Parse { what: "center subgroup", input: s.to_string() };
        if t.ends_with(",-") {
            return Err(Error::TwistedExtension);
        }
        match t {
            "Z2{v}" => return Ok(ZSpec::Z2Vector),
            "Z2{s}" => return Ok(ZSpec::Z2Spinor),
            "Z2{c}" => return Ok(ZSpec::Z2Cospinor),
            "Z2xZ2" => return Ok(ZSpec::Klein),
            _ => {}
        }
        let digits = t.strip_prefix('Z').ok_or_else(bad)?;
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let n: u32 = digits.parse().map_err(|_| bad())?;
        if n == 0 {
            return Err(bad());
        }
        Ok(ZSpec::Cyclic(n))
    }
}

#[derive(Debug, Clone)]
pub struct CenterElement {
    /// Coweight representative of the class in `Lambda_w^vee / Lambda_r^vee`.
    pub coweight: Coweight,
    /// The special node `i(z)`; `None` for the identity.
    pub node: Option<usize>,
    /// `omega_{i(z)}`.
    pub weyl: WeylElement,
}

/// A finite abelian group given by generators and exponent vectors.
#[derive(Debug, Clone)]
struct Presentation {
    gens: Vec<usize>,
    orders: Vec<u32>,
    /// exponents of each listed element in the generators
    exps: HashMap<usize, Vec<u32>>,
}

/// A subgroup `Z` of the center of the simply connected group.
#[derive(Debug, Clone)]
pub struct CenterDatum {
    datum: RootDatum,
    label: String,
    elements: Vec<CenterElement>,
    mult: Vec<Vec<usize>>,
    pres: Presentation,
}

/// A character of `Z`, as turn fractions in `[0, 1)` indexed like
/// [`CenterDatum::elements`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CenterCharacter {
    values: Vec<Rational64>,
}

impl CenterCharacter {
    pub fn values(&self) -> &[Rational64] {
        &self.values
    }

    pub fn value(&self, z: usize) -> Rational64 {
        self.values[z]
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }
}

/// A `Z`-orbit in the level-k alcove.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Orbit {
    pub representative: Weight,
    pub members: Vec<Weight>,
    /// Indices into [`CenterDatum::elements`].
    pub stabilizer: Vec<usize>,
}

impl Orbit {
    pub fn is_free(&self) -> bool {
        self.stabilizer.len() == 1
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, w: &Weight) -> bool {
        self.members.binary_search(w).is_ok()
    }
}

fn turn(x: &BigRational) -> Rational64 {
    let f = x - x.floor();
    Rational64::new(
        f.numer().to_i64().expect("turn numerator fits i64"),
        f.denom().to_i64().expect("turn denominator fits i64"),
    )
}

fn frac64(x: Rational64) -> Rational64 {
    x - x.floor()
}

/// The full center `Lambda_w^vee / Lambda_r^vee`.
pub fn center_group(d: &RootDatum) -> CenterDatum {
    let n = d.rank();
    let w0 = d.longest_element();
    let mut elements = vec![CenterElement {
        coweight: Coweight::zero(n),
        node: None,
        weyl: WeylElement::identity(),
    }];
    for i in 0..n {
        if d.marks()[i] != 1 {
            continue;
        }
        let others: Vec<usize> = (0..n).filter(|&j| j != i).collect();
        let weyl = d.parabolic_longest(&others).compose(d, &w0);
        elements.push(CenterElement { coweight: Coweight::fundamental(n, i), node: Some(i), weyl });
    }
    let m = elements.len();
    let mut mult = vec![vec![0; m]; m];
    for a in 0..m {
        for b in 0..m {
            let sum = &elements[a].coweight + &elements[b].coweight;
            mult[a][b] = (0..m)
                .find(|&c| d.in_coroot_lattice(&(&sum - &elements[c].coweight)))
                .expect("center is closed under multiplication");
        }
    }
    let all: Vec<usize> = (0..m).collect();
    let pres = present(&all, &mult, &elements);
    let label = default_label(d, m, pres.gens.len());
    CenterDatum { datum: d.clone(), label, elements, mult, pres }
}

fn default_label(d: &RootDatum, order: usize, ngens: usize) -> String {
    if order == 1 {
        "1".into()
    } else if ngens == 2 {
        "Z2xZ2".into()
    } else if order == 2 && d.simple_type().series() == Series::D && d.rank() % 2 == 0 {
        "Z2".into()
    } else {
        format!("Z{order}")
    }
}

fn element_order(mult: &[Vec<usize>], z: usize) -> u32 {
    let mut x = z;
    let mut k = 1;
    while x != 0 {
        x = mult[x][z];
        k += 1;
    }
    k
}

fn generated(mult: &[Vec<usize>], gens: &[usize]) -> BTreeSet<usize> {
    let mut set = BTreeSet::from([0usize]);
    loop {
        let mut next = set.clone();
        for &a in &set {
            for &g in gens {
                next.insert(mult[a][g]);
            }
        }
        if next.len() == set.len() {
            return set;
        }
        set = next;
    }
}

/// Generators for a subgroup given by its (global) element indices: a
/// single generator of maximal order with the largest node when cyclic,
/// otherwise the smallest-node element plus the largest-node element
/// outside its span.
fn present(subset: &[usize], mult: &[Vec<usize>], elements: &[CenterElement]) -> Presentation {
    let node = |z: usize| elements[z].node.map_or(-1, |i| i as i64);
    let size = subset.len() as u32;
    let mut gens = Vec::new();
    if size > 1 {
        if let Some(&g) = subset
            .iter()
            .filter(|&&z| element_order(mult, z) == size)
            .max_by_key(|&&z| node(z))
        {
            gens.push(g);
        } else {
            let g1 = *subset.iter().filter(|&&z| z != 0).min_by_key(|&&z| node(z)).unwrap();
            let span = generated(mult, &[g1]);
            let g2 = *subset
                .iter()
                .filter(|z| !span.contains(z))
                .max_by_key(|&&z| node(z))
                .unwrap();
            gens.push(g1);
            gens.push(g2);
        }
    }
    let orders: Vec<u32> = gens.iter().map(|&g| element_order(mult, g)).collect();
    let mut exps = HashMap::new();
    let total: u32 = orders.iter().product();
    for flat in 0..total {
        let mut z = 0;
        let mut e = Vec::with_capacity(gens.len());
        let mut rest = flat;
        for (j, &g) in gens.iter().enumerate() {
            let a = rest % orders[j];
            rest /= orders[j];
            for _ in 0..a {
                z = mult[z][g];
            }
            e.push(a);
        }
        exps.insert(z, e);
    }
    debug_assert_eq!(exps.len(), subset.len());
    Presentation { gens, orders, exps }
}

impl CenterDatum {
    pub fn datum(&self) -> &RootDatum {
        &self.datum
    }

    /// Name of the subgroup, e.g. `Z3`, `Z2{v}`, or `1` for the trivial group.
    pub fn label(&self) -> &str {
        &self.label
    }

    /// Group-spec style name such as `A2/Z3`.
    pub fn name(&self) -> String {
        if self.order() == 1 {
            self.datum.simple_type().to_string()
        } else {
            format!("{}/{}", self.datum.simple_type(), self.label)
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Element 0 is the identity.
    pub fn elements(&self) -> &[CenterElement] {
        &self.elements
    }

    pub fn multiply(&self, a: usize, b: usize) -> usize {
        self.mult[a][b]
    }

    pub fn element_order(&self, z: usize) -> u32 {
        element_order(&self.mult, z)
    }

    pub fn generators(&self) -> &[usize] {
        &self.pres.gens
    }

    pub fn generator_orders(&self) -> &[u32] {
        &self.pres.orders
    }

    pub fn is_cyclic(&self) -> bool {
        self.pres.gens.len() <= 1
    }

    fn restrict(&self, keep: &BTreeSet<usize>, label: String) -> CenterDatum {
        let old: Vec<usize> = keep.iter().copied().collect();
        let pos: HashMap<usize, usize> = old.iter().enumerate().map(|(i, &z)| (z, i)).collect();
        let elements: Vec<CenterElement> = old.iter().map(|&z| self.elements[z].clone()).collect();
        let mult: Vec<Vec<usize>> = old
            .iter()
            .map(|&a| old.iter().map(|&b| pos[&self.mult[a][b]]).collect())
            .collect();
        let all: Vec<usize> = (0..elements.len()).collect();
        let pres = present(&all, &mult, &elements);
        let label = if elements.len() == 1 { "1".to_string() } else { label };
        CenterDatum { datum: self.datum.clone(), label, elements, mult, pres }
    }

    /// The subgroup named by `spec`.
    pub fn subgroup(&self, spec: ZSpec) -> Result<CenterDatum> {
        let not = || Error::NotSubgroup(format!("{spec} in the center of {}", self.datum.simple_type()));
        let by_node = |node: usize| -> Result<CenterDatum> {
            let z = (0..self.order()).find(|&z| self.elements[z].node == Some(node)).ok_or_else(not)?;
            if self.element_order(z) != 2 {
                return Err(not());
            }
            Ok(self.restrict(&generated(&self.mult, &[z]), spec.to_string()))
        };
        let n = self.datum.rank();
        match spec {
            ZSpec::Cyclic(1) => Ok(self.restrict(&BTreeSet::from([0]), "1".into())),
            ZSpec::Cyclic(m) => {
                let mut found: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
                for z in 0..self.order() {
                    if self.element_order(z) == m {
                        found.insert(generated(&self.mult, &[z]));
                    }
                }
                match found.len() {
                    1 => Ok(self.restrict(found.first().unwrap(), spec.to_string())),
                    0 => Err(not()),
                    _ => Err(Error::NotSubgroup(format!(
                        "{spec} is ambiguous in the center of {}; name it as Z2{{v}}, Z2{{s}} or Z2{{c}}",
                        self.datum.simple_type()
                    ))),
                }
            }
            ZSpec::Z2Vector => by_node(0),
            ZSpec::Z2Spinor => by_node(n - 1),
            ZSpec::Z2Cospinor if n >= 2 => by_node(n - 2),
            ZSpec::Z2Cospinor => Err(not()),
            ZSpec::Klein => {
                if self.order() == 4 && !self.is_cyclic() {
                    Ok(self.restrict(&(0..4).collect(), spec.to_string()))
                } else {
                    Err(not())
                }
            }
        }
    }

    fn check_level(&self, k: u32, w: &Weight) -> Result<()> {
        self.datum.check_weight(w)?;
        if self.datum.at_level(w, k) {
            Ok(())
        } else {
            Err(Error::NotAtLevel { weight: w.labels().to_vec(), level: k })
        }
    }

    /// `z . lambda = omega_{i(z)}(lambda) + k lambda_{i(z)}^vee`.
    pub fn center_action(&self, k: u32, z: usize, lambda: &Weight) -> Result<Weight> {
        self.check_level(k, lambda)?;
        let el = &self.elements[z];
        if el.node.is_none() {
            return Ok(lambda.clone());
        }
        let rotated = el.weyl.apply(&self.datum, lambda);
        let shift = self.datum.coweight_as_weight(&el.coweight);
        let out = Weight::new(
            rotated
                .labels()
                .iter()
                .zip(shift.labels())
                .map(|(a, b)| a + i64::from(k) * b)
                .collect(),
        );
        if !self.datum.at_level(&out, k) {
            return Err(Error::Internal(format!("center action left the alcove: {lambda} -> {out}")));
        }
        Ok(out)
    }

    /// `z -> <lambda, h_z^vee> mod 1`.
    pub fn character_of_weight(&self, lambda: &Weight) -> Result<CenterCharacter> {
        self.datum.check_weight(lambda)?;
        Ok(CenterCharacter {
            values: self
                .elements
                .iter()
                .map(|e| turn(&self.datum.pair(lambda, &e.coweight)))
                .collect(),
        })
    }

    /// All characters of `Z`, in index order: the index is mixed radix in the
    /// generator exponents, first generator least significant.
    pub fn characters(&self) -> Vec<CenterCharacter> {
        (0..self.order()).map(|m| self.character(m)).collect()
    }

    /// The character with flat index `m`: it sends generator `j` to
    /// `a_j / ord_j` turns.
    pub fn character(&self, m: usize) -> CenterCharacter {
        let a = self.digits(m);
        let values = (0..self.order())
            .map(|z| {
                let e = &self.pres.exps[&z];
                let s = e.iter().zip(&a).zip(&self.pres.orders).fold(Rational64::zero(), |acc, ((x, y), o)| {
                    acc + Rational64::new(i64::from(x * y), i64::from(*o))
                });
                frac64(s)
            })
            .collect();
        CenterCharacter { values }
    }

    fn digits(&self, mut m: usize) -> Vec<u32> {
        self.pres
            .orders
            .iter()
            .map(|&o| {
                let a = (m % o as usize) as u32;
                m /= o as usize;
                a
            })
            .collect()
    }

    /// Flat index of a character of this group.
    pub fn character_index(&self, chi: &CenterCharacter) -> Result<usize> {
        self.characters().iter().position(|c| c == chi).ok_or_else(|| Error::BadCharacter {
            index: format!("{:?}", chi.values),
            order: self.order(),
        })
    }

    /// Parse a character index: a flat index (`"2"`) or one exponent per
    /// generator (`"1,0"`). A trailing `,-` asks for the twisted extension,
    /// which is not supported.
    pub fn parse_character(&self, s: &str) -> Result<CenterCharacter> {
        let t = s.trim();
        if t.ends_with(",-") || t.ends_with(",−") {
            return Err(Error::TwistedExtension);
        }
        let bad = || Error::BadCharacter { index: s.to_string(), order: self.order() };
        let parts: Vec<u32> = t
            .split(',')
            .map(|p| p.trim().parse::<u32>().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        let flat = if parts.len() == 1 {
            parts[0] as usize
        } else {
            if parts.len() != self.pres.orders.len() {
                return Err(bad());
            }
            let mut flat = 0usize;
            let mut stride = 1usize;
            for (a, o) in parts.iter().zip(&self.pres.orders) {
                if a >= o {
                    return Err(bad());
                }
                flat += *a as usize * stride;
                stride *= *o as usize;
            }
            flat
        };
        if flat >= self.order() {
            return Err(bad());
        }
        Ok(self.character(flat))
    }

    /// The `Z`-orbit through `lambda`.
    pub fn orbit_of(&self, k: u32, lambda: &Weight) -> Result<Orbit> {
        let mut members = BTreeSet::new();
        let mut stabilizer = Vec::new();
        for z in 0..self.order() {
            let w = self.center_action(k, z, lambda)?;
            if &w == lambda {
                stabilizer.push(z);
            }
            members.insert(w);
        }
        let members: Vec<Weight> = members.into_iter().collect();
        Ok(Orbit { representative: members[0].clone(), members, stabilizer })
    }

    /// All orbits in the level-k alcove, ordered by representative.
    pub fn orbits(&self, k: u32) -> Result<Vec<Orbit>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for w in self.datum.enumerate_level_weights(k) {
            if seen.contains(&w) {
                continue;
            }
            let o = self.orbit_of(k, &w)?;
            if o.members.len() * o.stabilizer.len() != self.order() {
                return Err(Error::Internal("orbit-stabilizer count failed".into()));
            }
            seen.extend(o.members.iter().cloned());
            out.push(o);
        }
        out.sort_by(|a, b| a.representative.cmp(&b.representative));
        Ok(out)
    }

    /// Orbits grouped by character, one entry per character of `Z` in index
    /// order (possibly with no orbits).
    pub fn partition_by_character(&self, k: u32) -> Result<Vec<(CenterCharacter, Vec<Orbit>)>> {
        self.check_preserves_characters(k)?;
        let chars = self.characters();
        let mut buckets: BTreeMap<usize, Vec<Orbit>> = BTreeMap::new();
        for o in self.orbits(k)? {
            let chi = self.character_of_weight(&o.representative)?;
            for w in &o.members[1..] {
                if self.character_of_weight(w)? != chi {
                    return Err(Error::Internal(format!("character not constant on the orbit of {w}")));
                }
            }
            let idx = chars.iter().position(|c| *c == chi).ok_or_else(|| {
                Error::Internal(format!("character of {} is not a character of Z", o.representative))
            })?;
            buckets.entry(idx).or_default().push(o);
        }
        Ok(chars
            .into_iter()
            .enumerate()
            .map(|(i, c)| (c, buckets.remove(&i).unwrap_or_default()))
            .collect())
    }

    /// Orbits of level-k weights with character `chi`.
    pub fn orbits_with_character(&self, k: u32, chi: &CenterCharacter) -> Result<Vec<Orbit>> {
        self.character_index(chi)?;
        self.check_preserves_characters(k)?;
        let mut out = Vec::new();
        for o in self.orbits(k)? {
            if self.character_of_weight(&o.representative)? == *chi {
                out.push(o);
            }
        }
        Ok(out)
    }

    /// Generator of a stabilizer subgroup and the exponent of each of its
    /// elements; characters of the stabilizer are indexed the same way as
    /// characters of `Z`.
    pub fn stabilizer_characters(&self, stabilizer: &[usize]) -> Vec<Vec<Rational64>> {
        let pres = present(stabilizer, &self.mult, &self.elements);
        let total: u32 = pres.orders.iter().product();
        (0..total)
            .map(|m| {
                let mut rest = m;
                let a: Vec<u32> = pres
                    .orders
                    .iter()
                    .map(|&o| {
                        let x = rest % o;
                        rest /= o;
                        x
                    })
                    .collect();
                stabilizer
                    .iter()
                    .map(|z| {
                        let e = &pres.exps[z];
                        frac64(e.iter().zip(&a).zip(&pres.orders).fold(Rational64::zero(), |acc, ((x, y), o)| {
                            acc + Rational64::new(i64::from(x * y), i64::from(*o))
                        }))
                    })
                    .collect()
            })
            .collect()
    }

    /// Z-basis of `Lambda_Z^vee`, the lattice spanned by the coroots and the
    /// coweight representatives of `Z`.
    fn lattice_z(&self) -> Vec<Vec<i64>> {
        let n = self.datum.rank();
        let mut gens: Vec<Vec<i64>> = (0..n).map(|j| self.datum.simple_coroot(j).coords().to_vec()).collect();
        gens.extend(self.elements.iter().map(|e| e.coweight.coords().to_vec()));
        lattice_basis(&gens)
    }

    /// Smallest level at which the commutator pairing
    /// `(-1)^{l <lambda^vee, mu^vee>}` restricted to `Lambda_r^vee x Lambda_Z^vee`
    /// extends to an alternating bicharacter of `Lambda_Z^vee`.
    pub fn basic_level(&self) -> u32 {
        let d = &self.datum;
        let n = d.rank();
        let basis = self.lattice_z();
        let r = basis.len();
        let cw = |v: &[i64]| Coweight::new(v.to_vec());
        // unknowns a_ij = A(c_i, c_j), i < j
        let mut var = HashMap::new();
        for i in 0..r {
            for j in i + 1..r {
                let next = var.len();
                var.insert((i, j), next);
            }
        }
        let nvar = var.len();
        let mut rows: Vec<Vec<BigInt>> = Vec::new();
        let mut rhs: Vec<BigRational> = Vec::new();
        for p in 0..n {
            let coroot = d.simple_coroot(p);
            let m = coordinates(&basis, coroot.coords()).expect("basis is square");
            for j in 0..r {
                let mut row = vec![BigInt::zero(); nvar];
                for (i, mi) in m.iter().enumerate() {
                    let mi = mi.to_integer();
                    if i < j {
                        row[var[&(i, j)]] += &mi;
                    } else if i > j {
                        row[var[&(j, i)]] -= &mi;
                    }
                }
                rows.push(row);
                rhs.push(d.coweight_form(&coroot, &cw(&basis[j])) / rat(2));
            }
        }
        let (h, u) = row_echelon(&rows);
        let kernel: Vec<&Vec<BigInt>> = h
            .iter()
            .zip(&u)
            .filter(|(hr, _)| hr.iter().all(Zero::is_zero))
            .map(|(_, ur)| ur)
            .collect();
        let pairings: Vec<BigRational> = kernel
            .iter()
            .map(|y| {
                y.iter()
                    .zip(&rhs)
                    .fold(BigRational::zero(), |acc, (a, t)| acc + BigRational::from_integer(a.clone()) * t)
            })
            .collect();
        // every kernel pairing is a rational; l must clear all denominators
        pairings
            .iter()
            .fold(BigInt::from(1), |acc, x| acc.lcm(x.denom()))
            .to_u32()
            .expect("basic level fits u32")
    }

    /// Smallest k with `(k/2) <lambda_{i(z)}^vee, lambda_{i(z)}^vee>` integral
    /// for every `z` in `Z`.
    pub fn multiplicative_level(&self) -> u32 {
        self.elements
            .iter()
            .map(|e| {
                let half = self.datum.coweight_form(&e.coweight, &e.coweight) / rat(2);
                half.denom().clone()
            })
            .fold(BigInt::from(1), |acc, x| acc.lcm(&x))
            .to_u32()
            .expect("multiplicative level fits u32")
    }

    /// Fundamental level, from a table of known values.
    pub fn fundamental_level(&self) -> Result<u32> {
        if self.order() == 1 {
            return Ok(1);
        }
        let name = self.name();
        fundamental_table()
            .into_iter()
            .find(|e| e.group == name)
            .map(|e| e.level)
            .ok_or(Error::UnknownFundamentalLevel(name))
    }

    /// Whether `z . lambda` has the character of `lambda` for all level-k
    /// weights. Moving along `z` shifts the character by
    /// `k <lambda_{i(z)}^vee, . >`, so this asks for `k <h^vee, h'^vee>` to be
    /// integral on `Z x Z`.
    pub fn preserves_characters(&self, k: u32) -> bool {
        let k = rat(i64::from(k));
        self.elements.iter().all(|a| {
            self.elements
                .iter()
                .all(|b| (self.datum.coweight_form(&a.coweight, &b.coweight) * &k).is_integer())
        })
    }

    fn check_preserves_characters(&self, k: u32) -> Result<()> {
        if self.preserves_characters(k) {
            Ok(())
        } else {
            Err(Error::CharacterShift(k))
        }
    }

    /// Whether the loop group of `G~/Z` has a central extension at level k.
    pub fn extension_exists(&self, k: u32) -> bool {
        k % self.basic_level() == 0
    }
}

#[derive(Debug, Deserialize)]
struct FundamentalEntry {
    group: String,
    level: u32,
}

fn fundamental_table() -> Vec<FundamentalEntry> {
    serde_json::from_str(include_str!("../data/fundamental_levels.json")).expect("embedded table parses")
}

/// Subgroup of the center of `d` named by `spec`, or the full center.
pub fn center_subgroup(d: &RootDatum, spec: Option<ZSpec>) -> Result<CenterDatum> {
    let full = center_group(d);
    match spec {
        None => Ok(full.restrict(&BTreeSet::from([0]), "1".into())),
        Some(s) => full.subgroup(s),
    }
}
