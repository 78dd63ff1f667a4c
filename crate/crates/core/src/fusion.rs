//! Level-k fusion via Kac-Walton folding, and the fusion ring built on it.

use std::collections::{BTreeMap, HashMap};

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exec::{Execution, Limits};
use crate::rootdata::{RootDatum, SimpleType, Weight};
use crate::tensor::{weight_system, WeightSystem};

/// Element of the fusion ring: an integer combination of level-k weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FusionElement {
    ty: SimpleType,
    level: u32,
    coefficients: BTreeMap<Weight, i64>,
}

impl FusionElement {
    pub fn zero(d: &RootDatum, k: u32) -> Self {
        FusionElement { ty: d.simple_type(), level: k, coefficients: BTreeMap::new() }
    }

    /// The basis element `chi_{lambda,k}`.
    pub fn basis(d: &RootDatum, k: u32, lambda: &Weight) -> Result<Self> {
        check_level(d, k, lambda)?;
        let mut e = Self::zero(d, k);
        e.coefficients.insert(lambda.clone(), 1);
        Ok(e)
    }

    pub fn from_terms<I>(d: &RootDatum, k: u32, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Weight, i64)>,
    {
        let mut e = Self::zero(d, k);
        for (w, c) in terms {
            check_level(d, k, &w)?;
            *e.coefficients.entry(w).or_insert(0) += c;
        }
        e.coefficients.retain(|_, c| *c != 0);
        Ok(e)
    }

    pub fn simple_type(&self) -> SimpleType {
        self.ty
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn coefficients(&self) -> &BTreeMap<Weight, i64> {
        &self.coefficients
    }

    pub fn coefficient(&self, w: &Weight) -> i64 {
        self.coefficients.get(w).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    fn compatible(&self, other: &FusionElement) -> Result<()> {
        if self.ty != other.ty {
            return Err(Error::DatumMismatch(self.ty.to_string(), other.ty.to_string()));
        }
        if self.level != other.level {
            return Err(Error::LevelMismatch(self.level, other.level));
        }
        Ok(())
    }
}

impl Serialize for FusionElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            weight: &'a Weight,
            coeff: i64,
        }
        let terms: Vec<Term> = self
            .coefficients
            .iter()
            .map(|(weight, &coeff)| Term { weight, coeff })
            .collect();
        let mut st = s.serialize_struct("FusionElement", 2)?;
        st.serialize_field("level", &self.level)?;
        st.serialize_field("terms", &terms)?;
        st.end()
    }
}

fn check_level(d: &RootDatum, k: u32, w: &Weight) -> Result<()> {
    d.check_weight(w)?;
    if d.at_level(w, k) {
        Ok(())
    } else {
        Err(Error::NotAtLevel { weight: w.labels().to_vec(), level: k })
    }
}

/// Bring `w + rho` into the fundamental alcove at shifted level `k + h^vee`
/// by affine reflections. Returns the resulting weight (shifted back) and the
/// sign of the reflecting element, or `None` if `w + rho` lies on a wall.
pub fn affine_fold(d: &RootDatum, k: u32, w: &Weight) -> Option<(Weight, i64)> {
    let kk = i64::from(k) + d.dual_coxeter();
    let theta = d.theta().labels();
    let mut x: Vec<i64> = w.labels().iter().map(|a| a + 1).collect();
    let mut sign = 1;
    loop {
        if let Some(i) = x.iter().position(|&a| a < 0) {
            d.reflect_in_place(i, &mut x);
            sign = -sign;
            continue;
        }
        let lev = d.level_of(&Weight::new(x.clone()));
        if lev > kk {
            let c = lev - kk;
            for (a, t) in x.iter_mut().zip(theta) {
                *a -= c * t;
            }
            sign = -sign;
            continue;
        }
        if lev == kk || x.contains(&0) {
            return None;
        }
        return Some((Weight::new(x.into_iter().map(|a| a - 1).collect()), sign));
    }
}

fn fold_with(d: &RootDatum, k: u32, lambda: &Weight, ws: &WeightSystem) -> Result<Vec<(Weight, u64)>> {
    let mut acc: BTreeMap<Weight, i64> = BTreeMap::new();
    for (nu, m) in &ws.multiplicities {
        if let Some((w, s)) = affine_fold(d, k, &(lambda + nu)) {
            *acc.entry(w).or_insert(0) += s * *m as i64;
        }
    }
    let mut out = Vec::new();
    for (w, c) in acc {
        if c < 0 {
            return Err(Error::Internal(format!("negative fusion coefficient at {w}")));
        }
        if c > 0 {
            out.push((w, c as u64));
        }
    }
    Ok(out)
}

/// `chi_lambda * chi_mu` at level k.
pub fn fuse(d: &RootDatum, k: u32, lambda: &Weight, mu: &Weight) -> Result<FusionElement> {
    check_level(d, k, lambda)?;
    check_level(d, k, mu)?;
    let (a, b) = if d.weyl_dim(lambda)? >= d.weyl_dim(mu)? { (lambda, mu) } else { (mu, lambda) };
    let ws = weight_system(d, b)?;
    let terms = fold_with(d, k, a, &ws)?;
    Ok(FusionElement {
        ty: d.simple_type(),
        level: k,
        coefficients: terms.into_iter().map(|(w, c)| (w, c as i64)).collect(),
    })
}

/// `N_{lambda mu}^nu`.
pub fn fusion_coefficient(d: &RootDatum, k: u32, lambda: &Weight, mu: &Weight, nu: &Weight) -> Result<u64> {
    check_level(d, k, nu)?;
    Ok(fuse(d, k, lambda, mu)?.coefficient(nu) as u64)
}

/// Closed-form SU(2) fusion rule, arguments given as twice the spins.
///
/// Returns 1 iff `|j1-j2| <= j3 <= min(j1+j2, k-j1-j2)` and `j1+j2+j3` is an
/// integer. The two factors must lie at level k; an output spin beyond the
/// level simply has coefficient 0.
pub fn su2_fusion_oracle(two_j1: u32, two_j2: u32, two_j3: u32, k: u32) -> Result<u32> {
    for t in [two_j1, two_j2] {
        if t > k {
            return Err(Error::NotAtLevel { weight: vec![i64::from(t)], level: k });
        }
    }
    let (a, b, c) = (i64::from(two_j1), i64::from(two_j2), i64::from(two_j3));
    let k = i64::from(k);
    let ok = (a - b).abs() <= c && c <= (a + b).min(2 * k - a - b) && (a + b + c) % 2 == 0;
    Ok(u32::from(ok))
}

/// Complete multiplication table of the fusion ring at level k.
#[derive(Debug, Clone)]
pub struct FusionTable {
    ty: SimpleType,
    level: u32,
    basis: Vec<Weight>,
    index: HashMap<Weight, usize>,
    /// products for pairs `i <= j`, row-major over the upper triangle
    products: Vec<Vec<(usize, u64)>>,
}

fn pair_slot(n: usize, i: usize, j: usize) -> usize {
    let (i, j) = if i <= j { (i, j) } else { (j, i) };
    i * n - i * (i + 1) / 2 + j
}

impl FusionTable {
    pub fn simple_type(&self) -> SimpleType {
        self.ty
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn basis(&self) -> &[Weight] {
        &self.basis
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn index_of(&self, w: &Weight) -> Option<usize> {
        self.index.get(w).copied()
    }

    /// Nonzero `(l, N_{ij}^l)` for the product of basis elements `i` and `j`.
    pub fn product(&self, i: usize, j: usize) -> &[(usize, u64)] {
        &self.products[pair_slot(self.basis.len(), i, j)]
    }

    pub fn coefficient(&self, i: usize, j: usize, l: usize) -> u64 {
        let p = self.product(i, j);
        match p.binary_search_by_key(&l, |&(x, _)| x) {
            Ok(pos) => p[pos].1,
            Err(_) => 0,
        }
    }

    pub fn coefficient_of(&self, a: &Weight, b: &Weight, c: &Weight) -> Result<u64> {
        let idx = |w: &Weight| {
            self.index_of(w)
                .ok_or_else(|| Error::NotAtLevel { weight: w.labels().to_vec(), level: self.level })
        };
        Ok(self.coefficient(idx(a)?, idx(b)?, idx(c)?))
    }

    /// Sparse entries `[i, j, l, N]` with `i <= j`, in canonical order.
    pub fn entries(&self) -> Vec<[u64; 4]> {
        let n = self.basis.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i..n {
                for &(l, c) in self.product(i, j) {
                    out.push([i as u64, j as u64, l as u64, c]);
                }
            }
        }
        out
    }
}

impl Serialize for FusionTable {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("FusionTable", 3)?;
        st.serialize_field("level", &self.level)?;
        st.serialize_field("basis", &self.basis)?;
        st.serialize_field("N", &self.entries())?;
        st.end()
    }
}

pub fn fusion_table(d: &RootDatum, k: u32) -> Result<FusionTable> {
    fusion_table_with(d, k, Execution::default(), &Limits::default())
}

pub fn fusion_table_with(d: &RootDatum, k: u32, exec: Execution, limits: &Limits) -> Result<FusionTable> {
    let basis = d.enumerate_level_weights(k);
    limits.check_basis(basis.len())?;
    let n = basis.len();
    let index: HashMap<Weight, usize> = basis.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let systems: Vec<Result<WeightSystem>> = exec.map_slice(&basis, |w| weight_system(d, w));
    let systems: Vec<WeightSystem> = systems.into_iter().collect::<Result<_>>()?;
    let dims: Vec<u64> = systems.iter().map(WeightSystem::dim).collect();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let products: Vec<Result<Vec<(usize, u64)>>> = exec.map_slice(&pairs, |&(i, j)| {
        let (a, b) = if dims[i] >= dims[j] { (i, j) } else { (j, i) };
        let terms = fold_with(d, k, &basis[a], &systems[b])?;
        let mut row: Vec<(usize, u64)> = terms.into_iter().map(|(w, c)| (index[&w], c)).collect();
        row.sort_unstable();
        Ok(row)
    });
    let products = products.into_iter().collect::<Result<_>>()?;
    Ok(FusionTable { ty: d.simple_type(), level: k, basis, index, products })
}

pub fn unit(d: &RootDatum, k: u32) -> FusionElement {
    FusionElement::basis(d, k, &Weight::zero(d.rank())).expect("zero weight is at every level")
}

pub fn add(a: &FusionElement, b: &FusionElement) -> Result<FusionElement> {
    a.compatible(b)?;
    let mut out = a.clone();
    for (w, c) in &b.coefficients {
        *out.coefficients.entry(w.clone()).or_insert(0) += c;
    }
    out.coefficients.retain(|_, c| *c != 0);
    Ok(out)
}

/// Bilinear extension of [`fuse`].
pub fn multiply(d: &RootDatum, a: &FusionElement, b: &FusionElement) -> Result<FusionElement> {
    a.compatible(b)?;
    if a.ty != d.simple_type() {
        return Err(Error::DatumMismatch(a.ty.to_string(), d.simple_type().to_string()));
    }
    let k = a.level;
    let mut out = FusionElement::zero(d, k);
    for (x, cx) in &a.coefficients {
        for (y, cy) in &b.coefficients {
            for (z, n) in fuse(d, k, x, y)?.coefficients {
                *out.coefficients.entry(z).or_insert(0) += cx * cy * n;
            }
        }
    }
    out.coefficients.retain(|_, c| *c != 0);
    Ok(out)
}

/// Quantization of the conjugacy-class brane through `exp(lambda / k)`:
/// the basis element `chi_{lambda,k}` when `lambda` is pre-quantizable.
pub fn brane_quantize(d: &RootDatum, k: u32, lambda: &Weight) -> Result<FusionElement> {
    d.check_weight(lambda)?;
    if !d.at_level(lambda, k) {
        return Err(Error::NotPrequantizable { weight: lambda.labels().to_vec(), level: k });
    }
    FusionElement::basis(d, k, lambda)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(d: &RootDatum, k: u32, terms: &[(&[i64], i64)]) -> FusionElement {
        FusionElement::from_terms(d, k, terms.iter().map(|(w, c)| (Weight::new(w.to_vec()), *c))).unwrap()
    }

    #[test]
    fn su2_examples() {
        let a1 = RootDatum::from_name("A1").unwrap();
        assert_eq!(fuse(&a1, 1, &[1].into(), &[1].into()).unwrap(), el(&a1, 1, &[(&[0], 1)]));
        assert_eq!(
            fuse(&a1, 4, &[2].into(), &[2].into()).unwrap(),
            el(&a1, 4, &[(&[0], 1), (&[2], 1), (&[4], 1)])
        );
        assert_eq!(
            fuse(&a1, 2, &[1].into(), &[1].into()).unwrap(),
            el(&a1, 2, &[(&[0], 1), (&[2], 1)])
        );
        assert!(fuse(&a1, 1, &[2].into(), &[0].into()).is_err());
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(su2_fusion_oracle(1, 1, 0, 1).unwrap(), 1);
        assert_eq!(su2_fusion_oracle(1, 1, 2, 1).unwrap(), 0);
        for k in 0..5 {
            for j in 0..=k {
                assert_eq!(su2_fusion_oracle(0, j, j, k).unwrap(), 1);
            }
        }
        assert!(su2_fusion_oracle(3, 0, 3, 2).is_err());
        assert_eq!(su2_fusion_oracle(2, 2, 6, 4).unwrap(), 0);
    }

    #[test]
    fn a2_level_one_is_z3() {
        let a2 = RootDatum::from_name("A2").unwrap();
        assert_eq!(fuse(&a2, 1, &[1, 0].into(), &[1, 0].into()).unwrap(), el(&a2, 1, &[(&[0, 1], 1)]));
        assert_eq!(fuse(&a2, 1, &[1, 0].into(), &[0, 1].into()).unwrap(), el(&a2, 1, &[(&[0, 0], 1)]));
        assert_eq!(
            fuse(&a2, 2, &[1, 0].into(), &[1, 0].into()).unwrap(),
            el(&a2, 2, &[(&[0, 1], 1), (&[2, 0], 1)])
        );
    }

    #[test]
    fn table_basics() {
        let a1 = RootDatum::from_name("A1").unwrap();
        let t = fusion_table(&a1, 0).unwrap();
        assert_eq!(t.entries(), vec![[0, 0, 0, 1]]);
        let t = fusion_table(&a1, 2).unwrap();
        assert_eq!(t.coefficient(1, 1, 0), 1);
        assert_eq!(t.coefficient(1, 1, 2), 1);
        assert_eq!(t.coefficient(1, 1, 1), 0);
        assert_eq!(t.coefficient(2, 2, 0), 1);
        let small = Limits { max_basis: 2, ..Limits::default() };
        assert_eq!(fusion_table_with(&a1, 2, Execution::Sequential, &small).unwrap_err().tag(), "resource-cap");
    }

    #[test]
    fn table_is_independent_of_strategy() {
        let b2 = RootDatum::from_name("B2").unwrap();
        let p = fusion_table_with(&b2, 3, Execution::Parallel, &Limits::default()).unwrap();
        let s = fusion_table_with(&b2, 3, Execution::Sequential, &Limits::default()).unwrap();
        assert_eq!(p.entries(), s.entries());
    }

    #[test]
    fn ring_operations() {
        let a1 = RootDatum::from_name("A1").unwrap();
        let x = el(&a1, 3, &[(&[1], 2), (&[2], -1)]);
        assert_eq!(multiply(&a1, &unit(&a1, 3), &x).unwrap(), x);
        let sum = add(&x, &unit(&a1, 3)).unwrap();
        assert_eq!(sum.coefficient(&[0].into()), 1);
        assert_eq!(add(&x, &unit(&a1, 4)).unwrap_err().tag(), "level-mismatch");
        let zero = add(&x, &el(&a1, 3, &[(&[1], -2), (&[2], 1)])).unwrap();
        assert!(zero.is_zero());
    }

    #[test]
    fn branes() {
        let a1 = RootDatum::from_name("A1").unwrap();
        assert_eq!(brane_quantize(&a1, 2, &[0].into()).unwrap(), unit(&a1, 2));
        assert_eq!(brane_quantize(&a1, 2, &[3].into()).unwrap_err().tag(), "not-prequantizable");
    }
}
