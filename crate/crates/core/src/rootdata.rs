//! Root systems, weight lattices and the finite Weyl group for the simple
//! Lie types, with exact arithmetic throughout.
//!
//! Conventions:
//! * Simple roots are numbered as in Bourbaki.
//! * `cartan[i][j] = <alpha_i, alpha_j^vee>`, so row `i` holds the Dynkin
//!   labels of `alpha_i`.
//! * The invariant form is normalised so that long roots (in particular the
//!   highest root) have squared length 2.
//! * Weights are stored in Dynkin labels (fundamental-weight coordinates),
//!   coweights in fundamental-coweight coordinates. The two are distinct
//!   types so that they cannot be mixed by accident.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{int_matrix_to_rat, invert, rat};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SimpleType {
    series: Series,
    rank: usize,
}

impl SimpleType {
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        let ok = match series {
            Series::A => rank >= 1,
            Series::B | Series::C => rank >= 2,
            Series::D => rank >= 3,
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        };
        if ok {
            Ok(SimpleType { series, rank })
        } else {
            Err(Error::InvalidType(format!("{series:?}{rank}")))
        }
    }

    pub fn series(&self) -> Series {
        self.series
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Symmetric Gram matrix of the simple roots, up to an overall scale.
    fn gram(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut g = vec![vec![0i64; n]; n];
        let link = |g: &mut Vec<Vec<i64>>, i: usize, j: usize, v: i64| {
            g[i][j] = v;
            g[j][i] = v;
        };
        match self.series {
            Series::A => {
                for i in 0..n {
                    g[i][i] = 2;
                }
                for i in 1..n {
                    link(&mut g, i - 1, i, -1);
                }
            }
            Series::B => {
                for i in 0..n {
                    g[i][i] = 2;
                }
                g[n - 1][n - 1] = 1;
                for i in 1..n {
                    link(&mut g, i - 1, i, -1);
                }
            }
            Series::C => {
                for i in 0..n {
                    g[i][i] = 2;
                }
                g[n - 1][n - 1] = 4;
                for i in 1..n - 1 {
                    link(&mut g, i - 1, i, -1);
                }
                link(&mut g, n - 2, n - 1, -2);
            }
            Series::D => {
                for i in 0..n {
                    g[i][i] = 2;
                }
                for i in 1..n - 1 {
                    link(&mut g, i - 1, i, -1);
                }
                link(&mut g, n - 3, n - 1, -1);
            }
            Series::E => {
                for i in 0..n {
                    g[i][i] = 2;
                }
                // Bourbaki: 1-3-4-5-6-7-8 chain, 2 attached to 4
                link(&mut g, 0, 2, -1);
                link(&mut g, 1, 3, -1);
                for i in 3..n {
                    link(&mut g, i - 1, i, -1);
                }
            }
            Series::F => {
                g[0][0] = 4;
                g[1][1] = 4;
                g[2][2] = 2;
                g[3][3] = 2;
                link(&mut g, 0, 1, -2);
                link(&mut g, 1, 2, -2);
                link(&mut g, 2, 3, -1);
            }
            Series::G => {
                // alpha_1 short
                g[0][0] = 2;
                g[1][1] = 6;
                link(&mut g, 0, 1, -3);
            }
        }
        g
    }

    /// Order of the Weyl group.
    pub fn weyl_order(&self) -> u128 {
        let n = self.rank as u128;
        let fact = |m: u128| (1..=m).product::<u128>();
        match self.series {
            Series::A => fact(n + 1),
            Series::B | Series::C => (1u128 << n) * fact(n),
            Series::D => (1u128 << (n - 1)) * fact(n),
            Series::E => match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Series::F => 1152,
            Series::G => 12,
        }
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.series, self.rank)
    }
}

impl FromStr for SimpleType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse { what: "simple type", input: s.to_string() };
        let mut chars = s.chars();
        let series = match chars.next().ok_or_else(bad)?.to_ascii_uppercase() {
            'A' => Series::A,
            'B' => Series::B,
            'C' => Series::C,
            'D' => Series::D,
            'E' => Series::E,
            'F' => Series::F,
            'G' => Series::G,
            _ => return Err(bad()),
        };
        let rest = chars.as_str().trim();
        if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let rank: usize = rest.parse().map_err(|_| bad())?;
        SimpleType::new(series, rank)
    }
}

/// A weight in Dynkin-label coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(labels: Vec<i64>) -> Self {
        Weight(labels)
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    pub fn labels(&self) -> &[i64] {
        &self.0
    }

    pub fn into_labels(self) -> Vec<i64> {
        self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }
}

impl From<Vec<i64>> for Weight {
    fn from(v: Vec<i64>) -> Self {
        Weight(v)
    }
}

impl<const N: usize> From<[i64; N]> for Weight {
    fn from(v: [i64; N]) -> Self {
        Weight(v.to_vec())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

/// A coweight in fundamental-coweight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Coweight(Vec<i64>);

impl Coweight {
    pub fn new(coords: Vec<i64>) -> Self {
        Coweight(coords)
    }

    pub fn zero(rank: usize) -> Self {
        Coweight(vec![0; rank])
    }

    /// The fundamental coweight `lambda_i^vee`.
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        Coweight(v)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }
}

impl Add for &Coweight {
    type Output = Coweight;
    fn add(self, rhs: &Coweight) -> Coweight {
        Coweight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Coweight {
    type Output = Coweight;
    fn sub(self, rhs: &Coweight) -> Coweight {
        Coweight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

/// Outcome of the rho-shifted reduction to the dominant chamber.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Reflection {
    /// `w . lambda` is dominant, reached by an element of determinant `sign`.
    Chamber { weight: Weight, sign: i64 },
    /// `lambda + rho` is fixed by a reflection.
    Wall,
}

#[derive(Debug, Clone)]
pub struct PositiveRoot {
    /// Coordinates in the simple-root basis.
    pub simple: Vec<i64>,
    /// Dynkin labels.
    pub labels: Vec<i64>,
    /// Coordinates of the coroot in the simple-coroot basis.
    pub coroot: Vec<i64>,
    pub long: bool,
}

/// An element of the finite Weyl group as a word `s_{w[0]} s_{w[1]} ...`.
#[derive(Debug, Clone, Default, Serialize)]
#[serde(transparent)]
pub struct WeylElement {
    word: Vec<usize>,
}

impl WeylElement {
    pub fn identity() -> Self {
        WeylElement { word: Vec::new() }
    }

    pub fn from_word(word: Vec<usize>) -> Self {
        WeylElement { word }
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn apply(&self, d: &RootDatum, w: &Weight) -> Weight {
        let mut v = w.0.clone();
        for &i in self.word.iter().rev() {
            d.reflect_in_place(i, &mut v);
        }
        Weight(v)
    }

    /// `self * other` (apply `other` first), as a reduced word.
    pub fn compose(&self, d: &RootDatum, other: &WeylElement) -> WeylElement {
        let image = self.apply(d, &other.apply(d, d.rho()));
        WeylElement::from_rho_image(d, &image)
    }

    pub fn inverse(&self, d: &RootDatum) -> WeylElement {
        let mut word = self.word.clone();
        word.reverse();
        WeylElement::from_rho_image(d, &WeylElement { word }.apply(d, d.rho()))
    }

    /// The unique element `w` with `w(rho) = image`, as a reduced word.
    pub fn from_rho_image(d: &RootDatum, image: &Weight) -> WeylElement {
        let mut v = image.0.clone();
        let mut word = Vec::new();
        while let Some(i) = v.iter().position(|&x| x < 0) {
            d.reflect_in_place(i, &mut v);
            word.push(i);
        }
        debug_assert_eq!(v, d.rho().0, "image of rho must be regular");
        WeylElement { word }
    }

    /// Two words describe the same group element.
    pub fn same_as(&self, d: &RootDatum, other: &WeylElement) -> bool {
        self.apply(d, d.rho()) == other.apply(d, d.rho())
    }

    pub fn det(&self) -> i64 {
        if self.word.len() % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// Immutable root-system data for one simple type.
#[derive(Debug, Clone)]
pub struct RootDatum {
    ty: SimpleType,
    cartan: Vec<Vec<i64>>,
    /// `2 / |alpha_i|^2`, one of 1, 2, 3.
    coroot_scale: Vec<i64>,
    form: Vec<Vec<BigRational>>,
    form_num: Vec<Vec<i64>>,
    form_den: i64,
    /// `(C^{-1})_{ij} = <lambda_i, lambda_j^vee>`, scaled to integers.
    pairing_num: Vec<Vec<i64>>,
    pairing_den: i64,
    positive_roots: Vec<PositiveRoot>,
    rho: Weight,
    theta: Weight,
    marks: Vec<i64>,
    comarks: Vec<i64>,
    dual_coxeter: i64,
    dim_g: usize,
}

impl RootDatum {
    pub fn new(ty: SimpleType) -> Result<Self> {
        let n = ty.rank;
        let gram = ty.gram();
        let cartan: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| 2 * gram[i][j] / gram[j][j]).collect())
            .collect();
        let long = gram.iter().enumerate().map(|(i, r)| r[i]).max().unwrap();
        // |alpha_i|^2 = 2 gram_ii / long
        let coroot_scale: Vec<i64> = (0..n).map(|i| long / gram[i][i]).collect();
        let inv = invert(&int_matrix_to_rat(&cartan))
            .ok_or_else(|| Error::Internal(format!("singular Cartan matrix for {ty}")))?;
        let form: Vec<Vec<BigRational>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| &inv[i][j] / rat(coroot_scale[j]))
                    .collect()
            })
            .collect();
        let (form_num, form_den) = scale_to_integers(&form);
        let (pairing_num, pairing_den) = scale_to_integers(&inv);

        let mut d = RootDatum {
            ty,
            cartan,
            coroot_scale,
            form,
            form_num,
            form_den,
            pairing_num,
            pairing_den,
            positive_roots: Vec::new(),
            rho: Weight(vec![1; n]),
            theta: Weight::zero(n),
            marks: Vec::new(),
            comarks: Vec::new(),
            dual_coxeter: 0,
            dim_g: 0,
        };
        d.positive_roots = d.generate_positive_roots();
        let highest = d
            .positive_roots
            .iter()
            .max_by_key(|r| r.simple.iter().sum::<i64>())
            .unwrap()
            .clone();
        d.theta = Weight(highest.labels.clone());
        d.marks = highest.simple.clone();
        d.comarks = highest.coroot.clone();
        d.dual_coxeter = 1 + d.comarks.iter().sum::<i64>();
        d.dim_g = n + 2 * d.positive_roots.len();
        d.check_invariants()?;
        Ok(d)
    }

    pub fn from_name(name: &str) -> Result<Self> {
        RootDatum::new(name.parse()?)
    }

    fn check_invariants(&self) -> Result<()> {
        let n = self.rank();
        for i in 0..n {
            if self.cartan[i][i] != 2 || (0..n).any(|j| j != i && self.cartan[i][j] > 0) {
                return Err(Error::Internal("malformed Cartan matrix".into()));
            }
        }
        if self.inner_product(&self.theta, &self.theta)? != rat(2) {
            return Err(Error::Internal("highest root does not have norm 2".into()));
        }
        // Sylvester's criterion on the form
        for m in 1..=n {
            let minor: Vec<Vec<BigRational>> =
                (0..m).map(|i| self.form[i][..m].to_vec()).collect();
            if determinant(&minor) <= BigRational::zero() {
                return Err(Error::Internal("form is not positive definite".into()));
            }
        }
        Ok(())
    }

    fn generate_positive_roots(&self) -> Vec<PositiveRoot> {
        let n = self.rank();
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut layer: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                let mut e = vec![0; n];
                e[i] = 1;
                e
            })
            .collect();
        let mut all = Vec::new();
        for r in &layer {
            seen.insert(r.clone());
        }
        while !layer.is_empty() {
            let mut next = Vec::new();
            for beta in &layer {
                let labels = self.simple_to_labels(beta);
                for i in 0..n {
                    // p = length of the alpha_i-string below beta
                    let mut p = 0;
                    let mut probe = beta.clone();
                    loop {
                        probe[i] -= 1;
                        if seen.contains(&probe) {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    let q = p - labels[i];
                    if q > 0 {
                        let mut up = beta.clone();
                        up[i] += 1;
                        if seen.insert(up.clone()) {
                            next.push(up);
                        }
                    }
                }
            }
            all.append(&mut layer);
            next.sort();
            layer = next;
        }
        all.into_iter()
            .map(|simple| {
                let labels = self.simple_to_labels(&simple);
                let norm = self.inner_product_raw(&labels, &labels);
                // |beta|^2 scaled by form_den; alpha_i long has norm 2 form_den
                let long = norm == 2 * self.form_den;
                // coroot coords: c_i |alpha_i|^2 / |beta|^2
                let coroot = simple
                    .iter()
                    .enumerate()
                    .map(|(i, &c)| {
                        let ai = 2 * self.form_den / self.coroot_scale[i];
                        c * ai / norm
                    })
                    .collect();
                PositiveRoot { simple, labels, coroot, long }
            })
            .collect()
    }

    fn simple_to_labels(&self, simple: &[i64]) -> Vec<i64> {
        let n = self.rank();
        (0..n)
            .map(|j| (0..n).map(|i| simple[i] * self.cartan[i][j]).sum())
            .collect()
    }

    pub fn simple_type(&self) -> SimpleType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.ty.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// `<lambda_i, lambda_j>` for the fundamental weights.
    pub fn form(&self) -> &[Vec<BigRational>] {
        &self.form
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    pub fn theta(&self) -> &Weight {
        &self.theta
    }

    /// Coefficients of the highest root in the simple roots.
    pub fn marks(&self) -> &[i64] {
        &self.marks
    }

    /// Coefficients of the highest coroot in the simple coroots.
    pub fn comarks(&self) -> &[i64] {
        &self.comarks
    }

    pub fn dual_coxeter(&self) -> i64 {
        self.dual_coxeter
    }

    pub fn dim_g(&self) -> usize {
        self.dim_g
    }

    pub fn positive_roots(&self) -> &[PositiveRoot] {
        &self.positive_roots
    }

    pub fn simple_root(&self, i: usize) -> Weight {
        Weight(self.cartan[i].clone())
    }

    /// `2 / |alpha_i|^2`.
    pub fn coroot_scale(&self, i: usize) -> i64 {
        self.coroot_scale[i]
    }

    pub fn check_weight(&self, w: &Weight) -> Result<()> {
        if w.rank() == self.rank() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: self.rank(), got: w.rank() })
        }
    }

    /// `<a, b>` scaled by `form_den()`; exact integer.
    pub(crate) fn inner_product_raw(&self, a: &[i64], b: &[i64]) -> i64 {
        let n = self.rank();
        let mut s = 0i64;
        for i in 0..n {
            if a[i] == 0 {
                continue;
            }
            let mut row = 0i64;
            for j in 0..n {
                row += self.form_num[i][j] * b[j];
            }
            s += a[i] * row;
        }
        s
    }

    pub(crate) fn form_den(&self) -> i64 {
        self.form_den
    }

    /// The normalised invariant inner product of two weights.
    pub fn inner_product(&self, a: &Weight, b: &Weight) -> Result<BigRational> {
        self.check_weight(a)?;
        self.check_weight(b)?;
        Ok(BigRational::new(
            BigInt::from(self.inner_product_raw(&a.0, &b.0)),
            BigInt::from(self.form_den),
        ))
    }

    /// `<lambda, h^vee>` for a weight and a coweight.
    pub fn pair(&self, w: &Weight, h: &Coweight) -> BigRational {
        let n = self.rank();
        let mut s = 0i64;
        for i in 0..n {
            for j in 0..n {
                s += w.0[i] * self.pairing_num[i][j] * h.0[j];
            }
        }
        BigRational::new(BigInt::from(s), BigInt::from(self.pairing_den))
    }

    /// `<a^vee, b^vee>` for two coweights.
    pub fn coweight_form(&self, a: &Coweight, b: &Coweight) -> BigRational {
        let n = self.rank();
        let mut s = BigRational::zero();
        for i in 0..n {
            for j in 0..n {
                let c = a.0[i] * b.0[j] * self.coroot_scale[i] * self.coroot_scale[j];
                if c != 0 {
                    s += &self.form[i][j] * rat(c);
                }
            }
        }
        s
    }

    /// The weight identified with a coweight through the invariant form.
    pub fn coweight_as_weight(&self, h: &Coweight) -> Weight {
        Weight(h.0.iter().zip(&self.coroot_scale).map(|(x, s)| x * s).collect())
    }

    /// The simple coroot `alpha_j^vee` in fundamental-coweight coordinates.
    pub fn simple_coroot(&self, j: usize) -> Coweight {
        Coweight((0..self.rank()).map(|i| self.cartan[i][j]).collect())
    }

    /// Whether a coweight lies in the coroot lattice.
    pub fn in_coroot_lattice(&self, h: &Coweight) -> bool {
        // coroot coordinates are (C^{-1}) h, i.e. pairings with lambda_i
        (0..self.rank()).all(|i| {
            let mut e = vec![0; self.rank()];
            e[i] = 1;
            self.pair(&Weight(e), h).is_integer()
        })
    }

    /// `<lambda, theta>`, the level of a weight.
    pub fn level_of(&self, w: &Weight) -> i64 {
        w.0.iter().zip(&self.comarks).map(|(a, b)| a * b).sum()
    }

    pub fn at_level(&self, w: &Weight, k: u32) -> bool {
        w.rank() == self.rank() && w.is_dominant() && self.level_of(w) <= i64::from(k)
    }

    pub(crate) fn reflect_in_place(&self, i: usize, v: &mut [i64]) {
        let c = v[i];
        if c != 0 {
            for (x, a) in v.iter_mut().zip(&self.cartan[i]) {
                *x -= c * a;
            }
        }
    }

    pub fn reflect(&self, i: usize, w: &Weight) -> Weight {
        let mut v = w.0.clone();
        self.reflect_in_place(i, &mut v);
        Weight(v)
    }

    /// Dominant element of the Weyl orbit of `w` together with the parity
    /// of the number of reflections used.
    pub fn to_dominant(&self, w: &Weight) -> (Weight, i64) {
        let mut v = w.0.clone();
        let mut sign = 1;
        while let Some(i) = v.iter().position(|&x| x < 0) {
            self.reflect_in_place(i, &mut v);
            sign = -sign;
        }
        (Weight(v), sign)
    }

    /// Reduce `w` to the dominant chamber under the rho-shifted action
    /// `w . lambda = w(lambda + rho) - rho`.
    pub fn dominant_reflect(&self, w: &Weight) -> Result<Reflection> {
        self.check_weight(w)?;
        let shifted = w + &self.rho;
        let (v, sign) = self.to_dominant(&shifted);
        if v.0.iter().any(|&x| x == 0) {
            return Ok(Reflection::Wall);
        }
        Ok(Reflection::Chamber { weight: &v - &self.rho, sign })
    }

    /// Highest weight of the dual representation, `-w_0(lambda)`.
    pub fn conjugate_weight(&self, w: &Weight) -> Result<Weight> {
        self.check_weight(w)?;
        if !w.is_dominant() {
            return Err(Error::NotDominant(w.0.clone()));
        }
        Ok(self.to_dominant(&-w).0)
    }

    /// Dominant weights with `<lambda, theta> <= k`, in lexicographic order.
    pub fn enumerate_level_weights(&self, k: u32) -> Vec<Weight> {
        let n = self.rank();
        let mut out = Vec::new();
        let mut cur = vec![0i64; n];
        self.level_rec(0, i64::from(k), &mut cur, &mut out);
        out
    }

    fn level_rec(&self, i: usize, budget: i64, cur: &mut Vec<i64>, out: &mut Vec<Weight>) {
        if i == cur.len() {
            out.push(Weight(cur.clone()));
            return;
        }
        let a = self.comarks[i];
        let mut x = 0;
        while x * a <= budget {
            cur[i] = x;
            self.level_rec(i + 1, budget - x * a, cur, out);
            x += 1;
        }
        cur[i] = 0;
    }

    /// Dimension of the irreducible representation with highest weight `w`.
    pub fn weyl_dim(&self, w: &Weight) -> Result<BigUint> {
        self.check_weight(w)?;
        if !w.is_dominant() {
            return Err(Error::NotDominant(w.0.clone()));
        }
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for r in &self.positive_roots {
            let top: i64 = r.coroot.iter().zip(&w.0).map(|(c, l)| c * (l + 1)).sum();
            let bottom: i64 = r.coroot.iter().sum();
            num *= top;
            den *= bottom;
        }
        let q = num / den;
        Ok(q.to_biguint().expect("dimension is positive"))
    }

    /// `weyl_dim` as a machine integer, saturating at `u128::MAX`.
    pub fn weyl_dim_u128(&self, w: &Weight) -> Result<u128> {
        Ok(self.weyl_dim(w)?.to_u128().unwrap_or(u128::MAX))
    }

    /// Weyl orbit of a dominant weight.
    pub fn weyl_orbit(&self, dominant: &Weight) -> Vec<Weight> {
        debug_assert!(dominant.is_dominant());
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut out = vec![dominant.0.clone()];
        seen.insert(dominant.0.clone());
        let mut head = 0;
        while head < out.len() {
            let v = out[head].clone();
            head += 1;
            for i in 0..self.rank() {
                if v[i] > 0 {
                    let mut u = v.clone();
                    self.reflect_in_place(i, &mut u);
                    if seen.insert(u.clone()) {
                        out.push(u);
                    }
                }
            }
        }
        out.into_iter().map(Weight).collect()
    }

    /// Orbit of a regular dominant weight with `det(w)` for each image.
    pub fn signed_regular_orbit(&self, regular: &Weight) -> Vec<(Weight, i64)> {
        debug_assert!(regular.0.iter().all(|&x| x > 0));
        let mut depth: HashMap<Vec<i64>, usize> = HashMap::new();
        let mut out = vec![(regular.0.clone(), 0usize)];
        depth.insert(regular.0.clone(), 0);
        let mut head = 0;
        while head < out.len() {
            let (v, d) = out[head].clone();
            head += 1;
            for i in 0..self.rank() {
                if v[i] > 0 {
                    let mut u = v.clone();
                    self.reflect_in_place(i, &mut u);
                    if !depth.contains_key(&u) {
                        depth.insert(u.clone(), d + 1);
                        out.push((u, d + 1));
                    }
                }
            }
        }
        out.into_iter()
            .map(|(v, d)| (Weight(v), if d % 2 == 0 { 1 } else { -1 }))
            .collect()
    }

    /// Longest element of the parabolic subgroup generated by `nodes`.
    pub fn parabolic_longest(&self, nodes: &[usize]) -> WeylElement {
        let mut v = self.rho.0.clone();
        let mut applied = Vec::new();
        while let Some(&j) = nodes.iter().find(|&&j| v[j] > 0) {
            self.reflect_in_place(j, &mut v);
            applied.push(j);
        }
        applied.reverse();
        WeylElement::from_word(applied)
    }

    pub fn longest_element(&self) -> WeylElement {
        let all: Vec<usize> = (0..self.rank()).collect();
        self.parabolic_longest(&all)
    }
}

impl PartialEq for RootDatum {
    fn eq(&self, other: &Self) -> bool {
        self.ty == other.ty
    }
}

impl Eq for RootDatum {}

fn scale_to_integers(m: &[Vec<BigRational>]) -> (Vec<Vec<i64>>, i64) {
    let den = crate::lattice::common_denominator(m);
    let d = BigRational::from_integer(den.clone());
    let num = m
        .iter()
        .map(|row| {
            row.iter()
                .map(|x| (x * &d).to_integer().to_i64().expect("form entry fits i64"))
                .collect()
        })
        .collect();
    (num, den.to_i64().expect("denominator fits i64"))
}

fn determinant(m: &[Vec<BigRational>]) -> BigRational {
    let n = m.len();
    let mut a = m.to_vec();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if p != col {
            a.swap(p, col);
            det = -det;
        }
        det *= &a[col][col];
        for r in col + 1..n {
            let f = &a[r][col] / &a[col][col];
            for j in col..n {
                let t = &f * &a[col][j];
                a[r][j] = &a[r][j] - t;
            }
        }
    }
    det
}
