//! Modular data of the level-k WZW model: S and T matrices, central charge,
//! conformal weights, and the Verlinde formula.

use std::collections::HashMap;
use std::f64::consts::PI;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exec::{Execution, Limits};
use crate::lattice::rat;
use crate::rootdata::{RootDatum, SimpleType, Weight};

/// Integrality tolerance for the Verlinde sum.
pub const VERLINDE_TOLERANCE: f64 = 1e-6;

/// `k dim(g) / (k + h^vee)`.
pub fn central_charge(d: &RootDatum, k: u32) -> BigRational {
    let k = i64::from(k);
    BigRational::new(BigInt::from(k * d.dim_g() as i64), BigInt::from(k + d.dual_coxeter()))
}

/// `<lambda, lambda + 2 rho> / (2 (k + h^vee))`.
pub fn conformal_weight(d: &RootDatum, k: u32, lambda: &Weight) -> Result<BigRational> {
    d.check_weight(lambda)?;
    if !d.at_level(lambda, k) {
        return Err(Error::NotAtLevel { weight: lambda.labels().to_vec(), level: k });
    }
    let two_rho = d.rho() + d.rho();
    let ip = d.inner_product(lambda, &(lambda + &two_rho))?;
    Ok(ip / rat(2 * (i64::from(k) + d.dual_coxeter())))
}

fn frac(x: &BigRational) -> BigRational {
    x - x.floor()
}

#[derive(Debug, Clone)]
pub struct ModularData {
    ty: SimpleType,
    level: u32,
    basis: Vec<Weight>,
    index: HashMap<Weight, usize>,
    s: Vec<Vec<Complex64>>,
    t: Vec<Complex64>,
    t_phase: Vec<BigRational>,
    c: BigRational,
    h: Vec<BigRational>,
    conjugation: Vec<usize>,
}

pub fn modular_data(d: &RootDatum, k: u32) -> Result<ModularData> {
    modular_data_with(d, k, Execution::default(), &Limits::default())
}

pub fn modular_data_with(d: &RootDatum, k: u32, exec: Execution, limits: &Limits) -> Result<ModularData> {
    let basis = d.enumerate_level_weights(k);
    limits.check_basis(basis.len())?;
    let order = d.simple_type().weyl_order();
    if order > limits.max_weyl {
        return Err(Error::ResourceCap { what: "Weyl group", requested: order, limit: limits.max_weyl });
    }
    let n = basis.len();
    let index: HashMap<Weight, usize> = basis.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let shifted: Vec<Weight> = basis.iter().map(|w| w + d.rho()).collect();
    let modulus = d.form_den() * (i64::from(k) + d.dual_coxeter());

    let raw: Vec<Vec<Complex64>> = exec.map_range(n, |i| {
        let orbit = d.signed_regular_orbit(&shifted[i]);
        (0..n)
            .map(|j| {
                let mut acc = Complex64::zero();
                for (w, sign) in &orbit {
                    let p = d.inner_product_raw(w.labels(), shifted[j].labels()).rem_euclid(modulus);
                    let angle = -2.0 * PI * (p as f64) / (modulus as f64);
                    acc += Complex64::from_polar(*sign as f64, angle);
                }
                acc
            })
            .collect()
    });
    let norm = raw[0].iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    let phase = Complex64::from_polar(1.0, -raw[0][0].arg());
    let s: Vec<Vec<Complex64>> = raw
        .into_iter()
        .map(|row| row.into_iter().map(|z| z * phase / norm).collect())
        .collect();

    let c = central_charge(d, k);
    let h: Vec<BigRational> = basis
        .iter()
        .map(|w| conformal_weight(d, k, w))
        .collect::<Result<_>>()?;
    let c24 = &c / rat(24);
    let t_phase: Vec<BigRational> = h.iter().map(|x| frac(&(x - &c24))).collect();
    let t = t_phase
        .iter()
        .map(|p| Complex64::from_polar(1.0, 2.0 * PI * p.to_f64().unwrap_or(0.0)))
        .collect();
    let conjugation = basis
        .iter()
        .map(|w| Ok(index[&d.conjugate_weight(w)?]))
        .collect::<Result<_>>()?;
    Ok(ModularData { ty: d.simple_type(), level: k, basis, index, s, t, t_phase, c, h, conjugation })
}

fn max_defect(a: &[Vec<Complex64>], b: &[Vec<Complex64>]) -> f64 {
    a.iter()
        .zip(b)
        .flat_map(|(r, q)| r.iter().zip(q).map(|(x, y)| (x - y).norm()))
        .fold(0.0, f64::max)
}

fn matmul(a: &[Vec<Complex64>], b: &[Vec<Complex64>]) -> Vec<Vec<Complex64>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).map(|l| a[i][l] * b[l][j]).sum())
                .collect()
        })
        .collect()
}

impl ModularData {
    pub fn simple_type(&self) -> SimpleType {
        self.ty
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn basis(&self) -> &[Weight] {
        &self.basis
    }

    pub fn index_of(&self, w: &Weight) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn s(&self) -> &[Vec<Complex64>] {
        &self.s
    }

    /// Diagonal of T.
    pub fn t(&self) -> &[Complex64] {
        &self.t
    }

    /// Diagonal of T as exact turns `h_lambda - c/24 mod 1`.
    pub fn t_phase(&self) -> &[BigRational] {
        &self.t_phase
    }

    pub fn central_charge(&self) -> &BigRational {
        &self.c
    }

    pub fn conformal_weights(&self) -> &[BigRational] {
        &self.h
    }

    /// Index of the conjugate of each basis weight.
    pub fn conjugation(&self) -> &[usize] {
        &self.conjugation
    }

    pub fn t_matrix(&self) -> Vec<Vec<Complex64>> {
        let n = self.basis.len();
        (0..n)
            .map(|i| (0..n).map(|j| if i == j { self.t[i] } else { Complex64::zero() }).collect())
            .collect()
    }

    /// `max |S S^dagger - I|`.
    pub fn unitarity_defect(&self) -> f64 {
        let n = self.basis.len();
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                let v: Complex64 = (0..n).map(|l| self.s[i][l] * self.s[j][l].conj()).sum();
                let e = if i == j { v - 1.0 } else { v };
                worst = worst.max(e.norm());
            }
        }
        worst
    }

    /// `max |S - S^T|`.
    pub fn symmetry_defect(&self) -> f64 {
        let n = self.basis.len();
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in 0..n {
                worst = worst.max((self.s[i][j] - self.s[j][i]).norm());
            }
        }
        worst
    }

    /// `max |S^2 - C|` with C the charge-conjugation permutation.
    pub fn conjugation_defect(&self) -> f64 {
        let n = self.basis.len();
        let c: Vec<Vec<Complex64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if self.conjugation[i] == j { Complex64::new(1.0, 0.0) } else { Complex64::zero() })
                    .collect()
            })
            .collect();
        max_defect(&matmul(&self.s, &self.s), &c)
    }

    /// `max |(ST)^3 - S^2|`.
    pub fn modular_relation_defect(&self) -> f64 {
        let st = matmul(&self.s, &self.t_matrix());
        let st3 = matmul(&matmul(&st, &st), &st);
        max_defect(&st3, &matmul(&self.s, &self.s))
    }

    fn idx(&self, w: &Weight) -> Result<usize> {
        self.index_of(w)
            .ok_or_else(|| Error::NotAtLevel { weight: w.labels().to_vec(), level: self.level })
    }

    /// The Verlinde sum `sum_s S_{lambda s} S_{mu s} conj(S_{nu s}) / S_{0 s}`
    /// before rounding.
    pub fn verlinde_sum(&self, lambda: &Weight, mu: &Weight, nu: &Weight) -> Result<Complex64> {
        let (a, b, c) = (self.idx(lambda)?, self.idx(mu)?, self.idx(nu)?);
        Ok((0..self.basis.len())
            .map(|s| self.s[a][s] * self.s[b][s] * self.s[c][s].conj() / self.s[0][s])
            .sum())
    }
}

/// Fusion coefficient from the Verlinde formula, rounded to the nearest
/// integer; fails if the sum is not within `1e-6` of a non-negative integer.
pub fn verlinde_from_s(md: &ModularData, lambda: &Weight, mu: &Weight, nu: &Weight) -> Result<u64> {
    let v = md.verlinde_sum(lambda, mu, nu)?;
    let r = v.re.round();
    let err = (v - r).norm();
    if err > VERLINDE_TOLERANCE || r < 0.0 {
        return Err(Error::NonIntegral { value: v.re, tolerance: VERLINDE_TOLERANCE });
    }
    Ok(r as u64)
}
