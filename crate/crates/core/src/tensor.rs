//! Weight multiplicities (Freudenthal) and tensor-product decomposition
//! (Racah-Speiser / Brauer-Klimyk).

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootdata::{Reflection, RootDatum, Weight};

/// Representations larger than this are refused.
pub const MAX_REP_DIM: u128 = 1_000_000;

/// All weights of an irreducible representation with their multiplicities.
#[derive(Debug, Clone, Serialize)]
pub struct WeightSystem {
    pub base: Weight,
    pub multiplicities: BTreeMap<Weight, u64>,
}

impl WeightSystem {
    pub fn multiplicity(&self, mu: &Weight) -> u64 {
        self.multiplicities.get(mu).copied().unwrap_or(0)
    }

    pub fn dim(&self) -> u64 {
        self.multiplicities.values().sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TensorDecomposition {
    pub factors: (Weight, Weight),
    pub components: BTreeMap<Weight, u64>,
}

impl TensorDecomposition {
    pub fn multiplicity(&self, nu: &Weight) -> u64 {
        self.components.get(nu).copied().unwrap_or(0)
    }
}

fn check_dominant(d: &RootDatum, w: &Weight) -> Result<()> {
    d.check_weight(w)?;
    if w.is_dominant() {
        Ok(())
    } else {
        Err(Error::NotDominant(w.labels().to_vec()))
    }
}

fn check_size(d: &RootDatum, lambda: &Weight) -> Result<()> {
    let dim = d.weyl_dim_u128(lambda)?;
    if dim > MAX_REP_DIM {
        return Err(Error::ResourceCap {
            what: "representation dimension",
            requested: dim,
            limit: MAX_REP_DIM,
        });
    }
    Ok(())
}

/// Multiplicities of the dominant weights of `V_lambda`.
pub fn dominant_multiplicities(d: &RootDatum, lambda: &Weight) -> Result<BTreeMap<Weight, u64>> {
    check_dominant(d, lambda)?;
    check_size(d, lambda)?;

    // dominant weights below lambda, with their depth (height of lambda - mu)
    let mut depth: HashMap<Weight, i64> = HashMap::new();
    depth.insert(lambda.clone(), 0);
    let mut frontier = vec![lambda.clone()];
    while let Some(mu) = frontier.pop() {
        let dm = depth[&mu];
        for r in d.positive_roots() {
            let nu = Weight::new(mu.labels().iter().zip(&r.labels).map(|(a, b)| a - b).collect());
            if nu.is_dominant() && !depth.contains_key(&nu) {
                depth.insert(nu.clone(), dm + r.simple.iter().sum::<i64>());
                frontier.push(nu);
            }
        }
    }
    let mut order: Vec<(i64, Weight)> = depth.into_iter().map(|(w, h)| (h, w)).collect();
    order.sort();

    let lr = lambda + d.rho();
    let top = i128::from(d.inner_product_raw(lr.labels(), lr.labels()));
    let mut mult: HashMap<Weight, u64> = HashMap::new();
    for (h, mu) in order {
        if h == 0 {
            mult.insert(mu, 1);
            continue;
        }
        let mut num: i128 = 0;
        for r in d.positive_roots() {
            let mut shifted = mu.labels().to_vec();
            loop {
                for (x, a) in shifted.iter_mut().zip(&r.labels) {
                    *x += a;
                }
                let (dom, _) = d.to_dominant(&Weight::new(shifted.clone()));
                let Some(&m) = mult.get(&dom) else { break };
                num += i128::from(m) * i128::from(d.inner_product_raw(&shifted, &r.labels));
            }
        }
        let mr = &mu + d.rho();
        let den = top - i128::from(d.inner_product_raw(mr.labels(), mr.labels()));
        let m = 2 * num / den;
        debug_assert_eq!(2 * num % den, 0);
        if m > 0 {
            mult.insert(mu, m as u64);
        }
    }
    Ok(mult.into_iter().collect())
}

/// Multiplicity of the weight `mu` in `V_lambda`.
pub fn weight_multiplicity(d: &RootDatum, lambda: &Weight, mu: &Weight) -> Result<u64> {
    check_dominant(d, lambda)?;
    d.check_weight(mu)?;
    let (dom, _) = d.to_dominant(mu);
    Ok(dominant_multiplicities(d, lambda)?.get(&dom).copied().unwrap_or(0))
}

pub fn weight_system(d: &RootDatum, lambda: &Weight) -> Result<WeightSystem> {
    let dominant = dominant_multiplicities(d, lambda)?;
    let mut multiplicities = BTreeMap::new();
    for (mu, m) in dominant {
        for w in d.weyl_orbit(&mu) {
            multiplicities.insert(w, m);
        }
    }
    Ok(WeightSystem { base: lambda.clone(), multiplicities })
}

/// `V_lambda (x) V_mu` as a sum of irreducibles.
pub fn tensor_decompose(d: &RootDatum, lambda: &Weight, mu: &Weight) -> Result<TensorDecomposition> {
    check_dominant(d, lambda)?;
    check_dominant(d, mu)?;
    // run over the weights of the smaller factor
    let (big, small) = if d.weyl_dim(lambda)? >= d.weyl_dim(mu)? {
        (lambda, mu)
    } else {
        (mu, lambda)
    };
    let ws = weight_system(d, small)?;
    let mut acc: BTreeMap<Weight, i64> = BTreeMap::new();
    for (nu, m) in &ws.multiplicities {
        if let Reflection::Chamber { weight, sign } = d.dominant_reflect(&(big + nu))? {
            *acc.entry(weight).or_insert(0) += sign * *m as i64;
        }
    }
    let mut components = BTreeMap::new();
    for (w, c) in acc {
        if c < 0 {
            return Err(Error::Internal(format!("negative tensor multiplicity at {w}")));
        }
        if c > 0 {
            components.insert(w, c as u64);
        }
    }
    Ok(TensorDecomposition { factors: (lambda.clone(), mu.clone()), components })
}
