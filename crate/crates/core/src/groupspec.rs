//! Group specifications: `SERIES RANK [ "/" ZSPEC ]`, e.g. `A2`, `A1/Z2`,
//! `D4/Z2{v}`.

use std::fmt;
use std::str::FromStr;

use crate::center::{center_subgroup, CenterDatum, ZSpec};
use crate::error::{Error, Result};
use crate::rootdata::{RootDatum, SimpleType};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    pub ty: SimpleType,
    pub quotient: Option<ZSpec>,
}

impl GroupSpec {
    pub fn datum(&self) -> Result<RootDatum> {
        RootDatum::new(self.ty)
    }

    /// The subgroup `Z` (trivial when no quotient is given).
    pub fn center(&self) -> Result<CenterDatum> {
        center_subgroup(&self.datum()?, self.quotient)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.quotient {
            Some(z) => write!(f, "{}/{}", self.ty, z),
            None => write!(f, "{}", self.ty),
        }
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.ends_with(",-") {
            return Err(Error::TwistedExtension);
        }
        let (head, tail) = match t.split_once('/') {
            Some((h, q)) => (h, Some(q)),
            None => (t, None),
        };
        let ty: SimpleType = head.parse()?;
        let quotient = tail.map(str::parse::<ZSpec>).transpose()?;
        let spec = GroupSpec { ty, quotient };
        // reject quotients that are not subgroups up front
        spec.center()?;
        Ok(spec)
    }
}
