//! Group and splitting specifications.
//!
//! Groups: `7` (cyclic), `3x3` (abelian product), `3x3,3x3` (outer product of
//! two groups), `@path` (Cayley table file). Splittings: `mu-1`, `swap`,
//! `swap*swap`, `@path` (permutation file).

use std::fs;
use std::str::FromStr;

use duadic::groups::{builtin_mu_minus1, builtin_mu_swap, product_antiauto, Antiautomorphism, Group};

use crate::error::{CliError, Result};

/// The order-21 group `Z7 : Z3` as a Cayley table.
pub const FROBENIUS_21: &str = include_str!("../data/frobenius21.cayley");

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FactorSpec {
    Abelian(Vec<u32>),
    Cayley(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupSpec {
    pub factors: Vec<FactorSpec>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MuSpec {
    MinusOne,
    Swap,
    SwapSwap,
    File(String),
}

impl FromStr for FactorSpec {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(path) = s.strip_prefix('@') {
            if path.is_empty() {
                return Err(CliError::Usage("empty Cayley file path".into()));
            }
            return Ok(FactorSpec::Cayley(path.into()));
        }
        let orders = s
            .split('x')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| CliError::Usage(format!("bad group spec {s:?}: {t:?} is not an order")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(FactorSpec::Abelian(orders))
    }
}

impl FromStr for GroupSpec {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        let factors = s.split(',').map(str::parse).collect::<Result<Vec<FactorSpec>>>()?;
        if factors.len() > 2 {
            return Err(CliError::Usage(format!("bad group spec {s:?}: at most two factors")));
        }
        Ok(GroupSpec { factors })
    }
}

impl FromStr for MuSpec {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "mu-1" => Ok(MuSpec::MinusOne),
            "swap" => Ok(MuSpec::Swap),
            "swap*swap" => Ok(MuSpec::SwapSwap),
            t => match t.strip_prefix('@') {
                Some(path) if !path.is_empty() => Ok(MuSpec::File(path.into())),
                _ => Err(CliError::Usage(format!(
                    "bad splitting {s:?}: expected mu-1, swap, swap*swap or @file"
                ))),
            },
        }
    }
}

fn read(path: &str) -> Result<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.into(),
        source,
    })
}

impl FactorSpec {
    pub fn build(&self) -> Result<Group> {
        Ok(match self {
            FactorSpec::Abelian(orders) => Group::abelian(orders)?,
            FactorSpec::Cayley(path) => Group::parse_cayley(&read(path)?)?,
        })
    }
}

impl GroupSpec {
    pub fn factor_groups(&self) -> Result<Vec<Group>> {
        self.factors.iter().map(FactorSpec::build).collect()
    }

    /// The full group; two factors give their direct product.
    pub fn build(&self) -> Result<Group> {
        let groups = self.factor_groups()?;
        match groups.as_slice() {
            [g] => Ok(g.clone()),
            [g1, g2] => Ok(Group::direct_product(g1, g2)?),
            _ => Err(CliError::Usage("empty group spec".into())),
        }
    }
}

impl MuSpec {
    pub fn name(&self) -> String {
        match self {
            MuSpec::MinusOne => "mu-1".into(),
            MuSpec::Swap => "swap".into(),
            MuSpec::SwapSwap => "swap*swap".into(),
            MuSpec::File(p) => format!("@{p}"),
        }
    }

    /// The splitting on a single group. `swap` on a product of two groups is
    /// read as `swap*swap`.
    pub fn on_group(&self, group: &Group, q: u64) -> Result<Antiautomorphism> {
        match self {
            MuSpec::MinusOne => Ok(builtin_mu_minus1(group)),
            MuSpec::Swap => Ok(builtin_mu_swap(group, q)?),
            MuSpec::SwapSwap => Err(CliError::Usage("swap*swap needs a two-factor group spec".into())),
            MuSpec::File(path) => Ok(Antiautomorphism::parse(group, &read(path)?)?),
        }
    }

    /// The splitting on the group described by `spec`.
    pub fn resolve(&self, spec: &GroupSpec, q: u64) -> Result<Antiautomorphism> {
        let factors = spec.factor_groups()?;
        match (self, factors.as_slice()) {
            (MuSpec::Swap | MuSpec::SwapSwap, [g1, g2]) => {
                Ok(product_antiauto(&builtin_mu_swap(g1, q)?, &builtin_mu_swap(g2, q)?)?)
            }
            _ => self.on_group(&spec.build()?, q),
        }
    }

    /// One splitting per factor, for product constructions.
    pub fn per_factor(&self, factors: &[Group], q: u64) -> Result<Vec<Antiautomorphism>> {
        let single = match self {
            MuSpec::SwapSwap => MuSpec::Swap,
            MuSpec::File(_) => {
                return Err(CliError::Usage("a permutation file cannot be split into factors".into()))
            }
            other => other.clone(),
        };
        factors.iter().map(|g| single.on_group(g, q)).collect()
    }
}

/// The nonabelian group of order 21.
pub fn frobenius_21() -> Group {
    Group::parse_cayley(FROBENIUS_21).expect("bundled table is a group")
}
