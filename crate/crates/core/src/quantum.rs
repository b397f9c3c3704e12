//! CSS quantum codes from nested classical codes `C <= D`, and the duadic
//! pipeline that produces them.

use std::fmt;

use crate::algebra::AlgebraElement;
use crate::codes::{dual, min_weight_difference_with, subcode_check, weight_distribution_with, LinearCode};
use crate::duadic::{construct_pairs, duadic_codes, odd_like_bound, BoundKind, DuadicCodes, DuadicPair, Mode, OddLikeBound};
use crate::exec::Exec;
use crate::gf::linalg::Matrix;
use crate::gf::FiniteField;
use crate::groups::{Antiautomorphism, Group};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Distance {
    Exact(usize),
    /// Enumeration was over the cap; `d` comes from the odd-like weight bound.
    LowerBound { d: usize, kind: BoundKind },
}

impl Distance {
    pub fn value(self) -> usize {
        match self {
            Distance::Exact(d) | Distance::LowerBound { d, .. } => d,
        }
    }

    pub fn is_exact(self) -> bool {
        matches!(self, Distance::Exact(_))
    }
}

impl fmt::Display for Distance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Distance::Exact(d) => write!(f, "{d}"),
            Distance::LowerBound { d, .. } => write!(f, ">={d}"),
        }
    }
}

/// CSS code built from `C <= D`: X stabilizers generate `C`, Z stabilizers generate `D^perp`.
#[derive(Debug, Clone)]
pub struct CssCode {
    c: LinearCode,
    d: LinearCode,
    d_perp: LinearCode,
    distance: Option<Distance>,
    bound: Option<OddLikeBound>,
}

impl CssCode {
    pub fn n(&self) -> usize {
        self.c.length()
    }

    pub fn k(&self) -> usize {
        self.d.dimension() - self.c.dimension()
    }

    pub fn q(&self) -> u64 {
        self.c.field().order()
    }

    pub fn c(&self) -> &LinearCode {
        &self.c
    }

    pub fn d(&self) -> &LinearCode {
        &self.d
    }

    pub fn x_stabilizers(&self) -> &Matrix {
        self.c.generator()
    }

    pub fn z_stabilizers(&self) -> &Matrix {
        self.d_perp.generator()
    }

    pub fn distance(&self) -> Option<Distance> {
        self.distance
    }

    /// Bound used when the distance cannot be enumerated.
    pub fn bound(&self) -> Option<OddLikeBound> {
        self.bound
    }

    pub fn with_bound(mut self, bound: OddLikeBound) -> Self {
        self.bound = Some(bound);
        self
    }

    /// Sets the distance field from [`css_distance`], falling back to the
    /// bound when over the cap.
    pub fn with_distance(mut self, cap: u128, exec: Exec) -> Result<Self> {
        self.distance = Some(css_distance_with(&self, cap, exec)?);
        Ok(self)
    }

    pub fn parameters(&self) -> String {
        let d = self.distance.map_or_else(|| "?".to_string(), |d| d.to_string());
        format!("[[{},{},{}]]_{}", self.n(), self.k(), d, self.q())
    }
}

pub fn css_build(c: &LinearCode, d: &LinearCode) -> Result<CssCode> {
    if !subcode_check(c, d)? {
        return Err(Error::NotSubcode);
    }
    let d_perp = dual(d)?;
    if !c.generator().mul(&d_perp.generator().transpose()).is_zero() {
        return Err(Error::Internal("X and Z stabilizers are not orthogonal".into()));
    }
    Ok(CssCode {
        c: c.clone(),
        d: d.clone(),
        d_perp,
        distance: None,
        bound: None,
    })
}

pub fn css_distance(code: &CssCode, cap: u128) -> Result<Distance> {
    css_distance_with(code, cap, Exec::default())
}

/// `min wt((D \ C) u (C^perp \ D^perp))`; a single enumeration when `C^perp = D`.
pub fn css_distance_with(code: &CssCode, cap: u128, exec: Exec) -> Result<Distance> {
    distance_impl(code, cap, exec, true)
}

/// Same as [`css_distance_with`] but always enumerates both differences.
pub fn css_distance_uncollapsed(code: &CssCode, cap: u128, exec: Exec) -> Result<Distance> {
    distance_impl(code, cap, exec, false)
}

fn distance_impl(code: &CssCode, cap: u128, exec: Exec, collapse: bool) -> Result<Distance> {
    if code.k() == 0 {
        return Err(Error::ZeroCode);
    }
    let over_cap = |e: Error| match (e, code.bound) {
        (Error::CapExceeded { .. }, Some(b)) => Ok(Distance::LowerBound { d: b.d_min, kind: b.kind }),
        (e, _) => Err(e),
    };
    let first = match min_weight_difference_with(&code.d, &code.c, cap, exec) {
        Ok(m) => m.weight,
        Err(e) => return over_cap(e),
    };
    let c_perp = dual(&code.c)?;
    if collapse && c_perp == code.d {
        return Ok(Distance::Exact(first));
    }
    match min_weight_difference_with(&c_perp, &code.d_perp, cap, exec) {
        Ok(m) => Ok(Distance::Exact(first.min(m.weight))),
        Err(e) => over_cap(e),
    }
}

/// End-to-end result of the duadic CSS construction.
#[derive(Debug, Clone)]
pub struct QuantumDuadic {
    pub pair: DuadicPair,
    pub codes: DuadicCodes,
    pub css: CssCode,
}

/// Canonical pair, its duadic codes, and the CSS code from `C_e <= D_e`.
pub fn quantum_duadic(
    field: &FiniteField,
    group: &Group,
    mu: &Antiautomorphism,
    cap: u128,
) -> Result<QuantumDuadic> {
    let pair = construct_pairs(mu, field, group, Mode::Canonical)?
        .into_iter()
        .next()
        .ok_or_else(|| Error::NoSplitting("no nontrivial idempotents".into()))?;
    quantum_from_pair(pair, cap, Exec::default())
}

pub fn quantum_from_pair(pair: DuadicPair, cap: u128, exec: Exec) -> Result<QuantumDuadic> {
    let codes = duadic_codes(&pair)?;
    let css = css_build(&codes.c_e, &codes.d_e)?
        .with_bound(odd_like_bound(&pair))
        .with_distance(cap, exec)?;
    Ok(QuantumDuadic { pair, codes, css })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StabilizerKind {
    /// A word of `C`.
    X,
    /// A word of `D^perp`.
    Z,
}

/// A stabilizer word lighter than the distance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub kind: StabilizerKind,
    pub weight: usize,
    pub support: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegeneracyReport {
    /// Weights below this value are counted.
    pub threshold: usize,
    /// Counts come from full weight distributions of `C` and `D^perp`.
    pub exact: bool,
    /// `(weight, count)` of nonzero X stabilizer words below the threshold (exact mode only).
    pub x_counts: Vec<(usize, u128)>,
    /// `(weight, count)` of nonzero Z stabilizer words below the threshold (exact mode only).
    pub z_counts: Vec<(usize, u128)>,
    /// Words found among translates `g h` of the hint idempotents (bound mode only).
    pub witnesses: Vec<Witness>,
}

impl DegeneracyReport {
    pub fn degenerate(&self) -> bool {
        !self.x_counts.is_empty() || !self.z_counts.is_empty() || !self.witnesses.is_empty()
    }
}

/// Stabilizer words of weight below the distance. Exact when both `C` and
/// `D^perp` are enumerable; otherwise searches the translates of `hints`.
pub fn degeneracy_report(code: &CssCode, cap: u128, hints: &[AlgebraElement]) -> Result<DegeneracyReport> {
    let threshold = code.distance.map_or(0, Distance::value);
    let below = |dist: Vec<u128>| -> Vec<(usize, u128)> {
        dist.into_iter()
            .enumerate()
            .skip(1)
            .take(threshold.saturating_sub(1))
            .filter(|&(_, c)| c > 0)
            .collect()
    };
    let exec = Exec::default();
    match (
        weight_distribution_with(&code.c, cap, exec),
        weight_distribution_with(&code.d_perp, cap, exec),
    ) {
        (Ok(x), Ok(z)) => Ok(DegeneracyReport {
            threshold,
            exact: true,
            x_counts: below(x),
            z_counts: below(z),
            witnesses: Vec::new(),
        }),
        (Err(Error::CapExceeded { .. }), _) | (_, Err(Error::CapExceeded { .. })) => {
            let mut witnesses: Vec<Witness> = Vec::new();
            for h in hints {
                for g in h.group().elements() {
                    let word = h.left_translate(g);
                    if word.is_zero() || word.weight() >= threshold {
                        continue;
                    }
                    for (kind, space) in [(StabilizerKind::X, &code.c), (StabilizerKind::Z, &code.d_perp)] {
                        let support = word.support();
                        if space.contains(word.coeffs())
                            && !witnesses.iter().any(|w| w.kind == kind && w.support == support)
                        {
                            witnesses.push(Witness { kind, weight: word.weight(), support });
                        }
                    }
                }
            }
            witnesses.sort_by(|a, b| (a.weight, &a.support).cmp(&(b.weight, &b.support)));
            Ok(DegeneracyReport {
                threshold,
                exact: false,
                x_counts: Vec::new(),
                z_counts: Vec::new(),
                witnesses,
            })
        }
        (Err(e), _) | (_, Err(e)) => Err(e),
    }
}
