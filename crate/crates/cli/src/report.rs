//! Serializable reports and their text rendering.

use std::fmt::Write as _;

use duadic::duadic::BoundKind;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeReport {
    pub group: String,
    pub n: usize,
    pub q: u64,
    pub splitting: String,
    pub existence: Existence,
    pub idempotents: Option<Idempotents>,
    pub dimensions: Option<Dimensions>,
    pub distances: Option<Distances>,
    pub quantum: Option<Quantum>,
    pub degeneracy: Option<Degeneracy>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing: Option<Timing>,
}

/// Splitting verdicts. `splits` is decided by the class and idempotent
/// criteria; the order-of-q test is reported next to it when one applies.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Existence {
    pub splits: bool,
    pub class_criterion: bool,
    pub idempotent_criterion: bool,
    pub ord_criterion: Option<OrdCriterion>,
    /// `None` when no order test applies to the splitting.
    pub agreement: Option<bool>,
    pub diagnostics: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrdCriterion {
    pub modulus: u64,
    pub order: u64,
    /// Parity the order must have for a splitting: "odd" or "even".
    pub required_parity: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairTerms {
    pub e: Vec<String>,
    pub f: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Idempotents {
    pub e: Vec<String>,
    pub f: Vec<String>,
    pub alternatives: Vec<PairTerms>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dimensions {
    pub c_e: usize,
    pub c_f: usize,
    pub d_e: usize,
    pub d_f: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "tag", rename_all = "kebab-case")]
pub enum DistanceValue {
    Exact { value: usize },
    LowerBound { value: usize, bound: String },
    UpperBound { value: usize, witness: String },
}

impl DistanceValue {
    pub fn value(&self) -> usize {
        match self {
            DistanceValue::Exact { value }
            | DistanceValue::LowerBound { value, .. }
            | DistanceValue::UpperBound { value, .. } => *value,
        }
    }

    pub fn lower(value: usize, kind: BoundKind) -> Self {
        let bound = match kind {
            BoundKind::Square => "d^2>=n",
            BoundKind::SquareShift => "d^2-d+1>=n",
        };
        DistanceValue::LowerBound {
            value,
            bound: bound.into(),
        }
    }

    fn short(&self) -> String {
        match self {
            DistanceValue::Exact { value } => value.to_string(),
            DistanceValue::LowerBound { value, .. } => format!(">={value}"),
            DistanceValue::UpperBound { value, .. } => format!("<={value}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Distances {
    /// Minimum weight of the odd-like code `D_e`.
    pub odd_like: DistanceValue,
    /// Minimum weight of the even-like code `C_e`.
    pub even_like: Option<DistanceValue>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Quantum {
    pub parameters: String,
    pub n: usize,
    pub k: usize,
    pub d: DistanceValue,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightCount {
    pub weight: usize,
    pub count: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StabilizerWitness {
    pub kind: String,
    pub weight: usize,
    pub support: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Degeneracy {
    pub threshold: usize,
    pub exact: bool,
    pub degenerate: bool,
    pub x_counts: Vec<WeightCount>,
    pub z_counts: Vec<WeightCount>,
    pub witnesses: Vec<StabilizerWitness>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timing {
    pub total_us: u64,
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

impl CodeReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let ex = &self.existence;
        let _ = writeln!(out, "group      {} (n = {})", self.group, self.n);
        let _ = writeln!(out, "field      GF({})", self.q);
        let _ = writeln!(out, "splitting  {}", self.splitting);
        let _ = writeln!(
            out,
            "splits     {} (classes: {}, idempotents: {})",
            yes_no(ex.splits),
            yes_no(ex.class_criterion),
            yes_no(ex.idempotent_criterion)
        );
        if let Some(ord) = &ex.ord_criterion {
            let _ = writeln!(
                out,
                "ord test   ord_{}({})={} ({} required): {}, agreement {}",
                ord.modulus,
                self.q,
                ord.order,
                ord.required_parity,
                yes_no(ord.holds),
                yes_no(ex.agreement == Some(true))
            );
        }
        if !ex.splits {
            let _ = writeln!(out, "diagnosis  {}", ex.diagnostics);
        }
        if let Some(idem) = &self.idempotents {
            let _ = writeln!(out, "e          {}", idem.e.join(", "));
            let _ = writeln!(out, "f          {}", idem.f.join(", "));
            for (i, alt) in idem.alternatives.iter().enumerate() {
                let _ = writeln!(out, "alt {i:<6} e = {}", alt.e.join(", "));
                let _ = writeln!(out, "           f = {}", alt.f.join(", "));
            }
        }
        if let Some(d) = &self.dimensions {
            let _ = writeln!(
                out,
                "dims       C_e {}, C_f {}, D_e {}, D_f {}",
                d.c_e, d.c_f, d.d_e, d.d_f
            );
        }
        if let Some(d) = &self.distances {
            let _ = write!(out, "weights    odd-like {}", d.odd_like.short());
            if let Some(even) = &d.even_like {
                let _ = write!(out, ", even-like {}", even.short());
            }
            out.push('\n');
        }
        if let Some(qd) = &self.quantum {
            let _ = writeln!(out, "quantum    {}", qd.parameters);
        }
        if let Some(dg) = &self.degeneracy {
            let _ = writeln!(
                out,
                "degenerate {} (threshold {}, {})",
                yes_no(dg.degenerate),
                dg.threshold,
                if dg.exact { "exhaustive" } else { "witness search" }
            );
        }
        if let Some(t) = &self.timing {
            let _ = writeln!(out, "time       {} us", t.total_us);
        }
        out
    }
}

/// One row per report.
pub fn render_table(reports: &[CodeReport]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<14} {:>4} {:>4} {:<10} {:<6} {:<12} {:<6} {:<9} {:<18}",
        "group", "n", "q", "splitting", "splits", "ord", "agree", "dims", "quantum"
    );
    for r in reports {
        let ord = r
            .existence
            .ord_criterion
            .as_ref()
            .map_or("-".to_string(), |o| format!("{}:{}", o.modulus, o.order));
        let agree = r.existence.agreement.map_or("-", yes_no);
        let dims = r
            .dimensions
            .map_or("-".to_string(), |d| format!("{}/{}", d.c_e, d.d_e));
        let quantum = r.quantum.as_ref().map_or("-".to_string(), |qd| qd.parameters.clone());
        let _ = writeln!(
            out,
            "{:<14} {:>4} {:>4} {:<10} {:<6} {:<12} {:<6} {:<9} {:<18}",
            r.group,
            r.n,
            r.q,
            r.splitting,
            yes_no(r.existence.splits),
            ord,
            agree,
            dims,
            quantum
        );
    }
    out
}
