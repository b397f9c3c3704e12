//! `scan` and `construct`.

use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use duadic::algebra::AlgebraElement;
use duadic::codes::{min_weight_exhaustive_with, odd_like_min_weight_with, LinearCode};
use duadic::duadic::{
    check_splitting, construct_pairs, duadic_codes, odd_like_bound, product_duadic, DuadicPair, Mode, Side,
};
use duadic::exec::Exec;
use duadic::gf::linalg::Matrix;
use duadic::gf::{gcd, is_prime, multiplicative_order_mod, FiniteField};
use duadic::groups::{Antiautomorphism, Group};
use duadic::quantum::{css_build, degeneracy_report, quantum_from_pair, Distance, QuantumDuadic, StabilizerKind};
use duadic::Error;

use crate::error::{CliError, Result};
use crate::report::{
    CodeReport, Degeneracy, Dimensions, DistanceValue, Distances, Existence, Idempotents, OrdCriterion,
    PairTerms, Quantum, StabilizerWitness, Timing, WeightCount,
};
use crate::spec::{GroupSpec, MuSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Options {
    pub cap: u128,
    pub exec: Exec,
    pub timing: bool,
    /// Enumerate weights up to the cap; otherwise only bounds are reported.
    pub distances: bool,
    pub degeneracy: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            cap: duadic::codes::DEFAULT_ENUM_CAP,
            exec: Exec::default(),
            timing: false,
            distances: true,
            degeneracy: true,
        }
    }
}

pub fn field(q: u64) -> Result<FiniteField> {
    FiniteField::from_order(q).map_err(|e| CliError::Usage(format!("q = {q}: {e}")))
}

/// The order test that accompanies `mu`, if any: `ord_n(q)` odd for `mu_-1`,
/// `ord_p(q)` even for the swap on `Z_p x Z_p`.
fn ord_criterion(mu: &Antiautomorphism, group: &Group, q: u64) -> Option<OrdCriterion> {
    let n = group.order() as u64;
    if gcd(n, q) != 1 || n == 1 {
        return None;
    }
    let (modulus, parity) = if mu.is_mu_minus1() {
        (n, 1)
    } else if mu.name() == "swap" {
        match group.abelian_shape() {
            Some(&[p, p2]) if p == p2 => (p as u64, 0),
            _ => return None,
        }
    } else {
        return None;
    };
    let order = multiplicative_order_mod(q, modulus).ok()?;
    Some(OrdCriterion {
        modulus,
        order,
        required_parity: if parity == 1 { "odd" } else { "even" }.into(),
        holds: order % 2 == parity,
    })
}

pub fn existence(mu: &Antiautomorphism, field: &FiniteField, group: &Group) -> Result<Existence> {
    if group.order() % 2 == 0 {
        return Err(Error::EvenOrder(group.order()).into());
    }
    let check = check_splitting(mu, field, group)?;
    let ord = ord_criterion(mu, group, field.order());
    let agreement = ord.as_ref().map(|o| o.holds == check.splits);
    let diagnostics = match &ord {
        Some(o) if !check.splits => format!(
            "ord_{}({})={} {}; {}",
            o.modulus,
            field.order(),
            o.order,
            if o.order % 2 == 1 { "odd" } else { "even" },
            check.diagnostics()
        ),
        _ => check.diagnostics(),
    };
    Ok(Existence {
        splits: check.splits,
        class_criterion: check.class_level,
        idempotent_criterion: check.idempotent_level,
        ord_criterion: ord,
        agreement,
        diagnostics,
    })
}

fn terms(pair: &DuadicPair) -> PairTerms {
    PairTerms {
        e: pair.e().terms(),
        f: pair.f().terms(),
    }
}

fn exact_or_bound(d: Distance) -> DistanceValue {
    match d {
        Distance::Exact(value) => DistanceValue::Exact { value },
        Distance::LowerBound { d, kind } => DistanceValue::lower(d, kind),
    }
}

/// Lightest hint lying in `code`, as an upper bound on its minimum weight.
fn lightest_member(code: &LinearCode, hints: &[AlgebraElement]) -> Option<DistanceValue> {
    hints
        .iter()
        .filter(|h| !h.is_zero() && code.contains(h.coeffs()))
        .min_by_key(|h| (h.weight(), h.support_key()))
        .map(|h| DistanceValue::UpperBound {
            value: h.weight(),
            witness: h.to_string(),
        })
}

fn distances(qd: &QuantumDuadic, hints: &[AlgebraElement], opts: &Options) -> Result<Distances> {
    let bound = odd_like_bound(&qd.pair);
    let cap = if opts.distances { opts.cap } else { 0 };
    let odd_like = match odd_like_min_weight_with(&qd.codes, Side::E, cap, opts.exec) {
        Ok(m) => DistanceValue::Exact { value: m.weight },
        Err(Error::CapExceeded { .. }) => DistanceValue::lower(bound.d_min, bound.kind),
        Err(e) => return Err(e.into()),
    };
    let even_like = match min_weight_exhaustive_with(&qd.codes.c_e, cap, opts.exec) {
        Ok(m) => Some(DistanceValue::Exact { value: m.weight }),
        Err(Error::CapExceeded { .. }) => lightest_member(&qd.codes.c_e, hints),
        Err(Error::ZeroCode) => None,
        Err(e) => return Err(e.into()),
    };
    Ok(Distances { odd_like, even_like })
}

fn degeneracy(qd: &QuantumDuadic, hints: &[AlgebraElement], opts: &Options) -> Result<Degeneracy> {
    let rep = degeneracy_report(&qd.css, opts.cap, hints)?;
    let counts = |v: &[(usize, u128)]| {
        v.iter()
            .map(|&(weight, count)| WeightCount {
                weight,
                count: count as u64,
            })
            .collect()
    };
    Ok(Degeneracy {
        threshold: rep.threshold,
        exact: rep.exact,
        degenerate: rep.degenerate(),
        x_counts: counts(&rep.x_counts),
        z_counts: counts(&rep.z_counts),
        witnesses: rep
            .witnesses
            .iter()
            .map(|w| StabilizerWitness {
                kind: match w.kind {
                    StabilizerKind::X => "X".into(),
                    StabilizerKind::Z => "Z".into(),
                },
                weight: w.weight,
                support: w.support.clone(),
            })
            .collect(),
    })
}

/// Report for an existing pair.
fn pair_report(
    pair: DuadicPair,
    alternatives: Vec<PairTerms>,
    existence: Existence,
    splitting: String,
    opts: &Options,
) -> Result<CodeReport> {
    let group = pair.group().clone();
    let q = pair.field().order();
    let hints: Vec<AlgebraElement> = std::iter::once(pair.e().clone())
        .chain(pair.constituents().iter().cloned())
        .collect();
    let terms = terms(&pair);
    let cap = if opts.distances { opts.cap } else { 0 };
    let qd = quantum_from_pair(pair, cap, opts.exec)?;
    let c = &qd.codes;
    let dimensions = Dimensions {
        c_e: c.c_e.dimension(),
        c_f: c.c_f.dimension(),
        d_e: c.d_e.dimension(),
        d_f: c.d_f.dimension(),
    };
    let distances = distances(&qd, &hints, opts)?;
    let d = exact_or_bound(qd.css.distance().expect("distance is set"));
    let quantum = Quantum {
        parameters: qd.css.parameters(),
        n: qd.css.n(),
        k: qd.css.k(),
        d,
    };
    let degeneracy = if opts.degeneracy {
        Some(degeneracy(&qd, &hints, opts)?)
    } else {
        None
    };
    Ok(CodeReport {
        group: group.descriptor().to_string(),
        n: group.order(),
        q,
        splitting,
        existence,
        idempotents: Some(Idempotents {
            e: terms.e,
            f: terms.f,
            alternatives,
        }),
        dimensions: Some(dimensions),
        distances: Some(distances),
        quantum: Some(quantum),
        degeneracy,
        timing: None,
    })
}

fn bare_report(group: &Group, q: u64, splitting: String, existence: Existence) -> CodeReport {
    CodeReport {
        group: group.descriptor().to_string(),
        n: group.order(),
        q,
        splitting,
        existence,
        idempotents: None,
        dimensions: None,
        distances: None,
        quantum: None,
        degeneracy: None,
        timing: None,
    }
}

/// Arguments of `construct`.
#[derive(Debug, Clone)]
pub struct ConstructArgs {
    pub group: GroupSpec,
    pub q: u64,
    pub mu: MuSpec,
    pub product: bool,
    pub enumerate_all: bool,
    pub emit: Option<PathBuf>,
    pub options: Options,
}

/// Builds the canonical pair (or the product of the canonical factor pairs)
/// and its full report. No splitting is an error carrying the diagnostics.
pub fn cmd_construct(args: &ConstructArgs) -> Result<CodeReport> {
    let start = Instant::now();
    let f = field(args.q)?;
    let (pair, mu, alternatives) = if args.product {
        let factors = args.group.factor_groups()?;
        if factors.len() != 2 {
            return Err(CliError::Usage("--product needs a two-factor group spec such as 3x3,3x3".into()));
        }
        let mus = args.mu.per_factor(&factors, args.q)?;
        let mut pairs = Vec::new();
        for (g, mu) in factors.iter().zip(&mus) {
            let p = construct_pairs(mu, &f, g, Mode::Canonical)?
                .into_iter()
                .next()
                .ok_or_else(|| CliError::Usage("trivial factor group".into()))?;
            pairs.push(p);
        }
        let pair = product_duadic(&pairs[0], &pairs[1])?;
        let mu = pair.mu().clone();
        (pair, mu, Vec::new())
    } else {
        let group = args.group.build()?;
        let mu = args.mu.resolve(&args.group, args.q)?;
        let mode = if args.enumerate_all { Mode::EnumerateAll } else { Mode::Canonical };
        let mut pairs = construct_pairs(&mu, &f, &group, mode)?;
        if pairs.is_empty() {
            return Err(CliError::Usage("the trivial group has no duadic codes".into()));
        }
        let alternatives = pairs.iter().skip(1).map(terms).collect();
        (pairs.swap_remove(0), mu, alternatives)
    };
    let existence = existence(&mu, &f, pair.group())?;
    let splitting = if args.product {
        format!("{} (product)", mu.name())
    } else {
        mu.name().to_string()
    };
    if let Some(dir) = &args.emit {
        emit_matrices(dir, &pair)?;
    }
    let mut report = pair_report(pair, alternatives, existence, splitting, &args.options)?;
    if args.options.timing {
        report.timing = Some(Timing {
            total_us: start.elapsed().as_micros() as u64,
        });
    }
    Ok(report)
}

fn write_matrix(path: &Path, m: &Matrix, q: u64) -> Result<()> {
    let mut text = format!("{} {} {}\n", m.rows(), m.cols(), q);
    for row in m.row_iter() {
        let cells: Vec<String> = row.iter().map(|a| a.index().to_string()).collect();
        text.push_str(&cells.join(" "));
        text.push('\n');
    }
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

/// Writes generator matrices of the four duadic codes and both stabilizer
/// matrices, one file each: `rows cols q`, then rows of element indices.
pub fn emit_matrices(dir: &Path, pair: &DuadicPair) -> Result<()> {
    fs::create_dir_all(dir).map_err(|source| CliError::Io {
        path: dir.display().to_string(),
        source,
    })?;
    let c = duadic_codes(pair)?;
    let css = css_build(&c.c_e, &c.d_e)?;
    let q = pair.field().order();
    for (name, m) in [
        ("c_e", c.c_e.generator()),
        ("c_f", c.c_f.generator()),
        ("d_e", c.d_e.generator()),
        ("d_f", c.d_f.generator()),
        ("x_stabilizers", css.x_stabilizers()),
        ("z_stabilizers", css.z_stabilizers()),
    ] {
        write_matrix(&dir.join(format!("{name}.txt")), m, q)?;
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `Z_n`, n odd.
    Cyclic,
    /// `Z_p x Z_p`, p an odd prime.
    PrimeSquare,
}

/// `a..b` (inclusive), a comma list, or a single number. `a..b` with `a > b`
/// is empty.
pub fn parse_list(s: &str) -> Result<Vec<u64>> {
    let s = s.trim();
    let num = |t: &str| {
        t.trim()
            .parse::<u64>()
            .map_err(|_| CliError::Usage(format!("bad range {s:?}: {t:?} is not a number")))
    };
    if let Some((a, b)) = s.split_once("..") {
        let b = b.strip_prefix('=').unwrap_or(b);
        return Ok((num(a)?..=num(b)?).collect());
    }
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(num).collect()
}

#[derive(Debug, Clone)]
pub struct ScanArgs {
    pub ns: Vec<u64>,
    pub qs: Vec<u64>,
    pub family: Family,
    pub mu: MuSpec,
    pub options: Options,
}

/// The `(group orders, q)` cells of a scan in input order; sizes that do not
/// fit the family or share a factor with `q` are skipped.
pub fn scan_cells(ns: &[u64], qs: &[u64], family: Family) -> Vec<(Vec<u32>, u64)> {
    let mut out = Vec::new();
    for &n in ns {
        let shape = match family {
            Family::Cyclic if n >= 3 && n % 2 == 1 => vec![n as u32],
            Family::PrimeSquare if n >= 3 && is_prime(n) && n * n <= 512 => vec![n as u32, n as u32],
            _ => continue,
        };
        for &q in qs {
            if gcd(n, q) == 1 {
                out.push((shape.clone(), q));
            }
        }
    }
    out
}

fn scan_cell(shape: &[u32], q: u64, mu_spec: &MuSpec, opts: &Options) -> Result<CodeReport> {
    let start = Instant::now();
    let f = field(q)?;
    let group = Group::abelian(shape)?;
    let mu = mu_spec.on_group(&group, q)?;
    let existence = existence(&mu, &f, &group)?;
    let mut report = if existence.splits {
        let pair = construct_pairs(&mu, &f, &group, Mode::Canonical)?.remove(0);
        let inner = Options {
            exec: Exec::Sequential,
            degeneracy: false,
            ..*opts
        };
        pair_report(pair, Vec::new(), existence, mu.name().to_string(), &inner)?
    } else {
        bare_report(&group, q, mu.name().to_string(), existence)
    };
    if opts.timing {
        report.timing = Some(Timing {
            total_us: start.elapsed().as_micros() as u64,
        });
    }
    Ok(report)
}

/// One report per cell, in input order. Cells run in parallel under
/// [`Exec::Parallel`].
pub fn cmd_scan(args: &ScanArgs) -> Result<Vec<CodeReport>> {
    let cells = scan_cells(&args.ns, &args.qs, args.family);
    args.options
        .exec
        .map_collect(&cells, |(shape, q)| scan_cell(shape, *q, &args.mu, &args.options))
        .into_iter()
        .collect()
}

pub fn reports_json(reports: &[CodeReport]) -> String {
    serde_json::to_string_pretty(reports).expect("reports serialize")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_list("3..7").unwrap(), vec![3, 4, 5, 6, 7]);
        assert_eq!(parse_list("3..=5").unwrap(), vec![3, 4, 5]);
        assert_eq!(parse_list("9,7").unwrap(), vec![9, 7]);
        assert!(parse_list("5..3").unwrap().is_empty());
        assert!(parse_list("").unwrap().is_empty());
        assert!(parse_list("3..x").is_err());
    }

    #[test]
    fn cells_skip_unsuitable_sizes() {
        assert_eq!(
            scan_cells(&[3, 4, 5, 9], &[2, 3], Family::Cyclic),
            vec![(vec![3], 2), (vec![5], 2), (vec![5], 3), (vec![9], 2)]
        );
        assert_eq!(
            scan_cells(&[3, 5, 9], &[2], Family::PrimeSquare),
            vec![(vec![3, 3], 2), (vec![5, 5], 2)]
        );
    }

    #[test]
    fn nine_over_two_does_not_split() {
        let args = ConstructArgs {
            group: "9".parse().unwrap(),
            q: 2,
            mu: MuSpec::MinusOne,
            product: false,
            enumerate_all: false,
            emit: None,
            options: Options::default(),
        };
        let err = cmd_construct(&args).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        assert!(err.to_string().contains("ord_9(2)=6 even"), "{err}");
    }

    #[test]
    fn steane_report() {
        let args = ConstructArgs {
            group: "7".parse().unwrap(),
            q: 2,
            mu: MuSpec::MinusOne,
            product: false,
            enumerate_all: false,
            emit: None,
            options: Options::default(),
        };
        let r = cmd_construct(&args).unwrap();
        assert_eq!(r.quantum.as_ref().unwrap().parameters, "[[7,1,3]]_2");
        assert_eq!(r.existence.agreement, Some(true));
        assert!(!r.degeneracy.as_ref().unwrap().degenerate);
        assert_eq!(r.dimensions.unwrap().c_e, 3);
    }
}
