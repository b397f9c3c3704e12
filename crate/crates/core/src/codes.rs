//! Linear codes over `F_q` as row spaces, their duals, and exhaustive weight
//! computations.
//!
//! Coordinates are group element ids. Enumerations walk message vectors in
//! q-ary Gray code order, so each step adds a single generator row, and split
//! the index range into chunks that [`Exec`] may run in parallel. Minima keep
//! the first witness in index order, so results never depend on the schedule.

use std::fmt;

use crate::algebra::{apply_antiauto, AlgebraElement};
use crate::duadic::{DuadicCodes, Side};
use crate::exec::Exec;
use crate::gf::linalg::Matrix;
use crate::gf::{Fe, FiniteField};
use crate::groups::builtin_mu_minus1;
use crate::{Error, Result};

/// Default limit on the number of words an enumeration may visit.
pub const DEFAULT_ENUM_CAP: u128 = 1 << 24;

const CHUNKS: u128 = 256;

#[derive(Clone)]
pub struct LinearCode {
    field: FiniteField,
    length: usize,
    generator: Matrix,
    pivots: Vec<usize>,
    provenance: Option<AlgebraElement>,
}

impl LinearCode {
    /// Row space of the given vectors.
    pub fn from_generators(field: &FiniteField, length: usize, rows: Vec<Vec<Fe>>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != length) {
            return Err(Error::LengthMismatch(bad.len(), length));
        }
        let (generator, pivots) = Matrix::from_rows(field, length, rows).rref();
        Ok(LinearCode {
            field: field.clone(),
            length,
            generator,
            pivots,
            provenance: None,
        })
    }

    fn from_matrix(m: &Matrix) -> Self {
        let (generator, pivots) = m.rref();
        LinearCode {
            field: m.field().clone(),
            length: m.cols(),
            generator,
            pivots,
            provenance: None,
        }
    }

    pub fn zero(field: &FiniteField, length: usize) -> Self {
        Self::from_matrix(&Matrix::zeros(field, 0, length))
    }

    pub fn full(field: &FiniteField, length: usize) -> Self {
        Self::from_matrix(&Matrix::identity(field, length))
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn dimension(&self) -> usize {
        self.generator.rows()
    }

    /// Generator matrix in reduced row-echelon form.
    pub fn generator(&self) -> &Matrix {
        &self.generator
    }

    /// The idempotent (or other algebra element) the code was generated from.
    pub fn provenance(&self) -> Option<&AlgebraElement> {
        self.provenance.as_ref()
    }

    /// Number of codewords, or `None` if it does not fit in a `u128`.
    pub fn size(&self) -> Option<u128> {
        (self.field.order() as u128).checked_pow(self.dimension() as u32)
    }

    pub fn contains(&self, word: &[Fe]) -> bool {
        word.len() == self.length && self.generator.rref_contains(&self.pivots, word)
    }

    /// Encodes the message whose base-`q` digits (least significant first) are given by `index`.
    pub fn codeword(&self, mut index: u128) -> Vec<Fe> {
        let q = self.field.order() as u128;
        let mut word = vec![Fe::ZERO; self.length];
        for row in self.generator.row_iter() {
            let digit = Fe((index % q) as u32);
            index /= q;
            if !digit.is_zero() {
                add_scaled(&self.field, &mut word, row, digit);
            }
        }
        word
    }

    fn same_space(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.length != other.length {
            return Err(Error::LengthMismatch(self.length, other.length));
        }
        Ok(())
    }
}

/// Codes compare by their canonical generator matrices; provenance is ignored.
impl PartialEq for LinearCode {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.length == other.length && self.generator == other.generator
    }
}

impl Eq for LinearCode {}

impl fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]_{}", self.length, self.dimension(), self.field.order())
    }
}

/// Span of `{ g e : g in G }`.
pub fn code_from_ideal(e: &AlgebraElement) -> LinearCode {
    let rows = e.group().elements().map(|g| e.left_translate(g).coeffs().to_vec()).collect();
    let mut code = LinearCode::from_matrix(&Matrix::from_rows(e.field(), e.group().order(), rows));
    code.provenance = Some(e.clone());
    code
}

/// Euclidean dual. When the code comes from a central idempotent `e`, also
/// checks `C^perp = R(1 - mu_-1(e))` and records that generator.
pub fn dual(code: &LinearCode) -> Result<LinearCode> {
    let mut out = LinearCode::from_matrix(&code.generator.nullspace());
    if let Some(e) = code.provenance.as_ref().filter(|e| e.is_idempotent() && e.is_central()) {
        let one = AlgebraElement::one(e.field(), e.group());
        let image = apply_antiauto(&builtin_mu_minus1(e.group()), e)?;
        let generator = &one - &image;
        let expected = code_from_ideal(&generator);
        if expected != out {
            return Err(Error::Internal(
                "dual of an idempotent-generated code differs from R(1 - mu_-1(e))".into(),
            ));
        }
        out.provenance = Some(generator);
    }
    Ok(out)
}

/// Whether `c` is contained in `d`.
pub fn subcode_check(c: &LinearCode, d: &LinearCode) -> Result<bool> {
    c.same_space(d)?;
    Ok(c.generator.row_iter().all(|row| d.contains(row)))
}

/// A minimum-weight word found by enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinWeight {
    pub weight: usize,
    pub witness: Vec<Fe>,
}

pub fn min_weight_exhaustive(code: &LinearCode, cap: u128) -> Result<MinWeight> {
    min_weight_exhaustive_with(code, cap, Exec::default())
}

/// Minimum weight over the nonzero codewords.
pub fn min_weight_exhaustive_with(code: &LinearCode, cap: u128, exec: Exec) -> Result<MinWeight> {
    if code.dimension() == 0 {
        return Err(Error::ZeroCode);
    }
    let total = checked_total(code, 1, cap)?;
    let offset = vec![Fe::ZERO; code.length];
    min_over_range(code, &offset, 1, total, exec).ok_or_else(|| Error::Internal("no nonzero codeword".into()))
}

/// Counts `A_w` of codewords of each weight `w = 0..=n`.
pub fn weight_distribution(code: &LinearCode, cap: u128) -> Result<Vec<u128>> {
    weight_distribution_with(code, cap, Exec::default())
}

pub fn weight_distribution_with(code: &LinearCode, cap: u128, exec: Exec) -> Result<Vec<u128>> {
    let total = checked_total(code, 1, cap)?;
    let n = code.length;
    let offset = vec![Fe::ZERO; n];
    let chunks = chunk_bounds(0, total);
    Ok(exec.map_reduce(
        chunks.len(),
        vec![0u128; n + 1],
        |i| {
            let (lo, hi) = chunks[i];
            let mut counts = vec![0u128; n + 1];
            scan(code, &offset, lo, hi, |_, w| counts[weight(w)] += 1);
            counts
        },
        |mut a, b| {
            a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
            a
        },
    ))
}

/// Minimum weight of `big \ small`, with `small` a subcode of `big`.
pub fn min_weight_difference(big: &LinearCode, small: &LinearCode, cap: u128) -> Result<MinWeight> {
    min_weight_difference_with(big, small, cap, Exec::default())
}

pub fn min_weight_difference_with(
    big: &LinearCode,
    small: &LinearCode,
    cap: u128,
    exec: Exec,
) -> Result<MinWeight> {
    if !subcode_check(small, big)? {
        return Err(Error::NotSubcode);
    }
    let complement = complement_basis(small, big);
    min_weight_coset_union(small, &complement, cap, exec)
}

/// Minimum weight of an odd-like word of the odd-like code on the given side,
/// enumerated as `c + G^` with `c` in the even-like code (multiples of
/// these have the same weights).
pub fn odd_like_min_weight(codes: &DuadicCodes, side: Side, cap: u128) -> Result<MinWeight> {
    odd_like_min_weight_with(codes, side, cap, Exec::default())
}

pub fn odd_like_min_weight_with(codes: &DuadicCodes, side: Side, cap: u128, exec: Exec) -> Result<MinWeight> {
    let (even, _) = codes.side(side);
    let hat = codes.pair().hat();
    min_weight_coset_union(even, &[hat.coeffs().to_vec()], cap, exec)
}

/// Minimum weight over `{ c + t : c in small, t in span(complement), t != 0 }`.
/// The complement rows must be independent modulo `small`. Scaling preserves
/// weight and `small`, so only offsets whose last nonzero coefficient is one
/// are enumerated.
fn min_weight_coset_union(
    small: &LinearCode,
    complement: &[Vec<Fe>],
    cap: u128,
    exec: Exec,
) -> Result<MinWeight> {
    if complement.is_empty() {
        return Err(Error::ZeroCode);
    }
    let field = &small.field;
    let q = field.order() as u128;
    let offsets = q
        .checked_pow(complement.len() as u32)
        .map(|t| t - 1)
        .ok_or(Error::CapExceeded { needed: u128::MAX, cap })?;
    let per_offset = checked_total(small, offsets / (q - 1), cap)?;
    let mut best: Option<MinWeight> = None;
    for t in 1..=offsets {
        let digits: Vec<u32> = (0..complement.len())
            .map(|i| (t / q.pow(i as u32) % q) as u32)
            .collect();
        let lead = *digits.iter().rev().find(|&&d| d != 0).expect("t is nonzero");
        if Fe(lead) != field.one() {
            continue;
        }
        let mut offset = vec![field.zero(); small.length];
        for (row, &d) in complement.iter().zip(&digits) {
            add_scaled(field, &mut offset, row, Fe(d));
        }
        if let Some(found) = min_over_range(small, &offset, 0, per_offset, exec) {
            if best.as_ref().map_or(true, |b| found.weight < b.weight) {
                best = Some(found);
            }
        }
    }
    best.ok_or_else(|| Error::Internal("empty coset union".into()))
}

/// Rows of `big` extending a basis of `small` to one of `big`.
fn complement_basis(small: &LinearCode, big: &LinearCode) -> Vec<Vec<Fe>> {
    let mut span = small.generator.clone();
    let mut out = Vec::new();
    for row in big.generator.row_iter() {
        let (red, pivots) = span.rref();
        if !red.rref_contains(&pivots, row) {
            out.push(row.to_vec());
            span = span.vstack(&Matrix::from_rows(&small.field, small.length, vec![row.to_vec()]));
        }
    }
    out
}

fn checked_total(code: &LinearCode, multiplier: u128, cap: u128) -> Result<u128> {
    let needed = code
        .size()
        .and_then(|s| s.checked_mul(multiplier))
        .unwrap_or(u128::MAX);
    if needed > cap {
        return Err(Error::CapExceeded { needed, cap });
    }
    Ok(code.size().expect("within cap"))
}

fn chunk_bounds(start: u128, end: u128) -> Vec<(u128, u128)> {
    let len = end.saturating_sub(start);
    let chunks = len.clamp(1, CHUNKS);
    (0..chunks)
        .map(|i| (start + len * i / chunks, start + len * (i + 1) / chunks))
        .filter(|(lo, hi)| lo < hi)
        .collect()
}

fn min_over_range(code: &LinearCode, offset: &[Fe], start: u128, end: u128, exec: Exec) -> Option<MinWeight> {
    let chunks = chunk_bounds(start, end);
    exec.map_reduce(
        chunks.len(),
        None,
        |i| {
            let (lo, hi) = chunks[i];
            let mut best: Option<(usize, u128)> = None;
            scan(code, offset, lo, hi, |idx, w| {
                let wt = weight(w);
                if best.map_or(true, |(b, _)| wt < b) {
                    best = Some((wt, idx));
                }
            });
            best
        },
        |a: Option<(usize, u128)>, b| match (a, b) {
            (Some(x), Some(y)) => Some(if y.0 < x.0 { y } else { x }),
            (x, None) => x,
            (None, y) => y,
        },
    )
    .map(|(weight, idx)| {
        let mut witness = gray_word(code, idx);
        add_scaled(&code.field, &mut witness, offset, Fe::ONE);
        MinWeight { weight, witness }
    })
}

/// Visits `offset + codeword(gray(s))` for `s` in `start..end`.
fn scan(code: &LinearCode, offset: &[Fe], start: u128, end: u128, mut visit: impl FnMut(u128, &[Fe])) {
    if start >= end {
        return;
    }
    let field = &code.field;
    let q = field.order() as u128;
    let mut gray = gray_digits(code, start);
    let mut word = offset.to_vec();
    for (i, &g) in gray.iter().enumerate() {
        add_scaled(field, &mut word, code.generator.row(i), Fe(g));
    }
    let mut s = start;
    loop {
        visit(s, &word);
        if s + 1 == end {
            break;
        }
        // Counting s -> s + 1 bumps digit j, the first digit of s below q - 1;
        // in Gray coordinates only digit j changes, by +1 mod q.
        let mut j = 0;
        let mut rest = s;
        while rest % q == q - 1 {
            rest /= q;
            j += 1;
        }
        let old = gray[j];
        let new = ((old as u128 + 1) % q) as u32;
        add_scaled(field, &mut word, code.generator.row(j), field.sub(Fe(new), Fe(old)));
        gray[j] = new;
        s += 1;
    }
}

/// Gray digits `g_i = d_i - d_(i+1) mod q` of `s`; digit values are packed field indices.
fn gray_digits(code: &LinearCode, s: u128) -> Vec<u32> {
    let q = code.field.order() as u128;
    let k = code.dimension();
    let mut digits = Vec::with_capacity(k + 1);
    let mut rest = s;
    for _ in 0..=k {
        digits.push(rest % q);
        rest /= q;
    }
    (0..k).map(|i| ((digits[i] + q - digits[i + 1]) % q) as u32).collect()
}

fn gray_word(code: &LinearCode, s: u128) -> Vec<Fe> {
    let mut word = vec![Fe::ZERO; code.length];
    for (i, g) in gray_digits(code, s).into_iter().enumerate() {
        add_scaled(&code.field, &mut word, code.generator.row(i), Fe(g));
    }
    word
}

fn add_scaled(field: &FiniteField, word: &mut [Fe], row: &[Fe], c: Fe) {
    if c.is_zero() {
        return;
    }
    for (w, &r) in word.iter_mut().zip(row) {
        *w = field.add(*w, field.mul(c, r));
    }
}

fn weight(word: &[Fe]) -> usize {
    word.iter().filter(|a| !a.is_zero()).count()
}
