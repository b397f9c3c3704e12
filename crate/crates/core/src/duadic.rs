//! Duadic pairs of idempotents, the four duadic codes, and the structural
//! checks around them.
//!
//! A splitting `mu` permutes the centrally primitive idempotents. It yields
//! duadic pairs exactly when no nontrivial idempotent is fixed; the pair is
//! then assembled by taking every other idempotent along each cycle of `mu`.
//! The same question is answered on `F_q`-conjugacy classes, and the two
//! answers are always reported side by side.

use crate::algebra::{apply_antiauto, group_hat, split_primitive_central_idempotents, AlgebraElement, IdempotentSet};
use crate::codes::{code_from_ideal, dual, subcode_check, LinearCode};
use crate::gf::{gcd, multiplicative_order_mod, FiniteField};
use crate::groups::{builtin_mu_minus1, fq_classes, mu_class_permutation, product_antiauto, Antiautomorphism, Group};
use crate::{Error, Result};

/// Largest number of free pairing choices enumerated in [`Mode::EnumerateAll`].
pub const MAX_ENUMERATED_CHOICES: usize = 20;

/// Number-theoretic existence test for `mu_-1` on a group of order `n`: `ord_n(q)` odd.
pub fn splitting_exists_mu_minus1(n: u64, q: u64) -> Result<bool> {
    if n % 2 == 0 {
        return Err(Error::EvenOrder(n as usize));
    }
    Ok(multiplicative_order_mod(q, n)? % 2 == 1)
}

/// Outcome of testing whether `mu` splits `F_q[G]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplittingCheck {
    /// Pairs can be formed: idempotent-level test passed and no odd cycles.
    pub splits: bool,
    /// No nontrivial centrally primitive idempotent is fixed by `mu`.
    pub idempotent_level: bool,
    /// No nontrivial `F_q`-conjugacy class is fixed by the induced class map.
    pub class_level: bool,
    /// Indices (into the idempotent set) of fixed nontrivial idempotents.
    pub fixed_idempotents: Vec<usize>,
    /// Representatives of fixed nontrivial classes.
    pub fixed_classes: Vec<u32>,
    /// Cycles of odd length at least three of `mu` on the idempotents; these
    /// cannot be split into `e` and `mu(e)` parts.
    pub odd_cycles: Vec<Vec<usize>>,
}

impl SplittingCheck {
    pub fn levels_agree(&self) -> bool {
        self.idempotent_level == self.class_level
    }

    pub fn diagnostics(&self) -> String {
        if self.splits {
            return "splits".into();
        }
        let mut parts = Vec::new();
        if !self.fixed_classes.is_empty() {
            parts.push(format!(
                "fixes {} nontrivial classes (representatives {:?})",
                self.fixed_classes.len(),
                self.fixed_classes
            ));
        }
        if !self.fixed_idempotents.is_empty() {
            parts.push(format!("fixes {} nontrivial idempotents", self.fixed_idempotents.len()));
        }
        if !self.odd_cycles.is_empty() {
            parts.push(format!("has {} odd cycles on idempotents", self.odd_cycles.len()));
        }
        parts.join("; ")
    }
}

/// Idempotents, classes and the action of `mu` on both.
struct Action {
    set: IdempotentSet,
    idempotent_perm: Vec<usize>,
    class_perm: Vec<usize>,
    class_reps: Vec<u32>,
    trivial_class: usize,
}

fn analyze(mu: &Antiautomorphism, field: &FiniteField, group: &Group) -> Result<Action> {
    if mu.group() != group {
        return Err(Error::GroupMismatch);
    }
    let set = split_primitive_central_idempotents(field, group)?;
    analyze_with(mu, field, group, set)
}

fn analyze_with(mu: &Antiautomorphism, field: &FiniteField, group: &Group, set: IdempotentSet) -> Result<Action> {
    let idempotent_perm = set
        .idempotents()
        .iter()
        .map(|e| {
            set.position(&apply_antiauto(mu, e)?)
                .ok_or_else(|| Error::Internal("mu maps a primitive idempotent outside the set".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let classes = fq_classes(group, field.order())?;
    let class_perm = mu_class_permutation(mu, &classes)?;
    let class_reps = (0..classes.len()).map(|c| classes.representative(c)).collect();
    Ok(Action {
        trivial_class: classes.class_of(group.identity()),
        set,
        idempotent_perm,
        class_perm,
        class_reps,
    })
}

impl Action {
    /// Cycles of the idempotent permutation, skipping the trivial idempotent.
    fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.idempotent_perm.len()];
        seen[self.set.trivial_index()] = true;
        let mut out = Vec::new();
        for start in 0..seen.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut cur = self.idempotent_perm[start];
            while cur != start {
                seen[cur] = true;
                cycle.push(cur);
                cur = self.idempotent_perm[cur];
            }
            out.push(cycle);
        }
        out
    }

    fn check(&self) -> SplittingCheck {
        let trivial = self.set.trivial_index();
        let fixed_idempotents: Vec<usize> = (0..self.idempotent_perm.len())
            .filter(|&i| i != trivial && self.idempotent_perm[i] == i)
            .collect();
        let fixed_classes: Vec<u32> = (0..self.class_perm.len())
            .filter(|&c| c != self.trivial_class && self.class_perm[c] == c)
            .map(|c| self.class_reps[c])
            .collect();
        let odd_cycles: Vec<Vec<usize>> = self
            .cycles()
            .into_iter()
            .filter(|c| c.len() >= 3 && c.len() % 2 == 1)
            .collect();
        let idempotent_level = fixed_idempotents.is_empty();
        SplittingCheck {
            splits: idempotent_level && odd_cycles.is_empty(),
            idempotent_level,
            class_level: fixed_classes.is_empty(),
            fixed_idempotents,
            fixed_classes,
            odd_cycles,
        }
    }
}

pub fn check_splitting(mu: &Antiautomorphism, field: &FiniteField, group: &Group) -> Result<SplittingCheck> {
    Ok(analyze(mu, field, group)?.check())
}

/// Numbers of `F_q`-conjugacy classes and of centrally primitive idempotents
/// fixed by `mu`, trivial ones included. The two always coincide.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FixedCounts {
    pub fixed_classes: usize,
    pub fixed_idempotents: usize,
}

impl FixedCounts {
    pub fn equal(&self) -> bool {
        self.fixed_classes == self.fixed_idempotents
    }
}

pub fn verify_key_proposition(mu: &Antiautomorphism, field: &FiniteField, group: &Group) -> Result<FixedCounts> {
    let action = analyze(mu, field, group)?;
    let count = |perm: &[usize]| perm.iter().enumerate().filter(|(i, &j)| *i == j).count();
    Ok(FixedCounts {
        fixed_classes: count(&action.class_perm),
        fixed_idempotents: count(&action.idempotent_perm),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// One pair: along each cycle, the alternating half with the smaller
    /// support; the result is oriented so that `e` has the smaller support.
    Canonical,
    /// Every pair, up to exchanging `e` and `f`.
    EnumerateAll,
}

/// Even-like idempotents `e, f` with `e + f = 1 - G^` and `mu(e) = f`, `mu(f) = e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DuadicPair {
    field: FiniteField,
    group: Group,
    e: AlgebraElement,
    f: AlgebraElement,
    mu: Antiautomorphism,
    hat: AlgebraElement,
    fixed_by_mu_minus1: bool,
    swapped_by_mu_minus1: bool,
    constituents: Vec<AlgebraElement>,
}

impl DuadicPair {
    /// Validates the pair axioms and the orthogonality relations.
    pub fn new(
        field: &FiniteField,
        group: &Group,
        e: AlgebraElement,
        f: AlgebraElement,
        mu: &Antiautomorphism,
    ) -> Result<Self> {
        let n = group.order();
        if n % 2 == 0 {
            return Err(Error::EvenOrder(n));
        }
        if mu.group() != group || e.group() != group || f.group() != group {
            return Err(Error::GroupMismatch);
        }
        if e.field() != field || f.field() != field {
            return Err(Error::FieldMismatch);
        }
        let hat = group_hat(field, group)?;
        let one = AlgebraElement::one(field, group);
        let bad = |what: &str| Err(Error::InvalidPair(what.into()));
        if &(&e + &f) + &hat != one {
            return bad("e + f != 1 - G^");
        }
        if apply_antiauto(mu, &e)? != f || apply_antiauto(mu, &f)? != e {
            return bad("mu does not exchange e and f");
        }
        if !e.is_idempotent() || !f.is_idempotent() {
            return bad("e or f is not idempotent");
        }
        if !e.is_even_like() || !f.is_even_like() {
            return bad("e or f is not even-like");
        }
        let zero = AlgebraElement::zero(field, group);
        if &e * &f != zero || &f * &e != zero || &e * &hat != zero || &f * &hat != zero {
            return bad("e, f, G^ are not pairwise orthogonal");
        }
        let mu_minus1 = builtin_mu_minus1(group);
        let image = apply_antiauto(&mu_minus1, &e)?;
        Ok(DuadicPair {
            field: field.clone(),
            group: group.clone(),
            fixed_by_mu_minus1: image == e,
            swapped_by_mu_minus1: image == f,
            e,
            f,
            mu: mu.clone(),
            hat,
            constituents: Vec::new(),
        })
    }

    /// Attaches idempotents known to satisfy `h e = h` (used for degeneracy witnesses).
    pub fn with_constituents(mut self, constituents: Vec<AlgebraElement>) -> Self {
        self.constituents = constituents;
        self
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn e(&self) -> &AlgebraElement {
        &self.e
    }

    pub fn f(&self) -> &AlgebraElement {
        &self.f
    }

    pub fn mu(&self) -> &Antiautomorphism {
        &self.mu
    }

    pub fn hat(&self) -> &AlgebraElement {
        &self.hat
    }

    pub fn n(&self) -> usize {
        self.group.order()
    }

    pub fn fixed_by_mu_minus1(&self) -> bool {
        self.fixed_by_mu_minus1
    }

    pub fn swapped_by_mu_minus1(&self) -> bool {
        self.swapped_by_mu_minus1
    }

    pub fn constituents(&self) -> &[AlgebraElement] {
        &self.constituents
    }

    /// The pair with `e` and `f` exchanged.
    pub fn swapped(&self) -> Self {
        let mut out = self.clone();
        std::mem::swap(&mut out.e, &mut out.f);
        out.constituents = self
            .constituents
            .iter()
            .map(|h| apply_antiauto(&self.mu, h).expect("same group"))
            .collect();
        out
    }
}

pub fn construct_pairs(
    mu: &Antiautomorphism,
    field: &FiniteField,
    group: &Group,
    mode: Mode,
) -> Result<Vec<DuadicPair>> {
    let n = group.order();
    if n % 2 == 0 {
        return Err(Error::EvenOrder(n));
    }
    if mu.group() != group {
        return Err(Error::GroupMismatch);
    }
    if n == 1 {
        return Ok(Vec::new());
    }
    let action = analyze(mu, field, group)?;
    let check = action.check();
    if !check.splits {
        return Err(Error::NoSplitting(no_splitting_message(mu, field, group, &check)));
    }
    let idempotents = action.set.idempotents();
    let sum = |idx: &[usize]| {
        idx.iter()
            .fold(AlgebraElement::zero(field, group), |acc, &i| &acc + &idempotents[i])
    };
    // Each cycle h_0 -> h_1 -> ... has two alternating halves; list the
    // canonical half first.
    let halves: Vec<[Vec<usize>; 2]> = action
        .cycles()
        .into_iter()
        .map(|cycle| {
            let even: Vec<usize> = cycle.iter().step_by(2).copied().collect();
            let odd: Vec<usize> = cycle.iter().skip(1).step_by(2).copied().collect();
            if sum(&odd).support_key() < sum(&even).support_key() {
                [odd, even]
            } else {
                [even, odd]
            }
        })
        .collect();
    let free = halves.len().saturating_sub(1);
    let choices: u64 = match mode {
        Mode::Canonical => 1,
        Mode::EnumerateAll if free > MAX_ENUMERATED_CHOICES => {
            return Err(Error::CapExceeded {
                needed: 1u128 << free.min(127),
                cap: 1 << MAX_ENUMERATED_CHOICES,
            })
        }
        Mode::EnumerateAll => 1 << free,
    };
    (0..choices)
        .map(|mask| {
            // The first cycle keeps its canonical half, which removes the e <-> f duplicate.
            let chosen: Vec<usize> = halves
                .iter()
                .enumerate()
                .flat_map(|(i, h)| {
                    let pick = if i == 0 { 0 } else { ((mask >> (i - 1)) & 1) as usize };
                    h[pick].iter().copied()
                })
                .collect();
            let e = sum(&chosen);
            let f = apply_antiauto(mu, &e)?;
            let constituents = chosen.iter().map(|&i| idempotents[i].clone()).collect();
            let pair = DuadicPair::new(field, group, e, f, mu)?.with_constituents(constituents);
            // Orient so that e has the smaller support.
            Ok(if pair.f.support_key() < pair.e.support_key() {
                pair.swapped()
            } else {
                pair
            })
        })
        .collect()
}

fn no_splitting_message(mu: &Antiautomorphism, field: &FiniteField, group: &Group, check: &SplittingCheck) -> String {
    let (n, q) = (group.order() as u64, field.order());
    if mu.is_mu_minus1() && gcd(n, q) == 1 {
        if let Ok(ord) = multiplicative_order_mod(q, n) {
            if ord % 2 == 0 {
                return format!("ord_{n}({q})={ord} even; {}", check.diagnostics());
            }
        }
    }
    check.diagnostics()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    E,
    F,
}

/// `C_e = Re`, `C_f = Rf`, `D_e = R(1 - f)`, `D_f = R(1 - e)`.
#[derive(Debug, Clone)]
pub struct DuadicCodes {
    pair: DuadicPair,
    pub c_e: LinearCode,
    pub c_f: LinearCode,
    pub d_e: LinearCode,
    pub d_f: LinearCode,
}

impl DuadicCodes {
    pub fn pair(&self) -> &DuadicPair {
        &self.pair
    }

    /// The even-like code and the odd-like code containing it.
    pub fn side(&self, side: Side) -> (&LinearCode, &LinearCode) {
        match side {
            Side::E => (&self.c_e, &self.d_e),
            Side::F => (&self.c_f, &self.d_f),
        }
    }
}

/// Builds the four codes and checks dimensions, inclusions and `D_e = RG^ (+) C_e`.
pub fn duadic_codes(pair: &DuadicPair) -> Result<DuadicCodes> {
    let one = AlgebraElement::one(&pair.field, &pair.group);
    let codes = DuadicCodes {
        c_e: code_from_ideal(&pair.e),
        c_f: code_from_ideal(&pair.f),
        d_e: code_from_ideal(&(&one - &pair.f)),
        d_f: code_from_ideal(&(&one - &pair.e)),
        pair: pair.clone(),
    };
    let n = pair.n();
    let fail = |what: String| Err(Error::Internal(what));
    for (name, code, want) in [
        ("C_e", &codes.c_e, (n - 1) / 2),
        ("C_f", &codes.c_f, (n - 1) / 2),
        ("D_e", &codes.d_e, (n + 1) / 2),
        ("D_f", &codes.d_f, (n + 1) / 2),
    ] {
        if code.dimension() != want {
            return fail(format!("dim {name} = {}, expected {want}", code.dimension()));
        }
    }
    for (side, (c, d)) in [("e", (&codes.c_e, &codes.d_e)), ("f", (&codes.c_f, &codes.d_f))] {
        if !subcode_check(c, d)? {
            return fail(format!("C_{side} is not contained in D_{side}"));
        }
        if c.contains(pair.hat.coeffs()) || !d.contains(pair.hat.coeffs()) {
            return fail(format!("D_{side} is not G^ (+) C_{side}"));
        }
    }
    Ok(codes)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DualityCase {
    /// `mu_-1(e) = f`: `C_e^perp = D_e`, `C_f^perp = D_f`.
    Swapped,
    /// `mu_-1(e) = e`: `C_e^perp = D_f`, `C_f^perp = D_e`.
    Fixed,
    /// `mu_-1(e)` is neither `e` nor `f`; no duality statement applies.
    Mixed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DualityReport {
    pub case: DualityCase,
    /// The row-space equalities of the case hold (vacuously true for `Mixed`).
    pub verified: bool,
}

pub fn classify_duality(pair: &DuadicPair, codes: &DuadicCodes) -> Result<DualityReport> {
    let (case, targets) = if pair.swapped_by_mu_minus1 {
        (DualityCase::Swapped, Some((&codes.d_e, &codes.d_f)))
    } else if pair.fixed_by_mu_minus1 {
        (DualityCase::Fixed, Some((&codes.d_f, &codes.d_e)))
    } else {
        (DualityCase::Mixed, None)
    };
    let verified = match targets {
        None => true,
        Some((for_e, for_f)) => &dual(&codes.c_e)? == for_e && &dual(&codes.c_f)? == for_f,
    };
    Ok(DualityReport { case, verified })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    /// `d^2 >= n`, valid for any splitting.
    Square,
    /// `d^2 - d + 1 >= n`, valid when `mu_-1` exchanges `e` and `f`.
    SquareShift,
}

impl BoundKind {
    pub fn holds(self, d: usize, n: usize) -> bool {
        match self {
            BoundKind::Square => d * d >= n,
            BoundKind::SquareShift => d * d - d + 1 >= n,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OddLikeBound {
    pub kind: BoundKind,
    pub d_min: usize,
}

/// Lower bound on the minimum odd-like weight of the odd-like codes.
pub fn odd_like_bound(pair: &DuadicPair) -> OddLikeBound {
    let kind = if pair.mu.is_mu_minus1() || pair.swapped_by_mu_minus1 {
        BoundKind::SquareShift
    } else {
        BoundKind::Square
    };
    let n = pair.n();
    let d_min = (1..=n).find(|&d| kind.holds(d, n)).unwrap_or(1);
    OddLikeBound { kind, d_min }
}

/// The pair on `G1 x G2` with `e = e1 + e2 - e1 e2 - f1 e2`,
/// `f = f1 + f2 - f1 f2 - e1 f2` and splitting `mu1 x mu2`.
pub fn product_duadic(p1: &DuadicPair, p2: &DuadicPair) -> Result<DuadicPair> {
    if p1.field != p2.field {
        return Err(Error::FieldMismatch);
    }
    let field = &p1.field;
    let group = Group::direct_product(&p1.group, &p2.group)?;
    let left = |a: &AlgebraElement| a.embed_left(&group);
    let right = |a: &AlgebraElement| a.embed_right(&group);
    let (e1, f1) = (left(&p1.e)?, left(&p1.f)?);
    let (e2, f2) = (right(&p2.e)?, right(&p2.f)?);
    let e = &(&(&e1 + &e2) - &(&e1 * &e2)) - &(&f1 * &e2);
    let f = &(&(&f1 + &f2) - &(&f1 * &f2)) - &(&e1 * &f2);
    let mu = product_antiauto(&p1.mu, &p2.mu)?;
    let mut constituents = vec![e1.clone(), e2.clone()];
    for h in &p1.constituents {
        constituents.push(left(h)?);
    }
    for h in &p2.constituents {
        constituents.push(right(h)?);
    }
    let pair = DuadicPair::new(field, &group, e, f, &mu)?;
    let filtered = constituents.into_iter().filter(|h| h * &pair.e == *h).collect();
    Ok(pair.with_constituents(filtered))
}
