//! Finite groups given by a full multiplication table, their ordinary and
//! `F_q`-conjugacy classes, and antiautomorphisms `mu(alpha g) = sigma(alpha) mu_*(g)`.
//!
//! Element ids run over `0..n` with `0` the identity. Groups built with
//! [`Group::abelian`] use a little-endian mixed-radix encoding of exponent
//! tuples: in `Z3 x Z3`, the element `a^x b^y` has id `x + 3y`.

use std::collections::VecDeque;
use std::fmt;
use std::sync::Arc;

use crate::gf::{gcd, inverse_mod, prime_factors};
use crate::{Error, Result};

/// Largest group order accepted (associativity is checked exhaustively).
pub const MAX_GROUP_ORDER: usize = 512;

struct GroupInner {
    order: usize,
    table: Vec<u32>,
    inverse: Vec<u32>,
    element_orders: Vec<u32>,
    exponent: u64,
    abelian: bool,
    /// Cyclic factor orders when the group was built as a product of cyclic groups.
    shape: Option<Vec<u32>>,
    descriptor: String,
}

/// A finite group with a materialized Cayley table. Cheap to clone.
#[derive(Clone)]
pub struct Group(Arc<GroupInner>);

impl Group {
    /// `Z_{n1} x ... x Z_{nk}`.
    pub fn abelian(orders: &[u32]) -> Result<Self> {
        if orders.is_empty() {
            return Err(Error::InvalidGroup("no cyclic factors given".into()));
        }
        if let Some(&bad) = orders.iter().find(|&&o| o < 2) {
            return Err(Error::InvalidGroup(format!("cyclic factor of order {bad}")));
        }
        let n = orders
            .iter()
            .try_fold(1usize, |acc, &o| acc.checked_mul(o as usize))
            .filter(|&n| n <= MAX_GROUP_ORDER)
            .ok_or_else(|| {
                Error::GroupTooLarge(orders.iter().fold(1usize, |acc, &o| acc.saturating_mul(o as usize)))
            })?;
        let decode = |mut id: usize| -> Vec<u32> {
            orders
                .iter()
                .map(|&o| {
                    let d = (id % o as usize) as u32;
                    id /= o as usize;
                    d
                })
                .collect()
        };
        let encode = |xs: &[u32]| -> usize {
            xs.iter()
                .zip(orders)
                .rev()
                .fold(0, |acc, (&x, &o)| acc * o as usize + x as usize)
        };
        let tuples: Vec<Vec<u32>> = (0..n).map(decode).collect();
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                let sum: Vec<u32> = tuples[a]
                    .iter()
                    .zip(&tuples[b])
                    .zip(orders)
                    .map(|((x, y), o)| (x + y) % o)
                    .collect();
                table[a * n + b] = encode(&sum) as u32;
            }
        }
        let descriptor = orders
            .iter()
            .map(|o| format!("Z{o}"))
            .collect::<Vec<_>>()
            .join("x");
        Self::build(n, table, Some(orders.to_vec()), descriptor)
    }

    /// The group of order one.
    pub fn trivial() -> Self {
        Self::build(1, vec![0], Some(Vec::new()), "1".into()).expect("trivial group")
    }

    /// Validates an explicit Cayley table (`table[g][h] = g*h`, id 0 the identity).
    pub fn from_cayley(table: &[Vec<u32>]) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidGroup("empty table".into()));
        }
        if n > MAX_GROUP_ORDER {
            return Err(Error::GroupTooLarge(n));
        }
        let mut flat = Vec::with_capacity(n * n);
        for (g, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidGroup(format!(
                    "row {g} has {} entries, expected {n}",
                    row.len()
                )));
            }
            if let Some(&bad) = row.iter().find(|&&x| x as usize >= n) {
                return Err(Error::InvalidGroup(format!(
                    "closure: entry {bad} in row {g} is not an element id"
                )));
            }
            flat.extend_from_slice(row);
        }
        Self::build(n, flat, None, format!("cayley({n})"))
    }

    /// Parses the Cayley text format: the order `n` on the first line, then
    /// `n` rows of `n` whitespace-separated ids.
    pub fn parse_cayley(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty());
        let (first_no, first) = lines.next().ok_or(Error::Parse {
            line: 1,
            column: 1,
            message: "missing group order".into(),
        })?;
        let n: usize = parse_token(first.trim(), first_no + 1, column_of(first, first.trim()))?;
        let mut rows = Vec::with_capacity(n);
        for (line_no, line) in lines {
            if rows.len() == n {
                return Err(Error::Parse {
                    line: line_no + 1,
                    column: 1,
                    message: format!("unexpected row beyond the {n} declared"),
                });
            }
            let mut row = Vec::with_capacity(n);
            for (col, tok) in tokens(line) {
                row.push(parse_token::<u32>(tok, line_no + 1, col)?);
            }
            if row.len() != n {
                return Err(Error::Parse {
                    line: line_no + 1,
                    column: line.len() + 1,
                    message: format!("expected {n} entries, found {}", row.len()),
                });
            }
            rows.push(row);
        }
        if rows.len() != n {
            return Err(Error::Parse {
                line: text.lines().count() + 1,
                column: 1,
                message: format!("expected {n} rows, found {}", rows.len()),
            });
        }
        Self::from_cayley(&rows)
    }

    /// `G1 x G2` with ids `g1 + |G1| * g2`.
    pub fn direct_product(g1: &Group, g2: &Group) -> Result<Self> {
        let (n1, n2) = (g1.order(), g2.order());
        let n = n1 * n2;
        if n > MAX_GROUP_ORDER {
            return Err(Error::GroupTooLarge(n));
        }
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                let x = g1.mul((a % n1) as u32, (b % n1) as u32);
                let y = g2.mul((a / n1) as u32, (b / n1) as u32);
                table[a * n + b] = x + (n1 as u32) * y;
            }
        }
        let shape = match (g1.abelian_shape(), g2.abelian_shape()) {
            (Some(s1), Some(s2)) => Some([s1, s2].concat()),
            _ => None,
        };
        let descriptor = format!("({})x({})", g1.descriptor(), g2.descriptor());
        Self::build(n, table, shape, descriptor)
    }

    fn build(n: usize, table: Vec<u32>, shape: Option<Vec<u32>>, descriptor: String) -> Result<Self> {
        let at = |a: usize, b: usize| table[a * n + b] as usize;
        for g in 0..n {
            if at(0, g) != g || at(g, 0) != g {
                return Err(Error::InvalidGroup(format!(
                    "identity: id 0 is not a two-sided identity (fails at element {g})"
                )));
            }
        }
        let mut inverse = vec![0u32; n];
        for g in 0..n {
            let mut seen_row = vec![false; n];
            let mut seen_col = vec![false; n];
            for h in 0..n {
                if std::mem::replace(&mut seen_row[at(g, h)], true)
                    || std::mem::replace(&mut seen_col[at(h, g)], true)
                {
                    return Err(Error::InvalidGroup(format!(
                        "inverses: element {g} has a repeated product, so it has no unique inverse"
                    )));
                }
            }
            inverse[g] = (0..n)
                .find(|&h| at(g, h) == 0)
                .expect("latin row contains the identity") as u32;
        }
        for a in 0..n {
            for b in 0..n {
                let ab = at(a, b);
                for c in 0..n {
                    if at(ab, c) != at(a, at(b, c)) {
                        return Err(Error::InvalidGroup(format!(
                            "associativity: ({a}*{b})*{c} != {a}*({b}*{c})"
                        )));
                    }
                }
            }
        }
        let element_orders: Vec<u32> = (0..n)
            .map(|g| {
                let mut x = g;
                let mut k = 1;
                while x != 0 {
                    x = at(x, g);
                    k += 1;
                }
                k
            })
            .collect();
        let exponent = element_orders
            .iter()
            .fold(1u64, |acc, &o| acc / gcd(acc, o as u64) * o as u64);
        let abelian = (0..n).all(|a| (0..a).all(|b| at(a, b) == at(b, a)));
        Ok(Group(Arc::new(GroupInner {
            order: n,
            table,
            inverse,
            element_orders,
            exponent,
            abelian,
            shape,
            descriptor,
        })))
    }

    pub fn order(&self) -> usize {
        self.0.order
    }

    pub fn identity(&self) -> u32 {
        0
    }

    pub fn elements(&self) -> std::ops::Range<u32> {
        0..self.0.order as u32
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.0.table[a as usize * self.0.order + b as usize]
    }

    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        self.0.inverse[a as usize]
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        let e = e % self.element_order(a) as u64;
        (0..e).fold(0, |acc, _| self.mul(acc, a))
    }

    /// `h^-1 g h`.
    pub fn conjugate(&self, g: u32, h: u32) -> u32 {
        self.mul(self.mul(self.inv(h), g), h)
    }

    pub fn element_order(&self, a: u32) -> u32 {
        self.0.element_orders[a as usize]
    }

    /// Least common multiple of the element orders.
    pub fn exponent(&self) -> u64 {
        self.0.exponent
    }

    pub fn is_abelian(&self) -> bool {
        self.0.abelian
    }

    pub fn abelian_shape(&self) -> Option<&[u32]> {
        self.0.shape.as_deref()
    }

    pub fn descriptor(&self) -> &str {
        &self.0.descriptor
    }

    /// Exponent tuple of an element of a group built from cyclic factors.
    pub fn exponents(&self, g: u32) -> Option<Vec<u32>> {
        let shape = self.abelian_shape()?;
        let mut id = g;
        Some(
            shape
                .iter()
                .map(|&o| {
                    let d = id % o;
                    id /= o;
                    d
                })
                .collect(),
        )
    }

    pub fn from_exponents(&self, xs: &[u32]) -> Option<u32> {
        let shape = self.abelian_shape()?;
        (xs.len() == shape.len()).then(|| {
            xs.iter()
                .zip(shape)
                .rev()
                .fold(0, |acc, (&x, &o)| acc * o + x % o)
        })
    }

    /// `a^1*b^0` style label for groups with a cyclic decomposition, else the raw id.
    pub fn label(&self, g: u32) -> String {
        match self.exponents(g) {
            Some(xs) if !xs.is_empty() => xs
                .iter()
                .enumerate()
                .map(|(i, x)| format!("{}^{x}", generator_name(i)))
                .collect::<Vec<_>>()
                .join("*"),
            Some(_) => "1".into(),
            None => g.to_string(),
        }
    }

    /// Ordinary conjugacy classes.
    pub fn conjugacy_classes(&self) -> FqClassPartition {
        self.closure_classes(1)
    }

    fn closure_classes(&self, q: u64) -> FqClassPartition {
        let n = self.order();
        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for seed in self.elements() {
            if class_of[seed as usize] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut members = vec![seed];
            class_of[seed as usize] = id;
            let mut queue = VecDeque::from([seed]);
            while let Some(x) = queue.pop_front() {
                let images = self
                    .elements()
                    .map(|h| self.conjugate(x, h))
                    .chain(std::iter::once(self.pow(x, q)));
                for y in images {
                    if class_of[y as usize] == usize::MAX {
                        class_of[y as usize] = id;
                        members.push(y);
                        queue.push_back(y);
                    }
                }
            }
            members.sort_unstable();
            classes.push(members);
        }
        FqClassPartition {
            group: self.clone(),
            q,
            classes,
            class_of,
        }
    }
}

fn generator_name(i: usize) -> String {
    const NAMES: &[u8] = b"abcdefghijklmnopqrstuvwxyz";
    match NAMES.get(i) {
        Some(&c) => (c as char).to_string(),
        None => format!("g{i}"),
    }
}

fn tokens(line: &str) -> impl Iterator<Item = (usize, &str)> {
    line.split_whitespace().map(move |tok| (column_of(line, tok), tok))
}

fn column_of(line: &str, tok: &str) -> usize {
    tok.as_ptr() as usize - line.as_ptr() as usize + 1
}

fn parse_token<T: std::str::FromStr>(tok: &str, line: usize, column: usize) -> Result<T> {
    tok.parse().map_err(|_| Error::Parse {
        line,
        column,
        message: format!("expected a non-negative integer, found {tok:?}"),
    })
}

impl PartialEq for Group {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.table == other.0.table
    }
}

impl Eq for Group {}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (order {})", self.descriptor(), self.order())
    }
}

pub fn group_abelian(orders: &[u32]) -> Result<Group> {
    Group::abelian(orders)
}

pub fn group_from_cayley(table: &[Vec<u32>]) -> Result<Group> {
    Group::from_cayley(table)
}

/// Partition of `G` into `F_q`-conjugacy classes `{h^-1 g^(q^k) h}`.
#[derive(Clone, Debug)]
pub struct FqClassPartition {
    group: Group,
    q: u64,
    classes: Vec<Vec<u32>>,
    class_of: Vec<usize>,
}

impl FqClassPartition {
    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Classes sorted by representative; members ascending.
    pub fn classes(&self) -> &[Vec<u32>] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class_of(&self, g: u32) -> usize {
        self.class_of[g as usize]
    }

    pub fn representative(&self, class: usize) -> u32 {
        self.classes[class][0]
    }
}

pub fn fq_classes(group: &Group, q: u64) -> Result<FqClassPartition> {
    let n = group.order() as u64;
    let g = gcd(q, n);
    if g != 1 {
        return Err(Error::NotCoprime { a: q, b: n, gcd: g });
    }
    Ok(group.closure_classes(q))
}

/// An antiautomorphism of `F_q[G]` in normal form: a group antiautomorphism
/// `mu_*` together with the Frobenius power `t` of `sigma(alpha) = alpha^(p^t)`.
#[derive(Clone, PartialEq, Eq)]
pub struct Antiautomorphism {
    group: Group,
    mu_star: Vec<u32>,
    frobenius_power: u32,
    name: String,
}

impl Antiautomorphism {
    /// Validates that `mu_star` is a bijection with `mu(gh) = mu(h) mu(g)`.
    pub fn new(group: &Group, mu_star: Vec<u32>, frobenius_power: u32) -> Result<Self> {
        Self::named(group, mu_star, frobenius_power, "custom".into())
    }

    fn named(group: &Group, mu_star: Vec<u32>, frobenius_power: u32, name: String) -> Result<Self> {
        let n = group.order();
        if mu_star.len() != n {
            return Err(Error::NotAntiautomorphism(format!(
                "permutation has {} entries for a group of order {n}",
                mu_star.len()
            )));
        }
        let mut seen = vec![false; n];
        for &x in &mu_star {
            if x as usize >= n || std::mem::replace(&mut seen[x as usize], true) {
                return Err(Error::NotAntiautomorphism(format!("not a bijection (image {x})")));
            }
        }
        if mu_star[0] != 0 {
            return Err(Error::NotAntiautomorphism("identity is not fixed".into()));
        }
        for g in group.elements() {
            for h in group.elements() {
                let lhs = mu_star[group.mul(g, h) as usize];
                let rhs = group.mul(mu_star[h as usize], mu_star[g as usize]);
                if lhs != rhs {
                    return Err(Error::NotAntiautomorphism(format!(
                        "mu({g}*{h}) != mu({h})*mu({g})"
                    )));
                }
            }
        }
        Ok(Antiautomorphism {
            group: group.clone(),
            mu_star,
            frobenius_power,
            name,
        })
    }

    /// Parses the permutation format: `n t` on the first line (order and
    /// Frobenius power), then the `n` images `mu_*(0) .. mu_*(n-1)`.
    pub fn parse(group: &Group, text: &str) -> Result<Self> {
        let mut all = text
            .lines()
            .enumerate()
            .flat_map(|(i, line)| tokens(line).map(move |(c, t)| (i + 1, c, t)));
        let mut next = |what: &str| {
            all.next().ok_or_else(|| Error::Parse {
                line: text.lines().count().max(1),
                column: 1,
                message: format!("missing {what}"),
            })
        };
        let (l, c, t) = next("group order")?;
        let n: usize = parse_token(t, l, c)?;
        if n != group.order() {
            return Err(Error::Parse {
                line: l,
                column: c,
                message: format!("order {n} does not match the group order {}", group.order()),
            });
        }
        let (l, c, t) = next("frobenius power")?;
        let power: u32 = parse_token(t, l, c)?;
        let mut perm = Vec::with_capacity(n);
        for i in 0..n {
            let (l, c, t) = next(&format!("image of element {i}"))?;
            perm.push(parse_token(t, l, c)?);
        }
        if let Some((l, c, _)) = all.next() {
            return Err(Error::Parse {
                line: l,
                column: c,
                message: "trailing data after the permutation".into(),
            });
        }
        Self::named(group, perm, power, "file".into())
    }

    /// Formats in the [`Antiautomorphism::parse`] format.
    pub fn to_text(&self) -> String {
        let images: Vec<String> = self.mu_star.iter().map(u32::to_string).collect();
        format!("{} {}\n{}\n", self.mu_star.len(), self.frobenius_power, images.join(" "))
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn mu_star(&self) -> &[u32] {
        &self.mu_star
    }

    pub fn apply(&self, g: u32) -> u32 {
        self.mu_star[g as usize]
    }

    pub fn frobenius_power(&self) -> u32 {
        self.frobenius_power
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn is_mu_minus1(&self) -> bool {
        self.frobenius_power == 0 && self.group.elements().all(|g| self.apply(g) == self.group.inv(g))
    }

    /// `(k, l)`: `k = p^t mod m` is the exponent by which `sigma` acts on
    /// `m`-th roots of unity (`m` the group exponent), `l` its inverse mod `m`.
    pub fn galois_exponents(&self, characteristic: u64) -> (u64, u64) {
        let m = self.group.exponent();
        if m == 1 {
            return (1, 1);
        }
        let k = (0..self.frobenius_power).fold(1u64, |acc, _| acc * characteristic % m);
        let l = inverse_mod(k, m).expect("p is coprime to the group order");
        (k, l)
    }
}

impl fmt::Debug for Antiautomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} on {} (sigma = Frob^{})",
            self.name,
            self.group.descriptor(),
            self.frobenius_power
        )
    }
}

/// `g -> g^-1` with trivial Galois part.
pub fn builtin_mu_minus1(group: &Group) -> Antiautomorphism {
    let perm = group.elements().map(|g| group.inv(g)).collect();
    Antiautomorphism::named(group, perm, 0, "mu-1".into()).expect("inversion is an antiautomorphism")
}

/// `a^x b^y -> a^(qy) b^x` on `Z_p x Z_p`.
pub fn builtin_mu_swap(group: &Group, q: u64) -> Result<Antiautomorphism> {
    let p = match group.abelian_shape() {
        Some(&[p1, p2]) if p1 == p2 && p1 % 2 == 1 && crate::gf::is_prime(p1 as u64) => p1,
        _ => {
            return Err(Error::Unsupported(format!(
                "swap splitting needs Z_p x Z_p with p an odd prime, got {}",
                group.descriptor()
            )))
        }
    };
    let g = gcd(p as u64, q);
    if g != 1 {
        return Err(Error::NotCoprime { a: q, b: p as u64, gcd: g });
    }
    let qm = (q % p as u64) as u32;
    let perm = group
        .elements()
        .map(|id| {
            let xs = group.exponents(id).expect("shaped group");
            group
                .from_exponents(&[qm * xs[1] % p, xs[0]])
                .expect("shaped group")
        })
        .collect();
    Antiautomorphism::named(group, perm, 0, "swap".into())
}

/// `mu1 x mu2` acting componentwise on `G1 x G2`.
pub fn product_antiauto(mu1: &Antiautomorphism, mu2: &Antiautomorphism) -> Result<Antiautomorphism> {
    if mu1.frobenius_power != mu2.frobenius_power {
        return Err(Error::NotAntiautomorphism(format!(
            "Frobenius powers differ ({} vs {})",
            mu1.frobenius_power, mu2.frobenius_power
        )));
    }
    let group = Group::direct_product(&mu1.group, &mu2.group)?;
    let n1 = mu1.group.order() as u32;
    let perm = group
        .elements()
        .map(|id| mu1.apply(id % n1) + n1 * mu2.apply(id / n1))
        .collect();
    let name = format!("{}*{}", mu1.name, mu2.name);
    Antiautomorphism::named(&group, perm, mu1.frobenius_power, name)
}

fn characteristic_of(q: u64) -> u64 {
    prime_factors(q).first().copied().unwrap_or(1)
}

/// Class containing `mu_*(g)^l` for the representative `g` of `class`.
pub fn mu_action_on_class(mu: &Antiautomorphism, classes: &FqClassPartition, class: usize) -> Result<usize> {
    if mu.group != classes.group {
        return Err(Error::GroupMismatch);
    }
    let (_, l) = mu.galois_exponents(characteristic_of(classes.q));
    let g = classes.representative(class);
    Ok(classes.class_of(mu.group.pow(mu.apply(g), l)))
}

/// The permutation of class ids induced by `mu`, checked on every class member.
pub fn mu_class_permutation(mu: &Antiautomorphism, classes: &FqClassPartition) -> Result<Vec<usize>> {
    if mu.group != classes.group {
        return Err(Error::GroupMismatch);
    }
    let (_, l) = mu.galois_exponents(characteristic_of(classes.q));
    let image = |g: u32| classes.class_of(mu.group.pow(mu.apply(g), l));
    classes
        .classes
        .iter()
        .map(|members| {
            let target = image(members[0]);
            match members.iter().find(|&&g| image(g) != target) {
                Some(&g) => Err(Error::Internal(format!(
                    "class action not well defined at element {g}"
                ))),
                None => Ok(target),
            }
        })
        .collect()
}
