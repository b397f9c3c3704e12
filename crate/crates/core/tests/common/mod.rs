#![allow(dead_code)]

use duadic::gf::FiniteField;
use duadic::groups::Group;

pub fn gf(q: u64) -> FiniteField {
    FiniteField::from_order(q).unwrap()
}

pub fn abelian(orders: &[u32]) -> Group {
    Group::abelian(orders).unwrap()
}

/// `Z_p x| Z_3` as `a^i b^j -> i + p j` with `b a b^-1 = a^r`, `r` of order 3 mod `p`.
pub fn frobenius_group(p: u32) -> Group {
    let r = (2..p).find(|&r| r * r % p != 1 && r * r * r % p == 1).expect("p = 1 mod 3");
    let rpow = [1, r, r * r % p];
    let n = 3 * p;
    let table: Vec<Vec<u32>> = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| {
                    let (i1, j1) = (x % p, x / p);
                    let (i2, j2) = (y % p, y / p);
                    (i1 + i2 * rpow[j1 as usize]) % p + p * ((j1 + j2) % 3)
                })
                .collect()
        })
        .collect();
    Group::from_cayley(&table).unwrap()
}

/// Every abelian group of order `n` as a list of cyclic factor orders
/// (invariant factors, each dividing the next). Empty for `n = 1`.
pub fn abelian_groups_of_order(n: u32) -> Vec<Vec<u32>> {
    fn partitions(k: u32, max: u32) -> Vec<Vec<u32>> {
        if k == 0 {
            return vec![vec![]];
        }
        (1..=k.min(max))
            .rev()
            .flat_map(|first| {
                partitions(k - first, first).into_iter().map(move |mut rest| {
                    rest.insert(0, first);
                    rest
                })
            })
            .collect()
    }
    let mut primes = Vec::new();
    let mut m = n;
    let mut p = 2;
    while m > 1 {
        let mut k = 0;
        while m % p == 0 {
            m /= p;
            k += 1;
        }
        if k > 0 {
            primes.push((p, k));
        }
        p += 1;
    }
    let mut shapes: Vec<Vec<u32>> = vec![vec![]];
    for (p, k) in primes {
        let mut next = Vec::new();
        for shape in &shapes {
            for part in partitions(k, k) {
                // Pad in front so the largest prime powers join the largest factors.
                let len = shape.len().max(part.len());
                let mut s = vec![1; len - shape.len()];
                s.extend_from_slice(shape);
                for (i, &e) in part.iter().enumerate() {
                    s[len - 1 - i] *= p.pow(e);
                }
                next.push(s);
            }
        }
        shapes = next;
    }
    if n == 1 {
        return Vec::new();
    }
    shapes
}
