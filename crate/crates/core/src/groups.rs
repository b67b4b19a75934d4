//! Concrete small groups as Cayley tables.

use crate::error::{Error, Result};
use crate::group::{Group, GroupTable};

/// `Z/n` under addition.
pub fn cyclic(n: usize) -> GroupTable {
    assert!(n >= 1);
    GroupTable::from_fn_unchecked(n, |a, b| (a + b) % n)
}

/// `G × H` with `(g, h)` stored at `g + |G|·h`.
pub fn direct_product(g: &GroupTable, h: &GroupTable) -> GroupTable {
    let m = g.order();
    GroupTable::from_fn_unchecked(m * h.order(), |a, b| g.op(a % m, b % m) + m * h.op(a / m, b / m))
}

/// Dihedral group of order `2n`, `r^i s^j` stored at `i + n·j`.
pub fn dihedral(n: usize) -> GroupTable {
    assert!(n >= 1);
    GroupTable::from_fn_unchecked(2 * n, |a, b| {
        let (i, j) = (a % n, a / n);
        let (k, l) = (b % n, b / n);
        // s r^k = r^{-k} s
        let k = if j == 1 { (n - k) % n } else { k };
        (i + k) % n + n * ((j + l) % 2)
    })
}

/// Dicyclic group of order `4m` (`Q8` for `m = 2`), `a^i x^j` stored at `i + 2m·j`.
pub fn dicyclic(m: usize) -> GroupTable {
    assert!(m >= 1);
    let n = 2 * m;
    GroupTable::from_fn_unchecked(2 * n, |a, b| {
        let (i, j) = (a % n, a / n);
        let (k, l) = (b % n, b / n);
        if j == 0 {
            (i + k) % n + n * l
        } else {
            // x a^k = a^{-k} x, x^2 = a^m
            let e = (i + n - k) % n;
            if l == 0 {
                e + n
            } else {
                (e + m) % n
            }
        }
    })
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

fn is_even(p: &[usize]) -> bool {
    let mut inversions = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 0
}

fn permutation_group(perms: Vec<Vec<usize>>) -> GroupTable {
    let index: std::collections::HashMap<Vec<usize>, usize> =
        perms.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
    GroupTable::from_fn_unchecked(perms.len(), |a, b| {
        // (p q)(x) = p(q(x))
        let c: Vec<usize> = perms[b].iter().map(|&x| perms[a][x]).collect();
        index[&c]
    })
}

/// Symmetric group on `n` points; permutations in lexicographic order, identity first.
pub fn symmetric(n: usize) -> GroupTable {
    permutation_group(permutations(n))
}

pub fn alternating(n: usize) -> GroupTable {
    permutation_group(permutations(n).into_iter().filter(|p| is_even(p)).collect())
}

/// Parses a group name: `Cn`, `Dn` (dihedral of order n), `Qn` (dicyclic of order n),
/// `Sn`, `An`, and `x`-separated direct products such as `C2xC2xC2`.
pub fn by_name(name: &str) -> Result<GroupTable> {
    let bad = || Error::Parse(format!("unknown group name {name:?}"));
    let mut factors = name.split(['x', 'X']).map(|f| {
        let f = f.trim();
        let (head, digits) = f.split_at(1.min(f.len()));
        let n: usize = digits.parse().map_err(|_| bad())?;
        match (head, n) {
            ("C", n) if n >= 1 => Ok(cyclic(n)),
            ("D", n) if n >= 2 && n % 2 == 0 => Ok(dihedral(n / 2)),
            ("Q", n) if n >= 4 && n % 4 == 0 => Ok(dicyclic(n / 4)),
            ("S", n) if (1..=5).contains(&n) => Ok(symmetric(n)),
            ("A", n) if (1..=5).contains(&n) => Ok(alternating(n)),
            _ => Err(bad()),
        }
    });
    let first = factors.next().ok_or_else(bad)??;
    factors.try_fold(first, |acc, f| Ok(direct_product(&acc, &f?)))
}

/// Every group of order at most 8, one per isomorphism class.
pub const ORDER_LE_8: &[&str] = &[
    "C1", "C2", "C3", "C4", "C2xC2", "C5", "C6", "S3", "C7", "C8", "C4xC2", "C2xC2xC2", "D8", "Q8",
];

/// A spread of groups of order 9..=16 used for the group-level cross checks.
pub const ORDER_9_TO_16: &[&str] = &[
    "C9",
    "C3xC3",
    "C10",
    "D10",
    "C11",
    "C12",
    "C6xC2",
    "D12",
    "A4",
    "Q12",
    "C13",
    "C14",
    "D14",
    "C15",
    "C16",
    "C4xC4",
    "C8xC2",
    "D16",
    "Q16",
    "D8xC2",
    "Q8xC2",
    "C2xC2xC2xC2",
];
