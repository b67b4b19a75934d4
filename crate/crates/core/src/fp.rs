//! Small dense matrices and vectors over a prime field `F_p`.
//!
//! Vectors of `F_p^d` are also encoded as integers in `0..p^d`: coordinate
//! `i` (the coefficient of `e_{i+1}`) is the base-`p` digit of weight `p^i`.

use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    d: usize,
    /// row-major
    a: Vec<u32>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}

impl Matrix {
    pub fn identity(d: usize) -> Self {
        let mut a = vec![0; d * d];
        for i in 0..d {
            a[i * d + i] = 1;
        }
        Matrix { d, a }
    }

    /// Reads rows as written; entries are reduced mod `p`.
    pub fn from_rows(rows: &[Vec<i64>], p: u32) -> Option<Self> {
        let d = rows.len();
        if rows.iter().any(|r| r.len() != d) {
            return None;
        }
        let a = rows.iter().flatten().map(|&v| v.rem_euclid(p as i64) as u32).collect();
        Some(Matrix { d, a })
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.a[i * self.d + j]
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.a.chunks(self.d.max(1)).map(|r| r.to_vec()).collect()
    }

    pub fn mul(&self, other: &Matrix, p: u32) -> Matrix {
        let d = self.d;
        let mut a = vec![0; d * d];
        for i in 0..d {
            for j in 0..d {
                let mut s = 0u64;
                for k in 0..d {
                    s += self.get(i, k) as u64 * other.get(k, j) as u64;
                }
                a[i * d + j] = (s % p as u64) as u32;
            }
        }
        Matrix { d, a }
    }

    pub fn pow(&self, mut e: u64, p: u32) -> Matrix {
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.d);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base, p);
            }
            base = base.mul(&base, p);
            e >>= 1;
        }
        acc
    }

    /// Matrix times column vector.
    pub fn apply(&self, v: &[u32], p: u32) -> Vec<u32> {
        (0..self.d)
            .map(|i| {
                let s: u64 = (0..self.d).map(|j| self.get(i, j) as u64 * v[j] as u64).sum();
                (s % p as u64) as u32
            })
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == Matrix::identity(self.d)
    }

    /// Rank by Gaussian elimination over `F_p`.
    pub fn rank(&self, p: u32) -> usize {
        let d = self.d;
        let mut m: Vec<Vec<u64>> = self
            .rows()
            .into_iter()
            .map(|r| r.into_iter().map(u64::from).collect())
            .collect();
        let p = p as u64;
        let mut rank = 0;
        for col in 0..d {
            let Some(piv) = (rank..d).find(|&r| m[r][col] != 0) else {
                continue;
            };
            m.swap(rank, piv);
            let inv = inv_mod(m[rank][col], p);
            for x in m[rank].iter_mut() {
                *x = *x * inv % p;
            }
            let pivot = m[rank].clone();
            for (r, row) in m.iter_mut().enumerate() {
                if r != rank && row[col] != 0 {
                    let f = row[col];
                    for (x, &y) in row.iter_mut().zip(&pivot) {
                        *x = (*x + p * p - f * y) % p;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    pub fn is_invertible(&self, p: u32) -> bool {
        self.rank(p) == self.d
    }
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // p prime
    let mut r = 1;
    let mut b = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut i = 2;
    while i * i <= n {
        if n.is_multiple_of(i) {
            return false;
        }
        i += 1;
    }
    true
}

pub fn encode(v: &[u32], p: u32) -> usize {
    v.iter().rev().fold(0, |acc, &x| acc * p as usize + x as usize)
}

pub fn decode(mut idx: usize, p: u32, d: usize) -> Vec<u32> {
    let mut v = Vec::with_capacity(d);
    for _ in 0..d {
        v.push((idx % p as usize) as u32);
        idx /= p as usize;
    }
    v
}

/// Index of the basis vector `e_{i+1}` of `F_p^d`.
pub fn basis_index(i: usize, p: u32) -> usize {
    (p as usize).pow(i as u32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn unipotent_block_has_order_p() {
        let n = Matrix::from_rows(
            &[vec![1, 1, 0, 0], vec![0, 1, 1, 0], vec![0, 0, 1, 1], vec![0, 0, 0, 1]],
            5,
        )
        .unwrap();
        assert!(n.pow(5, 5).is_identity());
        assert!(!n.pow(4, 5).is_identity());
        // in characteristic 3 the 4x4 Jordan block has order 9
        let n3 = Matrix::from_rows(
            &n.rows()
                .iter()
                .map(|r| r.iter().map(|&x| x as i64).collect())
                .collect::<Vec<_>>(),
            3,
        )
        .unwrap();
        assert!(!n3.pow(3, 3).is_identity());
    }

    #[test]
    fn column_convention() {
        let m = Matrix::from_rows(&[vec![1, 1], vec![0, 1]], 5).unwrap();
        // second column is e1 + e2
        assert_eq!(m.apply(&[0, 1], 5), vec![1, 1]);
    }

    #[test]
    fn rank_detects_singular() {
        let m = Matrix::from_rows(&[vec![1, 2], vec![2, 4]], 7).unwrap();
        assert_eq!(m.rank(7), 1);
        assert!(Matrix::identity(3).is_invertible(2));
    }

    proptest! {
        #[test]
        fn encode_decode_inverse(idx in 0usize..625) {
            prop_assert_eq!(encode(&decode(idx, 5, 4), 5), idx);
        }
    }
}
