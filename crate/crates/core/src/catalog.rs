//! Concrete brace families: the order-`pq` braces, the vector-pair construction,
//! and the order-`p^8` brace built from two unipotent matrices.

use serde::{Deserialize, Serialize};

use crate::brace::{FormulaBrace, SkewBrace};
use crate::error::{Error, Result};
use crate::fp::{self, Matrix};
use crate::group::GroupTable;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PqVariant {
    /// `(A,·)` abelian, `(A,∘)` non-abelian.
    I,
    /// `(A,·)` non-abelian, `(A,∘)` abelian.
    Ii,
}

fn pow_mod(base: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    let mut b = base % m;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    r
}

/// Brace on `C_p × C_q` with `(a^i, b^j)` stored at `i + p·j`.
///
/// Variant I: `(i,j)·(s,t) = (i+s, j+t)`, `(i,j)∘(s,t) = (i + k^j s, j+t)`.
/// Variant II: `(i,j)·(s,t) = (i + k^j s, j+t)`, `(i,j)∘(s,t) = (k^t i + k^j s, j+t)`.
pub fn make_pq_brace(p: u64, q: u64, k: u64, variant: PqVariant) -> Result<SkewBrace> {
    if !fp::is_prime(p) {
        return Err(Error::BadParameters(format!("p = {p} is not prime")));
    }
    if !fp::is_prime(q) {
        return Err(Error::BadParameters(format!("q = {q} is not prime")));
    }
    if p % q != 1 {
        return Err(Error::BadParameters(format!("p = {p} is not 1 mod q = {q}")));
    }
    if k % p == 1 || pow_mod(k, q, p) != 1 {
        return Err(Error::BadParameters(format!(
            "k = {k} does not have multiplicative order {q} mod {p}"
        )));
    }
    let n = (p * q) as usize;
    let (pu, qu) = (p as usize, q as usize);
    let kp: Vec<usize> = (0..qu).map(|j| pow_mod(k, j as u64, p) as usize).collect();
    let split = |x: usize| (x % pu, x / pu);
    let join = |i: usize, j: usize| (i % pu) + pu * (j % qu);
    let dot = |x: usize, y: usize| {
        let ((i, j), (s, t)) = (split(x), split(y));
        match variant {
            PqVariant::I => join(i + s, j + t),
            PqVariant::Ii => join(i + kp[j] * s, j + t),
        }
    };
    let circ = |x: usize, y: usize| {
        let ((i, j), (s, t)) = (split(x), split(y));
        match variant {
            PqVariant::I => join(i + kp[j] * s, j + t),
            PqVariant::Ii => join(kp[t] * i + kp[j] * s, j + t),
        }
    };
    let rows = |f: &dyn Fn(usize, usize) -> usize| -> Vec<Vec<usize>> {
        (0..n).map(|a| (0..n).map(|b| f(a, b)).collect()).collect()
    };
    let dot = GroupTable::validate(&rows(&dot))?;
    let circ = GroupTable::validate(&rows(&circ))?;
    SkewBrace::validate(dot, circ)
}

/// The vector-pair brace on `F_p^{d_B} × F_p^{d_C}`; see [`FormulaBrace`].
pub fn make_bc_brace(
    p: u32,
    d_b: usize,
    d_c: usize,
    phi: Vec<Matrix>,
    psi: Vec<Matrix>,
    seed: u64,
) -> Result<SkewBrace> {
    let f = FormulaBrace::new(p, d_b, d_c, phi, psi)?;
    SkewBrace::from_formula(f, seed)
}

fn mat(rows: [[i64; 4]; 4], p: u32) -> Matrix {
    Matrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>(), p).expect("4x4")
}

/// `φ_{e4}`: the full 4x4 unipotent Jordan block; `ker φ = <e1,e2,e3>`.
pub fn counterexample_phi_e4(p: u32) -> Matrix {
    mat([[1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 1], [0, 0, 0, 1]], p)
}

/// `ψ_{e3}`: unipotent on `<e1,e2,e3>`, fixing `e4`; `ker ψ = <e1,e2,e4>`.
pub fn counterexample_psi_e3(p: u32) -> Matrix {
    mat([[1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 0], [0, 0, 0, 1]], p)
}

/// The order-`p^8` brace with `B = C = F_p^4` on which `Ann_3(A) * A^{(3)} ≠ 1`.
pub fn make_counterexample_f(p: u64, seed: u64) -> Result<SkewBrace> {
    if p < 5 || !fp::is_prime(p) {
        return Err(Error::BadPrime(p));
    }
    let p = p as u32;
    let id = Matrix::identity(4);
    let phi = vec![id.clone(), id.clone(), id.clone(), counterexample_phi_e4(p)];
    let psi = vec![id.clone(), id.clone(), counterexample_psi_e3(p), id];
    make_bc_brace(p, 4, 4, phi, psi, seed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brace::DEFAULT_SEED;
    use crate::group::{center, is_abelian};

    #[test]
    fn pq_parameters_are_checked() {
        assert!(make_pq_brace(3, 2, 2, PqVariant::I).is_ok());
        assert!(matches!(
            make_pq_brace(4, 2, 3, PqVariant::I),
            Err(Error::BadParameters(_))
        ));
        assert!(matches!(
            make_pq_brace(5, 3, 2, PqVariant::I),
            Err(Error::BadParameters(_))
        ));
        assert!(matches!(
            make_pq_brace(3, 2, 1, PqVariant::I),
            Err(Error::BadParameters(_))
        ));
        assert!(matches!(
            make_pq_brace(7, 3, 6, PqVariant::Ii),
            Err(Error::BadParameters(_))
        ));
    }

    #[test]
    fn pq_group_structures() {
        let a = make_pq_brace(3, 2, 2, PqVariant::I).unwrap();
        assert!(is_abelian(&a.additive()));
        assert!(!is_abelian(&a.multiplicative()));
        let b = make_pq_brace(3, 2, 2, PqVariant::Ii).unwrap();
        assert!(!is_abelian(&b.additive()));
        assert!(is_abelian(&b.multiplicative()));
        assert!(center(&b.additive()).is_identity());
        assert_eq!(make_pq_brace(5, 2, 4, PqVariant::I).unwrap().order(), 10);
        assert_eq!(make_pq_brace(7, 3, 2, PqVariant::Ii).unwrap().order(), 21);
    }

    #[test]
    fn pq_star_formula() {
        // (a^i,b^j)*(a^s,b^t) = (a^{(k^j - 1)s}, 1)
        let a = make_pq_brace(3, 2, 2, PqVariant::I).unwrap();
        for x in 0..6 {
            for y in 0..6 {
                let (j, s) = (x / 3, y % 3);
                let k_j = if j == 0 { 1 } else { 2 };
                assert_eq!(a.star(x, y), ((k_j + 2) * s) % 3);
            }
        }
        assert_eq!(a.star(3, 1), 1);
        // λ_{(0,1)}(s,t) = (2s, t)
        for y in 0..6 {
            assert_eq!(a.lambda(3, y), (2 * (y % 3)) % 3 + 3 * (y / 3));
        }
        assert_eq!(a.circ(4, a.bar(4)), 0);
    }

    #[test]
    fn counterexample_matrices_read_as_columns() {
        let p = 5;
        let phi = counterexample_phi_e4(p);
        assert_eq!(phi.apply(&[1, 0, 0, 0], p), vec![1, 0, 0, 0]);
        assert_eq!(phi.apply(&[0, 1, 0, 0], p), vec![1, 1, 0, 0]);
        let psi = counterexample_psi_e3(p);
        assert_eq!(psi.apply(&[0, 1, 0, 0], p), vec![1, 1, 0, 0]);
        assert!(matches!(
            make_counterexample_f(3, DEFAULT_SEED),
            Err(Error::BadPrime(3))
        ));
        assert!(matches!(
            make_counterexample_f(9, DEFAULT_SEED),
            Err(Error::BadPrime(9))
        ));
    }

    #[test]
    fn bc_condition_is_enforced() {
        // ψ_{e1} moves e1 into e1 + e2 while φ_{e2} is nontrivial: violates the kernel condition
        let p = 5;
        let id = Matrix::identity(2);
        let shear = Matrix::from_rows(&[vec![1, 1], vec![0, 1]], p).unwrap();
        let lower = Matrix::from_rows(&[vec![1, 0], vec![1, 1]], p).unwrap();
        let r = make_bc_brace(p, 2, 2, vec![id.clone(), shear.clone()], vec![lower, id.clone()], 1);
        assert!(matches!(r, Err(Error::ConditionViolated { b: 1, c: 1 })));

        let singular = Matrix::from_rows(&[vec![1, 0], vec![0, 0]], p).unwrap();
        let r = make_bc_brace(p, 2, 2, vec![singular, id.clone()], vec![id.clone(), id.clone()], 1);
        assert!(matches!(r, Err(Error::NotInvertible(_))));

        let other = Matrix::from_rows(&[vec![1, 0], vec![1, 1]], p).unwrap();
        let r = make_bc_brace(p, 2, 2, vec![shear, other], vec![id.clone(), id], 1);
        assert!(matches!(r, Err(Error::NonCommutingFamily(_))));
    }

    #[test]
    fn identity_families_give_the_trivial_brace() {
        let p = 3;
        let id = Matrix::identity(2);
        let b = make_bc_brace(
            p,
            2,
            1,
            vec![id.clone()],
            vec![Matrix::identity(1), Matrix::identity(1)],
            7,
        )
        .unwrap();
        for x in 0..b.order() {
            for y in 0..b.order() {
                assert_eq!(b.star(x, y), 0);
                assert_eq!(b.dot(x, y), b.circ(x, y));
            }
        }
    }

    #[test]
    fn psi_trivial_gives_star_with_zero_second_component() {
        let p = 3;
        let shear = Matrix::from_rows(&[vec![1, 1], vec![0, 1]], p).unwrap();
        let b = make_bc_brace(p, 2, 1, vec![shear], vec![Matrix::identity(1), Matrix::identity(1)], 7).unwrap();
        let f = b.formula().unwrap();
        let mut nontrivial = false;
        for x in 0..b.order() {
            for y in 0..b.order() {
                let s = b.star(x, y);
                assert_eq!(f.split(s).1, 0);
                nontrivial |= s != 0;
            }
        }
        assert!(nontrivial);
    }
}
