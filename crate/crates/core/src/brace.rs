//! The skew brace type, its lambda map and star product, and elementary constructors.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fp::{self, Matrix};
use crate::group::{greedy_generators, is_abelian, Group, GroupTable};

/// Seed for the random triples used when a brace is too large for exhaustive checks.
pub const DEFAULT_SEED: u64 = 0x5eed_b4ace;
/// Number of random triples used in sampled checks.
pub const DEFAULT_SAMPLES: usize = 100_000;

/// Largest auxiliary action table a formula brace will precompute.
const FORMULA_TABLE_LIMIT: usize = 1 << 24;

/// A finite skew brace `(A, ·, ∘)` on the carrier `0..n`, identity `0`.
#[derive(Debug, Clone)]
pub struct SkewBrace {
    backing: Backing,
    dot_gens: Vec<usize>,
    circ_gens: Vec<usize>,
    gens: Vec<usize>,
}

#[derive(Debug, Clone)]
pub enum Backing {
    Table { dot: GroupTable, circ: GroupTable },
    Formula(FormulaBrace),
}

/// Brace on `B × C` with `B = F_p^{d_B}`, `C = F_p^{d_C}` built from two commuting
/// matrix families:
///
/// `(b,c)·(x,y) = (b + φ_c(x), c + y)` and `(b,c)∘(x,y) = (b + x, c + ψ_b(y))`.
///
/// The pair `(b, c)` is stored at index `b + p^{d_B}·c`.
#[derive(Clone)]
pub struct FormulaBrace {
    p: u32,
    db: usize,
    dc: usize,
    phi: Vec<Matrix>,
    psi: Vec<Matrix>,
    nb: usize,
    nc: usize,
    phi_act: Vec<u32>,
    psi_act: Vec<u32>,
    add_b: Vec<u32>,
    add_c: Vec<u32>,
    neg_b: Vec<u32>,
    neg_c: Vec<u32>,
}

impl std::fmt::Debug for FormulaBrace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FormulaBrace")
            .field("p", &self.p)
            .field("d_b", &self.db)
            .field("d_c", &self.dc)
            .field("phi", &self.phi)
            .field("psi", &self.psi)
            .finish()
    }
}

fn vector_tables(p: u32, d: usize) -> (Vec<u32>, Vec<u32>) {
    let n = (p as usize).pow(d as u32);
    let digits: Vec<Vec<u32>> = (0..n).map(|i| fp::decode(i, p, d)).collect();
    let mut add = vec![0u32; n * n];
    for x in 0..n {
        for y in 0..n {
            let s: Vec<u32> = digits[x].iter().zip(&digits[y]).map(|(a, b)| (a + b) % p).collect();
            add[x * n + y] = fp::encode(&s, p) as u32;
        }
    }
    let neg = (0..n)
        .map(|x| {
            let v: Vec<u32> = digits[x].iter().map(|&a| (p - a) % p).collect();
            fp::encode(&v, p) as u32
        })
        .collect();
    (add, neg)
}

/// `ρ_v = Π ρ_{e_i}^{v_i}` for every `v`, as an action table `[v * n_target + x]`.
fn action_table(p: u32, basis: &[Matrix], d_target: usize) -> Vec<u32> {
    let nsrc = (p as usize).pow(basis.len() as u32);
    let ntgt = (p as usize).pow(d_target as u32);
    let mut out = vec![0u32; nsrc * ntgt];
    for v in 0..nsrc {
        let coords = fp::decode(v, p, basis.len());
        let m = coords
            .iter()
            .zip(basis)
            .fold(Matrix::identity(d_target), |acc, (&k, b)| {
                acc.mul(&b.pow(k as u64, p), p)
            });
        for x in 0..ntgt {
            out[v * ntgt + x] = fp::encode(&m.apply(&fp::decode(x, p, d_target), p), p) as u32;
        }
    }
    out
}

impl FormulaBrace {
    /// `phi[i]` is the image of `e_{i+1} ∈ C` in `GL(B)`, `psi[j]` the image of `e_{j+1} ∈ B` in `GL(C)`.
    pub fn new(p: u32, db: usize, dc: usize, phi: Vec<Matrix>, psi: Vec<Matrix>) -> Result<Self> {
        if !fp::is_prime(p as u64) {
            return Err(Error::BadParameters(format!("{p} is not prime")));
        }
        if phi.len() != dc || psi.len() != db {
            return Err(Error::BadParameters(format!(
                "need {dc} phi matrices and {db} psi matrices, got {} and {}",
                phi.len(),
                psi.len()
            )));
        }
        for (name, fam, d) in [("phi", &phi, db), ("psi", &psi, dc)] {
            for (i, m) in fam.iter().enumerate() {
                if m.dim() != d {
                    return Err(Error::BadParameters(format!("{name}[{i}] is not {d}x{d}")));
                }
                if !m.is_invertible(p) {
                    return Err(Error::NotInvertible(format!("{name}[{i}]")));
                }
                if !m.pow(p as u64, p).is_identity() {
                    return Err(Error::BadMatrixOrder(format!("{name}[{i}]^{p} != 1")));
                }
            }
            for i in 0..fam.len() {
                for j in i + 1..fam.len() {
                    if fam[i].mul(&fam[j], p) != fam[j].mul(&fam[i], p) {
                        return Err(Error::NonCommutingFamily(format!("{name}[{i}], {name}[{j}]")));
                    }
                }
            }
        }
        let nb = (p as usize).checked_pow(db as u32).unwrap_or(usize::MAX);
        let nc = (p as usize).checked_pow(dc as u32).unwrap_or(usize::MAX);
        let biggest = nb
            .saturating_mul(nc)
            .max(nb.saturating_mul(nb))
            .max(nc.saturating_mul(nc));
        if biggest > FORMULA_TABLE_LIMIT {
            return Err(Error::TooLarge {
                order: nb.saturating_mul(nc),
                limit: FORMULA_TABLE_LIMIT,
            });
        }
        // Im(psi_b - id) ⊆ ker(phi), checked on basis vectors of B and C
        for (bi, m) in psi.iter().enumerate() {
            for cj in 0..dc {
                let e = fp::decode(fp::basis_index(cj, p), p, dc);
                let img = m.apply(&e, p);
                let diff: Vec<u32> = img.iter().zip(&e).map(|(a, b)| (a + p - b) % p).collect();
                let phi_diff = diff
                    .iter()
                    .zip(&phi)
                    .fold(Matrix::identity(db), |acc, (&k, f)| acc.mul(&f.pow(k as u64, p), p));
                if !phi_diff.is_identity() {
                    return Err(Error::ConditionViolated { b: bi + 1, c: cj + 1 });
                }
            }
        }
        let phi_act = action_table(p, &phi, db);
        let psi_act = action_table(p, &psi, dc);
        let (add_b, neg_b) = vector_tables(p, db);
        let (add_c, neg_c) = vector_tables(p, dc);
        Ok(FormulaBrace {
            p,
            db,
            dc,
            phi,
            psi,
            nb,
            nc,
            phi_act,
            psi_act,
            add_b,
            add_c,
            neg_b,
            neg_c,
        })
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.db, self.dc)
    }

    pub fn phi_basis(&self) -> &[Matrix] {
        &self.phi
    }

    pub fn psi_basis(&self) -> &[Matrix] {
        &self.psi
    }

    pub fn order(&self) -> usize {
        self.nb * self.nc
    }

    #[inline]
    pub fn split(&self, a: usize) -> (usize, usize) {
        (a % self.nb, a / self.nb)
    }

    #[inline]
    pub fn join(&self, b: usize, c: usize) -> usize {
        b + self.nb * c
    }

    /// Index of the pair of coordinate vectors `(b, c)`.
    pub fn element(&self, b: &[u32], c: &[u32]) -> usize {
        self.join(fp::encode(b, self.p), fp::encode(c, self.p))
    }

    pub fn coordinates(&self, a: usize) -> (Vec<u32>, Vec<u32>) {
        let (b, c) = self.split(a);
        (fp::decode(b, self.p, self.db), fp::decode(c, self.p, self.dc))
    }

    #[inline]
    fn phi(&self, c: usize, x: usize) -> usize {
        self.phi_act[c * self.nb + x] as usize
    }

    #[inline]
    fn psi(&self, b: usize, y: usize) -> usize {
        self.psi_act[b * self.nc + y] as usize
    }

    #[inline]
    fn addb(&self, x: usize, y: usize) -> usize {
        self.add_b[x * self.nb + y] as usize
    }

    #[inline]
    fn addc(&self, x: usize, y: usize) -> usize {
        self.add_c[x * self.nc + y] as usize
    }

    #[inline]
    fn dot(&self, a1: usize, a2: usize) -> usize {
        let (b, c) = self.split(a1);
        let (x, y) = self.split(a2);
        self.join(self.addb(b, self.phi(c, x)), self.addc(c, y))
    }

    #[inline]
    fn inv(&self, a: usize) -> usize {
        let (b, c) = self.split(a);
        let nc = self.neg_c[c] as usize;
        self.join(self.neg_b[self.phi(nc, b)] as usize, nc)
    }

    #[inline]
    fn circ(&self, a1: usize, a2: usize) -> usize {
        let (b, c) = self.split(a1);
        let (x, y) = self.split(a2);
        self.join(self.addb(b, x), self.addc(c, self.psi(b, y)))
    }

    #[inline]
    fn bar(&self, a: usize) -> usize {
        let (b, c) = self.split(a);
        let nb = self.neg_b[b] as usize;
        self.join(nb, self.neg_c[self.psi(nb, c)] as usize)
    }

    /// `(b,c)*(x,y) = ((φ_{-c} - id)(x), (ψ_b - id)(y))`, evaluated directly.
    pub fn star_closed_form(&self, a1: usize, a2: usize) -> usize {
        let (b, c) = self.split(a1);
        let (x, y) = self.split(a2);
        let nx = self.neg_b[x] as usize;
        let ny = self.neg_c[y] as usize;
        let first = self.addb(self.phi(self.neg_c[c] as usize, x), nx);
        let second = self.addc(self.psi(b, y), ny);
        self.join(first, second)
    }

    /// `[(b,c),(x,y)] = ((id - φ_y)(b) + (φ_c - id)(x), 0)`, evaluated directly.
    pub fn commutator_closed_form(&self, a1: usize, a2: usize) -> usize {
        let (b, c) = self.split(a1);
        let (x, y) = self.split(a2);
        let t1 = self.addb(b, self.neg_b[self.phi(y, b)] as usize);
        let t2 = self.addb(self.phi(c, x), self.neg_b[x] as usize);
        self.join(self.addb(t1, t2), 0)
    }

    /// The elements `(e_i, 0)` and `(0, e_j)`; they generate both group structures.
    pub fn basis_elements(&self) -> Vec<usize> {
        let mut v: Vec<usize> = (0..self.db).map(|i| self.join(fp::basis_index(i, self.p), 0)).collect();
        v.extend((0..self.dc).map(|j| self.join(0, fp::basis_index(j, self.p))));
        v
    }
}

/// `(A, ·)` of a brace, as a [`Group`].
#[derive(Clone, Copy)]
pub struct Additive<'a>(pub &'a SkewBrace);

/// `(A, ∘)` of a brace, as a [`Group`].
#[derive(Clone, Copy)]
pub struct Multiplicative<'a>(pub &'a SkewBrace);

impl Group for Additive<'_> {
    fn order(&self) -> usize {
        self.0.order()
    }
    #[inline]
    fn op(&self, a: usize, b: usize) -> usize {
        self.0.dot(a, b)
    }
    #[inline]
    fn inv(&self, a: usize) -> usize {
        self.0.inv(a)
    }
    fn generators(&self) -> Vec<usize> {
        self.0.dot_gens.clone()
    }
}

impl Group for Multiplicative<'_> {
    fn order(&self) -> usize {
        self.0.order()
    }
    #[inline]
    fn op(&self, a: usize, b: usize) -> usize {
        self.0.circ(a, b)
    }
    #[inline]
    fn inv(&self, a: usize) -> usize {
        self.0.bar(a)
    }
    fn generators(&self) -> Vec<usize> {
        self.0.circ_gens.clone()
    }
}

impl SkewBrace {
    fn from_backing(backing: Backing) -> Self {
        let mut b = SkewBrace {
            backing,
            dot_gens: Vec::new(),
            circ_gens: Vec::new(),
            gens: Vec::new(),
        };
        match &b.backing {
            Backing::Table { dot, circ } => {
                b.dot_gens = dot.generators();
                b.circ_gens = circ.generators();
            }
            Backing::Formula(f) => {
                b.dot_gens = f.basis_elements();
                b.circ_gens = f.basis_elements();
            }
        }
        let mut all = b.dot_gens.clone();
        for &g in &b.circ_gens {
            if !all.contains(&g) {
                all.push(g);
            }
        }
        b.gens = all;
        b
    }

    /// Wraps two tables without checking the brace relation.
    pub(crate) fn from_tables_unchecked(dot: GroupTable, circ: GroupTable) -> Self {
        Self::from_backing(Backing::Table { dot, circ })
    }

    /// Validates the brace relation on all triples, and the lambda homomorphism property.
    pub fn validate(dot: GroupTable, circ: GroupTable) -> Result<Self> {
        if dot.order() != circ.order() {
            return Err(Error::IdentityMismatch);
        }
        let b = Self::from_tables_unchecked(dot, circ);
        let n = b.order();
        for a in 0..n {
            let ainv = b.inv(a);
            for x in 0..n {
                let ax = b.circ(a, x);
                let left = b.dot(ax, ainv);
                for y in 0..n {
                    if b.circ(a, b.dot(x, y)) != b.dot(left, b.circ(a, y)) {
                        return Err(Error::BraceRelationFails(a, x, y));
                    }
                }
            }
        }
        b.check_lambda_homomorphism_all()?;
        Ok(b)
    }

    fn check_lambda_homomorphism_all(&self) -> Result<()> {
        let n = self.order();
        for a in 0..n {
            for c in 0..n {
                let ac = self.circ(a, c);
                for x in 0..n {
                    if self.lambda(ac, x) != self.lambda(a, self.lambda(c, x)) {
                        return Err(Error::LambdaNotHomomorphism(a, c, x));
                    }
                }
            }
        }
        Ok(())
    }

    /// Wraps a vector-pair construction, with the sampled regression check.
    pub fn from_formula(f: FormulaBrace, seed: u64) -> Result<Self> {
        let b = Self::from_backing(Backing::Formula(f));
        b.validate_sampled(seed, DEFAULT_SAMPLES)?;
        Ok(b)
    }

    /// Brace relation and lambda homomorphism on all triples drawn from the
    /// generators and their pairwise products, plus `samples` random triples.
    fn validate_sampled(&self, seed: u64, samples: usize) -> Result<()> {
        let check = |a: usize, x: usize, y: usize| -> Result<()> {
            if self.circ(a, self.dot(x, y)) != self.dot(self.dot(self.circ(a, x), self.inv(a)), self.circ(a, y)) {
                return Err(Error::BraceRelationFails(a, x, y));
            }
            if self.lambda(self.circ(a, x), y) != self.lambda(a, self.lambda(x, y)) {
                return Err(Error::LambdaNotHomomorphism(a, x, y));
            }
            Ok(())
        };
        let set = self.generator_products();
        for &a in &set {
            for &x in &set {
                for &y in &set {
                    check(a, x, y)?;
                }
            }
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = self.order();
        for _ in 0..samples {
            check(rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n))?;
        }
        Ok(())
    }

    /// Generators together with all their pairwise `·` and `∘` products.
    pub fn generator_products(&self) -> Vec<usize> {
        let mut set = vec![0];
        set.extend(self.gens.iter().copied());
        for &g in &self.gens {
            for &h in &self.gens {
                set.push(self.dot(g, h));
                set.push(self.circ(g, h));
            }
        }
        set.sort_unstable();
        set.dedup();
        set
    }

    pub fn backing(&self) -> &Backing {
        &self.backing
    }

    pub fn is_table(&self) -> bool {
        matches!(self.backing, Backing::Table { .. })
    }

    pub fn formula(&self) -> Option<&FormulaBrace> {
        match &self.backing {
            Backing::Formula(f) => Some(f),
            Backing::Table { .. } => None,
        }
    }

    /// `(dot, circ)` tables, for table-backed braces.
    pub fn tables(&self) -> Option<(&GroupTable, &GroupTable)> {
        match &self.backing {
            Backing::Table { dot, circ } => Some((dot, circ)),
            Backing::Formula(_) => None,
        }
    }

    pub fn order(&self) -> usize {
        match &self.backing {
            Backing::Table { dot, .. } => dot.order(),
            Backing::Formula(f) => f.order(),
        }
    }

    #[inline]
    pub fn dot(&self, a: usize, b: usize) -> usize {
        match &self.backing {
            Backing::Table { dot, .. } => dot.op(a, b),
            Backing::Formula(f) => f.dot(a, b),
        }
    }

    #[inline]
    pub fn circ(&self, a: usize, b: usize) -> usize {
        match &self.backing {
            Backing::Table { circ, .. } => circ.op(a, b),
            Backing::Formula(f) => f.circ(a, b),
        }
    }

    /// Inverse in `(A, ·)`.
    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        match &self.backing {
            Backing::Table { dot, .. } => dot.inv(a),
            Backing::Formula(f) => f.inv(a),
        }
    }

    /// Inverse in `(A, ∘)`.
    #[inline]
    pub fn bar(&self, a: usize) -> usize {
        match &self.backing {
            Backing::Table { circ, .. } => circ.inv(a),
            Backing::Formula(f) => f.bar(a),
        }
    }

    /// `λ_a(b) = a^{-1}·(a∘b)`.
    #[inline]
    pub fn lambda(&self, a: usize, b: usize) -> usize {
        self.dot(self.inv(a), self.circ(a, b))
    }

    /// `λ_a` as a permutation of the carrier.
    pub fn lambda_of(&self, a: usize) -> Vec<usize> {
        (0..self.order()).map(|b| self.lambda(a, b)).collect()
    }

    /// `a*b = λ_a(b)·b^{-1}`.
    #[inline]
    pub fn star(&self, a: usize, b: usize) -> usize {
        self.dot(self.lambda(a, b), self.inv(b))
    }

    /// `[x, y]` in `(A, ·)`.
    #[inline]
    pub fn dot_commutator(&self, x: usize, y: usize) -> usize {
        Additive(self).commutator(x, y)
    }

    /// `[x, y]_∘` in `(A, ∘)`.
    #[inline]
    pub fn circ_commutator(&self, x: usize, y: usize) -> usize {
        Multiplicative(self).commutator(x, y)
    }

    pub fn additive(&self) -> Additive<'_> {
        Additive(self)
    }

    pub fn multiplicative(&self) -> Multiplicative<'_> {
        Multiplicative(self)
    }

    /// Generators of `(A, ·)`.
    pub fn dot_generators(&self) -> &[usize] {
        &self.dot_gens
    }

    /// Generators of `(A, ∘)`.
    pub fn circ_generators(&self) -> &[usize] {
        &self.circ_gens
    }

    /// A set generating both group structures.
    pub fn generators(&self) -> &[usize] {
        &self.gens
    }

    /// Greedy `∘`-generators of a subset (which should be a `∘`-subgroup).
    pub fn circ_generators_of(&self, s: &crate::ElementSet) -> Vec<usize> {
        greedy_generators(&Multiplicative(self), s.iter())
    }

    /// Greedy `·`-generators of a subset.
    pub fn dot_generators_of(&self, s: &crate::ElementSet) -> Vec<usize> {
        greedy_generators(&Additive(self), s.iter())
    }

    /// Materializes both tables (order must be small enough for a table).
    pub fn to_tables(&self) -> (GroupTable, GroupTable) {
        match &self.backing {
            Backing::Table { dot, circ } => (dot.clone(), circ.clone()),
            Backing::Formula(_) => (
                GroupTable::from_group(&Additive(self)),
                GroupTable::from_group(&Multiplicative(self)),
            ),
        }
    }
}

/// Result of checking the four standard star-product identities.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub holds: bool,
    pub triples_checked: usize,
    pub exhaustive: bool,
    /// `(identity number, a, x, y)` of the first failure.
    pub witness: Option<(u8, usize, usize, usize)>,
}

/// Which identity of the four fails at `(a, x, y)`, if any.
///
/// 1. `a*(x·y) = (a*x)·x·(a*y)·x^{-1}`
/// 2. `(x∘y)*a = (x*(y*a))·(y*a)·(x*a)`
/// 3. `λ_a(x*y) = (a∘x∘ā)*λ_a(y)`
/// 4. `a∘x∘ā = a·λ_a(x·(x*ā))·a^{-1}`
pub fn failing_identity(br: &SkewBrace, a: usize, x: usize, y: usize) -> Option<u8> {
    let d = |u, v| br.dot(u, v);
    let s = |u, v| br.star(u, v);
    let xi = br.inv(x);
    if s(a, d(x, y)) != d(d(d(s(a, x), x), s(a, y)), xi) {
        return Some(1);
    }
    let ya = s(y, a);
    if s(br.circ(x, y), a) != d(d(s(x, ya), ya), s(x, a)) {
        return Some(2);
    }
    let abar = br.bar(a);
    let conj = br.circ(br.circ(a, x), abar);
    if br.lambda(a, s(x, y)) != s(conj, br.lambda(a, y)) {
        return Some(3);
    }
    if conj != d(d(a, br.lambda(a, d(x, s(x, abar)))), br.inv(a)) {
        return Some(4);
    }
    None
}

/// Checks the four identities on all triples (tables) or sampled triples (formula).
pub fn check_identities(br: &SkewBrace, seed: u64, samples: usize) -> IdentityReport {
    let n = br.order();
    let mut checked = 0;
    let fail = |w: (u8, usize, usize, usize), checked| IdentityReport {
        holds: false,
        triples_checked: checked,
        exhaustive: br.is_table(),
        witness: Some(w),
    };
    if br.is_table() {
        for a in 0..n {
            for x in 0..n {
                for y in 0..n {
                    checked += 1;
                    if let Some(i) = failing_identity(br, a, x, y) {
                        return fail((i, a, x, y), checked);
                    }
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..samples {
            let (a, x, y) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
            checked += 1;
            if let Some(i) = failing_identity(br, a, x, y) {
                return fail((i, a, x, y), checked);
            }
        }
    }
    IdentityReport {
        holds: true,
        triples_checked: checked,
        exhaustive: br.is_table(),
        witness: None,
    }
}

/// `(G, ·, ·)`.
pub fn build_trivial(g: &GroupTable) -> SkewBrace {
    SkewBrace::from_tables_unchecked(g.clone(), g.clone())
}

/// `(G, ·, ·^op)`.
pub fn build_almost_trivial(g: &GroupTable) -> SkewBrace {
    SkewBrace::from_tables_unchecked(g.clone(), g.opposite())
}

/// Brace of a radical ring: `a∘b = a + b + a⋆b`.
///
/// `add` must have its identity at index 0 and be abelian; `mult` must be an
/// associative multiplication distributing over `add`.
pub fn build_from_radical_ring(add: &[Vec<usize>], mult: &[Vec<usize>]) -> Result<SkewBrace> {
    let n = add.len();
    if mult.len() != n || mult.iter().any(|r| r.len() != n) || mult.iter().flatten().any(|&v| v >= n) {
        return Err(Error::NotARing("multiplication table shape".into()));
    }
    if !(0..n).all(|x| add.first().is_some_and(|r| r.get(x) == Some(&x))) {
        return Err(Error::NotARing("additive identity must be element 0".into()));
    }
    let plus = GroupTable::validate(add).map_err(|e| Error::NotARing(format!("additive group: {e}")))?;
    if !is_abelian(&plus) {
        return Err(Error::NotARing("additive group is not abelian".into()));
    }
    let m = |a: usize, b: usize| mult[a][b];
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if m(a, plus.op(b, c)) != plus.op(m(a, b), m(a, c)) {
                    return Err(Error::NotARing(format!("left distributivity fails at ({a},{b},{c})")));
                }
                if m(plus.op(a, b), c) != plus.op(m(a, c), m(b, c)) {
                    return Err(Error::NotARing(format!("right distributivity fails at ({a},{b},{c})")));
                }
                if m(m(a, b), c) != m(a, m(b, c)) {
                    return Err(Error::NotARing(format!("associativity fails at ({a},{b},{c})")));
                }
            }
        }
    }
    let circ_rows: Vec<Vec<usize>> = (0..n)
        .map(|a| (0..n).map(|b| plus.op(plus.op(a, b), m(a, b))).collect())
        .collect();
    let circ = GroupTable::validate(&circ_rows).map_err(|e| Error::NotRadical(e.to_string()))?;
    SkewBrace::validate(plus, circ)
}
