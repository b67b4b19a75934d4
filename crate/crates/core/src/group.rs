//! Finite groups given by Cayley tables, and the subgroup machinery built on them.
//!
//! All algorithms are written against the [`Group`] trait so that they run
//! unchanged on a [`GroupTable`] and on either group structure of a brace,
//! including formula-backed braces whose tables are never materialized.

use serde::Serialize;

use crate::chain::{SeriesChain, SeriesKind};
use crate::error::{Error, Result};
use crate::set::ElementSet;

/// Largest quotient that is materialized as a table.
pub const QUOTIENT_LIMIT: usize = 4096;

/// A finite group on the carrier `0..order` with identity `0`.
pub trait Group: Sync {
    fn order(&self) -> usize;
    fn op(&self, a: usize, b: usize) -> usize;
    fn inv(&self, a: usize) -> usize;

    /// A generating set. The default is a greedy scan in index order.
    fn generators(&self) -> Vec<usize> {
        greedy_generators(self, 0..self.order())
    }

    #[inline]
    fn conj(&self, g: usize, x: usize) -> usize {
        self.op(self.op(g, x), self.inv(g))
    }

    /// `[x, y] = x y x^{-1} y^{-1}`.
    #[inline]
    fn commutator(&self, x: usize, y: usize) -> usize {
        self.op(self.op(x, y), self.op(self.inv(x), self.inv(y)))
    }
}

/// A Cayley table with precomputed inverses; identity is always index 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    n: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
    gens: Vec<usize>,
}

impl Group for GroupTable {
    #[inline]
    fn order(&self) -> usize {
        self.n
    }

    #[inline]
    fn op(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b] as usize
    }

    #[inline]
    fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    fn generators(&self) -> Vec<usize> {
        self.gens.clone()
    }
}

impl GroupTable {
    /// Validates a square multiplication table and builds a group from it.
    ///
    /// If the identity is not at index 0, labels 0 and the identity are swapped.
    pub fn validate(rows: &[Vec<usize>]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::MalformedTable("empty table".into()));
        }
        for (i, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(Error::MalformedTable(format!(
                    "row {i} has length {}, expected {n}",
                    r.len()
                )));
            }
            if let Some(&v) = r.iter().find(|&&v| v >= n) {
                return Err(Error::MalformedTable(format!("entry {v} out of range in row {i}")));
            }
        }
        let e = (0..n)
            .find(|&e| (0..n).all(|x| rows[e][x] == x && rows[x][e] == x))
            .ok_or(Error::NoIdentity)?;

        // relabel so the identity sits at 0
        let swap = |x: usize| {
            if x == e {
                0
            } else if x == 0 {
                e
            } else {
                x
            }
        };
        let mut mul = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                mul[a * n + b] = swap(rows[swap(a)][swap(b)]) as u32;
            }
        }

        let mut inv = vec![0u32; n];
        for x in 0..n {
            let y = (0..n)
                .find(|&y| mul[x * n + y] == 0 && mul[y * n + x] == 0)
                .ok_or(Error::NoInverse(swap(x)))?;
            inv[x] = y as u32;
        }
        for x in 0..n {
            for y in 0..n {
                let xy = mul[x * n + y] as usize;
                for z in 0..n {
                    let yz = mul[y * n + z] as usize;
                    if mul[xy * n + z] != mul[x * n + yz] {
                        return Err(Error::NotAssociative(swap(x), swap(y), swap(z)));
                    }
                }
            }
        }
        Ok(Self::from_parts(n, mul, inv))
    }

    /// Builds a table from a known-good operation; identity must be 0.
    pub(crate) fn from_fn_unchecked(n: usize, f: impl Fn(usize, usize) -> usize) -> Self {
        let mut mul = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                mul[a * n + b] = f(a, b) as u32;
            }
        }
        let mut inv = vec![0u32; n];
        for a in 0..n {
            let row = &mul[a * n..(a + 1) * n];
            inv[a] = row.iter().position(|&v| v == 0).expect("group table has inverses") as u32;
        }
        Self::from_parts(n, mul, inv)
    }

    fn from_parts(n: usize, mul: Vec<u32>, inv: Vec<u32>) -> Self {
        let mut t = GroupTable {
            n,
            mul,
            inv,
            gens: Vec::new(),
        };
        t.gens = greedy_generators(&t, 0..n);
        t
    }

    /// Copies any group into table form.
    pub fn from_group<G: Group + ?Sized>(g: &G) -> Self {
        Self::from_fn_unchecked(g.order(), |a, b| g.op(a, b))
    }

    /// The table as nested rows, for serialization.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.n)
            .map(|a| (0..self.n).map(|b| self.op(a, b)).collect())
            .collect()
    }

    pub fn is_abelian(&self) -> bool {
        is_abelian(self)
    }

    /// The table of the opposite operation `a * b = b a`.
    pub fn opposite(&self) -> Self {
        Self::from_fn_unchecked(self.n, |a, b| self.op(b, a))
    }
}

pub fn is_abelian<G: Group + ?Sized>(g: &G) -> bool {
    let gens = g.generators();
    gens.iter().all(|&a| gens.iter().all(|&b| g.op(a, b) == g.op(b, a)))
}

/// Incrementally grown subgroup `<gens>`.
///
/// Only generators that enlarge the current subgroup are kept, so at most
/// `log2 |G|` rebuilds happen over the lifetime of a builder.
pub struct SubgroupBuilder<'g, G: Group + ?Sized> {
    group: &'g G,
    set: ElementSet,
    elems: Vec<usize>,
    gens: Vec<usize>,
}

impl<'g, G: Group + ?Sized> SubgroupBuilder<'g, G> {
    pub fn new(group: &'g G) -> Self {
        SubgroupBuilder {
            group,
            set: ElementSet::identity(group.order()),
            elems: vec![0],
            gens: Vec::new(),
        }
    }

    pub fn contains(&self, x: usize) -> bool {
        self.set.contains(x)
    }

    /// Adds `x` as a generator. Returns `true` if the subgroup grew.
    pub fn add(&mut self, x: usize) -> bool {
        if self.set.contains(x) {
            return false;
        }
        self.gens.push(x);
        // every product of old elements with old generators is already present,
        // so extending the BFS with right multiplication by all generators from
        // every element reaches the new subgroup.
        let g = self.group;
        let mut head = 0;
        while head < self.elems.len() {
            let e = self.elems[head];
            head += 1;
            for &s in &self.gens {
                let y = g.op(e, s);
                if self.set.insert(y) {
                    self.elems.push(y);
                }
            }
        }
        true
    }

    pub fn extend(&mut self, xs: impl IntoIterator<Item = usize>) -> bool {
        let mut grew = false;
        for x in xs {
            grew |= self.add(x);
        }
        grew
    }

    pub fn generators(&self) -> &[usize] {
        &self.gens
    }

    pub fn set(&self) -> &ElementSet {
        &self.set
    }

    pub fn into_set(self) -> ElementSet {
        self.set
    }
}

/// Smallest subgroup containing `gens`.
pub fn subgroup_closure<G: Group + ?Sized>(g: &G, gens: impl IntoIterator<Item = usize>) -> ElementSet {
    let mut b = SubgroupBuilder::new(g);
    b.extend(gens);
    b.into_set()
}

/// A non-redundant generating set of the subgroup generated by `xs`.
pub fn greedy_generators<G: Group + ?Sized>(g: &G, xs: impl IntoIterator<Item = usize>) -> Vec<usize> {
    let mut b = SubgroupBuilder::new(g);
    b.extend(xs);
    b.gens
}

pub fn is_subgroup<G: Group + ?Sized>(g: &G, s: &ElementSet) -> bool {
    s.contains(0) && subgroup_closure(g, s.iter()) == *s
}

/// Normality of a subgroup, tested against generators of both `G` and `H`.
pub fn is_normal<G: Group + ?Sized>(g: &G, h: &ElementSet) -> Result<bool> {
    if !is_subgroup(g, h) {
        return Err(Error::NotASubgroup);
    }
    Ok(normalizes(g, h, &g.generators()))
}

/// Whether every `x` in `conjugators` satisfies `x H x^{-1} ⊆ H` (H a subgroup).
pub(crate) fn normalizes<G: Group + ?Sized>(g: &G, h: &ElementSet, conjugators: &[usize]) -> bool {
    let hgens = greedy_generators(g, h.iter());
    conjugators
        .iter()
        .all(|&x| hgens.iter().all(|&y| h.contains(g.conj(x, y))))
}

/// Right-coset partition data for a normal subgroup.
#[derive(Debug, Clone)]
pub struct Cosets {
    /// Minimal element of each coset, in increasing order.
    pub reps: Vec<usize>,
    /// Carrier element to coset index.
    pub projection: Vec<usize>,
}

pub(crate) fn cosets<G: Group + ?Sized>(g: &G, n: &ElementSet) -> Cosets {
    let order = g.order();
    let mut projection = vec![usize::MAX; order];
    let mut reps = Vec::new();
    let members = n.to_vec();
    for x in 0..order {
        if projection[x] != usize::MAX {
            continue;
        }
        let idx = reps.len();
        reps.push(x);
        for &m in &members {
            projection[g.op(x, m)] = idx;
        }
    }
    Cosets { reps, projection }
}

/// `G/N` on minimal coset representatives, with the projection map.
pub fn quotient_group<G: Group + ?Sized>(g: &G, n: &ElementSet) -> Result<(GroupTable, Vec<usize>)> {
    if !is_normal(g, n).map_err(|_| Error::NotNormal)? {
        return Err(Error::NotNormal);
    }
    let q_order = g.order() / n.len();
    if q_order > QUOTIENT_LIMIT {
        return Err(Error::QuotientTooLarge {
            order: q_order,
            limit: QUOTIENT_LIMIT,
        });
    }
    let c = cosets(g, n);
    let table = GroupTable::from_fn_unchecked(c.reps.len(), |i, j| c.projection[g.op(c.reps[i], c.reps[j])]);
    Ok((table, c.projection))
}

pub fn center<G: Group + ?Sized>(g: &G) -> ElementSet {
    let gens = g.generators();
    ElementSet::from_indices(
        g.order(),
        (0..g.order()).filter(|&x| gens.iter().all(|&s| g.op(x, s) == g.op(s, x))),
    )
}

/// The subgroup generated by all `[x, y]` with `x ∈ X`, `y ∈ Y`.
pub fn commutator_set<G: Group + ?Sized>(g: &G, xs: &ElementSet, ys: &ElementSet) -> ElementSet {
    let mut b = SubgroupBuilder::new(g);
    for x in xs {
        for y in ys {
            b.add(g.commutator(x, y));
        }
    }
    b.into_set()
}

/// The smallest subgroup containing `seeds` and normalized by `conjugators`.
pub fn normal_closure<G: Group + ?Sized>(
    g: &G,
    seeds: impl IntoIterator<Item = usize>,
    conjugators: &[usize],
) -> ElementSet {
    let mut b = SubgroupBuilder::new(g);
    b.extend(seeds);
    let mut done = 0;
    while done < b.generators().len() {
        let x = b.generators()[done];
        done += 1;
        for &c in conjugators {
            b.add(g.conj(c, x));
        }
    }
    b.into_set()
}

/// `γ_1 = G`, `γ_{n+1} = [G, γ_n]`.
///
/// `[G, N]` for normal `N` is the normal closure of the commutators of generators.
pub fn lower_central_series<G: Group + ?Sized>(g: &G) -> SeriesChain {
    let all = ElementSet::full(g.order());
    let gens = g.generators();
    SeriesChain::iterate(SeriesKind::GroupLower, all, g.order() + 1, |t| {
        let tgens = greedy_generators(g, t.iter());
        let seeds = gens
            .iter()
            .flat_map(|&a| tgens.iter().map(move |&x| g.commutator(a, x)));
        normal_closure(g, seeds, &gens)
    })
}

/// `ζ_0 = 1`, `x ∈ ζ_{n+1}` iff `[x, s] ∈ ζ_n` for every generator `s`.
pub fn upper_central_series<G: Group + ?Sized>(g: &G) -> SeriesChain {
    let gens = g.generators();
    SeriesChain::iterate(
        SeriesKind::GroupUpper,
        ElementSet::identity(g.order()),
        g.order() + 1,
        |z| {
            ElementSet::from_indices(
                g.order(),
                (0..g.order()).filter(|&x| gens.iter().all(|&s| z.contains(g.commutator(x, s)))),
            )
        },
    )
}

/// Nilpotency class (least `c` with `γ_{c+1} = 1`), if nilpotent.
pub fn nilpotency_class<G: Group + ?Sized>(g: &G) -> Option<usize> {
    lower_central_series(g).terminal_index().map(|i| i - 1)
}

/// Outcome of a subset inclusion test `X ⊆ Y`, with a failing pair if any.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InclusionCheck {
    pub holds: bool,
    /// `(x, y, value)` with `value` the offending product.
    pub witness: Option<(usize, usize, usize)>,
}

/// Checks `[ζ_n(G), γ_{n-k}(G)] ⊆ ζ_k(G)` by brute force over both subgroups.
pub fn check_group_central_inclusion<G: Group + ?Sized>(g: &G, n: usize, k: usize) -> Result<InclusionCheck> {
    if n < 1 || k >= n {
        return Err(Error::BadIndices { n, k });
    }
    let upper = upper_central_series(g);
    let lower = lower_central_series(g);
    let zn = upper.term(n);
    let gamma = lower.term(n - k);
    let zk = upper.term(k);
    for x in zn {
        for y in gamma {
            let v = g.commutator(x, y);
            if !zk.contains(v) {
                return Ok(InclusionCheck {
                    holds: false,
                    witness: Some((x, y, v)),
                });
            }
        }
    }
    Ok(InclusionCheck {
        holds: true,
        witness: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups;

    fn z2_rows() -> Vec<Vec<usize>> {
        vec![vec![0, 1], vec![1, 0]]
    }

    #[test]
    fn validates_z2_and_c3xc2() {
        let g = GroupTable::validate(&z2_rows()).unwrap();
        assert_eq!(g.order(), 2);
        let c6 = groups::direct_product(&groups::cyclic(3), &groups::cyclic(2));
        let g = GroupTable::validate(&c6.rows()).unwrap();
        assert_eq!(g.order(), 6);
        assert!(g.is_abelian());
    }

    #[test]
    fn idempotent_non_identity_has_no_inverse() {
        let rows = vec![vec![0, 1, 2], vec![1, 1, 2], vec![2, 2, 0]];
        assert_eq!(GroupTable::validate(&rows), Err(Error::NoInverse(1)));
    }

    #[test]
    fn identity_is_relabelled_to_zero() {
        // Z/2 with identity stored at index 1
        let rows = vec![vec![1, 0], vec![0, 1]];
        let g = GroupTable::validate(&rows).unwrap();
        assert_eq!(g.op(0, 1), 1);
        assert_eq!(g.op(1, 1), 0);
    }

    #[test]
    fn rejects_non_associative_loop() {
        // a Latin square with identity 0 that is not a group (order 5 loop)
        let rows = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(GroupTable::validate(&rows), Err(Error::NotAssociative(..))));
    }

    #[test]
    fn rejects_missing_identity_and_ragged_rows() {
        assert_eq!(GroupTable::validate(&[vec![1, 0], vec![0, 0]]), Err(Error::NoIdentity));
        assert!(matches!(
            GroupTable::validate(&[vec![0, 1], vec![1]]),
            Err(Error::MalformedTable(_))
        ));
    }

    #[test]
    fn closures_in_c3xc2() {
        let g = groups::direct_product(&groups::cyclic(3), &groups::cyclic(2));
        // (1,0) has index 1 under the product encoding i + 3j
        assert_eq!(subgroup_closure(&g, [1]).to_vec(), vec![0, 1, 2]);
        assert_eq!(subgroup_closure(&g, []).to_vec(), vec![0]);
    }

    #[test]
    fn s3_closure_normality_center_commutators() {
        let s3 = groups::symmetric(3);
        let (inv2, inv3): (Vec<usize>, Vec<usize>) = {
            let ord = |x: usize| element_order(&s3, x);
            (
                (0..6).filter(|&x| ord(x) == 2).collect(),
                (0..6).filter(|&x| ord(x) == 3).collect(),
            )
        };
        assert_eq!(subgroup_closure(&s3, [inv2[0], inv3[0]]).len(), 6);
        let h = subgroup_closure(&s3, [inv2[0]]);
        assert_eq!(is_normal(&s3, &h), Ok(false));
        assert_eq!(is_normal(&s3, &ElementSet::identity(6)), Ok(true));
        assert_eq!(center(&s3).to_vec(), vec![0]);
        let all = ElementSet::full(6);
        let c3 = commutator_set(&s3, &all, &all);
        assert_eq!(c3, subgroup_closure(&s3, [inv3[0]]));
        assert_eq!(
            is_normal(&s3, &ElementSet::from_indices(6, [0, inv2[0], inv3[0]])),
            Err(Error::NotASubgroup)
        );
    }

    fn element_order<G: Group>(g: &G, x: usize) -> usize {
        let mut y = x;
        let mut k = 1;
        while y != 0 {
            y = g.op(y, x);
            k += 1;
        }
        k
    }

    #[test]
    fn quotients() {
        let g = groups::direct_product(&groups::cyclic(3), &groups::cyclic(2));
        let c3 = subgroup_closure(&g, [1]);
        let (q, proj) = quotient_group(&g, &c3).unwrap();
        assert_eq!(q.order(), 2);
        assert_eq!(proj[3], 1);
        let (q1, _) = quotient_group(&g, &ElementSet::identity(6)).unwrap();
        assert_eq!(q1, g);
        let (qg, _) = quotient_group(&g, &ElementSet::full(6)).unwrap();
        assert_eq!(qg.order(), 1);
        let s3 = groups::symmetric(3);
        let h = subgroup_closure(&s3, [(0..6).find(|&x| element_order(&s3, x) == 2).unwrap()]);
        assert!(matches!(quotient_group(&s3, &h), Err(Error::NotNormal)));
    }

    #[test]
    fn central_series_of_small_groups() {
        let g = groups::direct_product(&groups::cyclic(3), &groups::cyclic(2));
        let gamma = lower_central_series(&g);
        assert_eq!(gamma.orders(), vec![6, 1]);
        let s3 = groups::symmetric(3);
        let zeta = upper_central_series(&s3);
        assert_eq!(zeta.orders(), vec![1]);
        assert!(!zeta.reaches_terminal);
        let gamma = lower_central_series(&s3);
        assert_eq!(gamma.orders(), vec![6, 3]);
        assert_eq!(gamma.term(7).len(), 3);
        let d8 = groups::dihedral(4);
        assert_eq!(upper_central_series(&d8).orders(), vec![1, 2, 8]);
        assert_eq!(nilpotency_class(&d8), Some(2));
    }

    #[test]
    fn central_inclusion_examples() {
        let g = groups::cyclic(6);
        assert!(check_group_central_inclusion(&g, 3, 1).unwrap().holds);
        let s3 = groups::symmetric(3);
        assert!(check_group_central_inclusion(&s3, 1, 0).unwrap().holds);
        let d8 = groups::dihedral(4);
        assert!(check_group_central_inclusion(&d8, 2, 1).unwrap().holds);
        assert_eq!(
            check_group_central_inclusion(&d8, 2, 2),
            Err(Error::BadIndices { n: 2, k: 2 })
        );
    }
}
