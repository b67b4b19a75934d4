//! Sub-skew braces, left ideals, ideals, star products of subsets, ideal
//! generation, the Huq commutator and quotient braces.

use std::collections::HashSet;

use serde::Serialize;

use crate::brace::SkewBrace;
use crate::error::{Error, Result};
use crate::group::{
    cosets, greedy_generators, is_subgroup, normal_closure, normalizes, Group, GroupTable, SubgroupBuilder,
    QUOTIENT_LIMIT,
};
use crate::set::ElementSet;

/// Largest brace for which all ideals are enumerated.
pub const IDEAL_ENUMERATION_LIMIT: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IdealKind {
    Subbrace,
    LeftIdeal,
    Ideal,
}

/// A subset together with the strongest substructure kind it was verified to be.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealTag {
    pub kind: IdealKind,
    pub set: ElementSet,
}

impl IdealTag {
    /// Classifies `s`, or returns `None` if it is not even a sub-skew brace.
    pub fn classify(br: &SkewBrace, s: &ElementSet) -> Option<Self> {
        let kind = if is_ideal(br, s) {
            IdealKind::Ideal
        } else if is_left_ideal(br, s) {
            IdealKind::LeftIdeal
        } else if is_subbrace(br, s) {
            IdealKind::Subbrace
        } else {
            return None;
        };
        Some(IdealTag { kind, set: s.clone() })
    }
}

pub fn is_subbrace(br: &SkewBrace, s: &ElementSet) -> bool {
    is_subgroup(&br.additive(), s) && is_subgroup(&br.multiplicative(), s)
}

/// A `·`-subgroup with `λ_a(S) ⊆ S` for all `a`.
///
/// `λ` is a homomorphism from `(A,∘)` into `Aut(A,·)`, so it is enough to test
/// `∘`-generators `a` against `·`-generators of `S`.
pub fn is_left_ideal(br: &SkewBrace, s: &ElementSet) -> bool {
    if !is_subgroup(&br.additive(), s) {
        return false;
    }
    let sgens = greedy_generators(&br.additive(), s.iter());
    br.circ_generators()
        .iter()
        .all(|&a| sgens.iter().all(|&x| s.contains(br.lambda(a, x))))
}

/// A left ideal that is normal in both `(A,·)` and `(A,∘)`.
pub fn is_ideal(br: &SkewBrace, s: &ElementSet) -> bool {
    is_left_ideal(br, s)
        && normalizes(&br.additive(), s, br.dot_generators())
        && is_subgroup(&br.multiplicative(), s)
        && normalizes(&br.multiplicative(), s, br.circ_generators())
}

/// `a·I = a∘I` as sets.
pub fn coset_agreement(br: &SkewBrace, ideal: &ElementSet, a: usize) -> Result<bool> {
    if !is_left_ideal(br, ideal) {
        return Err(Error::NotALeftIdeal);
    }
    let n = br.order();
    let left = ElementSet::from_indices(n, ideal.iter().map(|i| br.dot(a, i)));
    let right = ElementSet::from_indices(n, ideal.iter().map(|i| br.circ(a, i)));
    Ok(left == right)
}

/// `X*Y`: the `·`-subgroup generated by all `x*y`, over every pair.
pub fn star_subgroup(br: &SkewBrace, xs: &ElementSet, ys: &ElementSet) -> ElementSet {
    let add = br.additive();
    let mut b = SubgroupBuilder::new(&add);
    for x in xs {
        for y in ys {
            b.add(br.star(x, y));
        }
    }
    b.into_set()
}

/// `X*Y` from generators: `S` generating `X` under `∘`, `T` generating `Y` under `·`.
///
/// Valid when `Y` is stable under every `λ_x`, `x ∈ X` (e.g. `Y` a left ideal).
/// Then `X*Y` is the closure of `{s*t}` under `·` and conjugation by `T`: the
/// identity `a*(y·z) = (a*y)·y·(a*z)·y^{-1}` handles words in `T`, and
/// `λ_{s∘s'}(y)y^{-1} = (s*λ_{s'}(y))·(s'*y)` handles words in `S`.
pub fn star_subgroup_from_generators(br: &SkewBrace, s: &[usize], t: &[usize]) -> ElementSet {
    let seeds = s.iter().flat_map(|&x| t.iter().map(move |&y| br.star(x, y)));
    normal_closure(&br.additive(), seeds, t)
}

/// `X*Y` using the cheapest exact method for the backing.
///
/// Table braces use all pairs. Formula braces use the generator route, which
/// requires `X` to be a `∘`-subgroup and `Y` a left ideal.
pub fn star_product(br: &SkewBrace, xs: &ElementSet, ys: &ElementSet) -> ElementSet {
    if br.is_table() {
        star_subgroup(br, xs, ys)
    } else {
        let s = br.circ_generators_of(xs);
        let t = br.dot_generators_of(ys);
        star_subgroup_from_generators(br, &s, &t)
    }
}

/// The least ideal containing `s`.
pub fn ideal_closure(br: &SkewBrace, s: impl IntoIterator<Item = usize>) -> ElementSet {
    let add = br.additive();
    let mul = br.multiplicative();
    let mut b = SubgroupBuilder::new(&add);
    b.extend(s);
    let gens = br.generators().to_vec();
    let circ_gens = br.circ_generators().to_vec();
    loop {
        // λ images and ·-conjugates: both act by ·-automorphisms, so generators suffice
        let mut done = 0;
        while done < b.generators().len() {
            let g = b.generators()[done];
            done += 1;
            for &a in &gens {
                b.add(br.lambda(a, g));
                b.add(add.conj(a, g));
            }
        }
        let current = b.set().clone();
        let mut grew = false;
        for x in &current {
            for &a in &circ_gens {
                grew |= b.add(mul.conj(a, x));
            }
        }
        if !grew {
            break;
        }
    }
    b.into_set()
}

fn huq_generators(br: &SkewBrace, i: &ElementSet, j: &ElementSet) -> Vec<usize> {
    let mut seeds = Vec::new();
    for x in i {
        for y in j {
            seeds.push(br.dot_commutator(x, y));
            seeds.push(br.circ_commutator(x, y));
            seeds.push(br.star(x, y));
        }
    }
    seeds
}

/// `[I,J]^A = <[I,J], [I,J]_∘, I*J>^A` without the consistency checks.
pub(crate) fn huq_set(br: &SkewBrace, i: &ElementSet, j: &ElementSet) -> ElementSet {
    ideal_closure(br, huq_generators(br, i, j))
}

/// The Huq commutator of two ideals, with both cross-checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HuqCommutator {
    pub set: ElementSet,
    /// `<[I,J], I*J, J*I>^A` equals `set`.
    pub alternative_agrees: bool,
    /// `[J,I]^A` equals `set`.
    pub symmetric: bool,
}

pub fn huq_commutator(br: &SkewBrace, i: &ElementSet, j: &ElementSet) -> Result<HuqCommutator> {
    if !is_ideal(br, i) || !is_ideal(br, j) {
        return Err(Error::NotAnIdeal);
    }
    let set = huq_set(br, i, j);
    let mut alt = Vec::new();
    for x in i {
        for y in j {
            alt.push(br.dot_commutator(x, y));
            alt.push(br.star(x, y));
            alt.push(br.star(y, x));
        }
    }
    let alternative = ideal_closure(br, alt);
    let reversed = huq_set(br, j, i);
    Ok(HuqCommutator {
        alternative_agrees: alternative == set,
        symmetric: reversed == set,
        set,
    })
}

/// `A/I` as a table brace on minimal coset representatives, with the projection.
pub fn quotient_brace(br: &SkewBrace, ideal: &ElementSet) -> Result<(SkewBrace, Vec<usize>)> {
    if !is_ideal(br, ideal) {
        return Err(Error::NotAnIdeal);
    }
    let q = br.order() / ideal.len();
    if q > QUOTIENT_LIMIT {
        return Err(Error::QuotientTooLarge {
            order: q,
            limit: QUOTIENT_LIMIT,
        });
    }
    let c = cosets(&br.additive(), ideal);
    let dot = GroupTable::from_fn_unchecked(q, |i, j| c.projection[br.dot(c.reps[i], c.reps[j])]);
    let circ = GroupTable::from_fn_unchecked(q, |i, j| c.projection[br.circ(c.reps[i], c.reps[j])]);
    Ok((SkewBrace::from_tables_unchecked(dot, circ), c.projection))
}

/// A sub-skew brace as a table brace on its own, with the embedding.
pub fn sub_brace(br: &SkewBrace, s: &ElementSet) -> Result<(SkewBrace, Vec<usize>)> {
    if !is_subbrace(br, s) {
        return Err(Error::NotASubgroup);
    }
    let elems = s.to_vec();
    let mut index = vec![usize::MAX; br.order()];
    for (i, &x) in elems.iter().enumerate() {
        index[x] = i;
    }
    let m = elems.len();
    let dot = GroupTable::from_fn_unchecked(m, |i, j| index[br.dot(elems[i], elems[j])]);
    let circ = GroupTable::from_fn_unchecked(m, |i, j| index[br.circ(elems[i], elems[j])]);
    Ok((SkewBrace::from_tables_unchecked(dot, circ), elems))
}

/// All subgroups of a group of order at most [`IDEAL_ENUMERATION_LIMIT`].
pub fn all_subgroups<G: Group + ?Sized>(g: &G) -> Result<Vec<ElementSet>> {
    let n = g.order();
    if n > IDEAL_ENUMERATION_LIMIT {
        return Err(Error::TooLargeForIdealEnumeration {
            order: n,
            limit: IDEAL_ENUMERATION_LIMIT,
        });
    }
    let trivial = ElementSet::identity(n);
    let mut seen: HashSet<ElementSet> = HashSet::from([trivial.clone()]);
    let mut queue = vec![trivial];
    let mut head = 0;
    while head < queue.len() {
        let h = queue[head].clone();
        head += 1;
        for x in 0..n {
            if h.contains(x) {
                continue;
            }
            let mut b = SubgroupBuilder::new(g);
            b.extend(h.iter());
            b.add(x);
            let k = b.into_set();
            if seen.insert(k.clone()) {
                queue.push(k);
            }
        }
    }
    queue.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.to_vec().cmp(&b.to_vec())));
    Ok(queue)
}

/// All ideals of a small brace, ordered by size.
pub fn all_ideals(br: &SkewBrace) -> Result<Vec<ElementSet>> {
    Ok(all_subgroups(&br.additive())?
        .into_iter()
        .filter(|s| is_ideal(br, s))
        .collect())
}

/// All left ideals of a small brace, ordered by size.
pub fn all_left_ideals(br: &SkewBrace) -> Result<Vec<ElementSet>> {
    Ok(all_subgroups(&br.additive())?
        .into_iter()
        .filter(|s| is_left_ideal(br, s))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brace::{build_almost_trivial, build_trivial};
    use crate::catalog::{make_pq_brace, PqVariant};
    use crate::group::subgroup_closure;
    use crate::groups;

    fn pq_i() -> SkewBrace {
        make_pq_brace(3, 2, 2, PqVariant::I).unwrap()
    }

    fn c3x1() -> ElementSet {
        ElementSet::from_indices(6, [0, 1, 2])
    }

    fn involution(g: &GroupTable) -> usize {
        (1..g.order()).find(|&x| g.op(x, x) == 0).unwrap()
    }

    #[test]
    fn predicates_on_examples() {
        let a = pq_i();
        assert!(is_ideal(&a, &c3x1()));
        let s3 = groups::symmetric(3);
        let t = subgroup_closure(&s3, [involution(&s3)]);
        let triv = build_trivial(&s3);
        assert!(is_left_ideal(&triv, &t));
        assert!(!is_ideal(&triv, &t));
        assert_eq!(IdealTag::classify(&triv, &t).unwrap().kind, IdealKind::LeftIdeal);
        let almost = build_almost_trivial(&s3);
        assert!(!is_left_ideal(&almost, &t));
        assert!(is_subbrace(&almost, &t));
        assert!(is_subbrace(&triv, &ElementSet::from_indices(6, [0, 1])));
        assert!(!is_subbrace(&triv, &ElementSet::from_indices(6, [0, 3])));
    }

    #[test]
    fn cosets_agree_for_left_ideals() {
        let a = pq_i();
        assert_eq!(coset_agreement(&a, &c3x1(), 4), Ok(true));
        for x in 0..6 {
            assert_eq!(coset_agreement(&a, &ElementSet::identity(6), x), Ok(true));
            assert_eq!(coset_agreement(&a, &ElementSet::full(6), x), Ok(true));
        }
        assert_eq!(
            coset_agreement(&a, &ElementSet::from_indices(6, [0, 1]), 0),
            Err(Error::NotALeftIdeal)
        );
    }

    #[test]
    fn star_subgroups_of_pq_i() {
        let a = pq_i();
        let all = ElementSet::full(6);
        assert_eq!(star_subgroup(&a, &all, &all), c3x1());
        assert!(star_subgroup(&a, &c3x1(), &all).is_identity());
        let triv = build_trivial(&groups::symmetric(3));
        assert!(star_subgroup(&triv, &all, &all).is_identity());
        // generator route agrees
        let s = a.circ_generators().to_vec();
        let t = a.dot_generators().to_vec();
        assert_eq!(star_subgroup_from_generators(&a, &s, &t), c3x1());
    }

    #[test]
    fn ideal_closures() {
        let a = pq_i();
        assert!(ideal_closure(&a, []).is_identity());
        assert_eq!(ideal_closure(&a, [1]), c3x1());
        let s3 = groups::symmetric(3);
        let triv = build_trivial(&s3);
        assert!(ideal_closure(&triv, [involution(&s3)]).is_full());
    }

    #[test]
    fn huq_examples() {
        let a = pq_i();
        let all = ElementSet::full(6);
        let c = huq_commutator(&a, &all, &all).unwrap();
        assert_eq!(c.set, c3x1());
        assert!(c.alternative_agrees && c.symmetric);
        let one = ElementSet::identity(6);
        assert!(huq_commutator(&a, &one, &all).unwrap().set.is_identity());
        let ab = build_trivial(&groups::cyclic(6));
        assert!(huq_commutator(&ab, &all, &all).unwrap().set.is_identity());
        assert_eq!(
            huq_commutator(&a, &ElementSet::from_indices(6, [0, 3]), &all),
            Err(Error::NotAnIdeal)
        );
    }

    #[test]
    fn quotients_of_pq_i() {
        let a = pq_i();
        let (q, proj) = quotient_brace(&a, &c3x1()).unwrap();
        assert_eq!(q.order(), 2);
        assert_eq!(q.star(1, 1), 0);
        assert_eq!(q.circ(1, 1), q.dot(1, 1));
        for x in 0..6 {
            for y in 0..6 {
                assert_eq!(proj[a.dot(x, y)], q.dot(proj[x], proj[y]));
                assert_eq!(proj[a.circ(x, y)], q.circ(proj[x], proj[y]));
                assert_eq!(proj[a.star(x, y)], q.star(proj[x], proj[y]));
            }
        }
        let (same, _) = quotient_brace(&a, &ElementSet::identity(6)).unwrap();
        assert_eq!(same.tables(), a.tables());
        let (one, _) = quotient_brace(&a, &ElementSet::full(6)).unwrap();
        assert_eq!(one.order(), 1);
        assert!(matches!(
            quotient_brace(&a, &ElementSet::from_indices(6, [0, 3])),
            Err(Error::NotAnIdeal)
        ));
    }

    #[test]
    fn subgroup_counts() {
        assert_eq!(all_subgroups(&groups::symmetric(3)).unwrap().len(), 6);
        assert_eq!(all_subgroups(&groups::by_name("C2xC2xC2").unwrap()).unwrap().len(), 16);
        assert_eq!(all_subgroups(&groups::dihedral(4)).unwrap().len(), 10);
        assert_eq!(all_ideals(&pq_i()).unwrap().len(), 3);
        assert!(matches!(
            all_subgroups(&groups::cyclic(65)),
            Err(Error::TooLargeForIdealEnumeration { .. })
        ));
    }
}
