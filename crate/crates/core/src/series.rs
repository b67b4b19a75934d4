//! The left, right and Smoktunowicz series, the socle and annihilator series,
//! the lower central series `Γ_n` (two constructions) and its relative version.

use rayon::prelude::*;

use crate::brace::SkewBrace;
use crate::chain::{SeriesChain, SeriesKind};
use crate::error::{Error, Result};
use crate::group::{normal_closure, Group, SubgroupBuilder};
use crate::set::ElementSet;
use crate::substructures::{
    huq_set, is_ideal, quotient_brace, star_product, star_subgroup, star_subgroup_from_generators,
};

fn cap(br: &SkewBrace) -> usize {
    br.order() + 1
}

/// `A^1 = A`, `A^{n+1} = A * A^n`.
pub fn left_series(br: &SkewBrace) -> SeriesChain {
    let all = ElementSet::full(br.order());
    SeriesChain::iterate(SeriesKind::Left, all.clone(), cap(br), |t| star_product(br, &all, t))
}

/// `A^{(1)} = A`, `A^{(n+1)} = A^{(n)} * A`.
pub fn right_series(br: &SkewBrace) -> SeriesChain {
    let all = ElementSet::full(br.order());
    SeriesChain::iterate(SeriesKind::Right, all.clone(), cap(br), |t| star_product(br, t, &all))
}

struct Term {
    set: ElementSet,
    circ_gens: Vec<usize>,
    dot_gens: Vec<usize>,
}

impl Term {
    fn new(br: &SkewBrace, set: ElementSet) -> Self {
        let (circ_gens, dot_gens) = if br.is_table() {
            (Vec::new(), Vec::new())
        } else {
            (br.circ_generators_of(&set), br.dot_generators_of(&set))
        };
        Term {
            set,
            circ_gens,
            dot_gens,
        }
    }
}

/// `A^{[1]} = A`, `A^{[n+1]} = <A^{[i]} * A^{[n+1-i]} : 1 ≤ i ≤ n>`.
///
/// Each term depends on all earlier ones, so two equal neighbours do not end
/// the chain. If the terms agree on indices `m..=2m`, every later term is built
/// from the same family of star products and the chain is constant from `m` on.
pub fn smoktunowicz_series(br: &SkewBrace) -> SeriesChain {
    let n = br.order();
    let add = br.additive();
    // terms[i] holds A^{[i+1]}
    let mut terms = vec![Term::new(br, ElementSet::full(n))];
    let limit = 2 * cap(br);
    while terms.len() < limit {
        let next = terms.len() + 1;
        let mut b = SubgroupBuilder::new(&add);
        for i in 1..next {
            let (x, y) = (&terms[i - 1], &terms[next - i - 1]);
            let s = if br.is_table() {
                star_subgroup(br, &x.set, &y.set)
            } else {
                star_subgroup_from_generators(br, &x.circ_gens, &y.dot_gens)
            };
            b.extend(s.iter());
        }
        terms.push(Term::new(br, b.into_set()));
        let last = terms.len();
        if last % 2 == 0 {
            let m = last / 2;
            if terms[m - 1..].iter().all(|t| t.set == terms[last - 1].set) {
                break;
            }
        }
    }
    let mut sets: Vec<ElementSet> = terms.into_iter().map(|t| t.set).collect();
    while sets.len() > 1 && sets[sets.len() - 1] == sets[sets.len() - 2] {
        sets.pop();
    }
    SeriesChain::finish(SeriesKind::Smoktunowicz, sets)
}

/// Elements the lifted predicates are quantified over.
fn quantifier_range(br: &SkewBrace) -> Vec<usize> {
    if br.is_table() {
        (0..br.order()).collect()
    } else {
        br.generators().to_vec()
    }
}

fn lift(br: &SkewBrace, prev: &ElementSet, range: &[usize], annihilator: bool) -> ElementSet {
    let n = br.order();
    let members: Vec<usize> = (0..n)
        .into_par_iter()
        .filter(|&x| {
            range.iter().all(|&a| {
                prev.contains(br.star(x, a))
                    && prev.contains(br.dot_commutator(x, a))
                    && (!annihilator || prev.contains(br.circ_commutator(x, a)))
            })
        })
        .collect();
    ElementSet::from_indices(n, members)
}

/// `Soc(A) = ker λ ∩ Z(A,·)`.
pub fn socle(br: &SkewBrace) -> ElementSet {
    lift(br, &ElementSet::identity(br.order()), &quantifier_range(br), false)
}

/// `Ann(A) = Soc(A) ∩ Z(A,∘)`.
pub fn annihilator(br: &SkewBrace) -> ElementSet {
    lift(br, &ElementSet::identity(br.order()), &quantifier_range(br), true)
}

/// `Soc_0 = 1`, `Soc_{n+1}/Soc_n = Soc(A/Soc_n)`.
pub fn socle_series(br: &SkewBrace) -> SeriesChain {
    let range = quantifier_range(br);
    SeriesChain::iterate(SeriesKind::Socle, ElementSet::identity(br.order()), cap(br), |t| {
        lift(br, t, &range, false)
    })
}

/// `Ann_0 = 1`, `Ann_{n+1}/Ann_n = Ann(A/Ann_n)`.
pub fn annihilator_series(br: &SkewBrace) -> SeriesChain {
    let range = quantifier_range(br);
    SeriesChain::iterate(
        SeriesKind::Annihilator,
        ElementSet::identity(br.order()),
        cap(br),
        |t| lift(br, t, &range, true),
    )
}

/// `A_1 = A`, `A_{n+1} = A_n / Soc(A_n)`, until the socle is trivial.
pub fn socle_series_sv(br: &SkewBrace) -> Result<Vec<SkewBrace>> {
    let mut out = vec![br.clone()];
    loop {
        let cur = out.last().unwrap();
        let s = socle(cur);
        if s.is_identity() {
            return Ok(out);
        }
        let (q, _) = quotient_brace(cur, &s)?;
        out.push(q);
    }
}

/// `Γ_1 = A`, `Γ_{n+1} = <Γ_n * A, A * Γ_n, [A, Γ_n]>`.
pub fn gamma_series(br: &SkewBrace) -> SeriesChain {
    let n = br.order();
    let all = ElementSet::full(n);
    let add = br.additive();
    if br.is_table() {
        return SeriesChain::iterate(SeriesKind::Gamma, all.clone(), cap(br), |t| {
            let mut b = SubgroupBuilder::new(&add);
            for x in t {
                for a in 0..n {
                    b.add(br.star(x, a));
                    b.add(br.star(a, x));
                    b.add(add.commutator(a, x));
                }
            }
            b.into_set()
        });
    }
    // Γ_{n+1} is normal in (A,·), so it is the normal closure of the
    // generator-level seeds of its three parts.
    let a_circ = br.circ_generators().to_vec();
    let a_dot = br.dot_generators().to_vec();
    SeriesChain::iterate(SeriesKind::Gamma, all, cap(br), |t| {
        let t_circ = br.circ_generators_of(t);
        let t_dot = br.dot_generators_of(t);
        let mut seeds = Vec::new();
        for &x in &t_circ {
            for &a in &a_dot {
                seeds.push(br.star(x, a));
            }
        }
        for &a in &a_circ {
            for &x in &t_dot {
                seeds.push(br.star(a, x));
            }
        }
        for &a in &a_dot {
            for &x in &t_dot {
                seeds.push(add.commutator(a, x));
            }
        }
        normal_closure(&add, seeds, &a_dot)
    })
}

fn require_table(br: &SkewBrace) -> Result<()> {
    if br.is_table() {
        Ok(())
    } else {
        Err(Error::NeedsTable)
    }
}

/// `Γ'_1 = A`, `Γ'_{n+1} = [A, Γ'_n]^A` (Huq commutator).
pub fn gamma_prime_series(br: &SkewBrace) -> Result<SeriesChain> {
    require_table(br)?;
    let all = ElementSet::full(br.order());
    Ok(SeriesChain::iterate(
        SeriesKind::GammaPrime,
        all.clone(),
        cap(br),
        |t| huq_set(br, &all, t),
    ))
}

/// `Γ_1(I)^A = I`, `Γ_{n+1}(I)^A = [I, Γ_n(I)^A]^A`.
pub fn relative_gamma_series(br: &SkewBrace, ideal: &ElementSet) -> Result<SeriesChain> {
    require_table(br)?;
    if !is_ideal(br, ideal) {
        return Err(Error::NotAnIdeal);
    }
    Ok(SeriesChain::iterate(
        SeriesKind::RelativeGamma,
        ideal.clone(),
        cap(br),
        |t| huq_set(br, ideal, t),
    ))
}

/// Every series that is defined for the backing of `br`.
pub fn all_series(br: &SkewBrace) -> Vec<SeriesChain> {
    let mut out = vec![
        left_series(br),
        right_series(br),
        smoktunowicz_series(br),
        socle_series(br),
        annihilator_series(br),
        gamma_series(br),
    ];
    if let Ok(g) = gamma_prime_series(br) {
        out.push(g);
    }
    out.push(crate::group::lower_central_series(&br.additive()));
    out.push(crate::group::upper_central_series(&br.additive()));
    out
}
