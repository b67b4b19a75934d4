//! Nilpotency classes, the equivalence theorems as executable cross-checks,
//! the eight star-product inclusions, the order-`p^8` counterexample,
//! relative annihilator nilpotency and the Fitting ideal.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::brace::{check_identities, IdentityReport, SkewBrace};
use crate::catalog::make_counterexample_f;
use crate::chain::SeriesChain;
use crate::error::{Error, Result};
use crate::group::{lower_central_series, subgroup_closure, InclusionCheck};
use crate::series;
use crate::set::ElementSet;
use crate::substructures::{all_ideals, ideal_closure, is_ideal, sub_brace};

/// Every series of a brace, computed once.
#[derive(Debug, Clone)]
pub struct SeriesBundle {
    pub left: SeriesChain,
    pub right: SeriesChain,
    pub smoktunowicz: SeriesChain,
    pub socle: SeriesChain,
    pub annihilator: SeriesChain,
    pub gamma: SeriesChain,
    /// Only for table braces.
    pub gamma_prime: Option<SeriesChain>,
    pub add_lower: SeriesChain,
    pub mult_lower: SeriesChain,
}

impl SeriesBundle {
    pub fn compute(br: &SkewBrace) -> Self {
        let ((left, right), (smoktunowicz, (socle, annihilator))) = rayon::join(
            || rayon::join(|| series::left_series(br), || series::right_series(br)),
            || {
                rayon::join(
                    || series::smoktunowicz_series(br),
                    || rayon::join(|| series::socle_series(br), || series::annihilator_series(br)),
                )
            },
        );
        let ((gamma, gamma_prime), (add_lower, mult_lower)) = rayon::join(
            || rayon::join(|| series::gamma_series(br), || series::gamma_prime_series(br).ok()),
            || {
                rayon::join(
                    || lower_central_series(&br.additive()),
                    || lower_central_series(&br.multiplicative()),
                )
            },
        );
        SeriesBundle {
            left,
            right,
            smoktunowicz,
            socle,
            annihilator,
            gamma,
            gamma_prime,
            add_lower,
            mult_lower,
        }
    }

    /// `(name, chain)` pairs in a fixed order.
    pub fn named(&self) -> Vec<(&'static str, &SeriesChain)> {
        let mut v = vec![
            ("left", &self.left),
            ("right", &self.right),
            ("smoktunowicz", &self.smoktunowicz),
            ("socle", &self.socle),
            ("annihilator", &self.annihilator),
            ("gamma", &self.gamma),
        ];
        if let Some(g) = &self.gamma_prime {
            v.push(("gamma_prime", g));
        }
        v.push(("add_group_lower", &self.add_lower));
        v.push(("mult_group_lower", &self.mult_lower));
        v
    }
}

/// Least `n` with `A^{n+1} = 1` for a descending chain starting at index 1.
fn descending_class(c: &SeriesChain) -> Option<usize> {
    c.terminal_index().map(|i| i - 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NilpotencyProfile {
    pub left: Option<usize>,
    pub right: Option<usize>,
    pub socle: Option<usize>,
    pub annihilator: Option<usize>,
    pub add_group_nilpotent: Option<usize>,
    pub mult_group_nilpotent: Option<usize>,
}

impl NilpotencyProfile {
    pub fn from_series(s: &SeriesBundle) -> Self {
        NilpotencyProfile {
            left: descending_class(&s.left),
            right: descending_class(&s.right),
            socle: s.socle.terminal_index(),
            annihilator: s.annihilator.terminal_index(),
            add_group_nilpotent: descending_class(&s.add_lower),
            mult_group_nilpotent: descending_class(&s.mult_lower),
        }
    }
}

pub fn nilpotency_profile(br: &SkewBrace) -> NilpotencyProfile {
    NilpotencyProfile::from_series(&SeriesBundle::compute(br))
}

/// Both sides of one biconditional, evaluated independently.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Biconditional {
    pub name: &'static str,
    pub lhs: bool,
    pub rhs: bool,
    pub agree: bool,
}

impl Biconditional {
    fn new(name: &'static str, lhs: bool, rhs: bool) -> Self {
        Biconditional {
            name,
            lhs,
            rhs,
            agree: lhs == rhs,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquivalenceReport {
    pub checks: Vec<Biconditional>,
    /// `Ann_{n-1} = A ⟺ Γ_n = 1` index by index, so the classes differ by one.
    pub class_correspondence: bool,
    /// `Γ_n = Γ'_n` for all `n` (absent for formula braces).
    pub gamma_equals_gamma_prime: Option<bool>,
    pub agree: bool,
}

pub fn check_equivalence_with(s: &SeriesBundle) -> EquivalenceReport {
    let p = NilpotencyProfile::from_series(s);
    let (left, right) = (p.left.is_some(), p.right.is_some());
    let (add, mult) = (p.add_group_nilpotent.is_some(), p.mult_group_nilpotent.is_some());
    let checks = vec![
        Biconditional::new("smoktunowicz", s.smoktunowicz.reaches_terminal, left && right),
        Biconditional::new("socle", right && add, p.socle.is_some()),
        Biconditional::new("annihilator_a_b", left && right && add, right && add && mult),
        Biconditional::new("annihilator_b_c", right && add && mult, p.annihilator.is_some()),
        Biconditional::new("annihilator_gamma", p.annihilator.is_some(), s.gamma.reaches_terminal),
    ];
    let horizon = s.annihilator.stabilized_at.max(s.gamma.stabilized_at) + 2;
    let class_correspondence =
        (1..=horizon).all(|n| s.annihilator.term(n - 1).is_full() == s.gamma.term(n).is_identity());
    let gamma_equals_gamma_prime = s.gamma_prime.as_ref().map(|g| g.terms == s.gamma.terms);
    let agree = checks.iter().all(|c| c.agree) && class_correspondence && gamma_equals_gamma_prime != Some(false);
    EquivalenceReport {
        checks,
        class_correspondence,
        gamma_equals_gamma_prime,
        agree,
    }
}

pub fn check_equivalence_theorems(br: &SkewBrace) -> EquivalenceReport {
    check_equivalence_with(&SeriesBundle::compute(br))
}

/// Left nilpotent, nilpotent `(A,·)` and `A^3 = 1` together force right nilpotency.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BkpReport {
    pub hypothesis: bool,
    pub right_nilpotent: bool,
    pub holds: bool,
}

pub fn check_bkp_with(s: &SeriesBundle) -> BkpReport {
    let hypothesis = s.left.reaches_terminal && s.add_lower.reaches_terminal && s.left.term(3).is_identity();
    let right_nilpotent = s.right.reaches_terminal;
    BkpReport {
        hypothesis,
        right_nilpotent,
        holds: !hypothesis || right_nilpotent,
    }
}

pub fn check_bkp(br: &SkewBrace) -> BkpReport {
    check_bkp_with(&SeriesBundle::compute(br))
}

/// The eight star-product analogues of `[ζ_n, γ_{n-k}] ⊆ ζ_k`.
///
/// A: `Soc_n * A^{n-k}`, B: `Soc_n * A^{(n-k)}`, C: `A^{n-k} * Soc_n`,
/// D: `A^{(n-k)} * Soc_n`, each `⊆ Soc_k`; E–H are the same with `Ann`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum InclusionLabel {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    H,
}

impl InclusionLabel {
    pub const ALL: [InclusionLabel; 8] = [
        InclusionLabel::A,
        InclusionLabel::B,
        InclusionLabel::C,
        InclusionLabel::D,
        InclusionLabel::E,
        InclusionLabel::F,
        InclusionLabel::G,
        InclusionLabel::H,
    ];

    fn uses_annihilator(self) -> bool {
        matches!(self, Self::E | Self::F | Self::G | Self::H)
    }

    fn uses_right_series(self) -> bool {
        matches!(self, Self::B | Self::D | Self::F | Self::H)
    }

    /// Whether the ascending term is the left factor of the star product.
    fn ascending_on_left(self) -> bool {
        matches!(self, Self::A | Self::B | Self::E | Self::F)
    }
}

impl fmt::Display for InclusionLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for InclusionLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|l| l.to_string().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Parse(format!("unknown inclusion label {s:?}")))
    }
}

/// Tests `X * Y ⊆ T` for a left ideal `Y` and an ideal `T`.
///
/// `T` is normal in `(A,·)`, so it contains `X*Y` as soon as it contains every
/// `x*y`; for formula braces `x` and `y` range over generators of `X` and `Y`.
pub fn star_inclusion(br: &SkewBrace, x: &ElementSet, y: &ElementSet, target: &ElementSet) -> InclusionCheck {
    let (xs, ys) = if br.is_table() {
        (x.to_vec(), y.to_vec())
    } else {
        (br.circ_generators_of(x), br.dot_generators_of(y))
    };
    for &a in &xs {
        for &b in &ys {
            let v = br.star(a, b);
            if !target.contains(v) {
                return InclusionCheck {
                    holds: false,
                    witness: Some((a, b, v)),
                };
            }
        }
    }
    InclusionCheck {
        holds: true,
        witness: None,
    }
}

pub fn check_inclusion_with(
    br: &SkewBrace,
    s: &SeriesBundle,
    label: InclusionLabel,
    n: usize,
    k: usize,
) -> Result<InclusionCheck> {
    if n < 1 || k >= n {
        return Err(Error::BadIndices { n, k });
    }
    let asc = if label.uses_annihilator() {
        &s.annihilator
    } else {
        &s.socle
    };
    let desc = if label.uses_right_series() { &s.right } else { &s.left };
    let (upper, lower, target) = (asc.term(n), desc.term(n - k), asc.term(k));
    Ok(if label.ascending_on_left() {
        star_inclusion(br, upper, lower, target)
    } else {
        star_inclusion(br, lower, upper, target)
    })
}

pub fn check_inclusion(br: &SkewBrace, label: InclusionLabel, n: usize, k: usize) -> Result<InclusionCheck> {
    check_inclusion_with(br, &SeriesBundle::compute(br), label, n, k)
}

/// `(label, n, k, result)` for every label and every `1 ≤ n ≤ max_n`, `0 ≤ k < n`.
pub fn inclusion_sweep(
    br: &SkewBrace,
    s: &SeriesBundle,
    max_n: usize,
) -> Vec<(InclusionLabel, usize, usize, InclusionCheck)> {
    let mut out = Vec::new();
    for label in InclusionLabel::ALL {
        for n in 1..=max_n {
            for k in 0..n {
                let r = check_inclusion_with(br, s, label, n, k).expect("valid indices");
                out.push((label, n, k, r));
            }
        }
    }
    out
}

/// Outcome of rebuilding the order-`p^8` counterexample to inclusion (F).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CounterexampleReport {
    pub p: u64,
    pub order: usize,
    pub right_2_matches: bool,
    pub right_3_matches: bool,
    pub right_3_order: usize,
    /// `Ann_i ⊇ <e_1..e_i> × <e_1..e_i>` for `i = 1, 2, 3`.
    pub ann_lower_bounds: [bool; 3],
    /// Exact orders of `Ann_0 .. Ann_3`, reported only.
    pub ann_orders: Vec<usize>,
    /// `(e_3, 0) * (0, e_2)` as coordinate vectors.
    pub star_value: (Vec<u32>, Vec<u32>),
    pub star_is_e1: bool,
    pub inclusion_f: InclusionCheck,
    pub holds: bool,
}

fn subspace_pair(br: &SkewBrace, b_dims: usize, c_dims: usize) -> ElementSet {
    let f = br.formula().expect("formula brace");
    let p = f.prime();
    let gens = (0..b_dims)
        .map(|i| f.join(crate::fp::basis_index(i, p), 0))
        .chain((0..c_dims).map(|j| f.join(0, crate::fp::basis_index(j, p))));
    subgroup_closure(&br.additive(), gens)
}

pub fn verify_counterexample_f(p: u64, seed: u64) -> Result<CounterexampleReport> {
    let br = make_counterexample_f(p, seed)?;
    let f = br.formula().expect("formula brace");
    let pu = f.prime();
    let (right, ann) = rayon::join(|| series::right_series(&br), || series::annihilator_series(&br));
    let right_2_matches = *right.term(2) == subspace_pair(&br, 3, 2);
    let right_3_matches = *right.term(3) == subspace_pair(&br, 0, 2);
    let mut ann_lower_bounds = [false; 3];
    for (i, ok) in ann_lower_bounds.iter_mut().enumerate() {
        let level = i + 1;
        let term = ann.term(level);
        *ok = (0..level).all(|d| {
            let e = crate::fp::basis_index(d, pu);
            term.contains(f.join(e, 0)) && term.contains(f.join(0, e))
        });
    }
    let x = f.join(crate::fp::basis_index(2, pu), 0);
    let y = f.join(0, crate::fp::basis_index(1, pu));
    let v = br.star(x, y);
    let star_value = f.coordinates(v);
    let star_is_e1 = v == f.join(0, crate::fp::basis_index(0, pu));
    let inclusion_f = star_inclusion(&br, ann.term(3), right.term(3), ann.term(0));
    let holds =
        right_2_matches && right_3_matches && ann_lower_bounds.iter().all(|&b| b) && star_is_e1 && !inclusion_f.holds;
    Ok(CounterexampleReport {
        p,
        order: br.order(),
        right_2_matches,
        right_3_matches,
        right_3_order: right.term(3).len(),
        ann_lower_bounds,
        ann_orders: (0..=3).map(|i| ann.term(i).len()).collect(),
        star_value,
        star_is_e1,
        inclusion_f,
        holds,
    })
}

/// Least `n` with `Γ_n(I)^A = 1`, if any.
pub fn is_rel_ann_nilpotent(br: &SkewBrace, ideal: &ElementSet) -> Result<Option<usize>> {
    Ok(series::relative_gamma_series(br, ideal)?.terminal_index())
}

/// The ideal generated by every ideal that is annihilator nilpotent relative to `A`.
pub fn fitting_ideal(br: &SkewBrace) -> Result<ElementSet> {
    let mut gens = Vec::new();
    for i in all_ideals(br)? {
        if is_rel_ann_nilpotent(br, &i)?.is_some() {
            gens.extend(i.iter());
        }
    }
    Ok(ideal_closure(br, gens))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FittingReport {
    pub hypothesis_met: bool,
    pub m: Option<usize>,
    pub n: Option<usize>,
    /// Least `r` with `Γ_r(IJ)^A = 1`.
    pub product_class: Option<usize>,
    /// `Γ_{m+n-1}(IJ)^A = 1`; vacuously true when the hypothesis fails.
    pub holds: bool,
}

pub fn check_fitting_theorem(br: &SkewBrace, i: &ElementSet, j: &ElementSet) -> Result<FittingReport> {
    let m = is_rel_ann_nilpotent(br, i)?;
    let n = is_rel_ann_nilpotent(br, j)?;
    let ij = subgroup_closure(&br.additive(), i.iter().chain(j.iter()));
    if !is_ideal(br, &ij) {
        return Err(Error::NotAnIdeal);
    }
    let chain = series::relative_gamma_series(br, &ij)?;
    let product_class = chain.terminal_index();
    let (hypothesis_met, holds) = match (m, n) {
        (Some(m), Some(n)) => (true, chain.term(m + n - 1).is_identity()),
        _ => (false, true),
    };
    Ok(FittingReport {
        hypothesis_met,
        m,
        n,
        product_class,
        holds,
    })
}

/// The ideal as a brace in its own right is annihilator nilpotent.
pub fn ideal_is_annihilator_nilpotent(br: &SkewBrace, ideal: &ElementSet) -> Result<bool> {
    let (sub, _) = sub_brace(br, ideal)?;
    Ok(series::annihilator_series(&sub).reaches_terminal)
}

/// Everything the `analyze` command reports about one brace.
#[derive(Debug, Clone)]
pub struct Analysis {
    pub series: SeriesBundle,
    pub profile: NilpotencyProfile,
    pub socle: ElementSet,
    pub annihilator: ElementSet,
    pub equivalence: EquivalenceReport,
    pub bkp: BkpReport,
    pub identities: IdentityReport,
}

pub fn analyze(br: &SkewBrace, seed: u64, samples: usize) -> Analysis {
    let series = SeriesBundle::compute(br);
    Analysis {
        profile: NilpotencyProfile::from_series(&series),
        socle: series.socle.term(1).clone(),
        annihilator: series.annihilator.term(1).clone(),
        equivalence: check_equivalence_with(&series),
        bkp: check_bkp_with(&series),
        identities: check_identities(br, seed, samples),
        series,
    }
}
