//! Series of subsets with stabilization metadata.

use serde::Serialize;

use crate::set::ElementSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SeriesKind {
    Left,
    Right,
    Smoktunowicz,
    Socle,
    Annihilator,
    Gamma,
    GammaPrime,
    RelativeGamma,
    GroupLower,
    GroupUpper,
    SocleSv,
}

impl SeriesKind {
    pub fn is_descending(self) -> bool {
        !matches!(
            self,
            SeriesKind::Socle | SeriesKind::Annihilator | SeriesKind::GroupUpper
        )
    }

    /// Index of the first term: 1 for lower-type series, 0 for upper-type.
    pub fn first_index(self) -> usize {
        if self.is_descending() {
            1
        } else {
            0
        }
    }
}

/// The distinct terms of a series, up to the term at which it becomes constant.
///
/// `terms[i]` is the term with series index `first_index + i`; every index past
/// the last stored term has the value of the last stored term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesChain {
    pub kind: SeriesKind,
    pub terms: Vec<ElementSet>,
    /// Series index of the first term of the constant tail.
    pub stabilized_at: usize,
    /// Whether the tail is `{1}` (descending kinds) or the whole carrier (ascending kinds).
    pub reaches_terminal: bool,
}

impl SeriesChain {
    /// Builds a chain where each term depends only on its predecessor.
    ///
    /// Stops at the first repeated term, or after `cap` steps.
    pub fn iterate(
        kind: SeriesKind,
        first: ElementSet,
        cap: usize,
        mut next: impl FnMut(&ElementSet) -> ElementSet,
    ) -> Self {
        let mut terms = vec![first];
        for _ in 0..cap {
            let t = next(terms.last().unwrap());
            if &t == terms.last().unwrap() {
                break;
            }
            terms.push(t);
        }
        Self::finish(kind, terms)
    }

    pub(crate) fn finish(kind: SeriesKind, terms: Vec<ElementSet>) -> Self {
        let last = terms.last().expect("series has at least one term");
        let reaches_terminal = if kind.is_descending() {
            last.is_identity()
        } else {
            last.is_full()
        };
        let stabilized_at = kind.first_index() + terms.len() - 1;
        SeriesChain {
            kind,
            terms,
            stabilized_at,
            reaches_terminal,
        }
    }

    /// The term with series index `n` (clamped into the stored range).
    pub fn term(&self, n: usize) -> &ElementSet {
        let i = n.saturating_sub(self.kind.first_index());
        &self.terms[i.min(self.terms.len() - 1)]
    }

    /// Least index whose term is terminal, if the chain gets there.
    pub fn terminal_index(&self) -> Option<usize> {
        if !self.reaches_terminal {
            return None;
        }
        Some(self.stabilized_at)
    }

    pub fn orders(&self) -> Vec<usize> {
        self.terms.iter().map(ElementSet::len).collect()
    }

    /// True when consecutive terms are nested in the direction of the series.
    pub fn is_monotone(&self) -> bool {
        self.terms.windows(2).all(|w| {
            if self.kind.is_descending() {
                w[1].is_subset(&w[0])
            } else {
                w[0].is_subset(&w[1])
            }
        })
    }
}
