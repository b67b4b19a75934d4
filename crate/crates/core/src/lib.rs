//! Computational toolkit for finite skew braces.
//!
//! A skew brace is a set with two group structures `·` and `∘` linked by
//! `a∘(b·c) = (a∘b)·a^{-1}·(a∘c)`. This crate builds braces from tables,
//! classical constructions and a vector-pair construction over `F_p`, and
//! computes their substructures (left ideals, ideals, socle, annihilator),
//! all the standard central-type series, and the nilpotency notions they
//! define. An enumerator lists every brace on a given additive group.

pub mod brace;
pub mod catalog;
pub mod chain;
pub mod classify;
pub mod cli;
pub mod enumerate;
pub mod error;
pub mod fp;
pub mod group;
pub mod groups;
pub mod report;
pub mod series;
pub mod set;
pub mod spec;
pub mod substructures;

pub use brace::{FormulaBrace, SkewBrace};
pub use chain::{SeriesChain, SeriesKind};
pub use error::{Error, Result};
pub use group::{Group, GroupTable};
pub use set::ElementSet;
