//! JSON brace descriptions, as read and written by the command line tool.

use serde::{Deserialize, Serialize};

use crate::brace::{build_almost_trivial, build_from_radical_ring, build_trivial, SkewBrace, DEFAULT_SEED};
use crate::catalog::{make_bc_brace, make_counterexample_f, make_pq_brace, PqVariant};
use crate::error::{Error, Result};
use crate::fp::Matrix;
use crate::group::GroupTable;
use crate::groups;

/// A group given either as a Cayley table or by name (`C6`, `S3`, `C2xC2`, ...).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupSpec {
    Table(Vec<Vec<usize>>),
    Name(String),
}

impl GroupSpec {
    pub fn build(&self) -> Result<GroupTable> {
        match self {
            GroupSpec::Table(rows) => {
                check_identity_at_zero(rows)?;
                GroupTable::validate(rows)
            }
            GroupSpec::Name(name) => groups::by_name(name),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum BraceSpec {
    #[serde(rename = "tables")]
    Tables {
        dot: Vec<Vec<usize>>,
        circ: Vec<Vec<usize>>,
    },
    #[serde(rename = "trivial")]
    Trivial { group: GroupSpec },
    #[serde(rename = "almost_trivial")]
    AlmostTrivial { group: GroupSpec },
    #[serde(rename = "radical_ring")]
    RadicalRing {
        add: Vec<Vec<usize>>,
        mult: Vec<Vec<usize>>,
    },
    #[serde(rename = "pq")]
    Pq { p: u64, q: u64, k: u64, variant: PqVariant },
    /// `phi[j]` is the matrix of `φ_{e_{j+1}}`, `psi[i]` that of `ψ_{e_{i+1}}`, rows as written.
    #[serde(rename = "bc")]
    Bc {
        p: u32,
        #[serde(alias = "d_B")]
        d_b: usize,
        #[serde(alias = "d_C")]
        d_c: usize,
        #[serde(alias = "phi_mats")]
        phi: Vec<Vec<Vec<i64>>>,
        #[serde(alias = "psi_mats")]
        psi: Vec<Vec<Vec<i64>>>,
    },
    #[serde(rename = "counterexample_F")]
    CounterexampleF { p: u64 },
}

fn check_identity_at_zero(rows: &[Vec<usize>]) -> Result<()> {
    let n = rows.len();
    let ok = rows.first().is_some_and(|r| r.iter().copied().eq(0..n))
        && rows.iter().enumerate().all(|(i, r)| r.first() == Some(&i));
    if ok {
        Ok(())
    } else {
        Err(Error::MalformedTable("identity must be element 0".into()))
    }
}

fn matrices(mats: &[Vec<Vec<i64>>], d: usize, p: u32) -> Result<Vec<Matrix>> {
    mats.iter()
        .map(|m| {
            Matrix::from_rows(m, p)
                .filter(|m| m.dim() == d)
                .ok_or_else(|| Error::BadParameters(format!("expected a {d}x{d} matrix")))
        })
        .collect()
}

impl BraceSpec {
    pub fn parse(json: &str) -> Result<Self> {
        serde_json::from_str(json).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    /// The tables form of a table-backed brace.
    pub fn tables_of(br: &SkewBrace) -> Self {
        let (dot, circ) = br.to_tables();
        BraceSpec::Tables {
            dot: dot.rows(),
            circ: circ.rows(),
        }
    }

    /// Builds and validates the brace; `seed` drives the sampled checks of formula braces.
    pub fn build(&self, seed: u64) -> Result<SkewBrace> {
        match self {
            BraceSpec::Tables { dot, circ } => {
                check_identity_at_zero(dot)?;
                check_identity_at_zero(circ)?;
                if dot.len() != circ.len() {
                    return Err(Error::IdentityMismatch);
                }
                SkewBrace::validate(GroupTable::validate(dot)?, GroupTable::validate(circ)?)
            }
            BraceSpec::Trivial { group } => Ok(build_trivial(&group.build()?)),
            BraceSpec::AlmostTrivial { group } => Ok(build_almost_trivial(&group.build()?)),
            BraceSpec::RadicalRing { add, mult } => build_from_radical_ring(add, mult),
            BraceSpec::Pq { p, q, k, variant } => make_pq_brace(*p, *q, *k, *variant),
            BraceSpec::Bc { p, d_b, d_c, phi, psi } => {
                if !crate::fp::is_prime(*p as u64) {
                    return Err(Error::BadParameters(format!("p = {p} is not prime")));
                }
                let phi = matrices(phi, *d_b, *p)?;
                let psi = matrices(psi, *d_c, *p)?;
                make_bc_brace(*p, *d_b, *d_c, phi, psi, seed)
            }
            BraceSpec::CounterexampleF { p } => make_counterexample_f(*p, seed),
        }
    }

    pub fn build_default(&self) -> Result<SkewBrace> {
        self.build(DEFAULT_SEED)
    }

    /// Whether the description is of the pq (variant I) brace or the counterexample,
    /// the two families with documented inclusion failures.
    pub fn documented_failures(&self) -> bool {
        matches!(
            self,
            BraceSpec::Pq {
                variant: PqVariant::I,
                ..
            } | BraceSpec::CounterexampleF { .. }
        )
    }
}
