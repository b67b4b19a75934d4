//! JSON and text renderings of sets, chains and analyses.
//!
//! Table braces print element indices. Formula braces print elements as
//! `[b, c]` coordinate-vector pairs, and sets as their order plus a generating
//! set, since their members run into the hundreds of thousands.

use std::fmt::Write;

use serde_json::{json, Value};

use crate::brace::SkewBrace;
use crate::chain::SeriesChain;
use crate::classify::Analysis;
use crate::group::InclusionCheck;
use crate::set::ElementSet;

pub fn element_json(br: &SkewBrace, x: usize) -> Value {
    match br.formula() {
        Some(f) => {
            let (b, c) = f.coordinates(x);
            json!([b, c])
        }
        None => json!(x),
    }
}

pub fn set_json(br: &SkewBrace, s: &ElementSet) -> Value {
    if br.is_table() {
        json!(s.to_vec())
    } else {
        let gens: Vec<Value> = br
            .dot_generators_of(s)
            .into_iter()
            .map(|x| element_json(br, x))
            .collect();
        json!({ "order": s.len(), "generators": gens })
    }
}

pub fn chain_json(br: &SkewBrace, c: &SeriesChain) -> Value {
    json!({
        "kind": c.kind,
        "orders": c.orders(),
        "terms": c.terms.iter().map(|t| set_json(br, t)).collect::<Vec<_>>(),
        "stabilized_at": c.stabilized_at,
        "reaches_terminal": c.reaches_terminal,
    })
}

pub fn inclusion_json(br: &SkewBrace, r: &InclusionCheck) -> Value {
    json!({
        "holds": r.holds,
        "witness": r.witness.map(|(x, y, v)| json!({
            "x": element_json(br, x),
            "y": element_json(br, y),
            "value": element_json(br, v),
        })),
    })
}

pub fn analysis_json(br: &SkewBrace, a: &Analysis) -> Value {
    let series: serde_json::Map<String, Value> = a
        .series
        .named()
        .into_iter()
        .map(|(name, c)| (name.to_string(), chain_json(br, c)))
        .collect();
    json!({
        "order": br.order(),
        "backing": if br.is_table() { "table" } else { "formula" },
        "profile": a.profile,
        "socle": set_json(br, &a.socle),
        "annihilator": set_json(br, &a.annihilator),
        "series": series,
        "equivalence": a.equivalence,
        "bkp": a.bkp,
        "identities": a.identities,
    })
}

fn class(c: Option<usize>) -> String {
    c.map_or_else(|| "no".to_string(), |n| format!("class {n}"))
}

pub fn analysis_text(br: &SkewBrace, a: &Analysis) -> String {
    let mut s = String::new();
    let p = &a.profile;
    let _ = writeln!(
        s,
        "order {} ({})",
        br.order(),
        if br.is_table() { "table" } else { "formula" }
    );
    let _ = writeln!(s, "left nilpotent:        {}", class(p.left));
    let _ = writeln!(s, "right nilpotent:       {}", class(p.right));
    let _ = writeln!(s, "socle nilpotent:       {}", class(p.socle));
    let _ = writeln!(s, "annihilator nilpotent: {}", class(p.annihilator));
    let _ = writeln!(s, "(A,.) nilpotent:       {}", class(p.add_group_nilpotent));
    let _ = writeln!(s, "(A,o) nilpotent:       {}", class(p.mult_group_nilpotent));
    let _ = writeln!(s, "|Soc(A)| = {}, |Ann(A)| = {}", a.socle.len(), a.annihilator.len());
    for (name, c) in a.series.named() {
        let tail = if c.reaches_terminal { "terminal" } else { "stuck" };
        let _ = writeln!(s, "{name:>17}: {:?} ({tail} at {})", c.orders(), c.stabilized_at);
    }
    let _ = writeln!(
        s,
        "equivalence checks: {}; skew-left-nilpotent check: {}; identities: {} ({} triples)",
        if a.equivalence.agree { "agree" } else { "DISAGREE" },
        if a.bkp.holds { "ok" } else { "FAIL" },
        if a.identities.holds { "ok" } else { "FAIL" },
        a.identities.triples_checked,
    );
    s
}
