//! Brace corpora shared by the integration tests.
#![allow(dead_code)]

use skewbrace::brace::{build_almost_trivial, build_from_radical_ring, build_trivial, DEFAULT_SEED};
use skewbrace::catalog::{make_bc_brace, make_counterexample_f, make_pq_brace, PqVariant};
use skewbrace::enumerate::enumerate_braces;
use skewbrace::fp::Matrix;
use skewbrace::groups::{self, ORDER_9_TO_16, ORDER_LE_8};
use skewbrace::{Group, SkewBrace};

pub type Named = (String, SkewBrace);

pub fn pq_i() -> SkewBrace {
    make_pq_brace(3, 2, 2, PqVariant::I).unwrap()
}

pub fn pq_ii() -> SkewBrace {
    make_pq_brace(3, 2, 2, PqVariant::Ii).unwrap()
}

pub fn pq_family() -> Vec<Named> {
    let mut out = Vec::new();
    for (p, q, k) in [(3, 2, 2), (5, 2, 4), (7, 3, 2)] {
        for (tag, v) in [("i", PqVariant::I), ("ii", PqVariant::Ii)] {
            out.push((format!("pq({p},{q},{k},{tag})"), make_pq_brace(p, q, k, v).unwrap()));
        }
    }
    out
}

fn table(n: usize, f: impl Fn(usize, usize) -> usize) -> Vec<Vec<usize>> {
    (0..n).map(|a| (0..n).map(|b| f(a, b)).collect()).collect()
}

pub fn radical_rings() -> Vec<Named> {
    let zero3 = build_from_radical_ring(&table(3, |a, b| (a + b) % 3), &table(3, |_, _| 0)).unwrap();
    let z4 = build_from_radical_ring(&table(4, |a, b| (a + b) % 4), &table(4, |a, b| (2 * a * b) % 4)).unwrap();
    let z9 = build_from_radical_ring(&table(9, |a, b| (a + b) % 9), &table(9, |a, b| (3 * a * b) % 9)).unwrap();
    // x·F_2[x]/(x^3) with x at 1 and x^2 at 2
    let x3 = build_from_radical_ring(
        &table(4, |a, b| a ^ b),
        &table(4, |a, b| if a & b & 1 == 1 { 2 } else { 0 }),
    )
    .unwrap();
    vec![
        ("radical(zero C3)".into(), zero3),
        ("radical(2ab on Z4)".into(), z4),
        ("radical(3ab on Z9)".into(), z9),
        ("radical(xF2[x]/x^3)".into(), x3),
    ]
}

pub fn trivial_family(names: &[&str]) -> Vec<Named> {
    let mut out = Vec::new();
    for name in names {
        let g = groups::by_name(name).unwrap();
        out.push((format!("trivial({name})"), build_trivial(&g)));
        out.push((format!("almost_trivial({name})"), build_almost_trivial(&g)));
    }
    out
}

fn shear(p: u32) -> Matrix {
    Matrix::from_rows(&[vec![1, 1], vec![0, 1]], p).unwrap()
}

fn jordan3(p: u32) -> Matrix {
    Matrix::from_rows(&[vec![1, 1, 0], vec![0, 1, 1], vec![0, 0, 1]], p).unwrap()
}

/// Small vector-pair braces, each paired with its table form in `formula_vs_table`.
pub fn small_bc() -> Vec<Named> {
    let mut out = Vec::new();
    for p in [2u32, 3] {
        let id = Matrix::identity(2);
        let br = make_bc_brace(
            p,
            2,
            2,
            vec![id.clone(), shear(p)],
            vec![id.clone(), shear(p)],
            DEFAULT_SEED,
        )
        .unwrap();
        out.push((format!("bc(p={p},2,2)"), br));
    }
    let p = 3;
    let id2 = Matrix::identity(2);
    let id3 = Matrix::identity(3);
    let br = make_bc_brace(
        p,
        3,
        2,
        vec![id3.clone(), jordan3(p)],
        vec![id2.clone(), id2.clone(), shear(p)],
        DEFAULT_SEED,
    )
    .unwrap();
    out.push(("bc(p=3,3,2)".into(), br));
    let br = make_bc_brace(
        5,
        1,
        1,
        vec![Matrix::identity(1)],
        vec![Matrix::identity(1)],
        DEFAULT_SEED,
    )
    .unwrap();
    out.push(("bc(p=5,1,1)".into(), br));
    out
}

pub fn counterexample() -> SkewBrace {
    make_counterexample_f(5, DEFAULT_SEED).unwrap()
}

/// Every table-backed catalog brace.
pub fn catalog_tables() -> Vec<Named> {
    let mut out = pq_family();
    out.extend(radical_rings());
    out.extend(trivial_family(ORDER_LE_8));
    out.extend(trivial_family(ORDER_9_TO_16));
    out
}

/// The whole catalog, formula braces included.
pub fn catalog() -> Vec<Named> {
    let mut out = catalog_tables();
    out.extend(small_bc());
    out.push(("counterexample_F(5)".into(), counterexample()));
    out
}

pub fn enumerated(names: &[&str]) -> Vec<Named> {
    let mut out = Vec::new();
    for name in names {
        let g = groups::by_name(name).unwrap();
        for (i, br) in enumerate_braces(&g).unwrap().into_iter().enumerate() {
            out.push((format!("{name}#{i}"), br));
        }
    }
    out
}

pub fn enumerated_le_8() -> Vec<Named> {
    enumerated(ORDER_LE_8)
}

pub fn groups_of_order_9_to_12() -> Vec<&'static str> {
    ORDER_9_TO_16
        .iter()
        .copied()
        .filter(|n| groups::by_name(n).unwrap().order() <= 12)
        .collect()
}

/// Catalog table braces of order at most 8 plus every enumerated brace of order at most 8.
pub fn corpus_le_8() -> Vec<Named> {
    let mut out: Vec<Named> = catalog_tables().into_iter().filter(|(_, b)| b.order() <= 8).collect();
    out.extend(enumerated_le_8());
    out
}
