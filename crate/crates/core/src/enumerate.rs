//! Automorphism groups, enumeration of every skew brace on a fixed additive
//! group, and a brute-force oracle for tiny orders.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use crate::brace::SkewBrace;
use crate::error::{Error, Result};
use crate::group::{Group, GroupTable};

pub const AUTOMORPHISM_LIMIT: usize = 64;
pub const ENUMERATION_LIMIT: usize = 12;
pub const ORACLE_LIMIT: usize = 6;
/// Largest automorphism group whose composition table is materialized.
pub const AUT_TABLE_LIMIT: usize = 4096;

fn element_orders(g: &GroupTable) -> Vec<usize> {
    (0..g.order())
        .map(|x| {
            let (mut y, mut k) = (x, 1);
            while y != 0 {
                y = g.op(y, x);
                k += 1;
            }
            k
        })
        .collect()
}

/// Extends generator images to a homomorphism on `<gens>`, if consistent.
fn extend(g: &GroupTable, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    const NONE: usize = usize::MAX;
    let mut map = vec![NONE; g.order()];
    map[0] = 0;
    let mut queue = vec![0];
    let mut head = 0;
    while head < queue.len() {
        let e = queue[head];
        head += 1;
        for (&s, &t) in gens.iter().zip(images) {
            let (x, fx) = (g.op(e, s), g.op(map[e], t));
            if map[x] == NONE {
                map[x] = fx;
                queue.push(x);
            } else if map[x] != fx {
                return None;
            }
        }
    }
    Some(map)
}

/// All automorphisms of `g` as permutations of the carrier.
pub fn automorphism_group(g: &GroupTable) -> Result<Vec<Vec<usize>>> {
    let n = g.order();
    if n > AUTOMORPHISM_LIMIT {
        return Err(Error::TooLarge {
            order: n,
            limit: AUTOMORPHISM_LIMIT,
        });
    }
    let gens = g.generators();
    let orders = element_orders(g);
    let mut out = Vec::new();
    let mut images = Vec::new();
    fn rec(g: &GroupTable, gens: &[usize], orders: &[usize], images: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let k = images.len();
        if k == gens.len() {
            let map = extend(g, gens, images).expect("checked at every level");
            let mut seen = vec![false; g.order()];
            if map.iter().all(|&y| !std::mem::replace(&mut seen[y], true)) {
                out.push(map);
            }
            return;
        }
        for t in 1..g.order() {
            if orders[t] != orders[gens[k]] || images.contains(&t) {
                continue;
            }
            images.push(t);
            if extend(g, &gens[..=k], images).is_some() {
                rec(g, gens, orders, images, out);
            }
            images.pop();
        }
    }
    rec(g, &gens, &orders, &mut images, &mut out);
    out.sort();
    Ok(out)
}

const UNSET: u32 = u32::MAX;

struct Search<'g> {
    g: &'g GroupTable,
    auts: Vec<Vec<u32>>,
    /// `compose[i * m + j]` is the index of `auts[i] ∘ auts[j]`.
    compose: Vec<u32>,
}

#[derive(Clone)]
struct State {
    lam: Vec<u32>,
    order: Vec<usize>,
}

impl<'g> Search<'g> {
    fn new(g: &'g GroupTable) -> Result<Self> {
        let perms = automorphism_group(g)?;
        let m = perms.len();
        if m > AUT_TABLE_LIMIT {
            return Err(Error::TooLarge {
                order: m,
                limit: AUT_TABLE_LIMIT,
            });
        }
        let index: HashMap<&Vec<usize>, u32> = perms.iter().enumerate().map(|(i, p)| (p, i as u32)).collect();
        let mut compose = vec![0; m * m];
        for i in 0..m {
            for j in 0..m {
                let c: Vec<usize> = perms[j].iter().map(|&x| perms[i][x]).collect();
                compose[i * m + j] = index[&c];
            }
        }
        let auts = perms.iter().map(|p| p.iter().map(|&x| x as u32).collect()).collect();
        Ok(Search { g, auts, compose })
    }

    fn identity_index(&self) -> u32 {
        self.auts
            .iter()
            .position(|p| p.iter().enumerate().all(|(i, &x)| i == x as usize))
            .expect("identity automorphism") as u32
    }

    /// Assigns `λ_x = a` and closes under `λ_{a·λ_a(b)} = λ_a λ_b`.
    fn assign(&self, st: &mut State, x: usize, a: u32) -> bool {
        let m = self.auts.len();
        st.lam[x] = a;
        let mut head = st.order.len();
        st.order.push(x);
        while head < st.order.len() {
            let u = st.order[head];
            for i in 0..=head {
                let v = st.order[i];
                for (p, q) in [(u, v), (v, u)] {
                    let (lp, lq) = (st.lam[p], st.lam[q]);
                    let c = self.g.op(p, self.auts[lp as usize][q] as usize);
                    let want = self.compose[lp as usize * m + lq as usize];
                    if st.lam[c] == UNSET {
                        st.lam[c] = want;
                        st.order.push(c);
                    } else if st.lam[c] != want {
                        return false;
                    }
                }
            }
            head += 1;
        }
        true
    }

    fn run(&self, st: State, out: &mut Vec<Vec<u32>>) {
        let Some(x) = st.lam.iter().position(|&l| l == UNSET) else {
            out.push(st.lam);
            return;
        };
        for a in 0..self.auts.len() as u32 {
            let mut next = st.clone();
            if self.assign(&mut next, x, a) {
                self.run(next, out);
            }
        }
    }

    fn circ_rows(&self, lam: &[u32]) -> Vec<Vec<usize>> {
        let n = self.g.order();
        (0..n)
            .map(|a| {
                let l = &self.auts[lam[a] as usize];
                (0..n).map(|b| self.g.op(a, l[b] as usize)).collect()
            })
            .collect()
    }
}

/// Every skew brace with additive group `g`, labelled by carrier, sorted by `∘` table.
pub fn enumerate_braces(g: &GroupTable) -> Result<Vec<SkewBrace>> {
    enumerate_braces_up_to(g, ENUMERATION_LIMIT)
}

/// [`enumerate_braces`] with an explicit order limit.
pub fn enumerate_braces_up_to(g: &GroupTable, limit: usize) -> Result<Vec<SkewBrace>> {
    let n = g.order();
    if n > limit {
        return Err(Error::TooLarge { order: n, limit });
    }
    let search = Search::new(g)?;
    let mut root = State {
        lam: vec![UNSET; n],
        order: Vec::new(),
    };
    let ok = search.assign(&mut root, 0, search.identity_index());
    debug_assert!(ok);
    let lams: Vec<Vec<u32>> = match root.lam.iter().position(|&l| l == UNSET) {
        None => vec![root.lam],
        Some(x) => (0..search.auts.len() as u32)
            .into_par_iter()
            .flat_map_iter(|a| {
                let mut out = Vec::new();
                let mut st = root.clone();
                if search.assign(&mut st, x, a) {
                    search.run(st, &mut out);
                }
                out
            })
            .collect(),
    };
    let mut found = BTreeMap::new();
    for lam in lams {
        let rows = search.circ_rows(&lam);
        if found.contains_key(&rows) {
            continue;
        }
        let circ = GroupTable::validate(&rows)?;
        let br = SkewBrace::validate(g.clone(), circ)?;
        found.insert(rows, br);
    }
    Ok(found.into_values().collect())
}

/// All group tables on `0..n` with identity `0`, from reduced Latin squares.
pub fn all_group_tables(n: usize) -> Result<Vec<Vec<Vec<usize>>>> {
    if n > ORACLE_LIMIT {
        return Err(Error::TooLarge {
            order: n,
            limit: ORACLE_LIMIT,
        });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut sq: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == 0 {
                        j
                    } else if j == 0 {
                        i
                    } else {
                        usize::MAX
                    }
                })
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    fn fill(sq: &mut Vec<Vec<usize>>, cell: usize, n: usize, out: &mut Vec<Vec<Vec<usize>>>) {
        let m = n - 1;
        if cell == m * m {
            let assoc = (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| sq[sq[a][b]][c] == sq[a][sq[b][c]])));
            if assoc {
                out.push(sq.clone());
            }
            return;
        }
        let (i, j) = (1 + cell / m, 1 + cell % m);
        for v in 0..n {
            if (0..j).any(|c| sq[i][c] == v) || (0..i).any(|r| sq[r][j] == v) {
                continue;
            }
            sq[i][j] = v;
            fill(sq, cell + 1, n, out);
        }
        sq[i][j] = usize::MAX;
    }
    fill(&mut sq, 0, n, &mut out);
    Ok(out)
}

/// Every `∘` on the carrier of `g` that is a group with identity `0` and
/// satisfies `a∘(b·c) = (a∘b)·a^{-1}·(a∘c)`, by exhaustive search.
pub fn brute_force_oracle(g: &GroupTable) -> Result<Vec<SkewBrace>> {
    let n = g.order();
    let mut out = Vec::new();
    for circ in all_group_tables(n)? {
        let ok = (0..n).all(|a| {
            let ai = g.inv(a);
            (0..n).all(|b| (0..n).all(|c| circ[a][g.op(b, c)] == g.op(g.op(circ[a][b], ai), circ[a][c])))
        });
        if ok {
            out.push(circ);
        }
    }
    out.sort();
    out.into_iter()
        .map(|rows| {
            Ok(SkewBrace::from_tables_unchecked(
                g.clone(),
                GroupTable::validate(&rows)?,
            ))
        })
        .collect()
}

/// The `∘` table of a table brace, for comparisons.
pub fn circ_rows(br: &SkewBrace) -> Vec<Vec<usize>> {
    br.to_tables().1.rows()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brace::{build_almost_trivial, build_trivial};
    use crate::catalog::{make_pq_brace, PqVariant};
    use crate::groups;

    #[test]
    fn automorphism_group_orders() {
        let c = |name: &str| automorphism_group(&groups::by_name(name).unwrap()).unwrap().len();
        assert_eq!(c("C3xC2"), 2);
        assert_eq!(c("S3"), 6);
        assert_eq!(c("C2"), 1);
        assert_eq!(c("C1"), 1);
        assert_eq!(c("C2xC2"), 6);
        assert_eq!(c("D8"), 8);
        assert_eq!(c("Q8"), 24);
        assert_eq!(c("C2xC2xC2"), 168);
        assert!(matches!(
            automorphism_group(&groups::cyclic(65)),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn group_table_counts() {
        // labelled groups with identity 0: (n-1)! / |Aut|, summed over isomorphism types
        assert_eq!(all_group_tables(1).unwrap().len(), 1);
        assert_eq!(all_group_tables(4).unwrap().len(), 3 + 1);
        assert_eq!(all_group_tables(5).unwrap().len(), 6);
        assert_eq!(all_group_tables(6).unwrap().len(), 60 + 20);
    }

    #[test]
    fn c2_has_only_the_trivial_brace() {
        let g = groups::cyclic(2);
        let all = enumerate_braces(&g).unwrap();
        assert_eq!(all.len(), 1);
        assert_eq!(circ_rows(&all[0]), g.rows());
    }

    #[test]
    fn catalog_members_are_found() {
        let c6 = groups::by_name("C3xC2").unwrap();
        let rows: Vec<_> = enumerate_braces(&c6).unwrap().iter().map(circ_rows).collect();
        let pq = make_pq_brace(3, 2, 2, PqVariant::I).unwrap();
        assert_eq!(pq.to_tables().0.rows(), c6.rows());
        assert!(rows.contains(&circ_rows(&pq)));
        assert!(rows.contains(&c6.rows()));

        let s3 = groups::symmetric(3);
        let rows: Vec<_> = enumerate_braces(&s3).unwrap().iter().map(circ_rows).collect();
        assert!(rows.contains(&circ_rows(&build_trivial(&s3))));
        assert!(rows.contains(&circ_rows(&build_almost_trivial(&s3))));
    }

    #[test]
    fn oracle_matches_enumerator_on_small_groups() {
        for name in ["C1", "C2", "C3", "C4", "C2xC2", "C5"] {
            let g = groups::by_name(name).unwrap();
            let a: Vec<_> = enumerate_braces(&g).unwrap().iter().map(circ_rows).collect();
            let b: Vec<_> = brute_force_oracle(&g).unwrap().iter().map(circ_rows).collect();
            assert_eq!(a, b, "{name}");
        }
        for br in brute_force_oracle(&groups::cyclic(3)).unwrap() {
            assert!(crate::group::is_abelian(&br.multiplicative()));
        }
    }

    #[test]
    fn limits() {
        assert!(matches!(
            enumerate_braces(&groups::cyclic(13)),
            Err(Error::TooLarge { .. })
        ));
        assert!(matches!(
            brute_force_oracle(&groups::cyclic(7)),
            Err(Error::TooLarge { .. })
        ));
    }
}
