//! Backtracking completion of the composition table for the 13-element
//! algebra with elements `a ≤ 𝕀 ≤ E` and `a∘E = a = E∘a`.
//!
//! The lattice is the down-set lattice of the join-irreducibles
//! `a < a;top`, `a < id < E`, `a < top;a`, so composition is fixed by its
//! values on join-irreducibles. Those 25 entries are searched (identity row
//! and column fixed) under monotonicity, converse and associativity, and
//! every complete table is checked for the structural laws, Dedekind, the
//! cone rule, all-or-nothing, `a∘top = a;top`, `top∘a = top;a`, and `E`
//! being a per without an index.

use super::{check_axioms, AbstractModel, ModelFile};

/// Join-irreducibles in bit order.
const JI: [&str; 5] = ["a", "a;top", "id", "top;a", "E"];
const A: usize = 0;
const P: usize = 1;
const ID: usize = 2;
const Q: usize = 3;
const E: usize = 4;

/// The 13 elements as (name, down-set of join-irreducibles).
pub const ELEMENTS: [(&str, u8); 13] = [
    ("bot", 0b00000),
    ("a", 0b00001),
    ("a;top", 0b00011),
    ("id", 0b00101),
    ("top;a", 0b01001),
    ("E", 0b10101),
    ("a;top+id", 0b00111),
    ("a;top+top;a", 0b01011),
    ("id+top;a", 0b01101),
    ("a;top+E", 0b10111),
    ("E+top;a", 0b11101),
    ("a;top+id+top;a", 0b01111),
    ("top", 0b11111),
];

fn elem(mask: u8) -> usize {
    ELEMENTS.iter().position(|&(_, m)| m == mask).expect("down-set")
}

fn ji_mask(i: usize) -> u8 {
    ELEMENTS[elem_of_ji(i)].1
}

fn elem_of_ji(i: usize) -> usize {
    ELEMENTS.iter().position(|&(n, _)| n == JI[i]).unwrap()
}

fn ji_conv(i: usize) -> usize {
    match i {
        P => Q,
        Q => P,
        x => x,
    }
}

fn conv_mask(m: u8) -> u8 {
    (0..5).filter(|&i| m >> i & 1 == 1).fold(0, |acc, i| acc | 1 << ji_conv(i))
}

struct Table {
    t: [[Option<u8>; 5]; 5],
}

impl Table {
    /// Composition of down-sets, if every needed entry is known.
    fn comp(&self, x: u8, y: u8) -> Option<u8> {
        let mut out = 0;
        for i in (0..5).filter(|&i| x >> i & 1 == 1) {
            for j in (0..5).filter(|&j| y >> j & 1 == 1) {
                out |= self.t[i][j]?;
            }
        }
        Some(out)
    }

    fn consistent(&self) -> bool {
        let le = |x: u8, y: u8| x & !y == 0;
        for i in 0..5 {
            for j in 0..5 {
                let Some(v) = self.t[i][j] else { continue };
                for i2 in 0..5 {
                    if let Some(w) = self.t[i2][j] {
                        if le(ji_mask(i), ji_mask(i2)) && !le(v, w) {
                            return false;
                        }
                    }
                }
                for j2 in 0..5 {
                    if let Some(w) = self.t[i][j2] {
                        if le(ji_mask(j), ji_mask(j2)) && !le(v, w) {
                            return false;
                        }
                    }
                }
            }
        }
        for i in 0..5 {
            for j in 0..5 {
                let Some(ij) = self.t[i][j] else { continue };
                for k in 0..5 {
                    let Some(jk) = self.t[j][k] else { continue };
                    if let (Some(l), Some(r)) = (self.comp(ij, ji_mask(k)), self.comp(ji_mask(i), jk)) {
                        if l != r {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    fn to_file(&self) -> ModelFile {
        let names: Vec<String> = ELEMENTS.iter().map(|(n, _)| n.to_string()).collect();
        let compose = ELEMENTS
            .iter()
            .map(|&(_, x)| {
                ELEMENTS
                    .iter()
                    .map(|&(_, y)| names[elem(self.comp(x, y).expect("complete"))].clone())
                    .collect()
            })
            .collect();
        ModelFile {
            elements: names.clone(),
            leq: ELEMENTS
                .iter()
                .map(|&(_, x)| ELEMENTS.iter().map(|&(_, y)| x & !y == 0).collect())
                .collect(),
            compose,
            converse: ELEMENTS.iter().map(|&(_, x)| names[elem(conv_mask(x))].clone()).collect(),
            identity: "id".into(),
            top: "top".into(),
            bottom: "bot".into(),
        }
    }
}

fn acceptable(file: &ModelFile) -> bool {
    let Ok(m) = AbstractModel::from_file(file) else { return false };
    let r = check_axioms(&m);
    let at = |n: &str| m.index_of(n).unwrap();
    let (a, e, top) = (at("a"), at("E"), at("top"));
    m.comp(a, top) == at("a;top")
        && m.comp(top, a) == at("top;a")
        && r.dedekind.holds
        && r.cone.holds
        && r.all_or_nothing.holds
        && m.leq(m.comp(e, e), e)
        && r.choice.counterexample.as_deref() == Some(&["E".to_string()][..])
}

fn search(t: &mut Table, cells: &[(usize, usize)], found: &mut Vec<ModelFile>, limit: usize) {
    if found.len() >= limit {
        return;
    }
    let Some((&(i, j), rest)) = cells.split_first() else {
        let file = t.to_file();
        if acceptable(&file) {
            found.push(file);
        }
        return;
    };
    if t.t[i][j].is_some() {
        search(t, rest, found, limit);
        return;
    }
    let (ci, cj) = (ji_conv(j), ji_conv(i));
    for &(_, v) in ELEMENTS.iter() {
        let partner = conv_mask(v);
        if (ci, cj) == (i, j) && partner != v {
            continue;
        }
        t.t[i][j] = Some(v);
        t.t[ci][cj] = Some(partner);
        if t.consistent() {
            search(t, rest, found, limit);
        }
        t.t[i][j] = None;
        t.t[ci][cj] = None;
    }
}

/// Up to `limit` complete tables, in the deterministic search order.
pub fn complete_desharnais13(limit: usize) -> Vec<ModelFile> {
    let mut t = Table { t: [[None; 5]; 5] };
    for k in 0..5 {
        t.t[ID][k] = Some(ji_mask(k));
        t.t[k][ID] = Some(ji_mask(k));
    }
    t.t[A][E] = Some(ji_mask(A));
    t.t[E][A] = Some(ji_mask(A));
    let cells: Vec<(usize, usize)> = [A, P, Q, E]
        .iter()
        .flat_map(|&i| [A, P, Q, E].map(|j| (i, j)))
        .collect();
    let mut found = Vec::new();
    search(&mut t, &cells, &mut found, limit);
    found
}
