//! Relation isomorphism: witness search over bijections between domain
//! points, and a verifier for claimed witnesses.

use std::collections::HashMap;

use serde::Serialize;
use thiserror::Error;

use crate::domains::{ldom, rdom};
use crate::relcore::{RelError, Relation};

/// Default cap on the number of points in either domain.
pub const DEFAULT_ISO_BOUND: usize = 8;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum IsoError {
    #[error("isomorphism search refused: {points} domain points exceed the bound of {bound}")]
    Bound { points: usize, bound: usize },
}

/// `φ: A~C` and `ψ: B~D` for `R: A~B`, `S: C~D`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsoWitness {
    pub phi: Relation,
    pub psi: Relation,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WitnessChecks {
    /// `φ∘φ° = R<`
    pub phi_left: bool,
    /// `φ°∘φ = S<`
    pub phi_right: bool,
    /// `ψ∘ψ° = R>`
    pub psi_left: bool,
    /// `ψ°∘ψ = S>`
    pub psi_right: bool,
    /// `R = φ∘S∘ψ°`
    pub forward: bool,
    /// `φ°∘R∘ψ = S`
    pub backward: bool,
}

impl WitnessChecks {
    pub fn domains(&self) -> bool {
        self.phi_left && self.phi_right && self.psi_left && self.psi_right
    }

    pub fn all(&self) -> bool {
        self.domains() && self.forward && self.backward
    }

    /// Under the domain conditions the two transfer equations coincide.
    pub fn exchange_consistent(&self) -> bool {
        !self.domains() || self.forward == self.backward
    }
}

pub fn verify_witness(r: &Relation, s: &Relation, phi: &Relation, psi: &Relation) -> Result<WitnessChecks, RelError> {
    let phic = phi.converse();
    let psic = psi.converse();
    Ok(WitnessChecks {
        phi_left: phi.compose(&phic)?.equals(ldom(r).as_relation())?,
        phi_right: phic.compose(phi)?.equals(ldom(s).as_relation())?,
        psi_left: psi.compose(&psic)?.equals(rdom(r).as_relation())?,
        psi_right: psic.compose(psi)?.equals(rdom(s).as_relation())?,
        forward: r.equals(&phi.compose(s)?.compose(&psic)?)?,
        backward: phic.compose(r)?.compose(psi)?.equals(s)?,
    })
}

fn nonempty_rows(r: &Relation) -> Vec<usize> {
    (0..r.src().size()).filter(|&a| !r.row_is_empty(a)).collect()
}

struct Search<'a> {
    r: &'a Relation,
    s: &'a Relation,
    rows_r: Vec<usize>,
    rows_s: Vec<usize>,
    cols_r: Vec<usize>,
    cols_s: Vec<usize>,
    used: Vec<bool>,
    sigma: Vec<usize>,
}

impl Search<'_> {
    /// Multiset of column profiles over the first `k` assigned rows must agree.
    fn profiles_agree(&self) -> bool {
        let k = self.sigma.len();
        let mut counts: HashMap<Vec<bool>, i64> = HashMap::new();
        for &b in &self.cols_r {
            let p: Vec<bool> = self.rows_r[..k].iter().map(|&a| self.r.contains(a, b)).collect();
            *counts.entry(p).or_default() += 1;
        }
        for &d in &self.cols_s {
            let p: Vec<bool> = self.sigma.iter().map(|&c| self.s.contains(c, d)).collect();
            *counts.entry(p).or_default() -= 1;
        }
        counts.values().all(|&v| v == 0)
    }

    fn run(&mut self) -> bool {
        if !self.profiles_agree() {
            return false;
        }
        let k = self.sigma.len();
        if k == self.rows_r.len() {
            return true;
        }
        let a = self.rows_r[k];
        let deg = self.r.row_elems(a).count();
        for i in 0..self.rows_s.len() {
            let c = self.rows_s[i];
            if self.used[i] || self.s.row_elems(c).count() != deg {
                continue;
            }
            self.used[i] = true;
            self.sigma.push(c);
            if self.run() {
                return true;
            }
            self.sigma.pop();
            self.used[i] = false;
        }
        false
    }

    /// Pairs columns with equal full profiles, in order.
    fn tau(&self) -> Vec<(usize, usize)> {
        let mut pool: Vec<(Vec<bool>, usize)> = self
            .cols_s
            .iter()
            .map(|&d| (self.sigma.iter().map(|&c| self.s.contains(c, d)).collect(), d))
            .collect();
        let mut out = Vec::new();
        for &b in &self.cols_r {
            let p: Vec<bool> = self.rows_r.iter().map(|&a| self.r.contains(a, b)).collect();
            let pos = pool.iter().position(|(q, _)| *q == p).expect("profiles agree");
            out.push((b, pool.remove(pos).1));
        }
        out
    }
}

/// A witness for `R ≅ S` if one exists.
pub fn find_isomorphism(r: &Relation, s: &Relation) -> Result<Option<IsoWitness>, IsoError> {
    find_isomorphism_bounded(r, s, DEFAULT_ISO_BOUND)
}

pub fn find_isomorphism_bounded(r: &Relation, s: &Relation, bound: usize) -> Result<Option<IsoWitness>, IsoError> {
    let rows_r = nonempty_rows(r);
    let rows_s = nonempty_rows(s);
    let rt = r.converse();
    let st = s.converse();
    let cols_r = nonempty_rows(&rt);
    let cols_s = nonempty_rows(&st);
    let points = rows_r.len().max(cols_r.len()).max(rows_s.len()).max(cols_s.len());
    if points > bound {
        return Err(IsoError::Bound { points, bound });
    }
    if rows_r.len() != rows_s.len() || cols_r.len() != cols_s.len() || r.count() != s.count() {
        return Ok(None);
    }
    let degrees = |m: &Relation, rows: &[usize]| {
        let mut d: Vec<usize> = rows.iter().map(|&a| m.row_elems(a).count()).collect();
        d.sort_unstable();
        d
    };
    if degrees(r, &rows_r) != degrees(s, &rows_s) || degrees(&rt, &cols_r) != degrees(&st, &cols_s) {
        return Ok(None);
    }
    let mut search = Search {
        r,
        s,
        used: vec![false; rows_s.len()],
        sigma: Vec::with_capacity(rows_r.len()),
        rows_r,
        rows_s,
        cols_r,
        cols_s,
    };
    if !search.run() {
        return Ok(None);
    }
    let mut phi = Relation::bottom(r.src(), s.src());
    for (&a, &c) in search.rows_r.iter().zip(&search.sigma) {
        phi.insert(a, c);
    }
    let mut psi = Relation::bottom(r.dst(), s.dst());
    for (b, d) in search.tau() {
        psi.insert(b, d);
    }
    Ok(Some(IsoWitness { phi, psi }))
}

pub fn is_isomorphic(r: &Relation, s: &Relation) -> Result<bool, IsoError> {
    find_isomorphism(r, s).map(|w| w.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relcore::{enumerate_relations, Carrier};

    fn rel(a: &Carrier, b: &Carrier, ps: &[(usize, usize)]) -> Relation {
        Relation::from_pairs(a, b, ps.iter().copied()).unwrap()
    }

    /// Brute force over all pairs of partial permutations.
    fn iso_oracle(r: &Relation, s: &Relation) -> bool {
        let phis: Vec<Relation> = enumerate_relations(r.src(), s.src()).unwrap().collect();
        let psis: Vec<Relation> = enumerate_relations(r.dst(), s.dst()).unwrap().collect();
        phis.iter()
            .filter(|p| {
                p.compose(&p.converse()).unwrap() == ldom(r).into_relation()
                    && p.converse().compose(p).unwrap() == ldom(s).into_relation()
            })
            .any(|p| psis.iter().any(|q| verify_witness(r, s, p, q).unwrap().all()))
    }

    #[test]
    fn self_witness_is_domains() {
        let a = Carrier::indexed("A", 3);
        let r = rel(&a, &a, &[(0, 1), (2, 1), (2, 2)]);
        let w = find_isomorphism(&r, &r).unwrap().unwrap();
        assert_eq!(w.phi, ldom(&r).into_relation());
        assert_eq!(w.psi, rdom(&r).into_relation());
        assert!(verify_witness(&r, &r, &w.phi, &w.psi).unwrap().all());
    }

    #[test]
    fn single_point_swap() {
        let a = Carrier::indexed("A", 2);
        let r = rel(&a, &a, &[(0, 0)]);
        let s = rel(&a, &a, &[(1, 1)]);
        let w = find_isomorphism(&r, &s).unwrap().unwrap();
        assert_eq!(w.phi.pairs().collect::<Vec<_>>(), vec![(0, 1)]);
        assert_eq!(w.psi.pairs().collect::<Vec<_>>(), vec![(0, 1)]);
    }

    #[test]
    fn domain_size_mismatch() {
        let a = Carrier::indexed("A", 2);
        assert!(find_isomorphism(&Relation::identity(&a), &Relation::bottom(&a, &a))
            .unwrap()
            .is_none());
    }

    #[test]
    fn corrupted_witness_fails() {
        let a = Carrier::indexed("A", 3);
        let r = rel(&a, &a, &[(0, 1), (1, 2)]);
        let phi = ldom(&r).into_relation();
        let mut psi = rdom(&r).into_relation();
        assert!(verify_witness(&r, &r, &phi, &psi).unwrap().all());
        psi.insert(0, 0);
        assert!(!verify_witness(&r, &r, &phi, &psi).unwrap().all());
    }

    #[test]
    fn bound_is_enforced() {
        let a = Carrier::indexed("A", 9);
        let id = Relation::identity(&a);
        assert_eq!(find_isomorphism(&id, &id), Err(IsoError::Bound { points: 9, bound: 8 }));
        assert!(find_isomorphism_bounded(&id, &id, 9).unwrap().is_some());
    }

    #[test]
    fn matches_oracle_2x2_to_2x2() {
        let a = Carrier::indexed("A", 2);
        let b = Carrier::indexed("B", 2);
        let c = Carrier::indexed("C", 2);
        let d = Carrier::indexed("D", 2);
        let rs: Vec<_> = enumerate_relations(&a, &b).unwrap().collect();
        let ss: Vec<_> = enumerate_relations(&c, &d).unwrap().collect();
        for r in &rs {
            for s in &ss {
                let found = find_isomorphism(r, s).unwrap();
                assert_eq!(found.is_some(), iso_oracle(r, s), "{r:?} {s:?}");
                if let Some(w) = found {
                    assert!(verify_witness(r, s, &w.phi, &w.psi).unwrap().all());
                }
            }
        }
    }

    #[test]
    fn exchange_lemma_on_random_candidates() {
        let a = Carrier::indexed("A", 2);
        for r in enumerate_relations(&a, &a).unwrap() {
            for phi in enumerate_relations(&a, &a).unwrap() {
                for psi in enumerate_relations(&a, &a).unwrap() {
                    assert!(verify_witness(&r, &r, &phi, &psi).unwrap().exchange_consistent());
                }
            }
        }
    }
}
