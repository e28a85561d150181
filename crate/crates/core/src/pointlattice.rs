//! Points, pairs, particles and atoms; the all-or-nothing rule and the
//! decomposition of a relation into point pairs.

use serde::Serialize;

use crate::domains::{is_symmetric, ldom, rdom, LawCheck};
use crate::relcore::{
    enumerate_coreflexives, enumerate_relations, enumerate_subrelations, is_coreflexive, Carrier, RelError,
    Relation,
};

/// Which lattice atomicity is judged in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Lattice {
    Relations,
    Coreflexives,
}

/// `∀q: q ⊆ R ≡ q = R ∨ q = ⊥`, with `q` ranging over the chosen lattice.
/// Only inputs with at most two pairs are examined by enumeration.
pub fn is_atom(r: &Relation, lattice: Lattice) -> bool {
    if lattice == Lattice::Coreflexives && !is_coreflexive(r) {
        return false;
    }
    if r.count() > 2 {
        return false;
    }
    enumerate_subrelations(r).all(|q| q == *r || q.is_bottom())
}

/// A proper coreflexive atom.
pub fn is_point(p: &Relation) -> Result<bool, RelError> {
    p.require_homogeneous("is_point")?;
    Ok(!p.is_bottom() && is_coreflexive(p) && is_atom(p, Lattice::Coreflexives))
}

/// `Z ≠ ⊥`, `Z = Z∘⊤∘Z`, `Z< = Z∘Z°`, `Z> = Z°∘Z`.
pub fn is_pair(z: &Relation) -> bool {
    if z.is_bottom() {
        return false;
    }
    let zc = z.converse();
    let top = Relation::top(z.dst(), z.src());
    let c = |a: &Relation, b: &Relation| a.compose(b).expect("well typed");
    c(&c(z, &top), z) == *z && c(z, &zc) == ldom(z).into_relation() && c(&zc, z) == rdom(z).into_relation()
}

/// A symmetric pair.
pub fn is_particle(z: &Relation) -> bool {
    z.is_homogeneous() && is_symmetric(z) && is_pair(z)
}

/// All points of a carrier, in element order.
pub fn points(carrier: &Carrier) -> Vec<Relation> {
    (0..carrier.size()).map(|a| Relation::point(carrier, a)).collect()
}

/// `a∘⊤∘b` for points `a: A`, `b: B`.
pub fn point_pair(a: &Relation, b: &Relation) -> Result<Relation, RelError> {
    a.compose(&Relation::top(a.dst(), b.src()))?.compose(b)
}

fn push(out: &mut Vec<LawCheck>, law: &'static str, holds: bool) {
    out.push(LawCheck { law, holds });
}

/// Point facts on one carrier.
pub fn point_law_suite(carrier: &Carrier) -> Vec<LawCheck> {
    let mut out = Vec::new();
    let pts: Vec<Relation> = enumerate_coreflexives(carrier)
        .filter(|p| is_point(p).unwrap_or(false))
        .collect();
    push(&mut out, "points.are.singletons", pts == points(carrier));
    push(
        &mut out,
        "points.disjoint",
        pts.iter().all(|a| {
            pts.iter()
                .all(|b| a == b || a.compose(b).map(|x| x.is_bottom()).unwrap_or(false))
        }),
    );
    push(
        &mut out,
        "points.saturate",
        enumerate_coreflexives(carrier).all(|p| {
            let below = pts
                .iter()
                .filter(|a| a.is_subset(&p).unwrap_or(false))
                .fold(p.bottom_like(), |acc, a| acc.union(a).expect("same type"));
            below == p
        }),
    );
    let count = enumerate_coreflexives(carrier).count();
    push(&mut out, "points.powerset.count", count == 1usize << pts.len());
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquivalenceReport {
    pub instances: usize,
    pub both: usize,
    pub disagreements: Vec<Vec<[usize; 2]>>,
}

impl EquivalenceReport {
    pub fn holds(&self) -> bool {
        self.disagreements.is_empty()
    }
}

fn pairs_of(r: &Relation) -> Vec<[usize; 2]> {
    r.pairs().map(|(a, b)| [a, b]).collect()
}

/// Every homogeneous relation on `carrier` is a point iff it is a particle.
pub fn particle_point_equivalence(carrier: &Carrier) -> Result<EquivalenceReport, RelError> {
    let mut rep = EquivalenceReport {
        instances: 0,
        both: 0,
        disagreements: Vec::new(),
    };
    for r in enumerate_relations(carrier, carrier)? {
        rep.instances += 1;
        let pt = is_point(&r)?;
        let pa = is_particle(&r);
        let rect_coref = !r.is_bottom() && is_coreflexive(&r) && crate::domains::is_rectangle(&r);
        if pt && pa {
            rep.both += 1;
        }
        if pt != pa || pa != rect_coref {
            rep.disagreements.push(pairs_of(&r));
        }
    }
    Ok(rep)
}

/// Over `A~B`: proper atom iff pair; domains of pairs are particles and
/// domains of proper atoms are proper atoms.
pub fn atom_pair_equivalence(a: &Carrier, b: &Carrier) -> Result<EquivalenceReport, RelError> {
    let mut rep = EquivalenceReport {
        instances: 0,
        both: 0,
        disagreements: Vec::new(),
    };
    for r in enumerate_relations(a, b)? {
        rep.instances += 1;
        let atom = !r.is_bottom() && is_atom(&r, Lattice::Relations);
        let pair = is_pair(&r);
        let mut ok = atom == pair;
        if pair {
            rep.both += 1;
            ok &= is_particle(ldom(&r).as_relation()) && is_particle(rdom(&r).as_relation());
            ok &= crate::domains::is_rectangle(&r);
        }
        if atom {
            let l = ldom(&r).into_relation();
            let rd = rdom(&r).into_relation();
            ok &= !l.is_bottom() && is_atom(&l, Lattice::Relations);
            ok &= !rd.is_bottom() && is_atom(&rd, Lattice::Relations);
        }
        if !ok {
            rep.disagreements.push(pairs_of(&r));
        }
    }
    Ok(rep)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Bottom,
    Full,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PointError {
    #[error("{which} is not a point")]
    NotPoint { which: &'static str },
    #[error(transparent)]
    Rel(#[from] RelError),
}

/// Which disjunct of `a∘R∘b = ⊥ ∨ a∘R∘b = a∘⊤∘b` holds.
pub fn all_or_nothing(r: &Relation, a: &Relation, b: &Relation) -> Result<Outcome, PointError> {
    if !is_point(a)? {
        return Err(PointError::NotPoint { which: "a" });
    }
    if !is_point(b)? {
        return Err(PointError::NotPoint { which: "b" });
    }
    let arb = a.compose(r)?.compose(b)?;
    if arb.is_bottom() {
        Ok(Outcome::Bottom)
    } else if arb == point_pair(a, b)? {
        Ok(Outcome::Full)
    } else {
        unreachable!("a∘R∘b is neither ⊥ nor a∘⊤∘b for points a, b")
    }
}

/// The point pairs `(a, b)` with `a∘⊤∘b ⊆ R`, found algebraically over all
/// points of both carriers, as element indices.
pub fn decompose_to_pairs(r: &Relation) -> Vec<(usize, usize)> {
    let srcs = points(r.src());
    let dsts = points(r.dst());
    let mut out = Vec::new();
    for (i, a) in srcs.iter().enumerate() {
        for (j, b) in dsts.iter().enumerate() {
            let z = point_pair(a, b).expect("well typed");
            if z.is_subset(r).expect("same type") {
                out.push((i, j));
            }
        }
    }
    out
}

/// Union of `a∘⊤∘b` over a pair list.
pub fn reassemble(src: &Carrier, dst: &Carrier, pairs: &[(usize, usize)]) -> Relation {
    pairs.iter().fold(Relation::bottom(src, dst), |acc, &(a, b)| {
        let z = point_pair(&Relation::point(src, a), &Relation::point(dst, b)).expect("well typed");
        acc.union(&z).expect("same type")
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: &Carrier, b: &Carrier, ps: &[(usize, usize)]) -> Relation {
        Relation::from_pairs(a, b, ps.iter().copied()).unwrap()
    }

    #[test]
    fn point_examples() {
        let three = Carrier::indexed("A", 3);
        assert!(is_point(&rel(&three, &three, &[(0, 0)])).unwrap());
        let two = Carrier::indexed("B", 2);
        assert!(!is_point(&Relation::identity(&two)).unwrap());
        assert!(!is_point(&Relation::bottom(&two, &two)).unwrap());
        assert!(is_point(&Relation::bottom(&two, &three)).is_err());
    }

    #[test]
    fn pair_examples() {
        let three = Carrier::indexed("A", 3);
        let z = point_pair(&Relation::point(&three, 0), &Relation::point(&three, 2)).unwrap();
        assert!(is_pair(&z) && !is_particle(&z));
        assert!(is_particle(&rel(&three, &three, &[(0, 0)])));
        let two = Carrier::indexed("B", 2);
        assert!(!is_pair(&Relation::identity(&two)));
        assert!(!is_pair(&Relation::bottom(&two, &two)));
    }

    #[test]
    fn atom_examples() {
        let two = Carrier::indexed("A", 2);
        assert!(is_atom(&rel(&two, &two, &[(1, 0)]), Lattice::Relations));
        assert!(is_atom(&Relation::bottom(&two, &two), Lattice::Relations));
        assert!(!is_atom(&rel(&two, &two, &[(0, 0), (1, 0)]), Lattice::Relations));
        assert!(!is_atom(&rel(&two, &two, &[(1, 0)]), Lattice::Coreflexives));
    }

    #[test]
    fn point_suite_size_three() {
        let three = Carrier::indexed("A", 3);
        assert!(point_law_suite(&three).iter().all(|c| c.holds));
        assert_eq!(points(&three).len(), 3);
    }

    #[test]
    fn particle_point_counts() {
        let three = Carrier::indexed("A", 3);
        let rep = particle_point_equivalence(&three).unwrap();
        assert!(rep.holds());
        assert_eq!(rep.both, 3);
        let one = Carrier::indexed("B", 1);
        let rep = particle_point_equivalence(&one).unwrap();
        assert_eq!(rep.both, 1);
        let two = Carrier::indexed("C", 2);
        assert!(!is_particle(&Relation::top(&two, &two)));
    }

    #[test]
    fn atom_pair_on_2x2() {
        let a = Carrier::indexed("A", 2);
        let b = Carrier::indexed("B", 2);
        let rep = atom_pair_equivalence(&a, &b).unwrap();
        assert!(rep.holds());
        assert_eq!(rep.both, 4);
        let z = rel(&a, &b, &[(0, 1)]);
        assert_eq!(ldom(&z).into_relation(), rel(&a, &a, &[(0, 0)]));
        assert_eq!(rdom(&z).into_relation(), rel(&b, &b, &[(1, 1)]));
    }

    #[test]
    fn all_or_nothing_examples() {
        let two = Carrier::indexed("A", 2);
        let (p0, p1) = (Relation::point(&two, 0), Relation::point(&two, 1));
        let r = rel(&two, &two, &[(0, 1)]);
        assert_eq!(all_or_nothing(&r, &p0, &p1).unwrap(), Outcome::Full);
        assert_eq!(all_or_nothing(&r, &p1, &p0).unwrap(), Outcome::Bottom);
        let top = Relation::top(&two, &two);
        for a in points(&two) {
            for b in points(&two) {
                assert_eq!(all_or_nothing(&top, &a, &b).unwrap(), Outcome::Full);
            }
        }
        let id = Relation::identity(&two);
        assert!(matches!(all_or_nothing(&r, &id, &p0), Err(PointError::NotPoint { which: "a" })));
    }

    #[test]
    fn decompose_examples() {
        let three = Carrier::indexed("A", 3);
        assert!(decompose_to_pairs(&Relation::bottom(&three, &three)).is_empty());
        let r = rel(&three, &three, &[(0, 1), (2, 0)]);
        assert_eq!(decompose_to_pairs(&r), vec![(0, 1), (2, 0)]);
        for r in enumerate_relations(&three, &three).unwrap() {
            let ps = decompose_to_pairs(&r);
            assert_eq!(ps, r.pairs().collect::<Vec<_>>());
            assert_eq!(reassemble(r.src(), r.dst(), &ps), r);
        }
    }
}
