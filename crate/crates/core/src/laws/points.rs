//! Atoms, points, pairs, particles, all-or-nothing and saturation.

use std::collections::BTreeSet;

use super::{implies, law, Law};
use crate::domains::{is_rectangle, ldom, rdom};
use crate::pointlattice::{
    all_or_nothing, atom_pair_equivalence, decompose_to_pairs, is_atom, is_pair, is_particle, is_point,
    particle_point_equivalence, point_law_suite, point_pair, points, reassemble, Lattice, Outcome,
};
use crate::relcore::{enumerate_coreflexives, enumerate_relations_bounded, is_coreflexive, Relation};

fn pairs_of(r: &Relation) -> BTreeSet<(usize, usize)> {
    decompose_to_pairs(r).into_iter().collect()
}

pub(super) fn laws() -> Vec<Law> {
    vec![
        law!("atom.iff.single", "R is an atom of the relation lattice ⇔ R has at most one pair", ["A", "B"],
            [R: Any(0, 1)], |x| { Ok(is_atom(R, Lattice::Relations) == (R.count() <= 1)) }),
        law!("atoms.saturate", "R is the union of the proper atoms below it", ["A", "B"], [R: Any(0, 1)], |x| {
            let mut acc = R.bottom_like();
            for (a, b) in R.pairs() {
                let at = Relation::from_pairs(R.src(), R.dst(), [(a, b)])?;
                if !is_atom(&at, Lattice::Relations) {
                    return Ok(false);
                }
                acc = acc.union(&at)?;
            }
            Ok(acc.equals(R)?)
        }),
        law!("points.disjoint", "distinct points a, b have a∘b = ⊥", ["A"], [a: Point(0, 0), b: Point(0, 0)], |x| {
            Ok(a == b || a.compose(b)?.is_bottom())
        }),
        law!("points.saturate", "every coreflexive is the union of the points below it", ["A"],
            [p: Coreflexive(0, 0)], |x| {
            let mut acc = p.bottom_like();
            for a in points(x.carrier(0)) {
                if a.is_subset(p)? {
                    acc = acc.union(&a)?;
                }
            }
            Ok(acc.equals(p)?)
        }),
        law!("points.count", "|A| points and 2^|A| coreflexives", ["A"], [], |x| {
            let c = x.carrier(0);
            let pts = points(c);
            let all_points = pts.iter().map(is_point).collect::<Result<Vec<_>, _>>()?;
            Ok(all_points.iter().all(|&b| b)
                && pts.len() == c.size()
                && enumerate_coreflexives(c).count() == 1 << pts.len()
                && point_law_suite(c).iter().all(|l| l.holds))
        }),
        law!("relations.count", "2^(|A|·|B|) relations, one per set of pairs", ["A", "B"], [], |x| {
            let (a, b) = (x.carrier(0), x.carrier(1));
            let n = a.size() * b.size();
            let all = enumerate_relations_bounded(a, b, 16)?;
            Ok(all.count() == 1 << n)
        }),
        law!("point.iff.particle", "point ⇔ particle ⇔ proper coreflexive rectangle", ["A"], [R: Any(0, 0)], |x| {
            let p = is_point(R)?;
            Ok(p == is_particle(R) && p == (!R.is_bottom() && is_coreflexive(R) && is_rectangle(R)))
        }),
        law!("point.particle.lattice", "points and particles coincide on the whole carrier", ["A"], [], |x| {
            Ok(particle_point_equivalence(x.carrier(0))?.holds())
        }),
        law!("pair.iff.proper.atom", "pair ⇔ proper atom ⇔ exactly one pair", ["A", "B"], [R: Any(0, 1)], |x| {
            let proper_atom = !R.is_bottom() && is_atom(R, Lattice::Relations);
            Ok(is_pair(R) == proper_atom && proper_atom == (R.count() == 1))
        }),
        law!("pair.atom.lattice", "pairs and proper atoms coincide on the whole type", ["A", "B"], [], |x| {
            Ok(atom_pair_equivalence(x.carrier(0), x.carrier(1))?.holds())
        }),
        law!("pair.domains", "a pair is a rectangle whose domains are points", ["A", "B"], [Z: Any(0, 1)], |x| {
            Ok(implies(
                is_pair(Z),
                is_rectangle(Z) && is_point(ldom(Z).as_relation())? && is_point(rdom(Z).as_relation())?,
            ))
        }),
        law!("pair.from.points", "a∘⊤∘b is a pair with domains a and b", ["A", "B"],
            [a: Point(0, 0), b: Point(1, 1)], |x| {
            let z = point_pair(a, b)?;
            Ok(is_pair(&z) && ldom(&z).as_relation() == a && rdom(&z).as_relation() == b)
        }),
        law!("pair.characterisation", "Z is a pair ⇔ Z = a∘⊤∘b for points a, b", ["A", "B"], [Z: Any(0, 1)], |x| {
            let mut found = false;
            for a in points(x.carrier(0)) {
                for b in points(x.carrier(1)) {
                    found |= point_pair(&a, &b)?.equals(Z)?;
                }
            }
            Ok(found == is_pair(Z))
        }),
        law!("all.or.nothing", "a∘R∘b is ⊥ or a∘⊤∘b, for points a, b", ["A", "B"],
            [a: Point(0, 0), R: Any(0, 1), b: Point(1, 1)], |x| {
            let v = a.compose(R)?.compose(b)?;
            let full = point_pair(a, b)?;
            let outcome = all_or_nothing(R, a, b)?;
            let agrees = match outcome {
                Outcome::Bottom => v.is_bottom(),
                Outcome::Full => v.equals(&full)?,
            };
            Ok(agrees && (v.is_bottom() || v.equals(&full)?))
        }),
        law!("saturation", "R = ∪{a∘⊤∘b ⊆ R}", ["A", "B"], [R: Any(0, 1)], |x| {
            let ps = decompose_to_pairs(R);
            let expect: Vec<(usize, usize)> = R.pairs().collect();
            Ok(ps == expect && reassemble(R.src(), R.dst(), &ps).equals(R)?)
        }),
        law!("irreducibility", "a∘⊤∘b ⊆ R∪S ⇔ a∘⊤∘b ⊆ R ∨ a∘⊤∘b ⊆ S", ["A", "B"],
            [a: Point(0, 0), b: Point(1, 1), R: Any(0, 1), S: Any(0, 1)], |x| {
            let z = point_pair(a, b)?;
            Ok(z.is_subset(&R.union(S)?)? == (z.is_subset(R)? || z.is_subset(S)?))
        }),
        law!("cone.pairs", "R ≠ ⊥ ⇔ some pair lies below R", ["A", "B"], [R: Any(0, 1)], |x| {
            Ok(R.is_bottom() == decompose_to_pairs(R).is_empty())
        }),
        law!("pointwise.compose", "a∘⊤∘c ⊆ R∘S ⇔ ∃b: a∘⊤∘b ⊆ R ∧ b∘⊤∘c ⊆ S", ["A", "B", "C"],
            [R: Any(0, 1), S: Any(1, 2)], |x| {
            let (rp, sp) = (pairs_of(R), pairs_of(S));
            let joined: BTreeSet<(usize, usize)> = rp
                .iter()
                .flat_map(|&(a, b)| sp.iter().filter(move |&&(b2, _)| b2 == b).map(move |&(_, c)| (a, c)))
                .collect();
            Ok(joined == pairs_of(&R.compose(S)?))
        }),
        law!("pointwise.converse", "a∘⊤∘b ⊆ R ⇔ b∘⊤∘a ⊆ R°", ["A", "B"], [R: Any(0, 1)], |x| {
            let swapped: BTreeSet<(usize, usize)> = pairs_of(R).into_iter().map(|(a, b)| (b, a)).collect();
            Ok(swapped == pairs_of(&R.converse()))
        }),
        law!("pointwise.lattice", "pairs below R∩S and R∪S are the meet and join of the pair sets", ["A", "B"],
            [R: Any(0, 1), S: Any(0, 1)], |x| {
            let (rp, sp) = (pairs_of(R), pairs_of(S));
            Ok(pairs_of(&R.intersect(S)?) == &rp & &sp && pairs_of(&R.union(S)?) == &rp | &sp)
        }),
    ]
}
