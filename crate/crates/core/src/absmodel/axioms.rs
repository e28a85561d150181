use serde::Serialize;

use super::{AbstractModel, StructuralLaw};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Axiom {
    Lattice,
    Monoid,
    Converse,
    Dedekind,
    Cone,
    Choice,
    AllOrNothing,
    Extensional,
    UniversalChoice,
}

impl Axiom {
    pub const ALL: [Axiom; 9] = [
        Axiom::Lattice,
        Axiom::Monoid,
        Axiom::Converse,
        Axiom::Dedekind,
        Axiom::Cone,
        Axiom::Choice,
        Axiom::AllOrNothing,
        Axiom::Extensional,
        Axiom::UniversalChoice,
    ];

    fn structural(self) -> &'static [StructuralLaw] {
        match self {
            Axiom::Lattice => &[StructuralLaw::PartialOrder, StructuralLaw::Lattice, StructuralLaw::Bounds],
            Axiom::Monoid => &[
                StructuralLaw::Associativity,
                StructuralLaw::IdentityUnit,
                StructuralLaw::BottomZero,
                StructuralLaw::Distributivity,
            ],
            Axiom::Converse => &[
                StructuralLaw::ConverseInvolution,
                StructuralLaw::ConverseMonotone,
                StructuralLaw::ConverseAntiHomomorphism,
            ],
            _ => &[],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomOutcome {
    pub holds: bool,
    /// Element names; present iff `holds` is false.
    pub counterexample: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub lattice: AxiomOutcome,
    pub monoid: AxiomOutcome,
    pub converse: AxiomOutcome,
    pub dedekind: AxiomOutcome,
    pub cone: AxiomOutcome,
    pub choice: AxiomOutcome,
    pub all_or_nothing: AxiomOutcome,
    pub extensional: AxiomOutcome,
    pub universal_choice: AxiomOutcome,
}

impl AxiomReport {
    pub fn get(&self, axiom: Axiom) -> &AxiomOutcome {
        match axiom {
            Axiom::Lattice => &self.lattice,
            Axiom::Monoid => &self.monoid,
            Axiom::Converse => &self.converse,
            Axiom::Dedekind => &self.dedekind,
            Axiom::Cone => &self.cone,
            Axiom::Choice => &self.choice,
            Axiom::AllOrNothing => &self.all_or_nothing,
            Axiom::Extensional => &self.extensional,
            Axiom::UniversalChoice => &self.universal_choice,
        }
    }
}

/// Prefix for structural counterexamples so re-evaluation knows which law failed.
fn tag(law: StructuralLaw) -> String {
    format!("{law:?}")
}

impl AbstractModel {
    fn c3(&self, x: usize, y: usize, z: usize) -> usize {
        self.comp(self.comp(x, y), z)
    }

    fn is_per_element(&self, p: usize) -> bool {
        self.conv(p) == p && self.leq(self.comp(p, p), p)
    }

    /// `x< = 𝕀 ∧ x∘x°`.
    pub fn ldom(&self, x: usize) -> usize {
        self.meet(self.identity(), self.comp(x, self.conv(x)))
    }

    /// `x> = 𝕀 ∧ x°∘x`.
    pub fn rdom(&self, x: usize) -> usize {
        self.meet(self.identity(), self.comp(self.conv(x), x))
    }

    fn is_per_index(&self, p: usize, j: usize) -> bool {
        self.leq(j, self.identity())
            && self.leq(j, self.ldom(p))
            && self.c3(j, p, j) == j
            && self.c3(p, j, p) == p
    }

    /// Proper atoms below the identity.
    pub fn points(&self) -> Vec<usize> {
        let cs = self.coreflexives();
        cs.iter()
            .copied()
            .filter(|&p| {
                p != self.bottom() && cs.iter().all(|&q| !self.leq(q, p) || q == p || q == self.bottom())
            })
            .collect()
    }

    fn violates(&self, axiom: Axiom, w: &[usize]) -> bool {
        let (bot, top, id) = (self.bottom(), self.top(), self.identity());
        match (axiom, w) {
            (Axiom::Dedekind, [x, y, z]) => {
                let lhs = self.meet(self.comp(*x, *y), *z);
                let r1 = self.comp(*x, self.meet(*y, self.comp(self.conv(*x), *z)));
                let r2 = self.comp(self.meet(*x, self.comp(*z, self.conv(*y))), *y);
                !self.leq(lhs, r1) || !self.leq(lhs, r2)
            }
            (Axiom::Cone, [x]) => *x != bot && self.c3(top, *x, top) != top,
            (Axiom::Choice, [p]) => {
                self.is_per_element(*p) && !self.coreflexives().into_iter().any(|j| self.is_per_index(*p, j))
            }
            (Axiom::AllOrNothing, [a, r, b]) => {
                let pts = self.points();
                let v = self.c3(*a, *r, *b);
                pts.contains(a) && pts.contains(b) && v != bot && v != self.c3(*a, top, *b)
            }
            (Axiom::Extensional, [p]) => {
                let pts = self.points();
                self.leq(*p, id) && self.join_all(pts.into_iter().filter(|&a| self.leq(a, *p))) != *p
            }
            (Axiom::Extensional, [x, y, z]) => {
                self.leq(*x, id)
                    && self.leq(*y, id)
                    && self.leq(*z, id)
                    && self.meet(*x, self.join(*y, *z)) != self.join(self.meet(*x, *y), self.meet(*x, *z))
            }
            (Axiom::UniversalChoice, [r]) => !(0..self.size()).any(|f| {
                self.leq(f, *r) && self.leq(self.comp(f, self.conv(f)), id) && self.rdom(f) == self.rdom(*r)
            }),
            _ => false,
        }
    }

    fn first_violation(&self, axiom: Axiom) -> Option<Vec<String>> {
        let n = self.size();
        for &law in axiom.structural() {
            if let Some(w) = self.first_structural_violation(law) {
                let mut out = vec![tag(law)];
                out.extend(self.names_of(&w));
                return Some(out);
            }
        }
        let singles = || (0..n).map(|x| vec![x]);
        let triples = || super::triples(n).map(|(x, y, z)| vec![x, y, z]);
        let found = match axiom {
            Axiom::Lattice | Axiom::Monoid | Axiom::Converse => None,
            Axiom::Dedekind | Axiom::AllOrNothing => triples().find(|w| self.violates(axiom, w)),
            Axiom::Extensional => singles()
                .find(|w| self.violates(axiom, w))
                .or_else(|| triples().find(|w| self.violates(axiom, w))),
            _ => singles().find(|w| self.violates(axiom, w)),
        };
        found.map(|w| self.names_of(&w))
    }
}

/// Evaluates every axiom, recording the first counterexample in element order.
pub fn check_axioms(m: &AbstractModel) -> AxiomReport {
    let o = |a: Axiom| {
        let cx = m.first_violation(a);
        AxiomOutcome {
            holds: cx.is_none(),
            counterexample: cx,
        }
    };
    AxiomReport {
        lattice: o(Axiom::Lattice),
        monoid: o(Axiom::Monoid),
        converse: o(Axiom::Converse),
        dedekind: o(Axiom::Dedekind),
        cone: o(Axiom::Cone),
        choice: o(Axiom::Choice),
        all_or_nothing: o(Axiom::AllOrNothing),
        extensional: o(Axiom::Extensional),
        universal_choice: o(Axiom::UniversalChoice),
    }
}

/// True iff the named elements still violate the axiom.
pub fn reevaluate(m: &AbstractModel, axiom: Axiom, counterexample: &[String]) -> bool {
    let (law, names) = match axiom.structural() {
        [] => (None, counterexample),
        laws => match counterexample.split_first() {
            Some((t, rest)) => match laws.iter().find(|l| tag(**l) == *t) {
                Some(l) => (Some(*l), rest),
                None => return false,
            },
            None => return false,
        },
    };
    let Some(w) = names.iter().map(|n| m.index_of(n)).collect::<Option<Vec<_>>>() else {
        return false;
    };
    match law {
        Some(l) => m.violates_structural(l, &w),
        None => m.violates(axiom, &w),
    }
}
