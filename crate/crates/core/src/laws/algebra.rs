//! Lattice, composition, converse, modularity and residual laws.

use super::{implies, law, Law};
use crate::domains::{is_equivalence, is_reflexive, is_transitive};
use crate::factors::{left_residual, right_residual, sym_left_div, sym_right_div};
use crate::relcore::{cone_check, dedekind_check, Relation};

pub(super) fn laws() -> Vec<Law> {
    vec![
        law!("lattice.order", "⊆ is reflexive, antisymmetric and transitive", ["A", "B"],
            [R: Any(0, 1), S: Any(0, 1), T: Any(0, 1)], |x| {
            Ok(R.is_subset(R)?
                && implies(R.is_subset(S)? && S.is_subset(R)?, R == S)
                && implies(R.is_subset(S)? && S.is_subset(T)?, R.is_subset(T)?))
        }),
        law!("lattice.bounds", "⊥ ⊆ R ⊆ ⊤", ["A", "B"], [R: Any(0, 1)], |x| {
            Ok(R.bottom_like().is_subset(R)? && R.is_subset(&R.top_like())?)
        }),
        law!("lattice.join", "R∪S ⊆ T ⇔ R ⊆ T ∧ S ⊆ T", ["A", "B"],
            [R: Any(0, 1), S: Any(0, 1), T: Any(0, 1)], |x| {
            Ok(R.union(S)?.is_subset(T)? == (R.is_subset(T)? && S.is_subset(T)?))
        }),
        law!("lattice.meet", "T ⊆ R∩S ⇔ T ⊆ R ∧ T ⊆ S", ["A", "B"],
            [R: Any(0, 1), S: Any(0, 1), T: Any(0, 1)], |x| {
            Ok(T.is_subset(&R.intersect(S)?)? == (T.is_subset(R)? && T.is_subset(S)?))
        }),
        law!("lattice.distributive", "R∩(S∪T) = (R∩S)∪(R∩T)", ["A", "B"],
            [R: Any(0, 1), S: Any(0, 1), T: Any(0, 1)], |x| {
            Ok(R.intersect(&S.union(T)?)?.equals(&R.intersect(S)?.union(&R.intersect(T)?)?)?)
        }),
        law!("lattice.complement", "R∪¬R = ⊤ ∧ R∩¬R = ⊥", ["A", "B"], [R: Any(0, 1)], |x| {
            let n = R.complement();
            Ok(R.union(&n)?.is_top() && R.intersect(&n)?.is_bottom())
        }),
        law!("compose.assoc", "(R∘S)∘T = R∘(S∘T)", ["A", "B", "C", "D"],
            [R: Any(0, 1), S: Any(1, 2), T: Any(2, 3)], |x| {
            Ok(R.compose(S)?.compose(T)?.equals(&R.compose(&S.compose(T)?)?)?)
        }),
        law!("compose.unit", "𝕀∘R = R = R∘𝕀", ["A", "B"], [R: Any(0, 1)], |x| {
            Ok(R.src_identity().compose(R)?.equals(R)? && R.compose(&R.dst_identity())?.equals(R)?)
        }),
        law!("compose.zero", "⊥∘R = ⊥ = R∘⊥", ["A", "B", "C"], [R: Any(0, 1)], |x| {
            let l = Relation::bottom(x.carrier(2), x.carrier(0)).compose(R)?;
            let r = R.compose(&Relation::bottom(x.carrier(1), x.carrier(2)))?;
            Ok(l.is_bottom() && r.is_bottom())
        }),
        law!("compose.monotone", "R ⊆ S ⇒ R∘T ⊆ S∘T ∧ U∘R ⊆ U∘S", ["A", "B", "C"],
            [R: Any(0, 1), S: Any(0, 1), T: Any(1, 2), U: Any(2, 0)], |x| {
            Ok(implies(
                R.is_subset(S)?,
                R.compose(T)?.is_subset(&S.compose(T)?)? && U.compose(R)?.is_subset(&U.compose(S)?)?,
            ))
        }),
        law!("compose.distributes.union", "R∘(S∪T) = R∘S ∪ R∘T ∧ (S∪T)∘U = S∘U ∪ T∘U", ["A", "B", "C"],
            [R: Any(0, 1), S: Any(1, 2), T: Any(1, 2), U: Any(2, 0)], |x| {
            let st = S.union(T)?;
            Ok(R.compose(&st)?.equals(&R.compose(S)?.union(&R.compose(T)?)?)?
                && st.compose(U)?.equals(&S.compose(U)?.union(&T.compose(U)?)?)?)
        }),
        law!("converse.involution", "R°° = R ∧ 𝕀° = 𝕀", ["A", "B"], [R: Any(0, 1)], |x| {
            Ok(R.converse().converse().equals(R)? && R.src_identity().converse() == R.src_identity())
        }),
        law!("converse.compose", "(R∘S)° = S°∘R°", ["A", "B", "C"], [R: Any(0, 1), S: Any(1, 2)], |x| {
            Ok(R.compose(S)?.converse().equals(&S.converse().compose(&R.converse())?)?)
        }),
        law!("converse.monotone", "R ⊆ S ⇔ R° ⊆ S°", ["A", "B"], [R: Any(0, 1), S: Any(0, 1)], |x| {
            Ok(R.is_subset(S)? == R.converse().is_subset(&S.converse())?)
        }),
        law!("converse.lattice", "(R∪S)° = R°∪S° ∧ (R∩S)° = R°∩S° ∧ (¬R)° = ¬(R°)", ["A", "B"],
            [R: Any(0, 1), S: Any(0, 1)], |x| {
            let (rc, sc) = (R.converse(), S.converse());
            Ok(R.union(S)?.converse().equals(&rc.union(&sc)?)?
                && R.intersect(S)?.converse().equals(&rc.intersect(&sc)?)?
                && R.complement().converse() == rc.complement())
        }),
        law!("modular.left", "R∘S ∩ T ⊆ R∘(S ∩ R°∘T)", ["A", "B", "C"],
            [R: Any(0, 1), S: Any(1, 2), T: Any(0, 2)], |x| {
            Ok(R.compose(S)?.intersect(T)?.is_subset(&R.compose(&S.intersect(&R.converse().compose(T)?)?)?)?)
        }),
        law!("modular.right", "R∘S ∩ T ⊆ (R ∩ T∘S°)∘S", ["A", "B", "C"],
            [R: Any(0, 1), S: Any(1, 2), T: Any(0, 2)], |x| {
            Ok(R.compose(S)?.intersect(T)?.is_subset(&R.intersect(&T.compose(&S.converse())?)?.compose(S)?)?)
        }),
        law!("modular.check", "the modularity checker accepts every well-typed triple", ["A", "B", "C"],
            [R: Any(0, 1), S: Any(1, 2), T: Any(0, 2)], |x| { Ok(dedekind_check(R, S, T)?) }),
        law!("modular.identity", "R ⊆ R∘R°∘R", ["A", "B"], [R: Any(0, 1)], |x| {
            Ok(R.is_subset(&R.compose(&R.converse())?.compose(R)?)?)
        }),
        law!("cone.rule", "R ≠ ⊥ ⇒ ⊤∘R∘⊤ = ⊤", ["A", "B", "C", "D"], [R: Any(1, 2)], |x| {
            let t = Relation::top(x.carrier(0), x.carrier(1))
                .compose(R)?
                .compose(&Relation::top(x.carrier(2), x.carrier(3)))?;
            Ok(cone_check(R) && implies(!R.is_bottom(), t.is_top()))
        }),
        law!("factor.left.galois", "T ⊆ R\\S ⇔ R∘T ⊆ S", ["A", "B", "C"],
            [R: Any(0, 1), S: Any(0, 2), T: Any(1, 2)], |x| {
            Ok(T.is_subset(&left_residual(R, S)?)? == R.compose(T)?.is_subset(S)?)
        }),
        law!("factor.right.galois", "T ⊆ R/S ⇔ T∘S ⊆ R", ["A", "B", "C"],
            [R: Any(0, 1), S: Any(2, 1), T: Any(0, 2)], |x| {
            Ok(T.is_subset(&right_residual(R, S)?)? == T.compose(S)?.is_subset(R)?)
        }),
        law!("factor.cancel", "R∘(R\\S) ⊆ S ∧ (S/R)∘R ⊆ S", ["A", "B", "C"],
            [R: Any(0, 1), S: Any(0, 2), U: Any(2, 1)], |x| {
            Ok(R.compose(&left_residual(R, S)?)?.is_subset(S)?
                && right_residual(U, R)?.compose(R)?.is_subset(U)?)
        }),
        law!("factor.self.cancel", "R∘(R\\R) = R = (R/R)∘R", ["A", "B"], [R: Any(0, 1)], |x| {
            Ok(R.compose(&left_residual(R, R)?)?.equals(R)? && right_residual(R, R)?.compose(R)?.equals(R)?)
        }),
        law!("factor.preorders", "R\\R and R/R are reflexive and transitive", ["A", "B"], [R: Any(0, 1)], |x| {
            let (l, r) = (left_residual(R, R)?, right_residual(R, R)?);
            Ok(is_reflexive(&l) && is_transitive(&l) && is_reflexive(&r) && is_transitive(&r))
        }),
        law!("factor.converse", "(R\\S)° = S°/R°", ["A", "B", "C"], [R: Any(0, 1), S: Any(0, 2)], |x| {
            Ok(left_residual(R, S)?.converse().equals(&right_residual(&S.converse(), &R.converse())?)?)
        }),
        law!("factor.composition", "(R∘S)\\T = S\\(R\\T)", ["A", "B", "C", "D"],
            [R: Any(0, 1), S: Any(1, 2), T: Any(0, 3)], |x| {
            Ok(left_residual(&R.compose(S)?, T)?.equals(&left_residual(S, &left_residual(R, T)?)?)?)
        }),
        law!("symdiv.equivalence", "R\\\\R and R//R are equivalences", ["A", "B"], [R: Any(0, 1)], |x| {
            Ok(is_equivalence(&sym_right_div(R, R)?) && is_equivalence(&sym_left_div(R, R)?))
        }),
        law!("symdiv.converse", "(R\\\\S)° = S\\\\R ∧ (R//S)° = S//R", ["A", "B", "C"],
            [R: Any(0, 1), S: Any(0, 2), U: Any(2, 1)], |x| {
            Ok(sym_right_div(R, S)?.converse().equals(&sym_right_div(S, R)?)?
                && sym_left_div(R, U)?.converse().equals(&sym_left_div(U, R)?)?)
        }),
        law!("symdiv.cancel", "R∘(R\\\\R) = R = (R//R)∘R", ["A", "B"], [R: Any(0, 1)], |x| {
            Ok(R.compose(&sym_right_div(R, R)?)?.equals(R)? && sym_left_div(R, R)?.compose(R)?.equals(R)?)
        }),
    ]
}
