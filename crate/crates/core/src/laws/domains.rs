//! Coreflexives, domains, per domains, pers, functionals, difunctions,
//! rectangles and isomorphism.

use super::{implies, law, Law};
use crate::domains::{
    difun_characterisation, is_bijection, is_core_relation, is_difunctional, is_functional, is_injective, is_per,
    is_rectangle, is_square, is_symmetric, ldom, per_characterisation, per_ldom, per_rdom, rdom,
};
use crate::factors::{left_residual, right_residual, sym_left_div, sym_right_div};
use crate::isomorph::{find_isomorphism, verify_witness};
use crate::relcore::{is_coreflexive, Relation};

fn l(r: &Relation) -> Relation {
    ldom(r).into_relation()
}

fn r_(r: &Relation) -> Relation {
    rdom(r).into_relation()
}

pub(super) fn laws() -> Vec<Law> {
    vec![
        law!("coreflexive.idempotent", "p = p° = p∘p", ["A"], [p: Coreflexive(0, 0)], |x| {
            Ok(p.converse().equals(p)? && p.compose(p)?.equals(p)?)
        }),
        law!("coreflexive.meet", "p∘q = p∩q = q∘p", ["A"], [p: Coreflexive(0, 0), q: Coreflexive(0, 0)], |x| {
            let m = p.intersect(q)?;
            Ok(p.compose(q)?.equals(&m)? && q.compose(p)?.equals(&m)?)
        }),
        law!("coreflexive.restrict", "p∘R = R ∩ p∘⊤ and R∘q = R ∩ ⊤∘q", ["A", "B"],
            [p: Coreflexive(0, 0), R: Any(0, 1), q: Coreflexive(1, 1)], |x| {
            let t = R.top_like();
            Ok(p.compose(R)?.equals(&R.intersect(&p.compose(&t)?)?)?
                && R.compose(q)?.equals(&R.intersect(&t.compose(q)?)?)?)
        }),
        law!("domain.formula", "R< = 𝕀∩R∘R° ∧ R> = 𝕀∩R°∘R", ["A", "B"], [R: Any(0, 1)], |x| {
            let rc = R.converse();
            Ok(l(R).equals(&R.src_identity().intersect(&R.compose(&rc)?)?)?
                && r_(R).equals(&R.dst_identity().intersect(&rc.compose(R)?)?)?)
        }),
        law!("rdom.absorb", "R = R∘p ⇔ R> = R>∘p", ["A", "B"], [R: Any(0, 1), p: Coreflexive(1, 1)], |x| {
            let rd = r_(R);
            Ok(R.equals(&R.compose(p)?)? == rd.equals(&rd.compose(p)?)?)
        }),
        law!("ldom.absorb", "R = p∘R ⇔ R< = p∘R<", ["A", "B"], [R: Any(0, 1), p: Coreflexive(0, 0)], |x| {
            let ld = l(R);
            Ok(R.equals(&p.compose(R)?)? == ld.equals(&p.compose(&ld)?)?)
        }),
        law!("rdom.galois", "R> ⊆ p ⇔ R ⊆ ⊤∘p ⇔ R = R∘p", ["A", "B"], [R: Any(0, 1), p: Coreflexive(1, 1)], |x| {
            let a = r_(R).is_subset(p)?;
            Ok(a == R.is_subset(&R.top_like().compose(p)?)? && a == R.equals(&R.compose(p)?)?)
        }),
        law!("ldom.galois", "R< ⊆ p ⇔ R ⊆ p∘⊤ ⇔ R = p∘R", ["A", "B"], [R: Any(0, 1), p: Coreflexive(0, 0)], |x| {
            let a = l(R).is_subset(p)?;
            Ok(a == R.is_subset(&p.compose(&R.top_like())?)? && a == R.equals(&p.compose(R)?)?)
        }),
        law!("domains.least", "p∘R = R ⇒ R< ⊆ p ∧ R∘q = R ⇒ R> ⊆ q", ["A", "B"],
            [R: Any(0, 1), p: Coreflexive(0, 0), q: Coreflexive(1, 1)], |x| {
            Ok(implies(p.compose(R)?.equals(R)?, l(R).is_subset(p)?)
                && implies(R.compose(q)?.equals(R)?, r_(R).is_subset(q)?))
        }),
        law!("domains.unit", "R<∘R = R = R∘R>", ["A", "B"], [R: Any(0, 1)], |x| {
            Ok(l(R).compose(R)?.equals(R)? && R.compose(&r_(R))?.equals(R)?)
        }),
        law!("domains.bottom", "R< = ⊥ ⇔ R = ⊥ ⇔ R> = ⊥", ["A", "B"], [R: Any(0, 1)], |x| {
            Ok(l(R).is_bottom() == R.is_bottom() && r_(R).is_bottom() == R.is_bottom())
        }),
        law!("domains.top", "⊤∘R> = ⊤∘R ∧ R<∘⊤ = R∘⊤", ["A", "B", "C"], [R: Any(0, 1)], |x| {
            let tc = Relation::top(x.carrier(2), x.carrier(0));
            let tb = Relation::top(x.carrier(1), x.carrier(2));
            let ta = Relation::top(x.carrier(0), x.carrier(2));
            let tcb = Relation::top(x.carrier(2), x.carrier(1));
            Ok(tcb.compose(&r_(R))?.equals(&tc.compose(R)?)? && l(R).compose(&ta)?.equals(&R.compose(&tb)?)?)
        }),
        law!("domains.converse", "(R°)> = R< ∧ (R°)< = R>", ["A", "B"], [R: Any(0, 1)], |x| {
            let rc = R.converse();
            Ok(r_(&rc).equals(&l(R))? && l(&rc).equals(&r_(R))?)
        }),
        law!("domains.compose", "(R∘S)> = (R>∘S)> ∧ (R∘S)< = (R∘S<)<", ["A", "B", "C"],
            [R: Any(0, 1), S: Any(1, 2)], |x| {
            let rs = R.compose(S)?;
            Ok(r_(&rs).equals(&r_(&r_(R).compose(S)?))? && l(&rs).equals(&l(&R.compose(&l(S))?))?)
        }),
        law!("domains.monotone", "R ⊆ S ⇒ R< ⊆ S< ∧ R> ⊆ S>", ["A", "B"], [R: Any(0, 1), S: Any(0, 1)], |x| {
            Ok(implies(R.is_subset(S)?, l(R).is_subset(&l(S))? && r_(R).is_subset(&r_(S))?))
        }),
        law!("perdom.formula", "R≻ = R>∘(R\\\\R) = (R\\\\R)∘R> ∧ R≺ = (R//R)∘R< = R<∘(R//R)", ["A", "B"],
            [R: Any(0, 1)], |x| {
            let (sr, sl) = (sym_right_div(R, R)?, sym_left_div(R, R)?);
            let (pr, pl) = (per_rdom(R), per_ldom(R));
            Ok(pr.equals(&r_(R).compose(&sr)?)?
                && pr.equals(&sr.compose(&r_(R))?)?
                && pl.equals(&sl.compose(&l(R))?)?
                && pl.equals(&l(R).compose(&sl)?)?)
        }),
        law!("perdom.unit", "R≺∘R = R = R∘R≻", ["A", "B"], [R: Any(0, 1)], |x| {
            Ok(per_ldom(R).compose(R)?.equals(R)? && R.compose(&per_rdom(R))?.equals(R)?)
        }),
        law!("perdom.are.pers", "R≺ and R≻ are pers", ["A", "B"], [R: Any(0, 1)], |x| {
            Ok(is_per(&per_ldom(R))? && is_per(&per_rdom(R))?)
        }),
        law!("perdom.domains", "(R≻)< = R> = (R≻)> ∧ (R≺)< = R< = (R≺)>", ["A", "B"], [R: Any(0, 1)], |x| {
            let (pl, pr) = (per_ldom(R), per_rdom(R));
            let (rl, rr) = (l(R), r_(R));
            Ok(l(&pr).equals(&rr)? && r_(&pr).equals(&rr)? && l(&pl).equals(&rl)? && r_(&pl).equals(&rl)?)
        }),
        law!("perdom.least.right", "R = R∘P ⇔ R≻ = R≻∘P, for P a per", ["A", "B"],
            [R: Any(0, 1), P: Per(1, 1)], |x| {
            let pr = per_rdom(R);
            Ok(R.equals(&R.compose(P)?)? == pr.equals(&pr.compose(P)?)?)
        }),
        law!("perdom.least.left", "R = P∘R ⇔ R≺ = P∘R≺, for P a per", ["A", "B"],
            [R: Any(0, 1), P: Per(0, 0)], |x| {
            let pl = per_ldom(R);
            Ok(R.equals(&P.compose(R)?)? == pl.equals(&P.compose(&pl)?)?)
        }),
        law!("perdom.converse", "(R°)≻ = R≺ ∧ (R°)≺ = R≻", ["A", "B"], [R: Any(0, 1)], |x| {
            let rc = R.converse();
            Ok(per_rdom(&rc).equals(&per_ldom(R))? && per_ldom(&rc).equals(&per_rdom(R))?)
        }),
        law!("perdom.of.per", "P≺ = P = P≻ for a per P", ["A"], [P: Per(0, 0)], |x| {
            Ok(per_ldom(P).equals(P)? && per_rdom(P).equals(P)?)
        }),
        law!("per.characterisations", "P = P°∧P∘P ⊆ P ⇔ P = P°∘P ⇔ P = P≺ ⇔ P = P≻", ["A"], [R: Any(0, 0)], |x| {
            Ok(per_characterisation(R)?.consistent())
        }),
        law!("functional.def", "R∘R° = R< ⇔ R∘R° ⊆ 𝕀 ⇔ (R° injective)", ["A", "B"], [R: Any(0, 1)], |x| {
            let rrc = R.compose(&R.converse())?;
            let f = is_functional(R);
            Ok(f == rrc.equals(&l(R))? && f == rrc.is_subset(&R.src_identity())? && f == is_injective(&R.converse()))
        }),
        law!("functional.compose", "functionals compose", ["A", "B", "C"],
            [f: Functional(0, 1), g: Functional(1, 2)], |x| { Ok(is_functional(&f.compose(g)?)) }),
        law!("bijection.converse", "R is a bijection ⇔ R° is", ["A", "B"], [R: Any(0, 1)], |x| {
            Ok(is_bijection(R) == is_bijection(&R.converse()))
        }),
        law!("functional.split.per", "f functional ⇒ f°∘f is a per and f∘f° = f<", ["A", "B"],
            [f: Functional(0, 1)], |x| {
            Ok(is_per(&f.converse().compose(f)?)? && f.compose(&f.converse())?.equals(&l(f))?)
        }),
        law!("difunctional.characterisations", "the seven characterisations of difunctionality agree", ["A", "B"],
            [R: Any(0, 1)], |x| { Ok(difun_characterisation(R).consistent()) }),
        law!("difunctional.perdoms", "difunctional R ⇒ R≻ = R°∘R ∧ R≺ = R∘R°", ["A", "B"],
            [R: Difunctional(0, 1)], |x| {
            let rc = R.converse();
            Ok(per_rdom(R).equals(&rc.compose(R)?)? && per_ldom(R).equals(&R.compose(&rc)?)?)
        }),
        law!("difunctional.factors", "difunctional R ⇒ R>∘(R\\R) = R°∘R ∧ (R/R)∘R< = R∘R°", ["A", "B"],
            [R: Difunctional(0, 1)], |x| {
            let rc = R.converse();
            Ok(r_(R).compose(&left_residual(R, R)?)?.equals(&rc.compose(R)?)?
                && right_residual(R, R)?.compose(&l(R))?.equals(&R.compose(&rc)?)?)
        }),
        law!("difunctional.converse", "R difunctional ⇔ R° difunctional", ["A", "B"], [R: Any(0, 1)], |x| {
            Ok(is_difunctional(R) == is_difunctional(&R.converse()))
        }),
        law!("per.is.difunctional", "a per is symmetric and difunctional", ["A"], [P: Per(0, 0)], |x| {
            Ok(is_symmetric(P) && is_difunctional(P))
        }),
        law!("functional.split.difunctional", "f, g functional with f< = g< ⇒ f°∘g difunctional", ["A", "B", "C"],
            [f: Functional(0, 1), g: Functional(0, 2)], |x| {
            Ok(implies(l(f).equals(&l(g))?, is_difunctional(&f.converse().compose(g)?)))
        }),
        law!("rectangle.through.top", "R∘⊤∘S is a rectangle", ["A", "B", "C", "D"],
            [R: Any(0, 1), S: Any(2, 3)], |x| {
            Ok(is_rectangle(&R.compose(&Relation::top(x.carrier(1), x.carrier(2)))?.compose(S)?))
        }),
        law!("rectangle.compose", "T a rectangle ⇒ R∘T∘S a rectangle", ["A", "B", "C", "D"],
            [R: Any(0, 1), T: Rectangle(1, 2), S: Any(2, 3)], |x| {
            Ok(is_rectangle(&R.compose(T)?.compose(S)?))
        }),
        law!("rectangle.is.difunctional", "rectangles are difunctional; squares are pers", ["A", "B"],
            [R: Any(0, 1), Q: Any(0, 0)], |x| {
            Ok(implies(is_rectangle(R), is_difunctional(R)) && implies(is_square(Q), is_per(Q)?))
        }),
        law!("rectangle.domains", "R a rectangle ⇔ R = R<∘⊤∘R>", ["A", "B"], [R: Any(0, 1)], |x| {
            Ok(is_rectangle(R) == R.equals(&l(R).compose(&R.top_like())?.compose(&r_(R))?)?)
        }),
        law!("core.relation.def", "R is a core relation ⇔ R< = R≺ ∧ R> = R≻", ["A", "B"], [R: Any(0, 1)], |x| {
            Ok(is_core_relation(R) == (l(R).equals(&per_ldom(R))? && r_(R).equals(&per_rdom(R))?))
        }),
        law!("iso.reflexive", "(R<, R>) witnesses R ≅ R", ["A", "B"], [R: Any(0, 1)], |x| {
            Ok(verify_witness(R, R, &l(R), &r_(R))?.all())
        }),
        law!("iso.symmetric", "(φ, ψ) witnesses R ≅ S ⇒ (φ°, ψ°) witnesses S ≅ R", ["A", "B"],
            [R: Any(0, 1), S: Any(0, 1)], |x| {
            Ok(match find_isomorphism(R, S)? {
                Some(w) => {
                    verify_witness(R, S, &w.phi, &w.psi)?.all()
                        && verify_witness(S, R, &w.phi.converse(), &w.psi.converse())?.all()
                }
                None => find_isomorphism(S, R)?.is_none(),
            })
        }),
        law!("iso.transitive", "R ≅ S ∧ S ≅ T ⇒ R ≅ T by composed witnesses", ["A", "B"],
            [R: Any(0, 1), S: Any(0, 1), T: Any(0, 1)], |x| {
            let (Some(a), Some(b)) = (find_isomorphism(R, S)?, find_isomorphism(S, T)?) else {
                return Ok(true);
            };
            Ok(verify_witness(R, T, &a.phi.compose(&b.phi)?, &a.psi.compose(&b.psi)?)?.all())
        }),
        law!("iso.exchange", "under the domain equations, R = φ∘S∘ψ° ⇔ φ°∘R∘ψ = S", ["A", "B"],
            [R: Any(0, 1), S: Any(0, 1), phi: Bijection(0, 0), psi: Bijection(1, 1)], |x| {
            Ok(verify_witness(R, S, phi, psi)?.exchange_consistent())
        }),
        law!("iso.preserves.domains", "R ≅ S by (φ, ψ) ⇒ R< = φ∘S<∘φ° ∧ R≺ = φ∘S≺∘φ° (and dually)", ["A", "B"],
            [R: Any(0, 1), S: Any(0, 1)], |x| {
            let Some(w) = find_isomorphism(R, S)? else { return Ok(true) };
            let conj = |m: &Relation, t: &Relation| m.compose(t)?.compose(&m.converse());
            Ok(l(R).equals(&conj(&w.phi, &l(S))?)?
                && r_(R).equals(&conj(&w.psi, &r_(S))?)?
                && per_ldom(R).equals(&conj(&w.phi, &per_ldom(S))?)?
                && per_rdom(R).equals(&conj(&w.psi, &per_rdom(S))?)?)
        }),
        law!("iso.bijection.coreflexive", "R is a bijection ⇔ R ≅ R<", ["A", "B"], [R: Any(0, 1)], |x| {
            let ld = l(R);
            let iso = find_isomorphism(R, &ld)?;
            let witnessed = !is_bijection(R) || verify_witness(R, &ld, &ld, &R.converse())?.all();
            Ok(is_bijection(R) == iso.is_some() && witnessed)
        }),
        law!("iso.coreflexive.per", "P≺ ≅ P< ⇒ P≺ = P<, hence core relations are rigid", ["A", "B"],
            [R: Any(0, 1)], |x| {
            let (pl, pr) = (per_ldom(R), per_rdom(R));
            let (rl, rr) = (l(R), r_(R));
            Ok(implies(find_isomorphism(&pl, &rl)?.is_some(), pl == rl)
                && implies(find_isomorphism(&pr, &rr)?.is_some(), pr == rr))
        }),
        law!("iso.coreflexives", "coreflexives are isomorphic iff they have equally many elements", ["A"],
            [p: Coreflexive(0, 0), q: Coreflexive(0, 0)], |x| {
            Ok(is_coreflexive(p) && (find_isomorphism(p, q)?.is_some() == (p.count() == q.count())))
        }),
    ]
}
