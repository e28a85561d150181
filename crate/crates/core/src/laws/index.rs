//! Indexes, cores, per and difunction indexes, choice and splittings.

use super::{implies, law, Law};
use crate::domains::{is_bijection, is_core_relation, is_difunctional, is_functional, ldom, per_ldom, per_rdom, rdom};
use crate::indexcore::{
    all_indexes, core_of, core_theorem_suite, difunction_index_suite, per_index, relation_index, splitting,
    verify_core, verify_index, verify_per_index, CoreMode, Policy,
};
use crate::isomorph::{find_isomorphism, is_isomorphic};
use crate::relcore::{is_coreflexive, Relation};

const POLICIES: [Policy; 3] = [Policy::Smallest, Policy::Largest, Policy::Seeded(7)];

fn l(r: &Relation) -> Relation {
    ldom(r).into_relation()
}

fn r_(r: &Relation) -> Relation {
    rdom(r).into_relation()
}

pub(super) fn laws() -> Vec<Law> {
    vec![
        law!("index.exists", "every relation has an index J∘R∘K built from per-domain indexes", ["A", "B"],
            [R: Any(0, 1)], |x| {
            for p in POLICIES {
                if !relation_index(R, p)?.is_index() {
                    return Ok(false);
                }
            }
            Ok(!all_indexes(R).is_empty())
        }),
        law!("index.of.itself", "an index of R is its own index", ["A", "B"], [R: Any(0, 1)], |x| {
            for j in all_indexes(R) {
                if !verify_index(&j, &j)?.is_index() {
                    return Ok(false);
                }
            }
            Ok(true)
        }),
        law!("index.is.core.relation", "J< = J≺ ∧ J> = J≻ for every index J", ["A", "B"], [R: Any(0, 1)], |x| {
            Ok(all_indexes(R).iter().all(is_core_relation))
        }),
        law!("core.relation.own.index", "a core relation is an index of itself", ["A", "B"], [R: Any(0, 1)], |x| {
            Ok(implies(is_core_relation(R), verify_index(R, R)?.is_index()))
        }),
        law!("index.perdom.below", "J≺ ⊆ R≺ ∧ J≻ ⊆ R≻ for every index J", ["A", "B"], [R: Any(0, 1)], |x| {
            let (pl, pr) = (per_ldom(R), per_rdom(R));
            for j in all_indexes(R) {
                if !(per_ldom(&j).is_subset(&pl)? && per_rdom(&j).is_subset(&pr)?) {
                    return Ok(false);
                }
            }
            Ok(true)
        }),
        law!("index.determined.by.domains", "indexes with equal domains are equal", ["A", "B"], [R: Any(0, 1)], |x| {
            let js = all_indexes(R);
            for j in &js {
                for k in &js {
                    if l(j) == l(k) && r_(j) == r_(k) && j != k {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        }),
        law!("index.restricts", "J = J<∘R∘J> for every index J", ["A", "B"], [R: Any(0, 1)], |x| {
            for j in all_indexes(R) {
                if !l(&j).compose(R)?.compose(&r_(&j))?.equals(&j)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }),
        law!("index.difunctional.closure", "R∘J°∘R = R∘R°∘R for every index J", ["A", "B"], [R: Any(0, 1)], |x| {
            let closure = R.compose(&R.converse())?.compose(R)?;
            for j in all_indexes(R) {
                if !R.compose(&j.converse())?.compose(R)?.equals(&closure)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }),
        law!("index.perdom.recovered", "R≺∘J<∘R≺ = R≺ ∧ R≻∘J>∘R≻ = R≻ for every index J", ["A", "B"],
            [R: Any(0, 1)], |x| {
            let (pl, pr) = (per_ldom(R), per_rdom(R));
            for j in all_indexes(R) {
                if !(pl.compose(&l(&j))?.compose(&pl)?.equals(&pl)? && pr.compose(&r_(&j))?.compose(&pr)?.equals(&pr)?) {
                    return Ok(false);
                }
            }
            Ok(true)
        }),
        law!("index.domains.index.perdoms", "J< indexes R≺ and J> indexes R≻", ["A", "B"], [R: Any(0, 1)], |x| {
            let (pl, pr) = (per_ldom(R), per_rdom(R));
            for j in all_indexes(R) {
                if !(verify_index(&pl, &l(&j))?.is_index()
                    && verify_index(&pr, &r_(&j))?.is_index()
                    && verify_per_index(&pl, &l(&j))?.all()
                    && verify_per_index(&pr, &r_(&j))?.all())
                {
                    return Ok(false);
                }
            }
            Ok(true)
        }),
        law!("index.from.perdom.indexes", "J, K coreflexive indexes of R≺, R≻ ⇒ J∘R∘K indexes R", ["A", "B"],
            [R: Any(0, 1), J: Coreflexive(0, 0), K: Coreflexive(1, 1)], |x| {
            let ok = verify_per_index(&per_ldom(R), J)?.all() && verify_per_index(&per_rdom(R), K)?.all();
            Ok(implies(ok, verify_index(R, &J.compose(R)?.compose(K)?)?.is_index()))
        }),
        law!("index.unique.up.to.iso", "any two indexes of R are isomorphic", ["A", "B"], [R: Any(0, 1)], |x| {
            let js = all_indexes(R);
            let Some(first) = js.first() else { return Ok(false) };
            for j in &js[1..] {
                if !is_isomorphic(first, j)? {
                    return Ok(false);
                }
            }
            Ok(true)
        }),
        law!("index.iso.invariant", "R ≅ S ⇒ indexes of R and S are isomorphic", ["A", "B"],
            [R: Any(0, 1), S: Any(0, 1)], |x| {
            if find_isomorphism(R, S)?.is_none() {
                return Ok(true);
            }
            let (j, k) = (relation_index(R, Policy::Smallest)?, relation_index(S, Policy::Largest)?);
            Ok(is_isomorphic(&j.index, &k.index)?)
        }),
        law!("index.bijection.iff.difunctional", "an index of R is a bijection ⇔ R is difunctional", ["A", "B"],
            [R: Any(0, 1)], |x| {
            let d = is_difunctional(R);
            Ok(all_indexes(R).iter().all(|j| is_bijection(j) == d))
        }),
        law!("core.witnesses", "both cores satisfy C = λ∘R∘ρ°, R≺ = λ°∘λ, R≻ = ρ°∘ρ with λ, ρ functional", ["A", "B"],
            [R: Any(0, 1)], |x| {
            for mode in [CoreMode::SameType, CoreMode::Quotient] {
                let d = core_of(R, mode, Policy::Smallest)?;
                if !(verify_core(R, &d.lambda, &d.rho, &d.core)?.all()
                    && is_functional(&d.lambda)
                    && is_functional(&d.rho))
                {
                    return Ok(false);
                }
            }
            Ok(true)
        }),
        law!("core.theorem", "cores are core relations with the domains of R, isomorphic to every index", ["A", "B"],
            [R: Any(0, 1)], |x| {
            for p in POLICIES {
                if !core_theorem_suite(R, p)?.iter().all(|c| c.holds) {
                    return Ok(false);
                }
            }
            Ok(true)
        }),
        law!("core.from.index", "an index J is a core of R, witnessed by λ = J<∘R≺ and ρ = J>∘R≻", ["A", "B"],
            [R: Any(0, 1)], |x| {
            for j in all_indexes(R) {
                let lambda = l(&j).compose(&per_ldom(R))?;
                let rho = r_(&j).compose(&per_rdom(R))?;
                if !verify_core(R, &lambda, &rho, &j)?.all() {
                    return Ok(false);
                }
            }
            Ok(true)
        }),
        law!("core.modes.isomorphic", "the same-type and quotient cores are isomorphic", ["A", "B"],
            [R: Any(0, 1)], |x| {
            let a = core_of(R, CoreMode::SameType, Policy::Smallest)?;
            let b = core_of(R, CoreMode::Quotient, Policy::Largest)?;
            Ok(is_isomorphic(&a.core, &b.core)?)
        }),
        law!("difun.index.facts", "a difunction index J satisfies J ⊆ R, R∘J°∘R = R and is a bijection", ["A", "B"],
            [R: Difunctional(0, 1)], |x| {
            for p in POLICIES {
                if !difunction_index_suite(R, p)?.iter().all(|c| c.holds) {
                    return Ok(false);
                }
            }
            Ok(true)
        }),
        law!("difun.index.conditions",
            "for difunctional R: J indexes R ⇔ J ⊆ R ∧ R∘J°∘R = R ∧ J<∘R∘R°∘J< = J< ∧ J>∘R°∘R∘J> = J>",
            ["A", "B"], [R: Difunctional(0, 1), J: Any(0, 1)], |x| {
            let rc = R.converse();
            let (jl, jr) = (l(J), r_(J));
            let simple = J.is_subset(R)?
                && R.compose(&J.converse())?.compose(R)?.equals(R)?
                && jl.compose(R)?.compose(&rc)?.compose(&jl)?.equals(&jl)?
                && jr.compose(&rc)?.compose(R)?.compose(&jr)?.equals(&jr)?;
            Ok(simple == verify_index(R, J)?.is_index())
        }),
        law!("per.index.conditions", "for a per P and coreflexive J: J ⊆ P< ∧ J∘P∘J = J ∧ P∘J∘P = P ⇔ J indexes P",
            ["A"], [P: Per(0, 0), J: Coreflexive(0, 0)], |x| {
            Ok(verify_per_index(P, J)?.all() == verify_index(P, J)?.is_index())
        }),
        law!("per.coreflexive.index", "every per has a coreflexive index", ["A"], [P: Per(0, 0)], |x| {
            Ok(all_indexes(P).iter().any(is_coreflexive))
        }),
        law!("choice.per", "every per has an index under each selection policy", ["A"], [P: Per(0, 0)], |x| {
            for p in POLICIES {
                let j = per_index(P, p)?;
                if !verify_per_index(P, j.as_relation())?.all() {
                    return Ok(false);
                }
            }
            Ok(true)
        }),
        law!("splitting.per", "f = J∘P satisfies f°∘f = P and f∘f° = f<", ["A"], [P: Per(0, 0)], |x| {
            let f = splitting(P, Policy::Smallest)?;
            Ok(f.converse().compose(&f)?.equals(P)? && is_functional(&f))
        }),
        law!("splitting.unique", "two splittings f, g of P satisfy f = φ∘g for the bijection φ = f∘g°", ["A"],
            [P: Per(0, 0)], |x| {
            let f = splitting(P, Policy::Smallest)?;
            let g = splitting(P, Policy::Largest)?;
            let phi = f.compose(&g.converse())?;
            let q = core_of(P, CoreMode::Quotient, Policy::Smallest)?.lambda;
            let chi = q.compose(&f.converse())?;
            Ok(is_bijection(&phi) && phi.compose(&g)?.equals(&f)? && is_bijection(&chi) && chi.compose(&f)?.equals(&q)?)
        }),
        law!("difun.split", "with f = J<∘R≺ and g = J<∘R: R = f°∘g, f< = g<, and g functional ⇔ R difunctional",
            ["A", "B"], [R: Any(0, 1)], |x| {
            let j = relation_index(R, Policy::Smallest)?.index;
            let f = l(&j).compose(&per_ldom(R))?;
            let g = l(&j).compose(R)?;
            Ok(f.converse().compose(&g)?.equals(R)?
                && l(&f).equals(&l(&g))?
                && is_functional(&f)
                && is_functional(&g) == is_difunctional(R))
        }),
    ]
}
