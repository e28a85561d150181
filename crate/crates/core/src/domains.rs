//! Coreflexive domains, per domains and the predicate report.

use serde::Serialize;

use crate::factors::{left_residual, right_residual, sym_left_div, sym_right_div};
use crate::relcore::{is_coreflexive, Coreflexive, RelError, Relation};

/// Left domain `R< = 𝕀 ∩ R∘R°`: the source elements with a non-empty row.
pub fn ldom(r: &Relation) -> Coreflexive {
    Coreflexive::from_elems(r.src(), (0..r.src().size()).filter(|&a| !r.row_is_empty(a)))
}

/// Right domain `R> = 𝕀 ∩ R°∘R`.
pub fn rdom(r: &Relation) -> Coreflexive {
    ldom(&r.converse())
}

/// Right per domain `R≻ = R>∘(R\\R)`.
pub fn per_rdom(r: &Relation) -> Relation {
    let div = sym_right_div(r, r).expect("R\\\\R is well typed");
    rdom(r).as_relation().compose(&div).expect("R>∘(R\\\\R) is well typed")
}

/// Left per domain `R≺ = (R//R)∘R<`.
pub fn per_ldom(r: &Relation) -> Relation {
    let div = sym_left_div(r, r).expect("R//R is well typed");
    div.compose(ldom(r).as_relation()).expect("(R//R)∘R< is well typed")
}

fn eq(a: &Relation, b: &Relation) -> bool {
    a.equals(b).unwrap_or(false)
}

fn sub(a: &Relation, b: &Relation) -> bool {
    a.is_subset(b).unwrap_or(false)
}

fn c(a: &Relation, b: &Relation) -> Relation {
    a.compose(b).expect("well typed composition")
}

pub fn is_symmetric(r: &Relation) -> bool {
    r.is_homogeneous() && *r == r.converse()
}

pub fn is_transitive(r: &Relation) -> bool {
    r.is_homogeneous() && sub(&c(r, r), r)
}

pub fn is_reflexive(r: &Relation) -> bool {
    r.is_homogeneous() && sub(&r.src_identity(), r)
}

/// Equivalence relation: reflexive per.
pub fn is_equivalence(r: &Relation) -> bool {
    is_reflexive(r) && is_symmetric(r) && is_transitive(r)
}

/// (Left-)functional: `R∘R° = R<`.
pub fn is_functional(r: &Relation) -> bool {
    eq(&c(r, &r.converse()), ldom(r).as_relation())
}

/// Injective: `R°∘R = R>`.
pub fn is_injective(r: &Relation) -> bool {
    eq(&c(&r.converse(), r), rdom(r).as_relation())
}

pub fn is_bijection(r: &Relation) -> bool {
    is_functional(r) && is_injective(r)
}

/// `R = R∘⊤∘R`.
pub fn is_rectangle(r: &Relation) -> bool {
    let top = Relation::top(r.dst(), r.src());
    eq(&c(&c(r, &top), r), r)
}

/// Symmetric rectangle.
pub fn is_square(r: &Relation) -> bool {
    is_symmetric(r) && is_rectangle(r)
}

/// `R< = R≺ ∧ R> = R≻`.
pub fn is_core_relation(r: &Relation) -> bool {
    eq(ldom(r).as_relation(), &per_ldom(r)) && eq(rdom(r).as_relation(), &per_rdom(r))
}

/// One evaluated equation or inclusion with both sides as pair lists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Evidence {
    pub statement: String,
    pub holds: bool,
    pub lhs: Vec<[usize; 2]>,
    pub rhs: Vec<[usize; 2]>,
}

impl Evidence {
    fn equation(statement: &str, lhs: &Relation, rhs: &Relation) -> Self {
        Evidence {
            statement: statement.to_string(),
            holds: eq(lhs, rhs),
            lhs: pairs(lhs),
            rhs: pairs(rhs),
        }
    }

    fn inclusion(statement: &str, lhs: &Relation, rhs: &Relation) -> Self {
        Evidence {
            statement: statement.to_string(),
            holds: sub(lhs, rhs),
            lhs: pairs(lhs),
            rhs: pairs(rhs),
        }
    }

    fn fact(statement: &str, holds: bool) -> Self {
        Evidence {
            statement: statement.to_string(),
            holds,
            lhs: Vec::new(),
            rhs: Vec::new(),
        }
    }
}

fn pairs(r: &Relation) -> Vec<[usize; 2]> {
    r.pairs().map(|(a, b)| [a, b]).collect()
}

/// A predicate outcome with the equalities it was decided from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Flag {
    pub holds: bool,
    pub evidence: Vec<Evidence>,
}

impl Flag {
    fn all(evidence: Vec<Evidence>) -> Self {
        Flag {
            holds: evidence.iter().all(|e| e.holds),
            evidence,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PredicateReport {
    pub coreflexive: Flag,
    pub functional: Flag,
    pub injective: Flag,
    pub bijection: Flag,
    pub per: Flag,
    pub difunctional: Flag,
    pub rectangle: Flag,
    pub square: Flag,
    pub core_relation: Flag,
}

/// The four equivalent per characterisations for a homogeneous relation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PerCharacterisation {
    /// `R = R° ∧ R∘R ⊆ R`
    pub symmetric_transitive: bool,
    /// `R = R°∘R`
    pub converse_square: bool,
    /// `R = R≺`
    pub own_left_per_domain: bool,
    /// `R = R≻`
    pub own_right_per_domain: bool,
}

impl PerCharacterisation {
    pub fn holds(&self) -> bool {
        self.symmetric_transitive
    }

    pub fn consistent(&self) -> bool {
        let v = self.symmetric_transitive;
        self.converse_square == v && self.own_left_per_domain == v && self.own_right_per_domain == v
    }
}

/// Per test with all four characterisations evaluated.
pub fn per_characterisation(r: &Relation) -> Result<PerCharacterisation, RelError> {
    r.require_homogeneous("is_per")?;
    Ok(PerCharacterisation {
        symmetric_transitive: is_symmetric(r) && is_transitive(r),
        converse_square: eq(r, &c(&r.converse(), r)),
        own_left_per_domain: eq(r, &per_ldom(r)),
        own_right_per_domain: eq(r, &per_rdom(r)),
    })
}

/// `R = R° ∧ R∘R ⊆ R`. Errors on heterogeneous input.
pub fn is_per(r: &Relation) -> Result<bool, RelError> {
    per_characterisation(r).map(|p| p.holds())
}

/// The seven equivalent difunctionality characterisations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DifunCharacterisation {
    /// `R∘R°∘R ⊆ R`
    pub inclusion: bool,
    /// `R = R∘R°∘R`
    pub equation: bool,
    /// `R>∘(R\R) = R°∘R`
    pub right_factor: bool,
    /// `R≻ = R°∘R`
    pub right_per_domain: bool,
    /// `(R/R)∘R< = R∘R°`
    pub left_factor: bool,
    /// `R≺ = R∘R°`
    pub left_per_domain: bool,
    /// `R = R ∩ ((R\R)/R)°`
    pub diagonal: bool,
}

impl DifunCharacterisation {
    pub fn holds(&self) -> bool {
        self.inclusion
    }

    pub fn as_array(&self) -> [bool; 7] {
        [
            self.inclusion,
            self.equation,
            self.right_factor,
            self.right_per_domain,
            self.left_factor,
            self.left_per_domain,
            self.diagonal,
        ]
    }

    pub fn consistent(&self) -> bool {
        self.as_array().iter().all(|&b| b == self.inclusion)
    }
}

pub fn difun_characterisation(r: &Relation) -> DifunCharacterisation {
    let rc = r.converse();
    let rrr = c(&c(r, &rc), r);
    let rr = left_residual(r, r).expect("R\\R");
    let ll = right_residual(r, r).expect("R/R");
    let rcr = c(&rc, r);
    let rrc = c(r, &rc);
    let diag = right_residual(&rr, r).expect("(R\\R)/R").converse();
    DifunCharacterisation {
        inclusion: sub(&rrr, r),
        equation: eq(r, &rrr),
        right_factor: eq(&c(rdom(r).as_relation(), &rr), &rcr),
        right_per_domain: eq(&per_rdom(r), &rcr),
        left_factor: eq(&c(&ll, ldom(r).as_relation()), &rrc),
        left_per_domain: eq(&per_ldom(r), &rrc),
        diagonal: eq(r, &r.intersect(&diag).expect("same type")),
    }
}

/// `R∘R°∘R ⊆ R`.
pub fn is_difunctional(r: &Relation) -> bool {
    sub(&c(&c(r, &r.converse()), r), r)
}

fn not_homogeneous(r: &Relation) -> Flag {
    Flag {
        holds: false,
        evidence: vec![Evidence::fact(&format!("{}~{} is homogeneous", r.src(), r.dst()), false)],
    }
}

/// Every predicate, each decided from its defining equalities.
pub fn classify(r: &Relation) -> PredicateReport {
    let rc = r.converse();
    let l = ldom(r).into_relation();
    let rd = rdom(r).into_relation();
    let functional = Flag::all(vec![Evidence::equation("R∘R° = R<", &c(r, &rc), &l)]);
    let injective = Flag::all(vec![Evidence::equation("R°∘R = R>", &c(&rc, r), &rd)]);
    let bijection = Flag::all(
        functional
            .evidence
            .iter()
            .chain(&injective.evidence)
            .cloned()
            .collect(),
    );
    let rrr = c(&c(r, &rc), r);
    let difunctional = Flag::all(vec![Evidence::inclusion("R∘R°∘R ⊆ R", &rrr, r)]);
    let top = Relation::top(r.dst(), r.src());
    let rectangle = Flag::all(vec![Evidence::equation("R = R∘⊤∘R", r, &c(&c(r, &top), r))]);
    let core_relation = Flag::all(vec![
        Evidence::equation("R< = R≺", &l, &per_ldom(r)),
        Evidence::equation("R> = R≻", &rd, &per_rdom(r)),
    ]);
    let (coreflexive, per, square) = if r.is_homogeneous() {
        let coreflexive = Flag::all(vec![Evidence::inclusion("R ⊆ 𝕀", r, &r.src_identity())]);
        let symmetric = Evidence::equation("R = R°", r, &rc);
        let per = Flag::all(vec![symmetric.clone(), Evidence::inclusion("R∘R ⊆ R", &c(r, r), r)]);
        let mut sq = rectangle.evidence.clone();
        sq.push(symmetric);
        (coreflexive, per, Flag::all(sq))
    } else {
        (not_homogeneous(r), not_homogeneous(r), not_homogeneous(r))
    };
    debug_assert_eq!(coreflexive.holds, is_coreflexive(r));
    PredicateReport {
        coreflexive,
        functional,
        injective,
        bijection,
        per,
        difunctional,
        rectangle,
        square,
        core_relation,
    }
}

/// Outcome of one law instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawCheck {
    pub law: &'static str,
    pub holds: bool,
}

fn check(out: &mut Vec<LawCheck>, law: &'static str, holds: bool) {
    out.push(LawCheck { law, holds });
}

/// Domain laws for `R: A~B`, `S: B~C` and a coreflexive `p`. Laws that
/// mention `p` are evaluated on whichever side of `R` matches its carrier.
pub fn domain_law_suite(r: &Relation, s: &Relation, p: &Coreflexive) -> Result<Vec<LawCheck>, RelError> {
    if r.dst() != s.src() {
        return Err(RelError::CarrierMismatch {
            op: "domain_law_suite",
            left: r.dst().to_string(),
            right: s.src().to_string(),
        });
    }
    let mut out = Vec::new();
    let p = p.as_relation();
    let l = ldom(r).into_relation();
    let rd = rdom(r).into_relation();
    let rc = r.converse();
    let top_ab = r.top_like();
    if p.src() == r.dst() {
        check(&mut out, "rdom.absorb", eq(r, &c(r, p)) == eq(&rd, &c(&rd, p)));
        let t = Relation::top(r.src(), r.dst());
        check(&mut out, "rdom.galois.top", sub(&rd, p) == sub(r, &c(&t, p)));
        check(&mut out, "rdom.galois.self", sub(&rd, p) == sub(r, &c(r, p)));
    }
    if p.src() == r.src() {
        check(&mut out, "ldom.absorb", eq(r, &c(p, r)) == eq(&l, &c(p, &l)));
        let t = Relation::top(r.src(), r.dst());
        check(&mut out, "ldom.galois.top", sub(&l, p) == sub(r, &c(p, &t)));
        check(&mut out, "ldom.galois.self", sub(&l, p) == eq(r, &c(p, r)));
    }
    check(&mut out, "domains.unit", eq(&c(&l, r), r) && eq(&c(r, &rd), r));
    check(
        &mut out,
        "domains.bottom",
        l.is_bottom() == r.is_bottom() && rd.is_bottom() == r.is_bottom(),
    );
    let top_aa = Relation::top(r.src(), r.src());
    let top_bb = Relation::top(r.dst(), r.dst());
    check(&mut out, "rdom.top", eq(&c(&top_ab, &rd), &c(&top_aa, r)));
    check(&mut out, "ldom.top", eq(&c(&l, &top_ab), &c(r, &top_bb)));
    check(
        &mut out,
        "domains.converse",
        eq(ldom(&rc).as_relation(), &rd) && eq(rdom(&rc).as_relation(), &l),
    );
    let rs = c(r, s);
    check(
        &mut out,
        "rdom.compose",
        eq(rdom(&rs).as_relation(), rdom(&c(&rd, s)).as_relation()),
    );
    check(
        &mut out,
        "ldom.compose",
        eq(ldom(&rs).as_relation(), ldom(&c(r, ldom(s).as_relation())).as_relation()),
    );
    let pl = per_ldom(r);
    let pr = per_rdom(r);
    check(&mut out, "perdom.unit", eq(&c(&pl, r), r) && eq(&c(r, &pr), r));
    check(
        &mut out,
        "perdom.domains",
        eq(ldom(&pr).as_relation(), &rd) && eq(rdom(&pr).as_relation(), &rd),
    );
    check(
        &mut out,
        "perdom.domains.left",
        eq(ldom(&pl).as_relation(), &l) && eq(rdom(&pl).as_relation(), &l),
    );
    let div = sym_right_div(r, r)?;
    check(&mut out, "perdom.commute", eq(&c(&rd, &div), &c(&div, &rd)));
    let ldiv = sym_left_div(r, r)?;
    check(&mut out, "symdiv.cancel", eq(&c(r, &div), r) && eq(&c(&ldiv, r), r));
    check(
        &mut out,
        "perdom.are.pers",
        is_per(&pl)? && is_per(&pr)?,
    );
    Ok(out)
}
