//! Indexes and cores: construction by choosing one representative per
//! per-domain class, and verifiers for the defining conditions.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::domains::{
    is_bijection, is_difunctional, is_functional, is_per, is_symmetric, ldom, per_ldom, per_rdom, rdom,
    LawCheck,
};
use crate::relcore::{enumerate_subrelations, Carrier, Coreflexive, RelError, Relation};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum IndexError {
    #[error("not a per: {condition} fails")]
    NotPer { condition: &'static str },
    #[error("not difunctional: R∘R°∘R ⊆ R fails")]
    NotDifunctional,
    #[error("constructed index failed verification ({failed}); this is a bug")]
    Verification { failed: String },
    #[error(transparent)]
    Rel(#[from] RelError),
}

/// How to pick the representative of each equivalence class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub enum Policy {
    #[default]
    Smallest,
    Largest,
    Seeded(u64),
}

/// Classes of a per restricted to its domain, each sorted, listed by smallest member.
pub fn per_classes(p: &Relation) -> Vec<Vec<usize>> {
    let mut seen = vec![false; p.src().size()];
    let mut out = Vec::new();
    for a in 0..p.src().size() {
        if seen[a] || !p.contains(a, a) {
            continue;
        }
        let class: Vec<usize> = p.row_elems(a).collect();
        for &b in &class {
            seen[b] = true;
        }
        out.push(class);
    }
    out
}

fn require_per(p: &Relation) -> Result<(), IndexError> {
    p.require_homogeneous("per_index")?;
    if !is_symmetric(p) {
        return Err(IndexError::NotPer { condition: "symmetry P = P°" });
    }
    if !is_per(p)? {
        return Err(IndexError::NotPer { condition: "transitivity P∘P ⊆ P" });
    }
    Ok(())
}

/// Coreflexive index of a per: one representative per class.
pub fn per_index(p: &Relation, policy: Policy) -> Result<Coreflexive, IndexError> {
    require_per(p)?;
    let classes = per_classes(p);
    let reps: Vec<usize> = match policy {
        Policy::Smallest => classes.iter().map(|c| c[0]).collect(),
        Policy::Largest => classes.iter().map(|c| *c.last().unwrap()).collect(),
        Policy::Seeded(seed) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            classes.iter().map(|c| c[rng.gen_range(0..c.len())]).collect()
        }
    };
    Ok(Coreflexive::from_elems(p.src(), reps))
}

/// The three conditions on a coreflexive index `J` of a per `P`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PerIndexChecks {
    /// `J ⊆ P<`
    pub within_domain: bool,
    /// `J∘P∘J = J`
    pub separates: bool,
    /// `P∘J∘P = P`
    pub covers: bool,
}

impl PerIndexChecks {
    pub fn all(&self) -> bool {
        self.within_domain && self.separates && self.covers
    }
}

pub fn verify_per_index(p: &Relation, j: &Relation) -> Result<PerIndexChecks, RelError> {
    Ok(PerIndexChecks {
        within_domain: j.is_subset(ldom(p).as_relation())?,
        separates: j.compose(p)?.compose(j)?.equals(j)?,
        covers: p.compose(j)?.compose(p)?.equals(p)?,
    })
}

/// The four defining conditions of an index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IndexChecks {
    /// `J ⊆ R`
    pub contained: bool,
    /// `R≺∘J∘R≻ = R`
    pub covers: bool,
    /// `J<∘R≺∘J< = J<`
    pub left_separates: bool,
    /// `J>∘R≻∘J> = J>`
    pub right_separates: bool,
}

impl IndexChecks {
    pub fn all(&self) -> bool {
        self.contained && self.covers && self.left_separates && self.right_separates
    }

    fn failed(&self) -> String {
        let names = [
            (self.contained, "J ⊆ R"),
            (self.covers, "R≺∘J∘R≻ = R"),
            (self.left_separates, "J<∘R≺∘J< = J<"),
            (self.right_separates, "J>∘R≻∘J> = J>"),
        ];
        names
            .iter()
            .filter(|(ok, _)| !ok)
            .map(|(_, n)| *n)
            .collect::<Vec<_>>()
            .join(", ")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IndexCertificate {
    pub relation: Relation,
    pub index: Relation,
    pub checks: IndexChecks,
}

impl IndexCertificate {
    pub fn is_index(&self) -> bool {
        self.checks.all()
    }
}

/// Evaluates the index conditions for a candidate `J`.
pub fn verify_index(r: &Relation, j: &Relation) -> Result<IndexCertificate, RelError> {
    let checks = index_checks(r, &per_ldom(r), &per_rdom(r), j)?;
    Ok(IndexCertificate {
        relation: r.clone(),
        index: j.clone(),
        checks,
    })
}

/// The index conditions given precomputed per domains `R≺`, `R≻`.
pub fn index_checks(r: &Relation, pl: &Relation, pr: &Relation, j: &Relation) -> Result<IndexChecks, RelError> {
    // Types are checked first so a mismatch is an error, not a failed check.
    j.equals(r)?;
    let jl = ldom(j).into_relation();
    let jr = rdom(j).into_relation();
    Ok(IndexChecks {
        contained: j.is_subset(r)?,
        covers: pl.compose(j)?.compose(pr)?.equals(r)?,
        left_separates: jl.compose(pl)?.compose(&jl)?.equals(&jl)?,
        right_separates: jr.compose(pr)?.compose(&jr)?.equals(&jr)?,
    })
}

/// `J∘R∘K` for coreflexive indexes `J` of `R≺` and `K` of `R≻`, verified.
pub fn relation_index(r: &Relation, policy: Policy) -> Result<IndexCertificate, IndexError> {
    let j = per_index(&per_ldom(r), policy)?;
    let k = per_index(&per_rdom(r), policy)?;
    let idx = j.as_relation().compose(r)?.compose(k.as_relation())?;
    let cert = verify_index(r, &idx)?;
    if !cert.is_index() {
        return Err(IndexError::Verification {
            failed: cert.checks.failed(),
        });
    }
    Ok(cert)
}

/// Every index of `R`: the sub-relations passing [`verify_index`].
pub fn all_indexes(r: &Relation) -> Vec<Relation> {
    let pl = per_ldom(r);
    let pr = per_rdom(r);
    enumerate_subrelations(r)
        .filter(|j| index_checks(r, &pl, &pr, j).map(|c| c.all()).unwrap_or(false))
        .collect()
}

/// A functional `f = J∘P` with `f°∘f = P`, for `J` a coreflexive index of `P`.
pub fn splitting(p: &Relation, policy: Policy) -> Result<Relation, IndexError> {
    let j = per_index(p, policy)?;
    Ok(j.as_relation().compose(p)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CoreMode {
    SameType,
    Quotient,
}

/// Witness equations of a core.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CoreChecks {
    /// `C = λ∘R∘ρ°`
    pub core: bool,
    /// `R≺ = λ°∘λ`
    pub left_split: bool,
    /// `λ< = λ∘λ°`
    pub left_functional: bool,
    /// `R≻ = ρ°∘ρ`
    pub right_split: bool,
    /// `ρ< = ρ∘ρ°`
    pub right_functional: bool,
}

impl CoreChecks {
    pub fn all(&self) -> bool {
        self.core && self.left_split && self.left_functional && self.right_split && self.right_functional
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoreDecomposition {
    pub relation: Relation,
    pub mode: CoreMode,
    pub lambda: Relation,
    pub rho: Relation,
    pub core: Relation,
    pub checks: CoreChecks,
}

/// Evaluates the witness equations for `(λ, ρ, C)`.
pub fn verify_core(r: &Relation, lambda: &Relation, rho: &Relation, core: &Relation) -> Result<CoreChecks, RelError> {
    Ok(CoreChecks {
        core: lambda.compose(r)?.compose(&rho.converse())?.equals(core)?,
        left_split: lambda.converse().compose(lambda)?.equals(&per_ldom(r))?,
        left_functional: is_functional(lambda),
        right_split: rho.converse().compose(rho)?.equals(&per_rdom(r))?,
        right_functional: is_functional(rho),
    })
}

fn class_carrier(name: String, base: &Carrier, classes: &[Vec<usize>]) -> Carrier {
    let labels = classes
        .iter()
        .map(|c| {
            let members: Vec<&str> = c.iter().map(|&i| base.label(i)).collect();
            format!("{{{}}}", members.join(","))
        })
        .collect();
    Carrier::new(name, labels).expect("class labels are distinct")
}

/// `X~A` relating each class id to its members.
fn class_map(x: &Carrier, base: &Carrier, classes: &[Vec<usize>]) -> Relation {
    let mut m = Relation::bottom(x, base);
    for (i, c) in classes.iter().enumerate() {
        for &a in c {
            m.insert(i, a);
        }
    }
    m
}

/// A core of `R`. Same-type mode returns the index with witnesses
/// `J<∘R≺` and `J>∘R≻`; quotient mode maps each per-domain class to a
/// fresh element of `X(<src>,left)` / `Y(<dst>,right)`.
pub fn core_of(r: &Relation, mode: CoreMode, policy: Policy) -> Result<CoreDecomposition, IndexError> {
    let pl = per_ldom(r);
    let pr = per_rdom(r);
    let (lambda, rho, core) = match mode {
        CoreMode::SameType => {
            let j = relation_index(r, policy)?.index;
            let lambda = ldom(&j).as_relation().compose(&pl)?;
            let rho = rdom(&j).as_relation().compose(&pr)?;
            (lambda, rho, j)
        }
        CoreMode::Quotient => {
            let lc = per_classes(&pl);
            let rc = per_classes(&pr);
            let x = class_carrier(format!("X({},left)", r.src().name()), r.src(), &lc);
            let y = class_carrier(format!("Y({},right)", r.dst().name()), r.dst(), &rc);
            let lambda = class_map(&x, r.src(), &lc);
            let rho = class_map(&y, r.dst(), &rc);
            let core = lambda.compose(r)?.compose(&rho.converse())?;
            (lambda, rho, core)
        }
    };
    let checks = verify_core(r, &lambda, &rho, &core)?;
    if !checks.all() {
        return Err(IndexError::Verification {
            failed: format!("core witnesses {checks:?}"),
        });
    }
    Ok(CoreDecomposition {
        relation: r.clone(),
        mode,
        lambda,
        rho,
        core,
        checks,
    })
}

fn push(out: &mut Vec<LawCheck>, law: &'static str, holds: bool) {
    out.push(LawCheck { law, holds });
}

fn eqr(a: &Relation, b: &Relation) -> bool {
    a.equals(b).unwrap_or(false)
}

/// Index and core facts for the constructed index `J` and both cores of `R`.
pub fn core_theorem_suite(r: &Relation, policy: Policy) -> Result<Vec<LawCheck>, IndexError> {
    let mut out = Vec::new();
    let j = relation_index(r, policy)?.index;
    let pl = per_ldom(r);
    let pr = per_rdom(r);
    let jl = ldom(&j).into_relation();
    let jr = rdom(&j).into_relation();

    push(&mut out, "index.of.itself", verify_index(&j, &j)?.is_index());
    push(
        &mut out,
        "index.is.core.relation",
        eqr(&jl, &per_ldom(&j)) && eqr(&jr, &per_rdom(&j)),
    );
    push(
        &mut out,
        "index.perdom.below",
        per_ldom(&j).is_subset(&pl)? && per_rdom(&j).is_subset(&pr)?,
    );
    let others = all_indexes(r);
    push(
        &mut out,
        "index.determined.by.domains",
        others.iter().all(|k| {
            let same_domains = eqr(ldom(k).as_relation(), &jl) && eqr(rdom(k).as_relation(), &jr);
            !same_domains || eqr(k, &j)
        }),
    );
    push(&mut out, "index.restricts", eqr(&jl.compose(r)?.compose(&jr)?, &j));
    let rc = r.converse();
    push(
        &mut out,
        "index.difunctional.closure",
        eqr(&r.compose(&j.converse())?.compose(r)?, &r.compose(&rc)?.compose(r)?),
    );
    let lmid = pl.compose(&jl)?.compose(&pl)?;
    push(&mut out, "index.left.per.recovered", eqr(&lmid, &pl) && is_per(&lmid)?);
    push(&mut out, "index.left.per.domain", eqr(ldom(&lmid).as_relation(), ldom(r).as_relation()));
    let rmid = pr.compose(&jr)?.compose(&pr)?;
    push(&mut out, "index.right.per.recovered", eqr(&rmid, &pr) && is_per(&rmid)?);
    push(
        &mut out,
        "index.domains.index.perdoms",
        verify_index(&pl, &jl)?.is_index() && verify_index(&pr, &jr)?.is_index(),
    );

    for mode in [CoreMode::SameType, CoreMode::Quotient] {
        let d = core_of(r, mode, policy)?;
        let (l, rho, cc) = (&d.lambda, &d.rho, &d.core);
        push(
            &mut out,
            "core.domains",
            eqr(ldom(r).as_relation(), rdom(l).as_relation())
                && eqr(ldom(cc).as_relation(), ldom(l).as_relation())
                && eqr(rdom(r).as_relation(), rdom(rho).as_relation())
                && eqr(rdom(cc).as_relation(), ldom(rho).as_relation()),
        );
        push(
            &mut out,
            "core.is.core.relation",
            eqr(ldom(cc).as_relation(), &per_ldom(cc)) && eqr(rdom(cc).as_relation(), &per_rdom(cc)),
        );
        let phi = l.compose(&jl)?;
        let psi = rho.compose(&jr)?;
        push(&mut out, "core.iso.index", crate::isomorph::verify_witness(cc, &j, &phi, &psi)?.all());
    }
    Ok(out)
}

/// Index facts specific to difunctions, evaluated on the constructed index.
pub fn difunction_index_suite(r: &Relation, policy: Policy) -> Result<Vec<LawCheck>, IndexError> {
    if !is_difunctional(r) {
        return Err(IndexError::NotDifunctional);
    }
    let mut out = Vec::new();
    let j = relation_index(r, policy)?.index;
    let jl = ldom(&j).into_relation();
    let jr = rdom(&j).into_relation();
    let rc = r.converse();
    push(&mut out, "difun.index.contained", j.is_subset(r)?);
    push(&mut out, "difun.index.covers", eqr(&r.compose(&j.converse())?.compose(r)?, r));
    push(
        &mut out,
        "difun.index.left",
        eqr(&jl.compose(r)?.compose(&rc)?.compose(&jl)?, &jl),
    );
    push(
        &mut out,
        "difun.index.right",
        eqr(&jr.compose(&rc)?.compose(r)?.compose(&jr)?, &jr),
    );
    push(&mut out, "difun.index.bijection", is_bijection(&j));
    push(&mut out, "difun.index.difunctional", is_difunctional(&j));
    Ok(out)
}
