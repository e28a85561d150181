//! A registry of algebraic laws over finite relations and a harness that
//! checks them exhaustively on small carriers, or by seeded sampling where
//! the instance space is too large.
//!
//! Each [`Law`] declares carrier slots (`A`, `B`, ...) and typed variables
//! drawn from a [`Kind`] of relation between two slots. [`run_suite`] walks
//! every assignment of sizes `1..=max_size` to the slots.

mod algebra;
mod domains;
mod index;
pub mod manifest;
mod points;
mod runner;
mod shrink;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::domains::{is_bijection, is_difunctional, is_equivalence, is_functional, is_per, is_rectangle};
use crate::indexcore::IndexError;
use crate::isomorph::IsoError;
use crate::pointlattice::{is_point, PointError};
use crate::relcore::{is_coreflexive, Carrier, RelError, Relation};

pub use runner::{run_laws, run_suite, LawReport, Mode, SuiteConfig, SuiteError, DEFAULT_EXHAUSTIVE_LIMIT, MAX_SIZE};
pub use shrink::shrink;

/// Class of relations a law variable ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    Any,
    Coreflexive,
    Per,
    Equivalence,
    Point,
    Functional,
    Bijection,
    Difunctional,
    Rectangle,
}

impl Kind {
    /// Kinds whose members are homogeneous by definition.
    pub fn homogeneous(self) -> bool {
        matches!(self, Kind::Coreflexive | Kind::Per | Kind::Equivalence | Kind::Point)
    }

    pub fn admits(self, r: &Relation) -> bool {
        if self.homogeneous() && !r.is_homogeneous() {
            return false;
        }
        match self {
            Kind::Any => true,
            Kind::Coreflexive => is_coreflexive(r),
            Kind::Per => is_per(r).unwrap_or(false),
            Kind::Equivalence => is_equivalence(r),
            Kind::Point => is_point(r).unwrap_or(false),
            Kind::Functional => is_functional(r),
            Kind::Bijection => is_bijection(r),
            Kind::Difunctional => is_difunctional(r),
            Kind::Rectangle => is_rectangle(r),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Var {
    pub name: &'static str,
    pub kind: Kind,
    /// Slot index of the source carrier.
    pub src: usize,
    /// Slot index of the target carrier.
    pub dst: usize,
}

#[derive(Debug, Error)]
pub enum LawError {
    #[error(transparent)]
    Rel(#[from] RelError),
    #[error(transparent)]
    Index(#[from] IndexError),
    #[error(transparent)]
    Iso(#[from] IsoError),
    #[error(transparent)]
    Point(#[from] PointError),
}

pub type Check = fn(&Ctx) -> Result<bool, LawError>;

/// One law: carrier slots, typed variables and a decision procedure.
#[derive(Clone)]
pub struct Law {
    pub id: &'static str,
    pub statement: &'static str,
    pub slots: Vec<&'static str>,
    pub vars: Vec<Var>,
    pub check: Check,
}

impl fmt::Debug for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Law")
            .field("id", &self.id)
            .field("statement", &self.statement)
            .field("slots", &self.slots)
            .field("vars", &self.vars)
            .finish()
    }
}

impl Law {
    /// A carrier per slot with the given sizes.
    pub fn carriers(&self, sizes: &[usize]) -> Vec<Carrier> {
        self.slots
            .iter()
            .zip(sizes)
            .map(|(name, &n)| Carrier::indexed(*name, n))
            .collect()
    }

    /// True iff the law fails (or errors) on this instance.
    pub fn fails(&self, ctx: &Ctx) -> bool {
        !matches!((self.check)(ctx), Ok(true))
    }

    /// Whether every variable lies in its kind and has the declared type.
    pub fn in_signature(&self, ctx: &Ctx) -> bool {
        ctx.vars.len() == self.vars.len()
            && self.vars.iter().zip(&ctx.vars).all(|(v, r)| {
                r.src() == &ctx.carriers[v.src] && r.dst() == &ctx.carriers[v.dst] && v.kind.admits(r)
            })
    }
}

/// An instance: carriers for the slots and values for the variables.
#[derive(Debug, Clone)]
pub struct Ctx {
    pub carriers: Vec<Carrier>,
    pub vars: Vec<Relation>,
}

impl Ctx {
    pub fn carrier(&self, slot: usize) -> &Carrier {
        &self.carriers[slot]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SlotSize {
    pub name: String,
    pub size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Binding {
    pub name: String,
    pub pairs: Vec<[usize; 2]>,
}

/// A failing instance in a printable, replayable form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub carriers: Vec<SlotSize>,
    pub vars: Vec<Binding>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl Counterexample {
    pub fn from_ctx(law: &Law, ctx: &Ctx) -> Self {
        Counterexample {
            carriers: ctx
                .carriers
                .iter()
                .map(|c| SlotSize {
                    name: c.name().to_string(),
                    size: c.size(),
                })
                .collect(),
            vars: law
                .vars
                .iter()
                .zip(&ctx.vars)
                .map(|(v, r)| Binding {
                    name: v.name.to_string(),
                    pairs: r.pairs().map(|(a, b)| [a, b]).collect(),
                })
                .collect(),
            error: (law.check)(ctx).err().map(|e| e.to_string()),
        }
    }

    /// Rebuilds the instance for `law`.
    pub fn to_ctx(&self, law: &Law) -> Result<Ctx, RelError> {
        let sizes: Vec<usize> = self.carriers.iter().map(|c| c.size).collect();
        let carriers = law.carriers(&sizes);
        let vars = law
            .vars
            .iter()
            .zip(&self.vars)
            .map(|(v, b)| {
                Relation::from_pairs(
                    &carriers[v.src],
                    &carriers[v.dst],
                    b.pairs.iter().map(|p| (p[0], p[1])),
                )
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Ctx { carriers, vars })
    }

    /// Total carrier size plus total pair count; shrinking decreases it.
    pub fn weight(&self) -> usize {
        self.carriers.iter().map(|c| c.size).sum::<usize>() + self.vars.iter().map(|v| v.pairs.len()).sum::<usize>()
    }
}

/// Every registered law, grouped by topic.
pub fn registry() -> Vec<Law> {
    let mut out = algebra::laws();
    out.extend(domains::laws());
    out.extend(index::laws());
    out.extend(points::laws());
    out
}

pub fn find_law(id: &str) -> Option<Law> {
    registry().into_iter().find(|l| l.id == id)
}

/// Builds a [`Law`]; variables become local bindings in the body.
macro_rules! law {
    (
        $id:literal, $stmt:literal,
        [$($slot:literal),*],
        [$($var:ident : $kind:ident ($s:literal, $d:literal)),* $(,)?],
        |$x:ident| $body:block
    ) => {
        $crate::laws::Law {
            id: $id,
            statement: $stmt,
            slots: vec![$($slot),*],
            vars: vec![$($crate::laws::Var {
                name: stringify!($var),
                kind: $crate::laws::Kind::$kind,
                src: $s,
                dst: $d,
            }),*],
            check: {
                #[allow(non_snake_case, unused_variables, unused_mut, clippy::redundant_closure_call)]
                fn check($x: &$crate::laws::Ctx) -> Result<bool, $crate::laws::LawError> {
                    let mut _vars = $x.vars.iter();
                    $(let $var: &$crate::relcore::Relation = _vars.next().expect("arity");)*
                    $body
                }
                check
            },
        }
    };
}
pub(crate) use law;

/// `a ⇒ b`
pub(crate) fn implies(a: bool, b: bool) -> bool {
    !a || b
}
