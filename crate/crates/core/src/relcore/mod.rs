//! Concrete finite relations: carriers, the lattice and monoid layers,
//! converse, and exhaustive enumeration.

mod carrier;
mod enumerate;
mod io;
mod relation;

use thiserror::Error;

pub use carrier::Carrier;
pub use enumerate::{
    enumerate_coreflexives, enumerate_relations, enumerate_relations_bounded, enumerate_subrelations,
    RelationIter, DEFAULT_ENUM_BITS,
};
pub use io::{relation_from_json, relation_to_json, CarrierFile, RelationFile};
pub use relation::Relation;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum RelError {
    #[error("{op}: carrier mismatch between {left} and {right}")]
    CarrierMismatch {
        op: &'static str,
        left: String,
        right: String,
    },
    #[error("{op}: relation {src}~{dst} is not homogeneous")]
    NotHomogeneous {
        op: &'static str,
        src: String,
        dst: String,
    },
    #[error("enumeration of {bits}-bit relations refused (bound is {bound} bits)")]
    EnumerationBound { bits: usize, bound: usize },
    #[error("carrier {carrier}: duplicate label {label:?}")]
    DuplicateLabel { carrier: String, label: String },
    #[error("carrier {carrier}: size {size} but {labels} labels")]
    LabelCount {
        carrier: String,
        size: usize,
        labels: usize,
    },
    #[error("pair {pair:?} out of range for {src}~{dst}")]
    PairOutOfRange {
        pair: (usize, usize),
        src: String,
        dst: String,
    },
    #[error("duplicate pair {pair:?}")]
    DuplicatePair { pair: (usize, usize) },
    #[error("{message} (line {line}, column {column})")]
    Json {
        line: usize,
        column: usize,
        message: String,
    },
}

/// A homogeneous relation contained in the identity; stands for a subset of its carrier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coreflexive(Relation);

impl Coreflexive {
    pub fn new(r: Relation) -> Option<Self> {
        is_coreflexive(&r).then_some(Coreflexive(r))
    }

    /// Coreflexive holding exactly the listed elements.
    pub fn from_elems(carrier: &Carrier, elems: impl IntoIterator<Item = usize>) -> Self {
        let mut r = Relation::bottom(carrier, carrier);
        for a in elems {
            r.insert(a, a);
        }
        Coreflexive(r)
    }

    pub fn elems(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.pairs().map(|(a, _)| a)
    }

    pub fn as_relation(&self) -> &Relation {
        &self.0
    }

    pub fn into_relation(self) -> Relation {
        self.0
    }
}

impl AsRef<Relation> for Coreflexive {
    fn as_ref(&self) -> &Relation {
        &self.0
    }
}

/// `p ⊆ 𝕀`.
pub fn is_coreflexive(r: &Relation) -> bool {
    r.is_homogeneous() && r.pairs().all(|(a, b)| a == b)
}

/// The modularity (Dedekind) rule and its converse-dual for
/// `R: A~B, S: B~C, T: A~C`:
/// `R∘S ∩ T ⊆ R∘(S ∩ R°∘T)` and `R∘S ∩ T ⊆ (R ∩ T∘S°)∘S`.
pub fn dedekind_check(r: &Relation, s: &Relation, t: &Relation) -> Result<bool, RelError> {
    let rs = r.compose(s)?;
    let lhs = rs.intersect(t)?;
    let left_rule = lhs.is_subset(&r.compose(&s.intersect(&r.converse().compose(t)?)?)?)?;
    let right_rule = lhs.is_subset(&r.intersect(&t.compose(&s.converse())?)?.compose(s)?)?;
    Ok(left_rule && right_rule)
}

/// Cone rule for one relation: `⊤∘R∘⊤ = ⊤ ∨ R = ⊥`, where the outer tops
/// are `⊤_{A,A}` and `⊤_{B,B}` so the result has the type of `R`.
pub fn cone_check(r: &Relation) -> bool {
    if r.is_bottom() {
        return true;
    }
    let left = Relation::top(r.src(), r.src());
    let right = Relation::top(r.dst(), r.dst());
    left.compose(r)
        .and_then(|x| x.compose(&right))
        .map(|x| x.is_top())
        .unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dedekind_bottoms() {
        let a = Carrier::indexed("A", 2);
        let bot = Relation::bottom(&a, &a);
        assert!(dedekind_check(&bot, &bot, &bot).unwrap());
    }

    #[test]
    fn dedekind_type_error() {
        let a = Carrier::indexed("A", 2);
        let b = Carrier::indexed("B", 2);
        let r = Relation::bottom(&a, &b);
        assert!(dedekind_check(&r, &r, &r).is_err());
    }

    #[test]
    fn cone_single_bit() {
        let a = Carrier::indexed("A", 2);
        let r = Relation::from_pairs(&a, &a, [(1, 0)]).unwrap();
        assert!(cone_check(&r));
        assert!(cone_check(&Relation::bottom(&a, &a)));
    }

    #[test]
    fn coreflexive_newtype() {
        let a = Carrier::indexed("A", 3);
        assert!(Coreflexive::new(Relation::identity(&a)).is_some());
        assert!(Coreflexive::new(Relation::top(&a, &a)).is_none());
        let p = Coreflexive::from_elems(&a, [0, 2]);
        assert_eq!(p.elems().collect::<Vec<_>>(), vec![0, 2]);
        let r = p.as_relation();
        assert_eq!(r, &r.converse());
        assert_eq!(r, &r.compose(r).unwrap());
    }
}
