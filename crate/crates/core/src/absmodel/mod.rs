//! Finite abstract relation algebras with a single unnamed type, given as
//! tables, and a generic checker for the structural laws and the added axioms.

mod axioms;
mod bundled;
pub mod completion;

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use axioms::{check_axioms, reevaluate, Axiom, AxiomOutcome, AxiomReport};
pub use bundled::{bundled_models, bundled_source, product_model, BundledModel, ExpectedFlags};

/// The on-disk model description.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModelFile {
    pub elements: Vec<String>,
    pub leq: Vec<Vec<bool>>,
    pub compose: Vec<Vec<String>>,
    pub converse: Vec<String>,
    pub identity: String,
    pub top: String,
    pub bottom: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum StructuralLaw {
    PartialOrder,
    Lattice,
    Bounds,
    Associativity,
    IdentityUnit,
    BottomZero,
    Distributivity,
    ConverseInvolution,
    ConverseMonotone,
    ConverseAntiHomomorphism,
}

impl fmt::Display for StructuralLaw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            StructuralLaw::PartialOrder => "leq is not a partial order",
            StructuralLaw::Lattice => "order is not a lattice",
            StructuralLaw::Bounds => "top/bottom are not the greatest/least elements",
            StructuralLaw::Associativity => "composition is not associative",
            StructuralLaw::IdentityUnit => "identity is not a unit of composition",
            StructuralLaw::BottomZero => "bottom is not a zero of composition",
            StructuralLaw::Distributivity => "composition does not distribute over joins",
            StructuralLaw::ConverseInvolution => "converse is not an involution",
            StructuralLaw::ConverseMonotone => "converse is not monotone",
            StructuralLaw::ConverseAntiHomomorphism => "(x∘y)° ≠ y°∘x°",
        };
        f.write_str(s)
    }
}

/// One violated structural law with its first counterexample in element order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructuralFailure {
    pub law: StructuralLaw,
    pub witness: Vec<String>,
}

impl fmt::Display for StructuralFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at ({})", self.law, self.witness.join(", "))
    }
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ModelError {
    #[error("{message} (line {line}, column {column})")]
    Json {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("field `{field}`: {message}")]
    Field { field: String, message: String },
    #[error("{}", join_failures(.0))]
    Structural(Vec<StructuralFailure>),
}

fn join_failures(fs: &[StructuralFailure]) -> String {
    fs.iter().map(|f| f.to_string()).collect::<Vec<_>>().join("; ")
}

/// A validated model. Elements are referred to by index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbstractModel {
    names: Vec<String>,
    leq: Vec<Vec<bool>>,
    join: Vec<Vec<usize>>,
    meet: Vec<Vec<usize>>,
    comp: Vec<Vec<usize>>,
    conv: Vec<usize>,
    id: usize,
    top: usize,
    bot: usize,
}

/// Tables before the lattice operations are known.
struct Raw {
    names: Vec<String>,
    leq: Vec<Vec<bool>>,
    comp: Vec<Vec<usize>>,
    conv: Vec<usize>,
    id: usize,
    top: usize,
    bot: usize,
}

fn field(field: &str, message: impl Into<String>) -> ModelError {
    ModelError::Field {
        field: field.to_string(),
        message: message.into(),
    }
}

fn resolve(file: &ModelFile) -> Result<Raw, ModelError> {
    let n = file.elements.len();
    if n == 0 {
        return Err(field("elements", "must not be empty"));
    }
    for (i, e) in file.elements.iter().enumerate() {
        if file.elements[..i].contains(e) {
            return Err(field("elements", format!("duplicate element {e:?}")));
        }
    }
    let lookup = |f: &str, name: &str| {
        file.elements
            .iter()
            .position(|e| e == name)
            .ok_or_else(|| field(f, format!("unknown element {name:?}")))
    };
    if file.leq.len() != n || file.leq.iter().any(|r| r.len() != n) {
        return Err(field("leq", format!("must be a {n}x{n} matrix")));
    }
    if file.compose.len() != n || file.compose.iter().any(|r| r.len() != n) {
        return Err(field("compose", format!("must be a {n}x{n} table")));
    }
    if file.converse.len() != n {
        return Err(field("converse", format!("must list {n} elements")));
    }
    let comp = file
        .compose
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, x)| lookup(&format!("compose[{i}][{j}]"), x))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    let conv = file
        .converse
        .iter()
        .enumerate()
        .map(|(i, x)| lookup(&format!("converse[{i}]"), x))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Raw {
        names: file.elements.clone(),
        leq: file.leq.clone(),
        comp,
        conv,
        id: lookup("identity", &file.identity)?,
        top: lookup("top", &file.top)?,
        bot: lookup("bottom", &file.bottom)?,
    })
}

fn triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..n).flat_map(move |x| (0..n).flat_map(move |y| (0..n).map(move |z| (x, y, z))))
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |x| (0..n).map(move |y| (x, y)))
}

impl Raw {
    fn n(&self) -> usize {
        self.names.len()
    }

    fn order_failure(&self) -> Option<Vec<usize>> {
        let n = self.n();
        let l = &self.leq;
        if let Some(x) = (0..n).find(|&x| !l[x][x]) {
            return Some(vec![x]);
        }
        if let Some((x, y)) = pairs(n).find(|&(x, y)| x != y && l[x][y] && l[y][x]) {
            return Some(vec![x, y]);
        }
        triples(n)
            .find(|&(x, y, z)| l[x][y] && l[y][z] && !l[x][z])
            .map(|(x, y, z)| vec![x, y, z])
    }

    /// Least upper bound (or greatest lower bound when `upper` is false).
    fn bound(&self, x: usize, y: usize, upper: bool) -> Option<usize> {
        let n = self.n();
        let le = |a: usize, b: usize| if upper { self.leq[a][b] } else { self.leq[b][a] };
        let cands: Vec<usize> = (0..n).filter(|&z| le(x, z) && le(y, z)).collect();
        cands.iter().copied().find(|&z| cands.iter().all(|&w| le(z, w)))
    }
}

impl AbstractModel {
    pub fn from_file(file: &ModelFile) -> Result<Self, ModelError> {
        let raw = resolve(file)?;
        let mut failures = Vec::new();
        let names = |w: Vec<usize>| w.into_iter().map(|i| raw.names[i].clone()).collect::<Vec<_>>();
        if let Some(w) = raw.order_failure() {
            failures.push(StructuralFailure {
                law: StructuralLaw::PartialOrder,
                witness: names(w),
            });
            return Err(ModelError::Structural(failures));
        }
        let n = raw.n();
        let mut join = vec![vec![0; n]; n];
        let mut meet = vec![vec![0; n]; n];
        for (x, y) in pairs(n) {
            match (raw.bound(x, y, true), raw.bound(x, y, false)) {
                (Some(j), Some(m)) => {
                    join[x][y] = j;
                    meet[x][y] = m;
                }
                _ => {
                    failures.push(StructuralFailure {
                        law: StructuralLaw::Lattice,
                        witness: names(vec![x, y]),
                    });
                    return Err(ModelError::Structural(failures));
                }
            }
        }
        let m = AbstractModel {
            names: raw.names.clone(),
            leq: raw.leq,
            join,
            meet,
            comp: raw.comp,
            conv: raw.conv,
            id: raw.id,
            top: raw.top,
            bot: raw.bot,
        };
        let failures = m.structural_failures();
        if failures.is_empty() {
            Ok(m)
        } else {
            Err(ModelError::Structural(failures))
        }
    }

    /// First counterexample for each post-lattice structural law.
    fn structural_failures(&self) -> Vec<StructuralFailure> {
        use StructuralLaw::*;
        [
            Bounds,
            Associativity,
            IdentityUnit,
            BottomZero,
            Distributivity,
            ConverseInvolution,
            ConverseMonotone,
            ConverseAntiHomomorphism,
        ]
        .into_iter()
        .filter_map(|law| {
            self.first_structural_violation(law).map(|w| StructuralFailure {
                law,
                witness: self.names_of(&w),
            })
        })
        .collect()
    }

    pub(crate) fn first_structural_violation(&self, law: StructuralLaw) -> Option<Vec<usize>> {
        let n = self.size();
        let arity = match law {
            StructuralLaw::Associativity | StructuralLaw::Distributivity => 3,
            StructuralLaw::ConverseMonotone | StructuralLaw::ConverseAntiHomomorphism | StructuralLaw::Lattice => 2,
            StructuralLaw::PartialOrder => 3,
            _ => 1,
        };
        match arity {
            1 => (0..n).map(|x| vec![x]).find(|w| self.violates_structural(law, w)),
            2 => pairs(n).map(|(x, y)| vec![x, y]).find(|w| self.violates_structural(law, w)),
            _ => triples(n)
                .map(|(x, y, z)| vec![x, y, z])
                .find(|w| self.violates_structural(law, w)),
        }
    }

    /// Whether the tuple is a counterexample to the law.
    pub(crate) fn violates_structural(&self, law: StructuralLaw, w: &[usize]) -> bool {
        let c = |x, y| self.comp(x, y);
        let j = |x, y| self.join(x, y);
        match (law, w) {
            (StructuralLaw::PartialOrder, [x, y, z]) => {
                !self.leq(*x, *x) || (x != y && self.leq(*x, *y) && self.leq(*y, *x))
                    || (self.leq(*x, *y) && self.leq(*y, *z) && !self.leq(*x, *z))
            }
            (StructuralLaw::Lattice, [x, y]) => {
                let (jj, mm) = (self.join(*x, *y), self.meet(*x, *y));
                !(self.leq(*x, jj) && self.leq(*y, jj) && self.leq(mm, *x) && self.leq(mm, *y))
            }
            (StructuralLaw::Bounds, [x]) => !self.leq(self.bot, *x) || !self.leq(*x, self.top),
            (StructuralLaw::Associativity, [x, y, z]) => c(c(*x, *y), *z) != c(*x, c(*y, *z)),
            (StructuralLaw::IdentityUnit, [x]) => c(self.id, *x) != *x || c(*x, self.id) != *x,
            (StructuralLaw::BottomZero, [x]) => c(self.bot, *x) != self.bot || c(*x, self.bot) != self.bot,
            (StructuralLaw::Distributivity, [x, y, z]) => {
                c(*x, j(*y, *z)) != j(c(*x, *y), c(*x, *z)) || c(j(*y, *z), *x) != j(c(*y, *x), c(*z, *x))
            }
            (StructuralLaw::ConverseInvolution, [x]) => self.conv(self.conv(*x)) != *x,
            (StructuralLaw::ConverseMonotone, [x, y]) => {
                self.leq(*x, *y) && !self.leq(self.conv(*x), self.conv(*y))
            }
            (StructuralLaw::ConverseAntiHomomorphism, [x, y]) => {
                self.conv(c(*x, *y)) != c(self.conv(*y), self.conv(*x))
            }
            _ => false,
        }
    }

    pub fn to_file(&self) -> ModelFile {
        let nm = |i: usize| self.names[i].clone();
        ModelFile {
            elements: self.names.clone(),
            leq: self.leq.clone(),
            compose: self.comp.iter().map(|r| r.iter().map(|&x| nm(x)).collect()).collect(),
            converse: self.conv.iter().map(|&x| nm(x)).collect(),
            identity: nm(self.id),
            top: nm(self.top),
            bottom: nm(self.bot),
        }
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn names_of(&self, xs: &[usize]) -> Vec<String> {
        xs.iter().map(|&x| self.names[x].clone()).collect()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x][y]
    }

    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x][y]
    }

    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x][y]
    }

    pub fn comp(&self, x: usize, y: usize) -> usize {
        self.comp[x][y]
    }

    pub fn conv(&self, x: usize) -> usize {
        self.conv[x]
    }

    pub fn identity(&self) -> usize {
        self.id
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn bottom(&self) -> usize {
        self.bot
    }

    /// Join of a list; bottom for the empty list.
    pub fn join_all(&self, xs: impl IntoIterator<Item = usize>) -> usize {
        xs.into_iter().fold(self.bot, |acc, x| self.join(acc, x))
    }

    /// Elements below the identity.
    pub fn coreflexives(&self) -> Vec<usize> {
        (0..self.size()).filter(|&x| self.leq(x, self.id)).collect()
    }

    /// Covering pairs `(lower, upper)` of the order.
    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        let n = self.size();
        pairs(n)
            .filter(|&(x, y)| {
                x != y && self.leq(x, y) && !(0..n).any(|z| z != x && z != y && self.leq(x, z) && self.leq(z, y))
            })
            .collect()
    }
}

impl ModelFile {
    /// JSON with one table row per line.
    pub fn to_json(&self) -> String {
        let q = |s: &String| serde_json::to_string(s).expect("string");
        let list = |v: &[String]| format!("[{}]", v.iter().map(q).collect::<Vec<_>>().join(", "));
        let rows = |rs: Vec<String>| format!("[\n    {}\n  ]", rs.join(",\n    "));
        let leq = rows(
            self.leq
                .iter()
                .map(|r| format!("[{}]", r.iter().map(|b| b.to_string()).collect::<Vec<_>>().join(", ")))
                .collect(),
        );
        let compose = rows(self.compose.iter().map(|r| list(r)).collect());
        format!(
            "{{\n  \"elements\": {},\n  \"leq\": {},\n  \"compose\": {},\n  \"converse\": {},\n  \"identity\": {},\n  \"top\": {},\n  \"bottom\": {}\n}}\n",
            list(&self.elements),
            leq,
            compose,
            list(&self.converse),
            q(&self.identity),
            q(&self.top),
            q(&self.bottom)
        )
    }
}

/// Parses and validates a model from JSON text.
pub fn load_model(text: &str) -> Result<AbstractModel, ModelError> {
    let file: ModelFile = serde_json::from_str(text).map_err(|e| ModelError::Json {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    AbstractModel::from_file(&file)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn three_element() -> ModelFile {
        serde_json::from_str(include_str!("../../models/three_element.json")).unwrap()
    }

    #[test]
    fn three_element_loads() {
        let m = AbstractModel::from_file(&three_element()).unwrap();
        assert_eq!(m.size(), 3);
        assert_eq!(m.hasse_edges().len(), 2);
    }

    #[test]
    fn corrupted_top_square() {
        let mut f = three_element();
        f.compose[2][2] = "id".to_string();
        let ModelError::Structural(fs) = AbstractModel::from_file(&f).unwrap_err() else { panic!() };
        assert_eq!(fs.len(), 1);
        assert_eq!(fs[0].law, StructuralLaw::Distributivity);
    }

    #[test]
    fn non_lattice_and_bad_fields() {
        let mut f = three_element();
        f.leq[0][1] = false;
        f.leq[0][2] = false;
        let ModelError::Structural(fs) = AbstractModel::from_file(&f).unwrap_err() else { panic!() };
        assert_eq!(fs[0].law, StructuralLaw::Lattice);
        let mut f = three_element();
        f.leq[2][0] = true;
        let ModelError::Structural(fs) = AbstractModel::from_file(&f).unwrap_err() else { panic!() };
        assert_eq!(fs[0].law, StructuralLaw::PartialOrder);
        let mut f = three_element();
        f.converse[1] = "nope".into();
        assert!(matches!(AbstractModel::from_file(&f), Err(ModelError::Field { field, .. }) if field == "converse[1]"));
        let mut f = three_element();
        f.converse[1] = "top".into();
        f.converse[2] = "id".into();
        let ModelError::Structural(fs) = AbstractModel::from_file(&f).unwrap_err() else { panic!() };
        assert!(fs.iter().any(|f| f.law == StructuralLaw::ConverseMonotone));
    }

    #[test]
    fn json_errors_have_positions() {
        let err = load_model("{\n\"elements\": [}").unwrap_err();
        assert!(matches!(err, ModelError::Json { line: 2, .. }));
        let err = load_model(r#"{"elements":["x"],"leq":[[true]],"compose":[["x"]],"converse":["x"],"identity":"x","top":"x","bottom":"x","extra":1}"#).unwrap_err();
        assert!(matches!(err, ModelError::Json { .. }));
    }

    #[test]
    fn compact_json_round_trips() {
        for b in bundled_models() {
            let f = b.model.to_file();
            let back: ModelFile = serde_json::from_str(&f.to_json()).unwrap();
            assert_eq!(back, f);
        }
    }

    #[test]
    fn bundled_models_meet_expectations() {
        for b in bundled_models() {
            let r = check_axioms(&b.model);
            assert!(b.expected.mismatches(&r).is_empty(), "{}: {:?} {r:?}", b.name, b.expected.mismatches(&r));
            assert!(r.lattice.holds && r.monoid.holds && r.converse.holds);
            for a in Axiom::ALL {
                let o = r.get(a);
                assert_eq!(o.holds, o.counterexample.is_none());
                if let Some(cx) = &o.counterexample {
                    assert!(reevaluate(&b.model, a, cx), "{} {a:?} {cx:?}", b.name);
                }
            }
        }
    }

    #[test]
    fn product_fails_cone_only() {
        let ms = bundled_models();
        let two = &ms.iter().find(|b| b.name == "two_element").unwrap().model;
        let p = product_model(two, two);
        assert_eq!(p.size(), 4);
        let r = check_axioms(&p);
        assert!(r.lattice.holds && r.monoid.holds && r.converse.holds);
        assert!(!r.cone.holds);
        assert!(reevaluate(&p, Axiom::Cone, r.cone.counterexample.as_ref().unwrap()));
    }

    #[test]
    fn desharnais13_golden_matches_search() {
        let found = completion::complete_desharnais13(1);
        assert_eq!(found.len(), 1);
        let golden: ModelFile = serde_json::from_str(bundled::bundled_source("desharnais13").unwrap()).unwrap();
        if std::env::var_os("RELINDEX_WRITE_GOLDEN").is_some() {
            let path = concat!(env!("CARGO_MANIFEST_DIR"), "/models/desharnais13.json");
            std::fs::write(path, found[0].to_json()).unwrap();
            return;
        }
        assert_eq!(golden, found[0]);
    }

    #[test]
    fn non_associative_table() {
        // Four-element chain where composition is a broken max.
        let f = ModelFile {
            elements: vec!["bot".into(), "id".into(), "x".into(), "top".into()],
            leq: vec![
                vec![true, true, true, true],
                vec![false, true, true, true],
                vec![false, false, true, true],
                vec![false, false, false, true],
            ],
            compose: vec![
                vec!["bot".into(); 4],
                vec!["bot".into(), "id".into(), "x".into(), "top".into()],
                vec!["bot".into(), "x".into(), "top".into(), "top".into()],
                vec!["bot".into(), "top".into(), "x".into(), "top".into()],
            ],
            converse: vec!["bot".into(), "id".into(), "x".into(), "top".into()],
            identity: "id".into(),
            top: "top".into(),
            bottom: "bot".into(),
        };
        let ModelError::Structural(fs) = AbstractModel::from_file(&f).unwrap_err() else { panic!() };
        assert!(fs.iter().any(|f| f.law == StructuralLaw::Associativity), "{fs:?}");
    }
}
