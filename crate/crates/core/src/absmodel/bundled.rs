use serde::Serialize;

use super::{AbstractModel, AxiomReport, ModelFile};

/// Flags a model is known to have; `None` where nothing is claimed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct ExpectedFlags {
    pub cone: Option<bool>,
    pub choice: Option<bool>,
    pub all_or_nothing: Option<bool>,
    pub extensional: Option<bool>,
    pub universal_choice: Option<bool>,
}

impl ExpectedFlags {
    /// Names of the flags where the report disagrees.
    pub fn mismatches(&self, r: &AxiomReport) -> Vec<&'static str> {
        let checks = [
            ("cone", self.cone, r.cone.holds),
            ("choice", self.choice, r.choice.holds),
            ("all_or_nothing", self.all_or_nothing, r.all_or_nothing.holds),
            ("extensional", self.extensional, r.extensional.holds),
            ("universal_choice", self.universal_choice, r.universal_choice.holds),
        ];
        checks
            .iter()
            .filter(|(_, want, got)| want.is_some_and(|w| w != *got))
            .map(|(n, _, _)| *n)
            .collect()
    }
}

#[derive(Debug, Clone)]
pub struct BundledModel {
    pub name: &'static str,
    pub model: AbstractModel,
    pub expected: ExpectedFlags,
}

const SOURCES: [(&str, &str); 6] = [
    ("one_element", include_str!("../../models/one_element.json")),
    ("two_element", include_str!("../../models/two_element.json")),
    ("three_element", include_str!("../../models/three_element.json")),
    ("three_element_id_top", include_str!("../../models/three_element_id_top.json")),
    ("four_element_point", include_str!("../../models/four_element_point.json")),
    ("desharnais13", include_str!("../../models/desharnais13.json")),
];

/// JSON text of a bundled model.
pub fn bundled_source(name: &str) -> Option<&'static str> {
    SOURCES.iter().find(|(n, _)| *n == name).map(|(_, s)| *s)
}

fn expected(name: &str) -> ExpectedFlags {
    let all = |b| ExpectedFlags {
        cone: Some(b),
        choice: Some(b),
        all_or_nothing: Some(b),
        extensional: Some(b),
        universal_choice: None,
    };
    match name {
        "one_element" | "two_element" => all(true),
        "three_element" => ExpectedFlags {
            cone: Some(true),
            choice: Some(false),
            all_or_nothing: Some(false),
            extensional: Some(true),
            universal_choice: Some(true),
        },
        "three_element_id_top" => ExpectedFlags {
            cone: Some(false),
            choice: Some(true),
            ..ExpectedFlags::default()
        },
        "four_element_point" => ExpectedFlags {
            cone: Some(false),
            choice: Some(false),
            all_or_nothing: Some(true),
            extensional: Some(false),
            universal_choice: None,
        },
        "desharnais13" => ExpectedFlags {
            cone: Some(true),
            choice: Some(false),
            all_or_nothing: Some(true),
            ..ExpectedFlags::default()
        },
        _ => ExpectedFlags::default(),
    }
}

/// The shipped models with their expected flags.
pub fn bundled_models() -> Vec<BundledModel> {
    SOURCES
        .iter()
        .map(|&(name, src)| BundledModel {
            name,
            model: super::load_model(src).unwrap_or_else(|e| panic!("bundled model {name}: {e}")),
            expected: expected(name),
        })
        .collect()
}

/// Componentwise product of two models.
pub fn product_model(m1: &AbstractModel, m2: &AbstractModel) -> AbstractModel {
    let (n1, n2) = (m1.size(), m2.size());
    let idx = |x: usize, y: usize| x * n2 + y;
    let split = |k: usize| (k / n2, k % n2);
    let n = n1 * n2;
    let name = |k: usize| {
        let (x, y) = split(k);
        format!("({},{})", m1.name(x), m2.name(y))
    };
    let file = ModelFile {
        elements: (0..n).map(name).collect(),
        leq: (0..n)
            .map(|k| {
                (0..n)
                    .map(|l| {
                        let ((x, y), (u, v)) = (split(k), split(l));
                        m1.leq(x, u) && m2.leq(y, v)
                    })
                    .collect()
            })
            .collect(),
        compose: (0..n)
            .map(|k| {
                (0..n)
                    .map(|l| {
                        let ((x, y), (u, v)) = (split(k), split(l));
                        name(idx(m1.comp(x, u), m2.comp(y, v)))
                    })
                    .collect()
            })
            .collect(),
        converse: (0..n)
            .map(|k| {
                let (x, y) = split(k);
                name(idx(m1.conv(x), m2.conv(y)))
            })
            .collect(),
        identity: name(idx(m1.identity(), m2.identity())),
        top: name(idx(m1.top(), m2.top())),
        bottom: name(idx(m1.bottom(), m2.bottom())),
    };
    AbstractModel::from_file(&file).expect("product of valid models is valid")
}
