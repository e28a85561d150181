//! Relation JSON files:
//! `{"src": {"name", "size", "labels"}, "dst": {...}, "pairs": [[i, j], ...]}`.

use serde::{Deserialize, Serialize};

use super::{Carrier, RelError, Relation};

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct CarrierFile {
    pub name: String,
    pub size: usize,
    #[serde(default)]
    pub labels: Option<Vec<String>>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct RelationFile {
    pub src: CarrierFile,
    pub dst: CarrierFile,
    pub pairs: Vec<[usize; 2]>,
}

impl CarrierFile {
    pub fn from_carrier(c: &Carrier) -> Self {
        CarrierFile {
            name: c.name().to_string(),
            size: c.size(),
            labels: Some(c.labels().to_vec()),
        }
    }

    pub fn to_carrier(&self) -> Result<Carrier, RelError> {
        match &self.labels {
            None => Ok(Carrier::indexed(self.name.clone(), self.size)),
            Some(labels) => {
                if labels.len() != self.size {
                    return Err(RelError::LabelCount {
                        carrier: self.name.clone(),
                        size: self.size,
                        labels: labels.len(),
                    });
                }
                Carrier::new(self.name.clone(), labels.clone())
            }
        }
    }
}

impl RelationFile {
    pub fn from_relation(r: &Relation) -> Self {
        RelationFile {
            src: CarrierFile::from_carrier(r.src()),
            dst: CarrierFile::from_carrier(r.dst()),
            pairs: r.pairs().map(|(a, b)| [a, b]).collect(),
        }
    }

    /// Builds the relation. A carrier name shared by `src` and `dst` must
    /// describe the same type, so a homogeneous relation shares one handle.
    pub fn to_relation(&self) -> Result<Relation, RelError> {
        let src = self.src.to_carrier()?;
        let dst = if self.dst == self.src {
            src.clone()
        } else {
            let d = self.dst.to_carrier()?;
            if d.name() == src.name() {
                return Err(RelError::CarrierMismatch {
                    op: "load",
                    left: src.to_string(),
                    right: d.to_string(),
                });
            }
            d
        };
        Relation::from_pairs(&src, &dst, self.pairs.iter().map(|p| (p[0], p[1])))
    }
}

/// Parses a relation from JSON text.
pub fn relation_from_json(text: &str) -> Result<Relation, RelError> {
    let file: RelationFile = serde_json::from_str(text).map_err(|e| RelError::Json {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    file.to_relation()
}

/// Serialises a relation to pretty JSON.
pub fn relation_to_json(r: &Relation) -> String {
    serde_json::to_string_pretty(&RelationFile::from_relation(r)).expect("relation serialises")
}

impl Serialize for Relation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        RelationFile::from_relation(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Relation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let file = RelationFile::deserialize(d)?;
        file.to_relation().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_validates() {
        let text = r#"{"src":{"name":"A","size":2,"labels":["x","y"]},
                       "dst":{"name":"B","size":1,"labels":["z"]},
                       "pairs":[[0,0],[1,0]]}"#;
        let r = relation_from_json(text).unwrap();
        assert_eq!(r.count(), 2);
        assert_eq!(r.src().label(1), "y");
        let back = relation_from_json(&relation_to_json(&r)).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn rejects_bad_pairs() {
        let dup = r#"{"src":{"name":"A","size":2},"dst":{"name":"A","size":2},"pairs":[[0,1],[0,1]]}"#;
        assert!(matches!(relation_from_json(dup), Err(RelError::DuplicatePair { .. })));
        let oob = r#"{"src":{"name":"A","size":2},"dst":{"name":"A","size":2},"pairs":[[0,2]]}"#;
        assert!(matches!(relation_from_json(oob), Err(RelError::PairOutOfRange { .. })));
        let labels = r#"{"src":{"name":"A","size":2,"labels":["x"]},"dst":{"name":"A","size":2},"pairs":[]}"#;
        assert!(matches!(relation_from_json(labels), Err(RelError::LabelCount { .. })));
    }

    #[test]
    fn malformed_json_reports_position() {
        let err = relation_from_json("{\n  \"src\": 3 }").unwrap_err();
        match err {
            RelError::Json { line, .. } => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn homogeneous_shares_type() {
        let text = r#"{"src":{"name":"A","size":2},"dst":{"name":"A","size":2},"pairs":[[0,1]]}"#;
        let r = relation_from_json(text).unwrap();
        assert!(r.is_homogeneous());
    }
}
