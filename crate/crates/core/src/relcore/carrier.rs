use std::fmt;
use std::sync::Arc;

use super::RelError;

#[derive(Debug)]
struct CarrierData {
    name: String,
    labels: Vec<String>,
}

/// A named finite type. Cheap to clone; relations hold their carriers by handle.
///
/// Carriers are nominal: two carriers are the same type iff they agree on name
/// and size. Labels are presentation only.
#[derive(Clone)]
pub struct Carrier(Arc<CarrierData>);

impl Carrier {
    /// Builds a carrier from explicit labels, rejecting duplicates.
    pub fn new(name: impl Into<String>, labels: Vec<String>) -> Result<Self, RelError> {
        let name = name.into();
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(RelError::DuplicateLabel {
                    carrier: name,
                    label: l.clone(),
                });
            }
        }
        Ok(Carrier(Arc::new(CarrierData { name, labels })))
    }

    /// A carrier whose labels are `0..size`.
    pub fn indexed(name: impl Into<String>, size: usize) -> Self {
        let labels = (0..size).map(|i| i.to_string()).collect();
        Carrier(Arc::new(CarrierData {
            name: name.into(),
            labels,
        }))
    }

    pub fn name(&self) -> &str {
        &self.0.name
    }

    pub fn size(&self) -> usize {
        self.0.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.0.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.0.labels[i]
    }

    /// Carrier with the element at `drop` removed; used when shrinking counterexamples.
    pub fn without(&self, drop: usize) -> Self {
        let labels = self
            .labels()
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != drop)
            .map(|(_, l)| l.clone())
            .collect();
        Carrier(Arc::new(CarrierData {
            name: self.0.name.clone(),
            labels,
        }))
    }

    /// Same type check used by every binary operation.
    pub fn same_type(&self, other: &Carrier) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.size() == other.size() && self.name() == other.name())
    }
}

impl PartialEq for Carrier {
    fn eq(&self, other: &Self) -> bool {
        self.same_type(other)
    }
}

impl Eq for Carrier {}

impl fmt::Debug for Carrier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.name(), self.size())
    }
}

impl fmt::Display for Carrier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.name(), self.size())
    }
}
