use super::{Carrier, RelError, Relation};

/// Default cap on `|src| * |dst|` for exhaustive enumeration.
pub const DEFAULT_ENUM_BITS: usize = 12;

/// Every relation of type `src ~ dst`, each exactly once, ordered by the
/// little-endian integer value of the row-major matrix bits.
pub fn enumerate_relations(
    src: &Carrier,
    dst: &Carrier,
) -> Result<RelationIter, RelError> {
    enumerate_relations_bounded(src, dst, DEFAULT_ENUM_BITS)
}

pub fn enumerate_relations_bounded(
    src: &Carrier,
    dst: &Carrier,
    max_bits: usize,
) -> Result<RelationIter, RelError> {
    let bits = src.size() * dst.size();
    if bits > max_bits || bits >= 64 {
        return Err(RelError::EnumerationBound {
            bits,
            bound: max_bits.min(63),
        });
    }
    Ok(RelationIter {
        src: src.clone(),
        dst: dst.clone(),
        next: 0,
        end: 1u64 << bits,
    })
}

/// Iterator returned by [`enumerate_relations`].
#[derive(Clone, Debug)]
pub struct RelationIter {
    src: Carrier,
    dst: Carrier,
    next: u64,
    end: u64,
}

impl Iterator for RelationIter {
    type Item = Relation;

    fn next(&mut self) -> Option<Relation> {
        if self.next == self.end {
            return None;
        }
        let r = Relation::from_index(&self.src, &self.dst, self.next);
        self.next += 1;
        Some(r)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = (self.end - self.next) as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for RelationIter {}

/// All coreflexives (subsets of `𝕀`) on a carrier, in subset-bitmask order.
pub fn enumerate_coreflexives(carrier: &Carrier) -> impl Iterator<Item = Relation> + '_ {
    let n = carrier.size();
    assert!(n < 64, "carrier too large to enumerate coreflexives");
    (0u64..1 << n).map(move |mask| {
        let mut r = Relation::bottom(carrier, carrier);
        for a in 0..n {
            if mask >> a & 1 == 1 {
                r.insert(a, a);
            }
        }
        r
    })
}

/// All sub-relations of `r`, including `⊥` and `r` itself.
pub fn enumerate_subrelations(r: &Relation) -> impl Iterator<Item = Relation> + '_ {
    let pairs: Vec<(usize, usize)> = r.pairs().collect();
    assert!(pairs.len() < 64, "relation too large to enumerate sub-relations");
    (0u64..1 << pairs.len()).map(move |mask| {
        let mut s = r.bottom_like();
        for (i, &(a, b)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                s.insert(a, b);
            }
        }
        s
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn counts() {
        for (n, m, want) in [(1, 1, 2usize), (2, 2, 16), (3, 3, 512), (2, 3, 64)] {
            let a = Carrier::indexed("A", n);
            let b = Carrier::indexed("B", m);
            let all: Vec<_> = enumerate_relations(&a, &b).unwrap().collect();
            assert_eq!(all.len(), want);
            let distinct: HashSet<_> = all.iter().cloned().collect();
            assert_eq!(distinct.len(), want);
        }
    }

    #[test]
    fn order_is_little_endian() {
        let a = Carrier::indexed("A", 2);
        let rels: Vec<_> = enumerate_relations(&a, &a).unwrap().collect();
        assert!(rels[0].is_bottom());
        assert_eq!(rels[1].pairs().collect::<Vec<_>>(), vec![(0, 0)]);
        assert_eq!(rels[2].pairs().collect::<Vec<_>>(), vec![(0, 1)]);
        assert_eq!(rels[4].pairs().collect::<Vec<_>>(), vec![(1, 0)]);
        assert!(rels[15].is_top());
    }

    #[test]
    fn bound_refused() {
        let a = Carrier::indexed("A", 4);
        let err = enumerate_relations(&a, &a).unwrap_err();
        assert!(matches!(err, RelError::EnumerationBound { bits: 16, .. }));
        assert_eq!(enumerate_relations_bounded(&a, &a, 16).unwrap().len(), 65536);
    }

    #[test]
    fn coreflexive_and_sub_counts() {
        let a = Carrier::indexed("A", 3);
        assert_eq!(enumerate_coreflexives(&a).count(), 8);
        let r = Relation::from_pairs(&a, &a, [(0, 1), (1, 2), (2, 2)]).unwrap();
        assert_eq!(enumerate_subrelations(&r).count(), 8);
    }
}
