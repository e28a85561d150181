use std::fmt;

use smallvec::SmallVec;

use super::{Carrier, RelError};

type Words = SmallVec<[u64; 4]>;

fn words_per_row(cols: usize) -> usize {
    cols.div_ceil(64).max(1)
}

/// A concrete heterogeneous relation `src ~ dst` stored as packed bit rows.
///
/// Row `a` holds the set `{ b | (a, b) ∈ R }`. Value semantics: two relations
/// are equal iff their carriers are the same types and the matrices agree.
#[derive(Clone)]
pub struct Relation {
    src: Carrier,
    dst: Carrier,
    wpr: usize,
    bits: Words,
}

impl PartialEq for Relation {
    fn eq(&self, other: &Self) -> bool {
        self.src == other.src && self.dst == other.dst && self.bits == other.bits
    }
}

impl Eq for Relation {}

impl std::hash::Hash for Relation {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.src.size().hash(state);
        self.dst.size().hash(state);
        self.bits.hash(state);
    }
}

fn check_same(op: &'static str, a: &Carrier, b: &Carrier) -> Result<(), RelError> {
    if a.same_type(b) {
        Ok(())
    } else {
        Err(RelError::CarrierMismatch {
            op,
            left: a.to_string(),
            right: b.to_string(),
        })
    }
}

impl Relation {
    /// The empty relation `⊥`.
    pub fn bottom(src: &Carrier, dst: &Carrier) -> Self {
        let wpr = words_per_row(dst.size());
        Relation {
            src: src.clone(),
            dst: dst.clone(),
            wpr,
            bits: smallvec::smallvec![0; src.size() * wpr],
        }
    }

    /// The full relation `⊤`.
    pub fn top(src: &Carrier, dst: &Carrier) -> Self {
        let mut r = Self::bottom(src, dst);
        let mask = r.row_masks();
        for a in 0..src.size() {
            r.row_mut(a).copy_from_slice(&mask);
        }
        r
    }

    /// The identity `𝕀` on a carrier.
    pub fn identity(carrier: &Carrier) -> Self {
        let mut r = Self::bottom(carrier, carrier);
        for a in 0..carrier.size() {
            r.insert(a, a);
        }
        r
    }

    /// The coreflexive `{(a, a)}` representing one element.
    pub fn point(carrier: &Carrier, a: usize) -> Self {
        let mut r = Self::bottom(carrier, carrier);
        r.insert(a, a);
        r
    }

    /// Builds a relation from 0-based index pairs; pairs must be in range and unique.
    pub fn from_pairs<I>(src: &Carrier, dst: &Carrier, pairs: I) -> Result<Self, RelError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut r = Self::bottom(src, dst);
        for (a, b) in pairs {
            if a >= src.size() || b >= dst.size() {
                return Err(RelError::PairOutOfRange {
                    pair: (a, b),
                    src: src.to_string(),
                    dst: dst.to_string(),
                });
            }
            if r.contains(a, b) {
                return Err(RelError::DuplicatePair { pair: (a, b) });
            }
            r.insert(a, b);
        }
        Ok(r)
    }

    /// Builds a relation from a predicate on index pairs.
    pub fn from_fn(src: &Carrier, dst: &Carrier, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut r = Self::bottom(src, dst);
        for a in 0..src.size() {
            for b in 0..dst.size() {
                if f(a, b) {
                    r.insert(a, b);
                }
            }
        }
        r
    }

    /// Decodes the `index`-th relation of the enumeration order: matrix cell
    /// `(a, b)` is bit `a * |dst| + b` of `index` (little-endian, row-major).
    pub fn from_index(src: &Carrier, dst: &Carrier, index: u64) -> Self {
        let cols = dst.size();
        let mut r = Self::bottom(src, dst);
        if cols == 0 {
            return r;
        }
        let full = if cols >= 64 { u64::MAX } else { (1u64 << cols) - 1 };
        for a in 0..src.size() {
            let shift = a * cols;
            if shift >= 64 {
                break;
            }
            r.bits[a * r.wpr] = (index >> shift) & full;
        }
        r
    }

    /// Inverse of [`Relation::from_index`]; `None` if the matrix has more than 64 cells.
    pub fn to_index(&self) -> Option<u64> {
        let cols = self.dst.size();
        if self.src.size() * cols > 64 {
            return None;
        }
        let mut k = 0u64;
        for a in 0..self.src.size() {
            k |= self.bits[a * self.wpr] << (a * cols);
        }
        Some(k)
    }

    pub fn src(&self) -> &Carrier {
        &self.src
    }

    pub fn dst(&self) -> &Carrier {
        &self.dst
    }

    pub fn is_homogeneous(&self) -> bool {
        self.src == self.dst
    }

    pub fn contains(&self, a: usize, b: usize) -> bool {
        self.bits[a * self.wpr + b / 64] >> (b % 64) & 1 == 1
    }

    pub fn insert(&mut self, a: usize, b: usize) {
        self.bits[a * self.wpr + b / 64] |= 1 << (b % 64);
    }

    pub fn remove(&mut self, a: usize, b: usize) {
        self.bits[a * self.wpr + b / 64] &= !(1 << (b % 64));
    }

    /// Packed words of row `a`.
    pub fn row(&self, a: usize) -> &[u64] {
        &self.bits[a * self.wpr..(a + 1) * self.wpr]
    }

    fn row_mut(&mut self, a: usize) -> &mut [u64] {
        let w = self.wpr;
        &mut self.bits[a * w..(a + 1) * w]
    }

    fn row_masks(&self) -> Words {
        let cols = self.dst.size();
        (0..self.wpr)
            .map(|w| {
                let lo = w * 64;
                let n = cols.saturating_sub(lo).min(64);
                if n == 64 {
                    u64::MAX
                } else {
                    (1u64 << n) - 1
                }
            })
            .collect()
    }

    pub fn row_is_empty(&self, a: usize) -> bool {
        self.row(a).iter().all(|&w| w == 0)
    }

    /// Elements of `dst` related to `a`.
    pub fn row_elems(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(a).iter().enumerate().flat_map(|(w, &word)| {
            let mut word = word;
            std::iter::from_fn(move || {
                if word == 0 {
                    None
                } else {
                    let t = word.trailing_zeros() as usize;
                    word &= word - 1;
                    Some(w * 64 + t)
                }
            })
        })
    }

    /// All pairs in row-major order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.src.size()).flat_map(move |a| self.row_elems(a).map(move |b| (a, b)))
    }

    /// Number of pairs.
    pub fn count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// `R = ⊥`.
    pub fn is_bottom(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    /// `R = ⊤`.
    pub fn is_top(&self) -> bool {
        let mask = self.row_masks();
        (0..self.src.size()).all(|a| self.row(a) == mask.as_slice())
    }

    /// Relational composition `R∘S`: `(a, c)` iff some `b` has `(a, b) ∈ R` and `(b, c) ∈ S`.
    pub fn compose(&self, other: &Relation) -> Result<Relation, RelError> {
        check_same("compose", &self.dst, &other.src)?;
        let mut out = Relation::bottom(&self.src, &other.dst);
        for a in 0..self.src.size() {
            for b in self.row_elems(a) {
                let ow = other.wpr;
                let src_row = &other.bits[b * ow..(b + 1) * ow];
                for (dst, s) in out.bits[a * ow..(a + 1) * ow].iter_mut().zip(src_row) {
                    *dst |= s;
                }
            }
        }
        Ok(out)
    }

    /// Converse `R°`.
    pub fn converse(&self) -> Relation {
        let mut out = Relation::bottom(&self.dst, &self.src);
        for (a, b) in self.pairs() {
            out.insert(b, a);
        }
        out
    }

    fn zip_with(
        &self,
        other: &Relation,
        op: &'static str,
        f: impl Fn(u64, u64) -> u64,
    ) -> Result<Relation, RelError> {
        check_same(op, &self.src, &other.src)?;
        check_same(op, &self.dst, &other.dst)?;
        let mut out = self.clone();
        for (x, y) in out.bits.iter_mut().zip(&other.bits) {
            *x = f(*x, *y);
        }
        Ok(out)
    }

    pub fn union(&self, other: &Relation) -> Result<Relation, RelError> {
        self.zip_with(other, "union", |x, y| x | y)
    }

    pub fn intersect(&self, other: &Relation) -> Result<Relation, RelError> {
        self.zip_with(other, "intersect", |x, y| x & y)
    }

    /// Pointwise complement within `src × dst`.
    pub fn complement(&self) -> Relation {
        let mask = self.row_masks();
        let mut out = self.clone();
        for a in 0..self.src.size() {
            for (w, m) in out.row_mut(a).iter_mut().zip(&mask) {
                *w = !*w & m;
            }
        }
        out
    }

    /// `R ⊆ S`.
    pub fn is_subset(&self, other: &Relation) -> Result<bool, RelError> {
        check_same("is_subset", &self.src, &other.src)?;
        check_same("is_subset", &self.dst, &other.dst)?;
        Ok(self.bits.iter().zip(&other.bits).all(|(x, y)| x & !y == 0))
    }

    /// Typed equality: unlike `==`, a carrier mismatch is an error.
    pub fn equals(&self, other: &Relation) -> Result<bool, RelError> {
        check_same("equals", &self.src, &other.src)?;
        check_same("equals", &self.dst, &other.dst)?;
        Ok(self.bits == other.bits)
    }

    /// Errors unless `src = dst`.
    pub fn require_homogeneous(&self, op: &'static str) -> Result<(), RelError> {
        if self.is_homogeneous() {
            Ok(())
        } else {
            Err(RelError::NotHomogeneous {
                op,
                src: self.src.to_string(),
                dst: self.dst.to_string(),
            })
        }
    }

    /// `𝕀` of the source type.
    pub fn src_identity(&self) -> Relation {
        Relation::identity(&self.src)
    }

    /// `𝕀` of the target type.
    pub fn dst_identity(&self) -> Relation {
        Relation::identity(&self.dst)
    }

    /// `⊤` of the same type.
    pub fn top_like(&self) -> Relation {
        Relation::top(&self.src, &self.dst)
    }

    /// `⊥` of the same type.
    pub fn bottom_like(&self) -> Relation {
        Relation::bottom(&self.src, &self.dst)
    }

    /// Same matrix over different (equal-sized) carriers.
    pub fn retyped(&self, src: &Carrier, dst: &Carrier) -> Result<Relation, RelError> {
        if src.size() != self.src.size() || dst.size() != self.dst.size() {
            return Err(RelError::CarrierMismatch {
                op: "retyped",
                left: format!("{}~{}", self.src, self.dst),
                right: format!("{src}~{dst}"),
            });
        }
        let mut r = self.clone();
        r.src = src.clone();
        r.dst = dst.clone();
        Ok(r)
    }

    /// Restriction to new carriers through index maps: `(a', b')` holds iff
    /// `(src_map[a'], dst_map[b'])` holds.
    pub fn project(&self, src: &Carrier, src_map: &[usize], dst: &Carrier, dst_map: &[usize]) -> Relation {
        Relation::from_fn(src, dst, |a, b| self.contains(src_map[a], dst_map[b]))
    }
}

impl fmt::Debug for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}~{:?}{{", self.src, self.dst)?;
        for (i, (a, b)) in self.pairs().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "({a},{b})")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.dst.labels().iter().map(|l| l.len()).max().unwrap_or(1).max(1);
        let lw = self.src.labels().iter().map(|l| l.len()).max().unwrap_or(1);
        write!(f, "{:lw$} ", "")?;
        for l in self.dst.labels() {
            write!(f, " {l:>width$}")?;
        }
        writeln!(f)?;
        for a in 0..self.src.size() {
            write!(f, "{:lw$} ", self.src.label(a))?;
            for b in 0..self.dst.size() {
                let c = if self.contains(a, b) { "1" } else { "." };
                write!(f, " {c:>width$}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: &str, k: usize) -> Carrier {
        Carrier::indexed(n, k)
    }

    #[test]
    fn compose_example() {
        let (a, b, cc) = (c("A", 1), c("B", 2), c("C", 1));
        let r = Relation::from_pairs(&a, &b, [(0, 0), (0, 1)]).unwrap();
        let s = Relation::from_pairs(&b, &cc, [(1, 0)]).unwrap();
        let rs = r.compose(&s).unwrap();
        assert_eq!(rs, Relation::from_pairs(&a, &cc, [(0, 0)]).unwrap());
    }

    #[test]
    fn compose_type_error() {
        let r = Relation::bottom(&c("A", 2), &c("B", 2));
        let s = Relation::bottom(&c("C", 2), &c("A", 2));
        assert!(matches!(r.compose(&s), Err(RelError::CarrierMismatch { .. })));
    }

    #[test]
    fn identity_and_zero() {
        let a = c("A", 3);
        let b = c("B", 2);
        let r = Relation::from_pairs(&a, &b, [(0, 1), (2, 0)]).unwrap();
        assert_eq!(Relation::identity(&a).compose(&r).unwrap(), r);
        assert_eq!(r.compose(&Relation::identity(&b)).unwrap(), r);
        assert!(Relation::bottom(&a, &a).compose(&r).unwrap().is_bottom());
        assert!(r.compose(&Relation::bottom(&b, &b)).unwrap().is_bottom());
    }

    #[test]
    fn converse_transposes() {
        let a = c("A", 2);
        let r = Relation::from_pairs(&a, &a, [(0, 1)]).unwrap();
        assert_eq!(r.converse(), Relation::from_pairs(&a, &a, [(1, 0)]).unwrap());
        assert_eq!(r.converse().converse(), r);
        assert_eq!(Relation::identity(&a).converse(), Relation::identity(&a));
    }

    #[test]
    fn lattice_basics() {
        let a = c("A", 2);
        let b = c("B", 3);
        let r = Relation::from_pairs(&a, &b, [(0, 2), (1, 1)]).unwrap();
        let bot = Relation::bottom(&a, &b);
        assert_eq!(r.union(&bot).unwrap(), r);
        assert_eq!(bot.complement(), Relation::top(&a, &b));
        assert!(bot.is_subset(&r).unwrap());
        assert!(r.is_subset(&r.top_like()).unwrap());
        let p = Relation::from_pairs(&a, &a, [(0, 0)]).unwrap();
        let q = Relation::identity(&a);
        assert_eq!(p.intersect(&q).unwrap(), p.compose(&q).unwrap());
    }

    #[test]
    fn wide_rows_span_words() {
        let a = c("A", 2);
        let b = c("B", 130);
        let r = Relation::from_pairs(&a, &b, [(0, 0), (0, 64), (1, 129)]).unwrap();
        assert_eq!(r.count(), 3);
        assert_eq!(r.converse().converse(), r);
        assert_eq!(r.complement().count(), 2 * 130 - 3);
        assert!(Relation::top(&a, &b).is_top());
        let rr = r.converse().compose(&r).unwrap();
        assert!(rr.contains(64, 0) && rr.contains(129, 129) && !rr.contains(0, 129));
    }

    #[test]
    fn index_round_trip() {
        let a = c("A", 3);
        for k in [0u64, 1, 77, 511] {
            let r = Relation::from_index(&a, &a, k);
            assert_eq!(r.to_index(), Some(k));
        }
        // bit (row 0, col 1) is bit 1
        let r = Relation::from_index(&a, &a, 2);
        assert!(r.contains(0, 1) && r.count() == 1);
    }

    #[test]
    fn from_pairs_validates() {
        let a = c("A", 2);
        assert!(matches!(
            Relation::from_pairs(&a, &a, [(0, 2)]),
            Err(RelError::PairOutOfRange { .. })
        ));
        assert!(matches!(
            Relation::from_pairs(&a, &a, [(0, 1), (0, 1)]),
            Err(RelError::DuplicatePair { .. })
        ));
    }

    #[test]
    fn zero_sized_carrier() {
        let z = c("Z", 0);
        let a = c("A", 2);
        let bot = Relation::bottom(&z, &a);
        assert_eq!(bot, Relation::top(&z, &a));
        assert!(bot.is_bottom() && bot.is_top());
    }
}
