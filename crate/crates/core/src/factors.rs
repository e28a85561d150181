//! Residuals (factors) and symmetric divisions, computed from their
//! pointwise characterisations.

use crate::relcore::{RelError, Relation};

fn mismatch(op: &'static str, l: &crate::Carrier, r: &crate::Carrier) -> RelError {
    RelError::CarrierMismatch {
        op,
        left: l.to_string(),
        right: r.to_string(),
    }
}

fn row_subset(x: &[u64], y: &[u64]) -> bool {
    x.iter().zip(y).all(|(a, b)| a & !b == 0)
}

/// `R\S` for `R: A~B`, `S: A~C`, giving `B~C`:
/// `(b, c)` iff every `a` with `(a, b) ∈ R` has `(a, c) ∈ S`.
pub fn left_residual(r: &Relation, s: &Relation) -> Result<Relation, RelError> {
    if r.src() != s.src() {
        return Err(mismatch("left_residual", r.src(), s.src()));
    }
    let rc = r.converse();
    let sc = s.converse();
    Ok(Relation::from_fn(r.dst(), s.dst(), |b, c| row_subset(rc.row(b), sc.row(c))))
}

/// `R/S` for `R: A~B`, `S: C~B`, giving `A~C`:
/// `(a, c)` iff every `b` with `(c, b) ∈ S` has `(a, b) ∈ R`.
pub fn right_residual(r: &Relation, s: &Relation) -> Result<Relation, RelError> {
    if r.dst() != s.dst() {
        return Err(mismatch("right_residual", r.dst(), s.dst()));
    }
    Ok(Relation::from_fn(r.src(), s.src(), |a, c| row_subset(s.row(c), r.row(a))))
}

/// Symmetric right-division `R\\S = R\S ∩ (S\R)°`.
pub fn sym_right_div(r: &Relation, s: &Relation) -> Result<Relation, RelError> {
    left_residual(r, s)?.intersect(&left_residual(s, r)?.converse())
}

/// Symmetric left-division `R//S = R/S ∩ (S/R)°`.
pub fn sym_left_div(r: &Relation, s: &Relation) -> Result<Relation, RelError> {
    right_residual(r, s)?.intersect(&right_residual(s, r)?.converse())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relcore::{enumerate_relations, Carrier};

    fn c(n: &str, k: usize) -> Carrier {
        Carrier::indexed(n, k)
    }

    #[test]
    fn residual_of_bottom_is_top() {
        let (a, b, cc) = (c("A", 2), c("B", 3), c("C", 2));
        let s = Relation::from_pairs(&a, &cc, [(0, 1)]).unwrap();
        assert!(left_residual(&Relation::bottom(&a, &b), &s).unwrap().is_top());
        let r = Relation::from_pairs(&a, &b, [(1, 2)]).unwrap();
        assert!(right_residual(&r, &Relation::bottom(&cc, &b)).unwrap().is_top());
    }

    #[test]
    fn left_residual_example() {
        let (a, b, cc) = (c("A", 2), c("B", 2), c("C", 1));
        let r = Relation::from_pairs(&a, &b, [(0, 0), (1, 1)]).unwrap();
        let s = Relation::from_pairs(&a, &cc, [(0, 0)]).unwrap();
        let want = Relation::from_pairs(&b, &cc, [(0, 0)]).unwrap();
        assert_eq!(left_residual(&r, &s).unwrap(), want);
    }

    #[test]
    fn right_residual_example() {
        // R = S = {(0,1)} over 2x2: (a,c) iff S-row c ⊆ R-row a.
        let a = c("A", 2);
        let r = Relation::from_pairs(&a, &a, [(0, 1)]).unwrap();
        let got = right_residual(&r, &r).unwrap();
        let want = Relation::from_pairs(&a, &a, [(0, 0), (0, 1), (1, 0), (1, 1)])
            .unwrap()
            .intersect(&Relation::from_fn(&a, &a, |x, y| !(x == 1 && y == 0)))
            .unwrap();
        assert_eq!(got, want);
        assert!(Relation::identity(&a).is_subset(&got).unwrap());
    }

    #[test]
    fn type_errors() {
        let (a, b) = (c("A", 2), c("B", 2));
        let r = Relation::bottom(&a, &b);
        let s = Relation::bottom(&b, &b);
        assert!(left_residual(&r, &s).is_err());
        assert!(right_residual(&s, &Relation::bottom(&a, &a)).is_err());
    }

    #[test]
    fn sym_right_div_examples() {
        let (one, two) = (c("A", 1), c("B", 2));
        let bot = Relation::bottom(&two, &two);
        assert!(sym_right_div(&bot, &bot).unwrap().is_top());
        let r = Relation::from_pairs(&one, &two, [(0, 0), (0, 1)]).unwrap();
        assert!(sym_right_div(&r, &r).unwrap().is_top());
        let t = Relation::top(&two, &two);
        assert!(sym_left_div(&t, &t).unwrap().is_top());
    }

    #[test]
    fn cancellation_and_symmetry_over_3x3() {
        let a = c("A", 3);
        for r in enumerate_relations(&a, &a).unwrap() {
            let ll = sym_left_div(&r, &r).unwrap();
            assert_eq!(ll.compose(&r).unwrap(), r);
            assert_eq!(ll, ll.converse());
            let rr = sym_right_div(&r, &r).unwrap();
            assert_eq!(r.compose(&rr).unwrap(), r);
        }
    }
}
