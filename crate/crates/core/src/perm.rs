//! Permutations of `[n] = {1..n}` and transpositions, multiplied left to
//! right: in the product `p·q` the permutation `p` acts first, so
//! `(1 2)(2 3) = (3 2 1)`.  Conjugation follows the same convention:
//! `g^h = h⁻¹·g·h` and `ʰg = h·g·h⁻¹`.

use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// A permutation of the ground set `[n]`, stored by its images.
///
/// `images[v-1]` is the image of `v`.  The degree is part of the value, so
/// identity permutations of different degrees compare unequal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from 1-based images, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::Parse("ground set must be non-empty".into()));
        }
        let mut seen = vec![false; n];
        for &img in &images {
            if img == 0 || img > n || seen[img - 1] {
                return Err(Error::Parse(format!("images {images:?} are not a bijection")));
            }
            seen[img - 1] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (1..=n).collect() }
    }

    /// The permutation of a single cycle `(c₁ c₂ … cₖ)` in `S_n`.
    pub fn from_cycle(n: usize, cycle: &[usize]) -> Result<Self> {
        let mut p = Self::identity(n);
        for (i, &v) in cycle.iter().enumerate() {
            let next = cycle[(i + 1) % cycle.len()];
            if v == 0 || v > n {
                return Err(Error::IndexOutOfRange(format!("cycle entry {v} not in [{n}]")));
            }
            p.images[v - 1] = next;
        }
        Self::from_images(p.images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `v`.
    pub fn apply(&self, v: usize) -> usize {
        self.images[v - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| img == i + 1)
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img - 1] = i + 1;
        }
        Permutation { images }
    }

    /// Left-to-right product: applies `self` first, then `other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch { expected: self.degree(), found: other.degree() });
        }
        let images = self.images.iter().map(|&v| other.images[v - 1]).collect();
        Ok(Permutation { images })
    }

    /// Right conjugate `self^h = h⁻¹·self·h`.
    pub fn conjugate_right(&self, h: &Permutation) -> Result<Permutation> {
        h.inverse().compose(self)?.compose(h)
    }

    /// Left conjugate `ʰself = h·self·h⁻¹`.
    pub fn conjugate_left(&self, h: &Permutation) -> Result<Permutation> {
        h.compose(self)?.compose(&h.inverse())
    }

    /// Disjoint cycles, each rotated to start at its smallest point and
    /// sorted by that point.  Fixed points appear as 1-cycles.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start - 1] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start - 1] = true;
            let mut v = self.apply(start);
            while v != start {
                seen[v - 1] = true;
                cycle.push(v);
                v = self.apply(v);
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle type as a multiset of cycle lengths, sorted descending and
    /// including fixed points.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lens: Vec<usize> = self.cycles().iter().map(|c| c.len()).collect();
        lens.sort_unstable_by(|a, b| b.cmp(a));
        lens
    }

    pub fn is_n_cycle(&self) -> bool {
        self.cycle_type() == vec![self.degree()]
    }

    /// Parses whitespace-insensitive cycle notation such as
    /// `"(4 3 2 1)"`, `"(1,2)(3,4)"`, or `"id"`, in `S_n`.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let trimmed = text.trim();
        if trimmed.is_empty() || trimmed.eq_ignore_ascii_case("id") || trimmed == "()" {
            return Ok(Self::identity(n));
        }
        let mut p = Self::identity(n);
        let mut rest = trimmed;
        while !rest.is_empty() {
            let open = rest
                .find('(')
                .ok_or_else(|| Error::Parse(format!("expected '(' in {rest:?}")))?;
            if !rest[..open].trim().is_empty() {
                return Err(Error::Parse(format!("unexpected text {:?}", &rest[..open])));
            }
            let close = rest
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unbalanced '(' in {trimmed:?}")))?;
            let inner = &rest[open + 1..close];
            let points: Vec<usize> = inner
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|s| !s.is_empty())
                .map(|s| s.parse::<usize>().map_err(|_| Error::Parse(format!("bad point {s:?}"))))
                .collect::<Result<_>>()?;
            if points.is_empty() {
                return Err(Error::Parse("empty cycle".into()));
            }
            let cyc = Self::from_cycle(n, &points)?;
            // cycles in the text are themselves composed left to right
            p = p.compose(&cyc)?;
            rest = &rest[close + 1..];
        }
        Ok(p)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "id");
        }
        for cycle in self.cycles() {
            if cycle.len() == 1 {
                continue;
            }
            write!(f, "(")?;
            for (i, v) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{v}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// A transposition `(s t)` stored with `s < t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Transposition {
    s: usize,
    t: usize,
}

impl Transposition {
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if a == b {
            return Err(Error::Parse(format!("({a} {b}) is not a transposition")));
        }
        if a == 0 || b == 0 {
            return Err(Error::IndexOutOfRange("moved points are 1-based".into()));
        }
        Ok(Transposition { s: a.min(b), t: a.max(b) })
    }

    pub fn moved(&self) -> (usize, usize) {
        (self.s, self.t)
    }

    pub fn moves(&self, v: usize) -> bool {
        v == self.s || v == self.t
    }

    pub fn apply(&self, v: usize) -> usize {
        if v == self.s {
            self.t
        } else if v == self.t {
            self.s
        } else {
            v
        }
    }

    pub fn to_permutation(&self, n: usize) -> Result<Permutation> {
        if self.t > n {
            return Err(Error::IndexOutOfRange(format!("({} {}) not in S_{n}", self.s, self.t)));
        }
        Permutation::from_cycle(n, &[self.s, self.t])
    }

    /// Conjugate by another transposition.  Since transpositions are
    /// involutions the left and right conjugates by `other` coincide: both
    /// move the `other`-images of the moved points.
    pub fn conjugate_by(&self, other: &Transposition) -> Transposition {
        Transposition {
            s: other.apply(self.s).min(other.apply(self.t)),
            t: other.apply(self.s).max(other.apply(self.t)),
        }
    }

    /// Right conjugate `self^h`, the transposition of the `h`-images.
    pub fn conjugate_right(&self, h: &Permutation) -> Transposition {
        let (a, b) = (h.apply(self.s), h.apply(self.t));
        Transposition { s: a.min(b), t: a.max(b) }
    }

    /// Left conjugate `ʰself`, the transposition of the `h⁻¹`-images.
    pub fn conjugate_left(&self, h: &Permutation) -> Transposition {
        self.conjugate_right(&h.inverse())
    }
}

impl fmt::Display for Transposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {})", self.s, self.t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(a: usize, b: usize) -> Transposition {
        Transposition::new(a, b).unwrap()
    }

    #[test]
    fn left_to_right_product() {
        let p = t(1, 2).to_permutation(3).unwrap();
        let q = t(2, 3).to_permutation(3).unwrap();
        let pq = p.compose(&q).unwrap();
        assert_eq!(pq, Permutation::parse("(3 2 1)", 3).unwrap());
        assert_eq!(pq.apply(1), 3);
        assert_eq!(pq.apply(2), 1);
        assert_eq!(pq.apply(3), 2);
    }

    #[test]
    fn identity_is_unit() {
        let p = Permutation::parse("(1 3 2)", 4).unwrap();
        let id = Permutation::identity(4);
        assert_eq!(id.compose(&p).unwrap(), p);
        assert_eq!(p.compose(&id).unwrap(), p);
    }

    #[test]
    fn worked_five_factor_product() {
        // (3 4)·(1 3)·(1 2)·(3 4)·(2 3) maps 1↦4, 2↦1, 3↦2, 4↦3
        let factors = [t(3, 4), t(1, 3), t(1, 2), t(3, 4), t(2, 3)];
        let mut p = Permutation::identity(4);
        for f in factors {
            p = p.compose(&f.to_permutation(4).unwrap()).unwrap();
        }
        assert_eq!(p, Permutation::parse("(4 3 2 1)", 4).unwrap());
        assert_eq!(p.apply(1), 4);
        assert_eq!(p.apply(2), 1);
    }

    #[test]
    fn conjugates() {
        let g = t(1, 3).to_permutation(4).unwrap();
        let h = t(3, 4).to_permutation(4).unwrap();
        // brute-force route: h⁻¹·g·h
        let brute = h.inverse().compose(&g).unwrap().compose(&h).unwrap();
        assert_eq!(g.conjugate_right(&h).unwrap(), brute);
        assert_eq!(brute, t(1, 4).to_permutation(4).unwrap());
        assert_eq!(t(1, 3).conjugate_right(&h), t(1, 4));

        let id = Permutation::identity(4);
        assert_eq!(g.conjugate_right(&id).unwrap(), g);
        assert_eq!(t(1, 2).conjugate_by(&t(1, 2)), t(1, 2));

        // left conjugate examples
        assert_eq!(t(2, 3).conjugate_left(&t(1, 2).to_permutation(3).unwrap()), t(1, 3));
        let h = Permutation::parse("(1 3 2)", 3).unwrap();
        assert_eq!(t(1, 3).conjugate_left(&h), t(1, 2));
        assert_eq!(t(1, 3).conjugate_left(&Permutation::identity(3)), t(1, 3));
    }

    #[test]
    fn conjugate_left_right_inverse_relation() {
        let g = Permutation::parse("(1 2 3)", 5).unwrap();
        let h = Permutation::parse("(2 4)(3 5)", 5).unwrap();
        assert_eq!(
            g.conjugate_right(&h).unwrap(),
            g.conjugate_left(&h.inverse()).unwrap()
        );
    }

    #[test]
    fn inverses() {
        let p = Permutation::parse("(1 2 3 4)", 4).unwrap();
        assert_eq!(p.inverse(), Permutation::parse("(1 4 3 2)", 4).unwrap());
        assert_eq!(Permutation::identity(5).inverse(), Permutation::identity(5));
        let q = Permutation::parse("(4 3 2 1)", 4).unwrap();
        assert!(q.compose(&q.inverse()).unwrap().is_identity());
        assert_eq!(q.inverse(), Permutation::parse("(1 2 3 4)", 4).unwrap());
    }

    #[test]
    fn cycle_types() {
        assert_eq!(Permutation::identity(4).cycle_type(), vec![1, 1, 1, 1]);
        assert_eq!(Permutation::parse("(4 3 2 1)", 4).unwrap().cycle_type(), vec![4]);
        assert!(Permutation::parse("(4 3 2 1)", 4).unwrap().is_n_cycle());
    }

    #[test]
    fn cycle_type_is_conjugation_invariant() {
        let g = Permutation::parse("(1 2)(3 4 5)", 6).unwrap();
        let h = Permutation::parse("(1 6 2 4)", 6).unwrap();
        assert_eq!(g.cycle_type(), g.conjugate_right(&h).unwrap().cycle_type());
    }

    fn all_permutations(n: usize) -> Vec<Permutation> {
        fn heap(k: usize, items: &mut Vec<usize>, out: &mut Vec<Permutation>) {
            if k <= 1 {
                out.push(Permutation::from_images(items.clone()).unwrap());
                return;
            }
            for i in 0..k {
                heap(k - 1, items, out);
                if k.is_multiple_of(2) {
                    items.swap(i, k - 1);
                } else {
                    items.swap(0, k - 1);
                }
            }
        }
        let mut items: Vec<usize> = (1..=n).collect();
        let mut out = Vec::new();
        heap(n, &mut items, &mut out);
        out
    }

    #[test]
    fn associativity_exhaustive_small() {
        for n in 1..=4 {
            let all = all_permutations(n);
            for p in &all {
                for q in &all {
                    for r in &all {
                        assert_eq!(
                            p.compose(q).unwrap().compose(r).unwrap(),
                            p.compose(&q.compose(r).unwrap()).unwrap()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn transposition_conjugation_exhaustive() {
        // conjugating (a b) by h moves the points to their h-images
        for n in 2..=5 {
            for h in all_permutations(n) {
                for a in 1..=n {
                    for b in a + 1..=n {
                        let tr = t(a, b);
                        assert_eq!(tr.conjugate_right(&h), t(h.apply(a), h.apply(b)));
                        let brute = h
                            .inverse()
                            .compose(&tr.to_permutation(n).unwrap())
                            .unwrap()
                            .compose(&h)
                            .unwrap();
                        assert_eq!(tr.conjugate_right(&h).to_permutation(n).unwrap(), brute);
                    }
                }
            }
        }
    }

    #[test]
    fn parse_and_print_round_trip() {
        for text in ["id", "(1 2)", "(1 2)(3 4)", "(4 3 2 1)", "(1, 2)( 3 , 4 )"] {
            let p = Permutation::parse(text, 5).unwrap();
            let back = Permutation::parse(&p.to_string(), 5).unwrap();
            assert_eq!(p, back, "{text}");
        }
    }

    #[test]
    fn degree_mismatch_is_an_error() {
        let p = Permutation::identity(3);
        let q = Permutation::identity(4);
        assert!(matches!(p.compose(&q), Err(Error::DegreeMismatch { .. })));
    }

    #[test]
    fn parse_rejects_junk() {
        assert!(Permutation::parse("(1 2", 3).is_err());
        assert!(Permutation::parse("(0 1)", 3).is_err());
        assert!(Permutation::parse("(1 5)", 3).is_err());
        assert!(Transposition::new(2, 2).is_err());
    }
}
