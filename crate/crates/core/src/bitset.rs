//! Fixed-width bitsets over the vertex indices of one graph.
//!
//! A [`VertexSet`] is created with the width of its owning graph and keeps
//! that width forever; combining sets of different widths is a programming
//! error and panics. This is what stops a code over `H` from being silently
//! used as a code over `G[H]`.

use std::fmt;

const WORD_BITS: usize = 64;

#[inline]
fn word_count(width: usize) -> usize {
    width.div_ceil(WORD_BITS)
}

/// A set of vertex indices in `[0, width)`, backed by 64-bit words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    width: usize,
    words: Vec<u64>,
}

impl VertexSet {
    /// The empty set over `width` vertices.
    pub fn empty(width: usize) -> Self {
        VertexSet {
            width,
            words: vec![0; word_count(width)],
        }
    }

    /// The full set `{0, .., width-1}`.
    pub fn full(width: usize) -> Self {
        let mut set = Self::empty(width);
        for w in 0..word_count(width) {
            set.words[w] = !0;
        }
        set.trim();
        set
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(width: usize, indices: I) -> Self {
        let mut set = Self::empty(width);
        for v in indices {
            set.insert(v);
        }
        set
    }

    /// Clears any bits at or above `width` in the last word.
    #[inline]
    fn trim(&mut self) {
        let rem = self.width % WORD_BITS;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    #[inline]
    pub fn width(&self) -> usize {
        self.width
    }

    #[inline]
    fn check_width(&self, other: &VertexSet) {
        assert_eq!(
            self.width, other.width,
            "vertex sets belong to graphs of different orders"
        );
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        assert!(v < self.width, "vertex {v} out of range 0..{}", self.width);
        self.words[v / WORD_BITS] |= 1u64 << (v % WORD_BITS);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        assert!(v < self.width, "vertex {v} out of range 0..{}", self.width);
        self.words[v / WORD_BITS] &= !(1u64 << (v % WORD_BITS));
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.width && self.words[v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    /// Number of vertices in the set.
    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Smallest member, if any.
    pub fn min(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(i * WORD_BITS + w.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.check_width(other);
        let mut out = self.clone();
        for (a, b) in out.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
        out
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        self.check_width(other);
        let mut out = self.clone();
        for (a, b) in out.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
        out
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        self.check_width(other);
        let mut out = self.clone();
        for (a, b) in out.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
        out
    }

    pub fn symmetric_difference(&self, other: &VertexSet) -> VertexSet {
        self.check_width(other);
        let mut out = self.clone();
        for (a, b) in out.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
        out
    }

    pub fn complement(&self) -> VertexSet {
        let mut out = self.clone();
        for w in out.words.iter_mut() {
            *w = !*w;
        }
        out.trim();
        out
    }

    #[inline]
    pub fn intersects(&self, other: &VertexSet) -> bool {
        self.check_width(other);
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.check_width(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        !self.intersects(other)
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut rem = w;
            std::iter::from_fn(move || {
                if rem == 0 {
                    None
                } else {
                    let b = rem.trailing_zeros() as usize;
                    rem &= rem - 1;
                    Some(i * WORD_BITS + b)
                }
            })
        })
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

// Debug forwards to Display so sets print as `{0,2,4}` in assertions too.
impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_contains_iter() {
        let mut s = VertexSet::empty(70);
        s.insert(0);
        s.insert(63);
        s.insert(64);
        s.insert(69);
        assert!(s.contains(0) && s.contains(63) && s.contains(64) && s.contains(69));
        assert!(!s.contains(1));
        assert_eq!(s.to_vec(), vec![0, 63, 64, 69]);
        assert_eq!(s.len(), 4);
        s.remove(63);
        assert_eq!(s.to_vec(), vec![0, 64, 69]);
    }

    #[test]
    fn full_and_complement() {
        let s = VertexSet::full(5);
        assert_eq!(s.to_vec(), vec![0, 1, 2, 3, 4]);
        let c = VertexSet::from_indices(5, [1, 3]).complement();
        assert_eq!(c.to_vec(), vec![0, 2, 4]);
    }

    #[test]
    fn set_algebra() {
        let a = VertexSet::from_indices(6, [0, 1, 2]);
        let b = VertexSet::from_indices(6, [2, 3]);
        assert_eq!(a.union(&b).to_vec(), vec![0, 1, 2, 3]);
        assert_eq!(a.intersection(&b).to_vec(), vec![2]);
        assert_eq!(a.difference(&b).to_vec(), vec![0, 1]);
        assert_eq!(a.symmetric_difference(&b).to_vec(), vec![0, 1, 3]);
        assert!(a.intersects(&b));
        assert!(VertexSet::from_indices(6, [2]).is_subset(&b));
        assert_eq!(a.min(), Some(0));
        assert_eq!(VertexSet::empty(6).min(), None);
    }

    #[test]
    #[should_panic(expected = "different orders")]
    fn width_mismatch_panics() {
        let a = VertexSet::empty(4);
        let b = VertexSet::empty(5);
        let _ = a.union(&b);
    }

    #[test]
    fn display_format() {
        let s = VertexSet::from_indices(6, [0, 2, 4]);
        assert_eq!(format!("{s}"), "{0,2,4}");
    }
}
