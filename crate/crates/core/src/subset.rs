//! Subsets of the ground set `[n] = {1, ..., n}` packed into a `u64`.

use std::fmt;

/// Largest ground set the library accepts. Tables have `2^n` entries.
pub const MAX_GROUND_SET: usize = 24;

/// A subset of `[n]`; element `i` lives in bit `i - 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Subset(u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub const fn from_bits(bits: u64) -> Self {
        Subset(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The full ground set `[n]`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n < 64);
        Subset((1u64 << n) - 1)
    }

    pub fn singleton(i: usize) -> Self {
        debug_assert!((1..=63).contains(&i));
        Subset(1u64 << (i - 1))
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(elements: I) -> Self {
        elements
            .into_iter()
            .fold(Subset::EMPTY, |acc, i| acc.with(i))
    }

    pub fn with(self, i: usize) -> Self {
        Subset(self.0 | Subset::singleton(i).0)
    }

    pub fn without(self, i: usize) -> Self {
        Subset(self.0 & !Subset::singleton(i).0)
    }

    pub fn contains(self, i: usize) -> bool {
        (1..=63).contains(&i) && self.0 & (1u64 << (i - 1)) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Subset) -> Self {
        Subset(self.0 | other.0)
    }

    pub fn intersection(self, other: Subset) -> Self {
        Subset(self.0 & other.0)
    }

    pub fn difference(self, other: Subset) -> Self {
        Subset(self.0 & !other.0)
    }

    /// `[n] \ self`
    pub fn complement(self, n: usize) -> Self {
        Subset::full(n).difference(self)
    }

    pub fn is_subset_of(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros() as usize)
    }

    /// Elements in increasing order.
    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// All subsets of `self`, including the empty set and `self`.
    pub fn subsets(self) -> Submasks {
        Submasks {
            whole: self.0,
            next: Some(0),
        }
    }

    /// The index of this subset in a `2^n` table.
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

pub struct Elements(u64);

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i + 1)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Elements {}

/// Enumerates submasks in increasing numeric order.
pub struct Submasks {
    whole: u64,
    next: Option<u64>,
}

impl Iterator for Submasks {
    type Item = Subset;

    fn next(&mut self) -> Option<Subset> {
        let current = self.next?;
        self.next = if current == self.whole {
            None
        } else {
            // (current - whole) & whole, computed without underflow.
            Some(current.wrapping_sub(self.whole) & self.whole)
        };
        Some(Subset(current))
    }
}

/// Non-empty subsets of `[n]` ordered by size, then lexicographically
/// (`{1},{2},{3},{1,2},{1,3},{2,3},{1,2,3}` for `n = 3`).
pub fn canonical_order(n: usize) -> Vec<Subset> {
    let mut all: Vec<Subset> = (1..(1u64 << n)).map(Subset).collect();
    all.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.to_vec().cmp(&b.to_vec())));
    all
}
