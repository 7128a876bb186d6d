//! The c-labeled `(n+2)`-gon, its diagonals and their right-hand label sets.
//!
//! A Coxeter element is encoded by the split `[n] = Do ⊔ Up` with `1, n ∈ Do`.
//! The polygon carries the labels `0, ..., n+1`: the boundary path from `0` to
//! `n+1` through the down labels runs counter-clockwise in increasing order,
//! and the up labels fill the other path, increasing clockwise. We store the
//! counter-clockwise cycle starting at label `0`.

use std::fmt;

use crate::error::{Error, Result};
use crate::subset::{Subset, MAX_GROUND_SET};

/// The down/up split of `[n]` that selects one realisation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CoxeterPartition {
    n: usize,
    up: Subset,
}

impl CoxeterPartition {
    /// `up` must avoid `1` and `n`; everything else goes to the down set.
    pub fn new(n: usize, up: impl IntoIterator<Item = usize>) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidPartition(format!(
                "ground set size must be at least 2, got {n}"
            )));
        }
        if n > MAX_GROUND_SET {
            return Err(Error::InvalidPartition(format!(
                "ground set size {n} exceeds the supported maximum {MAX_GROUND_SET}"
            )));
        }
        let mut set = Subset::EMPTY;
        for u in up {
            if u <= 1 || u >= n {
                return Err(Error::InvalidPartition(format!(
                    "up label {u} must lie strictly between 1 and {n}"
                )));
            }
            set = set.with(u);
        }
        Ok(CoxeterPartition { n, up: set })
    }

    pub fn from_up_set(n: usize, up: Subset) -> Result<Self> {
        Self::new(n, up.iter())
    }

    /// All `2^(n-2)` partitions of `[n]`.
    pub fn all(n: usize) -> Vec<CoxeterPartition> {
        let inner = n.saturating_sub(2);
        (0..(1u64 << inner))
            .map(|bits| CoxeterPartition {
                n,
                up: Subset::from_bits(bits << 1),
            })
            .collect()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn up_set(&self) -> Subset {
        self.up
    }

    pub fn down_set(&self) -> Subset {
        self.up.complement(self.n)
    }

    pub fn ground(&self) -> Subset {
        Subset::full(self.n)
    }

    pub fn is_up(&self, label: usize) -> bool {
        self.up.contains(label)
    }

    /// Membership in `Do ∪ {0, n+1}`.
    pub fn is_extended_down(&self, label: usize) -> bool {
        label == 0 || label == self.n + 1 || (label <= self.n && !self.up.contains(label))
    }

    /// `d_1 < ... < d_ℓ`
    pub fn down_labels(&self) -> Vec<usize> {
        self.down_set().to_vec()
    }

    /// `u_1 < ... < u_m`
    pub fn up_labels(&self) -> Vec<usize> {
        self.up.to_vec()
    }
}

impl fmt::Display for CoxeterPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} Up={}", self.n, self.up)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DiagonalKind {
    Proper,
    /// Joins two vertices adjacent on the boundary.
    Boundary,
    /// Both endpoints coincide.
    Degenerate,
}

/// An unordered pair of polygon labels, stored with `low <= high`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagonal {
    low: usize,
    high: usize,
    kind: DiagonalKind,
}

impl Diagonal {
    pub fn low(&self) -> usize {
        self.low
    }

    pub fn high(&self) -> usize {
        self.high
    }

    pub fn endpoints(&self) -> (usize, usize) {
        (self.low, self.high)
    }

    pub fn kind(&self) -> DiagonalKind {
        self.kind
    }

    pub fn is_proper(&self) -> bool {
        self.kind == DiagonalKind::Proper
    }
}

impl fmt::Display for Diagonal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.low, self.high)
    }
}

/// The labelled polygon `Q_c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledPolygon {
    partition: CoxeterPartition,
    cycle: Vec<usize>,
    position: Vec<usize>,
}

impl LabeledPolygon {
    /// Builds the counter-clockwise cycle `0, d_1, ..., d_ℓ, n+1, u_m, ..., u_1`.
    pub fn new(partition: CoxeterPartition) -> Self {
        let n = partition.n();
        let mut cycle = Vec::with_capacity(n + 2);
        cycle.push(0);
        cycle.extend(partition.down_labels());
        cycle.push(n + 1);
        cycle.extend(partition.up_labels().into_iter().rev());
        let mut position = vec![0; n + 2];
        for (i, &label) in cycle.iter().enumerate() {
            position[label] = i;
        }
        LabeledPolygon {
            partition,
            cycle,
            position,
        }
    }

    pub fn partition(&self) -> &CoxeterPartition {
        &self.partition
    }

    pub fn n(&self) -> usize {
        self.partition.n()
    }

    /// Labels in counter-clockwise order starting from `0`.
    pub fn cycle(&self) -> &[usize] {
        &self.cycle
    }

    pub fn vertex_count(&self) -> usize {
        self.cycle.len()
    }

    pub fn position(&self, label: usize) -> Result<usize> {
        self.position
            .get(label)
            .copied()
            .ok_or(Error::LabelOutOfRange {
                label,
                max: self.n() + 1,
            })
    }

    fn adjacent(&self, x: usize, y: usize) -> bool {
        let k = self.vertex_count();
        let (px, py) = (self.position[x], self.position[y]);
        (px + 1) % k == py || (py + 1) % k == px
    }

    /// Classifies the label pair `{x, y}`.
    pub fn diagonal(&self, x: usize, y: usize) -> Result<Diagonal> {
        self.position(x)?;
        self.position(y)?;
        let (low, high) = if x <= y { (x, y) } else { (y, x) };
        let kind = if low == high {
            DiagonalKind::Degenerate
        } else if self.adjacent(low, high) {
            DiagonalKind::Boundary
        } else {
            DiagonalKind::Proper
        };
        Ok(Diagonal { low, high, kind })
    }

    /// Every unordered pair of distinct labels, in lexicographic order.
    pub fn all_diagonals(&self) -> Vec<Diagonal> {
        let k = self.vertex_count();
        let mut out = Vec::with_capacity(k * (k - 1) / 2);
        for x in 0..k {
            for y in x + 1..k {
                out.push(self.diagonal(x, y).expect("labels in range"));
            }
        }
        out
    }

    pub fn proper_diagonals(&self) -> Vec<Diagonal> {
        self.all_diagonals()
            .into_iter()
            .filter(Diagonal::is_proper)
            .collect()
    }

    /// Labels met strictly between `from` and `to` walking counter-clockwise.
    fn ccw_between(&self, from: usize, to: usize) -> Vec<usize> {
        let k = self.vertex_count();
        let end = self.position[to];
        let mut i = (self.position[from] + 1) % k;
        let mut out = Vec::new();
        while i != end {
            out.push(self.cycle[i]);
            i = (i + 1) % k;
        }
        out
    }

    /// The set `R_δ`.
    ///
    /// For a proper diagonal oriented from its smaller to its larger label this
    /// is the set of labels strictly to its right, with `0` replaced by the
    /// smaller and `n+1` by the larger up endpoint. Every other pair maps to
    /// `[n]` or `∅`: `{0, n+1}` with an empty up set and any pair touching an
    /// up label give `[n]`, pairs inside `Do ∪ {0, n+1}` give `∅`.
    pub fn right_set(&self, diagonal: &Diagonal) -> Result<Subset> {
        let n = self.n();
        let (x, y) = diagonal.endpoints();
        self.position(y)?;
        let p = &self.partition;
        if !diagonal.is_proper() {
            let full = Subset::full(n);
            if x == 0 && y == n + 1 && p.up_set().is_empty() {
                return Ok(full);
            }
            return Ok(if p.is_extended_down(x) && p.is_extended_down(y) {
                Subset::EMPTY
            } else {
                full
            });
        }
        let up_ends: Vec<usize> = [x, y].into_iter().filter(|&l| p.is_up(l)).collect();
        let mut set = Subset::EMPTY;
        for label in self.ccw_between(x, y) {
            let mapped = if label == 0 {
                up_ends.first().copied()
            } else if label == n + 1 {
                up_ends.last().copied()
            } else {
                Some(label)
            };
            match mapped {
                Some(l) => set = set.with(l),
                None => {
                    return Err(Error::Internal(format!(
                        "boundary label {label} right of {diagonal} has no up endpoint to replace it"
                    )))
                }
            }
        }
        Ok(set)
    }

    /// Whether two proper diagonals cross in the interior of the polygon.
    pub fn diagonals_cross(&self, first: &Diagonal, second: &Diagonal) -> Result<bool> {
        for d in [first, second] {
            if !d.is_proper() {
                return Err(Error::NotProper(d.low, d.high));
            }
        }
        let (a, b) = {
            let (p, q) = (self.position[first.low], self.position[first.high]);
            (p.min(q), p.max(q))
        };
        let inside = |label: usize| {
            let q = self.position[label];
            a < q && q < b
        };
        let shares = [second.low, second.high]
            .iter()
            .any(|&l| l == first.low || l == first.high);
        Ok(!shares && inside(second.low) != inside(second.high))
    }
}
