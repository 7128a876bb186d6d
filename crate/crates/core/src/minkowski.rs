//! Minkowski coefficients `y_I` of `P = Σ y_I Δ_I`.
//!
//! Three independent routes: alternating sums over the boolean lattice, the
//! four-diagonal formula, and the signed-length product for the default table.

use rayon::prelude::*;

use crate::decomposition::{decompose, frame_from_decomposition, FourDiagonalFrame};
use crate::error::{Error, Result};
use crate::polygon::{CoxeterPartition, LabeledPolygon};
use crate::scalar::{int, sign, Scalar};
use crate::subset::Subset;
use crate::zvalues::{Provenance, ZTable};
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Moebius,
    FourTerm,
    Product,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Moebius, Method::FourTerm, Method::Product];

    pub fn name(self) -> &'static str {
        match self {
            Method::Moebius => "moebius",
            Method::FourTerm => "four-term",
            Method::Product => "product",
        }
    }
}

impl std::str::FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "moebius" => Ok(Method::Moebius),
            "four-term" => Ok(Method::FourTerm),
            "product" => Ok(Method::Product),
            other => Err(Error::Parse(format!("unknown method {other:?}"))),
        }
    }
}

/// `Σ_{J ⊆ I} (−1)^{|I \ J|} z_J`
pub fn y_moebius<T: Scalar>(table: &ZTable<T>, subset: Subset) -> T {
    let mut y = T::zero();
    for j in subset.subsets() {
        let term = table.get(j).clone();
        if (subset.len() - j.len()).is_multiple_of(2) {
            y = y + term;
        } else {
            y = y - term;
        }
    }
    y
}

/// `z` of an arbitrary right set, with `z_∅ = 0` and `z_[n]` the total.
fn z_of<T: Scalar>(table: &ZTable<T>, r: Subset) -> T {
    table.get(r).clone()
}

/// `(−1)^{|I \ R_{δ1}|} (z_{R_{δ1}} − z_{R_{δ2}} − z_{R_{δ3}} + z_{R_{δ4}})` for
/// nested `I`, zero otherwise.
pub fn y_four_term<T: Scalar>(polygon: &LabeledPolygon, table: &ZTable<T>, subset: Subset) -> Result<T> {
    let decomposition = decompose(polygon, subset)?;
    if !decomposition.is_nested() {
        return Ok(T::zero());
    }
    let frame = frame_from_decomposition(polygon, &decomposition)?;
    let r: Vec<Subset> = (1..=4)
        .map(|i| polygon.right_set(frame.delta(i)))
        .collect::<Result<_>>()?;
    let value = z_of(table, r[0]) - z_of(table, r[1]) - z_of(table, r[2]) + z_of(table, r[3]);
    Ok(sign::<T>(subset.difference(r[0]).len()) * value)
}

/// The signed boundary lengths `K_γ` and `K_Γ` of a nested subset.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SignedLengths {
    pub k_gamma_min: i64,
    pub k_gamma_max: i64,
}

/// Number of boundary edges from `from` to `to` along the arc that avoids `avoid`.
fn arc_length(polygon: &LabeledPolygon, from: usize, to: usize, avoid: usize) -> Result<i64> {
    let len = polygon.vertex_count();
    let (p, q, x) = (
        polygon.position(from)?,
        polygon.position(to)?,
        polygon.position(avoid)?,
    );
    let forward = (q + len - p) % len;
    let avoid_ahead = (x + len - p) % len;
    let length = if avoid_ahead > 0 && avoid_ahead < forward {
        len - forward
    } else {
        forward
    };
    Ok(length as i64)
}

pub fn signed_lengths(polygon: &LabeledPolygon, subset: Subset) -> Result<SignedLengths> {
    let decomposition = decompose(polygon, subset)?;
    let frame = frame_from_decomposition(polygon, &decomposition)?;
    lengths_of_frame(polygon, &frame)
}

fn lengths_of_frame(polygon: &LabeledPolygon, frame: &FourDiagonalFrame) -> Result<SignedLengths> {
    let p = polygon.partition();
    let signed = |label: usize, magnitude: i64| if p.is_up(label) { magnitude } else { -magnitude };
    let k_max = arc_length(polygon, frame.upper, frame.gamma_max, frame.lower)?;
    let k_min = arc_length(polygon, frame.lower, frame.gamma_min, frame.upper)?;
    Ok(SignedLengths {
        k_gamma_min: signed(frame.gamma_min, k_min),
        k_gamma_max: signed(frame.gamma_max, k_max),
    })
}

/// The signed-length product. Only valid for the default right-hand sides,
/// which it uses implicitly.
pub fn y_product<T: Scalar>(polygon: &LabeledPolygon, subset: Subset) -> Result<T> {
    let decomposition = decompose(polygon, subset)?;
    if !decomposition.is_nested() {
        return Ok(T::zero());
    }
    let frame = frame_from_decomposition(polygon, &decomposition)?;
    let k = lengths_of_frame(polygon, &frame)?;
    let partition = polygon.partition();
    let mut value = k.k_gamma_min * k.k_gamma_max;
    if subset.len() == 1 && subset.is_subset_of(partition.up_set()) {
        value -= partition.n() as i64 + 1;
    }
    let outside = subset.difference(frame.down_elements).len();
    Ok(sign::<T>(outside) * int::<T>(value))
}

/// `y_[n] = (−1)^{|Up|}`
pub fn y_top<T: Scalar>(partition: &CoxeterPartition) -> T {
    sign(partition.up_set().len())
}

/// Whether `y_I` vanishes for the default right-hand sides: exactly when `I`
/// is not nested, plus the single square-free exception `n = 3`, `I = Up = {2}`.
pub fn is_zero_coefficient(polygon: &LabeledPolygon, subset: Subset) -> Result<bool> {
    let decomposition = decompose(polygon, subset)?;
    let p = polygon.partition();
    Ok(decomposition.type_v() > 1
        || (p.n() == 3 && subset == p.up_set() && subset == Subset::singleton(2)))
}

/// Coefficients `y_I` for every subset, indexed by bitmask; `y_∅ = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YTable<T = Rational> {
    partition: CoxeterPartition,
    entries: Vec<T>,
    method: Method,
}

impl<T: Scalar> YTable<T> {
    pub fn partition(&self) -> &CoxeterPartition {
        &self.partition
    }

    pub fn n(&self) -> usize {
        self.partition.n()
    }

    pub fn method(&self) -> Method {
        self.method
    }

    pub fn get(&self, subset: Subset) -> &T {
        &self.entries[subset.index()]
    }

    pub fn with_value(mut self, subset: Subset, value: T) -> Self {
        self.entries[subset.index()] = value;
        self
    }

    pub fn iter(&self) -> impl Iterator<Item = (Subset, &T)> + '_ {
        crate::subset::canonical_order(self.n())
            .into_iter()
            .map(move |s| (s, self.get(s)))
    }

    /// `Σ_{J ⊆ I} y_J`
    pub fn partial_sum(&self, subset: Subset) -> T {
        subset
            .subsets()
            .fold(T::zero(), |acc, j| acc + self.get(j).clone())
    }
}

pub fn full_y_table<T: Scalar>(table: &ZTable<T>, method: Method) -> Result<YTable<T>> {
    if method == Method::Product && table.provenance() != Provenance::Default {
        return Err(Error::ProductNeedsDefaultSpec);
    }
    let polygon = LabeledPolygon::new(*table.partition());
    let n = table.n();
    let entries = (0..1u64 << n)
        .into_par_iter()
        .map(|bits| {
            let s = Subset::from_bits(bits);
            if s.is_empty() {
                return Ok(T::zero());
            }
            match method {
                Method::Moebius => Ok(y_moebius(table, s)),
                Method::FourTerm => y_four_term(&polygon, table, s),
                Method::Product => y_product(&polygon, s),
            }
        })
        .collect::<Result<Vec<T>>>()?;
    Ok(YTable {
        partition: *table.partition(),
        entries,
        method,
    })
}
