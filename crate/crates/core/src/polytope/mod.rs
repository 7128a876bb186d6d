//! Exact H- and V-representations at desk scale.

pub mod linalg;
pub mod lp;

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::minkowski::{full_y_table, Method, YTable};
use crate::polygon::{CoxeterPartition, LabeledPolygon};
use crate::scalar::{int, Scalar};
use crate::subset::Subset;
use crate::zvalues::{default_facet_spec, facet_sets, full_z_table, FacetZSpec, ZTable};
use crate::Rational;

/// Largest ground set accepted by [`enumerate_vertices`].
pub const MAX_ENUMERATION_N: usize = 8;

/// `{x : Σ_{i∈I} x_i ≥ z_I for each row, Σ_i x_i = level}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HPolytope<T = Rational> {
    n: usize,
    level: T,
    rows: Vec<(Subset, T)>,
}

impl<T: Scalar> HPolytope<T> {
    /// Rows must be non-empty proper subsets of `[n]`; repeated subsets keep
    /// their last value.
    pub fn new(n: usize, level: T, rows: impl IntoIterator<Item = (Subset, T)>) -> Result<Self> {
        let full = Subset::full(n);
        let mut dedup: BTreeMap<Subset, T> = BTreeMap::new();
        for (s, z) in rows {
            if s.is_empty() || s == full || !s.is_subset_of(full) {
                return Err(Error::SubsetOutOfRange(s));
            }
            dedup.insert(s, z);
        }
        Ok(HPolytope {
            n,
            level,
            rows: dedup.into_iter().collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn level(&self) -> &T {
        &self.level
    }

    pub fn rows(&self) -> &[(Subset, T)] {
        &self.rows
    }

    pub fn without_row(&self, subset: Subset) -> Self {
        HPolytope {
            n: self.n,
            level: self.level.clone(),
            rows: self.rows.iter().filter(|(s, _)| *s != subset).cloned().collect(),
        }
    }

    fn row_vector(&self, s: Subset) -> Vec<T> {
        (1..=self.n)
            .map(|i| if s.contains(i) { T::one() } else { T::zero() })
            .collect()
    }

    pub fn contains(&self, x: &[T]) -> bool {
        x.iter().fold(T::zero(), |a, v| a + v.clone()) == self.level
            && self.rows.iter().all(|(s, z)| linear_sum(x, *s) >= *z)
    }
}

/// `Σ_{i∈I} x_i`
pub fn linear_sum<T: Scalar>(x: &[T], subset: Subset) -> T {
    subset.iter().fold(T::zero(), |a, i| a + x[i - 1].clone())
}

/// The inequality system of a table: every proper non-empty subset, or only
/// the facet sets of the polygon.
pub fn hrep_from_ztable<T: Scalar>(table: &ZTable<T>, only_facets: bool) -> HPolytope<T> {
    let n = table.n();
    let rows: Vec<(Subset, T)> = if only_facets {
        let polygon = LabeledPolygon::new(*table.partition());
        facet_sets(&polygon)
            .into_iter()
            .map(|r| (r, table.get(r).clone()))
            .collect()
    } else {
        crate::subset::canonical_order(n)
            .into_iter()
            .filter(|s| *s != Subset::full(n))
            .map(|s| (s, table.get(s).clone()))
            .collect()
    };
    HPolytope::new(n, table.total().clone(), rows).expect("table rows are proper subsets")
}

/// The inequality system of a facet specification.
pub fn hrep_from_spec<T: Scalar>(spec: &FacetZSpec<T>) -> HPolytope<T> {
    let n = spec.partition().n();
    HPolytope::new(
        n,
        spec.total().clone(),
        spec.values().iter().map(|(s, z)| (*s, z.clone())),
    )
    .expect("facet sets are proper subsets")
}

/// A finite set of points, each an extreme point of their hull.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VPolytope<T = Rational> {
    n: usize,
    vertices: BTreeSet<Vec<T>>,
}

impl<T: Scalar> VPolytope<T> {
    /// The hull of arbitrary points.
    pub fn from_points(n: usize, points: impl IntoIterator<Item = Vec<T>>) -> Result<Self> {
        let points: Vec<Vec<T>> = points.into_iter().collect();
        if let Some(p) = points.iter().find(|p| p.len() != n) {
            return Err(Error::DimensionMismatch(p.len(), n));
        }
        Ok(VPolytope {
            n,
            vertices: extreme_points(&points).into_iter().collect(),
        })
    }

    /// The single point at the origin.
    pub fn origin(n: usize) -> Self {
        VPolytope {
            n,
            vertices: BTreeSet::from([vec![T::zero(); n]]),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Vertices in lexicographic order.
    pub fn vertices(&self) -> &BTreeSet<Vec<T>> {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// `min_x Σ_{i∈I} x_i` over the vertices.
    pub fn min_linear(&self, subset: Subset) -> Option<T> {
        self.vertices.iter().map(|v| linear_sum(v, subset)).min()
    }

    pub fn dimension(&self) -> usize {
        let pts: Vec<&Vec<T>> = self.vertices.iter().collect();
        linalg::affine_dimension(&pts)
    }
}

/// All vertices of `P`, by solving every square system made of `n − 1` rows
/// and the equality.
pub fn enumerate_vertices<T: Scalar>(h: &HPolytope<T>) -> Result<VPolytope<T>> {
    let n = h.n;
    if n > MAX_ENUMERATION_N {
        return Err(Error::TooLarge {
            n,
            max: MAX_ENUMERATION_N,
        });
    }
    let ones = vec![T::one(); n];
    let vectors: Vec<Vec<T>> = h.rows.iter().map(|(s, _)| h.row_vector(*s)).collect();
    let combos: Vec<Vec<usize>> = (0..h.rows.len()).combinations(n.saturating_sub(1)).collect();
    let found: BTreeSet<Vec<T>> = combos
        .par_iter()
        .filter_map(|combo| {
            let mut a: Vec<Vec<T>> = combo.iter().map(|&k| vectors[k].clone()).collect();
            let mut b: Vec<T> = combo.iter().map(|&k| h.rows[k].1.clone()).collect();
            a.push(ones.clone());
            b.push(h.level.clone());
            let x = linalg::solve_square(&a, &b)?;
            h.rows
                .iter()
                .all(|(s, z)| linear_sum(&x, *s) >= *z)
                .then_some(x)
        })
        .collect();
    if found.is_empty() {
        let mut system = vectors.clone();
        system.push(ones);
        if linalg::rank(&system) < n && is_feasible(h) {
            return Err(Error::Unbounded);
        }
        return Err(Error::EmptyPolytope);
    }
    if has_recession_direction(h, &vectors) {
        return Err(Error::Unbounded);
    }
    Ok(VPolytope { n, vertices: found })
}

fn is_feasible<T: Scalar>(h: &HPolytope<T>) -> bool {
    // x = x⁺ − x⁻, slacks s: A x − s = z, Σ x = level
    let n = h.n;
    let k = h.rows.len();
    let mut m = Vec::with_capacity(k + 1);
    let mut b = Vec::with_capacity(k + 1);
    for (idx, (s, z)) in h.rows.iter().enumerate() {
        let mut row = Vec::with_capacity(2 * n + k);
        for i in 1..=n {
            row.push(if s.contains(i) { T::one() } else { T::zero() });
        }
        for i in 1..=n {
            row.push(if s.contains(i) { -T::one() } else { T::zero() });
        }
        row.extend((0..k).map(|j| if j == idx { -T::one() } else { T::zero() }));
        m.push(row);
        b.push(z.clone());
    }
    let mut eq: Vec<T> = vec![T::one(); n];
    eq.extend(vec![-T::one(); n]);
    eq.extend(vec![T::zero(); k]);
    m.push(eq);
    b.push(h.level.clone());
    lp::feasible_point(&m, &b).is_some()
}

/// Whether some `d ≠ 0` with `Σ d = 0` keeps every row non-decreasing.
fn has_recession_direction<T: Scalar>(h: &HPolytope<T>, vectors: &[Vec<T>]) -> bool {
    let n = h.n;
    let k = vectors.len();
    let mut m = Vec::with_capacity(k + 2);
    let mut b = Vec::with_capacity(k + 2);
    for (idx, v) in vectors.iter().enumerate() {
        let mut row: Vec<T> = v.clone();
        row.extend(v.iter().map(|x| -x.clone()));
        row.extend((0..k).map(|j| if j == idx { -T::one() } else { T::zero() }));
        m.push(row);
        b.push(T::zero());
    }
    let mut eq: Vec<T> = vec![T::one(); n];
    eq.extend(vec![-T::one(); n]);
    eq.extend(vec![T::zero(); k]);
    m.push(eq);
    b.push(T::zero());
    let mut norm: Vec<T> = vec![T::zero(); 2 * n];
    norm.extend(vec![T::one(); k]);
    m.push(norm);
    b.push(T::one());
    lp::feasible_point(&m, &b).is_some()
}

/// Rows whose tight vertices span a face of codimension one, grouped so that
/// rows defining the same facet count once.
pub fn facet_rows<T: Scalar>(h: &HPolytope<T>, v: &VPolytope<T>) -> Vec<Subset> {
    let dim = v.dimension();
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut facets = Vec::new();
    let vertices: Vec<&Vec<T>> = v.vertices.iter().collect();
    for (s, z) in &h.rows {
        let tight: Vec<usize> = (0..vertices.len())
            .filter(|&i| linear_sum(vertices[i], *s) == *z)
            .collect();
        if tight.is_empty() || tight.len() == vertices.len() {
            continue;
        }
        let pts: Vec<&Vec<T>> = tight.iter().map(|&i| vertices[i]).collect();
        if dim >= 1 && linalg::affine_dimension(&pts) == dim - 1 && seen.insert(tight) {
            facets.push(*s);
        }
    }
    facets
}

/// Whether dropping the row leaves the vertex set unchanged.
pub fn is_redundant_by_removal<T: Scalar>(h: &HPolytope<T>, subset: Subset) -> Result<bool> {
    let full = enumerate_vertices(h)?;
    match enumerate_vertices(&h.without_row(subset)) {
        Ok(reduced) => Ok(reduced == full),
        Err(Error::Unbounded) => Ok(false),
        Err(e) => Err(e),
    }
}

/// `coefficient · Δ_J = conv{ coefficient · e_j : j ∈ J }`.
pub fn dilated_face<T: Scalar>(coefficient: &T, subset: Subset, n: usize) -> Result<VPolytope<T>> {
    if coefficient.is_negative() {
        return Err(Error::NegativeCoefficient);
    }
    if subset.is_empty() {
        return Err(Error::EmptySubset);
    }
    if !subset.is_subset_of(Subset::full(n)) {
        return Err(Error::SubsetOutOfRange(subset));
    }
    let vertices = subset
        .iter()
        .map(|j| {
            (1..=n)
                .map(|i| if i == j { coefficient.clone() } else { T::zero() })
                .collect()
        })
        .collect();
    Ok(VPolytope { n, vertices })
}

pub fn minkowski_sum_v<T: Scalar>(p: &VPolytope<T>, q: &VPolytope<T>) -> Result<VPolytope<T>> {
    if p.n != q.n {
        return Err(Error::DimensionMismatch(p.n, q.n));
    }
    let sums = p.vertices.iter().flat_map(|a| {
        q.vertices
            .iter()
            .map(move |b| a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect::<Vec<T>>())
    });
    VPolytope::from_points(p.n, sums)
}

/// Random directions tried before falling back to linear programming.
const PROBE_DIRECTIONS: usize = 96;

/// The points that are not convex combinations of the others.
///
/// A point that is the unique maximiser of some linear functional is extreme;
/// random functionals settle most points this way. Each remaining point is
/// tested for membership in the hull of the certified points, then of all the
/// other points.
pub fn extreme_points<T: Scalar>(points: &[Vec<T>]) -> Vec<Vec<T>> {
    use rand::{Rng, SeedableRng};

    let unique: Vec<Vec<T>> = points.iter().cloned().collect::<BTreeSet<_>>().into_iter().collect();
    if unique.len() <= 2 {
        return unique;
    }
    let dim = unique[0].len();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed);
    let directions: Vec<Vec<T>> = (0..PROBE_DIRECTIONS)
        .map(|_| (0..dim).map(|_| int::<T>(rng.gen_range(-1000..=1000))).collect())
        .collect();
    let certified: BTreeSet<usize> = directions
        .par_iter()
        .filter_map(|c| {
            let values: Vec<T> = unique
                .iter()
                .map(|p| p.iter().zip(c).fold(T::zero(), |a, (x, y)| a + x.clone() * y.clone()))
                .collect();
            let best = values.iter().max()?;
            let mut winners = values.iter().enumerate().filter(|(_, v)| *v == best);
            let (first, _) = winners.next()?;
            winners.next().is_none().then_some(first)
        })
        .collect();
    let keep: Vec<bool> = (0..unique.len())
        .into_par_iter()
        .map(|k| {
            if certified.contains(&k) {
                return true;
            }
            let known: Vec<&Vec<T>> = certified.iter().map(|&i| &unique[i]).collect();
            if in_hull(&known, &unique[k]) {
                return false;
            }
            let others: Vec<&Vec<T>> = (0..unique.len()).filter(|&i| i != k).map(|i| &unique[i]).collect();
            !in_hull(&others, &unique[k])
        })
        .collect();
    unique
        .into_iter()
        .zip(keep)
        .filter_map(|(p, k)| k.then_some(p))
        .collect()
}

fn in_hull<T: Scalar>(others: &[&Vec<T>], target: &[T]) -> bool {
    if others.is_empty() {
        return false;
    }
    let dim = target.len();
    let mut m: Vec<Vec<T>> = (0..dim)
        .map(|c| others.iter().map(|p| p[c].clone()).collect())
        .collect();
    m.push(vec![T::one(); others.len()]);
    let mut b: Vec<T> = target.to_vec();
    b.push(T::one());
    lp::feasible_point(&m, &b).is_some()
}

/// Sum of `|y_I| Δ_I` over the subsets whose coefficient has the given sign.
fn signed_face_sum<T: Scalar>(y: &YTable<T>, positive: bool) -> Result<VPolytope<T>> {
    let n = y.n();
    let mut acc = VPolytope::origin(n);
    for (s, value) in y.iter() {
        let take = if positive {
            value.is_positive()
        } else {
            value.is_negative()
        };
        if take {
            acc = minkowski_sum_v(&acc, &dilated_face(&value.abs(), s, n)?)?;
        }
    }
    Ok(acc)
}

/// Both sides of `P + Σ_{y_I<0} |y_I| Δ_I = Σ_{y_I>0} y_I Δ_I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionSides<T = Rational> {
    pub left: VPolytope<T>,
    pub right: VPolytope<T>,
}

impl<T: Scalar> DecompositionSides<T> {
    pub fn agree(&self) -> bool {
        self.left == self.right
    }
}

pub fn decomposition_sides<T: Scalar>(table: &ZTable<T>, y: &YTable<T>) -> Result<DecompositionSides<T>> {
    let p = enumerate_vertices(&hrep_from_ztable(table, false))?;
    let left = minkowski_sum_v(&p, &signed_face_sum(y, false)?)?;
    let right = signed_face_sum(y, true)?;
    Ok(DecompositionSides { left, right })
}

/// Whether the coefficients sum to the table on every subset and the two
/// sides of the signed decomposition have the same vertices.
pub fn decomposition_check<T: Scalar>(table: &ZTable<T>, y: &YTable<T>) -> Result<bool> {
    if table.n() != y.n() {
        return Err(Error::DimensionMismatch(table.n(), y.n()));
    }
    let sums_match = crate::subset::canonical_order(table.n())
        .into_iter()
        .all(|s| y.partial_sum(s) == *table.get(s));
    if !sums_match {
        return Ok(false);
    }
    Ok(decomposition_sides(table, y)?.agree())
}

/// The cyclohedron instance at `n = 4`, `Up = {2}` where the signed
/// decomposition fails.
#[derive(Clone, Debug)]
pub struct CyclohedronReport<T = Rational> {
    pub z: ZTable<T>,
    pub y: YTable<T>,
    pub sides: DecompositionSides<T>,
}

impl<T: Scalar> CyclohedronReport<T> {
    pub fn left_count(&self) -> usize {
        self.sides.left.vertex_count()
    }

    pub fn right_count(&self) -> usize {
        self.sides.right.vertex_count()
    }
}

pub fn cyclohedron_counterexample<T: Scalar>() -> Result<CyclohedronReport<T>> {
    let partition = CoxeterPartition::new(4, [2])?;
    let tight = full_z_table(&partition, &default_facet_spec::<T>(&partition))?;
    let z = tight
        .with_value(Subset::from_elements([1, 4]), int(5))
        .with_value(Subset::from_elements([2, 3]), int(5));
    let y = full_y_table(&z, Method::Moebius)?;
    let sides = decomposition_sides(&z, &y)?;
    Ok(CyclohedronReport { z, y, sides })
}

/// `C(2n, n) / (n + 1)`
pub fn catalan(n: usize) -> u64 {
    (0..n as u64).fold(1u64, |c, k| c * 2 * (2 * k + 1) / (k + 2))
}

/// Number of facets of the `(n−1)`-dimensional associahedron.
pub fn facet_count(n: usize) -> usize {
    (n + 2) * (n - 1) / 2
}

/// Vertices of the polytope cut out by the default facet values.
pub fn default_vertices<T: Scalar>(partition: &CoxeterPartition) -> Result<VPolytope<T>> {
    enumerate_vertices(&hrep_from_spec(&default_facet_spec::<T>(partition)))
}
