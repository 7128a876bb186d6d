//! Facet right-hand sides and the tight values `z_I` for every subset.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::decomposition::decompose;
use crate::error::{Error, Result};
use crate::polygon::{CoxeterPartition, LabeledPolygon};
use crate::scalar::{int, Scalar};
use crate::subset::Subset;
use crate::Rational;

/// Where a table of right-hand sides came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    /// `|I|(|I|+1)/2` on every facet set.
    Default,
    /// Any other values.
    Custom,
}

/// Right-hand sides on the facet sets `R_δ` of the proper diagonals, together
/// with the level `z_[n]` of the hyperplane `Σ x_i = z_[n]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetZSpec<T = Rational> {
    partition: CoxeterPartition,
    values: BTreeMap<Subset, T>,
    total: T,
    provenance: Provenance,
}

impl<T: Scalar> FacetZSpec<T> {
    /// A custom specification; its keys must be exactly the facet sets.
    pub fn new(partition: CoxeterPartition, values: BTreeMap<Subset, T>, total: T) -> Result<Self> {
        let facets = facet_sets(&LabeledPolygon::new(partition));
        for key in values.keys() {
            if !facets.contains(key) {
                return Err(Error::UnexpectedFacet(*key));
            }
        }
        if let Some(missing) = facets.iter().find(|f| !values.contains_key(f)) {
            return Err(Error::IncompleteSpec(*missing));
        }
        let provenance = if values.iter().all(|(k, v)| *v == triangular(k.len()))
            && total == triangular(partition.n())
        {
            Provenance::Default
        } else {
            Provenance::Custom
        };
        Ok(FacetZSpec {
            partition,
            values,
            total,
            provenance,
        })
    }

    pub fn partition(&self) -> &CoxeterPartition {
        &self.partition
    }

    pub fn values(&self) -> &BTreeMap<Subset, T> {
        &self.values
    }

    pub fn value(&self, facet: Subset) -> Result<&T> {
        self.values.get(&facet).ok_or(Error::IncompleteSpec(facet))
    }

    pub fn total(&self) -> &T {
        &self.total
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn is_default(&self) -> bool {
        self.provenance == Provenance::Default
    }
}

/// `k(k+1)/2`
pub fn triangular<T: Scalar>(k: usize) -> T {
    let k = k as i64;
    int(k * (k + 1) / 2)
}

/// The right sets of all proper diagonals, in diagonal order.
pub fn facet_sets(polygon: &LabeledPolygon) -> Vec<Subset> {
    polygon
        .proper_diagonals()
        .iter()
        .map(|d| polygon.right_set(d).expect("proper diagonals have right sets"))
        .collect()
}

pub fn default_facet_spec<T: Scalar>(partition: &CoxeterPartition) -> FacetZSpec<T> {
    let polygon = LabeledPolygon::new(*partition);
    let values = facet_sets(&polygon)
        .into_iter()
        .map(|r| (r, triangular(r.len())))
        .collect();
    FacetZSpec {
        partition: *partition,
        values,
        total: triangular(partition.n()),
        provenance: Provenance::Default,
    }
}

/// The tight value `z_I`: over the nested components of `I`,
/// `Σ_i ( Σ_{j ∈ W_i} z̃(R_{δ_{i,j}}) − (|W_i| − 1) z_[n] )`.
pub fn tight_z<T: Scalar>(polygon: &LabeledPolygon, subset: Subset, spec: &FacetZSpec<T>) -> Result<T> {
    let n = polygon.n();
    if subset == Subset::full(n) {
        return Ok(spec.total.clone());
    }
    let decomposition = decompose(polygon, subset)?;
    let mut z = T::zero();
    for component in &decomposition.components {
        let mut w = 0i64;
        for d in component.proper_diagonals() {
            z = z + spec.value(polygon.right_set(d)?)?.clone();
            w += 1;
        }
        z = z - int::<T>(w - 1) * spec.total.clone();
    }
    Ok(z)
}

/// Right-hand sides `z_I` for every subset of `[n]`, indexed by bitmask.
/// The empty set carries `0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZTable<T = Rational> {
    partition: CoxeterPartition,
    entries: Vec<T>,
    provenance: Provenance,
}

impl<T: Scalar> ZTable<T> {
    /// A table with every entry given explicitly, `z_∅` included.
    pub fn from_entries(partition: CoxeterPartition, mut entries: Vec<T>, provenance: Provenance) -> Result<Self> {
        let expected = 1usize << partition.n();
        if entries.len() != expected {
            return Err(Error::DimensionMismatch(entries.len(), expected));
        }
        entries[0] = T::zero();
        Ok(ZTable {
            partition,
            entries,
            provenance,
        })
    }

    pub fn partition(&self) -> &CoxeterPartition {
        &self.partition
    }

    pub fn n(&self) -> usize {
        self.partition.n()
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    /// `z_I`, with `z_∅ = 0`.
    pub fn get(&self, subset: Subset) -> &T {
        &self.entries[subset.index()]
    }

    pub fn total(&self) -> &T {
        self.get(Subset::full(self.n()))
    }

    /// Replaces one entry; the result is always marked custom.
    pub fn with_value(mut self, subset: Subset, value: T) -> Self {
        self.entries[subset.index()] = value;
        self.provenance = Provenance::Custom;
        self
    }

    /// All non-empty subsets with their values in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = (Subset, &T)> + '_ {
        crate::subset::canonical_order(self.n())
            .into_iter()
            .map(move |s| (s, self.get(s)))
    }

    pub fn raw(&self) -> &[T] {
        &self.entries
    }
}

pub fn full_z_table<T: Scalar>(partition: &CoxeterPartition, spec: &FacetZSpec<T>) -> Result<ZTable<T>> {
    let polygon = LabeledPolygon::new(*partition);
    let n = partition.n();
    let entries = (0..1u64 << n)
        .into_par_iter()
        .map(|bits| {
            let s = Subset::from_bits(bits);
            if s.is_empty() {
                Ok(T::zero())
            } else {
                tight_z(&polygon, s, spec)
            }
        })
        .collect::<Result<Vec<T>>>()?;
    Ok(ZTable {
        partition: *partition,
        entries,
        provenance: spec.provenance,
    })
}

/// Number of halvings tried by [`sample_deformation_spec`].
pub const DEFORMATION_ATTEMPTS: usize = 8;

/// Perturbs every default facet value by an independent multiple of
/// `magnitude / 1000` in `[−magnitude, magnitude]`, keeping `z_[n]`, and
/// accepts the result only if its polytope keeps the vertex and facet counts
/// of the associahedron. On failure the magnitude is halved.
pub fn sample_deformation_spec<T: Scalar>(
    partition: &CoxeterPartition,
    seed: u64,
    magnitude: &T,
) -> Result<FacetZSpec<T>> {
    use rand::{Rng, SeedableRng};

    if magnitude.is_negative() {
        return Err(Error::InvalidArgument("magnitude must be non-negative".into()));
    }
    let base = default_facet_spec::<T>(partition);
    if magnitude.is_zero() {
        return Ok(base);
    }
    let n = partition.n();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut scale = magnitude.clone();
    let grain = int::<T>(1000);
    for _ in 0..DEFORMATION_ATTEMPTS {
        let values: BTreeMap<Subset, T> = base
            .values
            .iter()
            .map(|(s, z)| {
                let k: i64 = rng.gen_range(-1000..=1000);
                (*s, z.clone() + scale.clone() * int::<T>(k) / grain.clone())
            })
            .collect();
        let candidate = FacetZSpec::new(*partition, values, base.total.clone())?;
        let h = crate::polytope::hrep_from_spec(&candidate);
        if let Ok(v) = crate::polytope::enumerate_vertices(&h) {
            if v.vertex_count() as u64 == crate::polytope::catalan(n)
                && crate::polytope::facet_rows(&h, &v).len() == crate::polytope::facet_count(n)
            {
                return Ok(candidate);
            }
        }
        scale = scale / int::<T>(2);
    }
    Err(Error::ValidationExhausted {
        attempts: DEFORMATION_ATTEMPTS,
    })
}
