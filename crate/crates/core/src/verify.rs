//! Exhaustive self-checks over every realisation up to a bound.

use rayon::prelude::*;
use serde::Serialize;

use crate::decomposition::{
    associated_diagonals, classify_frame, decompose, frame_from_decomposition, reconstruct_component,
    CaseLabel, FrameShape,
};
use crate::error::Result;
use crate::minkowski::{is_zero_coefficient, signed_lengths, y_four_term, y_moebius, y_product};
use crate::polygon::{CoxeterPartition, LabeledPolygon};
use crate::polytope::{catalan, enumerate_vertices, facet_count, facet_rows, hrep_from_spec};
use crate::scalar::sign;
use crate::subset::Subset;
use crate::zvalues::{default_facet_spec, full_z_table, tight_z};
use crate::Rational;

/// Largest `n` for which the vertex based checks run.
pub const POLYTOPE_CHECK_MAX_N: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub instances: usize,
    pub failures: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub max_n: usize,
    pub checks: Vec<CheckOutcome>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.failures == 0)
    }
}

const NAMES: [&str; 13] = [
    "proper_diagonal_count",
    "right_sets_injective",
    "intervals_partition_subset",
    "reconstruction",
    "non_crossing",
    "frame_classification",
    "three_way_equivalence",
    "inverse_pair",
    "zero_pattern",
    "sign_identities",
    "signed_lengths",
    "vertex_and_facet_counts",
    "tightness",
];

#[derive(Default)]
struct Tally {
    instances: [usize; NAMES.len()],
    failures: [usize; NAMES.len()],
    first: [Option<String>; NAMES.len()],
}

impl Tally {
    fn record(&mut self, check: usize, ok: bool, context: impl FnOnce() -> String) {
        self.instances[check] += 1;
        if !ok {
            self.failures[check] += 1;
            if self.first[check].is_none() {
                self.first[check] = Some(context());
            }
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        for k in 0..NAMES.len() {
            self.instances[k] += other.instances[k];
            self.failures[k] += other.failures[k];
            if self.first[k].is_none() {
                self.first[k] = other.first[k].clone();
            }
        }
        self
    }
}

/// Runs every check for `2 ≤ n ≤ max_n`; the vertex based ones stop at
/// [`POLYTOPE_CHECK_MAX_N`].
pub fn verify(max_n: usize) -> Result<VerifyReport> {
    let partitions: Vec<CoxeterPartition> = (2..=max_n).flat_map(CoxeterPartition::all).collect();
    let tallies = partitions
        .par_iter()
        .map(check_partition)
        .collect::<Result<Vec<Tally>>>()?;
    let tally = tallies.into_iter().fold(Tally::default(), Tally::merge);
    Ok(VerifyReport {
        max_n,
        checks: (0..NAMES.len())
            .map(|k| CheckOutcome {
                name: NAMES[k],
                instances: tally.instances[k],
                failures: tally.failures[k],
                first_failure: tally.first[k].clone(),
            })
            .collect(),
    })
}

fn check_partition(partition: &CoxeterPartition) -> Result<Tally> {
    let mut t = Tally::default();
    let q = LabeledPolygon::new(*partition);
    let n = q.n();
    let full = Subset::full(n);
    let at = |i: Subset| format!("{partition} I={i}");

    let proper = q.proper_diagonals();
    t.record(0, proper.len() == (n + 2) * (n - 1) / 2, || partition.to_string());
    let mut rights: Vec<Subset> = proper.iter().map(|d| q.right_set(d)).collect::<Result<_>>()?;
    let proper_subsets = rights.iter().all(|r| !r.is_empty() && *r != full);
    rights.sort();
    rights.dedup();
    t.record(1, proper_subsets && rights.len() == proper.len(), || partition.to_string());

    let spec = default_facet_spec::<Rational>(partition);
    let z = full_z_table(partition, &spec)?;
    let impossible = FrameShape::impossible();

    for i in full.subsets().filter(|s| !s.is_empty()) {
        let dec = decompose(&q, i)?;
        let mut union = Subset::EMPTY;
        let mut disjoint = true;
        for c in &dec.components {
            for part in std::iter::once(c.down.elements).chain(c.ups.iter().map(|u| u.elements)) {
                disjoint &= union.intersection(part).is_empty();
                union = union.union(part);
            }
        }
        t.record(2, disjoint && union == i, || at(i));

        let comps = associated_diagonals(&q, i);
        if i != full {
            let rebuilt = comps.as_ref().ok().and_then(|cs| {
                cs.iter()
                    .map(|c| reconstruct_component(&q, c).ok())
                    .try_fold(Subset::EMPTY, |acc, s| s.map(|s| acc.union(s)))
            });
            t.record(3, rebuilt == Some(i), || at(i));
        }
        if let Ok(cs) = &comps {
            let ds: Vec<_> = cs.iter().flat_map(|c| c.proper_diagonals().copied().collect::<Vec<_>>()).collect();
            let mut crossing = false;
            for (k, d) in ds.iter().enumerate() {
                for e in &ds[k + 1..] {
                    crossing |= q.diagonals_cross(d, e)?;
                }
            }
            t.record(4, !crossing, || at(i));
        }

        if dec.is_nested() {
            let frame = frame_from_decomposition(&q, &dec)?;
            let label = classify_frame(&q, i);
            let ok = match &label {
                Ok(CaseLabel::GroundSet(_)) => i == full,
                Ok(l) => l.shape() == frame.shape() && !impossible.contains(&frame.shape()),
                Err(_) => false,
            };
            t.record(5, ok, || at(i));

            let r: Vec<Subset> = (1..=4).map(|k| q.right_set(frame.delta(k))).collect::<Result<_>>()?;
            let out = |k: usize| i.difference(r[k]).len();
            let ends = Subset::from_elements([frame.gamma_min, frame.gamma_max]).len();
            let s1 = sign::<i64>(out(0));
            t.record(
                9,
                s1 == sign::<i64>(out(1) + 1) && s1 == sign::<i64>(out(2) + 1) && s1 == sign::<i64>(out(3) + ends),
                || at(i),
            );
            let k = signed_lengths(&q, i)?;
            let len = |j: usize| r[j].len() as i64;
            t.record(
                10,
                k.k_gamma_max == len(1) - len(0) && k.k_gamma_min == len(2) - len(0),
                || at(i),
            );
        }

        let m = y_moebius(&z, i);
        let f = y_four_term(&q, &z, i)?;
        let p = y_product::<Rational>(&q, i)?;
        t.record(6, m == f && f == p, || at(i));
        let partial = i
            .subsets()
            .filter(|j| !j.is_empty())
            .map(|j| y_moebius(&z, j))
            .fold(Rational::from_integer(0.into()), |a, b| a + b);
        t.record(7, partial == *z.get(i), || at(i));
        t.record(8, is_zero_coefficient(&q, i)? == (p == Rational::from_integer(0.into())), || at(i));
    }

    if n <= POLYTOPE_CHECK_MAX_N {
        let h = hrep_from_spec(&spec);
        let v = enumerate_vertices(&h)?;
        t.record(
            11,
            v.vertex_count() as u64 == catalan(n) && facet_rows(&h, &v).len() == facet_count(n),
            || partition.to_string(),
        );
        for i in full.subsets().filter(|s| !s.is_empty()) {
            t.record(12, v.min_linear(i) == Some(tight_z(&q, i, &spec)?), || at(i));
        }
    }
    Ok(t)
}
