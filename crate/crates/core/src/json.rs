//! JSON forms of the tables and vertex sets. Subsets are ascending integer
//! lists and every rational is a reduced `p/q` string.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::minkowski::{Method, YTable};
use crate::polygon::CoxeterPartition;
use crate::polytope::VPolytope;
use crate::scalar::{parse_scalar, to_canonical_string, Scalar};
use crate::subset::Subset;
use crate::zvalues::{FacetZSpec, ZTable};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZEntry {
    pub set: Vec<usize>,
    pub z: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZTableJson {
    pub n: usize,
    pub up: Vec<usize>,
    pub total: String,
    pub entries: Vec<ZEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct YEntry {
    pub set: Vec<usize>,
    pub y: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct YTableJson {
    pub n: usize,
    pub up: Vec<usize>,
    pub method: Method,
    pub entries: Vec<YEntry>,
}

impl<T: Scalar> From<&ZTable<T>> for ZTableJson {
    fn from(table: &ZTable<T>) -> Self {
        ZTableJson {
            n: table.n(),
            up: table.partition().up_labels(),
            total: to_canonical_string(table.total()),
            entries: table
                .iter()
                .map(|(s, z)| ZEntry {
                    set: s.to_vec(),
                    z: to_canonical_string(z),
                })
                .collect(),
        }
    }
}

impl<T: Scalar> From<&YTable<T>> for YTableJson {
    fn from(table: &YTable<T>) -> Self {
        YTableJson {
            n: table.n(),
            up: table.partition().up_labels(),
            method: table.method(),
            entries: table
                .iter()
                .map(|(s, y)| YEntry {
                    set: s.to_vec(),
                    y: to_canonical_string(y),
                })
                .collect(),
        }
    }
}

impl<T: Scalar> From<&FacetZSpec<T>> for ZTableJson {
    fn from(spec: &FacetZSpec<T>) -> Self {
        let mut entries: Vec<(Subset, &T)> = spec.values().iter().map(|(s, z)| (*s, z)).collect();
        entries.sort_by_key(|(s, _)| (s.len(), s.to_vec()));
        ZTableJson {
            n: spec.partition().n(),
            up: spec.partition().up_labels(),
            total: to_canonical_string(spec.total()),
            entries: entries
                .into_iter()
                .map(|(s, z)| ZEntry {
                    set: s.to_vec(),
                    z: to_canonical_string(z),
                })
                .collect(),
        }
    }
}

fn subset_of(n: usize, set: &[usize]) -> Result<Subset> {
    let mut s = Subset::EMPTY;
    for &i in set {
        if i == 0 || i > n {
            return Err(Error::Parse(format!("element {i} outside 1..={n}")));
        }
        if s.contains(i) {
            return Err(Error::Parse(format!("element {i} repeated")));
        }
        s = s.with(i);
    }
    if s.is_empty() {
        return Err(Error::EmptySubset);
    }
    Ok(s)
}

impl ZTableJson {
    pub fn partition(&self) -> Result<CoxeterPartition> {
        CoxeterPartition::new(self.n, self.up.iter().copied())
    }

    /// Reads the entries as facet values; they must cover exactly the facet sets.
    pub fn to_spec<T: Scalar>(&self) -> Result<FacetZSpec<T>> {
        let partition = self.partition()?;
        let mut values = BTreeMap::new();
        for entry in &self.entries {
            let s = subset_of(self.n, &entry.set)?;
            if values.insert(s, parse_scalar::<T>(&entry.z)?).is_some() {
                return Err(Error::Parse(format!("subset {s} listed twice")));
            }
        }
        FacetZSpec::new(partition, values, parse_scalar(&self.total)?)
    }
}

pub fn ztable_to_json<T: Scalar>(table: &ZTable<T>) -> serde_json::Value {
    serde_json::to_value(ZTableJson::from(table)).expect("plain data serializes")
}

pub fn ytable_to_json<T: Scalar>(table: &YTable<T>) -> serde_json::Value {
    serde_json::to_value(YTableJson::from(table)).expect("plain data serializes")
}

pub fn spec_to_json<T: Scalar>(spec: &FacetZSpec<T>) -> serde_json::Value {
    serde_json::to_value(ZTableJson::from(spec)).expect("plain data serializes")
}

pub fn spec_from_json<T: Scalar>(text: &str) -> Result<FacetZSpec<T>> {
    let parsed: ZTableJson = serde_json::from_str(text)?;
    parsed.to_spec()
}

pub fn point_to_json<T: Scalar>(point: &[T]) -> Vec<String> {
    point.iter().map(to_canonical_string).collect()
}

pub fn vertices_to_json<T: Scalar>(v: &VPolytope<T>) -> Vec<Vec<String>> {
    v.vertices().iter().map(|p| point_to_json(p)).collect()
}
