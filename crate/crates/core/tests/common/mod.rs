#![allow(dead_code)]

use assocmink::scalar::int;
use assocmink::{CoxeterPartition, LabeledPolygon, Rational, Subset};

pub fn partition(n: usize, up: &[usize]) -> CoxeterPartition {
    CoxeterPartition::new(n, up.iter().copied()).unwrap()
}

pub fn polygon(n: usize, up: &[usize]) -> LabeledPolygon {
    LabeledPolygon::new(partition(n, up))
}

pub fn set(xs: &[usize]) -> Subset {
    Subset::from_elements(xs.iter().copied())
}

pub fn q(x: i64) -> Rational {
    int(x)
}

pub fn point(xs: &[i64]) -> Vec<Rational> {
    xs.iter().map(|&x| int(x)).collect()
}

/// `{1}, {2}, {3}, {1,2}, {1,3}, {2,3}, {1,2,3}`
pub fn pentagon_order() -> Vec<Subset> {
    vec![
        set(&[1]),
        set(&[2]),
        set(&[3]),
        set(&[1, 2]),
        set(&[1, 3]),
        set(&[2, 3]),
        set(&[1, 2, 3]),
    ]
}

pub fn polygons(max_n: usize) -> impl Iterator<Item = LabeledPolygon> {
    (2..=max_n).flat_map(CoxeterPartition::all).map(LabeledPolygon::new)
}

pub fn nonempty(n: usize) -> impl Iterator<Item = Subset> {
    Subset::full(n).subsets().filter(|s| !s.is_empty())
}
