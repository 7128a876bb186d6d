mod common;

use assocmink::minkowski::{full_y_table, Method};
use assocmink::polytope::{
    catalan, enumerate_vertices, facet_count, facet_rows, hrep_from_spec, hrep_from_ztable,
    is_redundant_by_removal, minkowski_sum_v,
};
use assocmink::scalar::frac;
use assocmink::zvalues::{default_facet_spec, full_z_table, sample_deformation_spec, tight_z};
use assocmink::*;
use common::*;

#[test]
fn vertex_and_facet_counts() {
    for q in polygons(5) {
        let n = q.n();
        let h = hrep_from_spec(&default_facet_spec::<Rational>(q.partition()));
        let v = enumerate_vertices(&h).unwrap();
        assert_eq!(v.vertex_count() as u64, catalan(n), "{}", q.partition());
        assert_eq!(facet_rows(&h, &v).len(), facet_count(n), "{}", q.partition());
        // the full system has the same vertices
        let z = full_z_table(q.partition(), &default_facet_spec::<Rational>(q.partition())).unwrap();
        assert_eq!(enumerate_vertices(&hrep_from_ztable(&z, false)).unwrap(), v);
    }
}

#[test]
fn facets_are_exactly_the_irredundant_rows() {
    for q in polygons(4) {
        let z = full_z_table(q.partition(), &default_facet_spec::<Rational>(q.partition())).unwrap();
        let h = hrep_from_ztable(&z, false);
        let v = enumerate_vertices(&h).unwrap();
        let facets = facet_rows(&h, &v);
        let spec = default_facet_spec::<Rational>(q.partition());
        for (s, _) in h.rows() {
            let irredundant = !is_redundant_by_removal(&h, *s).unwrap();
            assert_eq!(irredundant, facets.contains(s), "{} {s}", q.partition());
            assert_eq!(irredundant, spec.values().contains_key(s), "{} {s}", q.partition());
        }
    }
}

#[test]
fn tight_values_are_attained() {
    for q in polygons(5) {
        let spec = default_facet_spec::<Rational>(q.partition());
        let v = enumerate_vertices(&hrep_from_spec(&spec)).unwrap();
        for i in nonempty(q.n()) {
            assert_eq!(v.min_linear(i).unwrap(), tight_z(&q, i, &spec).unwrap(), "{} {i}", q.partition());
        }
    }
}

#[test]
fn tight_values_are_attained_after_deformation() {
    for q in polygons(5) {
        for seed in 0..3 {
            let spec = sample_deformation_spec::<Rational>(q.partition(), seed, &frac(1, 10)).unwrap();
            let v = enumerate_vertices(&hrep_from_spec(&spec)).unwrap();
            for i in nonempty(q.n()) {
                assert_eq!(v.min_linear(i).unwrap(), tight_z(&q, i, &spec).unwrap());
            }
        }
    }
}

#[test]
fn deformations_keep_the_combinatorics() {
    let p = partition(3, &[]);
    let spec = sample_deformation_spec::<Rational>(&p, 1, &frac(1, 10)).unwrap();
    let h = hrep_from_spec(&spec);
    let v = enumerate_vertices(&h).unwrap();
    assert_eq!((v.vertex_count(), facet_rows(&h, &v).len()), (5, 5));

    let p = partition(4, &[2]);
    let spec = sample_deformation_spec::<Rational>(&p, 7, &frac(1, 10)).unwrap();
    let h = hrep_from_spec(&spec);
    let v = enumerate_vertices(&h).unwrap();
    assert_eq!((v.vertex_count(), facet_rows(&h, &v).len()), (14, 9));
}

#[test]
fn four_term_formula_survives_deformation() {
    for q in polygons(5) {
        for seed in 0..20 {
            let spec = sample_deformation_spec::<Rational>(q.partition(), seed, &frac(1, 10)).unwrap();
            let z = full_z_table(q.partition(), &spec).unwrap();
            for i in nonempty(q.n()) {
                assert_eq!(y_moebius(&z, i), y_four_term(&q, &z, i).unwrap(), "{} seed {seed} {i}", q.partition());
            }
        }
    }
}

#[test]
fn sums_of_tables_are_sums_of_polytopes() {
    let pool: Vec<LabeledPolygon> = polygons(4).filter(|q| q.n() >= 3).collect();
    for (k, q) in pool.iter().cycle().take(10).enumerate() {
        let spec_a = default_facet_spec::<Rational>(q.partition());
        let spec_b = sample_deformation_spec::<Rational>(q.partition(), k as u64, &frac(1, 5)).unwrap();
        let za = full_z_table(q.partition(), &spec_a).unwrap();
        let zb = full_z_table(q.partition(), &spec_b).unwrap();
        let entries: Vec<Rational> = za.raw().iter().zip(zb.raw()).map(|(a, b)| a + b).collect();
        let zsum = ZTable::from_entries(*q.partition(), entries, Provenance::Custom).unwrap();
        let lhs = enumerate_vertices(&hrep_from_ztable(&zsum, false)).unwrap();
        let va = enumerate_vertices(&hrep_from_ztable(&za, false)).unwrap();
        let vb = enumerate_vertices(&hrep_from_ztable(&zb, false)).unwrap();
        assert_eq!(lhs, minkowski_sum_v(&va, &vb).unwrap(), "{}", q.partition());
    }
}

#[test]
fn decompositions_hold_for_every_small_realisation() {
    for q in polygons(4) {
        let z = full_z_table(q.partition(), &default_facet_spec::<Rational>(q.partition())).unwrap();
        let y = full_y_table(&z, Method::FourTerm).unwrap();
        assert!(decomposition_check(&z, &y).unwrap(), "{}", q.partition());
    }
}
