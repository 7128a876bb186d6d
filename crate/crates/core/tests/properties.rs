use assocmink::decomposition::reconstruct_component;
use assocmink::polytope::{extreme_points, lp::feasible_point};
use assocmink::scalar::{frac, int, parse_scalar, to_canonical_string};
use assocmink::zvalues::{default_facet_spec, full_z_table, tight_z};
use assocmink::*;
use proptest::prelude::*;

fn realisation(max_n: usize) -> impl Strategy<Value = (CoxeterPartition, Subset)> {
    (2..=max_n).prop_flat_map(|n| {
        let inner = if n > 2 { (1u64 << (n - 2)) - 1 } else { 0 };
        (Just(n), 0..=inner, 1..(1u64 << n))
    })
    .prop_map(|(n, up_bits, subset_bits)| {
        let up = Subset::from_bits(up_bits << 1);
        (CoxeterPartition::from_up_set(n, up).unwrap(), Subset::from_bits(subset_bits))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn decomposition_rebuilds_large_subsets((p, i) in realisation(14)) {
        let q = LabeledPolygon::new(p);
        let comps = associated_diagonals(&q, i).unwrap();
        let covered = comps.iter().fold(Subset::EMPTY, |acc, c| acc.union(c.elements()));
        prop_assert_eq!(covered, i);
        if i != Subset::full(q.n()) {
            let rebuilt = comps
                .iter()
                .map(|c| reconstruct_component(&q, c).unwrap())
                .fold(Subset::EMPTY, Subset::union);
            prop_assert_eq!(rebuilt, i);
        }
    }

    #[test]
    fn four_term_and_product_agree_beyond_exhaustive_range((p, i) in realisation(12)) {
        let q = LabeledPolygon::new(p);
        let spec = default_facet_spec::<Rational>(&p);
        // only the z values below I are needed for the alternating sum
        let mut entries = vec![Rational::from_integer(0.into()); 1 << p.n()];
        for j in i.subsets().chain([Subset::full(p.n())]) {
            if !j.is_empty() {
                entries[j.index()] = tight_z(&q, j, &spec).unwrap();
            }
        }
        for d in q.proper_diagonals() {
            let r = q.right_set(&d).unwrap();
            entries[r.index()] = tight_z(&q, r, &spec).unwrap();
        }
        let z = ZTable::from_entries(p, entries, Provenance::Default).unwrap();
        let product = y_product::<Rational>(&q, i).unwrap();
        prop_assert_eq!(y_four_term(&q, &z, i).unwrap(), product.clone());
        if i.len() <= 10 {
            prop_assert_eq!(y_moebius(&z, i), product);
        }
    }

    #[test]
    fn frames_never_take_an_impossible_shape((p, i) in realisation(12)) {
        let q = LabeledPolygon::new(p);
        if decompose(&q, i).unwrap().is_nested() {
            let label = classify_frame(&q, i).unwrap();
            prop_assert_eq!(label.shape(), four_diagonal_frame(&q, i).unwrap().shape());
        } else {
            prop_assert!(four_diagonal_frame(&q, i).is_err());
        }
    }

    #[test]
    fn canonical_strings_round_trip(k in -10_000i64..10_000, d in 1i64..500) {
        let x: Rational = frac(k, d);
        let s = to_canonical_string(&x);
        prop_assert!(s.contains('/'));
        prop_assert_eq!(parse_scalar::<Rational>(&s).unwrap(), x);
    }

    #[test]
    fn subset_algebra(a in 0u64..(1 << 12), b in 0u64..(1 << 12)) {
        let (a, b) = (Subset::from_bits(a), Subset::from_bits(b));
        prop_assert_eq!(a.union(b).len() + a.intersection(b).len(), a.len() + b.len());
        prop_assert_eq!(a.difference(b).union(a.intersection(b)), a);
        prop_assert_eq!(a.complement(12).complement(12), a);
        prop_assert_eq!(Subset::from_elements(a.iter()), a);
        prop_assert_eq!(a.subsets().count(), 1usize << a.len());
    }

    #[test]
    fn extreme_points_span_the_cloud(raw in prop::collection::vec((-6i64..6, -6i64..6, -6i64..6), 1..24)) {
        let points: Vec<Vec<Rational>> = raw.iter().map(|&(x, y, z)| vec![int(x), int(y), int(z)]).collect();
        let ext = extreme_points(&points);
        prop_assert!(!ext.is_empty());
        for p in &ext {
            prop_assert!(points.contains(p));
        }
        // every input point is a convex combination of the extreme points
        for p in &points {
            let mut m: Vec<Vec<Rational>> = (0..3).map(|c| ext.iter().map(|e| e[c].clone()).collect()).collect();
            m.push(vec![int(1); ext.len()]);
            let mut b = p.clone();
            b.push(int(1));
            prop_assert!(feasible_point(&m, &b).is_some());
        }
        // and no extreme point is a combination of the others
        for (k, p) in ext.iter().enumerate() {
            let others: Vec<&Vec<Rational>> = ext.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, e)| e).collect();
            if others.is_empty() {
                continue;
            }
            let mut m: Vec<Vec<Rational>> = (0..3).map(|c| others.iter().map(|e| e[c].clone()).collect()).collect();
            m.push(vec![int(1); others.len()]);
            let mut b = p.clone();
            b.push(int(1));
            prop_assert!(feasible_point(&m, &b).is_none());
        }
    }

    #[test]
    fn tables_are_additive_over_components((p, i) in realisation(9)) {
        let q = LabeledPolygon::new(p);
        let spec = default_facet_spec::<Rational>(&p);
        let dec = decompose(&q, i).unwrap();
        let sum = dec
            .components
            .iter()
            .map(|c| tight_z(&q, c.elements(), &spec).unwrap())
            .fold(Rational::from_integer(0.into()), |a, b| a + b);
        if i != Subset::full(p.n()) {
            prop_assert_eq!(tight_z(&q, i, &spec).unwrap(), sum);
        }
    }
}

#[test]
fn full_table_matches_tight_values() {
    let p = CoxeterPartition::new(6, [2, 5]).unwrap();
    let q = LabeledPolygon::new(p);
    let spec = default_facet_spec::<Rational>(&p);
    let z = full_z_table(&p, &spec).unwrap();
    for i in Subset::full(6).subsets().filter(|s| !s.is_empty()) {
        assert_eq!(*z.get(i), tight_z(&q, i, &spec).unwrap());
    }
}
