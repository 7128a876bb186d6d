mod common;

use assocmink::decomposition::frame_from_decomposition;
use assocmink::minkowski::{full_y_table, signed_lengths, Method};
use assocmink::scalar::sign;
use assocmink::zvalues::{default_facet_spec, full_z_table, tight_z};
use assocmink::*;
use common::*;

#[test]
fn three_routes_agree_with_default_values() {
    for q in polygons(7) {
        let z = full_z_table(q.partition(), &default_facet_spec::<Rational>(q.partition())).unwrap();
        for i in nonempty(q.n()) {
            let m = y_moebius(&z, i);
            let f = y_four_term(&q, &z, i).unwrap();
            let p = y_product::<Rational>(&q, i).unwrap();
            assert_eq!(m, f, "{} {i}", q.partition());
            assert_eq!(m, p, "{} {i}", q.partition());
        }
    }
}

#[test]
fn coefficients_sum_back_to_the_table() {
    for q in polygons(7) {
        let z = full_z_table(q.partition(), &default_facet_spec::<Rational>(q.partition())).unwrap();
        for method in Method::ALL {
            let y = full_y_table(&z, method).unwrap();
            for i in nonempty(q.n()) {
                assert_eq!(y.partial_sum(i), *z.get(i), "{method:?} {} {i}", q.partition());
            }
        }
    }
}

#[test]
fn zero_pattern() {
    for q in polygons(7) {
        for i in nonempty(q.n()) {
            let y = y_product::<Rational>(&q, i).unwrap();
            assert_eq!(is_zero_coefficient(&q, i).unwrap(), y == q_zero(), "{} {i}", q.partition());
        }
    }
    assert!(is_zero_coefficient(&polygon(3, &[2]), set(&[2])).unwrap());
}

fn q_zero() -> Rational {
    q(0)
}

#[test]
fn top_coefficient() {
    for q in polygons(7) {
        let z = full_z_table(q.partition(), &default_facet_spec::<Rational>(q.partition())).unwrap();
        let full = Subset::full(q.n());
        assert_eq!(y_moebius(&z, full), y_top::<Rational>(q.partition()));
    }
}

#[test]
fn disconnected_subsets_vanish() {
    for q in polygons(7) {
        let z = full_z_table(q.partition(), &default_facet_spec::<Rational>(q.partition())).unwrap();
        for i in nonempty(q.n()) {
            if decompose(&q, i).unwrap().type_v() > 1 {
                assert_eq!(y_moebius(&z, i), q_zero(), "{} {i}", q.partition());
            }
        }
    }
}

#[test]
fn sign_identities() {
    for q in polygons(7) {
        let n = q.n();
        for i in nonempty(n) {
            let dec = decompose(&q, i).unwrap();
            if dec.type_v() != 1 {
                continue;
            }
            let f = frame_from_decomposition(&q, &dec).unwrap();
            let r: Vec<Subset> = (1..=4).map(|k| q.right_set(f.delta(k)).unwrap()).collect();
            let out = |k: usize| i.difference(r[k]).len();
            let ends = Subset::from_elements([f.gamma_min, f.gamma_max]).len();
            let s1 = sign::<i64>(out(0));
            assert_eq!(s1, sign::<i64>(out(1) + 1), "{} {i}", q.partition());
            assert_eq!(s1, sign::<i64>(out(2) + 1), "{} {i}", q.partition());
            assert_eq!(s1, sign::<i64>(out(3) + ends), "{} {i}", q.partition());
        }
    }
}

#[test]
fn signed_lengths_measure_right_sets() {
    for q in polygons(7) {
        let p = q.partition();
        for i in nonempty(q.n()) {
            let Ok(f) = four_diagonal_frame(&q, i) else {
                continue;
            };
            let k = signed_lengths(&q, i).unwrap();
            let len = |d| q.right_set(f.delta(d)).unwrap().len() as i64;
            assert_eq!(k.k_gamma_max, len(2) - len(1), "{p} {i}");
            assert_eq!(k.k_gamma_min, len(3) - len(1), "{p} {i}");
            for (x, kx) in [(f.gamma_min, k.k_gamma_min), (f.gamma_max, k.k_gamma_max)] {
                assert_eq!(kx > 0, p.is_up(x));
                assert_eq!(kx == -1, !p.is_up(x));
            }
        }
    }
}

#[test]
fn facet_values_are_tight_values() {
    for q in polygons(7) {
        let spec = default_facet_spec::<Rational>(q.partition());
        for (r, z) in spec.values() {
            assert_eq!(tight_z(&q, *r, &spec).unwrap(), *z);
        }
    }
}

#[test]
fn tight_values_add_over_components() {
    for q in polygons(7) {
        let spec = default_facet_spec::<Rational>(q.partition());
        for i in nonempty(q.n()) {
            let dec = decompose(&q, i).unwrap();
            if dec.type_v() < 2 {
                continue;
            }
            let parts = dec
                .components
                .iter()
                .map(|c| tight_z(&q, c.elements(), &spec).unwrap())
                .fold(q_zero(), |a, b| a + b);
            assert_eq!(tight_z(&q, i, &spec).unwrap(), parts);
        }
    }
}

#[test]
fn product_refuses_custom_tables() {
    let p = partition(4, &[2]);
    let z = full_z_table(&p, &default_facet_spec::<Rational>(&p)).unwrap();
    let custom = z.with_value(set(&[1]), q(2));
    assert!(matches!(full_y_table(&custom, Method::Product), Err(Error::ProductNeedsDefaultSpec)));
}

#[test]
fn machine_word_rationals_agree() {
    use assocmink::SmallRational;
    for q in polygons(6) {
        let big = full_z_table(q.partition(), &default_facet_spec::<Rational>(q.partition())).unwrap();
        let small = full_z_table(q.partition(), &default_facet_spec::<SmallRational>(q.partition())).unwrap();
        for i in nonempty(q.n()) {
            assert_eq!(big.get(i).to_string(), small.get(i).to_string());
            assert_eq!(y_moebius(&big, i).to_string(), y_four_term(&q, &small, i).unwrap().to_string());
        }
    }
}
