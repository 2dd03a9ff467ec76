mod common;

use chowwitt::graded::{Bidegree, Twist};
use chowwitt::linalg::GroupType;
use chowwitt::scalar::FieldModel;
use chowwitt::spaces::parse_space;
use chowwitt::topo::*;
use common::*;
use proptest::prelude::*;

fn texts(v: &[GroupType]) -> Vec<String> {
    v.iter().map(|g| g.to_string()).collect()
}

#[test]
fn real_projective_space() {
    assert_eq!(texts(&rp_cohomology(6, false)), ["Z", "0", "Z/2", "0", "Z/2", "0", "Z/2"]);
    assert_eq!(texts(&rp_cohomology(6, true)), ["0", "Z/2", "0", "Z/2", "0", "Z/2", "Z"]);
    // the top cell carries the orientation sheaf
    assert_eq!(texts(&rp_cohomology(5, false)), ["Z", "0", "Z/2", "0", "Z/2", "Z"]);
    assert_eq!(texts(&rp_cohomology(4, true)), ["0", "Z/2", "0", "Z/2", "Z"]);
    for n in 1..8 {
        assert_eq!(rp_cohomology(n, false)[0], ty("Z"));
    }
}

#[test]
fn product_of_infinite_projective_spaces() {
    let a = rp_cohomology(10, false);
    let p = product_cohomology(&a, &a);
    assert_eq!(p[3], ty("Z/2"));
    assert_eq!(p[4], ty("Z/2 + Z/2 + Z/2"));
    let point = vec![ty("Z")];
    assert_eq!(product_cohomology(&a, &point), a);
}

#[test]
fn kunneth_formula_agrees_with_product_cochains() {
    for (m, s, n, t) in [(6, false, 5, false), (5, true, 6, false), (4, true, 4, true), (3, false, 2, true)] {
        let cells = CellModel::rp(m, s).product(&CellModel::rp(n, t));
        assert!(cells.is_complex());
        let formula = product_cohomology(&rp_cohomology(m, s), &rp_cohomology(n, t));
        for (k, g) in formula.iter().enumerate() {
            assert_eq!(cells.cohomology(k).group_type(), *g, "RP{m}{s} x RP{n}{t} degree {k}");
        }
    }
}

#[test]
fn cellular_spaces_match_everywhere() {
    for space in ["P(2) x P(3)", "P(3) x P(3)", "P(1) x P(4)", "P(4)", "BGm", "BGm x BGm"] {
        let e = parse_space(space).unwrap();
        for i in 0..=5 {
            for j in i..=i + 3 {
                for t in Twist::all(e.pic_mod2_rank()) {
                    let r = cycle_class_check(&e, i, j, &t).unwrap();
                    assert_eq!(r.verdict, CycleClassVerdict::Match, "{space} H^{i}(I^{j}, {t}): {r:?}");
                }
            }
        }
    }
}

#[test]
fn odd_mu_is_contractible() {
    for n in [3u64, 5, 7] {
        let e = parse_space(&format!("Bmu({n})")).unwrap();
        let r = cycle_class_check(&e, 0, 3, &Twist::zero(0)).unwrap();
        assert_eq!(r.verdict, CycleClassVerdict::Match);
        assert_eq!(r.singular, "Z");
        for i in 1..=4 {
            let r = cycle_class_check(&e, i, i + 3, &Twist::zero(0)).unwrap();
            assert_eq!(r.singular, "0");
        }
    }
}

#[test]
fn even_mu_diagonal_is_not_the_real_cohomology() {
    for n in [2u64, 4, 6] {
        let e = parse_space(&format!("Bmu({n})")).unwrap();
        for i in [2u32, 4, 6] {
            let r = cycle_class_check(&e, i, i, &twist("0")).unwrap();
            assert_eq!(r.verdict, CycleClassVerdict::NotApplicable);
            assert_eq!(r.groups_agree, Some(false), "Bmu({n}) degree {i}");
            assert_eq!(r.singular, "Z/2 + Z/2");
            assert_eq!(r.engine.as_deref(), Some("Z/2"));
        }
    }
}

#[test]
fn applicability_ranges() {
    let one = CycleClassRange::of(&parse_space("Bmu(4)").unwrap());
    assert!(!one.contains(2, 4) && one.contains(2, 5));
    let mixed = CycleClassRange::of(&parse_space("BGm x Bmu(4)").unwrap());
    assert!(!mixed.contains(2, 8) && mixed.contains(2, 9));
    assert_eq!(CycleClassRange::of(&parse_space("P(2) x P(2)").unwrap()), CycleClassRange::Cellular);
}

#[test]
fn real_ring_through_degree_eight() {
    let rows = real_bgm2_ring_check(8).unwrap();
    assert_eq!(rows.len(), 9);
    for r in rows {
        assert!(r.iso, "{r:?}");
    }
}

#[test]
fn embedding_respects_the_relation() {
    let st = hi("BGm x BGm", &FieldModel::real(), 6);
    let c = st.theory.carrier();
    let d = Bidegree::new(6, twist("00"));
    let x = st.theory.coords(&d, &c.p("e1^4*e2^2 + e1^2*e2^4 + e1^2*e2^2*e3^2")).unwrap();
    assert!(st.theory.piece(&d).unwrap().group.is_zero(&x));
    let d = Bidegree::new(4, twist("00"));
    let y = st.theory.coords(&d, &c.p("e1^2*e2^2")).unwrap();
    assert!(!st.theory.piece(&d).unwrap().group.is_zero(&y));
}

#[test]
fn only_the_real_field_is_supported() {
    assert!(oracle_field_ok(&FieldModel::real()));
    assert!(!oracle_field_ok(&FieldModel::complex()));
    assert!(chowwitt::report::oracle(&parse_space("BGm").unwrap(), &FieldModel::complex(), 2).is_err());
}

proptest! {
    #[test]
    fn cochain_products_square_to_zero(m in 1u32..6, n in 1u32..6, s: bool, t: bool, k in 0usize..3) {
        let a = CellModel::rp(m, s).disjoint(&CellModel::rp(m.min(3), t));
        let b = if k == 0 { CellModel::point() } else { CellModel::rp(n, t) };
        prop_assert!(a.product(&b).is_complex());
    }
}
