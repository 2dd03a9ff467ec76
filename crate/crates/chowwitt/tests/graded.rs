use chowwitt::graded::compare::{compare, Correspondence, Verdict};
use chowwitt::graded::{Annihilator, Bidegree, Generator, RingPresentation, Twist};
use chowwitt::scalar::{shared, FieldModel, ScalarLabel, ScalarRing};
use chowwitt::CwError;
use proptest::prelude::*;
use std::sync::Arc;

fn truncated(top: u32) -> RingPresentation {
    let p = RingPresentation::new("Z[c]", Arc::new(ScalarRing::integers()), 0, vec![Generator::new("c", 1, &[], Annihilator::None)]);
    p.with_relations(&[&format!("c^{}", top + 1)])
}

fn types(p: &RingPresentation, bound: u32) -> Vec<String> {
    (0..=bound).map(|k| p.realize(&Bidegree::new(k, Twist(vec![])), bound).unwrap().group().group_type().to_string()).collect()
}

#[test]
fn truncated_polynomial_ring() {
    assert_eq!(types(&truncated(3), 5), ["Z", "Z", "Z", "Z", "0", "0"]);
    let p = truncated(3).with_relations(&["6*c"]);
    assert_eq!(types(&p, 4), ["Z", "Z/6", "Z/6", "Z/6", "0"]);
}

#[test]
fn annihilators_over_grothendieck_witt() {
    let f = FieldModel::real();
    let gw = shared(ScalarLabel::GW, &f).unwrap();
    let gens = vec![
        Generator::new("a", 1, &[], Annihilator::FundamentalIdeal),
        Generator::new("b", 2, &[], Annihilator::Hyperbolic),
    ];
    let p = RingPresentation::new("test", gw, 0, gens);
    let t = types(&p, 2);
    assert_eq!(t[0], "Z^2");
    assert_eq!(t[1], "Z");
    // b: GW/(h) = W(R) = Z, plus a^2: GW/I = Z
    assert_eq!(t[2], "Z^2");
}

#[test]
fn graded_sign_rule() {
    let gw = shared(ScalarLabel::GW, &FieldModel::real()).unwrap();
    let gens = vec![Generator::new("x", 1, &[], Annihilator::None), Generator::new("y", 1, &[], Annihilator::None)];
    let p = RingPresentation::new("signs", gw.clone(), 0, gens);
    let yx = p.mul(&p.var("y"), &p.var("x"));
    let xy = p.mul(&p.var("x"), &p.var("y"));
    assert_eq!(yx, p.scale(&gw.minus_one, &xy));
    let mut q = p.clone();
    q.graded_commutative = false;
    assert_eq!(q.mul(&q.var("y"), &q.var("x")), q.mul(&q.var("x"), &q.var("y")));
}

#[test]
fn tensor_products_concatenate_twists() {
    let f = FieldModel::complex();
    let gw = shared(ScalarLabel::GW, &f).unwrap();
    let a = RingPresentation::new("A", gw.clone(), 1, vec![Generator::new("e", 1, &[1], Annihilator::None)]);
    let b = RingPresentation::new("B", gw, 1, vec![Generator::new("u", 1, &[1], Annihilator::None)]);
    let t = a.tensor_product(&b).unwrap();
    assert_eq!(t.twist_rank, 2);
    assert_eq!(t.bidegree_of(&[1, 1]), Bidegree::new(2, Twist(vec![1, 1])));
}

#[test]
fn comparison_verdicts() {
    let p = truncated(3);
    let id = Correspondence::identity_twists(vec![p.var("c")], 0);
    assert_eq!(compare(&p, &p, &id, 4).unwrap().overall, Verdict::Iso);
    let double = Correspondence::identity_twists(vec![p.p("2*c")], 0);
    let r = compare(&p, &p, &double, 3).unwrap();
    assert_eq!(r.overall, Verdict::InjectiveOnly);
    assert_eq!(r.failing().len(), 3);
    let q = truncated(2);
    let onto = Correspondence::identity_twists(vec![q.var("c")], 0);
    assert_eq!(compare(&p, &q, &onto, 4).unwrap().overall, Verdict::SurjectiveOnly);
    let bad = Correspondence::identity_twists(vec![p.var("c")], 0);
    assert!(matches!(compare(&q, &p, &bad, 4), Err(CwError::InvalidCorrespondence(_))));
}

#[test]
fn realization_respects_the_bound() {
    let p = truncated(3);
    assert!(matches!(
        p.realize(&Bidegree::new(5, Twist(vec![])), 4),
        Err(CwError::DegreeBoundExceeded { requested: 5, bound: 4 })
    ));
}

proptest! {
    #[test]
    fn polynomials_print_and_parse(coeffs in proptest::collection::vec(-5i64..=5, 6), e in proptest::collection::vec(0u32..4, 6)) {
        let f = FieldModel::finite(5).unwrap();
        let gw = shared(ScalarLabel::GW, &f).unwrap();
        let gens = vec![
            Generator::new("e1", 1, &[1, 0], Annihilator::None),
            Generator::new("e2", 1, &[0, 1], Annihilator::None),
            Generator::new("H3", 0, &[1, 1], Annihilator::None),
        ];
        let p = RingPresentation::new("round", gw, 2, gens);
        let mut x = p.int(0);
        for k in 0..3 {
            let m = p.mul(&p.pow(&p.var("e1"), e[2 * k]), &p.pow(&p.var("e2"), e[2 * k + 1]));
            x = x.add(&p.mul(&p.int(coeffs[2 * k]), &p.mul(&m, &p.pow(&p.var("H3"), coeffs[2 * k + 1].unsigned_abs() as u32 % 2))));
        }
        let text = p.format_poly(&x);
        prop_assert_eq!(p.poly(&text).unwrap(), x);
    }
}
