mod common;

use chowwitt::graded::compare::Verdict;
use chowwitt::scalar::FieldModel;
use chowwitt::spaces::build::{kunneth_verdict, witt_degree0_product};
use chowwitt::spaces::{build_chow_witt, parse_space, Atom};
use chowwitt::stack::checks::sign_independence;
use chowwitt::stack::{PairTheory, Theory};
use chowwitt::CwError;
use common::*;
use num_bigint::BigInt;
use std::sync::Arc;

fn gw_plus_w(f: &FieldModel, k: usize) -> chowwitt::linalg::GroupType {
    chowwitt::spaces::database::TableGroup::GWPlusW(k).group_type(f).unwrap()
}

#[test]
fn odd_order_table() {
    for f in fields() {
        for n in [3u64, 5, 7, 9] {
            if f.characteristic() != 0 && n % f.characteristic() == 0 {
                continue;
            }
            let st = chw(&format!("Bmu({n})"), &f, 6);
            assert_eq!(st.pic_mod2_rank(), 0);
            for i in 1..=6 {
                assert_eq!(at(&st, i, "-").0, ty(&format!("Z/{n}")), "Bmu({n}) {i} over {f}");
            }
        }
    }
}

#[test]
fn even_order_examples() {
    let f = FieldModel::complex();
    let st = chw("Bmu(4)", &f, 4);
    assert_eq!(at(&st, 2, "0").0, ty("Z/8"));
    assert_eq!(at(&st, 0, "0").0, gw_plus_w(&f, 1));
    let st = chw("BGm x Bmu(2)", &FieldModel::real(), 2);
    assert_eq!(at(&st, 0, "00").0, gw_plus_w(&FieldModel::real(), 1));
}

#[test]
fn mixed_product_degree_one() {
    for f in [FieldModel::complex(), FieldModel::real()] {
        for n in 2u64..=5 {
            let st = chw(&format!("BGm x Bmu({n})"), &f, 3);
            let bits = if n % 2 == 0 { "10" } else { "1" };
            assert_eq!(at(&st, 1, bits).0, ty(&format!("Z + Z/{n}")), "n = {n} over {f}");
        }
    }
}

#[test]
fn rho_image_is_the_chow_ring() {
    // in every degree some twist reaches all of CH^i(Bmu(n)) = Z/n
    let f = FieldModel::finite(5).unwrap();
    for n in [2u64, 3, 4, 6] {
        let st = chw(&format!("Bmu({n})"), &f, 6);
        let s = st.theory.twist_rank();
        for i in 0..=6 {
            let best = chowwitt::graded::Twist::all(s).iter().map(|t| at(&st, i, &t.bits()).1.unwrap()).min().unwrap();
            assert_eq!(best, BigInt::from(1), "Bmu({n}) degree {i}");
        }
    }
}

#[test]
fn witt_degree_zero_products() {
    let f = FieldModel::finite(3).unwrap();
    let cases = [(2u64, 4u64, vec!["1", "U1", "U2", "U1*U2"]), (5, 7, vec!["1"]), (5, 4, vec!["1", "U2"])];
    for (m, n, basis) in cases {
        let w = witt_degree0_product(m, n, &f).unwrap();
        assert_eq!(w.basis, basis);
        assert!(w.matches_basis, "({m}, {n}): {}", w.group_type);
    }
}

#[test]
fn derivation_log_records_branches() {
    let f = FieldModel::complex();
    let st = chw("Bmu(3) x Bmu(4)", &f, 2);
    assert_eq!(st.derivation_log.len(), 3);
    assert!(st.derivation_log[0].starts_with("stable limit"));
    assert!(st.derivation_log[1].contains("factor 2"));
    assert!(st.derivation_log[2].contains("factor 1"));
    assert_eq!(st.odd_sides, vec![(0, 3)]);
}

#[test]
fn scope_errors() {
    let f = FieldModel::complex();
    let e = parse_space("P(2) x BGm").unwrap();
    assert!(matches!(build_chow_witt(&e, &f, 3), Err(CwError::OutOfScope(_))));
    let st = chw("BGm", &f, 3);
    let d = chowwitt::graded::Bidegree::new(5, twist("0"));
    assert!(st.theory.piece(&d).is_err());
}

#[test]
fn localization_sign_does_not_matter() {
    let f = FieldModel::real();
    for n in [2u64, 3, 4, 5] {
        let base: Arc<dyn Theory> = Arc::new(PairTheory::stable(1, &f, 4).unwrap());
        let c = sign_independence(base, n, 0, &f).unwrap();
        assert!(c.passed, "{} {}", c.name, c.detail);
        let base: Arc<dyn Theory> = Arc::new(PairTheory::stable(2, &f, 4).unwrap());
        let c = sign_independence(base, n, 1, &f).unwrap();
        assert!(c.passed, "{} {}", c.name, c.detail);
    }
}

#[test]
fn kunneth_verdicts_are_frozen() {
    let f = FieldModel::complex();
    let cases = [
        (Atom::BGm, Atom::Bmu(3), Verdict::Iso),
        (Atom::BGm, Atom::Bmu(5), Verdict::Iso),
        (Atom::BGm, Atom::Bmu(2), Verdict::Neither),
        (Atom::BGm, Atom::BGm, Verdict::InjectiveOnly),
        (Atom::Bmu(2), Atom::Bmu(4), Verdict::Neither),
        (Atom::Bmu(3), Atom::Bmu(4), Verdict::Iso),
        (Atom::Bmu(3), Atom::Bmu(5), Verdict::Iso),
    ];
    for (a, b, v) in cases {
        assert_eq!(kunneth_verdict(a, b, &f, 4).unwrap().overall, v, "{a} x {b}");
    }
}

#[test]
fn kunneth_even_even_fails_injectivity_in_degree_zero() {
    // U1 (x) H2 spans GW/(I + h) = Z/2 in the source and dies in the product
    let f = FieldModel::complex();
    let rep = kunneth_verdict(Atom::Bmu(2), Atom::Bmu(4), &f, 2).unwrap();
    let e = rep.entries.iter().find(|e| e.target.degree == 0 && e.target.twist.bits() == "01").unwrap();
    assert_eq!(e.source_type, ty("Z + Z/2"));
    assert_eq!(e.target_type, ty("Z"));
    assert_eq!(e.verdict, Verdict::SurjectiveOnly);
}

#[test]
fn kunneth_needs_two_factors() {
    let f = FieldModel::complex();
    assert!(chowwitt::report::kunneth(Some(&parse_space("BGm").unwrap()), &f, 2).is_err());
}
