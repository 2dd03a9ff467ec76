mod common;

use chowwitt::graded::{Bidegree, Twist};
use chowwitt::scalar::FieldModel;
use chowwitt::stack::checks::{
    bar_exactness, bockstein_examples, hyperbolic_cokernel, nondiagonal_vs_table, rho_of_hyperbolic,
};
use chowwitt::stack::{HypQuotient, PairTheory, Theory};
use chowwitt::CwError;
use common::*;
use std::sync::Arc;

fn pair_spaces(f: &FieldModel) -> Vec<Arc<PairTheory>> {
    let mut out = vec![
        Arc::new(PairTheory::stable(1, f, 5).unwrap()),
        Arc::new(PairTheory::stable(2, f, 5).unwrap()),
    ];
    for r in 1..=4 {
        out.push(Arc::new(PairTheory::projective(&[r], f, 5).unwrap()));
    }
    for (q, r) in [(1, 1), (1, 2), (2, 3), (3, 3), (2, 4)] {
        out.push(Arc::new(PairTheory::projective(&[q, r], f, 6).unwrap()));
    }
    out
}

#[test]
fn bar_sequence_is_exact() {
    for f in [FieldModel::complex(), FieldModel::real(), FieldModel::finite(3).unwrap()] {
        for t in pair_spaces(&f) {
            for i in 0..t.bound() {
                for tw in Twist::all(t.twist_rank()) {
                    let c = bar_exactness(&t, &Bidegree::new(i, tw)).unwrap();
                    assert!(c.passed, "{} {}", c.name, c.detail);
                }
            }
        }
    }
}

#[test]
fn bockstein_on_products() {
    let f = FieldModel::complex();
    for (q, r) in [(2, 3), (3, 3), (4, 4)] {
        let t = PairTheory::projective(&[q, r], &f, q + r).unwrap();
        for i in 0..r {
            let c = bockstein_examples(&t, i).unwrap();
            assert!(c.passed, "{}", c.name);
        }
    }
}

#[test]
fn hyperbolic_quotient_recovers_input() {
    for f in [FieldModel::real(), FieldModel::finite(5).unwrap()] {
        for t in pair_spaces(&f) {
            for i in 0..=t.bound() {
                for tw in Twist::all(t.twist_rank()) {
                    let c = hyperbolic_cokernel(&t, &Bidegree::new(i, tw)).unwrap();
                    assert!(c.passed, "{} {}", c.name, c.detail);
                }
            }
        }
    }
}

#[test]
fn reduction_of_hyperbolic_classes() {
    let f = FieldModel::finite(7).unwrap();
    for space in ["P(3)", "BGm x BGm", "Bmu(4)", "Bmu(3) x Bmu(4)", "BGm x Bmu(5)"] {
        let st = chw(space, &f, 4);
        let th = st.theory.as_ref();
        for i in 0..=4 {
            for tw in Twist::all(th.twist_rank()) {
                let d = Bidegree::new(i, th.lift_twist(&tw).unwrap());
                let c = rho_of_hyperbolic(th, &d).unwrap();
                assert!(c.passed, "{}", c.name);
            }
        }
    }
}

#[test]
fn nondiagonal_table_of_products() {
    for f in [FieldModel::complex(), FieldModel::real()] {
        for q in 1..=4 {
            for r in 1..=4 {
                let t = PairTheory::projective(&[q, r], &f, q + r).unwrap();
                for i in 0..=q + r {
                    for tw in [(0, 0), (0, 1), (1, 0), (1, 1)] {
                        let c = nondiagonal_vs_table(&t, &f, i, tw).unwrap();
                        assert!(c.passed, "{} {}", c.name, c.detail);
                    }
                }
            }
        }
    }
}

#[test]
fn odd_equal_dimensions_give_two_witt_summands() {
    let f = FieldModel::real();
    let t = PairTheory::projective(&[3, 3], &f, 6).unwrap();
    assert_eq!(t.nondiagonal(3, &twist("00")).unwrap().group_type(), ty("Z^2"));
}

#[test]
fn euler_square_relation() {
    let f = FieldModel::real();
    for space in ["P(2) x P(3)", "P(4) x P(4)"] {
        let st = hi(space, &f, 4);
        let c = st.theory.carrier();
        let d = Bidegree::new(2, twist("00"));
        let lhs = st.theory.coords(&d, &c.p("e3^2")).unwrap();
        let rhs = st.theory.coords(&d, &c.p("e1^2 + e2^2")).unwrap();
        let piece = st.theory.piece(&d).unwrap();
        assert!(piece.group.equal(&lhs, &rhs), "{space}");
        assert!(!piece.group.is_zero(&lhs), "{space}");
    }
}

#[test]
fn mod_two_ring_of_products() {
    // reduction of I-cohomology to Ch is onto the truncated polynomial ring over Z/2
    let f = FieldModel::complex();
    let t = PairTheory::projective(&[2, 3], &f, 5).unwrap();
    for i in 0..=5u32 {
        let monomials = t.chow_monomials(i);
        let expected = (0..=i).filter(|a| *a <= 2 && i - a <= 3).count();
        assert_eq!(monomials.len(), expected, "degree {i}");
    }
}

#[test]
fn stable_theories_reject_degrees_beyond_the_bound() {
    let f = FieldModel::complex();
    let t = PairTheory::stable(1, &f, 3).unwrap();
    let err = t.piece(&Bidegree::new(4, twist("0"))).unwrap_err();
    assert!(matches!(err, CwError::BeyondValidity { .. } | CwError::DegreeBoundExceeded { .. }), "{err}");
}

#[test]
fn hyperbolic_quotient_keeps_twist_rank() {
    let f = FieldModel::complex();
    let st = chw("Bmu(3) x Bmu(4)", &f, 3);
    let q = HypQuotient::new(st.theory.clone()).unwrap();
    assert_eq!(q.twist_rank(), 1);
    assert_eq!(q.collapsed(), st.theory.collapsed());
}
