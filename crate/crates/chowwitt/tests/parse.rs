use chowwitt::spaces::{parse_space, Atom, SpaceExpr};
use chowwitt::CwError;
use proptest::prelude::*;

#[test]
fn grammar_cases() {
    assert_eq!(parse_space("P(3) x P(4)").unwrap().factors, vec![Atom::P(3), Atom::P(4)]);
    assert_eq!(parse_space("Bmu(6) x BGm").unwrap().factors, vec![Atom::Bmu(6), Atom::BGm]);
    assert_eq!(parse_space("BGm").unwrap().factors, vec![Atom::BGm]);
    assert_eq!(parse_space("  Bmu ( 12 )xP(1) ").unwrap().factors, vec![Atom::Bmu(12), Atom::P(1)]);
}

#[test]
fn parameter_errors() {
    assert!(matches!(parse_space("P(0)"), Err(CwError::Param(_))));
    assert!(matches!(parse_space("Bmu(0)"), Err(CwError::Param(_))));
    assert!(matches!(parse_space("Bmu(-2)"), Err(CwError::Param(_))));
    assert!(matches!(parse_space("P(99999999999)"), Err(CwError::Param(_))));
}

#[test]
fn arity_error() {
    assert!(matches!(parse_space("BGm x BGm x BGm"), Err(CwError::Arity(_))));
}

#[test]
fn syntax_errors_carry_positions() {
    match parse_space("P(3) y P(4)") {
        Err(CwError::Syntax { pos, .. }) => assert_eq!(pos, 5),
        other => panic!("{other:?}"),
    }
    match parse_space("Bmu(4") {
        Err(CwError::Syntax { pos, msg }) => {
            assert_eq!(pos, 5);
            assert!(msg.contains("end of input"));
        }
        other => panic!("{other:?}"),
    }
    assert!(matches!(parse_space(""), Err(CwError::Syntax { pos: 0, .. })));
    assert!(matches!(parse_space("BGm x"), Err(CwError::Syntax { .. })));
    assert!(matches!(parse_space("Q(2)"), Err(CwError::Syntax { pos: 0, .. })));
}

#[test]
fn slugs_and_swaps() {
    let e = parse_space("Bmu(6) x BGm").unwrap();
    assert_eq!(e.slug(), "Bmu6_x_BGm");
    assert_eq!(e.swapped().to_string(), "BGm x Bmu(6)");
    assert_eq!(e.pic_mod2_rank(), 2);
    assert_eq!(parse_space("Bmu(5) x P(2)").unwrap().pic_mod2_rank(), 1);
}

fn atom() -> impl Strategy<Value = Atom> {
    prop_oneof![(1u32..40).prop_map(Atom::P), Just(Atom::BGm), (1u64..200).prop_map(Atom::Bmu)]
}

proptest! {
    #[test]
    fn printer_round_trips(factors in proptest::collection::vec(atom(), 1..=2), pad in 0usize..3) {
        let e = SpaceExpr::new(factors).unwrap();
        let text = e.to_string().replace(' ', &" ".repeat(pad));
        prop_assert_eq!(parse_space(&text).unwrap(), e);
    }
}
