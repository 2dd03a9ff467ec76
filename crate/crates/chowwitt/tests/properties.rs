//! Randomized invariants of the linear algebra and of the derived theories.

use chowwitt::graded::{Bidegree, Twist};
use chowwitt::linalg::{smith_normal_form, IntMatrix};
use chowwitt::scalar::FieldModel;
use chowwitt::spaces::{build_chow_witt, parse_space};
use chowwitt::stack::checks::{
    bar_exactness, euler_consistency, hyperbolic_cokernel, rho_of_hyperbolic, sign_independence,
    truncation_stability,
};
use chowwitt::stack::{PairTheory, Theory};
use num_bigint::BigInt;
use num_integer::Integer;
use proptest::prelude::*;
use std::sync::Arc;

fn det(m: &[Vec<i64>]) -> i64 {
    match m.len() {
        0 => 1,
        1 => m[0][0],
        n => (0..n)
            .map(|c| {
                let minor: Vec<Vec<i64>> =
                    m[1..].iter().map(|r| r.iter().enumerate().filter(|(k, _)| *k != c).map(|(_, x)| *x).collect()).collect();
                let sign = if c % 2 == 0 { 1 } else { -1 };
                sign * m[0][c] * det(&minor)
            })
            .sum(),
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    (k - 1..n).flat_map(|last| subsets(last, k - 1).into_iter().map(move |mut s| {
        s.push(last);
        s
    })).collect()
}

/// Invariant factors from gcds of minors: `s_k = d_k / d_{k-1}`.
fn determinantal_factors(m: &[Vec<i64>], rows: usize, cols: usize) -> Vec<i64> {
    let mut d = vec![1i64];
    for k in 1..=rows.min(cols) {
        let mut g = 0i64;
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let sub: Vec<Vec<i64>> = rs.iter().map(|&r| cs.iter().map(|&c| m[r][c]).collect()).collect();
                g = g.gcd(&det(&sub));
            }
        }
        if g == 0 {
            break;
        }
        d.push(g);
    }
    d.windows(2).map(|w| w[1] / w[0]).collect()
}

fn field(k: usize) -> FieldModel {
    FieldModel::parse(["C", "R", "F3", "F5", "F7"][k % 5]).unwrap()
}

fn catalog(k: usize) -> &'static str {
    ["P(3)", "BGm", "BGm x BGm", "Bmu(4)", "Bmu(5)", "BGm x Bmu(2)", "Bmu(3) x BGm", "Bmu(2) x Bmu(6)", "Bmu(3) x Bmu(4)"][k % 9]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn snf_matches_determinantal_divisors(
        rows in 1usize..=4,
        cols in 1usize..=4,
        v in proptest::collection::vec(-12i64..=12, 16),
    ) {
        let m: Vec<Vec<i64>> = (0..rows).map(|r| v[r * 4..r * 4 + cols].to_vec()).collect();
        let s = smith_normal_form(&IntMatrix::from_i64_rows(cols, &m));
        let got: Vec<BigInt> = s.diagonal().into_iter().filter(|x| *x != BigInt::from(0)).map(|x| x.magnitude().clone().into()).collect();
        let want: Vec<BigInt> = determinantal_factors(&m, rows, cols).into_iter().map(BigInt::from).collect();
        prop_assert_eq!(got, want);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn bar_exactness_on_products(q in 1u32..=4, r in 1u32..=4, i in 0u32..8, a in 0u8..2, b in 0u8..2, f in 0usize..5) {
        let t = PairTheory::projective(&[q, r], &field(f), 8).unwrap();
        let c = bar_exactness(&t, &Bidegree::new(i, Twist(vec![a, b]))).unwrap();
        prop_assert!(c.passed, "{} {}", c.name, c.detail);
    }

    #[test]
    fn bar_exactness_on_classifying_spaces(s in 1usize..=2, i in 0u32..5, bits in 0u8..4, f in 0usize..5) {
        let t = PairTheory::stable(s, &field(f), 5).unwrap();
        let tw = Twist((0..s).map(|k| (bits >> k) & 1).collect());
        let c = bar_exactness(&t, &Bidegree::new(i, tw)).unwrap();
        prop_assert!(c.passed, "{} {}", c.name, c.detail);
    }

    #[test]
    fn reduction_of_hyperbolic_is_two(k in 0usize..9, f in 0usize..5, i in 0u32..5, bits in 0u8..4) {
        let f = field(f);
        let e = parse_space(catalog(k)).unwrap();
        prop_assume!(e.checked_field(&f).is_ok());
        let st = build_chow_witt(&e, &f, 4).unwrap();
        let th = st.theory.as_ref();
        let tw = Twist((0..th.twist_rank()).map(|b| (bits >> b) & 1).collect());
        let d = Bidegree::new(i, th.lift_twist(&tw).unwrap());
        let c = rho_of_hyperbolic(th, &d).unwrap();
        prop_assert!(c.passed, "{}", c.name);
    }

    #[test]
    fn i_cohomology_is_chow_witt_mod_hyperbolic(q in 1u32..=4, r in 1u32..=4, i in 0u32..8, bits in 0u8..4) {
        let t = Arc::new(PairTheory::projective(&[q, r], &FieldModel::finite(3).unwrap(), 8).unwrap());
        let c = hyperbolic_cokernel(&t, &Bidegree::new(i, Twist(vec![bits & 1, bits >> 1]))).unwrap();
        prop_assert!(c.passed, "{} {}", c.name, c.detail);
    }

    #[test]
    fn localization_is_sign_independent(n in 2u64..=9, two in any::<bool>(), side in 0usize..2, f in 0usize..5) {
        let f = field(f);
        prop_assume!(f.characteristic() == 0 || n % f.characteristic() != 0);
        let base: Arc<dyn Theory> = Arc::new(PairTheory::stable(if two { 2 } else { 1 }, &f, 3).unwrap());
        let c = sign_independence(base, n, if two { side } else { 0 }, &f).unwrap();
        prop_assert!(c.passed, "{} {}", c.name, c.detail);
    }

    #[test]
    fn truncation_is_stable(s in 1usize..=2, bound in 1u32..=5, f in 0usize..5) {
        let c = truncation_stability(s, &field(f), bound).unwrap();
        prop_assert!(c.passed, "{} {}", c.name, c.detail);
    }

    #[test]
    fn euler_classes_agree(n in -6i64..=6, which in 0usize..4, f in 0usize..5) {
        let field = field(f);
        let (t, side): (PairTheory, usize) = match which {
            0 => (PairTheory::stable(1, &field, 2).unwrap(), 0),
            1 => (PairTheory::stable(2, &field, 2).unwrap(), 0),
            2 => (PairTheory::stable(2, &field, 2).unwrap(), 1),
            _ => (PairTheory::projective(&[3, 2], &field, 3).unwrap(), 1),
        };
        let c = euler_consistency(&t, side, n).unwrap();
        prop_assert!(c.passed, "{}", c.name);
    }
}
