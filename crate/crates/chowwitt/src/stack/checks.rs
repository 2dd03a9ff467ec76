//! Internal consistency checks of the derived theories.

use super::{euler_by_tensor, euler_closed_form, hyperbolic_polys, unit_twist, HypQuotient, LocTheory, PairTheory, Theory};
use crate::error::CwResult;
use crate::graded::{Bidegree, Twist};
use crate::linalg::isomorphic;
use crate::scalar::FieldModel;
use crate::spaces::database;
use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;
use std::sync::Arc;

#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckOutcome {
    pub fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        CheckOutcome { name: name.into(), passed, detail: detail.into() }
    }
}

fn order_of(g: &crate::linalg::FpAbGroup) -> Option<BigInt> {
    g.group_type().order()
}

/// `im(rho~: H^i(I^i, L) -> Ch^i) = ker(beta_L: Ch^i -> H^{i+1}(I^{i+1}, L))`.
pub fn bar_exactness(t: &PairTheory, d: &Bidegree) -> CwResult<CheckOutcome> {
    let rt = t.rho_tilde(d)?;
    let beta = t.bockstein(d)?;
    let composite_zero = rt.compose(&beta).is_zero_map();
    let im = order_of(&rt.image());
    let ker = order_of(&beta.kernel().0);
    let ok = composite_zero && im.is_some() && im == ker;
    Ok(CheckOutcome::new(
        format!("bar-exact {} {d}", t.name()),
        ok,
        format!("beta.rho~ = 0: {composite_zero}, |im rho~| = {im:?}, |ker beta| = {ker:?}"),
    ))
}

/// `rho(h_L(c^alpha)) = 2 c^alpha` in `CH^i`.
pub fn rho_of_hyperbolic(t: &dyn Theory, d: &Bidegree) -> CwResult<CheckOutcome> {
    let piece = t.piece(d)?;
    let Some(rho) = piece.rho.as_ref() else {
        return Ok(CheckOutcome::new(format!("rho.h = 2 {} {d}", t.name()), true, "no rho"));
    };
    let chow = t.chow_group(d.degree);
    let mut ok = true;
    for (k, p) in hyperbolic_polys(t, d).iter().enumerate() {
        let x = t.coords(d, p)?;
        let y = rho.apply(&x);
        let mut expect = vec![BigInt::zero(); chow.ngens()];
        expect[k] = BigInt::from(2);
        ok &= chow.equal(&y, &expect);
    }
    Ok(CheckOutcome::new(format!("rho.h = 2 {} {d}", t.name()), ok, ""))
}

/// `coker(h_L)` is isomorphic to the I-cohomology presentation the pair theory starts from.
pub fn hyperbolic_cokernel(t: &Arc<PairTheory>, d: &Bidegree) -> CwResult<CheckOutcome> {
    let q = HypQuotient::new(t.clone())?;
    let a = q.piece(d)?.group.clone();
    let b = t.realization(d)?.group().clone();
    let ok = isomorphic(&a, &b);
    Ok(CheckOutcome::new(
        format!("coker h = HI {} {d}", t.name()),
        ok,
        format!("{} vs {}", a.group_type(), b.group_type()),
    ))
}

/// `e(O(n))` from iterated tensor products agrees with the closed form, and `rho(e(O(n))) = -n c`.
pub fn euler_consistency(t: &dyn Theory, f: usize, n: i64) -> CwResult<CheckOutcome> {
    let carrier = t.carrier();
    let s = carrier.twist_rank;
    let tw = if n.rem_euclid(2) == 1 { unit_twist(s, f) } else { Twist::zero(s) };
    let d = Bidegree::new(1, tw);
    let piece = t.piece(&d)?;
    let a = t.coords(&d, &euler_by_tensor(carrier, f, n))?;
    let b = t.coords(&d, &euler_closed_form(carrier, f, n))?;
    let mut ok = piece.group.equal(&a, &b);
    if let Some(rho) = &piece.rho {
        let alpha: Vec<u32> = (0..s).map(|k| u32::from(k == f)).collect();
        let idx = t.chow_monomials(1).iter().position(|x| *x == alpha).expect("degree-1 monomial");
        let mut expect = vec![BigInt::zero(); t.chow_group(1).ngens()];
        expect[idx] = BigInt::from(-n);
        ok &= t.chow_group(1).equal(&rho.apply(&a), &expect);
    }
    Ok(CheckOutcome::new(format!("euler O({n}) factor {} of {}", f + 1, t.name()), ok, ""))
}

/// Group types at degrees `<= bound` do not change when the approximation grows by 2.
pub fn truncation_stability(factors: usize, field: &FieldModel, bound: u32) -> CwResult<CheckOutcome> {
    let a = PairTheory::stable(factors, field, bound)?;
    let b = PairTheory::stable(factors, field, bound + 2)?;
    let mut ok = true;
    let mut detail = String::new();
    for i in 0..=bound {
        for tw in Twist::all(factors) {
            let d = Bidegree::new(i, tw);
            let (x, y) = (a.piece(&d)?.group.group_type(), b.piece(&d)?.group.group_type());
            if x != y {
                ok = false;
                detail = format!("{d}: {x} vs {y}");
            }
        }
    }
    Ok(CheckOutcome::new(format!("truncation {} B={bound}", a.name()), ok, detail))
}

/// The localization does not depend on the sign of the Euler class.
pub fn sign_independence(base: Arc<dyn Theory>, n: u64, side: usize, field: &FieldModel) -> CwResult<CheckOutcome> {
    let plus = LocTheory::with_sign(base.clone(), n, side, field, 1)?;
    let minus = LocTheory::with_sign(base, n, side, field, -1)?;
    let mut ok = true;
    let mut detail = String::new();
    for i in 0..=plus.bound() {
        for tw in Twist::all(plus.twist_rank()) {
            let d = Bidegree::new(i, plus.lift_twist(&tw)?);
            let (x, y) = (plus.piece(&d)?.group.group_type(), minus.piece(&d)?.group.group_type());
            if x != y {
                ok = false;
                detail = format!("{d}: {x} vs {y}");
            }
        }
    }
    Ok(CheckOutcome::new(format!("sign {}", plus.name()), ok, detail))
}

/// `beta_{O(1,i)}(c2^i) = e1 e2^i` and `beta_{O(1,i+1)}(c2^i) = e2^i e3` on `P^q x P^r`.
pub fn bockstein_examples(t: &PairTheory, i: u32) -> CwResult<CheckOutcome> {
    let hi = t.hi();
    let mut ok = true;
    for (bit, last) in [(i % 2, "e1"), ((i + 1) % 2, "e3")] {
        let d = Bidegree::new(i, Twist(vec![1, bit as u8]));
        let beta = t.bockstein(&d)?;
        let alpha = vec![0, i];
        let idx = t.chow_monomials(i).iter().position(|a| *a == alpha);
        let Some(idx) = idx else { continue };
        let mut x = vec![BigInt::zero(); beta.domain.ngens()];
        x[idx] = BigInt::from(1);
        let got = beta.apply(&x);
        let expect_poly = hi.mul(&hi.pow(&hi.var("e2"), i), &hi.var(last));
        let next = t.realization(&Bidegree::new(i + 1, d.twist.clone()))?;
        let expect = next.coords(&expect_poly)?;
        ok &= next.group().equal(&got, &expect);
    }
    Ok(CheckOutcome::new(format!("bockstein examples {} i={i}", t.name()), ok, ""))
}

/// `H^i(P^q x P^r, I^j, L)` for `j < i` against the closed-form table.
pub fn nondiagonal_vs_table(t: &PairTheory, field: &FieldModel, i: u32, tw: (u8, u8)) -> CwResult<CheckOutcome> {
    let (q, r) = (t.tops()[0], t.tops()[1]);
    let got = t.nondiagonal(i, &Twist(vec![tw.0, tw.1]))?.group_type();
    let table = database::pq_pr_nondiagonal_table(q, r, i, tw);
    let want = table.group_type(field)?;
    Ok(CheckOutcome::new(
        format!("nondiagonal {} i={i} twist={}{}", t.name(), tw.0, tw.1),
        got == want,
        format!("derived {got}, table {table}"),
    ))
}
