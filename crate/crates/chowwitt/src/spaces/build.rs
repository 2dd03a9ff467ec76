//! Assemble the derived theory of a catalog space and relate it to the stored presentations.

use super::database::{self, TheoryKind};
use super::{Atom, SpaceExpr};
use crate::error::{CwError, CwResult};
use crate::graded::compare::{compare, ComparisonReport, Correspondence};
use crate::graded::{Poly, RingPresentation, Twist};
use crate::linalg::GroupType;
use crate::scalar::{shared, FieldModel, ScalarLabel};
use crate::stack::{twist_normalize, HypQuotient, LocTheory, PairTheory, Theory, TheoryModel};
use std::sync::Arc;

/// A derived theory together with how it was obtained.
#[derive(Clone)]
pub struct SpaceTheories {
    pub expr: SpaceExpr,
    pub field: FieldModel,
    pub bound: u32,
    pub theory: Arc<dyn Theory>,
    /// Collapsed factors and their orders.
    pub odd_sides: Vec<(usize, u64)>,
    pub derivation_log: Vec<String>,
}

impl SpaceTheories {
    pub fn pic_mod2_rank(&self) -> usize {
        self.expr.pic_mod2_rank()
    }

    /// Carrier image of a generator name, with collapsed twists normalized.
    pub fn image_of(&self, name: &str) -> CwResult<Poly> {
        let carrier = self.theory.carrier();
        if carrier.gen_index(name).is_none() {
            return Err(CwError::InvalidCorrespondence(format!("{} has no symbol {name}", self.theory.name())));
        }
        Ok(twist_normalize(carrier, &carrier.var(name), &self.odd_sides))
    }

    /// Correspondence from a presentation whose generators are named like carrier symbols.
    pub fn correspondence(&self, src: &RingPresentation) -> CwResult<Correspondence<Poly>> {
        if src.twist_rank != self.theory.twist_rank() {
            return Err(CwError::TwistMismatch(format!(
                "{} has twist rank {}, {} has {}",
                src.name,
                src.twist_rank,
                self.theory.name(),
                self.theory.twist_rank()
            )));
        }
        let images = src.generators.iter().map(|g| self.image_of(&g.name)).collect::<CwResult<Vec<_>>>()?;
        Ok(Correspondence::identity_twists(images, src.twist_rank))
    }

    /// Compare the stored presentation of `kind` with this theory through the bound.
    pub fn compare_with_database(&self, kind: TheoryKind) -> CwResult<ComparisonReport> {
        let src = database::stored_presentation(&self.expr, kind, &self.field)?;
        let corr = self.correspondence(&src)?;
        compare(&src, &TheoryModel(self.theory.clone()), &corr, self.bound)
    }
}

fn stable_or_projective(
    atoms: &[Atom],
    field: &FieldModel,
    bound: u32,
    log: &mut Vec<String>,
) -> CwResult<PairTheory> {
    if atoms.iter().all(|a| matches!(a, Atom::P(_))) {
        let tops: Vec<u32> = atoms.iter().map(|a| if let Atom::P(r) = a { *r } else { 0 }).collect();
        log.push(format!("fiber product over I-cohomology of projective spaces {tops:?}"));
        return PairTheory::projective(&tops, field, bound);
    }
    if atoms.iter().any(|a| matches!(a, Atom::P(_))) {
        return Err(CwError::OutOfScope("products of P(r) with classifying spaces".into()));
    }
    log.push(format!("stable limit of P^{} factors, {} of them", bound + 2, atoms.len()));
    PairTheory::stable(atoms.len(), field, bound)
}

/// Chow-Witt theory of a catalog space, computed through degree `bound`.
pub fn build_chow_witt(expr: &SpaceExpr, field: &FieldModel, bound: u32) -> CwResult<SpaceTheories> {
    let field = expr.checked_field(field)?;
    let mut log = Vec::new();
    let base = stable_or_projective(&expr.factors, &field, bound, &mut log)?;
    let mut theory: Arc<dyn Theory> = Arc::new(base);
    let mut odd_sides = Vec::new();
    // localize the second factor first so that U1 precedes U2 in pairs
    for (side, a) in expr.factors.iter().enumerate().rev() {
        if let Atom::Bmu(n) = a {
            log.push(format!("localize factor {} along e(O({n}))", side + 1));
            theory = Arc::new(LocTheory::new(theory, *n, side, &field)?);
            if n % 2 == 1 {
                odd_sides.push((side, *n));
            }
        }
    }
    Ok(SpaceTheories { expr: expr.clone(), field, bound, theory, odd_sides, derivation_log: log })
}

/// I-cohomology as the cokernel of the hyperbolic map.
pub fn build_i_cohomology(expr: &SpaceExpr, field: &FieldModel, bound: u32) -> CwResult<SpaceTheories> {
    let mut st = build_chow_witt(expr, field, bound)?;
    st.theory = Arc::new(HypQuotient::new(st.theory.clone())?);
    st.derivation_log.push("quotient by the image of the hyperbolic map".into());
    Ok(st)
}

/// `H^0(Bmu(m) x Bmu(n), W)` with its expected `W(k)`-basis.
#[derive(Clone, Debug)]
pub struct WittDegreeZero {
    pub group_type: GroupType,
    pub basis: Vec<String>,
    pub matches_basis: bool,
}

pub fn witt_degree0_product(m: u64, n: u64, field: &FieldModel) -> CwResult<WittDegreeZero> {
    let expr = SpaceExpr::pair(Atom::Bmu(m), Atom::Bmu(n));
    let st = build_chow_witt(&expr, field, 0)?;
    let s = st.theory.carrier().twist_rank;
    let g = st.theory.nondiagonal(0, &Twist::zero(s))?;
    let mut basis = vec!["1".to_string()];
    if m % 2 == 0 {
        basis.push("U1".into());
    }
    if n % 2 == 0 {
        basis.push("U2".into());
    }
    if m % 2 == 0 && n % 2 == 0 {
        basis.push("U1*U2".into());
    }
    let w = shared(ScalarLabel::W, &st.field)?.group.group_type();
    let expected = (0..basis.len()).fold(GroupType::trivial(), |acc, _| acc.sum(&w));
    let group_type = g.group_type();
    Ok(WittDegreeZero { matches_basis: group_type == expected, group_type, basis })
}

fn rename_factor(p: &RingPresentation, k: usize) -> RingPresentation {
    let map: Vec<(String, String)> =
        p.generators.iter().map(|g| (g.name.clone(), format!("{}{}", g.name, k + 1))).collect();
    let refs: Vec<(&str, &str)> = map.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    p.rename(&refs)
}

/// Tensor product of the stored Chow-Witt rings of two single factors.
pub fn kunneth_source(a: Atom, b: Atom, field: &FieldModel) -> CwResult<RingPresentation> {
    let expr = SpaceExpr::pair(a, b);
    let field = expr.checked_field(field)?;
    let pa = database::stored_presentation(&SpaceExpr::single(a), TheoryKind::ChowWitt, &field)?;
    let pb = database::stored_presentation(&SpaceExpr::single(b), TheoryKind::ChowWitt, &field)?;
    let mut t = rename_factor(&pa, 0).tensor_product(&rename_factor(&pb, 1))?;
    t.name = format!("CHW({a}) (x) CHW({b})");
    Ok(t)
}

/// Verdict of the Kunneth map `CH~(X) (x) CH~(Y) -> CH~(X x Y)` through the bound.
pub fn kunneth_verdict(a: Atom, b: Atom, field: &FieldModel, bound: u32) -> CwResult<ComparisonReport> {
    let src = kunneth_source(a, b, field)?;
    let st = build_chow_witt(&SpaceExpr::pair(a, b), field, bound)?;
    let corr = st.correspondence(&src)?;
    compare(&src, &TheoryModel(st.theory.clone()), &corr, bound)
}
