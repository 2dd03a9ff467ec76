//! Singular cohomology of real points from cellular cochains, used as an
//! independent oracle for I-cohomology over the reals.

use crate::error::{CwError, CwResult};
use crate::graded::compare::{induced_hom, Correspondence, Piece};
use crate::graded::{Annihilator, Bidegree, Generator, RingPresentation, Twist};
use crate::linalg::{solve_in_hermite, FpAbGroup, GroupHom, GroupType, IntMatrix};
use crate::scalar::{shared, FieldKind, FieldModel, ScalarLabel};
use crate::spaces::{build_i_cohomology, Atom, SpaceExpr};
use crate::stack::TheoryModel;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;
use std::fmt;
use std::sync::Arc;

/// A finite cochain complex of free abelian groups, one entry per dimension.
#[derive(Clone, Debug)]
pub struct CellModel {
    pub cells: Vec<usize>,
    /// `d[k]: C^k -> C^{k+1}`, acting on row vectors.
    pub d: Vec<IntMatrix>,
}

impl CellModel {
    pub fn point() -> Self {
        CellModel { cells: vec![1], d: vec![] }
    }

    /// `RP^N` with constant (`twisted = false`) or sign coefficients.
    /// The cochain differential `C^k -> C^{k+1}` is `1 + (-1)^{k+1}` untwisted and `1 + (-1)^k` twisted.
    pub fn rp(n: u32, twisted: bool) -> Self {
        let d = (0..n)
            .map(|k| {
                let two = (k % 2 == 1) != twisted;
                IntMatrix::from_i64_rows(1, &[vec![if two { 2 } else { 0 }]])
            })
            .collect();
        CellModel { cells: vec![1; n as usize + 1], d }
    }

    pub fn dim(&self) -> usize {
        self.cells.len() - 1
    }

    fn differential(&self, k: usize) -> IntMatrix {
        let rows = self.cells.get(k).copied().unwrap_or(0);
        let cols = self.cells.get(k + 1).copied().unwrap_or(0);
        self.d.get(k).cloned().unwrap_or_else(|| IntMatrix::zeros(rows, cols))
    }

    pub fn disjoint(&self, other: &CellModel) -> CellModel {
        let n = self.dim().max(other.dim());
        let cells = (0..=n).map(|k| self.cells.get(k).unwrap_or(&0) + other.cells.get(k).unwrap_or(&0)).collect();
        let d = (0..n).map(|k| IntMatrix::block_diag(&self.differential(k), &other.differential(k))).collect();
        CellModel { cells, d }
    }

    /// Cellular cochains of the product: `d(x (x) y) = dx (x) y + (-1)^p x (x) dy`.
    pub fn product(&self, other: &CellModel) -> CellModel {
        let n = self.dim() + other.dim();
        // basis of C^k: (p, i, j) with i < cells_a[p], j < cells_b[k - p]
        let basis = |k: usize| -> Vec<(usize, usize, usize)> {
            let mut out = Vec::new();
            for p in 0..=k {
                let (Some(&a), Some(&b)) = (self.cells.get(p), other.cells.get(k - p)) else { continue };
                for i in 0..a {
                    for j in 0..b {
                        out.push((p, i, j));
                    }
                }
            }
            out
        };
        let bases: Vec<Vec<(usize, usize, usize)>> = (0..=n + 1).map(basis).collect();
        let cells = (0..=n).map(|k| bases[k].len()).collect();
        let d = (0..n)
            .map(|k| {
                let src = &bases[k];
                let tgt = &bases[k + 1];
                let index = |x: &(usize, usize, usize)| tgt.iter().position(|y| y == x).expect("basis cell");
                let mut m = IntMatrix::zeros(src.len(), tgt.len());
                for (r, &(p, i, j)) in src.iter().enumerate() {
                    let q = k - p;
                    if p < self.dim() {
                        let da = self.differential(p);
                        for i2 in 0..self.cells[p + 1] {
                            let c = da.get(i, i2).clone();
                            if !c.is_zero() {
                                let col = index(&(p + 1, i2, j));
                                let v = m.get(r, col) + c;
                                m.set(r, col, v);
                            }
                        }
                    }
                    if q < other.dim() {
                        let db = other.differential(q);
                        let sign = if p % 2 == 0 { BigInt::one() } else { -BigInt::one() };
                        for j2 in 0..other.cells[q + 1] {
                            let c = db.get(j, j2).clone();
                            if !c.is_zero() {
                                let col = index(&(p, i, j2));
                                let v = m.get(r, col) + &sign * c;
                                m.set(r, col, v);
                            }
                        }
                    }
                }
                m
            })
            .collect();
        CellModel { cells, d }
    }

    /// `d^{k+1} d^k = 0` for all `k`.
    pub fn is_complex(&self) -> bool {
        (0..self.dim().saturating_sub(1)).all(|k| self.differential(k).mul(&self.differential(k + 1)).is_zero())
    }

    /// `H^k = ker d^k / im d^{k-1}`.
    pub fn cohomology(&self, k: usize) -> FpAbGroup {
        let n = self.cells.get(k).copied().unwrap_or(0);
        if n == 0 {
            return FpAbGroup::trivial();
        }
        let free = Arc::new(FpAbGroup::free(n));
        let next = Arc::new(FpAbGroup::free(self.cells.get(k + 1).copied().unwrap_or(0)));
        let dk = GroupHom::new(free, next, self.differential(k));
        let basis = dk.kernel_lattice();
        let rels: Vec<Vec<BigInt>> = if k == 0 {
            vec![]
        } else {
            self.differential(k - 1)
                .rows_iter()
                .map(|r| solve_in_hermite(&basis, r).expect("d^2 = 0"))
                .collect()
        };
        FpAbGroup::new(basis.nrows(), IntMatrix::from_rows(basis.nrows(), rels))
    }
}

/// `H^i(RP^N; Z)` or with sign coefficients, for `i = 0..=N`.
pub fn rp_cohomology(n: u32, twisted: bool) -> Vec<GroupType> {
    let m = CellModel::rp(n, twisted);
    (0..=n as usize).map(|k| m.cohomology(k).group_type()).collect()
}

fn tensor_types(a: &GroupType, b: &GroupType) -> GroupType {
    let mut orders: Vec<BigInt> = Vec::new();
    for _ in 0..a.free_rank * b.free_rank {
        orders.push(BigInt::zero());
    }
    for x in &a.torsion {
        orders.extend(std::iter::repeat(x.clone()).take(b.free_rank));
    }
    for y in &b.torsion {
        orders.extend(std::iter::repeat(y.clone()).take(a.free_rank));
    }
    for x in &a.torsion {
        for y in &b.torsion {
            orders.push(x.gcd(y));
        }
    }
    GroupType::from_orders(&orders)
}

fn tor_types(a: &GroupType, b: &GroupType) -> GroupType {
    let orders: Vec<BigInt> = a.torsion.iter().flat_map(|x| b.torsion.iter().map(move |y| x.gcd(y))).collect();
    GroupType::from_orders(&orders)
}

/// Cohomology of a product from the cohomology of the factors:
/// `H^n = sum_{p+q=n} H^p (x) H^q  +  sum_{p+q=n+1} Tor(H^p, H^q)`.
pub fn product_cohomology(a: &[GroupType], b: &[GroupType]) -> Vec<GroupType> {
    let top = (a.len() + b.len()).saturating_sub(2);
    let zero = GroupType::trivial();
    let get = |v: &[GroupType], k: usize| v.get(k).cloned().unwrap_or_else(|| zero.clone());
    (0..=top)
        .map(|n| {
            let mut acc = GroupType::trivial();
            for p in 0..=n {
                acc = acc.sum(&tensor_types(&get(a, p), &get(b, n - p)));
            }
            for p in 0..=n + 1 {
                acc = acc.sum(&tor_types(&get(a, p), &get(b, n + 1 - p)));
            }
            acc
        })
        .collect()
}

/// Cellular model of the real points of a catalog space with the coefficient system of `twist`
/// (one bit per factor with nontrivial `Pic/2`), truncated at dimension `dim`.
pub fn real_points(expr: &SpaceExpr, twist: &Twist, dim: u32) -> CwResult<CellModel> {
    if twist.len() != expr.pic_mod2_rank() {
        return Err(CwError::TwistMismatch(format!("{expr} has twist rank {}", expr.pic_mod2_rank())));
    }
    let mut bits = twist.0.iter();
    let mut model: Option<CellModel> = None;
    for a in &expr.factors {
        let f = match a {
            Atom::P(r) => CellModel::rp(*r, *bits.next().expect("rank checked") == 1),
            Atom::BGm => CellModel::rp(dim, *bits.next().expect("rank checked") == 1),
            Atom::Bmu(n) if n % 2 == 1 => CellModel::point(),
            Atom::Bmu(_) => {
                let t = *bits.next().expect("rank checked") == 1;
                CellModel::rp(dim, t).disjoint(&CellModel::rp(dim, t))
            }
        };
        model = Some(match model {
            None => f,
            Some(m) => m.product(&f),
        });
    }
    Ok(model.expect("at least one factor"))
}

/// Range of `j` (relative to `i`) in which the real cycle class map is known to be an isomorphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CycleClassRange {
    /// Cellular spaces and their stable limits: `j >= i`.
    Cellular,
    /// `j >= i + k`.
    Shifted(u32),
    /// `j >= 2i + k`.
    Doubled(u32),
}

impl CycleClassRange {
    pub fn of(expr: &SpaceExpr) -> Self {
        let any_mu = expr.factors.iter().any(|a| matches!(a, Atom::Bmu(_)));
        match expr.factors.as_slice() {
            _ if !any_mu => CycleClassRange::Cellular,
            [_] => CycleClassRange::Shifted(3),
            [Atom::BGm, _] | [_, Atom::BGm] => CycleClassRange::Doubled(5),
            _ => CycleClassRange::Doubled(6),
        }
    }

    pub fn contains(&self, i: u32, j: u32) -> bool {
        match self {
            CycleClassRange::Cellular => j >= i,
            CycleClassRange::Shifted(k) => j >= i + k,
            CycleClassRange::Doubled(k) => j >= 2 * i + k,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum CycleClassVerdict {
    Match,
    Mismatch,
    NotApplicable,
}

impl fmt::Display for CycleClassVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CycleClassVerdict::Match => "applicable+match",
            CycleClassVerdict::Mismatch => "applicable+MISMATCH",
            CycleClassVerdict::NotApplicable => "not-applicable",
        };
        write!(f, "{s}")
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CycleClassReport {
    pub space: String,
    pub degree: u32,
    pub j: u32,
    pub twist: String,
    pub verdict: CycleClassVerdict,
    /// Engine group, when it is computable at `(i, j)`.
    pub engine: Option<String>,
    pub singular: String,
    /// Whether the two groups agree, regardless of applicability.
    pub groups_agree: Option<bool>,
}

/// Engine value of `H^i(X, I^j, L)` over the reals. For `j < i` this is the
/// non-diagonal group; for `j >= i` on cellular spaces it is the diagonal group,
/// which the cycle class map identifies with every `j >= i`; in degree 0 it is `H^0(W)`.
fn engine_group(expr: &SpaceExpr, i: u32, j: u32, twist: &Twist, bound: u32) -> CwResult<Option<GroupType>> {
    let st = build_i_cohomology(expr, &FieldModel::real(), bound)?;
    let t = &st.theory;
    let carrier_twist = t.lift_twist(twist)?;
    if j < i {
        return Ok(Some(t.nondiagonal(i, &carrier_twist)?.group_type()));
    }
    if i == 0 {
        return Ok(Some(t.nondiagonal(0, &carrier_twist)?.group_type()));
    }
    if j == i || CycleClassRange::of(expr) == CycleClassRange::Cellular {
        return Ok(Some(t.piece(&Bidegree::new(i, carrier_twist))?.group.group_type()));
    }
    Ok(None)
}

/// Compare `H^i(X, I^j, L)` with `H^i(X(R); Z(L))` where the cycle class map is an isomorphism.
pub fn cycle_class_check(expr: &SpaceExpr, i: u32, j: u32, twist: &Twist) -> CwResult<CycleClassReport> {
    let bound = i.max(1);
    let model = real_points(expr, twist, i + 2)?;
    let singular = model.cohomology(i as usize).group_type();
    let engine = engine_group(expr, i, j, twist, bound)?;
    let agree = engine.as_ref().map(|e| *e == singular);
    let verdict = match (CycleClassRange::of(expr).contains(i, j), agree) {
        (true, Some(true)) => CycleClassVerdict::Match,
        (true, Some(false)) => CycleClassVerdict::Mismatch,
        _ => CycleClassVerdict::NotApplicable,
    };
    Ok(CycleClassReport {
        space: expr.to_string(),
        degree: i,
        j,
        twist: twist.bits(),
        verdict,
        engine: engine.map(|e| e.to_string()),
        singular: singular.to_string(),
        groups_agree: agree,
    })
}

/// `Z[lambda, mu, nu]/(2 lambda, 2 mu, 2 nu, nu^2 + lambda^2 mu + lambda mu^2)` with `Z = W(R)`.
pub fn real_bgm2_ring() -> CwResult<RingPresentation> {
    let w = shared(ScalarLabel::W, &FieldModel::real())?;
    let gens = vec![
        Generator::new("lambda", 2, &[], Annihilator::None),
        Generator::new("mu", 2, &[], Annihilator::None),
        Generator::new("nu", 3, &[], Annihilator::None),
    ];
    let p = RingPresentation::new("H(BGm(R) x BGm(R))", w, 0, gens);
    Ok(p.with_relations(&["2*lambda", "2*mu", "2*nu", "nu^2 + lambda^2*mu + lambda*mu^2"]))
}

#[derive(Clone, Debug, Serialize)]
pub struct RingCheckRow {
    pub degree: u32,
    pub ring: String,
    pub engine: String,
    pub singular: String,
    pub iso: bool,
}

/// The untwisted diagonal I-cohomology of `BGm x BGm` over the reals against the
/// ring above under `lambda -> e1^2`, `mu -> e2^2`, `nu -> e1 e2 e3`, and additively
/// against the cellular cochains of `RP^N x RP^N`.
pub fn real_bgm2_ring_check(max_degree: u32) -> CwResult<Vec<RingCheckRow>> {
    let expr = SpaceExpr::pair(Atom::BGm, Atom::BGm);
    let st = build_i_cohomology(&expr, &FieldModel::real(), max_degree)?;
    let src = real_bgm2_ring()?;
    let carrier = st.theory.carrier();
    let images = vec![carrier.p("e1^2"), carrier.p("e2^2"), carrier.p("e1*e2*e3")];
    let corr = Correspondence { images, twist_map: vec![vec![]; 2] };
    let model = TheoryModel(st.theory.clone());
    let cells = CellModel::rp(max_degree + 2, false).product(&CellModel::rp(max_degree + 2, false));
    let mut rows = Vec::new();
    for degree in 0..=max_degree {
        let d = Bidegree::new(degree, Twist::zero(0));
        let (r, piece, hom) = induced_hom(&src, &model, &corr, &d, max_degree)?;
        rows.push(RingCheckRow {
            degree,
            ring: r.group().group_type().to_string(),
            engine: piece.group().group_type().to_string(),
            singular: cells.cohomology(degree as usize).group_type().to_string(),
            iso: hom.is_isomorphism() && cells.cohomology(degree as usize).group_type() == r.group().group_type(),
        });
    }
    Ok(rows)
}

/// Whether the oracle is meaningful for this field (real closed only).
pub fn oracle_field_ok(field: &FieldModel) -> bool {
    matches!(field.kind, FieldKind::RealClosed)
}
