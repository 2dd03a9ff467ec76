//! Classifying spaces of `mu_n` as complements of the zero section of `O(n)`.
//!
//! The localization sequence gives, in each bidegree,
//! `CH~^{i-1}(B, L + O(n)) --e(O(n))--> CH~^i(B, L) --> CH~^i(X, L) --> H^i(B, K^MW_{i-1}, L + O(n))`,
//! and the last term is nonzero only in degree 0, where it splits off as `W(k)<U, ...>`.
//! For odd `n` the twist along the factor collapses and only canonical twists are computed.

use super::{
    check_canonical, check_homogeneous, e_name, euler_closed_form, factor_suffix, h_name, unit_twist, DerivedPiece,
    Theory,
};
use crate::error::{CwError, CwResult};
use crate::graded::{Annihilator, Bidegree, Exps, Generator, Poly, RingPresentation, Twist};
use crate::linalg::{hermite_basis, FpAbGroup, GroupHom, GroupType, IntMatrix};
use crate::scalar::{shared, FieldModel, ScalarLabel, ScalarRing};
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

pub struct LocTheory {
    name: String,
    base: Arc<dyn Theory>,
    n: u64,
    side: usize,
    sign: i64,
    carrier: RingPresentation,
    collapsed: Vec<usize>,
    /// Carrier index of `U_side` (even `n` only).
    u: Option<usize>,
    /// Carrier index of the `U` of the other factor, if the base has one.
    u_other: Option<usize>,
    w: Arc<ScalarRing>,
    pieces: Mutex<HashMap<Bidegree, Arc<LocPiece>>>,
}

struct LocPiece {
    public: Arc<DerivedPiece>,
    base_ngens: usize,
    tail: usize,
}

impl LocTheory {
    /// Replace factor `side` of `base` (a `BGm` factor) by `Bmu(n)`.
    pub fn new(base: Arc<dyn Theory>, n: u64, side: usize, field: &FieldModel) -> CwResult<Self> {
        Self::with_sign(base, n, side, field, 1)
    }

    /// As [`LocTheory::new`] with the Euler multiplier scaled by `sign = +-1`.
    pub fn with_sign(base: Arc<dyn Theory>, n: u64, side: usize, field: &FieldModel, sign: i64) -> CwResult<Self> {
        if n == 0 {
            return Err(CwError::Param("Bmu(n) needs n >= 1".into()));
        }
        let s = base.carrier().twist_rank;
        if side >= s || base.collapsed().contains(&side) {
            return Err(CwError::OutOfScope(format!("{}: factor {} is not a BGm factor", base.name(), side + 1)));
        }
        let mut carrier = base.carrier().clone();
        let mut collapsed = base.collapsed().to_vec();
        let mut u = None;
        let u_other = carrier.gen_index(&format!("U{}", factor_suffix(s, 1 - side.min(1))))
            .filter(|_| s == 2)
            .filter(|&k| carrier.generators[k].name != format!("U{}", factor_suffix(s, side)));
        if n % 2 == 0 {
            let name = format!("U{}", factor_suffix(s, side));
            carrier.generators.push(Generator::new(&name, 0, &vec![0; s], Annihilator::None));
            u = Some(carrier.generators.len() - 1);
        } else {
            collapsed.push(side);
            collapsed.sort();
        }
        let mut factors: Vec<String> = base.name().split(" x ").map(str::to_string).collect();
        if factors.len() == s {
            factors[side] = format!("Bmu({n})");
        }
        let name = factors.join(" x ");
        carrier.name = format!("carrier({name})");
        Ok(LocTheory {
            name,
            base,
            n,
            side,
            sign,
            carrier,
            collapsed,
            u,
            u_other,
            w: shared(ScalarLabel::W, field)?,
            pieces: Mutex::new(HashMap::new()),
        })
    }

    pub fn order(&self) -> u64 {
        self.n
    }

    pub fn side(&self) -> usize {
        self.side
    }

    pub fn base(&self) -> &Arc<dyn Theory> {
        &self.base
    }

    /// Euler class of `O(n)` along the factor, in base carrier symbols.
    pub fn euler(&self) -> Poly {
        euler_closed_form(self.base.carrier(), self.side, self.n as i64).scale_int(&BigInt::from(self.sign))
    }

    fn euler_twist(&self) -> Twist {
        let s = self.base.carrier().twist_rank;
        if self.n % 2 == 1 {
            unit_twist(s, self.side)
        } else {
            Twist::zero(s)
        }
    }

    /// Carrier polynomials whose coordinates generate the base group at `d`.
    fn spanning(&self, d: &Bidegree) -> CwResult<Vec<Poly>> {
        let bc = self.base.carrier();
        let target = self.base.piece(d)?;
        for full in [false, true] {
            let mut polys = Vec::new();
            for e in base_monomials(bc, d, full) {
                for si in 0..bc.scalar.dim() {
                    polys.push(Poly::monomial(e.clone(), bc.scalar.basis(si)));
                }
            }
            let rows: Vec<Vec<BigInt>> = polys.iter().map(|p| self.base.coords(d, p)).collect::<CwResult<_>>()?;
            let hom = GroupHom::new(
                Arc::new(FpAbGroup::free(rows.len())),
                target.group.clone(),
                IntMatrix::from_rows(target.group.ngens(), rows),
            );
            if hom.is_surjective() {
                return Ok(polys);
            }
        }
        Err(CwError::NoRepresentative(format!("{}: carrier monomials do not span {d}", self.base.name())))
    }

    fn loc_piece(&self, d: &Bidegree) -> CwResult<Arc<LocPiece>> {
        check_canonical(self, d)?;
        if let Some(p) = self.pieces.lock().expect("cache").get(d) {
            return Ok(p.clone());
        }
        let p = Arc::new(self.compute(d)?);
        self.pieces.lock().expect("cache").insert(d.clone(), p.clone());
        Ok(p)
    }

    fn compute(&self, d: &Bidegree) -> CwResult<LocPiece> {
        let base_piece = self.base.piece(d)?;
        let m = base_piece.group.ngens();
        let mut rels = base_piece.group.relations().clone();
        let bc = self.base.carrier();
        let et = self.euler_twist();
        if d.degree >= 1 {
            let prev = Bidegree::new(d.degree - 1, d.twist.add(&et));
            let euler = self.euler();
            for x in self.spanning(&prev)? {
                rels.push_row(self.base.coords(d, &bc.mul(&euler, &x))?);
            }
        }
        let quotient = FpAbGroup::new(m, hermite_basis(&rels));

        // degree-0 tail H^0(B, W, L + O(n)), split by U
        let tail_group = self.base.nondiagonal(d.degree, &d.twist.add(&et))?;
        let mut names = base_piece.names.clone();
        let mut group = quotient;
        let mut tail = 0;
        if !tail_group.is_trivial() {
            let k = 1 + usize::from(self.u_other.is_some());
            let w_type = self.w.group.group_type();
            let expected = (0..k).fold(GroupType::trivial(), |acc, _| acc.sum(&w_type));
            let certified = self.n % 2 == 0 && d.degree == 0 && d.twist.is_trivial();
            if !certified || tail_group.group_type() != expected {
                return Err(CwError::TailUnknown(format!(
                    "{}: H^{}(K^MW) of {} is {} in {}",
                    self.name,
                    d.degree,
                    self.base.name(),
                    tail_group.group_type(),
                    d
                )));
            }
            let u_name = &self.carrier.generators[self.u.expect("even n")].name;
            for j in 0..k {
                let label = if j == 0 {
                    u_name.clone()
                } else {
                    format!("{u_name}*{}", self.carrier.generators[self.u_other.expect("k > 1")].name)
                };
                for sn in &self.w.names {
                    names.push(if sn == "<1>" { label.clone() } else { format!("{sn}*{label}") });
                }
                group = group.direct_sum(&self.w.group);
            }
            tail = k;
        }
        let chow = self.chow_group(d.degree);
        let rho = base_piece.rho.as_ref().map(|r| {
            let mut mat = r.matrix.clone();
            for _ in 0..tail * self.w.dim() {
                mat.push_row(vec![BigInt::zero(); chow.ngens()]);
            }
            GroupHom::new(Arc::new(group.clone()), chow.clone(), mat)
        });
        let public = Arc::new(DerivedPiece {
            bidegree: d.clone(),
            group: Arc::new(group),
            rho,
            names,
            injectivity_certified: base_piece.injectivity_certified,
        });
        Ok(LocPiece { public, base_ngens: m, tail })
    }

    /// Rewrite the `U_side` terms: `U^a = (-2)^{a-1} U`, `H U = 0`, `U e_j` by the
    /// stored rule, and `U`-only terms into the tail.
    fn reduce_u(&self, p: &Poly, tail_slots: usize) -> CwResult<(Poly, Vec<BigInt>)> {
        let bc = self.base.carrier();
        let nb = bc.ngens();
        let wd = self.w.dim();
        let mut base_poly = Poly::zero();
        let mut tail = vec![BigInt::zero(); tail_slots * wd];
        let strip = |e: &Exps| -> Exps { e[..nb].to_vec() };
        let Some(u) = self.u else {
            return Ok((p.clone(), tail));
        };
        for (e, s) in &p.terms {
            let a = e[u];
            if a == 0 {
                base_poly.add_term(strip(e), s.clone());
                continue;
            }
            let mut coef = BigInt::from(-2).pow(a - 1);
            let mut rest = e.clone();
            rest[u] = 0;
            let gens = &self.carrier.generators;
            if rest.iter().zip(gens).any(|(x, g)| *x > 0 && g.name.starts_with('H')) {
                continue;
            }
            if let Some(j) = (0..nb).find(|&j| rest[j] > 0 && gens[j].name.starts_with('e')) {
                rest[j] -= 1;
                let rule = self.u_rule(&gens[j].name);
                let m = Poly::monomial(strip(&rest), s.iter().map(|x| x * &coef).collect());
                base_poly = base_poly.add(&bc.mul(&m, &rule));
                continue;
            }
            if rest.iter().zip(gens).any(|(x, g)| *x > 0 && g.degree > 0) {
                return Err(CwError::NoRepresentative(format!(
                    "no rule for {}",
                    self.carrier.mono_name(e)
                )));
            }
            let mut slot = 0;
            if let Some(o) = self.u_other {
                if rest[o] > 0 {
                    coef *= BigInt::from(-2).pow(rest[o] - 1);
                    slot = 1;
                }
            }
            if slot >= tail_slots {
                return Err(CwError::TwistMismatch(format!("{} has no tail here", self.carrier.mono_name(e))));
            }
            for (k, x) in s.iter().enumerate() {
                tail[slot * wd + k] += x * &coef;
            }
        }
        Ok((base_poly, tail))
    }

    /// `U_f e_f = n e_f`, `U_f e_o = (n/2) H_3 e_f`, `U_f e_3 = (n/2) H_o e_f`.
    fn u_rule(&self, e: &str) -> Poly {
        let bc = self.base.carrier();
        let s = bc.twist_rank;
        let uf = unit_twist(s, self.side);
        let ef = bc.var(&e_name(&uf).expect("unit"));
        let half = BigInt::from(self.n / 2);
        if e == e_name(&uf).expect("unit") {
            return ef.scale_int(&BigInt::from(self.n));
        }
        let other = unit_twist(s, 1 - self.side);
        let h = if e == e_name(&other).expect("unit") {
            h_name(&Twist(vec![1, 1])).expect("H3")
        } else {
            h_name(&other).expect("unit")
        };
        bc.mul(&bc.var(&h), &ef).scale_int(&half)
    }
}

/// Base carrier monomials of bidegree `d`: positive-degree part arbitrary (with
/// `e_3` linear unless `full`), degree-zero part `1`, a single `H`, or a product of distinct `U`s.
fn base_monomials(bc: &RingPresentation, d: &Bidegree, full: bool) -> Vec<Exps> {
    let ng = bc.ngens();
    let zero_gens: Vec<usize> = (0..ng).filter(|&k| bc.generators[k].degree == 0).collect();
    let mut zero_parts: Vec<Exps> = vec![vec![0; ng]];
    let hs: Vec<usize> = zero_gens.iter().copied().filter(|&k| bc.generators[k].name.starts_with('H')).collect();
    let us: Vec<usize> = zero_gens.iter().copied().filter(|&k| bc.generators[k].name.starts_with('U')).collect();
    for &h in &hs {
        let mut e = vec![0; ng];
        e[h] = 1;
        zero_parts.push(e);
    }
    for mask in 1..(1usize << us.len()) {
        let mut e = vec![0; ng];
        for (b, &k) in us.iter().enumerate() {
            if mask >> b & 1 == 1 {
                e[k] = 1;
            }
        }
        zero_parts.push(e);
    }
    let pos: Vec<usize> = (0..ng).filter(|&k| bc.generators[k].degree > 0).collect();
    let mut pos_parts = Vec::new();
    let mut cur = vec![0u32; ng];
    fn go(bc: &RingPresentation, pos: &[usize], k: usize, left: u32, full: bool, cur: &mut Exps, out: &mut Vec<Exps>) {
        if k == pos.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let g = pos[k];
        let deg = bc.generators[g].degree;
        let mut max = left / deg;
        if !full && bc.generators[g].name == "e3" {
            max = max.min(1);
        }
        for a in 0..=max {
            cur[g] = a;
            go(bc, pos, k + 1, left - a * deg, full, cur, out);
        }
        cur[g] = 0;
    }
    go(bc, &pos, 0, d.degree, full, &mut cur, &mut pos_parts);
    let mut out = Vec::new();
    for z in &zero_parts {
        for p in &pos_parts {
            let e: Exps = z.iter().zip(p).map(|(a, b)| a + b).collect();
            if bc.bidegree_of(&e).twist == d.twist {
                out.push(e);
            }
        }
    }
    out
}

impl Theory for LocTheory {
    fn name(&self) -> String {
        self.name.clone()
    }

    fn carrier(&self) -> &RingPresentation {
        &self.carrier
    }

    fn collapsed(&self) -> &[usize] {
        &self.collapsed
    }

    fn bound(&self) -> u32 {
        self.base.bound()
    }

    fn piece(&self, d: &Bidegree) -> CwResult<Arc<DerivedPiece>> {
        Ok(self.loc_piece(d)?.public.clone())
    }

    fn coords(&self, d: &Bidegree, p: &Poly) -> CwResult<Vec<BigInt>> {
        check_homogeneous(&self.carrier, d, p)?;
        let lp = self.loc_piece(d)?;
        let (bp, tail) = self.reduce_u(p, lp.tail)?;
        let mut v = self.base.coords(d, &bp)?;
        debug_assert_eq!(v.len(), lp.base_ngens);
        v.extend(tail);
        Ok(v)
    }

    fn chow_monomials(&self, i: u32) -> Vec<Vec<u32>> {
        self.base.chow_monomials(i)
    }

    fn chow_group(&self, i: u32) -> Arc<FpAbGroup> {
        let base = self.base.chow_group(i);
        let basis = self.chow_monomials(i);
        let mut rels = base.relations().clone();
        if i >= 1 {
            for beta in self.base.chow_monomials(i - 1) {
                let mut alpha = beta.clone();
                alpha[self.side] += 1;
                if let Some(k) = basis.iter().position(|a| *a == alpha) {
                    let mut row = vec![BigInt::zero(); basis.len()];
                    row[k] = BigInt::from(self.n);
                    rels.push_row(row);
                }
            }
        }
        Arc::new(FpAbGroup::new(basis.len(), hermite_basis(&rels)))
    }

    /// The localization sequence with both outer terms nondiagonal on the base;
    /// in degree 0 the extension of free `W(k)`-modules splits.
    fn nondiagonal(&self, i: u32, twist: &Twist) -> CwResult<Arc<FpAbGroup>> {
        let left = self.base.nondiagonal(i, twist)?;
        let right = self.base.nondiagonal(i, &twist.add(&self.euler_twist()))?;
        if i > 0 {
            if left.is_trivial() && right.is_trivial() {
                return Ok(Arc::new(FpAbGroup::trivial()));
            }
            return Err(CwError::OutOfScope(format!("{}: nondiagonal group in degree {i}", self.name)));
        }
        Ok(Arc::new(left.direct_sum(&right)))
    }
}
