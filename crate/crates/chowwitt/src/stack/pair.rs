//! Projective spaces, products of two, and their stable limits `BGm`, `BGm x BGm`.
//!
//! In bidegree `(i, L)` the Chow-Witt group is the fiber product of
//! `rho~: H^i(I^i, L) -> Ch^i` and `ker(d_L: CH^i -> H^{i+1}(I^{i+1}, L)) -> Ch^i`,
//! where `d_L(c^a) = e^a * e_{a + L}` and `e_0 = 0`.

use super::{check_canonical, check_homogeneous, chow_label, exponent_vectors, format_combination, DerivedPiece, Theory};
use crate::error::{CwError, CwResult};
use crate::graded::{Annihilator, Bidegree, Exps, Generator, Poly, Realization, RingPresentation, Twist};
use crate::linalg::{fiber_product, hermite_basis, solve_in_hermite, FpAbGroup, GroupHom, IntMatrix};
use crate::scalar::{shared, FieldModel, ScalarLabel, ScalarRing};
use crate::spaces::database;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Role {
    H,
    /// Euler class with Chow image `sum_{f in t} c_f`.
    E(Twist),
    /// Orientation class of factor `f`, Chow image `c_f^{top_f}`.
    R(usize),
}

pub struct PairTheory {
    name: String,
    tops: Vec<u32>,
    stable: bool,
    bound: u32,
    hi: RingPresentation,
    hi_roles: Vec<Role>,
    carrier: RingPresentation,
    carrier_roles: Vec<Role>,
    /// Carrier generator to `hi` generator.
    to_hi: Vec<Option<usize>>,
    gw: Arc<ScalarRing>,
    w: Arc<ScalarRing>,
    realizations: Mutex<HashMap<Bidegree, Arc<Realization>>>,
    pieces: Mutex<HashMap<Bidegree, Arc<PairPiece>>>,
}

struct PairPiece {
    public: Arc<DerivedPiece>,
    real: Arc<Realization>,
    /// Hermite basis of `ker d_L` inside `CH^i`.
    k_basis: IntMatrix,
    /// Hermite basis of the fiber product inside `A (+) K`.
    p_basis: IntMatrix,
    rho_tilde: GroupHom,
    chow_index: HashMap<Vec<u32>, usize>,
}

fn role_of(name: &str, s: usize) -> Role {
    let digit = |c: char| c.to_digit(10).map(|d| d as usize);
    let last = name.chars().last().and_then(digit);
    match name.chars().next() {
        Some('H') => Role::H,
        Some('R') => Role::R(last.map(|d| d - 1).unwrap_or(0)),
        Some('e') => {
            let t = match (s, last) {
                (1, _) => Twist(vec![1]),
                (_, Some(1)) => Twist(vec![1, 0]),
                (_, Some(2)) => Twist(vec![0, 1]),
                _ => Twist(vec![1, 1]),
            };
            Role::E(t)
        }
        _ => panic!("unexpected carrier symbol {name}"),
    }
}

impl PairTheory {
    /// `P^r` or `P^q x P^r`.
    pub fn projective(tops: &[u32], field: &FieldModel, bound: u32) -> CwResult<Self> {
        Self::build(tops.to_vec(), false, field, bound)
    }

    /// `BGm` (one factor) or `BGm x BGm`, approximated by projective spaces of
    /// dimension `bound + 2`.
    pub fn stable(factors: usize, field: &FieldModel, bound: u32) -> CwResult<Self> {
        Self::build(vec![bound + 2; factors], true, field, bound)
    }

    fn build(tops: Vec<u32>, stable: bool, field: &FieldModel, bound: u32) -> CwResult<Self> {
        let s = tops.len();
        let hi = match tops.as_slice() {
            [r] => database::projective_i(*r, field)?,
            [q, r] => database::pq_pr_i(*q, *r, field)?,
            _ => return Err(CwError::Arity(format!("{s} factors"))),
        };
        let gw = shared(ScalarLabel::GW, field)?;
        let w = shared(ScalarLabel::W, field)?;
        let name = match (stable, s) {
            (true, 1) => "BGm".to_string(),
            (true, _) => "BGm x BGm".to_string(),
            (false, _) => tops.iter().map(|r| format!("P({r})")).collect::<Vec<_>>().join(" x "),
        };
        let mut gens = Vec::new();
        if s == 1 {
            gens.push(Generator::new("H", 0, &[1], Annihilator::None));
            gens.push(Generator::new("e", 1, &[1], Annihilator::None));
            if !stable {
                gens.push(Generator::new("R", tops[0], &[((tops[0] + 1) % 2) as u8], Annihilator::None));
            }
        } else {
            for (n, t) in [("1", [1u8, 0]), ("2", [0, 1]), ("3", [1, 1])] {
                gens.push(Generator::new(&format!("H{n}"), 0, &t, Annihilator::None));
            }
            for (n, t) in [("1", [1u8, 0]), ("2", [0, 1]), ("3", [1, 1])] {
                gens.push(Generator::new(&format!("e{n}"), 1, &t, Annihilator::None));
            }
            if !stable {
                gens.push(Generator::new("R1", tops[0], &[((tops[0] + 1) % 2) as u8, 0], Annihilator::None));
                gens.push(Generator::new("R2", tops[1], &[0, ((tops[1] + 1) % 2) as u8], Annihilator::None));
            }
        }
        let mut carrier = RingPresentation::new(&format!("carrier({name})"), gw.clone(), s, gens);
        carrier.graded_commutative = false;
        let carrier_roles = carrier.generators.iter().map(|g| role_of(&g.name, s)).collect();
        let hi_roles = hi.generators.iter().map(|g| role_of(&g.name, s)).collect();
        let to_hi = carrier.generators.iter().map(|g| hi.gen_index(&g.name)).collect();
        Ok(PairTheory {
            name,
            tops,
            stable,
            bound,
            hi,
            hi_roles,
            carrier,
            carrier_roles,
            to_hi,
            gw,
            w,
            realizations: Mutex::new(HashMap::new()),
            pieces: Mutex::new(HashMap::new()),
        })
    }

    pub fn is_stable(&self) -> bool {
        self.stable
    }

    pub fn tops(&self) -> &[u32] {
        &self.tops
    }

    /// The I-cohomology presentation the fiber product is built on.
    pub fn hi(&self) -> &RingPresentation {
        &self.hi
    }

    fn check_degree(&self, degree: u32) -> CwResult<()> {
        if degree <= self.bound {
            Ok(())
        } else if self.stable {
            Err(CwError::BeyondValidity { degree, margin: self.bound })
        } else {
            Err(CwError::DegreeBoundExceeded { requested: degree, bound: self.bound })
        }
    }

    pub fn realization(&self, d: &Bidegree) -> CwResult<Arc<Realization>> {
        if let Some(r) = self.realizations.lock().expect("cache").get(d) {
            return Ok(r.clone());
        }
        let r = Arc::new(self.hi.realize(d, self.bound + 1)?);
        self.realizations.lock().expect("cache").insert(d.clone(), r.clone());
        Ok(r)
    }

    /// Chow expansion of a monomial given by roles and exponents, truncated at the tops.
    fn ch_expand(&self, roles: &[Role], exps: &[u32]) -> BTreeMap<Vec<u32>, BigInt> {
        let s = self.tops.len();
        let mut acc: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        acc.insert(vec![0; s], BigInt::one());
        let times = |acc: BTreeMap<Vec<u32>, BigInt>, factor: &[(Vec<u32>, BigInt)]| {
            let mut out: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
            for (a, x) in &acc {
                for (b, y) in factor {
                    let c: Vec<u32> = a.iter().zip(b).map(|(u, v)| u + v).collect();
                    if c.iter().zip(&self.tops).any(|(u, t)| u > t) {
                        continue;
                    }
                    *out.entry(c).or_insert_with(BigInt::zero) += x * y;
                }
            }
            out.retain(|_, v| !v.is_zero());
            out
        };
        for (role, &a) in roles.iter().zip(exps) {
            for _ in 0..a {
                let factor: Vec<(Vec<u32>, BigInt)> = match role {
                    Role::H => vec![(vec![0; s], BigInt::from(2))],
                    Role::E(t) => (0..s)
                        .filter(|&f| t.0[f] == 1)
                        .map(|f| ((0..s).map(|k| u32::from(k == f)).collect(), BigInt::one()))
                        .collect(),
                    Role::R(f) => vec![((0..s).map(|k| if k == *f { self.tops[*f] } else { 0 }).collect(), BigInt::one())],
                };
                acc = times(acc, &factor);
            }
        }
        acc
    }

    fn chow_index(&self, i: u32) -> (Vec<Vec<u32>>, HashMap<Vec<u32>, usize>) {
        let basis = self.chow_monomials(i);
        let idx = basis.iter().enumerate().map(|(k, a)| (a.clone(), k)).collect();
        (basis, idx)
    }

    /// `d_L(c^alpha) = e^alpha e_{alpha + L}` as a monomial of the I-cohomology presentation.
    fn boundary_monomial(&self, alpha: &[u32], l: &Twist) -> Option<Exps> {
        let t = l.add(&super::parity(alpha));
        if t.is_trivial() {
            return None;
        }
        let s = self.tops.len();
        let mut e = vec![0u32; self.hi.ngens()];
        for (f, &a) in alpha.iter().enumerate() {
            let name = super::e_name(&super::unit_twist(s, f)).expect("unit twist");
            e[self.hi.gen_index(&name).expect("e generator")] += a;
        }
        let name = super::e_name(&t).expect("nonzero twist");
        e[self.hi.gen_index(&name).expect("e generator")] += 1;
        Some(e)
    }

    /// `beta_L: Ch^i -> H^{i+1}(I^{i+1}, L)`, which also gives `d_L` on integral classes.
    pub fn bockstein(&self, d: &Bidegree) -> CwResult<GroupHom> {
        let (basis, _) = self.chow_index(d.degree);
        let next = self.realization(&Bidegree::new(d.degree + 1, d.twist.clone()))?;
        let width = next.group().ngens();
        let mut rows = Vec::new();
        for alpha in &basis {
            let row = match self.boundary_monomial(alpha, &d.twist) {
                None => vec![BigInt::zero(); width],
                Some(m) => next.coords(&Poly::monomial(m, self.w.one()))?,
            };
            rows.push(row);
        }
        let n = basis.len();
        let ch2 = Arc::new(mod2_group(n));
        Ok(GroupHom::new(ch2, Arc::new(next.group().clone()), IntMatrix::from_rows(width, rows)))
    }

    /// `rho~` on the realized I-cohomology piece.
    pub fn rho_tilde(&self, d: &Bidegree) -> CwResult<GroupHom> {
        Ok(self.pair_piece(d)?.rho_tilde.clone())
    }

    fn pair_piece(&self, d: &Bidegree) -> CwResult<Arc<PairPiece>> {
        check_canonical(self, d)?;
        self.check_degree(d.degree)?;
        if let Some(p) = self.pieces.lock().expect("cache").get(d) {
            return Ok(p.clone());
        }
        let p = Arc::new(self.compute(d)?);
        self.pieces.lock().expect("cache").insert(d.clone(), p.clone());
        Ok(p)
    }

    fn compute(&self, d: &Bidegree) -> CwResult<PairPiece> {
        let real = self.realization(d)?;
        let (basis, chow_index) = self.chow_index(d.degree);
        let n = basis.len();
        let ch2 = Arc::new(mod2_group(n));
        let a_group = Arc::new(real.group().clone());

        // rho~ on kept columns: rank mod 2 of the scalar times the Chow image of the monomial
        let mut rt_rows = Vec::new();
        for &c in real.reduced.kept() {
            let (e, si) = real.column_label(c);
            let r2 = self.w.rank[si].mod_floor(&BigInt::from(2));
            let mut row = vec![BigInt::zero(); n];
            if !r2.is_zero() {
                for (alpha, x) in self.ch_expand(&self.hi_roles, &e) {
                    row[chow_index[&alpha]] += x;
                }
            }
            rt_rows.push(row);
        }
        let rho_tilde = GroupHom::new(a_group.clone(), ch2.clone(), IntMatrix::from_rows(n, rt_rows));

        // K = ker d_L with its inclusion into CH^i
        let beta = self.bockstein(d)?;
        let chow_free = Arc::new(FpAbGroup::free(n));
        let boundary = GroupHom::new(chow_free.clone(), beta.codomain.clone(), beta.matrix.clone());
        let (k_group, k_inc) = boundary.kernel();
        let k_to_ch2 = GroupHom::new(k_group.clone(), ch2, k_inc.matrix.clone());

        let (p, to_a, to_b) = fiber_product(&rho_tilde, &k_to_ch2);
        let p_basis = to_a.matrix.hstack(&to_b.matrix);
        let rho = GroupHom::new(p.clone(), self.chow_group(d.degree), to_b.matrix.mul(&k_inc.matrix));

        let a_names = real.generator_names(&self.hi);
        let c_names: Vec<String> = basis.iter().map(|a| chow_label(a)).collect();
        let names = (0..p.ngens())
            .map(|g| {
                let a = format_combination(to_a.matrix.row(g), &a_names);
                let y = format_combination(&rho.matrix.row_vec(g), &c_names);
                format!("({a} | {y})")
            })
            .collect();
        let public = Arc::new(DerivedPiece {
            bidegree: d.clone(),
            group: p,
            rho: Some(rho),
            names,
            // Chow groups of these spaces are free, so the comparison map is injective
            injectivity_certified: true,
        });
        Ok(PairPiece { public, real, k_basis: k_inc.matrix, p_basis, rho_tilde, chow_index })
    }

    /// I-cohomology part and Chow part of a carrier polynomial.
    fn split(&self, p: &Poly, n: usize, chow_index: &HashMap<Vec<u32>, usize>) -> CwResult<(Poly, Vec<BigInt>)> {
        let mut hi_poly = Poly::zero();
        let mut y = vec![BigInt::zero(); n];
        for (e, s) in &p.terms {
            let rank = self.gw.rank_of(s);
            if !rank.is_zero() {
                for (alpha, x) in self.ch_expand(&self.carrier_roles, e) {
                    let k = chow_index.get(&alpha).ok_or_else(|| {
                        CwError::TwistMismatch(format!("Chow monomial {alpha:?} outside degree"))
                    })?;
                    y[*k] += &rank * x;
                }
            }
            let has_h = e.iter().zip(&self.carrier_roles).any(|(a, r)| *a > 0 && *r == Role::H);
            if has_h {
                continue;
            }
            let mut he = vec![0u32; self.hi.ngens()];
            for (g, &a) in e.iter().enumerate() {
                if a > 0 {
                    he[self.to_hi[g].expect("non-H carrier generators exist in hi")] += a;
                }
            }
            hi_poly.add_term(he, s.clone());
        }
        Ok((hi_poly, y))
    }
}

fn mod2_group(n: usize) -> FpAbGroup {
    let mut m = IntMatrix::zeros(n, n);
    for i in 0..n {
        m.set(i, i, BigInt::from(2));
    }
    FpAbGroup::new(n, m)
}

impl Theory for PairTheory {
    fn name(&self) -> String {
        self.name.clone()
    }

    fn carrier(&self) -> &RingPresentation {
        &self.carrier
    }

    fn collapsed(&self) -> &[usize] {
        &[]
    }

    fn bound(&self) -> u32 {
        self.bound
    }

    fn piece(&self, d: &Bidegree) -> CwResult<Arc<DerivedPiece>> {
        Ok(self.pair_piece(d)?.public.clone())
    }

    fn coords(&self, d: &Bidegree, p: &Poly) -> CwResult<Vec<BigInt>> {
        check_homogeneous(&self.carrier, d, p)?;
        let pp = self.pair_piece(d)?;
        let n = pp.chow_index.len();
        let (hp, y) = self.split(p, n, &pp.chow_index)?;
        let mut v = pp.real.coords(&hp)?;
        let k = solve_in_hermite(&pp.k_basis, &y).ok_or_else(|| {
            CwError::InvalidCorrespondence(format!("{}: Chow part is not a cycle for the boundary in {d}", self.name))
        })?;
        v.extend(k);
        solve_in_hermite(&pp.p_basis, &v).ok_or_else(|| {
            CwError::InvalidCorrespondence(format!("{}: element does not lie in the fiber product in {d}", self.name))
        })
    }

    fn chow_monomials(&self, i: u32) -> Vec<Vec<u32>> {
        exponent_vectors(i, &self.tops)
    }

    fn chow_group(&self, i: u32) -> Arc<FpAbGroup> {
        Arc::new(FpAbGroup::free(self.chow_monomials(i).len()))
    }

    /// `coker(beta_L: Ch^{i-1} -> H^i(I^i, L))`, the common value of `H^i(I^j, L)` for `j < i`.
    fn nondiagonal(&self, i: u32, twist: &Twist) -> CwResult<Arc<FpAbGroup>> {
        self.check_degree(i)?;
        let d = Bidegree::new(i, twist.clone());
        let real = self.realization(&d)?;
        if i == 0 {
            return Ok(Arc::new(real.group().clone()));
        }
        let beta = self.bockstein(&Bidegree::new(i - 1, twist.clone()))?;
        let (c, _) = beta.cokernel();
        let rels = hermite_basis(c.relations());
        Ok(Arc::new(FpAbGroup::new(c.ngens(), rels)))
    }
}
