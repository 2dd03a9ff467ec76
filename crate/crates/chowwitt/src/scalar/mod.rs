//! Quadratic-form invariants of the supported base fields: Witt ring,
//! Grothendieck-Witt ring, the fundamental-ideal filtration and rank maps.

pub mod finite_field;

use crate::error::{CwError, CwResult};
use crate::linalg::{fiber_product, FpAbGroup, GroupHom, IntMatrix};
use finite_field::SmallField;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

/// Largest `q` for which the brute-force form classifier is run.
pub const MAX_FINITE_Q: u64 = 13;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldKind {
    QuadraticallyClosed,
    RealClosed,
    FiniteOdd(u64),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldModel {
    pub kind: FieldKind,
    /// Integers that must be invertible in the field; always contains 2.
    pub char_exclusions: BTreeSet<u64>,
}

impl FieldModel {
    fn with_kind(kind: FieldKind) -> Self {
        FieldModel { kind, char_exclusions: BTreeSet::from([2]) }
    }

    pub fn complex() -> Self {
        Self::with_kind(FieldKind::QuadraticallyClosed)
    }

    pub fn real() -> Self {
        Self::with_kind(FieldKind::RealClosed)
    }

    pub fn finite(q: u64) -> CwResult<Self> {
        match finite_field::prime_power(q) {
            Some((p, _)) if p != 2 => {}
            _ => return Err(CwError::UnsupportedField(format!("F{q}: q must be an odd prime power >= 3"))),
        }
        if q > MAX_FINITE_Q {
            return Err(CwError::UnsupportedField(format!("F{q}: the form classifier covers q <= {MAX_FINITE_Q}")));
        }
        Ok(Self::with_kind(FieldKind::FiniteOdd(q)))
    }

    pub fn characteristic(&self) -> u64 {
        match self.kind {
            FieldKind::FiniteOdd(q) => finite_field::prime_power(q).expect("validated").0,
            _ => 0,
        }
    }

    /// Require `n` to be invertible in the field.
    pub fn exclude(&mut self, n: u64) -> CwResult<()> {
        let p = self.characteristic();
        if p != 0 && n % p == 0 {
            return Err(CwError::Param(format!("{n} is not invertible in characteristic {p}")));
        }
        self.char_exclusions.insert(n);
        Ok(())
    }

    pub fn code(&self) -> String {
        match self.kind {
            FieldKind::QuadraticallyClosed => "C".into(),
            FieldKind::RealClosed => "R".into(),
            FieldKind::FiniteOdd(q) => format!("F{q}"),
        }
    }

    pub fn parse(code: &str) -> CwResult<Self> {
        let c = code.trim();
        match c {
            "C" => Ok(Self::complex()),
            "R" => Ok(Self::real()),
            _ => {
                let q = c
                    .strip_prefix('F')
                    .and_then(|s| s.parse::<u64>().ok())
                    .ok_or_else(|| CwError::UnsupportedField(format!("unknown field code `{c}`")))?;
                Self::finite(q)
            }
        }
    }
}

impl fmt::Display for FieldModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.code())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ScalarLabel {
    GW,
    W,
    Ibar(u32),
    Z,
    Z2,
}

impl fmt::Display for ScalarLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScalarLabel::GW => write!(f, "GW"),
            ScalarLabel::W => write!(f, "W"),
            ScalarLabel::Ibar(j) => write!(f, "Ibar{j}"),
            ScalarLabel::Z => write!(f, "Z"),
            ScalarLabel::Z2 => write!(f, "Z2"),
        }
    }
}

pub type Scalar = Vec<BigInt>;

/// A commutative ring given by an additive presentation on named generators
/// and structure constants for their products.
#[derive(Clone, Debug)]
pub struct ScalarRing {
    pub label: ScalarLabel,
    pub field: Option<FieldModel>,
    pub names: Vec<String>,
    pub group: Arc<FpAbGroup>,
    /// `mul[a][b]` is the product of generators `a` and `b`.
    pub mul: Vec<Vec<Scalar>>,
    pub unit: Scalar,
    /// The class `<-1>`; equal to the unit where signs are invisible.
    pub minus_one: Scalar,
    /// The hyperbolic element `h = <1> + <-1>`.
    pub hyperbolic: Scalar,
    /// Additive generators of the fundamental ideal `I(k)`.
    pub ideal_gens: Vec<Scalar>,
    /// Rank of each generator.
    pub rank: Vec<BigInt>,
}

impl ScalarRing {
    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn zero(&self) -> Scalar {
        vec![BigInt::zero(); self.dim()]
    }

    pub fn one(&self) -> Scalar {
        self.unit.clone()
    }

    pub fn int(&self, n: i64) -> Scalar {
        self.unit.iter().map(|x| x * n).collect()
    }

    pub fn basis(&self, i: usize) -> Scalar {
        self.group.generator(i)
    }

    pub fn add(&self, a: &[BigInt], b: &[BigInt]) -> Scalar {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    pub fn sub(&self, a: &[BigInt], b: &[BigInt]) -> Scalar {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }

    pub fn neg(&self, a: &[BigInt]) -> Scalar {
        a.iter().map(|x| -x).collect()
    }

    pub fn scale(&self, k: &BigInt, a: &[BigInt]) -> Scalar {
        a.iter().map(|x| k * x).collect()
    }

    pub fn mul(&self, a: &[BigInt], b: &[BigInt]) -> Scalar {
        let mut out = self.zero();
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                let xy = x * y;
                for (o, m) in out.iter_mut().zip(&self.mul[i][j]) {
                    if !m.is_zero() {
                        *o += &xy * m;
                    }
                }
            }
        }
        out
    }

    pub fn is_zero(&self, a: &[BigInt]) -> bool {
        self.group.is_zero(a)
    }

    pub fn equal(&self, a: &[BigInt], b: &[BigInt]) -> bool {
        self.group.equal(a, b)
    }

    /// Rank of an element, as an integer (meaningful mod 2 for `W`).
    pub fn rank_of(&self, a: &[BigInt]) -> BigInt {
        a.iter().zip(&self.rank).map(|(x, r)| x * r).sum()
    }

    /// Multiplication is associative and commutative, and `unit` is an identity,
    /// checked exhaustively on the generating set.
    pub fn check_axioms(&self) -> bool {
        let n = self.dim();
        for a in 0..n {
            let ea = self.basis(a);
            if !self.equal(&self.mul(&ea, &self.unit), &ea) || !self.equal(&self.mul(&self.unit, &ea), &ea) {
                return false;
            }
            for b in 0..n {
                let eb = self.basis(b);
                if !self.equal(&self.mul(&ea, &eb), &self.mul(&eb, &ea)) {
                    return false;
                }
                for c in 0..n {
                    let ec = self.basis(c);
                    let l = self.mul(&self.mul(&ea, &eb), &ec);
                    let r = self.mul(&ea, &self.mul(&eb, &ec));
                    if !self.equal(&l, &r) {
                        return false;
                    }
                }
            }
        }
        // relations generate an ideal
        self.group.relations().rows_iter().all(|r| (0..n).all(|a| self.is_zero(&self.mul(r, &self.basis(a)))))
    }

    pub fn integers() -> Self {
        let one = vec![BigInt::one()];
        ScalarRing {
            label: ScalarLabel::Z,
            field: None,
            names: vec!["1".into()],
            group: Arc::new(FpAbGroup::free(1)),
            mul: vec![vec![one.clone()]],
            unit: one.clone(),
            minus_one: one,
            hyperbolic: vec![BigInt::from(2)],
            ideal_gens: vec![],
            rank: vec![BigInt::one()],
        }
    }

    pub fn integers_mod2() -> Self {
        let one = vec![BigInt::one()];
        ScalarRing {
            label: ScalarLabel::Z2,
            field: None,
            names: vec!["1".into()],
            group: Arc::new(FpAbGroup::from_orders(&[2])),
            mul: vec![vec![one.clone()]],
            unit: one.clone(),
            minus_one: one,
            hyperbolic: vec![BigInt::zero()],
            ideal_gens: vec![],
            rank: vec![BigInt::one()],
        }
    }

    /// Human-readable form of an element in terms of the generator names.
    pub fn format(&self, a: &[BigInt]) -> String {
        let mut parts = Vec::new();
        for (x, name) in a.iter().zip(&self.names) {
            if x.is_zero() {
                continue;
            }
            parts.push(if x.is_one() { name.clone() } else { format!("{x}{name}") });
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join("+")
        }
    }
}

/// Square-class representatives with their names and the class of `-1`.
struct FormData {
    names: Vec<String>,
    /// Relations among the one-dimensional forms in the Grothendieck-Witt group.
    gw_relations: IntMatrix,
    /// Products of square classes: `prod[a][b]` is the index of the class of `ab`.
    prod: Vec<Vec<usize>>,
    minus_one: usize,
}

fn form_data(field: &FieldModel) -> CwResult<FormData> {
    match field.kind {
        FieldKind::QuadraticallyClosed => Ok(FormData {
            names: vec!["<1>".into()],
            gw_relations: IntMatrix::zeros(0, 1),
            prod: vec![vec![0]],
            minus_one: 0,
        }),
        FieldKind::RealClosed => Ok(FormData {
            names: vec!["<1>".into(), "<-1>".into()],
            gw_relations: IntMatrix::zeros(0, 2),
            prod: vec![vec![0, 1], vec![1, 0]],
            minus_one: 1,
        }),
        FieldKind::FiniteOdd(q) => {
            let f = SmallField::new(q)?;
            let reps = [1u32, f.nonsquare()];
            let class = |a: u32| -> usize {
                reps.iter().position(|&r| f.unary_isometric(r, a)).expect("every unit is in a square class")
            };
            let prod = (0..2).map(|a| (0..2).map(|b| class(f.mul(reps[a], reps[b]))).collect()).collect();
            // Every relation in GW(F_q) is generated by isometries of binary forms.
            let binaries: Vec<[usize; 2]> = vec![[0, 0], [0, 1], [1, 1]];
            let mut rels = IntMatrix::zeros(0, 2);
            for a in &binaries {
                for b in &binaries {
                    if a >= b {
                        continue;
                    }
                    if f.binary_isometric([reps[a[0]], reps[a[1]]], [reps[b[0]], reps[b[1]]]) {
                        let mut row = vec![BigInt::zero(); 2];
                        row[a[0]] += 1;
                        row[a[1]] += 1;
                        row[b[0]] -= 1;
                        row[b[1]] -= 1;
                        rels.push_row(row);
                    }
                }
            }
            Ok(FormData {
                names: vec!["<1>".into(), "<u>".into()],
                gw_relations: rels,
                prod,
                minus_one: class(f.minus_one()),
            })
        }
    }
}

/// Number of isometry classes of anisotropic diagonal forms over `F_q`,
/// found by enumerating forms of dimension at most 3 and deduplicating
/// binary and unary forms by brute-force isometry. Equals `|W(F_q)|`.
pub fn count_anisotropic_classes(q: u64) -> CwResult<usize> {
    let f = SmallField::new(q)?;
    let units: Vec<u32> = f.units().collect();
    let mut count = 1; // the zero form
    let mut unary: Vec<u32> = Vec::new();
    for &a in &units {
        if !unary.iter().any(|&b| f.unary_isometric(a, b)) {
            unary.push(a);
        }
    }
    count += unary.len();
    let mut binary: Vec<[u32; 2]> = Vec::new();
    for &a in &unary {
        for &b in &unary {
            let form = [a, b];
            if f.is_isotropic(&form) {
                continue;
            }
            if !binary.iter().any(|g| f.binary_isometric(*g, form)) {
                binary.push(form);
            }
        }
    }
    count += binary.len();
    for &a in &unary {
        for &b in &unary {
            for &c in &unary {
                assert!(f.is_isotropic(&[a, b, c]), "ternary forms over finite fields are isotropic");
            }
        }
    }
    Ok(count)
}

fn unit_vec(n: usize, i: usize) -> Scalar {
    let mut v = vec![BigInt::zero(); n];
    v[i] = BigInt::one();
    v
}

fn ring_from_forms(label: ScalarLabel, field: &FieldModel, data: &FormData, relations: IntMatrix) -> ScalarRing {
    let n = data.names.len();
    let mul = (0..n).map(|a| (0..n).map(|b| unit_vec(n, data.prod[a][b])).collect()).collect();
    let minus_one = unit_vec(n, data.minus_one);
    let mut hyperbolic = unit_vec(n, 0);
    hyperbolic[data.minus_one] += 1;
    let ideal_gens = (1..n)
        .map(|a| {
            let mut v = unit_vec(n, a);
            v[0] -= 1;
            v
        })
        .collect();
    ScalarRing {
        label,
        field: Some(field.clone()),
        names: data.names.clone(),
        group: Arc::new(FpAbGroup::new(n, relations)),
        mul,
        unit: unit_vec(n, 0),
        minus_one,
        hyperbolic,
        ideal_gens,
        rank: vec![BigInt::one(); n],
    }
}

/// The Witt ring `W(k)`: forms modulo hyperbolic forms.
pub fn witt_ring(field: &FieldModel) -> CwResult<ScalarRing> {
    let data = form_data(field)?;
    let n = data.names.len();
    let mut rels = data.gw_relations.clone();
    let mut h = vec![BigInt::zero(); n];
    h[0] += 1;
    h[data.minus_one] += 1;
    rels.push_row(h);
    Ok(ring_from_forms(ScalarLabel::W, field, &data, rels))
}

/// Rank mod 2 on `W(k)`.
pub fn witt_rank_mod2(w: &ScalarRing) -> GroupHom {
    let z2 = Arc::new(FpAbGroup::from_orders(&[2]));
    let m = IntMatrix::from_rows(1, w.rank.iter().map(|r| vec![r.clone()]).collect());
    GroupHom::new(w.group.clone(), z2, m)
}

/// The Grothendieck-Witt ring, built as the fiber product `W(k) x_{Z/2} Z`
/// of rank mod 2 and reduction mod 2, and presented on one-dimensional forms.
pub fn grothendieck_witt(field: &FieldModel) -> CwResult<ScalarRing> {
    let data = form_data(field)?;
    let w = witt_ring(field)?;
    let n = w.dim();
    let rk = witt_rank_mod2(&w);
    let z = Arc::new(FpAbGroup::free(1));
    let m2 = GroupHom::new(z.clone(), rk.codomain.clone(), IntMatrix::from_i64_rows(1, &[vec![1]]));
    let (p, _, _) = fiber_product(&rk, &m2);
    // one-dimensional forms <a> map to (<a>, 1); GW is the subgroup they generate
    let target = Arc::new(w.group.direct_sum(&z));
    let mut phi = IntMatrix::zeros(n, n + 1);
    for a in 0..n {
        phi.set(a, a, BigInt::one());
        phi.set(a, n, BigInt::one());
    }
    let free = Arc::new(FpAbGroup::free(n));
    let hom = GroupHom::new(free, target, phi);
    let kernel = hom.kernel_lattice();
    let gw = ring_from_forms(ScalarLabel::GW, field, &data, kernel);
    debug_assert!(gw.group.group_type() == p.group_type());
    Ok(gw)
}

/// The fiber product itself with its projections to `W(k)` and `Z`.
pub fn grothendieck_witt_fiber(field: &FieldModel) -> CwResult<(Arc<FpAbGroup>, GroupHom, GroupHom)> {
    let w = witt_ring(field)?;
    let rk = witt_rank_mod2(&w);
    let z = Arc::new(FpAbGroup::free(1));
    let m2 = GroupHom::new(z, rk.codomain.clone(), IntMatrix::from_i64_rows(1, &[vec![1]]));
    Ok(fiber_product(&rk, &m2))
}

/// A subgroup of a ring's additive group with its inclusion.
#[derive(Clone, Debug)]
pub struct Subgroup {
    pub generators: IntMatrix,
    pub group: Arc<FpAbGroup>,
    pub inclusion: GroupHom,
}

fn subgroup_of(ambient: &Arc<FpAbGroup>, gens: IntMatrix) -> Subgroup {
    let free = Arc::new(FpAbGroup::free(gens.nrows()));
    let hom = GroupHom::new(free, ambient.clone(), gens.clone());
    let kl = hom.kernel_lattice();
    let group = Arc::new(FpAbGroup::new(gens.nrows(), kl));
    let inclusion = GroupHom::new(group.clone(), ambient.clone(), gens.clone());
    Subgroup { generators: gens, group, inclusion }
}

/// `I^j(k)` as a subgroup of `W(k)`; `I^0 = W(k)`.
pub fn fundamental_ideal_power(field: &FieldModel, j: u32) -> CwResult<Subgroup> {
    let w = witt_ring(field)?;
    let n = w.dim();
    let mut current: Vec<Scalar> = vec![w.one()];
    for _ in 0..j {
        let mut next = Vec::new();
        for a in &current {
            for g in &w.ideal_gens {
                next.push(w.mul(a, g));
            }
        }
        current = next;
    }
    let gens = if current.is_empty() {
        IntMatrix::zeros(0, n)
    } else {
        IntMatrix::from_rows(n, current)
    };
    Ok(subgroup_of(&w.group, gens))
}

/// `Ibar^j = I^j / I^{j+1}` with the quotient map from `I^j`.
pub fn ibar(field: &FieldModel, j: u32) -> CwResult<(Arc<FpAbGroup>, GroupHom)> {
    let ij = fundamental_ideal_power(field, j)?;
    let ij1 = fundamental_ideal_power(field, j + 1)?;
    // I^j -> W -> W / I^{j+1}
    let (_, proj) = ij1.inclusion.cokernel();
    let to_quot = ij.inclusion.compose(&proj);
    let kl = to_quot.kernel_lattice();
    let piece = Arc::new(FpAbGroup::new(ij.group.ngens(), kl));
    let q = GroupHom::new(ij.group.clone(), piece.clone(), IntMatrix::identity(ij.group.ngens()));
    Ok((piece, q))
}

/// Rank `GW(k) -> Z` and rank mod 2 `W(k) -> Z/2`.
pub fn rank_maps(field: &FieldModel) -> CwResult<(GroupHom, GroupHom)> {
    let gw = grothendieck_witt(field)?;
    let w = witt_ring(field)?;
    let z = Arc::new(FpAbGroup::free(1));
    let m = IntMatrix::from_rows(1, gw.rank.iter().map(|r| vec![r.clone()]).collect());
    Ok((GroupHom::new(gw.group.clone(), z, m), witt_rank_mod2(&w)))
}

/// Projection `GW(k) -> W(k)` on form generators.
pub fn gw_to_w(field: &FieldModel) -> CwResult<GroupHom> {
    let gw = grothendieck_witt(field)?;
    let w = witt_ring(field)?;
    Ok(GroupHom::new(gw.group.clone(), w.group.clone(), IntMatrix::identity(gw.dim())))
}

/// Index after which the filtration is constant (`None` if it never stabilizes).
pub fn stabilization_index(field: &FieldModel) -> Option<u32> {
    match field.kind {
        FieldKind::RealClosed => None,
        FieldKind::QuadraticallyClosed => Some(1),
        FieldKind::FiniteOdd(_) => Some(2),
    }
}

/// Exponent of the torsion of a scalar group (used in messages).
pub fn torsion_exponent(g: &FpAbGroup) -> BigInt {
    g.invariant_factors().iter().fold(BigInt::one(), |a, b| a.lcm(b))
}

fn scalar_cache() -> &'static Mutex<HashMap<(ScalarLabel, FieldKind), Arc<ScalarRing>>> {
    static CACHE: OnceLock<Mutex<HashMap<(ScalarLabel, FieldKind), Arc<ScalarRing>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Shared `GW(k)`, `W(k)`, `Z` or `Z/2`, built once per field.
pub fn shared(label: ScalarLabel, field: &FieldModel) -> CwResult<Arc<ScalarRing>> {
    let key = (label, field.kind.clone());
    if let Some(r) = scalar_cache().lock().expect("scalar cache").get(&key) {
        return Ok(r.clone());
    }
    let base = FieldModel { kind: field.kind.clone(), char_exclusions: BTreeSet::from([2]) };
    let ring = match label {
        ScalarLabel::GW => grothendieck_witt(&base)?,
        ScalarLabel::W => witt_ring(&base)?,
        ScalarLabel::Z => ScalarRing::integers(),
        ScalarLabel::Z2 => ScalarRing::integers_mod2(),
        ScalarLabel::Ibar(_) => return Err(CwError::OutOfScope("Ibar is not a shared scalar ring".into())),
    };
    let ring = Arc::new(ring);
    scalar_cache().lock().expect("scalar cache").insert(key, ring.clone());
    Ok(ring)
}
