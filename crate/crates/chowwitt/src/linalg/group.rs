//! Finitely presented abelian groups and homomorphisms between them.

use super::matrix::{is_zero_vec, IntMatrix};
use super::snf::{hermite_basis, left_kernel, smith_cols, solve_in_hermite};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::sync::{Arc, OnceLock};

/// Invariant-factor description of a finitely generated abelian group.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupType {
    /// Torsion coefficients `d_1 | d_2 | ...`, each at least 2.
    pub torsion: Vec<BigInt>,
    pub free_rank: usize,
}

impl GroupType {
    pub fn trivial() -> Self {
        GroupType { torsion: vec![], free_rank: 0 }
    }

    pub fn free(rank: usize) -> Self {
        GroupType { torsion: vec![], free_rank: rank }
    }

    pub fn cyclic(n: i64) -> Self {
        match n {
            0 => Self::free(1),
            1 | -1 => Self::trivial(),
            _ => GroupType { torsion: vec![BigInt::from(n.abs())], free_rank: 0 },
        }
    }

    /// Normalize an arbitrary list of cyclic orders (0 = infinite) to invariant factors.
    pub fn from_orders(orders: &[BigInt]) -> Self {
        let n = orders.len();
        let mut m = IntMatrix::zeros(n, n);
        for (i, o) in orders.iter().enumerate() {
            m.set(i, i, o.clone());
        }
        FpAbGroup::new(n, m).group_type()
    }

    pub fn sum(&self, other: &GroupType) -> GroupType {
        let mut orders: Vec<BigInt> = self.torsion.clone();
        orders.extend(other.torsion.iter().cloned());
        orders.extend(std::iter::repeat(BigInt::zero()).take(self.free_rank + other.free_rank));
        Self::from_orders(&orders)
    }

    pub fn is_trivial(&self) -> bool {
        self.torsion.is_empty() && self.free_rank == 0
    }

    pub fn order(&self) -> Option<BigInt> {
        if self.free_rank > 0 {
            None
        } else {
            Some(self.torsion.iter().fold(BigInt::one(), |a, b| a * b))
        }
    }

    pub fn has_two_torsion(&self) -> bool {
        self.torsion.iter().any(|d| d.is_even())
    }
}

impl fmt::Display for GroupType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for d in &self.torsion {
            parts.push(format!("Z/{d}"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Debug)]
struct Structure {
    /// SNF diagonal padded with zeros to the number of generators.
    diag: Vec<BigInt>,
    v: IntMatrix,
    /// Positions of nontrivial cyclic summands (diag != 1).
    keep: Vec<usize>,
}

/// `Z^n` modulo the row span of a relation matrix.
pub struct FpAbGroup {
    ngens: usize,
    relations: IntMatrix,
    cache: OnceLock<Structure>,
}

impl Clone for FpAbGroup {
    fn clone(&self) -> Self {
        FpAbGroup::new(self.ngens, self.relations.clone())
    }
}

impl fmt::Debug for FpAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FpAbGroup({} gens, {} rels: {})", self.ngens, self.relations.nrows(), self.group_type())
    }
}

impl FpAbGroup {
    pub fn new(ngens: usize, relations: IntMatrix) -> Self {
        assert_eq!(relations.ncols(), ngens, "relation width must equal generator count");
        FpAbGroup { ngens, relations, cache: OnceLock::new() }
    }

    pub fn free(n: usize) -> Self {
        Self::new(n, IntMatrix::zeros(0, n))
    }

    pub fn trivial() -> Self {
        Self::free(0)
    }

    /// Direct sum of cyclic groups of the given orders (0 = infinite cyclic).
    pub fn from_orders(orders: &[i64]) -> Self {
        let n = orders.len();
        let mut m = IntMatrix::zeros(n, n);
        for (i, &o) in orders.iter().enumerate() {
            m.set(i, i, BigInt::from(o));
        }
        Self::new(n, m)
    }

    pub fn from_type(t: &GroupType) -> Self {
        let n = t.torsion.len() + t.free_rank;
        let mut m = IntMatrix::zeros(n, n);
        for (i, d) in t.torsion.iter().enumerate() {
            m.set(i, i, d.clone());
        }
        Self::new(n, m)
    }

    pub fn ngens(&self) -> usize {
        self.ngens
    }

    pub fn relations(&self) -> &IntMatrix {
        &self.relations
    }

    fn structure(&self) -> &Structure {
        self.cache.get_or_init(|| {
            let basis = hermite_basis(&self.relations);
            let (d, v) = smith_cols(&basis);
            let mut diag = d;
            diag.resize(self.ngens, BigInt::zero());
            let keep = (0..self.ngens).filter(|&i| !diag[i].is_one()).collect();
            Structure { diag, v, keep }
        })
    }

    pub fn group_type(&self) -> GroupType {
        let s = self.structure();
        let torsion: Vec<BigInt> = s.diag.iter().filter(|d| d > &&BigInt::one()).cloned().collect();
        let free_rank = s.diag.iter().filter(|d| d.is_zero()).count();
        GroupType { torsion, free_rank }
    }

    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.group_type().torsion
    }

    pub fn free_rank(&self) -> usize {
        self.group_type().free_rank
    }

    pub fn is_trivial(&self) -> bool {
        self.structure().keep.is_empty()
    }

    /// Orders of the canonical cyclic summands (0 = infinite), aligned with `coords`.
    pub fn summand_orders(&self) -> Vec<BigInt> {
        let s = self.structure();
        s.keep.iter().map(|&i| s.diag[i].clone()).collect()
    }

    /// Canonical coordinates of an element: torsion parts reduced into `[0, d)`.
    pub fn coords(&self, x: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(x.len(), self.ngens);
        let s = self.structure();
        let y = s.v.apply_row(x);
        s.keep
            .iter()
            .map(|&i| {
                let d = &s.diag[i];
                if d.is_zero() {
                    y[i].clone()
                } else {
                    y[i].mod_floor(d)
                }
            })
            .collect()
    }

    pub fn is_zero(&self, x: &[BigInt]) -> bool {
        is_zero_vec(&self.coords(x))
    }

    pub fn equal(&self, x: &[BigInt], y: &[BigInt]) -> bool {
        let diff: Vec<BigInt> = x.iter().zip(y).map(|(a, b)| a - b).collect();
        self.is_zero(&diff)
    }

    pub fn generator(&self, i: usize) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); self.ngens];
        v[i] = BigInt::one();
        v
    }

    /// Order of an element (0 if infinite).
    pub fn element_order(&self, x: &[BigInt]) -> BigInt {
        let c = self.coords(x);
        let orders = self.summand_orders();
        let mut l = BigInt::one();
        for (ci, d) in c.iter().zip(&orders) {
            if ci.is_zero() {
                continue;
            }
            if d.is_zero() {
                return BigInt::zero();
            }
            l = l.lcm(&(d / ci.gcd(d)));
        }
        l
    }

    pub fn direct_sum(&self, other: &FpAbGroup) -> FpAbGroup {
        FpAbGroup::new(self.ngens + other.ngens, IntMatrix::block_diag(&self.relations, &other.relations))
    }

    /// Lattice of relations in Hermite form.
    pub fn relation_lattice(&self) -> IntMatrix {
        hermite_basis(&self.relations)
    }

    /// Enumerate all elements of a finite group as generator vectors (coords canonical).
    pub fn enumerate(&self) -> Option<Vec<Vec<BigInt>>> {
        let orders = self.summand_orders();
        if orders.iter().any(|d| d.is_zero()) {
            return None;
        }
        let s = self.structure();
        // v is unimodular; canonical coordinate vector y corresponds to x = y * v^{-1}
        let vinv = inverse_unimodular(&s.v);
        let mut out = Vec::new();
        let mut counter = vec![BigInt::zero(); orders.len()];
        loop {
            let mut y = vec![BigInt::zero(); self.ngens];
            for (k, &i) in s.keep.iter().enumerate() {
                y[i] = counter[k].clone();
            }
            out.push(vinv.apply_row(&y));
            let mut k = 0;
            loop {
                if k == orders.len() {
                    return Some(out);
                }
                counter[k] += 1;
                if counter[k] < orders[k] {
                    break;
                }
                counter[k] = BigInt::zero();
                k += 1;
            }
        }
    }
}

/// Inverse of a unimodular matrix via Hermite reduction of `[m | I]`.
pub fn inverse_unimodular(m: &IntMatrix) -> IntMatrix {
    let n = m.nrows();
    let (_, t, rank) = super::snf::hermite_with_transform(m, true);
    assert_eq!(rank, n, "matrix is not invertible");
    let t = t.expect("tracked");
    // t * m = h is upper triangular with unit pivots reduced above, hence identity
    t
}

pub fn isomorphic(a: &FpAbGroup, b: &FpAbGroup) -> bool {
    a.group_type() == b.group_type()
}

/// Homomorphism `x -> x * matrix` between finitely presented groups.
#[derive(Clone, Debug)]
pub struct GroupHom {
    pub domain: Arc<FpAbGroup>,
    pub codomain: Arc<FpAbGroup>,
    pub matrix: IntMatrix,
}

impl GroupHom {
    pub fn new(domain: Arc<FpAbGroup>, codomain: Arc<FpAbGroup>, matrix: IntMatrix) -> Self {
        assert_eq!(matrix.nrows(), domain.ngens());
        assert_eq!(matrix.ncols(), codomain.ngens());
        GroupHom { domain, codomain, matrix }
    }

    pub fn identity(g: Arc<FpAbGroup>) -> Self {
        let n = g.ngens();
        GroupHom::new(g.clone(), g, IntMatrix::identity(n))
    }

    pub fn zero(domain: Arc<FpAbGroup>, codomain: Arc<FpAbGroup>) -> Self {
        let m = IntMatrix::zeros(domain.ngens(), codomain.ngens());
        GroupHom::new(domain, codomain, m)
    }

    pub fn apply(&self, x: &[BigInt]) -> Vec<BigInt> {
        self.matrix.apply_row(x)
    }

    /// Domain relations land in the codomain relation lattice.
    pub fn is_well_defined(&self) -> bool {
        self.domain
            .relations()
            .rows_iter()
            .all(|r| self.codomain.is_zero(&self.apply(r)))
    }

    pub fn compose(&self, then: &GroupHom) -> GroupHom {
        GroupHom::new(self.domain.clone(), then.codomain.clone(), self.matrix.mul(&then.matrix))
    }

    pub fn is_zero_map(&self) -> bool {
        (0..self.domain.ngens()).all(|i| self.codomain.is_zero(self.matrix.row(i)))
    }

    /// Lattice `{x : f(x) = 0}` in domain generator coordinates, Hermite basis.
    pub fn kernel_lattice(&self) -> IntMatrix {
        let stacked = self.matrix.vstack(self.codomain.relations());
        let k = left_kernel(&stacked);
        let n = self.domain.ngens();
        let proj = k.select_cols(&(0..n).collect::<Vec<_>>());
        hermite_basis(&proj.vstack(self.domain.relations()))
    }

    /// Kernel as a group together with its inclusion into the domain.
    pub fn kernel(&self) -> (Arc<FpAbGroup>, GroupHom) {
        let basis = self.kernel_lattice();
        let rels: Vec<Vec<BigInt>> = self
            .domain
            .relations()
            .rows_iter()
            .map(|r| solve_in_hermite(&basis, r).expect("domain relation outside kernel lattice"))
            .collect();
        let k = Arc::new(FpAbGroup::new(basis.nrows(), IntMatrix::from_rows(basis.nrows(), rels)));
        let inc = GroupHom::new(k.clone(), self.domain.clone(), basis);
        (k, inc)
    }

    /// Cokernel as a group together with the projection from the codomain.
    pub fn cokernel(&self) -> (Arc<FpAbGroup>, GroupHom) {
        let rels = self.codomain.relations().vstack(&self.matrix);
        let c = Arc::new(FpAbGroup::new(self.codomain.ngens(), rels));
        let proj = GroupHom::new(self.codomain.clone(), c.clone(), IntMatrix::identity(self.codomain.ngens()));
        (c, proj)
    }

    /// Image as an abstract group (domain modulo kernel).
    pub fn image(&self) -> Arc<FpAbGroup> {
        let basis = self.kernel_lattice();
        Arc::new(FpAbGroup::new(self.domain.ngens(), basis))
    }

    pub fn is_injective(&self) -> bool {
        let kl = self.kernel_lattice();
        let rl = self.domain.relation_lattice();
        kl == rl
    }

    pub fn is_surjective(&self) -> bool {
        self.cokernel().0.is_trivial()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    /// Index of the image in the codomain (0 if infinite).
    pub fn image_index(&self) -> BigInt {
        let c = self.cokernel().0.group_type();
        c.order().unwrap_or_else(BigInt::zero)
    }
}

/// Fiber product `{(a, b) : f(a) = g(b)}` with its two projections.
pub fn fiber_product(f: &GroupHom, g: &GroupHom) -> (Arc<FpAbGroup>, GroupHom, GroupHom) {
    assert_eq!(f.codomain.ngens(), g.codomain.ngens(), "fiber product needs a common codomain");
    let a = f.domain.clone();
    let b = g.domain.clone();
    let sum = Arc::new(a.direct_sum(&b));
    let mut neg_g = g.matrix.clone();
    for i in 0..neg_g.nrows() {
        neg_g.negate_row(i);
    }
    let diff = GroupHom::new(sum.clone(), f.codomain.clone(), f.matrix.vstack(&neg_g));
    let (p, inc) = diff.kernel();
    let na = a.ngens();
    let nb = b.ngens();
    let mut pa = IntMatrix::zeros(na + nb, na);
    let mut pb = IntMatrix::zeros(na + nb, nb);
    for i in 0..na {
        pa.set(i, i, BigInt::one());
    }
    for i in 0..nb {
        pb.set(na + i, i, BigInt::one());
    }
    let to_a = GroupHom::new(p.clone(), a, inc.matrix.mul(&pa));
    let to_b = GroupHom::new(p.clone(), b, inc.matrix.mul(&pb));
    (p, to_a, to_b)
}

/// Absolute value of a determinant; used by property tests on unimodularity.
pub fn abs_det(m: &IntMatrix) -> BigInt {
    m.determinant().abs()
}
