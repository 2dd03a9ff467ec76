//! Finitely presented algebras graded by degree and twist over a scalar ring,
//! realized bidegree by bidegree as finitely presented abelian groups.

pub mod compare;
pub mod text;

use crate::error::{CwError, CwResult};
use crate::linalg::sparse::{reduce_presentation, ReducedPresentation, SparseRow};
use crate::linalg::FpAbGroup;
use crate::scalar::{Scalar, ScalarRing};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

pub use compare::{compare, Correspondence, Verdict};

/// Default cap on the total exponent of degree-zero generators in a monomial.
pub const DEFAULT_WINDOW: u32 = 3;

/// An element of `(Z/2)^s`, the twist by a line bundle modulo squares.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Twist(pub Vec<u8>);

impl Twist {
    pub fn zero(s: usize) -> Self {
        Twist(vec![0; s])
    }

    pub fn from_bits(bits: &[u8]) -> Self {
        Twist(bits.iter().map(|b| b & 1).collect())
    }

    /// Reduce an exponent vector of a line bundle `O(a, b, ...)` mod 2.
    pub fn of_bundle(exps: &[i64]) -> Self {
        Twist(exps.iter().map(|a| a.rem_euclid(2) as u8).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.0.iter().all(|b| *b == 0)
    }

    pub fn add(&self, other: &Twist) -> Twist {
        assert_eq!(self.len(), other.len(), "twist length mismatch");
        Twist(self.0.iter().zip(&other.0).map(|(a, b)| a ^ b).collect())
    }

    pub fn scaled(&self, k: u32) -> Twist {
        if k % 2 == 0 {
            Twist::zero(self.len())
        } else {
            self.clone()
        }
    }

    pub fn concat(&self, other: &Twist) -> Twist {
        let mut v = self.0.clone();
        v.extend(&other.0);
        Twist(v)
    }

    pub fn bits(&self) -> String {
        if self.0.is_empty() {
            "-".into()
        } else {
            self.0.iter().map(|b| if *b == 1 { '1' } else { '0' }).collect()
        }
    }

    pub fn parse_bits(s: &str) -> CwResult<Self> {
        if s == "-" {
            return Ok(Twist(vec![]));
        }
        s.chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                _ => Err(CwError::Format(format!("bad twist bits `{s}`"))),
            })
            .collect::<CwResult<Vec<u8>>>()
            .map(Twist)
    }

    /// All twists of length `s` in binary counting order.
    pub fn all(s: usize) -> Vec<Twist> {
        (0..(1usize << s))
            .map(|k| Twist((0..s).map(|i| ((k >> (s - 1 - i)) & 1) as u8).collect()))
            .collect()
    }

    /// Conventional name of the line bundle representative, e.g. `O(1,0)`.
    pub fn bundle_name(&self) -> String {
        if self.0.is_empty() {
            "O".into()
        } else {
            let parts: Vec<String> = self.0.iter().map(|b| b.to_string()).collect();
            format!("O({})", parts.join(","))
        }
    }
}

impl fmt::Display for Twist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.bundle_name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Bidegree {
    pub degree: u32,
    pub twist: Twist,
}

impl Bidegree {
    pub fn new(degree: u32, twist: Twist) -> Self {
        Bidegree { degree, twist }
    }
}

impl fmt::Display for Bidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.degree, self.twist)
    }
}

/// Ideal of the scalar ring annihilating a generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Annihilator {
    None,
    FundamentalIdeal,
    Hyperbolic,
    Custom(Vec<Scalar>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub degree: u32,
    pub twist: Twist,
    pub annihilator: Annihilator,
}

impl Generator {
    pub fn new(name: &str, degree: u32, twist: &[u8], annihilator: Annihilator) -> Self {
        Generator { name: name.into(), degree, twist: Twist::from_bits(twist), annihilator }
    }
}

pub type Exps = Vec<u32>;

/// Finite sum of scalar multiples of normal-ordered monomials.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly {
    pub terms: BTreeMap<Exps, Scalar>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: BTreeMap::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn monomial(exps: Exps, scalar: Scalar) -> Self {
        let mut p = Poly::zero();
        p.add_term(exps, scalar);
        p
    }

    pub fn add_term(&mut self, exps: Exps, scalar: Scalar) {
        if scalar.iter().all(|x| x.is_zero()) {
            return;
        }
        match self.terms.get_mut(&exps) {
            Some(s) => {
                for (a, b) in s.iter_mut().zip(scalar) {
                    *a += b;
                }
                if s.iter().all(|x| x.is_zero()) {
                    self.terms.remove(&exps);
                }
            }
            None => {
                self.terms.insert(exps, scalar);
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut p = self.clone();
        for (e, s) in &other.terms {
            p.add_term(e.clone(), s.clone());
        }
        p
    }

    pub fn neg(&self) -> Poly {
        Poly { terms: self.terms.iter().map(|(e, s)| (e.clone(), s.iter().map(|x| -x).collect())).collect() }
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn scale_int(&self, k: &BigInt) -> Poly {
        let mut p = Poly::zero();
        for (e, s) in &self.terms {
            p.add_term(e.clone(), s.iter().map(|x| x * k).collect());
        }
        p
    }
}

/// A bigraded algebra presented by generators and homogeneous relations.
#[derive(Clone, Debug)]
pub struct RingPresentation {
    pub name: String,
    pub scalar: Arc<ScalarRing>,
    pub twist_rank: usize,
    pub generators: Vec<Generator>,
    pub relations: Vec<Poly>,
    /// Apply the sign `<-1>^{ij}` when reordering factors of degrees `i` and `j`.
    pub graded_commutative: bool,
    /// Cap on the total exponent of degree-zero generators during realization.
    pub window: u32,
}

impl PartialEq for RingPresentation {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
            && self.scalar.label == other.scalar.label
            && self.scalar.field == other.scalar.field
            && self.twist_rank == other.twist_rank
            && self.generators == other.generators
            && self.relations == other.relations
            && self.graded_commutative == other.graded_commutative
    }
}

impl RingPresentation {
    pub fn new(name: &str, scalar: Arc<ScalarRing>, twist_rank: usize, generators: Vec<Generator>) -> Self {
        for g in &generators {
            assert_eq!(g.twist.len(), twist_rank, "generator {} has wrong twist length", g.name);
        }
        RingPresentation {
            name: name.into(),
            scalar,
            twist_rank,
            generators,
            relations: vec![],
            graded_commutative: true,
            window: DEFAULT_WINDOW,
        }
    }

    pub fn ngens(&self) -> usize {
        self.generators.len()
    }

    pub fn gen_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    pub fn one(&self) -> Poly {
        Poly::monomial(vec![0; self.ngens()], self.scalar.one())
    }

    pub fn scalar_poly(&self, s: Scalar) -> Poly {
        Poly::monomial(vec![0; self.ngens()], s)
    }

    pub fn int(&self, n: i64) -> Poly {
        self.scalar_poly(self.scalar.int(n))
    }

    /// The generator with the given name as a polynomial.
    pub fn var(&self, name: &str) -> Poly {
        let i = self.gen_index(name).unwrap_or_else(|| panic!("unknown generator {name} in {}", self.name));
        let mut e = vec![0; self.ngens()];
        e[i] = 1;
        Poly::monomial(e, self.scalar.one())
    }

    /// Parse a polynomial in this presentation's syntax.
    pub fn poly(&self, text: &str) -> CwResult<Poly> {
        text::parse_poly(self, text)
    }

    /// Parse a polynomial, panicking on malformed input; for built-in data.
    pub fn p(&self, text: &str) -> Poly {
        self.poly(text).unwrap_or_else(|e| panic!("bad polynomial `{text}` in {}: {e}", self.name))
    }

    pub fn add_relation(&mut self, r: Poly) -> CwResult<()> {
        self.bidegree_of_poly(&r)?;
        if !r.is_zero() {
            self.relations.push(r);
        }
        Ok(())
    }

    /// Add relations given in text form; panics on malformed built-in data.
    pub fn with_relations(mut self, rels: &[&str]) -> Self {
        for r in rels {
            let p = self.p(r);
            self.add_relation(p).unwrap_or_else(|e| panic!("relation `{r}` in {}: {e}", self.name));
        }
        self
    }

    pub fn bidegree_of(&self, exps: &[u32]) -> Bidegree {
        let mut deg = 0;
        let mut tw = Twist::zero(self.twist_rank);
        for (g, &a) in self.generators.iter().zip(exps) {
            deg += g.degree * a;
            tw = tw.add(&g.twist.scaled(a));
        }
        Bidegree::new(deg, tw)
    }

    /// Common bidegree of all terms; `Ok(None)` for the zero polynomial.
    pub fn bidegree_of_poly(&self, p: &Poly) -> CwResult<Option<Bidegree>> {
        let mut out: Option<Bidegree> = None;
        for e in p.terms.keys() {
            let b = self.bidegree_of(e);
            match &out {
                None => out = Some(b),
                Some(o) if *o != b => {
                    return Err(CwError::Format(format!("inhomogeneous element in {}: {} vs {}", self.name, o, b)))
                }
                _ => {}
            }
        }
        Ok(out)
    }

    /// Relations including those generated by the annihilator tags.
    pub fn all_relations(&self) -> Vec<Poly> {
        let mut rels = self.relations.clone();
        for (i, g) in self.generators.iter().enumerate() {
            let ann: Vec<Scalar> = match &g.annihilator {
                Annihilator::None => vec![],
                Annihilator::FundamentalIdeal => self.scalar.ideal_gens.clone(),
                Annihilator::Hyperbolic => vec![self.scalar.hyperbolic.clone()],
                Annihilator::Custom(v) => v.clone(),
            };
            for a in ann {
                let mut e = vec![0; self.ngens()];
                e[i] = 1;
                let p = Poly::monomial(e, a);
                if !p.is_zero() {
                    rels.push(p);
                }
            }
        }
        rels
    }

    /// Product of normal-ordered monomials; returns whether a sign `<-1>` arises.
    pub fn mul_mono(&self, a: &[u32], b: &[u32]) -> (bool, Exps) {
        let mut parity = 0u64;
        if self.graded_commutative {
            let mut later_odd = 0u64;
            for j in (0..self.ngens()).rev() {
                let dj = self.generators[j].degree as u64;
                parity += (b[j] as u64 * dj) * later_odd;
                later_odd += a[j] as u64 * dj;
            }
        }
        (parity % 2 == 1, a.iter().zip(b).map(|(x, y)| x + y).collect())
    }

    pub fn mul(&self, x: &Poly, y: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (ea, sa) in &x.terms {
            for (eb, sb) in &y.terms {
                let (sign, e) = self.mul_mono(ea, eb);
                let mut s = self.scalar.mul(sa, sb);
                if sign {
                    s = self.scalar.mul(&s, &self.scalar.minus_one);
                }
                out.add_term(e, s);
            }
        }
        out
    }

    pub fn pow(&self, x: &Poly, k: u32) -> Poly {
        let mut out = self.one();
        for _ in 0..k {
            out = self.mul(&out, x);
        }
        out
    }

    pub fn scale(&self, s: &[BigInt], x: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (e, a) in &x.terms {
            out.add_term(e.clone(), self.scalar.mul(s, a));
        }
        out
    }

    /// Monomials killed outright by a relation `unit * m`.
    fn killed_monomials(&self) -> Vec<Exps> {
        let one = self.scalar.one();
        let minus: Scalar = one.iter().map(|x| -x).collect();
        self.all_relations()
            .iter()
            .filter(|r| r.terms.len() == 1)
            .filter_map(|r| {
                let (e, s) = r.terms.iter().next().expect("one term");
                if *s == one || *s == minus {
                    Some(e.clone())
                } else {
                    None
                }
            })
            .collect()
    }

    fn is_killed(killed: &[Exps], e: &[u32]) -> bool {
        killed.iter().any(|k| k.iter().zip(e).all(|(a, b)| a <= b))
    }

    /// Monomials of the given bidegree, in increasing lexicographic order of exponents.
    pub fn monomials(&self, d: &Bidegree, window: u32) -> Vec<Exps> {
        let killed = self.killed_monomials();
        let mut out = Vec::new();
        let mut cur = vec![0u32; self.ngens()];
        self.enumerate(0, d.degree, window, &mut cur, &mut out);
        out.retain(|e| self.bidegree_of(e).twist == d.twist && !Self::is_killed(&killed, e));
        out.sort();
        out
    }

    fn enumerate(&self, i: usize, deg_left: u32, win_left: u32, cur: &mut Exps, out: &mut Vec<Exps>) {
        if i == self.ngens() {
            if deg_left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let g = &self.generators[i];
        let max = if g.degree == 0 { win_left } else { deg_left / g.degree };
        for a in 0..=max {
            cur[i] = a;
            let nd = deg_left - a * g.degree;
            let nw = if g.degree == 0 { win_left - a } else { win_left };
            self.enumerate(i + 1, nd, nw, cur, out);
        }
        cur[i] = 0;
    }

    /// The abelian group in bidegree `d`, generated by scalar basis elements
    /// times monomials modulo the scalar-linearized relations.
    pub fn realize(&self, d: &Bidegree, bound: u32) -> CwResult<Realization> {
        if d.degree > bound {
            return Err(CwError::DegreeBoundExceeded { requested: d.degree, bound });
        }
        if d.twist.len() != self.twist_rank {
            return Err(CwError::TwistMismatch(format!("{} has twist rank {}", self.name, self.twist_rank)));
        }
        let window = self.window;
        let monomials = self.monomials(d, window);
        let killed = self.killed_monomials();
        let sd = self.scalar.dim();
        let index: HashMap<Exps, usize> = monomials.iter().enumerate().map(|(i, e)| (e.clone(), i)).collect();
        let ncols = monomials.len() * sd;
        let mut rows: Vec<SparseRow> = Vec::new();
        for (mi, _) in monomials.iter().enumerate() {
            for r in self.scalar.group.relations().rows_iter() {
                let mut row = SparseRow::new();
                for (si, a) in r.iter().enumerate() {
                    if !a.is_zero() {
                        row.insert(mi * sd + si, a.clone());
                    }
                }
                rows.push(row);
            }
        }
        let scalar_basis: Vec<Scalar> = (0..sd).map(|i| self.scalar.basis(i)).collect();
        for rel in self.all_relations() {
            let Some(rd) = self.bidegree_of_poly(&rel)? else { continue };
            if rd.degree > d.degree {
                continue;
            }
            let md = Bidegree::new(d.degree - rd.degree, d.twist.add(&rd.twist));
            for m in self.monomials(&md, window) {
                'scalars: for s in &scalar_basis {
                    let mut row = SparseRow::new();
                    for (e, a) in &rel.terms {
                        let (sign, prod) = self.mul_mono(&m, e);
                        if Self::is_killed(&killed, &prod) {
                            continue;
                        }
                        let Some(&col) = index.get(&prod) else { continue 'scalars };
                        let mut c = self.scalar.mul(s, a);
                        if sign {
                            c = self.scalar.mul(&c, &self.scalar.minus_one);
                        }
                        for (si, x) in c.into_iter().enumerate() {
                            if !x.is_zero() {
                                *row.entry(col * sd + si).or_insert_with(BigInt::zero) += x;
                            }
                        }
                    }
                    row.retain(|_, v| !v.is_zero());
                    if !row.is_empty() {
                        rows.push(row);
                    }
                }
            }
        }
        let reduced = reduce_presentation(ncols, rows);
        Ok(Realization { bidegree: d.clone(), monomials, index, killed, scalar_dim: sd, reduced })
    }

    pub fn rename(&self, map: &[(&str, &str)]) -> RingPresentation {
        let mut p = self.clone();
        for g in p.generators.iter_mut() {
            if let Some((_, to)) = map.iter().find(|(from, _)| *from == g.name) {
                g.name = to.to_string();
            }
        }
        p
    }

    /// Presentation with extra relations appended.
    pub fn quotient(&self, extra: &[Poly]) -> CwResult<RingPresentation> {
        let mut p = self.clone();
        for r in extra {
            p.add_relation(r.clone())?;
        }
        Ok(p)
    }

    /// Tensor product over the common scalar ring; generators must have distinct names.
    pub fn tensor_product(&self, other: &RingPresentation) -> CwResult<RingPresentation> {
        if self.scalar.label != other.scalar.label || self.scalar.field != other.scalar.field {
            return Err(CwError::Format("tensor product needs a common scalar ring".into()));
        }
        for g in &other.generators {
            if self.gen_index(&g.name).is_some() {
                return Err(CwError::Format(format!("generator {} occurs in both factors", g.name)));
            }
        }
        let s1 = self.twist_rank;
        let s2 = other.twist_rank;
        let mut gens = Vec::new();
        for g in &self.generators {
            gens.push(Generator { twist: g.twist.concat(&Twist::zero(s2)), ..g.clone() });
        }
        for g in &other.generators {
            gens.push(Generator { twist: Twist::zero(s1).concat(&g.twist), ..g.clone() });
        }
        let n1 = self.ngens();
        let n2 = other.ngens();
        let mut p = RingPresentation::new(&format!("{} (x) {}", self.name, other.name), self.scalar.clone(), s1 + s2, gens);
        p.graded_commutative = self.graded_commutative && other.graded_commutative;
        p.window = self.window.max(other.window);
        for r in &self.relations {
            let mut q = Poly::zero();
            for (e, s) in &r.terms {
                let mut e2 = e.clone();
                e2.extend(std::iter::repeat(0).take(n2));
                q.add_term(e2, s.clone());
            }
            p.relations.push(q);
        }
        for r in &other.relations {
            let mut q = Poly::zero();
            for (e, s) in &r.terms {
                let mut e2 = vec![0; n1];
                e2.extend(e.iter().copied());
                q.add_term(e2, s.clone());
            }
            p.relations.push(q);
        }
        Ok(p)
    }

    pub fn to_text(&self) -> String {
        text::to_text(self)
    }

    /// Human-readable monomial, e.g. `H3*e1^2`, or `1`.
    pub fn mono_name(&self, e: &[u32]) -> String {
        let parts: Vec<String> = self
            .generators
            .iter()
            .zip(e)
            .filter(|(_, a)| **a > 0)
            .map(|(g, a)| if *a == 1 { g.name.clone() } else { format!("{}^{}", g.name, a) })
            .collect();
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("*")
        }
    }

    pub fn format_poly(&self, p: &Poly) -> String {
        text::format_poly(self, p)
    }

    /// Multiply two homogeneous elements and return the product in normal form
    /// together with its coordinates in the realized bidegree.
    pub fn multiply(&self, x: &Poly, y: &Poly, bound: u32) -> CwResult<(Poly, Option<Vec<BigInt>>)> {
        let prod = self.mul(x, y);
        let Some(d) = self.bidegree_of_poly(&prod)? else { return Ok((prod, None)) };
        let r = self.realize(&d, bound)?;
        let c = r.coords(&prod)?;
        Ok((prod, Some(c)))
    }

    /// Equality of two homogeneous elements of the same bidegree in the realization.
    pub fn equal_in(&self, x: &Poly, y: &Poly, bound: u32) -> CwResult<bool> {
        let diff = x.sub(y);
        let Some(d) = self.bidegree_of_poly(&diff)? else { return Ok(true) };
        let r = self.realize(&d, bound)?;
        r.is_zero(&diff)
    }
}

/// One bidegree of a presentation as a finitely presented abelian group.
#[derive(Debug)]
pub struct Realization {
    pub bidegree: Bidegree,
    pub monomials: Vec<Exps>,
    index: HashMap<Exps, usize>,
    killed: Vec<Exps>,
    scalar_dim: usize,
    pub reduced: ReducedPresentation,
}

impl Realization {
    pub fn group(&self) -> &FpAbGroup {
        &self.reduced.group
    }

    /// Original column of a (monomial, scalar generator) pair.
    pub fn column(&self, exps: &[u32], scalar_index: usize) -> Option<usize> {
        self.index.get(exps).map(|m| m * self.scalar_dim + scalar_index)
    }

    pub fn column_label(&self, col: usize) -> (Exps, usize) {
        (self.monomials[col / self.scalar_dim].clone(), col % self.scalar_dim)
    }

    pub fn ncols(&self) -> usize {
        self.reduced.ncols()
    }

    /// Sparse vector over original columns for a polynomial of this bidegree.
    pub fn sparse(&self, p: &Poly) -> CwResult<SparseRow> {
        let mut row = SparseRow::new();
        for (e, s) in &p.terms {
            if RingPresentation::is_killed(&self.killed, e) {
                continue;
            }
            let Some(&m) = self.index.get(e) else {
                return Err(CwError::OutOfScope(format!(
                    "monomial {:?} lies outside the realization window of {}",
                    e, self.bidegree
                )));
            };
            for (si, x) in s.iter().enumerate() {
                if !x.is_zero() {
                    *row.entry(m * self.scalar_dim + si).or_insert_with(BigInt::zero) += x;
                }
            }
        }
        Ok(row)
    }

    /// Coordinates of a polynomial on the kept generators of the reduced group.
    pub fn coords(&self, p: &Poly) -> CwResult<Vec<BigInt>> {
        Ok(self.reduced.reduce_sparse(&self.sparse(p)?))
    }

    pub fn is_zero(&self, p: &Poly) -> CwResult<bool> {
        Ok(self.group().is_zero(&self.coords(p)?))
    }

    /// Polynomial represented by a kept-coordinate vector.
    pub fn to_poly(&self, coords: &[BigInt], ngens: usize, sdim: usize) -> Poly {
        let mut p = Poly::zero();
        for (k, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (e, si) = self.column_label(self.reduced.kept()[k]);
            debug_assert_eq!(e.len(), ngens);
            let mut s = vec![BigInt::zero(); sdim];
            s[si] = c.clone();
            p.add_term(e, s);
        }
        p
    }

    /// Names of the kept generators, e.g. `<-1>*H3*e2`.
    pub fn generator_names(&self, pres: &RingPresentation) -> Vec<String> {
        self.reduced
            .kept()
            .iter()
            .map(|&c| {
                let (e, si) = self.column_label(c);
                let m = pres.mono_name(&e);
                if si == 0 {
                    m
                } else if m == "1" {
                    pres.scalar.names[si].clone()
                } else {
                    format!("{}*{}", pres.scalar.names[si], m)
                }
            })
            .collect()
    }

    /// Names of monomials whose classes generate the group, one per nonzero kept column,
    /// restricted to scalar index 0; used for compact reports.
    pub fn monomial_names(&self, pres: &RingPresentation) -> Vec<String> {
        let mut seen = Vec::new();
        for &c in self.reduced.kept() {
            let (e, _) = self.column_label(c);
            let n = pres.mono_name(&e);
            if !seen.contains(&n) {
                seen.push(n);
            }
        }
        seen
    }
}

pub fn one_scalar(n: usize) -> Scalar {
    let mut v = vec![BigInt::zero(); n];
    if n > 0 {
        v[0] = BigInt::one();
    }
    v
}
