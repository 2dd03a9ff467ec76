//! Derived theories. Chow-Witt groups of projective spaces and their stable
//! limits are fiber products of I-cohomology and the kernel of the boundary on
//! Chow groups; classifying spaces of `mu_n` are quotients by Euler classes;
//! I-cohomology of any space is the cokernel of the hyperbolic map.
//!
//! Every theory exposes a *carrier*: a free commutative algebra over `GW(k)`
//! (or `W(k)`) on the symbols `H_t`, `e_t`, `R_f`, `U_f`. Elements are written
//! as carrier polynomials and mapped to coordinates bidegree by bidegree.

pub mod checks;
pub mod hyp;
pub mod loc;
pub mod pair;

pub use hyp::HypQuotient;
pub use loc::LocTheory;
pub use pair::PairTheory;

use crate::error::{CwError, CwResult};
use crate::graded::compare::{Model, Piece};
use crate::graded::{Bidegree, Poly, RingPresentation, Twist};
use crate::linalg::{FpAbGroup, GroupHom};
use num_bigint::BigInt;
use num_traits::Zero;
use std::sync::Arc;

/// One bidegree of a derived theory.
#[derive(Debug)]
pub struct DerivedPiece {
    /// Bidegree in carrier twists.
    pub bidegree: Bidegree,
    pub group: Arc<FpAbGroup>,
    /// Reduction to the Chow group of the same degree, when the theory has one.
    pub rho: Option<GroupHom>,
    pub names: Vec<String>,
    /// Whether the fiber-product description is certified in this degree.
    pub injectivity_certified: bool,
}

impl DerivedPiece {
    /// Index of the image of `rho` in the Chow group (`0` for infinite index).
    pub fn rho_image_index(&self) -> Option<BigInt> {
        self.rho.as_ref().map(|r| r.image_index())
    }
}

pub trait Theory: Send + Sync {
    fn name(&self) -> String;
    fn carrier(&self) -> &RingPresentation;
    /// Carrier twist positions that are collapsed (odd `mu_n` factors).
    fn collapsed(&self) -> &[usize];
    fn bound(&self) -> u32;
    /// The group at a carrier bidegree; collapsed twist bits must be zero.
    fn piece(&self, d: &Bidegree) -> CwResult<Arc<DerivedPiece>>;
    /// Coordinates of a carrier polynomial homogeneous of carrier bidegree `d`.
    fn coords(&self, d: &Bidegree, p: &Poly) -> CwResult<Vec<BigInt>>;
    /// Exponent vectors `alpha` of the Chow monomials `c^alpha` spanning degree `i`.
    fn chow_monomials(&self, i: u32) -> Vec<Vec<u32>>;
    /// The Chow group in degree `i`, generated by `chow_monomials(i)`.
    fn chow_group(&self, i: u32) -> Arc<FpAbGroup>;
    /// `H^i(X, I^j, L)` for any `j < i`; with `i = 0` this is `H^0(X, W, L)`.
    fn nondiagonal(&self, i: u32, twist: &Twist) -> CwResult<Arc<FpAbGroup>>;

    fn twist_rank(&self) -> usize {
        self.carrier().twist_rank - self.collapsed().len()
    }

    /// Public twist to carrier twist, inserting zeros at collapsed positions.
    fn lift_twist(&self, t: &Twist) -> CwResult<Twist> {
        if t.len() != self.twist_rank() {
            return Err(CwError::TwistMismatch(format!("{} has twist rank {}", self.name(), self.twist_rank())));
        }
        let mut it = t.0.iter();
        let bits = (0..self.carrier().twist_rank)
            .map(|k| if self.collapsed().contains(&k) { 0 } else { *it.next().expect("length checked") })
            .collect();
        Ok(Twist(bits))
    }

    fn public_twist(&self, t: &Twist) -> Twist {
        Twist(t.0.iter().enumerate().filter(|(k, _)| !self.collapsed().contains(k)).map(|(_, b)| *b).collect())
    }
}

/// Reject carrier bidegrees with a nonzero collapsed bit.
pub(crate) fn check_canonical(t: &dyn Theory, d: &Bidegree) -> CwResult<()> {
    if d.twist.len() != t.carrier().twist_rank {
        return Err(CwError::TwistMismatch(format!(
            "{}: carrier twist rank is {}, got {}",
            t.name(),
            t.carrier().twist_rank,
            d.twist
        )));
    }
    for &k in t.collapsed() {
        if d.twist.0[k] != 0 {
            return Err(CwError::TwistMismatch(format!(
                "{}: twist {} is not canonical; normalize it first",
                t.name(),
                d.twist
            )));
        }
    }
    Ok(())
}

/// Every term of `p` must have carrier bidegree `d`.
pub(crate) fn check_homogeneous(carrier: &RingPresentation, d: &Bidegree, p: &Poly) -> CwResult<()> {
    for e in p.terms.keys() {
        let b = carrier.bidegree_of(e);
        if b != *d {
            return Err(CwError::TwistMismatch(format!(
                "term {} has bidegree {b}, expected {d}",
                carrier.mono_name(e)
            )));
        }
    }
    Ok(())
}

/// Carrier name of `H_t`; `None` for the trivial twist, where it is the scalar `h`.
pub fn h_name(t: &Twist) -> Option<String> {
    symbol("H", t)
}

/// Carrier name of the Euler class `e_t` of the basic line bundle of twist `t`.
pub fn e_name(t: &Twist) -> Option<String> {
    symbol("e", t)
}

fn symbol(stem: &str, t: &Twist) -> Option<String> {
    match t.0.as_slice() {
        [1] => Some(stem.to_string()),
        [1, 0] => Some(format!("{stem}1")),
        [0, 1] => Some(format!("{stem}2")),
        [1, 1] => Some(format!("{stem}3")),
        _ => None,
    }
}

/// Unit twist of factor `f` among `s` factors.
pub fn unit_twist(s: usize, f: usize) -> Twist {
    Twist((0..s).map(|k| u8::from(k == f)).collect())
}

pub fn factor_suffix(s: usize, f: usize) -> String {
    if s == 1 {
        String::new()
    } else {
        (f + 1).to_string()
    }
}

/// `H_t` as a carrier polynomial, with `H_0 = h`.
pub fn h_poly(carrier: &RingPresentation, t: &Twist) -> Poly {
    match h_name(t) {
        Some(n) => carrier.var(&n),
        None => carrier.scalar_poly(carrier.scalar.hyperbolic.clone()),
    }
}

/// `e^alpha = prod_f e_f^{alpha_f}` in the carrier.
pub fn e_monomial(carrier: &RingPresentation, alpha: &[u32]) -> Poly {
    let s = alpha.len();
    let mut p = carrier.one();
    for (f, &a) in alpha.iter().enumerate() {
        let name = e_name(&unit_twist(s, f)).expect("unit twist");
        p = carrier.mul(&p, &carrier.pow(&carrier.var(&name), a));
    }
    p
}

pub fn parity(alpha: &[u32]) -> Twist {
    Twist(alpha.iter().map(|a| (a % 2) as u8).collect())
}

/// Images `h_L(c^alpha) = H_{L + alpha} e^alpha` of the Chow monomials of degree `d.degree`.
pub fn hyperbolic_polys(t: &dyn Theory, d: &Bidegree) -> Vec<Poly> {
    let carrier = t.carrier();
    t.chow_monomials(d.degree)
        .iter()
        .map(|alpha| carrier.mul(&h_poly(carrier, &d.twist.add(&parity(alpha))), &e_monomial(carrier, alpha)))
        .collect()
}

/// Coordinates of the hyperbolic images in the piece at `d`.
pub fn hyperbolic_rows(t: &dyn Theory, d: &Bidegree) -> CwResult<Vec<Vec<BigInt>>> {
    hyperbolic_polys(t, d).iter().map(|p| t.coords(d, p)).collect()
}

/// Euler class of `O(n)` pulled back along factor `f`, in closed form:
/// `-n e_f` for odd `n` and `-(n/2) H_f e_f` for even `n`.
pub fn euler_closed_form(carrier: &RingPresentation, f: usize, n: i64) -> Poly {
    let s = carrier.twist_rank;
    let u = unit_twist(s, f);
    let e = carrier.var(&e_name(&u).expect("unit twist"));
    if n % 2 != 0 {
        e.scale_int(&BigInt::from(-n))
    } else {
        carrier.mul(&carrier.var(&h_name(&u).expect("unit twist")), &e).scale_int(&BigInt::from(-n / 2))
    }
}

/// Euler class of `O(n)` along factor `f` obtained from `e(O(-1)) = e_f`, `e(O) = 0`
/// and repeated use of `e(L (x) M^2) = e(L) + h_L(c(M))` with `M = O(+-1)`.
pub fn euler_by_tensor(carrier: &RingPresentation, f: usize, n: i64) -> Poly {
    let s = carrier.twist_rank;
    let u = unit_twist(s, f);
    let e = carrier.var(&e_name(&u).expect("unit twist"));
    // h_L(c(O(1))) = -h_L(c) with c = c(O(-1)); h_L(c) = H_{L+u} e_f
    let h_of_c = |l: i64| -> Poly {
        let t = if l.rem_euclid(2) == 1 { u.clone() } else { Twist::zero(s) };
        carrier.mul(&h_poly(carrier, &t.add(&u)), &e)
    };
    let (mut k, mut cur) = if n % 2 == 0 { (0i64, Poly::zero()) } else { (-1i64, e.clone()) };
    while k < n {
        cur = cur.sub(&h_of_c(k));
        k += 2;
    }
    while k > n {
        // e(O(k-2)) = e(O(k)) - h_{O(k-2)}(c(O(-1)))
        k -= 2;
        cur = cur.add(&h_of_c(k));
    }
    cur
}

/// Symbol substitution `psi` identifying the twists along an odd `mu_n` factor:
/// `H_f -> h`, `e_f -> ((n+1)/2) H_f e_f`, `H_3 -> H_o`, `e_3 -> ((n+1)/2) H_3 e_f + e_o`.
/// Monomials already at a canonical twist are left unchanged.
pub fn twist_normalize(carrier: &RingPresentation, p: &Poly, odd_sides: &[(usize, u64)]) -> Poly {
    let mut cur = p.clone();
    for &(f, n) in odd_sides {
        cur = normalize_side(carrier, &cur, f, n);
    }
    cur
}

fn normalize_side(carrier: &RingPresentation, p: &Poly, f: usize, n: u64) -> Poly {
    let s = carrier.twist_rank;
    let u = unit_twist(s, f);
    let half = BigInt::from((n + 1) / 2);
    let images: Vec<Poly> = carrier
        .generators
        .iter()
        .map(|g| {
            let v = carrier.var(&g.name);
            if g.twist.0.get(f).copied().unwrap_or(0) == 0 {
                return v;
            }
            let hf = h_poly(carrier, &u);
            let ef = carrier.var(&e_name(&u).expect("unit twist"));
            if g.degree == 0 {
                // H_t with bit f set maps to H_{t - u}
                h_poly(carrier, &g.twist.add(&u))
            } else if g.twist == u {
                carrier.mul(&hf, &ef).scale_int(&half)
            } else if g.name.starts_with('e') {
                let rest = g.twist.add(&u);
                let eo = carrier.var(&e_name(&rest).expect("nonzero twist"));
                carrier.mul(&carrier.var(&g.name.replace('e', "H")), &ef).scale_int(&half).add(&eo)
            } else {
                v
            }
        })
        .collect();
    let mut out = Poly::zero();
    for (e, sc) in &p.terms {
        let tw = carrier.bidegree_of(e).twist;
        if tw.0.get(f).copied().unwrap_or(0) == 0 {
            out.add_term(e.clone(), sc.clone());
            continue;
        }
        let mut m = carrier.scalar_poly(sc.clone());
        for (g, &a) in e.iter().enumerate() {
            m = carrier.mul(&m, &carrier.pow(&images[g], a));
        }
        out = out.add(&m);
    }
    out
}

/// A theory viewed as a [`Model`] over its public twists.
#[derive(Clone)]
pub struct TheoryModel(pub Arc<dyn Theory>);

pub struct TheoryPiece {
    theory: Arc<dyn Theory>,
    at: Bidegree,
    pub piece: Arc<DerivedPiece>,
}

impl Piece<Poly> for TheoryPiece {
    fn group(&self) -> &FpAbGroup {
        &self.piece.group
    }

    fn coords(&self, e: &Poly) -> CwResult<Vec<BigInt>> {
        self.theory.coords(&self.at, e)
    }
}

impl Model for TheoryModel {
    type Elem = Poly;
    type Piece = TheoryPiece;

    fn twist_rank(&self) -> usize {
        self.0.twist_rank()
    }

    fn one(&self) -> Poly {
        self.0.carrier().one()
    }

    fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        self.0.carrier().mul(a, b)
    }

    fn add(&self, a: &Poly, b: &Poly) -> Poly {
        a.add(b)
    }

    fn zero(&self) -> Poly {
        Poly::zero()
    }

    fn act(&self, s: &[BigInt], a: &Poly) -> Poly {
        self.0.carrier().scale(s, a)
    }

    fn piece(&self, d: &Bidegree, _bound: u32) -> CwResult<TheoryPiece> {
        let at = Bidegree::new(d.degree, self.0.lift_twist(&d.twist)?);
        let piece = self.0.piece(&at)?;
        Ok(TheoryPiece { theory: self.0.clone(), at, piece })
    }
}

/// Render an integer combination of labels, e.g. `2*c1 - c2`.
pub(crate) fn format_combination(coeffs: &[BigInt], labels: &[String]) -> String {
    let mut s = String::new();
    for (c, l) in coeffs.iter().zip(labels) {
        if c.is_zero() {
            continue;
        }
        let neg = c < &BigInt::zero();
        let a = if neg { -c } else { c.clone() };
        if s.is_empty() {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        if a == BigInt::from(1) {
            s.push_str(l);
        } else if l == "1" {
            s.push_str(&a.to_string());
        } else {
            s.push_str(&format!("{a}*{l}"));
        }
    }
    if s.is_empty() {
        "0".into()
    } else {
        s
    }
}

/// Chow monomial label `c1^2*c2`, `c^3`, or `1`.
pub(crate) fn chow_label(alpha: &[u32]) -> String {
    let s = alpha.len();
    let parts: Vec<String> = alpha
        .iter()
        .enumerate()
        .filter(|(_, a)| **a > 0)
        .map(|(f, a)| {
            let c = format!("c{}", factor_suffix(s, f));
            if *a == 1 {
                c
            } else {
                format!("{c}^{a}")
            }
        })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

/// All `alpha` with `sum = i` and `alpha_f <= caps[f]`, lexicographically increasing.
pub(crate) fn exponent_vectors(i: u32, caps: &[u32]) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; caps.len()];
    fn go(k: usize, left: u32, caps: &[u32], cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k + 1 == caps.len() {
            if left <= caps[k] {
                cur[k] = left;
                out.push(cur.clone());
            }
            return;
        }
        for a in 0..=left.min(caps[k]) {
            cur[k] = a;
            go(k + 1, left - a, caps, cur, out);
        }
        cur[k] = 0;
    }
    if !caps.is_empty() {
        go(0, i, caps, &mut cur, &mut out);
    }
    out.sort();
    out
}
