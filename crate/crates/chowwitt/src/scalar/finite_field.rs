//! Small finite fields `F_q` by explicit tables, and a brute-force classifier
//! of quadratic forms over them.

use crate::error::{CwError, CwResult};

/// `F_q` for a small odd prime power `q`, with elements `0..q`.
#[derive(Clone, Debug)]
pub struct SmallField {
    pub q: u64,
    pub p: u64,
    add: Vec<Vec<u32>>,
    mul: Vec<Vec<u32>>,
}

pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q && q % p != 0 {
        p += 1;
    }
    if q % p != 0 {
        p = q;
    }
    let mut k = 0;
    let mut r = q;
    while r % p == 0 {
        r /= p;
        k += 1;
    }
    if r == 1 {
        Some((p, k))
    } else {
        None
    }
}

impl SmallField {
    pub fn new(q: u64) -> CwResult<Self> {
        let (p, k) = prime_power(q).ok_or(CwError::UnsupportedField(format!("{q} is not a prime power")))?;
        if p == 2 {
            return Err(CwError::UnsupportedField("characteristic 2".into()));
        }
        // elements are base-p digit vectors of length k; multiplication modulo a monic irreducible
        let modulus = if k == 1 { vec![0, 1] } else { find_irreducible(p, k) };
        let n = q as usize;
        let digits = |x: usize| -> Vec<u64> {
            let mut v = vec![0; k as usize];
            let mut y = x as u64;
            for d in v.iter_mut() {
                *d = y % p;
                y /= p;
            }
            v
        };
        let undigits = |v: &[u64]| -> u32 { v.iter().rev().fold(0u64, |acc, d| acc * p + d) as u32 };
        let mut add = vec![vec![0u32; n]; n];
        let mut mul = vec![vec![0u32; n]; n];
        for a in 0..n {
            let da = digits(a);
            for b in 0..n {
                let db = digits(b);
                let s: Vec<u64> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[a][b] = undigits(&s);
                let prod = poly_mulmod(&da, &db, &modulus, p);
                mul[a][b] = undigits(&prod);
            }
        }
        Ok(SmallField { q, p, add, mul })
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.add[a as usize][b as usize]
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[a as usize][b as usize]
    }

    pub fn neg(&self, a: u32) -> u32 {
        (0..self.q as u32).find(|&b| self.add(a, b) == 0).expect("additive inverse")
    }

    pub fn units(&self) -> impl Iterator<Item = u32> {
        1..self.q as u32
    }

    pub fn is_square(&self, a: u32) -> bool {
        (0..self.q as u32).any(|x| self.mul(x, x) == a)
    }

    /// Smallest nonsquare unit.
    pub fn nonsquare(&self) -> u32 {
        self.units().find(|&a| !self.is_square(a)).expect("odd finite fields have nonsquares")
    }

    pub fn minus_one(&self) -> u32 {
        self.neg(1)
    }

    /// Value of the diagonal form `<a_1, ..., a_n>` at `x`.
    pub fn eval_form(&self, form: &[u32], x: &[u32]) -> u32 {
        form.iter().zip(x).fold(0, |acc, (a, xi)| self.add(acc, self.mul(*a, self.mul(*xi, *xi))))
    }

    /// Brute-force isotropy test for a diagonal form.
    pub fn is_isotropic(&self, form: &[u32]) -> bool {
        let n = form.len();
        let q = self.q as u32;
        let mut x = vec![0u32; n];
        loop {
            let mut i = 0;
            loop {
                if i == n {
                    return false;
                }
                x[i] += 1;
                if x[i] < q {
                    break;
                }
                x[i] = 0;
                i += 1;
            }
            if self.eval_form(form, &x) == 0 {
                return true;
            }
        }
    }

    /// Brute-force isometry test `<a, b> ~ <c, d>` over all 2x2 matrices.
    pub fn binary_isometric(&self, f: [u32; 2], g: [u32; 2]) -> bool {
        let q = self.q as u32;
        for x in 0..q {
            for z in 0..q {
                if self.add(self.mul(f[0], self.mul(x, x)), self.mul(f[1], self.mul(z, z))) != g[0] {
                    continue;
                }
                for y in 0..q {
                    for w in 0..q {
                        let det = self.add(self.mul(x, w), self.neg(self.mul(y, z)));
                        if det == 0 {
                            continue;
                        }
                        let d = self.add(self.mul(f[0], self.mul(y, y)), self.mul(f[1], self.mul(w, w)));
                        let off = self.add(self.mul(f[0], self.mul(x, y)), self.mul(f[1], self.mul(z, w)));
                        if d == g[1] && off == 0 {
                            return true;
                        }
                    }
                }
            }
        }
        false
    }

    /// Brute-force test that `<a>` and `<b>` are isometric, i.e. `b = a x^2`.
    pub fn unary_isometric(&self, a: u32, b: u32) -> bool {
        (1..self.q as u32).any(|x| self.mul(a, self.mul(x, x)) == b)
    }
}

fn poly_mulmod(a: &[u64], b: &[u64], modulus: &[u64], p: u64) -> Vec<u64> {
    let k = a.len();
    let mut prod = vec![0u64; 2 * k];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    // modulus is monic of degree k, given by its k lower coefficients followed by 1
    for deg in (k..2 * k).rev() {
        let c = prod[deg];
        if c == 0 {
            continue;
        }
        prod[deg] = 0;
        for (i, m) in modulus.iter().take(k).enumerate() {
            let idx = deg - k + i;
            prod[idx] = (prod[idx] + (p - (c * m) % p)) % p;
        }
    }
    prod.truncate(k);
    prod
}

fn find_irreducible(p: u64, k: u32) -> Vec<u64> {
    let k = k as usize;
    let total = p.pow(k as u32);
    for code in 0..total {
        let mut coeffs = Vec::with_capacity(k + 1);
        let mut c = code;
        for _ in 0..k {
            coeffs.push(c % p);
            c /= p;
        }
        coeffs.push(1);
        if is_irreducible(&coeffs, p) {
            return coeffs;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

fn is_irreducible(f: &[u64], p: u64) -> bool {
    let deg = f.len() - 1;
    // trial division by every monic polynomial of degree 1..=deg/2
    for d in 1..=deg / 2 {
        let total = p.pow(d as u32);
        for code in 0..total {
            let mut g = Vec::with_capacity(d + 1);
            let mut c = code;
            for _ in 0..d {
                g.push(c % p);
                c /= p;
            }
            g.push(1);
            if poly_rem(f, &g, p).iter().all(|&x| x == 0) {
                return false;
            }
        }
    }
    true
}

fn poly_rem(f: &[u64], g: &[u64], p: u64) -> Vec<u64> {
    let mut r = f.to_vec();
    let dg = g.len() - 1;
    while r.len() > dg {
        let lead = *r.last().expect("nonempty");
        let shift = r.len() - 1 - dg;
        for (i, gi) in g.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - (lead * gi) % p) % p;
        }
        r.pop();
    }
    r
}
