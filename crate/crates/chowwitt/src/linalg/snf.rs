//! Smith and Hermite normal forms over the integers.

use super::matrix::IntMatrix;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Result of a Smith normal form computation: `u * m * v == d`.
#[derive(Clone, Debug)]
pub struct Snf {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
    pub rank: usize,
}

impl Snf {
    /// The nonzero diagonal entries, in divisibility order.
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.rank).map(|i| self.d.get(i, i).clone()).collect()
    }
}

struct Work {
    a: IntMatrix,
    u: Option<IntMatrix>,
    v: IntMatrix,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows(i, j);
        if let Some(u) = self.u.as_mut() {
            u.swap_rows(i, j);
        }
    }
    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols(i, j);
        self.v.swap_cols(i, j);
    }
    fn add_row(&mut self, dst: usize, src: usize, k: &BigInt) {
        self.a.add_row_multiple(dst, src, k);
        if let Some(u) = self.u.as_mut() {
            u.add_row_multiple(dst, src, k);
        }
    }
    fn add_col(&mut self, dst: usize, src: usize, k: &BigInt) {
        self.a.add_col_multiple(dst, src, k);
        self.v.add_col_multiple(dst, src, k);
    }
    fn negate_row(&mut self, i: usize) {
        self.a.negate_row(i);
        if let Some(u) = self.u.as_mut() {
            u.negate_row(i);
        }
    }
}

fn run(m: &IntMatrix, track_u: bool) -> (IntMatrix, Option<IntMatrix>, IntMatrix, usize) {
    let (r, c) = (m.nrows(), m.ncols());
    let mut w = Work {
        a: m.clone(),
        u: if track_u { Some(IntMatrix::identity(r)) } else { None },
        v: IntMatrix::identity(c),
    };
    let mut t = 0;
    while t < r.min(c) {
        // smallest nonzero entry of the trailing block becomes the pivot
        let mut best: Option<(usize, usize, BigInt)> = None;
        for i in t..r {
            for j in t..c {
                let x = w.a.get(i, j);
                if !x.is_zero() {
                    let ax = x.abs();
                    if best.as_ref().map_or(true, |b| ax < b.2) {
                        best = Some((i, j, ax));
                    }
                }
            }
        }
        let Some((pi, pj, _)) = best else { break };
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);
        loop {
            let p = w.a.get(t, t).clone();
            let mut clean = true;
            for i in t + 1..r {
                let x = w.a.get(i, t).clone();
                if !x.is_zero() {
                    let q = x.div_floor(&p);
                    w.add_row(i, t, &-q);
                    if !w.a.get(i, t).is_zero() {
                        clean = false;
                    }
                }
            }
            for j in t + 1..c {
                let x = w.a.get(t, j).clone();
                if !x.is_zero() {
                    let q = x.div_floor(&p);
                    w.add_col(j, t, &-q);
                    if !w.a.get(t, j).is_zero() {
                        clean = false;
                    }
                }
            }
            if !clean {
                // a remainder smaller than the pivot exists in row or column t
                let mut best = (t, t, w.a.get(t, t).abs());
                for i in t + 1..r {
                    let x = w.a.get(i, t);
                    if !x.is_zero() && x.abs() < best.2 {
                        best = (i, t, x.abs());
                    }
                }
                for j in t + 1..c {
                    let x = w.a.get(t, j);
                    if !x.is_zero() && x.abs() < best.2 {
                        best = (t, j, x.abs());
                    }
                }
                w.swap_rows(t, best.0);
                w.swap_cols(t, best.1);
                continue;
            }
            let mut offender = None;
            'outer: for i in t + 1..r {
                for j in t + 1..c {
                    if !w.a.get(i, j).is_multiple_of(&p) {
                        offender = Some(i);
                        break 'outer;
                    }
                }
            }
            match offender {
                Some(i) => {
                    w.add_row(t, i, &BigInt::one());
                }
                None => break,
            }
        }
        if w.a.get(t, t).is_negative() {
            w.negate_row(t);
        }
        t += 1;
    }
    (w.a, w.u, w.v, t)
}

/// Smith normal form with both transforms.
pub fn smith_normal_form(m: &IntMatrix) -> Snf {
    let (d, u, v, rank) = run(m, true);
    Snf { u: u.expect("tracked"), d, v, rank }
}

/// Smith normal form tracking only the column transform; returns `(diagonal, v)`.
pub fn smith_cols(m: &IntMatrix) -> (Vec<BigInt>, IntMatrix) {
    let (d, _, v, rank) = run(m, false);
    ((0..rank).map(|i| d.get(i, i).clone()).collect(), v)
}

/// Row-style Hermite normal form. Returns `(h, t)` with `t * m == h`, `t` unimodular;
/// nonzero rows of `h` come first, are in echelon form with positive pivots,
/// and entries above each pivot are reduced into `[0, pivot)`.
pub fn hermite_with_transform(m: &IntMatrix, track: bool) -> (IntMatrix, Option<IntMatrix>, usize) {
    let (r, c) = (m.nrows(), m.ncols());
    let mut a = m.clone();
    let mut t = if track { Some(IntMatrix::identity(r)) } else { None };
    let mut prow = 0;
    let mut pivots = Vec::new();
    for col in 0..c {
        if prow == r {
            break;
        }
        loop {
            let mut best: Option<(usize, BigInt)> = None;
            for i in prow..r {
                let x = a.get(i, col);
                if !x.is_zero() {
                    let ax = x.abs();
                    if best.as_ref().map_or(true, |b| ax < b.1) {
                        best = Some((i, ax));
                    }
                }
            }
            let Some((bi, _)) = best else { break };
            a.swap_rows(prow, bi);
            if let Some(t) = t.as_mut() {
                t.swap_rows(prow, bi);
            }
            let p = a.get(prow, col).clone();
            let mut done = true;
            for i in prow + 1..r {
                let x = a.get(i, col).clone();
                if !x.is_zero() {
                    let q = x.div_floor(&p);
                    a.add_row_multiple(i, prow, &-&q);
                    if let Some(t) = t.as_mut() {
                        t.add_row_multiple(i, prow, &-&q);
                    }
                    if !a.get(i, col).is_zero() {
                        done = false;
                    }
                }
            }
            if done {
                break;
            }
        }
        if prow < r && !a.get(prow, col).is_zero() {
            if a.get(prow, col).is_negative() {
                a.negate_row(prow);
                if let Some(t) = t.as_mut() {
                    t.negate_row(prow);
                }
            }
            let p = a.get(prow, col).clone();
            for i in 0..prow {
                let x = a.get(i, col).clone();
                if !x.is_zero() {
                    let q = x.div_floor(&p);
                    a.add_row_multiple(i, prow, &-&q);
                    if let Some(t) = t.as_mut() {
                        t.add_row_multiple(i, prow, &-&q);
                    }
                }
            }
            pivots.push(col);
            prow += 1;
        }
    }
    (a, t, prow)
}

/// Hermite basis (nonzero rows only) of the row lattice of `m`.
pub fn hermite_basis(m: &IntMatrix) -> IntMatrix {
    let (h, _, rank) = hermite_with_transform(m, false);
    h.select_rows(&(0..rank).collect::<Vec<_>>())
}

/// Basis of the left kernel `{x : x * m == 0}`.
pub fn left_kernel(m: &IntMatrix) -> IntMatrix {
    let (_, t, rank) = hermite_with_transform(m, true);
    let t = t.expect("tracked");
    t.select_rows(&(rank..m.nrows()).collect::<Vec<_>>())
}

/// Solve `c * basis == v` for a Hermite basis; `None` if `v` is not in the lattice.
pub fn solve_in_hermite(basis: &IntMatrix, v: &[BigInt]) -> Option<Vec<BigInt>> {
    let mut rest = v.to_vec();
    let mut coeffs = vec![BigInt::zero(); basis.nrows()];
    let mut col = 0;
    for i in 0..basis.nrows() {
        while col < basis.ncols() && basis.get(i, col).is_zero() {
            if !rest[col].is_zero() {
                return None;
            }
            col += 1;
        }
        if col == basis.ncols() {
            break;
        }
        let p = basis.get(i, col);
        let (q, rem) = rest[col].div_rem(p);
        if !rem.is_zero() {
            return None;
        }
        if !q.is_zero() {
            for j in col..basis.ncols() {
                let b = basis.get(i, j);
                if !b.is_zero() {
                    rest[j] -= &q * b;
                }
            }
        }
        coeffs[i] = q;
        col += 1;
    }
    if rest.iter().all(|x| x.is_zero()) {
        Some(coeffs)
    } else {
        None
    }
}
