//! Sparse presentation reduction: eliminate generators that occur with a unit
//! coefficient in some relation before handing the remainder to dense SNF.

use super::group::FpAbGroup;
use super::matrix::IntMatrix;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::{BTreeMap, BTreeSet, HashMap};

pub type SparseRow = BTreeMap<usize, BigInt>;

/// A presentation `Z^n / rows` rewritten on a subset of the generators.
#[derive(Debug)]
pub struct ReducedPresentation {
    ncols: usize,
    kept: Vec<usize>,
    kept_pos: HashMap<usize, usize>,
    subst: HashMap<usize, Vec<(usize, BigInt)>>,
    pub group: FpAbGroup,
}

impl ReducedPresentation {
    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn kept(&self) -> &[usize] {
        &self.kept
    }

    /// Express a vector over all original generators in kept-generator coordinates.
    pub fn reduce_sparse(&self, v: &SparseRow) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); self.kept.len()];
        for (c, a) in v {
            if a.is_zero() {
                continue;
            }
            if let Some(&p) = self.kept_pos.get(c) {
                out[p] += a;
            } else if let Some(e) = self.subst.get(c) {
                for (p, b) in e {
                    out[*p] += a * b;
                }
            } else {
                panic!("column {c} out of range");
            }
        }
        out
    }

    pub fn reduce_dense(&self, v: &[BigInt]) -> Vec<BigInt> {
        let s: SparseRow = v.iter().enumerate().filter(|(_, a)| !a.is_zero()).map(|(i, a)| (i, a.clone())).collect();
        self.reduce_sparse(&s)
    }

    /// Kept-coordinate vector of a single original generator.
    pub fn reduce_generator(&self, c: usize) -> Vec<BigInt> {
        let mut s = SparseRow::new();
        s.insert(c, BigInt::one());
        self.reduce_sparse(&s)
    }
}

pub fn reduce_presentation(ncols: usize, rows: Vec<SparseRow>) -> ReducedPresentation {
    let mut active: Vec<Option<SparseRow>> = rows
        .into_iter()
        .map(|mut r| {
            r.retain(|_, v| !v.is_zero());
            if r.is_empty() {
                None
            } else {
                Some(r)
            }
        })
        .collect();
    let mut col_rows: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); ncols];
    for (i, r) in active.iter().enumerate() {
        if let Some(r) = r {
            for c in r.keys() {
                col_rows[*c].insert(i);
            }
        }
    }
    let mut eliminated: Vec<(usize, SparseRow)> = Vec::new();
    let mut is_elim = vec![false; ncols];
    loop {
        let mut order: Vec<(usize, usize)> = active
            .iter()
            .enumerate()
            .filter_map(|(i, r)| r.as_ref().map(|r| (r.len(), i)))
            .collect();
        order.sort();
        let mut progress = false;
        for (_, ri) in order {
            let Some(row) = active[ri].as_ref() else { continue };
            let pick = row
                .iter()
                .filter(|(_, v)| v.abs().is_one())
                .min_by_key(|(c, _)| (col_rows[**c].len(), **c))
                .map(|(c, v)| (*c, v.clone()));
            let Some((c, s)) = pick else { continue };
            let row = active[ri].take().expect("active row");
            for k in row.keys() {
                col_rows[*k].remove(&ri);
            }
            let others: Vec<usize> = col_rows[c].iter().copied().collect();
            for oi in others {
                let other = active[oi].as_mut().expect("indexed row is active");
                let b = other.get(&c).cloned().expect("indexed column present");
                let k = -(&b * &s);
                for (col, val) in &row {
                    let e = other.entry(*col).or_insert_with(BigInt::zero);
                    let was_zero = e.is_zero();
                    *e += &k * val;
                    if e.is_zero() {
                        other.remove(col);
                        col_rows[*col].remove(&oi);
                    } else if was_zero {
                        col_rows[*col].insert(oi);
                    }
                }
                if active[oi].as_ref().map_or(false, |r| r.is_empty()) {
                    active[oi] = None;
                }
            }
            // x_c = -s * sum_{j != c} a_j x_j
            let mut expr = SparseRow::new();
            for (col, val) in &row {
                if *col != c {
                    expr.insert(*col, -(val * &s));
                }
            }
            is_elim[c] = true;
            eliminated.push((c, expr));
            progress = true;
        }
        if !progress {
            break;
        }
    }
    let kept: Vec<usize> = (0..ncols).filter(|c| !is_elim[*c]).collect();
    let kept_pos: HashMap<usize, usize> = kept.iter().enumerate().map(|(i, c)| (*c, i)).collect();
    let mut subst: HashMap<usize, Vec<(usize, BigInt)>> = HashMap::new();
    for (c, expr) in eliminated.iter().rev() {
        let mut acc: BTreeMap<usize, BigInt> = BTreeMap::new();
        for (col, a) in expr {
            if let Some(&p) = kept_pos.get(col) {
                *acc.entry(p).or_insert_with(BigInt::zero) += a;
            } else {
                let e = subst.get(col).expect("later elimination resolved first");
                for (p, b) in e {
                    *acc.entry(*p).or_insert_with(BigInt::zero) += a * b;
                }
            }
        }
        subst.insert(*c, acc.into_iter().filter(|(_, v)| !v.is_zero()).collect());
    }
    let mut rel = IntMatrix::zeros(0, kept.len());
    for r in active.into_iter().flatten() {
        let mut dense = vec![BigInt::zero(); kept.len()];
        for (c, v) in r {
            dense[kept_pos[&c]] += v;
        }
        rel.push_row(dense);
    }
    ReducedPresentation { ncols, kept, kept_pos, subst, group: FpAbGroup::new(rel.ncols(), rel) }
}
