//! I-cohomology as the cokernel of the hyperbolic map `h: CH^i(X) -> CH~^i(X, L)`.

use super::{check_canonical, hyperbolic_rows, DerivedPiece, Theory};
use crate::error::{CwError, CwResult};
use crate::graded::{Bidegree, Poly, RingPresentation, Twist};
use crate::linalg::{hermite_basis, FpAbGroup};
use crate::scalar::{shared, ScalarLabel};
use num_bigint::BigInt;
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

pub struct HypQuotient {
    inner: Arc<dyn Theory>,
    carrier: RingPresentation,
    pieces: Mutex<HashMap<Bidegree, Arc<DerivedPiece>>>,
}

impl HypQuotient {
    pub fn new(inner: Arc<dyn Theory>) -> CwResult<Self> {
        let mut carrier = inner.carrier().clone();
        let field = inner.carrier().scalar.field.clone().ok_or_else(|| CwError::Format("carrier has no field".into()))?;
        carrier.scalar = shared(ScalarLabel::W, &field)?;
        carrier.name = carrier.name.replace("carrier", "carrier/h");
        Ok(HypQuotient { inner, carrier, pieces: Mutex::new(HashMap::new()) })
    }

    pub fn inner(&self) -> &Arc<dyn Theory> {
        &self.inner
    }
}

fn unit(n: usize, g: usize) -> Vec<BigInt> {
    (0..n).map(|k| BigInt::from(u8::from(k == g))).collect()
}

impl Theory for HypQuotient {
    fn name(&self) -> String {
        self.inner.name()
    }

    fn carrier(&self) -> &RingPresentation {
        &self.carrier
    }

    fn collapsed(&self) -> &[usize] {
        self.inner.collapsed()
    }

    fn bound(&self) -> u32 {
        self.inner.bound()
    }

    fn piece(&self, d: &Bidegree) -> CwResult<Arc<DerivedPiece>> {
        check_canonical(self, d)?;
        if let Some(p) = self.pieces.lock().expect("cache").get(d) {
            return Ok(p.clone());
        }
        let base = self.inner.piece(d)?;
        let mut rels = base.group.relations().clone();
        for row in hyperbolic_rows(self.inner.as_ref(), d)? {
            rels.push_row(row);
        }
        let group = Arc::new(FpAbGroup::new(base.group.ngens(), hermite_basis(&rels)));
        // a pair (a | y) of the fiber product maps to its I-cohomology component a
        let names = base
            .names
            .iter()
            .enumerate()
            .filter(|(g, _)| !group.is_zero(&unit(group.ngens(), *g)))
            .map(|(_, n)| match n.strip_prefix('(').and_then(|r| r.split_once(" | ")) {
                Some((a, _)) => a.to_string(),
                None => n.clone(),
            })
            .collect();
        let p = Arc::new(DerivedPiece {
            bidegree: d.clone(),
            group,
            rho: None,
            names,
            injectivity_certified: base.injectivity_certified,
        });
        self.pieces.lock().expect("cache").insert(d.clone(), p.clone());
        Ok(p)
    }

    /// Scalars are read in `W` coordinates, which agree with those of `GW`.
    fn coords(&self, d: &Bidegree, p: &Poly) -> CwResult<Vec<BigInt>> {
        self.inner.coords(d, p)
    }

    fn chow_monomials(&self, i: u32) -> Vec<Vec<u32>> {
        self.inner.chow_monomials(i)
    }

    fn chow_group(&self, i: u32) -> Arc<FpAbGroup> {
        self.inner.chow_group(i)
    }

    fn nondiagonal(&self, i: u32, twist: &Twist) -> CwResult<Arc<FpAbGroup>> {
        self.inner.nondiagonal(i, twist)
    }
}
