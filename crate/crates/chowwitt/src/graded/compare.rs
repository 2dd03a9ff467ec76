//! Comparison of a presentation against any bigraded model through a
//! generator correspondence, bidegree by bidegree.

use super::{Bidegree, Exps, Poly, Realization, RingPresentation, Twist};
use crate::error::{CwError, CwResult};
use crate::linalg::{FpAbGroup, GroupHom, GroupType, IntMatrix};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

/// A bigraded ring in which the images of a presentation's generators live.
pub trait Model {
    type Elem: Clone;
    type Piece: Piece<Self::Elem>;

    fn twist_rank(&self) -> usize;
    fn one(&self) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn zero(&self) -> Self::Elem;
    /// Action of a scalar given in the source presentation's scalar coordinates.
    fn act(&self, s: &[BigInt], a: &Self::Elem) -> Self::Elem;
    fn piece(&self, d: &Bidegree, bound: u32) -> CwResult<Self::Piece>;
}

pub trait Piece<E> {
    fn group(&self) -> &FpAbGroup;
    fn coords(&self, e: &E) -> CwResult<Vec<BigInt>>;
}

impl Piece<Poly> for Realization {
    fn group(&self) -> &FpAbGroup {
        Realization::group(self)
    }

    fn coords(&self, e: &Poly) -> CwResult<Vec<BigInt>> {
        Realization::coords(self, e)
    }
}

impl Model for RingPresentation {
    type Elem = Poly;
    type Piece = Realization;

    fn twist_rank(&self) -> usize {
        self.twist_rank
    }

    fn one(&self) -> Poly {
        RingPresentation::one(self)
    }

    fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        RingPresentation::mul(self, a, b)
    }

    fn add(&self, a: &Poly, b: &Poly) -> Poly {
        a.add(b)
    }

    fn zero(&self) -> Poly {
        Poly::zero()
    }

    fn act(&self, s: &[BigInt], a: &Poly) -> Poly {
        self.scale(s, a)
    }

    fn piece(&self, d: &Bidegree, bound: u32) -> CwResult<Realization> {
        self.realize(d, bound)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Iso,
    InjectiveOnly,
    SurjectiveOnly,
    Neither,
}

impl Verdict {
    pub fn from_flags(injective: bool, surjective: bool) -> Self {
        match (injective, surjective) {
            (true, true) => Verdict::Iso,
            (true, false) => Verdict::InjectiveOnly,
            (false, true) => Verdict::SurjectiveOnly,
            (false, false) => Verdict::Neither,
        }
    }

    pub fn injective(self) -> bool {
        matches!(self, Verdict::Iso | Verdict::InjectiveOnly)
    }

    pub fn surjective(self) -> bool {
        matches!(self, Verdict::Iso | Verdict::SurjectiveOnly)
    }

    pub fn meet(self, other: Verdict) -> Verdict {
        Verdict::from_flags(self.injective() && other.injective(), self.surjective() && other.surjective())
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Verdict::Iso => "iso",
            Verdict::InjectiveOnly => "injective-not-surjective",
            Verdict::SurjectiveOnly => "surjective-not-injective",
            Verdict::Neither => "neither",
        };
        write!(f, "{s}")
    }
}

/// Images of the source generators together with the induced map on twists.
#[derive(Clone, Debug)]
pub struct Correspondence<E> {
    pub images: Vec<E>,
    /// Row `k` gives target twist bit `k` as a mod-2 combination of source bits.
    pub twist_map: Vec<Vec<u8>>,
}

impl<E> Correspondence<E> {
    pub fn identity_twists(images: Vec<E>, s: usize) -> Self {
        let twist_map = (0..s).map(|k| (0..s).map(|j| u8::from(j == k)).collect()).collect();
        Correspondence { images, twist_map }
    }

    pub fn map_twist(&self, t: &Twist) -> Twist {
        Twist(
            self.twist_map
                .iter()
                .map(|row| row.iter().zip(&t.0).fold(0u8, |acc, (a, b)| acc ^ (a & b)))
                .collect(),
        )
    }
}

impl Correspondence<Poly> {
    /// Correspondence of presentations given by text images; generators not
    /// listed go to the target generator of the same name.
    pub fn by_text(src: &RingPresentation, tgt: &RingPresentation, images: &[(&str, &str)]) -> CwResult<Self> {
        let mut out = Vec::new();
        for g in &src.generators {
            let img = match images.iter().find(|(n, _)| *n == g.name) {
                Some((_, t)) => tgt.poly(t)?,
                None => match tgt.gen_index(&g.name) {
                    Some(_) => tgt.var(&g.name),
                    None => {
                        return Err(CwError::InvalidCorrespondence(format!("no image given for generator {}", g.name)))
                    }
                },
            };
            out.push(img);
        }
        Ok(Correspondence::identity_twists(out, src.twist_rank))
    }
}

#[derive(Clone, Debug)]
pub struct BidegreeComparison {
    pub source: Option<Bidegree>,
    pub target: Bidegree,
    pub source_type: GroupType,
    pub target_type: GroupType,
    pub verdict: Verdict,
}

#[derive(Clone, Debug)]
pub struct ComparisonReport {
    pub entries: Vec<BidegreeComparison>,
    pub overall: Verdict,
}

impl ComparisonReport {
    pub fn failing(&self) -> Vec<&BidegreeComparison> {
        self.entries.iter().filter(|e| e.verdict != Verdict::Iso).collect()
    }
}

struct Evaluator<'a, M: Model> {
    src: &'a RingPresentation,
    model: &'a M,
    images: &'a [M::Elem],
    cache: HashMap<Exps, M::Elem>,
}

impl<M: Model> Evaluator<'_, M> {
    fn monomial(&mut self, e: &Exps) -> M::Elem {
        if let Some(x) = self.cache.get(e) {
            return x.clone();
        }
        let mut acc = self.model.one();
        for (g, &a) in e.iter().enumerate() {
            for _ in 0..a {
                acc = self.model.mul(&acc, &self.images[g]);
            }
        }
        self.cache.insert(e.clone(), acc.clone());
        acc
    }

    fn poly(&mut self, p: &Poly) -> M::Elem {
        let mut acc = self.model.zero();
        for (e, s) in &p.terms {
            let m = self.monomial(e);
            acc = self.model.add(&acc, &self.model.act(s, &m));
        }
        acc
    }

    fn column(&mut self, r: &Realization, col: usize) -> M::Elem {
        let (e, si) = r.column_label(col);
        let m = self.monomial(&e);
        self.model.act(&self.src.scalar.basis(si), &m)
    }
}

/// Homomorphism induced on one bidegree; errors if a relation fails to map to zero.
pub fn induced_hom<M: Model>(
    src: &RingPresentation,
    model: &M,
    corr: &Correspondence<M::Elem>,
    d: &Bidegree,
    bound: u32,
) -> CwResult<(Realization, M::Piece, GroupHom)> {
    let mut ev = Evaluator { src, model, images: &corr.images, cache: HashMap::new() };
    let r = src.realize(d, bound)?;
    let d2 = Bidegree::new(d.degree, corr.map_twist(&d.twist));
    let piece = model.piece(&d2, bound)?;
    let mut rows = Vec::new();
    for &c in r.reduced.kept() {
        let x = ev.column(&r, c);
        rows.push(piece.coords(&x)?);
    }
    let target = Arc::new(piece.group().clone());
    let m = IntMatrix::from_rows(target.ngens(), rows);
    let hom = GroupHom::new(Arc::new(r.group().clone()), target, m);
    if !hom.is_well_defined() {
        return Err(CwError::InvalidCorrespondence(format!("induced map on {d} is not well defined")));
    }
    Ok((r, piece, hom))
}

/// Check that every relation of `src` up to the bound maps to zero.
pub fn check_relations<M: Model>(src: &RingPresentation, model: &M, corr: &Correspondence<M::Elem>, bound: u32) -> CwResult<()> {
    if corr.images.len() != src.ngens() {
        return Err(CwError::InvalidCorrespondence(format!(
            "{} images for {} generators",
            corr.images.len(),
            src.ngens()
        )));
    }
    let mut ev = Evaluator { src, model, images: &corr.images, cache: HashMap::new() };
    for rel in src.all_relations() {
        let Some(rd) = src.bidegree_of_poly(&rel)? else { continue };
        if rd.degree > bound {
            continue;
        }
        let d2 = Bidegree::new(rd.degree, corr.map_twist(&rd.twist));
        let piece = model.piece(&d2, bound)?;
        let x = ev.poly(&rel);
        if !piece.group().is_zero(&piece.coords(&x)?) {
            return Err(CwError::InvalidCorrespondence(format!(
                "relation {} does not map to zero",
                src.format_poly(&rel)
            )));
        }
    }
    Ok(())
}

/// Per-bidegree verdicts for the map induced by `corr`, over all bidegrees up to `bound`.
pub fn compare<M: Model>(
    src: &RingPresentation,
    model: &M,
    corr: &Correspondence<M::Elem>,
    bound: u32,
) -> CwResult<ComparisonReport> {
    check_relations(src, model, corr, bound)?;
    let mut entries = Vec::new();
    let mut overall = Verdict::Iso;
    let tgt_twists = Twist::all(model.twist_rank());
    for degree in 0..=bound {
        let mut hit = Vec::new();
        for t in Twist::all(src.twist_rank) {
            let d = Bidegree::new(degree, t);
            let (r, piece, hom) = induced_hom(src, model, corr, &d, bound)?;
            let v = Verdict::from_flags(hom.is_injective(), hom.is_surjective());
            overall = overall.meet(v);
            let target = Bidegree::new(degree, corr.map_twist(&d.twist));
            if !hit.contains(&target.twist) {
                hit.push(target.twist.clone());
            }
            entries.push(BidegreeComparison {
                source: Some(d),
                target,
                source_type: r.group().group_type(),
                target_type: piece.group().group_type(),
                verdict: v,
            });
        }
        for t in &tgt_twists {
            if hit.contains(t) {
                continue;
            }
            let d2 = Bidegree::new(degree, t.clone());
            let piece = model.piece(&d2, bound)?;
            let ty = piece.group().group_type();
            let v = Verdict::from_flags(true, ty.is_trivial());
            overall = overall.meet(v);
            entries.push(BidegreeComparison { source: None, target: d2, source_type: GroupType::trivial(), target_type: ty, verdict: v });
        }
    }
    Ok(ComparisonReport { entries, overall })
}
