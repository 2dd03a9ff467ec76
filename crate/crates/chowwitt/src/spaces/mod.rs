//! Catalog spaces: syntax, validation, and the stored closed-form presentations.

pub mod build;
pub mod database;
pub mod parse;

use crate::error::{CwError, CwResult};
use crate::scalar::FieldModel;
use serde::{Deserialize, Serialize};
use std::fmt;

pub use build::{build_chow_witt, build_i_cohomology, SpaceTheories};
pub use parse::parse_space;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Atom {
    P(u32),
    BGm,
    Bmu(u64),
}

impl Atom {
    /// Rank of `Pic/2`.
    pub fn pic_mod2_rank(&self) -> usize {
        match self {
            Atom::P(_) | Atom::BGm => 1,
            Atom::Bmu(n) => usize::from(n % 2 == 0),
        }
    }

    pub fn is_classifying(&self) -> bool {
        !matches!(self, Atom::P(_))
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::P(r) => write!(f, "P({r})"),
            Atom::BGm => write!(f, "BGm"),
            Atom::Bmu(n) => write!(f, "Bmu({n})"),
        }
    }
}

/// A product of one or two atoms.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SpaceExpr {
    pub factors: Vec<Atom>,
}

impl SpaceExpr {
    pub fn new(factors: Vec<Atom>) -> CwResult<Self> {
        if factors.is_empty() {
            return Err(CwError::Arity("a space needs at least one factor".into()));
        }
        if factors.len() > 2 {
            return Err(CwError::Arity(format!("{} factors given, at most 2 are supported", factors.len())));
        }
        for a in &factors {
            match a {
                Atom::P(0) => return Err(CwError::Param("P(r) needs r >= 1".into())),
                Atom::Bmu(0) => return Err(CwError::Param("Bmu(n) needs n >= 1".into())),
                _ => {}
            }
        }
        Ok(SpaceExpr { factors })
    }

    pub fn single(a: Atom) -> Self {
        SpaceExpr::new(vec![a]).expect("valid atom")
    }

    pub fn pair(a: Atom, b: Atom) -> Self {
        SpaceExpr::new(vec![a, b]).expect("valid atoms")
    }

    pub fn pic_mod2_rank(&self) -> usize {
        self.factors.iter().map(Atom::pic_mod2_rank).sum()
    }

    pub fn swapped(&self) -> SpaceExpr {
        let mut f = self.factors.clone();
        f.reverse();
        SpaceExpr { factors: f }
    }

    /// Field with the orders of all `Bmu` factors added to its exclusions.
    pub fn checked_field(&self, field: &FieldModel) -> CwResult<FieldModel> {
        let mut f = field.clone();
        for a in &self.factors {
            if let Atom::Bmu(n) = a {
                f.exclude(*n)?;
            }
        }
        Ok(f)
    }

    /// File-name friendly form, e.g. `Bmu6_x_BGm`.
    pub fn slug(&self) -> String {
        self.factors
            .iter()
            .map(|a| match a {
                Atom::P(r) => format!("P{r}"),
                Atom::BGm => "BGm".into(),
                Atom::Bmu(n) => format!("Bmu{n}"),
            })
            .collect::<Vec<_>>()
            .join("_x_")
    }
}

impl fmt::Display for SpaceExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|a| a.to_string()).collect();
        write!(f, "{}", parts.join(" x "))
    }
}
