//! Genus-one knots and their unknotting crossing changes.
//!
//! The two fibred genus-one knots are the trefoil and the figure-eight.
//! Their counts come from solving the monodromy; each solution class gives
//! one crossing change up to equivalence. A non-fibred genus-one knot
//! admits at most one essential product disc, so its count is the constant 1.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::mapclass::MappingClass;
use crate::solver::solve;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GenusOneKnot {
    Trefoil,
    FigureEight,
    NonFibredDoubled { label: String },
}

impl GenusOneKnot {
    pub fn is_fibred(&self) -> bool {
        !matches!(self, GenusOneKnot::NonFibredDoubled { .. })
    }
}

/// Monodromy on the fibre, a once-punctured torus.
pub fn monodromy(k: &GenusOneKnot) -> Result<MappingClass> {
    match k {
        GenusOneKnot::Trefoil => MappingClass::new(1, 1, -1, 0),
        GenusOneKnot::FigureEight => MappingClass::new(2, 1, 1, 1),
        GenusOneKnot::NonFibredDoubled { .. } => Err(Error::NotFibred(k.to_string())),
    }
}

/// Number of crossing changes that unknot `k`, up to equivalence.
pub fn unknotting_crossing_change_count(k: &GenusOneKnot) -> Result<usize> {
    if !k.is_fibred() {
        return Ok(1);
    }
    Ok(solve(&monodromy(k)?)?.classes.len())
}

impl fmt::Display for GenusOneKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenusOneKnot::Trefoil => f.write_str("trefoil"),
            GenusOneKnot::FigureEight => f.write_str("figure8"),
            GenusOneKnot::NonFibredDoubled { label } => write!(f, "doubled:{label}"),
        }
    }
}

impl FromStr for GenusOneKnot {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "trefoil" => Ok(GenusOneKnot::Trefoil),
            "figure8" => Ok(GenusOneKnot::FigureEight),
            _ => match s.strip_prefix("doubled:") {
                Some(label) if !label.is_empty() => Ok(GenusOneKnot::NonFibredDoubled {
                    label: label.to_string(),
                }),
                _ => Err(Error::UnknownKnot(s.to_string())),
            },
        }
    }
}
