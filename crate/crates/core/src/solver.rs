//! Arcs `α` with `i(α, h(α)) ≤ 1`, up to `h`-equivalence.
//!
//! Periodic classes fix a Farey triangle or edge and the solutions are its
//! vertices. Reducible classes are conjugate to `x ↦ x + n`; the fixed slope
//! is always a solution and its Farey neighbours are one more class exactly
//! when `|n| = 1`. For pseudo-Anosov classes every solution is an endpoint of
//! an edge crossing the axis, so one period of the axis meets every class.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::mapclass::{Axis, Classification, EllipticCell, Kind, MappingClass, Side};
use crate::slope::Slope;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    EllipticTriangle,
    EllipticEdge,
    ParabolicFixed,
    ParabolicNeighbors,
    LoxodromicVisible,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::EllipticTriangle => "EllipticTriangle",
            Provenance::EllipticEdge => "EllipticEdge",
            Provenance::ParabolicFixed => "ParabolicFixed",
            Provenance::ParabolicNeighbors => "ParabolicNeighbors",
            Provenance::LoxodromicVisible => "LoxodromicVisible",
        })
    }
}

/// One `h`-equivalence class of solution arcs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArcClass {
    pub representative: Slope,
    /// A few orbit points `hⁿ(representative)`, in orbit order.
    pub sample_members: Vec<Slope>,
    /// Side of the axis (pseudo-Anosov only).
    pub side: Option<Side>,
    pub provenance: Provenance,
}

#[derive(Clone, Debug)]
pub struct SolutionSet {
    pub mapping_class: MappingClass,
    pub classification: Classification,
    pub classes: Vec<ArcClass>,
    pub theorem_bound_satisfied: bool,
    pub axis: Option<Axis>,
}

/// `i(α, h(α)) ≤ 1`: the arc is invariant or disjoint from its image.
pub fn is_solution(m: &MappingClass, alpha: &Slope) -> bool {
    alpha.intersection_number(&m.act_on_slope(alpha)) <= BigInt::one()
}

fn orbit_sample(m: &MappingClass, rep: &Slope) -> Vec<Slope> {
    let back = m.inverse().act_on_slope(rep);
    let mut out = vec![back, rep.clone()];
    for _ in 0..2 {
        let next = m.act_on_slope(out.last().unwrap());
        out.push(next);
    }
    out
}

fn finite_orbit(m: &MappingClass, rep: &Slope) -> Vec<Slope> {
    let mut out = vec![rep.clone()];
    loop {
        let next = m.act_on_slope(out.last().unwrap());
        if &next == rep {
            return out;
        }
        out.push(next);
    }
}

fn bound_ok(classification: &Classification, count: usize) -> bool {
    match classification.kind() {
        Kind::Periodic => count <= 1,
        _ => count <= 2,
    }
}

pub fn solve(m: &MappingClass) -> Result<SolutionSet> {
    let classification = m.classify();
    let mut axis = None;
    let classes = match &classification {
        Classification::TrivialAction => return Err(Error::TrivialAction),
        Classification::Periodic { .. } => {
            let cell = m.elliptic_fixed_cell()?;
            let provenance = match cell {
                EllipticCell::FixedTriangle(_) => Provenance::EllipticTriangle,
                EllipticCell::FixedEdge(_) => Provenance::EllipticEdge,
            };
            let rep = cell.vertices().into_iter().min().unwrap();
            vec![ArcClass {
                sample_members: finite_orbit(m, &rep),
                representative: rep,
                side: None,
                provenance,
            }]
        }
        Classification::Reducible {
            n,
            fixed_slope,
            conjugator,
        } => {
            let mut classes = vec![ArcClass {
                representative: fixed_slope.clone(),
                sample_members: vec![fixed_slope.clone()],
                side: None,
                provenance: Provenance::ParabolicFixed,
            }];
            if n.abs().is_one() {
                let rep = conjugator.act_on_slope(&Slope::integer(0));
                classes.push(ArcClass {
                    sample_members: orbit_sample(m, &rep),
                    representative: rep,
                    side: None,
                    provenance: Provenance::ParabolicNeighbors,
                });
            }
            classes
        }
        Classification::PseudoAnosov { .. } => {
            let ax = m.axis()?;
            let classes = loxodromic_classes(m, &ax);
            axis = Some(ax);
            classes
        }
    };
    let theorem_bound_satisfied = bound_ok(&classification, classes.len());
    Ok(SolutionSet {
        mapping_class: m.clone(),
        classification,
        classes,
        theorem_bound_satisfied,
        axis,
    })
}

/// Candidates are the endpoints of `e₀ … e_L`; survivors are grouped by
/// orbit matching with `h^j`, `1 ≤ j ≤ L + 1`, inside the candidate set.
fn loxodromic_classes(m: &MappingClass, ax: &Axis) -> Vec<ArcClass> {
    let candidates: Vec<Slope> = ax
        .visible_vertices()
        .into_iter()
        .filter(|v| is_solution(m, v))
        .collect();
    let mut parent: Vec<usize> = (0..candidates.len()).collect();
    fn find(parent: &mut [usize], i: usize) -> usize {
        let mut r = i;
        while parent[r] != r {
            r = parent[r];
        }
        parent[i] = r;
        r
    }
    for (i, v) in candidates.iter().enumerate() {
        let mut w = v.clone();
        for _ in 0..=ax.period() {
            w = m.act_on_slope(&w);
            if let Some(j) = candidates.iter().position(|c| c == &w) {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                parent[ri.max(rj)] = ri.min(rj);
            }
        }
    }
    let mut classes = Vec::new();
    for (i, c) in candidates.iter().enumerate() {
        if find(&mut parent, i) == i {
            let rep = c.clone();
            classes.push(ArcClass {
                sample_members: orbit_sample(m, &rep),
                side: Some(ax.side(&rep)),
                representative: rep,
                provenance: Provenance::LoxodromicVisible,
            });
        }
    }
    classes
}

/// Decides whether `hⁿ(α) = β` for some integer `n`, for solution slopes.
pub fn h_equivalent(m: &MappingClass, alpha: &Slope, beta: &Slope) -> Result<bool> {
    for s in [alpha, beta] {
        if !is_solution(m, s) {
            return Err(Error::NotASolution(s.to_string()));
        }
    }
    if alpha == beta {
        return Ok(true);
    }
    match m.classify() {
        Classification::TrivialAction => Ok(false),
        Classification::Periodic { psl_order } => {
            let mut x = alpha.clone();
            for _ in 1..psl_order {
                x = m.act_on_slope(&x);
                if &x == beta {
                    return Ok(true);
                }
            }
            Ok(false)
        }
        Classification::Reducible { n, conjugator, .. } => {
            let back = conjugator.inverse();
            let (a, b) = (back.act_on_slope(alpha), back.act_on_slope(beta));
            if a.is_infinity() || b.is_infinity() {
                return Ok(false);
            }
            // solutions in normal form are ∞ and (for |n| = 1) the integers
            Ok(a.q().is_one() && b.q().is_one() && (b.p() - a.p()).is_multiple_of(&n))
        }
        Classification::PseudoAnosov { .. } => {
            let ax = m.axis()?;
            if !ax.same_side(alpha, beta) {
                return Ok(false);
            }
            // h moves every point of a side monotonically towards A₊
            let up = ax.order_less(alpha, beta)?;
            let step = if up { m.clone() } else { m.inverse() };
            let mut x = alpha.clone();
            loop {
                x = step.act_on_slope(&x);
                if &x == beta {
                    return Ok(true);
                }
                if ax.order_less(&x, beta)? != up {
                    return Ok(false);
                }
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TheoremStatus {
    /// `±identity`, outside the scope of the bound.
    Excluded,
    Pass,
    Violation,
}

impl fmt::Display for TheoremStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TheoremStatus::Excluded => "excluded",
            TheoremStatus::Pass => "pass",
            TheoremStatus::Violation => "violation",
        })
    }
}

#[derive(Clone, Debug)]
pub struct TheoremReport {
    pub status: TheoremStatus,
    pub classification: Classification,
    pub class_count: usize,
    pub representatives: Vec<Slope>,
    pub axis_period: Option<usize>,
}

/// At most two solution classes, and at most one for periodic classes.
pub fn check_class_bound(m: &MappingClass) -> TheoremReport {
    match solve(m) {
        Err(_) => TheoremReport {
            status: TheoremStatus::Excluded,
            classification: m.classify(),
            class_count: 0,
            representatives: Vec::new(),
            axis_period: None,
        },
        Ok(set) => TheoremReport {
            status: if set.theorem_bound_satisfied {
                TheoremStatus::Pass
            } else {
                TheoremStatus::Violation
            },
            class_count: set.classes.len(),
            representatives: set
                .classes
                .iter()
                .map(|c| c.representative.clone())
                .collect(),
            axis_period: set.axis.as_ref().map(Axis::period),
            classification: set.classification,
        },
    }
}
