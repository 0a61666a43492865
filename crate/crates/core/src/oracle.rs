//! Brute-force cross-check for the solver over a bounded slope universe.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::mapclass::MappingClass;
use crate::slope::{enumerate_slopes, Slope};
use crate::solver::{h_equivalent, is_solution, SolutionSet};

pub const DEFAULT_BOUND: u32 = 50;
pub const DEFAULT_ITERATION_CAP: u32 = 16;

#[derive(Clone, Debug)]
pub struct OracleResult {
    pub mapping_class: MappingClass,
    pub bound: u32,
    pub iteration_cap: u32,
    /// Every solution in `enumerate_slopes(bound)`, in sorted order.
    pub solutions: Vec<Slope>,
    /// Orbit-connected components of `solutions`, each sorted, ordered by
    /// their smallest member.
    pub groups: Vec<Vec<Slope>>,
}

/// Scans `enumerate_slopes(bound)` and links `α ~ hⁿ(α)` for
/// `1 ≤ n ≤ iteration_cap` whenever both are in the solution set.
pub fn brute_force(m: &MappingClass, bound: u32, iteration_cap: u32) -> Result<OracleResult> {
    if m.is_trivial() {
        return Err(Error::TrivialAction);
    }
    if bound < 2 {
        return Err(Error::InvalidParameter("bound must be at least 2"));
    }
    if iteration_cap < 2 {
        return Err(Error::InvalidParameter("iteration cap must be at least 2"));
    }
    let solutions: Vec<Slope> = enumerate_slopes(bound)
        .into_iter()
        .filter(|s| is_solution(m, s))
        .collect();
    let index: HashMap<&Slope, usize> = solutions.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let mut parent: Vec<usize> = (0..solutions.len()).collect();
    fn find(parent: &mut [usize], i: usize) -> usize {
        let mut r = i;
        while parent[r] != r {
            r = parent[r];
        }
        parent[i] = r;
        r
    }
    for (i, s) in solutions.iter().enumerate() {
        let mut x = s.clone();
        for _ in 0..iteration_cap {
            x = m.act_on_slope(&x);
            if let Some(&j) = index.get(&x) {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                parent[ri.max(rj)] = ri.min(rj);
            }
        }
    }
    let mut groups: Vec<Vec<Slope>> = Vec::new();
    let mut slot: HashMap<usize, usize> = HashMap::new();
    for (i, s) in solutions.iter().enumerate() {
        let r = find(&mut parent, i);
        let g = *slot.entry(r).or_insert_with(|| {
            groups.push(Vec::new());
            groups.len() - 1
        });
        groups[g].push(s.clone());
    }
    Ok(OracleResult {
        mapping_class: m.clone(),
        bound,
        iteration_cap,
        solutions,
        groups,
    })
}

/// Four-way agreement between the solver and the oracle:
/// every oracle group matches some solver class, distinct groups match
/// distinct classes, every solver representative inside the universe is
/// found, and the counts are equal.
pub fn agree(solver: &SolutionSet, oracle: &OracleResult) -> bool {
    let m = &solver.mapping_class;
    if m != &oracle.mapping_class {
        return false;
    }
    let mut matched = Vec::with_capacity(oracle.groups.len());
    for group in &oracle.groups {
        let hit = solver.classes.iter().position(|class| {
            group
                .iter()
                .any(|s| h_equivalent(m, &class.representative, s).unwrap_or(false))
        });
        match hit {
            Some(k) => matched.push(k),
            None => return false,
        }
    }
    let mut distinct = matched.clone();
    distinct.sort_unstable();
    distinct.dedup();
    if distinct.len() != matched.len() {
        return false;
    }
    let bound = num_bigint::BigInt::from(oracle.bound);
    let inside = |s: &Slope| {
        use num_traits::Signed;
        s.is_infinity() || (s.q() <= &bound && s.p().abs() <= bound)
    };
    for class in &solver.classes {
        let rep = &class.representative;
        if inside(rep) && !oracle.groups.iter().any(|g| g.contains(rep)) {
            return false;
        }
    }
    oracle.groups.len() == solver.classes.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::solve;

    fn mc(a: i64, b: i64, c: i64, d: i64) -> MappingClass {
        MappingClass::new(a, b, c, d).unwrap()
    }

    fn s(t: &str) -> Slope {
        t.parse().unwrap()
    }

    #[test]
    fn trefoil_scan() {
        let r = brute_force(&mc(1, 1, -1, 0), 20, 8).unwrap();
        assert_eq!(r.solutions, vec![s("-1"), s("0"), Slope::infinity()]);
        assert_eq!(r.groups.len(), 1);
    }

    #[test]
    fn figure_eight_scan() {
        let r = brute_force(&mc(2, 1, 1, 1), 50, 16).unwrap();
        for x in ["-1", "0", "1", "3/2", "5/3", "2", "8/5", "inf"] {
            assert!(r.solutions.contains(&s(x)), "{x}");
        }
        assert_eq!(r.groups.len(), 2);
    }

    #[test]
    fn large_twist_scan() {
        let r = brute_force(&mc(1, 5, 0, 1), 50, 16).unwrap();
        assert_eq!(r.solutions, vec![Slope::infinity()]);
        assert_eq!(r.groups.len(), 1);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            brute_force(&mc(1, 0, 0, 1), 50, 16).unwrap_err(),
            Error::TrivialAction
        );
        assert!(brute_force(&mc(1, 1, 0, 1), 1, 16).is_err());
        assert!(brute_force(&mc(1, 1, 0, 1), 5, 1).is_err());
    }

    #[test]
    fn agreement() {
        let f8 = mc(2, 1, 1, 1);
        let tr = mc(1, 1, -1, 0);
        assert!(agree(
            &solve(&f8).unwrap(),
            &brute_force(&f8, 50, 16).unwrap()
        ));
        assert!(agree(
            &solve(&tr).unwrap(),
            &brute_force(&tr, 20, 8).unwrap()
        ));
        assert!(!agree(
            &solve(&f8).unwrap(),
            &brute_force(&tr, 20, 8).unwrap()
        ));
    }
}
