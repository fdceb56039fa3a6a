//! Brute-force minimum-cardinality transmitter cover.
//!
//! Subsets of a finite candidate family are enumerated by increasing size,
//! each size in lexicographic order, so the first cover found is a
//! minimum-size cover and the lexicographically least one of that size.
//! Only practical for small polygons; it exists to certify the
//! approximation.

use std::str::FromStr;

use fixedbitset::FixedBitSet;

use crate::candidates::{standard_candidates, SegmentSet};
use crate::error::{Error, Result};
use crate::geometry::Transmitter;
use crate::polygon::OrthoPolygon;
use crate::solution::{Solution, SolverKind};
use crate::visibility::{Power, Scene};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ExactMode {
    /// Unpruned augmented extension set.
    Standard,
    /// Maximal segments on every integer grid line, both orientations.
    Dense,
}

impl FromStr for ExactMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "standard" => Ok(ExactMode::Standard),
            "dense" => Ok(ExactMode::Dense),
            other => Err(Error::Solution(format!("unknown exact mode `{other}`"))),
        }
    }
}

/// Every maximal segment on an integer vertical or horizontal line.
pub fn dense_family(p: &OrthoPolygon) -> SegmentSet {
    let prof = p.profile();
    let (xr, yr) = (prof.x_range(), prof.y_range());
    let verticals = (xr.lo..=xr.hi).filter_map(|x| {
        prof.cross_section(x)
            .map(|cs| Transmitter::vertical(x, cs.lo, cs.hi))
    });
    let horizontals = (yr.lo..=yr.hi).flat_map(|y| {
        prof.horizontal_runs(y)
            .into_iter()
            .map(move |r| Transmitter::horizontal(y, r.lo, r.hi))
    });
    verticals.chain(horizontals).collect()
}

pub fn candidate_family(p: &OrthoPolygon, mode: ExactMode) -> SegmentSet {
    match mode {
        ExactMode::Standard => standard_candidates(p),
        ExactMode::Dense => dense_family(p),
    }
}

/// Lexicographically least minimum-size subset of `sets` whose union
/// contains `target`, trying sizes `1..=budget`.
pub fn min_cover(sets: &[FixedBitSet], target: &FixedBitSet, budget: usize) -> Option<Vec<usize>> {
    let n = sets.len();
    // suffix[i] = union of sets[i..].
    let mut suffix = vec![FixedBitSet::with_capacity(target.len()); n + 1];
    for i in (0..n).rev() {
        let mut u = suffix[i + 1].clone();
        u.union_with(&sets[i]);
        suffix[i] = u;
    }
    if !target.is_subset(&suffix[0]) {
        return None;
    }
    let empty = FixedBitSet::with_capacity(target.len());
    let mut chosen = Vec::new();
    (1..=budget.min(n)).find_map(|size| {
        chosen.clear();
        search(sets, &suffix, target, 0, size, &empty, &mut chosen).then(|| chosen.clone())
    })
}

fn search(
    sets: &[FixedBitSet],
    suffix: &[FixedBitSet],
    target: &FixedBitSet,
    start: usize,
    remaining: usize,
    acc: &FixedBitSet,
    chosen: &mut Vec<usize>,
) -> bool {
    if remaining == 0 {
        return target.is_subset(acc);
    }
    for i in start..=sets.len() - remaining {
        let mut reach = acc.clone();
        reach.union_with(&suffix[i]);
        if !target.is_subset(&reach) {
            // Later starts only see smaller suffixes.
            break;
        }
        let mut next = acc.clone();
        next.union_with(&sets[i]);
        chosen.push(i);
        if search(sets, suffix, target, i + 1, remaining - 1, &next, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Minimum number of `k`-transmitters from the chosen family that guard `p`.
pub fn exact_min_transmitters(
    p: &OrthoPolygon,
    k: Power,
    mode: ExactMode,
    budget: usize,
) -> Result<Solution> {
    let family = candidate_family(p, mode);
    let scene = Scene::new(p.profile(), family.as_slice());
    let sets = family
        .iter()
        .map(|s| scene.region(s, k).map(|r| r.cells().clone()))
        .collect::<Result<Vec<_>>>()?;
    let picked = min_cover(&sets, scene.grid().inside(), budget)
        .ok_or(Error::NoSolutionWithinBudget(budget))?;
    let transmitters: Vec<Transmitter> = picked.iter().map(|&i| family.as_slice()[i]).collect();
    let solver = match mode {
        ExactMode::Standard => SolverKind::Exact,
        ExactMode::Dense => SolverKind::ExactDense,
    };
    let size = transmitters.len();
    Solution::verified(p, transmitters, k, size, solver)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{fixture, Fixture};

    fn bits(n: usize, ones: &[usize]) -> FixedBitSet {
        let mut b = FixedBitSet::with_capacity(n);
        ones.iter().for_each(|&i| b.insert(i));
        b
    }

    #[test]
    fn min_cover_is_lexicographically_least() {
        let sets = vec![
            bits(4, &[0]),
            bits(4, &[1, 2]),
            bits(4, &[0, 3]),
            bits(4, &[3]),
            bits(4, &[1, 2, 3]),
        ];
        let target = bits(4, &[0, 1, 2, 3]);
        assert_eq!(min_cover(&sets, &target, 4), Some(vec![0, 4]));
        assert_eq!(min_cover(&sets, &target, 1), None);
        assert_eq!(min_cover(&sets[..2], &target, 4), None);
    }

    #[test]
    fn fixture_optima() {
        let gap = fixture(Fixture::Gap7);
        let s = exact_min_transmitters(&gap, Power::Two, ExactMode::Standard, 4).unwrap();
        // x=6 and x=8 both guard GAP7 alone; x=6 is lexicographically first.
        assert_eq!(s.transmitters, vec![Transmitter::vertical(6, 0, 3)]);
        let s0 = exact_min_transmitters(&gap, Power::Zero, ExactMode::Standard, 5).unwrap();
        assert_eq!(s0.count(), 3);
        assert!(s0.coverage_complete);

        let rect = fixture(Fixture::Rect);
        for k in Power::ALL {
            assert_eq!(
                exact_min_transmitters(&rect, k, ExactMode::Standard, 3)
                    .unwrap()
                    .count(),
                1
            );
        }

        let stair6 = fixture(Fixture::Stair6);
        let s = exact_min_transmitters(&stair6, Power::Two, ExactMode::Standard, 4).unwrap();
        assert_eq!(s.count(), 2);
    }

    #[test]
    fn budget_exhaustion() {
        let gap = fixture(Fixture::Gap7);
        assert_eq!(
            exact_min_transmitters(&gap, Power::Zero, ExactMode::Standard, 2),
            Err(Error::NoSolutionWithinBudget(2))
        );
    }

    #[test]
    fn dense_family_contains_standard() {
        for f in Fixture::ALL {
            let p = fixture(f);
            assert!(standard_candidates(&p).is_subset(&dense_family(&p)), "{f}");
        }
    }
}
