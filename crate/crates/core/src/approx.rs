//! Left-to-right 2-approximation for guarding with 2-transmitters.
//!
//! Each round guards a leftmost prefix of the remaining polygon with at most
//! two transmitters of different orientation, trying both orders:
//!
//! * [`vh_finder`]: the rightmost vertical candidate that sees everything to
//!   its left, then the horizontal candidate through the leftmost unseen
//!   cell that reaches furthest right;
//! * [`hv_finder`]: the horizontal candidate starting at the left edge that
//!   reaches furthest right, then the rightmost vertical candidate that sees
//!   everything between the two.
//!
//! The order that guards the longer prefix wins and the polygon is cut at
//! the vertical edge where that prefix ends.

use crate::candidates::{standard_candidates, SegmentSet};
use crate::error::{Error, Result};
use crate::geometry::{Interval, Transmitter};
use crate::polygon::OrthoPolygon;
use crate::profile::SlabProfile;
use crate::solution::{Solution, SolverKind};
use crate::visibility::{Power, RectUnion, Scene};

const K: Power = Power::Two;

/// Transmitters picked by one finder and where the guarded prefix ends.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FinderResult {
    pub first: Transmitter,
    pub second: Option<Transmitter>,
    /// Abscissa of the vertical edge closing the guarded prefix.
    pub cut_x: i64,
    /// The transmitters guard the whole current polygon.
    pub done: bool,
}

impl FinderResult {
    pub fn transmitters(&self) -> impl Iterator<Item = Transmitter> {
        std::iter::once(self.first).chain(self.second)
    }

    pub fn count(&self) -> usize {
        1 + usize::from(self.second.is_some())
    }
}

/// Which finder a round adopted.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    VerticalFirst,
    HorizontalFirst,
}

/// One round of the main loop.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Round {
    /// Left end of the polygon this round worked on.
    pub left: i64,
    pub vh: FinderResult,
    pub hv: FinderResult,
    pub chosen: Branch,
}

fn inside_within(scene: &Scene, range: Interval) -> RectUnion {
    RectUnion::from_cells(
        scene.grid().clone(),
        scene.grid().inside_cells_within_x(range),
    )
}

/// First inside cell (leftmost, then lowest) missing from `seen`.
fn first_unseen(seen: &RectUnion) -> Option<usize> {
    seen.complement().cells().ones().next()
}

fn vh_in(scene: &Scene, cands: &SegmentSet) -> Result<FinderResult> {
    let prof = scene.profile();
    let last = prof.right();
    let mut picked = None;
    for s in cands.verticals().rev() {
        let vis = scene.region(s, K)?;
        let left_part = inside_within(scene, Interval::new(prof.left(), s.anchor));
        if vis.contains(&left_part)? {
            picked = Some((*s, vis));
            break;
        }
    }
    let (s_v, vis_v) = picked.ok_or(Error::NoCandidate("vertical"))?;
    let Some(p) = first_unseen(&vis_v) else {
        return Ok(FinderResult {
            first: s_v,
            second: None,
            cut_x: last,
            done: true,
        });
    };
    let column = scene.grid().cell(p).x;
    let s_h = cands
        .horizontals()
        .filter(|h| h.span.contains_interval(&column))
        .max_by_key(|h| (h.span.hi, std::cmp::Reverse(h.anchor)))
        .copied()
        .ok_or(Error::NoCandidate("horizontal"))?;
    let mut seen = vis_v;
    seen.union_with(&scene.region(&s_h, K)?)?;
    let done = seen.covers_polygon();
    Ok(FinderResult {
        first: s_v,
        second: Some(s_h),
        cut_x: if done { last } else { s_h.span.hi },
        done,
    })
}

fn hv_in(scene: &Scene, cands: &SegmentSet) -> Result<FinderResult> {
    let prof = scene.profile();
    let last = prof.right();
    let s_h = cands
        .horizontals()
        .filter(|h| h.span.lo == prof.left())
        .max_by_key(|h| (h.span.hi, std::cmp::Reverse(h.anchor)))
        .copied()
        .ok_or(Error::NoCandidate("horizontal"))?;
    let reach = s_h.span.hi;
    let vis_h = scene.region(&s_h, K)?;
    if vis_h.covers_polygon() {
        return Ok(FinderResult {
            first: s_h,
            second: None,
            cut_x: last,
            done: true,
        });
    }
    let mut picked = None;
    for s in cands.verticals().rev() {
        let vis = scene.region(s, K)?;
        let between = if s.anchor > reach {
            inside_within(scene, Interval::new(reach, s.anchor))
        } else {
            scene.empty()
        };
        if vis.contains(&between)? {
            picked = Some((*s, vis));
            break;
        }
    }
    let (s_v, vis_v) = picked.ok_or(Error::NoCandidate("vertical"))?;
    let mut seen = vis_h;
    seen.union_with(&vis_v)?;
    let cut_x = match first_unseen(&seen) {
        None => last,
        Some(p) => {
            let x = scene.grid().cell(p).x.lo;
            *prof
                .xs()
                .iter()
                .rev()
                .find(|&&b| b <= x)
                .expect("cell lies right of the left edge")
        }
    };
    Ok(FinderResult {
        first: s_h,
        second: Some(s_v),
        cut_x,
        done: cut_x == last,
    })
}

/// Vertical-then-horizontal finder on the polygon `prof`, choosing from `cands`.
pub fn vh_finder(prof: &SlabProfile, cands: &SegmentSet) -> Result<FinderResult> {
    if cands.is_empty() {
        return Err(Error::EmptyCandidates);
    }
    vh_in(&Scene::new(prof, cands.as_slice()), cands)
}

/// Horizontal-then-vertical finder on the polygon `prof`, choosing from `cands`.
pub fn hv_finder(prof: &SlabProfile, cands: &SegmentSet) -> Result<FinderResult> {
    if cands.is_empty() {
        return Err(Error::EmptyCandidates);
    }
    hv_in(&Scene::new(prof, cands.as_slice()), cands)
}

/// Picks the finder that guards the longer prefix. On equal prefixes the
/// horizontal-first pair wins unless the vertical-first one uses fewer
/// transmitters.
pub fn choose(vh: &FinderResult, hv: &FinderResult) -> Branch {
    if vh.cut_x > hv.cut_x || (vh.cut_x == hv.cut_x && vh.count() < hv.count()) {
        Branch::VerticalFirst
    } else {
        Branch::HorizontalFirst
    }
}

/// Runs the approximation and returns the per-round trace as well.
pub fn approximate_with_trace(p: &OrthoPolygon) -> Result<(Solution, Vec<Round>)> {
    let mut current = p.profile().clone();
    let mut picked = Vec::new();
    let mut rounds = Vec::new();
    loop {
        let sub = OrthoPolygon::from_profile(current);
        let cands = standard_candidates(&sub);
        let scene = Scene::new(sub.profile(), cands.as_slice());
        let vh = vh_in(&scene, &cands)?;
        let hv = hv_in(&scene, &cands)?;
        let chosen = choose(&vh, &hv);
        let result = match chosen {
            Branch::VerticalFirst => vh,
            Branch::HorizontalFirst => hv,
        };
        picked.extend(result.transmitters());
        rounds.push(Round {
            left: sub.profile().left(),
            vh,
            hv,
            chosen,
        });
        if result.done {
            break;
        }
        current = sub
            .profile()
            .cut_right(result.cut_x)?
            .expect("an unfinished round cuts before the right edge");
    }
    let solution = Solution::verified(p, picked, K, rounds.len(), SolverKind::Approx)?;
    Ok((solution, rounds))
}

/// Guards `p` with 2-transmitters using at most twice the optimum.
pub fn approximate_2transmitters(p: &OrthoPolygon) -> Result<Solution> {
    approximate_with_trace(p).map(|(s, _)| s)
}
