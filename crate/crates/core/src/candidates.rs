//! Candidate transmitter families.
//!
//! The extension set collects, for every reflex vertex, the maximal segments
//! on the supporting lines of its two incident edges. Reflex-free polygons
//! have an empty extension set, so [`augment_candidates`] adds the maximal
//! segments on every edge-supporting line. Every standard-form solution
//! (maximal segments on edge lines) is drawn from this augmented family.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::geometry::{Orientation, Point, Transmitter};
use crate::polygon::OrthoPolygon;
use crate::profile::SlabProfile;
use crate::visibility::{Power, Scene};

/// Deduplicated transmitters in canonical order (verticals first, then by
/// anchor, then by span).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SegmentSet(Vec<Transmitter>);

impl SegmentSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn as_slice(&self) -> &[Transmitter] {
        &self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Transmitter> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, t: &Transmitter) -> bool {
        self.0.binary_search(t).is_ok()
    }

    pub fn is_subset(&self, other: &SegmentSet) -> bool {
        self.iter().all(|t| other.contains(t))
    }

    pub fn verticals(&self) -> impl DoubleEndedIterator<Item = &Transmitter> {
        self.0.iter().filter(|t| t.is_vertical())
    }

    pub fn horizontals(&self) -> impl DoubleEndedIterator<Item = &Transmitter> {
        self.0.iter().filter(|t| t.is_horizontal())
    }

    pub fn into_vec(self) -> Vec<Transmitter> {
        self.0
    }
}

impl FromIterator<Transmitter> for SegmentSet {
    fn from_iter<I: IntoIterator<Item = Transmitter>>(iter: I) -> Self {
        let mut v: Vec<Transmitter> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Self(v)
    }
}

impl Extend<Transmitter> for SegmentSet {
    fn extend<I: IntoIterator<Item = Transmitter>>(&mut self, iter: I) {
        self.0.extend(iter);
        self.0.sort_unstable();
        self.0.dedup();
    }
}

impl<'a> IntoIterator for &'a SegmentSet {
    type Item = &'a Transmitter;
    type IntoIter = std::slice::Iter<'a, Transmitter>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

/// Ring vertices with a 270° interior angle, in ring order.
pub fn reflex_vertices(p: &OrthoPolygon) -> Vec<Point> {
    let ring = p.vertices();
    let n = ring.len();
    (0..n)
        .filter(|&i| {
            let (a, b, c) = (ring[(i + n - 1) % n], ring[i], ring[(i + 1) % n]);
            let cross = (b.x - a.x) * (c.y - b.y) - (b.y - a.y) * (c.x - b.x);
            // Right turn on a counter-clockwise ring.
            cross < 0
        })
        .map(|i| ring[i])
        .collect()
}

fn maximal_vertical(prof: &SlabProfile, x: i64) -> Option<Transmitter> {
    prof.cross_section(x)
        .map(|cs| Transmitter::vertical(x, cs.lo, cs.hi))
}

fn maximal_horizontal_through(prof: &SlabProfile, y: i64, x: i64) -> Option<Transmitter> {
    prof.horizontal_runs(y)
        .into_iter()
        .find(|r| r.contains(x))
        .map(|r| Transmitter::horizontal(y, r.lo, r.hi))
}

/// Maximal segments on the supporting lines of edges incident to reflex vertices.
pub fn extension_set(p: &OrthoPolygon) -> SegmentSet {
    let prof = p.profile();
    reflex_vertices(p)
        .into_iter()
        .flat_map(|v| {
            [
                maximal_vertical(prof, v.x),
                maximal_horizontal_through(prof, v.y, v.x),
            ]
        })
        .flatten()
        .collect()
}

/// `c` plus the maximal vertical segment at every vertical-edge abscissa and
/// every maximal horizontal run at every horizontal-edge ordinate.
pub fn augment_candidates(c: &SegmentSet, p: &OrthoPolygon) -> SegmentSet {
    let prof = p.profile();
    let verticals = prof.xs().iter().filter_map(|&x| maximal_vertical(prof, x));
    let horizontals = prof.horizontal_ordinates().into_iter().flat_map(|y| {
        prof.horizontal_runs(y)
            .into_iter()
            .map(move |r| Transmitter::horizontal(y, r.lo, r.hi))
    });
    c.iter()
        .copied()
        .chain(verticals)
        .chain(horizontals)
        .collect()
}

/// The augmented extension set: the standard candidate family.
pub fn standard_candidates(p: &OrthoPolygon) -> SegmentSet {
    augment_candidates(&extension_set(p), p)
}

/// Single pass in canonical order: a candidate is dropped when its region
/// is covered by the union over the candidates still present (excluding it).
pub fn prune_dominated(c: &SegmentSet, p: &OrthoPolygon, k: Power) -> Result<SegmentSet> {
    if c.is_empty() {
        return Err(Error::EmptyCandidates);
    }
    let scene = Scene::new(p.profile(), c.as_slice());
    let regions = c
        .iter()
        .map(|s| scene.region(s, k))
        .collect::<Result<Vec<_>>>()?;
    let mut alive = vec![true; c.len()];
    for i in 0..c.len() {
        let mut others = scene.empty();
        for (j, r) in regions.iter().enumerate() {
            if j != i && alive[j] {
                others.union_with(r)?;
            }
        }
        if others.contains(&regions[i])? {
            alive[i] = false;
        }
    }
    Ok(c.iter()
        .zip(alive)
        .filter_map(|(s, keep)| keep.then_some(*s))
        .collect())
}

/// Output of [`canonicalize_solution`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Canonicalized {
    pub transmitters: Vec<Transmitter>,
    /// Whether the canonical set still guards the whole polygon.
    pub feasible: bool,
}

fn slide_to_edge_line(prof: &SlabProfile, s: &Transmitter) -> Transmitter {
    match s.orientation {
        Orientation::Vertical => {
            if prof.is_breakpoint(s.anchor) {
                return *s;
            }
            let slab = prof
                .slab_of_doubled(2 * s.anchor)
                .expect("anchor strictly inside the x-range");
            let (left, right) = (prof.xs()[slab], prof.xs()[slab + 1]);
            let x = if s.anchor - left <= right - s.anchor {
                left
            } else {
                right
            };
            Transmitter::vertical(x, s.span.lo, s.span.hi)
        }
        Orientation::Horizontal => {
            if prof.horizontal_ordinates().binary_search(&s.anchor).is_ok() {
                return *s;
            }
            // Slide until the segment first touches a bottom or top edge.
            let covered = prof
                .xs()
                .windows(2)
                .zip(prof.spans())
                .filter(|(w, _)| w[0] < s.span.hi && w[1] > s.span.lo)
                .map(|(_, sp)| *sp);
            let (down, up) = covered.fold((i64::MIN, i64::MAX), |(d, u), sp| {
                (d.max(sp.lo), u.min(sp.hi))
            });
            let y = if s.anchor - down <= up - s.anchor {
                down
            } else {
                up
            };
            Transmitter::horizontal(y, s.span.lo, s.span.hi)
        }
    }
}

/// Moves every segment onto the nearest edge-supporting line (ties: left or
/// down), replaces it by the maximal segment on that line and re-checks
/// coverage with power `k`. Duplicates are collapsed, keeping first
/// occurrence order.
pub fn canonicalize_solution(
    sol: &[Transmitter],
    p: &OrthoPolygon,
    k: Power,
) -> Result<Canonicalized> {
    let prof = p.profile();
    let mut seen = HashSet::new();
    let mut transmitters = Vec::with_capacity(sol.len());
    for s in sol {
        if !prof.contains_segment(s) {
            return Err(Error::OutsidePolygon(*s));
        }
        let slid = slide_to_edge_line(prof, s);
        let max = prof
            .maximal_extension(&slid)
            .ok_or(Error::OutsidePolygon(slid))?;
        if seen.insert(max) {
            transmitters.push(max);
        }
    }
    let scene = Scene::new(prof, &transmitters);
    let feasible = scene.union_of(&transmitters, k)?.covers_polygon();
    Ok(Canonicalized {
        transmitters,
        feasible,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{fixture, Fixture};

    #[test]
    fn reflex_examples() {
        assert!(reflex_vertices(&fixture(Fixture::Rect)).is_empty());
        assert_eq!(
            reflex_vertices(&fixture(Fixture::Valley)),
            vec![Point::new(4, 1), Point::new(2, 1)]
        );
    }

    #[test]
    fn valley_extension_set() {
        let ext = extension_set(&fixture(Fixture::Valley));
        assert_eq!(
            ext.as_slice(),
            &[
                Transmitter::vertical(2, 0, 3),
                Transmitter::vertical(4, 0, 3),
                Transmitter::horizontal(1, 0, 6),
            ]
        );
        assert!(extension_set(&fixture(Fixture::Rect)).is_empty());
    }

    #[test]
    fn gap7_extension_set() {
        let ext = extension_set(&fixture(Fixture::Gap7));
        assert!(ext.contains(&Transmitter::vertical(8, 0, 3)));
        assert!(ext.contains(&Transmitter::horizontal(1, 2, 12)));
    }

    #[test]
    fn augmented_examples() {
        let rect = fixture(Fixture::Rect);
        assert_eq!(
            standard_candidates(&rect).as_slice(),
            &[
                Transmitter::vertical(0, 0, 3),
                Transmitter::vertical(6, 0, 3),
                Transmitter::horizontal(0, 0, 6),
                Transmitter::horizontal(3, 0, 6),
            ]
        );

        let stair3 = fixture(Fixture::Stair3);
        assert!(standard_candidates(&stair3).contains(&Transmitter::horizontal(2, 0, 6)));

        let valley = fixture(Fixture::Valley);
        let ext = extension_set(&valley);
        let aug = augment_candidates(&ext, &valley);
        let added: Vec<_> = aug.iter().filter(|t| !ext.contains(t)).copied().collect();
        assert_eq!(
            added,
            vec![
                Transmitter::vertical(0, 0, 3),
                Transmitter::vertical(6, 0, 3),
                Transmitter::horizontal(0, 0, 6),
                Transmitter::horizontal(3, 0, 2),
                Transmitter::horizontal(3, 4, 6),
            ]
        );
    }

    #[test]
    fn prune_rect_keeps_last() {
        let rect = fixture(Fixture::Rect);
        let c = standard_candidates(&rect);
        let pruned = prune_dominated(&c, &rect, Power::Two).unwrap();
        assert_eq!(pruned.as_slice(), &[*c.as_slice().last().unwrap()]);
    }

    #[test]
    fn prune_singleton_and_empty() {
        let rect = fixture(Fixture::Rect);
        let one: SegmentSet = [Transmitter::vertical(0, 0, 3)].into_iter().collect();
        assert_eq!(prune_dominated(&one, &rect, Power::Zero).unwrap(), one);
        assert_eq!(
            prune_dominated(&SegmentSet::new(), &rect, Power::Two),
            Err(Error::EmptyCandidates)
        );
    }

    #[test]
    fn canonicalize_examples() {
        let rect = fixture(Fixture::Rect);
        let c =
            canonicalize_solution(&[Transmitter::vertical(3, 1, 2)], &rect, Power::Two).unwrap();
        assert_eq!(c.transmitters, vec![Transmitter::vertical(0, 0, 3)]);
        assert!(c.feasible);

        let valley = fixture(Fixture::Valley);
        let c = canonicalize_solution(&[Transmitter::horizontal(1, 1, 5)], &valley, Power::Two)
            .unwrap();
        assert_eq!(c.transmitters, vec![Transmitter::horizontal(1, 0, 6)]);
        assert!(c.feasible);

        let fixed = vec![
            Transmitter::vertical(2, 0, 3),
            Transmitter::horizontal(3, 4, 6),
        ];
        let c = canonicalize_solution(&fixed, &valley, Power::Zero).unwrap();
        assert_eq!(c.transmitters, fixed);
    }

    #[test]
    fn canonicalize_slides_horizontal_to_nearest_edge() {
        let p = crate::polygon::OrthoPolygon::from_profile(
            SlabProfile::from_pairs(&[0, 4], &[(0, 10)]).unwrap(),
        );
        let c =
            canonicalize_solution(&[Transmitter::horizontal(7, 1, 2)], &p, Power::Zero).unwrap();
        assert_eq!(c.transmitters, vec![Transmitter::horizontal(10, 0, 4)]);
        let c =
            canonicalize_solution(&[Transmitter::horizontal(5, 1, 2)], &p, Power::Zero).unwrap();
        assert_eq!(c.transmitters, vec![Transmitter::horizontal(0, 0, 4)]);
    }

    #[test]
    fn canonicalize_collapses_duplicates_and_rejects_outside() {
        let rect = fixture(Fixture::Rect);
        let c = canonicalize_solution(
            &[
                Transmitter::vertical(1, 0, 1),
                Transmitter::vertical(2, 1, 3),
            ],
            &rect,
            Power::Two,
        )
        .unwrap();
        assert_eq!(c.transmitters.len(), 1);
        assert_eq!(
            canonicalize_solution(&[Transmitter::vertical(7, 0, 1)], &rect, Power::Two),
            Err(Error::OutsidePolygon(Transmitter::vertical(7, 0, 1)))
        );
    }
}
