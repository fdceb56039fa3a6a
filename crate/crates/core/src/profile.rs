//! Step-function form of an x-monotone orthogonal polygon.
//!
//! Between consecutive breakpoints `xs[i] < xs[i + 1]` the polygon's vertical
//! cross-section is the constant interval `spans[i]`. At an interior
//! breakpoint the closed cross-section is the union of the two neighbouring
//! spans, which is an interval because neighbours overlap.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{Interval, Orientation, Point, Transmitter};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SlabProfile {
    xs: Vec<i64>,
    spans: Vec<Interval>,
}

/// A vertical boundary edge: `x` with its closed y-extent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct VerticalEdge {
    pub x: i64,
    pub extent: Interval,
}

/// A horizontal boundary edge: `y` with its closed x-extent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct HorizontalEdge {
    pub y: i64,
    pub extent: Interval,
}

impl SlabProfile {
    pub fn new(xs: Vec<i64>, spans: Vec<Interval>) -> Result<Self> {
        if spans.is_empty() {
            return Err(Error::InvalidProfile("no slabs".into()));
        }
        if xs.len() != spans.len() + 1 {
            return Err(Error::InvalidProfile(format!(
                "{} breakpoints for {} slabs",
                xs.len(),
                spans.len()
            )));
        }
        if let Some(w) = xs.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::InvalidProfile(format!(
                "breakpoints not increasing at {} -> {}",
                w[0], w[1]
            )));
        }
        if let Some(s) = spans.iter().find(|s| s.lo >= s.hi) {
            return Err(Error::InvalidProfile(format!("empty span {s}")));
        }
        for (i, w) in spans.windows(2).enumerate() {
            let (a, b) = (w[0], w[1]);
            if a == b {
                return Err(Error::InvalidProfile(format!(
                    "slabs {i} and {} share span {a}",
                    i + 1
                )));
            }
            // Touching in a single point pinches the boundary into a non-simple ring.
            match a.intersect(&b) {
                Some(o) if o.lo < o.hi => {}
                _ => {
                    return Err(Error::InvalidProfile(format!(
                        "slabs {i} and {} do not overlap: {a} vs {b}",
                        i + 1
                    )))
                }
            }
        }
        Ok(Self { xs, spans })
    }

    /// Convenience constructor from `(lo, hi)` pairs.
    pub fn from_pairs(xs: &[i64], spans: &[(i64, i64)]) -> Result<Self> {
        Self::new(
            xs.to_vec(),
            spans
                .iter()
                .map(|&(lo, hi)| Interval::new(lo, hi))
                .collect(),
        )
    }

    pub fn xs(&self) -> &[i64] {
        &self.xs
    }

    pub fn spans(&self) -> &[Interval] {
        &self.spans
    }

    pub fn slab_count(&self) -> usize {
        self.spans.len()
    }

    pub fn left(&self) -> i64 {
        self.xs[0]
    }

    pub fn right(&self) -> i64 {
        *self.xs.last().expect("profile has breakpoints")
    }

    pub fn x_range(&self) -> Interval {
        Interval::new(self.left(), self.right())
    }

    pub fn y_range(&self) -> Interval {
        self.spans
            .iter()
            .skip(1)
            .fold(self.spans[0], |acc, s| acc.hull(s))
    }

    pub fn is_breakpoint(&self, x: i64) -> bool {
        self.xs.binary_search(&x).is_ok()
    }

    /// Closed cross-section `{y : (x, y) in P}`, or `None` outside the x-range.
    pub fn cross_section(&self, x: i64) -> Option<Interval> {
        if x < self.left() || x > self.right() {
            return None;
        }
        let r = self.spans.len();
        Some(match self.xs.binary_search(&x) {
            Ok(0) => self.spans[0],
            Ok(i) if i == r => self.spans[r - 1],
            Ok(i) => self.spans[i - 1].hull(&self.spans[i]),
            Err(i) => self.spans[i - 1],
        })
    }

    /// Index of the slab whose open x-range contains `x2 / 2`.
    pub(crate) fn slab_of_doubled(&self, x2: i64) -> Option<usize> {
        let i = self.xs.partition_point(|&x| 2 * x < x2);
        (i >= 1 && i < self.xs.len() && 2 * self.xs[i] > x2).then(|| i - 1)
    }

    /// Counter-clockwise vertex ring starting at the lower-left vertex.
    pub fn to_ring(&self) -> Vec<Point> {
        let r = self.spans.len();
        let (xs, sp) = (&self.xs, &self.spans);
        let mut ring = vec![Point::new(xs[0], sp[0].lo)];
        for i in 1..r {
            if sp[i - 1].lo != sp[i].lo {
                ring.push(Point::new(xs[i], sp[i - 1].lo));
                ring.push(Point::new(xs[i], sp[i].lo));
            }
        }
        ring.push(Point::new(xs[r], sp[r - 1].lo));
        ring.push(Point::new(xs[r], sp[r - 1].hi));
        for i in (1..r).rev() {
            if sp[i].hi != sp[i - 1].hi {
                ring.push(Point::new(xs[i], sp[i].hi));
                ring.push(Point::new(xs[i], sp[i - 1].hi));
            }
        }
        ring.push(Point::new(xs[0], sp[0].hi));
        ring
    }

    /// Vertical edges ordered by x, ties by lower y.
    pub fn vertical_edges(&self) -> Vec<VerticalEdge> {
        let r = self.spans.len();
        let mut out = vec![VerticalEdge {
            x: self.xs[0],
            extent: self.spans[0],
        }];
        for i in 1..r {
            let (a, b) = (self.spans[i - 1], self.spans[i]);
            if a.lo != b.lo {
                out.push(VerticalEdge {
                    x: self.xs[i],
                    extent: Interval::new(a.lo.min(b.lo), a.lo.max(b.lo)),
                });
            }
            if a.hi != b.hi {
                out.push(VerticalEdge {
                    x: self.xs[i],
                    extent: Interval::new(a.hi.min(b.hi), a.hi.max(b.hi)),
                });
            }
        }
        out.push(VerticalEdge {
            x: self.xs[r],
            extent: self.spans[r - 1],
        });
        out
    }

    /// Horizontal edges of the boundary (bottom chain then top chain).
    pub fn horizontal_edges(&self) -> Vec<HorizontalEdge> {
        let ring = self.to_ring();
        let n = ring.len();
        (0..n)
            .filter_map(|i| {
                let (a, b) = (ring[i], ring[(i + 1) % n]);
                (a.y == b.y).then(|| HorizontalEdge {
                    y: a.y,
                    extent: Interval::new(a.x.min(b.x), a.x.max(b.x)),
                })
            })
            .collect()
    }

    /// Distinct ordinates of horizontal edges, ascending.
    pub fn horizontal_ordinates(&self) -> Vec<i64> {
        let mut ys: Vec<i64> = self.spans.iter().flat_map(|s| [s.lo, s.hi]).collect();
        ys.sort_unstable();
        ys.dedup();
        ys
    }

    /// Number of vertical edges (`m`).
    pub fn vertical_edge_count(&self) -> usize {
        self.vertical_edges().len()
    }

    pub fn area(&self) -> i64 {
        self.xs
            .windows(2)
            .zip(&self.spans)
            .map(|(w, s)| (w[1] - w[0]) * s.len())
            .sum()
    }

    /// Subpolygon to the right of the vertical line `x = x0`.
    ///
    /// Returns `Ok(None)` when nothing remains (`x0` is the last breakpoint).
    pub fn cut_right(&self, x0: i64) -> Result<Option<SlabProfile>> {
        let i = self
            .xs
            .binary_search(&x0)
            .map_err(|_| Error::NotABreakpoint(x0))?;
        if i == self.spans.len() {
            return Ok(None);
        }
        Ok(Some(SlabProfile {
            xs: self.xs[i..].to_vec(),
            spans: self.spans[i..].to_vec(),
        }))
    }

    /// Maximal x-runs along the line `y` that lie in the closed polygon.
    pub fn horizontal_runs(&self, y: i64) -> Vec<Interval> {
        let mut runs = Vec::new();
        let mut start: Option<usize> = None;
        for (i, s) in self.spans.iter().enumerate() {
            match (s.contains(y), start) {
                (true, None) => start = Some(i),
                (false, Some(st)) => {
                    runs.push(Interval::new(self.xs[st], self.xs[i]));
                    start = None;
                }
                _ => {}
            }
        }
        if let Some(st) = start {
            runs.push(Interval::new(self.xs[st], self.right()));
        }
        runs
    }

    /// The maximal segment on the given line that contains `seg`, if `seg`
    /// lies in the closed polygon.
    pub fn maximal_extension(&self, seg: &Transmitter) -> Option<Transmitter> {
        if !self.contains_segment(seg) {
            return None;
        }
        match seg.orientation {
            Orientation::Vertical => {
                let cs = self.cross_section(seg.anchor)?;
                Some(Transmitter::vertical(seg.anchor, cs.lo, cs.hi))
            }
            Orientation::Horizontal => self
                .horizontal_runs(seg.anchor)
                .into_iter()
                .find(|r| r.contains_interval(&seg.span))
                .map(|r| Transmitter::horizontal(seg.anchor, r.lo, r.hi)),
        }
    }

    /// Whether a (non-degenerate) segment lies in the closed polygon.
    pub fn contains_segment(&self, seg: &Transmitter) -> bool {
        if seg.span.lo >= seg.span.hi {
            return false;
        }
        match seg.orientation {
            Orientation::Vertical => self
                .cross_section(seg.anchor)
                .is_some_and(|cs| cs.contains_interval(&seg.span)),
            Orientation::Horizontal => {
                self.x_range().contains_interval(&seg.span)
                    && self
                        .xs
                        .windows(2)
                        .zip(&self.spans)
                        .filter(|(w, _)| w[0] < seg.span.hi && w[1] > seg.span.lo)
                        .all(|(_, s)| s.contains(seg.anchor))
            }
        }
    }

    /// Reflection `x -> axis - x` with `axis = left + right`, so the mirror
    /// occupies the same x-range.
    pub fn mirrored(&self) -> SlabProfile {
        let axis = self.left() + self.right();
        SlabProfile {
            xs: self.xs.iter().rev().map(|x| axis - x).collect(),
            spans: self.spans.iter().rev().copied().collect(),
        }
    }
}
