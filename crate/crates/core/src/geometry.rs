use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Self { x, y }
    }
}

impl From<(i64, i64)> for Point {
    fn from((x, y): (i64, i64)) -> Self {
        Self { x, y }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Closed integer interval `[lo, hi]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Interval {
    pub lo: i64,
    pub hi: i64,
}

impl Interval {
    pub const fn new(lo: i64, hi: i64) -> Self {
        Self { lo, hi }
    }

    pub fn len(&self) -> i64 {
        self.hi - self.lo
    }

    pub fn is_empty(&self) -> bool {
        self.hi < self.lo
    }

    pub fn contains(&self, v: i64) -> bool {
        self.lo <= v && v <= self.hi
    }

    pub fn contains_interval(&self, other: &Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    /// Closed intersection, `None` when disjoint.
    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        let lo = self.lo.max(other.lo);
        let hi = self.hi.min(other.hi);
        (lo <= hi).then_some(Interval { lo, hi })
    }

    /// Smallest interval covering both.
    pub fn hull(&self, other: &Interval) -> Interval {
        Interval {
            lo: self.lo.min(other.lo),
            hi: self.hi.max(other.hi),
        }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// Vertical sorts before horizontal; this drives the canonical candidate order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Orientation {
    #[serde(rename = "v")]
    Vertical,
    #[serde(rename = "h")]
    Horizontal,
}

impl Orientation {
    pub fn code(self) -> &'static str {
        match self {
            Orientation::Vertical => "v",
            Orientation::Horizontal => "h",
        }
    }
}

/// An axis-parallel guard segment.
///
/// `anchor` is the fixed coordinate (x for vertical, y for horizontal) and
/// `span` the closed range of the varying coordinate. The derived ordering is
/// the canonical one: orientation, then anchor, then span.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transmitter {
    pub orientation: Orientation,
    pub anchor: i64,
    pub span: Interval,
}

impl Transmitter {
    pub const fn vertical(x: i64, lo: i64, hi: i64) -> Self {
        Self {
            orientation: Orientation::Vertical,
            anchor: x,
            span: Interval { lo, hi },
        }
    }

    pub const fn horizontal(y: i64, lo: i64, hi: i64) -> Self {
        Self {
            orientation: Orientation::Horizontal,
            anchor: y,
            span: Interval { lo, hi },
        }
    }

    pub fn is_vertical(&self) -> bool {
        self.orientation == Orientation::Vertical
    }

    pub fn is_horizontal(&self) -> bool {
        self.orientation == Orientation::Horizontal
    }

    /// Left endpoint; for a vertical segment this is the upper endpoint.
    pub fn left(&self) -> Point {
        match self.orientation {
            Orientation::Horizontal => Point::new(self.span.lo, self.anchor),
            Orientation::Vertical => Point::new(self.anchor, self.span.hi),
        }
    }

    /// Right endpoint; for a vertical segment this is the lower endpoint.
    pub fn right(&self) -> Point {
        match self.orientation {
            Orientation::Horizontal => Point::new(self.span.hi, self.anchor),
            Orientation::Vertical => Point::new(self.anchor, self.span.lo),
        }
    }

    /// x-coordinates touched by the segment's endpoints.
    pub fn x_coords(&self) -> [i64; 2] {
        match self.orientation {
            Orientation::Horizontal => [self.span.lo, self.span.hi],
            Orientation::Vertical => [self.anchor, self.anchor],
        }
    }

    pub fn y_coords(&self) -> [i64; 2] {
        match self.orientation {
            Orientation::Horizontal => [self.anchor, self.anchor],
            Orientation::Vertical => [self.span.lo, self.span.hi],
        }
    }

    /// Mirror image under `x -> axis - x`.
    pub fn mirrored_x(&self, axis: i64) -> Self {
        match self.orientation {
            Orientation::Vertical => Self::vertical(axis - self.anchor, self.span.lo, self.span.hi),
            Orientation::Horizontal => {
                Self::horizontal(self.anchor, axis - self.span.hi, axis - self.span.lo)
            }
        }
    }
}

impl fmt::Display for Transmitter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.orientation {
            Orientation::Vertical => write!(f, "vertical x={} {}", self.anchor, self.span),
            Orientation::Horizontal => write!(f, "horizontal y={} {}", self.anchor, self.span),
        }
    }
}
