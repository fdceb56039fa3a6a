//! Exact k-transmitter visibility on a cell grid.
//!
//! A point is seen by a transmitter `s` when its perpendicular foot on the
//! line of `s` lies in the closed span of `s` and the connecting segment
//! properly crosses the boundary at most `k` times. Visibility is evaluated
//! at cell representatives only. Those never lie on a grid line, so a
//! crossing is counted exactly when an edge's open extent strictly contains
//! the ray coordinate; grazing an edge endpoint never counts.

use std::fmt;
use std::sync::Arc;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{Orientation, Transmitter};
use crate::grid::CellGrid;
use crate::profile::{HorizontalEdge, SlabProfile, VerticalEdge};

/// Transmitter power: how many boundary crossings a sight line may make.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub enum Power {
    Zero,
    One,
    Two,
}

impl Power {
    pub const ALL: [Power; 3] = [Power::Zero, Power::One, Power::Two];

    pub fn crossings(self) -> usize {
        match self {
            Power::Zero => 0,
            Power::One => 1,
            Power::Two => 2,
        }
    }
}

impl TryFrom<u32> for Power {
    type Error = Error;

    fn try_from(k: u32) -> Result<Self> {
        match k {
            0 => Ok(Power::Zero),
            1 => Ok(Power::One),
            2 => Ok(Power::Two),
            other => Err(Error::InvalidPower(other)),
        }
    }
}

impl From<Power> for u32 {
    fn from(k: Power) -> u32 {
        k.crossings() as u32
    }
}

impl fmt::Display for Power {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.crossings())
    }
}

fn strictly_between2(v2: i64, a2: i64, b2: i64) -> bool {
    a2.min(b2) < v2 && v2 < a2.max(b2)
}

fn count_vertical_crossings(edges: &[VerticalEdge], y2: i64, x1_2: i64, x2_2: i64) -> usize {
    edges
        .iter()
        .filter(|e| {
            strictly_between2(2 * e.x, x1_2, x2_2) && 2 * e.extent.lo < y2 && y2 < 2 * e.extent.hi
        })
        .count()
}

fn count_horizontal_crossings(edges: &[HorizontalEdge], x2: i64, y1_2: i64, y2_2: i64) -> usize {
    edges
        .iter()
        .filter(|e| {
            strictly_between2(2 * e.y, y1_2, y2_2) && 2 * e.extent.lo < x2 && x2 < 2 * e.extent.hi
        })
        .count()
}

/// Number of vertical boundary edges properly crossed by the horizontal
/// segment at ordinate `y2 / 2` between abscissae `x1_2 / 2` and `x2_2 / 2`.
///
/// All arguments are in doubled coordinates. `y2` must not be the ordinate
/// of a horizontal edge.
pub fn crossing_count(prof: &SlabProfile, y2: i64, x1_2: i64, x2_2: i64) -> Result<usize> {
    if y2 % 2 == 0 && prof.horizontal_ordinates().binary_search(&(y2 / 2)).is_ok() {
        return Err(Error::OnGridLine(y2));
    }
    Ok(count_vertical_crossings(
        &prof.vertical_edges(),
        y2,
        x1_2,
        x2_2,
    ))
}

/// Generic point test: perpendicular foot in the closed span, then at most
/// `k` proper boundary crossings. `rep` is in doubled coordinates.
pub fn sees_point(prof: &SlabProfile, s: &Transmitter, k: Power, rep: (i64, i64)) -> bool {
    let (x2, y2) = rep;
    let (lo2, hi2) = (2 * s.span.lo, 2 * s.span.hi);
    match s.orientation {
        Orientation::Vertical => {
            (lo2..=hi2).contains(&y2)
                && count_vertical_crossings(&prof.vertical_edges(), y2, 2 * s.anchor, x2)
                    <= k.crossings()
        }
        Orientation::Horizontal => {
            (lo2..=hi2).contains(&x2)
                && count_horizontal_crossings(&prof.horizontal_edges(), x2, 2 * s.anchor, y2)
                    <= k.crossings()
        }
    }
}

/// Visibility region of `s` with power `k` on `grid`.
pub fn vis_region(grid: &Arc<CellGrid>, s: &Transmitter, k: Power) -> Result<RectUnion> {
    Scene::from_grid(grid.clone()).region(s, k)
}

/// Union of regions over a common grid.
pub fn union_regions(rs: &[RectUnion]) -> Result<RectUnion> {
    let (first, rest) = rs.split_first().ok_or(Error::EmptyCandidates)?;
    let mut out = first.clone();
    for r in rest {
        out.union_with(r)?;
    }
    Ok(out)
}

pub fn contains_region(a: &RectUnion, b: &RectUnion) -> Result<bool> {
    a.contains(b)
}

pub fn covers_polygon(r: &RectUnion) -> bool {
    r.covers_polygon()
}

/// A set of inside cells of one grid.
#[derive(Clone, Debug)]
pub struct RectUnion {
    grid: Arc<CellGrid>,
    cells: FixedBitSet,
}

impl PartialEq for RectUnion {
    fn eq(&self, other: &Self) -> bool {
        same_grid(&self.grid, &other.grid) && self.cells == other.cells
    }
}

impl Eq for RectUnion {}

fn same_grid(a: &Arc<CellGrid>, b: &Arc<CellGrid>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl RectUnion {
    pub fn empty(grid: Arc<CellGrid>) -> Self {
        let cells = FixedBitSet::with_capacity(grid.len());
        Self { grid, cells }
    }

    /// The whole polygon.
    pub fn full(grid: Arc<CellGrid>) -> Self {
        let cells = grid.inside().clone();
        Self { grid, cells }
    }

    /// Wraps a bitset; bits outside the polygon are dropped.
    pub fn from_cells(grid: Arc<CellGrid>, mut cells: FixedBitSet) -> Self {
        cells.grow(grid.len());
        cells.intersect_with(grid.inside());
        Self { grid, cells }
    }

    pub fn grid(&self) -> &Arc<CellGrid> {
        &self.grid
    }

    pub fn cells(&self) -> &FixedBitSet {
        &self.cells
    }

    pub fn contains_cell(&self, index: usize) -> bool {
        self.cells.contains(index)
    }

    pub fn len(&self) -> usize {
        self.cells.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_clear()
    }

    pub fn area(&self) -> i64 {
        self.cells.ones().map(|i| self.grid.cell(i).area()).sum()
    }

    fn check(&self, other: &RectUnion) -> Result<()> {
        if same_grid(&self.grid, &other.grid) {
            Ok(())
        } else {
            Err(Error::GridMismatch)
        }
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &RectUnion) -> Result<bool> {
        self.check(other)?;
        Ok(other.cells.is_subset(&self.cells))
    }

    pub fn union_with(&mut self, other: &RectUnion) -> Result<()> {
        self.check(other)?;
        self.cells.union_with(&other.cells);
        Ok(())
    }

    pub fn covers_polygon(&self) -> bool {
        self.grid.inside().is_subset(&self.cells)
    }

    /// Inside cells not in this region.
    pub fn complement(&self) -> RectUnion {
        let mut cells = self.grid.inside().clone();
        cells.difference_with(&self.cells);
        RectUnion {
            grid: self.grid.clone(),
            cells,
        }
    }
}

/// A grid with cached boundary edges, for computing many regions.
#[derive(Clone, Debug)]
pub struct Scene {
    grid: Arc<CellGrid>,
    vertical_edges: Vec<VerticalEdge>,
}

impl Scene {
    /// Grid on `profile` refined by the endpoints of `segments`.
    pub fn new(profile: &SlabProfile, segments: &[Transmitter]) -> Self {
        let xs: Vec<i64> = segments.iter().flat_map(|s| s.x_coords()).collect();
        let ys: Vec<i64> = segments.iter().flat_map(|s| s.y_coords()).collect();
        Self::from_grid(Arc::new(CellGrid::build(profile, &xs, &ys)))
    }

    pub fn from_grid(grid: Arc<CellGrid>) -> Self {
        let vertical_edges = grid.profile().vertical_edges();
        Self {
            grid,
            vertical_edges,
        }
    }

    pub fn grid(&self) -> &Arc<CellGrid> {
        &self.grid
    }

    pub fn profile(&self) -> &SlabProfile {
        self.grid.profile()
    }

    pub fn empty(&self) -> RectUnion {
        RectUnion::empty(self.grid.clone())
    }

    pub fn full(&self) -> RectUnion {
        RectUnion::full(self.grid.clone())
    }

    pub fn region(&self, s: &Transmitter, k: Power) -> Result<RectUnion> {
        let g = &self.grid;
        let cut_ok = s.x_coords().iter().all(|&x| g.has_x_cut(x))
            && s.y_coords().iter().all(|&y| g.has_y_cut(y));
        if !cut_ok {
            return Err(Error::MissingCut(*s));
        }
        if !g.profile().contains_segment(s) {
            return Err(Error::OutsidePolygon(*s));
        }
        let cells = match s.orientation {
            // Horizontal sight lines in a monotone polygon never cross the
            // boundary, so whole columns under the span are visible.
            Orientation::Horizontal => g.inside_cells_within_x(s.span),
            Orientation::Vertical => {
                let mut cells = FixedBitSet::with_capacity(g.len());
                for i in g.inside().ones() {
                    let c = g.cell(i);
                    if !s.span.contains_interval(&c.y) {
                        continue;
                    }
                    let (x2, y2) = c.representative();
                    let n = count_vertical_crossings(&self.vertical_edges, y2, 2 * s.anchor, x2);
                    if n <= k.crossings() {
                        cells.insert(i);
                    }
                }
                cells
            }
        };
        Ok(RectUnion {
            grid: g.clone(),
            cells,
        })
    }

    /// Union of the regions of `segments`.
    pub fn union_of<'a>(
        &self,
        segments: impl IntoIterator<Item = &'a Transmitter>,
        k: Power,
    ) -> Result<RectUnion> {
        let mut acc = self.empty();
        for s in segments {
            acc.union_with(&self.region(s, k)?)?;
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn valley() -> SlabProfile {
        SlabProfile::from_pairs(&[0, 2, 4, 6], &[(0, 3), (0, 1), (0, 3)]).unwrap()
    }

    fn gap7() -> SlabProfile {
        SlabProfile::from_pairs(
            &[0, 2, 4, 6, 8, 10, 12, 14],
            &[(2, 3), (0, 3), (0, 1), (0, 3), (0, 1), (0, 3), (2, 3)],
        )
        .unwrap()
    }

    #[test]
    fn crossing_count_examples() {
        // Row (1, 3) has doubled representative 4; row (0, 1) has 1.
        assert_eq!(crossing_count(&valley(), 4, 0, 10), Ok(2));
        assert_eq!(crossing_count(&valley(), 1, 0, 10), Ok(0));
        assert_eq!(crossing_count(&valley(), 1, 10, 0), Ok(0));
        // Row (2, 3) of GAP7, x from 8 to 13.
        assert_eq!(crossing_count(&gap7(), 5, 16, 26), Ok(1));
        assert_eq!(
            crossing_count(&valley(), 2, 0, 10),
            Err(Error::OnGridLine(2))
        );
    }

    #[test]
    fn sees_point_examples() {
        let s = Transmitter::vertical(0, 0, 3);
        // Cell [4,6] x [1,3].
        assert!(sees_point(&valley(), &s, Power::Two, (10, 4)));
        assert!(!sees_point(&valley(), &s, Power::Zero, (10, 4)));
        let rect = SlabProfile::from_pairs(&[0, 6], &[(0, 3)]).unwrap();
        for t in [
            Transmitter::vertical(0, 0, 3),
            Transmitter::vertical(6, 0, 3),
            Transmitter::horizontal(0, 0, 6),
            Transmitter::horizontal(3, 0, 6),
        ] {
            assert!(sees_point(&rect, &t, Power::Zero, (6, 3)));
        }
    }

    #[test]
    fn valley_regions() {
        let scene = Scene::new(&valley(), &[]);
        let s = Transmitter::vertical(0, 0, 3);
        let r0 = scene.region(&s, Power::Zero).unwrap();
        // Cells: [0,2]x[0,1], [0,2]x[1,3], [2,4]x[0,1], [4,6]x[0,1].
        let got: Vec<usize> = r0.cells().ones().collect();
        assert_eq!(got, vec![0, 1, 2, 4]);
        assert_eq!(r0.area(), 6 + 2 + 2);
        let r2 = scene.region(&s, Power::Two).unwrap();
        assert!(r2.covers_polygon());
        assert!(r2.contains(&r0).unwrap());
        assert!(!covers_polygon(&scene.empty()));
    }

    #[test]
    fn gap7_single_guard() {
        let scene = Scene::new(&gap7(), &[]);
        let r = scene
            .region(&Transmitter::vertical(8, 0, 3), Power::Two)
            .unwrap();
        assert!(r.covers_polygon());
    }

    #[test]
    fn region_errors() {
        let scene = Scene::new(&valley(), &[]);
        assert_eq!(
            scene.region(&Transmitter::vertical(3, 0, 1), Power::Two),
            Err(Error::MissingCut(Transmitter::vertical(3, 0, 1)))
        );
        assert_eq!(
            scene.region(&Transmitter::horizontal(3, 0, 6), Power::Two),
            Err(Error::OutsidePolygon(Transmitter::horizontal(3, 0, 6)))
        );
        let other = Scene::new(&gap7(), &[]);
        assert_eq!(
            scene.full().contains(&other.full()),
            Err(Error::GridMismatch)
        );
        assert_eq!(union_regions(&[]), Err(Error::EmptyCandidates));
    }

    #[test]
    fn power_conversions() {
        assert_eq!(Power::try_from(2), Ok(Power::Two));
        assert_eq!(Power::try_from(3), Err(Error::InvalidPower(3)));
        assert_eq!(serde_json::to_string(&Power::One).unwrap(), "1");
    }
}
