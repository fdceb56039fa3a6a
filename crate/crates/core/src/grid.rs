//! Coordinate-compressed cell decomposition of a polygon's bounding box.
//!
//! Cells are indexed column-major (`col * rows + row`), so ascending index
//! order is "leftmost first, then lowest". Representative points are cell
//! centres in doubled coordinates and therefore exact integers that never
//! lie on a grid line.

use fixedbitset::FixedBitSet;

use crate::geometry::Interval;
use crate::profile::SlabProfile;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellGrid {
    profile: SlabProfile,
    xs: Vec<i64>,
    ys: Vec<i64>,
    inside: FixedBitSet,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Cell {
    pub col: usize,
    pub row: usize,
    pub x: Interval,
    pub y: Interval,
}

impl Cell {
    /// Cell centre in doubled coordinates.
    pub fn representative(&self) -> (i64, i64) {
        (self.x.lo + self.x.hi, self.y.lo + self.y.hi)
    }

    pub fn area(&self) -> i64 {
        self.x.len() * self.y.len()
    }
}

impl CellGrid {
    /// Builds the grid on all breakpoints and span endpoints of `profile`
    /// plus the given extra coordinates. Extras outside the bounding box are
    /// ignored.
    pub fn build(profile: &SlabProfile, extra_x: &[i64], extra_y: &[i64]) -> Self {
        let (xr, yr) = (profile.x_range(), profile.y_range());
        let mut xs: Vec<i64> = profile
            .xs()
            .iter()
            .copied()
            .chain(extra_x.iter().copied().filter(|&x| xr.contains(x)))
            .collect();
        xs.sort_unstable();
        xs.dedup();
        let mut ys: Vec<i64> = profile
            .horizontal_ordinates()
            .into_iter()
            .chain(extra_y.iter().copied().filter(|&y| yr.contains(y)))
            .collect();
        ys.sort_unstable();
        ys.dedup();

        let rows = ys.len() - 1;
        let mut inside = FixedBitSet::with_capacity((xs.len() - 1) * rows);
        for col in 0..xs.len() - 1 {
            let slab = profile
                .slab_of_doubled(xs[col] + xs[col + 1])
                .expect("column lies inside the x-range");
            let span = profile.spans()[slab];
            for row in 0..rows {
                if span.contains_interval(&Interval::new(ys[row], ys[row + 1])) {
                    inside.insert(col * rows + row);
                }
            }
        }
        Self {
            profile: profile.clone(),
            xs,
            ys,
            inside,
        }
    }

    pub fn profile(&self) -> &SlabProfile {
        &self.profile
    }

    pub fn x_cuts(&self) -> &[i64] {
        &self.xs
    }

    pub fn y_cuts(&self) -> &[i64] {
        &self.ys
    }

    pub fn columns(&self) -> usize {
        self.xs.len() - 1
    }

    pub fn rows(&self) -> usize {
        self.ys.len() - 1
    }

    pub fn len(&self) -> usize {
        self.columns() * self.rows()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn cell(&self, index: usize) -> Cell {
        let rows = self.rows();
        let (col, row) = (index / rows, index % rows);
        Cell {
            col,
            row,
            x: Interval::new(self.xs[col], self.xs[col + 1]),
            y: Interval::new(self.ys[row], self.ys[row + 1]),
        }
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        (0..self.len()).map(|i| self.cell(i))
    }

    pub fn is_inside(&self, index: usize) -> bool {
        self.inside.contains(index)
    }

    /// Bitset of inside cells.
    pub fn inside(&self) -> &FixedBitSet {
        &self.inside
    }

    pub fn inside_count(&self) -> usize {
        self.inside.count_ones(..)
    }

    pub fn has_x_cut(&self, x: i64) -> bool {
        self.xs.binary_search(&x).is_ok()
    }

    pub fn has_y_cut(&self, y: i64) -> bool {
        self.ys.binary_search(&y).is_ok()
    }

    /// Inside cells whose x-range lies within `range`.
    pub fn inside_cells_within_x(&self, range: Interval) -> FixedBitSet {
        let mut mask = FixedBitSet::with_capacity(self.len());
        for i in self.inside.ones() {
            if range.contains_interval(&self.cell(i).x) {
                mask.insert(i);
            }
        }
        mask
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rect_is_one_cell() {
        let p = SlabProfile::from_pairs(&[0, 6], &[(0, 3)]).unwrap();
        let g = CellGrid::build(&p, &[], &[]);
        assert_eq!(g.len(), 1);
        assert_eq!(g.inside_count(), 1);
        let c = g.cell(0);
        assert_eq!((c.x, c.y), (Interval::new(0, 6), Interval::new(0, 3)));
        assert_eq!(c.representative(), (6, 3));
    }

    #[test]
    fn extras_refine_and_out_of_box_extras_are_dropped() {
        let p = SlabProfile::from_pairs(&[0, 6], &[(0, 3)]).unwrap();
        let g = CellGrid::build(&p, &[3, 9], &[1, -4]);
        assert_eq!(g.x_cuts(), &[0, 3, 6]);
        assert_eq!(g.y_cuts(), &[0, 1, 3]);
        assert_eq!(g.inside_count(), 4);
    }

    #[test]
    fn cell_index_order_is_leftmost_then_lowest() {
        let p = SlabProfile::from_pairs(&[0, 2, 4, 6], &[(0, 3), (0, 1), (0, 3)]).unwrap();
        let g = CellGrid::build(&p, &[], &[]);
        let reps: Vec<_> = g.cells().map(|c| c.representative()).collect();
        assert_eq!(reps, vec![(2, 1), (2, 4), (6, 1), (6, 4), (10, 1), (10, 4)]);
    }
}
