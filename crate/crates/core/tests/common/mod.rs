//! Test-only helpers: the random corpus and an independent visibility oracle
//! that works on the vertex ring with generic segment intersection tests.

#![allow(dead_code)]

use mono2t_core::grid::CellGrid;
use mono2t_core::{random_monotone, OrthoPolygon, Point, Power, Transmitter};

pub const CORPUS_SEED: u64 = 0x5eed_2017;

/// Instance `i` of the shared corpus: 1..=7 slabs, heights ≤ 8, widths ≤ 4.
pub fn corpus_instance(i: u64) -> OrthoPolygon {
    random_monotone(1 + (i % 7) as usize, 8, 4, CORPUS_SEED + i)
}

pub fn corpus(n: u64) -> Vec<OrthoPolygon> {
    (0..n).map(corpus_instance).collect()
}

fn orient(a: (i64, i64), b: (i64, i64), c: (i64, i64)) -> i64 {
    ((b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0)).signum()
}

/// Proper crossing of two closed segments: each strictly separates the
/// other's endpoints.
fn properly_cross(p: (i64, i64), q: (i64, i64), a: (i64, i64), b: (i64, i64)) -> bool {
    orient(p, q, a) * orient(p, q, b) < 0 && orient(a, b, p) * orient(a, b, q) < 0
}

fn doubled(p: Point) -> (i64, i64) {
    (2 * p.x, 2 * p.y)
}

/// Even-odd point-in-polygon on the ring, point in doubled coordinates.
pub fn ring_contains(ring: &[Point], p2: (i64, i64)) -> bool {
    let n = ring.len();
    let crossings = (0..n)
        .filter(|&i| {
            let (a, b) = (doubled(ring[i]), doubled(ring[(i + 1) % n]));
            a.0 == b.0 && a.0 > p2.0 && a.1.min(b.1) < p2.1 && p2.1 < a.1.max(b.1)
        })
        .count();
    crossings % 2 == 1
}

/// Whether the transmitter sees the doubled-coordinate point `p2`: scan every
/// doubled-integer foot along `s`, keep the perpendicular ones, and count
/// proper crossings of the sight segment with every ring edge.
pub fn oracle_sees(ring: &[Point], s: &Transmitter, k: Power, p2: (i64, i64)) -> bool {
    let n = ring.len();
    let feet: Vec<(i64, i64)> = (2 * s.span.lo..=2 * s.span.hi)
        .map(|t| {
            if s.is_vertical() {
                (2 * s.anchor, t)
            } else {
                (t, 2 * s.anchor)
            }
        })
        .collect();
    feet.into_iter()
        .filter(|q| {
            if s.is_vertical() {
                q.1 == p2.1
            } else {
                q.0 == p2.0
            }
        })
        .any(|q| {
            let hits = (0..n)
                .filter(|&i| properly_cross(p2, q, doubled(ring[i]), doubled(ring[(i + 1) % n])))
                .count();
            hits <= k.crossings()
        })
}

/// Oracle region of `s` over the inside cells of `grid`, as sorted cell indices.
pub fn oracle_region(p: &OrthoPolygon, grid: &CellGrid, s: &Transmitter, k: Power) -> Vec<usize> {
    let ring = p.vertices();
    grid.cells()
        .enumerate()
        .filter(|(_, c)| ring_contains(ring, c.representative()))
        .filter(|(_, c)| oracle_sees(ring, s, k, c.representative()))
        .map(|(i, _)| i)
        .collect()
}

/// Minimum cover size by plain enumeration of index combinations.
pub fn naive_min_cover(regions: &[Vec<usize>], universe: &[usize], budget: usize) -> Option<usize> {
    use itertools::Itertools;
    (1..=budget).find(|&size| {
        (0..regions.len()).combinations(size).any(|combo| {
            universe.iter().all(|cell| {
                combo
                    .iter()
                    .any(|&j| regions[j].binary_search(cell).is_ok())
            })
        })
    })
}
