//! Ingestion and validation of simple x-monotone orthogonal polygons.

use serde::{Deserialize, Serialize};

use crate::error::PolygonError;
use crate::geometry::{Interval, Point};
use crate::profile::{SlabProfile, VerticalEdge};

/// Largest accepted coordinate magnitude on ingestion.
pub const MAX_COORD: i64 = 1_000_000;

/// A validated polygon: canonical counter-clockwise ring starting at the
/// lower-left vertex, together with its slab profile.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrthoPolygon {
    vertices: Vec<Point>,
    profile: SlabProfile,
}

#[derive(Serialize, Deserialize)]
struct PolygonDoc {
    vertices: Vec<[i64; 2]>,
}

impl OrthoPolygon {
    pub fn from_profile(profile: SlabProfile) -> Self {
        Self {
            vertices: profile.to_ring(),
            profile,
        }
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn profile(&self) -> &SlabProfile {
        &self.profile
    }

    /// Number of vertical edges, `m`.
    pub fn m(&self) -> usize {
        self.vertices.len() / 2
    }

    /// Vertical edges `e_1 .. e_m`, ordered by x then lower y.
    pub fn vertical_edges(&self) -> Vec<VerticalEdge> {
        self.profile.vertical_edges()
    }

    pub fn left_edge(&self) -> VerticalEdge {
        self.vertical_edges()[0]
    }

    pub fn right_edge(&self) -> VerticalEdge {
        *self
            .vertical_edges()
            .last()
            .expect("at least two vertical edges")
    }

    /// Twice the signed shoelace area of the ring.
    pub fn doubled_signed_area(&self) -> i64 {
        shoelace2(&self.vertices)
    }

    pub fn to_json(&self) -> String {
        let doc = PolygonDoc {
            vertices: self.vertices.iter().map(|p| [p.x, p.y]).collect(),
        };
        serde_json::to_string(&doc).expect("polygon serializes")
    }

    /// Mirror image in x over the same x-range.
    pub fn mirrored(&self) -> Self {
        Self::from_profile(self.profile.mirrored())
    }
}

/// Parses a `{"vertices": [[x, y], ...]}` document and validates the ring.
pub fn parse_polygon(text: &str) -> Result<OrthoPolygon, PolygonError> {
    let doc: PolygonDoc =
        serde_json::from_str(text).map_err(|e| PolygonError::Malformed(e.to_string()))?;
    let ring: Vec<Point> = doc
        .vertices
        .iter()
        .map(|&[x, y]| Point::new(x, y))
        .collect();
    validate(&ring)
}

fn shoelace2(ring: &[Point]) -> i64 {
    let n = ring.len();
    (0..n)
        .map(|i| {
            let (a, b) = (ring[i], ring[(i + 1) % n]);
            a.x * b.y - b.x * a.y
        })
        .sum()
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Dir {
    East,
    West,
    North,
    South,
}

impl Dir {
    fn of(a: Point, b: Point) -> Option<Dir> {
        match (b.x - a.x, b.y - a.y) {
            (dx, 0) if dx > 0 => Some(Dir::East),
            (dx, 0) if dx < 0 => Some(Dir::West),
            (0, dy) if dy > 0 => Some(Dir::North),
            (0, dy) if dy < 0 => Some(Dir::South),
            _ => None,
        }
    }

    fn is_horizontal(self) -> bool {
        matches!(self, Dir::East | Dir::West)
    }
}

/// Validates a vertex ring (either orientation, any starting vertex).
///
/// Collinear consecutive edges are merged. On success the returned polygon
/// carries the canonical counter-clockwise ring.
pub fn validate(ring: &[Point]) -> Result<OrthoPolygon, PolygonError> {
    let n = ring.len();
    if n < 2 {
        return Err(PolygonError::TooFewVertices(n));
    }
    for (index, p) in ring.iter().enumerate() {
        for value in [p.x, p.y] {
            if value.abs() > MAX_COORD {
                return Err(PolygonError::OutOfRange { index, value });
            }
        }
    }
    for i in 0..n {
        if ring[i] == ring[(i + 1) % n] {
            return Err(PolygonError::DegenerateEdge { index: i });
        }
    }
    for j in 0..n {
        if ring[..j].contains(&ring[j]) {
            return Err(PolygonError::DuplicateVertex { index: j });
        }
    }
    for i in 0..n {
        if Dir::of(ring[i], ring[(i + 1) % n]).is_none() {
            return Err(PolygonError::NonOrthogonal { index: i });
        }
    }
    if n < 4 {
        return Err(PolygonError::TooFewVertices(n));
    }

    // Drop vertices between collinear edges; keep original indices for diagnostics.
    let mut kept: Vec<usize> = (0..n).collect();
    loop {
        let k = kept.len();
        let mut drop = None;
        for j in 0..k {
            let prev = ring[kept[(j + k - 1) % k]];
            let cur = ring[kept[j]];
            let next = ring[kept[(j + 1) % k]];
            let (din, dout) = (Dir::of(prev, cur).unwrap(), Dir::of(cur, next).unwrap());
            if din.is_horizontal() == dout.is_horizontal() {
                if din != dout {
                    // Edge doubles back over itself.
                    return Err(PolygonError::SelfIntersecting { index: kept[j] });
                }
                drop = Some(j);
                break;
            }
        }
        match drop {
            Some(j) => {
                kept.remove(j);
            }
            None => break,
        }
        if kept.len() < 4 {
            return Err(PolygonError::TooFewVertices(kept.len()));
        }
    }
    let pts: Vec<Point> = kept.iter().map(|&i| ring[i]).collect();
    let k = pts.len();

    // Simplicity: non-adjacent closed edges must not meet.
    let edge = |i: usize| (pts[i], pts[(i + 1) % k]);
    for i in 0..k {
        for (j, &orig) in kept.iter().enumerate().skip(i + 2) {
            if i == 0 && j == k - 1 {
                continue;
            }
            if closed_segments_meet(edge(i), edge(j)) {
                return Err(PolygonError::SelfIntersecting { index: orig });
            }
        }
    }

    // Each open slab between consecutive vertex abscissae must be crossed by
    // exactly two horizontal edges: one bottom, one top.
    let mut xs: Vec<i64> = pts.iter().map(|p| p.x).collect();
    xs.sort_unstable();
    xs.dedup();
    let mut spans = Vec::with_capacity(xs.len() - 1);
    for w in xs.windows(2) {
        let mid2 = w[0] + w[1];
        let crossing: Vec<usize> = (0..k)
            .filter(|&i| {
                let (a, b) = edge(i);
                a.y == b.y && 2 * a.x.min(b.x) < mid2 && mid2 < 2 * a.x.max(b.x)
            })
            .collect();
        if crossing.len() != 2 {
            let at = crossing.get(2).or(crossing.first()).copied().unwrap_or(0);
            return Err(PolygonError::NotMonotone { index: kept[at] });
        }
        let (y0, y1) = (pts[crossing[0]].y, pts[crossing[1]].y);
        spans.push(Interval::new(y0.min(y1), y0.max(y1)));
    }
    // A simple, merged, monotone ring always yields a well-formed profile.
    let profile = SlabProfile::new(xs, spans)
        .map_err(|e| PolygonError::Malformed(format!("internal profile error: {e}")))?;
    Ok(OrthoPolygon::from_profile(profile))
}

fn closed_segments_meet(a: (Point, Point), b: (Point, Point)) -> bool {
    let ax = Interval::new(a.0.x.min(a.1.x), a.0.x.max(a.1.x));
    let ay = Interval::new(a.0.y.min(a.1.y), a.0.y.max(a.1.y));
    let bx = Interval::new(b.0.x.min(b.1.x), b.0.x.max(b.1.x));
    let by = Interval::new(b.0.y.min(b.1.y), b.0.y.max(b.1.y));
    ax.intersect(&bx).is_some() && ay.intersect(&by).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(pts: &[(i64, i64)]) -> Vec<Point> {
        pts.iter().map(|&p| p.into()).collect()
    }

    #[test]
    fn parses_rect_and_valley() {
        let rect = parse_polygon(r#"{"vertices":[[0,0],[6,0],[6,3],[0,3]]}"#).unwrap();
        assert_eq!(rect.vertices().len(), 4);
        assert_eq!(rect.m(), 2);

        let valley =
            parse_polygon(r#"{"vertices":[[0,0],[6,0],[6,3],[4,3],[4,1],[2,1],[2,3],[0,3]]}"#)
                .unwrap();
        assert_eq!(valley.vertices().len(), 8);
        assert_eq!(valley.m(), 4);
        assert_eq!(valley.profile().xs(), &[0, 2, 4, 6]);
    }

    #[test]
    fn rejects_diagonal_edge() {
        let err = parse_polygon(r#"{"vertices":[[0,0],[2,2],[0,2]]}"#).unwrap_err();
        assert_eq!(err, PolygonError::NonOrthogonal { index: 0 });
        let err = validate(&ring(&[(0, 0), (2, 0)])).unwrap_err();
        assert_eq!(err, PolygonError::TooFewVertices(2));
        let err = validate(&ring(&[(0, 0), (2, 0), (2, 2), (1, 3)])).unwrap_err();
        assert_eq!(err, PolygonError::NonOrthogonal { index: 2 });
    }

    #[test]
    fn malformed_documents() {
        assert!(matches!(
            parse_polygon("{\"vertices\": [[0, 0.5]]}"),
            Err(PolygonError::Malformed(_))
        ));
        assert!(matches!(
            parse_polygon("not json"),
            Err(PolygonError::Malformed(_))
        ));
        assert_eq!(
            parse_polygon(r#"{"vertices":[[0,0],[2000000,0],[2000000,1],[0,1]]}"#),
            Err(PolygonError::OutOfRange {
                index: 1,
                value: 2_000_000
            })
        );
    }

    #[test]
    fn clockwise_input_is_reversed() {
        let cw = ring(&[
            (0, 3),
            (2, 3),
            (2, 1),
            (4, 1),
            (4, 3),
            (6, 3),
            (6, 0),
            (0, 0),
        ]);
        let p = validate(&cw).unwrap();
        assert!(p.doubled_signed_area() > 0);
        assert_eq!(p.vertices()[0], Point::new(0, 0));
        assert_eq!(p.profile().spans()[1], Interval::new(0, 1));
    }

    #[test]
    fn collinear_vertices_are_merged() {
        let p = validate(&ring(&[(0, 0), (3, 0), (6, 0), (6, 3), (0, 3), (0, 1)])).unwrap();
        assert_eq!(p.vertices().len(), 4);
    }

    #[test]
    fn duplicate_and_degenerate() {
        let fig8 = ring(&[
            (0, 0),
            (2, 0),
            (2, 2),
            (4, 2),
            (4, 4),
            (2, 4),
            (2, 2),
            (0, 2),
        ]);
        assert_eq!(
            validate(&fig8),
            Err(PolygonError::DuplicateVertex { index: 6 })
        );
        let closed = ring(&[(0, 0), (6, 0), (6, 3), (0, 3), (0, 0)]);
        assert_eq!(
            validate(&closed),
            Err(PolygonError::DegenerateEdge { index: 4 })
        );
    }

    #[test]
    fn u_shape_with_tooth_is_not_monotone() {
        // An upward-opening U: vertical lines through the prongs meet two intervals.
        let u = ring(&[
            (0, 0),
            (4, 0),
            (4, 4),
            (3, 4),
            (3, 1),
            (1, 1),
            (1, 4),
            (0, 4),
        ]);
        assert!(validate(&u).is_ok(), "a U opening upward is x-monotone");
        // A C opening rightward: vertical lines through the mouth meet two intervals.
        let c = ring(&[
            (0, 0),
            (4, 0),
            (4, 1),
            (1, 1),
            (1, 3),
            (4, 3),
            (4, 4),
            (0, 4),
        ]);
        assert!(matches!(
            validate(&c),
            Err(PolygonError::NotMonotone { .. })
        ));
    }

    #[test]
    fn crossing_edges_rejected() {
        let bow = ring(&[
            (0, 0),
            (4, 0),
            (4, 2),
            (1, 2),
            (1, -1),
            (3, -1),
            (3, 3),
            (0, 3),
        ]);
        assert!(matches!(
            validate(&bow),
            Err(PolygonError::SelfIntersecting { .. })
        ));
    }

    #[test]
    fn json_round_trip() {
        let p = validate(&ring(&[
            (0, 0),
            (6, 0),
            (6, 3),
            (4, 3),
            (4, 1),
            (2, 1),
            (2, 3),
            (0, 3),
        ]))
        .unwrap();
        assert_eq!(parse_polygon(&p.to_json()).unwrap(), p);
    }
}
