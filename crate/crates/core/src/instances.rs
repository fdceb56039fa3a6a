//! Named fixtures and a seeded generator of random monotone orthogonal polygons.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::geometry::Interval;
use crate::polygon::OrthoPolygon;
use crate::profile::SlabProfile;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Fixture {
    Rect,
    Valley,
    Stair3,
    Stair6,
    /// One vertical 2-transmitter guards it; 0-transmitters need three.
    Gap7,
}

impl Fixture {
    pub const ALL: [Fixture; 5] = [
        Fixture::Rect,
        Fixture::Valley,
        Fixture::Stair3,
        Fixture::Stair6,
        Fixture::Gap7,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Fixture::Rect => "RECT",
            Fixture::Valley => "VALLEY",
            Fixture::Stair3 => "STAIR3",
            Fixture::Stair6 => "STAIR6",
            Fixture::Gap7 => "GAP7",
        }
    }

    pub fn profile(self) -> SlabProfile {
        let (xs, spans): (&[i64], &[(i64, i64)]) = match self {
            Fixture::Rect => (&[0, 6], &[(0, 3)]),
            Fixture::Valley => (&[0, 2, 4, 6], &[(0, 3), (0, 1), (0, 3)]),
            Fixture::Stair3 => (&[0, 2, 4, 6], &[(0, 2), (1, 3), (2, 4)]),
            Fixture::Stair6 => (
                &[0, 2, 4, 6, 8, 10, 12],
                &[(0, 2), (1, 3), (2, 4), (3, 5), (4, 6), (5, 7)],
            ),
            Fixture::Gap7 => (
                &[0, 2, 4, 6, 8, 10, 12, 14],
                &[(2, 3), (0, 3), (0, 1), (0, 3), (0, 1), (0, 3), (2, 3)],
            ),
        };
        SlabProfile::from_pairs(xs, spans).expect("fixture profiles are valid")
    }
}

impl fmt::Display for Fixture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Fixture {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Fixture::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownFixture(s.to_string()))
    }
}

pub fn fixture(name: Fixture) -> OrthoPolygon {
    OrthoPolygon::from_profile(name.profile())
}

const RESAMPLE_LIMIT: usize = 64;

/// Neighbouring spans must overlap in a segment of positive length and differ.
fn compatible(prev: Interval, next: Interval) -> bool {
    prev != next && prev.intersect(&next).is_some_and(|o| o.lo < o.hi)
}

/// Stretch `s` until it overlaps `prev` in positive length; if that makes it
/// equal to `prev`, pick a deterministic neighbour instead.
fn clamp_span(s: Interval, prev: Interval, max_height: i64) -> Interval {
    let c = Interval::new(s.lo.min(prev.hi - 1), s.hi.max(prev.lo + 1));
    if c != prev {
        c
    } else if prev.len() >= 2 {
        Interval::new(prev.lo, prev.hi - 1)
    } else if prev.hi < max_height {
        Interval::new(prev.lo, prev.hi + 1)
    } else {
        Interval::new(prev.lo - 1, prev.hi)
    }
}

/// Random x-monotone orthogonal polygon with `slabs` slabs, y-range within
/// `[0, max_height]` and slab widths in `[1, max_width]`.
///
/// Each span is resampled until it overlaps and differs from its
/// predecessor, up to a fixed number of attempts, after which the last draw
/// is clamped onto it.
///
/// # Panics
///
/// If `slabs == 0`, `max_width < 1` or `max_height < 2`.
pub fn random_monotone(slabs: usize, max_height: i64, max_width: i64, seed: u64) -> OrthoPolygon {
    assert!(slabs >= 1, "need at least one slab");
    assert!(max_width >= 1, "max_width must be positive");
    assert!(max_height >= 2, "max_height must be at least 2");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let draw_span = |rng: &mut ChaCha8Rng| {
        let lo = rng.random_range(0..max_height);
        let hi = rng.random_range(lo + 1..=max_height);
        Interval::new(lo, hi)
    };

    let mut xs = vec![0i64];
    let mut spans: Vec<Interval> = Vec::with_capacity(slabs);
    for _ in 0..slabs {
        let w = rng.random_range(1..=max_width);
        xs.push(xs.last().unwrap() + w);
        let span = match spans.last() {
            None => draw_span(&mut rng),
            Some(&prev) => {
                let mut last = prev;
                (0..RESAMPLE_LIMIT)
                    .map(|_| {
                        last = draw_span(&mut rng);
                        last
                    })
                    .find(|&s| compatible(prev, s))
                    .unwrap_or_else(|| clamp_span(last, prev, max_height))
            }
        };
        spans.push(span);
    }
    OrthoPolygon::from_profile(SlabProfile::new(xs, spans).expect("generator keeps invariants"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polygon::validate;

    #[test]
    fn fixture_names_round_trip() {
        for f in Fixture::ALL {
            assert_eq!(f.name().parse::<Fixture>().unwrap(), f);
        }
        assert_eq!("gap7".parse::<Fixture>().unwrap(), Fixture::Gap7);
        assert!("NOPE".parse::<Fixture>().is_err());
    }

    #[test]
    fn gap7_has_no_full_width_horizontal() {
        let p = Fixture::Gap7.profile();
        assert_eq!(p.slab_count(), 7);
        let common = p
            .spans()
            .iter()
            .skip(1)
            .try_fold(p.spans()[0], |acc, s| acc.intersect(s));
        assert_eq!(common, None);
    }

    #[test]
    fn stair3_validates() {
        let p = fixture(Fixture::Stair3);
        assert_eq!(validate(p.vertices()).unwrap(), p);
        // Two vertical edges at each inner breakpoint plus the two ends.
        assert_eq!(p.m(), 6);
    }

    #[test]
    fn single_slab_is_rectangle() {
        for seed in 0..20 {
            let p = random_monotone(1, 5, 3, seed);
            assert_eq!(p.vertices().len(), 4);
        }
    }

    #[test]
    fn deterministic_per_seed() {
        assert_eq!(random_monotone(6, 8, 4, 99), random_monotone(6, 8, 4, 99));
        assert_ne!(random_monotone(6, 8, 4, 1), random_monotone(6, 8, 4, 2));
    }

    #[test]
    fn clamped_span_is_compatible() {
        let spans =
            [(0, 1), (1, 2), (0, 5), (3, 4), (0, 2), (6, 8)].map(|(a, b)| Interval::new(a, b));
        for prev in spans {
            for s in spans {
                assert!(compatible(prev, clamp_span(s, prev, 8)), "{prev:?} {s:?}");
            }
        }
        assert!(compatible(
            Interval::new(0, 1),
            clamp_span(Interval::new(0, 1), Interval::new(0, 1), 2)
        ));
    }
}
