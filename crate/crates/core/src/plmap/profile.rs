use std::fmt;

use serde::Serialize;

use super::PLMultimap;
use crate::rational::Rational;

/// A maximal run of the domain with constant fiber size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProfilePiece {
    pub lo: Rational,
    pub hi: Rational,
    pub lo_closed: bool,
    pub hi_closed: bool,
    pub count: usize,
}

impl fmt::Display for ProfilePiece {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let open = if self.lo_closed { '[' } else { '(' };
        let close = if self.hi_closed { ']' } else { ')' };
        if self.lo == self.hi {
            write!(f, "{{{}}}: {}", self.lo, self.count)
        } else {
            write!(f, "{open}{}, {}{close}: {}", self.lo, self.hi, self.count)
        }
    }
}

/// Piecewise-constant `x -> |f(x)|` over `[0,1]`. Pieces are listed left to
/// right and partition the domain; adjacent pieces have different counts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CardinalityProfile {
    pieces: Vec<ProfilePiece>,
}

impl CardinalityProfile {
    pub fn pieces(&self) -> &[ProfilePiece] {
        &self.pieces
    }

    pub fn counts(&self) -> Vec<usize> {
        self.pieces.iter().map(|p| p.count).collect()
    }

    pub fn count_at(&self, x: &Rational) -> usize {
        self.pieces
            .iter()
            .find(|p| {
                let above = if p.lo_closed { *x >= p.lo } else { *x > p.lo };
                let below = if p.hi_closed { *x <= p.hi } else { *x < p.hi };
                above && below
            })
            .map_or(0, |p| p.count)
    }

    pub fn is_constant(&self) -> bool {
        self.pieces.len() == 1
    }
}

impl fmt::Display for CardinalityProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.pieces.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl PLMultimap {
    /// Breakpoints are vertex x-values and every exact arc-meeting x-value.
    pub(crate) fn breakpoints(&self) -> Vec<Rational> {
        let mut xs = self.vertex_xs();
        let segs = self.segments();
        for i in 0..segs.len() {
            for j in (i + 1)..segs.len() {
                if let Some(m) = self.arc_meetings(&segs[i], &segs[j]) {
                    xs.extend(m);
                }
            }
        }
        xs.sort();
        xs.dedup();
        xs
    }

    pub fn cardinality_profile(&self) -> CardinalityProfile {
        let count = |x: &Rational| self.evaluate(x).map_or(0, |c| c.len());
        let xs = self.breakpoints();
        let mut elementary: Vec<ProfilePiece> = Vec::with_capacity(2 * xs.len());
        for (i, b) in xs.iter().enumerate() {
            elementary.push(ProfilePiece {
                lo: b.clone(),
                hi: b.clone(),
                lo_closed: true,
                hi_closed: true,
                count: count(b),
            });
            if let Some(next) = xs.get(i + 1) {
                let mid = (b + next) / Rational::integer(2);
                elementary.push(ProfilePiece {
                    lo: b.clone(),
                    hi: next.clone(),
                    lo_closed: false,
                    hi_closed: false,
                    count: count(&mid),
                });
            }
        }

        let mut pieces: Vec<ProfilePiece> = Vec::new();
        for p in elementary {
            match pieces.last_mut() {
                Some(last) if last.count == p.count => {
                    last.hi = p.hi;
                    last.hi_closed = p.hi_closed;
                }
                _ => pieces.push(p),
            }
        }
        CardinalityProfile { pieces }
    }

    pub fn is_equicardinal(&self) -> bool {
        self.cardinality_profile().is_constant()
    }

    /// Every fiber has either one point or exactly `n` points.
    pub fn is_one_n_valued(&self) -> bool {
        self.cardinality_profile()
            .pieces()
            .iter()
            .all(|p| p.count == 1 || p.count == self.n)
    }
}
