use std::fmt;

use serde::Serialize;

use super::{DomainKind, PLMultimap};
use crate::circle::CirclePoint;
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// Two arcs meet at a point that is not an endpoint of both.
    Crossing {
        arcs: (usize, usize),
        x: Rational,
        y: CirclePoint,
    },
    /// Two arcs coincide along a whole interval.
    Overlap {
        arcs: (usize, usize),
        from_x: Rational,
        to_x: Rational,
    },
    /// A graph point with no arc on one side: the value set jumps there, so
    /// the map fails lower semicontinuity.
    MissingSide {
        x: Rational,
        y: CirclePoint,
        side: Side,
    },
    /// A vertex no arc uses.
    IsolatedVertex { vertex: usize },
    /// The value set is empty or larger than the bound somewhere.
    Cardinality {
        from_x: Rational,
        to_x: Rational,
        count: usize,
        bound: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Crossing { arcs, x, y } => {
                write!(
                    f,
                    "arcs {} and {} cross at ({x}, {y}) away from a shared vertex",
                    arcs.0, arcs.1
                )
            }
            Violation::Overlap { arcs, from_x, to_x } => {
                write!(
                    f,
                    "arcs {} and {} overlap on [{from_x}, {to_x}]",
                    arcs.0, arcs.1
                )
            }
            Violation::MissingSide { x, y, side } => {
                let side = match side {
                    Side::Left => "left",
                    Side::Right => "right",
                };
                write!(
                    f,
                    "lsc violation at ({x}, {y}): no arc arrives from the {side}"
                )
            }
            Violation::IsolatedVertex { vertex } => {
                write!(f, "vertex {vertex} is not used by any arc")
            }
            Violation::Cardinality {
                from_x,
                to_x,
                count,
                bound,
            } => write!(
                f,
                "{count} values over [{from_x}, {to_x}], outside the range 1..={bound}"
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn lsc_violations(&self) -> impl Iterator<Item = &Violation> {
        self.violations
            .iter()
            .filter(|v| matches!(v, Violation::MissingSide { .. }))
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            return write!(f, "VALID");
        }
        write!(f, "INVALID")?;
        for v in &self.violations {
            write!(f, "\n  {v}")?;
        }
        Ok(())
    }
}

impl PLMultimap {
    /// Semantic validation: arcs meet only at shared endpoints, every graph
    /// point is approached from both sides (seam included on circle domains),
    /// and every fiber has between 1 and `n` points.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        let segs = self.segments();

        for i in 0..segs.len() {
            for j in (i + 1)..segs.len() {
                let (a, b) = (&segs[i], &segs[j]);
                match self.arc_meetings(a, b) {
                    None => violations.push(Violation::Overlap {
                        arcs: (i, j),
                        from_x: a.x0.clone().max(b.x0.clone()),
                        to_x: a.x1.clone().min(b.x1.clone()),
                    }),
                    Some(xs) => {
                        for x in xs {
                            let is_end = |s: &super::Segment| s.x0 == x || s.x1 == x;
                            if !(is_end(a) && is_end(b)) {
                                violations.push(Violation::Crossing {
                                    arcs: (i, j),
                                    y: a.point_at(&x),
                                    x,
                                });
                            }
                        }
                    }
                }
            }
        }

        for ((x, y), inc) in self.incidences() {
            let interior = x.is_positive() && x < 1;
            let needs_both = interior || self.domain == DomainKind::Circle;
            if !needs_both {
                continue;
            }
            if inc.left.is_empty() {
                violations.push(Violation::MissingSide {
                    x: x.clone(),
                    y: y.clone(),
                    side: Side::Left,
                });
            }
            if inc.right.is_empty() {
                violations.push(Violation::MissingSide {
                    x,
                    y,
                    side: Side::Right,
                });
            }
        }

        let mut used = vec![false; self.vertices.len()];
        for a in &self.arcs {
            used[a.from] = true;
            used[a.to] = true;
        }
        for (vertex, u) in used.into_iter().enumerate() {
            if !u {
                violations.push(Violation::IsolatedVertex { vertex });
            }
        }

        for piece in self.cardinality_profile().pieces() {
            if piece.count == 0 || piece.count > self.n {
                violations.push(Violation::Cardinality {
                    from_x: piece.lo.clone(),
                    to_x: piece.hi.clone(),
                    count: piece.count,
                    bound: self.n,
                });
            }
        }

        ValidationReport { violations }
    }
}
