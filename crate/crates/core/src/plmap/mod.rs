//! Piecewise-linear at-most-n-valued maps `[0,1] -> S^1` or `S^1 -> S^1`,
//! represented by their graphs.
//!
//! A graph is a list of vertices `(x, y)` and straight arcs between them.
//! Each arc runs strictly left to right. Its `lift` is added to the
//! y-coordinate of the end vertex, so an arc may wind across the `0 ~ 1` seam
//! of the codomain while staying linear in a single chart.

mod components;
mod format;
mod nfold;
mod profile;
mod spmap;
mod validate;

pub use components::UnionCheck;
pub use format::{ArcDoc, MapDocument};
pub use nfold::{NFoldMap, Permutation, Sheet};
pub use profile::{CardinalityProfile, ProfilePiece};
pub use spmap::SPMap;
pub use validate::{Side, ValidationReport, Violation};

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::circle::{CirclePoint, Configuration};
use crate::error::{Error, Result, StructuralError};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DomainKind {
    Interval,
    Circle,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vertex {
    pub x: Rational,
    pub y: CirclePoint,
}

impl Vertex {
    pub fn new(x: Rational, y: Rational) -> Self {
        Vertex {
            x,
            y: CirclePoint::new(y),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Arc {
    pub from: usize,
    pub to: usize,
    pub weight: Option<u64>,
    pub lift: i64,
}

impl Arc {
    pub fn new(from: usize, to: usize) -> Self {
        Arc {
            from,
            to,
            weight: None,
            lift: 0,
        }
    }

    pub fn weighted(mut self, w: u64) -> Self {
        self.weight = Some(w);
        self
    }

    pub fn lifted(mut self, lift: i64) -> Self {
        self.lift = lift;
        self
    }
}

/// An arc resolved to coordinates: `y` runs linearly from `y0` (in `[0,1)`)
/// to `y1` (lifted, any rational) as `x` runs from `x0` to `x1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Segment {
    pub x0: Rational,
    pub x1: Rational,
    pub y0: Rational,
    pub y1: Rational,
}

impl Segment {
    pub fn spans(&self, x: &Rational) -> bool {
        self.x0 <= *x && *x <= self.x1
    }

    /// Lifted height at `x`; meaningful for `x` in the span.
    pub fn lifted_at(&self, x: &Rational) -> Rational {
        if *x == self.x0 {
            return self.y0.clone();
        }
        if *x == self.x1 {
            return self.y1.clone();
        }
        let t = (x - &self.x0) / (&self.x1 - &self.x0);
        &self.y0 + &(t * (&self.y1 - &self.y0))
    }

    pub fn point_at(&self, x: &Rational) -> CirclePoint {
        CirclePoint::new(self.lifted_at(x))
    }

    pub fn midpoint_x(&self) -> Rational {
        (&self.x0 + &self.x1) / Rational::integer(2)
    }
}

/// A point of the graph, with the seam `x = 1 ~ x = 0` already folded in
/// for circle domains.
pub type PointKey = (Rational, CirclePoint);

/// Arcs meeting at one point of the graph.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Incidence {
    /// Arcs arriving from the left (ending here).
    pub left: Vec<usize>,
    /// Arcs leaving to the right (starting here).
    pub right: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PLMultimap {
    n: usize,
    domain: DomainKind,
    vertices: Vec<Vertex>,
    arcs: Vec<Arc>,
}

impl PLMultimap {
    /// Checks structure only: indices in range, `x` in `[0,1]`, arcs strictly
    /// increasing in `x`, weights nonzero. Use [`PLMultimap::validate`] for the
    /// semantic conditions.
    pub fn new(
        n: usize,
        domain: DomainKind,
        vertices: Vec<Vertex>,
        arcs: Vec<Arc>,
    ) -> Result<Self, StructuralError> {
        if n == 0 {
            return Err(StructuralError::ZeroBound);
        }
        for (i, v) in vertices.iter().enumerate() {
            if v.x.is_negative() || v.x > 1 {
                return Err(StructuralError::XOutOfRange {
                    vertex: i,
                    x: v.x.clone(),
                });
            }
        }
        for (i, a) in arcs.iter().enumerate() {
            for v in [a.from, a.to] {
                if v >= vertices.len() {
                    return Err(StructuralError::VertexIndex {
                        arc: i,
                        vertex: v,
                        count: vertices.len(),
                    });
                }
            }
            let (x0, x1) = (&vertices[a.from].x, &vertices[a.to].x);
            if x0 >= x1 {
                return Err(StructuralError::NotIncreasing {
                    arc: i,
                    from: x0.clone(),
                    to: x1.clone(),
                });
            }
            if a.weight == Some(0) {
                return Err(StructuralError::ZeroWeight { arc: i });
            }
        }
        Ok(PLMultimap {
            n,
            domain,
            vertices,
            arcs,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn domain(&self) -> DomainKind {
        self.domain
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn is_weighted(&self) -> bool {
        !self.arcs.is_empty() && self.arcs.iter().all(|a| a.weight.is_some())
    }

    /// Arc weights, or the arc index of the first unweighted arc.
    pub fn weights(&self) -> Result<Vec<u64>> {
        self.arcs
            .iter()
            .enumerate()
            .map(|(i, a)| a.weight.ok_or(Error::MissingWeight(i)))
            .collect()
    }

    /// Same graph with the given weights attached (or removed, with `None`).
    pub fn with_weights(&self, weights: Option<&[u64]>) -> Result<Self, StructuralError> {
        let mut arcs = self.arcs.clone();
        for (i, a) in arcs.iter_mut().enumerate() {
            a.weight = weights.map(|w| w[i]);
        }
        PLMultimap::new(self.n, self.domain, self.vertices.clone(), arcs)
    }

    pub fn with_bound(&self, n: usize) -> Result<Self, StructuralError> {
        PLMultimap::new(n, self.domain, self.vertices.clone(), self.arcs.clone())
    }

    pub(crate) fn segment(&self, arc: usize) -> Segment {
        let a = &self.arcs[arc];
        let (s, e) = (&self.vertices[a.from], &self.vertices[a.to]);
        Segment {
            x0: s.x.clone(),
            x1: e.x.clone(),
            y0: s.y.value().clone(),
            y1: e.y.value() + &Rational::integer(a.lift),
        }
    }

    pub(crate) fn segments(&self) -> Vec<Segment> {
        (0..self.arcs.len()).map(|i| self.segment(i)).collect()
    }

    /// Folds `x = 1` onto `x = 0` on circle domains.
    pub fn point_key(&self, x: &Rational, y: &CirclePoint) -> PointKey {
        if self.domain == DomainKind::Circle && *x == 1 {
            (Rational::zero(), y.clone())
        } else {
            (x.clone(), y.clone())
        }
    }

    /// Every graph point that is an arc endpoint, with its incident arcs.
    pub fn incidences(&self) -> BTreeMap<PointKey, Incidence> {
        let mut map: BTreeMap<PointKey, Incidence> = BTreeMap::new();
        for (i, a) in self.arcs.iter().enumerate() {
            let s = &self.vertices[a.from];
            let e = &self.vertices[a.to];
            map.entry(self.point_key(&s.x, &s.y))
                .or_default()
                .right
                .push(i);
            map.entry(self.point_key(&e.x, &e.y))
                .or_default()
                .left
                .push(i);
        }
        map
    }

    /// Distinct x-coordinates of arc endpoints, together with 0 and 1.
    pub(crate) fn vertex_xs(&self) -> Vec<Rational> {
        let mut xs = vec![Rational::zero(), Rational::one()];
        for a in &self.arcs {
            xs.push(self.vertices[a.from].x.clone());
            xs.push(self.vertices[a.to].x.clone());
        }
        xs.sort();
        xs.dedup();
        xs
    }

    /// The value set at `x`: heights of all arcs over `x`, reduced mod 1.
    ///
    /// Defined for any structurally sound map; the result is only guaranteed
    /// to have size in `[1, n]` when the map is valid.
    pub fn evaluate(&self, x: &Rational) -> Result<Configuration> {
        if x.is_negative() || *x > 1 {
            return Err(Error::OutOfDomain(x.clone()));
        }
        let pts: Vec<CirclePoint> = self
            .segments()
            .iter()
            .filter(|s| s.spans(x))
            .map(|s| s.point_at(x))
            .collect();
        Configuration::new(pts).map_err(|_| Error::EmptyFiber(x.clone()))
    }

    /// Total weight over `x`, counting each arc whose half-open span
    /// `[x0, x1)` contains `x` (`(x0, x1]` at `x = 1`).
    pub(crate) fn weighted_sum_at(&self, weights: &[u64], x: &Rational) -> u64 {
        self.segments()
            .iter()
            .zip(weights)
            .filter(|(s, _)| {
                if *x == 1 {
                    s.x1 == *x
                } else {
                    s.x0 <= *x && *x < s.x1
                }
            })
            .map(|(_, w)| *w)
            .sum()
    }

    /// Checks Darbo balance at every interior (and seam) graph point: total
    /// weight arriving from the left equals total weight leaving right.
    pub fn check_balance(&self, weights: &[u64]) -> Result<()> {
        for ((x, y), inc) in self.balance_points() {
            let left: u64 = inc.left.iter().map(|&a| weights[a]).sum();
            let right: u64 = inc.right.iter().map(|&a| weights[a]).sum();
            if left != right {
                return Err(Error::Unbalanced {
                    x,
                    y: y.into_value(),
                    left,
                    right,
                });
            }
        }
        Ok(())
    }

    /// Graph points where weights must balance: interior points, plus seam
    /// points on circle domains.
    pub fn balance_points(&self) -> Vec<(PointKey, Incidence)> {
        self.incidences()
            .into_iter()
            .filter(|((x, _), _)| match self.domain {
                DomainKind::Circle => true,
                DomainKind::Interval => x.is_positive() && *x < 1,
            })
            .collect()
    }

    pub(crate) fn arc_meetings(&self, a: &Segment, b: &Segment) -> Option<Vec<Rational>> {
        meetings(a, b)
    }

    /// Domain points worth sampling: every vertex x plus the midpoint of each
    /// gap between consecutive vertex x's.
    pub fn sample_xs(&self) -> Vec<Rational> {
        let xs = self.vertex_xs();
        let mut out = Vec::with_capacity(2 * xs.len());
        for w in xs.windows(2) {
            out.push(w[0].clone());
            out.push((&w[0] + &w[1]) / Rational::integer(2));
        }
        out.push(Rational::one());
        out
    }

    /// Builds a map from strands, each a list of knots `(x, lifted y)` with
    /// increasing `x`. Knots landing on the same graph point share a vertex and
    /// segments traced by several strands become one arc, so strands may merge
    /// and split. Only structure is checked; the result may still be invalid.
    pub fn from_strands(
        n: usize,
        domain: DomainKind,
        strands: &[Vec<(Rational, Rational)>],
    ) -> Result<Self, StructuralError> {
        let mut vertices: Vec<Vertex> = Vec::new();
        let mut index: BTreeMap<(Rational, Rational), usize> = BTreeMap::new();
        let mut vertex_of = |x: &Rational, y: &Rational| -> usize {
            let key = (x.clone(), y.fract_mod1());
            *index.entry(key).or_insert_with(|| {
                vertices.push(Vertex::new(x.clone(), y.clone()));
                vertices.len() - 1
            })
        };
        let mut arcs: Vec<Arc> = Vec::new();
        for strand in strands {
            for w in strand.windows(2) {
                let ((x0, y0), (x1, y1)) = (&w[0], &w[1]);
                let from = vertex_of(x0, y0);
                let to = vertex_of(x1, y1);
                let lift = (y1.floor() - y0.floor())
                    .try_into()
                    .expect("lift fits in i64");
                let arc = Arc::new(from, to).lifted(lift);
                if !arcs.contains(&arc) {
                    arcs.push(arc);
                }
            }
        }
        PLMultimap::new(n, domain, vertices, arcs)
    }
}

/// Union of equicardinal maps to n-fold map; see [`PLMultimap::to_nfold`].
pub fn union_to_nfold(f: &PLMultimap) -> Result<NFoldMap> {
    f.to_nfold()
}

pub fn nfold_to_sp(g: &NFoldMap) -> Result<SPMap> {
    g.to_sp()
}

pub fn weighted_to_sp(f: &PLMultimap) -> Result<SPMap> {
    f.weighted_to_sp()
}

pub fn sp_to_weighted(g: &SPMap) -> PLMultimap {
    g.to_weighted()
}

pub fn weighted_index(f: &PLMultimap) -> Result<u64> {
    f.weighted_index()
}

/// Exact x-values where two segments meet on the circle, over the common part
/// of their spans. `None` when they coincide along an interval.
pub(crate) fn meetings(a: &Segment, b: &Segment) -> Option<Vec<Rational>> {
    let lo = a.x0.clone().max(b.x0.clone());
    let hi = a.x1.clone().min(b.x1.clone());
    if lo > hi {
        return Some(Vec::new());
    }
    let d_lo = a.lifted_at(&lo) - b.lifted_at(&lo);
    if lo == hi {
        return Some(if d_lo.is_integer() {
            vec![lo]
        } else {
            Vec::new()
        });
    }
    let d_hi = a.lifted_at(&hi) - b.lifted_at(&hi);
    if d_lo == d_hi {
        return if d_lo.is_integer() {
            None
        } else {
            Some(Vec::new())
        };
    }
    let (dmin, dmax) = if d_lo < d_hi {
        (d_lo.clone(), d_hi.clone())
    } else {
        (d_hi.clone(), d_lo.clone())
    };
    let mut out = Vec::new();
    let mut k = dmin.ceil();
    let top = dmax.floor();
    while k <= top {
        let kr = Rational::from_bigint(k.clone());
        let t = (&kr - &d_lo) / (&d_hi - &d_lo);
        out.push(&lo + &(t * (&hi - &lo)));
        k += 1;
    }
    Some(out)
}
