//! n-fold maps: an n-sheeted covering of the domain together with a map on
//! the covering space, stored as one piecewise-linear path per sheet.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::{meetings, Arc, DomainKind, PLMultimap, SPMap, Segment, UnionCheck, Vertex};
use crate::circle::{CirclePoint, Configuration, MultisetConfiguration};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// A permutation of `0..n`; `images[i]` is the image of `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || seen[i] {
                return Err(Error::NFold(format!("{images:?} is not a permutation")));
            }
            seen[i] = true;
        }
        Ok(Permutation(images))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Nontrivial cycles, each starting at its smallest element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for start in 0..self.0.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut j = self.0[start];
            while j != start {
                seen[j] = true;
                cycle.push(j);
                j = self.0[j];
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }
}

/// Cycle notation on sheets numbered from 1, `()` for the identity.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|i| (i + 1).to_string()).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

/// A continuous path of lifted heights over `[0,1]`, linear between knots.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Sheet {
    knots: Vec<(Rational, Rational)>,
}

impl Sheet {
    /// Knots must start at `x = 0`, end at `x = 1`, and strictly increase in `x`.
    pub fn new(knots: Vec<(Rational, Rational)>) -> Result<Self> {
        if knots.len() < 2 {
            return Err(Error::NFold("a sheet needs at least two knots".into()));
        }
        if !knots[0].0.is_zero() || knots[knots.len() - 1].0 != 1 {
            return Err(Error::NFold("a sheet must run from x = 0 to x = 1".into()));
        }
        if knots.windows(2).any(|w| w[0].0 >= w[1].0) {
            return Err(Error::NFold(
                "sheet knots must strictly increase in x".into(),
            ));
        }
        Ok(Sheet { knots })
    }

    /// The constant path at height `y`.
    pub fn constant(y: Rational) -> Self {
        Sheet {
            knots: vec![(Rational::zero(), y.clone()), (Rational::one(), y)],
        }
    }

    pub fn knots(&self) -> &[(Rational, Rational)] {
        &self.knots
    }

    fn piece(&self, i: usize) -> Segment {
        let (a, b) = (&self.knots[i], &self.knots[i + 1]);
        Segment {
            x0: a.0.clone(),
            x1: b.0.clone(),
            y0: a.1.clone(),
            y1: b.1.clone(),
        }
    }

    pub fn lifted_at(&self, x: &Rational) -> Rational {
        let i = match self.knots.binary_search_by(|k| k.0.cmp(x)) {
            Ok(i) => return self.knots[i].1.clone(),
            Err(0) => 0,
            Err(i) => (i - 1).min(self.knots.len() - 2),
        };
        self.piece(i).lifted_at(x)
    }

    pub fn value_at(&self, x: &Rational) -> CirclePoint {
        CirclePoint::new(self.lifted_at(x))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NFoldMap {
    domain: DomainKind,
    sheets: Vec<Sheet>,
    monodromy: Permutation,
}

impl NFoldMap {
    /// Sheet `i` at `x = 1` must agree (mod 1) with sheet `monodromy(i)` at
    /// `x = 0`. Interval domains require the identity permutation.
    pub fn new(domain: DomainKind, sheets: Vec<Sheet>, monodromy: Permutation) -> Result<Self> {
        if sheets.is_empty() {
            return Err(Error::NFold("at least one sheet is required".into()));
        }
        if monodromy.len() != sheets.len() {
            return Err(Error::NFold(format!(
                "{} sheets but a permutation of {} elements",
                sheets.len(),
                monodromy.len()
            )));
        }
        match domain {
            DomainKind::Interval if !monodromy.is_identity() => {
                return Err(Error::NFold("coverings of the interval are trivial".into()));
            }
            DomainKind::Circle => {
                let (zero, one) = (Rational::zero(), Rational::one());
                for (i, s) in sheets.iter().enumerate() {
                    let j = monodromy.apply(i);
                    if s.value_at(&one) != sheets[j].value_at(&zero) {
                        return Err(Error::NFold(format!(
                            "sheet {} ends at {} but sheet {} starts at {}",
                            i + 1,
                            s.value_at(&one),
                            j + 1,
                            sheets[j].value_at(&zero)
                        )));
                    }
                }
            }
            DomainKind::Interval => {}
        }
        Ok(NFoldMap {
            domain,
            sheets,
            monodromy,
        })
    }

    pub fn n(&self) -> usize {
        self.sheets.len()
    }

    pub fn domain(&self) -> DomainKind {
        self.domain
    }

    pub fn sheets(&self) -> &[Sheet] {
        &self.sheets
    }

    pub fn monodromy(&self) -> &Permutation {
        &self.monodromy
    }

    pub fn evaluate(&self, x: &Rational) -> Result<Configuration> {
        if x.is_negative() || *x > 1 {
            return Err(Error::OutOfDomain(x.clone()));
        }
        Configuration::new(self.sheets.iter().map(|s| s.value_at(x)))
    }

    pub fn evaluate_multiset(&self, x: &Rational) -> Result<MultisetConfiguration> {
        if x.is_negative() || *x > 1 {
            return Err(Error::OutOfDomain(x.clone()));
        }
        MultisetConfiguration::new(self.sheets.iter().map(|s| (s.value_at(x), 1)))
    }

    /// The symmetric-product map `x -> [sheet values over x]`: coincident
    /// sheets become one arc whose weight counts them.
    pub fn to_sp(&self) -> Result<SPMap> {
        let mut xs: Vec<Rational> = self
            .sheets
            .iter()
            .flat_map(|s| s.knots.iter().map(|k| k.0.clone()))
            .collect();
        xs.sort();
        xs.dedup();

        // Split further wherever two sheets meet inside a gap.
        let mut extra = Vec::new();
        for w in xs.windows(2) {
            let pieces: Vec<Segment> = self
                .sheets
                .iter()
                .map(|s| Segment {
                    x0: w[0].clone(),
                    x1: w[1].clone(),
                    y0: s.lifted_at(&w[0]),
                    y1: s.lifted_at(&w[1]),
                })
                .collect();
            for i in 0..pieces.len() {
                for j in (i + 1)..pieces.len() {
                    if let Some(m) = meetings(&pieces[i], &pieces[j]) {
                        extra.extend(m.into_iter().filter(|x| *x > w[0] && *x < w[1]));
                    }
                }
            }
        }
        xs.extend(extra);
        xs.sort();
        xs.dedup();

        let mut vertex_ids: BTreeMap<(Rational, CirclePoint), usize> = BTreeMap::new();
        let mut vertices: Vec<Vertex> = Vec::new();
        let mut vertex = |x: &Rational, y: CirclePoint| -> usize {
            *vertex_ids.entry((x.clone(), y.clone())).or_insert_with(|| {
                vertices.push(Vertex { x: x.clone(), y });
                vertices.len() - 1
            })
        };
        let mut arcs = Vec::new();
        for w in xs.windows(2) {
            // (reduced start height, lifted end height) -> number of sheets
            let mut groups: BTreeMap<(Rational, Rational), u64> = BTreeMap::new();
            for s in &self.sheets {
                let a = s.lifted_at(&w[0]);
                let b = s.lifted_at(&w[1]);
                let start = a.fract_mod1();
                let end = &start + &(b - a);
                *groups.entry((start, end)).or_insert(0) += 1;
            }
            for ((start, end), k) in groups {
                let from = vertex(&w[0], CirclePoint::new(start));
                let to = vertex(&w[1], CirclePoint::new(end.clone()));
                let lift = Rational::from_bigint(end.floor());
                let lift = lift
                    .numer()
                    .try_into()
                    .map_err(|_| Error::NFold("sheet winds too far".into()))?;
                arcs.push(Arc::new(from, to).weighted(k).lifted(lift));
            }
        }
        let graph = PLMultimap::new(self.n(), self.domain, vertices, arcs)?;
        SPMap::new(self.n() as u64, graph)
    }
}

impl PLMultimap {
    /// Builds the covering from the graph itself: sheets are the fiber points
    /// over `x = 0` in increasing height, and the monodromy records where each
    /// sheet lands after one trip around a circle domain.
    pub fn to_nfold(&self) -> Result<NFoldMap> {
        let report = self.validate();
        if !report.is_valid() {
            return Err(Error::Invalid(report.to_string()));
        }
        if let UnionCheck::Inconclusive { component } = self.union_check() {
            return Err(Error::NotUnionOfEquicardinal { component });
        }
        let incidences = self.incidences();
        let zero = Rational::zero();

        let mut starts: Vec<(CirclePoint, usize)> = Vec::new();
        for ((x, y), inc) in incidences.range((zero.clone(), CirclePoint::zero())..) {
            if *x != zero {
                break;
            }
            for &a in &inc.right {
                starts.push((y.clone(), a));
            }
        }

        let mut sheets = Vec::with_capacity(starts.len());
        for (y, first) in &starts {
            let mut arc = *first;
            let mut knots = vec![(zero.clone(), y.value().clone())];
            let mut offset = Rational::zero();
            loop {
                let seg = self.segment(arc);
                let end = &seg.y1 + &offset;
                knots.push((seg.x1.clone(), end.clone()));
                if seg.x1 == 1 {
                    break;
                }
                let key = self.point_key(&seg.x1, &CirclePoint::new(seg.y1.clone()));
                let next = &incidences[&key].right;
                if next.len() != 1 {
                    return Err(Error::NFold(format!(
                        "graph branches at ({}, {})",
                        key.0, key.1
                    )));
                }
                arc = next[0];
                offset = &end - self.segment(arc).y0;
            }
            sheets.push(Sheet::new(knots)?);
        }

        let monodromy = match self.domain {
            DomainKind::Interval => Permutation::identity(sheets.len()),
            DomainKind::Circle => {
                let one = Rational::one();
                let images = sheets
                    .iter()
                    .map(|s| {
                        let end = s.value_at(&one);
                        starts
                            .iter()
                            .position(|(y, _)| *y == end)
                            .ok_or_else(|| Error::NFold(format!("no sheet starts at {end}")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Permutation::new(images)?
            }
        };
        NFoldMap::new(self.domain, sheets, monodromy)
    }
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;
    use crate::rational::q;

    #[test]
    fn permutation_display() {
        assert_eq!(Permutation::identity(3).to_string(), "()");
        assert_eq!(Permutation::new(vec![1, 0]).unwrap().to_string(), "(1 2)");
        assert_eq!(
            Permutation::new(vec![1, 2, 0, 3]).unwrap().to_string(),
            "(1 2 3)"
        );
        assert!(Permutation::new(vec![0, 0]).is_err());
        assert!(Permutation::new(vec![2, 0]).is_err());
    }

    #[test]
    fn disjoint_constants_have_trivial_monodromy() {
        let g = two_constants().to_nfold().unwrap();
        assert_eq!(g.n(), 2);
        assert!(g.monodromy().is_identity());
    }

    #[test]
    fn half_turn_swaps_sheets() {
        let g = half_turn().to_nfold().unwrap();
        assert_eq!(g.monodromy(), &Permutation::new(vec![1, 0]).unwrap());
        assert_eq!(g.sheets()[0].value_at(&q(1, 1)), CirclePoint::new(q(1, 2)));
    }

    #[test]
    fn doubled_identity_does_not_swap() {
        let g = doubled_identity().to_nfold().unwrap();
        assert!(g.monodromy().is_identity());
    }

    #[test]
    fn identity_is_one_sheet() {
        let g = identity().to_nfold().unwrap();
        assert_eq!(g.n(), 1);
        assert!(g.monodromy().is_identity());
        assert_eq!(g.sheets()[0].lifted_at(&q(1, 1)), q(1, 1));
    }

    #[test]
    fn fork_is_rejected_by_component() {
        assert_eq!(
            fork().to_nfold(),
            Err(Error::NotUnionOfEquicardinal { component: 0 })
        );
    }

    #[test]
    fn nfold_validation() {
        let s = Sheet::constant(q(0, 1));
        let t = Sheet::constant(q(1, 2));
        assert!(NFoldMap::new(
            DomainKind::Circle,
            vec![s.clone(), t.clone()],
            Permutation::new(vec![1, 0]).unwrap()
        )
        .is_err());
        assert!(NFoldMap::new(
            DomainKind::Interval,
            vec![s.clone(), t.clone()],
            Permutation::new(vec![1, 0]).unwrap()
        )
        .is_err());
        assert!(NFoldMap::new(
            DomainKind::Circle,
            vec![s.clone()],
            Permutation::identity(2)
        )
        .is_err());
        assert!(Sheet::new(vec![(q(0, 1), q(0, 1)), (q(1, 2), q(0, 1))]).is_err());
        assert!(Sheet::new(vec![
            (q(0, 1), q(0, 1)),
            (q(0, 1), q(0, 1)),
            (q(1, 1), q(0, 1))
        ])
        .is_err());
    }

    #[test]
    fn coincident_sheets_give_multiplicity_two() {
        let g = NFoldMap::new(
            DomainKind::Circle,
            vec![Sheet::constant(q(0, 1)), Sheet::constant(q(0, 1))],
            Permutation::identity(2),
        )
        .unwrap();
        let sp = g.to_sp().unwrap();
        for x in [q(0, 1), q(1, 3), q(1, 1)] {
            let m = sp.evaluate_multiset(&x).unwrap();
            assert_eq!(m.entries(), &[(CirclePoint::zero(), 2)]);
        }
        assert_eq!(sp.graph().arcs().len(), 1);
    }

    #[test]
    fn swapping_sheets_never_collide() {
        let g = half_turn().to_nfold().unwrap();
        let sp = g.to_sp().unwrap();
        for x in [q(0, 1), q(1, 5), q(1, 2), q(1, 1)] {
            let m = sp.evaluate_multiset(&x).unwrap();
            let half = &x / &Rational::integer(2);
            let expected = MultisetConfiguration::new([
                (CirclePoint::new(half.clone()), 1),
                (CirclePoint::new(half + q(1, 2)), 1),
            ])
            .unwrap();
            assert_eq!(m, expected);
        }
    }

    #[test]
    fn crossing_sheets_get_a_vertex() {
        // 0 -> 1/2 and 1/2 -> 0 on the interval cross at (1/2, 1/4)
        let g = NFoldMap::new(
            DomainKind::Interval,
            vec![
                Sheet::new(vec![(q(0, 1), q(0, 1)), (q(1, 1), q(1, 2))]).unwrap(),
                Sheet::new(vec![(q(0, 1), q(1, 2)), (q(1, 1), q(0, 1))]).unwrap(),
            ],
            Permutation::identity(2),
        )
        .unwrap();
        let sp = g.to_sp().unwrap();
        assert!(sp.graph().validate().is_valid());
        let m = sp.evaluate_multiset(&q(1, 2)).unwrap();
        assert_eq!(m.entries(), &[(CirclePoint::new(q(1, 4)), 2)]);
        assert_eq!(sp.graph().arcs().len(), 4);
    }
}
