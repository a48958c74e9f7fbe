//! Symmetric-product maps and the passage to and from weighted maps.

use serde::Serialize;

use super::PLMultimap;
use crate::circle::{Configuration, MultisetConfiguration};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// A map into `SP^n(S^1)`, stored as a weighted graph whose weights are the
/// multiplicities. Weights balance at every vertex and sum to `n` over every x.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SPMap {
    n: u64,
    #[serde(skip)]
    graph: PLMultimap,
}

impl SPMap {
    pub fn new(n: u64, graph: PLMultimap) -> Result<Self> {
        let weights = graph
            .weights()
            .map_err(|e| Error::SymmetricProduct(e.to_string()))?;
        let report = graph.validate();
        if !report.is_valid() {
            return Err(Error::SymmetricProduct(report.to_string()));
        }
        graph.check_balance(&weights)?;
        let index = graph.weighted_index()?;
        if index != n {
            return Err(Error::SymmetricProduct(format!(
                "multiplicities sum to {index}, expected {n}"
            )));
        }
        Ok(SPMap { n, graph })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn graph(&self) -> &PLMultimap {
        &self.graph
    }

    /// The underlying set, which is what the map means as a multimap.
    pub fn evaluate(&self, x: &Rational) -> Result<Configuration> {
        self.graph.evaluate(x)
    }

    pub fn evaluate_multiset(&self, x: &Rational) -> Result<MultisetConfiguration> {
        if x.is_negative() || *x > 1 {
            return Err(Error::OutOfDomain(x.clone()));
        }
        let at_end = *x == 1;
        let entries = self
            .graph
            .segments()
            .into_iter()
            .zip(self.graph.arcs())
            .filter(|(s, _)| {
                if at_end {
                    s.x1 == *x
                } else {
                    s.x0 <= *x && *x < s.x1
                }
            })
            .map(|(s, a)| (s.point_at(x), a.weight.unwrap_or(0)))
            .collect::<Vec<_>>();
        MultisetConfiguration::new(entries).map_err(|_| Error::EmptyFiber(x.clone()))
    }

    /// Multiplicities become weights; the graph is returned unchanged.
    pub fn to_weighted(&self) -> PLMultimap {
        self.graph.clone()
    }
}

impl PLMultimap {
    /// Total weight over x, required to be the same at every sample point.
    ///
    /// Samples avoid vertex x-values: the midpoint of every gap between them,
    /// plus the points `k/11` for `k = 1..=10` that are not vertex x-values.
    pub fn weighted_index(&self) -> Result<u64> {
        let weights = self.weights()?;
        let xs = self.vertex_xs();
        let mut samples: Vec<Rational> = xs
            .windows(2)
            .map(|w| (&w[0] + &w[1]) / Rational::integer(2))
            .collect();
        samples.extend(
            (1..=10)
                .map(|k| Rational::new(k, 11))
                .filter(|x| xs.binary_search(x).is_err()),
        );
        samples.sort();
        samples.dedup();

        let mut first: Option<(Rational, u64)> = None;
        for x in samples {
            let total = self.weighted_sum_at(&weights, &x);
            match &first {
                None => first = Some((x, total)),
                Some((x0, t0)) if *t0 != total => {
                    return Err(Error::InconsistentIndex {
                        x0: x0.clone(),
                        first: *t0,
                        x1: x,
                        second: total,
                    })
                }
                _ => {}
            }
        }
        match first {
            Some((_, 0)) | None => Err(Error::EmptyFiber(Rational::zero())),
            Some((_, t)) => Ok(t),
        }
    }

    /// Reinterprets balanced weights as multiplicities.
    pub fn weighted_to_sp(&self) -> Result<SPMap> {
        let weights = self.weights()?;
        self.check_balance(&weights)?;
        let index = self.weighted_index()?;
        SPMap::new(index, self.clone())
    }

    /// For maps whose fibers have 1 or `n` points: multiplicity `n` on single
    /// points and 1 on each of `n` points. Every valid map with `n <= 2` is of
    /// this kind.
    pub fn one_n_valued_to_sp(&self) -> Result<SPMap> {
        let report = self.validate();
        if !report.is_valid() {
            return Err(Error::Invalid(report.to_string()));
        }
        if !self.is_one_n_valued() {
            return Err(Error::Invalid(format!(
                "fiber sizes other than 1 and {} occur",
                self.n
            )));
        }
        let n = self.n as u64;
        let weights: Vec<u64> = self
            .segments()
            .iter()
            .map(|s| {
                let c = self.evaluate(&s.midpoint_x()).map_or(1, |c| c.len()) as u64;
                n / c
            })
            .collect();
        self.with_weights(Some(&weights))?.weighted_to_sp()
    }
}
