//! Positive integer weights on the arcs of a piecewise-linear multimap.
//!
//! A weighting is admissible when, at every interior graph point, the total
//! weight arriving from the left equals the total weight leaving to the right.
//! These balance equations form a homogeneous integer system, so a strictly
//! positive rational solution exists iff one with every weight `>= 1` does,
//! and clearing denominators turns it into natural-number weights.
//!
//! When no positive solution exists, [`solve_positive`] returns a nonnegative
//! combination of balance equations that reads `sum c_j w_j = 0` with some
//! `c_j > 0`, which forces those weights to zero.

mod simplex;

pub use simplex::{minimize, LpOutcome};

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::circle::CirclePoint;
use crate::plmap::PLMultimap;
use crate::rational::Rational;

/// `sum_{left} w = sum_{right} w` at the graph point `(x, y)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BalanceEquation {
    pub x: Rational,
    pub y: CirclePoint,
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

impl BalanceEquation {
    /// `+1` per left arc, `-1` per right arc.
    pub fn coefficients(&self, num_vars: usize) -> Vec<i64> {
        let mut c = vec![0; num_vars];
        for &a in &self.left {
            c[a] += 1;
        }
        for &a in &self.right {
            c[a] -= 1;
        }
        c
    }
}

impl fmt::Display for BalanceEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |arcs: &[usize]| {
            arcs.iter()
                .map(|a| format!("w{a}"))
                .collect::<Vec<_>>()
                .join(" + ")
        };
        write!(
            f,
            "{} = {} at ({}, {})",
            side(&self.left),
            side(&self.right),
            self.x,
            self.y
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BalanceSystem {
    pub num_vars: usize,
    pub equations: Vec<BalanceEquation>,
    /// Arcs over a fixed generic x; their weights sum to the weighted index.
    pub index_arcs: Vec<usize>,
}

impl BalanceSystem {
    pub fn matrix(&self) -> Vec<Vec<i64>> {
        self.equations
            .iter()
            .map(|e| e.coefficients(self.num_vars))
            .collect()
    }

    pub fn is_satisfied_by(&self, weights: &[u64]) -> bool {
        weights.len() == self.num_vars
            && self.matrix().iter().all(|row| {
                row.iter()
                    .zip(weights)
                    .map(|(&c, &w)| c as i128 * w as i128)
                    .sum::<i128>()
                    == 0
            })
    }

    pub fn index_of(&self, weights: &[u64]) -> u64 {
        self.index_arcs.iter().map(|&a| weights[a]).sum()
    }
}

/// One balance equation with its multiplier in an infeasibility witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessTerm {
    pub equation: usize,
    pub x: Rational,
    pub y: CirclePoint,
    pub relation: String,
    pub multiplier: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WeightCertificate {
    Feasible {
        weights: Vec<u64>,
        index: u64,
    },
    Infeasible {
        terms: Vec<WitnessTerm>,
        /// `sum_i multiplier_i * equation_i`, one coefficient per arc; all
        /// nonnegative and not all zero.
        combination: Vec<BigInt>,
        /// Arcs whose weight the combination forces to zero.
        forced_zero: Vec<usize>,
    },
}

impl WeightCertificate {
    pub fn is_feasible(&self) -> bool {
        matches!(self, WeightCertificate::Feasible { .. })
    }

    /// `{"status":"feasible","weights":{...},"index":k}` or
    /// `{"status":"infeasible","witness":[...], ...}`.
    pub fn to_json(&self) -> Value {
        match self {
            WeightCertificate::Feasible { weights, index } => {
                let w: serde_json::Map<String, Value> = weights
                    .iter()
                    .enumerate()
                    .map(|(i, w)| (i.to_string(), json!(w)))
                    .collect();
                json!({ "status": "feasible", "weights": w, "index": index })
            }
            WeightCertificate::Infeasible {
                terms,
                combination,
                forced_zero,
            } => {
                let witness: Vec<Value> = terms
                    .iter()
                    .map(|t| {
                        json!({
                            "equation": t.relation,
                            "vertex": [t.x.to_string(), t.y.to_string()],
                            "multiplier": t.multiplier.to_string(),
                        })
                    })
                    .collect();
                let derived: Vec<String> = combination
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(j, c)| {
                        if c.is_one() {
                            format!("w{j}")
                        } else {
                            format!("{c}*w{j}")
                        }
                    })
                    .collect();
                json!({
                    "status": "infeasible",
                    "witness": witness,
                    "derived": format!("{} = 0", derived.join(" + ")),
                    "forced_zero": forced_zero,
                })
            }
        }
    }
}

/// One equation per interior graph point (and per seam point on circle
/// domains); equations with all coefficients cancelling are dropped.
pub fn balance_constraints(f: &PLMultimap) -> BalanceSystem {
    let num_vars = f.arcs().len();
    let equations = f
        .balance_points()
        .into_iter()
        .map(|((x, y), inc)| BalanceEquation {
            x,
            y,
            left: inc.left,
            right: inc.right,
        })
        .filter(|e| e.coefficients(num_vars).iter().any(|&c| c != 0))
        .collect();

    let xs = f.vertex_xs();
    let index_arcs = match xs.windows(2).next() {
        Some(w) => {
            let probe = (&w[0] + &w[1]) / Rational::integer(2);
            f.arcs()
                .iter()
                .enumerate()
                .filter(|(_, a)| f.vertices()[a.from].x < probe && probe < f.vertices()[a.to].x)
                .map(|(i, _)| i)
                .collect()
        }
        None => Vec::new(),
    };
    BalanceSystem {
        num_vars,
        equations,
        index_arcs,
    }
}

fn lcm_of_denominators(values: &[Rational]) -> BigInt {
    values
        .iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

fn scale_to_integers(values: &[Rational]) -> Vec<BigInt> {
    let l = Rational::from_bigint(lcm_of_denominators(values));
    let ints: Vec<BigInt> = values.iter().map(|v| (v * &l).numer().clone()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if g.is_zero() || g.is_one() {
        ints
    } else {
        ints.into_iter().map(|v| v / &g).collect()
    }
}

/// Decides whether the system has a solution with every weight positive.
///
/// Feasible systems get the integer weights obtained from the rational
/// solution of smallest total weight, scaled to integers and divided by
/// their gcd. Infeasible systems get a witness combination.
pub fn solve_positive(sys: &BalanceSystem) -> WeightCertificate {
    let k = sys.num_vars;
    let a = sys.matrix();
    let ar: Vec<Vec<Rational>> = a
        .iter()
        .map(|row| row.iter().map(|&c| Rational::integer(c)).collect())
        .collect();

    // w = 1 + u with u >= 0:  A u = -A 1.
    let b: Vec<Rational> = a
        .iter()
        .map(|row| Rational::integer(-row.iter().sum::<i64>()))
        .collect();
    let cost = vec![Rational::one(); k];
    match minimize(&ar, &b, &cost) {
        LpOutcome::Optimal { x, .. } => {
            let w: Vec<Rational> = x.into_iter().map(|u| u + Rational::one()).collect();
            let weights: Vec<u64> = scale_to_integers(&w)
                .into_iter()
                .map(|v| v.to_u64().expect("weights fit in u64"))
                .collect();
            let index = sys.index_of(&weights);
            WeightCertificate::Feasible { weights, index }
        }
        LpOutcome::Unbounded => unreachable!("total weight is bounded below"),
        LpOutcome::Infeasible => infeasibility_witness(sys, &a),
    }
}

/// Finds multipliers `y` with `c = y^T A >= 0`, `sum c = 1`. By Stiemke's
/// alternative such `y` exists exactly when no positive solution does.
/// Small multipliers on early equations are preferred, for readability.
fn infeasibility_witness(sys: &BalanceSystem, a: &[Vec<i64>]) -> WeightCertificate {
    let m = a.len();
    let k = sys.num_vars;
    // Variables: y+ (m), y- (m), c (k).
    let nv = 2 * m + k;
    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(k + 1);
    for j in 0..k {
        let mut row = vec![Rational::zero(); nv];
        for i in 0..m {
            row[i] = Rational::integer(a[i][j]);
            row[m + i] = Rational::integer(-a[i][j]);
        }
        row[2 * m + j] = Rational::integer(-1);
        rows.push(row);
    }
    let mut total = vec![Rational::zero(); nv];
    for v in total.iter_mut().skip(2 * m) {
        *v = Rational::one();
    }
    rows.push(total);
    let mut b = vec![Rational::zero(); k];
    b.push(Rational::one());
    let mut cost = vec![Rational::zero(); nv];
    for i in 0..m {
        let ci = Rational::integer((m + 1 + i) as i64);
        cost[i] = ci.clone();
        cost[m + i] = ci;
    }

    let LpOutcome::Optimal { x, .. } = minimize(&rows, &b, &cost) else {
        unreachable!("a system without positive solutions has a nonnegative combination")
    };
    let y: Vec<Rational> = (0..m).map(|i| &x[i] - &x[m + i]).collect();
    let y = scale_to_integers(&y);
    let combination: Vec<BigInt> = (0..k)
        .map(|j| (0..m).map(|i| &y[i] * BigInt::from(a[i][j])).sum())
        .collect();
    let terms = y
        .iter()
        .enumerate()
        .filter(|(_, v)| !v.is_zero())
        .map(|(i, v)| {
            let e = &sys.equations[i];
            WitnessTerm {
                equation: i,
                x: e.x.clone(),
                y: e.y.clone(),
                relation: e.to_string(),
                multiplier: v.clone(),
            }
        })
        .collect();
    let forced_zero = combination
        .iter()
        .enumerate()
        .filter(|(_, c)| c.is_positive())
        .map(|(j, _)| j)
        .collect();
    WeightCertificate::Infeasible {
        terms,
        combination,
        forced_zero,
    }
}

/// Re-checks a certificate against the map from scratch.
///
/// Feasible: every weight is at least 1, every balance equation holds
/// exactly, and the weighted sum over x is the stated index at every sample.
/// Infeasible: the witness multipliers recombine to the stated nonnegative,
/// nonzero combination.
pub fn verify_certificate(f: &PLMultimap, cert: &WeightCertificate) -> bool {
    let sys = balance_constraints(f);
    match cert {
        WeightCertificate::Feasible { weights, index } => {
            if weights.len() != f.arcs().len() || weights.contains(&0) {
                return false;
            }
            if !sys.is_satisfied_by(weights) || f.check_balance(weights).is_err() {
                return false;
            }
            match f.with_weights(Some(weights)) {
                Ok(g) => g.weighted_index().ok() == Some(*index),
                Err(_) => false,
            }
        }
        WeightCertificate::Infeasible {
            terms,
            combination,
            forced_zero,
        } => {
            if combination.len() != sys.num_vars {
                return false;
            }
            let a = sys.matrix();
            let mut c = vec![BigInt::zero(); sys.num_vars];
            for t in terms {
                let Some(row) = a.get(t.equation) else {
                    return false;
                };
                for (cj, &aij) in c.iter_mut().zip(row) {
                    *cj += &t.multiplier * BigInt::from(aij);
                }
            }
            let positive: Vec<usize> = c
                .iter()
                .enumerate()
                .filter(|(_, v)| v.is_positive())
                .map(|(j, _)| j)
                .collect();
            c == *combination
                && c.iter().all(|v| !v.is_negative())
                && !positive.is_empty()
                && positive == *forced_zero
        }
    }
}

/// Solves and, when feasible, returns the weighted map.
pub fn weigh(f: &PLMultimap) -> (WeightCertificate, Option<PLMultimap>) {
    let cert = solve_positive(&balance_constraints(f));
    let weighted = match &cert {
        WeightCertificate::Feasible { weights, .. } => f.with_weights(Some(weights)).ok(),
        WeightCertificate::Infeasible { .. } => None,
    };
    (cert, weighted)
}
