//! A small dense two-phase simplex over exact rationals.
//!
//! Solves `minimize c.x subject to A x = b, x >= 0`. Bland's rule guarantees
//! termination; everything is exact, so there are no tolerances anywhere.

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal { x: Vec<Rational>, value: Rational },
    Infeasible,
    Unbounded,
}

struct Tableau {
    /// `rows[i]` holds the coefficients of constraint `i` followed by its rhs.
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    cols: usize,
}

impl Tableau {
    fn rhs(&self, i: usize) -> &Rational {
        &self.rows[i][self.cols]
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c].clone();
        for v in self.rows[r].iter_mut() {
            *v = &*v / &p;
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v = &*v - &(&f * pv);
                }
            }
        }
        self.basis[r] = c;
    }

    /// Reduced costs of `cost` relative to the current basis.
    fn reduced(&self, cost: &[Rational], allowed: usize) -> Vec<Rational> {
        let mut d: Vec<Rational> = cost[..allowed].to_vec();
        for (i, &b) in self.basis.iter().enumerate() {
            let cb = &cost[b];
            if cb.is_zero() {
                continue;
            }
            for (j, dj) in d.iter_mut().enumerate() {
                let a = &self.rows[i][j];
                if !a.is_zero() {
                    *dj = &*dj - &(cb * a);
                }
            }
        }
        d
    }

    /// Runs simplex iterations on columns `0..allowed`. Returns false if the
    /// objective is unbounded below.
    fn optimize(&mut self, cost: &[Rational], allowed: usize) -> bool {
        loop {
            let d = self.reduced(cost, allowed);
            // Bland: smallest index with negative reduced cost.
            let Some(c) = (0..allowed).find(|&j| d[j].is_negative()) else {
                return true;
            };
            let mut best: Option<(Rational, usize)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][c];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs(i) / a;
                let better = match &best {
                    None => true,
                    Some((r, bi)) => ratio < *r || (ratio == *r && self.basis[i] < self.basis[*bi]),
                };
                if better {
                    best = Some((ratio, i));
                }
            }
            match best {
                Some((_, r)) => self.pivot(r, c),
                None => return false,
            }
        }
    }
}

/// Minimizes `cost . x` subject to `a x = b`, `x >= 0`.
pub fn minimize(a: &[Vec<Rational>], b: &[Rational], cost: &[Rational]) -> LpOutcome {
    let m = a.len();
    let n = cost.len();
    debug_assert!(a.iter().all(|r| r.len() == n));
    debug_assert_eq!(b.len(), m);

    // Columns: n structural, m artificial, then rhs.
    let cols = n + m;
    let mut rows = Vec::with_capacity(m);
    for (i, (ai, bi)) in a.iter().zip(b).enumerate() {
        let flip = bi.is_negative();
        let mut row: Vec<Rational> = ai
            .iter()
            .map(|v| if flip { -v } else { v.clone() })
            .collect();
        row.extend((0..m).map(|k| {
            if k == i {
                Rational::one()
            } else {
                Rational::zero()
            }
        }));
        row.push(if flip { -bi } else { bi.clone() });
        rows.push(row);
    }
    let mut t = Tableau {
        rows,
        basis: (n..n + m).collect(),
        cols,
    };

    // Phase 1: drive the artificial variables to zero.
    let mut phase1 = vec![Rational::zero(); cols];
    for v in phase1.iter_mut().skip(n) {
        *v = Rational::one();
    }
    t.optimize(&phase1, cols);
    let infeasibility: Rational = t
        .basis
        .iter()
        .enumerate()
        .filter(|(_, &b)| b >= n)
        .map(|(i, _)| t.rhs(i).clone())
        .sum();
    if infeasibility.is_positive() {
        return LpOutcome::Infeasible;
    }

    // Pivot remaining (zero-valued) artificials out, dropping redundant rows.
    let mut i = 0;
    while i < t.rows.len() {
        if t.basis[i] >= n {
            match (0..n).find(|&j| !t.rows[i][j].is_zero()) {
                Some(j) => {
                    t.pivot(i, j);
                    i += 1;
                }
                None => {
                    t.rows.remove(i);
                    t.basis.remove(i);
                }
            }
        } else {
            i += 1;
        }
    }

    // Phase 2 on structural columns only.
    let mut full_cost = cost.to_vec();
    full_cost.extend((0..m).map(|_| Rational::zero()));
    if !t.optimize(&full_cost, n) {
        return LpOutcome::Unbounded;
    }
    let mut x = vec![Rational::zero(); n];
    for (i, &b) in t.basis.iter().enumerate() {
        if b < n {
            x[b] = t.rhs(i).clone();
        }
    }
    let value = x.iter().zip(cost).map(|(xi, ci)| xi * ci).sum();
    LpOutcome::Optimal { x, value }
}
