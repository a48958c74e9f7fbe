//! Shared helpers for integration tests: fixture loading, random valid maps,
//! and a brute-force weight oracle.
#![allow(dead_code)]

use std::path::PathBuf;

use cnmaps::rational::q;
use cnmaps::weights::BalanceSystem;
use cnmaps::{CirclePoint, Configuration, DomainKind, PLMultimap, Rational};
use rand::Rng;

pub const FIXTURES: [&str; 6] = [
    "fork",
    "two_loops",
    "usc_not_lsc",
    "union123",
    "half_turn",
    "doubled_identity",
];

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(format!("{name}.json"))
}

pub fn fixture_text(name: &str) -> String {
    std::fs::read_to_string(fixture_path(name)).expect("fixture exists")
}

pub fn fixture(name: &str) -> PLMultimap {
    PLMultimap::from_json(&fixture_text(name)).expect("fixture parses")
}

/// A rational `p/q` in `[0, 1)` with `q <= max_den`.
pub fn unit_rational(rng: &mut impl Rng, max_den: i64) -> Rational {
    let d = rng.gen_range(1..=max_den);
    q(rng.gen_range(0..d), d)
}

/// Same, but strictly inside `(0, 1)`.
pub fn interior_rational(rng: &mut impl Rng, max_den: i64) -> Rational {
    let d = rng.gen_range(2..=max_den);
    q(rng.gen_range(1..d), d)
}

pub fn random_config(rng: &mut impl Rng, max_len: usize) -> Configuration {
    let len = rng.gen_range(1..=max_len);
    Configuration::new((0..len).map(|_| CirclePoint::new(unit_rational(rng, 24))))
        .expect("nonempty")
}

/// `k` distinct x-values strictly inside `(0, 1)`, sorted.
pub fn interior_xs(rng: &mut impl Rng, k: usize) -> Vec<Rational> {
    let mut xs: Vec<Rational> = Vec::new();
    while xs.len() < k {
        let x = interior_rational(rng, 12);
        if !xs.contains(&x) {
            xs.push(x);
        }
    }
    xs.sort();
    xs
}

/// `x -> {g(x) + i/n : i < n}` for a random piecewise-linear `g`. On circle
/// domains `g(1) - g(0)` is a multiple of `1/n`, so the strands close up
/// with a random cyclic monodromy.
pub fn random_band(rng: &mut impl Rng) -> PLMultimap {
    let n = rng.gen_range(1..=4i64);
    let domain = if rng.gen_bool(0.5) {
        DomainKind::Circle
    } else {
        DomainKind::Interval
    };
    let knots = rng.gen_range(0..=3);
    let mut xs = vec![Rational::zero()];
    xs.extend(interior_xs(rng, knots));
    xs.push(Rational::one());
    let mut g: Vec<Rational> = (0..xs.len())
        .map(|_| q(rng.gen_range(-12..12), rng.gen_range(1..=12)))
        .collect();
    if domain == DomainKind::Circle {
        let shift = q(rng.gen_range(-n..2 * n), n);
        let last = g.len() - 1;
        g[last] = &g[0] + &shift;
    }
    let strands: Vec<Vec<(Rational, Rational)>> = (0..n)
        .map(|i| {
            xs.iter()
                .zip(&g)
                .map(|(x, y)| (x.clone(), y + &q(i, n)))
                .collect()
        })
        .collect();
    PLMultimap::from_strands(n as usize, domain, &strands).expect("well-formed strands")
}

/// Stacked horizontal bands, each holding either one strand or two strands
/// that merge, run together, and split again. Strands end at the heights
/// they start from, so the same graph is valid on both domain kinds.
pub fn random_merge_map(rng: &mut impl Rng) -> PLMultimap {
    let bands = rng.gen_range(1..=2i64);
    let domain = if rng.gen_bool(0.5) {
        DomainKind::Circle
    } else {
        DomainKind::Interval
    };
    let mut strands = Vec::new();
    let mut n = 0;
    for j in 0..bands {
        let base = q(j, bands);
        let h = q(1, bands);
        let height = |r: Rational| &base + &(&h * &r);
        if rng.gen_bool(0.3) {
            let mid = interior_xs(rng, 1).remove(0);
            let a = height(interior_rational(rng, 12));
            let b = height(interior_rational(rng, 12));
            strands.push(vec![
                (Rational::zero(), a.clone()),
                (mid, b),
                (Rational::one(), a),
            ]);
            n += 1;
        } else {
            let xs = interior_xs(rng, 2);
            let (mut a, mut b) = (interior_rational(rng, 12), interior_rational(rng, 12));
            while a == b {
                b = interior_rational(rng, 12);
            }
            if a > b {
                std::mem::swap(&mut a, &mut b);
            }
            let (a, b) = (height(a), height(b));
            let c = height(interior_rational(rng, 12));
            let d = height(interior_rational(rng, 12));
            for start in [a, b] {
                strands.push(vec![
                    (Rational::zero(), start.clone()),
                    (xs[0].clone(), c.clone()),
                    (xs[1].clone(), d.clone()),
                    (Rational::one(), start),
                ]);
            }
            n += 2;
        }
    }
    PLMultimap::from_strands(n, domain, &strands).expect("well-formed strands")
}

/// Vertex x-values, gap midpoints and random rationals, `count` in total.
pub fn sample_xs(f: &PLMultimap, rng: &mut impl Rng, count: usize) -> Vec<Rational> {
    let mut xs = f.sample_xs();
    xs.truncate(count);
    while xs.len() < count {
        let d = rng.gen_range(1..=97);
        xs.push(q(rng.gen_range(0..=d), d));
    }
    xs
}

/// Exhaustive search of `{1..=max}^k` for a balanced weighting.
pub fn brute_force_weights(sys: &BalanceSystem, max: u64) -> Option<Vec<u64>> {
    let a = sys.matrix();
    let k = sys.num_vars;
    let last: Vec<usize> = a
        .iter()
        .map(|row| row.iter().rposition(|&c| c != 0).unwrap_or(0))
        .collect();
    let mut w = Vec::with_capacity(k);
    fn go(a: &[Vec<i64>], last: &[usize], w: &mut Vec<u64>, k: usize, max: u64) -> bool {
        let j = w.len();
        if j == k {
            return true;
        }
        for v in 1..=max {
            w.push(v);
            let ok = a.iter().zip(last).all(|(row, &l)| {
                l != j
                    || row
                        .iter()
                        .zip(w.iter())
                        .map(|(&c, &x)| c * x as i64)
                        .sum::<i64>()
                        == 0
            });
            if ok && go(a, last, w, k, max) {
                return true;
            }
            w.pop();
        }
        false
    }
    go(&a, &last, &mut w, k, max).then_some(w)
}
