mod support;

use cnmaps::circle::circle_dist;
use cnmaps::complex::{build_cell_complex, classify_face, q_image_point, FaceClass, SimplexFace};
use cnmaps::plmap::UnionCheck;
use cnmaps::rational::q;
use cnmaps::weights::{balance_constraints, solve_positive, verify_certificate, WeightCertificate};
use cnmaps::{
    ball_formula_rhs, hausdorff_distance, in_hausdorff_ball, CirclePoint, Configuration,
    PLMultimap, Rational,
};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use support::*;

fn arb_config() -> impl Strategy<Value = Configuration> {
    proptest::collection::vec((0i64..48, 1i64..=24), 1..=5).prop_map(|pts| {
        Configuration::new(pts.into_iter().map(|(p, d)| CirclePoint::new(q(p % d, d)))).unwrap()
    })
}

fn arb_radius() -> impl Strategy<Value = Rational> {
    (1i64..=24, 1i64..=48).prop_map(|(p, d)| q(p, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn hausdorff_ball_matches_set_formula(x in arb_config(), y in arb_config(), eps in arb_radius()) {
        prop_assert_eq!(in_hausdorff_ball(&x, &eps, &y), ball_formula_rhs(&x, &eps, &y));
    }
}

proptest! {
    #[test]
    fn hausdorff_is_a_metric(a in arb_config(), b in arb_config(), c in arb_config()) {
        let ab = hausdorff_distance(&a, &b);
        prop_assert_eq!(ab.clone(), hausdorff_distance(&b, &a));
        prop_assert_eq!(ab.is_zero(), a == b);
        prop_assert!(ab <= &hausdorff_distance(&a, &c) + &hausdorff_distance(&c, &b));
        prop_assert!(ab <= q(1, 2));
    }

    #[test]
    fn circle_dist_is_a_metric(a in 0i64..60, b in 0i64..60, c in 0i64..60) {
        let (a, b, c) = (
            CirclePoint::new(q(a, 60)),
            CirclePoint::new(q(b, 60)),
            CirclePoint::new(q(c, 60)),
        );
        prop_assert_eq!(circle_dist(&a, &b), circle_dist(&b, &a));
        prop_assert!(circle_dist(&a, &b) <= &circle_dist(&a, &c) + &circle_dist(&c, &b));
        prop_assert!(circle_dist(&a, &b) <= q(1, 2));
    }

    #[test]
    fn random_maps_survive_json(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let f = if rng.gen_bool(0.5) { random_band(&mut rng) } else { random_merge_map(&mut rng) };
        prop_assert_eq!(PLMultimap::from_json(&f.to_json()).unwrap(), f);
    }
}

#[test]
fn random_bands_convert_faithfully() {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..40 {
        let f = random_band(&mut rng);
        assert!(f.validate().is_valid(), "{}", f.to_json());
        assert!(f.is_equicardinal());
        assert_eq!(f.union_check(), UnionCheck::Sufficient);
        let g = f.to_nfold().unwrap();
        let sp = g.to_sp().unwrap();
        for x in sample_xs(&f, &mut rng, 50) {
            let expected = f.evaluate(&x).unwrap();
            assert_eq!(g.evaluate(&x).unwrap(), expected);
            assert_eq!(sp.evaluate(&x).unwrap(), expected);
            assert_eq!(sp.evaluate_multiset(&x).unwrap().total(), f.n() as u64);
        }
    }
}

#[test]
fn random_merge_maps_weigh_and_convert() {
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..40 {
        let f = random_merge_map(&mut rng);
        assert!(f.validate().is_valid(), "{}", f.to_json());
        let cert = solve_positive(&balance_constraints(&f));
        assert!(verify_certificate(&f, &cert));
        let WeightCertificate::Feasible { weights, index } = cert else {
            panic!("merge maps are weightable: {}", f.to_json());
        };
        assert_eq!(index, f.n() as u64);
        let weighted = f.with_weights(Some(&weights)).unwrap();
        let sp = weighted.weighted_to_sp().unwrap();
        assert_eq!(sp.to_weighted(), weighted);
        for x in sample_xs(&f, &mut rng, 50) {
            assert_eq!(sp.evaluate(&x).unwrap(), f.evaluate(&x).unwrap());
        }
    }
}

#[test]
fn one_n_valued_sp_construction() {
    let mut rng = StdRng::seed_from_u64(3);
    let mut checked = 0;
    for _ in 0..60 {
        let f = random_merge_map(&mut rng);
        if !f.is_one_n_valued() {
            continue;
        }
        checked += 1;
        let sp = f.one_n_valued_to_sp().unwrap();
        for x in sample_xs(&f, &mut rng, 20) {
            assert_eq!(sp.evaluate(&x).unwrap(), f.evaluate(&x).unwrap());
            assert_eq!(sp.evaluate_multiset(&x).unwrap().total(), f.n() as u64);
        }
    }
    assert!(checked > 0);
}

/// Barycentric parameters proportional to reciprocals of distinct primes,
/// which keeps partial sums from colliding mod 1.
fn prime_params(rng: &mut impl Rng, len: usize) -> Vec<Rational> {
    const PRIMES: [i64; 20] = [
        2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
    ];
    let mut chosen: Vec<i64> = Vec::new();
    while chosen.len() < len {
        let p = PRIMES[rng.gen_range(0..PRIMES.len())];
        if !chosen.contains(&p) {
            chosen.push(p);
        }
    }
    let raw: Vec<Rational> = chosen.iter().map(|&p| q(1, p)).collect();
    let total: Rational = raw.iter().sum();
    raw.into_iter().map(|r| r / total.clone()).collect()
}

fn faces_of_dim(n: usize, k: usize) -> Vec<SimplexFace> {
    (1u64..1 << (n + 1))
        .filter(|m| m.count_ones() as usize == k + 1)
        .map(|m| SimplexFace::new(n, (0..=n).filter(|i| m >> i & 1 == 1).collect()).unwrap())
        .collect()
}

#[test]
fn face_classes_have_equal_images() {
    let mut rng = StdRng::seed_from_u64(5);
    for n in 1..=8 {
        for k in 0..=n {
            let faces = faces_of_dim(n, k);
            let (ext, non): (Vec<_>, Vec<_>) = faces
                .iter()
                .partition(|f| classify_face(f) == FaceClass::Extremal);
            for _ in 0..20 {
                let params = prime_params(&mut rng, k + 1);
                let image = |f: &SimplexFace| q_image_point(f, &params).unwrap();
                for class in [&ext, &non] {
                    if let Some(first) = class.first() {
                        let expected = image(first);
                        for f in class.iter() {
                            assert_eq!(image(f), expected, "n={n} face={f}");
                        }
                    }
                }
                if k >= 1 {
                    if let (Some(e), Some(m)) = (ext.first(), non.first()) {
                        assert_ne!(image(e), image(m), "n={n} k={k}");
                    }
                }
            }
        }
    }
}

#[test]
fn boundary_matches_closed_forms() {
    for n in 1..=12usize {
        let cc = build_cell_complex(n).unwrap();
        for k in 1..=n {
            let m = cc.boundary(k).to_i64_rows();
            for (j, cell) in cc.cells(k).iter().enumerate() {
                let col: Vec<i64> = m.iter().map(|r| r[j]).collect();
                let extremal = k == n || cell.kind == cnmaps::complex::CellKind::Extremal;
                let expected: Vec<i64> = if k == 1 {
                    vec![0]
                } else if k % 2 == 1 {
                    vec![0; cc.cells(k - 1).len()]
                } else if extremal {
                    vec![2, -1]
                } else {
                    vec![1, 0]
                };
                assert_eq!(col, expected, "n={n} k={k} cell={cell}");
            }
        }
    }
}
