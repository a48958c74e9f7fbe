//! The Hausdorff metric on finite subsets of the circle.

use crate::circle::{circle_dist, Configuration};
use crate::rational::Rational;

/// `max(sup_a inf_b d(a,b), sup_b inf_a d(a,b))` with the arc-length metric.
pub fn hausdorff_distance(a: &Configuration, b: &Configuration) -> Rational {
    let directed = |from: &Configuration, to: &Configuration| {
        from.points()
            .iter()
            .map(|p| to.dist_to(p))
            .max()
            .expect("nonempty configuration")
    };
    directed(a, b).max(directed(b, a))
}

/// Membership in the open Hausdorff ball of radius `eps` about `center`.
pub fn in_hausdorff_ball(center: &Configuration, eps: &Rational, y: &Configuration) -> bool {
    hausdorff_distance(center, y) < *eps
}

/// The same open ball described as a set condition: `y` lies inside the union
/// of the `eps`-balls about the center points, and meets each of them.
///
/// Deliberately avoids [`hausdorff_distance`] so the two can be compared.
pub fn ball_formula_rhs(center: &Configuration, eps: &Rational, y: &Configuration) -> bool {
    let covered = y
        .points()
        .iter()
        .all(|z| center.points().iter().any(|x| circle_dist(x, z) < *eps));
    let meets_each = center
        .points()
        .iter()
        .all(|x| y.points().iter().any(|z| circle_dist(x, z) < *eps));
    covered && meets_each
}
