//! Faces of the n-simplex with vertices `b_k = e_1 + ... + e_k`, and the
//! quotient map from the simplex onto `C_n(S^1)`.

use std::fmt;

use crate::circle::{CirclePoint, Configuration};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// A face `<b_{i_0}, ..., b_{i_d}>` of `Delta_n`, vertex indices increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimplexFace {
    n: usize,
    vertices: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FaceClass {
    Extremal,
    NonExtremal,
}

impl SimplexFace {
    pub fn new(n: usize, vertices: Vec<usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Invalid("n must be positive".into()));
        }
        if vertices.is_empty() {
            return Err(Error::Invalid("a face needs at least one vertex".into()));
        }
        if vertices.windows(2).any(|w| w[0] >= w[1]) || vertices[vertices.len() - 1] > n {
            return Err(Error::Invalid(format!(
                "face vertices {vertices:?} must increase within 0..={n}"
            )));
        }
        Ok(SimplexFace { n, vertices })
    }

    /// The face whose vertex set is the bits of `mask`.
    pub(crate) fn from_mask(n: usize, mask: u64) -> Self {
        let vertices = (0..=n).filter(|i| mask >> i & 1 == 1).collect();
        SimplexFace { n, vertices }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    /// The codimension-one face omitting the `i`-th vertex.
    pub fn omit(&self, i: usize) -> Option<SimplexFace> {
        if self.vertices.len() < 2 || i >= self.vertices.len() {
            return None;
        }
        let mut vertices = self.vertices.clone();
        vertices.remove(i);
        Some(SimplexFace {
            n: self.n,
            vertices,
        })
    }
}

impl fmt::Display for SimplexFace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.vertices.iter().map(|v| format!("b{v}")).collect();
        write!(f, "<{}>", parts.join(","))
    }
}

/// Extremal faces contain both `b_0` and `b_n`.
pub fn classify_face(face: &SimplexFace) -> FaceClass {
    let v = face.vertices();
    if v[0] == 0 && v[v.len() - 1] == face.n() {
        FaceClass::Extremal
    } else {
        FaceClass::NonExtremal
    }
}

/// Image of the point with barycentric coordinates `params` on `face`.
///
/// With `s_{i_m}` the weight on `b_{i_m}`, the `j`-th coordinate of the point
/// in `Delta_n` is the sum of weights on vertices `b_i` with `i >= j`; the
/// image is the set of those `n` coordinates reduced mod 1.
pub fn q_image_point(face: &SimplexFace, params: &[Rational]) -> Result<Configuration> {
    if params.len() != face.vertices().len() {
        return Err(Error::Barycentric(format!(
            "{} parameters for a face with {} vertices",
            params.len(),
            face.vertices().len()
        )));
    }
    if params.iter().any(Rational::is_negative) {
        return Err(Error::Barycentric("parameters must be nonnegative".into()));
    }
    let total: Rational = params.iter().sum();
    if total != 1 {
        return Err(Error::Barycentric(format!(
            "parameters sum to {total}, not 1"
        )));
    }

    // suffix[m] = sum of params[m..]
    let mut suffix = vec![Rational::zero(); params.len() + 1];
    for m in (0..params.len()).rev() {
        suffix[m] = &suffix[m + 1] + &params[m];
    }
    let vs = face.vertices();
    let points = (1..=face.n()).map(|j| {
        let m = vs.partition_point(|&i| i < j);
        CirclePoint::new(suffix[m].clone())
    });
    Configuration::new(points)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    fn face(n: usize, v: &[usize]) -> SimplexFace {
        SimplexFace::new(n, v.to_vec()).unwrap()
    }

    fn config(vals: &[Rational]) -> Configuration {
        Configuration::from_rationals(vals.iter().cloned()).unwrap()
    }

    #[test]
    fn classification() {
        assert_eq!(classify_face(&face(5, &[0, 1, 5])), FaceClass::Extremal);
        assert_eq!(classify_face(&face(5, &[0, 1, 2])), FaceClass::NonExtremal);
        assert_eq!(classify_face(&face(5, &[1, 5])), FaceClass::NonExtremal);
        assert_eq!(classify_face(&face(1, &[0, 1])), FaceClass::Extremal);
    }

    #[test]
    fn edge_images() {
        let alpha = q_image_point(&face(4, &[0, 1]), &[q(1, 2), q(1, 2)]).unwrap();
        assert_eq!(alpha, config(&[q(0, 1), q(1, 2)]));
        let beta = q_image_point(&face(4, &[0, 4]), &[q(2, 3), q(1, 3)]).unwrap();
        assert_eq!(beta, config(&[q(1, 3)]));
    }

    #[test]
    fn vertices_map_to_zero() {
        for n in 1..=12 {
            for j in 0..=n {
                let c = q_image_point(&face(n, &[j]), &[q(1, 1)]).unwrap();
                assert_eq!(c, config(&[q(0, 1)]), "n={n} j={j}");
            }
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(SimplexFace::new(3, vec![]).is_err());
        assert!(SimplexFace::new(3, vec![2, 1]).is_err());
        assert!(SimplexFace::new(3, vec![0, 4]).is_err());
        let f = face(3, &[0, 1]);
        assert!(matches!(
            q_image_point(&f, &[q(1, 2), q(1, 3)]),
            Err(Error::Barycentric(_))
        ));
        assert!(matches!(
            q_image_point(&f, &[q(1, 1)]),
            Err(Error::Barycentric(_))
        ));
        assert!(matches!(
            q_image_point(&f, &[q(3, 2), q(-1, 2)]),
            Err(Error::Barycentric(_))
        ));
    }

    #[test]
    fn omit_faces() {
        let f = face(3, &[0, 2, 3]);
        assert_eq!(f.omit(1), Some(face(3, &[0, 3])));
        assert_eq!(face(3, &[2]).omit(0), None);
        assert_eq!(f.to_string(), "<b0,b2,b3>");
    }
}
