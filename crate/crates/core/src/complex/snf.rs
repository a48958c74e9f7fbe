//! Integer matrices and their Smith normal form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    #[serde(serialize_with = "serialize_entries")]
    data: Vec<Vec<BigInt>>,
}

fn serialize_entries<S: serde::Serializer>(data: &[Vec<BigInt>], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(data.len()))?;
    for row in data {
        let r: Vec<i64> = row
            .iter()
            .map(|v| i64::try_from(v).expect("boundary entries are small"))
            .collect();
        seq.serialize_element(&r)?;
    }
    seq.end()
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![vec![BigInt::zero(); cols]; rows],
        }
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        IntMatrix {
            rows: rows.len(),
            cols,
            data: rows
                .into_iter()
                .map(|r| r.into_iter().map(BigInt::from).collect())
                .collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i][j]
    }

    pub fn add_to(&mut self, i: usize, j: usize, v: i64) {
        self.data[i][j] += v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().flatten().all(Zero::is_zero)
    }

    pub fn to_i64_rows(&self) -> Vec<Vec<i64>> {
        self.data
            .iter()
            .map(|r| {
                r.iter()
                    .map(|v| i64::try_from(v).expect("entry fits in i64"))
                    .collect()
            })
            .collect()
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out.data[i][j] += a * &other.data[k][j];
                }
            }
        }
        out
    }
}

/// Nonzero diagonal entries `d_1 | d_2 | ...` of the Smith normal form, all
/// positive; their count is the rank.
pub fn smith_normal_form(m: &IntMatrix) -> Vec<BigInt> {
    let mut a = m.data.clone();
    let (rows, cols) = (m.rows, m.cols);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // Smallest nonzero entry of the remaining block becomes the pivot.
        let pivot = (t..rows)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| !a[i][j].is_zero())
            .min_by(|&(i, j), &(k, l)| a[i][j].abs().cmp(&a[k][l].abs()));
        let Some((pi, pj)) = pivot else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }

        let mut clean = true;
        for i in t + 1..rows {
            if a[i][t].is_zero() {
                continue;
            }
            let f = a[i][t].div_floor(&a[t][t]);
            let (top, rest) = a.split_at_mut(i);
            for (v, p) in rest[0][t..].iter_mut().zip(&top[t][t..]) {
                *v -= &f * p;
            }
            clean &= a[i][t].is_zero();
        }
        for j in t + 1..cols {
            if a[t][j].is_zero() {
                continue;
            }
            let f = a[t][j].div_floor(&a[t][t]);
            for row in a[t..].iter_mut() {
                let v = &f * &row[t];
                row[j] -= v;
            }
            clean &= a[t][j].is_zero();
        }
        if !clean {
            // A smaller remainder now exists; pick it up as the next pivot.
            continue;
        }

        // The pivot must divide the rest of the block; if not, fold the
        // offending row into row t and go again.
        let offender =
            (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a[i][j].is_multiple_of(&a[t][t])));
        if let Some(i) = offender {
            let (top, rest) = a.split_at_mut(i);
            for (v, p) in top[t][t..].iter_mut().zip(&rest[0][t..]) {
                *v += p;
            }
            continue;
        }
        diag.push(a[t][t].abs());
        t += 1;
    }
    diag
}

#[cfg(test)]
mod tests {
    use super::*;

    fn snf(rows: Vec<Vec<i64>>) -> Vec<i64> {
        smith_normal_form(&IntMatrix::from_rows(rows))
            .iter()
            .map(|v| i64::try_from(v).unwrap())
            .collect()
    }

    #[test]
    fn small_examples() {
        assert_eq!(snf(vec![vec![1, 0], vec![0, 1]]), vec![1, 1]);
        assert_eq!(snf(vec![vec![2, 0], vec![0, 0]]), vec![2]);
        assert_eq!(snf(vec![vec![2, 4], vec![6, 8]]), vec![2, 4]);
        assert_eq!(snf(vec![vec![2, 0], vec![0, 3]]), vec![1, 6]);
        assert_eq!(snf(vec![]), Vec::<i64>::new());
        assert_eq!(snf(vec![vec![0, 0, 0]]), Vec::<i64>::new());
    }

    #[test]
    fn determinant_and_divisibility() {
        let m = vec![vec![4, 7, 2], vec![3, 9, -5], vec![8, 1, 6]];
        let d = snf(m);
        // det = 4(54+5) - 7(18+40) + 2(3-72) = 236 - 406 - 138 = -308
        assert_eq!(d.iter().product::<i64>(), 308);
        assert!(d.windows(2).all(|w| w[1] % w[0] == 0));
    }

    #[test]
    fn product() {
        let a = IntMatrix::from_rows(vec![vec![1, 2], vec![3, 4]]);
        let b = IntMatrix::from_rows(vec![vec![0, 1], vec![1, 0]]);
        assert_eq!(
            a.mul(&b),
            IntMatrix::from_rows(vec![vec![2, 1], vec![4, 3]])
        );
    }

    proptest::proptest! {
        #[test]
        fn invariants_on_random_matrices(
            rows in proptest::collection::vec(proptest::collection::vec(-6i64..=6, 3), 1..5)
        ) {
            let m = IntMatrix::from_rows(rows.clone());
            let d = smith_normal_form(&m);
            proptest::prop_assert!(d.iter().all(|v| v.is_positive()));
            proptest::prop_assert!(d.windows(2).all(|w| w[1].is_multiple_of(&w[0])));
            // d_1 is the gcd of all entries.
            let g = rows.iter().flatten().fold(0i64, |acc, &v| acc.gcd(&v));
            if g == 0 {
                proptest::prop_assert!(d.is_empty());
            } else {
                proptest::prop_assert_eq!(d[0].clone(), BigInt::from(g));
            }
        }
    }
}
