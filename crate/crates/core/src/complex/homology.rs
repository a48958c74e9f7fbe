//! Integral homology of `C_n(S^1)` from its cellular chain complex.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use super::cells::{build_cell_complex, ChainComplex};
use super::snf::smith_normal_form;
use crate::error::Result;

/// `Z^rank` plus the cyclic torsion summands, each dividing the next.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomologyGroup {
    pub rank: usize,
    #[serde(serialize_with = "serialize_torsion")]
    pub torsion: Vec<BigInt>,
}

fn serialize_torsion<S: serde::Serializer>(t: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(t.iter().map(ToString::to_string))
}

impl HomologyGroup {
    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }

    pub fn is_integers(&self) -> bool {
        self.rank == 1 && self.torsion.is_empty()
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// `H_0, ..., H_n` of a chain complex.
pub fn homology_of(cc: &ChainComplex) -> Vec<HomologyGroup> {
    let n = cc.n();
    // snfs[k]: invariant factors of the boundary C_k -> C_{k-1}.
    let snfs: Vec<Vec<BigInt>> = (0..=n).map(|k| smith_normal_form(cc.boundary(k))).collect();
    (0..=n)
        .map(|k| {
            let out_rank = snfs[k].len();
            let (in_rank, torsion) = match snfs.get(k + 1) {
                Some(d) => (d.len(), d.iter().filter(|v| !v.is_one()).cloned().collect()),
                None => (0, Vec::new()),
            };
            HomologyGroup {
                rank: cc.cells(k).len() - out_rank - in_rank,
                torsion,
            }
        })
        .collect()
}

pub fn homology(n: usize) -> Result<Vec<HomologyGroup>> {
    Ok(homology_of(&build_cell_complex(n)?))
}

/// One line per dimension: `k: rank, [torsion]`.
pub fn format_homology_table(groups: &[HomologyGroup]) -> String {
    let mut out = String::from("k: rank, torsion\n");
    for (k, g) in groups.iter().enumerate() {
        let t: Vec<String> = g.torsion.iter().map(ToString::to_string).collect();
        out.push_str(&format!("{k}: {}, [{}]\n", g.rank, t.join(", ")));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ranks(n: usize) -> Vec<usize> {
        let h = homology(n).unwrap();
        assert!(h.iter().all(|g| g.torsion.is_empty()));
        h.iter().map(|g| g.rank).collect()
    }

    #[test]
    fn small_cases() {
        assert_eq!(ranks(1), vec![1, 1]);
        assert_eq!(ranks(2), vec![1, 1, 0]);
        assert_eq!(ranks(3), vec![1, 0, 0, 1]);
        assert_eq!(ranks(4), vec![1, 0, 0, 1, 0]);
    }

    #[test]
    fn sphere_pattern_up_to_12() {
        for n in 3..=12 {
            let top = if n % 2 == 1 { n } else { n - 1 };
            let expected: Vec<usize> = (0..=n).map(|k| usize::from(k == 0 || k == top)).collect();
            assert_eq!(ranks(n), expected, "n={n}");
        }
    }

    #[test]
    fn euler_characteristic_matches() {
        for n in 1..=12 {
            let cc = build_cell_complex(n).unwrap();
            let chi: i64 = homology_of(&cc)
                .iter()
                .enumerate()
                .map(|(k, g)| {
                    if k % 2 == 0 {
                        g.rank as i64
                    } else {
                        -(g.rank as i64)
                    }
                })
                .sum();
            assert_eq!(chi, cc.euler_characteristic(), "n={n}");
            // every case is a homology sphere of odd dimension
            assert_eq!(chi, 0, "n={n}");
        }
    }

    #[test]
    fn table_format() {
        let t = format_homology_table(&homology(3).unwrap());
        assert_eq!(
            t,
            "k: rank, torsion\n0: 1, []\n1: 0, []\n2: 0, []\n3: 1, []\n"
        );
        let g = HomologyGroup {
            rank: 2,
            torsion: vec![BigInt::from(2)],
        };
        assert_eq!(g.to_string(), "Z^2 + Z/2");
    }
}
