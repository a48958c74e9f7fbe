//! The cell structure of `C_n(S^1)` as a quotient of `Delta_n`.
//!
//! Faces of the same dimension are identified when they are both extremal
//! or both non-extremal, so every dimension `0 < k < n` carries two cells:
//! `sigma_k = <b_0..b_k>` and `rho_k = <b_0..b_{k-1}, b_n>`. All vertices
//! collapse to one cell and `Delta_n` itself is the single top cell.

use std::fmt;

use serde::Serialize;
use serde_json::{json, Value};

use super::face::{classify_face, FaceClass, SimplexFace};
use super::snf::IntMatrix;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CellKind {
    Vertex,
    NonExtremal,
    Extremal,
    Top,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CellId {
    pub dim: usize,
    pub kind: CellKind,
}

impl CellId {
    /// The face standing for this cell.
    pub fn representative(&self, n: usize) -> SimplexFace {
        let vertices = match self.kind {
            CellKind::Vertex => vec![0],
            CellKind::NonExtremal => (0..=self.dim).collect(),
            CellKind::Extremal => (0..self.dim).chain([n]).collect(),
            CellKind::Top => (0..=n).collect(),
        };
        SimplexFace::new(n, vertices).expect("representatives are valid faces")
    }
}

impl fmt::Display for CellId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            CellKind::Vertex => write!(f, "v"),
            CellKind::NonExtremal => write!(f, "sigma_{}", self.dim),
            CellKind::Extremal | CellKind::Top => write!(f, "rho_{}", self.dim),
        }
    }
}

/// The cell a face is identified into.
pub fn cell_of_face(face: &SimplexFace) -> CellId {
    let dim = face.dim();
    let kind = if dim == 0 {
        CellKind::Vertex
    } else if dim == face.n() {
        CellKind::Top
    } else {
        match classify_face(face) {
            FaceClass::Extremal => CellKind::Extremal,
            FaceClass::NonExtremal => CellKind::NonExtremal,
        }
    };
    CellId { dim, kind }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainComplex {
    n: usize,
    /// `cells[k]`: the k-cells, non-extremal before extremal.
    cells: Vec<Vec<CellId>>,
    /// `boundaries[k]`: rows indexed by `cells[k-1]`, columns by `cells[k]`.
    /// `boundaries[0]` is the empty map out of the 0-cells.
    boundaries: Vec<IntMatrix>,
}

/// Largest n for which all `2^{n+1}` faces are enumerated.
pub const MAX_N: usize = 20;

/// Builds the cellular chain complex by enumerating every face of `Delta_n`,
/// identifying it into its cell, and computing the boundary of each cell's
/// representative as the alternating sum of its codimension-one faces.
pub fn build_cell_complex(n: usize) -> Result<ChainComplex> {
    if n == 0 {
        return Err(Error::Invalid("n must be positive".into()));
    }
    if n > MAX_N {
        return Err(Error::BoundTooLarge {
            bound: n,
            limit: MAX_N,
        });
    }
    let mut cells: Vec<Vec<CellId>> = vec![Vec::new(); n + 1];
    for mask in 1..(1u64 << (n + 1)) {
        let c = cell_of_face(&SimplexFace::from_mask(n, mask));
        if !cells[c.dim].contains(&c) {
            cells[c.dim].push(c);
        }
    }
    for dim in cells.iter_mut() {
        dim.sort();
    }

    let mut boundaries = vec![IntMatrix::zeros(0, 1)];
    for k in 1..=n {
        let mut m = IntMatrix::zeros(cells[k - 1].len(), cells[k].len());
        for (col, cell) in cells[k].iter().enumerate() {
            let rep = cell.representative(n);
            for i in 0..rep.vertices().len() {
                let face = rep.omit(i).expect("k >= 1 faces have facets");
                let target = cell_of_face(&face);
                let row = cells[k - 1]
                    .iter()
                    .position(|c| *c == target)
                    .expect("every facet lands on a cell");
                m.add_to(row, col, if i % 2 == 0 { 1 } else { -1 });
            }
        }
        boundaries.push(m);
    }
    Ok(ChainComplex {
        n,
        cells,
        boundaries,
    })
}

impl ChainComplex {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cells(&self, k: usize) -> &[CellId] {
        &self.cells[k]
    }

    pub fn cell_counts(&self) -> Vec<usize> {
        self.cells.iter().map(Vec::len).collect()
    }

    /// `boundary(k)`: `C_k -> C_{k-1}`.
    pub fn boundary(&self, k: usize) -> &IntMatrix {
        &self.boundaries[k]
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.cells
            .iter()
            .enumerate()
            .map(|(k, c)| {
                if k % 2 == 0 {
                    c.len() as i64
                } else {
                    -(c.len() as i64)
                }
            })
            .sum()
    }

    /// `{"n", "counts", "cells", "boundaries": [{"dim", "rows", "cols", "matrix"}]}`.
    pub fn to_json(&self) -> Value {
        let names: Vec<Vec<String>> = self
            .cells
            .iter()
            .map(|d| d.iter().map(ToString::to_string).collect())
            .collect();
        let boundaries: Vec<Value> = (1..=self.n)
            .map(|k| {
                json!({
                    "dim": k,
                    "rows": names[k - 1],
                    "cols": names[k],
                    "matrix": self.boundaries[k].to_i64_rows(),
                })
            })
            .collect();
        json!({
            "n": self.n,
            "counts": self.cell_counts(),
            "cells": names,
            "boundaries": boundaries,
        })
    }
}
