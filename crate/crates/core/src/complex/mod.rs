//! `C_n(S^1)` as a cell complex: faces, cells, boundary maps, homology and
//! the fundamental group.

mod cells;
mod face;
mod homology;
mod presentation;
mod snf;

pub use cells::{build_cell_complex, cell_of_face, CellId, CellKind, ChainComplex, MAX_N};
pub use face::{classify_face, q_image_point, FaceClass, SimplexFace};
pub use homology::{format_homology_table, homology, homology_of, HomologyGroup};
pub use presentation::{
    cyclic_reduce, free_reduce, invert, pi1_presentation, simplify_presentation, GroupPresentation,
    Letter, Simplified, Word,
};
pub use snf::{smith_normal_form, IntMatrix};
