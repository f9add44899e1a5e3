//! Fourier normal ordering at desk scale: trigonometric paths with rational
//! frequencies, exact skeleton integrals, measure splitting into permutation
//! sectors, the character `χ^t` and the rough path `J^{ts}` built two ways.

mod checks;
mod measure;
mod path;
mod rough;
mod skeleton;

pub use checks::{
    check_chen, check_converse, check_closed_form_constant, check_sector_relabelling, check_j_equals_j_prime, check_product_splitting,
    check_reassembly, check_symmetry_invariance, phi_multiplicativity_check,
};
pub use measure::{sorting_permutations, split_measure, split_measure_with, AtomMeasure, FourierAtom, SectorSplit, TiePolicy};
pub use path::TrigPath;
pub use rough::{Fno, RoughPathValue};
pub use skeleton::{skeleton_closed_form, labelled_antipode, skeleton_atom, skeleton_lin, skeleton_tree};
