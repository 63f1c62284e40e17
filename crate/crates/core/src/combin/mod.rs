//! Tableau combinatorics: quivers, multipartitions, standard tableaux,
//! residues, degrees, positivity and the content scalars of the lift.

mod content;
mod degree;
mod partition;
mod perm;
mod quiver;
mod tableau;

pub use content::ContentRule;
pub use degree::{
    block_of, blocks, codegree, copositive_exponents, degree, graded_dim, graded_dim_algebra,
    is_positive, node_sets, positive_exponents, NodeSets,
};
pub use partition::{multipartitions, partitions, Multipartition, Node, ShapeError};
pub use perm::{Perm, SymGroup};
pub use quiver::{QuiverData, QuiverError, Residue, RootVector};
pub use tableau::{pair_dominates, standard_tableaux, std_of_residue, StandardTableau};
