//! Triangle actions on the free algebra and their post-Lie extensions.
//!
//! Three structures share one extension engine: the bracket-flattening
//! action with a distinguished letter set, the multiplicity-weighted
//! action, and its depth-corrected refinement. Each is defined by its
//! value on pairs of letters; everything else follows from the extension
//! rules, with closed forms available as fast paths and oracles.

mod closed;
mod tree;
mod triangle;

pub use closed::{tr_letter_ari, tr_letter_ihara};
pub use tree::{
    ari_tree_letter, ari_trees_letter, uri_multi_factor, uri_tree_letter, uri_two_factor, Tree,
};
pub use triangle::{StructureKind, Triangle};
