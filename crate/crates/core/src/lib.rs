//! Interval decomposition of finite coloured partial orders.
//!
//! Posets are decomposed along maximal chains of intervals into composition
//! sequences of sums over indecomposable arities. The resulting
//! decomposition trees support structured embeddings that lift back to
//! poset embeddings, tree ranks, class checks and quasi-order experiments.

pub mod bounds;
pub mod canonical;
pub mod classify;
pub mod coloured;
pub mod composition;
pub mod dectree;
pub mod embed;
pub mod enumerate;
pub mod error;
pub mod format;
pub mod interval;
pub mod poset;
pub mod quasi;
pub mod wqo;

pub use bounds::Bounds;
pub use canonical::{canonical, Canonical};
pub use classify::{
    class_check, indecomposable_subsets, is_n_free, pathological_prefix_check, Allowed, ClassReport, ClassSpec,
};
pub use coloured::{coloured_sum, ColouredPoset};
pub use composition::{
    decomposition_function, eval_f_eta, eval_g, h_eta, maximal_decomposition, split_assoc_check, Arguments,
    CompositionSequence, CompositionSet, CompositionStep, LeafValues, MaximalDecomposition, Position, PositionPath,
};
pub use dectree::{
    decomposition_tree, lift_embedding, recompose_along_chain, scattered_rank, st_embed, subtree_extract, tree_rank,
    DecompositionTree, NodeColour, NodeKind, StructuredTree,
};
pub use embed::{coloured_embed, embed, EmbeddingKind, EmbeddingMap};
pub use error::{Error, Result};
pub use format::{parse_document, Document};
pub use interval::{Interval, IntervalChain};
pub use poset::{p_sum, zeta_tree_sum, Poset, Relation};
pub use quasi::QuasiOrder;
pub use wqo::{bad_pair_search, embeddability_matrix, fence_antichain, EmbeddabilityMatrix, Family};
