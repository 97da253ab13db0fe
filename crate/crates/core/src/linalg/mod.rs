//! Exact linear algebra: sparse rational matrices, matrix polynomials, matrices over ℚ(u)
//! with a common denominator, tensor-leg bookkeeping, subspace tools and grid proofs.

mod dense;
mod grid;
mod legs;
mod polymat;
mod sparse;

pub use dense::{
    closure_span, dot, is_zero_vec, kernel_q, kernel_rf, kernel_stacked, proportionality, rank_q, restrict_q,
    restrict_to_subspace, scale_vec, sub_vec, unit_vec, zero_vec, Echelon, QVec,
};
pub use grid::{bits, fits_i128, prove_identity_grid, Counterexample, GridSpec, ProofReport, ProofStatus};
pub use legs::{
    decode, embed_on_legs, encode, kron, matrix_unit, partial_transpose, total_dim, LegOperator, SpaceIndex,
    TransposeKind,
};
pub use polymat::{PolyMat, RfMatrix};
pub use sparse::{QMat, Scalar, SparseMat};
