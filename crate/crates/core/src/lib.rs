//! Integer points in the Hadamard simplex and its dilates.
//!
//! Let n = 2^m and let H be the n×n Sylvester Hadamard matrix,
//! H(a, b) = (−1)^⟨a,b⟩ for a, b ∈ F₂^m. Its columns span an (n−1)-simplex
//! Had ⊂ ℝⁿ. This crate
//!
//! * enumerates and counts Had ∩ ℤⁿ through its bijection with the affine
//!   subspaces of F₂^m ([`lattice`]),
//! * enumerates d·Had ∩ ℤⁿ exactly by pruned depth-first search and
//!   interpolates the Ehrhart polynomial ([`lattice::dfs`], [`lattice::ehrhart`]),
//! * builds explicit lower-bound certificates for small d and samples
//!   hypercube densities for large d ([`bounds`]).
//!
//! Membership in d·Had is decided exactly with an integer fast
//! Walsh–Hadamard transform ([`hadamard`]).

pub mod bounds;
pub mod error;
pub mod gf2;
pub mod hadamard;
pub mod lattice;

pub use error::{Error, Result};
pub use gf2::{
    coset_canonical_rep, dot, enumerate_affine_subspaces, enumerate_subspaces, gaussian_binomial,
    orthogonal_complement, rref_basis, Gf2AffineSubspace, Gf2Subspace, Gf2Vector, MAX_DIM,
};
pub use hadamard::{
    dilate_membership, fwht, fwht_in_place, hadamard_column, hadamard_entry,
    projected_membership, BarycentricProfile, LatticePoint,
};
pub use lattice::{
    affine_subspace_from_point, cor1_count_formula, count_dilate, ehrhart_interpolate,
    enumerate_dilate_points, enumerate_unit_points, point_from_affine_subspace,
    support_closure_holds, CountMethod, EhrhartPolynomial, DEFAULT_NODE_BUDGET,
};
