//! Exact lattice width and lattice size of plane convex polygons.
//!
//! The lattice size of a convex body `P` with respect to `X` is the smallest
//! `l >= 0` such that some affine unimodular image of `P` fits in `l X`. This
//! crate computes it for the unit square and the standard simplex through a
//! basis reduction in the width norm of `P`, checks the results against an
//! exhaustive oracle, evaluates the sharp area bounds that involve these
//! invariants and classifies minimal lattice polygons of fixed square
//! lattice size.
//!
//! All arithmetic is exact (`Ratio<i128>`); there is no floating point.

pub mod bounds;
pub mod enumeration;
pub mod error;
pub mod geometry;
pub mod lattice_size;
pub mod minimal;
pub mod oracle;
pub mod rational;
pub mod reduction;
pub mod text;
pub mod unimodular;

pub use bounds::{check_bounds, extremal_family, BoundsReport, EqualityFamily};
pub use enumeration::{enumerate_classes, enumerate_convex, ConvexEnumerator};
pub use error::{Error, Result};
pub use geometry::{ConvexPolygon, IntVector, Point, Target};
pub use lattice_size::{
    check_touch, invariants, l_values, lattice_width, ls_simplex, ls_square,
    ContainmentCertificate, InvariantsReport,
};
pub use minimal::{
    generate_minimal, quad_minimal, triangle_minimal, verify_classification, ClassificationReport,
    MinimalClass, MinimalFamily,
};
pub use oracle::{candidate_directions, canonical_form, equivalent, is_minimal, oracle_ls};
pub use rational::Rational;
pub use reduction::{argmin_shift, gauss_reduce, LatticeBasis};
pub use unimodular::UnimodularMap;
