//! Descent statistics on 321-avoiding centrosymmetric involutions.
//!
//! The crate is organised bottom-up:
//!
//! - [`perm`]: permutations in one-line notation and their classical statistics.
//! - [`matching`]: symmetric non-nesting matchings and the bijection between
//!   321-avoiding centrosymmetric involutions of `[2n]` and subsets of `[n]`.
//! - [`paths`]: N/E lattice paths, Young diagrams in a rectangle, peaks, hook
//!   decompositions and the peak-to-hook bijection `g`.
//! - [`qpoly`]: exact polynomials in `q`, Gaussian binomials and the closed
//!   forms and recurrences for the distribution polynomials.
//! - [`signed`]: the hyperoctahedral group, the map `Θ` and signed patterns.
//! - [`rsk`]: two-row Robinson–Schensted and the fixed-point refined bijection.
//! - [`enumerate`], [`stats`], [`verify`], [`bijection`]: exhaustive generators, brute-force
//!   distributions, theorem checks and named maps driven by the `cinv` binary.

pub mod bijection;
pub mod enumerate;
pub mod error;
pub mod matching;
pub mod paths;
pub mod perm;
pub mod qpoly;
pub mod rsk;
pub mod signed;
pub mod stats;
pub mod verify;

pub use error::{Error, Result};
pub use matching::{ExcedanceSubset, Matching};
pub use paths::{LatticePath, Partition, Step};
pub use perm::Permutation;
pub use qpoly::QPoly;
pub use rsk::TwoRowTableau;
pub use signed::SignedPermutation;
