//! Frobenius polytopes: the convex hull of a Frobenius permutation group's
//! permutation matrices, with its complete face structure.
//!
//! * [`group`], [`frobenius`], [`families`]: permutation groups, the
//!   kernel/complement split, and named constructions.
//! * [`embedding`]: vertices in `R^{n×n}`, Gram values, affine relations.
//! * [`facecomb`]: faces, facets and f-vectors from the coset structure.
//! * [`oracle`]: brute-force exact geometry used to cross-check [`facecomb`].
//! * [`counting`]: interchangeable f-vector strategies selected by name.
//!
//! All arithmetic is exact.

pub mod counting;
pub mod embedding;
pub mod error;
pub mod facecomb;
pub mod families;
pub mod frobenius;
pub mod group;
pub mod linalg;
pub mod oracle;
pub mod perm;
pub mod poly;

pub use error::{EmbeddingError, FaceError, GroupError, OracleError};
pub use facecomb::{FVector, FaceDescriptor};
pub use families::{parse_group_spec, FamilyRegistry, GroupFamily};
pub use frobenius::{build_frobenius_system, FrobeniusSystem};
pub use group::{check_frobenius, generate_group, FrobeniusVerdict, PermGroup};
pub use perm::Perm;
