//! Exact construction and exhaustive verification of the finite Zassenhaus
//! Moufang sets with root groups of even order: the projective lines
//! `M(F_q)` and the Suzuki Moufang sets `MSuz(q)`.
//!
//! Conventions: permutations act on the right and compose left to right;
//! `g^h = h⁻¹gh`. Points of `X = U ∪ {∞}` are dense indices with `∞ = |U|`.

pub mod cli;
pub mod constructions;
pub mod field;
pub mod moufang_set;
pub mod perm;
pub mod perm_group;
pub mod root_group;
pub mod suite;
pub mod sweep;

pub use constructions::{build, build_projective_line, build_suzuki, ConstructionError};
pub use field::{FieldElement, FieldError, FieldSpec};
pub use moufang_set::{HuaSubgroup, MoufangError, MoufangSet, Point, SetKind};
pub use perm::Permutation;
pub use perm_group::{group_order, Strategy};
pub use root_group::{RootGroup, RootGroupElement, RootGroupKind};
pub use sweep::Exec;
