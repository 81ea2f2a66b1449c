//! Burnside rings of small finite groups, their biset operations, and
//! B-group invariants, with a verification harness over a group catalog.

pub mod bgroup;
pub mod bitset;
pub mod burnside;
pub mod catalog;
pub mod error;
pub mod group;
pub mod hom;
pub mod iso;
pub mod kernel;
pub mod lattice;
pub mod perm;
pub mod verify;

pub use burnside::{BurnsideElement, MarksTable, Rational};
pub use error::{Error, Result};
pub use group::{direct_product, group_from_generators, FiniteGroup, Group, Subgroup, DEFAULT_ORDER_CAP};
pub use hom::{quotient, subgroup_group, GroupHom};
pub use iso::are_isomorphic;
pub use lattice::{enumerate_subgroups, SubgroupLattice};
pub use perm::Permutation;
pub use bgroup::{beta, is_b_group, Beta};
pub use catalog::{parse_group_spec, Catalog, GroupSpec};
pub use kernel::{kernel_basis, KernelBasis, SubgroupFamily};
pub use verify::{Check, Status, VerificationReport};
