//! szk-core: construction and mechanical verification of Suzuki 2-groups.
//!
//! The crate builds the four families of Suzuki 2-groups (central extensions
//! of elementary abelian groups by field-twisted cocycles), the ambient
//! simple groups Sz(8) and SU(3,4) as explicit matrix groups, and provides
//! the machinery to verify their structural properties: conjugacy classes,
//! normal-subgroup lattices, automorphisms, Dixon–Burnside character tables
//! and 2-height profiles.

pub mod arith;
pub mod autos;
pub mod catalog;
pub mod chartab;
pub mod classes;
pub mod error;
pub mod gf2m;
pub mod group;
pub mod iso;
pub mod modp;
pub mod normal;
pub mod report;
pub mod simple;
pub mod spec;
pub mod suites;
pub mod suzuki;

pub use chartab::Verdict;
pub use error::{Error, Result};
pub use gf2m::{F2m, Fe};
pub use group::Group;
pub use report::Report;
pub use spec::{build_spec, BuiltGroup};
pub use suites::run_suite;
pub use suzuki::{Family, SuzukiGroup};
