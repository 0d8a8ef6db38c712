//! Exact computational group theory for rotation groups.
//!
//! Everything here runs over the real quadratic field ℚ(√d) with
//! arbitrary-precision rationals, so matrix identities hold or fail exactly —
//! there is no tolerance anywhere. The crate provides:
//!
//! - [`scalar`]: the ground field ℚ(√d) (`d = 0` meaning plain ℚ);
//! - [`quaternion`]: Hamilton quaternions and their commutation predicates;
//! - [`rotation`]: exact SO(3) matrices, the quaternion-to-rotation map,
//!   axes, and a certified element-order decision;
//! - [`group`]: finite rotation groups with Cayley tables, subgroup
//!   enumeration, centralizers, malnormality, internal direct-product
//!   decompositions and isomorphism-type classification;
//! - [`words`]: bounded word searches giving evidence for free and free
//!   abelian subgroups;
//! - [`properties`]: a taxonomy of direct-product properties as decision
//!   procedures, with replayable witnesses and an implication harness;
//! - [`corpus`]: a fixed corpus spanning every finite rotation group family;
//! - [`suite`]: the bundled verification suite behind `so3kit verify-paper`;
//! - [`genfile`]: the JSON generator-file format used by the CLI;
//! - [`cli`]: the command-line front end (kept thin in the binary).
//!
//! The `examples/` directory of this crate walks through each capability.

pub mod corpus;
pub mod fuzz;
pub mod genfile;
pub mod group;
pub mod properties;
pub mod quaternion;
pub mod rotation;
pub mod scalar;
pub mod suite;
pub mod words;

pub mod cli;

pub use group::{Decomposition, FiniteRotGroup, GroupError, IsoType, Subgroup};
pub use properties::{check_property, PropertyReport, PropertyTag, Witness};
pub use quaternion::{QuatError, Quaternion, Trichotomy};
pub use rotation::{theta, Axis, OrderResult, Rot3, RotError};
pub use scalar::{QuadScalar, ScalarError, Sign};
pub use suite::{run_suite, SuiteConfig, SuiteReport};
pub use words::{word_no_relation_search, WordSearchResult};
