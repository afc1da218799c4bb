//! Exact computations in the graded Lie algebra of the pure braid group and
//! its Brunnian ideal.
//!
//! The crate is organized bottom-up:
//!
//! - [`free_lie`]: free Lie rings over ℤ in the Lyndon basis.
//! - [`linalg`]: Hermite normal forms and integer lattices.
//! - [`kohno`]: the Lie algebra of the pure braid group as an iterated
//!   semidirect sum of free layers, with strand deletion and insertion maps.
//! - [`generators`]: recursive free generating sets of the Brunnian ideal
//!   and of two-fold kernel intersections.
//! - [`ideal`]: graded spans of Lie ideals, bracket sums of ideals.
//! - [`rank`]: closed-form rank formulas.
//! - [`verify`]: degreewise brute-force checks tying the above together.

pub mod error;
pub mod free_lie;
pub mod generators;
pub mod ideal;
pub mod kohno;
pub mod linalg;
pub mod rank;
pub mod verify;

pub use error::{Error, Result};
pub use free_lie::{Alphabet, LieElement, LieMonomial, LyndonWord, Word};
pub use ideal::GradedSpan;
pub use kohno::{BraidGenerator, LayeredElement};
pub use linalg::{IntMatrix, IntegerLattice};
pub use rank::RankTable;
pub use verify::{CheckReport, CheckStatus};
