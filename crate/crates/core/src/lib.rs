//! Higher Bruhat and higher Tamari orders, tropical KP line solitons and the
//! rewriting monoids that connect them.
//!
//! * [`setcalc`]: index subsets, packets, segments and the `K_<`/`K_>` split.
//! * [`poset`]: finite posets in canonical Hasse-diagram form.
//! * [`bruhat`]: consistent sets, `B(N,n)`, admissible orders and Q-posets.
//! * [`tamari`]: visibility, R-posets and `T(N,n)`.
//! * [`triangulation`]: polygon triangulations and their dual binary trees.
//! * [`tropic`]: exact tropical phases, critical values and soliton graphs.
//! * [`rewrite`]: words in the Bruhat and Tamari monoids and their normal forms.

pub mod bruhat;
pub mod error;
pub mod poset;
pub mod rewrite;
pub mod setcalc;
pub mod tamari;
pub mod triangulation;
pub mod tropic;

pub use bruhat::{AdmissibleOrder, BruhatOrder, ConsistentSet};
pub use error::{Error, Result};
pub use poset::Poset;
pub use setcalc::{IndexSet, SegmentKind, Side};
pub use tamari::TamariOrder;
pub use triangulation::{BinaryTree, Triangulation};
pub use tropic::{SolitonGraph, SolitonParams};
