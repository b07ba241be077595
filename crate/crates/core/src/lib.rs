//! Intervals of the Tamari and `m`-Tamari lattices as interval-posets,
//! their grafting trees, and the rise-contact involution.

pub mod catalan;
pub mod enumerate;
pub mod error;
pub mod grafting;
pub mod involution;
pub mod mtamari;
pub mod poset;
pub mod stats;

pub use catalan::{bounds_from_interval, dyck_bounds, interval_from_bounds, BinaryTree, DyckPath};
pub use enumerate::{count_intervals, count_m_intervals, enumerate_intervals, enumerate_m_intervals};
pub use error::{Error, Result};
pub use grafting::GraftingTree;
pub use involution::{left_branch_involution, rise_contact};
pub use mtamari::{m_interval_stats, m_rise_contact, BallotPath, MGraftingTree};
pub use poset::{Forest, ForestKind, IntervalPoset, PosetJson};
pub use stats::{interval_stats, ExponentMultiset, PhiTerm, StatBundle};
