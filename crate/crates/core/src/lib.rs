//! Mobius function of intervals in the consecutive pattern containment
//! poset of permutations.
//!
//! A permutation sigma occurs in tau as a consecutive pattern when some
//! contiguous window of tau has the same relative order as sigma; the set
//! of all permutations ordered by such containment forms a poset. This
//! crate computes the Mobius function `mu(sigma, tau)` of its intervals
//! two ways:
//!
//! * [`mobius_fast`]: case dispatch on occurrence count, rank, tails and
//!   interior membership, then a descending bifix scan for the interval's
//!   carrier element, recursing until the socle is reached. The value is
//!   always -1, 0 or 1.
//! * [`mobius_oracle`] / [`mobius_oracle_topdown`]: brute force straight
//!   from the defining recursion over an explicitly built interval, as
//!   ground truth for small instances.
//!
//! [`Interval`] exposes the interval elements and Hasse diagram (with DOT
//! and JSON export), [`screen`] evaluates necessary-condition predicates,
//! and the [`crosscheck`] and [`mod@bench`] modules hold the exhaustive
//! validation sweeps and the scaling benchmark used by the CLI.

pub mod bench;
pub mod crosscheck;
mod error;
pub mod generate;
mod mobius;
mod perm;
mod poset;
mod screen;

pub use error::{Error, Result};
pub use mobius::{
    carrier_element, find_carrier, mobius_fast, mobius_fast_with, mobius_one_occurrence,
    mobius_small_rank, socle_chain, CarrierSearchReport, FastOptions, MobiusCase, MobiusRecord,
    MobiusResult,
};
pub use perm::{Permutation, Side, TailProfile};
pub use poset::{
    covered_by, mobius_oracle, mobius_oracle_bounded, mobius_oracle_topdown,
    mobius_oracle_topdown_bounded, HasseDiagram, Interval, DEFAULT_ORACLE_BOUND,
};
pub use screen::{screen, ScreenReport};
