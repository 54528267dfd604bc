//! Unique-substring structure of byte strings.
//!
//! A substring is *unique* when it occurs exactly once in the text and
//! *repeating* otherwise. This crate computes, for any non-empty byte
//! string:
//!
//! * the minimal unique substrings (MUSs) — unique substrings whose every
//!   proper substring repeats ([`mus`]);
//! * shortest unique substring (SUS) answers for point and interval queries
//!   ([`query`]);
//! * the complete point-SUS set with its left/mus/right decomposition and
//!   charging map, the complete non-trivial interval-SUS set, and checks of
//!   the counting bounds that govern them ([`enumeration`]);
//! * extremal string families attaining those bounds ([`extremal`]);
//! * brute-force oracles plus exhaustive and randomized verification
//!   harnesses ([`oracle`]).
//!
//! All positions and intervals at the API are 1-based and inclusive.
//!
//! ```
//! use unisub::{compute_mus, point_sus, SuffixIndex, Text};
//!
//! let text: Text = "aabbaababaa".parse().unwrap();
//! let index = SuffixIndex::build(&text);
//! let mus = compute_mus(&index);
//! let answer = point_sus(&mus, 6).unwrap();
//! assert_eq!(answer.sus_length(), 4);
//! assert_eq!(answer.sus_list().len(), 4);
//! ```

pub mod enumeration;
pub mod extremal;
pub mod index;
pub mod mus;
pub mod oracle;
pub mod query;
pub mod text;

pub use enumeration::{
    bound_report, build_charging, check_finv2_structure, enumerate_interval_sus,
    enumerate_point_sus, verify_bounds, BoundCheck, BoundReport, ChargingMap, PointSusSet,
};
pub use extremal::{
    gen_interval_family, gen_point_tight, gen_sigma_family, Eps, ExtremalError, ExtremalSpec,
    Family,
};
pub use index::SuffixIndex;
pub use mus::{check_mus_invariants, compute_mus, meaningless_mus, MusList};
pub use query::{cover, interval_sus, interval_sus_full_scan, point_sus, QueryError, SusAnswer};
pub use text::{Interval, Text, TextError};
