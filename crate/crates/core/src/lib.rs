//! De Bruijn sequences and universal cycles built by concatenating the
//! periodic reductions of necklace-like string families listed in
//! lexicographic, colex, or reversed orders.
//!
//! ```
//! use dbcat::{construct, ConstructionSpec, Limits, Scheme};
//!
//! let spec = ConstructionSpec::full(Scheme::LexNecklace, 2, 4);
//! let result = construct(&spec, &Limits::default()).unwrap();
//! assert_eq!(result.sequence.to_string(), "0000100110101111");
//! ```

pub mod concat;
pub mod error;
pub mod family;
pub mod order;
pub mod verify;
pub mod word;

pub use concat::{
    construct, segments, target_set, uc_concat, Concatenation, ConstructionResult,
    ConstructionSpec, End, Scheme,
};
pub use error::{Error, Result};
pub use family::{Family, FamilyKind, Limits};
pub use order::{compare, prefix_related, sort, suffix_related, OrderKind};
pub use verify::{is_de_bruijn, is_universal_cycle, VerificationReport};
pub use word::{CyclicSequence, Symbol, Word, WordSet};
