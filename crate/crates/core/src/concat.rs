//! The `UC` operator (concatenate periodic reductions of a listing) and the
//! five family/order constructions built on it.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::family::{Family, FamilyKind, Limits, Necklaces};
use crate::order::OrderKind;
use crate::word::{CyclicSequence, Word, WordSet};

/// The periodic reductions of a listing, and their concatenation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Concatenation {
    pub sequence: CyclicSequence,
    pub segments: Vec<Word>,
}

/// `UC(α₁, …, α_j) = pr(α₁) pr(α₂) ⋯ pr(α_j)`.
pub fn uc_concat(listing: &[Word]) -> Concatenation {
    let segments: Vec<Word> = listing.iter().map(Word::periodic_reduction).collect();
    let k = listing.first().map_or(2, Word::alphabet_size);
    let symbols: Vec<_> = segments
        .iter()
        .flat_map(|s| s.symbols().iter().copied())
        .collect();
    Concatenation {
        sequence: CyclicSequence::new(Word::from_raw(symbols, k)),
        segments,
    }
}

/// Which end of an ordered family listing a partial construction draws from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum End {
    First,
    Last,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Scheme {
    /// Last strings of `lex(Neck_k(n))`.
    #[serde(rename = "lex-neck")]
    LexNecklace,
    /// First strings of `colex(Neck_k(n))`.
    #[serde(rename = "colex-neck")]
    ColexNecklace,
    /// Last strings of `revlex(R_k(n))`.
    #[serde(rename = "revlex-rot")]
    RevlexRotatedNecklace,
    /// First strings of `revcolex(coN(n))`. Binary only.
    #[serde(rename = "revcolex-con")]
    RevcolexCoNecklace,
    /// Last strings of `lex(C(n))`. Binary only.
    #[serde(rename = "lex-con")]
    LexRotatedCoNecklace,
}

impl Scheme {
    pub const ALL: [Scheme; 5] = [
        Self::LexNecklace,
        Self::ColexNecklace,
        Self::RevlexRotatedNecklace,
        Self::RevcolexCoNecklace,
        Self::LexRotatedCoNecklace,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::LexNecklace => "lex-neck",
            Self::ColexNecklace => "colex-neck",
            Self::RevlexRotatedNecklace => "revlex-rot",
            Self::RevcolexCoNecklace => "revcolex-con",
            Self::LexRotatedCoNecklace => "lex-con",
        }
    }

    pub fn family_kind(self) -> FamilyKind {
        match self {
            Self::LexNecklace | Self::ColexNecklace => FamilyKind::Necklace,
            Self::RevlexRotatedNecklace => FamilyKind::RotatedNecklace,
            Self::RevcolexCoNecklace => FamilyKind::ExtendedCoNecklace,
            Self::LexRotatedCoNecklace => FamilyKind::RotatedExtendedCoNecklace,
        }
    }

    pub fn order(self) -> OrderKind {
        match self {
            Self::LexNecklace | Self::LexRotatedCoNecklace => OrderKind::Lex,
            Self::ColexNecklace => OrderKind::Colex,
            Self::RevlexRotatedNecklace => OrderKind::RevLex,
            Self::RevcolexCoNecklace => OrderKind::RevColex,
        }
    }

    pub fn end(self) -> End {
        match self {
            Self::ColexNecklace | Self::RevcolexCoNecklace => End::First,
            _ => End::Last,
        }
    }

    /// Smallest number of listing strings a partial construction may take.
    pub fn min_partial(self) -> usize {
        if self.is_binary_only() {
            1
        } else {
            2
        }
    }

    pub fn is_binary_only(self) -> bool {
        self.family_kind().is_binary_only()
    }
}

impl fmt::Display for Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Scheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|scheme| scheme.name() == s)
            .ok_or_else(|| Error::InvalidSpec(format!("unknown scheme `{s}`")))
    }
}

/// A construction request: a scheme, alphabet size `k`, window length `n`
/// and optionally how many strings `m` to take from the scheme's end of the
/// listing (all of them when `None`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ConstructionSpec {
    pub scheme: Scheme,
    pub k: usize,
    pub n: usize,
    pub m: Option<usize>,
}

impl ConstructionSpec {
    pub fn full(scheme: Scheme, k: usize, n: usize) -> Self {
        Self {
            scheme,
            k,
            n,
            m: None,
        }
    }

    pub fn partial(scheme: Scheme, k: usize, n: usize, m: usize) -> Self {
        Self {
            scheme,
            k,
            n,
            m: Some(m),
        }
    }

    pub fn family(&self) -> Result<Family> {
        if self.n < 2 {
            return Err(Error::InvalidSpec(format!(
                "n must be at least 2, got {}",
                self.n
            )));
        }
        Family::new(self.scheme.family_kind(), self.k, self.n)
    }

    /// Checks everything except the upper bound on `m`, which needs the
    /// family size.
    pub fn validate(&self) -> Result<()> {
        self.family()?;
        if let Some(m) = self.m {
            let min = self.scheme.min_partial();
            if m < min {
                return Err(Error::InvalidSpec(format!(
                    "{} needs m >= {min}, got {m}",
                    self.scheme
                )));
            }
        }
        Ok(())
    }

    /// The family listing in the scheme's order, restricted to the first or
    /// last `m` strings. Selection happens before periodic reduction.
    pub fn listing(&self, limits: &Limits) -> Result<Vec<Word>> {
        self.validate()?;
        let mut listing = self.family()?.listing(self.scheme.order(), limits)?;
        let Some(m) = self.m else {
            return Ok(listing);
        };
        if m > listing.len() {
            return Err(Error::InvalidSpec(format!(
                "m = {m} exceeds the family size {}",
                listing.len()
            )));
        }
        match self.scheme.end() {
            End::First => listing.truncate(m),
            End::Last => {
                listing.drain(..listing.len() - m);
            }
        }
        Ok(listing)
    }
}

impl fmt::Display for ConstructionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} k={} n={}", self.scheme, self.k, self.n)?;
        if let Some(m) = self.m {
            write!(f, " m={m}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionResult {
    pub spec: ConstructionSpec,
    pub sequence: CyclicSequence,
    pub segments: Vec<Word>,
    /// The union of the length-`n` cyclic windows of the selected strings;
    /// the sequence is claimed to be a universal cycle for this set.
    pub target_set: WordSet,
}

impl ConstructionResult {
    pub fn target_set_size(&self) -> usize {
        self.target_set.len()
    }

    /// Segments joined by a middle dot, as the examples are typeset.
    pub fn segmented(&self) -> String {
        self.segments
            .iter()
            .map(Word::to_string)
            .collect::<Vec<_>>()
            .join("·")
    }
}

fn union_of_windows(listing: &[Word], n: usize) -> WordSet {
    let mut windows: Vec<Word> = listing
        .iter()
        .flat_map(|w| (0..w.len()).map(move |i| w.cyclic_window(i, n)))
        .collect();
    windows.sort_unstable();
    windows.dedup();
    windows.into_iter().collect()
}

pub fn construct(spec: &ConstructionSpec, limits: &Limits) -> Result<ConstructionResult> {
    let listing = spec.listing(limits)?;
    let Concatenation { sequence, segments } = uc_concat(&listing);
    Ok(ConstructionResult {
        spec: *spec,
        sequence,
        segments,
        target_set: union_of_windows(&listing, spec.n),
    })
}

/// `⋃ sub_n(α_i)` over the selected strings.
pub fn target_set(spec: &ConstructionSpec, limits: &Limits) -> Result<WordSet> {
    Ok(union_of_windows(&spec.listing(limits)?, spec.n))
}

/// Segments of a construction, one at a time. The full lex-necklace scheme
/// streams from the necklace generator; other schemes walk the materialized
/// listing.
pub fn segments(
    spec: &ConstructionSpec,
    limits: &Limits,
) -> Result<Box<dyn Iterator<Item = Word>>> {
    spec.validate()?;
    if spec.scheme == Scheme::LexNecklace && spec.m.is_none() {
        limits.check(spec.k, spec.n)?;
        let necklaces = Necklaces::new(spec.k, spec.n)?;
        return Ok(Box::new(necklaces.map(|w| w.periodic_reduction())));
    }
    let listing = spec.listing(limits)?;
    Ok(Box::new(
        listing.into_iter().map(|w| w.periodic_reduction()),
    ))
}
