//! Membership tests and generators for the four string families used by the
//! constructions:
//!
//! * `Neck_k(n)`: necklaces, the lex-least member of each rotation class;
//! * `R_k(n)`: each non-zero necklace rotated left past its leading zeros,
//!   plus `0^n`;
//! * `coN(n)`: extended co-necklaces `a·ā` where `a·ā` is a necklace;
//! * `C(n)`: each extended co-necklace rotated left past its leading zeros.
//!
//! Each family's windows of length `n` partition `Σ_k^n` (or `Σ_2^n`).

use std::fmt;

use crate::error::{Error, Result};
use crate::order::{sort, OrderKind};
use crate::word::{check_alphabet, Symbol, Word, WordSet};

/// Upper bound on the number of strings a generator may enumerate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_words: u64,
}

impl Limits {
    pub const DEFAULT_MAX_WORDS: u64 = 1 << 20;

    pub fn new(max_words: u64) -> Self {
        Self { max_words }
    }

    pub fn unlimited() -> Self {
        Self {
            max_words: u64::MAX,
        }
    }

    /// Fails unless `k^n` is within the cap.
    pub fn check(&self, k: usize, n: usize) -> Result<u64> {
        let total = u32::try_from(n)
            .ok()
            .and_then(|e| (k as u64).checked_pow(e))
            .filter(|&t| t <= self.max_words);
        total.ok_or(Error::ResourceCap {
            k,
            n,
            cap: self.max_words,
        })
    }
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_words: Self::DEFAULT_MAX_WORDS,
        }
    }
}

fn check_length(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::InvalidSpec(
            "string length must be at least 1".into(),
        ))
    } else {
        Ok(())
    }
}

/// Length of the longest prefix of `a` that is a prenecklace, together with
/// the period of that prefix (the Duval/FKM scan).
fn prenecklace_scan(a: &[Symbol]) -> (usize, usize) {
    let mut p = 1;
    for i in 1..a.len() {
        match a[i - p].cmp(&a[i]) {
            std::cmp::Ordering::Less => p = i + 1,
            std::cmp::Ordering::Equal => {}
            std::cmp::Ordering::Greater => return (i, p),
        }
    }
    (a.len(), p)
}

/// `true` if no rotation of the word is lexicographically smaller.
pub fn is_necklace(word: &Word) -> bool {
    let a = word.symbols();
    if a.is_empty() {
        return false;
    }
    let (scanned, p) = prenecklace_scan(a);
    scanned == a.len() && a.len().is_multiple_of(p)
}

/// `true` if `a·ā` is a necklace.
pub fn is_co_necklace(word: &Word) -> Result<bool> {
    let extended = word.concat(&word.complement()?);
    Ok(is_necklace(&extended))
}

/// Necklaces of length `n` over `k` symbols in lex order, generated one at a
/// time by the iterative FKM successor on prenecklaces.
pub struct Necklaces {
    a: Vec<Symbol>,
    k: usize,
    started: bool,
    done: bool,
}

impl Necklaces {
    pub fn new(k: usize, n: usize) -> Result<Self> {
        check_alphabet(k)?;
        check_length(n)?;
        Ok(Self {
            a: vec![0; n],
            k,
            started: false,
            done: false,
        })
    }
}

impl Iterator for Necklaces {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(Word::from_raw(self.a.clone(), self.k));
        }
        let n = self.a.len();
        let top = (self.k - 1) as Symbol;
        loop {
            let Some(i) = self.a.iter().rposition(|&s| s != top) else {
                self.done = true;
                return None;
            };
            self.a[i] += 1;
            let p = i + 1;
            for j in p..n {
                self.a[j] = self.a[j - p];
            }
            if n.is_multiple_of(p) {
                return Some(Word::from_raw(self.a.clone(), self.k));
            }
        }
    }
}

/// Every word of length `n` over `k` symbols in lex order.
fn all_words(k: usize, n: usize) -> impl Iterator<Item = Word> {
    let mut current: Option<Vec<Symbol>> = Some(vec![0; n]);
    std::iter::from_fn(move || {
        let out = current.clone()?;
        let next = current.as_mut().unwrap();
        match next.iter().rposition(|&s| (s as usize) < k - 1) {
            Some(i) => {
                next[i] += 1;
                next[i + 1..].iter_mut().for_each(|s| *s = 0);
            }
            None => current = None,
        }
        Some(Word::from_raw(out, k))
    })
}

pub fn necklaces(k: usize, n: usize, limits: &Limits) -> Result<WordSet> {
    limits.check(k, n)?;
    Ok(Necklaces::new(k, n)?.collect())
}

/// Same set as [`necklaces`], by filtering all `k^n` words.
pub fn necklaces_by_enumeration(k: usize, n: usize, limits: &Limits) -> Result<WordSet> {
    check_alphabet(k)?;
    check_length(n)?;
    limits.check(k, n)?;
    Ok(all_words(k, n).filter(is_necklace).collect())
}

/// Rotates a word left past its leading zeros (so it begins with its first
/// nonzero symbol). Words of zeros are returned unchanged.
fn shift_leading_zeros(word: &Word) -> Word {
    let zeros = word.leading_run(0);
    if zeros == word.len() {
        word.clone()
    } else {
        word.rotate(zeros).expect("rotation within length")
    }
}

/// The inverse of [`shift_leading_zeros`] on its image: rotates the word so
/// that it starts right after its last nonzero symbol.
fn rotation_after_last_nonzero(word: &Word) -> Word {
    let end = word.end_of_last_nonzero();
    if end == 0 {
        word.clone()
    } else {
        word.rotate(end % word.len())
            .expect("rotation within length")
    }
}

/// Membership in `R_k(n)`: the all-zero word, or a word beginning with a
/// nonzero symbol whose rotation just after its last nonzero symbol is a
/// necklace.
pub fn is_rotated_necklace(word: &Word) -> bool {
    if word.is_empty() {
        return false;
    }
    match word.first() {
        Some(0) => word.leading_run(0) == word.len(),
        _ => is_necklace(&rotation_after_last_nonzero(word)),
    }
}

pub fn rotated_necklaces(k: usize, n: usize, limits: &Limits) -> Result<WordSet> {
    limits.check(k, n)?;
    Ok(Necklaces::new(k, n)?
        .map(|w| shift_leading_zeros(&w))
        .collect())
}

/// Maps a member of `R_k(n)` or `C(n)` to the necklace it was rotated from.
pub fn defining_rotation(word: &Word) -> Word {
    rotation_after_last_nonzero(word)
}

fn binary_limits(n: usize, limits: &Limits) -> Result<()> {
    check_length(n)?;
    limits.check(2, n).map(|_| ())
}

pub fn co_necklaces(n: usize, limits: &Limits) -> Result<WordSet> {
    binary_limits(n, limits)?;
    let mut out = WordSet::new();
    for word in all_words(2, n) {
        if is_co_necklace(&word)? {
            out.insert(word);
        }
    }
    Ok(out)
}

/// `coN(n)`: `a·ā` for every co-necklace `a` of length `n`.
pub fn extended_co_necklaces(n: usize, limits: &Limits) -> Result<WordSet> {
    Ok(co_necklaces(n, limits)?
        .into_iter()
        .map(|a| {
            let c = a.complement().expect("binary");
            a.concat(&c)
        })
        .collect())
}

/// Membership in `coN(n)` for a word of length `2n`.
pub fn is_extended_co_necklace(word: &Word) -> Result<bool> {
    if word.alphabet_size() != 2 {
        return Err(Error::NonBinary(word.alphabet_size()));
    }
    if word.is_empty() || !word.len().is_multiple_of(2) {
        return Ok(false);
    }
    let half = word.len() / 2;
    let head = word.prefix(half)?;
    Ok(word.symbols()[half..] == *head.complement()?.symbols() && is_necklace(word))
}

/// `C(n)`: each member of `coN(n)` rotated left past its leading zeros.
pub fn rotated_extended_co_necklaces(n: usize, limits: &Limits) -> Result<WordSet> {
    Ok(extended_co_necklaces(n, limits)?
        .iter()
        .map(shift_leading_zeros)
        .collect())
}

/// Membership in `C(n)`.
pub fn is_rotated_extended_co_necklace(word: &Word) -> Result<bool> {
    if word.alphabet_size() != 2 {
        return Err(Error::NonBinary(word.alphabet_size()));
    }
    if word.first() != Some(1) {
        return Ok(false);
    }
    is_extended_co_necklace(&rotation_after_last_nonzero(word))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    Necklace,
    RotatedNecklace,
    ExtendedCoNecklace,
    RotatedExtendedCoNecklace,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 4] = [
        Self::Necklace,
        Self::RotatedNecklace,
        Self::ExtendedCoNecklace,
        Self::RotatedExtendedCoNecklace,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::Necklace => "neck",
            Self::RotatedNecklace => "rot",
            Self::ExtendedCoNecklace => "con",
            Self::RotatedExtendedCoNecklace => "c",
        }
    }

    pub fn from_name(name: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|f| f.name() == name)
            .ok_or_else(|| Error::InvalidSpec(format!("unknown family `{name}`")))
    }

    pub fn is_binary_only(self) -> bool {
        matches!(
            self,
            Self::ExtendedCoNecklace | Self::RotatedExtendedCoNecklace
        )
    }
}

/// A concrete family `Neck_k(n)`, `R_k(n)`, `coN(n)` or `C(n)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Family {
    kind: FamilyKind,
    k: usize,
    n: usize,
}

impl Family {
    pub fn new(kind: FamilyKind, k: usize, n: usize) -> Result<Self> {
        check_alphabet(k)?;
        check_length(n)?;
        if kind.is_binary_only() && k != 2 {
            return Err(Error::NonBinary(k));
        }
        Ok(Self { kind, k, n })
    }

    pub fn necklaces(k: usize, n: usize) -> Result<Self> {
        Self::new(FamilyKind::Necklace, k, n)
    }

    pub fn rotated_necklaces(k: usize, n: usize) -> Result<Self> {
        Self::new(FamilyKind::RotatedNecklace, k, n)
    }

    pub fn extended_co_necklaces(n: usize) -> Result<Self> {
        Self::new(FamilyKind::ExtendedCoNecklace, 2, n)
    }

    pub fn rotated_extended_co_necklaces(n: usize) -> Result<Self> {
        Self::new(FamilyKind::RotatedExtendedCoNecklace, 2, n)
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn alphabet_size(&self) -> usize {
        self.k
    }

    /// Window length `n` of the strings this family partitions.
    pub fn order(&self) -> usize {
        self.n
    }

    /// Length of each member: `n`, or `2n` for the co-necklace families.
    pub fn word_len(&self) -> usize {
        if self.kind.is_binary_only() {
            2 * self.n
        } else {
            self.n
        }
    }

    pub fn contains(&self, word: &Word) -> bool {
        if word.len() != self.word_len() || word.alphabet_size() != self.k {
            return false;
        }
        match self.kind {
            FamilyKind::Necklace => is_necklace(word),
            FamilyKind::RotatedNecklace => is_rotated_necklace(word),
            FamilyKind::ExtendedCoNecklace => is_extended_co_necklace(word).unwrap_or(false),
            FamilyKind::RotatedExtendedCoNecklace => {
                is_rotated_extended_co_necklace(word).unwrap_or(false)
            }
        }
    }

    pub fn members(&self, limits: &Limits) -> Result<WordSet> {
        match self.kind {
            FamilyKind::Necklace => necklaces(self.k, self.n, limits),
            FamilyKind::RotatedNecklace => rotated_necklaces(self.k, self.n, limits),
            FamilyKind::ExtendedCoNecklace => extended_co_necklaces(self.n, limits),
            FamilyKind::RotatedExtendedCoNecklace => rotated_extended_co_necklaces(self.n, limits),
        }
    }

    pub fn listing(&self, order: OrderKind, limits: &Limits) -> Result<Vec<Word>> {
        Ok(sort(self.members(limits)?, order))
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FamilyKind::Necklace => write!(f, "Neck_{}({})", self.k, self.n),
            FamilyKind::RotatedNecklace => write!(f, "R_{}({})", self.k, self.n),
            FamilyKind::ExtendedCoNecklace => write!(f, "coN({})", self.n),
            FamilyKind::RotatedExtendedCoNecklace => write!(f, "C({})", self.n),
        }
    }
}
