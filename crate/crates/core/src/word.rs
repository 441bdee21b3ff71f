//! Words over the alphabet `{0, 1, ..., k-1}` and the basic operations the
//! constructions are built from: periodic reduction, cyclic extension,
//! cyclic windows, prefixes, suffixes, rotation and complement.
//!
//! Indexing is 0-based throughout. Symbols are stored as raw integers, so
//! alphabets up to 256 symbols are supported; rendering to text is handled by
//! [`Display`](std::fmt::Display) and [`Word::parse`].

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub type Symbol = u8;

/// Largest supported alphabet.
pub const MAX_ALPHABET: usize = 256;

/// Set of words with canonical (lex) iteration order.
pub type WordSet = BTreeSet<Word>;

pub(crate) fn check_alphabet(k: usize) -> Result<()> {
    if (2..=MAX_ALPHABET).contains(&k) {
        Ok(())
    } else {
        Err(Error::InvalidAlphabet(k))
    }
}

/// A finite word over `{0, ..., k-1}`.
///
/// The ordering implemented by `Ord` is plain lexicographic order on the
/// symbols (a proper prefix sorts first); the other orders live in
/// [`crate::order`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word {
    symbols: Vec<Symbol>,
    k: usize,
}

impl Word {
    pub fn new(symbols: Vec<Symbol>, k: usize) -> Result<Self> {
        check_alphabet(k)?;
        if let Some(&s) = symbols.iter().find(|&&s| s as usize >= k) {
            return Err(Error::SymbolOutOfRange {
                symbol: s as usize,
                k,
            });
        }
        Ok(Self { symbols, k })
    }

    /// Builds a word without validating symbols. Callers guarantee every
    /// symbol is below `k`.
    pub(crate) fn from_raw(symbols: Vec<Symbol>, k: usize) -> Self {
        debug_assert!(symbols.iter().all(|&s| (s as usize) < k));
        Self { symbols, k }
    }

    pub fn empty(k: usize) -> Self {
        Self {
            symbols: Vec::new(),
            k,
        }
    }

    /// `symbol` repeated `len` times.
    pub fn constant(symbol: Symbol, len: usize, k: usize) -> Result<Self> {
        Self::new(vec![symbol; len], k)
    }

    /// Parses a word. For `k <= 10`, text without interior whitespace is read
    /// one decimal digit per symbol; otherwise (and always for `k > 10`) it is
    /// read as whitespace-separated integers. Leading and trailing whitespace
    /// is ignored.
    pub fn parse(text: &str, k: usize) -> Result<Self> {
        check_alphabet(k)?;
        let start = text.len() - text.trim_start().len();
        let body = text.trim();
        let mut symbols = Vec::with_capacity(body.len());

        if k > 10 || body.contains(char::is_whitespace) {
            let mut offset = start;
            for token in body.split(char::is_whitespace) {
                if !token.is_empty() {
                    let value: usize = token.parse().map_err(|_| Error::Parse {
                        offset,
                        reason: format!("`{token}` is not a symbol"),
                    })?;
                    if value >= k {
                        return Err(Error::Parse {
                            offset,
                            reason: format!("symbol {value} is not below k = {k}"),
                        });
                    }
                    symbols.push(value as Symbol);
                }
                offset += token.len() + 1;
            }
        } else {
            for (i, c) in body.char_indices() {
                let value = c.to_digit(10).ok_or_else(|| Error::Parse {
                    offset: start + i,
                    reason: format!("`{c}` is not a digit"),
                })? as usize;
                if value >= k {
                    return Err(Error::Parse {
                        offset: start + i,
                        reason: format!("symbol {value} is not below k = {k}"),
                    });
                }
                symbols.push(value as Symbol);
            }
        }
        Ok(Self { symbols, k })
    }

    /// Parses a word of digits over the binary alphabet.
    pub fn binary(text: &str) -> Result<Self> {
        Self::parse(text, 2)
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn into_symbols(self) -> Vec<Symbol> {
        self.symbols
    }

    pub fn alphabet_size(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn first(&self) -> Option<Symbol> {
        self.symbols.first().copied()
    }

    pub fn last(&self) -> Option<Symbol> {
        self.symbols.last().copied()
    }

    /// Length of the shortest `p` such that the word is a power of its
    /// length-`p` prefix. Zero for the empty word.
    pub fn period(&self) -> usize {
        let n = self.len();
        (1..=n)
            .filter(|p| n.is_multiple_of(*p))
            .find(|&p| (p..n).all(|i| self.symbols[i] == self.symbols[i - p]))
            .unwrap_or(0)
    }

    /// The shortest prefix `ρ` such that the word equals `ρ^t` for some `t`.
    pub fn periodic_reduction(&self) -> Word {
        Self::from_raw(self.symbols[..self.period()].to_vec(), self.k)
    }

    /// `true` if the word equals its own periodic reduction.
    pub fn is_aperiodic(&self) -> bool {
        self.period() == self.len()
    }

    /// The word repeated the fewest whole number of times needed to reach
    /// length `n`.
    pub fn extend(&self, n: usize) -> Word {
        if self.is_empty() {
            return self.clone();
        }
        let t = n.div_ceil(self.len()).max(1);
        Self::from_raw(self.symbols.repeat(t), self.k)
    }

    /// Length-`n` window starting at `start`, reading the word cyclically.
    pub fn cyclic_window(&self, start: usize, n: usize) -> Word {
        let len = self.len();
        if len == 0 {
            return Self::from_raw(Vec::new(), self.k);
        }
        let start = start % len;
        let mut symbols = Vec::with_capacity(n);
        let mut at = start;
        while symbols.len() < n {
            let take = (n - symbols.len()).min(len - at);
            symbols.extend_from_slice(&self.symbols[at..at + take]);
            at = 0;
        }
        Self::from_raw(symbols, self.k)
    }

    /// Every length-`n` window of the word read as a cycle, one starting at
    /// each position, with duplicates collapsed.
    pub fn cyclic_substrings(&self, n: usize) -> WordSet {
        if self.is_empty() {
            return WordSet::new();
        }
        let mut windows: Vec<Word> = (0..self.len()).map(|i| self.cyclic_window(i, n)).collect();
        windows.sort_unstable();
        windows.dedup();
        windows.into_iter().collect()
    }

    pub fn prefix(&self, n: usize) -> Result<Word> {
        self.check_len(n)?;
        Ok(Self::from_raw(self.symbols[..n].to_vec(), self.k))
    }

    pub fn suffix(&self, n: usize) -> Result<Word> {
        self.check_len(n)?;
        Ok(Self::from_raw(
            self.symbols[self.len() - n..].to_vec(),
            self.k,
        ))
    }

    fn check_len(&self, n: usize) -> Result<()> {
        if n > self.len() {
            Err(Error::LengthOutOfRange {
                requested: n,
                len: self.len(),
            })
        } else {
            Ok(())
        }
    }

    /// Left rotation by `i`: `a[i..] a[..i]`.
    pub fn rotate(&self, i: usize) -> Result<Word> {
        self.check_len(i)?;
        let mut symbols = Vec::with_capacity(self.len());
        symbols.extend_from_slice(&self.symbols[i..]);
        symbols.extend_from_slice(&self.symbols[..i]);
        Ok(Self::from_raw(symbols, self.k))
    }

    /// Bitwise complement of a binary word.
    pub fn complement(&self) -> Result<Word> {
        if self.k != 2 {
            return Err(Error::NonBinary(self.k));
        }
        Ok(Self::from_raw(
            self.symbols.iter().map(|&b| 1 - b).collect(),
            2,
        ))
    }

    pub fn reverse(&self) -> Word {
        Self::from_raw(self.symbols.iter().rev().copied().collect(), self.k)
    }

    /// `self` followed by `other`.
    pub fn concat(&self, other: &Word) -> Word {
        debug_assert_eq!(self.k, other.k);
        let mut symbols = self.symbols.clone();
        symbols.extend_from_slice(&other.symbols);
        Self::from_raw(symbols, self.k)
    }

    /// Number of leading copies of `x`.
    pub fn leading_run(&self, x: Symbol) -> usize {
        self.symbols.iter().take_while(|&&s| s == x).count()
    }

    /// Number of trailing copies of `x`.
    pub fn trailing_run(&self, x: Symbol) -> usize {
        self.symbols.iter().rev().take_while(|&&s| s == x).count()
    }

    /// Index just past the last nonzero symbol (0 if there is none).
    pub(crate) fn end_of_last_nonzero(&self) -> usize {
        self.symbols
            .iter()
            .rposition(|&s| s != 0)
            .map_or(0, |i| i + 1)
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.symbols.cmp(&other.symbols).then(self.k.cmp(&other.k))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k <= 10 {
            for &s in &self.symbols {
                write!(f, "{s}")?;
            }
        } else {
            for (i, &s) in self.symbols.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{s}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A word read circularly. Windows wrap around the end, possibly several
/// times when the window is longer than the sequence.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(transparent)]
pub struct CyclicSequence(Word);

impl CyclicSequence {
    pub fn new(word: Word) -> Self {
        Self(word)
    }

    pub fn as_word(&self) -> &Word {
        &self.0
    }

    pub fn into_word(self) -> Word {
        self.0
    }

    pub fn symbols(&self) -> &[Symbol] {
        self.0.symbols()
    }

    pub fn alphabet_size(&self) -> usize {
        self.0.alphabet_size()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn window(&self, start: usize, n: usize) -> Word {
        self.0.cyclic_window(start, n)
    }

    /// All `len()` windows of length `n`, in position order.
    pub fn windows(&self, n: usize) -> impl Iterator<Item = Word> + '_ {
        (0..self.len()).map(move |i| self.window(i, n))
    }
}

impl From<Word> for CyclicSequence {
    fn from(word: Word) -> Self {
        Self(word)
    }
}

impl fmt::Display for CyclicSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}
