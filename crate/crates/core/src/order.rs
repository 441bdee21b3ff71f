//! The four listing orders on words of possibly unequal length, and the
//! suffix-related / prefix-related predicates between adjacent cycles.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::Error;
use crate::word::{Symbol, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderKind {
    /// First difference from the left decides; a proper prefix comes first.
    Lex,
    RevLex,
    /// First difference from the right decides; a proper suffix comes first.
    Colex,
    RevColex,
}

impl OrderKind {
    pub const ALL: [OrderKind; 4] = [Self::Lex, Self::RevLex, Self::Colex, Self::RevColex];

    pub fn name(self) -> &'static str {
        match self {
            Self::Lex => "lex",
            Self::RevLex => "revlex",
            Self::Colex => "colex",
            Self::RevColex => "revcolex",
        }
    }

    /// The order this one is the reversal of.
    pub fn base(self) -> OrderKind {
        match self {
            Self::Lex | Self::RevLex => Self::Lex,
            Self::Colex | Self::RevColex => Self::Colex,
        }
    }

    pub fn is_reversed(self) -> bool {
        matches!(self, Self::RevLex | Self::RevColex)
    }
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OrderKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidSpec(format!("unknown order `{s}`")))
    }
}

pub fn compare(a: &Word, b: &Word, kind: OrderKind) -> Ordering {
    let base = match kind.base() {
        OrderKind::Lex => a.symbols().cmp(b.symbols()),
        _ => a.symbols().iter().rev().cmp(b.symbols().iter().rev()),
    };
    // Equal symbol strings are still ordered deterministically.
    let ord = base.then(a.alphabet_size().cmp(&b.alphabet_size()));
    if kind.is_reversed() {
        ord.reverse()
    } else {
        ord
    }
}

pub fn sort<I>(words: I, kind: OrderKind) -> Vec<Word>
where
    I: IntoIterator<Item = Word>,
{
    let mut out: Vec<Word> = words.into_iter().collect();
    out.sort_by(|a, b| compare(a, b, kind));
    out
}

/// `(a, b)` is suffix-related with respect to `(x, n)`: with `j` the 1-based
/// position of the first symbol of `b` that differs from `x`, `j <= n` and
/// the last `n - j` symbols of `a` and `b` agree.
pub fn suffix_related(a: &Word, b: &Word, x: Symbol, n: usize) -> bool {
    let Some(j) = b.symbols().iter().position(|&s| s != x).map(|i| i + 1) else {
        return false;
    };
    if j > n {
        return false;
    }
    let tail = n - j;
    tail <= a.len() && tail <= b.len() && a.symbols().ends_with(&b.symbols()[b.len() - tail..])
}

/// `(a, b)` is prefix-related with respect to `(x, n)`.
///
/// Scanning `a` from its last symbol, `j` counts how many trailing copies of
/// `x` precede the first symbol that differs from `x`. The pair is related
/// when `j < n` and the first `n - j - 1` symbols of `a` and `b` agree. This
/// is the mirror image of [`suffix_related`]:
/// `prefix_related(a, b) == suffix_related(rev(b), rev(a))`.
pub fn prefix_related(a: &Word, b: &Word, x: Symbol, n: usize) -> bool {
    let Some(j) = a.symbols().iter().rev().position(|&s| s != x) else {
        return false;
    };
    if j >= n {
        return false;
    }
    let head = n - j - 1;
    head <= a.len() && head <= b.len() && a.symbols()[..head] == b.symbols()[..head]
}
