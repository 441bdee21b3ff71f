//! The UC-partitions each construction's correctness argument is built on.
//!
//! Every construction concatenates `pr(α_i)` over its selected listing. For
//! the lex, colex and revlex-rotated schemes the two cycles at the boundary
//! end (`0^n` and `0^{n-1}1`, or `(k-2)(k-1)^{n-1}` and `(k-1)^n`, or
//! `10^{n-1}` and `0^n`) are merged into one cycle first, since a lone
//! `pr(x^n) = x` is shorter than `n`.

use crate::concat::{ConstructionSpec, Scheme};
use crate::error::Result;
use crate::family::Limits;
use crate::word::{Word, WordSet};

use super::conditions::UCPartition;
use super::VerificationReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConcatRule {
    /// Suffix-related form, boundary at the first cycle.
    Theorem1,
    /// Prefix-related form, boundary at the last cycle.
    Corollary1,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub rule: ConcatRule,
    pub partition: UCPartition,
}

impl Decomposition {
    pub fn check(&self) -> VerificationReport {
        match self.rule {
            ConcatRule::Theorem1 => self.partition.check_theorem1(),
            ConcatRule::Corollary1 => self.partition.check_corollary1(),
        }
    }

    pub fn conclusion_holds(&self) -> bool {
        match self.rule {
            ConcatRule::Theorem1 => self.partition.theorem1_conclusion_holds(),
            ConcatRule::Corollary1 => self.partition.corollary1_conclusion_holds(),
        }
    }
}

fn merged(a: &Word, b: &Word, n: usize) -> (Word, WordSet) {
    let cycle = a.periodic_reduction().concat(&b.periodic_reduction());
    let mut set = a.cyclic_substrings(n);
    set.extend(b.cyclic_substrings(n));
    (cycle, set)
}

fn single(a: &Word, n: usize) -> (Word, WordSet) {
    (a.periodic_reduction(), a.cyclic_substrings(n))
}

pub fn proof_decomposition(spec: &ConstructionSpec, limits: &Limits) -> Result<Decomposition> {
    let n = spec.n;
    let listing = spec.listing(limits)?;
    let m = listing.len();

    let (rule, parts): (ConcatRule, Vec<(Word, WordSet)>) = match spec.scheme {
        Scheme::LexNecklace | Scheme::RevlexRotatedNecklace => {
            let mut parts: Vec<_> = listing[..m - 2].iter().map(|a| single(a, n)).collect();
            parts.push(merged(&listing[m - 2], &listing[m - 1], n));
            (ConcatRule::Corollary1, parts)
        }
        Scheme::ColexNecklace => {
            let mut parts = vec![merged(&listing[0], &listing[1], n)];
            parts.extend(listing[2..].iter().map(|a| single(a, n)));
            (ConcatRule::Theorem1, parts)
        }
        Scheme::RevcolexCoNecklace => (
            ConcatRule::Theorem1,
            listing.iter().map(|a| single(a, n)).collect(),
        ),
        Scheme::LexRotatedCoNecklace => (
            ConcatRule::Corollary1,
            listing.iter().map(|a| single(a, n)).collect(),
        ),
    };

    let (cycles, sets) = parts.into_iter().unzip();
    Ok(Decomposition {
        rule,
        partition: UCPartition::new(cycles, sets, n)?,
    })
}
