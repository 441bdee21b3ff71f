use crate::error::{Error, Result};
use crate::order::{prefix_related, suffix_related};
use crate::word::{CyclicSequence, Symbol, Word, WordSet};

use super::cycle::windows_match;
use super::{Condition, ConditionFailure, VerificationReport};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Part {
    pub set: WordSet,
    pub cycle: Word,
}

/// Disjoint sets of length-`n` strings, each paired with a universal cycle
/// for it. Construction only checks alignment; [`UCPartition::structure`]
/// reports whether the pairing actually is a UC-partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UCPartition {
    parts: Vec<Part>,
    n: usize,
}

impl UCPartition {
    pub fn new(cycles: Vec<Word>, sets: Vec<WordSet>, n: usize) -> Result<Self> {
        if cycles.len() != sets.len() || cycles.is_empty() {
            return Err(Error::Misaligned {
                cycles: cycles.len(),
                sets: sets.len(),
            });
        }
        let parts = cycles
            .into_iter()
            .zip(sets)
            .map(|(cycle, set)| Part { set, cycle })
            .collect();
        Ok(Self { parts, n })
    }

    /// Pairs each cycle with its own set of cyclic windows.
    pub fn from_cycles(cycles: Vec<Word>, n: usize) -> Result<Self> {
        let sets = cycles.iter().map(|c| c.cyclic_substrings(n)).collect();
        Self::new(cycles, sets, n)
    }

    pub fn parts(&self) -> &[Part] {
        &self.parts
    }

    pub fn cycles(&self) -> impl Iterator<Item = &Word> {
        self.parts.iter().map(|p| &p.cycle)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn union(&self) -> WordSet {
        self.parts
            .iter()
            .flat_map(|p| p.set.iter().cloned())
            .collect()
    }

    /// `α₁ α₂ ⋯ α_m`.
    pub fn concatenation(&self) -> CyclicSequence {
        let k = self.parts[0].cycle.alphabet_size();
        let symbols = self
            .parts
            .iter()
            .flat_map(|p| p.cycle.symbols().iter().copied())
            .collect();
        CyclicSequence::new(Word::from_raw(symbols, k))
    }

    /// Reverses the order of the parts and every word in them. A partition
    /// satisfying the prefix-form conditions maps to one satisfying the
    /// suffix-form conditions, and back.
    pub fn reversed(&self) -> Self {
        let parts = self
            .parts
            .iter()
            .rev()
            .map(|p| Part {
                set: p.set.iter().map(Word::reverse).collect(),
                cycle: p.cycle.reverse(),
            })
            .collect();
        Self { parts, n: self.n }
    }

    /// Failures of the UC-partition structure: every set member has length
    /// `n`, sets are pairwise disjoint, and each cycle is a universal cycle
    /// for its set.
    pub fn structure(&self) -> Vec<ConditionFailure> {
        let mut failures = Vec::new();
        for (i, part) in self.parts.iter().enumerate() {
            if let Some(bad) = part.set.iter().find(|w| w.len() != self.n) {
                failures.push(ConditionFailure::new(
                    Condition::Partition,
                    Some(i),
                    format!("set member {bad} does not have length {}", self.n),
                ));
                continue;
            }
            let target = part.set.iter().map(Word::symbols).collect();
            if !windows_match(part.cycle.symbols(), target, self.n) {
                failures.push(ConditionFailure::new(
                    Condition::Partition,
                    Some(i),
                    format!("{} is not a universal cycle for its set", part.cycle),
                ));
            }
        }

        // Sort every member tagged with its part; a repeat is a shared string.
        let mut tagged: Vec<(&Word, usize)> = self
            .parts
            .iter()
            .enumerate()
            .flat_map(|(i, p)| p.set.iter().map(move |w| (w, i)))
            .collect();
        tagged.sort_unstable();
        let shared = tagged
            .windows(2)
            .filter(|pair| pair[0].0 == pair[1].0)
            .min_by_key(|pair| pair[1].1);
        if let Some(pair) = shared {
            failures.push(ConditionFailure::new(
                Condition::Partition,
                Some(pair[1].1),
                format!("{} belongs to more than one set", pair[1].0),
            ));
        }
        failures
    }

    fn concatenation_covers_union(&self, u: &CyclicSequence) -> bool {
        let union = self
            .parts
            .iter()
            .flat_map(|p| p.set.iter().map(Word::symbols))
            .collect();
        windows_match(u.symbols(), union, self.n)
    }

    /// Conditions under which `α₁ ⋯ α_m` is a universal cycle for the union,
    /// with `x` the first symbol of `α₁`:
    /// 1. `|α₁| >= n`;
    /// 2. no cycle starts with a longer run of `x` than `α₁`;
    /// 3. `(ext_n(α_i), ext_n(α_{i+1}))` is suffix-related w.r.t. `(x, n)`.
    pub fn check_theorem1(&self) -> VerificationReport {
        let n = self.n;
        let mut failures = self.structure();
        let head = &self.parts[0].cycle;
        let x = head.first().unwrap_or(0);

        if head.len() < n {
            failures.push(ConditionFailure::new(
                Condition::CycleLength,
                Some(0),
                format!("|{head}| = {} < n = {n}", head.len()),
            ));
        }
        let best = head.leading_run(x);
        if let Some((i, c)) = self
            .cycles()
            .enumerate()
            .find(|(_, c)| c.leading_run(x) > best)
        {
            failures.push(ConditionFailure::new(
                Condition::MaximalRun,
                Some(i),
                format!(
                    "{c} starts with {} copies of {x}, first cycle only {best}",
                    c.leading_run(x)
                ),
            ));
        }
        if let Some(failure) = first_unrelated(self, x, suffix_related, "suffix") {
            failures.push(failure);
        }
        VerificationReport::from_failures(failures)
    }

    /// Mirror image of [`Self::check_theorem1`]: `x` is the last symbol of
    /// `α_m`, which must have length `>= n` and the longest trailing run of
    /// `x`, and consecutive extended cycles must be prefix-related.
    pub fn check_corollary1(&self) -> VerificationReport {
        let n = self.n;
        let mut failures = self.structure();
        let m = self.parts.len();
        let tail = &self.parts[m - 1].cycle;
        let x = tail.last().unwrap_or(0);

        if tail.len() < n {
            failures.push(ConditionFailure::new(
                Condition::CycleLength,
                Some(m - 1),
                format!("|{tail}| = {} < n = {n}", tail.len()),
            ));
        }
        let best = tail.trailing_run(x);
        if let Some((i, c)) = self
            .cycles()
            .enumerate()
            .find(|(_, c)| c.trailing_run(x) > best)
        {
            failures.push(ConditionFailure::new(
                Condition::MaximalRun,
                Some(i),
                format!(
                    "{c} ends with {} copies of {x}, last cycle only {best}",
                    c.trailing_run(x)
                ),
            ));
        }
        if let Some(failure) = first_unrelated(self, x, prefix_related, "prefix") {
            failures.push(failure);
        }
        VerificationReport::from_failures(failures)
    }

    /// The conclusion of the suffix-form conditions: the concatenation is a
    /// universal cycle for the union and ends with `suff_n(ext_n(α_m))`.
    pub fn theorem1_conclusion_holds(&self) -> bool {
        let n = self.n;
        let u = self.concatenation();
        let last = self.parts[self.parts.len() - 1].cycle.extend(n);
        self.concatenation_covers_union(&u)
            && u.len() >= n
            && last.len() >= n
            && u.symbols().ends_with(&last.symbols()[last.len() - n..])
    }

    /// The conclusion of the prefix-form conditions: the concatenation is a
    /// universal cycle for the union and starts with `pre_n(ext_n(α₁))`.
    pub fn corollary1_conclusion_holds(&self) -> bool {
        let n = self.n;
        let u = self.concatenation();
        let first = self.parts[0].cycle.extend(n);
        self.concatenation_covers_union(&u)
            && u.len() >= n
            && first.len() >= n
            && u.symbols().starts_with(&first.symbols()[..n])
    }
}

fn first_unrelated(
    partition: &UCPartition,
    x: Symbol,
    related: fn(&Word, &Word, Symbol, usize) -> bool,
    kind: &str,
) -> Option<ConditionFailure> {
    let n = partition.n;
    let extended: Vec<Word> = partition.cycles().map(|c| c.extend(n)).collect();
    extended
        .windows(2)
        .position(|pair| !related(&pair[0], &pair[1], x, n))
        .map(|i| {
            ConditionFailure::new(
                Condition::Related,
                Some(i),
                format!(
                    "({}, {}) not {kind}-related w.r.t. ({x}, {n})",
                    extended[i],
                    extended[i + 1]
                ),
            )
        })
}

pub fn check_theorem1(cycles: &[Word], sets: &[WordSet], n: usize) -> Result<VerificationReport> {
    Ok(UCPartition::new(cycles.to_vec(), sets.to_vec(), n)?.check_theorem1())
}

pub fn check_corollary1(cycles: &[Word], sets: &[WordSet], n: usize) -> Result<VerificationReport> {
    Ok(UCPartition::new(cycles.to_vec(), sets.to_vec(), n)?.check_corollary1())
}

pub fn theorem1_conclusion_holds(cycles: &[Word], sets: &[WordSet], n: usize) -> Result<bool> {
    Ok(UCPartition::new(cycles.to_vec(), sets.to_vec(), n)?.theorem1_conclusion_holds())
}

pub fn corollary1_conclusion_holds(cycles: &[Word], sets: &[WordSet], n: usize) -> Result<bool> {
    Ok(UCPartition::new(cycles.to_vec(), sets.to_vec(), n)?.corollary1_conclusion_holds())
}
