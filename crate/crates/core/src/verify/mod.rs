//! Independent checking of constructions.
//!
//! Universal-cycle checks read windows straight off the symbol buffer and do
//! not go through the construction code. The condition checkers evaluate the
//! three sufficient conditions for concatenating a UC-partition's cycles, in
//! both the prefix-run/suffix-related form and its mirror image.

mod conditions;
mod cycle;
mod decompose;
mod greedy;
mod lemmas;

use std::fmt;

use serde::Serialize;

use crate::word::WordSet;

pub use conditions::{
    check_corollary1, check_theorem1, corollary1_conclusion_holds, theorem1_conclusion_holds, Part,
    UCPartition,
};
pub use cycle::{is_de_bruijn, is_universal_cycle};
pub use decompose::{proof_decomposition, ConcatRule, Decomposition};
pub use greedy::greedy_prefer_smallest;
pub use lemmas::lemma_properties;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Condition {
    /// Sequence length does not match the target size.
    SequenceLength,
    /// The parts are not a UC-partition (overlapping sets, or a cycle that is
    /// not a universal cycle for its set).
    Partition,
    /// Condition 1: the boundary cycle has length at least `n`.
    CycleLength,
    /// Condition 2: the boundary cycle has the longest run of `x`.
    MaximalRun,
    /// Condition 3: consecutive extended cycles are suffix- (or prefix-)
    /// related.
    Related,
    /// Consecutive `revcolex(coN(n))` strings have colex-ordered prefixes.
    Lemma1,
    /// Prefix-relatedness of length-`n` prefixes lifts to `C(n)` members.
    Lemma2,
}

impl Condition {
    pub fn id(self) -> &'static str {
        match self {
            Self::SequenceLength => "sequence-length",
            Self::Partition => "partition",
            Self::CycleLength => "cycle-length",
            Self::MaximalRun => "maximal-run",
            Self::Related => "related",
            Self::Lemma1 => "lemma1",
            Self::Lemma2 => "lemma2",
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionFailure {
    pub condition: Condition,
    /// 0-based index of the offending cycle or pair, when there is one.
    pub index: Option<usize>,
    pub witness: String,
}

impl ConditionFailure {
    pub fn new(condition: Condition, index: Option<usize>, witness: impl Into<String>) -> Self {
        Self {
            condition,
            index,
            witness: witness.into(),
        }
    }
}

/// Outcome of a check. `passed` holds exactly when every witness collection
/// is empty.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub passed: bool,
    /// Target strings that never occur as a window.
    pub missing: WordSet,
    /// Windows occurring more than once.
    pub duplicated: WordSet,
    /// Windows that are not in the target set.
    pub unexpected: WordSet,
    pub condition_failures: Vec<ConditionFailure>,
}

impl VerificationReport {
    pub fn new(
        missing: WordSet,
        duplicated: WordSet,
        unexpected: WordSet,
        condition_failures: Vec<ConditionFailure>,
    ) -> Self {
        let passed = missing.is_empty()
            && duplicated.is_empty()
            && unexpected.is_empty()
            && condition_failures.is_empty();
        Self {
            passed,
            missing,
            duplicated,
            unexpected,
            condition_failures,
        }
    }

    pub fn pass() -> Self {
        Self::new(WordSet::new(), WordSet::new(), WordSet::new(), Vec::new())
    }

    pub fn from_failures(condition_failures: Vec<ConditionFailure>) -> Self {
        Self::new(
            WordSet::new(),
            WordSet::new(),
            WordSet::new(),
            condition_failures,
        )
    }

    pub fn failed_conditions(&self) -> Vec<Condition> {
        let mut out: Vec<Condition> = self
            .condition_failures
            .iter()
            .map(|f| f.condition)
            .collect();
        out.dedup();
        out
    }

    pub fn fails(&self, condition: Condition) -> bool {
        self.condition_failures
            .iter()
            .any(|f| f.condition == condition)
    }
}

fn write_set(f: &mut fmt::Formatter<'_>, label: &str, set: &WordSet) -> fmt::Result {
    const SHOWN: usize = 16;
    if set.is_empty() {
        return Ok(());
    }
    write!(f, "\n{label} ({}):", set.len())?;
    for word in set.iter().take(SHOWN) {
        write!(f, " {word}")?;
    }
    if set.len() > SHOWN {
        f.write_str(" ...")?;
    }
    Ok(())
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.passed { "PASS" } else { "FAIL" })?;
        write_set(f, "missing", &self.missing)?;
        write_set(f, "duplicated", &self.duplicated)?;
        write_set(f, "unexpected", &self.unexpected)?;
        for failure in &self.condition_failures {
            write!(f, "\n{}", failure.condition)?;
            if let Some(i) = failure.index {
                write!(f, " at {i}")?;
            }
            write!(f, ": {}", failure.witness)?;
        }
        Ok(())
    }
}
