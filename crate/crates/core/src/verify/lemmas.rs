use crate::error::{Error, Result};
use crate::family::{extended_co_necklaces, rotated_extended_co_necklaces, Limits};
use crate::order::{compare, prefix_related, sort, OrderKind};
use crate::word::Word;

use super::{Condition, ConditionFailure, VerificationReport};

/// Evaluates the two co-necklace lemmas exhaustively for length `n`:
/// consecutive members of `revcolex(coN(n))` have colex-increasing length-`n`
/// prefixes, and for `α, β ∈ C(n)`, prefix-relatedness of `pre_n(α)` and
/// `pre_n(β)` w.r.t. `(x, n)` implies that of `α` and `β` w.r.t. `(1-x, n)`.
pub fn lemma_properties(n: usize, limits: &Limits) -> Result<VerificationReport> {
    if n < 2 {
        return Err(Error::InvalidSpec(format!("lemmas need n >= 2, got {n}")));
    }
    let mut failures = Vec::new();

    let listing = sort(extended_co_necklaces(n, limits)?, OrderKind::RevColex);
    let heads: Vec<Word> = listing.iter().map(|a| a.prefix(n)).collect::<Result<_>>()?;
    for (i, pair) in heads.windows(2).enumerate() {
        if compare(&pair[0], &pair[1], OrderKind::Colex).is_ge() {
            failures.push(ConditionFailure::new(
                Condition::Lemma1,
                Some(i),
                format!("{} then {}", listing[i], listing[i + 1]),
            ));
        }
    }

    let family: Vec<Word> = rotated_extended_co_necklaces(n, limits)?
        .into_iter()
        .collect();
    let heads: Vec<Word> = family.iter().map(|a| a.prefix(n)).collect::<Result<_>>()?;
    for (a, head_a) in family.iter().zip(&heads) {
        for (b, head_b) in family.iter().zip(&heads) {
            for x in 0..2 {
                if prefix_related(head_a, head_b, x, n) && !prefix_related(a, b, 1 - x, n) {
                    failures.push(ConditionFailure::new(
                        Condition::Lemma2,
                        None,
                        format!("({a}, {b}) with x = {x}"),
                    ));
                }
            }
        }
    }
    Ok(VerificationReport::from_failures(failures))
}
