use crate::word::{CyclicSequence, Symbol, Word, WordSet};

use super::{Condition, ConditionFailure, VerificationReport};

/// The sequence read cyclically, long enough that every one of its `len()`
/// windows of length `n` is a contiguous slice.
fn unrolled(symbols: &[Symbol], n: usize) -> Vec<Symbol> {
    let len = symbols.len();
    (0..len + n.saturating_sub(1))
        .map(|i| symbols[i % len])
        .collect()
}

fn empty_sequence() -> ConditionFailure {
    ConditionFailure::new(Condition::SequenceLength, None, "empty sequence")
}

/// Checks that the `|seq|` cyclic windows of length `n` are exactly the
/// members of `target`, each once.
pub fn is_universal_cycle(seq: &CyclicSequence, target: &WordSet, n: usize) -> VerificationReport {
    let k = seq.alphabet_size();
    if seq.is_empty() {
        return VerificationReport::new(
            target.clone(),
            WordSet::new(),
            WordSet::new(),
            vec![empty_sequence()],
        );
    }
    let buf = unrolled(seq.symbols(), n);
    let mut windows: Vec<&[Symbol]> = (0..seq.len()).map(|i| &buf[i..i + n]).collect();
    windows.sort_unstable();

    // Walk the sorted windows and the sorted target side by side.
    let to_word = |s: &[Symbol]| Word::from_raw(s.to_vec(), k);
    let mut missing = WordSet::new();
    let mut duplicated = WordSet::new();
    let mut unexpected = WordSet::new();
    let mut wanted = target.iter().peekable();
    let mut i = 0;
    while i < windows.len() {
        let window = windows[i];
        let run = windows[i..].iter().take_while(|w| **w == window).count();
        i += run;
        if run > 1 {
            duplicated.insert(to_word(window));
        }
        while let Some(w) = wanted.next_if(|w| w.symbols() < window) {
            missing.insert(w.clone());
        }
        if wanted.next_if(|w| w.symbols() == window).is_none() {
            unexpected.insert(to_word(window));
        }
    }
    missing.extend(wanted.cloned());

    VerificationReport::new(missing, duplicated, unexpected, Vec::new())
}

/// `true` when the cyclic windows of `symbols` are exactly the distinct
/// members of `target`, each once. The boolean core of
/// [`is_universal_cycle`] for callers holding borrowed words.
pub(crate) fn windows_match(symbols: &[Symbol], mut target: Vec<&[Symbol]>, n: usize) -> bool {
    if symbols.is_empty() {
        return false;
    }
    target.sort_unstable();
    target.dedup();
    if target.len() != symbols.len() {
        return false;
    }
    let buf = unrolled(symbols, n);
    let mut windows: Vec<&[Symbol]> = (0..symbols.len()).map(|i| &buf[i..i + n]).collect();
    windows.sort_unstable();
    windows == target
}

/// Checks that `seq` is a de Bruijn sequence for `Σ_k^n`: length `k^n` and
/// every length-`n` string over `k` symbols appears once as a cyclic window.
pub fn is_de_bruijn(seq: &CyclicSequence, k: usize, n: usize) -> VerificationReport {
    let expected_len = u32::try_from(n)
        .ok()
        .and_then(|e| (k as u64).checked_pow(e))
        .and_then(|t| usize::try_from(t).ok());
    let Some(expected_len) = expected_len else {
        return VerificationReport::from_failures(vec![ConditionFailure::new(
            Condition::SequenceLength,
            None,
            format!("{k}^{n} is too large to check"),
        )]);
    };
    if seq.len() != expected_len {
        return VerificationReport::from_failures(vec![ConditionFailure::new(
            Condition::SequenceLength,
            None,
            format!("length {} but {k}^{n} = {expected_len}", seq.len()),
        )]);
    }

    // Windows are counted by their base-k value.
    let buf = unrolled(seq.symbols(), n);
    let mut counts = vec![0u32; expected_len];
    let mut unexpected = WordSet::new();
    for i in 0..seq.len() {
        let window = &buf[i..i + n];
        if window.iter().any(|&s| s as usize >= k) {
            unexpected.insert(Word::from_raw(window.to_vec(), seq.alphabet_size()));
            continue;
        }
        let code = window.iter().fold(0usize, |acc, &s| acc * k + s as usize);
        counts[code] += 1;
    }

    let decode = |mut code: usize| {
        let mut symbols = vec![0; n];
        for slot in symbols.iter_mut().rev() {
            *slot = (code % k) as Symbol;
            code /= k;
        }
        Word::from_raw(symbols, k)
    };
    let missing = (0..expected_len)
        .filter(|&c| counts[c] == 0)
        .map(decode)
        .collect();
    let duplicated = (0..expected_len)
        .filter(|&c| counts[c] > 1)
        .map(decode)
        .collect();
    VerificationReport::new(missing, duplicated, unexpected, Vec::new())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str, k: usize) -> CyclicSequence {
        CyclicSequence::new(Word::parse(s, k).unwrap())
    }

    fn all(k: usize, n: usize) -> WordSet {
        let mut out = vec![vec![]];
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|p: Vec<u8>| {
                    (0..k as u8).map(move |s| {
                        let mut q = p.clone();
                        q.push(s);
                        q
                    })
                })
                .collect();
        }
        out.into_iter().map(|s| Word::new(s, k).unwrap()).collect()
    }

    #[test]
    fn ternary_example_is_de_bruijn() {
        let s = seq("000111222121101201002102202", 3);
        assert!(is_universal_cycle(&s, &all(3, 3), 3).passed);
        assert!(is_de_bruijn(&s, 3, 3).passed);
    }

    #[test]
    fn colex_of_reductions_misses_1111() {
        let s = seq("0101000100110111", 2);
        let report = is_universal_cycle(&s, &all(2, 4), 4);
        assert!(!report.passed);
        assert!(report.missing.contains(&Word::binary("1111").unwrap()));
        let report = is_de_bruijn(&s, 2, 4);
        assert!(report.missing.contains(&Word::binary("1111").unwrap()));
        assert!(!report.duplicated.is_empty());
    }

    #[test]
    fn window_longer_than_sequence_wraps() {
        let s = seq("01", 2);
        let target = Word::binary("01").unwrap().cyclic_substrings(5);
        assert!(is_universal_cycle(&s, &target, 5).passed);
    }

    #[test]
    fn de_bruijn_small_and_truncated() {
        assert!(is_de_bruijn(&seq("0011", 2), 2, 2).passed);
        let report = is_de_bruijn(&seq("000010011010111", 2), 2, 4);
        assert!(!report.passed);
        assert!(report.fails(Condition::SequenceLength));
        assert!(report.missing.is_empty());
    }

    #[test]
    fn extra_windows_are_reported() {
        let target: WordSet = ["00", "01", "11"]
            .iter()
            .map(|s| Word::binary(s).unwrap())
            .collect();
        let report = is_universal_cycle(&seq("0011", 2), &target, 2);
        assert!(!report.passed);
        assert_eq!(
            report.unexpected,
            [Word::binary("10").unwrap()].into_iter().collect()
        );
    }

    #[test]
    fn empty_sequence_fails() {
        let empty = CyclicSequence::new(Word::empty(2));
        let target: WordSet = [Word::binary("0").unwrap()].into_iter().collect();
        let report = is_universal_cycle(&empty, &target, 1);
        assert!(!report.passed);
        assert!(report.fails(Condition::SequenceLength));
    }

    #[test]
    fn de_bruijn_rejects_foreign_symbols() {
        let report = is_de_bruijn(&seq("0120", 3), 2, 2);
        assert!(!report.passed);
        assert!(!report.unexpected.is_empty());
    }
}
