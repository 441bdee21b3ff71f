use crate::error::{Error, Result};
use crate::family::Limits;
use crate::word::{check_alphabet, CyclicSequence, Symbol, Word};

/// The prefer-smallest greedy de Bruijn sequence, an oracle for the
/// lexicographic necklace construction.
///
/// Starting from `(k-1)^n`, the smallest symbol whose new window has not been
/// seen is appended until no symbol can be. The first `n - 1` symbols are then
/// dropped and the remaining `k^n` are rotated to begin with `0^n`, which makes
/// the result the lexicographically smallest de Bruijn sequence.
pub fn greedy_prefer_smallest(k: usize, n: usize, limits: &Limits) -> Result<CyclicSequence> {
    check_alphabet(k)?;
    if k < 2 || n == 0 {
        return Err(Error::InvalidSpec(format!(
            "greedy needs k >= 2 and n >= 1, got k={k}, n={n}"
        )));
    }
    let total = limits.check(k, n)? as usize;

    let top = (k - 1) as Symbol;
    let mut symbols: Vec<Symbol> = vec![top; n];
    let mut seen = vec![false; total];
    let mut code = total - 1;
    seen[code] = true;
    loop {
        let base = (code * k) % total;
        match (0..k).find(|&s| !seen[base + s]) {
            Some(s) => {
                code = base + s;
                seen[code] = true;
                symbols.push(s as Symbol);
            }
            None => break,
        }
    }

    let tail = symbols.split_off(n - 1);
    let word = Word::from_raw(tail, k);
    let start = (0..word.len())
        .find(|&i| (0..n).all(|j| word.symbols()[(i + j) % word.len()] == 0))
        .unwrap_or(0);
    Ok(CyclicSequence::new(word.rotate(start)?))
}
