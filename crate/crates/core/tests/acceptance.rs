//! Acceptance suite. Run with `--nocapture` to see one line per criterion.

use std::io::Write;
use std::panic::{self, AssertUnwindSafe};
use std::thread;
use std::time::Instant;

use dbcat::family::{extended_co_necklaces, necklaces};
use dbcat::verify::{greedy_prefer_smallest, lemma_properties, proof_decomposition, UCPartition};
use dbcat::{
    construct, is_de_bruijn, is_universal_cycle, segments, sort, target_set, uc_concat,
    ConstructionSpec, CyclicSequence, Limits, OrderKind, Scheme, Word, WordSet,
};

const GRID_BOUND: usize = 20_000;

fn lim() -> Limits {
    Limits::default()
}

fn b(s: &str) -> Word {
    Word::binary(s).unwrap()
}

fn pow(k: usize, n: usize) -> usize {
    k.pow(n as u32)
}

/// Every `(scheme, k, n)` with `n >= 2`, `k <= 4` (`k = 2` for the
/// co-necklace schemes) and `k^n <= 20000`.
fn grid() -> Vec<(Scheme, usize, usize)> {
    let mut out = Vec::new();
    for scheme in Scheme::ALL {
        let alphabets: &[usize] = if scheme.is_binary_only() {
            &[2]
        } else {
            &[2, 3, 4]
        };
        for &k in alphabets {
            for n in 2.. {
                if pow(k, n) > GRID_BOUND {
                    break;
                }
                out.push((scheme, k, n));
            }
        }
    }
    out
}

/// Runs `check` on every item across all available threads and gathers the
/// error messages.
fn sharded<T, F>(items: Vec<T>, check: F) -> Vec<String>
where
    T: Send,
    F: Fn(T) -> Vec<String> + Sync,
{
    let workers = thread::available_parallelism().map_or(4, |n| n.get());
    let queue = std::sync::Mutex::new(items);
    let check = &check;
    let queue = &queue;
    thread::scope(|s| {
        let handles: Vec<_> = (0..workers)
            .map(|_| {
                s.spawn(move || {
                    let mut errors = Vec::new();
                    loop {
                        let Some(item) = queue.lock().unwrap().pop() else {
                            break;
                        };
                        errors.extend(check(item));
                    }
                    errors
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().unwrap())
            .collect()
    })
}

fn ensure(errors: Vec<String>) -> Result<String, String> {
    if errors.is_empty() {
        Ok(String::new())
    } else {
        let shown: Vec<_> = errors.iter().take(5).cloned().collect();
        Err(format!("{} failure(s): {}", errors.len(), shown.join("; ")))
    }
}

fn family_size(scheme: Scheme, k: usize, n: usize) -> usize {
    ConstructionSpec::full(scheme, k, n)
        .listing(&lim())
        .unwrap()
        .len()
}

fn golden_sequences() -> Result<String, String> {
    let table = [
        (
            Scheme::LexNecklace,
            "0000001000011000101000111001001011001101001111010101110110111111",
        ),
        (
            Scheme::ColexNecklace,
            "0000001001000101010011010000110010110110001110101110011110111111",
        ),
        (
            Scheme::RevlexRotatedNecklace,
            "1111110111100111000110110100110000101110101100101010001001000000",
        ),
        (
            Scheme::RevcolexCoNecklace,
            "0000001111110001001110110011000010111101001010110101000110111001",
        ),
        (
            Scheme::LexRotatedCoNecklace,
            "1001110110001010110101001011110100001100110111001000111111000000",
        ),
    ];
    let mut errors = Vec::new();
    for (scheme, expected) in table {
        let got = construct(&ConstructionSpec::full(scheme, 2, 6), &lim()).unwrap();
        if got.sequence.to_string() != expected {
            errors.push(format!("{scheme}: got {}", got.sequence));
        }
        if !is_de_bruijn(&got.sequence, 2, 6).passed {
            errors.push(format!("{scheme}: not de Bruijn"));
        }
    }
    ensure(errors)
}

fn worked_examples() -> Result<String, String> {
    let mut errors = Vec::new();
    let lex = construct(&ConstructionSpec::full(Scheme::LexNecklace, 2, 4), &lim()).unwrap();
    if lex.sequence.to_string() != "0000100110101111" {
        errors.push(format!("lex Neck_2(4): {}", lex.sequence));
    }
    let colex = construct(&ConstructionSpec::full(Scheme::ColexNecklace, 2, 4), &lim()).unwrap();
    if colex.sequence.to_string() != "0000101001101111" {
        errors.push(format!("colex Neck_2(4): {}", colex.sequence));
    }
    let cycles = vec![b("0000011111"), b("0010011011"), b("0001011101"), b("01")];
    let partition = UCPartition::from_cycles(cycles, 5).unwrap();
    let report = is_de_bruijn(&partition.concatenation(), 2, 5);
    if !report.passed {
        errors.push(format!("worked concatenation: {report}"));
    }
    if !partition.check_theorem1().passed {
        errors.push("worked concatenation fails the suffix-form conditions".into());
    }
    ensure(errors)
}

fn negative_controls() -> Result<String, String> {
    let mut errors = Vec::new();
    let mut expect_missing =
        |label: &str, seq: &CyclicSequence, expected: &str, n: usize, absent: &str| {
            if seq.to_string() != expected {
                errors.push(format!("{label}: built {seq}, expected {expected}"));
            }
            let report = is_de_bruijn(seq, 2, n);
            if report.passed || !report.missing.contains(&b(absent)) {
                errors.push(format!(
                    "{label}: expected {absent} missing, report {report}"
                ));
            }
        };

    // Reductions of Neck_2(4) sorted in colex, rather than necklaces sorted
    // first and then reduced.
    let reductions: Vec<Word> = necklaces(2, 4, &lim())
        .unwrap()
        .iter()
        .map(Word::periodic_reduction)
        .collect();
    let sorted = sort(reductions, OrderKind::Colex);
    let seq = CyclicSequence::new(sorted.iter().fold(Word::empty(2), |acc, w| acc.concat(w)));
    expect_missing("colex of reductions", &seq, "0101000100110111", 4, "1111");

    let revlex = sort(necklaces(2, 5, &lim()).unwrap(), OrderKind::RevLex);
    let seq = uc_concat(&revlex).sequence;
    expect_missing(
        "revlex Neck_2(5)",
        &seq,
        "10111101011001110010100011000010",
        5,
        "00000",
    );

    for order in [OrderKind::Lex, OrderKind::Colex] {
        let listing = sort(extended_co_necklaces(5, &lim()).unwrap(), order);
        let seq = uc_concat(&listing).sequence;
        let report = is_de_bruijn(&seq, 2, 5);
        if report.passed || !report.missing.contains(&b("10101")) {
            errors.push(format!(
                "{order} coN(5): expected 10101 missing, report {report}"
            ));
        }
    }
    ensure(errors)
}

fn corollary_grid() -> Result<String, String> {
    let cases = grid();
    let count = cases.len();
    let errors = sharded(cases, |(scheme, k, n)| {
        let spec = ConstructionSpec::full(scheme, k, n);
        match construct(&spec, &lim()) {
            Ok(result) => {
                let report = is_de_bruijn(&result.sequence, k, n);
                if report.passed {
                    vec![]
                } else {
                    vec![format!("{spec}: {report}")]
                }
            }
            Err(e) => vec![format!("{spec}: {e}")],
        }
    });
    ensure(errors).map(|_| format!("{count} constructions"))
}

/// Every legal partial selection over the grid, each with its family size.
fn partial_specs() -> Vec<(ConstructionSpec, usize)> {
    let mut specs = Vec::new();
    for (scheme, k, n) in grid() {
        let size = family_size(scheme, k, n);
        for m in scheme.min_partial()..=size {
            specs.push((ConstructionSpec::partial(scheme, k, n, m), size));
        }
    }
    specs
}

fn partial_grid() -> Result<String, String> {
    let specs = partial_specs();
    let count = specs.len();
    let errors = sharded(specs, |(spec, size)| {
        let result = match construct(&spec, &lim()) {
            Ok(r) => r,
            Err(e) => return vec![format!("{spec}: {e}")],
        };
        let mut errors = Vec::new();
        if result.target_set.iter().any(|w| w.len() != spec.n) {
            errors.push(format!("{spec}: target set has wrong word length"));
        }
        let report = is_universal_cycle(&result.sequence, &result.target_set, spec.n);
        if !report.passed {
            errors.push(format!("{spec}: {report}"));
        }
        // A full selection must reach every string.
        if spec.m == Some(size) && result.target_set.len() != pow(spec.k, spec.n) {
            errors.push(format!("{spec}: full selection misses strings"));
        }
        errors
    });
    // Spot-check that the recorded target set is the one `target_set` returns.
    let spec = ConstructionSpec::partial(Scheme::ColexNecklace, 3, 4, 7);
    let mut errors = errors;
    if construct(&spec, &lim()).unwrap().target_set != target_set(&spec, &lim()).unwrap() {
        errors.push(format!("{spec}: target sets disagree"));
    }
    ensure(errors).map(|_| format!("{count} partial constructions"))
}

fn condition_checkers() -> Result<String, String> {
    let mut specs: Vec<ConstructionSpec> = grid()
        .into_iter()
        .map(|(s, k, n)| ConstructionSpec::full(s, k, n))
        .collect();
    specs.extend(partial_specs().into_iter().map(|(spec, _)| spec));
    let count = specs.len();
    let errors = sharded(specs, |spec| {
        let decomposition = match proof_decomposition(&spec, &lim()) {
            Ok(d) => d,
            Err(e) => return vec![format!("{spec}: {e}")],
        };
        let mut errors = Vec::new();
        let report = decomposition.check();
        if !report.passed {
            errors.push(format!("{spec}: {report}"));
        }
        if !decomposition.conclusion_holds() {
            errors.push(format!("{spec}: conclusion fails"));
        }
        let built: Vec<u8> = segments(&spec, &lim())
            .unwrap()
            .flat_map(|w| w.into_symbols())
            .collect();
        if decomposition.partition.concatenation().symbols() != built.as_slice() {
            errors.push(format!(
                "{spec}: decomposition does not concatenate to the construction"
            ));
        }
        errors
    });
    ensure(errors).map(|_| format!("{count} decompositions"))
}

fn oracle_equivalence() -> Result<String, String> {
    let cases: Vec<_> = grid()
        .into_iter()
        .filter(|(s, _, _)| *s == Scheme::LexNecklace)
        .map(|(_, k, n)| (k, n))
        .collect();
    let count = cases.len();
    let errors = sharded(cases, |(k, n)| {
        let greedy = greedy_prefer_smallest(k, n, &lim()).unwrap();
        let built = construct(&ConstructionSpec::full(Scheme::LexNecklace, k, n), &lim()).unwrap();
        if greedy == built.sequence {
            vec![]
        } else {
            vec![format!(
                "k={k} n={n}: greedy {greedy} vs {}",
                built.sequence
            )]
        }
    });
    ensure(errors).map(|_| format!("{count} (k, n) pairs"))
}

fn lemma_suite() -> Result<String, String> {
    let errors = sharded((2..=9).collect(), |n| match lemma_properties(n, &lim()) {
        Ok(report) if report.passed => vec![],
        Ok(report) => vec![format!("n={n}: {report}")],
        Err(e) => vec![format!("n={n}: {e}")],
    });
    ensure(errors).map(|_| "n = 2..=9".to_string())
}

fn brute_force_necklace_count(k: usize, n: usize) -> usize {
    let mut count = 0;
    for code in 0..pow(k, n) {
        let mut digits = vec![0usize; n];
        let mut c = code;
        for d in digits.iter_mut().rev() {
            *d = c % k;
            c /= k;
        }
        let canonical = (1..n).all(|r| {
            let rotated: Vec<usize> = digits[r..].iter().chain(&digits[..r]).copied().collect();
            digits <= rotated
        });
        count += canonical as usize;
    }
    count
}

fn counting() -> Result<String, String> {
    let cases: Vec<_> = grid()
        .into_iter()
        .filter(|(s, _, _)| *s == Scheme::LexNecklace)
        .map(|(_, k, n)| (k, n))
        .collect();
    let errors = sharded(cases, |(k, n)| {
        let mut errors = Vec::new();
        let set: WordSet = necklaces(k, n, &lim()).unwrap();
        let expected = brute_force_necklace_count(k, n);
        if set.len() != expected {
            errors.push(format!(
                "k={k} n={n}: {} necklaces, brute force {expected}",
                set.len()
            ));
        }
        let total: usize = set.iter().map(|w| w.periodic_reduction().len()).sum();
        if total != pow(k, n) {
            errors.push(format!("k={k} n={n}: reductions sum to {total}"));
        }
        errors
    });
    ensure(errors)
}

type Criterion = fn() -> Result<String, String>;

/// Writes past the test harness's output capture so the per-criterion lines
/// show up in a plain `cargo test` run too.
fn report(line: String) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{line}");
    let _ = out.flush();
}

#[test]
fn acceptance() {
    let criteria: [(&str, Criterion); 9] = [
        ("golden sequences", golden_sequences),
        ("small worked examples", worked_examples),
        ("negative controls", negative_controls),
        ("full construction grid", corollary_grid),
        ("partial construction grid", partial_grid),
        ("concatenation condition checkers", condition_checkers),
        ("greedy oracle equivalence", oracle_equivalence),
        ("co-necklace lemmas", lemma_suite),
        ("necklace counting", counting),
    ];

    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        let elapsed = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => {
                let detail = if detail.is_empty() {
                    String::new()
                } else {
                    format!(" ({detail})")
                };
                report(format!(
                    "criterion {}: PASS {name}{detail} [{elapsed:.2}s]",
                    i + 1
                ));
            }
            Err(why) => {
                report(format!(
                    "criterion {}: FAIL {name}: {why} [{elapsed:.2}s]",
                    i + 1
                ));
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
