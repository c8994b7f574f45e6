//! The built-in braid corpus and seeded random braid words.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::braid::BraidWord;

/// Seed for the random part of the corpus and for Markov conjugators.
pub const CORPUS_SEED: u64 = 0x5eed_0b7a_1d05;

/// Number of seeded random words in the corpus.
pub const RANDOM_WORDS: usize = 25;

/// Every positive word of length at most `max_len` in `B_n`, shortest first.
pub fn positive_words(n: usize, max_len: usize) -> Vec<BraidWord> {
    let gens = n.saturating_sub(1) as i32;
    let mut out = vec![BraidWord::identity(n)];
    let mut layer: Vec<Vec<i32>> = vec![Vec::new()];
    for _ in 0..max_len {
        if gens == 0 {
            break;
        }
        let mut next = Vec::new();
        for w in &layer {
            for g in 1..=gens {
                let mut v = w.clone();
                v.push(g);
                next.push(v);
            }
        }
        out.extend(next.iter().map(|v| BraidWord::new(n, v.clone()).expect("letters in range")));
        layer = next;
    }
    out
}

/// A word of length `len` in `B_n` with letters drawn uniformly from `±1..±(n−1)`.
pub fn random_word<R: Rng>(rng: &mut R, n: usize, len: usize) -> BraidWord {
    if n < 2 {
        return BraidWord::identity(n.max(1));
    }
    let letters = (0..len)
        .map(|_| {
            let g = rng.gen_range(1..n as i32);
            if rng.gen_bool(0.5) {
                g
            } else {
                -g
            }
        })
        .collect();
    BraidWord::new(n, letters).expect("letters in range")
}

/// `count` mixed-sign words with `2 ≤ n ≤ max_n` and `1 ≤ length ≤ max_len`.
pub fn random_words(seed: u64, count: usize, max_n: usize, max_len: usize) -> Vec<BraidWord> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(2..=max_n);
            let len = rng.gen_range(1..=max_len);
            random_word(&mut rng, n, len)
        })
        .collect()
}

/// Named braids used throughout the tests.
pub fn named() -> Vec<(&'static str, BraidWord)> {
    let w = |n: usize, l: &[i32]| BraidWord::new(n, l.to_vec()).expect("valid braid");
    vec![
        ("unknot", BraidWord::identity(1)),
        ("unlink2", BraidWord::identity(2)),
        ("hopf", w(2, &[1, 1])),
        ("trefoil", w(2, &[1, 1, 1])),
        ("inverse", w(2, &[-1])),
        ("figure-eight", w(3, &[1, -2, 1, -2])),
        ("showcase", w(3, &[1, 2, 2, 1, 2, 2])),
    ]
}

/// Positive `B_3` words up to length 5, the named braids, then the seeded random words.
/// Duplicates are dropped, keeping the first occurrence.
pub fn builtin() -> Vec<BraidWord> {
    let mut out: Vec<BraidWord> = Vec::new();
    let all = positive_words(3, 5)
        .into_iter()
        .chain(named().into_iter().map(|(_, b)| b))
        .chain(random_words(CORPUS_SEED, RANDOM_WORDS, 4, 8));
    for b in all {
        if !out.contains(&b) {
            out.push(b);
        }
    }
    out
}

/// Corpus file contents for [`builtin`].
pub fn render(corpus: &[BraidWord]) -> String {
    let mut s = format!("# built-in corpus, random part seeded with {CORPUS_SEED:#x}\n");
    for b in corpus {
        s.push_str(&b.to_corpus_line());
        s.push('\n');
    }
    s
}
