//! Braid words, exponent statistics, Markov moves and the rewriter for
//! sandwiches `σ_n α σ_n` of positive words.

use std::fmt;

use crate::symgroup::Permutation;

/// A word in the Artin generators of `B_n`. Letter `i > 0` is `σ_i`, `i < 0` is `σ_{|i|}^{-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    n: usize,
    letters: Vec<i32>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BraidError {
    #[error("malformed token `{token}` at byte {pos}")]
    Malformed { pos: usize, token: String },
    #[error("zero letter at byte {pos}")]
    ZeroLetter { pos: usize },
    #[error("letter {letter} at byte {pos} needs more than {n} strands")]
    OutOfRange { pos: usize, letter: i32, n: usize },
    #[error("strand count must be at least 1")]
    NoStrands,
    #[error("strand counts differ: {0} vs {1}")]
    StrandMismatch(usize, usize),
    #[error("word is not positive")]
    NotPositive,
    #[error("line {line}: {msg}")]
    Corpus { line: usize, msg: String },
}

impl BraidWord {
    pub fn new(n: usize, letters: Vec<i32>) -> Result<Self, BraidError> {
        if n == 0 {
            return Err(BraidError::NoStrands);
        }
        for (k, &l) in letters.iter().enumerate() {
            if l == 0 {
                return Err(BraidError::ZeroLetter { pos: k });
            }
            if l.unsigned_abs() as usize >= n {
                return Err(BraidError::OutOfRange { pos: k, letter: l, n });
            }
        }
        Ok(BraidWord { n, letters })
    }

    pub fn identity(n: usize) -> Self {
        BraidWord::new(n, Vec::new()).expect("n >= 1")
    }

    /// Whitespace-separated signed integers. Without `n` the strand count is
    /// one more than the largest generator index (1 for the empty word).
    pub fn parse(text: &str, n: Option<usize>) -> Result<Self, BraidError> {
        let mut letters = Vec::new();
        let mut positions = Vec::new();
        let bytes = text.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            if bytes[i].is_ascii_whitespace() {
                i += 1;
                continue;
            }
            let start = i;
            while i < bytes.len() && !bytes[i].is_ascii_whitespace() {
                i += 1;
            }
            let token = &text[start..i];
            let l: i32 = token
                .parse()
                .map_err(|_| BraidError::Malformed { pos: start, token: token.to_string() })?;
            if l == 0 {
                return Err(BraidError::ZeroLetter { pos: start });
            }
            letters.push(l);
            positions.push(start);
        }
        let needed = letters.iter().map(|l| l.unsigned_abs() as usize + 1).max().unwrap_or(1);
        let n = n.unwrap_or(needed);
        if n == 0 {
            return Err(BraidError::NoStrands);
        }
        if let Some(k) = letters.iter().position(|l| l.unsigned_abs() as usize >= n) {
            return Err(BraidError::OutOfRange { pos: positions[k], letter: letters[k], n });
        }
        Ok(BraidWord { n, letters })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Exponent sum.
    pub fn epsilon(&self) -> i64 {
        self.letters.iter().map(|&l| l.signum() as i64).sum()
    }

    /// Number of negative letters.
    pub fn nu(&self) -> usize {
        self.letters.iter().filter(|&&l| l < 0).count()
    }

    /// Exponent sum of the generator `σ_k`.
    pub fn epsilon_k(&self, k: usize) -> i64 {
        self.letters.iter().filter(|l| l.unsigned_abs() as usize == k).map(|&l| l.signum() as i64).sum()
    }

    pub fn is_positive(&self) -> bool {
        self.nu() == 0
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord { n: self.n, letters: self.letters.iter().rev().map(|l| -l).collect() }
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord, BraidError> {
        if self.n != other.n {
            return Err(BraidError::StrandMismatch(self.n, other.n));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { n: self.n, letters })
    }

    /// `β α β⁻¹`.
    pub fn markov_conjugate(&self, beta: &BraidWord) -> Result<BraidWord, BraidError> {
        beta.concat(self)?.concat(&beta.inverse())
    }

    /// `α σ_n^{±1}` on `n + 1` strands.
    pub fn markov_stabilize(&self, positive: bool) -> BraidWord {
        let mut letters = self.letters.clone();
        let g = self.n as i32;
        letters.push(if positive { g } else { -g });
        BraidWord { n: self.n + 1, letters }
    }

    /// The same word on one more strand.
    pub fn embed(&self) -> BraidWord {
        BraidWord { n: self.n + 1, letters: self.letters.clone() }
    }

    pub fn permutation(&self) -> Permutation {
        let mut w = Permutation::identity(self.n);
        for &l in &self.letters {
            w = w.mul_s(l.unsigned_abs() as usize);
        }
        w
    }

    pub fn closure_components(&self) -> usize {
        self.permutation().cycle_count()
    }

    /// Line format of corpus files: `n=<k>; <letters>`.
    pub fn to_corpus_line(&self) -> String {
        if self.letters.is_empty() {
            format!("n={};", self.n)
        } else {
            format!("n={}; {}", self.n, self)
        }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Reads a corpus: one braid per line, optional `n=<k>;` prefix, `#` starts a comment.
/// Blank lines are skipped.
pub fn parse_corpus(text: &str) -> Result<Vec<BraidWord>, BraidError> {
    let mut out = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |e: BraidError| BraidError::Corpus { line: k + 1, msg: e.to_string() };
        let (n, body) = match line.strip_prefix("n=") {
            Some(rest) => {
                let (num, body) = rest
                    .split_once(';')
                    .ok_or(BraidError::Corpus { line: k + 1, msg: "missing `;` after strand count".into() })?;
                let n: usize = num
                    .trim()
                    .parse()
                    .map_err(|_| BraidError::Corpus { line: k + 1, msg: format!("bad strand count `{num}`") })?;
                (Some(n), body)
            }
            None => (None, line),
        };
        out.push(BraidWord::parse(body, n).map_err(err)?);
    }
    Ok(out)
}

/// Outcome of rewriting `σ_n α σ_n` for a positive `α ∈ B_n^+`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Sandwich {
    /// `σ_n α σ_n = a1 · σ_n · a2` with `a1, a2 ∈ B_n^+`.
    Slide(Vec<i32>, Vec<i32>),
    /// `σ_n α σ_n = b1 · σ_j² · b2` with `b1, b2 ∈ B_{n+1}^+`.
    Square(Vec<i32>, usize, Vec<i32>),
}

impl Sandwich {
    /// The rewritten word.
    pub fn word(&self, n: usize) -> Vec<i32> {
        match self {
            Sandwich::Slide(a1, a2) => [a1.as_slice(), &[n as i32], a2.as_slice()].concat(),
            Sandwich::Square(b1, j, b2) => [b1.as_slice(), &[*j as i32, *j as i32], b2.as_slice()].concat(),
        }
    }
}

/// Rewrites `σ_n α σ_n` where `α` is a positive word in `σ_1, …, σ_{n−1}`.
///
/// Splits on how often `σ_{n−1}` occurs in `α`; with two or more occurrences the
/// first two are used and the inner sandwich is rewritten one level down.
pub fn sandwich_rewrite(alpha: &BraidWord) -> Result<Sandwich, BraidError> {
    if !alpha.is_positive() {
        return Err(BraidError::NotPositive);
    }
    Ok(rewrite(alpha.letters().to_vec(), alpha.n()))
}

fn rewrite(mut alpha: Vec<i32>, n: usize) -> Sandwich {
    let top = n as i32 - 1;
    loop {
        if n == 1 {
            debug_assert!(alpha.is_empty());
            return Sandwich::Square(Vec::new(), 1, Vec::new());
        }
        let hits: Vec<usize> = alpha.iter().enumerate().filter(|(_, &l)| l == top).map(|(k, _)| k).collect();
        match hits.len() {
            0 => return Sandwich::Square(alpha, n, Vec::new()),
            1 => {
                let k = hits[0];
                return Sandwich::Slide(alpha[..=k].to_vec(), alpha[k..].to_vec());
            }
            _ => {
                let (p, q) = (hits[0], hits[1]);
                let a1 = &alpha[..p];
                let b = alpha[p + 1..q].to_vec();
                let a2 = &alpha[q + 1..];
                match rewrite(b, n - 1) {
                    Sandwich::Slide(b1, b2) => {
                        alpha = [a1, &b1, &[top], &b2, a2].concat();
                    }
                    Sandwich::Square(c1, j, c2) => {
                        let s = n as i32;
                        let left = [&[s], a1, &c1].concat();
                        let right = [&c2, a2, &[s]].concat();
                        return Sandwich::Square(left, j, right);
                    }
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> BraidWord {
        BraidWord::parse(s, None).unwrap()
    }

    #[test]
    fn parsing() {
        let t = w("1 1 1");
        assert_eq!((t.n(), t.letters()), (2, &[1, 1, 1][..]));
        let e = BraidWord::parse("", Some(3)).unwrap();
        assert_eq!((e.n(), e.len()), (3, 0));
        assert_eq!(w("").n(), 1);
        assert_eq!(w("1 -2 1 -2").n(), 3);
        assert_eq!(BraidWord::parse("1 0", None), Err(BraidError::ZeroLetter { pos: 2 }));
        assert_eq!(
            BraidWord::parse("1  3", Some(3)),
            Err(BraidError::OutOfRange { pos: 3, letter: 3, n: 3 })
        );
        assert!(matches!(BraidWord::parse("1 x", None), Err(BraidError::Malformed { pos: 2, .. })));
    }

    #[test]
    fn statistics() {
        let t = w("1 1 1");
        assert_eq!((t.epsilon(), t.nu(), t.is_positive()), (3, 0, true));
        let f = w("1 -2 1 -2");
        assert_eq!((f.epsilon(), f.nu(), f.is_positive()), (0, 2, false));
        let g = w("2 -2");
        assert_eq!((g.epsilon(), g.nu()), (0, 1));
        assert_eq!(f.epsilon_k(2), -2);
    }

    #[test]
    fn markov_moves() {
        let id = BraidWord::identity(3);
        let beta = w("1 -2");
        let c = id.markov_conjugate(&beta).unwrap();
        assert_eq!(c.letters(), &[1, -2, 2, -1]);
        assert_eq!(w("1 1 1").markov_stabilize(true).to_string(), "1 1 1 2");
        let s = BraidWord::identity(1).markov_stabilize(false);
        assert_eq!((s.n(), s.letters()), (2, &[-1][..]));
    }

    #[test]
    fn closure_components() {
        assert_eq!(BraidWord::identity(3).closure_components(), 3);
        assert_eq!(w("1 1 1").closure_components(), 1);
        assert_eq!(w("1 1").closure_components(), 2);
    }

    #[test]
    fn corpus_lines() {
        let text = "# header\nn=3; 1 -2\n1 1 1  # trefoil\n\nn=2;\n";
        let c = parse_corpus(text).unwrap();
        assert_eq!(c.len(), 3);
        assert_eq!(c[0], BraidWord::new(3, vec![1, -2]).unwrap());
        assert_eq!(c[2], BraidWord::identity(2));
        for b in &c {
            assert_eq!(parse_corpus(&b.to_corpus_line()).unwrap(), vec![b.clone()]);
        }
        assert!(matches!(parse_corpus("n=2; 3"), Err(BraidError::Corpus { line: 1, .. })));
    }

    #[test]
    fn sandwich_cases() {
        assert_eq!(
            sandwich_rewrite(&BraidWord::identity(1)).unwrap(),
            Sandwich::Square(vec![], 1, vec![])
        );
        let a = BraidWord::new(3, vec![1, 1]).unwrap();
        assert_eq!(sandwich_rewrite(&a).unwrap(), Sandwich::Square(vec![1, 1], 3, vec![]));
        let a = BraidWord::new(3, vec![2]).unwrap();
        assert_eq!(sandwich_rewrite(&a).unwrap(), Sandwich::Slide(vec![2], vec![2]));
        assert!(sandwich_rewrite(&w("-1")).is_err());
    }

    #[test]
    fn sandwich_preserves_permutation_and_length() {
        for n in 1..=3usize {
            for len in 0..=6u32 {
                let gens = (n - 1) as u32;
                if gens == 0 && len > 0 {
                    continue;
                }
                let count = if gens == 0 { 1 } else { gens.pow(len) };
                for code in 0..count {
                    let mut c = code;
                    let letters: Vec<i32> = (0..len)
                        .map(|_| {
                            let l = (c % gens) as i32 + 1;
                            c /= gens.max(1);
                            l
                        })
                        .collect();
                    let alpha = BraidWord::new(n, letters).unwrap();
                    let out = sandwich_rewrite(&alpha).unwrap();
                    let big = BraidWord::new(n + 1, out.word(n)).unwrap();
                    let mut orig = vec![n as i32];
                    orig.extend_from_slice(alpha.letters());
                    orig.push(n as i32);
                    let orig = BraidWord::new(n + 1, orig).unwrap();
                    assert!(big.is_positive());
                    assert_eq!(big.epsilon(), orig.epsilon());
                    assert_eq!(big.permutation(), orig.permutation());
                    if let Sandwich::Slide(a1, a2) = &out {
                        assert!(a1.iter().chain(a2).all(|&l| (l as usize) < n));
                    }
                }
            }
        }
    }
}
