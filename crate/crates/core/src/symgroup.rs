//! Permutations in one-line notation, reduced words, cycle types, the
//! minimal-length class representatives `w_μ` and the distinguished set 𝔇.
//!
//! Convention: `a.compose(&b)` applies `b` first, so `(a·b)(j) = a(b(j))`,
//! and right multiplication by `s_i` swaps the entries in positions `i`, `i+1`.

use std::fmt;

/// Largest strand count representable by [`Permutation`].
pub const MAX_N: usize = 16;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    n: u8,
    img: [u8; MAX_N],
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PermError {
    #[error("not a permutation of 1..{0}")]
    NotBijective(usize),
    #[error("at most {MAX_N} points are supported, got {0}")]
    TooLarge(usize),
    #[error("generator s_{0} out of range for n = {1}")]
    BadGenerator(usize, usize),
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_N, "at most {MAX_N} points are supported");
        let mut img = [0u8; MAX_N];
        for (j, v) in img.iter_mut().enumerate().take(n) {
            *v = (j + 1) as u8;
        }
        Permutation { n: n as u8, img }
    }

    /// From one-line notation with values 1..n.
    pub fn from_image(image: &[usize]) -> Result<Self, PermError> {
        let n = image.len();
        if n > MAX_N {
            return Err(PermError::TooLarge(n));
        }
        let mut seen = [false; MAX_N];
        let mut img = [0u8; MAX_N];
        for (j, &v) in image.iter().enumerate() {
            if v == 0 || v > n || seen[v - 1] {
                return Err(PermError::NotBijective(n));
            }
            seen[v - 1] = true;
            img[j] = v as u8;
        }
        Ok(Permutation { n: n as u8, img })
    }

    /// The product `s_{a_1} s_{a_2} ⋯ s_{a_k}`.
    pub fn from_word(n: usize, word: &[usize]) -> Result<Self, PermError> {
        let mut w = Permutation::identity(n);
        for &i in word {
            if i == 0 || i >= n {
                return Err(PermError::BadGenerator(i, n));
            }
            w.swap_positions(i);
        }
        Ok(w)
    }

    pub fn transposition(n: usize, i: usize) -> Self {
        Permutation::from_word(n, &[i]).expect("generator in range")
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn image(&self) -> Vec<usize> {
        self.img[..self.n()].iter().map(|&v| v as usize).collect()
    }

    /// `w(j)` for `1 ≤ j ≤ n`.
    #[inline]
    pub fn apply(&self, j: usize) -> usize {
        self.img[j - 1] as usize
    }

    pub fn is_identity(&self) -> bool {
        (0..self.n()).all(|j| self.img[j] as usize == j + 1)
    }

    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n, other.n, "composing permutations of different sizes");
        let mut out = *self;
        for j in 0..self.n() {
            out.img[j] = self.img[other.img[j] as usize - 1];
        }
        out
    }

    pub fn inverse(&self) -> Permutation {
        let mut out = *self;
        for j in 0..self.n() {
            out.img[self.img[j] as usize - 1] = (j + 1) as u8;
        }
        out
    }

    #[inline]
    fn swap_positions(&mut self, i: usize) {
        self.img.swap(i - 1, i);
    }

    /// `w·s_i`.
    #[inline]
    pub fn mul_s(&self, i: usize) -> Permutation {
        let mut out = *self;
        out.swap_positions(i);
        out
    }

    /// `s_i·w`.
    pub fn left_mul_s(&self, i: usize) -> Permutation {
        let mut out = *self;
        for v in out.img[..self.n()].iter_mut() {
            if *v as usize == i {
                *v += 1;
            } else if *v as usize == i + 1 {
                *v -= 1;
            }
        }
        out
    }

    /// True when `ℓ(w·s_i) < ℓ(w)`.
    #[inline]
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.img[i - 1] > self.img[i]
    }

    /// Inversion count.
    pub fn length(&self) -> usize {
        let n = self.n();
        let mut c = 0;
        for a in 0..n {
            for b in a + 1..n {
                if self.img[a] > self.img[b] {
                    c += 1;
                }
            }
        }
        c
    }

    /// A reduced word, peeling off the smallest right descent at each step.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = *self;
        let mut word = Vec::with_capacity(self.length());
        while let Some(i) = (1..w.n()).find(|&i| w.has_right_descent(i)) {
            word.push(i);
            w.swap_positions(i);
        }
        word.reverse();
        word
    }

    pub fn cycle_type(&self) -> Partition {
        let n = self.n();
        let mut seen = [false; MAX_N];
        let mut parts = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                j = self.img[j] as usize - 1;
                len += 1;
            }
            parts.push(len);
        }
        Partition::new(parts)
    }

    pub fn cycle_count(&self) -> usize {
        self.cycle_type().parts().len()
    }

    /// The same permutation on `n + 1` points, fixing the new point.
    pub fn embed(&self) -> Permutation {
        assert!(self.n() < MAX_N, "at most {MAX_N} points are supported");
        let mut out = *self;
        out.img[self.n()] = self.n + 1;
        out.n += 1;
        out
    }

    /// Restriction to `1..n−1`; `w` must fix `n`.
    pub fn restrict(&self) -> Permutation {
        let n = self.n();
        assert!(n >= 1 && self.img[n - 1] as usize == n, "restrict needs the last point fixed");
        let mut out = *self;
        out.img[n - 1] = 0;
        out.n -= 1;
        out
    }

    /// Splits off the top coset factor: either `w` fixes its last point
    /// (`tail = None`, `v` the restriction) or `w = v·(s_{n−1} s_{n−2} ⋯ s_i)` with
    /// `v` fixing the last point, `ℓ(w) = ℓ(v) + (n − i)`, and `tail = Some(i)`.
    /// Here `n` is the size of `w` and `v` is returned on `n − 1` points.
    pub fn top_decompose(&self) -> (Permutation, Option<usize>) {
        let n = self.n();
        if self.img[n - 1] as usize == n {
            return (self.restrict(), None);
        }
        let i = self.inverse().apply(n);
        // v = w·(s_{n−1}⋯s_i)^{-1} = w·s_i s_{i+1} ⋯ s_{n−1}
        let mut v = *self;
        for k in i..n {
            v.swap_positions(k);
        }
        (v.restrict(), Some(i))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for j in 0..self.n() {
            if j > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", self.img[j])?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// An integer partition, parts in weakly decreasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Sorts the parts and drops zeros.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// All partitions of `n`, largest first part first.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// The indices `i_1 < ⋯ < i_k` left after removing the partial sums of `mu` from `1..n`.
fn w_mu_indices(mu: &Partition) -> Vec<usize> {
    let n = mu.size();
    let mut removed = vec![false; n + 1];
    let mut acc = 0;
    for &p in &mu.parts {
        acc += p;
        removed[acc] = true;
    }
    (1..=n).filter(|&i| !removed[i]).collect()
}

/// `w_μ = s_{i_k} ⋯ s_{i_2} s_{i_1}`.
pub fn w_mu(mu: &Partition) -> Permutation {
    let mut word = w_mu_indices(mu);
    word.reverse();
    Permutation::from_word(mu.size(), &word).expect("indices below n")
}

/// Descending products `s_{i_k} ⋯ s_{i_1}` over all subsets `i_1 < ⋯ < i_k` of `1..n−1`.
pub fn enumerate_d(n: usize) -> Vec<Permutation> {
    let m = n.saturating_sub(1);
    (0u32..1 << m)
        .map(|mask| {
            let word: Vec<usize> = (1..=m).rev().filter(|i| mask >> (i - 1) & 1 == 1).collect();
            Permutation::from_word(n, &word).expect("indices below n")
        })
        .collect()
}

/// Every permutation of `1..n`, in lexicographic order of one-line notation.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (1..=n).collect();
    loop {
        out.push(Permutation::from_image(&cur).expect("valid"));
        // next lexicographic permutation
        let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else {
            return out;
        };
        let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).expect("pivot");
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
}
