//! Permutations of `{1, ..., n}` in one-line notation.
//!
//! Permutations act on the right: `(k)w` is `w.image(k)` and the product
//! `u * v` first applies `u` and then `v`. The simple transposition `s_i`
//! swaps `i` and `i + 1`, and `w = s_{i_1} ... s_{i_k}` is read left to right.

use std::collections::HashMap;

/// A permutation in one-line notation, `images[k - 1] = (k)w`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<u8>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm {
            images: (1..=n as u8).collect(),
        }
    }

    /// Build from one-line notation; returns `None` if it is not a bijection.
    pub fn from_images(images: Vec<u8>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return None;
            }
            seen[v] = true;
        }
        Some(Perm { images })
    }

    /// The simple transposition `s_i` in `Sym_n`, `1 <= i < n`.
    pub fn simple(n: usize, i: usize) -> Self {
        let mut p = Perm::identity(n);
        p.images.swap(i - 1, i);
        p
    }

    /// The product of simple transpositions named by `word`.
    pub fn from_word(n: usize, word: &[usize]) -> Self {
        let mut p = Perm::identity(n);
        for &i in word {
            p = p.right_simple(i);
        }
        p
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    /// `(k)w` for `1 <= k <= n`.
    pub fn image(&self, k: usize) -> usize {
        self.images[k - 1] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &v)| v as usize == k + 1)
    }

    /// `self * other`: apply `self`, then `other`.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm {
            images: self
                .images
                .iter()
                .map(|&v| other.images[v as usize - 1])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u8; self.images.len()];
        for (k, &v) in self.images.iter().enumerate() {
            images[v as usize - 1] = (k + 1) as u8;
        }
        Perm { images }
    }

    /// `s_i * self`.
    pub fn left_simple(&self, i: usize) -> Perm {
        let mut p = self.clone();
        p.images.swap(i - 1, i);
        p
    }

    /// `self * s_i`.
    pub fn right_simple(&self, i: usize) -> Perm {
        Perm {
            images: self
                .images
                .iter()
                .map(|&v| {
                    if v as usize == i {
                        (i + 1) as u8
                    } else if v as usize == i + 1 {
                        i as u8
                    } else {
                        v
                    }
                })
                .collect(),
        }
    }

    /// Coxeter length, the number of inversions.
    pub fn length(&self) -> usize {
        let n = self.images.len();
        let mut inv = 0;
        for a in 0..n {
            for b in a + 1..n {
                if self.images[a] > self.images[b] {
                    inv += 1;
                }
            }
        }
        inv
    }

    /// Is `l(s_i w) < l(w)`?
    pub fn has_left_descent(&self, i: usize) -> bool {
        self.images[i - 1] > self.images[i]
    }

    /// Is `l(w s_i) < l(w)`?
    pub fn has_right_descent(&self, i: usize) -> bool {
        let inv = self.inverse();
        inv.images[i - 1] > inv.images[i]
    }

    /// The lexicographically smallest reduced word, obtained by repeatedly
    /// stripping the smallest left descent.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::with_capacity(self.length());
        while let Some(i) = (1..w.degree()).find(|&i| w.has_left_descent(i)) {
            word.push(i);
            w = w.left_simple(i);
        }
        word
    }
}

/// All permutations of `Sym_n` in lexicographic one-line order, with
/// lookup tables for the products used by the Hecke engine.
#[derive(Debug, Clone)]
pub struct SymGroup {
    n: usize,
    perms: Vec<Perm>,
    index: HashMap<Perm, usize>,
    lengths: Vec<usize>,
    /// `left[i - 1][w]` is the index of `s_i w`.
    left: Vec<Vec<usize>>,
    /// `right[i - 1][w]` is the index of `w s_i`.
    right: Vec<Vec<usize>>,
    words: Vec<Vec<usize>>,
}

fn lex_perms(n: usize) -> Vec<Perm> {
    fn rec(prefix: &mut Vec<u8>, used: &mut Vec<bool>, n: usize, out: &mut Vec<Perm>) {
        if prefix.len() == n {
            out.push(Perm {
                images: prefix.clone(),
            });
            return;
        }
        for v in 1..=n {
            if !used[v] {
                used[v] = true;
                prefix.push(v as u8);
                rec(prefix, used, n, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n + 1], n, &mut out);
    out
}

impl SymGroup {
    pub fn new(n: usize) -> Self {
        let perms = lex_perms(n);
        let index: HashMap<Perm, usize> =
            perms.iter().enumerate().map(|(k, p)| (p.clone(), k)).collect();
        let lengths = perms.iter().map(Perm::length).collect();
        let left = (1..n)
            .map(|i| perms.iter().map(|p| index[&p.left_simple(i)]).collect())
            .collect();
        let right = (1..n)
            .map(|i| perms.iter().map(|p| index[&p.right_simple(i)]).collect())
            .collect();
        let words = perms.iter().map(Perm::reduced_word).collect();
        SymGroup {
            n,
            perms,
            index,
            lengths,
            left,
            right,
            words,
        }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.perms.len()
    }

    pub fn perm(&self, w: usize) -> &Perm {
        &self.perms[w]
    }

    pub fn index_of(&self, p: &Perm) -> usize {
        self.index[p]
    }

    pub fn length(&self, w: usize) -> usize {
        self.lengths[w]
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn left_simple(&self, i: usize, w: usize) -> usize {
        self.left[i - 1][w]
    }

    pub fn right_simple(&self, i: usize, w: usize) -> usize {
        self.right[i - 1][w]
    }

    /// Canonical reduced word of the permutation with index `w`.
    pub fn word(&self, w: usize) -> &[usize] {
        &self.words[w]
    }
}
