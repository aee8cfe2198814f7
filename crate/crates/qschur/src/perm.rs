//! Permutations in one-line notation, 0-based.
//!
//! `w[a]` is the image of `a`. Products compose right to left:
//! `(u * v)[a] = u[v[a]]`.

use alloc::vec::Vec;

pub type Perm = Vec<usize>;

pub fn identity(n: usize) -> Perm {
    (0..n).collect()
}

pub fn is_permutation(w: &[usize]) -> bool {
    let mut seen = alloc::vec![false; w.len()];
    for &x in w {
        if x >= w.len() || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

pub fn compose(u: &[usize], v: &[usize]) -> Perm {
    v.iter().map(|&a| u[a]).collect()
}

pub fn inverse(w: &[usize]) -> Perm {
    let mut out = alloc::vec![0; w.len()];
    for (a, &b) in w.iter().enumerate() {
        out[b] = a;
    }
    out
}

/// Coxeter length, the number of inversions.
pub fn length(w: &[usize]) -> usize {
    let mut n = 0;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] > w[j] {
                n += 1;
            }
        }
    }
    n
}

/// A reduced word `[i_1, .., i_k]` with `w = s_{i_1} ... s_{i_k}`, where
/// `s_i` swaps `i` and `i + 1`. Obtained by bubble sort.
pub fn reduced_word(w: &[usize]) -> Vec<usize> {
    let mut cur = w.to_vec();
    let mut swaps = Vec::new();
    loop {
        let mut changed = false;
        for j in 0..cur.len().saturating_sub(1) {
            if cur[j] > cur[j + 1] {
                cur.swap(j, j + 1);
                swaps.push(j);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    swaps.reverse();
    swaps
}

/// The product `s_{i_1} ... s_{i_k}` on `n` points.
pub fn from_word(n: usize, word: &[usize]) -> Perm {
    let mut w = identity(n);
    for &i in word {
        // w * s_i swaps the entries in positions i and i + 1.
        w.swap(i, i + 1);
    }
    w
}

/// Longest element of `S_n`.
pub fn longest(n: usize) -> Perm {
    (0..n).rev().collect()
}

/// The longest minimal length representative of `S_{c+d} / (S_c x S_d)`,
/// in one-line notation `[d+1, .., d+c, 1, .., d]`.
pub fn shuffle_longest(c: usize, d: usize) -> Perm {
    (0..c).map(|a| a + d).chain(0..d).collect()
}

/// All permutations of `0..n` in lexicographic order.
pub fn all(n: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut cur = identity(n);
    loop {
        out.push(cur.clone());
        if !next_permutation(&mut cur) {
            break;
        }
    }
    out
}

/// Advances to the next permutation of the multiset in lexicographic
/// order; returns `false` after the last one.
pub fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Sign `(-1)^l(w)`.
pub fn sign(w: &[usize]) -> i64 {
    if length(w).is_multiple_of(2) { 1 } else { -1 }
}
