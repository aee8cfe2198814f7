//! Exact rank of integer matrices.

use alloc::vec::Vec;
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Rank over `Q` by fraction-free (Bareiss) elimination. Rows may have
/// different lengths; missing entries count as zero.
pub fn rank(rows: &[Vec<BigInt>]) -> usize {
    let ncols = rows.iter().map(|r| r.len()).max().unwrap_or(0);
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .map(|r| {
            let mut r = r.clone();
            r.resize(ncols, BigInt::zero());
            r
        })
        .collect();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..ncols {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][col].clone();
        for i in rank + 1..m.len() {
            let f = m[i][col].clone();
            for j in col..ncols {
                let v = &m[i][j] * &pivot - &f * &m[rank][j];
                m[i][j] = v / &prev;
            }
        }
        prev = pivot;
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}
