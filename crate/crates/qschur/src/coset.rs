//! Double cosets of Young subgroups of `S_d = S_{d_1} x .. x S_{d_e}`,
//! parametrised by per-node contingency tables.

use alloc::vec;
use alloc::vec::Vec;

use crate::comp::VectorComposition;
use crate::dimvec::DimVector;
use crate::error::{Error, Result};
use crate::perm::{self, Perm};

/// `table[b][c]` is the vector of strands running from block `c` of the
/// source to block `b` of the target.
pub type Table = Vec<Vec<DimVector>>;

/// One permutation per node, 0-based one-line notation.
pub type ColoredPerm = Vec<Perm>;

/// Nonnegative integer matrices with the given row and column sums, in
/// lexicographic order of their row-major entries.
pub fn int_tables(rows: &[u32], cols: &[u32]) -> Vec<Vec<Vec<u32>>> {
    fn rec(
        r: usize,
        c: usize,
        rows: &[u32],
        col_left: &mut Vec<u32>,
        row_left: u32,
        cur: &mut Vec<Vec<u32>>,
        out: &mut Vec<Vec<Vec<u32>>>,
    ) {
        if r == rows.len() {
            if col_left.iter().all(|&x| x == 0) {
                out.push(cur.clone());
            }
            return;
        }
        let ncols = col_left.len();
        if c + 1 == ncols {
            // The last column takes what is left of the row.
            if row_left > col_left[c] {
                return;
            }
            col_left[c] -= row_left;
            cur[r][c] = row_left;
            let next = rows.get(r + 1).copied().unwrap_or(0);
            rec(r + 1, 0, rows, col_left, next, cur, out);
            col_left[c] += row_left;
            cur[r][c] = 0;
            return;
        }
        for x in 0..=row_left.min(col_left[c]) {
            col_left[c] -= x;
            cur[r][c] = x;
            rec(r, c + 1, rows, col_left, row_left - x, cur, out);
            col_left[c] += x;
        }
        cur[r][c] = 0;
    }
    let mut out = Vec::new();
    if cols.is_empty() {
        if rows.iter().all(|&x| x == 0) {
            out.push(vec![Vec::new(); rows.len()]);
        }
        return out;
    }
    if rows.iter().sum::<u32>() != cols.iter().sum::<u32>() {
        return out;
    }
    let mut cur = vec![vec![0; cols.len()]; rows.len()];
    let mut col_left = cols.to_vec();
    let first = rows.first().copied().unwrap_or(0);
    rec(0, 0, rows, &mut col_left, first, &mut cur, &mut out);
    out
}

/// All contingency tables between target `lambda` and source `mu`.
pub fn contingency_tables(lambda: &VectorComposition, mu: &VectorComposition) -> Result<Vec<Table>> {
    if lambda.dim() != mu.dim() || lambda.e() != mu.e() {
        return Err(Error::DimensionMismatch);
    }
    let e = lambda.e();
    let (r, s) = (lambda.len(), mu.len());
    let per_node: Vec<Vec<Vec<Vec<u32>>>> = (0..e)
        .map(|i| {
            let rows: Vec<u32> = lambda.parts().iter().map(|p| p.at_index(i)).collect();
            let cols: Vec<u32> = mu.parts().iter().map(|p| p.at_index(i)).collect();
            int_tables(&rows, &cols)
        })
        .collect();
    let mut out = Vec::new();
    let mut idx = vec![0usize; e];
    if per_node.iter().any(|t| t.is_empty()) {
        return Ok(out);
    }
    loop {
        let table = (0..r)
            .map(|b| (0..s).map(|c| DimVector::new((0..e).map(|i| per_node[i][idx[i]][b][c]).collect())).collect())
            .collect();
        out.push(table);
        let mut k = e;
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < per_node[k].len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

/// The non-crossing colored permutation of a table: source strands of
/// each node leave their block towards target blocks in increasing
/// order and arrive at each target block in increasing source order.
pub fn table_permutation(lambda: &VectorComposition, mu: &VectorComposition, table: &Table) -> ColoredPerm {
    let e = lambda.e();
    let tgt = lambda.block_ranges();
    let src = mu.block_ranges();
    (0..e)
        .map(|i| {
            let n = lambda.dim().at_index(i) as usize;
            let mut w = vec![0; n];
            let mut tgt_fill: Vec<usize> = tgt.iter().map(|r| r[i].0).collect();
            for (c, range) in src.iter().enumerate() {
                let mut a = range[i].0;
                for (b, row) in table.iter().enumerate() {
                    for _ in 0..row[c].at_index(i) {
                        w[a] = tgt_fill[b];
                        tgt_fill[b] += 1;
                        a += 1;
                    }
                }
            }
            w
        })
        .collect()
}

/// One minimal length representative per double coset
/// `S_lambda \ S_d / S_mu`.
pub fn min_double_cosets(lambda: &VectorComposition, mu: &VectorComposition) -> Result<Vec<ColoredPerm>> {
    Ok(contingency_tables(lambda, mu)?.iter().map(|t| table_permutation(lambda, mu, t)).collect())
}

/// Blocks of a Young subgroup of `S_n` as consecutive lengths.
fn block_of(blocks: &[usize]) -> Vec<usize> {
    let mut out = Vec::new();
    for (b, &len) in blocks.iter().enumerate() {
        out.extend(core::iter::repeat_n(b, len));
    }
    out
}

/// `w` is the shortest element of `S_left w S_right`, where `w` maps
/// source position `a` to target position `w[a]`, `S_right` permutes
/// source positions within `right` blocks and `S_left` target positions
/// within `left` blocks.
pub fn is_minimal_rep(w: &[usize], left: &[usize], right: &[usize]) -> bool {
    let lb = block_of(left);
    let rb = block_of(right);
    let inv = perm::inverse(w);
    (1..w.len()).all(|a| rb[a] != rb[a - 1] || w[a - 1] < w[a])
        && (1..w.len()).all(|b| lb[b] != lb[b - 1] || inv[b - 1] < inv[b])
}

/// Young subgroup elements for consecutive blocks.
pub fn young_elements(blocks: &[usize]) -> Vec<Perm> {
    let mut out = vec![Vec::new()];
    for &len in blocks {
        let mut next = Vec::new();
        for base in &out {
            for p in perm::all(len) {
                let off = base.len();
                let mut v: Perm = base.clone();
                v.extend(p.iter().map(|&x| x + off));
                next.push(v);
            }
        }
        out = next;
    }
    out
}

/// Brute force: `w` has minimal length in its double coset.
pub fn is_minimal_brute(w: &[usize], left: &[usize], right: &[usize]) -> bool {
    let l = perm::length(w);
    let lefts = young_elements(left);
    let rights = young_elements(right);
    lefts.iter().all(|u| rights.iter().all(|v| perm::length(&perm::compose(&perm::compose(u, w), v)) >= l))
}
