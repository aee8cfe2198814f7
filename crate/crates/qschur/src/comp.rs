//! Vector compositions, flag data, residue sequences and shadowed
//! compositions.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::dimvec::DimVector;
use crate::error::{Error, Result};

/// An ordered list of nonzero vectors in `Z_{>=0}^e`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VectorComposition {
    e: usize,
    parts: Vec<DimVector>,
}

/// The transpose of a vector composition: for each node, the sequence of
/// that node's entries across the parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FlagData(pub Vec<Vec<u32>>);

/// Residue labels `1..=e` block by block, increasing within a block.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ResidueSequence(pub Vec<Vec<usize>>);

impl VectorComposition {
    pub fn new(e: usize, parts: Vec<DimVector>) -> Result<Self> {
        if parts.iter().any(|p| p.e() != e) {
            return Err(Error::DimensionMismatch);
        }
        if parts.iter().any(|p| p.is_zero()) {
            return Err(Error::TypeMismatch("vector composition with a zero part".into()));
        }
        Ok(Self { e, parts })
    }

    pub fn empty(e: usize) -> Self {
        Self { e, parts: Vec::new() }
    }

    /// Parts given as rows of integers, e.g. `&[&[2, 1], &[1, 1]]`.
    pub fn from_rows(rows: &[&[u32]]) -> Result<Self> {
        let e = rows.first().map_or(1, |r| r.len());
        Self::new(e, rows.iter().map(|r| DimVector::new(r.to_vec())).collect())
    }

    /// Complete flag type from node labels.
    pub fn from_labels(e: usize, labels: &[usize]) -> Self {
        Self { e, parts: labels.iter().map(|&l| DimVector::unit(e, l)).collect() }
    }

    pub fn e(&self) -> usize {
        self.e
    }

    pub fn parts(&self) -> &[DimVector] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn dim(&self) -> DimVector {
        self.parts.iter().fold(DimVector::zero(self.e), |acc, p| &acc + p)
    }

    pub fn is_complete(&self) -> bool {
        self.parts.iter().all(|p| p.is_unit())
    }

    pub fn concat(&self, other: &Self) -> Self {
        assert_eq!(self.e, other.e);
        let mut parts = self.parts.clone();
        parts.extend(other.parts.iter().cloned());
        Self { e: self.e, parts }
    }

    pub fn residue_sequence(&self) -> ResidueSequence {
        ResidueSequence(
            self.parts
                .iter()
                .map(|p| (0..self.e).flat_map(|i| core::iter::repeat_n(i + 1, p.at_index(i) as usize)).collect())
                .collect(),
        )
    }

    pub fn from_residue_sequence(e: usize, seq: &ResidueSequence) -> Result<Self> {
        let mut parts = Vec::new();
        for block in &seq.0 {
            let mut v = DimVector::zero(e);
            let mut last = 0;
            for &l in block {
                if l == 0 || l > e || l < last {
                    return Err(Error::TypeMismatch("block residues must increase within 1..=e".into()));
                }
                last = l;
                v.set(l - 1, v.at_index(l - 1) + 1);
            }
            parts.push(v);
        }
        Self::new(e, parts)
    }

    pub fn transpose(&self) -> FlagData {
        FlagData((0..self.e).map(|i| self.parts.iter().map(|p| p.at_index(i)).collect()).collect())
    }

    pub fn from_flag_data(flag: &FlagData) -> Result<Self> {
        let e = flag.0.len();
        let r = flag.0.first().map_or(0, |v| v.len());
        if flag.0.iter().any(|v| v.len() != r) {
            return Err(Error::DimensionMismatch);
        }
        Self::new(e, (0..r).map(|k| DimVector::new(flag.0.iter().map(|v| v[k]).collect())).collect())
    }

    /// Node-`i` variable range `start..end` (0-based positions within the
    /// node's alphabet) owned by each part.
    pub fn block_ranges(&self) -> Vec<Vec<(usize, usize)>> {
        let mut acc = vec![0usize; self.e];
        self.parts
            .iter()
            .map(|p| {
                (0..self.e)
                    .map(|i| {
                        let s = acc[i];
                        acc[i] += p.at_index(i) as usize;
                        (s, acc[i])
                    })
                    .collect()
            })
            .collect()
    }
}

impl fmt::Debug for VectorComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parts separated by `;`, entries by `,`, e.g. `2,1;1,1`.
impl fmt::Display for VectorComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Display for ResidueSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            for (j, l) in b.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{l}")?;
            }
        }
        Ok(())
    }
}

/// Nonzero vectors `v <= bound`, in lexicographic order.
pub fn subvectors(bound: &DimVector) -> Vec<DimVector> {
    let e = bound.e();
    let mut out = Vec::new();
    let mut cur = vec![0u32; e];
    loop {
        if cur.iter().any(|&x| x > 0) {
            out.push(DimVector::new(cur.clone()));
        }
        let mut k = e;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if cur[k] < bound.at_index(k) {
                cur[k] += 1;
                for c in cur.iter_mut().skip(k + 1) {
                    *c = 0;
                }
                break;
            }
        }
    }
}

/// All vector compositions of `d`; with `complete_only`, those whose parts
/// are simple roots.
pub fn enumerate_vcomps(d: &DimVector, complete_only: bool) -> Vec<VectorComposition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(rest: &DimVector, complete: bool, cur: &mut Vec<DimVector>, out: &mut Vec<VectorComposition>) {
        if rest.is_zero() {
            out.push(VectorComposition { e: rest.e(), parts: cur.clone() });
            return;
        }
        for p in subvectors(rest) {
            if complete && !p.is_unit() {
                continue;
            }
            let r = rest - &p;
            cur.push(p);
            rec(&r, complete, cur, out);
            cur.pop();
        }
    }
    rec(d, complete_only, &mut cur, &mut out);
    out
}

/// Weight data `(omega_{z_1}, .., omega_{z_l})` interleaved with groups of
/// black parts: red strand `k` is followed by group `k`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ShadowedComposition {
    charges: Vec<i64>,
    groups: Vec<VectorComposition>,
}

impl ShadowedComposition {
    pub fn new(charges: Vec<i64>, groups: Vec<VectorComposition>) -> Result<Self> {
        if charges.len() != groups.len() || groups.is_empty() {
            return Err(Error::TypeMismatch("one group per red strand".into()));
        }
        let e = groups[0].e();
        if groups.iter().any(|g| g.e() != e) {
            return Err(Error::DimensionMismatch);
        }
        Ok(Self { charges, groups })
    }

    pub fn e(&self) -> usize {
        self.groups[0].e()
    }

    pub fn ell(&self) -> usize {
        self.groups.len()
    }

    pub fn charges(&self) -> &[i64] {
        &self.charges
    }

    pub fn groups(&self) -> &[VectorComposition] {
        &self.groups
    }

    /// The join of all groups.
    pub fn plain(&self) -> VectorComposition {
        self.groups.iter().skip(1).fold(self.groups[0].clone(), |acc, g| acc.concat(g))
    }

    pub fn dim(&self) -> DimVector {
        self.plain().dim()
    }
}

impl fmt::Debug for ShadowedComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Groups separated by `|`, using the vector composition syntax inside.
impl fmt::Display for ShadowedComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, g) in self.groups.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

/// All `l`-tuples of vector compositions with total dimension `d`.
pub fn enumerate_shadowed(d: &DimVector, charges: &[i64]) -> Vec<ShadowedComposition> {
    let mut out = Vec::new();
    fn rec(
        rest: &DimVector,
        k: usize,
        charges: &[i64],
        cur: &mut Vec<VectorComposition>,
        out: &mut Vec<ShadowedComposition>,
    ) {
        if k + 1 == charges.len() {
            for g in enumerate_vcomps(rest, false) {
                cur.push(g);
                out.push(ShadowedComposition { charges: charges.to_vec(), groups: cur.clone() });
                cur.pop();
            }
            return;
        }
        let mut heads = vec![DimVector::zero(rest.e())];
        heads.extend(subvectors(rest));
        for h in heads {
            let r = rest - &h;
            for g in enumerate_vcomps(&h, false) {
                cur.push(g);
                rec(&r, k + 1, charges, cur, out);
                cur.pop();
            }
        }
    }
    assert!(!charges.is_empty());
    rec(d, 0, charges, &mut Vec::new(), &mut out);
    out
}

/// All shadow data with `n` boxes over the given charges.
pub fn shadowed_of_size(e: usize, n: u32, charges: &[i64]) -> Vec<ShadowedComposition> {
    crate::dimvec::of_size(e, n).iter().flat_map(|d| enumerate_shadowed(d, charges)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn single_part_residue_sequence() {
        let c = VectorComposition::from_rows(&[&[2, 0, 1]]).unwrap();
        assert_eq!(c.residue_sequence().to_string(), "1,1,3");
        let f = c.transpose();
        assert_eq!(f, FlagData(vec![vec![2], vec![0], vec![1]]));
    }

    #[test]
    fn small_enumeration() {
        let all = enumerate_vcomps(&DimVector::new(vec![1, 1]), false);
        assert_eq!(all.len(), 3);
        assert_eq!(enumerate_vcomps(&DimVector::unit(3, 2), false).len(), 1);
    }

    #[test]
    fn zero_parts_rejected() {
        assert!(VectorComposition::from_rows(&[&[0, 0]]).is_err());
    }

    #[test]
    fn shadowed_counts() {
        // First group of dimension 0, (1,0), (0,1), (1,1): 3 + 1 + 1 + 3.
        let d = DimVector::new(vec![1, 1]);
        assert_eq!(enumerate_shadowed(&d, &[0, 1]).len(), 8);
    }
}
