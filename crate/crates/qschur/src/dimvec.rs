//! Dimension vectors for the cyclic quiver on `e` nodes.
//!
//! Nodes are labelled `1..=e` and stored at index `label - 1`. Node labels
//! and residues are read modulo `e`, so residue `0` is node `e`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Sub};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DimVector {
    entries: Vec<u32>,
}

/// Storage index of the node carrying residue `r`.
pub fn residue_index(r: i64, e: usize) -> usize {
    (r - 1).rem_euclid(e as i64) as usize
}

/// Node label in `1..=e` of residue `r`.
pub fn residue_label(r: i64, e: usize) -> usize {
    residue_index(r, e) + 1
}

impl DimVector {
    pub fn new(entries: Vec<u32>) -> Self {
        assert!(!entries.is_empty(), "a dimension vector needs e >= 1 entries");
        Self { entries }
    }

    pub fn zero(e: usize) -> Self {
        Self::new(vec![0; e])
    }

    /// The simple root at node `label`.
    pub fn unit(e: usize, label: usize) -> Self {
        let mut v = Self::zero(e);
        v.entries[(label + e - 1) % e] = 1;
        v
    }

    /// The simple root carrying residue `r`.
    pub fn unit_residue(e: usize, r: i64) -> Self {
        let mut v = Self::zero(e);
        v.entries[residue_index(r, e)] = 1;
        v
    }

    pub fn e(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    /// Entry at node `label`, wrapping modulo `e`.
    pub fn at(&self, label: i64) -> u32 {
        self.entries[(label - 1).rem_euclid(self.e() as i64) as usize]
    }

    pub fn at_index(&self, idx: usize) -> u32 {
        self.entries[idx]
    }

    pub fn size(&self) -> u32 {
        self.entries.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&x| x == 0)
    }

    pub fn is_unit(&self) -> bool {
        self.size() == 1
    }

    /// Label of the unique node of a simple root.
    pub fn unit_label(&self) -> Option<usize> {
        if !self.is_unit() {
            return None;
        }
        self.entries.iter().position(|&x| x == 1).map(|i| i + 1)
    }

    pub fn le(&self, other: &Self) -> bool {
        self.entries.iter().zip(&other.entries).all(|(a, b)| a <= b)
    }

    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        if !other.le(self) {
            return None;
        }
        Some(Self::new(self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect()))
    }

    pub fn set(&mut self, idx: usize, v: u32) {
        self.entries[idx] = v;
    }

    pub fn bump_residue(&mut self, r: i64) {
        let e = self.e();
        self.entries[residue_index(r, e)] += 1;
    }

    /// The form `<x, y> = sum_i x_i (y_{i-1} - y_i)`; merges and splits of
    /// the pair `(x, y)` have this degree.
    pub fn euler_pairing(x: &Self, y: &Self) -> i64 {
        (1..=x.e() as i64).map(|i| x.at(i) as i64 * (y.at(i - 1) as i64 - y.at(i) as i64)).sum()
    }

    /// Degree of the crossing `(x, y) -> (y, x)`.
    pub fn crossing_degree(x: &Self, y: &Self) -> i64 {
        Self::euler_pairing(x, y) + Self::euler_pairing(y, x)
    }
}

/// All dimension vectors with `e` entries summing to `n`, in lexicographic
/// order.
pub fn of_size(e: usize, n: u32) -> Vec<DimVector> {
    fn rec(e: usize, n: u32, cur: &mut Vec<u32>, out: &mut Vec<DimVector>) {
        if cur.len() + 1 == e {
            cur.push(n);
            out.push(DimVector::new(cur.clone()));
            cur.pop();
            return;
        }
        for x in 0..=n {
            cur.push(x);
            rec(e, n - x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(e, n, &mut Vec::new(), &mut out);
    out
}

impl Add for &DimVector {
    type Output = DimVector;
    fn add(self, rhs: &DimVector) -> DimVector {
        assert_eq!(self.e(), rhs.e());
        DimVector::new(self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &DimVector {
    type Output = DimVector;
    fn sub(self, rhs: &DimVector) -> DimVector {
        self.checked_sub(rhs).expect("dimension vector underflow")
    }
}

impl fmt::Debug for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Comma separated entries, e.g. `2,1,0`.
impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}
