//! Partitions, multipartitions and boxes.

use alloc::vec::Vec;
use core::fmt;

use crate::dimvec::{self, DimVector};
use crate::error::{Error, Result};

/// A multipartition with `l` components, each a weakly decreasing list of
/// positive row lengths.
///
/// The derived order compares components left to right and rows top to
/// bottom, missing rows counting as zero: the lexicographic order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multipartition {
    comps: Vec<Vec<u32>>,
}

/// A box `(component, row, col)`, all 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub comp: usize,
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(comp: usize, row: usize, col: usize) -> Self {
        Self { comp, row, col }
    }

    /// `other` lies strictly below `self`: a lower row of the same
    /// component, or any row of a later component.
    pub fn is_below(&self, other: &Cell) -> bool {
        other.comp > self.comp || (other.comp == self.comp && other.row > self.row)
    }
}

/// The charge `(z_1, .., z_l)` together with `e`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Charge {
    pub e: usize,
    pub z: Vec<i64>,
}

impl Charge {
    pub fn new(e: usize, z: Vec<i64>) -> Self {
        assert!(e >= 2, "e must exceed 1");
        assert!(!z.is_empty(), "at least one component");
        Self { e, z }
    }

    pub fn ell(&self) -> usize {
        self.z.len()
    }

    /// Residue `z_k + col - row`, as a node label in `1..=e`.
    pub fn residue(&self, c: Cell) -> usize {
        dimvec::residue_label(self.z[c.comp - 1] + c.col as i64 - c.row as i64, self.e)
    }

    /// Node label of the red strand `k` (1-based).
    pub fn red_label(&self, k: usize) -> usize {
        dimvec::residue_label(self.z[k - 1], self.e)
    }

    pub fn restrict(&self, ell: usize) -> Charge {
        Charge { e: self.e, z: self.z[..ell].to_vec() }
    }

    /// Residue content of a set of boxes.
    pub fn content<'a>(&self, cells: impl IntoIterator<Item = &'a Cell>) -> DimVector {
        let mut v = DimVector::zero(self.e);
        for c in cells {
            let l = self.residue(*c);
            v.set(l - 1, v.at_index(l - 1) + 1);
        }
        v
    }
}

impl Multipartition {
    pub fn new(comps: Vec<Vec<u32>>) -> Result<Self> {
        for p in &comps {
            if p.contains(&0) || p.windows(2).any(|w| w[0] < w[1]) {
                return Err(Error::TypeMismatch("rows must be positive and weakly decreasing".into()));
            }
        }
        if comps.is_empty() {
            return Err(Error::TypeMismatch("a multipartition needs a component".into()));
        }
        Ok(Self { comps })
    }

    pub fn empty(ell: usize) -> Self {
        Self { comps: alloc::vec![Vec::new(); ell] }
    }

    /// Builds from row lengths that may have trailing zeros.
    pub fn from_rows_trimmed(mut comps: Vec<Vec<u32>>) -> Self {
        for p in comps.iter_mut() {
            while p.last() == Some(&0) {
                p.pop();
            }
        }
        Self { comps }
    }

    pub fn ell(&self) -> usize {
        self.comps.len()
    }

    pub fn components(&self) -> &[Vec<u32>] {
        &self.comps
    }

    pub fn size(&self) -> u32 {
        self.comps.iter().flatten().sum()
    }

    /// Row length, zero past the last row.
    pub fn row(&self, comp: usize, row: usize) -> u32 {
        self.comps[comp - 1].get(row - 1).copied().unwrap_or(0)
    }

    pub fn contains(&self, c: Cell) -> bool {
        c.comp >= 1 && c.comp <= self.ell() && c.row >= 1 && c.col >= 1 && (c.col as u32) <= self.row(c.comp, c.row)
    }

    /// Boxes in reading order: components, then rows, then columns.
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for (k, p) in self.comps.iter().enumerate() {
            for (r, &len) in p.iter().enumerate() {
                for c in 0..len as usize {
                    out.push(Cell::new(k + 1, r + 1, c + 1));
                }
            }
        }
        out
    }

    pub fn addable(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for (k, p) in self.comps.iter().enumerate() {
            for r in 0..=p.len() {
                let len = p.get(r).copied().unwrap_or(0);
                if r == 0 || p[r - 1] > len {
                    out.push(Cell::new(k + 1, r + 1, len as usize + 1));
                }
            }
        }
        out
    }

    pub fn removable(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for (k, p) in self.comps.iter().enumerate() {
            for (r, &len) in p.iter().enumerate() {
                let next = p.get(r + 1).copied().unwrap_or(0);
                if len > next {
                    out.push(Cell::new(k + 1, r + 1, len as usize));
                }
            }
        }
        out
    }

    pub fn contains_shape(&self, other: &Multipartition) -> bool {
        self.ell() == other.ell()
            && (1..=self.ell()).all(|k| {
                let rows = other.comps[k - 1].len();
                (1..=rows).all(|r| other.row(k, r) <= self.row(k, r))
            })
    }

    /// Cells of `self / inner`; errors unless `inner` is contained in `self`.
    pub fn skew_cells(&self, inner: &Multipartition) -> Result<Vec<Cell>> {
        if !self.contains_shape(inner) {
            return Err(Error::NotHorizontalStrip);
        }
        Ok(self.cells().into_iter().filter(|c| !inner.contains(*c)).collect())
    }

    /// `self / inner` has no two boxes in one column.
    pub fn is_horizontal_strip_over(&self, inner: &Multipartition) -> bool {
        self.contains_shape(inner)
            && (1..=self.ell()).all(|k| {
                let rows = self.comps[k - 1].len();
                (2..=rows).all(|r| self.row(k, r) <= inner.row(k, r - 1))
            })
    }

    /// The shape obtained by adding cells, which must leave a multipartition.
    pub fn with_cells(&self, cells: &[Cell]) -> Multipartition {
        let mut comps = self.comps.clone();
        for c in cells {
            let p = &mut comps[c.comp - 1];
            if p.len() < c.row {
                p.resize(c.row, 0);
            }
            p[c.row - 1] += 1;
        }
        Multipartition::from_rows_trimmed(comps)
    }

    /// Removes a removable cell.
    pub fn without_cell(&self, c: Cell) -> Multipartition {
        let mut comps = self.comps.clone();
        let p = &mut comps[c.comp - 1];
        p[c.row - 1] -= 1;
        if p[c.row - 1] == 0 {
            p.truncate(c.row - 1);
        }
        Multipartition { comps }
    }

    /// Keeps the first `ell` components.
    pub fn truncate(&self, ell: usize) -> Multipartition {
        Multipartition { comps: self.comps[..ell].to_vec() }
    }

    pub fn push_empty(&self) -> Multipartition {
        let mut comps = self.comps.clone();
        comps.push(Vec::new());
        Multipartition { comps }
    }
}

impl fmt::Debug for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Components separated by `|`, rows by `,`; empty components print as
/// nothing, e.g. `2,1||1`.
impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, p) in self.comps.iter().enumerate() {
            if k > 0 {
                f.write_str("|")?;
            }
            for (r, x) in p.iter().enumerate() {
                if r > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
        }
        Ok(())
    }
}

/// Partitions of `n` in decreasing lexicographic order.
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn rec(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for k in (1..=n.min(max)).rev() {
            cur.push(k);
            rec(n - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All `ell`-multipartitions of `n`, in increasing lexicographic order.
pub fn multipartitions(n: u32, ell: usize) -> Vec<Multipartition> {
    fn rec(n: u32, ell: usize, cur: &mut Vec<Vec<u32>>, out: &mut Vec<Multipartition>) {
        if ell == 1 {
            for p in partitions(n) {
                cur.push(p);
                out.push(Multipartition { comps: cur.clone() });
                cur.pop();
            }
            return;
        }
        for k in 0..=n {
            for p in partitions(k) {
                cur.push(p);
                rec(n - k, ell - 1, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(n, ell, &mut Vec::new(), &mut out);
    out.sort();
    out
}
