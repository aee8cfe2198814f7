//! Semistandard multitableaux.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::comp::{ShadowedComposition, VectorComposition};
use crate::dimvec::DimVector;
use crate::error::{Error, Result};
use crate::partition::{Cell, Charge, Multipartition};
use crate::perm::Perm;

/// An entry `number_alphabet`. The derived order compares the alphabet
/// first and then the number.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Entry {
    pub alphabet: usize,
    pub number: u32,
}

impl Entry {
    pub fn new(number: u32, alphabet: usize) -> Self {
        Self { alphabet, number }
    }
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{}", self.number, self.alphabet)
    }
}

/// Which components an alphabet may fill.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum AlphabetRule {
    /// Alphabet `k` only in components `1..=k`.
    #[default]
    Initial,
    /// Alphabet `k` only in components `k..=l`.
    Final,
}

impl AlphabetRule {
    pub fn allows(self, alphabet: usize, comp: usize) -> bool {
        match self {
            AlphabetRule::Initial => comp <= alphabet,
            AlphabetRule::Final => comp >= alphabet,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    shape: Multipartition,
    fill: BTreeMap<Cell, Entry>,
}

impl Tableau {
    /// Checks the row, column, alphabet and no-gap rules.
    pub fn new(shape: Multipartition, fill: BTreeMap<Cell, Entry>, rule: AlphabetRule) -> Result<Self> {
        let cells = shape.cells();
        if cells.len() != fill.len() || cells.iter().any(|c| !fill.contains_key(c)) {
            return Err(Error::TypeMismatch("filling does not match the shape".into()));
        }
        let ell = shape.ell();
        for (c, v) in &fill {
            if v.alphabet == 0 || v.alphabet > ell || v.number == 0 {
                return Err(Error::TypeMismatch("entry out of range".into()));
            }
            if !rule.allows(v.alphabet, c.comp) {
                return Err(Error::TypeMismatch("alphabet not allowed in this component".into()));
            }
            if c.col > 1 && fill[&Cell::new(c.comp, c.row, c.col - 1)] > *v {
                return Err(Error::TypeMismatch("row decreases".into()));
            }
            if c.row > 1 && fill[&Cell::new(c.comp, c.row - 1, c.col)] >= *v {
                return Err(Error::TypeMismatch("column does not increase".into()));
            }
        }
        for v in fill.values() {
            for g in 1..v.number {
                if !fill.values().any(|w| *w == Entry::new(g, v.alphabet)) {
                    return Err(Error::TypeMismatch("tableau has a gap".into()));
                }
            }
        }
        Ok(Self { shape, fill })
    }

    /// Row `r` of component `k` filled with `r_k`.
    pub fn ground_state(shape: &Multipartition) -> Self {
        let fill = shape.cells().into_iter().map(|c| (c, Entry::new(c.row as u32, c.comp))).collect();
        Self { shape: shape.clone(), fill }
    }

    pub fn shape(&self) -> &Multipartition {
        &self.shape
    }

    pub fn entry(&self, c: Cell) -> Option<Entry> {
        self.fill.get(&c).copied()
    }

    /// Boxes with their entries in reading order.
    pub fn filling(&self) -> impl Iterator<Item = (Cell, Entry)> + '_ {
        self.fill.iter().map(|(c, v)| (*c, *v))
    }

    /// Entries read along rows, component by component.
    pub fn reading_word(&self) -> Vec<Entry> {
        self.fill.values().copied().collect()
    }

    pub fn is_standard(&self) -> bool {
        let mut seen: Vec<Entry> = self.reading_word();
        seen.sort();
        seen.windows(2).all(|w| w[0] != w[1])
    }

    /// Largest number used in each alphabet.
    pub fn alphabet_lengths(&self) -> Vec<u32> {
        let mut out = vec![0; self.shape.ell()];
        for v in self.fill.values() {
            out[v.alphabet - 1] = out[v.alphabet - 1].max(v.number);
        }
        out
    }

    /// Multiplicities of `g_k`, as the `l`-multicomposition
    /// `(mu^(1), .., mu^(l))`.
    pub fn multiplicities(&self) -> Vec<Vec<u32>> {
        let mut out: Vec<Vec<u32>> = self.alphabet_lengths().iter().map(|&m| vec![0; m as usize]).collect();
        for v in self.fill.values() {
            out[v.alphabet - 1][v.number as usize - 1] += 1;
        }
        out
    }

    /// The refined type: part `g` of group `k` is the residue content of
    /// the boxes holding `g_k`.
    pub fn mu_grave(&self, charge: &Charge) -> ShadowedComposition {
        let e = charge.e;
        let mut groups: Vec<Vec<DimVector>> =
            self.alphabet_lengths().iter().map(|&m| vec![DimVector::zero(e); m as usize]).collect();
        for (c, v) in &self.fill {
            groups[v.alphabet - 1][v.number as usize - 1].bump_residue(residue_of(charge, *c));
        }
        let groups =
            groups.into_iter().map(|g| VectorComposition::new(e, g).expect("no gaps, so no zero parts")).collect();
        ShadowedComposition::new(charge.z.clone(), groups).expect("one group per component")
    }

    /// The refined shape, depending only on the shape.
    pub fn lambda_grave(&self, charge: &Charge) -> ShadowedComposition {
        lambda_grave(&self.shape, charge)
    }

    /// The minimal length permutation sorting the reading word, 0-based:
    /// position `a` of the word moves to position `w[a]`.
    pub fn w(&self) -> Perm {
        let word = self.reading_word();
        let mut idx: Vec<usize> = (0..word.len()).collect();
        idx.sort_by_key(|&a| (word[a], a));
        let mut w = vec![0; word.len()];
        for (pos, &a) in idx.iter().enumerate() {
            w[a] = pos;
        }
        w
    }

    /// Boxes holding the entry `v`, in reading order.
    pub fn cells_with(&self, v: Entry) -> Vec<Cell> {
        self.fill.iter().filter(|(_, w)| **w == v).map(|(c, _)| *c).collect()
    }

    /// Boxes holding entries strictly smaller than `v`.
    pub fn cells_below_entry(&self, v: Entry) -> Vec<Cell> {
        self.fill.iter().filter(|(_, w)| **w < v).map(|(c, _)| *c).collect()
    }

    /// Distinct entries in increasing order.
    pub fn entries(&self) -> Vec<Entry> {
        let mut out = self.reading_word();
        out.sort();
        out.dedup();
        out
    }
}

fn residue_of(charge: &Charge, c: Cell) -> i64 {
    charge.residue(c) as i64
}

/// Group `k` lists the residue contents of the rows of component `k`.
pub fn lambda_grave(shape: &Multipartition, charge: &Charge) -> ShadowedComposition {
    let e = charge.e;
    let groups = shape
        .components()
        .iter()
        .enumerate()
        .map(|(k, p)| {
            let parts = p
                .iter()
                .enumerate()
                .map(|(r, &len)| {
                    let cells: Vec<Cell> = (1..=len as usize).map(|c| Cell::new(k + 1, r + 1, c)).collect();
                    charge.content(&cells)
                })
                .collect();
            VectorComposition::new(e, parts).expect("rows are nonempty")
        })
        .collect();
    ShadowedComposition::new(charge.z.clone(), groups).expect("one group per component")
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Rows separated by `/`, components by `|`, e.g. `1_1 1_1/2_1|1_2`.
impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, p) in self.shape.components().iter().enumerate() {
            if k > 0 {
                f.write_str("|")?;
            }
            for (r, &len) in p.iter().enumerate() {
                if r > 0 {
                    f.write_str("/")?;
                }
                for c in 0..len as usize {
                    if c > 0 {
                        f.write_str(" ")?;
                    }
                    write!(f, "{}", self.fill[&Cell::new(k + 1, r + 1, c + 1)])?;
                }
            }
        }
        Ok(())
    }
}

/// All horizontal strips `outer / inner` with `inner <= outer <= bound`,
/// nonempty, inside the allowed components. Returned as cell lists.
pub fn horizontal_strips(
    inner: &Multipartition,
    bound: Option<&Multipartition>,
    allowed: &dyn Fn(usize) -> bool,
    max_size: u32,
) -> Vec<Vec<Cell>> {
    let ell = inner.ell();
    // Per component: the choices of row growth.
    let mut per_comp: Vec<Vec<Vec<Cell>>> = Vec::with_capacity(ell);
    for k in 1..=ell {
        let mut opts = Vec::new();
        if !allowed(k) {
            opts.push(Vec::new());
            per_comp.push(opts);
            continue;
        }
        let rows = inner.components()[k - 1].len();
        let mut cur = Vec::new();
        grow_rows(inner, bound, k, 1, rows + 1, max_size, &mut cur, &mut opts);
        per_comp.push(opts);
    }
    let mut out = Vec::new();
    let mut acc = Vec::new();
    combine(&per_comp, 0, max_size, &mut acc, &mut out);
    out.retain(|s| !s.is_empty());
    out
}

#[allow(clippy::too_many_arguments)]
fn grow_rows(
    inner: &Multipartition,
    bound: Option<&Multipartition>,
    k: usize,
    r: usize,
    last_row: usize,
    budget: u32,
    cur: &mut Vec<Cell>,
    out: &mut Vec<Vec<Cell>>,
) {
    if r > last_row {
        out.push(cur.clone());
        return;
    }
    let old = inner.row(k, r);
    let mut cap = if r == 1 { old + budget } else { inner.row(k, r - 1) };
    if let Some(b) = bound {
        cap = cap.min(b.row(k, r));
    }
    cap = cap.min(old + budget);
    for len in old..=cap.max(old) {
        let added = len - old;
        for c in old + 1..=len {
            cur.push(Cell::new(k, r, c as usize));
        }
        grow_rows(inner, bound, k, r + 1, last_row, budget - added, cur, out);
        cur.truncate(cur.len() - added as usize);
    }
}

fn combine(per_comp: &[Vec<Vec<Cell>>], k: usize, budget: u32, acc: &mut Vec<Cell>, out: &mut Vec<Vec<Cell>>) {
    if k == per_comp.len() {
        out.push(acc.clone());
        return;
    }
    for opt in &per_comp[k] {
        if opt.len() as u32 > budget {
            continue;
        }
        acc.extend_from_slice(opt);
        combine(per_comp, k + 1, budget - opt.len() as u32, acc, out);
        acc.truncate(acc.len() - opt.len());
    }
}

/// Semistandard tableaux of a shape, optionally of a fixed refined type
/// `mu_grave`. Built by adding one horizontal strip per entry, in
/// increasing entry order.
pub fn enumerate_semistandard(
    shape: &Multipartition,
    charge: &Charge,
    rule: AlphabetRule,
    type_filter: Option<&ShadowedComposition>,
) -> Vec<Tableau> {
    let ell = shape.ell();
    if let Some(t) = type_filter
        && (t.ell() != ell || t.e() != charge.e || t.dim() != charge.content(&shape.cells()))
    {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut fill = BTreeMap::new();
    let st = Search { shape, charge, rule, type_filter, ell };
    st.rec(&Multipartition::empty(ell), 1, 1, &mut fill, &mut out);
    out
}

struct Search<'a> {
    shape: &'a Multipartition,
    charge: &'a Charge,
    rule: AlphabetRule,
    type_filter: Option<&'a ShadowedComposition>,
    ell: usize,
}

impl Search<'_> {
    fn rec(&self, cur: &Multipartition, a: usize, g: u32, fill: &mut BTreeMap<Cell, Entry>, out: &mut Vec<Tableau>) {
        if cur == self.shape {
            // Any remaining required parts make the type unreachable.
            if let Some(t) = self.type_filter {
                let done = (a..=self.ell).all(|b| {
                    let need = t.groups()[b - 1].len() as u32;
                    if b == a { g > need } else { need == 0 }
                });
                if !done {
                    return;
                }
            }
            out.push(Tableau { shape: self.shape.clone(), fill: fill.clone() });
            return;
        }
        if a > self.ell {
            return;
        }
        let rest = self.shape.size() - cur.size();
        let target = self.type_filter.and_then(|t| t.groups()[a - 1].parts().get(g as usize - 1));
        let group_done = self.type_filter.is_some_and(|t| g as usize > t.groups()[a - 1].len());
        if !group_done {
            let allowed = |k: usize| self.rule.allows(a, k);
            for strip in horizontal_strips(cur, Some(self.shape), &allowed, rest) {
                if let Some(t) = target
                    && self.charge.content(&strip) != *t
                {
                    continue;
                }
                for c in &strip {
                    fill.insert(*c, Entry::new(g, a));
                }
                self.rec(&cur.with_cells(&strip), a, g + 1, fill, out);
                for c in &strip {
                    fill.remove(c);
                }
            }
        }
        let may_leave = self.type_filter.is_none_or(|_| group_done);
        if may_leave {
            self.rec(cur, a + 1, 1, fill, out);
        }
    }
}

/// All semistandard tableaux with `n` boxes over all shapes.
pub fn all_semistandard(n: u32, charge: &Charge, rule: AlphabetRule) -> Vec<Tableau> {
    crate::partition::multipartitions(n, charge.ell())
        .iter()
        .flat_map(|s| enumerate_semistandard(s, charge, rule, None))
        .collect()
}

/// The number of same-shape pairs `(S, T)` with `n` boxes where `S` is
/// standard and `T` has multiplicities `xi` (`xi^(k)_g` copies of `g_k`).
pub fn count_pairs(xi: &[Vec<u32>], charge: &Charge, rule: AlphabetRule) -> u64 {
    let n: u32 = xi.iter().flatten().sum();
    let ell = charge.ell();
    let mut total = 0u64;
    for shape in crate::partition::multipartitions(n, ell) {
        let all = enumerate_semistandard(&shape, charge, rule, None);
        let s = all.iter().filter(|t| t.is_standard()).count() as u64;
        let t = all.iter().filter(|t| t.multiplicities() == *xi).count() as u64;
        total += s * t;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn ch(e: usize, z: &[i64]) -> Charge {
        Charge::new(e, z.to_vec())
    }

    #[test]
    fn single_box() {
        let s = Multipartition::new(vec![vec![1]]).unwrap();
        let all = enumerate_semistandard(&s, &ch(3, &[0]), AlphabetRule::Initial, None);
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].to_string(), "1_1");
    }

    #[test]
    fn standard_fillings_of_21() {
        let s = Multipartition::new(vec![vec![2, 1]]).unwrap();
        let all = enumerate_semistandard(&s, &ch(3, &[0]), AlphabetRule::Initial, None);
        let std: Vec<_> = all.iter().filter(|t| t.is_standard()).collect();
        assert_eq!(std.len(), 2);
        // Plus one tableau each of types (2,1) and (1,2).
        assert_eq!(all.len(), 2 + 2);
    }

    #[test]
    fn ground_state_reading_word_sorted() {
        let s = Multipartition::new(vec![vec![3, 1], vec![2]]).unwrap();
        let g = Tableau::ground_state(&s);
        assert_eq!(g.w(), crate::perm::identity(6));
        assert!(Tableau::new(s.clone(), g.fill.clone(), AlphabetRule::Initial).is_ok());
    }

    #[test]
    fn gaps_rejected() {
        let s = Multipartition::new(vec![vec![1]]).unwrap();
        let fill = [(Cell::new(1, 1, 1), Entry::new(2, 1))].into_iter().collect();
        assert!(Tableau::new(s, fill, AlphabetRule::Initial).is_err());
    }
}
