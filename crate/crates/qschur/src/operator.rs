//! Operators of the polynomial representation: splits, merges, crossings,
//! shifts across red strands and multiplication by polynomials.
//!
//! A [`Layout`] is a row of strands read left to right. Black strands carry
//! dimension vectors and own consecutive positions in every node alphabet;
//! red strands carry a node label and own no variables.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::comp::{ShadowedComposition, VectorComposition};
use crate::dimvec::{self, DimVector};
use crate::error::{Error, Result};
use crate::perm;
use crate::poly::{self, Homogeneity, MultiPoly};

#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Strand {
    Red(usize),
    Black(DimVector),
}

impl fmt::Debug for Strand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Strand::Red(l) => write!(f, "w{l}"),
            Strand::Black(d) => write!(f, "({d})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Layout {
    e: usize,
    strands: Vec<Strand>,
}

impl Layout {
    pub fn new(e: usize, strands: Vec<Strand>) -> Result<Self> {
        for s in &strands {
            match s {
                Strand::Black(d) if d.e() != e || d.is_zero() => return Err(Error::DimensionMismatch),
                Strand::Red(l) if *l == 0 || *l > e => {
                    return Err(Error::TypeMismatch("red label out of range".into()));
                }
                _ => {}
            }
        }
        Ok(Self { e, strands })
    }

    pub fn from_composition(c: &VectorComposition) -> Self {
        Self { e: c.e(), strands: c.parts().iter().cloned().map(Strand::Black).collect() }
    }

    /// Red strand `k` followed by group `k`, for each `k`.
    pub fn from_shadowed(s: &ShadowedComposition) -> Self {
        let e = s.e();
        let mut strands = Vec::new();
        for (z, g) in s.charges().iter().zip(s.groups()) {
            strands.push(Strand::Red(dimvec::residue_label(*z, e)));
            strands.extend(g.parts().iter().cloned().map(Strand::Black));
        }
        Self { e, strands }
    }

    pub fn e(&self) -> usize {
        self.e
    }

    pub fn strands(&self) -> &[Strand] {
        &self.strands
    }

    pub fn len(&self) -> usize {
        self.strands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.strands.is_empty()
    }

    pub fn dim(&self) -> DimVector {
        let mut acc = DimVector::zero(self.e);
        for s in &self.strands {
            if let Strand::Black(d) = s {
                acc = &acc + d;
            }
        }
        acc
    }

    /// The black strands as a vector composition.
    pub fn blacks(&self) -> VectorComposition {
        let parts = self
            .strands
            .iter()
            .filter_map(|s| match s {
                Strand::Black(d) => Some(d.clone()),
                Strand::Red(_) => None,
            })
            .collect();
        VectorComposition::new(self.e, parts).expect("layouts hold nonzero blacks")
    }

    fn black(&self, k: usize) -> Result<&DimVector> {
        match self.strands.get(k) {
            Some(Strand::Black(d)) => Ok(d),
            _ => Err(Error::TypeMismatch("expected a black strand".into())),
        }
    }

    fn red(&self, k: usize) -> Result<usize> {
        match self.strands.get(k) {
            Some(Strand::Red(l)) => Ok(*l),
            _ => Err(Error::TypeMismatch("expected a red strand".into())),
        }
    }

    /// Node-wise start positions (0-based) of strand `k`'s variables.
    pub fn starts(&self, k: usize) -> Vec<usize> {
        let mut acc = vec![0usize; self.e];
        for s in &self.strands[..k] {
            if let Strand::Black(d) = s {
                for (i, a) in acc.iter_mut().enumerate() {
                    *a += d.at_index(i) as usize;
                }
            }
        }
        acc
    }

    /// Flat variable ranges of each black block at each node.
    pub fn block_ranges(&self) -> Vec<Vec<core::ops::Range<usize>>> {
        let off = poly::node_offsets(&self.dim());
        let mut out = Vec::new();
        for (k, s) in self.strands.iter().enumerate() {
            if let Strand::Black(d) = s {
                let st = self.starts(k);
                out.push(
                    (0..self.e)
                        .map(|i| {
                            let a = off[i] + st[i];
                            a..a + d.at_index(i) as usize
                        })
                        .collect(),
                );
            }
        }
        out
    }

    /// `f` is invariant under the Young subgroup of the blocks.
    pub fn is_invariant(&self, f: &MultiPoly) -> bool {
        self.block_ranges().into_iter().flatten().all(|r| f.is_symmetric_in(r))
    }

    /// Flat permutation `w0_J`, the longest element of the Young subgroup.
    pub fn longest_young(&self) -> Vec<usize> {
        let n = self.dim().size() as usize;
        let mut w = perm::identity(n);
        for r in self.block_ranges().into_iter().flatten() {
            let (a, b) = (r.start, r.end);
            w[a..b].reverse();
        }
        w
    }

    pub fn concat(&self, other: &Layout) -> Layout {
        assert_eq!(self.e, other.e);
        let mut strands = self.strands.clone();
        strands.extend(other.strands.iter().cloned());
        Layout { e: self.e, strands }
    }
}

impl fmt::Display for Layout {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, s) in self.strands.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{s:?}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Move {
    /// Joins the black strands at `k` and `k + 1`.
    Merge(usize),
    /// Splits the black strand at `k` into `(c, d)`.
    Split(usize, DimVector, DimVector),
    /// Merge followed by the split into the swapped pair.
    Cross(usize),
    /// `[red, black]` at `k` becomes `[black, red]`.
    ShiftLeft(usize),
    /// `[black, red]` at `k` becomes `[red, black]`.
    ShiftRight(usize),
    /// Multiplication by a polynomial in the full ambient.
    Poly(MultiPoly),
}

impl Move {
    /// Target layout and degree of the move applied at `l`.
    pub fn step(&self, l: &Layout) -> Result<(Layout, i64)> {
        let mut strands = l.strands.clone();
        let deg = match self {
            Move::Merge(k) => {
                let c = l.black(*k)?;
                let d = l.black(k + 1)?;
                let deg = DimVector::euler_pairing(c, d);
                strands[*k] = Strand::Black(c + d);
                strands.remove(k + 1);
                deg
            }
            Move::Split(k, c, d) => {
                let whole = l.black(*k)?;
                if c.is_zero() || d.is_zero() || &(c + d) != whole {
                    return Err(Error::TypeMismatch("split does not add up".into()));
                }
                strands[*k] = Strand::Black(c.clone());
                strands.insert(k + 1, Strand::Black(d.clone()));
                DimVector::euler_pairing(c, d)
            }
            Move::Cross(k) => {
                let c = l.black(*k)?;
                let d = l.black(k + 1)?;
                strands.swap(*k, k + 1);
                DimVector::crossing_degree(c, d)
            }
            Move::ShiftLeft(k) => {
                let j = l.red(*k)?;
                let c = l.black(k + 1)?;
                strands.swap(*k, k + 1);
                c.at(j as i64) as i64
            }
            Move::ShiftRight(k) => {
                let c = l.black(*k)?;
                let j = l.red(k + 1)?;
                strands.swap(*k, k + 1);
                c.at(j as i64) as i64
            }
            Move::Poly(h) => {
                if *h.ambient() != l.dim() {
                    return Err(Error::DimensionMismatch);
                }
                match h.homogeneity() {
                    Homogeneity::Zero => 0,
                    Homogeneity::Degree(d) => 2 * d as i64,
                    Homogeneity::Mixed => {
                        return Err(Error::TypeMismatch("polynomial is not homogeneous".into()));
                    }
                }
            }
        };
        Ok((Layout { e: l.e, strands }, deg))
    }

    /// The action on `f`, a polynomial invariant for `l`.
    pub fn act(&self, l: &Layout, f: &MultiPoly) -> MultiPoly {
        let amb = f.ambient().clone();
        let off = poly::node_offsets(&amb);
        match self {
            Move::Merge(k) => merge_action(l, *k, f),
            Move::Split(k, c, d) => {
                let st = l.starts(*k);
                let euler = poly::euler_class_at(&amb, &st, c, d);
                f * &euler
            }
            Move::Cross(k) => {
                let c = l.black(*k).expect("checked").clone();
                let d = l.black(k + 1).expect("checked").clone();
                let merged = merge_action(l, *k, f);
                let st = l.starts(*k);
                &merged * &poly::euler_class_at(&amb, &st, &d, &c)
            }
            Move::ShiftLeft(_) => f.clone(),
            Move::ShiftRight(k) => {
                let c = l.black(*k).expect("checked");
                let j = l.red(k + 1).expect("checked") - 1;
                let st = l.starts(*k);
                let mut m = vec![0u16; amb.size() as usize];
                for p in 0..c.at_index(j) as usize {
                    m[off[j] + st[j] + p] = 1;
                }
                f.mul_monomial(&m)
            }
            Move::Poly(h) => f * h,
        }
    }
}

fn merge_action(l: &Layout, k: usize, f: &MultiPoly) -> MultiPoly {
    let c = l.black(k).expect("checked");
    let d = l.black(k + 1).expect("checked");
    let off = poly::node_offsets(f.ambient());
    let st = l.starts(k);
    let mut out = f.clone();
    for i in 0..l.e {
        let (ci, di) = (c.at_index(i) as usize, d.at_index(i) as usize);
        if ci == 0 || di == 0 {
            continue;
        }
        out = out.demazure_perm_flat(off[i] + st[i], &perm::shuffle_longest(ci, di));
        if out.is_zero() {
            break;
        }
    }
    out
}

/// A chain of moves, applied first to last.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorExpr {
    source: Layout,
    target: Layout,
    moves: Vec<Move>,
    degree: i64,
}

impl OperatorExpr {
    pub fn identity(l: &Layout) -> Self {
        Self { source: l.clone(), target: l.clone(), moves: Vec::new(), degree: 0 }
    }

    pub fn from_moves(source: &Layout, moves: Vec<Move>) -> Result<Self> {
        let mut op = Self::identity(source);
        for m in moves {
            op.push(m)?;
        }
        Ok(op)
    }

    pub fn push(&mut self, m: Move) -> Result<()> {
        let (t, d) = m.step(&self.target)?;
        self.target = t;
        self.degree += d;
        self.moves.push(m);
        Ok(())
    }

    pub fn source(&self) -> &Layout {
        &self.source
    }

    pub fn target(&self) -> &Layout {
        &self.target
    }

    pub fn moves(&self) -> &[Move] {
        &self.moves
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    /// Crossings, counted with multiplicity.
    pub fn crossings(&self) -> usize {
        self.moves.iter().filter(|m| matches!(m, Move::Cross(_))).count()
    }

    /// Layouts before each move, then the target.
    fn layouts(&self) -> Vec<Layout> {
        let mut out = vec![self.source.clone()];
        for m in &self.moves {
            let (t, _) = m.step(out.last().expect("nonempty")).expect("validated on push");
            out.push(t);
        }
        out
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &OperatorExpr) -> Result<Self> {
        if self.target != next.source {
            return Err(Error::TypeMismatch("target and source differ".into()));
        }
        let mut moves = self.moves.clone();
        moves.extend(next.moves.iter().cloned());
        Ok(Self { source: self.source.clone(), target: next.target.clone(), moves, degree: self.degree + next.degree })
    }

    /// The vertical mirror image: moves reversed, merges and splits
    /// exchanged, shift directions exchanged.
    pub fn flip(&self) -> Self {
        let layouts = self.layouts();
        let mut moves = Vec::with_capacity(self.moves.len());
        for (idx, m) in self.moves.iter().enumerate().rev() {
            let before = &layouts[idx];
            moves.push(match m {
                Move::Merge(k) => {
                    let c = before.black(*k).expect("validated").clone();
                    let d = before.black(k + 1).expect("validated").clone();
                    Move::Split(*k, c, d)
                }
                Move::Split(k, _, _) => Move::Merge(*k),
                Move::Cross(k) => Move::Cross(*k),
                Move::ShiftLeft(k) => Move::ShiftRight(*k),
                Move::ShiftRight(k) => Move::ShiftLeft(*k),
                Move::Poly(h) => Move::Poly(h.clone()),
            });
        }
        Self { source: self.target.clone(), target: self.source.clone(), moves, degree: self.degree }
    }

    /// Applies the chain to `f`, which must be invariant for the source.
    pub fn apply(&self, f: &MultiPoly) -> Result<MultiPoly> {
        if *f.ambient() != self.source.dim() {
            return Err(Error::DimensionMismatch);
        }
        if !self.source.is_invariant(f) {
            return Err(Error::NotInvariant);
        }
        Ok(self.apply_unchecked(f))
    }

    pub(crate) fn apply_unchecked(&self, f: &MultiPoly) -> MultiPoly {
        let mut cur = f.clone();
        let mut l = self.source.clone();
        for m in &self.moves {
            if cur.is_zero() {
                break;
            }
            cur = m.act(&l, &cur);
            l = m.step(&l).expect("validated on push").0;
        }
        cur
    }

    /// Side by side: `self` on the left, `other` on the right.
    pub fn horizontal(&self, other: &OperatorExpr) -> Result<Self> {
        if self.source.e != other.source.e {
            return Err(Error::DimensionMismatch);
        }
        let da = self.source.dim();
        let db = other.source.dim();
        let amb = &da + &db;
        let zero = vec![0usize; da.e()];
        let shift: Vec<usize> = da.entries().iter().map(|&x| x as usize).collect();
        let mut moves = Vec::new();
        for m in &self.moves {
            moves.push(match m {
                Move::Poly(h) => Move::Poly(h.embed(&amb, &zero)),
                other => other.clone(),
            });
        }
        let off = self.target.len();
        for m in &other.moves {
            moves.push(match m {
                Move::Merge(k) => Move::Merge(k + off),
                Move::Split(k, c, d) => Move::Split(k + off, c.clone(), d.clone()),
                Move::Cross(k) => Move::Cross(k + off),
                Move::ShiftLeft(k) => Move::ShiftLeft(k + off),
                Move::ShiftRight(k) => Move::ShiftRight(k + off),
                Move::Poly(h) => Move::Poly(h.embed(&amb, &shift)),
            });
        }
        Self::from_moves(&self.source.concat(&other.source), moves)
    }
}

/// A `Z`-linear combination of operators with one source and target.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorSum {
    source: Layout,
    target: Layout,
    terms: Vec<(BigInt, OperatorExpr)>,
}

impl OperatorSum {
    pub fn zero(source: &Layout, target: &Layout) -> Self {
        Self { source: source.clone(), target: target.clone(), terms: Vec::new() }
    }

    pub fn add(&mut self, c: BigInt, op: OperatorExpr) -> Result<()> {
        if op.source != self.source || op.target != self.target {
            return Err(Error::TypeMismatch("summands need equal source and target".into()));
        }
        if !c.is_zero() {
            self.terms.push((c, op));
        }
        Ok(())
    }

    pub fn source(&self) -> &Layout {
        &self.source
    }

    pub fn target(&self) -> &Layout {
        &self.target
    }

    pub fn terms(&self) -> &[(BigInt, OperatorExpr)] {
        &self.terms
    }

    pub fn apply(&self, f: &MultiPoly) -> Result<MultiPoly> {
        if !self.source.is_invariant(f) {
            return Err(Error::NotInvariant);
        }
        Ok(self.apply_unchecked(f))
    }

    fn apply_unchecked(&self, f: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero(f.ambient());
        for (c, op) in &self.terms {
            out = &out + &op.apply_unchecked(f).scale(c);
        }
        out
    }
}

impl From<OperatorExpr> for OperatorSum {
    fn from(op: OperatorExpr) -> Self {
        Self { source: op.source.clone(), target: op.target.clone(), terms: vec![(BigInt::one(), op)] }
    }
}

/// Polynomials on which two operators with the given source agree exactly
/// when they are equal: `Delta_{w0_J}` of the Artin monomials, a generating
/// set of the invariants over the total invariants.
pub fn test_set(source: &Layout) -> Vec<MultiPoly> {
    let d = source.dim();
    let w = source.longest_young();
    let mut out: Vec<MultiPoly> =
        poly::artin_basis(&d).iter().map(|m| m.demazure_perm_flat(0, &w)).filter(|p| !p.is_zero()).collect();
    out.sort_by(|a, b| a.terms().cmp(b.terms()));
    out.dedup();
    out
}

/// Equality of two operator sums in the algebra.
pub fn op_equal(a: &OperatorSum, b: &OperatorSum) -> Result<bool> {
    if a.source != b.source || a.target != b.target {
        return Err(Error::TypeMismatch("operators have different source or target".into()));
    }
    Ok(test_set(&a.source).iter().all(|f| a.apply_unchecked(f) == b.apply_unchecked(f)))
}

/// Integer rows describing an operator's action on a test set, with the
/// monomial columns given by `columns`.
pub fn action_rows(ops: &[OperatorSum], tests: &[MultiPoly]) -> Vec<Vec<BigInt>> {
    let images: Vec<Vec<MultiPoly>> =
        ops.iter().map(|op| tests.iter().map(|f| op.apply_unchecked(f)).collect()).collect();
    let mut columns: Vec<(usize, Vec<u16>)> = Vec::new();
    for imgs in &images {
        for (t, p) in imgs.iter().enumerate() {
            for (m, _) in p.terms() {
                columns.push((t, m.clone()));
            }
        }
    }
    columns.sort();
    columns.dedup();
    images.iter().map(|imgs| columns.iter().map(|(t, m)| imgs[*t].coeff(m)).collect()).collect()
}

/// Monomial symmetric basis of the source invariants in polynomial degree
/// `deg`: products of `m_lambda` over all blocks and nodes.
pub fn invariant_basis(l: &Layout, deg: u32) -> Vec<MultiPoly> {
    let amb = l.dim();
    let ranges: Vec<core::ops::Range<usize>> =
        l.block_ranges().into_iter().flatten().filter(|r| !r.is_empty()).collect();
    let mut out = Vec::new();
    fn rec(
        amb: &DimVector,
        ranges: &[core::ops::Range<usize>],
        idx: usize,
        left: u32,
        acc: &MultiPoly,
        out: &mut Vec<MultiPoly>,
    ) {
        if idx == ranges.len() {
            if left == 0 {
                out.push(acc.clone());
            }
            return;
        }
        let r = &ranges[idx];
        for k in 0..=left {
            for lam in crate::partition::partitions(k) {
                if lam.len() > r.len() {
                    continue;
                }
                let lam16: Vec<u16> = lam.iter().map(|&x| x as u16).collect();
                let m = MultiPoly::monomial_symmetric(amb, r.clone(), &lam16);
                rec(amb, ranges, idx + 1, left - k, &(acc * &m), out);
            }
        }
    }
    rec(&amb, &ranges, 0, deg, &MultiPoly::one(&amb), &mut out);
    out
}

/// Matrices of `op` on the monomial basis of the source invariants, one
/// per polynomial degree `0..=cutoff`. Columns are basis elements, rows
/// the monomials of `R(d)` met by the images, in increasing order.
pub fn graded_matrix(op: &OperatorSum, cutoff: u32) -> Vec<Vec<Vec<BigInt>>> {
    (0..=cutoff)
        .map(|k| {
            let basis = invariant_basis(&op.source, k);
            let images: Vec<MultiPoly> = basis.iter().map(|f| op.apply_unchecked(f)).collect();
            let mut rows: Vec<Vec<u16>> = images.iter().flat_map(|p| p.terms().map(|(m, _)| m.clone())).collect();
            rows.sort();
            rows.dedup();
            rows.iter().map(|m| images.iter().map(|p| p.coeff(m)).collect()).collect()
        })
        .collect()
}

/// A piece of a black strand, used to assemble split/permute/merge chains.
#[derive(Clone, Debug)]
pub enum Item {
    Red { label: usize, key: Vec<usize> },
    Piece { dim: DimVector, key: Vec<usize>, source: usize, target: usize },
}

impl Item {
    fn key(&self) -> &[usize] {
        match self {
            Item::Red { key, .. } | Item::Piece { key, .. } => key,
        }
    }
}

/// Builds `split -> h -> permute -> merge`. Consecutive pieces with equal
/// `source` form one black strand of the source layout; after sorting all
/// items by key with a bubble sort, consecutive pieces with equal `target`
/// are merged.
pub fn assemble(e: usize, items: Vec<Item>, h: Option<&MultiPoly>) -> Result<OperatorExpr> {
    let mut strands = Vec::new();
    let mut groups: Vec<Vec<DimVector>> = Vec::new();
    let mut last_source = None;
    for it in &items {
        match it {
            Item::Red { label, .. } => {
                strands.push(Strand::Red(*label));
                groups.push(Vec::new());
                last_source = None;
            }
            Item::Piece { dim, source, .. } => {
                if last_source == Some(*source) {
                    let g = groups.last_mut().expect("open group");
                    g.push(dim.clone());
                    if let Some(Strand::Black(d)) = strands.last_mut() {
                        *d = &*d + dim;
                    }
                } else {
                    strands.push(Strand::Black(dim.clone()));
                    groups.push(vec![dim.clone()]);
                    last_source = Some(*source);
                }
            }
        }
    }
    let source = Layout::new(e, strands)?;
    let mut op = OperatorExpr::identity(&source);
    let mut idx = 0;
    for g in &groups {
        if g.is_empty() {
            idx += 1;
            continue;
        }
        let mut rest = g.iter().skip(1).fold(DimVector::zero(e), |a, p| &a + p);
        for t in 0..g.len() - 1 {
            op.push(Move::Split(idx, g[t].clone(), rest.clone()))?;
            idx += 1;
            if t + 2 < g.len() {
                rest = rest.checked_sub(&g[t + 1]).expect("rest contains the next piece");
            }
        }
        idx += 1;
    }
    if let Some(h) = h
        && *h != MultiPoly::one(h.ambient())
    {
        op.push(Move::Poly(h.clone()))?;
    }
    let mut cur = items;
    loop {
        let mut changed = false;
        for j in 0..cur.len().saturating_sub(1) {
            if cur[j].key() > cur[j + 1].key() {
                let mv = match (&cur[j], &cur[j + 1]) {
                    (Item::Piece { .. }, Item::Piece { .. }) => Move::Cross(j),
                    (Item::Red { .. }, Item::Piece { .. }) => Move::ShiftLeft(j),
                    (Item::Piece { .. }, Item::Red { .. }) => Move::ShiftRight(j),
                    (Item::Red { .. }, Item::Red { .. }) => {
                        return Err(Error::TypeMismatch("red strands cannot cross".into()));
                    }
                };
                op.push(mv)?;
                cur.swap(j, j + 1);
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let mut idx = 0;
    let mut last_target = None;
    for it in &cur {
        match it {
            Item::Red { .. } => {
                idx += 1;
                last_target = None;
            }
            Item::Piece { target, .. } => {
                if last_target == Some(*target) {
                    op.push(Move::Merge(idx - 1))?;
                } else {
                    idx += 1;
                    last_target = Some(*target);
                }
            }
        }
    }
    Ok(op)
}
