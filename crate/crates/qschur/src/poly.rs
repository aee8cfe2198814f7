//! The polynomial rings `R(d) = Z[x_{i,j} : 1 <= i <= e, 1 <= j <= d_i]`.
//!
//! Variables are flattened node by node: `x_{i,j}` sits at
//! `offset(i) + j - 1`. Monomials are exponent vectors compared
//! lexicographically, which fixes the canonical term order.

use alloc::collections::btree_map::{self, BTreeMap};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Range, Sub};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::dimvec::DimVector;
use crate::error::{Error, Result};
use crate::perm;

pub type Monomial = Vec<u16>;

/// A variable `x_{node, position}`, both 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VarIndex {
    pub node: usize,
    pub position: usize,
}

impl VarIndex {
    pub fn new(node: usize, position: usize) -> Self {
        Self { node, position }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Homogeneity {
    Zero,
    Degree(u32),
    Mixed,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    ambient: DimVector,
    terms: BTreeMap<Monomial, BigInt>,
}

/// Offsets of each node's alphabet in the flattened variable list.
pub fn node_offsets(d: &DimVector) -> Vec<usize> {
    let mut out = Vec::with_capacity(d.e());
    let mut acc = 0;
    for &x in d.entries() {
        out.push(acc);
        acc += x as usize;
    }
    out
}

impl MultiPoly {
    pub fn zero(ambient: &DimVector) -> Self {
        Self { ambient: ambient.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(ambient: &DimVector, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(ambient);
        let n = p.nvars();
        p.add_term(vec![0; n], c.into());
        p
    }

    pub fn one(ambient: &DimVector) -> Self {
        Self::constant(ambient, 1)
    }

    pub fn var(ambient: &DimVector, v: VarIndex) -> Result<Self> {
        let idx = flat_index(ambient, v)?;
        Ok(Self::var_flat(ambient, idx))
    }

    pub fn var_flat(ambient: &DimVector, idx: usize) -> Self {
        let mut p = Self::zero(ambient);
        let mut m = vec![0; p.nvars()];
        m[idx] = 1;
        p.add_term(m, BigInt::one());
        p
    }

    pub fn monomial(ambient: &DimVector, m: Monomial, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(ambient);
        assert_eq!(m.len(), p.nvars(), "monomial length must match the ambient");
        p.add_term(m, c.into());
        p
    }

    pub fn ambient(&self) -> &DimVector {
        &self.ambient
    }

    pub fn nvars(&self) -> usize {
        self.ambient.size() as usize
    }

    pub fn terms(&self) -> btree_map::Iter<'_, Monomial, BigInt> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &[u16]) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn homogeneity(&self) -> Homogeneity {
        let mut deg = None;
        for m in self.terms.keys() {
            let d: u32 = m.iter().map(|&x| x as u32).sum();
            match deg {
                None => deg = Some(d),
                Some(d0) if d0 != d => return Homogeneity::Mixed,
                _ => {}
            }
        }
        deg.map_or(Homogeneity::Zero, Homogeneity::Degree)
    }

    /// Largest total degree of a term, `None` for zero.
    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.iter().map(|&x| x as u32).sum()).max()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ambient);
        }
        Self { ambient: self.ambient.clone(), terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &[u16]) -> Self {
        Self {
            ambient: self.ambient.clone(),
            terms: self.terms.iter().map(|(k, v)| (k.iter().zip(m).map(|(a, b)| a + b).collect(), v.clone())).collect(),
        }
    }

    /// Relabels variables by a flat permutation `p`: `x_a -> x_{p[a]}`.
    /// No node check; see [`MultiPoly::apply_permutation`].
    pub fn permute_flat(&self, p: &[usize]) -> Self {
        let mut out = Self::zero(&self.ambient);
        for (m, c) in &self.terms {
            let mut nm = vec![0; m.len()];
            for (a, &x) in m.iter().enumerate() {
                nm[p[a]] = x;
            }
            out.add_term(nm, c.clone());
        }
        out
    }

    /// Applies a permutation of all variables that must preserve every
    /// node's alphabet.
    pub fn apply_permutation(&self, p: &[usize]) -> Result<Self> {
        if p.len() != self.nvars() || !perm::is_permutation(p) {
            return Err(Error::DimensionMismatch);
        }
        let off = node_offsets(&self.ambient);
        for (a, &b) in p.iter().enumerate() {
            if var_of_flat(&off, a).node != var_of_flat(&off, b).node {
                return Err(Error::MixesNodes);
            }
        }
        Ok(self.permute_flat(p))
    }

    /// Applies independent permutations of each node's alphabet; `perms[i]`
    /// acts on node `i + 1` in 0-based one-line notation.
    pub fn apply_node_permutation(&self, perms: &[Vec<usize>]) -> Result<Self> {
        if perms.len() != self.ambient.e() {
            return Err(Error::DimensionMismatch);
        }
        let off = node_offsets(&self.ambient);
        let mut flat = Vec::with_capacity(self.nvars());
        for (i, w) in perms.iter().enumerate() {
            if w.len() != self.ambient.at_index(i) as usize || !perm::is_permutation(w) {
                return Err(Error::DimensionMismatch);
            }
            flat.extend(w.iter().map(|&b| off[i] + b));
        }
        Ok(self.permute_flat(&flat))
    }

    pub fn swap_flat(&self, a: usize, b: usize) -> Self {
        let mut p = perm::identity(self.nvars());
        p.swap(a, b);
        self.permute_flat(&p)
    }

    /// Division with remainder by `x_a - x_b`, viewing `self` as a
    /// polynomial in `x_a`. The remainder is free of `x_a`.
    pub fn div_by_difference(&self, a: usize, b: usize) -> (Self, Self) {
        assert_ne!(a, b);
        let mut by_deg: BTreeMap<u16, BTreeMap<Monomial, BigInt>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut rest = m.clone();
            let k = rest[a];
            rest[a] = 0;
            by_deg.entry(k).or_default().insert(rest, c.clone());
        }
        let top = match by_deg.keys().next_back() {
            Some(&k) => k,
            None => return (self.clone(), self.clone()),
        };
        let mut quotient = Self::zero(&self.ambient);
        // Synthetic division at the root x_a = x_b, from the top coefficient down.
        let mut carry: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for k in (0..=top).rev() {
            let mut cur = by_deg.remove(&k).unwrap_or_default();
            for (m, c) in carry {
                let mut nm = m;
                nm[b] += 1;
                let slot = cur.entry(nm).or_insert_with(BigInt::zero);
                *slot += c;
            }
            cur.retain(|_, c| !c.is_zero());
            if k == 0 {
                let remainder = Self { ambient: self.ambient.clone(), terms: cur };
                return (quotient, remainder);
            }
            for (m, c) in &cur {
                let mut nm = m.clone();
                nm[a] = k - 1;
                quotient.add_term(nm, c.clone());
            }
            carry = cur;
        }
        unreachable!()
    }

    /// `(f - s f) / (x_a - x_b)` where `s` swaps `x_a` and `x_b`.
    pub fn divided_difference(&self, a: usize, b: usize) -> Self {
        let num = self - &self.swap_flat(a, b);
        let (q, r) = num.div_by_difference(a, b);
        assert!(r.is_zero(), "divided difference left a remainder");
        q
    }

    /// The Demazure operator `Delta_j` on node `node`, swapping positions
    /// `j` and `j + 1` (1-based).
    pub fn demazure(&self, node: usize, j: usize) -> Result<Self> {
        let a = flat_index(&self.ambient, VarIndex::new(node, j))?;
        let b = flat_index(&self.ambient, VarIndex::new(node, j + 1))?;
        Ok(self.divided_difference(a, b))
    }

    /// `Delta_{i_1} Delta_{i_2} ... (f)`, the rightmost letter acting first.
    pub fn demazure_word(&self, word: &[(usize, usize)]) -> Result<Self> {
        for &(node, j) in word {
            flat_index(&self.ambient, VarIndex::new(node, j + 1))?;
        }
        let mut out = self.clone();
        for &(node, j) in word.iter().rev() {
            out = out.demazure(node, j)?;
            if out.is_zero() {
                break;
            }
        }
        Ok(out)
    }

    /// `Delta_w` for `w` in the symmetric group on the flat variables
    /// `start .. start + w.len()`, through the bubble-sort reduced word.
    pub fn demazure_perm_flat(&self, start: usize, w: &[usize]) -> Self {
        let mut out = self.clone();
        for &i in perm::reduced_word(w).iter().rev() {
            if out.is_zero() {
                break;
            }
            out = out.divided_difference(start + i, start + i + 1);
        }
        out
    }

    /// Invariance under all permutations of the flat range.
    pub fn is_symmetric_in(&self, range: Range<usize>) -> bool {
        if range.len() < 2 {
            return true;
        }
        range.clone().skip(1).all(|a| self.swap_flat(a - 1, a) == *self)
    }

    /// Evaluation preserving the ambient: substitutes `x_a -> x_b`.
    pub fn substitute_var(&self, a: usize, b: usize) -> Self {
        let mut out = Self::zero(&self.ambient);
        for (m, c) in &self.terms {
            let mut nm = m.clone();
            nm[b] += nm[a];
            nm[a] = 0;
            out.add_term(nm, c.clone());
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(&self.ambient);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }
}

impl MultiPoly {
    /// Re-embeds into a larger ambient, sending `x_{i,j}` to
    /// `x_{i, j + shift[i-1]}`.
    pub fn embed(&self, ambient: &DimVector, shift: &[usize]) -> Self {
        let dst = node_offsets(ambient);
        let mut map = Vec::with_capacity(self.nvars());
        for i in 0..self.ambient.e() {
            for j in 0..self.ambient.at_index(i) as usize {
                let pos = j + shift[i];
                assert!(pos < ambient.at_index(i) as usize, "embedding out of range");
                map.push(dst[i] + pos);
            }
        }
        let mut out = Self::zero(ambient);
        let n = out.nvars();
        for (m, c) in &self.terms {
            let mut nm = vec![0; n];
            for (a, &x) in m.iter().enumerate() {
                nm[map[a]] = x;
            }
            out.add_term(nm, c.clone());
        }
        out
    }

    /// The monomial symmetric function `m_lambda` in the flat variables
    /// `range`; zero if `lambda` has more parts than variables.
    pub fn monomial_symmetric(ambient: &DimVector, range: Range<usize>, lambda: &[u16]) -> Self {
        let mut out = Self::zero(ambient);
        let k = range.len();
        if lambda.len() > k {
            return out;
        }
        let mut exps: Vec<u16> = lambda.to_vec();
        exps.resize(k, 0);
        exps.sort();
        let n = out.nvars();
        loop {
            let mut m = vec![0; n];
            for (a, &x) in exps.iter().enumerate() {
                m[range.start + a] = x;
            }
            out.add_term(m, BigInt::one());
            if !perm::next_permutation(&mut exps) {
                return out;
            }
        }
    }
}

/// The variable at flat index `a`, given [`node_offsets`].
pub fn var_of_flat(offsets: &[usize], a: usize) -> VarIndex {
    // Empty alphabets repeat the next offset, so the last match is the owner.
    let i = offsets.iter().rposition(|&o| o <= a).expect("offsets start at 0");
    VarIndex::new(i + 1, a - offsets[i] + 1)
}

/// Flat index of `x_{node, position}` in `R(d)`.
pub fn flat_index(d: &DimVector, v: VarIndex) -> Result<usize> {
    if v.node == 0 || v.node > d.e() || v.position == 0 || v.position > d.at(v.node as i64) as usize {
        return Err(Error::PositionOutOfRange { node: v.node, position: v.position });
    }
    Ok(node_offsets(d)[v.node - 1] + v.position - 1)
}

/// The Euler class of the split `c + d -> (c, d)` in `R(c + d)`:
/// `prod_i prod_{j <= c_{i+1}} prod_{c_i < k <= c_i + d_i} (x_{i+1,j} - x_{i,k})`.
pub fn euler_class(c: &DimVector, d: &DimVector) -> MultiPoly {
    let ambient = c + d;
    let starts = vec![0; c.e()];
    euler_class_at(&ambient, &starts, c, d)
}

/// The Euler class for a block whose node-`i` variables start at position
/// `starts[i-1]` (0-based, relative to the node's alphabet) in `ambient`.
pub fn euler_class_at(ambient: &DimVector, starts: &[usize], c: &DimVector, d: &DimVector) -> MultiPoly {
    let e = c.e();
    let off = node_offsets(ambient);
    let mut out = MultiPoly::one(ambient);
    for i in 0..e {
        let next = (i + 1) % e;
        for j in 0..c.at_index(next) as usize {
            for k in c.at_index(i) as usize..(c.at_index(i) + d.at_index(i)) as usize {
                let xa = off[next] + starts[next] + j;
                let xb = off[i] + starts[i] + k;
                let lin = &MultiPoly::var_flat(ambient, xa) - &MultiPoly::var_flat(ambient, xb);
                out = &out * &lin;
            }
        }
    }
    out
}

/// The monomials `prod x_{i,j}^{a_{ij}}` with `0 <= a_{ij} <= d_i - j`,
/// a basis of `R(d)` over its total invariants.
pub fn artin_basis(d: &DimVector) -> Vec<MultiPoly> {
    let n = d.size() as usize;
    let off = node_offsets(d);
    let mut bounds = vec![0u16; n];
    for i in 0..d.e() {
        let di = d.at_index(i) as usize;
        for j in 0..di {
            bounds[off[i] + j] = (di - 1 - j) as u16;
        }
    }
    let mut out = Vec::new();
    let mut cur = vec![0u16; n];
    loop {
        out.push(MultiPoly::monomial(d, cur.clone(), 1));
        let mut k = 0;
        loop {
            if k == n {
                return out;
            }
            if cur[k] < bounds[k] {
                cur[k] += 1;
                break;
            }
            cur[k] = 0;
            k += 1;
        }
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.ambient, rhs.ambient, "ambient mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.ambient, rhs.ambient, "ambient mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.ambient, rhs.ambient, "ambient mismatch");
        let mut out = MultiPoly::zero(&self.ambient);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                let m: Monomial = m1.iter().zip(m2).map(|(a, b)| a + b).collect();
                out.add_term(m, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly { ambient: self.ambient.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Terms like `3*x1_2^2*x2_1`, where `xi_j` is `x_{i,j}`.
impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let off = node_offsets(&self.ambient);
        for (t, (m, c)) in self.terms.iter().enumerate() {
            if c.is_negative() {
                f.write_str("-")?;
            } else if t > 0 {
                f.write_str("+")?;
            }
            let mag = c.abs();
            let mut factors = Vec::new();
            for (a, &x) in m.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                let v = var_of_flat(&off, a);
                factors.push((v.node, v.position, x));
            }
            if factors.is_empty() {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            for (k, (node, pos, x)) in factors.into_iter().enumerate() {
                if k > 0 {
                    f.write_str("*")?;
                }
                write!(f, "x{node}_{pos}")?;
                if x > 1 {
                    write!(f, "^{x}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(v: &[u32]) -> DimVector {
        DimVector::new(v.to_vec())
    }

    #[test]
    fn demazure_examples() {
        let amb = d(&[2]);
        let x1 = MultiPoly::var(&amb, VarIndex::new(1, 1)).unwrap();
        let x2 = MultiPoly::var(&amb, VarIndex::new(1, 2)).unwrap();
        assert_eq!(x1.demazure(1, 1).unwrap(), MultiPoly::one(&amb));
        assert!((&x1 + &x2).demazure(1, 1).unwrap().is_zero());
        assert_eq!(x1.pow(2).demazure(1, 1).unwrap(), &x1 + &x2);
    }

    #[test]
    fn division_remainder_is_evaluation() {
        let amb = d(&[3]);
        let x = |j| MultiPoly::var(&amb, VarIndex::new(1, j)).unwrap();
        let f = &(&x(1).pow(3) * &x(2)) + &x(3);
        let (q, r) = f.div_by_difference(0, 1);
        assert_eq!(r, f.substitute_var(0, 1));
        let lin = &x(1) - &x(2);
        assert_eq!(&(&q * &lin) + &r, f);
    }

    #[test]
    fn permutation_checks() {
        let amb = d(&[2, 1]);
        let x11 = MultiPoly::var(&amb, VarIndex::new(1, 1)).unwrap();
        let x12 = MultiPoly::var(&amb, VarIndex::new(1, 2)).unwrap();
        assert_eq!(x11.apply_permutation(&[1, 0, 2]).unwrap(), x12);
        assert_eq!(x11.apply_permutation(&[2, 1, 0]), Err(Error::MixesNodes));
        let s = &x11 + &x12;
        assert_eq!(s.apply_node_permutation(&[vec![1, 0], vec![0]]).unwrap(), s);
    }

    #[test]
    fn euler_examples() {
        let e2 = |v: &[u32]| d(v);
        let x = |amb: &DimVector, n, p| MultiPoly::var(amb, VarIndex::new(n, p)).unwrap();
        let amb = e2(&[1, 1]);
        assert_eq!(euler_class(&e2(&[1, 0]), &e2(&[0, 1])), &x(&amb, 1, 1) - &x(&amb, 2, 1));
        assert_eq!(euler_class(&e2(&[0, 1]), &e2(&[1, 0])), &x(&amb, 2, 1) - &x(&amb, 1, 1));
        let amb3 = d(&[0, 2, 0]);
        assert_eq!(euler_class(&d(&[0, 1, 0]), &d(&[0, 1, 0])), MultiPoly::one(&amb3));
        assert_eq!(euler_class(&d(&[0, 0, 1]), &d(&[1, 0, 0])), MultiPoly::one(&d(&[1, 0, 1])));
        let amb101 = d(&[1, 0, 1]);
        assert_eq!(euler_class(&d(&[1, 0, 0]), &d(&[0, 0, 1])), &x(&amb101, 1, 1) - &x(&amb101, 3, 1));
    }

    #[test]
    fn artin_examples() {
        assert_eq!(artin_basis(&d(&[1])), vec![MultiPoly::one(&d(&[1]))]);
        let a2 = artin_basis(&d(&[2]));
        assert_eq!(a2.len(), 2);
        assert_eq!(a2[1], MultiPoly::var(&d(&[2]), VarIndex::new(1, 1)).unwrap());
        let a21 = artin_basis(&d(&[2, 1]));
        assert_eq!(a21.len(), 2);
        assert_eq!(artin_basis(&d(&[3, 2])).len(), 12);
    }

    #[test]
    fn display_names_variables() {
        let amb = d(&[1, 2]);
        let p = &MultiPoly::var(&amb, VarIndex::new(2, 2)).unwrap() - &MultiPoly::constant(&amb, 3);
        assert_eq!(alloc::format!("{p}"), "-3+x2_2");
    }
}
