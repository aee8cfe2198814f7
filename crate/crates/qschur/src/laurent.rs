//! Laurent polynomials in `q` with integer coefficients.

use alloc::collections::btree_map::{self, BTreeMap};
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// An element of `Z[q, q^-1]`.
///
/// Zero coefficients are never stored, so the empty map is `0` and
/// structural equality is ring equality.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentInt {
    coeffs: BTreeMap<i32, BigInt>,
}

impl LaurentInt {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c * q^k`.
    pub fn monomial(c: impl Into<BigInt>, k: i32) -> Self {
        let mut out = Self::zero();
        out.add_term(k, c.into());
        out
    }

    pub fn q_pow(k: i32) -> Self {
        Self::monomial(1, k)
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i32, C)>,
        C: Into<BigInt>,
    {
        let mut out = Self::zero();
        for (k, c) in terms {
            out.add_term(k, c.into());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn coeff(&self, k: i32) -> BigInt {
        self.coeffs.get(&k).cloned().unwrap_or_default()
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> btree_map::Iter<'_, i32, BigInt> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn add_term(&mut self, k: i32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(k) {
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

    /// The substitution `q -> q^-1`.
    pub fn bar(&self) -> Self {
        Self { coeffs: self.coeffs.iter().map(|(k, c)| (-k, c.clone())).collect() }
    }

    pub fn is_bar_invariant(&self) -> bool {
        self.coeffs.iter().all(|(k, c)| self.coeffs.get(&-k) == Some(c))
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: i32) -> Self {
        Self { coeffs: self.coeffs.iter().map(|(e, c)| (e + k, c.clone())).collect() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { coeffs: self.coeffs.iter().map(|(e, v)| (*e, v * c)).collect() }
    }

    /// Membership in `q^-1 Z[q^-1]`.
    pub fn in_negative_part(&self) -> bool {
        self.max_exp().is_none_or(|k| k < 0)
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }

    /// Value at `q = 1`.
    pub fn at_one(&self) -> BigInt {
        self.coeffs.values().sum()
    }

    /// Splits `self = beta + rest` with `beta` bar-invariant and `rest` in
    /// `q^-1 Z[q^-1]`. Such a splitting is unique.
    pub fn bar_symmetric_part(&self) -> Self {
        let mut beta = Self::zero();
        for (k, c) in self.coeffs.range(0..) {
            beta.add_term(*k, c.clone());
            if *k > 0 {
                beta.add_term(-*k, c.clone());
            }
        }
        beta
    }
}

impl fmt::Debug for LaurentInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Renders as `c*q^k` terms joined by `+`, highest exponent first,
/// e.g. `q^2+3-2*q^-1`. Zero renders as `0`.
impl fmt::Display for LaurentInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.coeffs.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if neg {
                f.write_str("-")?;
            } else if i > 0 {
                f.write_str("+")?;
            }
            if *k == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                if *k == 1 {
                    f.write_str("q")?;
                } else {
                    write!(f, "q^{k}")?;
                }
            }
        }
        Ok(())
    }
}

impl From<i64> for LaurentInt {
    fn from(c: i64) -> Self {
        Self::monomial(c, 0)
    }
}

impl From<BigInt> for LaurentInt {
    fn from(c: BigInt) -> Self {
        Self::monomial(c, 0)
    }
}

impl AddAssign<&LaurentInt> for LaurentInt {
    fn add_assign(&mut self, rhs: &LaurentInt) {
        for (k, c) in &rhs.coeffs {
            self.add_term(*k, c.clone());
        }
    }
}

impl SubAssign<&LaurentInt> for LaurentInt {
    fn sub_assign(&mut self, rhs: &LaurentInt) {
        for (k, c) in &rhs.coeffs {
            self.add_term(*k, -c);
        }
    }
}

impl Add for &LaurentInt {
    type Output = LaurentInt;
    fn add(self, rhs: &LaurentInt) -> LaurentInt {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentInt {
    type Output = LaurentInt;
    fn sub(self, rhs: &LaurentInt) -> LaurentInt {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &LaurentInt {
    type Output = LaurentInt;
    fn mul(self, rhs: &LaurentInt) -> LaurentInt {
        let mut out = LaurentInt::zero();
        for (a, x) in &self.coeffs {
            for (b, y) in &rhs.coeffs {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

impl Neg for &LaurentInt {
    type Output = LaurentInt;
    fn neg(self) -> LaurentInt {
        LaurentInt { coeffs: self.coeffs.iter().map(|(k, c)| (*k, -c)).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentInt {
            type Output = LaurentInt;
            fn $m(self, rhs: LaurentInt) -> LaurentInt {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentInt> for LaurentInt {
            type Output = LaurentInt;
            fn $m(self, rhs: &LaurentInt) -> LaurentInt {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentInt {
    type Output = LaurentInt;
    fn neg(self) -> LaurentInt {
        -&self
    }
}

impl Zero for LaurentInt {
    fn zero() -> Self {
        LaurentInt::zero()
    }
    fn is_zero(&self) -> bool {
        LaurentInt::is_zero(self)
    }
}

impl One for LaurentInt {
    fn one() -> Self {
        LaurentInt::one()
    }
}

impl core::iter::Sum for LaurentInt {
    fn sum<I: Iterator<Item = LaurentInt>>(iter: I) -> Self {
        let mut out = LaurentInt::zero();
        for x in iter {
            out += &x;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bar_examples() {
        let p = LaurentInt::from_terms([(2, 1), (0, 3)]);
        assert_eq!(p.bar(), LaurentInt::from_terms([(-2, 1), (0, 3)]));
        assert!(LaurentInt::zero().bar().is_zero());
        let s = LaurentInt::from_terms([(1, 1), (-1, 1)]);
        assert_eq!(s.bar(), s);
        assert!(s.is_bar_invariant());
    }

    #[test]
    fn cancellation_removes_terms() {
        let p = LaurentInt::from_terms([(3, 2), (3, -2), (1, 5)]);
        assert_eq!(p.len(), 1);
        assert_eq!(p.coeff(1), BigInt::from(5));
    }

    #[test]
    fn display_form() {
        let p = LaurentInt::from_terms([(2, 1), (0, 3), (-1, -2)]);
        assert_eq!(alloc::format!("{p}"), "q^2+3-2*q^-1");
        assert_eq!(alloc::format!("{}", LaurentInt::q_pow(1)), "q");
    }

    #[test]
    fn symmetric_part_splitting() {
        let p = LaurentInt::from_terms([(2, 1), (0, 3), (-1, -2), (-3, 4)]);
        let beta = p.bar_symmetric_part();
        assert!(beta.is_bar_invariant());
        assert!((&p - &beta).in_negative_part());
    }
}
