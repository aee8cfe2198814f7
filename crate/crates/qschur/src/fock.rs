//! The level one `l`-fold q-Fock space: box-adding action, h-vectors, the
//! bar involution and the canonical basis.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Sub};

use crate::comp::ShadowedComposition;
use crate::degree::{self, DegreeConvention};
use crate::dimvec::DimVector;
use crate::error::{Error, Result};
use crate::laurent::LaurentInt;
use crate::partition::{self, Cell, Charge, Multipartition};
use crate::tableau;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FockConfig {
    pub charge: Charge,
    /// Integer lifts of the charges, only used by [`FockConfig::is_m_dominant`].
    pub lifts: Option<Vec<i64>>,
    pub convention: DegreeConvention,
}

impl FockConfig {
    pub fn new(e: usize, z: Vec<i64>) -> Result<Self> {
        if e < 2 {
            return Err(Error::TypeMismatch("e must exceed 1".into()));
        }
        if z.is_empty() {
            return Err(Error::TypeMismatch("at least one charge".into()));
        }
        Ok(Self { charge: Charge::new(e, z), lifts: None, convention: DegreeConvention::default() })
    }

    pub fn with_lifts(mut self, lifts: Vec<i64>) -> Result<Self> {
        if lifts.len() != self.ell() {
            return Err(Error::TypeMismatch("one lift per charge".into()));
        }
        self.lifts = Some(lifts);
        Ok(self)
    }

    pub fn with_convention(mut self, conv: DegreeConvention) -> Self {
        self.convention = conv;
        self
    }

    pub fn e(&self) -> usize {
        self.charge.e
    }

    pub fn ell(&self) -> usize {
        self.charge.ell()
    }

    /// `z_i - z_{i+1} >= m` for consecutive lifts. Without lifts the
    /// charges themselves are used.
    pub fn is_m_dominant(&self, m: i64) -> bool {
        let z = self.lifts.as_ref().unwrap_or(&self.charge.z);
        z.windows(2).all(|w| w[0] - w[1] >= m)
    }
}

/// A finite combination of standard basis vectors `u_xi`.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct FockVector {
    terms: BTreeMap<Multipartition, LaurentInt>,
}

impl FockVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(xi: Multipartition) -> Self {
        let mut v = Self::zero();
        v.add_term(xi, &LaurentInt::one());
        v
    }

    /// `u_empty` with a single component.
    pub fn vacuum() -> Self {
        Self::basis(Multipartition::empty(1))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, xi: &Multipartition) -> LaurentInt {
        self.terms.get(xi).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Multipartition, &LaurentInt)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Multipartition> {
        self.terms.keys()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, xi: Multipartition, c: &LaurentInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(xi.clone()).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&xi);
        }
    }

    pub fn scale(&self, c: &LaurentInt) -> Self {
        let mut out = Self::zero();
        for (xi, a) in &self.terms {
            out.add_term(xi.clone(), &(a * c));
        }
        out
    }

    /// Conjugates the coefficients only.
    pub fn bar_coeffs(&self) -> Self {
        Self { terms: self.terms.iter().map(|(k, c)| (k.clone(), c.bar())).collect() }
    }

    /// `v ⊗ u_empty`: one more, empty, component.
    pub fn push_empty(&self) -> Self {
        Self { terms: self.terms.iter().map(|(k, c)| (k.push_empty(), c.clone())).collect() }
    }
}

impl Add for &FockVector {
    type Output = FockVector;
    fn add(self, rhs: &FockVector) -> FockVector {
        let mut out = self.clone();
        for (xi, c) in &rhs.terms {
            out.add_term(xi.clone(), c);
        }
        out
    }
}

impl Sub for &FockVector {
    type Output = FockVector;
    fn sub(self, rhs: &FockVector) -> FockVector {
        let mut out = self.clone();
        for (xi, c) in &rhs.terms {
            out.add_term(xi.clone(), &-c);
        }
        out
    }
}

impl fmt::Debug for FockVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `(c)u[xi] + ..`, zero as `0`.
impl fmt::Display for FockVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (xi, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})u[{xi}]")?;
        }
        Ok(())
    }
}

/// The bilinear form with `u_xi` orthonormal.
pub fn inner(u: &FockVector, v: &FockVector) -> LaurentInt {
    let mut out = LaurentInt::zero();
    for (xi, c) in &u.terms {
        if let Some(d) = v.terms.get(xi) {
            out += &(c * d);
        }
    }
    out
}

fn strips_with_content(xi: &Multipartition, d: &DimVector, charge: &Charge) -> Vec<Vec<Cell>> {
    let mut out = tableau::horizontal_strips(xi, None, &|_| true, d.size());
    out.retain(|s| s.len() as u32 == d.size() && charge.content(s.iter()) == *d);
    out
}

/// `f_d u_xi = sum q^{-m(eta/xi)} u_eta` over horizontal strips `eta/xi`
/// with residue content `d`.
pub fn f_action(cfg: &FockConfig, d: &DimVector, v: &FockVector) -> Result<FockVector> {
    if d.e() != cfg.e() {
        return Err(Error::DimensionMismatch);
    }
    let mut out = FockVector::zero();
    if d.is_zero() {
        return Ok(v.clone());
    }
    for (xi, c) in &v.terms {
        if xi.ell() > cfg.ell() {
            return Err(Error::TypeMismatch(format!("{xi} has more components than charges")));
        }
        for strip in strips_with_content(xi, d, &cfg.charge) {
            let eta = xi.with_cells(&strip);
            let m = degree::m_skew(&eta, xi, &cfg.charge, cfg.convention)?;
            out.add_term(eta, &c.shift(-m as i32));
        }
    }
    Ok(out)
}

/// The adjoint of `f_{alpha_i}` for node label `i`.
pub fn e_action(cfg: &FockConfig, label: usize, v: &FockVector) -> Result<FockVector> {
    let mut out = FockVector::zero();
    for (eta, c) in &v.terms {
        for b in eta.removable() {
            if cfg.charge.residue(b) != label {
                continue;
            }
            let xi = eta.without_cell(b);
            let m = degree::m_skew(eta, &xi, &cfg.charge, cfg.convention)?;
            out.add_term(xi, &c.shift(-m as i32));
        }
    }
    Ok(out)
}

/// `h` of shadow data: start from `u_empty`, apply the `f`'s of the first
/// group in order, append an empty component, continue with the next
/// group.
pub fn h_vector(cfg: &FockConfig, mu: &ShadowedComposition) -> Result<FockVector> {
    if mu.ell() != cfg.ell() || mu.e() != cfg.e() {
        return Err(Error::TypeMismatch("shadow data do not fit the configuration".into()));
    }
    let mut v = FockVector::vacuum();
    for (k, g) in mu.groups().iter().enumerate() {
        if k > 0 {
            v = v.push_empty();
        }
        for part in g.parts() {
            v = f_action(cfg, part, &v)?;
        }
    }
    Ok(v)
}

/// `h` of the ground state of `xi`, i.e. of its row contents.
pub fn ground_h(cfg: &FockConfig, xi: &Multipartition) -> Result<FockVector> {
    h_vector(cfg, &tableau::lambda_grave(xi, &cfg.charge))
}

/// The bar involution on all multipartitions of sizes `0..=n`, tabulated
/// on the standard basis.
#[derive(Clone, Debug)]
pub struct BarInvolution {
    cfg: FockConfig,
    n: u32,
    images: BTreeMap<Multipartition, FockVector>,
}

/// Checks that `h` has leading term `u_xi` with every other term
/// lexicographically greater.
fn check_unitriangular(xi: &Multipartition, h: &FockVector) -> Result<()> {
    let lead = h.coeff(xi);
    if !lead.is_one() {
        return Err(Error::Convention(format!("coefficient of u[{xi}] in its own h-vector is {lead}")));
    }
    if let Some(eta) = h.support().find(|eta| *eta < xi) {
        return Err(Error::Convention(format!("h-vector of {xi} has lower term u[{eta}]")));
    }
    Ok(())
}

impl BarInvolution {
    pub fn new(cfg: &FockConfig, n: u32) -> Result<Self> {
        let mut images: BTreeMap<Multipartition, FockVector> = BTreeMap::new();
        for size in 0..=n {
            // Larger shapes first: each h-vector only involves larger ones.
            for xi in partition::multipartitions(size, cfg.ell()).into_iter().rev() {
                let h = ground_h(cfg, &xi)?;
                check_unitriangular(&xi, &h)?;
                let mut img = h.clone();
                for (eta, b) in h.terms() {
                    if *eta != xi {
                        img = &img - &images[eta].scale(&b.bar());
                    }
                }
                images.insert(xi, img);
            }
        }
        Ok(Self { cfg: cfg.clone(), n, images })
    }

    pub fn config(&self) -> &FockConfig {
        &self.cfg
    }

    pub fn max_size(&self) -> u32 {
        self.n
    }

    /// `Psi(u_xi)`.
    pub fn image(&self, xi: &Multipartition) -> Option<&FockVector> {
        self.images.get(xi)
    }

    pub fn apply(&self, v: &FockVector) -> Result<FockVector> {
        let mut out = FockVector::zero();
        for (xi, c) in &v.terms {
            let img =
                self.images.get(xi).ok_or_else(|| Error::TypeMismatch(format!("{xi} outside the tabulated range")))?;
            out = &out + &img.scale(&c.bar());
        }
        Ok(out)
    }
}

/// `Psi(v)`, tabulating up to the largest size in the support.
pub fn bar_involution(cfg: &FockConfig, v: &FockVector) -> Result<FockVector> {
    let n = v.support().map(|x| x.size()).max().unwrap_or(0);
    BarInvolution::new(cfg, n)?.apply(v)
}

/// The canonical basis `p_xi` for all multipartitions of `n`.
///
/// Each `p_xi` starts from the ground state h-vector; the coefficients
/// at larger shapes are then cleared up to `q^-1 Z[q^-1]`, nearest shape
/// first, by subtracting bar-invariant multiples of the `p_eta`
/// already found. Negative coefficients are reported as errors.
pub fn canonical_basis(cfg: &FockConfig, n: u32) -> Result<BTreeMap<Multipartition, FockVector>> {
    let shapes = partition::multipartitions(n, cfg.ell());
    let mut out: BTreeMap<Multipartition, FockVector> = BTreeMap::new();
    for (i, xi) in shapes.iter().enumerate().rev() {
        let mut p = ground_h(cfg, xi)?;
        check_unitriangular(xi, &p)?;
        for eta in &shapes[i + 1..] {
            let beta = p.coeff(eta).bar_symmetric_part();
            if !beta.is_zero() {
                p = &p - &out[eta].scale(&beta);
            }
        }
        for (eta, c) in p.terms() {
            if eta == xi {
                continue;
            }
            if !c.in_negative_part() {
                return Err(Error::Convention(format!("p[{xi}] keeps coefficient {c} at u[{eta}]")));
            }
            if !c.has_nonnegative_coeffs() {
                return Err(Error::Convention(format!("p[{xi}] has negative coefficient {c} at u[{eta}]")));
            }
        }
        out.insert(xi.clone(), p);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn mp(c: &[&[u32]]) -> Multipartition {
        Multipartition::new(c.iter().map(|p| p.to_vec()).collect()).unwrap()
    }

    fn cfg(e: usize, z: &[i64]) -> FockConfig {
        FockConfig::new(e, z.to_vec()).unwrap()
    }

    #[test]
    fn single_boxes() {
        let c = cfg(3, &[0]);
        // Residue 0 is the label 3.
        let f = f_action(&c, &DimVector::unit(3, 3), &FockVector::vacuum()).unwrap();
        assert_eq!(f, FockVector::basis(mp(&[&[1]])));
        assert!(f_action(&c, &DimVector::unit(3, 1), &FockVector::vacuum()).unwrap().is_zero());
        let two = f_action(&c, &DimVector::new(vec![1, 0, 1]), &FockVector::vacuum()).unwrap();
        assert_eq!(two, FockVector::basis(mp(&[&[2]])));
        let back = e_action(&c, 3, &FockVector::basis(mp(&[&[1]]))).unwrap();
        assert_eq!(back, FockVector::vacuum());
        assert!(e_action(&c, 1, &FockVector::vacuum()).unwrap().is_zero());
    }

    #[test]
    fn column_of_two() {
        let c = cfg(3, &[0]);
        let mu = tableau::lambda_grave(&mp(&[&[1, 1]]), &c.charge);
        assert_eq!(h_vector(&c, &mu).unwrap(), FockVector::basis(mp(&[&[1, 1]])));
    }

    #[test]
    fn canonical_e2() {
        let c = cfg(2, &[0]);
        let p = canonical_basis(&c, 2).unwrap();
        let mut expected = FockVector::basis(mp(&[&[1, 1]]));
        expected.add_term(mp(&[&[2]]), &LaurentInt::q_pow(-1));
        assert_eq!(p[&mp(&[&[1, 1]])], expected);
        assert_eq!(p[&mp(&[&[2]])], FockVector::basis(mp(&[&[2]])));
    }

    #[test]
    fn dominance() {
        assert!(cfg(3, &[0]).is_m_dominant(100));
        let c = cfg(7, &[5, 0]).with_lifts(vec![5, 0]).unwrap();
        assert!(c.is_m_dominant(5));
        assert!(!c.is_m_dominant(6));
        let z = cfg(3, &[0, 0]);
        assert!(z.is_m_dominant(0));
        assert!(!z.is_m_dominant(1));
    }
}
