//! The graded cell datum of the cyclotomic quotient: cell basis, graded
//! dimensions of idempotent corners, Weyl characters, decomposition
//! numbers.
//!
//! Graded dimensions are `sum dim M_i q^i`, so a basis element of degree
//! `d` contributes `q^d`. Fock space coefficients carry `q^-d`; the two
//! agree after `q -> q^-1`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::comp::ShadowedComposition;
use crate::degree::{self, DegreeConvention};
use crate::error::Result;
use crate::fock::{self, FockConfig};
use crate::laurent::LaurentInt;
use crate::partition::{self, Charge, Multipartition};
use crate::tableau::{self, AlphabetRule, Tableau};

/// Shape, alphabet rule and degree convention of a cell datum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellDatum {
    pub charge: Charge,
    pub rule: AlphabetRule,
    pub convention: DegreeConvention,
}

/// One element `C_{S,T}` of the cellular basis.
#[derive(Clone, Debug)]
pub struct CellElement {
    pub shape: Multipartition,
    pub s: Tableau,
    pub t: Tableau,
    pub degree: i64,
}

impl CellDatum {
    pub fn new(charge: Charge) -> Self {
        Self { charge, rule: AlphabetRule::default(), convention: DegreeConvention::default() }
    }

    pub fn deg(&self, t: &Tableau) -> i64 {
        degree::deg_tableau(t, &self.charge, self.convention)
    }

    /// Semistandard tableaux of a shape with their degrees.
    pub fn tableaux(&self, shape: &Multipartition, ty: Option<&ShadowedComposition>) -> Vec<(Tableau, i64)> {
        tableau::enumerate_semistandard(shape, &self.charge, self.rule, ty)
            .into_iter()
            .map(|t| {
                let d = self.deg(&t);
                (t, d)
            })
            .collect()
    }

    /// All `C_{S,T}` with `n` boxes, shapes in increasing lexicographic
    /// order.
    pub fn cell_basis(&self, n: u32) -> Vec<CellElement> {
        let mut out = Vec::new();
        for shape in partition::multipartitions(n, self.charge.ell()) {
            let m = self.tableaux(&shape, None);
            for (s, ds) in &m {
                for (t, dt) in &m {
                    out.push(CellElement { shape: shape.clone(), s: s.clone(), t: t.clone(), degree: ds + dt });
                }
            }
        }
        out
    }

    /// `dim_q W^xi e_mu` for every type `mu` occurring in shape `xi`.
    pub fn weyl_character(&self, xi: &Multipartition) -> BTreeMap<ShadowedComposition, LaurentInt> {
        let mut out: BTreeMap<ShadowedComposition, LaurentInt> = BTreeMap::new();
        for (t, d) in self.tableaux(xi, None) {
            *out.entry(t.mu_grave(&self.charge)).or_default() += &LaurentInt::q_pow(d as i32);
        }
        out
    }

    /// `dim_q e_mu A e_lambda`, summed over same-shape pairs. Zero when
    /// the dimension vectors differ.
    pub fn corner_dim(&self, mu: &ShadowedComposition, lambda: &ShadowedComposition) -> LaurentInt {
        let mut out = LaurentInt::zero();
        if mu.dim() != lambda.dim() || mu.ell() != self.charge.ell() || lambda.ell() != self.charge.ell() {
            return out;
        }
        for shape in partition::multipartitions(mu.dim().size(), self.charge.ell()) {
            let left: LaurentInt =
                self.tableaux(&shape, Some(mu)).into_iter().map(|(_, d)| LaurentInt::q_pow(d as i32)).sum();
            if left.is_zero() {
                continue;
            }
            let right: LaurentInt =
                self.tableaux(&shape, Some(lambda)).into_iter().map(|(_, d)| LaurentInt::q_pow(d as i32)).sum();
            out += &(&left * &right);
        }
        out
    }
}

/// `D[i][j]` is the coefficient of `u_{shapes[j]}` in `p_{shapes[i]}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecompositionMatrix {
    pub shapes: Vec<Multipartition>,
    pub entries: Vec<Vec<LaurentInt>>,
}

impl DecompositionMatrix {
    pub fn entry(&self, xi: &Multipartition, eta: &Multipartition) -> Option<&LaurentInt> {
        let i = self.shapes.iter().position(|s| s == xi)?;
        let j = self.shapes.iter().position(|s| s == eta)?;
        Some(&self.entries[i][j])
    }

    pub fn is_unitriangular(&self) -> bool {
        self.entries.iter().enumerate().all(|(i, row)| {
            row.iter().enumerate().all(|(j, c)| match j.cmp(&i) {
                core::cmp::Ordering::Equal => c.is_one(),
                core::cmp::Ordering::Less => c.is_zero(),
                core::cmp::Ordering::Greater => c.in_negative_part() && c.has_nonnegative_coeffs(),
            })
        })
    }
}

/// The graded decomposition numbers, read off the canonical basis. Rows
/// and columns in increasing lexicographic order, so the matrix is upper
/// unitriangular.
pub fn decomposition_matrix(cfg: &FockConfig, n: u32) -> Result<DecompositionMatrix> {
    let basis = fock::canonical_basis(cfg, n)?;
    let shapes: Vec<Multipartition> = basis.keys().cloned().collect();
    let entries = shapes.iter().map(|xi| shapes.iter().map(|eta| basis[xi].coeff(eta)).collect()).collect();
    Ok(DecompositionMatrix { shapes, entries })
}
