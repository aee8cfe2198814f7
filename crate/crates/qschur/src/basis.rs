//! Basis morphisms, the elements `B_S`, `C_{S,T}` and chicken feet.

use alloc::vec;
use alloc::vec::Vec;

use crate::comp::VectorComposition;
use crate::coset::{self, Table};
use crate::dimvec::{self, DimVector};
use crate::error::Result;
use crate::operator::{self, Item, Layout, OperatorExpr, Strand};
use crate::partition::Charge;
use crate::poly::MultiPoly;
use crate::tableau::Tableau;

/// Source layout `mu'` of a table: block `c` of `mu` refined into the
/// nonzero entries of column `c`, top to bottom.
pub fn refined_source(mu: &VectorComposition, table: &Table) -> Layout {
    let mut strands = Vec::new();
    for c in 0..mu.len() {
        for row in table {
            if !row[c].is_zero() {
                strands.push(Strand::Black(row[c].clone()));
            }
        }
    }
    Layout::new(mu.e(), strands).expect("nonzero pieces")
}

/// `mu => lambda` through the table: split `mu` into `mu'`, multiply by
/// `h` (invariant for `mu'`), cross into `lambda'` and merge into `lambda`.
pub fn basis_morphism(
    lambda: &VectorComposition,
    mu: &VectorComposition,
    table: &Table,
    h: Option<&MultiPoly>,
) -> Result<OperatorExpr> {
    let mut items = Vec::new();
    for c in 0..mu.len() {
        for (b, row) in table.iter().enumerate() {
            if !row[c].is_zero() {
                items.push(Item::Piece { dim: row[c].clone(), key: vec![b, c], source: c, target: b });
            }
        }
    }
    let op = operator::assemble(mu.e(), items, h)?;
    debug_assert_eq!(op.target(), &Layout::from_composition(lambda));
    Ok(op)
}

/// Length of the colored permutation of a table.
pub fn table_length(lambda: &VectorComposition, mu: &VectorComposition, table: &Table) -> usize {
    coset::table_permutation(lambda, mu, table).iter().map(|w| crate::perm::length(w)).sum()
}

/// `B_S : mu_S -> lambda_S`.
pub fn b_of_tableau(t: &Tableau, charge: &Charge) -> Result<OperatorExpr> {
    let e = charge.e;
    let ell = t.shape().ell();
    let entries = t.entries();
    let mut items = Vec::new();
    for a in 1..=ell {
        items.push(Item::Red { label: dimvec::residue_label(charge.z[a - 1], e), key: vec![a, 0, 0, 0] });
        for (src, v) in entries.iter().enumerate().filter(|(_, v)| v.alphabet == a) {
            // Pieces by (component, row).
            let mut pieces: Vec<((usize, usize), DimVector)> = Vec::new();
            for c in t.cells_with(*v) {
                match pieces.last_mut() {
                    Some((key, d)) if *key == (c.comp, c.row) => d.bump_residue(charge.residue(c) as i64),
                    _ => {
                        let mut d = DimVector::zero(e);
                        d.bump_residue(charge.residue(c) as i64);
                        pieces.push(((c.comp, c.row), d));
                    }
                }
            }
            for ((k, r), d) in pieces {
                items.push(Item::Piece {
                    dim: d,
                    key: vec![k, r, a, v.number as usize],
                    source: src,
                    target: row_id(t.shape(), k, r),
                });
            }
        }
    }
    operator::assemble(e, items, None)
}

/// Running index of row `r` of component `k`.
fn row_id(shape: &crate::partition::Multipartition, k: usize, r: usize) -> usize {
    shape.components()[..k - 1].iter().map(|p| p.len()).sum::<usize>() + r
}

/// `C_{S,T} = B_S^* B_T`; `None` stands for zero, when the shapes differ.
pub fn c_of_pair(s: &Tableau, t: &Tableau, charge: &Charge) -> Result<Option<OperatorExpr>> {
    if s.shape() != t.shape() {
        return Ok(None);
    }
    let bs = b_of_tableau(s, charge)?;
    let bt = b_of_tableau(t, charge)?;
    Ok(Some(bt.then(&bs.flip())?))
}

/// The summands of the chicken foot vector of a layout: one split-to-units
/// diagram per ordering of the simple roots in each black strand.
pub fn chicken_feet(l: &Layout) -> Vec<OperatorExpr> {
    let e = l.e();
    let mut orders: Vec<Vec<Vec<usize>>> = Vec::new();
    for s in l.strands() {
        if let Strand::Black(d) = s {
            let mut labels: Vec<usize> =
                (0..e).flat_map(|i| core::iter::repeat_n(i + 1, d.at_index(i) as usize)).collect();
            let mut all = Vec::new();
            loop {
                all.push(labels.clone());
                if !crate::perm::next_permutation(&mut labels) {
                    break;
                }
            }
            orders.push(all);
        }
    }
    let mut out = Vec::new();
    let mut choice = vec![0usize; orders.len()];
    loop {
        let mut items = Vec::new();
        let mut b = 0;
        let mut n = 0;
        for (k, s) in l.strands().iter().enumerate() {
            match s {
                Strand::Red(label) => items.push(Item::Red { label: *label, key: vec![k] }),
                Strand::Black(_) => {
                    for &lab in &orders[b][choice[b]] {
                        items.push(Item::Piece { dim: DimVector::unit(e, lab), key: vec![k], source: b, target: n });
                        n += 1;
                    }
                    b += 1;
                }
            }
        }
        out.push(operator::assemble(e, items, None).expect("splits of a valid layout"));
        let mut k = orders.len();
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            choice[k] += 1;
            if choice[k] < orders[k].len() {
                break;
            }
            choice[k] = 0;
        }
    }
}
