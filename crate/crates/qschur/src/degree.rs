//! Combinatorial degrees of tableaux and of horizontal strips.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::partition::{Cell, Charge, Multipartition};
use crate::tableau::Tableau;

/// How the addable/removable box counts are taken.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum DegreeConvention {
    /// Each box of a strip sees the smaller entries together with the
    /// boxes of its own strip lying below it or to its left in its row,
    /// restricted to the components present when its alphabet is placed,
    /// and pays the pairing against those strip boxes. This agrees with
    /// the operator degree of `B_S`.
    #[default]
    Strip,
    /// Addable boxes of `S(<= v)` minus removable boxes of `S(< v)`, over
    /// all components, read literally.
    Literal,
}

fn shape_of(cells: &[Cell], ell: usize) -> Multipartition {
    let mut comps: Vec<Vec<u32>> = alloc::vec![Vec::new(); ell];
    for c in cells {
        if c.comp > ell {
            continue;
        }
        let p = &mut comps[c.comp - 1];
        if p.len() < c.row {
            p.resize(c.row, 0);
        }
        p[c.row - 1] += 1;
    }
    Multipartition::from_rows_trimmed(comps)
}

fn count_below(b: Cell, res: usize, cells: &[Cell], charge: &Charge) -> i64 {
    cells.iter().filter(|y| b.is_below(y) && charge.residue(**y) == res).count() as i64
}

/// Contribution of the strip boxes `strip` placed on top of `base`,
/// seeing only components `1..=ell`.
fn strip_degree(base: &[Cell], strip: &[Cell], ell: usize, charge: &Charge) -> i64 {
    let e = charge.e;
    let mut total = 0;
    for &b in strip {
        let rb = charge.residue(b);
        let up = rb % e + 1;
        let sb: Vec<Cell> = strip
            .iter()
            .copied()
            .filter(|x| b.is_below(x) || (x.comp == b.comp && x.row == b.row && x.col < b.col))
            .collect();
        let mut seen = base.to_vec();
        seen.extend_from_slice(&sb);
        let shape = shape_of(&seen, ell);
        let mut d = count_below(b, rb, &shape.addable(), charge) - count_below(b, rb, &shape.removable(), charge);
        for x in &sb {
            let rx = charge.residue(*x);
            d -= (rx == up) as i64 - (rx == rb) as i64;
        }
        total += d;
    }
    total
}

/// The degree of a single box-strip `v` of `S`, summed over its boxes.
fn entry_degree(t: &Tableau, v: crate::tableau::Entry, charge: &Charge, conv: DegreeConvention) -> i64 {
    let strip = t.cells_with(v);
    let lower = t.cells_below_entry(v);
    let full = t.shape().ell();
    match conv {
        DegreeConvention::Strip => {
            let spill = t.filling().any(|(c, w)| w.alphabet == v.alphabet && c.comp > v.alphabet);
            let ell = if spill { full } else { v.alphabet.min(full) };
            strip_degree(&lower, &strip, ell, charge)
        }
        DegreeConvention::Literal => {
            let mut upto = lower.clone();
            upto.extend_from_slice(&strip);
            let add = shape_of(&upto, full).addable();
            let rem = shape_of(&lower, full).removable();
            strip
                .iter()
                .map(|&b| {
                    let rb = charge.residue(b);
                    count_below(b, rb, &add, charge) - count_below(b, rb, &rem, charge)
                })
                .sum()
        }
    }
}

/// `Deg(S)`, the sum of the box degrees.
pub fn deg_tableau(t: &Tableau, charge: &Charge, conv: DegreeConvention) -> i64 {
    t.entries().into_iter().map(|v| entry_degree(t, v, charge, conv)).sum()
}

/// `m(eta / xi)` for a horizontal strip `eta / xi`.
pub fn m_skew(eta: &Multipartition, xi: &Multipartition, charge: &Charge, conv: DegreeConvention) -> Result<i64> {
    if !eta.is_horizontal_strip_over(xi) {
        return Err(Error::NotHorizontalStrip);
    }
    let strip = eta.skew_cells(xi)?;
    Ok(match conv {
        DegreeConvention::Strip => strip_degree(&xi.cells(), &strip, eta.ell(), charge),
        DegreeConvention::Literal => {
            let add = eta.addable();
            let rem = xi.removable();
            strip
                .iter()
                .map(|&b| {
                    let rb = charge.residue(b);
                    count_below(b, rb, &add, charge) - count_below(b, rb, &rem, charge)
                })
                .sum()
        }
    })
}
