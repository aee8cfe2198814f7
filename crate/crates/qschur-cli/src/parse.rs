//! Parsers for the textual syntax the CLI reads and writes.
//!
//! Multipartitions: `4,3|2,1|` (components by `|`, rows by `,`).
//! Shadowed compositions: one group per charge separated by `|`, parts by
//! `;`, entries of a part by `,`, e.g. `1,0,0;0,1,0|0,0,1`.
//! Tableaux: `1_1 1_1/2_1|1_2` (rows by `/`, entries `number_alphabet`).
//! Laurent polynomials in CSV: `c*q^k` terms, e.g. `1*q^0-2*q^-1`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use qschur::{
    AlphabetRule, Cell, DimVector, Entry, LaurentInt, Multipartition, ShadowedComposition, Tableau, VectorComposition,
};

fn ints<T: std::str::FromStr>(s: &str, what: &str) -> Result<Vec<T>, String> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(|x| x.trim().parse::<T>().map_err(|_| format!("bad {what} entry {x:?}"))).collect()
}

pub fn charges(s: &str) -> Result<Vec<i64>, String> {
    let z: Vec<i64> = ints(s, "charge")?;
    if z.is_empty() {
        return Err("at least one charge is needed".into());
    }
    Ok(z)
}

pub fn multipartition(s: &str) -> Result<Multipartition, String> {
    let comps = s.split('|').map(|c| ints::<u32>(c, "row")).collect::<Result<Vec<_>, _>>()?;
    Multipartition::new(comps).map_err(|e| format!("{s:?}: {e}"))
}

pub fn shadowed(s: &str, e: usize, charges: &[i64]) -> Result<ShadowedComposition, String> {
    let mut groups = Vec::new();
    for g in s.split('|') {
        let mut parts = Vec::new();
        for p in g.split(';').filter(|p| !p.trim().is_empty()) {
            let v: Vec<u32> = ints(p, "dimension vector")?;
            if v.len() != e {
                return Err(format!("part {p:?} needs {e} entries"));
            }
            parts.push(DimVector::new(v));
        }
        groups.push(VectorComposition::new(e, parts).map_err(|err| format!("{s:?}: {err}"))?);
    }
    if groups.len() != charges.len() {
        return Err(format!("{s:?} has {} groups for {} charges", groups.len(), charges.len()));
    }
    ShadowedComposition::new(charges.to_vec(), groups).map_err(|err| format!("{s:?}: {err}"))
}

pub fn tableau(s: &str, rule: AlphabetRule) -> Result<Tableau, String> {
    let mut comps = Vec::new();
    let mut fill = BTreeMap::new();
    for (k, comp) in s.split('|').enumerate() {
        let mut rows = Vec::new();
        for (r, row) in comp.split('/').filter(|r| !r.trim().is_empty()).enumerate() {
            let mut len = 0;
            for (c, tok) in row.split_whitespace().enumerate() {
                let (g, a) = tok.split_once('_').ok_or_else(|| format!("bad entry {tok:?}"))?;
                let g: u32 = g.parse().map_err(|_| format!("bad entry {tok:?}"))?;
                let a: usize = a.parse().map_err(|_| format!("bad entry {tok:?}"))?;
                fill.insert(Cell::new(k + 1, r + 1, c + 1), Entry::new(g, a));
                len += 1;
            }
            rows.push(len);
        }
        comps.push(rows);
    }
    let shape = Multipartition::new(comps).map_err(|e| format!("{s:?}: {e}"))?;
    Tableau::new(shape, fill, rule).map_err(|e| format!("{s:?}: {e}"))
}

/// Inverse of [`crate::format::laurent_csv`].
pub fn laurent_csv(s: &str) -> Result<LaurentInt, String> {
    let s = s.trim();
    if s == "0" {
        return Ok(LaurentInt::zero());
    }
    let mut out = LaurentInt::zero();
    let mut start = 0;
    let bytes = s.as_bytes();
    let mut cuts = Vec::new();
    for i in 1..bytes.len() {
        if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' {
            cuts.push(i);
        }
    }
    cuts.push(bytes.len());
    for end in cuts {
        let term = s[start..end].trim_start_matches('+');
        start = end;
        let (c, k) = term.split_once("*q^").ok_or_else(|| format!("bad term {term:?}"))?;
        let c: BigInt = c.parse().map_err(|_| format!("bad coefficient in {term:?}"))?;
        let k: i32 = k.parse().map_err(|_| format!("bad exponent in {term:?}"))?;
        out.add_term(k, c);
    }
    Ok(out)
}

/// Inverse of [`crate::format::laurent_json`].
pub fn laurent_json(v: &serde_json::Value) -> Result<LaurentInt, String> {
    let obj = v.as_object().ok_or("polynomial must be an object")?;
    let mut out = LaurentInt::zero();
    for (k, c) in obj {
        let k: i32 = k.parse().map_err(|_| format!("bad exponent {k:?}"))?;
        let c: BigInt = match c {
            serde_json::Value::Number(n) => n.to_string().parse().map_err(|_| format!("bad coefficient {n}"))?,
            serde_json::Value::String(s) => s.parse().map_err(|_| format!("bad coefficient {s:?}"))?,
            _ => return Err("coefficient must be a number".into()),
        };
        out.add_term(k, c);
    }
    Ok(out)
}

/// Inverse of [`crate::format::tableau_json`]; the shape is read off the
/// cells, padded with empty components up to `ell`.
pub fn tableau_json(v: &serde_json::Value, ell: usize, rule: AlphabetRule) -> Result<Tableau, String> {
    let obj = v.as_object().ok_or("tableau must be an object")?;
    let mut fill = BTreeMap::new();
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for (k, x) in obj {
        let idx: Vec<usize> =
            k.split('.').map(|p| p.parse().map_err(|_| format!("bad cell {k:?}"))).collect::<Result<_, _>>()?;
        let [comp, row, col] = idx[..] else { return Err(format!("bad cell {k:?}")) };
        if comp == 0 || row == 0 || col == 0 {
            return Err(format!("bad cell {k:?}"));
        }
        let s = x.as_str().ok_or_else(|| format!("entry at {k:?} must be a string"))?;
        let (g, a) = s.split_once('_').ok_or_else(|| format!("bad entry {s:?}"))?;
        let g: u32 = g.parse().map_err(|_| format!("bad entry {s:?}"))?;
        let a: usize = a.parse().map_err(|_| format!("bad entry {s:?}"))?;
        fill.insert(Cell::new(comp, row, col), Entry::new(g, a));
        if rows.len() < comp {
            rows.resize(comp, Vec::new());
        }
        if rows[comp - 1].len() < row {
            rows[comp - 1].resize(row, 0);
        }
        rows[comp - 1][row - 1] = rows[comp - 1][row - 1].max(col as u32);
    }
    if rows.len() < ell {
        rows.resize(ell, Vec::new());
    }
    let shape = Multipartition::new(rows).map_err(|e| e.to_string())?;
    Tableau::new(shape, fill, rule).map_err(|e| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips() {
        for s in ["4,3|2,1|2,1", "2", "|1", "1,1|"] {
            assert_eq!(multipartition(s).unwrap().to_string(), s);
        }
        let sc = shadowed("1,0,0;0,1,0|0,0,1", 3, &[0, 1]).unwrap();
        assert_eq!(sc.to_string(), "1,0,0;0,1,0|0,0,1");
        assert!(shadowed("1,0", 3, &[0]).is_err());
        assert!(shadowed("1,0,0", 3, &[0, 1]).is_err());
        let t = tableau("1_1 1_1/2_1|1_2", AlphabetRule::Initial).unwrap();
        assert_eq!(t.to_string(), "1_1 1_1/2_1|1_2");
        assert_eq!(charges("-1,2").unwrap(), vec![-1, 2]);
    }

    #[test]
    fn laurent_syntax() {
        let p = laurent_csv("1*q^0-2*q^-1+3*q^4").unwrap();
        assert_eq!(p, LaurentInt::from_terms([(0, 1), (-1, -2), (4, 3)]));
        assert_eq!(laurent_csv("0").unwrap(), LaurentInt::zero());
        assert!(laurent_csv("q").is_err());
    }
}
