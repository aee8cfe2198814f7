use std::collections::BTreeMap;

use qschur::comp::{FlagData, VectorComposition, enumerate_vcomps};
use qschur::coset::{is_minimal_brute, is_minimal_rep};
use qschur::partition::multipartitions;
use qschur::tableau::{all_semistandard, count_pairs, enumerate_semistandard, lambda_grave};
use qschur::{AlphabetRule, Cell, Charge, DimVector, Entry, Multipartition, Tableau};

fn tableau(shape: &[&[u32]], rows: &[&[&[(u32, usize)]]], rule: AlphabetRule) -> qschur::Result<Tableau> {
    let shape = Multipartition::new(shape.iter().map(|p| p.to_vec()).collect()).unwrap();
    let mut fill = BTreeMap::new();
    for (k, comp) in rows.iter().enumerate() {
        for (r, row) in comp.iter().enumerate() {
            for (c, &(g, a)) in row.iter().enumerate() {
                fill.insert(Cell::new(k + 1, r + 1, c + 1), Entry::new(g, a));
            }
        }
    }
    Tableau::new(shape, fill, rule)
}

fn three_component_example(rule: AlphabetRule) -> qschur::Result<Tableau> {
    tableau(
        &[&[4, 3], &[2, 1], &[2, 1]],
        &[
            &[&[(1, 1), (1, 1), (1, 1), (2, 1)], &[(2, 1), (2, 1), (3, 1)]],
            &[&[(1, 2), (3, 3)], &[(2, 2)]],
            &[&[(1, 3), (1, 3)], &[(2, 3)]],
        ],
        rule,
    )
}

#[test]
fn three_component_example_is_semistandard() {
    let t = three_component_example(AlphabetRule::Initial).unwrap();
    assert_eq!(t.multiplicities(), vec![vec![3, 3, 1], vec![1, 1], vec![2, 1, 1]]);
    // 3_3 sits in component 2, which the other reading forbids.
    assert!(three_component_example(AlphabetRule::Final).is_err());
    let ch = Charge::new(3, vec![0, 0, 0]);
    let all = enumerate_semistandard(t.shape(), &ch, AlphabetRule::Initial, Some(&t.mu_grave(&ch)));
    assert!(all.contains(&t));
}

fn running_example() -> (Tableau, Charge) {
    let rows: [&[(u32, usize)]; 3] = [&[(1, 1), (1, 1), (2, 1), (5, 1)], &[(2, 1), (4, 1), (4, 1)], &[(3, 1)]];
    let t = tableau(&[&[4, 3, 1]], &[&rows], AlphabetRule::Initial).unwrap();
    (t, Charge::new(3, vec![1]))
}

#[test]
fn running_example_data() {
    let (t, ch) = running_example();
    assert_eq!(t.multiplicities(), vec![vec![2, 2, 1, 2, 1]]);
    assert_eq!(t.w(), vec![0, 1, 2, 7, 3, 5, 6, 4]);
    assert_eq!(t.lambda_grave(&ch).to_string(), "2,1,1;1,1,1;0,1,0");
    // The two 4s sit at residues 1 and 2.
    assert_eq!(t.mu_grave(&ch).to_string(), "1,1,0;0,0,2;0,1,0;1,1,0;1,0,0");
    let left = [2, 2, 1, 2, 1];
    let right = [4, 3, 1];
    assert!(is_minimal_rep(&t.w(), &left, &right));
}

#[test]
fn worked_vector_composition() {
    let mu = VectorComposition::from_rows(&[&[2, 1], &[1, 1], &[2, 3], &[0, 1]]).unwrap();
    assert_eq!(mu.residue_sequence().to_string(), "1,1,2|1,2|1,1,2,2,2|2");
    assert_eq!(mu.transpose(), FlagData(vec![vec![2, 1, 2, 0], vec![1, 1, 3, 1]]));
    assert_eq!(enumerate_vcomps(&DimVector::new(vec![5, 6]), true).len(), 462);
}

/// Block sizes of the reading word (rows) and of the sorted word
/// (equal entries).
fn blocks(t: &Tableau) -> (Vec<usize>, Vec<usize>) {
    let rows = t.shape().components().iter().flatten().map(|&r| r as usize).collect();
    let mut word = t.reading_word();
    word.sort();
    let mut eq = Vec::new();
    for (i, v) in word.iter().enumerate() {
        if i > 0 && word[i - 1] == *v {
            *eq.last_mut().unwrap() += 1;
        } else {
            eq.push(1);
        }
    }
    (eq, rows)
}

#[test]
fn w_is_minimal() {
    for z in [vec![0], vec![0, 1]] {
        let ch = Charge::new(3, z);
        for n in 1..=6 {
            for t in all_semistandard(n, &ch, AlphabetRule::Initial) {
                let (left, right) = blocks(&t);
                let w = t.w();
                assert!(is_minimal_rep(&w, &left, &right), "{t}");
                if n <= 4 {
                    assert!(is_minimal_brute(&w, &left, &right), "{t}");
                }
                // Residues are carried along: word position a has the
                // residue of the sorted position w[a].
                let cells: Vec<Cell> = t.filling().map(|(c, _)| c).collect();
                let mut sorted: Vec<(Entry, usize)> = t.reading_word().into_iter().zip(0..).collect();
                sorted.sort();
                for (a, &b) in w.iter().enumerate() {
                    assert_eq!(sorted[b].1, a);
                    assert_eq!(ch.residue(cells[sorted[b].1]), ch.residue(cells[a]));
                }
            }
        }
    }
}

#[test]
fn ground_state_is_the_only_tableau_of_its_row_type() {
    for z in [vec![0], vec![1, 0]] {
        let ch = Charge::new(3, z);
        for n in 1..=5 {
            for s in multipartitions(n, ch.ell()) {
                let ty = lambda_grave(&s, &ch);
                let found = enumerate_semistandard(&s, &ch, AlphabetRule::Initial, Some(&ty));
                assert_eq!(found, vec![Tableau::ground_state(&s)], "{s}");
            }
        }
    }
}

/// All multicompositions with `n` boxes over `ell` alphabets.
fn multicompositions(n: u32, ell: usize) -> Vec<Vec<Vec<u32>>> {
    fn comps(n: u32) -> Vec<Vec<u32>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for first in 1..=n {
            for mut rest in comps(n - first) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }
    if ell == 0 {
        return if n == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for k in 0..=n {
        for head in comps(k) {
            for mut tail in multicompositions(n - k, ell - 1) {
                tail.insert(0, head.clone());
                out.push(tail);
            }
        }
    }
    out
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Pairs `(S, T)` of one shape with types `a` and `b`, by colored RSK:
/// integer matrices with the multiplicities as margins, each entry `m`
/// between alphabets `s` and `t` spread over the `c(s, t)` components
/// both may use.
fn colored_rsk(a: &[Vec<u32>], b: &[Vec<u32>], open: &dyn Fn(usize, usize) -> u64) -> u64 {
    let letters = |x: &[Vec<u32>]| -> (Vec<u32>, Vec<usize>) {
        let mut m = Vec::new();
        let mut alpha = Vec::new();
        for (k, part) in x.iter().enumerate() {
            for &v in part {
                m.push(v);
                alpha.push(k + 1);
            }
        }
        (m, alpha)
    };
    let (ra, sa) = letters(a);
    let (rb, sb) = letters(b);
    qschur::coset::int_tables(&ra, &rb)
        .iter()
        .map(|mat| {
            let mut w = 1;
            for (i, row) in mat.iter().enumerate() {
                for (j, &m) in row.iter().enumerate() {
                    let c = open(sa[i], sb[j]);
                    w *= if c == 0 { (m == 0) as u64 } else { binomial(m as u64 + c - 1, c - 1) };
                }
            }
            w
        })
        .sum()
}

/// Standard types: `n_k` distinct numbers in alphabet `k`.
fn standard_types(n: u32, ell: usize) -> Vec<Vec<Vec<u32>>> {
    multicompositions(n, ell).into_iter().filter(|x| x.iter().flatten().all(|&m| m == 1)).collect()
}

fn pairs_oracle(xi: &[Vec<u32>], ell: usize, open: &dyn Fn(usize, usize) -> u64) -> u64 {
    let n = xi.iter().flatten().sum();
    standard_types(n, ell).iter().map(|a| colored_rsk(a, xi, open)).sum()
}

#[test]
fn pair_counts_match_colored_rsk() {
    let initial = |s: usize, t: usize| s.min(t) as u64;
    for ell in 1..=2usize {
        let ch = Charge::new(3, (0..ell as i64).collect());
        let last = move |s: usize, t: usize| (ell + 1 - s.max(t)) as u64;
        for n in 1..=4 {
            for xi in multicompositions(n, ell) {
                assert_eq!(count_pairs(&xi, &ch, AlphabetRule::Initial), pairs_oracle(&xi, ell, &initial), "{xi:?}");
                assert_eq!(count_pairs(&xi, &ch, AlphabetRule::Final), pairs_oracle(&xi, ell, &last), "{xi:?}");
            }
        }
    }
    let ch = Charge::new(3, vec![0]);
    assert_eq!(count_pairs(&[vec![1]], &ch, AlphabetRule::Initial), 1);
    assert_eq!(count_pairs(&[vec![2]], &ch, AlphabetRule::Initial), 1);
    assert_eq!(count_pairs(&[vec![1, 1]], &ch, AlphabetRule::Initial), 2);
}

#[test]
fn readings_differ_at_level_two() {
    let ch = Charge::new(3, vec![0, 1]);
    let xi = vec![vec![], vec![1]];
    assert_eq!(count_pairs(&xi, &ch, AlphabetRule::Initial), 3);
    assert_eq!(count_pairs(&xi, &ch, AlphabetRule::Final), 2);
}
