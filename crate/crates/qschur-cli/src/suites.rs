//! Invariant suites behind `qschur check`. Each check counts its cases and
//! keeps the first counterexample.

use std::collections::BTreeMap;
use std::ops::Range;

use num_bigint::BigInt;
use qschur::basis::{b_of_tableau, basis_morphism, c_of_pair, refined_source};
use qschur::comp::{enumerate_vcomps, shadowed_of_size};
use qschur::coset::{contingency_tables, int_tables};
use qschur::degree::deg_tableau;
use qschur::dimvec::of_size;
use qschur::fock::{self, BarInvolution, FockVector};
use qschur::linalg::rank;
use qschur::operator::{
    Layout, Move, OperatorExpr, OperatorSum, Strand, action_rows, invariant_basis, op_equal, test_set,
};
use qschur::partition::multipartitions;
use qschur::perm;
use qschur::poly::{artin_basis, euler_class, node_offsets};
use qschur::tableau::{all_semistandard, count_pairs};
use qschur::{AlphabetRule, DimVector, LaurentInt, MultiPoly, Multipartition, ShadowedComposition, VectorComposition};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::cli::Config;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    pub cases: usize,
    pub failure: Option<String>,
}

impl Check {
    fn new(suite: &'static str, name: &str) -> Self {
        Self { suite, name: name.into(), cases: 0, failure: None }
    }

    fn case(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(what());
        }
    }

    /// Records a batch of outcomes computed elsewhere, in order.
    fn cases<I: IntoIterator<Item = Option<String>>>(&mut self, outcomes: I) {
        for o in outcomes {
            let bad = o.is_some();
            self.case(!bad, || o.unwrap_or_default());
        }
    }

    pub fn passed(&self) -> bool {
        self.failure.is_none() && self.cases > 0
    }
}

// Demazure operators

const NVARS: usize = 4;

fn random_poly(rng: &mut ChaCha8Rng, amb: &DimVector, max_deg: u32) -> MultiPoly {
    let n = amb.size() as usize;
    let mut p = MultiPoly::zero(amb);
    while p.is_zero() {
        for _ in 0..rng.gen_range(1..=6) {
            let mut m = vec![0u16; n];
            for _ in 0..rng.gen_range(0..=max_deg) {
                m[rng.gen_range(0..n)] += 1;
            }
            let c: i64 = rng.gen_range(-9..=9);
            p.add_term(m, BigInt::from(c));
        }
    }
    p
}

/// `Delta_{w0}` on a flat range: the alternating sum over the symmetric
/// group divided by the Vandermonde product.
pub fn delta_w0_closed(f: &MultiPoly, range: Range<usize>) -> MultiPoly {
    let n = f.nvars();
    let mut num = MultiPoly::zero(f.ambient());
    for w in perm::all(range.len()) {
        let mut p = perm::identity(n);
        for (a, &b) in w.iter().enumerate() {
            p[range.start + a] = range.start + b;
        }
        num = &num + &f.permute_flat(&p).scale(&BigInt::from(perm::sign(&w)));
    }
    for i in range.clone() {
        for j in i + 1..range.end {
            let (q, r) = num.div_by_difference(i, j);
            assert!(r.is_zero(), "alternating sums are divisible by the Vandermonde product");
            num = q;
        }
    }
    num
}

fn staircase(amb: &DimVector, start: usize, k: usize) -> MultiPoly {
    let mut m = vec![0u16; amb.size() as usize];
    for a in 0..k {
        m[start + a] = (k - 1 - a) as u16;
    }
    MultiPoly::monomial(amb, m, 1)
}

/// The merge `(c, d) -> (c + d)` of a polynomial in `R(c + d)`, through
/// `Delta_w(g) = Delta_{w0}(g * staircase_c * staircase_d)` at each node.
pub fn merge_closed(c: &DimVector, d: &DimVector, g: &MultiPoly) -> MultiPoly {
    let amb = g.ambient().clone();
    let off = node_offsets(&amb);
    let mut out = g.clone();
    for i in 0..c.e() {
        let (ci, di) = (c.at_index(i) as usize, d.at_index(i) as usize);
        let st = off[i];
        let h = &(&out * &staircase(&amb, st, ci)) * &staircase(&amb, st + ci, di);
        out = delta_w0_closed(&h, st..st + ci + di);
    }
    out
}

/// Reduced words of `w` in `S_n`, by brute force.
fn reduced_words(w: &[usize]) -> Vec<Vec<usize>> {
    let n = w.len();
    let len = perm::length(w);
    let mut out = Vec::new();
    let mut word = vec![0; len];
    loop {
        if perm::from_word(n, &word) == w {
            out.push(word.clone());
        }
        let mut k = 0;
        loop {
            if k == len {
                return out;
            }
            word[k] += 1;
            if word[k] < n - 1 {
                break;
            }
            word[k] = 0;
            k += 1;
        }
    }
}

fn letters(word: &[usize]) -> Vec<(usize, usize)> {
    word.iter().map(|&i| (1, i + 1)).collect()
}

/// Demazure identities on `samples` random polynomials of degree at most
/// 6 in four variables.
pub fn demazure(seed: u64, samples: usize) -> Vec<Check> {
    const S: &str = "demazure";
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let amb = DimVector::new(vec![NVARS as u32]);
    let d = |f: &MultiPoly, j: usize| f.demazure(1, j).expect("position in range");
    let s = |f: &MultiPoly, j: usize| f.swap_flat(j - 1, j);
    let words: Vec<(Vec<usize>, Vec<Vec<usize>>)> = perm::all(NVARS)
        .into_iter()
        .map(|w| {
            let r = reduced_words(&w);
            (w, r)
        })
        .collect();

    let mut square = Check::new(S, "Delta_i^2 = 0");
    let mut leibniz = Check::new(S, "twisted Leibniz rule");
    let mut general = Check::new(S, "Leibniz rule for words");
    let mut braid = Check::new(S, "reduced-word independence on S_4");
    let mut vanish = Check::new(S, "non-reduced words vanish");
    let mut closed = Check::new(S, "Delta_w0 closed formula");
    for _ in 0..samples {
        let f = random_poly(&mut rng, &amb, 6);
        let g = random_poly(&mut rng, &amb, 6);
        for j in 1..NVARS {
            square.case(d(&d(&f, j), j).is_zero(), || format!("f = {f}, i = {j}"));
            let lhs = d(&(&f * &g), j);
            let rhs = &(&d(&f, j) * &g) + &(&s(&f, j) * &d(&g, j));
            leibniz.case(lhs == rhs, || format!("f = {f}, g = {g}, i = {j}"));
        }
        let word: Vec<usize> = (0..rng.gen_range(1..=3)).map(|_| rng.gen_range(1..NVARS)).collect();
        let lhs = word.iter().rev().fold(&f * &g, |acc, &j| d(&acc, j));
        let mut rhs = MultiPoly::zero(&amb);
        for mask in 0..1u32 << word.len() {
            let (mut a, mut b) = (f.clone(), g.clone());
            for (pos, &j) in word.iter().enumerate().rev() {
                if mask >> pos & 1 == 0 {
                    a = d(&a, j);
                } else {
                    a = s(&a, j);
                    b = d(&b, j);
                }
            }
            rhs = &rhs + &(&a * &b);
        }
        general.case(lhs == rhs, || format!("f = {f}, g = {g}, word {word:?}"));
        for (w, ws) in &words {
            let expected = f.demazure_perm_flat(0, w);
            for r in ws {
                let got = f.demazure_word(&letters(r)).expect("positions in range");
                braid.case(got == expected, || format!("f = {f}, word {r:?}"));
            }
        }
        let long: Vec<usize> = (0..rng.gen_range(2..=6)).map(|_| rng.gen_range(0..NVARS - 1)).collect();
        if perm::length(&perm::from_word(NVARS, &long)) < long.len() {
            let got = f.demazure_word(&letters(&long)).expect("positions in range");
            vanish.case(got.is_zero(), || format!("f = {f}, word {long:?}"));
        }
        let w0 = perm::longest(NVARS);
        closed.case(f.demazure_perm_flat(0, &w0) == delta_w0_closed(&f, 0..NVARS), || format!("f = {f}"));
    }
    vec![square, leibniz, general, braid, vanish, closed]
}

// Relations between operators

fn layout(e: usize, parts: &[DimVector]) -> Layout {
    Layout::new(e, parts.iter().cloned().map(Strand::Black).collect()).expect("nonzero parts")
}

fn equal(a: &OperatorExpr, b: &OperatorExpr) -> bool {
    op_equal(&OperatorSum::from(a.clone()), &OperatorSum::from(b.clone())).expect("same source and target")
}

/// Cartan matrix of the cyclic quiver with `e` nodes.
pub fn cartan(e: usize, i: usize, j: usize) -> i64 {
    if i == j {
        2
    } else if e == 2 {
        -2
    } else if i % e + 1 == j || j % e + 1 == i {
        -1
    } else {
        0
    }
}

/// Crossings of unit strands in the position-based picture: equal labels
/// give a Demazure operator, a label followed by its successor multiplies
/// by the successor's variable minus the other one, anything else only
/// swaps.
pub fn klr_word(e: usize, labels: &[usize], word: &[usize], f: &MultiPoly) -> MultiPoly {
    let amb = f.ambient().clone();
    let off = node_offsets(&amb);
    let mut labels = labels.to_vec();
    let mut g = f.clone();
    let var = |labels: &[usize], pos: usize| {
        let l = labels[pos];
        off[l - 1] + labels[..pos].iter().filter(|&&x| x == l).count()
    };
    for &k in word {
        let (a, b) = (labels[k], labels[k + 1]);
        let (xa, xb) = (var(&labels, k), var(&labels, k + 1));
        if a == b {
            g = g.divided_difference(xa, xb);
        } else if b == a % e + 1 {
            g = &g * &(&MultiPoly::var_flat(&amb, xb) - &MultiPoly::var_flat(&amb, xa));
        }
        labels.swap(k, k + 1);
    }
    g
}

fn unit_layout(e: usize, labels: &[usize]) -> Layout {
    let parts: Vec<DimVector> = labels.iter().map(|&i| DimVector::unit(e, i)).collect();
    layout(e, &parts)
}

fn crossing_word(e: usize, labels: &[usize], word: &[usize]) -> OperatorExpr {
    OperatorExpr::from_moves(&unit_layout(e, labels), word.iter().map(|&k| Move::Cross(k)).collect())
        .expect("adjacent black strands")
}

fn words_up_to(strands: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    let mut layer = vec![vec![]];
    for _ in 0..len {
        let mut next = Vec::new();
        for w in &layer {
            for k in 0..strands - 1 {
                let mut v: Vec<usize> = w.clone();
                v.push(k);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

fn label_tuples(e: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|t: Vec<usize>| {
                (1..=e).map(move |i| {
                    let mut t = t.clone();
                    t.push(i);
                    t
                })
            })
            .collect();
    }
    out
}

/// Split/merge, crossing, iterated merge and crossing relations at `e`,
/// with at most `bound` (capped at 4) boxes.
pub fn relations(e: usize, bound: u32) -> Vec<Check> {
    const S: &str = "relations";
    let bound = bound.clamp(2, 4);
    let mut pairs = Vec::new();
    for a in 1..bound {
        for b in 1..=bound - a {
            for c in of_size(e, a) {
                for d in of_size(e, b) {
                    pairs.push((c.clone(), d));
                }
            }
        }
    }

    let mut split_merge = Check::new(S, "split then merge = Delta_w(E)");
    let outcomes: Vec<Option<String>> = pairs
        .par_iter()
        .map(|(c, d)| {
            let l = layout(e, &[c + d]);
            let lhs = OperatorExpr::from_moves(&l, vec![Move::Split(0, c.clone(), d.clone()), Move::Merge(0)]).ok()?;
            let f = merge_closed(c, d, &euler_class(c, d));
            let rhs = OperatorExpr::from_moves(&l, vec![Move::Poly(f.clone())]).ok()?;
            let degrees = f.is_zero() || lhs.degree() == rhs.degree();
            (!(equal(&lhs, &rhs) && degrees && l.is_invariant(&f))).then(|| format!("({c}) + ({d})"))
        })
        .collect();
    split_merge.cases(outcomes);

    let mut crossing = Check::new(S, "crossing^2 = f * merge-split");
    let outcomes: Vec<Option<String>> = pairs
        .par_iter()
        .map(|(c, d)| {
            let l = layout(e, &[c.clone(), d.clone()]);
            let x2 = OperatorExpr::from_moves(&l, vec![Move::Cross(0), Move::Cross(0)]).ok()?;
            let f = merge_closed(d, c, &euler_class(d, c));
            let rhs = OperatorExpr::from_moves(
                &l,
                vec![Move::Merge(0), Move::Split(0, c.clone(), d.clone()), Move::Poly(f.clone())],
            )
            .ok()?;
            let mut ok = equal(&x2, &rhs);
            if c == d {
                let fx = OperatorExpr::from_moves(&l, vec![Move::Cross(0), Move::Poly(f)]).ok()?;
                ok &= equal(&x2, &fx);
            }
            ok &= test_set(&l).iter().all(|g| x2.apply(g).map(|h| l.is_invariant(&h)).unwrap_or(false));
            (!ok).then(|| format!("({c}, {d})"))
        })
        .collect();
    crossing.cases(outcomes);

    let mut merges = Check::new(S, "r-fold merge = Delta_w0");
    for i in 1..=e {
        for r in 2..=bound as usize {
            let unit = DimVector::unit(e, i);
            let l = layout(e, &vec![unit; r]);
            let left = OperatorExpr::from_moves(&l, vec![Move::Merge(0); r - 1]).expect("merges of adjacent strands");
            let right = OperatorExpr::from_moves(&l, (0..r - 1).rev().map(Move::Merge).collect())
                .expect("merges of adjacent strands");
            merges.case(equal(&left, &right), || format!("bracketings differ for {r} strands at node {i}"));
            let off = node_offsets(&l.dim())[i - 1];
            let cube = MultiPoly::var_flat(&l.dim(), off).pow(3);
            for f in artin_basis(&l.dim()) {
                let f = &f + &(&f * &cube);
                let ok = left.apply(&f).ok() == Some(delta_w0_closed(&f, off..off + r));
                merges.case(ok, || format!("node {i}, {r} strands, f = {f}"));
            }
        }
    }

    let mut degrees = Check::new(S, "KLR crossing degrees");
    let mut formulas = Check::new(S, "KLR crossing formulas");
    let mut configs: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
    for labels in label_tuples(e, 2) {
        configs.push((labels, vec![0]));
    }
    for labels in label_tuples(e, 3) {
        for w in words_up_to(3, 4) {
            configs.push((labels.clone(), w));
        }
    }
    for (labels, word) in configs.iter().filter(|(l, _)| l.len() == 2) {
        let deg = crossing_word(e, labels, word).degree();
        degrees.case(deg == -cartan(e, labels[0], labels[1]), || format!("{labels:?} has degree {deg}"));
    }
    let outcomes: Vec<Option<String>> = configs
        .par_iter()
        .map(|(labels, word)| {
            let op = crossing_word(e, labels, word);
            let mut cur = labels.clone();
            let mut expected = 0;
            for &k in word {
                expected -= cartan(e, cur[k], cur[k + 1]);
                cur.swap(k, k + 1);
            }
            if op.degree() != expected {
                return Some(format!("{labels:?} {word:?}: degree {} not {expected}", op.degree()));
            }
            let amb = op.source().dim();
            let mut tests = artin_basis(&amb);
            let sq = MultiPoly::monomial(&amb, vec![2; amb.size() as usize], 1);
            tests.push(&sq + &tests[tests.len() - 1]);
            tests
                .iter()
                .find(|f| op.apply(f).ok() != Some(klr_word(e, labels, word, f)))
                .map(|f| format!("{labels:?} {word:?} on {f}"))
        })
        .collect();
    formulas.cases(outcomes);

    let mut braid = Check::new(S, "braid relation up to a polynomial");
    for labels in label_tuples(e, 3) {
        let x1 = crossing_word(e, &labels, &[0, 1, 0]);
        let x2 = crossing_word(e, &labels, &[1, 0, 1]);
        let amb = x1.source().dim();
        let one = MultiPoly::one(&amb);
        let residual = &x1.apply(&one).expect("invariant") - &x2.apply(&one).expect("invariant");
        let mut ok = x1.degree() == x2.degree() && x1.target() == x2.target();
        for f in artin_basis(&amb) {
            ok &= &x1.apply(&f).expect("invariant") - &x2.apply(&f).expect("invariant") == &residual * &f;
        }
        let (a, b, c) = (labels[0], labels[1], labels[2]);
        ok &= residual.is_zero() != (a == c && a != b && cartan(e, a, b) != 0);
        braid.case(ok, || format!("{labels:?}: residual {residual}"));
    }

    let mut central = Check::new(S, "operators commute with total invariants");
    for labels in label_tuples(e, 3) {
        for word in words_up_to(3, 3) {
            let op = crossing_word(e, &labels, &word);
            let amb = op.source().dim();
            let off = node_offsets(&amb);
            let mut z = MultiPoly::constant(&amb, 3);
            for i in 0..e {
                for p in off[i]..off[i] + amb.at_index(i) as usize {
                    z = &z + &MultiPoly::var_flat(&amb, p).pow((i + 1) as u32);
                }
            }
            let ok = artin_basis(&amb).iter().all(|f| op.apply(&(&z * f)).ok() == op.apply(f).ok().map(|g| &z * &g));
            central.case(ok, || format!("{labels:?} {word:?}"));
        }
    }

    vec![split_merge, crossing, merges, degrees, formulas, braid, central]
}

// Degrees

/// Combinatorial degree against the degree of `B_S`, for all tableaux
/// with at most `cfg.n` boxes.
pub fn degrees(cfg: &Config) -> Vec<Check> {
    const S: &str = "degrees";
    let ch = cfg.charge();
    let mut deg = Check::new(S, "Deg(S) = deg B_S");
    let mut cell = Check::new(S, "deg C_{S,T} = Deg(S) + Deg(T)");
    for n in 1..=cfg.n {
        let all = all_semistandard(n, &ch, AlphabetRule::Initial);
        let outcomes: Vec<Option<String>> = all
            .par_iter()
            .map(|t| {
                let comb = deg_tableau(t, &ch, cfg.convention);
                match b_of_tableau(t, &ch) {
                    Ok(b) if b.degree() == comb => None,
                    Ok(b) => Some(format!("{t}: Deg {comb}, operator {}", b.degree())),
                    Err(e) => Some(format!("{t}: {e}")),
                }
            })
            .collect();
        deg.cases(outcomes);
        if n <= 3 {
            for s in &all {
                for t in all.iter().filter(|t| t.shape() == s.shape()) {
                    let expected = deg_tableau(s, &ch, cfg.convention) + deg_tableau(t, &ch, cfg.convention);
                    let got = c_of_pair(s, t, &ch).ok().flatten().map(|c| c.degree());
                    cell.case(got == Some(expected), || format!("({s}, {t}): {got:?} vs {expected}"));
                }
            }
        }
    }
    vec![deg, cell]
}

// Basis morphisms

/// Basis morphisms `mu => lambda` over all minimal coset representatives,
/// `h` running through the monomial symmetric basis up to `cutoff`.
pub fn basis_morphisms(lambda: &VectorComposition, mu: &VectorComposition, cutoff: u32) -> Vec<OperatorSum> {
    let mut out = Vec::new();
    for table in contingency_tables(lambda, mu).expect("same dimension vector") {
        let refined = refined_source(mu, &table);
        for k in 0..=cutoff {
            for h in invariant_basis(&refined, k) {
                let op = basis_morphism(lambda, mu, &table, Some(&h)).expect("valid table");
                out.push(OperatorSum::from(op));
            }
        }
    }
    out
}

/// Linear independence of the basis morphisms for every pair of vector
/// compositions of every `d` with at most `bound` boxes.
pub fn basis(e: usize, bound: u32, cutoff: u32) -> Vec<Check> {
    let mut check = Check::new("basis", "basis morphisms have full rank");
    let mut pairs = Vec::new();
    for n in 1..=bound {
        for d in of_size(e, n) {
            let comps = enumerate_vcomps(&d, false);
            for mu in &comps {
                for lambda in &comps {
                    pairs.push((mu.clone(), lambda.clone()));
                }
            }
        }
    }
    let outcomes: Vec<Option<String>> = pairs
        .par_iter()
        .map(|(mu, lambda)| {
            let ops = basis_morphisms(lambda, mu, cutoff);
            let rows = action_rows(&ops, &test_set(&Layout::from_composition(mu)));
            let r = rank(&rows);
            (r != ops.len()).then(|| format!("{mu} => {lambda}: rank {r} of {}", ops.len()))
        })
        .collect();
    check.cases(outcomes);
    vec![check]
}

// Fock space

/// Number of same-shape pairs `(S, T)`, `S` standard and `T` of type
/// `xi`, by colored RSK: integer matrices with the multiplicities as
/// margins, each entry `m` between alphabets `s` and `t` spread over the
/// components both alphabets may use.
pub fn pairs_by_rsk(xi: &[Vec<u32>], ell: usize, rule: AlphabetRule) -> u64 {
    let open = |s: usize, t: usize| -> u64 {
        match rule {
            AlphabetRule::Initial => s.min(t) as u64,
            AlphabetRule::Final => (ell + 1 - s.max(t)) as u64,
        }
    };
    let binomial = |n: u64, k: u64| (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1));
    let flatten = |x: &[Vec<u32>]| -> (Vec<u32>, Vec<usize>) {
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
    let n: u32 = xi.iter().flatten().sum();
    let (rb, sb) = flatten(xi);
    let mut total = 0;
    for a in multicompositions(n, ell).into_iter().filter(|a| a.iter().flatten().all(|&m| m == 1)) {
        let (ra, sa) = flatten(&a);
        for mat in int_tables(&ra, &rb) {
            let mut w = 1;
            for (i, row) in mat.iter().enumerate() {
                for (j, &m) in row.iter().enumerate() {
                    let c = open(sa[i], sb[j]);
                    w *= if c == 0 { (m == 0) as u64 } else { binomial(m as u64 + c - 1, c - 1) };
                }
            }
            total += w;
        }
    }
    total
}

/// All `ell`-tuples of compositions with `n` boxes in total.
pub fn multicompositions(n: u32, ell: usize) -> Vec<Vec<Vec<u32>>> {
    fn comps(n: u32) -> Vec<Vec<u32>> {
        if n == 0 {
            return vec![vec![]];
        }
        (1..=n)
            .flat_map(|first| {
                comps(n - first).into_iter().map(move |mut rest| {
                    rest.insert(0, first);
                    rest
                })
            })
            .collect()
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

type Sparse = Vec<(usize, LaurentInt)>;

fn dot(a: &Sparse, b: &Sparse) -> LaurentInt {
    let mut out = LaurentInt::zero();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out += &(&a[i].1 * &b[j].1);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Cross-model identity, bar involution and canonical basis for all sizes
/// up to `cfg.n`, plus the dimension counts.
pub fn fock(cfg: &Config) -> Vec<Check> {
    const S: &str = "fock";
    let fc = cfg.fock();
    let cd = cfg.cell_datum();
    let ell = cfg.charges.len();
    let mut hvec = Check::new(S, "h vectors = tableau generating functions");
    let mut corner = Check::new(S, "corner dimensions = inner products of h vectors");
    let mut direct = Check::new(S, "corner_dim = inner products, n <= 3");
    let mut hs: Vec<(ShadowedComposition, FockVector)> = Vec::new();
    for n in 0..=cfg.n {
        let shapes = multipartitions(n, ell);
        let index: BTreeMap<&Multipartition, usize> = shapes.iter().enumerate().map(|(i, s)| (s, i)).collect();
        // Tableau side: Weyl characters by shape, q^deg.
        let weyl: Vec<BTreeMap<ShadowedComposition, LaurentInt>> =
            shapes.par_iter().map(|xi| cd.weyl_character(xi)).collect();
        let types = shadowed_of_size(cfg.e, n, &cfg.charges);
        let fock_side: Vec<Result<FockVector, String>> =
            types.par_iter().map(|mu| fock::h_vector(&fc, mu).map_err(|e| e.to_string())).collect();
        let mut tab: Vec<Sparse> = vec![Vec::new(); types.len()];
        let type_index: BTreeMap<&ShadowedComposition, usize> = types.iter().enumerate().map(|(i, m)| (m, i)).collect();
        for (s, w) in weyl.iter().enumerate() {
            for (mu, c) in w {
                tab[type_index[mu]].push((s, c.bar()));
            }
        }
        let mut fk: Vec<Sparse> = Vec::with_capacity(types.len());
        for (mu, h) in types.iter().zip(&fock_side) {
            match h {
                Ok(h) => {
                    let mut v: Sparse = h.terms().map(|(xi, c)| (index[xi], c.clone())).collect();
                    v.sort_by_key(|(i, _)| *i);
                    let ok = v == tab[type_index[mu]];
                    hvec.case(ok, || format!("{mu}: h = {h}"));
                    hs.push((mu.clone(), h.clone()));
                    fk.push(v);
                }
                Err(e) => {
                    hvec.case(false, || format!("{mu}: {e}"));
                    fk.push(Vec::new());
                }
            }
        }
        let mut by_dim: BTreeMap<DimVector, Vec<usize>> = BTreeMap::new();
        for (i, mu) in types.iter().enumerate() {
            by_dim.entry(mu.dim()).or_default().push(i);
        }
        for group in by_dim.values() {
            let outcomes: Vec<Option<String>> = group
                .par_iter()
                .enumerate()
                .flat_map_iter(|(a, &i)| {
                    let (tab, fk, types) = (&tab, &fk, &types);
                    group[a..].iter().map(move |&j| {
                        let t = dot(&tab[i], &tab[j]);
                        let f = dot(&fk[i], &fk[j]);
                        (t != f).then(|| format!("{} / {}: tableaux {t}, Fock {f}", types[i], types[j]))
                    })
                })
                .collect();
            corner.cases(outcomes);
            if n <= 3 {
                let outcomes: Vec<Option<String>> = group
                    .par_iter()
                    .enumerate()
                    .flat_map_iter(|(a, &i)| {
                        let (cd, fk, types) = (&cd, &fk, &types);
                        group[a..].iter().map(move |&j| {
                            let t = cd.corner_dim(&types[i], &types[j]).bar();
                            let f = dot(&fk[i], &fk[j]);
                            (t != f).then(|| format!("{} / {}: corner_dim {t}, Fock {f}", types[i], types[j]))
                        })
                    })
                    .collect();
                direct.cases(outcomes);
            }
        }
    }

    let mut one_box = Check::new(S, "one-box corners");
    for z in 0..cfg.e as i64 {
        let cd1 = qschur::cellular::CellDatum::new(qschur::Charge::new(cfg.e, vec![z]));
        for j in 1..=cfg.e {
            let mu = ShadowedComposition::new(vec![z], vec![VectorComposition::from_labels(cfg.e, &[j])])
                .expect("one group");
            let expected =
                if qschur::dimvec::residue_label(z, cfg.e) == j { LaurentInt::one() } else { LaurentInt::zero() };
            let got = cd1.corner_dim(&mu, &mu);
            one_box.case(got == expected, || format!("charge {z}, label {j}: {got}"));
        }
    }

    let mut counts = Check::new(S, "number of pairs = colored RSK count");
    let ch = cfg.charge();
    for n in 1..=cfg.n.min(4) {
        let all: Vec<Vec<Vec<u32>>> = multicompositions(n, ell);
        let outcomes: Vec<Option<String>> = all
            .par_iter()
            .map(|xi| {
                let a = count_pairs(xi, &ch, AlphabetRule::Initial);
                let b = pairs_by_rsk(xi, ell, AlphabetRule::Initial);
                (a != b).then(|| format!("{xi:?}: tableaux {a}, RSK {b}"))
            })
            .collect();
        counts.cases(outcomes);
    }

    let mut bar = Check::new(S, "bar involution");
    let mut canon = Check::new(S, "canonical basis");
    match BarInvolution::new(&fc, cfg.n) {
        Err(e) => bar.case(false, || e.to_string()),
        Ok(psi) => {
            for n in 0..=cfg.n {
                for xi in multipartitions(n, ell) {
                    let u = FockVector::basis(xi.clone());
                    let ok = match psi.apply(&u) {
                        Ok(img) => {
                            img.coeff(&xi).is_one()
                                && img.support().all(|eta| *eta >= xi)
                                && psi.apply(&img).ok() == Some(u.clone())
                        }
                        Err(_) => false,
                    };
                    bar.case(ok, || format!("Psi(u[{xi}])"));
                }
            }
            for (mu, h) in &hs {
                bar.case(psi.apply(h).ok().as_ref() == Some(h), || format!("Psi(h[{mu}]) != h[{mu}]"));
            }
            if let Some(xi) = multipartitions(cfg.n, ell).first() {
                let c = &LaurentInt::q_pow(2) + &LaurentInt::monomial(3, -1);
                let v = FockVector::basis(xi.clone());
                let ok = psi.apply(&v.scale(&c)).ok() == psi.apply(&v).ok().map(|w| w.scale(&c.bar()));
                bar.case(ok, || "antilinearity".into());
            }
            for n in 1..=cfg.n {
                match fock::canonical_basis(&fc, n) {
                    Err(e) => canon.case(false, || e.to_string()),
                    Ok(p) => {
                        for (xi, v) in &p {
                            let mut ok = psi.apply(v).ok().as_ref() == Some(v) && v.coeff(xi).is_one();
                            for (eta, c) in v.terms() {
                                if eta != xi {
                                    ok &= eta > xi && c.in_negative_part() && c.has_nonnegative_coeffs();
                                }
                            }
                            canon.case(ok, || format!("p[{xi}] = {v}"));
                        }
                    }
                }
            }
        }
    }
    vec![hvec, corner, direct, one_box, counts, bar, canon]
}
