//! Suites shared by the integration tests. Each returns the number of cases
//! checked, or a description of the first failure.
#![allow(dead_code)]

use maxseg_core::lattice::LatticePoint;
use maxseg_core::pattern::{
    cf_decompose, factor_structure, flanking_edge_sequence, flanking_factors, leaning_vectors, pattern_word,
    reversed_pattern, verify_flanked_sequence, verify_flanking_edge, word_counts, ContinuedFraction, Side,
};

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

pub fn slopes(max_b: i64) -> impl Iterator<Item = (i64, i64)> {
    (2..=max_b).flat_map(|b| (1..b).map(move |a| (a, b))).filter(|&(a, b)| gcd(a, b) == 1)
}

fn gcd(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Lattice points spelled by a word from the origin.
fn path(word: &str) -> Vec<LatticePoint> {
    let mut p = LatticePoint::ORIGIN;
    let mut out = vec![p];
    for c in word.bytes() {
        p = p + if c == b'0' { LatticePoint::new(1, 0) } else { LatticePoint::new(0, 1) };
        out.push(p);
    }
    out
}

/// Pattern words, leaning vectors, convergent identities and factor
/// structure for every slope `a/b` with `b <= max_b`, against a scan of the
/// remainders along the word.
pub fn pattern_suite(max_b: i64) -> Result<usize, String> {
    let mut checked = 0;
    for (a, b) in slopes(max_b) {
        let cf = cf_decompose(a, b).map_err(|e| e.to_string())?;
        let word = pattern_word(&cf);
        ensure!(word_counts(word.as_str()) == (a, b), "{a}/{b}: letter counts");
        let pts = path(word.as_str());
        let rs: Vec<i64> = pts.iter().map(|p| a * p.x - b * p.y).collect();
        ensure!(*rs.iter().min().unwrap() == 0, "{a}/{b}: remainders start below 0");
        ensure!(*rs.iter().max().unwrap() == a + b - 1, "{a}/{b}: remainders exceed the line");
        ensure!(*pts.last().unwrap() == LatticePoint::new(b, a), "{a}/{b}: endpoint");
        let uppers: Vec<_> = (0..pts.len()).filter(|&k| rs[k] == 0).collect();
        ensure!(uppers == [0, pts.len() - 1], "{a}/{b}: upper leaning points only at the ends");
        let lowers: Vec<_> = (0..pts.len()).filter(|&k| rs[k] == a + b - 1).collect();
        ensure!(lowers.len() == 1, "{a}/{b}: one lower leaning point");
        let l1 = pts[lowers[0]];
        let expected = (l1, LatticePoint::new(b, a) - l1);
        ensure!(leaning_vectors(&cf).map_err(|e| e.to_string())? == expected, "{a}/{b}: leaning vectors");
        if let Some(f) = cf.flipped() {
            ensure!(
                leaning_vectors(&f).map_err(|e| e.to_string())? == expected,
                "{a}/{b} flipped: leaning vectors"
            );
            ensure!(pattern_word(&f) == word, "{a}/{b}: both expansions spell one word");
        }
        let rev: String = word.as_str().chars().rev().collect();
        ensure!(reversed_pattern(&cf).as_str() == rev, "{a}/{b}: reversed pattern");

        let t = cf.convergents();
        let n = cf.complexity() as isize;
        ensure!(t.get(n) == (a, b), "{a}/{b}: last convergent");
        for k in 0..=n {
            let sign = if (k + 1) % 2 == 0 { 1 } else { -1 };
            ensure!(t.determinant(k) == sign, "{a}/{b} k={k}: convergent determinant");
            if k >= 1 {
                let u = cf.quotient(k as usize);
                ensure!(t.p(k) == u * t.p(k - 1) + t.p(k - 2), "{a}/{b} k={k}: numerator recurrence");
                ensure!(t.q(k) == u * t.q(k - 1) + t.q(k - 2), "{a}/{b} k={k}: denominator recurrence");
            }
        }

        for form in [Some(cf.clone()), cf.flipped()].into_iter().flatten() {
            if form.complexity() < 2 {
                continue;
            }
            let (left, right) = factor_structure(&form).map_err(|e| e.to_string())?;
            let (u1l1, l1u2) = word.as_str().split_at(l1.l1() as usize);
            ensure!(
                u1l1.starts_with(&left),
                "{a}/{b} {:?}: {left} is not a prefix of {u1l1}",
                form.quotients()
            );
            ensure!(
                l1u2.ends_with(&right),
                "{a}/{b} {:?}: {right} is not a suffix of {l1u2}",
                form.quotients()
            );
        }
        checked += 1;
    }
    Ok(checked)
}

fn all_cut_sequences(cf: &ContinuedFraction) -> Vec<Vec<(i64, i64)>> {
    let n = cf.complexity();
    let mut out = vec![Vec::new()];
    for j in 1..=n {
        let u = cf.quotient(n + 1 - j);
        let choices: Vec<(i64, i64)> =
            if u < 2 { vec![(1, 1)] } else { (1..u).flat_map(|r| (1..u).map(move |l| (r, l))).collect() };
        out = out
            .into_iter()
            .flat_map(|prefix| {
                choices.iter().map(move |&c| {
                    let mut v = prefix.clone();
                    v.push(c);
                    v
                })
            })
            .collect();
    }
    out
}

/// Every flanking factor and every flanked sequence, for both expansions
/// of every slope with `b <= max_b` and every admissible cut.
pub fn flanking_suite(max_b: i64) -> Result<usize, String> {
    let mut checked = 0;
    for (a, b) in slopes(max_b) {
        let cf = cf_decompose(a, b).map_err(|e| e.to_string())?;
        for form in [Some(cf.clone()), cf.flipped()].into_iter().flatten() {
            let n = form.complexity();
            let u = form.quotient(n);
            for cut in 1..u {
                for side in [Side::Left, Side::Right] {
                    let edge = flanking_factors(&form, side, cut).map_err(|e| e.to_string())?;
                    verify_flanking_edge(&form, &edge)
                        .map_err(|e| format!("{a}/{b} {:?} {side:?} cut {cut}: {e}", form.quotients()))?;
                    checked += 1;
                }
            }
            ensure!(flanking_factors(&form, Side::Left, u).is_err(), "{a}/{b}: cut {u} must be rejected");
            for cuts in all_cut_sequences(&form) {
                let edges = flanking_edge_sequence(&form, &cuts).map_err(|e| e.to_string())?;
                verify_flanked_sequence(&form, &edges)
                    .map_err(|e| format!("{a}/{b} {:?} cuts {cuts:?}: {e}", form.quotients()))?;
                checked += 1;
            }
        }
    }
    Ok(checked)
}
