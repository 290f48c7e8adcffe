//! Strict factors of a pattern that can be glued on either side of it while
//! keeping a DSS of the same slope, and the towers of such factors that
//! bound how many digital edges a maximal segment may cross.

use super::words::{pattern_multiplicity, word_counts, word_slope, Tower};
use super::{cf_decompose, pattern_word, ContinuedFraction, PatternError};

/// `Left` factors (`R_i`) are glued before the pattern, `Right` factors
/// (`L_i`) after it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FlankingEdge {
    pub word: String,
    pub side: Side,
    /// Position `i` in `R_i` or `L_i`, counted outwards from the pattern.
    pub rank: usize,
    /// Depth `k` of the convergent whose recursion produced the factor.
    pub level: usize,
    /// Largest complexity the factor's slope can have at this level.
    pub complexity: usize,
}

fn factor_at(
    cf: &ContinuedFraction,
    tower: &Tower,
    level: usize,
    side: Side,
    cut: i64,
    rank: usize,
) -> Result<FlankingEdge, PatternError> {
    let u = cf.quotient(level);
    if cut < 1 || cut >= u {
        return Err(PatternError::InvalidArgument(format!(
            "cut {cut} is not in [1, {}) at level {level}",
            u
        )));
    }
    let k = level as isize;
    let power = tower.get(k - 1).repeat((u - cut) as usize);
    let odd = level % 2 == 1;
    let (word, complexity) = match (side, odd) {
        (Side::Left, true) => (power + tower.get(k - 2), level),
        (Side::Right, true) => (power, level - 1),
        (Side::Left, false) => (power, level - 1),
        (Side::Right, false) => (tower.get(k - 2).to_string() + &power, level),
    };
    Ok(FlankingEdge { word, side, rank, level, complexity })
}

/// The strict left (`R`) or right (`L`) factor of the pattern of `cf`
/// obtained by removing `cut` copies of the repeated block at the top level.
pub fn flanking_factors(cf: &ContinuedFraction, side: Side, cut: i64) -> Result<FlankingEdge, PatternError> {
    let n = cf.complexity();
    if n == 0 {
        return Err(PatternError::InvalidArgument("slope 0 has no strict factors".into()));
    }
    factor_at(cf, &Tower::new(cf), n, side, cut, 1)
}

/// `R_1..R_n` followed by `L_1..L_n`, where `R_j` and `L_j` come from level
/// `n + 1 - j` with cuts `cuts[j - 1] = (r_j, l_j)`. Levels whose quotient is
/// below 2 admit no strict factor and are skipped, their cuts ignored.
pub fn flanking_edge_sequence(
    cf: &ContinuedFraction,
    cuts: &[(i64, i64)],
) -> Result<Vec<FlankingEdge>, PatternError> {
    let n = cf.complexity();
    if cuts.len() != n {
        return Err(PatternError::InvalidArgument(format!("expected {n} cut pairs, got {}", cuts.len())));
    }
    let tower = Tower::new(cf);
    let mut lefts = Vec::new();
    let mut rights = Vec::new();
    for (j, &(r, l)) in (1..=n).zip(cuts) {
        let level = n + 1 - j;
        if cf.quotient(level) < 2 {
            continue;
        }
        lefts.push(factor_at(cf, &tower, level, Side::Left, r, j)?);
        rights.push(factor_at(cf, &tower, level, Side::Right, l, j)?);
    }
    lefts.extend(rights);
    Ok(lefts)
}

/// `R_n .. R_1 P L_1 .. L_n` for the edges returned by
/// [`flanking_edge_sequence`].
pub fn assemble_flanked(cf: &ContinuedFraction, edges: &[FlankingEdge]) -> String {
    let mut out = String::new();
    let mut lefts: Vec<_> = edges.iter().filter(|e| e.side == Side::Left).collect();
    lefts.sort_by_key(|e| std::cmp::Reverse(e.rank));
    for e in lefts {
        out.push_str(&e.word);
    }
    out.push_str(pattern_word(cf).as_str());
    let mut rights: Vec<_> = edges.iter().filter(|e| e.side == Side::Right).collect();
    rights.sort_by_key(|e| e.rank);
    for e in rights {
        out.push_str(&e.word);
    }
    out
}

/// Remainders `a x - b y` along the path spelled by `word` from the origin.
fn remainders(word: &str, a: i64, b: i64) -> Vec<i64> {
    let mut r = 0;
    let mut out = vec![0];
    for c in word.bytes() {
        r += if c == b'0' { a } else { -b };
        out.push(r);
    }
    out
}

fn fits_slope(word: &str, a: i64, b: i64) -> bool {
    let rs = remainders(word, a, b);
    let lo = rs.iter().min().unwrap();
    let hi = rs.iter().max().unwrap();
    hi - lo < a + b
}

fn complexity_of(word: &str) -> usize {
    let (a, b) = word_slope(word);
    cf_decompose(a, b).expect("words over {0, 1} have slopes in [0, 1]").complexity()
}

/// `sign(slope(u) - slope(v))` for words given by their letter counts.
fn compare_slopes(u: (i64, i64), v: (i64, i64)) -> std::cmp::Ordering {
    (u.0 as i128 * v.1 as i128).cmp(&(v.0 as i128 * u.1 as i128))
}

/// Checks that a top-level factor behaves as stated for strict flanking
/// factors: gluing it keeps a DSS of the pattern's slope, it is a pattern
/// power while the glued word is not a pattern, its slope lies on the
/// correct side of the pattern's, and the complexities of the factor and of
/// the leftover part of the pattern stay within the level's bounds.
pub fn verify_flanking_edge(cf: &ContinuedFraction, edge: &FlankingEdge) -> Result<(), String> {
    let n = cf.complexity();
    let (a, b) = (cf.numerator(), cf.denominator());
    let p = pattern_word(cf).into_string();
    let w = edge.word.as_str();
    if w.is_empty() || w.len() >= p.len() {
        return Err(format!("{w:?} is not a strict factor of {p:?}"));
    }
    let (glued, leftover) = match edge.side {
        Side::Left => {
            if !p.ends_with(w) {
                return Err(format!("{w:?} is not a right factor of {p:?}"));
            }
            (format!("{w}{p}"), &p[..p.len() - w.len()])
        }
        Side::Right => {
            if !p.starts_with(w) {
                return Err(format!("{w:?} is not a left factor of {p:?}"));
            }
            (format!("{p}{w}"), &p[w.len()..])
        }
    };
    if !fits_slope(&glued, a, b) {
        return Err(format!("{glued:?} is not a DSS of slope {a}/{b}"));
    }
    if pattern_multiplicity(w).is_none() {
        return Err(format!("{w:?} is not a power of a pattern"));
    }
    if pattern_multiplicity(&glued) == Some(1) {
        return Err(format!("{glued:?} is itself a pattern"));
    }
    let order = compare_slopes(word_counts(w), (a, b));
    let expected = match edge.side {
        Side::Left => std::cmp::Ordering::Greater,
        Side::Right => std::cmp::Ordering::Less,
    };
    if order != expected {
        return Err(format!("slope of {w:?} is on the wrong side of {a}/{b}"));
    }
    let odd = edge.level % 2 == 1;
    let (factor_bound, leftover_bound) = match (edge.side, odd) {
        (Side::Left, true) => (edge.level, edge.level - 1),
        (Side::Right, true) => (edge.level - 1, edge.level),
        (Side::Left, false) => (edge.level - 1, edge.level),
        (Side::Right, false) => (edge.level, edge.level - 1),
    };
    if edge.level == n && edge.complexity != factor_bound {
        return Err(format!("reported complexity {} differs from {factor_bound}", edge.complexity));
    }
    if complexity_of(w) > factor_bound {
        return Err(format!("{w:?} has complexity above {factor_bound}"));
    }
    if complexity_of(leftover) > leftover_bound {
        return Err(format!("leftover {leftover:?} has complexity above {leftover_bound}"));
    }
    Ok(())
}

/// Checks a full sequence: the glued word is a DSS of slope `a/b` whose
/// upper leaning points all lie on the central pattern, the factors nest as
/// strict factors of the pattern, complexities never increase outwards and
/// slopes strictly decrease from `R_n` to `L_n`.
pub fn verify_flanked_sequence(cf: &ContinuedFraction, edges: &[FlankingEdge]) -> Result<(), String> {
    let (a, b) = (cf.numerator(), cf.denominator());
    let p = pattern_word(cf).into_string();
    let word = assemble_flanked(cf, edges);
    let rs = remainders(&word, a, b);
    let lo = *rs.iter().min().unwrap();
    let hi = *rs.iter().max().unwrap();
    if hi - lo >= a + b {
        return Err(format!("{word:?} is not a DSS of slope {a}/{b}"));
    }
    let left_len: usize = edges.iter().filter(|e| e.side == Side::Left).map(|e| e.word.len()).sum();
    let right_len: usize = edges.iter().filter(|e| e.side == Side::Right).map(|e| e.word.len()).sum();
    if left_len >= p.len() || right_len >= p.len() {
        return Err("flanking factors are not strict".into());
    }
    if !p.ends_with(&word[..left_len]) || !p.starts_with(&word[left_len + p.len()..]) {
        return Err("flanking factors do not nest inside the pattern".into());
    }
    let (start, end) = (left_len, left_len + p.len());
    if let Some(k) = (0..rs.len()).find(|&k| rs[k] == lo && !(start..=end).contains(&k)) {
        return Err(format!("upper leaning point at position {k} lies outside the pattern"));
    }
    for side in [Side::Left, Side::Right] {
        let mut ranked: Vec<_> = edges.iter().filter(|e| e.side == side).collect();
        ranked.sort_by_key(|e| e.rank);
        if ranked.windows(2).any(|w| w[1].complexity > w[0].complexity) {
            return Err(format!("complexities increase outwards on the {side:?} side"));
        }
    }
    let mut slopes: Vec<(i64, i64)> = Vec::new();
    let mut lefts: Vec<_> = edges.iter().filter(|e| e.side == Side::Left).collect();
    lefts.sort_by_key(|e| std::cmp::Reverse(e.rank));
    slopes.extend(lefts.iter().map(|e| word_counts(&e.word)));
    slopes.push((a, b));
    let mut rights: Vec<_> = edges.iter().filter(|e| e.side == Side::Right).collect();
    rights.sort_by_key(|e| e.rank);
    slopes.extend(rights.iter().map(|e| word_counts(&e.word)));
    if slopes.windows(2).any(|w| compare_slopes(w[0], w[1]) != std::cmp::Ordering::Greater) {
        return Err("slopes do not strictly decrease from R_n to L_n".into());
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cf(a: i64, b: i64) -> ContinuedFraction {
        cf_decompose(a, b).unwrap()
    }

    #[test]
    fn single_factor_examples() {
        let c = cf(2, 5);
        let l = flanking_factors(&c, Side::Right, 1).unwrap();
        assert_eq!((l.word.as_str(), l.complexity), ("0001", 2));
        let r = flanking_factors(&c, Side::Left, 1).unwrap();
        assert_eq!((r.word.as_str(), r.complexity), ("001", 1));
        verify_flanking_edge(&c, &l).unwrap();
        verify_flanking_edge(&c, &r).unwrap();
        // slope(001) = 1/2 > 2/5 > 1/3 = slope(0001)
        assert_eq!(compare_slopes(word_counts("001"), (2, 5)), std::cmp::Ordering::Greater);
        assert_eq!(compare_slopes((2, 5), word_counts("0001")), std::cmp::Ordering::Greater);
    }

    #[test]
    fn cut_must_leave_a_strict_factor() {
        let c = cf(2, 5);
        assert!(flanking_factors(&c, Side::Left, 2).is_err());
        assert!(flanking_factors(&c, Side::Left, 0).is_err());
        assert!(flanking_factors(&cf(0, 1), Side::Left, 1).is_err());
    }

    #[test]
    fn depth_one_sequence() {
        let c = cf(1, 3);
        let edges = flanking_edge_sequence(&c, &[(1, 1)]).unwrap();
        let words: Vec<_> = edges.iter().map(|e| e.word.as_str()).collect();
        assert_eq!(words, ["001", "00"]);
        verify_flanked_sequence(&c, &edges).unwrap();
    }

    #[test]
    fn depth_two_sequence_with_unit_cuts() {
        let c = cf(2, 5);
        let edges = flanking_edge_sequence(&c, &[(1, 1), (1, 1)]).unwrap();
        let words: Vec<_> = edges.iter().map(|e| (e.word.as_str(), e.complexity)).collect();
        assert_eq!(words, [("001", 1), ("01", 1), ("0001", 2), ("0", 0)]);
        assert_eq!(assemble_flanked(&c, &edges), "01001000100100010");
        verify_flanked_sequence(&c, &edges).unwrap();
    }

    #[test]
    fn depth_three_first_left_factor() {
        // [0; 2, 2, 2] = 5/12, R_1 = E(z_2)^{u_3 - 1} E(z_1).
        let c = cf(5, 12);
        assert_eq!(c.quotients(), &[2, 2, 2]);
        let edges = flanking_edge_sequence(&c, &[(1, 1), (1, 1), (1, 1)]).unwrap();
        assert_eq!(edges[0].word, "0001001001");
        assert_eq!(edges[0].complexity, 3);
        verify_flanked_sequence(&c, &edges).unwrap();
    }

    #[test]
    fn unit_quotients_are_skipped() {
        let c = cf(3, 5);
        let edges = flanking_edge_sequence(&c, &[(1, 1), (9, 9), (1, 1)]).unwrap();
        assert!(edges.iter().all(|e| e.level != 2 && e.level != 1));
        verify_flanked_sequence(&c, &edges).unwrap();
        assert!(flanking_edge_sequence(&c, &[(1, 1)]).is_err());
    }
}
