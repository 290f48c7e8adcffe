use std::fmt;

use num_integer::Integer;

use super::{cf_decompose, ContinuedFraction, PatternError};
use crate::lattice::LatticePoint;

/// A Freeman word over `{0, 1}` together with its reduced slope `a/b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PatternWord {
    word: String,
    a: i64,
    b: i64,
}

impl PatternWord {
    pub fn as_str(&self) -> &str {
        &self.word
    }

    pub fn into_string(self) -> String {
        self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// Slope `(a, b)`: `a` ones and `b` zeros per period.
    pub fn slope(&self) -> (i64, i64) {
        (self.a, self.b)
    }

    /// The word repeated `f` times.
    pub fn power(&self, f: usize) -> String {
        self.word.repeat(f)
    }
}

impl fmt::Display for PatternWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.word)
    }
}

/// The words `E(z_k)` for `k = -1 ..= n`.
pub(crate) struct Tower {
    words: Vec<String>,
}

impl Tower {
    pub(crate) fn new(cf: &ContinuedFraction) -> Self {
        let mut words = vec!["1".to_string(), "0".to_string()];
        for k in 1..=cf.complexity() {
            let u = cf.quotient(k) as usize;
            let prev = &words[k];
            let prev2 = &words[k - 1];
            let w = if k % 2 == 1 { prev.repeat(u) + prev2 } else { prev2.clone() + &prev.repeat(u) };
            words.push(w);
        }
        Self { words }
    }

    /// `E(z_k)` for `-1 <= k <= n`.
    pub(crate) fn get(&self, k: isize) -> &str {
        &self.words[(k + 1) as usize]
    }
}

/// Counts of ones and zeros, i.e. the unreduced slope `(a, b)` of a word.
pub fn word_counts(word: &str) -> (i64, i64) {
    let ones = word.bytes().filter(|&c| c == b'1').count() as i64;
    (ones, word.len() as i64 - ones)
}

/// Reduced slope of a nonempty word.
pub fn word_slope(word: &str) -> (i64, i64) {
    let (a, b) = word_counts(word);
    let g = a.gcd(&b);
    (a / g, b / g)
}

/// `E(z_n)`: the Freeman word between two consecutive upper leaning points
/// of a line of slope `a/b` in the first octant.
pub fn pattern_word(cf: &ContinuedFraction) -> PatternWord {
    let tower = Tower::new(cf);
    PatternWord {
        word: tower.get(cf.complexity() as isize).to_string(),
        a: cf.numerator(),
        b: cf.denominator(),
    }
}

/// The pattern read backwards: the word between consecutive lower leaning
/// points.
pub fn reversed_pattern(cf: &ContinuedFraction) -> PatternWord {
    let p = pattern_word(cf);
    PatternWord { word: p.word.chars().rev().collect(), ..p }
}

/// Whether `word` is the pattern of its own slope, repeated `f >= 1` times;
/// returns `f`.
pub fn pattern_multiplicity(word: &str) -> Option<usize> {
    if word.is_empty() {
        return None;
    }
    let (a, b) = word_counts(word);
    let g = a.gcd(&b);
    let cf = cf_decompose(a / g, b / g).ok()?;
    (pattern_word(&cf).power(g as usize) == word).then_some(g as usize)
}

/// Vectors `U1L1` and `L1U2` between the leaning points of one pattern,
/// computed from the convergents according to the parity of the depth of
/// `cf` (either representation may be passed).
pub fn leaning_vectors(cf: &ContinuedFraction) -> Result<(LatticePoint, LatticePoint), PatternError> {
    let n = cf.complexity() as isize;
    if n == 0 {
        return Err(PatternError::InvalidArgument("slope 0 has no lower leaning point".into()));
    }
    let t = cf.convergents();
    let u = cf.quotient(n as usize);
    let v = |k: isize| LatticePoint::new(t.q(k), t.p(k));
    if n % 2 == 1 {
        let u1l1 = v(n - 1).scale(u - 1) + v(n - 2) + LatticePoint::new(1, -1);
        let l1u2 = v(n - 1) + LatticePoint::new(-1, 1);
        Ok((u1l1, l1u2))
    } else {
        let u1l1 = v(n - 1) + LatticePoint::new(1, -1);
        let l1u2 = v(n - 1).scale(u - 1) + v(n - 2) + LatticePoint::new(-1, 1);
        Ok((u1l1, l1u2))
    }
}

/// The left factor of the run `[U1, L1]` and the right factor of
/// `[L1, U2]` predicted by the parity of the depth `n >= 2`.
pub fn factor_structure(cf: &ContinuedFraction) -> Result<(String, String), PatternError> {
    let n = cf.complexity();
    if n < 2 {
        return Err(PatternError::InvalidArgument(format!("depth {n} is below 2")));
    }
    let tower = Tower::new(cf);
    let e = |k: usize| tower.get(k as isize);
    let u = |k: usize| cf.quotient(k) as usize;
    if n % 2 == 1 {
        Ok((e(n - 1).repeat(u(n) - 1), e(n - 2).repeat(u(n - 1))))
    } else {
        Ok((e(n - 2).repeat(u(n - 1)), e(n - 1).repeat(u(n) - 1)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cf(a: i64, b: i64) -> ContinuedFraction {
        cf_decompose(a, b).unwrap()
    }

    #[test]
    fn pattern_examples() {
        assert_eq!(pattern_word(&cf(0, 1)).as_str(), "0");
        assert_eq!(pattern_word(&cf(1, 2)).as_str(), "001");
        assert_eq!(pattern_word(&cf(2, 5)).as_str(), "0001001");
        assert_eq!(pattern_word(&cf(3, 5)).as_str(), "00100101");
        assert_eq!(pattern_word(&cf(1, 1)).as_str(), "01");
        assert_eq!(reversed_pattern(&cf(2, 5)).as_str(), "1001000");
        assert_eq!(reversed_pattern(&cf(0, 1)).as_str(), "0");
        assert_eq!(reversed_pattern(&cf(1, 2)).as_str(), "100");
    }

    #[test]
    fn flipped_expansion_builds_the_same_word() {
        let c = cf(3, 5);
        assert_eq!(pattern_word(&c.flipped().unwrap()), pattern_word(&c));
    }

    #[test]
    fn leaning_vector_examples() {
        let p = LatticePoint::new;
        assert_eq!(leaning_vectors(&cf(3, 5)).unwrap(), (p(4, 1), p(1, 2)));
        assert_eq!(leaning_vectors(&cf(2, 5)).unwrap(), (p(3, 0), p(2, 2)));
        assert_eq!(leaning_vectors(&cf(2, 5).flipped().unwrap()).unwrap(), (p(3, 0), p(2, 2)));
        assert!(leaning_vectors(&cf(0, 1)).is_err());
    }

    #[test]
    fn factor_examples() {
        assert_eq!(factor_structure(&cf(2, 5)).unwrap(), ("00".to_string(), "001".to_string()));
        // [0; 1, 1, 2]: E(z_2) = 001 once on the left, E(z_1)^{u_2} = 01 on the right.
        assert_eq!(factor_structure(&cf(3, 5)).unwrap(), ("001".to_string(), "01".to_string()));
        assert!(factor_structure(&cf(1, 3)).is_err());
    }

    #[test]
    fn multiplicity() {
        assert_eq!(pattern_multiplicity("0001001"), Some(1));
        assert_eq!(pattern_multiplicity("001001"), Some(2));
        assert_eq!(pattern_multiplicity("000"), Some(3));
        assert_eq!(pattern_multiplicity("1001000"), None);
        assert_eq!(pattern_multiplicity("0101"), Some(2));
        assert_eq!(pattern_multiplicity(""), None);
    }
}
