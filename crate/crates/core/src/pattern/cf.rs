use num_integer::Integer;

use super::PatternError;

/// Simple continued fraction `[0; u_1, ..., u_n]` of a slope in `[0, 1]`.
///
/// The canonical form (from [`cf_decompose`]) ends with `u_n >= 2` unless
/// `n <= 1`; [`ContinuedFraction::flipped`] gives the other representation,
/// which has the opposite parity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ContinuedFraction {
    quotients: Vec<i64>,
    a: i64,
    b: i64,
}

/// Canonical continued fraction of `a/b` by Euclid's algorithm. `0/1` gives
/// the empty expansion `z_0`.
pub fn cf_decompose(a: i64, b: i64) -> Result<ContinuedFraction, PatternError> {
    if b < 1 || a < 0 || a > b {
        return Err(PatternError::InvalidArgument(format!("slope {a}/{b} is not in [0, 1]")));
    }
    if a.gcd(&b) != 1 {
        return Err(PatternError::InvalidArgument(format!("{a}/{b} is not reduced")));
    }
    let mut quotients = Vec::new();
    let (mut num, mut den) = (a, b);
    while num != 0 {
        quotients.push(den / num);
        (num, den) = (den % num, num);
    }
    Ok(ContinuedFraction { quotients, a, b })
}

impl ContinuedFraction {
    /// Builds the fraction from explicit partial quotients, all positive.
    pub fn from_quotients(quotients: Vec<i64>) -> Result<Self, PatternError> {
        if quotients.iter().any(|&u| u < 1) {
            return Err(PatternError::InvalidArgument("partial quotients must be positive".into()));
        }
        let table = ConvergentTable::from_quotients(&quotients);
        let (a, b) = table.get(quotients.len() as isize);
        Ok(Self { quotients, a, b })
    }

    pub fn quotients(&self) -> &[i64] {
        &self.quotients
    }

    /// `u_k` for `1 <= k <= n`; `u_0 = 0`.
    pub fn quotient(&self, k: usize) -> i64 {
        if k == 0 {
            0
        } else {
            self.quotients[k - 1]
        }
    }

    /// Depth `n` of the expansion.
    pub fn complexity(&self) -> usize {
        self.quotients.len()
    }

    pub fn numerator(&self) -> i64 {
        self.a
    }

    pub fn denominator(&self) -> i64 {
        self.b
    }

    pub fn is_canonical(&self) -> bool {
        self.quotients.len() <= 1 || *self.quotients.last().unwrap() >= 2
    }

    /// The same value with the other parity: `[.., u_n]` becomes
    /// `[.., u_n - 1, 1]` and back. `None` for `0` and `1/1`, which have
    /// a single admissible expansion.
    pub fn flipped(&self) -> Option<Self> {
        let mut q = self.quotients.clone();
        let last = *q.last()?;
        if last >= 2 {
            *q.last_mut().unwrap() -= 1;
            q.push(1);
        } else if q.len() >= 2 {
            q.pop();
            *q.last_mut().unwrap() += 1;
        } else {
            return None;
        }
        Some(Self { quotients: q, a: self.a, b: self.b })
    }

    pub fn canonical(&self) -> Self {
        if self.is_canonical() {
            self.clone()
        } else {
            self.flipped().expect("a non-canonical expansion can be flipped")
        }
    }

    pub fn convergents(&self) -> ConvergentTable {
        ConvergentTable::from_quotients(&self.quotients)
    }
}

/// Convergents `p_k / q_k` for `k = -2 ..= n`, with `(p_-2, q_-2) = (0, 1)`
/// and `(p_-1, q_-1) = (1, 0)` so that `(p_0, q_0) = (0, 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvergentTable {
    pq: Vec<(i64, i64)>,
}

impl ConvergentTable {
    fn from_quotients(quotients: &[i64]) -> Self {
        let mut pq = vec![(0, 1), (1, 0), (0, 1)];
        for &u in quotients {
            let (p1, q1) = pq[pq.len() - 1];
            let (p2, q2) = pq[pq.len() - 2];
            pq.push((u * p1 + p2, u * q1 + q2));
        }
        Self { pq }
    }

    /// `(p_k, q_k)` for `-2 <= k <= n`.
    pub fn get(&self, k: isize) -> (i64, i64) {
        self.pq[(k + 2) as usize]
    }

    pub fn p(&self, k: isize) -> i64 {
        self.get(k).0
    }

    pub fn q(&self, k: isize) -> i64 {
        self.get(k).1
    }

    /// Largest index `n`.
    pub fn depth(&self) -> usize {
        self.pq.len() - 3
    }

    /// Rows `(p_k, q_k)` for `k = 0 ..= n`.
    pub fn rows(&self) -> &[(i64, i64)] {
        &self.pq[2..]
    }

    /// `p_k q_{k-1} - p_{k-1} q_k`, which equals `(-1)^(k+1)`.
    pub fn determinant(&self, k: isize) -> i64 {
        let (p, q) = self.get(k);
        let (p1, q1) = self.get(k - 1);
        p * q1 - p1 * q
    }
}
