use super::PatternError;

/// Bounds on the number of supporting edges a maximal segment can cross on
/// one side, for a shape digitized in an `m x m` box.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EdgeCountBound {
    /// Largest `n` with `U_{n+1} <= m`, `U` the Pell numbers.
    pub exact: usize,
    /// `log(4m / sqrt 2) / log(1 + sqrt 2) - 1`.
    pub closed_form: f64,
}

/// Pell numbers `U_0 = 0, U_1 = 1, U_n = 2 U_{n-1} + U_{n-2}`; the shortest
/// pattern of depth `n` has slope `[0; 2, ..., 2]` and length `U_{n+1}`.
pub fn pell_numbers(count: usize) -> Vec<u128> {
    let mut out: Vec<u128> = Vec::with_capacity(count);
    for k in 0..count {
        let next = match k {
            0 => 0,
            1 => 1,
            _ => 2 * out[k - 1] + out[k - 2],
        };
        out.push(next);
    }
    out
}

pub fn max_edges_bound(m: i64) -> Result<EdgeCountBound, PatternError> {
    if m < 2 {
        return Err(PatternError::InvalidArgument(format!("grid size {m} is below 2")));
    }
    let m_wide = m as u128;
    let mut exact = 0;
    let (mut cur, mut next) = (1u128, 2u128);
    while next <= m_wide {
        exact += 1;
        (cur, next) = (next, 2 * next + cur);
    }
    let sqrt2 = std::f64::consts::SQRT_2;
    let closed_form = (4.0 * m as f64 / sqrt2).ln() / (1.0 + sqrt2).ln() - 1.0;
    Ok(EdgeCountBound { exact, closed_form })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pell_prefix() {
        assert_eq!(pell_numbers(9), [0, 1, 2, 5, 12, 29, 70, 169, 408]);
    }

    #[test]
    fn bound_examples() {
        let b = max_edges_bound(512).unwrap();
        assert_eq!(b.exact, 7);
        assert!((b.closed_form - 7.26).abs() < 0.01);
        let b = max_edges_bound(2).unwrap();
        assert_eq!(b.exact, 1);
        assert!((b.closed_form - 0.97).abs() < 0.01);
        assert!(max_edges_bound(1).is_err());
    }

    #[test]
    fn exact_bound_matches_pell_definition() {
        let pell = pell_numbers(40);
        for m in 2..5000i64 {
            let n = max_edges_bound(m).unwrap().exact;
            assert!(pell[n + 1] <= m as u128 && pell[n + 2] > m as u128, "m = {m}");
        }
    }
}
