use crate::error::{Error, Result};

/// Recover the multiset `{m_i}` from the truncated series of
/// `Π_i (1 − t^{m_i})^{−1}`, given as `coeffs[k]` for `k = 0..len`.
///
/// The result is sorted. A series that no multiset reproduces is reported
/// with the first index at which it deviates.
pub fn recover_factor_sizes(coeffs: &[u64]) -> Result<Vec<usize>> {
    if coeffs.first() != Some(&1) {
        return Err(Error::InconsistentSeries(0));
    }
    let len = coeffs.len();
    let mut cur = vec![0u64; len];
    cur[0] = 1;
    let mut sizes = Vec::new();
    loop {
        let Some(k) = (1..len).find(|&k| cur[k] != coeffs[k]) else {
            return Ok(sizes);
        };
        if cur[k] > coeffs[k] {
            return Err(Error::InconsistentSeries(k));
        }
        // Multiplying by 1/(1 − t^k) raises cur[k] by exactly one.
        for j in k..len {
            cur[j] += cur[j - k];
        }
        sizes.push(k);
    }
}

/// Coefficients of `Π (1 − t^{m})^{−1}` up to `t^{len−1}`.
pub fn series_of_sizes(sizes: &[usize], len: usize) -> Vec<u64> {
    let mut cur = vec![0u64; len];
    if len > 0 {
        cur[0] = 1;
    }
    for &m in sizes {
        for j in m.max(1)..len {
            cur[j] += cur[j - m];
        }
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn examples() {
        assert_eq!(
            recover_factor_sizes(&series_of_sizes(&[3], 10)).unwrap(),
            vec![3]
        );
        let s = [1, 1, 1, 2, 2, 2, 3];
        assert_eq!(series_of_sizes(&[1, 3], 7), s);
        assert_eq!(recover_factor_sizes(&s).unwrap(), vec![1, 3]);
        let s = series_of_sizes(&[49, 49], 99);
        assert_eq!(s[98], 3);
        assert_eq!(recover_factor_sizes(&s).unwrap(), vec![49, 49]);
        assert_eq!(recover_factor_sizes(&[1]).unwrap(), Vec::<usize>::new());
    }

    #[test]
    fn inconsistent() {
        assert!(matches!(
            recover_factor_sizes(&[1, 2, 1]),
            Err(Error::InconsistentSeries(2))
        ));
        assert!(recover_factor_sizes(&[0, 1]).is_err());
        assert!(recover_factor_sizes(&[]).is_err());
    }

    proptest! {
        #[test]
        fn round_trip(mut sizes in proptest::collection::vec(1usize..12, 0..5)) {
            sizes.sort();
            let total: usize = sizes.iter().sum();
            let s = series_of_sizes(&sizes, total + 1);
            prop_assert_eq!(recover_factor_sizes(&s).unwrap(), sizes);
        }
    }
}
