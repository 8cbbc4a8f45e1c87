use num_traits::Zero;

use super::RootSystem;
use crate::linalg::{self, q, Q};

/// Dimension of the space of quadratic forms on `Span R` vanishing on every root.
///
/// Forms are written in simple-root coordinates, `Q(x) = Σ_{i≤j} q_ij x_i x_j`,
/// and each positive root contributes one linear equation in the `q_ij`
/// (`Q(−α) = Q(α)`, so negative roots add nothing).
pub fn quadratic_nullspace_dim(r: &RootSystem) -> usize {
    let n = r.rank();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let rows: Vec<Vec<Q>> = r
        .root_coeffs()
        .iter()
        .map(|c| pairs.iter().map(|&(i, j)| q(c[i] * c[j])).collect())
        .collect();
    pairs.len() - linalg::rank(&rows)
}

/// For every root `α`, the roots not orthogonal to `α` span `Span R`.
pub fn spanning_check(r: &RootSystem) -> bool {
    let n = r.rank();
    (0..r.num_positive()).all(|a| {
        let rows: Vec<Vec<i64>> = (0..r.num_positive())
            .filter(|&b| !r.root_inner(a, b).is_zero())
            .map(|b| r.root_coeffs()[b].clone())
            .collect();
        linalg::rank_i64(&rows) == n
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_lemma_small_cases() {
        for s in ["A2", "G2", "F4", "B2"] {
            let r = RootSystem::build(s.parse().unwrap());
            assert_eq!(quadratic_nullspace_dim(&r), 0, "{s}");
        }
    }

    #[test]
    fn spanning_small_cases() {
        for s in ["A1", "B2", "E6"] {
            let r = RootSystem::build(s.parse().unwrap());
            assert!(spanning_check(&r), "{s}");
        }
    }
}
