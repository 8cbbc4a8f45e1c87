use num_bigint::BigUint;
use num_traits::{One, Zero};

/// Arrays are indexed `0..=bound`; index 0 is unused.
fn mul(a: &[BigUint], b: &[BigUint]) -> Vec<BigUint> {
    let bound = a.len() - 1;
    let mut out = vec![BigUint::zero(); bound + 1];
    for i in 1..=bound {
        if a[i].is_zero() {
            continue;
        }
        for j in 1..=bound / i {
            if !b[j].is_zero() {
                out[i * j] += &a[i] * &b[j];
            }
        }
    }
    out
}

fn unit(bound: usize) -> Vec<BigUint> {
    let mut e = vec![BigUint::zero(); bound + 1];
    if bound >= 1 {
        e[1] = BigUint::one();
    }
    e
}

fn pow(base: &[BigUint], mut k: usize) -> Vec<BigUint> {
    let mut acc = unit(base.len() - 1);
    let mut sq = base.to_vec();
    while k > 0 {
        if k & 1 == 1 {
            acc = mul(&acc, &sq);
        }
        k >>= 1;
        if k > 0 {
            sq = mul(&sq, &sq);
        }
    }
    acc
}

fn indicator(bound: usize, even: bool) -> Vec<BigUint> {
    (0..=bound)
        .map(|d| {
            if d >= 1 && (d % 2 == 0) == even {
                BigUint::one()
            } else {
                BigUint::zero()
            }
        })
        .collect()
}

/// Coefficients of `(2^{−s}ζ(s))^O (ζ(s) − 2^{−s}ζ(s))^E` for `d = 1..=bound`:
/// `out[d−1]` counts tuples of `O` even and `E` odd positive integers with
/// product `d`.
pub fn dirichlet_coeffs(o: usize, e: usize, bound: usize) -> Vec<BigUint> {
    if bound == 0 {
        return Vec::new();
    }
    // The even part is supported on multiples of 2^O; skip the work when
    // that already exceeds the bound.
    if o >= usize::BITS as usize || (1usize << o) > bound {
        return vec![BigUint::zero(); bound];
    }
    let evens = pow(&indicator(bound, true), o);
    let odds = pow(&indicator(bound, false), e);
    let mut out = mul(&evens, &odds);
    out.remove(0);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive(o: usize, e: usize, d: u64) -> u64 {
        fn go(left: &[bool], d: u64) -> u64 {
            match left.split_first() {
                None => (d == 1) as u64,
                Some((&even, rest)) => (1..=d)
                    .filter(|b| d.is_multiple_of(*b) && (b % 2 == 0) == even)
                    .map(|b| go(rest, d / b))
                    .sum(),
            }
        }
        let mut kinds = vec![true; o];
        kinds.extend(vec![false; e]);
        go(&kinds, d)
    }

    #[test]
    fn examples() {
        let c = dirichlet_coeffs(0, 0, 10);
        assert_eq!(c[0], BigUint::one());
        assert!(c[1..].iter().all(Zero::is_zero));
        let c = dirichlet_coeffs(1, 0, 20);
        for d in 1..=20 {
            assert_eq!(c[d - 1], BigUint::from((d % 2 == 0) as u32));
        }
        assert_eq!(dirichlet_coeffs(1, 1, 6)[5], BigUint::from(2u32));
        assert!(dirichlet_coeffs(20, 3, 1000).iter().all(Zero::is_zero));
        assert!(dirichlet_coeffs(2, 2, 0).is_empty());
    }

    #[test]
    fn matches_tuple_enumeration() {
        for n in 0..=3 {
            for o in 0..=n {
                let c = dirichlet_coeffs(o, n - o, 60);
                for d in 1..=60u64 {
                    assert_eq!(
                        c[d as usize - 1],
                        BigUint::from(naive(o, n - o, d)),
                        "O={o} n={n} d={d}"
                    );
                }
            }
        }
    }
}
