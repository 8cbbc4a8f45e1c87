use num_bigint::BigUint;
use num_integer::Integer;

use super::enumerate::enumerate_dominant;
use super::table::{DegreeTable, Variant};
use super::GroupSpec;
use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, Weight};

fn tabulate<'a>(
    spec: &GroupSpec,
    variant: Variant,
    bound: u64,
    dims: impl Iterator<Item = &'a BigUint>,
) -> DegreeTable {
    let mut t = DegreeTable::new(spec.to_string(), variant, bound);
    for d in dims {
        *t.counts.entry(d.clone()).or_insert(0) += 1;
    }
    t
}

/// Coefficients of `ζ_G(s) = Σ_V (dim V)^{-s}` up to `bound`.
pub fn zeta_coefficients(spec: &GroupSpec, bound: u64) -> DegreeTable {
    let all = enumerate_dominant(spec, bound);
    tabulate(spec, Variant::Zeta, bound, all.iter().map(|(_, d)| d))
}

/// Coefficients of `ζ*_G`, the sum over allowable dominant weights.
pub fn zeta_star_coefficients(spec: &GroupSpec, bound: u64) -> DegreeTable {
    let all = enumerate_dominant(spec, bound);
    let n = spec.n_of();
    tabulate(
        spec,
        Variant::ZetaStar,
        bound,
        all.iter()
            .filter(|(w, _)| allowable_with_n(spec, w, &n).expect("enumerated weight"))
            .map(|(_, d)| d),
    )
}

/// `p ∤ λ+ρ`, meaning `λ+ρ ∉ pΛ`.
pub fn allowable_at(r: &RootSystem, lam: &Weight, p: u64) -> Result<bool> {
    r.check_weight(lam)?;
    let p = p as i64;
    Ok(!lam.coords().iter().all(|&c| (c + 1) % p == 0))
}

/// `λ` is allowable at every prime `p ≡ 1 (mod N_G)`, in every factor.
pub fn allowable(spec: &GroupSpec, lam: &Weight) -> Result<bool> {
    allowable_with_n(spec, lam, &spec.n_of())
}

fn allowable_with_n(spec: &GroupSpec, lam: &Weight, n: &BigUint) -> Result<bool> {
    for part in spec.split(lam)? {
        if part.iter().any(|&c| c < 0) {
            return Err(Error::NotDominant(part.to_vec()));
        }
        let g = part.iter().fold(0u64, |g, &c| g.gcd(&(c as u64 + 1)));
        // Primes ≡ 1 (mod N) exceed N, so only a gcd above N can contain one.
        if BigUint::from(g) <= *n {
            continue;
        }
        let n = u64::try_from(n).expect("N is below the gcd");
        if prime_factors(g).iter().any(|&p| p % n == 1) {
            return Ok(false);
        }
    }
    Ok(true)
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub(crate) fn primes_up_to(n: usize) -> Vec<usize> {
    if n < 2 {
        return Vec::new();
    }
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= n {
        if sieve[i] {
            for j in (i * i..=n).step_by(i) {
                sieve[j] = false;
            }
        }
        i += 1;
    }
    (0..=n).filter(|&i| sieve[i]).collect()
}

/// Check `ζ_G = ζ*_G · Π_{p ≡ 1 (N_G)} Π_i (1 − p^{−|R_i⁺| s})^{−1}` on all
/// coefficients up to `bound`.
pub fn euler_identity_check(spec: &GroupSpec, bound: u64) -> bool {
    let zeta = zeta_coefficients(spec, bound);
    let star = zeta_star_coefficients(spec, bound);
    euler_product_matches(spec, &zeta, &star)
}

/// The same identity for externally supplied tables.
pub fn euler_product_matches(spec: &GroupSpec, zeta: &DegreeTable, star: &DegreeTable) -> bool {
    let bound = zeta.bound.min(star.bound) as usize;
    let mut arr = vec![0u64; bound + 1];
    for (d, c) in &star.counts {
        if let Ok(d) = usize::try_from(d) {
            if d <= bound {
                arr[d] = *c;
            }
        }
    }
    let n = spec.n_of();
    for p in primes_up_to(bound) {
        if BigUint::from(p) % &n != BigUint::from(1u32) {
            continue;
        }
        for r in spec.systems() {
            let Some(step) = u32::try_from(r.num_positive())
                .ok()
                .and_then(|m| p.checked_pow(m))
                .filter(|&s| s <= bound)
            else {
                continue;
            };
            // In-place multiplication by 1/(1 − x^step).
            for d in 1..=bound / step {
                arr[d * step] += arr[d];
            }
        }
    }
    (1..=bound).all(|d| arr[d] == zeta.count(d as u64))
}

pub(crate) fn is_prime_power(d: u64) -> bool {
    d > 1 && prime_factors(d).len() == 1
}

/// Entries of the `ζ_G` table whose dimension is a prime power `> 1`.
pub fn prime_power_scan(spec: &GroupSpec, bound: u64) -> Vec<(BigUint, u64)> {
    zeta_coefficients(spec, bound)
        .counts
        .into_iter()
        .filter(|(d, _)| u64::try_from(d).is_ok_and(is_prime_power))
        .collect()
}
