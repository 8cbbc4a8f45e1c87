use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

use super::GroupSpec;
use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, Weight};

/// Weyl dimension formula for one irreducible factor, with the coroot data
/// and the denominator `Π α∨(ρ)` precomputed.
#[derive(Debug, Clone)]
pub struct DimEvaluator {
    coroots: Vec<Vec<i64>>,
    denominator: BigUint,
}

impl DimEvaluator {
    pub fn new(r: &RootSystem) -> Self {
        let coroots = r.coroot_coeffs().to_vec();
        let denominator = product(coroots.iter().map(|c| c.iter().sum::<i64>() as u64));
        DimEvaluator {
            coroots,
            denominator,
        }
    }

    pub fn rank(&self) -> usize {
        self.coroots.first().map_or(0, Vec::len)
    }

    /// `dim V_λ` for dominant `λ` given as raw coordinates. No checks.
    pub fn eval(&self, lam: &[i64]) -> BigUint {
        let num = product(
            self.coroots
                .iter()
                .map(|c| c.iter().zip(lam).map(|(a, l)| a * (l + 1)).sum::<i64>() as u64),
        );
        let (d, rem) = num.div_rem(&self.denominator);
        debug_assert!(rem == BigUint::ZERO);
        d
    }
}

/// Product of small factors, accumulated in `u64` until it would overflow.
fn product(factors: impl Iterator<Item = u64>) -> BigUint {
    let mut big = BigUint::one();
    let mut acc: u64 = 1;
    for f in factors {
        match acc.checked_mul(f) {
            Some(v) => acc = v,
            None => {
                big *= acc;
                acc = f;
            }
        }
    }
    big * acc
}

/// `dim V_λ = Π_{α>0} α∨(λ+ρ) / α∨(ρ)`.
pub fn dim_irrep(r: &RootSystem, lam: &Weight) -> Result<BigUint> {
    r.check_weight(lam)?;
    if !lam.is_dominant() {
        return Err(Error::NotDominant(lam.0.clone()));
    }
    Ok(DimEvaluator::new(r).eval(lam.coords()))
}

/// Dimension of `V_λ1 ⊗ … ⊗ V_λm` for a concatenated weight.
pub fn dim_irrep_product(spec: &GroupSpec, lam: &Weight) -> Result<BigUint> {
    let parts = spec.split(lam)?;
    let mut d = BigUint::one();
    for (p, r) in parts.iter().zip(spec.systems()) {
        d *= dim_irrep(r, &Weight(p.to_vec()))?;
    }
    Ok(d)
}
