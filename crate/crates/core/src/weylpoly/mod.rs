//! Weyl polynomials `P^R_{μ,ν}(x) = dim V_{xμ+ν}` and the standard pairs
//! `(μ, ν)` for each irreducible type.

mod poly;

pub use poly::Poly;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{q, Q};
use crate::rootsys::{Family, FamilyRank, RootSystem, Weight};

/// `Π_{α>0} (α∨(μ) x + α∨(ν+ρ)) / Π_{α>0} α∨(ρ)`, together with its inputs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylPolynomial {
    poly: Poly,
    id: FamilyRank,
    mu: Weight,
    nu: Weight,
}

impl WeylPolynomial {
    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn id(&self) -> FamilyRank {
        self.id
    }

    pub fn mu(&self) -> &Weight {
        &self.mu
    }

    pub fn nu(&self) -> &Weight {
        &self.nu
    }

    pub fn evaluate(&self, n: i64) -> Q {
        self.poly.eval(&q(n))
    }

    pub fn degree(&self) -> Result<usize> {
        self.poly.degree().ok_or(Error::ZeroPolynomial)
    }

    pub fn ord_at_zero(&self) -> Result<usize> {
        self.poly.ord_at_zero().ok_or(Error::ZeroPolynomial)
    }

    /// `nμ + ν` as a weight.
    pub fn weight_at(&self, n: i64) -> Weight {
        self.mu.scale(n).add(&self.nu)
    }
}

pub fn weyl_polynomial(r: &RootSystem, mu: &Weight, nu: &Weight) -> Result<WeylPolynomial> {
    r.check_weight(mu)?;
    r.check_weight(nu)?;
    let shifted = nu.shifted();
    let mut poly = Poly::one();
    let mut denom = BigInt::one();
    for c in r.coroot_coeffs() {
        let a: i64 = c.iter().zip(mu.coords()).map(|(x, y)| x * y).sum();
        let b: i64 = c.iter().zip(shifted.coords()).map(|(x, y)| x * y).sum();
        poly.mul_linear(&q(a), &q(b));
        denom *= c.iter().sum::<i64>();
    }
    Ok(WeylPolynomial {
        poly: poly.scale(&Q::new(BigInt::one(), denom)),
        id: r.id(),
        mu: mu.clone(),
        nu: nu.clone(),
    })
}

pub fn evaluate(p: &WeylPolynomial, n: i64) -> Q {
    p.evaluate(n)
}

pub fn degree(p: &WeylPolynomial) -> Result<usize> {
    p.degree()
}

pub fn ord_at_zero(p: &WeylPolynomial) -> Result<usize> {
    p.ord_at_zero()
}

/// `Some(c)` when `p2 = c · p1` exactly.
pub fn proportionality(p1: &Poly, p2: &Poly) -> Option<Q> {
    let l1 = p1.leading()?;
    let Some(l2) = p2.leading() else {
        return Some(Q::zero());
    };
    let c = l2 / l1;
    (p1.scale(&c) == *p2).then_some(c)
}

/// `α∨(μ) ≥ 0` for all `α > 0`, and `α∨(ν) ≥ 0` whenever `α∨(μ) = 0`.
pub fn check_conditions(r: &RootSystem, mu: &Weight, nu: &Weight) -> Result<bool> {
    r.check_weight(mu)?;
    r.check_weight(nu)?;
    let pm = r.pairings(mu);
    let pn = r.pairings(nu);
    Ok(pm
        .iter()
        .zip(&pn)
        .all(|(&m, &n)| m > 0 || (m == 0 && n >= 0)))
}

/// A pair `(μ, ν)` whose Weyl polynomial has `ord/deg = eff(R∨)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExplicitPair {
    pub id: FamilyRank,
    pub mu: Weight,
    pub nu: Weight,
}

/// Where `ν+ρ` lands: its Weyl orbit meets the fundamental weight
/// `ϖ_fundamental`, and `(ν+ρ)⊥ ∩ R` has type `perp`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitClaim {
    pub fundamental: usize,
    pub perp: Vec<FamilyRank>,
}

impl ExplicitPair {
    pub fn polynomial(&self) -> WeylPolynomial {
        let r = RootSystem::shared(self.id);
        weyl_polynomial(&r, &self.mu, &self.nu).expect("lengths match")
    }

    pub fn orbit_claim(&self) -> OrbitClaim {
        let n = self.id.rank();
        let (fundamental, perp) = match self.id.family() {
            Family::A | Family::B | Family::C | Family::D => {
                (1, FamilyRank::canonical(self.id.family(), n - 1))
            }
            Family::E => match n {
                6 => (1, vec!["D5".parse().unwrap()]),
                7 => (7, vec!["E6".parse().unwrap()]),
                _ => (8, vec!["E7".parse().unwrap()]),
            },
            Family::F => (4, vec!["B3".parse().unwrap()]),
            // ν+ρ = ϖ1 − ϖ2 is conjugate to the short fundamental weight.
            Family::G => (1, vec!["A1".parse().unwrap()]),
        };
        OrbitClaim { fundamental, perp }
    }
}

fn w(v: &[i64]) -> Weight {
    Weight(v.to_vec())
}

/// The standard pair for each type, in Bourbaki labels.
pub fn explicit_pair(id: FamilyRank) -> ExplicitPair {
    let n = id.rank();
    let (mu, nu) = match id.family() {
        Family::A | Family::B => {
            let mut m = vec![1; n];
            m[0] = 0;
            let m = Weight(m);
            (m.clone(), m.scale(-1))
        }
        Family::C => {
            let mut m = vec![0; n];
            m[..n - 2].fill(1);
            m[n - 2] = 2;
            let m = Weight(m);
            (m.clone(), m.scale(-1))
        }
        Family::D => {
            let mut m = vec![0; n];
            m[..n - 3].fill(1);
            m[n - 3] = 2;
            let m = Weight(m);
            (m.clone(), m.scale(-1))
        }
        Family::E => match n {
            6 => (w(&[0, 1, 1, 0, 1, 1]), w(&[0, -1, -2, 0, -2, -1])),
            7 => (w(&[1, 0, 1, 1, 0, 1, 0]), w(&[-1, 0, -1, -2, 0, -2, 0])),
            // Nodes 1, 3, 4, 6, 7, 8 of the chain read from the far end.
            _ => (
                w(&[1, 0, 0, 1, 0, 1, 1, 1]),
                w(&[-2, 0, 0, -2, 0, -2, -1, -1]),
            ),
        },
        Family::F => (w(&[1, 1, 0, 0]), w(&[-1, -2, 0, 0])),
        Family::G => (w(&[0, 1]), w(&[0, -2])),
    };
    ExplicitPair { id, mu, nu }
}

/// Exponent of the prime `p` in a nonzero integer.
pub fn p_adic_order(x: &BigInt, p: u64) -> usize {
    let p = BigInt::from(p);
    let mut x = x.clone();
    let mut k = 0;
    if x.is_zero() {
        return usize::MAX;
    }
    loop {
        let (d, r) = x.div_rem(&p);
        if !r.is_zero() {
            return k;
        }
        x = d;
        k += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repdegrees::dim_irrep;
    use crate::rootsys::{classify_subsystem, orthogonal_subsystem, weyl_orbit_equal};

    fn sys(s: &str) -> RootSystem {
        RootSystem::build(s.parse().unwrap())
    }

    fn pair(s: &str) -> ExplicitPair {
        explicit_pair(s.parse().unwrap())
    }

    fn int(x: &str) -> Q {
        Q::from_integer(x.parse().unwrap())
    }

    #[test]
    fn elementary_polynomials() {
        let a1 = sys("A1");
        let p = weyl_polynomial(&a1, &Weight(vec![0]), &Weight(vec![0])).unwrap();
        assert_eq!(p.poly(), &Poly::one());
        let p = weyl_polynomial(&a1, &Weight(vec![1]), &Weight(vec![-1])).unwrap();
        assert_eq!(p.poly().coeffs(), &[q(0), q(1)]);
        let g2 = sys("G2");
        let p = weyl_polynomial(&g2, &Weight::zero(2), &Weight::zero(2)).unwrap();
        assert_eq!((p.degree().unwrap(), p.ord_at_zero().unwrap()), (0, 0));
        assert!(weyl_polynomial(&g2, &Weight::zero(3), &Weight::zero(2)).is_err());
    }

    #[test]
    fn values_at_small_arguments() {
        assert_eq!(pair("G2").polynomial().evaluate(2), q(1));
        let f4 = pair("F4").polynomial();
        assert_eq!((f4.evaluate(2), f4.evaluate(3)), (q(52), q(340119)));
        let e6 = pair("E6").polynomial();
        assert_eq!(e6.evaluate(2), q(1728));
        assert_eq!(e6.evaluate(3), q(3171108447));
        assert_eq!(e6.evaluate(4), int("71292900343808"));
        let e7 = pair("E7").polynomial();
        assert_eq!(e7.evaluate(2), q(573440));
        assert_eq!(e7.evaluate(3), int("33940969546604175"));
        let e8 = pair("E8").polynomial();
        assert_eq!(e8.evaluate(2), q(4096000));
        assert_eq!(e8.evaluate(3), int("2665014302693985712862760000"));
        for s in ["A1", "A3", "B2", "B5", "C3", "C6", "D4", "D7"] {
            assert_eq!(pair(s).polynomial().evaluate(1), q(1), "{s}");
        }
    }

    #[test]
    fn order_and_degree() {
        let e8 = pair("E8").polynomial();
        assert_eq!((e8.ord_at_zero().unwrap(), e8.degree().unwrap()), (63, 117));
        let a2 = pair("A2").polynomial();
        assert_eq!((a2.ord_at_zero().unwrap(), a2.degree().unwrap()), (1, 2));
        assert!(matches!(
            WeylPolynomial {
                poly: Poly::zero(),
                ..a2.clone()
            }
            .degree(),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn degree_counts_roots_not_orthogonal_to_mu() {
        for id in FamilyRank::all_up_to_rank(8) {
            let r = RootSystem::build(id);
            let pr = explicit_pair(id);
            let moving = r.pairings(&pr.mu).iter().filter(|&&m| m != 0).count();
            assert_eq!(pr.polynomial().degree().unwrap(), moving, "{id}");
        }
    }

    #[test]
    fn pairs_satisfy_conditions_and_lattice() {
        for id in FamilyRank::all_up_to_rank(8) {
            let r = RootSystem::build(id);
            let pr = explicit_pair(id);
            assert!(check_conditions(&r, &pr.mu, &pr.nu).unwrap(), "{id}");
            assert!(r.in_root_lattice(&pr.mu.add(&pr.nu)), "{id}");
        }
        let r = sys("B3");
        assert!(!check_conditions(&r, &Weight::zero(3), &Weight::rho(3).scale(-2)).unwrap());
        assert!(check_conditions(&r, &Weight::rho(3), &Weight(vec![-9, 4, -1])).unwrap());
    }

    #[test]
    fn orbit_claims() {
        for id in FamilyRank::all_up_to_rank(8) {
            let r = RootSystem::build(id);
            let pr = explicit_pair(id);
            let claim = pr.orbit_claim();
            let v = pr.nu.shifted();
            assert!(
                weyl_orbit_equal(&r, &v, &Weight::fundamental(id.rank(), claim.fundamental)),
                "{id}"
            );
            let perp = classify_subsystem(&r, orthogonal_subsystem(&r, &v)).unwrap();
            assert_eq!(perp, claim.perp, "{id}");
        }
    }

    #[test]
    fn matches_dimension_formula() {
        for id in FamilyRank::all_up_to_rank(6) {
            let r = RootSystem::build(id);
            let p = explicit_pair(id).polynomial();
            for n in 2..=5 {
                let lam = p.weight_at(n);
                if lam.is_dominant() {
                    let d = dim_irrep(&r, &lam).unwrap();
                    assert_eq!(p.evaluate(n), Q::from_integer(d.into()), "{id} n={n}");
                }
            }
        }
    }

    #[test]
    fn proportionality_cases() {
        let p = pair("F4").polynomial().poly().clone();
        assert_eq!(proportionality(&p, &p), Some(q(1)));
        assert_eq!(proportionality(&p, &p.scale(&q(3))), Some(q(3)));
        let a2 = pair("A2").polynomial().poly().clone();
        let b2 = pair("B2").polynomial().poly().clone();
        assert_eq!(proportionality(&a2, &b2), None);
        assert_eq!(proportionality(&Poly::zero(), &a2), None);
    }

    #[test]
    fn p_adic_orders() {
        assert_eq!(p_adic_order(&BigInt::from(4096000), 2), 15);
        assert_eq!(p_adic_order(&BigInt::from(-75), 5), 2);
        assert_eq!(p_adic_order(&BigInt::from(7), 3), 0);
    }

    #[test]
    fn p_adic_order_at_large_primes_equals_ord_at_zero() {
        for id in FamilyRank::all_up_to_rank(8) {
            let p = explicit_pair(id).polynomial();
            for prime in [101u64, 103] {
                let v = p.evaluate(prime as i64);
                assert!(v.is_integer());
                assert_eq!(
                    p_adic_order(v.numer(), prime),
                    p.ord_at_zero().unwrap(),
                    "{id} p={prime}"
                );
            }
        }
    }
}
