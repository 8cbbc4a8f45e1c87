use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::Q;
use crate::rootsys::{FamilyRank, RootSystem, Weight};

/// The weight lattice `Λ_G` sitting between the root lattice and the full
/// weight lattice of the simply connected cover.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Lattice {
    SimplyConnected,
    Adjoint,
    /// Explicit subgroup of `P/Q`: each element is the vector of fractional
    /// parts of simple-root coordinates, concatenated over the factors.
    Cosets(BTreeSet<Vec<Q>>),
}

/// A compact semisimple group: a product of irreducible factors together with
/// its weight lattice.
#[derive(Debug, Clone)]
pub struct GroupSpec {
    factors: Vec<FamilyRank>,
    systems: Vec<Arc<RootSystem>>,
    lattice: Lattice,
}

impl GroupSpec {
    pub fn new(factors: Vec<FamilyRank>, lattice: Lattice) -> Result<Self> {
        let systems: Vec<Arc<RootSystem>> =
            factors.iter().map(|&id| RootSystem::shared(id)).collect();
        let spec = GroupSpec {
            factors,
            systems,
            lattice,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn simply_connected(factors: Vec<FamilyRank>) -> Self {
        Self::new(factors, Lattice::SimplyConnected).expect("simply connected spec is valid")
    }

    pub fn adjoint(factors: Vec<FamilyRank>) -> Self {
        Self::new(factors, Lattice::Adjoint).expect("adjoint spec is valid")
    }

    pub fn factors(&self) -> &[FamilyRank] {
        &self.factors
    }

    pub fn systems(&self) -> &[Arc<RootSystem>] {
        &self.systems
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn total_rank(&self) -> usize {
        self.factors.iter().map(|f| f.rank()).sum()
    }

    /// Total number of roots of the product.
    pub fn num_roots(&self) -> usize {
        self.systems.iter().map(|r| r.num_roots()).sum()
    }

    /// `N_G = |R|!`.
    pub fn n_of(&self) -> BigUint {
        (1..=self.num_roots() as u64).fold(BigUint::one(), |acc, k| acc * k)
    }

    /// Split a concatenated weight into per-factor components.
    pub fn split<'a>(&self, lam: &'a Weight) -> Result<Vec<&'a [i64]>> {
        if lam.len() != self.total_rank() {
            return Err(Error::WeightLength {
                expected: self.total_rank(),
                got: lam.len(),
            });
        }
        let mut out = Vec::with_capacity(self.factors.len());
        let mut start = 0;
        for f in &self.factors {
            out.push(&lam.0[start..start + f.rank()]);
            start += f.rank();
        }
        Ok(out)
    }

    /// Concatenated `P/Q` class of a weight.
    pub fn coset(&self, lam: &Weight) -> Result<Vec<Q>> {
        let parts = self.split(lam)?;
        Ok(parts
            .iter()
            .zip(&self.systems)
            .flat_map(|(p, r)| r.coset(&Weight(p.to_vec())))
            .collect())
    }

    /// Is `λ ∈ Λ_G`?
    pub fn in_lattice(&self, lam: &Weight) -> Result<bool> {
        Ok(match &self.lattice {
            Lattice::SimplyConnected => {
                self.split(lam)?;
                true
            }
            Lattice::Adjoint => self.coset(lam)?.iter().all(Zero::is_zero),
            Lattice::Cosets(set) => set.contains(&self.coset(lam)?),
        })
    }

    fn validate(&self) -> Result<()> {
        let Lattice::Cosets(set) = &self.lattice else {
            return Ok(());
        };
        let bad = |reason: &str| Error::GroupSpec {
            spec: self.to_string(),
            reason: reason.to_string(),
        };
        if self.factors.is_empty() {
            return Err(bad("no factors"));
        }
        let n = self.total_rank();
        let zero = vec![Q::zero(); n];
        if !set.contains(&zero) {
            return Err(bad("identity coset missing"));
        }
        for v in set {
            if v.len() != n {
                return Err(bad("coset vector has the wrong length"));
            }
            if v.iter().any(|x| *x < Q::zero() || *x >= Q::one()) {
                return Err(bad("coset entries must lie in [0, 1)"));
            }
            // λ = C x must be integral for x to be the class of a weight.
            let mut start = 0;
            for r in &self.systems {
                let k = r.rank();
                let c = r.cartan_matrix();
                for i in 0..k {
                    let s: Q = (0..k)
                        .map(|j| Q::from_integer(BigInt::from(c[i][j])) * &v[start + j])
                        .sum();
                    if !s.is_integer() {
                        return Err(bad("coset vector is not a class of P/Q"));
                    }
                }
                start += k;
            }
        }
        for a in set {
            for b in set {
                let s: Vec<Q> = a
                    .iter()
                    .zip(b)
                    .map(|(x, y)| {
                        let t = x + y;
                        if t >= Q::one() {
                            t - Q::one()
                        } else {
                            t
                        }
                    })
                    .collect();
                if !set.contains(&s) {
                    return Err(bad("cosets are not closed under addition"));
                }
            }
        }
        Ok(())
    }
}

impl PartialEq for GroupSpec {
    fn eq(&self, other: &Self) -> bool {
        self.factors == other.factors && self.lattice == other.lattice
    }
}

impl Eq for GroupSpec {}

fn fmt_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Canonical form: factors joined by `x`, then `:sc`, `:adjoint` or
/// `:cosets[v1;v2;...]` with the cosets sorted.
impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.factors.iter().map(|id| id.to_string()).collect();
        write!(f, "{}", names.join("x"))?;
        match &self.lattice {
            Lattice::SimplyConnected => write!(f, ":sc"),
            Lattice::Adjoint => write!(f, ":adjoint"),
            Lattice::Cosets(set) => {
                let parts: Vec<String> = set
                    .iter()
                    .map(|v| v.iter().map(fmt_q).collect::<Vec<_>>().join(","))
                    .collect();
                write!(f, ":cosets[{}]", parts.join(";"))
            }
        }
    }
}

fn parse_q(s: &str) -> Option<Q> {
    let s = s.trim();
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (
            n.trim().parse::<BigInt>().ok()?,
            d.trim().parse::<BigInt>().ok()?,
        ),
        None => (s.parse::<BigInt>().ok()?, BigInt::one()),
    };
    if d.is_zero() {
        return None;
    }
    let x = Q::new(n, d);
    Some(&x - x.floor())
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |reason: &str| Error::GroupSpec {
            spec: s.to_string(),
            reason: reason.to_string(),
        };
        let s = s.trim();
        let (body, suffix) = match s.split_once(':') {
            Some((b, x)) => (b, Some(x)),
            None => (s, None),
        };
        if body.is_empty() {
            return Err(bad("no factors"));
        }
        let factors = body
            .split(['x', 'X'])
            .map(str::parse)
            .collect::<Result<Vec<FamilyRank>>>()?;
        let lattice = match suffix {
            None | Some("sc") => Lattice::SimplyConnected,
            Some("adjoint") | Some("ad") => Lattice::Adjoint,
            Some(rest) => {
                let inner = rest
                    .strip_prefix("cosets[")
                    .and_then(|r| r.strip_suffix(']'))
                    .ok_or_else(|| bad("expected :sc, :adjoint or :cosets[...]"))?;
                let mut set = BTreeSet::new();
                for part in inner.split(';') {
                    let v = part
                        .split(',')
                        .map(parse_q)
                        .collect::<Option<Vec<Q>>>()
                        .ok_or_else(|| bad("unparseable coset entry"))?;
                    set.insert(v);
                }
                Lattice::Cosets(set)
            }
        };
        GroupSpec::new(factors, lattice)
    }
}
