//! Irreducible root systems in Bourbaki coordinates.
//!
//! Roots are stored twice: as exact rational vectors in the ε-coordinate
//! ambient space of the Bourbaki tables, and as integer coefficient vectors in
//! the basis of simple roots. Weights always live in the basis of fundamental
//! weights, so that pairing a weight with a coroot is an integer dot product.

mod lemmas;
mod subsystem;
mod weyl;

pub use lemmas::{quadratic_nullspace_dim, spanning_check};
pub use subsystem::{
    classify_subsystem, orthogonal_subsystem, orthogonal_to_vector, span_closure, Subsystem,
};
pub use weyl::{dominant_conjugate, dominant_representative, weyl_orbit_equal, DominantRep};

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, q, q_frac, Q};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }
}

/// Type label of an irreducible root system, e.g. `E8` or `B7`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FamilyRank {
    family: Family,
    rank: usize,
}

impl FamilyRank {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::C => rank >= 3,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(FamilyRank { family, rank })
        } else {
            Err(Error::InvalidType {
                family: family.letter(),
                rank,
            })
        }
    }

    pub fn family(self) -> Family {
        self.family
    }

    pub fn rank(self) -> usize {
        self.rank
    }

    /// Number of positive roots, by the closed form for each family.
    pub fn positive_root_count(self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }

    /// Canonical label(s) for a possibly degenerate type such as `C2` or
    /// `D3`. Rank zero gives the empty list.
    pub fn canonical(family: Family, rank: usize) -> Vec<FamilyRank> {
        let a = |n| FamilyRank {
            family: Family::A,
            rank: n,
        };
        match (family, rank) {
            (_, 0) => vec![],
            (Family::B | Family::C, 1) => vec![a(1)],
            (Family::C, 2) => vec![FamilyRank {
                family: Family::B,
                rank: 2,
            }],
            (Family::D, 1) => vec![],
            (Family::D, 2) => vec![a(1), a(1)],
            (Family::D, 3) => vec![a(3)],
            _ => FamilyRank::new(family, rank).into_iter().collect(),
        }
    }

    /// Every valid type label of rank at most `max_rank`.
    pub fn all_up_to_rank(max_rank: usize) -> Vec<FamilyRank> {
        let mut out = Vec::new();
        for family in [
            Family::A,
            Family::B,
            Family::C,
            Family::D,
            Family::E,
            Family::F,
            Family::G,
        ] {
            for rank in 1..=max_rank {
                if let Ok(id) = FamilyRank::new(family, rank) {
                    out.push(id);
                }
            }
        }
        out
    }
}

impl fmt::Display for FamilyRank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for FamilyRank {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = chars
            .next()
            .and_then(Family::from_letter)
            .ok_or_else(|| Error::BadTypeLabel(s.to_string()))?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::BadTypeLabel(s.to_string()))?;
        FamilyRank::new(family, rank)
    }
}

/// Integer coordinates in the basis of fundamental weights.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    /// `ρ`, which has every fundamental coordinate equal to one.
    pub fn rho(rank: usize) -> Self {
        Weight(vec![1; rank])
    }

    /// The fundamental weight `ϖ_i`, with `i` counted from 1 as in the tables.
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i - 1] = 1;
        Weight(v)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|a| a * k).collect())
    }

    /// `self + ρ`.
    pub fn shifted(&self) -> Weight {
        Weight(self.0.iter().map(|a| a + 1).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl FromStr for Weight {
    type Err = std::num::ParseIntError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() {
            return Ok(Weight(Vec::new()));
        }
        s.split(',')
            .map(|t| t.trim().parse())
            .collect::<std::result::Result<_, _>>()
            .map(Weight)
    }
}

/// An irreducible root system with its positive roots, coroots and weights.
///
/// Positive roots are sorted by height and then lexicographically by their
/// simple-root coefficients, so the first `rank` of them are the simple roots.
#[derive(Debug)]
pub struct RootSystem {
    id: FamilyRank,
    ambient_dim: usize,
    simple_roots: Vec<Vec<Q>>,
    positive_roots: Vec<Vec<Q>>,
    root_coeffs: Vec<Vec<i64>>,
    coroot_coeffs: Vec<Vec<i64>>,
    /// `cartan[i][j] = α_i∨(α_j)`.
    cartan: Vec<Vec<i64>>,
    /// Inverse Cartan matrix; column `i` holds `ϖ_i` in simple-root coordinates.
    cartan_inv: Vec<Vec<Q>>,
    fundamental_weights: Vec<Vec<Q>>,
    gram: Vec<Vec<Q>>,
    index: HashMap<Vec<i64>, usize>,
    sum_line: Vec<Vec<Option<usize>>>,
    diff_line: Vec<Vec<Option<usize>>>,
}

impl RootSystem {
    pub fn build(id: FamilyRank) -> Self {
        let (ambient_dim, simple_roots) = bourbaki_simple_roots(id);
        let n = id.rank;
        let gram: Vec<Vec<Q>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| linalg::dot(&simple_roots[i], &simple_roots[j]))
                    .collect()
            })
            .collect();
        let cartan: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let v = q(2) * &gram[i][j] / &gram[i][i];
                        debug_assert!(v.is_integer());
                        i64::try_from(v.to_integer()).unwrap()
                    })
                    .collect()
            })
            .collect();

        let mut root_coeffs = positive_roots_from_cartan(&cartan);
        root_coeffs.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });

        let positive_roots: Vec<Vec<Q>> = root_coeffs
            .iter()
            .map(|c| combine(c, &simple_roots, ambient_dim))
            .collect();

        let coroot_coeffs = root_coeffs
            .iter()
            .map(|c| {
                let norm = norm_in_basis(c, &gram);
                c.iter()
                    .enumerate()
                    .map(|(j, &cj)| {
                        let v = q(cj) * &gram[j][j] / &norm;
                        debug_assert!(v.is_integer());
                        i64::try_from(v.to_integer()).unwrap()
                    })
                    .collect()
            })
            .collect();

        let cartan_q: Vec<Vec<Q>> = cartan
            .iter()
            .map(|r| r.iter().map(|&x| q(x)).collect())
            .collect();
        let cartan_inv = linalg::inverse(&cartan_q).expect("Cartan matrix is invertible");
        let fundamental_weights = (0..n)
            .map(|i| {
                let coeffs: Vec<Q> = (0..n).map(|k| cartan_inv[k][i].clone()).collect();
                let mut v = vec![Q::zero(); ambient_dim];
                for (k, c) in coeffs.iter().enumerate() {
                    for (x, s) in v.iter_mut().zip(&simple_roots[k]) {
                        *x += c * s;
                    }
                }
                v
            })
            .collect();

        let index: HashMap<Vec<i64>, usize> = root_coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| (c.clone(), i))
            .collect();
        let m = root_coeffs.len();
        let mut sum_line = vec![vec![None; m]; m];
        let mut diff_line = vec![vec![None; m]; m];
        for i in 0..m {
            for j in 0..m {
                let s: Vec<i64> = root_coeffs[i]
                    .iter()
                    .zip(&root_coeffs[j])
                    .map(|(a, b)| a + b)
                    .collect();
                sum_line[i][j] = index.get(&s).copied();
                let d: Vec<i64> = root_coeffs[i]
                    .iter()
                    .zip(&root_coeffs[j])
                    .map(|(a, b)| a - b)
                    .collect();
                let neg: Vec<i64> = d.iter().map(|x| -x).collect();
                diff_line[i][j] = index.get(&d).or_else(|| index.get(&neg)).copied();
            }
        }

        RootSystem {
            id,
            ambient_dim,
            simple_roots,
            positive_roots,
            root_coeffs,
            coroot_coeffs,
            cartan,
            cartan_inv,
            fundamental_weights,
            gram,
            index,
            sum_line,
            diff_line,
        }
    }

    pub fn shared(id: FamilyRank) -> Arc<Self> {
        Arc::new(Self::build(id))
    }

    pub fn id(&self) -> FamilyRank {
        self.id
    }

    pub fn rank(&self) -> usize {
        self.id.rank
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn num_positive(&self) -> usize {
        self.root_coeffs.len()
    }

    pub fn num_roots(&self) -> usize {
        2 * self.root_coeffs.len()
    }

    pub fn simple_roots(&self) -> &[Vec<Q>] {
        &self.simple_roots
    }

    /// Positive roots in ε-coordinates.
    pub fn positive_roots(&self) -> &[Vec<Q>] {
        &self.positive_roots
    }

    /// Positive roots in the basis of simple roots.
    pub fn root_coeffs(&self) -> &[Vec<i64>] {
        &self.root_coeffs
    }

    /// Coroots `α∨ = Σ c_j α_j∨` of the positive roots, as coefficient vectors `c`.
    pub fn coroot_coeffs(&self) -> &[Vec<i64>] {
        &self.coroot_coeffs
    }

    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn fundamental_weights(&self) -> &[Vec<Q>] {
        &self.fundamental_weights
    }

    pub fn rho(&self) -> Weight {
        Weight::rho(self.rank())
    }

    /// Index of the positive root with the given simple-root coefficients.
    pub fn root_index(&self, coeffs: &[i64]) -> Option<usize> {
        self.index.get(coeffs).copied()
    }

    /// The highest root, which is the last positive root.
    pub fn highest_root(&self) -> usize {
        self.num_positive() - 1
    }

    /// `(α_i, α_j)` for simple roots.
    pub fn gram(&self) -> &[Vec<Q>] {
        &self.gram
    }

    /// Line of `α_i + α_j` when that is a root.
    pub(crate) fn sum_line(&self, i: usize, j: usize) -> Option<usize> {
        self.sum_line[i][j]
    }

    /// Line of `±(α_i − α_j)` when that is a root.
    pub(crate) fn diff_line(&self, i: usize, j: usize) -> Option<usize> {
        self.diff_line[i][j]
    }

    pub fn check_weight(&self, lam: &Weight) -> Result<()> {
        if lam.len() != self.rank() {
            return Err(Error::WeightLength {
                expected: self.rank(),
                got: lam.len(),
            });
        }
        Ok(())
    }

    /// `α∨(λ)` for the positive root with index `alpha`.
    pub fn pair(&self, alpha: usize, lam: &Weight) -> Result<i64> {
        let c = self.coroot_coeffs.get(alpha).ok_or(Error::RootIndex {
            index: alpha,
            count: self.num_positive(),
        })?;
        self.check_weight(lam)?;
        Ok(pair_coeffs(c, lam.coords()))
    }

    /// `α∨(λ)` for every positive root, in index order.
    pub fn pairings(&self, lam: &Weight) -> Vec<i64> {
        self.coroot_coeffs
            .iter()
            .map(|c| pair_coeffs(c, lam.coords()))
            .collect()
    }

    /// `(α, α)` for the positive root with index `alpha`.
    pub fn root_norm(&self, alpha: usize) -> Q {
        norm_in_basis(&self.root_coeffs[alpha], &self.gram)
    }

    /// Inner product of two positive roots.
    pub fn root_inner(&self, a: usize, b: usize) -> Q {
        let (ca, cb) = (&self.root_coeffs[a], &self.root_coeffs[b]);
        let mut s = Q::zero();
        for i in 0..ca.len() {
            if ca[i] == 0 {
                continue;
            }
            for j in 0..cb.len() {
                if cb[j] != 0 {
                    s += q(ca[i] * cb[j]) * &self.gram[i][j];
                }
            }
        }
        s
    }

    /// `α∨(β)` for positive roots `α`, `β`.
    pub fn coroot_on_root(&self, alpha: usize, beta: usize) -> i64 {
        let v = q(2) * self.root_inner(alpha, beta) / self.root_norm(alpha);
        i64::try_from(v.to_integer()).unwrap()
    }

    /// Simple-root coordinates of a weight, i.e. `C⁻¹ λ`.
    pub fn root_coordinates(&self, lam: &Weight) -> Vec<Q> {
        let v: Vec<Q> = lam.coords().iter().map(|&x| q(x)).collect();
        linalg::mat_vec(&self.cartan_inv, &v)
    }

    /// Is `v` an integral combination of simple roots?
    pub fn in_root_lattice(&self, v: &Weight) -> bool {
        self.root_coordinates(v).iter().all(|x| x.is_integer())
    }

    /// Class of `λ` in `P/Q`: fractional parts of its simple-root coordinates, in `[0, 1)`.
    pub fn coset(&self, lam: &Weight) -> Vec<Q> {
        self.root_coordinates(lam).iter().map(frac).collect()
    }

    /// ε-coordinates of a weight.
    pub fn weight_to_ambient(&self, lam: &Weight) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.ambient_dim];
        for (c, w) in lam.coords().iter().zip(&self.fundamental_weights) {
            if *c != 0 {
                for (x, y) in v.iter_mut().zip(w) {
                    *x += q(*c) * y;
                }
            }
        }
        v
    }

    /// Fundamental coordinates `α_j∨(v)` of an ambient vector.
    pub fn ambient_to_fundamental(&self, v: &[Q]) -> Vec<Q> {
        self.simple_roots
            .iter()
            .enumerate()
            .map(|(j, a)| q(2) * linalg::dot(a, v) / &self.gram[j][j])
            .collect()
    }

    /// Coroot pairing `α∨(v)` of a positive root with an ambient vector.
    pub fn pair_ambient(&self, alpha: usize, v: &[Q]) -> Q {
        q(2) * linalg::dot(&self.positive_roots[alpha], v) / self.root_norm(alpha)
    }
}

pub(crate) fn pair_coeffs(c: &[i64], lam: &[i64]) -> i64 {
    c.iter().zip(lam).map(|(a, b)| a * b).sum()
}

fn frac(x: &Q) -> Q {
    let fl = x.floor();
    x - fl
}

fn norm_in_basis(c: &[i64], gram: &[Vec<Q>]) -> Q {
    let mut s = Q::zero();
    for i in 0..c.len() {
        for j in 0..c.len() {
            if c[i] != 0 && c[j] != 0 {
                s += q(c[i] * c[j]) * &gram[i][j];
            }
        }
    }
    s
}

fn combine(c: &[i64], basis: &[Vec<Q>], dim: usize) -> Vec<Q> {
    let mut v = vec![Q::zero(); dim];
    for (k, &ck) in c.iter().enumerate() {
        if ck != 0 {
            for (x, b) in v.iter_mut().zip(&basis[k]) {
                *x += q(ck) * b;
            }
        }
    }
    v
}

/// Positive roots as the Weyl-group orbit of the simple roots, restricted to
/// vectors with nonnegative coefficients.
fn positive_roots_from_cartan(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
    let mut queue: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut v = vec![0; n];
            v[i] = 1;
            v
        })
        .collect();
    while let Some(v) = queue.pop() {
        if seen.contains_key(&v) {
            continue;
        }
        for i in 0..n {
            let k: i64 = (0..n).map(|j| cartan[i][j] * v[j]).sum();
            if k != 0 {
                let mut w = v.clone();
                w[i] -= k;
                if !seen.contains_key(&w) {
                    queue.push(w);
                }
            }
        }
        seen.insert(v, ());
    }
    seen.into_keys()
        .filter(|v| v.iter().all(|&x| x >= 0))
        .collect()
}

fn unit(dim: usize, i: usize) -> Vec<Q> {
    let mut v = vec![Q::zero(); dim];
    v[i] = Q::one();
    v
}

fn sub(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn add(a: &[Q], b: &[Q]) -> Vec<Q> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn scaled(a: &[Q], k: &Q) -> Vec<Q> {
    a.iter().map(|x| x * k).collect()
}

/// Simple roots from the Bourbaki planches, with the ambient dimension.
fn bourbaki_simple_roots(id: FamilyRank) -> (usize, Vec<Vec<Q>>) {
    let n = id.rank;
    let e = |dim: usize, i: usize| unit(dim, i - 1);
    match id.family {
        Family::A => {
            let d = n + 1;
            (d, (1..=n).map(|i| sub(&e(d, i), &e(d, i + 1))).collect())
        }
        Family::B | Family::C | Family::D => {
            let d = n;
            let mut roots: Vec<Vec<Q>> = (1..n).map(|i| sub(&e(d, i), &e(d, i + 1))).collect();
            roots.push(match id.family {
                Family::B => e(d, n),
                Family::C => scaled(&e(d, n), &q(2)),
                _ => add(&e(d, n - 1), &e(d, n)),
            });
            (d, roots)
        }
        Family::E => {
            let d = 8;
            let half = q_frac(1, 2);
            let mut a1 = vec![-half.clone(); d];
            a1[0] = half.clone();
            a1[7] = half;
            let mut roots = vec![a1, add(&e(d, 1), &e(d, 2))];
            for i in 1..=6 {
                roots.push(sub(&e(d, i + 1), &e(d, i)));
            }
            roots.truncate(n);
            (d, roots)
        }
        Family::F => {
            let d = 4;
            let half = q_frac(1, 2);
            let a4 = vec![half.clone(), -half.clone(), -half.clone(), -half];
            (
                d,
                vec![
                    sub(&e(d, 2), &e(d, 3)),
                    sub(&e(d, 3), &e(d, 4)),
                    e(d, 4),
                    a4,
                ],
            )
        }
        Family::G => {
            let d = 3;
            let a1 = sub(&e(d, 1), &e(d, 2));
            let a2 = vec![q(-2), q(1), q(1)];
            (d, vec![a1, a2])
        }
    }
}
