//! Non-isomorphic quotients `SU(2)^n / Z₁`, `SU(2)^n / Z₂` with equal zeta
//! functions.
//!
//! A trace function `f` on `F₂³` determines, by Fourier inversion, a multiset
//! of functionals and so an injective `φ: F₂³ → F₂ⁿ` with
//! `n − 2·wt(φ(x)) = f(x)`. Its image is the character group of the quotient.
//! Twisting `f` by a non-linear bijection of `F₂³ ∖ {0}` keeps the multiset of
//! traces, hence the zeta function, but not the subgroup up to coordinate
//! permutation.

mod dirichlet;
pub mod field;

pub use dirichlet::dirichlet_coeffs;

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::repdegrees::{DegreeTable, Variant};
use field::{dot, gl3, sign};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TraceFunction {
    values: [i64; 8],
}

impl TraceFunction {
    pub fn values(&self) -> &[i64; 8] {
        &self.values
    }

    pub fn at(&self, x: u8) -> i64 {
        self.values[x as usize]
    }
}

pub fn build_trace(values: [i64; 8]) -> Result<TraceFunction> {
    let mut sorted = values;
    sorted.sort();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Trace("values are not distinct".into()));
    }
    if values.iter().any(|v| v % 8 != 0) {
        return Err(Error::Trace("values must be multiples of 8".into()));
    }
    let rest: i64 = values[1..].iter().map(|v| v.abs()).sum();
    if values[0] < rest {
        return Err(Error::Trace(format!(
            "f(0) = {} is below the sum of |f(x)| over x ≠ 0 ({rest})",
            values[0]
        )));
    }
    Ok(TraceFunction { values })
}

/// The construction with `f(0) = 128`, giving `n = 128`.
pub fn default_trace() -> TraceFunction {
    build_trace([128, 8, -8, 16, -16, 24, -24, 32]).expect("valid")
}

/// `m(y) = (1/8) Σ_x f(x) (−1)^{y·x}`.
pub fn fourier_multiplicities(f: &TraceFunction) -> [u64; 8] {
    let mut m = [0u64; 8];
    for (y, slot) in m.iter_mut().enumerate() {
        let s: i64 = (0..8u8).map(|x| f.at(x) * sign(x, y as u8)).sum();
        debug_assert!(s >= 0 && s % 8 == 0);
        *slot = (s / 8) as u64;
    }
    m
}

/// `f(x) = Σ_y m(y) (−1)^{y·x}`.
pub fn inverse_fourier(m: &[u64; 8]) -> [i64; 8] {
    let mut f = [0i64; 8];
    for (x, slot) in f.iter_mut().enumerate() {
        *slot = (0..8u8)
            .map(|y| m[y as usize] as i64 * sign(x as u8, y))
            .sum();
    }
    f
}

/// `φ: F₂³ → F₂ⁿ`, one coordinate per functional.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignHom {
    n: usize,
    functionals: Vec<u8>,
    multiplicities: [u64; 8],
}

impl SignHom {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn functionals(&self) -> &[u8] {
        &self.functionals
    }

    pub fn multiplicities(&self) -> &[u64; 8] {
        &self.multiplicities
    }

    pub fn from_multiplicities(multiplicities: [u64; 8]) -> Self {
        let functionals: Vec<u8> = (0..8u8)
            .flat_map(|y| std::iter::repeat_n(y, multiplicities[y as usize] as usize))
            .collect();
        SignHom {
            n: functionals.len(),
            functionals,
            multiplicities,
        }
    }

    /// `wt(φ(x))`.
    pub fn weight(&self, x: u8) -> usize {
        (0..8u8)
            .filter(|&y| dot(x, y))
            .map(|y| self.multiplicities[y as usize] as usize)
            .sum()
    }

    /// `φ(x)` as bits, coordinate `j` in bit `j`.
    pub fn image(&self, x: u8) -> Vec<bool> {
        self.functionals.iter().map(|&y| dot(x, y)).collect()
    }

    /// The nonzero functionals span `(F₂³)*`.
    pub fn is_injective(&self) -> bool {
        (1..8u8).all(|x| self.weight(x) > 0)
    }

    /// `su2^<n>/Z[<hex φ(e1)>,<hex φ(e2)>,<hex φ(e3)>]`.
    pub fn label(&self) -> String {
        let hex = |x: u8| {
            let bits = self.image(x);
            let mut v = BigUint::zero();
            for (j, &b) in bits.iter().enumerate() {
                if b {
                    v.set_bit(j as u64, true);
                }
            }
            format!("{v:x}")
        };
        format!("su2^{}/Z[{},{},{}]", self.n, hex(1), hex(2), hex(4))
    }
}

pub fn build_sign_hom(f: &TraceFunction) -> SignHom {
    SignHom::from_multiplicities(fourier_multiplicities(f))
}

/// Is `π` (a bijection of `F₂³` fixing 0) additive?
pub fn is_additive(pi: &[u8; 8]) -> bool {
    (0..8u8).all(|a| (0..8u8).all(|b| pi[(a ^ b) as usize] == pi[a as usize] ^ pi[b as usize]))
}

fn linear_realization(pi: &[u8; 8]) -> bool {
    gl3()
        .into_iter()
        .any(|a| (0..8u8).all(|x| a.apply(x) == pi[x as usize]))
}

/// `f ∘ π` for a non-linear bijection `π` of `F₂³` fixing 0.
pub fn twist(f: &TraceFunction, pi: &[u8; 8]) -> Result<TraceFunction> {
    if pi[0] != 0 {
        return Err(Error::BadPermutation("must fix 0".into()));
    }
    let mut sorted = *pi;
    sorted.sort();
    if sorted != [0, 1, 2, 3, 4, 5, 6, 7] {
        return Err(Error::BadPermutation(format!("{pi:?} is not a bijection")));
    }
    if linear_realization(pi) {
        return Err(Error::LinearTwist);
    }
    let mut values = [0; 8];
    for x in 0..8 {
        values[x] = f.values[pi[x] as usize];
    }
    build_trace(values)
}

/// Swap `(1,0,0)` and `(1,1,0)`.
pub fn default_twist() -> [u8; 8] {
    [0, 3, 2, 1, 4, 5, 6, 7]
}

/// Zeta coefficients of `SU(2)^n / Z` where `Z^⊥` is the given list of
/// characters, each described by its weight (number of odd coordinates).
pub fn characters_zeta(n: usize, weights: &[usize], bound: u64) -> Result<BTreeMap<BigUint, u64>> {
    let len = bound as usize;
    let mut total = vec![BigUint::zero(); len];
    for &w in weights {
        for (t, c) in total.iter_mut().zip(dirichlet_coeffs(w, n - w, len)) {
            *t += c;
        }
    }
    let mut out = BTreeMap::new();
    for (i, c) in total.into_iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let c = u64::try_from(&c)
            .map_err(|_| Error::Table(format!("count at d = {} exceeds 64 bits", i + 1)))?;
        out.insert(BigUint::from(i + 1), c);
    }
    Ok(out)
}

/// `ζ` of the quotient whose character group is `image(φ)`.
pub fn quotient_zeta(hom: &SignHom, bound: u64) -> Result<DegreeTable> {
    let weights: Vec<usize> = (0..8u8).map(|x| hom.weight(x)).collect();
    let mut t = DegreeTable::new(hom.label(), Variant::Zeta, bound);
    t.counts = characters_zeta(hom.n(), &weights, bound)?;
    Ok(t)
}

/// Does some `A ∈ GL₃(F₂)` satisfy `m₁(A y) = m₂(y)` for all `y`?
pub fn perm_equivalent(h1: &SignHom, h2: &SignHom) -> Result<bool> {
    if h1.n != h2.n {
        return Err(Error::LengthMismatch(h1.n, h2.n));
    }
    Ok(gl3().into_iter().any(|a| {
        (0..8u8).all(|y| h1.multiplicities[a.apply(y) as usize] == h2.multiplicities[y as usize])
    }))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GassmannReport {
    pub n: usize,
    pub zeta_equal: bool,
    pub perm_equivalent: bool,
    pub tables: (DegreeTable, DegreeTable),
}

impl GassmannReport {
    pub fn success(&self) -> bool {
        self.zeta_equal && !self.perm_equivalent
    }
}

pub fn verify_gassmann(f1_values: [i64; 8], pi: &[u8; 8], bound: u64) -> Result<GassmannReport> {
    let f1 = build_trace(f1_values)?;
    let f2 = twist(&f1, pi)?;
    let (h1, h2) = (build_sign_hom(&f1), build_sign_hom(&f2));
    let t1 = quotient_zeta(&h1, bound)?;
    let t2 = quotient_zeta(&h2, bound)?;
    Ok(GassmannReport {
        n: h1.n(),
        zeta_equal: t1.same_coefficients(&t2),
        perm_equivalent: perm_equivalent(&h1, &h2)?,
        tables: (t1, t2),
    })
}
