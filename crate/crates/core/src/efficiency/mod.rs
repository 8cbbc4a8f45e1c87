//! Efficiency and level of irreducible root systems.
//!
//! `eff(R)` is the supremum of `|R′| / (|R| − |R″|)` over pairs of disjoint
//! closed subsystems with `R′` nonempty and proper, and `lev(R)` is the least
//! `|R′⁺|` attaining it. Closed subsystems are taken in the saturated sense,
//! `S = R ∩ Span S`.

use std::cmp::Ordering;
use std::collections::HashSet;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, q, q_frac, Q};
use crate::rootsys::{span_closure, Family, FamilyRank, RootSystem, Subsystem};
use crate::weylpoly::{explicit_pair, p_adic_order};

/// Largest number of positive roots for which exhaustive search is allowed.
pub const BRUTE_FORCE_LIMIT: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EffResult {
    pub eff: Q,
    pub lev: usize,
    /// `(R′, R″)` attaining `eff` with `|R′⁺| = lev`.
    pub witness: Option<(Subsystem, Subsystem)>,
}

pub fn eff_formula(id: FamilyRank) -> EffResult {
    let n = id.rank() as i64;
    let (eff, lev) = match id.family() {
        Family::A => (q_frac(n, n + 2), n * (n - 1) / 2),
        Family::B | Family::C => (q_frac(n - 1, n + 1), (n - 1) * (n - 1)),
        Family::D => (q_frac(n - 1, n + 1), (n - 1) * (n - 2)),
        Family::E => match n {
            6 => (q_frac(10, 17), 20),
            7 => (q_frac(3, 5), 36),
            _ => (q_frac(63, 117), 63),
        },
        Family::F => (q_frac(3, 7), 9),
        Family::G => (q_frac(1, 5), 1),
    };
    EffResult {
        eff,
        lev: lev as usize,
        witness: None,
    }
}

fn guard(r: &RootSystem) -> Result<()> {
    if r.num_positive() > BRUTE_FORCE_LIMIT {
        return Err(Error::TooLarge {
            limit: BRUTE_FORCE_LIMIT,
            got: r.num_positive(),
        });
    }
    Ok(())
}

/// Every closed subsystem, including `∅` and `R`, sorted by size and mask.
pub fn enumerate_closed_subsystems(r: &RootSystem) -> Result<Vec<Subsystem>> {
    guard(r)?;
    let mut seen: HashSet<Subsystem> = HashSet::from([Subsystem::EMPTY]);
    let mut frontier = vec![Subsystem::EMPTY];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for s in frontier {
            for line in 0..r.num_positive() {
                if s.contains(line) {
                    continue;
                }
                let t = span_closure(r, Subsystem::from_mask(s.mask() | 1 << line));
                if seen.insert(t) {
                    next.push(t);
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<Subsystem> = seen.into_iter().collect();
    out.sort_by_key(|s| (s.num_positive(), s.mask()));
    Ok(out)
}

fn lex_key(s: Subsystem) -> Vec<usize> {
    s.lines().collect()
}

pub fn eff_bruteforce(r: &RootSystem) -> Result<EffResult> {
    let subs = enumerate_closed_subsystems(r)?;
    let full = Subsystem::full(r);
    let total = r.num_roots() as i64;
    let mut best: Option<(Q, usize, Subsystem, Subsystem)> = None;
    for &r1 in subs.iter().filter(|s| !s.is_empty() && **s != full) {
        // The largest subsystem disjoint from R′; on ties, the least by lines.
        let r2 = subs
            .iter()
            .copied()
            .filter(|s| s.is_disjoint(r1))
            .min_by(|a, b| {
                b.num_positive()
                    .cmp(&a.num_positive())
                    .then_with(|| lex_key(*a).cmp(&lex_key(*b)))
            })
            .expect("the empty subsystem is disjoint");
        let eff = q_frac(r1.num_roots() as i64, total - r2.num_roots() as i64);
        let better = match &best {
            None => true,
            Some((e, l, b1, _)) => match eff.cmp(e) {
                Ordering::Greater => true,
                Ordering::Less => false,
                Ordering::Equal => (r1.num_positive(), lex_key(r1)) < (*l, lex_key(*b1)),
            },
        };
        if better {
            best = Some((eff, r1.num_positive(), r1, r2));
        }
    }
    let (eff, lev, r1, r2) = best.ok_or_else(|| Error::NoProperSubsystem(r.id().to_string()))?;
    Ok(EffResult {
        eff,
        lev,
        witness: Some((r1, r2)),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Comparison {
    Greater,
    Less,
    Equivalent,
}

/// The order on types: `S ≥ T` iff `eff(S) > eff(T)`, or the efficiencies
/// agree and `lev(S) ≤ lev(T)`.
pub fn compare(s: FamilyRank, t: FamilyRank) -> Comparison {
    let (a, b) = (eff_formula(s), eff_formula(t));
    match a.eff.cmp(&b.eff).then_with(|| b.lev.cmp(&a.lev)) {
        Ordering::Greater => Comparison::Greater,
        Ordering::Less => Comparison::Less,
        Ordering::Equal => Comparison::Equivalent,
    }
}

/// `1 + max f(s₁)/f(s₂)` over roots outside `R′` with positive values, for
/// the linear form `f` vanishing on the hyperplane `Span R′`.
pub fn coxeter_bound(r: &RootSystem, r1: Subsystem) -> Result<Q> {
    let n = r.rank();
    let rows: Vec<Vec<Q>> = r1
        .lines()
        .map(|i| r.root_coeffs()[i].iter().map(|&x| q(x)).collect())
        .collect();
    let null = linalg::nullspace(&rows, n);
    if null.len() != 1 {
        return Err(Error::NotCorankOne {
            rank: n - null.len(),
            ambient: n,
        });
    }
    let f = &null[0];
    let values: Vec<Q> = (0..r.num_positive())
        .filter(|&i| !r1.contains(i))
        .map(|i| {
            let c: Vec<Q> = r.root_coeffs()[i].iter().map(|&x| q(x)).collect();
            linalg::dot(f, &c).abs()
        })
        .collect();
    let max = values.iter().max().expect("R′ is proper");
    let min = values.iter().min().expect("R′ is proper");
    debug_assert!(!min.is_zero());
    Ok(q(1) + max / min)
}

/// Natural logarithm of a positive big integer.
pub fn ln_big(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 1000 {
        return x.to_string().parse::<f64>().map_or(f64::NAN, f64::ln);
    }
    let shift = bits - 64;
    let top: BigUint = x >> shift;
    top.to_string().parse::<f64>().map_or(f64::NAN, f64::ln) + shift as f64 * std::f64::consts::LN_2
}

/// `log p · ord_p(dim V_{pμ+ν}) / log dim V_{pμ+ν}` for the standard pair.
pub fn limit_ratio(id: FamilyRank, p: u64) -> f64 {
    let poly = explicit_pair(id).polynomial();
    let v = poly.evaluate(p as i64);
    let d: BigInt = v.to_integer();
    let ord = p_adic_order(&d, p);
    (p as f64).ln() * ord as f64 / ln_big(&d.magnitude().clone())
}
