use num_traits::Zero;

use super::{bourbaki_simple_roots, pair_coeffs, Family, FamilyRank, RootSystem, Weight};
use crate::error::{Error, Result};
use crate::linalg::{self, q, Q};

/// A symmetric set of roots, stored as the set of positive roots it contains
/// (bit `i` stands for `±α_i`).
///
/// Every irreducible system has at most 120 positive roots, so a `u128` suffices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Subsystem {
    mask: u128,
}

impl Subsystem {
    pub const EMPTY: Subsystem = Subsystem { mask: 0 };

    pub fn from_mask(mask: u128) -> Self {
        Subsystem { mask }
    }

    pub fn from_lines(lines: impl IntoIterator<Item = usize>) -> Self {
        let mut mask = 0u128;
        for i in lines {
            mask |= 1u128 << i;
        }
        Subsystem { mask }
    }

    pub fn full(r: &RootSystem) -> Self {
        let n = r.num_positive();
        Subsystem {
            mask: if n == 128 {
                u128::MAX
            } else {
                (1u128 << n) - 1
            },
        }
    }

    pub fn mask(self) -> u128 {
        self.mask
    }

    pub fn contains(self, line: usize) -> bool {
        self.mask >> line & 1 == 1
    }

    pub fn lines(self) -> impl Iterator<Item = usize> {
        let mask = self.mask;
        (0..128).filter(move |i| mask >> i & 1 == 1)
    }

    pub fn num_positive(self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn num_roots(self) -> usize {
        2 * self.num_positive()
    }

    pub fn is_empty(self) -> bool {
        self.mask == 0
    }

    pub fn is_disjoint(self, other: Subsystem) -> bool {
        self.mask & other.mask == 0
    }

    /// `α, β ∈ S` and `α + β ∈ R` imply `α + β ∈ S` (with all sign choices).
    pub fn is_closed(self, r: &RootSystem) -> bool {
        let lines: Vec<usize> = self.lines().collect();
        lines.iter().all(|&i| {
            lines.iter().all(|&j| {
                r.sum_line(i, j).is_none_or(|k| self.contains(k))
                    && r.diff_line(i, j).is_none_or(|k| self.contains(k))
            })
        })
    }

    /// `S = R ∩ Span S`.
    pub fn is_saturated(self, r: &RootSystem) -> bool {
        span_closure(r, self) == self
    }

    pub fn rank(self, r: &RootSystem) -> usize {
        let rows: Vec<Vec<i64>> = self.lines().map(|i| r.root_coeffs()[i].clone()).collect();
        linalg::rank_i64(&rows)
    }

    /// Positive roots of `S` that are not a sum of two positive roots of `S`.
    pub fn base(self, r: &RootSystem) -> Vec<usize> {
        let lines: Vec<usize> = self.lines().collect();
        lines
            .iter()
            .copied()
            .filter(|&k| {
                !lines
                    .iter()
                    .any(|&i| lines.iter().any(|&j| i <= j && r.sum_line(i, j) == Some(k)))
            })
            .collect()
    }
}

/// All roots in the rational span of `s`.
pub fn span_closure(r: &RootSystem, s: Subsystem) -> Subsystem {
    let mut basis: Vec<Vec<Q>> = Vec::new();
    for i in s.lines() {
        let row: Vec<Q> = r.root_coeffs()[i].iter().map(|&x| q(x)).collect();
        let mut trial = basis.clone();
        trial.push(row);
        if linalg::rank(&trial) == trial.len() {
            basis = trial;
        }
    }
    let k = basis.len();
    let mut out = 0u128;
    for (i, c) in r.root_coeffs().iter().enumerate() {
        if s.contains(i) {
            out |= 1 << i;
            continue;
        }
        let mut trial = basis.clone();
        trial.push(c.iter().map(|&x| q(x)).collect());
        if linalg::rank(&trial) == k {
            out |= 1 << i;
        }
    }
    Subsystem::from_mask(out)
}

/// Roots `α` with `α∨(v) = 0`, for `v` in fundamental coordinates.
pub fn orthogonal_subsystem(r: &RootSystem, v: &Weight) -> Subsystem {
    Subsystem::from_lines(
        r.coroot_coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| pair_coeffs(c, v.coords()) == 0)
            .map(|(i, _)| i),
    )
}

/// Roots orthogonal to an ambient vector.
pub fn orthogonal_to_vector(r: &RootSystem, v: &[Q]) -> Subsystem {
    Subsystem::from_lines(
        r.positive_roots()
            .iter()
            .enumerate()
            .filter(|(_, a)| linalg::dot(a, v).is_zero())
            .map(|(i, _)| i),
    )
}

/// Decompose a closed subsystem into irreducible components and name them.
///
/// Labels are canonical: `D2` comes out as `A1 × A1`, `D3` as `A3`, `C2` as `B2`.
/// The result is sorted.
pub fn classify_subsystem(r: &RootSystem, s: Subsystem) -> Result<Vec<FamilyRank>> {
    if !s.is_closed(r) {
        return Err(Error::NotClosed);
    }
    let base = s.base(r);
    let k = base.len();
    let cartan: Vec<Vec<i64>> = base
        .iter()
        .map(|&a| base.iter().map(|&b| r.coroot_on_root(a, b)).collect())
        .collect();

    let mut comp = vec![usize::MAX; k];
    let mut out = Vec::new();
    for start in 0..k {
        if comp[start] != usize::MAX {
            continue;
        }
        let mut members = vec![start];
        comp[start] = start;
        let mut idx = 0;
        while idx < members.len() {
            let v = members[idx];
            for w in 0..k {
                if comp[w] == usize::MAX && cartan[v][w] != 0 {
                    comp[w] = start;
                    members.push(w);
                }
            }
            idx += 1;
        }
        let sub: Vec<Vec<i64>> = members
            .iter()
            .map(|&i| members.iter().map(|&j| cartan[i][j]).collect())
            .collect();
        out.push(identify(&sub).ok_or(Error::NotClosed)?);
    }
    out.sort();
    Ok(out)
}

/// Cartan matrix of the standard system, without building the roots.
pub(crate) fn standard_cartan(id: FamilyRank) -> Vec<Vec<i64>> {
    let (_, simple) = bourbaki_simple_roots(id);
    let n = simple.len();
    (0..n)
        .map(|i| {
            let ni = linalg::dot(&simple[i], &simple[i]);
            (0..n)
                .map(|j| {
                    let v = q(2) * linalg::dot(&simple[i], &simple[j]) / &ni;
                    i64::try_from(v.to_integer()).unwrap()
                })
                .collect()
        })
        .collect()
}

fn identify(cartan: &[Vec<i64>]) -> Option<FamilyRank> {
    let n = cartan.len();
    let families = [
        Family::A,
        Family::B,
        Family::C,
        Family::D,
        Family::E,
        Family::F,
        Family::G,
    ];
    families
        .into_iter()
        .filter_map(|f| FamilyRank::new(f, n).ok())
        .find(|&id| permutation_equivalent(cartan, &standard_cartan(id)))
}

/// Is there a permutation `π` with `a[i][j] = b[π i][π j]` for all `i, j`?
fn permutation_equivalent(a: &[Vec<i64>], b: &[Vec<i64>]) -> bool {
    let n = a.len();
    if b.len() != n {
        return false;
    }
    let signature = |m: &[Vec<i64>], i: usize| {
        let mut row: Vec<(i64, i64)> = (0..n).map(|j| (m[i][j], m[j][i])).collect();
        row.sort();
        row
    };
    let sa: Vec<_> = (0..n).map(|i| signature(a, i)).collect();
    let sb: Vec<_> = (0..n).map(|i| signature(b, i)).collect();
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];

    fn extend(
        i: usize,
        a: &[Vec<i64>],
        b: &[Vec<i64>],
        sa: &[Vec<(i64, i64)>],
        sb: &[Vec<(i64, i64)>],
        perm: &mut [usize],
        used: &mut [bool],
    ) -> bool {
        let n = a.len();
        if i == n {
            return true;
        }
        for cand in 0..n {
            if used[cand] || sa[i] != sb[cand] {
                continue;
            }
            if (0..i).all(|j| a[i][j] == b[cand][perm[j]] && a[j][i] == b[perm[j]][cand]) {
                perm[i] = cand;
                used[cand] = true;
                if extend(i + 1, a, b, sa, sb, perm, used) {
                    return true;
                }
                used[cand] = false;
            }
        }
        false
    }

    extend(0, a, b, &sa, &sb, &mut perm, &mut used)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(s: &str) -> RootSystem {
        RootSystem::build(s.parse().unwrap())
    }

    fn ids(labels: &[&str]) -> Vec<FamilyRank> {
        labels.iter().map(|s| s.parse().unwrap()).collect()
    }

    #[test]
    fn empty_and_full() {
        let f4 = sys("F4");
        assert_eq!(classify_subsystem(&f4, Subsystem::EMPTY).unwrap(), vec![]);
        assert_eq!(
            classify_subsystem(&f4, Subsystem::full(&f4)).unwrap(),
            ids(&["F4"])
        );
        let all = orthogonal_subsystem(&f4, &Weight::zero(4));
        assert_eq!(all, Subsystem::full(&f4));
    }

    #[test]
    fn non_closed_is_rejected() {
        // α1, α2 in A2 without α1+α2
        let a2 = sys("A2");
        let s = Subsystem::from_lines([0, 1]);
        assert!(!s.is_closed(&a2));
        assert_eq!(classify_subsystem(&a2, s), Err(Error::NotClosed));
    }

    #[test]
    fn fundamental_weight_complements() {
        let e6 = sys("E6");
        let s = orthogonal_subsystem(&e6, &Weight::fundamental(6, 1));
        assert_eq!(s.num_roots(), 40);
        assert_eq!(classify_subsystem(&e6, s).unwrap(), ids(&["D5"]));
        let e7 = sys("E7");
        let s = orthogonal_subsystem(&e7, &Weight::fundamental(7, 7));
        assert_eq!(s.num_roots(), 72);
        assert_eq!(classify_subsystem(&e7, s).unwrap(), ids(&["E6"]));
    }

    #[test]
    fn low_rank_labels_are_normalized() {
        // D4 minus its central node: three A1's.
        let d4 = sys("D4");
        let s = orthogonal_subsystem(&d4, &Weight::fundamental(4, 2));
        assert_eq!(
            classify_subsystem(&d4, s).unwrap(),
            ids(&["A1", "A1", "A1"])
        );
        // D4 minus an end node: D3 = A3.
        let s = orthogonal_subsystem(&d4, &Weight::fundamental(4, 1));
        assert_eq!(classify_subsystem(&d4, s).unwrap(), ids(&["A3"]));
        // C3 minus α1: C2 = B2.
        let c3 = sys("C3");
        let s = orthogonal_subsystem(&c3, &Weight::fundamental(3, 1));
        assert_eq!(classify_subsystem(&c3, s).unwrap(), ids(&["B2"]));
        // B4 minus α2: A1 × B2.
        let b4 = sys("B4");
        let s = orthogonal_subsystem(&b4, &Weight::fundamental(4, 2));
        assert_eq!(classify_subsystem(&b4, s).unwrap(), ids(&["A1", "B2"]));
    }

    #[test]
    fn long_roots_of_b3_form_a3() {
        // D3 ⊂ B3 is closed under addition but not of the form R ∩ V.
        let b3 = sys("B3");
        let long =
            Subsystem::from_lines((0..b3.num_positive()).filter(|&i| b3.root_norm(i) == q(2)));
        assert!(long.is_closed(&b3));
        assert!(!long.is_saturated(&b3));
        assert_eq!(classify_subsystem(&b3, long).unwrap(), ids(&["A3"]));
    }

    #[test]
    fn orthogonal_subsystems_are_closed_and_saturated() {
        for id in FamilyRank::all_up_to_rank(8) {
            let r = RootSystem::build(id);
            for i in 1..=r.rank() {
                let s = orthogonal_subsystem(&r, &Weight::fundamental(r.rank(), i));
                assert!(s.is_closed(&r));
                assert!(s.is_saturated(&r));
            }
        }
    }

    #[test]
    fn base_of_full_system_is_simple_roots() {
        for id in FamilyRank::all_up_to_rank(8) {
            let r = RootSystem::build(id);
            let base = Subsystem::full(&r).base(&r);
            assert_eq!(base, (0..r.rank()).collect::<Vec<_>>(), "{id}");
        }
    }

    #[test]
    fn ambient_orthogonal_complement() {
        let e8 = sys("E8");
        let alpha = e8.positive_roots()[e8.highest_root()].clone();
        let s = orthogonal_to_vector(&e8, &alpha);
        assert_eq!(classify_subsystem(&e8, s).unwrap(), ids(&["E7"]));
    }
}
