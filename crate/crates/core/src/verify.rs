//! Regression checks of the published numerical claims, each with a time
//! budget. Shared by the acceptance test target and the command line.

use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::efficiency::{eff_bruteforce, eff_formula, limit_ratio};
use crate::gassmann::{default_trace, default_twist, verify_gassmann};
use crate::linalg::Q;
use crate::repdegrees::{
    dim_irrep, enumerate_dominant, euler_identity_check, prime_power_scan, zeta_star_coefficients,
    GroupSpec,
};
use crate::rootsys::{
    classify_subsystem, quadratic_nullspace_dim, spanning_check, Family, FamilyRank, RootSystem,
    Weight,
};
use crate::weylpoly::explicit_pair;

#[derive(Debug, Clone)]
pub struct Outcome {
    pub number: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
    pub budget: Duration,
    pub skipped: bool,
    /// Set when the criterion fails in exactly the documented way because
    /// the stated claim is itself false.
    pub erratum: Option<String>,
}

impl Outcome {
    /// A failure that is not a documented erratum.
    pub fn unexpected_failure(&self) -> bool {
        !self.passed && self.erratum.is_none()
    }

    pub fn line(&self) -> String {
        let status = if self.skipped {
            "SKIP"
        } else if self.erratum.is_some() {
            "XFAIL"
        } else if self.passed {
            "PASS"
        } else {
            "FAIL"
        };
        format!(
            "[{status}] {:>2}. {} ({:.2?} / {:.0?}): {}",
            self.number, self.name, self.elapsed, self.budget, self.detail
        )
    }
}

struct CheckResult {
    passed: bool,
    detail: String,
    erratum: Option<String>,
}

impl From<(bool, String)> for CheckResult {
    fn from((passed, detail): (bool, String)) -> Self {
        CheckResult {
            passed,
            detail,
            erratum: None,
        }
    }
}

type Check = fn() -> CheckResult;

struct Criterion {
    name: &'static str,
    budget: Duration,
    slow: bool,
    run: Check,
}

fn ids(labels: &[&str]) -> Vec<FamilyRank> {
    labels.iter().map(|s| s.parse().unwrap()).collect()
}

fn int(s: &str) -> Q {
    Q::from_integer(s.parse().unwrap())
}

fn explicit_values() -> CheckResult {
    let mut bad = Vec::new();
    let mut gcds = Vec::new();
    let mut expect = |id: &str, args: &[i64], want: &[&str], gcd: Option<u64>| {
        let p = explicit_pair(id.parse().unwrap()).polynomial();
        let vals: Vec<Q> = args.iter().map(|&n| p.evaluate(n)).collect();
        for (v, w) in vals.iter().zip(want) {
            if *v != int(w) {
                bad.push(format!("{id}: got {v}, want {w}"));
            }
        }
        if let Some(g) = gcd {
            let got = vals
                .iter()
                .fold(BigInt::zero(), |acc, v| acc.gcd(v.numer()));
            gcds.push((id.to_string(), got.clone()));
            if got != BigInt::from(g) {
                bad.push(format!("{id}: gcd {got}, want {g}"));
            }
        }
    };
    for id in FamilyRank::all_up_to_rank(8) {
        if matches!(id.family(), Family::A | Family::B | Family::C | Family::D) {
            expect(&id.to_string(), &[1], &["1"], None);
        }
    }
    expect("G2", &[2], &["1"], None);
    expect("F4", &[2, 3], &["52", "340119"], Some(1));
    expect(
        "E6",
        &[2, 3, 4],
        &["1728", "3171108447", "71292900343808"],
        Some(1),
    );
    expect("E7", &[2, 3], &["573440", "33940969546604175"], Some(5));
    expect(
        "E8",
        &[2, 3],
        &["4096000", "2665014302693985712862760000"],
        Some(8000),
    );
    // 340119 = 13 · 26163 and 52 = 4 · 13, so the stated F4 gcd of 1 cannot
    // hold. Treat exactly that outcome as a known erratum.
    let f4 = explicit_pair("F4".parse().unwrap()).polynomial();
    let extended = (2..=5).fold(BigInt::zero(), |acc, n| acc.gcd(f4.evaluate(n).numer()));
    let only_f4 = bad.len() == 1
        && gcds.contains(&("F4".to_string(), BigInt::from(13)))
        && bad[0].starts_with("F4: gcd")
        && extended == BigInt::from(1);
    let detail = if bad.is_empty() {
        "all values and gcds match".to_string()
    } else {
        bad.join("; ")
    };
    CheckResult {
        passed: bad.is_empty(),
        erratum: only_f4.then(|| {
            "gcd(52, 340119) = 13, not the stated 1; gcd of P(2..5) is 1; every value matches"
                .to_string()
        }),
        detail,
    }
}

fn cross_consistency() -> (bool, String) {
    let list = ids(&[
        "A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "D5", "E6", "E7", "E8", "F4",
        "G2",
    ]);
    let mut checked = 0;
    let mut bad = Vec::new();
    for id in list {
        let r = RootSystem::shared(id);
        let p = explicit_pair(id).polynomial();
        for n in 2..=5 {
            let lam = p.weight_at(n);
            if !lam.is_dominant() {
                continue;
            }
            checked += 1;
            let d = dim_irrep(&r, &lam).expect("dominant");
            if p.evaluate(n) != Q::from_integer(d.into()) {
                bad.push(format!("{id} n={n}"));
            }
        }
    }
    if bad.is_empty() {
        (
            true,
            format!("{checked} evaluations agree with the dimension formula"),
        )
    } else {
        (false, format!("mismatch at {}", bad.join(", ")))
    }
}

/// Smallest dimension in the table divisible by `k`.
fn smallest_divisible(spec: &str, bound: u64, k: u64) -> Option<BigUint> {
    let spec: GroupSpec = spec.parse().unwrap();
    let k = BigUint::from(k);
    enumerate_dominant(&spec, bound)
        .into_iter()
        .map(|(_, d)| d)
        .find(|d| (d % &k).is_zero())
}

fn minimal_divisible() -> (bool, String) {
    let e7 = smallest_divisible("E7", 573440, 114688);
    let e8 = smallest_divisible("E8", 4096000, 512);
    let ok = e7 == Some(573440u32.into()) && e8 == Some(4096000u32.into());
    (ok, format!("E7 by 114688: {e7:?}; E8 by 512: {e8:?}"))
}

fn expected_witness(id: FamilyRank) -> Vec<Vec<FamilyRank>> {
    let n = id.rank();
    match id.family() {
        Family::F => vec![ids(&["B3"]), ids(&["C3"])],
        Family::G => vec![ids(&["A1"])],
        f => vec![FamilyRank::canonical(f, n - 1)],
    }
}

fn efficiency_oracle() -> (bool, String) {
    let list = ids(&[
        "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "G2", "F4",
    ]);
    let mut bad = Vec::new();
    for id in &list {
        let r = RootSystem::shared(*id);
        let brute = match eff_bruteforce(&r) {
            Ok(b) => b,
            Err(e) => {
                bad.push(format!("{id}: {e}"));
                continue;
            }
        };
        let formula = eff_formula(*id);
        let (r1, _) = brute.witness.expect("brute force has a witness");
        let ty = classify_subsystem(&r, r1).expect("closed");
        if brute.eff != formula.eff || brute.lev != formula.lev {
            bad.push(format!(
                "{id}: brute ({}, {}) vs formula ({}, {})",
                brute.eff, brute.lev, formula.eff, formula.lev
            ));
        }
        if !expected_witness(*id).contains(&ty) {
            bad.push(format!("{id}: witness type {ty:?}"));
        }
    }
    let ok = bad.is_empty();
    (
        ok,
        if ok {
            format!(
                "{} systems agree, witnesses of the expected type",
                list.len()
            )
        } else {
            bad.join("; ")
        },
    )
}

fn prime_power_free() -> (bool, String) {
    let b7 = prime_power_scan(&"B7:adjoint".parse().unwrap(), 1_000_000);
    let c7 = prime_power_scan(&"C7:adjoint".parse().unwrap(), 1_000_000);
    (
        b7.is_empty() && c7.is_empty(),
        format!(
            "prime-power dimensions up to 10^6: B7 adjoint {}, C7 adjoint {}",
            b7.len(),
            c7.len()
        ),
    )
}

fn scaling_suite() -> (bool, String) {
    let mut checked = 0usize;
    let mut bad = Vec::new();
    for id in FamilyRank::all_up_to_rank(4) {
        let r = RootSystem::shared(id);
        let n = r.rank();
        let count = 3usize.pow(n as u32);
        for code in 0..count {
            let lam = Weight(
                (0..n)
                    .map(|i| (code / 3usize.pow(i as u32) % 3) as i64)
                    .collect(),
            );
            let base = dim_irrep(&r, &lam).expect("dominant");
            for p in [2i64, 3, 5, 7] {
                let scaled = lam.scale(p).add(&Weight::rho(n).scale(p - 1));
                let lhs = dim_irrep(&r, &scaled).expect("dominant");
                checked += 1;
                if lhs != BigUint::from(p as u64).pow(r.num_positive() as u32) * &base {
                    bad.push(format!("{id} {lam} p={p}"));
                }
            }
        }
    }
    if bad.is_empty() {
        (true, format!("{checked} cases"))
    } else {
        (false, bad.join(", "))
    }
}

fn euler_identity() -> (bool, String) {
    let groups = ["A1", "A1:adjoint", "A1xA1", "A1xA1:cosets[0,0;1/2,1/2]"];
    let failed: Vec<&str> = groups
        .iter()
        .copied()
        .filter(|g| !euler_identity_check(&g.parse().unwrap(), 512))
        .collect();
    let star = zeta_star_coefficients(&"A1".parse().unwrap(), 4096);
    let support: Vec<BigUint> = star.counts.keys().cloned().collect();
    let powers: Vec<BigUint> = (0..=12).map(|k| BigUint::from(1u32 << k)).collect();
    let support_ok = support == powers && star.counts.values().all(|&c| c == 1);
    (
        failed.is_empty() && support_ok,
        format!("identity fails for {failed:?}; SU(2) star support is powers of 2: {support_ok}"),
    )
}

fn gassmann_pair() -> (bool, String) {
    match verify_gassmann(*default_trace().values(), &default_twist(), 10_000) {
        Ok(r) => (
            r.success() && r.n == 128,
            format!(
                "n = {}, zeta equal: {}, permutation-equivalent: {}",
                r.n, r.zeta_equal, r.perm_equivalent
            ),
        ),
        Err(e) => (false, e.to_string()),
    }
}

fn lemma_checks() -> (bool, String) {
    let all = FamilyRank::all_up_to_rank(8);
    let bad: Vec<String> = all
        .iter()
        .filter(|&&id| {
            let r = RootSystem::shared(id);
            quadratic_nullspace_dim(&r) != 0 || !spanning_check(&r)
        })
        .map(|id| id.to_string())
        .collect();
    (
        bad.is_empty(),
        format!("{} systems checked, failures: {bad:?}", all.len()),
    )
}

fn efficiency_limit() -> (bool, String) {
    let mut ok = true;
    let mut parts = Vec::new();
    for id in ids(&["A3", "B3", "G2", "F4"]) {
        let e = eff_formula(id).eff;
        let e = e.numer().to_f64().unwrap() / e.denom().to_f64().unwrap();
        let err101 = (limit_ratio(id, 101) - e).abs();
        let err499 = (limit_ratio(id, 499) - e).abs();
        ok &= err499 < err101 && err499 < 0.05;
        parts.push(format!("{id} {err101:.4}->{err499:.4}"));
    }
    (ok, parts.join(", "))
}

fn criteria() -> Vec<Criterion> {
    let s = Duration::from_secs;
    vec![
        Criterion {
            name: "explicit-pair values",
            budget: s(1),
            slow: false,
            run: explicit_values,
        },
        Criterion {
            name: "polynomial vs dimension formula",
            budget: s(10),
            slow: false,
            run: || cross_consistency().into(),
        },
        Criterion {
            name: "minimal divisible dimensions",
            budget: s(120),
            slow: false,
            run: || minimal_divisible().into(),
        },
        Criterion {
            name: "efficiency brute force vs formula",
            budget: s(600),
            slow: true,
            run: || efficiency_oracle().into(),
        },
        Criterion {
            name: "no prime-power dimensions for B7, C7 adjoint",
            budget: s(600),
            slow: true,
            run: || prime_power_free().into(),
        },
        Criterion {
            name: "scaling identity",
            budget: s(30),
            slow: false,
            run: || scaling_suite().into(),
        },
        Criterion {
            name: "Euler product identity",
            budget: s(30),
            slow: false,
            run: || euler_identity().into(),
        },
        Criterion {
            name: "Gassmann pair",
            budget: s(60),
            slow: false,
            run: || gassmann_pair().into(),
        },
        Criterion {
            name: "quadratic and spanning lemmas",
            budget: s(10),
            slow: false,
            run: || lemma_checks().into(),
        },
        Criterion {
            name: "efficiency limit spot check",
            budget: s(60),
            slow: false,
            run: || efficiency_limit().into(),
        },
    ]
}

/// Run every check in order. In fast mode the two exhaustive searches
/// (large enumeration and the larger brute forces) are skipped.
pub fn run_all(fast: bool) -> Vec<Outcome> {
    run_with(fast, |_| {})
}

/// As [`run_all`], calling `report` after each check.
pub fn run_with(fast: bool, mut report: impl FnMut(&Outcome)) -> Vec<Outcome> {
    let mut out = Vec::new();
    for (i, c) in criteria().into_iter().enumerate() {
        let outcome = if fast && c.slow {
            Outcome {
                number: i + 1,
                name: c.name,
                passed: true,
                detail: "skipped in fast mode".into(),
                elapsed: Duration::ZERO,
                budget: c.budget,
                skipped: true,
                erratum: None,
            }
        } else {
            let start = Instant::now();
            let CheckResult {
                passed,
                detail,
                erratum,
            } = (c.run)();
            let elapsed = start.elapsed();
            let within = elapsed <= c.budget;
            Outcome {
                number: i + 1,
                name: c.name,
                passed: passed && within,
                detail: if within {
                    detail
                } else {
                    format!("{detail}; over time budget")
                },
                elapsed,
                budget: c.budget,
                skipped: false,
                erratum: erratum.filter(|_| within),
            }
        };
        report(&outcome);
        out.push(outcome);
    }
    out
}
