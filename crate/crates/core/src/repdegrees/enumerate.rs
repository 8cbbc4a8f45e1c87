use num_bigint::BigUint;
use rayon::prelude::*;

use super::dimension::DimEvaluator;
use super::GroupSpec;
use crate::rootsys::Weight;

/// Worker configuration for [`enumerate_dominant_with`].
#[derive(Debug, Clone, Copy, Default)]
pub struct EnumOptions {
    /// Size of a dedicated thread pool; `None` uses the global rayon pool.
    pub threads: Option<usize>,
}

/// All dominant `λ ∈ Λ_G` with `dim V_λ ≤ bound`, sorted by dimension and
/// then lexicographically by weight.
pub fn enumerate_dominant(spec: &GroupSpec, bound: u64) -> Vec<(Weight, BigUint)> {
    enumerate_dominant_with(spec, bound, EnumOptions::default())
}

pub fn enumerate_dominant_with(
    spec: &GroupSpec,
    bound: u64,
    opts: EnumOptions,
) -> Vec<(Weight, BigUint)> {
    let run = || enumerate_inner(spec, bound);
    match opts.threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .expect("thread pool")
            .install(run),
        None => run(),
    }
}

fn enumerate_inner(spec: &GroupSpec, bound: u64) -> Vec<(Weight, BigUint)> {
    if bound == 0 {
        return Vec::new();
    }
    let big_bound = BigUint::from(bound);
    let per_factor: Vec<Vec<(Vec<i64>, u64)>> = spec
        .systems()
        .iter()
        .map(|r| enumerate_factor(&DimEvaluator::new(r), &big_bound))
        .collect();

    // Combine factors, keeping the running product under the bound.
    let mut acc: Vec<(Vec<i64>, u64)> = vec![(Vec::new(), 1)];
    for table in &per_factor {
        acc = acc
            .par_iter()
            .flat_map_iter(|(w, d)| {
                let limit = bound / d;
                table
                    .iter()
                    .take_while(move |(_, e)| *e <= limit)
                    .map(move |(v, e)| {
                        let mut x = w.clone();
                        x.extend_from_slice(v);
                        (x, d * e)
                    })
            })
            .collect();
    }

    let mut out: Vec<(Weight, BigUint)> = acc
        .into_par_iter()
        .filter_map(|(w, d)| {
            let w = Weight(w);
            spec.in_lattice(&w)
                .expect("length matches")
                .then(|| (w, BigUint::from(d)))
        })
        .collect();
    out.par_sort_unstable_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
    out
}

/// Dominant weights of one simply connected factor, sorted by dimension.
fn enumerate_factor(ev: &DimEvaluator, bound: &BigUint) -> Vec<(Vec<i64>, u64)> {
    let n = ev.rank();
    let firsts: Vec<i64> = {
        let mut v = Vec::new();
        let mut lam = vec![0i64; n];
        loop {
            if ev.eval(&lam) > *bound {
                break;
            }
            v.push(lam[0]);
            lam[0] += 1;
        }
        v
    };
    let mut out: Vec<(Vec<i64>, u64)> = firsts
        .into_par_iter()
        .flat_map_iter(|a| {
            let mut lam = vec![0i64; n];
            lam[0] = a;
            let mut found = Vec::new();
            dfs(ev, bound, &mut lam, 1, &mut found);
            found
        })
        .collect();
    out.sort_unstable_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));
    out
}

/// Visit every extension of `lam[..i]` with later coordinates increased in
/// turn. Coordinates `≥ i` are zero on entry and are restored on exit.
fn dfs(
    ev: &DimEvaluator,
    bound: &BigUint,
    lam: &mut [i64],
    i: usize,
    found: &mut Vec<(Vec<i64>, u64)>,
) {
    if i == lam.len() {
        let d = ev.eval(lam);
        debug_assert!(d <= *bound);
        found.push((lam.to_vec(), u64::try_from(&d).expect("bounded by u64")));
        return;
    }
    loop {
        // With every later coordinate zero this is the smallest dimension
        // reachable from here; dimension is monotone in each coordinate.
        if ev.eval(lam) > *bound {
            break;
        }
        dfs(ev, bound, lam, i + 1, found);
        lam[i] += 1;
    }
    lam[i] = 0;
}
