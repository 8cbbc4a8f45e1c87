use super::{RootSystem, Weight};

/// Result of moving a weight into the dominant chamber by the dot action.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominantRep {
    /// `w(λ+ρ) − ρ`.
    pub weight: Weight,
    /// `(−1)^ℓ(w)`.
    pub parity: i8,
    /// `λ+ρ` lies on a wall, so some reflection fixes it.
    pub singular: bool,
}

/// Dominant element of the (linear) Weyl orbit of `v`, with the parity of the
/// number of simple reflections used.
pub fn dominant_conjugate(r: &RootSystem, v: &Weight) -> (Weight, i8) {
    let c = r.cartan_matrix();
    let n = r.rank();
    let mut x = v.0.clone();
    let mut parity = 1i8;
    while let Some(i) = (0..n).find(|&i| x[i] < 0) {
        // s_i(x) = x − x_i α_i, and α_i has fundamental coordinates c[k][i].
        let xi = x[i];
        for k in 0..n {
            x[k] -= xi * c[k][i];
        }
        parity = -parity;
    }
    (Weight(x), parity)
}

/// Apply simple reflections to `λ+ρ` until it is dominant and shift back.
pub fn dominant_representative(r: &RootSystem, v: &Weight) -> DominantRep {
    let (dom, parity) = dominant_conjugate(r, &v.shifted());
    let singular = dom.0.contains(&0);
    DominantRep {
        weight: Weight(dom.0.iter().map(|x| x - 1).collect()),
        parity,
        singular,
    }
}

/// Do `v1` and `v2` lie in the same Weyl orbit?
pub fn weyl_orbit_equal(r: &RootSystem, v1: &Weight, v2: &Weight) -> bool {
    dominant_conjugate(r, v1).0 == dominant_conjugate(r, v2).0
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn sys(s: &str) -> RootSystem {
        RootSystem::build(s.parse().unwrap())
    }

    #[test]
    fn dominant_input_is_untouched() {
        let b3 = sys("B3");
        let rep = dominant_representative(&b3, &Weight(vec![2, 0, 1]));
        assert_eq!(rep.weight, Weight(vec![2, 0, 1]));
        assert_eq!(rep.parity, 1);
        assert!(!rep.singular);
    }

    #[test]
    fn rank_one_reflection() {
        // s·λ = −λ − 2 on A1
        let a1 = sys("A1");
        let rep = dominant_representative(&a1, &Weight(vec![-3]));
        assert_eq!(rep.weight, Weight(vec![1]));
        assert_eq!(rep.parity, -1);
        assert!(!rep.singular);
        assert!(dominant_representative(&a1, &Weight(vec![-1])).singular);
    }

    #[test]
    fn zero_shifted_coordinate_is_singular() {
        let g2 = sys("G2");
        assert!(dominant_representative(&g2, &Weight(vec![-1, 4])).singular);
        let e6 = sys("E6");
        assert!(dominant_representative(&e6, &Weight(vec![3, 0, 0, -1, 0, 2])).singular);
    }

    #[test]
    fn orbit_claims_for_classical_pairs() {
        for n in 3..=8 {
            let c = sys(&format!("C{n}"));
            let mut v = vec![0; n];
            v[n - 1] = 1;
            v[n - 2] = -1;
            assert!(weyl_orbit_equal(&c, &Weight(v), &Weight::fundamental(n, 1)));
        }
        let e7 = sys("E7");
        assert!(weyl_orbit_equal(
            &e7,
            &Weight(vec![0, 1, 0, -1, 1, -1, 1]),
            &Weight::fundamental(7, 7)
        ));
        assert!(!weyl_orbit_equal(
            &e7,
            &Weight::fundamental(7, 1),
            &Weight::fundamental(7, 7)
        ));
    }

    proptest! {
        #[test]
        fn representative_is_idempotent(coords in proptest::collection::vec(-6i64..6, 4)) {
            let f4 = sys("F4");
            let rep = dominant_representative(&f4, &Weight(coords));
            if !rep.singular {
                prop_assert!(rep.weight.is_dominant());
                let again = dominant_representative(&f4, &rep.weight);
                prop_assert_eq!(again.weight, rep.weight);
                prop_assert_eq!(again.parity, 1);
            }
        }

        #[test]
        fn orbit_equality_is_reflexive_and_reflection_invariant(
            coords in proptest::collection::vec(-5i64..5, 3),
            i in 0usize..3,
        ) {
            let b3 = sys("B3");
            let v = Weight(coords);
            prop_assert!(weyl_orbit_equal(&b3, &v, &v));
            let c = b3.cartan_matrix();
            let xi = v.0[i];
            let w = Weight((0..3).map(|k| v.0[k] - xi * c[k][i]).collect());
            prop_assert!(weyl_orbit_equal(&b3, &v, &w));
        }
    }
}
