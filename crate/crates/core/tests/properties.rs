mod common;

use common::*;
use proptest::prelude::*;
use stanley_core::ideal::{Ring, VarSet};
use stanley_core::invariants::{
    admissible_orders, bigsize_family, bigsize_witness, families, maximal_admissible_family, size, Family,
};
use stanley_core::polarization::full_polarization;
use stanley_core::sdepth::{char_poset, sdepth_exact, split_lower_bound, Mode};

fn exps(f: &Family) -> Vec<Vec<u32>> {
    f.members().iter().map(|m| m.powers().to_vec()).collect()
}

fn mask(p: VarSet) -> u64 {
    p.0
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn size_matches_subset_oracle(d in arb_decomposition(5, 3, 5)) {
        prop_assert_eq!(size(&d).unwrap(), naive_size(&d));
    }

    #[test]
    fn bigsize_matches_definition(d in arb_decomposition(4, 3, 4)) {
        for order in admissible_orders(&d, 9).unwrap() {
            for f in families(&d, &order).unwrap() {
                prop_assert_eq!(bigsize_family(&f), naive_bigsize(f.n(), &exps(&f)));
            }
        }
    }

    /// The maximal family is the only order-increasing choice among the
    /// maximal primes that keeps every member adding a variable and skips
    /// only primes that add nothing at their position.
    #[test]
    fn maximal_family_is_unique(d in arb_decomposition(5, 2, 5)) {
        let rads = d.radicals();
        let maximal: Vec<bool> = rads.iter().map(|p| !rads.iter().any(|q| q != p && mask(*p) & !mask(*q) == 0)).collect();
        for order in admissible_orders(&d, 9).unwrap() {
            let f = maximal_admissible_family(&d, &order).unwrap();
            let eligible: Vec<usize> = order.perm().iter().copied().filter(|&i| maximal[i]).collect();
            let mut found = Vec::new();
            for m in 1u32..1 << eligible.len() {
                let mut acc = 0u64;
                let mut ok = true;
                let mut picked = Vec::new();
                for (b, &i) in eligible.iter().enumerate() {
                    let adds = mask(rads[i]) & !acc != 0;
                    if m >> b & 1 == 1 {
                        ok &= adds;
                        acc |= mask(rads[i]);
                        picked.push(i);
                    } else {
                        ok &= !adds;
                    }
                }
                if ok {
                    found.push(picked);
                }
            }
            prop_assert_eq!(found, vec![f.labels().to_vec()]);
            let all = rads.iter().fold(0, |a, p| a | mask(*p));
            prop_assert_eq!(mask(f.support()), all);
        }
    }

    #[test]
    fn prefixes_do_not_lower_bigsize(d in arb_decomposition(5, 2, 5)) {
        for order in admissible_orders(&d, 9).unwrap() {
            let f = maximal_admissible_family(&d, &order).unwrap();
            for r in 1..f.len() {
                let g = f.prefix(r);
                prop_assert!(g.is_admissible());
                prop_assert!(bigsize_family(&f) <= bigsize_family(&g));
            }
        }
    }

    #[test]
    fn restriction_to_the_support(d in arb_decomposition(5, 3, 5)) {
        for order in admissible_orders(&d, 9).unwrap() {
            let f = maximal_admissible_family(&d, &order).unwrap();
            let a = f.support();
            let members = f.members().iter().map(|m| m.restrict(a).unwrap()).collect();
            let tilde = Family::new(a.height(), members, f.labels().to_vec()).unwrap();
            prop_assert_eq!(bigsize_family(&f), d.n() - a.height() + bigsize_family(&tilde));
        }
    }

    /// The witness realises the value, and the value is one of the numbers
    /// `r - 1 + dim S/(P_k1 + ... + P_kr)` found by scanning every
    /// subsequence; it never exceeds `t - 1 + dim S/a_F`.
    #[test]
    fn witness_and_trivial_bound(d in arb_decomposition(5, 3, 5)) {
        for order in admissible_orders(&d, 9).unwrap() {
            for f in families(&d, &order).unwrap() {
                let b = bigsize_family(&f);
                let n = f.n();
                let rads: Vec<u64> = f.radicals().into_iter().map(mask).collect();
                let scan: Vec<usize> = (1u32..1 << f.len())
                    .map(|m| {
                        let ks: Vec<usize> = (0..f.len()).filter(|k| m >> k & 1 == 1).collect();
                        let union = ks.iter().fold(0u64, |a, &k| a | rads[k]);
                        ks.len() - 1 + n - union.count_ones() as usize
                    })
                    .collect();
                prop_assert!(scan.contains(&b));
                let w = bigsize_witness(&f).unwrap();
                prop_assert!(w.windows(2).all(|p| p[0] < p[1]));
                let union = w.iter().fold(0u64, |a, &k| a | rads[k]);
                prop_assert_eq!(w.len() - 1 + n - union.count_ones() as usize, b);
                prop_assert!(b <= f.trivial_bound());
            }
        }
    }

    #[test]
    fn admissible_families_are_not_below_size(d in arb_decomposition(4, 3, 4)) {
        let s = size(&d).unwrap();
        for order in admissible_orders(&d, 9).unwrap() {
            for f in families(&d, &order).unwrap().into_iter().filter(Family::is_admissible) {
                prop_assert!(bigsize_family(&f) >= s);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sdepth_certificates(d in arb_decomposition(4, 2, 4)) {
        let ideal = d.ideal().unwrap();
        for mode in [Mode::Ideal, Mode::Quotient] {
            let s = sdepth_exact(&ideal, mode).unwrap();
            let p = char_poset(&ideal, mode).unwrap();
            prop_assert_eq!(s.poset_size, p.len());
            prop_assert!(s.partition.is_valid_for(&p));
            prop_assert_eq!(s.partition.min_rho(&p), Some(s.value));
        }
    }

    #[test]
    fn sdepth_matches_brute_force(d in arb_decomposition(3, 2, 3)) {
        let ideal = d.ideal().unwrap();
        for (mode, quotient) in [(Mode::Ideal, false), (Mode::Quotient, true)] {
            if poset(&ideal, quotient).1.len() <= 12 {
                prop_assert_eq!(sdepth_exact(&ideal, mode).unwrap().value, brute_sdepth(&ideal, quotient));
            }
        }
    }

    #[test]
    fn free_variable_adds_one(d in arb_decomposition(3, 2, 3)) {
        let ideal = d.ideal().unwrap();
        let bigger = d.extend(Ring::new(d.n() + 1).unwrap()).unwrap().ideal().unwrap();
        for mode in [Mode::Ideal, Mode::Quotient] {
            prop_assert_eq!(sdepth_exact(&bigger, mode).unwrap().value, sdepth_exact(&ideal, mode).unwrap().value + 1);
        }
    }

    #[test]
    fn split_bounds_below_sdepth(d in arb_squarefree(5, 5)) {
        let sd = sdepth_exact(&d.ideal().unwrap(), Mode::Ideal).unwrap().value;
        for j in 0..d.n() {
            let b = split_lower_bound(&d, VarSet::singleton(j)).unwrap();
            prop_assert!(b.complete.is_none_or(|v| v <= sd));
        }
        for q in d.components() {
            let b = split_lower_bound(&d, q.support()).unwrap();
            prop_assert_eq!(b.a_all, None);
            prop_assert!(b.value.is_none_or(|v| v <= sd));
        }
    }

    #[test]
    fn polarization_matches_generator_oracle(d in arb_decomposition(4, 3, 4)) {
        let ideal = d.ideal().unwrap();
        let full = full_polarization(&d).unwrap();
        let (gens, levels) = polarize_generators(&ideal);
        let n = d.n();
        // new variable k of the polarization stands for provenance[k]
        let pos: Vec<usize> = full.provenance.iter().map(|p| n + levels.iter().position(|l| l == p).unwrap()).collect();
        prop_assert_eq!(pos.len(), levels.len());
        let polarized = full.decomposition.ideal().unwrap();
        let mut got: Vec<Vec<u32>> = polarized
            .gens()
            .iter()
            .map(|m| {
                let e = m.exponents();
                let mut v = vec![0u32; e.len()];
                v[..n].copy_from_slice(&e[..n]);
                for (k, &p) in pos.iter().enumerate() {
                    v[p] = e[n + k];
                }
                v
            })
            .collect();
        // polarization preserves divisibility, so minimal generators stay minimal
        let mut want = gens;
        got.sort();
        want.sort();
        prop_assert_eq!(got, want);
    }
}
