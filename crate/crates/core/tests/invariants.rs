use std::collections::BTreeSet;

use proptest::prelude::*;

use lcalc_core::doubling::{
    d_tau_closed, d_tau_gk, verify_classical_reduction, verify_gl_reduction, verify_prop_gl1,
};
use lcalc_core::exactalg::{Exponents, Rational, RationalSampler};
use lcalc_core::kcorbits::{
    dominance_compare, greater_or_noncomparable, semi_whittaker_dim_bound, Dominance,
};
use lcalc_core::satake::{gamma_unramified, l_rankin_selberg, l_sym2, l_wedge2, lift_to_gl};
use lcalc_core::suite::numeric_partner;
use lcalc_core::symmfunc::{schur, shintani_whittaker, truncated_cauchy_check, DominantWeight};
use lcalc_core::{
    ArgForm, Composition, GroupData, GroupKind, LaurentMonomial, LaurentPoly, Partition, SatakeSet,
    VarId,
};

fn entry() -> impl Strategy<Value = LaurentMonomial> {
    prop_oneof![
        (prop::sample::select(vec!["a", "b", "c", "d"]), prop_oneof![-2i32..=-1, 1i32..=2])
            .prop_map(|(s, e)| LaurentMonomial::symbol(s).pow(e)),
        (1i64..=9, 1i64..=9, any::<bool>()).prop_map(|(n, d, neg)| {
            let r = Rational::new(n.into(), d.into());
            LaurentMonomial::constant(if neg { -r } else { r })
        }),
    ]
}

fn satake_set(max: usize) -> impl Strategy<Value = SatakeSet> {
    prop::collection::vec(entry(), 1..=max).prop_map(|v| SatakeSet::new(v).unwrap())
}

fn arg() -> impl Strategy<Value = ArgForm> {
    (1i32..=3, -2i32..=3).prop_map(|(mu, two_nu)| ArgForm::new(mu, two_nu))
}

fn kind() -> impl Strategy<Value = GroupKind> {
    prop_oneof![Just(GroupKind::Sp), Just(GroupKind::So)]
}

fn partition(max_size: usize, max_len: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..=max_size, 1..=max_len)
        .prop_map(|mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            v
        })
        .prop_map(|v| Partition::new(v).unwrap())
}

/// All semistandard tableaux of the shape with entries `< k`, as content vectors.
fn ssyt_contents(shape: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn fill(shape: &[usize], k: usize, cells: &mut Vec<Vec<usize>>, row: usize, col: usize, out: &mut Vec<Vec<usize>>) {
        if row == shape.len() {
            let mut content = vec![0; k];
            cells.iter().flatten().for_each(|&v| content[v] += 1);
            out.push(content);
            return;
        }
        if col == shape[row] {
            return fill(shape, k, cells, row + 1, 0, out);
        }
        let left = if col > 0 { cells[row][col - 1] } else { 0 };
        let above = if row > 0 { cells[row - 1][col] + 1 } else { 0 };
        for v in left.max(above)..k {
            cells[row].push(v);
            fill(shape, k, cells, row, col + 1, out);
            cells[row].pop();
        }
    }
    let mut cells = vec![Vec::new(); shape.len()];
    let mut out = Vec::new();
    fill(shape, k, &mut cells, 0, 0, &mut out);
    out
}

fn dominates(a: &[usize], b: &[usize]) -> bool {
    let (mut sa, mut sb) = (0, 0);
    (0..a.len().max(b.len())).all(|i| {
        sa += a.get(i).copied().unwrap_or(0);
        sb += b.get(i).copied().unwrap_or(0);
        sa >= sb
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rankin_selberg_counts_and_symmetry(a in satake_set(3), b in satake_set(3), arg in arg()) {
        let ab = l_rankin_selberg(&a, &b, arg);
        prop_assert_eq!(ab.total_exponent(), -((a.len() * b.len()) as i64));
        prop_assert_eq!(&ab, &l_rankin_selberg(&b, &a, arg));
    }

    #[test]
    fn sym2_wedge2_factorization(a in satake_set(4), arg in arg()) {
        let lhs = l_sym2(&a, arg).mul(&l_wedge2(&a, arg));
        prop_assert!(lhs.rf_equal(&l_rankin_selberg(&a, &a, arg)));
    }

    #[test]
    fn lift_is_self_dual(kind in kind(), pi in satake_set(4)) {
        let g = GroupData::new(kind, pi.len()).unwrap();
        let lifted = lift_to_gl(g, &pi).unwrap();
        prop_assert_eq!(lifted.len(), g.big_n());
        prop_assert!(lifted.inverse().multiset_eq(&lifted));
    }

    #[test]
    fn gamma_reflection(tau in satake_set(3), k in 1usize..=4) {
        let p = LaurentMonomial::symbol("p");
        let g = gamma_unramified(&p, &tau, k);
        let flip: BTreeSet<VarId> = [VarId::X, VarId::param("p")].into();
        let reflected = gamma_unramified(&p, &tau.inverse(), k).invert_vars(&flip);
        prop_assert!(reflected.rf_equal(&g.inv()));
    }

    #[test]
    fn schur_matches_tableaux(lambda in partition(3, 3), k in 1usize..=4) {
        prop_assume!(lambda.size() <= 6);
        let vars = SatakeSet::symbolic("x", k);
        let mut parts: Vec<i64> = lambda.parts().iter().map(|&p| p as i64).collect();
        let expect: LaurentPoly = if parts.len() > k {
            LaurentPoly::zero()
        } else {
            ssyt_contents(lambda.parts(), k)
                .into_iter()
                .map(|content| {
                    let pairs = content.iter().enumerate().map(|(i, &e)| (VarId::param(&format!("x{}", i + 1)), e as i32));
                    LaurentMonomial::new(Rational::from_integer(1.into()), Exponents::from_pairs(pairs))
                })
                .collect()
        };
        parts.resize(k.max(parts.len()), 0);
        match schur(&DominantWeight::new(parts.clone()).unwrap(), &vars) {
            Ok(s) => prop_assert_eq!(s, expect),
            Err(_) => prop_assert!(parts.len() > k),
        }
    }

    #[test]
    fn schur_and_whittaker_stability(lambda in partition(3, 3), extra in 0usize..=1) {
        let k = lambda.len() + extra;
        let tau = SatakeSet::symbolic("x", k);
        let mut base: Vec<i64> = lambda.parts().iter().map(|&p| p as i64).collect();
        base.resize(k, 0);
        let shifted: Vec<i64> = base.iter().map(|p| p + 1).collect();
        let det = tau.determinant();
        let s = schur(&DominantWeight::new(base.clone()).unwrap(), &tau).unwrap();
        let s1 = schur(&DominantWeight::new(shifted.clone()).unwrap(), &tau).unwrap();
        prop_assert_eq!(s1, s.mul_monomial(&det));
        let w = shintani_whittaker(&tau, &base).unwrap();
        let w1 = shintani_whittaker(&tau, &shifted).unwrap();
        prop_assert_eq!(w1, w.mul_monomial(&det));
    }

    #[test]
    fn dominance_is_a_partial_order(a in partition(4, 4), b in partition(4, 4), c in partition(4, 4)) {
        prop_assert_eq!(dominance_compare(&a, &a), Dominance::Equal);
        let ab = dominance_compare(&a, &b);
        if a.size() == b.size() {
            prop_assert_eq!(ab == Dominance::Greater || ab == Dominance::Equal, dominates(a.parts(), b.parts()));
        } else {
            prop_assert_eq!(ab, Dominance::Incomparable);
        }
        if ab == Dominance::Greater {
            prop_assert_eq!(dominance_compare(&b, &a), Dominance::Less);
            if dominance_compare(&b, &c) == Dominance::Greater {
                prop_assert_eq!(dominance_compare(&a, &c), Dominance::Greater);
            }
        }
    }

    #[test]
    fn greater_or_noncomparable_is_complement(k in 1usize..=3, c in 1usize..=3, seed in any::<u64>()) {
        let comps = lcalc_core::kcorbits::compositions(k * c);
        let lambda = &comps[(seed % comps.len() as u64) as usize];
        let top = Partition::rectangle(k, c);
        let below = matches!(
            dominance_compare(&lambda.underlying_partition(), &top),
            Dominance::Less | Dominance::Equal
        );
        prop_assert_eq!(greater_or_noncomparable(lambda, &top), !below);
    }

    #[test]
    fn dim_bound_is_permutation_invariant(k in 1usize..=3, c in 1usize..=3, seed in any::<u64>()) {
        let comps = lcalc_core::kcorbits::compositions(k * c);
        let lambda = &comps[(seed % comps.len() as u64) as usize];
        let mut rev = lambda.parts().to_vec();
        rev.reverse();
        prop_assert_eq!(
            semi_whittaker_dim_bound(k, c, lambda).unwrap(),
            semi_whittaker_dim_bound(k, c, &Composition::new(rev)).unwrap()
        );
    }

    #[test]
    fn cauchy_at_random_sizes(k in 1usize..=2, d in 1usize..=5) {
        prop_assert!(truncated_cauchy_check(&SatakeSet::symbolic("x", k), &SatakeSet::symbolic("y", k), d).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn telescoping_with_mixed_parameters(kind in kind(), n in 1usize..=4, tau in satake_set(3)) {
        let g = GroupData::new(kind, n).unwrap();
        let k = tau.len();
        prop_assert!(d_tau_gk(g, k, &tau).unwrap().rf_equal(&d_tau_closed(g, k, &tau).unwrap()));
    }

    #[test]
    fn gl_reduction_at_rational_points(n in 2usize..=5, k in 1usize..=3, split in 1usize..=4, seed in any::<u64>()) {
        let a = 1 + (split - 1) % (n - 1);
        let mut s = RationalSampler::new(seed);
        let tau = SatakeSet::values(&s.sample_vec(k)).unwrap();
        let tp = numeric_partner(&mut s, &tau);
        let pa = SatakeSet::values(&s.sample_vec(a)).unwrap();
        let pb = SatakeSet::values(&s.sample_vec(n - a)).unwrap();
        prop_assert!(verify_gl_reduction(n, a, n - a, k, &pa, &pb, &tau, &tp).unwrap());
    }

    #[test]
    fn classical_reduction_mixed(kind in kind(), pi in satake_set(3), tau in satake_set(3)) {
        let g = GroupData::new(kind, pi.len()).unwrap();
        prop_assert!(verify_classical_reduction(g, tau.len(), &pi, &tau).unwrap());
    }

    #[test]
    fn gamma_consistency_mixed(p in entry(), tau in satake_set(3), tp in satake_set(3)) {
        prop_assume!(tau.len() == tp.len());
        prop_assume!(!(tau.is_numeric() && tp.is_numeric()));
        prop_assert!(verify_prop_gl1(tau.len(), &p, &tau, &tp).unwrap());
    }
}
