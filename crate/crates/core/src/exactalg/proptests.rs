use proptest::prelude::*;

use super::*;

fn var_strategy() -> impl Strategy<Value = VarId> {
    prop_oneof![
        Just(VarId::T),
        Just(VarId::X),
        Just(VarId::param("x")),
        Just(VarId::param("y")),
    ]
}

fn rational_strategy() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=5)
        .prop_filter("nonzero", |(n, _)| *n != 0)
        .prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

fn monomial_strategy() -> impl Strategy<Value = LaurentMonomial> {
    (
        rational_strategy(),
        prop::collection::vec((var_strategy(), -2i32..=3), 0..4),
    )
        .prop_map(|(c, pairs)| LaurentMonomial::new(c, Exponents::from_pairs(pairs)))
}

fn poly_strategy() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec(monomial_strategy(), 0..5).prop_map(|ms| ms.into_iter().collect())
}

/// Factor keys that are never the constant 1.
fn key_strategy() -> impl Strategy<Value = LaurentMonomial> {
    monomial_strategy().prop_filter("nonconstant", |m| !m.is_constant())
}

fn factored_strategy() -> impl Strategy<Value = FactoredLFunction> {
    (
        monomial_strategy(),
        prop::collection::vec((key_strategy(), prop_oneof![-2i32..=-1, 1i32..=2]), 0..4),
    )
        .prop_map(|(u, fs)| FactoredLFunction::from_parts(u, fs))
}

/// Keys with positive X-degree so the product expands as a series in X.
fn x_series_strategy() -> impl Strategy<Value = FactoredLFunction> {
    let key = (rational_strategy(), -1i32..=2, 1i32..=2).prop_map(|(c, ex, dx)| {
        LaurentMonomial::new(
            c,
            Exponents::from_pairs([(VarId::param("x"), ex), (VarId::X, dx)]),
        )
    });
    prop::collection::vec((key, prop_oneof![-2i32..=-1, 1i32..=2]), 0..4)
        .prop_map(|fs| FactoredLFunction::from_parts(LaurentMonomial::one(), fs))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(a in poly_strategy(), b in poly_strategy(), c in poly_strategy()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn rf_equal_commutes_and_inverts(f in factored_strategy(), g in factored_strategy()) {
        prop_assert!(rf_equal(&f.mul(&g), &g.mul(&f)));
        prop_assert!(rf_equal(&f.mul(&f.inv()), &FactoredLFunction::one()));
    }

    #[test]
    fn rf_equal_agrees_with_fraction(f in factored_strategy()) {
        // Expanding the factors and rebuilding as a single unit times the
        // original must leave the cross-multiplied check unchanged.
        let (num, den) = f.to_fraction();
        let g = f.mul(&FactoredLFunction::euler(LaurentMonomial::x_t(1, 0), 1))
            .mul(&FactoredLFunction::euler(LaurentMonomial::x_t(1, 0), -1));
        prop_assert!(rf_equal(&f, &g));
        prop_assert_eq!(g.to_fraction(), (num, den));
    }

    #[test]
    fn series_respects_products(f in x_series_strategy(), g in x_series_strategy()) {
        let d = 6;
        let fg = series_expand(&f.mul(&g), &VarId::X, d).unwrap();
        let split = series_expand(&f, &VarId::X, d).unwrap().mul(&series_expand(&g, &VarId::X, d).unwrap());
        prop_assert_eq!(fg, split);
    }

    #[test]
    fn eval_is_multiplicative(f in factored_strategy(), g in factored_strategy(), seed in any::<u64>()) {
        let mut s = RationalSampler::new(seed);
        let vars: Vec<VarId> = f.vars().union(&g.vars()).cloned().collect();
        let pt = s.assignment(&vars);
        if let (Ok(a), Ok(b), Ok(ab)) = (eval_at(&f, &pt), eval_at(&g, &pt), eval_at(&f.mul(&g), &pt)) {
            prop_assert_eq!(a * b, ab);
        }
    }

    #[test]
    fn eval_poly_matches_termwise_sum(p in poly_strategy(), seed in any::<u64>()) {
        let mut s = RationalSampler::new(seed);
        let vars: Vec<VarId> = p.vars().into_iter().collect();
        let pt = s.assignment(&vars);
        let termwise = p.terms().fold(Rational::from_integer(0.into()), |acc, m| acc + eval_monomial(&m, &pt).unwrap());
        prop_assert_eq!(eval_poly(&p, &pt).unwrap(), termwise);
    }

    #[test]
    fn text_roundtrip(p in poly_strategy(), f in factored_strategy()) {
        let p2: LaurentPoly = p.to_string().parse().unwrap();
        prop_assert_eq!(&p2, &p);
        let f2: FactoredLFunction = f.to_string().parse().unwrap();
        prop_assert_eq!(&f2, &f);
        prop_assert!(rf_equal(&f2, &f));
    }
}
