//! Randomized cross-module axioms: the asymptotic Samuel function, the
//! spectral seminorm, gauges, star operations, and the divisor group are
//! exercised on generated inputs with exact comparisons throughout.

use proptest::prelude::*;

use varpi::exponent::ExponentVector;
use varpi::extension::{builtin, spectral_norm_ext, UniPoly};
use varpi::ideal::MonomialIdeal;
use varpi::logvalue::LogValue;
use varpi::poly::Polynomial;
use varpi::rees::{in_closure_of_power, rees_valuations, samuel};
use varpi::scalar::{rat, rat_int, ExtRat};
use varpi::seminorm::{gauge, spectral_rees, GaugeMonoid, TateData};
use varpi::star::{
    divisor, divisor_add, divisor_inf, divisor_le, divisor_neg, divisor_sup, divisor_zero,
    residual, v_closure, FractionalMonomialIdeal,
};

fn exponents(vars: usize, max: i64) -> impl Strategy<Value = ExponentVector> {
    proptest::collection::vec(0..=max, vars).prop_map(ExponentVector::new)
}

fn ideal_strategy(vars: usize) -> impl Strategy<Value = MonomialIdeal> {
    proptest::collection::vec(
        exponents(vars, 4).prop_filter("generators are nonunits", |e| !e.is_zero()),
        1..=3,
    )
    .prop_map(move |gens| MonomialIdeal::new(vars, gens).expect("dimensions agree"))
}

fn poly_strategy(vars: usize) -> impl Strategy<Value = Polynomial> {
    proptest::collection::vec(
        (exponents(vars, 4), (-3..=3i64).prop_filter("coefficients are nonzero", |c| *c != 0)),
        1..=3,
    )
    .prop_map(move |terms| {
        Polynomial::from_terms(vars, terms.into_iter().map(|(e, c)| (e, rat_int(c))).collect())
    })
}

fn ideal_with_polys() -> impl Strategy<Value = (MonomialIdeal, Polynomial, Polynomial)> {
    (1..=3usize)
        .prop_flat_map(|vars| (ideal_strategy(vars), poly_strategy(vars), poly_strategy(vars)))
}

fn ideal_pair() -> impl Strategy<Value = (MonomialIdeal, MonomialIdeal)> {
    (1..=3usize).prop_flat_map(|vars| (ideal_strategy(vars), ideal_strategy(vars)))
}

fn tate_strategy() -> impl Strategy<Value = TateData> {
    (1..=3usize).prop_flat_map(|vars| {
        proptest::collection::vec(0..=3i64, vars)
            .prop_filter("a pseudo-uniformizer is a nonunit", |e| e.iter().any(|&x| x > 0))
            .prop_map(move |e| TateData::new(vars, ExponentVector::new(e)).expect("valid"))
    })
}

fn fractional(data: TateData) -> impl Strategy<Value = FractionalMonomialIdeal> {
    let vars = data.vars;
    let supp = data.support();
    (-2..=2i64, proptest::collection::vec(proptest::collection::vec(0..=4i64, vars), 1..=3))
        .prop_map(move |(shift, raw)| {
            let mut gens: Vec<ExponentVector> =
                raw.into_iter().map(ExponentVector::new).collect();
            for k in 0..vars {
                if !supp.contains(&k) {
                    gens[0].entries[k] = 0;
                }
            }
            let ideal = MonomialIdeal::new(vars, gens).expect("dimensions agree");
            FractionalMonomialIdeal::new(&data, shift, ideal).expect("first generator is open")
        })
}

fn data_with_fractionals(
) -> impl Strategy<Value = (TateData, FractionalMonomialIdeal, FractionalMonomialIdeal)> {
    tate_strategy()
        .prop_flat_map(|data| (Just(data.clone()), fractional(data.clone()), fractional(data)))
}

fn data_with_polys() -> impl Strategy<Value = (TateData, Polynomial, Polynomial)> {
    tate_strategy().prop_flat_map(|data| {
        let vars = data.vars;
        (Just(data), poly_strategy(vars), poly_strategy(vars))
    })
}

fn data_with_exponent() -> impl Strategy<Value = (TateData, ExponentVector)> {
    tate_strategy().prop_flat_map(|data| {
        let vars = data.vars;
        (Just(data), exponents(vars, 8))
    })
}

fn unipoly_strategy() -> impl Strategy<Value = UniPoly> {
    proptest::collection::vec((-2..=2i64).prop_map(rat_int), 1..=3).prop_map(UniPoly::new)
}

/// `A ⊆ B` for monomial ideals over the same variables.
fn contained(a: &MonomialIdeal, b: &MonomialIdeal) -> bool {
    a.gens.iter().all(|g| b.contains_monomial(g).expect("nonnegative generators"))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn samuel_is_superadditive((ideal, f, g) in ideal_with_polys()) {
        let vf = samuel(&ideal, &f).unwrap();
        let vg = samuel(&ideal, &g).unwrap();
        let vfg = samuel(&ideal, &(&f * &g)).unwrap();
        prop_assert!(vfg >= vf + vg);
    }

    #[test]
    fn samuel_is_power_homogeneous((ideal, f, _g) in ideal_with_polys()) {
        let v = samuel(&ideal, &f).unwrap();
        prop_assert_eq!(samuel(&ideal, &f.pow(3)).unwrap(), v.mul_int(3));
    }

    #[test]
    fn samuel_dominates_the_plain_order((ideal, f, _g) in ideal_with_polys()) {
        prop_assert!(samuel(&ideal, &f).unwrap() >= ideal.ord(&f).unwrap());
    }

    #[test]
    fn closure_membership_matches_the_samuel_threshold(
        (ideal, f, _g) in ideal_with_polys(),
        n in 1..=2u32,
    ) {
        let member = in_closure_of_power(&ideal, &f, n).unwrap();
        let threshold = samuel(&ideal, &f).unwrap() >= ExtRat::from_int(i64::from(n));
        prop_assert_eq!(member, threshold);
    }

    #[test]
    fn rees_valuations_give_the_ideal_value_one((ideal, _f, _g) in ideal_with_polys()) {
        for v in rees_valuations(&ideal).unwrap() {
            let value = ideal.gens.iter().map(|g| v.weight.dot(g)).min().unwrap();
            prop_assert_eq!(value, v.normalizer);
        }
    }

    #[test]
    fn ideal_lattice_laws((i, j) in ideal_pair()) {
        let sum = i.sum(&j).unwrap();
        let inter = i.intersect(&j).unwrap();
        let prod = i.product(&j).unwrap();
        prop_assert!(contained(&i, &sum) && contained(&j, &sum));
        prop_assert!(contained(&inter, &i) && contained(&inter, &j));
        prop_assert!(contained(&prod, &inter));
        prop_assert_eq!(i.power(2), i.product(&i).unwrap());
        let quot = i.colon(&j).unwrap();
        prop_assert!(contained(&quot.product(&j).unwrap(), &i));
        prop_assert!(contained(&i, &prod.colon(&j).unwrap()));
    }

    #[test]
    fn spectral_seminorm_axioms((data, f, g) in data_with_polys()) {
        let nf = spectral_rees(&data, &f).unwrap();
        let ng = spectral_rees(&data, &g).unwrap();
        prop_assert!(spectral_rees(&data, &(&f * &g)).unwrap() <= &nf * &ng);
        let max = if nf >= ng { nf.clone() } else { ng.clone() };
        prop_assert!(spectral_rees(&data, &(&f + &g)).unwrap() <= max);
        prop_assert_eq!(spectral_rees(&data, &(&f * &f)).unwrap(), nf.pow(2));
    }

    #[test]
    fn ring_gauge_matches_the_spectral_route(
        (data, b) in data_with_exponent(),
        k in 2..=4i64,
    ) {
        let monoid = GaugeMonoid::RingMonomials;
        let g = gauge(&data, &monoid, &b).unwrap();
        let f = Polynomial::monomial(data.vars, b.clone(), rat_int(1));
        prop_assert_eq!(&g, &spectral_rees(&data, &f).unwrap());
        prop_assert_eq!(gauge(&data, &monoid, &b.scale(k)).unwrap(), g.pow(k));
    }

    #[test]
    fn v_closure_is_a_star_operation((data, i, j) in data_with_fractionals()) {
        let iv = v_closure(&data, &i).unwrap();
        prop_assert!(iv.contains(&data, &i).unwrap());
        prop_assert_eq!(&v_closure(&data, &iv).unwrap(), &iv);
        if i.contains(&data, &j).unwrap() {
            prop_assert!(iv.contains(&data, &v_closure(&data, &j).unwrap()).unwrap());
        }
        let shifted = i.product(&data, &FractionalMonomialIdeal::omega_power(&data, 1)).unwrap();
        let expected = iv
            .product(&data, &FractionalMonomialIdeal::omega_power(&data, 1))
            .unwrap();
        prop_assert_eq!(v_closure(&data, &shifted).unwrap(), expected);
    }

    #[test]
    fn residual_is_adjoint_to_the_product((data, i, j) in data_with_fractionals()) {
        let r = residual(&data, &i, &j).unwrap();
        prop_assert!(i.contains(&data, &r.product(&data, &j).unwrap()).unwrap());
        let ij = i.product(&data, &j).unwrap();
        prop_assert!(residual(&data, &ij, &j).unwrap().contains(&data, &i).unwrap());
    }

    #[test]
    fn divisor_group_and_lattice_laws((data, i, j) in data_with_fractionals()) {
        let d1 = divisor(&data, &i).unwrap();
        let d2 = divisor(&data, &j).unwrap();
        let zero = divisor_zero(&data);
        prop_assert_eq!(
            divisor_add(&data, &d1, &d2).unwrap(),
            divisor_add(&data, &d2, &d1).unwrap()
        );
        prop_assert_eq!(&divisor_add(&data, &d1, &zero).unwrap(), &d1);
        prop_assert_eq!(divisor_add(&data, &d1, &divisor_neg(&data, &d1).unwrap()).unwrap(), zero);
        let sup = divisor_sup(&data, &d1, &d2).unwrap();
        let inf = divisor_inf(&data, &d1, &d2).unwrap();
        prop_assert_eq!(&sup, &divisor_sup(&data, &d2, &d1).unwrap());
        prop_assert_eq!(&inf, &divisor_inf(&data, &d2, &d1).unwrap());
        prop_assert!(divisor_le(&data, &inf, &d1).unwrap());
        prop_assert!(divisor_le(&data, &d1, &sup).unwrap());
    }

    #[test]
    fn logvalue_algebra(
        n1 in -6..=6i64, d1 in 1..=4i64,
        n2 in -6..=6i64, d2 in 1..=4i64,
        k in 1..=4i64,
    ) {
        let a = LogValue::from_rational_exponent(rat(n1, d1));
        let b = LogValue::from_rational_exponent(rat(n2, d2));
        let product = &a * &b;
        prop_assert_eq!(
            product.exponent(),
            &ExtRat::Finite(rat(n1, d1) + rat(n2, d2))
        );
        prop_assert_eq!(a <= b, rat(n1, d1) >= rat(n2, d2));
        prop_assert_eq!(a.pow(k).root(k), a);
    }

    #[test]
    fn extension_norm_is_power_multiplicative_and_ultrametric(
        a in unipoly_strategy(),
        b in unipoly_strategy(),
        c in unipoly_strategy(),
        d in unipoly_strategy(),
        k in 2..=3u32,
    ) {
        let ext = builtin("sqrt-x").unwrap();
        let f = vec![a, b];
        let g = vec![c, d];
        let nf = spectral_norm_ext(&ext, &f).unwrap();
        let ng = spectral_norm_ext(&ext, &g).unwrap();
        let power = ext.pow(&f, k).unwrap();
        prop_assert_eq!(spectral_norm_ext(&ext, &power).unwrap(), nf.pow(i64::from(k)));
        let sum = ext.add(&f, &g).unwrap();
        let max = if nf >= ng { nf.clone() } else { ng.clone() };
        prop_assert!(spectral_norm_ext(&ext, &sum).unwrap() <= max);
        let product = ext.mul(&f, &g).unwrap();
        prop_assert!(spectral_norm_ext(&ext, &product).unwrap() <= &nf * &ng);
    }
}
