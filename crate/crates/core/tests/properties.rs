use hook_core::exactnum::{format_rational, parse_rational, rat, rat_int, BetaPoly, Rational};
use hook_core::partition::Partition;
use hook_core::series::{euler_power, euler_power_formal, Series};
use hook_core::tcore::{
    core_hook_product_from_v, core_weight_from_v, h_set, is_t_core, n_coding, u_coding, v_coding,
    v_decode, v_from_n, HSet,
};
use proptest::prelude::*;

fn arb_partition(max_len: usize, max_part: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(1..=max_part, 0..=max_len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

fn arb_rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| rat(n, d))
}

proptest! {
    #[test]
    fn rational_text_round_trip(r in arb_rational()) {
        prop_assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
    }

    #[test]
    fn conjugation_preserves_hooks(l in arb_partition(8, 8)) {
        let c = l.conjugate();
        prop_assert_eq!(c.conjugate(), l.clone());
        prop_assert_eq!(c.hook_multiset(), l.hook_multiset());
        prop_assert_eq!(c.weight(), l.weight());
    }

    #[test]
    fn csv_round_trip(l in arb_partition(8, 12)) {
        prop_assert_eq!(l.to_string().parse::<Partition>().unwrap(), l);
    }

    #[test]
    fn hook_product_is_polynomial_eval(l in arb_partition(6, 6), b in arb_rational()) {
        prop_assert_eq!(l.hook_beta_product().eval(&b), l.hook_product_at(&b));
    }

    #[test]
    fn hook_product_polynomial_degree(l in arb_partition(6, 6)) {
        let p = l.hook_beta_product();
        prop_assert_eq!(p.degree(), Some(l.weight()));
        prop_assert_eq!(p.coeff(0), rat_int(1));
    }

    #[test]
    fn powers_add(a in arb_rational(), b in arb_rational()) {
        let order = 8;
        let lhs = euler_power(&(&a + &b), order);
        prop_assert_eq!(lhs, euler_power(&a, order).mul(&euler_power(&b, order)));
    }

    #[test]
    fn formal_series_specializes(b in arb_rational()) {
        let order = 10;
        let formal = euler_power_formal(order).eval_beta(&b);
        prop_assert_eq!(formal, euler_power(&(&b - rat_int(1)), order));
    }

    #[test]
    fn series_inverse(coeffs in prop::collection::vec(-5i64..=5, 1..10)) {
        let mut c = coeffs.clone();
        c[0] = 1;
        let s = Series::<Rational>::from_integers(&c);
        let inv = s.inverse().unwrap();
        prop_assert_eq!(s.mul(&inv), Series::one(s.order()));
    }

    #[test]
    fn beta_poly_ring_laws(
        a in prop::collection::vec(-4i64..=4, 0..5),
        b in prop::collection::vec(-4i64..=4, 0..5),
        x in arb_rational(),
    ) {
        let (p, q) = (BetaPoly::from_integers(&a), BetaPoly::from_integers(&b));
        prop_assert_eq!((&p * &q).eval(&x), p.eval(&x) * q.eval(&x));
        prop_assert_eq!((&p + &q).eval(&x), p.eval(&x) + q.eval(&x));
        prop_assert_eq!(&(&p - &q) + &q, p.clone());
        prop_assert_eq!(BetaPoly::from_strings(&p.to_strings()).unwrap(), p);
    }

    #[test]
    fn core_codings_agree(l in arb_partition(7, 9), ti in 0usize..3) {
        let t = [3usize, 5, 7][ti];
        prop_assume!(is_t_core(&l, t).unwrap());
        let v = v_coding(&l, t).unwrap();
        prop_assert_eq!(v_decode(&v), l.clone());
        prop_assert_eq!(core_weight_from_v(&v).unwrap(), l.weight() as i64);
        prop_assert_eq!(n_coding(&l, t).unwrap().weight(), l.weight() as i64);
        prop_assert_eq!(v_from_n(&n_coding(&l, t).unwrap()).unwrap(), v.clone());
        prop_assert_eq!(core_hook_product_from_v(&v), l.hook_product_at(&rat_int((t * t) as i64)));
        let h = h_set(&l, t).unwrap();
        prop_assert!(HSet::is_t_compact(t, h.elements()));
        prop_assert_eq!(u_coding(&l, t).unwrap().to_hset(), h);
    }

    #[test]
    fn non_cores_vanish(l in arb_partition(7, 9)) {
        let zero = l.hook_product_at(&rat_int(25)) == rat_int(0);
        prop_assert_eq!(zero, !is_t_core(&l, 5).unwrap());
    }
}
