use dashu_int::IBig;
use gmj_core::field::*;
use proptest::prelude::*;

fn mac(s: &str) -> RationalFunction {
    VarSet::macdonald(2).parse(s).unwrap()
}

fn jack(s: &str) -> RationalFunction {
    VarSet::jack(2).parse(s).unwrap()
}

#[test]
fn arithmetic_examples() {
    let sum = rf_arith(&mac("1/a"), &mac("1/b"), ArithOp::Add).unwrap();
    assert!(rf_equal(&sum, &mac("(a+b)/(a*b)")));
    let x = mac("(b^4-a^4)/(b^4*(u1-u2))");
    assert!(rf_arith(&x, &x.inv().unwrap(), ArithOp::Mul).unwrap().is_one());
    let r = rf_arith(&mac("(1-a^4)/(1-b^4)"), &mac("(1-b^4)/(1-a^4)"), ArithOp::Mul).unwrap();
    assert!(r.is_one());
    assert_eq!(
        rf_arith(&mac("1"), &RationalFunction::zero(), ArithOp::Div),
        Err(FieldError::DivisionByZero)
    );
}

#[test]
fn equality_examples() {
    let v = VarSet::macdonald(2);
    assert!(rf_equal(&(&(&v.t() - &v.q()) * &v.t().inv().unwrap()), &mac("(b^4-a^4)/b^4")));
    assert!(rf_equal(
        &mac("(1+a^4)*(b^4-1)/(a^4*b^4-1)"),
        &mac("(1+a^4)*(1-b^4)/(1-a^4*b^4)")
    ));
    assert!(!rf_equal(&jack("(1-beta)/(-up1+up2)"), &jack("(1-beta)/(up1-up2)")));
}

#[test]
fn canonical_form_of_reference_entry() {
    let v = VarSet::jack(2);
    assert_eq!(v.format(&jack("(1-beta)/(-up1+up2)")), "(1-beta)/(-up1+up2)");
    assert_eq!(v.format(&RationalFunction::zero()), "0");
    let w = VarSet::macdonald(2);
    let e = mac("b^2*a^(-2)*(b^4-a^4)*u2/(b^4*(u1-u2))");
    assert!(rf_equal(&w.parse(&w.format(&e)).unwrap(), &e));
}

#[test]
fn gcd_cancels_common_factor() {
    let f = mac("(a^4-b^4)*(u1-u2)");
    let g = mac("(a^4-b^4)*(u1+u2)*a");
    let q = f.checked_div(&g).unwrap();
    assert_eq!(VarSet::macdonald(2).format(&q), "(u1-u2)/(a*u1+a*u2)");
}

fn poly_strategy(nvars: usize) -> impl Strategy<Value = Poly> {
    proptest::collection::vec(
        (proptest::collection::vec(0u16..3, nvars), -4i64..=4),
        1..5,
    )
    .prop_map(move |terms| {
        Poly::from_terms(
            terms
                .into_iter()
                .map(|(e, c)| {
                    let mut m = [0u16; MAX_VARS];
                    m[..e.len()].copy_from_slice(&e);
                    (Monomial(m), IBig::from(c))
                })
                .collect(),
        )
    })
}

fn rf_strategy() -> impl Strategy<Value = RationalFunction> {
    (poly_strategy(4), poly_strategy(4))
        .prop_filter("non-zero denominator", |(_, d)| !d.is_zero())
        .prop_map(|(n, d)| RationalFunction::new(n, d).unwrap())
}

fn point() -> NumericPoint {
    let v = VarSet::macdonald(2);
    let vals = [3i64, 5, 7, 11].iter().map(|&x| real_from_i64(x) / real_from_i64(13)).collect();
    NumericPoint::new(v, vals)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(x in rf_strategy(), y in rf_strategy(), z in rf_strategy()) {
        prop_assert!(rf_equal(&(&x + &y), &(&y + &x)));
        prop_assert!(rf_equal(&(&x * &y), &(&y * &x)));
        prop_assert!(rf_equal(&(&(&x + &y) + &z), &(&x + &(&y + &z))));
        prop_assert!(rf_equal(&(&(&x * &y) * &z), &(&x * &(&y * &z))));
        prop_assert!(rf_equal(&(&x * &(&y + &z)), &(&(&x * &y) + &(&x * &z))));
        prop_assert!((&x - &x).is_zero());
        if !x.is_zero() {
            prop_assert!((&x * &x.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn invariants_hold(x in rf_strategy(), y in rf_strategy()) {
        for r in [&x + &y, &x * &y, &x - &y] {
            let den = r.denominator();
            prop_assert!(!den.is_zero());
            prop_assert!(den.leading_coeff() > IBig::ZERO);
        }
    }

    #[test]
    fn gcd_divides_both_inputs(f in poly_strategy(4), g in poly_strategy(4), h in poly_strategy(4)) {
        prop_assume!(!f.is_zero() && !g.is_zero() && !h.is_zero());
        let a = &f * &h;
        let b = &g * &h;
        let d = gcd(&a, &b);
        prop_assert!(a.div_exact(&d).is_some());
        prop_assert!(b.div_exact(&d).is_some());
    }

    #[test]
    fn format_parse_round_trip(x in rf_strategy()) {
        let v = VarSet::macdonald(2);
        let s = v.format(&x);
        prop_assert!(rf_equal(&v.parse(&s).unwrap(), &x), "{}", s);
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(x in rf_strategy(), y in rf_strategy()) {
        let p = point();
        if let (Ok(a), Ok(b), Ok(s), Ok(m)) = (p.eval(&x), p.eval(&y), p.eval(&(&x + &y)), p.eval(&(&x * &y))) {
            let tol = 1e-40;
            let scale = 1.0 + real_to_f64(&real_abs(&a)) + real_to_f64(&real_abs(&b));
            prop_assert!(real_to_f64(&real_abs(&(s - (a.clone() + b.clone())))) < tol * scale * scale);
            prop_assert!(real_to_f64(&real_abs(&(m - a * b))) < tol * scale * scale);
        }
    }
}
