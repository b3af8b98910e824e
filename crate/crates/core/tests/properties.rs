use std::sync::OnceLock;

use proptest::prelude::*;
use qhm_core::algebra::{Degree, Element, Monomial};
use qhm_core::evaluation::Evaluator;
use qhm_core::presentations::{RingKind, TRIVIAL};
use qhm_core::scalar;

fn evaluator() -> &'static Evaluator {
    static EV: OnceLock<Evaluator> = OnceLock::new();
    EV.get_or_init(|| Evaluator::new(3).unwrap())
}

type Term = (i8, (u32, u32, u32), u8);

fn monomial_strategy() -> impl Strategy<Value = Term> {
    (-4i8..=4, (0u32..4, 0u32..3, 0u32..3), any::<u8>())
}

fn build(terms: &[Term]) -> Element {
    let ctx = evaluator().context();
    let mut x = Element::zero(ctx);
    for &(c, (a, b, g), bits) in terms {
        let word: Vec<u16> = (0..6).filter(|i| bits & (1 << i) != 0).collect();
        let (sign, m) = Monomial::from_word(vec![a, b, g], &word).unwrap();
        x.add_term(m, scalar::int(c as i64 * sign as i64));
    }
    x
}

fn element() -> impl Strategy<Value = Element> {
    prop::collection::vec(monomial_strategy(), 0..4).prop_map(|t| build(&t))
}

fn single() -> impl Strategy<Value = Element> {
    monomial_strategy().prop_map(|t| build(&[(1, t.1, t.2)]))
}

fn degree(x: &Element) -> u32 {
    match x.degree() {
        Degree::Homogeneous(d) => d,
        _ => 0,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn product_is_associative(x in element(), y in element(), z in element()) {
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
    }

    #[test]
    fn product_distributes(x in element(), y in element(), z in element()) {
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
    }

    #[test]
    fn graded_commutativity(x in single(), y in single()) {
        let sign = if degree(&x) % 2 == 1 && degree(&y) % 2 == 1 { -1 } else { 1 };
        prop_assert_eq!(&x * &y, (&y * &x).scale(&scalar::int(sign)));
    }

    #[test]
    fn normal_form_is_idempotent(x in element()) {
        for kind in [RingKind::Classical, RingKind::Quantum] {
            let e = evaluator().engine(kind).unwrap();
            let nf = e.normal_form(&x).unwrap();
            prop_assert_eq!(e.normal_form(&nf).unwrap(), nf);
        }
    }

    #[test]
    fn normal_form_is_linear(x in element(), y in element(), c in -5i64..=5) {
        for kind in [RingKind::Classical, RingKind::Quantum] {
            let e = evaluator().engine(kind).unwrap();
            let lhs = e.normal_form(&(&x + &y.scale(&scalar::int(c)))).unwrap();
            let rhs = &e.normal_form(&x).unwrap() + &e.normal_form(&y).unwrap().scale(&scalar::int(c));
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn relations_reduce_to_zero(x in element(), m in single(), c in -5i64..=5, pick in any::<prop::sample::Index>()) {
        for kind in [RingKind::Classical, RingKind::Quantum] {
            let e = evaluator().engine(kind).unwrap();
            let rels = &e.presentation().piece(TRIVIAL).unwrap().relations;
            let r = pick.get(rels);
            let shifted = &x + &(r * &m).scale(&scalar::int(c));
            prop_assert_eq!(e.normal_form(&shifted).unwrap(), e.normal_form(&x).unwrap());
        }
    }

    #[test]
    fn tilde_psi_vanishes_off_degree(m in single()) {
        let d = degree(&m);
        if !d.is_multiple_of(4) || d < 12 {
            prop_assert_eq!(evaluator().tilde_psi(&m).unwrap(), scalar::int(0));
        }
    }

    #[test]
    fn projection_matches_piecewise(x in element()) {
        let ev = evaluator();
        for kind in [RingKind::Classical, RingKind::Quantum] {
            prop_assert_eq!(ev.pairing_value(&x, kind).unwrap().value, ev.pairing_value_piecewise(&x, kind).unwrap());
        }
    }
}
