//! Gröbner normal forms against plain linear algebra on graded slices.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::Zero;
use qhm_core::algebra::{Context, Element, Monomial, Presentation, ReductionEngine};
use qhm_core::presentations::{builtin, RingKind, SurfaceAlgebra, TRIVIAL};
use qhm_core::Scalar;

type Key = Vec<u32>;
type Vector = BTreeMap<Key, Scalar>;

/// Row space kept with each row's largest monomial as pivot.
#[derive(Default)]
struct Span {
    rows: BTreeMap<Key, Vector>,
}

impl Span {
    fn reduce(&self, v: &mut Vector) {
        let mut bound: Option<Key> = None;
        loop {
            let next =
                v.keys().rev().find(|k| bound.as_ref().is_none_or(|b| *k < b) && self.rows.contains_key(*k)).cloned();
            let Some(k) = next else { break };
            let c = v[&k].clone();
            for (m, x) in &self.rows[&k] {
                let slot = v.entry(m.clone()).or_insert_with(Scalar::zero);
                *slot -= &c * x;
                if slot.is_zero() {
                    v.remove(m);
                }
            }
            bound = Some(k);
        }
    }

    fn insert(&mut self, mut v: Vector) {
        self.reduce(&mut v);
        if let Some((p, c)) = v.iter().next_back().map(|(k, c)| (k.clone(), c.clone())) {
            for x in v.values_mut() {
                *x /= &c;
            }
            self.rows.insert(p, v);
        }
    }
}

fn weight(e: &[u32]) -> u32 {
    2 * e[0] + 4 * e[1] + 6 * e[2]
}

fn monomials(max_weight: u32) -> Vec<Key> {
    let mut out = Vec::new();
    for a in 0..=max_weight / 2 {
        for b in 0..=max_weight / 4 {
            for c in 0..=max_weight / 6 {
                if weight(&[a, b, c]) <= max_weight {
                    out.push(vec![a, b, c]);
                }
            }
        }
    }
    out
}

fn vector(x: &Element) -> Vector {
    x.terms().iter().map(|(m, c)| (m.even.clone(), c.clone())).collect()
}

fn invariant_engine(kind: RingKind) -> (Arc<Context>, ReductionEngine) {
    let full = builtin(3, kind).unwrap();
    let piece = full.piece(TRIVIAL).unwrap();
    let inv = SurfaceAlgebra::invariant_context();
    let mut p =
        Presentation::with_relations(inv.clone(), piece.relations.iter().map(|r| r.transfer(&inv).unwrap()).collect());
    p.basis = piece.basis.clone();
    let engine = ReductionEngine::build(&p).unwrap();
    (inv, engine)
}

fn check(kind: RingKind, span_weight: u32) {
    let (ctx, engine) = invariant_engine(kind);
    assert_eq!(engine.dimension(), Some(10));
    let relations = &engine.presentation().relations;
    let mut span = Span::default();
    for r in relations {
        let top = r.terms().keys().map(|m| weight(&m.even)).max().unwrap();
        for m in monomials(span_weight - top) {
            span.insert(vector(&(r * &Element::monomial(&ctx, Monomial::from_even(m)))));
        }
    }
    let basis: Vec<Key> =
        engine.basis().unwrap().iter().map(|b| b.terms().keys().next().unwrap().even.clone()).collect();
    for m in monomials(16) {
        let x = Element::monomial(&ctx, Monomial::from_even(m.clone()));
        let nf = engine.normal_form(&x).unwrap();
        assert!(nf.terms().keys().all(|k| basis.contains(&k.even)), "{:?}: NF off the basis", m);
        let mut diff = vector(&(&x - &nf));
        span.reduce(&mut diff);
        assert!(diff.is_empty(), "{:?} ({}): m - NF(m) not in the ideal slice", m, kind.name());
    }
}

#[test]
fn classical_invariant_normal_forms_match_linear_algebra() {
    check(RingKind::Classical, 16);
}

#[test]
fn quantum_invariant_normal_forms_match_linear_algebra() {
    check(RingKind::Quantum, 24);
}

#[test]
fn full_engine_agrees_with_invariant_engine() {
    for kind in [RingKind::Classical, RingKind::Quantum] {
        let (inv, small) = invariant_engine(kind);
        let full = ReductionEngine::build(&builtin(3, kind).unwrap()).unwrap();
        for m in monomials(16) {
            let x = Element::monomial(&inv, Monomial::from_even(m));
            let a = small.normal_form(&x).unwrap();
            let b = full.normal_form(&x.transfer(full.context()).unwrap()).unwrap();
            assert_eq!(b.transfer(&inv).unwrap(), a);
        }
    }
}
