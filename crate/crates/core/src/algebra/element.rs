use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::context::{Context, Parity, Slot};
use super::monomial::Monomial;
use super::AlgebraError;
use crate::scalar::{self, Scalar};

/// Homogeneity of an element. Zero has every degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Degree {
    Any,
    Homogeneous(u32),
    Mixed,
}

/// A finite sum of scalar multiples of monomials over a fixed context.
#[derive(Clone, Debug)]
pub struct Element {
    ctx: Arc<Context>,
    terms: BTreeMap<Monomial, Scalar>,
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        same_context(&self.ctx, &other.ctx) && self.terms == other.terms
    }
}

impl Eq for Element {}

pub(crate) fn same_context(a: &Arc<Context>, b: &Arc<Context>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl Element {
    pub fn zero(ctx: &Arc<Context>) -> Self {
        Element { ctx: ctx.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(ctx: &Arc<Context>, c: Scalar) -> Self {
        Element::term(ctx, c, Monomial::one(ctx))
    }

    pub fn one(ctx: &Arc<Context>) -> Self {
        Element::constant(ctx, Scalar::one())
    }

    pub fn term(ctx: &Arc<Context>, c: Scalar, m: Monomial) -> Self {
        let mut e = Element::zero(ctx);
        e.add_term(m, c);
        e
    }

    pub fn monomial(ctx: &Arc<Context>, m: Monomial) -> Self {
        Element::term(ctx, Scalar::one(), m)
    }

    pub fn generator(ctx: &Arc<Context>, name: &str) -> Result<Self, AlgebraError> {
        let g = ctx.index_of(name).ok_or_else(|| AlgebraError::UnknownGenerator(name.into()))?;
        Ok(Element::generator_at(ctx, g))
    }

    pub fn generator_at(ctx: &Arc<Context>, g: usize) -> Self {
        let mut m = Monomial::one(ctx);
        match ctx.slot(g) {
            Slot::Even(k) => m.even[k] = 1,
            Slot::Odd(k) => m.odd.push(k as u16),
        }
        Element::monomial(ctx, m)
    }

    pub fn context(&self) -> &Arc<Context> {
        &self.ctx
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Scalar> {
        &self.terms
    }

    pub fn into_terms(self) -> BTreeMap<Monomial, Scalar> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Coefficient of the constant monomial.
    pub fn constant_term(&self) -> Scalar {
        self.coefficient(&Monomial::one(&self.ctx))
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn degree(&self) -> Degree {
        let mut it = self.terms.keys().map(|m| m.degree(&self.ctx));
        match it.next() {
            None => Degree::Any,
            Some(d) => {
                if it.all(|e| e == d) {
                    Degree::Homogeneous(d)
                } else {
                    Degree::Mixed
                }
            }
        }
    }

    /// Parity of an element whose terms all share one parity.
    pub fn parity(&self) -> Option<Parity> {
        let mut it = self.terms.keys().map(|m| m.odd.len() % 2);
        let first = it.next()?;
        if it.all(|p| p == first) {
            Some(if first == 0 { Parity::Even } else { Parity::Odd })
        } else {
            None
        }
    }

    /// Homogeneous components keyed by degree.
    pub fn components(&self) -> BTreeMap<u32, Element> {
        let mut out: BTreeMap<u32, Element> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.degree(&self.ctx)).or_insert_with(|| Element::zero(&self.ctx)).add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        if c.is_zero() {
            return Element::zero(&self.ctx);
        }
        Element { ctx: self.ctx.clone(), terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }

    fn check(&self, other: &Element) -> Result<(), AlgebraError> {
        if same_context(&self.ctx, &other.ctx) {
            Ok(())
        } else {
            Err(AlgebraError::ContextMismatch)
        }
    }

    pub fn try_add(&self, other: &Element) -> Result<Element, AlgebraError> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Element) -> Result<Element, AlgebraError> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Element) -> Result<Element, AlgebraError> {
        self.check(other)?;
        let mut out = Element::zero(&self.ctx);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                if let Some((s, m)) = m1.mul(m2) {
                    let c = c1 * c2;
                    out.add_term(m, if s < 0 { -c } else { c });
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, n: u32) -> Element {
        let mut acc = Element::one(&self.ctx);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Ring map sending the `g`-th declared generator to `images[g]`.
    ///
    /// Images of even generators must be even so that the order of
    /// substitution does not matter.
    pub fn substitute(&self, target: &Arc<Context>, images: &[Element]) -> Result<Element, AlgebraError> {
        let gens = self.ctx.generators();
        if images.len() != gens.len() {
            return Err(AlgebraError::SubstitutionArity { expected: gens.len(), got: images.len() });
        }
        for (spec, img) in gens.iter().zip(images) {
            if !same_context(img.context(), target) {
                return Err(AlgebraError::ContextMismatch);
            }
            if spec.parity == Parity::Even && img.parity() == Some(Parity::Odd) {
                return Err(AlgebraError::ParityMismatch(spec.name.clone()));
            }
        }
        let mut even_idx = Vec::new();
        let mut odd_idx = Vec::new();
        for (g, spec) in gens.iter().enumerate() {
            match spec.parity {
                Parity::Even => even_idx.push(g),
                Parity::Odd => odd_idx.push(g),
            }
        }
        let mut cache: BTreeMap<(usize, u32), Element> = BTreeMap::new();
        let mut out = Element::zero(target);
        for (m, c) in &self.terms {
            let mut acc = Element::constant(target, c.clone());
            for (k, &e) in m.even.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let g = even_idx[k];
                let p = cache.entry((g, e)).or_insert_with(|| images[g].pow(e)).clone();
                acc = &acc * &p;
            }
            for &k in &m.odd {
                acc = &acc * &images[odd_idx[k as usize]];
            }
            out = &out + &acc;
        }
        Ok(out)
    }

    /// Re-expresses an element in another context by generator name.
    /// Generators that do not occur may be missing from `target`.
    pub fn transfer(&self, target: &Arc<Context>) -> Result<Element, AlgebraError> {
        let used = |g: usize| {
            self.terms.keys().any(|m| match self.ctx.slot(g) {
                Slot::Even(k) => m.even[k] > 0,
                Slot::Odd(k) => m.odd.contains(&(k as u16)),
            })
        };
        let images = self
            .ctx
            .generators()
            .iter()
            .enumerate()
            .map(|(i, g)| match Element::generator(target, &g.name) {
                Err(_) if !used(i) => Ok(Element::zero(target)),
                r => r,
            })
            .collect::<Result<Vec<_>, _>>()?;
        self.substitute(target, &images)
    }

    /// Keeps the terms satisfying `keep`.
    pub fn filter<F: Fn(&Monomial) -> bool>(&self, keep: F) -> Element {
        Element {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().filter(|(m, _)| keep(m)).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    /// Sum of `c * x` over pairs.
    pub fn linear_combination(ctx: &Arc<Context>, parts: &[(Scalar, Element)]) -> Element {
        let mut out = Element::zero(ctx);
        for (c, x) in parts {
            for (m, v) in &x.terms {
                out.add_term(m.clone(), c * v);
            }
        }
        out
    }

    pub fn from_int(ctx: &Arc<Context>, n: i64) -> Element {
        Element::constant(ctx, scalar::int(n))
    }
}

impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        self.try_add(rhs).expect("elements from different contexts")
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        self.try_sub(rhs).expect("elements from different contexts")
    }
}

impl Mul for &Element {
    type Output = Element;
    fn mul(self, rhs: &Element) -> Element {
        self.try_mul(rhs).expect("elements from different contexts")
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        self.scale(&-Scalar::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::GeneratorSpec;
    use alloc::vec;

    fn ctx() -> Arc<Context> {
        Context::new(vec![
            GeneratorSpec::even("alpha", 2),
            GeneratorSpec::odd("psi1", 3),
            GeneratorSpec::odd("psi2", 3),
        ])
        .unwrap()
    }

    #[test]
    fn anticommutation() {
        let c = ctx();
        let p1 = Element::generator(&c, "psi1").unwrap();
        let p2 = Element::generator(&c, "psi2").unwrap();
        assert_eq!(&p2 * &p1, -&(&p1 * &p2));
        assert!((&p1 * &p1).is_zero());
    }

    #[test]
    fn degrees() {
        let c = ctx();
        let a = Element::generator(&c, "alpha").unwrap();
        let p1 = Element::generator(&c, "psi1").unwrap();
        assert_eq!((&a * &p1).degree(), Degree::Homogeneous(5));
        assert_eq!((&a + &p1).degree(), Degree::Mixed);
        assert_eq!(Element::zero(&c).degree(), Degree::Any);
    }

    #[test]
    fn context_mismatch_is_an_error() {
        let a = Element::one(&ctx());
        let other = Context::new(vec![GeneratorSpec::even("x", 2)]).unwrap();
        let b = Element::one(&other);
        assert_eq!(a.try_mul(&b), Err(AlgebraError::ContextMismatch));
    }
}
