//! Pairings, Gromov–Witten invariants on generators and Donaldson
//! invariants.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::algebra::{AlgebraError, Context, Degree, Element, Monomial, ReductionEngine};
use crate::presentations::{top_index, GenusData, PresentationError, RingKind, SurfaceAlgebra};
use crate::scalar::{self, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    #[error("no {ring} ring available for genus {genus}")]
    Unsupported { genus: u32, ring: &'static str },
    #[error("class {0} is not homogeneous")]
    Inhomogeneous(String),
    #[error("gamma^(g-1) is not a basis element of the {0} ring")]
    MissingTop(&'static str),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Presentation(#[from] PresentationError),
}

/// A pairing value with the data it was read from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvalResult {
    pub value: Scalar,
    /// `d` with `deg z = 6g - 6 + 4d`, when `z` is homogeneous of such a
    /// degree.
    pub degree: Option<u32>,
    pub normal_form: Element,
    pub coefficient: Scalar,
}

#[derive(Clone, Debug)]
struct Ring {
    engine: ReductionEngine,
    top: usize,
}

/// Evaluation functionals for one genus.
#[derive(Clone, Debug)]
pub struct Evaluator {
    pub surface: SurfaceAlgebra,
    classical: Option<Ring>,
    quantum: Option<Ring>,
    floer: Option<Ring>,
}

/// `d` such that `degree = 6g - 6 + 4d`.
pub fn instanton_degree(genus: u32, degree: u32) -> Option<u32> {
    let base = 6 * genus - 6;
    (degree >= base && (degree - base).is_multiple_of(4)).then(|| (degree - base) / 4)
}

impl Evaluator {
    /// Uses every built-in presentation available for `genus`.
    pub fn new(genus: u32) -> Result<Self, EvalError> {
        let mut data = Vec::new();
        for kind in [RingKind::Classical, RingKind::Quantum, RingKind::Floer] {
            if let Ok(d) = GenusData::builtin(genus, kind) {
                data.push(d);
            }
        }
        Self::from_data(genus, &data)
    }

    pub fn from_data(genus: u32, data: &[GenusData]) -> Result<Self, EvalError> {
        let mut ev = Evaluator { surface: SurfaceAlgebra::new(genus), classical: None, quantum: None, floer: None };
        for d in data {
            let engine = d.validate()?;
            let top = top_index(&engine, genus).ok_or(EvalError::MissingTop(d.kind.name()))?;
            let ring = Some(Ring { engine, top });
            match d.kind {
                RingKind::Classical => ev.classical = ring,
                RingKind::Quantum => ev.quantum = ring,
                RingKind::Floer => ev.floer = ring,
            }
        }
        Ok(ev)
    }

    pub fn genus(&self) -> u32 {
        self.surface.genus
    }

    pub fn context(&self) -> &Arc<Context> {
        &self.surface.context
    }

    pub fn engine(&self, kind: RingKind) -> Option<&ReductionEngine> {
        self.ring(kind).ok().map(|r| &r.engine)
    }

    fn ring(&self, kind: RingKind) -> Result<&Ring, EvalError> {
        let r = match kind {
            RingKind::Classical => &self.classical,
            RingKind::Quantum => &self.quantum,
            RingKind::Floer => &self.floer,
        };
        r.as_ref().ok_or(EvalError::Unsupported { genus: self.genus(), ring: kind.name() })
    }

    pub fn parse(&self, text: &str) -> Result<Element, AlgebraError> {
        Ok(crate::algebra::parse(self.context(), text)?)
    }

    /// Component in the trivial isotypic summand, written in alpha, beta,
    /// gamma. A word `w` of length `2k` contributes
    /// `<w omega^(g-k)> / <omega^g>` times `omega^k`, with
    /// `omega = -gamma/2`.
    pub fn project_invariant(&self, x: &Element) -> Result<Element, EvalError> {
        let ctx = self.context();
        if !Arc::ptr_eq(x.context(), ctx) && **x.context() != **ctx {
            return Err(AlgebraError::ContextMismatch.into());
        }
        let g = self.genus() as usize;
        let omega = self.surface.omega();
        let omega_pows: Vec<Element> = (0..=g).map(|k| omega.pow(k as u32)).collect();
        let denom = top_word(&omega_pows[g]);
        let gamma_slot = ctx.even_slot("gamma").expect("surface context");
        let minus_half = scalar::ratio(-1, 2);
        let mut out = Element::zero(ctx);
        for (m, c) in x.terms() {
            let len = m.odd.len();
            if len % 2 == 1 {
                continue;
            }
            let k = len / 2;
            let ratio = if len == 0 {
                Scalar::from_integer(1.into())
            } else {
                let mut w = Monomial::one(ctx);
                w.odd = m.odd.clone();
                top_word(&(&Element::monomial(ctx, w) * &omega_pows[g - k])) / &denom
            };
            if ratio.is_zero() {
                continue;
            }
            // omega^k = (-gamma/2)^k
            let mut e = m.even.clone();
            e[gamma_slot] += k as u32;
            out.add_term(Monomial::from_even(e), c * ratio * scalar::pow(&minus_half, k as u32));
        }
        Ok(out)
    }

    /// Reads `<z>` from the coefficient of `gamma^(g-1)` after projecting
    /// to the invariant part. The Floer functional carries a minus sign.
    pub fn pairing_value(&self, z: &Element, kind: RingKind) -> Result<EvalResult, EvalError> {
        let ring = self.ring(kind)?;
        let inv = self.project_invariant(z)?;
        let target = inv.transfer(ring.engine.context())?;
        let coords = ring.engine.coordinates(&target)?;
        let coefficient = coords[ring.top].clone();
        let mut value = &coefficient * self.surface.normalization();
        if kind == RingKind::Floer {
            value = -value;
        }
        let degree = match z.degree() {
            Degree::Homogeneous(d) => instanton_degree(self.genus(), d),
            _ => None,
        };
        let normal_form = ring.engine.from_coordinates(&coords).expect("finite basis");
        Ok(EvalResult { value, degree, normal_form, coefficient })
    }

    /// Same value read from the full piece-wise normal form, without the
    /// explicit projection.
    pub fn pairing_value_piecewise(&self, z: &Element, kind: RingKind) -> Result<Scalar, EvalError> {
        let ring = self.ring(kind)?;
        let coords = ring.engine.coordinates(&z.transfer(ring.engine.context())?)?;
        let v = &coords[ring.top] * self.surface.normalization();
        Ok(if kind == RingKind::Floer { -v } else { v })
    }

    /// `Psi~(z) = <pi_QH z>`.
    pub fn tilde_psi(&self, word: &Element) -> Result<Scalar, EvalError> {
        Ok(self.pairing_value(word, RingKind::Quantum)?.value)
    }

    /// `Psi_{dA}(z_1, ..., z_r)` for generator words `z_i`; zero unless the
    /// degrees add up to `6g - 6 + 4d`.
    pub fn gw_multipoint(&self, classes: &[Element], d: u32) -> Result<Scalar, EvalError> {
        let mut total = 0;
        for c in classes {
            match c.degree() {
                Degree::Homogeneous(k) => total += k,
                Degree::Any => return Ok(Scalar::zero()),
                Degree::Mixed => return Err(EvalError::Inhomogeneous(crate::algebra::format(c))),
            }
        }
        if total != 6 * self.genus() - 6 + 4 * d {
            return Ok(Scalar::zero());
        }
        let mut product = Element::one(self.context());
        for c in classes {
            product = product.try_mul(c)?;
        }
        self.tilde_psi(&product)
    }

    /// Cup-product pairing `<x ∪ y>` on the classical ring.
    pub fn classical_pairing(&self, x: &Element, y: &Element) -> Result<Scalar, EvalError> {
        Ok(self.pairing_value(&x.try_mul(y)?, RingKind::Classical)?.value)
    }

    pub fn classical_pairing_piecewise(&self, x: &Element, y: &Element) -> Result<Scalar, EvalError> {
        self.pairing_value_piecewise(&x.try_mul(y)?, RingKind::Classical)
    }

    /// `D(z)`: from the Floer ring when available, otherwise
    /// `(-1)^(gd+1) Psi~(z)` on each homogeneous component.
    pub fn donaldson(&self, z: &Element) -> Result<Scalar, EvalError> {
        if self.floer.is_some() {
            return Ok(self.pairing_value(z, RingKind::Floer)?.value);
        }
        self.ring(RingKind::Quantum)?;
        let g = self.genus() as i64;
        let mut total = Scalar::zero();
        for (deg, part) in z.components() {
            if let Some(d) = instanton_degree(self.genus(), deg) {
                total += scalar::sign(g * d as i64 + 1) * self.tilde_psi(&part)?;
            }
        }
        Ok(total)
    }
}

fn top_word(x: &Element) -> Scalar {
    let ctx = x.context();
    let mut full = Monomial::one(ctx);
    full.odd = (0..ctx.odd_count() as u16).collect();
    x.coefficient(&full)
}

/// `(D_g(gamma z), 2g D_{g-1}(z))` for an invariant `z` written with alpha,
/// beta and gamma.
pub fn genus_step_check(upper: &Evaluator, lower: &Evaluator, z: &Element) -> Result<(Scalar, Scalar), EvalError> {
    let g = upper.genus();
    let zu = z.transfer(upper.context())?;
    let gamma = Element::generator(upper.context(), "gamma")?;
    let left = upper.donaldson(&(&gamma * &zu))?;
    let zl = z.transfer(lower.context())?;
    let right = scalar::int(2 * g as i64) * lower.donaldson(&zl)?;
    Ok((left, right))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};

    #[test]
    fn projection_examples() {
        let ev = Evaluator::new(3).unwrap();
        let p = |t: &str| ev.project_invariant(&ev.parse(t).unwrap()).unwrap();
        assert_eq!(p("alpha^2*beta"), ev.parse("alpha^2*beta").unwrap());
        assert_eq!(p("psi1*psi4"), ev.parse("-1/6*gamma").unwrap());
        assert!(p("psi1*psi2").is_zero());
        assert!(p("psi1").is_zero());
    }

    #[test]
    fn basic_values() {
        let ev = Evaluator::new(3).unwrap();
        let q = |t: &str| ev.tilde_psi(&ev.parse(t).unwrap()).unwrap();
        assert_eq!(q("gamma^2"), int(24));
        assert_eq!(q("alpha^6"), int(224));
        assert_eq!(q("alpha"), int(0));
        assert_eq!(q("alpha*beta*psi1*psi2"), int(0));
        let d = |t: &str| ev.donaldson(&ev.parse(t).unwrap()).unwrap();
        assert_eq!(d("gamma^2"), int(-24));
        assert_eq!(d("alpha^6"), int(-224));
        let ev2 = Evaluator::new(2).unwrap();
        let c = SurfaceAlgebra::new(2);
        assert_eq!(ev2.donaldson(&c.parse("gamma")).unwrap(), int(-4));
        assert_eq!(ev2.donaldson(&c.parse("alpha*beta")).unwrap(), int(4));
        assert_eq!(ev2.pairing_value(&c.parse("gamma"), RingKind::Floer).unwrap().coefficient, ratio(1, 1));
    }

    #[test]
    fn result_carries_instanton_degree() {
        let ev = Evaluator::new(3).unwrap();
        let r = ev.pairing_value(&ev.parse("alpha^3*beta*gamma").unwrap(), RingKind::Quantum).unwrap();
        assert_eq!(r.degree, Some(1));
        assert_eq!(ev.pairing_value(&ev.parse("alpha").unwrap(), RingKind::Quantum).unwrap().degree, None);
    }

    #[test]
    fn genus_step() {
        let up = Evaluator::new(3).unwrap();
        let down = Evaluator::new(2).unwrap();
        let inv = SurfaceAlgebra::invariant_context();
        for (z, v) in [("1", 0), ("gamma", -24), ("alpha*beta", 24)] {
            let z = crate::algebra::parse(&inv, z).unwrap();
            let (l, r) = genus_step_check(&up, &down, &z).unwrap();
            assert_eq!(l, r);
            assert_eq!(l, int(v));
        }
    }
}
