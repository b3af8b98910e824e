//! The space `R`, a `P^1`-bundle over `P(E)`, and the two degree-two
//! invariants read off from it.

use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::algebra::{parse, AlgebraError, Context, Element, GeneratorSpec, Monomial, Presentation, ReductionEngine};
use crate::scalar::{self, Scalar};

/// `H*(R) = Q[f, h, k] / (f^2, h^2 - f h, k^2 - (5f - 2h) k - 8 f h)`.
#[derive(Clone, Debug)]
pub struct RRing {
    pub context: Arc<Context>,
    engine: ReductionEngine,
    /// `H*(P(E)) = Q[fbar, h] / (fbar^2, h^2 - fbar h)`.
    pub base: Arc<Context>,
    base_engine: ReductionEngine,
}

/// `alpha_R`, `beta_R`, `gamma_R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MuClasses {
    pub alpha: Element,
    pub beta: Element,
    pub gamma: Element,
}

impl Default for RRing {
    fn default() -> Self {
        Self::new()
    }
}

fn build(ctx: &Arc<Context>, rels: &[&str]) -> ReductionEngine {
    let rels = rels.iter().map(|t| parse(ctx, t).expect("built-in")).collect();
    ReductionEngine::build(&Presentation::with_relations(ctx.clone(), rels)).expect("finite quotient")
}

impl RRing {
    pub fn new() -> Self {
        let context = Context::new(alloc::vec![
            GeneratorSpec::even("f", 2),
            GeneratorSpec::even("h", 2),
            GeneratorSpec::even("k", 2),
        ])
        .expect("valid names");
        let engine = build(&context, &["f^2", "h^2 - f*h", "k^2 - 5*f*k + 2*h*k - 8*f*h"]);
        let base = Context::new(alloc::vec![GeneratorSpec::even("fbar", 2), GeneratorSpec::even("h", 2)])
            .expect("valid names");
        let base_engine = build(&base, &["fbar^2", "h^2 - fbar*h"]);
        RRing { context, engine, base, base_engine }
    }

    pub fn parse(&self, text: &str) -> Result<Element, AlgebraError> {
        Ok(parse(&self.context, text)?)
    }

    pub fn engine(&self) -> &ReductionEngine {
        &self.engine
    }

    pub fn reduce(&self, x: &Element) -> Result<Element, AlgebraError> {
        self.engine.normal_form(x)
    }

    /// `alpha_R = 2f - 4h - 2k`, `beta_R = -(8h + k) f`,
    /// `gamma_R = -6 (2h + k)^2 f`, all reduced.
    pub fn mu_classes(&self) -> MuClasses {
        let r = |t: &str| self.reduce(&self.parse(t).expect("built-in")).expect("same context");
        MuClasses { alpha: r("2*f - 4*h - 2*k"), beta: r("-(8*h + k)*f"), gamma: r("-6*(2*h + k)^2*f") }
    }

    /// Coefficient of `f h k` in the normal form.
    pub fn pair(&self, x: &Element) -> Result<Scalar, AlgebraError> {
        let top = Monomial::from_even(alloc::vec![1, 1, 1]);
        Ok(self.reduce(x)?.coefficient(&top))
    }

    /// Slant product with the fibre: the `k`-linear part, with `f` read as
    /// `fbar`.
    pub fn slant_fiber(&self, x: &Element) -> Result<Element, AlgebraError> {
        let mut out = Element::zero(&self.base);
        for (m, c) in self.reduce(x)?.terms() {
            if m.even[2] == 1 {
                out.add_term(Monomial::from_even(alloc::vec![m.even[0], m.even[1]]), c.clone());
            }
        }
        Ok(out)
    }

    /// Coefficient of `fbar h` on `P(E)`.
    pub fn pair_base(&self, x: &Element) -> Result<Scalar, AlgebraError> {
        let nf = self.base_engine.normal_form(x)?;
        Ok(nf.coefficient(&Monomial::from_even(alloc::vec![1, 1])))
    }

    /// `Psi_2A(alpha, gamma, pt) = alpha[2A] <gamma_R>` with `alpha[2A] = 2`.
    pub fn psi2a_alpha_gamma_pt(&self) -> Scalar {
        scalar::int(2) * self.pair(&self.mu_classes().gamma).expect("same context")
    }

    /// `Psi_2A(beta, beta, pt) = <(beta_R / [P^1])^2>` on `P(E)`.
    pub fn psi2a_beta_beta_pt(&self) -> Scalar {
        let s = self.slant_fiber(&self.mu_classes().beta).expect("same context");
        self.pair_base(&(&s * &s)).expect("same context")
    }

    /// Reduced monomial basis of `H*(R)`.
    pub fn basis(&self) -> Vec<Element> {
        self.engine.basis().expect("finite quotient")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn ring_shape() {
        let r = RRing::new();
        assert_eq!(r.engine().dimension(), Some(8));
        let p = |t: &str| r.reduce(&r.parse(t).unwrap()).unwrap();
        assert_eq!(p("-6*(2*h + k)^2*f"), r.parse("-12*h*k*f").unwrap());
        assert_eq!(p("k^2*f"), r.parse("-2*h*k*f").unwrap());
        assert!(p("h^2*f").is_zero());
    }

    #[test]
    fn invariants() {
        let r = RRing::new();
        let mu = r.mu_classes();
        assert_eq!(mu.gamma, r.parse("-12*f*h*k").unwrap());
        assert_eq!(r.pair(&mu.gamma).unwrap(), int(-12));
        assert_eq!(r.pair(&r.parse("f*h*k").unwrap()).unwrap(), int(1));
        assert_eq!(r.pair(&r.parse("f*h").unwrap()).unwrap(), int(0));
        assert_eq!(r.slant_fiber(&mu.beta).unwrap(), crate::algebra::parse(&r.base, "-fbar").unwrap());
        assert_eq!(r.slant_fiber(&mu.gamma).unwrap(), crate::algebra::parse(&r.base, "-12*h*fbar").unwrap());
        assert_eq!(r.psi2a_alpha_gamma_pt(), int(-24));
        assert_eq!(r.psi2a_beta_beta_pt(), int(0));
    }
}
