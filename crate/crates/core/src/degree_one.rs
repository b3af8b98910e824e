//! The extension space `N`, a `P^2`-bundle over the Jacobian, and the
//! degree-one Gromov–Witten invariants computed on it.

use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::algebra::{parse, AlgebraError, Context, Element, GeneratorSpec, Monomial, Presentation, ReductionEngine};
use crate::presentations::SurfaceAlgebra;
use crate::scalar::{self, Scalar};

/// `H*(N) = Q[omega, h] ⊗ Λ(phi_1..phi_6)` modulo the Chern relation,
/// `omega^4` and the vanishing of Jacobian classes above degree 6.
#[derive(Clone, Debug)]
pub struct NRing {
    pub context: Arc<Context>,
    engine: ReductionEngine,
    omega_phi: Element,
}

const CHERN: &str = "h^3 + 4*omega*h^2 + 8*omega^2*h + 32/3*omega^3";

impl Default for NRing {
    fn default() -> Self {
        Self::new()
    }
}

impl NRing {
    pub fn new() -> Self {
        let mut gens = alloc::vec![GeneratorSpec::even("omega", 2), GeneratorSpec::even("h", 2)];
        for i in 1..=6 {
            gens.push(GeneratorSpec::odd(&format!("phi{}", i), 1));
        }
        let context = Context::new(gens).expect("valid names");
        let rels = [CHERN, "omega^4"].iter().map(|t| parse(&context, t).expect("built-in")).collect();
        let engine =
            ReductionEngine::build(&Presentation::with_relations(context.clone(), rels)).expect("finite quotient");
        let omega_phi = parse(&context, "phi1*phi4 + phi2*phi5 + phi3*phi6").expect("built-in");
        NRing { context, engine, omega_phi }
    }

    pub fn parse(&self, text: &str) -> Result<Element, AlgebraError> {
        Ok(parse(&self.context, text)?)
    }

    pub fn relations(&self) -> &[Element] {
        &self.engine.presentation().relations
    }

    /// Drops terms whose Jacobian degree `#phi + 2 deg_omega` exceeds 6.
    pub fn truncate(&self, x: &Element) -> Element {
        x.filter(|m| m.odd.len() as u32 + 2 * m.even[0] <= 6)
    }

    /// Reduced form: `h` below cubic, Jacobian degree at most 6.
    pub fn reduce(&self, x: &Element) -> Result<Element, AlgebraError> {
        Ok(self.truncate(&self.engine.normal_form(&self.truncate(x))?))
    }

    /// Replaces `omega` by `phi1 phi4 + phi2 phi5 + phi3 phi6`.
    pub fn expand_omega(&self, x: &Element) -> Result<Element, AlgebraError> {
        let mut images: Vec<Element> =
            (0..self.context.generators().len()).map(|g| Element::generator_at(&self.context, g)).collect();
        images[0] = self.omega_phi.clone();
        x.substitute(&self.context, &images)
    }

    /// Jacobian pairing of the `h`-free part, with
    /// `<phi1 phi4 phi2 phi5 phi3 phi6> = 1`.
    pub fn pair_j(&self, x: &Element) -> Result<Scalar, AlgebraError> {
        let expanded = self.expand_omega(&x.filter(|m| m.even[1] == 0))?;
        let (sign, full) = Monomial::from_word(alloc::vec![0, 0], &[0, 3, 1, 4, 2, 5]).expect("distinct");
        Ok(expanded.coefficient(&full) * scalar::int(sign as i64))
    }

    /// `Psi^N_l(z_1, z_2, z_3)`. A term `phi-word omega^a h^b` of the
    /// product contributes `(-8)^(b-5)/(b-5)! <phi-word omega^(a+b-5)>`
    /// when `b >= 5` and its degree is 16.
    pub fn psi_degree1(&self, z1: &Element, z2: &Element, z3: &Element) -> Result<Scalar, AlgebraError> {
        let product = z1.try_mul(z2)?.try_mul(z3)?;
        let mut total = Scalar::zero();
        for (m, c) in product.terms() {
            let (a, b) = (m.even[0], m.even[1]);
            if b < 5 || m.degree(&self.context) != 16 {
                continue;
            }
            let i = b - 5;
            let weight = scalar::pow(&scalar::int(-8), i) / scalar::factorial(i);
            let mut j = m.clone();
            j.even = alloc::vec![a + i, 0];
            let v = self.pair_j(&Element::monomial(&self.context, j))?;
            total += c * weight * v;
        }
        Ok(total)
    }
}

/// Restriction `H*(M) -> H*(N)` for genus 3.
#[derive(Clone, Debug)]
pub struct Restriction {
    pub surface: SurfaceAlgebra,
    pub n: NRing,
    images: Vec<Element>,
}

impl Default for Restriction {
    fn default() -> Self {
        Self::new()
    }
}

impl Restriction {
    pub fn new() -> Self {
        let surface = SurfaceAlgebra::new(3);
        let n = NRing::new();
        let mut images: Vec<Element> =
            ["4*omega + h", "h^2", "-2*omega*h^2"].iter().map(|t| n.parse(t).expect("built-in")).collect();
        for i in 1..=6 {
            images.push(n.parse(&format!("-h*phi{}", i)).expect("built-in"));
        }
        Restriction { surface, n, images }
    }

    /// `alpha -> 4 omega + h`, `beta -> h^2`, `gamma -> -2 omega h^2`,
    /// `psi_i -> -h phi_i`, then reduced.
    pub fn restrict(&self, x: &Element) -> Result<Element, AlgebraError> {
        let raw = x.substitute(&self.n.context, &self.images)?;
        self.n.reduce(&raw)
    }

    /// `Psi_A(x, y, z)` for classical classes written in `A(Σ)`.
    pub fn gw_degree1(&self, x: &Element, y: &Element, z: &Element) -> Result<Scalar, AlgebraError> {
        self.n.psi_degree1(&self.restrict(x)?, &self.restrict(y)?, &self.restrict(z)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn restriction_table() {
        let r = Restriction::new();
        let table = [
            ("alpha", "4*omega + h"),
            ("beta", "h^2"),
            ("alpha^2", "16*omega^2 + 8*omega*h + h^2"),
            ("gamma", "-2*omega*h^2"),
            ("alpha*beta", "-8*omega^2*h - 32/3*omega^3"),
            ("beta^2", "8*omega^2*h^2 + 64/3*omega^3*h"),
            ("alpha*gamma", "16*omega^3*h"),
            ("beta*gamma", "-16*omega^3*h^2"),
            ("gamma^2", "0"),
            ("psi2", "-phi2*h"),
            ("psi2*alpha", "-4*phi2*omega*h - phi2*h^2"),
            ("psi2*beta", "4*phi2*omega*h^2 + 8*phi2*omega^2*h"),
            ("psi2*gamma", "-8*phi2*omega^2*h^2"),
        ];
        for (x, y) in table {
            let got = r.restrict(&r.surface.parse(x)).unwrap();
            assert_eq!(got, r.n.parse(y).unwrap(), "{}", x);
        }
    }

    #[test]
    fn jacobian_pairing() {
        let n = NRing::new();
        assert_eq!(n.pair_j(&n.parse("omega^3").unwrap()).unwrap(), int(6));
        assert_eq!(n.pair_j(&n.parse("phi1*phi4*omega^2").unwrap()).unwrap(), int(2));
        assert_eq!(n.pair_j(&n.parse("phi1*phi2*omega^2").unwrap()).unwrap(), int(0));
    }

    #[test]
    fn degree_one_values() {
        let r = Restriction::new();
        let n = &r.n;
        let p = |t: &str| n.parse(t).unwrap();
        assert_eq!(n.psi_degree1(&p("4*omega + h"), &p("h^2"), &p("-16*omega^3*h^2")).unwrap(), int(-96));
        assert_eq!(n.psi_degree1(&p("-phi1*h"), &p("h^2"), &p("-8*phi4*omega^2*h^2")).unwrap(), int(16));
        assert_eq!(n.psi_degree1(&p("h^2"), &p("h^2"), &p("omega^3*h")).unwrap(), int(6));
        let s = |t: &str| r.surface.parse(t);
        assert_eq!(r.gw_degree1(&s("alpha"), &s("alpha"), &s("gamma^2")).unwrap(), int(0));
        assert_eq!(r.gw_degree1(&s("alpha"), &s("beta"), &s("beta*gamma")).unwrap(), int(-96));
        assert_eq!(r.gw_degree1(&s("psi1"), &s("beta"), &s("psi4*gamma")).unwrap(), int(16));
    }
}
