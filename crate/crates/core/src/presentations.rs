//! Built-in ring presentations and reference pairings.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::algebra::{
    parse, AlgebraError, Context, Element, GeneratorSpec, Monomial, PieceSpec, Presentation, ReductionEngine,
};
use crate::scalar::{self, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RingKind {
    Classical,
    Quantum,
    Floer,
}

impl RingKind {
    pub fn name(self) -> &'static str {
        match self {
            RingKind::Classical => "classical",
            RingKind::Quantum => "quantum",
            RingKind::Floer => "floer",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "classical" => Some(RingKind::Classical),
            "quantum" => Some(RingKind::Quantum),
            "floer" => Some(RingKind::Floer),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum PresentationError {
    #[error("no built-in {kind} presentation for genus {genus}; supply a presentation file")]
    NotBuiltin { genus: u32, kind: &'static str },
    #[error("validation failed: {0}")]
    Invalid(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// The free algebra `k[alpha, beta, gamma] ⊗ Λ(psi_1..psi_2g)`.
#[derive(Clone, Debug)]
pub struct SurfaceAlgebra {
    pub genus: u32,
    pub context: Arc<Context>,
}

impl SurfaceAlgebra {
    pub fn new(genus: u32) -> Self {
        let mut gens = alloc::vec![
            GeneratorSpec::even("alpha", 2),
            GeneratorSpec::even("beta", 4),
            GeneratorSpec::even("gamma", 6),
        ];
        for i in 1..=2 * genus {
            gens.push(GeneratorSpec::odd(&format!("psi{}", i), 3));
        }
        SurfaceAlgebra { genus, context: Context::new(gens).expect("valid names") }
    }

    pub fn parse(&self, text: &str) -> Element {
        parse(&self.context, text).expect("built-in expression")
    }

    pub fn generator(&self, name: &str) -> Element {
        Element::generator(&self.context, name).expect("known generator")
    }

    pub fn psi(&self, i: u32) -> Element {
        self.generator(&format!("psi{}", i))
    }

    /// `omega = sum_i psi_i psi_{g+i}`.
    pub fn omega(&self) -> Element {
        let mut acc = Element::zero(&self.context);
        for i in 1..=self.genus {
            acc = &acc + &(&self.psi(i) * &self.psi(self.genus + i));
        }
        acc
    }

    /// `gamma = -2 omega` as an odd-word expression.
    pub fn gamma_definition(&self) -> Element {
        self.omega().scale(&scalar::int(-2))
    }

    /// `2^(g-1) g!`, the value of `<gamma^(g-1)>`.
    pub fn normalization(&self) -> Scalar {
        scalar::pow(&scalar::int(2), self.genus - 1) * scalar::factorial(self.genus)
    }

    /// Invariant subring `k[alpha, beta, gamma]`.
    pub fn invariant_context() -> Arc<Context> {
        Context::new(alloc::vec![
            GeneratorSpec::even("alpha", 2),
            GeneratorSpec::even("beta", 4),
            GeneratorSpec::even("gamma", 6),
        ])
        .expect("valid names")
    }
}

fn monomials(ctx: &Arc<Context>, texts: &[&str]) -> Vec<Monomial> {
    texts.iter().map(|t| parse(ctx, t).expect("built-in").terms().keys().next().expect("nonzero").clone()).collect()
}

fn rels(ctx: &Arc<Context>, texts: &[&str]) -> Vec<Element> {
    texts.iter().map(|t| parse(ctx, t).expect("built-in")).collect()
}

/// Canonical basis of the genus-3 invariant quotients.
pub const INVARIANT_BASIS_G3: [&str; 10] =
    ["1", "alpha", "beta", "alpha^2", "gamma", "alpha*beta", "beta^2", "alpha*gamma", "beta*gamma", "gamma^2"];

/// Basis of the even quotient attached to each `psi_i`.
pub const H3_BASIS_G3: [&str; 4] = ["1", "alpha", "beta", "gamma"];

const CLASSICAL_G3: [[&str; 3]; 3] = [
    ["alpha^3 + 5*alpha*beta + 4*gamma", "alpha^2*beta + beta^2 + 4/3*gamma*alpha", "gamma*alpha^2 + gamma*beta"],
    ["alpha^2 + beta", "alpha*beta + gamma", "gamma*alpha"],
    ["alpha", "beta", "gamma"],
];

const QUANTUM_G3: [[&str; 3]; 3] = [
    [
        "alpha^3 + 5*alpha*beta + 4*gamma - 24*alpha",
        "alpha^2*beta + beta^2 + 4/3*gamma*alpha + 8*alpha^2 + 16*beta + 64",
        "gamma*alpha^2 + gamma*beta + 8*gamma",
    ],
    ["alpha^2 + beta + 8", "alpha*beta + gamma - 8*alpha", "gamma*alpha"],
    ["alpha", "beta + 8", "gamma"],
];

const FLOER_G2: [(&str, [&str; 3]); 3] = [
    ("R2m1", ["alpha - 4", "beta + 8", "gamma"]),
    ("R20", ["alpha^2", "beta - 8", "gamma + 16*alpha"]),
    ("R21", ["alpha + 4", "beta + 8", "gamma"]),
];

/// Piece labels of the genus-3 decomposition.
pub const TRIVIAL: &str = "trivial";
pub const H3: &str = "H3";
pub const L2H3: &str = "L2H3";

/// Primitive two-forms `psi_i psi_j` (`j != i + g`) and the differences
/// `psi_1 psi_{g+1} - psi_k psi_{g+k}`.
pub fn primitive_two_forms(s: &SurfaceAlgebra) -> Vec<Element> {
    let g = s.genus;
    let mut out = Vec::new();
    for i in 1..=2 * g {
        for j in i + 1..=2 * g {
            if j != i + g {
                out.push(&s.psi(i) * &s.psi(j));
            }
        }
    }
    let first = &s.psi(1) * &s.psi(g + 1);
    for k in 2..=g {
        out.push(&first - &(&s.psi(k) * &s.psi(g + k)));
    }
    out
}

fn genus3(kind: RingKind) -> Presentation {
    let s = SurfaceAlgebra::new(3);
    let ctx = s.context.clone();
    let table = match kind {
        RingKind::Classical => &CLASSICAL_G3,
        _ => &QUANTUM_G3,
    };
    let mut p = Presentation::new(ctx.clone());
    p.defines.push((ctx.index_of("gamma").unwrap(), s.gamma_definition()));
    p.pieces = alloc::vec![
        PieceSpec {
            label: TRIVIAL.into(),
            prefactors: alloc::vec![Element::one(&ctx)],
            relations: rels(&ctx, &table[0]),
            basis: Some(monomials(&ctx, &INVARIANT_BASIS_G3)),
        },
        PieceSpec {
            label: H3.into(),
            prefactors: (1..=6).map(|i| s.psi(i)).collect(),
            relations: rels(&ctx, &table[1]),
            basis: Some(monomials(&ctx, &H3_BASIS_G3)),
        },
        PieceSpec {
            label: L2H3.into(),
            prefactors: primitive_two_forms(&s),
            relations: rels(&ctx, &table[2]),
            basis: Some(monomials(&ctx, &["1"])),
        },
    ];
    p
}

fn genus2_floer() -> Presentation {
    let ctx = SurfaceAlgebra::invariant_context();
    let mut p = Presentation::new(ctx.clone());
    p.pieces = FLOER_G2
        .iter()
        .map(|(label, r)| PieceSpec {
            label: (*label).into(),
            prefactors: alloc::vec![Element::one(&ctx)],
            relations: rels(&ctx, r),
            basis: None,
        })
        .collect();
    p.basis = Some(monomials(&ctx, &["1", "alpha", "beta", "gamma"]));
    p
}

pub fn builtin(genus: u32, kind: RingKind) -> Result<Presentation, PresentationError> {
    match (genus, kind) {
        (3, RingKind::Classical) | (3, RingKind::Quantum) => Ok(genus3(kind)),
        (2, RingKind::Floer) => Ok(genus2_floer()),
        _ => Err(PresentationError::NotBuiltin { genus, kind: kind.name() }),
    }
}

/// A reference pairing `<word> = value`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixture {
    pub label: &'static str,
    pub expression: &'static str,
    pub value: i64,
}

const FIXTURES_G3: [Fixture; 10] = [
    Fixture { label: "alpha_6", expression: "alpha^6", value: 224 },
    Fixture { label: "alpha_4 beta_1", expression: "alpha^4*beta", value: -64 },
    Fixture { label: "alpha_2 beta_2", expression: "alpha^2*beta^2", value: 32 },
    Fixture { label: "beta_3", expression: "beta^3", value: 0 },
    Fixture { label: "alpha_3 gamma_1", expression: "alpha^3*gamma", value: 24 },
    Fixture { label: "alpha_1 beta_1 gamma_1", expression: "alpha*beta*gamma", value: -24 },
    Fixture { label: "gamma_2", expression: "gamma^2", value: 24 },
    Fixture { label: "psi_1 psi_4 alpha_3", expression: "psi1*psi4*alpha^3", value: -4 },
    Fixture { label: "psi_1 psi_4 alpha_1 beta_1", expression: "psi1*psi4*alpha*beta", value: 4 },
    Fixture { label: "psi_1 psi_4 gamma_1", expression: "psi1*psi4*gamma", value: -4 },
];

pub fn fixtures(genus: u32) -> Result<&'static [Fixture], PresentationError> {
    match genus {
        3 => Ok(&FIXTURES_G3),
        _ => Err(PresentationError::NotBuiltin { genus, kind: "fixture" }),
    }
}

/// A presentation together with the data needed to evaluate pairings.
#[derive(Clone, Debug)]
pub struct GenusData {
    pub genus: u32,
    pub kind: RingKind,
    pub presentation: Presentation,
    /// `2^(g-1) g!`.
    pub normalization: Scalar,
}

impl GenusData {
    pub fn builtin(genus: u32, kind: RingKind) -> Result<Self, PresentationError> {
        let presentation = builtin(genus, kind)?;
        Ok(GenusData { genus, kind, normalization: SurfaceAlgebra::new(genus).normalization(), presentation })
    }

    /// Checks the shape of `gamma`, realizability of the declared bases and
    /// that `gamma^(g-1)` is a basis element. Returns the engine.
    pub fn validate(&self) -> Result<ReductionEngine, PresentationError> {
        let g = self.genus;
        if g < 2 {
            return Err(PresentationError::Invalid(format!("genus must be at least 2, got {}", g)));
        }
        let expected = SurfaceAlgebra::new(g).normalization();
        if self.normalization != expected {
            return Err(PresentationError::Invalid(format!(
                "normalization must be 2^(g-1) g! = {}",
                scalar::display(&expected)
            )));
        }
        let p = &self.presentation;
        let ctx = &p.context;
        if ctx.odd_count() > 0 {
            if ctx.odd_count() != 2 * g as usize {
                return Err(PresentationError::Invalid(format!(
                    "genus {} needs {} odd generators, found {}",
                    g,
                    2 * g,
                    ctx.odd_count()
                )));
            }
            let gamma =
                ctx.index_of("gamma").ok_or_else(|| PresentationError::Invalid("no generator 'gamma'".into()))?;
            let def =
                p.defines.iter().find(|(i, _)| *i == gamma).map(|(_, d)| d).ok_or_else(|| {
                    PresentationError::Invalid("gamma must be defined from the odd generators".into())
                })?;
            check_gamma_shape(def, g)?;
        }
        let engine = ReductionEngine::build(p)?;
        if engine.dimension().is_none() {
            return Err(PresentationError::Invalid("quotient is not finite-dimensional".into()));
        }
        if ctx.index_of("gamma").is_some() {
            let top = Element::generator(ctx, "gamma")?.pow(g - 1);
            let basis = engine.basis().unwrap_or_default();
            if !basis.contains(&top) {
                return Err(PresentationError::Invalid(format!("gamma^{} is not a canonical basis element", g - 1)));
            }
        }
        Ok(engine)
    }
}

/// `gamma` must be `-2 sum_i psi_i psi_{g+i}` over the odd generators in
/// declaration order.
fn check_gamma_shape(def: &Element, g: u32) -> Result<(), PresentationError> {
    let minus_two = scalar::int(-2);
    if def.len() != g as usize {
        return Err(PresentationError::Invalid(format!("gamma must have exactly {} terms", g)));
    }
    for (m, c) in def.terms() {
        if *c != minus_two {
            return Err(PresentationError::Invalid("gamma coefficients must all be -2".into()));
        }
        let ok = m.even.iter().all(Zero::is_zero) && m.odd.len() == 2 && m.odd[1] == m.odd[0] + g as u16;
        if !ok {
            return Err(PresentationError::Invalid("gamma pairing indices must be (i, g+i)".into()));
        }
    }
    Ok(())
}

/// Position of `gamma^(g-1)` among the engine's basis elements.
pub fn top_index(engine: &ReductionEngine, genus: u32) -> Option<usize> {
    let ctx = engine.context();
    let top = Element::generator(ctx, "gamma").ok()?.pow(genus - 1);
    engine.basis()?.iter().position(|b| *b == top)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_has_g_terms() {
        let s = SurfaceAlgebra::new(3);
        let d = s.gamma_definition();
        assert_eq!(d.len(), 3);
        assert!(d.terms().values().all(|c| *c == scalar::int(-2)));
        assert_eq!(s.normalization(), scalar::int(24));
        assert_eq!(SurfaceAlgebra::new(2).normalization(), scalar::int(4));
    }

    #[test]
    fn fourteen_primitive_forms() {
        assert_eq!(primitive_two_forms(&SurfaceAlgebra::new(3)).len(), 14);
    }

    #[test]
    fn unsupported_builtin() {
        assert!(matches!(builtin(2, RingKind::Quantum), Err(PresentationError::NotBuiltin { .. })));
        assert!(matches!(builtin(4, RingKind::Classical), Err(PresentationError::NotBuiltin { .. })));
    }

    #[test]
    fn builtins_validate() {
        for (g, k) in [(3, RingKind::Classical), (3, RingKind::Quantum), (2, RingKind::Floer)] {
            let data = GenusData::builtin(g, k).unwrap();
            data.validate().unwrap();
        }
    }

    #[test]
    fn misindexed_gamma_is_rejected() {
        let s = SurfaceAlgebra::new(2);
        let bad = s.parse("-2*psi1*psi3 - 2*psi2*psi3");
        assert!(check_gamma_shape(&bad, 2).is_err());
        let bad2 = s.parse("-2*psi1*psi2 - 2*psi3*psi4");
        assert!(check_gamma_shape(&bad2, 2).is_err());
        assert!(check_gamma_shape(&s.gamma_definition(), 2).is_ok());
    }
}
