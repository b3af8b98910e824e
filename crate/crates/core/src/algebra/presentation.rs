use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use super::context::{Context, Parity};
use super::element::Element;
use super::monomial::Monomial;
use super::AlgebraError;

/// One summand `prefactors ⊗ k[even]/(relations)` of a graded presentation,
/// or one factor of a split one.
#[derive(Clone, Debug, PartialEq)]
pub struct PieceSpec {
    pub label: String,
    pub prefactors: Vec<Element>,
    pub relations: Vec<Element>,
    pub basis: Option<Vec<Monomial>>,
}

/// Generators, relations and optional piece structure of a quotient ring.
///
/// Without pieces the ring is `k[even]/(relations) ⊗ Λ(odd)`. If every piece
/// has the single prefactor `1` the ring is the product of the piece
/// quotients. Otherwise the odd part is split by prefactors and powers of
/// the defined generators.
#[derive(Clone, Debug, PartialEq)]
pub struct Presentation {
    pub context: Arc<Context>,
    pub relations: Vec<Element>,
    pub basis: Option<Vec<Monomial>>,
    /// `(generator index, odd expression)` pairs such as `gamma = -2*psi1*psi4 - ...`.
    pub defines: Vec<(usize, Element)>,
    pub pieces: Vec<PieceSpec>,
}

impl Presentation {
    pub fn new(context: Arc<Context>) -> Self {
        Presentation { context, relations: Vec::new(), basis: None, defines: Vec::new(), pieces: Vec::new() }
    }

    pub fn with_relations(context: Arc<Context>, relations: Vec<Element>) -> Self {
        Presentation { relations, ..Presentation::new(context) }
    }

    pub fn is_split(&self) -> bool {
        !self.pieces.is_empty() && self.pieces.iter().all(|p| p.prefactors.len() == 1 && is_unit(&p.prefactors[0]))
    }

    pub fn piece(&self, label: &str) -> Option<&PieceSpec> {
        self.pieces.iter().find(|p| p.label == label)
    }

    /// Structural checks that do not need a Gröbner basis.
    pub fn validate(&self) -> Result<(), AlgebraError> {
        let ctx = &self.context;
        let check_even = |r: &Element| -> Result<(), AlgebraError> {
            if !Arc::ptr_eq(r.context(), ctx) && **r.context() != **ctx {
                return Err(AlgebraError::ContextMismatch);
            }
            if r.terms().keys().any(|m| !m.is_even_only()) {
                return Err(AlgebraError::OddRelation(super::expr::format(r)));
            }
            Ok(())
        };
        self.relations.iter().try_for_each(check_even)?;
        for p in &self.pieces {
            p.relations.iter().try_for_each(check_even)?;
            if p.prefactors.is_empty() {
                return Err(AlgebraError::Pieces(format!("piece '{}' has no prefactors", p.label)));
            }
            if let Some(b) = &p.basis {
                if b.iter().any(|m| !m.is_even_only()) {
                    return Err(AlgebraError::Pieces(format!("basis of piece '{}' must be even", p.label)));
                }
            }
        }
        for (g, d) in &self.defines {
            if ctx.generators()[*g].parity != Parity::Even {
                return Err(AlgebraError::Pieces(format!(
                    "defined generator '{}' must be even",
                    ctx.generators()[*g].name
                )));
            }
            if d.terms().keys().any(|m| m.even.iter().any(|&e| e > 0)) {
                return Err(AlgebraError::Pieces("definitions must be odd-word expressions".into()));
            }
        }
        let labels: Vec<&str> = self.pieces.iter().map(|p| p.label.as_str()).collect();
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(AlgebraError::Pieces(format!("piece label '{}' repeated", l)));
            }
        }
        if self.is_split() {
            if ctx.odd_count() > 0 {
                return Err(AlgebraError::Pieces("split presentations take even generators only".into()));
            }
            return Ok(());
        }
        // graded pieces: prefactors odd-only and pairwise disjoint
        let mut seen: Vec<&Element> = Vec::new();
        for p in &self.pieces {
            for f in &p.prefactors {
                if f.is_zero() || f.terms().keys().any(|m| m.even.iter().any(|&e| e > 0)) {
                    return Err(AlgebraError::Pieces(format!(
                        "prefactor '{}' of piece '{}' must be a nonzero odd-word expression",
                        super::expr::format(f),
                        p.label
                    )));
                }
                if seen.contains(&f) {
                    return Err(AlgebraError::Pieces(format!(
                        "prefactor '{}' appears in more than one place",
                        super::expr::format(f)
                    )));
                }
                seen.push(f);
            }
        }
        Ok(())
    }
}

pub(crate) fn is_unit(e: &Element) -> bool {
    e.len() == 1 && e.terms().iter().all(|(m, c)| m.is_one() && num_traits::One::is_one(c))
}
