use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use super::context::Context;
use super::element::{same_context, Element};
use super::groebner::GroebnerBasis;
use super::monomial::Monomial;
use super::order::{Exponents, MonomialOrder, Poly};
use super::presentation::Presentation;
use super::AlgebraError;
use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// `k[even generators] / ideal`, with a chosen vector-space basis.
#[derive(Clone, Debug)]
pub struct EvenQuotient {
    order: MonomialOrder,
    gb: Option<GroebnerBasis>,
    standard: Option<Vec<Exponents>>,
    standard_index: BTreeMap<Exponents, usize>,
    basis: Option<Vec<Exponents>>,
    /// Maps standard-monomial coordinates to basis coordinates.
    to_basis: Option<Matrix>,
}

pub(crate) fn to_poly(order: &MonomialOrder, x: &Element) -> Poly {
    Poly::from_map(
        order,
        x.terms().iter().filter(|(m, _)| m.is_even_only()).map(|(m, c)| (m.even.clone(), c.clone())).collect(),
    )
}

impl EvenQuotient {
    pub fn build(
        ctx: &Context,
        relations: &[Element],
        declared: Option<&[Monomial]>,
        where_: &str,
    ) -> Result<Self, AlgebraError> {
        let order = MonomialOrder::new(ctx.even_degrees());
        let nvars = ctx.even_count();
        let polys: Vec<Poly> = relations.iter().map(|r| to_poly(&order, r)).filter(|p| !p.is_zero()).collect();
        let (gb, standard) = if polys.is_empty() {
            let std = if nvars == 0 { Some(vec![Vec::new()]) } else { None };
            (None, std)
        } else {
            let gb = GroebnerBasis::compute(order.clone(), &polys)?;
            let std = gb.standard_monomials(nvars);
            (Some(gb), std)
        };
        let standard_index = standard.iter().flatten().enumerate().map(|(i, e)| (e.clone(), i)).collect();
        let mut q = EvenQuotient { order, gb, standard, standard_index, basis: None, to_basis: None };
        match declared {
            None => q.basis = q.standard.clone(),
            Some(decl) => {
                let n = q.standard.as_ref().ok_or(AlgebraError::InfiniteQuotient)?.len();
                let rows: Vec<Vec<Scalar>> = decl
                    .iter()
                    .map(|m| {
                        q.standard_coordinates(&Poly::from_map(
                            &q.order,
                            [(m.even.clone(), Scalar::from_integer(1.into()))].into_iter().collect(),
                        ))
                    })
                    .collect();
                let not_a_basis = |rank| AlgebraError::NotABasis {
                    where_: String::from(where_),
                    size: decl.len(),
                    rank,
                    dimension: n,
                };
                if rows.is_empty() {
                    if n == 0 {
                        q.basis = Some(Vec::new());
                        q.to_basis = Some(Matrix::zeros(0, 0));
                        return Ok(q);
                    }
                    return Err(not_a_basis(0));
                }
                let b = Matrix::from_rows(rows);
                let rank = b.rank();
                if decl.len() != n || rank != n {
                    return Err(not_a_basis(rank));
                }
                let inv = b.transpose().inverse().ok_or_else(|| not_a_basis(rank))?;
                q.basis = Some(decl.iter().map(|m| m.even.clone()).collect());
                q.to_basis = Some(inv);
            }
        }
        Ok(q)
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn groebner(&self) -> Option<&GroebnerBasis> {
        self.gb.as_ref()
    }

    pub fn dimension(&self) -> Option<usize> {
        self.basis.as_ref().map(Vec::len)
    }

    pub fn basis(&self) -> Option<&[Exponents]> {
        self.basis.as_deref()
    }

    pub fn standard_monomials(&self) -> Option<&[Exponents]> {
        self.standard.as_deref()
    }

    /// Remainder modulo the Gröbner basis.
    pub fn reduce(&self, p: &Poly) -> Poly {
        match &self.gb {
            None => p.clone(),
            Some(gb) => gb.reduce(p),
        }
    }

    fn standard_coordinates(&self, p: &Poly) -> Vec<Scalar> {
        let r = self.reduce(p);
        let mut v = vec![Scalar::zero(); self.standard_index.len()];
        for (e, c) in r.terms {
            v[self.standard_index[&e]] = c;
        }
        v
    }

    pub fn coordinates(&self, p: &Poly) -> Option<Vec<Scalar>> {
        self.basis.as_ref()?;
        let v = self.standard_coordinates(p);
        Some(match &self.to_basis {
            None => v,
            Some(m) => m.mul_vec(&v),
        })
    }

    /// Normal form as a polynomial on the basis monomials.
    pub fn normal_form(&self, p: &Poly) -> Poly {
        match (&self.basis, self.coordinates(p)) {
            (Some(basis), Some(c)) => {
                Poly::from_map(&self.order, basis.iter().cloned().zip(c).filter(|(_, c)| !c.is_zero()).collect())
            }
            _ => self.reduce(p),
        }
    }
}

/// How a presentation was realized.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Structure {
    /// `k[even]/I ⊗ Λ(odd)`.
    Plain,
    /// Product of quotients by comaximal ideals.
    Split,
    /// Sum of `prefactors ⊗ k[even]/I_p`.
    Graded,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PieceSummary {
    pub label: String,
    pub prefactors: usize,
    pub quotient_dimension: usize,
}

#[derive(Clone, Debug)]
struct Candidate {
    piece: usize,
    prefactor: usize,
    power: u32,
}

#[derive(Clone, Debug)]
struct Layer {
    index: BTreeMap<Vec<u16>, usize>,
    candidates: Vec<Candidate>,
    /// `candidates × words`: component of each word along each candidate.
    projector: Matrix,
}

#[derive(Clone, Debug)]
enum Kind {
    Plain { quotient: EvenQuotient, words: Vec<Vec<u16>> },
    Split { pieces: Vec<EvenQuotient>, basis: Vec<Exponents>, solve: Matrix },
    Graded { pieces: Vec<EvenQuotient>, offsets: Vec<usize>, define_slot: Option<usize>, layers: Vec<Layer> },
}

/// Normal forms and coordinates in a quotient described by a
/// [`Presentation`].
#[derive(Clone, Debug)]
pub struct ReductionEngine {
    presentation: Presentation,
    kind: Kind,
}

fn words_of_length(n: usize, k: usize) -> Vec<Vec<u16>> {
    let mut out = Vec::new();
    let mut cur: Vec<u16> = Vec::with_capacity(k);
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i as u16);
            rec(n, k, i + 1, cur, out);
            cur.pop();
        }
    }
    rec(n, k, 0, &mut cur, &mut out);
    out
}

/// Coefficient of the full odd word in `a * b`.
pub(crate) fn top_pairing(a: &Element, b: &Element) -> Scalar {
    let ctx = a.context();
    let mut full = Monomial::one(ctx);
    full.odd = (0..ctx.odd_count() as u16).collect();
    (a * b).coefficient(&full)
}

fn odd_length(x: &Element) -> Option<usize> {
    let mut it = x.terms().keys().map(|m| m.odd.len());
    let first = it.next()?;
    it.all(|l| l == first).then_some(first)
}

impl ReductionEngine {
    pub fn build(p: &Presentation) -> Result<Self, AlgebraError> {
        p.validate()?;
        let ctx = &p.context;
        let kind = if p.pieces.is_empty() {
            let quotient = EvenQuotient::build(ctx, &p.relations, p.basis.as_deref(), "")?;
            let n = ctx.odd_count();
            let words = (0..=n).flat_map(|k| words_of_length(n, k)).collect();
            Kind::Plain { quotient, words }
        } else if p.is_split() {
            Self::build_split(p)?
        } else {
            Self::build_graded(p)?
        };
        Ok(ReductionEngine { presentation: p.clone(), kind })
    }

    fn build_piece(p: &Presentation, i: usize) -> Result<EvenQuotient, AlgebraError> {
        let piece = &p.pieces[i];
        let mut rels = p.relations.clone();
        rels.extend(piece.relations.iter().cloned());
        let q =
            EvenQuotient::build(&p.context, &rels, piece.basis.as_deref(), &format!(" of piece '{}'", piece.label))?;
        if q.dimension().is_none() {
            return Err(AlgebraError::InfiniteQuotient);
        }
        Ok(q)
    }

    fn build_split(p: &Presentation) -> Result<Kind, AlgebraError> {
        let pieces = (0..p.pieces.len()).map(|i| Self::build_piece(p, i)).collect::<Result<Vec<_>, _>>()?;
        let total: usize = pieces.iter().map(|q| q.dimension().unwrap()).sum();
        let order = MonomialOrder::new(p.context.even_degrees());
        let image = |e: &Exponents| -> Vec<Scalar> {
            let poly = Poly::from_map(&order, [(e.clone(), Scalar::from_integer(1.into()))].into_iter().collect());
            pieces.iter().flat_map(|q| q.coordinates(&poly).unwrap()).collect()
        };
        let basis: Vec<Exponents> = match &p.basis {
            Some(b) => b.iter().map(|m| m.even.clone()).collect(),
            None => greedy_basis(&order, p.context.even_count(), total, &image)?,
        };
        let cols: Vec<Vec<Scalar>> = basis.iter().map(image).collect();
        let m = if cols.is_empty() { Matrix::zeros(0, 0) } else { Matrix::from_rows(cols).transpose() };
        let rank = m.rank();
        if basis.len() != total || rank != total {
            return Err(AlgebraError::NotABasis { where_: String::new(), size: basis.len(), rank, dimension: total });
        }
        let solve = m.inverse().expect("full rank");
        Ok(Kind::Split { pieces, basis, solve })
    }

    fn build_graded(p: &Presentation) -> Result<Kind, AlgebraError> {
        let ctx = &p.context;
        if p.defines.len() > 1 {
            return Err(AlgebraError::Unsupported("at most one defined generator is supported".into()));
        }
        let pieces = (0..p.pieces.len()).map(|i| Self::build_piece(p, i)).collect::<Result<Vec<_>, _>>()?;
        let mut offsets = Vec::with_capacity(pieces.len());
        let mut off = 0;
        for (q, spec) in pieces.iter().zip(&p.pieces) {
            offsets.push(off);
            off += q.dimension().unwrap() * spec.prefactors.len();
        }
        let define = p.defines.first();
        let define_slot = define.map(|(g, _)| match ctx.slot(*g) {
            super::Slot::Even(k) => k,
            super::Slot::Odd(_) => unreachable!("validated"),
        });
        let n = ctx.odd_count();
        let step = match define {
            Some((_, d)) => odd_length(d)
                .filter(|&l| l > 0)
                .ok_or_else(|| AlgebraError::Pieces("definition must be homogeneous of positive odd length".into()))?,
            None => 0,
        };
        // candidate elements per odd layer
        let mut by_layer: Vec<Vec<(Candidate, Element)>> = vec![Vec::new(); n + 1];
        for (pi, spec) in p.pieces.iter().enumerate() {
            for (fi, f) in spec.prefactors.iter().enumerate() {
                let len = odd_length(f).ok_or_else(|| {
                    AlgebraError::Pieces(format!("prefactor '{}' mixes word lengths", super::expr::format(f)))
                })?;
                let mut elem = f.clone();
                let mut power = 0;
                let mut layer = len;
                while layer <= n && !elem.is_zero() {
                    by_layer[layer].push((Candidate { piece: pi, prefactor: fi, power }, elem.clone()));
                    match define {
                        Some((_, d)) => {
                            elem = &elem * d;
                            power += 1;
                            layer += step;
                        }
                        None => break,
                    }
                }
            }
        }
        let mut layers = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let words = words_of_length(n, k);
            let index = words.iter().enumerate().map(|(i, w)| (w.clone(), i)).collect();
            let cands = &by_layer[k];
            let duals = &by_layer[n - k];
            if cands.len() != duals.len() {
                return Err(AlgebraError::Layer {
                    layer: k,
                    reason: format!("{} candidates against {} in the dual layer", cands.len(), duals.len()),
                });
            }
            let projector = if cands.is_empty() {
                Matrix::zeros(0, words.len())
            } else {
                let gram = Matrix::from_rows(
                    duals.iter().map(|(_, d)| cands.iter().map(|(_, c)| top_pairing(d, c)).collect()).collect(),
                );
                let inv = gram.inverse().ok_or_else(|| AlgebraError::Layer {
                    layer: k,
                    reason: "pairing against the dual layer is degenerate".into(),
                })?;
                let word_elems: Vec<Element> = words
                    .iter()
                    .map(|w| {
                        let mut m = Monomial::one(ctx);
                        m.odd = w.clone();
                        Element::monomial(ctx, m)
                    })
                    .collect();
                let rhs = Matrix::from_rows(
                    duals.iter().map(|(_, d)| word_elems.iter().map(|w| top_pairing(d, w)).collect()).collect(),
                );
                inv.mul(&rhs)
            };
            layers.push(Layer { index, candidates: cands.iter().map(|(c, _)| c.clone()).collect(), projector });
        }
        Ok(Kind::Graded { pieces, offsets, define_slot, layers })
    }

    pub fn presentation(&self) -> &Presentation {
        &self.presentation
    }

    pub fn context(&self) -> &Arc<Context> {
        &self.presentation.context
    }

    pub fn structure(&self) -> Structure {
        match self.kind {
            Kind::Plain { .. } => Structure::Plain,
            Kind::Split { .. } => Structure::Split,
            Kind::Graded { .. } => Structure::Graded,
        }
    }

    fn check(&self, x: &Element) -> Result<(), AlgebraError> {
        if same_context(x.context(), self.context()) {
            Ok(())
        } else {
            Err(AlgebraError::ContextMismatch)
        }
    }

    /// Even quotient of a piece, or of the whole ring when there are no
    /// pieces.
    pub fn quotient(&self, label: Option<&str>) -> Option<&EvenQuotient> {
        match (&self.kind, label) {
            (Kind::Plain { quotient, .. }, None) => Some(quotient),
            (Kind::Split { pieces, .. }, Some(l)) | (Kind::Graded { pieces, .. }, Some(l)) => {
                let i = self.presentation.pieces.iter().position(|p| p.label == l)?;
                Some(&pieces[i])
            }
            _ => None,
        }
    }

    pub fn pieces(&self) -> Vec<PieceSummary> {
        match &self.kind {
            Kind::Plain { .. } => Vec::new(),
            Kind::Split { pieces, .. } | Kind::Graded { pieces, .. } => self
                .presentation
                .pieces
                .iter()
                .zip(pieces)
                .map(|(s, q)| PieceSummary {
                    label: s.label.clone(),
                    prefactors: s.prefactors.len(),
                    quotient_dimension: q.dimension().unwrap(),
                })
                .collect(),
        }
    }

    pub fn dimension(&self) -> Option<usize> {
        match &self.kind {
            Kind::Plain { quotient, words } => quotient.dimension().map(|d| d * words.len()),
            Kind::Split { basis, .. } => Some(basis.len()),
            Kind::Graded { pieces, .. } => Some(
                pieces
                    .iter()
                    .zip(&self.presentation.pieces)
                    .map(|(q, s)| q.dimension().unwrap() * s.prefactors.len())
                    .sum(),
            ),
        }
    }

    /// The canonical basis, in coordinate order.
    pub fn basis(&self) -> Option<Vec<Element>> {
        let ctx = self.context();
        let mono = |e: &Exponents| Element::monomial(ctx, Monomial::from_even(e.clone()));
        match &self.kind {
            Kind::Plain { quotient, words } => {
                let b = quotient.basis()?;
                let mut out = Vec::new();
                for w in words {
                    for e in b {
                        out.push(Element::monomial(ctx, Monomial { even: e.clone(), odd: w.clone() }));
                    }
                }
                Some(out)
            }
            Kind::Split { basis, .. } => Some(basis.iter().map(mono).collect()),
            Kind::Graded { pieces, .. } => {
                let mut out = Vec::new();
                for (q, spec) in pieces.iter().zip(&self.presentation.pieces) {
                    for f in &spec.prefactors {
                        for e in q.basis().unwrap() {
                            out.push(f * &mono(e));
                        }
                    }
                }
                Some(out)
            }
        }
    }

    /// Coordinates in [`basis`](Self::basis).
    pub fn coordinates(&self, x: &Element) -> Result<Vec<Scalar>, AlgebraError> {
        self.check(x)?;
        match &self.kind {
            Kind::Plain { quotient, words } => {
                let dim = quotient.dimension().ok_or(AlgebraError::InfiniteQuotient)?;
                let mut out = vec![Scalar::zero(); dim * words.len()];
                for (wi, w) in words.iter().enumerate() {
                    let part = x.filter(|m| &m.odd == w);
                    if part.is_zero() {
                        continue;
                    }
                    let c = quotient.coordinates(&to_poly(quotient.order(), &strip_odd(&part))).unwrap();
                    out[wi * dim..(wi + 1) * dim].clone_from_slice(&c);
                }
                Ok(out)
            }
            Kind::Split { pieces, solve, .. } => {
                let order = pieces.first().map(|q| q.order().clone()).unwrap_or_else(|| MonomialOrder::new(Vec::new()));
                let poly = to_poly(&order, x);
                let v: Vec<Scalar> = pieces.iter().flat_map(|q| q.coordinates(&poly).unwrap()).collect();
                Ok(solve.mul_vec(&v))
            }
            Kind::Graded { pieces, offsets, define_slot, layers } => {
                let mut buckets: BTreeMap<(usize, usize), BTreeMap<Exponents, Scalar>> = BTreeMap::new();
                for (m, c) in x.terms() {
                    let layer = &layers[m.odd.len()];
                    let w = layer.index[&m.odd];
                    for (ci, cand) in layer.candidates.iter().enumerate() {
                        let t = &layer.projector[(ci, w)];
                        if t.is_zero() {
                            continue;
                        }
                        let mut e = m.even.clone();
                        if let Some(s) = define_slot {
                            e[*s] += cand.power;
                        }
                        let slot = buckets.entry((cand.piece, cand.prefactor)).or_default();
                        *slot.entry(e).or_insert_with(Scalar::zero) += c * t;
                    }
                }
                let mut out = vec![Scalar::zero(); self.dimension().unwrap()];
                for ((pi, fi), map) in buckets {
                    let q = &pieces[pi];
                    let dim = q.dimension().unwrap();
                    let c = q.coordinates(&Poly::from_map(q.order(), map)).unwrap();
                    let start = offsets[pi] + fi * dim;
                    out[start..start + dim].clone_from_slice(&c);
                }
                Ok(out)
            }
        }
    }

    pub fn from_coordinates(&self, coords: &[Scalar]) -> Option<Element> {
        let basis = self.basis()?;
        let parts: Vec<(Scalar, Element)> = coords.iter().cloned().zip(basis).filter(|(c, _)| !c.is_zero()).collect();
        Some(Element::linear_combination(self.context(), &parts))
    }

    pub fn normal_form(&self, x: &Element) -> Result<Element, AlgebraError> {
        self.check(x)?;
        if let Kind::Plain { quotient, .. } = &self.kind {
            if quotient.dimension().is_none() {
                // no finite basis: reduce each odd word's coefficient polynomial
                let ctx = self.context();
                let mut words: BTreeMap<Vec<u16>, Element> = BTreeMap::new();
                for (m, c) in x.terms() {
                    words
                        .entry(m.odd.clone())
                        .or_insert_with(|| Element::zero(ctx))
                        .add_term(Monomial::from_even(m.even.clone()), c.clone());
                }
                let mut out = Element::zero(ctx);
                for (w, part) in words {
                    let r = quotient.reduce(&to_poly(quotient.order(), &part));
                    for (e, c) in r.terms {
                        out.add_term(Monomial { even: e, odd: w.clone() }, c);
                    }
                }
                return Ok(out);
            }
        }
        let c = self.coordinates(x)?;
        Ok(self.from_coordinates(&c).expect("finite basis"))
    }
}

fn strip_odd(x: &Element) -> Element {
    let ctx = x.context();
    let mut out = Element::zero(ctx);
    for (m, c) in x.terms() {
        out.add_term(Monomial::from_even(m.even.clone()), c.clone());
    }
    out
}

fn greedy_basis(
    order: &MonomialOrder,
    nvars: usize,
    target: usize,
    image: &dyn Fn(&Exponents) -> Vec<Scalar>,
) -> Result<Vec<Exponents>, AlgebraError> {
    let max_weight = order.weights.iter().copied().max().unwrap_or(1).max(1) * (target as u32 + 1) * 2;
    let mut chosen: Vec<Exponents> = Vec::new();
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for w in 0..=max_weight {
        for e in monomials_of_weight(order, nvars, w) {
            if chosen.len() == target {
                return Ok(chosen);
            }
            let mut trial = rows.clone();
            trial.push(image(&e));
            if Matrix::from_rows(trial.clone()).rank() == trial.len() {
                rows = trial;
                chosen.push(e);
            }
        }
        if chosen.len() == target {
            return Ok(chosen);
        }
    }
    Err(AlgebraError::NotABasis { where_: String::new(), size: chosen.len(), rank: chosen.len(), dimension: target })
}

/// All exponent vectors of the given weight, in increasing term order.
pub(crate) fn monomials_of_weight(order: &MonomialOrder, nvars: usize, w: u32) -> Vec<Exponents> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; nvars];
    fn rec(order: &MonomialOrder, k: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Exponents>) {
        if k == cur.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let wk = order.weights[k];
        if wk == 0 {
            // weight-zero variables would make the slice infinite
            cur[k] = 0;
            rec(order, k + 1, left, cur, out);
            return;
        }
        for e in 0..=left / wk {
            cur[k] = e;
            rec(order, k + 1, left - e * wk, cur, out);
        }
        cur[k] = 0;
    }
    rec(order, 0, w, &mut cur, &mut out);
    out.sort_by(|a, b| order.cmp(a, b));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse, GeneratorSpec, PieceSpec};
    use crate::scalar::int;

    fn abc() -> Arc<Context> {
        Context::new(vec![
            GeneratorSpec::even("alpha", 2),
            GeneratorSpec::even("beta", 4),
            GeneratorSpec::even("gamma", 6),
        ])
        .unwrap()
    }

    #[test]
    fn empty_relations_give_identity() {
        let c = abc();
        let e = ReductionEngine::build(&Presentation::new(c.clone())).unwrap();
        let x = parse(&c, "alpha^7 - 3*beta*gamma").unwrap();
        assert_eq!(e.normal_form(&x).unwrap(), x);
        assert_eq!(e.dimension(), None);
    }

    #[test]
    fn split_presentation_crt() {
        let c = abc();
        let piece = |label: &str, rels: &[&str]| PieceSpec {
            label: label.into(),
            prefactors: vec![Element::one(&c)],
            relations: rels.iter().map(|r| parse(&c, r).unwrap()).collect(),
            basis: None,
        };
        let mut p = Presentation::new(c.clone());
        p.pieces = vec![
            piece("m", &["alpha - 4", "beta + 8", "gamma"]),
            piece("z", &["alpha^2", "beta - 8", "gamma + 16*alpha"]),
            piece("p", &["alpha + 4", "beta + 8", "gamma"]),
        ];
        p.basis = Some(
            ["1", "alpha", "beta", "gamma"]
                .iter()
                .map(|s| parse(&c, s).unwrap().terms().keys().next().unwrap().clone())
                .collect(),
        );
        let e = ReductionEngine::build(&p).unwrap();
        assert_eq!(e.dimension(), Some(4));
        // alpha^2 vanishes on the middle factor and is 16 on the outer ones
        let nf = e.normal_form(&parse(&c, "alpha^2").unwrap()).unwrap();
        let check = e.coordinates(&(&nf - &parse(&c, "alpha^2").unwrap())).unwrap();
        assert!(check.iter().all(Zero::is_zero));
        assert_eq!(e.normal_form(&nf).unwrap(), nf);
    }

    #[test]
    fn declared_basis_rank_report() {
        let c = abc();
        let mut p = Presentation::with_relations(
            c.clone(),
            ["alpha^2", "beta", "gamma"].iter().map(|r| parse(&c, r).unwrap()).collect(),
        );
        let one = Monomial::one(&c);
        p.basis = Some(vec![one.clone(), one]);
        match ReductionEngine::build(&p) {
            Err(AlgebraError::NotABasis { rank, dimension, .. }) => {
                assert_eq!(rank, 1);
                assert_eq!(dimension, 2);
            }
            other => panic!("unexpected {:?}", other.map(|_| ())),
        }
    }

    #[test]
    fn odd_words_in_a_free_odd_ring() {
        let c = Context::new(vec![
            GeneratorSpec::even("h", 2),
            GeneratorSpec::odd("phi1", 1),
            GeneratorSpec::odd("phi2", 1),
        ])
        .unwrap();
        let p = Presentation::with_relations(c.clone(), vec![parse(&c, "h^2").unwrap()]);
        let e = ReductionEngine::build(&p).unwrap();
        assert_eq!(e.dimension(), Some(8));
        let x = parse(&c, "h^3*phi1 + h*phi2*phi1").unwrap();
        assert_eq!(e.normal_form(&x).unwrap(), parse(&c, "-h*phi1*phi2").unwrap());
        assert_eq!(e.coordinates(&parse(&c, "3").unwrap()).unwrap()[0], int(3));
    }
}
