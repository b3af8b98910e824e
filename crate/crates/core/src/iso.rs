//! The genus-3 isomorphism between classical and quantum cohomology.
//!
//! Each quantum product of two generators is written as its cup product
//! plus unknown multiples of classical basis classes of lower degree. The
//! unknowns are fixed by degree-one invariants of `N`, by the pairing
//! identities `<u, v> = Psi~(u v)` and by the two degree-two invariants.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::algebra::{format as format_element, AlgebraError, Degree, Element};
use crate::degree_one::Restriction;
use crate::degree_two::RRing;
use crate::evaluation::{EvalError, Evaluator};
use crate::linalg::{Matrix, Solution as LinearSolution};
use crate::presentations::RingKind;
use crate::scalar::{self, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Unknown {
    A(u8),
    B(u8),
    C,
    /// Constants of the `psi_i beta` and `psi_i gamma` lines.
    N(u8),
}

impl fmt::Display for Unknown {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Unknown::A(i) => write!(f, "A{}", i),
            Unknown::B(i) => write!(f, "B{}", i),
            Unknown::C => write!(f, "C"),
            Unknown::N(i) => write!(f, "N{}", i),
        }
    }
}

impl Unknown {
    pub fn all() -> Vec<Unknown> {
        let mut v: Vec<Unknown> = (1..=10).map(Unknown::A).collect();
        v.extend((1..=5).map(Unknown::B));
        v.push(Unknown::C);
        v.extend([Unknown::N(1), Unknown::N(2)]);
        v
    }

    pub fn from_name(s: &str) -> Option<Unknown> {
        Unknown::all().into_iter().find(|u| format!("{}", u) == s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// `Psi_A(x, y, z)` against the ansatz for `x * y`.
    DegreeOne { x: String, y: String, z: String },
    /// `<u, v> = Psi~(u v)` for quantum basis elements.
    Pairing { u: String, v: String },
    /// One of the two degree-two invariants.
    DegreeTwo(&'static str),
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::DegreeOne { x, y, z } => write!(f, "degree-1 GW ({}, {}, {})", x, y, z),
            Provenance::Pairing { u, v } => write!(f, "pairing <{}, {}>", u, v),
            Provenance::DegreeTwo(s) => write!(f, "degree-2 input {}", s),
        }
    }
}

/// `constant + sum coefficient * unknown`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Affine {
    pub constant: Scalar,
    pub linear: BTreeMap<Unknown, Scalar>,
}

impl Affine {
    pub fn constant(c: Scalar) -> Self {
        Affine { constant: c, linear: BTreeMap::new() }
    }

    pub fn var(u: Unknown) -> Self {
        let mut a = Affine::default();
        a.linear.insert(u, Scalar::one());
        a
    }

    pub fn is_constant(&self) -> bool {
        self.linear.is_empty()
    }

    fn add_scaled(&mut self, other: &Affine, k: &Scalar) {
        self.constant += &other.constant * k;
        for (u, c) in &other.linear {
            let slot = self.linear.entry(*u).or_insert_with(Scalar::zero);
            *slot += c * k;
            if slot.is_zero() {
                self.linear.remove(u);
            }
        }
    }

    fn scale(&self, k: &Scalar) -> Affine {
        let mut out = Affine::default();
        out.add_scaled(self, k);
        out
    }

    /// Replaces known unknowns by their values.
    pub fn substitute(&self, values: &BTreeMap<Unknown, Scalar>) -> Affine {
        let mut out = Affine::constant(self.constant.clone());
        for (u, c) in &self.linear {
            match values.get(u) {
                Some(v) => out.constant += c * v,
                None => {
                    out.linear.insert(*u, c.clone());
                }
            }
        }
        out
    }

    fn mul(&self, other: &Affine) -> Result<Affine, IsoError> {
        if !self.is_constant() && !other.is_constant() {
            return Err(IsoError::NonLinear);
        }
        let mut out = self.scale(&other.constant);
        let mut extra = other.scale(&self.constant);
        extra.constant = Scalar::zero();
        out.add_scaled(&extra, &Scalar::one());
        Ok(out)
    }

    pub fn evaluate(&self, values: &BTreeMap<Unknown, Scalar>) -> Option<Scalar> {
        let mut v = self.constant.clone();
        for (u, c) in &self.linear {
            v += c * values.get(u)?;
        }
        Some(v)
    }
}

impl fmt::Display for Affine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (u, c) in &self.linear {
            let s = scalar::display(c);
            match (first, s.strip_prefix('-')) {
                (true, _) => write!(f, "{}*{}", s, u)?,
                (false, Some(rest)) => write!(f, " - {}*{}", rest, u)?,
                (false, None) => write!(f, " + {}*{}", s, u)?,
            }
            first = false;
        }
        if first {
            write!(f, "{}", scalar::display(&self.constant))
        } else if !self.constant.is_zero() {
            let s = scalar::display(&self.constant);
            match s.strip_prefix('-') {
                Some(rest) => write!(f, " - {}", rest),
                None => write!(f, " + {}", s),
            }
        } else {
            Ok(())
        }
    }
}

/// `lhs = rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Equation {
    pub lhs: Affine,
    pub rhs: Scalar,
    pub provenance: Provenance,
}

/// `x * y = x ∪ y + sum unknown * class`.
#[derive(Clone, Debug, PartialEq)]
pub struct AnsatzLine {
    pub x: Element,
    pub y: Element,
    pub corrections: Vec<(Unknown, Element)>,
}

impl AnsatzLine {
    pub fn word(&self) -> Element {
        &self.x * &self.y
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum IsoError {
    #[error("a pairing equation is not linear in the remaining unknowns")]
    NonLinear,
    #[error("unknowns not determined (rank {rank}): {free}")]
    NotDetermined { rank: usize, free: String },
    #[error("inconsistent system; offending equation: {0}")]
    Inconsistent(String),
    #[error("singular matrix in {0}")]
    Singular(&'static str),
    #[error("class {0} is not homogeneous")]
    Inhomogeneous(String),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reference {
    /// Constants derived one by one in the worked computation.
    Derivation,
    /// Constants as they appear in the final table.
    Statement,
}

impl Reference {
    pub fn name(self) -> &'static str {
        match self {
            Reference::Derivation => "derivation",
            Reference::Statement => "statement",
        }
    }

    pub fn values(self) -> BTreeMap<Unknown, Scalar> {
        let a = [0, 4, -12, -8, -3, -3, -20, -12, 8, -6];
        let b = [0, -1, 24, -24, -1];
        let mut m: BTreeMap<Unknown, Scalar> = BTreeMap::new();
        for (i, v) in a.iter().enumerate() {
            m.insert(Unknown::A(i as u8 + 1), scalar::int(*v));
        }
        for (i, v) in b.iter().enumerate() {
            m.insert(Unknown::B(i as u8 + 1), scalar::int(*v));
        }
        m.insert(Unknown::C, scalar::int(-8));
        m.insert(Unknown::N(1), scalar::int(-4));
        m.insert(Unknown::N(2), scalar::int(-4));
        if self == Reference::Statement {
            m.insert(Unknown::A(3), scalar::int(16));
        }
        m
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Discrepancy {
    pub unknown: Unknown,
    pub solved: Scalar,
    pub reference: Reference,
    pub expected: Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub degree_one_rank: usize,
    pub pairing_rank: usize,
    pub equations: usize,
    /// `(equation index, lhs - rhs)` for every equation not satisfied.
    pub residuals: Vec<(usize, Scalar)>,
    pub discrepancies: Vec<Discrepancy>,
}

/// Forward and inverse basis change, quantum coordinates to classical.
#[derive(Clone, Debug)]
pub struct IsoTable {
    pub quantum_basis: Vec<Element>,
    pub classical_basis: Vec<Element>,
    pub forward: Matrix,
    pub inverse: Matrix,
    /// `(label, start, length)` of each block.
    pub blocks: Vec<(String, usize, usize)>,
}

/// The solved isomorphism for genus 3.
#[derive(Clone, Debug)]
pub struct Iso {
    pub evaluator: Evaluator,
    pub restriction: Restriction,
    pub lines: Vec<AnsatzLine>,
    pub equations: Vec<Equation>,
    pub values: BTreeMap<Unknown, Scalar>,
    pub report: Report,
    pub table: IsoTable,
    gram: Matrix,
    gram_inverse: Matrix,
}

fn degree(x: &Element) -> Result<u32, IsoError> {
    match x.degree() {
        Degree::Homogeneous(d) => Ok(d),
        Degree::Any => Ok(0),
        Degree::Mixed => Err(IsoError::Inhomogeneous(format_element(x))),
    }
}

fn ansatz(ev: &Evaluator) -> Vec<AnsatzLine> {
    let p = |t: &str| ev.parse(t).expect("built-in");
    type Line<'a> = (&'a str, &'a str, &'a [(Unknown, &'a str)]);
    let inv: [Line; 6] = [
        ("alpha", "alpha", &[(Unknown::A(1), "1")]),
        ("alpha", "beta", &[(Unknown::A(2), "alpha")]),
        ("beta", "beta", &[(Unknown::A(3), "beta"), (Unknown::A(4), "alpha^2"), (Unknown::B(1), "1")]),
        ("alpha", "gamma", &[(Unknown::A(5), "beta"), (Unknown::A(6), "alpha^2"), (Unknown::B(2), "1")]),
        ("beta", "gamma", &[(Unknown::A(7), "gamma"), (Unknown::A(8), "alpha*beta"), (Unknown::B(3), "alpha")]),
        (
            "gamma",
            "gamma",
            &[
                (Unknown::A(9), "alpha*gamma"),
                (Unknown::A(10), "beta^2"),
                (Unknown::B(4), "alpha^2"),
                (Unknown::B(5), "beta"),
                (Unknown::C, "1"),
            ],
        ),
    ];
    let mut lines: Vec<AnsatzLine> = inv
        .iter()
        .map(|(x, y, c)| AnsatzLine { x: p(x), y: p(y), corrections: c.iter().map(|(u, t)| (*u, p(t))).collect() })
        .collect();
    for i in 1..=6 {
        let psi = p(&format!("psi{}", i));
        lines.push(AnsatzLine { x: psi.clone(), y: p("alpha"), corrections: Vec::new() });
        lines.push(AnsatzLine { x: psi.clone(), y: p("beta"), corrections: alloc::vec![(Unknown::N(1), psi.clone())] });
        lines.push(AnsatzLine {
            x: psi.clone(),
            y: p("gamma"),
            corrections: alloc::vec![(Unknown::N(2), &psi * &p("alpha"))],
        });
    }
    for i in 1..=6 {
        for j in i + 1..=6 {
            lines.push(AnsatzLine { x: p(&format!("psi{}", i)), y: p(&format!("psi{}", j)), corrections: Vec::new() });
        }
    }
    lines
}

fn solve(equations: &[&Equation], label: &'static str) -> Result<(BTreeMap<Unknown, Scalar>, usize), IsoError> {
    let unknowns: Vec<Unknown> = {
        let mut v: Vec<Unknown> = equations.iter().flat_map(|e| e.lhs.linear.keys().copied()).collect();
        v.sort();
        v.dedup();
        v
    };
    if unknowns.is_empty() {
        return Ok((BTreeMap::new(), 0));
    }
    let rows: Vec<Vec<Scalar>> = equations
        .iter()
        .map(|e| unknowns.iter().map(|u| e.lhs.linear.get(u).cloned().unwrap_or_else(Scalar::zero)).collect())
        .collect();
    let rhs: Vec<Scalar> = equations.iter().map(|e| &e.rhs - &e.lhs.constant).collect();
    let m = Matrix::from_rows(rows);
    let rank = m.rank();
    match m.solve(&rhs) {
        LinearSolution::Unique(x) => Ok((unknowns.into_iter().zip(x).collect(), rank)),
        LinearSolution::Underdetermined { free, .. } => {
            let names: Vec<String> = free.iter().map(|&i| format!("{}", unknowns[i])).collect();
            Err(IsoError::NotDetermined { rank, free: names.join(", ") })
        }
        LinearSolution::Inconsistent { row } => {
            let e = equations[row];
            Err(IsoError::Inconsistent(format!(
                "[{}] {} = {} ({})",
                label,
                e.lhs,
                scalar::display(&e.rhs),
                e.provenance
            )))
        }
    }
}

impl Iso {
    /// Assembles and solves the system, then builds the basis change.
    pub fn solve() -> Result<Self, IsoError> {
        let evaluator = Evaluator::new(3)?;
        let restriction = Restriction::new();
        let lines = ansatz(&evaluator);
        let classical =
            evaluator.engine(RingKind::Classical).ok_or(EvalError::Unsupported { genus: 3, ring: "classical" })?;
        let quantum =
            evaluator.engine(RingKind::Quantum).ok_or(EvalError::Unsupported { genus: 3, ring: "quantum" })?;
        let ctx = evaluator.context().clone();
        let classical_basis: Vec<Element> =
            classical.basis().expect("finite").iter().map(|b| b.transfer(&ctx)).collect::<Result<_, _>>()?;
        let quantum_basis: Vec<Element> =
            quantum.basis().expect("finite").iter().map(|b| b.transfer(&ctx)).collect::<Result<_, _>>()?;
        let n = classical_basis.len();
        let degrees: Vec<u32> = classical_basis.iter().map(degree).collect::<Result<_, _>>()?;

        let mut gram = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                if degrees[i] + degrees[j] == 12 {
                    let v = evaluator.classical_pairing(&classical_basis[i], &classical_basis[j])?;
                    gram[(j, i)] = v.clone();
                    gram[(i, j)] = v;
                }
            }
        }
        let gram_inverse = gram.inverse().ok_or(IsoError::Singular("classical Gram matrix"))?;

        let coords = |x: &Element| classical.coordinates(&x.transfer(classical.context())?);
        // degree-one equations
        let mut equations = Vec::new();
        for line in &lines {
            let d = degree(&line.word())?;
            if d > 16 {
                continue;
            }
            for (zi, z) in classical_basis.iter().enumerate() {
                if degrees[zi] != 16 - d {
                    continue;
                }
                let mut lhs = Affine::default();
                for (u, c) in &line.corrections {
                    let v = evaluator.classical_pairing(c, z)?;
                    lhs.add_scaled(&Affine::var(*u), &v);
                }
                let rhs = restriction.gw_degree1(&line.x, &line.y, z)?;
                if lhs.is_constant() && rhs.is_zero() {
                    continue;
                }
                equations.push(Equation {
                    lhs,
                    rhs,
                    provenance: Provenance::DegreeOne {
                        x: format_element(&line.x),
                        y: format_element(&line.y),
                        z: format_element(z),
                    },
                });
            }
        }
        let first: Vec<&Equation> = equations.iter().filter(|e| !e.lhs.is_constant()).collect();
        let (mut values, degree_one_rank) = solve(&first, "degree one")?;

        // classical coordinates of each quantum basis element, affine in the unknowns
        let mut expansions: Vec<Vec<Affine>> = Vec::with_capacity(n);
        for q in &quantum_basis {
            let mut e = vec_affine(&coords(q)?);
            if let Some(line) = lines.iter().find(|l| l.word() == *q) {
                for (u, c) in &line.corrections {
                    for (k, v) in coords(c)?.iter().enumerate() {
                        if !v.is_zero() {
                            e[k].add_scaled(&Affine::var(*u), v);
                        }
                    }
                }
            }
            expansions.push(e);
        }

        // pairing equations
        let qdeg: Vec<u32> = quantum_basis.iter().map(degree).collect::<Result<_, _>>()?;
        let pairing_start = equations.len();
        for i in 0..n {
            for j in i..n {
                let d = qdeg[i] + qdeg[j];
                if d < 12 || !(d - 12).is_multiple_of(4) {
                    continue;
                }
                let lhs = pair_affine(&gram, &expansions[i], &expansions[j], &values)?;
                let rhs = evaluator.tilde_psi(&(&quantum_basis[i] * &quantum_basis[j]))?;
                if lhs.is_constant() && lhs.constant.is_zero() && rhs.is_zero() {
                    continue;
                }
                equations.push(Equation {
                    lhs,
                    rhs,
                    provenance: Provenance::Pairing {
                        u: format_element(&quantum_basis[i]),
                        v: format_element(&quantum_basis[j]),
                    },
                });
            }
        }
        let r = RRing::new();
        let normalization = evaluator.classical_pairing(&evaluator.parse("1")?, &evaluator.parse("gamma^2")?)?;
        equations.push(Equation {
            lhs: Affine::var(Unknown::B(1)).scale(&normalization),
            rhs: r.psi2a_beta_beta_pt(),
            provenance: Provenance::DegreeTwo("Psi_2A(beta, beta, pt)"),
        });
        equations.push(Equation {
            lhs: Affine::var(Unknown::B(2)).scale(&normalization),
            rhs: r.psi2a_alpha_gamma_pt(),
            provenance: Provenance::DegreeTwo("Psi_2A(alpha, gamma, pt)"),
        });
        let second: Vec<&Equation> = equations[pairing_start..].iter().filter(|e| !e.lhs.is_constant()).collect();
        let (more, pairing_rank) = solve(&second, "pairings")?;
        values.extend(more);

        let mut residuals = Vec::new();
        for (k, e) in equations.iter().enumerate() {
            let lhs = e.lhs.substitute(&values);
            if !lhs.is_constant() {
                let free: Vec<String> = lhs.linear.keys().map(|u| format!("{}", u)).collect();
                return Err(IsoError::NotDetermined { rank: pairing_rank, free: free.join(", ") });
            }
            let r = &lhs.constant - &e.rhs;
            if !r.is_zero() {
                residuals.push((k, r));
            }
        }

        let mut discrepancies = Vec::new();
        for reference in [Reference::Derivation, Reference::Statement] {
            for (u, expected) in reference.values() {
                if let Some(solved) = values.get(&u) {
                    if *solved != expected {
                        discrepancies.push(Discrepancy { unknown: u, solved: solved.clone(), reference, expected });
                    }
                }
            }
        }

        let mut forward = Matrix::zeros(n, n);
        for (j, e) in expansions.iter().enumerate() {
            for (i, a) in e.iter().enumerate() {
                forward[(i, j)] = a.evaluate(&values).expect("all unknowns solved");
            }
        }
        let inverse = forward.inverse().ok_or(IsoError::Singular("basis change"))?;
        let blocks = classical
            .pieces()
            .iter()
            .scan(0, |start, p| {
                let len = p.prefactors * p.quotient_dimension;
                let out = (p.label.clone(), *start, len);
                *start += len;
                Some(out)
            })
            .collect();
        let table = IsoTable { quantum_basis, classical_basis, forward, inverse, blocks };
        let report = Report { degree_one_rank, pairing_rank, equations: equations.len(), residuals, discrepancies };
        Ok(Iso { evaluator, restriction, lines, equations, values, report, table, gram, gram_inverse })
    }

    pub fn value(&self, u: Unknown) -> Option<&Scalar> {
        self.values.get(&u)
    }

    fn classical_coords(&self, x: &Element) -> Result<Vec<Scalar>, IsoError> {
        let e = self.evaluator.engine(RingKind::Classical).expect("solved");
        Ok(e.coordinates(&x.transfer(e.context())?)?)
    }

    fn quantum_coords(&self, x: &Element) -> Result<Vec<Scalar>, IsoError> {
        let e = self.evaluator.engine(RingKind::Quantum).expect("solved");
        Ok(e.coordinates(&x.transfer(e.context())?)?)
    }

    fn combine(&self, basis: &[Element], coords: &[Scalar]) -> Element {
        let parts: Vec<(Scalar, Element)> =
            coords.iter().cloned().zip(basis.iter().cloned()).filter(|(c, _)| !c.is_zero()).collect();
        Element::linear_combination(self.evaluator.context(), &parts)
    }

    /// The classical class of a quantum element, written with cup
    /// products.
    pub fn to_classical(&self, quantum: &Element) -> Result<Element, IsoError> {
        let c = self.table.forward.mul_vec(&self.quantum_coords(quantum)?);
        Ok(self.combine(&self.table.classical_basis, &c))
    }

    /// The quantum word representing a classical class.
    pub fn to_quantum(&self, classical: &Element) -> Result<Element, IsoError> {
        let q = self.table.inverse.mul_vec(&self.classical_coords(classical)?);
        Ok(self.combine(&self.table.quantum_basis, &q))
    }

    /// Right-hand side of the table line for a quantum basis element.
    pub fn line(&self, quantum: &Element) -> Result<Element, IsoError> {
        self.to_classical(quantum)
    }

    /// `x * y` for classical classes, from `<x * y, e_m> = Psi~` and the
    /// inverse Gram matrix.
    pub fn quantum_product(&self, x: &Element, y: &Element) -> Result<Element, IsoError> {
        let xy = self.to_quantum(x)?.try_mul(&self.to_quantum(y)?)?;
        let n = self.table.classical_basis.len();
        let mut rhs = Vec::with_capacity(n);
        for m in 0..n {
            let dual = self.combine(&self.table.quantum_basis, &self.table.inverse.column(m));
            rhs.push(self.evaluator.tilde_psi(&xy.try_mul(&dual)?)?);
        }
        let c = self.gram_inverse.mul_vec(&rhs);
        Ok(self.combine(&self.table.classical_basis, &c))
    }

    /// `x * y` by multiplying quantum words and mapping back.
    pub fn quantum_product_forward(&self, x: &Element, y: &Element) -> Result<Element, IsoError> {
        let xy = self.to_quantum(x)?.try_mul(&self.to_quantum(y)?)?;
        self.to_classical(&xy)
    }

    /// `<x * y, z>` for classical classes.
    pub fn gw3_classical(&self, x: &Element, y: &Element, z: &Element) -> Result<Scalar, IsoError> {
        Ok(self.evaluator.classical_pairing(&self.quantum_product(x, y)?, z)?)
    }

    /// `Psi_dA(z_1, ..., z_r)` for classical classes; zero unless the
    /// degrees add up to `12 + 4d`.
    pub fn gw_multipoint_classical(&self, classes: &[Element], d: u32) -> Result<Scalar, IsoError> {
        let mut total = 0;
        for c in classes {
            total += degree(c)?;
        }
        if total != 12 + 4 * d {
            return Ok(Scalar::zero());
        }
        let mut product = Element::one(self.evaluator.context());
        for c in classes {
            product = product.try_mul(&self.to_quantum(c)?)?;
        }
        Ok(self.evaluator.tilde_psi(&product)?)
    }

    /// Classical Gram matrix on the classical basis.
    pub fn gram(&self) -> &Matrix {
        &self.gram
    }
}

fn vec_affine(v: &[Scalar]) -> Vec<Affine> {
    v.iter().map(|c| Affine::constant(c.clone())).collect()
}

fn pair_affine(
    gram: &Matrix,
    u: &[Affine],
    v: &[Affine],
    values: &BTreeMap<Unknown, Scalar>,
) -> Result<Affine, IsoError> {
    let u: Vec<Affine> = u.iter().map(|a| a.substitute(values)).collect();
    let v: Vec<Affine> = v.iter().map(|a| a.substitute(values)).collect();
    let mut out = Affine::default();
    for (i, a) in u.iter().enumerate() {
        if a.is_constant() && a.constant.is_zero() {
            continue;
        }
        for (j, b) in v.iter().enumerate() {
            let g = &gram[(i, j)];
            if g.is_zero() || (b.is_constant() && b.constant.is_zero()) {
                continue;
            }
            out.add_scaled(&a.mul(b)?, g);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    #[test]
    fn affine_display() {
        let mut a = Affine::var(Unknown::B(3)).scale(&int(-48));
        a.constant = int(1152);
        assert_eq!(format!("{}", a), "-48*B3 + 1152");
        assert_eq!(Unknown::from_name("N2"), Some(Unknown::N(2)));
    }

    #[test]
    fn solves_constants() {
        let iso = Iso::solve().unwrap();
        let get = |u| iso.value(u).cloned().unwrap();
        let a: Vec<Scalar> = (1..=10).map(|i| get(Unknown::A(i))).collect();
        assert_eq!(a, [0, 4, -12, -8, -3, -3, -20, -12, 8, -6].map(int).to_vec());
        let b: Vec<Scalar> = (1..=5).map(|i| get(Unknown::B(i))).collect();
        assert_eq!(b, [0, -1, 24, -24, -1].map(int).to_vec());
        assert_eq!(get(Unknown::C), int(-8));
        assert_eq!(get(Unknown::N(1)), int(-4));
        assert_eq!(get(Unknown::N(2)), int(4));
        assert!(iso.report.residuals.is_empty());
        let flagged: Vec<(Unknown, Reference)> =
            iso.report.discrepancies.iter().map(|d| (d.unknown, d.reference)).collect();
        assert_eq!(
            flagged,
            [
                (Unknown::N(2), Reference::Derivation),
                (Unknown::A(3), Reference::Statement),
                (Unknown::N(2), Reference::Statement)
            ]
        );
    }

    #[test]
    fn table_and_products() {
        let iso = Iso::solve().unwrap();
        let p = |t: &str| iso.evaluator.parse(t).unwrap();
        assert_eq!(iso.line(&p("beta*gamma")).unwrap(), p("beta*gamma - 20*gamma - 12*alpha*beta + 24*alpha"));
        assert_eq!(iso.line(&p("beta^2")).unwrap(), p("beta^2 - 12*beta - 8*alpha^2"));
        let l = iso.line(&p("psi1*psi4")).unwrap();
        assert_eq!(iso.classical_coords(&l).unwrap(), iso.classical_coords(&p("psi1*psi4")).unwrap());
        let n = iso.table.forward.rows;
        assert_eq!(iso.table.forward.mul(&iso.table.inverse), Matrix::identity(n));
        let gg = p("gamma^2 + 8*gamma*alpha - 6*beta^2 - 24*alpha^2 - beta - 8");
        assert_eq!(iso.quantum_product(&p("gamma"), &p("gamma")).unwrap(), gg);
        assert_eq!(iso.quantum_product_forward(&p("gamma"), &p("gamma")).unwrap(), gg);
        assert_eq!(iso.quantum_product(&p("1"), &p("psi2*beta")).unwrap(), p("psi2*beta"));
        for (x, y) in [("psi1*alpha", "psi4*beta"), ("beta", "alpha*gamma"), ("psi2", "psi5*gamma")] {
            assert_eq!(iso.quantum_product(&p(x), &p(y)).unwrap(), iso.quantum_product_forward(&p(x), &p(y)).unwrap());
        }
        assert_eq!(iso.gw3_classical(&p("alpha"), &p("alpha"), &p("gamma^2")).unwrap(), int(0));
        assert_eq!(iso.gw3_classical(&p("1"), &p("alpha^3"), &p("gamma")).unwrap(), int(24));
        assert_eq!(iso.gw_multipoint_classical(&[p("alpha"), p("beta"), p("beta*gamma")], 1).unwrap(), int(-96));
        assert_eq!(iso.gw_multipoint_classical(&[p("alpha"), p("alpha"), p("gamma^2")], 1).unwrap(), int(0));
        let bg = p("beta*gamma");
        let total = iso.gw3_classical(&p("beta"), &p("gamma"), &iso.quantum_product(&p("beta"), &p("gamma")).unwrap());
        assert_eq!(total.unwrap(), iso.evaluator.tilde_psi(&p("beta^2*gamma^2")).unwrap());
        assert_eq!(iso.to_classical(&iso.to_quantum(&bg).unwrap()).unwrap(), bg);
    }
}
