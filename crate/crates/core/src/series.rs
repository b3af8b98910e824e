//! The generating function `F(s, l, r) = D(exp(s alpha + l beta + r gamma))`
//! as exact Taylor tables, its closed forms for genus 2 and 3, and the
//! differential equations it satisfies.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::algebra::{format as format_element, AlgebraError, Element, Monomial};
use crate::evaluation::{EvalError, Evaluator};
use crate::presentations::{RingKind, SurfaceAlgebra};
use crate::scalar::{self, Scalar};

pub type Index = (u32, u32, u32);

/// Power series in `s, l, r` truncated above total degree `order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    pub order: u32,
    coeffs: BTreeMap<Index, Scalar>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Var {
    S,
    L,
    R,
}

fn unit(var: Var, n: u32) -> Index {
    match var {
        Var::S => (n, 0, 0),
        Var::L => (0, n, 0),
        Var::R => (0, 0, n),
    }
}

impl Series {
    pub fn zero(order: u32) -> Self {
        Series { order, coeffs: BTreeMap::new() }
    }

    pub fn constant(order: u32, c: Scalar) -> Self {
        let mut s = Series::zero(order);
        s.add_term((0, 0, 0), c);
        s
    }

    pub fn from_terms(order: u32, terms: &[(Index, Scalar)]) -> Self {
        let mut s = Series::zero(order);
        for (i, c) in terms {
            s.add_term(*i, c.clone());
        }
        s
    }

    /// `sum_n f(n) (k x)^n / n!` where `f` gives the sign pattern.
    fn univariate(order: u32, var: Var, k: &Scalar, f: impl Fn(u32) -> i64) -> Self {
        let mut s = Series::zero(order);
        for n in 0..=order {
            let w = f(n);
            if w != 0 {
                s.add_term(unit(var, n), scalar::int(w) * scalar::pow(k, n) / scalar::factorial(n));
            }
        }
        s
    }

    pub fn exp(order: u32, var: Var, k: &Scalar) -> Self {
        Self::univariate(order, var, k, |_| 1)
    }

    pub fn cosh(order: u32, var: Var, k: &Scalar) -> Self {
        Self::univariate(order, var, k, |n| if n % 2 == 0 { 1 } else { 0 })
    }

    pub fn sinh(order: u32, var: Var, k: &Scalar) -> Self {
        Self::univariate(order, var, k, |n| if n % 2 == 1 { 1 } else { 0 })
    }

    pub fn cos(order: u32, var: Var, k: &Scalar) -> Self {
        Self::univariate(order, var, k, |n| match n % 4 {
            0 => 1,
            2 => -1,
            _ => 0,
        })
    }

    pub fn sin(order: u32, var: Var, k: &Scalar) -> Self {
        Self::univariate(order, var, k, |n| match n % 4 {
            1 => 1,
            3 => -1,
            _ => 0,
        })
    }

    pub fn add_term(&mut self, i: Index, c: Scalar) {
        if i.0 + i.1 + i.2 > self.order || c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(i).or_insert_with(Scalar::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&i);
        }
    }

    pub fn coefficient(&self, a: u32, b: u32, c: u32) -> Scalar {
        self.coeffs.get(&(a, b, c)).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn terms(&self) -> &BTreeMap<Index, Scalar> {
        &self.coeffs
    }

    pub fn add(&self, other: &Series) -> Series {
        let mut out = Series { order: self.order.min(other.order), coeffs: BTreeMap::new() };
        for (i, c) in self.coeffs.iter().chain(&other.coeffs) {
            out.add_term(*i, c.clone());
        }
        out
    }

    pub fn scale(&self, k: &Scalar) -> Series {
        let mut out = Series::zero(self.order);
        for (i, c) in &self.coeffs {
            out.add_term(*i, c * k);
        }
        out
    }

    pub fn mul(&self, other: &Series) -> Series {
        let mut out = Series::zero(self.order.min(other.order));
        for (i, c) in &self.coeffs {
            for (j, d) in &other.coeffs {
                out.add_term((i.0 + j.0, i.1 + j.1, i.2 + j.2), c * d);
            }
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Wave {
    One,
    Sinh,
    Cosh,
    Sin,
    Cos,
}

/// `coefficient * wave(freq s) * poly(s, l, r) * exp(rate l)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedTerm {
    pub coefficient: Scalar,
    pub wave: Wave,
    pub freq: Scalar,
    pub poly: Vec<(Index, Scalar)>,
    pub rate: Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedForm {
    pub genus: u32,
    pub terms: Vec<ClosedTerm>,
}

fn term(coefficient: Scalar, wave: Wave, freq: i64, poly: &[(Index, Scalar)], rate: i64) -> ClosedTerm {
    ClosedTerm { coefficient, wave, freq: scalar::int(freq), poly: poly.to_vec(), rate: scalar::int(rate) }
}

fn one() -> Vec<(Index, Scalar)> {
    alloc::vec![((0, 0, 0), Scalar::one())]
}

/// Known closed forms of `F` for genus 2 and 3.
pub fn closed_form(genus: u32) -> Result<ClosedForm, EvalError> {
    use scalar::{int, ratio};
    let terms = match genus {
        2 => alloc::vec![
            term(ratio(-1, 16), Wave::Sinh, 4, &one(), -8),
            term(ratio(-1, 4), Wave::One, 0, &[((0, 0, 1), int(16)), ((1, 0, 0), int(-1))], 8),
        ],
        3 => alloc::vec![
            term(ratio(1, 2048), Wave::Cos, 8, &one(), 8),
            term(ratio(3, 128), Wave::Cosh, 4, &one(), -8),
            term(ratio(-1, 32), Wave::Sinh, 4, &[((1, 0, 0), int(1)), ((0, 0, 1), int(12))], -8),
            term(ratio(-1, 32), Wave::Cosh, 4, &[((0, 1, 0), int(-4))], -8),
            term(
                int(-1),
                Wave::One,
                0,
                &[
                    ((0, 0, 0), ratio(49, 2048)),
                    ((0, 1, 0), ratio(-1, 4)),
                    ((0, 0, 2), int(12)),
                    ((1, 0, 1), ratio(-3, 2)),
                    ((2, 0, 0), ratio(3, 64)),
                    ((0, 2, 0), int(1)),
                ],
                8,
            ),
        ],
        _ => return Err(EvalError::Unsupported { genus, ring: "closed form" }),
    };
    Ok(ClosedForm { genus, terms })
}

impl ClosedForm {
    pub fn taylor(&self, order: u32) -> Series {
        let mut total = Series::zero(order);
        for t in &self.terms {
            let wave = match t.wave {
                Wave::One => Series::constant(order, Scalar::one()),
                Wave::Sinh => Series::sinh(order, Var::S, &t.freq),
                Wave::Cosh => Series::cosh(order, Var::S, &t.freq),
                Wave::Sin => Series::sin(order, Var::S, &t.freq),
                Wave::Cos => Series::cos(order, Var::S, &t.freq),
            };
            let poly = Series::from_terms(order, &t.poly);
            let e = Series::exp(order, Var::L, &t.rate);
            total = total.add(&wave.mul(&poly).mul(&e).scale(&t.coefficient));
        }
        total
    }

    pub fn table(&self, order: u32) -> SeriesTable {
        let s = self.taylor(order);
        SeriesTable::from_fn(self.genus, order, |a, b, c| s.coefficient(a, b, c))
    }
}

fn fmt_scalar_factor(f: &mut fmt::Formatter<'_>, c: &Scalar) -> fmt::Result {
    if c.is_integer() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "({}/{})", c.numer(), c.denom())
    }
}

impl fmt::Display for ClosedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, t) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            fmt_scalar_factor(f, &t.coefficient)?;
            let name = match t.wave {
                Wave::One => None,
                Wave::Sinh => Some("sinh"),
                Wave::Cosh => Some("cosh"),
                Wave::Sin => Some("sin"),
                Wave::Cos => Some("cos"),
            };
            if let Some(name) = name {
                write!(f, "*{}({}*s)", name, t.freq)?;
            }
            if t.poly != one() {
                write!(f, "*(")?;
                for (k, ((a, b, c), v)) in t.poly.iter().enumerate() {
                    if k > 0 {
                        write!(f, " + ")?;
                    }
                    fmt_scalar_factor(f, v)?;
                    for (var, e) in [("s", a), ("l", b), ("r", c)] {
                        match e {
                            0 => {}
                            1 => write!(f, "*{}", var)?,
                            _ => write!(f, "*{}^{}", var, e)?,
                        }
                    }
                }
                write!(f, ")")?;
            }
            write!(f, "*exp({}*l)", t.rate)?;
        }
        Ok(())
    }
}

/// `F_abc` for `a + b + c <= order`, zeros included.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesTable {
    pub genus: u32,
    pub order: u32,
    pub values: BTreeMap<Index, Scalar>,
}

/// Indices with `a + b + c <= order`, graded by total degree.
pub fn indices(order: u32) -> Vec<Index> {
    let mut out = Vec::new();
    for n in 0..=order {
        for a in (0..=n).rev() {
            for b in (0..=n - a).rev() {
                out.push((a, b, n - a - b));
            }
        }
    }
    out
}

fn factorials(i: Index) -> Scalar {
    scalar::factorial(i.0) * scalar::factorial(i.1) * scalar::factorial(i.2)
}

impl SeriesTable {
    fn from_fn(genus: u32, order: u32, mut f: impl FnMut(u32, u32, u32) -> Scalar) -> Self {
        let values = indices(order).into_iter().map(|(a, b, c)| ((a, b, c), f(a, b, c))).collect();
        SeriesTable { genus, order, values }
    }

    pub fn get(&self, a: u32, b: u32, c: u32) -> Scalar {
        self.values.get(&(a, b, c)).cloned().unwrap_or_else(Scalar::zero)
    }

    /// `D(alpha^a beta^b gamma^c) = a! b! c! F_abc`.
    pub fn invariant(&self, i: Index) -> Scalar {
        self.get(i.0, i.1, i.2) * factorials(i)
    }
}

fn invariant_monomial(ev: &Evaluator, i: Index) -> Element {
    let ctx = ev.context();
    let mut e = alloc::vec![0; ctx.even_count()];
    e[ctx.even_slot("alpha").expect("surface")] = i.0;
    e[ctx.even_slot("beta").expect("surface")] = i.1;
    e[ctx.even_slot("gamma").expect("surface")] = i.2;
    Element::monomial(ctx, Monomial::from_even(e))
}

/// Exact Taylor table of `F` from the evaluator.
pub fn series_table(ev: &Evaluator, order: u32) -> Result<SeriesTable, EvalError> {
    let mut err = None;
    let t = SeriesTable::from_fn(ev.genus(), order, |a, b, c| match ev.donaldson(&invariant_monomial(ev, (a, b, c))) {
        Ok(v) => v / factorials((a, b, c)),
        Err(e) => {
            err.get_or_insert(e);
            Scalar::zero()
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(t),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub index: Index,
    pub left: Scalar,
    pub right: Scalar,
}

/// Entrywise comparison of two tables over the smaller order.
pub fn compare_tables(left: &SeriesTable, right: &SeriesTable) -> Vec<Mismatch> {
    indices(left.order.min(right.order))
        .into_iter()
        .filter_map(|(a, b, c)| {
            let (l, r) = (left.get(a, b, c), right.get(a, b, c));
            (l != r).then_some(Mismatch { index: (a, b, c), left: l, right: r })
        })
        .collect()
}

/// Evaluator table against the closed form.
pub fn compare(ev: &Evaluator, order: u32) -> Result<Vec<Mismatch>, EvalError> {
    let table = series_table(ev, order)?;
    Ok(compare_tables(&table, &closed_form(ev.genus())?.table(order)))
}

/// Entries violating the initial conditions: `F_abc = 0` for
/// `a + b + c < g` except `F_{0,0,g-1} = -2^(g-1) g! / (g-1)!`.
pub fn initial_condition_failures(table: &SeriesTable) -> Vec<Mismatch> {
    let g = table.genus;
    let mut out = Vec::new();
    for (a, b, c) in indices(g.saturating_sub(1).min(table.order)) {
        let want = if (a, b, c) == (0, 0, g - 1) {
            -SurfaceAlgebra::new(g).normalization() / scalar::factorial(g - 1)
        } else {
            Scalar::zero()
        };
        let got = table.get(a, b, c);
        if got != want {
            out.push(Mismatch { index: (a, b, c), left: got, right: want });
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum PdeError {
    #[error("relation is not in the ideal; its normal form is {0}")]
    NotARelation(String),
    #[error("relation must be written in alpha, beta, gamma")]
    NotInvariant,
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PdeReport {
    /// Operators actually applied, as polynomials in alpha, beta, gamma
    /// standing for the partial derivatives in s, l, r.
    pub operators: Vec<Element>,
    pub checked: usize,
    pub failures: Vec<(Index, Scalar)>,
}

fn exponents(ev: &Evaluator, m: &Monomial) -> Index {
    let ctx = ev.context();
    let e = |n: &str| m.even[ctx.even_slot(n).expect("surface")];
    (e("alpha"), e("beta"), e("gamma"))
}

/// `R(i alpha, -beta, -i gamma)` split into rational real and imaginary
/// parts.
pub fn twist(r: &Element) -> (Element, Element) {
    let ctx = r.context();
    let (sa, sb, sc) = (ctx.even_slot("alpha"), ctx.even_slot("beta"), ctx.even_slot("gamma"));
    let get = |m: &Monomial, s: Option<usize>| s.map(|k| m.even[k]).unwrap_or(0) as i64;
    let mut re = Element::zero(ctx);
    let mut im = Element::zero(ctx);
    for (m, c) in r.terms() {
        let (a, b, cc) = (get(m, sa), get(m, sb), get(m, sc));
        let sign = scalar::sign(b + cc + (a + cc) / 2);
        let target = if (a + cc) % 2 == 0 { &mut re } else { &mut im };
        target.add_term(m.clone(), c * sign);
    }
    (re, im)
}

/// Applies `R(d/ds, d/dl, d/dr)` to the truncated series and checks that
/// every coefficient it determines vanishes. The relation is checked
/// against the Floer ring when present; otherwise it must lie in the
/// quantum ideal and is carried over by [`twist`].
pub fn pde_check(ev: &Evaluator, relation: &Element, order: u32) -> Result<PdeReport, PdeError> {
    let r = relation.transfer(ev.context())?;
    if r.terms().keys().any(|m| !m.odd.is_empty()) {
        return Err(PdeError::NotInvariant);
    }
    let kind = if ev.engine(RingKind::Floer).is_some() { RingKind::Floer } else { RingKind::Quantum };
    let engine = ev.engine(kind).ok_or(EvalError::Unsupported { genus: ev.genus(), ring: kind.name() })?;
    let nf = engine.normal_form(&r.transfer(engine.context())?)?;
    if !nf.is_zero() {
        return Err(PdeError::NotARelation(format_element(&nf)));
    }
    let operators: Vec<Element> = if kind == RingKind::Floer {
        alloc::vec![r]
    } else {
        let (re, im) = twist(&r);
        [re, im].into_iter().filter(|e| !e.is_zero()).collect()
    };
    let table = series_table(ev, order)?;
    let mut checked = 0;
    let mut failures = Vec::new();
    for op in &operators {
        let terms: Vec<(Index, Scalar)> = op.terms().iter().map(|(m, c)| (exponents(ev, m), c.clone())).collect();
        let weight = terms.iter().map(|(i, _)| i.0 + i.1 + i.2).max().unwrap_or(0);
        if weight > order {
            continue;
        }
        for at in indices(order - weight) {
            let mut v = Scalar::zero();
            for (i, c) in &terms {
                v += c * table.invariant((at.0 + i.0, at.1 + i.1, at.2 + i.2));
            }
            checked += 1;
            if !v.is_zero() {
                failures.push((at, v / factorials(at)));
            }
        }
    }
    Ok(PdeReport { operators, checked, failures })
}

/// Checks `Psi~(alpha^a beta^b gamma^c) = (-1)^((g+1)/2) i^a (-1)^b (-i)^c
/// D(alpha^a beta^b gamma^c)` for odd `g`, with `D` read from the closed
/// form and `Psi~` from the quantum ring.
pub fn psi_series_relation(ev: &Evaluator, order: u32) -> Result<Vec<Mismatch>, EvalError> {
    let g = ev.genus();
    if g.is_multiple_of(2) {
        return Err(EvalError::Unsupported { genus: g, ring: "odd-genus relation" });
    }
    let closed = closed_form(g)?.table(order);
    let mut out = Vec::new();
    for (a, b, c) in indices(order) {
        let psi = ev.tilde_psi(&invariant_monomial(ev, (a, b, c)))?;
        let d = closed.invariant((a, b, c));
        let expected = if (a + c) % 2 == 1 {
            Scalar::zero()
        } else {
            let e = (g as i64 + 1) / 2 + b as i64 + c as i64 + (a as i64 + c as i64) / 2;
            scalar::sign(e) * d
        };
        if psi != expected {
            out.push(Mismatch { index: (a, b, c), left: psi, right: expected });
        }
    }
    Ok(out)
}

/// `d/dr F_g = 2g F_{g-1}` coefficientwise up to `order`.
pub fn genus_step_series(upper: &SeriesTable, lower: &SeriesTable) -> Vec<Mismatch> {
    let g = upper.genus;
    let order = lower.order.min(upper.order.saturating_sub(1));
    indices(order)
        .into_iter()
        .filter_map(|(a, b, c)| {
            let l = upper.get(a, b, c + 1) * scalar::int(c as i64 + 1);
            let r = lower.get(a, b, c) * scalar::int(2 * g as i64);
            (l != r).then_some(Mismatch { index: (a, b, c), left: l, right: r })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};

    #[test]
    fn closed_form_coefficients() {
        let t2 = closed_form(2).unwrap().table(6);
        assert_eq!(t2.get(0, 0, 1), int(-4));
        assert_eq!(t2.get(0, 1, 0), int(0));
        let t3 = closed_form(3).unwrap().table(6);
        assert_eq!(t3.get(6, 0, 0), ratio(-14, 45));
        assert_eq!(t3.get(0, 0, 2), int(-12));
    }

    #[test]
    fn trig_series() {
        let k = int(2);
        let c = Series::cos(6, Var::S, &k);
        let s = Series::sin(6, Var::S, &k);
        let one = c.mul(&c).add(&s.mul(&s));
        assert_eq!(one, Series::constant(6, int(1)));
        let ch = Series::cosh(6, Var::S, &k);
        let sh = Series::sinh(6, Var::S, &k);
        assert_eq!(ch.mul(&ch).add(&sh.mul(&sh).scale(&int(-1))), Series::constant(6, int(1)));
    }

    #[test]
    fn genus_two_matches_closed_form() {
        let ev = Evaluator::new(2).unwrap();
        assert!(compare(&ev, 8).unwrap().is_empty());
        assert!(initial_condition_failures(&series_table(&ev, 3).unwrap()).is_empty());
    }

    #[test]
    fn twist_of_cubic_relation() {
        let inv = SurfaceAlgebra::invariant_context();
        let q = crate::algebra::parse(&inv, "gamma*alpha^2 + gamma*beta + 8*gamma").unwrap();
        let (re, im) = twist(&q);
        assert!(re.is_zero());
        assert_eq!(im, crate::algebra::parse(&inv, "gamma*alpha^2 + gamma*beta - 8*gamma").unwrap());
    }

    #[test]
    fn rejects_non_relation() {
        let ev = Evaluator::new(2).unwrap();
        let inv = SurfaceAlgebra::invariant_context();
        let r = crate::algebra::parse(&inv, "alpha").unwrap();
        assert!(matches!(pde_check(&ev, &r, 4), Err(PdeError::NotARelation(_))));
    }

    #[test]
    fn genus_three_checks() {
        let ev = Evaluator::new(3).unwrap();
        let t3 = series_table(&ev, 10).unwrap();
        assert_eq!(compare_tables(&t3, &closed_form(3).unwrap().table(10)), Vec::new());
        assert!(initial_condition_failures(&t3).is_empty());
        assert_eq!(psi_series_relation(&ev, 8).unwrap(), Vec::new());
        let t2 = series_table(&Evaluator::new(2).unwrap(), 9).unwrap();
        assert_eq!(genus_step_series(&t3, &t2), Vec::new());
        let q = ev.parse("gamma*alpha^2 + gamma*beta + 8*gamma").unwrap();
        let report = pde_check(&ev, &q, 10).unwrap();
        assert!(report.checked > 0);
        assert!(report.failures.is_empty());
    }
}
