//! The acceptance checks, numbered 1 to 11.

use std::collections::BTreeMap;
use std::fmt::Display;

use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use qhm_core::algebra::{Degree, Element, Monomial};
use qhm_core::degree_one::Restriction;
use qhm_core::degree_two::RRing;
use qhm_core::evaluation::Evaluator;
use qhm_core::iso::{Iso, Reference, Unknown};
use qhm_core::presentations::{fixtures, RingKind, SurfaceAlgebra, H3, L2H3, TRIVIAL};
use qhm_core::scalar::{self, int, Scalar};
use qhm_core::series::{
    closed_form, compare_tables, genus_step_series, indices, initial_condition_failures, psi_series_relation,
    series_table,
};

/// Result of one numbered criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub criterion: u8,
    pub title: &'static str,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn line(&self) -> String {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let mut s = format!("{} {:>2} {} ({} checks)", status, self.criterion, self.title, self.checked);
        if !self.passed() {
            s.push_str(": ");
            s.push_str(&self.failures.join("; "));
        }
        s
    }
}

#[derive(Default)]
struct Checker {
    checked: usize,
    failures: Vec<String>,
}

impl Checker {
    fn eq<T: PartialEq + Display>(&mut self, label: impl Display, got: T, want: T) {
        self.checked += 1;
        if got != want {
            self.failures.push(format!("{}: got {}, expected {}", label, got, want));
        }
    }

    fn scalar(&mut self, label: impl Display, got: Result<Scalar, impl Display>, want: i64) {
        match got {
            Ok(v) => self.eq(label, scalar::display(&v), scalar::display(&int(want))),
            Err(e) => self.fail(label, e),
        }
    }

    fn holds(&mut self, label: impl Display, ok: bool) {
        self.checked += 1;
        if !ok {
            self.failures.push(format!("{} does not hold", label));
        }
    }

    fn fail(&mut self, label: impl Display, e: impl Display) {
        self.checked += 1;
        self.failures.push(format!("{}: {}", label, e));
    }

    fn finish(self, criterion: u8, title: &'static str) -> Outcome {
        Outcome { criterion, title, checked: self.checked, failures: self.failures }
    }
}

pub const TITLES: [&str; 11] = [
    "top pairings",
    "noninvariant pairings",
    "quantum reduction facts",
    "quotient dimensions",
    "restriction tables",
    "degree-1 invariants",
    "solved constants",
    "degree-2 geometry",
    "series tables",
    "sign bridge",
    "properties",
];

/// Runs one criterion.
pub fn run(criterion: u8) -> Outcome {
    let mut c = Checker::default();
    let r = match criterion {
        1 => pairings(&mut c, false),
        2 => pairings(&mut c, true),
        3 => reduction_facts(&mut c),
        4 => dimensions(&mut c),
        5 => restriction_tables(&mut c),
        6 => degree_one(&mut c),
        7 => solved_constants(&mut c),
        8 => degree_two(&mut c),
        9 => series(&mut c),
        10 => sign_bridge(&mut c),
        11 => properties(&mut c),
        _ => Err(format!("no criterion {}", criterion)),
    };
    if let Err(e) = r {
        c.fail("setup", e);
    }
    c.finish(criterion, TITLES.get(criterion as usize - 1).copied().unwrap_or("unknown"))
}

/// All criteria, run concurrently and reported in order.
pub fn run_all() -> Vec<Outcome> {
    std::thread::scope(|s| {
        let handles: Vec<_> = (1..=11u8).map(|i| s.spawn(move || run(i))).collect();
        handles.into_iter().map(|h| h.join().expect("check thread")).collect()
    })
}

type Res = Result<(), String>;

fn evaluator(genus: u32) -> Result<Evaluator, String> {
    Evaluator::new(genus).map_err(|e| e.to_string())
}

fn pairings(c: &mut Checker, odd: bool) -> Res {
    let ev = evaluator(3)?;
    for f in fixtures(3).map_err(|e| e.to_string())? {
        if f.expression.contains("psi") != odd {
            continue;
        }
        let z = ev.parse(f.expression).map_err(|e| e.to_string())?;
        c.scalar(format!("<{}>", f.label), ev.pairing_value(&z, RingKind::Classical).map(|r| r.value), f.value);
    }
    Ok(())
}

fn reduction_facts(c: &mut Checker) -> Res {
    let ev = evaluator(3)?;
    let e = ev.engine(RingKind::Quantum).ok_or("no quantum ring")?;
    let nf =
        |t: &str| ev.parse(t).map_err(|e| e.to_string()).and_then(|x| e.normal_form(&x).map_err(|e| e.to_string()));
    c.eq("NF(gamma^3)", nf("gamma^3")?.to_string(), "0".to_string());
    let lhs = nf("gamma^2*beta^2")?;
    let rhs = nf("gamma^2")?.scale(&int(64));
    c.eq("NF(gamma^2 beta^2) vs 64 NF(gamma^2)", lhs.to_string(), rhs.to_string());
    Ok(())
}

fn dimensions(c: &mut Checker) -> Res {
    let ev = evaluator(3)?;
    for kind in [RingKind::Classical, RingKind::Quantum] {
        let e = ev.engine(kind).ok_or("missing ring")?;
        let dims: BTreeMap<String, usize> = e.pieces().into_iter().map(|p| (p.label, p.quotient_dimension)).collect();
        for (label, want) in [(TRIVIAL, 10), (H3, 6), (L2H3, 3)] {
            c.eq(format!("{} {} piece", kind.name(), label), dims.get(label).copied().unwrap_or(0), want);
        }
    }
    let g2 = evaluator(2)?;
    c.eq("genus-2 floer", g2.engine(RingKind::Floer).and_then(|e| e.dimension()).unwrap_or(0), 4);
    c.eq("R ring", RRing::new().engine().dimension().unwrap_or(0), 8);
    Ok(())
}

/// Restriction table: class and its image in `H*(N)`.
pub const RESTRICTIONS: [(&str, &str); 13] = [
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

fn restriction_tables(c: &mut Checker) -> Res {
    let r = Restriction::new();
    for (x, y) in RESTRICTIONS {
        let want = r.n.parse(y).map_err(|e| e.to_string())?;
        match r.restrict(&r.surface.parse(x)) {
            Ok(got) => c.eq(format!("{} restricted", x), got.to_string(), want.to_string()),
            Err(e) => c.fail(x, e),
        }
    }
    Ok(())
}

fn degree_one(c: &mut Checker) -> Res {
    let r = Restriction::new();
    let s = |t: &str| r.surface.parse(t);
    c.scalar("Psi_A(alpha, alpha, gamma^2)", r.gw_degree1(&s("alpha"), &s("alpha"), &s("gamma^2")), 0);
    c.scalar("Psi_A(alpha, beta, beta gamma)", r.gw_degree1(&s("alpha"), &s("beta"), &s("beta*gamma")), -96);
    let n = |t: &str| r.n.parse(t).map_err(|e| e.to_string());
    c.scalar(
        "Psi_N(-phi1 h, h^2, -8 phi4 omega^2 h^2)",
        r.n.psi_degree1(&n("-phi1*h")?, &n("h^2")?, &n("-8*phi4*omega^2*h^2")?),
        16,
    );
    Ok(())
}

fn solved_constants(c: &mut Checker) -> Res {
    let iso = Iso::solve().map_err(|e| e.to_string())?;
    let expected = Reference::Derivation.values();
    for u in Unknown::all() {
        let got = iso.value(u).map_or("undetermined".to_string(), scalar::display);
        c.eq(u, got, scalar::display(&expected[&u]));
    }
    c.eq("nonzero residuals", iso.report.residuals.len(), 0);
    c.holds(
        "A3 flagged against the final table",
        iso.report.discrepancies.iter().any(|d| d.unknown == Unknown::A(3) && d.reference == Reference::Statement),
    );
    let v = |u| iso.value(u).cloned().unwrap_or_else(Scalar::zero);
    let (b1, b2, b4, b5) = (v(Unknown::B(1)), v(Unknown::B(2)), v(Unknown::B(4)), v(Unknown::B(5)));
    c.eq("B2 + B4 - B5", scalar::display(&(&b2 + &b4 - &b5)), "-24".into());
    c.eq("B1 + 4/3 B4", scalar::display(&(b1 + scalar::ratio(4, 3) * &b4)), "-32".into());
    c.eq("C - 8 B5", scalar::display(&(v(Unknown::C) - int(8) * b5)), "0".into());
    Ok(())
}

fn degree_two(c: &mut Checker) -> Res {
    let r = RRing::new();
    let mu = r.mu_classes();
    c.scalar("pair_R(gamma_R)", r.pair(&mu.gamma), -12);
    let two_way = r.reduce(&r.parse("-6*(2*h + k)^2*f").map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    c.eq("gamma_R", two_way.to_string(), r.parse("-12*h*k*f").map_err(|e| e.to_string())?.to_string());
    c.eq("Psi_2A(alpha, gamma, pt)", scalar::display(&r.psi2a_alpha_gamma_pt()), "-24".into());
    c.eq("Psi_2A(beta, beta, pt)", scalar::display(&r.psi2a_beta_beta_pt()), "0".into());
    Ok(())
}

fn series(c: &mut Checker) -> Res {
    let e2 = evaluator(2)?;
    let e3 = evaluator(3)?;
    let mut tables = Vec::new();
    for ev in [&e2, &e3] {
        let g = ev.genus();
        let t = series_table(ev, 10).map_err(|e| e.to_string())?;
        let closed = closed_form(g).map_err(|e| e.to_string())?.table(10);
        c.eq(format!("genus {} coefficients compared", g), t.values.len(), 286);
        let bad = compare_tables(&t, &closed);
        c.eq(format!("genus {} closed-form mismatches", g), bad.len(), 0);
        let want = -SurfaceAlgebra::new(g).normalization() / scalar::factorial(g - 1);
        c.eq(format!("genus {} F(0,0,{})", g, g - 1), scalar::display(&t.get(0, 0, g - 1)), scalar::display(&want));
        c.eq(format!("genus {} initial conditions", g), initial_condition_failures(&t).len(), 0);
        tables.push(t);
    }
    c.eq("d/dr F3 - 6 F2 mismatches to order 9", genus_step_series(&tables[1], &tables[0]).len(), 0);
    Ok(())
}

fn sign_bridge(c: &mut Checker) -> Res {
    let ev = evaluator(3)?;
    let p = |t: &str| ev.parse(t).map_err(|e| e.to_string());
    c.scalar("Psi~(alpha^6)", ev.tilde_psi(&p("alpha^6")?), 224);
    c.scalar("D(alpha^6)", ev.donaldson(&p("alpha^6")?), -224);
    c.scalar("Psi~(gamma^2)", ev.tilde_psi(&p("gamma^2")?), 24);
    c.scalar("D(gamma^2)", ev.donaldson(&p("gamma^2")?), -24);
    let bad = psi_series_relation(&ev, 10).map_err(|e| e.to_string())?;
    c.eq("exponential sign identity mismatches to order 10", bad.len(), 0);
    Ok(())
}

fn random_monomial(ev: &Evaluator, rng: &mut StdRng) -> Element {
    let even = vec![rng.gen_range(0..5), rng.gen_range(0..4), rng.gen_range(0..3)];
    let word: Vec<u16> = (0..6).filter(|_| rng.gen_bool(0.3)).collect();
    let (sign, m) = Monomial::from_word(even, &word).expect("distinct letters");
    Element::term(ev.context(), int(sign as i64), m)
}

fn random_element(ev: &Evaluator, rng: &mut StdRng) -> Element {
    let mut x = Element::zero(ev.context());
    for _ in 0..rng.gen_range(1..5) {
        x = &x + &random_monomial(ev, rng).scale(&int(rng.gen_range(-5..=5)));
    }
    x
}

fn properties(c: &mut Checker) -> Res {
    let ev = evaluator(3)?;
    let mut rng = StdRng::seed_from_u64(11);
    let mut vanishing = 0;
    for _ in 0..100 {
        let m = random_monomial(&ev, &mut rng);
        let d = match m.degree() {
            Degree::Homogeneous(d) => d,
            _ => 0,
        };
        let v = ev.tilde_psi(&m).map_err(|e| e.to_string())?;
        if !d.is_multiple_of(4) || d < 12 {
            vanishing += 1;
            c.eq(format!("Psi~({}) off degree", m), scalar::display(&v), "0".into());
        }
    }
    c.holds("at least one off-degree sample", vanishing > 0);

    for kind in [RingKind::Classical, RingKind::Quantum] {
        for (m, ok) in brute_force_mismatches(&ev, kind)? {
            c.holds(format!("{} NF of {} matches linear algebra", kind.name(), m), ok);
        }
    }

    for kind in [RingKind::Classical, RingKind::Quantum] {
        let e = ev.engine(kind).ok_or("missing ring")?;
        for _ in 0..100 {
            let x = random_element(&ev, &mut rng);
            let y = random_element(&ev, &mut rng);
            let k = int(rng.gen_range(-5..=5));
            let nf = |z: &Element| e.normal_form(z).map_err(|e| e.to_string());
            let nx = nf(&x)?;
            c.eq(format!("{} NF idempotent on {}", kind.name(), x), nf(&nx)?.to_string(), nx.to_string());
            let lhs = nf(&(&x + &y.scale(&k)))?;
            let rhs = &nx + &nf(&y)?.scale(&k);
            c.eq(format!("{} NF linear on {}, {}", kind.name(), x, y), lhs.to_string(), rhs.to_string());
        }
    }

    let mut samples: Vec<Element> = Vec::new();
    for f in fixtures(3).map_err(|e| e.to_string())? {
        samples.push(ev.parse(f.expression).map_err(|e| e.to_string())?);
    }
    samples.extend((0..50).map(|_| random_element(&ev, &mut rng)));
    for z in &samples {
        for kind in [RingKind::Classical, RingKind::Quantum] {
            let a = ev.pairing_value(z, kind).map(|r| r.value).map_err(|e| e.to_string())?;
            let b = ev.pairing_value_piecewise(z, kind).map_err(|e| e.to_string())?;
            c.eq(format!("{} projection vs piecewise on {}", kind.name(), z), scalar::display(&a), scalar::display(&b));
        }
    }
    Ok(())
}

type Key = Vec<u32>;
type Vector = BTreeMap<Key, Scalar>;

/// Row space with each row's largest monomial as pivot.
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

fn even_monomials(max_weight: u32) -> Vec<Key> {
    indices(max_weight / 2).into_iter().map(|(a, b, c)| vec![a, b, c]).filter(|e| weight(e) <= max_weight).collect()
}

/// For every invariant monomial of weight at most 16: is `NF(m)` on the
/// declared basis, and is `m - NF(m)` a combination of `mono * relation`
/// within a bounded weight.
fn brute_force_mismatches(ev: &Evaluator, kind: RingKind) -> Result<Vec<(String, bool)>, String> {
    let engine = ev.engine(kind).ok_or("missing ring")?;
    let piece = engine.presentation().piece(TRIVIAL).ok_or("no trivial piece")?;
    let ctx = ev.context();
    let span_weight: u32 = match kind {
        RingKind::Classical => 16,
        _ => 24,
    };
    let mut span = Span::default();
    for r in &piece.relations {
        let top = r.terms().keys().map(|m| weight(&m.even)).max().unwrap_or(0);
        for m in even_monomials(span_weight.saturating_sub(top)) {
            let product = r * &Element::monomial(ctx, Monomial::from_even(m));
            span.insert(product.terms().iter().map(|(m, c)| (m.even.clone(), c.clone())).collect());
        }
    }
    let basis = piece.basis.clone().unwrap_or_default();
    let mut out = Vec::new();
    for m in even_monomials(16) {
        let x = Element::monomial(ctx, Monomial::from_even(m));
        let nf = engine.normal_form(&x).map_err(|e| e.to_string())?;
        let on_basis = nf.terms().keys().all(|k| basis.contains(k));
        let mut diff: Vector = (&x - &nf).terms().iter().map(|(m, c)| (m.even.clone(), c.clone())).collect();
        span.reduce(&mut diff);
        out.push((x.to_string(), on_basis && diff.is_empty()));
    }
    Ok(out)
}
