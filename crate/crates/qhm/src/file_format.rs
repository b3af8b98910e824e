//! Line-oriented presentation files.
//!
//! ```text
//! # comment
//! genus 3
//! kind quantum
//! generator alpha degree=2 parity=even
//! generator psi1 degree=3 parity=odd
//! define gamma = -2*psi1*psi4 - 2*psi2*psi5 - 2*psi3*psi6
//! relation alpha^2 + beta
//! basis 1,alpha
//! piece H3 prefactors=psi1,psi2
//! relation alpha
//! ```
//!
//! `relation` and `basis` lines before the first `piece` belong to the
//! whole presentation, later ones to the most recent piece. Generators
//! must be declared before any expression.

use std::fmt::Write as _;
use std::path::Path;
use std::sync::Arc;

use qhm_core::algebra::expr::format_monomial;
use qhm_core::algebra::{format, parse, Context, Element, GeneratorSpec, Monomial, Parity, PieceSpec, Presentation};
use qhm_core::presentations::{GenusData, PresentationError, RingKind, SurfaceAlgebra};

#[derive(Debug, thiserror::Error)]
pub enum FileError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Invalid(#[from] PresentationError),
}

fn perr(line: usize, message: impl Into<String>) -> FileError {
    FileError::Parse { line, message: message.into() }
}

/// Writes `data` in the file format.
pub fn export(data: &GenusData) -> String {
    let p = &data.presentation;
    let ctx = &p.context;
    let mut out = String::new();
    writeln!(out, "genus {}", data.genus).unwrap();
    writeln!(out, "kind {}", data.kind.name()).unwrap();
    for g in ctx.generators() {
        let parity = match g.parity {
            Parity::Even => "even",
            Parity::Odd => "odd",
        };
        writeln!(out, "generator {} degree={} parity={}", g.name, g.degree, parity).unwrap();
    }
    for (i, d) in &p.defines {
        writeln!(out, "define {} = {}", ctx.generators()[*i].name, format(d)).unwrap();
    }
    write_body(&mut out, ctx, &p.relations, p.basis.as_deref());
    for piece in &p.pieces {
        let pre: Vec<String> = piece.prefactors.iter().map(format).collect();
        writeln!(out, "piece {} prefactors={}", piece.label, pre.join(",")).unwrap();
        write_body(&mut out, ctx, &piece.relations, piece.basis.as_deref());
    }
    out
}

fn write_body(out: &mut String, ctx: &Context, relations: &[Element], basis: Option<&[Monomial]>) {
    for r in relations {
        writeln!(out, "relation {}", format(r)).unwrap();
    }
    if let Some(b) = basis {
        let names: Vec<String> = b.iter().map(|m| format_monomial(ctx, m)).collect();
        writeln!(out, "basis {}", names.join(",")).unwrap();
    }
}

/// Parses the file format without validating the ring.
pub fn parse_text(text: &str) -> Result<GenusData, FileError> {
    let mut genus = None;
    let mut kind = None;
    let mut specs: Vec<GeneratorSpec> = Vec::new();
    let mut ctx: Option<Arc<Context>> = None;
    let mut p: Option<Presentation> = None;
    let mut defines = Vec::new();

    for (n, raw) in text.lines().enumerate() {
        let line_no = n + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (key, rest) = line.split_once(char::is_whitespace).map_or((line, ""), |(k, r)| (k, r.trim()));
        match key {
            "genus" => {
                let g: u32 = rest.parse().map_err(|_| perr(line_no, format!("bad genus '{}'", rest)))?;
                genus = Some(g);
            }
            "kind" => {
                kind =
                    Some(RingKind::from_name(rest).ok_or_else(|| perr(line_no, format!("unknown kind '{}'", rest)))?);
            }
            "generator" => {
                if ctx.is_some() {
                    return Err(perr(line_no, "generators must precede expressions"));
                }
                let spec = parse_generator(rest).map_err(|m| perr(line_no, m))?;
                if specs.iter().any(|s| s.name == spec.name) {
                    return Err(perr(line_no, format!("generator '{}' declared twice", spec.name)));
                }
                specs.push(spec);
            }
            "define" | "relation" | "basis" | "piece" => {
                let c = match &ctx {
                    Some(c) => c.clone(),
                    None => {
                        let c = Context::new(specs.clone()).map_err(|e| perr(line_no, e.to_string()))?;
                        p = Some(Presentation::new(c.clone()));
                        ctx = Some(c.clone());
                        c
                    }
                };
                let pres = p.as_mut().expect("created with the context");
                let expr = |t: &str| parse(&c, t).map_err(|e| perr(line_no, e.to_string()));
                match key {
                    "define" => {
                        let (name, body) =
                            rest.split_once('=').ok_or_else(|| perr(line_no, "expected 'define <name> = <expr>'"))?;
                        let name = name.trim();
                        let g =
                            c.index_of(name).ok_or_else(|| perr(line_no, format!("unknown generator '{}'", name)))?;
                        defines.push((g, expr(body)?));
                    }
                    "relation" => {
                        let r = expr(rest)?;
                        match pres.pieces.last_mut() {
                            Some(piece) => piece.relations.push(r),
                            None => pres.relations.push(r),
                        }
                    }
                    "basis" => {
                        let mut monos = Vec::new();
                        for t in rest.split(',') {
                            monos.push(
                                basis_monomial(&expr(t)?)
                                    .ok_or_else(|| perr(line_no, format!("'{}' is not a monomial", t.trim())))?,
                            );
                        }
                        let slot = match pres.pieces.last_mut() {
                            Some(piece) => &mut piece.basis,
                            None => &mut pres.basis,
                        };
                        if slot.is_some() {
                            return Err(perr(line_no, "basis given twice"));
                        }
                        *slot = Some(monos);
                    }
                    _ => {
                        let (label, pre) = rest.split_once(char::is_whitespace).unwrap_or((rest, ""));
                        let list = pre
                            .trim()
                            .strip_prefix("prefactors=")
                            .ok_or_else(|| perr(line_no, "expected 'piece <label> prefactors=<expr,...>'"))?;
                        if pres.pieces.iter().any(|q| q.label == label) {
                            return Err(perr(line_no, format!("piece '{}' declared twice", label)));
                        }
                        let prefactors = list.split(',').map(expr).collect::<Result<Vec<_>, _>>()?;
                        pres.pieces.push(PieceSpec {
                            label: label.into(),
                            prefactors,
                            relations: Vec::new(),
                            basis: None,
                        });
                    }
                }
            }
            _ => return Err(perr(line_no, format!("unknown directive '{}'", key))),
        }
    }

    let genus = genus.ok_or_else(|| perr(0, "missing 'genus' line"))?;
    let kind = kind.ok_or_else(|| perr(0, "missing 'kind' line"))?;
    let mut presentation = match p {
        Some(p) => p,
        None => Presentation::new(Context::new(specs).map_err(|e| perr(0, e.to_string()))?),
    };
    presentation.defines = defines;
    Ok(GenusData { genus, kind, presentation, normalization: SurfaceAlgebra::new(genus).normalization() })
}

fn parse_generator(rest: &str) -> Result<GeneratorSpec, String> {
    let mut parts = rest.split_whitespace();
    let name = parts.next().ok_or("expected 'generator <name> degree=<n> parity=<even|odd>'")?;
    let (mut degree, mut parity) = (None, None);
    for field in parts {
        match field.split_once('=') {
            Some(("degree", v)) => degree = Some(v.parse::<u32>().map_err(|_| format!("bad degree '{}'", v))?),
            Some(("parity", "even")) => parity = Some(Parity::Even),
            Some(("parity", "odd")) => parity = Some(Parity::Odd),
            _ => return Err(format!("unexpected field '{}'", field)),
        }
    }
    let degree = degree.ok_or("missing degree=")?;
    Ok(match parity.ok_or("missing parity=")? {
        Parity::Even => GeneratorSpec::even(name, degree),
        Parity::Odd => GeneratorSpec::odd(name, degree),
    })
}

fn basis_monomial(x: &Element) -> Option<Monomial> {
    let mut terms = x.terms().iter();
    match (terms.next(), terms.next()) {
        (Some((m, c)), None) if *c == qhm_core::scalar::int(1) => Some(m.clone()),
        _ => None,
    }
}

/// Parses and validates.
pub fn load_text(text: &str) -> Result<GenusData, FileError> {
    let data = parse_text(text)?;
    data.validate()?;
    Ok(data)
}

pub fn load_file(path: &Path) -> Result<GenusData, FileError> {
    let text =
        std::fs::read_to_string(path).map_err(|source| FileError::Io { path: path.display().to_string(), source })?;
    load_text(&text)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn same(a: &GenusData, b: &GenusData) -> bool {
        a.genus == b.genus && a.kind == b.kind && a.presentation == b.presentation && a.normalization == b.normalization
    }

    #[test]
    fn builtins_round_trip() {
        for (g, k) in [(3, RingKind::Classical), (3, RingKind::Quantum), (2, RingKind::Floer)] {
            let data = GenusData::builtin(g, k).unwrap();
            let text = export(&data);
            let back = load_text(&text).unwrap();
            assert!(same(&data, &back), "{}", text);
            assert_eq!(export(&back), text);
        }
    }

    #[test]
    fn redeclared_generator() {
        let text = "genus 2\nkind floer\ngenerator alpha degree=2 parity=even\ngenerator alpha degree=4 parity=even\n";
        match parse_text(text) {
            Err(FileError::Parse { line, message }) => {
                assert_eq!(line, 4);
                assert!(message.contains("declared twice"));
            }
            other => panic!("{:?}", other.map(|d| d.genus)),
        }
    }

    #[test]
    fn misindexed_gamma() {
        let mut text = String::from("genus 2\nkind classical\n");
        text.push_str("generator alpha degree=2 parity=even\ngenerator beta degree=4 parity=even\ngenerator gamma degree=6 parity=even\n");
        for i in 1..=4 {
            text.push_str(&format!("generator psi{} degree=3 parity=odd\n", i));
        }
        text.push_str("define gamma = -2*psi1*psi3\nrelation alpha\nrelation beta\nrelation gamma^2\n");
        match load_text(&text) {
            Err(FileError::Invalid(PresentationError::Invalid(m))) => assert!(m.contains("gamma"), "{}", m),
            other => panic!("{:?}", other.map(|d| d.genus)),
        }
    }

    #[test]
    fn syntax_errors_carry_line_numbers() {
        assert!(matches!(parse_text("genus x\n"), Err(FileError::Parse { line: 1, .. })));
        assert!(matches!(parse_text("genus 2\nfoo\n"), Err(FileError::Parse { line: 2, .. })));
        assert!(matches!(
            parse_text("genus 2\nkind floer\ngenerator a degree=2 parity=even\nrelation a +\n"),
            Err(FileError::Parse { line: 4, .. })
        ));
    }
}
