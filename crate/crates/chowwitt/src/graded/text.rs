//! Plain-text and JSON forms of presentations and polynomials.

use super::{Annihilator, Exps, Generator, Poly, RingPresentation, Twist};
use crate::error::{CwError, CwResult};
use crate::scalar::{grothendieck_witt, witt_ring, FieldModel, Scalar, ScalarLabel, ScalarRing};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::sync::Arc;

pub fn format_poly(p: &RingPresentation, x: &Poly) -> String {
    let mut out = String::new();
    for (e, s) in &x.terms {
        let mono = p.mono_name(e);
        for (si, c) in s.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut factors = Vec::new();
            let abs = c.abs();
            let has_more = si != 0 || mono != "1";
            if !abs.is_one() || !has_more {
                factors.push(abs.to_string());
            }
            if si != 0 {
                factors.push(p.scalar.names[si].clone());
            }
            if mono != "1" {
                factors.push(mono.clone());
            }
            let body = factors.join("*");
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            out.push_str(&body);
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Angle(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
}

fn tokenize(s: &str) -> CwResult<Vec<(usize, Tok)>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        match c {
            ' ' | '\t' => {
                i += 1;
                continue;
            }
            '+' => out.push((start, Tok::Plus)),
            '-' => out.push((start, Tok::Minus)),
            '*' => out.push((start, Tok::Star)),
            '^' => out.push((start, Tok::Caret)),
            '<' => {
                let close = chars[i..]
                    .iter()
                    .position(|&x| x == '>')
                    .ok_or(CwError::Syntax { pos: start, msg: "unterminated `<`".into() })?;
                let inner: String = chars[i..i + close + 1].iter().collect();
                out.push((start, Tok::Angle(inner)));
                i += close + 1;
                continue;
            }
            d if d.is_ascii_digit() => {
                let mut j = i;
                while j < chars.len() && chars[j].is_ascii_digit() {
                    j += 1;
                }
                let n: String = chars[i..j].iter().collect();
                out.push((start, Tok::Int(n.parse().expect("digits"))));
                i = j;
                continue;
            }
            a if a.is_ascii_alphabetic() || a == '_' => {
                let mut j = i;
                while j < chars.len() && (chars[j].is_ascii_alphanumeric() || chars[j] == '_') {
                    j += 1;
                }
                out.push((start, Tok::Ident(chars[i..j].iter().collect())));
                i = j;
                continue;
            }
            _ => return Err(CwError::Syntax { pos: start, msg: format!("unexpected character `{c}`") }),
        }
        i += 1;
    }
    Ok(out)
}

fn scalar_token(ring: &ScalarRing, name: &str) -> Option<Scalar> {
    if let Some(i) = ring.names.iter().position(|n| n == name) {
        return Some(ring.basis(i));
    }
    match name {
        "<1>" => Some(ring.one()),
        "<-1>" => Some(ring.minus_one.clone()),
        "h" => Some(ring.hyperbolic.clone()),
        _ => None,
    }
}

/// Parse a signed sum of terms `c*<a>*g^k*...`.
pub fn parse_poly(p: &RingPresentation, text: &str) -> CwResult<Poly> {
    let toks = tokenize(text)?;
    let end = text.chars().count();
    if toks.len() == 1 && toks[0].1 == Tok::Int(BigInt::zero()) {
        return Ok(Poly::zero());
    }
    let mut out = Poly::zero();
    let mut i = 0;
    let mut first = true;
    while i < toks.len() || first {
        let mut sign = BigInt::one();
        match toks.get(i) {
            Some((_, Tok::Plus)) => i += 1,
            Some((_, Tok::Minus)) => {
                sign = -sign;
                i += 1;
            }
            Some((pos, t)) if !first => {
                return Err(CwError::Syntax { pos: *pos, msg: format!("expected `+` or `-`, found {t:?}") })
            }
            None if !first => break,
            _ => {}
        }
        first = false;
        let mut coeff = sign;
        let mut scalar = p.scalar.one();
        let mut exps: Exps = vec![0; p.ngens()];
        let mut sign_flips = 0u32;
        let mut expect_factor = true;
        while expect_factor {
            let (pos, t) = toks.get(i).cloned().ok_or(CwError::Syntax { pos: end, msg: "expected a factor".into() })?;
            i += 1;
            match t {
                Tok::Int(n) => coeff *= n,
                Tok::Angle(a) => {
                    let s = scalar_token(&p.scalar, &a)
                        .ok_or(CwError::Syntax { pos, msg: format!("unknown scalar `{a}`") })?;
                    scalar = p.scalar.mul(&scalar, &s);
                }
                Tok::Ident(name) => {
                    let mut k = 1u32;
                    if let Some((_, Tok::Caret)) = toks.get(i) {
                        match toks.get(i + 1) {
                            Some((_, Tok::Int(n))) => {
                                k = n.to_string().parse().map_err(|_| CwError::Syntax { pos, msg: "exponent too large".into() })?;
                                i += 2;
                            }
                            Some((q, _)) => return Err(CwError::Syntax { pos: *q, msg: "expected an exponent".into() }),
                            None => return Err(CwError::Syntax { pos: end, msg: "expected an exponent".into() }),
                        }
                    }
                    if let Some(g) = p.gen_index(&name) {
                        let mut f = vec![0; p.ngens()];
                        f[g] = k;
                        let (flip, e) = p.mul_mono(&exps, &f);
                        if flip {
                            sign_flips += 1;
                        }
                        exps = e;
                    } else if let Some(s) = scalar_token(&p.scalar, &name) {
                        for _ in 0..k {
                            scalar = p.scalar.mul(&scalar, &s);
                        }
                    } else {
                        return Err(CwError::Syntax { pos, msg: format!("unknown generator `{name}`") });
                    }
                }
                other => return Err(CwError::Syntax { pos, msg: format!("expected a factor, found {other:?}") }),
            }
            expect_factor = matches!(toks.get(i), Some((_, Tok::Star)));
            if expect_factor {
                i += 1;
            }
        }
        if sign_flips % 2 == 1 {
            scalar = p.scalar.mul(&scalar, &p.scalar.minus_one);
        }
        out.add_term(exps, p.scalar.scale(&coeff, &scalar));
    }
    Ok(out)
}

fn ring_for(label: &str, field: &str) -> CwResult<Arc<ScalarRing>> {
    let field_model = || -> CwResult<FieldModel> {
        if field == "-" {
            Err(CwError::Format(format!("scalar ring {label} needs a field")))
        } else {
            FieldModel::parse(field)
        }
    };
    let ring = match label {
        "GW" => grothendieck_witt(&field_model()?)?,
        "W" => witt_ring(&field_model()?)?,
        "Z" => ScalarRing::integers(),
        "Z2" => ScalarRing::integers_mod2(),
        _ => return Err(CwError::Format(format!("unknown scalar ring `{label}`"))),
    };
    Ok(Arc::new(ring))
}

fn label_text(l: ScalarLabel) -> CwResult<String> {
    match l {
        ScalarLabel::Ibar(_) => Err(CwError::Format("Ibar scalar rings are not serialized".into())),
        other => Ok(other.to_string()),
    }
}

fn annihilator_text(p: &RingPresentation, a: &Annihilator) -> String {
    match a {
        Annihilator::None => "none".into(),
        Annihilator::FundamentalIdeal => "I".into(),
        Annihilator::Hyperbolic => "h".into(),
        Annihilator::Custom(v) => {
            let parts: Vec<String> = v.iter().map(|s| format_poly(p, &p.scalar_poly(s.clone()))).collect();
            format!("custom {}", parts.join("; "))
        }
    }
}

fn parse_annihilator(p: &RingPresentation, s: &str) -> CwResult<Annihilator> {
    match s {
        "none" => Ok(Annihilator::None),
        "I" => Ok(Annihilator::FundamentalIdeal),
        "h" => Ok(Annihilator::Hyperbolic),
        _ => {
            let rest = s.strip_prefix("custom").ok_or(CwError::Format(format!("unknown annihilator `{s}`")))?;
            let mut out = Vec::new();
            for part in rest.split(';') {
                let q = parse_poly(p, part.trim())?;
                let zero_exps = vec![0; p.ngens()];
                if q.terms.keys().any(|e| *e != zero_exps) {
                    return Err(CwError::Format("custom annihilator must be scalar".into()));
                }
                out.push(q.terms.get(&zero_exps).cloned().unwrap_or_else(|| p.scalar.zero()));
            }
            Ok(Annihilator::Custom(out))
        }
    }
}

fn field_text(p: &RingPresentation) -> String {
    p.scalar.field.as_ref().map(|f| f.code()).unwrap_or_else(|| "-".into())
}

pub fn to_text(p: &RingPresentation) -> String {
    let mut s = String::new();
    s.push_str(&format!("presentation {}\n", p.name));
    s.push_str(&format!("scalar {} {}\n", label_text(p.scalar.label).unwrap_or_else(|e| e.to_string()), field_text(p)));
    s.push_str(&format!("twists {}\n", p.twist_rank));
    s.push_str(&format!("commutation {}\n", if p.graded_commutative { "graded" } else { "plain" }));
    s.push_str(&format!("window {}\n", p.window));
    for g in &p.generators {
        s.push_str(&format!("gen {} {} {} {}\n", g.name, g.degree, g.twist.bits(), annihilator_text(p, &g.annihilator)));
    }
    for r in &p.relations {
        s.push_str(&format!("rel {}\n", format_poly(p, r)));
    }
    s
}

pub fn from_text(text: &str) -> CwResult<RingPresentation> {
    let mut name = None;
    let mut ring = None;
    let mut twists = None;
    let mut graded = true;
    let mut window = super::DEFAULT_WINDOW;
    let mut gens: Vec<(String, u32, Twist, String)> = Vec::new();
    let mut rels: Vec<String> = Vec::new();
    for (ln, line) in text.lines().enumerate() {
        let line = line.trim_end();
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = |m: &str| CwError::Format(format!("line {}: {m}", ln + 1));
        let (key, rest) = line.split_once(' ').ok_or_else(|| bad("missing value"))?;
        match key {
            "presentation" => name = Some(rest.to_string()),
            "scalar" => {
                let (l, f) = rest.split_once(' ').ok_or_else(|| bad("expected `scalar <ring> <field>`"))?;
                ring = Some(ring_for(l, f.trim())?);
            }
            "twists" => twists = Some(rest.trim().parse::<usize>().map_err(|_| bad("bad twist rank"))?),
            "commutation" => {
                graded = match rest.trim() {
                    "graded" => true,
                    "plain" => false,
                    _ => return Err(bad("commutation must be graded or plain")),
                }
            }
            "window" => window = rest.trim().parse().map_err(|_| bad("bad window"))?,
            "gen" => {
                let mut it = rest.splitn(4, ' ');
                let n = it.next().ok_or_else(|| bad("generator name"))?;
                let d = it.next().and_then(|x| x.parse().ok()).ok_or_else(|| bad("generator degree"))?;
                let t = Twist::parse_bits(it.next().ok_or_else(|| bad("generator twist"))?)?;
                let a = it.next().ok_or_else(|| bad("generator annihilator"))?;
                gens.push((n.to_string(), d, t, a.to_string()));
            }
            "rel" => rels.push(rest.to_string()),
            _ => return Err(bad(&format!("unknown key `{key}`"))),
        }
    }
    let name = name.ok_or(CwError::Format("missing `presentation` line".into()))?;
    let ring = ring.ok_or(CwError::Format("missing `scalar` line".into()))?;
    let s = twists.ok_or(CwError::Format("missing `twists` line".into()))?;
    for (n, _, t, _) in &gens {
        if t.len() != s {
            return Err(CwError::Format(format!("generator {n} has {} twist bits, expected {s}", t.len())));
        }
    }
    let plain: Vec<Generator> = gens
        .iter()
        .map(|(n, d, t, _)| Generator { name: n.clone(), degree: *d, twist: t.clone(), annihilator: Annihilator::None })
        .collect();
    let mut p = RingPresentation::new(&name, ring, s, plain);
    p.graded_commutative = graded;
    p.window = window;
    for (k, (_, _, _, a)) in gens.iter().enumerate() {
        let ann = parse_annihilator(&p, a)?;
        p.generators[k].annihilator = ann;
    }
    for r in rels {
        let poly = parse_poly(&p, &r)?;
        p.add_relation(poly)?;
    }
    Ok(p)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorJson {
    pub name: String,
    pub degree: u32,
    pub twist: String,
    pub annihilator: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationJson {
    pub name: String,
    pub scalar: String,
    pub field: String,
    pub twists: usize,
    pub commutation: String,
    pub window: u32,
    pub generators: Vec<GeneratorJson>,
    pub relations: Vec<String>,
}

pub fn to_json(p: &RingPresentation) -> CwResult<String> {
    let j = PresentationJson {
        name: p.name.clone(),
        scalar: label_text(p.scalar.label)?,
        field: field_text(p),
        twists: p.twist_rank,
        commutation: if p.graded_commutative { "graded" } else { "plain" }.into(),
        window: p.window,
        generators: p
            .generators
            .iter()
            .map(|g| GeneratorJson {
                name: g.name.clone(),
                degree: g.degree,
                twist: g.twist.bits(),
                annihilator: annihilator_text(p, &g.annihilator),
            })
            .collect(),
        relations: p.relations.iter().map(|r| format_poly(p, r)).collect(),
    };
    serde_json::to_string_pretty(&j).map_err(|e| CwError::Format(e.to_string()))
}

pub fn from_json(s: &str) -> CwResult<RingPresentation> {
    let j: PresentationJson = serde_json::from_str(s).map_err(|e| CwError::Format(e.to_string()))?;
    let mut text = format!(
        "presentation {}\nscalar {} {}\ntwists {}\ncommutation {}\nwindow {}\n",
        j.name, j.scalar, j.field, j.twists, j.commutation, j.window
    );
    for g in &j.generators {
        text.push_str(&format!("gen {} {} {} {}\n", g.name, g.degree, g.twist, g.annihilator));
    }
    for r in &j.relations {
        text.push_str(&format!("rel {r}\n"));
    }
    from_text(&text)
}
