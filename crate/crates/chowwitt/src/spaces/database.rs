//! Closed-form presentations and group tables, stored as data for regression
//! against the derived theories.

use super::{Atom, SpaceExpr};
use crate::error::{CwError, CwResult};
use crate::graded::{Annihilator, Generator, RingPresentation, Twist};
use crate::linalg::GroupType;
use crate::scalar::{shared, FieldModel, ScalarLabel, ScalarRing};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::sync::Arc;

/// Which of the four theories a presentation describes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TheoryKind {
    ChowWitt,
    ICohomology,
    Chow,
    ModTwo,
}

impl fmt::Display for TheoryKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TheoryKind::ChowWitt => "CHW",
            TheoryKind::ICohomology => "HI",
            TheoryKind::Chow => "CH",
            TheoryKind::ModTwo => "Ch",
        };
        write!(f, "{s}")
    }
}

/// Whether to apply the coefficient corrections recorded for the Bmu tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reading {
    Corrected,
    Literal,
}

fn gen(name: &str, degree: u32, twist: &[u8], ann: Annihilator) -> Generator {
    Generator::new(name, degree, twist, ann)
}

fn ring(label: ScalarLabel, field: &FieldModel) -> CwResult<Arc<ScalarRing>> {
    shared(label, field)
}

fn case_name(expr: &SpaceExpr, kind: TheoryKind) -> String {
    format!("{kind}({expr})")
}

use Annihilator::{FundamentalIdeal as I, Hyperbolic as Hyp, None as Free};

const J_RELATIONS: [&str; 10] = [
    "H1^2 - 2*h",
    "H2^2 - 2*h",
    "H3^2 - 2*h",
    "H1*H2 - 2*H3",
    "H2*H3 - 2*H1",
    "H1*H3 - 2*H2",
    "2*e1 + H3*e2 - H2*e3",
    "H1*e1 + H2*e2 - H3*e3",
    "H2*e1 + H1*e2 - 2*e3",
    "H3*e1 + 2*e2 - H1*e3",
];

fn bgm2_chw_gens() -> Vec<Generator> {
    vec![
        gen("e1", 1, &[1, 0], I),
        gen("e2", 1, &[0, 1], I),
        gen("e3", 1, &[1, 1], I),
        gen("H1", 0, &[1, 0], I),
        gen("H2", 0, &[0, 1], I),
        gen("H3", 0, &[1, 1], I),
    ]
}

fn with_owned(p: RingPresentation, rels: &[String]) -> RingPresentation {
    let r: Vec<&str> = rels.iter().map(String::as_str).collect();
    p.with_relations(&r)
}

/// `W(k)[e, R]/(I e, e^{r+1}, e R, R^2)`.
pub fn projective_i(r: u32, field: &FieldModel) -> CwResult<RingPresentation> {
    let p = RingPresentation::new(
        &format!("HI(P({r}))"),
        ring(ScalarLabel::W, field)?,
        1,
        vec![gen("e", 1, &[1], I), gen("R", r, &[((r + 1) % 2) as u8], Free)],
    );
    Ok(with_owned(p, &[format!("e^{}", r + 1), "e*R".into(), "R^2".into()]))
}

pub fn pq_pr_i(q: u32, r: u32, field: &FieldModel) -> CwResult<RingPresentation> {
    let p = RingPresentation::new(
        &format!("HI(P({q}) x P({r}))"),
        ring(ScalarLabel::W, field)?,
        2,
        vec![
            gen("e1", 1, &[1, 0], I),
            gen("e2", 1, &[0, 1], I),
            gen("e3", 1, &[1, 1], I),
            gen("R1", q, &[((q + 1) % 2) as u8, 0], Free),
            gen("R2", r, &[0, ((r + 1) % 2) as u8], Free),
        ],
    );
    Ok(with_owned(
        p,
        &[
            "e1^2 + e2^2 - e3^2".into(),
            format!("e1^{}", q + 1),
            format!("e2^{}", r + 1),
            "e1*R1".into(),
            "e2*R2".into(),
            "R1^2".into(),
            "R2^2".into(),
            format!("e2*R1 - e1^{q}*e3"),
            format!("e1*R2 - e2^{r}*e3"),
            format!("e3*R1 - e1^{q}*e2"),
            format!("e3*R2 - e1*e2^{r}"),
        ],
    ))
}

pub fn pq_pr_chw(q: u32, r: u32, field: &FieldModel) -> CwResult<RingPresentation> {
    pq_pr_chw_with(q, r, field, Reading::Corrected)
}

/// The corrected reading adds `H_t R_f = H_{t + u_f} e_f^{top}` for all `t` (with `H_0 = h`), which holds in the
/// fiber product but is absent from the printed relation list.
pub fn pq_pr_chw_with(q: u32, r: u32, field: &FieldModel, reading: Reading) -> CwResult<RingPresentation> {
    let mut gens = vec![
        gen("H1", 0, &[1, 0], I),
        gen("H2", 0, &[0, 1], I),
        gen("H3", 0, &[1, 1], I),
        gen("e1", 1, &[1, 0], I),
        gen("e2", 1, &[0, 1], I),
        gen("e3", 1, &[1, 1], I),
    ];
    gens.push(gen("R1", q, &[((q + 1) % 2) as u8, 0], Free));
    gens.push(gen("R2", r, &[0, ((r + 1) % 2) as u8], Free));
    let p = RingPresentation::new(&format!("CHW(P({q}) x P({r}))"), ring(ScalarLabel::GW, field)?, 2, gens);
    let mut rels: Vec<String> = vec!["e1^2 + e2^2 + H3*e1*e2 - e3^2".into()];
    rels.extend(J_RELATIONS.iter().map(|s| s.to_string()));
    rels.extend([
        format!("e1^{}", q + 1),
        format!("e2^{}", r + 1),
        "e1*R1".into(),
        "e2*R2".into(),
        "R1^2".into(),
        "R2^2".into(),
        format!("e1^{q}*e3 - e2*R1"),
        format!("e2^{r}*e3 - e1*R2"),
        format!("e3*R1 - e1^{q}*e2"),
        format!("e3*R2 - e1*e2^{r}"),
    ]);
    if reading == Reading::Corrected {
        // H1 + u1 = 0, H2 + u1 = H3, H3 + u1 = H2, and symmetrically for the second factor
        for (f, top, shifted) in [(1, q, ["h", "H3", "H2"]), (2, r, ["H3", "h", "H1"])] {
            for (k, other) in shifted.iter().enumerate() {
                rels.push(format!("H{}*R{f} - {other}*e{f}^{top}", k + 1));
            }
            rels.push(format!("h*R{f} - H{f}*e{f}^{top}"));
        }
    }
    Ok(with_owned(p, &rels))
}

pub fn bgm_chw(field: &FieldModel) -> CwResult<RingPresentation> {
    let p = RingPresentation::new(
        "CHW(BGm)",
        ring(ScalarLabel::GW, field)?,
        1,
        vec![gen("e", 1, &[1], I), gen("H", 0, &[1], I)],
    );
    Ok(p.with_relations(&["H^2 - 2*h"]))
}

pub fn bgm_i(field: &FieldModel) -> CwResult<RingPresentation> {
    Ok(RingPresentation::new("HI(BGm)", ring(ScalarLabel::W, field)?, 1, vec![gen("e", 1, &[1], I)]))
}

pub fn bgm2_chw(field: &FieldModel) -> CwResult<RingPresentation> {
    let p = RingPresentation::new("CHW(BGm x BGm)", ring(ScalarLabel::GW, field)?, 2, bgm2_chw_gens());
    let mut rels: Vec<&str> = vec!["e1^2 + e2^2 + H3*e1*e2 - e3^2"];
    rels.extend(J_RELATIONS.iter());
    Ok(p.with_relations(&rels))
}

pub fn bgm2_i(field: &FieldModel) -> CwResult<RingPresentation> {
    let p = RingPresentation::new(
        "HI(BGm x BGm)",
        ring(ScalarLabel::W, field)?,
        2,
        vec![gen("e1", 1, &[1, 0], I), gen("e2", 1, &[0, 1], I), gen("e3", 1, &[1, 1], I)],
    );
    Ok(p.with_relations(&["e1^2 + e2^2 - e3^2"]))
}

pub fn bmu_chw(n: u64, field: &FieldModel, reading: Reading) -> CwResult<RingPresentation> {
    let gw = ring(ScalarLabel::GW, field)?;
    if n % 2 == 1 {
        let p = RingPresentation::new(&format!("CHW(Bmu({n}))"), gw, 0, vec![gen("e", 1, &[], I)]);
        return Ok(with_owned(p, &[format!("{n}*e")]));
    }
    let p = RingPresentation::new(
        &format!("CHW(Bmu({n}))"),
        gw,
        1,
        vec![gen("U", 0, &[0], Hyp), gen("H", 0, &[1], I), gen("e", 1, &[1], I)],
    );
    let (he, ue) = match reading {
        Reading::Corrected => (n / 2, n),
        Reading::Literal => (n, 2 * n),
    };
    Ok(with_owned(
        p,
        &["H*U".into(), format!("{he}*H*e"), "H^2 - 2*h".into(), "U^2 + 2*U".into(), format!("U*e - {ue}*e")],
    ))
}

pub fn bmu_i(n: u64, field: &FieldModel) -> CwResult<RingPresentation> {
    let w = ring(ScalarLabel::W, field)?;
    if n % 2 == 1 {
        return Ok(RingPresentation::new(&format!("HI(Bmu({n}))"), w, 0, vec![]));
    }
    let p = RingPresentation::new(&format!("HI(Bmu({n}))"), w, 1, vec![gen("U", 0, &[0], Free), gen("e", 1, &[1], I)]);
    Ok(p.with_relations(&["U^2 + 2*U", "U*e"]))
}

/// `BGm x Bmu(n)` with the `Bmu` factor second.
pub fn bgm_bmu_chw(n: u64, field: &FieldModel) -> CwResult<RingPresentation> {
    let gw = ring(ScalarLabel::GW, field)?;
    let name = format!("CHW(BGm x Bmu({n}))");
    if n % 2 == 1 {
        let p = RingPresentation::new(
            &name,
            gw,
            1,
            vec![gen("e1", 1, &[1], I), gen("e2", 1, &[0], I), gen("H1", 0, &[1], I)],
        );
        return Ok(with_owned(p, &["H1^2 - 2*h".into(), format!("{n}*e2")]));
    }
    let mut gens = bgm2_chw_gens();
    gens.push(gen("U2", 0, &[0, 0], Hyp));
    let p = RingPresentation::new(&name, gw, 2, gens);
    let k = n / 2;
    let mut rels: Vec<String> = vec!["e1^2 + e2^2 + H3*e1*e2 - e3^2".into()];
    rels.extend(J_RELATIONS.iter().map(|s| s.to_string()));
    rels.extend([
        format!("{k}*H2*e2"),
        "U2^2 + 2*U2".into(),
        "H1*U2".into(),
        "H2*U2".into(),
        "H3*U2".into(),
        format!("U2*e1 - {k}*H3*e2"),
        format!("U2*e2 - {n}*e2"),
        format!("U2*e3 - {k}*H1*e2"),
    ]);
    Ok(with_owned(p, &rels))
}

pub fn bgm_bmu_i(n: u64, field: &FieldModel) -> CwResult<RingPresentation> {
    let w = ring(ScalarLabel::W, field)?;
    let name = format!("HI(BGm x Bmu({n}))");
    if n % 2 == 1 {
        return Ok(RingPresentation::new(&name, w, 1, vec![gen("e1", 1, &[1], I)]));
    }
    let p = RingPresentation::new(
        &name,
        w,
        2,
        vec![
            gen("U2", 0, &[0, 0], Free),
            gen("e1", 1, &[1, 0], I),
            gen("e2", 1, &[0, 1], I),
            gen("e3", 1, &[1, 1], I),
        ],
    );
    Ok(p.with_relations(&["e1^2 + e2^2 - e3^2", "U2^2 + 2*U2", "U2*e1", "U2*e2", "U2*e3"]))
}

/// `Bmu(m) x Bmu(n)` with `m` odd whenever exactly one order is odd.
pub fn bmu_bmu_chw(m: u64, n: u64, field: &FieldModel, reading: Reading) -> CwResult<RingPresentation> {
    let gw = ring(ScalarLabel::GW, field)?;
    let name = format!("CHW(Bmu({m}) x Bmu({n}))");
    match (m % 2, n % 2) {
        (1, 1) => {
            let p = RingPresentation::new(&name, gw, 0, vec![gen("e1", 1, &[], I), gen("e2", 1, &[], I)]);
            Ok(with_owned(p, &[format!("{m}*e1"), format!("{n}*e2")]))
        }
        (1, 0) => {
            let p = RingPresentation::new(
                &name,
                gw,
                1,
                vec![
                    gen("U2", 0, &[0], Hyp),
                    gen("H2", 0, &[1], I),
                    gen("e1", 1, &[0], I),
                    gen("e2", 1, &[1], I),
                ],
            );
            Ok(with_owned(
                p,
                &[
                    format!("{m}*e1"),
                    format!("{}*H2*e2", n / 2),
                    "H2^2 - 2*h".into(),
                    "H2*U2".into(),
                    "U2^2 + 2*U2".into(),
                    "U2*e1".into(),
                    format!("U2*e2 - {n}*e2"),
                ],
            ))
        }
        (0, 0) => {
            let mut gens = vec![gen("U1", 0, &[0, 0], Hyp), gen("U2", 0, &[0, 0], Hyp)];
            gens.extend(bgm2_chw_gens());
            let p = RingPresentation::new(&name, gw, 2, gens);
            let (a, b) = (m / 2, n / 2);
            let last = match reading {
                Reading::Corrected => b,
                Reading::Literal => a,
            };
            let mut rels: Vec<String> = vec![format!("{a}*H1*e1"), format!("{b}*H2*e2")];
            rels.push("e1^2 + e2^2 + H3*e1*e2 - e3^2".into());
            rels.extend(J_RELATIONS.iter().map(|s| s.to_string()));
            for u in ["U1", "U2"] {
                for hh in ["H1", "H2", "H3"] {
                    rels.push(format!("{hh}*{u}"));
                }
                rels.push(format!("{u}^2 + 2*{u}"));
            }
            rels.extend([
                format!("U1*e1 - {m}*e1"),
                format!("U1*e2 - {a}*H3*e1"),
                format!("U1*e3 - {a}*H2*e1"),
                format!("U2*e1 - {b}*H3*e2"),
                format!("U2*e2 - {n}*e2"),
                format!("U2*e3 - {last}*H1*e2"),
            ]);
            Ok(with_owned(p, &rels))
        }
        _ => Err(CwError::UnknownCase(format!("{name}: list the odd order first"))),
    }
}

pub fn bmu_bmu_i(m: u64, n: u64, field: &FieldModel) -> CwResult<RingPresentation> {
    let w = ring(ScalarLabel::W, field)?;
    let name = format!("HI(Bmu({m}) x Bmu({n}))");
    match (m % 2, n % 2) {
        (1, 1) => Ok(RingPresentation::new(&name, w, 0, vec![])),
        (1, 0) => {
            let p = RingPresentation::new(&name, w, 1, vec![gen("U2", 0, &[0], Free), gen("e2", 1, &[1], I)]);
            Ok(p.with_relations(&["U2^2 + 2*U2", "U2*e2"]))
        }
        (0, 0) => {
            let p = RingPresentation::new(
                &name,
                w,
                2,
                vec![
                    gen("U1", 0, &[0, 0], Free),
                    gen("U2", 0, &[0, 0], Free),
                    gen("e1", 1, &[1, 0], I),
                    gen("e2", 1, &[0, 1], I),
                    gen("e3", 1, &[1, 1], I),
                ],
            );
            Ok(p.with_relations(&[
                "e1^2 + e2^2 - e3^2",
                "U1^2 + 2*U1",
                "U2^2 + 2*U2",
                "U1*e1",
                "U1*e2",
                "U1*e3",
                "U2*e1",
                "U2*e2",
                "U2*e3",
            ]))
        }
        _ => Err(CwError::UnknownCase(format!("{name}: list the odd order first"))),
    }
}

/// Chow ring (`Z`) or mod-2 Chow ring (`Z/2`) of a product of atoms.
pub fn chow(expr: &SpaceExpr, mod2: bool) -> CwResult<RingPresentation> {
    let (label, scalar) =
        if mod2 { (TheoryKind::ModTwo, ScalarRing::integers_mod2()) } else { (TheoryKind::Chow, ScalarRing::integers()) };
    let single = expr.factors.len() == 1;
    let mut gens = Vec::new();
    let mut rels = Vec::new();
    for (k, a) in expr.factors.iter().enumerate() {
        let c = if single { "c".to_string() } else { format!("c{}", k + 1) };
        gens.push(gen(&c, 1, &[], Free));
        match a {
            Atom::P(r) => rels.push(format!("{c}^{}", r + 1)),
            Atom::Bmu(n) => rels.push(format!("{n}*{c}")),
            Atom::BGm => {}
        }
    }
    let p = RingPresentation::new(&case_name(expr, label), Arc::new(scalar), 0, gens);
    Ok(with_owned(p, &rels))
}

/// Exchange the roles of the two factors: indices 1 and 2 swap, twist bits reverse.
pub fn swap_factors(p: &RingPresentation, name: &str) -> RingPresentation {
    let mut out = p.clone();
    out.name = name.into();
    for g in out.generators.iter_mut() {
        let swapped: String = g
            .name
            .chars()
            .map(|c| match c {
                '1' => '2',
                '2' => '1',
                other => other,
            })
            .collect();
        g.name = swapped;
        g.twist = Twist(g.twist.0.iter().rev().copied().collect());
    }
    out
}

/// The stored presentation for a catalog case.
pub fn stored_presentation(expr: &SpaceExpr, kind: TheoryKind, field: &FieldModel) -> CwResult<RingPresentation> {
    stored_presentation_with(expr, kind, field, Reading::Corrected)
}

pub fn stored_presentation_with(
    expr: &SpaceExpr,
    kind: TheoryKind,
    field: &FieldModel,
    reading: Reading,
) -> CwResult<RingPresentation> {
    let field = &expr.checked_field(field)?;
    let unknown = || CwError::UnknownCase(case_name(expr, kind));
    match kind {
        TheoryKind::Chow => return chow(expr, false),
        TheoryKind::ModTwo => return chow(expr, true),
        _ => {}
    }
    let chw = kind == TheoryKind::ChowWitt;
    match expr.factors.as_slice() {
        [Atom::P(r)] => {
            if chw {
                Err(unknown())
            } else {
                projective_i(*r, field)
            }
        }
        [Atom::BGm] => {
            if chw {
                bgm_chw(field)
            } else {
                bgm_i(field)
            }
        }
        [Atom::Bmu(n)] => {
            if chw {
                bmu_chw(*n, field, reading)
            } else {
                bmu_i(*n, field)
            }
        }
        [Atom::P(q), Atom::P(r)] => {
            if chw {
                pq_pr_chw_with(*q, *r, field, reading)
            } else {
                pq_pr_i(*q, *r, field)
            }
        }
        [Atom::BGm, Atom::BGm] => {
            if chw {
                bgm2_chw(field)
            } else {
                bgm2_i(field)
            }
        }
        [Atom::BGm, Atom::Bmu(n)] => {
            if chw {
                bgm_bmu_chw(*n, field)
            } else {
                bgm_bmu_i(*n, field)
            }
        }
        [Atom::Bmu(_), Atom::BGm] => {
            let p = stored_presentation_with(&expr.swapped(), kind, field, reading)?;
            Ok(swap_factors(&p, &case_name(expr, kind)))
        }
        [Atom::Bmu(m), Atom::Bmu(n)] => {
            if m % 2 == 0 && n % 2 == 1 {
                let p = stored_presentation_with(&expr.swapped(), kind, field, reading)?;
                return Ok(swap_factors(&p, &case_name(expr, kind)));
            }
            if chw {
                bmu_bmu_chw(*m, *n, field, reading)
            } else {
                bmu_bmu_i(*m, *n, field)
            }
        }
        _ => Err(unknown()),
    }
}

/// A group as the closed-form tables state it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TableGroup {
    Zero,
    GW,
    W,
    /// `Z` with reduction to the Chow group of index 1.
    Z,
    /// `Z` whose image in the Chow group has index 2.
    TwoZ,
    Cyclic(u64),
    /// `GW(k)` plus `k` copies of `W(k)`.
    GWPlusW(usize),
    /// `k` copies of `W(k)`.
    WSum(usize),
}

impl TableGroup {
    pub fn group_type(&self, field: &FieldModel) -> CwResult<GroupType> {
        let gw = shared(ScalarLabel::GW, field)?.group.group_type();
        let w = shared(ScalarLabel::W, field)?.group.group_type();
        let sum_w = |k: usize| (0..k).fold(GroupType::trivial(), |acc, _| acc.sum(&w));
        Ok(match self {
            TableGroup::Zero => GroupType::trivial(),
            TableGroup::GW => gw,
            TableGroup::W => w,
            TableGroup::Z | TableGroup::TwoZ => GroupType::free(1),
            TableGroup::Cyclic(n) => GroupType::from_orders(&[BigInt::from(*n)]),
            TableGroup::GWPlusW(k) => gw.sum(&sum_w(*k)),
            TableGroup::WSum(k) => sum_w(*k),
        })
    }

    /// Index of the image under reduction to the Chow group, when the table records it.
    pub fn rho_index(&self) -> Option<u64> {
        match self {
            TableGroup::Z | TableGroup::GW => Some(1),
            TableGroup::TwoZ => Some(2),
            _ => None,
        }
    }
}

impl fmt::Display for TableGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableGroup::Zero => write!(f, "0"),
            TableGroup::GW => write!(f, "GW"),
            TableGroup::W => write!(f, "W"),
            TableGroup::Z => write!(f, "Z"),
            TableGroup::TwoZ => write!(f, "2Z"),
            TableGroup::Cyclic(n) => write!(f, "Z/{n}"),
            TableGroup::GWPlusW(k) => write!(f, "GW+W^{k}"),
            TableGroup::WSum(k) => write!(f, "W^{k}"),
        }
    }
}

/// Chow-Witt groups of `P^r`, twist bit `t`.
pub fn projective_chw_table(r: u32, i: u32, t: u8) -> TableGroup {
    if i > r {
        return TableGroup::Zero;
    }
    let even = i % 2 == 0;
    if t == 0 {
        if i == 0 || (i == r && r % 2 == 1) {
            TableGroup::GW
        } else if even {
            TableGroup::Z
        } else {
            TableGroup::TwoZ
        }
    } else if i == r && r % 2 == 0 {
        TableGroup::GW
    } else if even {
        TableGroup::TwoZ
    } else {
        TableGroup::Z
    }
}

pub fn bgm_chw_table(i: u32, t: u8) -> TableGroup {
    match (t, i) {
        (0, 0) => TableGroup::GW,
        (0, _) if i % 2 == 0 => TableGroup::Z,
        (0, _) => TableGroup::TwoZ,
        (_, _) if i % 2 == 0 => TableGroup::TwoZ,
        _ => TableGroup::Z,
    }
}

/// Chow-Witt groups of `Bmu(n)`; for even `n` the odd/even-twist entries printed
/// as a binomial coefficient are replaced by `n/2` unless `Literal` is asked for.
pub fn bmu_chw_table(n: u64, i: u32, t: u8, reading: Reading) -> TableGroup {
    if n % 2 == 1 {
        return if i == 0 { TableGroup::GW } else { TableGroup::Cyclic(n) };
    }
    let small = match reading {
        Reading::Corrected => n / 2,
        Reading::Literal => n * (n - 1) / 2,
    };
    let small = if small <= 1 { TableGroup::Zero } else { TableGroup::Cyclic(small) };
    match (t, i) {
        (0, 0) => TableGroup::GWPlusW(1),
        (0, _) if i % 2 == 0 => TableGroup::Cyclic(2 * n),
        (0, _) => small,
        (_, 0) => TableGroup::Z,
        (_, _) if i % 2 == 0 => small,
        _ => TableGroup::Cyclic(2 * n),
    }
}

/// `H^i(P^q x P^r, I^j, O(s, t))` for `j < i`, twist bits `(s, t)`.
pub fn pq_pr_nondiagonal_table(q: u32, r: u32, i: u32, tw: (u8, u8)) -> TableGroup {
    let (s, t) = tw;
    let mut count = 0;
    if i == 0 && tw == (0, 0) {
        count += 1;
    }
    if i == q && i == r && q % 2 == 1 {
        if tw == (0, 0) {
            count += 2;
        }
    } else {
        if i == r && (s, t) == (0, ((r + 1) % 2) as u8) {
            count += 1;
        }
        if i == q && (s, t) == (((q + 1) % 2) as u8, 0) {
            count += 1;
        }
    }
    if i == q + r && (s, t) == (((q + 1) % 2) as u8, ((r + 1) % 2) as u8) {
        count += 1;
    }
    if count == 0 {
        TableGroup::Zero
    } else if count == 1 {
        TableGroup::W
    } else {
        TableGroup::WSum(count)
    }
}

/// Non-diagonal Milnor-Witt groups `j < i` of the classifying spaces in the catalog.
pub fn classifying_nondiagonal_table(i: u32, trivial_twist: bool) -> TableGroup {
    if i == 0 && trivial_twist {
        TableGroup::W
    } else {
        TableGroup::Zero
    }
}
