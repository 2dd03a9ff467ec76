//! Machine-readable reports and their plain-text rendering. The table form is
//! what the golden files store, so it must stay byte-stable.

use crate::error::{CwError, CwResult};
use crate::graded::compare::{ComparisonReport, Verdict};
use crate::graded::{Bidegree, Twist};
use crate::linalg::GroupType;
use crate::scalar::FieldModel;
use crate::spaces::database::TheoryKind;
use crate::spaces::{build::kunneth_verdict, build_chow_witt, build_i_cohomology, Atom, SpaceExpr, SpaceTheories};
use crate::stack::checks::CheckOutcome;
use crate::topo::{cycle_class_check, oracle_field_ok, real_bgm2_ring_check, CycleClassVerdict};
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BidegreeRow {
    pub degree: u32,
    pub twist: String,
    pub invariant_factors: Vec<u64>,
    pub free_rank: usize,
    /// Index of the image of the reduction to Chow groups; `0` means infinite index.
    pub rho_image_index: Option<u64>,
    pub generators: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl From<CheckOutcome> for Check {
    fn from(c: CheckOutcome) -> Self {
        Check { name: c.name, passed: c.passed, detail: c.detail }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub space: String,
    pub field: String,
    pub bound: u32,
    pub bidegrees: Vec<BidegreeRow>,
    pub checks: Vec<Check>,
}

impl Report {
    fn empty(space: impl Into<String>, field: &FieldModel, bound: u32) -> Self {
        Report { space: space.into(), field: field.code(), bound, bidegrees: vec![], checks: vec![] }
    }

    pub fn success(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> CwResult<Self> {
        serde_json::from_str(text).map_err(|e| CwError::Format(e.to_string()))
    }

    pub fn to_table(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "# space: {}", self.space);
        let _ = writeln!(s, "# field: {}", self.field);
        let _ = writeln!(s, "# bound: {}", self.bound);
        if !self.bidegrees.is_empty() {
            let rows: Vec<[String; 5]> = self
                .bidegrees
                .iter()
                .map(|r| {
                    [
                        r.degree.to_string(),
                        r.twist.clone(),
                        group_text(&r.invariant_factors, r.free_rank),
                        r.rho_image_index.map_or("-".into(), |k| if k == 0 { "inf".into() } else { k.to_string() }),
                        if r.generators.is_empty() { "-".into() } else { r.generators.join(", ") },
                    ]
                })
                .collect();
            let head = ["deg", "twist", "group", "rho-idx", "generators"];
            let mut width = head.map(str::len);
            for r in &rows {
                for (w, c) in width.iter_mut().zip(r) {
                    *w = (*w).max(c.len());
                }
            }
            let line = |cells: &[&str]| {
                let mut out = String::new();
                for (k, c) in cells.iter().enumerate() {
                    if k + 1 == cells.len() {
                        out.push_str(c);
                    } else {
                        let _ = write!(out, "{c:<w$}  ", w = width[k]);
                    }
                }
                out
            };
            let _ = writeln!(s, "{}", line(&head));
            for r in &rows {
                let cells: Vec<&str> = r.iter().map(String::as_str).collect();
                let _ = writeln!(s, "{}", line(&cells));
            }
        }
        for c in &self.checks {
            let _ = writeln!(s, "[{}] {}: {}", if c.passed { "ok" } else { "FAIL" }, c.name, c.detail);
        }
        s
    }
}

fn group_text(torsion: &[u64], free_rank: usize) -> String {
    GroupType::from_orders(
        &torsion.iter().map(|&t| t.into()).chain(std::iter::repeat_n(0u64.into(), free_rank)).collect::<Vec<_>>(),
    )
    .to_string()
}

fn to_u64(x: &num_bigint::BigInt) -> CwResult<u64> {
    x.to_u64().ok_or_else(|| CwError::Format(format!("{x} does not fit in 64 bits")))
}

/// Which theory a `compute` request is about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Theory {
    ChowWitt,
    ICohomology,
}

impl Theory {
    pub fn parse(s: &str) -> CwResult<Self> {
        match s {
            "chw" | "CHW" => Ok(Theory::ChowWitt),
            "hi" | "HI" => Ok(Theory::ICohomology),
            _ => Err(CwError::Param(format!("unknown theory `{s}`, expected chw or hi"))),
        }
    }

    pub fn code(self) -> &'static str {
        match self {
            Theory::ChowWitt => "CHW",
            Theory::ICohomology => "HI",
        }
    }

    fn kind(self) -> TheoryKind {
        match self {
            Theory::ChowWitt => TheoryKind::ChowWitt,
            Theory::ICohomology => TheoryKind::ICohomology,
        }
    }

    fn build(self, expr: &SpaceExpr, field: &FieldModel, bound: u32) -> CwResult<SpaceTheories> {
        match self {
            Theory::ChowWitt => build_chow_witt(expr, field, bound),
            Theory::ICohomology => build_i_cohomology(expr, field, bound),
        }
    }
}

fn twists(rank: usize, filter: Option<&Twist>) -> CwResult<Vec<Twist>> {
    match filter {
        Some(t) if t.len() != rank => {
            Err(CwError::TwistMismatch(format!("twist {} given, the space has {rank} twist bits", t.bits())))
        }
        Some(t) => Ok(vec![t.clone()]),
        None => Ok(Twist::all(rank)),
    }
}

/// Per-bidegree table of a derived theory.
pub fn compute(expr: &SpaceExpr, field: &FieldModel, bound: u32, theory: Theory, twist: Option<&Twist>) -> CwResult<Report> {
    let st = theory.build(expr, field, bound)?;
    let mut report = Report::empty(format!("{}({expr})", theory.code()), field, bound);
    let th = &st.theory;
    for degree in 0..=bound {
        for t in twists(th.twist_rank(), twist)? {
            let piece = th.piece(&Bidegree::new(degree, th.lift_twist(&t)?))?;
            let ty = piece.group.group_type();
            report.bidegrees.push(BidegreeRow {
                degree,
                twist: t.bits(),
                invariant_factors: ty.torsion.iter().map(to_u64).collect::<CwResult<_>>()?,
                free_rank: ty.free_rank,
                rho_image_index: piece.rho_image_index().as_ref().map(to_u64).transpose()?,
                generators: piece.names.clone(),
            });
        }
    }
    for step in &st.derivation_log {
        report.checks.push(Check { name: "derivation".into(), passed: true, detail: step.clone() });
    }
    for a in &expr.factors {
        if let Atom::Bmu(n) = a {
            if n % 2 == 0 && expr.factors.len() == 1 && theory == Theory::ChowWitt {
                report.checks.push(Check {
                    name: "derived".into(),
                    passed: true,
                    detail: format!("odd-degree groups of Bmu({n}) come from the localization sequence alone"),
                });
            }
        }
    }
    Ok(report)
}

fn comparison_checks(label: &str, cmp: &ComparisonReport, expect_iso: bool) -> Vec<Check> {
    let mut out: Vec<Check> = cmp
        .entries
        .iter()
        .map(|e| Check {
            name: format!("{label} {}", e.target),
            passed: !expect_iso || e.verdict == Verdict::Iso,
            detail: format!("{} -> {}: {}", e.source_type, e.target_type, e.verdict),
        })
        .collect();
    out.push(Check {
        name: format!("{label} overall"),
        passed: !expect_iso || cmp.overall == Verdict::Iso,
        detail: cmp.overall.to_string(),
    });
    out
}

/// Compare the derived Chow-Witt and I-cohomology rings with the stored presentations.
pub fn compare_space(expr: &SpaceExpr, field: &FieldModel, bound: u32) -> CwResult<Report> {
    let mut report = Report::empty(expr.to_string(), field, bound);
    for theory in [Theory::ChowWitt, Theory::ICohomology] {
        let st = theory.build(expr, field, bound)?;
        let cmp = st.compare_with_database(theory.kind())?;
        report.checks.extend(comparison_checks(theory.code(), &cmp, true));
    }
    Ok(report)
}

/// Representative pairs for the verdict matrix, one per parity case.
pub const KUNNETH_PAIRS: [(Atom, Atom); 6] = [
    (Atom::BGm, Atom::BGm),
    (Atom::BGm, Atom::Bmu(3)),
    (Atom::BGm, Atom::Bmu(2)),
    (Atom::Bmu(2), Atom::Bmu(4)),
    (Atom::Bmu(3), Atom::Bmu(4)),
    (Atom::Bmu(3), Atom::Bmu(5)),
];

fn kunneth_note(a: Atom, b: Atom) -> Option<&'static str> {
    match (a, b) {
        (Atom::Bmu(m), Atom::Bmu(n)) if m % 2 == 1 && n % 2 == 1 => {
            Some("closed-form sources disagree for two odd factors; verdict is as computed")
        }
        _ => None,
    }
}

/// Kunneth verdicts for one product, or for every parity case when `expr` is `None`.
pub fn kunneth(expr: Option<&SpaceExpr>, field: &FieldModel, bound: u32) -> CwResult<Report> {
    let pairs: Vec<(Atom, Atom)> = match expr {
        Some(e) => match e.factors.as_slice() {
            [a, b] => vec![(*a, *b)],
            _ => return Err(CwError::Arity("the Kunneth map needs a product of two factors".into())),
        },
        None => KUNNETH_PAIRS.to_vec(),
    };
    let space = expr.map_or("verdict matrix".into(), |e| e.to_string());
    let mut report = Report::empty(space, field, bound);
    for (a, b) in pairs {
        let cmp = kunneth_verdict(a, b, field, bound)?;
        let label = format!("{a} x {b}");
        if expr.is_some() {
            report.checks.extend(comparison_checks(&label, &cmp, false));
        }
        let detail = match kunneth_note(a, b) {
            Some(n) => format!("{} ({n})", cmp.overall),
            None => cmp.overall.to_string(),
        };
        report.checks.push(Check { name: format!("kunneth {label}"), passed: true, detail });
    }
    Ok(report)
}

/// Cycle class comparison with the cellular oracle for `i <= bound` and `i <= j <= 2i + 6`.
pub fn oracle(expr: &SpaceExpr, field: &FieldModel, bound: u32) -> CwResult<Report> {
    if !oracle_field_ok(field) {
        return Err(CwError::UnsupportedField(format!("the oracle needs the real numbers, got {field}")));
    }
    let mut report = Report::empty(expr.to_string(), field, bound);
    for i in 0..=bound {
        for j in i..=2 * i + 6 {
            for t in Twist::all(expr.pic_mod2_rank()) {
                let r = cycle_class_check(expr, i, j, &t)?;
                report.checks.push(Check {
                    name: format!("H^{i}(I^{j}, {})", t.bundle_name()),
                    passed: r.verdict != CycleClassVerdict::Mismatch,
                    detail: format!(
                        "{}: engine {} oracle {}",
                        r.verdict,
                        r.engine.as_deref().unwrap_or("?"),
                        r.singular
                    ),
                });
            }
        }
    }
    if expr.factors == [Atom::BGm, Atom::BGm] {
        for row in real_bgm2_ring_check(bound.max(2))? {
            report.checks.push(Check {
                name: format!("ring degree {}", row.degree),
                passed: row.iso,
                detail: format!("ring {} engine {} oracle {}", row.ring, row.engine, row.singular),
            });
        }
    }
    Ok(report)
}

/// One stored table: which theory of which space over which field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoldenCase {
    pub expr: SpaceExpr,
    pub field: FieldModel,
    pub theory: Theory,
    pub bound: u32,
}

impl GoldenCase {
    pub fn file_name(&self) -> String {
        format!("{}_{}_{}.txt", self.theory.code(), self.expr.slug(), self.field.code())
    }

    pub fn render(&self) -> CwResult<String> {
        Ok(compute(&self.expr, &self.field, self.bound, self.theory, None)?.to_table())
    }

    /// Recover the case from the header of a rendered table.
    pub fn from_table(text: &str) -> CwResult<Self> {
        let header = |key: &str| {
            text.lines()
                .find_map(|l| l.strip_prefix(&format!("# {key}: ")))
                .ok_or_else(|| CwError::Format(format!("missing `{key}` header")))
        };
        let space = header("space")?;
        let (code, inner) = space
            .split_once('(')
            .and_then(|(c, rest)| rest.strip_suffix(')').map(|r| (c, r)))
            .ok_or_else(|| CwError::Format(format!("bad space header `{space}`")))?;
        let bound = header("bound")?.parse().map_err(|_| CwError::Format("bad bound header".into()))?;
        Ok(GoldenCase {
            expr: crate::spaces::parse_space(inner)?,
            field: FieldModel::parse(header("field")?)?,
            theory: Theory::parse(code)?,
            bound,
        })
    }
}

/// The regression catalog: each parity case of every space shape, over three fields.
pub fn golden_catalog() -> Vec<GoldenCase> {
    let spaces = [
        "P(3)",
        "P(2) x P(3)",
        "P(3) x P(3)",
        "BGm",
        "BGm x BGm",
        "Bmu(3)",
        "Bmu(4)",
        "BGm x Bmu(3)",
        "BGm x Bmu(4)",
        "Bmu(3) x Bmu(5)",
        "Bmu(3) x Bmu(4)",
        "Bmu(4) x Bmu(3)",
        "Bmu(2) x Bmu(4)",
    ];
    let mut out = Vec::new();
    for s in spaces {
        for f in ["C", "R", "F7"] {
            for theory in [Theory::ChowWitt, Theory::ICohomology] {
                out.push(GoldenCase {
                    expr: crate::spaces::parse_space(s).expect("catalog space"),
                    field: FieldModel::parse(f).expect("catalog field"),
                    theory,
                    bound: 6,
                });
            }
        }
    }
    out
}

/// Recompute every table in `dir` and compare byte for byte.
pub fn regress(dir: &std::path::Path) -> CwResult<Report> {
    let mut files: Vec<_> = std::fs::read_dir(dir)
        .map_err(|e| CwError::Io(format!("{}: {e}", dir.display())))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "txt"))
        .collect();
    files.sort();
    let mut report = Report::empty(dir.display().to_string(), &FieldModel::complex(), 0);
    if files.is_empty() {
        report.checks.push(Check { name: "golden files".into(), passed: false, detail: "none found".into() });
    }
    for p in files {
        let name = p.file_name().map(|n| n.to_string_lossy().into_owned()).unwrap_or_default();
        let stored = std::fs::read_to_string(&p).map_err(|e| CwError::Io(format!("{}: {e}", p.display())))?;
        let check = match GoldenCase::from_table(&stored).and_then(|c| c.render()) {
            Ok(fresh) if fresh == stored => Check { name, passed: true, detail: "identical".into() },
            Ok(fresh) => Check { name, passed: false, detail: first_difference(&stored, &fresh) },
            Err(e) => Check { name, passed: false, detail: e.to_string() },
        };
        report.checks.push(check);
    }
    Ok(report)
}

fn first_difference(a: &str, b: &str) -> String {
    let (la, lb): (Vec<_>, Vec<_>) = (a.lines().collect(), b.lines().collect());
    for k in 0..la.len().max(lb.len()) {
        let (x, y) = (la.get(k).copied().unwrap_or(""), lb.get(k).copied().unwrap_or(""));
        if x != y {
            return format!("line {}: stored `{x}`, computed `{y}`", k + 1);
        }
    }
    "trailing whitespace differs".into()
}

/// Write every catalog table into `dir`.
pub fn write_goldens(dir: &std::path::Path) -> CwResult<usize> {
    std::fs::create_dir_all(dir).map_err(|e| CwError::Io(e.to_string()))?;
    let cases = golden_catalog();
    for c in &cases {
        std::fs::write(dir.join(c.file_name()), c.render()?).map_err(|e| CwError::Io(e.to_string()))?;
    }
    Ok(cases.len())
}

/// Golden directory: `CHOWWITT_GOLDEN_DIR` if set, else the crate's `tests/golden`.
pub fn golden_dir() -> std::path::PathBuf {
    std::env::var_os("CHOWWITT_GOLDEN_DIR")
        .map(Into::into)
        .unwrap_or_else(|| std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden"))
}
