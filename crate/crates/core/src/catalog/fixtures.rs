use std::fmt::Write as _;

use sha2::{Digest, Sha256};

use super::sqrt2::Sqrt2Quotient;
use super::units::UnitIdentity;
use super::F11_TABLE;
use crate::error::{Error, Result};
use crate::exact::{squarefree_split, BiQuadElem, FieldDesc, QuadElem, Rat};
use crate::geometry::{build_exact_graph, DiagForm, Point, UGraph};

/// Points in one of the supported fields.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PointSet {
    Rational(Vec<Point<Rat>>),
    Quad(Vec<Point<QuadElem>>),
    BiQuad(Vec<Point<BiQuadElem>>),
}

impl PointSet {
    /// Parses one point per entry, coordinates separated by `;`.
    pub fn parse(field: FieldDesc, lines: &[&str]) -> Result<Self> {
        fn all<S: crate::exact::Scalar>(lines: &[&str], f: FieldDesc) -> Result<Vec<Point<S>>> {
            lines.iter().map(|l| Point::parse(l, f)).collect()
        }
        Ok(match field {
            FieldDesc::Rational => PointSet::Rational(all(lines, field)?),
            FieldDesc::Quad(_) => PointSet::Quad(all(lines, field)?),
            FieldDesc::BiQuad(..) => PointSet::BiQuad(all(lines, field)?),
        })
    }

    pub fn len(&self) -> usize {
        match self {
            PointSet::Rational(p) => p.len(),
            PointSet::Quad(p) => p.len(),
            PointSet::BiQuad(p) => p.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn lines(&self) -> Vec<String> {
        match self {
            PointSet::Rational(p) => p.iter().map(ToString::to_string).collect(),
            PointSet::Quad(p) => p.iter().map(ToString::to_string).collect(),
            PointSet::BiQuad(p) => p.iter().map(ToString::to_string).collect(),
        }
    }

    pub fn graph(&self, form: &DiagForm) -> Result<UGraph> {
        match self {
            PointSet::Rational(p) => build_exact_graph(p, form),
            PointSet::Quad(p) => build_exact_graph(p, form),
            PointSet::BiQuad(p) => build_exact_graph(p, form),
        }
    }
}

/// A named point configuration with the edges it is supposed to have.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointFixture {
    pub name: String,
    pub field: FieldDesc,
    pub form: DiagForm,
    pub points: PointSet,
    pub expected_edges: Vec<(usize, usize)>,
}

impl PointFixture {
    fn new(
        name: &str,
        field: FieldDesc,
        form: DiagForm,
        lines: &[&str],
        edges: &[(usize, usize)],
    ) -> Self {
        let mut expected_edges: Vec<_> = edges.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        expected_edges.sort_unstable();
        PointFixture {
            name: name.to_string(),
            field,
            form,
            points: PointSet::parse(field, lines).expect("fixture literals are valid"),
            expected_edges,
        }
    }

    pub fn graph(&self) -> Result<UGraph> {
        self.points.graph(&self.form)
    }

    pub fn canonical(&self) -> String {
        let mut out = format!(
            "fixture {}\nfield {}\nform {}\n",
            self.name, self.field, self.form
        );
        for l in self.points.lines() {
            writeln!(out, "point {l}").expect("string write");
        }
        for (a, b) in &self.expected_edges {
            writeln!(out, "edge {a} {b}").expect("string write");
        }
        out
    }
}

fn cycle_edges(n: usize) -> Vec<(usize, usize)> {
    (0..n).map(|i| (i, (i + 1) % n)).collect()
}

pub fn triangle_sqrt3() -> PointFixture {
    PointFixture::new(
        "triangle_sqrt3",
        FieldDesc::Quad(3),
        DiagForm::euclidean(2),
        &["0; 0", "1; 0", "1/2; 1/2*sqrt(3)"],
        &[(0, 1), (0, 2), (1, 2)],
    )
}

pub fn moser_spindle() -> PointFixture {
    PointFixture::new(
        "moser_spindle",
        FieldDesc::BiQuad(3, 11),
        DiagForm::euclidean(2),
        &[
            "0; 0",
            "1; 0",
            "1/2; 1/2*sqrt(3)",
            "3/2; 1/2*sqrt(3)",
            "5/6; 1/6*sqrt(11)",
            "5/12 - 1/12*sqrt(33); 5/12*sqrt(3) + 1/12*sqrt(11)",
            "5/4 - 1/12*sqrt(33); 5/12*sqrt(3) + 1/4*sqrt(11)",
        ],
        &[
            (0, 1),
            (0, 2),
            (1, 2),
            (1, 3),
            (2, 3),
            (0, 4),
            (0, 5),
            (4, 5),
            (4, 6),
            (5, 6),
            (3, 6),
        ],
    )
}

pub fn c9_sqrt7() -> PointFixture {
    PointFixture::new(
        "c9_sqrt7",
        FieldDesc::Quad(7),
        DiagForm::euclidean(2),
        &[
            "0; 0",
            "1/8; 3/8*sqrt(7)",
            "1/4; 0",
            "3/8; 3/8*sqrt(7)",
            "1/2; 0",
            "5/8; 3/8*sqrt(7)",
            "3/4; 0",
            "7/8; 3/8*sqrt(7)",
            "1; 0",
        ],
        &cycle_edges(9),
    )
}

pub fn c5_sqrt_neg5() -> PointFixture {
    PointFixture::new(
        "c5_sqrt_neg5",
        FieldDesc::Quad(-5),
        DiagForm::euclidean(2),
        &["0; 0", "1; 0", "2; 0", "3; 0", "3/2; 1/2*sqrt(-5)"],
        &cycle_edges(5),
    )
}

/// `(i, 0)` for `i = 0..=k` and the apex `(k/2, √(k²-4)/2)`, under the
/// Lorentzian form; a `(k + 2)`-cycle.
pub fn lorentz_cycle(k: usize) -> Result<PointFixture> {
    if !(3..=10_000).contains(&k) {
        return Err(Error::OutsideDomain(format!(
            "lorentz_cycle needs 3 <= k <= 10000, got {k}"
        )));
    }
    let ki = k as i64;
    let (s, m) = squarefree_split(ki * ki - 4);
    let field = FieldDesc::Quad(m);
    let mut lines: Vec<String> = (0..=k).map(|i| format!("{i}; 0")).collect();
    lines.push(format!("{ki}/2; {s}/2*sqrt({m})"));
    let refs: Vec<&str> = lines.iter().map(String::as_str).collect();
    Ok(PointFixture::new(
        &format!("lorentz_cycle_{k}"),
        field,
        DiagForm::lorentzian(),
        &refs,
        &cycle_edges(k + 2),
    ))
}

pub fn lorentz_four_cycle() -> PointFixture {
    PointFixture::new(
        "lorentz_four_cycle",
        FieldDesc::Rational,
        DiagForm::lorentzian(),
        &["0; 0", "1; 0", "9/4; 3/4", "5/4; 3/4"],
        &cycle_edges(4),
    )
}

/// Canonical text of the F11 table: one row per line.
pub fn f11_canonical() -> String {
    let mut out = String::from("fixture f11_table\n");
    for row in F11_TABLE {
        let cells: Vec<String> = row.iter().map(u8::to_string).collect();
        writeln!(out, "{}", cells.join(" ")).expect("string write");
    }
    out
}

/// Any catalog entry.
#[derive(Debug, Clone)]
pub enum Fixture {
    Points(PointFixture),
    F11Table,
    Sqrt2Quotient(Box<Sqrt2Quotient>),
    UnitIdentity(Box<UnitIdentity>),
}

/// Names accepted by [`fixture`]; `lorentz_cycle_K` takes any `K >= 3`.
pub const FIXTURE_NAMES: [&str; 9] = [
    "triangle_sqrt3",
    "moser_spindle",
    "c9_sqrt7",
    "c5_sqrt_neg5",
    "lorentz_cycle_K",
    "lorentz_four_cycle",
    "f11_table",
    "sqrt2_quotient",
    "unit_identity",
];

pub fn fixture(name: &str) -> Result<Fixture> {
    Ok(match name {
        "triangle_sqrt3" => Fixture::Points(triangle_sqrt3()),
        "moser_spindle" => Fixture::Points(moser_spindle()),
        "c9_sqrt7" => Fixture::Points(c9_sqrt7()),
        "c5_sqrt_neg5" => Fixture::Points(c5_sqrt_neg5()),
        "lorentz_four_cycle" => Fixture::Points(lorentz_four_cycle()),
        "f11_table" => Fixture::F11Table,
        "sqrt2_quotient" => Fixture::Sqrt2Quotient(Box::new(Sqrt2Quotient::build()?)),
        "unit_identity" => Fixture::UnitIdentity(Box::new(UnitIdentity::build())),
        other => {
            let k = other
                .strip_prefix("lorentz_cycle_")
                .and_then(|k| k.parse().ok())
                .ok_or_else(|| Error::UnknownName(format!("fixture '{other}'")))?;
            Fixture::Points(lorentz_cycle(k)?)
        }
    })
}

impl Fixture {
    pub fn canonical(&self) -> String {
        match self {
            Fixture::Points(p) => p.canonical(),
            Fixture::F11Table => f11_canonical(),
            Fixture::Sqrt2Quotient(q) => q.canonical(),
            Fixture::UnitIdentity(u) => u.canonical(),
        }
    }

    pub fn sha256(&self) -> String {
        hex::encode(Sha256::digest(self.canonical().as_bytes()))
    }
}
