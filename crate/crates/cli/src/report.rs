//! Structured results of each command and their text rendering.

use std::fmt::Write as _;
use std::path::Path;

use delpezzo::acm::{degree_count_table, is_acm_initialized};
use delpezzo::geometry::{enumerate_lines, has_smooth_nonline_member, is_effective, is_very_ample};
use delpezzo::golden::VerifyReport;
use delpezzo::picard::{arithmetic_genus, euler_characteristic};
use delpezzo::wild::{family_plan, family_slope, is_zero_regular_acm, FamilyPlan};
use delpezzo::{parse_divisor, Error, SurfaceModel};
use serde::Serialize;

pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn new(code: u8, message: String) -> Self {
        Failure { code, message }
    }

    pub fn usage(message: String) -> Self {
        Failure::new(2, message)
    }
}

#[derive(Serialize)]
#[serde(tag = "command", rename_all = "lowercase")]
pub enum Document {
    Lines(LinesDoc),
    Classify(ClassifyDoc),
    Table(TableDoc),
    Wild(Box<WildDoc>),
    Verify(VerifyDoc),
}

#[derive(Serialize)]
pub struct LinesDoc {
    surface: SurfaceModel,
    count: usize,
    lines: Vec<LineRow>,
}

#[derive(Serialize)]
struct LineRow {
    label: String,
    class: String,
}

/// A predicate value, or `n/a` when its precondition fails.
#[derive(Clone, Copy)]
struct Flag(Option<bool>);

impl Flag {
    fn from_result(r: Result<bool, Error>) -> Self {
        Flag(r.ok())
    }

    fn text(self) -> &'static str {
        match self.0 {
            Some(true) => "true",
            Some(false) => "false",
            None => "n/a",
        }
    }
}

impl Serialize for Flag {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0 {
            Some(b) => s.serialize_bool(b),
            None => s.serialize_str("n/a"),
        }
    }
}

#[derive(Serialize)]
pub struct ClassifyDoc {
    surface: SurfaceModel,
    divisor: String,
    degree: i64,
    self_intersection: i64,
    genus: i64,
    euler_characteristic: i64,
    effective: bool,
    very_ample: Flag,
    smooth_member: Flag,
    acm: bool,
    zero_regular: Flag,
}

#[derive(Serialize)]
pub struct TableDoc {
    surfaces: Vec<SurfaceCounts>,
}

#[derive(Serialize)]
struct SurfaceCounts {
    surface: SurfaceModel,
    /// Count for each degree `0..=H^2`.
    counts: Vec<usize>,
    total: usize,
}

#[derive(Serialize)]
pub struct WildDoc {
    #[serde(flatten)]
    plan: FamilyPlan,
    relation_block: [i64; 6],
    slope: String,
}

#[derive(Serialize)]
pub struct VerifyDoc {
    dir: String,
    blessed: bool,
    passed: bool,
    problems: Vec<String>,
}

pub fn lines(surface: SurfaceModel) -> Document {
    let lines: Vec<LineRow> = enumerate_lines(surface)
        .into_iter()
        .map(|l| LineRow {
            label: l.label.to_string(),
            class: l.class.to_string(),
        })
        .collect();
    Document::Lines(LinesDoc {
        surface,
        count: lines.len(),
        lines,
    })
}

pub fn classify(surface: SurfaceModel, text: &str) -> Result<Document, Failure> {
    let d = parse_divisor(surface, text)?;
    let genus = arithmetic_genus(&d);
    if !genus.is_integer() {
        return Err(Failure::new(
            1,
            format!("non-integral genus {genus} for {d}"),
        ));
    }
    let acm = is_acm_initialized(&d);
    Ok(Document::Classify(ClassifyDoc {
        surface,
        divisor: d.to_string(),
        degree: d.degree(),
        self_intersection: d.self_intersection(),
        genus: genus.to_integer(),
        euler_characteristic: euler_characteristic(&d),
        effective: is_effective(&d),
        very_ample: Flag::from_result(is_very_ample(&d)),
        smooth_member: Flag::from_result(has_smooth_nonline_member(&d)),
        acm,
        zero_regular: Flag::from_result(is_zero_regular_acm(&d).map(|z| z.zero_regular)),
    }))
}

pub fn table(surfaces: &[SurfaceModel]) -> Document {
    let surfaces = surfaces
        .iter()
        .map(|&surface| {
            let counts: Vec<usize> = degree_count_table(surface).into_values().collect();
            SurfaceCounts {
                surface,
                total: counts.iter().sum(),
                counts,
            }
        })
        .collect();
    Document::Table(TableDoc { surfaces })
}

pub fn wild(surface: SurfaceModel, rank: usize) -> Result<Document, Failure> {
    let plan = family_plan(surface, rank)?;
    let slope = family_slope(surface, &plan)?;
    Ok(Document::Wild(Box::new(WildDoc {
        relation_block: plan.pair.relation_block(),
        slope: slope.to_string(),
        plan,
    })))
}

pub fn blessed(dir: &Path) -> Document {
    Document::Verify(VerifyDoc {
        dir: dir.display().to_string(),
        blessed: true,
        passed: true,
        problems: Vec::new(),
    })
}

pub fn verified(dir: &Path, report: &VerifyReport) -> Document {
    Document::Verify(VerifyDoc {
        dir: dir.display().to_string(),
        blessed: false,
        passed: report.passed(),
        problems: report.problems(),
    })
}

impl Document {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        match self {
            Document::Lines(doc) => {
                for l in &doc.lines {
                    let _ = writeln!(out, "{:<8}{}", l.label, l.class);
                }
                let _ = writeln!(out, "{} lines on {}", doc.count, doc.surface);
            }
            Document::Classify(doc) => {
                let rows: [(&str, String); 11] = [
                    ("surface", doc.surface.to_string()),
                    ("divisor", doc.divisor.clone()),
                    ("degree", doc.degree.to_string()),
                    ("self-intersection", doc.self_intersection.to_string()),
                    ("genus", doc.genus.to_string()),
                    ("euler-characteristic", doc.euler_characteristic.to_string()),
                    ("effective", doc.effective.to_string()),
                    ("very-ample", doc.very_ample.text().into()),
                    ("smooth-member", doc.smooth_member.text().into()),
                    ("acm", doc.acm.to_string()),
                    ("0-regular", doc.zero_regular.text().into()),
                ];
                for (k, v) in &rows {
                    let _ = writeln!(out, "{k:<22}{v}");
                }
            }
            Document::Table(doc) => table_text(&mut out, &doc.surfaces),
            Document::Wild(doc) => wild_text(&mut out, doc),
            Document::Verify(doc) => {
                if doc.blessed {
                    let _ = writeln!(out, "wrote golden files to {}", doc.dir);
                } else {
                    for p in &doc.problems {
                        let _ = writeln!(out, "{p}");
                    }
                    let verdict = if doc.passed { "ok" } else { "FAILED" };
                    let _ = writeln!(out, "verify {}: {verdict}", doc.dir);
                }
            }
        }
        out
    }
}

fn table_text(out: &mut String, surfaces: &[SurfaceCounts]) {
    let max = surfaces.iter().map(|s| s.counts.len()).max().unwrap_or(0);
    let _ = write!(out, "{:>4}", "d");
    for s in surfaces {
        let _ = write!(out, "{:>6}", s.surface.to_string());
    }
    out.push('\n');
    for d in 0..max {
        let _ = write!(out, "{d:>4}");
        for s in surfaces {
            match s.counts.get(d) {
                Some(n) => {
                    let _ = write!(out, "{n:>6}");
                }
                None => out.push_str("      "),
            }
        }
        out.push('\n');
    }
    let _ = write!(out, "{:>4}", "Tot");
    for s in surfaces {
        let _ = write!(out, "{:>6}", s.total);
    }
    out.push('\n');
}

fn wild_text(out: &mut String, doc: &WildDoc) {
    let p = &doc.plan;
    let pair = &p.pair;
    let _ = writeln!(out, "surface   {}", p.surface);
    let _ = writeln!(out, "rank      {}", p.rank);
    let _ = writeln!(out, "C         {}", pair.c);
    let _ = writeln!(out, "D         {}", pair.d);
    let _ = writeln!(out, "E = 2H-C  {}", pair.e);
    let _ = writeln!(out, "F = 2H-D  {}", pair.f);
    let names = ["C,E", "D,F", "C,D", "E,F", "D,E", "C,F"];
    let block: Vec<String> = names
        .iter()
        .zip(doc.relation_block)
        .map(|(n, v)| format!("{n}={v}"))
        .collect();
    let _ = writeln!(out, "ext1      {}", block.join(" "));
    for (i, step) in p.schedule.iter().enumerate() {
        let ext1: Vec<String> = step.ext1.iter().map(|e| e.to_string()).collect();
        let _ = writeln!(
            out,
            "step {}    0 -> {} -> * -> O({}) -> 0  copies {}  ext1 [{}]",
            i + 1,
            step.sub,
            step.quotient,
            step.copies,
            ext1.join(", ")
        );
    }
    let _ = writeln!(out, "param_dim {}", p.param_dim);
    let _ = writeln!(out, "slope     {}", doc.slope);
}
