//! Golden files: one per surface, `degree<TAB>divisor<TAB>orbit_count` per
//! line, in enumeration output order.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use crate::acm::{canonicalize, closed_form_catalog, enumerate_acm, expand_orbit};
use crate::error::{Error, Result};
use crate::picard::{DivisorClass, SurfaceModel};
use crate::text::parse_divisor;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldenRow {
    pub degree: i64,
    pub divisor: String,
    pub orbit_count: usize,
}

pub fn file_name(surface: SurfaceModel) -> String {
    format!("{surface}.tsv")
}

/// Orbit size recorded for a class; the quadric has no exceptional classes
/// to permute, so every class counts once.
fn orbit_size(d: &DivisorClass) -> Result<usize> {
    match d.surface() {
        SurfaceModel::Quadric => Ok(1),
        SurfaceModel::BlowUp(_) => Ok(canonicalize(d)?.orbit_count),
    }
}

pub fn rows(surface: SurfaceModel) -> Result<Vec<GoldenRow>> {
    enumerate_acm(surface)
        .iter()
        .map(|d| {
            Ok(GoldenRow {
                degree: d.degree(),
                divisor: d.to_string(),
                orbit_count: orbit_size(d)?,
            })
        })
        .collect()
}

pub fn render(rows: &[GoldenRow]) -> String {
    rows.iter()
        .map(|r| format!("{}\t{}\t{}\n", r.degree, r.divisor, r.orbit_count))
        .collect()
}

pub fn parse(text: &str) -> Result<Vec<GoldenRow>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, line)| {
            let bad = |what: &str| Error::Parse {
                position: i + 1,
                message: format!("golden line {}: {what}", i + 1),
            };
            let mut it = line.split('\t');
            let (Some(deg), Some(div), Some(orbit), None) =
                (it.next(), it.next(), it.next(), it.next())
            else {
                return Err(bad("expected three tab-separated fields"));
            };
            Ok(GoldenRow {
                degree: deg.trim().parse().map_err(|_| bad("bad degree"))?,
                divisor: div.trim().to_string(),
                orbit_count: orbit.trim().parse().map_err(|_| bad("bad orbit count"))?,
            })
        })
        .collect()
}

pub fn write_all(dir: &Path) -> Result<()> {
    fs::create_dir_all(dir).map_err(|e| io_error(dir, e))?;
    for s in SurfaceModel::all() {
        let path = dir.join(file_name(s));
        fs::write(&path, render(&rows(s)?)).map_err(|e| io_error(&path, e))?;
    }
    Ok(())
}

fn io_error(path: &Path, e: std::io::Error) -> Error {
    Error::PreconditionViolated(format!("{}: {e}", path.display()))
}

/// Outcome of checking one surface.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SurfaceReport {
    pub differences: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerifyError {
    /// The golden directory or one of its files is missing or unreadable.
    Missing(String),
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerifyReport {
    pub surfaces: BTreeMap<String, SurfaceReport>,
    pub invariant_failures: Vec<String>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.invariant_failures.is_empty()
            && self.surfaces.values().all(|r| r.differences.is_empty())
    }

    pub fn problems(&self) -> Vec<String> {
        self.surfaces
            .values()
            .flat_map(|r| r.differences.iter().cloned())
            .chain(self.invariant_failures.iter().cloned())
            .collect()
    }
}

/// Diffs one surface's enumeration against its golden rows.
pub fn diff_surface(surface: SurfaceModel, golden: &[GoldenRow]) -> Result<Vec<String>> {
    let fresh = rows(surface)?;
    let mut out = Vec::new();
    let by_div = |rs: &[GoldenRow]| -> BTreeMap<String, GoldenRow> {
        rs.iter().map(|r| (r.divisor.clone(), r.clone())).collect()
    };
    let want = by_div(&fresh);
    let have = by_div(golden);
    for (div, w) in &want {
        match have.get(div) {
            None => out.push(format!(
                "{surface} degree {}: {div} missing from golden file",
                w.degree
            )),
            Some(h) if h != w => out.push(format!(
                "{surface} degree {}: {div} golden has degree {} orbit {}, computed degree {} orbit {}",
                w.degree, h.degree, h.orbit_count, w.degree, w.orbit_count
            )),
            _ => {}
        }
    }
    for (div, h) in &have {
        if !want.contains_key(div) {
            out.push(format!(
                "{surface} degree {}: {div} in golden file but not initialized ACM",
                h.degree
            ));
        }
    }
    for g in golden {
        if let Err(e) = parse_divisor(surface, &g.divisor) {
            out.push(format!(
                "{surface} degree {}: unparsable `{}`: {e}",
                g.degree, g.divisor
            ));
        }
    }
    if out.is_empty() && fresh != golden {
        out.push(format!("{surface}: golden rows are out of order"));
    }
    Ok(out)
}

/// Cross-checks enumeration against the closed-form catalog.
pub fn catalog_check(surface: SurfaceModel) -> Result<Vec<String>> {
    if surface.points().is_none() {
        return Ok(Vec::new());
    }
    let mut from_catalog: Vec<DivisorClass> = closed_form_catalog(surface)?
        .iter()
        .flat_map(expand_orbit)
        .collect();
    from_catalog.sort();
    let mut enumerated = enumerate_acm(surface);
    enumerated.sort();
    if from_catalog == enumerated {
        Ok(Vec::new())
    } else {
        Ok(vec![format!(
            "{surface}: closed-form catalog ({} classes) disagrees with enumeration ({} classes)",
            from_catalog.len(),
            enumerated.len()
        )])
    }
}

/// Reads every golden file from `dir` and checks it.
pub fn verify_dir(dir: &Path) -> std::result::Result<VerifyReport, VerifyError> {
    if !dir.is_dir() {
        return Err(VerifyError::Missing(format!(
            "{} is not a directory",
            dir.display()
        )));
    }
    let mut loaded = Vec::new();
    for s in SurfaceModel::all() {
        let path = dir.join(file_name(s));
        let text = fs::read_to_string(&path)
            .map_err(|e| VerifyError::Missing(format!("{}: {e}", path.display())))?;
        loaded.push((s, text));
    }
    let mut report = VerifyReport::default();
    for (s, text) in loaded {
        let differences = match parse(&text) {
            Ok(golden) => {
                let mut d = diff_surface(s, &golden).unwrap_or_else(|e| vec![format!("{s}: {e}")]);
                d.extend(catalog_check(s).unwrap_or_else(|e| vec![format!("{s}: {e}")]));
                d
            }
            Err(e) => vec![format!("{s}: {e}")],
        };
        report
            .surfaces
            .insert(s.to_string(), SurfaceReport { differences });
    }
    report.invariant_failures = crate::invariants::run_all();
    Ok(report)
}
