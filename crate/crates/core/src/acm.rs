//! Initialized ACM line bundles.
//!
//! A class `D` is initialized and ACM iff `D = 0` or `D^2 = D.H - 2` with
//! `0 < D.H <= H^2`. Enumeration scans a finite coefficient box, and an
//! independent catalog rebuilds the same set from the closed-form rows.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::RangeInclusive;
use std::sync::OnceLock;

use serde::Serialize;

use crate::combinatorics::{distinct_permutations, multiset_arrangements};
use crate::error::{Error, Result};
use crate::geometry::is_effective;
use crate::par::{filter_map_range, Strategy};
use crate::picard::{hyperplane, DivisorClass, SurfaceModel};

/// Which closed-form row a canonical ACM class belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum FamilyTag {
    #[serde(rename = "zero")]
    Zero,
    #[serde(rename = "exceptional")]
    Exceptional,
    #[serde(rename = "l-chain")]
    LineChain,
    #[serde(rename = "2l-chain")]
    ConicChain,
    #[serde(rename = "3l-2e")]
    CubicOneDouble,
    #[serde(rename = "4l-222")]
    QuarticThreeDouble,
    #[serde(rename = "5l-2^6")]
    QuinticSixDouble,
}

impl FamilyTag {
    pub fn as_str(self) -> &'static str {
        match self {
            FamilyTag::Zero => "zero",
            FamilyTag::Exceptional => "exceptional",
            FamilyTag::LineChain => "l-chain",
            FamilyTag::ConicChain => "2l-chain",
            FamilyTag::CubicOneDouble => "3l-2e",
            FamilyTag::QuarticThreeDouble => "4l-222",
            FamilyTag::QuinticSixDouble => "5l-2^6",
        }
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Canonical representative of a permutation orbit of ACM classes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AcmRecord {
    pub canonical: DivisorClass,
    pub degree: i64,
    /// `u(D, r)`: distinct classes obtained by permuting exceptional classes.
    pub orbit_count: usize,
    pub family: FamilyTag,
}

pub fn is_acm_initialized(d: &DivisorClass) -> bool {
    if d.is_zero() {
        return true;
    }
    let h = hyperplane(d.surface());
    let dh = d.dot_unchecked(&h);
    d.self_intersection() == dh - 2 && 0 < dh && dh <= d.surface().degree()
}

/// The quadric form of the criterion: `(a-1)(b-1) = 0` and `0 < 2a+2b <= 8`.
pub fn is_acm_initialized_quadric(d: &DivisorClass) -> Result<bool> {
    if d.surface() != SurfaceModel::Quadric {
        return Err(Error::SurfaceMismatch {
            left: d.surface(),
            right: SurfaceModel::Quadric,
        });
    }
    let (a, b) = (d.coeffs()[0], d.coeffs()[1]);
    Ok(d.is_zero() || ((a - 1) * (b - 1) == 0 && 0 < 2 * a + 2 * b && 2 * a + 2 * b <= 8))
}

/// Coefficient box scanned by the enumeration: `a` and every `b_i` for
/// blow-ups (as multiplicities, `D = a l - sum b_i e_i`), both coordinates
/// for the quadric.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchBox {
    pub a: RangeInclusive<i64>,
    pub b: RangeInclusive<i64>,
    pub quadric: RangeInclusive<i64>,
}

impl SearchBox {
    /// Box containing every initialized ACM class.
    pub fn primary() -> Self {
        SearchBox {
            a: 0..=5,
            b: -1..=3,
            quadric: 0..=4,
        }
    }

    /// Strictly larger guard box.
    pub fn widened() -> Self {
        SearchBox {
            a: -1..=6,
            b: -2..=4,
            quadric: -2..=6,
        }
    }

    pub fn contains(&self, d: &DivisorClass) -> bool {
        match d.surface() {
            SurfaceModel::Quadric => d.coeffs().iter().all(|c| self.quadric.contains(c)),
            SurfaceModel::BlowUp(_) => {
                self.a.contains(&d.a()) && d.multiplicities().iter().all(|b| self.b.contains(b))
            }
        }
    }

    fn points(&self, surface: SurfaceModel) -> u64 {
        let len = |r: &RangeInclusive<i64>| (r.end() - r.start() + 1).max(0) as u64;
        match surface {
            SurfaceModel::Quadric => len(&self.quadric).pow(2),
            SurfaceModel::BlowUp(r) => len(&self.a) * len(&self.b).pow(r as u32),
        }
    }

    /// Decodes a mixed-radix index into a class.
    fn class_at(&self, surface: SurfaceModel, mut idx: u64) -> DivisorClass {
        let mut digit = |range: &RangeInclusive<i64>| {
            let w = (range.end() - range.start() + 1) as u64;
            let v = range.start() + (idx % w) as i64;
            idx /= w;
            v
        };
        match surface {
            SurfaceModel::Quadric => {
                let a = digit(&self.quadric);
                let b = digit(&self.quadric);
                DivisorClass::new(surface, &[a, b]).unwrap()
            }
            SurfaceModel::BlowUp(r) => {
                let a = digit(&self.a);
                let mut c = [0i64; 6];
                for slot in c.iter_mut().take(r as usize) {
                    *slot = -digit(&self.b);
                }
                DivisorClass::blow_up(surface, a, &c[..r as usize]).unwrap()
            }
        }
    }
}

/// All criterion hits inside `bx`, in output order.
pub fn scan_box(surface: SurfaceModel, bx: &SearchBox, strategy: Strategy) -> Vec<DivisorClass> {
    let mut hits = filter_map_range(bx.points(surface), strategy, |i| {
        let d = bx.class_at(surface, i);
        is_acm_initialized(&d).then_some(d)
    });
    sort_output(&mut hits);
    hits
}

/// Criterion hits in the primary box, computed once per surface.
pub fn enumerate_acm(surface: SurfaceModel) -> Vec<DivisorClass> {
    static CACHE: [OnceLock<Vec<DivisorClass>>; 8] = [const { OnceLock::new() }; 8];
    let slot = match surface {
        SurfaceModel::BlowUp(r) => r as usize,
        SurfaceModel::Quadric => 7,
    };
    CACHE[slot]
        .get_or_init(|| enumerate_acm_with(surface, Strategy::default()))
        .clone()
}

pub fn enumerate_acm_with(surface: SurfaceModel, strategy: Strategy) -> Vec<DivisorClass> {
    scan_box(surface, &SearchBox::primary(), strategy)
}

/// Criterion hits in the widened box that the primary box misses.
pub fn widened_box_extras(surface: SurfaceModel, strategy: Strategy) -> Vec<DivisorClass> {
    let primary = SearchBox::primary();
    scan_box(surface, &SearchBox::widened(), strategy)
        .into_iter()
        .filter(|d| !primary.contains(d))
        .collect()
}

/// Coefficients with the exceptional part sorted, which groups each
/// permutation orbit together.
fn orbit_key(d: &DivisorClass) -> Vec<i64> {
    let mut v = d.coeffs().to_vec();
    match d.surface() {
        SurfaceModel::BlowUp(_) => v[1..].sort_unstable(),
        SurfaceModel::Quadric => v.sort_unstable(),
    }
    v
}

/// Output order: degree, then sorted coefficients, then coefficients.
pub fn output_order(x: &DivisorClass, y: &DivisorClass) -> Ordering {
    (x.degree(), orbit_key(x), x.coeffs()).cmp(&(y.degree(), orbit_key(y), y.coeffs()))
}

pub fn sort_output(v: &mut [DivisorClass]) {
    v.sort_by(output_order);
}

fn classify_family(a: i64, b: &[i64]) -> Option<FamilyTag> {
    let r = b.len();
    let count = |v: i64| b.iter().filter(|&&x| x == v).count();
    let nonneg = b.iter().all(|&x| x >= 0);
    let ones = count(1);
    let twos = count(2);
    let zeros = count(0);
    let shape = |t: usize, o: usize| nonneg && twos == t && ones == o && zeros == r - t - o;
    if a == 0 && b.iter().all(|&x| x == 0) {
        return Some(FamilyTag::Zero);
    }
    if a == 0 && count(-1) == 1 && zeros == r - 1 {
        return Some(FamilyTag::Exceptional);
    }
    match a {
        1 if shape(0, ones) && ones <= 2.min(r) => Some(FamilyTag::LineChain),
        2 if shape(0, ones) && ones >= r.saturating_sub(3) && ones <= 5.min(r) => {
            Some(FamilyTag::ConicChain)
        }
        3 if twos == 1 && shape(1, ones) && ones + 1 >= 1.max(r.saturating_sub(1)) => {
            Some(FamilyTag::CubicOneDouble)
        }
        4 if r >= 3 && shape(3, r - 3) => Some(FamilyTag::QuarticThreeDouble),
        5 if r == 6 && shape(6, 0) => Some(FamilyTag::QuinticSixDouble),
        _ => None,
    }
}

/// Canonical orbit representative of a blow-up ACM class.
///
/// Multiplicities are sorted descending; an exceptional class is written
/// as `e_1`.
pub fn canonicalize(d: &DivisorClass) -> Result<AcmRecord> {
    let surface = d.surface();
    if surface.points().is_none() {
        return Err(Error::UnsupportedSurface {
            surface,
            reason: "permutation orbits are defined for blow-ups",
        });
    }
    if !is_acm_initialized(d) {
        return Err(Error::PreconditionViolated(format!(
            "{d} is not an initialized ACM class on {surface}"
        )));
    }
    let mut b = d.multiplicities();
    let exceptional = d.a() == 0 && b.iter().filter(|&&x| x == -1).count() == 1;
    if exceptional {
        b.sort_unstable();
    } else {
        b.sort_unstable_by(|x, y| y.cmp(x));
    }
    let family = classify_family(d.a(), &b)
        .ok_or_else(|| Error::Internal(format!("{d} on {surface} matches no closed-form row")))?;
    let canonical = DivisorClass::from_multiplicities(surface, d.a(), &b)?;
    Ok(AcmRecord {
        canonical,
        degree: canonical.degree(),
        orbit_count: multiset_arrangements(&b),
        family,
    })
}

/// Every distinct class in the permutation orbit of a record.
pub fn expand_orbit(record: &AcmRecord) -> Vec<DivisorClass> {
    let s = record.canonical.surface();
    let a = record.canonical.a();
    distinct_permutations(&record.canonical.multiplicities())
        .into_iter()
        .map(|b| DivisorClass::from_multiplicities(s, a, &b).unwrap())
        .collect()
}

/// Number of classes of each degree `0..=H^2`.
pub fn degree_count_table(surface: SurfaceModel) -> BTreeMap<i64, usize> {
    count_by_degree(surface, &enumerate_acm(surface))
}

pub fn count_by_degree(surface: SurfaceModel, classes: &[DivisorClass]) -> BTreeMap<i64, usize> {
    let mut t: BTreeMap<i64, usize> = (0..=surface.degree()).map(|d| (d, 0)).collect();
    for c in classes {
        *t.entry(c.degree()).or_default() += 1;
    }
    t
}

/// Orbit representatives built from the closed-form rows, without any
/// search: `0`, `e_1`, and the five families with their `m`-ranges.
pub fn closed_form_catalog(surface: SurfaceModel) -> Result<Vec<AcmRecord>> {
    let r = surface.points().ok_or(Error::UnsupportedSurface {
        surface,
        reason: "the closed-form list covers blow-ups",
    })?;
    let mut rows: Vec<(i64, Vec<i64>, FamilyTag)> = vec![(0, vec![0; r], FamilyTag::Zero)];
    if r >= 1 {
        let mut b = vec![0; r];
        b[0] = -1;
        rows.push((0, b, FamilyTag::Exceptional));
    }
    let chain = |lead: &[i64], m: usize| -> Vec<i64> {
        let mut b = vec![0; r];
        for (i, slot) in b.iter_mut().enumerate().take(m) {
            *slot = lead.get(i).copied().unwrap_or(1);
        }
        b
    };
    for m in 0..=2.min(r) {
        rows.push((1, chain(&[], m), FamilyTag::LineChain));
    }
    for m in r.saturating_sub(3)..=5.min(r) {
        rows.push((2, chain(&[], m), FamilyTag::ConicChain));
    }
    for m in 1.max(r.saturating_sub(1))..=r {
        rows.push((3, chain(&[2], m), FamilyTag::CubicOneDouble));
    }
    if r >= 3 {
        rows.push((4, chain(&[2, 2, 2], r), FamilyTag::QuarticThreeDouble));
    }
    if r == 6 {
        rows.push((5, vec![2; 6], FamilyTag::QuinticSixDouble));
    }
    let mut out = rows
        .into_iter()
        .map(|(a, b, family)| {
            let canonical = DivisorClass::from_multiplicities(surface, a, &b)?;
            Ok(AcmRecord {
                canonical,
                degree: canonical.degree(),
                orbit_count: multiset_arrangements(&b),
                family,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    out.sort_by(|x, y| output_order(&x.canonical, &y.canonical));
    Ok(out)
}

/// `h^1(L(-1)) = (D.H - D^2)/2 - 1` for a nonzero effective initialized class.
pub fn h1_initialized_twist(d: &DivisorClass) -> Result<i64> {
    let h = hyperplane(d.surface());
    if d.is_zero() || !is_effective(d) {
        return Err(Error::PreconditionViolated(format!(
            "{d} is not a nonzero effective class"
        )));
    }
    if is_effective(&(*d - h)) {
        return Err(Error::PreconditionViolated(format!(
            "{d} is not initialized: D - H is effective"
        )));
    }
    let twice = d.dot_unchecked(&h) - d.self_intersection();
    if twice % 2 != 0 {
        return Err(Error::Internal(format!("D.H - D^2 is odd for {d}")));
    }
    Ok(twice / 2 - 1)
}

/// A nonzero ACM class is a rational normal curve of degree `c` spanning a
/// `P^c`; `residual_sections = h^0(H - D)` counts the hyperplanes through it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AmbientSpan {
    pub dimension: i64,
    pub residual_sections: i64,
}

pub fn ambient_dimension(d: &DivisorClass) -> Result<AmbientSpan> {
    if d.is_zero() || !is_acm_initialized(d) {
        return Err(Error::PreconditionViolated(format!(
            "{d} is not a nonzero initialized ACM class"
        )));
    }
    let c = d.degree();
    let n = d.surface().degree();
    Ok(AmbientSpan {
        dimension: c,
        residual_sections: if c < n { n - c } else { 0 },
    })
}
