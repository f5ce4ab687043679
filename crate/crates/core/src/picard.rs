//! Picard lattices of strong del Pezzo surfaces.
//!
//! A blow-up `X^r` of `r <= 6` general points of the plane has basis
//! `l, e_1, ..., e_r` with `l^2 = 1`, `e_i^2 = -1` and all mixed products
//! zero. The quadric uses the ruling classes `h, m` with `h^2 = m^2 = 0` and
//! `h.m = 1`. Coefficients are stored with the sign they carry in the class,
//! so `3l - 2e_1` is `[3, -2]`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest Picard rank among supported surfaces (`X^6`).
pub const MAX_RANK: usize = 7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SurfaceKind {
    BlowUp,
    Quadric,
}

/// A strong del Pezzo surface: the plane blown up in `r` points, or the quadric.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum SurfaceModel {
    BlowUp(u8),
    Quadric,
}

impl SurfaceModel {
    pub const QUADRIC: SurfaceModel = SurfaceModel::Quadric;

    pub fn blow_up(points: usize) -> Result<Self> {
        if points > 6 {
            return Err(Error::InvalidSurface(format!(
                "X{points}: at most 6 points can be blown up"
            )));
        }
        Ok(SurfaceModel::BlowUp(points as u8))
    }

    /// All eight surfaces, in the order `X^0, ..., X^6, Q`.
    pub fn all() -> Vec<SurfaceModel> {
        (0..=6u8)
            .map(SurfaceModel::BlowUp)
            .chain(std::iter::once(SurfaceModel::Quadric))
            .collect()
    }

    pub fn kind(self) -> SurfaceKind {
        match self {
            SurfaceModel::BlowUp(_) => SurfaceKind::BlowUp,
            SurfaceModel::Quadric => SurfaceKind::Quadric,
        }
    }

    /// Number of blown-up points, `None` for the quadric.
    pub fn points(self) -> Option<usize> {
        match self {
            SurfaceModel::BlowUp(r) => Some(r as usize),
            SurfaceModel::Quadric => None,
        }
    }

    /// `H^2`, the degree of the anticanonical embedding.
    pub fn degree(self) -> i64 {
        match self {
            SurfaceModel::BlowUp(r) => 9 - r as i64,
            SurfaceModel::Quadric => 8,
        }
    }

    pub fn rank(self) -> usize {
        match self {
            SurfaceModel::BlowUp(r) => r as usize + 1,
            SurfaceModel::Quadric => 2,
        }
    }

    /// Gram matrix of the pairing in the stored basis.
    pub fn gram_matrix(self) -> Vec<Vec<i64>> {
        let n = self.rank();
        let mut g = vec![vec![0; n]; n];
        match self {
            SurfaceModel::BlowUp(_) => {
                g[0][0] = 1;
                for (i, row) in g.iter_mut().enumerate().skip(1) {
                    row[i] = -1;
                }
            }
            SurfaceModel::Quadric => {
                g[0][1] = 1;
                g[1][0] = 1;
            }
        }
        g
    }

    pub fn zero(self) -> DivisorClass {
        DivisorClass {
            surface: self,
            coeffs: [0; MAX_RANK],
        }
    }

    pub fn canonical_class(self) -> DivisorClass {
        canonical_class(self)
    }

    pub fn hyperplane(self) -> DivisorClass {
        hyperplane(self)
    }
}

impl fmt::Display for SurfaceModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SurfaceModel::BlowUp(r) => write!(f, "X{r}"),
            SurfaceModel::Quadric => f.write_str("Q"),
        }
    }
}

impl FromStr for SurfaceModel {
    type Err = Error;

    /// Accepts `P2`, `X0` .. `X6` and `Q` (case-insensitive).
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_uppercase();
        match t.as_str() {
            "P2" => Ok(SurfaceModel::BlowUp(0)),
            "Q" => Ok(SurfaceModel::Quadric),
            _ => {
                let digits = t
                    .strip_prefix('X')
                    .ok_or_else(|| Error::InvalidSurface(format!("unknown surface `{s}`")))?;
                let r: usize = digits
                    .parse()
                    .map_err(|_| Error::InvalidSurface(format!("unknown surface `{s}`")))?;
                SurfaceModel::blow_up(r)
            }
        }
    }
}

impl TryFrom<String> for SurfaceModel {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<SurfaceModel> for String {
    fn from(s: SurfaceModel) -> String {
        s.to_string()
    }
}

/// A linear equivalence class of divisors.
///
/// Only the first `surface.rank()` coefficients are meaningful; the rest are
/// kept at zero so that derived equality and hashing are exact.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct DivisorClass {
    surface: SurfaceModel,
    coeffs: [i64; MAX_RANK],
}

impl DivisorClass {
    pub fn new(surface: SurfaceModel, coeffs: &[i64]) -> Result<Self> {
        if coeffs.len() != surface.rank() {
            return Err(Error::PreconditionViolated(format!(
                "{surface} has Picard rank {}, got {} coefficients",
                surface.rank(),
                coeffs.len()
            )));
        }
        let mut c = [0; MAX_RANK];
        c[..coeffs.len()].copy_from_slice(coeffs);
        Ok(DivisorClass { surface, coeffs: c })
    }

    /// `a l + sum c_i e_i` on a blow-up.
    pub fn blow_up(surface: SurfaceModel, a: i64, exceptional: &[i64]) -> Result<Self> {
        let mut v = Vec::with_capacity(exceptional.len() + 1);
        v.push(a);
        v.extend_from_slice(exceptional);
        match surface {
            SurfaceModel::BlowUp(_) => Self::new(surface, &v),
            SurfaceModel::Quadric => Err(Error::UnsupportedSurface {
                surface,
                reason: "the quadric has no blow-up basis",
            }),
        }
    }

    /// The class `l` on a blow-up.
    pub fn line_class(surface: SurfaceModel) -> Result<Self> {
        exceptional_count(surface)?;
        let mut d = surface.zero();
        d.coeffs[0] = 1;
        Ok(d)
    }

    /// The exceptional class `e_i`, 1-based.
    pub fn exceptional(surface: SurfaceModel, i: usize) -> Result<Self> {
        let r = exceptional_count(surface)?;
        if i == 0 || i > r {
            return Err(Error::PreconditionViolated(format!(
                "e{i} does not exist on {surface}"
            )));
        }
        let mut d = surface.zero();
        d.coeffs[i] = 1;
        Ok(d)
    }

    pub fn surface(&self) -> SurfaceModel {
        self.surface
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs[..self.surface.rank()]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Coefficient of `l` on a blow-up (`alpha` of `alpha h + beta m` on the quadric).
    pub fn a(&self) -> i64 {
        self.coeffs[0]
    }

    /// Multiplicities `b_i` with `D = a l - sum b_i e_i`.
    pub fn multiplicities(&self) -> Vec<i64> {
        match self.surface {
            SurfaceModel::BlowUp(_) => self.coeffs().iter().skip(1).map(|c| -c).collect(),
            SurfaceModel::Quadric => Vec::new(),
        }
    }

    /// Builds `a l - sum b_i e_i` from multiplicities.
    pub fn from_multiplicities(surface: SurfaceModel, a: i64, b: &[i64]) -> Result<Self> {
        let c: Vec<i64> = b.iter().map(|x| -x).collect();
        Self::blow_up(surface, a, &c)
    }

    pub fn dot(&self, other: &DivisorClass) -> Result<i64> {
        intersect(self, other)
    }

    /// Intersection number without the surface check. Both classes must live
    /// on the same surface.
    pub(crate) fn dot_unchecked(&self, other: &DivisorClass) -> i64 {
        debug_assert_eq!(self.surface, other.surface);
        match self.surface {
            SurfaceModel::BlowUp(r) => {
                let mut s = self.coeffs[0] * other.coeffs[0];
                for i in 1..=r as usize {
                    s -= self.coeffs[i] * other.coeffs[i];
                }
                s
            }
            SurfaceModel::Quadric => {
                self.coeffs[0] * other.coeffs[1] + self.coeffs[1] * other.coeffs[0]
            }
        }
    }

    pub fn self_intersection(&self) -> i64 {
        self.dot_unchecked(self)
    }

    pub fn degree(&self) -> i64 {
        degree(self)
    }

    pub fn checked_add(&self, other: &DivisorClass) -> Result<DivisorClass> {
        same_surface(self, other)?;
        Ok(*self + *other)
    }

    pub fn checked_sub(&self, other: &DivisorClass) -> Result<DivisorClass> {
        same_surface(self, other)?;
        Ok(*self - *other)
    }
}

impl fmt::Debug for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.surface, crate::text::format_divisor(self))
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::text::format_divisor(self))
    }
}

impl PartialOrd for DivisorClass {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for DivisorClass {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.surface, self.coeffs).cmp(&(other.surface, other.coeffs))
    }
}

fn assert_same(a: &DivisorClass, b: &DivisorClass) {
    assert_eq!(
        a.surface, b.surface,
        "arithmetic on divisor classes from different surfaces"
    );
}

impl Add for DivisorClass {
    type Output = DivisorClass;
    fn add(mut self, rhs: DivisorClass) -> DivisorClass {
        self += rhs;
        self
    }
}

impl AddAssign for DivisorClass {
    fn add_assign(&mut self, rhs: DivisorClass) {
        assert_same(self, &rhs);
        for (x, y) in self.coeffs.iter_mut().zip(rhs.coeffs) {
            *x += y;
        }
    }
}

impl Sub for DivisorClass {
    type Output = DivisorClass;
    fn sub(mut self, rhs: DivisorClass) -> DivisorClass {
        self -= rhs;
        self
    }
}

impl SubAssign for DivisorClass {
    fn sub_assign(&mut self, rhs: DivisorClass) {
        assert_same(self, &rhs);
        for (x, y) in self.coeffs.iter_mut().zip(rhs.coeffs) {
            *x -= y;
        }
    }
}

impl Neg for DivisorClass {
    type Output = DivisorClass;
    fn neg(mut self) -> DivisorClass {
        for x in self.coeffs.iter_mut() {
            *x = -*x;
        }
        self
    }
}

impl Mul<DivisorClass> for i64 {
    type Output = DivisorClass;
    fn mul(self, mut rhs: DivisorClass) -> DivisorClass {
        for x in rhs.coeffs.iter_mut() {
            *x *= self;
        }
        rhs
    }
}

fn same_surface(a: &DivisorClass, b: &DivisorClass) -> Result<()> {
    if a.surface != b.surface {
        return Err(Error::SurfaceMismatch {
            left: a.surface,
            right: b.surface,
        });
    }
    Ok(())
}

pub(crate) fn exceptional_count(surface: SurfaceModel) -> Result<usize> {
    surface.points().ok_or(Error::UnsupportedSurface {
        surface,
        reason: "the quadric has no exceptional classes",
    })
}

/// The intersection pairing.
pub fn intersect(d: &DivisorClass, e: &DivisorClass) -> Result<i64> {
    same_surface(d, e)?;
    Ok(d.dot_unchecked(e))
}

pub fn canonical_class(surface: SurfaceModel) -> DivisorClass {
    let mut k = surface.zero();
    match surface {
        SurfaceModel::BlowUp(r) => {
            k.coeffs[0] = -3;
            for c in k.coeffs[1..=r as usize].iter_mut() {
                *c = 1;
            }
        }
        SurfaceModel::Quadric => {
            k.coeffs[0] = -2;
            k.coeffs[1] = -2;
        }
    }
    k
}

/// `H = -K`, the very ample class defining the embedding.
pub fn hyperplane(surface: SurfaceModel) -> DivisorClass {
    -canonical_class(surface)
}

pub fn degree(d: &DivisorClass) -> i64 {
    d.dot_unchecked(&hyperplane(d.surface))
}

/// `p_a(D) = (D^2 - deg D)/2 + 1`.
pub fn arithmetic_genus(d: &DivisorClass) -> Ratio<i64> {
    Ratio::new(d.self_intersection() - degree(d), 2) + 1
}

/// Riemann-Roch: `chi(D) = D.(D + H)/2 + 1`.
pub fn euler_characteristic(d: &DivisorClass) -> i64 {
    let h = hyperplane(d.surface);
    let twice = d.dot_unchecked(&(*d + h));
    // D^2 + D.K is even on every smooth surface.
    debug_assert!(twice % 2 == 0, "odd D(D+H) for {d:?}");
    twice / 2 + 1
}

/// Coordinates `alpha C_0 + beta f` on the ruled model of `X^1`, with
/// `C_0 = e_1` and `f = l - e_1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RuledCoords {
    pub section: i64,
    pub fiber: i64,
}

pub fn to_ruled(d: &DivisorClass) -> Result<RuledCoords> {
    if d.surface != SurfaceModel::BlowUp(1) {
        return Err(Error::SurfaceMismatch {
            left: d.surface,
            right: SurfaceModel::BlowUp(1),
        });
    }
    // beta l - (beta - alpha) e_1
    let beta = d.coeffs[0];
    let alpha = d.coeffs[1] + beta;
    Ok(RuledCoords {
        section: alpha,
        fiber: beta,
    })
}

pub fn from_ruled(c: RuledCoords) -> DivisorClass {
    let mut d = SurfaceModel::BlowUp(1).zero();
    d.coeffs[0] = c.fiber;
    d.coeffs[1] = c.section - c.fiber;
    d
}

/// Exact signature `(positive, negative)` of the pairing on the Picard lattice.
pub fn signature(surface: SurfaceModel) -> (usize, usize) {
    crate::lattice::signature(&surface.gram_matrix())
}
