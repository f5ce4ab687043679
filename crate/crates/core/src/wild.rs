//! Intersection bounds between ACM classes, extension dimensions, and the
//! rank-`n` extension families on surfaces of degree at most six.

use num_rational::Ratio;
use serde::Serialize;

use crate::acm::{enumerate_acm, is_acm_initialized};
use crate::error::{Error, Result};
use crate::par::{flat_map_slice, Strategy};
use crate::picard::{euler_characteristic, hyperplane, DivisorClass, SurfaceModel};

/// Upper bound for `C.D` when `(m-1)n < c+d <= mn`:
/// `2 + (m-1)(c+d) - m(m-1)n/2`.
pub fn intersection_upper_bound(c: i64, d: i64, m: i64, n: i64) -> Result<i64> {
    if m < 1 || c < 1 || d < 1 || n < 1 {
        return Err(Error::PreconditionViolated(format!(
            "need m, c, d, n >= 1 (got m={m}, c={c}, d={d}, n={n})"
        )));
    }
    if !((m - 1) * n < c + d && c + d <= m * n) {
        return Err(Error::PreconditionViolated(format!(
            "c+d={} is outside the window ({}, {}]",
            c + d,
            (m - 1) * n,
            m * n
        )));
    }
    Ok(2 + (m - 1) * (c + d) - m * (m - 1) * n / 2)
}

/// The upper bound with `m` chosen as the unique window containing `c+d`.
pub fn intersection_upper_bound_auto(c: i64, d: i64, n: i64) -> Result<i64> {
    if n < 1 {
        return Err(Error::PreconditionViolated(
            "surface degree must be positive".into(),
        ));
    }
    let m = ((c + d) + n - 1).div_euclid(n).max(1);
    intersection_upper_bound(c, d, m, n)
}

/// `C.D >= min(c, d) - 2`, with equality iff `C = D`.
pub fn intersection_lower_bound(c: i64, d: i64) -> Result<i64> {
    if c < 1 || d < 1 {
        return Err(Error::PreconditionViolated(format!(
            "degrees must be positive (got {c}, {d})"
        )));
    }
    Ok(c.min(d) - 2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExtDimensions {
    pub hom: i64,
    pub ext1: i64,
    pub ext2: i64,
}

fn require_top_degree(d: &DivisorClass) -> Result<()> {
    let n = d.surface().degree();
    if !is_acm_initialized(d) || d.degree() != n {
        return Err(Error::PreconditionViolated(format!(
            "{d} is not an initialized ACM class of degree {n}"
        )));
    }
    Ok(())
}

/// `Ext^i(O(C), O(D))` for distinct ACM classes of maximal degree `d`:
/// `Hom = Ext^2 = 0` and `dim Ext^1 = 1 + C.D - d`.
pub fn ext1_dimension(c: &DivisorClass, d: &DivisorClass) -> Result<ExtDimensions> {
    let cd = c.dot(d)?;
    if c == d {
        return Err(Error::NotApplicable(format!(
            "{c} and {d} coincide; the formula needs distinct classes"
        )));
    }
    require_top_degree(c)?;
    require_top_degree(d)?;
    let ext1 = 1 + cd - c.surface().degree();
    if ext1 < 0 {
        return Err(Error::Internal(format!("negative Ext^1 for {c}, {d}")));
    }
    Ok(ExtDimensions {
        hom: 0,
        ext1,
        ext2: 0,
    })
}

/// `dim Ext^1(O(R), E)` where `0 -> O(C) -> E -> O(D) -> 0`:
/// `2 - 2d + C.R + D.R`.
pub fn ext1_dimension_vs_rank2(
    r: &DivisorClass,
    c: &DivisorClass,
    d: &DivisorClass,
) -> Result<i64> {
    r.dot(c)?;
    r.dot(d)?;
    if r == c || r == d || c == d {
        return Err(Error::NotApplicable(
            "R, C and D must be pairwise distinct".into(),
        ));
    }
    for x in [r, c, d] {
        require_top_degree(x)?;
    }
    let n = r.surface().degree();
    Ok(2 - 2 * n + c.dot_unchecked(r) + d.dot_unchecked(r))
}

/// Distinct maximal-degree ACM classes `C, D` with `C.D = 1 + d`, and
/// `E = 2H - C`, `F = 2H - D`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WildPair {
    #[serde(serialize_with = "ser_class")]
    pub c: DivisorClass,
    #[serde(serialize_with = "ser_class")]
    pub d: DivisorClass,
    #[serde(serialize_with = "ser_class")]
    pub e: DivisorClass,
    #[serde(serialize_with = "ser_class")]
    pub f: DivisorClass,
}

fn ser_class<S: serde::Serializer>(d: &DivisorClass, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&d.to_string())
}

impl WildPair {
    pub fn new(c: DivisorClass, d: DivisorClass) -> Result<Self> {
        let cd = c.dot(&d)?;
        let n = c.surface().degree();
        if c == d {
            return Err(Error::PreconditionViolated("C and D must differ".into()));
        }
        require_top_degree(&c)?;
        require_top_degree(&d)?;
        if cd != 1 + n {
            return Err(Error::PreconditionViolated(format!(
                "C.D = {cd}, expected {}",
                1 + n
            )));
        }
        let h2 = 2 * hyperplane(c.surface());
        let pair = WildPair {
            c,
            d,
            e: h2 - c,
            f: h2 - d,
        };
        require_top_degree(&pair.e)?;
        require_top_degree(&pair.f)?;
        Ok(pair)
    }

    pub fn surface(&self) -> SurfaceModel {
        self.c.surface()
    }

    /// `1 + X.Y - d` for `(C,E), (D,F), (C,D), (E,F), (D,E), (C,F)`.
    pub fn relation_block(&self) -> [i64; 6] {
        let n = self.surface().degree();
        let v = |x: &DivisorClass, y: &DivisorClass| 1 + x.dot_unchecked(y) - n;
        [
            v(&self.c, &self.e),
            v(&self.d, &self.f),
            v(&self.c, &self.d),
            v(&self.e, &self.f),
            v(&self.d, &self.e),
            v(&self.c, &self.f),
        ]
    }
}

/// Initialized ACM classes of degree `H^2`, in output order.
pub fn maximal_degree_classes(surface: SurfaceModel) -> Vec<DivisorClass> {
    enumerate_acm(surface)
        .into_iter()
        .filter(|d| d.degree() == surface.degree())
        .collect()
}

/// All ordered pairs of maximal-degree classes with `C.D = 1 + d`, in
/// lexicographic order of the output positions.
pub fn wild_pair_hits(
    surface: SurfaceModel,
    strategy: Strategy,
) -> Vec<(DivisorClass, DivisorClass)> {
    let top = maximal_degree_classes(surface);
    let target = 1 + surface.degree();
    flat_map_slice(&top, strategy, |i, c| {
        top.iter()
            .enumerate()
            .filter(|&(j, d)| j != i && c.dot_unchecked(d) == target)
            .map(|(_, d)| (*c, *d))
            .collect()
    })
}

/// The first hit of the exhaustive pair search.
pub fn find_wild_pair(surface: SurfaceModel) -> Result<WildPair> {
    let (c, d) = wild_pair_hits(surface, Strategy::default())
        .into_iter()
        .next()
        .ok_or_else(|| {
            Error::NotFound(format!(
                "no maximal-degree ACM pair with C.D = {} on {surface}",
                1 + surface.degree()
            ))
        })?;
    WildPair::new(c, d)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "m")]
pub enum FamilyShape {
    Rank2,
    Odd(usize),
    Even(usize),
}

/// One extension `0 -> sub -> next -> O(quotient) -> 0` of the construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtensionStep {
    pub sub: String,
    pub quotient: &'static str,
    #[serde(serialize_with = "ser_class")]
    pub quotient_class: DivisorClass,
    /// Number of distinct extensions taken at this step.
    pub copies: usize,
    /// `dim Ext^1(O(quotient), S_i)` for each direct summand `S_i` of `sub`.
    pub ext1: Vec<i64>,
}

impl ExtensionStep {
    /// Dimension of the product of projectivized extension spaces.
    pub fn param_dim(&self) -> i64 {
        self.ext1.iter().map(|e| e - 1).sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyPlan {
    pub surface: SurfaceModel,
    pub rank: usize,
    pub shape: FamilyShape,
    pub param_dim: i64,
    pub pair: WildPair,
    pub schedule: Vec<ExtensionStep>,
    /// Line bundles of the filtration, one per unit of rank.
    #[serde(serialize_with = "ser_classes")]
    pub constituents: Vec<DivisorClass>,
}

fn ser_classes<S: serde::Serializer>(
    v: &[DivisorClass],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|d| d.to_string()))
}

/// Extension schedule and parameter-space dimension of the simple ACM
/// bundles of rank `n`.
pub fn family_plan(surface: SurfaceModel, n: usize) -> Result<FamilyPlan> {
    if surface.degree() > 6 {
        return Err(Error::UnsupportedSurface {
            surface,
            reason: "the extension families need a surface of degree at most 6",
        });
    }
    if n < 2 {
        return Err(Error::PreconditionViolated(format!(
            "rank must be at least 2, got {n}"
        )));
    }
    let pair = find_wild_pair(surface)?;
    plan_for_pair(pair, n)
}

pub fn plan_for_pair(pair: WildPair, n: usize) -> Result<FamilyPlan> {
    let WildPair { c, d, e, f } = pair;
    let surface = pair.surface();
    let (shape, schedule, constituents) = if n == 2 {
        let step = ExtensionStep {
            sub: "O(E)".into(),
            quotient: "C",
            quotient_class: c,
            copies: 1,
            ext1: vec![ext1_dimension(&c, &e)?.ext1],
        };
        (FamilyShape::Rank2, vec![step], vec![e, c])
    } else {
        let m = (n - 1) / 2;
        let rank2 = ExtensionStep {
            sub: "O(C)".into(),
            quotient: "D",
            quotient_class: d,
            copies: m,
            ext1: vec![ext1_dimension(&d, &c)?.ext1],
        };
        let per_summand = ext1_dimension_vs_rank2(&e, &c, &d)?;
        let odd = ExtensionStep {
            sub: "E_1 + ... + E_m".into(),
            quotient: "E",
            quotient_class: e,
            copies: 1,
            ext1: vec![per_summand; m],
        };
        let mut constituents: Vec<DivisorClass> =
            std::iter::repeat_n([c, d], m).flatten().collect();
        constituents.push(e);
        if n % 2 == 1 {
            (FamilyShape::Odd(m), vec![rank2, odd], constituents)
        } else {
            let to_h =
                m as i64 * ext1_dimension_vs_rank2(&f, &c, &d)? + ext1_dimension(&f, &e)?.ext1;
            let even = ExtensionStep {
                sub: "H".into(),
                quotient: "F",
                quotient_class: f,
                copies: 1,
                ext1: vec![to_h],
            };
            constituents.push(f);
            (FamilyShape::Even(m), vec![rank2, odd, even], constituents)
        }
    };
    let param_dim = schedule.last().map(ExtensionStep::param_dim).unwrap_or(0);
    if constituents.len() != n || param_dim < n as i64 - 1 {
        return Err(Error::Internal(format!(
            "rank-{n} plan has {} constituents and dimension {param_dim}",
            constituents.len()
        )));
    }
    Ok(FamilyPlan {
        surface,
        rank: n,
        shape,
        param_dim,
        pair,
        schedule,
        constituents,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ZeroRegularity {
    pub zero_regular: bool,
    /// `h^2(L(-2))`.
    pub h2_twist: i64,
}

/// 0-regularity of an initialized ACM line bundle: holds iff `deg D = H^2`.
pub fn is_zero_regular_acm(d: &DivisorClass) -> Result<ZeroRegularity> {
    if !is_acm_initialized(d) {
        return Err(Error::PreconditionViolated(format!(
            "{d} is not an initialized ACM class"
        )));
    }
    let s = d.surface();
    let n = s.degree();
    let h2 = euler_characteristic(&(*d - 2 * hyperplane(s)));
    if d.is_zero() {
        return Ok(ZeroRegularity {
            zero_regular: false,
            h2_twist: h2,
        });
    }
    if h2 != n - d.degree() {
        return Err(Error::Internal(format!("chi(D - 2H) != n - D.H for {d}")));
    }
    Ok(ZeroRegularity {
        zero_regular: d.degree() == n,
        h2_twist: h2,
    })
}

/// Slope `deg / rank` of every bundle in the family.
pub fn family_slope(surface: SurfaceModel, plan: &FamilyPlan) -> Result<Ratio<i64>> {
    if plan.surface != surface {
        return Err(Error::SurfaceMismatch {
            left: surface,
            right: plan.surface,
        });
    }
    let total: i64 = plan.constituents.iter().map(DivisorClass::degree).sum();
    Ok(Ratio::new(total, plan.rank as i64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse_divisor;

    fn x(r: u8) -> SurfaceModel {
        SurfaceModel::BlowUp(r)
    }

    fn p(s: SurfaceModel, t: &str) -> DivisorClass {
        parse_divisor(s, t).unwrap()
    }

    #[test]
    fn bound_examples() {
        for n in 3..=9 {
            assert_eq!(intersection_upper_bound(n, n, 2, n).unwrap(), n + 2);
        }
        assert_eq!(intersection_upper_bound(1, 2, 1, 6).unwrap(), 2);
        assert_eq!(intersection_upper_bound(3, 3, 2, 3).unwrap(), 5);
        assert!(intersection_upper_bound(3, 3, 1, 3).is_err());
        assert!(intersection_upper_bound(0, 3, 1, 3).is_err());
        assert_eq!(intersection_upper_bound_auto(2, 2, 3).unwrap(), 3);
        assert_eq!(intersection_lower_bound(6, 6).unwrap(), 4);
        assert_eq!(intersection_lower_bound(1, 6).unwrap(), -1);
        assert!(intersection_lower_bound(0, 6).is_err());
    }

    #[test]
    fn table_pairs_on_x3() {
        let c = p(x(3), "3l-2e1-e2");
        let d = p(x(3), "3l-2e2-e3");
        assert_eq!(ext1_dimension(&c, &d).unwrap().ext1, 2);
        let w = WildPair::new(c, d).unwrap();
        assert_eq!(w.relation_block(), [3, 3, 2, 2, 0, 0]);
        assert_eq!(ext1_dimension(&w.d, &w.e).unwrap().ext1, 0);
        assert_eq!(ext1_dimension(&w.c, &w.e).unwrap().ext1, 3);
        assert_eq!(ext1_dimension_vs_rank2(&w.e, &c, &d).unwrap(), 3);
        assert_eq!(ext1_dimension_vs_rank2(&w.f, &c, &d).unwrap(), 3);
        assert!(matches!(
            ext1_dimension_vs_rank2(&c, &c, &d),
            Err(Error::NotApplicable(_))
        ));
        assert!(matches!(
            ext1_dimension(&c, &c),
            Err(Error::NotApplicable(_))
        ));
        assert!(matches!(
            ext1_dimension(&c, &p(x(3), "l")),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn pair_search() {
        let hits = wild_pair_hits(x(3), Strategy::Parallel);
        assert!(hits.contains(&(p(x(3), "3l-2e1-e2"), p(x(3), "3l-2e2-e3"))));
        let hits6 = wild_pair_hits(x(6), Strategy::Sequential);
        assert!(hits6.contains(&(p(x(6), "3l-2e1-e2-e3-e4-e5"), p(x(6), "3l-2e2-e3-e4-e5-e6"))));
        assert!(matches!(find_wild_pair(x(0)), Err(Error::NotFound(_))));
        assert!(find_wild_pair(x(3)).is_ok());
        for s in SurfaceModel::all() {
            assert_eq!(
                wild_pair_hits(s, Strategy::Sequential),
                wild_pair_hits(s, Strategy::Parallel)
            );
        }
    }

    #[test]
    fn plan_examples() {
        assert_eq!(family_plan(x(3), 2).unwrap().param_dim, 2);
        assert_eq!(family_plan(x(4), 5).unwrap().param_dim, 4);
        let six = family_plan(x(6), 6).unwrap();
        assert_eq!(six.param_dim, 7);
        assert_eq!(six.schedule.last().unwrap().ext1, vec![8]);
        assert!(matches!(
            family_plan(x(2), 2),
            Err(Error::UnsupportedSurface { .. })
        ));
        assert!(matches!(
            family_plan(SurfaceModel::Quadric, 2),
            Err(Error::UnsupportedSurface { .. })
        ));
        assert!(matches!(
            family_plan(x(3), 1),
            Err(Error::PreconditionViolated(_))
        ));
    }

    #[test]
    fn regularity_examples() {
        let top = p(x(3), "3l-2e1-e2");
        assert!(is_zero_regular_acm(&top).unwrap().zero_regular);
        let z = is_zero_regular_acm(&x(5).zero()).unwrap();
        assert!(!z.zero_regular);
        assert_eq!(z.h2_twist, 5);
        let e1 = is_zero_regular_acm(&p(x(1), "e1")).unwrap();
        assert_eq!((e1.zero_regular, e1.h2_twist), (false, 7));
        assert!(is_zero_regular_acm(&hyperplane(x(2))).is_err());
    }

    #[test]
    fn slopes() {
        let plan = family_plan(x(3), 2).unwrap();
        assert_eq!(family_slope(x(3), &plan).unwrap(), Ratio::from_integer(6));
        let plan = family_plan(x(6), 7).unwrap();
        assert_eq!(family_slope(x(6), &plan).unwrap(), Ratio::from_integer(3));
        for n in 2..=9 {
            let plan = family_plan(x(4), n).unwrap();
            assert_eq!(family_slope(x(4), &plan).unwrap(), Ratio::from_integer(5));
        }
        assert!(family_slope(x(5), &plan).is_err());
    }
}
