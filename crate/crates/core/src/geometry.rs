//! (-1)-lines and the positivity criteria built on them.

use std::collections::HashSet;
use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::picard::{exceptional_count, hyperplane, DivisorClass, SurfaceModel};

/// Name of a (-1)-line in the standard blow-up basis.
///
/// The derived order is the canonical line order:
/// `E(1) < .. < E(r) < F(1,2) < F(1,3) < .. < G < G(1) < .. < G(6)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum LineLabel {
    /// The exceptional class `e_i`.
    E(u8),
    /// `l - e_i - e_j`, `i < j`.
    F(u8, u8),
    /// `2l - e_1 - .. - e_5` on `X^5`.
    G,
    /// `2l - sum_{i != j} e_i` on `X^6`.
    GOmitting(u8),
}

impl fmt::Display for LineLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LineLabel::E(i) => write!(f, "E({i})"),
            LineLabel::F(i, j) => write!(f, "F({i},{j})"),
            LineLabel::G => f.write_str("G"),
            LineLabel::GOmitting(j) => write!(f, "G({j})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LineClass {
    pub label: LineLabel,
    pub class: DivisorClass,
}

pub fn enumerate_lines(surface: SurfaceModel) -> Vec<LineClass> {
    lines_of(surface).to_vec()
}

/// Cached line list for a surface.
pub(crate) fn lines_of(surface: SurfaceModel) -> &'static [LineClass] {
    static CACHE: OnceLock<Vec<Vec<LineClass>>> = OnceLock::new();
    let all = CACHE.get_or_init(|| SurfaceModel::all().into_iter().map(build_lines).collect());
    let idx = match surface {
        SurfaceModel::BlowUp(r) => r as usize,
        SurfaceModel::Quadric => 7,
    };
    &all[idx]
}

fn build_lines(surface: SurfaceModel) -> Vec<LineClass> {
    let r = match surface {
        SurfaceModel::BlowUp(r) => r as usize,
        SurfaceModel::Quadric => return Vec::new(),
    };
    let mut out = Vec::new();
    let mk = |a: i64, b: &[i64]| DivisorClass::from_multiplicities(surface, a, b).unwrap();
    for i in 1..=r {
        let mut b = vec![0; r];
        b[i - 1] = -1;
        out.push(LineClass {
            label: LineLabel::E(i as u8),
            class: mk(0, &b),
        });
    }
    for i in 1..=r {
        for j in i + 1..=r {
            let mut b = vec![0; r];
            b[i - 1] = 1;
            b[j - 1] = 1;
            out.push(LineClass {
                label: LineLabel::F(i as u8, j as u8),
                class: mk(1, &b),
            });
        }
    }
    if r == 5 {
        out.push(LineClass {
            label: LineLabel::G,
            class: mk(2, &[1; 5]),
        });
    }
    if r == 6 {
        for j in 1..=6 {
            let mut b = vec![1; 6];
            b[j - 1] = 0;
            out.push(LineClass {
                label: LineLabel::GOmitting(j as u8),
                class: mk(2, &b),
            });
        }
    }
    out
}

/// Effectivity of a divisor class.
///
/// Closed forms on the quadric, the plane and `X^1`. For `r >= 2` a class is
/// effective iff it is a nonnegative integer combination of (-1)-lines. That
/// is decided by peeling: a line `L` with `D.L < 0` must occur in every such
/// combination, and once `D.L >= 0` for all lines the alternative-base
/// decomposition has nonnegative coefficients, each base element being a sum
/// of lines.
pub fn is_effective(d: &DivisorClass) -> bool {
    let c = d.coeffs();
    match d.surface() {
        SurfaceModel::Quadric => c[0] >= 0 && c[1] >= 0,
        SurfaceModel::BlowUp(0) => c[0] >= 0,
        SurfaceModel::BlowUp(1) => {
            // D.f = a + c_1 and D.l = a
            c[0] + c[1] >= 0 && c[0] >= 0
        }
        SurfaceModel::BlowUp(_) => peel_lines(d),
    }
}

fn peel_lines(d: &DivisorClass) -> bool {
    let lines = lines_of(d.surface());
    let h = hyperplane(d.surface());
    let mut cur = *d;
    loop {
        if cur.is_zero() {
            return true;
        }
        if cur.dot_unchecked(&h) < 0 {
            return false;
        }
        match lines.iter().find(|l| cur.dot_unchecked(&l.class) < 0) {
            Some(l) => cur -= l.class,
            None => return true,
        }
    }
}

/// Bounded exhaustive search for `d = sum n_i g_i` with `n_i >= 0`.
///
/// Every generator must have positive degree; the degree of `d` then bounds
/// each coefficient.
pub fn is_nonnegative_combination(d: &DivisorClass, generators: &[DivisorClass]) -> bool {
    let h = hyperplane(d.surface());
    let degs: Vec<i64> = generators.iter().map(|g| g.dot_unchecked(&h)).collect();
    assert!(
        degs.iter().all(|&x| x > 0),
        "generators must have positive degree"
    );
    let mut dead = HashSet::new();
    search(d, generators, &degs, 0, &h, &mut dead)
}

fn search(
    rem: &DivisorClass,
    gens: &[DivisorClass],
    degs: &[i64],
    idx: usize,
    h: &DivisorClass,
    dead: &mut HashSet<(usize, DivisorClass)>,
) -> bool {
    if rem.is_zero() {
        return true;
    }
    let deg = rem.dot_unchecked(h);
    if idx == gens.len() || deg <= 0 {
        return false;
    }
    if dead.contains(&(idx, *rem)) {
        return false;
    }
    let mut cur = *rem;
    for _ in 0..=deg / degs[idx] {
        if search(&cur, gens, degs, idx + 1, h, dead) {
            return true;
        }
        cur -= gens[idx];
    }
    dead.insert((idx, *rem));
    false
}

pub fn is_very_ample(d: &DivisorClass) -> Result<bool> {
    match d.surface() {
        SurfaceModel::BlowUp(r) if r >= 1 => Ok(lines_of(d.surface())
            .iter()
            .all(|l| d.dot_unchecked(&l.class) > 0)
            && (r >= 2 || {
                // r = 1: also D.(l - e_1) > 0
                let c = d.coeffs();
                c[0] + c[1] > 0
            })),
        surface => Err(Error::UnsupportedSurface {
            surface,
            reason: "the very-ampleness criterion covers blow-ups of 1 to 6 points",
        }),
    }
}

/// Whether `|D|` has smooth members without (-1)-line components; such a
/// class is also globally generated.
pub fn has_smooth_nonline_member(d: &DivisorClass) -> Result<bool> {
    if d.is_zero() {
        return Err(Error::PreconditionViolated(
            "the smoothness criterion needs a nonzero class".into(),
        ));
    }
    if !is_effective(d) {
        return Err(Error::PreconditionViolated(format!(
            "{d} is not effective on {}",
            d.surface()
        )));
    }
    Ok(lines_of(d.surface())
        .iter()
        .all(|l| d.dot_unchecked(&l.class) >= 0))
}

/// `l`-coefficients of `D_0, .., D_6`; `D_i` subtracts `e_1 .. e_i`.
const BASE_DEGREES: [i64; 7] = [1, 1, 2, 2, 2, 3, 3];

fn check_base_range(surface: SurfaceModel) -> Result<usize> {
    match surface {
        SurfaceModel::BlowUp(r) if (2..=6).contains(&r) => Ok(r as usize),
        surface => Err(Error::UnsupportedSurface {
            surface,
            reason: "the alternative base exists for blow-ups of 2 to 6 points",
        }),
    }
}

/// The base-point-free classes `D_0, .., D_r`.
pub fn alternative_base(surface: SurfaceModel) -> Result<Vec<DivisorClass>> {
    let r = check_base_range(surface)?;
    let l = DivisorClass::line_class(surface)?;
    let es: Vec<DivisorClass> = (1..=r)
        .map(|i| DivisorClass::exceptional(surface, i))
        .collect::<Result<_>>()?;
    Ok(base_in(&l, &es))
}

fn base_in(pencil: &DivisorClass, exceptional: &[DivisorClass]) -> Vec<DivisorClass> {
    (0..=exceptional.len())
        .map(|i| {
            let mut d = BASE_DEGREES[i] * *pencil;
            for e in &exceptional[..i] {
                d -= *e;
            }
            d
        })
        .collect()
}

/// Matrix of the alternative base in the standard basis, one row per `D_i`.
pub fn base_change_matrix(surface: SurfaceModel) -> Result<Vec<Vec<i64>>> {
    Ok(alternative_base(surface)?
        .iter()
        .map(|d| d.coeffs().to_vec())
        .collect())
}

/// `D = sum alpha_i D'_i`, where `D'_i` is the alternative base built on a
/// chosen exceptional system `e'_1, .., e'_r` with pencil class `l'`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseDecomposition {
    pub exceptional: Vec<DivisorClass>,
    pub pencil: DivisorClass,
    pub alphas: Vec<i64>,
}

impl BaseDecomposition {
    /// The chosen system as a permutation of the original exceptional
    /// classes (`relabeling[i]` is the 1-based index of `e'_{i+1}`), when it
    /// is one.
    pub fn relabeling(&self) -> Option<Vec<usize>> {
        let s = self.pencil.surface();
        let r = s.points()?;
        if self.pencil != DivisorClass::line_class(s).ok()? {
            return None;
        }
        self.exceptional
            .iter()
            .map(|e| (1..=r).find(|&j| DivisorClass::exceptional(s, j).ok() == Some(*e)))
            .collect()
    }

    pub fn basis(&self) -> Vec<DivisorClass> {
        base_in(&self.pencil, &self.exceptional)
    }

    pub fn reconstruct(&self) -> DivisorClass {
        self.basis()
            .iter()
            .zip(&self.alphas)
            .fold(self.pencil.surface().zero(), |acc, (d, &a)| acc + a * *d)
    }
}

/// Sets of `r` pairwise disjoint lines on `X^r`, as sorted index lists into
/// the canonical line order, listed lexicographically.
pub fn exceptional_systems(surface: SurfaceModel) -> Vec<Vec<usize>> {
    let Some(r) = surface.points() else {
        return Vec::new();
    };
    let lines = lines_of(surface);
    let mut out = Vec::new();
    let mut stack = Vec::new();
    extend_skew(lines, r, 0, &mut stack, &mut out);
    out
}

fn extend_skew(
    lines: &[LineClass],
    r: usize,
    from: usize,
    stack: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if stack.len() == r {
        out.push(stack.clone());
        return;
    }
    for i in from..lines.len() {
        if stack
            .iter()
            .all(|&j| lines[j].class.dot_unchecked(&lines[i].class) == 0)
        {
            stack.push(i);
            extend_skew(lines, r, i + 1, stack, out);
            stack.pop();
        }
    }
}

fn systems_of(surface: SurfaceModel) -> &'static [Vec<usize>] {
    static CACHE: OnceLock<Vec<Vec<Vec<usize>>>> = OnceLock::new();
    let all = CACHE.get_or_init(|| {
        (0..=6)
            .map(|r| exceptional_systems(SurfaceModel::BlowUp(r)))
            .collect()
    });
    match surface {
        SurfaceModel::BlowUp(r) => &all[r as usize],
        SurfaceModel::Quadric => &[],
    }
}

/// Pencil class `l' = (H + sum e'_i)/3` of an exceptional system.
pub fn pencil_of(surface: SurfaceModel, exceptional: &[DivisorClass]) -> Result<DivisorClass> {
    let sum = exceptional
        .iter()
        .fold(hyperplane(surface), |acc, e| acc + *e);
    if sum.coeffs().iter().any(|c| c % 3 != 0) {
        return Err(Error::Internal(format!(
            "H + sum of exceptional system is not divisible by 3: {sum}"
        )));
    }
    let c: Vec<i64> = sum.coeffs().iter().map(|c| c / 3).collect();
    DivisorClass::new(surface, &c)
}

/// Writes `D` in an alternative base with `alpha_1, .., alpha_{r-1} >= 0`.
///
/// For `r <= 4` the exceptional classes are relabeled so that
/// `D.e_1 >= .. >= D.e_r`. For `r = 5, 6` the last two exceptional classes
/// are replaced by a line `L` minimizing `D.L` and a line `L'` disjoint from
/// it minimizing `D.L'`, completed to an exceptional system; this makes
/// `alpha_0 >= 0` as well. Ties are broken by the canonical line order.
pub fn decompose(d: &DivisorClass) -> Result<BaseDecomposition> {
    let surface = d.surface();
    let r = check_base_range(surface)?;
    let (pencil, exceptional) = if r <= 4 {
        let mut idx: Vec<usize> = (1..=r).collect();
        let b = d.multiplicities();
        idx.sort_by_key(|&i| std::cmp::Reverse(b[i - 1]));
        let es = idx
            .into_iter()
            .map(|i| DivisorClass::exceptional(surface, i))
            .collect::<Result<Vec<_>>>()?;
        (DivisorClass::line_class(surface)?, es)
    } else {
        let lines = lines_of(surface);
        let value = |i: usize| d.dot_unchecked(&lines[i].class);
        let first_min = |it: &mut dyn Iterator<Item = usize>| {
            it.fold(None::<usize>, |best, i| match best {
                Some(b) if value(b) <= value(i) => Some(b),
                _ => Some(i),
            })
        };
        let last = first_min(&mut (0..lines.len())).expect("lines exist for r >= 5");
        let second = first_min(
            &mut (0..lines.len())
                .filter(|&i| lines[i].class.dot_unchecked(&lines[last].class) == 0),
        )
        .ok_or_else(|| Error::Internal("no line disjoint from the minimal one".into()))?;
        let system = systems_of(surface)
            .iter()
            .find(|s| s.contains(&last) && s.contains(&second))
            .ok_or_else(|| Error::Internal("minimal lines not in an exceptional system".into()))?;
        let mut rest: Vec<usize> = system
            .iter()
            .copied()
            .filter(|&i| i != last && i != second)
            .collect();
        rest.sort_by_key(|&i| std::cmp::Reverse(value(i)));
        rest.push(second);
        rest.push(last);
        let es: Vec<DivisorClass> = rest.into_iter().map(|i| lines[i].class).collect();
        (pencil_of(surface, &es)?, es)
    };
    let a = d.dot_unchecked(&pencil);
    let b: Vec<i64> = exceptional.iter().map(|e| d.dot_unchecked(e)).collect();
    let mut alphas = Vec::with_capacity(r + 1);
    alphas.push(if r <= 4 {
        a - b[0] - b[1]
    } else {
        a - b[0] - b[1] - b[4]
    });
    for i in 0..r - 1 {
        alphas.push(b[i] - b[i + 1]);
    }
    alphas.push(b[r - 1]);
    let out = BaseDecomposition {
        exceptional,
        pencil,
        alphas,
    };
    if out.reconstruct() != *d {
        return Err(Error::Internal(format!(
            "decomposition of {d} does not reconstruct"
        )));
    }
    Ok(out)
}

/// Number of (-1)-lines, `r + C(r,2) + C(r,5)`.
pub fn expected_line_count(surface: SurfaceModel) -> usize {
    match exceptional_count(surface) {
        Ok(r) => r + crate::combinatorics::binomial(r, 2) + crate::combinatorics::binomial(r, 5),
        Err(_) => 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::determinant;
    use crate::picard::{arithmetic_genus, from_ruled, RuledCoords};
    use crate::text::parse_divisor;
    use num_rational::Ratio;
    use proptest::prelude::*;

    fn x(r: u8) -> SurfaceModel {
        SurfaceModel::BlowUp(r)
    }

    fn p(s: SurfaceModel, t: &str) -> DivisorClass {
        parse_divisor(s, t).unwrap()
    }

    #[test]
    fn line_lists() {
        let counts: Vec<usize> = (0..=6).map(|r| enumerate_lines(x(r)).len()).collect();
        assert_eq!(counts, vec![0, 1, 3, 6, 10, 16, 27]);
        assert!(enumerate_lines(SurfaceModel::Quadric).is_empty());
        let x2: Vec<String> = enumerate_lines(x(2))
            .iter()
            .map(|l| l.class.to_string())
            .collect();
        assert_eq!(x2, vec!["e1", "e2", "l-e1-e2"]);
        for s in SurfaceModel::all() {
            let lines = enumerate_lines(s);
            assert_eq!(lines.len(), expected_line_count(s));
            let h = hyperplane(s);
            let mut seen = HashSet::new();
            for l in &lines {
                assert_eq!(l.class.self_intersection(), -1);
                assert_eq!(l.class.dot(&h).unwrap(), 1);
                assert_eq!(arithmetic_genus(&l.class), Ratio::from_integer(0));
                assert!(seen.insert(l.class));
            }
            let mut labels: Vec<_> = lines.iter().map(|l| l.label).collect();
            let sorted = {
                let mut v = labels.clone();
                v.sort();
                v
            };
            assert_eq!(labels, sorted);
            labels.dedup();
            assert_eq!(labels.len(), lines.len());
        }
    }

    #[test]
    fn effectivity_examples() {
        let f = from_ruled(RuledCoords {
            section: 0,
            fiber: 1,
        });
        assert!(is_effective(&f));
        let bad = from_ruled(RuledCoords {
            section: -1,
            fiber: 1,
        });
        assert!(!is_effective(&bad));
        assert!(is_effective(&p(x(3), "l")));
        assert!(is_effective(&p(x(6), "3l-e1-e2-e3-e4-e5-e6")));
        assert!(!is_effective(&p(x(3), "l-e1-e2-e3")));
        assert!(!is_effective(&p(x(6), "2l-e1-e2-e3-e4-e5-e6")));
        assert!(is_effective(&p(x(6), "e1")));
        assert!(!is_effective(&p(x(6), "-e1")));
        assert!(!is_effective(&p(x(0), "-l")));
    }

    /// Independent oracle: all sums of at most five lines.
    #[test]
    fn peeling_matches_exhaustive_search() {
        for r in 2..=6u8 {
            let s = x(r);
            let gens: Vec<DivisorClass> = lines_of(s).iter().map(|l| l.class).collect();
            let h = hyperplane(s);
            // every sum of at most five lines
            let mut sums: HashSet<DivisorClass> = HashSet::from([s.zero()]);
            let mut layer = vec![s.zero()];
            for _ in 0..5 {
                let next: HashSet<DivisorClass> = layer
                    .iter()
                    .flat_map(|d| gens.iter().map(move |g| *d + *g))
                    .collect();
                layer = next.into_iter().filter(|d| sums.insert(*d)).collect();
            }
            let range = -2..=3i64;
            let mut count = 0;
            for a in 0..=4i64 {
                for_each_vector(r as usize, range.clone(), &mut |b| {
                    let d = DivisorClass::from_multiplicities(s, a, b).unwrap();
                    let deg = d.dot(&h).unwrap();
                    if !(0..=5).contains(&deg) {
                        return;
                    }
                    count += 1;
                    assert_eq!(is_effective(&d), sums.contains(&d), "{s} {d}");
                });
            }
            assert!(count > 0);
        }
    }

    fn for_each_vector(n: usize, range: std::ops::RangeInclusive<i64>, f: &mut dyn FnMut(&[i64])) {
        let mut v = vec![*range.start(); n];
        loop {
            f(&v);
            let mut i = 0;
            loop {
                if i == n {
                    return;
                }
                if v[i] < *range.end() {
                    v[i] += 1;
                    break;
                }
                v[i] = *range.start();
                i += 1;
            }
        }
    }

    #[test]
    fn closed_forms_agree_with_generator_search() {
        let q = SurfaceModel::Quadric;
        let qgens = [p(q, "h"), p(q, "m")];
        let x1 = x(1);
        let x1gens = [p(x1, "C0"), p(x1, "f")];
        for a in -10..=10 {
            for b in -10..=10 {
                let dq = DivisorClass::new(q, &[a, b]).unwrap();
                assert_eq!(is_effective(&dq), is_nonnegative_combination(&dq, &qgens));
                let d1 = DivisorClass::new(x1, &[a, b]).unwrap();
                assert_eq!(is_effective(&d1), is_nonnegative_combination(&d1, &x1gens));
            }
        }
    }

    #[test]
    fn very_ample_examples() {
        for r in 1..=6 {
            assert!(is_very_ample(&hyperplane(x(r))).unwrap());
        }
        let f = from_ruled(RuledCoords {
            section: 0,
            fiber: 1,
        });
        assert!(!is_very_ample(&f).unwrap());
        assert!(!is_very_ample(&p(x(2), "l-e1-e2")).unwrap());
        assert!(is_very_ample(&hyperplane(x(0))).is_err());
        assert!(is_very_ample(&hyperplane(SurfaceModel::Quadric)).is_err());
    }

    #[test]
    fn smooth_member_examples() {
        let f = from_ruled(RuledCoords {
            section: 0,
            fiber: 1,
        });
        assert!(has_smooth_nonline_member(&f).unwrap());
        assert!(!has_smooth_nonline_member(&p(x(1), "e1")).unwrap());
        for s in SurfaceModel::all() {
            assert!(has_smooth_nonline_member(&hyperplane(s)).unwrap());
            assert!(matches!(
                has_smooth_nonline_member(&s.zero()),
                Err(Error::PreconditionViolated(_))
            ));
        }
        assert!(has_smooth_nonline_member(&p(SurfaceModel::Quadric, "h")).unwrap());
        assert!(has_smooth_nonline_member(&p(x(3), "-l")).is_err());
    }

    #[test]
    fn alternative_base_lists() {
        let b2: Vec<String> = alternative_base(x(2))
            .unwrap()
            .iter()
            .map(|d| d.to_string())
            .collect();
        assert_eq!(b2, vec!["l", "l-e1", "2l-e1-e2"]);
        let b6 = alternative_base(x(6)).unwrap();
        assert_eq!(b6[6], hyperplane(x(6)));
        for r in 2..=6 {
            let det = determinant(&base_change_matrix(x(r)).unwrap());
            assert_eq!(det.abs(), 1, "X{r}");
            for d in alternative_base(x(r)).unwrap() {
                assert!(is_effective(&d));
                assert!(has_smooth_nonline_member(&d).unwrap());
            }
        }
        assert!(alternative_base(x(1)).is_err());
        assert!(alternative_base(SurfaceModel::Quadric).is_err());
    }

    #[test]
    fn exceptional_systems_are_blow_down_bases() {
        for r in 2..=6u8 {
            let s = x(r);
            let systems = exceptional_systems(s);
            assert!(!systems.is_empty());
            for sys in &systems {
                let es: Vec<DivisorClass> = sys.iter().map(|&i| lines_of(s)[i].class).collect();
                let l = pencil_of(s, &es).unwrap();
                assert_eq!(l.self_intersection(), 1);
                assert!(es.iter().all(|e| e.dot(&l).unwrap() == 0));
            }
        }
        assert_eq!(exceptional_systems(x(6)).len(), 72);
    }

    #[test]
    fn decomposition_examples() {
        let h3 = hyperplane(x(3));
        let dec = decompose(&h3).unwrap();
        // H = D_0 + D_3 for r <= 4
        assert_eq!(dec.alphas, vec![1, 0, 0, 1]);
        assert_eq!(dec.relabeling(), Some(vec![1, 2, 3]));
        let l = p(x(2), "l");
        assert_eq!(decompose(&l).unwrap().alphas, vec![1, 0, 0]);
        // A permutation alone would give alpha_0 = -1 here.
        let d = p(x(5), "4l-2e1-2e2-e3-e4-e5");
        let dec = decompose(&d).unwrap();
        assert!(dec.alphas.iter().all(|&a| a >= 0), "{:?}", dec.alphas);
        assert_eq!(dec.reconstruct(), d);
        assert!(decompose(&p(x(1), "l")).is_err());
    }

    fn arb(r: u8) -> impl Strategy<Value = DivisorClass> {
        proptest::collection::vec(-10i64..=10, r as usize + 1)
            .prop_map(move |v| DivisorClass::new(SurfaceModel::BlowUp(r), &v).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn decomposition_reconstructs(d in (2u8..=6).prop_flat_map(arb)) {
            let dec = decompose(&d).unwrap();
            let r = d.surface().points().unwrap();
            prop_assert_eq!(dec.reconstruct(), d);
            prop_assert!(dec.alphas[1..r].iter().all(|&a| a >= 0));
            prop_assert_eq!(dec.alphas[r], d.dot(&dec.exceptional[r - 1]).unwrap());
            if r >= 5 {
                prop_assert!(dec.alphas[0] >= 0);
            }
        }

        #[test]
        fn very_ample_implies_smooth_member(d in (2u8..=6).prop_flat_map(arb)) {
            if is_very_ample(&d).unwrap() {
                prop_assert!(has_smooth_nonline_member(&d).unwrap());
            }
        }
    }
}
