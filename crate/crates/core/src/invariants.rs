//! Self-checks run by `acm verify`. Each returns human-readable failures.

use num_rational::Ratio;

use crate::acm::{enumerate_acm, widened_box_extras};
use crate::geometry::{enumerate_lines, expected_line_count, is_effective};
use crate::par::Strategy;
use crate::picard::{arithmetic_genus, canonical_class, hyperplane, SurfaceModel};
use crate::wild::{
    family_plan, family_slope, intersection_lower_bound, intersection_upper_bound_auto,
    maximal_degree_classes, wild_pair_hits, WildPair,
};

pub fn run_all() -> Vec<String> {
    let mut out = Vec::new();
    for s in SurfaceModel::all() {
        out.extend(lattice(s));
        out.extend(classes(s));
        out.extend(pairs(s));
    }
    out
}

fn lattice(s: SurfaceModel) -> Vec<String> {
    let mut out = Vec::new();
    let k = canonical_class(s);
    if k.self_intersection() != s.degree() {
        out.push(format!("{s}: K^2 != {}", s.degree()));
    }
    let lines = enumerate_lines(s);
    if lines.len() != expected_line_count(s) {
        out.push(format!("{s}: {} lines", lines.len()));
    }
    let h = hyperplane(s);
    for l in &lines {
        if l.class.self_intersection() != -1 || l.class.dot_unchecked(&h) != 1 {
            out.push(format!("{s}: {} is not a (-1)-line", l.class));
        }
    }
    out
}

fn classes(s: SurfaceModel) -> Vec<String> {
    let mut out = Vec::new();
    let lines = enumerate_lines(s);
    for d in enumerate_acm(s) {
        if !d.is_zero() && arithmetic_genus(&d) != Ratio::from_integer(0) {
            out.push(format!("{s}: {d} has nonzero genus"));
        }
        if !(0..=s.degree()).contains(&d.degree()) {
            out.push(format!("{s}: {d} has degree out of range"));
        }
        if !d.is_zero() && !is_effective(&d) {
            out.push(format!("{s}: {d} is not effective"));
        }
        for l in &lines {
            let v = d.dot_unchecked(&l.class);
            if v < -1 || (v == -1 && d != l.class) {
                out.push(format!("{s}: {d} meets {} negatively", l.label));
            }
        }
    }
    for d in widened_box_extras(s, Strategy::default()) {
        out.push(format!("{s}: {d} lies outside the primary enumeration box"));
    }
    out
}

fn pairs(s: SurfaceModel) -> Vec<String> {
    let mut out = Vec::new();
    let n = s.degree();
    let top = maximal_degree_classes(s);
    let two_h = 2 * hyperplane(s);
    for c in &top {
        for d in &top {
            let cd = c.dot_unchecked(d);
            let lo = intersection_lower_bound(n, n).unwrap_or(i64::MIN);
            let hi = intersection_upper_bound_auto(n, n, n).unwrap_or(i64::MAX);
            if cd < lo || cd > hi || ((cd == hi) != (*c + *d == two_h)) || ((cd == lo) != (c == d))
            {
                out.push(format!("{s}: bounds fail for ({c}, {d}), C.D = {cd}"));
            }
        }
    }
    for (c, d) in wild_pair_hits(s, Strategy::default()) {
        match WildPair::new(c, d) {
            Ok(w) if w.relation_block() == [3, 3, 2, 2, 0, 0] => {}
            Ok(w) => out.push(format!(
                "{s}: relation block {:?} for ({c}, {d})",
                w.relation_block()
            )),
            Err(e) => out.push(format!("{s}: ({c}, {d}): {e}")),
        }
    }
    if n <= 6 {
        for rank in 2..=50 {
            match family_plan(s, rank) {
                Ok(plan) => {
                    if plan.param_dim < rank as i64 - 1 {
                        out.push(format!("{s}: rank {rank} family too small"));
                    }
                    if family_slope(s, &plan).ok() != Some(Ratio::from_integer(n)) {
                        out.push(format!("{s}: rank {rank} slope differs from {n}"));
                    }
                }
                Err(e) => out.push(format!("{s}: rank {rank}: {e}")),
            }
        }
    }
    out
}
