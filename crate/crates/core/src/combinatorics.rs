//! Binomials, multinomials and distinct permutations of multisets.

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Number of distinct arrangements of `values`: `n! / prod (mult_v)!`.
pub fn multiset_arrangements(values: &[i64]) -> usize {
    let mut sorted = values.to_vec();
    sorted.sort_unstable();
    let mut denom = 1;
    let mut run = 0;
    for i in 0..sorted.len() {
        run += 1;
        if i + 1 == sorted.len() || sorted[i + 1] != sorted[i] {
            denom *= factorial(run);
            run = 0;
        }
    }
    factorial(values.len()) / denom
}

/// All distinct permutations of `values` in lexicographic order.
pub fn distinct_permutations(values: &[i64]) -> Vec<Vec<i64>> {
    let mut cur = values.to_vec();
    cur.sort_unstable();
    let mut out = vec![cur.clone()];
    while next_permutation(&mut cur) {
        out.push(cur.clone());
    }
    out
}

fn next_permutation(v: &mut [i64]) -> bool {
    let n = v.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| v[i] < v[i + 1]) else {
        return false;
    };
    let j = (i + 1..n).rev().find(|&j| v[j] > v[i]).unwrap();
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    #[test]
    fn small_values() {
        assert_eq!(binomial(6, 2), 15);
        assert_eq!(binomial(5, 6), 0);
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(multiset_arrangements(&[2, 2, 2, 1, 1, 1]), 20);
        assert_eq!(multiset_arrangements(&[]), 1);
        assert_eq!(distinct_permutations(&[1, 0, 0]).len(), 3);
    }

    proptest! {
        #[test]
        fn permutations_match_count(v in proptest::collection::vec(-1i64..=2, 0..=6)) {
            let perms = distinct_permutations(&v);
            prop_assert_eq!(perms.len(), multiset_arrangements(&v));
            let set: BTreeSet<_> = perms.iter().cloned().collect();
            prop_assert_eq!(set.len(), perms.len());
            // brute force over all n! orderings
            let n = v.len();
            let mut brute = BTreeSet::new();
            let mut idx: Vec<usize> = (0..n).collect();
            heap_permute(&mut idx, n, &mut |p| {
                brute.insert(p.iter().map(|&i| v[i]).collect::<Vec<_>>());
            });
            prop_assert_eq!(brute, set);
        }
    }

    fn heap_permute(a: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
        if k <= 1 {
            f(a);
            return;
        }
        for i in 0..k {
            heap_permute(a, k - 1, f);
            if k.is_multiple_of(2) {
                a.swap(i, k - 1);
            } else {
                a.swap(0, k - 1);
            }
        }
    }
}
