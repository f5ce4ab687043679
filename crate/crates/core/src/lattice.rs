//! Exact linear algebra on small integer matrices.

use num_rational::Ratio;

/// Determinant by fraction-free (Bareiss) elimination.
pub fn determinant(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m
        .iter()
        .map(|row| row.iter().map(|&x| x as i128).collect())
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&i| a[i][k] != 0) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    (sign * a[n - 1][n - 1]) as i64
}

/// Signature `(positive, negative)` of a symmetric integer matrix, by
/// symmetric Gaussian elimination over the rationals.
#[allow(clippy::needless_range_loop)]
pub fn signature(m: &[Vec<i64>]) -> (usize, usize) {
    let n = m.len();
    let mut a: Vec<Vec<Ratio<i128>>> = m
        .iter()
        .map(|row| {
            row.iter()
                .map(|&x| Ratio::from_integer(x as i128))
                .collect()
        })
        .collect();
    let zero = Ratio::from_integer(0);
    let (mut pos, mut neg) = (0, 0);
    let mut k = 0;
    let mut size = n;
    while k < size {
        if a[k][k] == zero {
            // Bring a nonzero diagonal entry forward, or create one from an
            // off-diagonal entry by adding row/column j to k.
            if let Some(j) = (k + 1..size).find(|&j| a[j][j] != zero) {
                a.swap(k, j);
                for row in a.iter_mut() {
                    row.swap(k, j);
                }
            } else if let Some(j) = (k + 1..size).find(|&j| a[k][j] != zero) {
                for c in 0..size {
                    let v = a[j][c];
                    a[k][c] += v;
                }
                for r in 0..size {
                    let v = a[r][j];
                    a[r][k] += v;
                }
            } else {
                // Null direction: drop it.
                a.swap(k, size - 1);
                for row in a.iter_mut() {
                    row.swap(k, size - 1);
                }
                size -= 1;
                continue;
            }
        }
        let p = a[k][k];
        if p > zero {
            pos += 1;
        } else {
            neg += 1;
        }
        for i in k + 1..size {
            let f = a[i][k] / p;
            if f == zero {
                continue;
            }
            for j in 0..size {
                let v = a[k][j];
                a[i][j] -= f * v;
            }
            for j in 0..size {
                let v = a[j][k];
                a[j][i] -= f * v;
            }
        }
        k += 1;
    }
    (pos, neg)
}
