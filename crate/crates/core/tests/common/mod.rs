#![allow(dead_code)]

/// Determinant by the Leibniz permutation sum. Independent of elimination.
pub fn leibniz_det(rows: &[Vec<f64>]) -> f64 {
    let n = rows.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = 0.0;
    permute(&mut perm, 0, rows, &mut total);
    total
}

fn permute(perm: &mut Vec<usize>, start: usize, rows: &[Vec<f64>], total: &mut f64) {
    let n = perm.len();
    if start == n {
        let mut inversions = 0;
        for i in 0..n {
            for j in i + 1..n {
                if perm[i] > perm[j] {
                    inversions += 1;
                }
            }
        }
        let sign = if inversions % 2 == 0 { 1.0 } else { -1.0 };
        *total += sign * (0..n).map(|i| rows[i][perm[i]]).product::<f64>();
        return;
    }
    for i in start..n {
        perm.swap(start, i);
        permute(perm, start + 1, rows, total);
        perm.swap(start, i);
    }
}

/// `(1 - x/n)^n` as a product of `n` identical factors.
pub fn first_order_power(x: f64, n: usize) -> f64 {
    let lambda = 1.0 - x / n as f64;
    (0..n).fold(1.0, |p, _| p * lambda)
}
