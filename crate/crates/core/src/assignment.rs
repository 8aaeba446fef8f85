//! Dense maximum-profit assignment (Hungarian method with potentials).

use crate::scalar::Weight;

/// Maximum-profit perfect assignment on a square matrix. Returns the total
/// profit and `row -> column`.
///
/// Callers clamp infeasible or unprofitable cells to zero, so a perfect
/// assignment always exists and dropping zero cells afterwards yields a
/// maximum-weight (not necessarily perfect) matching.
pub(crate) fn max_profit_assignment<W: Weight>(profit: &[Vec<W>]) -> (W, Vec<usize>) {
    let n = profit.len();
    if n == 0 {
        return (W::zero(), Vec::new());
    }
    debug_assert!(profit.iter().all(|row| row.len() == n));

    // 1-based potentials over a minimisation of -profit.
    let mut u = vec![W::zero(); n + 1];
    let mut v = vec![W::zero(); n + 1];
    let mut col_owner = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];

    for row in 1..=n {
        col_owner[0] = row;
        let mut j0 = 0;
        let mut min_slack: Vec<Option<W>> = vec![None; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = col_owner[j0];
            let mut delta: Option<W> = None;
            let mut j1 = 0;
            for j in 1..=n {
                if used[j] {
                    continue;
                }
                let cur = -profit[i0 - 1][j - 1] - u[i0] - v[j];
                if min_slack[j].is_none_or(|m| cur < m) {
                    min_slack[j] = Some(cur);
                    way[j] = j0;
                }
                let m = min_slack[j].expect("just set");
                if delta.is_none_or(|d| m < d) {
                    delta = Some(m);
                    j1 = j;
                }
            }
            let delta = delta.expect("an unused column always remains");
            for j in 0..=n {
                if used[j] {
                    u[col_owner[j]] = u[col_owner[j]] + delta;
                    v[j] = v[j] - delta;
                } else if let Some(m) = min_slack[j] {
                    min_slack[j] = Some(m - delta);
                }
            }
            j0 = j1;
            if col_owner[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            col_owner[j0] = col_owner[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }

    let mut row_to_col = vec![0; n];
    for j in 1..=n {
        row_to_col[col_owner[j] - 1] = j - 1;
    }
    let total = row_to_col
        .iter()
        .enumerate()
        .map(|(i, &j)| profit[i][j])
        .sum();
    (total, row_to_col)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute(profit: &[Vec<i64>]) -> i64 {
        fn go(profit: &[Vec<i64>], row: usize, used: &mut Vec<bool>) -> i64 {
            if row == profit.len() {
                return 0;
            }
            let mut best = i64::MIN;
            for j in 0..profit.len() {
                if !used[j] {
                    used[j] = true;
                    best = best.max(profit[row][j] + go(profit, row + 1, used));
                    used[j] = false;
                }
            }
            best
        }
        go(profit, 0, &mut vec![false; profit.len()])
    }

    #[test]
    fn matches_permutation_enumeration() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let n = rng.gen_range(1..=6);
            let profit: Vec<Vec<i64>> = (0..n)
                .map(|_| (0..n).map(|_| rng.gen_range(0..10)).collect())
                .collect();
            let (value, assign) = max_profit_assignment(&profit);
            assert_eq!(value, brute(&profit));
            let mut cols = assign.clone();
            cols.sort_unstable();
            assert_eq!(cols, (0..n).collect::<Vec<_>>());
        }
    }

    #[test]
    fn float_profits() {
        let profit = vec![vec![0.5, 2.25], vec![1.0, 0.0]];
        let (value, assign) = max_profit_assignment(&profit);
        assert!((value - 3.25f64).abs() < 1e-12);
        assert_eq!(assign, vec![1, 0]);
    }
}
