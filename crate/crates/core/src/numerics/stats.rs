//! Rank correlation with a permutation-test p-value.

use crate::error::{invalid_err, Result};
use crate::numerics::Rng;

/// Outcome of a Spearman rank-correlation test.
#[derive(Debug, Clone, PartialEq)]
pub enum SpearmanResult {
    Ok { rho: f64, p_value: f64 },
    /// One side is constant, so the correlation is undefined.
    Degenerate,
}

fn average_ranks(xs: &[f64]) -> Vec<f64> {
    let n = xs.len();
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&a, &b| xs[a].partial_cmp(&xs[b]).unwrap());
    let mut ranks = vec![0.0f64; n];
    let mut i = 0;
    while i < n {
        let mut j = i;
        while j + 1 < n && xs[idx[j + 1]] == xs[idx[i]] {
            j += 1;
        }
        // ties get the average of their 1-based rank range
        let avg = (i + j) as f64 / 2.0 + 1.0;
        for &k in &idx[i..=j] {
            ranks[k] = avg;
        }
        i = j + 1;
    }
    ranks
}

fn pearson(xs: &[f64], ys: &[f64]) -> Option<f64> {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let mut sxy = 0.0;
    let mut sxx = 0.0;
    let mut syy = 0.0;
    for (&x, &y) in xs.iter().zip(ys) {
        sxy += (x - mx) * (y - my);
        sxx += (x - mx) * (x - mx);
        syy += (y - my) * (y - my);
    }
    if sxx == 0.0 || syy == 0.0 {
        return None;
    }
    Some(sxy / (sxx.sqrt() * syy.sqrt()))
}

/// Spearman's rho with a seeded two-sided permutation test.
///
/// Ranks are averaged over ties; the p-value counts permutations whose |rho|
/// reaches the observed |rho|, with the +1 correction so p is never zero.
pub fn spearman_rho(
    xs: &[f64],
    ys: &[f64],
    permutations: usize,
    rng: &mut Rng,
) -> Result<SpearmanResult> {
    if xs.len() != ys.len() {
        return Err(invalid_err("spearman_rho", format!("{} vs {} points", xs.len(), ys.len())));
    }
    if xs.len() < 3 {
        return Err(invalid_err("spearman_rho", "need at least 3 points"));
    }
    let rx = average_ranks(xs);
    let ry = average_ranks(ys);
    let rho = match pearson(&rx, &ry) {
        Some(r) => r,
        None => return Ok(SpearmanResult::Degenerate),
    };
    let mut permuted = ry.clone();
    let mut exceed = 0usize;
    for _ in 0..permutations {
        rng.shuffle(&mut permuted);
        if let Some(r) = pearson(&rx, &permuted) {
            if r.abs() >= rho.abs() - 1e-15 {
                exceed += 1;
            }
        }
    }
    let p_value = (exceed + 1) as f64 / (permutations + 1) as f64;
    Ok(SpearmanResult::Ok { rho, p_value })
}
