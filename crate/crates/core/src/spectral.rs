//! Adjacency spectra and the expander mixing inequality.
//!
//! Two notions of "second eigenvalue" are exposed. [`SpectralSummary::lambda2`]
//! is the signed second-largest eigenvalue, which the lower-bound
//! certificates consume. [`SpectralSummary::lambda_abs`] is the largest
//! absolute value among the non-principal eigenvalues; the two-sided mixing
//! inequality is only unconditionally valid with this one (bipartite graphs
//! have `-d` in their spectrum).
//!
//! `e(X, Y)` counts ordered adjacent pairs `(u, v)` with `u ∈ X`, `v ∈ Y`, so
//! an edge with both ends in `X ∩ Y` contributes twice.

use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const DEFAULT_TOL: f64 = 1e-8;

/// Slack below zero tolerated by [`mixing_check`] before reporting a failure.
pub const MIXING_TOL: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq)]
pub struct SpectralSummary {
    /// All eigenvalues, descending.
    pub eigenvalues: Vec<f64>,
    /// Second-largest eigenvalue; `None` for `n < 2`.
    pub lambda2: Option<f64>,
    /// `max_{i >= 2} |mu_i|`; `None` for `n < 2`.
    pub lambda_abs: Option<f64>,
    /// Requested absolute accuracy on each eigenvalue.
    pub tol: f64,
    pub n: usize,
}

impl SpectralSummary {
    pub fn trace(&self) -> f64 {
        self.eigenvalues.iter().sum()
    }

    /// First `k` and last `k` eigenvalues (fewer when `n < 2k`).
    pub fn extremes(&self, k: usize) -> (Vec<f64>, Vec<f64>) {
        let n = self.eigenvalues.len();
        let head = self.eigenvalues[..k.min(n)].to_vec();
        let tail = self.eigenvalues[n.saturating_sub(k)..].to_vec();
        (head, tail)
    }
}

/// Full adjacency spectrum of `g`.
pub fn spectrum(g: &Graph, tol: f64) -> Result<SpectralSummary> {
    if g.n() == 0 {
        return Err(Error::param("spectrum of the empty graph"));
    }
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::param("tolerance must be positive"));
    }
    let n = g.n();
    let mut a = vec![0.0; n * n];
    for u in 0..n {
        for &v in g.neighbors(u) {
            a[u * n + v] = 1.0;
        }
    }
    let mut eigenvalues = symmetric_eigenvalues(&mut a, n);
    eigenvalues.sort_by(|x, y| y.total_cmp(x));
    let lambda2 = eigenvalues.get(1).copied();
    let lambda_abs = eigenvalues[1..].iter().map(|x| x.abs()).reduce(f64::max);
    Ok(SpectralSummary {
        eigenvalues,
        lambda2,
        lambda_abs,
        tol,
        n,
    })
}

/// Eigenvalues (unordered) of the symmetric `n x n` row-major matrix `a`,
/// which is overwritten.
pub fn symmetric_eigenvalues(a: &mut [f64], n: usize) -> Vec<f64> {
    assert_eq!(a.len(), n * n);
    let (mut diag, mut off) = tridiagonalize(a, n);
    tridiagonal_ql(&mut diag, &mut off);
    diag
}

/// Householder reduction to tridiagonal form. Returns the diagonal and the
/// subdiagonal (`off[i]` couples `i` and `i + 1`, `off[n-1] = 0`).
fn tridiagonalize(a: &mut [f64], n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut off = vec![0.0; n];
    let mut v = vec![0.0; n];
    let mut q = vec![0.0; n];
    for k in 0..n.saturating_sub(2) {
        let lo = k + 1;
        let norm = libm::sqrt((lo..n).map(|i| a[i * n + k] * a[i * n + k]).sum::<f64>());
        if norm == 0.0 {
            off[k] = 0.0;
            continue;
        }
        let x0 = a[lo * n + k];
        let alpha = if x0 > 0.0 { -norm } else { norm };
        for i in lo..n {
            v[i] = a[i * n + k];
        }
        v[lo] -= alpha;
        let vnorm = libm::sqrt((lo..n).map(|i| v[i] * v[i]).sum::<f64>());
        if vnorm == 0.0 {
            off[k] = x0;
            continue;
        }
        for x in &mut v[lo..n] {
            *x /= vnorm;
        }
        // A' = A - 2 (v q^T + q v^T) with p = A v, q = p - (v.p) v
        for i in lo..n {
            q[i] = (lo..n).map(|j| a[i * n + j] * v[j]).sum();
        }
        let vp: f64 = (lo..n).map(|i| v[i] * q[i]).sum();
        for i in lo..n {
            q[i] -= vp * v[i];
        }
        for i in lo..n {
            for j in lo..n {
                a[i * n + j] -= 2.0 * (v[i] * q[j] + q[i] * v[j]);
            }
        }
        off[k] = alpha;
        for i in lo..n {
            a[i * n + k] = 0.0;
            a[k * n + i] = 0.0;
        }
    }
    if n >= 2 {
        off[n - 2] = a[(n - 1) * n + (n - 2)];
    }
    let diag = (0..n).map(|i| a[i * n + i]).collect();
    (diag, off)
}

/// Implicit QL iteration with Wilkinson-style shifts on a symmetric
/// tridiagonal matrix; eigenvalues replace `diag`.
fn tridiagonal_ql(diag: &mut [f64], off: &mut [f64]) {
    let n = diag.len();
    if n < 2 {
        return;
    }
    off[n - 1] = 0.0;
    for l in 0..n {
        let mut iterations = 0;
        loop {
            let mut m = l;
            while m < n - 1 {
                let dd = diag[m].abs() + diag[m + 1].abs();
                if off[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iterations += 1;
            assert!(iterations <= 200, "tridiagonal QL failed to converge");
            let mut g = (diag[l + 1] - diag[l]) / (2.0 * off[l]);
            let mut r = libm::hypot(g, 1.0);
            g = diag[m] - diag[l] + off[l] / (g + if g >= 0.0 { r } else { -r });
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut i = m;
            let mut deflated = false;
            while i > l {
                i -= 1;
                let f = s * off[i];
                let b = c * off[i];
                r = libm::hypot(f, g);
                off[i + 1] = r;
                if r == 0.0 {
                    diag[i + 1] -= p;
                    off[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = diag[i + 1] - p;
                r = (diag[i] - g) * s + 2.0 * c * b;
                p = s * r;
                diag[i + 1] = g + p;
                g = c * r - b;
            }
            if deflated {
                continue;
            }
            diag[l] -= p;
            off[l] = g;
            off[m] = 0.0;
        }
    }
}

/// Both sides of the mixing inequality for one pair of vertex sets.
#[derive(Debug, Clone, PartialEq)]
pub struct MixingCheck {
    pub x: Vec<usize>,
    pub y: Vec<usize>,
    /// Ordered adjacent pairs from `x` into `y`.
    pub e_xy: usize,
    /// `d |X| |Y| / n`.
    pub expected: f64,
    /// `lambda * sqrt(|X||Y|(1 - |X|/n)(1 - |Y|/n))`.
    pub bound: f64,
    /// `bound - |e_xy - expected|`.
    pub slack: f64,
    pub holds: bool,
}

fn membership(n: usize, set: &[usize]) -> Result<(Vec<bool>, Vec<usize>)> {
    let mut member = vec![false; n];
    for &v in set {
        if v >= n {
            return Err(Error::InvalidVertex { vertex: v, n });
        }
        member[v] = true;
    }
    let sorted = (0..n).filter(|&v| member[v]).collect();
    Ok((member, sorted))
}

pub fn mixing_check(g: &Graph, x: &[usize], y: &[usize], lambda: f64) -> Result<MixingCheck> {
    let d = g.degree_profile().d.ok_or(Error::RegularityRequired)?;
    let n = g.n();
    let (_, xs) = membership(n, x)?;
    let (in_y, ys) = membership(n, y)?;
    let e_xy = xs
        .iter()
        .map(|&u| g.neighbors(u).iter().filter(|&&v| in_y[v]).count())
        .sum();
    Ok(evaluate_mixing(d, n, xs, ys, e_xy, lambda))
}

fn evaluate_mixing(
    d: usize,
    n: usize,
    x: Vec<usize>,
    y: Vec<usize>,
    e_xy: usize,
    lambda: f64,
) -> MixingCheck {
    let (nf, sx, sy) = (n as f64, x.len() as f64, y.len() as f64);
    let expected = d as f64 * sx * sy / nf;
    let radicand = (sx * sy * (1.0 - sx / nf) * (1.0 - sy / nf)).max(0.0);
    let bound = lambda * libm::sqrt(radicand);
    let slack = bound - (e_xy as f64 - expected).abs();
    MixingCheck {
        x,
        y,
        e_xy,
        expected,
        bound,
        slack,
        holds: slack >= -MIXING_TOL,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct MixingFuzzReport {
    pub trials: u64,
    pub failures: u64,
    /// Smallest slack seen; `+inf` when `trials == 0`.
    pub min_slack: f64,
    pub lambda: f64,
    pub seed: u64,
}

/// Runs [`mixing_check`] on `trials` uniformly random subset pairs with
/// `lambda = lambda_abs`.
pub fn mixing_fuzz(g: &Graph, trials: u64, seed: u64) -> Result<MixingFuzzReport> {
    g.degree_profile().d.ok_or(Error::RegularityRequired)?;
    let summary = spectrum(g, DEFAULT_TOL)?;
    let lambda = summary.lambda_abs.unwrap_or(0.0);
    mixing_fuzz_with_lambda(g, trials, seed, lambda)
}

/// Trial `i` draws from ChaCha8 stream `i` of `seed`, so trials are
/// independent of evaluation order.
pub fn mixing_fuzz_with_lambda(
    g: &Graph,
    trials: u64,
    seed: u64,
    lambda: f64,
) -> Result<MixingFuzzReport> {
    g.degree_profile().d.ok_or(Error::RegularityRequired)?;
    let n = g.n();
    let mut failures = 0;
    let mut min_slack = f64::INFINITY;
    let mut x = Vec::with_capacity(n);
    let mut y = Vec::with_capacity(n);
    for trial in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(trial);
        x.clear();
        y.clear();
        for v in 0..n {
            if rng.gen::<bool>() {
                x.push(v);
            }
            if rng.gen::<bool>() {
                y.push(v);
            }
        }
        let check = mixing_check(g, &x, &y, lambda)?;
        if !check.holds {
            failures += 1;
        }
        min_slack = min_slack.min(check.slack);
    }
    Ok(MixingFuzzReport {
        trials,
        failures,
        min_slack,
        lambda,
        seed,
    })
}
