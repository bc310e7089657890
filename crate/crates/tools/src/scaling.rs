//! Runtime scaling of the `CC(G)=n` decider on cycles.

use std::time::Instant;

use coalition_core::check_cc_equals_n;
use coalition_core::generators::cycle;
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct ScalingPoint {
    pub n: usize,
    pub seconds: f64,
}

/// Least-squares fit of `ln t = slope * ln n + intercept`.
#[derive(Debug, Clone, Serialize)]
pub struct ScalingReport {
    pub points: Vec<ScalingPoint>,
    pub slope: f64,
    pub intercept: f64,
    pub r_squared: f64,
    pub degree_bound: f64,
    /// Slope within the bound plus half a degree of slack.
    pub consistent: bool,
}

/// Times the decider on `C_n` for each size, keeping the fastest of `reps` runs.
pub fn scaling_report(sizes: &[usize], reps: usize) -> ScalingReport {
    let points: Vec<ScalingPoint> = sizes
        .iter()
        .map(|&n| {
            let g = cycle(n);
            let seconds = (0..reps.max(1))
                .map(|_| {
                    let start = Instant::now();
                    let d = check_cc_equals_n(&g).expect("cycles are decidable");
                    std::hint::black_box(d);
                    start.elapsed().as_secs_f64()
                })
                .fold(f64::INFINITY, f64::min);
            ScalingPoint { n, seconds }
        })
        .collect();
    let xs: Vec<f64> = points.iter().map(|p| (p.n as f64).ln()).collect();
    let ys: Vec<f64> = points.iter().map(|p| p.seconds.max(1e-9).ln()).collect();
    let (slope, intercept, r_squared) = ols(&xs, &ys);
    ScalingReport {
        points,
        slope,
        intercept,
        r_squared,
        degree_bound: 4.0,
        consistent: slope <= 4.5,
    }
}

fn ols(xs: &[f64], ys: &[f64]) -> (f64, f64, f64) {
    let k = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / k;
    let my = ys.iter().sum::<f64>() / k;
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    let syy: f64 = ys.iter().map(|y| (y - my).powi(2)).sum();
    let slope = if sxx == 0.0 { 0.0 } else { sxy / sxx };
    let r2 = if syy == 0.0 { 1.0 } else { sxy * sxy / (sxx * syy) };
    (slope, my - slope * mx, r2)
}
