//! One-dimensional tanh-map engine.
//!
//! Implements the recurrence `k_{t+1} = r * k_t * (1 - tanh(k_t))`, twin
//! perturbed trajectories for asymptotic distances, Lyapunov exponents from
//! the analytic derivative, grid scans over the control parameter `r`, and a
//! paired low/high resolution scan that demonstrates how a coarse grid can
//! alias away a narrow ordered window.
//!
//! Every scan point draws its initial values from a stream derived from
//! `(master_seed, bits(r), seed_index)`, so two scans that share a grid point
//! produce bit-identical records for it regardless of resolution or
//! parallelism.

use rayon::prelude::*;
use thiserror::Error;

use crate::rng::Stream;

/// Scan points at or below this mean log distance count as ordered.
/// One unit of slack above the floor absorbs accumulation noise.
pub const ORDERED_LN_THRESHOLD: f64 = -14.0;

#[derive(Debug, Error)]
pub enum MapError {
    #[error("non-finite input k={0}")]
    NonFiniteInput(f64),
    #[error("trajectory became non-finite at iteration {iteration}")]
    NonFinite { iteration: usize },
    #[error("invalid map configuration: {0}")]
    InvalidConfig(String),
}

/// Iteration settings for trajectory and scan computations.
#[derive(Clone, Debug)]
pub struct MapConfig {
    /// Random initial values per scan point.
    pub k0_seeds: usize,
    /// Iterations discarded before sampling or accumulating.
    pub burn_in: usize,
    /// Total iterations; must exceed `burn_in`.
    pub n_iter: usize,
    /// Perturbation added to the twin trajectory's initial value.
    pub epsilon: f64,
    /// Log-distance floor; `exp(floor_ln)` is added to every distance.
    pub floor_ln: f64,
}

impl Default for MapConfig {
    fn default() -> Self {
        MapConfig {
            k0_seeds: 500,
            burn_in: 1000,
            n_iter: 2000,
            epsilon: 1e-5,
            floor_ln: -15.0,
        }
    }
}

impl MapConfig {
    pub fn validate(&self) -> Result<(), MapError> {
        if self.n_iter <= self.burn_in {
            return Err(MapError::InvalidConfig(format!(
                "n_iter ({}) must exceed burn_in ({})",
                self.n_iter, self.burn_in
            )));
        }
        if !(self.epsilon > 0.0) || !self.epsilon.is_finite() {
            return Err(MapError::InvalidConfig(format!(
                "epsilon must be positive and finite, got {}",
                self.epsilon
            )));
        }
        if self.k0_seeds == 0 {
            return Err(MapError::InvalidConfig("k0_seeds must be >= 1".into()));
        }
        if !self.floor_ln.is_finite() {
            return Err(MapError::InvalidConfig("floor_ln must be finite".into()));
        }
        Ok(())
    }
}

/// Aggregated result for one grid value of `r`.
#[derive(Clone, Debug)]
pub struct MapScanRecord {
    pub r: f64,
    /// Mean over seeds of the floored log asymptotic distance.
    pub mean_ln_distance: f64,
    /// Mean Lyapunov exponent over seeds.
    pub lyapunov: f64,
    /// Per-seed floored log distances, in seed order.
    pub ln_distances: Vec<f64>,
    /// Per-seed Lyapunov exponents, in seed order.
    pub lyapunovs: Vec<f64>,
    /// Final post-burn-in iterate of each seed's unperturbed trajectory.
    pub asymptotes: Vec<f64>,
}

impl MapScanRecord {
    pub fn is_ordered(&self) -> bool {
        self.mean_ln_distance <= ORDERED_LN_THRESHOLD
    }
}

/// Paired scans of the same `r` interval at two resolutions, with the grid
/// values each one classifies as ordered.
#[derive(Clone, Debug)]
pub struct AliasReport {
    pub low: Vec<MapScanRecord>,
    pub high: Vec<MapScanRecord>,
    pub low_ordered: Vec<f64>,
    pub high_ordered: Vec<f64>,
}

/// One application of the map. Zero is a fixed point for every `r`.
pub fn tanh_map_step(k: f64, r: f64) -> Result<f64, MapError> {
    if !k.is_finite() {
        return Err(MapError::NonFiniteInput(k));
    }
    if !r.is_finite() {
        return Err(MapError::NonFiniteInput(r));
    }
    Ok(step(k, k.tanh(), r))
}

/// Analytic derivative of the map with respect to `k`.
pub fn tanh_map_derivative(k: f64, r: f64) -> f64 {
    let t = k.tanh();
    r * (1.0 - t - k * (1.0 - t * t))
}

#[inline]
fn step(k: f64, tanh_k: f64, r: f64) -> f64 {
    r * k * (1.0 - tanh_k)
}

/// Iterate the map `n_iter` times from `k0` and return the last
/// `n_iter - burn_in` iterates.
pub fn iterate_map(k0: f64, r: f64, cfg: &MapConfig) -> Result<Vec<f64>, MapError> {
    cfg.validate()?;
    if !k0.is_finite() {
        return Err(MapError::NonFiniteInput(k0));
    }
    let mut tail = Vec::with_capacity(cfg.n_iter - cfg.burn_in);
    let mut k = k0;
    for t in 0..cfg.n_iter {
        k = step(k, k.tanh(), r);
        if !k.is_finite() {
            return Err(MapError::NonFinite { iteration: t + 1 });
        }
        if t >= cfg.burn_in {
            tail.push(k);
        }
    }
    Ok(tail)
}

/// Floored log distance between trajectories from `k0` and `k0 + epsilon`
/// after `n_iter` iterations: `ln(|k - k'| + exp(floor_ln))`.
pub fn map_asymptotic_distance(k0: f64, r: f64, cfg: &MapConfig) -> Result<f64, MapError> {
    Ok(pair_probe(k0, r, cfg)?.ln_distance)
}

/// Mean log absolute derivative along the post-burn-in trajectory.
/// `|f'|` is floored at `exp(floor_ln)` before the logarithm.
pub fn lyapunov_exponent(k0: f64, r: f64, cfg: &MapConfig) -> Result<f64, MapError> {
    cfg.validate()?;
    if !k0.is_finite() {
        return Err(MapError::NonFiniteInput(k0));
    }
    let floor = cfg.floor_ln.exp();
    let mut k = k0;
    let mut acc = 0.0;
    for t in 0..cfg.n_iter {
        let tanh_k = k.tanh();
        if t >= cfg.burn_in {
            acc += ln_abs_derivative(k, tanh_k, r, floor);
        }
        k = step(k, tanh_k, r);
        if !k.is_finite() {
            return Err(MapError::NonFinite { iteration: t + 1 });
        }
    }
    Ok(acc / (cfg.n_iter - cfg.burn_in) as f64)
}

#[inline]
fn ln_abs_derivative(k: f64, tanh_k: f64, r: f64, floor: f64) -> f64 {
    let deriv = r * (1.0 - tanh_k - k * (1.0 - tanh_k * tanh_k));
    deriv.abs().max(floor).ln()
}

struct PointOutcome {
    ln_distance: f64,
    lyapunov: f64,
    asymptote: f64,
}

/// Twin-trajectory pass: asymptotic distance, Lyapunov exponent, and the
/// final unperturbed iterate in one sweep. The unperturbed trajectory's
/// arithmetic is identical to the single-trajectory operations above, so the
/// per-field results match them bit for bit.
fn pair_probe(k0: f64, r: f64, cfg: &MapConfig) -> Result<PointOutcome, MapError> {
    cfg.validate()?;
    if !k0.is_finite() {
        return Err(MapError::NonFiniteInput(k0));
    }
    let floor = cfg.floor_ln.exp();
    let mut a = k0;
    let mut b = k0 + cfg.epsilon;
    let mut acc = 0.0;
    for t in 0..cfg.n_iter {
        let tanh_a = a.tanh();
        if t >= cfg.burn_in {
            acc += ln_abs_derivative(a, tanh_a, r, floor);
        }
        a = step(a, tanh_a, r);
        b = step(b, b.tanh(), r);
        if !a.is_finite() || !b.is_finite() {
            return Err(MapError::NonFinite { iteration: t + 1 });
        }
    }
    Ok(PointOutcome {
        ln_distance: ((a - b).abs() + floor).ln(),
        lyapunov: acc / (cfg.n_iter - cfg.burn_in) as f64,
        asymptote: a,
    })
}

fn grid_value(r_min: f64, r_max: f64, n_r: usize, i: usize) -> f64 {
    // Endpoints are produced exactly so scans over the same interval share
    // them bit for bit.
    if i == 0 {
        r_min
    } else if i == n_r - 1 {
        r_max
    } else {
        r_min + i as f64 * (r_max - r_min) / (n_r - 1) as f64
    }
}

fn scan_point(r: f64, cfg: &MapConfig, root: &Stream) -> Result<MapScanRecord, MapError> {
    let point_stream = root.derive_index(r.to_bits());
    let mut ln_distances = Vec::with_capacity(cfg.k0_seeds);
    let mut lyapunovs = Vec::with_capacity(cfg.k0_seeds);
    let mut asymptotes = Vec::with_capacity(cfg.k0_seeds);
    for seed_index in 0..cfg.k0_seeds {
        let k0 = point_stream.derive_index(seed_index as u64).next_open01();
        let outcome = pair_probe(k0, r, cfg)?;
        ln_distances.push(outcome.ln_distance);
        lyapunovs.push(outcome.lyapunov);
        asymptotes.push(outcome.asymptote);
    }
    let n = cfg.k0_seeds as f64;
    Ok(MapScanRecord {
        r,
        mean_ln_distance: ln_distances.iter().sum::<f64>() / n,
        lyapunov: lyapunovs.iter().sum::<f64>() / n,
        ln_distances,
        lyapunovs,
        asymptotes,
    })
}

/// Scan an inclusive even grid of `n_r` control-parameter values. Each grid
/// point draws `cfg.k0_seeds` initial values in `(0, 1]` from streams derived
/// from `(master_seed, bits(r), seed_index)`; output is deterministic in
/// `(master_seed, cfg)` and independent of thread count.
pub fn bifurcation_scan(
    r_min: f64,
    r_max: f64,
    n_r: usize,
    cfg: &MapConfig,
    master_seed: u64,
) -> Result<Vec<MapScanRecord>, MapError> {
    cfg.validate()?;
    if !(r_min < r_max) {
        return Err(MapError::InvalidConfig(format!(
            "r_min ({r_min}) must be less than r_max ({r_max})"
        )));
    }
    if r_min < 0.0 {
        return Err(MapError::InvalidConfig(format!(
            "r_min must be >= 0, got {r_min}"
        )));
    }
    if n_r < 2 {
        return Err(MapError::InvalidConfig(format!("n_r must be >= 2, got {n_r}")));
    }
    let root = Stream::new(master_seed).derive("map-scan");
    (0..n_r)
        .into_par_iter()
        .map(|i| scan_point(grid_value(r_min, r_max, n_r, i), cfg, &root))
        .collect()
}

/// Run the same interval at a low and a high resolution and report which grid
/// values each scan classifies as ordered.
pub fn aliasing_demo(
    r_min: f64,
    r_max: f64,
    low_n: usize,
    high_n: usize,
    cfg: &MapConfig,
    master_seed: u64,
) -> Result<AliasReport, MapError> {
    if low_n >= high_n {
        return Err(MapError::InvalidConfig(format!(
            "low_n ({low_n}) must be less than high_n ({high_n})"
        )));
    }
    let low = bifurcation_scan(r_min, r_max, low_n, cfg, master_seed)?;
    let high = bifurcation_scan(r_min, r_max, high_n, cfg, master_seed)?;
    let ordered = |scan: &[MapScanRecord]| {
        scan.iter()
            .filter(|rec| rec.is_ordered())
            .map(|rec| rec.r)
            .collect::<Vec<_>>()
    };
    let low_ordered = ordered(&low);
    let high_ordered = ordered(&high);
    Ok(AliasReport {
        low,
        high,
        low_ordered,
        high_ordered,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Independent tanh via the exponential definition, for cross-checking.
    fn tanh_by_exp(x: f64) -> f64 {
        let e2 = (2.0 * x).exp();
        (e2 - 1.0) / (e2 + 1.0)
    }

    /// Bisection oracle for a positive fixed point of the map at parameter
    /// `r`: solves `k - r*k*(1 - tanh k) = 0` on [lo, hi].
    fn fixed_point_by_bisection(r: f64, mut lo: f64, mut hi: f64) -> f64 {
        let g = |k: f64| k - r * k * (1.0 - tanh_by_exp(k));
        assert!(g(lo) * g(hi) < 0.0, "bisection bracket does not straddle a root");
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if g(lo) * g(mid) <= 0.0 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        0.5 * (lo + hi)
    }

    fn cfg(seeds: usize, burn_in: usize, n_iter: usize) -> MapConfig {
        MapConfig {
            k0_seeds: seeds,
            burn_in,
            n_iter,
            ..MapConfig::default()
        }
    }

    #[test]
    fn zero_is_a_fixed_point_for_any_r() {
        for r in [0.0, 1.0, 7.0, 9.5, 12.0] {
            assert_eq!(tanh_map_step(0.0, r).unwrap(), 0.0);
        }
    }

    #[test]
    fn fixed_point_at_r2_matches_bisection() {
        let k_star = fixed_point_by_bisection(2.0, 0.1, 2.0);
        assert!((k_star - 0.549_306_1).abs() < 1e-6, "k*={k_star}");
        let stepped = tanh_map_step(k_star, 2.0).unwrap();
        assert!((stepped - k_star).abs() < 1e-12);
    }

    #[test]
    fn step_matches_independent_formula() {
        let got = tanh_map_step(1.0, 1.0).unwrap();
        let expected = 1.0 * (1.0 - tanh_by_exp(1.0));
        assert!((got - expected).abs() < 1e-15);
        assert!((got - 0.238_405_8).abs() < 1e-6);
    }

    #[test]
    fn non_finite_input_rejected() {
        assert!(tanh_map_step(f64::NAN, 1.0).is_err());
        assert!(tanh_map_step(f64::INFINITY, 1.0).is_err());
        assert!(tanh_map_step(0.5, f64::NAN).is_err());
    }

    #[test]
    fn subcritical_r_contracts_to_zero() {
        let tail = iterate_map(0.3, 0.5, &cfg(1, 400, 500)).unwrap();
        assert!(tail.iter().all(|k| k.abs() < 1e-10));
    }

    #[test]
    fn tail_settles_on_the_bisection_fixed_point() {
        let k_star = fixed_point_by_bisection(2.0, 0.1, 2.0);
        let tail = iterate_map(0.3, 2.0, &cfg(1, 400, 500)).unwrap();
        for k in tail {
            assert!((k - k_star).abs() < 1e-6, "k={k} vs k*={k_star}");
        }
    }

    #[test]
    fn zero_initial_value_stays_zero() {
        let tail = iterate_map(0.0, 9.5, &cfg(1, 100, 300)).unwrap();
        assert!(tail.iter().all(|&k| k == 0.0));
    }

    #[test]
    fn iterate_reports_divergence_iteration() {
        // Negative initial values blow up to -inf for large r.
        let err = iterate_map(-50.0, 12.0, &cfg(1, 1000, 2000)).unwrap_err();
        match err {
            MapError::NonFinite { iteration } => assert!(iteration >= 1),
            other => panic!("expected NonFinite, got {other:?}"),
        }
    }

    #[test]
    fn stable_fixed_point_reaches_the_floor() {
        let d = map_asymptotic_distance(0.3, 2.0, &MapConfig::default()).unwrap();
        assert!((d - (-15.0)).abs() < 0.1, "d={d}");
    }

    #[test]
    fn identical_trajectories_hit_floor_exactly() {
        // r = 0.5 drives both trajectories to exactly 0.0 (underflow), so the
        // separation is zero and only the floor remains.
        let d = map_asymptotic_distance(0.3, 0.5, &MapConfig::default()).unwrap();
        assert_eq!(d, -15.0);
    }

    #[test]
    fn chaotic_r_stays_far_from_floor() {
        // 9.5 itself grazes a periodic window, so the deep-chaos claim is
        // exercised a little further in.
        let d = map_asymptotic_distance(0.3, 9.7, &MapConfig::default()).unwrap();
        assert!(d > -5.0, "d={d}");
    }

    #[test]
    fn lyapunov_at_zero_attractor_is_ln_r() {
        let lam = lyapunov_exponent(0.3, 0.5, &MapConfig::default()).unwrap();
        assert!((lam - 0.5f64.ln()).abs() < 0.01, "lambda={lam}");
    }

    #[test]
    fn lyapunov_at_fixed_point_matches_derivative() {
        let k_star = fixed_point_by_bisection(2.0, 0.1, 2.0);
        let expected = tanh_map_derivative(k_star, 2.0).abs().ln();
        let lam = lyapunov_exponent(0.3, 2.0, &MapConfig::default()).unwrap();
        assert!(lam < 0.0);
        assert!((lam - expected).abs() < 1e-6, "lambda={lam} expected={expected}");
    }

    #[test]
    fn lyapunov_sign_agrees_with_distance_at_chaotic_r() {
        for r in [9.5, 9.7] {
            let lam = lyapunov_exponent(0.3, r, &MapConfig::default()).unwrap();
            let d = map_asymptotic_distance(0.3, r, &MapConfig::default()).unwrap();
            assert!(lam > 0.0, "r={r} lambda={lam}");
            assert!(d > -14.0, "r={r} d={d}");
        }
    }

    #[test]
    fn scan_grid_hits_endpoints_exactly() {
        let recs = bifurcation_scan(10.5, 11.0, 3, &cfg(2, 50, 100), 1).unwrap();
        assert_eq!(recs.len(), 3);
        assert_eq!(recs[0].r, 10.5);
        assert_eq!(recs[1].r, 10.75);
        assert_eq!(recs[2].r, 11.0);
    }

    #[test]
    fn scan_is_deterministic() {
        let c = cfg(8, 200, 400);
        let a = bifurcation_scan(0.0, 12.0, 25, &c, 42).unwrap();
        let b = bifurcation_scan(0.0, 12.0, 25, &c, 42).unwrap();
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.r.to_bits(), y.r.to_bits());
            assert_eq!(x.ln_distances, y.ln_distances);
            assert_eq!(x.lyapunovs, y.lyapunovs);
            assert_eq!(x.asymptotes, y.asymptotes);
        }
    }

    #[test]
    fn scan_per_seed_values_match_the_standalone_operations() {
        let c = cfg(4, 100, 300);
        let recs = bifurcation_scan(2.0, 10.0, 5, &c, 9).unwrap();
        let root = Stream::new(9).derive("map-scan");
        for rec in &recs {
            for seed_index in 0..c.k0_seeds {
                let k0 = root
                    .derive_index(rec.r.to_bits())
                    .derive_index(seed_index as u64)
                    .next_open01();
                let d = map_asymptotic_distance(k0, rec.r, &c).unwrap();
                let lam = lyapunov_exponent(k0, rec.r, &c).unwrap();
                let tail = iterate_map(k0, rec.r, &c).unwrap();
                assert_eq!(rec.ln_distances[seed_index], d);
                assert_eq!(rec.lyapunovs[seed_index], lam);
                assert_eq!(rec.asymptotes[seed_index], *tail.last().unwrap());
            }
        }
    }

    #[test]
    fn contraction_region_sits_at_the_floor() {
        let recs = bifurcation_scan(0.0, 1.0, 11, &cfg(20, 1000, 2000), 7).unwrap();
        for rec in &recs {
            assert!(
                (rec.mean_ln_distance - (-15.0)).abs() < 0.1,
                "r={} d={}",
                rec.r,
                rec.mean_ln_distance
            );
        }
    }

    #[test]
    fn shared_grid_points_agree_across_resolutions() {
        // Grids chosen so shared r values are bit-identical.
        let c = cfg(6, 300, 600);
        let coarse = bifurcation_scan(0.0, 8.0, 5, &c, 3).unwrap();
        let fine = bifurcation_scan(0.0, 8.0, 9, &c, 3).unwrap();
        for (i, rec) in coarse.iter().enumerate() {
            let twin = &fine[2 * i];
            assert_eq!(rec.r.to_bits(), twin.r.to_bits());
            assert_eq!(rec.ln_distances, twin.ln_distances);
            assert_eq!(rec.is_ordered(), twin.is_ordered());
        }
    }

    #[test]
    fn alias_demo_rejects_inverted_resolutions() {
        assert!(aliasing_demo(10.5, 11.0, 100, 50, &cfg(2, 50, 100), 1).is_err());
    }

    #[test]
    fn alias_demo_endpoint_records_agree() {
        let report = aliasing_demo(10.5, 11.0, 5, 9, &cfg(6, 300, 600), 11).unwrap();
        assert_eq!(
            report.low.first().unwrap().ln_distances,
            report.high.first().unwrap().ln_distances
        );
        assert_eq!(
            report.low.last().unwrap().ln_distances,
            report.high.last().unwrap().ln_distances
        );
    }

    #[test]
    fn invalid_configs_are_rejected() {
        let mut c = MapConfig::default();
        c.n_iter = c.burn_in;
        assert!(c.validate().is_err());
        let mut c = MapConfig::default();
        c.epsilon = 0.0;
        assert!(c.validate().is_err());
        let mut c = MapConfig::default();
        c.k0_seeds = 0;
        assert!(c.validate().is_err());
        assert!(bifurcation_scan(1.0, 1.0, 10, &MapConfig::default(), 0).is_err());
        assert!(bifurcation_scan(0.0, 1.0, 1, &MapConfig::default(), 0).is_err());
    }

    proptest! {
        #[test]
        fn floor_law_holds(k0 in 1e-6f64..1.0, r in 0.0f64..12.0) {
            let c = cfg(1, 100, 300);
            let d = map_asymptotic_distance(k0, r, &c).unwrap();
            prop_assert!(d >= c.floor_ln);
        }

        #[test]
        fn positive_orbits_stay_positive(k0 in 1e-6f64..1.0, r in 0.0f64..12.0) {
            let tail = iterate_map(k0, r, &cfg(1, 50, 150)).unwrap();
            prop_assert!(tail.iter().all(|&k| k >= 0.0 && k.is_finite()));
        }
    }
}
