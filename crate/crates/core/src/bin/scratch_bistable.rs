// Temporary calibration probe; removed before final build.
use edge_of_chaos::map1d::{
    iterate_map, lyapunov_exponent, map_asymptotic_distance, tanh_map_derivative, MapConfig,
};

fn main() {
    let i95: f64 = 10.5 + 95.0 * (0.5 / 280.0);
    let long = MapConfig {
        k0_seeds: 1,
        burn_in: 199_900,
        n_iter: 200_000,
        epsilon: 1e-5,
        floor_ln: -15.0,
    };

    // Converged seed: orbit points and multiplier.
    let tail = iterate_map(0.15, i95, &long).unwrap();
    println!("tail from k0=0.15 (last 20): {:?}", &tail[tail.len() - 20..]);
    // Detect period by first recurrence within 1e-9.
    let last = *tail.last().unwrap();
    let mut period = 0;
    for (i, &k) in tail.iter().rev().enumerate().skip(1) {
        if (k - last).abs() < 1e-9 {
            period = i;
            break;
        }
    }
    println!("detected period: {period}");
    if period > 0 {
        let orbit = &tail[tail.len() - period..];
        let mult: f64 = orbit.iter().map(|&k| tanh_map_derivative(k, i95)).product();
        println!("orbit multiplier: {mult:.6} (|m|<1 => stable)");
    }
    let lam_conv = lyapunov_exponent(0.15, i95, &long).unwrap();
    println!("lyapunov from k0=0.15: {lam_conv:.6}");

    // Non-converged seed: positive lyapunov at long times.
    let lam_chaos = lyapunov_exponent(0.50, i95, &long).unwrap();
    println!("lyapunov from k0=0.50: {lam_chaos:.6}");
    let d_chaos = map_asymptotic_distance(0.50, i95, &long).unwrap();
    println!("distance from k0=0.50: {d_chaos:.4}");

    // Spec example sanity: k0=0.3 at r=9.5 with defaults.
    let dflt = MapConfig::default();
    for r in [9.4f64, 9.5, 9.6, 9.7, 9.8] {
        let d = map_asymptotic_distance(0.3, r, &dflt).unwrap();
        let lam = lyapunov_exponent(0.3, r, &dflt).unwrap();
        println!("k0=0.3 r={r}: d={d:.4} lyap={lam:.4}");
    }
}
