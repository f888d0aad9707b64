// Temporary calibration probe; removed before final build.
use edge_of_chaos::map1d::{map_asymptotic_distance, MapConfig};

fn main() {
    let cfg = MapConfig {
        k0_seeds: 1,
        burn_in: 15_000,
        n_iter: 30_000,
        epsilon: 1e-5,
        floor_ln: -15.0,
    };
    let frac = |r: f64, lo: f64, hi: f64, n: usize| -> f64 {
        let mut floored = 0usize;
        for i in 0..n {
            let k0 = lo + (hi - lo) * (i as f64 + 0.5) / n as f64;
            let d = map_asymptotic_distance(k0, r, &cfg).unwrap();
            if d <= -14.0 {
                floored += 1;
            }
        }
        floored as f64 / n as f64
    };

    let i95: f64 = 10.5 + 95.0 * (0.5 / 280.0);
    println!("basin fraction at i95={i95:.9}:");
    for (lo, hi) in [(0.0, 1.0), (0.0, 2.0), (0.0, 2.65), (1.0, 2.65), (0.0, 0.5)] {
        println!("  k0 in ({lo},{hi}]: {:.3}", frac(i95, lo, hi, 200));
    }

    println!("fraction(r) over [10.660,10.690], k0~U(0,1], 60 seeds:");
    let mut r = 10.660;
    while r <= 10.690 {
        let f = frac(r, 0.0, 1.0, 60);
        if f > 0.0 {
            println!("  r={:.5} frac={:.3}", r, f);
        }
        r += 0.0002;
    }

    println!("converged k0 intervals at i95 (400 samples in (0,1]):");
    let mut state = Vec::new();
    for i in 0..400 {
        let k0 = (i as f64 + 0.5) / 400.0;
        let d = map_asymptotic_distance(k0, i95, &cfg).unwrap();
        state.push((k0, d <= -14.0));
    }
    let mut run_start: Option<f64> = None;
    for w in state.windows(2) {
        let (k0a, fa) = w[0];
        let (k0b, fb) = w[1];
        if fa && run_start.is_none() {
            run_start = Some(k0a);
        }
        if fa && !fb {
            println!("  [{:.4}, {:.4}]", run_start.take().unwrap_or(k0a), k0a);
        }
        let _ = k0b;
    }
    if let Some(s) = run_start {
        println!("  [{:.4}, 1.0]", s);
    }
}
