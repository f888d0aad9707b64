// Temporary calibration probe; removed before final build.
use edge_of_chaos::map1d::{bifurcation_scan, map_asymptotic_distance, lyapunov_exponent, MapConfig};
use edge_of_chaos::rng::Stream;

fn main() {
    // True window extent under long iteration, single seed per r.
    println!("== window extent, n_iter=200k ==");
    let long = MapConfig {
        k0_seeds: 1,
        burn_in: 150_000,
        n_iter: 200_000,
        epsilon: 1e-5,
        floor_ln: -15.0,
    };
    let mut r = 10.664;
    while r <= 10.682 {
        let lam = lyapunov_exponent(0.37, r, &long).unwrap();
        let d = map_asymptotic_distance(0.37, r, &long).unwrap();
        println!("r={:.6} lyap={:>9.5} d={:>9.4}", r, lam, d);
        r += 0.0005;
    }

    // The 281-grid points near 10.675: how many iterations until the 500-seed
    // mean reaches -14?
    let grid_pt = |i: usize| 10.5 + i as f64 * (0.5 / 280.0);
    for i in [94usize, 95, 96, 97, 98] {
        let r = grid_pt(i);
        println!("== grid point i={} r={:.9} ==", i, r);
        for n_iter in [2000usize, 5000, 10_000, 20_000] {
            let cfg = MapConfig {
                k0_seeds: 100,
                burn_in: n_iter / 2,
                n_iter,
                epsilon: 1e-5,
                floor_ln: -15.0,
            };
            let root = Stream::new(42).derive("map-scan");
            let pt = root.derive_index(r.to_bits());
            let mut sum = 0.0;
            let mut floored = 0usize;
            for s in 0..cfg.k0_seeds {
                let k0 = pt.derive_index(s as u64).next_open01();
                let d = map_asymptotic_distance(k0, r, &cfg).unwrap();
                sum += d;
                if d <= -14.0 {
                    floored += 1;
                }
            }
            println!(
                "  n_iter={:>6}: mean_ln={:>9.4} floored={}/{}",
                n_iter,
                sum / cfg.k0_seeds as f64,
                floored,
                cfg.k0_seeds
            );
        }
    }

    // Full criterion-2 shape with a heavier config: timing + result.
    println!("== candidate alias cfg ==");
    let cfg = MapConfig {
        k0_seeds: 100,
        burn_in: 10_000,
        n_iter: 20_000,
        epsilon: 1e-5,
        floor_ln: -15.0,
    };
    let t = std::time::Instant::now();
    let hi = bifurcation_scan(10.5, 11.0, 281, &cfg, 42).unwrap();
    let lo = bifurcation_scan(10.5, 11.0, 50, &cfg, 42).unwrap();
    println!("both scans took {:?}", t.elapsed());
    for rec in &hi {
        if (rec.r - 10.675).abs() <= 0.01 && rec.mean_ln_distance <= -10.0 {
            println!("HIGH near 10.675: r={:.9} mean_ln={:.4}", rec.r, rec.mean_ln_distance);
        }
    }
    for rec in &lo {
        if rec.r >= 10.6 && rec.r <= 10.75 {
            println!("LOW [10.6,10.75]: r={:.9} mean_ln={:.4}", rec.r, rec.mean_ln_distance);
        }
    }
}
