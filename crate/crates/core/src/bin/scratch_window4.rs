// Temporary calibration probe; removed before final build.
use edge_of_chaos::map1d::{map_asymptotic_distance, MapConfig};
use edge_of_chaos::rng::Stream;
use std::time::Instant;

fn main() {
    // tanh throughput.
    let t = Instant::now();
    let mut acc = 0.0f64;
    let mut x = 0.3f64;
    for _ in 0..20_000_000u64 {
        x = 10.6 * x * (1.0 - x.tanh());
        acc += x;
    }
    let dt = t.elapsed().as_secs_f64();
    println!("map step rate: {:.1} Msteps/s (acc={acc:.3})", 20.0 / dt);

    let r: f64 = 10.5 + 95.0 * (0.5 / 280.0);
    println!("grid point r={r:.9}");
    for n_iter in [50_000usize, 100_000, 200_000, 400_000] {
        let cfg = MapConfig {
            k0_seeds: 100,
            burn_in: n_iter / 2,
            n_iter,
            epsilon: 1e-5,
            floor_ln: -15.0,
        };
        let root = Stream::new(42).derive("map-scan");
        let pt = root.derive_index(r.to_bits());
        let t = Instant::now();
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
            "n_iter={:>7}: mean_ln={:>9.4} floored={}/{} ({:?})",
            n_iter,
            sum / cfg.k0_seeds as f64,
            floored,
            cfg.k0_seeds,
            t.elapsed()
        );
    }
}
