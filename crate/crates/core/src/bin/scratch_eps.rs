// Temporary calibration probe; removed before final build.
use edge_of_chaos::map1d::{map_asymptotic_distance, MapConfig};
use edge_of_chaos::rng::Stream;

fn main() {
    let i95: f64 = 10.5 + 95.0 * (0.5 / 280.0);
    for eps in [1e-5, 1e-8, 1e-10, 1e-12, 1e-13] {
        for n_iter in [10_000usize, 20_000, 40_000] {
            let cfg = MapConfig {
                k0_seeds: 1,
                burn_in: n_iter / 2,
                n_iter,
                epsilon: eps,
                floor_ln: -15.0,
            };
            let root = Stream::new(42).derive("map-scan");
            let pt = root.derive_index(i95.to_bits());
            let n = 200;
            let mut floored = 0;
            let mut sum = 0.0;
            for s in 0..n {
                let k0 = pt.derive_index(s as u64).next_open01();
                let d = map_asymptotic_distance(k0, i95, &cfg).unwrap();
                sum += d;
                if d <= -14.0 {
                    floored += 1;
                }
            }
            println!(
                "eps={eps:.0e} n_iter={n_iter:>6}: floored={floored}/{n} mean_ln={:.4}",
                sum / n as f64
            );
        }
    }
    // Chaotic control point from the low grid: must stay far from the floor.
    let lo_pt: f64 = 10.5 + 17.0 * (0.5 / 49.0);
    for eps in [1e-12f64, 1e-13] {
        let cfg = MapConfig {
            k0_seeds: 1,
            burn_in: 10_000,
            n_iter: 20_000,
            epsilon: eps,
            floor_ln: -15.0,
        };
        let root = Stream::new(42).derive("map-scan");
        let pt = root.derive_index(lo_pt.to_bits());
        let mut sum = 0.0;
        let mut floored = 0;
        for s in 0..200 {
            let k0 = pt.derive_index(s as u64).next_open01();
            let d = map_asymptotic_distance(k0, lo_pt, &cfg).unwrap();
            sum += d;
            if d <= -14.0 {
                floored += 1;
            }
        }
        println!(
            "chaotic r={lo_pt:.6} eps={eps:.0e}: floored={floored}/200 mean_ln={:.4}",
            sum / 200.0
        );
    }
}
