// Temporary calibration probe; removed before final build.
use edge_of_chaos::map1d::{bifurcation_scan, MapConfig};

fn main() {
    let cfg = MapConfig {
        k0_seeds: 50,
        burn_in: 3000,
        n_iter: 4000,
        epsilon: 1e-5,
        floor_ln: -15.0,
    };
    let recs = bifurcation_scan(10.6, 10.75, 1501, &cfg, 42).unwrap();
    let mut best = (0.0f64, f64::INFINITY);
    for rec in &recs {
        if rec.lyapunov < 0.0 || rec.mean_ln_distance < -10.0 {
            println!(
                "r={:.8} mean_ln={:>9.4} lyap={:>8.4}",
                rec.r, rec.mean_ln_distance, rec.lyapunov
            );
        }
        if rec.mean_ln_distance < best.1 {
            best = (rec.r, rec.mean_ln_distance);
        }
    }
    println!("minimum mean_ln in [10.6,10.75]: r={:.8} -> {:.4}", best.0, best.1);

    // Wider sweep: where are the ordered windows above the first transition?
    let cfg2 = MapConfig {
        k0_seeds: 30,
        ..cfg.clone()
    };
    let wide = bifurcation_scan(9.0, 12.0, 3001, &cfg2, 42).unwrap();
    println!("ordered-leaning points in [9,12]:");
    for rec in &wide {
        if rec.lyapunov < -0.02 {
            println!(
                "  r={:.8} mean_ln={:>9.4} lyap={:>8.4}",
                rec.r, rec.mean_ln_distance, rec.lyapunov
            );
        }
    }
}
