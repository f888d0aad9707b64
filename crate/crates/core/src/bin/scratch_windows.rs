// Temporary calibration probe; removed before final build.
use edge_of_chaos::map1d::{bifurcation_scan, MapConfig};

fn main() {
    let cfg = MapConfig::default();
    let t0 = std::time::Instant::now();
    let recs = bifurcation_scan(0.0, 12.0, 241, &cfg, 42).unwrap();
    println!("[0,12] x 241 x 500 seeds took {:?}", t0.elapsed());
    let first = recs.iter().find(|r| r.mean_ln_distance > -10.0);
    println!(
        "first r with mean_ln > -10: {:?}",
        first.map(|r| (r.r, r.mean_ln_distance))
    );
    for rec in &recs {
        if rec.r >= 8.0 && rec.r <= 10.0 {
            println!(
                "r={:>6.3} mean_ln={:>9.4} lyap={:>8.4}",
                rec.r, rec.mean_ln_distance, rec.lyapunov
            );
        }
    }

    let t1 = std::time::Instant::now();
    let hi = bifurcation_scan(10.5, 11.0, 281, &cfg, 42).unwrap();
    println!("[10.5,11] x 281 took {:?}", t1.elapsed());
    for rec in &hi {
        if rec.mean_ln_distance <= -10.0 {
            println!("HIGH ordered-ish: r={:.6} mean_ln={:.4}", rec.r, rec.mean_ln_distance);
        }
    }
    let lo = bifurcation_scan(10.5, 11.0, 50, &cfg, 42).unwrap();
    for rec in &lo {
        if rec.mean_ln_distance <= -10.0 {
            println!("LOW ordered-ish: r={:.6} mean_ln={:.4}", rec.r, rec.mean_ln_distance);
        }
    }
    println!("low grid points in [10.6,10.75]:");
    for rec in &lo {
        if rec.r >= 10.6 && rec.r <= 10.75 {
            println!("  r={:.6} mean_ln={:.4}", rec.r, rec.mean_ln_distance);
        }
    }
}
