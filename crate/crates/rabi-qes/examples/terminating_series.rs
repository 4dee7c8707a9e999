//! Terminating series solutions.
//!
//! On the crossing locus the power-series solution of the Bargmann-picture
//! equation terminates at degree `n`. This example builds the series at a
//! rational crossing in exact arithmetic (termination is identical, not
//! approximate), then repeats the construction in floating point and
//! measures the differential-equation residual.
//!
//! ```bash
//! cargo run -p rabi-qes --example terminating_series
//! ```

use num_traits::Zero;
use rabi_qes::config::Config;
use rabi_qes::exact::ratio;
use rabi_qes::qes::{
    continue_series, ode_residual, terminating_series, terminating_series_exact, ModelParams,
    QesIndex,
};

fn main() {
    // Exact arithmetic on the level-1 family w = 1 - 4u, here u = 9/64.
    let n = QesIndex::new(1);
    let u = ratio(9, 64);
    let w = ratio(7, 16);
    let (coeffs, constraint) = terminating_series_exact(n, &u, &w).expect("w nonzero");
    println!("exact series at u=9/64, w=7/16:");
    for (k, c) in coeffs.iter().enumerate() {
        println!("  c_{k} = {c}");
    }
    println!(
        "  constraint residual = {constraint} (zero: {})",
        constraint.is_zero()
    );
    let tail = continue_series(n, &u, &w, &coeffs, 3);
    println!(
        "  continuation c_2, c_3, c_4 = {}, {}, {} (all identically zero)",
        tail[0], tail[1], tail[2]
    );

    // Floating point at the kappa = 0.4, mu = 0.6 crossing.
    let config = Config::default();
    let params = ModelParams::new(0.4, 0.6).unwrap();
    let series = terminating_series(n, &params, &config).expect("on the locus");
    println!("\nf64 series at kappa=0.4, mu=0.6:");
    println!("  coefficients = {:?}", series.coeffs);
    println!("  energy       = {} (n - kappa^2)", series.energy);
    let xs: Vec<f64> = (0..21).map(|k| k as f64 / 20.0).collect();
    println!(
        "  max equation residual over [0,1] = {:.3e}",
        ode_residual(&series, &xs)
    );

    // Off the locus the constraint residual is rejected.
    let off = ModelParams::new(0.5, 0.5).unwrap();
    println!(
        "\noff-locus attempt: {}",
        terminating_series(n, &off, &config).unwrap_err()
    );
}
