//! Juddian crossings, located and verified.
//!
//! For each level `n` the condition polynomial is specialized to the given
//! splitting, its positive roots in `u = kappa^2` are isolated with Sturm
//! sequences and polished, and every crossing is checked against the
//! brute-force truncated-basis spectrum: the quasi-exact energy
//! `E = n - kappa^2` must appear as a doubly degenerate eigenvalue.
//!
//! ```bash
//! cargo run -p rabi-qes --example juddian_points
//! ```

use rabi_qes::config::Config;
use rabi_qes::qes::QesIndex;
use rabi_qes::solver::juddian_points;

fn main() {
    let config = Config::default();
    println!(
        "{:>2} {:>6} {:>12} {:>12} {:>10} {:>5} {:>7}",
        "n", "mu", "kappa", "energy", "gap", "mult", "N_used"
    );
    for (n, mu) in [(1u32, 0.6), (2, 0.5), (3, 0.5), (4, 0.5)] {
        let points = juddian_points(QesIndex::new(n), mu, &config).expect("solver runs");
        for p in &points {
            println!(
                "{:>2} {:>6} {:>12.8} {:>12.8} {:>10.2e} {:>5} {:>7}",
                n, mu, p.kappa, p.energy, p.oracle_gap, p.multiplicity, p.n_used
            );
        }
        if points.is_empty() {
            println!("{n:>2} {mu:>6} (no positive-kappa crossings)");
        }
    }

    // A splitting too large for the first level: 4u = 1 - mu^2 < 0.
    let none = juddian_points(QesIndex::new(1), 1.5, &config).unwrap();
    println!("\nn=1, mu=1.5: {} crossings", none.len());
}
