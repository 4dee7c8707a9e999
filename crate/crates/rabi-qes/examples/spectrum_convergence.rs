//! Brute-force spectra and their truncation convergence.
//!
//! The oracle doubles the boson truncation until the requested lowest
//! eigenvalues stop moving. Decoupled limits have known spectra and make
//! good sanity anchors: `kappa = 0` gives `n +/- mu`, `mu = 0` gives the
//! displaced oscillator `n - kappa^2`, each level twice.
//!
//! ```bash
//! cargo run -p rabi-qes --example spectrum_convergence
//! ```

use rabi_qes::config::Config;
use rabi_qes::oracle::converged_spectrum;
use rabi_qes::qes::ModelParams;

fn main() {
    let config = Config::default();

    let spin_only = ModelParams::new(0.0, 0.6).unwrap();
    let s = converged_spectrum(&spin_only, 6, 1e-10, &config).unwrap();
    println!("kappa=0.0, mu=0.6  (exact: n +/- 0.6), N_used={}", s.n_used);
    println!("  {:?}", s.eigenvalues);

    let displaced = ModelParams::new(0.4, 0.0).unwrap();
    let s = converged_spectrum(&displaced, 6, 1e-10, &config).unwrap();
    println!(
        "kappa=0.4, mu=0.0  (exact: n - 0.16, twice), N_used={}",
        s.n_used
    );
    println!("  {:?}", s.eigenvalues);

    // Deeper displacement needs a larger basis before the low spectrum
    // settles.
    for kappa in [0.4, 1.0, 2.0] {
        let params = ModelParams::new(kappa, 0.6).unwrap();
        let s = converged_spectrum(&params, 6, 1e-10, &config).unwrap();
        println!(
            "kappa={kappa:.1}, mu=0.6: lowest = {:+.10}, N_used = {}",
            s.eigenvalues[0], s.n_used
        );
    }

    // At the level-1 crossing the quasi-exact energy 0.84 appears twice.
    let crossing = ModelParams::new(0.4, 0.6).unwrap();
    let s = converged_spectrum(&crossing, 6, 1e-10, &config).unwrap();
    println!("\nkappa=0.4, mu=0.6 lowest six:");
    for (i, e) in s.eigenvalues.iter().enumerate() {
        println!("  E_{i} = {e:+.12}");
    }
}
