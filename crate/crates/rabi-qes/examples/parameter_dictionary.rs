//! Canonical-form parameter dictionary.
//!
//! Each level of the Bargmann-picture equation maps onto a canonical
//! quasi-exactly-solvable operator family; this prints the dictionary
//! `(alpha, lambda, L, A, q, S)` across a coupling range. `alpha` is
//! pinned at 1/2 and `q` tends to zero with the coupling.
//!
//! ```bash
//! cargo run -p rabi-qes --example parameter_dictionary
//! ```

use rabi_qes::qes::{parameter_map, ModelParams, QesIndex};

fn main() {
    let mu = 0.6;
    for n in [0u32, 1, 2] {
        println!("level n = {n} (j = {}):", n as f64 / 2.0);
        println!(
            "  {:>6} {:>7} {:>10} {:>7} {:>10} {:>10} {:>10}",
            "kappa", "alpha", "lambda", "L", "A", "q", "S"
        );
        for i in 0..=4 {
            let kappa = i as f64 / 5.0;
            let params = ModelParams::new(kappa, mu).unwrap();
            let m = parameter_map(QesIndex::new(n), &params);
            println!(
                "  {kappa:>6.2} {:>7.2} {:>10.6} {:>7.2} {:>10.6} {:>10.6} {:>10.6}",
                m.alpha, m.lambda, m.l, m.a, m.q, m.s
            );
        }
    }
}
