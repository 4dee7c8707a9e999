//! Exact condition polynomials.
//!
//! Builds the level-`n` condition polynomials `P_n(u, w)` in the squared
//! couplings `u = kappa^2`, `w = mu^2` over arbitrary-precision rationals,
//! prints their integer expansions, and evaluates one on its vanishing
//! locus.
//!
//! ```bash
//! cargo run -p rabi-qes --example condition_polynomials
//! ```

use num_traits::Zero;
use rabi_qes::exact::ratio;
use rabi_qes::qes::{condition_polynomial, QesIndex};

fn main() {
    for n in 1..=5u32 {
        let poly = condition_polynomial(QesIndex::new(n)).expect("n in range");
        println!("P_{n}(u, w) = {poly}");
    }

    // P_1 = 4u + w - 1 vanishes at u = 4/25, w = 9/25 (kappa = 2/5,
    // mu = 3/5), the simplest exactly rational crossing.
    let p1 = condition_polynomial(QesIndex::new(1)).unwrap();
    let value = p1.eval(&ratio(4, 25), &ratio(9, 25));
    println!(
        "\nP_1(4/25, 9/25) = {value} (vanishes: {})",
        value.is_zero()
    );

    // Coefficients grow factorially; the leading u^n coefficient is 4^n n!.
    let p5 = condition_polynomial(QesIndex::new(5)).unwrap();
    println!("leading coefficient of P_5: {}", p5.coeff(5, 0));
}
