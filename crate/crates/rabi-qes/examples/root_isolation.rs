//! Guaranteed real-root isolation on its own.
//!
//! The exact-polynomial layer is usable independently of the physics:
//! build a polynomial, count and isolate its real roots with a Sturm
//! chain, and polish each bracket by bisection plus safeguarded Newton.
//!
//! ```bash
//! cargo run -p rabi-qes --example root_isolation
//! ```

use rabi_qes::exact::{
    ratio, refine_root, root_multiplicity, sturm_count, sturm_isolate, BivariatePolynomial,
    UnivariatePolynomial,
};

fn main() {
    // A polynomial with known roots, including a double root.
    let p = UnivariatePolynomial::from_roots(&[-1.25, 0.4, 0.4, 3.0]);
    println!("coefficients (ascending degree): {:?}", p.coeffs());
    println!(
        "distinct roots in (-10, 10]: {}",
        sturm_count(&p, -10.0, 10.0).unwrap()
    );
    for bracket in sturm_isolate(&p, -10.0, 10.0).unwrap() {
        let root = refine_root(&p, &bracket, 1e-14).unwrap();
        println!(
            "  bracket ({:+.6}, {:+.6}] -> root {root:+.12} (multiplicity {})",
            bracket.lo,
            bracket.hi,
            root_multiplicity(&p, root)
        );
    }

    // The same machinery drives the crossing search: specialize a
    // condition polynomial at fixed w and isolate in u over its Cauchy
    // bound.
    let p2 = BivariatePolynomial::monomial(2, 0, ratio(32, 1))
        .add(&BivariatePolynomial::monomial(1, 1, ratio(12, 1)))
        .add(&BivariatePolynomial::monomial(1, 0, ratio(-32, 1)))
        .add(&BivariatePolynomial::monomial(0, 2, ratio(1, 1)))
        .add(&BivariatePolynomial::monomial(0, 1, ratio(-5, 1)))
        .add(&BivariatePolynomial::constant(ratio(4, 1)));
    let specialized = p2.substitute_w(&ratio(1, 4));
    let bound = specialized.cauchy_root_bound();
    println!("\nspecialized quadratic: {:?}", specialized.coeffs());
    println!("root bound: {bound:.4}");
    for bracket in sturm_isolate(&specialized, 0.0, bound).unwrap() {
        let u = refine_root(&specialized, &bracket, 1e-14).unwrap();
        println!("  u = {u:.12}, kappa = {:.12}", u.sqrt());
    }
}
