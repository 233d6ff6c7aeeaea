//! Coefficients of the associator from multiple zeta values, and the symbol on it.

use braid_conway::mzvassoc::{associator, chi_on_associator, conjecture_table, zeta, Composition, DEFAULT_EPS};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let z21 = zeta(&"(2,1)".parse::<Composition>()?, DEFAULT_EPS)?;
    println!("zeta(2,1) = {z21:.15}");

    let phi = associator(3, DEFAULT_EPS)?;
    for (w, c, x) in phi.terms() {
        println!("  {:<6} {x:+.12}  {c}", w.to_string());
    }

    println!("chi(phi) = {}", chi_on_associator(6, DEFAULT_EPS)?);
    for row in conjecture_table(6, DEFAULT_EPS)? {
        println!("  n={} lhs={:?} rhs={:.12}", row.n, row.lhs, row.rhs);
    }
    Ok(())
}
