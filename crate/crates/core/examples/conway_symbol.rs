//! The symbol of the Magnus expansion recovers the Conway polynomial of the closure.

use braid_conway::braidword::parse_braid;
use braid_conway::chisymbol::{chi_braid, chi_braid_full, chi_braid_literal, SymbolVariant};
use braid_conway::twobridge::conway_of_braid;
use braid_conway::verify::{verify_exhaustive, verify_random};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for text in ["x13", "x12 x13", "x13^3", "x12^-2 x23 x13^2 x23^-1"] {
        let w = parse_braid(text)?;
        let full = chi_braid_full(&w);
        println!("{text:<26} chi = {full:<24} oracle = {}", conway_of_braid(&w)?);
        assert_eq!(chi_braid(&w, 4), chi_braid_literal(&w, 4));
    }

    let r = verify_exhaustive(4, SymbolVariant::Standard)?.merge(verify_random(200, 12, 3, 42, SymbolVariant::Standard)?);
    println!("checked {} braids, {} mismatches", r.checked, r.mismatches.len());
    assert!(r.passed());
    Ok(())
}
