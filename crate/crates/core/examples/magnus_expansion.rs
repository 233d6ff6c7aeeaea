//! Truncated Magnus expansion of a combed braid, `x13 -> 1 + C`, `x23 -> 1 + B`, `x12 -> 1 + A`.

use braid_conway::braidword::{comb, parse_braid};
use braid_conway::ncseries::{geom_power, magnus3, Chord, Series};
use num_bigint::BigInt;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cf = comb(&parse_braid("x13 x23^-1 x12")?);
    let s: Series<BigInt> = magnus3(&cf, 3);
    println!("{cf}\n  = {s}");

    let inv: Series<BigInt> = geom_power(Chord::B, -1, 4)?;
    println!("(1 + B)^-1 = {inv}");
    let one = inv.mul(&geom_power(Chord::B, 1, 4)?)?;
    assert_eq!(one, Series::one(4));
    Ok(())
}
