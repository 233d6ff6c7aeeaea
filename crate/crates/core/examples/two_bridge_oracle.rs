//! Closure of a combed braid as a two-bridge knot, then Alexander and Conway polynomials.

use braid_conway::braidword::parse_braid;
use braid_conway::twobridge::{alexander_plumbing, alexander_staircase, conway_of_fraction, trace_braid, Fraction};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let t = trace_braid(&parse_braid("x13^2 x23^-1 x13")?)?;
    println!("closure exponents  {}", t.closure);
    println!("continued fraction {}", t.continued_fraction);
    println!("fraction           {}", t.fraction);
    println!("alexander          {}", t.alexander);
    println!("conway             {}", t.conway);

    for (p, q) in [(3, 1), (5, 2), (7, 3), (9, 2)] {
        let f = Fraction::new(p, q)?;
        assert_eq!(alexander_staircase(&f)?, alexander_plumbing(&f)?);
        println!("{f:>5}  {}", conway_of_fraction(&f)?);
    }
    Ok(())
}
