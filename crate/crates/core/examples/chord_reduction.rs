//! Rewriting chord words into descending diagrams, then the symbol on each.

use braid_conway::chisymbol::{chi, chi_code};
use braid_conway::chord3::{classify, InsertionReducer, Reducer};
use braid_conway::ncseries::Word;
use num_bigint::BigInt;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut r = Reducer::new();
    for text in ["ABC", "CAB", "C^2 A B^2", "BACA"] {
        let w: Word = text.parse()?;
        let d = r.reduce::<BigInt>(w);
        println!("{text}:");
        for (diag, c) in d.terms() {
            let code = classify(diag);
            println!("  {c:>4}  {diag:<10} {code:<8} {}", chi_code(&code)?);
        }
        println!("  chi = {}", chi(&d));

        let alt = InsertionReducer::new().reduce::<BigInt>(w);
        assert_eq!(alt, d);
    }
    Ok(())
}
