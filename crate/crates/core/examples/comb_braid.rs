//! Pure 3-braid words and their combed form `w(x13, x23) · x12^e`.

use braid_conway::braidword::{comb, parse_braid};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for text in ["x12 x13 x23", "x23 x12^2 x13^-1", "x13 x12 x13^-1 x12^-1", "1"] {
        let w = parse_braid(text)?;
        let cf = comb(&w);
        println!("{w:<28} -> {cf}");
        assert_eq!(comb(&cf.to_braid()), cf);
    }

    let w = parse_braid("x12^3 x23 x13^-2")?;
    assert!(comb(&w.multiply(&w.inverse())).is_identity());
    println!("json: {}", serde_json::to_string(&comb(&w))?);
    Ok(())
}
