//! Conway polynomials of closures of pure 3-braids, read off from a symbol on
//! three-strand chord diagrams applied to the Magnus expansion, with a
//! two-bridge oracle and the same symbol evaluated on the associator.
//!
//! ```
//! use braid_conway::{braidword::parse_braid, chisymbol::chi_braid_full, twobridge::conway_of_braid};
//! let w = parse_braid("x12 x13").unwrap();
//! assert_eq!(chi_braid_full(&w), conway_of_braid(&w).unwrap());
//! ```

pub mod braidword;
pub mod chisymbol;
pub mod chord3;
pub mod error;
pub mod ncseries;
pub mod poly;
pub mod twobridge;
pub mod mzvassoc;
pub mod verify;
pub mod cli;

pub use error::{Error, Result};
