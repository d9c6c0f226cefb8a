//! Christoffel interleavings: the cyclic intersection pattern of a simple
//! curve on a once-punctured torus crossing two basis curves p and q times.

use num_integer::Integer;

use crate::words::{CyclicWord, Generator};
use crate::Error;

/// The balanced cyclic interleaving of `c_count` copies of `c_sym` and
/// `d_count` copies of `d_sym`. The counts must be coprime (a non-coprime
/// pattern is the trace of a disconnected or non-simple curve). The pattern
/// starts at a `d_sym` letter; as a cyclic word any rotation is equal.
pub fn christoffel_word(
    c_count: u32,
    d_count: u32,
    c_sym: Generator,
    d_sym: Generator,
) -> Result<CyclicWord, Error> {
    if c_count == 0 || d_count == 0 {
        return Err(Error::Parse("christoffel counts must be positive".into()));
    }
    if c_count.gcd(&d_count) != 1 {
        return Err(Error::Parse(format!(
            "christoffel counts must be coprime, got ({c_count}, {d_count})"
        )));
    }
    let total = (c_count + d_count) as u64;
    let d = d_count as u64;
    let letters = (0..total).map(|k| {
        if (k * d) % total < d {
            d_sym.letter()
        } else {
            c_sym.letter()
        }
    });
    Ok(CyclicWord::from_letters(letters))
}
