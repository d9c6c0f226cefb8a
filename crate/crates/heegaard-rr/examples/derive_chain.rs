//! Replays the bundled Tietze chain: the four-generator presentation read
//! from the first splitting reduces to the two-generator presentation the
//! second splitting realizes.

use std::collections::BTreeMap;

use heegaard_rr::presentation::Presentation;
use heegaard_rr::words::{Generator, Letter};

fn main() -> Result<(), heegaard_rr::Error> {
    let start = Presentation::parse(
        "<A,C,D,E | A^5De^3, dA^2cA^2e^2, DC^2DC^3, A^7Dc(A^7DcA^7cA^2c)^2>",
    )?;
    println!("start   {start}   (length {})", start.total_length());

    let (p, _) = start.eliminate_generator(0, Generator::new('D')?)?;
    println!("drop D  {p}   (length {})", p.total_length());

    let (p, _) = p.eliminate_generator(0, Generator::new('C')?)?;
    println!("drop C  {p}   (length {})", p.total_length());

    let p = p.invert_relator(0)?;
    let rename = BTreeMap::from([
        (Generator::new('E')?, Letter::from_char('A')?),
        (Generator::new('A')?, Letter::from_char('b')?),
    ]);
    let p = p.rename(&rename)?;
    println!("rename  {p}   (length {})", p.total_length());
    Ok(())
}
