//! Free-group basics: reduction, substitution, Whitehead minimization, and
//! the primitive / proper-power / Seifert-fiber tests used by the witness
//! checker.

use heegaard_rr::certify::{is_seifert_fiber_word, SfForm};
use heegaard_rr::christoffel::christoffel_word;
use heegaard_rr::whitehead::{is_primitive, minimize_cyclic, proper_power_root};
use heegaard_rr::words::{BasisMap, CyclicWord, Generator, Word};

fn main() -> Result<(), heegaard_rr::Error> {
    let a = Generator::new('A')?;
    let b = Generator::new('B')?;

    // substitution: eliminating D from A^5De^3 = 1 sends DC^2DC^3 to its
    // image under D -> a^5E^3
    let mut map = BasisMap::identity([Generator::new('C')?, Generator::new('D')?]);
    map.insert(Generator::new('D')?, Word::parse("a^5E^3")?);
    let image = map.apply_cyclic(&CyclicWord::parse("DC^2DC^3")?)?;
    println!("DC^2DC^3 under D -> a^5E^3:  {image}");

    // Whitehead minimization and the word classes
    for text in ["AB^2", "B^7", "ABab", "A^8B^7", "Y^5x^3Y^2"] {
        let w = CyclicWord::parse(text)?;
        let alphabet = if text.contains('Y') {
            [Generator::new('X')?, Generator::new('Y')?]
        } else {
            [a, b]
        };
        let min = minimize_cyclic(&w, alphabet);
        let primitive = is_primitive(&w, alphabet).is_some();
        let power = proper_power_root(&w, alphabet);
        let sf = is_seifert_fiber_word(&w, SfForm::Form16a, alphabet)?;
        println!(
            "{text:>10}  minimizes to {:<8} primitive: {primitive:<5} proper power: {:<10} SF: {sf}",
            min.word.to_string(),
            power.map(|(g, n)| format!("{g}^{n}")).unwrap_or_else(|| "no".into()),
        );
    }

    // the balanced interleaving pattern of a curve crossing two basis curves
    let pattern = christoffel_word(5, 2, Generator::new('C')?, Generator::new('D')?)?;
    println!("christoffel(5, 2) = {pattern}");
    Ok(())
}
