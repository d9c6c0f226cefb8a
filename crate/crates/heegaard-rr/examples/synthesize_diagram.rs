//! Synthesizes the R-R diagram realizing a Whitehead-minimal two-generator
//! presentation and verifies the round trip back through word extraction.

use heegaard_rr::diagram::{synthesize, Chirality};
use heegaard_rr::presentation::{exponent_triples, syllable_stats, Presentation};

fn main() -> Result<(), heegaard_rr::Error> {
    let text = std::env::args().nth(1).unwrap_or_else(|| {
        "<A,B | A^8B^7(A^8B^7A^5B^2A^5B^7)^2, A^5B^9(A^5B^9A^5B^2a^3B^2)^2>".into()
    });
    let p = Presentation::parse(&text)?;
    let stats = syllable_stats(&p)?;
    for (g, triple) in exponent_triples(&stats)? {
        println!("generator {g}: face labels {triple:?}");
    }
    let d = synthesize(&p, Chirality::Standard)?;
    println!("hex_a labels {:?}", d.hex_a.labels);
    println!("hex_b labels {:?}", d.hex_b.labels);
    for (name, hex) in [("hex_a", &d.hex_a), ("hex_b", &d.hex_b)] {
        let counts: Vec<usize> = hex.slots.iter().take(3).map(Vec::len).collect();
        println!("{name} connection classes {counts:?}");
    }
    println!("complexity {}", d.complexity());
    println!("realizes input: {}", d.extract_words()?.canonically_equal(&p));
    println!("{}", d.serialize());
    Ok(())
}
