//! Loads the two bundled diagrams and prints their extracted relators,
//! complexities, graph forms, rectangle families, and dual words.

use std::path::PathBuf;

use heegaard_rr::diagram::{
    classify_graph_form, detect_rectangles, dual_words, graph_from_words, RRDiagram,
};
use heegaard_rr::words::Generator;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn main() -> Result<(), heegaard_rr::Error> {
    let ab = [Generator::new('A')?, Generator::new('B')?];
    for name in ["fig9a.json", "fig9b.json"] {
        let d = RRDiagram::parse(&std::fs::read_to_string(data(name))?)?;
        let words = d.extract_words()?;
        let graph = graph_from_words(words.relators(), ab)?;
        println!("{name}");
        println!("  relators   {words}");
        println!("  complexity {}", d.complexity());
        println!(
            "  graph      {} (ss {} tt {} mixed {})",
            classify_graph_form(&graph)?,
            graph.ss,
            graph.tt,
            graph.mixed
        );
        for fam in detect_rectangles(&d) {
            println!("  rectangles {}: {:?}", fam.tag, fam.weights);
        }
        println!("  dual words {}", dual_words(&d)?);
    }
    Ok(())
}
