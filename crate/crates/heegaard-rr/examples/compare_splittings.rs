//! Distinguishes the two bundled splittings by unique minimal complexity:
//! both carry SUMS certificates and unique-minimizer dual graphs, so their
//! differing complexities (121 vs 149) separate them.

use std::path::PathBuf;

use heegaard_rr::certify::compare_splittings;
use heegaard_rr::diagram::RRDiagram;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn main() -> Result<(), heegaard_rr::Error> {
    let first = RRDiagram::parse(&std::fs::read_to_string(data("fig9a.json"))?)?;
    let second = RRDiagram::parse(&std::fs::read_to_string(data("fig9b.json"))?)?;
    let cmp = compare_splittings(&first, &second)?;
    for (name, side) in [("first", &cmp.first), ("second", &cmp.second)] {
        println!(
            "{name}: complexity {} sums {} unique-minimizer {} dual graph (ss {} tt {} mixed {})",
            side.complexity,
            side.sums.certificate().is_some(),
            side.unique_minimizer,
            side.dual_graph.ss,
            side.dual_graph.tt,
            side.dual_graph.mixed,
        );
    }
    println!("verdict: {:?}", cmp.verdict);
    Ok(())
}
