//! Produces the distance-three certificates for both bundled splittings:
//! a SUMS certificate (distance >= 3) plus a verified (SF,PP)/(PP,SF) pair
//! witness (distance <= 3).

use std::path::PathBuf;

use heegaard_rr::certify::{certify_sums, distance_bracket, verify_pair_witness, SfForm, SumsOutcome};
use heegaard_rr::diagram::RRDiagram;

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn main() -> Result<(), heegaard_rr::Error> {
    for name in ["fig9a.json", "fig9b.json"] {
        let d = RRDiagram::parse(&std::fs::read_to_string(data(name))?)?;
        println!("{name}");
        let sums = match certify_sums(&d) {
            SumsOutcome::Certified(c) => {
                for f in &c.families {
                    println!("  rectangles {}: m {} n {}  (m-1 > n > 1)", f.tag, f.m, f.n);
                }
                Some(c)
            }
            SumsOutcome::NoCertificate { reason } => {
                println!("  no SUMS certificate: {reason}");
                None
            }
        };
        let pair = verify_pair_witness(&d, "alpha", "beta", SfForm::Form16a, SfForm::Form16a)?;
        println!(
            "  pair witness: ({}, {}) in H / ({}, {}) in H'",
            pair.alpha_word_h, pair.beta_word_h, pair.alpha_word_hprime, pair.beta_word_hprime
        );
        let bracket = distance_bracket(&d, sums.as_ref(), Some(&pair))?;
        println!("  distance bracket {bracket}");
    }
    Ok(())
}
