//! Regenerates the bundled data files. Run on demand:
//!
//! ```text
//! cargo test -p heegaard-rr --test datagen --release -- --ignored --nocapture
//! ```
//!
//! The first-splitting diagram (data/fig9a.json) is a transcription pinned by
//! the constraints listed in data/fig9a.notes.md; this generator rebuilds it
//! from its construction parameters and re-verifies every constraint before
//! writing. The second-splitting diagram (data/fig9b.json) is synthesized
//! from its presentation. Files are written only when their content changes.

use std::path::Path;

use heegaard_rr::abelian::abelian_invariants;
use heegaard_rr::certify::{certify_sums, SumsOutcome};
use heegaard_rr::diagram::{
    check_unique_minimizer, dual_words, graph_from_words, insert_marked_curve, rotation_diagram,
    synthesize, Chirality, RRDiagram,
};
use heegaard_rr::presentation::{is_whitehead_minimal, Presentation};
use heegaard_rr::words::{CyclicWord, Generator};

const SECOND_PRESENTATION: &str =
    "<A,B | A^8B^7(A^8B^7A^5B^2A^5B^7)^2, A^5B^9(A^5B^9A^5B^2a^3B^2)^2>";

fn data_dir() -> std::path::PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

fn write_if_changed(name: &str, content: &str) {
    let path = data_dir().join(name);
    let old = std::fs::read_to_string(&path).ok();
    if old.as_deref() != Some(content) {
        std::fs::write(&path, content).unwrap();
        println!("wrote {name}");
    } else {
        println!("{name} unchanged");
    }
}

fn cw(s: &str) -> CyclicWord {
    CyclicWord::parse(s).unwrap()
}

/// data/fig9b.json: synthesized from the reduced presentation, with the
/// marked (SF,PP) pair from the figure caption.
fn second_splitting_diagram() -> RRDiagram {
    let p = Presentation::parse(SECOND_PRESENTATION).unwrap();
    let d = synthesize(&p, Chirality::Standard).unwrap();
    let d = insert_marked_curve(&d, "alpha", &cw("A^8B^7"), &cw("x^2")).unwrap();
    insert_marked_curve(&d, "beta", &cw("B^7"), &cw("X^2Y^7")).unwrap()
}

/// data/fig9a.json: the first-splitting transcription. Hexagons (5,7,2) and
/// (2,7,5), connection counts (2,5,8) / (7,3,5), rotation 26, plus the
/// marked (SF,PP) pair from the figure caption.
fn first_splitting_diagram() -> RRDiagram {
    let d = rotation_diagram((5, 7, 2), (2, 7, 5), [2, 5, 8], [7, 3, 5], 26).unwrap();
    let d = insert_marked_curve(&d, "alpha", &cw("A^5B^5"), &cw("X^3")).unwrap();
    insert_marked_curve(&d, "beta", &cw("B^5"), &cw("Y^5x^3Y^2")).unwrap()
}

/// The ∂D_Y reading shape, up to rotation and inversion: A-syllables
/// (7,7,7,2,7,7,2) uniformly signed; the B-pass following A-syllables 0, 1
/// and 4 has uniform value u with |u| = 7, the other four uniform value v
/// with |v| = 2, and sign(u) = sign(v).
fn matches_dy_pattern(w: &CyclicWord) -> bool {
    let want_a = [7i64, 7, 7, 2, 7, 7, 2];
    for cand in [w.clone(), w.inverse()] {
        let syl = cand.syllables();
        if syl.len() != 14 {
            continue;
        }
        for phase in 0..2usize {
            if syl[phase].0 != Generator::new('A').unwrap() {
                continue;
            }
            let a_vals: Vec<i64> = (0..7).map(|k| syl[(phase + 2 * k) % 14].1).collect();
            let b_vals: Vec<i64> = (0..7).map(|k| syl[(phase + 2 * k + 1) % 14].1).collect();
            for rot in 0..7 {
                let rot_a: Vec<i64> = (0..7).map(|k| a_vals[(rot + k) % 7]).collect();
                if rot_a != want_a {
                    continue;
                }
                let rot_b: Vec<i64> = (0..7).map(|k| b_vals[(rot + k) % 7]).collect();
                let (u, v) = (rot_b[0], rot_b[2]);
                if u.abs() == 7
                    && v.abs() == 2
                    && u.signum() == v.signum()
                    && rot_b == vec![u, u, v, v, u, v, v]
                {
                    return true;
                }
            }
        }
    }
    false
}

/// Every textual constraint the first-splitting transcription must satisfy.
fn verify_first_splitting(d: &RRDiagram) {
    assert_eq!(d.complexity(), 121);
    let p = d.extract_words().unwrap();
    assert_eq!(abelian_invariants(&p), vec![1, 799]);
    assert!(is_whitehead_minimal(&p).unwrap());

    // the Y-curve reads the derivation's pattern: A-syllables (7,7,7,2,7,7,2)
    // in cyclic order, uniformly signed; the B-pass after A-syllables 0, 1
    // and 4 crosses the double-crossing class (label 7), the rest the
    // single-crossing class (label 2), all with one sign
    let y = &p.relators()[1];
    assert!(matches_dy_pattern(y), "Y-relator {y} lost the reading pattern");

    let SumsOutcome::Certified(_) = certify_sums(d) else {
        panic!("first splitting must carry a SUMS certificate")
    };
    let duals = dual_words(d).unwrap();
    assert_eq!(duals.relators().iter().map(|r| r.len()).sum::<usize>(), 121);
    let xy = [Generator::new('X').unwrap(), Generator::new('Y').unwrap()];
    let g = graph_from_words(duals.relators(), xy).unwrap();
    assert!(check_unique_minimizer(&g));
}

#[test]
#[ignore]
fn regenerate_bundled_data() {
    let second = second_splitting_diagram();
    assert_eq!(second.complexity(), 149);
    write_if_changed("fig9b.json", &second.serialize());

    let first = first_splitting_diagram();
    verify_first_splitting(&first);
    write_if_changed("fig9a.json", &first.serialize());

    let chain = serde_json::json!({
        "start": "<A,C,D,E | A^5De^3, dA^2cA^2e^2, DC^2DC^3, A^7Dc(A^7DcA^7cA^2c)^2>",
        "steps": [
            {"op": "expect", "presentation": "<A,C,D,E | A^5De^3, dA^2cA^2e^2, DC^2DC^3, A^7Dc(A^7DcA^7cA^2c)^2>"},
            {"op": "eliminate", "relator": 0, "generator": "D"},
            {"op": "expect", "presentation": "<A,C,E | A^7cA^2e^5, a^5E^3C^2a^5E^3C^3, A^2E^3c(A^2E^3cA^7cA^2c)^2>"},
            {"op": "eliminate", "relator": 0, "generator": "C"},
            {"op": "expect", "presentation": "<A,E | A^9e^5(A^2E^3A^2e^5A^9e^5)^2, E^8a^7(E^8a^7E^5a^2E^5a^7)^2>"},
            {"op": "invert", "relator": 0},
            {"op": "rename", "map": {"E": "A", "a": "B"}},
            {"op": "expect", "presentation": "<A,B | A^8B^7(A^8B^7A^5B^2A^5B^7)^2, A^5B^9(A^5B^9A^5B^2a^3B^2)^2>"}
        ]
    });
    write_if_changed("chain.json", &chain.to_string());

    write_if_changed("minimal-presentation.txt", &format!("{SECOND_PRESENTATION}\n"));
}
