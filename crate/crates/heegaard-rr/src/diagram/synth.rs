//! Diagram synthesis from a Whitehead-minimal two-generator presentation.
//!
//! The construction scans the relators: (1) each generator's exponent
//! magnitudes (e1, e2, e3) with e2 = e1 + e3 label that handle's hexagon;
//! (2) the B-hexagon's cyclic label order is whichever of the two choices is
//! compatible with the observed two-syllable subwords; (3) the number of
//! connections per class is the exponent histogram |G^±e|; (4) a two-syllable
//! subword (A^m B^n)^±1 is a strand from the A-face labeled −m to the B-face
//! labeled n, and the strands must hook up as a non-crossing matching. The
//! hookup is forced; any ambiguity or impossibility is an error.

use std::collections::BTreeMap;

use crate::presentation::{
    exponent_triple, is_whitehead_minimal, syllable_stats, Presentation, SyllableStats,
};
use crate::words::CyclicWord;
use crate::Error;

use super::{Hexagon, RRDiagram};

/// Which way the A-hexagon is labeled clockwise; the two choices give mirror
/// diagrams.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Chirality {
    /// A-hexagon labeled (e1, e2, e3, −e1, −e2, −e3) with e1 > e3.
    #[default]
    Standard,
    /// A-hexagon labeled (e3, e2, e1, −e3, −e2, −e1).
    Mirrored,
}

/// Synthesize the unique R-R diagram realizing a Whitehead-minimal
/// alternating two-generator presentation, up to the chosen chirality.
pub fn synthesize(p: &Presentation, chirality: Chirality) -> Result<RRDiagram, Error> {
    if !is_whitehead_minimal(p)? {
        return Err(Error::Presentation(
            "not Whitehead-minimal: synthesis requires a minimal presentation".into(),
        ));
    }
    let stats = syllable_stats(p)?;
    let [ga, gb] = stats.alphabet;
    let (a1, a2, a3) = exponent_triple(&stats, ga)?;
    let (b1, b2, b3) = exponent_triple(&stats, gb)?;
    for (g, t) in [(ga, (a1, a2, a3)), (gb, (b1, b2, b3))] {
        if t.0 == t.2 || t.2 == 0 {
            return Err(Error::Presentation(format!(
                "generator {g}: degenerate label triple {t:?} makes the hookup ambiguous"
            )));
        }
    }
    let a_triple = match chirality {
        Chirality::Standard => (a1 as i64, a2 as i64, a3 as i64),
        Chirality::Mirrored => (a3 as i64, a2 as i64, a1 as i64),
    };

    let mut found: Vec<RRDiagram> = Vec::new();
    for b_triple in [(b1 as i64, b2 as i64, b3 as i64), (b3 as i64, b2 as i64, b1 as i64)] {
        for d in hookups(p, &stats, a_triple, b_triple) {
            if !found.contains(&d) {
                found.push(d);
            }
        }
    }
    match found.len() {
        1 => Ok(found.pop().expect("len checked")),
        0 => Err(Error::Presentation(
            "no compatible B-hexagon labeling/hookup realizes the presentation".into(),
        )),
        n => Err(Error::Presentation(format!(
            "ambiguous hookup: {n} distinct diagrams realize the presentation"
        ))),
    }
}

/// All non-crossing hookups (rotation matchings) whose strand-class counts
/// equal the two-syllable counts and whose curves read back the relators.
fn hookups(
    p: &Presentation,
    stats: &SyllableStats,
    a_triple: (i64, i64, i64),
    b_triple: (i64, i64, i64),
) -> Vec<RRDiagram> {
    let labels_a = Hexagon::from_triple(a_triple).labels;
    let labels_b = Hexagon::from_triple(b_triple).labels;

    // required strand count per (A-face label, B-face label)
    let required: &BTreeMap<(i64, i64), usize> = &stats.pair_classes;
    for (a_label, b_label) in required.keys() {
        if !labels_a.contains(a_label) || !labels_b.contains(b_label) {
            return Vec::new();
        }
    }
    let face_total = |labels: &[i64; 6], pick_a: bool| -> [usize; 6] {
        let mut t = [0usize; 6];
        for (f, label) in labels.iter().enumerate() {
            t[f] = required
                .iter()
                .filter(|((la, lb), _)| if pick_a { la == label } else { lb == label })
                .map(|(_, c)| c)
                .sum();
        }
        t
    };
    let per_face_a = face_total(&labels_a, true);
    let per_face_b = face_total(&labels_b, false);
    // endpoints in opposite faces come from the same connections
    for f in 0..3 {
        if per_face_a[f] != per_face_a[f + 3] || per_face_b[f] != per_face_b[f + 3] {
            return Vec::new();
        }
    }
    let n: usize = per_face_a.iter().sum();
    if n == 0 || n != per_face_b.iter().sum::<usize>() {
        return Vec::new();
    }

    // boundary position -> face
    let spread = |counts: [usize; 6]| -> Vec<usize> {
        counts
            .iter()
            .enumerate()
            .flat_map(|(f, c)| std::iter::repeat_n(f, *c))
            .collect()
    };
    let faces_a = spread(per_face_a);
    let faces_b = spread(per_face_b);
    let counts_a = [per_face_a[0], per_face_a[1], per_face_a[2]];
    let counts_b = [per_face_b[0], per_face_b[1], per_face_b[2]];

    let mut out = Vec::new();
    for c in 0..n {
        let mut induced: BTreeMap<(i64, i64), usize> = BTreeMap::new();
        for i in 0..n {
            let j = (c + n - i) % n;
            let key = (labels_a[faces_a[i]], labels_b[faces_b[j]]);
            *induced.entry(key).or_default() += 1;
        }
        if induced == *required {
            if let Some(d) = realize(p, a_triple, b_triple, counts_a, counts_b, c) {
                out.push(d);
            }
        }
    }
    out
}

/// Build the diagram for one rotation constant and keep it only if its
/// curves read back exactly the input relators (curve X realizing the first
/// relator, Y the second).
fn realize(
    p: &Presentation,
    a_triple: (i64, i64, i64),
    b_triple: (i64, i64, i64),
    counts_a: [usize; 3],
    counts_b: [usize; 3],
    c: usize,
) -> Option<RRDiagram> {
    let d = super::rotation_diagram(a_triple, b_triple, counts_a, counts_b, c).ok()?;
    let back = d.extract_words().ok()?;
    if back.relators().len() != p.relators().len() {
        return None;
    }
    if back.canonically_equal(p) {
        let want: Vec<CyclicWord> = p.relators().iter().map(|r| r.unoriented()).collect();
        if back.relators().to_vec() == want {
            return Some(d);
        }
        // same multiset but X/Y matched the relators in the other order
        let swapped = super::swap_xy(&d);
        let back2 = swapped.extract_words().ok()?;
        return (back2.relators().to_vec() == want).then_some(swapped);
    }
    None
}
