//! Machine-checkable certificates: rectangle/SUMS witnesses, (SF,PP) pair
//! witnesses, distance brackets, and the non-homeomorphism comparison.
//!
//! A SUMS certificate records, for each of the four rectangle families, a
//! pair of weights (m, n) with m − 1 > n > 1. Its existence implies the
//! A/B cutting-disk pair is a set of strict universal minimizers and the
//! splitting has no disjoint curves, hence distance ≥ 3. A verified
//! (SF,PP)/(PP,SF) pair witness gives distance ≤ 3. Certificates embed the
//! content hash of the diagram they certify and serialize to JSON with
//! stable field order.

use num_integer::Integer;
use serde::Serialize;

use crate::diagram::{
    check_unique_minimizer, classify_graph_form, detect_rectangles, dual_words,
    graph_from_words, DiagramGraph, GraphForm, RRDiagram,
};
use crate::whitehead::{minimize_cyclic, proper_power_root};
use crate::words::{CyclicWord, Generator};
use crate::Error;

/// Declared R-R form of a Seifert-fiber curve. Both forms require the
/// minimized word to be g1^p g2^q with |p|, |q| ≥ 2; form 16b additionally
/// declares its strand parameters (a, b), which must be positive and
/// coprime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SfForm {
    Form16a,
    Form16b { a: u32, b: u32 },
}

/// Seifert-fiber test at the word level: attaching a 2-handle along the
/// curve yields a Seifert fibered space over the disk with two exceptional
/// fibers exactly when the automorphism-minimized word is g1^p g2^q with
/// both |p|, |q| ≥ 2 (the fiber orders).
pub fn is_seifert_fiber_word(
    w: &CyclicWord,
    declared_form: SfForm,
    alphabet: [Generator; 2],
) -> Result<bool, Error> {
    if let SfForm::Form16b { a, b } = declared_form {
        if a == 0 || b == 0 || a.gcd(&b) != 1 {
            return Err(Error::Certify(format!(
                "form 16b declaration requires a, b > 0 with gcd(a,b) = 1, got ({a}, {b})"
            )));
        }
    }
    let min = minimize_cyclic(w, alphabet).word;
    let syl = min.syllables();
    Ok(match syl[..] {
        [(g1, p), (g2, q)] => g1 != g2 && p.abs() >= 2 && q.abs() >= 2,
        _ => false,
    })
}

/// A rectangle pair witness for one family.
#[derive(Clone, Debug, Serialize)]
pub struct FamilyWitness {
    pub tag: String,
    pub m: u64,
    pub n: u64,
}

/// Witnesses m − 1 > n > 1 in all four rectangle families.
#[derive(Clone, Debug, Serialize)]
pub struct SumsCertificate {
    pub families: Vec<FamilyWitness>,
    pub diagram_hash: String,
}

/// Result of the SUMS search; absence is a value, not an error.
#[derive(Clone, Debug, Serialize)]
pub enum SumsOutcome {
    Certified(SumsCertificate),
    NoCertificate { reason: String },
}

impl SumsOutcome {
    pub fn certificate(&self) -> Option<&SumsCertificate> {
        match self {
            SumsOutcome::Certified(c) => Some(c),
            SumsOutcome::NoCertificate { .. } => None,
        }
    }
}

/// Search each rectangle family for a weight pair (m, n) with m − 1 > n > 1.
/// Success certifies the A/B disk pair is a set of SUMS and the splitting
/// has no disjoint curves.
pub fn certify_sums(d: &RRDiagram) -> SumsOutcome {
    let mut witnesses = Vec::new();
    for fam in detect_rectangles(d) {
        if fam.weights.is_empty() {
            return SumsOutcome::NoCertificate {
                reason: format!("family {} empty", fam.tag),
            };
        }
        let mut sorted = fam.weights.clone();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        let m = sorted[0];
        let Some(n) = sorted[1..].iter().copied().find(|n| m - 1 > *n && *n > 1) else {
            return SumsOutcome::NoCertificate {
                reason: format!(
                    "family {}: no pair with m - 1 > n > 1 among weights {:?}",
                    fam.tag, fam.weights
                ),
            };
        };
        witnesses.push(FamilyWitness { tag: fam.tag, m, n });
    }
    SumsOutcome::Certified(SumsCertificate {
        families: witnesses,
        diagram_hash: d.content_hash(),
    })
}

/// A verified (SF,PP)-in-H, (PP,SF)-in-H' pair of disjoint marked curves.
#[derive(Clone, Debug, Serialize)]
pub struct PairWitness {
    pub alpha_id: String,
    pub beta_id: String,
    pub alpha_word_h: String,
    pub beta_word_h: String,
    pub alpha_word_hprime: String,
    pub beta_word_hprime: String,
    pub alpha_sf_form: SfForm,
    pub beta_sf_form: SfForm,
    pub diagram_hash: String,
}

/// Check the four word-level conditions and slot-disjointness for a marked
/// pair (α, β): α SF and β a proper power in H, α a proper power and β SF
/// in H'. Every failed condition is named in the error.
pub fn verify_pair_witness(
    d: &RRDiagram,
    alpha_id: &str,
    beta_id: &str,
    alpha_form: SfForm,
    beta_form: SfForm,
) -> Result<PairWitness, Error> {
    let ab = [Generator::new('A').unwrap(), Generator::new('B').unwrap()];
    let xy = [Generator::new('X').unwrap(), Generator::new('Y').unwrap()];
    let alpha = d
        .marked_curve(alpha_id)
        .ok_or_else(|| Error::Certify(format!("no marked curve {alpha_id:?}")))?;
    let beta = d
        .marked_curve(beta_id)
        .ok_or_else(|| Error::Certify(format!("no marked curve {beta_id:?}")))?;

    let mut failures = Vec::new();
    if !is_seifert_fiber_word(&alpha.word_h, alpha_form, ab)? {
        failures.push(format!("{alpha_id} not SF in H"));
    }
    if proper_power_root(&alpha.word_hprime, xy).is_none() {
        failures.push(format!("{alpha_id} not PP in H'"));
    }
    if proper_power_root(&beta.word_h, ab).is_none() {
        failures.push(format!("{beta_id} not PP in H"));
    }
    if !is_seifert_fiber_word(&beta.word_hprime, beta_form, xy)? {
        failures.push(format!("{beta_id} not SF in H'"));
    }
    let slots_a = d.slot_set(&crate::diagram::CurveId::Marked(alpha_id.to_string()));
    let slots_b = d.slot_set(&crate::diagram::CurveId::Marked(beta_id.to_string()));
    if slots_a.intersection(&slots_b).next().is_some() {
        failures.push(format!("{alpha_id} and {beta_id} share slots"));
    }
    if !failures.is_empty() {
        return Err(Error::Certify(failures.join("; ")));
    }
    Ok(PairWitness {
        alpha_id: alpha_id.to_string(),
        beta_id: beta_id.to_string(),
        alpha_word_h: alpha.word_h.to_string(),
        beta_word_h: beta.word_h.to_string(),
        alpha_word_hprime: alpha.word_hprime.to_string(),
        beta_word_hprime: beta.word_hprime.to_string(),
        alpha_sf_form: alpha_form,
        beta_sf_form: beta_form,
        diagram_hash: d.content_hash(),
    })
}

/// Evidence-backed distance bounds for a splitting.
#[derive(Clone, Debug, Serialize)]
pub struct DistanceBracket {
    pub lower: u32,
    /// `None` means unbounded.
    pub upper: Option<u32>,
    pub evidence: Vec<String>,
    pub diagram_hash: String,
}

impl std::fmt::Display for DistanceBracket {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.upper {
            Some(u) => write!(f, "[{}, {}]", self.lower, u),
            None => write!(f, "[{}, inf)", self.lower),
        }
    }
}

/// Combine certificates into a distance bracket. Without a SUMS certificate
/// the lower bound is 0: no irreducibility evidence is computed, so no
/// stronger claim is made.
pub fn distance_bracket(
    d: &RRDiagram,
    sums: Option<&SumsCertificate>,
    pair: Option<&PairWitness>,
) -> Result<DistanceBracket, Error> {
    let hash = d.content_hash();
    for (name, h) in [
        ("SUMS certificate", sums.map(|s| &s.diagram_hash)),
        ("pair witness", pair.map(|p| &p.diagram_hash)),
    ] {
        if let Some(h) = h {
            if *h != hash {
                return Err(Error::Certify(format!(
                    "{name} was produced for a different diagram ({h} != {hash})"
                )));
            }
        }
    }
    let mut evidence = Vec::new();
    let lower = match sums {
        Some(_) => {
            evidence.push("sums: no disjoint curves, distance >= 3".to_string());
            3
        }
        None => 0,
    };
    let upper = pair.map(|p| {
        evidence.push(format!(
            "pair ({}, {}): alternative-splitting chain, distance <= 3",
            p.alpha_id, p.beta_id
        ));
        3
    });
    Ok(DistanceBracket { lower, upper, evidence, diagram_hash: hash })
}

/// Everything `compare_splittings` derives about one diagram.
#[derive(Clone, Debug, Serialize)]
pub struct SplittingAnalysis {
    pub diagram_hash: String,
    pub complexity: usize,
    pub sums: SumsOutcome,
    pub dual_graph: DiagramGraph,
    pub dual_graph_form: GraphForm,
    pub unique_minimizer: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    NotHomeomorphic,
    Inconclusive,
}

/// Comparison of two splittings by unique minimal complexity.
#[derive(Clone, Debug, Serialize)]
pub struct ComparisonReport {
    pub first: SplittingAnalysis,
    pub second: SplittingAnalysis,
    pub verdict: Verdict,
}

fn analyze_side(d: &RRDiagram) -> Result<SplittingAnalysis, Error> {
    let xy = [Generator::new('X').unwrap(), Generator::new('Y').unwrap()];
    let duals = dual_words(d)?;
    let dual_graph = graph_from_words(duals.relators(), xy)?;
    let dual_graph_form = classify_graph_form(&dual_graph)?;
    Ok(SplittingAnalysis {
        diagram_hash: d.content_hash(),
        complexity: d.complexity(),
        sums: certify_sums(d),
        unique_minimizer: check_unique_minimizer(&dual_graph),
        dual_graph,
        dual_graph_form,
    })
}

/// When both diagrams carry a SUMS certificate and both dual graphs pass the
/// unique-minimizer check, each diagram is the one and only minimal
/// complexity diagram of its splitting; differing complexities then separate
/// the splittings.
pub fn compare_splittings(d1: &RRDiagram, d2: &RRDiagram) -> Result<ComparisonReport, Error> {
    let first = analyze_side(d1)?;
    let second = analyze_side(d2)?;
    let certified = |s: &SplittingAnalysis| s.sums.certificate().is_some() && s.unique_minimizer;
    let verdict = if certified(&first) && certified(&second) && first.complexity != second.complexity
    {
        Verdict::NotHomeomorphic
    } else {
        Verdict::Inconclusive
    };
    Ok(ComparisonReport { first, second, verdict })
}

/// Randomized falsification harness for the no-disjoint-curves conclusion:
/// samples cyclic words realizable as diagram curves (alternating syllables
/// whose exponents are face labels) and reports any whose graph against the
/// A/B disks has no A-edges or no B-edges — the necessary condition for a
/// curve disjoint from a disk. Returns the first counterexample found.
pub fn dcp_probe(d: &RRDiagram, seed: u64, samples: usize) -> Option<CyclicWord> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let ab = [Generator::new('A').unwrap(), Generator::new('B').unwrap()];
    let labels_a: Vec<i64> = d.hex_a.labels[0..3].iter().copied().filter(|l| *l != 0).collect();
    let labels_b: Vec<i64> = d.hex_b.labels[0..3].iter().copied().filter(|l| *l != 0).collect();
    if labels_a.is_empty() || labels_b.is_empty() {
        return None;
    }
    for _ in 0..samples {
        let pairs = rng.gen_range(1..=3usize);
        let mut letters = Vec::new();
        for _ in 0..pairs {
            for (gen, labels) in [(ab[0], &labels_a), (ab[1], &labels_b)] {
                let e = labels[rng.gen_range(0..labels.len())];
                let inverse = rng.gen_bool(0.5) != (e < 0);
                let l = crate::words::Letter { gen, inverse };
                for _ in 0..e.unsigned_abs() {
                    letters.push(l);
                }
            }
        }
        let w = CyclicWord::from_letters(letters);
        if w.len() > 12 || w.is_empty() {
            continue;
        }
        let g = match graph_from_words(std::slice::from_ref(&w), ab) {
            Ok(g) => g,
            Err(_) => continue,
        };
        if g.ss == 0 || g.tt == 0 {
            return Some(w);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cw(s: &str) -> CyclicWord {
        CyclicWord::parse(s).unwrap()
    }

    fn ab() -> [Generator; 2] {
        [Generator::new('A').unwrap(), Generator::new('B').unwrap()]
    }

    fn xy() -> [Generator; 2] {
        [Generator::new('X').unwrap(), Generator::new('Y').unwrap()]
    }

    #[test]
    fn sf_words_from_the_marked_pairs() {
        assert!(is_seifert_fiber_word(&cw("A^8B^7"), SfForm::Form16a, ab()).unwrap());
        assert!(is_seifert_fiber_word(&cw("A^5B^5"), SfForm::Form16a, ab()).unwrap());
        // cyclic form Y^7x^3
        assert!(is_seifert_fiber_word(&cw("Y^5x^3Y^2"), SfForm::Form16a, xy()).unwrap());
        assert!(is_seifert_fiber_word(&cw("X^2Y^7"), SfForm::Form16a, xy()).unwrap());
        // primitive and proper-power words are not SF
        assert!(!is_seifert_fiber_word(&cw("AB"), SfForm::Form16a, ab()).unwrap());
        assert!(!is_seifert_fiber_word(&cw("B^7"), SfForm::Form16a, ab()).unwrap());
        // a fiber order of 1 disqualifies
        assert!(!is_seifert_fiber_word(&cw("AB^5"), SfForm::Form16a, ab()).unwrap());
    }

    #[test]
    fn sixteen_b_declaration_is_validated() {
        assert!(is_seifert_fiber_word(&cw("A^2B^3"), SfForm::Form16b { a: 2, b: 3 }, ab()).unwrap());
        assert!(is_seifert_fiber_word(&cw("A^2B^3"), SfForm::Form16b { a: 2, b: 4 }, ab()).is_err());
        assert!(is_seifert_fiber_word(&cw("A^2B^3"), SfForm::Form16b { a: 0, b: 1 }, ab()).is_err());
    }

    #[test]
    fn proper_power_conditions_from_the_captions() {
        assert_eq!(proper_power_root(&cw("B^5"), ab()), Some((Generator::new('B').unwrap(), 5)));
        assert_eq!(proper_power_root(&cw("X^3"), xy()), Some((Generator::new('X').unwrap(), 3)));
        assert_eq!(proper_power_root(&cw("x^2"), xy()), Some((Generator::new('X').unwrap(), 2)));
        assert!(proper_power_root(&cw("A^8B^7"), ab()).is_none());
    }
}
