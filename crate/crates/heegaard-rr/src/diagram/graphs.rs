//! Four-vertex multigraph summaries of curve systems against a cutting-disk
//! pair, and the classification into the three realizable forms.
//!
//! Vertices are the two sides of each disk: S⁺/S⁻ and T⁺/T⁻. Each adjacent
//! letter pair (g, h) of a cyclic word contributes one edge from the exit
//! side of g to the entry side of h. A positive crossing enters at the −
//! side and exits at the + side.

use serde::Serialize;

use crate::words::{CyclicWord, Generator, Letter};
use crate::Error;

/// Aggregated edge counts of the diagram graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiagramGraph {
    /// Edges joining S⁺ to S⁻.
    pub ss: usize,
    /// Edges joining T⁺ to T⁻.
    pub tt: usize,
    /// Edges joining an S-vertex to a T-vertex.
    pub mixed: usize,
    /// The mixed edges split into their parallel families, counted per
    /// vertex pair (S⁺T⁺, S⁺T⁻, S⁻T⁺, S⁻T⁻). Only the aggregate is needed
    /// by the certification criteria.
    pub mixed_pairs: [usize; 4],
    /// Edges with both endpoints at one vertex.
    pub loops: usize,
    /// Ends of edges meeting S⁺, S⁻, T⁺, T⁻.
    pub valences: [usize; 4],
}

/// The three graph forms that occur under genus-two Heegaard diagrams.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum GraphForm {
    /// Both disks see parallel same-disk edge families.
    A,
    /// At least one disk has no same-disk edges.
    B,
    /// A loop: some arc returns to the side it left (a wave).
    C,
}

impl std::fmt::Display for GraphForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GraphForm::A => write!(f, "FormA"),
            GraphForm::B => write!(f, "FormB"),
            GraphForm::C => write!(f, "FormC"),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Vertex {
    SPlus,
    SMinus,
    TPlus,
    TMinus,
}

/// Build the graph from raw cyclic letter sequences over a two-generator
/// alphabet. Sequences need not be reduced: an adjacent g·g⁻¹ records a
/// loop, which is how waves appear.
pub fn graph_from_sequences(
    sequences: &[Vec<Letter>],
    alphabet: [Generator; 2],
) -> Result<DiagramGraph, Error> {
    let [s, t] = alphabet;
    let vertex = |gen: Generator, plus: bool| -> Result<Vertex, Error> {
        match (gen == s, gen == t, plus) {
            (true, _, true) => Ok(Vertex::SPlus),
            (true, _, false) => Ok(Vertex::SMinus),
            (_, true, true) => Ok(Vertex::TPlus),
            (_, true, false) => Ok(Vertex::TMinus),
            _ => Err(Error::Presentation(format!("letter {gen} outside alphabet {s},{t}"))),
        }
    };
    let mut g = DiagramGraph {
        ss: 0,
        tt: 0,
        mixed: 0,
        mixed_pairs: [0; 4],
        loops: 0,
        valences: [0; 4],
    };
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    for seq in sequences {
        let n = seq.len();
        for i in 0..n {
            let cur = seq[i];
            let next = seq[(i + 1) % n];
            let exit = vertex(cur.gen, !cur.inverse)?;
            let entry = vertex(next.gen, next.inverse)?;
            edges.push((exit, entry));
        }
    }
    for (u, v) in edges {
        g.valences[u as usize] += 1;
        g.valences[v as usize] += 1;
        match (u, v) {
            _ if u == v => g.loops += 1,
            (Vertex::SPlus | Vertex::SMinus, Vertex::SPlus | Vertex::SMinus) => g.ss += 1,
            (Vertex::TPlus | Vertex::TMinus, Vertex::TPlus | Vertex::TMinus) => g.tt += 1,
            _ => {
                g.mixed += 1;
                let (s, t) = if matches!(u, Vertex::SPlus | Vertex::SMinus) {
                    (u, v)
                } else {
                    (v, u)
                };
                let corner = 2 * usize::from(s == Vertex::SMinus)
                    + usize::from(t == Vertex::TMinus);
                g.mixed_pairs[corner] += 1;
            }
        }
    }
    Ok(g)
}

/// Build the graph from cyclically reduced cyclic words.
pub fn graph_from_words(
    words: &[CyclicWord],
    alphabet: [Generator; 2],
) -> Result<DiagramGraph, Error> {
    let seqs: Vec<Vec<Letter>> = words.iter().map(|w| w.letters().to_vec()).collect();
    graph_from_sequences(&seqs, alphabet)
}

/// Classify a graph into the three realizable forms, after checking the
/// valence equations V(S⁺)=V(S⁻) and V(T⁺)=V(T⁻) that every genus-two
/// Heegaard diagram graph satisfies.
pub fn classify_graph_form(g: &DiagramGraph) -> Result<GraphForm, Error> {
    let [sp, sm, tp, tm] = g.valences;
    if sp != sm || tp != tm {
        return Err(Error::Invariant {
            name: "graph-valences",
            detail: format!(
                "V(S+)={sp} V(S-)={sm} V(T+)={tp} V(T-)={tm}: not realizable as a Heegaard diagram graph"
            ),
        });
    }
    Ok(if g.loops > 0 {
        GraphForm::C
    } else if g.ss == 0 || g.tt == 0 {
        GraphForm::B
    } else {
        GraphForm::A
    })
}

/// Unique-minimizer criterion: a form-A graph with ss > mixed > 0 and
/// tt > mixed > 0 certifies that its disk pair is the one and only complete
/// set of cutting disks meeting the curve system minimally.
pub fn check_unique_minimizer(g: &DiagramGraph) -> bool {
    matches!(classify_graph_form(g), Ok(GraphForm::A))
        && g.ss > g.mixed
        && g.tt > g.mixed
        && g.mixed > 0
}
