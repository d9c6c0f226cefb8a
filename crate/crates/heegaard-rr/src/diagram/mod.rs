//! The R-R diagram data model and file format.
//!
//! A genus-two Heegaard diagram whose cutting-disk pair on one side is
//! separated by a curve Γ is encoded as two hexagons (one per handle) joined
//! by non-crossing strands in an annulus. Each hexagon carries six face
//! labels in clockwise cyclic order, of shape (e1, e2, e3, −e1, −e2, −e3)
//! with e2 = e1 + e3; the labels are algebraic intersection numbers of
//! oriented connections with the oriented cutting-disk boundary of that
//! handle. Opposite faces of a hexagon are joined by parallel internal arcs
//! (connections): slot i of face f pairs with slot n−1−i of the opposite
//! face. Slots within a face are ordered left-to-right as seen from outside
//! the hexagon, i.e. clockwise around the hexagon boundary.
//!
//! File format: UTF-8 JSON with top-level keys `hex_a`, `hex_b` (each
//! `{labels: [6 ints], slots: [[curve_id,...] per face]}`), `strands` (list
//! of `[[hex, face, slot], [hex, face, slot], curve_id]`), and optional
//! `marked_curves` (list of `{id, word_h, word_hprime}`). Serialization is
//! canonical: keys in that order, no insignificant whitespace.

mod dual;
mod graphs;
mod rect;
mod synth;

pub use dual::dual_words;
pub use graphs::{
    check_unique_minimizer, classify_graph_form, graph_from_sequences, graph_from_words,
    DiagramGraph, GraphForm,
};
pub use rect::{detect_rectangles, RectangleFamilies, RectangleFamily};
pub use synth::{synthesize, Chirality};

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::presentation::Presentation;
use crate::words::{CyclicWord, Generator, Letter};
use crate::Error;

/// Which handle a hexagon represents.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum HexSide {
    A,
    B,
}

impl HexSide {
    pub fn generator(self) -> Generator {
        match self {
            HexSide::A => Generator::new('A').unwrap(),
            HexSide::B => Generator::new('B').unwrap(),
        }
    }

    pub fn other(self) -> HexSide {
        match self {
            HexSide::A => HexSide::B,
            HexSide::B => HexSide::A,
        }
    }

    fn tag(self) -> &'static str {
        match self {
            HexSide::A => "a",
            HexSide::B => "b",
        }
    }
}

/// A curve in the diagram: one of the two cutting-disk boundaries of the
/// other handlebody, or a marked curve.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum CurveId {
    X,
    Y,
    Marked(String),
}

impl CurveId {
    pub fn generator(&self) -> Option<Generator> {
        match self {
            CurveId::X => Some(Generator::new('X').unwrap()),
            CurveId::Y => Some(Generator::new('Y').unwrap()),
            CurveId::Marked(_) => None,
        }
    }

    pub fn is_relator_curve(&self) -> bool {
        matches!(self, CurveId::X | CurveId::Y)
    }

    fn from_str(s: &str) -> CurveId {
        match s {
            "X" => CurveId::X,
            "Y" => CurveId::Y,
            other => CurveId::Marked(other.to_string()),
        }
    }
}

impl fmt::Display for CurveId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveId::X => write!(f, "X"),
            CurveId::Y => write!(f, "Y"),
            CurveId::Marked(s) => write!(f, "{s}"),
        }
    }
}

/// One labeled hexagon: six signed face labels plus, per face, the ordered
/// list of curve ids occupying its strand endpoints.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Hexagon {
    pub labels: [i64; 6],
    pub slots: [Vec<CurveId>; 6],
}

impl Hexagon {
    /// A hexagon with the given first three labels and no slots.
    pub fn from_triple(e: (i64, i64, i64)) -> Hexagon {
        Hexagon {
            labels: [e.0, e.1, e.2, -e.0, -e.1, -e.2],
            slots: Default::default(),
        }
    }
}

/// A strand endpoint: (hexagon, face index, slot index).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SlotRef {
    pub hex: HexSide,
    pub face: usize,
    pub slot: usize,
}

/// One arc crossing the annulus between the two hexagons.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Strand {
    pub end_a: SlotRef,
    pub end_b: SlotRef,
    pub curve: CurveId,
}

/// A marked curve: declared words in the two handlebodies, optionally
/// realized by strands carrying its id.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MarkedCurve {
    pub id: String,
    pub word_h: CyclicWord,
    pub word_hprime: CyclicWord,
}

/// A validated R-R diagram.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RRDiagram {
    pub hex_a: Hexagon,
    pub hex_b: Hexagon,
    pub strands: Vec<Strand>,
    pub marked_curves: Option<Vec<MarkedCurve>>,
}

#[derive(Serialize, Deserialize)]
struct RawHexagon {
    labels: Vec<i64>,
    slots: Vec<Vec<String>>,
}

type RawEnd = (String, usize, usize);

#[derive(Serialize, Deserialize)]
struct RawDiagram {
    hex_a: RawHexagon,
    hex_b: RawHexagon,
    strands: Vec<(RawEnd, RawEnd, String)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    marked_curves: Option<Vec<RawMarked>>,
}

#[derive(Serialize, Deserialize)]
struct RawMarked {
    id: String,
    word_h: String,
    word_hprime: String,
}

fn schema(path: &str, detail: impl Into<String>) -> Error {
    Error::Schema { path: path.to_string(), detail: detail.into() }
}

fn invariant(name: &'static str, detail: impl Into<String>) -> Error {
    Error::Invariant { name, detail: detail.into() }
}

impl RRDiagram {
    /// Parse and validate a diagram from its JSON text.
    pub fn parse(text: &str) -> Result<RRDiagram, Error> {
        let raw: RawDiagram =
            serde_json::from_str(text).map_err(|e| schema("$", e.to_string()))?;
        let hex_a = convert_hexagon(raw.hex_a, "hex_a")?;
        let hex_b = convert_hexagon(raw.hex_b, "hex_b")?;
        let mut strands = Vec::new();
        for (i, (ea, eb, curve)) in raw.strands.into_iter().enumerate() {
            let path = format!("strands[{i}]");
            strands.push(Strand {
                end_a: convert_end(ea, &path)?,
                end_b: convert_end(eb, &path)?,
                curve: CurveId::from_str(&curve),
            });
        }
        let marked_curves = match raw.marked_curves {
            None => None,
            Some(raws) => {
                let mut out = Vec::new();
                for (i, m) in raws.into_iter().enumerate() {
                    let path = format!("marked_curves[{i}]");
                    out.push(MarkedCurve {
                        id: m.id,
                        word_h: CyclicWord::parse(&m.word_h)
                            .map_err(|e| schema(&format!("{path}.word_h"), e.to_string()))?,
                        word_hprime: CyclicWord::parse(&m.word_hprime)
                            .map_err(|e| schema(&format!("{path}.word_hprime"), e.to_string()))?,
                    });
                }
                Some(out)
            }
        };
        let d = RRDiagram { hex_a, hex_b, strands, marked_curves };
        d.validate()?;
        Ok(d)
    }

    /// Canonical serialization: fixed key order, no insignificant whitespace.
    pub fn serialize(&self) -> String {
        let hex = |h: &Hexagon| RawHexagon {
            labels: h.labels.to_vec(),
            slots: h.slots.iter().map(|f| f.iter().map(|c| c.to_string()).collect()).collect(),
        };
        let raw = RawDiagram {
            hex_a: hex(&self.hex_a),
            hex_b: hex(&self.hex_b),
            strands: self
                .strands
                .iter()
                .map(|s| {
                    let end = |e: &SlotRef| (e.hex.tag().to_string(), e.face, e.slot);
                    (end(&s.end_a), end(&s.end_b), s.curve.to_string())
                })
                .collect(),
            marked_curves: self.marked_curves.as_ref().map(|ms| {
                ms.iter()
                    .map(|m| RawMarked {
                        id: m.id.clone(),
                        word_h: m.word_h.to_string(),
                        word_hprime: m.word_hprime.to_string(),
                    })
                    .collect()
            }),
        };
        serde_json::to_string(&raw).expect("diagram serialization cannot fail")
    }

    /// SHA-256 of the canonical serialization, in hex.
    pub fn content_hash(&self) -> String {
        use sha2::Digest;
        hex::encode(sha2::Sha256::digest(self.serialize().as_bytes()))
    }

    pub fn hexagon(&self, side: HexSide) -> &Hexagon {
        match side {
            HexSide::A => &self.hex_a,
            HexSide::B => &self.hex_b,
        }
    }

    fn slot_curve(&self, r: SlotRef) -> Option<&CurveId> {
        self.hexagon(r.hex).slots.get(r.face)?.get(r.slot)
    }

    /// The opposite end of the connection through the hexagon at this slot.
    pub fn connection_partner(&self, r: SlotRef) -> SlotRef {
        let face = (r.face + 3) % 6;
        let n = self.hexagon(r.hex).slots[r.face].len();
        SlotRef { hex: r.hex, face, slot: n - 1 - r.slot }
    }

    /// Validate every structural invariant, by name.
    pub fn validate(&self) -> Result<(), Error> {
        for (side, h) in [(HexSide::A, &self.hex_a), (HexSide::B, &self.hex_b)] {
            let tag = side.tag();
            for i in 0..3 {
                if h.labels[i + 3] != -h.labels[i] {
                    return Err(invariant(
                        "opposite-labels",
                        format!("hex_{tag} face {} label must negate face {i}", i + 3),
                    ));
                }
            }
            if h.labels[1] != h.labels[0] + h.labels[2] {
                return Err(invariant(
                    "label-sum",
                    format!("hex_{tag} labels must satisfy e2 = e1 + e3, got {:?}", h.labels),
                ));
            }
            let g = h.labels[0].unsigned_abs().gcd(&h.labels[2].unsigned_abs());
            if g != 1 {
                return Err(invariant(
                    "label-gcd",
                    format!("hex_{tag} independent labels must be coprime, gcd = {g}"),
                ));
            }
            for f in 0..3 {
                if h.slots[f].len() != h.slots[f + 3].len() {
                    return Err(invariant(
                        "opposite-slot-counts",
                        format!(
                            "hex_{tag} faces {f}/{}: {} vs {} slots",
                            f + 3,
                            h.slots[f].len(),
                            h.slots[f + 3].len()
                        ),
                    ));
                }
                let n = h.slots[f].len();
                for i in 0..n {
                    if h.slots[f][i] != h.slots[f + 3][n - 1 - i] {
                        return Err(invariant(
                            "connection-pairing",
                            format!(
                                "hex_{tag} face {f} slot {i} ({}) does not pair with face {} slot {}",
                                h.slots[f][i],
                                f + 3,
                                n - 1 - i
                            ),
                        ));
                    }
                }
            }
            for f in 0..6 {
                if h.labels[f] == 0 && !h.slots[f].is_empty() {
                    return Err(invariant(
                        "zero-label-face",
                        format!("hex_{tag} face {f} has label 0 but carries slots"),
                    ));
                }
            }
        }

        let mut marked_ids: BTreeSet<&str> = BTreeSet::new();
        for m in self.marked_curves.iter().flatten() {
            if m.id == "X" || m.id == "Y" || !marked_ids.insert(m.id.as_str()) {
                return Err(invariant(
                    "curve-ids",
                    format!("marked curve id {:?} duplicated or reserved", m.id),
                ));
            }
        }
        let mut used: BTreeMap<SlotRef, &CurveId> = BTreeMap::new();
        for s in &self.strands {
            if s.end_a.hex == s.end_b.hex {
                return Err(invariant(
                    "strand-crosses-annulus",
                    format!("strand {s:?} joins a hexagon to itself"),
                ));
            }
            if let CurveId::Marked(id) = &s.curve {
                if !marked_ids.contains(id.as_str()) {
                    return Err(invariant(
                        "curve-ids",
                        format!("strand uses undeclared curve id {id:?}"),
                    ));
                }
            }
            for end in [s.end_a, s.end_b] {
                if end.face >= 6 {
                    return Err(schema("strands", format!("face index {} out of range", end.face)));
                }
                let Some(c) = self.slot_curve(end) else {
                    return Err(schema(
                        "strands",
                        format!("slot index {} out of range at {end:?}", end.slot),
                    ));
                };
                if *c != s.curve {
                    return Err(invariant(
                        "slot-curve-match",
                        format!("strand of curve {} attached to slot of curve {c} at {end:?}", s.curve),
                    ));
                }
                if used.insert(end, &s.curve).is_some() {
                    return Err(invariant(
                        "slot-usage",
                        format!("slot {end:?} used by more than one strand"),
                    ));
                }
            }
        }
        let total_slots: usize = [&self.hex_a, &self.hex_b]
            .iter()
            .flat_map(|h| h.slots.iter())
            .map(Vec::len)
            .sum();
        if total_slots != 2 * self.strands.len() {
            return Err(invariant(
                "slot-usage",
                format!("{total_slots} slots but {} strand endpoints", 2 * self.strands.len()),
            ));
        }

        self.check_planarity()?;

        // every curve traces closed cycles; X, Y and each marked curve at most one
        let cycles = self.cycles();
        let mut per_curve: BTreeMap<&CurveId, usize> = BTreeMap::new();
        for c in &cycles {
            *per_curve.entry(&c.curve).or_default() += 1;
        }
        for (curve, count) in &per_curve {
            if *count > 1 {
                return Err(invariant(
                    "one-cycle-per-curve",
                    format!("curve {curve} traces {count} cycles"),
                ));
            }
        }

        for m in self.marked_curves.iter().flatten() {
            for g in m.word_h.generators() {
                if !"AB".contains(g.name()) {
                    return Err(invariant(
                        "marked-word-alphabet",
                        format!("marked curve {}: word_h must be over A,B", m.id),
                    ));
                }
            }
            for g in m.word_hprime.generators() {
                if !"XY".contains(g.name()) {
                    return Err(invariant(
                        "marked-word-alphabet",
                        format!("marked curve {}: word_hprime must be over X,Y", m.id),
                    ));
                }
            }
            let cycle = cycles
                .iter()
                .find(|c| c.curve == CurveId::Marked(m.id.clone()));
            match cycle {
                Some(c) => {
                    let read = self.cycle_word(c).unoriented();
                    if read != m.word_h.unoriented() {
                        return Err(invariant(
                            "marked-word",
                            format!(
                                "marked curve {} declares word_h {} but its strands read {read}",
                                m.id, m.word_h
                            ),
                        ));
                    }
                }
                None => {
                    // a curve with no annulus strands lies in one handle
                    if m.word_h.syllables().len() != 1 {
                        return Err(invariant(
                            "marked-word",
                            format!(
                                "strand-free marked curve {} must have a single-generator word_h, got {}",
                                m.id, m.word_h
                            ),
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    /// Boundary slot sequence of one hexagon, clockwise: faces in index
    /// order, slots within a face in listed order.
    pub fn boundary(&self, side: HexSide) -> Vec<SlotRef> {
        let h = self.hexagon(side);
        (0..6)
            .flat_map(|face| {
                (0..h.slots[face].len()).map(move |slot| SlotRef { hex: side, face, slot })
            })
            .collect()
    }

    /// Planarity of the X/Y system: its strand pairing, read against the
    /// clockwise boundary orders of the two hexagons, must be a rotation —
    /// position sums constant mod the strand count. Any other pairing forces
    /// a crossing between the cutting-curve arcs in the annulus. Marked
    /// curves are exempt: they may cross the X/Y arcs.
    fn check_planarity(&self) -> Result<(), Error> {
        let xy: Vec<&Strand> = self.strands.iter().filter(|s| s.curve.is_relator_curve()).collect();
        let n = xy.len();
        if n <= 1 {
            return Ok(());
        }
        let index: BTreeMap<SlotRef, usize> = self
            .boundary(HexSide::A)
            .into_iter()
            .chain(self.boundary(HexSide::B))
            .filter(|r| self.slot_curve(*r).is_some_and(CurveId::is_relator_curve))
            .enumerate()
            .map(|(i, r)| (r, i % n))
            .collect();
        let mut residue: Option<usize> = None;
        for s in xy {
            let (ia, ib) = (index[&s.end_a], index[&s.end_b]);
            let r = (ia + ib) % n;
            if *residue.get_or_insert(r) != r {
                return Err(invariant(
                    "planarity",
                    format!("strand {:?} crosses another strand in the annulus", s),
                ));
            }
        }
        Ok(())
    }

    /// All closed cycles traced by the strands and hexagon connections.
    /// Arrival slots are listed in traversal order; the traversal direction
    /// is chosen so the curve's word is canonical (least of the two
    /// orientations).
    pub fn cycles(&self) -> Vec<Cycle> {
        let mut strand_other: BTreeMap<SlotRef, SlotRef> = BTreeMap::new();
        for s in &self.strands {
            strand_other.insert(s.end_a, s.end_b);
            strand_other.insert(s.end_b, s.end_a);
        }
        let mut seen: BTreeSet<SlotRef> = BTreeSet::new();
        let mut out = Vec::new();
        for start in self.boundary(HexSide::A).into_iter().chain(self.boundary(HexSide::B)) {
            if seen.contains(&start) {
                continue;
            }
            let curve = self.slot_curve(start).expect("boundary slots exist").clone();
            let mut arrivals = Vec::new();
            let mut p = start;
            loop {
                arrivals.push(p);
                seen.insert(p);
                seen.insert(self.connection_partner(p));
                p = strand_other[&self.connection_partner(p)];
                if p == start {
                    break;
                }
            }
            let mut cycle = Cycle { curve, arrivals };
            let w = self.cycle_word(&cycle);
            if w.inverse() < w {
                cycle.arrivals = cycle
                    .arrivals
                    .iter()
                    .rev()
                    .map(|r| self.connection_partner(*r))
                    .collect();
            }
            out.push(cycle);
        }
        out
    }

    /// The word a cycle reads: entering a hexagon at the face labeled e
    /// contributes that handle's generator to the power e. Crossing from the
    /// +e face toward the −e face records the positive power.
    pub fn cycle_word(&self, cycle: &Cycle) -> CyclicWord {
        let mut letters = Vec::new();
        for p in &cycle.arrivals {
            let e = self.hexagon(p.hex).labels[p.face];
            let l = Letter { gen: p.hex.generator(), inverse: e < 0 };
            letters.extend(std::iter::repeat_n(l, e.unsigned_abs() as usize));
        }
        CyclicWord::from_letters(letters)
    }

    /// Relators of the handlebody group read from the X and Y curves.
    pub fn extract_words(&self) -> Result<Presentation, Error> {
        let gens = vec![HexSide::A.generator(), HexSide::B.generator()];
        let mut relators = Vec::new();
        for id in [CurveId::X, CurveId::Y] {
            if let Some(c) = self.cycles().iter().find(|c| c.curve == id) {
                relators.push(self.cycle_word(c));
            }
        }
        Presentation::new(gens, relators)
    }

    /// Total intersections of the X/Y curves with the two cutting-disk
    /// boundaries: sum over connections of the absolute face label.
    pub fn complexity(&self) -> usize {
        [&self.hex_a, &self.hex_b]
            .iter()
            .flat_map(|h| (0..3).map(|f| (h.labels[f], &h.slots[f])))
            .map(|(label, slots)| {
                label.unsigned_abs() as usize
                    * slots.iter().filter(|c| c.is_relator_curve()).count()
            })
            .sum()
    }

    /// Declared marked curve by id.
    pub fn marked_curve(&self, id: &str) -> Option<&MarkedCurve> {
        self.marked_curves.iter().flatten().find(|m| m.id == id)
    }

    /// Slot set occupied by a curve id (empty for strand-free curves).
    pub fn slot_set(&self, id: &CurveId) -> BTreeSet<SlotRef> {
        self.strands
            .iter()
            .filter(|s| s.curve == *id)
            .flat_map(|s| [s.end_a, s.end_b])
            .collect()
    }
}

/// One closed curve traversal: ordered arrival slots.
#[derive(Clone, Debug)]
pub struct Cycle {
    pub curve: CurveId,
    pub arrivals: Vec<SlotRef>,
}

/// Build the rotation diagram with the given hexagon triples, per-class
/// connection counts, and rotation constant: boundary position i of the
/// A-hexagon joins position (rotation − i) of the B-hexagon. The construction
/// is planar by definition; it fails when the strands close into anything
/// other than one or two curves. Curves are named X, Y in discovery order.
pub fn rotation_diagram(
    triple_a: (i64, i64, i64),
    triple_b: (i64, i64, i64),
    counts_a: [usize; 3],
    counts_b: [usize; 3],
    rotation: usize,
) -> Result<RRDiagram, Error> {
    let mut hex_a = Hexagon::from_triple(triple_a);
    let mut hex_b = Hexagon::from_triple(triple_b);
    for f in 0..3 {
        hex_a.slots[f] = vec![CurveId::X; counts_a[f]];
        hex_a.slots[f + 3] = vec![CurveId::X; counts_a[f]];
        hex_b.slots[f] = vec![CurveId::X; counts_b[f]];
        hex_b.slots[f + 3] = vec![CurveId::X; counts_b[f]];
    }
    let spread = |counts: [usize; 3]| -> Vec<usize> {
        (0..6).flat_map(|f| std::iter::repeat_n(f, counts[f % 3])).collect()
    };
    let faces_a = spread(counts_a);
    let faces_b = spread(counts_b);
    let n = faces_a.len();
    if n != faces_b.len() {
        return Err(invariant(
            "slot-usage",
            format!("{n} A-side connections but {} B-side", faces_b.len()),
        ));
    }
    let slot_of = |faces: &[usize], i: usize| -> (usize, usize) {
        let face = faces[i];
        (face, faces[..i].iter().filter(|f| **f == face).count())
    };
    let mut strands = Vec::new();
    for i in 0..n {
        let j = (rotation + n - i) % n;
        let (fa, sa) = slot_of(&faces_a, i);
        let (fb, sb) = slot_of(&faces_b, j);
        strands.push(Strand {
            end_a: SlotRef { hex: HexSide::A, face: fa, slot: sa },
            end_b: SlotRef { hex: HexSide::B, face: fb, slot: sb },
            curve: CurveId::X,
        });
    }
    let mut d = RRDiagram { hex_a, hex_b, strands, marked_curves: None };
    let cycles = d.cycles();
    if cycles.len() > 2 {
        return Err(invariant(
            "one-cycle-per-curve",
            format!("hookup closes into {} curves", cycles.len()),
        ));
    }
    let mut assignment = Vec::new();
    for (k, cycle) in cycles.iter().enumerate() {
        let id = if k == 0 { CurveId::X } else { CurveId::Y };
        assignment.push((cycle.arrivals.clone(), id));
    }
    for (arrivals, id) in assignment {
        for arrival in arrivals {
            let partner = d.connection_partner(arrival);
            for r in [arrival, partner] {
                let hex = match r.hex {
                    HexSide::A => &mut d.hex_a,
                    HexSide::B => &mut d.hex_b,
                };
                hex.slots[r.face][r.slot] = id.clone();
            }
        }
    }
    for s in &mut d.strands {
        let hex = match s.end_a.hex {
            HexSide::A => &d.hex_a,
            HexSide::B => &d.hex_b,
        };
        s.curve = hex.slots[s.end_a.face][s.end_a.slot].clone();
    }
    d.validate()?;
    Ok(d)
}

/// Swap the X and Y curve names.
pub fn swap_xy(d: &RRDiagram) -> RRDiagram {
    let mut out = d.clone();
    let flip = |c: &mut CurveId| {
        *c = match c {
            CurveId::X => CurveId::Y,
            CurveId::Y => CurveId::X,
            CurveId::Marked(m) => CurveId::Marked(m.clone()),
        }
    };
    for hex in [&mut out.hex_a, &mut out.hex_b] {
        for face in hex.slots.iter_mut() {
            face.iter_mut().for_each(flip);
        }
    }
    for s in &mut out.strands {
        flip(&mut s.curve);
    }
    out
}

fn convert_hexagon(raw: RawHexagon, path: &str) -> Result<Hexagon, Error> {
    let labels: [i64; 6] = raw
        .labels
        .try_into()
        .map_err(|v: Vec<i64>| schema(path, format!("need 6 labels, got {}", v.len())))?;
    if raw.slots.len() != 6 {
        return Err(schema(path, format!("need 6 slot lists, got {}", raw.slots.len())));
    }
    let mut slots: [Vec<CurveId>; 6] = Default::default();
    for (f, ids) in raw.slots.into_iter().enumerate() {
        slots[f] = ids.iter().map(|s| CurveId::from_str(s)).collect();
    }
    Ok(Hexagon { labels, slots })
}

fn convert_end((hex, face, slot): RawEnd, path: &str) -> Result<SlotRef, Error> {
    let hex = match hex.as_str() {
        "a" => HexSide::A,
        "b" => HexSide::B,
        other => return Err(schema(path, format!("hexagon must be \"a\" or \"b\", got {other:?}"))),
    };
    Ok(SlotRef { hex, face, slot })
}

/// Insert a marked curve into a diagram: declares the words and, when the
/// curve crosses the annulus (its word_h alternates handles), realizes it by
/// strands placed so the whole strand system stays non-crossing. Fails when
/// some syllable has no face with the needed label or no planar placement
/// exists.
pub fn insert_marked_curve(
    d: &RRDiagram,
    id: &str,
    word_h: &CyclicWord,
    word_hprime: &CyclicWord,
) -> Result<RRDiagram, Error> {
    let mut out = d.clone();
    out.marked_curves.get_or_insert_with(Vec::new).push(MarkedCurve {
        id: id.to_string(),
        word_h: word_h.clone(),
        word_hprime: word_hprime.clone(),
    });
    let syllables = word_h.syllables();
    if syllables.len() == 1 {
        out.validate()?;
        return Ok(out);
    }

    // face entered by each pass, in traversal order
    let mut entry_faces: Vec<(HexSide, usize)> = Vec::new();
    for (g, e) in &syllables {
        let side = match g.name() {
            'A' => HexSide::A,
            'B' => HexSide::B,
            _ => return Err(invariant("marked-word-alphabet", format!("bad generator {g}"))),
        };
        let face = (0..6)
            .find(|&f| d.hexagon(side).labels[f] == *e)
            .ok_or_else(|| {
                invariant(
                    "marked-realization",
                    format!("no face labeled {e} on the {side:?}-hexagon for curve {id}"),
                )
            })?;
        if entry_faces.iter().any(|(s, f)| *s == side && f % 3 == face % 3) {
            return Err(invariant(
                "marked-realization",
                format!("curve {id} uses a connection class twice; placement not supported"),
            ));
        }
        entry_faces.push((side, face));
    }

    // each pass owns one slot pair: an entry slot at the head of its entry
    // face and the mirrored exit slot on the opposite face. Strand k joins
    // the exit slot of pass k to the entry slot of pass k+1. Passes use
    // distinct face pairs, so insertions do not interact. Marked strands may
    // cross the X/Y arcs in the annulus, so no placement search is needed.
    let m = entry_faces.len();
    let sizes: Vec<usize> =
        entry_faces.iter().map(|(s, f)| d.hexagon(*s).slots[*f].len()).collect();
    for (side, face) in &entry_faces {
        insert_slot(&mut out, *side, *face, 0, id);
    }
    for k in 0..m {
        let (side, face) = entry_faces[k];
        let exit = SlotRef { hex: side, face: (face + 3) % 6, slot: sizes[k] };
        let (nside, nface) = entry_faces[(k + 1) % m];
        let entry = SlotRef { hex: nside, face: nface, slot: 0 };
        out.strands.push(Strand { end_a: exit, end_b: entry, curve: CurveId::Marked(id.to_string()) });
    }
    out.validate()?;
    Ok(out)
}

/// Insert one slot at `pos` in a face, mirroring into the opposite face and
/// remapping existing strand endpoints.
fn insert_slot(d: &mut RRDiagram, side: HexSide, face: usize, pos: usize, id: &str) {
    let opp = (face + 3) % 6;
    let n = d.hexagon(side).slots[face].len();
    let hex = match side {
        HexSide::A => &mut d.hex_a,
        HexSide::B => &mut d.hex_b,
    };
    hex.slots[face].insert(pos, CurveId::Marked(id.to_string()));
    hex.slots[opp].insert(n - pos, CurveId::Marked(id.to_string()));
    for s in &mut d.strands {
        for end in [&mut s.end_a, &mut s.end_b] {
            let shifted = (end.face == face && end.slot >= pos)
                || (end.face == opp && end.slot >= n - pos);
            if end.hex == side && shifted {
                end.slot += 1;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Two hexagons labeled (1,2,1), X entering A-face 0 and B-face 0.
    /// Cycle: A-face 0 → exit face 3 → strand to B-face 0 → exit B-face 3 →
    /// strand back; word AB.
    pub(crate) fn toy_two_strand() -> RRDiagram {
        let mut hex_a = Hexagon::from_triple((1, 2, 1));
        let mut hex_b = Hexagon::from_triple((1, 2, 1));
        hex_a.slots[0] = vec![CurveId::X];
        hex_a.slots[3] = vec![CurveId::X];
        hex_b.slots[0] = vec![CurveId::X];
        hex_b.slots[3] = vec![CurveId::X];
        let strands = vec![
            Strand {
                end_a: SlotRef { hex: HexSide::A, face: 3, slot: 0 },
                end_b: SlotRef { hex: HexSide::B, face: 0, slot: 0 },
                curve: CurveId::X,
            },
            Strand {
                end_a: SlotRef { hex: HexSide::B, face: 3, slot: 0 },
                end_b: SlotRef { hex: HexSide::A, face: 0, slot: 0 },
                curve: CurveId::X,
            },
        ];
        RRDiagram { hex_a, hex_b, strands, marked_curves: None }
    }

    #[test]
    fn toy_round_trip_and_word() {
        let d = toy_two_strand();
        d.validate().unwrap();
        let text = d.serialize();
        let back = RRDiagram::parse(&text).unwrap();
        assert_eq!(back, d);
        assert_eq!(back.serialize(), text);

        let p = d.extract_words().unwrap();
        assert_eq!(p.relators().len(), 1);
        assert_eq!(p.relators()[0], CyclicWord::parse("AB").unwrap());
        assert_eq!(d.complexity(), 2);
    }

    #[test]
    fn zero_strand_diagram_is_valid() {
        let d = RRDiagram {
            hex_a: Hexagon::from_triple((1, 2, 1)),
            hex_b: Hexagon::from_triple((1, 2, 1)),
            strands: vec![],
            marked_curves: None,
        };
        d.validate().unwrap();
        assert_eq!(d.complexity(), 0);
        assert!(d.extract_words().unwrap().relators().is_empty());
    }

    #[test]
    fn bad_labels_are_rejected() {
        let mut d = toy_two_strand();
        d.hex_a.labels = [1, 2, 1, -1, -2, 1];
        assert!(matches!(
            d.validate(),
            Err(Error::Invariant { name: "opposite-labels", .. })
        ));
        let mut d = toy_two_strand();
        d.hex_a.labels = [1, 3, 1, -1, -3, -1];
        assert!(matches!(d.validate(), Err(Error::Invariant { name: "label-sum", .. })));
        let mut d = toy_two_strand();
        d.hex_a.labels = [2, 4, 2, -2, -4, -2];
        assert!(matches!(d.validate(), Err(Error::Invariant { name: "label-gcd", .. })));
    }

    #[test]
    fn schema_errors_carry_paths() {
        let err = RRDiagram::parse("{\"hex_a\":").unwrap_err();
        assert!(matches!(err, Error::Schema { .. }));
    }

    #[test]
    fn crossing_strands_are_rejected() {
        let d = (0..4)
            .find_map(|c| rotation_diagram((1, 2, 1), (1, 2, 1), [2, 0, 0], [2, 0, 0], c).ok())
            .unwrap();
        let same_curve: Vec<usize> = (0..d.strands.len())
            .filter(|i| d.strands[*i].curve == d.strands[0].curve)
            .collect();
        let (i, j) = (same_curve[0], same_curve[1]);
        let mut crossed = d.clone();
        let tmp = crossed.strands[i].end_b;
        crossed.strands[i].end_b = crossed.strands[j].end_b;
        crossed.strands[j].end_b = tmp;
        assert!(matches!(
            crossed.validate(),
            Err(Error::Invariant { name: "planarity", .. })
        ));
    }

    #[test]
    fn marked_declaration_without_strands() {
        let mut d = toy_two_strand();
        d.marked_curves = Some(vec![MarkedCurve {
            id: "beta".into(),
            word_h: CyclicWord::parse("B^5").unwrap(),
            word_hprime: CyclicWord::parse("Y^5x^3Y^2").unwrap(),
        }]);
        d.validate().unwrap();
        // a strand-free marked curve must live in one handle
        d.marked_curves.as_mut().unwrap()[0].word_h = CyclicWord::parse("A^2B^2").unwrap();
        assert!(matches!(d.validate(), Err(Error::Invariant { name: "marked-word", .. })));
    }
}
