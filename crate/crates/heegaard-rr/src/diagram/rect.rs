//! Rectangle detection.
//!
//! The separating curve Γ together with the X and Y curves cuts the Heegaard
//! surface into faces; the four-sided ones are rectangles. A rectangle with
//! two X-sides (resp. Y-sides) on the A-handle (resp. B-handle) exists
//! exactly when that curve occupies two adjacent slots of a face of the
//! corresponding hexagon, and its weight is the absolute face label — the
//! number of essential arcs it cuts from the cutting-disk boundary.

use serde::Serialize;

use super::{CurveId, HexSide, RRDiagram};

/// One of the four rectangle families, tagged by handle side and curve.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RectangleFamily {
    /// `ax`, `ay`, `bx`, or `by`.
    pub tag: String,
    /// Multiset of rectangle weights |R_pq|, in detection order.
    pub weights: Vec<u64>,
}

/// All four families in tag order ax, ay, bx, by.
pub type RectangleFamilies = [RectangleFamily; 4];

/// Scan each positively indexed face once (rectangles show up identically on
/// the opposite face) for adjacent same-curve slot pairs of X and of Y.
/// Marked-curve slots are skipped: marked curves are decoration, not part of
/// the cutting system.
pub fn detect_rectangles(d: &RRDiagram) -> RectangleFamilies {
    let mut out = [
        RectangleFamily { tag: "ax".into(), weights: vec![] },
        RectangleFamily { tag: "ay".into(), weights: vec![] },
        RectangleFamily { tag: "bx".into(), weights: vec![] },
        RectangleFamily { tag: "by".into(), weights: vec![] },
    ];
    for (side, base) in [(HexSide::A, 0), (HexSide::B, 2)] {
        let h = d.hexagon(side);
        for f in 0..3 {
            let weight = h.labels[f].unsigned_abs();
            if weight == 0 {
                continue;
            }
            let xy: Vec<&CurveId> =
                h.slots[f].iter().filter(|c| c.is_relator_curve()).collect();
            for pair in xy.windows(2) {
                if pair[0] == pair[1] {
                    let family = base + if *pair[0] == CurveId::X { 0 } else { 1 };
                    out[family].weights.push(weight);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::super::{Hexagon, RRDiagram, SlotRef, Strand};
    use super::*;

    /// Faces strictly alternate X and Y slots: no adjacent same-curve pair.
    #[test]
    fn alternating_slots_give_no_rectangles() {
        let mut hex_a = Hexagon::from_triple((1, 2, 1));
        let mut hex_b = Hexagon::from_triple((1, 2, 1));
        for h in [&mut hex_a, &mut hex_b] {
            h.slots[0] = vec![CurveId::X, CurveId::Y];
            h.slots[3] = vec![CurveId::Y, CurveId::X];
        }
        let s = |hex, face, slot| SlotRef { hex, face, slot };
        let strands = vec![
            Strand { end_a: s(HexSide::A, 3, 1), end_b: s(HexSide::B, 0, 0), curve: CurveId::X },
            Strand { end_a: s(HexSide::B, 3, 1), end_b: s(HexSide::A, 0, 0), curve: CurveId::X },
            Strand { end_a: s(HexSide::A, 3, 0), end_b: s(HexSide::B, 0, 1), curve: CurveId::Y },
            Strand { end_a: s(HexSide::B, 3, 0), end_b: s(HexSide::A, 0, 1), curve: CurveId::Y },
        ];
        let d = RRDiagram { hex_a, hex_b, strands, marked_curves: None };
        d.validate().unwrap();
        let fams = detect_rectangles(&d);
        assert!(fams.iter().all(|f| f.weights.is_empty()));
    }
}
