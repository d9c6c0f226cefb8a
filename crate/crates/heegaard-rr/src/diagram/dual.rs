//! Dual words: the ordered signed crossings of the X and Y curves along each
//! cutting-disk boundary.
//!
//! Each once-punctured torus (hexagon) is computed in its cut-open square
//! model: the torus is R²/Z² with the puncture at the lattice, the disk
//! boundary ∂D_P is the vertical circle x = 1/2 oriented upward, and the
//! three connection classes are straight arc families through the lattice
//! with primitive direction vectors u0, u1 = u0 + u2, u2, whose x-components
//! are the face labels. Parallel copies of one class are pushed off by tiny
//! perpendicular offsets ordered by slot index. Crossing positions along
//! ∂D_P are exact rationals; ties across distinct classes are impossible
//! (adjacent classes have determinant ±1, an odd/even obstruction), so the
//! crossing order is canonical.

use num_rational::Ratio;

use crate::presentation::Presentation;
use crate::words::{CyclicWord, Generator, Letter};
use crate::Error;

use super::{HexSide, RRDiagram};

/// Cyclic words over {X, Y} recording, along ∂D_A and ∂D_B, the ordered
/// signed crossings with the X and Y curves.
pub fn dual_words(d: &RRDiagram) -> Result<Presentation, Error> {
    let cycles = d.cycles();
    let mut relators = Vec::new();
    for side in [HexSide::A, HexSide::B] {
        relators.push(dual_word_one_side(d, side, &cycles)?);
    }
    Presentation::new(
        vec![Generator::new('X').unwrap(), Generator::new('Y').unwrap()],
        relators,
    )
}

fn dual_word_one_side(
    d: &RRDiagram,
    side: HexSide,
    cycles: &[super::Cycle],
) -> Result<CyclicWord, Error> {
    let labels = d.hexagon(side).labels;
    let (d0, d2) = direction_slopes(labels[0], labels[2])?;
    let dirs: [(i64, i64); 3] = [(labels[0], d0), (labels[1], d0 + d2), (labels[2], d2)];

    // crossing records: (position along the disk boundary, same-class
    // tiebreak, letter)
    let mut crossings: Vec<(Ratio<i64>, i64, Letter)> = Vec::new();
    for cycle in cycles {
        let Some(gen) = cycle.curve.generator() else { continue };
        for p in &cycle.arrivals {
            if p.hex != side {
                continue;
            }
            let n = d.hexagon(p.hex).slots[p.face].len();
            let (class, copy, dir) = if p.face < 3 {
                (p.face, p.slot as i64, 1i64)
            } else {
                (p.face - 3, (n - 1 - p.slot) as i64, -1i64)
            };
            let (l, slope) = dirs[class];
            if l == 0 {
                continue;
            }
            let sign = dir * l.signum();
            let letter = Letter { gen, inverse: sign < 0 };
            let tiebreak = copy * l.signum();
            for m in 0..l.unsigned_abs() as i64 {
                let step = if l > 0 { m } else { -1 - m };
                // y = (1/2 + step) * slope / l, reduced mod 1
                let y = Ratio::new((2 * step + 1) * slope, 2 * l);
                let y = y - y.floor();
                crossings.push((y, tiebreak, letter));
            }
        }
    }
    crossings.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1)));
    Ok(CyclicWord::from_letters(crossings.into_iter().map(|(_, _, l)| l)))
}

/// Perpendicular slopes (d0, d2) with l0·d2 − l2·d0 = 1, so the three class
/// directions are a Farey triple.
fn direction_slopes(l0: i64, l2: i64) -> Result<(i64, i64), Error> {
    let (g, x, y) = egcd(l0, l2);
    if g != 1 {
        return Err(Error::Invariant {
            name: "label-gcd",
            detail: format!("labels {l0}, {l2} are not coprime"),
        });
    }
    // x·l0 + y·l2 = 1, so (d0, d2) = (−y, x)
    Ok((-y, x))
}

fn egcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        let s = if a < 0 { -1 } else { 1 };
        (a.abs(), s, 0)
    } else {
        let (g, x, y) = egcd(b, a.rem_euclid(b));
        (g, y, x - a.div_euclid(b) * y)
    }
}
