//! Whitehead automorphisms of a rank-two free group and length minimization
//! of cyclic words.
//!
//! The four elementary moves are (S,T) ↦ (ST^±1, T) and (S,T) ↦ (S, TS^±1).
//! If a cyclic word is not of minimal length in its automorphism orbit, one
//! of the four moves strictly shortens it, so greedy descent reaches a
//! minimal form; plateau exploration is only needed for orbit queries.

use crate::words::{BasisMap, CyclicWord, Generator, Word};

/// One of the four elementary Whitehead automorphisms of F(S,T), written as
/// `target ↦ target · other^sign`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct WhiteheadMove {
    pub target: Generator,
    pub other: Generator,
    /// true: multiply by the inverse of `other`.
    pub invert_other: bool,
}

impl WhiteheadMove {
    /// The four moves on the ordered alphabet (s, t).
    pub fn four(s: Generator, t: Generator) -> [WhiteheadMove; 4] {
        [
            WhiteheadMove { target: s, other: t, invert_other: false },
            WhiteheadMove { target: s, other: t, invert_other: true },
            WhiteheadMove { target: t, other: s, invert_other: false },
            WhiteheadMove { target: t, other: s, invert_other: true },
        ]
    }

    pub fn inverse(&self) -> WhiteheadMove {
        WhiteheadMove { invert_other: !self.invert_other, ..*self }
    }

    /// The move as a substitution on `{target, other}`.
    pub fn basis_map(&self) -> BasisMap {
        let mut tail = self.other.letter();
        if self.invert_other {
            tail = tail.inverted();
        }
        BasisMap::new([
            (self.target, Word::from_letters([self.target.letter(), tail])),
            (self.other, Word::from_letters([self.other.letter()])),
        ])
    }

    /// Apply to a cyclic word and cyclically reduce. Generators outside the
    /// move's alphabet are left fixed.
    pub fn apply(&self, w: &CyclicWord) -> CyclicWord {
        let mut map = BasisMap::identity(w.generators());
        let mm = self.basis_map();
        for (g, img) in mm.images() {
            map.insert(*g, img.clone());
        }
        map.apply_cyclic(w).expect("identity-extended map covers all generators")
    }
}

impl std::fmt::Display for WhiteheadMove {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut tail = self.other.letter();
        if self.invert_other {
            tail = tail.inverted();
        }
        write!(f, "{} -> {}{}", self.target, self.target.letter().to_char(), tail.to_char())
    }
}

/// Result of greedy Whitehead minimization.
#[derive(Clone, Debug)]
pub struct Minimized {
    pub word: CyclicWord,
    pub trace: Vec<WhiteheadMove>,
}

/// Greedy strict descent under the four moves. The result admits no strictly
/// shortening move, hence has minimal length in the automorphism orbit.
pub fn minimize_cyclic(w: &CyclicWord, alphabet: [Generator; 2]) -> Minimized {
    let mut cur = w.clone();
    let mut trace = Vec::new();
    'outer: loop {
        for m in WhiteheadMove::four(alphabet[0], alphabet[1]) {
            let img = m.apply(&cur);
            if img.len() < cur.len() {
                cur = img;
                trace.push(m);
                continue 'outer;
            }
        }
        return Minimized { word: cur, trace };
    }
}

/// Primitivity test: `Some(trace)` iff some sequence of Whitehead moves
/// reduces the word to a single letter, i.e. the word is conjugate to a free
/// generator.
pub fn is_primitive(w: &CyclicWord, alphabet: [Generator; 2]) -> Option<Vec<WhiteheadMove>> {
    let m = minimize_cyclic(w, alphabet);
    (m.word.len() == 1).then_some(m.trace)
}

/// Proper-power test: `Some((g, n))` iff Whitehead minimization terminates at
/// g^±n with n ≥ 2. Minimization runs first because being a proper power is
/// an automorphism-class property; raw periodicity is not enough.
pub fn proper_power_root(w: &CyclicWord, alphabet: [Generator; 2]) -> Option<(Generator, u32)> {
    let m = minimize_cyclic(w, alphabet);
    let letters = m.word.letters();
    if letters.len() < 2 {
        return None;
    }
    let first = letters[0];
    letters.iter().all(|l| *l == first).then_some((first.gen, letters.len() as u32))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::CyclicWord;

    fn g(c: char) -> Generator {
        Generator::new(c).unwrap()
    }

    fn ab() -> [Generator; 2] {
        [g('A'), g('B')]
    }

    fn cw(s: &str) -> CyclicWord {
        CyclicWord::parse(s).unwrap()
    }

    #[test]
    fn moves_expand_as_substitutions() {
        // (A,B) -> (Ab,B) sends ABAB to AbB·AbB = A^2 cyclically
        let m = WhiteheadMove { target: g('A'), other: g('B'), invert_other: true };
        assert_eq!(m.apply(&cw("ABAB")), cw("A^2"));
        assert_eq!(m.apply(&cw("AB^2")), cw("AB"));
        // a move in A fixes the word B
        for m in WhiteheadMove::four(g('A'), g('B')) {
            if m.target == g('A') {
                assert_eq!(m.apply(&cw("B")), cw("B"));
            }
        }
    }

    #[test]
    fn moves_are_invertible() {
        let w = cw("A^2BaB^3");
        for m in WhiteheadMove::four(g('A'), g('B')) {
            assert_eq!(m.inverse().apply(&m.apply(&w)), w);
        }
    }

    #[test]
    fn primitivity_examples() {
        assert!(is_primitive(&cw("A"), ab()).is_some());
        let trace = is_primitive(&cw("AB^2"), ab()).unwrap();
        assert_eq!(trace.len(), 2);
        // commutator-style word is not primitive: length never drops below 4
        assert!(is_primitive(&cw("ABab"), ab()).is_none());
        assert_eq!(minimize_cyclic(&cw("ABab"), ab()).word.len(), 4);
    }

    #[test]
    fn proper_power_examples() {
        assert_eq!(proper_power_root(&cw("B^7"), ab()), Some((g('B'), 7)));
        // ABAB minimizes to a square
        let (_, n) = proper_power_root(&cw("ABAB"), ab()).unwrap();
        assert_eq!(n, 2);
        assert_eq!(proper_power_root(&cw("AB"), ab()), None);
        assert_eq!(proper_power_root(&cw("A"), ab()), None);
    }

    #[test]
    fn primitive_and_proper_power_exclusive() {
        for s in ["A", "AB^2", "B^7", "ABAB", "ABab", "A^2B^3"] {
            let w = cw(s);
            let prim = is_primitive(&w, ab()).is_some();
            let pp = proper_power_root(&w, ab()).is_some();
            assert!(!(prim && pp), "{s} flagged both primitive and proper power");
        }
    }
}
