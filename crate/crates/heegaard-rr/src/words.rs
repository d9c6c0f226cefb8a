//! Words and cyclic words in finitely generated free groups.
//!
//! Generators are named by single uppercase letters. In the text syntax an
//! uppercase letter is a generator and the corresponding lowercase letter is
//! its inverse, so `A^5De^3` is A·A·A·A·A·D·e·e·e with e = E^-1. Words are
//! kept freely reduced; cyclic words are kept cyclically reduced and stored
//! in their lexicographically least rotation (letter order A < a < B < b < …)
//! so equality is plain sequence equality.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::Error;

/// A free-group generator, named by an uppercase ASCII letter.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator(char);

impl Generator {
    pub fn new(name: char) -> Result<Self, Error> {
        if name.is_ascii_uppercase() {
            Ok(Generator(name))
        } else {
            Err(Error::Parse(format!(
                "generator name must be an uppercase ASCII letter, got {name:?}"
            )))
        }
    }

    pub fn name(&self) -> char {
        self.0
    }

    /// Positive letter for this generator.
    pub fn letter(&self) -> Letter {
        Letter { gen: *self, inverse: false }
    }
}

impl fmt::Debug for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A single signed letter: a generator or its inverse.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub gen: Generator,
    /// true = the inverse of the generator (lowercase in the text syntax).
    pub inverse: bool,
}

impl Letter {
    pub fn from_char(c: char) -> Result<Self, Error> {
        if c.is_ascii_uppercase() {
            Ok(Letter { gen: Generator(c), inverse: false })
        } else if c.is_ascii_lowercase() {
            Ok(Letter { gen: Generator(c.to_ascii_uppercase()), inverse: true })
        } else {
            Err(Error::Parse(format!("not a letter: {c:?}")))
        }
    }

    pub fn to_char(&self) -> char {
        if self.inverse {
            self.gen.0.to_ascii_lowercase()
        } else {
            self.gen.0
        }
    }

    pub fn inverted(&self) -> Letter {
        Letter { gen: self.gen, inverse: !self.inverse }
    }

    pub fn sign(&self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    fn cancels(&self, other: &Letter) -> bool {
        self.gen == other.gen && self.inverse != other.inverse
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

/// Freely reduce a raw letter sequence.
pub fn free_reduce(letters: impl IntoIterator<Item = Letter>) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::new();
    for l in letters {
        if out.last().is_some_and(|last| last.cancels(&l)) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

/// A freely reduced word.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    /// Build a word from raw letters, freely reducing.
    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Word {
        Word(free_reduce(letters))
    }

    pub fn parse(text: &str) -> Result<Word, Error> {
        Ok(Word::from_letters(parse_letters(text)?))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(Letter::inverted).collect())
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word::from_letters(self.0.iter().chain(other.0.iter()).copied())
    }

    pub fn pow(&self, n: i64) -> Word {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut out = Vec::new();
        for _ in 0..n.unsigned_abs() {
            out.extend_from_slice(&base.0);
        }
        Word::from_letters(out)
    }

    pub fn generators(&self) -> BTreeSet<Generator> {
        self.0.iter().map(|l| l.gen).collect()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_letters(&self.0))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A cyclically reduced cyclic word in canonical rotation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct CyclicWord(Vec<Letter>);

impl CyclicWord {
    pub fn empty() -> CyclicWord {
        CyclicWord(Vec::new())
    }

    /// Cyclically reduce a word: trim cancelling ends, then pick the
    /// lexicographically least rotation.
    pub fn from_word(w: &Word) -> CyclicWord {
        let mut letters = w.letters().to_vec();
        loop {
            let n = letters.len();
            if n >= 2 && letters[0].cancels(&letters[n - 1]) {
                letters.pop();
                letters.remove(0);
            } else {
                break;
            }
        }
        CyclicWord(canonical_rotation(&letters))
    }

    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> CyclicWord {
        CyclicWord::from_word(&Word::from_letters(letters))
    }

    pub fn parse(text: &str) -> Result<CyclicWord, Error> {
        Ok(CyclicWord::from_word(&Word::parse(text)?))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> CyclicWord {
        CyclicWord::from_letters(self.0.iter().rev().map(Letter::inverted))
    }

    /// Canonical representative of the unoriented curve class: the smaller of
    /// the word and its inverse.
    pub fn unoriented(&self) -> CyclicWord {
        self.clone().min(self.inverse())
    }

    pub fn as_word(&self) -> Word {
        Word::from_letters(self.0.iter().copied())
    }

    pub fn generators(&self) -> BTreeSet<Generator> {
        self.0.iter().map(|l| l.gen).collect()
    }

    /// Cyclic syllable decomposition: maximal runs of one generator, as
    /// (generator, signed exponent), starting at a run boundary. A word in a
    /// single generator yields one syllable.
    pub fn syllables(&self) -> Vec<(Generator, i64)> {
        if self.0.is_empty() {
            return Vec::new();
        }
        let n = self.0.len();
        // rotate to a generator-change boundary if one exists
        let start = (0..n)
            .find(|&i| self.0[(i + n - 1) % n].gen != self.0[i].gen)
            .unwrap_or(0);
        let mut out: Vec<(Generator, i64)> = Vec::new();
        for k in 0..n {
            let l = self.0[(start + k) % n];
            match out.last_mut() {
                Some((g, e)) if *g == l.gen => *e += l.sign(),
                _ => out.push((l.gen, l.sign())),
            }
        }
        out
    }
}

impl fmt::Display for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_letters(&self.0))
    }
}

impl fmt::Debug for CyclicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn canonical_rotation(letters: &[Letter]) -> Vec<Letter> {
    let n = letters.len();
    if n <= 1 {
        return letters.to_vec();
    }
    let rot = |i: usize| (0..n).map(move |k| letters[(i + k) % n]);
    let mut best = 0;
    for i in 1..n {
        if rot(i).lt(rot(best)) {
            best = i;
        }
    }
    rot(best).collect()
}

/// Sum of letter counts over a set of cyclic words (the complexity count).
pub fn total_length<'a>(words: impl IntoIterator<Item = &'a CyclicWord>) -> usize {
    words.into_iter().map(CyclicWord::len).sum()
}

/// A substitution endomorphism given by per-generator image words.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct BasisMap(BTreeMap<Generator, Word>);

impl BasisMap {
    pub fn new(images: impl IntoIterator<Item = (Generator, Word)>) -> BasisMap {
        BasisMap(images.into_iter().collect())
    }

    pub fn identity(gens: impl IntoIterator<Item = Generator>) -> BasisMap {
        BasisMap(gens.into_iter().map(|g| (g, Word::from_letters([g.letter()]))).collect())
    }

    pub fn insert(&mut self, g: Generator, image: Word) {
        self.0.insert(g, image);
    }

    pub fn image(&self, g: Generator) -> Option<&Word> {
        self.0.get(&g)
    }

    pub fn images(&self) -> impl Iterator<Item = (&Generator, &Word)> {
        self.0.iter()
    }

    /// Image of a word under the substitution, freely reduced.
    pub fn apply(&self, w: &Word) -> Result<Word, Error> {
        let mut out: Vec<Letter> = Vec::new();
        for l in w.letters() {
            let img = self
                .0
                .get(&l.gen)
                .ok_or_else(|| Error::UnmappedGenerator(l.gen.name()))?;
            if l.inverse {
                out.extend(img.letters().iter().rev().map(Letter::inverted));
            } else {
                out.extend_from_slice(img.letters());
            }
        }
        Ok(Word::from_letters(out))
    }

    /// Image of a cyclic word, cyclically reduced.
    pub fn apply_cyclic(&self, w: &CyclicWord) -> Result<CyclicWord, Error> {
        Ok(CyclicWord::from_word(&self.apply(&w.as_word())?))
    }

    /// True when every image is a single letter and the images hit distinct
    /// generators (a relabeling, possibly with inversions).
    pub fn is_letter_relabeling(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.0.values().all(|w| w.len() == 1 && seen.insert(w.letters()[0].gen))
    }
}

fn format_letters(letters: &[Letter]) -> String {
    let mut out = String::new();
    let mut i = 0;
    while i < letters.len() {
        let l = letters[i];
        let mut run = 1;
        while i + run < letters.len() && letters[i + run] == l {
            run += 1;
        }
        out.push(l.to_char());
        if run > 1 {
            out.push('^');
            out.push_str(&run.to_string());
        }
        i += run;
    }
    out
}

/// Parse the word syntax: letters with optional `^n` powers and parenthesized
/// groups, e.g. `A^8B^7(A^8B^7A^5B^2A^5B^7)^2`.
pub fn parse_letters(text: &str) -> Result<Vec<Letter>, Error> {
    let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    let (letters, rest) = parse_seq(&chars, 0)?;
    if rest != chars.len() {
        return Err(Error::Parse(format!(
            "unexpected character {:?} at position {rest} in word {text:?}",
            chars[rest]
        )));
    }
    Ok(letters)
}

fn parse_seq(chars: &[char], mut i: usize) -> Result<(Vec<Letter>, usize), Error> {
    let mut out = Vec::new();
    while i < chars.len() {
        match chars[i] {
            ')' => break,
            '(' => {
                let (inner, j) = parse_seq(chars, i + 1)?;
                if j >= chars.len() || chars[j] != ')' {
                    return Err(Error::Parse("unclosed parenthesis in word".into()));
                }
                let (pow, k) = parse_power(chars, j + 1)?;
                repeat_into(&mut out, &inner, pow);
                i = k;
            }
            c => {
                let l = Letter::from_char(c)?;
                let (pow, k) = parse_power(chars, i + 1)?;
                repeat_into(&mut out, &[l], pow);
                i = k;
            }
        }
    }
    Ok((out, i))
}

fn parse_power(chars: &[char], i: usize) -> Result<(u32, usize), Error> {
    if i >= chars.len() || chars[i] != '^' {
        return Ok((1, i));
    }
    let mut j = i + 1;
    let start = j;
    while j < chars.len() && chars[j].is_ascii_digit() {
        j += 1;
    }
    if j == start {
        return Err(Error::Parse("`^` must be followed by a number".into()));
    }
    let n: u32 = chars[start..j]
        .iter()
        .collect::<String>()
        .parse()
        .map_err(|_| Error::Parse("exponent out of range".into()))?;
    Ok((n, j))
}

fn repeat_into(out: &mut Vec<Letter>, block: &[Letter], pow: u32) {
    for _ in 0..pow {
        out.extend_from_slice(block);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    fn cw(s: &str) -> CyclicWord {
        CyclicWord::parse(s).unwrap()
    }

    #[test]
    fn free_reduction_cancels() {
        assert_eq!(w("AaB"), w("B"));
        assert_eq!(w("ABba"), Word::empty());
        assert_eq!(w("A^5De^3").to_string(), "A^5De^3");
    }

    #[test]
    fn cyclic_reduction_wraps() {
        assert_eq!(cw("bAB"), cw("A"));
        // wrap-around merge of syllables
        assert_eq!(cw("Y^5x^3Y^2"), cw("Y^7x^3"));
    }

    #[test]
    fn canonical_rotation_is_least() {
        // a < B in the fixed letter order, so the canonical rotation of the
        // second relator starts with the A^5B^2a^3 block
        let r = cw("A^5B^9(A^5B^9A^5B^2a^3B^2)^2");
        assert!(r.to_string().starts_with("A^5B^2a^3"));
        assert_eq!(r, cw("A^5B^2a^3B^2A^5B^9A^5B^9A^5B^2a^3B^2A^5B^9"));
    }

    #[test]
    fn inverse_reverses_and_flips() {
        assert_eq!(w("A^5De^3").inverse().to_string(), "E^3da^5");
        assert_eq!(Word::empty().inverse(), Word::empty());
        let u = cw("A^2Ba");
        assert_eq!(u.inverse().inverse(), u);
    }

    #[test]
    fn substitution_matches_hand_expansion() {
        // D -> a^5E^3 sends DC^2DC^3 to a^5E^3C^2a^5E^3C^3
        let mut m = BasisMap::identity(['C', 'D'].map(|c| Generator::new(c).unwrap()));
        m.insert(Generator::new('D').unwrap(), w("a^5E^3"));
        assert_eq!(m.apply_cyclic(&cw("DC^2DC^3")).unwrap(), cw("a^5E^3C^2a^5E^3C^3"));

        // same substitution plus cyclic reduction: dA^2cA^2e^2 -> A^7cA^2e^5
        let mut m2 = BasisMap::identity(
            ['A', 'C', 'D', 'E'].map(|c| Generator::new(c).unwrap()),
        );
        m2.insert(Generator::new('D').unwrap(), w("a^5E^3"));
        assert_eq!(m2.apply_cyclic(&cw("dA^2cA^2e^2")).unwrap(), cw("A^7cA^2e^5"));
    }

    #[test]
    fn substitution_requires_mapped_generators() {
        let m = BasisMap::identity([Generator::new('A').unwrap()]);
        assert!(matches!(m.apply(&w("AB")), Err(Error::UnmappedGenerator('B'))));
    }

    #[test]
    fn total_length_counts_letters() {
        assert_eq!(total_length(&[cw("A^5B^5")]), 10);
        assert_eq!(total_length(&[]), 0);
    }

    #[test]
    fn syllables_decompose_cyclically() {
        let s = cw("A^2b^3A").syllables();
        // canonical rotation groups the A-run across the wrap
        assert_eq!(s.len(), 2);
        let total: i64 = s.iter().map(|(_, e)| e.abs()).sum();
        assert_eq!(total, 6);
        assert_eq!(cw("B^7").syllables().len(), 1);
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(Word::parse("A^").is_err());
        assert!(Word::parse("(AB").is_err());
        assert!(Word::parse("A2").is_err());
    }
}

#[cfg(test)]
mod prop_tests {
    use proptest::prelude::*;

    use super::*;

    fn letters(max_len: usize) -> impl Strategy<Value = Vec<Letter>> {
        proptest::collection::vec(
            (0u8..4, any::<bool>()).prop_map(|(g, inv)| Letter {
                gen: Generator::new((b'A' + g) as char).unwrap(),
                inverse: inv,
            }),
            0..max_len,
        )
    }

    proptest! {
        #[test]
        fn free_reduce_idempotent(raw in letters(40)) {
            let once = free_reduce(raw.clone());
            prop_assert!(once.len() <= raw.len());
            prop_assert_eq!(free_reduce(once.clone()), once);
        }

        #[test]
        fn cyclic_words_are_conjugation_invariant(raw in letters(30), conj in letters(10)) {
            let w = Word::from_letters(raw);
            let u = Word::from_letters(conj);
            let direct = CyclicWord::from_word(&w);
            let conjugated = CyclicWord::from_word(&u.concat(&w).concat(&u.inverse()));
            prop_assert_eq!(direct, conjugated);
        }

        #[test]
        fn parse_display_round_trip(raw in letters(30)) {
            let w = Word::from_letters(raw);
            prop_assert_eq!(Word::parse(&w.to_string()).unwrap(), w);
        }

        #[test]
        fn inverse_is_an_involution(raw in letters(30)) {
            let w = CyclicWord::from_letters(raw);
            prop_assert_eq!(w.inverse().inverse(), w);
        }
    }
}
