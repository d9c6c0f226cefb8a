//! Finite presentations, the Tietze engine (generator elimination,
//! relabeling, relator inversion), Whitehead minimization of two-generator
//! presentations, and syllable statistics feeding diagram synthesis.
//!
//! Text format: `<A,B | A^8B^7(A^8B^7A^5B^2A^5B^7)^2, A^5B^9(A^5B^9A^5B^2a^3B^2)^2>`.
//! Parenthesized powers are expanded at parse; serialization re-folds a
//! repeated factor only when a byte-identical repetition exists.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use crate::whitehead::WhiteheadMove;
use crate::words::{BasisMap, CyclicWord, Generator, Letter, Word};
use crate::Error;

/// Visited-state cap for the basis-orbit search: turns nontermination risk
/// into a diagnosable failure.
pub const ORBIT_CAP: usize = 100_000;

/// A finite presentation: ordered generators plus cyclically reduced relators.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Presentation {
    generators: Vec<Generator>,
    relators: Vec<CyclicWord>,
}

impl Presentation {
    pub fn new(
        generators: Vec<Generator>,
        relators: Vec<CyclicWord>,
    ) -> Result<Presentation, Error> {
        let declared: BTreeSet<Generator> = generators.iter().copied().collect();
        if declared.len() != generators.len() {
            return Err(Error::Presentation("duplicate generator".into()));
        }
        for r in &relators {
            for g in r.generators() {
                if !declared.contains(&g) {
                    return Err(Error::Presentation(format!(
                        "relator {r} uses undeclared generator {g}"
                    )));
                }
            }
        }
        Ok(Presentation { generators, relators })
    }

    pub fn parse(text: &str) -> Result<Presentation, Error> {
        let inner = text
            .trim()
            .strip_prefix('<')
            .and_then(|s| s.strip_suffix('>'))
            .ok_or_else(|| Error::Parse("presentation must be wrapped in <...>".into()))?;
        let (gens_part, rels_part) = inner
            .split_once('|')
            .ok_or_else(|| Error::Parse("presentation needs a `|` separator".into()))?;
        let mut generators = Vec::new();
        for tok in gens_part.split(',') {
            let tok = tok.trim();
            let mut chars = tok.chars();
            match (chars.next(), chars.next()) {
                (Some(c), None) => generators.push(Generator::new(c)?),
                _ => return Err(Error::Parse(format!("bad generator token {tok:?}"))),
            }
        }
        let mut relators = Vec::new();
        for tok in rels_part.split(',') {
            let tok = tok.trim();
            if !tok.is_empty() {
                relators.push(CyclicWord::parse(tok)?);
            }
        }
        Presentation::new(generators, relators)
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn relators(&self) -> &[CyclicWord] {
        &self.relators
    }

    pub fn total_length(&self) -> usize {
        crate::words::total_length(&self.relators)
    }

    /// Canonical form for comparisons: generators sorted by name, relators
    /// sorted. Relator order carries no meaning in a presentation.
    pub fn canonical(&self) -> Presentation {
        let mut generators = self.generators.clone();
        generators.sort();
        let mut relators = self.relators.clone();
        relators.sort();
        Presentation { generators, relators }
    }

    /// Equality as presentations: same generator set, same relator multiset.
    pub fn canonically_equal(&self, other: &Presentation) -> bool {
        self.canonical() == other.canonical()
    }

    /// The two generators of a rank-two presentation.
    pub fn rank2_alphabet(&self) -> Result<[Generator; 2], Error> {
        match self.generators[..] {
            [s, t] => Ok([s, t]),
            _ => Err(Error::Presentation(format!(
                "expected exactly 2 generators, found {}",
                self.generators.len()
            ))),
        }
    }

    /// Solve one relator for a generator occurring exactly once in it with
    /// exponent ±1, substitute the solution everywhere else, and drop both
    /// the generator and the used relator.
    pub fn eliminate_generator(
        &self,
        relator_index: usize,
        g: Generator,
    ) -> Result<(Presentation, TietzeStep), Error> {
        if !self.generators.contains(&g) {
            return Err(Error::Presentation(format!("generator {g} not in presentation")));
        }
        let r = self
            .relators
            .get(relator_index)
            .ok_or_else(|| Error::Presentation(format!("no relator {relator_index}")))?;
        let occurrences: Vec<usize> = r
            .letters()
            .iter()
            .enumerate()
            .filter_map(|(i, l)| (l.gen == g).then_some(i))
            .collect();
        let [pos] = occurrences[..] else {
            return Err(Error::Presentation(format!(
                "generator {g} occurs {} times in relator {relator_index}, need exactly 1",
                occurrences.len()
            )));
        };
        // rotate the relator so the g-occurrence leads, then solve g w = 1
        let n = r.len();
        let rest: Vec<Letter> = (1..n).map(|k| r.letters()[(pos + k) % n]).collect();
        let rest = Word::from_letters(rest);
        let solution = if r.letters()[pos].inverse { rest } else { rest.inverse() };

        let mut map = BasisMap::identity(self.generators.iter().copied());
        map.insert(g, solution.clone());
        let mut relators = Vec::new();
        for (i, rel) in self.relators.iter().enumerate() {
            if i != relator_index {
                relators.push(map.apply_cyclic(rel)?);
            }
        }
        let generators: Vec<Generator> =
            self.generators.iter().copied().filter(|h| *h != g).collect();
        let out = Presentation::new(generators, relators)?;
        let step = TietzeStep::Eliminate { relator: relator_index, generator: g, solution };
        Ok((out, step))
    }

    /// Bijective relabeling (possibly with inversions). Relator lengths are
    /// preserved; the resulting generator list is sorted by name.
    pub fn rename(&self, map: &BTreeMap<Generator, Letter>) -> Result<Presentation, Error> {
        let mut basis = BasisMap::default();
        let mut targets = BTreeSet::new();
        for g in &self.generators {
            let img = map
                .get(g)
                .ok_or_else(|| Error::Presentation(format!("rename map misses generator {g}")))?;
            if !targets.insert(img.gen) {
                return Err(Error::Presentation(format!(
                    "rename map is not bijective: duplicate target {}",
                    img.gen
                )));
            }
            basis.insert(*g, Word::from_letters([*img]));
        }
        let mut generators: Vec<Generator> = targets.into_iter().collect();
        generators.sort();
        let relators = self
            .relators
            .iter()
            .map(|r| basis.apply_cyclic(r))
            .collect::<Result<Vec<_>, _>>()?;
        Presentation::new(generators, relators)
    }

    pub fn invert_relator(&self, relator_index: usize) -> Result<Presentation, Error> {
        let mut relators = self.relators.clone();
        let r = relators
            .get_mut(relator_index)
            .ok_or_else(|| Error::Presentation(format!("no relator {relator_index}")))?;
        *r = r.inverse();
        Presentation::new(self.generators.clone(), relators)
    }

    /// Apply a Whitehead move to every relator.
    pub fn apply_move(&self, m: &WhiteheadMove) -> Presentation {
        Presentation {
            generators: self.generators.clone(),
            relators: self.relators.iter().map(|r| m.apply(r)).collect(),
        }
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        let rels: Vec<String> = self.relators.iter().map(display_folded).collect();
        write!(f, "<{} | {}>", gens.join(","), rels.join(", "))
    }
}

/// Render a cyclic word, folding one repeated factor when a byte-identical
/// repetition exists: picks the rotation whose suffix u^k repetition saves
/// the most characters, e.g. `A^9e^5(A^2E^3A^2e^5A^9e^5)^2`.
pub fn display_folded(w: &CyclicWord) -> String {
    let letters = w.letters();
    let n = letters.len();
    let plain = w.to_string();
    if n < 4 {
        return plain;
    }
    let mut best: Option<(usize, String)> = None; // (savings, rendered)
    for start in 0..n {
        let rot: Vec<Letter> = (0..n).map(|k| letters[(start + k) % n]).collect();
        for period in 1..=n / 2 {
            for reps in 2..=n / period {
                let tail = reps * period;
                let body = &rot[n - tail..];
                if !body.chunks(period).all(|c| c == &body[..period]) {
                    continue;
                }
                let prefix = fmt_run(&rot[..n - tail]);
                let unit = fmt_run(&body[..period]);
                let rendered = format!("{prefix}({unit})^{reps}");
                if rendered.len() < plain.len() {
                    let savings = plain.len() - rendered.len();
                    if best
                        .as_ref()
                        .is_none_or(|(s, r)| savings > *s || (savings == *s && rendered < *r))
                    {
                        best = Some((savings, rendered));
                    }
                }
            }
        }
    }
    best.map(|(_, r)| r).unwrap_or(plain)
}

fn fmt_run(letters: &[Letter]) -> String {
    Word::from_letters(letters.iter().copied()).to_string()
}

/// One replayable Tietze step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TietzeStep {
    Eliminate { relator: usize, generator: Generator, solution: Word },
    Rename { map: BTreeMap<Generator, Letter> },
    InvertRelator { relator: usize },
}

impl TietzeStep {
    pub fn apply(&self, p: &Presentation) -> Result<Presentation, Error> {
        match self {
            TietzeStep::Eliminate { relator, generator, .. } => {
                Ok(p.eliminate_generator(*relator, *generator)?.0)
            }
            TietzeStep::Rename { map } => p.rename(map),
            TietzeStep::InvertRelator { relator } => p.invert_relator(*relator),
        }
    }
}

/// An ordered list of Tietze steps; replaying it from the initial
/// presentation reproduces the final presentation exactly.
#[derive(Clone, Debug, Default)]
pub struct TietzeTrace(pub Vec<TietzeStep>);

impl TietzeTrace {
    pub fn replay(&self, initial: &Presentation) -> Result<Presentation, Error> {
        let mut p = initial.clone();
        for step in &self.0 {
            p = step.apply(&p)?;
        }
        Ok(p)
    }
}

/// Greedy Whitehead minimization of a two-generator presentation: repeatedly
/// apply whichever of the four moves strictly reduces total relator length.
pub fn whitehead_minimize(p: &Presentation) -> Result<(Presentation, Vec<WhiteheadMove>), Error> {
    let [s, t] = p.rank2_alphabet()?;
    let mut cur = p.clone();
    let mut trace = Vec::new();
    'outer: loop {
        for m in WhiteheadMove::four(s, t) {
            let img = cur.apply_move(&m);
            if img.total_length() < cur.total_length() {
                cur = img;
                trace.push(m);
                continue 'outer;
            }
        }
        return Ok((cur, trace));
    }
}

/// True when no single Whitehead move strictly reduces total relator length.
pub fn is_whitehead_minimal(p: &Presentation) -> Result<bool, Error> {
    let [s, t] = p.rank2_alphabet()?;
    Ok(WhiteheadMove::four(s, t)
        .iter()
        .all(|m| p.apply_move(m).total_length() >= p.total_length()))
}

/// BFS closure of a Whitehead-minimal presentation under length-preserving
/// Whitehead moves plus relabelings/inversions, canonicalized. Reports the
/// explored orbit; it does not assert global uniqueness of the basis.
pub fn minimal_basis_orbit(p: &Presentation) -> Result<BTreeSet<Presentation>, Error> {
    if !is_whitehead_minimal(p)? {
        return Err(Error::Presentation(
            "minimal_basis_orbit requires a Whitehead-minimal presentation".into(),
        ));
    }
    let [s, t] = p.rank2_alphabet()?;
    let len = p.total_length();
    let moves = WhiteheadMove::four(s, t);
    let relabels = signed_relabelings(s, t);

    let mut orbit: BTreeSet<Presentation> = BTreeSet::new();
    let mut queue = VecDeque::new();
    let start = p.canonical();
    orbit.insert(start.clone());
    queue.push_back(start);
    while let Some(cur) = queue.pop_front() {
        if orbit.len() > ORBIT_CAP {
            return Err(Error::SearchCapExceeded { cap: ORBIT_CAP });
        }
        let mut neighbors: Vec<Presentation> =
            moves.iter().map(|m| cur.apply_move(m)).collect();
        for map in &relabels {
            neighbors.push(cur.rename(map)?);
        }
        for n in neighbors {
            if n.total_length() == len {
                let c = n.canonical();
                if orbit.insert(c.clone()) {
                    queue.push_back(c);
                }
            }
        }
    }
    Ok(orbit)
}

/// The eight signed relabelings of an ordered two-letter alphabet.
pub fn signed_relabelings(s: Generator, t: Generator) -> Vec<BTreeMap<Generator, Letter>> {
    let mut out = Vec::new();
    for (x, y) in [(s, t), (t, s)] {
        for sx in [false, true] {
            for sy in [false, true] {
                out.push(BTreeMap::from([
                    (s, Letter { gen: x, inverse: sx }),
                    (t, Letter { gen: y, inverse: sy }),
                ]));
            }
        }
    }
    out
}

/// Per-generator exponent-magnitude histograms and two-syllable class counts
/// over the cyclic relators of a two-generator presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyllableStats {
    /// Ordered alphabet (g1, g2) the pair classes refer to.
    pub alphabet: [Generator; 2],
    /// (generator, |exponent|) -> number of syllables.
    pub exponent_counts: BTreeMap<(Generator, u64), usize>,
    /// Strand classes keyed by hexagon face labels: a two-syllable subword
    /// (g1^m g2^n)^±1 joins the g1-face labeled −m to the g2-face labeled n,
    /// so the key is (−m, n).
    pub pair_classes: BTreeMap<(i64, i64), usize>,
}

impl SyllableStats {
    /// Count of two-syllable subwords (g1^m g2^n)^±1 across the relators.
    pub fn two_syllable_count(&self, m: i64, n: i64) -> usize {
        self.pair_classes.get(&(-m, n)).copied().unwrap_or(0)
    }

    /// Distinct exponent magnitudes of one generator.
    pub fn magnitudes(&self, g: Generator) -> Vec<u64> {
        self.exponent_counts
            .keys()
            .filter(|(h, _)| *h == g)
            .map(|(_, e)| *e)
            .collect()
    }

    /// Total syllables of one generator at one magnitude.
    pub fn count_at(&self, g: Generator, e: u64) -> usize {
        self.exponent_counts.get(&(g, e)).copied().unwrap_or(0)
    }
}

/// Scan the relators of a two-generator presentation into syllable
/// statistics. Every relator must alternate syllables in the two generators;
/// a relator that is a power of one generator has no syllable structure.
pub fn syllable_stats(p: &Presentation) -> Result<SyllableStats, Error> {
    let [g1, g2] = p.rank2_alphabet()?;
    let mut exponent_counts: BTreeMap<(Generator, u64), usize> = BTreeMap::new();
    let mut pair_classes: BTreeMap<(i64, i64), usize> = BTreeMap::new();
    for r in p.relators() {
        let syl = r.syllables();
        if syl.is_empty() {
            return Err(Error::Presentation("empty relator has no syllables".into()));
        }
        if syl.len() == 1 {
            return Err(Error::Presentation(format!(
                "relator {r} is a power of one generator; no syllable structure"
            )));
        }
        for (g, e) in &syl {
            *exponent_counts.entry((*g, e.unsigned_abs())).or_default() += 1;
        }
        for k in 0..syl.len() {
            let (ga, ea) = syl[k];
            let (gb, eb) = syl[(k + 1) % syl.len()];
            let key = if ga == g1 && gb == g2 {
                (-ea, eb)
            } else if ga == g2 && gb == g1 {
                (eb, -ea)
            } else {
                return Err(Error::Presentation(format!(
                    "relator {r} does not alternate between {g1} and {g2}"
                )));
            };
            *pair_classes.entry(key).or_default() += 1;
        }
    }
    Ok(SyllableStats { alphabet: [g1, g2], exponent_counts, pair_classes })
}

/// Order a generator's exponent magnitudes as (e1, e2, e3) with e2 = e1 + e3
/// and e1 ≥ e3 — the face labels of that generator's hexagon. Fails when no
/// such ordering exists (the presentation is not realizable by an R-R diagram
/// whose cutting disks avoid the separating curve).
pub fn exponent_triple(stats: &SyllableStats, g: Generator) -> Result<(u64, u64, u64), Error> {
    let mags = stats.magnitudes(g);
    let not_realizable = |detail: String| {
        Error::Presentation(format!(
            "generator {g}: {detail} — not R-R-realizable with Γ-avoiding cutting disks"
        ))
    };
    match mags[..] {
        [1] => Ok((1, 1, 0)),
        [m] => Err(not_realizable(format!("single exponent magnitude {m}"))),
        [m, n] if n == 2 * m && m == 1 => Ok((1, 2, 1)),
        [m, n] => Err(not_realizable(format!("magnitudes {{{m}, {n}}} admit no unique triple"))),
        [a, b, c] => {
            // magnitudes() returns sorted ascending, so only c = a + b can work
            if a + b == c {
                Ok((b.max(a), c, b.min(a)))
            } else {
                Err(not_realizable(format!(
                    "no ordering of {{{a}, {b}, {c}}} satisfies e2 = e1 + e3"
                )))
            }
        }
        _ => Err(not_realizable(format!("{} exponent magnitudes (max 3)", mags.len()))),
    }
}

/// Exponent triples for both generators.
pub fn exponent_triples(
    stats: &SyllableStats,
) -> Result<BTreeMap<Generator, (u64, u64, u64)>, Error> {
    stats
        .alphabet
        .iter()
        .map(|g| Ok((*g, exponent_triple(stats, *g)?)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn pres(s: &str) -> Presentation {
        Presentation::parse(s).unwrap()
    }

    fn g(c: char) -> Generator {
        Generator::new(c).unwrap()
    }

    /// The four-generator presentation read from the first splitting.
    fn start_presentation() -> Presentation {
        pres("<A,C,D,E | A^5De^3, dA^2cA^2e^2, DC^2DC^3, A^7Dc(A^7DcA^7cA^2c)^2>")
    }

    fn three_generator() -> Presentation {
        pres("<A,C,E | A^7cA^2e^5, a^5E^3C^2a^5E^3C^3, A^2E^3c(A^2E^3cA^7cA^2c)^2>")
    }

    fn two_generator_ae() -> Presentation {
        pres("<A,E | A^9e^5(A^2E^3A^2e^5A^9e^5)^2, E^8a^7(E^8a^7E^5a^2E^5a^7)^2>")
    }

    pub(crate) fn second_splitting() -> Presentation {
        pres("<A,B | A^8B^7(A^8B^7A^5B^2A^5B^7)^2, A^5B^9(A^5B^9A^5B^2a^3B^2)^2>")
    }

    #[test]
    fn eliminate_first_trivial_handle() {
        let (p, _) = start_presentation().eliminate_generator(0, g('D')).unwrap();
        assert!(p.canonically_equal(&three_generator()));
    }

    #[test]
    fn eliminate_second_trivial_handle() {
        let (p, _) = three_generator().eliminate_generator(0, g('C')).unwrap();
        assert!(p.canonically_equal(&two_generator_ae()));
    }

    #[test]
    fn eliminate_simple_relator() {
        let (p, _) = pres("<A,B | AB>").eliminate_generator(0, g('B')).unwrap();
        assert!(p.canonically_equal(&pres("<A | >")));
    }

    #[test]
    fn eliminate_requires_single_occurrence() {
        assert!(start_presentation().eliminate_generator(2, g('D')).is_err());
        assert!(start_presentation().eliminate_generator(0, g('B')).is_err());
    }

    #[test]
    fn invert_and_rename_reach_final_presentation() {
        let p = two_generator_ae().invert_relator(0).unwrap();
        let map =
            BTreeMap::from([(g('E'), Letter::from_char('A').unwrap()), (g('A'), Letter::from_char('b').unwrap())]);
        let p = p.rename(&map).unwrap();
        assert!(p.canonically_equal(&second_splitting()));
    }

    #[test]
    fn rename_rejects_non_bijective() {
        let map = BTreeMap::from([
            (g('A'), Letter::from_char('C').unwrap()),
            (g('B'), Letter::from_char('c').unwrap()),
        ]);
        assert!(pres("<A,B | AB>").rename(&map).is_err());
    }

    #[test]
    fn identity_and_involutive_renames() {
        let p = second_splitting();
        let id = BTreeMap::from([
            (g('A'), Letter::from_char('A').unwrap()),
            (g('B'), Letter::from_char('B').unwrap()),
        ]);
        assert_eq!(p.rename(&id).unwrap(), p);
        let swap = BTreeMap::from([
            (g('A'), Letter::from_char('B').unwrap()),
            (g('B'), Letter::from_char('A').unwrap()),
        ]);
        assert_eq!(p.rename(&swap).unwrap().rename(&swap).unwrap(), p);
    }

    #[test]
    fn trace_replay_reproduces_chain() {
        let start = start_presentation();
        let mut trace = TietzeTrace::default();
        let (p1, s1) = start.eliminate_generator(0, g('D')).unwrap();
        trace.0.push(s1);
        let (p2, s2) = p1.eliminate_generator(0, g('C')).unwrap();
        trace.0.push(s2);
        let p3 = p2.invert_relator(0).unwrap();
        trace.0.push(TietzeStep::InvertRelator { relator: 0 });
        let map = BTreeMap::from([
            (g('E'), Letter::from_char('A').unwrap()),
            (g('A'), Letter::from_char('b').unwrap()),
        ]);
        let p4 = p3.rename(&map).unwrap();
        trace.0.push(TietzeStep::Rename { map });
        assert_eq!(trace.replay(&start).unwrap(), p4);
        assert!(p4.canonically_equal(&second_splitting()));
    }

    #[test]
    fn final_presentation_is_minimal() {
        let p = second_splitting();
        let (q, trace) = whitehead_minimize(&p).unwrap();
        assert!(trace.is_empty());
        assert_eq!(q, p);
        assert_eq!(p.total_length(), 149);
    }

    #[test]
    fn single_letter_relator_is_floor() {
        let p = pres("<A,B | A>");
        let (q, trace) = whitehead_minimize(&p).unwrap();
        assert!(trace.is_empty());
        assert_eq!(q, p);
    }

    #[test]
    fn orbit_of_final_presentation_is_relabelings_only() {
        let p = second_splitting();
        let orbit = minimal_basis_orbit(&p).unwrap();
        let relabel_images: BTreeSet<Presentation> = signed_relabelings(g('A'), g('B'))
            .iter()
            .map(|m| p.rename(m).unwrap().canonical())
            .collect();
        assert!(orbit.iter().all(|q| relabel_images.contains(q)));
        for q in &orbit {
            assert_eq!(q.total_length(), p.total_length());
        }
    }

    #[test]
    fn orbit_of_trivial_presentation() {
        let p = pres("<A,B | A, B>");
        let orbit = minimal_basis_orbit(&p).unwrap();
        for q in &orbit {
            assert_eq!(q.total_length(), 2);
        }
    }

    #[test]
    fn stats_match_relator_scan() {
        let stats = syllable_stats(&second_splitting()).unwrap();
        assert_eq!(stats.count_at(g('A'), 5), 9);
        assert_eq!(stats.count_at(g('A'), 8), 3);
        assert_eq!(stats.count_at(g('A'), 3), 2);
        assert_eq!(stats.count_at(g('B'), 7), 5);
        assert_eq!(stats.count_at(g('B'), 9), 3);
        assert_eq!(stats.count_at(g('B'), 2), 6);
        assert_eq!(stats.two_syllable_count(5, 7), 2);
        assert_eq!(stats.two_syllable_count(5, 9), 3);
        assert_eq!(stats.two_syllable_count(5, 2), 4);
        // histograms sum to the total letter count
        let total: usize = stats
            .exponent_counts
            .iter()
            .map(|((_, e), c)| *e as usize * c)
            .sum();
        assert_eq!(total, 149);
    }

    #[test]
    fn stats_on_single_pair() {
        let stats = syllable_stats(&pres("<A,B | A^2B^3>")).unwrap();
        assert_eq!(stats.count_at(g('A'), 2), 1);
        assert_eq!(stats.count_at(g('B'), 3), 1);
        assert_eq!(stats.two_syllable_count(2, 3), 1);
    }

    #[test]
    fn stats_reject_one_generator_relators() {
        assert!(syllable_stats(&pres("<A,B | A^4>")).is_err());
    }

    #[test]
    fn exponent_triples_of_final_presentation() {
        let stats = syllable_stats(&second_splitting()).unwrap();
        assert_eq!(exponent_triple(&stats, g('A')).unwrap(), (5, 8, 3));
        assert_eq!(exponent_triple(&stats, g('B')).unwrap(), (7, 9, 2));
    }

    #[test]
    fn exponent_triples_reject_bad_magnitudes() {
        // magnitudes {2, 5, 9}: 2+5≠9, 2+9≠5, 5+9≠2
        let stats = syllable_stats(&pres("<A,B | A^2B^2A^5B^2A^9B^2>")).unwrap();
        assert!(exponent_triple(&stats, g('A')).is_err());
        let stats = syllable_stats(&pres("<A,B | A^2B^2>")).unwrap();
        assert!(exponent_triple(&stats, g('A')).is_err());
    }

    #[test]
    fn display_folds_repeats() {
        let p = two_generator_ae();
        let shown = p.to_string();
        assert_eq!(shown.matches(")^2").count(), 2, "got {shown}");
        let round = Presentation::parse(&shown).unwrap();
        assert_eq!(round, p);
    }
}
