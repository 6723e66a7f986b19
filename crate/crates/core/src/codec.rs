//! Gauss codes and chord diagrams: parsing, canonical forms, dihedral
//! symmetry, and enumeration of equivalence classes.
//!
//! A Gauss code is a double occurrence word; placing its letters around a
//! circle and joining equal letters by chords gives the chord diagram.
//! Two diagrams are considered equivalent under rotation, reflection and
//! relabeling, which is the identification used when counting classes.

use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CodecError {
    #[error("empty input")]
    EmptyInput,
    #[error("odd number of symbols ({0})")]
    OddLength(usize),
    #[error("token `{token}` occurs {count} times, expected exactly 2")]
    NotDoubleOccurrence { token: String, count: usize },
    #[error("invalid character `{0}` in contiguous code")]
    InvalidCharacter(char),
    #[error("positions do not form a perfect matching")]
    NotAMatching,
}

/// A double occurrence word over symbols `0..n`, each occurring exactly twice.
///
/// [`GaussCode::parse`] always returns the canonical relabeling (first
/// occurrences appear in increasing order); operations such as the Dehn
/// reversal pass produce valid but possibly non-canonical words on the same
/// symbol set.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "CodeRepr", into = "CodeRepr")]
pub struct GaussCode {
    symbols: Vec<u16>,
}

#[derive(Serialize, Deserialize)]
struct CodeRepr {
    n: usize,
    code: Vec<u16>,
}

impl From<GaussCode> for CodeRepr {
    fn from(c: GaussCode) -> CodeRepr {
        CodeRepr {
            n: c.chord_count(),
            code: c.symbols,
        }
    }
}

impl TryFrom<CodeRepr> for GaussCode {
    type Error = CodecError;
    fn try_from(r: CodeRepr) -> Result<GaussCode, CodecError> {
        let c = GaussCode::new(r.code)?;
        if c.chord_count() != r.n {
            return Err(CodecError::NotDoubleOccurrence {
                token: format!("n={}", r.n),
                count: c.chord_count(),
            });
        }
        Ok(c)
    }
}

impl GaussCode {
    /// The empty code: zero chords, the simple closed curve.
    pub fn empty() -> Self {
        GaussCode { symbols: Vec::new() }
    }

    /// Validates a raw symbol sequence: even length, every symbol in `0..n`
    /// exactly twice. Does not relabel.
    pub fn new(symbols: Vec<u16>) -> Result<Self, CodecError> {
        if !symbols.len().is_multiple_of(2) {
            return Err(CodecError::OddLength(symbols.len()));
        }
        let n = symbols.len() / 2;
        let mut counts = vec![0usize; n];
        for &s in &symbols {
            if (s as usize) >= n {
                return Err(CodecError::NotDoubleOccurrence {
                    token: s.to_string(),
                    count: 0,
                });
            }
            counts[s as usize] += 1;
        }
        for (s, &c) in counts.iter().enumerate() {
            if c != 2 {
                return Err(CodecError::NotDoubleOccurrence {
                    token: s.to_string(),
                    count: c,
                });
            }
        }
        Ok(GaussCode { symbols })
    }

    pub(crate) fn from_canonical_unchecked(symbols: Vec<u16>) -> Self {
        debug_assert!(GaussCode::new(symbols.clone()).map(|c| c.is_canonical()) == Ok(true));
        GaussCode { symbols }
    }

    /// Parses whitespace- or comma-separated tokens, or a contiguous string
    /// of single-character alphanumeric symbols. Token names are discarded:
    /// the result is relabeled so first occurrences read `0, 1, 2, ...`.
    pub fn parse(text: &str) -> Result<Self, CodecError> {
        let text = text.trim();
        if text.is_empty() {
            return Err(CodecError::EmptyInput);
        }
        let is_sep = |c: char| c.is_whitespace() || c == ',';
        let tokens: Vec<&str> = if text.contains(is_sep) {
            text.split(is_sep).filter(|t| !t.is_empty()).collect()
        } else {
            if let Some(bad) = text.chars().find(|c| !c.is_alphanumeric()) {
                return Err(CodecError::InvalidCharacter(bad));
            }
            text.char_indices()
                .map(|(i, c)| &text[i..i + c.len_utf8()])
                .collect()
        };
        if tokens.is_empty() {
            return Err(CodecError::EmptyInput);
        }

        let mut ids: HashMap<&str, u16> = HashMap::new();
        let mut first_seen: Vec<&str> = Vec::new();
        let mut counts: Vec<usize> = Vec::new();
        let mut symbols = Vec::with_capacity(tokens.len());
        for tok in &tokens {
            let id = *ids.entry(tok).or_insert_with(|| {
                first_seen.push(tok);
                counts.push(0);
                (first_seen.len() - 1) as u16
            });
            counts[id as usize] += 1;
            symbols.push(id);
        }
        for (id, &c) in counts.iter().enumerate() {
            if c != 2 {
                return Err(CodecError::NotDoubleOccurrence {
                    token: first_seen[id].to_string(),
                    count: c,
                });
            }
        }
        Ok(GaussCode { symbols })
    }

    pub fn chord_count(&self) -> usize {
        self.symbols.len() / 2
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[u16] {
        &self.symbols
    }

    /// True when first occurrences appear in increasing order `0, 1, 2, ...`.
    pub fn is_canonical(&self) -> bool {
        let mut next = 0u16;
        let mut seen = vec![false; self.chord_count()];
        for &s in &self.symbols {
            if !seen[s as usize] {
                if s != next {
                    return false;
                }
                seen[s as usize] = true;
                next += 1;
            }
        }
        true
    }

    /// Relabels symbols so first occurrences read `0, 1, 2, ...`.
    pub fn canonicalized(&self) -> GaussCode {
        let n = self.chord_count();
        let mut map = vec![u16::MAX; n];
        let mut next = 0u16;
        let symbols = self
            .symbols
            .iter()
            .map(|&s| {
                if map[s as usize] == u16::MAX {
                    map[s as usize] = next;
                    next += 1;
                }
                map[s as usize]
            })
            .collect();
        GaussCode { symbols }
    }

    /// The two positions of `symbol`, in increasing order.
    pub fn positions_of(&self, symbol: u16) -> (usize, usize) {
        let mut first = None;
        for (p, &s) in self.symbols.iter().enumerate() {
            if s == symbol {
                match first {
                    None => first = Some(p),
                    Some(f) => return (f, p),
                }
            }
        }
        panic!("symbol {symbol} does not occur twice");
    }

    pub fn to_diagram(&self) -> ChordDiagram {
        let n = self.chord_count();
        let mut endpoints = vec![(u16::MAX, u16::MAX); n];
        for (p, &s) in self.symbols.iter().enumerate() {
            let e = &mut endpoints[s as usize];
            if e.0 == u16::MAX {
                e.0 = p as u16;
            } else {
                e.1 = p as u16;
            }
        }
        ChordDiagram { endpoints }
    }
}

impl fmt::Display for GaussCode {
    /// Symbols are printed 1-based; compact for at most nine chords,
    /// space-separated beyond that.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.chord_count() <= 9 {
            for &s in &self.symbols {
                write!(f, "{}", s + 1)?;
            }
        } else {
            for (i, &s) in self.symbols.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", s + 1)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for GaussCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GaussCode({self})")
    }
}

/// `n` chords as endpoint pairs `(p, q)` with `p < q` on positions `0..2n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ChordDiagram {
    endpoints: Vec<(u16, u16)>,
}

impl ChordDiagram {
    /// Builds a diagram from endpoint pairs, which must perfectly match the
    /// positions `0..2n`.
    pub fn new(endpoints: Vec<(u16, u16)>) -> Result<Self, CodecError> {
        let len = endpoints.len() * 2;
        let mut used = vec![false; len];
        for &(p, q) in &endpoints {
            for x in [p, q] {
                let x = x as usize;
                if x >= len || used[x] {
                    return Err(CodecError::NotAMatching);
                }
                used[x] = true;
            }
            if p == q {
                return Err(CodecError::NotAMatching);
            }
        }
        let endpoints = endpoints
            .into_iter()
            .map(|(p, q)| (p.min(q), p.max(q)))
            .collect();
        Ok(ChordDiagram { endpoints })
    }

    pub fn chord_count(&self) -> usize {
        self.endpoints.len()
    }

    pub fn positions(&self) -> usize {
        self.endpoints.len() * 2
    }

    pub fn endpoints(&self) -> &[(u16, u16)] {
        &self.endpoints
    }

    pub fn chord(&self, c: usize) -> (u16, u16) {
        self.endpoints[c]
    }

    /// The canonical code reading chord labels off the circle in
    /// first-occurrence order.
    pub fn to_code(&self) -> GaussCode {
        let partner = self.partner_array();
        let mut word = Vec::new();
        word_of_partner(&partner, &mut word);
        GaussCode::from_canonical_unchecked(word)
    }

    /// `partner[p]` is the position joined to `p` by a chord.
    pub fn partner_array(&self) -> Vec<u16> {
        let mut partner = vec![FREE; self.positions()];
        for &(p, q) in &self.endpoints {
            partner[p as usize] = q;
            partner[q as usize] = p;
        }
        partner
    }

    /// Applies the dihedral element: reflect (position `p -> 2n-1-p`) first
    /// when requested, then rotate by `rot`. Chord identities are kept.
    pub fn apply_symmetry(&self, rot: usize, reflect: bool) -> ChordDiagram {
        let len = self.positions();
        assert!(rot < len.max(1), "rotation out of range");
        let map = |x: u16| -> u16 {
            let x = if reflect { len - 1 - x as usize } else { x as usize };
            ((x + rot) % len) as u16
        };
        let endpoints = self
            .endpoints
            .iter()
            .map(|&(p, q)| {
                let (a, b) = (map(p), map(q));
                (a.min(b), a.max(b))
            })
            .collect();
        ChordDiagram { endpoints }
    }

    /// Lexicographically minimal canonical code over all `4n` dihedral
    /// images; equal keys exactly characterize equivalent diagrams.
    pub fn canonical_key(&self) -> EquivClassKey {
        if self.chord_count() == 0 {
            return EquivClassKey(GaussCode::empty());
        }
        let partner = self.partner_array();
        let len = partner.len();
        let mut best = Vec::new();
        word_of_partner(&partner, &mut best);
        let mut scratch = Vec::with_capacity(len);
        for reflect in [false, true] {
            for rot in 0..len {
                if !reflect && rot == 0 {
                    continue;
                }
                if cmp_image_word(&partner, rot, reflect, &best, &mut scratch, false)
                    == Ordering::Less
                {
                    std::mem::swap(&mut best, &mut scratch);
                }
            }
        }
        EquivClassKey(GaussCode::from_canonical_unchecked(best))
    }
}

/// Key identifying a diagram's equivalence class under rotation, reflection
/// and relabeling.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct EquivClassKey(GaussCode);

impl EquivClassKey {
    pub fn code(&self) -> &GaussCode {
        &self.0
    }

    pub fn into_code(self) -> GaussCode {
        self.0
    }
}

impl fmt::Display for EquivClassKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

const FREE: u16 = u16::MAX;

/// Canonical word of a complete partner array (ids by first occurrence).
fn word_of_partner(partner: &[u16], out: &mut Vec<u16>) {
    out.clear();
    out.resize(partner.len(), 0);
    let mut next = 0u16;
    for p in 0..partner.len() {
        let q = partner[p] as usize;
        if q > p {
            out[p] = next;
            out[q] = next;
            next += 1;
        }
    }
}

/// Position map of the dihedral element (reflect, then rotate) applied to a
/// matching, evaluated pointwise: the partner of `p` in the image.
fn image_partner(partner: &[u16], rot: usize, reflect: bool, p: usize) -> usize {
    let len = partner.len();
    let src = if reflect {
        len - 1 - (p + len - rot) % len
    } else {
        (p + len - rot) % len
    };
    let q = partner[src] as usize;
    if reflect {
        (len - 1 - q + rot) % len
    } else {
        (q + rot) % len
    }
}

/// Compares the canonical word of the image against `best`, building it into
/// `scratch`. Aborts early on `Greater`; with `stop_at_less` also on `Less`
/// (then `scratch` is left incomplete).
fn cmp_image_word(
    partner: &[u16],
    rot: usize,
    reflect: bool,
    best: &[u16],
    scratch: &mut Vec<u16>,
    stop_at_less: bool,
) -> Ordering {
    let len = partner.len();
    scratch.clear();
    scratch.resize(len, 0);
    let mut next = 0u16;
    let mut state = Ordering::Equal;
    for p in 0..len {
        let q = image_partner(partner, rot, reflect, p);
        let sym = if q < p {
            scratch[q]
        } else {
            let s = next;
            next += 1;
            s
        };
        scratch[p] = sym;
        if state == Ordering::Equal {
            match sym.cmp(&best[p]) {
                Ordering::Greater => return Ordering::Greater,
                Ordering::Less => {
                    if stop_at_less {
                        return Ordering::Less;
                    }
                    state = Ordering::Less;
                }
                Ordering::Equal => {}
            }
        }
    }
    state
}

/// True when `word` (the canonical word of `partner`) is minimal over the
/// whole dihedral orbit, i.e. the matching is its own class representative.
fn is_min_word(partner: &[u16], word: &[u16], scratch: &mut Vec<u16>) -> bool {
    let len = partner.len();
    for reflect in [false, true] {
        for rot in 0..len {
            if !reflect && rot == 0 {
                continue;
            }
            if cmp_image_word(partner, rot, reflect, word, scratch, true) == Ordering::Less {
                return false;
            }
        }
    }
    true
}

/// A partial matching fixing the first few chords of the generation order;
/// the independent unit of work for parallel enumeration.
#[derive(Clone, Debug)]
pub struct MatchingPrefix {
    pairs: Vec<(u16, u16)>,
}

impl MatchingPrefix {
    pub fn root() -> Self {
        MatchingPrefix { pairs: Vec::new() }
    }
}

/// Enumerates one representative per equivalence class of diagrams with `n`
/// chords, by generating canonical words and keeping those equal to their
/// own class key.
///
/// `odd_gaps_only` restricts generation to chords whose endpoints have
/// opposite position parity, which is exactly the diagrams whose
/// interlacement degrees are all even; it is only valid together with a
/// prefilter implying that condition (such as the evenness conditions).
#[derive(Clone, Copy, Debug)]
pub struct Enumerator {
    n: usize,
    odd_gaps_only: bool,
}

impl Enumerator {
    pub fn new(n: usize) -> Self {
        assert!(2 * n < FREE as usize, "chord count too large to enumerate");
        Enumerator {
            n,
            odd_gaps_only: false,
        }
    }

    pub fn odd_gaps_only(mut self, v: bool) -> Self {
        self.odd_gaps_only = v;
        self
    }

    /// Splits the generation tree into at least `min_units` independent
    /// prefixes (fewer when the tree is smaller). Prefix order is
    /// deterministic, so merged results are reproducible at any parallelism.
    pub fn prefixes(&self, min_units: usize) -> Vec<MatchingPrefix> {
        let mut units = vec![MatchingPrefix::root()];
        while units.len() < min_units {
            let mut next = Vec::new();
            let mut expanded = false;
            for unit in &units {
                let children = self.expand(unit);
                if children.is_empty() {
                    next.push(unit.clone());
                } else {
                    expanded = true;
                    next.extend(children);
                }
            }
            units = next;
            if !expanded {
                break;
            }
        }
        units
    }

    fn expand(&self, prefix: &MatchingPrefix) -> Vec<MatchingPrefix> {
        let mut partner = self.partner_of(prefix);
        let len = partner.len();
        let Some(p) = (0..len).find(|&p| partner[p] == FREE) else {
            return Vec::new();
        };
        let mut children = Vec::new();
        let step = if self.odd_gaps_only { 2 } else { 1 };
        let mut q = p + 1;
        while q < len {
            if partner[q] == FREE {
                let mut pairs = prefix.pairs.clone();
                pairs.push((p as u16, q as u16));
                children.push(MatchingPrefix { pairs });
            }
            q += step;
        }
        partner.clear();
        children
    }

    fn partner_of(&self, prefix: &MatchingPrefix) -> Vec<u16> {
        let mut partner = vec![FREE; 2 * self.n];
        for &(p, q) in &prefix.pairs {
            partner[p as usize] = q;
            partner[q as usize] = p;
        }
        partner
    }

    /// Visits every class representative, whole search space.
    pub fn visit_classes(
        &self,
        prefilter: impl Fn(&GaussCode) -> bool,
        visitor: impl FnMut(&GaussCode),
    ) -> u64 {
        self.visit_classes_under(&MatchingPrefix::root(), prefilter, visitor)
    }

    /// Visits every class representative whose generation path extends
    /// `prefix`. The prefilter runs on each generated word before the
    /// (more expensive) minimality test; it must be constant on equivalence
    /// classes for the visit count to mean "classes passing the filter".
    pub fn visit_classes_under(
        &self,
        prefix: &MatchingPrefix,
        prefilter: impl Fn(&GaussCode) -> bool,
        mut visitor: impl FnMut(&GaussCode),
    ) -> u64 {
        let mut partner = self.partner_of(prefix);
        let mut word: Vec<u16> = Vec::with_capacity(2 * self.n);
        let mut scratch: Vec<u16> = Vec::with_capacity(2 * self.n);
        let mut count = 0u64;
        self.gen_rec(&mut partner, &mut |matching: &[u16]| {
            word_of_partner(matching, &mut word);
            let code = GaussCode::from_canonical_unchecked(word.clone());
            if !prefilter(&code) {
                return;
            }
            if !is_min_word(matching, &word, &mut scratch) {
                return;
            }
            count += 1;
            visitor(&code);
        });
        count
    }

    fn gen_rec(&self, partner: &mut Vec<u16>, sink: &mut impl FnMut(&[u16])) {
        let len = partner.len();
        let Some(p) = (0..len).find(|&p| partner[p] == FREE) else {
            sink(partner);
            return;
        };
        let step = if self.odd_gaps_only { 2 } else { 1 };
        let mut q = p + 1;
        while q < len {
            if partner[q] == FREE {
                partner[p] = q as u16;
                partner[q] = p as u16;
                self.gen_rec(partner, sink);
                partner[p] = FREE;
                partner[q] = FREE;
            }
            q += step;
        }
    }
}

/// Convenience wrapper: visit one representative per class, no prefilter.
pub fn enumerate_canonical(n: usize, visitor: impl FnMut(&GaussCode)) -> u64 {
    Enumerator::new(n).visit_classes(|_| true, visitor)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    #[test]
    fn parses_the_running_example() {
        let c = GaussCode::parse("12334124").unwrap();
        assert_eq!(c.chord_count(), 4);
        assert_eq!(c.symbols(), &[0, 1, 2, 2, 3, 0, 1, 3]);
        assert!(c.is_canonical());
    }

    #[test]
    fn parses_single_chord_and_separated_tokens() {
        let c = GaussCode::parse("11").unwrap();
        assert_eq!(c.chord_count(), 1);
        assert_eq!(c.symbols(), &[0, 0]);

        let d = GaussCode::parse("0 7 8 4 3 5 6 8 7 2 1 6 5 0 4 3 2 1").unwrap();
        assert_eq!(d.chord_count(), 9);
        let e = GaussCode::parse("a,b,a,b").unwrap();
        assert_eq!(e.symbols(), &[0, 1, 0, 1]);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert_eq!(
            GaussCode::parse("123"),
            Err(CodecError::NotDoubleOccurrence {
                token: "1".into(),
                count: 1
            })
        );
        assert_eq!(GaussCode::parse("   "), Err(CodecError::EmptyInput));
        assert_eq!(GaussCode::parse(""), Err(CodecError::EmptyInput));
        assert_eq!(
            GaussCode::parse("1112"),
            Err(CodecError::NotDoubleOccurrence {
                token: "1".into(),
                count: 3
            })
        );
        assert_eq!(GaussCode::parse("1-21-2"), Err(CodecError::InvalidCharacter('-')));
        assert_eq!(GaussCode::new(vec![0, 0, 1]), Err(CodecError::OddLength(3)));
    }

    #[test]
    fn diagram_round_trip() {
        let c = GaussCode::parse("12334124").unwrap();
        let d = c.to_diagram();
        assert_eq!(d.chord(2), (2, 3)); // the two adjacent '3' positions
        assert_eq!(d.to_code(), c);

        assert_eq!(
            GaussCode::parse("11").unwrap().to_diagram().endpoints(),
            &[(0, 1)]
        );
        assert_eq!(
            GaussCode::parse("1212").unwrap().to_diagram().endpoints(),
            &[(0, 2), (1, 3)]
        );
    }

    #[test]
    fn display_round_trips() {
        for s in ["11", "1212", "12334124", "123451632546"] {
            let c = GaussCode::parse(s).unwrap();
            assert_eq!(c.to_string(), s);
            assert_eq!(GaussCode::parse(&c.to_string()).unwrap(), c);
        }
        // ten chords switch to separated tokens
        let mut word: Vec<u16> = (0..10).collect();
        word.extend(0..10);
        let c = GaussCode::new(word).unwrap();
        assert_eq!(c.to_string(), "1 2 3 4 5 6 7 8 9 10 1 2 3 4 5 6 7 8 9 10");
        assert_eq!(GaussCode::parse(&c.to_string()).unwrap(), c);
    }

    #[test]
    fn json_shape_is_stable() {
        let c = GaussCode::parse("1212").unwrap();
        let js = serde_json::to_string(&c).unwrap();
        assert_eq!(js, r#"{"n":2,"code":[0,1,0,1]}"#);
        let back: GaussCode = serde_json::from_str(&js).unwrap();
        assert_eq!(back, c);
        assert!(serde_json::from_str::<GaussCode>(r#"{"n":3,"code":[0,1,0,1]}"#).is_err());
    }

    #[test]
    fn symmetry_basics() {
        let d = GaussCode::parse("12334124").unwrap().to_diagram();
        assert_eq!(d.apply_symmetry(0, false), d);
        let r = d.apply_symmetry(3, false);
        assert_eq!(r.apply_symmetry(d.positions() - 3, false), d);
        let f = d.apply_symmetry(0, true);
        assert_eq!(f.apply_symmetry(0, true), d);
    }

    #[test]
    fn keys_are_orbit_invariant() {
        let d = GaussCode::parse("12334124").unwrap().to_diagram();
        let key = d.canonical_key();
        for rot in 0..d.positions() {
            for reflect in [false, true] {
                assert_eq!(d.apply_symmetry(rot, reflect).canonical_key(), key);
            }
        }
        let a = GaussCode::parse("1212").unwrap().to_diagram().canonical_key();
        let b = GaussCode::parse("2121").unwrap().to_diagram().canonical_key();
        assert_eq!(a, b);
    }

    /// All `(2n-1)!!` matchings, by brute force; the enumeration oracle.
    fn all_matchings(n: usize) -> Vec<ChordDiagram> {
        fn rec(partner: &mut Vec<Option<u16>>, out: &mut Vec<ChordDiagram>) {
            let Some(p) = partner.iter().position(|x| x.is_none()) else {
                let mut pairs = Vec::new();
                for (i, x) in partner.iter().enumerate() {
                    let q = x.unwrap();
                    if q as usize > i {
                        pairs.push((i as u16, q));
                    }
                }
                out.push(ChordDiagram::new(pairs).unwrap());
                return;
            };
            for q in p + 1..partner.len() {
                if partner[q].is_none() {
                    partner[p] = Some(q as u16);
                    partner[q] = Some(p as u16);
                    rec(partner, out);
                    partner[p] = None;
                    partner[q] = None;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut vec![None; 2 * n], &mut out);
        out
    }

    #[test]
    fn enumeration_matches_bruteforce_dedup_for_small_n() {
        // expected class counts: 1, 2, 5 for n = 1, 2, 3 (and onward by oracle)
        let expected = [1u64, 2, 5];
        for n in 1..=5usize {
            let mut visited = BTreeSet::new();
            let count = enumerate_canonical(n, |code| {
                assert!(visited.insert(code.clone()), "duplicate representative");
                assert_eq!(
                    &code.to_diagram().canonical_key().into_code(),
                    code,
                    "representative must be its own key"
                );
            });
            let oracle: BTreeSet<GaussCode> = all_matchings(n)
                .iter()
                .map(|d| d.canonical_key().into_code())
                .collect();
            assert_eq!(count, oracle.len() as u64, "n={n}");
            assert_eq!(visited, oracle, "n={n}");
            if n <= 3 {
                assert_eq!(count, expected[n - 1]);
            }
        }
    }

    #[test]
    fn enumeration_small_cases() {
        let mut reps = Vec::new();
        enumerate_canonical(2, |c| reps.push(c.to_string()));
        assert_eq!(reps, vec!["1122", "1212"]);
        assert_eq!(enumerate_canonical(1, |_| {}), 1);
        assert_eq!(enumerate_canonical(3, |_| {}), 5);
    }

    #[test]
    fn prefix_split_preserves_the_count() {
        let n = 5;
        let e = Enumerator::new(n);
        let whole = e.visit_classes(|_| true, |_| {});
        for units in [2, 7, 30] {
            let prefixes = e.prefixes(units);
            let sum: u64 = prefixes
                .iter()
                .map(|p| e.visit_classes_under(p, |_| true, |_| {}))
                .sum();
            assert_eq!(sum, whole);
        }
    }

    #[test]
    fn odd_gap_enumeration_is_the_even_degree_subset() {
        use crate::interlace::InterlacementGraph;
        for n in 1..=5usize {
            let all = {
                let mut v = Vec::new();
                Enumerator::new(n).visit_classes(|_| true, |c| v.push(c.clone()));
                v
            };
            let even_degree: Vec<GaussCode> = all
                .into_iter()
                .filter(|c| {
                    let g = InterlacementGraph::from_code(c);
                    (0..n).all(|i| !g.degree_parity(i))
                })
                .collect();
            let mut odd_gap = Vec::new();
            Enumerator::new(n)
                .odd_gaps_only(true)
                .visit_classes(|_| true, |c| odd_gap.push(c.clone()));
            assert_eq!(odd_gap, even_degree, "n={n}");
        }
    }

    fn arb_code(max_n: usize) -> impl Strategy<Value = GaussCode> {
        (1..=max_n)
            .prop_flat_map(|n| {
                let word: Vec<u16> = (0..n as u16).flat_map(|s| [s, s]).collect();
                Just(word).prop_shuffle()
            })
            .prop_map(|w| GaussCode::new(w).unwrap().canonicalized())
    }

    proptest! {
        #[test]
        fn parse_format_round_trip(code in arb_code(8)) {
            let text = code.to_string();
            prop_assert_eq!(GaussCode::parse(&text).unwrap(), code);
        }

        #[test]
        fn key_is_invariant_under_random_symmetry(
            code in arb_code(7),
            rot in 0usize..14,
            reflect in any::<bool>(),
        ) {
            let d = code.to_diagram();
            let g = d.apply_symmetry(rot % d.positions(), reflect);
            prop_assert_eq!(g.canonical_key(), d.canonical_key());
        }

        #[test]
        fn diagram_code_round_trip(code in arb_code(9)) {
            prop_assert_eq!(code.to_diagram().to_code(), code);
        }
    }
}
