//! Words over the positive integers and the patterns matched against them.
//!
//! A [`Word`] is any finite sequence of positive letters. A [`Pattern`] is a
//! nonempty word over `{1,2}` that is its own reduction (`1`, `11`, `12`,
//! `21`, `121`, ...). Matches are contiguous factors whose reduction equals
//! the pattern; occurrences are arbitrary subsequences with that property.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A finite sequence of positive-integer letters.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        if letters.contains(&0) {
            return Err(Error::ZeroLetter);
        }
        Ok(Word(letters))
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<u32> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_letter(&self) -> Option<u32> {
        self.0.iter().copied().max()
    }

    /// Number of occurrences of `letter`.
    pub fn count(&self, letter: u32) -> usize {
        self.0.iter().filter(|&&x| x == letter).count()
    }

    pub fn alphabet(&self) -> BTreeSet<u32> {
        alphabet(self)
    }

    pub fn reduce(&self) -> Word {
        reduce(self)
    }

    pub fn reverse(&self) -> Word {
        reverse(self)
    }

    pub fn restrict(&self, keep: &BTreeSet<u32>) -> Word {
        restrict(self, keep)
    }

    /// Applies `f` letterwise. `f` must not produce 0.
    pub(crate) fn map(&self, f: impl Fn(u32) -> u32) -> Word {
        Word(self.0.iter().map(|&x| f(x)).collect())
    }

    /// Parses either the space-separated decimal form or, when the input is a
    /// single run of digits, the compact one-digit-per-letter form.
    pub fn parse(text: &str) -> Result<Self> {
        let trimmed = text.trim();
        let tokens: Vec<&str> = trimmed
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .collect();
        if tokens.len() == 1 && tokens[0].len() > 1 && tokens[0].bytes().all(|b| b.is_ascii_digit()) {
            return Self::parse_compact(tokens[0]);
        }
        let mut letters = Vec::with_capacity(tokens.len());
        for token in tokens {
            let letter: u32 = token
                .parse()
                .map_err(|_| Error::parse(token, "expected a positive integer letter"))?;
            if letter == 0 {
                return Err(Error::parse(token, "letters must be positive"));
            }
            letters.push(letter);
        }
        Ok(Word(letters))
    }

    /// Parses the compact form: every character is one letter in `1..=9`.
    pub fn parse_compact(text: &str) -> Result<Self> {
        let mut letters = Vec::with_capacity(text.len());
        for ch in text.trim().chars() {
            match ch.to_digit(10) {
                Some(0) => return Err(Error::parse(ch.to_string(), "letters must be positive")),
                Some(d) => letters.push(d),
                None => return Err(Error::parse(ch.to_string(), "expected a digit")),
            }
        }
        Ok(Word(letters))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Word::parse(s)
    }
}

impl TryFrom<Vec<u32>> for Word {
    type Error = Error;

    fn try_from(letters: Vec<u32>) -> Result<Self> {
        Word::new(letters)
    }
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let letters = Vec::<u32>::deserialize(d)?;
        Word::new(letters).map_err(serde::de::Error::custom)
    }
}

/// A nonempty reduced word over `{1,2}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pattern(Vec<u32>);

impl Pattern {
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        let valid = !letters.is_empty()
            && letters.iter().all(|&x| x == 1 || x == 2)
            && reduce_letters(&letters) == letters;
        if !valid {
            let text: String = letters.iter().map(|x| x.to_string()).collect();
            return Err(Error::InvalidPattern(text));
        }
        Ok(Pattern(letters))
    }

    /// The pattern `1^k`.
    pub fn ones(k: usize) -> Result<Self> {
        Pattern::new(vec![1; k])
    }

    /// The pattern `12`.
    pub fn twelve() -> Self {
        Pattern(vec![1, 2])
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_twelve(&self) -> bool {
        self.0 == [1, 2]
    }

    pub fn as_word(&self) -> Word {
        Word(self.0.clone())
    }

    pub fn reverse(&self) -> Pattern {
        Pattern(self.0.iter().rev().copied().collect())
    }

    /// `x ↦ m+1-x` over the pattern's own largest letter `m`.
    pub fn complement(&self) -> Pattern {
        let m = *self.0.iter().max().expect("patterns are nonempty");
        Pattern(self.0.iter().map(|&x| m + 1 - x).collect())
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for x in &self.0 {
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut letters = Vec::with_capacity(s.len());
        for ch in s.chars().filter(|c| !c.is_whitespace()) {
            match ch {
                '1' => letters.push(1),
                '2' => letters.push(2),
                _ => return Err(Error::InvalidPattern(s.to_string())),
            }
        }
        Pattern::new(letters)
    }
}

impl Serialize for Pattern {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Pattern {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

fn reduce_letters(letters: &[u32]) -> Vec<u32> {
    let mut distinct: Vec<u32> = letters.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    letters
        .iter()
        .map(|x| distinct.binary_search(x).expect("letter present") as u32 + 1)
        .collect()
}

/// Replaces the i-th smallest distinct letter by `i`.
pub fn reduce(w: &Word) -> Word {
    Word(reduce_letters(&w.0))
}

/// Keeps exactly the letters in `keep`, in order.
pub fn restrict(w: &Word, keep: &BTreeSet<u32>) -> Word {
    Word(w.0.iter().copied().filter(|x| keep.contains(x)).collect())
}

pub fn alphabet(w: &Word) -> BTreeSet<u32> {
    w.0.iter().copied().collect()
}

/// True iff `window` reduces to `pattern` (same length assumed).
fn reduces_to(window: &[u32], pattern: &[u32]) -> bool {
    for a in 0..pattern.len() {
        for b in (a + 1)..pattern.len() {
            if window[a].cmp(&window[b]) != pattern[a].cmp(&pattern[b]) {
                return false;
            }
        }
    }
    true
}

pub(crate) fn has_match_letters(w: &[u32], u: &[u32]) -> bool {
    if u.len() > w.len() {
        return false;
    }
    w.windows(u.len()).any(|window| reduces_to(window, u))
}

/// True iff some contiguous factor of `w` reduces to `u`.
pub fn has_match(w: &Word, u: &Pattern) -> bool {
    has_match_letters(&w.0, &u.0)
}

/// Greedy left-to-right embedding of `template` as a subsequence of `w`.
fn embeds(w: &[u32], template: impl Iterator<Item = u32>) -> bool {
    let mut it = w.iter();
    for t in template {
        if !it.by_ref().any(|&c| c == t) {
            return false;
        }
    }
    true
}

/// True iff some (not necessarily contiguous) subsequence of `w` reduces to `u`.
///
/// A pattern over `{1,2}` fixes which of two letters `a < b` goes where, so
/// for each candidate pair the question is a plain subsequence test, which
/// the greedy scan over pattern prefixes answers exactly.
pub fn occurs(w: &Word, u: &Pattern) -> bool {
    let letters: Vec<u32> = alphabet(w).into_iter().collect();
    let uses_two = u.0.contains(&2);
    if !uses_two {
        return letters.iter().any(|&a| w.count(a) >= u.len());
    }
    for (i, &a) in letters.iter().enumerate() {
        for &b in &letters[i + 1..] {
            let template = u.0.iter().map(|&p| if p == 1 { a } else { b });
            if embeds(&w.0, template) {
                return true;
            }
        }
    }
    false
}

pub fn reverse(w: &Word) -> Word {
    Word(w.0.iter().rev().copied().collect())
}

/// `x ↦ n+1-x` where `n` is the largest letter of `w`.
pub fn complement_word(w: &Word) -> Result<Word> {
    let n = w.max_letter().ok_or(Error::EmptyWord)?;
    Ok(w.map(|x| n + 1 - x))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    fn p(s: &str) -> Pattern {
        s.parse().unwrap()
    }

    #[test]
    fn reduce_examples() {
        assert_eq!(reduce(&w("347439")), w("123214"));
        assert_eq!(reduce(&Word::empty()), Word::empty());
        assert_eq!(reduce(&w("9 8")), w("2 1"));
    }

    #[test]
    fn restrict_and_alphabet() {
        let word = w("4513113458");
        let keep: BTreeSet<u32> = [1, 3, 5].into();
        assert_eq!(restrict(&word, &keep), w("5131135"));
        assert_eq!(restrict(&word, &alphabet(&word)), word);
        assert_eq!(restrict(&word, &BTreeSet::new()), Word::empty());
        assert_eq!(alphabet(&word), [1, 3, 4, 5, 8].into());
        assert!(alphabet(&Word::empty()).is_empty());
        assert_eq!(alphabet(&w("777")), [7].into());
    }

    #[test]
    fn matches() {
        assert!(!has_match(&w("1213"), &p("11")));
        assert!(has_match(&w("1123"), &p("11")));
        assert!(!has_match(&w("2 1"), &p("12")));
        assert!(!has_match(&w("3 5 3 5 3"), &p("11")));
        assert!(!has_match(&w("1"), &p("12")));
        assert!(has_match(&w("1 1 1"), &p("111")));
    }

    #[test]
    fn occurrences() {
        assert!(!occurs(&w("2 1"), &p("12")));
        assert!(occurs(&w("2131"), &p("12")));
        assert!(occurs(&w("1 2 1"), &p("11")));
        assert!(!occurs(&w("1 2 3"), &p("11")));
        assert!(occurs(&w("3 1 2 1 3"), &p("121")));
        assert!(!occurs(&w("3 3 2 1"), &p("121")));
    }

    #[test]
    fn reverse_and_complement() {
        assert_eq!(reverse(&w("1 2 3")), w("3 2 1"));
        assert_eq!(reverse(&Word::empty()), Word::empty());
        assert_eq!(reverse(&w("5131135")), w("5311315"));
        assert_eq!(complement_word(&w("12")).unwrap(), w("21"));
        assert_eq!(complement_word(&w("14213243")).unwrap(), w("41342312"));
        assert_eq!(complement_word(&w("11")).unwrap(), w("11"));
        assert_eq!(complement_word(&Word::empty()), Err(Error::EmptyWord));
    }

    #[test]
    fn pattern_validation() {
        assert!(Pattern::new(vec![2, 1]).is_ok());
        assert!(Pattern::new(vec![2, 2]).is_err());
        assert!(Pattern::new(vec![]).is_err());
        assert!(Pattern::new(vec![1, 3]).is_err());
        assert!("1a".parse::<Pattern>().is_err());
        assert_eq!(p("12").complement(), p("21"));
        assert_eq!(p("112").reverse(), p("211"));
        assert_eq!(p("111").complement(), p("111"));
    }

    #[test]
    fn parsing() {
        assert_eq!(w("7 6 7 5").letters(), &[7, 6, 7, 5]);
        assert_eq!(w("14213243").letters(), &[1, 4, 2, 1, 3, 2, 4, 3]);
        assert_eq!(w("12").letters(), &[1, 2]);
        assert_eq!(w("12 3").letters(), &[12, 3]);
        match Word::parse("1 x 3") {
            Err(Error::Parse { token, .. }) => assert_eq!(token, "x"),
            other => panic!("{other:?}"),
        }
        assert!(Word::parse("1 0").is_err());
        assert!(Word::parse_compact("102").is_err());
        assert_eq!(w("7 6 7 5").to_string(), "7 6 7 5");
    }

    /// Every word over {1,2} of length at most 8: a 12-occurrence exists iff
    /// a 12-match does.
    #[test]
    fn twelve_occurrence_equals_match_on_two_letters() {
        let twelve = Pattern::twelve();
        for len in 0..=8u32 {
            for bits in 0..(1u32 << len) {
                let letters: Vec<u32> = (0..len).map(|i| 1 + ((bits >> i) & 1)).collect();
                let word = Word::new(letters).unwrap();
                assert_eq!(occurs(&word, &twelve), has_match(&word, &twelve), "{word}");
            }
        }
    }
}
