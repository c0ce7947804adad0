//! Alphabets, words, antimorphic involutions and primitivity.
//!
//! Everything here is an immutable value; operations are pure functions.
//! Words are finite sequences of single-character letters drawn from a
//! shared [`Alphabet`], and an [`Involution`] is a letter bijection with
//! `theta(theta(a)) = a`, extended to words antimorphically:
//! `theta(uv) = theta(v) theta(u)`.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// An ordered, finite, non-empty set of distinct single-character letters.
///
/// The declared order is total and fixed; it drives the canonical ordering
/// of [`WordSet`]s (length first, then lexicographic by alphabet order).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    letters: Vec<char>,
    index: HashMap<char, usize>,
}

impl Alphabet {
    pub fn new(letters: impl IntoIterator<Item = char>) -> Result<Self> {
        let letters: Vec<char> = letters.into_iter().collect();
        if letters.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        let mut index = HashMap::new();
        for (i, &c) in letters.iter().enumerate() {
            if index.insert(c, i).is_some() {
                return Err(Error::DuplicateLetter(c));
            }
        }
        Ok(Alphabet { letters, index })
    }

    /// Parse the contiguous text form, e.g. `"abcd"`.
    pub fn parse(s: &str) -> Result<Self> {
        Self::new(s.chars())
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn letters(&self) -> &[char] {
        &self.letters
    }

    pub fn contains(&self, c: char) -> bool {
        self.index.contains_key(&c)
    }

    pub fn index_of(&self, c: char) -> Option<usize> {
        self.index.get(&c).copied()
    }

    /// Canonical word order: shorter first, then lexicographic by the
    /// declared letter order. Letters outside the alphabet sort last.
    pub fn word_cmp(&self, a: &Word, b: &Word) -> std::cmp::Ordering {
        a.len().cmp(&b.len()).then_with(|| {
            let ka = a.letters().iter().map(|&c| self.index_of(c).unwrap_or(usize::MAX));
            let kb = b.letters().iter().map(|&c| self.index_of(c).unwrap_or(usize::MAX));
            ka.cmp(kb)
        })
    }

    /// Parse a word, validating every letter. `"@"` denotes the empty word.
    pub fn parse_word(&self, s: &str) -> Result<Word> {
        if s == "@" {
            return Ok(Word::empty());
        }
        let mut letters = Vec::with_capacity(s.len());
        for c in s.chars() {
            if !self.contains(c) {
                return Err(Error::UnknownLetter(c));
            }
            letters.push(c);
        }
        Ok(Word(letters))
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.letters {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// A finite sequence of letters. The empty word is valid.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<char>);

impl Word {
    pub fn new(letters: Vec<char>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Construct from a plain string without alphabet validation.
    pub fn from_str_unchecked(s: &str) -> Self {
        Word(s.chars().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[char] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn split_at(&self, mid: usize) -> (Word, Word) {
        let (a, b) = self.0.split_at(mid);
        (Word(a.to_vec()), Word(b.to_vec()))
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// w^k.
    pub fn repeat(&self, k: usize) -> Word {
        let mut v = Vec::with_capacity(self.len() * k);
        for _ in 0..k {
            v.extend_from_slice(&self.0);
        }
        Word(v)
    }
}

impl fmt::Display for Word {
    /// The empty word prints as `@` so line-oriented output stays
    /// unambiguous.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "@");
        }
        for c in &self.0 {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// An antimorphic involution: a letter bijection with `map(map(a)) = a`,
/// extended to words by `theta(uv) = theta(v) theta(u)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Involution {
    alphabet: Alphabet,
    map: HashMap<char, char>,
}

impl Involution {
    /// Build an involution from explicit letter pairs. Letters absent from
    /// `pairs` default to fixed points (`theta(a) = a`).
    pub fn new(alphabet: Alphabet, pairs: &[(char, char)]) -> Result<Self> {
        let mut map: HashMap<char, char> = HashMap::new();
        for &(from, to) in pairs {
            if !alphabet.contains(from) {
                return Err(Error::UnknownLetter(from));
            }
            if !alphabet.contains(to) {
                return Err(Error::UnknownLetter(to));
            }
            match map.get(&from) {
                Some(&prev) if prev != to => return Err(Error::ConflictingPair(from)),
                _ => {}
            }
            map.insert(from, to);
        }
        // Letters without an explicit image get the implied one: the
        // partner when some pair targets them, a fixed point otherwise.
        for &(from, to) in pairs {
            map.entry(to).or_insert(from);
        }
        for &c in alphabet.letters() {
            map.entry(c).or_insert(c);
        }
        for &c in alphabet.letters() {
            let image = map[&c];
            if map[&image] != c {
                return Err(Error::NonInvolutive(c));
            }
        }
        Ok(Involution { alphabet, map })
    }

    pub fn identity(alphabet: Alphabet) -> Self {
        Involution::new(alphabet, &[]).expect("identity is always involutive")
    }

    /// Parse the comma-separated text form `a:b,c:d` (whitespace ignored).
    pub fn parse(spec: &str, alphabet: Alphabet) -> Result<Self> {
        let mut pairs = Vec::new();
        for chunk in spec.split(',') {
            let chunk: String = chunk.chars().filter(|c| !c.is_whitespace()).collect();
            if chunk.is_empty() {
                continue;
            }
            let parts: Vec<char> = chunk.chars().collect();
            if parts.len() != 3 || parts[1] != ':' {
                return Err(Error::Parse(format!(
                    "bad involution pair '{chunk}' (expected letter:letter)"
                )));
            }
            pairs.push((parts[0], parts[2]));
        }
        Involution::new(alphabet, &pairs)
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn apply_letter(&self, c: char) -> Result<char> {
        self.map.get(&c).copied().ok_or(Error::AlphabetMismatch(c))
    }

    pub fn is_fixed(&self, c: char) -> bool {
        self.map.get(&c) == Some(&c)
    }

    pub fn check_word(&self, w: &Word) -> Result<()> {
        for &c in w.letters() {
            if !self.alphabet.contains(c) {
                return Err(Error::AlphabetMismatch(c));
            }
        }
        Ok(())
    }

    /// The antimorphic image: reverse, then map each letter.
    pub fn apply(&self, w: &Word) -> Result<Word> {
        self.check_word(w)?;
        Ok(self.apply_unchecked(w))
    }

    pub(crate) fn apply_unchecked(&self, w: &Word) -> Word {
        Word(w.letters().iter().rev().map(|c| self.map[c]).collect())
    }

    /// `w = theta(w)`.
    pub fn is_theta_palindrome(&self, w: &Word) -> Result<bool> {
        self.check_word(w)?;
        let n = w.len();
        let letters = w.letters();
        // w == reverse-mapped w, checked in place.
        Ok((0..n).all(|i| letters[i] == self.map[&letters[n - 1 - i]]))
    }

    /// Render as the `a:b,c:d` text form (non-fixed pairs once, then fixed
    /// points), in alphabet order.
    pub fn spec_string(&self) -> String {
        let mut parts = Vec::new();
        for &c in self.alphabet.letters() {
            let image = self.map[&c];
            if image == c {
                parts.push(format!("{c}:{c}"));
            } else if self.alphabet.index_of(c) < self.alphabet.index_of(image) {
                parts.push(format!("{c}:{image}"));
            }
        }
        parts.join(",")
    }
}

/// The unique primitive root of a non-empty word, with its exponent.
///
/// Tests every divisor-length prefix as a period; the shortest one that
/// reconstructs `w` is the root.
pub fn primitive_root(w: &Word) -> Result<(Word, usize)> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let n = w.len();
    let letters = w.letters();
    for d in 1..=n {
        if n % d != 0 {
            continue;
        }
        if (d..n).all(|i| letters[i] == letters[i - d]) {
            return Ok((Word(letters[..d].to_vec()), n / d));
        }
    }
    unreachable!("d = n always succeeds")
}

pub fn is_primitive(w: &Word) -> Result<bool> {
    primitive_root(w).map(|(_, e)| e == 1)
}

/// A deduplicated set of words in canonical order: length first, then
/// lexicographic by the alphabet's declared letter order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WordSet {
    words: Vec<Word>,
}

impl WordSet {
    pub fn empty() -> Self {
        WordSet { words: Vec::new() }
    }

    pub fn from_words(words: impl IntoIterator<Item = Word>, alphabet: &Alphabet) -> Self {
        let mut words: Vec<Word> = words.into_iter().collect();
        words.sort_by(|a, b| alphabet.word_cmp(a, b));
        words.dedup();
        WordSet { words }
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Word> {
        self.words.iter()
    }

    pub fn words(&self) -> &[Word] {
        &self.words
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.words.iter().any(|x| x == w)
    }

    pub fn union(&self, other: &WordSet, alphabet: &Alphabet) -> WordSet {
        WordSet::from_words(
            self.words.iter().chain(other.words.iter()).cloned(),
            alphabet,
        )
    }

    pub fn is_subset(&self, other: &WordSet) -> bool {
        self.words.iter().all(|w| other.contains(w))
    }

    /// Elements in exactly one of the two sets, in canonical order.
    pub fn symmetric_difference(&self, other: &WordSet, alphabet: &Alphabet) -> Vec<Word> {
        let mut diff: Vec<Word> = self
            .words
            .iter()
            .filter(|w| !other.contains(w))
            .chain(other.words.iter().filter(|w| !self.contains(w)))
            .cloned()
            .collect();
        diff.sort_by(|a, b| alphabet.word_cmp(a, b));
        diff
    }
}

impl IntoIterator for WordSet {
    type Item = Word;
    type IntoIter = std::vec::IntoIter<Word>;
    fn into_iter(self) -> Self::IntoIter {
        self.words.into_iter()
    }
}
