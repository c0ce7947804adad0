//! Iterated theta-conjugates and their closure.
//!
//! `C_theta^n(w)` is the n-fold application of the conjugate operation; the
//! closure `C_theta^*(w)` stabilizes by iteration `4|w|-6` for `|w| >= 3`
//! and is exactly the set of words with the same paired Parikh vector as
//! `w`. For words of length one and two the closure is reached by
//! iterations 1 and 3 respectively.

use std::collections::{BTreeMap, HashSet};

use num_bigint::BigUint;

use crate::conjugacy::theta_conjugates;
use crate::error::{Error, Result};
use crate::words::{Involution, Word, WordSet};

/// Default cap on any set-materializing operation; closure sizes grow as
/// n! * 2^n, so unguarded materialization is a footgun.
pub const DEFAULT_SIZE_GUARD: usize = 1_000_000;

/// Combined letter counts per theta-orbit `{a, theta(a)}`, keyed by the
/// alphabet-least representative. Invariant under theta-conjugation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairedParikhVector {
    entries: BTreeMap<char, usize>,
}

impl PairedParikhVector {
    pub fn of(theta: &Involution, w: &Word) -> Result<Self> {
        theta.check_word(w)?;
        let mut entries = BTreeMap::new();
        for &c in w.letters() {
            *entries.entry(orbit_rep(theta, c)).or_insert(0) += 1;
        }
        Ok(PairedParikhVector { entries })
    }

    pub fn entries(&self) -> &BTreeMap<char, usize> {
        &self.entries
    }

    pub fn total(&self) -> usize {
        self.entries.values().sum()
    }
}

/// The alphabet-least letter of the orbit {c, theta(c)}.
fn orbit_rep(theta: &Involution, c: char) -> char {
    let image = theta.apply_letter(c).expect("letter checked");
    let alphabet = theta.alphabet();
    if alphabet.index_of(image) < alphabet.index_of(c) {
        image
    } else {
        c
    }
}

/// `C_theta^n(w)` by n-fold application over a frontier with deduplication.
pub fn iterate_conjugates(
    theta: &Involution,
    w: &Word,
    n: usize,
    size_guard: usize,
) -> Result<WordSet> {
    theta.check_word(w)?;
    let mut all: HashSet<Word> = HashSet::new();
    all.insert(w.clone());
    let mut frontier: Vec<Word> = vec![w.clone()];
    for _ in 0..n {
        let mut next = Vec::new();
        for u in &frontier {
            for x in theta_conjugates(theta, u)? {
                if all.insert(x.clone()) {
                    if all.len() > size_guard {
                        return Err(Error::SizeGuardExceeded(size_guard));
                    }
                    next.push(x);
                }
            }
        }
        if next.is_empty() {
            break; // fixpoint reached; later iterates are identical
        }
        frontier = next;
    }
    Ok(WordSet::from_words(all, theta.alphabet()))
}

/// Exact cardinality of the closure, never materializing the set:
/// multinomial over the orbit counts times 2^(sum of non-fixed counts).
pub fn closure_size(theta: &Involution, w: &Word) -> Result<BigUint> {
    let parikh = PairedParikhVector::of(theta, w)?;
    let n = parikh.total();
    let mut size = factorial(n);
    let mut non_fixed_total = 0usize;
    for (&rep, &count) in parikh.entries() {
        size /= factorial(count);
        if !theta.is_fixed(rep) {
            non_fixed_total += count;
        }
    }
    Ok(size << non_fixed_total)
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::from(1u32), |acc, k| acc * k)
}

/// `C_theta^*(w)`, materialized.
///
/// For `|w| >= 3` the set is generated directly from the paired Parikh
/// vector: every arrangement of the orbit multiset, with each non-fixed
/// position free to use either orbit letter. For `|w| <= 2` the closure is
/// computed as `C_theta^m(w)` with m = 1 (length 1) or m = 3 (length 2).
pub fn closure_set(theta: &Involution, w: &Word, size_guard: usize) -> Result<WordSet> {
    theta.check_word(w)?;
    if w.len() <= 2 {
        let m = match w.len() {
            0 => 0,
            1 => 1,
            _ => 3,
        };
        return iterate_conjugates(theta, w, m, size_guard);
    }
    let size = closure_size(theta, w)?;
    if size > BigUint::from(size_guard) {
        return Err(Error::SizeGuardExceeded(size_guard));
    }
    let parikh = PairedParikhVector::of(theta, w)?;
    // (rep, partner-or-rep, remaining count) per orbit, in alphabet order.
    let mut orbits: Vec<(char, char, usize)> = Vec::new();
    for (&rep, &count) in parikh.entries() {
        let partner = theta.apply_letter(rep)?;
        orbits.push((rep, partner, count));
    }
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(w.len());
    generate_arrangements(&mut orbits, &mut current, w.len(), &mut out);
    Ok(WordSet::from_words(out, theta.alphabet()))
}

fn generate_arrangements(
    orbits: &mut Vec<(char, char, usize)>,
    current: &mut Vec<char>,
    target_len: usize,
    out: &mut Vec<Word>,
) {
    if current.len() == target_len {
        out.push(Word::new(current.clone()));
        return;
    }
    for i in 0..orbits.len() {
        let (rep, partner, count) = orbits[i];
        if count == 0 {
            continue;
        }
        orbits[i].2 -= 1;
        current.push(rep);
        generate_arrangements(orbits, current, target_len, out);
        current.pop();
        if partner != rep {
            current.push(partner);
            generate_arrangements(orbits, current, target_len, out);
            current.pop();
        }
        orbits[i].2 += 1;
    }
}

/// The least `i` with `C_theta^i(w) = C_theta^*(w)`, found as the first
/// fixpoint of the monotone iteration. Bounded by max(4|w|-6, 3).
pub fn stabilization_index(theta: &Involution, w: &Word, size_guard: usize) -> Result<usize> {
    theta.check_word(w)?;
    let mut all: HashSet<Word> = HashSet::new();
    all.insert(w.clone());
    let mut frontier: Vec<Word> = vec![w.clone()];
    let mut index = 0usize;
    loop {
        let mut next = Vec::new();
        for u in &frontier {
            for x in theta_conjugates(theta, u)? {
                if all.insert(x.clone()) {
                    if all.len() > size_guard {
                        return Err(Error::SizeGuardExceeded(size_guard));
                    }
                    next.push(x);
                }
            }
        }
        if next.is_empty() {
            return Ok(index);
        }
        frontier = next;
        index += 1;
    }
}

/// The stabilization bound: max(4|w|-6, 3) for |w| >= 2, 1 for |w| = 1.
pub fn stabilization_bound(len: usize) -> usize {
    match len {
        0 => 0,
        1 => 1,
        2 => 3,
        n => 4 * n - 6,
    }
}

/// Closure of a finite language: union of per-word closures.
pub fn closure_of_language(
    theta: &Involution,
    words: &WordSet,
    size_guard: usize,
) -> Result<WordSet> {
    let mut all: HashSet<Word> = HashSet::new();
    for w in words.iter() {
        for x in closure_set(theta, w, size_guard)? {
            all.insert(x);
            if all.len() > size_guard {
                return Err(Error::SizeGuardExceeded(size_guard));
            }
        }
    }
    Ok(WordSet::from_words(all, theta.alphabet()))
}

/// Summary for a single word's closure, for reporting.
#[derive(Debug, Clone)]
pub struct ClosureReport {
    pub word: Word,
    /// Omitted when the size guard would be exceeded.
    pub closure: Option<WordSet>,
    pub size: BigUint,
    pub stabilization_index: usize,
    pub bound: usize,
}

pub fn closure_report(theta: &Involution, w: &Word, size_guard: usize) -> Result<ClosureReport> {
    let size = closure_size(theta, w)?;
    let closure = match closure_set(theta, w, size_guard) {
        Ok(set) => Some(set),
        Err(Error::SizeGuardExceeded(_)) => None,
        Err(e) => return Err(e),
    };
    let stabilization_index = stabilization_index(theta, w, size_guard)?;
    Ok(ClosureReport {
        word: w.clone(),
        closure,
        size,
        stabilization_index,
        bound: stabilization_bound(w.len()),
    })
}
