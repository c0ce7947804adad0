//! Theta-conjugate sets of single words.
//!
//! `C_theta(w) = { theta(y)x : w = xy }`. This module computes the set,
//! its right-extension recurrence `C_theta(ua) = {ua} ∪ theta(a) C_theta(u)`,
//! a linear-time membership decider, and the characterization of when two
//! conjugate sets coincide.

use crate::error::Result;
use crate::words::{is_primitive, Involution, Word, WordSet};

/// All theta-conjugates of `w`: one candidate per split point, deduplicated.
pub fn theta_conjugates(theta: &Involution, w: &Word) -> Result<WordSet> {
    theta.check_word(w)?;
    let n = w.len();
    let mut out = Vec::with_capacity(n + 1);
    for split in 0..=n {
        let (x, y) = w.split_at(split);
        out.push(theta.apply_unchecked(&y).concat(&x));
    }
    Ok(WordSet::from_words(out, theta.alphabet()))
}

/// The set of classical conjugates (cyclic rotations) of `w`.
pub fn classical_conjugates(
    alphabet: &crate::words::Alphabet,
    w: &Word,
) -> WordSet {
    let n = w.len();
    let rotations = (0..n.max(1)).map(|i| {
        let (x, y) = w.split_at(i % n.max(1));
        y.concat(&x)
    });
    WordSet::from_words(rotations, alphabet)
}

/// Result of the right-extension recurrence for `C_theta(ua)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncrementalConjugates {
    pub set: WordSet,
    /// Whether `C_theta(ua) = theta(a) C_theta(u)` held at the last step,
    /// which happens exactly when `ua` is a theta-palindrome.
    pub absorbed_last: bool,
}

/// Same set as [`theta_conjugates`], computed by the recurrence
/// `C_theta(ua) = {ua} ∪ theta(a) C_theta(u)`.
pub fn theta_conjugates_incremental(
    theta: &Involution,
    w: &Word,
) -> Result<IncrementalConjugates> {
    theta.check_word(w)?;
    let mut set = vec![Word::empty()];
    let mut absorbed_last = true; // lambda is a theta-palindrome
    let mut prefix = Word::empty();
    for &a in w.letters() {
        prefix = prefix.concat(&Word::new(vec![a]));
        let ta = Word::new(vec![theta.apply_letter(a)?]);
        let shifted: Vec<Word> = set.iter().map(|u| ta.concat(u)).collect();
        absorbed_last = shifted.contains(&prefix);
        set = shifted;
        if !absorbed_last {
            set.push(prefix.clone());
        }
    }
    Ok(IncrementalConjugates {
        set: WordSet::from_words(set, theta.alphabet()),
        absorbed_last,
    })
}

/// Decide `v ∈ C_theta(u)` in O(|u|) time.
///
/// `v ∈ C_theta(u)` iff `v = u` or `v = theta(u[j..]) · u[..j]` for some
/// `0 <= j < |u|`. Since `theta(u[j..])` is a prefix of `theta(u)`, the
/// admissible `j` are exactly the lengths where a prefix of `u` is a suffix
/// of `v` (a KMP border chain) that also satisfy `n - j <= lcp(v, theta(u))`.
/// Every such split is checked; a valid split can occur strictly before the
/// first mismatch between `v` and `theta(u)` (e.g. u=abcad, v=dabca under
/// the identity), so checking only that split is not enough.
pub fn is_theta_conjugate(theta: &Involution, u: &Word, v: &Word) -> Result<bool> {
    theta.check_word(u)?;
    theta.check_word(v)?;
    // Theta-conjugacy preserves length.
    if u.len() != v.len() {
        return Ok(false);
    }
    if u == v {
        return Ok(true);
    }
    let n = u.len();
    let t = theta.apply_unchecked(u);
    let lcp = v
        .letters()
        .iter()
        .zip(t.letters())
        .take_while(|(a, b)| a == b)
        .count();
    if lcp == n {
        return Ok(true); // v = theta(u), split j = 0
    }
    // Border lengths j with u[..j] == v[n-j..], via the prefix function of
    // u # v (# is a separator outside any alphabet).
    let mut s: Vec<char> = Vec::with_capacity(2 * n + 1);
    s.extend_from_slice(u.letters());
    s.push('\u{0}');
    s.extend_from_slice(v.letters());
    let pi = prefix_function(&s);
    let mut j = pi[s.len() - 1];
    while j > 0 {
        debug_assert!(j < n);
        if j >= n - lcp {
            return Ok(true);
        }
        j = pi[j - 1];
    }
    Ok(false)
}

fn prefix_function(s: &[char]) -> Vec<usize> {
    let mut pi = vec![0usize; s.len()];
    for i in 1..s.len() {
        let mut k = pi[i - 1];
        while k > 0 && s[i] != s[k] {
            k = pi[k - 1];
        }
        if s[i] == s[k] {
            k += 1;
        }
        pi[i] = k;
    }
    pi
}

/// Which clause of the set-equality characterization applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EqualityCase {
    /// u = v.
    Identical,
    /// u = c, v = theta(c) with theta(c) != c.
    SingleLetterThetaPair,
    /// u = ab, v = ba with theta-fixed distinct letters a, b.
    TwoLetterSwap,
    /// {u, v} = {a^(m+1) b a^m, a^m b a^(m+1)}, m >= 1, theta-fixed a != b.
    PowerFlankPattern,
    NotEqual,
}

impl EqualityCase {
    pub fn label(&self) -> &'static str {
        match self {
            EqualityCase::Identical => "identical",
            EqualityCase::SingleLetterThetaPair => "single-letter-theta-pair",
            EqualityCase::TwoLetterSwap => "two-letter-swap",
            EqualityCase::PowerFlankPattern => "a^(m+1)ba^m-pattern",
            EqualityCase::NotEqual => "not-equal",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EqualityVerdict {
    pub equal: bool,
    pub case: EqualityCase,
    /// An element of the symmetric difference when the sets differ.
    pub witness: Option<Word>,
}

/// Decide `C_theta(u) = C_theta(v)` by the complete case analysis:
/// equality holds iff u = v, or v = theta(u) and u is a single non-fixed
/// letter, a two-letter word of distinct fixed letters, or a^(m+1) b a^m.
pub fn conjugate_sets_equal(theta: &Involution, u: &Word, v: &Word) -> Result<EqualityVerdict> {
    theta.check_word(u)?;
    theta.check_word(v)?;
    if u == v {
        return Ok(EqualityVerdict {
            equal: true,
            case: EqualityCase::Identical,
            witness: None,
        });
    }
    if u.len() == v.len() {
        if u.len() == 1 {
            let c = u.letters()[0];
            let tc = theta.apply_letter(c)?;
            if tc != c && v.letters()[0] == tc {
                return Ok(EqualityVerdict {
                    equal: true,
                    case: EqualityCase::SingleLetterThetaPair,
                    witness: None,
                });
            }
        }
        if u.len() == 2 {
            let (a, b) = (u.letters()[0], u.letters()[1]);
            if a != b
                && theta.is_fixed(a)
                && theta.is_fixed(b)
                && v.letters() == [b, a]
            {
                return Ok(EqualityVerdict {
                    equal: true,
                    case: EqualityCase::TwoLetterSwap,
                    witness: None,
                });
            }
        }
        if matches_power_flank(theta, u, v) || matches_power_flank(theta, v, u) {
            return Ok(EqualityVerdict {
                equal: true,
                case: EqualityCase::PowerFlankPattern,
                witness: None,
            });
        }
    }
    let cu = theta_conjugates(theta, u)?;
    let cv = theta_conjugates(theta, v)?;
    let diff = cu.symmetric_difference(&cv, theta.alphabet());
    debug_assert!(!diff.is_empty(), "characterization must match set equality");
    Ok(EqualityVerdict {
        equal: false,
        case: EqualityCase::NotEqual,
        witness: diff.into_iter().next(),
    })
}

/// u = a^(m+1) b a^m and v = a^m b a^(m+1) with m >= 1, fixed a != b.
fn matches_power_flank(theta: &Involution, u: &Word, v: &Word) -> bool {
    let n = u.len();
    if n < 4 || n % 2 != 0 {
        return false;
    }
    let letters = u.letters();
    let a = letters[0];
    let prefix = letters.iter().take_while(|&&c| c == a).count();
    if prefix >= n {
        return false;
    }
    let b = letters[prefix];
    let suffix = letters.iter().rev().take_while(|&&c| c == a).count();
    if prefix + suffix + 1 != n || b == a {
        return false;
    }
    let (m1, m2) = (prefix, suffix);
    m1 == m2 + 1
        && m2 >= 1
        && theta.is_fixed(a)
        && theta.is_fixed(b)
        && *v == flank_word(a, m2, b, m1)
}

fn flank_word(a: char, left: usize, b: char, right: usize) -> Word {
    let mut letters = vec![a; left];
    letters.push(b);
    letters.extend(std::iter::repeat(a).take(right));
    Word::new(letters)
}

/// A structural summary of `C_theta(w)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugateSetReport {
    pub word: Word,
    pub set: WordSet,
    pub cardinality: usize,
    pub has_primitive: bool,
    /// Theta-palindromic members, in canonical order.
    pub palindromes: WordSet,
}

pub fn conjugate_report(theta: &Involution, w: &Word) -> Result<ConjugateSetReport> {
    let set = theta_conjugates(theta, w)?;
    let mut palindromes = Vec::new();
    let mut has_primitive = false;
    for u in set.iter() {
        if theta.is_theta_palindrome(u)? {
            palindromes.push(u.clone());
        }
        if !u.is_empty() && is_primitive(u)? {
            has_primitive = true;
        }
    }
    Ok(ConjugateSetReport {
        word: w.clone(),
        cardinality: set.len(),
        has_primitive,
        palindromes: WordSet::from_words(palindromes, theta.alphabet()),
        set,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::Alphabet;

    fn theta_ab_cd() -> Involution {
        Involution::new(Alphabet::parse("abcd").unwrap(), &[('a', 'b'), ('c', 'd')]).unwrap()
    }

    fn theta_ab_c() -> Involution {
        Involution::new(Alphabet::parse("abc").unwrap(), &[('a', 'b')]).unwrap()
    }

    fn set_strings(ws: &WordSet) -> Vec<String> {
        ws.iter().map(|w| w.to_string()).collect()
    }

    fn w(s: &str) -> Word {
        Word::from_str_unchecked(s)
    }

    #[test]
    fn conjugates_worked_examples() {
        let theta = theta_ab_cd();
        let set = theta_conjugates(&theta, &w("aac")).unwrap();
        assert_eq!(set_strings(&set), vec!["aac", "daa", "dba", "dbb"]);
        let set = theta_conjugates(&theta, &w("abcd")).unwrap();
        assert_eq!(set_strings(&set), vec!["abcd", "cabc", "cdaa", "cdab"]);
    }

    #[test]
    fn conjugates_of_empty_word() {
        let theta = theta_ab_cd();
        let set = theta_conjugates(&theta, &Word::empty()).unwrap();
        assert_eq!(set.len(), 1);
        assert!(set.contains(&Word::empty()));
    }

    #[test]
    fn incremental_matches_direct_and_reports_palindrome_criterion() {
        let theta = theta_ab_c();
        // bccb is not a theta-palindrome: C contains bccb as an extra element.
        let inc = theta_conjugates_incremental(&theta, &w("bccb")).unwrap();
        assert_eq!(
            set_strings(&inc.set),
            vec!["abcc", "acbc", "acca", "accb", "bccb"]
        );
        assert!(!inc.absorbed_last);
        // abcab is a theta-palindrome: C_theta(abcab) = theta(b) C_theta(abca).
        let inc = theta_conjugates_incremental(&theta, &w("abcab")).unwrap();
        assert_eq!(
            set_strings(&inc.set),
            vec!["aabca", "ababc", "abcaa", "abcab"]
        );
        assert!(inc.absorbed_last);
    }

    #[test]
    fn single_letter_has_two_splits() {
        let theta = theta_ab_cd();
        let set = theta_conjugates(&theta, &w("c")).unwrap();
        assert_eq!(set_strings(&set), vec!["c", "d"]);
    }

    #[test]
    fn membership_worked_examples() {
        let theta = theta_ab_cd();
        assert!(is_theta_conjugate(&theta, &w("aac"), &w("dba")).unwrap());
        assert!(!is_theta_conjugate(&theta, &w("aac"), &w("baa")).unwrap());
    }

    #[test]
    fn membership_regression_split_before_first_mismatch() {
        // Valid split occurs before the first mismatch between v and theta(u);
        // an algorithm that checks only the first-mismatch split answers false.
        let theta = Involution::identity(Alphabet::parse("abcd").unwrap());
        assert!(is_theta_conjugate(&theta, &w("abcad"), &w("dabca")).unwrap());
    }

    #[test]
    fn membership_unequal_lengths_is_false() {
        let theta = theta_ab_cd();
        assert!(!is_theta_conjugate(&theta, &w("aac"), &w("aacc")).unwrap());
    }

    #[test]
    fn membership_agrees_with_all_splits_oracle_exhaustively() {
        let alphabet = Alphabet::parse("ab").unwrap();
        let thetas = [
            Involution::identity(alphabet.clone()),
            Involution::new(alphabet.clone(), &[('a', 'b')]).unwrap(),
        ];
        for theta in &thetas {
            for n in 0..=8usize {
                for uc in 0..(1usize << n) {
                    let u = word_from_code(&alphabet, n, uc);
                    let set = theta_conjugates(theta, &u).unwrap();
                    for vc in 0..(1usize << n) {
                        let v = word_from_code(&alphabet, n, vc);
                        assert_eq!(
                            is_theta_conjugate(theta, &u, &v).unwrap(),
                            set.contains(&v),
                            "u={u} v={v}"
                        );
                    }
                }
            }
        }
    }

    fn word_from_code(alphabet: &Alphabet, n: usize, code: usize) -> Word {
        Word::new((0..n).map(|i| alphabet.letters()[(code >> i) & 1]).collect())
    }

    #[test]
    fn set_equality_cases() {
        let theta = theta_ab_cd();
        let verdict = conjugate_sets_equal(&theta, &w("a"), &w("b")).unwrap();
        assert!(verdict.equal);
        assert_eq!(verdict.case, EqualityCase::SingleLetterThetaPair);

        let id = Involution::identity(Alphabet::parse("ab").unwrap());
        let verdict = conjugate_sets_equal(&id, &w("aaba"), &w("abaa")).unwrap();
        assert!(verdict.equal);
        assert_eq!(verdict.case, EqualityCase::PowerFlankPattern);

        let theta = Involution::new(Alphabet::parse("abc").unwrap(), &[('a', 'b')]).unwrap();
        let verdict = conjugate_sets_equal(&theta, &w("ca"), &w("bc")).unwrap();
        assert!(!verdict.equal);
        assert_eq!(verdict.case, EqualityCase::NotEqual);
        assert_eq!(verdict.witness.unwrap().to_string(), "cb");
    }

    #[test]
    fn set_equality_two_letter_swap() {
        let id = Involution::identity(Alphabet::parse("ab").unwrap());
        let verdict = conjugate_sets_equal(&id, &w("ab"), &w("ba")).unwrap();
        assert!(verdict.equal);
        assert_eq!(verdict.case, EqualityCase::TwoLetterSwap);
    }

    #[test]
    fn classical_conjugates_examples() {
        let alphabet = Alphabet::parse("abc").unwrap();
        let set = classical_conjugates(&alphabet, &w("abc"));
        assert_eq!(set_strings(&set), vec!["abc", "bca", "cab"]);
        let set = classical_conjugates(&alphabet, &w("aa"));
        assert_eq!(set_strings(&set), vec!["aa"]);
        let set = classical_conjugates(&alphabet, &w("abab"));
        assert_eq!(set_strings(&set), vec!["abab", "baba"]);
        let set = classical_conjugates(&alphabet, &Word::empty());
        assert_eq!(set.len(), 1);
    }

    #[test]
    fn cardinality_bound_and_recurrence_consistency() {
        let alphabet = Alphabet::parse("ab").unwrap();
        let thetas = [
            Involution::identity(alphabet.clone()),
            Involution::new(alphabet.clone(), &[('a', 'b')]).unwrap(),
        ];
        for theta in &thetas {
            for n in 0..=10usize {
                for code in 0..(1usize << n) {
                    let word = word_from_code(&alphabet, n, code);
                    let direct = theta_conjugates(theta, &word).unwrap();
                    assert!(direct.len() <= n + 1);
                    let inc = theta_conjugates_incremental(theta, &word).unwrap();
                    assert_eq!(direct, inc.set);
                }
            }
        }
    }

    #[test]
    fn subset_law_and_palindrome_criterion() {
        // theta(v) C_theta(u) ⊆ C_theta(uv); absorption iff ua is a
        // theta-palindrome.
        let alphabet = Alphabet::parse("ab").unwrap();
        let theta = Involution::new(alphabet.clone(), &[('a', 'b')]).unwrap();
        for n in 1..=8usize {
            for code in 0..(1usize << n) {
                let word = word_from_code(&alphabet, n, code);
                for cut in 0..n {
                    let (u, v) = word.split_at(cut);
                    if v.is_empty() {
                        continue;
                    }
                    let tv = theta.apply(&v).unwrap();
                    let cu = theta_conjugates(&theta, &u).unwrap();
                    let cuv = theta_conjugates(&theta, &word).unwrap();
                    for x in cu.iter() {
                        assert!(cuv.contains(&tv.concat(x)));
                    }
                }
                // criterion at the last letter
                let inc = theta_conjugates_incremental(&theta, &word).unwrap();
                assert_eq!(
                    inc.absorbed_last,
                    theta.is_theta_palindrome(&word).unwrap(),
                    "word={word}"
                );
            }
        }
    }

    #[test]
    fn power_word_equation_small_search() {
        // If every member of C_theta(w) is non-primitive and a^n is a member
        // (n >= 2), then w = a^n and theta(a) = a.
        let alphabet = Alphabet::parse("ab").unwrap();
        let thetas = [
            Involution::identity(alphabet.clone()),
            Involution::new(alphabet.clone(), &[('a', 'b')]).unwrap(),
        ];
        for theta in &thetas {
            for n in 2..=9usize {
                for code in 0..(1usize << n) {
                    let word = word_from_code(&alphabet, n, code);
                    let set = theta_conjugates(theta, &word).unwrap();
                    if set.iter().any(|u| is_primitive(u).unwrap()) {
                        continue;
                    }
                    for &a in alphabet.letters() {
                        let power = Word::new(vec![a; n]);
                        if set.contains(&power) {
                            assert_eq!(word, power);
                            assert!(theta.is_fixed(a));
                        }
                    }
                }
            }
        }
    }
}
