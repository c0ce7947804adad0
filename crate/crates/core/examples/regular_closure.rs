//! The conjugate closure of a regular language is regular: build the
//! closure DFA and compare length slices against word-level computation.

use theta_conjugacy::automata::{dfa_from_words, theta_conjugate_closure_dfa, DEFAULT_STATE_BUDGET};
use theta_conjugacy::conjugacy::theta_conjugates;
use theta_conjugacy::words::{Alphabet, Involution, Word, WordSet};

fn main() -> theta_conjugacy::Result<()> {
    let alphabet = Alphabet::parse("ab")?;
    let theta = Involution::new(alphabet.clone(), &[('a', 'b')])?;

    // infinite language (ab)*
    let m = theta_conjugacy::automata::Dfa::new(
        alphabet.clone(),
        vec![vec![1, 2], vec![2, 0], vec![2, 2]],
        0,
        [0].into_iter().collect(),
    )?;
    let closure = theta_conjugate_closure_dfa(&theta, &m, DEFAULT_STATE_BUDGET)?;
    println!(
        "closure DFA of (ab)*: {} states (minimized)",
        closure.state_count()
    );
    for k in [2usize, 4, 6] {
        let slice: Vec<Word> = closure
            .enumerate(k)
            .into_iter()
            .filter(|w| w.len() == k)
            .collect();
        let mut expected = Vec::new();
        for w in m.enumerate(k).iter().filter(|w| w.len() == k) {
            expected.extend(theta_conjugates(&theta, w)?);
        }
        let expected = WordSet::from_words(expected, &alphabet);
        assert_eq!(WordSet::from_words(slice.clone(), &alphabet), expected);
        println!("length {k}: {} words, matches the word-level sets", slice.len());
    }

    // finite language from the word-level examples
    let alphabet = Alphabet::parse("abcd")?;
    let theta = Involution::new(alphabet.clone(), &[('a', 'b'), ('c', 'd')])?;
    let m = dfa_from_words(&alphabet, &[Word::from_str_unchecked("aac")])?;
    let closure = theta_conjugate_closure_dfa(&theta, &m, DEFAULT_STATE_BUDGET)?;
    println!("closure of {{aac}}:");
    for w in closure.enumerate(3).iter() {
        println!("  {w}");
    }
    Ok(())
}
