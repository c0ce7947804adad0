//! Deciding conjugate-freeness of a regular language. The procedure needs
//! the language to contain no theta-palindrome; all three verdicts shown.

use theta_conjugacy::automata::{
    contains_theta_palindrome, decide_theta_conjugate_freeness, dfa_from_words,
    FreenessVerdict, DEFAULT_STATE_BUDGET,
};
use theta_conjugacy::words::{Alphabet, Involution, Word};

fn main() -> theta_conjugacy::Result<()> {
    let alphabet = Alphabet::parse("abcd")?;
    let theta = Involution::new(alphabet.clone(), &[('a', 'b'), ('c', 'd')])?;
    let w = |s: &str| Word::from_str_unchecked(s);

    let cases: Vec<(&str, Vec<Word>)> = vec![
        ("{aac}", vec![w("aac")]),
        ("{aac, daa}", vec![w("aac"), w("daa")]),
        ("{aac, dd}", vec![w("aac"), w("dd")]),
    ];
    for (name, words) in cases {
        let m = dfa_from_words(&alphabet, &words)?;
        match decide_theta_conjugate_freeness(&theta, &m, DEFAULT_STATE_BUDGET)? {
            FreenessVerdict::Free => println!("{name}: free"),
            FreenessVerdict::NotFree {
                witness_pair: (a, b),
            } => println!("{name}: not free, {b} is a conjugate of {a}"),
            FreenessVerdict::PreconditionFailed { palindrome_witness } => {
                println!("{name}: contains the theta-palindrome {palindrome_witness}, undecided")
            }
        }
    }

    // the palindrome search alone, on an infinite language
    let alphabet = Alphabet::parse("ab")?;
    let theta = Involution::new(alphabet.clone(), &[('a', 'b')])?;
    // a(a|b)*b: every a^n b^n member is a theta-palindrome
    let m = theta_conjugacy::automata::Dfa::new(
        alphabet,
        vec![vec![1, 2], vec![1, 3], vec![2, 2], vec![1, 3]],
        0,
        [3].into_iter().collect(),
    )?;
    println!(
        "shortest theta-palindrome in a(a|b)*b: {:?}",
        contains_theta_palindrome(&theta, &m)?.map(|w| w.to_string())
    );
    Ok(())
}
