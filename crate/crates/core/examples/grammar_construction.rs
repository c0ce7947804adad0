//! Grammar transformation for the conjugate closure: from any grammar for
//! L, build one for C_theta(L) and verify it by bounded enumeration.

use theta_conjugacy::conjugacy::theta_conjugates;
use theta_conjugacy::grammars::{enumerate_bounded, parse_grammar, wc_conjugate_grammar, EnumLimits};
use theta_conjugacy::words::{Alphabet, Involution, WordSet};

fn main() -> theta_conjugacy::Result<()> {
    let g = parse_grammar(
        "nonterminals: S\nterminals: abcd\nstart: S\nS -> a a c\nS -> a b c d\n",
    )?;
    let alphabet = Alphabet::parse("abcd")?;
    let theta = Involution::new(alphabet.clone(), &[('a', 'b'), ('c', 'd')])?;

    let gn = wc_conjugate_grammar(&theta, &g, false)?;
    println!(
        "construction: {} nonterminals, {} productions",
        gn.nonterminals().len(),
        gn.productions().len()
    );

    let limits = EnumLimits::default();
    let derived = enumerate_bounded(&gn, 4, 400, &limits)?;
    assert!(!derived.saturated);

    let mut expected = Vec::new();
    for w in enumerate_bounded(&g, 4, 50, &limits)?.words.iter() {
        expected.extend(theta_conjugates(&theta, w)?);
    }
    let expected = WordSet::from_words(expected, &alphabet);
    assert_eq!(derived.words, expected);

    println!("closure of {{aac, abcd}} via the grammar:");
    for w in derived.words.iter() {
        println!("  {w}");
    }
    Ok(())
}
