//! When do two distinct words share the same conjugate set? Only three
//! shapes can: a single non-fixed letter against its complement, two fixed
//! letters swapped, and the a^(m+1) b a^m pattern with fixed letters.

use theta_conjugacy::conjugacy::conjugate_sets_equal;
use theta_conjugacy::words::{Alphabet, Involution};

fn main() -> theta_conjugacy::Result<()> {
    let alphabet = Alphabet::parse("abc")?;
    let theta = Involution::new(alphabet.clone(), &[('a', 'b')])?;

    let pairs = [
        ("a", "b"),     // single-letter pair
        ("ca", "ac"),   // two letters, but only one of them fixed
        ("aab", "aab"), // identical
        ("ab", "aa"),   // conjugates, but different sets
    ];
    for (u, v) in pairs {
        let verdict = conjugate_sets_equal(&theta, &alphabet.parse_word(u)?, &alphabet.parse_word(v)?)?;
        print!("C({u}) = C({v})? {} ({})", verdict.equal, verdict.case.label());
        match verdict.witness {
            Some(w) => println!(", differs at {w}"),
            None => println!(),
        }
    }

    // the power-flank shape under a fixed-letter involution
    let theta = Involution::identity(alphabet.clone());
    let u = alphabet.parse_word("aabaa")?; // wrong shape: a^2 b a^2
    let v = theta.apply(&u)?;
    let verdict = conjugate_sets_equal(&theta, &u, &v)?;
    println!("C(aabaa) = C({v})? {} ({})", verdict.equal, verdict.case.label());

    let u = alphabet.parse_word("aaba")?; // a^2 b a^1
    let v = theta.apply(&u)?;
    let verdict = conjugate_sets_equal(&theta, &u, &v)?;
    println!("C(aaba) = C({v})? {} ({})", verdict.equal, verdict.case.label());
    Ok(())
}
