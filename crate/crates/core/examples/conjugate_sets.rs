//! Conjugate sets of single words: direct computation, the letter-by-letter
//! recurrence, and the palindrome absorption criterion.

use theta_conjugacy::conjugacy::{theta_conjugates, theta_conjugates_incremental};
use theta_conjugacy::words::{Alphabet, Involution, Word};

fn main() -> theta_conjugacy::Result<()> {
    let alphabet = Alphabet::parse("abcd")?;
    let theta = Involution::new(alphabet.clone(), &[('a', 'b'), ('c', 'd')])?;

    for text in ["aac", "abcd", "abcab"] {
        let w = alphabet.parse_word(text)?;
        let set = theta_conjugates(&theta, &w)?;
        println!("C({text}) has {} elements:", set.len());
        for u in set.iter() {
            println!("  {u}");
        }
    }

    // The set of ua is {ua} plus theta(a) prepended to each conjugate of u,
    // and {ua} is absorbed exactly when ua reads as its own theta image.
    let w = alphabet.parse_word("abcab")?;
    let inc = theta_conjugates_incremental(&theta, &w)?;
    println!(
        "abcab is a theta-palindrome: {} (last step absorbed: {})",
        theta.is_theta_palindrome(&w)?,
        inc.absorbed_last
    );

    // |C(w)| <= |w| + 1, with equality forcing a primitive member
    let w = Word::from_str_unchecked("aabb");
    let set = theta_conjugates(&theta, &w)?;
    println!("|C(aabb)| = {} <= {}", set.len(), w.len() + 1);
    Ok(())
}
