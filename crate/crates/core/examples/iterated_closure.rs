//! Iterating the conjugate operation until it stabilizes: the closure is
//! exactly the words with the same paired letter counts, and its size has
//! a closed form.

use theta_conjugacy::iterated::{
    closure_set, closure_size, iterate_conjugates, stabilization_bound, stabilization_index,
    DEFAULT_SIZE_GUARD,
};
use theta_conjugacy::words::{Alphabet, Involution};

fn main() -> theta_conjugacy::Result<()> {
    let alphabet = Alphabet::parse("abcdgh")?;
    let theta = Involution::new(alphabet.clone(), &[('a', 'b'), ('c', 'd'), ('g', 'h')])?;

    for text in ["cag", "caa"] {
        let w = alphabet.parse_word(text)?;
        for n in 0..=2 {
            let set = iterate_conjugates(&theta, &w, n, DEFAULT_SIZE_GUARD)?;
            println!("C^{n}({text}): {} words", set.len());
        }
        println!(
            "{text}: stabilizes at iteration {} (guaranteed bound {}), closure size {}",
            stabilization_index(&theta, &w, DEFAULT_SIZE_GUARD)?,
            stabilization_bound(w.len()),
            closure_size(&theta, &w)?
        );
    }

    // small alphabet, fixed letter: the closure is just letter shuffles
    // with the non-fixed positions free to flip
    let alphabet = Alphabet::parse("abe")?;
    let theta = Involution::new(alphabet.clone(), &[('a', 'b')])?;
    let w = alphabet.parse_word("aee")?;
    let closure = closure_set(&theta, &w, DEFAULT_SIZE_GUARD)?;
    println!("closure of aee ({} words):", closure.len());
    for u in closure.iter() {
        println!("  {u}");
    }
    Ok(())
}
