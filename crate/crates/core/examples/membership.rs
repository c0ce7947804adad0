//! Linear-time membership in a conjugate set, checked against the
//! all-splits definition on a case where the first mismatch misleads.

use theta_conjugacy::conjugacy::{is_theta_conjugate, theta_conjugates};
use theta_conjugacy::words::{Alphabet, Involution};

fn main() -> theta_conjugacy::Result<()> {
    let alphabet = Alphabet::parse("abcd")?;
    let theta = Involution::identity(alphabet.clone());

    // v matches theta(u) on a long prefix yet the only valid split is
    // elsewhere; a first-mismatch-only scan would answer false.
    let u = alphabet.parse_word("abcad")?;
    let v = alphabet.parse_word("dabca")?;
    println!(
        "dabca in C(abcad) under the identity: {}",
        is_theta_conjugate(&theta, &u, &v)?
    );

    let theta = Involution::new(alphabet.clone(), &[('a', 'b'), ('c', 'd')])?;
    let u = alphabet.parse_word("aac")?;
    for candidate in ["daa", "baa", "dba", "aca"] {
        let c = alphabet.parse_word(candidate)?;
        let fast = is_theta_conjugate(&theta, &u, &c)?;
        let slow = theta_conjugates(&theta, &u)?.contains(&c);
        assert_eq!(fast, slow);
        println!("{candidate} in C(aac): {fast}");
    }
    Ok(())
}
