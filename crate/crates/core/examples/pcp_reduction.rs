//! Encoding Post correspondence instances as context-free grammars whose
//! conjugate-freeness mirrors solvability: a solution index sequence shows
//! up as a pair of bracketed words that are theta-images of each other.

use theta_conjugacy::grammars::{find_conjugate_pair, parse_pcp, pcp_to_grammar, EnumLimits};
use theta_conjugacy::words::{Alphabet, Involution};

fn main() -> theta_conjugacy::Result<()> {
    let base = Involution::identity(Alphabet::parse("ab")?);
    let limits = EnumLimits::default();

    let solvable = parse_pcp("U: ab b\nV: a bb\n")?;
    let (g, theta) = pcp_to_grammar(&solvable, &base)?;
    println!("solvable instance U=(ab, b), V=(a, bb):");
    match find_conjugate_pair(&theta, &g, 8, 50, &limits)? {
        Some((w1, w2)) => {
            println!("  violating pair {w1} / {w2}");
            assert_eq!(theta.apply(&w1)?, w2);
        }
        None => println!("  no pair found"),
    }

    let unsolvable = parse_pcp("U: a\nV: b\n")?;
    let (g, theta) = pcp_to_grammar(&unsolvable, &base)?;
    println!("unsolvable instance U=(a), V=(b):");
    match find_conjugate_pair(&theta, &g, 10, 60, &limits)? {
        Some((w1, w2)) => println!("  violating pair {w1} / {w2}"),
        None => println!("  no pair up to length 10"),
    }
    Ok(())
}
