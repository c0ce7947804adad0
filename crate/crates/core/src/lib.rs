//! Watson-Crick conjugacy of words and languages.
//!
//! An antimorphic involution theta flips a word around while complementing
//! its letters, the way the two strands of a DNA molecule relate. The
//! theta-conjugates of w are the words theta(y)x over all splits w = xy,
//! a twisted version of ordinary cyclic rotation.
//!
//! The crate covers the word-level theory (conjugate sets, a linear-time
//! membership test, when two words share a conjugate set), the iterated
//! closure with exact counting, and the language level: a DFA construction
//! for the closure of a regular language, a decision procedure for
//! conjugate-freeness, grammar transformations, and a PCP encoding showing
//! the context-free case is as hard as it gets.
//!
//! See the `examples/` directory for runnable tours of each area and the
//! `wcconj` binary for the command-line interface.

pub mod automata;
pub mod conjugacy;
pub mod error;
pub mod grammars;
pub mod iterated;
pub mod words;

pub use automata::{
    build_theta_image_dfa, contains_theta_palindrome, decide_theta_conjugate_freeness,
    dfa_from_words, parse_dfa, theta_conjugate_closure_dfa, Dfa, FreenessVerdict, Nfa,
    DEFAULT_STATE_BUDGET,
};
pub use conjugacy::{
    classical_conjugates, conjugate_report, conjugate_sets_equal, is_theta_conjugate,
    theta_conjugates, theta_conjugates_incremental, EqualityCase, EqualityVerdict,
};
pub use error::{Error, Result};
pub use grammars::{
    enumerate_bounded, find_conjugate_pair, parse_grammar, parse_pcp, pcp_to_grammar,
    reverse_grammar, wc_conjugate_grammar, EnumLimits, Enumeration, Grammar, PcpInstance,
    Production, Symbol,
};
pub use iterated::{
    closure_of_language, closure_report, closure_set, closure_size, iterate_conjugates,
    stabilization_bound, stabilization_index, PairedParikhVector, DEFAULT_SIZE_GUARD,
};
pub use words::{is_primitive, primitive_root, Alphabet, Involution, Word, WordSet};
