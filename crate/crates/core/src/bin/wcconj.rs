//! Command-line front end. One subcommand per library operation; output is
//! line-oriented (or json-lines with --format json-lines), deterministic,
//! in canonical word order. Exit codes: 0 success, 1 domain error, 2 usage.

use std::collections::HashSet;
use std::fs;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use theta_conjugacy::automata::{
    decide_theta_conjugate_freeness, parse_dfa, theta_conjugate_closure_dfa, FreenessVerdict,
    DEFAULT_STATE_BUDGET,
};
use theta_conjugacy::conjugacy::{conjugate_sets_equal, is_theta_conjugate, theta_conjugates};
use theta_conjugacy::error::Result;
use theta_conjugacy::grammars::{
    enumerate_bounded, find_conjugate_pair, parse_grammar, parse_pcp, pcp_to_grammar,
    reverse_grammar, wc_conjugate_grammar, EnumLimits,
};
use theta_conjugacy::iterated::{
    closure_set, closure_size, iterate_conjugates, stabilization_index, DEFAULT_SIZE_GUARD,
};
use theta_conjugacy::words::{Alphabet, Involution, Word};

#[derive(Parser)]
#[command(name = "wcconj", version, about = "Watson-Crick (theta-) conjugacy toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Plain,
    #[value(name = "json-lines")]
    JsonLines,
}

#[derive(Args)]
struct ThetaArgs {
    /// Involution as letter pairs, e.g. "a:b,c:d"; unmentioned letters are
    /// fixed points. Empty means the identity.
    #[arg(long, default_value = "")]
    theta: String,
    /// Alphabet as a string of letters; default: letters of --theta and the
    /// input words in order of first appearance
    #[arg(long)]
    alphabet: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// All theta-conjugates of a word
    Conj {
        #[command(flatten)]
        theta: ThetaArgs,
        word: String,
    },
    /// Is CANDIDATE a theta-conjugate of WORD?
    Member {
        #[command(flatten)]
        theta: ThetaArgs,
        word: String,
        candidate: String,
    },
    /// Do two words have the same theta-conjugate set?
    Seteq {
        #[command(flatten)]
        theta: ThetaArgs,
        u: String,
        v: String,
    },
    /// The n-fold iterated conjugate set of a word
    Iter {
        #[command(flatten)]
        theta: ThetaArgs,
        word: String,
        /// Number of iterations
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_SIZE_GUARD)]
        size_guard: usize,
    },
    /// The full iterated conjugate closure of a word
    Closure {
        #[command(flatten)]
        theta: ThetaArgs,
        word: String,
        #[arg(long, default_value_t = DEFAULT_SIZE_GUARD)]
        size_guard: usize,
    },
    /// Exact cardinality of the iterated conjugate closure
    ClosureSize {
        #[command(flatten)]
        theta: ThetaArgs,
        word: String,
    },
    /// Smallest n with C^n(w) = C^{n+1}(w)
    StabIndex {
        #[command(flatten)]
        theta: ThetaArgs,
        word: String,
        #[arg(long, default_value_t = DEFAULT_SIZE_GUARD)]
        size_guard: usize,
    },
    /// DFA for the theta-conjugate closure of a regular language
    DfaConj {
        #[command(flatten)]
        theta: ThetaArgs,
        /// DFA text file
        file: String,
    },
    /// Decide theta-conjugate-freeness of a regular language
    DfaFree {
        #[command(flatten)]
        theta: ThetaArgs,
        file: String,
    },
    /// Does the DFA accept the word?
    DfaMember { file: String, word: String },
    /// Accepted words up to a length bound
    DfaEnum {
        file: String,
        #[arg(long, default_value_t = 8)]
        maxlen: usize,
    },
    /// Words generated by a grammar, bounded
    GramEnum {
        /// Grammar text file
        file: String,
        #[arg(long, default_value_t = 8)]
        maxlen: usize,
        #[arg(long, default_value_t = 64)]
        max_steps: usize,
    },
    /// Mirror-image grammar
    GramRev { file: String },
    /// Grammar for the theta-conjugate closure of the grammar's language
    GramWc {
        #[command(flatten)]
        theta: ThetaArgs,
        file: String,
        /// Rename reserved construction symbols on clash instead of failing
        #[arg(long)]
        auto_rename: bool,
    },
    /// CFG encoding of a PCP instance (freeness <=> unsolvability)
    PcpGen {
        #[command(flatten)]
        theta: ThetaArgs,
        /// PCP instance file (lines "U: ab b" and "V: a bb")
        file: String,
    },
    /// Search a grammar's language for a theta-conjugate pair
    GramFindpair {
        #[command(flatten)]
        theta: ThetaArgs,
        file: String,
        #[arg(long, default_value_t = 8)]
        maxlen: usize,
        #[arg(long, default_value_t = 64)]
        max_steps: usize,
    },
}

enum Item {
    /// single value line
    Line(&'static str, String),
    /// multi-line block (DFA/grammar text), printed raw in plain mode
    Block(&'static str, String),
}

fn emit(items: Vec<Item>, format: Format) {
    for item in items {
        match (&item, format) {
            // stdout of pcp-gen must stay a re-parseable grammar; the
            // extended involution rides along on stderr
            (Item::Line("involution", value), Format::Plain) => {
                eprintln!("involution: {value}");
            }
            (Item::Line(_, value), Format::Plain) => println!("{value}"),
            (Item::Block(_, text), Format::Plain) => print!("{text}"),
            (Item::Line(kind, value), Format::JsonLines)
            | (Item::Block(kind, value), Format::JsonLines) => {
                println!("{}", json!({ *kind: value }));
            }
        }
    }
}

/// Alphabet: explicit flag, or letters of the theta spec and the input
/// words in first-appearance order.
fn build_theta(args: &ThetaArgs, words: &[&str]) -> Result<(Involution, Alphabet)> {
    let alphabet = match &args.alphabet {
        Some(s) => Alphabet::parse(s)?,
        None => {
            let mut seen = HashSet::new();
            let mut letters = Vec::new();
            let spec_letters = args.theta.chars().filter(|c| !":,".contains(*c));
            let word_letters = words.iter().flat_map(|w| w.chars());
            for c in spec_letters.chain(word_letters) {
                if !c.is_whitespace() && seen.insert(c) {
                    letters.push(c);
                }
            }
            Alphabet::new(letters)?
        }
    };
    let theta = Involution::parse(&args.theta, alphabet.clone())?;
    Ok((theta, alphabet))
}

fn read(path: &str) -> Result<String> {
    fs::read_to_string(path)
        .map_err(|e| theta_conjugacy::Error::Parse(format!("cannot read '{path}': {e}")))
}

fn word_lines(words: impl IntoIterator<Item = Word>) -> Vec<Item> {
    words
        .into_iter()
        .map(|w| Item::Line("word", w.to_string()))
        .collect()
}

fn run(cli: &Cli) -> Result<Vec<Item>> {
    match &cli.command {
        Command::Conj { theta, word } => {
            let (theta, alphabet) = build_theta(theta, &[word])?;
            let w = alphabet.parse_word(word)?;
            Ok(word_lines(theta_conjugates(&theta, &w)?))
        }
        Command::Member {
            theta,
            word,
            candidate,
        } => {
            let (theta, alphabet) = build_theta(theta, &[word, candidate])?;
            let w = alphabet.parse_word(word)?;
            let c = alphabet.parse_word(candidate)?;
            let verdict = is_theta_conjugate(&theta, &w, &c)?;
            Ok(vec![Item::Line("verdict", verdict.to_string())])
        }
        Command::Seteq { theta, u, v } => {
            let (theta, alphabet) = build_theta(theta, &[u, v])?;
            let u = alphabet.parse_word(u)?;
            let v = alphabet.parse_word(v)?;
            let verdict = conjugate_sets_equal(&theta, &u, &v)?;
            let mut items = vec![
                Item::Line("verdict", verdict.equal.to_string()),
                Item::Line("case", verdict.case.label().to_string()),
            ];
            if let Some(w) = verdict.witness {
                items.push(Item::Line("witness", w.to_string()));
            }
            Ok(items)
        }
        Command::Iter {
            theta,
            word,
            n,
            size_guard,
        } => {
            let (theta, alphabet) = build_theta(theta, &[word])?;
            let w = alphabet.parse_word(word)?;
            Ok(word_lines(iterate_conjugates(&theta, &w, *n, *size_guard)?))
        }
        Command::Closure {
            theta,
            word,
            size_guard,
        } => {
            let (theta, alphabet) = build_theta(theta, &[word])?;
            let w = alphabet.parse_word(word)?;
            Ok(word_lines(closure_set(&theta, &w, *size_guard)?))
        }
        Command::ClosureSize { theta, word } => {
            let (theta, alphabet) = build_theta(theta, &[word])?;
            let w = alphabet.parse_word(word)?;
            Ok(vec![Item::Line("size", closure_size(&theta, &w)?.to_string())])
        }
        Command::StabIndex {
            theta,
            word,
            size_guard,
        } => {
            let (theta, alphabet) = build_theta(theta, &[word])?;
            let w = alphabet.parse_word(word)?;
            let n = stabilization_index(&theta, &w, *size_guard)?;
            Ok(vec![Item::Line("index", n.to_string())])
        }
        Command::DfaConj { theta, file } => {
            let dfa = parse_dfa(&read(file)?)?;
            let theta = Involution::parse(&theta.theta, dfa.alphabet().clone())?;
            let closure = theta_conjugate_closure_dfa(&theta, &dfa, DEFAULT_STATE_BUDGET)?;
            Ok(vec![Item::Block("dfa", closure.to_string())])
        }
        Command::DfaFree { theta, file } => {
            let dfa = parse_dfa(&read(file)?)?;
            let theta = Involution::parse(&theta.theta, dfa.alphabet().clone())?;
            match decide_theta_conjugate_freeness(&theta, &dfa, DEFAULT_STATE_BUDGET)? {
                FreenessVerdict::Free => Ok(vec![Item::Line("verdict", "FREE".into())]),
                FreenessVerdict::NotFree {
                    witness_pair: (a, b),
                } => Ok(vec![
                    Item::Line("verdict", "NOT_FREE".into()),
                    Item::Line("witness", a.to_string()),
                    Item::Line("witness", b.to_string()),
                ]),
                FreenessVerdict::PreconditionFailed { palindrome_witness } => Ok(vec![
                    Item::Line("verdict", "PRECONDITION_FAILED".into()),
                    Item::Line("witness", palindrome_witness.to_string()),
                ]),
            }
        }
        Command::DfaMember { file, word } => {
            let dfa = parse_dfa(&read(file)?)?;
            let w = dfa.alphabet().parse_word(word)?;
            Ok(vec![Item::Line("verdict", dfa.accepts(&w)?.to_string())])
        }
        Command::DfaEnum { file, maxlen } => {
            let dfa = parse_dfa(&read(file)?)?;
            Ok(word_lines(dfa.enumerate(*maxlen)))
        }
        Command::GramEnum {
            file,
            maxlen,
            max_steps,
        } => {
            let g = parse_grammar(&read(file)?)?;
            let e = enumerate_bounded(&g, *maxlen, *max_steps, &EnumLimits::default())?;
            if e.saturated {
                eprintln!("warning: step budget reached; the list may be incomplete");
            }
            Ok(word_lines(e.words))
        }
        Command::GramRev { file } => {
            let g = parse_grammar(&read(file)?)?;
            Ok(vec![Item::Block("grammar", reverse_grammar(&g).to_string())])
        }
        Command::GramWc {
            theta,
            file,
            auto_rename,
        } => {
            let g = parse_grammar(&read(file)?)?;
            let theta = Involution::parse(&theta.theta, g.terminals().clone())?;
            let gn = wc_conjugate_grammar(&theta, &g, *auto_rename)?;
            Ok(vec![Item::Block("grammar", gn.to_string())])
        }
        Command::PcpGen { theta, file } => {
            let instance = parse_pcp(&read(file)?)?;
            let tuple_words: Vec<String> = instance
                .u_tuple
                .iter()
                .chain(instance.v_tuple.iter())
                .map(|w| w.to_string())
                .collect();
            let refs: Vec<&str> = tuple_words.iter().map(String::as_str).collect();
            let (base, _) = build_theta(theta, &refs)?;
            let (grammar, extended) = pcp_to_grammar(&instance, &base)?;
            Ok(vec![
                Item::Block("grammar", grammar.to_string()),
                Item::Line("involution", extended.spec_string()),
            ])
        }
        Command::GramFindpair {
            theta,
            file,
            maxlen,
            max_steps,
        } => {
            let g = parse_grammar(&read(file)?)?;
            let theta = Involution::parse(&theta.theta, g.terminals().clone())?;
            match find_conjugate_pair(&theta, &g, *maxlen, *max_steps, &EnumLimits::default())? {
                None => Ok(vec![Item::Line("pair", "none".into())]),
                Some((a, b)) => Ok(vec![
                    Item::Line("pair", a.to_string()),
                    Item::Line("pair", b.to_string()),
                ]),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(items) => {
            emit(items, cli.format);
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
