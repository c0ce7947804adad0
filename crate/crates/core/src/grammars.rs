//! Unrestricted/context-free grammars, a bounded derivation enumerator,
//! a grammar transformation that generates the theta-conjugate closure of
//! the input grammar's language, and a PCP-to-CFG reduction producing
//! grammars whose theta-conjugate-freeness encodes PCP solvability.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use crate::conjugacy::is_theta_conjugate;
use crate::error::{Error, Result};
use crate::words::{Alphabet, Involution, Word, WordSet};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    Terminal(char),
    Nonterminal(String),
}

impl Symbol {
    pub fn nt(name: &str) -> Symbol {
        Symbol::Nonterminal(name.to_string())
    }

    fn token(&self) -> String {
        match self {
            Symbol::Terminal(c) => c.to_string(),
            Symbol::Nonterminal(n) => n.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Production {
    pub lhs: Vec<Symbol>,
    pub rhs: Vec<Symbol>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grammar {
    nonterminals: Vec<String>,
    terminals: Alphabet,
    start: String,
    productions: Vec<Production>,
}

impl Grammar {
    pub fn new(
        nonterminals: Vec<String>,
        terminals: Alphabet,
        start: String,
        productions: Vec<Production>,
    ) -> Result<Self> {
        let nt_set: HashSet<&String> = nonterminals.iter().collect();
        if nt_set.len() != nonterminals.len() {
            return Err(Error::Parse("duplicate nonterminal declaration".into()));
        }
        for n in &nonterminals {
            if n.is_empty() {
                return Err(Error::Parse("empty nonterminal name".into()));
            }
            let mut chars = n.chars();
            if let (Some(c), None) = (chars.next(), chars.next()) {
                if terminals.contains(c) {
                    return Err(Error::Parse(format!(
                        "nonterminal '{n}' collides with a terminal"
                    )));
                }
            }
        }
        if !nt_set.contains(&start) {
            return Err(Error::Parse(format!("start symbol '{start}' not declared")));
        }
        let g = Grammar {
            nonterminals,
            terminals,
            start,
            productions,
        };
        for p in &g.productions {
            if p.lhs.is_empty() {
                return Err(Error::Parse("empty production lhs".into()));
            }
            if !p.lhs.iter().any(|s| matches!(s, Symbol::Nonterminal(_))) {
                return Err(Error::Parse(
                    "production lhs needs at least one nonterminal".into(),
                ));
            }
            for s in p.lhs.iter().chain(p.rhs.iter()) {
                match s {
                    Symbol::Terminal(c) if !g.terminals.contains(*c) => {
                        return Err(Error::UnknownLetter(*c));
                    }
                    Symbol::Nonterminal(n) if !g.nonterminals.contains(n) => {
                        return Err(Error::Parse(format!("undeclared nonterminal '{n}'")));
                    }
                    _ => {}
                }
            }
        }
        Ok(g)
    }

    pub fn nonterminals(&self) -> &[String] {
        &self.nonterminals
    }

    pub fn terminals(&self) -> &Alphabet {
        &self.terminals
    }

    pub fn start(&self) -> &str {
        &self.start
    }

    pub fn productions(&self) -> &[Production] {
        &self.productions
    }

    pub fn is_context_free(&self) -> bool {
        self.productions
            .iter()
            .all(|p| p.lhs.len() == 1 && matches!(p.lhs[0], Symbol::Nonterminal(_)))
    }
}

impl fmt::Display for Grammar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "nonterminals: {}", self.nonterminals.join(" "))?;
        writeln!(f, "terminals: {}", self.terminals)?;
        writeln!(f, "start: {}", self.start)?;
        for p in &self.productions {
            let lhs: Vec<String> = p.lhs.iter().map(Symbol::token).collect();
            let rhs = if p.rhs.is_empty() {
                "@".to_string()
            } else {
                p.rhs
                    .iter()
                    .map(Symbol::token)
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            writeln!(f, "{} -> {}", lhs.join(" "), rhs)?;
        }
        Ok(())
    }
}

/// Parse the line-based grammar text format; `@` is the empty rhs.
pub fn parse_grammar(text: &str) -> Result<Grammar> {
    let mut nonterminals: Option<Vec<String>> = None;
    let mut terminals: Option<Alphabet> = None;
    let mut start: Option<String> = None;
    let mut rule_lines: Vec<String> = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("nonterminals:") {
            nonterminals = Some(rest.split_whitespace().map(str::to_string).collect());
        } else if let Some(rest) = line.strip_prefix("terminals:") {
            terminals = Some(Alphabet::parse(rest.trim())?);
        } else if let Some(rest) = line.strip_prefix("start:") {
            start = Some(rest.trim().to_string());
        } else if line.contains("->") {
            rule_lines.push(line.to_string());
        } else {
            return Err(Error::Parse(format!("unrecognized line '{line}'")));
        }
    }
    let nonterminals =
        nonterminals.ok_or_else(|| Error::Parse("missing nonterminals line".into()))?;
    let terminals = terminals.ok_or_else(|| Error::Parse("missing terminals line".into()))?;
    let start = start.ok_or_else(|| Error::Parse("missing start line".into()))?;
    let nt_set: HashSet<&String> = nonterminals.iter().collect();
    let classify = |tok: &str| -> Result<Symbol> {
        if nt_set.contains(&tok.to_string()) {
            return Ok(Symbol::Nonterminal(tok.to_string()));
        }
        let mut chars = tok.chars();
        if let (Some(c), None) = (chars.next(), chars.next()) {
            if terminals.contains(c) {
                return Ok(Symbol::Terminal(c));
            }
        }
        Err(Error::Parse(format!("unknown symbol '{tok}'")))
    };
    let mut productions = Vec::new();
    for line in rule_lines {
        let (lhs_text, rhs_text) = line
            .split_once("->")
            .ok_or_else(|| Error::Parse(format!("bad rule '{line}'")))?;
        let lhs: Vec<Symbol> = lhs_text
            .split_whitespace()
            .map(&classify)
            .collect::<Result<_>>()?;
        let rhs_text = rhs_text.trim();
        let rhs: Vec<Symbol> = if rhs_text == "@" {
            Vec::new()
        } else {
            rhs_text
                .split_whitespace()
                .map(&classify)
                .collect::<Result<_>>()?
        };
        productions.push(Production { lhs, rhs });
    }
    Grammar::new(nonterminals, terminals, start, productions)
}

/// Caps for the derivation enumerator.
#[derive(Debug, Clone)]
pub struct EnumLimits {
    /// Unrestricted sentential forms longer than max_len + form_slack are
    /// pruned; rewriting can shrink forms again, so this trades
    /// completeness for termination.
    pub form_slack: usize,
    /// Hard cap on distinct sentential forms ever enqueued.
    pub frontier_budget: usize,
}

impl Default for EnumLimits {
    fn default() -> Self {
        EnumLimits {
            form_slack: 8,
            frontier_budget: 1_000_000,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Enumeration {
    pub words: WordSet,
    /// True when the step budget cut the search off with live sentential
    /// forms remaining: the word list may be an under-approximation.
    pub saturated: bool,
}

/// Breadth-first search over sentential forms, up to `max_steps` rewriting
/// steps, collecting terminal words of length <= max_len.
///
/// Exact for context-free grammars once `saturated` comes back false
/// (terminal counts never shrink, so pruning on them is safe). For
/// unrestricted grammars the form-length cap makes this an
/// under-approximation in general.
pub fn enumerate_bounded(
    g: &Grammar,
    max_len: usize,
    max_steps: usize,
    limits: &EnumLimits,
) -> Result<Enumeration> {
    // Intern symbols: ids [0, k) are terminals in alphabet order.
    let k = g.terminals.len();
    let mut ids: HashMap<Symbol, u32> = HashMap::new();
    for (i, &c) in g.terminals.letters().iter().enumerate() {
        ids.insert(Symbol::Terminal(c), i as u32);
    }
    for (i, n) in g.nonterminals.iter().enumerate() {
        ids.insert(Symbol::Nonterminal(n.clone()), (k + i) as u32);
    }
    let encode = |syms: &[Symbol]| -> Vec<u32> { syms.iter().map(|s| ids[s]).collect() };
    let rules: Vec<(Vec<u32>, Vec<u32>)> = g
        .productions
        .iter()
        .map(|p| (encode(&p.lhs), encode(&p.rhs)))
        .collect();
    let cfg = g.is_context_free();

    let keep = |form: &[u32]| -> bool {
        if cfg {
            form.iter().filter(|&&s| (s as usize) < k).count() <= max_len
        } else {
            form.len() <= max_len + limits.form_slack
        }
    };

    let start = vec![ids[&Symbol::nt(&g.start)]];
    let mut visited: HashSet<Vec<u32>> = HashSet::new();
    let mut frontier: VecDeque<Vec<u32>> = VecDeque::new();
    let mut words: Vec<Word> = Vec::new();
    visited.insert(start.clone());
    frontier.push_back(start);

    let mut saturated = false;
    for _ in 0..max_steps {
        if frontier.is_empty() {
            break;
        }
        let mut next = VecDeque::new();
        while let Some(form) = frontier.pop_front() {
            for (lhs, rhs) in &rules {
                if lhs.len() > form.len() {
                    continue;
                }
                for pos in 0..=(form.len() - lhs.len()) {
                    if &form[pos..pos + lhs.len()] != lhs.as_slice() {
                        continue;
                    }
                    let mut rewritten =
                        Vec::with_capacity(form.len() - lhs.len() + rhs.len());
                    rewritten.extend_from_slice(&form[..pos]);
                    rewritten.extend_from_slice(rhs);
                    rewritten.extend_from_slice(&form[pos + lhs.len()..]);
                    if !keep(&rewritten) || visited.contains(&rewritten) {
                        continue;
                    }
                    if visited.len() >= limits.frontier_budget {
                        return Err(Error::FrontierBudgetExceeded(limits.frontier_budget));
                    }
                    if rewritten.iter().all(|&s| (s as usize) < k) {
                        if rewritten.len() <= max_len {
                            words.push(Word::new(
                                rewritten
                                    .iter()
                                    .map(|&s| g.terminals.letters()[s as usize])
                                    .collect(),
                            ));
                        }
                        visited.insert(rewritten);
                    } else {
                        visited.insert(rewritten.clone());
                        next.push_back(rewritten);
                    }
                }
            }
        }
        frontier = next;
    }
    if !frontier.is_empty() {
        saturated = true;
    }
    Ok(Enumeration {
        words: WordSet::from_words(words, &g.terminals),
        saturated,
    })
}

/// Reverse every production sidewise; the generated language is the
/// mirror image of the original.
pub fn reverse_grammar(g: &Grammar) -> Grammar {
    let productions = g
        .productions
        .iter()
        .map(|p| Production {
            lhs: p.lhs.iter().rev().cloned().collect(),
            rhs: p.rhs.iter().rev().cloned().collect(),
        })
        .collect();
    Grammar {
        nonterminals: g.nonterminals.clone(),
        terminals: g.terminals.clone(),
        start: g.start.clone(),
        productions,
    }
}

const FLAVORS: [char; 7] = ['o', 'I', 'D', 'R', 'T', 'F', 'N'];

/// A grammar generating `C_theta(L(g))`.
///
/// Internally works on the mirror grammar: a split w = xy of some word in
/// L(g) appears reversed there, so emitting theta(x-part) followed by the
/// unwound y-part yields exactly theta(y)x. Marker nonterminals walk the
/// encoded word, complementing a prefix in place and rotating the rest to
/// the back one letter at a time.
///
/// Reserved nonterminal names (S', T, T1..T4 and X_c^f for each terminal c
/// and flavor f in o I D R T F N) clash with `g`'s names either as an
/// error or, with `auto_rename`, by suffixing a numeric discriminator.
pub fn wc_conjugate_grammar(theta: &Involution, g: &Grammar, auto_rename: bool) -> Result<Grammar> {
    for &c in g.terminals.letters() {
        if !theta.alphabet().contains(c) {
            return Err(Error::AlphabetMismatch(c));
        }
    }
    for &c in theta.alphabet().letters() {
        if !g.terminals.contains(c) {
            return Err(Error::AlphabetMismatch(c));
        }
    }
    let rg = reverse_grammar(g);
    // names already in use: the input grammar's plus fresh ones as assigned
    let mut taken: HashSet<String> = rg.nonterminals.iter().cloned().collect();
    let mut fresh = |base: String| -> Result<String> {
        if taken.insert(base.clone()) {
            return Ok(base);
        }
        if !auto_rename {
            return Err(Error::NonterminalClash(base));
        }
        let mut i = 1usize;
        loop {
            let candidate = format!("{base}{i}");
            if taken.insert(candidate.clone()) {
                return Ok(candidate);
            }
            i += 1;
        }
    };

    let s_new = fresh("S'".into())?;
    let t1 = fresh("T1".into())?;
    let t2 = fresh("T2".into())?;
    let t3 = fresh("T3".into())?;
    let t4 = fresh("T4".into())?;
    let t = fresh("T".into())?;
    let mut x: HashMap<(char, char), String> = HashMap::new();
    for &a in g.terminals.letters() {
        for f in FLAVORS {
            x.insert((a, f), fresh(format!("X_{a}^{f}"))?);
        }
    }
    drop(fresh);
    let xs = |a: char, f: char| Symbol::nt(&x[&(a, f)]);
    let nt = |n: &str| Symbol::nt(n);
    // Z = T1 T3, Z' = T1 T2, Z'' = T1 T4, spliced inline.
    let z = || vec![nt(&t1), nt(&t3)];
    let z1 = || vec![nt(&t1), nt(&t2)];
    let z2 = || vec![nt(&t1), nt(&t4)];
    let cat = |parts: &[&[Symbol]]| -> Vec<Symbol> {
        parts.iter().flat_map(|p| p.iter().cloned()).collect()
    };

    let mut productions: Vec<Production> = Vec::new();
    let mut rule = |lhs: Vec<Symbol>, rhs: Vec<Symbol>| {
        productions.push(Production { lhs, rhs });
    };

    // start bracketing
    rule(vec![nt(&s_new)], vec![nt(&t1), nt(&rg.start), nt(&t2)]);
    rule(vec![nt(&s_new)], vec![nt(&t1), nt(&rg.start), nt(&t)]);
    // image of the mirror grammar with each terminal a encoded as X_a^o
    let h = |syms: &[Symbol]| -> Vec<Symbol> {
        syms.iter()
            .map(|s| match s {
                Symbol::Terminal(c) => xs(*c, 'o'),
                other => other.clone(),
            })
            .collect()
    };
    for p in &rg.productions {
        rule(h(&p.lhs), h(&p.rhs));
    }
    let letters: Vec<char> = g.terminals.letters().to_vec();
    for &a in &letters {
        rule(vec![nt(&t1), xs(a, 'o')], vec![xs(a, 'N'), nt(&t1)]);
        rule(vec![xs(a, 'o'), nt(&t2)], vec![nt(&t3), xs(a, 'F')]);
        rule(vec![xs(a, 'o'), nt(&t3)], vec![nt(&t3), xs(a, 'o')]);
        rule(vec![xs(a, 'o'), nt(&t)], vec![nt(&t4), xs(a, 'o')]);
    }
    for &a in &letters {
        let image = theta.apply_letter(a)?;
        rule(
            cat(&[&[xs(a, 'N')], &z()]),
            cat(&[&z(), &[Symbol::Terminal(image)]]),
        );
    }
    for &a in &letters {
        let image = theta.apply_letter(a)?;
        rule(
            cat(&[&[xs(a, 'N')], &z1()]),
            cat(&[&z1(), &[Symbol::Terminal(image)]]),
        );
    }
    rule(z(), vec![]);
    rule(z1(), vec![]);
    rule(z2(), vec![]);
    for &a in &letters {
        rule(cat(&[&z2(), &[xs(a, 'o')]]), cat(&[&[xs(a, 'D')], &z()]));
    }
    for &a in &letters {
        rule(
            cat(&[&[xs(a, 'D')], &z()]),
            cat(&[&z(), &[Symbol::Terminal(a)]]),
        );
    }
    for &a in &letters {
        rule(cat(&[&z(), &[xs(a, 'o')]]), cat(&[&z(), &[xs(a, 'I')]]));
    }
    for &a1 in &letters {
        for &a2 in &letters {
            rule(
                cat(&[&z(), &[xs(a1, 'I'), xs(a2, 'o')]]),
                cat(&[&[xs(a1, 'I')], &z(), &[xs(a2, 'R')]]),
            );
        }
    }
    for &a1 in &letters {
        for &a2 in &letters {
            rule(
                cat(&[&z(), &[xs(a1, 'R'), xs(a2, 'o')]]),
                cat(&[&[xs(a1, 'R')], &z(), &[xs(a2, 'R')]]),
            );
        }
    }
    for &a1 in &letters {
        for &a2 in &letters {
            rule(
                cat(&[&z(), &[xs(a1, 'R'), xs(a2, 'F')]]),
                cat(&[&[xs(a2, 'T')], &z(), &[xs(a1, 'F')]]),
            );
        }
    }
    for &a1 in &letters {
        for &a2 in &letters {
            rule(
                cat(&[&[xs(a1, 'R'), xs(a2, 'T')], &z()]),
                cat(&[&[xs(a2, 'T')], &z(), &[xs(a1, 'o')]]),
            );
        }
    }
    for &a1 in &letters {
        for &a2 in &letters {
            rule(
                cat(&[&[xs(a1, 'I'), xs(a2, 'T')], &z()]),
                cat(&[&[xs(a2, 'D')], &z(), &[xs(a1, 'I')]]),
            );
        }
    }
    for &a1 in &letters {
        for &a2 in &letters {
            rule(
                cat(&[&z(), &[xs(a1, 'I'), xs(a2, 'F')]]),
                cat(&[&[xs(a2, 'D'), xs(a1, 'D')], &z()]),
            );
        }
    }

    let mut nonterminals = vec![s_new.clone(), t1, t2, t3, t4, t];
    for &a in &letters {
        for f in FLAVORS {
            nonterminals.push(x[&(a, f)].clone());
        }
    }
    nonterminals.extend(rg.nonterminals.iter().cloned());
    Grammar::new(nonterminals, g.terminals.clone(), s_new, productions)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PcpInstance {
    pub u_tuple: Vec<Word>,
    pub v_tuple: Vec<Word>,
}

impl PcpInstance {
    pub fn new(u_tuple: Vec<Word>, v_tuple: Vec<Word>) -> Result<Self> {
        if u_tuple.is_empty() || u_tuple.len() != v_tuple.len() {
            return Err(Error::Parse(
                "PCP needs two non-empty tuples of equal length".into(),
            ));
        }
        Ok(PcpInstance { u_tuple, v_tuple })
    }

    pub fn len(&self) -> usize {
        self.u_tuple.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Parse the two-line `U: ab b` / `V: a bb` PCP instance format.
pub fn parse_pcp(text: &str) -> Result<PcpInstance> {
    let mut u: Option<Vec<Word>> = None;
    let mut v: Option<Vec<Word>> = None;
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let words = |rest: &str| -> Vec<Word> {
            rest.split_whitespace()
                .map(Word::from_str_unchecked)
                .collect()
        };
        if let Some(rest) = line.strip_prefix("U:") {
            u = Some(words(rest));
        } else if let Some(rest) = line.strip_prefix("V:") {
            v = Some(words(rest));
        } else {
            return Err(Error::Parse(format!("unrecognized line '{line}'")));
        }
    }
    let u = u.ok_or_else(|| Error::Parse("missing U: line".into()))?;
    let v = v.ok_or_else(|| Error::Parse("missing V: line".into()))?;
    PcpInstance::new(u, v)
}

/// Encode a PCP instance as a CFG whose theta-conjugate-freeness decides
/// solvability: S derives #u_{i1}..u_{ik} a_{ik}..a_{i1}# and
/// $a_{j1}..a_{jm} theta(v_{jm})..theta(v_{j1})$; a matching index
/// sequence makes the two branches theta-images of each other.
///
/// Index markers a_0..a_{n-1} are the digit characters '0'..'9' (so at
/// most 10 pairs); the extension sets theta($) = # and fixes every digit.
pub fn pcp_to_grammar(
    instance: &PcpInstance,
    theta_base: &Involution,
) -> Result<(Grammar, Involution)> {
    let n = instance.len();
    if n > 10 {
        return Err(Error::Parse(
            "at most 10 word pairs are supported (digit index markers)".into(),
        ));
    }
    let base = theta_base.alphabet();
    let mut markers = vec!['#', '$'];
    for i in 0..n {
        markers.push(char::from_digit(i as u32, 10).expect("i < 10"));
    }
    for &m in &markers {
        if base.contains(m) {
            return Err(Error::MarkerClash(m));
        }
    }
    let mut letters: Vec<char> = base.letters().to_vec();
    letters.extend(markers.iter().copied());
    let alphabet = Alphabet::new(letters)?;
    let mut pairs: Vec<(char, char)> = vec![('#', '$')];
    for &c in base.letters() {
        let image = theta_base.apply_letter(c)?;
        if c <= image {
            pairs.push((c, image));
        }
    }
    let theta = Involution::new(alphabet.clone(), &pairs)?;

    for w in instance.u_tuple.iter().chain(instance.v_tuple.iter()) {
        for &c in w.letters() {
            if !base.contains(c) {
                return Err(Error::UnknownLetter(c));
            }
        }
    }

    let word_syms = |w: &Word| -> Vec<Symbol> {
        w.letters().iter().map(|&c| Symbol::Terminal(c)).collect()
    };
    let mut productions = vec![
        Production {
            lhs: vec![Symbol::nt("S")],
            rhs: vec![
                Symbol::Terminal('#'),
                Symbol::nt("N_U"),
                Symbol::Terminal('#'),
            ],
        },
        Production {
            lhs: vec![Symbol::nt("S")],
            rhs: vec![
                Symbol::Terminal('$'),
                Symbol::nt("N_V"),
                Symbol::Terminal('$'),
            ],
        },
    ];
    // Index sequences must be non-empty: with a bare lambda alternative
    // the words ## and $$ would both be generated, and $$ is the theta
    // image of ##, spoiling freeness for every instance. So the base case
    // is one u_i a_i (resp. a_i theta(v_i)) block, not lambda.
    for (i, u) in instance.u_tuple.iter().enumerate() {
        let mut block = word_syms(u);
        block.push(Symbol::Terminal(markers[2 + i]));
        let mut rhs = block.clone();
        rhs.insert(u.len(), Symbol::nt("N_U"));
        productions.push(Production {
            lhs: vec![Symbol::nt("N_U")],
            rhs,
        });
        productions.push(Production {
            lhs: vec![Symbol::nt("N_U")],
            rhs: block,
        });
    }
    for (i, v) in instance.v_tuple.iter().enumerate() {
        let mut block = vec![Symbol::Terminal(markers[2 + i])];
        block.extend(word_syms(&theta.apply(v)?));
        let mut rhs = block.clone();
        rhs.insert(1, Symbol::nt("N_V"));
        productions.push(Production {
            lhs: vec![Symbol::nt("N_V")],
            rhs,
        });
        productions.push(Production {
            lhs: vec![Symbol::nt("N_V")],
            rhs: block,
        });
    }
    let grammar = Grammar::new(
        vec!["S".into(), "N_U".into(), "N_V".into()],
        alphabet,
        "S".into(),
        productions,
    )?;
    Ok((grammar, theta))
}

/// Search the bounded enumeration of L(g) for two distinct words where one
/// is a theta-conjugate of the other. Returns the canonically first such
/// pair (second component in the conjugate set of the first), or None when
/// no violation exists WITHIN THE BOUND; absence proves nothing beyond it.
pub fn find_conjugate_pair(
    theta: &Involution,
    g: &Grammar,
    max_len: usize,
    max_steps: usize,
    limits: &EnumLimits,
) -> Result<Option<(Word, Word)>> {
    let words = enumerate_bounded(g, max_len, max_steps, limits)?.words;
    let words: Vec<&Word> = words.iter().collect();
    for i in 0..words.len() {
        for j in (i + 1)..words.len() {
            if is_theta_conjugate(theta, words[i], words[j])? {
                return Ok(Some((words[i].clone(), words[j].clone())));
            }
            if is_theta_conjugate(theta, words[j], words[i])? {
                return Ok(Some((words[j].clone(), words[i].clone())));
            }
        }
    }
    Ok(None)
}
