//! Core value types: complete DFAs, words over their alphabet, state
//! transformations, and pattern witnesses.
//!
//! Everything here is an immutable value after construction and every
//! operation is a pure function, so instances can be shared freely across
//! threads.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

/// A complete deterministic finite automaton.
///
/// States are the ids `0..state_count`. The transition table is total: every
/// `(state, letter)` pair has an entry. Partial tables are rejected at
/// construction time.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dfa {
    alphabet: Vec<String>,
    /// Flattened state-major table: `delta[q * alphabet.len() + a]`.
    delta: Vec<usize>,
    start: usize,
    finals: Vec<bool>,
}

impl Dfa {
    /// Builds a DFA, validating all structural invariants.
    ///
    /// `delta` is the flattened state-major transition table of length
    /// `state_count * alphabet.len()`.
    pub fn new(
        state_count: usize,
        alphabet: Vec<String>,
        delta: Vec<usize>,
        start: usize,
        finals: impl IntoIterator<Item = usize>,
    ) -> Result<Dfa> {
        if state_count == 0 {
            return Err(Error::Input("state count must be positive".into()));
        }
        if alphabet.is_empty() {
            return Err(Error::Input("alphabet must be nonempty".into()));
        }
        for (i, name) in alphabet.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::Input(format!("letter {i} has an empty name")));
            }
            if alphabet[..i].contains(name) {
                return Err(Error::Input(format!("duplicate letter name {name:?}")));
            }
        }
        if delta.len() != state_count * alphabet.len() {
            return Err(Error::Input(format!(
                "transition table has {} entries, expected {}",
                delta.len(),
                state_count * alphabet.len()
            )));
        }
        if let Some(&bad) = delta.iter().find(|&&t| t >= state_count) {
            return Err(Error::Input(format!("transition target {bad} out of range")));
        }
        if start >= state_count {
            return Err(Error::Input(format!("start state {start} out of range")));
        }
        let mut final_flags = vec![false; state_count];
        for f in finals {
            if f >= state_count {
                return Err(Error::Input(format!("final state {f} out of range")));
            }
            final_flags[f] = true;
        }
        Ok(Dfa { alphabet, delta, start, finals: final_flags })
    }

    pub fn state_count(&self) -> usize {
        self.finals.len()
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn alphabet_len(&self) -> usize {
        self.alphabet.len()
    }

    /// Index of a letter by its name.
    pub fn letter_index(&self, name: &str) -> Option<usize> {
        self.alphabet.iter().position(|l| l == name)
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn is_final(&self, q: usize) -> bool {
        self.finals[q]
    }

    /// Final states in ascending order.
    pub fn finals(&self) -> impl Iterator<Item = usize> + '_ {
        self.finals.iter().enumerate().filter(|(_, &f)| f).map(|(q, _)| q)
    }

    /// Single transition step.
    pub fn step(&self, q: usize, letter: usize) -> usize {
        self.delta[q * self.alphabet.len() + letter]
    }

    /// The right action of a word on a state: `q` after reading `w`.
    ///
    /// The empty word acts as the identity.
    pub fn act(&self, q: usize, w: &Word) -> usize {
        w.letters().iter().fold(q, |s, &a| self.step(s, a))
    }

    /// Whether `w` is in the recognized language.
    pub fn accepts(&self, w: &Word) -> bool {
        self.finals[self.act(self.start, w)]
    }

    /// The transformation of the state set induced by `w`.
    ///
    /// The empty word yields the identity transformation; note that the
    /// identity is only an element of the transition semigroup when some
    /// nonempty word also induces it.
    pub fn transformation_of(&self, w: &Word) -> Transformation {
        Transformation((0..self.state_count()).map(|q| self.act(q, w)).collect())
    }

    /// The transformation induced by a single letter.
    pub fn letter_transformation(&self, letter: usize) -> Transformation {
        Transformation((0..self.state_count()).map(|q| self.step(q, letter)).collect())
    }

    /// All states reachable from `from` (including `from`), ascending.
    pub fn reachable_set(&self, from: usize) -> Vec<usize> {
        let mask = self.reachable_mask(from);
        (0..self.state_count()).filter(|&q| mask[q]).collect()
    }

    pub(crate) fn reachable_mask(&self, from: usize) -> Vec<bool> {
        let mut seen = vec![false; self.state_count()];
        seen[from] = true;
        let mut queue = VecDeque::from([from]);
        while let Some(q) = queue.pop_front() {
            for a in 0..self.alphabet_len() {
                let t = self.step(q, a);
                if !seen[t] {
                    seen[t] = true;
                    queue.push_back(t);
                }
            }
        }
        seen
    }

    /// The restriction of the automaton to the part reachable from its start
    /// state, renumbered in BFS discovery order (letters scanned in alphabet
    /// order). The recognized language is unchanged.
    pub fn connected_part(&self) -> Dfa {
        self.connected_part_with_map().0
    }

    /// `connected_part` plus the map original state -> new state
    /// (`None` for unreachable states).
    pub fn connected_part_with_map(&self) -> (Dfa, Vec<Option<usize>>) {
        let n = self.state_count();
        let k = self.alphabet_len();
        let mut new_id: Vec<Option<usize>> = vec![None; n];
        let mut order = Vec::new();
        new_id[self.start] = Some(0);
        order.push(self.start);
        let mut head = 0;
        while head < order.len() {
            let q = order[head];
            head += 1;
            for a in 0..k {
                let t = self.step(q, a);
                if new_id[t].is_none() {
                    new_id[t] = Some(order.len());
                    order.push(t);
                }
            }
        }
        let m = order.len();
        let mut delta = vec![0usize; m * k];
        for (i, &q) in order.iter().enumerate() {
            for a in 0..k {
                delta[i * k + a] = new_id[self.step(q, a)].unwrap();
            }
        }
        let finals = order.iter().enumerate().filter(|(_, &q)| self.finals[q]).map(|(i, _)| i);
        let dfa = Dfa::new(m, self.alphabet.clone(), delta, 0, finals)
            .expect("connected part of a valid DFA is valid");
        (dfa, new_id)
    }

    /// Same automaton with final and non-final states exchanged; recognizes
    /// the complement language.
    pub fn complement(&self) -> Dfa {
        let mut c = self.clone();
        for f in &mut c.finals {
            *f = !*f;
        }
        c
    }
}

/// A word over a DFA's alphabet, stored as letter indices. May be empty.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<usize>) -> Word {
        Word(letters)
    }

    /// Parses a word from letter names against an alphabet, e.g. `["a","b"]`.
    pub fn from_names(names: &[&str], alphabet: &[String]) -> Result<Word> {
        names
            .iter()
            .map(|n| {
                alphabet
                    .iter()
                    .position(|l| l == n)
                    .ok_or_else(|| Error::Input(format!("unknown letter {n:?}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// The word repeated `k` times (`k = 0` gives the empty word).
    pub fn repeat(&self, k: usize) -> Word {
        let mut v = Vec::with_capacity(self.0.len() * k);
        for _ in 0..k {
            v.extend_from_slice(&self.0);
        }
        Word(v)
    }

    /// Space-separated letter names; the empty word renders as `ε`.
    pub fn render(&self, alphabet: &[String]) -> String {
        if self.0.is_empty() {
            return "ε".to_string();
        }
        self.0.iter().map(|&a| alphabet[a].as_str()).collect::<Vec<_>>().join(" ")
    }
}

/// A total self-map of a state set; element of a transformation semigroup.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transformation(Vec<usize>);

impl Transformation {
    pub fn from_map(map: Vec<usize>) -> Result<Transformation> {
        let n = map.len();
        if n == 0 {
            return Err(Error::Input("transformation must have positive degree".into()));
        }
        if let Some(&bad) = map.iter().find(|&&t| t >= n) {
            return Err(Error::Input(format!("image {bad} out of range for degree {n}")));
        }
        Ok(Transformation(map))
    }

    pub fn identity(n: usize) -> Transformation {
        Transformation((0..n).collect())
    }

    pub fn constant(n: usize, target: usize) -> Transformation {
        debug_assert!(target < n);
        Transformation(vec![target; n])
    }

    /// Number of states the transformation acts on.
    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, q: usize) -> usize {
        self.0[q]
    }

    pub fn map(&self) -> &[usize] {
        &self.0
    }

    /// Composition in diagram order: `(f.compose(g))(q) = g(f(q))`.
    pub fn compose(&self, other: &Transformation) -> Result<Transformation> {
        if self.0.len() != other.0.len() {
            return Err(Error::Dimension(self.0.len(), other.0.len()));
        }
        Ok(Transformation(self.0.iter().map(|&q| other.0[q]).collect()))
    }

    /// `k`-fold composition of the transformation with itself (`k >= 1`).
    pub fn pow(&self, k: usize) -> Transformation {
        assert!(k >= 1, "pow requires a positive exponent");
        let mut acc = self.clone();
        for _ in 1..k {
            acc = Transformation(acc.0.iter().map(|&q| self.0[q]).collect());
        }
        acc
    }

    pub fn is_constant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] == w[1])
    }

    /// The restriction to a subset of states that the map carries into
    /// itself, as a transformation over the subset's positions.
    pub fn restrict(&self, subset: &[usize]) -> Result<Transformation> {
        let pos: std::collections::HashMap<usize, usize> =
            subset.iter().enumerate().map(|(i, &q)| (q, i)).collect();
        let mut map = Vec::with_capacity(subset.len());
        for &q in subset {
            let t = self.0[q];
            match pos.get(&t) {
                Some(&i) => map.push(i),
                None => {
                    return Err(Error::Input(format!(
                        "subset is not closed: {q} maps to {t} outside it"
                    )))
                }
            }
        }
        Transformation::from_map(map)
    }
}

impl fmt::Display for Transformation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}]",
            self.0.iter().map(|q| q.to_string()).collect::<Vec<_>>().join(",")
        )
    }
}

/// Which of the four forbidden patterns a witness instantiates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PatternId {
    Pf,
    Pd,
    Pr,
    Pg,
}

impl PatternId {
    pub const ALL: [PatternId; 4] = [PatternId::Pf, PatternId::Pd, PatternId::Pr, PatternId::Pg];

    pub fn name(self) -> &'static str {
        match self {
            PatternId::Pf => "Pf",
            PatternId::Pd => "Pd",
            PatternId::Pr => "Pr",
            PatternId::Pg => "Pg",
        }
    }
}

impl fmt::Display for PatternId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A concrete instantiation proving that an automaton admits a pattern.
///
/// Field use per pattern:
/// - `Pf`: `p·x = p` and `q·y = q` (two states each on a cycle);
/// - `Pd`: `p·x = p` and `q·x = q` (`y` is absent);
/// - `Pr`: `p·x = p` and `p·y = q`;
/// - `Pg`: `p·x = p`, `q·x = q` and `p·y = q`.
///
/// Invariants: `p != q`, `x` nonempty, `y` nonempty when present.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternWitness {
    pub pattern: PatternId,
    pub p: usize,
    pub q: usize,
    pub x: Word,
    pub y: Option<Word>,
}
