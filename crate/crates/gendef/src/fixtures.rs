//! Small automata shared across the unit tests.

use crate::dfa::{Dfa, Word};

fn ab() -> Vec<String> {
    vec!["a".into(), "b".into()]
}

/// Unary automaton for `a a*`: 0 -a-> 1, 1 loops, F = {1}. Cofinite.
pub fn a1_cofinite() -> Dfa {
    Dfa::new(2, vec!["a".into()], vec![1, 1], 0, [1]).unwrap()
}

/// `a Σ*`: 0 -a-> 1 (accepting sink), 0 -b-> 2 (rejecting sink).
pub fn a2_starts_with_a() -> Dfa {
    Dfa::new(3, ab(), vec![1, 2, 1, 1, 2, 2], 0, [1]).unwrap()
}

/// Odd number of `a`s: `a` swaps 0 and 1, `b` is the identity. F = {1}.
pub fn a3_parity() -> Dfa {
    Dfa::new(2, ab(), vec![1, 0, 0, 1], 0, [1]).unwrap()
}

/// Two states forming one sink: `a` is constant 1, `b` is constant 0.
pub fn a5_two_constants() -> Dfa {
    Dfa::new(2, ab(), vec![1, 0, 1, 0], 0, [1]).unwrap()
}

/// Three states, trivial start, sink {1, 2} on which `a` is constant 1 and
/// `b` is constant 2. F = {1}.
pub fn a6_single_sink() -> Dfa {
    Dfa::new(3, ab(), vec![1, 1, 1, 2, 1, 2], 0, [1]).unwrap()
}

pub fn single_state(is_final: bool) -> Dfa {
    let finals: Vec<usize> = if is_final { vec![0] } else { vec![] };
    Dfa::new(1, vec!["a".into(), "b".into()], vec![0, 0], 0, finals).unwrap()
}

/// A2 plus an unreachable fourth state.
pub fn a2_with_unreachable_extra() -> Dfa {
    Dfa::new(4, ab(), vec![1, 2, 1, 1, 2, 2, 0, 3], 0, [1]).unwrap()
}

/// Same language as A2 but the rejecting sink is split into two
/// equivalent states that shuttle between each other.
pub fn a2_with_split_sink() -> Dfa {
    Dfa::new(4, ab(), vec![1, 2, 1, 1, 3, 3, 2, 2], 0, [1]).unwrap()
}

/// Two equivalent accepting sinks reachable from a common start.
pub fn two_equivalent_final_sinks() -> Dfa {
    Dfa::new(3, ab(), vec![1, 2, 1, 1, 2, 2], 0, [1, 2]).unwrap()
}

/// Accepts exactly {ε, a} over the unary alphabet.
pub fn eps_and_a() -> Dfa {
    Dfa::new(3, vec!["a".into()], vec![1, 2, 2], 0, [0, 1]).unwrap()
}

/// All words of length at most `max_len` over `k` letters, in
/// (length, lexicographic) order.
pub fn all_words(k: usize, max_len: usize) -> Vec<Word> {
    let mut words = vec![Word::empty()];
    let mut layer = vec![Word::empty()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for a in 0..k {
                let mut v = w.letters().to_vec();
                v.push(a);
                next.push(Word::from_letters(v));
            }
        }
        words.extend(next.iter().cloned());
        layer = next;
    }
    words
}
