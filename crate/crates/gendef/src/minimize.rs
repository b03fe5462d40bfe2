//! DFA minimization by Hopcroft's partition refinement, plus
//! distinguishability witnesses.
//!
//! `minimize` targets O(k·n·log n); the output automaton is renumbered into
//! canonical BFS order so equal languages yield byte-identical automata.

use std::collections::VecDeque;

use crate::dfa::{Dfa, Word};

/// Result of minimization: the reduced automaton and the map from original
/// states to reduced states (`None` for states unreachable from the start).
#[derive(Debug, Clone)]
pub struct MinimizationResult {
    pub reduced: Dfa,
    pub class_of: Vec<Option<usize>>,
}

/// Computes the minimal automaton of `L(dfa)`.
///
/// The reduced automaton is connected, has no pair of equivalent states, and
/// is renumbered in BFS discovery order from its start state.
pub fn minimize(dfa: &Dfa) -> MinimizationResult {
    let (conn, conn_map) = dfa.connected_part_with_map();
    let block_of = hopcroft(&conn);
    let block_count = block_of.iter().copied().max().unwrap() + 1;

    let k = conn.alphabet_len();
    let mut representative = vec![usize::MAX; block_count];
    for q in 0..conn.state_count() {
        let b = block_of[q];
        if representative[b] == usize::MAX {
            representative[b] = q;
        }
    }
    let mut delta = vec![0usize; block_count * k];
    for b in 0..block_count {
        for a in 0..k {
            delta[b * k + a] = block_of[conn.step(representative[b], a)];
        }
    }
    let finals = (0..block_count).filter(|&b| conn.is_final(representative[b]));
    let quotient = Dfa::new(
        block_count,
        conn.alphabet().to_vec(),
        delta,
        block_of[conn.start()],
        finals,
    )
    .expect("quotient of a valid DFA is valid");

    let (reduced, renumber) = quotient.connected_part_with_map();
    debug_assert_eq!(reduced.state_count(), block_count, "quotient must stay connected");

    let class_of = conn_map
        .iter()
        .map(|m| m.map(|c| renumber[block_of[c]].expect("all blocks reachable")))
        .collect();
    MinimizationResult { reduced, class_of }
}

/// Hopcroft's algorithm on a connected DFA; returns a block id per state.
/// Blocks are the classes of the coarsest congruence separating final from
/// non-final states.
fn hopcroft(dfa: &Dfa) -> Vec<usize> {
    let n = dfa.state_count();
    let k = dfa.alphabet_len();

    // Reverse transitions, flattened per (letter, target).
    let mut counts = vec![0usize; k * n + 1];
    for q in 0..n {
        for a in 0..k {
            counts[a * n + dfa.step(q, a) + 1] += 1;
        }
    }
    for i in 1..counts.len() {
        counts[i] += counts[i - 1];
    }
    let mut rev = vec![0u32; k * n];
    let mut fill = counts.clone();
    for q in 0..n {
        for a in 0..k {
            let slot = a * n + dfa.step(q, a);
            rev[fill[slot]] = q as u32;
            fill[slot] += 1;
        }
    }
    let preds = |a: usize, s: usize| &rev[counts[a * n + s]..counts[a * n + s + 1]];

    // Refinable partition.
    let mut elems: Vec<u32> = (0..n as u32).collect();
    elems.sort_by_key(|&q| !dfa.is_final(q as usize));
    let mut loc = vec![0u32; n];
    for (i, &q) in elems.iter().enumerate() {
        loc[q as usize] = i as u32;
    }
    let final_count = (0..n).filter(|&q| dfa.is_final(q)).count();

    let mut block = vec![0u32; n];
    let (mut bstart, mut bend): (Vec<u32>, Vec<u32>);
    if final_count > 0 && final_count < n {
        bstart = vec![0, final_count as u32];
        bend = vec![final_count as u32, n as u32];
        for i in final_count..n {
            block[elems[i] as usize] = 1;
        }
    } else {
        bstart = vec![0];
        bend = vec![n as u32];
    }
    let mut bmarked = vec![0u32; bstart.len()];
    let mut worklist: Vec<u32> = (0..bstart.len() as u32).collect();
    let mut in_work = vec![true; bstart.len()];

    while let Some(b) = worklist.pop() {
        in_work[b as usize] = false;
        let splitter: Vec<u32> =
            elems[bstart[b as usize] as usize..bend[b as usize] as usize].to_vec();
        for a in 0..k {
            let mut touched: Vec<u32> = Vec::new();
            for &s in &splitter {
                for &p in preds(a, s as usize) {
                    let bp = block[p as usize] as usize;
                    let first_unmarked = bstart[bp] + bmarked[bp];
                    if loc[p as usize] >= first_unmarked {
                        if bmarked[bp] == 0 {
                            touched.push(bp as u32);
                        }
                        let pos = loc[p as usize];
                        let other = elems[first_unmarked as usize];
                        elems.swap(pos as usize, first_unmarked as usize);
                        loc[p as usize] = first_unmarked;
                        loc[other as usize] = pos;
                        bmarked[bp] += 1;
                    }
                }
            }
            for &t in &touched {
                let t = t as usize;
                let size = bend[t] - bstart[t];
                let marked = bmarked[t];
                bmarked[t] = 0;
                if marked == size {
                    continue;
                }
                // Split off the marked prefix as a new block.
                let nb = bstart.len() as u32;
                bstart.push(bstart[t]);
                bend.push(bstart[t] + marked);
                bmarked.push(0);
                bstart[t] += marked;
                for i in bstart[nb as usize]..bend[nb as usize] {
                    block[elems[i as usize] as usize] = nb;
                }
                in_work.push(false);
                let to_push = if in_work[t] {
                    nb
                } else if marked <= size - marked {
                    nb
                } else {
                    t as u32
                };
                if !in_work[to_push as usize] {
                    in_work[to_push as usize] = true;
                    worklist.push(to_push);
                }
            }
        }
    }
    block.iter().map(|&b| b as usize).collect()
}

/// Shortest word sending exactly one of `p`, `q` into the final states;
/// ties broken lexicographically by alphabet order. `None` iff the states
/// are equivalent (in particular whenever `p == q`).
pub fn separating_word(dfa: &Dfa, p: usize, q: usize) -> Option<Word> {
    if p == q {
        return None;
    }
    if dfa.is_final(p) != dfa.is_final(q) {
        return Some(Word::empty());
    }
    let n = dfa.state_count();
    let k = dfa.alphabet_len();
    let pair = |u: usize, v: usize| u * n + v;
    let mut pred: Vec<(u32, u32)> = vec![(u32::MAX, 0); n * n];
    let mut seen = vec![false; n * n];
    seen[pair(p, q)] = true;
    let mut queue = VecDeque::from([(p, q)]);
    while let Some((u, v)) = queue.pop_front() {
        for a in 0..k {
            let (nu, nv) = (dfa.step(u, a), dfa.step(v, a));
            if nu == nv {
                continue; // merged pairs can never separate
            }
            let id = pair(nu, nv);
            if seen[id] {
                continue;
            }
            seen[id] = true;
            pred[id] = (pair(u, v) as u32, a as u32);
            if dfa.is_final(nu) != dfa.is_final(nv) {
                let mut letters = Vec::new();
                let mut cur = id;
                while cur != pair(p, q) {
                    let (prev, letter) = pred[cur];
                    letters.push(letter as usize);
                    cur = prev as usize;
                }
                letters.reverse();
                return Some(Word::from_letters(letters));
            }
            queue.push_back((nu, nv));
        }
    }
    None
}

/// Whether the automaton is connected with all state pairs distinguishable,
/// i.e. is the minimal automaton of its own language.
pub fn is_reduced(dfa: &Dfa) -> bool {
    let n = dfa.state_count();
    if dfa.reachable_mask(dfa.start()).iter().any(|&r| !r) {
        return false;
    }
    if n == 1 {
        return true;
    }
    let k = dfa.alphabet_len();
    // Backward fixpoint over the pair graph: a pair is distinguishable if
    // finality differs or some letter leads to a distinguishable pair.
    let mut rev: Vec<Vec<u32>> = vec![Vec::new(); k * n];
    for q in 0..n {
        for a in 0..k {
            rev[a * n + dfa.step(q, a)].push(q as u32);
        }
    }
    let mut dist = vec![false; n * n];
    let mut queue = VecDeque::new();
    for u in 0..n {
        for v in 0..n {
            if dfa.is_final(u) != dfa.is_final(v) {
                dist[u * n + v] = true;
                queue.push_back((u, v));
            }
        }
    }
    while let Some((u, v)) = queue.pop_front() {
        for a in 0..k {
            for &pu in &rev[a * n + u] {
                for &pv in &rev[a * n + v] {
                    let id = pu as usize * n + pv as usize;
                    if !dist[id] {
                        dist[id] = true;
                        queue.push_back((pu as usize, pv as usize));
                    }
                }
            }
        }
    }
    (0..n).all(|u| (0..n).all(|v| u == v || dist[u * n + v]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn all_final_states_collapse_to_sigma_star() {
        let dfa = Dfa::new(
            3,
            vec!["a".into(), "b".into()],
            vec![1, 2, 2, 0, 0, 1],
            0,
            [0, 1, 2],
        )
        .unwrap();
        let min = minimize(&dfa).reduced;
        assert_eq!(min.state_count(), 1);
        assert!(min.is_final(0));
        assert_eq!(min.step(0, 0), 0);
        assert_eq!(min.step(0, 1), 0);
    }

    #[test]
    fn parity_automaton_is_already_minimal() {
        let a3 = fixtures::a3_parity();
        let min = minimize(&a3);
        assert_eq!(min.reduced.state_count(), 2);
        assert_eq!(min.reduced, a3);
    }

    #[test]
    fn split_sink_merges_back_to_a2() {
        let min = minimize(&fixtures::a2_with_split_sink());
        assert_eq!(min.reduced.state_count(), 3);
        assert_eq!(min.reduced, fixtures::a2_starts_with_a());
        assert_eq!(min.class_of, vec![Some(0), Some(1), Some(2), Some(2)]);
    }

    #[test]
    fn unreachable_states_are_dropped() {
        let min = minimize(&fixtures::a2_with_unreachable_extra());
        assert_eq!(min.reduced.state_count(), 3);
        assert_eq!(min.class_of[3], None);
    }

    #[test]
    fn minimize_is_idempotent() {
        for dfa in [
            fixtures::a1_cofinite(),
            fixtures::a2_with_split_sink(),
            fixtures::a3_parity(),
            fixtures::a6_single_sink(),
            fixtures::two_equivalent_final_sinks(),
        ] {
            let once = minimize(&dfa).reduced;
            let twice = minimize(&once).reduced;
            assert_eq!(once, twice);
        }
    }

    #[test]
    fn minimization_preserves_the_language() {
        for dfa in [
            fixtures::a2_with_split_sink(),
            fixtures::two_equivalent_final_sinks(),
            fixtures::eps_and_a(),
        ] {
            let min = minimize(&dfa).reduced;
            let n = dfa.state_count();
            for w in fixtures::all_words(dfa.alphabet_len(), 2 * n) {
                assert_eq!(dfa.accepts(&w), min.accepts(&w), "word {:?}", w);
            }
        }
    }

    #[test]
    fn separating_word_examples() {
        let a2 = fixtures::a2_starts_with_a();
        assert_eq!(separating_word(&a2, 1, 2), Some(Word::empty()));
        // 0 and 2 agree on finality; "a" sends 0 to the accepting sink and
        // leaves 2 in the rejecting one, and no shorter word separates them.
        assert_eq!(separating_word(&a2, 0, 2), Some(Word::from_letters(vec![0])));
        assert_eq!(separating_word(&a2, 1, 1), None);
        let dup = fixtures::a2_with_split_sink();
        assert_eq!(separating_word(&dup, 2, 3), None);
    }

    #[test]
    fn separating_word_agrees_with_minimization_classes() {
        for dfa in [
            fixtures::a2_with_split_sink(),
            fixtures::two_equivalent_final_sinks(),
            fixtures::a6_single_sink(),
        ] {
            let min = minimize(&dfa);
            let conn = dfa.reachable_mask(dfa.start());
            for p in 0..dfa.state_count() {
                for q in 0..dfa.state_count() {
                    if !conn[p] || !conn[q] {
                        continue;
                    }
                    let separable = separating_word(&dfa, p, q).is_some();
                    assert_eq!(separable, min.class_of[p] != min.class_of[q]);
                }
            }
        }
    }

    #[test]
    fn separating_words_are_shortest_and_actually_separate() {
        let dfa = fixtures::a6_single_sink();
        for p in 0..3 {
            for q in 0..3 {
                if let Some(w) = separating_word(&dfa, p, q) {
                    assert_ne!(
                        dfa.is_final(dfa.act(p, &w)),
                        dfa.is_final(dfa.act(q, &w))
                    );
                    for shorter in fixtures::all_words(2, w.len().saturating_sub(1)) {
                        assert_eq!(
                            dfa.is_final(dfa.act(p, &shorter)),
                            dfa.is_final(dfa.act(q, &shorter))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn is_reduced_examples() {
        assert!(is_reduced(&fixtures::a2_starts_with_a()));
        assert!(!is_reduced(&fixtures::two_equivalent_final_sinks()));
        assert!(is_reduced(&fixtures::single_state(true)));
        assert!(!is_reduced(&fixtures::a2_with_unreachable_extra()));
    }
}
