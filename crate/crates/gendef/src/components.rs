//! Strongly connected components of an automaton's transition digraph, the
//! quotient component graph, and trivial/sink classification.
//!
//! A component is *trivial* when it is a singleton `{p}` with `p·a != p` for
//! every letter, and a *sink* when no transition leaves it. Every complete
//! DFA has at least one sink, and no sink is trivial.

use std::collections::BTreeSet;

use crate::dfa::Dfa;

const UNVISITED: u32 = u32::MAX;

/// Iterative Tarjan over an implicitly represented digraph with `n` nodes
/// and out-degree `k` (`step(v, a)` is the `a`-th successor of `v`).
///
/// Returns the component count and per-node component ids in topological
/// order: every edge goes from a lower id to a higher id or stays inside one
/// component.
pub(crate) fn tarjan_components(
    n: usize,
    k: usize,
    step: &dyn Fn(usize, usize) -> usize,
) -> (usize, Vec<u32>) {
    assert!(n < UNVISITED as usize, "node count too large for u32 ids");
    let mut index = vec![UNVISITED; n];
    let mut low = vec![0u32; n];
    let mut on_stack = vec![false; n];
    let mut comp = vec![0u32; n];
    let mut scc_stack: Vec<u32> = Vec::new();
    let mut frames: Vec<(u32, u32)> = Vec::new();
    let mut counter: u32 = 0;
    let mut scc_count: u32 = 0;

    for root in 0..n {
        if index[root] != UNVISITED {
            continue;
        }
        index[root] = counter;
        low[root] = counter;
        counter += 1;
        scc_stack.push(root as u32);
        on_stack[root] = true;
        frames.push((root as u32, 0));

        while let Some(frame) = frames.last_mut() {
            let v = frame.0 as usize;
            if (frame.1 as usize) < k {
                let a = frame.1 as usize;
                frame.1 += 1;
                let w = step(v, a);
                if index[w] == UNVISITED {
                    index[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    scc_stack.push(w as u32);
                    on_stack[w] = true;
                    frames.push((w as u32, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                frames.pop();
                if low[v] == index[v] {
                    loop {
                        let w = scc_stack.pop().expect("scc stack underflow") as usize;
                        on_stack[w] = false;
                        comp[w] = scc_count;
                        if w == v {
                            break;
                        }
                    }
                    scc_count += 1;
                }
                if let Some(parent) = frames.last() {
                    let p = parent.0 as usize;
                    low[p] = low[p].min(low[v]);
                }
            }
        }
    }

    // Tarjan pops a component only after everything it reaches has been
    // popped, so reversing the pop order yields a topological numbering.
    for c in comp.iter_mut() {
        *c = scc_count - 1 - *c;
    }
    (scc_count as usize, comp)
}

/// Marks the nodes that lie on some nonempty cycle: members of components of
/// size two or more, and singletons carrying a self-loop.
pub(crate) fn on_cycle_mask(n: usize, k: usize, step: &dyn Fn(usize, usize) -> usize) -> Vec<bool> {
    let (count, comp) = tarjan_components(n, k, step);
    let mut size = vec![0u32; count];
    for &c in &comp {
        size[c as usize] += 1;
    }
    (0..n)
        .map(|v| size[comp[v] as usize] >= 2 || (0..k).any(|a| step(v, a) == v))
        .collect()
}

/// The component graph of a DFA: one node per strongly connected component,
/// labelled edges, and per-component trivial/sink flags.
#[derive(Debug, Clone)]
pub struct ComponentGraph {
    class_of: Vec<usize>,
    members: Vec<Vec<usize>>,
    edges: BTreeSet<(usize, usize, usize)>,
    is_trivial: Vec<bool>,
    is_sink: Vec<bool>,
}

/// Decomposes the transition digraph into components. Runs in time linear in
/// states plus transitions; component ids are assigned in topological order.
pub fn component_graph(dfa: &Dfa) -> ComponentGraph {
    let n = dfa.state_count();
    let k = dfa.alphabet_len();
    let step = |q: usize, a: usize| dfa.step(q, a);
    let (count, comp) = tarjan_components(n, k, &step);

    let class_of: Vec<usize> = comp.iter().map(|&c| c as usize).collect();
    let mut members = vec![Vec::new(); count];
    for q in 0..n {
        members[class_of[q]].push(q);
    }
    let mut edges = BTreeSet::new();
    for q in 0..n {
        for a in 0..k {
            edges.insert((class_of[q], a, class_of[dfa.step(q, a)]));
        }
    }
    let mut is_trivial = vec![false; count];
    let mut is_sink = vec![false; count];
    for (c, ms) in members.iter().enumerate() {
        is_trivial[c] = ms.len() == 1 && (0..k).all(|a| dfa.step(ms[0], a) != ms[0]);
        is_sink[c] = ms.iter().all(|&q| (0..k).all(|a| class_of[dfa.step(q, a)] == c));
    }
    ComponentGraph { class_of, members, edges, is_trivial, is_sink }
}

impl ComponentGraph {
    pub fn component_count(&self) -> usize {
        self.members.len()
    }

    /// Component id of a state; constant-time lookup.
    pub fn class_of(&self, q: usize) -> usize {
        self.class_of[q]
    }

    /// States of a component, ascending.
    pub fn members(&self, c: usize) -> &[usize] {
        &self.members[c]
    }

    /// Labelled quotient edges `(from, letter, to)` in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn is_trivial(&self, c: usize) -> bool {
        self.is_trivial[c]
    }

    pub fn is_sink(&self, c: usize) -> bool {
        self.is_sink[c]
    }

    /// Ids of the sink components, ascending. Nonempty for every complete DFA.
    pub fn sinks(&self) -> Vec<usize> {
        (0..self.component_count()).filter(|&c| self.is_sink[c]).collect()
    }

    /// Whether two states are mutually reachable.
    pub fn same_component(&self, p: usize, q: usize) -> bool {
        self.class_of[p] == self.class_of[q]
    }

    /// Whether a state lies on some nonempty cycle, i.e. its component is
    /// nontrivial.
    pub fn on_cycle(&self, q: usize) -> bool {
        !self.is_trivial[self.class_of[q]]
    }

    /// Graphviz DOT rendering. One node per component labelled with its
    /// member states and flags, one labelled edge per quotient edge:
    ///
    /// ```text
    /// digraph components {
    ///   rankdir=LR;
    ///   c0 [label="C0 {0} trivial"];
    ///   c1 [label="C1 {2} sink"];
    ///   c0 -> c1 [label="b"];
    /// }
    /// ```
    pub fn to_dot(&self, alphabet: &[String]) -> String {
        let mut out = String::from("digraph components {\n  rankdir=LR;\n");
        for (c, ms) in self.members.iter().enumerate() {
            let states = ms.iter().map(|q| q.to_string()).collect::<Vec<_>>().join(",");
            let flag = if self.is_trivial[c] {
                " trivial"
            } else if self.is_sink[c] {
                " sink"
            } else {
                ""
            };
            out.push_str(&format!("  c{c} [label=\"C{c} {{{states}}}{flag}\"];\n"));
        }
        for &(from, letter, to) in &self.edges {
            out.push_str(&format!("  c{from} -> c{to} [label=\"{}\"];\n", alphabet[letter]));
        }
        out.push_str("}\n");
        out
    }
}
