//! Minimal acyclic word automaton (DAWG) built from a sorted word list.
//!
//! Construction is the incremental algorithm for sorted input: shared
//! prefixes extend an existing path, and finished suffixes are merged through
//! a register of equivalent states, so common suffixes are stored once.

use std::collections::HashMap;

use super::Lexicon;

/// Handle to an automaton state.
pub type NodeId = u32;

#[derive(Debug, Clone, Copy)]
struct Node {
    first_edge: u32,
    num_edges: u16,
    terminal: bool,
}

/// Deterministic acyclic automaton accepting exactly one word set.
#[derive(Debug, Clone)]
pub struct WordAutomaton {
    nodes: Vec<Node>,
    edges: Vec<(u8, NodeId)>,
    word_count: usize,
}

impl WordAutomaton {
    /// Compiles a lexicon. The automaton accepts exactly `lexicon.words()`.
    pub fn build(lexicon: &Lexicon) -> WordAutomaton {
        assert!(!lexicon.is_empty(), "cannot build an automaton from an empty lexicon");
        let mut builder = Builder::new();
        for word in lexicon.words() {
            builder.insert(word.as_bytes());
        }
        builder.freeze(lexicon.len())
    }

    pub fn root(&self) -> NodeId {
        0
    }

    /// Follows one letter edge.
    pub fn step(&self, node: NodeId, letter: u8) -> Option<NodeId> {
        let n = self.nodes[node as usize];
        let start = n.first_edge as usize;
        let slice = &self.edges[start..start + n.num_edges as usize];
        slice
            .iter()
            .find(|&&(label, _)| label == letter)
            .map(|&(_, target)| target)
    }

    /// True when some accepted word ends at this state.
    pub fn is_terminal(&self, node: NodeId) -> bool {
        self.nodes[node as usize].terminal
    }

    /// Outgoing edges of a state, in increasing letter order.
    pub fn edges(&self, node: NodeId) -> &[(u8, NodeId)] {
        let n = self.nodes[node as usize];
        let start = n.first_edge as usize;
        &self.edges[start..start + n.num_edges as usize]
    }

    /// Full-word membership.
    pub fn contains(&self, word: &str) -> bool {
        let bytes = word.as_bytes();
        if bytes.is_empty() {
            return false;
        }
        let mut node = self.root();
        for &b in bytes {
            match self.step(node, b) {
                Some(next) => node = next,
                None => return false,
            }
        }
        self.is_terminal(node)
    }

    /// Number of words this automaton was built from.
    pub fn word_count(&self) -> usize {
        self.word_count
    }

    /// Number of reachable states after minimization.
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }
}

struct BuildNode {
    edges: Vec<(u8, u32)>,
    terminal: bool,
}

struct Builder {
    nodes: Vec<BuildNode>,
    // Maps a canonical (terminal, edges) signature to the node that owns it.
    register: HashMap<Box<[u64]>, u32>,
    // Path of still-mutable nodes for the previously inserted word.
    stack: Vec<u32>,
    prev: Vec<u8>,
}

impl Builder {
    fn new() -> Builder {
        Builder {
            nodes: vec![BuildNode { edges: Vec::new(), terminal: false }],
            register: HashMap::new(),
            stack: vec![0],
            prev: Vec::new(),
        }
    }

    fn insert(&mut self, word: &[u8]) {
        debug_assert!(self.prev.as_slice() < word, "input must be sorted and unique");
        let common = self
            .prev
            .iter()
            .zip(word)
            .take_while(|(a, b)| a == b)
            .count();
        self.merge_down_to(common + 1);
        for &letter in &word[common..] {
            let fresh = self.nodes.len() as u32;
            self.nodes.push(BuildNode { edges: Vec::new(), terminal: false });
            let parent = *self.stack.last().unwrap();
            self.nodes[parent as usize].edges.push((letter, fresh));
            self.stack.push(fresh);
        }
        let last = *self.stack.last().unwrap();
        self.nodes[last as usize].terminal = true;
        self.prev.clear();
        self.prev.extend_from_slice(word);
    }

    /// Pops path nodes deeper than `depth`, replacing each with a registered
    /// equivalent when one exists.
    fn merge_down_to(&mut self, depth: usize) {
        while self.stack.len() > depth {
            let child = self.stack.pop().unwrap();
            let canonical = self.replace_or_register(child);
            let parent = *self.stack.last().unwrap();
            let edge = self.nodes[parent as usize]
                .edges
                .last_mut()
                .expect("parent has an edge to the popped child");
            edge.1 = canonical;
        }
    }

    fn replace_or_register(&mut self, node: u32) -> u32 {
        let n = &self.nodes[node as usize];
        let mut key = Vec::with_capacity(n.edges.len() + 1);
        key.push(n.terminal as u64);
        for &(label, target) in &n.edges {
            key.push((label as u64) | ((target as u64) << 8));
        }
        *self.register.entry(key.into_boxed_slice()).or_insert(node)
    }

    fn freeze(mut self, word_count: usize) -> WordAutomaton {
        self.merge_down_to(1);
        // Compact to reachable nodes only; registered duplicates become garbage.
        let mut remap: HashMap<u32, NodeId> = HashMap::new();
        let mut order: Vec<u32> = Vec::new();
        let mut pending = vec![0u32];
        remap.insert(0, 0);
        while let Some(id) = pending.pop() {
            order.push(id);
            for &(_, target) in &self.nodes[id as usize].edges {
                if !remap.contains_key(&target) {
                    let fresh = remap.len() as NodeId;
                    remap.insert(target, fresh);
                    pending.push(target);
                }
            }
        }
        // `order` visits nodes in remap-id order only for the root; rebuild in
        // remap order explicitly.
        let mut by_new_id: Vec<u32> = vec![0; remap.len()];
        for (&old, &new) in &remap {
            by_new_id[new as usize] = old;
        }
        let mut nodes = Vec::with_capacity(by_new_id.len());
        let mut edges = Vec::new();
        for &old in &by_new_id {
            let src = &self.nodes[old as usize];
            let first_edge = edges.len() as u32;
            for &(label, target) in &src.edges {
                edges.push((label, remap[&target]));
            }
            nodes.push(Node {
                first_edge,
                num_edges: src.edges.len() as u16,
                terminal: src.terminal,
            });
        }
        WordAutomaton { nodes, edges, word_count }
    }
}
