//! Path-compressed trie over unstressed stems.

use crate::error::FormatError;
use crate::text::Letter;

use super::codec::{Reader, Writer};

const NO_TERMINAL: u32 = u32::MAX;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrieNode {
    /// Edge label leading into this node. Only the root may have an
    /// empty label.
    pub label: Vec<Letter>,
    /// Children ordered by the first letter of their labels.
    pub children: Vec<u32>,
    /// Record block of the stem ending here.
    pub terminal: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompressedTrie {
    nodes: Vec<TrieNode>,
}

/// A stored stem that prefixes the looked-up word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StemCandidate {
    pub block: u32,
    /// Number of letters of the word the stem consumes.
    pub len: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct StemLookup {
    /// In increasing stem length.
    pub candidates: Vec<StemCandidate>,
    /// Nodes visited during the walk.
    pub visits: usize,
}

/// Position inside the trie between two letters, used by searches that
/// walk the trie one letter at a time.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Cursor {
    pub node: u32,
    /// Letters of the node's label already matched.
    pub depth: usize,
}

impl Default for CompressedTrie {
    fn default() -> Self {
        CompressedTrie::build(&[])
    }
}

impl CompressedTrie {
    /// Builds the trie over sorted, distinct keys; key `i` gets terminal
    /// value `i`.
    pub fn build(keys: &[Vec<Letter>]) -> CompressedTrie {
        debug_assert!(keys.windows(2).all(|w| w[0] < w[1]), "keys must be sorted and distinct");
        let mut nodes = Vec::new();
        let indexed: Vec<(&[Letter], u32)> = keys.iter().enumerate().map(|(i, k)| (k.as_slice(), i as u32)).collect();
        if indexed.is_empty() {
            nodes.push(TrieNode {
                label: Vec::new(),
                children: Vec::new(),
                terminal: None,
            });
        } else {
            build_node(&indexed, 0, &mut nodes);
        }
        CompressedTrie { nodes }
    }

    pub fn nodes(&self) -> &[TrieNode] {
        &self.nodes
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn node(&self, index: u32) -> &TrieNode {
        &self.nodes[index as usize]
    }

    pub fn child(&self, node: u32, letter: Letter) -> Option<u32> {
        let children = &self.nodes[node as usize].children;
        children
            .binary_search_by_key(&letter, |&c| self.nodes[c as usize].label[0])
            .ok()
            .map(|i| children[i])
    }

    /// Every terminal whose stem is a prefix of `word`. Each visited node
    /// consumes at least one letter, so visits never exceed
    /// `word.len() + 1` whatever the number of stored stems.
    pub fn stem_candidates(&self, word: &[Letter]) -> StemLookup {
        let mut out = StemLookup::default();
        let mut node = 0u32;
        let mut pos = 0;
        loop {
            out.visits += 1;
            let n = &self.nodes[node as usize];
            if !word[pos..].starts_with(&n.label) {
                break;
            }
            pos += n.label.len();
            if let Some(block) = n.terminal {
                out.candidates.push(StemCandidate { block, len: pos });
            }
            match word.get(pos).and_then(|&l| self.child(node, l)) {
                Some(c) => node = c,
                None => break,
            }
        }
        out
    }

    pub fn root(&self) -> Cursor {
        Cursor { node: 0, depth: 0 }
    }

    /// Moves one letter down from `cursor`.
    pub fn advance(&self, cursor: Cursor, letter: Letter) -> Option<Cursor> {
        let n = &self.nodes[cursor.node as usize];
        if cursor.depth < n.label.len() {
            return (n.label[cursor.depth] == letter).then_some(Cursor {
                node: cursor.node,
                depth: cursor.depth + 1,
            });
        }
        let c = self.child(cursor.node, letter)?;
        Some(Cursor { node: c, depth: 1 })
    }

    /// Record block of the stem ending exactly at `cursor`.
    pub fn terminal_at(&self, cursor: Cursor) -> Option<u32> {
        let n = &self.nodes[cursor.node as usize];
        if cursor.depth == n.label.len() {
            n.terminal
        } else {
            None
        }
    }

    /// All stored keys with their terminal values, in sorted order.
    pub fn keys(&self) -> Vec<(Vec<Letter>, u32)> {
        let mut out = Vec::new();
        let mut stack = vec![(0u32, Vec::new())];
        while let Some((node, mut prefix)) = stack.pop() {
            let n = &self.nodes[node as usize];
            prefix.extend_from_slice(&n.label);
            if let Some(t) = n.terminal {
                out.push((prefix.clone(), t));
            }
            for &c in n.children.iter().rev() {
                stack.push((c, prefix.clone()));
            }
        }
        out
    }

    /// Whether no node other than a terminal has exactly one child.
    pub fn is_fully_compressed(&self) -> bool {
        self.nodes.iter().all(|n| n.terminal.is_some() || n.children.len() != 1)
    }

    pub(crate) fn encode(&self, w: &mut Writer) {
        w.len32(self.nodes.len());
        for n in &self.nodes {
            w.letters(&n.label);
            w.u32(n.terminal.unwrap_or(NO_TERMINAL));
            w.u8(n.children.len() as u8);
            n.children.iter().for_each(|&c| w.u32(c));
        }
    }

    pub(crate) fn decode(r: &mut Reader) -> Result<CompressedTrie, FormatError> {
        let count = r.u32()? as usize;
        let mut nodes = Vec::with_capacity(count.min(1 << 20));
        for _ in 0..count {
            let label = r.letters()?;
            let terminal = match r.u32()? {
                NO_TERMINAL => None,
                t => Some(t),
            };
            let n = r.u8()?;
            let children = (0..n).map(|_| r.u32()).collect::<Result<Vec<_>, _>>()?;
            nodes.push(TrieNode {
                label,
                children,
                terminal,
            });
        }
        if nodes.is_empty() {
            return Err(r.malformed("no root node"));
        }
        for (i, n) in nodes.iter().enumerate() {
            for &c in &n.children {
                // preorder layout: children always come after their parent
                let ok = (c as usize) > i && nodes.get(c as usize).is_some_and(|c| !c.label.is_empty());
                if !ok {
                    return Err(r.malformed(format!("node {i} has a bad child {c}")));
                }
            }
            let firsts: Vec<Letter> = n.children.iter().map(|&c| nodes[c as usize].label[0]).collect();
            if firsts.windows(2).any(|w| w[0] >= w[1]) {
                return Err(r.malformed(format!("children of node {i} out of order")));
            }
        }
        Ok(CompressedTrie { nodes })
    }
}

fn build_node(keys: &[(&[Letter], u32)], depth: usize, nodes: &mut Vec<TrieNode>) -> u32 {
    let index = nodes.len() as u32;
    nodes.push(TrieNode {
        label: Vec::new(),
        children: Vec::new(),
        terminal: None,
    });
    // keys are sorted, so the common prefix of all equals that of the
    // first and last
    let first = keys[0].0;
    let last = keys[keys.len() - 1].0;
    let mut end = depth;
    while end < first.len() && end < last.len() && first[end] == last[end] {
        end += 1;
    }
    let (terminal, rest) = if first.len() == end {
        (Some(keys[0].1), &keys[1..])
    } else {
        (None, keys)
    };
    let mut children = Vec::new();
    let mut start = 0;
    while start < rest.len() {
        let letter = rest[start].0[end];
        let stop = start + rest[start..].iter().take_while(|k| k.0[end] == letter).count();
        children.push(build_node(&rest[start..stop], end, nodes));
        start = stop;
    }
    let node = &mut nodes[index as usize];
    node.label = first[depth..end].to_vec();
    node.terminal = terminal;
    node.children = children;
    index
}
