//! Block lattices of single contexts, collections of blocks, and their pasting.

use std::collections::HashSet;

use super::context::Context;
use crate::error::{Error, Result};
use crate::subspace::Subspace;

/// Largest context size for which the block is enumerated.
pub const MAX_CONTEXT_MEMBERS: usize = 16;

/// The Boolean algebra generated by the member ranges of one context.
///
/// Element `mask` is the join of the members whose bit is set, so meet, join
/// and complement are bitwise AND, OR and NOT on the index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockLattice {
    context: Context,
    elements: Vec<Subspace>,
}

pub fn build_block(context: Context) -> BlockLattice {
    let k = context.members().len();
    assert!(
        k <= MAX_CONTEXT_MEMBERS,
        "context with {k} members exceeds the enumeration limit"
    );
    let n = context.ambient_dim();
    let elements = (0..1usize << k)
        .map(|mask| {
            let rows = context
                .members()
                .iter()
                .enumerate()
                .filter(|(bit, _)| mask & (1 << bit) != 0)
                .flat_map(|(_, m)| m.subspace.basis().iter().cloned())
                .collect();
            Subspace::from_span(n, rows).expect("members share the ambient dimension")
        })
        .collect();
    BlockLattice { context, elements }
}

impl BlockLattice {
    pub fn context(&self) -> &Context {
        &self.context
    }

    pub fn label(&self) -> &str {
        self.context.label()
    }

    pub fn ambient_dim(&self) -> usize {
        self.context.ambient_dim()
    }

    /// Elements indexed by member subset.
    pub fn elements(&self) -> &[Subspace] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn top_index(&self) -> usize {
        self.elements.len() - 1
    }

    pub fn index_of(&self, s: &Subspace) -> Option<usize> {
        self.elements.iter().position(|e| e == s)
    }

    pub fn contains(&self, s: &Subspace) -> bool {
        self.index_of(s).is_some()
    }

    pub fn meet_index(&self, a: usize, b: usize) -> usize {
        a & b
    }

    pub fn join_index(&self, a: usize, b: usize) -> usize {
        a | b
    }

    pub fn complement_index(&self, a: usize) -> usize {
        !a & self.top_index()
    }

    /// Labels of the members whose join is element `index`.
    pub fn generators(&self, index: usize) -> Vec<&str> {
        self.context
            .members()
            .iter()
            .enumerate()
            .filter(|(bit, _)| index & (1 << bit) != 0)
            .map(|(_, m)| m.label.as_str())
            .collect()
    }
}

/// Blocks over one ambient space, identified by context label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContextCollection {
    blocks: Vec<BlockLattice>,
}

impl ContextCollection {
    pub fn new(blocks: Vec<BlockLattice>) -> Result<Self> {
        if let Some(first) = blocks.first() {
            let n = first.ambient_dim();
            if let Some(b) = blocks.iter().find(|b| b.ambient_dim() != n) {
                return Err(Error::Shape(format!(
                    "block {:?} lives in C^{}, expected C^{n}",
                    b.label(),
                    b.ambient_dim()
                )));
            }
        }
        let mut seen = HashSet::new();
        for b in &blocks {
            if !seen.insert(b.label()) {
                return Err(Error::DuplicateLabel(b.label().to_string()));
            }
        }
        Ok(Self { blocks })
    }

    pub fn from_contexts(contexts: impl IntoIterator<Item = Context>) -> Result<Self> {
        Self::new(contexts.into_iter().map(build_block).collect())
    }

    pub fn blocks(&self) -> &[BlockLattice] {
        &self.blocks
    }

    pub fn get(&self, label: &str) -> Option<&BlockLattice> {
        self.blocks.iter().find(|b| b.label() == label)
    }

    pub fn ambient_dim(&self) -> Option<usize> {
        self.blocks.first().map(BlockLattice::ambient_dim)
    }

    pub fn contexts(&self) -> impl Iterator<Item = &Context> {
        self.blocks.iter().map(BlockLattice::context)
    }
}

/// Where a pair of subspaces sits within an unpasted collection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Location {
    /// Both are elements of the named block (the first such block in order).
    Cohabiting(String),
    /// No single block holds both; their order relation is undefined.
    NoCommonBlock,
}

pub fn locate_pair(collection: &ContextCollection, a: &Subspace, b: &Subspace) -> Location {
    collection
        .blocks()
        .iter()
        .find(|block| block.contains(a) && block.contains(b))
        .map_or(Location::NoCommonBlock, |block| {
            Location::Cohabiting(block.label().to_string())
        })
}

/// Union of all blocks, with equal subspaces merged.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PastedLattice {
    collection: ContextCollection,
    elements: Vec<Subspace>,
    embeddings: Vec<Vec<usize>>,
}

pub fn paste(collection: ContextCollection) -> PastedLattice {
    let mut elements: Vec<Subspace> = Vec::new();
    let mut embeddings = Vec::with_capacity(collection.blocks().len());
    for block in collection.blocks() {
        let map = block
            .elements()
            .iter()
            .map(|s| match elements.iter().position(|e| e == s) {
                Some(i) => i,
                None => {
                    elements.push(s.clone());
                    elements.len() - 1
                }
            })
            .collect();
        embeddings.push(map);
    }
    PastedLattice {
        collection,
        elements,
        embeddings,
    }
}

impl PastedLattice {
    pub fn collection(&self) -> &ContextCollection {
        &self.collection
    }

    /// Distinct subspaces in order of first appearance.
    pub fn elements(&self) -> &[Subspace] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, s: &Subspace) -> Option<usize> {
        self.elements.iter().position(|e| e == s)
    }

    /// Position in the pasted element list of each element of block `block`.
    pub fn embedding(&self, block: usize) -> &[usize] {
        &self.embeddings[block]
    }

    /// The global order is subspace inclusion.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.elements[a]
            .leq(&self.elements[b])
            .expect("pasted elements share the ambient dimension")
    }
}
