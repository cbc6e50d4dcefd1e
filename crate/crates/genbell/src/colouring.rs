//! Disjoint unions of cliques and exhaustive enumeration of their proper
//! colourings.
//!
//! A colouring is a partition of the vertex set into non-empty stable blocks;
//! colour names play no role. Colourings are kept in canonical form (vertices
//! sorted within a block, blocks sorted by their minimum vertex) so that
//! structural equality is partition equality.

use std::fmt;

use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Vertex (i, j): position j in clique i, both 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId {
    pub clique: u32,
    pub position: u32,
}

impl VertexId {
    pub fn new(clique: u32, position: u32) -> Self {
        VertexId { clique, position }
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}.{}", self.clique, self.position)
    }
}

// Wire form is the bare pair [i, j].
impl Serialize for VertexId {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(2))?;
        seq.serialize_element(&self.clique)?;
        seq.serialize_element(&self.position)?;
        seq.end()
    }
}

impl<'de> Deserialize<'de> for VertexId {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct PairVisitor;
        impl<'de> Visitor<'de> for PairVisitor {
            type Value = VertexId;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a [clique, position] pair")
            }
            fn visit_seq<A: SeqAccess<'de>>(
                self,
                mut seq: A,
            ) -> std::result::Result<VertexId, A::Error> {
                let clique = seq
                    .next_element()?
                    .ok_or_else(|| de::Error::invalid_length(0, &self))?;
                let position = seq
                    .next_element()?
                    .ok_or_else(|| de::Error::invalid_length(1, &self))?;
                if seq.next_element::<u32>()?.is_some() {
                    return Err(de::Error::invalid_length(3, &self));
                }
                Ok(VertexId::new(clique, position))
            }
        }
        deserializer.deserialize_seq(PairVisitor)
    }
}

/// A disjoint union of cliques, given by the ordered list of clique sizes.
/// The vertex set is { (i,j) : 1 <= i <= n, 1 <= j <= sizes[i] }.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueFamily {
    sizes: Vec<u32>,
}

impl CliqueFamily {
    /// Builds the family; rejects an empty list or a zero size.
    pub fn new(sizes: Vec<u32>) -> Result<Self> {
        if sizes.is_empty() || sizes.contains(&0) {
            return Err(Error::BadFamily);
        }
        Ok(CliqueFamily { sizes })
    }

    /// n identical cliques of size m.
    pub fn uniform(m: u32, n: u32) -> Result<Self> {
        Self::new(vec![m; n as usize])
    }

    pub fn sizes(&self) -> &[u32] {
        &self.sizes
    }

    pub fn clique_count(&self) -> u32 {
        self.sizes.len() as u32
    }

    pub fn vertex_count(&self) -> u32 {
        self.sizes.iter().sum()
    }

    pub fn max_size(&self) -> u32 {
        *self.sizes.iter().max().expect("family is non-empty")
    }

    pub fn contains(&self, v: VertexId) -> bool {
        v.clique >= 1
            && v.position >= 1
            && (v.clique as usize) <= self.sizes.len()
            && v.position <= self.sizes[(v.clique - 1) as usize]
    }

    /// All vertices in lexicographic (clique, position) order.
    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.sizes.iter().enumerate().flat_map(|(i, &m)| {
            (1..=m).map(move |j| VertexId::new(i as u32 + 1, j))
        })
    }
}

/// A partition of a family's vertex set into non-empty blocks, held in
/// canonical form.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Colouring {
    blocks: Vec<Vec<VertexId>>,
}

impl Colouring {
    /// Canonicalizes the given blocks: vertices sorted within each block,
    /// empty blocks dropped, blocks sorted by minimum vertex.
    pub fn new(blocks: Vec<Vec<VertexId>>) -> Self {
        let mut blocks: Vec<Vec<VertexId>> =
            blocks.into_iter().filter(|b| !b.is_empty()).collect();
        for b in &mut blocks {
            b.sort_unstable();
            b.dedup();
        }
        blocks.sort();
        Colouring { blocks }
    }

    pub fn blocks(&self) -> &[Vec<VertexId>] {
        &self.blocks
    }

    /// Number of blocks, i.e. the number of colours used.
    pub fn block_count(&self) -> u32 {
        self.blocks.len() as u32
    }

    /// Index (0-based, canonical order) of the block containing v.
    pub fn block_of(&self, v: VertexId) -> Option<usize> {
        self.blocks.iter().position(|b| b.contains(&v))
    }
}

impl fmt::Display for Colouring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, block) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str(" | ")?;
            }
            for (j, v) in block.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

// Deserialization re-canonicalizes, so untrusted input cannot break the
// ordering invariant.
impl<'de> Deserialize<'de> for Colouring {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            blocks: Vec<Vec<VertexId>>,
        }
        Ok(Colouring::new(Raw::deserialize(deserializer)?.blocks))
    }
}

/// True iff the blocks partition the family's vertex set and no block holds
/// two vertices of the same clique.
pub fn is_proper(family: &CliqueFamily, colouring: &Colouring) -> bool {
    let mut seen = vec![false; family.vertex_count() as usize];
    let mut count = 0usize;
    for block in colouring.blocks() {
        if block.is_empty() {
            return false;
        }
        let mut cliques: Vec<u32> = Vec::with_capacity(block.len());
        for &v in block {
            if !family.contains(v) {
                return false;
            }
            let idx = vertex_offset(family, v);
            if seen[idx] {
                return false;
            }
            seen[idx] = true;
            count += 1;
            if cliques.contains(&v.clique) {
                return false; // two vertices of one clique are adjacent
            }
            cliques.push(v.clique);
        }
    }
    count == family.vertex_count() as usize
}

fn vertex_offset(family: &CliqueFamily, v: VertexId) -> usize {
    let before: u32 = family.sizes()[..(v.clique - 1) as usize].iter().sum();
    (before + v.position - 1) as usize
}

/// Calls `f` for every k-colouring of the family, in lexicographic order of
/// the restricted-growth encoding over vertices in (i,j) order.
pub fn for_each_colouring<F: FnMut(&Colouring)>(family: &CliqueFamily, k: u32, mut f: F) {
    let vertices: Vec<VertexId> = family.vertices().collect();
    if k == 0 || k > vertices.len() as u32 || k < family.max_size() {
        return;
    }
    let mut blocks: Vec<Vec<VertexId>> = Vec::with_capacity(k as usize);
    descend(&vertices, 0, k, &mut blocks, &mut f);
}

fn descend<F: FnMut(&Colouring)>(
    vertices: &[VertexId],
    next: usize,
    k: u32,
    blocks: &mut Vec<Vec<VertexId>>,
    f: &mut F,
) {
    if next == vertices.len() {
        if blocks.len() == k as usize {
            // Blocks are already canonical: first-use order equals order by
            // minimum vertex, and members were pushed in ascending order.
            let c = Colouring {
                blocks: blocks.clone(),
            };
            f(&c);
        }
        return;
    }
    // Every remaining vertex may still have to open a new block.
    let remaining = vertices.len() - next;
    let missing = k as usize - blocks.len().min(k as usize);
    if missing > remaining {
        return;
    }
    let v = vertices[next];
    for b in 0..blocks.len() {
        // A block stays stable iff it has no vertex of the current clique;
        // vertices arrive clique-major, so checking the last entry suffices.
        if blocks[b].last().is_some_and(|w| w.clique == v.clique) {
            continue;
        }
        blocks[b].push(v);
        descend(vertices, next + 1, k, blocks, f);
        blocks[b].pop();
    }
    if (blocks.len() as u32) < k {
        blocks.push(vec![v]);
        descend(vertices, next + 1, k, blocks, f);
        blocks.pop();
    }
}

/// All k-colourings, collected in enumeration order.
pub fn enumerate_colourings(family: &CliqueFamily, k: u32) -> Vec<Colouring> {
    let mut out = Vec::new();
    for_each_colouring(family, k, |c| out.push(c.clone()));
    out
}

/// Calls `f` for every colouring, over k from max(sizes) up to the vertex count.
pub fn for_each_colouring_any_k<F: FnMut(&Colouring)>(family: &CliqueFamily, mut f: F) {
    for k in family.max_size()..=family.vertex_count() {
        for_each_colouring(family, k, &mut f);
    }
}

/// All colourings of the family, for every feasible number of colours.
pub fn enumerate_all_colourings(family: &CliqueFamily) -> Vec<Colouring> {
    let mut out = Vec::new();
    for_each_colouring_any_k(family, |c| out.push(c.clone()));
    out
}
