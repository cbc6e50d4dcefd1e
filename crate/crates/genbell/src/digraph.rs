//! Labelled Eulerian digraphs: multigraphs whose edge multiset is split into
//! ordered simple directed cycles, one per clique, with the bijection to
//! clique colourings in both directions.
//!
//! Vertices are block identities, so digraphs are counted up to relabelling;
//! [`LabelledEulerianDigraph::canonicalize`] picks the representative whose
//! vertex order follows the minimum in-edge label.

use std::fmt;
use std::fmt::Write as _;

use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};

use crate::colouring::{
    for_each_colouring_any_k, is_proper, CliqueFamily, Colouring, VertexId,
};
use crate::error::{Error, Result};

/// A directed edge between 1-based vertex indices. Wire form is the bare
/// pair [tail, head].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub tail: u32,
    pub head: u32,
}

impl Edge {
    pub fn new(tail: u32, head: u32) -> Self {
        Edge { tail, head }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{}", self.tail, self.head)
    }
}

impl Serialize for Edge {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(2))?;
        seq.serialize_element(&self.tail)?;
        seq.serialize_element(&self.head)?;
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Edge {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct PairVisitor;
        impl<'de> Visitor<'de> for PairVisitor {
            type Value = Edge;
            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a [tail, head] pair")
            }
            fn visit_seq<A: SeqAccess<'de>>(
                self,
                mut seq: A,
            ) -> std::result::Result<Edge, A::Error> {
                let tail = seq
                    .next_element()?
                    .ok_or_else(|| de::Error::invalid_length(0, &self))?;
                let head = seq
                    .next_element()?
                    .ok_or_else(|| de::Error::invalid_length(1, &self))?;
                if seq.next_element::<u32>()?.is_some() {
                    return Err(de::Error::invalid_length(3, &self));
                }
                Ok(Edge::new(tail, head))
            }
        }
        deserializer.deserialize_seq(PairVisitor)
    }
}

/// An Eulerian digraph on vertices 1..=k whose edges are partitioned into
/// ordered directed cycles; edge j of cycle i carries the implicit label
/// e_{i,j}. Loops (1-cycles) and parallel edges across cycles are allowed;
/// within one cycle the visited vertices are distinct.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LabelledEulerianDigraph {
    #[serde(rename = "k")]
    pub vertex_count: u32,
    pub cycles: Vec<Vec<Edge>>,
}

impl LabelledEulerianDigraph {
    pub fn new(vertex_count: u32, cycles: Vec<Vec<Edge>>) -> Self {
        LabelledEulerianDigraph {
            vertex_count,
            cycles,
        }
    }

    pub fn cycle_lengths(&self) -> Vec<u32> {
        self.cycles.iter().map(|c| c.len() as u32).collect()
    }

    /// True iff all structural invariants hold; see [`check`](Self::check)
    /// for the reasons behind a rejection.
    pub fn validate(&self) -> bool {
        self.check().is_ok()
    }

    /// Verifies the invariants, reporting the first violation:
    /// vertex indices in range, each cycle chains head-to-tail and closes,
    /// visits distinct vertices, and every vertex is the head of some edge.
    /// In-degree/out-degree balance — implied by the cycle structure — is
    /// recomputed from scratch as a final independent check.
    pub fn check(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidDigraph(msg));
        let k = self.vertex_count;
        if k == 0 {
            return bad("vertex count must be positive".into());
        }
        if self.cycles.is_empty() {
            return bad("must contain at least one cycle".into());
        }
        let mut indeg = vec![0u32; (k + 1) as usize];
        let mut outdeg = vec![0u32; (k + 1) as usize];
        for (ci, cycle) in self.cycles.iter().enumerate() {
            let i = ci + 1;
            if cycle.is_empty() {
                return bad(format!("cycle {i} is empty"));
            }
            let mut tails: Vec<u32> = Vec::with_capacity(cycle.len());
            for (ej, e) in cycle.iter().enumerate() {
                let j = ej + 1;
                if e.tail < 1 || e.tail > k || e.head < 1 || e.head > k {
                    return bad(format!("edge e{i},{j} ({e}) leaves the vertex range 1..={k}"));
                }
                let next = &cycle[(ej + 1) % cycle.len()];
                if e.head != next.tail {
                    return bad(format!(
                        "cycle {i} breaks after edge e{i},{j}: head {} != next tail {}",
                        e.head, next.tail
                    ));
                }
                if tails.contains(&e.tail) {
                    return bad(format!("cycle {i} revisits vertex {}", e.tail));
                }
                tails.push(e.tail);
                outdeg[e.tail as usize] += 1;
                indeg[e.head as usize] += 1;
            }
        }
        for v in 1..=k {
            if indeg[v as usize] == 0 {
                return bad(format!("vertex {v} is not the head of any edge"));
            }
        }
        assert!(
            (1..=k).all(|v| indeg[v as usize] == outdeg[v as usize]),
            "closed cycles must balance in- and out-degrees"
        );
        Ok(())
    }

    /// Relabels vertices into ascending order of their minimum in-edge label
    /// (labels ordered lexicographically by (cycle, position)). Idempotent,
    /// and invariant under vertex relabelling of the input.
    pub fn canonicalize(&self) -> LabelledEulerianDigraph {
        self.check().expect("canonicalize requires a valid digraph");
        let k = self.vertex_count as usize;
        // Scanning cycles in order visits labels in ascending order, so the
        // first head occurrence of a vertex is its minimum in-edge label.
        let mut relabel = vec![0u32; k + 1];
        let mut next = 0u32;
        for cycle in &self.cycles {
            for e in cycle {
                if relabel[e.head as usize] == 0 {
                    next += 1;
                    relabel[e.head as usize] = next;
                }
            }
        }
        debug_assert_eq!(next as usize, k, "every vertex has an in-edge");
        let cycles = self
            .cycles
            .iter()
            .map(|cycle| {
                cycle
                    .iter()
                    .map(|e| Edge::new(relabel[e.tail as usize], relabel[e.head as usize]))
                    .collect()
            })
            .collect();
        LabelledEulerianDigraph::new(self.vertex_count, cycles)
    }

    /// Renders the digraph as a Graphviz `digraph` with `e{i},{j}` edge
    /// labels. Output is deterministic byte-for-byte.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph {\n");
        for v in 1..=self.vertex_count {
            let _ = writeln!(out, "  {v};");
        }
        for (ci, cycle) in self.cycles.iter().enumerate() {
            for (ej, e) in cycle.iter().enumerate() {
                let _ = writeln!(
                    out,
                    "  {} -> {} [label=\"e{},{}\"];",
                    e.tail,
                    e.head,
                    ci + 1,
                    ej + 1
                );
            }
        }
        out.push_str("}\n");
        out
    }
}

/// Builds the digraph associated with a proper colouring: one vertex per
/// block (in canonical block order) and, for clique i of size m, edges
/// e_{i,j} from the block of v_{i,j-1} to the block of v_{i,j}, indices
/// cyclic so that e_{i,1} leaves the block of v_{i,m}. A size-1 clique
/// yields a loop.
pub fn colouring_to_digraph(
    family: &CliqueFamily,
    colouring: &Colouring,
) -> Result<LabelledEulerianDigraph> {
    if !is_proper(family, colouring) {
        return Err(Error::ImproperColouring(format!(
            "{colouring} does not properly colour cliques of sizes {:?}",
            family.sizes()
        )));
    }
    let block_of = |v: VertexId| -> u32 {
        colouring.block_of(v).expect("colouring covers the family") as u32 + 1
    };
    let cycles = family
        .sizes()
        .iter()
        .enumerate()
        .map(|(ci, &m)| {
            let i = ci as u32 + 1;
            (1..=m)
                .map(|j| {
                    let prev = if j == 1 { m } else { j - 1 };
                    Edge::new(block_of(VertexId::new(i, prev)), block_of(VertexId::new(i, j)))
                })
                .collect()
        })
        .collect();
    let d = LabelledEulerianDigraph::new(colouring.block_count(), cycles);
    debug_assert!(d.validate());
    Ok(d)
}

/// Inverts [`colouring_to_digraph`]: block t collects the vertices v_{i,j}
/// whose edge e_{i,j} has head t. Rejects an invalid digraph or one whose
/// cycle lengths do not match the family sizes.
pub fn digraph_to_colouring(
    family: &CliqueFamily,
    d: &LabelledEulerianDigraph,
) -> Result<Colouring> {
    d.check()?;
    let got = d.cycle_lengths();
    if got != family.sizes() {
        return Err(Error::CycleLengthMismatch {
            want: family.sizes().to_vec(),
            got,
        });
    }
    let mut blocks: Vec<Vec<VertexId>> = vec![Vec::new(); d.vertex_count as usize];
    for (ci, cycle) in d.cycles.iter().enumerate() {
        for (ej, e) in cycle.iter().enumerate() {
            blocks[(e.head - 1) as usize].push(VertexId::new(ci as u32 + 1, ej as u32 + 1));
        }
    }
    let colouring = Colouring::new(blocks);
    debug_assert!(is_proper(family, &colouring));
    Ok(colouring)
}

/// Calls `f` with one canonical digraph per relabelling class, by mapping
/// every colouring of the family through the bijection. The image of a
/// canonical colouring is already canonical, so no deduplication is needed.
pub fn for_each_digraph<F: FnMut(&LabelledEulerianDigraph)>(family: &CliqueFamily, mut f: F) {
    for_each_colouring_any_k(family, |c| {
        let d = colouring_to_digraph(family, c).expect("enumerated colourings are proper");
        debug_assert_eq!(d, d.canonicalize());
        f(&d);
    });
}

/// All canonical (n,m)-labelled Eulerian digraphs for the given cycle
/// lengths, in colouring enumeration order.
pub fn enumerate_digraphs(sizes: &[u32]) -> Result<Vec<LabelledEulerianDigraph>> {
    let family = CliqueFamily::new(sizes.to_vec())?;
    let mut out = Vec::new();
    for_each_digraph(&family, |d| out.push(d.clone()));
    Ok(out)
}

/// A directed path with explicit start vertex; `edges` chain head-to-tail
/// and the start equals the first tail. A path of zero edges is the remnant
/// of a loop and is anchored by `start` alone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelledPath {
    pub start: u32,
    pub edges: Vec<Edge>,
}

/// The result of deleting the last edge of every cycle of a labelled
/// Eulerian digraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathSystem {
    pub vertex_count: u32,
    pub paths: Vec<LabelledPath>,
}

/// Deletes the closing edge of each cycle, leaving a system of labelled
/// directed paths (empty and anchored where the cycle was a loop).
pub fn to_paths(d: &LabelledEulerianDigraph) -> Result<PathSystem> {
    d.check()?;
    let paths = d
        .cycles
        .iter()
        .map(|cycle| LabelledPath {
            start: cycle[0].tail,
            edges: cycle[..cycle.len() - 1].to_vec(),
        })
        .collect();
    Ok(PathSystem {
        vertex_count: d.vertex_count,
        paths,
    })
}

/// Re-closes each path of the system back into a cycle of the prescribed
/// length: a closing edge from the final head to the start, or a loop at
/// the anchor for empty paths. Rejects systems whose shape or re-closure
/// violates the digraph invariants.
pub fn from_paths(p: &PathSystem, sizes: &[u32]) -> Result<LabelledEulerianDigraph> {
    let bad = |msg: String| Err(Error::BadPathSystem(msg));
    if p.paths.len() != sizes.len() {
        return bad(format!(
            "expected {} paths for sizes {sizes:?}, got {}",
            sizes.len(),
            p.paths.len()
        ));
    }
    let mut cycles = Vec::with_capacity(sizes.len());
    for (pi, (path, &m)) in p.paths.iter().zip(sizes).enumerate() {
        let i = pi + 1;
        if m == 0 {
            return bad(format!("size {m} of cycle {i} is not positive"));
        }
        if path.edges.len() as u32 != m - 1 {
            return bad(format!(
                "path {i} has {} edges, want {} for a {m}-cycle",
                path.edges.len(),
                m - 1
            ));
        }
        match path.edges.first() {
            None => cycles.push(vec![Edge::new(path.start, path.start)]),
            Some(first) => {
                if first.tail != path.start {
                    return bad(format!(
                        "path {i} starts at {} but its first edge is {first}",
                        path.start
                    ));
                }
                let mut cycle = path.edges.clone();
                let last = cycle.last().expect("non-empty");
                cycle.push(Edge::new(last.head, path.start));
                cycles.push(cycle);
            }
        }
    }
    let d = LabelledEulerianDigraph::new(p.vertex_count, cycles);
    d.check()?;
    Ok(d)
}
