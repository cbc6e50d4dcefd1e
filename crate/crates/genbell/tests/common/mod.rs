//! Shared helpers for the integration suites: brute-force oracles that are
//! deliberately independent of the library's algorithms, plus small parsing
//! conveniences for golden data.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};
use std::path::Path;

use genbell::{CliqueFamily, Colouring, Edge, LabelledEulerianDigraph, VertexId};

/// The repository's committed fixture directory.
pub fn fixtures_dir() -> &'static Path {
    Path::new(concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures"))
}

/// Every partition of `items` into non-empty blocks, grown one item at a
/// time (insert into each existing block, or open a new one). Independent
/// of the library's restricted-growth enumerator.
pub fn brute_partitions<T: Clone>(items: &[T]) -> Vec<Vec<Vec<T>>> {
    let mut parts: Vec<Vec<Vec<T>>> = vec![vec![]];
    for item in items {
        let mut next = Vec::with_capacity(parts.len() * 2);
        for p in &parts {
            for b in 0..p.len() {
                let mut q = p.clone();
                q[b].push(item.clone());
                next.push(q);
            }
            let mut q = p.clone();
            q.push(vec![item.clone()]);
            next.push(q);
        }
        parts = next;
    }
    parts
}

/// All stable partitions (proper colourings) of the clique family with the
/// given sizes, as raw block lists.
pub fn brute_colourings(sizes: &[u32]) -> Vec<Vec<Vec<VertexId>>> {
    let vertices: Vec<VertexId> = sizes
        .iter()
        .enumerate()
        .flat_map(|(i, &m)| (1..=m).map(move |j| VertexId::new(i as u32 + 1, j)))
        .collect();
    brute_partitions(&vertices)
        .into_iter()
        .filter(|p| {
            p.iter().all(|block| {
                let cliques: BTreeSet<u32> = block.iter().map(|v| v.clique).collect();
                cliques.len() == block.len()
            })
        })
        .collect()
}

/// Number of stable partitions of the family into exactly k blocks.
pub fn brute_count(sizes: &[u32], k: u32) -> usize {
    brute_colourings(sizes)
        .into_iter()
        .filter(|p| p.len() as u32 == k)
        .count()
}

fn distinct_tuples(k: u32, m: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(m as usize);
    fn grow(k: u32, m: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() as u32 == m {
            out.push(cur.clone());
            return;
        }
        for v in 1..=k {
            if !cur.contains(&v) {
                cur.push(v);
                grow(k, m, cur, out);
                cur.pop();
            }
        }
    }
    grow(k, m, &mut cur, &mut out);
    out
}

/// Direct search for every canonical (n,m)-labelled Eulerian digraph: try
/// all ways to place n simple directed m-cycles (as tail tuples) on 1..=k
/// for each feasible k, keep the coverings, and deduplicate canonical
/// forms. Routes nowhere near the colouring bijection; only usable at tiny
/// sizes.
pub fn direct_digraph_search(m: u32, n: u32) -> Vec<LabelledEulerianDigraph> {
    fn search(
        tuples: &[Vec<u32>],
        n: u32,
        k: u32,
        chosen: &mut Vec<usize>,
        seen: &mut HashSet<LabelledEulerianDigraph>,
        found: &mut Vec<LabelledEulerianDigraph>,
    ) {
        if chosen.len() as u32 == n {
            let mut covered = vec![false; (k + 1) as usize];
            for &t in chosen.iter() {
                for &v in &tuples[t] {
                    covered[v as usize] = true;
                }
            }
            if !(1..=k).all(|v| covered[v as usize]) {
                return;
            }
            let cycles = chosen
                .iter()
                .map(|&t| {
                    let tails = &tuples[t];
                    (0..tails.len())
                        .map(|j| Edge::new(tails[j], tails[(j + 1) % tails.len()]))
                        .collect()
                })
                .collect();
            let d = LabelledEulerianDigraph::new(k, cycles);
            assert!(d.validate());
            let c = d.canonicalize();
            if seen.insert(c.clone()) {
                found.push(c);
            }
            return;
        }
        for t in 0..tuples.len() {
            chosen.push(t);
            search(tuples, n, k, chosen, seen, found);
            chosen.pop();
        }
    }

    let mut found = Vec::new();
    for k in m..=n * m {
        let tuples = distinct_tuples(k, m);
        let mut chosen: Vec<usize> = Vec::with_capacity(n as usize);
        let mut seen: HashSet<LabelledEulerianDigraph> = HashSet::new();
        search(&tuples, n, k, &mut chosen, &mut seen, &mut found);
    }
    found
}

/// Parses the letter notation for 2K_3 colourings with the fixture alias
/// map a..c = v1.1..v1.3, d..f = v2.1..v2.3.
pub fn letters_2k3(spec: &str) -> Colouring {
    let blocks = spec
        .split('|')
        .map(|blk| {
            blk.trim()
                .chars()
                .map(|ch| {
                    let code = ch as u32 - 'a' as u32;
                    assert!(code < 6, "letter {ch} outside a..f");
                    VertexId::new(code / 3 + 1, code % 3 + 1)
                })
                .collect()
        })
        .collect();
    Colouring::new(blocks)
}

/// All ordered size lists (compositions) with total at most `max_sum`.
pub fn families_up_to(max_sum: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn grow(remaining: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        for s in 1..=remaining {
            cur.push(s);
            grow(remaining - s, cur, out);
            cur.pop();
        }
    }
    grow(max_sum, &mut cur, &mut out);
    out.sort();
    out.dedup();
    out
}

/// Canonical colouring from raw blocks.
pub fn colouring(blocks: Vec<Vec<VertexId>>) -> Colouring {
    Colouring::new(blocks)
}

/// Family construction that must succeed.
pub fn family(sizes: &[u32]) -> CliqueFamily {
    CliqueFamily::new(sizes.to_vec()).expect("valid sizes")
}
