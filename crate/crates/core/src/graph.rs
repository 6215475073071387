//! The partition graph `G_n`: vertices are the partitions of `n`, edges are
//! single-cell transfers between rows followed by re-sorting.

use std::collections::{HashMap, VecDeque};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::partitions::{decreasing_lex, enumerate_partitions, Partition};

/// Default refusal threshold for `build`; p(40) = 37338.
pub const DEFAULT_MAX_N: u32 = 40;

/// All partitions reachable from `lambda` by moving one cell from one row to
/// another (possibly new) row, in decreasing lexicographic order.
pub fn neighbors(lambda: &Partition) -> Vec<Partition> {
    let parts = lambda.parts();
    let len = parts.len();
    let mut out: Vec<Partition> = Vec::new();
    let mut scratch = Vec::with_capacity(len + 1);
    for from in 0..len {
        // equal parts give identical results; take the last copy of a run
        if from + 1 < len && parts[from + 1] == parts[from] {
            continue;
        }
        for to in 0..=len {
            if to == from {
                continue;
            }
            scratch.clear();
            scratch.extend_from_slice(parts);
            scratch.push(0);
            scratch[from] -= 1;
            scratch[to] += 1;
            scratch.retain(|&x| x > 0);
            scratch.sort_unstable_by(|a, b| b.cmp(a));
            if scratch.as_slice() != parts {
                out.push(Partition::from_canonical(scratch.clone()));
            }
        }
    }
    out.sort_by(decreasing_lex);
    out.dedup();
    out
}

/// Immutable adjacency structure for `G_n`. Vertex indices follow
/// decreasing lexicographic order, so index 0 is `(n)` and the last index
/// is `(1^n)`.
#[derive(Clone, Debug)]
pub struct PartitionGraph {
    n: u32,
    vertices: Vec<Partition>,
    index: HashMap<Partition, usize>,
    adjacency: Vec<Vec<usize>>,
    conjugate: Vec<usize>,
}

impl PartitionGraph {
    /// Builds `G_n` under the default size guard.
    pub fn build(n: u32) -> Result<Self> {
        Self::build_with_limit(n, DEFAULT_MAX_N)
    }

    pub fn build_with_limit(n: u32, max_n: u32) -> Result<Self> {
        if n > max_n {
            return Err(Error::SizeGuard { n, limit: max_n });
        }
        let vertices = enumerate_partitions(n)?;
        let index: HashMap<Partition, usize> = vertices.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let adjacency: Vec<Vec<usize>> = vertices
            .par_iter()
            .map(|v| {
                let mut adj: Vec<usize> = neighbors(v).iter().map(|u| index[u]).collect();
                adj.sort_unstable();
                adj
            })
            .collect();
        let conjugate = vertices.iter().map(|v| index[&v.conjugate()]).collect();
        Ok(PartitionGraph { n, vertices, index, adjacency, conjugate })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> &[Partition] {
        &self.vertices
    }

    pub fn vertex(&self, v: usize) -> &Partition {
        &self.vertices[v]
    }

    pub fn index_of(&self, lambda: &Partition) -> Option<usize> {
        self.index.get(lambda).copied()
    }

    /// Sorted neighbor indices of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn are_adjacent(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Index of the conjugate partition.
    pub fn conjugate_of(&self, v: usize) -> usize {
        self.conjugate[v]
    }

    /// Self-conjugate vertices in index (decreasing lexicographic) order.
    pub fn self_conjugate(&self) -> Vec<usize> {
        (0..self.vertex_count()).filter(|&v| self.conjugate[v] == v).collect()
    }

    /// Every edge once, as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(u, adj)| adj.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { index: v, count: self.vertex_count() })
        }
    }

    /// Unit-weight shortest-path distance from the nearest source to every
    /// vertex. `G_n` is connected, so every entry is finite.
    pub fn distances_from(&self, sources: &[usize]) -> Result<Vec<u32>> {
        if sources.is_empty() {
            return Err(Error::EmptySources);
        }
        let mut dist = vec![u32::MAX; self.vertex_count()];
        let mut queue = VecDeque::new();
        for &s in sources {
            self.check_vertex(s)?;
            if dist[s] != 0 {
                dist[s] = 0;
                queue.push_back(s);
            }
        }
        while let Some(u) = queue.pop_front() {
            let next = dist[u] + 1;
            for &w in &self.adjacency[u] {
                if dist[w] == u32::MAX {
                    dist[w] = next;
                    queue.push_back(w);
                }
            }
        }
        debug_assert!(dist.iter().all(|&d| d != u32::MAX), "G_n is connected");
        Ok(dist)
    }
}
