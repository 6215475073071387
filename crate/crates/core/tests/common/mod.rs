//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::VecDeque;

use partition_graph::local_invariants::SmallGraph;
use partition_graph::PartitionGraph;

/// Clique number by trying every vertex subset.
pub fn brute_force_clique(h: &SmallGraph) -> usize {
    let n = h.vertex_count();
    assert!(n <= 20, "subset oracle limited to 20 vertices");
    let mut best = 0;
    for mask in 0u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let members: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
        let clique = members.iter().enumerate().all(|(i, &a)| members[i + 1..].iter().all(|&b| h.are_adjacent(a, b)));
        if clique {
            best = size;
        }
    }
    best
}

/// BFS distance between two vertices using only vertices where `allowed` holds.
pub fn restricted_distance(g: &PartitionGraph, from: usize, to: usize, allowed: impl Fn(usize) -> bool) -> Option<u32> {
    let mut dist = vec![u32::MAX; g.vertex_count()];
    let mut queue = VecDeque::from([from]);
    dist[from] = 0;
    while let Some(u) = queue.pop_front() {
        if u == to {
            return Some(dist[u]);
        }
        for &w in g.neighbors(u) {
            if allowed(w) && dist[w] == u32::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    None
}

/// Number of connected components, by repeated BFS.
pub fn component_count(g: &PartitionGraph) -> usize {
    let mut seen = vec![false; g.vertex_count()];
    let mut count = 0;
    for s in 0..g.vertex_count() {
        if seen[s] {
            continue;
        }
        count += 1;
        let mut stack = vec![s];
        seen[s] = true;
        while let Some(u) = stack.pop() {
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
    }
    count
}
