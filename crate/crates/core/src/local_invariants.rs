//! Per-vertex degree and local simplex dimension, the layers they induce,
//! and the spectra of attained values.
//!
//! The local simplex dimension of `λ` is the largest dimension of a simplex
//! of the clique complex `Cl(G_n)` containing `λ`. A maximal clique through
//! `λ` is `λ` plus a maximum clique of its open neighborhood, so the
//! dimension equals the clique number of the neighborhood graph.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::PartitionGraph;

/// Default vertex bound accepted by [`clique_number`].
pub const DEFAULT_CLIQUE_BOUND: usize = 64;

/// A small undirected simple graph on vertices `0..len`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SmallGraph {
    adjacency: Vec<Vec<usize>>,
}

impl SmallGraph {
    pub fn empty(vertices: usize) -> Self {
        SmallGraph { adjacency: vec![Vec::new(); vertices] }
    }

    /// Builds from an edge list; duplicates and loops are ignored.
    pub fn from_edges(vertices: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::empty(vertices);
        for &(u, v) in edges {
            assert!(u < vertices && v < vertices, "edge ({u}, {v}) out of range");
            if u != v {
                g.adjacency[u].push(v);
                g.adjacency[v].push(u);
            }
        }
        for adj in &mut g.adjacency {
            adj.sort_unstable();
            adj.dedup();
        }
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn are_adjacent(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }
}

/// Induced subgraph on the open neighborhood of a vertex. Local vertex `i`
/// corresponds to `members[i]` in the parent graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Neighborhood {
    pub center: usize,
    pub members: Vec<usize>,
    pub graph: SmallGraph,
}

pub fn neighborhood_graph(g: &PartitionGraph, v: usize) -> Result<Neighborhood> {
    g.check_vertex(v)?;
    let members = g.neighbors(v).to_vec();
    let mut edges = Vec::new();
    for (i, &a) in members.iter().enumerate() {
        for (j, &b) in members.iter().enumerate().skip(i + 1) {
            if g.are_adjacent(a, b) {
                edges.push((i, j));
            }
        }
    }
    let graph = SmallGraph::from_edges(members.len(), &edges);
    Ok(Neighborhood { center: v, members, graph })
}

/// Exact clique number under the default vertex bound.
pub fn clique_number(h: &SmallGraph) -> Result<usize> {
    clique_number_bounded(h, DEFAULT_CLIQUE_BOUND)
}

/// Exact clique number by branch and bound, pruning with a greedy
/// colouring of the candidate set.
pub fn clique_number_bounded(h: &SmallGraph, bound: usize) -> Result<usize> {
    let count = h.vertex_count();
    if count > bound {
        return Err(Error::CliqueBound { vertices: count, bound });
    }
    if count == 0 {
        return Ok(0);
    }
    let adjacency: Vec<Bits> = (0..count)
        .map(|v| {
            let mut b = Bits::new(count);
            for &u in h.neighbors(v) {
                b.insert(u);
            }
            b
        })
        .collect();
    let search = CliqueSearch { adjacency };
    let mut best = 1;
    search.expand(Bits::full(count), 0, &mut best);
    Ok(best)
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Bits {
    words: Vec<u64>,
}

impl Bits {
    fn new(len: usize) -> Self {
        Bits { words: vec![0; len.div_ceil(64)] }
    }

    fn full(len: usize) -> Self {
        let mut b = Self::new(len);
        for i in 0..len {
            b.insert(i);
        }
        b
    }

    fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    fn first(&self) -> Option<usize> {
        self.words.iter().enumerate().find(|(_, &w)| w != 0).map(|(i, &w)| i * 64 + w.trailing_zeros() as usize)
    }

    fn intersect(&self, other: &Bits) -> Bits {
        Bits { words: self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect() }
    }

    fn subtract(&mut self, other: &Bits) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }
}

struct CliqueSearch {
    adjacency: Vec<Bits>,
}

impl CliqueSearch {
    /// Greedy sequential colouring of `candidates`. Returns vertices in
    /// non-decreasing colour order together with their colour numbers.
    fn colour_order(&self, candidates: &Bits) -> (Vec<usize>, Vec<usize>) {
        let mut uncoloured = candidates.clone();
        let mut order = Vec::new();
        let mut colours = Vec::new();
        let mut colour = 0;
        while !uncoloured.is_empty() {
            colour += 1;
            let mut available = uncoloured.clone();
            while let Some(v) = available.first() {
                available.remove(v);
                available.subtract(&self.adjacency[v]);
                uncoloured.remove(v);
                order.push(v);
                colours.push(colour);
            }
        }
        (order, colours)
    }

    fn expand(&self, mut candidates: Bits, size: usize, best: &mut usize) {
        let (order, colours) = self.colour_order(&candidates);
        for i in (0..order.len()).rev() {
            // the colour count bounds any clique inside the remaining candidates
            if size + colours[i] <= *best {
                return;
            }
            let v = order[i];
            let next = candidates.intersect(&self.adjacency[v]);
            if next.is_empty() {
                *best = (*best).max(size + 1);
            } else {
                self.expand(next, size + 1, best);
            }
            candidates.remove(v);
        }
    }
}

/// Largest simplex dimension of `Cl(G_n)` through `v`; 0 for an isolated vertex.
pub fn local_simplex_dimension(g: &PartitionGraph, v: usize) -> Result<usize> {
    local_simplex_dimension_bounded(g, v, DEFAULT_CLIQUE_BOUND)
}

pub fn local_simplex_dimension_bounded(g: &PartitionGraph, v: usize, bound: usize) -> Result<usize> {
    let hood = neighborhood_graph(g, v)?;
    clique_number_bounded(&hood.graph, bound)
}

/// Degree and local simplex dimension for every vertex of one graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalInvariants {
    degree: Vec<usize>,
    dim_loc: Vec<usize>,
}

/// Layers (value → sorted vertex indices), spectra and maxima.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LayersAndSpectra {
    pub degree_layers: BTreeMap<usize, Vec<usize>>,
    pub simplex_layers: BTreeMap<usize, Vec<usize>>,
    pub degree_spectrum: BTreeSet<usize>,
    pub simplex_spectrum: BTreeSet<usize>,
    pub max_degree: usize,
    pub max_dim_loc: usize,
}

impl LocalInvariants {
    pub fn compute(g: &PartitionGraph) -> Result<Self> {
        Self::compute_with_bound(g, DEFAULT_CLIQUE_BOUND)
    }

    pub fn compute_with_bound(g: &PartitionGraph, bound: usize) -> Result<Self> {
        let degree = (0..g.vertex_count()).map(|v| g.degree(v)).collect();
        let dim_loc = (0..g.vertex_count())
            .into_par_iter()
            .map(|v| local_simplex_dimension_bounded(g, v, bound))
            .collect::<Result<Vec<_>>>()?;
        Ok(LocalInvariants { degree, dim_loc })
    }

    pub fn degree(&self, v: usize) -> usize {
        self.degree[v]
    }

    pub fn dim_loc(&self, v: usize) -> usize {
        self.dim_loc[v]
    }

    /// `ω_loc`: size of the largest clique containing `v`.
    pub fn local_clique_number(&self, v: usize) -> usize {
        self.dim_loc[v] + 1
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degree
    }

    pub fn dims(&self) -> &[usize] {
        &self.dim_loc
    }

    pub fn max_degree(&self) -> usize {
        self.degree.iter().copied().max().unwrap_or(0)
    }

    pub fn max_dim_loc(&self) -> usize {
        self.dim_loc.iter().copied().max().unwrap_or(0)
    }

    /// `D_d(n)` for every attained `d`.
    pub fn degree_layers(&self) -> BTreeMap<usize, Vec<usize>> {
        layers(&self.degree)
    }

    /// `L_r(n)` for every attained `r`.
    pub fn simplex_layers(&self) -> BTreeMap<usize, Vec<usize>> {
        layers(&self.dim_loc)
    }

    pub fn layers_and_spectra(&self) -> LayersAndSpectra {
        let degree_layers = self.degree_layers();
        let simplex_layers = self.simplex_layers();
        LayersAndSpectra {
            degree_spectrum: degree_layers.keys().copied().collect(),
            simplex_spectrum: simplex_layers.keys().copied().collect(),
            degree_layers,
            simplex_layers,
            max_degree: self.max_degree(),
            max_dim_loc: self.max_dim_loc(),
        }
    }
}

fn layers(values: &[usize]) -> BTreeMap<usize, Vec<usize>> {
    let mut out: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (v, &value) in values.iter().enumerate() {
        out.entry(value).or_default().push(v);
    }
    out
}
