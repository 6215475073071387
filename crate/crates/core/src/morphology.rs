//! Large-scale structures of `G_n`: antenna vertices, main chain, side
//! edges, boundary framework, self-conjugate axis, axial distance, central
//! regions, spine, and the axial/transverse edge dichotomy.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::PartitionGraph;
use crate::partitions::Partition;

/// Graph distance to the self-conjugate axis. `Infinite` only when the axis
/// is empty. Orders with every finite value below `Infinite`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AxialDistance {
    Finite(u32),
    Infinite,
}

impl AxialDistance {
    pub fn finite(self) -> Option<u32> {
        match self {
            AxialDistance::Finite(d) => Some(d),
            AxialDistance::Infinite => None,
        }
    }

    pub fn within(self, r: u32) -> bool {
        matches!(self, AxialDistance::Finite(d) if d <= r)
    }
}

impl fmt::Display for AxialDistance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AxialDistance::Finite(d) => write!(f, "{d}"),
            AxialDistance::Infinite => f.write_str("inf"),
        }
    }
}

impl std::str::FromStr for AxialDistance {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "inf" {
            return Ok(AxialDistance::Infinite);
        }
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) || (s.len() > 1 && s.starts_with('0')) {
            return Err(Error::Parse { input: s.to_string(), reason: "expected a distance or \"inf\"" });
        }
        s.parse()
            .map(AxialDistance::Finite)
            .map_err(|_| Error::Parse { input: s.to_string(), reason: "distance out of range" })
    }
}

/// Direction of an oriented edge relative to the axis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EdgeDirection {
    /// Axial distance does not increase.
    Axial,
    /// Axial distance strictly increases.
    Transverse,
}

/// `{(n), (1^n)}`; a single vertex when `n = 1`.
pub fn antenna_vertices(n: u32) -> Result<Vec<Partition>> {
    let row = Partition::single_row(n)?;
    if n == 1 {
        return Ok(vec![row]);
    }
    Ok(vec![row, Partition::single_column(n)?])
}

/// Hooks `(n-k, 1^k)` for `k = 0..n-1`, in path order.
pub fn main_chain(n: u32) -> Result<Vec<Partition>> {
    (0..n.max(1)).map(|k| Partition::hook(n, k)).collect()
}

/// Left edge `(n-k, k)` for `k = 1..⌊n/2⌋` and its conjugate image.
/// Both are empty for `n = 1`.
pub fn side_edges(n: u32) -> Result<(Vec<Partition>, Vec<Partition>)> {
    if n == 0 {
        return Err(Error::NonPositive(0));
    }
    let left: Vec<Partition> = (1..=n / 2).map(|k| Partition::new(vec![n - k, k])).collect::<Result<_>>()?;
    let right = left.iter().map(Partition::conjugate).collect();
    Ok((left, right))
}

/// Boundary framework `F_n` and its complement, as sorted vertex indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Framework {
    pub main_chain: Vec<usize>,
    pub left_edge: Vec<usize>,
    pub right_edge: Vec<usize>,
    pub members: Vec<usize>,
    pub interior: Vec<usize>,
}

pub fn boundary_framework(g: &PartitionGraph) -> Result<Framework> {
    let n = g.n();
    let lookup = |list: Vec<Partition>| -> Vec<usize> {
        list.iter().map(|p| g.index_of(p).expect("framework partition belongs to G_n")).collect()
    };
    let main_chain = lookup(main_chain(n)?);
    let (left, right) = side_edges(n)?;
    let (left_edge, right_edge) = (lookup(left), lookup(right));

    let mut in_framework = vec![false; g.vertex_count()];
    for &v in main_chain.iter().chain(&left_edge).chain(&right_edge) {
        in_framework[v] = true;
    }
    let (members, interior): (Vec<usize>, Vec<usize>) = (0..g.vertex_count()).partition(|&v| in_framework[v]);
    Ok(Framework { main_chain, left_edge, right_edge, members, interior })
}

/// Axial distance of every vertex; all `Infinite` when the axis is empty.
pub fn axial_distance(g: &PartitionGraph) -> Vec<AxialDistance> {
    let axis = g.self_conjugate();
    if axis.is_empty() {
        return vec![AxialDistance::Infinite; g.vertex_count()];
    }
    g.distances_from(&axis).expect("nonempty axis of valid vertices").into_iter().map(AxialDistance::Finite).collect()
}

/// `C_n^(r)`: non-framework vertices within axial distance `r`.
pub fn central_region(framework: &Framework, axial: &[AxialDistance], r: u32) -> Vec<usize> {
    framework.interior.iter().copied().filter(|&v| axial[v].within(r)).collect()
}

/// Vertices on some shortest path between two consecutive axis vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bridge {
    pub from: usize,
    pub to: usize,
    pub distance: u32,
    pub members: Vec<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Spine {
    /// Self-conjugate vertices in decreasing lexicographic order.
    pub axis: Vec<usize>,
    pub bridges: Vec<Bridge>,
    /// Axis plus every bridge, sorted.
    pub vertices: Vec<usize>,
}

impl Spine {
    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }
}

/// The spine of `G_n`. A vertex `v` lies on a shortest `a`–`b` path iff
/// `d(a, v) + d(v, b) = d(a, b)`, which avoids enumerating paths.
pub fn spine(g: &PartitionGraph) -> Spine {
    // vertex indices already follow decreasing lexicographic order
    let axis = g.self_conjugate();
    let mut on_spine = vec![false; g.vertex_count()];
    for &s in &axis {
        on_spine[s] = true;
    }
    let maps: Vec<Vec<u32>> = axis.iter().map(|&s| g.distances_from(&[s]).expect("valid source")).collect();
    let bridges: Vec<Bridge> = axis
        .windows(2)
        .zip(maps.windows(2))
        .map(|(pair, dist)| {
            let (from, to) = (pair[0], pair[1]);
            let distance = dist[0][to];
            let members: Vec<usize> = (0..g.vertex_count()).filter(|&v| dist[0][v] + dist[1][v] == distance).collect();
            for &v in &members {
                on_spine[v] = true;
            }
            Bridge { from, to, distance, members }
        })
        .collect();
    let vertices = (0..g.vertex_count()).filter(|&v| on_spine[v]).collect();
    Spine { axis, bridges, vertices }
}

/// Classifies `from → to` by the change in axial distance.
pub fn classify_oriented_edge(
    g: &PartitionGraph,
    axial: &[AxialDistance],
    from: usize,
    to: usize,
) -> Result<EdgeDirection> {
    g.check_vertex(from)?;
    g.check_vertex(to)?;
    if !g.are_adjacent(from, to) {
        return Err(Error::NotAdjacent { from, to });
    }
    match (axial[from], axial[to]) {
        (AxialDistance::Finite(a), AxialDistance::Finite(b)) => {
            Ok(if b <= a { EdgeDirection::Axial } else { EdgeDirection::Transverse })
        }
        _ => Err(Error::UndefinedAxis { n: g.n() }),
    }
}

/// Every morphological structure of one `G_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorphologyReport {
    pub n: u32,
    pub antenna: Vec<usize>,
    pub framework: Framework,
    pub axis: Vec<usize>,
    pub axial_distance: Vec<AxialDistance>,
    /// `C_n^(r)` for each requested `r`.
    pub central_regions: BTreeMap<u32, Vec<usize>>,
    pub spine: Spine,
    in_framework: Vec<bool>,
}

impl MorphologyReport {
    pub fn compute(g: &PartitionGraph, radii: &[u32]) -> Result<Self> {
        let n = g.n();
        let antenna = antenna_vertices(n)?.iter().map(|p| g.index_of(p).expect("antenna in G_n")).collect();
        let framework = boundary_framework(g)?;
        let axial_distance = axial_distance(g);
        let central_regions = radii.iter().map(|&r| (r, central_region(&framework, &axial_distance, r))).collect();
        let mut in_framework = vec![false; g.vertex_count()];
        for &v in &framework.members {
            in_framework[v] = true;
        }
        Ok(MorphologyReport {
            n,
            antenna,
            axis: g.self_conjugate(),
            axial_distance,
            central_regions,
            spine: spine(g),
            framework,
            in_framework,
        })
    }

    pub fn in_framework(&self, v: usize) -> bool {
        self.in_framework[v]
    }

    /// `C_n^(r)` for any `r`, whether or not it was precomputed.
    pub fn central_region(&self, r: u32) -> Vec<usize> {
        match self.central_regions.get(&r) {
            Some(c) => c.clone(),
            None => central_region(&self.framework, &self.axial_distance, r),
        }
    }

    pub fn in_central_region(&self, v: usize, r: u32) -> bool {
        !self.in_framework[v] && self.axial_distance[v].within(r)
    }

    pub fn classify(&self, g: &PartitionGraph, from: usize, to: usize) -> Result<EdgeDirection> {
        classify_oriented_edge(g, &self.axial_distance, from, to)
    }
}
