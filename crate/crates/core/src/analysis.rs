//! Per-n pipelines (graph, local invariants, morphology) and the scans that
//! run them across a range of `n`.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{PartitionGraph, DEFAULT_MAX_N};
use crate::local_invariants::{LocalInvariants, DEFAULT_CLIQUE_BOUND};
use crate::morphology::MorphologyReport;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AnalysisOptions {
    /// Largest `n` a graph may be built for.
    pub max_n: u32,
    /// Largest neighborhood the clique search accepts.
    pub clique_bound: usize,
    /// Radii of the central regions to precompute.
    pub radii: Vec<u32>,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions { max_n: DEFAULT_MAX_N, clique_bound: DEFAULT_CLIQUE_BOUND, radii: vec![1, 2] }
    }
}

/// Graph, local invariants and morphology for one `n`.
#[derive(Clone, Debug)]
pub struct Analysis {
    pub graph: PartitionGraph,
    pub invariants: LocalInvariants,
    pub morphology: MorphologyReport,
}

impl Analysis {
    pub fn compute(n: u32, options: &AnalysisOptions) -> Result<Self> {
        let graph = PartitionGraph::build_with_limit(n, options.max_n)?;
        let invariants = LocalInvariants::compute_with_bound(&graph, options.clique_bound)?;
        let morphology = MorphologyReport::compute(&graph, &options.radii)?;
        Ok(Analysis { graph, invariants, morphology })
    }

    pub fn n(&self) -> u32 {
        self.graph.n()
    }
}

/// Inclusive range of `n`, written `A..B` or as a single `N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NRange {
    pub start: u32,
    pub end: u32,
}

impl NRange {
    pub fn new(start: u32, end: u32) -> Result<Self> {
        if start == 0 || end < start {
            return Err(Error::InvalidRange(format!("{start}..{end}")));
        }
        Ok(NRange { start, end })
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> {
        self.start..=self.end
    }
}

impl FromStr for NRange {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidRange(s.to_string());
        let num = |t: &str| -> Result<u32> {
            if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            t.parse().map_err(|_| bad())
        };
        let (start, end) = match s.split_once("..") {
            Some((a, b)) => (num(a)?, num(b)?),
            None => {
                let n = num(s)?;
                (n, n)
            }
        };
        NRange::new(start, end).map_err(|_| bad())
    }
}

impl fmt::Display for NRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.start, self.end)
    }
}

/// Runs the per-n pipeline for every `n` in the range. Work fans out across
/// the rayon pool; results come back ordered by `n`.
pub fn analyze_range(range: NRange, options: &AnalysisOptions) -> Result<Vec<Analysis>> {
    if range.end > options.max_n {
        return Err(Error::SizeGuard { n: range.end, limit: options.max_n });
    }
    range.iter().collect::<Vec<_>>().into_par_iter().map(|n| Analysis::compute(n, options)).collect()
}

/// Least `n <= n_max` at which `feature` holds, if any.
pub fn emergence_threshold<F>(feature: F, n_max: u32, options: &AnalysisOptions) -> Result<Option<u32>>
where
    F: Fn(&Analysis) -> bool,
{
    for n in 1..=n_max {
        if feature(&Analysis::compute(n, options)?) {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

/// Structural features with a built-in emergence scan.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Feature {
    /// `|SC_n| >= 2`.
    SeveralAxisVertices,
    /// Some vertex has local simplex dimension at least the given value.
    SimplexDimensionAtLeast(usize),
    /// `C_n^(1)` is nonempty.
    NarrowCentralRegion,
    /// The spine has a vertex outside `SC_n`.
    NontrivialSpine,
}

impl Feature {
    pub fn builtin() -> Vec<Feature> {
        let mut out = vec![Feature::SeveralAxisVertices];
        out.extend((1..=4).map(Feature::SimplexDimensionAtLeast));
        out.push(Feature::NarrowCentralRegion);
        out.push(Feature::NontrivialSpine);
        out
    }

    pub fn holds(&self, a: &Analysis) -> bool {
        let m = &a.morphology;
        match *self {
            Feature::SeveralAxisVertices => m.axis.len() >= 2,
            Feature::SimplexDimensionAtLeast(r) => a.invariants.max_dim_loc() >= r,
            Feature::NarrowCentralRegion => m.framework.interior.iter().any(|&v| m.in_central_region(v, 1)),
            Feature::NontrivialSpine => m.spine.vertices.len() > m.axis.len(),
        }
    }
}

impl fmt::Display for Feature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Feature::SeveralAxisVertices => f.write_str("|SC_n| >= 2"),
            Feature::SimplexDimensionAtLeast(r) => write!(f, "max dim_loc >= {r}"),
            Feature::NarrowCentralRegion => f.write_str("C_n^(1) nonempty"),
            Feature::NontrivialSpine => f.write_str("spine nontrivial"),
        }
    }
}

/// Thresholds of every feature over already-computed analyses (ordered by `n`).
pub fn thresholds(analyses: &[Analysis], features: &[Feature]) -> Vec<(Feature, Option<u32>)> {
    features.iter().map(|f| (*f, analyses.iter().find(|a| f.holds(a)).map(Analysis::n))).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConcentrationVerdict {
    /// `SC_n` is empty, so central regions are empty by convention.
    AxisEmpty,
    Checked {
        max_degree_contained: bool,
        max_dim_contained: bool,
    },
}

/// Whether the extremal vertices of one `G_n` sit inside `C_n^(R)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConcentrationRecord {
    pub n: u32,
    pub radius: u32,
    pub max_degree: usize,
    pub max_degree_vertices: Vec<usize>,
    pub max_dim_loc: usize,
    pub max_dim_vertices: Vec<usize>,
    pub verdict: ConcentrationVerdict,
}

pub fn concentration_record(a: &Analysis, radius: u32) -> ConcentrationRecord {
    let inv = &a.invariants;
    let m = &a.morphology;
    let max_degree = inv.max_degree();
    let max_dim_loc = inv.max_dim_loc();
    let argmax = |values: &[usize], top: usize| -> Vec<usize> {
        values.iter().enumerate().filter(|(_, &x)| x == top).map(|(v, _)| v).collect()
    };
    let max_degree_vertices = argmax(inv.degrees(), max_degree);
    let max_dim_vertices = argmax(inv.dims(), max_dim_loc);
    let verdict = if m.axis.is_empty() {
        ConcentrationVerdict::AxisEmpty
    } else {
        let inside = |vs: &[usize]| vs.iter().all(|&v| m.in_central_region(v, radius));
        ConcentrationVerdict::Checked {
            max_degree_contained: inside(&max_degree_vertices),
            max_dim_contained: inside(&max_dim_vertices),
        }
    };
    ConcentrationRecord { n: a.n(), radius, max_degree, max_degree_vertices, max_dim_loc, max_dim_vertices, verdict }
}

/// Empirical containment check of maximal-degree and maximal-dimension
/// vertices in `C_n^(R)` across a range. Reports, never asserts.
pub fn concentration_scan(range: NRange, radius: u32, options: &AnalysisOptions) -> Result<Vec<ConcentrationRecord>> {
    Ok(analyze_range(range, options)?.iter().map(|a| concentration_record(a, radius)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::Partition;

    fn opts() -> AnalysisOptions {
        AnalysisOptions::default()
    }

    #[test]
    fn range_parsing() {
        assert_eq!("1..12".parse::<NRange>().unwrap(), NRange { start: 1, end: 12 });
        assert_eq!("7".parse::<NRange>().unwrap(), NRange { start: 7, end: 7 });
        for bad in ["0..3", "5..2", "", "..", "a..b", "3..", "-1..2", "1...3"] {
            assert!(bad.parse::<NRange>().is_err(), "{bad:?}");
        }
    }

    #[test]
    fn emergence_examples() {
        let o = opts();
        let t = emergence_threshold(|a| a.morphology.axis.len() >= 2, 12, &o).unwrap();
        assert_eq!(t, Some(8));
        let t = emergence_threshold(|a| a.invariants.max_dim_loc() >= 3, 12, &o).unwrap();
        assert_eq!(t, Some(7));
        let t = emergence_threshold(|a| !a.morphology.central_region(1).is_empty(), 12, &o).unwrap();
        assert_eq!(t, Some(6));
        let t = emergence_threshold(|a| a.invariants.max_dim_loc() >= 9, 12, &o).unwrap();
        assert_eq!(t, None);
    }

    #[test]
    fn builtin_thresholds_agree_with_direct_scan() {
        let o = opts();
        let all = analyze_range(NRange::new(1, 12).unwrap(), &o).unwrap();
        let table = thresholds(&all, &Feature::builtin());
        for (f, t) in &table {
            assert_eq!(*t, emergence_threshold(|a| f.holds(a), 12, &o).unwrap(), "{f}");
        }
        let get = |f: Feature| table.iter().find(|(g, _)| *g == f).unwrap().1;
        assert_eq!(get(Feature::SeveralAxisVertices), Some(8));
        assert_eq!(get(Feature::SimplexDimensionAtLeast(1)), Some(2));
        assert_eq!(get(Feature::SimplexDimensionAtLeast(4)), Some(11));
        assert_eq!(get(Feature::NarrowCentralRegion), Some(6));
        assert_eq!(get(Feature::NontrivialSpine), Some(8));
    }

    #[test]
    fn concentration_examples() {
        let o = opts();
        let a6 = Analysis::compute(6, &o).unwrap();
        let rec = concentration_record(&a6, 1);
        let staircase = a6.graph.index_of(&Partition::staircase(3).unwrap()).unwrap();
        assert_eq!(rec.max_degree_vertices, vec![staircase]);
        assert!(matches!(rec.verdict, ConcentrationVerdict::Checked { max_degree_contained: true, .. }));

        let a2 = Analysis::compute(2, &o).unwrap();
        assert_eq!(concentration_record(&a2, 3).verdict, ConcentrationVerdict::AxisEmpty);

        let a10 = Analysis::compute(10, &o).unwrap();
        let rec = concentration_record(&a10, 2);
        let delta = a10.graph.index_of(&Partition::staircase(4).unwrap()).unwrap();
        assert_eq!(rec.max_degree, 12);
        assert!(rec.max_degree_vertices.contains(&delta));
        let in_c2 = a10.morphology.in_central_region(delta, 2);
        assert!(in_c2, "(4,3,2,1) is self-conjugate and interior");
    }

    #[test]
    fn scan_is_ordered_and_guarded() {
        let o = opts();
        let recs = concentration_scan(NRange::new(3, 12).unwrap(), 2, &o).unwrap();
        assert_eq!(recs.iter().map(|r| r.n).collect::<Vec<_>>(), (3..=12).collect::<Vec<_>>());
        let small = AnalysisOptions { max_n: 10, ..opts() };
        assert_eq!(
            concentration_scan(NRange::new(3, 12).unwrap(), 2, &small).unwrap_err(),
            Error::SizeGuard { n: 12, limit: 10 }
        );
    }
}
