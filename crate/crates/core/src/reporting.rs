//! Small-range tables (basic counts, maxima, central/spine data, spectra)
//! and JSON / DOT / CSV export of a single graph with its annotations.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::analysis::{analyze_range, Analysis, AnalysisOptions, NRange};
use crate::error::{Error, Result};
use crate::graph::PartitionGraph;
use crate::local_invariants::LocalInvariants;
use crate::morphology::MorphologyReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TableKind {
    Basic,
    Maxima,
    CentralSpine,
}

impl TableKind {
    pub const ALL: [TableKind; 3] = [TableKind::Basic, TableKind::Maxima, TableKind::CentralSpine];

    pub fn name(self) -> &'static str {
        match self {
            TableKind::Basic => "basic",
            TableKind::Maxima => "maxima",
            TableKind::CentralSpine => "central_spine",
        }
    }

    pub fn header(self) -> &'static [&'static str] {
        match self {
            TableKind::Basic => &["n", "p", "edges", "self_conjugate", "framework"],
            TableKind::Maxima => &["n", "max_degree", "max_dim_loc"],
            TableKind::CentralSpine => &["n", "central_1", "central_2", "spine", "interior"],
        }
    }
}

impl FromStr for TableKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "basic" => Ok(TableKind::Basic),
            "maxima" => Ok(TableKind::Maxima),
            "central" | "central_spine" => Ok(TableKind::CentralSpine),
            other => Err(Error::Parse { input: other.to_string(), reason: "unknown table" }),
        }
    }
}

/// One row of one of the small-range tables.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "table", rename_all = "snake_case")]
pub enum TableRow {
    Basic { n: u32, partitions: usize, edges: usize, self_conjugate: usize, framework: usize },
    Maxima { n: u32, max_degree: usize, max_dim_loc: usize },
    CentralSpine { n: u32, central_1: usize, central_2: usize, spine: usize, interior: usize },
}

impl TableRow {
    pub fn new(kind: TableKind, a: &Analysis) -> TableRow {
        let n = a.n();
        let m = &a.morphology;
        match kind {
            TableKind::Basic => TableRow::Basic {
                n,
                partitions: a.graph.vertex_count(),
                edges: a.graph.edge_count(),
                self_conjugate: m.axis.len(),
                framework: m.framework.members.len(),
            },
            TableKind::Maxima => {
                TableRow::Maxima { n, max_degree: a.invariants.max_degree(), max_dim_loc: a.invariants.max_dim_loc() }
            }
            TableKind::CentralSpine => TableRow::CentralSpine {
                n,
                central_1: m.central_region(1).len(),
                central_2: m.central_region(2).len(),
                spine: m.spine.vertices.len(),
                interior: m.framework.interior.len(),
            },
        }
    }

    pub fn kind(&self) -> TableKind {
        match self {
            TableRow::Basic { .. } => TableKind::Basic,
            TableRow::Maxima { .. } => TableKind::Maxima,
            TableRow::CentralSpine { .. } => TableKind::CentralSpine,
        }
    }

    /// Cell values in header order.
    pub fn cells(&self) -> Vec<String> {
        let v: Vec<usize> = match *self {
            TableRow::Basic { n, partitions, edges, self_conjugate, framework } => {
                vec![n as usize, partitions, edges, self_conjugate, framework]
            }
            TableRow::Maxima { n, max_degree, max_dim_loc } => vec![n as usize, max_degree, max_dim_loc],
            TableRow::CentralSpine { n, central_1, central_2, spine, interior } => {
                vec![n as usize, central_1, central_2, spine, interior]
            }
        };
        v.into_iter().map(|x| x.to_string()).collect()
    }
}

pub fn table(kind: TableKind, analyses: &[Analysis]) -> Vec<TableRow> {
    analyses.iter().map(|a| TableRow::new(kind, a)).collect()
}

/// `(n, p(n), |E|, |SC_n|, |F_n|)` per `n`.
pub fn basic_counts(range: NRange, options: &AnalysisOptions) -> Result<Vec<TableRow>> {
    Ok(table(TableKind::Basic, &analyze_range(range, options)?))
}

/// `(n, max degree, max dim_loc)` per `n`.
pub fn maxima(range: NRange, options: &AnalysisOptions) -> Result<Vec<TableRow>> {
    Ok(table(TableKind::Maxima, &analyze_range(range, options)?))
}

/// `(n, |C^(1)|, |C^(2)|, |V(Sp_n)|, |V \ F_n|)` per `n`.
pub fn central_spine(range: NRange, options: &AnalysisOptions) -> Result<Vec<TableRow>> {
    Ok(table(TableKind::CentralSpine, &analyze_range(range, options)?))
}

pub fn table_csv(kind: TableKind, rows: &[TableRow]) -> String {
    let mut out = kind.header().join(",");
    out.push('\n');
    for row in rows.iter().filter(|r| r.kind() == kind) {
        out.push_str(&row.cells().join(","));
        out.push('\n');
    }
    out
}

/// Right-aligned plain-text rendering of a table.
pub fn table_text(kind: TableKind, rows: &[TableRow]) -> String {
    let header: Vec<String> = kind.header().iter().map(|s| s.to_string()).collect();
    let body: Vec<Vec<String>> = rows.iter().filter(|r| r.kind() == kind).map(TableRow::cells).collect();
    let widths: Vec<usize> = (0..header.len())
        .map(|i| std::iter::once(&header).chain(&body).map(|r| r[i].len()).max().unwrap_or(0))
        .collect();
    let line = |cells: &[String]| -> String {
        let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
        padded.join("  ")
    };
    let mut out = line(&header);
    out.push('\n');
    let rule: usize = widths.iter().sum::<usize>() + 2 * (widths.len() - 1);
    out.push_str(&"-".repeat(rule));
    out.push('\n');
    for r in &body {
        out.push_str(&line(r));
        out.push('\n');
    }
    out
}

/// Attained degree and simplex-dimension values for one `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectraRow {
    pub n: u32,
    pub degree: BTreeSet<usize>,
    pub simplex: BTreeSet<usize>,
}

pub fn spectra(analyses: &[Analysis]) -> Vec<SpectraRow> {
    analyses
        .iter()
        .map(|a| {
            let s = a.invariants.layers_and_spectra();
            SpectraRow { n: a.n(), degree: s.degree_spectrum, simplex: s.simplex_spectrum }
        })
        .collect()
}

pub fn spectra_report(range: NRange, options: &AnalysisOptions) -> Result<Vec<SpectraRow>> {
    Ok(spectra(&analyze_range(range, options)?))
}

/// Spectra as CSV; values inside a cell are space separated.
pub fn spectra_csv(rows: &[SpectraRow]) -> String {
    let join = |s: &BTreeSet<usize>| s.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
    let mut out = String::from("n,degree_spectrum,simplex_spectrum\n");
    for r in rows {
        let _ = writeln!(out, "{},{},{}", r.n, join(&r.degree), join(&r.simplex));
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExportFormat {
    Json,
    Dot,
    Csv,
}

impl FromStr for ExportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(ExportFormat::Json),
            "dot" => Ok(ExportFormat::Dot),
            "csv" => Ok(ExportFormat::Csv),
            other => Err(Error::UnknownFormat(other.to_string())),
        }
    }
}

/// A named output produced by an export.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExportFile {
    pub name: String,
    pub bytes: Vec<u8>,
}

pub const VERTEX_CSV_HEADER: &str = "n,id,parts,degree,dim_loc,d_ax,in_framework,in_interior,self_conjugate,in_spine";
pub const EDGE_CSV_HEADER: &str = "n,u,v";

/// JSON export schema.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub n: u32,
    pub vertices: Vec<VertexRecord>,
    pub edges: Vec<[usize; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexRecord {
    pub id: usize,
    pub parts: String,
    pub degree: usize,
    pub dim_loc: usize,
    /// Decimal distance, or `"inf"` when the axis is empty.
    pub d_ax: String,
    pub flags: VertexFlags,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexFlags {
    pub framework: bool,
    pub interior: bool,
    pub self_conjugate: bool,
    pub spine: bool,
    /// `central_<r>` for every precomputed radius.
    #[serde(flatten)]
    pub central: BTreeMap<String, bool>,
}

impl GraphDocument {
    pub fn new(g: &PartitionGraph, inv: &LocalInvariants, report: &MorphologyReport) -> Self {
        let vertices = (0..g.vertex_count())
            .map(|v| VertexRecord {
                id: v,
                parts: g.vertex(v).to_string(),
                degree: inv.degree(v),
                dim_loc: inv.dim_loc(v),
                d_ax: report.axial_distance[v].to_string(),
                flags: VertexFlags {
                    framework: report.in_framework(v),
                    interior: !report.in_framework(v),
                    self_conjugate: g.conjugate_of(v) == v,
                    spine: report.spine.contains(v),
                    central: report
                        .central_regions
                        .keys()
                        .map(|&r| (format!("central_{r}"), report.in_central_region(v, r)))
                        .collect(),
                },
            })
            .collect();
        let edges = g.edges().map(|(u, v)| [u, v]).collect();
        GraphDocument { n: g.n(), vertices, edges }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> std::result::Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

pub fn export_graph(
    g: &PartitionGraph,
    inv: &LocalInvariants,
    report: &MorphologyReport,
    format: ExportFormat,
) -> Vec<ExportFile> {
    let n = g.n();
    match format {
        ExportFormat::Json => vec![ExportFile {
            name: format!("g{n}.json"),
            bytes: GraphDocument::new(g, inv, report).to_json().into_bytes(),
        }],
        ExportFormat::Dot => vec![ExportFile { name: format!("g{n}.dot"), bytes: dot(g).into_bytes() }],
        ExportFormat::Csv => {
            let mut vertices = String::from(VERTEX_CSV_HEADER);
            vertices.push('\n');
            for v in 0..g.vertex_count() {
                let _ = writeln!(
                    vertices,
                    "{n},{v},{},{},{},{},{},{},{},{}",
                    g.vertex(v),
                    inv.degree(v),
                    inv.dim_loc(v),
                    report.axial_distance[v],
                    report.in_framework(v),
                    !report.in_framework(v),
                    g.conjugate_of(v) == v,
                    report.spine.contains(v),
                );
            }
            let mut edges = String::from(EDGE_CSV_HEADER);
            edges.push('\n');
            for (u, v) in g.edges() {
                let _ = writeln!(edges, "{n},{u},{v}");
            }
            vec![
                ExportFile { name: format!("g{n}_vertices.csv"), bytes: vertices.into_bytes() },
                ExportFile { name: format!("g{n}_edges.csv"), bytes: edges.into_bytes() },
            ]
        }
    }
}

fn dot(g: &PartitionGraph) -> String {
    let mut out = format!("graph G_{} {{\n", g.n());
    for v in 0..g.vertex_count() {
        let _ = writeln!(out, "  {v} [label=\"{}\"];", g.vertex(v));
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn analysis(n: u32) -> Analysis {
        Analysis::compute(n, &AnalysisOptions::default()).unwrap()
    }

    fn row(kind: TableKind, n: u32) -> Vec<String> {
        TableRow::new(kind, &analysis(n)).cells()
    }

    fn nums(v: &[usize]) -> Vec<String> {
        v.iter().map(|x| x.to_string()).collect()
    }

    #[test]
    fn basic_examples() {
        assert_eq!(row(TableKind::Basic, 9), nums(&[9, 30, 73, 2, 15]));
        assert_eq!(row(TableKind::Basic, 1), nums(&[1, 1, 0, 1, 1]));
        assert_eq!(row(TableKind::Basic, 11), nums(&[11, 56, 170, 2, 19]));
    }

    #[test]
    fn maxima_examples() {
        assert_eq!(row(TableKind::Maxima, 7), nums(&[7, 7, 3]));
        assert_eq!(row(TableKind::Maxima, 1), nums(&[1, 0, 0]));
        assert_eq!(row(TableKind::Maxima, 12), nums(&[12, 14, 4]));
    }

    #[test]
    fn central_spine_examples() {
        assert_eq!(row(TableKind::CentralSpine, 9), nums(&[9, 5, 15, 12, 15]));
        assert_eq!(row(TableKind::CentralSpine, 2), nums(&[2, 0, 0, 0, 0]));
        assert_eq!(row(TableKind::CentralSpine, 12), nums(&[12, 21, 45, 11, 55]));
    }

    #[test]
    fn range_emitters() {
        let o = AnalysisOptions::default();
        let r = NRange::new(1, 4).unwrap();
        assert_eq!(basic_counts(r, &o).unwrap().len(), 4);
        assert_eq!(maxima(r, &o).unwrap()[3], TableRow::Maxima { n: 4, max_degree: 3, max_dim_loc: 2 });
        assert_eq!(
            central_spine(r, &o).unwrap()[0],
            TableRow::CentralSpine { n: 1, central_1: 0, central_2: 0, spine: 1, interior: 0 }
        );
    }

    #[test]
    fn csv_and_text_tables() {
        let rows = table(TableKind::Maxima, &[analysis(1), analysis(2)]);
        assert_eq!(table_csv(TableKind::Maxima, &rows), "n,max_degree,max_dim_loc\n1,0,0\n2,1,1\n");
        let text = table_text(TableKind::Maxima, &rows);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "n  max_degree  max_dim_loc");
        assert_eq!(lines[2], "1           0            0");
        assert!("central".parse::<TableKind>().unwrap() == TableKind::CentralSpine);
        assert!("nope".parse::<TableKind>().is_err());
    }

    #[test]
    fn spectra_examples() {
        let rows = spectra(&[analysis(1), analysis(2), analysis(4)]);
        assert_eq!(rows[0].degree, BTreeSet::from([0]));
        assert_eq!(rows[1].degree, BTreeSet::from([1]));
        assert_eq!(rows[1].simplex, BTreeSet::from([1]));
        assert_eq!(rows[2].degree.iter().max(), Some(&3));
        assert!(spectra_csv(&rows).starts_with("n,degree_spectrum,simplex_spectrum\n1,0,0\n2,1,1\n"));
    }

    fn export(n: u32, f: ExportFormat) -> Vec<ExportFile> {
        let a = analysis(n);
        export_graph(&a.graph, &a.invariants, &a.morphology, f)
    }

    #[test]
    fn json_export() {
        let files = export(1, ExportFormat::Json);
        assert_eq!(files[0].name, "g1.json");
        let doc = GraphDocument::from_json(std::str::from_utf8(&files[0].bytes).unwrap()).unwrap();
        assert_eq!(doc.vertices.len(), 1);
        assert!(doc.edges.is_empty());

        let files = export(2, ExportFormat::Json);
        let doc = GraphDocument::from_json(std::str::from_utf8(&files[0].bytes).unwrap()).unwrap();
        assert!(doc.vertices.iter().all(|v| v.d_ax == "inf"));
        assert_eq!(doc.edges, vec![[0, 1]]);
    }

    #[test]
    fn dot_export() {
        let files = export(4, ExportFormat::Dot);
        let text = String::from_utf8(files[0].bytes.clone()).unwrap();
        assert_eq!(text.lines().filter(|l| l.contains("[label=")).count(), 5);
        assert_eq!(text.lines().filter(|l| l.contains(" -- ")).count(), 5);
        assert!(text.starts_with("graph G_4 {\n"));
    }

    #[test]
    fn csv_export() {
        let files = export(6, ExportFormat::Csv);
        assert_eq!(files[0].name, "g6_vertices.csv");
        let vertices = String::from_utf8(files[0].bytes.clone()).unwrap();
        assert_eq!(vertices.lines().next().unwrap(), VERTEX_CSV_HEADER);
        let row = vertices.lines().find(|l| l.split(',').nth(2) == Some("3.2.1")).unwrap();
        let cols: Vec<&str> = row.split(',').collect();
        assert_eq!(&cols[3..6], &["6", "2", "0"]);
        assert_eq!(&cols[6..], &["false", "true", "true", "true"]);
        let edges = String::from_utf8(files[1].bytes.clone()).unwrap();
        assert_eq!(edges.lines().count(), 1 + 17);
        assert_eq!(edges.lines().next().unwrap(), EDGE_CSV_HEADER);
    }

    #[test]
    fn unknown_format() {
        assert_eq!("graphml".parse::<ExportFormat>(), Err(Error::UnknownFormat("graphml".into())));
    }
}
