use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use partition_graph::analysis::{analyze_range, concentration_record, thresholds, ConcentrationVerdict, Feature};
use partition_graph::atlas::{render_atlas, PanelMode};
use partition_graph::graph::DEFAULT_MAX_N;
use partition_graph::local_invariants::DEFAULT_CLIQUE_BOUND;
use partition_graph::reporting::{
    export_graph, spectra, spectra_csv, table, table_csv, table_text, ExportFormat, TableKind,
};
use partition_graph::{Analysis, AnalysisOptions, Error, NRange};

#[derive(Debug, Parser)]
#[command(name = "pgraph", version, about = "Integer-partition graphs: tables, atlas, exports and scans")]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct GlobalArgs {
    /// Directory that receives every output file.
    #[arg(long, global = true, default_value = "out")]
    out: PathBuf,

    /// Refuse to build G_n for n above this.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_N)]
    max_n: u32,

    /// Largest neighborhood accepted by the clique search.
    #[arg(long, global = true, default_value_t = DEFAULT_CLIQUE_BOUND)]
    clique_bound: usize,

    /// Central-region radii to compute.
    #[arg(long, global = true, value_delimiter = ',', default_values_t = [1u32, 2])]
    radii: Vec<u32>,

    /// Worker threads (default: available parallelism).
    #[arg(long, global = true)]
    threads: Option<usize>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Emit the small-range tables as CSV files and aligned text.
    Report {
        #[arg(long, value_delimiter = ',', default_value = "basic,maxima,central", value_parser = parse_table)]
        tables: Vec<TableSel>,
        #[arg(long, default_value = "1..12", value_parser = parse_range)]
        range: NRange,
    },
    /// Render the atlas series and the focused G_12 page as SVG.
    Atlas {
        #[arg(long, default_value = "1..12", value_parser = parse_range)]
        range: NRange,
        /// Comma-separated modes, or `all`.
        #[arg(long, default_value = "all")]
        modes: String,
    },
    /// Export one graph with its annotations.
    Export {
        #[arg(long)]
        n: u32,
        #[arg(long, value_parser = parse_format)]
        format: ExportFormat,
    },
    /// Check whether extremal vertices lie in C_n^(R).
    Scan {
        #[arg(long, value_parser = parse_range)]
        range: NRange,
        #[arg(long, default_value_t = 1)]
        radius: u32,
    },
    /// Emergence thresholds of the built-in features.
    Thresholds {
        #[arg(long, value_parser = parse_range)]
        range: NRange,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum TableSel {
    Table(TableKind),
    Spectra,
}

fn parse_table(s: &str) -> Result<TableSel, String> {
    if s == "spectra" {
        return Ok(TableSel::Spectra);
    }
    s.parse().map(TableSel::Table).map_err(|e: Error| e.to_string())
}

fn parse_range(s: &str) -> Result<NRange, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_format(s: &str) -> Result<ExportFormat, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// Failure categories mapped onto exit statuses.
enum Failure {
    Usage(String),
    Run(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Run(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Run(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(k) = cli.global.threads {
        pool = pool.num_threads(k);
    }
    let pool = match pool.build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    match pool.install(|| run(&cli)) {
        Ok(summary) => {
            print!("{summary}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Run(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn options(g: &GlobalArgs) -> AnalysisOptions {
    AnalysisOptions { max_n: g.max_n, clique_bound: g.clique_bound, radii: g.radii.clone() }
}

fn write_file(dir: &Path, name: &str, bytes: &[u8]) -> Result<(), Failure> {
    fs::create_dir_all(dir)?;
    fs::write(dir.join(name), bytes)?;
    Ok(())
}

fn run(cli: &Cli) -> Result<String, Failure> {
    let opts = options(&cli.global);
    let out = &cli.global.out;
    let mut summary = String::new();
    match &cli.command {
        Command::Report { tables, range } => {
            let analyses = analyze_range(*range, &opts)?;
            for sel in tables {
                match *sel {
                    TableSel::Table(kind) => {
                        let rows = table(kind, &analyses);
                        write_file(out, &format!("table_{}.csv", kind.name()), table_csv(kind, &rows).as_bytes())?;
                        let text = table_text(kind, &rows);
                        write_file(out, &format!("table_{}.txt", kind.name()), text.as_bytes())?;
                        let _ = writeln!(summary, "[{}]\n{text}", kind.name());
                    }
                    TableSel::Spectra => {
                        let csv = spectra_csv(&spectra(&analyses));
                        write_file(out, "spectra.csv", csv.as_bytes())?;
                        let _ = writeln!(summary, "[spectra]\n{csv}");
                    }
                }
            }
        }
        Command::Atlas { range, modes } => {
            let modes = parse_modes(modes)?;
            let analyses = analyze_range(*range, &opts)?;
            let docs = render_atlas(&analyses, &modes)?;
            for doc in &docs {
                write_file(out, &doc.name, doc.svg.as_bytes())?;
                let _ = writeln!(summary, "wrote {}", out.join(&doc.name).display());
            }
        }
        Command::Export { n, format } => {
            let a = Analysis::compute(*n, &opts)?;
            for file in export_graph(&a.graph, &a.invariants, &a.morphology, *format) {
                write_file(out, &file.name, &file.bytes)?;
                let _ = writeln!(summary, "wrote {}", out.join(&file.name).display());
            }
        }
        Command::Scan { range, radius } => {
            if *radius < 1 {
                return Err(Failure::Usage("--radius must be at least 1".into()));
            }
            let analyses = analyze_range(*range, &opts)?;
            let mut csv = String::from(
                "n,radius,max_degree,max_degree_vertices,max_dim_loc,max_dim_vertices,max_degree_contained,max_dim_contained\n",
            );
            for a in &analyses {
                let rec = concentration_record(a, *radius);
                let names =
                    |vs: &[usize]| vs.iter().map(|&v| a.graph.vertex(v).to_string()).collect::<Vec<_>>().join(" ");
                let (deg, dim) = match rec.verdict {
                    ConcentrationVerdict::AxisEmpty => ("axis_empty".to_string(), "axis_empty".to_string()),
                    ConcentrationVerdict::Checked { max_degree_contained, max_dim_contained } => {
                        (max_degree_contained.to_string(), max_dim_contained.to_string())
                    }
                };
                let _ = writeln!(
                    csv,
                    "{},{},{},{},{},{},{deg},{dim}",
                    rec.n,
                    rec.radius,
                    rec.max_degree,
                    names(&rec.max_degree_vertices),
                    rec.max_dim_loc,
                    names(&rec.max_dim_vertices),
                );
                let _ = writeln!(
                    summary,
                    "n={:>2} R={}: max degree {} in C^(R): {deg}; max dim_loc {} in C^(R): {dim}",
                    rec.n, rec.radius, rec.max_degree, rec.max_dim_loc
                );
            }
            write_file(out, "scan.csv", csv.as_bytes())?;
        }
        Command::Thresholds { range } => {
            let analyses = analyze_range(*range, &opts)?;
            let mut csv = String::from("feature,threshold\n");
            for (feature, t) in thresholds(&analyses, &Feature::builtin()) {
                let t = t.map_or_else(|| "none".to_string(), |n| n.to_string());
                let _ = writeln!(csv, "{feature},{t}");
                let _ = writeln!(summary, "{feature:<20} {t}");
            }
            write_file(out, "thresholds.csv", csv.as_bytes())?;
        }
    }
    Ok(summary)
}

fn parse_modes(s: &str) -> Result<Vec<PanelMode>, Failure> {
    if s == "all" {
        return Ok(PanelMode::ALL.to_vec());
    }
    s.split(',').map(|m| m.parse::<PanelMode>().map_err(|e| Failure::Usage(e.to_string()))).collect()
}
