//! Command-line front end: conversions between the three formalisms,
//! per-node metric reports, Dowker dual and Betti tools, the HON builder,
//! and the two experiment drivers.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use relform::experiments::{
    coauthor_experiment, email_experiment, CoauthorOptions, EmailOptions,
};
use relform::ingest::{
    parse_path_lines, parse_relation_lines, parse_triple_files,
    TimedRelationTable,
};
use relform::{csv, AppError};
use relform_core::convert::{
    graph_to_clique_complex, hypergraph_to_graph, hypergraph_to_simplicial,
    simplicial_to_graph, simplicial_to_hypergraph, SimplicialToHypergraphMode,
};
use relform_core::hon::{build_hon, render_node};
use relform_core::metrics::{
    average_path_length, betti_numbers, dowker_dual, extra_overlap, fill_coefficient,
    graph_clustering, graph_degree, hyperdegree, hypergraph_clustering_all,
    maximal_simplex_participation, simplex_participation,
};
use relform_core::{ConcurrenceMatrix, LabelMap, NodeId, Relation};

#[derive(Parser)]
#[command(name = "relform", version, about = "Relational data as graphs, simplicial complexes, and hypergraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Formalism {
    Graph,
    Sc,
    Hg,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FileFormat {
    /// One relation per line: whitespace-separated labels, optional
    /// leading t=<int> timestamp.
    Lines,
    /// Prefix of the <name>-nverts.txt / -simplices.txt / -times.txt
    /// triple.
    Triple,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Metric {
    Degree,
    Clustering,
    PathLength,
    Participation,
    MaximalParticipation,
    Hyperdegree,
    HgClustering,
    Fill,
    ExtraOverlap,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ScToHgMode {
    Maximal,
    AllFaces,
}

#[derive(Args)]
struct InputOpts {
    /// Input file (or triple-file prefix with --format triple).
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value_t = FileFormat::Lines)]
    format: FileFormat,
}

#[derive(Args)]
struct CapOpts {
    /// Cap on distinct faces enumerated per structure.
    #[arg(long, default_value_t = 20_000)]
    face_cap: usize,
    /// Cap on maximal cliques enumerated by graph-to-complex conversion.
    #[arg(long, default_value_t = 1_000_000)]
    clique_cap: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Convert between formalisms; writes the result as relation lines.
    Convert {
        #[command(flatten)]
        input: InputOpts,
        #[arg(long, value_enum)]
        from: Formalism,
        #[arg(long, value_enum)]
        to: Formalism,
        /// Simplicial-to-hypergraph mode.
        #[arg(long, value_enum, default_value_t = ScToHgMode::Maximal)]
        mode: ScToHgMode,
        /// Dimension bound for --mode all-faces.
        #[arg(long, default_value_t = 3)]
        max_dim: usize,
        #[command(flatten)]
        caps: CapOpts,
        /// Output file (stdout when omitted).
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Per-node (or per-hyperedge) metric report as CSV on stdout.
    Stats {
        #[command(flatten)]
        input: InputOpts,
        #[arg(long, value_enum)]
        formalism: Formalism,
        #[arg(long, value_enum)]
        metric: Metric,
        /// Dimension bound for --metric participation.
        #[arg(long, default_value_t = 3)]
        max_dim: usize,
        #[command(flatten)]
        caps: CapOpts,
    },
    /// Dowker dual of a complex or hypergraph, as relation lines whose
    /// node labels are the original relation indices.
    Dowker {
        #[command(flatten)]
        input: InputOpts,
        #[arg(long, value_enum, default_value_t = Formalism::Sc)]
        formalism: Formalism,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Betti numbers of the simplicial complex built from the input
    /// relations (trailing zeros trimmed).
    Betti {
        #[command(flatten)]
        input: InputOpts,
        /// Refuse complexes above this dimension.
        #[arg(long, default_value_t = 8)]
        max_dim: usize,
        #[command(flatten)]
        caps: CapOpts,
    },
    /// Build a higher-order network from a path file (one path per line).
    Hon {
        #[command(flatten)]
        input: InputOpts,
        #[arg(long, default_value_t = 2)]
        order: usize,
        /// Reachability query (repeatable): prints true/false per query.
        #[arg(long, num_args = 2, value_names = ["SRC", "DST"], action = clap::ArgAction::Append)]
        reach: Vec<String>,
        /// Edge-list output file (stdout when omitted).
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Per-year degree comparison across the three formalisms, with
    /// Spearman correlations (CSV files in --output-dir).
    CoauthorExperiment {
        #[command(flatten)]
        input: InputOpts,
        #[arg(long)]
        output_dir: PathBuf,
        /// Collapse repeated relations within each year.
        #[arg(long)]
        dedup: bool,
        #[arg(long)]
        year_min: Option<i64>,
        #[arg(long)]
        year_max: Option<i64>,
        /// Also emit log-log degree scatter SVGs for this year.
        #[arg(long)]
        svg_year: Option<i64>,
    },
    /// Per-email clustering comparison over a cardinality band (CSV and
    /// SVG in --output-dir).
    EmailExperiment {
        #[command(flatten)]
        input: InputOpts,
        #[arg(long)]
        output_dir: PathBuf,
        #[arg(long, default_value_t = 5)]
        card_min: usize,
        #[arg(long, default_value_t = 25)]
        card_max: usize,
        /// Build the hypergraph and 2-section from band emails only
        /// instead of all emails.
        #[arg(long)]
        band_only_graph: bool,
        /// One row per distinct participant set instead of per email.
        #[arg(long)]
        dedup_teams: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn usage_error(msg: &str) -> ! {
    clap::Error::raw(clap::error::ErrorKind::InvalidValue, format!("{msg}\n")).exit()
}

fn load_table(opts: &InputOpts) -> relform::Result<TimedRelationTable> {
    match opts.format {
        FileFormat::Lines => parse_relation_lines(&fs::read_to_string(&opts.input)?),
        FileFormat::Triple => {
            let base = opts.input.to_string_lossy();
            let read = |suffix: &str| fs::read_to_string(format!("{base}-{suffix}.txt"));
            parse_triple_files(&read("nverts")?, &read("simplices")?, &read("times")?)
        }
    }
}

fn emit(output: Option<&Path>, text: &str) -> relform::Result<()> {
    match output {
        Some(path) => fs::write(path, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

/// Relation lines for a list of relations over a label map (timestamps
/// dropped).
fn relation_lines(labels: &LabelMap, relations: &[Relation]) -> String {
    let mut out = String::new();
    for relation in relations {
        let row: Vec<&str> = relation
            .members()
            .iter()
            .map(|&m| labels.label(m).expect("member id has a label"))
            .collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

fn run(command: Command) -> relform::Result<()> {
    match command {
        Command::Convert { input, from, to, mode, max_dim, caps, output } => {
            let table = load_table(&input)?;
            let relations = cmd_convert(&table, from, to, mode, max_dim, &caps)?;
            emit(output.as_deref(), &relation_lines(&table.labels, &relations))
        }
        Command::Stats { input, formalism, metric, max_dim, caps } => {
            let table = load_table(&input)?;
            print!("{}", cmd_stats(&table, formalism, metric, max_dim, &caps)?);
            Ok(())
        }
        Command::Dowker { input, formalism, output } => {
            let table = load_table(&input)?;
            let m = match formalism {
                Formalism::Sc => ConcurrenceMatrix::from_simplicial(&table.to_simplicial()?)?,
                Formalism::Hg => ConcurrenceMatrix::from_hypergraph(&table.to_hypergraph(false)?)?,
                Formalism::Graph => usage_error("dowker expects --formalism sc or hg"),
            };
            let dual = dowker_dual(&m)?;
            let mut labels = LabelMap::new();
            for i in 0..m.row_count() {
                labels.get_or_insert(&i.to_string());
            }
            emit(output.as_deref(), &relation_lines(&labels, dual.maximal()))
        }
        Command::Betti { input, max_dim, caps } => {
            let table = load_table(&input)?;
            let report = betti_numbers(&table.to_simplicial()?, max_dim, caps.face_cap)?;
            let mut betti = report.betti.clone();
            while betti.len() > 1 && betti.last() == Some(&0) {
                betti.pop();
            }
            let cells: Vec<String> = betti.iter().map(usize::to_string).collect();
            println!("{}", cells.join(","));
            Ok(())
        }
        Command::Hon { input, order, reach, output } => {
            let (labels, paths) = parse_path_lines(&fs::read_to_string(&input.input)?)?;
            let hon = build_hon(&paths, order)?;
            let mut lines: Vec<String> = hon
                .edges()
                .map(|(s, t, c)| {
                    format!(
                        "{}\t{}\t{}",
                        render_node(s, &labels).expect("unit id has a label"),
                        render_node(t, &labels).expect("unit id has a label"),
                        c
                    )
                })
                .collect();
            lines.sort();
            let mut text = lines.join("\n");
            if !text.is_empty() {
                text.push('\n');
            }
            emit(output.as_deref(), &text)?;
            for pair in reach.chunks(2) {
                let src = labels.require(&pair[0])?;
                let dst = labels.require(&pair[1])?;
                println!("{}", hon.reachable(src, dst));
            }
            Ok(())
        }
        Command::CoauthorExperiment {
            input,
            output_dir,
            dedup,
            year_min,
            year_max,
            svg_year,
        } => {
            let table = load_table(&input)?;
            let opts = CoauthorOptions { year_min, year_max, dedup, svg_year };
            let out = coauthor_experiment(&table, &opts)?;
            fs::create_dir_all(&output_dir)?;
            for year in &out.years {
                fs::write(output_dir.join(format!("degrees-{}.csv", year.year)), &year.csv)?;
                if year.skipped {
                    eprintln!(
                        "warning: year {} has {} active nodes (< 3); correlations skipped",
                        year.year,
                        year.rows.len()
                    );
                }
            }
            fs::write(output_dir.join("correlations.csv"), &out.correlations_csv)?;
            for (stem, svg) in &out.svgs {
                fs::write(output_dir.join(format!("{stem}.svg")), svg)?;
            }
            println!(
                "wrote {} files to {}",
                out.years.len() + 1 + out.svgs.len(),
                output_dir.display()
            );
            Ok(())
        }
        Command::EmailExperiment {
            input,
            output_dir,
            card_min,
            card_max,
            band_only_graph,
            dedup_teams,
        } => {
            let table = load_table(&input)?;
            let opts = EmailOptions { card_min, card_max, band_only_graph, dedup_teams };
            let out = email_experiment(&table, &opts)?;
            fs::create_dir_all(&output_dir)?;
            fs::write(output_dir.join("emails.csv"), &out.rows_csv)?;
            fs::write(output_dir.join("summary.csv"), &out.summary_csv)?;
            fs::write(output_dir.join("scatter.svg"), &out.svg)?;
            println!(
                "rho={} p_value={} n={}",
                csv::real(out.spearman.rho),
                csv::real(out.spearman.p_value),
                out.spearman.n
            );
            Ok(())
        }
    }
}

fn cmd_convert(
    table: &TimedRelationTable,
    from: Formalism,
    to: Formalism,
    mode: ScToHgMode,
    max_dim: usize,
    caps: &CapOpts,
) -> relform::Result<Vec<Relation>> {
    let sc_mode = match mode {
        ScToHgMode::Maximal => SimplicialToHypergraphMode::MaximalOnly,
        ScToHgMode::AllFaces => SimplicialToHypergraphMode::AllFaces {
            max_dimension: max_dim,
            cap: caps.face_cap,
        },
    };
    Ok(match (from, to) {
        (Formalism::Graph, Formalism::Sc) => {
            let g = table.to_graph_strict()?;
            graph_to_clique_complex(&g, caps.clique_cap)?.maximal().to_vec()
        }
        (Formalism::Sc, Formalism::Graph) => {
            edges_as_relations(&simplicial_to_graph(&table.to_simplicial()?))
        }
        (Formalism::Sc, Formalism::Hg) => {
            simplicial_to_hypergraph(&table.to_simplicial()?, sc_mode)?.hyperedges().to_vec()
        }
        (Formalism::Hg, Formalism::Sc) => {
            hypergraph_to_simplicial(&table.to_hypergraph(false)?).maximal().to_vec()
        }
        (Formalism::Hg, Formalism::Graph) => {
            edges_as_relations(&hypergraph_to_graph(&table.to_hypergraph(false)?))
        }
        _ => usage_error("unsupported conversion pair; legal pairs: graph->sc, sc->graph, sc->hg, hg->sc, hg->graph"),
    })
}

fn edges_as_relations(g: &relform_core::Graph) -> Vec<Relation> {
    g.edges()
        .map(|(u, v)| Relation::from_members(vec![u, v]).expect("an edge is a valid relation"))
        .collect()
}

fn cmd_stats(
    table: &TimedRelationTable,
    formalism: Formalism,
    metric: Metric,
    max_dim: usize,
    caps: &CapOpts,
) -> relform::Result<String> {
    let labels = &table.labels;
    let n = table.node_count();
    let node_rows = |header: &str, cell: &mut dyn FnMut(NodeId) -> relform::Result<String>| {
        let mut rows = Vec::with_capacity(n as usize);
        for v in 0..n {
            rows.push(vec![
                labels.label(NodeId(v)).expect("id in range").to_string(),
                cell(NodeId(v))?,
            ]);
        }
        Ok::<String, AppError>(csv::document(&["node", header], &rows))
    };
    match (formalism, metric) {
        (Formalism::Graph, Metric::Degree) => {
            let g = table.to_graph_strict()?;
            node_rows("degree", &mut |v| Ok(graph_degree(&g, v)?.to_string()))
        }
        (Formalism::Graph, Metric::Clustering) => {
            let g = table.to_graph_strict()?;
            node_rows("clustering", &mut |v| Ok(csv::real(graph_clustering(&g, v)?)))
        }
        (Formalism::Graph, Metric::PathLength) => {
            let g = table.to_graph_strict()?;
            Ok(csv::document(
                &["average_path_length"],
                &[vec![csv::real(average_path_length(&g)?)]],
            ))
        }
        (Formalism::Sc, Metric::Participation) => {
            let sc = table.to_simplicial()?;
            let mut rows = Vec::with_capacity(n as usize);
            for v in 0..n {
                let p = simplex_participation(&sc, NodeId(v), max_dim, caps.face_cap)?;
                let mut row = vec![labels.label(NodeId(v)).expect("id in range").to_string()];
                row.extend(p.counts.iter().map(usize::to_string));
                rows.push(row);
            }
            let dim_headers: Vec<String> = (0..=max_dim).map(|d| format!("d{d}")).collect();
            let mut header = vec!["node"];
            header.extend(dim_headers.iter().map(String::as_str));
            Ok(csv::document(&header, &rows))
        }
        (Formalism::Sc, Metric::MaximalParticipation) => {
            let sc = table.to_simplicial()?;
            node_rows("maximal_participation", &mut |v| {
                Ok(maximal_simplex_participation(&sc, v)?.to_string())
            })
        }
        (Formalism::Hg, Metric::Hyperdegree) => {
            let hg = table.to_hypergraph(false)?;
            node_rows("hyperdegree", &mut |v| Ok(hyperdegree(&hg, v)?.to_string()))
        }
        (Formalism::Hg, Metric::HgClustering) => {
            let hg = table.to_hypergraph(false)?;
            let cc = hypergraph_clustering_all(&hg);
            node_rows("clustering", &mut |v| Ok(csv::real(cc[v.index()])))
        }
        (Formalism::Hg, Metric::Fill) => {
            let hg = table.to_hypergraph(false)?;
            let mut rows = Vec::new();
            for h in 0..hg.hyperedges().len() {
                rows.push(vec![
                    h.to_string(),
                    hg.hyperedge(h)?.cardinality().to_string(),
                    csv::real(fill_coefficient(&hg, h)?),
                ]);
            }
            Ok(csv::document(&["hyperedge", "cardinality", "fill"], &rows))
        }
        (Formalism::Hg, Metric::ExtraOverlap) => {
            let hg = table.to_hypergraph(false)?;
            let k = hg.hyperedges().len();
            let mut rows = Vec::new();
            for j in 0..k {
                for l in j + 1..k {
                    rows.push(vec![
                        j.to_string(),
                        l.to_string(),
                        csv::real(extra_overlap(&hg, j, l)?),
                    ]);
                }
            }
            Ok(csv::document(&["hyperedge_j", "hyperedge_k", "extra_overlap"], &rows))
        }
        _ => usage_error("metric not defined for this formalism"),
    }
}
