//! The two experiment drivers: per-year degree comparison across the
//! three formalisms (with Spearman correlations between the degree
//! notions), and the per-email clustering comparison on a cardinality
//! band of a timestamped hypergraph dataset.

use relform_core::metrics::{
    fill_coefficient, graph_clustering, hyperdegree, hypergraph_clustering_all,
    maximal_simplex_participation, spearman, SpearmanResult,
};
use relform_core::NodeId;

use crate::ingest::{apply_filter, yearly_slices, FilterSpec, TimedRelationTable};
use crate::svg::{Point, PointColor, Scatter};
use crate::{csv, AppError, Result};

pub const DEGREE_PAIRS: [(&str, usize, usize); 3] =
    [("graph-sc", 0, 1), ("graph-hg", 0, 2), ("sc-hg", 1, 2)];

#[derive(Debug, Clone, Default)]
pub struct CoauthorOptions {
    pub year_min: Option<i64>,
    pub year_max: Option<i64>,
    /// Collapse repeated author sets within a year before building the
    /// hypergraph.
    pub dedup: bool,
    /// Emit log-log degree scatter SVGs for this year.
    pub svg_year: Option<i64>,
}

/// One node's degree under each formalism: plain graph degree,
/// maximal-simplex participation, and hyperdegree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeComparisonRow {
    pub node: NodeId,
    pub degrees: [usize; 3],
}

#[derive(Debug, Clone)]
pub struct YearReport {
    pub year: i64,
    pub rows: Vec<DegreeComparisonRow>,
    pub csv: String,
    /// (pair name, result); None when the year was skipped or a pair was
    /// degenerate (e.g. all degrees tied).
    pub correlations: Vec<(String, Option<SpearmanResult>)>,
    pub skipped: bool,
}

#[derive(Debug, Clone)]
pub struct CoauthorOutput {
    pub years: Vec<YearReport>,
    pub correlations_csv: String,
    /// (file stem, svg text) for the requested svg year, one per pair.
    pub svgs: Vec<(String, String)>,
}

/// Builds, for each year slice, the graph / simplicial complex /
/// hypergraph directly from that year's relations, compares the three
/// degree notions over the year's active nodes, and correlates each pair.
/// Years with fewer than 3 active nodes are skipped with a warning row.
pub fn coauthor_experiment(
    table: &TimedRelationTable,
    opts: &CoauthorOptions,
) -> Result<CoauthorOutput> {
    let windowed = apply_filter(
        table,
        &FilterSpec { time_min: opts.year_min, time_max: opts.year_max, ..Default::default() },
    );
    let mut years = Vec::new();
    let mut corr_rows: Vec<Vec<String>> = Vec::new();
    let mut svgs = Vec::new();

    for (year, slice) in yearly_slices(&windowed) {
        let report = year_report(year, &slice, opts.dedup)?;
        for (pair, result) in &report.correlations {
            match result {
                Some(r) => corr_rows.push(vec![
                    year.to_string(),
                    pair.clone(),
                    csv::real(r.rho),
                    csv::real(r.p_value),
                    r.n.to_string(),
                ]),
                None => corr_rows.push(vec![
                    year.to_string(),
                    pair.clone(),
                    String::new(),
                    String::new(),
                    report.rows.len().to_string(),
                ]),
            }
        }
        if opts.svg_year == Some(year) {
            for (pair, ix, iy) in DEGREE_PAIRS {
                let mut chart = Scatter::new(
                    &format!("degrees {year}: {pair}"),
                    degree_axis(ix),
                    degree_axis(iy),
                );
                chart.log_x = true;
                chart.log_y = true;
                chart.points = report
                    .rows
                    .iter()
                    .map(|r| Point {
                        x: r.degrees[ix] as f64,
                        y: r.degrees[iy] as f64,
                        color: PointColor::Sentinel,
                    })
                    .collect();
                svgs.push((format!("degrees-{year}-{pair}"), chart.render()));
            }
        }
        years.push(report);
    }

    let correlations_csv =
        csv::document(&["year", "pair", "rho", "p_value", "n"], &corr_rows);
    Ok(CoauthorOutput { years, correlations_csv, svgs })
}

fn degree_axis(i: usize) -> &'static str {
    ["graph_degree", "sc_degree", "hg_degree"][i]
}

fn year_report(year: i64, slice: &TimedRelationTable, dedup: bool) -> Result<YearReport> {
    let graph = slice.to_graph()?;
    let sc = slice.to_simplicial()?;
    let hg = slice.to_hypergraph(dedup)?;

    let mut active: Vec<NodeId> = slice
        .rows
        .iter()
        .flat_map(|(_, r)| r.members().iter().copied())
        .collect();
    active.sort_unstable_by_key(|m| m.0);
    active.dedup();

    let mut rows = Vec::with_capacity(active.len());
    let mut csv_rows = Vec::with_capacity(active.len());
    for &v in &active {
        let degrees = [
            graph.neighbors(v)?.len(),
            maximal_simplex_participation(&sc, v)?,
            hyperdegree(&hg, v)?,
        ];
        csv_rows.push(vec![
            slice.labels.label(v).expect("active node has a label").to_string(),
            degrees[0].to_string(),
            degrees[1].to_string(),
            degrees[2].to_string(),
        ]);
        rows.push(DegreeComparisonRow { node: v, degrees });
    }
    let csv_text = csv::document(
        &["node", "graph_degree", "sc_degree", "hg_degree"],
        &csv_rows,
    );

    let skipped = rows.len() < 3;
    let correlations = if skipped {
        vec![("skipped".to_string(), None)]
    } else {
        DEGREE_PAIRS
            .iter()
            .map(|&(pair, ix, iy)| {
                let xs: Vec<f64> = rows.iter().map(|r| r.degrees[ix] as f64).collect();
                let ys: Vec<f64> = rows.iter().map(|r| r.degrees[iy] as f64).collect();
                (pair.to_string(), spearman(&xs, &ys).ok())
            })
            .collect()
    };
    Ok(YearReport { year, rows, csv: csv_text, correlations, skipped })
}

#[derive(Debug, Clone)]
pub struct EmailOptions {
    pub card_min: usize,
    pub card_max: usize,
    /// Build the hypergraph and its 2-section from the band-filtered
    /// relations only, instead of all of them.
    pub band_only_graph: bool,
    /// Emit one row per distinct participant set instead of one per
    /// email.
    pub dedup_teams: bool,
}

impl Default for EmailOptions {
    fn default() -> Self {
        EmailOptions { card_min: 5, card_max: 25, band_only_graph: false, dedup_teams: false }
    }
}

/// One band email: mean graph clustering and mean hypergraph clustering
/// of its participants, plus the fill coefficient of its hyperedge.
#[derive(Debug, Clone, PartialEq)]
pub struct EmailExperimentRow {
    pub email: usize,
    pub cardinality: usize,
    pub avg_graph_cc: f64,
    pub avg_hg_cc: f64,
    pub fill: f64,
}

#[derive(Debug, Clone)]
pub struct EmailOutput {
    pub rows: Vec<EmailExperimentRow>,
    pub spearman: SpearmanResult,
    pub rows_csv: String,
    pub summary_csv: String,
    pub svg: String,
}

/// Per-email clustering comparison. The hypergraph and its 2-section are
/// built once (from all relations by default); rows cover the hyperedges
/// in the cardinality band, and the summary correlates avg_graph_cc with
/// avg_hg_cc across those rows.
pub fn email_experiment(table: &TimedRelationTable, opts: &EmailOptions) -> Result<EmailOutput> {
    let band_spec = FilterSpec {
        card_min: Some(opts.card_min),
        card_max: Some(opts.card_max),
        dedup: opts.dedup_teams,
        ..Default::default()
    };
    let structure_table = if opts.band_only_graph {
        apply_filter(table, &FilterSpec { dedup: opts.dedup_teams, ..band_spec.clone() })
    } else {
        table.clone()
    };
    let hg = structure_table.to_hypergraph(false)?;
    let graph = structure_table.to_graph()?;
    let hg_cc = hypergraph_clustering_all(&hg);
    let mut graph_cc: Vec<Option<f64>> = vec![None; graph.node_count() as usize];

    // band rows with their indices in the structure hypergraph
    let banded = apply_filter(table, &band_spec);
    let in_band = |card: usize| card >= opts.card_min && card <= opts.card_max;
    let mut structure_index = Vec::with_capacity(banded.rows.len());
    let mut cursor = 0usize;
    for (_, relation) in &banded.rows {
        if opts.band_only_graph {
            structure_index.push(cursor);
            cursor += 1;
        } else {
            while hg.hyperedge(cursor)? != relation
                || !in_band(hg.hyperedge(cursor)?.cardinality())
            {
                cursor += 1;
            }
            structure_index.push(cursor);
            cursor += 1;
        }
    }
    if banded.rows.is_empty() {
        return Err(AppError::Parse(format!(
            "cardinality band [{}, {}] matched no relations",
            opts.card_min, opts.card_max
        )));
    }

    let mut rows = Vec::with_capacity(banded.rows.len());
    for ((_, relation), &h) in banded.rows.iter().zip(&structure_index) {
        let mut g_sum = 0.0;
        let mut h_sum = 0.0;
        for &v in relation.members() {
            let cc = match graph_cc[v.index()] {
                Some(cc) => cc,
                None => {
                    let cc = graph_clustering(&graph, v)?;
                    graph_cc[v.index()] = Some(cc);
                    cc
                }
            };
            g_sum += cc;
            h_sum += hg_cc[v.index()];
        }
        let card = relation.cardinality();
        rows.push(EmailExperimentRow {
            email: h,
            cardinality: card,
            avg_graph_cc: g_sum / card as f64,
            avg_hg_cc: h_sum / card as f64,
            fill: fill_coefficient(&hg, h)?,
        });
    }

    let xs: Vec<f64> = rows.iter().map(|r| r.avg_graph_cc).collect();
    let ys: Vec<f64> = rows.iter().map(|r| r.avg_hg_cc).collect();
    let result = spearman(&xs, &ys)?;

    let rows_csv = csv::document(
        &["email", "cardinality", "avg_graph_cc", "avg_hg_cc", "fill"],
        &rows
            .iter()
            .map(|r| {
                vec![
                    r.email.to_string(),
                    r.cardinality.to_string(),
                    csv::real(r.avg_graph_cc),
                    csv::real(r.avg_hg_cc),
                    csv::real(r.fill),
                ]
            })
            .collect::<Vec<_>>(),
    );
    let summary_csv = csv::document(
        &["rho", "p_value", "n"],
        &[vec![csv::real(result.rho), csv::real(result.p_value), result.n.to_string()]],
    );
    let mut chart = Scatter::new(
        &format!("per-email clustering, band [{}, {}]", opts.card_min, opts.card_max),
        "avg_graph_cc",
        "avg_hg_cc",
    );
    chart.points = rows
        .iter()
        .map(|r| Point {
            x: r.avg_graph_cc,
            y: r.avg_hg_cc,
            color: if r.fill == 0.0 {
                PointColor::Sentinel
            } else {
                PointColor::Value(r.fill.log10())
            },
        })
        .collect();
    let svg = chart.render();

    Ok(EmailOutput { rows, spearman: result, rows_csv, summary_csv, svg })
}
