//! Parsing, filtering, and serialization of timestamped relation
//! datasets.
//!
//! Two on-disk formats are supported:
//!
//! * the triple-file layout distributed with the experiment datasets
//!   (`<name>-nverts.txt`, `<name>-simplices.txt`, `<name>-times.txt`,
//!   newline-delimited ASCII integers), and
//! * relation lines: one relation per line of whitespace-separated text
//!   labels, with an optional leading `t=<int>` timestamp token.
//!
//! Plus path lines for the HON builder: one path per line of
//! whitespace-separated unit labels.

use std::collections::BTreeMap;
use std::sync::Arc;

use relform_core::convert::hypergraph_to_graph;
use relform_core::{Graph, Hypergraph, LabelMap, NodeId, Relation, SimplicialComplex};

use crate::{AppError, Result};

/// An ingested dataset: (timestamp, relation) rows in file order plus the
/// label map that assigned the dense node ids. The label map is shared
/// (filters and slices never re-index).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TimedRelationTable {
    pub labels: Arc<LabelMap>,
    pub rows: Vec<(i64, Relation)>,
    /// Duplicate vertex labels found within single relations and
    /// collapsed during parsing (relations are sets).
    pub duplicate_members_collapsed: u64,
}

impl TimedRelationTable {
    pub fn node_count(&self) -> u32 {
        self.labels.len() as u32
    }

    fn relations(&self) -> Vec<Relation> {
        self.rows.iter().map(|(_, r)| r.clone()).collect()
    }

    pub fn to_hypergraph(&self, dedup: bool) -> Result<Hypergraph> {
        Ok(Hypergraph::from_relations(self.node_count(), &self.relations(), dedup)?)
    }

    pub fn to_simplicial(&self) -> Result<SimplicialComplex> {
        Ok(SimplicialComplex::from_relations(self.node_count(), &self.relations())?)
    }

    /// The graph built directly from the data: two nodes are adjacent iff
    /// they co-occur in some relation (the 2-section).
    pub fn to_graph(&self) -> Result<Graph> {
        Ok(hypergraph_to_graph(&self.to_hypergraph(false)?))
    }

    /// A graph from strictly dyadic relations (an edge list); polyadic
    /// rows are an error.
    pub fn to_graph_strict(&self) -> Result<Graph> {
        Ok(Graph::from_relations(self.node_count(), &self.relations())?)
    }
}

/// Inclusive time-window and cardinality-band filter, with optional
/// deduplication of repeated node sets (first occurrence kept).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FilterSpec {
    pub time_min: Option<i64>,
    pub time_max: Option<i64>,
    pub card_min: Option<usize>,
    pub card_max: Option<usize>,
    pub dedup: bool,
}

fn parse_err(msg: String) -> AppError {
    AppError::Parse(msg)
}

fn int_lines<'a>(
    name: &'a str,
    text: &'a str,
) -> impl Iterator<Item = Result<(usize, i64)>> + 'a {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
        .map(move |(line, token)| {
            token
                .parse::<i64>()
                .map(|v| (line, v))
                .map_err(|_| parse_err(format!("{name} line {line}: non-integer token {token:?}")))
        })
}

/// Parses the triple-file dataset layout: the i-th relation has
/// `nverts[i]` vertices, consumed in order from the simplices file, and
/// timestamp `times[i]`.
pub fn parse_triple_files(
    nverts_text: &str,
    simplices_text: &str,
    times_text: &str,
) -> Result<TimedRelationTable> {
    let mut labels = LabelMap::new();
    let mut rows = Vec::new();
    let mut collapsed = 0u64;

    let mut times = int_lines("times", times_text);
    let mut simplices = int_lines("simplices", simplices_text).peekable();
    let mut relation_count = 0usize;

    for entry in int_lines("nverts", nverts_text) {
        let (line, nv) = entry?;
        if nv <= 0 {
            return Err(parse_err(format!("nverts line {line}: relation size must be positive, got {nv}")));
        }
        relation_count += 1;
        let (_, time) = times.next().ok_or_else(|| {
            parse_err(format!("times file exhausted: relation {relation_count} (nverts line {line}) has no timestamp"))
        })??;
        let mut members = Vec::with_capacity(nv as usize);
        for k in 0..nv {
            let (_, vertex) = simplices.next().ok_or_else(|| {
                parse_err(format!(
                    "simplices file exhausted at relation {relation_count}: needs {nv} vertices, got {k}"
                ))
            })??;
            members.push(labels.get_or_insert(itoa(vertex).as_str()));
        }
        let declared = members.len();
        let relation = Relation::from_members(members)?;
        collapsed += (declared - relation.cardinality()) as u64;
        rows.push((time, relation));
    }
    if let Some(extra) = simplices.next() {
        let (line, _) = extra?;
        return Err(parse_err(format!(
            "simplices line {line}: trailing vertices beyond the {relation_count} declared relations"
        )));
    }
    if let Some(extra) = times.next() {
        let (line, _) = extra?;
        return Err(parse_err(format!(
            "times line {line}: trailing timestamps beyond the {relation_count} declared relations"
        )));
    }

    Ok(TimedRelationTable {
        labels: Arc::new(labels),
        rows,
        duplicate_members_collapsed: collapsed,
    })
}

fn itoa(v: i64) -> String {
    v.to_string()
}

/// Parses relation lines: whitespace-separated text labels, one relation
/// per line, with an optional leading `t=<int>` timestamp (default 0).
/// Empty lines are skipped.
pub fn parse_relation_lines(text: &str) -> Result<TimedRelationTable> {
    let mut labels = LabelMap::new();
    let mut rows = Vec::new();
    let mut collapsed = 0u64;
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        let mut tokens = line.split_whitespace().peekable();
        let Some(&first) = tokens.peek() else { continue };
        let time = if let Some(t) = first.strip_prefix("t=") {
            tokens.next();
            t.parse::<i64>().map_err(|_| {
                parse_err(format!("line {line_no}: bad timestamp token {first:?}"))
            })?
        } else {
            0
        };
        let members: Vec<NodeId> = tokens.map(|tok| labels.get_or_insert(tok)).collect();
        if members.is_empty() {
            return Err(parse_err(format!(
                "line {line_no}: timestamp without any relation members"
            )));
        }
        let declared = members.len();
        let relation = Relation::from_members(members)?;
        collapsed += (declared - relation.cardinality()) as u64;
        rows.push((time, relation));
    }
    Ok(TimedRelationTable {
        labels: Arc::new(labels),
        rows,
        duplicate_members_collapsed: collapsed,
    })
}

/// Parses path lines for the HON builder: one path per line, each a
/// whitespace-separated sequence of at least two unit labels.
pub fn parse_path_lines(text: &str) -> Result<(LabelMap, Vec<Vec<NodeId>>)> {
    let mut labels = LabelMap::new();
    let mut paths = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let units: Vec<NodeId> =
            line.split_whitespace().map(|tok| labels.get_or_insert(tok)).collect();
        if units.is_empty() {
            continue;
        }
        if units.len() < 2 {
            return Err(parse_err(format!(
                "line {}: a path needs at least 2 units, got {}",
                i + 1,
                units.len()
            )));
        }
        paths.push(units);
    }
    Ok((labels, paths))
}

/// Serializes a table back to the triple-file layout. Members are written
/// as their label text in ascending id order; for tables parsed from
/// triple files (integer labels assigned by first appearance) re-parsing
/// the result yields an identical table.
pub fn write_triple_files(t: &TimedRelationTable) -> (String, String, String) {
    let mut nverts = String::new();
    let mut simplices = String::new();
    let mut times = String::new();
    for (time, relation) in &t.rows {
        nverts.push_str(&relation.cardinality().to_string());
        nverts.push('\n');
        times.push_str(&time.to_string());
        times.push('\n');
        for &m in relation.members() {
            simplices.push_str(t.labels.label(m).expect("member id has a label"));
            simplices.push('\n');
        }
    }
    (nverts, simplices, times)
}

/// Serializes a table (or any relation list over its labels) as relation
/// lines, including `t=` tokens for nonzero timestamps.
pub fn write_relation_lines(t: &TimedRelationTable) -> String {
    let mut out = String::new();
    for (time, relation) in &t.rows {
        let mut first = true;
        if *time != 0 {
            out.push_str("t=");
            out.push_str(&time.to_string());
            first = false;
        }
        for &m in relation.members() {
            if !first {
                out.push(' ');
            }
            out.push_str(t.labels.label(m).expect("member id has a label"));
            first = false;
        }
        out.push('\n');
    }
    out
}

/// Restricts rows to the filter's time window and cardinality band; with
/// `dedup`, only the first occurrence of each distinct node set survives.
/// The label map is preserved unchanged.
pub fn apply_filter(t: &TimedRelationTable, f: &FilterSpec) -> TimedRelationTable {
    let mut seen = std::collections::BTreeSet::new();
    let rows = t
        .rows
        .iter()
        .filter(|(time, relation)| {
            f.time_min.is_none_or(|m| *time >= m)
                && f.time_max.is_none_or(|m| *time <= m)
                && f.card_min.is_none_or(|m| relation.cardinality() >= m)
                && f.card_max.is_none_or(|m| relation.cardinality() <= m)
        })
        .filter(|(_, relation)| !f.dedup || seen.insert(relation.members().to_vec()))
        .cloned()
        .collect();
    TimedRelationTable {
        labels: Arc::clone(&t.labels),
        rows,
        duplicate_members_collapsed: t.duplicate_members_collapsed,
    }
}

/// Groups rows by exact timestamp value, ascending. The slices partition
/// the input rows and share its label map.
pub fn yearly_slices(t: &TimedRelationTable) -> Vec<(i64, TimedRelationTable)> {
    let mut by_year: BTreeMap<i64, Vec<(i64, Relation)>> = BTreeMap::new();
    for row in &t.rows {
        by_year.entry(row.0).or_default().push(row.clone());
    }
    by_year
        .into_iter()
        .map(|(year, rows)| {
            (
                year,
                TimedRelationTable {
                    labels: Arc::clone(&t.labels),
                    rows,
                    duplicate_members_collapsed: t.duplicate_members_collapsed,
                },
            )
        })
        .collect()
}
