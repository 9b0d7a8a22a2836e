use alloc::vec::Vec;

use crate::{Error, Hypergraph, NodeId, Relation, Result, SimplicialComplex};

/// Binary relations-by-nodes incidence matrix. Row r has a 1 in column v
/// iff node v participates in relation r. Rows are stored as sorted
/// member lists; every row is nonempty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConcurrenceMatrix {
    cols: u32,
    rows: Vec<Relation>,
}

impl ConcurrenceMatrix {
    /// Builds a matrix from explicit rows. Errors if no row is given,
    /// since every stored relation must be nonempty and a matrix with no
    /// rows describes nothing.
    pub fn from_rows(cols: u32, rows: Vec<Relation>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::EmptyStructure);
        }
        for row in &rows {
            row.check_bounds(cols)?;
        }
        Ok(ConcurrenceMatrix { cols, rows })
    }

    /// Rows are the maximal simplices in canonical order.
    pub fn from_simplicial(sc: &SimplicialComplex) -> Result<Self> {
        Self::from_rows(sc.node_count(), sc.maximal().to_vec())
    }

    /// Rows are all hyperedges in index order, duplicates included.
    pub fn from_hypergraph(hg: &Hypergraph) -> Result<Self> {
        Self::from_rows(hg.node_count(), hg.hyperedges().to_vec())
    }

    pub fn rows(&self) -> &[Relation] {
        &self.rows
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn col_count(&self) -> u32 {
        self.cols
    }

    pub fn entry(&self, row: usize, col: NodeId) -> bool {
        self.rows.get(row).map(|r| r.contains(col)).unwrap_or(false)
    }

    /// Rows of the transpose: for each column with support, the set of
    /// row indices containing it. Zero-support columns contribute nothing.
    pub fn transpose_rows(&self) -> Vec<Relation> {
        let mut cols: Vec<Vec<NodeId>> = alloc::vec![Vec::new(); self.cols as usize];
        for (r, row) in self.rows.iter().enumerate() {
            for &v in row.members() {
                cols[v.index()].push(NodeId(r as u32));
            }
        }
        cols.into_iter()
            .filter(|c| !c.is_empty())
            .map(Relation::from_sorted)
            .collect()
    }
}
