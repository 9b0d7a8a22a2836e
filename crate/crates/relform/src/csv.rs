//! Tiny deterministic CSV helpers: header + rows, comma-separated, reals
//! to 6 decimals, LF line endings.

/// Canonical rendering for real-valued cells.
pub fn real(x: f64) -> String {
    format!("{x:.6}")
}

/// Assembles a CSV document from a header and rows of already-rendered
/// cells.
pub fn document(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut out = String::new();
    out.push_str(&header.join(","));
    out.push('\n');
    for row in rows {
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}
