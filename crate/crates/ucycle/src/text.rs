//! Plain-text rows: the default output format and the `verify` input format.
//!
//! A row is written without separators when every entry is a single digit
//! and with single spaces otherwise. Lines starting with `#` are comments.

use std::fmt::Write as _;

use ucycle_core::verify::CoverageReport;
use ucycle_core::{Error, Result};

pub fn format_row(row: &[u32], compact: bool) -> String {
    let mut out = String::new();
    for (i, x) in row.iter().enumerate() {
        if i > 0 && !compact {
            out.push(' ');
        }
        write!(out, "{x}").expect("writing to a String");
    }
    out
}

/// One line per row, compact when every entry of every row is below 10.
pub fn format_rows(rows: &[Vec<u32>]) -> String {
    let compact = rows.iter().flatten().all(|&x| x < 10);
    rows.iter().map(|r| format_row(r, compact) + "\n").collect()
}

/// Rows joined with `/`, as used for vertices and windows.
pub fn format_window(rows: &[Vec<u32>]) -> String {
    let compact = rows.iter().flatten().all(|&x| x < 10);
    rows.iter()
        .map(|r| format_row(r, compact))
        .collect::<Vec<_>>()
        .join("/")
}

/// Parses one row. Entries are separated by whitespace or commas; a token
/// without separators is read one digit per entry.
pub fn parse_row(line: &str) -> Result<Vec<u32>> {
    let line = line.trim();
    let separated = line.contains(|c: char| c.is_whitespace() || c == ',');
    let bad = |tok: &str| Error::InvalidInput(format!("not a nonnegative integer: {tok:?}"));
    if separated {
        line.split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<u32>().map_err(|_| bad(t)))
            .collect()
    } else {
        line.chars()
            .map(|c| c.to_digit(10).ok_or_else(|| bad(&c.to_string())))
            .collect()
    }
}

/// Parses every non-empty, non-comment line as a row.
pub fn parse_rows(input: &str) -> Result<Vec<Vec<u32>>> {
    input
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(parse_row)
        .collect()
}

/// Columns of `rows`, which must all have the same length.
pub fn transpose(rows: &[Vec<u32>]) -> Result<Vec<Vec<u32>>> {
    let width = rows.first().map_or(0, Vec::len);
    if rows.iter().any(|r| r.len() != width) {
        return Err(Error::InvalidInput("rows have different lengths".into()));
    }
    Ok((0..width).map(|j| rows.iter().map(|r| r[j]).collect()).collect())
}

/// The report of a verification run, one `key=value` summary line followed
/// by the listed duplicates, missing objects and unexpected windows.
pub fn format_report(r: &CoverageReport) -> String {
    let mut out = format!(
        "expected={} windows={} covered={} duplicates={} missing={} unexpected={}\n",
        r.total_expected, r.windows, r.covered, r.duplicate_count, r.missing_count, r.unexpected_count
    );
    for d in &r.duplicates {
        let pos: Vec<String> = d.positions.iter().map(|p| p.to_string()).collect();
        writeln!(out, "duplicate {} at {}", format_window(&d.object), pos.join(",")).expect("String");
    }
    for m in &r.missing {
        writeln!(out, "missing {}", format_window(m)).expect("String");
    }
    for u in &r.unexpected {
        writeln!(out, "unexpected {} at {}", format_window(&u.window), u.position).expect("String");
    }
    let verdict = if r.verdict() { "pass" } else { "fail" };
    writeln!(out, "verdict={verdict}").expect("String");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compact_and_spaced() {
        assert_eq!(format_rows(&[vec![5, 6, 4, 1, 3, 2]]), "564132\n");
        assert_eq!(format_rows(&[vec![10, 2], vec![1, 3]]), "10 2\n1 3\n");
        assert_eq!(format_window(&[vec![1, 2], vec![2, 1]]), "12/21");
    }

    #[test]
    fn parsing() {
        assert_eq!(parse_row("564132").unwrap(), [5, 6, 4, 1, 3, 2]);
        assert_eq!(parse_row("35 36 34").unwrap(), [35, 36, 34]);
        assert_eq!(parse_row("1,2, 3").unwrap(), [1, 2, 3]);
        assert!(parse_row("12a").is_err());
        let rows = parse_rows("# header\n\n43 12\n4132\n").unwrap();
        assert_eq!(rows, [vec![43, 12], vec![4, 1, 3, 2]]);
    }

    #[test]
    fn roundtrip() {
        for rows in [vec![vec![7, 8, 6, 1, 3, 2, 4, 5]], vec![vec![35, 2, 11], vec![1, 20, 3]]] {
            assert_eq!(parse_rows(&format_rows(&rows)).unwrap(), rows);
        }
    }

    #[test]
    fn transposing() {
        assert_eq!(transpose(&[vec![1, 2], vec![3, 4]]).unwrap(), [[1, 3], [2, 4]]);
        assert!(transpose(&[vec![1], vec![1, 2]]).is_err());
    }
}
