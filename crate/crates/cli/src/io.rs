//! Input loading for the file-or-stdin subcommands. A file holds either a
//! single whitespace-separated edge list or one graph6 string per line.

use std::io::Read;

use drd_core::graph::parse_edge_list;
use drd_core::{parse_graph6, Graph};

/// Line-numbered parse results; an edge list yields a single entry.
pub type ParsedGraphs = Vec<(usize, Result<Graph, String>)>;

pub fn load_text(path: &str) -> std::io::Result<String> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path)
    }
}

/// graph6 bytes are all printable ≥ '?' with no whitespace, so a line with
/// internal whitespace or a leading digit has to be an edge list.
pub fn looks_like_edge_list(text: &str) -> bool {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .any(|l| l.contains(char::is_whitespace) || l.starts_with(|c: char| c.is_ascii_digit()))
}

pub fn parse_graphs(text: &str) -> ParsedGraphs {
    if looks_like_edge_list(text) {
        return vec![(1, parse_edge_list(text).map_err(|e| e.to_string()))];
    }
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| (i + 1, parse_graph6(l.trim()).map_err(|e| e.to_string())))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn detection_prefers_edge_lists_on_whitespace_or_digits() {
        assert!(looks_like_edge_list("0 1\n1 2\n"));
        assert!(looks_like_edge_list("n 4\n0 1\n"));
        assert!(!looks_like_edge_list("Bw\nBg\n"));
    }

    #[test]
    fn graph6_lines_keep_their_line_numbers() {
        let parsed = parse_graphs("Bw\n\nBg\n");
        assert_eq!(parsed.len(), 2);
        assert_eq!(parsed[0].0, 1);
        assert_eq!(parsed[1].0, 3);
        assert!(parsed.iter().all(|(_, r)| r.is_ok()));
    }

    #[test]
    fn edge_list_is_a_single_graph() {
        let parsed = parse_graphs("0 1\n1 2\n2 0\n");
        assert_eq!(parsed.len(), 1);
        assert_eq!(parsed[0].1.as_ref().unwrap().edge_count(), 3);
    }
}
