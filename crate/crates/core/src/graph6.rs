//! graph6 text encoding (single-byte size header, n <= 62).
//!
//! Bit layout follows the published format: the upper triangle of the
//! adjacency matrix in column-major pair order (0,1), (0,2), (1,2),
//! (0,3), ..., packed six bits per printable byte (byte = bits + 63),
//! zero-padded to a multiple of six.

use crate::graph::Graph;

pub const MAX_GRAPH6_VERTICES: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("malformed size header byte {0:#x}")]
    MalformedHeader(u8),
    #[error("graphs on more than {MAX_GRAPH6_VERTICES} vertices are not supported (n = {0})")]
    UnsupportedSize(usize),
    #[error("truncated edge bit field: need {expected} data bytes, got {actual}")]
    Truncated { expected: usize, actual: usize },
    #[error("invalid graph6 byte {byte:#x} at position {pos}")]
    InvalidChar { pos: usize, byte: u8 },
    #[error("trailing data after {expected} data bytes")]
    TrailingData { expected: usize },
}

fn data_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.trim_end_matches(['\r', '\n']).as_bytes();
    let (&header, rest) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    if header == 126 {
        // Multi-byte size headers (n > 62) are out of scope.
        return Err(Graph6Error::UnsupportedSize(63));
    }
    if !(63..=125).contains(&header) {
        return Err(Graph6Error::MalformedHeader(header));
    }
    let n = (header - 63) as usize;
    let expected = data_len(n);
    if rest.len() < expected {
        return Err(Graph6Error::Truncated {
            expected,
            actual: rest.len(),
        });
    }
    if rest.len() > expected {
        return Err(Graph6Error::TrailingData { expected });
    }
    for (i, &b) in rest.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::InvalidChar {
                pos: i + 1,
                byte: b,
            });
        }
    }

    let mut g = Graph::new(n);
    let mut bit_index = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = rest[bit_index / 6] - 63;
            let bit = (byte >> (5 - bit_index % 6)) & 1;
            if bit == 1 {
                g.add_edge(i, j)
                    .expect("triangle order never repeats a pair");
            }
            bit_index += 1;
        }
    }
    Ok(g)
}

pub fn emit_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.vertex_count();
    if n > MAX_GRAPH6_VERTICES {
        return Err(Graph6Error::UnsupportedSize(n));
    }
    let mut out = vec![63 + n as u8];
    out.extend(std::iter::repeat_n(63u8, data_len(n)));
    let mut bit_index = 0usize;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(i, j) {
                out[1 + bit_index / 6] += 1 << (5 - bit_index % 6);
            }
            bit_index += 1;
        }
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}
