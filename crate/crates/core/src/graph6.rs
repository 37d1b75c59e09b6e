//! Bit-exact graph6 reader/writer and the labeled-graph enumerator.
//!
//! graph6 packs the upper-triangle adjacency bits (colex pair order,
//! most significant bit first) into printable bytes offset by 63. Vertex
//! counts up to 62 use a single size byte `n + 63`; counts up to 258047 use
//! a `~` prefix followed by three big-endian sextet bytes.

use thiserror::Error;

use crate::graph::{Graph, GraphError};

pub const HEADER: &str = ">>graph6<<";
pub const MAX_N: usize = 258_047;

/// Full enumeration is capped where 2^(n(n-1)/2) stays tractable.
pub const MAX_ENUMERATION_N: usize = 7;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 line")]
    Empty,
    #[error("byte 0x{byte:02x} at position {pos} outside the printable range 63..=126")]
    ByteOutOfRange { byte: u8, pos: usize },
    #[error("line has {got} data bytes but a graph on {n} vertices needs {need}")]
    WrongByteCount { n: usize, need: usize, got: usize },
    #[error("vertex count {0} exceeds the graph6 limit {MAX_N}")]
    TooLarge(usize),
    #[error("vertex count must be at least 1")]
    ZeroVertices,
    #[error("enumeration supports 1..={MAX_ENUMERATION_N} vertices, got {0}")]
    EnumerationRange(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn body_len(n: usize) -> usize {
    (n * (n - 1) / 2).div_ceil(6)
}

/// Parses one graph6 line. A leading `>>graph6<<` header and one trailing
/// newline are accepted and skipped.
pub fn parse_graph6(line: &str) -> Result<Graph, Graph6Error> {
    let mut bytes = line.as_bytes();
    if let Some(rest) = bytes.strip_suffix(b"\n") {
        bytes = rest;
    }
    if let Some(rest) = bytes.strip_suffix(b"\r") {
        bytes = rest;
    }
    if let Some(rest) = bytes.strip_prefix(HEADER.as_bytes()) {
        bytes = rest;
    }
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (pos, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::ByteOutOfRange { byte: b, pos });
        }
    }

    let (n, body) = if bytes[0] == 126 {
        if bytes.len() < 4 || bytes[1] == 126 {
            // the 8-byte size form starts at n = 258048, outside our range
            let declared = bytes.len();
            return Err(if bytes.len() >= 2 && bytes[1] == 126 {
                Graph6Error::TooLarge(MAX_N + 1)
            } else {
                Graph6Error::WrongByteCount { n: 0, need: 4, got: declared }
            });
        }
        let n = ((bytes[1] - 63) as usize) << 12
            | ((bytes[2] - 63) as usize) << 6
            | (bytes[3] - 63) as usize;
        (n, &bytes[4..])
    } else {
        ((bytes[0] - 63) as usize, &bytes[1..])
    };

    if n == 0 {
        return Err(Graph6Error::ZeroVertices);
    }
    if n > MAX_N {
        return Err(Graph6Error::TooLarge(n));
    }
    let need = body_len(n);
    if body.len() != need {
        return Err(Graph6Error::WrongByteCount { n, need, got: body.len() });
    }

    let bits = body
        .iter()
        .flat_map(|&b| (0..6).rev().map(move |k| (b - 63) >> k & 1 == 1))
        .take(n * (n - 1) / 2);
    Ok(Graph::from_pair_bits(n, bits)?)
}

/// Writes the canonical (minimal-length, headerless) graph6 encoding.
pub fn write_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.n();
    if n > MAX_N {
        return Err(Graph6Error::TooLarge(n));
    }
    let mut out = Vec::with_capacity(4 + body_len(n));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.push((n >> 12) as u8 + 63);
        out.push((n >> 6 & 63) as u8 + 63);
        out.push((n & 63) as u8 + 63);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for bit in g.pair_bits() {
        acc = acc << 1 | bit as u8;
        filled += 1;
        if filled == 6 {
            out.push(acc + 63);
            acc = 0;
            filled = 0;
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Deterministic cursor over all labeled graphs on `n` vertices, in
/// increasing edge-mask order. Separate cursors over disjoint mask ranges
/// partition the enumeration for parallel scans.
#[derive(Debug, Clone)]
pub struct LabeledGraphs {
    n: usize,
    next: u64,
    end: u64,
}

impl LabeledGraphs {
    pub fn new(n: usize) -> Result<Self, Graph6Error> {
        let end = Self::count(n)?;
        Ok(LabeledGraphs { n, next: 0, end })
    }

    /// Cursor over the edge-mask interval `[start, end)`.
    pub fn range(n: usize, start: u64, end: u64) -> Result<Self, Graph6Error> {
        let total = Self::count(n)?;
        assert!(start <= end && end <= total, "mask range out of bounds");
        Ok(LabeledGraphs { n, next: start, end })
    }

    /// `2^(n(n-1)/2)`, the number of labeled graphs on `n` vertices.
    pub fn count(n: usize) -> Result<u64, Graph6Error> {
        if n == 0 || n > MAX_ENUMERATION_N {
            return Err(Graph6Error::EnumerationRange(n));
        }
        Ok(1u64 << (n * (n - 1) / 2))
    }
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.next >= self.end {
            return None;
        }
        let g = Graph::from_edge_mask(self.n, self.next).expect("mask within range");
        self.next += 1;
        Some(g)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for LabeledGraphs {}
