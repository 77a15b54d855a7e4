//! graph6 and sparse6 encodings plus a plain edge-list text format.
//!
//! Both encodings follow the nauty `formats.txt` description. Readers accept
//! the optional `>>graph6<<` / `>>sparse6<<` header; writers never emit it.

use thiserror::Error;

use crate::graph::{GraphError, SubcubicGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("empty input")]
    Empty,
    #[error("byte {byte:#04x} at position {pos} is outside the printable range 63..=126")]
    InvalidByte { pos: usize, byte: u8 },
    #[error("truncated input: expected {expected} data bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("trailing data after the adjacency bits")]
    Trailing,
    #[error("incremental sparse6 (`;` prefix) is not supported")]
    Incremental,
    #[error("malformed edge list: {0}")]
    EdgeList(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

const GRAPH6_HEADER: &str = ">>graph6<<";
const SPARSE6_HEADER: &str = ">>sparse6<<";

fn check_bytes(data: &[u8], offset: usize) -> Result<(), FormatError> {
    for (i, &b) in data.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(FormatError::InvalidByte { pos: offset + i, byte: b });
        }
    }
    Ok(())
}

/// Encodes the vertex count `N(n)`.
fn encode_size(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

/// Decodes `N(n)`, returning the count and the number of bytes consumed.
fn decode_size(data: &[u8]) -> Result<(usize, usize), FormatError> {
    let take = |k: usize, from: usize| -> Result<usize, FormatError> {
        if data.len() < from + k {
            return Err(FormatError::Truncated { expected: from + k, found: data.len() });
        }
        Ok(data[from..from + k]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize))
    };
    match data {
        [] => Err(FormatError::Empty),
        [126, 126, ..] => Ok((take(6, 2)?, 8)),
        [126, ..] => Ok((take(3, 1)?, 4)),
        [b, ..] => Ok(((b - 63) as usize, 1)),
    }
}

/// Packs a bit vector into 6-bit groups, padding with `pad`.
fn pack_bits(bits: &[bool], out: &mut Vec<u8>) {
    for chunk in bits.chunks(6) {
        let mut x = 0u8;
        for i in 0..6 {
            x = (x << 1) | u8::from(chunk.get(i).copied().unwrap_or(false));
        }
        out.push(x + 63);
    }
}

fn unpack_bits(data: &[u8]) -> impl Iterator<Item = bool> + '_ {
    data.iter()
        .flat_map(|&b| (0..6).rev().map(move |i| ((b - 63) >> i) & 1 == 1))
}

/// graph6 encoding (no header, no newline).
pub fn to_graph6(g: &SubcubicGraph) -> String {
    let n = g.vertex_count();
    let mut out = Vec::new();
    encode_size(n, &mut out);
    let mut bits = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(i, j));
        }
    }
    pack_bits(&bits, &mut out);
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Parses one graph6 line (optional header, surrounding whitespace ignored).
pub fn from_graph6(line: &str) -> Result<SubcubicGraph, FormatError> {
    let s = line.trim();
    let s = s.strip_prefix(GRAPH6_HEADER).unwrap_or(s);
    let data = s.as_bytes();
    if data.is_empty() {
        return Err(FormatError::Empty);
    }
    check_bytes(data, 0)?;
    let (n, used) = decode_size(data)?;
    if n > crate::graph::MAX_VERTICES {
        return Err(GraphError::TooManyVertices { n }.into());
    }
    let body = &data[used..];
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if body.len() < expected {
        return Err(FormatError::Truncated { expected, found: body.len() });
    }
    if body.len() > expected {
        return Err(FormatError::Trailing);
    }
    let mut edges = Vec::new();
    let mut bits = unpack_bits(body);
    for j in 1..n {
        for i in 0..j {
            if bits.next() == Some(true) {
                edges.push((i, j));
            }
        }
    }
    Ok(SubcubicGraph::build(n, &edges)?)
}

/// Number of bits needed to write `n - 1` in binary, as nauty computes it.
fn sparse6_width(n: usize) -> usize {
    let mut k = 0;
    let mut i = n.saturating_sub(1);
    while i > 0 {
        i >>= 1;
        k += 1;
    }
    k
}

/// sparse6 encoding, leading `:` included.
pub fn to_sparse6(g: &SubcubicGraph) -> String {
    let n = g.vertex_count();
    let k = sparse6_width(n);
    let mut out = vec![b':'];
    encode_size(n, &mut out);

    // Edges ordered by larger endpoint, then smaller.
    let mut edges: Vec<(usize, usize)> = g.edges().into_iter().map(|(u, v)| (v, u)).collect();
    edges.sort_unstable();

    let mut bits: Vec<bool> = Vec::new();
    let push = |b: bool, x: usize, bits: &mut Vec<bool>| {
        bits.push(b);
        for i in (0..k).rev() {
            bits.push((x >> i) & 1 == 1);
        }
    };
    let mut cur = 0usize;
    for (v, u) in edges {
        if v == cur {
            push(false, u, &mut bits);
        } else if v == cur + 1 {
            cur = v;
            push(true, u, &mut bits);
        } else {
            cur = v;
            push(true, v, &mut bits);
            push(false, u, &mut bits);
        }
    }
    let pad = (6 - bits.len() % 6) % 6;
    if k < 6 && n == (1 << k) && pad > k && cur + 2 == n {
        // A full pad of ones would read back as a spurious edge here.
        bits.push(false);
        bits.extend(std::iter::repeat_n(true, pad - 1));
    } else {
        bits.extend(std::iter::repeat_n(true, pad));
    }
    let mut packed = Vec::new();
    pack_bits(&bits, &mut packed);
    out.extend(packed);
    String::from_utf8(out).expect("sparse6 output is ASCII")
}

/// Parses one sparse6 line (optional header, leading `:`).
pub fn from_sparse6(line: &str) -> Result<SubcubicGraph, FormatError> {
    let s = line.trim();
    let s = s.strip_prefix(SPARSE6_HEADER).unwrap_or(s);
    if s.starts_with(';') {
        return Err(FormatError::Incremental);
    }
    let s = s.strip_prefix(':').ok_or(FormatError::Empty)?;
    let data = s.as_bytes();
    check_bytes(data, 1)?;
    let (n, used) = decode_size(data)?;
    if n > crate::graph::MAX_VERTICES {
        return Err(GraphError::TooManyVertices { n }.into());
    }
    let k = sparse6_width(n);
    let bits: Vec<bool> = unpack_bits(&data[used..]).collect();
    let mut edges = Vec::new();
    let mut v = 0usize;
    let mut pos = 0;
    while pos + 1 + k <= bits.len() {
        let b = bits[pos];
        let x = bits[pos + 1..pos + 1 + k]
            .iter()
            .fold(0usize, |acc, &bit| (acc << 1) | usize::from(bit));
        pos += 1 + k;
        if b {
            v += 1;
        }
        if v >= n {
            break;
        }
        if x > v {
            v = x;
        } else {
            edges.push((x, v));
        }
    }
    Ok(SubcubicGraph::build(n, &edges)?)
}

/// Parses a graph6 or sparse6 line, chosen by the leading character.
pub fn parse_line(line: &str) -> Result<SubcubicGraph, FormatError> {
    let t = line.trim();
    if t.starts_with(':') || t.starts_with(';') || t.starts_with(SPARSE6_HEADER) {
        from_sparse6(t)
    } else {
        from_graph6(t)
    }
}

/// Parses every non-blank line of a graph6/sparse6 corpus.
pub fn parse_corpus(text: &str) -> Result<Vec<SubcubicGraph>, FormatError> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(parse_line)
        .collect()
}

/// Writes `n m` followed by one `u v` line per edge.
pub fn to_edge_list(g: &SubcubicGraph) -> String {
    let mut s = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

/// Reads the `n m` / `u v` edge-list format. `#` starts a comment.
pub fn from_edge_list(text: &str) -> Result<SubcubicGraph, FormatError> {
    let mut rows = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .map(|l| {
            let nums: Result<Vec<usize>, _> = l.split_whitespace().map(str::parse).collect();
            match nums {
                Ok(v) if v.len() == 2 => Ok((v[0], v[1])),
                _ => Err(FormatError::EdgeList(format!("expected two integers, got `{l}`"))),
            }
        });
    let (n, m) = rows.next().ok_or(FormatError::Empty)??;
    let edges: Vec<(usize, usize)> = rows.collect::<Result<_, _>>()?;
    if edges.len() != m {
        return Err(FormatError::EdgeList(format!(
            "header declares {m} edges, found {}",
            edges.len()
        )));
    }
    Ok(SubcubicGraph::build(n, &edges)?)
}
