//! graph6 and sparse6 text encodings, one graph per line.
//!
//! graph6 carries simple graphs only. sparse6 (lines starting with `:`) also
//! carries loops and parallel edges, so multigraphs produced by contraction
//! can be written out and read back.

use crate::error::{Error, Result};
use crate::graph::Graph;

const BIAS: u8 = 63;

fn encode_order(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    } else {
        out.extend([b'~', b'~']);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    }
}

/// Decodes the order prefix; returns `(order, bytes consumed)`.
fn decode_order(bytes: &[u8], base: usize) -> Result<(usize, usize)> {
    let sextet = |i: usize| -> Result<usize> {
        match bytes.get(i) {
            None => Err(Error::parse(base + i, "truncated order field")),
            Some(&c) if (63..=126).contains(&c) => Ok((c - BIAS) as usize),
            Some(&c) => Err(Error::parse(base + i, format!("byte {c:#04x} outside the printable range 63..=126"))),
        }
    };
    match bytes.first() {
        None => Err(Error::parse(base, "empty input")),
        Some(&b'~') => {
            if bytes.get(1) == Some(&b'~') {
                let mut n = 0;
                for i in 2..8 {
                    n = (n << 6) | sextet(i)?;
                }
                Ok((n, 8))
            } else {
                let mut n = 0;
                for i in 1..4 {
                    n = (n << 6) | sextet(i)?;
                }
                Ok((n, 4))
            }
        }
        Some(_) => Ok((sextet(0)?, 1)),
    }
}

fn strip_header<'a>(line: &'a str, header: &str) -> (&'a str, usize) {
    let trimmed = line.trim_end_matches(['\n', '\r']);
    match trimmed.strip_prefix(header) {
        Some(rest) => (rest, header.len()),
        None => (trimmed, 0),
    }
}

pub fn parse_graph6(line: &str) -> Result<Graph> {
    let (body, base) = strip_header(line, ">>graph6<<");
    let bytes = body.as_bytes();
    if bytes.first() == Some(&b':') {
        return Err(Error::parse(base, "sparse6 line passed to the graph6 parser"));
    }
    let (n, used) = decode_order(bytes, base)?;
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    let data = &bytes[used..];
    if data.len() < nbytes {
        return Err(Error::parse(base + bytes.len(), format!("truncated bit vector: need {nbytes} data bytes, found {}", data.len())));
    }
    if data.len() > nbytes {
        return Err(Error::parse(base + used + nbytes, "trailing bytes after the bit vector"));
    }
    for (i, &c) in data.iter().enumerate() {
        if !(63..=126).contains(&c) {
            return Err(Error::parse(base + used + i, format!("byte {c:#04x} outside the printable range 63..=126")));
        }
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - BIAS;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges)
}

pub fn write_graph6(g: &Graph) -> Result<String> {
    if !g.is_simple() {
        return Err(Error::UnsupportedFormat("graph6 cannot encode loops or parallel edges; use sparse6".into()));
    }
    let n = g.order();
    let mut out = Vec::new();
    encode_order(n, &mut out);
    let adj = g.adjacency_matrix();
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | (adj[i][j] as u8 & 1);
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    Ok(String::from_utf8(out).expect("graph6 output is ASCII"))
}

/// Bits needed for a vertex index in sparse6 (at least one).
fn sparse6_width(n: usize) -> usize {
    let mut k = 1;
    while (1usize << k) < n {
        k += 1;
    }
    k
}

pub fn parse_sparse6(line: &str) -> Result<Graph> {
    let (body, base) = strip_header(line, ">>sparse6<<");
    let bytes = body.as_bytes();
    if bytes.first() != Some(&b':') {
        return Err(Error::parse(base, "sparse6 lines start with ':'"));
    }
    let (n, used) = decode_order(&bytes[1..], base + 1)?;
    let start = 1 + used;
    let mut bits = Vec::with_capacity((bytes.len() - start) * 6);
    for (i, &c) in bytes[start..].iter().enumerate() {
        if !(63..=126).contains(&c) {
            return Err(Error::parse(base + start + i, format!("byte {c:#04x} outside the printable range 63..=126")));
        }
        let v = c - BIAS;
        bits.extend((0..6).rev().map(|s| (v >> s) & 1));
    }
    let k = sparse6_width(n);
    let mut edges = Vec::new();
    let mut v = 0usize;
    let mut pos = 0;
    while pos + 1 + k <= bits.len() {
        let b = bits[pos];
        let x = bits[pos + 1..pos + 1 + k].iter().fold(0usize, |acc, &bit| (acc << 1) | bit as usize);
        pos += 1 + k;
        if b == 1 {
            v += 1;
        }
        if x >= n || v >= n {
            break;
        }
        if x > v {
            v = x;
        } else {
            edges.push((x, v));
        }
    }
    Graph::from_edges(n, edges)
}

pub fn write_sparse6(g: &Graph) -> String {
    let n = g.order();
    let k = sparse6_width(n);
    let enc = |x: usize, bits: &mut Vec<u8>| bits.extend((0..k).rev().map(|s| ((x >> s) & 1) as u8));
    let mut edges: Vec<(usize, usize)> = g.edges().iter().map(|&(a, b)| (b, a)).collect();
    edges.sort_unstable();
    let mut bits = Vec::new();
    let mut cur = 0usize;
    for (v, u) in edges {
        if v == cur {
            bits.push(0);
            enc(u, &mut bits);
        } else if v == cur + 1 {
            cur += 1;
            bits.push(1);
            enc(u, &mut bits);
        } else {
            cur = v;
            bits.push(1);
            enc(v, &mut bits);
            bits.push(0);
            enc(u, &mut bits);
        }
    }
    let pad = (6 - bits.len() % 6) % 6;
    if k < 6 && n == (1 << k) && pad >= k && cur + 1 < n {
        // padding with ones would otherwise decode as an edge to vertex n-1
        bits.push(0);
    }
    let pad = (6 - bits.len() % 6) % 6;
    bits.extend(std::iter::repeat_n(1u8, pad));
    let mut out = vec![b':'];
    encode_order(n, &mut out);
    for chunk in bits.chunks(6) {
        let v = chunk.iter().fold(0u8, |acc, &b| (acc << 1) | b);
        out.push(v + BIAS);
    }
    String::from_utf8(out).expect("sparse6 output is ASCII")
}

/// Parses either encoding, dispatching on the leading `:`.
pub fn parse_line(line: &str) -> Result<Graph> {
    let t = line.trim();
    if t.starts_with(':') || t.starts_with(">>sparse6<<") {
        parse_sparse6(t)
    } else {
        parse_graph6(t)
    }
}

/// graph6 for simple graphs, sparse6 otherwise.
pub fn write_line(g: &Graph) -> String {
    if g.is_simple() {
        write_graph6(g).expect("simple graph")
    } else {
        write_sparse6(g)
    }
}

/// Parses every non-empty line, reporting the 1-based line number on failure.
pub fn parse_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            parse_line(l).map_err(|e| match e {
                Error::Parse { offset, message } => {
                    Error::Parse { offset, message: format!("line {}: {message}", i + 1) }
                }
                other => other,
            })
        })
        .collect()
}
