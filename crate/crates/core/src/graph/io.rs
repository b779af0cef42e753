//! graph6 encoding and a plain edge-list text format.

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

/// Encodes `g` in graph6: a size prefix, then the upper triangle column by
/// column (`x(0,1) x(0,2) x(1,2) x(0,3) ...`) packed six bits per byte.
pub fn graph6_encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.push(((n >> 12) & 63) as u8 + 63);
        out.push(((n >> 6) & 63) as u8 + 63);
        out.push((n & 63) as u8 + 63);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Decodes one graph6 string. An optional `>>graph6<<` header and trailing
/// line break are accepted; anything else that is not the exact encoding of
/// some graph on at most 64 vertices is rejected, including non-minimal size
/// prefixes and nonzero padding bits.
pub fn graph6_decode(text: &str) -> Result<Graph> {
    let text = text.strip_suffix('\n').unwrap_or(text);
    let text = text.strip_suffix('\r').unwrap_or(text);
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty input".into()));
    }
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(Error::Graph6(format!("byte {} at offset {pos} is outside 63..=126", bytes[pos])));
    }
    let (n, body) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else {
        if bytes.len() < 4 {
            return Err(Error::Graph6("truncated size prefix".into()));
        }
        if bytes[1] == 126 {
            return Err(Error::Graph6("8-byte size prefix is not supported (n > 64)".into()));
        }
        let n = bytes[1..4].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
        if n <= 62 {
            return Err(Error::Graph6(format!("non-minimal size prefix for n = {n}")));
        }
        (n, &bytes[4..])
    };
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
    }
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() < expected {
        return Err(Error::Graph6(format!("truncated bit field: {} of {expected} bytes", body.len())));
    }
    if body.len() > expected {
        return Err(Error::Graph6(format!("{} trailing bytes", body.len() - expected)));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let pad = 6 - bits % 6;
        if (body[expected - 1] - 63) & ((1 << pad) - 1) != 0 {
            return Err(Error::Graph6("nonzero padding bits".into()));
        }
    }
    Ok(g)
}

/// Parses `n` on the first line, then one `u v` pair per line. Blank lines
/// and `#` comments are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (line_no, first) = lines.next().ok_or_else(|| Error::Parse("empty edge list".into()))?;
    let n: usize = first
        .parse()
        .map_err(|_| Error::Parse(format!("line {line_no}: expected vertex count, got {first:?}")))?;
    let mut edges = Vec::new();
    for (line_no, line) in lines {
        let mut it = line.split_whitespace();
        let mut endpoint = || -> Result<usize> {
            let tok = it.next().ok_or_else(|| Error::Parse(format!("line {line_no}: expected two endpoints")))?;
            tok.parse().map_err(|_| Error::Parse(format!("line {line_no}: bad endpoint {tok:?}")))
        };
        let (u, v) = (endpoint()?, endpoint()?);
        if it.next().is_some() {
            return Err(Error::Parse(format!("line {line_no}: trailing tokens")));
        }
        edges.push((u, v));
    }
    Graph::from_edges(n, &edges)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut s = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}
